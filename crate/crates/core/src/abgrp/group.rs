use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::matrix::IntegerMatrix;
use super::smith::{LinearSolver, RowSmith};
use crate::error::{Error, Result};

/// An element of a group, written on that group's generators.
pub type Element = Vec<BigInt>;

/// Finitely generated abelian group `Z^n / colspan(relations)`.
///
/// Equality is equality of presentations. The Smith decomposition of the
/// relation matrix is computed on first use and shared between clones.
#[derive(Clone)]
pub struct FgAbGroup {
    relations: Arc<IntegerMatrix>,
    smith: Arc<OnceLock<RowSmith>>,
    solver: Arc<OnceLock<LinearSolver>>,
}

impl PartialEq for FgAbGroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.relations, &other.relations) || self.relations == other.relations
    }
}

impl Eq for FgAbGroup {}

impl FgAbGroup {
    /// Group on `relations.rows()` generators modulo the columns of `relations`.
    pub fn from_relations(relations: IntegerMatrix) -> Self {
        FgAbGroup {
            relations: Arc::new(relations),
            smith: Arc::new(OnceLock::new()),
            solver: Arc::new(OnceLock::new()),
        }
    }

    pub fn new(generators: usize, relations: IntegerMatrix) -> Result<Self> {
        if relations.rows() != generators {
            return Err(Error::Dimension(format!(
                "relation matrix has {} rows for {} generators",
                relations.rows(),
                generators
            )));
        }
        Ok(Self::from_relations(relations))
    }

    pub fn free(rank: usize) -> Self {
        Self::from_relations(IntegerMatrix::zeros(rank, 0))
    }

    pub fn trivial() -> Self {
        Self::free(0)
    }

    pub fn cyclic(order: impl Into<BigInt>) -> Self {
        Self::from_relations(IntegerMatrix::new(1, 1, vec![order.into()]))
    }

    /// `Z/d₁ ⊕ … ⊕ Z/d_k`, with `0` meaning a free summand.
    pub fn from_invariants(factors: &[BigInt]) -> Self {
        let torsion: Vec<usize> = (0..factors.len())
            .filter(|&i| !factors[i].is_zero())
            .collect();
        let mut rel = IntegerMatrix::zeros(factors.len(), torsion.len());
        for (c, &i) in torsion.iter().enumerate() {
            rel.set(i, c, factors[i].clone());
        }
        Self::from_relations(rel)
    }

    pub fn generator_count(&self) -> usize {
        self.relations.rows()
    }

    pub fn relations(&self) -> &IntegerMatrix {
        &self.relations
    }

    pub fn smith(&self) -> &RowSmith {
        self.smith.get_or_init(|| RowSmith::new(&self.relations))
    }

    pub fn zero_element(&self) -> Element {
        vec![BigInt::zero(); self.generator_count()]
    }

    pub fn generator(&self, i: usize) -> Element {
        let mut e = self.zero_element();
        e[i] = BigInt::one();
        e
    }

    /// Whether `x` is zero in the group, i.e. lies in the relation span.
    pub fn is_zero_element(&self, x: &[BigInt]) -> bool {
        if x.iter().all(Zero::is_zero) {
            return true;
        }
        self.smith().contains(x)
    }

    pub fn elements_equal(&self, a: &[BigInt], b: &[BigInt]) -> bool {
        let diff: Vec<BigInt> = a.iter().zip(b).map(|(x, y)| x - y).collect();
        self.is_zero_element(&diff)
    }

    /// Coefficients `y` with `relations · y = x`, if `x` is zero in the group.
    pub fn express_relation(&self, x: &[BigInt]) -> Option<Vec<BigInt>> {
        self.solver
            .get_or_init(|| LinearSolver::new(&self.relations))
            .solve(x)
    }

    /// Invariant factors `d₁ | d₂ | …` (all `>= 2`) followed by a `0` per free summand.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let s = self.smith();
        let mut torsion = Vec::new();
        let mut free = 0;
        for m in s.row_moduli() {
            if m.is_zero() {
                free += 1;
            } else if !m.is_one() {
                torsion.push(m);
            }
        }
        torsion.extend(std::iter::repeat_n(BigInt::zero(), free));
        torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.generator_count() == 0 || self.invariant_factors().is_empty()
    }

    pub fn free_rank(&self) -> usize {
        self.invariant_factors()
            .iter()
            .filter(|d| d.is_zero())
            .count()
    }

    /// Order of the group, `None` if infinite.
    pub fn order(&self) -> Option<BigInt> {
        self.invariant_factors()
            .iter()
            .try_fold(BigInt::one(), |acc, d| (!d.is_zero()).then(|| acc * d))
    }

    /// Whether the relations are already `diag(d₁,…,d_k)` on the first `k`
    /// generators with every other generator free.
    pub fn is_diagonal(&self) -> bool {
        let r = &*self.relations;
        if r.cols() > r.rows() {
            return false;
        }
        for i in 0..r.rows() {
            for j in 0..r.cols() {
                if i != j && !r.get(i, j).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Reduces coordinates modulo the diagonal relations when the
    /// presentation is diagonal; returns the input unchanged otherwise.
    pub fn reduce(&self, x: &[BigInt]) -> Element {
        if !self.is_diagonal() {
            return x.to_vec();
        }
        reduce_diagonal(&self.relations, x)
    }

    /// Every element of a finite group, written on the original generators.
    /// `None` if the group is infinite or has more than `limit` elements.
    pub fn elements(&self, limit: usize) -> Option<Vec<Element>> {
        let order = self.order()?;
        if order > BigInt::from(limit) {
            return None;
        }
        let (minimal, _, from) = super::minimal_presentation(self);
        let moduli: Vec<BigInt> = minimal.invariant_factors();
        let mut out = Vec::with_capacity(order.to_usize().unwrap_or(0));
        let mut digits = vec![BigInt::zero(); moduli.len()];
        loop {
            out.push(from.apply(&digits));
            let mut k = 0;
            loop {
                if k == moduli.len() {
                    return Some(out);
                }
                digits[k] += 1;
                if digits[k] < moduli[k] {
                    break;
                }
                digits[k] = BigInt::zero();
                k += 1;
            }
        }
    }

    pub fn direct_sum(&self, other: &FgAbGroup) -> FgAbGroup {
        FgAbGroup::from_relations(self.relations.block_diag(&other.relations))
    }

    pub fn direct_sum_all(groups: &[FgAbGroup]) -> FgAbGroup {
        let blocks: Vec<IntegerMatrix> = groups.iter().map(|g| (*g.relations).clone()).collect();
        FgAbGroup::from_relations(IntegerMatrix::block_diag_all(&blocks))
    }

    /// Human-readable isomorphism type such as `Z/2 + Z^2`.
    pub fn describe(&self) -> String {
        describe_invariants(&self.invariant_factors())
    }
}

pub(crate) fn reduce_diagonal(relations: &IntegerMatrix, x: &[BigInt]) -> Element {
    x.iter()
        .enumerate()
        .map(|(i, v)| {
            if i < relations.cols() {
                let d = relations.get(i, i);
                if d.is_zero() {
                    v.clone()
                } else {
                    v.mod_floor(&d.abs())
                }
            } else {
                v.clone()
            }
        })
        .collect()
}

/// Formats invariant factors as `Z/2 + Z/6 + Z^2`, or `0` for the trivial group.
pub fn describe_invariants(factors: &[BigInt]) -> String {
    let mut parts: Vec<String> = factors
        .iter()
        .filter(|d| !d.is_zero())
        .map(|d| format!("Z/{d}"))
        .collect();
    let free = factors.iter().filter(|d| d.is_zero()).count();
    match free {
        0 => {}
        1 => parts.push("Z".into()),
        n => parts.push(format!("Z^{n}")),
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

impl fmt::Debug for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FgAbGroup(gens={}, relations={})",
            self.generator_count(),
            self.relations
        )
    }
}

impl fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.generator_count();
        if self.relations.cols() == 0 {
            if n == 0 {
                f.write_str("0")
            } else {
                write!(f, "Z^{n}")
            }
        } else {
            write!(f, "coker {}", self.relations)
        }
    }
}

/// Homomorphism of finitely generated abelian groups, given on generators.
///
/// Column `j` of `matrix` is the image of source generator `j`.
#[derive(Clone, PartialEq, Eq)]
pub struct AbHom {
    source: FgAbGroup,
    target: FgAbGroup,
    matrix: IntegerMatrix,
}

impl AbHom {
    /// Validated constructor: every source relation must map into the target relations.
    pub fn new(source: FgAbGroup, target: FgAbGroup, matrix: IntegerMatrix) -> Result<Self> {
        if matrix.rows() != target.generator_count() || matrix.cols() != source.generator_count() {
            return Err(Error::Dimension(format!(
                "{}x{} matrix for a map from {} to {} generators",
                matrix.rows(),
                matrix.cols(),
                source.generator_count(),
                target.generator_count()
            )));
        }
        let images = &matrix * source.relations();
        for j in 0..images.cols() {
            if !target.is_zero_element(&images.column(j)) {
                return Err(Error::IllDefined { column: j });
            }
        }
        Ok(AbHom {
            source,
            target,
            matrix,
        })
    }

    /// Skips the well-definedness check; for maps that are well defined by construction.
    pub(crate) fn new_unchecked(
        source: FgAbGroup,
        target: FgAbGroup,
        matrix: IntegerMatrix,
    ) -> Self {
        debug_assert_eq!(matrix.rows(), target.generator_count());
        debug_assert_eq!(matrix.cols(), source.generator_count());
        AbHom {
            source,
            target,
            matrix,
        }
    }

    pub fn zero(source: FgAbGroup, target: FgAbGroup) -> Self {
        let m = IntegerMatrix::zeros(target.generator_count(), source.generator_count());
        Self::new_unchecked(source, target, m)
    }

    pub fn identity(group: FgAbGroup) -> Self {
        let m = IntegerMatrix::identity(group.generator_count());
        Self::new_unchecked(group.clone(), group, m)
    }

    /// Multiplication by `c` on `group`.
    pub fn scalar(group: FgAbGroup, c: impl Into<BigInt>) -> Self {
        let m = IntegerMatrix::scalar(group.generator_count(), &c.into());
        Self::new_unchecked(group.clone(), group, m)
    }

    pub fn source(&self) -> &FgAbGroup {
        &self.source
    }

    pub fn target(&self) -> &FgAbGroup {
        &self.target
    }

    pub fn matrix(&self) -> &IntegerMatrix {
        &self.matrix
    }

    pub fn apply(&self, x: &[BigInt]) -> Element {
        self.matrix.mul_vec(x)
    }

    /// `self ∘ f`
    pub fn compose(&self, f: &AbHom) -> Result<AbHom> {
        if f.target != self.source {
            return Err(Error::MismatchedPresentation);
        }
        Ok(Self::new_unchecked(
            f.source.clone(),
            self.target.clone(),
            &self.matrix * &f.matrix,
        ))
    }

    fn same_shape(&self, other: &AbHom) -> Result<()> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::MismatchedPresentation);
        }
        Ok(())
    }

    pub fn add(&self, other: &AbHom) -> Result<AbHom> {
        self.same_shape(other)?;
        Ok(Self::new_unchecked(
            self.source.clone(),
            self.target.clone(),
            &self.matrix + &other.matrix,
        ))
    }

    pub fn sub(&self, other: &AbHom) -> Result<AbHom> {
        self.same_shape(other)?;
        Ok(Self::new_unchecked(
            self.source.clone(),
            self.target.clone(),
            &self.matrix - &other.matrix,
        ))
    }

    pub fn neg(&self) -> AbHom {
        Self::new_unchecked(self.source.clone(), self.target.clone(), -&self.matrix)
    }

    pub fn scale(&self, c: impl Into<BigInt>) -> AbHom {
        Self::new_unchecked(
            self.source.clone(),
            self.target.clone(),
            self.matrix.scale(&c.into()),
        )
    }

    /// Equality as maps: same presentations and every generator image agrees in the target.
    pub fn equals(&self, other: &AbHom) -> bool {
        if self.source != other.source || self.target != other.target {
            return false;
        }
        let diff = &self.matrix - &other.matrix;
        (0..diff.cols()).all(|j| self.target.is_zero_element(&diff.column(j)))
    }

    pub fn is_zero(&self) -> bool {
        (0..self.matrix.cols()).all(|j| self.target.is_zero_element(&self.matrix.column(j)))
    }

    /// Same map with columns reduced modulo a diagonal target presentation.
    pub fn reduced(&self) -> AbHom {
        if !self.target.is_diagonal() {
            return self.clone();
        }
        let cols: Vec<Element> = (0..self.matrix.cols())
            .map(|j| reduce_diagonal(self.target.relations(), &self.matrix.column(j)))
            .collect();
        Self::new_unchecked(
            self.source.clone(),
            self.target.clone(),
            IntegerMatrix::from_columns(self.target.generator_count(), &cols),
        )
    }

    /// Same matrix viewed between other presentations with the same generator counts.
    pub fn with_groups(&self, source: FgAbGroup, target: FgAbGroup) -> Result<AbHom> {
        AbHom::new(source, target, self.matrix.clone())
    }

    /// The same map between minimal presentations of source and target.
    fn on_minimal(&self) -> AbHom {
        let (s, _, from) = super::minimal_presentation(&self.source);
        let (t, to, _) = super::minimal_presentation(&self.target);
        let m = &(to.matrix() * &self.matrix) * from.matrix();
        Self::new_unchecked(s, t, m).reduced()
    }

    pub fn is_injective(&self) -> bool {
        super::kernel(&self.on_minimal()).0.is_trivial()
    }

    pub fn is_surjective(&self) -> bool {
        super::cokernel(&self.on_minimal()).0.is_trivial()
    }

    pub fn is_isomorphism(&self) -> bool {
        let f = self.on_minimal();
        super::cokernel(&f).0.is_trivial() && super::kernel(&f).0.is_trivial()
    }
}

impl fmt::Debug for AbHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "AbHom({} -> {}, {})",
            self.source, self.target, self.matrix
        )
    }
}

impl fmt::Display for AbHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.matrix.rows() == 0 || self.matrix.cols() == 0 {
            f.write_str("0")
        } else {
            write!(f, "{}", self.matrix)
        }
    }
}
