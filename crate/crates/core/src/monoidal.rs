//! Box product, internal hom, and the adjunction `Hom(M ⊠ N, P) ≅ Hom(M, [N, P])`.
//!
//! Generator layout of `M ⊠ N` at the fixed level: the `M_fix ⊗ N_fix` block
//! first, then `M_e ⊗ N_e`; inside each block the pair `(i, j)` sits at
//! `i · (second factor's generator count) + j`. The underlying level is
//! `M_e ⊗ N_e` with the same pair ordering.
//!
//! Conjugation on underlying-level maps `h: M_e → N_e` is
//! `h ↦ conj_N ∘ h ∘ conj_M^{p-1}`.

use std::sync::OnceLock;

use crate::abgrp::{
    kernel as ab_kernel, tensor, AbHom, Element, FgAbGroup, HomGroup, IntegerMatrix, LinearSolver,
};
use crate::error::{Error, Result};
use crate::mackey::{CpMackeyFunctor, MackeyHom};

fn ident(n: usize) -> IntegerMatrix {
    IntegerMatrix::identity(n)
}

/// `M ⊠ N`.
pub fn box_product(m: &CpMackeyFunctor, n: &CpMackeyFunctor) -> Result<CpMackeyFunctor> {
    m.same_prime(n)?;
    let p = m.prime();
    let (mf, mu) = (
        m.fixed().generator_count(),
        m.underlying().generator_count(),
    );
    let (nf, nu) = (
        n.fixed().generator_count(),
        n.underlying().generator_count(),
    );
    let ff = mf * nf;
    let uu = mu * nu;

    let ff_group = tensor(m.fixed(), n.fixed());
    let uu_group = tensor(m.underlying(), n.underlying());

    // (tr x ⊗ b, 0) − (0, x ⊗ res b)
    let fam1 = m
        .tr()
        .matrix()
        .kronecker(&ident(nf))
        .vconcat(&-&ident(mu).kronecker(n.res().matrix()));
    // (a ⊗ tr y, 0) − (0, res a ⊗ y)
    let fam2 = ident(mf)
        .kronecker(n.tr().matrix())
        .vconcat(&-&m.res().matrix().kronecker(&ident(nu)));
    // (0, x ⊗ y − conj x ⊗ conj y)
    let conj = m.conj().matrix().kronecker(n.conj().matrix());
    let fam3 = IntegerMatrix::zeros(ff, uu).vconcat(&(&ident(uu) - &conj));

    let relations = IntegerMatrix::hconcat_all(
        ff + uu,
        &[
            ff_group.relations().block_diag(uu_group.relations()),
            fam1,
            fam2,
            fam3,
        ],
    )
    .without_zero_columns();
    let fixed = FgAbGroup::from_relations(relations);

    let mut norm = IntegerMatrix::zeros(uu, uu);
    let mut power = ident(uu);
    for _ in 0..p {
        norm = &norm + &power;
        power = &power * &conj;
    }
    let res = m.res().matrix().kronecker(n.res().matrix()).hconcat(&norm);
    let tr = IntegerMatrix::zeros(ff, uu).vconcat(&ident(uu));

    CpMackeyFunctor::from_matrices(p, fixed, uu_group, res, tr, conj)
}

fn box_hom_between(
    src: &CpMackeyFunctor,
    tgt: &CpMackeyFunctor,
    fixed: IntegerMatrix,
    underlying: IntegerMatrix,
) -> Result<MackeyHom> {
    MackeyHom::from_matrices(src.clone(), tgt.clone(), fixed, underlying)
}

/// `f ⊠ id_N : src(f) ⊠ N → tgt(f) ⊠ N`.
pub fn box_hom(f: &MackeyHom, n: &CpMackeyFunctor) -> Result<MackeyHom> {
    let src = box_product(f.source(), n)?;
    let tgt = box_product(f.target(), n)?;
    box_hom_with(f, n, &src, &tgt)
}

/// As [`box_hom`] with both box products already computed.
pub fn box_hom_with(
    f: &MackeyHom,
    n: &CpMackeyFunctor,
    src: &CpMackeyFunctor,
    tgt: &CpMackeyFunctor,
) -> Result<MackeyHom> {
    f.source().same_prime(n)?;
    let (nf, nu) = (
        n.fixed().generator_count(),
        n.underlying().generator_count(),
    );
    let fu = f.underlying_map().matrix().kronecker(&ident(nu));
    let fixed = f.fixed_map().matrix().kronecker(&ident(nf)).block_diag(&fu);
    box_hom_between(src, tgt, fixed, fu)
}

/// `id_M ⊠ g : M ⊠ src(g) → M ⊠ tgt(g)`.
pub fn box_hom_right(m: &CpMackeyFunctor, g: &MackeyHom) -> Result<MackeyHom> {
    m.same_prime(g.source())?;
    let src = box_product(m, g.source())?;
    let tgt = box_product(m, g.target())?;
    let (mf, mu) = (
        m.fixed().generator_count(),
        m.underlying().generator_count(),
    );
    let gu = ident(mu).kronecker(g.underlying_map().matrix());
    let fixed = ident(mf).kronecker(g.fixed_map().matrix()).block_diag(&gu);
    box_hom_between(&src, &tgt, fixed, gu)
}

/// `A ⊠ M → M`: `[1 ⊗ m, 0] ↦ m`, `[t ⊗ m, 0] ↦ tr res m`, `[0, 1 ⊗ x] ↦ tr x`.
pub fn left_unitor(m: &CpMackeyFunctor) -> Result<MackeyHom> {
    let a = crate::mackey::burnside(m.prime())?;
    let ab = box_product(&a, m)?;
    let tr_res = m.tr().compose(m.res())?;
    let fixed = IntegerMatrix::hconcat_all(
        m.fixed().generator_count(),
        &[
            ident(m.fixed().generator_count()),
            tr_res.matrix().clone(),
            m.tr().matrix().clone(),
        ],
    );
    let underlying = ident(m.underlying().generator_count());
    MackeyHom::from_matrices(ab, m.clone(), fixed, underlying)
}

/// `M ⊠ A → M`, the mirror image of [`left_unitor`].
pub fn right_unitor(m: &CpMackeyFunctor) -> Result<MackeyHom> {
    let a = crate::mackey::burnside(m.prime())?;
    let mb = box_product(m, &a)?;
    let mf = m.fixed().generator_count();
    let tr_res = m.tr().compose(m.res())?;
    let mut cols = Vec::with_capacity(2 * mf);
    for b in 0..mf {
        cols.push(m.fixed().generator(b));
        cols.push(tr_res.matrix().column(b));
    }
    let fixed = IntegerMatrix::from_columns(mf, &cols).hconcat(m.tr().matrix());
    let underlying = ident(m.underlying().generator_count());
    MackeyHom::from_matrices(mb, m.clone(), fixed, underlying)
}

/// The symmetry `M ⊠ N → N ⊠ M`, `x ⊗ y ↦ y ⊗ x` on both blocks.
pub fn swap(m: &CpMackeyFunctor, n: &CpMackeyFunctor) -> Result<MackeyHom> {
    let mn = box_product(m, n)?;
    let nm = box_product(n, m)?;
    let (mf, mu) = (
        m.fixed().generator_count(),
        m.underlying().generator_count(),
    );
    let (nf, nu) = (
        n.fixed().generator_count(),
        n.underlying().generator_count(),
    );
    let mut fixed_perm = vec![0; mf * nf + mu * nu];
    let mut under_perm = vec![0; mu * nu];
    for a in 0..mf {
        for b in 0..nf {
            fixed_perm[a * nf + b] = b * mf + a;
        }
    }
    for x in 0..mu {
        for y in 0..nu {
            under_perm[x * nu + y] = y * mu + x;
            fixed_perm[mf * nf + x * nu + y] = nf * mf + y * mu + x;
        }
    }
    MackeyHom::from_matrices(
        mn,
        nm,
        IntegerMatrix::permutation(&fixed_perm),
        IntegerMatrix::permutation(&under_perm),
    )
}

/// `Hom_Mack(M, N)` as a subgroup of `Hom(M_fix, N_fix) ⊕ Hom(M_e, N_e)`,
/// cut out by the three commuting squares, with translations to and from
/// Mackey homomorphisms.
#[derive(Clone, Debug)]
pub struct MackeyHomGroup {
    source: CpMackeyFunctor,
    target: CpMackeyFunctor,
    fixed_homs: HomGroup,
    underlying_homs: HomGroup,
    sum: FgAbGroup,
    group: FgAbGroup,
    inclusion: AbHom,
    solver: OnceLock<LinearSolver>,
}

impl MackeyHomGroup {
    pub fn new(m: &CpMackeyFunctor, n: &CpMackeyFunctor) -> Result<Self> {
        m.same_prime(n)?;
        let fixed_homs = HomGroup::new(m.fixed(), n.fixed());
        let underlying_homs = HomGroup::new(m.underlying(), n.underlying());
        let conj_sq = &underlying_homs;
        let res_sq = HomGroup::new(m.fixed(), n.underlying());
        let tr_sq = HomGroup::new(m.underlying(), n.fixed());
        let sum = fixed_homs.group().direct_sum(underlying_homs.group());

        let (cm, cn) = (m.conj().matrix(), n.conj().matrix());
        let (rm, rn) = (m.res().matrix(), n.res().matrix());
        let (tm, tn) = (m.tr().matrix(), n.tr().matrix());
        let zf = IntegerMatrix::zeros(n.fixed().generator_count(), m.fixed().generator_count());
        let zu = IntegerMatrix::zeros(
            n.underlying().generator_count(),
            m.underlying().generator_count(),
        );
        let mut cols = Vec::with_capacity(sum.generator_count());
        let conditions = |phi_f: &IntegerMatrix, phi_u: &IntegerMatrix| -> Element {
            let mut e = conj_sq.matrix_to_element(&(&(phi_u * cm) - &(cn * phi_u)));
            e.extend(res_sq.matrix_to_element(&(&(phi_u * rm) - &(rn * phi_f))));
            e.extend(tr_sq.matrix_to_element(&(&(phi_f * tm) - &(tn * phi_u))));
            e
        };
        for k in 0..fixed_homs.group().generator_count() {
            let phi_f = fixed_homs.element_to_hom(&fixed_homs.group().generator(k));
            cols.push(conditions(phi_f.matrix(), &zu));
        }
        for k in 0..underlying_homs.group().generator_count() {
            let phi_u = underlying_homs.element_to_hom(&underlying_homs.group().generator(k));
            cols.push(conditions(&zf, phi_u.matrix()));
        }
        let cond_target = FgAbGroup::direct_sum_all(&[
            conj_sq.group().clone(),
            res_sq.group().clone(),
            tr_sq.group().clone(),
        ]);
        let cond = AbHom::new_unchecked(
            sum.clone(),
            cond_target.clone(),
            IntegerMatrix::from_columns(cond_target.generator_count(), &cols),
        );
        let (group, inclusion) = ab_kernel(&cond);
        Ok(MackeyHomGroup {
            source: m.clone(),
            target: n.clone(),
            fixed_homs,
            underlying_homs,
            sum,
            group,
            inclusion,
            solver: OnceLock::new(),
        })
    }

    pub fn group(&self) -> &FgAbGroup {
        &self.group
    }

    pub fn source(&self) -> &CpMackeyFunctor {
        &self.source
    }

    pub fn target(&self) -> &CpMackeyFunctor {
        &self.target
    }

    pub(crate) fn underlying_homs(&self) -> &HomGroup {
        &self.underlying_homs
    }

    /// Inclusion into `Hom(M_fix, N_fix) ⊕ Hom(M_e, N_e)`.
    pub fn inclusion(&self) -> &AbHom {
        &self.inclusion
    }

    /// Projection of the inclusion onto the underlying-hom coordinate.
    fn underlying_part(&self) -> IntegerMatrix {
        let nf = self.fixed_homs.group().generator_count();
        self.inclusion
            .matrix()
            .row_range(nf, self.sum.generator_count())
    }

    fn split(&self, s: &[num_bigint::BigInt]) -> (AbHom, AbHom) {
        let nf = self.fixed_homs.group().generator_count();
        (
            self.fixed_homs.element_to_hom(&s[..nf]),
            self.underlying_homs.element_to_hom(&s[nf..]),
        )
    }

    pub fn element_to_hom(&self, k: &[num_bigint::BigInt]) -> MackeyHom {
        let s = self.inclusion.apply(k);
        let (ff, fu) = self.split(&s);
        MackeyHom::new_unchecked(self.source.clone(), self.target.clone(), ff, fu)
    }

    /// Element naming the pair of level maps, which must commute with the structure.
    pub(crate) fn pair_to_element(&self, ff: &IntegerMatrix, fu: &IntegerMatrix) -> Element {
        let mut s = self.fixed_homs.matrix_to_element(ff);
        s.extend(self.underlying_homs.matrix_to_element(fu));
        let solver = self.solver.get_or_init(|| {
            LinearSolver::new(&self.inclusion.matrix().hconcat(self.sum.relations()))
        });
        let x = solver
            .solve(&s)
            .expect("commuting pair lies in the Mackey hom group");
        x[..self.group.generator_count()].to_vec()
    }

    pub fn hom_to_element(&self, f: &MackeyHom) -> Element {
        assert!(
            f.source() == &self.source && f.target() == &self.target,
            "homomorphism between other functors"
        );
        self.pair_to_element(f.fixed_map().matrix(), f.underlying_map().matrix())
    }
}

/// `[M, N]` together with the description of its fixed level as `Hom_Mack(M, N)`.
#[derive(Clone, Debug)]
pub struct InternalHom {
    pub functor: CpMackeyFunctor,
    pub homs: MackeyHomGroup,
}

impl InternalHom {
    pub fn new(m: &CpMackeyFunctor, n: &CpMackeyFunctor) -> Result<Self> {
        let homs = MackeyHomGroup::new(m, n)?;
        let p = m.prime();
        let hu = homs.underlying_homs().clone();
        let under = hu.group().clone();
        let fixed = homs.group().clone();

        let res = AbHom::new(fixed.clone(), under.clone(), homs.underlying_part())?;

        let (cm, cn) = (m.conj().matrix(), n.conj().matrix());
        let cm_inv = cm.pow(p - 1);
        let act = |h: &IntegerMatrix| &(cn * h) * &cm_inv;
        let mut tr_cols = Vec::with_capacity(under.generator_count());
        let mut conj_cols = Vec::with_capacity(under.generator_count());
        for j in 0..under.generator_count() {
            let h = hu.element_to_hom(&under.generator(j)).matrix().clone();
            conj_cols.push(hu.matrix_to_element(&act(&h)));
            let mut norm = IntegerMatrix::zeros(h.rows(), h.cols());
            let mut power = h.clone();
            for _ in 0..p {
                norm = &norm + &power;
                power = act(&power);
            }
            let phi_f = &(n.tr().matrix() * &h) * m.res().matrix();
            tr_cols.push(homs.pair_to_element(&phi_f, &norm));
        }
        let tr = AbHom::new(
            under.clone(),
            fixed.clone(),
            IntegerMatrix::from_columns(fixed.generator_count(), &tr_cols),
        )?;
        let conj = AbHom::new(
            under.clone(),
            under.clone(),
            IntegerMatrix::from_columns(under.generator_count(), &conj_cols),
        )?;
        let functor = CpMackeyFunctor::new(p, res, tr, conj)?;
        Ok(InternalHom { functor, homs })
    }
}

/// `[M, N]`.
pub fn internal_hom(m: &CpMackeyFunctor, n: &CpMackeyFunctor) -> Result<CpMackeyFunctor> {
    Ok(InternalHom::new(m, n)?.functor)
}

/// `[f, N] : [tgt(f), N] → [src(f), N]`, precomposition with `f`.
pub fn internal_hom_map(f: &MackeyHom, n: &CpMackeyFunctor) -> Result<MackeyHom> {
    let from = InternalHom::new(f.target(), n)?;
    let to = InternalHom::new(f.source(), n)?;
    internal_hom_map_with(f, &from, &to)
}

/// As [`internal_hom_map`] with `[tgt(f), N]` and `[src(f), N]` already computed.
pub fn internal_hom_map_with(
    f: &MackeyHom,
    from: &InternalHom,
    to: &InternalHom,
) -> Result<MackeyHom> {
    if from.homs.source() != f.target() || to.homs.source() != f.source() {
        return Err(Error::MismatchedPresentation);
    }
    let (ff, fu) = (f.fixed_map().matrix(), f.underlying_map().matrix());
    let fixed_src = from.functor.fixed();
    let mut fixed_cols = Vec::with_capacity(fixed_src.generator_count());
    for k in 0..fixed_src.generator_count() {
        let g = from.homs.element_to_hom(&fixed_src.generator(k));
        fixed_cols.push(to.homs.pair_to_element(
            &(g.fixed_map().matrix() * ff),
            &(g.underlying_map().matrix() * fu),
        ));
    }
    let hu_from = from.homs.underlying_homs();
    let hu_to = to.homs.underlying_homs();
    let under_src = from.functor.underlying();
    let under_cols: Vec<Element> = (0..under_src.generator_count())
        .map(|j| {
            let h = hu_from.element_to_hom(&under_src.generator(j));
            hu_to.matrix_to_element(&(h.matrix() * fu))
        })
        .collect();
    MackeyHom::from_matrices(
        from.functor.clone(),
        to.functor.clone(),
        IntegerMatrix::from_columns(to.functor.fixed().generator_count(), &fixed_cols),
        IntegerMatrix::from_columns(to.functor.underlying().generator_count(), &under_cols),
    )
}

/// Evaluation at the unit `[A, M] → M`: a map `φ` goes to `φ_fix(1)` and an
/// underlying map `h` to `h(1)`.
pub fn internal_hom_unit_eval(m: &CpMackeyFunctor) -> Result<MackeyHom> {
    let a = crate::mackey::burnside(m.prime())?;
    let ih = InternalHom::new(&a, m)?;
    let fixed = ih.functor.fixed();
    let fixed_cols: Vec<Element> = (0..fixed.generator_count())
        .map(|k| {
            ih.homs
                .element_to_hom(&fixed.generator(k))
                .fixed_map()
                .matrix()
                .column(0)
        })
        .collect();
    let hu = ih.homs.underlying_homs();
    let under = ih.functor.underlying();
    let under_cols: Vec<Element> = (0..under.generator_count())
        .map(|j| hu.element_to_hom(&under.generator(j)).matrix().column(0))
        .collect();
    MackeyHom::from_matrices(
        ih.functor.clone(),
        m.clone(),
        IntegerMatrix::from_columns(m.fixed().generator_count(), &fixed_cols),
        IntegerMatrix::from_columns(m.underlying().generator_count(), &under_cols),
    )
}

/// The tensor-hom adjunction for a fixed triple `(M, N, P)`.
#[derive(Clone, Debug)]
pub struct Adjunction {
    m: CpMackeyFunctor,
    n: CpMackeyFunctor,
    p: CpMackeyFunctor,
    boxed: CpMackeyFunctor,
    inner: InternalHom,
    /// `Hom(M ⊠ N, P)`
    pub left: MackeyHomGroup,
    /// `Hom(M, [N, P])`
    pub right: MackeyHomGroup,
}

impl Adjunction {
    pub fn new(m: &CpMackeyFunctor, n: &CpMackeyFunctor, p: &CpMackeyFunctor) -> Result<Self> {
        m.same_prime(n)?;
        n.same_prime(p)?;
        let boxed = box_product(m, n)?;
        let inner = InternalHom::new(n, p)?;
        let left = MackeyHomGroup::new(&boxed, p)?;
        let right = MackeyHomGroup::new(m, &inner.functor)?;
        Ok(Adjunction {
            m: m.clone(),
            n: n.clone(),
            p: p.clone(),
            boxed,
            inner,
            left,
            right,
        })
    }

    /// `F : M ⊠ N → P` to `G : M → [N, P]`.
    pub fn forward(&self, f: &MackeyHom) -> Result<MackeyHom> {
        let (mf, mu) = (
            self.m.fixed().generator_count(),
            self.m.underlying().generator_count(),
        );
        let (nf, nu) = (
            self.n.fixed().generator_count(),
            self.n.underlying().generator_count(),
        );
        let pu = self.p.underlying().generator_count();
        let f_f = f.fixed_map().matrix();
        let f_u = f.underlying_map().matrix();
        let hu = self.inner.homs.underlying_homs();
        let under_cols: Vec<Element> = (0..mu)
            .map(|x| hu.matrix_to_element(&f_u.col_range(x * nu, (x + 1) * nu)))
            .collect();
        let res_m = self.m.res().matrix();
        let fixed_cols: Vec<Element> = (0..mf)
            .map(|a| {
                let phi_f = f_f.col_range(a * nf, (a + 1) * nf);
                let phi_u = f_u * &res_m.col_range(a, a + 1).kronecker(&ident(nu));
                debug_assert_eq!(phi_u.rows(), pu);
                self.inner.homs.pair_to_element(&phi_f, &phi_u)
            })
            .collect();
        let target = &self.inner.functor;
        MackeyHom::from_matrices(
            self.m.clone(),
            target.clone(),
            IntegerMatrix::from_columns(target.fixed().generator_count(), &fixed_cols),
            IntegerMatrix::from_columns(target.underlying().generator_count(), &under_cols),
        )
    }

    /// `G : M → [N, P]` to `F : M ⊠ N → P`.
    pub fn backward(&self, g: &MackeyHom) -> Result<MackeyHom> {
        let (mf, mu) = (
            self.m.fixed().generator_count(),
            self.m.underlying().generator_count(),
        );
        let pf = self.p.fixed().generator_count();
        let pu = self.p.underlying().generator_count();
        let hu = self.inner.homs.underlying_homs();
        let g_u = g.underlying_map().matrix();
        let g_f = g.fixed_map().matrix();
        let under_blocks: Vec<IntegerMatrix> = (0..mu)
            .map(|x| hu.element_to_hom(&g_u.column(x)).matrix().clone())
            .collect();
        let f_u = IntegerMatrix::hconcat_all(pu, &under_blocks);
        let mut fixed_blocks: Vec<IntegerMatrix> = (0..mf)
            .map(|a| {
                self.inner
                    .homs
                    .element_to_hom(&g_f.column(a))
                    .fixed_map()
                    .matrix()
                    .clone()
            })
            .collect();
        fixed_blocks.push(self.p.tr().matrix() * &f_u);
        let f_f = IntegerMatrix::hconcat_all(pf, &fixed_blocks);
        MackeyHom::from_matrices(self.boxed.clone(), self.p.clone(), f_f, f_u)
    }

    pub fn forward_element(&self, e: &[num_bigint::BigInt]) -> Result<Element> {
        let f = self.left.element_to_hom(e);
        Ok(self.right.hom_to_element(&self.forward(&f)?))
    }

    pub fn backward_element(&self, e: &[num_bigint::BigInt]) -> Result<Element> {
        let g = self.right.element_to_hom(e);
        Ok(self.left.hom_to_element(&self.backward(&g)?))
    }
}
