//! Exact integer linear algebra and finitely generated abelian groups.

mod group;
mod homgroup;
mod lll;
mod matrix;
mod smith;

pub use group::{describe_invariants, AbHom, Element, FgAbGroup};
pub use homgroup::HomGroup;
pub use lll::lll_reduce;
pub use matrix::IntegerMatrix;
pub use smith::{
    cokernel_invariants, integer_nullspace, smith_normal_form, solve_column, LinearSolver,
    RowSmith, SmithDecomposition,
};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Kernel `K` of `f` with its inclusion `K → f.source`.
///
/// Generators are a basis of `{x : f·x ∈ colspan(target relations)}`
/// projected to the source coordinates; relations are every combination
/// landing in the source relations.
pub fn kernel(f: &AbHom) -> (FgAbGroup, AbHom) {
    let src = f.source();
    let n = src.generator_count();
    let block = f.matrix().hconcat(f.target().relations());
    let null = integer_nullspace(&block);
    let gens = null.row_range(0, n).without_zero_columns();
    let s = gens.cols();
    let rel_null = integer_nullspace(&gens.hconcat(src.relations()));
    let relations = rel_null.row_range(0, s).without_zero_columns();
    let k = FgAbGroup::from_relations(relations);
    let incl = AbHom::new_unchecked(k.clone(), src.clone(), gens);
    (k, incl)
}

/// Cokernel with its projection, which is the identity on generators.
pub fn cokernel(f: &AbHom) -> (FgAbGroup, AbHom) {
    let tgt = f.target();
    let relations = tgt.relations().hconcat(f.matrix()).without_zero_columns();
    let c = FgAbGroup::from_relations(relations);
    let proj = AbHom::new_unchecked(
        tgt.clone(),
        c.clone(),
        IntegerMatrix::identity(tgt.generator_count()),
    );
    (c, proj)
}

/// Image of `f` as the quotient `source / ker f`, with the factorization
/// `source → image → target`.
pub fn image(f: &AbHom) -> (FgAbGroup, AbHom, AbHom) {
    let (_, incl) = kernel(f);
    let (img, proj) = cokernel(&incl);
    let into = AbHom::new_unchecked(img.clone(), f.target().clone(), f.matrix().clone());
    (img, proj, into)
}

pub fn direct_sum(g: &FgAbGroup, h: &FgAbGroup) -> FgAbGroup {
    g.direct_sum(h)
}

/// Injections and projections of `g ⊕ h`, in the order `(i₁, i₂, π₁, π₂)`.
pub fn direct_sum_maps(g: &FgAbGroup, h: &FgAbGroup) -> (AbHom, AbHom, AbHom, AbHom) {
    let s = g.direct_sum(h);
    let (a, b) = (g.generator_count(), h.generator_count());
    let i1 = IntegerMatrix::identity(a).vconcat(&IntegerMatrix::zeros(b, a));
    let i2 = IntegerMatrix::zeros(a, b).vconcat(&IntegerMatrix::identity(b));
    let p1 = IntegerMatrix::identity(a).hconcat(&IntegerMatrix::zeros(a, b));
    let p2 = IntegerMatrix::zeros(b, a).hconcat(&IntegerMatrix::identity(b));
    (
        AbHom::new_unchecked(g.clone(), s.clone(), i1),
        AbHom::new_unchecked(h.clone(), s.clone(), i2),
        AbHom::new_unchecked(s.clone(), g.clone(), p1),
        AbHom::new_unchecked(s, h.clone(), p2),
    )
}

/// `g ⊗ h`; generator `(i, j)` has index `i · h.generator_count() + j`.
pub fn tensor(g: &FgAbGroup, h: &FgAbGroup) -> FgAbGroup {
    let ig = IntegerMatrix::identity(g.generator_count());
    let ih = IntegerMatrix::identity(h.generator_count());
    let rel = g
        .relations()
        .kronecker(&ih)
        .hconcat(&ig.kronecker(h.relations()));
    FgAbGroup::from_relations(rel)
}

/// `f₁ ⊗ f₂` between the tensor presentations of [`tensor`].
pub fn tensor_hom(f1: &AbHom, f2: &AbHom) -> AbHom {
    AbHom::new_unchecked(
        tensor(f1.source(), f2.source()),
        tensor(f1.target(), f2.target()),
        f1.matrix().kronecker(f2.matrix()),
    )
}

/// Presentation of `Hom(g, h)` with translations to and from maps.
pub fn hom_group(g: &FgAbGroup, h: &FgAbGroup) -> HomGroup {
    HomGroup::new(g, h)
}

/// `(g′, to, from)`: `g′` is presented by `diag(d₁,…,d_k)` with every
/// `dᵢ >= 2` plus free generators, and `to`/`from` are inverse isomorphisms.
pub fn minimal_presentation(g: &FgAbGroup) -> (FgAbGroup, AbHom, AbHom) {
    let s = g.smith();
    let moduli = s.row_moduli();
    let keep: Vec<usize> = (0..moduli.len()).filter(|&i| !moduli[i].is_one()).collect();
    let factors: Vec<BigInt> = keep.iter().map(|&i| moduli[i].clone()).collect();
    let minimal = FgAbGroup::from_invariants(&factors);
    let to = AbHom::new_unchecked(g.clone(), minimal.clone(), s.u.select_rows(&keep));
    let from = AbHom::new_unchecked(minimal.clone(), g.clone(), s.u_inv.select_cols(&keep));
    (minimal, to.reduced(), from)
}

/// `u` with `incl ∘ u = f`. Fails naming the first generator of `f.source`
/// whose image is not in the image of `incl`.
pub fn lift_through(f: &AbHom, incl: &AbHom) -> Result<AbHom> {
    if f.target() != incl.target() {
        return Err(Error::MismatchedPresentation);
    }
    let k = incl.source().generator_count();
    let solver = LinearSolver::new(&incl.matrix().hconcat(incl.target().relations()));
    let mut cols = Vec::with_capacity(f.matrix().cols());
    for j in 0..f.matrix().cols() {
        let b = f.matrix().column(j);
        if b.iter().all(Zero::is_zero) {
            cols.push(vec![BigInt::zero(); k]);
            continue;
        }
        let x = solver.solve(&b).ok_or(Error::NotLiftable { column: j })?;
        cols.push(x[..k].to_vec());
    }
    let m = IntegerMatrix::from_columns(k, &cols);
    AbHom::new(f.source().clone(), incl.source().clone(), m)
}
