//! Surjections onto a functor from sums of corepresenting functors.
//!
//! In `Mack`, `A` corepresents the fixed level and `B` the underlying level.
//! In `CohMack`, the constant functor `Z` (res `1`, tr `p`) takes the place
//! of `A`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::abgrp::{cokernel_invariants, minimal_presentation, Element, FgAbGroup, IntegerMatrix};
use crate::error::{Error, Result};
use crate::mackey::{burnside, direct_sum_all, underlying_free, CpMackeyFunctor, MackeyHom};

/// Which generators to cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum CoverStrategy {
    /// One summand per generator of each level's presentation.
    Naive,
    /// A small `Z[C_p]`-generating set of the underlying level, then
    /// generators of the fixed level modulo the transfers of that set.
    #[default]
    Reduced,
}

/// The ambient category the cover is projective in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum CoverKind {
    #[default]
    Mackey,
    Cohomological,
}

/// `A → M` sending `1 ↦ m`.
pub fn hom_from_fixed_element(m: &CpMackeyFunctor, x: &[BigInt]) -> Result<MackeyHom> {
    check_len(x, m.fixed().generator_count())?;
    let tr_res = m.tr().apply(&m.res().apply(x));
    let fixed = IntegerMatrix::from_columns(m.fixed().generator_count(), &[x.to_vec(), tr_res]);
    let underlying =
        IntegerMatrix::from_columns(m.underlying().generator_count(), &[m.res().apply(x)]);
    MackeyHom::from_matrices(burnside(m.prime())?, m.clone(), fixed, underlying)
}

/// `B → M` sending `γ^0 ↦ u`.
pub fn hom_from_underlying_element(m: &CpMackeyFunctor, u: &[BigInt]) -> Result<MackeyHom> {
    check_len(u, m.underlying().generator_count())?;
    let p = m.prime() as usize;
    let mut orbit = Vec::with_capacity(p);
    let mut cur = u.to_vec();
    for _ in 0..p {
        let next = m.conj().apply(&cur);
        orbit.push(cur);
        cur = next;
    }
    let fixed = IntegerMatrix::from_columns(m.fixed().generator_count(), &[m.tr().apply(u)]);
    let underlying = IntegerMatrix::from_columns(m.underlying().generator_count(), &orbit);
    MackeyHom::from_matrices(underlying_free(m.prime())?, m.clone(), fixed, underlying)
}

/// The constant functor `Z`: both levels `Z`, `res = 1`, `tr = p`, trivial action.
pub fn constant_z(p: u64) -> Result<CpMackeyFunctor> {
    CpMackeyFunctor::from_matrices(
        p,
        FgAbGroup::free(1),
        FgAbGroup::free(1),
        IntegerMatrix::identity(1),
        IntegerMatrix::scalar(1, &BigInt::from(p)),
        IntegerMatrix::identity(1),
    )
}

/// `Z → M` sending `1 ↦ m`; requires `tr res m = p m`.
pub fn hom_from_constant(m: &CpMackeyFunctor, x: &[BigInt]) -> Result<MackeyHom> {
    check_len(x, m.fixed().generator_count())?;
    let fixed = IntegerMatrix::from_columns(m.fixed().generator_count(), &[x.to_vec()]);
    let underlying =
        IntegerMatrix::from_columns(m.underlying().generator_count(), &[m.res().apply(x)]);
    MackeyHom::from_matrices(constant_z(m.prime())?, m.clone(), fixed, underlying)
}

fn check_len(x: &[BigInt], n: usize) -> Result<()> {
    if x.len() != n {
        return Err(Error::Dimension(format!(
            "element of length {} for a group on {n} generators",
            x.len()
        )));
    }
    Ok(())
}

/// Generating elements `(fixed, underlying)` chosen by `strategy`.
pub fn cover_generators(
    m: &CpMackeyFunctor,
    strategy: CoverStrategy,
) -> (Vec<Element>, Vec<Element>) {
    match strategy {
        CoverStrategy::Naive => (
            (0..m.fixed().generator_count())
                .map(|i| m.fixed().generator(i))
                .collect(),
            (0..m.underlying().generator_count())
                .map(|i| m.underlying().generator(i))
                .collect(),
        ),
        CoverStrategy::Reduced => {
            let under = equivariant_generators(m);
            let transfers: Vec<Element> = under.iter().map(|u| m.tr().apply(u)).collect();
            let fixed = generators_modulo(m.fixed(), &transfers);
            (fixed, under)
        }
    }
}

/// Minimal generators of `g / ⟨extra⟩`, as elements of `g`.
fn generators_modulo(g: &FgAbGroup, extra: &[Element]) -> Vec<Element> {
    let n = g.generator_count();
    let quotient = FgAbGroup::from_relations(
        g.relations()
            .hconcat(&IntegerMatrix::from_columns(n, extra)),
    );
    let (min, _, from) = minimal_presentation(&quotient);
    (0..min.generator_count())
        .map(|i| from.matrix().column(i))
        .collect()
}

/// `(free rank, torsion order)` of `g / Z[C_p]·chosen`.
fn quotient_size(m: &CpMackeyFunctor, orbits: &[Element]) -> (usize, BigInt) {
    let g = m.underlying();
    let factors = cokernel_invariants(
        &g.relations()
            .hconcat(&IntegerMatrix::from_columns(g.generator_count(), orbits)),
    );
    let free = factors.iter().filter(|d| d.is_zero()).count();
    let torsion = factors.into_iter().filter(|d| !d.is_zero()).product();
    (free, torsion)
}

fn conj_orbit(m: &CpMackeyFunctor, u: &Element) -> Vec<Element> {
    let mut out = Vec::with_capacity(m.prime() as usize);
    let mut cur = u.clone();
    for _ in 0..m.prime() {
        let next = m.conj().apply(&cur);
        out.push(cur);
        cur = next;
    }
    out
}

/// Greedy `Z[C_p]`-generating set of the underlying level. Candidates are
/// the minimal generators and their pairwise sums and differences; each
/// step keeps the candidate leaving the smallest quotient.
fn equivariant_generators(m: &CpMackeyFunctor) -> Vec<Element> {
    let g = m.underlying();
    let (min, _, from) = minimal_presentation(g);
    let base: Vec<Element> = (0..min.generator_count())
        .map(|i| from.matrix().column(i))
        .collect();
    let mut candidates = base.clone();
    for i in 0..base.len() {
        for j in i + 1..base.len() {
            candidates.push(base[i].iter().zip(&base[j]).map(|(a, b)| a + b).collect());
            candidates.push(base[i].iter().zip(&base[j]).map(|(a, b)| a - b).collect());
        }
    }
    let mut chosen = Vec::new();
    let mut orbits: Vec<Element> = Vec::new();
    let mut size = quotient_size(m, &orbits);
    while size != (0, BigInt::from(1)) {
        let mut best: Option<(usize, (usize, BigInt), Vec<Element>)> = None;
        for (k, c) in candidates.iter().enumerate() {
            let orbit = conj_orbit(m, c);
            let mut trial = orbits.clone();
            trial.extend(orbit.iter().cloned());
            let s = quotient_size(m, &trial);
            if best.as_ref().is_none_or(|(_, bs, _)| &s < bs) {
                best = Some((k, s, orbit));
            }
        }
        let (k, s, orbit) = best.expect("candidates generate the group");
        debug_assert!(s < size);
        chosen.push(candidates.swap_remove(k));
        orbits.extend(orbit);
        size = s;
    }
    chosen
}

/// Surjection `A^a ⊕ B^b → M` (or `Z^a ⊕ B^b → M` for `Cohomological`).
pub fn cover(m: &CpMackeyFunctor, kind: CoverKind, strategy: CoverStrategy) -> Result<MackeyHom> {
    if kind == CoverKind::Cohomological && !m.is_cohomological() {
        return Err(Error::NotCohomological);
    }
    let (fixed, under) = cover_generators(m, strategy);
    let mut pieces = Vec::with_capacity(fixed.len() + under.len());
    for x in &fixed {
        pieces.push(match kind {
            CoverKind::Mackey => hom_from_fixed_element(m, x)?,
            CoverKind::Cohomological => hom_from_constant(m, x)?,
        });
    }
    for u in &under {
        pieces.push(hom_from_underlying_element(m, u)?);
    }
    let source = direct_sum_all(
        m.prime(),
        &pieces
            .iter()
            .map(|f| f.source().clone())
            .collect::<Vec<_>>(),
    );
    let fixed_map = IntegerMatrix::hconcat_all(
        m.fixed().generator_count(),
        &pieces
            .iter()
            .map(|f| f.fixed_map().matrix().clone())
            .collect::<Vec<_>>(),
    );
    let under_map = IntegerMatrix::hconcat_all(
        m.underlying().generator_count(),
        &pieces
            .iter()
            .map(|f| f.underlying_map().matrix().clone())
            .collect::<Vec<_>>(),
    );
    MackeyHom::from_matrices(source, m.clone(), fixed_map, under_map)
}

/// One `A` per fixed generator and one `B` per underlying generator.
pub fn free_cover(m: &CpMackeyFunctor) -> Result<MackeyHom> {
    cover(m, CoverKind::Mackey, CoverStrategy::Naive)
}

/// One `Z` per fixed generator and one `B` per underlying generator.
pub fn cohomological_cover(m: &CpMackeyFunctor) -> Result<MackeyHom> {
    cover(m, CoverKind::Cohomological, CoverStrategy::Naive)
}
