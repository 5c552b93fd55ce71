use crate::abgrp::{cokernel, kernel, lift_through, AbHom, FgAbGroup, IntegerMatrix};
use crate::error::{Error, Result};

use super::functor::{check_prime, norm_matrix, CpMackeyFunctor};

/// Named functors that are determined by the prime (and, for
/// `ZeroOnUnderlying`, one abelian group).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CanonicalKind {
    Zero,
    Burnside,
    UnderlyingFree,
    ZeroOnUnderlying(FgAbGroup),
    RealRepresentation,
    ComplexRepresentation,
}

pub fn make_canonical(kind: &CanonicalKind, p: u64) -> Result<CpMackeyFunctor> {
    match kind {
        CanonicalKind::Zero => zero(p),
        CanonicalKind::Burnside => burnside(p),
        CanonicalKind::UnderlyingFree => underlying_free(p),
        CanonicalKind::ZeroOnUnderlying(g) => zero_on_underlying(p, g.clone()),
        CanonicalKind::RealRepresentation => real_representation(p),
        CanonicalKind::ComplexRepresentation => complex_representation(p),
    }
}

fn from_free(
    p: u64,
    fixed_rank: usize,
    underlying_rank: usize,
    res: IntegerMatrix,
    tr: IntegerMatrix,
    conj: IntegerMatrix,
) -> Result<CpMackeyFunctor> {
    CpMackeyFunctor::from_matrices(
        p,
        FgAbGroup::free(fixed_rank),
        FgAbGroup::free(underlying_rank),
        res,
        tr,
        conj,
    )
}

pub fn zero(p: u64) -> Result<CpMackeyFunctor> {
    zero_on_underlying(p, FgAbGroup::trivial())
}

/// Burnside functor `A`: fixed `Z{1, t}`, underlying `Z`,
/// `res(a + bt) = a + bp`, `tr(1) = t`.
pub fn burnside(p: u64) -> Result<CpMackeyFunctor> {
    check_prime(p)?;
    from_free(
        p,
        2,
        1,
        IntegerMatrix::from_rows(&[[1, p as i64]]),
        IntegerMatrix::from_rows(&[[0], [1]]),
        IntegerMatrix::identity(1),
    )
}

/// Free functor `B` on an underlying generator: underlying `Z[C_p]` with
/// basis `γ^0 … γ^{p-1}`, fixed `Z`.
pub fn underlying_free(p: u64) -> Result<CpMackeyFunctor> {
    check_prime(p)?;
    let n = p as usize;
    let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    from_free(
        p,
        1,
        n,
        IntegerMatrix::from_rows(&vec![[1i64]; n]),
        IntegerMatrix::from_rows(&[vec![1i64; n]]),
        IntegerMatrix::permutation(&cycle),
    )
}

/// `⟨G⟩`: `G` on the fixed level, zero on the underlying level.
pub fn zero_on_underlying(p: u64, group: FgAbGroup) -> Result<CpMackeyFunctor> {
    check_prime(p)?;
    let trivial = FgAbGroup::trivial();
    CpMackeyFunctor::new(
        p,
        AbHom::zero(group.clone(), trivial.clone()),
        AbHom::zero(trivial.clone(), group),
        AbHom::identity(trivial),
    )
}

/// Real representation functor; for `p = 2` this is the complex one.
pub fn real_representation(p: u64) -> Result<CpMackeyFunctor> {
    check_prime(p)?;
    if p == 2 {
        return complex_representation(p);
    }
    let k = (p as usize).div_ceil(2);
    let mut res = vec![2i64; k];
    res[0] = 1;
    from_free(
        p,
        k,
        1,
        IntegerMatrix::from_rows(&[res]),
        IntegerMatrix::from_rows(&vec![[1i64]; k]),
        IntegerMatrix::identity(1),
    )
}

/// Complex representation functor: fixed `Z{λ_0,…,λ_{p-1}}`, `res(λ_i) = 1`,
/// `tr(x) = x · Σ λ_i`.
pub fn complex_representation(p: u64) -> Result<CpMackeyFunctor> {
    check_prime(p)?;
    let n = p as usize;
    from_free(
        p,
        n,
        1,
        IntegerMatrix::from_rows(&[vec![1i64; n]]),
        IntegerMatrix::from_rows(&vec![[1i64]; n]),
        IntegerMatrix::identity(1),
    )
}

fn check_action(p: u64, c: &AbHom) -> Result<()> {
    check_prime(p)?;
    if c.source() != c.target() {
        return Err(Error::Dimension("action must be an endomorphism".into()));
    }
    let power = AbHom::new(c.source().clone(), c.target().clone(), c.matrix().pow(p))?;
    if !power.equals(&AbHom::identity(c.source().clone())) {
        return Err(Error::ConjugationOrder);
    }
    Ok(())
}

/// Fixed point functor of a `C_p`-module `(X, c)`: fixed level `X^{C_p}`,
/// restriction the inclusion, transfer the norm.
pub fn fixed_point(p: u64, c: &AbHom) -> Result<CpMackeyFunctor> {
    check_action(p, c)?;
    let x = c.source().clone();
    let (_, incl) = kernel(&c.sub(&AbHom::identity(x.clone()))?);
    let norm = AbHom::new_unchecked(x.clone(), x, norm_matrix(c.matrix(), p));
    let tr = lift_through(&norm, &incl)?;
    CpMackeyFunctor::new(p, incl, tr, c.clone())
}

/// Orbit functor of a `C_p`-module `(X, c)`: fixed level `X_{C_p}`,
/// transfer the quotient map, restriction induced by the norm.
pub fn orbit(p: u64, c: &AbHom) -> Result<CpMackeyFunctor> {
    check_action(p, c)?;
    let x = c.source().clone();
    let (q, proj) = cokernel(&c.sub(&AbHom::identity(x.clone()))?);
    let res = AbHom::new(q, x, norm_matrix(c.matrix(), p))?;
    CpMackeyFunctor::new(p, res, proj, c.clone())
}
