use num_bigint::BigInt;

use crate::abgrp::{minimal_presentation, AbHom, FgAbGroup, IntegerMatrix};
use crate::error::{Axiom, Error, Result};

/// A `C_p`-Mackey functor: the fixed module `M(C_p/C_p)`, the underlying
/// module `M(C_p/e)`, and restriction, transfer and conjugation.
///
/// Values are validated against the Mackey axioms when constructed and are
/// immutable afterwards.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CpMackeyFunctor {
    prime: u64,
    fixed: FgAbGroup,
    underlying: FgAbGroup,
    res: AbHom,
    tr: AbHom,
    conj: AbHom,
}

pub(crate) fn check_prime(p: u64) -> Result<()> {
    if p < 2
        || (2..)
            .take_while(|d| d * d <= p)
            .any(|d| p.is_multiple_of(d))
    {
        return Err(Error::NotPrime(p));
    }
    Ok(())
}

impl CpMackeyFunctor {
    /// Builds a functor from its structure maps; the fixed module is
    /// `res.source()` and the underlying module is `res.target()`.
    pub fn new(prime: u64, res: AbHom, tr: AbHom, conj: AbHom) -> Result<Self> {
        check_prime(prime)?;
        let fixed = res.source().clone();
        let underlying = res.target().clone();
        if tr.source() != &underlying || tr.target() != &fixed {
            return Err(Error::Dimension(
                "transfer must map the underlying module to the fixed module".into(),
            ));
        }
        if conj.source() != &underlying || conj.target() != &underlying {
            return Err(Error::Dimension(
                "conjugation must be an endomorphism of the underlying module".into(),
            ));
        }
        let m = CpMackeyFunctor {
            prime,
            fixed,
            underlying,
            res,
            tr,
            conj,
        };
        m.validate()?;
        Ok(m)
    }

    /// Builds from raw matrices on the two presentations.
    pub fn from_matrices(
        prime: u64,
        fixed: FgAbGroup,
        underlying: FgAbGroup,
        res: IntegerMatrix,
        tr: IntegerMatrix,
        conj: IntegerMatrix,
    ) -> Result<Self> {
        let res = AbHom::new(fixed.clone(), underlying.clone(), res)?;
        let tr = AbHom::new(underlying.clone(), fixed, tr)?;
        let conj = AbHom::new(underlying.clone(), underlying, conj)?;
        Self::new(prime, res, tr, conj)
    }

    pub(crate) fn new_unchecked(prime: u64, res: AbHom, tr: AbHom, conj: AbHom) -> Self {
        let m = CpMackeyFunctor {
            prime,
            fixed: res.source().clone(),
            underlying: res.target().clone(),
            res,
            tr,
            conj,
        };
        debug_assert_eq!(m.validate(), Ok(()));
        m
    }

    fn validate(&self) -> Result<()> {
        let conj_res = self.conj.compose(&self.res)?;
        if !conj_res.equals(&self.res) {
            return Err(Error::Axiom(Axiom::ConjRes));
        }
        let tr_conj = self.tr.compose(&self.conj)?;
        if !tr_conj.equals(&self.tr) {
            return Err(Error::Axiom(Axiom::TrConj));
        }
        let n = self.underlying.generator_count();
        let conj_p = AbHom::new_unchecked(
            self.underlying.clone(),
            self.underlying.clone(),
            self.conj.matrix().pow(self.prime),
        );
        if !conj_p.equals(&AbHom::identity(self.underlying.clone())) {
            return Err(Error::Axiom(Axiom::ConjOrder));
        }
        let norm = AbHom::new_unchecked(
            self.underlying.clone(),
            self.underlying.clone(),
            norm_matrix(self.conj.matrix(), self.prime),
        );
        debug_assert_eq!(norm.matrix().rows(), n);
        if !self.res.compose(&self.tr)?.equals(&norm) {
            return Err(Error::Axiom(Axiom::Double));
        }
        Ok(())
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn fixed(&self) -> &FgAbGroup {
        &self.fixed
    }

    pub fn underlying(&self) -> &FgAbGroup {
        &self.underlying
    }

    pub fn res(&self) -> &AbHom {
        &self.res
    }

    pub fn tr(&self) -> &AbHom {
        &self.tr
    }

    pub fn conj(&self) -> &AbHom {
        &self.conj
    }

    /// `Σ_{i<p} conj^i` on the underlying module.
    pub fn norm(&self) -> AbHom {
        AbHom::new_unchecked(
            self.underlying.clone(),
            self.underlying.clone(),
            norm_matrix(self.conj.matrix(), self.prime),
        )
    }

    /// `tr ∘ res = p · id` on the fixed module.
    pub fn is_cohomological(&self) -> bool {
        let tr_res = self.tr.compose(&self.res).expect("structure maps compose");
        tr_res.equals(&AbHom::scalar(self.fixed.clone(), self.prime))
    }

    /// Both levels are trivial groups.
    pub fn is_zero(&self) -> bool {
        self.fixed.is_trivial() && self.underlying.is_trivial()
    }

    /// Invariant factors of the fixed and underlying modules.
    pub fn level_invariants(&self) -> (Vec<BigInt>, Vec<BigInt>) {
        (
            self.fixed.invariant_factors(),
            self.underlying.invariant_factors(),
        )
    }

    /// Whether both levels already have minimal presentations.
    pub fn is_minimal(&self) -> bool {
        [&self.fixed, &self.underlying]
            .iter()
            .all(|g| minimal_presentation(g).0 == **g)
    }

    pub fn same_prime(&self, other: &CpMackeyFunctor) -> Result<()> {
        if self.prime != other.prime {
            return Err(Error::PrimeMismatch(self.prime, other.prime));
        }
        Ok(())
    }
}

/// `Σ_{i<p} c^i`
pub(crate) fn norm_matrix(c: &IntegerMatrix, p: u64) -> IntegerMatrix {
    let n = c.rows();
    let mut acc = IntegerMatrix::zeros(n, n);
    let mut power = IntegerMatrix::identity(n);
    for i in 0..p {
        acc = &acc + &power;
        if i + 1 < p {
            power = &power * c;
        }
    }
    acc
}
