use num_bigint::BigInt;

use crate::abgrp::AbHom;
use crate::error::{Error, Result, Square};

use super::functor::CpMackeyFunctor;

/// A homomorphism of `C_p`-Mackey functors: a fixed-level and an
/// underlying-level map commuting with restriction, transfer and conjugation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MackeyHom {
    source: CpMackeyFunctor,
    target: CpMackeyFunctor,
    fixed_map: AbHom,
    underlying_map: AbHom,
}

impl MackeyHom {
    pub fn new(
        source: CpMackeyFunctor,
        target: CpMackeyFunctor,
        fixed_map: AbHom,
        underlying_map: AbHom,
    ) -> Result<Self> {
        source.same_prime(&target)?;
        if fixed_map.source() != source.fixed()
            || fixed_map.target() != target.fixed()
            || underlying_map.source() != source.underlying()
            || underlying_map.target() != target.underlying()
        {
            return Err(Error::MismatchedPresentation);
        }
        let f = MackeyHom {
            source,
            target,
            fixed_map,
            underlying_map,
        };
        f.validate()?;
        Ok(f)
    }

    pub(crate) fn new_unchecked(
        source: CpMackeyFunctor,
        target: CpMackeyFunctor,
        fixed_map: AbHom,
        underlying_map: AbHom,
    ) -> Self {
        let f = MackeyHom {
            source,
            target,
            fixed_map,
            underlying_map,
        };
        debug_assert_eq!(f.validate(), Ok(()));
        f
    }

    /// Builds from raw matrices on the presentations of `source` and `target`.
    pub fn from_matrices(
        source: CpMackeyFunctor,
        target: CpMackeyFunctor,
        fixed: crate::IntegerMatrix,
        underlying: crate::IntegerMatrix,
    ) -> Result<Self> {
        let ff = AbHom::new(source.fixed().clone(), target.fixed().clone(), fixed)?;
        let fu = AbHom::new(
            source.underlying().clone(),
            target.underlying().clone(),
            underlying,
        )?;
        Self::new(source, target, ff, fu)
    }

    fn validate(&self) -> Result<()> {
        let (s, t) = (&self.source, &self.target);
        let (ff, fu) = (&self.fixed_map, &self.underlying_map);
        if !fu.compose(s.conj())?.equals(&t.conj().compose(fu)?) {
            return Err(Error::Square(Square::Conj));
        }
        if !fu.compose(s.res())?.equals(&t.res().compose(ff)?) {
            return Err(Error::Square(Square::Res));
        }
        if !ff.compose(s.tr())?.equals(&t.tr().compose(fu)?) {
            return Err(Error::Square(Square::Tr));
        }
        Ok(())
    }

    pub fn identity(m: &CpMackeyFunctor) -> Self {
        MackeyHom {
            source: m.clone(),
            target: m.clone(),
            fixed_map: AbHom::identity(m.fixed().clone()),
            underlying_map: AbHom::identity(m.underlying().clone()),
        }
    }

    pub fn zero(source: &CpMackeyFunctor, target: &CpMackeyFunctor) -> Result<Self> {
        source.same_prime(target)?;
        Ok(MackeyHom {
            source: source.clone(),
            target: target.clone(),
            fixed_map: AbHom::zero(source.fixed().clone(), target.fixed().clone()),
            underlying_map: AbHom::zero(source.underlying().clone(), target.underlying().clone()),
        })
    }

    pub fn source(&self) -> &CpMackeyFunctor {
        &self.source
    }

    pub fn target(&self) -> &CpMackeyFunctor {
        &self.target
    }

    pub fn fixed_map(&self) -> &AbHom {
        &self.fixed_map
    }

    pub fn underlying_map(&self) -> &AbHom {
        &self.underlying_map
    }

    pub fn prime(&self) -> u64 {
        self.source.prime()
    }

    /// `self ∘ f`
    pub fn compose(&self, f: &MackeyHom) -> Result<MackeyHom> {
        if f.target != self.source {
            return Err(Error::MismatchedPresentation);
        }
        Ok(MackeyHom {
            source: f.source.clone(),
            target: self.target.clone(),
            fixed_map: self.fixed_map.compose(&f.fixed_map)?,
            underlying_map: self.underlying_map.compose(&f.underlying_map)?,
        })
    }

    fn combine(
        &self,
        other: &MackeyHom,
        op: impl Fn(&AbHom, &AbHom) -> Result<AbHom>,
    ) -> Result<MackeyHom> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::MismatchedPresentation);
        }
        Ok(MackeyHom {
            source: self.source.clone(),
            target: self.target.clone(),
            fixed_map: op(&self.fixed_map, &other.fixed_map)?,
            underlying_map: op(&self.underlying_map, &other.underlying_map)?,
        })
    }

    pub fn add(&self, other: &MackeyHom) -> Result<MackeyHom> {
        self.combine(other, AbHom::add)
    }

    pub fn sub(&self, other: &MackeyHom) -> Result<MackeyHom> {
        self.combine(other, AbHom::sub)
    }

    pub fn scale(&self, c: impl Into<BigInt>) -> MackeyHom {
        let c = c.into();
        MackeyHom {
            source: self.source.clone(),
            target: self.target.clone(),
            fixed_map: self.fixed_map.scale(c.clone()),
            underlying_map: self.underlying_map.scale(c),
        }
    }

    pub fn neg(&self) -> MackeyHom {
        self.scale(-1)
    }

    /// Equality as maps on both levels.
    pub fn equals(&self, other: &MackeyHom) -> bool {
        self.source == other.source
            && self.target == other.target
            && self.fixed_map.equals(&other.fixed_map)
            && self.underlying_map.equals(&other.underlying_map)
    }

    pub fn is_zero(&self) -> bool {
        self.fixed_map.is_zero() && self.underlying_map.is_zero()
    }

    /// Kernel and cokernel both vanish.
    pub fn is_isomorphism(&self) -> bool {
        self.fixed_map.is_isomorphism() && self.underlying_map.is_isomorphism()
    }

    /// Cokernel vanishes, i.e. both levels are surjective.
    pub fn is_surjective(&self) -> bool {
        self.fixed_map.is_surjective() && self.underlying_map.is_surjective()
    }
}
