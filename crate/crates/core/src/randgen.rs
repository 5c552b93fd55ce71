//! Seeded random functors and homomorphisms.
//!
//! All draws come from ChaCha8 seeded with `seed_from_u64(seed)`; each kind
//! of draw reads its own stream so that changing one bound does not shift
//! the others.

use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::abgrp::{AbHom, Element, FgAbGroup, IntegerMatrix};
use crate::error::Result;
use crate::homalg::{hom_from_fixed_element, hom_from_underlying_element};
use crate::mackey::{
    burnside, cokernel, direct_sum_all, fixed_point, orbit, underlying_free, zero_on_underlying,
    CpMackeyFunctor, MackeyHom,
};
use crate::monoidal::MackeyHomGroup;

const SHAPE: u64 = 0;
const FIXED: u64 = 1;
const UNDERLYING: u64 = 2;
const HOM: u64 = 3;
const MODULE: u64 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RandomSpec {
    pub prime: u64,
    pub seed: u64,
    /// Bound on the number of free `A` and `B` summands.
    pub max_free: usize,
    /// Bound on the number of relations of each kind.
    pub max_rel: usize,
    /// Coefficients lie in `[-coef_bound, coef_bound]`.
    pub coef_bound: i64,
}

impl RandomSpec {
    pub fn new(prime: u64, seed: u64) -> Self {
        RandomSpec {
            prime,
            seed,
            max_free: 2,
            max_rel: 2,
            coef_bound: 9,
        }
    }

    fn rng(&self, stream: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(stream);
        rng
    }
}

fn random_vector(rng: &mut ChaCha8Rng, len: usize, bound: i64) -> Element {
    (0..len)
        .map(|_| BigInt::from(rng.gen_range(-bound..=bound)))
        .collect()
}

/// Cokernel of a random map `A^{k1} ⊕ B^{k2} → A^{l1} ⊕ B^{l2}`.
///
/// `l1 + l2 ≥ 1`, so the free part is never empty.
pub fn random_mackey_functor(spec: &RandomSpec) -> Result<CpMackeyFunctor> {
    let p = spec.prime;
    let mut shape = spec.rng(SHAPE);
    let (l1, l2) = loop {
        let l = (
            shape.gen_range(0..=spec.max_free),
            shape.gen_range(0..=spec.max_free),
        );
        if l.0 + l.1 > 0 {
            break l;
        }
    };
    let k1 = shape.gen_range(0..=spec.max_rel);
    let k2 = shape.gen_range(0..=spec.max_rel);

    let mut summands = vec![burnside(p)?; l1];
    summands.extend(std::iter::repeat_n(underlying_free(p)?, l2));
    let target = direct_sum_all(p, &summands);

    let mut fixed_rng = spec.rng(FIXED);
    let mut under_rng = spec.rng(UNDERLYING);
    let mut pieces = Vec::with_capacity(k1 + k2);
    for _ in 0..k1 {
        let x = random_vector(
            &mut fixed_rng,
            target.fixed().generator_count(),
            spec.coef_bound,
        );
        pieces.push(hom_from_fixed_element(&target, &x)?);
    }
    for _ in 0..k2 {
        let u = random_vector(
            &mut under_rng,
            target.underlying().generator_count(),
            spec.coef_bound,
        );
        pieces.push(hom_from_underlying_element(&target, &u)?);
    }
    let source = direct_sum_all(
        p,
        &pieces
            .iter()
            .map(|f| f.source().clone())
            .collect::<Vec<_>>(),
    );
    let cat = |pick: &dyn Fn(&MackeyHom) -> &AbHom, rows: usize| {
        IntegerMatrix::hconcat_all(
            rows,
            &pieces
                .iter()
                .map(|f| pick(f).matrix().clone())
                .collect::<Vec<_>>(),
        )
    };
    let f = MackeyHom::from_matrices(
        source,
        target.clone(),
        cat(&|f| f.fixed_map(), target.fixed().generator_count()),
        cat(
            &|f| f.underlying_map(),
            target.underlying().generator_count(),
        ),
    )?;
    Ok(cokernel(&f).0)
}

/// A random element of `Hom_Mack(M, N)`, turned into a homomorphism.
pub fn random_mackey_hom(m: &CpMackeyFunctor, n: &CpMackeyFunctor, seed: u64) -> Result<MackeyHom> {
    let group = MackeyHomGroup::new(m, n)?;
    let spec = RandomSpec::new(m.prime(), seed);
    let mut rng = spec.rng(HOM);
    let e = random_vector(&mut rng, group.group().generator_count(), spec.coef_bound);
    Ok(group.element_to_hom(&e))
}

/// A random `C_p`-module `(X, c)`: `Z[C_p]^a ⊕ Z^b` modulo the orbits of
/// random vectors, with `a + b ≤ max_free + 1`.
pub fn random_module(spec: &RandomSpec) -> Result<AbHom> {
    let p = spec.prime as usize;
    let mut rng = spec.rng(MODULE);
    let (a, b) = loop {
        let s = (rng.gen_range(0..=1usize), rng.gen_range(0..=spec.max_free));
        if s.0 + s.1 > 0 {
            break s;
        }
    };
    let n = a * p + b;
    let mut perm: Vec<usize> = (0..n).collect();
    for block in 0..a {
        for i in 0..p {
            perm[block * p + i] = block * p + (i + 1) % p;
        }
    }
    let c = IntegerMatrix::permutation(&perm);
    let mut cols = Vec::new();
    for _ in 0..rng.gen_range(0..=spec.max_rel) {
        let mut r = random_vector(&mut rng, n, spec.coef_bound);
        for _ in 0..p {
            let next = c.mul_vec(&r);
            cols.push(r);
            r = next;
        }
    }
    let x = FgAbGroup::from_relations(IntegerMatrix::from_columns(n, &cols));
    AbHom::new(x.clone(), x, c)
}

/// A random cohomological functor: a fixed point or orbit functor of a
/// random module, or `⟨(Z/p)^k⟩`.
pub fn random_cohomological(spec: &RandomSpec) -> Result<CpMackeyFunctor> {
    let mut rng = spec.rng(SHAPE);
    match rng.gen_range(0..5u8) {
        0 => {
            let k = rng.gen_range(1..=spec.max_free.max(1));
            let orders = vec![BigInt::from(spec.prime); k];
            zero_on_underlying(spec.prime, FgAbGroup::from_invariants(&orders))
        }
        1 | 2 => fixed_point(spec.prime, &random_module(spec)?),
        _ => orbit(spec.prime, &random_module(spec)?),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        let s = RandomSpec::new(3, 42);
        assert_eq!(
            random_mackey_functor(&s).unwrap(),
            random_mackey_functor(&s).unwrap()
        );
        let m = random_mackey_functor(&s).unwrap();
        let f = random_mackey_hom(&m, &m, 5).unwrap();
        assert_eq!(f, random_mackey_hom(&m, &m, 5).unwrap());
    }

    #[test]
    fn zero_coefficients_give_free_functor() {
        let s = RandomSpec {
            coef_bound: 0,
            ..RandomSpec::new(2, 9)
        };
        let m = random_mackey_functor(&s).unwrap();
        assert_eq!(m.fixed().free_rank(), m.fixed().generator_count());
        assert_eq!(m.underlying().free_rank(), m.underlying().generator_count());
    }

    #[test]
    fn cohomological_generators() {
        for seed in 0..10 {
            for p in [2, 3] {
                let m = random_cohomological(&RandomSpec::new(p, seed)).unwrap();
                assert!(m.is_cohomological(), "seed {seed} p {p}");
            }
        }
    }
}
