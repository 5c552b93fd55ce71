//! Fixtures and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use cpmackey::abgrp::{FgAbGroup, IntegerMatrix};
use cpmackey::mackey::{prune, CpMackeyFunctor};
use cpmackey::randgen::{random_mackey_functor, RandomSpec};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

pub fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn one_by_one(x: i64) -> IntegerMatrix {
    IntegerMatrix::from_rows(&[[x]])
}

/// Both levels `Z`, `res = 1`, `tr = 2`, trivial action, at `p = 2`.
pub fn basic() -> CpMackeyFunctor {
    CpMackeyFunctor::from_matrices(
        2,
        FgAbGroup::free(1),
        FgAbGroup::free(1),
        one_by_one(1),
        one_by_one(2),
        one_by_one(1),
    )
    .unwrap()
}

/// Stored `p = 3` fixture: `Z/65 ⇄ Z/2015`, res 62, tr −1, conj 521.
pub fn rand1() -> CpMackeyFunctor {
    CpMackeyFunctor::from_matrices(
        3,
        FgAbGroup::cyclic(65),
        FgAbGroup::cyclic(2015),
        one_by_one(62),
        one_by_one(-1),
        one_by_one(521),
    )
    .unwrap()
}

/// Stored `p = 3` fixture: `Z/135 ⇄ Z/1935`, res −86, tr 57, conj −179.
pub fn rand2() -> CpMackeyFunctor {
    CpMackeyFunctor::from_matrices(
        3,
        FgAbGroup::cyclic(135),
        FgAbGroup::cyclic(1935),
        one_by_one(-86),
        one_by_one(57),
        one_by_one(-179),
    )
    .unwrap()
}

pub fn random_functor(p: u64, seed: u64) -> CpMackeyFunctor {
    random_mackey_functor(&RandomSpec::new(p, seed)).unwrap()
}

/// Invariant factors of both levels after pruning.
pub fn pruned_invariants(m: &CpMackeyFunctor) -> (Vec<BigInt>, Vec<BigInt>) {
    prune(m).functor.level_invariants()
}

fn det_small(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut total = BigInt::zero();
    for j in 0..n {
        let minor: Vec<Vec<BigInt>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(k, _)| k != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * det_small(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Cokernel invariants from determinantal divisors: `d_k` is the gcd of
/// all `k × k` minors and the `k`-th invariant factor is `d_k / d_{k-1}`.
/// Output follows the library convention: factors `≥ 2` ascending, then a
/// `0` for each free summand.
pub fn determinantal_invariants(m: &IntegerMatrix) -> Vec<BigInt> {
    let nested = m.to_nested();
    let mut divisors = vec![BigInt::from(1)];
    for k in 1..=m.rows().min(m.cols()) {
        let mut g = BigInt::zero();
        for rows in subsets(m.rows(), k) {
            for cols in subsets(m.cols(), k) {
                let sub: Vec<Vec<BigInt>> = rows
                    .iter()
                    .map(|&i| cols.iter().map(|&j| nested[i][j].clone()).collect())
                    .collect();
                g = g.gcd(&det_small(&sub));
            }
        }
        if g.is_zero() {
            break;
        }
        divisors.push(g);
    }
    let rank = divisors.len() - 1;
    let mut out: Vec<BigInt> = (1..=rank)
        .map(|k| &divisors[k] / &divisors[k - 1])
        .filter(|d| d > &BigInt::from(1))
        .collect();
    out.extend(std::iter::repeat_n(BigInt::zero(), m.rows() - rank));
    out
}

/// All vectors of `Z/e_1 × … × Z/e_n` with entries in `[0, e_i)`.
pub fn box_elements(moduli: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for &e in moduli {
        let mut next = Vec::with_capacity(out.len() * e as usize);
        for v in &out {
            for x in 0..e {
                let mut w = v.clone();
                w.push(x);
                next.push(w);
            }
        }
        out = next;
    }
    out
}

/// `|Hom(G, ⊕ Z/e_j)|` by trying every assignment of generator images.
pub fn brute_hom_count(g: &IntegerMatrix, target_moduli: &[i64]) -> usize {
    let images = box_elements(target_moduli);
    let n = g.rows();
    let mut count = 0;
    let mut choice = vec![0usize; n];
    loop {
        let ok = (0..g.cols()).all(|c| {
            target_moduli.iter().enumerate().all(|(t, &e)| {
                let s: i64 = (0..n)
                    .map(|i| g.get(i, c).to_i64().unwrap() * images[choice[i]][t])
                    .sum();
                s.rem_euclid(e) == 0
            })
        });
        if ok {
            count += 1;
        }
        let mut k = 0;
        loop {
            if k == n {
                return count;
            }
            choice[k] += 1;
            if choice[k] < images.len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

pub fn order_of(factors: &[BigInt]) -> Option<BigInt> {
    if factors.iter().any(|d| d.is_zero()) {
        None
    } else {
        Some(factors.iter().map(|d| d.abs()).product())
    }
}
