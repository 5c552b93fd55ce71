mod common;

use cpmackey::abgrp::{
    cokernel, cokernel_invariants, hom_group, kernel, minimal_presentation, smith_normal_form,
    tensor, AbHom, FgAbGroup, IntegerMatrix,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use proptest::prelude::*;

use common::{brute_hom_count, determinantal_invariants};

fn matrix(rows: usize, cols: usize, bound: i64) -> impl Strategy<Value = IntegerMatrix> {
    prop::collection::vec(-bound..=bound, rows * cols)
        .prop_map(move |e| IntegerMatrix::from_i64(rows, cols, &e))
}

fn any_matrix(max: usize, bound: i64) -> impl Strategy<Value = IntegerMatrix> {
    (0..=max, 0..=max).prop_flat_map(move |(r, c)| matrix(r, c, bound))
}

/// A group on `1..=3` generators with a few random relations.
fn small_group() -> impl Strategy<Value = FgAbGroup> {
    (1usize..=3, 0usize..=3)
        .prop_flat_map(|(g, r)| matrix(g, r, 6))
        .prop_map(FgAbGroup::from_relations)
}

/// A finite group with at most 100 elements, up to isomorphism random.
fn small_finite_group() -> impl Strategy<Value = FgAbGroup> {
    (1usize..=3)
        .prop_flat_map(|g| (matrix(g, g, 1), prop::collection::vec(1i64..=5, g)))
        .prop_map(|(mix, diag)| {
            let g = diag.len();
            let d = IntegerMatrix::from_columns(
                g,
                &(0..g)
                    .map(|j| {
                        (0..g)
                            .map(|i| BigInt::from(if i == j { diag[j] } else { 0 }))
                            .collect()
                    })
                    .collect::<Vec<_>>(),
            );
            // Unimodular change of basis: an upper unitriangular matrix.
            let mut u = IntegerMatrix::identity(g);
            for i in 0..g {
                for j in i + 1..g {
                    u.set(i, j, mix.get(i, j).clone());
                }
            }
            FgAbGroup::from_relations(&u * &d)
        })
}

fn random_hom(g: &FgAbGroup, h: &FgAbGroup, coords: &[i64]) -> AbHom {
    let hg = hom_group(g, h);
    let n = hg.group().generator_count();
    let c: Vec<BigInt> = (0..n)
        .map(|i| BigInt::from(coords[i % coords.len()]))
        .collect();
    hg.element_to_hom(&c)
}

fn diagonal(m: &IntegerMatrix) -> Vec<BigInt> {
    (0..m.rows().min(m.cols()))
        .map(|i| m.get(i, i).clone())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn smith_identity_and_unimodularity(m in any_matrix(5, 9)) {
        let s = smith_normal_form(&m);
        prop_assert_eq!(&(&s.u * &m) * &s.v, s.d.clone());
        prop_assert_eq!(&s.u * &s.u_inv, IntegerMatrix::identity(m.rows()));
        prop_assert!(s.u.determinant().abs().is_one());
        prop_assert!(s.v.determinant().abs().is_one());
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    prop_assert!(s.d.get(i, j).is_zero());
                }
            }
        }
        let d = diagonal(&s.d);
        for w in d.windows(2) {
            prop_assert!(!w[0].is_negative() && !w[1].is_negative());
            if w[0].is_zero() {
                prop_assert!(w[1].is_zero());
            } else {
                prop_assert!(w[1].is_multiple_of(&w[0]));
            }
        }
    }

    #[test]
    fn invariants_match_determinantal_divisors(m in any_matrix(4, 9)) {
        prop_assert_eq!(cokernel_invariants(&m), determinantal_invariants(&m));
    }

    #[test]
    fn invariants_match_enumerated_quotients(m in matrix(4, 4, 9)) {
        let det = m.determinant().abs();
        prop_assume!(!det.is_zero() && det <= BigInt::from(10_000));
        let factors = cokernel_invariants(&m);
        prop_assert_eq!(factors.iter().product::<BigInt>(), det);
        // |G / kG| = |Hom(G, Z/k)| determines a finite abelian group.
        for k in 2..=8i64 {
            let expected: BigInt = factors.iter().map(|d| d.gcd(&BigInt::from(k))).product();
            prop_assert_eq!(brute_hom_count(&m, &[k]), expected.to_usize().unwrap());
        }
    }

    #[test]
    fn kernel_and_cokernel_are_exact(
        g in small_group(),
        h in small_group(),
        coords in prop::collection::vec(-4i64..=4, 1..6),
    ) {
        let f = random_hom(&g, &h, &coords);
        let (_, incl) = kernel(&f);
        let (_, proj) = cokernel(&f);
        prop_assert!(f.compose(&incl).unwrap().is_zero());
        prop_assert!(proj.compose(&f).unwrap().is_zero());
        prop_assert!(kernel(&incl).0.is_trivial());
        prop_assert!(cokernel(&proj).0.is_trivial());
        prop_assert!(incl.is_injective());
        prop_assert!(proj.is_surjective());
    }

    #[test]
    fn hom_group_round_trip(g in small_finite_group(), h in small_finite_group()) {
        let hg = hom_group(&g, &h);
        let elements = hg.group().elements(100);
        prop_assume!(elements.is_some());
        for e in elements.unwrap() {
            let f = hg.element_to_hom(&e);
            prop_assert!(hg.group().elements_equal(&hg.hom_to_element(&f), &e));
            prop_assert!(hg.element_to_hom(&hg.hom_to_element(&f)).equals(&f));
        }
    }

    #[test]
    fn hom_group_order_matches_brute_force(g in small_finite_group(), h in prop::collection::vec(1i64..=4, 1..=2)) {
        let target = FgAbGroup::from_invariants(&h.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>());
        let hg = hom_group(&g, &target);
        let order = hg.group().order().unwrap();
        prop_assert_eq!(order, BigInt::from(brute_hom_count(g.relations(), &h)));
    }

    #[test]
    fn tensor_is_symmetric(g in small_group(), h in small_group()) {
        prop_assert_eq!(tensor(&g, &h).invariant_factors(), tensor(&h, &g).invariant_factors());
    }

    #[test]
    fn minimal_presentation_is_inverse_pair(g in small_group()) {
        let (m, to, from) = minimal_presentation(&g);
        prop_assert!(to.compose(&from).unwrap().equals(&AbHom::identity(m.clone())));
        prop_assert!(from.compose(&to).unwrap().equals(&AbHom::identity(g.clone())));
        prop_assert!(m.is_diagonal());
        prop_assert_eq!(m.invariant_factors(), g.invariant_factors());
    }
}

#[test]
fn empty_matrices_are_first_class() {
    let m = IntegerMatrix::zeros(3, 0);
    assert_eq!(cokernel_invariants(&m), vec![BigInt::zero(); 3]);
    let s = smith_normal_form(&IntegerMatrix::zeros(0, 2));
    assert_eq!(s.v, IntegerMatrix::identity(2));
    assert!(FgAbGroup::trivial().is_trivial());
    assert_eq!(FgAbGroup::free(0), FgAbGroup::trivial());
}
