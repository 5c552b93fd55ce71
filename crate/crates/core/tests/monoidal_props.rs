mod common;

use cpmackey::abgrp::{hom_group, lift_through, AbHom, IntegerMatrix};
use cpmackey::mackey::{cokernel, fixed_point, image, kernel, CpMackeyFunctor, MackeyHom};
use cpmackey::monoidal::{
    box_hom, box_product, internal_hom, internal_hom_map, left_unitor, right_unitor, swap,
    Adjunction,
};
use cpmackey::randgen::{random_mackey_hom, random_module, RandomSpec};
use proptest::prelude::*;

use common::random_functor;

fn prime() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![2u64, 3, 5])
}

fn mod_two(n: &CpMackeyFunctor) -> CpMackeyFunctor {
    cokernel(&MackeyHom::identity(n).scale(2)).0
}

/// The module `Hom(X, Y)` with `h ↦ d ∘ h ∘ c^{p-1}`.
fn hom_module(p: u64, c: &AbHom, d: &AbHom) -> AbHom {
    let hg = hom_group(c.source(), d.source());
    let c_inv = AbHom::new(
        c.source().clone(),
        c.source().clone(),
        c.matrix().pow(p - 1),
    )
    .unwrap();
    let h = hg.group();
    let cols: Vec<_> = (0..h.generator_count())
        .map(|j| {
            let f = hg.element_to_hom(&h.generator(j));
            hg.hom_to_element(&d.compose(&f.compose(&c_inv).unwrap()).unwrap())
        })
        .collect();
    AbHom::new(
        h.clone(),
        h.clone(),
        IntegerMatrix::from_columns(h.generator_count(), &cols),
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn unitors_are_isomorphisms(p in prime(), s in 0u64..10_000) {
        let m = random_functor(p, s);
        prop_assert!(left_unitor(&m).unwrap().is_isomorphism());
        prop_assert!(right_unitor(&m).unwrap().is_isomorphism());
    }

    #[test]
    fn box_product_is_symmetric(p in prime(), s in 0u64..10_000) {
        let m = random_functor(p, s);
        let n = random_functor(p, s + 1);
        prop_assert_eq!(
            box_product(&m, &n).unwrap().level_invariants(),
            box_product(&n, &m).unwrap().level_invariants()
        );
        let there = swap(&m, &n).unwrap();
        let back = swap(&n, &m).unwrap();
        prop_assert!(there.is_isomorphism());
        prop_assert!(back.compose(&there).unwrap().equals(&MackeyHom::identity(there.source())));
    }

    #[test]
    fn box_product_is_functorial(p in prime(), s in 0u64..10_000) {
        let (a, b, c, n) = (
            random_functor(p, s),
            random_functor(p, s + 1),
            random_functor(p, s + 2),
            random_functor(p, s + 3),
        );
        let f = random_mackey_hom(&a, &b, s).unwrap();
        let g = random_mackey_hom(&b, &c, s + 1).unwrap();
        let whole = box_hom(&g.compose(&f).unwrap(), &n).unwrap();
        let parts = box_hom(&g, &n).unwrap().compose(&box_hom(&f, &n).unwrap()).unwrap();
        prop_assert!(whole.equals(&parts));
        let id = box_hom(&MackeyHom::identity(&a), &n).unwrap();
        prop_assert!(id.equals(&MackeyHom::identity(id.source())));
    }

    #[test]
    fn internal_hom_is_contravariant(p in prime(), s in 0u64..10_000) {
        let (a, b, c, n) = (
            random_functor(p, s),
            random_functor(p, s + 1),
            random_functor(p, s + 2),
            random_functor(p, s + 3),
        );
        let f = random_mackey_hom(&a, &b, s).unwrap();
        let g = random_mackey_hom(&b, &c, s + 1).unwrap();
        let whole = internal_hom_map(&g.compose(&f).unwrap(), &n).unwrap();
        let parts = internal_hom_map(&f, &n)
            .unwrap()
            .compose(&internal_hom_map(&g, &n).unwrap())
            .unwrap();
        prop_assert!(whole.equals(&parts));
        let id = internal_hom_map(&MackeyHom::identity(&a), &n).unwrap();
        prop_assert!(id.equals(&MackeyHom::identity(id.source())));
    }

    #[test]
    fn internal_hom_is_left_exact(p in prime(), s in 0u64..10_000) {
        let m = random_functor(p, s);
        let n = random_functor(p, s + 1);
        let q = random_functor(p, s + 2);
        let f = random_mackey_hom(&m, &n, s).unwrap();
        // 0 → ker f → M → im f → 0
        let (_, incl) = kernel(&f);
        let (_, onto, _) = image(&f);
        let on_onto = internal_hom_map(&onto, &q).unwrap();
        let on_incl = internal_hom_map(&incl, &q).unwrap();
        prop_assert!(kernel(&on_onto).0.is_zero());
        prop_assert!(on_incl.compose(&on_onto).unwrap().is_zero());
        let h = cpmackey::homalg::homology_at(&on_onto, &on_incl).unwrap();
        prop_assert!(h.is_zero(), "homology {:?}", h.level_invariants());
    }

    #[test]
    fn fixed_points_commute_with_internal_hom(p in prop::sample::select(vec![2u64, 3]), s in 0u64..10_000) {
        let spec = |seed| RandomSpec { max_free: 1, ..RandomSpec::new(p, seed) };
        let c = random_module(&spec(s)).unwrap();
        let d = random_module(&spec(s + 1)).unwrap();
        let lhs = internal_hom(&fixed_point(p, &c).unwrap(), &fixed_point(p, &d).unwrap()).unwrap();
        let rhs = fixed_point(p, &hom_module(p, &c, &d)).unwrap();
        prop_assert_eq!(lhs.underlying(), rhs.underlying());
        prop_assert_eq!(lhs.conj().matrix(), rhs.conj().matrix());
        let fixed = lift_through(lhs.res(), rhs.res()).unwrap();
        let under = AbHom::identity(lhs.underlying().clone());
        let iso = MackeyHom::new(lhs.clone(), rhs, fixed, under).unwrap();
        prop_assert!(iso.is_isomorphism());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn adjunction_round_trip(s in 0u64..10_000) {
        let m = random_functor(2, s);
        let n = random_functor(2, s + 1);
        let target = mod_two(&random_functor(2, s + 2));
        let adj = Adjunction::new(&m, &n, &target).unwrap();
        let left = adj.left.group();
        let right = adj.right.group();
        prop_assert_eq!(left.invariant_factors(), right.invariant_factors());
        if let Some(elems) = left.elements(64) {
            for e in elems {
                let back = adj.backward_element(&adj.forward_element(&e).unwrap()).unwrap();
                prop_assert!(left.elements_equal(&e, &back));
            }
        }
        if let Some(elems) = right.elements(64) {
            for e in elems {
                let back = adj.forward_element(&adj.backward_element(&e).unwrap()).unwrap();
                prop_assert!(right.elements_equal(&e, &back));
            }
        }
    }
}
