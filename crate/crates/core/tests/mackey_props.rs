mod common;

use cpmackey::homalg::{free_cover, homology_at};
use cpmackey::mackey::{cokernel, direct_sum, image, kernel, prune, CpMackeyFunctor, MackeyHom};
use cpmackey::randgen::random_mackey_hom;
use num_traits::Signed;
use proptest::prelude::*;

use common::random_functor;

fn prime() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![2u64, 3, 5])
}

fn revalidate(m: &CpMackeyFunctor) -> bool {
    CpMackeyFunctor::new(m.prime(), m.res().clone(), m.tr().clone(), m.conj().clone()).is_ok()
}

fn revalidate_hom(f: &MackeyHom) -> bool {
    MackeyHom::new(
        f.source().clone(),
        f.target().clone(),
        f.fixed_map().clone(),
        f.underlying_map().clone(),
    )
    .is_ok()
}

#[test]
fn hundred_random_functors_per_prime() {
    for p in [2u64, 3, 5] {
        for seed in 0..100 {
            let m = random_functor(p, seed);
            assert!(revalidate(&m), "p={p} seed={seed}");
            assert!(free_cover(&m).unwrap().is_surjective(), "p={p} seed={seed}");
        }
    }
}

#[test]
fn hundred_random_homs() {
    for k in 0..100u64 {
        let p = [2u64, 3, 5][(k % 3) as usize];
        let m = random_functor(p, 2 * k);
        let n = random_functor(p, 2 * k + 1);
        let f = random_mackey_hom(&m, &n, k).unwrap();
        assert!(revalidate_hom(&f), "k={k}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn composition_laws(p in prime(), s in 0u64..10_000) {
        let (a, b, c, d) = (
            random_functor(p, s),
            random_functor(p, s + 1),
            random_functor(p, s + 2),
            random_functor(p, s + 3),
        );
        let f = random_mackey_hom(&a, &b, s).unwrap();
        let f2 = random_mackey_hom(&a, &b, s + 7).unwrap();
        let f3 = random_mackey_hom(&a, &b, s + 8).unwrap();
        let g = random_mackey_hom(&b, &c, s + 1).unwrap();
        let h = random_mackey_hom(&c, &d, s + 2).unwrap();
        prop_assert!(MackeyHom::identity(&b).compose(&f).unwrap().equals(&f));
        prop_assert!(f.compose(&MackeyHom::identity(&a)).unwrap().equals(&f));
        let left = h.compose(&g).unwrap().compose(&f).unwrap();
        let right = h.compose(&g.compose(&f).unwrap()).unwrap();
        prop_assert!(left.equals(&right));
        prop_assert!(f.add(&f2).unwrap().equals(&f2.add(&f).unwrap()));
        let l = f.add(&f2).unwrap().add(&f3).unwrap();
        let r = f.add(&f2.add(&f3).unwrap()).unwrap();
        prop_assert!(l.equals(&r));
        prop_assert!(f.sub(&f).unwrap().is_zero());
    }

    #[test]
    fn biproduct_identities(p in prime(), s in 0u64..10_000) {
        let m = random_functor(p, s);
        let n = random_functor(p, s + 1);
        let b = direct_sum(&m, &n).unwrap();
        let c = |x: &MackeyHom, y: &MackeyHom| x.compose(y).unwrap();
        prop_assert!(c(&b.proj1, &b.inj1).equals(&MackeyHom::identity(&m)));
        prop_assert!(c(&b.proj2, &b.inj2).equals(&MackeyHom::identity(&n)));
        prop_assert!(c(&b.proj1, &b.inj2).is_zero());
        prop_assert!(c(&b.proj2, &b.inj1).is_zero());
        let sum = c(&b.inj1, &b.proj1).add(&c(&b.inj2, &b.proj2)).unwrap();
        prop_assert!(sum.equals(&MackeyHom::identity(&b.sum)));
    }

    #[test]
    fn kernel_cokernel_sequence_is_exact(p in prime(), s in 0u64..10_000) {
        let m = random_functor(p, s);
        let n = random_functor(p, s + 1);
        let f = random_mackey_hom(&m, &n, s).unwrap();
        let (_, incl) = kernel(&f);
        let (_, proj) = cokernel(&f);
        prop_assert!(kernel(&incl).0.is_zero());
        prop_assert!(f.compose(&incl).unwrap().is_zero());
        prop_assert!(homology_at(&incl, &f).unwrap().is_zero());
        prop_assert!(homology_at(&f, &proj).unwrap().is_zero());
        prop_assert!(proj.is_surjective());
        let (_, onto, into) = image(&f);
        prop_assert!(into.compose(&onto).unwrap().equals(&f));
        prop_assert!(onto.is_surjective());
        prop_assert!(kernel(&into).0.is_zero());
    }

    #[test]
    fn prune_gives_minimal_isomorphic_presentation(p in prime(), s in 0u64..10_000) {
        let m = random_functor(p, s);
        let pr = prune(&m);
        prop_assert!(pr.functor.is_minimal());
        for level in [pr.functor.fixed(), pr.functor.underlying()] {
            let r = level.relations();
            prop_assert!(level.is_diagonal());
            for j in 0..r.cols() {
                prop_assert!(r.get(j, j).abs() >= 2.into());
            }
        }
        prop_assert!(pr.to.compose(&pr.from).unwrap().equals(&MackeyHom::identity(&pr.functor)));
        prop_assert!(pr.from.compose(&pr.to).unwrap().equals(&MackeyHom::identity(&m)));
        prop_assert_eq!(pr.functor.level_invariants(), m.level_invariants());
    }
}
