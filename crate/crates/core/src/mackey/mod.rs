//! `C_p`-Mackey functors and their homomorphisms.

mod constructors;
mod functor;
mod hom;
mod render;

pub use constructors::{
    burnside, complex_representation, fixed_point, make_canonical, orbit, real_representation,
    underlying_free, zero, zero_on_underlying, CanonicalKind,
};
pub use functor::CpMackeyFunctor;
pub use hom::MackeyHom;
pub use render::render_hom;

use crate::abgrp::{self, lift_through, AbHom, FgAbGroup, IntegerMatrix};
use crate::error::Result;

/// `M ⊕ N` with its injections and projections.
#[derive(Clone, Debug)]
pub struct Biproduct {
    pub sum: CpMackeyFunctor,
    pub inj1: MackeyHom,
    pub inj2: MackeyHom,
    pub proj1: MackeyHom,
    pub proj2: MackeyHom,
}

pub fn direct_sum(m: &CpMackeyFunctor, n: &CpMackeyFunctor) -> Result<Biproduct> {
    m.same_prime(n)?;
    let sum = direct_sum_all(m.prime(), &[m.clone(), n.clone()]);
    let (fi1, fi2, fp1, fp2) = abgrp::direct_sum_maps(m.fixed(), n.fixed());
    let (ui1, ui2, up1, up2) = abgrp::direct_sum_maps(m.underlying(), n.underlying());
    let hom = |s: &CpMackeyFunctor, t: &CpMackeyFunctor, f: AbHom, u: AbHom| {
        MackeyHom::new_unchecked(s.clone(), t.clone(), f, u)
    };
    Ok(Biproduct {
        inj1: hom(m, &sum, fi1, ui1),
        inj2: hom(n, &sum, fi2, ui2),
        proj1: hom(&sum, m, fp1, up1),
        proj2: hom(&sum, n, fp2, up2),
        sum,
    })
}

/// Direct sum of any number of functors over the same prime, with
/// block-diagonal structure maps. An empty list gives the zero functor.
pub fn direct_sum_all(p: u64, summands: &[CpMackeyFunctor]) -> CpMackeyFunctor {
    let fixed = FgAbGroup::direct_sum_all(
        &summands
            .iter()
            .map(|m| m.fixed().clone())
            .collect::<Vec<_>>(),
    );
    let underlying = FgAbGroup::direct_sum_all(
        &summands
            .iter()
            .map(|m| m.underlying().clone())
            .collect::<Vec<_>>(),
    );
    let block = |pick: &dyn Fn(&CpMackeyFunctor) -> &AbHom| {
        let blocks: Vec<IntegerMatrix> =
            summands.iter().map(|m| pick(m).matrix().clone()).collect();
        IntegerMatrix::block_diag_all(&blocks)
    };
    let res = AbHom::new_unchecked(fixed.clone(), underlying.clone(), block(&|m| m.res()));
    let tr = AbHom::new_unchecked(underlying.clone(), fixed, block(&|m| m.tr()));
    let conj = AbHom::new_unchecked(underlying.clone(), underlying, block(&|m| m.conj()));
    CpMackeyFunctor::new_unchecked(p, res, tr, conj)
}

/// Levelwise kernel with its inclusion; structure maps are lifted through
/// the level inclusions.
pub fn kernel(f: &MackeyHom) -> (CpMackeyFunctor, MackeyHom) {
    let m = f.source();
    let (_, inc_f) = abgrp::kernel(f.fixed_map());
    let (_, inc_u) = abgrp::kernel(f.underlying_map());
    let lift =
        |g: AbHom, through: &AbHom| lift_through(&g, through).expect("kernel is a subfunctor");
    let res = lift(m.res().compose(&inc_f).unwrap(), &inc_u);
    let tr = lift(m.tr().compose(&inc_u).unwrap(), &inc_f);
    let conj = lift(m.conj().compose(&inc_u).unwrap(), &inc_u);
    let k = CpMackeyFunctor::new_unchecked(m.prime(), res, tr, conj);
    let incl = MackeyHom::new_unchecked(k.clone(), m.clone(), inc_f, inc_u);
    (k, incl)
}

/// Levelwise cokernel with its projection; structure maps keep the target's matrices.
pub fn cokernel(f: &MackeyHom) -> (CpMackeyFunctor, MackeyHom) {
    let n = f.target();
    let (cf, pf) = abgrp::cokernel(f.fixed_map());
    let (cu, pu) = abgrp::cokernel(f.underlying_map());
    let res = AbHom::new(cf.clone(), cu.clone(), n.res().matrix().clone())
        .expect("restriction descends to the cokernel");
    let tr = AbHom::new(cu.clone(), cf, n.tr().matrix().clone())
        .expect("transfer descends to the cokernel");
    let conj = AbHom::new(cu.clone(), cu, n.conj().matrix().clone())
        .expect("conjugation descends to the cokernel");
    let c = CpMackeyFunctor::new_unchecked(n.prime(), res, tr, conj);
    let proj = MackeyHom::new_unchecked(n.clone(), c.clone(), pf, pu);
    (c, proj)
}

/// Image of `f` as a quotient of its source, with `source → image → target`.
pub fn image(f: &MackeyHom) -> (CpMackeyFunctor, MackeyHom, MackeyHom) {
    let (_, incl) = kernel(f);
    let (img, proj) = cokernel(&incl);
    let into = MackeyHom::new_unchecked(
        img.clone(),
        f.target().clone(),
        AbHom::new_unchecked(
            img.fixed().clone(),
            f.target().fixed().clone(),
            f.fixed_map().matrix().clone(),
        ),
        AbHom::new_unchecked(
            img.underlying().clone(),
            f.target().underlying().clone(),
            f.underlying_map().matrix().clone(),
        ),
    );
    (img, proj, into)
}

/// Result of [`prune`]: the minimal functor and inverse isomorphisms.
#[derive(Clone, Debug)]
pub struct Pruned {
    pub functor: CpMackeyFunctor,
    /// original → pruned
    pub to: MackeyHom,
    /// pruned → original
    pub from: MackeyHom,
}

/// Replaces both levels by their minimal presentations.
pub fn prune(m: &CpMackeyFunctor) -> Pruned {
    let (_, to_f, from_f) = abgrp::minimal_presentation(m.fixed());
    let (_, to_u, from_u) = abgrp::minimal_presentation(m.underlying());
    let res = to_u
        .compose(&m.res().compose(&from_f).unwrap())
        .unwrap()
        .reduced();
    let tr = to_f
        .compose(&m.tr().compose(&from_u).unwrap())
        .unwrap()
        .reduced();
    let conj = to_u
        .compose(&m.conj().compose(&from_u).unwrap())
        .unwrap()
        .reduced();
    let functor = CpMackeyFunctor::new_unchecked(m.prime(), res, tr, conj);
    Pruned {
        to: MackeyHom::new_unchecked(m.clone(), functor.clone(), to_f, to_u),
        from: MackeyHom::new_unchecked(functor.clone(), m.clone(), from_f, from_u),
        functor,
    }
}

/// Conjugates a homomorphism by the prunings of its source and target.
pub fn prune_hom(f: &MackeyHom) -> (Pruned, Pruned, MackeyHom) {
    let ps = prune(f.source());
    let pt = prune(f.target());
    let g = pt.to.compose(&f.compose(&ps.from).unwrap()).unwrap();
    let g = MackeyHom::new_unchecked(
        g.source().clone(),
        g.target().clone(),
        g.fixed_map().reduced(),
        g.underlying_map().reduced(),
    );
    (ps, pt, g)
}

pub fn is_zero(m: &CpMackeyFunctor) -> bool {
    m.is_zero()
}

pub fn is_isomorphism(f: &MackeyHom) -> bool {
    f.is_isomorphism()
}
