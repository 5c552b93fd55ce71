//! Projective resolutions, (co)homology, Ext and Tor.

mod cover;

pub use cover::{
    cohomological_cover, constant_z, cover, cover_generators, free_cover, hom_from_constant,
    hom_from_fixed_element, hom_from_underlying_element, CoverKind, CoverStrategy,
};

use crate::abgrp::lift_through;
use crate::error::{Error, Result};
use crate::mackey::{cokernel, kernel, prune, zero, CpMackeyFunctor, MackeyHom};
use crate::monoidal::{box_hom_with, box_product, internal_hom_map_with, InternalHom};

/// How a resolution picks its free modules.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ResolutionOptions {
    /// Replace each kernel by its minimal presentation before covering it.
    pub prune_kernels: bool,
    pub strategy: CoverStrategy,
    pub kind: CoverKind,
}

impl Default for ResolutionOptions {
    fn default() -> Self {
        ResolutionOptions {
            prune_kernels: true,
            strategy: CoverStrategy::Reduced,
            kind: CoverKind::Mackey,
        }
    }
}

impl ResolutionOptions {
    pub fn cohomological() -> Self {
        ResolutionOptions {
            kind: CoverKind::Cohomological,
            ..Self::default()
        }
    }
}

/// `d_0: P_0 → M`, `d_1: P_1 → P_0`, …
#[derive(Clone, Debug)]
pub struct MackeyComplex {
    pub augmentation_target: CpMackeyFunctor,
    pub differentials: Vec<MackeyHom>,
}

impl MackeyComplex {
    /// `P_i`, the source of `d_i`.
    pub fn term(&self, i: usize) -> &CpMackeyFunctor {
        self.differentials[i].source()
    }

    pub fn len(&self) -> usize {
        self.differentials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.differentials.is_empty()
    }

    /// Consecutive composites vanish and `d_0` is onto.
    pub fn is_complex(&self) -> bool {
        self.differentials.first().is_none_or(|d| d.is_surjective())
            && self
                .differentials
                .windows(2)
                .all(|w| w[0].compose(&w[1]).is_ok_and(|c| c.is_zero()))
    }
}

/// `resolution(M, n)` with `n + 1` differentials.
pub fn resolution(m: &CpMackeyFunctor, n: usize) -> Result<MackeyComplex> {
    resolution_with(m, n, ResolutionOptions::default())
}

pub fn resolution_with(
    m: &CpMackeyFunctor,
    n: usize,
    opts: ResolutionOptions,
) -> Result<MackeyComplex> {
    let mut differentials = Vec::with_capacity(n + 1);
    differentials.push(cover(m, opts.kind, opts.strategy)?);
    for _ in 0..n {
        let last = differentials.last().expect("nonempty");
        let (k, mut incl) = kernel(last);
        let cover_of = if opts.prune_kernels {
            let pruned = prune(&k);
            incl = incl.compose(&pruned.from)?;
            pruned.functor
        } else {
            k
        };
        let c = cover(&cover_of, opts.kind, opts.strategy)?;
        differentials.push(incl.compose(&c)?);
    }
    Ok(MackeyComplex {
        augmentation_target: m.clone(),
        differentials,
    })
}

/// `ker g / im f`.
pub fn homology_at(f: &MackeyHom, g: &MackeyHom) -> Result<CpMackeyFunctor> {
    if !g.compose(f)?.is_zero() {
        return Err(Error::NonzeroComposite);
    }
    let (k, incl) = kernel(g);
    let ff = lift_through(f.fixed_map(), incl.fixed_map())?;
    let fu = lift_through(f.underlying_map(), incl.underlying_map())?;
    let lifted = MackeyHom::new(f.source().clone(), k, ff, fu)?;
    Ok(cokernel(&lifted).0)
}

fn check_kind(kind: CoverKind, functors: &[&CpMackeyFunctor]) -> Result<()> {
    if kind == CoverKind::Cohomological && functors.iter().any(|m| !m.is_cohomological()) {
        return Err(Error::NotCohomological);
    }
    Ok(())
}

/// `Ext^i(M, N)` for every `i` in `degrees`, from one resolution of `M`.
///
/// Both arguments are replaced by their minimal presentations first.
pub fn ext_degrees(
    degrees: &[usize],
    m: &CpMackeyFunctor,
    n: &CpMackeyFunctor,
    opts: ResolutionOptions,
) -> Result<Vec<CpMackeyFunctor>> {
    m.same_prime(n)?;
    check_kind(opts.kind, &[m, n])?;
    let Some(&top) = degrees.iter().max() else {
        return Ok(Vec::new());
    };
    if m.is_zero() {
        return Ok(vec![zero(m.prime())?; degrees.len()]);
    }
    let (m, n) = (&prune(m).functor, &prune(n).functor);
    let res = resolution_with(m, top + 1, opts)?;
    let homs: Vec<InternalHom> = (0..=top + 1)
        .map(|j| InternalHom::new(res.term(j), n))
        .collect::<Result<_>>()?;
    // delta[j] = [d_{j+1}, N] : [P_j, N] → [P_{j+1}, N]
    let delta: Vec<MackeyHom> = (0..=top)
        .map(|j| internal_hom_map_with(&res.differentials[j + 1], &homs[j], &homs[j + 1]))
        .collect::<Result<_>>()?;
    degrees
        .iter()
        .map(|&i| {
            if i == 0 {
                Ok(kernel(&delta[0]).0)
            } else {
                homology_at(&delta[i - 1], &delta[i])
            }
        })
        .collect()
}

/// `Tor_i(M, N)` for every `i` in `degrees`, from one resolution of `M`.
///
/// Both arguments are replaced by their minimal presentations first.
pub fn tor_degrees(
    degrees: &[usize],
    m: &CpMackeyFunctor,
    n: &CpMackeyFunctor,
    opts: ResolutionOptions,
) -> Result<Vec<CpMackeyFunctor>> {
    m.same_prime(n)?;
    check_kind(opts.kind, &[m, n])?;
    let Some(&top) = degrees.iter().max() else {
        return Ok(Vec::new());
    };
    if m.is_zero() {
        return Ok(vec![zero(m.prime())?; degrees.len()]);
    }
    let (m, n) = (&prune(m).functor, &prune(n).functor);
    let res = resolution_with(m, top + 1, opts)?;
    let boxes: Vec<CpMackeyFunctor> = (0..=top + 1)
        .map(|j| box_product(res.term(j), n))
        .collect::<Result<_>>()?;
    // del[j] = d_{j+1} ⊠ N : P_{j+1} ⊠ N → P_j ⊠ N
    let del: Vec<MackeyHom> = (0..=top)
        .map(|j| box_hom_with(&res.differentials[j + 1], n, &boxes[j + 1], &boxes[j]))
        .collect::<Result<_>>()?;
    degrees
        .iter()
        .map(|&i| {
            if i == 0 {
                Ok(cokernel(&del[0]).0)
            } else {
                homology_at(&del[i], &del[i - 1])
            }
        })
        .collect()
}

fn single(v: Result<Vec<CpMackeyFunctor>>) -> Result<CpMackeyFunctor> {
    v.map(|mut v| v.pop().expect("one degree requested"))
}

pub fn ext(i: usize, m: &CpMackeyFunctor, n: &CpMackeyFunctor) -> Result<CpMackeyFunctor> {
    single(ext_degrees(&[i], m, n, ResolutionOptions::default()))
}

pub fn tor(i: usize, m: &CpMackeyFunctor, n: &CpMackeyFunctor) -> Result<CpMackeyFunctor> {
    single(tor_degrees(&[i], m, n, ResolutionOptions::default()))
}

/// Ext in the category of cohomological Mackey functors.
pub fn ext_coh(i: usize, m: &CpMackeyFunctor, n: &CpMackeyFunctor) -> Result<CpMackeyFunctor> {
    single(ext_degrees(&[i], m, n, ResolutionOptions::cohomological()))
}

/// Homology of (cohomological resolution of `M`) ⊠ `N`.
pub fn tor_coh(i: usize, m: &CpMackeyFunctor, n: &CpMackeyFunctor) -> Result<CpMackeyFunctor> {
    single(tor_degrees(&[i], m, n, ResolutionOptions::cohomological()))
}
