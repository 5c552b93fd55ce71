//! Exact homological algebra of Mackey functors for a cyclic group of prime order.
//!
//! Everything is computed over the integers with arbitrary precision. The
//! layers build on each other:
//!
//! - [`abgrp`]: integer matrices, Smith normal form, finitely generated abelian groups
//! - [`mackey`]: `C_p`-Mackey functors, homomorphisms, kernels, cokernels and `prune`
//! - [`monoidal`]: box product, internal hom and the adjunction between them
//! - [`homalg`]: free covers, resolutions, Ext and Tor, and the cohomological variants
//! - [`randgen`]: seeded random functors and homomorphisms
//! - [`cli`]: JSON documents, the periodicity experiment and the command line

pub mod abgrp;
pub mod cli;
pub mod error;
pub mod homalg;
pub mod mackey;
pub mod monoidal;
pub mod randgen;

pub use abgrp::{AbHom, Element, FgAbGroup, HomGroup, IntegerMatrix};
pub use error::{Axiom, Error, Result, Square};
pub use mackey::{CpMackeyFunctor, MackeyHom};
