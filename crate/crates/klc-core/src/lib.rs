//! Exact computational algebra for Hecke-algebra canonical bases over the
//! two-parameter-free Laurent ring `Z[u, u^-1]`, together with the symmetric
//! group combinatorics (RSK, jeu de taquin, growth rules) that labels the
//! resulting cells.
//!
//! The crate is organised bottom-up:
//!
//! * [`laurent`]: the coefficient ring `A = Z[u, u^-1]` with its bar involution.
//! * [`permgrp`]: symmetric group elements, words, parabolic decompositions,
//!   Bruhat order, and window notation for the extended affine group.
//! * [`icengine`]: the generic triangular solver that produces the unique
//!   bar-invariant basis of a based module with bounded below order.
//! * [`hecke`]: the Hecke algebra of `S_n`, its bar involution, and the
//!   canonical basis.
//! * [`wgraph`]: W-graphs, their module action, cells, subquotients, and
//!   isomorphism testing.
//! * [`tableau`]: standard tableaux with arbitrary distinct integer entries,
//!   insertion, jeu de taquin, evacuation, growth rules, and cell labels.
//! * [`induce`]: the induced-module machinery, its canonical basis, towers of
//!   inductions, Mackey subgraphs, and the symmetric/exterior classification.
//! * [`oracles`]: independent reference implementations used to cross-check
//!   the fast paths.

pub mod icengine;
pub mod induce;
pub mod laurent;
pub mod oracles;
pub mod permgrp;
pub mod tableau;
pub mod wgraph;

pub mod hecke;
