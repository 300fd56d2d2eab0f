//! Exact computational algebra for Weyl-orbit correspondences on curves.
//!
//! Everything in this crate is computed over arbitrary-precision integers
//! and rationals; floating point is never used. The main pipeline:
//!
//! * [`rootsys`] — Cartan data of the simple types A–G, invariant forms,
//!   Weyl dimension, Dynkin index, weight multiplicities.
//! * [`weyl`] — Weyl orbits with canonical indexing, Schreier stabilizer
//!   words, linear characters.
//! * [`corr`] — the Schur/Kanev correspondence matrices on an orbit, their
//!   identity suite, lattice quotients and the consolidated invariant report.
//! * [`intlat`] — Smith normal form, saturation, kernels and cokernel
//!   groups of integer matrices.
//! * [`polab`] — polarized integer lattices with a symmetric endomorphism
//!   `u^2 = q u`, restriction of polarizations to the associated sublattice
//!   pair, and the induced-type computation.
//! * [`cover`] — monodromy data of W-Galois covers of a genus-g curve,
//!   validation, genus bookkeeping, random etale cover search.
//! * [`homology`] — integral H_1 of an etale cover with its intersection
//!   form, correspondence/trace endomorphisms, Prym lattices, and the
//!   end-to-end polarization type computation.
//!
//! Group elements act on weights on the right throughout: a word
//! `[i1, i2, ...]` sends `x` to `(x·s_{i1})·s_{i2}…`.

pub mod corr;
pub mod cover;
pub mod homology;
pub mod intlat;
pub mod polab;
pub mod rootsys;
pub mod weyl;

pub use intlat::{FiniteAbelianGroup, IntMat};
