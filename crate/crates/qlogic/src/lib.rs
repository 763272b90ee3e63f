//! A workbench for computing with quantum logic on finite-dimensional
//! Hilbert spaces ℂ^d.
//!
//! Three logics live side by side here, all over exactly the same space:
//!
//! * **Quantum**: the lattice L(H) of linear subspaces ([`subspace`]) with
//!   meet = intersection, join = span, negation = orthocomplement. Famously
//!   non-distributive.
//! * **Classical**: the power set of the ray space R(H) ([`rayset`]), with
//!   plain set operations. Finite symbolic elements ("subspace minus finitely
//!   many subspaces" cells) keep everything computable.
//! * **Weakly intuitionistic**: the same ray-set lattice equipped with the
//!   pseudo-negation `~S` (rays orthogonal to all of S) and a weak-Heyting
//!   implication with `S → ⊥ = ~S`.
//!
//! Two more modules make the bridge classical/quantum precise:
//!
//! * [`ideal`] computes the distributive-ideal completion of explicit finite
//!   lattices, the finite testbed for the completion of L(H) that turns out
//!   to be a Boolean algebra.
//! * [`bell`] computes Born-rule probabilities for the spin singlet and
//!   checks the Bell-type inequality that any classical probability function
//!   must satisfy — and quantum values violate.
//!
//! [`formula`] and [`context`] provide a small propositional language that
//! evaluates under any of the three semantics, and [`cli`] wires everything
//! into the `qlogic` binary. Start with the `examples/` directory for
//! runnable tours of each capability.

pub mod bell;
pub mod cli;
pub mod context;
pub mod error;
pub mod exact;
pub mod finite_model;
pub mod formula;
pub mod ideal;
pub mod rayset;
pub mod subspace;
pub mod suite;

pub use error::DimMismatch;
pub use exact::{ComplexRational, Matrix, Vector};
pub use rayset::{embed_r, Ray, RaySet};
pub use subspace::Subspace;
