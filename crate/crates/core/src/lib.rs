//! Exact evaluation of the Kuperberg-type invariant `K_H` of π-colored
//! Heegaard diagrams, for involutory Hopf π-coalgebras of finite type.
//!
//! The crate is organised bottom-up:
//!
//! * [`scalar`]: the ground field `Q(i)`.
//! * [`group`]: finite groups, words and homomorphisms.
//! * [`hopf`]: Hopf π-coalgebras as structure constants, their axioms,
//!   integrals and the example algebras.
//! * [`heegaard`]: colored Heegaard diagrams and their moves.
//! * [`invariant`]: tensor-network evaluation of `Z(D)` and `K_H(D)`.
//! * [`oracle`]: brute-force lift counting for function algebras.

pub mod cli;
pub mod fuzz;
pub mod group;
pub mod heegaard;
pub mod hopf;
pub mod invariant;
pub mod io;
pub mod oracle;
pub mod report;
pub mod scalar;
pub mod tensor;

pub use group::{evaluate_word, GroupHom, GroupTable, Sign, Word};
pub use hopf::HopfPiCoalgebra;
pub use report::Report;
pub use scalar::Scalar;
