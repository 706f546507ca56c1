//! Betti tables of the closed-form free resolutions attached to a graded
//! morphism `φ: F → G` of free modules over a polynomial ring.
//!
//! Everything is computed by combinatorics and exact arithmetic: partition
//! surgery enumerates the terms of the Lascoux resolution of a determinantal
//! ring `R/I_i(φ)`, semistandard-tableau enumeration grades every Schur
//! module, the Eagon–Northcott/Buchsbaum–Rim family is spliced term by term
//! (and, over exact rationals, differential by differential), and the
//! mapping-cone assemblies build resolutions of `∧²M`, `S_2M⊗I_t` and the
//! normal module for `M = coker(φ*)`. No floating point anywhere.
//!
//! Modules:
//! - [`partitions`]: partition arithmetic, the `I → I'` surgery, rank formulas
//! - [`schur`]: Pieri expansions, SSYT enumeration, Schur polynomial evaluation
//! - [`graded`]: graded free modules, complexes, Hilbert numerators, rendering
//! - [`lascoux`]: the Lascoux and Eagon–Northcott/Buchsbaum–Rim families
//! - [`koszul`]: explicit differentials over exact rationals and their checks
//! - [`assembly`]: generalized mapping cones and the derived resolutions
//! - [`cli`]: the command-line front end and the invariant sweep

pub mod assembly;
pub mod cli;
mod error;
pub mod graded;
pub mod koszul;
pub mod lascoux;
pub mod par;
pub mod partitions;
pub mod ratmat;
pub mod schur;

pub use error::Error;
pub use graded::{ComplexSpec, GradedFreeModule, LaurentPoly, Minimality, MorphismSpec};
pub use partitions::Partition;
