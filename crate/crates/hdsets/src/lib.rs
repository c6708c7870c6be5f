//! Finite groups of order 36 and their (36,15,6) Hadamard difference sets.
//!
//! The crate builds small finite groups from textual presentations, does exact
//! integer group-ring arithmetic, and implements two constructions for
//! Hadamard difference sets of order 36: a spread construction over the four
//! order-3 lines of the Sylow 3-subgroup, and a variant built from
//! (3,3,3,1) relative difference sets that only applies when the Sylow
//! 3-subgroup is not normal. Exhaustive searches over both constructions
//! reproduce the classification of all 35 inequivalent (36,15,6) difference
//! sets in the nine groups that contain them, and every result is checked
//! twice: once by group-ring convolution and once by exact
//! representation-theoretic arithmetic over the Eisenstein integers.

pub mod catalog;
pub mod constructions;
pub mod designs;
pub mod groupring;
pub mod groups;
pub mod presentation;
pub mod repcheck;
