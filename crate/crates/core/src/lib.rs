//! Archimedean polyhedra as quotients of regular abstract polytopes.
//!
//! A polyhedron is held as a [`FlagGraph`]; its monodromy group (the
//! permutation group generated by the exchange maps) is the automorphism
//! group of its minimal regular cover. The crate builds the sporadic
//! Archimedean solids, computes those groups exactly, checks the
//! stabilizer-word and substitution-map constructions, and classifies
//! Petrie schemes.

pub mod builders;
pub mod catalog;
pub mod error;
pub mod flagcore;
pub mod permgrp;
pub mod petrie;
pub mod quotient;
pub mod word;

pub use error::{Error, Result};
pub use flagcore::{
    FaceId, Faces, Flag, FlagGraph, FlagOrbits, ValidationReport, VertexSymbol, Violation,
};
pub use permgrp::{BigCount, Perm, PermGroup};
pub use quotient::{CoverReport, MonodromyRep, PsiMap, SchlafliType};
pub use word::Word;
