//! Exact verification and computation for Hom-associative and Hom-Lie
//! algebras: defining identities, second cohomology, truncated formal
//! deformations, Hom-Poisson structures and the q-deformed Witt and Virasoro
//! families.

pub mod catalog;
pub mod cochain;
pub mod deform;
pub mod error;
pub mod exactlin;
pub mod graded;
pub mod homcore;
pub mod hompoisson;
pub mod report;
pub mod sample;

pub use error::{Error, Result};
