//! Finite groups with operations, groupoids internal to them, coverings
//! and crossed modules, with exhaustive validators and an independent
//! isomorphism oracle.

pub mod algebra;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod groupoid;
pub mod internal;
pub mod io;
pub mod oracle;
pub mod report;
pub mod xmod;

pub use error::{Error, Result};
pub use report::{ValidationReport, Violation};
