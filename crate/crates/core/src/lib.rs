//! Exact symbolic kernel for Weil algebras, simplicial infinitesimal
//! objects, and the three approaches to jets over coordinate bundles.

pub mod error;
pub mod identities;
pub mod infinitesimal;
pub mod jets;
pub mod limits;
pub mod linalg;
pub mod par;
pub mod poly;
pub mod prolong;
pub mod report;
pub mod weil;

pub use error::{Error, Result};
