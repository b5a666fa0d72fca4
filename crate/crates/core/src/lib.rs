//! Construction kit and verifier for finite partial groups and localities.
//!
//! A partial group is a finite carrier with an inversion and a product that
//! is only defined on a prescribed, decidable set of words. This crate
//! builds external and internal semidirect products of partial groups,
//! semidirect products of localities (sparse and ample), and wreath
//! products, and verifies the defining axioms and the calculation rules they
//! support on concrete instances by bounded-exhaustive and oracle-based
//! checks.

pub mod error;
pub mod oracle;
pub mod partial_group;
pub mod perm;
pub mod report;
pub mod sets;
pub mod words;

pub use error::{Error, Result};
pub use oracle::DomainOracle;
pub use partial_group::{Carrier, PartialGroup, SubgroupCheck};
pub use report::{AxiomCheck, AxiomId, CheckOutcome, CheckReport, Evidence, VerificationReport};
pub use sets::ElementSet;
pub use words::{CarrierId, ElementId, Word};
