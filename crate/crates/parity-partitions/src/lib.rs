//! Integer partitions whose parts are separated by parity.
//!
//! A partition has *parity-separated* parts when every part of one parity is
//! larger than every part of the other parity. This crate models the classes
//! of such partitions (each parity block may be unrestricted, distinct, or
//! required to contain a repeat), a family of weight-preserving and
//! weight-shifting injections between those classes together with their
//! inverses and exact image characterizations, and a verification harness
//! that checks every claimed counting relation exhaustively at desk scale.
//!
//! Modules:
//! - [`partition`]: canonical partition values and part statistics.
//! - [`classes`]: class specifications, membership, enumeration, counting.
//! - [`maps`]: the injections, their inverses, and image predicates.
//! - [`verify`]: exhaustive checks producing machine-readable reports.

pub mod classes;
pub mod maps;
pub mod partition;
pub mod verify;

pub use classes::{ClassError, ClassSpec};
pub use maps::{CaseTrace, ImageWitness, MapError, MapId};
pub use partition::{ParseError, Partition, PartitionError, PartitionStats};
