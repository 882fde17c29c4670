//! Partition classes defined by residues and multiplicities, their
//! generating functions, bijections, recurrences and q-series identities.
//!
//! Counts are always exact. Every quantity that has a closed form is also
//! available from a brute-force oracle in [`classes`], and the test suites
//! check one against the other.

pub mod bijection;
pub mod classes;
pub mod cli;
pub mod error;
pub mod expansion;
pub mod genfun;
pub mod overpartition;
pub mod golden;
pub mod partition;
pub mod recurrence;
pub mod series;
pub mod verify;
pub mod weighted;

pub use classes::{count, is_member, ClassKind, ClassSpec};
pub use error::{BijectionError, ClassError, ExpansionError, ParseError, SeriesError};
pub use partition::Partition;
pub use series::{FactorSpec, TruncatedSeries};
