//! The extended bicyclic semigroup `C_Z` with an adjoined zero, its shift-continuous
//! topologies and the certificates that separate them.
//!
//! Elements are pairs `(a,b)` of integers plus a zero. Arithmetic is exact `i64` and
//! overflow panics rather than wraps.

pub mod continuity;
pub mod element;
pub mod error;
pub mod oracle;
pub mod sets;
pub mod topology;
pub mod verify;

pub use continuity::{inversion_image, shift_witness, ShiftWitness, Side, SolutionSet};
pub use element::{BicyclicWord, Element, Pair};
pub use error::{Error, Result};
pub use sets::{DSet, QuadrantSet, Sequence, SequencePair, UpSet};
pub use topology::{BaseSet, ComparisonVerdict, Distinctness, Nbhd, TopologySpec};
