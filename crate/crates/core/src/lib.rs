//! Exact invariants of iterated torus knots in the standard tight contact
//! structure on the 3-sphere.
//!
//! A knot is a tuple of cabling pairs stored in the preferred framing `C`
//! and convertible to the cabling framing `C'`. From it the crate computes
//! the `(A_i, B_i)` integers, Euler characteristic, maximal Thurston–Bennequin
//! invariant and contact width, the uniform thickness verdict, catalogs of
//! non-thickenable solid tori, edge-rounding slopes, a slice of the
//! Legendrian mountain range, and the cables that are transversally
//! non-simple together with their witness pairs. All arithmetic is exact.
//!
//! ```
//! use itk::{invariants, IteratedTorusKnot};
//!
//! let k: IteratedTorusKnot = "C:(2,3),(7,2)".parse().unwrap();
//! let ab = invariants::compute_ab_recursive(&k);
//! assert_eq!((ab[1].a.to_string(), ab[1].b.to_string()), ("14".into(), "5".into()));
//! assert!(invariants::fails_utp(&k));
//! ```

pub mod cli;
pub mod error;
pub mod invariants;
pub mod knot;
pub mod legendrian;
pub mod oracle;
mod serde_int;
pub mod slope;
pub mod solid_tori;

pub use error::{Error, Result};
pub use invariants::{AbPair, InvariantRow, InvariantTable};
pub use knot::{CablingPair, Frame, IteratedTorusKnot};
pub use legendrian::{LegendrianClass, NonSimpleCabling, Sign, TransverseClass, WitnessPairs};
pub use slope::{Slope, UnimodularMap, UnreducedSlope};
pub use solid_tori::{EdgeRounding, TorusClass, TorusStatus};
