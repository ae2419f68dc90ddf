//! Exact computations for the Gelfand–Zeitlin system of `Fl(1,n;n+1)`:
//! Novikov-field arithmetic, ladder diagrams and the GZ face lattice, fiber
//! topology, the dimension ledger behind the pseudocycle argument, and
//! critical points of bulk-deformed disk potentials.

pub mod face;
pub mod ladder;
pub mod novikov;
pub mod par;
pub mod polytope;
pub mod potential;
pub mod scalar;
pub mod strata;

pub use face::{FaceDescriptor, Filling};
pub use novikov::{NovikovElement, NovikovError, Valuation};
pub use scalar::{ComplexRational, Rational};
