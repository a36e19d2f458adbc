//! auglab: a workbench for generalized augmentations of alternating link
//! diagrams and exact volume arithmetic of generalized belted sums.
//!
//! The crate splits into five layers:
//!
//! - [`diagram`] / [`faces`]: PD codes, the 4-regular plane graph they
//!   encode, and its complementary regions.
//! - [`gate`]: decides whether a diagram is a connected reduced prime
//!   non-2-braid alternating projection, with replayable witnesses for
//!   every failure.
//! - [`dual`] / [`realize`] / [`verify`]: routing of vertical-component
//!   arcs through the dual graph, disjoint planar realization of arc
//!   systems, and an independent geometric check of the result.
//! - [`volume`]: exact rational arithmetic over volume symbols, with the
//!   belted-sum and daisy-chain formulas.
//! - [`cli`]: the `auglab` command-line front end (`check`, `faces`,
//!   `augment`, `volume`).
//!
//! Each major capability has a runnable example under `examples/`.

pub mod augment;
pub mod cli;
pub mod corpus;
pub mod diagram;
pub mod dual;
pub mod faces;
pub mod gate;
pub mod realize;
pub mod verify;
pub mod volume;

pub use diagram::{canonicalize, Dart, LinkDiagram, PdError};
pub use faces::{build_faces, Face, FaceMap};
pub use gate::{check_hypotheses, HypothesisReport};
