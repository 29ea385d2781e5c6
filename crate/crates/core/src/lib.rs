//! Cut-based upper bounds on conferencing-key rates in quantum networks.
//!
//! Each edge of a network carries a quantum channel whose Choi matrix has a
//! relative entropy of entanglement (REE). The sum of key rates that any set of
//! senders can share with a common set of receivers is bounded by the smallest
//! total REE crossing a cut that separates senders from receivers.
//!
//! - [`quantum`]: linear algebra, entropies, Choi matrices, Bell-diagonal REE.
//! - [`channel`]: catalog of channel models and their REE edge weights.
//! - [`network`]: network graph, cuts, cut-sets, multi-edge REE flow.
//! - [`solver`]: min-cut evaluation by enumeration and by max-flow.
//! - [`report`]: JSON encoding of reports.

pub mod channel;
pub mod error;
pub mod network;
pub mod quantum;
pub mod report;
pub mod solver;

pub use error::{Error, Result};
