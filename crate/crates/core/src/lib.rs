//! Neural architecture search by hill climbing over function-preserving
//! network morphisms.
//!
//! The crate is organized bottom-up:
//!
//! - [`tensor`] / [`ops`]: dense f32 tensors and the forward/backward
//!   primitives for every layer kind used by the searched networks.
//! - [`graph`] / [`serialize`]: the architecture DAG, execution, cloning,
//!   and the text + binary-blob model format.
//! - [`morph`]: the four morphism operator families (deepen, widen,
//!   skip-concat, skip-add), uniform sampling, and numerical
//!   function-preservation verification.
//! - [`train`]: momentum SGD with a cosine-annealed learning rate,
//!   evaluation, and epoch accounting.
//! - [`search`]: the hill-climbing loop, the random-network baseline,
//!   retraining from scratch, and snapshot ensembles.
//! - [`data`] / [`config`]: CIFAR-10 ingestion, a synthetic desk-scale
//!   task, augmentation, the default initial model, and run configuration.

pub mod config;
pub mod data;
pub mod error;
pub mod gradcheck;
pub mod graph;
pub mod morph;
pub mod ops;
pub mod rng;
pub mod search;
pub mod serialize;
pub mod tensor;
pub mod train;

pub use error::{Error, Result};
pub use graph::{LayerKind, LayerNode, NetworkGraph, NodeId};
pub use tensor::{GradPair, Tensor};
