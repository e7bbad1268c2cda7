//! JSON documents, DOT pictures and the `properad-lab` command line.

pub mod cli;
pub mod dot;
pub mod json;

pub use dot::{emit_dot, graph_dot, nested_dot, surface_dot, Caption};
pub use json::{parse, serialize, Codec, Document, IoError, Presentation};
