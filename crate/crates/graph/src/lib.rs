//! Directed graphs, separated graphs and triples `(E, C, S)`, with the presentations of their
//! graph monoids, the row-finite replacement `Ẽ` of infinite emitters, and built-in graphs.

pub mod builtin;
pub mod error;
pub mod graph;
pub mod parse;
pub mod present;
pub mod tilde;

pub use builtin::{builtin_graph, Builtin};
pub use error::GraphError;
pub use graph::{unseparation, Arrow, DirectedGraph, SSTriple, SeparatedGraph};
pub use parse::{graph_to_text, parse_graph, Emitter, GraphFile};
pub use present::{present_emitters, present_finitely_separated, present_triple, q_name};
pub use tilde::{chain_out_degree, tilde_construction, w_name};
