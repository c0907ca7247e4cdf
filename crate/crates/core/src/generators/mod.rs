//! Graph constructions and graph streams.

mod canon;
mod degree;
mod enumerate;
mod family;
mod random;

pub use canon::canonical_form;
pub use degree::{
    havel_hakimi, is_graphical, is_nu_regular, nu_regular_degrees, nu_regular_graph,
    universal_vertex_sequences, DegreeSequence,
};
pub use enumerate::{
    enumerate_connected_graphs, EnumerationMode, GraphStream, Provenance, CANONICAL_MAX_N,
    LABELED_MAX_N,
};
pub use family::regular_family_graph;
pub use random::{
    derive_seed, random_connected_graph, random_spanning_tree, sampled_stream, RETRY_CAP,
};
