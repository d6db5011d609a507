//! Abstract Meaning Representation toolkit: PENMAN parsing and canonical
//! serialization, silver-data validation, Smatch scoring, and corpus
//! filtering, splitting, sampling and statistics.

pub mod corpus;
pub mod graph;
pub mod penman;
pub mod smatch;
pub mod synth;
pub mod validator;

pub use graph::{
    AmrGraph, Concept, Constant, ConstantKind, Edge, GraphError, Role, Target, Triple, Variable,
};
pub use penman::{canonicalize, parse, serialize_canonical, strip_wiki, ParseDiagnostic};
