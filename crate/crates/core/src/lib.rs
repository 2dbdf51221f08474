//! Independence and dissociation numbers of graphs: exact solvers, extremal
//! families, gadget expansion, recognizers, rational bounds and surveys.

#![allow(non_snake_case)]

pub mod bounds;
pub mod error;
pub mod gadgets;
pub mod generators;
pub mod graph;
pub mod recognize;
pub mod solvers;
pub mod survey;

pub use error::{Error, Result};
pub use graph::{classify, induced_subgraph, Graph, GraphClass, VertexSet};
