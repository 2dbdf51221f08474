//! Constructors for the cycle/clique baselines, the regular ring families,
//! the marked block family and the drawn examples.

mod calg;
mod families;
mod named;
mod random;

pub use calg::{build_calG, gen_K4_star, random_calg_spec, BlockKind, CalGSpec, MarkedGraph};
pub use families::{gen_G_k_ell, gen_Gprime_k_ell, gen_complete, gen_complete_bipartite, gen_cycle, gen_path};
pub use named::{
    heawood, named_graph, petersen, NamedGraph, FIG1_TREE_EDGES, FIG2_LEFT_EDGES, FIG2_LEFT_MARKED, FIG2_RIGHT_EDGES,
    FIG2_RIGHT_MARKED, FIG3_EDGES, FIG3_MARKED, FIGL_EDGES, FIGL_MARKED, NAMES,
};
pub use random::{random_connected_tf_subcubic, random_gnp, random_subcubic, random_triangle_free_cubic};
