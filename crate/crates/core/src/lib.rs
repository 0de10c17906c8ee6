//! Hypergraph lifting maps as linear transformations between spaces of
//! hyperedge colorings over prime fields, with structural checks and
//! certified 3-uniform Ramsey lower-bound constructions.

pub mod coloring;
pub mod error;
pub mod field;
pub mod lifting;
pub mod linalg;
pub mod ramsey;
pub mod structure;
pub mod subsets;
pub mod suite;

pub use coloring::HyperedgeColoring;
pub use error::{Error, Result};
pub use field::PrimeField;
pub use lifting::{
    apply_lift, lift_matrix, min_kernel_weight, preimage_count, rank_kernel, solve_preimage,
    KernelSummary, LiftSpec,
};
pub use linalg::FieldMatrix;
pub use ramsey::{
    blowup_5color, certify_bound, certify_family, lift_3coloring, verify_avoidance, AvoidanceSpec,
    Certificate, Target,
};
pub use structure::{
    classify_r_behavior, find_clique_minus_edge, find_mono_clique, generate_family,
    induced_color_counts, mono_components, Behavior, Family, MatchMode, PatternHit, RBehavior,
};
pub use subsets::{binom, colex_rank, colex_unrank, pair_parity, subsets_iter, VertexSet};
