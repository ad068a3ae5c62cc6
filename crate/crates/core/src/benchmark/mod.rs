//! Synthetic networks with planted communities.

mod lfr;
mod mlfr;
mod powerlaw;
mod spec;
mod wiring;

pub use lfr::{generate_gn, generate_lfr_base, plan_base_layer, GroundTruth, LayerPlan};
pub use mlfr::{
    distribute_layers, distribute_pair_list, generate_mlfr, layer_count_cdf, swap_degrees, swap_memberships, PairList,
};
pub use powerlaw::{community_sizes, degree_sequence, PowerLaw};
pub use spec::BenchmarkSpec;
