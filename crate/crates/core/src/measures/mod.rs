//! Node and edge measures for single- and multi-layered networks.

mod centrality;
mod edge;
mod multilayer;
mod neighbourhood;

pub use centrality::{
    betweenness, betweenness_all, closeness, degree_centrality, hop_distances, social_position, BetweennessNorm,
    Direction, SocialPositionParams,
};
pub use edge::{clecc, clecc_with, ecc, triangle_ratio, CleccDenominator};
pub use multilayer::{cdc, clcc, mdc, MdcVersion};
pub use neighbourhood::{layer_neighbourhood, link_counts, multi_neighbourhood, LinkCounts, NeighbourhoodMode};

pub(crate) use neighbourhood::{all_any_neighbourhoods, check_alpha};
