//! Twenty-vertex ice configurations on the triangular lattice and their
//! six-vertex relatives.

mod boundary;
mod config;
mod counts;
mod enumerate;
mod kagome;
mod staggered;
mod sweep;
mod vertex;

pub use boundary::{BoundaryKind, BoundarySpec, StaggeredKind};
pub use config::LatticeConfig;
pub use counts::{
    bijection_check, count_20v, count_20v_refined, count_6v, count_6v_refined, count_pentagon,
    count_rect_dwbc4, count_symmetry, verify_refinement_theorem,
};
pub use enumerate::{enumerate_configs, for_each_config, naive_count, ConfigList};
pub use kagome::{verify_kagome, KagomeReport};
pub use staggered::{count_staggered_6v, staggered_check};
pub use sweep::{count_configs, sweep_sum, CheckedCount, Semiring, VertexWeight};
pub use vertex::{classify_vertex, Classification, SixVertexType, VertexEnvironment};
