//! Schroder-path counts, their LGV determinants, and domino tilings.

mod kasteleyn;
mod region;
mod schroder;

pub use kasteleyn::{kasteleyn_square, KasteleynValue};
pub use region::{domino_matchings, enumerate_tilings, Domino, Region, TilingList};
pub use schroder::{
    conjectured_nabc, extended_triangle_count, restricted_schroder, strip_schroder, t4_by_principal_minors,
    t4_count, t4_refined, triangle_count, triangle_forms, triangle_lgv_matrix, StripSchroderTable,
};
