//! Sequence families for the `seq` command.

use ice20v_core::apm::Symmetry;
use ice20v_core::exactalg::format_rational;
use ice20v_core::genfun::RefinedType;
use ice20v_core::icemodel::{count_20v, count_pentagon, count_rect_dwbc4, count_symmetry, BoundaryKind};
use ice20v_core::tilings::{domino_matchings, t4_count, t4_refined, triangle_count, Region};
use ice20v_core::{Error, Result};
use num_bigint::BigInt;

pub const FAMILIES: [&str; 13] =
    ["A", "B", "p", "N", "sapm1", "tcapm", "sapm3", "sapm4", "htapm", "b_n", "T4", "refined1", "refined2"];

pub struct SeqParams {
    pub max_n: usize,
    pub k: Option<usize>,
    pub b: Option<usize>,
    pub c: Option<usize>,
    pub theta: Option<String>,
}

/// Largest number of terms each family will compute.
pub fn cap(family: &str) -> usize {
    match family {
        "A" => 9,
        "B" => 30,
        "p" => 6,
        "N" => 7,
        "sapm1" | "sapm3" => 5,
        "tcapm" => 6,
        "sapm4" | "htapm" => 4,
        "b_n" => 7,
        "T4" => 30,
        "refined1" | "refined2" => 12,
        _ => 0,
    }
}

fn need(v: Option<usize>, flag: &str) -> Result<usize> {
    v.ok_or_else(|| Error::InvalidParameter(format!("this family needs --{flag}")))
}

fn sym(kind: BoundaryKind, n: usize, s: Symmetry) -> Result<String> {
    count_symmetry(&kind, n, s).map(|v| v.to_string())
}

/// The first `max_n` terms as decimal strings (polynomials for the
/// refined families, rationals for T4 at a rational θ).
pub fn sequence(family: &str, p: &SeqParams) -> Result<Vec<String>> {
    if !FAMILIES.contains(&family) {
        return Err(Error::InvalidParameter(format!("unknown family {family:?}")));
    }
    let limit = cap(family);
    if p.max_n > limit {
        return Err(Error::TooLarge { what: "max-n for this family", limit });
    }
    if family == "N" {
        let (b, c) = (need(p.b, "b")?, need(p.c, "c")?);
        if b + c > 6 {
            return Err(Error::TooLarge { what: "b + c", limit: 6 });
        }
        return Ok((0..p.max_n).map(|a| count_rect_dwbc4(a, b, c).to_string()).collect());
    }
    let theta = match &p.theta {
        Some(t) => Some(ice20v_core::exactalg::parse_rational(t)?),
        None => None,
    };
    (1..=p.max_n)
        .map(|n| -> Result<String> {
            Ok(match family {
                "A" => count_20v(&BoundaryKind::Dwbc1, n)?.to_string(),
                "B" => triangle_count(n)?.to_string(),
                "p" => count_pentagon(n, need(p.k, "k")?).to_string(),
                "sapm1" => sym(BoundaryKind::Dwbc1, n, Symmetry::Sapm)?,
                "tcapm" => sym(BoundaryKind::Dwbc1, n, Symmetry::Tcapm)?,
                "sapm3" => sym(BoundaryKind::Dwbc3, n, Symmetry::Sapm)?,
                "sapm4" => sym(BoundaryKind::Dwbc4, n, Symmetry::Sapm)?,
                "htapm" => sym(BoundaryKind::Dwbc4, n, Symmetry::Htapm)?,
                "b_n" => domino_matchings(&Region::triangle(n))?.to_string(),
                "T4" => match &theta {
                    Some(t) => format_rational(&t4_count(n, t)),
                    None => t4_count(n, &BigInt::from(1)).to_string(),
                },
                "refined1" => t4_refined(n, RefinedType::One).to_string(),
                "refined2" => t4_refined(n, RefinedType::Two).to_string(),
                _ => unreachable!("family checked above"),
            })
        })
        .collect()
}
