//! Named presets reproducing the figures, plus custom growth about any
//! five-fold center.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::group::{extend_order20, fixed_point, named, stabilizer_of, AffineElement};
use crate::lattice::Coord5;
use crate::tiling::growth::{
    edge_length, orbit_closure, rotate_four_times, rotation_about_k2_k3, weight_tessellation, ClosureOptions,
    TessellationStats,
};
use crate::tiling::{decagon_root, decagon_weight, ConflictReport, Patch};

/// Default growth radius, in edge lengths.
pub const DEFAULT_RADIUS_EDGES: f64 = 4.0;
pub const DEFAULT_ROUNDS: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Figure {
    Fig4,
    Fig5,
    Fig6,
    Fig7,
    Fig8,
    Fig9,
}

impl Figure {
    pub const ALL: [Figure; 6] = [
        Figure::Fig4,
        Figure::Fig5,
        Figure::Fig6,
        Figure::Fig7,
        Figure::Fig8,
        Figure::Fig9,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Figure::Fig4 => "fig4",
            Figure::Fig5 => "fig5",
            Figure::Fig6 => "fig6",
            Figure::Fig7 => "fig7",
            Figure::Fig8 => "fig8",
            Figure::Fig9 => "fig9",
        }
    }
}

impl fmt::Display for Figure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Figure {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Figure::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown recipe {s:?} (expected fig4..fig9)"))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RecipeMeta {
    pub recipe: String,
    pub generators: Vec<String>,
    /// Plane units.
    pub radius: Option<f64>,
    pub conflicts: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug)]
pub struct RecipeOutput {
    pub patch: Patch,
    pub report: ConflictReport,
    pub meta: RecipeMeta,
    /// Center of the order-5 rotation the patch is grown about, if any.
    pub center: Option<Coord5>,
    pub tessellation: Option<TessellationStats>,
}

fn names(gens: &[AffineElement]) -> Vec<String> {
    gens.iter().map(|g| g.to_string()).collect()
}

fn finish(
    recipe: String,
    patch: Patch,
    report: ConflictReport,
    gens: &[AffineElement],
    radius: Option<f64>,
    center: Option<Coord5>,
) -> RecipeOutput {
    let meta = RecipeMeta {
        recipe,
        generators: names(gens),
        radius,
        conflicts: report.len(),
        skipped: report.outside,
    };
    RecipeOutput {
        patch,
        report,
        meta,
        center,
        tessellation: None,
    }
}

/// Decagon plus its four rotations about k₂+k₃.
pub fn fig5_patch() -> Result<(Patch, ConflictReport)> {
    Ok(rotate_four_times(&decagon_root()?, &rotation_about_k2_k3()))
}

/// Rotations of a stabilizer listing (the first five elements).
fn rotations(stab: &[AffineElement]) -> Vec<AffineElement> {
    stab[..5].to_vec()
}

/// Growth about `center` from `seed`, symmetric under the center's rotations.
pub fn grow_about(
    recipe: String,
    seed: &Patch,
    center: Coord5,
    gens: Vec<AffineElement>,
    radius: f64,
    rounds: usize,
) -> Result<RecipeOutput> {
    let stab = stabilizer_of(&center)?;
    let opts = ClosureOptions {
        center,
        radius,
        max_rounds: rounds,
        symmetry: rotations(&stab),
    };
    let (patch, report) = orbit_closure(seed, &gens, opts);
    Ok(finish(recipe, patch, report, &gens, Some(radius), Some(center)))
}

/// Growth about λ(n): the fig5 patch moved to the center, closed under the stabilizer.
pub fn custom(n: [i64; 4], radius_edges: f64, rounds: usize) -> Result<RecipeOutput> {
    let center = fixed_point(n[0], n[1], n[2], n[3]);
    let shift = center - (Coord5::k(2) + Coord5::k(3));
    let seed = fig5_patch()?.0.transform(&AffineElement::translation(shift));
    let gens = stabilizer_of(&center)?;
    let name = format!("center {},{},{},{}", n[0], n[1], n[2], n[3]);
    grow_about(name, &seed, center, gens, radius_edges * edge_length(), rounds)
}

pub fn run(fig: Figure) -> Result<RecipeOutput> {
    let name = fig.name().to_string();
    match fig {
        Figure::Fig4 => Ok(finish(name, decagon_root()?, ConflictReport::default(), &[], None, None)),
        Figure::Fig8 => Ok(finish(name, decagon_weight()?, ConflictReport::default(), &[], None, None)),
        Figure::Fig5 => {
            let (patch, report) = fig5_patch()?;
            let rot = rotation_about_k2_k3();
            Ok(finish(name, patch, report, &[rot], None, Some(Coord5::k(2) + Coord5::k(3))))
        }
        Figure::Fig6 => {
            let center = Coord5::k(2) + Coord5::k(3);
            let (seed, _) = fig5_patch()?;
            let mut gens = stabilizer_of(&center)?;
            gens.push(named::c1());
            grow_about(name, &seed, center, gens, DEFAULT_RADIUS_EDGES * edge_length(), DEFAULT_ROUNDS)
        }
        Figure::Fig7 => {
            let center = Coord5::k(5);
            let (seed, _) = fig5_patch()?;
            let gens = extend_order20(&stabilizer_of(&center)?)?;
            grow_about(name, &seed, center, gens, DEFAULT_RADIUS_EDGES * edge_length(), DEFAULT_ROUNDS)
        }
        Figure::Fig9 => {
            let decagon = decagon_weight()?;
            let radius = 3.0 * decagon.extent(&Coord5::zero());
            let (patch, report, stats) = weight_tessellation(&decagon, radius);
            let mut out = finish(name, patch, report, &[], Some(radius), None);
            out.meta.generators = vec!["translations 5m".into()];
            out.meta.skipped = stats.translates_skipped;
            out.tessellation = Some(stats);
            Ok(out)
        }
    }
}

/// Parses "n1,n2,n3,n4".
pub fn parse_center(s: &str) -> Result<[i64; 4]> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let bad = || Error::SchemaError(format!("expected four integers n1,n2,n3,n4, got {s:?}"));
    if parts.len() != 4 {
        return Err(bad());
    }
    let mut n = [0i64; 4];
    for (slot, p) in n.iter_mut().zip(parts) {
        *slot = p.parse().map_err(|_| bad())?;
    }
    Ok(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tiling::growth::is_invariant;

    #[test]
    fn fig5_recipe() {
        let out = run(Figure::Fig5).unwrap();
        assert_eq!(out.patch.len(), 35);
        assert_eq!(out.meta.conflicts, 0);
    }

    #[test]
    fn fig6_is_symmetric_with_logged_conflicts() {
        let out = run(Figure::Fig6).unwrap();
        assert!(is_invariant(&out.patch, &rotation_about_k2_k3()));
        assert!(out.patch.conflict_audit().is_empty());
        assert!(out.meta.conflicts > 0);
        assert!(out.patch.len() > 35);
    }

    #[test]
    fn fig7_is_symmetric_about_k5() {
        let out = run(Figure::Fig7).unwrap();
        let rot = stabilizer_of(&Coord5::k(5)).unwrap()[1];
        assert!(is_invariant(&out.patch, &rot));
        assert!(out.patch.conflict_audit().is_empty());
    }

    #[test]
    fn custom_origin_growth() {
        let out = custom([0, 0, 0, 0], 3.0, 4).unwrap();
        assert!(out.patch.len() >= 35);
        assert!(is_invariant(&out.patch, &stabilizer_of(&Coord5::zero()).unwrap()[1]));
        assert!(out.patch.conflict_audit().is_empty());
    }

    #[test]
    fn center_parsing() {
        assert_eq!(parse_center("-1,1,-1,1").unwrap(), [-1, 1, -1, 1]);
        assert!(parse_center("1,2,3").is_err());
        assert!(parse_center("a,b,c,d").is_err());
        assert_eq!("fig7".parse::<Figure>().unwrap(), Figure::Fig7);
    }
}
