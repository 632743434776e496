//! Decagonal patches from the 2-faces of a Voronoi cell that are extremal
//! for a fixed perpendicular direction.
//!
//! A face is kept iff some linear functional with perpendicular part equal
//! to the probe's perpendicular image attains its maximum on that face.
//! Exactly one face lies over each generic point of the projected cell, so
//! the kept faces tile the projected hull.

use crate::error::{Error, Result};
use crate::golden::GoldenNumber;
use crate::lattice::{cross_perp, inner_par, inner_perp, Coord5};
use crate::voronoi::{permutohedron_faces, permutohedron_vertices, root_cell_faces, PermutoFace};

use super::patch::{hull_area, ConflictReport, Patch};
use super::tile::{classify_permuto, tile_from_permuto, tile_from_rhombus, TileKind};

/// Perpendicular probe for the root cell: k₅.
pub fn root_probe() -> Coord5 {
    Coord5::k(5)
}

/// Perpendicular probe for the weight cell: k₄ − k₁ (k₅ alone is not generic there).
pub fn weight_probe() -> Coord5 {
    Coord5::root(4, 1)
}

/// True iff probe⊥ lies in the open cone spanned by α⊥ and β⊥.
pub fn in_open_cone(probe: &Coord5, alpha: &Coord5, beta: &Coord5) -> bool {
    let d = cross_perp(alpha, beta);
    if d.is_zero() {
        return false;
    }
    let s = d.signum();
    cross_perp(probe, beta).signum() == s && cross_perp(alpha, probe).signum() == s
}

/// Faces of V(0) selected by `probe`, each with the facets containing it.
pub fn root_envelope(probe: &Coord5) -> Vec<crate::voronoi::RootCellFace> {
    root_cell_faces()
        .into_iter()
        .filter(|f| {
            let a = Coord5::root(f.facets[0].0, f.facets[0].1);
            let b = Coord5::root(f.facets[1].0, f.facets[1].1);
            in_open_cone(probe, &a, &b)
        })
        .collect()
}

fn audit(patch: &Patch, report: &ConflictReport, expected_area: GoldenNumber) -> Result<()> {
    if !report.is_empty() {
        return Err(Error::TilingMismatch(format!(
            "{} overlapping faces",
            report.len()
        )));
    }
    if patch.area() != expected_area {
        return Err(Error::TilingMismatch(format!(
            "area {} differs from hull area {}",
            patch.area(),
            expected_area
        )));
    }
    Ok(())
}

/// Envelope patch of V(0) for an arbitrary probe, with its conflict log.
pub fn root_envelope_patch(probe: &Coord5) -> (Patch, ConflictReport) {
    let tiles = root_envelope(probe).into_iter().map(|f| {
        let src = f
            .facets
            .iter()
            .map(|(i, j)| format!("{i}{j}"))
            .collect::<Vec<_>>()
            .join("|");
        tile_from_rhombus(&f.face, src)
    });
    Patch::from_tiles(tiles)
}

/// Ten-rhombus decagon of circumradius √(2/5)τ from V(0).
pub fn decagon_root() -> Result<Patch> {
    let (patch, report) = root_envelope_patch(&root_probe());
    let hull = hull_area(&crate::voronoi::root_cell_vertices());
    audit(&patch, &report, hull)?;
    if patch.count(TileKind::ThickRhombusRoot) != patch.count(TileKind::ThinRhombusRoot) {
        return Err(Error::TilingMismatch("thick and thin counts differ".into()));
    }
    Ok(patch)
}

/// Solves for the parallel part a = x·k₅∥ + y·k₁∥ making the face's blocks level.
fn level_functional(face: &PermutoFace, probe: &Coord5) -> Option<(GoldenNumber, GoldenNumber)> {
    let k5 = Coord5::k(5);
    let k1 = Coord5::k(1);
    let mut rows = Vec::with_capacity(2);
    for block in &face.partition {
        for pair in block.windows(2) {
            let d = Coord5::root(pair[0], pair[1]);
            rows.push((inner_par(&d, &k5), inner_par(&d, &k1), -inner_perp(&d, probe)));
        }
    }
    let [(a, b, e), (c, d, f)] = rows[..] else {
        return None;
    };
    let det = a * d - b * c;
    if det.is_zero() {
        return None;
    }
    Some(((e * d - b * f) / det, (a * f - e * c) / det))
}

/// True iff `face` maximizes a functional whose perpendicular part is probe⊥.
pub fn weight_face_selected(face: &PermutoFace, probe: &Coord5) -> bool {
    let Some((x, y)) = level_functional(face, probe) else {
        return false;
    };
    let (k5, k1) = (Coord5::k(5), Coord5::k(1));
    let w = |i: usize| {
        let ki = Coord5::k(i);
        x * inner_par(&ki, &k5) + y * inner_par(&ki, &k1) + inner_perp(&ki, probe)
    };
    let levels: Vec<GoldenNumber> = face.partition.iter().map(|b| w(b[0])).collect();
    levels.windows(2).all(|p| p[0] > p[1])
}

/// Non-degenerate permutohedron faces selected by `probe`.
pub fn weight_envelope(probe: &Coord5) -> Vec<PermutoFace> {
    permutohedron_faces()
        .into_iter()
        .filter(|f| classify_permuto(f) != TileKind::DegenerateSegment)
        .filter(|f| weight_face_selected(f, probe))
        .collect()
}

/// Envelope patch of V(0)* for an arbitrary probe, with its conflict log.
pub fn weight_envelope_patch(probe: &Coord5) -> (Patch, ConflictReport) {
    Patch::from_tiles(weight_envelope(probe).iter().map(tile_from_permuto))
}

/// Exact area of the projected permutohedron.
pub fn weight_hull_area() -> GoldenNumber {
    let pts: Vec<Coord5> = permutohedron_vertices().iter().map(|v| v.point()).collect();
    hull_area(&pts)
}

/// Twenty-tile decagon from V(0)*: five tiles of each of the four species.
pub fn decagon_weight() -> Result<Patch> {
    let (patch, report) = weight_envelope_patch(&weight_probe());
    audit(&patch, &report, weight_hull_area())?;
    Ok(patch)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::named;
    use crate::voronoi::root_cell_vertices;

    #[test]
    fn root_decagon_counts_and_area() {
        let p = decagon_root().unwrap();
        assert_eq!(p.len(), 10);
        assert_eq!(p.count(TileKind::ThickRhombusRoot), 5);
        assert_eq!(p.count(TileKind::ThinRhombusRoot), 5);
        let t = GoldenNumber::tau();
        assert_eq!(p.area(), GoldenNumber::from_ints(5, 0) * t * t);
        assert!(p.conflict_audit().is_empty());
        let verts = root_cell_vertices();
        assert!(p.tiles().all(|t| t.vertices().iter().all(|v| verts.contains(v))));
        assert_eq!(p.transform(&named::c2()), p);
        assert_eq!(p.area(), p.boundary_area());
    }

    #[test]
    fn four_facets_contribute_three_faces() {
        let faces = root_envelope(&root_probe());
        for pair in [(5, 4), (2, 4), (3, 1), (5, 1)] {
            let n = faces.iter().filter(|f| f.facets.contains(&pair)).count();
            assert_eq!(n, 3, "{pair:?}");
        }
    }

    #[test]
    fn weight_decagon_species() {
        let p = decagon_weight().unwrap();
        assert_eq!(p.len(), 20);
        for kind in [
            TileKind::UnitRhombusWeight,
            TileKind::TauRhombusWeight,
            TileKind::ThickHexagonWeight,
            TileKind::ThinHexagonWeight,
        ] {
            assert_eq!(p.count(kind), 5, "{kind}");
        }
        assert_eq!(p.area(), weight_hull_area());
        assert_eq!(p.transform(&named::eta()), p);
        assert!(p.edge_audit().is_clean());
    }

    #[test]
    fn k5_is_not_a_generic_weight_probe() {
        assert!(weight_envelope(&Coord5::k(5)).len() < 20);
    }
}
