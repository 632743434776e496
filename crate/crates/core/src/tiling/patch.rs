use std::collections::{BTreeMap, BTreeSet};

use crate::golden::{ratio, GoldenNumber};
use crate::group::AffineElement;
use crate::lattice::{cross_par, plane_norm2, scale_par, Coord5};

use super::tile::{polygon_area, Tile, TileKind};

/// Interior overlap between a stored tile and a rejected candidate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conflict {
    pub existing: Tile,
    pub offending: Tile,
    /// A point inside both tiles (centroid of their intersection).
    pub witness: Coord5,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConflictReport {
    pub conflicts: Vec<Conflict>,
    /// Candidates dropped for lying outside the radius.
    pub outside: usize,
    /// Degenerate faces left out because they carry no area.
    pub degenerate: usize,
}

impl ConflictReport {
    pub fn is_empty(&self) -> bool {
        self.conflicts.is_empty()
    }

    pub fn len(&self) -> usize {
        self.conflicts.len()
    }

    pub fn extend(&mut self, other: ConflictReport) {
        self.conflicts.extend(other.conflicts);
        self.outside += other.outside;
        self.degenerate += other.degenerate;
    }

    /// Sorts conflicts by (existing key, offending key).
    pub fn canonicalize(&mut self) {
        self.conflicts
            .sort_by_cached_key(|c| (c.existing.key(), c.offending.key()));
    }
}

/// Which side of the directed line a → b the point p lies on (exact).
fn side(a: &Coord5, b: &Coord5, p: &Coord5) -> i32 {
    cross_par(&(*b - *a), &(*p - *a)).signum()
}

/// Parallel-image bounding boxes, used only to skip far-apart pairs.
fn bbox(t: &Tile) -> [f64; 4] {
    let mut b = [f64::MAX, f64::MAX, f64::MIN, f64::MIN];
    for (x, y) in t.xy() {
        b[0] = b[0].min(x);
        b[1] = b[1].min(y);
        b[2] = b[2].max(x);
        b[3] = b[3].max(y);
    }
    b
}

fn boxes_apart(a: &[f64; 4], b: &[f64; 4]) -> bool {
    const SLACK: f64 = 1e-6;
    a[2] < b[0] - SLACK || b[2] < a[0] - SLACK || a[3] < b[1] - SLACK || b[3] < a[1] - SLACK
}

/// Exact separating-axis test for convex tiles: true iff interiors meet.
pub fn interiors_overlap(p: &Tile, q: &Tile) -> bool {
    if p.kind == TileKind::DegenerateSegment || q.kind == TileKind::DegenerateSegment {
        return false;
    }
    for (a, b) in [(p, q), (q, p)] {
        for (s, e) in a.edges() {
            if b.vertices().iter().all(|v| side(&s, &e, v) <= 0) {
                return false;
            }
        }
    }
    true
}

/// Clips `subject` to the left half-planes of `clip`'s edges.
fn clip_polygon(subject: &[Coord5], clip: &Tile) -> Vec<Coord5> {
    let mut poly = subject.to_vec();
    for (a, b) in clip.edges() {
        if poly.is_empty() {
            break;
        }
        let d = b - a;
        let val = |p: &Coord5| cross_par(&d, &(*p - a));
        let mut out = Vec::new();
        for i in 0..poly.len() {
            let cur = poly[i];
            let nxt = poly[(i + 1) % poly.len()];
            let (vc, vn) = (val(&cur), val(&nxt));
            if !vc.is_negative() {
                out.push(cur);
            }
            if (vc.is_positive() && vn.is_negative()) || (vc.is_negative() && vn.is_positive()) {
                let t = vc / (vc - vn);
                out.push(cur + scale_par(&(nxt - cur), &t));
            }
        }
        poly = out;
    }
    poly
}

/// A point in the interior of both tiles, if they overlap.
pub fn overlap_witness(p: &Tile, q: &Tile) -> Option<Coord5> {
    if !interiors_overlap(p, q) {
        return None;
    }
    let region = clip_polygon(p.vertices(), q);
    let mut pts: Vec<Coord5> = Vec::new();
    for v in region {
        if !pts.contains(&v) {
            pts.push(v);
        }
    }
    let n = pts.len().max(1) as i64;
    Some(pts.iter().fold(Coord5::zero(), |a, b| a + *b).scale(ratio(1, n)))
}

/// Interior-disjoint tiles keyed by their sorted vertex tuple.
#[derive(Clone, Debug, Default)]
pub struct Patch {
    tiles: BTreeMap<Vec<Coord5>, Tile>,
    pub radius: Option<f64>,
}

/// Patches are equal when they hold the same tiles.
impl PartialEq for Patch {
    fn eq(&self, other: &Self) -> bool {
        self.tiles == other.tiles
    }
}

impl Eq for Patch {}

/// Outcome of offering one tile to a patch.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Insert {
    Added,
    AlreadyPresent,
    Rejected(Box<Conflict>),
}

impl Patch {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a patch, logging overlaps; degenerate tiles are counted and dropped.
    pub fn from_tiles(tiles: impl IntoIterator<Item = Tile>) -> (Self, ConflictReport) {
        let mut p = Patch::new();
        let mut report = ConflictReport::default();
        for t in tiles {
            p.offer(t, &mut report);
        }
        (p, report)
    }

    pub fn len(&self) -> usize {
        self.tiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tiles.is_empty()
    }

    pub fn tiles(&self) -> impl Iterator<Item = &Tile> {
        self.tiles.values()
    }

    pub fn keys(&self) -> BTreeSet<Vec<Coord5>> {
        self.tiles.keys().cloned().collect()
    }

    pub fn contains(&self, t: &Tile) -> bool {
        self.tiles.contains_key(&t.key())
    }

    pub fn count(&self, kind: TileKind) -> usize {
        self.tiles().filter(|t| t.kind == kind).count()
    }

    /// First stored tile whose interior meets `t`, with a witness point.
    pub fn find_overlap(&self, t: &Tile) -> Option<(Tile, Coord5)> {
        let b = bbox(t);
        self.tiles()
            .filter(|s| !boxes_apart(&bbox(s), &b))
            .find_map(|s| overlap_witness(s, t).map(|w| (s.clone(), w)))
    }

    /// Adds `t` unless it is present or overlaps a stored tile.
    pub fn try_insert(&mut self, t: Tile) -> Insert {
        let key = t.key();
        if self.tiles.contains_key(&key) {
            return Insert::AlreadyPresent;
        }
        if let Some((existing, witness)) = self.find_overlap(&t) {
            return Insert::Rejected(Box::new(Conflict {
                existing,
                offending: t,
                witness,
            }));
        }
        self.tiles.insert(key, t);
        Insert::Added
    }

    fn offer(&mut self, t: Tile, report: &mut ConflictReport) -> bool {
        if t.kind == TileKind::DegenerateSegment {
            report.degenerate += 1;
            return false;
        }
        match self.try_insert(t) {
            Insert::Added => true,
            Insert::AlreadyPresent => false,
            Insert::Rejected(c) => {
                report.conflicts.push(*c);
                false
            }
        }
    }

    /// Stores `t` without any checks.
    pub(crate) fn insert_unchecked(&mut self, t: Tile) {
        self.tiles.insert(t.key(), t);
    }

    pub fn transform(&self, e: &AffineElement) -> Patch {
        Patch {
            tiles: self
                .tiles()
                .map(|t| {
                    let img = t.transform(e);
                    (img.key(), img)
                })
                .collect(),
            radius: self.radius,
        }
    }

    /// Total exact area in cross_par units.
    pub fn area(&self) -> GoldenNumber {
        self.tiles().fold(GoldenNumber::zero(), |a, t| a + t.area())
    }

    /// Shoelace over the edges used by exactly one tile.
    pub fn boundary_area(&self) -> GoldenNumber {
        let audit = self.edge_audit();
        audit
            .boundary_edges
            .iter()
            .fold(GoldenNumber::zero(), |a, (s, e)| a + cross_par(s, e))
            .scale(ratio(1, 2))
    }

    /// Pairwise overlap check of the stored tiles.
    pub fn conflict_audit(&self) -> ConflictReport {
        let tiles: Vec<&Tile> = self.tiles().collect();
        let boxes: Vec<[f64; 4]> = tiles.iter().map(|t| bbox(t)).collect();
        let mut report = ConflictReport::default();
        for i in 0..tiles.len() {
            for j in i + 1..tiles.len() {
                if boxes_apart(&boxes[i], &boxes[j]) {
                    continue;
                }
                if let Some(w) = overlap_witness(tiles[i], tiles[j]) {
                    report.conflicts.push(Conflict {
                        existing: tiles[i].clone(),
                        offending: tiles[j].clone(),
                        witness: w,
                    });
                }
            }
        }
        report
    }

    /// Edge-sharing statistics over the stored tiles.
    pub fn edge_audit(&self) -> EdgeAudit {
        let mut uses: BTreeMap<(Coord5, Coord5), Vec<(Coord5, Coord5)>> = BTreeMap::new();
        for t in self.tiles() {
            for (s, e) in t.edges() {
                let key = if s < e { (s, e) } else { (e, s) };
                uses.entry(key).or_default().push((s, e));
            }
        }
        let mut audit = EdgeAudit::default();
        for (_, directed) in uses {
            match directed.len() {
                1 => audit.boundary_edges.push(directed[0]),
                2 if directed[0] != directed[1] => audit.interior += 1,
                _ => audit.overused += 1,
            }
        }
        let vertices: BTreeSet<Coord5> = self.tiles().flat_map(|t| t.vertices().to_vec()).collect();
        for (s, e) in &audit.boundary_edges {
            let d = *e - *s;
            for v in &vertices {
                if v == s || v == e {
                    continue;
                }
                let w = *v - *s;
                if cross_par(&d, &w).is_zero() {
                    let along = crate::lattice::inner_par(&d, &w);
                    if along.is_positive() && along < plane_norm2(&d) {
                        audit.t_junctions += 1;
                    }
                }
            }
        }
        audit
    }

    /// Drops tiles whose centroid lies farther than `radius` from `center`.
    pub fn clipped(&self, center: &Coord5, radius: f64) -> (Patch, usize) {
        let mut out = Patch {
            tiles: BTreeMap::new(),
            radius: Some(radius),
        };
        let mut dropped = 0;
        for t in self.tiles() {
            if within(t, center, radius) {
                out.insert_unchecked(t.clone());
            } else {
                dropped += 1;
            }
        }
        (out, dropped)
    }

    /// Largest distance from `center` to a tile vertex, in plane units.
    pub fn extent(&self, center: &Coord5) -> f64 {
        self.tiles()
            .flat_map(|t| t.vertices().iter().map(|v| plane_norm2(&(*v - *center)).to_f64()))
            .fold(0.0, f64::max)
            .sqrt()
    }
}

/// Centroid of `t` within `radius` of `center`.
pub fn within(t: &Tile, center: &Coord5, radius: f64) -> bool {
    plane_norm2(&(t.centroid() - *center)).to_f64() <= radius * radius
}

/// Exact union; tiles of `b` overlapping `a` are logged and left out.
pub fn patch_union(a: &Patch, b: &Patch) -> (Patch, ConflictReport) {
    let mut out = a.clone();
    let mut report = ConflictReport::default();
    for t in b.tiles() {
        out.offer(t.clone(), &mut report);
    }
    (out, report)
}

pub fn transform_patch(p: &Patch, e: &AffineElement) -> Patch {
    p.transform(e)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EdgeAudit {
    /// Edges shared by two tiles with opposite orientations.
    pub interior: usize,
    /// Directed edges used by exactly one tile.
    pub boundary_edges: Vec<(Coord5, Coord5)>,
    /// Edges used more than twice or twice in the same direction.
    pub overused: usize,
    /// Tile vertices lying strictly inside a boundary edge.
    pub t_junctions: usize,
}

impl EdgeAudit {
    pub fn is_clean(&self) -> bool {
        self.overused == 0 && self.t_junctions == 0
    }
}

/// Exact area of the convex hull of the parallel images of `points`.
pub fn hull_area(points: &[Coord5]) -> GoldenNumber {
    polygon_area(&convex_hull(points))
}

/// Convex hull in counterclockwise order (Andrew's monotone chain with exact turns).
pub fn convex_hull(points: &[Coord5]) -> Vec<Coord5> {
    let mut pts: Vec<(f64, f64, Coord5)> = points
        .iter()
        .map(|p| {
            let (x, y) = p.par();
            (x, y, *p)
        })
        .collect();
    pts.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
    pts.dedup_by(|a, b| a.2 == b.2);
    if pts.len() < 3 {
        return pts.into_iter().map(|p| p.2).collect();
    }
    let turn = |o: &Coord5, a: &Coord5, b: &Coord5| cross_par(&(*a - *o), &(*b - *o));
    let mut lower: Vec<Coord5> = Vec::new();
    for (_, _, p) in &pts {
        while lower.len() >= 2 && !turn(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive() {
            lower.pop();
        }
        lower.push(*p);
    }
    let mut upper: Vec<Coord5> = Vec::new();
    for (_, _, p) in pts.iter().rev() {
        while upper.len() >= 2 && !turn(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive() {
            upper.pop();
        }
        upper.push(*p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::named;
    use crate::voronoi::RhombusFace;

    fn rhombus(base: Coord5, a: usize, b: usize) -> Tile {
        super::super::tile::tile_from_rhombus(&RhombusFace { base, gens: (a, b) }, "")
    }

    #[test]
    fn shared_edge_is_not_overlap() {
        let t1 = rhombus(Coord5::zero(), 1, 2);
        let t2 = rhombus(Coord5::k(1), 2, 5);
        assert!(!interiors_overlap(&t1, &t2));
        assert!(interiors_overlap(&t1, &t1));
    }

    #[test]
    fn crossing_rhombi_conflict_with_interior_witness() {
        let t1 = rhombus(Coord5::zero(), 1, 2);
        let t2 = rhombus(Coord5::zero(), 1, 3);
        let w = overlap_witness(&t1, &t2).expect("overlap");
        for t in [&t1, &t2] {
            for (s, e) in t.edges() {
                assert!(side(&s, &e, &w) > 0);
            }
        }
        let (p, report) = Patch::from_tiles([t1.clone(), t2]);
        assert_eq!(p.len(), 1);
        assert_eq!(report.len(), 1);
        assert_eq!(report.conflicts[0].existing, t1);
    }

    #[test]
    fn union_with_itself_is_unchanged() {
        let (p, _) = Patch::from_tiles([rhombus(Coord5::zero(), 1, 2), rhombus(Coord5::k(1), 2, 5)]);
        let (u, report) = patch_union(&p, &p);
        assert_eq!(u, p);
        assert!(report.is_empty());
        assert_eq!(p.transform(&AffineElement::identity()), p);
    }

    #[test]
    fn edges_and_area() {
        let (p, _) = Patch::from_tiles([rhombus(Coord5::zero(), 1, 2), rhombus(Coord5::k(1), 2, 5)]);
        let audit = p.edge_audit();
        assert_eq!(audit.interior, 1);
        assert_eq!(audit.boundary_edges.len(), 6);
        assert!(audit.is_clean());
        assert_eq!(p.area(), p.boundary_area());
        let q = p.transform(&named::p());
        assert_eq!(q.area(), p.area());
    }

    #[test]
    fn hull_of_square() {
        let t = rhombus(Coord5::zero(), 1, 3);
        let mut pts = t.vertices().to_vec();
        pts.push(t.centroid());
        assert_eq!(hull_area(&pts), GoldenNumber::one());
        assert_eq!(convex_hull(&pts).len(), 4);
    }
}
