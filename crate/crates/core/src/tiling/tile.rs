use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::golden::{ratio, GoldenNumber};
use crate::group::AffineElement;
use crate::lattice::{cross_par, Coord5};
use crate::voronoi::{FaceShape, PermutoFace, RhombusFace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TileKind {
    ThickRhombusRoot,
    ThinRhombusRoot,
    UnitRhombusWeight,
    TauRhombusWeight,
    ThickHexagonWeight,
    ThinHexagonWeight,
    DegenerateSegment,
}

impl TileKind {
    pub const ALL: [TileKind; 7] = [
        TileKind::ThickRhombusRoot,
        TileKind::ThinRhombusRoot,
        TileKind::UnitRhombusWeight,
        TileKind::TauRhombusWeight,
        TileKind::ThickHexagonWeight,
        TileKind::ThinHexagonWeight,
        TileKind::DegenerateSegment,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            TileKind::ThickRhombusRoot => "ThickRhombusRoot",
            TileKind::ThinRhombusRoot => "ThinRhombusRoot",
            TileKind::UnitRhombusWeight => "UnitRhombusWeight",
            TileKind::TauRhombusWeight => "TauRhombusWeight",
            TileKind::ThickHexagonWeight => "ThickHexagonWeight",
            TileKind::ThinHexagonWeight => "ThinHexagonWeight",
            TileKind::DegenerateSegment => "DegenerateSegment",
        }
    }

    /// Exact area in units of (2/5)·sin 36°.
    pub fn area(&self) -> GoldenNumber {
        let g = |a: (i64, i64), b: (i64, i64)| GoldenNumber::new(ratio(a.0, a.1), ratio(b.0, b.1));
        match self {
            TileKind::ThinRhombusRoot => GoldenNumber::one(),
            TileKind::ThickRhombusRoot => GoldenNumber::tau(),
            TileKind::UnitRhombusWeight => g((5, 2), (-1, 2)),
            TileKind::TauRhombusWeight => g((5, 2), (3, 2)),
            TileKind::ThickHexagonWeight => g((15, 2), (3, 2)),
            TileKind::ThinHexagonWeight => g((0, 1), (3, 1)),
            TileKind::DegenerateSegment => GoldenNumber::zero(),
        }
    }
}

impl fmt::Display for TileKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TileKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        TileKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown tile kind {s:?}"))
    }
}

/// Projected 2-face: counterclockwise, starting at the smallest vertex.
#[derive(Clone, Debug)]
pub struct Tile {
    pub kind: TileKind,
    vertices: Vec<Coord5>,
    pub source: String,
}

/// Shoelace area of the parallel images, in cross_par units.
pub fn polygon_area(vertices: &[Coord5]) -> GoldenNumber {
    let n = vertices.len();
    let mut acc = GoldenNumber::zero();
    for i in 0..n {
        acc += cross_par(&vertices[i], &vertices[(i + 1) % n]);
    }
    acc.scale(ratio(1, 2))
}

impl Tile {
    pub fn new(kind: TileKind, vertices: Vec<Coord5>, source: impl Into<String>) -> Self {
        let mut v = vertices;
        if polygon_area(&v).is_negative() {
            v.reverse();
        }
        if let Some(min_at) = (0..v.len()).min_by_key(|&i| v[i]) {
            v.rotate_left(min_at);
        }
        Self {
            kind,
            vertices: v,
            source: source.into(),
        }
    }

    pub fn vertices(&self) -> &[Coord5] {
        &self.vertices
    }

    /// Sorted vertex tuple identifying the tile.
    pub fn key(&self) -> Vec<Coord5> {
        let mut k = self.vertices.clone();
        k.sort();
        k
    }

    pub fn area(&self) -> GoldenNumber {
        polygon_area(&self.vertices)
    }

    /// Vertex average: an interior point for non-degenerate convex tiles.
    pub fn centroid(&self) -> Coord5 {
        let n = self.vertices.len() as i64;
        self.vertices
            .iter()
            .fold(Coord5::zero(), |a, b| a + *b)
            .scale(ratio(1, n))
    }

    pub fn transform(&self, e: &AffineElement) -> Tile {
        let v = self.vertices.iter().map(|p| e.apply(p)).collect();
        Tile::new(self.kind, v, self.source.clone())
    }

    /// Directed boundary edges in counterclockwise order.
    pub fn edges(&self) -> impl Iterator<Item = (Coord5, Coord5)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    pub fn xy(&self) -> Vec<(f64, f64)> {
        self.vertices.iter().map(|v| v.par()).collect()
    }
}

impl PartialEq for Tile {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind && self.vertices == other.vertices
    }
}

impl Eq for Tile {}

/// Step class of the index difference: 1 for |i−j| ≡ ±1, 2 for ±2 (mod 5).
pub fn step_class(i: usize, j: usize) -> u8 {
    match (i + 5 - j) % 5 {
        1 | 4 => 1,
        _ => 2,
    }
}

/// Thick for generators at 72°, thin at 144°.
pub fn classify_rhombus(face: &RhombusFace) -> TileKind {
    if step_class(face.gens.0, face.gens.1) == 1 {
        TileKind::ThickRhombusRoot
    } else {
        TileKind::ThinRhombusRoot
    }
}

/// Species of a permutohedron 2-face.
pub fn classify_permuto(face: &PermutoFace) -> TileKind {
    let blocks = face.moving_blocks();
    match face.shape {
        FaceShape::Square => {
            let s: Vec<u8> = blocks.iter().map(|b| step_class(b[0], b[1])).collect();
            match (s[0], s[1]) {
                (1, 1) => TileKind::UnitRhombusWeight,
                (2, 2) => TileKind::TauRhombusWeight,
                _ => TileKind::DegenerateSegment,
            }
        }
        FaceShape::Hexagon => {
            let b = blocks[0];
            let long = [(0, 1), (0, 2), (1, 2)]
                .iter()
                .filter(|(x, y)| step_class(b[*x], b[*y]) == 2)
                .count();
            if long == 2 {
                TileKind::ThickHexagonWeight
            } else {
                TileKind::ThinHexagonWeight
            }
        }
    }
}

pub fn tile_from_rhombus(face: &RhombusFace, source: impl Into<String>) -> Tile {
    Tile::new(classify_rhombus(face), face.vertices().to_vec(), source)
}

pub fn tile_from_permuto(face: &PermutoFace) -> Tile {
    let verts = face.boundary.iter().map(|v| v.point()).collect();
    let source = face
        .partition
        .iter()
        .map(|b| b.iter().map(|p| p.to_string()).collect::<String>())
        .collect::<Vec<_>>()
        .join("|");
    Tile::new(classify_permuto(face), verts, source)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::voronoi::{permutohedron_faces, root_cell_faces, PermutoFace};

    #[test]
    fn every_face_matches_its_kind_area() {
        let mut counts = std::collections::BTreeMap::new();
        for f in permutohedron_faces() {
            let t = tile_from_permuto(&f);
            assert_eq!(t.area(), t.kind.area(), "{}", t.source);
            *counts.entry(t.kind).or_insert(0) += 1;
        }
        for kind in [
            TileKind::UnitRhombusWeight,
            TileKind::TauRhombusWeight,
            TileKind::ThickHexagonWeight,
            TileKind::ThinHexagonWeight,
            TileKind::DegenerateSegment,
        ] {
            assert_eq!(counts[&kind], 30, "{kind}");
        }
        for f in root_cell_faces() {
            let t = tile_from_rhombus(&f.face, "");
            assert_eq!(t.area(), t.kind.area());
            assert!(matches!(
                t.kind,
                TileKind::ThickRhombusRoot | TileKind::ThinRhombusRoot
            ));
        }
    }

    #[test]
    fn unit_rhombus_area_is_three_minus_tau() {
        let want = GoldenNumber::from_ints(3, 0) - GoldenNumber::tau();
        assert_eq!(TileKind::UnitRhombusWeight.area(), want);
        let u = Coord5::root(1, 2);
        let v = Coord5::root(3, 4);
        assert_eq!(cross_par(&u, &v), want);
    }

    #[test]
    fn named_partitions() {
        let f = |p: Vec<Vec<usize>>| classify_permuto(&PermutoFace::from_partition(p).unwrap());
        assert_eq!(f(vec![vec![1, 2], vec![3, 4], vec![5]]), TileKind::UnitRhombusWeight);
        assert_eq!(f(vec![vec![1, 4], vec![2, 3], vec![5]]), TileKind::DegenerateSegment);
        assert_eq!(f(vec![vec![1, 3, 4], vec![2], vec![5]]), TileKind::ThickHexagonWeight);
        assert_eq!(f(vec![vec![1, 2, 3], vec![4], vec![5]]), TileKind::ThinHexagonWeight);
        assert!(cross_par(&Coord5::root(1, 4), &Coord5::root(2, 3)).is_zero());
    }

    fn edge_pattern(p: Vec<Vec<usize>>) -> String {
        let t = tile_from_permuto(&PermutoFace::from_partition(p).unwrap());
        let unit = crate::lattice::plane_norm2(&Coord5::root(1, 2));
        t.edges()
            .map(|(a, b)| {
                if crate::lattice::plane_norm2(&(b - a)) == unit {
                    '1'
                } else {
                    't'
                }
            })
            .collect()
    }

    fn is_rotation_of(got: &str, want: &str) -> bool {
        got.len() == want.len() && format!("{want}{want}").contains(got)
    }

    #[test]
    fn hexagon_edge_patterns() {
        let thick = edge_pattern(vec![vec![1, 3, 4], vec![2], vec![5]]);
        let thin = edge_pattern(vec![vec![1, 2, 3], vec![4], vec![5]]);
        assert!(is_rotation_of(&thick, "tt1tt1"), "{thick}");
        assert!(is_rotation_of(&thin, "t11t11"), "{thin}");
    }

    #[test]
    fn canonical_orientation() {
        let f = &root_cell_faces()[0].face;
        let t = tile_from_rhombus(f, "");
        assert!(t.area().is_positive());
        let mut rev = f.vertices().to_vec();
        rev.reverse();
        rev.rotate_left(2);
        assert_eq!(Tile::new(t.kind, rev, ""), t);
        assert_eq!(t.vertices()[0], *t.vertices().iter().min().unwrap());
    }

    #[test]
    fn kind_names_round_trip() {
        for k in TileKind::ALL {
            assert_eq!(k.name().parse::<TileKind>().unwrap(), k);
        }
        assert!("Kite".parse::<TileKind>().is_err());
    }
}
