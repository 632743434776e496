//! Voronoi cells of the A4 root lattice (V(0), 20 rhombohedral facets) and
//! of the weight lattice (V(0)*, the order-5 permutohedron).

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::golden::ratio;
use crate::lattice::{inner4, Coord5};

/// The 30 vertices ±kᵢ, ±(kᵢ+kⱼ), sorted.
pub fn root_cell_vertices() -> Vec<Coord5> {
    let mut set = BTreeSet::new();
    for i in 1..=5 {
        set.insert(Coord5::k(i));
        set.insert(-Coord5::k(i));
        for j in i + 1..=5 {
            let s = Coord5::k(i) + Coord5::k(j);
            set.insert(s);
            set.insert(-s);
        }
    }
    set.into_iter().collect()
}

/// Facet of V(0) in the hyperplane (λ, kᵢ − kⱼ) = 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rhombohedron {
    pub i: usize,
    pub j: usize,
    pub base: Coord5,
    pub generators: [usize; 3],
    pub vertices: Vec<Coord5>,
}

impl Rhombohedron {
    pub fn root(&self) -> Coord5 {
        Coord5::root(self.i, self.j)
    }

    pub fn center(&self) -> Coord5 {
        self.root().scale(ratio(1, 2))
    }

    /// Six rhombus faces: for each generator pair, the copy at the base and
    /// the copy shifted by the third generator.
    pub fn faces(&self) -> Vec<RhombusFace> {
        let g = self.generators;
        let mut out = Vec::with_capacity(6);
        for (a, b, c) in [(g[0], g[1], g[2]), (g[0], g[2], g[1]), (g[1], g[2], g[0])] {
            for shift in [false, true] {
                let base = if shift {
                    self.base + Coord5::k(c)
                } else {
                    self.base
                };
                out.push(RhombusFace { base, gens: (a, b) });
            }
        }
        out
    }
}

/// Parallelogram base, base+kₐ, base+kₐ+k_b, base+k_b.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RhombusFace {
    pub base: Coord5,
    pub gens: (usize, usize),
}

impl RhombusFace {
    pub fn vertices(&self) -> [Coord5; 4] {
        let a = Coord5::k(self.gens.0);
        let b = Coord5::k(self.gens.1);
        [self.base, self.base + a, self.base + a + b, self.base + b]
    }

    pub fn key(&self) -> Vec<Coord5> {
        let mut v = self.vertices().to_vec();
        v.sort();
        v
    }
}

/// Facet (i, j): base kᵢ, generators k_l for l ∉ {i, j}.
pub fn rhombohedron(i: usize, j: usize) -> Result<Rhombohedron> {
    if i == j || !(1..=5).contains(&i) || !(1..=5).contains(&j) {
        return Err(Error::BadIndices(i, j));
    }
    let gens: Vec<usize> = (1..=5).filter(|l| *l != i && *l != j).collect();
    let generators = [gens[0], gens[1], gens[2]];
    let base = Coord5::k(i);
    let vertices = (0..8u8)
        .map(|mask| {
            (0..3)
                .filter(|b| mask & (1 << b) != 0)
                .fold(base, |acc, b| acc + Coord5::k(generators[b]))
        })
        .collect();
    Ok(Rhombohedron {
        i,
        j,
        base,
        generators,
        vertices,
    })
}

/// All 20 facets, ordered by (i, j).
pub fn all_rhombohedra() -> Vec<Rhombohedron> {
    let mut out = Vec::with_capacity(20);
    for i in 1..=5 {
        for j in 1..=5 {
            if i != j {
                out.push(rhombohedron(i, j).expect("valid indices"));
            }
        }
    }
    out
}

/// A 2-face of V(0) together with the two facets (as (i, j) pairs) containing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootCellFace {
    pub face: RhombusFace,
    pub facets: Vec<(usize, usize)>,
}

/// The 60 distinct rhombus faces of V(0), each listed with its facets.
pub fn root_cell_faces() -> Vec<RootCellFace> {
    let mut by_key: BTreeMap<Vec<Coord5>, RootCellFace> = BTreeMap::new();
    for r in all_rhombohedra() {
        for f in r.faces() {
            by_key
                .entry(f.key())
                .or_insert_with(|| RootCellFace {
                    face: f,
                    facets: Vec::new(),
                })
                .facets
                .push((r.i, r.j));
        }
    }
    by_key.into_values().collect()
}

/// Distinct edges of V(0) as sorted endpoint pairs.
pub fn root_cell_edges() -> BTreeSet<(Coord5, Coord5)> {
    let mut edges = BTreeSet::new();
    for f in root_cell_faces() {
        let v = f.face.vertices();
        for m in 0..4 {
            let (a, b) = (v[m], v[(m + 1) % 4]);
            edges.insert(if a < b { (a, b) } else { (b, a) });
        }
    }
    edges
}

/// Vertex of the permutohedron: `values[p]` is the coefficient of k_{p+1}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PermutoVertex {
    pub values: [i64; 5],
}

impl PermutoVertex {
    pub fn point(&self) -> Coord5 {
        Coord5::from_ints(self.values)
    }
}

/// All 120 placements of (5,4,3,2,1), in lexicographic order of the values tuple.
pub fn permutohedron_vertices() -> Vec<PermutoVertex> {
    let mut out = Vec::with_capacity(120);
    let mut vals = [1i64, 2, 3, 4, 5];
    loop {
        out.push(PermutoVertex { values: vals });
        if !next_permutation(&mut vals) {
            break;
        }
    }
    out
}

fn next_permutation(v: &mut [i64]) -> bool {
    let n = v.len();
    let Some(i) = (0..n - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| v[j] > v[i]).expect("pivot exists");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Ordered set partition of positions 1..=5; the first block carries the largest values.
pub type Partition = Vec<Vec<usize>>;

/// All ordered set partitions of {1..5} into `k` blocks.
pub fn ordered_partitions(k: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let total = k.pow(5);
    for code in 0..total {
        let mut labels = [0usize; 5];
        let mut c = code;
        for l in labels.iter_mut().rev() {
            *l = c % k;
            c /= k;
        }
        let parts: Partition = (0..k)
            .map(|b| (1..=5).filter(|p| labels[p - 1] == b).collect())
            .collect();
        if parts.iter().all(|b: &Vec<usize>| !b.is_empty()) {
            out.push(parts);
        }
    }
    out
}

/// Values assigned to each block: block 1 gets the top |B₁| values, etc.
fn block_values(part: &Partition) -> Vec<Vec<i64>> {
    let mut next = 5i64;
    part.iter()
        .map(|b| {
            let vals = (0..b.len() as i64).map(|d| next - d).collect();
            next -= b.len() as i64;
            vals
        })
        .collect()
}

/// Vertex with each block's values decreasing along increasing positions.
fn start_vertex(part: &Partition) -> [i64; 5] {
    let mut values = [0; 5];
    for (block, vals) in part.iter().zip(block_values(part)) {
        for (p, v) in block.iter().zip(vals) {
            values[p - 1] = v;
        }
    }
    values
}

fn swap_values(values: &mut [i64; 5], a: i64, b: i64) {
    for v in values.iter_mut() {
        if *v == a {
            *v = b;
        } else if *v == b {
            *v = a;
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum FaceShape {
    Hexagon,
    Square,
}

/// 2-face of the permutohedron.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutoFace {
    pub partition: Partition,
    pub shape: FaceShape,
    /// Cyclic boundary, consecutive vertices differing by a swap of adjacent values.
    pub boundary: Vec<PermutoVertex>,
}

impl PermutoFace {
    pub fn from_partition(partition: Partition) -> Option<Self> {
        let dims: usize = partition.iter().map(|b| b.len() - 1).sum();
        if dims != 2 {
            return None;
        }
        let vals = block_values(&partition);
        let mut swaps: Vec<(i64, i64)> = Vec::new();
        let shape = if let Some(v) = vals.iter().find(|v| v.len() == 3) {
            swaps.push((v[0], v[1]));
            swaps.push((v[1], v[2]));
            FaceShape::Hexagon
        } else {
            for v in vals.iter().filter(|v| v.len() == 2) {
                swaps.push((v[0], v[1]));
            }
            FaceShape::Square
        };
        let n = if shape == FaceShape::Hexagon { 6 } else { 4 };
        let mut cur = start_vertex(&partition);
        let mut boundary = Vec::with_capacity(n);
        for step in 0..n {
            boundary.push(PermutoVertex { values: cur });
            let (a, b) = swaps[step % 2];
            swap_values(&mut cur, a, b);
        }
        Some(Self {
            partition,
            shape,
            boundary,
        })
    }

    /// The block of size 3 for a hexagon, or the two blocks of size 2 for a square.
    pub fn moving_blocks(&self) -> Vec<&Vec<usize>> {
        self.partition.iter().filter(|b| b.len() > 1).collect()
    }
}

/// The 150 faces: 60 hexagons and 90 squares.
pub fn permutohedron_faces() -> Vec<PermutoFace> {
    ordered_partitions(3)
        .into_iter()
        .filter_map(PermutoFace::from_partition)
        .collect()
}

/// Permutohedron edges: ordered partitions into four blocks.
pub fn permutohedron_edges() -> Vec<Partition> {
    ordered_partitions(4)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum FacetShape {
    TruncatedOctahedron,
    HexagonalPrism,
}

/// 3-face of the permutohedron.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutoFacet {
    pub partition: Partition,
    pub shape: FacetShape,
}

/// The 30 facets: 10 truncated octahedra (4+1) and 20 hexagonal prisms (3+2).
pub fn permutohedron_facets() -> Vec<PermutoFacet> {
    ordered_partitions(2)
        .into_iter()
        .map(|partition| {
            let big = partition.iter().map(Vec::len).max().unwrap_or(0);
            let shape = if big == 4 {
                FacetShape::TruncatedOctahedron
            } else {
                FacetShape::HexagonalPrism
            };
            PermutoFacet { partition, shape }
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Lattice {
    Root,
    Weight,
}

/// Face-vector bookkeeping for a Voronoi cell.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellSummary {
    pub lattice: Lattice,
    pub n0: usize,
    pub n1: usize,
    pub n2: usize,
    pub n3: usize,
    /// Face counts by shape name.
    pub faces_by_kind: Vec<(String, usize)>,
    /// Facet counts by shape name.
    pub facets_by_kind: Vec<(String, usize)>,
}

impl CellSummary {
    pub fn euler(&self) -> i64 {
        self.n0 as i64 - self.n1 as i64 + self.n2 as i64 - self.n3 as i64
    }
}

/// Census of V(0)* (the permutohedron).
pub fn cell_summary() -> CellSummary {
    let faces = permutohedron_faces();
    let facets = permutohedron_facets();
    let count_faces = |s| faces.iter().filter(|f| f.shape == s).count();
    let count_facets = |s| facets.iter().filter(|f| f.shape == s).count();
    CellSummary {
        lattice: Lattice::Weight,
        n0: permutohedron_vertices().len(),
        n1: permutohedron_edges().len(),
        n2: faces.len(),
        n3: facets.len(),
        faces_by_kind: vec![
            ("hexagon".into(), count_faces(FaceShape::Hexagon)),
            ("square".into(), count_faces(FaceShape::Square)),
        ],
        facets_by_kind: vec![
            (
                "truncated octahedron".into(),
                count_facets(FacetShape::TruncatedOctahedron),
            ),
            (
                "hexagonal prism".into(),
                count_facets(FacetShape::HexagonalPrism),
            ),
        ],
    }
}

/// Census of V(0).
pub fn root_cell_summary() -> CellSummary {
    let faces = root_cell_faces();
    CellSummary {
        lattice: Lattice::Root,
        n0: root_cell_vertices().len(),
        n1: root_cell_edges().len(),
        n2: faces.len(),
        n3: all_rhombohedra().len(),
        faces_by_kind: vec![("rhombus".into(), faces.len())],
        facets_by_kind: vec![("rhombohedron".into(), all_rhombohedra().len())],
    }
}

/// Checks that every facet vertex lies on its hyperplane (λ, kᵢ − kⱼ) = 1.
pub fn facets_on_hyperplanes() -> bool {
    all_rhombohedra().iter().all(|r| {
        let root = r.root();
        r.vertices
            .iter()
            .all(|v| inner4(v, &root) == ratio(1, 1))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::golden::GoldenNumber;
    use crate::lattice::plane_norm2;

    fn k(i: usize) -> Coord5 {
        Coord5::k(i)
    }

    #[test]
    fn root_cell_radius_classes() {
        let verts = root_cell_vertices();
        assert_eq!(verts.len(), 30);
        assert!(verts.contains(&(k(1) + k(2) + k(3) + k(4))));
        let two_fifths = GoldenNumber::rational(ratio(2, 5));
        let t2 = GoldenNumber::tau() * GoldenNumber::tau();
        let classes = [two_fifths / t2, two_fifths, two_fifths * t2];
        for c in classes {
            assert_eq!(verts.iter().filter(|v| plane_norm2(v) == c).count(), 10);
        }
    }

    #[test]
    fn facet_one_five_is_listed_orbit() {
        let r = rhombohedron(1, 5).unwrap();
        let got: BTreeSet<Coord5> = r.vertices.iter().copied().collect();
        let want: BTreeSet<Coord5> = [
            k(1),
            k(1) + k(2),
            k(1) + k(3),
            k(1) + k(4),
            -(k(2) + k(5)),
            -(k(3) + k(5)),
            -(k(4) + k(5)),
            -k(5),
        ]
        .into_iter()
        .collect();
        assert_eq!(got, want);
        assert!(matches!(rhombohedron(2, 2), Err(Error::BadIndices(2, 2))));
    }

    #[test]
    fn facet_centers_and_hyperplanes() {
        assert!(facets_on_hyperplanes());
        let verts: BTreeSet<Coord5> = root_cell_vertices().into_iter().collect();
        for r in all_rhombohedra() {
            let sum = r.vertices.iter().fold(Coord5::zero(), |a, b| a + *b);
            assert_eq!(sum.scale(ratio(1, 8)), r.center());
            assert!(r.vertices.iter().all(|v| verts.contains(v)));
        }
    }

    #[test]
    fn vertex_incidence_counts() {
        let mut count: BTreeMap<Coord5, usize> = BTreeMap::new();
        for r in all_rhombohedra() {
            for v in r.vertices {
                *count.entry(v).or_default() += 1;
            }
        }
        assert_eq!(count.len(), 30);
        for (v, n) in count {
            let expected = if plane_norm2(&v) == GoldenNumber::rational(ratio(2, 5)) {
                4
            } else {
                6
            };
            assert_eq!(n, expected, "{v}");
        }
    }

    #[test]
    fn root_cell_census() {
        let faces = root_cell_faces();
        assert_eq!(faces.len(), 60);
        assert!(faces.iter().all(|f| f.facets.len() == 2));
        let s = root_cell_summary();
        assert_eq!((s.n0, s.n1, s.n2, s.n3), (30, 70, 60, 20));
        assert_eq!(s.euler(), 0);
    }

    #[test]
    fn permutohedron_census() {
        let s = cell_summary();
        assert_eq!((s.n0, s.n1, s.n2, s.n3), (120, 240, 150, 30));
        assert_eq!(s.faces_by_kind[0].1, 60);
        assert_eq!(s.faces_by_kind[1].1, 90);
        assert_eq!(s.facets_by_kind[0].1, 10);
        assert_eq!(s.facets_by_kind[1].1, 20);
        assert_eq!(s.euler(), 0);
        let pts: BTreeSet<Coord5> = permutohedron_vertices().iter().map(|v| v.point()).collect();
        assert_eq!(pts.len(), 120);
        assert!(pts.contains(&Coord5::from_ints([4, 3, 2, 1, 0])));
    }

    fn digits(f: &PermutoFace) -> Vec<String> {
        f.boundary
            .iter()
            .map(|v| v.values.iter().map(|d| d.to_string()).collect())
            .collect()
    }

    #[test]
    fn hexagon_walks() {
        let f = PermutoFace::from_partition(vec![vec![1, 2, 3], vec![4], vec![5]]).unwrap();
        assert_eq!(
            digits(&f),
            ["54321", "45321", "35421", "34521", "43521", "53421"]
        );
        let f = PermutoFace::from_partition(vec![vec![1, 3, 4], vec![2], vec![5]]).unwrap();
        assert_eq!(
            digits(&f),
            ["52431", "42531", "32541", "32451", "42351", "52341"]
        );
    }

    #[test]
    fn boundary_edges_are_roots() {
        for f in permutohedron_faces() {
            let n = f.boundary.len();
            for m in 0..n {
                let d = f.boundary[(m + 1) % n].point() - f.boundary[m].point();
                assert!(crate::group::root_indices(&d).is_some());
            }
        }
    }
}
