//! Patch growth under affine H2, the weight-decagon tessellation and the
//! enumeration of five-fold centers.

use std::collections::BTreeSet;

use crate::error::Result;
use crate::golden::GoldenNumber;
use crate::group::{coxeter, fixed_point, stabilizer_of, AffineElement};
use crate::lattice::{area_unit, plane_norm2, Coord5};

use super::patch::{interiors_overlap, overlap_witness, patch_union, within, Conflict, ConflictReport, Insert, Patch};
use super::tile::Tile;

/// Parallel length of kᵢ, the edge of the root-lattice rhombi.
pub fn edge_length() -> f64 {
    0.4f64.sqrt()
}

#[derive(Clone, Debug)]
pub struct ClosureOptions {
    pub center: Coord5,
    /// Plane units; tiles with centroid farther from `center` are dropped.
    pub radius: f64,
    pub max_rounds: usize,
    /// When nonempty, tiles are inserted together with their whole orbit
    /// under this group or not at all.
    pub symmetry: Vec<AffineElement>,
}

struct Grower {
    patch: Patch,
    report: ConflictReport,
    rejected: BTreeSet<Vec<Coord5>>,
    opts: ClosureOptions,
}

impl Grower {
    fn orbit(&self, t: &Tile) -> Vec<Tile> {
        if self.opts.symmetry.is_empty() {
            return vec![t.clone()];
        }
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for s in &self.opts.symmetry {
            let img = t.transform(s);
            if seen.insert(img.key()) {
                out.push(img);
            }
        }
        out
    }

    fn offer(&mut self, t: &Tile) {
        let key = t.key();
        if self.patch.contains(t) || self.rejected.contains(&key) {
            return;
        }
        if !within(t, &self.opts.center, self.opts.radius) {
            self.report.outside += 1;
            self.rejected.insert(key);
            return;
        }
        let orbit: Vec<Tile> = self
            .orbit(t)
            .into_iter()
            .filter(|m| !self.patch.contains(m))
            .collect();
        let mut clashes = Vec::new();
        for (i, m) in orbit.iter().enumerate() {
            if let Some((existing, witness)) = self.patch.find_overlap(m) {
                clashes.push(Conflict {
                    existing,
                    offending: m.clone(),
                    witness,
                });
                continue;
            }
            for other in &orbit[..i] {
                if interiors_overlap(other, m) {
                    let witness = overlap_witness(other, m).expect("overlap");
                    clashes.push(Conflict {
                        existing: other.clone(),
                        offending: m.clone(),
                        witness,
                    });
                }
            }
        }
        if clashes.is_empty() {
            for m in orbit {
                let added = self.patch.try_insert(m);
                debug_assert!(matches!(added, Insert::Added));
            }
        } else {
            for m in &orbit {
                self.rejected.insert(m.key());
            }
            self.report.conflicts.extend(clashes);
        }
    }
}

/// Repeatedly applies `gens` to the patch and keeps the images that fit.
///
/// Deterministic: generators in the given order, tiles in key order.
/// Stops at a fixpoint or after `max_rounds` rounds.
pub fn orbit_closure(seed: &Patch, gens: &[AffineElement], opts: ClosureOptions) -> (Patch, ConflictReport) {
    let mut g = Grower {
        patch: Patch::new(),
        report: ConflictReport::default(),
        rejected: BTreeSet::new(),
        opts,
    };
    g.patch.radius = Some(g.opts.radius);
    for t in seed.tiles() {
        g.offer(t);
    }
    if gens.is_empty() {
        return (g.patch, g.report);
    }
    for _ in 0..g.opts.max_rounds {
        let before = g.patch.len();
        let current: Vec<Tile> = g.patch.tiles().cloned().collect();
        for e in gens {
            for t in &current {
                g.offer(&t.transform(e));
            }
        }
        if g.patch.len() == before {
            break;
        }
    }
    g.report.canonicalize();
    (g.patch, g.report)
}

/// Rotation by 2π/5 about k₂+k₃: (cycle, k₂ − k₄).
pub fn rotation_about_k2_k3() -> AffineElement {
    coxeter(-1, 1, -1, 1)
}

/// Union of `seed` with its images under rotᵐ, m = 1..=4.
pub fn rotate_four_times(seed: &Patch, rot: &AffineElement) -> (Patch, ConflictReport) {
    let mut acc = seed.clone();
    let mut report = ConflictReport::default();
    let mut g = *rot;
    for _ in 0..4 {
        let (next, r) = patch_union(&acc, &seed.transform(&g));
        acc = next;
        report.extend(r);
        g = g.compose(rot);
    }
    (acc, report)
}

/// True iff the patch maps to itself under `e` (exact key comparison).
pub fn is_invariant(p: &Patch, e: &AffineElement) -> bool {
    p.transform(e).keys() == p.keys()
}

/// Coverage bookkeeping for the weight-decagon tessellation.
#[derive(Clone, Debug, PartialEq)]
pub struct TessellationStats {
    pub radius: f64,
    pub translates_considered: usize,
    pub translates_added: usize,
    pub translates_skipped: usize,
    pub conflicting_pairs: usize,
    /// Exact area of tiles with centroid inside the disk, in cross_par units.
    pub covered_area: GoldenNumber,
    pub disk_area: f64,
}

impl TessellationStats {
    pub fn coverage(&self) -> f64 {
        self.covered_area.to_f64() * area_unit() / self.disk_area
    }
}

/// Translation vectors 5·m, m ∈ [−bound, bound]⁴ × {0}, sorted by exact
/// parallel length then lexicographically.
pub fn weight_translations(bound: i64) -> Vec<Coord5> {
    let mut out: Vec<(GoldenNumber, Coord5)> = Vec::new();
    let r = -bound..=bound;
    for a in r.clone() {
        for b in r.clone() {
            for c in r.clone() {
                for d in r.clone() {
                    let v = Coord5::from_ints([5 * a, 5 * b, 5 * c, 5 * d, 0]);
                    out.push((plane_norm2(&v), v));
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out.into_iter().map(|(_, v)| v).collect()
}

/// Greedy union of translated weight decagons within `radius` of the origin.
///
/// A translate is skipped as a whole if any of its tiles overlaps the
/// accumulated patch.
pub fn weight_tessellation(decagon: &Patch, radius: f64) -> (Patch, ConflictReport, TessellationStats) {
    let mut patch = decagon.clone();
    patch.radius = Some(radius);
    let mut report = ConflictReport::default();
    let mut considered = 1;
    let mut added = 1;
    let mut skipped = 0;
    for v in weight_translations(3).into_iter().skip(1) {
        if plane_norm2(&v).to_f64() > radius * radius {
            break;
        }
        considered += 1;
        let shifted = decagon.transform(&AffineElement::translation(v));
        let mut clashes = Vec::new();
        for t in shifted.tiles() {
            if patch.contains(t) {
                continue;
            }
            if let Some((existing, witness)) = patch.find_overlap(t) {
                clashes.push(Conflict {
                    existing,
                    offending: t.clone(),
                    witness,
                });
            }
        }
        if clashes.is_empty() {
            for t in shifted.tiles() {
                patch.try_insert(t.clone());
            }
            added += 1;
        } else {
            skipped += 1;
            report.conflicts.extend(clashes);
        }
    }
    let origin = Coord5::zero();
    let covered = patch
        .tiles()
        .filter(|t| within(t, &origin, radius))
        .fold(GoldenNumber::zero(), |a, t| a + t.area());
    let stats = TessellationStats {
        radius,
        translates_considered: considered,
        translates_added: added,
        translates_skipped: skipped,
        conflicting_pairs: report.len(),
        covered_area: covered,
        disk_area: std::f64::consts::PI * radius * radius,
    };
    report.canonicalize();
    (patch, report, stats)
}

/// Centers λ(n) for |nᵢ| ≤ bound with a verified order-5 stabilizer, one per
/// distinct point (first n in lexicographic order).
pub fn five_fold_centers(bound: i64) -> Vec<([i64; 4], Coord5)> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let r = -bound..=bound;
    for a in r.clone() {
        for b in r.clone() {
            for c in r.clone() {
                for d in r.clone() {
                    let p = fixed_point(a, b, c, d);
                    if seen.contains(&p) {
                        continue;
                    }
                    let rot = coxeter(a, b, c, d);
                    let ok = rot.apply(&p) == p
                        && rot.order(5) == Some(5)
                        && stabilizer_of(&p).is_ok();
                    if ok {
                        seen.insert(p);
                        out.push(([a, b, c, d], p));
                    }
                }
            }
        }
    }
    out
}

/// Stabilizer of a center, as used for growth about it.
pub fn center_group(center: &Coord5) -> Result<Vec<AffineElement>> {
    stabilizer_of(center)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tiling::decagon::{decagon_root, decagon_weight};

    #[test]
    fn closure_without_generators_keeps_seed() {
        let seed = decagon_root().unwrap();
        let opts = ClosureOptions {
            center: Coord5::zero(),
            radius: 10.0,
            max_rounds: 3,
            symmetry: vec![],
        };
        let (p, report) = orbit_closure(&seed, &[], opts);
        assert_eq!(p, seed);
        assert!(report.is_empty());
    }

    #[test]
    fn fig5_rotations_are_conflict_free() {
        let seed = decagon_root().unwrap();
        let rot = rotation_about_k2_k3();
        let (p, report) = rotate_four_times(&seed, &rot);
        assert!(report.is_empty());
        assert_eq!(p.len(), 35);
        assert!(is_invariant(&p, &rot));
        assert!(p.conflict_audit().is_empty());
    }

    #[test]
    fn five_fold_center_examples() {
        let c = five_fold_centers(1);
        assert!(c.iter().any(|(_, p)| *p == Coord5::k(2) + Coord5::k(3)));
        assert_eq!(c[0].1, fixed_point(-1, -1, -1, -1));
        assert!(c.iter().any(|(_, p)| p.is_zero()));
    }

    #[test]
    fn small_radius_tessellation_is_the_decagon() {
        let d = decagon_weight().unwrap();
        let (p, report, stats) = weight_tessellation(&d, 0.3);
        assert_eq!(p, d);
        assert!(report.is_empty());
        assert_eq!(stats.translates_added, 1);
    }

    #[test]
    fn short_translates_overlap_and_are_skipped() {
        let d = decagon_weight().unwrap();
        let (p, report, stats) = weight_tessellation(&d, 0.5);
        assert_eq!(p, d);
        assert_eq!(stats.translates_considered, 5);
        assert_eq!(stats.translates_skipped, 4);
        assert!(!report.is_empty());
    }

    #[test]
    fn translations_sorted_by_length() {
        let t = weight_translations(1);
        assert!(t[0].is_zero());
        for w in t.windows(2) {
            assert!(plane_norm2(&w[0]) <= plane_norm2(&w[1]));
        }
    }
}
