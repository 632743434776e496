//! Self-check suite behind the `verify` subcommand.

use std::fmt;

use crate::golden::{ratio, GoldenNumber};
use crate::group::{
    coxeter, extend_order20, fixed_point, h2_generators, named, reflection, reflection_decompositions,
    reflection_identities_hold, stabilizer_of, AffineElement,
};
use crate::lattice::{inner4, plane_norm2, Coord5, RootSystemData, Space};
use crate::matrix::{full_matrix, plane_matrix, PlaneMatrix3};
use crate::recipes::{self, Figure};
use crate::tiling::growth::{five_fold_centers, is_invariant, rotation_about_k2_k3};
use crate::tiling::TileKind;
use crate::voronoi::{cell_summary, facets_on_hyperplanes, root_cell_summary, root_cell_vertices};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Warn,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Warn => "WARN",
            Status::Fail => "FAIL",
        })
    }
}

#[derive(Clone, Debug)]
pub struct Check {
    pub status: Status,
    pub name: String,
    pub anchor: &'static str,
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    fn push(&mut self, ok: bool, name: &str, anchor: &'static str, detail: impl Into<String>) {
        self.push_status(if ok { Status::Pass } else { Status::Fail }, name, anchor, detail);
    }

    fn push_status(&mut self, status: Status, name: &str, anchor: &'static str, detail: impl Into<String>) {
        self.checks.push(Check {
            status,
            name: name.into(),
            anchor,
            detail: detail.into(),
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{} {:<34} {} [{}]", c.status, c.name, c.detail, c.anchor)?;
        }
        let count = |s| self.checks.iter().filter(|c| c.status == s).count();
        writeln!(
            f,
            "{} checks: {} pass, {} warn, {} fail",
            self.checks.len(),
            count(Status::Pass),
            count(Status::Warn),
            count(Status::Fail)
        )
    }
}

fn grid() -> impl Iterator<Item = [i64; 4]> {
    let r = [-2i64, -1, 0, 1, 2];
    r.into_iter().flat_map(move |a| {
        r.into_iter()
            .flat_map(move |b| r.into_iter().flat_map(move |c| r.into_iter().map(move |d| [a, b, c, d])))
    })
}

fn all_roots() -> Vec<Coord5> {
    let mut out = Vec::new();
    for i in 1..=5 {
        for j in 1..=5 {
            if i != j {
                out.push(Coord5::root(i, j));
            }
        }
    }
    out
}

fn root_data(r: &mut VerifyReport) {
    let mut ok = true;
    for i in 1..=5 {
        for j in 1..=5 {
            let want = if i == j { ratio(4, 5) } else { ratio(-1, 5) };
            ok &= inner4(&Coord5::k(i), &Coord5::k(j)) == want;
        }
    }
    r.push(ok, "basis inner products", "Gram matrix of the kᵢ", "(kᵢ,kᵢ)=4/5, (kᵢ,kⱼ)=-1/5");

    let d = RootSystemData::new();
    let mut ok = true;
    for i in 0..4 {
        for j in 0..4 {
            let want = if i == j { ratio(1, 1) } else { ratio(0, 1) };
            ok &= inner4(&d.weights[i], &d.simple_roots[j]) == want;
        }
    }
    r.push(ok, "weights dual to simple roots", "fundamental weights", "(ωᵢ,αⱼ)=δᵢⱼ");
}

fn cells(r: &mut VerifyReport) {
    let s = root_cell_summary();
    r.push(
        (s.n0, s.n1, s.n2, s.n3) == (30, 70, 60, 20),
        "root cell census",
        "Voronoi cell of the root lattice",
        format!("{}/{}/{}/{}", s.n0, s.n1, s.n2, s.n3),
    );
    let mut radii: Vec<GoldenNumber> = root_cell_vertices().iter().map(plane_norm2).collect();
    radii.sort();
    radii.dedup();
    let t2 = GoldenNumber::tau() * GoldenNumber::tau();
    let two_fifths = GoldenNumber::rational(ratio(2, 5));
    let want = vec![two_fifths / t2, two_fifths, two_fifths * t2];
    r.push(radii == want, "root cell projected radii", "three concentric orbits", "(2/5)τ⁻², 2/5, (2/5)τ²");
    r.push(facets_on_hyperplanes(), "rhombohedral facets", "facet hyperplanes (λ,α)=1", "20 facets × 8 vertices");

    let w = cell_summary();
    r.push(
        (w.n0, w.n1, w.n2, w.n3) == (120, 240, 150, 30),
        "permutohedron census",
        "N₀ = 120 vertices",
        format!("{}/{}/{}/{}", w.n0, w.n1, w.n2, w.n3),
    );
    r.push(w.euler() == 0, "permutohedron Euler characteristic", "N₀−N₁+N₂−N₃", format!("{}", w.euler()));
}

fn group_algebra(r: &mut VerifyReport) {
    let roots = all_roots();
    let lambdas = [
        Coord5::zero(),
        Coord5::from_ints([2, -1, 0, 3, 1]),
        Coord5::from_ints([1, 0, 0, 0, 0]),
        Coord5::new([ratio(1, 2), ratio(0, 1), ratio(-3, 2), ratio(1, 1), ratio(0, 1)]),
    ];
    let mut cases = 0;
    let mut ok = true;
    for lam in &lambdas {
        for a in &roots {
            for b in &roots {
                for n in [(0, 0), (1, -1), (2, 3)] {
                    if let Ok(Some(holds)) = reflection_identities_hold(lam, a, b, n.0, n.1) {
                        cases += 1;
                        ok &= holds;
                    }
                }
            }
        }
    }
    r.push(ok && cases >= 1000, "reflection identities", "products of two affine reflections", format!("{cases} cases"));

    let mut ok = true;
    let mut n = 0;
    for p in grid() {
        let (r1, r2) = h2_generators(p[0], p[1], p[2], p[3]);
        ok &= r1.compose(&r1).is_identity() && r2.compose(&r2).is_identity();
        ok &= r1.compose(&r2).pow(5).is_identity();
        n += 1;
    }
    r.push(ok, "H2 relations", "R1²=R2²=(R1R2)⁵=1", format!("{n} parameter tuples"));

    let mut ok = true;
    let mut n = 0;
    for lam in &lambdas[..3] {
        for a in &roots {
            let conj = reflection(a, 0).expect("root").conjugate_by_translation(lam);
            let li = inner4(lam, a);
            if li.is_integer() {
                ok &= conj == reflection(a, li.to_integer()).expect("root");
                n += 1;
            }
        }
    }
    r.push(ok, "translation similarity", "t(λ) r_α t(−λ) = r_{α,(λ,α)}", format!("{n} cases"));

    let mut disagree = 0;
    let mut total = 0;
    for p in grid() {
        for line in reflection_decompositions(p[0], p[1], p[2], p[3]) {
            total += 1;
            if !line.agrees() {
                disagree += 1;
            }
        }
    }
    let status = if disagree == 0 { Status::Pass } else { Status::Warn };
    r.push_status(
        status,
        "published decomposition indices",
        "index sums of R1R2R1, R2R1R2, R1R2R1R2R1",
        format!("{disagree}/{total} printed index pairs differ from composition"),
    );
}

fn matrices(r: &mut VerifyReport) {
    let tol = 1e-10;
    let diag = |a: f64, b: f64| PlaneMatrix3([[a, 0.0, 0.0], [0.0, b, 0.0], [0.0, 0.0, 1.0]]);
    let c2 = plane_matrix(&named::c2()).expect("plane");
    let eta = plane_matrix(&named::eta()).expect("plane");
    r.push(
        c2.max_abs_diff(&diag(1.0, -1.0)) < tol && eta.max_abs_diff(&diag(-1.0, 1.0)) < tol,
        "C2 and η matrices",
        "mirror reflections of the plane",
        "diag(1,-1,1), diag(-1,1,1)",
    );
    let c1 = plane_matrix(&named::c1()).expect("plane");
    let (x, y) = Coord5::root(5, 4).embed(Space::Parallel);
    let fixed = c1.apply(&{
        let (a, b) = Coord5::k(5).embed(Space::Parallel);
        [a, b, 1.0]
    });
    let (fx, fy) = Coord5::k(5).embed(Space::Parallel);
    let ok = c1.mul(&c1).max_abs_diff(&PlaneMatrix3::identity()) < tol
        && (c1.0[0][2] - x).abs() < tol
        && (c1.0[1][2] - y).abs() < tol
        && (fixed[0] - fx).abs() < tol
        && (fixed[1] - fy).abs() < tol;
    r.push(ok, "C1 matrix", "reflection fixing k₅", "C1²=1, fixes k₅, translation k₅−k₄");

    let rot = c2.mul(&c1);
    let ang = 2.0 * std::f64::consts::PI / 5.0;
    let lin_ok = (rot.0[0][0] - ang.cos()).abs() < tol
        && (rot.0[1][1] - ang.cos()).abs() < tol
        && (rot.0[0][1].abs() - ang.sin()).abs() < tol;
    let fixes = {
        let v = rot.apply(&[fx, fy, 1.0]);
        (v[0] - fx).abs() < tol && (v[1] - fy).abs() < tol
    };
    r.push(lin_ok && fixes, "C2·C1 rotation", "rotation by 2π/5 about k₅", "");

    let mut worst: f64 = 0.0;
    for name in named::NAMES {
        let e = named::by_name(name).expect("named");
        let m = full_matrix(&e);
        for i in 1..=5 {
            let k = Coord5::k(i);
            let want = crate::lattice::embed4(&e.apply(&k));
            let got = m.apply(&crate::lattice::embed4(&k));
            for c in 0..4 {
                worst = worst.max((want[c] - got[c]).abs());
            }
        }
    }
    r.push(worst < tol, "5×5 matrices vs exact action", "action on the four-dimensional frame", format!("max error {worst:.1e}"));
}

fn stabilizers(r: &mut VerifyReport) {
    let closed = |s: &[AffineElement]| s.iter().all(|a| s.iter().all(|b| s.contains(&a.compose(b))));
    for (label, p) in [("k₅", Coord5::k(5)), ("k₂+k₃", Coord5::k(2) + Coord5::k(3))] {
        let ok = match stabilizer_of(&p) {
            Ok(s) => {
                let ext = extend_order20(&s);
                s.len() == 10
                    && s.iter().all(|g| g.apply(&p) == p)
                    && closed(&s)
                    && ext.is_ok_and(|e| e.len() == 20 && closed(&e) && e.iter().all(|g| g.apply(&p) == p))
            }
            Err(_) => false,
        };
        r.push(ok, &format!("stabilizer of {label}"), "order-10 point groups", "10 fixing, closed; order-20 extension closed");
    }
    let shift = Coord5::k(2) + Coord5::k(3) - Coord5::k(5);
    let a = stabilizer_of(&Coord5::k(5)).expect("center");
    let b = stabilizer_of(&(Coord5::k(2) + Coord5::k(3))).expect("center");
    let ok = a.iter().zip(&b).all(|(g, h)| g.conjugate_by_translation(&shift) == *h);
    r.push(ok, "stabilizers conjugate", "conjugation by t(k₂+k₃−k₅)", "");

    let centers = five_fold_centers(2);
    let ok = centers.iter().any(|(_, p)| *p == Coord5::k(2) + Coord5::k(3))
        && fixed_point(-1, 1, -1, 1) == Coord5::k(2) + Coord5::k(3)
        && coxeter(-1, 1, -1, 1).apply(&fixed_point(-1, 1, -1, 1)) == fixed_point(-1, 1, -1, 1);
    r.push(ok, "five-fold centers", "fixed points of R1R2", format!("{} distinct centers for |nᵢ| ≤ 2", centers.len()));
}

fn tilings(r: &mut VerifyReport) {
    match recipes::run(Figure::Fig4) {
        Ok(o) => {
            let t = GoldenNumber::tau();
            let ok = o.patch.len() == 10
                && o.patch.count(TileKind::ThickRhombusRoot) == 5
                && o.patch.area() == GoldenNumber::from_ints(5, 0) * t * t;
            r.push(ok, "root decagon", "ten rhombi, five thick and five thin", format!("{} tiles, area {}", o.patch.len(), o.patch.area()));
        }
        Err(e) => r.push(false, "root decagon", "ten rhombi, five thick and five thin", e.to_string()),
    }
    match recipes::run(Figure::Fig8) {
        Ok(o) => {
            let ok = o.patch.len() == 20
                && [
                    TileKind::UnitRhombusWeight,
                    TileKind::TauRhombusWeight,
                    TileKind::ThickHexagonWeight,
                    TileKind::ThinHexagonWeight,
                ]
                .iter()
                .all(|k| o.patch.count(*k) == 5);
            r.push(ok, "weight decagon", "20 tiles, 5 tiles of each kind", format!("{} tiles", o.patch.len()));
        }
        Err(e) => r.push(false, "weight decagon", "20 tiles, 5 tiles of each kind", e.to_string()),
    }
    match recipes::run(Figure::Fig5) {
        Ok(o) => {
            let ok = o.report.is_empty() && is_invariant(&o.patch, &rotation_about_k2_k3());
            r.push(ok, "rotated decagons", "four rotations about k₂+k₃", format!("{} tiles, {} conflicts", o.patch.len(), o.report.len()));
        }
        Err(e) => r.push(false, "rotated decagons", "four rotations about k₂+k₃", e.to_string()),
    }
    for fig in [Figure::Fig6, Figure::Fig7] {
        let anchor = "centrally symmetric growth";
        match recipes::run(fig) {
            Ok(o) => {
                let center = o.center.expect("grown about a center");
                let rot = stabilizer_of(&center).expect("center")[1];
                let sym = is_invariant(&o.patch, &rot) && o.patch.conflict_audit().is_empty();
                r.push(sym, &format!("{fig} symmetry"), anchor, format!("{} tiles about {center}", o.patch.len()));
                let status = if o.report.is_empty() { Status::Pass } else { Status::Warn };
                r.push_status(status, &format!("{fig} conflict log"), anchor, format!("{} rejected overlaps", o.report.len()));
            }
            Err(e) => r.push(false, &format!("{fig} symmetry"), anchor, e.to_string()),
        }
    }
    match recipes::run(Figure::Fig9) {
        Ok(o) => {
            let s = o.tessellation.expect("stats");
            let ok = o.patch.conflict_audit().is_empty() && s.translates_added >= 1;
            r.push(
                ok,
                "weight tessellation",
                "tessellation by four tiles",
                format!(
                    "{} tiles, {}/{} translates, coverage {:.3}",
                    o.patch.len(),
                    s.translates_added,
                    s.translates_considered,
                    s.coverage()
                ),
            );
        }
        Err(e) => r.push(false, "weight tessellation", "tessellation by four tiles", e.to_string()),
    }
}

pub fn run_verify() -> VerifyReport {
    let mut r = VerifyReport::default();
    root_data(&mut r);
    cells(&mut r);
    group_algebra(&mut r);
    matrices(&mut r);
    stabilizers(&mut r);
    tilings(&mut r);
    r
}
