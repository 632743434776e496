//! Affine A4 as exact (sign, permutation, translation) triples, and its
//! affine H2 subgroup.

use std::fmt;

use crate::error::{Error, Result};
use crate::golden::{ratio, Rational};
use crate::lattice::{h2_simple_roots, inner4, Coord5};

/// Permutation of the five basis vectors, 0-based: kᵢ ↦ k_{p[i]}.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Perm5(pub [usize; 5]);

impl Perm5 {
    pub const IDENTITY: Perm5 = Perm5([0, 1, 2, 3, 4]);

    /// Transposition (i j), 1-based.
    pub fn transposition(i: usize, j: usize) -> Self {
        let mut p = Self::IDENTITY.0;
        p.swap(i - 1, j - 1);
        Perm5(p)
    }

    /// The map j ↦ s·j + c on indices mod 5 (1-based, index 5 ≡ 0).
    pub fn affine(s: i64, c: i64) -> Self {
        Perm5(std::array::from_fn(|i| {
            let j = (i + 1) as i64;
            let img = (s * j + c).rem_euclid(5);
            (if img == 0 { 5 } else { img }) as usize - 1
        }))
    }

    /// The 5-cycle k₁ → k₂ → … → k₅ → k₁.
    pub fn cycle() -> Self {
        Self::affine(1, 1)
    }

    /// (1 4)(2 3), the reflection part of η and C2.
    pub fn flip() -> Self {
        Self::affine(-1, 0)
    }

    pub fn then(&self, first: &Perm5) -> Perm5 {
        Perm5(std::array::from_fn(|i| self.0[first.0[i]]))
    }

    pub fn inverse(&self) -> Perm5 {
        let mut out = [0; 5];
        for (i, &p) in self.0.iter().enumerate() {
            out[p] = i;
        }
        Perm5(out)
    }

    /// Returns (s, c) when the permutation is j ↦ s·j + c mod 5.
    pub fn as_affine(&self) -> Option<(i64, i64)> {
        for s in [1, -1] {
            for c in 0..5 {
                if Self::affine(s, c) == *self {
                    return Some((s, c));
                }
            }
        }
        None
    }

    pub fn order(&self) -> usize {
        let mut p = *self;
        let mut n = 1;
        while p != Self::IDENTITY {
            p = self.then(&p);
            n += 1;
        }
        n
    }
}

impl fmt::Display for Perm5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = [false; 5];
        let mut wrote = false;
        for start in 0..5 {
            if seen[start] || self.0[start] == start {
                continue;
            }
            write!(f, "(")?;
            let mut i = start;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", i + 1)?;
                first = false;
                i = self.0[i];
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// v ↦ ε·π(v) + t.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct AffineElement {
    pub eps: i8,
    pub perm: Perm5,
    pub t: Coord5,
}

impl AffineElement {
    pub fn new(eps: i8, perm: Perm5, t: Coord5) -> Self {
        assert!(eps == 1 || eps == -1, "sign must be ±1");
        Self { eps, perm, t }
    }

    pub fn identity() -> Self {
        Self::new(1, Perm5::IDENTITY, Coord5::zero())
    }

    pub fn translation(t: Coord5) -> Self {
        Self::new(1, Perm5::IDENTITY, t)
    }

    pub fn linear_part(&self) -> Self {
        Self::new(self.eps, self.perm, Coord5::zero())
    }

    /// ε·π(v), without the translation.
    pub fn linear(&self, v: &Coord5) -> Coord5 {
        let w = v.permute(&self.perm.0);
        if self.eps < 0 {
            -w
        } else {
            w
        }
    }

    pub fn apply(&self, v: &Coord5) -> Coord5 {
        self.linear(v) + self.t
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &AffineElement) -> AffineElement {
        AffineElement::new(
            self.eps * other.eps,
            self.perm.then(&other.perm),
            self.linear(&other.t) + self.t,
        )
    }

    pub fn inverse(&self) -> AffineElement {
        let lin = AffineElement::new(self.eps, self.perm.inverse(), Coord5::zero());
        AffineElement::new(self.eps, lin.perm, -lin.linear(&self.t))
    }

    pub fn pow(&self, n: u32) -> AffineElement {
        (0..n).fold(Self::identity(), |acc, _| acc.compose(self))
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// Preserves the Coxeter plane: π is j ↦ ±j + c.
    pub fn is_plane_compatible(&self) -> bool {
        self.perm.as_affine().is_some()
    }

    /// Conjugation t(λ)∘self∘t(−λ).
    pub fn conjugate_by_translation(&self, lambda: &Coord5) -> AffineElement {
        AffineElement::translation(*lambda)
            .compose(self)
            .compose(&AffineElement::translation(-*lambda))
    }

    /// Smallest n ≥ 1 with selfⁿ = 1, searched up to `limit`.
    pub fn order(&self, limit: u32) -> Option<u32> {
        let mut g = *self;
        for n in 1..=limit {
            if g.is_identity() {
                return Some(n);
            }
            g = g.compose(self);
        }
        None
    }
}

impl fmt::Display for AffineElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.eps < 0 { "-" } else { "+" };
        write!(f, "({sign}{}, {})", self.perm, self.t)
    }
}

/// Indices (i, j), 1-based, with root = kᵢ − kⱼ.
pub fn root_indices(root: &Coord5) -> Option<(usize, usize)> {
    let ints = root.to_ints()?;
    let mut two = None;
    let mut zero = None;
    let mut ones = 0;
    for (idx, &x) in ints.iter().enumerate() {
        match x {
            2 if two.is_none() => two = Some(idx + 1),
            0 if zero.is_none() => zero = Some(idx + 1),
            1 => ones += 1,
            _ => return None,
        }
    }
    match (two, zero, ones) {
        (Some(i), Some(j), 3) => Some((i, j)),
        _ => None,
    }
}

/// Affine reflection r_{α,n}: λ ↦ λ − ((λ,α) − n)α.
pub fn reflection(root: &Coord5, n: i64) -> Result<AffineElement> {
    let (i, j) = root_indices(root).ok_or(Error::NotARoot(*root))?;
    Ok(AffineElement::new(
        1,
        Perm5::transposition(i, j),
        root.scale_int(n),
    ))
}

/// r_{kᵢ−kⱼ, n} for 1-based indices.
pub fn reflection_ij(i: usize, j: usize, n: i64) -> AffineElement {
    reflection(&Coord5::root(i, j), n).expect("kᵢ − kⱼ is a root")
}

/// Affine H2 generators R1(n1,n3) = r_{α1,n1} r_{α3,n3}, R2(n2,n4) = r_{α2,n2} r_{α4,n4}.
pub fn h2_generators(n1: i64, n2: i64, n3: i64, n4: i64) -> (AffineElement, AffineElement) {
    let a = h2_simple_roots();
    let r = |k: usize, n: i64| reflection(&a[k], n).expect("simple root");
    (r(0, n1).compose(&r(2, n3)), r(1, n2).compose(&r(3, n4)))
}

/// Coxeter element R1∘R2, a rotation of order 5.
pub fn coxeter(n1: i64, n2: i64, n3: i64, n4: i64) -> AffineElement {
    let (r1, r2) = h2_generators(n1, n2, n3, n4);
    r1.compose(&r2)
}

/// λ = (n1+n2)k₁ + n2k₂ − n3k₃ − (n3+n4)k₄.
pub fn fixed_point(n1: i64, n2: i64, n3: i64, n4: i64) -> Coord5 {
    Coord5::from_ints([n1 + n2, n2, -n3, -(n3 + n4), 0])
}

/// Fixed point of an order-5 rotation: the centroid of any orbit.
pub fn rotation_center(rot: &AffineElement) -> Coord5 {
    let mut acc = Coord5::zero();
    let mut p = Coord5::zero();
    for _ in 0..5 {
        acc = acc + p;
        p = rot.apply(&p);
    }
    acc.scale(ratio(1, 5))
}

/// The ten elements fixing `p`: five rotations ρᵐ then five reflections ρᵐμ,
/// each with translation p − g(p).
pub fn stabilizer_of(p: &Coord5) -> Result<Vec<AffineElement>> {
    let rho = Perm5::cycle();
    let mu = Perm5::flip();
    let mut perms = Vec::with_capacity(10);
    let mut r = Perm5::IDENTITY;
    for _ in 0..5 {
        perms.push(r);
        r = rho.then(&r);
    }
    for m in 0..5 {
        perms.push(perms[m].then(&mu));
    }
    perms
        .into_iter()
        .map(|perm| {
            let lin = AffineElement::new(1, perm, Coord5::zero());
            let t = *p - lin.linear(p);
            if t.in_root_lattice() {
                Ok(AffineElement::new(1, perm, t))
            } else {
                Err(Error::NotFivefoldCenter(*p))
            }
        })
        .collect()
}

/// Adjoins the η-twisted elements (ε = −1) fixing the same center.
///
/// Their translations p + π(p) lie in the weight lattice (2k₅ for the center k₅).
pub fn extend_order20(stab: &[AffineElement]) -> Result<Vec<AffineElement>> {
    let rot = stab
        .iter()
        .find(|g| g.eps > 0 && g.perm.order() == 5)
        .ok_or(Error::TilingMismatch(
            "stabilizer has no order-5 rotation".into(),
        ))?;
    let p = rotation_center(rot);
    let mut out = stab.to_vec();
    for g in stab {
        let lin = AffineElement::new(-g.eps, g.perm, Coord5::zero());
        let t = p - lin.linear(&p);
        if !t.in_weight_lattice() {
            return Err(Error::NotFivefoldCenter(p));
        }
        out.push(AffineElement::new(lin.eps, lin.perm, t));
    }
    Ok(out)
}

/// R(m1,m2)∘R(0,0) with R(m1,m2) = r_{k₁−k₄,m1} r_{k₂−k₃,m2}:
/// translation by m1(k₁−k₄) + m2(k₂−k₃).
pub fn translation_h2(m1: i64, m2: i64) -> AffineElement {
    let r = |m1, m2| reflection_ij(1, 4, m1).compose(&reflection_ij(2, 3, m2));
    r(m1, m2).compose(&r(0, 0))
}

/// Elements named in the construction.
pub mod named {
    use super::*;

    /// r_{k₁−k₃,0} ∘ r_{k₅−k₄,1}: fixes k₅.
    pub fn c1() -> AffineElement {
        reflection_ij(1, 3, 0).compose(&reflection_ij(5, 4, 1))
    }

    /// Plane reflection (x, y) ↦ (x, −y).
    pub fn c2() -> AffineElement {
        AffineElement::new(1, Perm5::flip(), Coord5::zero())
    }

    /// Rotation by 2π/5 about k₅: C2∘C1.
    pub fn p() -> AffineElement {
        c2().compose(&c1())
    }

    /// Reflection through k₂+k₃: permutation j ↦ −j+1, translation k₂−k₄.
    pub fn c3() -> AffineElement {
        AffineElement::new(1, Perm5::affine(-1, 1), Coord5::root(2, 4))
    }

    /// Diagram flip η: k₁ ↔ −k₄, k₂ ↔ −k₃, k₅ ↦ −k₅.
    pub fn eta() -> AffineElement {
        AffineElement::new(-1, Perm5::flip(), Coord5::zero())
    }

    pub fn r1() -> AffineElement {
        h2_generators(0, 0, 0, 0).0
    }

    pub fn r2() -> AffineElement {
        h2_generators(0, 0, 0, 0).1
    }

    /// Translation by k₁ − k₄.
    pub fn translation() -> AffineElement {
        translation_h2(1, 0)
    }

    /// Simple reflection r_{αᵢ,0}, i in 1..=4, with roots k₁−k₂, k₂−k₅, k₅−k₃, k₃−k₄.
    pub fn simple(i: usize) -> AffineElement {
        reflection(&h2_simple_roots()[i - 1], 0).expect("simple root")
    }

    /// Affine generator r_{k₄−k₁,1}.
    pub fn r0() -> AffineElement {
        reflection_ij(4, 1, 1)
    }

    /// S = r₄r₃ with r₃ = r_{k₃−k₄}, r₄ = r_{k₄−k₅}; conjugates the
    /// standard simple roots to the H2 ordering.
    pub fn conjugator() -> AffineElement {
        reflection_ij(4, 5, 0).compose(&reflection_ij(3, 4, 0))
    }

    /// Looks up an element by its command-line name.
    pub fn by_name(name: &str) -> Option<AffineElement> {
        Some(match name {
            "C1" => c1(),
            "C2" => c2(),
            "C3" => c3(),
            "P" => p(),
            "eta" => eta(),
            "R1" => r1(),
            "R2" => r2(),
            "T" => translation(),
            "r1" => simple(1),
            "r2" => simple(2),
            "r3" => simple(3),
            "r4" => simple(4),
            "r0" => r0(),
            _ => return None,
        })
    }

    pub const NAMES: [&str; 13] = [
        "C1", "C2", "C3", "P", "eta", "R1", "R2", "T", "r1", "r2", "r3", "r4", "r0",
    ];
}

/// Writes `e` as r_{α,a} ∘ r_{β,b} for the orthogonal roots α = kᵢ−kⱼ,
/// β = k_p−k_q, if possible.
pub fn decompose_pair(
    e: &AffineElement,
    alpha: (usize, usize),
    beta: (usize, usize),
) -> Option<(i64, i64)> {
    let (i, j) = alpha;
    let (p, q) = beta;
    let lin = reflection_ij(i, j, 0).compose(&reflection_ij(p, q, 0));
    if e.linear_part() != lin {
        return None;
    }
    let r = (1..=5).find(|x| ![i, j, p, q].contains(x))?;
    let c = e.t.coeffs();
    let at = |x: usize| c[x - 1] - c[r - 1];
    let (a, b) = (at(i), at(p));
    if at(j) != -a || at(q) != -b || !a.is_integer() || !b.is_integer() {
        return None;
    }
    Some((a.to_integer(), b.to_integer()))
}

/// One line of the reflection-decomposition cross-check.
#[derive(Clone, Debug, PartialEq)]
pub struct DecompositionLine {
    pub word: &'static str,
    pub alpha: (usize, usize),
    pub beta: (usize, usize),
    pub printed: (i64, i64),
    pub computed: Option<(i64, i64)>,
}

impl DecompositionLine {
    pub fn agrees(&self) -> bool {
        self.computed == Some(self.printed)
    }
}

/// Compares the published index sums for R1R2R1, R2R1R2 and R1R2R1R2R1
/// against direct composition.
pub fn reflection_decompositions(n1: i64, n2: i64, n3: i64, n4: i64) -> Vec<DecompositionLine> {
    let (r1, r2) = h2_generators(n1, n2, n3, n4);
    let w3a = r1.compose(&r2).compose(&r1);
    let w3b = r2.compose(&r1).compose(&r2);
    let w5 = w3a.compose(&r2).compose(&r1);
    let specs = [
        ("R1R2R1", w3a, (1, 3), (5, 4), (n1 + n2 + n3, n3 + n4)),
        ("R2R1R2", w3b, (2, 4), (1, 5), (n2 + n3 + n4, n1 + n2)),
        ("R1R2R1R2R1", w5, (2, 3), (1, 4), (n2 + n3, n1 + n2 + n3 + n4)),
    ];
    specs
        .into_iter()
        .map(|(word, e, alpha, beta, printed)| DecompositionLine {
            word,
            alpha,
            beta,
            printed,
            computed: decompose_pair(&e, alpha, beta),
        })
        .collect()
}

/// Checks the three reflection identities for roots α, β and integers a, b on λ.
///
/// Returns `None` when the roots are neither orthogonal nor at (α,β) = −1.
pub fn reflection_identities_hold(
    lambda: &Coord5,
    alpha: &Coord5,
    beta: &Coord5,
    a: i64,
    b: i64,
) -> Result<Option<bool>> {
    let ra = reflection(alpha, a)?;
    let rb = reflection(beta, b)?;
    let ip = inner4(alpha, beta);
    let la = inner4(lambda, alpha);
    let lb = inner4(lambda, beta);
    let ai = Rational::from_integer(a);
    let bi = Rational::from_integer(b);
    let lhs_ab = ra.compose(&rb).apply(lambda);
    let lhs_ba = rb.compose(&ra).apply(lambda);
    if ip == Rational::from_integer(0) {
        let rhs = *lambda - alpha.scale(la) - beta.scale(lb) + alpha.scale(ai) + beta.scale(bi);
        return Ok(Some(lhs_ab == rhs && lhs_ba == rhs));
    }
    if ip == Rational::from_integer(-1) {
        let sum = *alpha + *beta;
        let rhs = *lambda - sum.scale(la) - beta.scale(lb) + sum.scale(ai) + beta.scale(bi);
        let braid = ra.compose(&rb).compose(&ra);
        let target = reflection(&sum, a + b)?;
        return Ok(Some(lhs_ba == rhs && braid == target));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    fn k(i: usize) -> Coord5 {
        Coord5::k(i)
    }

    #[test]
    fn reflection_examples() {
        let r = reflection(&Coord5::root(1, 2), 0).unwrap();
        assert_eq!(r.apply(&k(1)), k(2));
        let a = Coord5::root(3, 5);
        let r = reflection(&a, 2).unwrap();
        assert!(r.compose(&r).is_identity());
        assert_eq!(reflection(&-a, 2).unwrap(), reflection(&a, -2).unwrap());
        assert!(matches!(
            reflection(&k(1), 0),
            Err(Error::NotARoot(_))
        ));
    }

    #[test]
    fn reflection_formula() {
        let a = Coord5::root(2, 4);
        let r = reflection(&a, 3).unwrap();
        let lam = Coord5::from_ints([2, -1, 4, 0, 1]);
        let want = lam - a.scale(inner4(&lam, &a) - Rational::from_integer(3));
        assert_eq!(r.apply(&lam), want);
    }

    #[test]
    fn named_actions() {
        assert_eq!(c1().apply(&k(5)), k(5));
        assert_eq!(eta().apply(&k(1)), -k(4));
        assert_eq!(p(), AffineElement::new(1, Perm5::cycle(), Coord5::root(5, 1)));
        assert_eq!(c3().apply(&(k(2) + k(3))), k(2) + k(3));
        assert!(eta().compose(&eta()).is_identity());
    }

    #[test]
    fn coxeter_cycles_basis() {
        let r = coxeter(0, 0, 0, 0);
        assert_eq!(r.perm, Perm5::cycle());
        assert!(r.t.is_zero());
        assert!(r.pow(5).is_identity());
        let (r1, r2) = h2_generators(0, 0, 0, 0);
        assert_eq!(
            r1.compose(&r2).compose(&r1),
            reflection_ij(1, 3, 0).compose(&reflection_ij(5, 4, 0))
        );
        for g in [r1, r2, r1.compose(&r2)] {
            assert!(g.is_plane_compatible());
        }
    }

    #[test]
    fn fixed_points() {
        assert_eq!(fixed_point(0, 0, 0, 0), Coord5::zero());
        assert_eq!(fixed_point(-1, 1, -1, 1), k(2) + k(3));
        assert_eq!(fixed_point(0, -1, 1, 0), k(5));
        let n = [(-1, 1, -1, 1), (0, -1, 1, 0), (2, -3, 1, 4)];
        for (a, b, c, d) in n {
            let p = fixed_point(a, b, c, d);
            assert_eq!(coxeter(a, b, c, d).apply(&p), p);
            let roots = h2_simple_roots();
            for (root, m) in roots.iter().zip([a, b, c, d]) {
                assert_eq!(reflection(root, m).unwrap().apply(&p), p);
            }
        }
    }

    #[test]
    fn coxeter_about_k2_plus_k3() {
        let r = coxeter(-1, 1, -1, 1);
        assert_eq!(r, AffineElement::new(1, Perm5::cycle(), Coord5::root(2, 4)));
    }

    #[test]
    fn stabilizers() {
        let s5 = stabilizer_of(&k(5)).unwrap();
        assert_eq!(s5.len(), 10);
        assert!(s5.contains(&p()));
        assert!(s5.contains(&c1()));
        let s23 = stabilizer_of(&(k(2) + k(3))).unwrap();
        assert!(s23.contains(&AffineElement::new(1, Perm5::cycle(), Coord5::root(2, 4))));
        assert!(s23.contains(&c3()));
        let lam = k(2) + k(3) - k(5);
        for (a, b) in s5.iter().zip(&s23) {
            assert_eq!(a.conjugate_by_translation(&lam), *b);
        }
        let half = k(1).scale(ratio(1, 2));
        assert!(matches!(
            stabilizer_of(&half),
            Err(Error::NotFivefoldCenter(_))
        ));
    }

    #[test]
    fn order20_extension() {
        let s = stabilizer_of(&k(5)).unwrap();
        let big = extend_order20(&s).unwrap();
        assert_eq!(big.len(), 20);
        for g in &big {
            assert_eq!(g.apply(&k(5)), k(5));
            for h in &big {
                assert!(big.contains(&g.compose(h)));
            }
        }
        assert!(big.iter().any(|g| g.order(20) == Some(10)));
        let s0 = extend_order20(&stabilizer_of(&Coord5::zero()).unwrap()).unwrap();
        assert!(s0.contains(&eta()));
    }

    #[test]
    fn translations() {
        assert!(translation_h2(0, 0).is_identity());
        assert_eq!(
            translation_h2(1, 0),
            AffineElement::translation(Coord5::root(1, 4))
        );
        let t = translation_h2(0, 1).t;
        let (x, y) = t.par();
        let (ax, ay) = Coord5::root(1, 4).par();
        let inv_tau = 1.0 / crate::golden::GoldenNumber::tau().to_f64();
        assert!((x - inv_tau * ax).abs() < 1e-12 && (y - inv_tau * ay).abs() < 1e-12);
    }

    #[test]
    fn decomposition_report_lines() {
        let lines = reflection_decompositions(0, 0, 0, 0);
        assert!(lines.iter().all(|l| l.agrees()));
        let lines = reflection_decompositions(1, 2, 3, 4);
        assert!(lines.iter().all(|l| l.computed.is_some()));
    }

    #[test]
    fn conjugator_maps_roots() {
        let s = conjugator();
        let std = crate::lattice::RootSystemData::new().simple_roots;
        let mapped: Vec<Coord5> = std.iter().map(|a| s.apply(a)).collect();
        assert_eq!(mapped, h2_simple_roots().to_vec());
    }

    #[test]
    fn perm_display() {
        assert_eq!(Perm5::flip().to_string(), "(1 4)(2 3)");
        assert_eq!(Perm5::cycle().to_string(), "(1 2 3 4 5)");
        assert_eq!(Perm5::IDENTITY.to_string(), "()");
    }
}
