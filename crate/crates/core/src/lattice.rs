//! Pentagrid coordinates on the A4 lattice span and its Coxeter-plane images.
//!
//! A point is `Σ cᵢ kᵢ` with `k₁ + … + k₅ = 0`. Indices are 1-based in the
//! public API (`k(1)..k(5)`) and 0-based inside tuples.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::golden::{ratio, to_f64, GoldenNumber, Rational};

/// Exact lattice-span point, stored with minimum component 0.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Coord5 {
    c: [Rational; 5],
}

/// Which plane an embedding or norm refers to.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Space {
    Parallel,
    Perpendicular,
}

/// Subtracts the minimum component so the representative is unique.
pub fn canonical(raw: [Rational; 5]) -> Coord5 {
    let m = *raw.iter().min().expect("five components");
    Coord5 {
        c: raw.map(|x| x - m),
    }
}

impl Coord5 {
    pub fn new(raw: [Rational; 5]) -> Self {
        canonical(raw)
    }

    pub fn from_ints(raw: [i64; 5]) -> Self {
        canonical(raw.map(Rational::from_integer))
    }

    pub fn zero() -> Self {
        Self::from_ints([0; 5])
    }

    /// Basis vector kᵢ, `i` in 1..=5.
    pub fn k(i: usize) -> Self {
        assert!((1..=5).contains(&i), "k index {i} outside 1..=5");
        let mut raw = [0; 5];
        raw[i - 1] = 1;
        Self::from_ints(raw)
    }

    /// Root kᵢ − kⱼ.
    pub fn root(i: usize, j: usize) -> Self {
        Self::k(i) - Self::k(j)
    }

    pub fn coeffs(&self) -> &[Rational; 5] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.c[i]
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn scale(&self, r: Rational) -> Self {
        canonical(self.c.map(|x| x * r))
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(Rational::from_integer(n))
    }

    pub fn sum(&self) -> Rational {
        self.c.iter().copied().sum()
    }

    /// Integer tuple: member of the weight lattice.
    pub fn in_weight_lattice(&self) -> bool {
        self.c.iter().all(|x| x.is_integer())
    }

    /// Integer tuple with component sum divisible by 5: member of the root lattice.
    pub fn in_root_lattice(&self) -> bool {
        self.in_weight_lattice() && (self.sum().to_integer()).rem_euclid(5) == 0
    }

    /// Integer components, if every component is an integer.
    pub fn to_ints(&self) -> Option<[i64; 5]> {
        if !self.in_weight_lattice() {
            return None;
        }
        Some(self.c.map(|x| x.to_integer()))
    }

    /// Moves the coefficient of kᵢ to k_{perm[i]} (0-based).
    pub fn permute(&self, perm: &[usize; 5]) -> Self {
        let mut out = [Rational::zero(); 5];
        for (i, &p) in perm.iter().enumerate() {
            out[p] = self.c[i];
        }
        canonical(out)
    }

    pub fn embed(&self, which: Space) -> (f64, f64) {
        embed(self, which)
    }

    pub fn par(&self) -> (f64, f64) {
        embed(self, Space::Parallel)
    }
}

impl Add for Coord5 {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut out = self.c;
        for (o, r) in out.iter_mut().zip(rhs.c) {
            *o += r;
        }
        canonical(out)
    }
}

impl Sub for Coord5 {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for Coord5 {
    type Output = Self;
    fn neg(self) -> Self {
        canonical(self.c.map(|x| -x))
    }
}

impl fmt::Display for Coord5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.c.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// 4D inner product: Σ vᵢwᵢ − (1/5)(Σv)(Σw).
pub fn inner4(v: &Coord5, w: &Coord5) -> Rational {
    let dot: Rational = v.c.iter().zip(w.c.iter()).map(|(a, b)| a * b).sum();
    dot - v.sum() * w.sum() / Rational::from_integer(5)
}

fn cos_table(which: Space) -> [GoldenNumber; 3] {
    let half = ratio(-1, 2);
    let c72 = GoldenNumber::sigma().scale(half);
    let c144 = GoldenNumber::tau().scale(half);
    match which {
        Space::Parallel => [GoldenNumber::one(), c72, c144],
        Space::Perpendicular => [GoldenNumber::one(), c144, c72],
    }
}

fn bilinear(u: &Coord5, v: &Coord5, which: Space) -> GoldenNumber {
    let cos = cos_table(which);
    let mut acc = [Rational::zero(); 3];
    for i in 0..5 {
        for j in 0..5 {
            let d = (i + 5 - j) % 5;
            acc[d.min(5 - d)] += u.c[i] * v.c[j];
        }
    }
    let sum = cos[0].scale(acc[0]) + cos[1].scale(acc[1]) + cos[2].scale(acc[2]);
    sum.scale(ratio(2, 5))
}

/// Exact inner product of the parallel images.
pub fn inner_par(u: &Coord5, v: &Coord5) -> GoldenNumber {
    bilinear(u, v, Space::Parallel)
}

/// Exact inner product of the perpendicular images.
pub fn inner_perp(u: &Coord5, v: &Coord5) -> GoldenNumber {
    bilinear(u, v, Space::Perpendicular)
}

/// |v∥|² as a golden number.
pub fn plane_norm2(v: &Coord5) -> GoldenNumber {
    inner_par(v, v)
}

/// |v⊥|² as a golden number.
pub fn plane_norm2_perp(v: &Coord5) -> GoldenNumber {
    inner_perp(v, v)
}

/// Numeric plane image √(2/5)·Σ cⱼ (cos, sin)(2πjm/5), m = 1 or 2.
pub fn embed(v: &Coord5, which: Space) -> (f64, f64) {
    let m = match which {
        Space::Parallel => 1.0,
        Space::Perpendicular => 2.0,
    };
    let s = (0.4f64).sqrt();
    let (mut x, mut y) = (0.0, 0.0);
    for (idx, c) in v.c.iter().enumerate() {
        let j = (idx + 1) as f64;
        let ang = 2.0 * std::f64::consts::PI * j * m / 5.0;
        let c = to_f64(c);
        x += c * ang.cos();
        y += c * ang.sin();
    }
    (s * x, s * y)
}

/// (par.x, par.y, perp.x, perp.y): the orthonormal 4D frame used for matrices.
pub fn embed4(v: &Coord5) -> [f64; 4] {
    let (a, b) = embed(v, Space::Parallel);
    let (c, d) = embed(v, Space::Perpendicular);
    [a, b, c, d]
}

/// Lattice vector whose parallel image is τ times that of `v`.
pub fn tau_scale_par(v: &Coord5) -> Coord5 {
    let c = &v.c;
    let out: [Rational; 5] = std::array::from_fn(|m| -(c[(m + 3) % 5] + c[(m + 2) % 5]));
    canonical(out)
}

/// Rational-coefficient vector whose parallel image is `g` times that of `v`.
///
/// The perpendicular image is not scaled by `g`; use only for plane geometry.
pub fn scale_par(v: &Coord5, g: &GoldenNumber) -> Coord5 {
    // g = (a − b) + 2bτ
    let t = tau_scale_par(v);
    v.scale(g.a - g.b) + t.scale(g.b * Rational::from_integer(2))
}

fn cross_table(which: Space) -> [GoldenNumber; 5] {
    let t = GoldenNumber::tau();
    let one = GoldenNumber::one();
    let z = GoldenNumber::zero();
    match which {
        Space::Parallel => [z, t, one, -one, -t],
        Space::Perpendicular => [z, one, -t, t, -one],
    }
}

fn cross_in(u: &Coord5, v: &Coord5, which: Space) -> GoldenNumber {
    let table = cross_table(which);
    let mut acc = [Rational::zero(); 5];
    for a in 0..5 {
        for b in 0..5 {
            acc[(b + 5 - a) % 5] += u.c[a] * v.c[b];
        }
    }
    (1..5).fold(GoldenNumber::zero(), |s, d| s + table[d].scale(acc[d]))
}

/// Signed cross product of parallel images, in units of (2/5)·sin 36°.
pub fn cross_par(u: &Coord5, v: &Coord5) -> GoldenNumber {
    cross_in(u, v, Space::Parallel)
}

/// Signed cross product of perpendicular images, in units of (2/5)·sin 36°.
pub fn cross_perp(u: &Coord5, v: &Coord5) -> GoldenNumber {
    cross_in(u, v, Space::Perpendicular)
}

/// Size of one cross_par unit in squared plane units.
pub fn area_unit() -> f64 {
    0.4 * (std::f64::consts::PI / 5.0).sin()
}

/// Simple roots, weights, Cartan matrix and the 4D projection frame.
#[derive(Clone, Debug)]
pub struct RootSystemData {
    /// α₁..α₄ with αᵢ = kᵢ − kᵢ₊₁.
    pub simple_roots: [Coord5; 4],
    /// α₀ = k₅ − k₁.
    pub alpha0: Coord5,
    pub weights: [Coord5; 4],
    pub cartan: [[Rational; 4]; 4],
    pub beta: [[f64; 4]; 2],
    pub gamma: [[f64; 4]; 2],
    /// x̂, ŷ, ẑ, ŵ in the `embed4` coordinates.
    pub frame: [[f64; 4]; 4],
}

/// Simple roots in the ordering used by the H₂ generators:
/// k₁−k₂, k₂−k₅, k₅−k₃, k₃−k₄.
pub fn h2_simple_roots() -> [Coord5; 4] {
    [
        Coord5::root(1, 2),
        Coord5::root(2, 5),
        Coord5::root(5, 3),
        Coord5::root(3, 4),
    ]
}

impl RootSystemData {
    pub fn new() -> Self {
        let k = Coord5::k;
        let simple_roots = [
            Coord5::root(1, 2),
            Coord5::root(2, 3),
            Coord5::root(3, 4),
            Coord5::root(4, 5),
        ];
        let weights = [k(1), k(1) + k(2), -(k(4) + k(5)), -k(5)];
        let cartan = std::array::from_fn(|i| {
            std::array::from_fn(|j| inner4(&simple_roots[i], &simple_roots[j]))
        });

        let tau = GoldenNumber::tau().to_f64();
        let sigma = GoldenNumber::sigma().to_f64();
        let a = h2_simple_roots().map(|r| embed4(&r));
        let comb = |p: f64, u: &[f64; 4], q: f64, v: &[f64; 4], n: f64| -> [f64; 4] {
            std::array::from_fn(|i| (p * u[i] + q * v[i]) / n)
        };
        let nt = (2.0 + tau).sqrt();
        let ns = (2.0 + sigma).sqrt();
        let b1 = comb(1.0, &a[0], tau, &a[2], nt);
        let b2 = comb(tau, &a[1], 1.0, &a[3], nt);
        let g1 = comb(-1.0, &a[0], -sigma, &a[2], ns);
        let g2 = comb(-sigma, &a[1], -1.0, &a[3], ns);
        let x = comb(1.0, &b1, -1.0, &b2, (2.0 * (2.0 + tau)).sqrt());
        let y = comb(tau, &b1, tau, &b2, 2f64.sqrt());
        let z = comb(1.0, &g1, -1.0, &g2, (2.0 * (2.0 + sigma)).sqrt());
        let w = comb(sigma, &g1, sigma, &g2, 2f64.sqrt());

        Self {
            simple_roots,
            alpha0: Coord5::root(5, 1),
            weights,
            cartan,
            beta: [b1, b2],
            gamma: [g1, g2],
            frame: [x, y, z, w],
        }
    }
}

impl Default for RootSystemData {
    fn default() -> Self {
        Self::new()
    }
}
