//! Numeric homogeneous matrices for group elements.
//!
//! The 4D frame is `embed4`: parallel (x, y) then perpendicular (z, w).

use std::fmt;

use crate::error::{Error, Result};
use crate::group::AffineElement;
use crate::lattice::{embed4, Coord5};

/// 3×3 homogeneous matrix acting on the Coxeter plane.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PlaneMatrix3(pub [[f64; 3]; 3]);

/// 5×5 homogeneous matrix acting on the 4D span.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FullMatrix5(pub [[f64; 5]; 5]);

fn mat_mul<const N: usize>(a: &[[f64; N]; N], b: &[[f64; N]; N]) -> [[f64; N]; N] {
    std::array::from_fn(|i| std::array::from_fn(|j| (0..N).map(|k| a[i][k] * b[k][j]).sum()))
}

fn identity<const N: usize>() -> [[f64; N]; N] {
    std::array::from_fn(|i| std::array::from_fn(|j| if i == j { 1.0 } else { 0.0 }))
}

fn max_diff<const N: usize>(a: &[[f64; N]; N], b: &[[f64; N]; N]) -> f64 {
    let mut m: f64 = 0.0;
    for i in 0..N {
        for j in 0..N {
            m = m.max((a[i][j] - b[i][j]).abs());
        }
    }
    m
}

macro_rules! homogeneous {
    ($name:ident, $n:expr) => {
        impl $name {
            pub fn identity() -> Self {
                Self(identity::<$n>())
            }

            pub fn mul(&self, other: &Self) -> Self {
                Self(mat_mul(&self.0, &other.0))
            }

            pub fn pow(&self, n: u32) -> Self {
                (0..n).fold(Self::identity(), |acc, _| acc.mul(self))
            }

            pub fn max_abs_diff(&self, other: &Self) -> f64 {
                max_diff(&self.0, &other.0)
            }

            /// Applies the matrix to a point given without the homogeneous 1.
            pub fn apply(&self, p: &[f64]) -> Vec<f64> {
                (0..$n - 1)
                    .map(|i| {
                        let lin: f64 = (0..$n - 1).map(|j| self.0[i][j] * p[j]).sum();
                        lin + self.0[i][$n - 1]
                    })
                    .collect()
            }

            /// Largest deviation of the linear block from orthogonality.
            pub fn orthogonality_defect(&self) -> f64 {
                let mut m: f64 = 0.0;
                for i in 0..$n - 1 {
                    for j in 0..$n - 1 {
                        let dot: f64 = (0..$n - 1).map(|k| self.0[k][i] * self.0[k][j]).sum();
                        let want = if i == j { 1.0 } else { 0.0 };
                        m = m.max((dot - want).abs());
                    }
                }
                m
            }

            pub fn translation(&self) -> Vec<f64> {
                (0..$n - 1).map(|i| self.0[i][$n - 1]).collect()
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                for row in &self.0 {
                    let cells: Vec<String> = row.iter().map(|x| format!("{:>10.6}", clean(*x))).collect();
                    writeln!(f, "[{}]", cells.join(" "))?;
                }
                Ok(())
            }
        }
    };
}

fn clean(x: f64) -> f64 {
    if x.abs() < 5e-13 {
        0.0
    } else {
        x
    }
}

homogeneous!(PlaneMatrix3, 3);
homogeneous!(FullMatrix5, 5);

/// 5×5 homogeneous matrix of any element.
pub fn full_matrix(e: &AffineElement) -> FullMatrix5 {
    let mut m = [[0.0; 5]; 5];
    let eps = f64::from(e.eps);
    for j in 0..5 {
        let src = embed4(&Coord5::k(j + 1));
        let dst = embed4(&Coord5::k(e.perm.0[j] + 1));
        for r in 0..4 {
            for c in 0..4 {
                m[r][c] += eps * dst[r] * src[c];
            }
        }
    }
    let t = embed4(&e.t);
    for r in 0..4 {
        m[r][4] = t[r];
    }
    m[4][4] = 1.0;
    FullMatrix5(m)
}

/// 3×3 homogeneous matrix of a plane-compatible element.
pub fn plane_matrix(e: &AffineElement) -> Result<PlaneMatrix3> {
    if !e.is_plane_compatible() {
        return Err(Error::NotPlaneCompatible);
    }
    let f = full_matrix(e);
    let mut m = [[0.0; 3]; 3];
    for r in 0..2 {
        for c in 0..2 {
            m[r][c] = f.0[r][c];
        }
        m[r][2] = f.0[r][4];
    }
    m[2][2] = 1.0;
    Ok(PlaneMatrix3(m))
}

/// Both exports; the plane matrix is `None` for elements that move the plane.
pub fn matrix_export(e: &AffineElement) -> (Option<PlaneMatrix3>, FullMatrix5) {
    (plane_matrix(e).ok(), full_matrix(e))
}
