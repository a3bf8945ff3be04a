//! Direct linear solvers: banded LU with partial pivoting (marching lines,
//! mode systems) and a sine-transform solver for separable elliptic
//! operators with y-dependent coefficients on uniform rectangles.

use crate::error::{CoreError, Result};

/// General band matrix in LAPACK-style column storage with room for
/// pivoting fill: entry (i, j) lives at data[j * ldab + kl + ku + i - j]
/// for -(ku + kl) <= i - j <= kl.
#[derive(Debug, Clone)]
pub struct BandMatrix {
    pub n: usize,
    pub kl: usize,
    pub ku: usize,
    ldab: usize,
    data: Vec<f64>,
}

impl BandMatrix {
    pub fn zeros(n: usize, kl: usize, ku: usize) -> BandMatrix {
        let ldab = 2 * kl + ku + 1;
        BandMatrix {
            n,
            kl,
            ku,
            ldab,
            data: vec![0.0; n * ldab],
        }
    }

    #[inline]
    fn slot(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < self.n && j < self.n);
        let d = i as isize - j as isize;
        debug_assert!(
            d <= self.kl as isize && -d <= (self.ku + self.kl) as isize,
            "({i},{j}) outside band"
        );
        j * self.ldab + (self.kl + self.ku) as usize + (d + 0) as usize - 0
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        let d = i as isize - j as isize + (self.kl + self.ku) as isize;
        self.data[j * self.ldab + d as usize]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        let d = i as isize - j as isize + (self.kl + self.ku) as isize;
        self.data[j * self.ldab + d as usize] = v;
    }

    #[inline]
    pub fn add(&mut self, i: usize, j: usize, v: f64) {
        let d = i as isize - j as isize + (self.kl + self.ku) as isize;
        self.data[j * self.ldab + d as usize] += v;
    }

    /// In-place LU factorization with partial pivoting.
    pub fn factor(mut self) -> Result<BandLu> {
        let n = self.n;
        let (kl, ku) = (self.kl, self.ku);
        let kv = kl + ku; // superdiagonal room incl. fill
        let mut ipiv = vec![0usize; n];
        let mut ju = 0usize;
        for j in 0..n {
            let km = kl.min(n - 1 - j);
            // pivot search in column j among rows j..=j+km
            let mut piv = 0usize;
            let mut pmax = 0.0f64;
            for i in 0..=km {
                let v = self.data[j * self.ldab + kv + i].abs();
                if v > pmax {
                    pmax = v;
                    piv = i;
                }
            }
            ipiv[j] = j + piv;
            if pmax == 0.0 {
                return Err(CoreError::LinearSolve(format!(
                    "band LU: zero pivot column {j}"
                )));
            }
            ju = ju.max((j + ku + kl).min(n - 1)).max(j);
            if piv != 0 {
                for c in j..=ju {
                    let a = c * self.ldab + kv + j - c;
                    let b = c * self.ldab + kv + j + piv - c;
                    self.data.swap(a, b);
                }
            }
            let diag = self.data[j * self.ldab + kv];
            for i in 1..=km {
                self.data[j * self.ldab + kv + i] /= diag;
            }
            for c in j + 1..=ju {
                let top = self.data[c * self.ldab + kv + j - c];
                if top != 0.0 {
                    for i in 1..=km {
                        let m = self.data[j * self.ldab + kv + i];
                        self.data[c * self.ldab + kv + j + i - c] -= m * top;
                    }
                }
            }
        }
        Ok(BandLu {
            mat: self,
            ipiv,
        })
    }
}

/// Factored band matrix.
pub struct BandLu {
    mat: BandMatrix,
    ipiv: Vec<usize>,
}

impl BandLu {
    pub fn solve(&self, rhs: &[f64]) -> Vec<f64> {
        let n = self.mat.n;
        let (kl, ku) = (self.mat.kl, self.mat.ku);
        let kv = kl + ku;
        let ldab = self.mat.ldab;
        let mut x = rhs.to_vec();
        // forward: apply pivots and L
        for j in 0..n {
            let p = self.ipiv[j];
            if p != j {
                x.swap(j, p);
            }
            let km = kl.min(n - 1 - j);
            let xj = x[j];
            if xj != 0.0 {
                for i in 1..=km {
                    x[j + i] -= self.mat.data[j * ldab + kv + i] * xj;
                }
            }
        }
        // back substitution with U of bandwidth kv
        for j in (0..n).rev() {
            let mut s = x[j];
            let hi = (j + kv).min(n - 1);
            for c in j + 1..=hi {
                s -= self.mat.data[c * ldab + kv + j - c] * x[c];
            }
            x[j] = s / self.mat.data[j * ldab + kv];
        }
        x
    }
}

/// Separable elliptic solver on the interior of a uniform rectangle:
///   a(y) (u_xx + u_yy) + b(y) u_y + c(y) u = rhs,  u = 0 on the boundary,
/// by a sine transform in x and banded solves in y. The discrete operator
/// is the standard second-order 5-point form; the transform uses the exact
/// discrete eigenvalues, so solve and apply are inverse to round-off.
pub struct SeparableElliptic {
    nx: usize,
    ny: usize,
    dx: f64,
    ys: Vec<f64>,
    a: Vec<f64>,
    b: Vec<f64>,
    c: Vec<f64>,
    // sin(j k pi / (mx+1)) table, mx = nx - 2 interior stations
    sin_tab: Vec<f64>,
}

impl SeparableElliptic {
    pub fn new(nx: usize, ny: usize, dx: f64, ys: Vec<f64>, a: Vec<f64>, b: Vec<f64>, c: Vec<f64>) -> SeparableElliptic {
        let mx = nx - 2;
        let mut sin_tab = vec![0.0; mx * mx];
        for j in 0..mx {
            for k in 0..mx {
                sin_tab[j * mx + k] =
                    ((j + 1) as f64 * (k + 1) as f64 * std::f64::consts::PI / (mx + 1) as f64)
                        .sin();
            }
        }
        SeparableElliptic {
            nx,
            ny,
            dx,
            ys,
            a,
            b,
            c,
            sin_tab,
        }
    }

    /// Apply the interior discrete operator to full-grid values
    /// (boundary entries of the output are zero).
    pub fn apply(&self, u: &[f64]) -> Vec<f64> {
        let (nx, ny) = (self.nx, self.ny);
        let idx = |i: usize, j: usize| i * ny + j;
        let mut out = vec![0.0; nx * ny];
        for i in 1..nx - 1 {
            for j in 1..ny - 1 {
                let uxx = (u[idx(i - 1, j)] - 2.0 * u[idx(i, j)] + u[idx(i + 1, j)])
                    / (self.dx * self.dx);
                let hm = self.ys[j] - self.ys[j - 1];
                let hp = self.ys[j + 1] - self.ys[j];
                let uyy = 2.0
                    * (u[idx(i, j - 1)] * hp - u[idx(i, j)] * (hm + hp) + u[idx(i, j + 1)] * hm)
                    / (hm * hp * (hm + hp));
                let uy = (-hp / (hm * (hm + hp))) * u[idx(i, j - 1)]
                    + ((hp - hm) / (hm * hp)) * u[idx(i, j)]
                    + (hm / (hp * (hm + hp))) * u[idx(i, j + 1)];
                out[idx(i, j)] =
                    self.a[j] * (uxx + uyy) + self.b[j] * uy + self.c[j] * u[idx(i, j)];
            }
        }
        out
    }

    /// Solve with zero Dirichlet data; rhs is read at interior nodes.
    pub fn solve(&self, rhs: &[f64]) -> Result<Vec<f64>> {
        let (nx, ny) = (self.nx, self.ny);
        let mx = nx - 2;
        let my = ny - 2;
        let idx = |i: usize, j: usize| i * ny + j;
        // forward sine transform of each interior y-row across x
        let mut fhat = vec![0.0; mx * my];
        for j in 0..my {
            for k in 0..mx {
                let mut s = 0.0;
                for ii in 0..mx {
                    s += self.sin_tab[ii * mx + k] * rhs[idx(ii + 1, j + 1)];
                }
                fhat[k * my + j] = s;
            }
        }
        // per-mode banded solve in y
        let mut uhat = vec![0.0; mx * my];
        for k in 0..mx {
            let lam = -4.0 / (self.dx * self.dx)
                * (((k + 1) as f64) * std::f64::consts::PI / (2.0 * (mx + 1) as f64))
                    .sin()
                    .powi(2);
            let mut m = BandMatrix::zeros(my, 1, 1);
            for j in 0..my {
                let jj = j + 1; // grid index
                let hm = self.ys[jj] - self.ys[jj - 1];
                let hp = self.ys[jj + 1] - self.ys[jj];
                let denom = hm * hp * (hm + hp);
                let cm = 2.0 * hp / denom;
                let cc = -2.0 * (hm + hp) / denom;
                let cp = 2.0 * hm / denom;
                let dm = -hp / (hm * (hm + hp));
                let dc = (hp - hm) / (hm * hp);
                let dp = hm / (hp * (hm + hp));
                let aj = self.a[jj];
                let bj = self.b[jj];
                m.add(j, j, aj * (cc + lam) + bj * dc + self.c[jj]);
                if j > 0 {
                    m.add(j, j - 1, aj * cm + bj * dm);
                }
                if j + 1 < my {
                    m.add(j, j + 1, aj * cp + bj * dp);
                }
            }
            let lu = m.factor()?;
            let rhs_k: Vec<f64> = (0..my).map(|j| fhat[k * my + j]).collect();
            let sol = lu.solve(&rhs_k);
            for j in 0..my {
                uhat[k * my + j] = sol[j];
            }
        }
        // inverse transform
        let scale = 2.0 / (mx + 1) as f64;
        let mut u = vec![0.0; nx * ny];
        for j in 0..my {
            for ii in 0..mx {
                let mut s = 0.0;
                for k in 0..mx {
                    s += self.sin_tab[ii * mx + k] * uhat[k * my + j];
                }
                u[idx(ii + 1, j + 1)] = scale * s;
            }
        }
        Ok(u)
    }
}
