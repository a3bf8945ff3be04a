//! Discrete calculus on structured grids: second-order finite differences
//! (centered inside, one-sided at boundaries, non-uniform aware) and
//! trapezoid quadrature with its cumulative forms.

use crate::field::ScalarField;

/// Fornberg finite-difference weights: coefficients w such that
/// sum_k w[k] f(xs[k]) approximates the m-th derivative of f at x0.
/// Exact for polynomials of degree <= xs.len() - 1.
pub fn fd_weights(x0: f64, xs: &[f64], m: usize) -> Vec<f64> {
    let n = xs.len();
    assert!(n > m, "need more than {m} points for derivative order {m}");
    let mut c = vec![vec![0.0; m + 1]; n];
    let mut c1 = 1.0;
    let mut c4 = xs[0] - x0;
    c[0][0] = 1.0;
    for i in 1..n {
        let mn = i.min(m);
        let mut c2 = 1.0;
        let c5 = c4;
        c4 = xs[i] - x0;
        for j in 0..i {
            let c3 = xs[i] - xs[j];
            c2 *= c3;
            if j == i - 1 {
                for k in (1..=mn).rev() {
                    c[i][k] = c1 * (k as f64 * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                }
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for k in (1..=mn).rev() {
                c[j][k] = (c4 * c[j][k] - k as f64 * c[j][k - 1]) / c3;
            }
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    c.iter().map(|row| row[m]).collect()
}

/// Stencil table for one coordinate line: for each node, the participating
/// node offsets and weights.
#[derive(Debug, Clone)]
pub struct LineStencil {
    /// per node: (first participating index, weights)
    pub rows: Vec<(usize, Vec<f64>)>,
}

/// Build the derivative stencil of order `m` (1 or 2) along the node set
/// `coords`, second-order accurate: 3-point centered in the interior
/// (exact on quadratics), one-sided at the two boundary nodes using
/// m + 2 points (exact on cubics for m = 2).
pub fn line_stencil(coords: &[f64], m: usize) -> LineStencil {
    let n = coords.len();
    let width = m + 2; // boundary stencil width for second-order closure
    assert!(n >= width, "grid too small for one-sided stencils");
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        if i == 0 {
            let w = fd_weights(coords[0], &coords[0..width], m);
            rows.push((0, w));
        } else if i == n - 1 {
            let w = fd_weights(coords[n - 1], &coords[n - width..n], m);
            rows.push((n - width, w));
        } else {
            let w = fd_weights(coords[i], &coords[i - 1..i + 2], m);
            rows.push((i - 1, w));
        }
    }
    LineStencil { rows }
}

fn apply_along_y(f: &ScalarField, st: &LineStencil, name: &str) -> ScalarField {
    let g = &f.grid;
    let mut out = ScalarField::zeros(g, name);
    for i in 0..g.nx {
        let col = f.column(i);
        let mut dcol = vec![0.0; g.ny];
        for (j, d) in dcol.iter_mut().enumerate() {
            let (start, w) = &st.rows[j];
            let mut s = 0.0;
            for (k, wk) in w.iter().enumerate() {
                s += wk * col[start + k];
            }
            *d = s;
        }
        out.set_column(i, &dcol);
    }
    out
}

fn apply_along_x(f: &ScalarField, st: &LineStencil, name: &str) -> ScalarField {
    let g = &f.grid;
    let mut out = ScalarField::zeros(g, name);
    for j in 0..g.ny {
        for i in 0..g.nx {
            let (start, w) = &st.rows[i];
            let mut s = 0.0;
            for (k, wk) in w.iter().enumerate() {
                s += wk * f.get(start + k, j);
            }
            out.set(i, j, s);
        }
    }
    out
}

pub fn ddx(f: &ScalarField) -> ScalarField {
    let st = line_stencil(f.grid.xs(), 1);
    apply_along_x(f, &st, &format!("ddx({})", f.name))
}

pub fn ddy(f: &ScalarField) -> ScalarField {
    let st = line_stencil(f.grid.ys(), 1);
    apply_along_y(f, &st, &format!("ddy({})", f.name))
}

pub fn d2dx2(f: &ScalarField) -> ScalarField {
    let st = line_stencil(f.grid.xs(), 2);
    apply_along_x(f, &st, &format!("d2dx2({})", f.name))
}

pub fn d2dy2(f: &ScalarField) -> ScalarField {
    let st = line_stencil(f.grid.ys(), 2);
    apply_along_y(f, &st, &format!("d2dy2({})", f.name))
}

/// Trapezoid weights for the node set.
pub fn trapezoid_weights(coords: &[f64]) -> Vec<f64> {
    let n = coords.len();
    let mut w = vec![0.0; n];
    for k in 0..n - 1 {
        let h = coords[k + 1] - coords[k];
        w[k] += 0.5 * h;
        w[k + 1] += 0.5 * h;
    }
    w
}

/// Trapezoid integral of samples over the node set.
pub fn trapz(coords: &[f64], vals: &[f64]) -> f64 {
    let mut s = 0.0;
    for k in 0..coords.len() - 1 {
        s += 0.5 * (coords[k + 1] - coords[k]) * (vals[k] + vals[k + 1]);
    }
    s
}

/// Cumulative trapezoid from the first node: out[j] = int_{c0}^{cj} v.
pub fn cumtrapz(coords: &[f64], vals: &[f64]) -> Vec<f64> {
    let n = coords.len();
    let mut out = vec![0.0; n];
    for k in 1..n {
        out[k] = out[k - 1] + 0.5 * (coords[k] - coords[k - 1]) * (vals[k] + vals[k - 1]);
    }
    out
}

/// Cumulative trapezoid to the last node: out[j] = int_{cj}^{cend} v.
pub fn cumtrapz_to_top(coords: &[f64], vals: &[f64]) -> Vec<f64> {
    let n = coords.len();
    let mut out = vec![0.0; n];
    for k in (0..n - 1).rev() {
        out[k] = out[k + 1] + 0.5 * (coords[k + 1] - coords[k]) * (vals[k] + vals[k + 1]);
    }
    out
}

/// Field-level cumulative integral along y from the wall.
pub fn cumint_y_from_wall(f: &ScalarField, name: &str) -> ScalarField {
    let g = &f.grid;
    let mut out = ScalarField::zeros(g, name);
    for i in 0..g.nx {
        out.set_column(i, &cumtrapz(g.ys(), f.column(i)));
    }
    out
}

/// Field-level cumulative integral along y up to the top node.
pub fn cumint_y_to_top(f: &ScalarField, name: &str) -> ScalarField {
    let g = &f.grid;
    let mut out = ScalarField::zeros(g, name);
    for i in 0..g.nx {
        out.set_column(i, &cumtrapz_to_top(g.ys(), f.column(i)));
    }
    out
}

/// Field-level cumulative integral along x from the inflow.
pub fn cumint_x_from_inflow(f: &ScalarField, name: &str) -> ScalarField {
    let g = &f.grid;
    let mut out = ScalarField::zeros(g, name);
    let xs = g.xs();
    for j in 0..g.ny {
        let mut acc = 0.0;
        out.set(0, j, 0.0);
        for i in 1..g.nx {
            acc += 0.5 * (xs[i] - xs[i - 1]) * (f.get(i, j) + f.get(i - 1, j));
            out.set(i, j, acc);
        }
    }
    out
}

/// Nested kernel used by the Taylor-remainder fields: for fixed x,
/// out(y) = int_0^y int_y^{y1} g(tau) dtau dy1, computed per column.
/// Equivalent closed form: int_0^y G(y1) dy1 - y G(y) with G = cumtrapz(g).
pub fn nested_remainder_y(f: &ScalarField, name: &str) -> ScalarField {
    let g = &f.grid;
    let ys = g.ys();
    let mut out = ScalarField::zeros(g, name);
    for i in 0..g.nx {
        let big_g = cumtrapz(ys, f.column(i));
        let int_g = cumtrapz(ys, &big_g);
        let col: Vec<f64> = (0..g.ny).map(|j| int_g[j] - ys[j] * big_g[j]).collect();
        out.set_column(i, &col);
    }
    out
}

/// Defect of the discrete divergence pair (u, v) in the cell form that the
/// vertical-recovery construction satisfies exactly: on each vertical cell
/// (j, j+1) at station i,
///   [v(i,j+1) - v(i,j)] / h  +  [ddx(u)(i,j+1) + ddx(u)(i,j)] / 2.
/// Returns the maximum absolute defect over all cells.
pub fn divergence_defect(u: &ScalarField, v: &ScalarField) -> f64 {
    let ux = ddx(u);
    let g = &u.grid;
    let ys = g.ys();
    let mut worst = 0.0f64;
    for i in 0..g.nx {
        for j in 0..g.ny - 1 {
            let h = ys[j + 1] - ys[j];
            let d = (v.get(i, j + 1) - v.get(i, j)) / h
                + 0.5 * (ux.get(i, j + 1) + ux.get(i, j));
            worst = worst.max(d.abs());
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{Frame, Grid, Spacing};
    use proptest::prelude::*;

    #[test]
    fn ddx_linear_exact() {
        let g = Grid::new(7, 5, 2.0, 1.0, Frame::SlowY, Spacing::Uniform).unwrap();
        let f = ScalarField::from_fn(&g, "f", |x, _| x);
        let d = ddx(&f);
        for v in d.values() {
            assert!((v - 1.0).abs() < 1e-13);
        }
    }

    #[test]
    fn d2dy2_quadratic_exact_uniform() {
        let g = Grid::new(4, 9, 1.0, 3.0, Frame::FastY, Spacing::Uniform).unwrap();
        let f = ScalarField::from_fn(&g, "f", |_, y| y * y);
        let d = d2dy2(&f);
        for v in d.values() {
            assert!((v - 2.0).abs() < 1e-11);
        }
    }

    #[test]
    fn ddy_sine_second_order_with_constant() {
        // Richardson refinement oracle: error at ny=65 bounded by C h^2 with
        // C close to (2*pi)^3 / 6 (the centered-difference truncation constant).
        let two_pi = 2.0 * std::f64::consts::PI;
        let mut errs = Vec::new();
        for &ny in &[65usize, 129] {
            let g = Grid::new(4, ny, 1.0, 1.0, Frame::FastY, Spacing::Uniform).unwrap();
            let f = ScalarField::from_fn(&g, "f", |_, y| (two_pi * y).sin());
            let d = ddy(&f);
            let mut err = 0.0f64;
            // interior nodes only: boundary closures have a different constant
            for j in 1..ny - 1 {
                let y = g.y(j);
                err = err.max((d.get(2, j) - two_pi * (two_pi * y).cos()).abs());
            }
            let h = 1.0 / (ny - 1) as f64;
            errs.push((h, err));
        }
        let order = (errs[0].1 / errs[1].1).ln() / (errs[0].0 / errs[1].0).ln();
        assert!(order > 1.9 && order < 2.1, "observed order {order}");
        let c_fit = errs[0].1 / errs[0].0.powi(2);
        let c_theory = two_pi.powi(3) / 6.0;
        assert!(
            (c_fit / c_theory - 1.0).abs() < 0.1,
            "fitted constant {c_fit} vs theory {c_theory}"
        );
    }

    #[test]
    fn one_sided_rows_second_order() {
        let g = Grid::new(4, 33, 1.0, 1.0, Frame::FastY, Spacing::Uniform).unwrap();
        let f = ScalarField::from_fn(&g, "f", |_, y| (y * 1.7).exp());
        let d2 = d2dy2(&f);
        let got = d2.get(1, 0);
        let want = 1.7f64 * 1.7 * 1.0;
        // 4-point one-sided closure is exact on cubics, O(h^2) here
        assert!((got - want).abs() < 5e-3, "boundary d2 error {}", got - want);
    }

    #[test]
    fn nested_remainder_matches_closed_form_quadratic() {
        // g = 2c constant: int_0^y int_y^{y1} 2c = -c y^2
        let g = Grid::new(4, 41, 1.0, 2.0, Frame::FastY, Spacing::Uniform).unwrap();
        let c = 0.7;
        let f = ScalarField::from_fn(&g, "g", |_, _| 2.0 * c);
        let out = nested_remainder_y(&f, "E");
        for j in 0..g.ny {
            let y = g.y(j);
            assert!((out.get(2, j) + c * y * y).abs() < 1e-12);
        }
    }

    #[test]
    fn divergence_pair_constructed_exact() {
        let g = Grid::new(9, 17, 1.0, 2.0, Frame::FastY, Spacing::Uniform).unwrap();
        let u = ScalarField::from_fn(&g, "u", |x, y| (x * x + 1.0) * (-y).exp());
        // v built from the cell rule: v(j+1) = v(j) - h * avg(ddx u)
        let ux = ddx(&u);
        let mut v = ScalarField::zeros(&g, "v");
        for i in 0..g.nx {
            let mut acc = 0.0;
            v.set(i, 0, 0.0);
            for j in 1..g.ny {
                let h = g.y(j) - g.y(j - 1);
                acc -= 0.5 * h * (ux.get(i, j) + ux.get(i, j - 1));
                v.set(i, j, acc);
            }
        }
        assert!(divergence_defect(&u, &v) < 1e-13);
    }

    proptest! {
        #[test]
        fn derivatives_exact_on_quadratics(a in -2.0..2.0f64, b in -2.0..2.0f64, c in -2.0..2.0f64) {
            let g = Grid::new(6, 11, 1.5, 2.0, Frame::FastY,
                              Spacing::GradedTowardWall { ratio: 1.08 }).unwrap();
            let f = ScalarField::from_fn(&g, "q", |_, y| a + b * y + c * y * y);
            let d1 = ddy(&f);
            let d2 = d2dy2(&f);
            for j in 0..g.ny {
                let y = g.y(j);
                prop_assert!((d1.get(3, j) - (b + 2.0 * c * y)).abs() < 1e-10);
                prop_assert!((d2.get(3, j) - 2.0 * c).abs() < 1e-9);
            }
            // constants are annihilated
            let k = ScalarField::from_fn(&g, "k", |_, _| a);
            prop_assert!(ddy(&k).max_abs() < 1e-12);
            prop_assert!(ddx(&k).max_abs() < 1e-12);
        }
    }
}
