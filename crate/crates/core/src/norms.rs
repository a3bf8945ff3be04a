//! Weighted norms over layer grids: <y>^l-weighted L2 in y (sup over x),
//! plain L2 over the domain, and max norms, all by trapezoid quadrature.

use crate::calculus::trapezoid_weights;
use crate::error::{CoreError, Result};
use crate::field::ScalarField;
use serde::{Deserialize, Serialize};

/// Weight exponent l and Sobolev order m for the H^m_l family.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct WeightSpec {
    pub l: f64,
    pub m: usize,
}

impl WeightSpec {
    pub fn new(l: f64, m: usize) -> Result<WeightSpec> {
        if l < 0.0 {
            return Err(CoreError::InvalidArgument(format!(
                "weight exponent must be nonnegative, got {l}"
            )));
        }
        Ok(WeightSpec { l, m })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum NormKind {
    /// sup over x of the <y>^l-weighted L2 norm along y
    L2InYSupInX,
    /// <y>^l-weighted L2 over the full rectangle
    L2OnDomain,
    /// plain max norm
    Linf,
}

/// A computed norm value with its provenance.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NormReport {
    pub name: String,
    pub kind: NormKind,
    pub l: f64,
    pub value: f64,
    pub grid: GridStamp,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GridStamp {
    pub nx: usize,
    pub ny: usize,
    pub x_max: f64,
    pub y_max: f64,
}

impl GridStamp {
    pub fn of(grid: &crate::grid::Grid) -> GridStamp {
        GridStamp {
            nx: grid.nx,
            ny: grid.ny,
            x_max: grid.x_max,
            y_max: grid.y_max,
        }
    }
}

#[inline]
fn bracket_weight(y: f64, l: f64) -> f64 {
    // <y>^(2l) for the squared integrand
    (1.0 + y * y).powf(l)
}

pub fn weighted_norm(f: &ScalarField, w: WeightSpec, kind: NormKind) -> Result<NormReport> {
    if w.l < 0.0 {
        return Err(CoreError::InvalidArgument("negative weight exponent".into()));
    }
    let g = &f.grid;
    let value = match kind {
        NormKind::Linf => f.max_abs(),
        NormKind::L2InYSupInX => {
            let wy = trapezoid_weights(g.ys());
            let mut sup = 0.0f64;
            for i in 0..g.nx {
                let col = f.column(i);
                let mut s = 0.0;
                for j in 0..g.ny {
                    s += wy[j] * bracket_weight(g.y(j), w.l) * col[j] * col[j];
                }
                sup = sup.max(s.sqrt());
            }
            sup
        }
        NormKind::L2OnDomain => {
            let wy = trapezoid_weights(g.ys());
            let wx = trapezoid_weights(g.xs());
            let mut s = 0.0;
            for i in 0..g.nx {
                let col = f.column(i);
                for j in 0..g.ny {
                    s += wx[i] * wy[j] * bracket_weight(g.y(j), w.l) * col[j] * col[j];
                }
            }
            s.sqrt()
        }
    };
    Ok(NormReport {
        name: f.name.clone(),
        kind,
        l: w.l,
        value,
        grid: GridStamp::of(g),
    })
}

/// Unweighted L2 over the rectangle; the norm used for residual rate fits.
pub fn l2_domain(f: &ScalarField) -> f64 {
    weighted_norm(f, WeightSpec { l: 0.0, m: 0 }, NormKind::L2OnDomain)
        .expect("l = 0 is valid")
        .value
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{Frame, Grid, Spacing};
    use proptest::prelude::*;

    #[test]
    fn zero_field_zero_norm() {
        let g = Grid::new(5, 9, 1.0, 1.0, Frame::FastY, Spacing::Uniform).unwrap();
        let f = ScalarField::zeros(&g, "z");
        for kind in [NormKind::L2InYSupInX, NormKind::L2OnDomain, NormKind::Linf] {
            let r = weighted_norm(&f, WeightSpec { l: 2.0, m: 0 }, kind).unwrap();
            assert_eq!(r.value, 0.0);
        }
    }

    #[test]
    fn unit_integrand() {
        let g = Grid::new(5, 33, 1.0, 1.0, Frame::FastY, Spacing::Uniform).unwrap();
        let f = ScalarField::from_fn(&g, "one", |_, _| 1.0);
        let r = weighted_norm(&f, WeightSpec { l: 0.0, m: 0 }, NormKind::L2InYSupInX).unwrap();
        assert!((r.value - 1.0).abs() < 1e-12);
    }

    #[test]
    fn exp_decay_weighted_matches_quadrature_oracle() {
        // || e^{-y} ||_{L2_2(0,40)}^2 = int (1+y^2)^2 e^{-2y} dy = 1.75 exactly
        // on (0, inf); the oracle below integrates the same truncated interval
        // with a much finer trapezoid rule.
        let ny = 36_001;
        let g = Grid::new(4, ny, 1.0, 40.0, Frame::FastY, Spacing::Uniform).unwrap();
        let f = ScalarField::from_fn(&g, "e", |_, y| (-y).exp());
        let r = weighted_norm(&f, WeightSpec { l: 2.0, m: 0 }, NormKind::L2InYSupInX).unwrap();
        // refined-quadrature oracle at 8x resolution
        let m = 288_001usize;
        let h = 40.0 / (m - 1) as f64;
        let mut s = 0.0;
        for k in 0..m {
            let y = h * k as f64;
            let w = if k == 0 || k == m - 1 { 0.5 } else { 1.0 };
            s += w * h * (1.0 + y * y).powi(2) * (-2.0 * y).exp();
        }
        let oracle = s.sqrt();
        assert!(
            (r.value - oracle).abs() < 1e-6,
            "norm {} vs oracle {}",
            r.value,
            oracle
        );
        assert!((oracle * oracle - 1.75).abs() < 1e-6);
    }

    #[test]
    fn rejects_negative_weight() {
        assert!(WeightSpec::new(-1.0, 0).is_err());
    }

    proptest! {
        #[test]
        fn homogeneous_in_scaling(c in -5.0..5.0f64) {
            let g = Grid::new(5, 17, 1.0, 3.0, Frame::FastY, Spacing::Uniform).unwrap();
            let f = ScalarField::from_fn(&g, "f", |x, y| (x - y).sin() + 0.3 * y);
            for kind in [NormKind::L2InYSupInX, NormKind::L2OnDomain, NormKind::Linf] {
                let a = weighted_norm(&f.scale(c), WeightSpec { l: 1.0, m: 0 }, kind).unwrap();
                let b = weighted_norm(&f, WeightSpec { l: 1.0, m: 0 }, kind).unwrap();
                prop_assert!((a.value - c.abs() * b.value).abs() <= 1e-12 * (1.0 + a.value));
            }
        }
    }
}
