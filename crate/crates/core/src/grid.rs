use crate::error::{CoreError, Result};
use serde::{Deserialize, Serialize};
use std::sync::Arc;

/// Which vertical coordinate the grid samples: the slow interior variable Y
/// on the unit strip, or the fast layer variable y = Y/sqrt(eps).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Frame {
    SlowY,
    FastY,
}

/// Vertical node distribution. Graded grids place nodes geometrically,
/// finest at the wall y = 0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Spacing {
    Uniform,
    GradedTowardWall { ratio: f64 },
}

/// Structured rectangular grid. x nodes are always uniform; the vertical
/// direction may be graded. Node coordinates are fully determined by the
/// constructor arguments.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Grid {
    pub nx: usize,
    pub ny: usize,
    pub x_max: f64,
    pub y_max: f64,
    pub frame: Frame,
    pub spacing: Spacing,
    xs: Vec<f64>,
    ys: Vec<f64>,
}

impl Grid {
    pub fn new(
        nx: usize,
        ny: usize,
        x_max: f64,
        y_max: f64,
        frame: Frame,
        spacing: Spacing,
    ) -> Result<Arc<Grid>> {
        if nx < 4 || ny < 4 {
            return Err(CoreError::InvalidGrid(format!(
                "need nx >= 4 and ny >= 4, got {nx} x {ny}"
            )));
        }
        if !(x_max > 0.0) || !(y_max > 0.0) {
            return Err(CoreError::InvalidGrid(format!(
                "extents must be positive, got x_max={x_max}, y_max={y_max}"
            )));
        }
        if let Spacing::GradedTowardWall { ratio } = spacing {
            if !(ratio > 0.0) || !ratio.is_finite() {
                return Err(CoreError::InvalidGrid(format!("bad grading ratio {ratio}")));
            }
        }
        let xs: Vec<f64> = (0..nx)
            .map(|i| x_max * i as f64 / (nx - 1) as f64)
            .collect();
        let ys = match spacing {
            Spacing::Uniform => (0..ny)
                .map(|j| y_max * j as f64 / (ny - 1) as f64)
                .collect(),
            Spacing::GradedTowardWall { ratio } => {
                // spacings h0, h0*r, ..., h0*r^(ny-2) summing to y_max
                let m = ny - 1;
                let h0 = if (ratio - 1.0).abs() < 1e-14 {
                    y_max / m as f64
                } else {
                    y_max * (ratio - 1.0) / (ratio.powi(m as i32) - 1.0)
                };
                let mut ys = Vec::with_capacity(ny);
                let mut y = 0.0;
                let mut h = h0;
                ys.push(0.0);
                for _ in 0..m {
                    y += h;
                    ys.push(y);
                    h *= ratio;
                }
                // kill accumulated round-off at the top node
                *ys.last_mut().unwrap() = y_max;
                ys
            }
        };
        Ok(Arc::new(Grid {
            nx,
            ny,
            x_max,
            y_max,
            frame,
            spacing,
            xs,
            ys,
        }))
    }

    pub fn xs(&self) -> &[f64] {
        &self.xs
    }

    pub fn ys(&self) -> &[f64] {
        &self.ys
    }

    pub fn x(&self, i: usize) -> f64 {
        self.xs[i]
    }

    pub fn y(&self, j: usize) -> f64 {
        self.ys[j]
    }

    /// Uniform x spacing.
    pub fn dx(&self) -> f64 {
        self.x_max / (self.nx - 1) as f64
    }

    pub fn same_nodes(&self, other: &Grid) -> bool {
        self.nx == other.nx
            && self.ny == other.ny
            && self.xs == other.xs
            && self.ys == other.ys
    }
}
