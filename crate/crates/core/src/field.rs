use crate::error::{CoreError, Result};
use crate::grid::Grid;
use std::sync::Arc;

/// One scalar unknown sampled on a structured grid, row-major by
/// (x-index, vertical-index).
#[derive(Debug, Clone)]
pub struct ScalarField {
    pub grid: Arc<Grid>,
    pub name: String,
    values: Vec<f64>,
}

impl ScalarField {
    pub fn zeros(grid: &Arc<Grid>, name: &str) -> ScalarField {
        ScalarField {
            grid: grid.clone(),
            name: name.to_string(),
            values: vec![0.0; grid.nx * grid.ny],
        }
    }

    pub fn from_fn(grid: &Arc<Grid>, name: &str, f: impl Fn(f64, f64) -> f64) -> ScalarField {
        let mut v = Vec::with_capacity(grid.nx * grid.ny);
        for i in 0..grid.nx {
            let x = grid.x(i);
            for j in 0..grid.ny {
                v.push(f(x, grid.y(j)));
            }
        }
        ScalarField {
            grid: grid.clone(),
            name: name.to_string(),
            values: v,
        }
    }

    pub fn from_values(grid: &Arc<Grid>, name: &str, values: Vec<f64>) -> Result<ScalarField> {
        if values.len() != grid.nx * grid.ny {
            return Err(CoreError::GridMismatch(format!(
                "field '{name}' has {} values for a {}x{} grid",
                values.len(),
                grid.nx,
                grid.ny
            )));
        }
        Ok(ScalarField {
            grid: grid.clone(),
            name: name.to_string(),
            values,
        })
    }

    #[inline]
    pub fn idx(&self, i: usize, j: usize) -> usize {
        i * self.grid.ny + j
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.grid.ny + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.values[i * self.grid.ny + j] = v;
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [f64] {
        &mut self.values
    }

    /// Column of values along y at station i.
    pub fn column(&self, i: usize) -> &[f64] {
        &self.values[i * self.grid.ny..(i + 1) * self.grid.ny]
    }

    pub fn set_column(&mut self, i: usize, col: &[f64]) {
        assert_eq!(col.len(), self.grid.ny, "column length mismatch");
        self.values[i * self.grid.ny..(i + 1) * self.grid.ny].copy_from_slice(col);
    }

    /// Wall row (vertical index 0) as a function of x.
    pub fn wall_row(&self) -> Vec<f64> {
        (0..self.grid.nx).map(|i| self.get(i, 0)).collect()
    }

    pub fn rename(mut self, name: &str) -> ScalarField {
        self.name = name.to_string();
        self
    }

    pub fn map(&self, name: &str, f: impl Fn(f64) -> f64) -> ScalarField {
        ScalarField {
            grid: self.grid.clone(),
            name: name.to_string(),
            values: self.values.iter().map(|&v| f(v)).collect(),
        }
    }

    pub fn scale(&self, c: f64) -> ScalarField {
        self.map(&self.name.clone(), |v| c * v)
    }

    fn check_same_grid(&self, other: &ScalarField) {
        assert!(
            self.grid.same_nodes(&other.grid),
            "fields '{}' and '{}' live on different grids",
            self.name,
            other.name
        );
    }

    pub fn add(&self, other: &ScalarField) -> ScalarField {
        self.check_same_grid(other);
        let values = self
            .values
            .iter()
            .zip(other.values.iter())
            .map(|(a, b)| a + b)
            .collect();
        ScalarField {
            grid: self.grid.clone(),
            name: self.name.clone(),
            values,
        }
    }

    pub fn sub(&self, other: &ScalarField) -> ScalarField {
        self.check_same_grid(other);
        let values = self
            .values
            .iter()
            .zip(other.values.iter())
            .map(|(a, b)| a - b)
            .collect();
        ScalarField {
            grid: self.grid.clone(),
            name: self.name.clone(),
            values,
        }
    }

    pub fn mul(&self, other: &ScalarField) -> ScalarField {
        self.check_same_grid(other);
        let values = self
            .values
            .iter()
            .zip(other.values.iter())
            .map(|(a, b)| a * b)
            .collect();
        ScalarField {
            grid: self.grid.clone(),
            name: self.name.clone(),
            values,
        }
    }

    /// self += c * other, in place.
    pub fn axpy(&mut self, c: f64, other: &ScalarField) {
        self.check_same_grid(other);
        for (a, b) in self.values.iter_mut().zip(other.values.iter()) {
            *a += c * b;
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0f64, |m, v| m.max(v.abs()))
    }

    /// Location and value of the largest absolute entry.
    pub fn argmax_abs(&self) -> (usize, usize, f64) {
        let mut best = (0, 0, 0.0f64);
        for i in 0..self.grid.nx {
            for j in 0..self.grid.ny {
                let v = self.get(i, j).abs();
                if v > best.2 {
                    best = (i, j, v);
                }
            }
        }
        best
    }

    /// Error if any entry is NaN or infinite, reporting the first bad node.
    pub fn check_finite(&self) -> Result<()> {
        for i in 0..self.grid.nx {
            for j in 0..self.grid.ny {
                if !self.get(i, j).is_finite() {
                    return Err(CoreError::NonFinite {
                        field: self.name.clone(),
                        x: self.grid.x(i),
                        y: self.grid.y(j),
                    });
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{Frame, Spacing};

    #[test]
    fn from_fn_and_ops() {
        let g = Grid::new(5, 4, 1.0, 2.0, Frame::FastY, Spacing::Uniform).unwrap();
        let f = ScalarField::from_fn(&g, "f", |x, y| x + 2.0 * y);
        assert_eq!(f.values().len(), 20);
        assert!((f.get(2, 3) - (0.5 + 4.0)).abs() < 1e-15);
        let s = f.add(&f).scale(0.5);
        assert!((s.get(2, 3) - f.get(2, 3)).abs() < 1e-15);
    }

    #[test]
    fn from_values_length_check() {
        let g = Grid::new(4, 4, 1.0, 1.0, Frame::SlowY, Spacing::Uniform).unwrap();
        assert!(ScalarField::from_values(&g, "bad", vec![0.0; 15]).is_err());
    }
}
