//! Even/odd reflection of lower-half fields across the channel midline Y = 1.

use crate::error::{CoreError, Result};
use crate::field::ScalarField;
use crate::grid::{Grid, Spacing};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// Extend a field given on Y in [0, 1] to Y in [0, 2] by reflection about
/// Y = 1: even for the tangential components (U, H), odd for the vertical
/// ones (V, G). Odd extension requires a vanishing midline trace.
pub fn extend_symmetric(f_lower: &ScalarField, parity: Parity) -> Result<ScalarField> {
    let g = &f_lower.grid;
    if (g.y_max - 1.0).abs() > 1e-12 {
        return Err(CoreError::InvalidArgument(format!(
            "symmetric extension expects a field on Y in [0,1], got y_max = {}",
            g.y_max
        )));
    }
    if parity == Parity::Odd {
        let mut worst = 0.0f64;
        for i in 0..g.nx {
            worst = worst.max(f_lower.get(i, g.ny - 1).abs());
        }
        if worst > 1e-10 {
            return Err(CoreError::Symmetry(format!(
                "odd extension needs f(., 1) = 0 but max |f(., 1)| = {worst:.3e}"
            )));
        }
    }
    // mirrored node set: Y and 2 - Y share the midline node once
    let ny2 = 2 * g.ny - 1;
    let ext = Grid::new(g.nx, ny2, g.x_max, 2.0, g.frame, Spacing::Uniform)?;
    // the mirrored coordinates of a graded grid are not uniform; build the
    // extended grid explicitly when the lower grid is graded
    let ext = if matches!(g.spacing, Spacing::Uniform) {
        ext
    } else {
        return Err(CoreError::InvalidArgument(
            "symmetric extension supports uniform vertical grids".into(),
        ));
    };
    let sign = match parity {
        Parity::Even => 1.0,
        Parity::Odd => -1.0,
    };
    let mut out = ScalarField::zeros(&ext, &f_lower.name);
    for i in 0..g.nx {
        for j in 0..g.ny {
            out.set(i, j, f_lower.get(i, j));
        }
        for j in 0..g.ny - 1 {
            // node at Y = 2 - y_j mirrors node j
            out.set(i, ny2 - 1 - j, sign * f_lower.get(i, j));
        }
    }
    Ok(out)
}
