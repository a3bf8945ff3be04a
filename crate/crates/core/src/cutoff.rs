//! Cutoff functions: the inner plateau function phi used by the half-line
//! transform and the strip truncation bump chi. Both are C^2 piecewise
//! quintic smoothsteps, so the third derivatives appearing in the
//! truncation residual lists stay bounded.

use serde::{Deserialize, Serialize};

#[inline]
fn smoothstep5(t: f64) -> f64 {
    t * t * t * (10.0 - 15.0 * t + 6.0 * t * t)
}

#[inline]
fn smoothstep5_d1(t: f64) -> f64 {
    30.0 * t * t * (1.0 - t) * (1.0 - t)
}

#[inline]
fn smoothstep5_d2(t: f64) -> f64 {
    60.0 * t * (1.0 - 3.0 * t + 2.0 * t * t)
}

#[inline]
fn smoothstep5_d3(t: f64) -> f64 {
    60.0 * (1.0 - 6.0 * t + 6.0 * t * t)
}

/// Cutoff pair used by the layer constructions.
///
/// phi: 0 on [0, r0], 1 on [2 r0, inf), rising smoothstep between.
/// chi: 1 on [0, plateau], 0 on [1, inf), falling smoothstep between,
/// with chi(0) = 1, chi(1) = chi'(0) = chi'(1) = 0.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct CutoffSpec {
    pub r0: f64,
    pub chi_plateau: f64,
}

impl Default for CutoffSpec {
    fn default() -> Self {
        CutoffSpec {
            r0: 5.0,
            chi_plateau: 0.25,
        }
    }
}

impl CutoffSpec {
    pub fn phi(&self, y: f64) -> f64 {
        if y <= self.r0 {
            0.0
        } else if y >= 2.0 * self.r0 {
            1.0
        } else {
            smoothstep5((y - self.r0) / self.r0)
        }
    }

    pub fn phi_d1(&self, y: f64) -> f64 {
        if y <= self.r0 || y >= 2.0 * self.r0 {
            0.0
        } else {
            smoothstep5_d1((y - self.r0) / self.r0) / self.r0
        }
    }

    pub fn phi_d2(&self, y: f64) -> f64 {
        if y <= self.r0 || y >= 2.0 * self.r0 {
            0.0
        } else {
            smoothstep5_d2((y - self.r0) / self.r0) / (self.r0 * self.r0)
        }
    }

    #[inline]
    fn chi_t(&self, s: f64) -> f64 {
        (s - self.chi_plateau) / (1.0 - self.chi_plateau)
    }

    pub fn chi(&self, s: f64) -> f64 {
        if s <= self.chi_plateau {
            1.0
        } else if s >= 1.0 {
            0.0
        } else {
            1.0 - smoothstep5(self.chi_t(s))
        }
    }

    pub fn chi_d1(&self, s: f64) -> f64 {
        if s <= self.chi_plateau || s >= 1.0 {
            0.0
        } else {
            -smoothstep5_d1(self.chi_t(s)) / (1.0 - self.chi_plateau)
        }
    }

    pub fn chi_d2(&self, s: f64) -> f64 {
        if s <= self.chi_plateau || s >= 1.0 {
            0.0
        } else {
            -smoothstep5_d2(self.chi_t(s)) / (1.0 - self.chi_plateau).powi(2)
        }
    }

    pub fn chi_d3(&self, s: f64) -> f64 {
        if s <= self.chi_plateau || s >= 1.0 {
            0.0
        } else {
            -smoothstep5_d3(self.chi_t(s)) / (1.0 - self.chi_plateau).powi(3)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_endpoint_values() {
        let c = CutoffSpec::default();
        assert_eq!(c.phi(0.0), 0.0);
        assert_eq!(c.phi(5.0), 0.0);
        assert_eq!(c.phi(10.0), 1.0);
        assert_eq!(c.phi(30.0), 1.0);
        assert_eq!(c.phi_d1(5.0), 0.0);
        assert_eq!(c.phi_d1(10.0), 0.0);
        assert!(c.phi(7.5) > 0.0 && c.phi(7.5) < 1.0);
    }

    #[test]
    fn chi_endpoint_conditions() {
        let c = CutoffSpec::default();
        assert_eq!(c.chi(0.0), 1.0);
        assert_eq!(c.chi(1.0), 0.0);
        assert_eq!(c.chi_d1(0.0), 0.0);
        assert_eq!(c.chi_d1(1.0), 0.0);
        assert_eq!(c.chi(0.2), 1.0, "plateau keeps chi identically 1");
        assert_eq!(c.chi_d2(0.1), 0.0);
    }

    #[test]
    fn chi_is_c2_at_seams() {
        let c = CutoffSpec::default();
        let h = 1e-6;
        for s in [c.chi_plateau, 1.0] {
            // finite-difference second derivative across the seam stays close
            // to the one-sided analytic values
            let fd2 = (c.chi(s + h) - 2.0 * c.chi(s) + c.chi(s - h)) / (h * h);
            let an = 0.5 * (c.chi_d2(s - h) + c.chi_d2(s + h));
            assert!((fd2 - an).abs() < 1e-2, "seam s={s}: fd {fd2} vs {an}");
        }
    }

    #[test]
    fn derivatives_match_finite_differences() {
        let c = CutoffSpec::default();
        let h = 1e-5;
        for &y in &[6.0, 7.3, 8.9] {
            let fd = (c.phi(y + h) - c.phi(y - h)) / (2.0 * h);
            assert!((fd - c.phi_d1(y)).abs() < 1e-8);
            let fd2 = (c.phi(y + h) - 2.0 * c.phi(y) + c.phi(y - h)) / (h * h);
            assert!((fd2 - c.phi_d2(y)).abs() < 1e-4);
        }
        for &s in &[0.3, 0.55, 0.8] {
            let fd = (c.chi(s + h) - c.chi(s - h)) / (2.0 * h);
            assert!((fd - c.chi_d1(s)).abs() < 1e-8);
            let fd3 = (c.chi_d2(s + h) - c.chi_d2(s - h)) / (2.0 * h);
            assert!((fd3 - c.chi_d3(s)).abs() < 1e-4);
        }
    }
}
