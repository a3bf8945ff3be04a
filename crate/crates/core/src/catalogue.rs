//! Catalogue of prescribed data functions. Every profile a run uses is a
//! named family plus parameters, so configurations stay plain text and
//! derivatives are available analytically.

use serde::{Deserialize, Serialize};

/// One-dimensional profile family with analytic first and second
/// derivatives.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum ProfileFn {
    Zero,
    Const {
        a: f64,
    },
    /// Shear profile on [0, 1]: wall - curve * Y (2 - Y), flat at Y = 1 and
    /// continued by its constant midline value beyond (C^1).
    Shear {
        wall: f64,
        curve: f64,
    },
    /// amp * exp(-rate y^2)
    Gauss {
        amp: f64,
        rate: f64,
    },
    /// amp * y * exp(-rate y^2); vanishes at the wall with slope amp
    GaussSlope {
        amp: f64,
        rate: f64,
    },
    /// amp * exp(-rate y)
    ExpDecay {
        amp: f64,
        rate: f64,
    },
    /// amp * (1 - tanh(rate y))
    TanhDecay {
        amp: f64,
        rate: f64,
    },
}

impl ProfileFn {
    pub fn eval(&self, y: f64) -> f64 {
        match *self {
            ProfileFn::Zero => 0.0,
            ProfileFn::Const { a } => a,
            ProfileFn::Shear { wall, curve } => {
                if y >= 1.0 {
                    wall - curve
                } else {
                    wall - curve * y * (2.0 - y)
                }
            }
            ProfileFn::Gauss { amp, rate } => amp * (-rate * y * y).exp(),
            ProfileFn::GaussSlope { amp, rate } => amp * y * (-rate * y * y).exp(),
            ProfileFn::ExpDecay { amp, rate } => amp * (-rate * y).exp(),
            ProfileFn::TanhDecay { amp, rate } => amp * (1.0 - (rate * y).tanh()),
        }
    }

    pub fn d1(&self, y: f64) -> f64 {
        match *self {
            ProfileFn::Zero | ProfileFn::Const { .. } => 0.0,
            ProfileFn::Shear { curve, .. } => {
                if y >= 1.0 {
                    0.0
                } else {
                    -curve * (2.0 - 2.0 * y)
                }
            }
            ProfileFn::Gauss { amp, rate } => -2.0 * rate * y * amp * (-rate * y * y).exp(),
            ProfileFn::GaussSlope { amp, rate } => {
                amp * (1.0 - 2.0 * rate * y * y) * (-rate * y * y).exp()
            }
            ProfileFn::ExpDecay { amp, rate } => -rate * amp * (-rate * y).exp(),
            ProfileFn::TanhDecay { amp, rate } => {
                let t = (rate * y).tanh();
                -amp * rate * (1.0 - t * t)
            }
        }
    }

    pub fn d2(&self, y: f64) -> f64 {
        match *self {
            ProfileFn::Zero | ProfileFn::Const { .. } => 0.0,
            ProfileFn::Shear { curve, .. } => {
                if y >= 1.0 {
                    0.0
                } else {
                    2.0 * curve
                }
            }
            ProfileFn::Gauss { amp, rate } => {
                amp * (4.0 * rate * rate * y * y - 2.0 * rate) * (-rate * y * y).exp()
            }
            ProfileFn::GaussSlope { amp, rate } => {
                amp * y * (4.0 * rate * rate * y * y - 6.0 * rate) * (-rate * y * y).exp()
            }
            ProfileFn::ExpDecay { amp, rate } => rate * rate * amp * (-rate * y).exp(),
            ProfileFn::TanhDecay { amp, rate } => {
                let t = (rate * y).tanh();
                2.0 * amp * rate * rate * t * (1.0 - t * t)
            }
        }
    }
}

/// Side-boundary shape for the ideal correctors: unit value at Y = 0,
/// vanishing with zero slope at Y = 1; the pipeline scales it by the
/// corner trace required by the compatibility conditions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SideShape {
    pub alpha: f64,
}

impl SideShape {
    pub fn eval(&self, y: f64) -> f64 {
        if y >= 1.0 {
            0.0
        } else {
            (1.0 - y) * (1.0 - y) * (1.0 + self.alpha * y)
        }
    }
}
