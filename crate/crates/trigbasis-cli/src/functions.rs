//! Named 2pi-periodic test functions for the `fit` subcommand.

use std::f64::consts::{PI, TAU};

use clap::ValueEnum;

/// Built-in sample functions. `square` and `saw` are the low-smoothness
/// cases where spline fits earn their keep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TestFunction {
    /// Constant 1.
    Const1,
    /// sin t
    Sin1,
    /// sin 2t
    Sin2,
    /// cos 2t
    Cos2,
    /// sin 2t + 0.5 cos 3t
    Mix,
    /// Square wave: sign of sin t, with the jump points mapped to 0.
    Square,
    /// Sawtooth: (t - pi)/pi after wrapping t into [0, 2pi).
    Saw,
}

impl TestFunction {
    pub fn eval(self, t: f64) -> f64 {
        match self {
            TestFunction::Const1 => 1.0,
            TestFunction::Sin1 => t.sin(),
            TestFunction::Sin2 => (2.0 * t).sin(),
            TestFunction::Cos2 => (2.0 * t).cos(),
            TestFunction::Mix => (2.0 * t).sin() + 0.5 * (3.0 * t).cos(),
            TestFunction::Square => {
                let s = t.sin();
                // symmetric midpoint convention at the discontinuities
                if s == 0.0 {
                    0.0
                } else {
                    s.signum()
                }
            }
            TestFunction::Saw => (t.rem_euclid(TAU) - PI) / PI,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TestFunction::Const1 => "const1",
            TestFunction::Sin1 => "sin1",
            TestFunction::Sin2 => "sin2",
            TestFunction::Cos2 => "cos2",
            TestFunction::Mix => "mix",
            TestFunction::Square => "square",
            TestFunction::Saw => "saw",
        }
    }
}
