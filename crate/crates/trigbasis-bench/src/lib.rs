//! Shared fixtures for the criterion benches.

use trigbasis::{GridKind, SampleSet, UniformGrid};

/// The 9-node Type0 grid used across the benches.
pub fn grid9() -> UniformGrid {
    UniformGrid::new(GridKind::Type0, 9).unwrap()
}

/// A low-smoothness sample set (square wave) on the given grid.
pub fn square_samples(grid: UniformGrid) -> SampleSet {
    SampleSet::from_fn(grid, |t| {
        let s = t.sin();
        if s == 0.0 {
            0.0
        } else {
            s.signum()
        }
    })
    .unwrap()
}

/// Evaluation abscissae spread over one period.
pub fn sweep(points: usize) -> Vec<f64> {
    (0..points)
        .map(|i| std::f64::consts::TAU * i as f64 / points as f64)
        .collect()
}
