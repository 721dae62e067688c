//! Error type shared by grid construction, kernel evaluation, and fitting.

use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Grid sizes must be odd so that the cardinal identity holds exactly
    /// at the nodes; even sizes (and N < 3) are rejected outright.
    #[error("grid size must be an odd integer >= 3, got {0}")]
    EvenOrTooSmallN(usize),

    /// An angle or sample value was NaN or infinite.
    #[error("expected a finite value, got {0}")]
    NonFiniteInput(f64),

    /// A 1-based node or harmonic index fell outside its valid range.
    #[error("index {index} is out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    /// A least-squares basis asked for more harmonics than the grid supports.
    #[error("harmonic budget q = {q} exceeds the grid's harmonic order n = {n}")]
    BudgetTooLarge { q: usize, n: usize },

    /// A spline denominator H_k came out numerically unusable for the
    /// requested (k, r, N, truncation) combination.
    #[error("spline denominator H_{k} = {value:e} is too close to zero")]
    DegenerateDenominator { k: usize, value: f64 },

    /// Sample set and approximant were built on structurally different grids.
    #[error("sample set and approximant use different grids")]
    GridMismatch,

    /// The dense normal-equations solve hit a vanishing pivot.
    #[error("normal-equations system is singular")]
    SingularSystem,

    /// Spline shape parameters outside their domain.
    #[error("spline shape requires r >= 1 and truncation >= 1, got r = {r}, truncation = {truncation}")]
    InvalidSplineShape { r: u32, truncation: usize },

    /// A sample vector whose length does not match its grid.
    #[error("expected {expected} sample values for the grid, got {got}")]
    SampleCountMismatch { expected: usize, got: usize },
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
