//! Cardinal trigonometric interpolation and least-squares approximation on
//! uniform periodic grids.
//!
//! The crate works with four families of basis functions on `N`-node
//! uniform grids over `[0, 2pi)` (`N` odd):
//!
//! * interpolation polynomials `tm_k` (translated, normalized Dirichlet
//!   kernels) — cardinal at the nodes and orthogonal under both the
//!   continuous and the discrete scalar product;
//! * interpolation splines `ts_j` — series of attenuated aliased
//!   harmonics, cardinal at the nodes, orthogonal only discretely;
//! * least-squares polynomials `phi_{j,q}` and splines `ts_{j,q}` —
//!   truncations of the above to `q` harmonics whose sample-weighted sums
//!   realize the discrete least-squares optimum of order `q`.
//!
//! Everything an approximant computes is linear in the sampled function
//! values, so fits never solve a system: building one is just attaching a
//! basis to a [`SampleSet`].
//!
//! ```
//! use trigbasis::{Approximant, BasisSpec, GridKind, SampleSet, UniformGrid};
//!
//! let grid = UniformGrid::new(GridKind::Type0, 9)?;
//! let samples = SampleSet::from_fn(grid, |t| (2.0 * t).sin())?;
//! let interp = Approximant::build(samples, BasisSpec::InterpPoly)?;
//! // sin(2t) lies in the span of the 9-node basis, so the fit is exact
//! let y = interp.evaluate(1.0)?;
//! assert!((y - 2.0f64.sin()).abs() < 1e-12);
//! # Ok::<(), trigbasis::Error>(())
//! ```

pub mod approximants;
pub mod error;
pub mod grids;
pub mod kernels;
pub mod validation;

pub use approximants::{basis_eval, Approximant, BasisSpec, FourierCoeffs, SampleSet};
pub use error::{Error, Result};
pub use grids::{wrap_angle, GridKind, UniformGrid};
pub use kernels::{
    phi_ls_eval, series_c, series_h, sigma_factor, tm_eval, ts_eval, ts_ls_eval, HarmonicBudget,
    SplineShape,
};
pub use validation::{
    collinearity_defect, collinearity_defect_of, continuous_gram, discrete_gram, ls_oracle,
    periodic_quadrature, GramMatrix, GramNormalization,
};
