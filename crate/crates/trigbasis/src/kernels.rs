//! The four cardinal basis families, as pure functions of `(grid, index,
//! parameters, t)`.
//!
//! * [`tm_eval`] — trigonometric interpolation kernel: a normalized
//!   Dirichlet kernel translated to node `k`,
//!   `(1/N) * (1 + 2 * sum_{j=1}^{n} cos(j*(t - t_k)))` with `n = (N-1)/2`.
//!   Equals 1 at its own node and 0 at every other node.
//! * [`phi_ls_eval`] — least-squares kernel: the same sum truncated to `q`
//!   harmonics. For `q = n` it coincides with `tm_eval`; for `q < n` the
//!   weighted sum of samples is the discrete least-squares optimum of
//!   order `q`.
//! * [`ts_eval`] — interpolation spline kernel: each bare cosine of `tm`
//!   is replaced by a ratio `C_k(t)/H_k` that folds in the aliased
//!   harmonics `m*N + k` and `m*N - k`, attenuated by [`sigma_factor`].
//!   Larger smoothness `r` damps high harmonics harder; `r = 1` on a Type0
//!   grid tends to the piecewise-linear hat function as the truncation
//!   grows.
//! * [`ts_ls_eval`] — the spline kernel truncated to `q` harmonic ratios.
//!   At the grid nodes it takes exactly the same values as `phi_ls_eval`.
//!
//! All evaluations are stateless and safe to call concurrently.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::grids::{GridKind, UniformGrid};

/// Guard below which a spline denominator H_k is reported as degenerate.
const H_DEGENERACY_GUARD: f64 = 1e-12;

/// Smoothness and truncation parameters of the spline kernels.
///
/// `r >= 1` is the smoothness exponent (the attenuation factors carry the
/// power `1 + r`). `truncation` is the number of terms `m = 1..=M` kept
/// from the aliased-harmonic series; numerator and denominator series are
/// truncated at the same `M`, which keeps the node values of the spline
/// kernels exact for every `M`, not just in the limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SplineShape {
    r: u32,
    truncation: usize,
}

impl SplineShape {
    /// Validated constructor; both parameters must be at least 1.
    pub fn new(r: u32, truncation: usize) -> Result<Self> {
        if r < 1 || truncation < 1 {
            return Err(Error::InvalidSplineShape { r, truncation });
        }
        Ok(Self { r, truncation })
    }

    /// Smoothness parameter `r`.
    pub fn r(&self) -> u32 {
        self.r
    }

    /// Series truncation order `M`.
    pub fn truncation(&self) -> usize {
        self.truncation
    }

    /// Exponent `1 + r` applied to the attenuation base.
    fn exponent(&self) -> i32 {
        (1 + self.r) as i32
    }
}

impl Default for SplineShape {
    /// `r = 1`, truncation 1000. The series tail decays like `M^-r`, so the
    /// default is generous for node-exact uses and adequate for plots.
    fn default() -> Self {
        Self { r: 1, truncation: 1000 }
    }
}

/// Number of harmonics retained in a least-squares basis.
///
/// Valid budgets satisfy `q <= n` where `n` is the grid's harmonic order;
/// `q = 0` degenerates to the constant mean fit and `q = n` reproduces the
/// corresponding interpolation basis. The bound is checked wherever a
/// budget meets a grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HarmonicBudget(pub usize);

impl HarmonicBudget {
    /// The full budget `q = n` for a grid, i.e. interpolation.
    pub fn full(grid: &UniformGrid) -> Self {
        HarmonicBudget(grid.harmonic_order())
    }
}

pub(crate) fn check_budget(grid: &UniformGrid, q: HarmonicBudget) -> Result<()> {
    let n = grid.harmonic_order();
    if q.0 > n {
        return Err(Error::BudgetTooLarge { q: q.0, n });
    }
    Ok(())
}

/// Interpolation kernel `tm_k` at angle `t` (1-based node index `k`).
///
/// 2pi-periodic; cardinal on the grid nodes.
pub fn tm_eval(grid: &UniformGrid, k: usize, t: f64) -> Result<f64> {
    let idx = grid.checked_index(k)?;
    let theta = t - grid.nodes()[idx];
    Ok(dirichlet_sum(grid.n_nodes(), grid.harmonic_order(), theta))
}

/// Least-squares kernel `phi_{j,q}` at angle `t`.
///
/// Truncation of [`tm_eval`] to `q` harmonics; identical to it for `q = n`.
pub fn phi_ls_eval(grid: &UniformGrid, j: usize, q: HarmonicBudget, t: f64) -> Result<f64> {
    check_budget(grid, q)?;
    let idx = grid.checked_index(j)?;
    let theta = t - grid.nodes()[idx];
    Ok(dirichlet_sum(grid.n_nodes(), q.0, theta))
}

/// `(1/N) * (1 + 2 * sum_{k=1}^{order} cos(k*theta))`.
fn dirichlet_sum(n_nodes: usize, order: usize, theta: f64) -> f64 {
    let mut acc = 0.0;
    for k in 1..=order {
        acc += (k as f64 * theta).cos();
    }
    (1.0 + 2.0 * acc) / n_nodes as f64
}

/// Attenuation factor `sigma_k(r, N) = [sin(pi*k/N) / k]^(1+r)`.
///
/// The exponent is applied as an integer power: for `k > N` the base may be
/// negative, and odd exponents keep its sign.
///
/// Panics when `k < 1`, `r < 1`, or `n_nodes` is even or below 3.
pub fn sigma_factor(k: usize, r: u32, n_nodes: usize) -> f64 {
    assert!(k >= 1, "harmonic index must be at least 1");
    assert!(r >= 1, "smoothness parameter must be at least 1");
    assert!(
        n_nodes >= 3 && n_nodes % 2 == 1,
        "grid size must be an odd integer >= 3"
    );
    let base = (PI * k as f64 / n_nodes as f64).sin() / k as f64;
    base.powi((1 + r) as i32)
}

/// Numerator series `C_k` of the spline kernel at angle `t`, with
/// `theta = t - t_j` and `l` the grid-kind tag:
///
/// `sigma_k cos(k*theta) + sum_{m=1}^{M} (-1)^(m*l) [sigma_{mN+k}
/// cos((mN+k)*theta) + sigma_{mN-k} cos((mN-k)*theta)]`
pub fn series_c(grid: &UniformGrid, k: usize, shape: &SplineShape, j: usize, t: f64) -> Result<f64> {
    check_harmonic(grid.harmonic_order(), k)?;
    let idx = grid.checked_index(j)?;
    let theta = t - grid.nodes()[idx];
    let rot = phase_rotations(grid.n_nodes(), shape.truncation(), theta);
    Ok(c_at_phase(grid.kind(), grid.n_nodes(), k, shape, theta, &rot))
}

/// Denominator constant `H_k` of the spline kernel:
///
/// `sigma_k + sum_{m=1}^{M} (-1)^(m*l) [sigma_{mN+k} + sigma_{mN-k}]`.
///
/// Fails with [`Error::DegenerateDenominator`] when `|H_k| < 1e-12`.
pub fn series_h(kind: GridKind, k: usize, shape: &SplineShape, n_nodes: usize) -> Result<f64> {
    if n_nodes < 3 || n_nodes % 2 == 0 {
        return Err(Error::EvenOrTooSmallN(n_nodes));
    }
    check_harmonic((n_nodes - 1) / 2, k)?;
    let h = h_at_zero_phase(kind, n_nodes, k, shape);
    if h.abs() < H_DEGENERACY_GUARD {
        return Err(Error::DegenerateDenominator { k, value: h });
    }
    Ok(h)
}

/// Interpolation spline kernel `ts_j` at angle `t`:
///
/// `(1/N) * (1 + 2 * sum_{k=1}^{n} C_k(t)/H_k)`.
///
/// Cardinal on the grid nodes for every truncation order, because the
/// numerator series collapses onto the denominator there.
pub fn ts_eval(grid: &UniformGrid, j: usize, shape: &SplineShape, t: f64) -> Result<f64> {
    let denominators = spline_denominators(grid.kind(), grid.n_nodes(), shape, grid.harmonic_order())?;
    let idx = grid.checked_index(j)?;
    Ok(spline_eval_with_denominators(grid, idx, shape, t, &denominators))
}

/// Least-squares spline kernel `ts_{j,q}` at angle `t`:
///
/// `(1/N) * (1 + 2 * sum_{k=1}^{q} C_k(t)/H_k)`.
///
/// At the grid nodes it equals [`phi_ls_eval`] exactly; for `q = n` it is
/// [`ts_eval`].
pub fn ts_ls_eval(
    grid: &UniformGrid,
    j: usize,
    q: HarmonicBudget,
    shape: &SplineShape,
    t: f64,
) -> Result<f64> {
    check_budget(grid, q)?;
    let denominators = spline_denominators(grid.kind(), grid.n_nodes(), shape, q.0)?;
    let idx = grid.checked_index(j)?;
    Ok(spline_eval_with_denominators(grid, idx, shape, t, &denominators))
}

fn check_harmonic(order: usize, k: usize) -> Result<()> {
    if k < 1 || k > order {
        return Err(Error::IndexOutOfRange { index: k, max: order });
    }
    Ok(())
}

/// Series sign `(-1)^(m*l)`: Type0 terms all add, Type1 terms alternate.
fn series_sign(kind: GridKind, m: usize) -> f64 {
    match kind {
        GridKind::Type0 => 1.0,
        GridKind::Type1 => {
            if m % 2 == 0 {
                1.0
            } else {
                -1.0
            }
        }
    }
}

/// `sin` and `cos` of `m*N*theta` for `m = 1..=M`, shared across harmonics.
fn phase_rotations(n_nodes: usize, truncation: usize, theta: f64) -> Vec<(f64, f64)> {
    (1..=truncation)
        .map(|m| ((m * n_nodes) as f64 * theta).sin_cos())
        .collect()
}

/// Attenuation pair `(sigma_{mN+k}, sigma_{mN-k})`, computed through the
/// reflection identity `sin(pi*(mN +- k)/N) = +-(-1)^m sin(pi*k/N)` so the
/// sine of the fundamental frequency is evaluated once per harmonic.
fn sigma_pair(sin_k: f64, m: usize, k: usize, n_nodes: usize, exponent: i32) -> (f64, f64) {
    let up = (m * n_nodes + k) as f64;
    let down = (m * n_nodes - k) as f64;
    let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
    let sigma_up = (sign * sin_k / up).powi(exponent);
    let sigma_down = (-sign * sin_k / down).powi(exponent);
    (sigma_up, sigma_down)
}

/// Numerator series at phase `theta = t - t_j`, given precomputed rotations.
///
/// The aliased cosines are expanded as
/// `cos((mN +- k)*theta) = cos(mN*theta)cos(k*theta) -+ sin(mN*theta)sin(k*theta)`,
/// and the terms are accumulated in exactly the same grouping as
/// [`h_at_zero_phase`]: at `theta = 0` the two are bitwise identical, which
/// is what makes the spline kernels cardinal for every truncation order.
fn c_at_phase(
    kind: GridKind,
    n_nodes: usize,
    k: usize,
    shape: &SplineShape,
    theta: f64,
    rotations: &[(f64, f64)],
) -> f64 {
    let exponent = shape.exponent();
    let sin_k = (PI * k as f64 / n_nodes as f64).sin();
    let sigma_k = (sin_k / k as f64).powi(exponent);
    let (sin_kt, cos_kt) = (k as f64 * theta).sin_cos();
    let base = sigma_k * cos_kt;
    let mut tail = 0.0;
    for (m, &(sin_m, cos_m)) in rotations.iter().enumerate() {
        let m = m + 1;
        let (sigma_up, sigma_down) = sigma_pair(sin_k, m, k, n_nodes, exponent);
        let term = (sigma_up + sigma_down) * (cos_m * cos_kt) - (sigma_up - sigma_down) * (sin_m * sin_kt);
        tail += series_sign(kind, m) * term;
    }
    base + tail
}

/// Denominator constant, accumulated in the same order as [`c_at_phase`].
fn h_at_zero_phase(kind: GridKind, n_nodes: usize, k: usize, shape: &SplineShape) -> f64 {
    let exponent = shape.exponent();
    let sin_k = (PI * k as f64 / n_nodes as f64).sin();
    let sigma_k = (sin_k / k as f64).powi(exponent);
    let mut tail = 0.0;
    for m in 1..=shape.truncation() {
        let (sigma_up, sigma_down) = sigma_pair(sin_k, m, k, n_nodes, exponent);
        tail += series_sign(kind, m) * (sigma_up + sigma_down);
    }
    sigma_k + tail
}

/// Denominators `H_1..=H_kmax`, each checked against the degeneracy guard.
pub(crate) fn spline_denominators(
    kind: GridKind,
    n_nodes: usize,
    shape: &SplineShape,
    k_max: usize,
) -> Result<Vec<f64>> {
    (1..=k_max)
        .map(|k| {
            let h = h_at_zero_phase(kind, n_nodes, k, shape);
            if h.abs() < H_DEGENERACY_GUARD {
                Err(Error::DegenerateDenominator { k, value: h })
            } else {
                Ok(h)
            }
        })
        .collect()
}

/// Spline kernel value with precomputed denominators; `node_idx` is 0-based
/// and the number of harmonic ratios is `denominators.len()`.
pub(crate) fn spline_eval_with_denominators(
    grid: &UniformGrid,
    node_idx: usize,
    shape: &SplineShape,
    t: f64,
    denominators: &[f64],
) -> f64 {
    let theta = t - grid.nodes()[node_idx];
    let rot = phase_rotations(grid.n_nodes(), shape.truncation(), theta);
    let mut acc = 0.0;
    for (k, &h) in denominators.iter().enumerate() {
        acc += c_at_phase(grid.kind(), grid.n_nodes(), k + 1, shape, theta, &rot) / h;
    }
    (1.0 + 2.0 * acc) / grid.n_nodes() as f64
}
