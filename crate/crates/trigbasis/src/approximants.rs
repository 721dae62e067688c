//! Evaluable interpolants and least-squares approximants.
//!
//! Every fit built here is linear in the sampled function values: the
//! approximant is `sum_j f_j * b_j(t)` where `b_j` is one of the four
//! cardinal families from [`kernels`](crate::kernels). The module also
//! carries the discrete Fourier representation: coefficients computed by
//! sums over the grid nodes, whose partial sums of order `q` are exactly
//! the discrete least-squares optima reproduced by the LS kernels.

use crate::error::{Error, Result};
use crate::grids::{wrap_angle, UniformGrid};
use crate::kernels::{
    check_budget, phi_ls_eval, spline_denominators, spline_eval_with_denominators, tm_eval,
    ts_eval, ts_ls_eval, HarmonicBudget, SplineShape,
};

/// Function values attached to the nodes of a grid (`values[j-1] = f(t_j)`).
#[derive(Debug, Clone, PartialEq)]
pub struct SampleSet {
    grid: UniformGrid,
    values: Vec<f64>,
}

impl SampleSet {
    /// Wrap a value vector; its length must equal the grid's node count and
    /// every entry must be finite.
    pub fn new(grid: UniformGrid, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.n_nodes() {
            return Err(Error::SampleCountMismatch {
                expected: grid.n_nodes(),
                got: values.len(),
            });
        }
        if let Some(&bad) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::NonFiniteInput(bad));
        }
        Ok(Self { grid, values })
    }

    /// Sample a function at the grid nodes.
    pub fn from_fn(grid: UniformGrid, mut f: impl FnMut(f64) -> f64) -> Result<Self> {
        let values: Vec<f64> = grid.nodes().iter().map(|&t| f(t)).collect();
        Self::new(grid, values)
    }

    pub fn grid(&self) -> &UniformGrid {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// The value at node `j` (1-based).
    pub fn value(&self, j: usize) -> f64 {
        self.values[j - 1]
    }

    /// Discrete Fourier coefficients over the grid's own nodes:
    ///
    /// `a_0 = (2/N) sum_j f_j`, `a_k = (2/N) sum_j f_j cos(k t_j)`,
    /// `b_k = (2/N) sum_j f_j sin(k t_j)` for `k = 1..=n`.
    pub fn fourier_coeffs(&self) -> FourierCoeffs {
        let n = self.grid.harmonic_order();
        let scale = 2.0 / self.grid.n_nodes() as f64;
        let a0 = scale * self.values.iter().sum::<f64>();
        let mut a = Vec::with_capacity(n);
        let mut b = Vec::with_capacity(n);
        for k in 1..=n {
            let mut ca = 0.0;
            let mut cb = 0.0;
            for (&f, &t) in self.values.iter().zip(self.grid.nodes()) {
                let (s, c) = (k as f64 * t).sin_cos();
                ca += f * c;
                cb += f * s;
            }
            a.push(scale * ca);
            b.push(scale * cb);
        }
        FourierCoeffs { a0, a, b }
    }
}

/// Coefficients of a finite Fourier representation
/// `a0/2 + sum_k (a_k cos kt + b_k sin kt)`.
///
/// [`SampleSet::fourier_coeffs`] fills all `n = (N-1)/2` harmonics;
/// [`ls_oracle`](crate::validation::ls_oracle) returns vectors truncated to
/// the requested budget.
#[derive(Debug, Clone, PartialEq)]
pub struct FourierCoeffs {
    pub a0: f64,
    pub a: Vec<f64>,
    pub b: Vec<f64>,
}

impl FourierCoeffs {
    /// Number of harmonics carried (lengths of `a` and `b`).
    pub fn order(&self) -> usize {
        debug_assert_eq!(self.a.len(), self.b.len());
        self.a.len()
    }

    /// Partial sum `a0/2 + sum_{k=1}^{q} (a_k cos kt + b_k sin kt)`.
    pub fn partial_sum(&self, q: HarmonicBudget, t: f64) -> Result<f64> {
        if q.0 > self.order() {
            return Err(Error::BudgetTooLarge {
                q: q.0,
                n: self.order(),
            });
        }
        let mut acc = 0.5 * self.a0;
        for k in 1..=q.0 {
            let (s, c) = (k as f64 * t).sin_cos();
            acc += self.a[k - 1] * c + self.b[k - 1] * s;
        }
        Ok(acc)
    }
}

/// Which cardinal family an approximant is built on.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BasisSpec {
    /// Full-order trigonometric interpolation.
    InterpPoly,
    /// Trigonometric spline interpolation.
    InterpSpline(SplineShape),
    /// Least-squares polynomial of order `q`.
    LsPoly(HarmonicBudget),
    /// Spline carrying the LS polynomial's node values.
    LsSpline(HarmonicBudget, SplineShape),
}

/// The `j`-th basis function of a family, evaluated at `t` (1-based `j`).
pub fn basis_eval(grid: &UniformGrid, basis: &BasisSpec, j: usize, t: f64) -> Result<f64> {
    match basis {
        BasisSpec::InterpPoly => tm_eval(grid, j, t),
        BasisSpec::InterpSpline(shape) => ts_eval(grid, j, shape, t),
        BasisSpec::LsPoly(q) => phi_ls_eval(grid, j, *q, t),
        BasisSpec::LsSpline(q, shape) => ts_ls_eval(grid, j, *q, shape, t),
    }
}

/// A sample set paired with a basis family; evaluation is `sum_j f_j b_j(t)`
/// and therefore linear in the samples.
#[derive(Debug, Clone)]
pub struct Approximant {
    samples: SampleSet,
    basis: BasisSpec,
    // spline denominators, computed once at build time
    denominators: Option<Vec<f64>>,
}

impl Approximant {
    /// Validate the basis against the grid and precompute what evaluation
    /// needs. Spline denominators are checked here, so a degenerate
    /// parameter combination fails at build time rather than mid-plot.
    pub fn build(samples: SampleSet, basis: BasisSpec) -> Result<Self> {
        let grid = samples.grid();
        let denominators = match &basis {
            BasisSpec::InterpPoly => None,
            BasisSpec::LsPoly(q) => {
                check_budget(grid, *q)?;
                None
            }
            BasisSpec::InterpSpline(shape) => Some(spline_denominators(
                grid.kind(),
                grid.n_nodes(),
                shape,
                grid.harmonic_order(),
            )?),
            BasisSpec::LsSpline(q, shape) => {
                check_budget(grid, *q)?;
                Some(spline_denominators(grid.kind(), grid.n_nodes(), shape, q.0)?)
            }
        };
        Ok(Self {
            samples,
            basis,
            denominators,
        })
    }

    pub fn samples(&self) -> &SampleSet {
        &self.samples
    }

    pub fn basis(&self) -> &BasisSpec {
        &self.basis
    }

    /// Evaluate at any finite angle; the argument is wrapped to `[0, 2pi)`.
    pub fn evaluate(&self, t: f64) -> Result<f64> {
        let t = wrap_angle(t)?;
        let grid = self.samples.grid();
        let values = self.samples.values();
        let mut acc = 0.0;
        match (&self.basis, &self.denominators) {
            (BasisSpec::InterpSpline(shape), Some(h)) | (BasisSpec::LsSpline(_, shape), Some(h)) => {
                for (idx, &f) in values.iter().enumerate() {
                    acc += f * spline_eval_with_denominators(grid, idx, shape, t, h);
                }
            }
            _ => {
                for (idx, &f) in values.iter().enumerate() {
                    acc += f * basis_eval(grid, &self.basis, idx + 1, t)?;
                }
            }
        }
        Ok(acc)
    }

    /// Evaluate at many angles, preserving input order.
    pub fn evaluate_many(&self, ts: &[f64]) -> Result<Vec<f64>> {
        ts.iter().map(|&t| self.evaluate(t)).collect()
    }

    /// Discrete sum of squared residuals `sum_j (f_j - approx(t_j))^2`
    /// against a sample set on the same grid.
    pub fn residual_sse(&self, samples: &SampleSet) -> Result<f64> {
        if !samples.grid().same_layout(self.samples.grid()) {
            return Err(Error::GridMismatch);
        }
        let mut sse = 0.0;
        for (j, &t) in samples.grid().nodes().iter().enumerate() {
            let r = samples.values()[j] - self.evaluate(t)?;
            sse += r * r;
        }
        Ok(sse)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grids::GridKind;
    use std::f64::consts::TAU;

    fn grid9(kind: GridKind) -> UniformGrid {
        UniformGrid::new(kind, 9).unwrap()
    }

    #[test]
    fn sample_set_validates_inputs() {
        let g = grid9(GridKind::Type0);
        assert_eq!(
            SampleSet::new(g.clone(), vec![0.0; 8]),
            Err(Error::SampleCountMismatch { expected: 9, got: 8 })
        );
        let mut v = vec![0.0; 9];
        v[4] = f64::NAN;
        assert!(matches!(
            SampleSet::new(g, v),
            Err(Error::NonFiniteInput(_))
        ));
    }

    #[test]
    fn constant_samples_reproduce_the_constant() {
        for kind in [GridKind::Type0, GridKind::Type1] {
            let g = grid9(kind);
            let s = SampleSet::from_fn(g, |_| 1.0).unwrap();
            let a = Approximant::build(s, BasisSpec::InterpPoly).unwrap();
            for i in 0..40 {
                let t = TAU * i as f64 / 40.0;
                assert!((a.evaluate(t).unwrap() - 1.0).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn in_span_harmonic_is_reproduced_everywhere() {
        let g = grid9(GridKind::Type0);
        let s = SampleSet::from_fn(g, |t| (2.0 * t).sin()).unwrap();
        let a = Approximant::build(s, BasisSpec::InterpPoly).unwrap();
        for i in 0..200 {
            let t = TAU * i as f64 / 200.0;
            assert!((a.evaluate(t).unwrap() - (2.0 * t).sin()).abs() < 1e-12);
        }
    }

    #[test]
    fn full_budget_ls_equals_interpolation() {
        let g = grid9(GridKind::Type1);
        let vals: Vec<f64> = (0..9).map(|i| ((i * i) as f64).sin()).collect();
        let s = SampleSet::new(g.clone(), vals).unwrap();
        let interp = Approximant::build(s.clone(), BasisSpec::InterpPoly).unwrap();
        let ls = Approximant::build(s, BasisSpec::LsPoly(HarmonicBudget(4))).unwrap();
        for i in 0..100 {
            let t = TAU * i as f64 / 100.0 + 0.003;
            let a = interp.evaluate(t).unwrap();
            let b = ls.evaluate(t).unwrap();
            assert!((a - b).abs() < 1e-11);
        }
    }

    #[test]
    fn interpolants_hit_their_samples() {
        let g = grid9(GridKind::Type0);
        let vals: Vec<f64> = (0..9).map(|i| (i as f64 * 0.7).cos()).collect();
        let s = SampleSet::new(g.clone(), vals.clone()).unwrap();
        let shape = SplineShape::new(2, 60).unwrap();
        for basis in [BasisSpec::InterpPoly, BasisSpec::InterpSpline(shape)] {
            let a = Approximant::build(s.clone(), basis).unwrap();
            for j in 1..=9usize {
                let v = a.evaluate(g.node(j)).unwrap();
                assert!((v - vals[j - 1]).abs() < 1e-11, "{basis:?} j={j}");
            }
        }
    }

    #[test]
    fn zero_function_evaluates_to_zero() {
        let g = grid9(GridKind::Type0);
        let s = SampleSet::from_fn(g, |_| 0.0).unwrap();
        let shape = SplineShape::new(1, 20).unwrap();
        let a = Approximant::build(s, BasisSpec::LsSpline(HarmonicBudget(2), shape)).unwrap();
        for t in [0.0, 0.5, 3.0, 6.0] {
            assert_eq!(a.evaluate(t).unwrap(), 0.0);
        }
    }

    #[test]
    fn evaluate_rejects_non_finite() {
        let g = grid9(GridKind::Type0);
        let s = SampleSet::from_fn(g, f64::sin).unwrap();
        let a = Approximant::build(s, BasisSpec::InterpPoly).unwrap();
        assert!(matches!(
            a.evaluate(f64::NAN),
            Err(Error::NonFiniteInput(_))
        ));
    }

    #[test]
    fn build_rejects_excess_budget() {
        let g = grid9(GridKind::Type0);
        let s = SampleSet::from_fn(g, f64::sin).unwrap();
        assert!(matches!(
            Approximant::build(s, BasisSpec::LsPoly(HarmonicBudget(5))),
            Err(Error::BudgetTooLarge { q: 5, n: 4 })
        ));
    }

    #[test]
    fn fourier_of_constant() {
        let g = grid9(GridKind::Type0);
        let s = SampleSet::from_fn(g, |_| 1.0).unwrap();
        let c = s.fourier_coeffs();
        assert!((c.a0 - 2.0).abs() < 1e-13);
        for k in 0..4 {
            assert!(c.a[k].abs() < 1e-13);
            assert!(c.b[k].abs() < 1e-13);
        }
    }

    #[test]
    fn fourier_of_pure_harmonics() {
        let g = grid9(GridKind::Type0);
        let s = SampleSet::from_fn(g, f64::sin).unwrap();
        let c = s.fourier_coeffs();
        assert!((c.b[0] - 1.0).abs() < 1e-12);
        assert!(c.a0.abs() < 1e-12);
        for k in 0..4 {
            assert!(c.a[k].abs() < 1e-12);
            if k > 0 {
                assert!(c.b[k].abs() < 1e-12);
            }
        }

        let g = grid9(GridKind::Type1);
        let s = SampleSet::from_fn(g, |t| (2.0 * t).cos()).unwrap();
        let c = s.fourier_coeffs();
        assert!((c.a[1] - 1.0).abs() < 1e-12);
        assert!(c.a0.abs() < 1e-12);
        assert!(c.a[0].abs() < 1e-12);
        assert!(c.a[2].abs() < 1e-12);
        for k in 0..4 {
            assert!(c.b[k].abs() < 1e-12);
        }
    }

    #[test]
    fn partial_sum_of_constant_passes_through() {
        let g = grid9(GridKind::Type1);
        let s = SampleSet::from_fn(g, |_| 2.5).unwrap();
        let c = s.fourier_coeffs();
        for q in 0..=4usize {
            for t in [0.1, 2.0, 5.5] {
                assert!((c.partial_sum(HarmonicBudget(q), t).unwrap() - 2.5).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn full_partial_sum_interpolates() {
        let g = grid9(GridKind::Type0);
        let vals: Vec<f64> = (0..9).map(|i| ((i as f64) * 1.3).sin() + 0.4).collect();
        let s = SampleSet::new(g.clone(), vals.clone()).unwrap();
        let c = s.fourier_coeffs();
        for j in 1..=9usize {
            let v = c.partial_sum(HarmonicBudget(4), g.node(j)).unwrap();
            assert!((v - vals[j - 1]).abs() < 1e-11);
        }
    }

    #[test]
    fn ls_approximant_matches_partial_sum_everywhere() {
        for kind in [GridKind::Type0, GridKind::Type1] {
            let g = grid9(kind);
            let vals: Vec<f64> = (0..9).map(|i| if i % 2 == 0 { 1.0 } else { -0.5 }).collect();
            let s = SampleSet::new(g, vals).unwrap();
            let c = s.fourier_coeffs();
            for q in 0..=4usize {
                let a = Approximant::build(s.clone(), BasisSpec::LsPoly(HarmonicBudget(q))).unwrap();
                for i in 0..60 {
                    let t = TAU * i as f64 / 60.0;
                    let via_kernel = a.evaluate(t).unwrap();
                    let via_sum = c.partial_sum(HarmonicBudget(q), t).unwrap();
                    assert!((via_kernel - via_sum).abs() < 1e-11, "kind={kind:?} q={q}");
                }
            }
        }
    }

    #[test]
    fn interpolation_residual_vanishes() {
        let g = grid9(GridKind::Type0);
        let vals: Vec<f64> = (0..9).map(|i| (i as f64).cos() * 3.0).collect();
        let norm: f64 = vals.iter().map(|v| v * v).sum();
        let s = SampleSet::new(g, vals).unwrap();
        let a = Approximant::build(s.clone(), BasisSpec::InterpPoly).unwrap();
        let sse = a.residual_sse(&s).unwrap();
        assert!(sse <= 1e-20 * norm, "sse = {sse}");
    }

    #[test]
    fn residual_of_zero_samples_is_zero() {
        let g = grid9(GridKind::Type1);
        let s = SampleSet::from_fn(g, |_| 0.0).unwrap();
        let a = Approximant::build(s.clone(), BasisSpec::LsPoly(HarmonicBudget(2))).unwrap();
        assert_eq!(a.residual_sse(&s).unwrap(), 0.0);
    }

    #[test]
    fn residual_demands_matching_grids() {
        let g0 = grid9(GridKind::Type0);
        let g1 = grid9(GridKind::Type1);
        let s0 = SampleSet::from_fn(g0, f64::sin).unwrap();
        let s1 = SampleSet::from_fn(g1, f64::sin).unwrap();
        let a = Approximant::build(s0, BasisSpec::InterpPoly).unwrap();
        assert_eq!(a.residual_sse(&s1), Err(Error::GridMismatch));

        let g11 = UniformGrid::new(GridKind::Type0, 11).unwrap();
        let s11 = SampleSet::from_fn(g11, f64::sin).unwrap();
        assert_eq!(a.residual_sse(&s11), Err(Error::GridMismatch));
    }

    #[test]
    fn ls_spline_nodes_coincide_with_ls_poly() {
        let g = grid9(GridKind::Type1);
        let vals: Vec<f64> = (0..9).map(|i| (i as f64 * 2.1).sin() - 0.3).collect();
        let s = SampleSet::new(g.clone(), vals).unwrap();
        let shape = SplineShape::new(1, 40).unwrap();
        for q in [1usize, 2, 3] {
            let poly = Approximant::build(s.clone(), BasisSpec::LsPoly(HarmonicBudget(q))).unwrap();
            let spline =
                Approximant::build(s.clone(), BasisSpec::LsSpline(HarmonicBudget(q), shape))
                    .unwrap();
            for i in 1..=9usize {
                let t = g.node(i);
                let a = poly.evaluate(t).unwrap();
                let b = spline.evaluate(t).unwrap();
                assert!((a - b).abs() < 1e-11, "q={q} i={i}");
            }
        }
    }
}
