//! Independent numerical checks: periodic quadrature, Gram matrices under
//! the continuous and discrete scalar products, a brute-force dense
//! least-squares solver, and the collinearity probe for the r = 1 splines.
//!
//! The solver deliberately ignores the discrete orthogonality of the
//! trigonometric system and goes through dense normal equations, so it can
//! serve as an oracle for the coefficient formulas it is compared against.

use std::f64::consts::TAU;

use crate::approximants::{basis_eval, BasisSpec, FourierCoeffs, SampleSet};
use crate::error::{Error, Result};
use crate::grids::UniformGrid;
use crate::kernels::{check_budget, spline_denominators, spline_eval_with_denominators, HarmonicBudget, SplineShape};

/// Which scalar product a Gram matrix was assembled under.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GramNormalization {
    /// `(N/2pi) * integral over [0, 2pi]` of basis products.
    ContinuousScaled,
    /// Plain sum of basis products over the grid nodes.
    Discrete,
}

/// Symmetric matrix of pairwise basis-function products.
#[derive(Debug, Clone, PartialEq)]
pub struct GramMatrix {
    size: usize,
    entries: Vec<f64>,
    normalization: GramNormalization,
}

impl GramMatrix {
    fn from_rows(size: usize, entries: Vec<f64>, normalization: GramNormalization) -> Self {
        debug_assert_eq!(entries.len(), size * size);
        Self {
            size,
            entries,
            normalization,
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn normalization(&self) -> GramNormalization {
        self.normalization
    }

    /// Entry for basis functions `i` and `j`, both 1-based.
    pub fn entry(&self, i: usize, j: usize) -> f64 {
        assert!(i >= 1 && i <= self.size && j >= 1 && j <= self.size);
        self.entries[(i - 1) * self.size + (j - 1)]
    }

    /// Rows in order, each of length `size`.
    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.entries.chunks(self.size)
    }

    /// Largest off-diagonal magnitude.
    pub fn max_off_diagonal(&self) -> f64 {
        let mut max = 0.0f64;
        for i in 1..=self.size {
            for j in 1..=self.size {
                if i != j {
                    max = max.max(self.entry(i, j).abs());
                }
            }
        }
        max
    }

    /// Largest deviation of a diagonal entry from 1.
    pub fn max_diagonal_deviation(&self) -> f64 {
        (1..=self.size)
            .map(|i| (self.entry(i, i) - 1.0).abs())
            .fold(0.0, f64::max)
    }

    /// Largest entry-wise deviation from the identity matrix.
    pub fn max_identity_deviation(&self) -> f64 {
        self.max_off_diagonal().max(self.max_diagonal_deviation())
    }

    /// Largest asymmetry `|g_ij - g_ji|`.
    pub fn symmetry_defect(&self) -> f64 {
        let mut max = 0.0f64;
        for i in 1..=self.size {
            for j in (i + 1)..=self.size {
                max = max.max((self.entry(i, j) - self.entry(j, i)).abs());
            }
        }
        max
    }
}

/// Equispaced rectangle rule over one period:
/// `(2pi/P) * sum_{i=0}^{P-1} f(2pi*i/P)`.
///
/// Exact (to round-off) for trigonometric polynomials whose order is below
/// `P/2`, which makes it spectrally accurate for smooth periodic
/// integrands. Panics when `num_points < 16`.
pub fn periodic_quadrature(mut f: impl FnMut(f64) -> f64, num_points: usize) -> f64 {
    assert!(num_points >= 16, "need at least 16 quadrature points");
    let p = num_points as f64;
    let mut acc = 0.0;
    for i in 0..num_points {
        acc += f(TAU * (i as f64 / p));
    }
    acc * (TAU / p)
}

/// Table of basis values `values[j-1][p]` at the given abscissae.
fn basis_table(grid: &UniformGrid, basis: &BasisSpec, abscissae: &[f64]) -> Result<Vec<Vec<f64>>> {
    // splines share their denominators across the whole table
    let precomputed = match basis {
        BasisSpec::InterpSpline(shape) => Some((
            *shape,
            spline_denominators(grid.kind(), grid.n_nodes(), shape, grid.harmonic_order())?,
        )),
        BasisSpec::LsSpline(q, shape) => {
            check_budget(grid, *q)?;
            Some((
                *shape,
                spline_denominators(grid.kind(), grid.n_nodes(), shape, q.0)?,
            ))
        }
        _ => None,
    };
    (1..=grid.n_nodes())
        .map(|j| {
            abscissae
                .iter()
                .map(|&t| match &precomputed {
                    Some((shape, h)) => Ok(spline_eval_with_denominators(grid, j - 1, shape, t, h)),
                    None => basis_eval(grid, basis, j, t),
                })
                .collect()
        })
        .collect()
}

/// Gram matrix under the continuous scalar product,
/// `entries[i][j] = (N/2pi) * integral b_i(t) b_j(t) dt`, with the integral
/// taken by [`periodic_quadrature`] on `num_points` abscissae.
///
/// The interpolation polynomials come out as the identity under this
/// normalization; the spline and LS families do not.
pub fn continuous_gram(
    grid: &UniformGrid,
    basis: &BasisSpec,
    num_points: usize,
) -> Result<GramMatrix> {
    assert!(num_points >= 16, "need at least 16 quadrature points");
    let p = num_points as f64;
    let abscissae: Vec<f64> = (0..num_points).map(|i| TAU * (i as f64 / p)).collect();
    let table = basis_table(grid, basis, &abscissae)?;
    let n = grid.n_nodes();
    let scale = n as f64 / TAU * (TAU / p);
    let mut entries = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            let dot: f64 = table[i].iter().zip(&table[j]).map(|(x, y)| x * y).sum();
            entries[i * n + j] = scale * dot;
        }
    }
    Ok(GramMatrix::from_rows(
        n,
        entries,
        GramNormalization::ContinuousScaled,
    ))
}

/// Gram matrix under the discrete scalar product,
/// `entries[i][j] = sum_{k=1}^{N} b_i(t_k) b_j(t_k)`.
pub fn discrete_gram(grid: &UniformGrid, basis: &BasisSpec) -> Result<GramMatrix> {
    let table = basis_table(grid, basis, grid.nodes())?;
    let n = grid.n_nodes();
    let mut entries = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            entries[i * n + j] = table[i].iter().zip(&table[j]).map(|(x, y)| x * y).sum();
        }
    }
    Ok(GramMatrix::from_rows(n, entries, GramNormalization::Discrete))
}

/// Brute-force discrete least squares: solve the `(2q+1) x (2q+1)` normal
/// equations for the basis `{1, cos kt, sin kt}` sampled at the grid nodes
/// and return the optimal coefficients, truncated to order `q`.
pub fn ls_oracle(samples: &SampleSet, q: HarmonicBudget) -> Result<FourierCoeffs> {
    let grid = samples.grid();
    check_budget(grid, q)?;
    let cols = 2 * q.0 + 1;
    let rows = grid.n_nodes();

    // design matrix, row per node
    let mut design = vec![vec![0.0; cols]; rows];
    for (row, &t) in grid.nodes().iter().enumerate() {
        design[row][0] = 1.0;
        for k in 1..=q.0 {
            let (s, c) = (k as f64 * t).sin_cos();
            design[row][2 * k - 1] = c;
            design[row][2 * k] = s;
        }
    }

    // normal equations G c = rhs
    let mut gram = vec![vec![0.0; cols]; cols];
    let mut rhs = vec![0.0; cols];
    for i in 0..cols {
        for j in 0..cols {
            gram[i][j] = (0..rows).map(|r| design[r][i] * design[r][j]).sum();
        }
        rhs[i] = (0..rows).map(|r| design[r][i] * samples.values()[r]).sum();
    }

    let c = solve_dense(gram, rhs)?;
    let a = (1..=q.0).map(|k| c[2 * k - 1]).collect();
    let b = (1..=q.0).map(|k| c[2 * k]).collect();
    Ok(FourierCoeffs { a0: 2.0 * c[0], a, b })
}

/// Gaussian elimination with partial pivoting on a dense square system.
#[allow(clippy::needless_range_loop)]
fn solve_dense(mut matrix: Vec<Vec<f64>>, mut rhs: Vec<f64>) -> Result<Vec<f64>> {
    let n = matrix.len();
    for col in 0..n {
        let pivot_row = (col..n)
            .max_by(|&a, &b| {
                matrix[a][col]
                    .abs()
                    .partial_cmp(&matrix[b][col].abs())
                    .unwrap()
            })
            .unwrap();
        if matrix[pivot_row][col].abs() < 1e-12 {
            return Err(Error::SingularSystem);
        }
        matrix.swap(col, pivot_row);
        rhs.swap(col, pivot_row);
        for row in (col + 1)..n {
            let factor = matrix[row][col] / matrix[col][col];
            for k in col..n {
                matrix[row][k] -= factor * matrix[col][k];
            }
            rhs[row] -= factor * rhs[col];
        }
    }
    let mut solution = vec![0.0; n];
    for row in (0..n).rev() {
        let mut acc = rhs[row];
        for k in (row + 1)..n {
            acc -= matrix[row][k] * solution[k];
        }
        solution[row] = acc / matrix[row][row];
    }
    Ok(solution)
}

/// Three-point collinearity defect of an arbitrary function on `[a, b]`:
/// sample at the quarter, half, and three-quarter points and return
/// `|mid - (first + last)/2|`. Zero for any affine function.
pub fn collinearity_defect_of(mut f: impl FnMut(f64) -> f64, a: f64, b: f64) -> f64 {
    let width = b - a;
    let first = f(a + 0.25 * width);
    let mid = f(a + 0.5 * width);
    let last = f(a + 0.75 * width);
    (mid - 0.5 * (first + last)).abs()
}

/// Collinearity defect of the spline kernel `ts_j` inside one grid interval
/// (`interval` is the 1-based index of the interval's left node; the last
/// interval wraps to the first node lifted by one period).
///
/// For r = 1 the spline tends to a polygon, so the defect tends to zero as
/// the truncation grows; higher r keep visible curvature mid-interval.
pub fn collinearity_defect(
    grid: &UniformGrid,
    j: usize,
    shape: &SplineShape,
    interval: usize,
) -> Result<f64> {
    let node_idx = grid.checked_index(j)?;
    let left = grid.node(grid.checked_index(interval)? + 1);
    let denominators =
        spline_denominators(grid.kind(), grid.n_nodes(), shape, grid.harmonic_order())?;
    Ok(collinearity_defect_of(
        |t| spline_eval_with_denominators(grid, node_idx, shape, t, &denominators),
        left,
        left + grid.spacing(),
    ))
}
