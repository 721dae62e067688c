//! Subcommand implementations. Each returns the data table and a summary
//! report; the binary decides where the two streams go.

use trigbasis::{
    basis_eval, continuous_gram, discrete_gram, Approximant, BasisSpec, GramMatrix, SampleSet,
};

use crate::args::{BasisCmd, FitCmd, GramCmd, GramKind, GridCmd};
use crate::error::{CliError, Result};
use crate::output::{curve_abscissae, Column, Report, Table};

/// Grid nodes as `j,t` rows.
pub fn cmd_grid(cmd: &GridCmd) -> Result<(Table, Report)> {
    let grid = cmd.grid.build()?;
    let table = Table::new(vec![
        ("j".into(), Column::Int((1..=grid.n_nodes()).collect())),
        ("t".into(), Column::Float(grid.nodes().to_vec())),
    ]);
    let mut report = Report::default();
    report.push("kind", grid.kind().tag().to_string());
    report.push("n_nodes", grid.n_nodes().to_string());
    report.push("harmonic_order", grid.harmonic_order().to_string());
    report.push_float("spacing", grid.spacing());
    Ok((table, report))
}

/// Basis-function curves `t,b_j(t),...` for the requested node indices.
pub fn cmd_basis(cmd: &BasisCmd) -> Result<(Table, Report)> {
    let grid = cmd.grid.build()?;
    let spec = cmd.basis.to_spec()?;
    if cmd.points < 2 {
        return Err(CliError::Config("--points must be at least 2".into()));
    }
    let indices: Vec<usize> = match &cmd.indices {
        Some(list) => list.clone(),
        None => (1..=grid.n_nodes()).collect(),
    };
    for &j in &indices {
        if j < 1 || j > grid.n_nodes() {
            return Err(CliError::Config(format!(
                "--indices entry {j} is out of range 1..={}",
                grid.n_nodes()
            )));
        }
    }

    let t = curve_abscissae(&grid, cmd.points);
    let mut columns = vec![("t".to_string(), Column::Float(t.clone()))];
    for &j in &indices {
        let values: Result<Vec<f64>> = t
            .iter()
            .map(|&x| basis_eval(&grid, &spec, j, x).map_err(CliError::from))
            .collect();
        columns.push((format!("b_{j}"), Column::Float(values?)));
    }

    let mut report = Report::default();
    report.push("basis", basis_label(&spec));
    report.push("points", cmd.points.to_string());
    Ok((Table::new(columns), report))
}

/// Fit curve `t,f,approx` plus the error summary.
pub fn cmd_fit(cmd: &FitCmd) -> Result<(Table, Report)> {
    let grid = cmd.grid.build()?;
    let spec = cmd.basis.to_spec()?;
    if cmd.points < 2 {
        return Err(CliError::Config("--points must be at least 2".into()));
    }
    let samples = SampleSet::from_fn(grid.clone(), |t| cmd.func.eval(t))?;
    let approx = Approximant::build(samples.clone(), spec)?;

    let t = curve_abscissae(&grid, cmd.points);
    let f_vals: Vec<f64> = t.iter().map(|&x| cmd.func.eval(x)).collect();
    let approx_vals = approx.evaluate_many(&t)?;

    let node_sse = approx.residual_sse(&samples)?;
    let max_abs_err = f_vals
        .iter()
        .zip(&approx_vals)
        .map(|(f, a)| (f - a).abs())
        .fold(0.0f64, f64::max);

    let mut report = Report::default();
    report.push("func", cmd.func.name());
    report.push("basis", basis_label(&spec));
    report.push_float("node_sse", node_sse);
    report.push_float("max_abs_err", max_abs_err);
    push_coefficients(&mut report, &samples, &spec);

    let table = Table::new(vec![
        ("t".into(), Column::Float(t)),
        ("f".into(), Column::Float(f_vals)),
        ("approx".into(), Column::Float(approx_vals)),
    ]);
    Ok((table, report))
}

/// Gram matrix as `i,j,value` rows plus its deviation from the identity.
pub fn cmd_gram(cmd: &GramCmd) -> Result<(Table, Report)> {
    let grid = cmd.grid.build()?;
    let spec = cmd.basis.to_spec()?;
    let gram: GramMatrix = match cmd.kind {
        GramKind::Discrete => discrete_gram(&grid, &spec)?,
        GramKind::Continuous => {
            if cmd.points < 16 {
                return Err(CliError::Config(
                    "--points must be at least 16 for the continuous product".into(),
                ));
            }
            continuous_gram(&grid, &spec, cmd.points)?
        }
    };

    let n = gram.size();
    let mut is = Vec::with_capacity(n * n);
    let mut js = Vec::with_capacity(n * n);
    let mut values = Vec::with_capacity(n * n);
    for i in 1..=n {
        for j in 1..=n {
            is.push(i);
            js.push(j);
            values.push(gram.entry(i, j));
        }
    }
    let table = Table::new(vec![
        ("i".into(), Column::Int(is)),
        ("j".into(), Column::Int(js)),
        ("value".into(), Column::Float(values)),
    ]);

    let mut report = Report::default();
    report.push("basis", basis_label(&spec));
    report.push(
        "scalar_product",
        match cmd.kind {
            GramKind::Discrete => "discrete",
            GramKind::Continuous => "continuous",
        },
    );
    report.push_float("max_off_diagonal", gram.max_off_diagonal());
    report.push_float("max_diagonal_deviation", gram.max_diagonal_deviation());
    Ok((table, report))
}

fn basis_label(spec: &BasisSpec) -> String {
    match spec {
        BasisSpec::InterpPoly => "interp-poly".into(),
        BasisSpec::InterpSpline(shape) => {
            format!("interp-spline(r={}, trunc={})", shape.r(), shape.truncation())
        }
        BasisSpec::LsPoly(q) => format!("ls-poly(q={})", q.0),
        BasisSpec::LsSpline(q, shape) => format!(
            "ls-spline(q={}, r={}, trunc={})",
            q.0,
            shape.r(),
            shape.truncation()
        ),
    }
}

/// Fourier coefficients are reported for the polynomial bases; the spline
/// families carry node values rather than coefficients.
fn push_coefficients(report: &mut Report, samples: &SampleSet, spec: &BasisSpec) {
    let order = match spec {
        BasisSpec::InterpPoly => samples.grid().harmonic_order(),
        BasisSpec::LsPoly(q) => q.0,
        _ => return,
    };
    let coeffs = samples.fourier_coeffs();
    report.push_float("a0", coeffs.a0);
    for k in 1..=order {
        report.push_float(format!("a_{k}"), coeffs.a[k - 1]);
        report.push_float(format!("b_{k}"), coeffs.b[k - 1]);
    }
}
