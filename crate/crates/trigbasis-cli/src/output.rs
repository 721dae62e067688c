//! Plot-data rendering: column tables as CSV or JSON, key/value reports,
//! and the output abscissae.
//!
//! Floating-point values are rendered with 17 significant digits, which
//! round-trips f64 exactly; two runs with the same configuration produce
//! byte-identical output.

use std::f64::consts::TAU;

use serde_json::{Map, Number, Value};
use trigbasis::{GridKind, UniformGrid};

use crate::args::OutputFormat;

/// 17 significant digits, scientific notation.
pub fn format_float(x: f64) -> String {
    format!("{x:.16e}")
}

#[derive(Debug, Clone)]
pub enum Column {
    Int(Vec<usize>),
    Float(Vec<f64>),
}

impl Column {
    fn len(&self) -> usize {
        match self {
            Column::Int(v) => v.len(),
            Column::Float(v) => v.len(),
        }
    }

    fn cell(&self, row: usize) -> String {
        match self {
            Column::Int(v) => v[row].to_string(),
            Column::Float(v) => format_float(v[row]),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Column::Int(v) => Value::Array(v.iter().map(|&x| Value::from(x)).collect()),
            Column::Float(v) => Value::Array(
                v.iter()
                    .map(|&x| Value::Number(Number::from_f64(x).expect("finite output value")))
                    .collect(),
            ),
        }
    }
}

/// Named columns of equal length; the emitted data stream.
#[derive(Debug, Clone)]
pub struct Table {
    columns: Vec<(String, Column)>,
}

impl Table {
    pub fn new(columns: Vec<(String, Column)>) -> Self {
        debug_assert!(columns.windows(2).all(|w| w[0].1.len() == w[1].1.len()));
        Self { columns }
    }

    pub fn n_rows(&self) -> usize {
        self.columns.first().map_or(0, |(_, c)| c.len())
    }

    pub fn columns(&self) -> &[(String, Column)] {
        &self.columns
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let header: Vec<&str> = self.columns.iter().map(|(n, _)| n.as_str()).collect();
        out.push_str(&header.join(","));
        out.push('\n');
        for row in 0..self.n_rows() {
            let cells: Vec<String> = self.columns.iter().map(|(_, c)| c.cell(row)).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    /// Same arrays as the CSV, keyed by column name (insertion order kept).
    pub fn to_json(&self) -> String {
        let mut map = Map::new();
        for (name, col) in &self.columns {
            map.insert(name.clone(), col.to_json());
        }
        let mut s = serde_json::to_string_pretty(&Value::Object(map)).expect("table serializes");
        s.push('\n');
        s
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Csv => self.to_csv(),
            OutputFormat::Json => self.to_json(),
        }
    }
}

/// Key/value summary printed alongside the data stream.
#[derive(Debug, Clone, Default)]
pub struct Report {
    lines: Vec<(String, String)>,
}

impl Report {
    pub fn push(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.lines.push((key.into(), value.into()));
    }

    pub fn push_float(&mut self, key: impl Into<String>, value: f64) {
        self.push(key, format_float(value));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.lines
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.lines {
            out.push_str(k);
            out.push_str(" = ");
            out.push_str(v);
            out.push('\n');
        }
        out
    }
}

/// `points` equally spaced abscissae spanning `[0, 2pi]`.
///
/// Whenever an abscissa coincides with a grid node in exact arithmetic
/// (for Type0 this happens when `points - 1` is a multiple of `N`), the
/// node's own floating-point value is emitted, so cardinal patterns show
/// up exactly in the data rows.
pub fn curve_abscissae(grid: &UniformGrid, points: usize) -> Vec<f64> {
    assert!(points >= 2, "need at least 2 output points");
    let steps = points - 1;
    (0..points)
        .map(|i| snapped_node(grid, i, steps).unwrap_or(TAU * (i as f64 / steps as f64)))
        .collect()
}

/// The node value when output index `i` of `steps + 1` points lands on one.
fn snapped_node(grid: &UniformGrid, i: usize, steps: usize) -> Option<f64> {
    let n = grid.n_nodes();
    match grid.kind() {
        // i/steps = (j - 1)/N
        GridKind::Type0 => {
            let num = i * n;
            if num % steps != 0 {
                return None;
            }
            let d = num / steps;
            (d < n).then(|| grid.node(d + 1))
        }
        // i/steps = (2j - 1)/(2N)
        GridKind::Type1 => {
            let num = i * 2 * n;
            if num % steps != 0 {
                return None;
            }
            let d = num / steps;
            (d % 2 == 1 && d < 2 * n).then(|| grid.node((d + 1) / 2))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_format_round_trips() {
        for &x in &[0.5, -1.0 / 3.0, TAU, 1e-300, -0.0, 123456.789] {
            let s = format_float(x);
            let back: f64 = s.parse().unwrap();
            assert_eq!(back.to_bits(), x.to_bits(), "{s}");
        }
    }

    #[test]
    fn csv_layout() {
        let t = Table::new(vec![
            ("j".into(), Column::Int(vec![1, 2])),
            ("t".into(), Column::Float(vec![0.0, 0.5])),
        ]);
        let csv = t.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("j,t"));
        assert_eq!(lines.next(), Some("1,0.0000000000000000e0"));
        assert_eq!(lines.next(), Some("2,5.0000000000000000e-1"));
        assert_eq!(lines.next(), None);
    }

    #[test]
    fn json_keeps_column_order() {
        let t = Table::new(vec![
            ("t".into(), Column::Float(vec![0.0])),
            ("approx".into(), Column::Float(vec![1.0])),
        ]);
        let json = t.to_json();
        let t_pos = json.find("\"t\"").unwrap();
        let a_pos = json.find("\"approx\"").unwrap();
        assert!(t_pos < a_pos);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["approx"][0], 1.0);
    }

    #[test]
    fn type0_nodes_are_snapped_exactly() {
        let g = UniformGrid::new(GridKind::Type0, 9).unwrap();
        let t = curve_abscissae(&g, 721); // 720 steps, divisible by 9
        for j in 1..=9usize {
            let i = (j - 1) * 720 / 9;
            assert_eq!(t[i].to_bits(), g.node(j).to_bits(), "j={j}");
        }
        assert_eq!(t[0], 0.0);
        assert_eq!(t.len(), 721);
        assert!((t[720] - TAU).abs() < 1e-15);
    }

    #[test]
    fn type1_nodes_are_snapped_when_reachable() {
        let g = UniformGrid::new(GridKind::Type1, 9).unwrap();
        let t = curve_abscissae(&g, 721); // 720 steps, divisible by 2*9
        for j in 1..=9usize {
            let i = (2 * j - 1) * 720 / 18;
            assert_eq!(t[i].to_bits(), g.node(j).to_bits(), "j={j}");
        }
    }

    #[test]
    fn unreachable_grids_are_not_snapped() {
        let g = UniformGrid::new(GridKind::Type0, 7).unwrap();
        let t = curve_abscissae(&g, 101); // 100 steps, not divisible by 7
        for &x in &t[1..100] {
            for j in 1..=7usize {
                assert_ne!(x.to_bits(), g.node(j).to_bits());
            }
        }
        // the origin is still node 1
        assert_eq!(t[0].to_bits(), g.node(1).to_bits());
    }

    #[test]
    fn report_renders_line_per_entry() {
        let mut r = Report::default();
        r.push("basis", "interp-poly");
        r.push_float("node_sse", 0.0);
        assert_eq!(r.render(), "basis = interp-poly\nnode_sse = 0.0000000000000000e0\n");
        assert_eq!(r.get("basis"), Some("interp-poly"));
    }
}
