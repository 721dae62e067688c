//! Uniform grids on the period `[0, 2pi)`.
//!
//! Two families are supported. Writing `h = 2pi/N` for the spacing and
//! using 1-based node indices `j = 1..=N`:
//!
//! * [`GridKind::Type0`]: `t_j = h*(j - 1)`, so the first node sits at 0.
//! * [`GridKind::Type1`]: `t_j = h*(j - 1) + h/2 = pi*(2j - 1)/N`, i.e. every
//!   node is the midpoint of two consecutive Type0 nodes.
//!
//! The node count `N` must be odd and at least 3: the cardinal identity of
//! the trigonometric kernels requires an odd number of nodes, with the
//! harmonic order given by `n = (N - 1)/2`.

use std::f64::consts::{PI, TAU};

use crate::error::{Error, Result};

/// Selector for the two uniform grid families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GridKind {
    /// Nodes at `2pi*(j-1)/N`; the first node is 0.
    Type0,
    /// Nodes at `pi*(2j-1)/N`; offset by half a spacing from Type0.
    Type1,
}

impl GridKind {
    /// Numeric tag (0 or 1) of the family. It doubles as the sign exponent
    /// in the spline series: Type1 series alternate as `(-1)^m`.
    pub fn tag(self) -> u8 {
        match self {
            GridKind::Type0 => 0,
            GridKind::Type1 => 1,
        }
    }

    /// Inverse of [`GridKind::tag`].
    pub fn from_tag(tag: u8) -> Option<Self> {
        match tag {
            0 => Some(GridKind::Type0),
            1 => Some(GridKind::Type1),
            _ => None,
        }
    }
}

/// `N` equally spaced nodes on `[0, 2pi)`, one of the two families above.
///
/// Immutable after construction; freely shareable across threads.
#[derive(Debug, Clone, PartialEq)]
pub struct UniformGrid {
    kind: GridKind,
    nodes: Vec<f64>,
}

impl UniformGrid {
    /// Build a grid of `n_nodes` nodes of the given kind.
    ///
    /// Rejects even or too-small node counts with
    /// [`Error::EvenOrTooSmallN`].
    pub fn new(kind: GridKind, n_nodes: usize) -> Result<Self> {
        if n_nodes < 3 || n_nodes % 2 == 0 {
            return Err(Error::EvenOrTooSmallN(n_nodes));
        }
        let nn = n_nodes as f64;
        let nodes = (1..=n_nodes)
            .map(|j| match kind {
                GridKind::Type0 => TAU * (j - 1) as f64 / nn,
                GridKind::Type1 => PI * (2 * j - 1) as f64 / nn,
            })
            .collect();
        Ok(Self { kind, nodes })
    }

    /// Which family this grid belongs to.
    pub fn kind(&self) -> GridKind {
        self.kind
    }

    /// Number of nodes `N` (odd, >= 3).
    pub fn n_nodes(&self) -> usize {
        self.nodes.len()
    }

    /// Harmonic order `n = (N - 1)/2` of the kernels living on this grid.
    pub fn harmonic_order(&self) -> usize {
        (self.nodes.len() - 1) / 2
    }

    /// Node spacing `h = 2pi/N`.
    pub fn spacing(&self) -> f64 {
        TAU / self.nodes.len() as f64
    }

    /// The `j`-th node, 1-based (`j = 1..=N`).
    ///
    /// Panics when `j` is out of range; use [`UniformGrid::nodes`] for
    /// iteration or [`kernels`](crate::kernels) entry points for checked
    /// access.
    pub fn node(&self, j: usize) -> f64 {
        assert!(
            (1..=self.nodes.len()).contains(&j),
            "node index {j} out of range 1..={}",
            self.nodes.len()
        );
        self.nodes[j - 1]
    }

    /// All nodes in ascending order (0-based slice of 1-based nodes).
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    /// Map a 1-based node index to its 0-based position, or fail.
    pub(crate) fn checked_index(&self, j: usize) -> Result<usize> {
        if (1..=self.nodes.len()).contains(&j) {
            Ok(j - 1)
        } else {
            Err(Error::IndexOutOfRange {
                index: j,
                max: self.nodes.len(),
            })
        }
    }

    /// True when the grids agree structurally (kind and node count).
    pub fn same_layout(&self, other: &UniformGrid) -> bool {
        self.kind == other.kind && self.nodes.len() == other.nodes.len()
    }
}

/// Reduce a finite angle to the canonical period `[0, 2pi)`.
pub fn wrap_angle(t: f64) -> Result<f64> {
    if !t.is_finite() {
        return Err(Error::NonFiniteInput(t));
    }
    let w = t.rem_euclid(TAU);
    // rem_euclid can round up to the modulus itself for tiny negative inputs.
    Ok(if w >= TAU { 0.0 } else { w })
}
