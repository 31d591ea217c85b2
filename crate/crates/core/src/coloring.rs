//! The explicit circular `n/k`-coloring of the interlacing graph.
//!
//! Every 2-stable polygon has a rotation that puts one of its points at `n`
//! while keeping the `m`-th point after `n` at or beyond `m*n/k` for every
//! `m`. Such rotated polygons form the family `L`. A polygon receives the
//! color `i*k mod n` for the smallest `i` with `P` in `rho_i(L)`.

use crate::error::{Error, Result};
use crate::graph::InterlacingGraph;
use crate::polygon::Polygon;

/// Smallest 1-based `j0` such that every cyclic window starting at `j0`
/// carries at least its proportional share:
/// `k * (y[j0] + ... + y[j0+m-1]) >= m * sum(y)` for all `m` in `1..=k`.
///
/// Runs in linear time: with `b_i = k*y_i - sum`, the valid starts are
/// exactly the positions right after a minimum of the prefix sums of `b`.
pub fn find_pivot(y: &[u64]) -> Result<usize> {
    valid_pivots(y).map(|p| p[0])
}

/// All valid pivots in increasing order (never empty for non-empty input).
pub fn valid_pivots(y: &[u64]) -> Result<Vec<usize>> {
    if y.is_empty() {
        return Err(Error::EmptyInput);
    }
    let k = y.len() as i128;
    let z: i128 = y.iter().map(|&v| v as i128).sum();
    let mut prefix = 0i128;
    let mut prefixes = Vec::with_capacity(y.len());
    for &v in y {
        prefixes.push(prefix);
        prefix += k * v as i128 - z;
    }
    let min = *prefixes.iter().min().unwrap();
    Ok(prefixes
        .iter()
        .enumerate()
        .filter(|&(_, &p)| p == min)
        .map(|(t, _)| t + 1)
        .collect())
}

/// A rotation of a polygon into `L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    /// Clockwise rotation `i'` in `0..n`.
    pub rotation_index: u32,
    /// 1-based index (in sorted order) of the point moved to `n`.
    pub pivot: usize,
    pub rotated: Polygon,
}

/// Rotates `polygon` so that a valid pivot lands on `n`. Among all valid
/// pivots the one needing the smallest rotation is chosen, so polygons
/// already in `L` come back unrotated.
pub fn canonical_rotation(polygon: &Polygon) -> Result<CanonicalForm> {
    if polygon.is_empty() || !polygon.is_r_stable(2) {
        return Err(Error::InvalidPolygon {
            n: polygon.n(),
            points: polygon.points().to_vec(),
            reason: "canonical rotation needs a non-empty 2-stable polygon",
        });
    }
    let n = polygon.n();
    let pts = polygon.points();
    let k = pts.len();
    // Window t of the shape starts at point t; its m-th partial sum is the
    // distance from that point to the m-th point after it.
    let gaps: Vec<u64> = polygon.shape().gaps().iter().map(|&g| g as u64).collect();
    let pivots = valid_pivots(&gaps)?;
    let best = pivots
        .into_iter()
        .map(|t| (n - pts[t - 1], t))
        .min()
        .expect("at least one pivot");
    let (rotation_index, pivot) = best;
    let rotated = polygon.rotate(rotation_index as u64);
    debug_assert!(is_in_l(&rotated));
    debug_assert!(pivot <= k);
    Ok(CanonicalForm {
        rotation_index,
        pivot,
        rotated,
    })
}

/// Membership in `L`: 2-stable, contains `n`, and the `m`-th point
/// clockwise after `n` is at least `m*n/k`.
pub fn is_in_l(polygon: &Polygon) -> bool {
    let n = polygon.n() as u64;
    let k = polygon.len() as u64;
    if k == 0 || !polygon.contains(polygon.n()) || !polygon.is_r_stable(2) {
        return false;
    }
    // points are sorted and end with n, so the m-th point after n is points[m-1]
    polygon
        .points()
        .iter()
        .enumerate()
        .all(|(i, &q)| (i as u64 + 1) * n <= k * q as u64)
}

/// Residues modulo `modulus`, indexed by canonical vertex index. A valid
/// circular coloring keeps adjacent residues at cyclic distance at least `gap`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircularColoring {
    pub modulus: u32,
    pub gap: u32,
    pub colors: Vec<u32>,
}

/// Outcome of [`validate_circular`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringReport {
    pub valid: bool,
    pub violations: Vec<(usize, usize)>,
}

/// The rotation color of a single 2-stable polygon: `(i*k mod n, i)`.
pub fn color_of(polygon: &Polygon) -> Result<(u32, u32)> {
    let n = polygon.n();
    let k = polygon.len() as u64;
    for i in 0..n {
        if is_in_l(&polygon.rotate(((n - i) % n) as u64)) {
            return Ok(((i as u64 * k % n as u64) as u32, i));
        }
    }
    Err(Error::Internal(format!(
        "polygon {polygon} has no rotation into L"
    )))
}

/// Colors every vertex of `graph` with the rotation coloring.
pub fn color(graph: &InterlacingGraph) -> Result<CircularColoring> {
    let colors = graph
        .vertices()
        .iter()
        .map(|p| color_of(p).map(|(c, _)| c))
        .collect::<Result<Vec<_>>>()?;
    Ok(CircularColoring {
        modulus: graph.params().n(),
        gap: graph.params().k(),
        colors,
    })
}

fn check_domain(graph: &InterlacingGraph, coloring: &CircularColoring) -> Result<()> {
    if coloring.colors.len() != graph.vertex_count() {
        return Err(Error::MissingVertex {
            expected: graph.vertex_count(),
            got: coloring.colors.len(),
        });
    }
    if let Some((vertex, &color)) = coloring
        .colors
        .iter()
        .enumerate()
        .find(|&(_, &c)| c >= coloring.modulus)
    {
        return Err(Error::ColorOutOfRange {
            vertex,
            color,
            modulus: coloring.modulus,
        });
    }
    Ok(())
}

/// Checks every edge: the color difference mod `n` must lie in `[k, n-k]`.
pub fn validate_circular(
    graph: &InterlacingGraph,
    coloring: &CircularColoring,
) -> Result<ColoringReport> {
    check_domain(graph, coloring)?;
    let (n, k) = (coloring.modulus, coloring.gap);
    let violations: Vec<_> = graph
        .edges()
        .filter(|&(u, v)| {
            let diff = (coloring.colors[u] + n - coloring.colors[v]) % n;
            diff < k || diff > n.saturating_sub(k)
        })
        .collect();
    Ok(ColoringReport {
        valid: violations.is_empty(),
        violations,
    })
}

/// Collapses a valid circular coloring to a proper coloring with classes
/// `floor(color / k)`, using at most `ceil(n/k)` classes.
pub fn derive_proper_coloring(
    graph: &InterlacingGraph,
    coloring: &CircularColoring,
) -> Result<Vec<u32>> {
    let report = validate_circular(graph, coloring)?;
    if !report.valid {
        return Err(Error::InvalidColoring {
            violations: report.violations.len(),
        });
    }
    Ok(coloring.colors.iter().map(|&c| c / coloring.gap).collect())
}
