//! Polygons on a labelled circle `1..=n`: stability, shape, rotation and the
//! interlacing relation.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The ambient instance `(n, k, r)`: `k`-polygons on `n` points whose
/// consecutive points are at cyclic distance at least `r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Parameters {
    n: u32,
    k: u32,
    r: u32,
}

impl Parameters {
    pub fn new(n: u32, k: u32, r: u32) -> Result<Self> {
        let invalid = |reason| Error::InvalidParameters { n, k, r, reason };
        if k == 0 {
            return Err(invalid("k must be positive"));
        }
        if r < 2 {
            return Err(invalid("r must be at least 2"));
        }
        if (n as u64) < (r as u64) * (k as u64) {
            return Err(invalid("n must be at least r*k"));
        }
        Ok(Self { n, k, r })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// Same circle and polygon size with a different stability radius.
    pub fn with_stability(&self, r: u32) -> Result<Self> {
        Self::new(self.n, self.k, r)
    }

    /// Every valid triple with `n <= max_n`, ordered by `(n, k, r)`.
    pub fn all_up_to(max_n: u32) -> impl Iterator<Item = Parameters> {
        (1..=max_n).flat_map(|n| {
            (1..=n / 2).flat_map(move |k| (2..=n / k).map(move |r| Parameters { n, k, r }))
        })
    }
}

impl fmt::Display for Parameters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, k={}, r={})", self.n, self.k, self.r)
    }
}

/// A set of points on the circle `1..=n`, stored strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Polygon {
    n: u32,
    points: Vec<u32>,
}

impl Polygon {
    /// Builds a polygon from strictly increasing points in `1..=n`.
    pub fn new(n: u32, points: Vec<u32>) -> Result<Self> {
        let invalid = |points, reason| Error::InvalidPolygon { n, points, reason };
        if n == 0 {
            return Err(invalid(points, "circle must have at least one point"));
        }
        if points.iter().any(|&p| p == 0 || p > n) {
            return Err(invalid(points, "points must lie in 1..=n"));
        }
        if points.windows(2).any(|w| w[0] >= w[1]) {
            return Err(invalid(points, "points must be strictly increasing"));
        }
        Ok(Self { n, points })
    }

    /// Sorts the points first; duplicates are rejected.
    pub fn from_points(n: u32, mut points: Vec<u32>) -> Result<Self> {
        points.sort_unstable();
        Self::new(n, points)
    }

    pub(crate) fn from_sorted_unchecked(n: u32, points: Vec<u32>) -> Self {
        debug_assert!(points.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(points.iter().all(|&p| p >= 1 && p <= n));
        Self { n, points }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn points(&self) -> &[u32] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, point: u32) -> bool {
        self.points.binary_search(&point).is_ok()
    }

    /// Every cyclic gap between consecutive points is at least `r`.
    pub fn is_r_stable(&self, r: u32) -> bool {
        match self.points.as_slice() {
            [] => true,
            [first, .., last] | [first @ last] => {
                self.points.windows(2).all(|w| w[1] - w[0] >= r) && first + self.n - last >= r
            }
        }
    }

    /// Clockwise gaps starting at the smallest point; they sum to `n`.
    pub fn shape(&self) -> Shape {
        let gaps = match self.points.as_slice() {
            [] => Vec::new(),
            [first, .., last] | [first @ last] => self
                .points
                .windows(2)
                .map(|w| w[1] - w[0])
                .chain(std::iter::once(first + self.n - last))
                .collect(),
        };
        Shape { gaps }
    }

    /// Rotates every point clockwise by `steps` positions.
    pub fn rotate(&self, steps: u64) -> Polygon {
        let n = self.n as u64;
        let s = steps % n;
        let mut points: Vec<u32> = self
            .points
            .iter()
            .map(|&p| ((p as u64 - 1 + s) % n + 1) as u32)
            .collect();
        // a rotation is a cyclic shift of the sorted list
        if let Some(pos) = points.windows(2).position(|w| w[0] > w[1]) {
            points.rotate_left(pos + 1);
        }
        Polygon::from_sorted_unchecked(self.n, points)
    }

    /// True iff both polygons have the same nonzero size, are disjoint and
    /// their points alternate around the circle.
    pub fn interlaces(&self, other: &Polygon) -> bool {
        if self.n != other.n || self.points.len() != other.points.len() || self.points.is_empty() {
            return false;
        }
        // Merge; in linear order the owners must strictly alternate.
        let (a, b) = (&self.points, &other.points);
        let lead_a = a[0] < b[0];
        let (first, second) = if lead_a { (a, b) } else { (b, a) };
        for i in 0..first.len() {
            if first[i] >= second[i] {
                return false;
            }
            if i + 1 < first.len() && second[i] >= first[i + 1] {
                return false;
            }
        }
        true
    }

    /// Realizes the clockwise gap sequence `shape` starting at `anchor`.
    pub fn from_shape(shape: &Shape, anchor: u32, n: u32) -> Result<Polygon> {
        if shape.total() != n as u64 || shape.gaps.is_empty() {
            return Err(Error::InvalidShape {
                n,
                gaps: shape.gaps.clone(),
            });
        }
        if anchor == 0 || anchor > n {
            return Err(Error::InvalidPolygon {
                n,
                points: vec![anchor],
                reason: "anchor must lie in 1..=n",
            });
        }
        let mut pos = anchor as u64 - 1;
        let mut points = Vec::with_capacity(shape.gaps.len());
        for &g in &shape.gaps {
            points.push((pos % n as u64) as u32 + 1);
            pos += g as u64;
        }
        Polygon::from_points(n, points)
    }

    /// The same point set viewed on a circle of a different size.
    pub fn reinterpret(&self, n: u32) -> Result<Polygon> {
        Polygon::new(n, self.points.clone())
    }

    /// Drops `point` if present.
    pub fn without(&self, point: u32) -> Polygon {
        let points = self
            .points
            .iter()
            .copied()
            .filter(|&p| p != point)
            .collect();
        Polygon::from_sorted_unchecked(self.n, points)
    }

    /// `p1-p2-...-pk`, the label used by exports.
    pub fn label(&self) -> String {
        let parts: Vec<String> = self.points.iter().map(u32::to_string).collect();
        parts.join("-")
    }
}

impl fmt::Display for Polygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

/// Clockwise gaps of a polygon.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Shape {
    gaps: Vec<u32>,
}

impl Shape {
    pub fn new(gaps: Vec<u32>) -> Result<Self> {
        if gaps.is_empty() || gaps.contains(&0) {
            let n = gaps.iter().map(|&g| g as u64).sum::<u64>() as u32;
            return Err(Error::InvalidShape { n, gaps });
        }
        Ok(Self { gaps })
    }

    pub fn gaps(&self) -> &[u32] {
        &self.gaps
    }

    pub fn total(&self) -> u64 {
        self.gaps.iter().map(|&g| g as u64).sum()
    }

    pub fn min_gap(&self) -> Option<u32> {
        self.gaps.iter().copied().min()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(n: u32, points: &[u32]) -> Polygon {
        Polygon::new(n, points.to_vec()).unwrap()
    }

    /// Every open arc between cyclically consecutive points of `p` holds
    /// exactly one point of `q`, and the two sets are disjoint.
    fn interlaces_by_arcs(p: &Polygon, q: &Polygon) -> bool {
        let n = p.n();
        if p.len() != q.len() || p.is_empty() || p.points().iter().any(|&x| q.contains(x)) {
            return false;
        }
        let k = p.len();
        (0..k).all(|i| {
            let start = p.points()[i];
            let end = p.points()[(i + 1) % k];
            let mut count = 0;
            let mut x = start % n + 1;
            while x != end {
                if q.contains(x) {
                    count += 1;
                }
                x = x % n + 1;
            }
            count == 1
        })
    }

    fn all_subsets(n: u32, k: usize) -> Vec<Polygon> {
        let mut out = Vec::new();
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize == k {
                let pts = (1..=n).filter(|p| mask & (1 << (p - 1)) != 0).collect();
                out.push(Polygon::new(n, pts).unwrap());
            }
        }
        out
    }

    #[test]
    fn parameters_validation() {
        assert!(Parameters::new(6, 2, 3).is_ok());
        assert!(Parameters::new(5, 2, 1).is_err());
        assert!(Parameters::new(5, 2, 3).is_err());
        assert!(Parameters::new(5, 0, 2).is_err());
        let all: Vec<_> = Parameters::all_up_to(6).collect();
        assert!(all.iter().all(|p| Parameters::new(p.n, p.k, p.r).is_ok()));
        assert_eq!(all.iter().filter(|p| p.n() == 6).count(), 5 + 2 + 1);
    }

    #[test]
    fn polygon_rejects_malformed_points() {
        assert!(Polygon::new(5, vec![3, 2]).is_err());
        assert!(Polygon::new(5, vec![0, 2]).is_err());
        assert!(Polygon::new(5, vec![2, 6]).is_err());
        assert!(Polygon::new(5, vec![2, 2]).is_err());
        assert_eq!(
            Polygon::from_points(5, vec![4, 2]).unwrap(),
            poly(5, &[2, 4])
        );
    }

    #[test]
    fn stability_examples() {
        assert!(poly(6, &[1, 4]).is_r_stable(3));
        assert!(!poly(6, &[1, 2]).is_r_stable(2));
        assert!(poly(7, &[1, 3, 5]).is_r_stable(2));
        assert!(!poly(7, &[1, 3, 5]).is_r_stable(3));
        assert!(!poly(6, &[1, 6]).is_r_stable(2));
    }

    #[test]
    fn shape_examples() {
        assert_eq!(poly(5, &[3, 5]).shape().gaps(), &[2, 3]);
        assert_eq!(poly(6, &[1, 4]).shape().gaps(), &[3, 3]);
        assert_eq!(poly(12, &[4, 6, 9, 12]).shape().gaps(), &[2, 3, 3, 4]);
        assert_eq!(poly(9, &[4]).shape().gaps(), &[9]);
    }

    #[test]
    fn rotate_examples() {
        assert_eq!(poly(5, &[2, 4]).rotate(1), poly(5, &[3, 5]));
        assert_eq!(poly(6, &[3, 6]).rotate(4), poly(6, &[1, 4]));
        let p = poly(9, &[2, 5, 8]);
        assert_eq!(p.rotate(0), p);
        assert_eq!(p.rotate(9), p);
        assert_eq!(poly(5, &[5]).rotate(5), poly(5, &[5]));
    }

    #[test]
    fn interlacing_examples() {
        assert!(poly(6, &[1, 3]).interlaces(&poly(6, &[2, 5])));
        assert!(!poly(6, &[1, 4]).interlaces(&poly(6, &[2, 3])));
        assert!(!poly(6, &[1, 4]).interlaces(&poly(6, &[1, 3])));
        assert!(poly(6, &[2]).interlaces(&poly(6, &[5])));
        assert!(!poly(6, &[1, 4]).interlaces(&poly(7, &[2, 5])));
    }

    #[test]
    fn from_shape_examples() {
        let s = |g: &[u32]| Shape::new(g.to_vec()).unwrap();
        assert_eq!(
            Polygon::from_shape(&s(&[2, 3]), 3, 5).unwrap(),
            poly(5, &[3, 5])
        );
        assert_eq!(
            Polygon::from_shape(&s(&[3, 3]), 1, 6).unwrap(),
            poly(6, &[1, 4])
        );
        assert_eq!(
            Polygon::from_shape(&s(&[2, 3, 3, 4]), 4, 12).unwrap(),
            poly(12, &[4, 6, 9, 12])
        );
        assert!(Polygon::from_shape(&s(&[2, 2]), 1, 5).is_err());
        assert!(Shape::new(vec![2, 0, 3]).is_err());
    }

    #[test]
    fn interlacing_agrees_with_arc_counting() {
        for n in 1..=8 {
            for k in 1..=3usize.min(n as usize) {
                let all = all_subsets(n, k);
                for p in &all {
                    for q in &all {
                        assert_eq!(p.interlaces(q), interlaces_by_arcs(p, q), "{p} {q} n={n}");
                    }
                }
            }
        }
    }

    fn arb_polygon() -> impl Strategy<Value = Polygon> {
        (2u32..=16).prop_flat_map(|n| {
            proptest::collection::btree_set(1..=n, 1..=(n as usize / 2).max(1))
                .prop_map(move |s| Polygon::new(n, s.into_iter().collect()).unwrap())
        })
    }

    fn arb_pair() -> impl Strategy<Value = (Polygon, Polygon)> {
        (2u32..=14, 1usize..=4).prop_flat_map(|(n, k)| {
            let k = k.min(n as usize);
            let set = move || {
                proptest::collection::btree_set(1..=n, k)
                    .prop_map(move |s| Polygon::new(n, s.into_iter().collect()).unwrap())
            };
            (set(), set())
        })
    }

    proptest! {
        #[test]
        fn rotations_compose(p in arb_polygon(), i in 0u64..40, j in 0u64..40) {
            let n = p.n() as u64;
            prop_assert_eq!(p.rotate(i).rotate(j), p.rotate((i + j) % n));
        }

        #[test]
        fn rotation_shifts_shape_cyclically(p in arb_polygon(), i in 0u64..40) {
            let a = p.shape().gaps().to_vec();
            let b = p.rotate(i).shape().gaps().to_vec();
            let cyclic_shift = (0..a.len()).any(|s| {
                let mut c = a.clone();
                c.rotate_left(s);
                c == b
            });
            prop_assert!(cyclic_shift);
        }

        #[test]
        fn stability_is_min_gap(p in arb_polygon(), r in 1u32..6) {
            prop_assert_eq!(p.is_r_stable(r), p.shape().min_gap().unwrap() >= r);
            prop_assert_eq!(p.shape().total(), p.n() as u64);
        }

        #[test]
        fn shape_round_trips(p in arb_polygon()) {
            let q = Polygon::from_shape(&p.shape(), p.points()[0], p.n()).unwrap();
            prop_assert_eq!(q, p);
        }

        #[test]
        fn interlacing_is_symmetric_irreflexive_and_rotation_equivariant(
            (p, q) in arb_pair(), i in 0u64..20,
        ) {
            prop_assert_eq!(p.interlaces(&q), q.interlaces(&p));
            prop_assert!(!p.interlaces(&p));
            if p.interlaces(&q) {
                prop_assert!(p.points().iter().all(|&x| !q.contains(x)));
            }
            prop_assert_eq!(p.interlaces(&q), p.rotate(i).interlaces(&q.rotate(i)));
        }
    }
}
