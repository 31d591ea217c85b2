//! The counterclockwise compression `f` that fixes `1` and moves every other
//! point one step back, together with the partition of an independent set it
//! induces and checks for the six structural claims behind the
//! independence-number bound.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::polygon::{Parameters, Polygon};
use crate::Count;

/// `f(1) = 1`, `f(i) = i - 1`, applied pointwise. Points may collapse when
/// both `1` and `2` are present. The result keeps the ambient size `n`; use
/// [`Polygon::reinterpret`] to view it on `[n-1]` (it never contains `n`).
pub fn f_shift(polygon: &Polygon) -> Polygon {
    let mut points: Vec<u32> = polygon
        .points()
        .iter()
        .map(|&p| if p == 1 { 1 } else { p - 1 })
        .collect();
    points.dedup();
    Polygon::new(polygon.n(), points).expect("f preserves order")
}

pub fn f_power(polygon: &Polygon, times: u32) -> Polygon {
    let mut out = polygon.clone();
    for _ in 0..times {
        out = f_shift(&out);
    }
    out
}

/// `C(n - (r-1)k - 1, k - 1)`.
pub fn independence_formula(params: &Parameters) -> Result<Count> {
    crate::graph::per_point_count(params)
}

/// The families of an independent set. `stable_ends[i-1]` holds the family
/// of polygons containing `r-i+1` and `n-i+1`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IndependentSetPartition {
    /// Contains `1` and shares its image under `f` with another member.
    pub collapsing: BTreeSet<Polygon>,
    /// Contains `1` and `r+1`.
    pub tight_start: BTreeSet<Polygon>,
    pub stable_ends: Vec<BTreeSet<Polygon>>,
    pub remainder: BTreeSet<Polygon>,
}

impl IndependentSetPartition {
    /// Everything except the remainder, in the order collapsing, tight, ends.
    pub fn anchored(&self) -> BTreeSet<Polygon> {
        let mut out = self.collapsing.clone();
        out.extend(self.tight_start.iter().cloned());
        for part in &self.stable_ends {
            out.extend(part.iter().cloned());
        }
        out
    }

    pub fn total(&self) -> usize {
        self.collapsing.len()
            + self.tight_start.len()
            + self.stable_ends.iter().map(BTreeSet::len).sum::<usize>()
            + self.remainder.len()
    }
}

fn check_independent(set: &[Polygon], params: &Parameters) -> Result<()> {
    for p in set {
        if p.n() != params.n() || p.len() != params.k() as usize || !p.is_r_stable(params.r()) {
            return Err(Error::NotAVertex(p.clone()));
        }
    }
    for (i, p) in set.iter().enumerate() {
        for q in &set[i + 1..] {
            if p.interlaces(q) {
                return Err(Error::NotIndependent(p.clone(), q.clone()));
            }
        }
    }
    Ok(())
}

/// Splits a pairwise non-interlacing set of vertices into its families.
///
/// Each family is computed from its own definition; overlapping families
/// would contradict the theory and are reported as an internal error.
pub fn partition_independent_set(
    set: &[Polygon],
    params: &Parameters,
) -> Result<IndependentSetPartition> {
    check_independent(set, params)?;
    let (n, r) = (params.n(), params.r());
    let members: BTreeSet<Polygon> = set.iter().cloned().collect();

    let collapsing: BTreeSet<Polygon> = members
        .iter()
        .filter(|p| p.contains(1) && members.iter().any(|q| q != *p && f_shift(q) == f_shift(p)))
        .cloned()
        .collect();
    let tight_start: BTreeSet<Polygon> = members
        .iter()
        .filter(|p| p.contains(1) && p.contains(r + 1))
        .cloned()
        .collect();
    let stable_ends: Vec<BTreeSet<Polygon>> = (1..r)
        .map(|i| {
            members
                .iter()
                .filter(|p| p.contains(r - i + 1) && p.contains(n - i + 1))
                .cloned()
                .collect()
        })
        .collect();

    let mut covered = BTreeSet::new();
    for part in std::iter::once(&collapsing)
        .chain(std::iter::once(&tight_start))
        .chain(&stable_ends)
    {
        for p in part {
            if !covered.insert(p.clone()) {
                return Err(Error::Internal(format!(
                    "polygon {p} falls into two families"
                )));
            }
        }
    }
    let remainder = members.difference(&covered).cloned().collect();
    Ok(IndependentSetPartition {
        collapsing,
        tight_start,
        stable_ends,
        remainder,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimReport {
    pub claim_id: u8,
    pub holds: bool,
    /// Offending polygons (images or original members), present iff the claim fails.
    pub counterexample: Option<Vec<Polygon>>,
}

impl ClaimReport {
    fn new(claim_id: u8, counterexample: Option<Vec<Polygon>>) -> Self {
        Self {
            claim_id,
            holds: counterexample.is_none(),
            counterexample,
        }
    }
}

fn first_interlacing_pair(set: &[Polygon]) -> Option<Vec<Polygon>> {
    set.iter().enumerate().find_map(|(i, p)| {
        set[i + 1..]
            .iter()
            .find(|q| p.interlaces(q))
            .map(|q| vec![p.clone(), q.clone()])
    })
}

/// Evaluates all six claims on an independent set; no claim short-circuits
/// another.
pub fn verify_claims(set: &[Polygon], params: &Parameters) -> Result<Vec<ClaimReport>> {
    let parts = partition_independent_set(set, params)?;
    let (n, k, r) = (params.n(), params.k() as usize, params.r());

    // 1: f is injective on the remainder.
    let remainder: Vec<&Polygon> = parts.remainder.iter().collect();
    let shifted: Vec<Polygon> = remainder.iter().map(|p| f_shift(p)).collect();
    let claim1 = remainder.iter().enumerate().find_map(|(i, p)| {
        (i + 1..remainder.len())
            .find(|&j| shifted[i] == shifted[j])
            .map(|j| vec![(*p).clone(), remainder[j].clone()])
    });

    // 2: images are r-stable k-polygons on [n-1].
    let on_smaller: Vec<Option<Polygon>> = shifted
        .iter()
        .map(|q| {
            q.reinterpret(n - 1)
                .ok()
                .filter(|q| q.len() == k && q.is_r_stable(r))
        })
        .collect();
    let claim2 = shifted
        .iter()
        .zip(&on_smaller)
        .find(|(_, ok)| ok.is_none())
        .map(|(q, _)| vec![q.clone()]);

    // 3: images are pairwise non-interlacing on [n-1].
    let images: Vec<Polygon> = shifted
        .iter()
        .filter_map(|q| q.reinterpret(n - 1).ok())
        .collect();
    let claim3 = first_interlacing_pair(&images);

    // 4: f^(r-1) is injective on the anchored families.
    let anchored: Vec<Polygon> = parts.anchored().into_iter().collect();
    let compressed: Vec<Polygon> = anchored.iter().map(|p| f_power(p, r - 1)).collect();
    let claim4 = anchored.iter().enumerate().find_map(|(i, p)| {
        (i + 1..anchored.len())
            .find(|&j| compressed[i] == compressed[j])
            .map(|j| vec![p.clone(), anchored[j].clone()])
    });

    // 5: every compressed polygon contains 1, and without 1 it is an r-stable
    // (k-1)-polygon on [2, n-r+1], viewed on a circle of n-r points.
    let reduced: Vec<Option<Polygon>> = compressed
        .iter()
        .map(|q| {
            if !q.contains(1) || q.len() != k {
                return None;
            }
            let rest: Vec<u32> = q.without(1).points().iter().map(|&x| x - 1).collect();
            if rest.iter().any(|&x| x < 1 || x > n - r) {
                return None;
            }
            // k = 1 leaves nothing; the empty polygon needs some circle to live on
            Polygon::new((n - r).max(1), rest)
                .ok()
                .filter(|p| p.is_r_stable(r))
        })
        .collect();
    let claim5 = compressed
        .iter()
        .zip(&reduced)
        .find(|(_, ok)| ok.is_none())
        .map(|(q, _)| vec![q.clone()]);

    // 6: the reduced (k-1)-polygons are pairwise non-interlacing.
    let reduced_ok: Vec<Polygon> = reduced.into_iter().flatten().collect();
    let claim6 = first_interlacing_pair(&reduced_ok);

    Ok(vec![
        ClaimReport::new(1, claim1),
        ClaimReport::new(2, claim2),
        ClaimReport::new(3, claim3),
        ClaimReport::new(4, claim4),
        ClaimReport::new(5, claim5),
        ClaimReport::new(6, claim6),
    ])
}
