//! Exact integer arithmetic shared by the counting formulas, the coloring
//! thresholds and the rational-valued oracles.
//!
//! Everything here is generic over primitive integers so the same code backs
//! `u32` point labels, `u128` counts and the reduced fractions reported by
//! the circular chromatic number search. No floating point is used anywhere.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use num_traits::PrimInt;
use serde::{Deserialize, Serialize};

/// Binomial coefficient `C(n, k)`, or `None` on overflow of `T`.
///
/// Computed multiplicatively as `c <- c * (n - i) / (i + 1)`; every partial
/// product is itself a binomial coefficient so each division is exact.
pub fn binomial<T: PrimInt + Integer>(n: T, k: T) -> Option<T> {
    if k < T::zero() || n < T::zero() || k > n {
        return Some(T::zero());
    }
    let k = if k > n - k { n - k } else { k };
    let mut acc = T::one();
    let mut i = T::zero();
    while i < k {
        // acc * (n - i) / (i + 1) without overflowing the intermediate when possible:
        // split off the gcd of acc and (i + 1) first.
        let num = n - i;
        let den = i + T::one();
        let g = acc.gcd(&den);
        let (a, d) = (acc / g, den / g);
        let b = num / d;
        acc = a.checked_mul(&b)?;
        i = i + T::one();
    }
    Some(acc)
}

/// `ceil(a / b)` for `a >= 0`, `b > 0`.
pub fn ceil_div<T: PrimInt + Integer>(a: T, b: T) -> T {
    a.div_ceil(&b)
}

/// `floor(a / b)` for `a >= 0`, `b > 0`.
pub fn floor_div<T: PrimInt + Integer>(a: T, b: T) -> T {
    a.div_floor(&b)
}

/// A positive rational `num / den` kept in lowest terms.
///
/// Ordering is exact and never forms a cross product, so it is safe for any
/// `T` without widening.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(bound(serialize = "T: Serialize", deserialize = "T: Deserialize<'de>"))]
pub struct ReducedFraction<T> {
    num: T,
    den: T,
}

impl<T: PrimInt + Integer> ReducedFraction<T> {
    /// Reduces `num / den`. Returns `None` when `den` is zero.
    pub fn new(num: T, den: T) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        let g = num.gcd(&den);
        if g.is_zero() {
            return Some(Self { num, den: T::one() });
        }
        Some(Self {
            num: num / g,
            den: den / g,
        })
    }

    pub fn integer(value: T) -> Self {
        Self {
            num: value,
            den: T::one(),
        }
    }

    pub fn num(&self) -> T {
        self.num
    }

    pub fn den(&self) -> T {
        self.den
    }

    pub fn ceil(&self) -> T {
        ceil_div(self.num, self.den)
    }

    pub fn floor(&self) -> T {
        floor_div(self.num, self.den)
    }
}

/// Compares `a/b` with `c/d` (all non-negative, `b, d > 0`) through the
/// continued fraction expansion.
fn cmp_ratio<T: PrimInt + Integer>(a: T, b: T, c: T, d: T) -> Ordering {
    let (qa, ra) = a.div_rem(&b);
    let (qc, rc) = c.div_rem(&d);
    match qa.cmp(&qc) {
        Ordering::Equal => {}
        other => return other,
    }
    match (ra.is_zero(), rc.is_zero()) {
        (true, true) => Ordering::Equal,
        (true, false) => Ordering::Less,
        (false, true) => Ordering::Greater,
        // ra/b vs rc/d  <=>  d/rc vs b/ra
        (false, false) => cmp_ratio(d, rc, b, ra),
    }
}

impl<T: PrimInt + Integer> PartialOrd for ReducedFraction<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: PrimInt + Integer> Ord for ReducedFraction<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_ratio(self.num, self.den, other.num, other.den)
    }
}

impl<T: fmt::Display + PrimInt> fmt::Display for ReducedFraction<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == T::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pascal(n: usize) -> Vec<Vec<u128>> {
        let mut rows = vec![vec![1u128]];
        for i in 1..=n {
            let prev = &rows[i - 1];
            let mut row = vec![1u128; i + 1];
            for j in 1..i {
                row[j] = prev[j - 1] + prev[j];
            }
            rows.push(row);
        }
        rows
    }

    #[test]
    fn binomial_matches_pascal_triangle() {
        let rows = pascal(60);
        for n in 0..=60u128 {
            for k in 0..=n {
                assert_eq!(
                    binomial(n, k),
                    Some(rows[n as usize][k as usize]),
                    "C({n},{k})"
                );
            }
            assert_eq!(binomial(n, n + 1), Some(0));
        }
    }

    #[test]
    fn binomial_reports_overflow() {
        assert_eq!(binomial(35u32, 17), None);
        assert_eq!(binomial(34u32, 17), Some(2_333_606_220));
        assert_eq!(binomial(-1i32, 2), Some(0));
    }

    #[test]
    fn fraction_reduces_and_displays() {
        let f = ReducedFraction::new(6u32, 2).unwrap();
        assert_eq!((f.num(), f.den()), (3, 1));
        assert_eq!(f.to_string(), "3");
        assert_eq!(ReducedFraction::new(14u64, 4).unwrap().to_string(), "7/2");
        assert!(ReducedFraction::new(1u8, 0).is_none());
        assert_eq!(ReducedFraction::new(0u8, 5).unwrap().den(), 1);
    }

    #[test]
    fn ordering_near_type_limits() {
        // cross products would overflow u8 here
        let a = ReducedFraction::new(250u8, 251).unwrap();
        let b = ReducedFraction::new(251u8, 252).unwrap();
        assert!(a < b);
        let c = ReducedFraction::new(255u8, 254).unwrap();
        assert!(b < c);
    }

    proptest! {
        #[test]
        fn ordering_agrees_with_cross_multiplication(
            a in 0u64..10_000, b in 1u64..10_000, c in 0u64..10_000, d in 1u64..10_000,
        ) {
            let x = ReducedFraction::new(a, b).unwrap();
            let y = ReducedFraction::new(c, d).unwrap();
            prop_assert_eq!(x.cmp(&y), (a as u128 * d as u128).cmp(&(c as u128 * b as u128)));
            prop_assert_eq!(x == y, a * d == c * b);
        }

        #[test]
        fn ceil_floor_bracket(a in 0i64..100_000, b in 1i64..1000) {
            let (c, f) = (ceil_div(a, b), floor_div(a, b));
            prop_assert!(f * b <= a && a < (f + 1) * b);
            prop_assert!((c - 1) * b < a && a <= c * b);
        }
    }
}
