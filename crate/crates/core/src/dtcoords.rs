//! Dehn-Thurston coordinates: combinatorial length, realizability, and
//! bounded enumeration of multicurves.
//!
//! A coordinate is realizable when it is not the zero vector, the sum of the
//! intersection numbers over the three cuff slots of every pants is even
//! (boundary slots contribute zero), and every curve missed by the multicurve
//! has a nonnegative twist (the twist then counts parallel copies of the
//! curve). Enumeration is a lexicographic odometer over `(m, t)` with the
//! twist values of each coordinate ordered `0, 1, -1, 2, -2, ...`, so output
//! order is reproducible and streaming.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::surface::PantsDecomposition;

/// The Dehn-Thurston parameter of a multicurve: intersection numbers `m`
/// and twists `t`, one entry per pants curve.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DTCoordinate {
    pub m: Vec<u32>,
    pub t: Vec<i32>,
}

impl DTCoordinate {
    pub fn new(m: Vec<u32>, t: Vec<i32>) -> Self {
        DTCoordinate { m, t }
    }

    /// Combinatorial length: sum of intersection numbers plus total twisting.
    pub fn combinatorial_length(&self) -> u64 {
        let ms: u64 = self.m.iter().map(|&x| x as u64).sum();
        let ts: u64 = self.t.iter().map(|&x| x.unsigned_abs() as u64).sum();
        ms + ts
    }

    pub fn is_zero(&self) -> bool {
        self.m.iter().all(|&x| x == 0) && self.t.iter().all(|&x| x == 0)
    }
}

/// Per-pants parity: the sum of `m` over the three cuff slots must be even.
fn parity_ok(m: &[u32], pd: &PantsDecomposition) -> bool {
    pd.pants.iter().all(|pa| {
        let sum: u64 = (0..3)
            .filter_map(|s| match pa.slots[s] {
                crate::surface::CuffSlot::Curve(c) => Some(m[c] as u64),
                crate::surface::CuffSlot::Boundary(_) => None,
            })
            .sum();
        sum % 2 == 0
    })
}

/// Whether the coordinate is the Dehn-Thurston parameter of a (nonempty)
/// multicurve on the decomposed surface.
pub fn is_realizable(c: &DTCoordinate, pd: &PantsDecomposition) -> Result<bool> {
    let n = pd.num_curves();
    if c.m.len() != n || c.t.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: if c.m.len() != n { c.m.len() } else { c.t.len() },
        });
    }
    if c.is_zero() {
        return Ok(false);
    }
    if !parity_ok(&c.m, pd) {
        return Ok(false);
    }
    Ok(c.m.iter().zip(&c.t).all(|(&m, &t)| m > 0 || t >= 0))
}

/// Streaming enumeration of all realizable coordinates of combinatorial
/// length at most `max_lp`, in lexicographic order on `(m, t)` with twists
/// compared by `(|t|, sign)`, positive first.
pub fn enumerate_multicurves(
    pd: &PantsDecomposition,
    max_lp: u64,
) -> MulticurveIter<'_> {
    MulticurveIter {
        pd,
        max_lp,
        m: None,
        t: Vec::new(),
        fresh_t: true,
    }
}

pub struct MulticurveIter<'a> {
    pd: &'a PantsDecomposition,
    max_lp: u64,
    /// Current m vector; `None` before the first step.
    m: Option<Vec<u32>>,
    t: Vec<i32>,
    fresh_t: bool,
}

impl MulticurveIter<'_> {
    fn sum_m(m: &[u32]) -> u64 {
        m.iter().map(|&x| x as u64).sum()
    }

    fn sum_t_abs(t: &[i32]) -> u64 {
        t.iter().map(|&x| x.unsigned_abs() as u64).sum()
    }

    /// Advance the m odometer to the next vector with sum <= max_lp.
    /// Returns false when exhausted.
    fn advance_m(&mut self) -> bool {
        let n = self.pd.num_curves();
        match &mut self.m {
            None => {
                self.m = Some(vec![0; n]);
                true
            }
            Some(m) => {
                let mut i = n;
                loop {
                    if i == 0 {
                        return false;
                    }
                    i -= 1;
                    m[i] += 1;
                    if Self::sum_m(m) <= self.max_lp {
                        return true;
                    }
                    m[i] = 0;
                }
            }
        }
    }

    /// Next twist value in the order 0, 1, -1, 2, -2, ... (or 0, 1, 2, ...
    /// when the curve is missed), or None when `|next|` exceeds the budget.
    fn next_t_value(v: i32, m_i: u32, budget: u64) -> Option<i32> {
        let next = if m_i == 0 {
            v + 1
        } else if v == 0 {
            1
        } else if v > 0 {
            -v
        } else {
            -v + 1
        };
        if next.unsigned_abs() as u64 <= budget {
            Some(next)
        } else {
            None
        }
    }

    /// Advance the t odometer for the current m. Returns false on exhaust.
    fn advance_t(&mut self) -> bool {
        let m = self.m.as_ref().unwrap();
        let n = m.len();
        let budget = self.max_lp - Self::sum_m(m);
        if self.fresh_t {
            self.t = vec![0; n];
            self.fresh_t = false;
            return true;
        }
        let mut i = n;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            let used: u64 = self.t[..i].iter().map(|&x| x.unsigned_abs() as u64).sum();
            match Self::next_t_value(self.t[i], m[i], budget - used) {
                Some(v) => {
                    self.t[i] = v;
                    for j in i + 1..n {
                        self.t[j] = 0;
                    }
                    debug_assert!(Self::sum_t_abs(&self.t) <= budget);
                    return true;
                }
                None => {
                    self.t[i] = 0;
                }
            }
        }
    }
}

impl Iterator for MulticurveIter<'_> {
    type Item = DTCoordinate;

    fn next(&mut self) -> Option<DTCoordinate> {
        loop {
            if self.m.is_none() || !self.advance_t() {
                // Move to the next m vector with even pants parity.
                loop {
                    if !self.advance_m() {
                        return None;
                    }
                    if parity_ok(self.m.as_ref().unwrap(), self.pd) {
                        break;
                    }
                }
                self.fresh_t = true;
                if !self.advance_t() {
                    continue;
                }
            }
            let m = self.m.as_ref().unwrap();
            let c = DTCoordinate { m: m.clone(), t: self.t.clone() };
            if c.is_zero() {
                continue;
            }
            debug_assert!(is_realizable(&c, self.pd).unwrap());
            return Some(c);
        }
    }
}

/// The enumeration bound `2^N * C(2N + L, L)`, saturating at `u128::MAX`.
pub fn multicurve_count_bound(n: usize, max_lp: u64) -> u128 {
    let pow = 1u128 << n.min(120);
    pow.saturating_mul(binomial(2 * n as u64 + max_lp, max_lp))
}

fn binomial(n: u64, mut k: u64) -> u128 {
    if k > n {
        return 0;
    }
    if k > n - k {
        k = n - k;
    }
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::{build_standard_decomposition, SurfaceSpec};

    fn pd(g: u32, n: u32) -> PantsDecomposition {
        build_standard_decomposition(SurfaceSpec::new(g, n).unwrap()).unwrap()
    }

    #[test]
    fn combinatorial_length_examples() {
        assert_eq!(DTCoordinate::new(vec![2], vec![-3]).combinatorial_length(), 5);
        assert_eq!(
            DTCoordinate::new(vec![1, 0, 2], vec![4, -1, 0]).combinatorial_length(),
            8
        );
        assert_eq!(DTCoordinate::new(vec![0], vec![0]).combinatorial_length(), 0);
    }

    #[test]
    fn realizability_examples() {
        let torus = pd(1, 1);
        let sphere4 = pd(0, 4);
        assert!(is_realizable(&DTCoordinate::new(vec![1], vec![0]), &torus).unwrap());
        assert!(!is_realizable(&DTCoordinate::new(vec![1], vec![0]), &sphere4).unwrap());
        assert!(!is_realizable(&DTCoordinate::new(vec![0], vec![-2]), &torus).unwrap());
        assert!(matches!(
            is_realizable(&DTCoordinate::new(vec![1, 2], vec![0]), &torus),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn torus_length_two_enumeration() {
        let torus = pd(1, 1);
        let got: Vec<DTCoordinate> = enumerate_multicurves(&torus, 2).collect();
        let want = vec![
            DTCoordinate::new(vec![0], vec![1]),
            DTCoordinate::new(vec![0], vec![2]),
            DTCoordinate::new(vec![1], vec![0]),
            DTCoordinate::new(vec![1], vec![1]),
            DTCoordinate::new(vec![1], vec![-1]),
            DTCoordinate::new(vec![2], vec![0]),
        ];
        assert_eq!(got, want);
    }

    #[test]
    fn zero_cutoff_is_empty() {
        let torus = pd(1, 1);
        assert_eq!(enumerate_multicurves(&torus, 0).count(), 0);
    }

    #[test]
    fn cutoff_one_lengths() {
        for surf in [pd(1, 1), pd(0, 4), pd(2, 0)] {
            for c in enumerate_multicurves(&surf, 1) {
                assert_eq!(c.combinatorial_length(), 1);
            }
        }
    }

    #[test]
    fn brute_force_agreement_small() {
        // Larger sweeps live in the integration suite; spot-check here.
        for surf in [pd(1, 1), pd(0, 4)] {
            let n = surf.num_curves();
            assert_eq!(n, 1);
            let max_lp = 6u64;
            let mut brute = Vec::new();
            for m in 0..=max_lp as u32 {
                for t in -(max_lp as i32)..=max_lp as i32 {
                    let c = DTCoordinate::new(vec![m], vec![t]);
                    if c.combinatorial_length() <= max_lp && is_realizable(&c, &surf).unwrap() {
                        brute.push(c);
                    }
                }
            }
            let got: std::collections::HashSet<_> =
                enumerate_multicurves(&surf, max_lp).collect();
            assert_eq!(got.len(), brute.len());
            for c in brute {
                assert!(got.contains(&c));
            }
        }
    }

    #[test]
    fn monotone_in_cutoff() {
        let surf = pd(2, 0);
        let small: std::collections::HashSet<_> = enumerate_multicurves(&surf, 3).collect();
        let large: std::collections::HashSet<_> = enumerate_multicurves(&surf, 4).collect();
        assert!(small.is_subset(&large));
    }

    #[test]
    fn count_bound_holds() {
        for (surf, lmax) in [(pd(1, 1), 12u64), (pd(0, 4), 12), (pd(2, 0), 6)] {
            let n = surf.num_curves();
            for l in 0..=lmax {
                let count = enumerate_multicurves(&surf, l).count() as u128;
                assert!(count <= multicurve_count_bound(n, l), "N={n} L={l}");
            }
        }
    }
}
