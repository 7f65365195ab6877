//! Topological data model: surface type, pants decomposition, gluing.
//!
//! The decomposition built here is always the same "linear chain": the M
//! pairs of pants sit in a row, glued consecutively along chain curves. The
//! leftover cuff slots are read left to right; the first 2g of them are glued
//! in consecutive pairs to create the genus handles, and the remaining n stay
//! open as the boundary components. Chain curves are numbered first, handle
//! curves after, both left to right.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Surface type: genus `g`, `n` boundary components.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceSpec {
    pub genus: u32,
    pub boundary: u32,
}

impl SurfaceSpec {
    /// Validates that the surface carries a pants decomposition with at
    /// least one pants curve.
    pub fn new(genus: u32, boundary: u32) -> Result<Self> {
        let s = SurfaceSpec { genus, boundary };
        if s.complexity_i64() < 1 {
            return Err(Error::ComplexityTooLow { genus, boundary });
        }
        Ok(s)
    }

    fn complexity_i64(&self) -> i64 {
        3 * self.genus as i64 - 3 + self.boundary as i64
    }

    /// N = 3g - 3 + n, the number of pants curves.
    pub fn complexity(&self) -> usize {
        self.complexity_i64() as usize
    }

    /// M = 2g - 2 + n, the number of pairs of pants.
    pub fn num_pants(&self) -> usize {
        (2 * self.genus as i64 - 2 + self.boundary as i64) as usize
    }

    pub fn euler_characteristic(&self) -> i64 {
        2 - 2 * self.genus as i64 - self.boundary as i64
    }
}

/// What a cuff slot of a pants is glued to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CuffSlot {
    /// Glued to the pants curve with this index.
    Curve(usize),
    /// Left open as this boundary component of the surface.
    Boundary(usize),
}

/// One pair of pants with its three ordered cuff slots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pants {
    pub slots: [CuffSlot; 3],
}

/// The two sides of a pants curve, each a `(pants, slot)` pair. Side A is
/// the lexicographically smaller pair; in the chart of the curve it develops
/// into the left half plane and its marked point is the chart base point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CurveSides {
    pub side_a: (usize, usize),
    pub side_b: (usize, usize),
}

impl CurveSides {
    /// Which side `(pants, slot)` is, if either.
    pub fn side_of(&self, pants: usize, slot: usize) -> Option<Side> {
        if self.side_a == (pants, slot) {
            Some(Side::A)
        } else if self.side_b == (pants, slot) {
            Some(Side::B)
        } else {
            None
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

/// A pants decomposition of a surface: M pants, N pants curves, and the
/// gluing between cuff slots. Orientations record the positive direction of
/// each pants curve; the builder orients every curve by the fixed global
/// orientation of the surface, so they are all `true`.
#[derive(Debug, Clone, PartialEq)]
pub struct PantsDecomposition {
    pub spec: SurfaceSpec,
    pub pants: Vec<Pants>,
    pub curves: Vec<CurveSides>,
    pub orientations: Vec<bool>,
}

/// A violation found by [`validate`]; empty output means all invariants hold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// A curve lists the same `(pants, slot)` on both sides.
    SelfGluedSlot { curve: usize },
    /// A `(pants, slot)` pair is referenced by more than one curve side.
    SlotReused { pants: usize, slot: usize },
    /// A slot marked `Curve(i)` is not listed among curve i's sides (or
    /// vice versa).
    GluingMismatch { pants: usize, slot: usize },
    /// The gluing graph on pants is not connected.
    Disconnected,
    /// Curve or boundary counts disagree with the surface type.
    CountMismatch { curves: usize, boundary: usize },
    /// Orientation flags missing for some curve.
    OrientationCount,
}

/// Builds the standard linear-chain decomposition for the surface.
pub fn build_standard_decomposition(spec: SurfaceSpec) -> Result<PantsDecomposition> {
    // Re-check: callers may have constructed the spec directly.
    let spec = SurfaceSpec::new(spec.genus, spec.boundary)?;
    let m = spec.num_pants();
    let g = spec.genus as usize;
    let n = spec.boundary as usize;

    let mut pants = vec![Pants { slots: [CuffSlot::Boundary(usize::MAX); 3] }; m];
    let mut curves: Vec<CurveSides> = Vec::with_capacity(spec.complexity());

    // Chain gluings: slot 2 of pants i to slot 0 of pants i+1.
    for i in 0..m.saturating_sub(1) {
        let idx = curves.len();
        curves.push(CurveSides { side_a: (i, 2), side_b: (i + 1, 0) });
        pants[i].slots[2] = CuffSlot::Curve(idx);
        pants[i + 1].slots[0] = CuffSlot::Curve(idx);
    }

    // Leftover slots in left-to-right reading order.
    let mut leftover: Vec<(usize, usize)> = Vec::with_capacity(m + 2);
    leftover.push((0, 0));
    leftover.push((0, 1));
    for i in 1..m {
        leftover.push((i, 1));
    }
    if m > 1 {
        leftover.push((m - 1, 2));
    } else {
        leftover.push((0, 2));
    }
    debug_assert_eq!(leftover.len(), m + 2);

    // First 2g leftover slots pair consecutively into handles.
    for h in 0..g {
        let a = leftover[2 * h];
        let b = leftover[2 * h + 1];
        let idx = curves.len();
        curves.push(CurveSides { side_a: a.min(b), side_b: a.max(b) });
        pants[a.0].slots[a.1] = CuffSlot::Curve(idx);
        pants[b.0].slots[b.1] = CuffSlot::Curve(idx);
    }
    // The rest are boundary components.
    for (j, &(p, s)) in leftover[2 * g..].iter().enumerate() {
        pants[p].slots[s] = CuffSlot::Boundary(j);
    }
    debug_assert_eq!(leftover.len() - 2 * g, n);

    let orientations = vec![true; curves.len()];
    let pd = PantsDecomposition { spec, pants, curves, orientations };
    debug_assert!(validate(&pd).is_empty());
    Ok(pd)
}

/// Checks the decomposition invariants, returning all violations as data.
pub fn validate(pd: &PantsDecomposition) -> Vec<Violation> {
    let mut out = Vec::new();
    let n_curves = pd.curves.len();
    let mut boundary_slots = 0usize;

    if pd.orientations.len() != n_curves {
        out.push(Violation::OrientationCount);
    }

    let mut seen = std::collections::HashMap::new();
    for (ci, sides) in pd.curves.iter().enumerate() {
        if sides.side_a == sides.side_b {
            out.push(Violation::SelfGluedSlot { curve: ci });
        }
        for &(p, s) in &[sides.side_a, sides.side_b] {
            if let Some(_prev) = seen.insert((p, s), ci) {
                out.push(Violation::SlotReused { pants: p, slot: s });
            }
            match pd.pants.get(p).map(|pa| pa.slots[s]) {
                Some(CuffSlot::Curve(k)) if k == ci => {}
                _ => out.push(Violation::GluingMismatch { pants: p, slot: s }),
            }
        }
    }
    for (pi, pa) in pd.pants.iter().enumerate() {
        for (si, slot) in pa.slots.iter().enumerate() {
            match slot {
                CuffSlot::Boundary(_) => boundary_slots += 1,
                CuffSlot::Curve(ci) => {
                    if pd.curves.get(*ci).and_then(|c| c.side_of(pi, si)).is_none() {
                        out.push(Violation::GluingMismatch { pants: pi, slot: si });
                    }
                }
            }
        }
    }

    if n_curves != pd.spec.complexity() || boundary_slots != pd.spec.boundary as usize {
        out.push(Violation::CountMismatch { curves: n_curves, boundary: boundary_slots });
    }

    // Connectivity of the gluing graph.
    if !pd.pants.is_empty() {
        let mut reach = vec![false; pd.pants.len()];
        let mut stack = vec![0usize];
        reach[0] = true;
        while let Some(p) = stack.pop() {
            for slot in &pd.pants[p].slots {
                if let CuffSlot::Curve(ci) = slot {
                    if let Some(sides) = pd.curves.get(*ci) {
                        for &(q, _) in &[sides.side_a, sides.side_b] {
                            if q < reach.len() && !reach[q] {
                                reach[q] = true;
                                stack.push(q);
                            }
                        }
                    }
                }
            }
        }
        if reach.iter().any(|r| !r) {
            out.push(Violation::Disconnected);
        }
    }
    out
}

impl PantsDecomposition {
    /// Number of pants curves N.
    pub fn num_curves(&self) -> usize {
        self.curves.len()
    }

    /// The curve index a slot is glued to, if it is not a boundary slot.
    pub fn curve_at(&self, pants: usize, slot: usize) -> Option<usize> {
        match self.pants[pants].slots[slot] {
            CuffSlot::Curve(c) => Some(c),
            CuffSlot::Boundary(_) => None,
        }
    }

    /// Which side of its curve the slot `(pants, slot)` is.
    pub fn side_at(&self, pants: usize, slot: usize) -> Option<Side> {
        self.curve_at(pants, slot)
            .and_then(|c| self.curves[c].side_of(pants, slot))
    }

    /// All boundary slots `(pants, slot, boundary_index)` in index order.
    pub fn boundary_slots(&self) -> Vec<(usize, usize, usize)> {
        let mut v = Vec::new();
        for (pi, pa) in self.pants.iter().enumerate() {
            for (si, slot) in pa.slots.iter().enumerate() {
                if let CuffSlot::Boundary(b) = slot {
                    v.push((pi, si, *b));
                }
            }
        }
        v.sort_by_key(|&(_, _, b)| b);
        v
    }
}

/// Surface description as read from a JSON spec file.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SurfaceFile {
    pub genus: u32,
    pub boundary: u32,
    #[serde(default = "default_cuff_length")]
    pub cuff_length: f64,
    #[serde(default)]
    pub twists: Option<Vec<f64>>,
}

fn default_cuff_length() -> f64 {
    0.9
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_low_complexity() {
        assert!(matches!(
            SurfaceSpec::new(0, 3),
            Err(Error::ComplexityTooLow { .. })
        ));
        assert!(matches!(
            SurfaceSpec::new(1, 0),
            Err(Error::ComplexityTooLow { .. })
        ));
        assert!(matches!(
            SurfaceSpec::new(0, 0),
            Err(Error::ComplexityTooLow { .. })
        ));
    }

    #[test]
    fn one_holed_torus() {
        let pd = build_standard_decomposition(SurfaceSpec::new(1, 1).unwrap()).unwrap();
        assert_eq!(pd.pants.len(), 1);
        assert_eq!(pd.curves.len(), 1);
        assert_eq!(pd.curves[0].side_a, (0, 0));
        assert_eq!(pd.curves[0].side_b, (0, 1));
        assert!(matches!(pd.pants[0].slots[2], CuffSlot::Boundary(0)));
        assert!(validate(&pd).is_empty());
    }

    #[test]
    fn four_holed_sphere() {
        let pd = build_standard_decomposition(SurfaceSpec::new(0, 4).unwrap()).unwrap();
        assert_eq!(pd.pants.len(), 2);
        assert_eq!(pd.curves.len(), 1);
        assert_eq!(pd.boundary_slots().len(), 4);
        assert!(validate(&pd).is_empty());
    }

    #[test]
    fn genus_two() {
        let pd = build_standard_decomposition(SurfaceSpec::new(2, 0).unwrap()).unwrap();
        assert_eq!(pd.pants.len(), 2);
        assert_eq!(pd.curves.len(), 3);
        assert_eq!(pd.boundary_slots().len(), 0);
        // 3M = 2N + n
        assert_eq!(3 * pd.pants.len(), 2 * pd.curves.len());
        assert!(validate(&pd).is_empty());
    }

    #[test]
    fn count_identity_family() {
        for g in 0..4u32 {
            for n in 0..5u32 {
                if let Ok(spec) = SurfaceSpec::new(g, n) {
                    let pd = build_standard_decomposition(spec).unwrap();
                    assert!(validate(&pd).is_empty(), "g={g} n={n}");
                    assert_eq!(
                        3 * pd.pants.len(),
                        2 * pd.curves.len() + n as usize,
                        "g={g} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn validate_flags_self_gluing_and_disconnection() {
        let mut pd = build_standard_decomposition(SurfaceSpec::new(2, 0).unwrap()).unwrap();
        let orig = pd.clone();

        pd.curves[1].side_b = pd.curves[1].side_a;
        assert!(validate(&pd)
            .iter()
            .any(|v| matches!(v, Violation::SelfGluedSlot { .. })));

        // Disconnect: re-glue the chain curve ends onto the same pants.
        let mut pd2 = orig;
        pd2.curves[0] = CurveSides { side_a: (0, 2), side_b: (0, 2) };
        pd2.pants[1].slots[0] = CuffSlot::Boundary(9);
        assert!(validate(&pd2).iter().any(|v| matches!(v, Violation::Disconnected)));
    }
}
