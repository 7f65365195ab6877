//! The hyperbolic metric: hexagon trigonometry, holonomy representation,
//! and geodesic lengths.
//!
//! Every pair of pants is cut along its three seams into two isometric
//! right-angled hexagons. The front hexagon of a pants, developed from cuff
//! slot `s`, starts at the frame `(i, up)` with the half-cuff of slot `s`
//! running up the imaginary axis and the hexagon in the right half plane.
//! Walking one side and turning right is `T(side) * R(-pi/2)`; the walk over
//! all six sides closes up to `-I`, which the builder asserts.
//!
//! Charts: each pants curve gets a chart with its geodesic on the imaginary
//! axis, positive direction up, marked point at `i`. The A-side pants is
//! placed by the half turn `z -> -1/z` (so it fills the left half plane and
//! its reference seam foot is the marked point); the B-side pants is placed
//! by a translation by the Fenchel-Nielsen twist. Transports of canonical
//! arcs compose a side placement, hexagon hops, and the end frame of the
//! target chart; the holonomy of a based loop is the ordered product of its
//! step transports.
//!
//! The pants relation, with these conventions, is the product over the three
//! slots (in slot order) of the based cuff loops taken in the boundary
//! direction induced by the pants: `W0^e0 W1^e1 W2^e2 = 1` with `e = +1` on
//! A-sides and `-1` on B-sides. Boundary classes are solved from it.

use serde::{Deserialize, Serialize};

use crate::dictionary::{canonicalize, Letter, Word};
use crate::error::{Error, Result};
use crate::geom::{Mat2, ScaledMat};
use crate::marking::{arc_index, ArcKind, MarkingData, Step};
use crate::surface::{PantsDecomposition, Side, SurfaceSpec};

/// Fenchel-Nielsen data of the admissible metric: one cuff length shared by
/// all pants curves and boundary geodesics, plus a twist per pants curve.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MetricParams {
    pub cuff_length: f64,
    pub twists: Vec<f64>,
}

impl MetricParams {
    /// The default admissible metric: cuff length 9/10, zero twists.
    pub fn standard(pd: &PantsDecomposition) -> Self {
        MetricParams { cuff_length: 0.9, twists: vec![0.0; pd.num_curves()] }
    }

    pub fn validate(&self, pd: &PantsDecomposition) -> Result<()> {
        if !(self.cuff_length > 0.0 && self.cuff_length <= 0.9) {
            return Err(Error::InvalidConfig(format!(
                "cuff length {} outside the admissible range (0, 0.9]",
                self.cuff_length
            )));
        }
        if self.twists.len() != pd.num_curves() {
            return Err(Error::InvalidConfig(format!(
                "{} twists for {} pants curves",
                self.twists.len(),
                pd.num_curves()
            )));
        }
        Ok(())
    }
}

fn check_positive(l: f64) -> Result<f64> {
    if l > 0.0 && l.is_finite() {
        Ok(l)
    } else {
        Err(Error::NonPositiveLength(l))
    }
}

/// Length of the seam between cuffs 1 and 2 of a pants with cuff lengths
/// `(l1, l2, l3)`, by the right-angled hexagon identity. Symmetric in
/// `l1 <-> l2` exactly.
pub fn seam_length(l1: f64, l2: f64, l3: f64) -> Result<f64> {
    check_positive(l1)?;
    check_positive(l2)?;
    check_positive(l3)?;
    let (l1, l2) = if l1 <= l2 { (l1, l2) } else { (l2, l1) };
    let (h1, h2, h3) = (l1 / 2.0, l2 / 2.0, l3 / 2.0);
    let c = (h3.cosh() + h1.cosh() * h2.cosh()) / (h1.sinh() * h2.sinh());
    Ok(c.acosh())
}

/// Length of the shortest essential arc from cuff 1 back to itself. The arc
/// is two copies of the perpendicular from cuff 1 to the opposite seam, so
/// `cosh(mid/2) = sinh(seam_12) * sinh(l2/2)`. Symmetric in `l2 <-> l3`
/// exactly.
pub fn mid_length(l1: f64, l2: f64, l3: f64) -> Result<f64> {
    check_positive(l1)?;
    check_positive(l2)?;
    check_positive(l3)?;
    let (l2, l3) = if l2 <= l3 { (l2, l3) } else { (l3, l2) };
    let s12 = seam_length(l1, l2, l3)?;
    Ok(2.0 * (s12.sinh() * (l2 / 2.0).sinh()).acosh())
}

/// Collar Lemma width: `asinh(1 / sinh(l/2))`.
pub fn collar_width(l: f64) -> Result<f64> {
    check_positive(l)?;
    Ok((1.0 / (l / 2.0).sinh()).asinh())
}

/// Coarse hyperbolic length bound for a curve given as a word of the stated
/// length: `26 * M * word_length`.
pub fn length_upper_bound(word_length: u64, spec: &SurfaceSpec) -> f64 {
    26.0 * spec.num_pants() as f64 * word_length as f64
}

/// Consistency tolerance for the assembled representation.
const BUILD_TOL: f64 = 1e-9;

/// The holonomy representation: one unit-determinant matrix per generator
/// of X, defined up to sign, in the chart of the base marked point.
#[derive(Debug, Clone)]
pub struct Holonomy {
    gen_mats: Vec<Mat2>,
    /// Conjugacy-class words of the boundary components, indexed by
    /// boundary number.
    boundary_words: Vec<Word>,
    /// One relator word per pants whose slots are all glued; each maps to
    /// plus or minus the identity.
    relators: Vec<Word>,
    cuff_length: f64,
}

impl Holonomy {
    pub fn generator_matrix(&self, gen: usize) -> &Mat2 {
        &self.gen_mats[gen]
    }

    pub fn num_generators(&self) -> usize {
        self.gen_mats.len()
    }

    pub fn cuff_length(&self) -> f64 {
        self.cuff_length
    }

    pub fn boundary_words(&self) -> &[Word] {
        &self.boundary_words
    }

    pub fn relator_words(&self) -> &[Word] {
        &self.relators
    }

    fn letter_matrix(&self, l: &Letter) -> Mat2 {
        if l.inverse {
            self.gen_mats[l.gen].inverse()
        } else {
            self.gen_mats[l.gen]
        }
    }

    /// Plain matrix product over the word's letters.
    pub fn word_matrix(&self, w: &Word) -> Mat2 {
        let mut m = Mat2::IDENTITY;
        for l in &w.0 {
            m = m.mul(&self.letter_matrix(l));
        }
        m
    }

    /// Log-scaled product, safe for very long words.
    pub(crate) fn word_scaled(&self, w: &Word) -> ScaledMat {
        let mut m = ScaledMat::identity();
        for l in &w.0 {
            m = m.mul_plain(&self.letter_matrix(l));
        }
        m
    }

    /// Geodesic length of the free homotopy class of `w`:
    /// `2 * acosh(|tr| / 2)`. Errors with `NonHyperbolic` on classes that
    /// are trivial (or otherwise non-hyperbolic), which cannot occur for
    /// essential curves on these surfaces.
    pub fn hyp_length(&self, w: &Word) -> Result<f64> {
        let c = canonicalize(w);
        if c.is_empty() {
            return Err(Error::NonHyperbolic { trace: 2.0 });
        }
        self.word_scaled(&c).translation_length(1e-9)
    }

    /// Geodesic length of a generator's class, with redundant (trivial)
    /// generators contributing zero.
    pub fn generator_class_length(&self, gen: usize) -> f64 {
        let m = ScaledMat { m: self.gen_mats[gen], log: 0.0 };
        m.translation_length(1e-9).unwrap_or(0.0)
    }
}

/// Geometry of one pants: slot lengths and the three hexagon hops.
struct PantsGeometry {
    hops: [Mat2; 3],
    lengths: [f64; 3],
}

fn pants_geometry(lengths: [f64; 3]) -> Result<PantsGeometry> {
    let r = Mat2::rotation(-std::f64::consts::FRAC_PI_2);
    let mut hops = [Mat2::IDENTITY; 3];
    for s in 0..3 {
        let seam = seam_length(lengths[s], lengths[(s + 1) % 3], lengths[(s + 2) % 3])?;
        hops[s] = Mat2::translation(lengths[s] / 2.0)
            .mul(&r)
            .mul(&Mat2::translation(seam))
            .mul(&r);
    }
    let closure = hops[0].mul(&hops[1]).mul(&hops[2]);
    if !closure.is_pm_identity(BUILD_TOL) {
        return Err(Error::NumericalFailure(format!(
            "hexagon walk does not close: {closure:?}"
        )));
    }
    Ok(PantsGeometry { hops, lengths })
}

/// Assembles the holonomy representation for the marked decomposition with
/// the given metric.
pub fn build_holonomy(
    pd: &PantsDecomposition,
    marking: &MarkingData,
    mp: &MetricParams,
) -> Result<Holonomy> {
    mp.validate(pd)?;
    let l = mp.cuff_length;
    let j = Mat2::half_turn();
    let n = pd.num_curves();

    let geoms: Vec<PantsGeometry> = pd
        .pants
        .iter()
        .map(|_| pants_geometry([l, l, l]))
        .collect::<Result<_>>()?;

    // Placement of a slot's development into its curve's chart, and the
    // end frame of the curve's marked point in the slot's development.
    let placement = |pants: usize, slot: usize| -> Mat2 {
        match pd.side_at(pants, slot).expect("glued slot") {
            Side::A => j,
            Side::B => Mat2::translation(mp.twists[pd.curve_at(pants, slot).unwrap()]),
        }
    };
    let end_frame = |pants: usize, slot: usize| -> Mat2 {
        match pd.side_at(pants, slot).expect("glued slot") {
            Side::A => j,
            Side::B => Mat2::translation(-mp.twists[pd.curve_at(pants, slot).unwrap()]),
        }
    };

    // Transport of each canonical arc from the hexagon geometry.
    let mut arc_mats = Vec::with_capacity(marking.arcs.len());
    for arc in &marking.arcs {
        let p = arc.pants;
        let g = &geoms[p];
        let m = match arc.kind {
            ArcKind::Seam(s) => {
                let s = s as usize;
                let t = (s + 1) % 3;
                placement(p, s).mul(&g.hops[s]).mul(&end_frame(p, t))
            }
            ArcKind::Mid(s) => {
                let s = s as usize;
                let u = (s + 1) % 3;
                placement(p, s)
                    .mul(&g.hops[s])
                    .mul(&Mat2::translation(g.lengths[u]))
                    .mul(&g.hops[s].inverse())
                    .mul(&end_frame(p, s))
            }
        };
        arc_mats.push(m);
    }

    // Mid transports satisfy relations over the cuff and seam transports.
    // Rebuild them as exact products of those, so that the generated
    // matrix group is exactly free wherever the fundamental group is; a
    // relation that holds only to rounding would make the group
    // indiscrete and poison deep conjugate searches. The hexagon forms
    // above stay as an independent cross-check.
    // The cuff loop in the boundary direction induced by the pants is
    // T(+l) seen from side A and T(-l) from side B; `anti` flips it.
    let cuff_pow = |pants: usize, slot: usize, anti: bool| -> Mat2 {
        let positive = matches!(pd.side_at(pants, slot), Some(Side::A)) != anti;
        Mat2::translation(if positive { l } else { -l })
    };
    for (ai, arc) in marking.arcs.iter().enumerate() {
        let s = match arc.kind {
            ArcKind::Mid(s) => s as usize,
            ArcKind::Seam(_) => continue,
        };
        let p = arc.pants;
        let u = (s + 1) % 3;
        let t = (s + 2) % 3;
        let exact = if pd.curve_at(p, u).is_some() {
            // Lasso around a glued slot: conjugate of its cuff loop by the
            // seam arc, in the direction opposite to the induced one.
            let a = arc_mats[crate::marking::arc_index(marking, p, ArcKind::Seam(s as u8))?];
            Some(a.mul(&cuff_pow(p, u, true)).mul(&a.inverse()))
        } else if pd.curve_at(p, t).is_some() {
            // Lasso around a boundary slot with the third slot glued:
            // solved from the pants relation based at slot s.
            let a = arc_mats[crate::marking::arc_index(marking, p, ArcKind::Seam(t as u8))?];
            let term_t = a.inverse().mul(&cuff_pow(p, t, false)).mul(&a);
            let term_s = cuff_pow(p, s, false);
            Some(term_t.mul(&term_s))
        } else {
            // Both other slots are boundary: an independent generator.
            None
        };
        if let Some(m) = exact {
            if m.psl_distance(&arc_mats[ai]) > 1e-7 {
                return Err(Error::NumericalFailure(format!(
                    "mid arc {ai} disagrees with its relation form"
                )));
            }
            arc_mats[ai] = m;
        }
    }

    // Generator matrices: ordered product of step transports.
    let step_matrix = |step: &Step| -> Mat2 {
        match *step {
            Step::Cuff { curve: _, inverse } => {
                let t = Mat2::translation(l);
                if inverse {
                    t.inverse()
                } else {
                    t
                }
            }
            Step::Arc { arc, inverse } => {
                if inverse {
                    arc_mats[arc].inverse()
                } else {
                    arc_mats[arc]
                }
            }
        }
    };
    let gen_mats: Vec<Mat2> = marking
        .generators
        .iter()
        .map(|g| {
            let m = g
                .steps
                .iter()
                .fold(Mat2::IDENTITY, |acc, s| acc.mul(&step_matrix(s)));
            // Null-homotopic generators (arcs in the spanning tree) come
            // out as the identity up to rounding; snap them exactly.
            if m.is_pm_identity(1e-9) {
                Mat2::IDENTITY
            } else {
                m
            }
        })
        .collect();

    // Pants relation terms as words, for validation and boundary solving.
    // Term of a glued slot s, based at the marked point of base slot b:
    //   s == b:        K^e
    //   s == b+1:      A_seam(b) K^e A_seam(b)^-1
    //   s == b+2:      A_seam(b+2)^-1 K^e A_seam(b+2)
    // with e = +1 on side A, -1 on side B.
    let slot_term = |pants: usize, base: usize, s: usize| -> Result<Word> {
        let curve = pd.curve_at(pants, s).expect("glued slot");
        let e_inv = matches!(pd.side_at(pants, s), Some(Side::B));
        let k = Letter { gen: marking.curve_generator(curve), inverse: e_inv };
        let word = if s == base {
            Word(vec![k])
        } else if s == (base + 1) % 3 {
            let a = Letter {
                gen: marking.arc_generator(n, arc_index(marking, pants, ArcKind::Seam(base as u8))?),
                inverse: false,
            };
            Word(vec![a, k, a.inverted()])
        } else {
            let a = Letter {
                gen: marking
                    .arc_generator(n, arc_index(marking, pants, ArcKind::Seam(s as u8))?),
                inverse: false,
            };
            Word(vec![a.inverted(), k, a])
        };
        Ok(word)
    };

    let mut relators = Vec::new();
    let mut boundary_words: Vec<(usize, Word)> = Vec::new();
    let holo_partial = |w: &Word| -> Mat2 {
        w.0.iter().fold(Mat2::IDENTITY, |acc, lt| {
            let m = if lt.inverse {
                gen_mats[lt.gen].inverse()
            } else {
                gen_mats[lt.gen]
            };
            acc.mul(&m)
        })
    };

    for (pi, pants) in pd.pants.iter().enumerate() {
        let glued: Vec<usize> = (0..3).filter(|&s| pd.curve_at(pi, s).is_some()).collect();
        if glued.len() == 3 {
            let w = slot_term(pi, 0, 0)?
                .concat(&slot_term(pi, 0, 1)?)
                .concat(&slot_term(pi, 0, 2)?);
            let m = holo_partial(&w);
            if !m.is_pm_identity(1e-7) {
                return Err(Error::NumericalFailure(format!(
                    "pants relation fails for pants {pi}: {m:?}"
                )));
            }
            relators.push(w);
        } else {
            // Solve the boundary-slot terms from the relation.
            let base = glued[0];
            let mid_of = |s: usize| -> Result<Letter> {
                Ok(Letter {
                    gen: marking
                        .arc_generator(n, arc_index(marking, pi, ArcKind::Mid(s as u8))?),
                    inverse: false,
                })
            };
            match glued.len() {
                2 => {
                    // One boundary slot u: U_u solved from the two known
                    // terms T_a, T_b (slot order): T_0 T_1 T_2 = 1.
                    let u = (0..3).find(|s| pd.curve_at(pi, *s).is_none()).unwrap();
                    let (a, b) = match u {
                        0 => (1, 2),
                        1 => (2, 0),
                        2 => (0, 1),
                        _ => unreachable!(),
                    };
                    // U_u = (T_a T_b)^-1 read cyclically from u+1.
                    let ta = slot_term(pi, base, a)?;
                    let tb = slot_term(pi, base, b)?;
                    let w = ta.concat(&tb).inverse();
                    boundary_words.push((boundary_index(pd, pi, u), w));
                }
                1 => {
                    // Two boundary slots: next(base) has the mid lasso,
                    // prev(base) is solved from the relation.
                    let u_next = (base + 1) % 3;
                    let u_prev = (base + 2) % 3;
                    let mid = mid_of(base)?;
                    boundary_words.push((boundary_index(pd, pi, u_next), Word(vec![mid])));
                    // U_prev = Mid * T_base^-1 (the mid term enters the
                    // relation inverted).
                    let t_base = slot_term(pi, base, base)?;
                    let w = Word(vec![mid]).concat(&t_base.inverse());
                    boundary_words.push((boundary_index(pd, pi, u_prev), w));
                }
                _ => {
                    return Err(Error::NumericalFailure(format!(
                        "pants {pi} has no glued slot"
                    )))
                }
            }
        }
        let _ = pants;
    }

    // Validate boundary classes: trace must match the boundary length.
    let expect = 2.0 * (l / 2.0).cosh();
    for (b, w) in &boundary_words {
        let tr = holo_partial(w).trace().abs();
        if (tr - expect).abs() > 1e-7 {
            return Err(Error::NumericalFailure(format!(
                "boundary {b} class has |trace| {tr}, expected {expect}"
            )));
        }
    }
    // Validate cuff normalization.
    for cvi in 0..n {
        let tr = gen_mats[marking.curve_generator(cvi)].trace().abs();
        if (tr - expect).abs() > 1e-7 {
            return Err(Error::NumericalFailure(format!(
                "pants curve {cvi} has |trace| {tr}, expected {expect}"
            )));
        }
    }

    boundary_words.sort_by_key(|&(b, _)| b);
    let boundary_words = boundary_words.into_iter().map(|(_, w)| w).collect();

    Ok(Holonomy { gen_mats, boundary_words, relators, cuff_length: l })
}

fn boundary_index(pd: &PantsDecomposition, pants: usize, slot: usize) -> usize {
    match pd.pants[pants].slots[slot] {
        crate::surface::CuffSlot::Boundary(b) => b,
        crate::surface::CuffSlot::Curve(_) => unreachable!("boundary slot expected"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::marking::build_marking;
    use crate::surface::build_standard_decomposition;

    fn setup(g: u32, n: u32) -> (PantsDecomposition, MarkingData, Holonomy) {
        let pd = build_standard_decomposition(SurfaceSpec::new(g, n).unwrap()).unwrap();
        let mk = build_marking(&pd);
        let h = build_holonomy(&pd, &mk, &MetricParams::standard(&pd)).unwrap();
        (pd, mk, h)
    }

    #[test]
    fn paper_constants() {
        // Frozen from the hexagon identities evaluated in extended precision.
        let s = seam_length(0.9, 0.9, 0.9).unwrap();
        assert!((s - 3.062_283_786_994_455_9).abs() < 1e-12);
        assert!((s - 3.06).abs() < 0.01);
        let m = mid_length(0.9, 0.9, 0.9).unwrap();
        assert!((m - 4.569_603_150_626_972).abs() < 1e-12);
        assert!((m - 4.57).abs() < 0.01);
        assert!(m >= 4.0 * 0.9);
        let w = collar_width(0.9).unwrap();
        assert!((w - 1.508_333_334_903_632).abs() < 1e-12);
        assert!(w >= 1.5);
        // seam exceeds three cuff lengths
        assert!(s > 3.0 * 0.9);
    }

    #[test]
    fn seam_mid_symmetry_and_errors() {
        let a = seam_length(0.7, 1.1, 0.9).unwrap();
        let b = seam_length(1.1, 0.7, 0.9).unwrap();
        assert_eq!(a, b);
        let c = mid_length(0.9, 0.7, 1.1).unwrap();
        let d = mid_length(0.9, 1.1, 0.7).unwrap();
        assert_eq!(c, d);
        let e = seam_length(0.9, 0.9, 1.8).unwrap();
        assert!((e - 3.195_858_300_005_322).abs() < 1e-12);
        assert!((e - 3.196).abs() < 0.001);
        assert!(matches!(seam_length(0.0, 1.0, 1.0), Err(Error::NonPositiveLength(_))));
        assert!(matches!(mid_length(1.0, -1.0, 1.0), Err(Error::NonPositiveLength(_))));
        assert!(matches!(collar_width(0.0), Err(Error::NonPositiveLength(_))));
    }

    #[test]
    fn collar_width_monotone() {
        assert!(collar_width(0.5).unwrap() > collar_width(0.9).unwrap());
        assert!(collar_width(50.0).unwrap() < 1e-9);
    }

    #[test]
    fn length_upper_bound_examples() {
        let t = SurfaceSpec::new(1, 1).unwrap();
        assert_eq!(length_upper_bound(3, &t), 78.0);
        assert_eq!(length_upper_bound(0, &t), 0.0);
        let s4 = SurfaceSpec::new(0, 4).unwrap();
        assert_eq!(length_upper_bound(1, &s4), 52.0);
    }

    #[test]
    fn cuff_normalization_all_surfaces() {
        for (g, n) in [(1u32, 1u32), (0, 4), (2, 0)] {
            let (pd, mk, h) = setup(g, n);
            for c in 0..pd.num_curves() {
                let w = Word(vec![Letter { gen: mk.curve_generator(c), inverse: false }]);
                let len = h.hyp_length(&w).unwrap();
                assert!((len - 0.9).abs() < 1e-9, "g={g} n={n} curve={c}: {len}");
            }
        }
    }

    #[test]
    fn twist_leaves_cuff_traces() {
        let pd = build_standard_decomposition(SurfaceSpec::new(2, 0).unwrap()).unwrap();
        let mk = build_marking(&pd);
        let mp = MetricParams { cuff_length: 0.9, twists: vec![0.3, -1.2, 0.7] };
        let h = build_holonomy(&pd, &mk, &mp).unwrap();
        for c in 0..pd.num_curves() {
            let w = Word(vec![Letter { gen: mk.curve_generator(c), inverse: false }]);
            assert!((h.hyp_length(&w).unwrap() - 0.9).abs() < 1e-9);
        }
    }

    #[test]
    fn relators_map_to_identity() {
        let (_, _, h) = setup(2, 0);
        assert!(!h.relator_words().is_empty());
        for r in h.relator_words() {
            let m = h.word_matrix(r);
            assert!(m.is_pm_identity(1e-7), "{m:?}");
        }
    }

    #[test]
    fn boundary_classes_have_boundary_length() {
        for (g, n) in [(1u32, 1u32), (0, 4), (1, 2), (0, 5)] {
            let (_, _, h) = setup(g, n);
            assert_eq!(h.boundary_words().len(), n as usize);
            for w in h.boundary_words() {
                let len = h.hyp_length(w).unwrap();
                assert!((len - 0.9).abs() < 1e-9, "g={g} n={n}: {len}");
            }
        }
    }

    #[test]
    fn conjugation_invariance() {
        let (_, mk, h) = setup(1, 1);
        let w = Word::parse("A1 K1 K1", &mk).unwrap();
        let g = Word::parse("K1 A1^-1", &mk).unwrap();
        let conj = g.concat(&w).concat(&g.inverse());
        let a = h.hyp_length(&w).unwrap();
        let b = h.hyp_length(&conj).unwrap();
        assert!((a - b).abs() < 1e-9);
        let c = h.hyp_length(&w.inverse()).unwrap();
        assert!((a - c).abs() < 1e-12);
    }

    #[test]
    fn commutator_is_peripheral_class_on_torus() {
        let (_, mk, h) = setup(1, 1);
        // [A1, K1] should be the boundary class: |tr| = 2 cosh(0.45).
        let w = Word::parse("A1 K1 A1^-1 K1^-1", &mk).unwrap();
        let len = h.hyp_length(&w).unwrap();
        assert!((len - 0.9).abs() < 1e-9, "{len}");
    }

    #[test]
    fn generator_bound_26m() {
        for (g, n) in [(1u32, 1u32), (0, 4), (2, 0)] {
            let (pd, _, h) = setup(g, n);
            let bound = 26.0 * pd.spec.num_pants() as f64;
            for gi in 0..h.num_generators() {
                let len = h.generator_class_length(gi);
                assert!(len <= bound, "g={g} n={n} gen {gi}: {len} > {bound}");
            }
        }
    }

    #[test]
    fn metric_validation() {
        let pd = build_standard_decomposition(SurfaceSpec::new(1, 1).unwrap()).unwrap();
        let mk = build_marking(&pd);
        let bad = MetricParams { cuff_length: 1.2, twists: vec![0.0] };
        assert!(matches!(
            build_holonomy(&pd, &mk, &bad),
            Err(Error::InvalidConfig(_))
        ));
        let bad2 = MetricParams { cuff_length: 0.9, twists: vec![] };
        assert!(matches!(
            build_holonomy(&pd, &mk, &bad2),
            Err(Error::InvalidConfig(_))
        ));
    }
}
