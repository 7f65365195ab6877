//! Dictionary between Dehn-Thurston coordinates and words in the generating
//! set X, plus word normalization.
//!
//! A coordinate is turned into its standard-model multicurve: inside each
//! pants the strands run parallel to the canonical arcs with multiplicities
//! given by [`pants_strand_counts`], and at each pants curve the strand ends
//! of the two sides are matched after a cyclic shift by the twist, emitting
//! one pants-curve letter per full wrap. Components are traced through this
//! matching; each traversed arc emits its generator letter and each crossing
//! its wrap letters, so the letter count over all components is exactly the
//! combinatorial length.
//!
//! End ordering along a window, read in the boundary orientation the pants
//! induces on the cuff: first the mid ends (outermost lasso first), then the
//! strands to the next cuff, then the mid ends again (innermost first), then
//! the strands to the previous cuff. Side A of a curve induces the positive
//! curve direction and side B the negative one, so side B's list is reversed
//! before matching. Crossing from side B to side A shifts positions by the
//! twist: B position `j` meets A position `(j + t) mod m` with
//! `floor((j + t)/m)` wrap letters.

use std::fmt;

use crate::error::{Error, Result};
use crate::marking::{ArcKind, MarkingData};
use crate::surface::{PantsDecomposition, Side};
use crate::dtcoords::{is_realizable, DTCoordinate};

/// One signed generator reference.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn inverted(self) -> Letter {
        Letter { gen: self.gen, inverse: !self.inverse }
    }
}

/// A word in the generators of X. Construction does not normalize; use
/// [`canonicalize`] for the conjugacy-class representative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverted()).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn power(&self, k: u32) -> Word {
        let mut v = Vec::with_capacity(self.0.len() * k as usize);
        for _ in 0..k {
            v.extend_from_slice(&self.0);
        }
        Word(v)
    }

    /// Parses a whitespace-separated word like `"K1 A2^-1 A1"`.
    pub fn parse(text: &str, marking: &MarkingData) -> Result<Word> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            let (name, inverse) = match tok.split_once('^') {
                None => (tok, false),
                Some((base, "-1")) => (base, true),
                Some((base, "1")) => (base, false),
                Some(_) => return Err(Error::BadWordToken(tok.to_string())),
            };
            let gen = marking
                .generator_index(name)
                .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
            letters.push(Letter { gen, inverse });
        }
        Ok(Word(letters))
    }

    /// Renders the word in the parseable token format.
    pub fn display<'a>(&'a self, marking: &'a MarkingData) -> WordDisplay<'a> {
        WordDisplay { word: self, marking }
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    marking: &'a MarkingData,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.word.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", self.marking.generators[l.gen].name)?;
            if l.inverse {
                write!(f, "^-1")?;
            }
        }
        Ok(())
    }
}

/// Freely reduces a letter sequence in place.
fn free_reduce(letters: &mut Vec<Letter>) {
    let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
    for &l in letters.iter() {
        if out.last().is_some_and(|p| p.gen == l.gen && p.inverse != l.inverse) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    *letters = out;
}

/// Canonical conjugacy-and-inversion representative: freely and cyclically
/// reduced, then the lexicographically least rotation among the rotations of
/// the word and of its inverse. Idempotent.
pub fn canonicalize(w: &Word) -> Word {
    let mut letters = w.0.clone();
    free_reduce(&mut letters);
    // Cyclic reduction: cancel first against last.
    while letters.len() >= 2 {
        let (first, last) = (letters[0], *letters.last().unwrap());
        if first.gen == last.gen && first.inverse != last.inverse {
            letters.pop();
            letters.remove(0);
        } else {
            break;
        }
    }
    if letters.is_empty() {
        return Word(Vec::new());
    }
    let inv: Vec<Letter> = letters.iter().rev().map(|l| l.inverted()).collect();
    let mut best: Option<Vec<Letter>> = None;
    for base in [&letters, &inv] {
        for r in 0..base.len() {
            let rot: Vec<Letter> =
                base[r..].iter().chain(base[..r].iter()).copied().collect();
            if best.as_ref().is_none_or(|b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    Word(best.unwrap())
}

/// Numbers of strands of each arc type in a pants with cuff intersection
/// numbers `(m1, m2, m3)`: `x12 + x13 + 2*y1 = m1` and cyclically.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StrandCounts {
    pub x12: u32,
    pub x13: u32,
    pub x23: u32,
    pub y1: u32,
    pub y2: u32,
    pub y3: u32,
}

/// Solves the standard-model strand distribution. When the triangle
/// inequalities hold, `x_ij = (m_i + m_j - m_k)/2` and no mid strands occur;
/// when one cuff dominates, the excess goes into its mid strands.
pub fn pants_strand_counts(m1: i64, m2: i64, m3: i64) -> Result<StrandCounts> {
    if m1 < 0 || m2 < 0 || m3 < 0 {
        return Err(Error::NegativeCount { m: (m1, m2, m3) });
    }
    if (m1 + m2 + m3) % 2 != 0 {
        return Err(Error::ParityViolation { m: (m1, m2, m3) });
    }
    let (mut x12, mut x13, mut x23) = (0i64, 0i64, 0i64);
    let (mut y1, mut y2, mut y3) = (0i64, 0i64, 0i64);
    if m1 > m2 + m3 {
        x12 = m2;
        x13 = m3;
        y1 = (m1 - m2 - m3) / 2;
    } else if m2 > m1 + m3 {
        x12 = m1;
        x23 = m3;
        y2 = (m2 - m1 - m3) / 2;
    } else if m3 > m1 + m2 {
        x13 = m1;
        x23 = m2;
        y3 = (m3 - m1 - m2) / 2;
    } else {
        x12 = (m1 + m2 - m3) / 2;
        x13 = (m1 + m3 - m2) / 2;
        x23 = (m2 + m3 - m1) / 2;
    }
    Ok(StrandCounts {
        x12: x12 as u32,
        x13: x13 as u32,
        x23: x23 as u32,
        y1: y1 as u32,
        y2: y2 as u32,
        y3: y3 as u32,
    })
}

/// An endpoint of a strand instance on some curve side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct EndRef {
    instance: usize,
    /// 0 = the oriented start of the instance, 1 = its end.
    end: u8,
}

#[derive(Debug, Clone, Copy)]
struct Instance {
    /// Generator index emitted when traversed start -> end.
    gen: usize,
}

/// Translates a realizable coordinate into one canonical word per connected
/// component of its multicurve, sorted deterministically.
pub fn dt_to_words(
    c: &DTCoordinate,
    pd: &PantsDecomposition,
    marking: &MarkingData,
) -> Result<Vec<Word>> {
    if !is_realizable(c, pd)? {
        return Err(Error::NotRealizable);
    }
    let n = pd.num_curves();

    let mut instances: Vec<Instance> = Vec::new();
    // Per curve and side, the ends in the order induced by the pants.
    let mut side_ends: Vec<[Vec<EndRef>; 2]> = vec![[Vec::new(), Vec::new()]; n];

    for pi in 0..pd.pants.len() {
        let slot_m = |s: usize| -> i64 {
            pd.curve_at(pi, s).map_or(0, |cv| c.m[cv] as i64)
        };
        let counts = pants_strand_counts(slot_m(0), slot_m(1), slot_m(2))
            .expect("realizable coordinate has even pants parity");
        // Seam bundles indexed by the lower slot of the cyclic pair.
        let x = [counts.x12, counts.x23, counts.x13]; // pair (s, s+1)
        let y = [counts.y1, counts.y2, counts.y3];

        // Create instances: seam bundles then mid bundles, slot order.
        let mut seam_inst = [Vec::new(), Vec::new(), Vec::new()];
        for s in 0..3 {
            if x[s] == 0 {
                continue;
            }
            let gen = marking.arc_generator(
                n,
                crate::marking::arc_index(marking, pi, ArcKind::Seam(s as u8))?,
            );
            for _ in 0..x[s] {
                seam_inst[s].push(instances.len());
                instances.push(Instance { gen });
            }
        }
        let mut mid_inst = [Vec::new(), Vec::new(), Vec::new()];
        for s in 0..3 {
            if y[s] == 0 {
                continue;
            }
            let gen = marking.arc_generator(
                n,
                crate::marking::arc_index(marking, pi, ArcKind::Mid(s as u8))?,
            );
            for _ in 0..y[s] {
                mid_inst[s].push(instances.len());
                instances.push(Instance { gen });
            }
        }

        // Window layout per slot, in the pants-induced direction:
        // [mid starts, outermost first][x(s, s+1) ends][mid ends, innermost
        // first][x(s, s-1) ends].
        for s in 0..3 {
            let curve = match pd.curve_at(pi, s) {
                Some(cv) => cv,
                None => continue,
            };
            let side = pd.side_at(pi, s).unwrap();
            let mut layout: Vec<EndRef> = Vec::with_capacity(c.m[curve] as usize);
            for &inst in &mid_inst[s] {
                layout.push(EndRef { instance: inst, end: 0 });
            }
            // Bundle (s, s+1): instance r sits at position r on slot s and
            // position x-1-r on slot s+1 (parallel strands reverse).
            for &inst in &seam_inst[s] {
                layout.push(EndRef { instance: inst, end: 0 });
            }
            for &inst in mid_inst[s].iter().rev() {
                layout.push(EndRef { instance: inst, end: 1 });
            }
            let prev = (s + 2) % 3;
            for &inst in seam_inst[prev].iter().rev() {
                layout.push(EndRef { instance: inst, end: 1 });
            }
            debug_assert_eq!(layout.len(), c.m[curve] as usize);
            let side_idx = match side {
                Side::A => 0,
                Side::B => 1,
            };
            debug_assert!(side_ends[curve][side_idx].is_empty());
            side_ends[curve][side_idx] = layout;
        }
    }

    // Matching across each curve: positions in the positive curve direction.
    // Side A's induced order agrees with it; side B's is reversed.
    // B position j meets A position (j + t) mod m with floor((j+t)/m) wraps.
    #[derive(Clone, Copy)]
    struct Crossing {
        other: EndRef,
        /// Signed wrap count of the curve letter, read in the B -> A
        /// direction of the crossing.
        wraps: i64,
        curve: usize,
        /// True when traversing from this end crosses B -> A.
        from_b: bool,
    }
    // Indexed by (instance, end).
    let mut crossing: Vec<[Option<Crossing>; 2]> = vec![[None, None]; instances.len()];

    for cv in 0..n {
        let m = c.m[cv] as i64;
        if m == 0 {
            continue;
        }
        let a_list = &side_ends[cv][0];
        let b_list: Vec<EndRef> = side_ends[cv][1].iter().rev().copied().collect();
        debug_assert_eq!(a_list.len(), m as usize);
        debug_assert_eq!(b_list.len(), m as usize);
        let t = c.t[cv] as i64;
        for j in 0..m {
            let k = (j + t).rem_euclid(m);
            let wraps = (j + t).div_euclid(m);
            let (be, ae) = (b_list[j as usize], a_list[k as usize]);
            crossing[be.instance as usize][be.end as usize] =
                Some(Crossing { other: ae, wraps, curve: cv, from_b: true });
            crossing[ae.instance as usize][ae.end as usize] =
                Some(Crossing { other: be, wraps, curve: cv, from_b: false });
        }
    }

    // Trace components.
    let mut visited = vec![false; instances.len()];
    let mut words: Vec<Word> = Vec::new();
    for start in 0..instances.len() {
        if visited[start] {
            continue;
        }
        let mut letters: Vec<Letter> = Vec::new();
        let mut cur = EndRef { instance: start, end: 0 };
        loop {
            visited[cur.instance] = true;
            // Traverse the instance from the entry end to the other end.
            let inst = &instances[cur.instance];
            letters.push(Letter { gen: inst.gen, inverse: cur.end == 1 });
            let exit = EndRef { instance: cur.instance, end: 1 - cur.end };
            let cr = crossing[exit.instance][exit.end as usize]
                .expect("every end of a strand is matched");
            // Wrap letters: `wraps` copies in the B->A direction.
            let (count, inverse) = if cr.from_b {
                (cr.wraps.unsigned_abs(), cr.wraps < 0)
            } else {
                (cr.wraps.unsigned_abs(), cr.wraps >= 0 && cr.wraps != 0)
            };
            let gen = marking.curve_generator(cr.curve);
            for _ in 0..count {
                letters.push(Letter { gen, inverse });
            }
            cur = cr.other;
            if cur.instance == start && cur.end == 0 {
                break;
            }
        }
        words.push(canonicalize(&Word(letters)));
    }

    // Curves missed by the multicurve contribute t parallel copies of the
    // pants-curve loop as separate components.
    for cv in 0..n {
        if c.m[cv] == 0 {
            let w = canonicalize(&Word(vec![Letter {
                gen: marking.curve_generator(cv),
                inverse: false,
            }]));
            for _ in 0..c.t[cv] {
                words.push(w.clone());
            }
        }
    }

    words.sort_by(|a, b| (a.len(), &a.0).cmp(&(b.len(), &b.0)));
    Ok(words)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::marking::build_marking;
    use crate::surface::{build_standard_decomposition, SurfaceSpec};

    fn setup(g: u32, n: u32) -> (PantsDecomposition, MarkingData) {
        let pd = build_standard_decomposition(SurfaceSpec::new(g, n).unwrap()).unwrap();
        let mk = build_marking(&pd);
        (pd, mk)
    }

    #[test]
    fn strand_count_examples() {
        let c = pants_strand_counts(2, 1, 1).unwrap();
        assert_eq!((c.x12, c.x13, c.x23), (1, 1, 0));
        assert_eq!((c.y1, c.y2, c.y3), (0, 0, 0));

        let c = pants_strand_counts(4, 1, 1).unwrap();
        assert_eq!((c.x12, c.x13, c.y1, c.x23), (1, 1, 1, 0));
        assert_eq!(c.x12 + c.x13 + 2 * c.y1, 4);

        assert!(matches!(
            pants_strand_counts(1, 1, 1),
            Err(Error::ParityViolation { .. })
        ));
        assert!(matches!(
            pants_strand_counts(-1, 1, 0),
            Err(Error::NegativeCount { .. })
        ));
    }

    #[test]
    fn strand_count_defining_equations() {
        for m1 in 0..8i64 {
            for m2 in 0..8i64 {
                for m3 in 0..8i64 {
                    if (m1 + m2 + m3) % 2 != 0 {
                        continue;
                    }
                    let c = pants_strand_counts(m1, m2, m3).unwrap();
                    assert_eq!(c.x12 as i64 + c.x13 as i64 + 2 * c.y1 as i64, m1);
                    assert_eq!(c.x12 as i64 + c.x23 as i64 + 2 * c.y2 as i64, m2);
                    assert_eq!(c.x13 as i64 + c.x23 as i64 + 2 * c.y3 as i64, m3);
                }
            }
        }
    }

    #[test]
    fn canonicalize_examples() {
        let (_, mk) = setup(2, 0);
        let a = Word::parse("K1 K2 K2^-1 K1", &mk).unwrap();
        assert_eq!(canonicalize(&a), canonicalize(&Word::parse("K1 K1", &mk).unwrap()));
        let b = Word::parse("K1 K2 K1^-1", &mk).unwrap();
        assert_eq!(canonicalize(&b), canonicalize(&Word::parse("K2", &mk).unwrap()));
        assert_eq!(canonicalize(&Word::default()), Word::default());
        // Idempotent and inversion invariant.
        let w = Word::parse("K1 A2^-1 K3 A1", &mk).unwrap();
        let c = canonicalize(&w);
        assert_eq!(canonicalize(&c), c);
        assert_eq!(canonicalize(&w.inverse()), c);
    }

    #[test]
    fn parse_and_display_roundtrip() {
        let (_, mk) = setup(2, 0);
        let w = Word::parse("K1 A2^-1 A1", &mk).unwrap();
        assert_eq!(w.display(&mk).to_string(), "K1 A2^-1 A1");
        assert!(matches!(
            Word::parse("Q7", &mk),
            Err(Error::UnknownGenerator(_))
        ));
        assert!(matches!(
            Word::parse("K1^-2", &mk),
            Err(Error::BadWordToken(_))
        ));
    }

    #[test]
    fn torus_translation_examples() {
        let (pd, mk) = setup(1, 1);
        // (0, 3): three parallel copies of the pants curve.
        let words = dt_to_words(&DTCoordinate::new(vec![0], vec![3]), &pd, &mk).unwrap();
        assert_eq!(words.len(), 3);
        let k1 = canonicalize(&Word::parse("K1", &mk).unwrap());
        assert!(words.iter().all(|w| *w == k1));

        // (1, 0): the seam-arc loop, one letter.
        let words = dt_to_words(&DTCoordinate::new(vec![1], vec![0]), &pd, &mk).unwrap();
        assert_eq!(words.len(), 1);
        assert_eq!(words[0], canonicalize(&Word::parse("A1", &mk).unwrap()));

        // (2, 0): two parallel copies of the (1,0) component.
        let words = dt_to_words(&DTCoordinate::new(vec![2], vec![0]), &pd, &mk).unwrap();
        assert_eq!(words.len(), 2);
        assert!(words.iter().all(|w| *w == canonicalize(&Word::parse("A1", &mk).unwrap())));

        // Twist letters: (1, 1) and (1, -1) differ by the twist sign.
        let plus = dt_to_words(&DTCoordinate::new(vec![1], vec![1]), &pd, &mk).unwrap();
        let minus = dt_to_words(&DTCoordinate::new(vec![1], vec![-1]), &pd, &mk).unwrap();
        assert_eq!(plus.len(), 1);
        assert_eq!(plus[0].len(), 2);
        assert_eq!(minus[0].len(), 2);
        assert_ne!(plus[0], minus[0]);
    }

    #[test]
    fn curve_generator_words() {
        // dt_to_words of the unit twist coordinate is exactly the curve loop.
        let (pd, mk) = setup(2, 0);
        for i in 0..pd.num_curves() {
            let mut t = vec![0; 3];
            t[i] = 1;
            let words = dt_to_words(&DTCoordinate::new(vec![0, 0, 0], t), &pd, &mk).unwrap();
            assert_eq!(words.len(), 1);
            let ki = canonicalize(&Word(vec![Letter { gen: i, inverse: false }]));
            assert_eq!(words[0], ki);
        }
    }

    #[test]
    fn letter_count_equals_combinatorial_length() {
        for (g, n) in [(1u32, 1u32), (0, 4), (2, 0)] {
            let (pd, mk) = setup(g, n);
            for c in crate::dtcoords::enumerate_multicurves(&pd, 6) {
                let words = dt_to_words(&c, &pd, &mk).unwrap();
                let total: u64 = words.iter().map(|w| w.len() as u64).sum();
                assert_eq!(
                    total,
                    c.combinatorial_length(),
                    "coordinate {c:?} on g={g} n={n}"
                );
                assert!(words.iter().all(|w| !w.is_empty()));
            }
        }
    }

    #[test]
    fn not_realizable_is_an_error() {
        let (pd, mk) = setup(0, 4);
        assert!(matches!(
            dt_to_words(&DTCoordinate::new(vec![1], vec![0]), &pd, &mk),
            Err(Error::NotRealizable)
        ));
    }
}
