//! Shared test support: independent oracles kept free of the library's
//! implementation paths they check.

#![allow(dead_code)]

use dehnfill_core::*;

pub fn surface(g: u32, n: u32) -> SurfaceData {
    SurfaceData::standard(SurfaceSpec::new(g, n).unwrap()).unwrap()
}

/// All primitive slope pairs `(p, q)` with entries bounded by `max`,
/// normalized so that `p > 0`, or `(0, 1)`.
pub fn primitive_slopes(max: i64) -> Vec<(i64, i64)> {
    let mut v = vec![(0i64, 1i64)];
    for p in 1..=max {
        for q in -max..=max {
            if gcd(p, q.abs()) == 1 {
                v.push((p, q));
            }
        }
    }
    v
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Geometric intersection number of two slopes on the one-holed torus.
pub fn slope_det(a: (i64, i64), b: (i64, i64)) -> u64 {
    (a.0 * b.1 - a.1 * b.0).unsigned_abs()
}

/// The Christoffel word of the primitive slope `(p, q)` in the letters
/// `x` (the arc generator, slope (1,0)) and `y` (the pants curve, slope
/// (0,1)), built by walking the Stern-Brocot tree. Primitive words represent
/// exactly the simple closed curves of the one-holed torus.
pub fn slope_word(p: i64, q: i64, marking: &MarkingData) -> Word {
    assert!(p >= 0 && (p, q) != (0, 0) && gcd(p, q.abs()) == 1);
    let x = Word::parse("A1", marking).unwrap();
    let y_name = if q >= 0 { "K1" } else { "K1^-1" };
    let y = Word::parse(y_name, marking).unwrap();
    let qq = q.abs();
    if p == 0 {
        return canonicalize(&y);
    }
    if qq == 0 {
        return canonicalize(&x);
    }
    // Stern-Brocot descent towards p/qq between 0/1 = y and 1/0 = x.
    let (mut lo, mut lo_w) = ((0i64, 1i64), y);
    let (mut hi, mut hi_w) = ((1i64, 0i64), x);
    loop {
        let med = (lo.0 + hi.0, lo.1 + hi.1);
        let med_w = lo_w.concat(&hi_w);
        if med == (p, qq) {
            return canonicalize(&med_w);
        }
        // Compare p/qq with med.0/med.1 as fractions.
        if p * med.1 < med.0 * qq {
            hi = med;
            hi_w = med_w;
        } else {
            lo = med;
            lo_w = med_w;
        }
    }
}

/// Brute-force enumeration oracle: scan the box `{0..L}^N x {-L..L}^N` and
/// keep the realizable coordinates of length at most `L`. Independent of
/// the streaming enumerator.
pub fn brute_force_multicurves(pd: &PantsDecomposition, max_lp: u64) -> Vec<DTCoordinate> {
    let n = pd.num_curves();
    let m_radix = max_lp + 1;
    let t_radix = 2 * max_lp + 1;
    let total = m_radix.pow(n as u32) * t_radix.pow(n as u32);
    let mut out = Vec::new();
    for idx in 0..total {
        let mut rest = idx;
        let mut m = vec![0u32; n];
        let mut t = vec![0i32; n];
        for mi in m.iter_mut() {
            *mi = (rest % m_radix) as u32;
            rest /= m_radix;
        }
        for ti in t.iter_mut() {
            *ti = (rest % t_radix) as i32 - max_lp as i32;
            rest /= t_radix;
        }
        let c = DTCoordinate::new(m, t);
        if c.combinatorial_length() <= max_lp && is_realizable(&c, pd).unwrap() {
            out.push(c);
        }
    }
    out
}

/// Independent canonical-form oracle: the minimum over all rotations of the
/// cyclic reduction of `w` and of its inverse, computed by explicit
/// enumeration.
pub fn orbit_minimum(w: &Word) -> Word {
    // Reduce freely and cyclically by repeated scanning.
    let mut v = w.0.clone();
    loop {
        let before = v.len();
        let mut out: Vec<Letter> = Vec::new();
        for &l in &v {
            if out
                .last()
                .is_some_and(|p| p.gen == l.gen && p.inverse != l.inverse)
            {
                out.pop();
            } else {
                out.push(l);
            }
        }
        while out.len() >= 2 {
            let f = out[0];
            let b = *out.last().unwrap();
            if f.gen == b.gen && f.inverse != b.inverse {
                out.pop();
                out.remove(0);
            } else {
                break;
            }
        }
        let after = out.len();
        v = out;
        if after == before {
            break;
        }
    }
    let mut candidates = Vec::new();
    let inv: Vec<Letter> = v.iter().rev().map(|l| l.inverted()).collect();
    for base in [&v, &inv] {
        for r in 0..base.len().max(1) {
            let rot: Vec<Letter> = base
                .iter()
                .cycle()
                .skip(r)
                .take(base.len())
                .copied()
                .collect();
            candidates.push(Word(rot));
        }
    }
    candidates.into_iter().min().unwrap_or_default()
}
