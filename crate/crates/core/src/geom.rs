//! 2x2 real matrix arithmetic and upper-half-plane helpers.
//!
//! Everything downstream works with unit-determinant matrices acting on the
//! upper half plane by Mobius transformations, considered up to sign
//! (PSL(2,R)). Points of the boundary circle are parametrized by the angle
//! `2*atan2(v0, v1)` of the projective point `(v0 : v1)`, folded into
//! `(-pi, pi]`, so that the real number `x` maps to `2*atan(x)` and infinity
//! maps to `pi`. Angular coordinates keep points near infinity well
//! conditioned, which matters for axis comparisons.

use crate::error::{Error, Result};

pub(crate) const TAU: f64 = std::f64::consts::PI * 2.0;

/// Row-major 2x2 real matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2 {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2 { a: 1.0, b: 0.0, c: 0.0, d: 1.0 };

    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Self {
        Mat2 { a, b, c, d }
    }

    /// Translation by hyperbolic distance `d` along the imaginary axis,
    /// moving `i` towards `infinity` for `d > 0`.
    pub fn translation(d: f64) -> Self {
        let e = (d / 2.0).exp();
        Mat2::new(e, 0.0, 0.0, 1.0 / e)
    }

    /// Rotation about `i` by angle `theta` (counterclockwise action on
    /// tangent directions).
    pub fn rotation(theta: f64) -> Self {
        let (s, c) = (theta / 2.0).sin_cos();
        Mat2::new(c, s, -s, c)
    }

    /// The half-turn about `i` (`z -> -1/z`). Its square is `-I`.
    pub fn half_turn() -> Self {
        Mat2::new(0.0, 1.0, -1.0, 0.0)
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        Mat2::new(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )
    }

    pub fn det(&self) -> f64 {
        self.a * self.d - self.b * self.c
    }

    pub fn trace(&self) -> f64 {
        self.a + self.d
    }

    /// Inverse assuming determinant 1 (adjugate).
    pub fn inverse(&self) -> Mat2 {
        Mat2::new(self.d, -self.b, -self.c, self.a)
    }

    /// True when the matrix equals plus or minus the identity within `tol`.
    pub fn is_pm_identity(&self, tol: f64) -> bool {
        (self.a.abs() - 1.0).abs() < tol
            && (self.d.abs() - 1.0).abs() < tol
            && self.b.abs() < tol
            && self.c.abs() < tol
            && self.a.signum() == self.d.signum()
    }

    /// Difference from another matrix modulo sign (PSL comparison).
    pub fn psl_distance(&self, o: &Mat2) -> f64 {
        let dp = (self.a - o.a).abs()
            + (self.b - o.b).abs()
            + (self.c - o.c).abs()
            + (self.d - o.d).abs();
        let dm = (self.a + o.a).abs()
            + (self.b + o.b).abs()
            + (self.c + o.c).abs()
            + (self.d + o.d).abs();
        dp.min(dm)
    }

    /// Apply the Mobius action to a point `(x, y)` of the upper half plane.
    pub fn apply(&self, p: (f64, f64)) -> (f64, f64) {
        let (x, y) = p;
        // (a z + b) / (c z + d) with z = x + iy
        let nr = self.a * x + self.b;
        let ni = self.a * y;
        let dr = self.c * x + self.d;
        let di = self.c * y;
        let den = dr * dr + di * di;
        ((nr * dr + ni * di) / den, (ni * dr - nr * di) / den)
    }

    /// Apply to a boundary point given in angle coordinates.
    pub fn apply_boundary(&self, theta: f64) -> f64 {
        let (s, c) = (theta / 2.0).sin_cos();
        // projective point (v0 : v1) = (sin(theta/2) : cos(theta/2))
        let w0 = self.a * s + self.b * c;
        let w1 = self.c * s + self.d * c;
        let mut t = 2.0 * w0.atan2(w1);
        if t <= -std::f64::consts::PI {
            t += TAU;
        } else if t > std::f64::consts::PI {
            t -= TAU;
        }
        t
    }
}

/// Angle of the boundary point for a projective vector `(v0 : v1)`.
pub(crate) fn boundary_angle(v0: f64, v1: f64) -> f64 {
    let mut t = 2.0 * v0.atan2(v1);
    if t <= -std::f64::consts::PI {
        t += TAU;
    } else if t > std::f64::consts::PI {
        t -= TAU;
    }
    t
}

/// Circular distance between two boundary angles.
pub(crate) fn angle_distance(a: f64, b: f64) -> f64 {
    let mut d = (a - b).rem_euclid(TAU);
    if d > std::f64::consts::PI {
        d = TAU - d;
    }
    d
}

/// True if `x` lies in the open counterclockwise arc from `from` to `to`.
pub(crate) fn in_ccw_arc(x: f64, from: f64, to: f64) -> bool {
    let span = (to - from).rem_euclid(TAU);
    let off = (x - from).rem_euclid(TAU);
    off > 0.0 && off < span
}

/// Hyperbolic distance between two points of the upper half plane.
pub(crate) fn dist(p: (f64, f64), q: (f64, f64)) -> f64 {
    let dx = p.0 - q.0;
    let dy = p.1 - q.1;
    let cosh_d = 1.0 + (dx * dx + dy * dy) / (2.0 * p.1 * q.1);
    acosh_clamped(cosh_d)
}

/// Distance from a point to the geodesic with boundary endpoints `u`, `v`
/// (angle coordinates).
pub(crate) fn dist_to_geodesic(p: (f64, f64), u: f64, v: f64) -> f64 {
    // Convert angles back to extended reals; handle a vertical geodesic.
    let pi = std::f64::consts::PI;
    let to_real = |t: f64| -> Option<f64> {
        if angle_distance(t, pi) < 1e-12 {
            None // infinity
        } else {
            Some((t / 2.0).tan())
        }
    };
    let (x, y) = p;
    let sinh_d = match (to_real(u), to_real(v)) {
        (None, Some(r)) | (Some(r), None) => (x - r).abs() / y,
        (Some(a), Some(b)) => {
            // Mobius w = (z - a) / (z - b) sends the geodesic to (0, inf);
            // distance to the imaginary axis is asinh(|Re w| / Im w).
            let nr = x - a;
            let dr = x - b;
            let den = dr * dr + y * y;
            let wr = (nr * dr + y * y) / den;
            let wi = (y * dr - nr * y) / den;
            (wr / wi).abs()
        }
        (None, None) => return f64::INFINITY,
    };
    sinh_d.asinh()
}

pub(crate) fn acosh_clamped(x: f64) -> f64 {
    if x <= 1.0 {
        0.0
    } else {
        x.acosh()
    }
}

/// Product of unit-determinant matrices with an explicit log scale, so that
/// traces of very long words do not overflow. The represented matrix is
/// `exp(log) * m`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct ScaledMat {
    pub m: Mat2,
    pub log: f64,
}

impl ScaledMat {
    pub fn identity() -> Self {
        ScaledMat { m: Mat2::IDENTITY, log: 0.0 }
    }

    pub fn mul_plain(&self, o: &Mat2) -> Self {
        let mut m = self.m.mul(o);
        let mut log = self.log;
        let s = m.a.abs().max(m.b.abs()).max(m.c.abs()).max(m.d.abs());
        if s > 1e30 || (s > 0.0 && s < 1e-30) {
            m = Mat2::new(m.a / s, m.b / s, m.c / s, m.d / s);
            log += s.ln();
        }
        ScaledMat { m, log }
    }

    /// Natural log of half the absolute trace of the represented matrix,
    /// or `None` when the trace vanishes to working precision.
    pub fn log_half_trace(&self) -> Option<f64> {
        let t = self.m.trace().abs() / 2.0;
        if t == 0.0 {
            None
        } else {
            Some(t.ln() + self.log)
        }
    }

    /// Translation length `2*acosh(|tr|/2)` of the represented matrix,
    /// assuming determinant 1. Returns an error when `|tr| <= 2 + tol`.
    pub fn translation_length(&self, tol: f64) -> Result<f64> {
        let log_t = match self.log_half_trace() {
            Some(l) => l,
            None => return Err(Error::NonHyperbolic { trace: 0.0 }),
        };
        if log_t > 40.0 {
            // acosh(x) = ln(2x) up to O(x^-2)
            return Ok(2.0 * (log_t + std::f64::consts::LN_2));
        }
        let t = log_t.exp();
        if 2.0 * t <= 2.0 + tol {
            return Err(Error::NonHyperbolic { trace: 2.0 * t });
        }
        Ok(2.0 * acosh_clamped(t))
    }
}


/// Double-double scalar: value is the unevaluated sum `hi + lo` with
/// `|lo| <= ulp(hi)`. Used to recompute a handful of conjugates whose f64
/// error would otherwise be amplified past the clustering bands.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

impl Dd {
    pub fn from(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    fn two_sum(a: f64, b: f64) -> Dd {
        let s = a + b;
        let bb = s - a;
        let e = (a - (s - bb)) + (b - bb);
        Dd { hi: s, lo: e }
    }

    fn quick_renorm(s: f64, e: f64) -> Dd {
        let hi = s + e;
        let lo = e - (hi - s);
        Dd { hi, lo }
    }

    fn two_prod(a: f64, b: f64) -> Dd {
        let p = a * b;
        let e = a.mul_add(b, -p);
        Dd { hi: p, lo: e }
    }

    pub fn add(self, o: Dd) -> Dd {
        let s = Dd::two_sum(self.hi, o.hi);
        Dd::quick_renorm(s.hi, s.lo + self.lo + o.lo)
    }

    pub fn sub(self, o: Dd) -> Dd {
        self.add(o.neg())
    }

    pub fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }

    pub fn mul(self, o: Dd) -> Dd {
        let p = Dd::two_prod(self.hi, o.hi);
        Dd::quick_renorm(p.hi, p.lo + self.hi * o.lo + self.lo * o.hi)
    }

    pub fn div(self, o: Dd) -> Dd {
        let q0 = self.hi / o.hi;
        let r = self.sub(o.mul(Dd::from(q0)));
        let q1 = (r.hi + r.lo) / o.hi;
        Dd::quick_renorm(q0, q1)
    }
}

/// 2x2 matrix over double-double scalars.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Mat2Dd {
    pub a: Dd,
    pub b: Dd,
    pub c: Dd,
    pub d: Dd,
}

impl Mat2Dd {
    pub fn identity() -> Mat2Dd {
        Mat2Dd {
            a: Dd::from(1.0),
            b: Dd::from(0.0),
            c: Dd::from(0.0),
            d: Dd::from(1.0),
        }
    }

    pub fn lift(m: &Mat2) -> Mat2Dd {
        Mat2Dd {
            a: Dd::from(m.a),
            b: Dd::from(m.b),
            c: Dd::from(m.c),
            d: Dd::from(m.d),
        }
    }

    pub fn round(&self) -> Mat2 {
        Mat2::new(self.a.to_f64(), self.b.to_f64(), self.c.to_f64(), self.d.to_f64())
    }

    pub fn mul(&self, o: &Mat2Dd) -> Mat2Dd {
        Mat2Dd {
            a: self.a.mul(o.a).add(self.b.mul(o.c)),
            b: self.a.mul(o.b).add(self.b.mul(o.d)),
            c: self.c.mul(o.a).add(self.d.mul(o.c)),
            d: self.c.mul(o.b).add(self.d.mul(o.d)),
        }
    }

    pub fn det(&self) -> Dd {
        self.a.mul(self.d).sub(self.b.mul(self.c))
    }

    /// Inverse by adjugate over the determinant.
    pub fn inverse(&self) -> Mat2Dd {
        let det = self.det();
        Mat2Dd {
            a: self.d.div(det),
            b: self.b.neg().div(det),
            c: self.c.neg().div(det),
            d: self.a.div(det),
        }
    }

    pub fn frob2(&self) -> f64 {
        let f = |x: Dd| x.hi * x.hi;
        f(self.a) + f(self.b) + f(self.c) + f(self.d)
    }
}

#[cfg(test)]
mod dd_tests {
    use super::*;

    #[test]
    fn dd_recovers_cancellation() {
        // (1 + 2^-60) - 1 in dd keeps the tiny part.
        let x = Dd::from(1.0).add(Dd::from(2f64.powi(-60)));
        let y = x.sub(Dd::from(1.0));
        assert!((y.to_f64() - 2f64.powi(-60)).abs() < 1e-25);
    }

    #[test]
    fn dd_matrix_inverse() {
        let m = Mat2::translation(3.0).mul(&Mat2::rotation(0.7));
        let md = Mat2Dd::lift(&m);
        let prod = md.mul(&md.inverse()).round();
        assert!(prod.is_pm_identity(1e-28_f64.max(1e-15)));
    }
}
