//! Geometric intersection of free homotopy classes via geodesic axes.
//!
//! Two closed geodesics intersect exactly when some lift of one crosses a
//! fixed lift of the other, i.e. when the endpoint pairs of the axes link on
//! the boundary circle. Crossings of the closed geodesics correspond to
//! crossing lifts through one fundamental segment of the fixed axis, counted
//! up to the deck action, so the intersection number is the number of
//! distinct crossings whose position falls in a window of one translation
//! length.
//!
//! The search enumerates conjugating elements by a breadth-first walk of the
//! group, pruned to a neighborhood of the fundamental segment: a crossing
//! lift admits a coset representative whose base point orbit stays within
//! `d(o, axis_b) + len_b / 2` of the segment, plus a safety margin for the
//! discrete walk. The margin is cross-checked by tests that enlarge the
//! radius and compare answers. A class is disjoint from itself and from its
//! powers; powers are detected by word comparison (exact when the
//! fundamental group is free) and by axis coincidence inside the ball.

use std::collections::{HashSet, VecDeque};

use crate::dictionary::{canonicalize, Word};
use crate::error::{Error, Result};
use crate::geom::{angle_distance, boundary_angle, dist, dist_to_geodesic, in_ccw_arc, Mat2};
use crate::geom::Mat2Dd;
use crate::hyperbolic::Holonomy;

/// Safety margin added to the derived pruning radius.
const SEARCH_MARGIN: f64 = 3.0;

/// Hard cap on search nodes, as a resource guard.
const MAX_NODES: usize = 30_000_000;

/// Outcome of a linking test between two axes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Linking {
    Linked,
    Unlinked,
    Ambiguous,
}

/// The invariant geodesic of a hyperbolic isometry: attracting and repelling
/// fixed points (angle coordinates on the boundary circle) and the
/// translation length.
#[derive(Debug, Clone, Copy)]
pub struct Axis {
    pub attracting: f64,
    pub repelling: f64,
    pub translation_length: f64,
}

/// Axis of a unit-determinant matrix. Errors with `NonHyperbolic` when
/// `|tr| <= 2 + tol`.
pub fn axis_of(m: &Mat2, tol: f64) -> Result<Axis> {
    let t = m.trace();
    if t.abs() <= 2.0 + tol {
        return Err(Error::NonHyperbolic { trace: t.abs() });
    }
    let s = (t * t - 4.0).sqrt();
    let lam_att = (t + t.signum() * s) / 2.0;
    let lam_rep = (t - t.signum() * s) / 2.0;
    let eig_angle = |lam: f64| -> f64 {
        // (A - lam) v = 0; pick the better-conditioned row.
        let v1 = (m.b, lam - m.a);
        let v2 = (lam - m.d, m.c);
        let (v0, v1) = if v1.0.abs() + v1.1.abs() >= v2.0.abs() + v2.1.abs() {
            v1
        } else {
            v2
        };
        boundary_angle(v0, v1)
    };
    Ok(Axis {
        attracting: eig_angle(lam_att),
        repelling: eig_angle(lam_rep),
        translation_length: 2.0 * (t.abs() / 2.0).acosh(),
    })
}

/// Linking of two axes on the boundary circle. `Ambiguous` when an endpoint
/// of `b` lies within `tol` (angular) of an endpoint of `a`.
pub fn axes_link(a: &Axis, b: &Axis, tol: f64) -> Linking {
    let amb = [b.attracting, b.repelling].iter().any(|&x| {
        angle_distance(x, a.attracting) < tol || angle_distance(x, a.repelling) < tol
    });
    if amb {
        return Linking::Ambiguous;
    }
    let inside = [b.attracting, b.repelling]
        .iter()
        .filter(|&&x| in_ccw_arc(x, a.repelling, a.attracting))
        .count();
    if inside == 1 {
        Linking::Linked
    } else {
        Linking::Unlinked
    }
}

/// Among the cyclic rotations of the word, the matrix whose axis passes
/// closest to the base point. Rotations are conjugates, so any represents
/// the class.
fn best_rotation(h: &Holonomy, w: &Word, tol: f64) -> Result<Mat2> {
    let m0 = h.word_matrix(w);
    let ax0 = axis_of(&m0, tol)?;
    let mut best = m0;
    let mut best_d = dist_to_geodesic((0.0, 1.0), ax0.attracting, ax0.repelling);
    let mut prefix = Mat2::IDENTITY;
    for l in &w.0[..w.len().saturating_sub(1)] {
        let lm = if l.inverse {
            h.generator_matrix(l.gen).inverse()
        } else {
            *h.generator_matrix(l.gen)
        };
        prefix = prefix.mul(&lm);
        let rot = prefix.inverse().mul(&m0).mul(&prefix);
        if let Ok(ax) = axis_of(&rot, tol) {
            let d = dist_to_geodesic((0.0, 1.0), ax.attracting, ax.repelling);
            if d < best_d {
                best_d = d;
                best = rot;
            }
        }
    }
    Ok(best)
}

/// Matrices of the nontrivial generators and their inverses. Generators
/// whose loops are null homotopic are skipped.
fn ball_generators(h: &Holonomy) -> Vec<Mat2> {
    let mut gens = Vec::new();
    for gi in 0..h.num_generators() {
        let m = *h.generator_matrix(gi);
        if m.is_pm_identity(1e-9) {
            continue;
        }
        gens.push(m);
        gens.push(m.inverse());
    }
    gens
}

/// PSL-normalized quantized key for deduplicating group elements.
fn matrix_key(m: &Mat2) -> (i64, i64, i64, i64) {
    let mut e = [m.a, m.b, m.c, m.d];
    let lead = e
        .iter()
        .cloned()
        .max_by(|x, y| x.abs().partial_cmp(&y.abs()).unwrap())
        .unwrap_or(1.0);
    if lead < 0.0 {
        for v in &mut e {
            *v = -*v;
        }
    }
    const Q: f64 = 1e6;
    (
        (e[0] * Q).round() as i64,
        (e[1] * Q).round() as i64,
        (e[2] * Q).round() as i64,
        (e[3] * Q).round() as i64,
    )
}

/// `b` is a positive or negative power of `a` at the word level. Exact
/// conjugacy detection when the fundamental group is free; on closed
/// surfaces the geometric coincidence check inside the ball backs it up.
fn word_power_of(a: &Word, b: &Word) -> bool {
    if a.is_empty() || b.is_empty() {
        return false;
    }
    let (short, long) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    if long.len() % short.len() != 0 {
        return false;
    }
    let k = (long.len() / short.len()) as u32;
    *long == canonicalize(&short.power(k)) || *long == canonicalize(&short.inverse().power(k))
}

enum ScanMode {
    Decide,
    Count,
}

enum ScanOutcome {
    Coincident,
    Crossings(u64),
    LinkedEarly,
}

/// Relative distance between two matrices, on the scale of their largest
/// entry.
fn rel_diff(x: &Mat2, y: &Mat2) -> f64 {
    let scale = x
        .a
        .abs()
        .max(x.b.abs())
        .max(x.c.abs())
        .max(x.d.abs())
        .max(y.a.abs())
        .max(y.b.abs())
        .max(y.c.abs())
        .max(y.d.abs())
        .max(1e-300);
    ((x.a - y.a).abs())
        .max((x.b - y.b).abs())
        .max((x.c - y.c).abs())
        .max((x.d - y.d).abs())
        / scale
}

fn frob2(m: &Mat2) -> f64 {
    m.a * m.a + m.b * m.b + m.c * m.c + m.d * m.d
}

/// Two refined crossing data sets within this relative distance are the
/// same orbit; beyond GRAY_BAND times it they are distinct; in between the
/// scan reports ambiguity. Refined conjugates are accurate to roughly
/// double rounding, so both margins are enormous.
const SAME_ORBIT: f64 = 1e-10;
const GRAY_BAND: f64 = 1e4;

/// f64 side-of-axis decisions are trusted beyond this size of `bc/scale^2`;
/// anything closer is re-derived in double-double precision.
const PREFILTER: f64 = 0.05;

/// Configurations whose refined `bc/scale^2` is below this band cannot be
/// told from tangent ones and abort with ambiguity. Refined data resolves
/// to roughly this level.
const DEGENERACY_BAND: f64 = 1e-12;

/// Core search shared by the decision and the counting entry points.
/// `extra_radius` enlarges the ball (used by the radius self-checks).
fn scan(
    h: &Holonomy,
    a: &Word,
    b: &Word,
    tol: f64,
    mode: ScanMode,
    extra_radius: f64,
) -> Result<ScanOutcome> {
    let a = canonicalize(a);
    let b = canonicalize(b);
    if a.is_empty() || b.is_empty() {
        return Err(Error::NonHyperbolic { trace: 2.0 });
    }
    if word_power_of(&a, &b) {
        return Ok(ScanOutcome::Coincident);
    }
    // Keep the shorter curve as the conjugated one: its length enters
    // both the search radius and the conditioning of the conjugates.
    let swap = {
        let la = h.word_scaled(&a).translation_length(tol)?;
        let lb = h.word_scaled(&b).translation_length(tol)?;
        lb > la
    };
    let (a, b) = if swap { (b, a) } else { (a, b) };
    let ma = best_rotation(h, &a, tol)?;
    let mb = best_rotation(h, &b, tol)?;
    let axis_a = axis_of(&ma, tol)?;
    let axis_b = axis_of(&mb, tol)?;

    let base = (0.0, 1.0);
    let d_b = dist_to_geodesic(base, axis_b.attracting, axis_b.repelling);
    let len_a = axis_a.translation_length;
    let len_b = axis_b.translation_length;

    // When the translation lengths are commensurable the classes may be
    // geometric powers of each other; suppress the early exit so that a
    // coincident lift, if any, is found first.
    let ratio = (len_a / len_b).max(len_b / len_a);
    let maybe_power = (ratio - ratio.round()).abs() < 1e-6;
    let early_exit = matches!(mode, ScanMode::Decide) && !maybe_power;

    // Normalizer sending the repelling endpoint of a to 0 and the
    // attracting one to infinity, with determinant 1. In normalized
    // coordinates the deck translation of a is exactly diag(e^(l/2), ..).
    let norm_a = {
        let (sa, ca) = ((axis_a.attracting / 2.0).sin(), (axis_a.attracting / 2.0).cos());
        let (sr, cr) = ((axis_a.repelling / 2.0).sin(), (axis_a.repelling / 2.0).cos());
        let m = Mat2::new(cr, -sr, -ca, sa);
        let det = m.det();
        let sq = det.abs().sqrt();
        let sign = det.signum();
        Mat2::new(m.a / sq, m.b / sq, sign * m.c / sq, sign * m.d / sq)
    };
    let t_up = Mat2::translation(len_a);
    let t_dn = t_up.inverse();
    let mb_inv = mb.inverse();

    // The window segment of the axis used for pruning the walk.
    let o_n = norm_a.apply(base);
    let pos_o = (o_n.0 * o_n.0 + o_n.1 * o_n.1).sqrt().ln();
    let w_lo = pos_o - len_a / 2.0;
    let w_hi = w_lo + len_a;
    let seg_dist = |z: (f64, f64)| -> f64 {
        let (x, y) = z;
        let r = (x * x + y * y).sqrt();
        let p = r.ln();
        if p >= w_lo && p <= w_hi {
            (x.abs() / y).asinh()
        } else {
            let lo = (0.0, w_lo.exp());
            let hi = (0.0, w_hi.exp());
            dist(z, lo).min(dist(z, hi))
        }
    };
    let d_o_seg = seg_dist(o_n);
    let prune_radius = (d_b + len_b / 2.0).max(d_o_seg) + SEARCH_MARGIN + extra_radius;

    // Reduce a coset representative to minimal Frobenius norm by deck
    // powers of b on the right (which fix the lift) and of a on the left
    // (which move along the orbit). The reduction canonicalizes the orbit
    // and keeps the norms that enter the conjugation small.
    let reduce = |u0: &Mat2| -> Mat2 {
        let mut u = *u0;
        let mut f = frob2(&u);
        loop {
            let mut improved = false;
            let right = [u.mul(&mb), u.mul(&mb_inv)];
            for cand in [
                right[0],
                right[1],
                t_up.mul(&u),
                t_dn.mul(&u),
                t_up.mul(&right[0]),
                t_up.mul(&right[1]),
                t_dn.mul(&right[0]),
                t_dn.mul(&right[1]),
            ] {
                let fc = frob2(&cand);
                if fc < f * (1.0 - 1e-12) {
                    u = cand;
                    f = fc;
                    improved = true;
                    break;
                }
            }
            if !improved {
                return u;
            }
        }
    };

    // Double-double mirror of the reduction, for visits the f64 prefilter
    // cannot settle. The walk tree stores parent links so the group
    // element can be rebuilt exactly along its path.
    let norm_a_dd = Mat2Dd::lift(&norm_a);
    let ma_dd = Mat2Dd::lift(&ma);
    let mb_dd = Mat2Dd::lift(&mb);
    let mb_inv_dd = Mat2Dd::lift(&mb.inverse());
    let a_hat_dd = norm_a_dd.mul(&ma_dd).mul(&norm_a_dd.inverse());
    let a_hat_inv_dd = a_hat_dd.inverse();
    let reduce_dd = |u0: Mat2Dd| -> Mat2Dd {
        let mut u = u0;
        let mut f = u.frob2();
        loop {
            let mut improved = false;
            let right = [u.mul(&mb_dd), u.mul(&mb_inv_dd)];
            for cand in [
                right[0],
                right[1],
                a_hat_inv_dd.mul(&u),
                a_hat_dd.mul(&u),
                a_hat_inv_dd.mul(&right[0]),
                a_hat_inv_dd.mul(&right[1]),
                a_hat_dd.mul(&right[0]),
                a_hat_dd.mul(&right[1]),
            ] {
                let fc = cand.frob2();
                if fc < f * (1.0 - 1e-12) {
                    u = cand;
                    f = fc;
                    improved = true;
                    break;
                }
            }
            if !improved {
                return u;
            }
        }
    };

    // Canonical representative per crossing orbit.
    let mut orbits: Vec<Mat2> = Vec::new();
    let mut ambiguous = false;
    let mut clear_crossing = false;
    let mut coincident_found = false;
    // Coarse keys of reduced representatives already refined, to avoid
    // re-deriving the same orbit from every node of its coset.
    let mut refined: HashSet<(i64, i64, i64, i64)> = HashSet::new();

    let gens = ball_generators(h);
    let gens_dd: Vec<Mat2Dd> = gens.iter().map(Mat2Dd::lift).collect();
    struct Node {
        g: Mat2,
        parent: u32,
        gen: u8,
    }
    let mut nodes: Vec<Node> = vec![Node { g: Mat2::IDENTITY, parent: u32::MAX, gen: 0 }];
    let mut visited: HashSet<(i64, i64, i64, i64)> = HashSet::new();
    let mut queue: VecDeque<u32> = VecDeque::new();
    visited.insert(matrix_key(&Mat2::IDENTITY));
    queue.push_back(0);

    let coarse_key = |m: &Mat2| -> (i64, i64, i64, i64) {
        let scale = m.a.abs().max(m.b.abs()).max(m.c.abs()).max(m.d.abs()).max(1e-300);
        let lead = [m.a, m.b, m.c, m.d]
            .into_iter()
            .max_by(|x, y| x.abs().partial_cmp(&y.abs()).unwrap())
            .unwrap();
        let s = lead.signum() / scale * 1e3;
        ((m.a * s).round() as i64, (m.b * s).round() as i64, (m.c * s).round() as i64, (m.d * s).round() as i64)
    };

    'bfs: while let Some(ni) = queue.pop_front() {
        let g = nodes[ni as usize].g;
        let u = reduce(&norm_a.mul(&g));
        let mut mc = u.mul(&mb).mul(&u.inverse());
        let dsq = mc.det().abs().sqrt();
        mc = Mat2::new(mc.a / dsq, mc.b / dsq, mc.c / dsq, mc.d / dsq);
        let scale = mc.a.abs().max(mc.b.abs()).max(mc.c.abs()).max(mc.d.abs());
        let bc_ratio = (mc.b * mc.c) / (scale * scale);

        if bc_ratio > PREFILTER {
            // Unambiguous crossing even at f64 precision.
            if early_exit {
                return Ok(ScanOutcome::LinkedEarly);
            }
            clear_crossing = true;
        }
        let needs_dd = bc_ratio >= -PREFILTER
            && (!matches!(mode, ScanMode::Decide) || maybe_power || bc_ratio <= PREFILTER);
        if needs_dd && refined.insert(coarse_key(&u)) {
            // Rebuild the group element exactly along its walk path.
            let mut path = Vec::new();
            let mut at = ni as usize;
            while nodes[at].parent != u32::MAX {
                path.push(nodes[at].gen);
                at = nodes[at].parent as usize;
            }
            let mut g_dd = Mat2Dd::identity();
            for &gi in path.iter().rev() {
                g_dd = g_dd.mul(&gens_dd[gi as usize]);
            }
            let u_dd = reduce_dd(norm_a_dd.mul(&g_dd));
            let mc_dd = u_dd.mul(&mb_dd).mul(&u_dd.inverse());
            let det = mc_dd.det().to_f64().abs().sqrt();
            let mr = mc_dd.round();
            let m = Mat2::new(mr.a / det, mr.b / det, mr.c / det, mr.d / det);
            let scale = m.a.abs().max(m.b.abs()).max(m.c.abs()).max(m.d.abs());
            if m.b.abs() < 1e-12 * scale && m.c.abs() < 1e-12 * scale {
                coincident_found = true;
                break 'bfs;
            }
            let bc = (m.b * m.c) / (scale * scale);
            if bc.abs() <= DEGENERACY_BAND.max(tol * 1e-3) {
                // Too close to a tangent configuration to resolve.
                if std::env::var("DEHNFILL_DEBUG").is_ok() {
                    eprintln!("AMB dd-tangent bc={bc:e}");
                }
                ambiguous = true;
            } else if bc > 0.0 {
                if early_exit {
                    return Ok(ScanOutcome::LinkedEarly);
                }
                clear_crossing = true;
                // Canonicalize the representative along its deck orbit by
                // stepwise conjugation descent; norms stay bounded, so no
                // error is amplified, and orbit identity becomes equality
                // of canonical representatives.
                let mut mm = mc_dd;
                let mut f = mm.frob2();
                loop {
                    let up = a_hat_dd.mul(&mm).mul(&a_hat_inv_dd);
                    let dn = a_hat_inv_dd.mul(&mm).mul(&a_hat_dd);
                    let (fu, fd) = (up.frob2(), dn.frob2());
                    if fu < f * (1.0 - 1e-12) && fu <= fd {
                        mm = up;
                        f = fu;
                    } else if fd < f * (1.0 - 1e-12) {
                        mm = dn;
                        f = fd;
                    } else {
                        break;
                    }
                }
                let det = mm.det().to_f64().abs().sqrt();
                let mr = mm.round();
                let m_star = Mat2::new(mr.a / det, mr.b / det, mr.c / det, mr.d / det);
                // Near-tied descent minima can settle one step apart.
                let near = [
                    m_star,
                    a_hat_dd.mul(&mm).mul(&a_hat_inv_dd).round(),
                    a_hat_inv_dd.mul(&mm).mul(&a_hat_dd).round(),
                ];
                let mut nearest = f64::INFINITY;
                for known in &orbits {
                    for cand in &near {
                        nearest = nearest.min(rel_diff(cand, known));
                    }
                }
                if nearest < SAME_ORBIT {
                    // known orbit
                } else if nearest < SAME_ORBIT * GRAY_BAND {
                    if std::env::var("DEHNFILL_DEBUG").is_ok() {
                        eprintln!("AMB dd-orbit-gray nearest={nearest:e}\n  new={m_star:?}\n  all={orbits:?}");
                    }
                    ambiguous = true;
                } else {
                    orbits.push(m_star);
                }
            }
        }

        for (gi, gm) in gens.iter().enumerate() {
            let child = g.mul(gm);
            if seg_dist(norm_a.apply(child.apply(base))) > prune_radius {
                continue;
            }
            let key = matrix_key(&child);
            if visited.insert(key) {
                if visited.len() > MAX_NODES {
                    return Err(Error::NumericalFailure(
                        "conjugate search exceeded the node budget".into(),
                    ));
                }
                nodes.push(Node { g: child, parent: ni, gen: gi as u8 });
                queue.push_back(nodes.len() as u32 - 1);
            }
        }
    }

    if coincident_found {
        return Ok(ScanOutcome::Coincident);
    }
    match mode {
        ScanMode::Decide => {
            if clear_crossing {
                Ok(ScanOutcome::Crossings((orbits.len() as u64).max(1)))
            } else if ambiguous {
                Err(Error::NumericalAmbiguity)
            } else {
                Ok(ScanOutcome::Crossings(0))
            }
        }
        ScanMode::Count => {
            if ambiguous {
                Err(Error::NumericalAmbiguity)
            } else {
                Ok(ScanOutcome::Crossings(orbits.len() as u64))
            }
        }
    }
}

/// Whether the classes of `a` and `b` have nonzero geometric intersection.
/// A class is disjoint from itself and from its powers.
pub fn has_nonzero_intersection(h: &Holonomy, a: &Word, b: &Word, tol: f64) -> Result<bool> {
    match scan(h, a, b, tol, ScanMode::Decide, 0.0)? {
        ScanOutcome::Coincident => Ok(false),
        ScanOutcome::LinkedEarly => Ok(true),
        ScanOutcome::Crossings(c) => Ok(c > 0),
    }
}

/// The geometric intersection number of the two classes.
pub fn intersection_number(h: &Holonomy, a: &Word, b: &Word, tol: f64) -> Result<u64> {
    match scan(h, a, b, tol, ScanMode::Count, 0.0)? {
        ScanOutcome::Coincident => Ok(0),
        ScanOutcome::LinkedEarly => unreachable!("count mode never exits early"),
        ScanOutcome::Crossings(c) => Ok(c),
    }
}

/// Counting variant with an enlarged search ball, for radius self-checks.
pub fn intersection_number_widened(
    h: &Holonomy,
    a: &Word,
    b: &Word,
    tol: f64,
    extra_radius: f64,
) -> Result<u64> {
    match scan(h, a, b, tol, ScanMode::Count, extra_radius)? {
        ScanOutcome::Coincident => Ok(0),
        ScanOutcome::LinkedEarly => unreachable!(),
        ScanOutcome::Crossings(c) => Ok(c),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dictionary::Word;
    use crate::hyperbolic::{build_holonomy, MetricParams};
    use crate::marking::build_marking;
    use crate::surface::{build_standard_decomposition, SurfaceSpec};

    fn torus() -> (crate::marking::MarkingData, Holonomy) {
        let pd = build_standard_decomposition(SurfaceSpec::new(1, 1).unwrap()).unwrap();
        let mk = build_marking(&pd);
        let h = build_holonomy(&pd, &mk, &MetricParams::standard(&pd)).unwrap();
        (mk, h)
    }

    #[test]
    fn axis_of_diagonal() {
        let e = 1f64.exp();
        let m = Mat2::new(e, 0.0, 0.0, 1.0 / e);
        let ax = axis_of(&m, 1e-9).unwrap();
        assert!(angle_distance(ax.attracting, std::f64::consts::PI) < 1e-9);
        assert!(angle_distance(ax.repelling, 0.0) < 1e-9);
        assert!((ax.translation_length - 2.0).abs() < 1e-12);
        assert!(matches!(
            axis_of(&Mat2::IDENTITY, 1e-9),
            Err(Error::NonHyperbolic { .. })
        ));
    }

    #[test]
    fn axis_equivariance() {
        let m = Mat2::new(2.0, 1.0, 1.0, 1.0);
        let g = Mat2::new(1.0, 2.0, 0.0, 1.0);
        let ax = axis_of(&m, 1e-9).unwrap();
        let conj = g.mul(&m).mul(&g.inverse());
        let axc = axis_of(&conj, 1e-9).unwrap();
        assert!(angle_distance(axc.attracting, g.apply_boundary(ax.attracting)) < 1e-9);
        assert!(angle_distance(axc.repelling, g.apply_boundary(ax.repelling)) < 1e-9);
    }

    #[test]
    fn linking_examples() {
        let mk_axis = |u: f64, v: f64| Axis {
            attracting: boundary_angle(u, 1.0),
            repelling: boundary_angle(v, 1.0),
            translation_length: 1.0,
        };
        let inf_axis = Axis {
            attracting: std::f64::consts::PI,
            repelling: 0.0,
            translation_length: 1.0,
        };
        let tol = 1e-9;
        assert_eq!(axes_link(&inf_axis, &mk_axis(-1.0, 1.0), tol), Linking::Linked);
        assert_eq!(axes_link(&mk_axis(0.0, 1.0), &mk_axis(2.0, 3.0), tol), Linking::Unlinked);
        let close = 1.0 + 2.5e-10; // half an angular tolerance away
        assert_eq!(
            axes_link(&mk_axis(0.0, 1.0), &mk_axis(close, 3.0), tol),
            Linking::Ambiguous
        );
    }

    #[test]
    fn torus_dual_generators_intersect_once() {
        let (mk, h) = torus();
        let a = Word::parse("K1", &mk).unwrap();
        let b = Word::parse("A1", &mk).unwrap();
        assert!(has_nonzero_intersection(&h, &a, &b, 1e-9).unwrap());
        assert_eq!(intersection_number(&h, &a, &b, 1e-9).unwrap(), 1);
        assert_eq!(intersection_number(&h, &b, &a, 1e-9).unwrap(), 1);
    }

    #[test]
    fn self_and_power_are_disjoint() {
        let (mk, h) = torus();
        let a = Word::parse("K1 A1", &mk).unwrap();
        assert!(!has_nonzero_intersection(&h, &a, &a, 1e-9).unwrap());
        let a2 = a.concat(&a);
        assert!(!has_nonzero_intersection(&h, &a, &a2, 1e-9).unwrap());
        assert_eq!(intersection_number(&h, &a, &a2, 1e-9).unwrap(), 0);
        let g = Word::parse("A1 K1^-1", &mk).unwrap();
        let conj = g.concat(&a).concat(&g.inverse());
        assert!(!has_nonzero_intersection(&h, &a, &conj, 1e-9).unwrap());
    }

    #[test]
    fn conjugation_invariance_of_decision() {
        let (mk, h) = torus();
        let a = Word::parse("K1", &mk).unwrap();
        let b = Word::parse("A1", &mk).unwrap();
        let g = Word::parse("K1 A1", &mk).unwrap();
        let bc = g.concat(&b).concat(&g.inverse());
        assert!(has_nonzero_intersection(&h, &a, &bc, 1e-9).unwrap());
        assert_eq!(intersection_number(&h, &a, &bc, 1e-9).unwrap(), 1);
    }
}
