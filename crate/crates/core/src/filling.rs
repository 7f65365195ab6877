//! The filling decision procedure: bound the curve length, stream the
//! candidate simple multicurves, test intersections, certify.
//!
//! A non-peripheral geodesic fills the surface exactly when it meets every
//! essential simple closed curve of hyperbolic length at most twice its own.
//! Every simple multicurve of hyperbolic length `L` has combinatorial length
//! at most `4L`, so streaming the realizable coordinates up to the cutoff
//! `floor(8 * len(gamma))` and testing each component against `gamma`
//! decides filling. The first (in enumeration order) component with zero
//! intersection is returned as the certificate.
//!
//! Candidate tests run on the current rayon pool in enumeration-order
//! chunks, so the reported certificate and the examined-candidate count do
//! not depend on the worker count.

use std::collections::HashMap;
use std::sync::Mutex;

use rayon::prelude::*;

use crate::dictionary::{canonicalize, dt_to_words, Word};
use crate::dtcoords::{enumerate_multicurves, DTCoordinate};
use crate::error::{Error, Result};
use crate::hyperbolic::{build_holonomy, length_upper_bound, Holonomy, MetricParams};
use crate::intersection::has_nonzero_intersection;
use crate::marking::{build_marking, MarkingData};
use crate::surface::{build_standard_decomposition, PantsDecomposition, SurfaceSpec};

/// A prepared surface: decomposition, marking, and holonomy for one metric.
#[derive(Debug, Clone)]
pub struct SurfaceData {
    pub spec: SurfaceSpec,
    pub pd: PantsDecomposition,
    pub marking: MarkingData,
    pub holonomy: Holonomy,
}

/// Builds everything needed to answer queries on the surface.
pub fn prepare(spec: SurfaceSpec, metric: &MetricParams) -> Result<SurfaceData> {
    let pd = build_standard_decomposition(spec)?;
    let marking = build_marking(&pd);
    let holonomy = build_holonomy(&pd, &marking, metric)?;
    Ok(SurfaceData { spec: pd.spec, pd, marking, holonomy })
}

impl SurfaceData {
    pub fn standard(spec: SurfaceSpec) -> Result<SurfaceData> {
        let pd = build_standard_decomposition(spec)?;
        let metric = MetricParams::standard(&pd);
        prepare(spec, &metric)
    }
}

/// Options of the filling decision.
#[derive(Debug, Clone)]
pub struct FillOptions {
    pub tolerance: f64,
    /// Use the coarse word-length bound `26 M L` instead of the exact
    /// geodesic length of gamma.
    pub use_coarse_bound: bool,
    /// Overrides the hyperbolic length bound for gamma (testing hook;
    /// decisions must be monotone in it).
    pub length_override: Option<f64>,
}

impl Default for FillOptions {
    fn default() -> Self {
        FillOptions { tolerance: 1e-9, use_coarse_bound: false, length_override: None }
    }
}

/// The certificate of a negative answer: a simple multicurve coordinate and
/// the component disjoint from the input.
#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    pub coordinate: DTCoordinate,
    pub word: Word,
}

/// Decision result.
#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub filling: bool,
    pub certificate: Option<Certificate>,
    /// Hyperbolic length of gamma (or its coarse bound when requested).
    pub gamma_length: f64,
    /// Combinatorial length cutoff of the candidate enumeration.
    pub cutoff: u64,
    /// Number of candidate coordinates examined.
    pub candidates_checked: u64,
}

/// Streams the candidate set: every realizable coordinate of combinatorial
/// length at most `floor(4 * max_hyp_length)` together with its component
/// words. Contains all simple multicurves of hyperbolic length at most
/// `max_hyp_length`.
pub fn candidate_set<'a>(
    surface: &'a SurfaceData,
    max_hyp_length: f64,
) -> impl Iterator<Item = (DTCoordinate, Vec<Word>)> + 'a {
    let cutoff = (4.0 * max_hyp_length).max(0.0).floor() as u64;
    enumerate_multicurves(&surface.pd, cutoff).map(move |c| {
        let words = dt_to_words(&c, &surface.pd, &surface.marking)
            .expect("enumerated coordinates are realizable");
        (c, words)
    })
}

/// Checks whether `gamma` is conjugate to a power of a boundary class.
/// Exact word-level comparison; the fundamental group is free whenever
/// boundary components exist.
fn peripheral_index(surface: &SurfaceData, gamma: &Word) -> Option<usize> {
    let c = canonicalize(gamma);
    for (bi, bw) in surface.holonomy.boundary_words().iter().enumerate() {
        let cb = canonicalize(bw);
        if cb.is_empty() || c.len() % cb.len() != 0 {
            continue;
        }
        let k = (c.len() / cb.len()) as u32;
        if k == 0 {
            continue;
        }
        if c == canonicalize(&cb.power(k)) || c == canonicalize(&cb.inverse().power(k)) {
            return Some(bi);
        }
    }
    None
}

/// Size of the enumeration-order chunks handed to the worker pool.
const CHUNK: usize = 256;

/// Decides whether the class of `gamma` fills the surface.
pub fn is_filling(surface: &SurfaceData, gamma: &Word, opts: &FillOptions) -> Result<Verdict> {
    if !(opts.tolerance > 0.0 && opts.tolerance <= 1e-3) {
        return Err(Error::InvalidConfig(format!(
            "tolerance {} outside (0, 1e-3]",
            opts.tolerance
        )));
    }
    let g = canonicalize(gamma);
    if g.is_empty() {
        return Err(Error::TrivialCurve);
    }
    if let Some(b) = peripheral_index(surface, &g) {
        return Err(Error::PeripheralCurve { boundary: b });
    }
    let gamma_length = match opts.length_override {
        Some(l) => l,
        None if opts.use_coarse_bound => length_upper_bound(g.len() as u64, &surface.spec),
        None => match surface.holonomy.hyp_length(&g) {
            Ok(l) => l,
            // A nonempty word of non-hyperbolic holonomy is a trivial
            // class (possible only on closed surfaces).
            Err(Error::NonHyperbolic { .. }) => return Err(Error::TrivialCurve),
            Err(e) => return Err(e),
        },
    };

    let cutoff = (8.0 * gamma_length).max(0.0).floor() as u64;
    let candidates = candidate_set(surface, 2.0 * gamma_length);

    // Distinct component classes repeat heavily across coordinates
    // (parallel copies); memoize the per-class decision.
    let cache: Mutex<HashMap<Word, Result<bool>>> = Mutex::new(HashMap::new());
    let test_word = |w: &Word| -> Result<bool> {
        if let Some(r) = cache.lock().unwrap().get(w) {
            return r.clone();
        }
        let r = has_nonzero_intersection(&surface.holonomy, &g, w, opts.tolerance);
        cache.lock().unwrap().insert(w.clone(), r.clone());
        r
    };

    let mut checked: u64 = 0;
    let mut iter = candidates.peekable();
    while iter.peek().is_some() {
        let chunk: Vec<(DTCoordinate, Vec<Word>)> = iter.by_ref().take(CHUNK).collect();
        // First decisive event (certificate or error) in enumeration order.
        let hit: Option<(usize, Result<Certificate>)> = chunk
            .par_iter()
            .enumerate()
            .find_map_first(|(i, (coord, words))| {
                for w in words {
                    match test_word(w) {
                        Ok(true) => {}
                        Ok(false) => {
                            return Some((
                                i,
                                Ok(Certificate { coordinate: coord.clone(), word: w.clone() }),
                            ))
                        }
                        Err(e) => return Some((i, Err(e))),
                    }
                }
                None
            });
        match hit {
            Some((i, Ok(cert))) => {
                return Ok(Verdict {
                    filling: false,
                    certificate: Some(cert),
                    gamma_length,
                    cutoff,
                    candidates_checked: checked + i as u64 + 1,
                });
            }
            Some((_, Err(e))) => return Err(e),
            None => checked += chunk.len() as u64,
        }
    }

    Ok(Verdict {
        filling: true,
        certificate: None,
        gamma_length,
        cutoff,
        candidates_checked: checked,
    })
}
