//! Decides whether a closed curve on a compact orientable hyperbolic
//! surface is filling.
//!
//! The curve is given as a word in a canonical generating set of the
//! fundamental group, built from a fixed pants decomposition. The decision
//! enumerates all short simple multicurves in Dehn-Thurston coordinates,
//! translates them into words, and tests geometric intersection against the
//! input via geodesic axes of the holonomy representation.
//!
//! Modules:
//! - [`surface`]: surface type, pants decomposition, gluing.
//! - [`marking`]: marked points, canonical arcs, spanning tree, generators.
//! - [`dtcoords`]: Dehn-Thurston coordinates and bounded enumeration.
//! - [`dictionary`]: coordinate-to-word translation, word normalization.
//! - [`hyperbolic`]: the admissible metric and the holonomy representation.
//! - [`intersection`]: geometric intersection via axis linking.
//! - [`filling`]: the top-level decision procedure.

pub mod dictionary;
pub mod dtcoords;
pub mod error;
pub mod filling;
mod geom;
pub mod hyperbolic;
pub mod intersection;
pub mod marking;
pub mod surface;

pub use dictionary::{canonicalize, dt_to_words, pants_strand_counts, Letter, Word};
pub use dtcoords::{enumerate_multicurves, is_realizable, multicurve_count_bound, DTCoordinate};
pub use error::{Error, Result};
pub use filling::{candidate_set, is_filling, Certificate, FillOptions, SurfaceData, Verdict};
pub use geom::Mat2;
pub use hyperbolic::{
    build_holonomy, collar_width, length_upper_bound, mid_length, seam_length, Holonomy,
    MetricParams,
};
pub use intersection::{
    axes_link, axis_of, has_nonzero_intersection, intersection_number,
    intersection_number_widened, Axis, Linking,
};
pub use marking::{build_marking, ArcKind, CanonicalArc, GenKind, Generator, MarkingData, Step};
pub use surface::{
    build_standard_decomposition, validate, CuffSlot, CurveSides, Pants, PantsDecomposition,
    Side, SurfaceFile, SurfaceSpec, Violation,
};
