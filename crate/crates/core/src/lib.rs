//! Exact cross-product closures of three rays in the real projective plane.
//!
//! Starting from a basis `{u, v, w}` of R^3, the closure repeatedly adds the
//! ray of every nonzero cross product of two rays already present. The
//! result is finite (3 or 5 rays) exactly when one basis vector is
//! orthogonal to the other two; otherwise it is infinite and dense in the
//! elliptic metric. This crate generates the closure level by level in exact
//! integer arithmetic, classifies bases, checks the incidence axioms on the
//! generated sets and measures how densely they fill the plane.

pub mod closure;
pub mod density;
pub mod error;
pub mod exec;
pub mod metric;
pub mod projective;
pub mod scalar;
pub mod subplane;

pub use closure::{
    is_stabilized, next_level, next_level_with, run_closure, run_closure_with, BasisSpec, CapHit,
    Closure, ClosureCaps, ClosureTrace, LevelOptions, LevelStats, PairStrategy, PointStore,
};
pub use density::{
    covering_radius, density_curve, density_of_closure, min_separation, sample_directions,
    DensityLevel, DensityReport, SphereSample,
};
pub use error::{Error, Result};
pub use exec::ExecMode;
pub use metric::{elliptic_distance, FloatDirection, Ray};
pub use projective::{
    canonicalize, canonicalize_integers, collinear, cross, incident, join, meet, polar, pole,
    quadruple_product, HLine, HPoint, IntTriple, QuadrupleProduct,
};
pub use scalar::ExactScalar;
pub use subplane::{
    classify_basis, detect_degenerate_shape, moebius_net, verify_axioms, verify_ortho_closed,
    AxiomReport, Classification, ClassificationKind, DegenerateShape, OrthoCheck,
};
