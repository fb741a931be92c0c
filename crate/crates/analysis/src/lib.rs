//! Quantitative verification of layer codes.
//!
//! Exact energy barriers by bottleneck search on the flip graph, the
//! constructive sweep bound on the built code, certified-or-bounded
//! distance, the point-defect correctability identity, and stabilizer
//! relation inheritance. Every reported number carries its mode (exact or
//! bound); refusals are explicit, never silent downgrades.

mod barrier;
mod correctability;
mod distance;
mod relations;

pub use barrier::{
    energy_barrier_exact, energy_barrier_sweep, replay_penalty, BarrierError, BarrierMode,
    BarrierResult,
};
pub use correctability::{point_defect_correctability, BallReport, CorrectabilityReport};
pub use distance::{layer_distance_bounds, DistanceBounds, DistanceBoundsError};
pub use relations::{relation_inheritance, RelationCertificate, RelationError};
