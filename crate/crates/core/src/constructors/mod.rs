//! Interpolating sequences: given `f` on `S ∩ [1, N]`, build a word `x` with
//! `x(s) = f(s)` whose orbit closure has a prescribed dynamical property, plus
//! the adversarial colorings used to show such sets are necessary.

mod ergodic;
mod minimal;
mod mixing;
mod problem;
mod sturmian;
mod trace;
mod witness;
mod zero;

pub use ergodic::{block_report, strictly_ergodic_construct, BlockReport, ErgodicConfig};
pub use minimal::{is_member_level, mutation_fault, totally_minimal_construct, MembershipOracle, MinimalConfig};
pub use mixing::{mixing_extend, MixingExtension, MixingOutcome};
pub use problem::{FunctionSpec, InterpolationProblem};
pub use sturmian::{sturmian_factor_bound, sturmian_interpolate};
pub use trace::{
    check_coherence, restriction_mismatches, CoherenceReport, ConstructionKind, ConstructionTrace, Level, PartialWord,
    UNFILLED,
};
pub use witness::{density_coloring_witness, syndetic_partition_witness, CoveringReport, PartitionWitness};
pub use zero::{extend_zero, zero_extension_bound, ZeroExtension};
