//! Flag codes over finite fields.
//!
//! A flag is a strictly nested sequence of subspaces of F_q^n with
//! prescribed dimensions; a flag code is a finite set of flags of one type.
//! This crate computes flag and subspace distances, the projected
//! constant dimension codes of a flag code, and the structural predicates
//! that relate the two levels (disjointness, distance-coherence, coherence,
//! equidistance, sunflowers, optimum distance). It also simulates the
//! erasure channel in which flags are transmitted as nested generator
//! batches, and implements the sequential containment decoder for coherent
//! codes together with an exhaustive minimum-distance oracle.

pub mod cdc;
pub mod channel;
pub mod coherence;
pub mod decode;
pub mod error;
pub mod experiment;
pub mod field;
pub mod flag;
pub mod format;
pub mod matrix;
pub mod samples;
pub mod subspace;

pub use cdc::{max_distance_bound, ConstantDimensionCode, ContainmentDecode, EquidistantProfile};
pub use channel::{erasure_counts, nested_generator_matrix, transmit, ChannelTrace, LossModel};
pub use coherence::{CoherenceReport, EquidistanceProfile, OptimumDistanceCheck, SunflowerProfile};
pub use decode::{
    exhaustive_decode, CoherentDecoder, DecodeOutcome, DecodeResult, ShotCheck, ShotOutcome,
};
pub use error::{Error, Result};
pub use experiment::{run_simulation, ExperimentConfig, SimulationReport};
pub use field::FieldContext;
pub use flag::{Flag, FlagCode, StutteringFlag, TypeVector};
pub use format::{parse_code, parse_stuttering, serialize_code, serialize_stuttering};
pub use matrix::Matrix;
pub use subspace::Subspace;
