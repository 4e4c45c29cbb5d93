//! Exact arithmetic for 2-bridge (rational) knots.
//!
//! The crate covers the full path from a twist sequence `[c1, ..., cn]` to a
//! volume certificate:
//!
//! - [`rational`]: exact fractions and the continued-fraction correspondence.
//! - [`two_bridge`]: normalization, equivalence and torus detection for `K(p/q)`.
//! - [`diagram`]: the standard alternating diagram of a sequence, face
//!   enumeration, twist number, primality and alternation checks.
//! - [`bounds`]: two-sided volume bounds in terms of the twist number.
//! - [`constructor`]: certified knots whose complements clear a target norm.
//!
//! Everything here is `no_std` and only needs `alloc`. Text formats that touch
//! files (PD codes, JSON, beta tables) live in the `twobridge` crate.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bounds;
pub mod constructor;
pub mod diagram;
pub mod rational;
pub mod two_bridge;

pub use bounds::{
    lackenby_bounds, norm_from_volume, volume_from_norm, BoundsError, VolumeBounds, V3,
};
pub use constructor::{
    construct, required_twist_number, verify_certificate, BetaTable, Certificate, CheckedFact,
    ConstructError, Verification, DELEGATED_HYPOTHESES,
};
pub use diagram::{
    compute_twist_number, enumerate_faces, is_alternating, is_prime_diagram, synthesize_diagram,
    DiagramError, Face, PlanarDiagram, TwistDecomposition,
};
pub use rational::{
    cf_to_fraction, fraction_to_cf, Fraction, FractionError, SequenceError, TwistSequence,
};
pub use two_bridge::{
    equivalent, is_torus_knot, normalize, torus_bridge_number, EquivalenceRule, KnotError,
    TwoBridgeKnot,
};
