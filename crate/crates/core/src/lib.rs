//! Knot projections as Gauss codes: invariants, first and third flat
//! Reidemeister moves, bounded class exploration and bracket polynomials.

pub mod corpus;
mod cover;
pub mod decompose;
pub mod embedding;
pub mod error;
pub mod explore;
pub mod invariants;
pub mod knots;
pub mod moves;
pub mod poly;
pub mod projection;
pub mod word;

pub use decompose::{connected_sum, is_prime, prime_decompose};
pub use embedding::{
    face_count, faces, is_realizable, realize, Face, FaceInventory, RotationChoice,
};
pub use error::{Error, Result};
pub use invariants::{
    cross_chord_number, h_invariant, interlacement, reduce_r1, trefoil_summand_count,
    trivializing_number, InterlacementGraph, InvariantReport,
};
pub use moves::{MoveKind, MoveSite};
pub use projection::KnotProjection;
pub use word::{ChordDiagram, CrossingLabel, DoubleOccurrenceWord};

/// Kauffman bracket values: Laurent polynomials in `A` over the integers.
pub type BracketPoly = poly::LaurentPoly<i64>;
