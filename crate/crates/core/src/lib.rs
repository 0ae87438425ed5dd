//! Primitive central idempotents of the rational group algebra QG of a
//! finite group G, computed from conjugacy classes of cyclic subgroups and
//! checked against the Galois-descent formula.
//!
//! The pipeline is
//! [`enumerate_group`](group::enumerate_group) →
//! [`conjugacy_classes`](group::conjugacy_classes) →
//! [`cyclic_subgroup_classes`](subgroups::cyclic_subgroup_classes) and
//! [`character_table`](chartable::character_table) →
//! [`galois_orbits`](chartable::galois_orbits) →
//! [`full_decomposition`](idempotents::full_decomposition).

pub mod algebra;
pub mod chartable;
pub mod cyclotomic;
pub mod error;
pub mod group;
pub mod idempotents;
pub mod subgroups;

pub use error::{Error, Result};

/// Exact rational scalar.
pub type Rational = num_rational::BigRational;
