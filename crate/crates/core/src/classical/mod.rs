//! The classical (q = 1) geometry: conformal vector fields, finite conformal
//! maps, the big cell of Gr(2,4), the superflag and its super Poincaré
//! action, and specialization of quantum presentations at q = 1.

pub mod bosonic;
pub mod conformal;
pub mod limit;
pub mod maps;
pub mod superflag;
pub mod superpoincare;
pub mod symbols;

pub use bosonic::{big_cell_reduce, pauli_map, poincare_action, PoincareElement};
pub use conformal::{bracket_closure_table, conformal_generator, ConformalKind, PolyVectorField, StructureConstants};
pub use limit::{specialize_q1, Specializer};
pub use maps::{special_conformal_map, RationalMap};
pub use superflag::{superflag_reduce, FlagChart, SuperflagReduction};
pub use superpoincare::{super_poincare_chiral_action, ChiralPoint, SuperPoincare};
