//! Exact computation with stable Auslander–Reiten quivers of
//! representation-finite self-injective algebras: quotient translation
//! quivers, mesh categories over small fields, configurations, and the
//! combinatorial functor checks surrounding the nonstandard algebras Λ(m).

pub mod cli;
pub mod configuration;
pub mod dynkin;
pub mod field;
pub mod functors;
pub mod pathcat;
pub mod tquiver;
