//! Exact-arithmetic ideal lattices.
//!
//! This crate computes with ideals in three settings, everywhere over checked
//! integer arithmetic (no floats, no silent wraparound):
//!
//! * [`zn`] — the full ideal lattice of Z/nZ: sums, products, intersections,
//!   idempotency, and an independent element-set view for cross-checking;
//! * [`quad`] — quadratic rings of integers: ideals in Hermite normal form,
//!   prime splitting, ideal arithmetic, and principality testing;
//! * [`finite_lattice`] — finite lattices as explicit tables, with law checks
//!   and the power-set ↔ ideal-lattice isomorphism for squarefree moduli;
//! * [`chains`] — ascending chains, radical chains over the ring of all
//!   algebraic integers, and bounded stationarity detection.
//!
//! [`arith`] holds the shared number theory, [`error`] the one error type.

pub mod arith;
pub mod chains;
pub mod error;
pub mod finite_lattice;
pub mod quad;
pub mod zn;

pub use error::{Error, Result};
