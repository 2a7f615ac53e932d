//! Exact combinatorics of finite Coxeter groups: root data and duality,
//! group enumeration, exact character tables, parabolic restriction and
//! induction, Iwahori–Hecke Schur elements, fake degrees, cyclotomic
//! arithmetic, and a checker for restriction-ambiguous character pairs.
//!
//! Everything is computed in exact arithmetic: arbitrary-precision integers
//! and rationals, and real cyclotomic extensions `Q(2cos(2pi/n))` where
//! character values are irrational. No floating point anywhere.
//!
//! The crate feature `parallel` (default) backs the data-parallel inner
//! loops (class-matrix construction, per-type checks, Molien sums) with
//! rayon; without it every code path falls back to a sequential
//! implementation with identical results.

pub mod chartab;
pub mod coxeter;
pub mod cyclo;
pub mod error;
pub mod field;
pub mod hcseries;
pub mod hecke;
pub(crate) mod par;
pub mod rootdata;

pub use chartab::{char_table, CharacterTable};
pub use coxeter::CoxeterGroup;
pub use cyclo::{cyclotomic, zsigmondy, CyclotomicProduct, LaurentPoly};
pub use error::{Error, Result};
pub use field::{AlgNum, RealCycField};
pub use rootdata::{build_root_datum, dualize, CartanType, RootDatum};
