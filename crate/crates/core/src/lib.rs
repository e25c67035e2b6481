//! Prime spectra of finite direct product rings.
//!
//! Finite commutative rings are built explicitly ([`Ring`]), ideals are
//! stored extensionally ([`Ideal`]), and the spectrum is computed from the
//! atoms of the Boolean ring of idempotents ([`Spectrum`]). On top of that
//! sit the tame/wild classification of primes of products, ultrafilter
//! primes, filter-indexed localizations, a small ring-expression language
//! and a seeded property runner.

pub mod boolean;
pub mod dsl;
pub mod error;
pub mod harness;
pub mod ideal;
pub mod localization;
pub mod product;
pub mod ring;
pub mod spectrum;
pub mod ultrafilter;

pub use dsl::{parse_ring, DslError, HomExpr, RingExpr};
pub use boolean::{BooleanRing, SetRing, StoneIso, Subset};
pub use error::{Error, Limits, Result};
pub use ideal::Ideal;
pub use localization::{localize, LocalizedRing, MultiplicativeSet};
pub use product::{Classification, TameWitness};
pub use ring::{Elem, Fixture, Ring, RingHom, Value};
pub use spectrum::{spec, Spectrum, SpectrumPoint};
pub use ultrafilter::{BasePrimeChoice, Filter};
