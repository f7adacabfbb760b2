//! Integral closure and Frobenius closure of ideals, their special parts,
//! and instance checks of the axioms relating them.
//!
//! * [`monomial`]: exponent vectors and monomial ideals.
//! * [`newton`]: integral closure and its special part by exact LP.
//! * [`oracle`]: an LP-free brute-force membership oracle.
//! * [`poly`], [`groebner`]: polynomials over F_p, Gröbner bases, quotient rings.
//! * [`frobenius`]: Frobenius closure, its special part, independence, spread.
//! * [`framework`]: closure operations and axiom, reduction, and containment checks.
//! * [`parse`]: text grammars; [`cli`]: the `closure` command.

pub mod cli;
pub mod error;
pub mod framework;
pub mod frobenius;
pub mod groebner;
pub mod lp;
pub mod monomial;
pub mod newton;
pub mod oracle;
pub mod parse;
pub mod poly;

pub use error::{Error, ParseError, Result};
pub use framework::ClosureOperation;
pub use frobenius::{BoundedVerdict, FrobeniusWitness, WitnessKind};
pub use groebner::{GroebnerBasis, QuotientRing};
pub use lp::Rational;
pub use monomial::{ExponentVector, MaximalIdeal, MonomialIdeal};
pub use newton::{ConvexCertificate, MembershipResult, Verdict};
pub use poly::PolyFp;
