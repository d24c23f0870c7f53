//! Exact cylindrical algebraic decomposition (CAD) over the rationals.
//!
//! The crate is organised around the classical projection/lifting pipeline:
//!
//! * [`poly`] — sparse multivariate polynomials with `BigRational` coefficients,
//!   gcds, resultants, discriminants and finest squarefree bases;
//! * [`upoly`] — dense integer univariate polynomials and real root isolation
//!   (Descartes bisection, with Sturm sequences available as a cross-check);
//! * [`algnum`] — real algebraic numbers as (squarefree defining polynomial,
//!   isolating interval) pairs;
//! * [`sample`] — exact sign determination and root isolation at sample points
//!   with algebraic coordinates (no primitive elements, gcd-based zero tests);
//! * [`projection`] — McCallum's operator, the reduced operator for equational
//!   constraints and the truth-table invariant operator;
//! * [`lifting`] — stack generation, cell indexing and full CAD construction;
//! * [`subcad`] — variety, layered, layered-variety and sub-TTICAD
//!   constructions, including the recursive layered procedure;
//! * [`formula`] / [`parse`] — quantifier-free Tarski formulae and the problem
//!   file format;
//! * [`complexity`] — exact evaluation of the asymptotic operation-count
//!   bounds and the double-logarithm comparison table;
//! * [`verify`] — grid-based sign-invariance oracle and structural checks;
//! * [`plot`] — SVG rendering of planar decompositions.

pub mod algnum;
pub mod complexity;
pub mod error;
pub mod formula;
pub mod interval;
pub mod jsonio;
pub mod lifting;
pub mod num;
pub mod parse;
pub mod plot;
pub mod poly;
pub mod projection;
pub mod sample;
pub mod subcad;
pub mod upoly;
pub mod vars;
pub mod verify;

pub use error::CadError;
pub use poly::Polynomial;
pub use vars::VarOrder;
