//! Exact symbolic computation in free pre-associative (dendriform) algebras.
//!
//! A pre-associative algebra carries two bilinear products `≻` and `≺` whose
//! sum is associative.  Working over the associative product `u * v` and the
//! half-product `u · v = u ≻ v`, every element of the free algebra on a finite
//! alphabet is a rational linear combination of *star words*
//! `u₁ * u₂ * … * u_k`, where each factor is a planar binary tree over the
//! alphabet.  This crate implements, on that basis:
//!
//! - the monomial orders on tree words and star words ([`words`]),
//! - exact polynomial arithmetic for `*`, `·`, `≻`, `≺` ([`polynomials`]),
//! - rewriting a polynomial to its normal form modulo a relation set
//!   ([`rewrite`]),
//! - the five composition types used to detect critical overlaps
//!   ([`compositions`]),
//! - bounded Gröbner–Shirshov checking and completion ([`gsb`]),
//! - ready-made relation families: Zinbiel quotients and universal envelopes
//!   of associative algebras ([`instances`]),
//! - an independent linear-algebra oracle for filtered ideal slices
//!   ([`oracle`]),
//! - a plain-text presentation format shared with the `preasgsb` binary
//!   ([`presentation`]).
//!
//! All coefficient arithmetic uses arbitrary-precision rationals; equality to
//! zero is exact everywhere.

pub mod compositions;
pub mod gsb;
pub mod instances;
pub mod oracle;
pub mod parse;
pub mod polynomials;
pub mod presentation;
pub mod rewrite;
pub mod words;

/// Errors shared across the crate.
///
/// Syntax and validation problems (anything a caller can fix by editing the
/// input) are distinguished from semantic failures such as a non-associative
/// multiplication table; the command-line tool maps the former to exit code 2
/// and the latter to exit code 1.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("line {line}, column {col}: {msg}")]
    Parse {
        line: usize,
        col: usize,
        msg: String,
    },
    #[error("line {line}, column {col}: unknown generator `{name}`")]
    UnknownGenerator {
        name: String,
        line: usize,
        col: usize,
    },
    #[error("alphabet must declare at least one generator")]
    EmptyAlphabet,
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("the zero polynomial has no leading word")]
    ZeroPolynomial,
    #[error("line {line}: relation normalizes to zero")]
    ZeroRelation { line: usize },
    #[error("multiplication table is not associative at the triple ({a}, {b}, {c})")]
    NonAssociativeTable { a: String, b: String, c: String },
    #[error("degree bound {bound} is below the maximal relation degree {required}")]
    BoundTooSmall { bound: usize, required: usize },
    #[error("relation {index} is degree-increasing; the filtered oracle needs every tail term bounded by the leading degree")]
    DegreeIncreasing { index: usize },
    #[error("polynomial degree {degree} exceeds the slice cap {cap}")]
    DegreeAboveCap { degree: usize, cap: usize },
    #[error("{0}")]
    Invalid(String),
}

impl Error {
    /// Exit code the command-line tool uses for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NonAssociativeTable { .. } => 1,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
