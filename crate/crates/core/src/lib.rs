//! Self-avoiding walks on the hexagonal lattice, with exact verification of
//! the parafermionic generating-function identities.
//!
//! The lattice is the brick-wall embedding in `Z²` ([`lattice`]). Walks carry
//! direction labels and winding numbers ([`winding`]); the identities are
//! stated in a formal ring ([`series`]) and specialised into the cyclotomic
//! field `Q(ζ₄₈)` ([`cyclotomic`]). [`enumerate`] holds the search engine,
//! [`identity`] the checks built on it, and [`bounds`] the counting
//! sequences and their inequalities.
//!
//! ```
//! use hexwalk::domains::Domain;
//! use hexwalk::enumerate::Budget;
//! use hexwalk::identity::verify_prop1;
//!
//! let report = verify_prop1(&Domain::SlitPlane, Some(10), &Budget::unlimited()).unwrap();
//! assert!(report.verified);
//! ```

pub mod bounds;
pub mod cyclotomic;
pub mod domains;
pub mod enumerate;
pub mod identity;
pub mod lattice;
pub mod series;
pub mod winding;

pub use cyclotomic::CycloNum;
pub use domains::Domain;
pub use enumerate::Budget;
pub use identity::VerificationReport;
pub use lattice::{Direction, Edge, Vertex, Walk};
pub use series::TruncatedSeries;

/// The book's chapters, compiled so that their snippets run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/lattice.md")]
    mod lattice {}
    #[doc = include_str!("../../../book/src/winding.md")]
    mod winding {}
    #[doc = include_str!("../../../book/src/cyclotomic.md")]
    mod cyclotomic {}
    #[doc = include_str!("../../../book/src/series.md")]
    mod series {}
    #[doc = include_str!("../../../book/src/domains.md")]
    mod domains {}
    #[doc = include_str!("../../../book/src/enumeration.md")]
    mod enumeration {}
    #[doc = include_str!("../../../book/src/identities.md")]
    mod identities {}
    #[doc = include_str!("../../../book/src/bounds.md")]
    mod bounds {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
