//! Cyclic codes of length `2^s` over `R = GF(2^m) + u GF(2^m) + u^2 GF(2^m)`.
//!
//! The crate classifies ideals of `S = R[x]/(x^(2^s) - 1)` into eight
//! families ([`codespec`]), evaluates closed-form Hamming and Lee distances
//! for them ([`formulas`]), and checks those values against an exhaustive
//! oracle on the binary Gray image ([`oracle`]).
//!
//! ```
//! use lee_cyclic::codespec::{CodeKind, CodeSpec};
//! use lee_cyclic::formulas::{lee_distance, DistanceKind};
//! use lee_cyclic::gf2m::FieldCtx;
//!
//! let ctx = FieldCtx::new(1).unwrap();
//! let spec = CodeSpec::new(2, ctx, CodeKind::Type2 { l: 1 });
//! let d = lee_distance(&spec).unwrap();
//! assert_eq!(d.kind, DistanceKind::Exact);
//! assert_eq!(d.value, Some(4));
//! ```

pub mod chain_ring;
pub mod codespec;
pub mod error;
pub mod formulas;
pub mod gf2m;
pub mod oracle;
pub mod polyring;
pub mod sweep;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/field.md")]
    mod field {}
    #[doc = include_str!("../../../book/src/ring.md")]
    mod ring {}
    #[doc = include_str!("../../../book/src/codes.md")]
    mod codes {}
    #[doc = include_str!("../../../book/src/distances.md")]
    mod distances {}
    #[doc = include_str!("../../../book/src/oracle.md")]
    mod oracle {}
    #[doc = include_str!("../../../book/src/sweeps.md")]
    mod sweeps {}
    #[doc = include_str!("../../../book/src/disagreements.md")]
    mod disagreements {}
}
