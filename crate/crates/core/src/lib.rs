//! Cyclic extensions of rational function fields `F_q(x)` of degree `l`
//! with `q = -1 mod l`.
//!
//! The crate builds the tower `F_p ⊂ F_q ⊂ F_{q^2} ∋ xi`, the generic
//! polynomials `P^l_{u,alpha}`, the Kummer descent from `F_{q^2}(x)` with an
//! explicit model of the degree-`2l` algebra, the isomorphism classifier and
//! the ramification table of a constructed extension. All arithmetic is exact.

pub mod error;
pub mod ff;
pub mod generic_poly;
pub mod json;
pub mod kummer;
pub mod poly;
pub mod ramification;
pub mod ring;

pub use error::{Error, Result};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Integers as a coefficient ring.
pub type ZZ = ring::Scalars<BigInt>;
/// Rationals as a coefficient field.
pub type QQ = ring::Scalars<BigRational>;
/// `Z[u]`, the coefficient ring of the symbolic `Q^l_u`.
pub type ZZu = poly::PolyRing<ZZ>;
/// `Z[u][alpha]`, the coefficient ring of the symbolic `P^l_{u,alpha}`.
pub type ZZuAlpha = poly::PolyRing<ZZu>;

pub type FqPolyRing = poly::PolyRing<ff::Fq>;
pub type Fq2PolyRing = poly::PolyRing<ff::Fq2>;
pub type FqPoly = poly::Poly<ff::FqElem>;
pub type Fq2Poly = poly::Poly<ff::Fq2Elem>;
pub use kummer::{Fq2RatFunc, FqRatFunc, K, KXi};
