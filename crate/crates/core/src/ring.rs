//! Ring and field abstractions.
//!
//! Elements are plain values; all arithmetic goes through a ring object that
//! carries whatever context the elements need (a modulus, an extension
//! polynomial, a variable name). This lets finite fields with runtime moduli,
//! polynomial rings and fraction fields nest freely: `PolyRing<RatFuncField<Fq>>`
//! is the ring of polynomials in `X` over `F_q(x)`.
//!
//! Integer and rational coefficient domains are generic over the scalar type
//! through [`Scalar`], which builds on `num-traits`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One, ToPrimitive, Zero};

/// A commutative ring with identity.
pub trait Ring: Clone + fmt::Debug {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// Image of an integer under the canonical map `Z -> R`.
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;

    /// Characteristic, 0 for characteristic zero.
    fn characteristic(&self) -> u64;

    /// Human-readable rendering of an element.
    fn format(&self, a: &Self::Elem) -> String;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_bigint(&BigInt::from(n))
    }

    fn pow(&self, a: &Self::Elem, mut e: u128) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    fn sum<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        items.into_iter().fold(self.zero(), |acc, x| self.add(&acc, x))
    }
}

/// A commutative field.
pub trait Field: Ring {
    /// Multiplicative inverse; `None` exactly for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }
}

/// A finite field with an enumeration of its elements.
///
/// `index` is a bijection onto `0..order()`, with `0 -> zero` and
/// `1 -> one`; it fixes every "least" or "lexicographic" choice in the crate.
pub trait FiniteField: Field {
    fn order(&self) -> u128;
    fn index(&self, a: &Self::Elem) -> u128;
    fn from_index(&self, i: u128) -> Self::Elem;
}

/// A field carrying an involutive automorphism `sigma`.
pub trait Conjugation: Field {
    fn conj(&self, a: &Self::Elem) -> Self::Elem;
}

/// Scalar types usable as exact coefficient domains of characteristic zero.
pub trait Scalar: Num + Clone + fmt::Debug + fmt::Display {
    fn from_bigint(n: &BigInt) -> Self;
}

/// Scalars that form a field.
pub trait ScalarField: Scalar {
    fn recip_checked(&self) -> Option<Self>;
}

impl Scalar for BigInt {
    fn from_bigint(n: &BigInt) -> Self {
        n.clone()
    }
}

impl Scalar for BigRational {
    fn from_bigint(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }
}

impl ScalarField for BigRational {
    fn recip_checked(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Scalar for i64 {
    fn from_bigint(n: &BigInt) -> Self {
        n.to_i64().expect("integer does not fit in i64")
    }
}

impl Scalar for i128 {
    fn from_bigint(n: &BigInt) -> Self {
        n.to_i128().expect("integer does not fit in i128")
    }
}

/// The ring of scalars of type `T` (for instance `Z` as `Scalars<BigInt>`).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Scalars<T>(std::marker::PhantomData<T>);

impl<T> Scalars<T> {
    pub fn new() -> Self {
        Scalars(std::marker::PhantomData)
    }
}

impl<T: Scalar> Ring for Scalars<T> {
    type Elem = T;

    fn zero(&self) -> T {
        T::zero()
    }
    fn one(&self) -> T {
        T::one()
    }
    fn is_zero(&self, a: &T) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &T) -> bool {
        a.is_one()
    }
    fn add(&self, a: &T, b: &T) -> T {
        a.clone() + b.clone()
    }
    fn neg(&self, a: &T) -> T {
        T::zero() - a.clone()
    }
    fn sub(&self, a: &T, b: &T) -> T {
        a.clone() - b.clone()
    }
    fn mul(&self, a: &T, b: &T) -> T {
        a.clone() * b.clone()
    }
    fn from_bigint(&self, n: &BigInt) -> T {
        T::from_bigint(n)
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn format(&self, a: &T) -> String {
        a.to_string()
    }
}

impl<T: ScalarField> Field for Scalars<T> {
    fn inv(&self, a: &T) -> Option<T> {
        a.recip_checked()
    }
}

/// Binomial coefficient over the integers.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Whether a rendered element needs parentheses when used as a factor.
pub(crate) fn needs_parens(s: &str) -> bool {
    let body = s.strip_prefix('-').unwrap_or(s);
    body.contains(['+', '-', '/', ' '])
}
