//! Dense univariate polynomials, rational functions, factorization over
//! finite fields and valuations at places.

mod factor;
mod place;
mod ratfunc;
pub mod text;

pub use factor::{factorize, is_irreducible, Factorization};
pub(crate) use factor::cmp_polys;
pub use place::{irreducibles_of_degree, place_lift_split, support, valuation, Place};
pub use ratfunc::{RatFunc, RatFuncField};

use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ring::{needs_parens, Conjugation, Field, Ring};

/// Polynomial with coefficients in ascending degree order.
///
/// Invariant: the last coefficient is nonzero; the zero polynomial has no
/// coefficients. Construct through [`PolyRing`] so the invariant holds.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

impl<E> Poly<E> {
    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn lead(&self) -> Option<&E> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> Option<&E> {
        self.coeffs.get(i)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }
}

/// The polynomial ring `R[var]`.
#[derive(Clone, Debug)]
pub struct PolyRing<R> {
    base: R,
    var: Arc<str>,
}

impl<R: Ring> PolyRing<R> {
    pub fn new(base: R, var: &str) -> Self {
        PolyRing {
            base,
            var: Arc::from(var),
        }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    /// Builds a polynomial from ascending coefficients, trimming zeros.
    pub fn from_coeffs(&self, mut coeffs: Vec<R::Elem>) -> Poly<R::Elem> {
        while coeffs.last().is_some_and(|c| self.base.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(&self, c: R::Elem) -> Poly<R::Elem> {
        self.from_coeffs(vec![c])
    }

    /// The variable itself.
    pub fn gen(&self) -> Poly<R::Elem> {
        self.monomial(self.base.one(), 1)
    }

    pub fn monomial(&self, c: R::Elem, k: usize) -> Poly<R::Elem> {
        if self.base.is_zero(&c) {
            return Poly { coeffs: Vec::new() };
        }
        let mut coeffs = vec![self.base.zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    /// Coefficient of `var^i`, zero beyond the degree.
    pub fn coeff(&self, p: &Poly<R::Elem>, i: usize) -> R::Elem {
        p.coeffs.get(i).cloned().unwrap_or_else(|| self.base.zero())
    }

    /// Applies `f` to every coefficient, landing in `target`.
    pub fn map_into<S: Ring>(
        &self,
        target: &PolyRing<S>,
        p: &Poly<R::Elem>,
        f: impl Fn(&R::Elem) -> S::Elem,
    ) -> Poly<S::Elem> {
        target.from_coeffs(p.coeffs.iter().map(f).collect())
    }

    pub fn scale(&self, c: &R::Elem, p: &Poly<R::Elem>) -> Poly<R::Elem> {
        self.from_coeffs(p.coeffs.iter().map(|a| self.base.mul(c, a)).collect())
    }

    /// Multiplies by `var^k`.
    pub fn shift(&self, p: &Poly<R::Elem>, k: usize) -> Poly<R::Elem> {
        if p.is_zero() {
            return p.clone();
        }
        let mut coeffs = vec![self.base.zero(); k];
        coeffs.extend(p.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn eval(&self, p: &Poly<R::Elem>, x: &R::Elem) -> R::Elem {
        p.coeffs
            .iter()
            .rev()
            .fold(self.base.zero(), |acc, c| self.base.add(&self.base.mul(&acc, x), c))
    }

    /// `f(g)`, the composition `f ∘ g`.
    pub fn compose(&self, f: &Poly<R::Elem>, g: &Poly<R::Elem>) -> Poly<R::Elem> {
        f.coeffs.iter().rev().fold(self.zero(), |acc, c| {
            let prod = self.mul(&acc, g);
            self.add(&prod, &self.constant(c.clone()))
        })
    }

    /// Evaluates `p` at an element of an algebra over the coefficient ring.
    pub fn eval_in<S: Ring>(
        &self,
        target: &S,
        p: &Poly<R::Elem>,
        x: &S::Elem,
        embed: impl Fn(&R::Elem) -> S::Elem,
    ) -> S::Elem {
        p.coeffs.iter().rev().fold(target.zero(), |acc, c| {
            target.add(&target.mul(&acc, x), &embed(c))
        })
    }

    pub fn derivative(&self, p: &Poly<R::Elem>) -> Poly<R::Elem> {
        self.from_coeffs(
            p.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| self.base.mul(&self.base.from_i64(i as i64), c))
                .collect(),
        )
    }
}

impl<R: Ring> Ring for PolyRing<R> {
    type Elem = Poly<R::Elem>;

    fn zero(&self) -> Self::Elem {
        Poly { coeffs: Vec::new() }
    }

    fn one(&self) -> Self::Elem {
        self.constant(self.base.one())
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c = self.base.add(c, s);
        }
        self.from_coeffs(coeffs)
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        Poly {
            coeffs: a.coeffs.iter().map(|c| self.base.neg(c)).collect(),
        }
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let n = a.len().max(b.len());
        let coeffs = (0..n)
            .map(|i| match (a.coeffs.get(i), b.coeffs.get(i)) {
                (Some(x), Some(y)) => self.base.sub(x, y),
                (Some(x), None) => x.clone(),
                (None, Some(y)) => self.base.neg(y),
                (None, None) => unreachable!(),
            })
            .collect();
        self.from_coeffs(coeffs)
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        let mut coeffs = vec![self.base.zero(); a.len() + b.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if self.base.is_zero(x) {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                let t = self.base.mul(x, y);
                coeffs[i + j] = self.base.add(&coeffs[i + j], &t);
            }
        }
        self.from_coeffs(coeffs)
    }

    fn from_bigint(&self, n: &BigInt) -> Self::Elem {
        self.constant(self.base.from_bigint(n))
    }

    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }

    fn format(&self, p: &Self::Elem) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in p.coeffs.iter().enumerate().rev() {
            if self.base.is_zero(c) {
                continue;
            }
            let term = if k == 0 {
                self.base.format(c)
            } else {
                let power = if k == 1 {
                    self.var.to_string()
                } else {
                    format!("{}^{}", self.var, k)
                };
                if self.base.is_one(c) {
                    power
                } else if self.base.is_one(&self.base.neg(c)) {
                    format!("-{power}")
                } else {
                    let s = self.base.format(c);
                    if needs_parens(&s) {
                        format!("({s})*{power}")
                    } else {
                        format!("{s}*{power}")
                    }
                }
            };
            if out.is_empty() {
                out = term;
            } else if let Some(rest) = term.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&term);
            }
        }
        out
    }
}

impl<F: Field> PolyRing<F> {
    pub fn monic(&self, p: &Poly<F::Elem>) -> Poly<F::Elem> {
        match p.lead() {
            None => p.clone(),
            Some(l) => {
                let li = self.base.inv(l).expect("nonzero leading coefficient");
                self.scale(&li, p)
            }
        }
    }

    pub fn is_monic(&self, p: &Poly<F::Elem>) -> bool {
        p.lead().is_some_and(|l| self.base.is_one(l))
    }

    /// Euclidean division: `a = q*b + r` with `deg r < deg b`.
    pub fn divmod(
        &self,
        a: &Poly<F::Elem>,
        b: &Poly<F::Elem>,
    ) -> Result<(Poly<F::Elem>, Poly<F::Elem>)> {
        let db = b.degree().ok_or(Error::DivisionByZeroPoly)?;
        let lead_inv = self.base.inv(b.lead().unwrap()).unwrap();
        let mut rem = a.coeffs.clone();
        let qlen = a.len().saturating_sub(db);
        let mut quot = vec![self.base.zero(); qlen];
        for i in (0..qlen).rev() {
            let c = self.base.mul(&rem[i + db], &lead_inv);
            if self.base.is_zero(&c) {
                continue;
            }
            for (j, bj) in b.coeffs.iter().enumerate() {
                let t = self.base.mul(&c, bj);
                rem[i + j] = self.base.sub(&rem[i + j], &t);
            }
            quot[i] = c;
        }
        rem.truncate(db);
        Ok((self.from_coeffs(quot), self.from_coeffs(rem)))
    }

    pub fn rem(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Result<Poly<F::Elem>> {
        Ok(self.divmod(a, b)?.1)
    }

    /// Quotient of an exact division; panics if `b` does not divide `a`.
    pub fn div_exact(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let (q, r) = self.divmod(a, b).expect("division by zero polynomial");
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn divides(&self, d: &Poly<F::Elem>, a: &Poly<F::Elem>) -> bool {
        self.rem(a, d).map(|r| r.is_zero()).unwrap_or(false)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Result<Poly<F::Elem>> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let r = self.rem(&x, &y)?;
            x = y;
            y = r;
        }
        Ok(self.monic(&x))
    }

    /// `base^e mod m`.
    pub fn pow_mod(&self, base: &Poly<F::Elem>, mut e: u128, m: &Poly<F::Elem>) -> Poly<F::Elem> {
        let mut b = self.rem(base, m).expect("nonzero modulus");
        let mut acc = self.rem(&self.one(), m).unwrap();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.rem(&self.mul(&acc, &b), m).unwrap();
            }
            e >>= 1;
            if e > 0 {
                b = self.rem(&self.mul(&b, &b), m).unwrap();
            }
        }
        acc
    }

    /// Multiplicity of `pi` in `a` (`a` nonzero, `pi` nonconstant).
    pub fn multiplicity(&self, a: &Poly<F::Elem>, pi: &Poly<F::Elem>) -> usize {
        let mut count = 0;
        let mut cur = a.clone();
        loop {
            let (q, r) = self.divmod(&cur, pi).expect("nonzero divisor");
            if !r.is_zero() || cur.is_zero() {
                return count;
            }
            cur = q;
            count += 1;
        }
    }
}

impl<F: Conjugation> PolyRing<F> {
    /// Coefficient-wise conjugation.
    pub fn conj(&self, p: &Poly<F::Elem>) -> Poly<F::Elem> {
        Poly {
            coeffs: p.coeffs.iter().map(|c| self.base.conj(c)).collect(),
        }
    }
}
