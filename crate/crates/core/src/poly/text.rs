//! Text syntax for polynomials and rational functions.
//!
//! A polynomial is a sum of terms `c*x^k`, `c*x`, `x^k`, `x` or `c`, joined
//! by `+` and `-`, with integer coefficients mapped into the coefficient
//! field. Whitespace is ignored. A rational function is `num / den`, where
//! either side may be wrapped in parentheses.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Poly, PolyRing, RatFunc, RatFuncField};
use crate::error::{Error, Result};
use crate::ring::{Field, Ring};

pub fn parse_poly<R: Ring>(ring: &PolyRing<R>, text: &str) -> Result<Poly<R::Elem>> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let s = strip_parens(&s);
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let var = ring.var();
    let mut coeffs: Vec<BigInt> = Vec::new();
    let mut rest = s;
    let mut first = true;
    while !rest.is_empty() {
        let mut sign = BigInt::one();
        if let Some(r) = rest.strip_prefix('+') {
            rest = r;
        } else if let Some(r) = rest.strip_prefix('-') {
            sign = -sign;
            rest = r;
        } else if !first {
            return Err(Error::Parse(format!("expected '+' or '-' before '{rest}'")));
        }
        first = false;
        let end = rest.find(['+', '-']).unwrap_or(rest.len());
        let (term, tail) = rest.split_at(end);
        let (c, k) = parse_term(term, var)?;
        if coeffs.len() <= k {
            coeffs.resize(k + 1, BigInt::zero());
        }
        coeffs[k] += sign * c;
        rest = tail;
    }
    Ok(ring.from_coeffs(coeffs.iter().map(|c| ring.base().from_bigint(c)).collect()))
}

fn parse_term(term: &str, var: &str) -> Result<(BigInt, usize)> {
    let bad = || Error::Parse(format!("malformed term '{term}'"));
    if term.is_empty() {
        return Err(bad());
    }
    let (coef, power) = match term.find(var) {
        None => (term, None),
        Some(i) => {
            let coef = term[..i].strip_suffix('*').unwrap_or(&term[..i]);
            (coef, Some(&term[i + var.len()..]))
        }
    };
    let c = if coef.is_empty() {
        BigInt::one()
    } else {
        coef.parse::<BigInt>().map_err(|_| bad())?
    };
    let k = match power {
        None => 0,
        Some("") => 1,
        Some(p) => p
            .strip_prefix('^')
            .and_then(|e| e.parse::<usize>().ok())
            .ok_or_else(bad)?,
    };
    Ok((c, k))
}

fn strip_parens(s: &str) -> &str {
    match s.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
        Some(inner) if !inner.contains(['(', ')']) => inner,
        _ => s,
    }
}

pub fn parse_ratfunc<F: Field>(k: &RatFuncField<F>, text: &str) -> Result<RatFunc<F::Elem>> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    match s.split_once('/') {
        None => Ok(k.from_poly(parse_poly(k.poly_ring(), &s)?)),
        Some((n, d)) => {
            let num = parse_poly(k.poly_ring(), n)?;
            let den = parse_poly(k.poly_ring(), d)?;
            k.frac(num, den)
        }
    }
}
