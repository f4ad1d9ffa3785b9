//! The generic polynomials `P^l_{u,alpha}(X) = X^l + sum_s c[s][iota] u^s X^(l-2s) - alpha`
//! and `Q^l_u = P^l_{u,0}`.
//!
//! Coefficients are computed exactly over the integers and mapped into any
//! ring on demand, so the same table serves `Z[u, alpha]`, `Q(u, alpha)`,
//! finite fields and function fields over them.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::{Poly, PolyRing};
use crate::ring::{binomial, Field, Ring, Scalar};

/// The table `c[s][j]`, `0 <= s <= j <= iota`, for `l = 2*iota + r`.
#[derive(Clone, Debug, PartialEq)]
pub struct CoeffTable<T = BigInt> {
    pub ell: u64,
    pub r: u64,
    pub iota: usize,
    /// `rows[j][s] = c[s][j]`.
    rows: Vec<Vec<T>>,
}

impl<T: Scalar> CoeffTable<T> {
    pub fn new(ell: u64) -> Self {
        let r = ell % 2;
        let iota = (ell / 2) as usize;
        let mut rows: Vec<Vec<T>> = Vec::with_capacity(iota + 1);
        for j in 0..=iota {
            let mut row = Vec::with_capacity(j + 1);
            row.push(T::one());
            let n = 2 * j as u64 + r;
            for s in 1..=j {
                let mut acc = T::zero();
                for k in 1..=s {
                    let b = T::from_bigint(&binomial(n, k as u64));
                    acc = acc + b * rows[j - k][s - k].clone();
                }
                row.push(T::zero() - acc);
            }
            rows.push(row);
        }
        CoeffTable { ell, r, iota, rows }
    }

    /// `c[s][j]`; panics outside `0 <= s <= j <= iota`.
    pub fn get(&self, s: usize, j: usize) -> &T {
        &self.rows[j][s]
    }

    /// The coefficients `c[s][iota]` for `s = 0..=iota` that enter `P^l`.
    pub fn top_row(&self) -> &[T] {
        &self.rows[self.iota]
    }
}

/// Integer coefficient table.
pub fn coeff_table(ell: u64) -> CoeffTable<BigInt> {
    CoeffTable::new(ell)
}

/// `P^l_{u,alpha}` over a concrete ring, with its data.
#[derive(Clone, Debug, PartialEq)]
pub struct GenericPolynomial<E> {
    pub ell: u64,
    pub u: E,
    pub alpha: E,
    /// Monic of degree `l`, ascending in `X`.
    pub poly: Poly<E>,
}

/// `P^l_{u,alpha}` in `R[X]`.
pub fn build_p<R: Ring>(ring: &R, ell: u64, u: &R::Elem, alpha: &R::Elem) -> GenericPolynomial<R::Elem> {
    let table = coeff_table(ell);
    let x = PolyRing::new(ring.clone(), "X");
    let l = ell as usize;
    let mut coeffs = vec![ring.zero(); l + 1];
    let mut u_pow = ring.one();
    for (s, c) in table.top_row().iter().enumerate() {
        let term = ring.mul(&ring.from_bigint(c), &u_pow);
        coeffs[l - 2 * s] = ring.add(&coeffs[l - 2 * s], &term);
        u_pow = ring.mul(&u_pow, u);
    }
    coeffs[0] = ring.sub(&coeffs[0], alpha);
    GenericPolynomial {
        ell,
        u: u.clone(),
        alpha: alpha.clone(),
        poly: x.from_coeffs(coeffs),
    }
}

/// `Q^l_u = P^l_{u,0}`.
pub fn build_q<R: Ring>(ring: &R, ell: u64, u: &R::Elem) -> Poly<R::Elem> {
    build_p(ring, ell, u, &ring.zero()).poly
}

/// `D_l(X, u)` from `D_0 = 2`, `D_1 = X`, `D_n = X D_(n-1) - u D_(n-2)`.
pub fn dickson_oracle<R: Ring>(ring: &R, ell: u64, u: &R::Elem) -> Poly<R::Elem> {
    let x = PolyRing::new(ring.clone(), "X");
    let mut prev = x.constant(ring.from_i64(2));
    let mut cur = x.gen();
    if ell == 0 {
        return prev;
    }
    for _ in 1..ell {
        let next = x.sub(&x.shift(&cur, 1), &x.scale(u, &prev));
        prev = cur;
        cur = next;
    }
    cur
}

/// `P_{l_t, u^(l/l_t), alpha}(... Q_{l_2, u^(l_1)}(Q_{l_1, u}(X)) ...)`.
pub fn compose_chain<R: Ring>(
    ring: &R,
    factors: &[u64],
    ell: u64,
    u: &R::Elem,
    alpha: &R::Elem,
) -> Result<Poly<R::Elem>> {
    if let Some(&bad) = factors.iter().find(|&&f| f < 2) {
        return Err(Error::InvalidFactor(bad));
    }
    let product = factors
        .iter()
        .try_fold(1u64, |acc, &f| acc.checked_mul(f))
        .ok_or(Error::Overflow)?;
    if product != ell {
        return Err(Error::FactorProductMismatch { product, ell });
    }
    let x = PolyRing::new(ring.clone(), "X");
    let Some((&last, inner)) = factors.split_last() else {
        return Ok(build_p(ring, 1, u, alpha).poly);
    };
    let mut acc = x.gen();
    let mut u_i = u.clone();
    for &l in inner {
        acc = x.compose(&build_q(ring, l, &u_i), &acc);
        u_i = ring.pow(&u_i, l as u128);
    }
    Ok(x.compose(&build_p(ring, last, &u_i, alpha).poly, &acc))
}

/// Every ordered factorization of `n` into factors `>= 2`.
pub fn ordered_factorizations(n: u64) -> Vec<Vec<u64>> {
    if n == 1 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for d in 2..=n {
        if n.is_multiple_of(d) {
            for mut rest in ordered_factorizations(n / d) {
                rest.insert(0, d);
                out.push(rest);
            }
        }
    }
    out
}

/// Evidence for `P^l_{u,alpha}(X) = u^(l/2) * P^(l/2)_{1, alpha/u^(l/2)}((X^2 - 2u)/u)`.
#[derive(Clone, Debug, PartialEq)]
pub struct HalvingCertificate<E> {
    /// `u^(l/2)`.
    pub scale: E,
    /// `(X^2 - 2u)/u`.
    pub substitution: Poly<E>,
    /// Whether both sides agree as polynomials in `X`.
    pub holds: bool,
}

/// Reduces an even-degree generic polynomial to one of half the degree with `u = 1`.
pub fn halve_even<F: Field>(
    field: &F,
    ell: u64,
    u: &F::Elem,
    alpha: &F::Elem,
) -> Result<(GenericPolynomial<F::Elem>, HalvingCertificate<F::Elem>)> {
    if !ell.is_multiple_of(2) {
        return Err(Error::OddEll(ell));
    }
    let u_inv = field.inv(u).ok_or(Error::ZeroU)?;
    let half = ell / 2;
    let scale = field.pow(u, half as u128);
    let beta = field.div(alpha, &scale).unwrap();
    let reduced = build_p(field, half, &field.one(), &beta);
    let x = PolyRing::new(field.clone(), "X");
    let two_u = field.mul(&field.from_i64(2), u);
    let substitution = x.scale(&u_inv, &x.from_coeffs(vec![field.neg(&two_u), field.zero(), field.one()]));
    let rhs = x.scale(&scale, &x.compose(&reduced.poly, &substitution));
    let lhs = build_p(field, ell, u, alpha).poly;
    let holds = lhs == rhs;
    Ok((
        reduced,
        HalvingCertificate {
            scale,
            substitution,
            holds,
        },
    ))
}

/// Substitutes `u = wv`, `alpha = w^l + v^l`, `X = w + v` into `P^l` over
/// `R[w][v]` and reports whether the result vanishes.
pub fn bivariate_identity_check<R: Ring>(ell: u64, coeffs: &R) -> bool {
    let w_ring = PolyRing::new(coeffs.clone(), "w");
    let wv = PolyRing::new(w_ring.clone(), "v");
    let w = wv.constant(w_ring.gen());
    let v = wv.gen();
    let u = wv.mul(&w, &v);
    let alpha = wv.add(&wv.pow(&w, ell as u128), &wv.pow(&v, ell as u128));
    let x = wv.add(&w, &v);
    let p = build_p(&wv, ell, &u, &alpha).poly;
    let x_ring = PolyRing::new(wv.clone(), "X");
    x_ring.eval(&p, &x).is_zero()
}

/// `P^l` written symbolically in `u` and `alpha`, e.g. `X^3 - 3*u*X - alpha`.
pub fn format_symbolic(ell: u64) -> String {
    let table = coeff_table(ell);
    let l = ell as usize;
    let mut out = power("X", l);
    for (s, c) in table.top_row().iter().enumerate().skip(1) {
        let mag = c.magnitude().to_string();
        let factors: Vec<String> = [mag, power("u", s), power("X", l - 2 * s)]
            .into_iter()
            .filter(|f| !f.is_empty() && f != "1")
            .collect();
        let body = if factors.is_empty() { "1".to_string() } else { factors.join("*") };
        let sign = if c.sign() == num_bigint::Sign::Minus { " - " } else { " + " };
        out.push_str(sign);
        out.push_str(&body);
    }
    out.push_str(" - alpha");
    out
}

/// Reference forms of `P^l` for small `l`, as rendered by [`format_symbolic`].
pub const REFERENCE_FORMS: [(u64, &str); 10] = [
    (3, "X^3 - 3*u*X - alpha"),
    (5, "X^5 - 5*u*X^3 + 5*u^2*X - alpha"),
    (7, "X^7 - 7*u*X^5 + 14*u^2*X^3 - 7*u^3*X - alpha"),
    (9, "X^9 - 9*u*X^7 + 27*u^2*X^5 - 30*u^3*X^3 + 9*u^4*X - alpha"),
    (11, "X^11 - 11*u*X^9 + 44*u^2*X^7 - 77*u^3*X^5 + 55*u^4*X^3 - 11*u^5*X - alpha"),
    (13, "X^13 - 13*u*X^11 + 65*u^2*X^9 - 156*u^3*X^7 + 182*u^4*X^5 - 91*u^5*X^3 + 13*u^6*X - alpha"),
    (2, "X^2 - 2*u - alpha"),
    (4, "X^4 - 4*u*X^2 + 2*u^2 - alpha"),
    (6, "X^6 - 6*u*X^4 + 9*u^2*X^2 - 2*u^3 - alpha"),
    (8, "X^8 - 8*u*X^6 + 20*u^2*X^4 - 16*u^3*X^2 + 2*u^4 - alpha"),
];

fn power(var: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{k}"),
    }
}
