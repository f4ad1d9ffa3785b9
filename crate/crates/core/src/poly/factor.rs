//! Factorization over finite fields: squarefree decomposition, distinct-degree
//! splitting and Cantor-Zassenhaus equal-degree splitting.

use std::cmp::Ordering;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Poly, PolyRing};
use crate::error::{Error, Result};
use crate::ff::prime_factors;
use crate::ring::{FiniteField, Ring};

/// `lead * prod factor^mult`, factors monic, irreducible and distinct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization<E> {
    pub lead: E,
    pub factors: Vec<(Poly<E>, usize)>,
}

impl<E: Clone + PartialEq + std::fmt::Debug> Factorization<E> {
    /// Multiplies the factorization back out.
    pub fn expand<F: FiniteField<Elem = E>>(&self, ring: &PolyRing<F>) -> Poly<E> {
        self.factors.iter().fold(ring.constant(self.lead.clone()), |acc, (f, m)| {
            ring.mul(&acc, &ring.pow(f, *m as u128))
        })
    }
}

/// Rabin's test. Constants and the zero polynomial are not irreducible.
pub fn is_irreducible<F: FiniteField>(ring: &PolyRing<F>, f: &Poly<F::Elem>) -> bool {
    let n = match f.degree() {
        None | Some(0) => return false,
        Some(1) => return true,
        Some(n) => n,
    };
    let f = ring.monic(f);
    let q = ring.base().order();
    let x = ring.gen();
    // frob[k] = x^(q^k) mod f
    let mut frob = Vec::with_capacity(n + 1);
    frob.push(x.clone());
    for k in 1..=n {
        let next = ring.pow_mod(&frob[k - 1], q, &f);
        frob.push(next);
    }
    if frob[n] != x {
        return false;
    }
    prime_factors(n as u64).into_iter().all(|r| {
        let h = ring.sub(&frob[n / r as usize], &x);
        ring.gcd(&h, &f).unwrap().degree() == Some(0)
    })
}

/// Complete factorization of a nonzero polynomial.
pub fn factorize<F: FiniteField>(ring: &PolyRing<F>, f: &Poly<F::Elem>) -> Result<Factorization<F::Elem>> {
    let lead = f.lead().ok_or(Error::ZeroPolynomial)?.clone();
    let monic = ring.monic(f);
    let mut rng = ChaCha8Rng::seed_from_u64(fnv_seed(ring, &monic));
    let mut factors = Vec::new();
    for (sqf, mult) in squarefree(ring, &monic) {
        for (g, d) in distinct_degree(ring, &sqf) {
            for h in equal_degree(ring, &g, d, &mut rng) {
                factors.push((h, mult));
            }
        }
    }
    factors.sort_by(|a, b| cmp_polys(ring.base(), &a.0, &b.0));
    Ok(Factorization { lead, factors })
}

/// Degree first, then coefficient indices from the constant term up.
pub(crate) fn cmp_polys<F: FiniteField>(field: &F, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| {
        a.coeffs()
            .iter()
            .map(|c| field.index(c))
            .cmp(b.coeffs().iter().map(|c| field.index(c)))
    })
}

fn fnv_seed<F: FiniteField>(ring: &PolyRing<F>, f: &Poly<F::Elem>) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for c in f.coeffs() {
        for byte in ring.base().index(c).to_le_bytes() {
            h ^= byte as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
    }
    h
}

fn is_const<E>(f: &Poly<E>) -> bool {
    f.degree() == Some(0)
}

/// Squarefree decomposition of a monic polynomial: pairs `(g_i, i)` with
/// `f = prod g_i^i` and the `g_i` squarefree and pairwise coprime.
fn squarefree<F: FiniteField>(ring: &PolyRing<F>, f: &Poly<F::Elem>) -> Vec<(Poly<F::Elem>, usize)> {
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let p = ring.base().characteristic() as usize;
    let d = ring.derivative(f);
    let mut c = if d.is_zero() { f.clone() } else { ring.gcd(f, &d).unwrap() };
    let mut w = ring.div_exact(f, &c);
    let mut i = 1;
    while !is_const(&w) {
        let y = ring.gcd(&w, &c).unwrap();
        let fac = ring.div_exact(&w, &y);
        if !is_const(&fac) {
            out.push((fac, i));
        }
        c = ring.div_exact(&c, &y);
        w = y;
        i += 1;
    }
    if !is_const(&c) {
        let root = pth_root(ring, &c);
        for (g, m) in squarefree(ring, &root) {
            out.push((g, m * p));
        }
    }
    out
}

// `c` has nonzero coefficients only in degrees divisible by p.
fn pth_root<F: FiniteField>(ring: &PolyRing<F>, c: &Poly<F::Elem>) -> Poly<F::Elem> {
    let field = ring.base();
    let p = field.characteristic() as usize;
    let e = field.order() / p as u128;
    let coeffs = c.coeffs().iter().step_by(p).map(|a| field.pow(a, e)).collect();
    ring.from_coeffs(coeffs)
}

/// Splits a squarefree monic polynomial into products of irreducibles of equal degree.
fn distinct_degree<F: FiniteField>(ring: &PolyRing<F>, f: &Poly<F::Elem>) -> Vec<(Poly<F::Elem>, usize)> {
    let q = ring.base().order();
    let x = ring.gen();
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = x.clone();
    let mut d = 1;
    while rest.degree().unwrap_or(0) >= 2 * d {
        h = ring.pow_mod(&h, q, &rest);
        let g = ring.gcd(&ring.sub(&h, &x), &rest).unwrap();
        if !is_const(&g) {
            rest = ring.div_exact(&rest, &g);
            h = ring.rem(&h, &rest).unwrap();
            out.push((g, d));
        }
        d += 1;
    }
    if let Some(deg) = rest.degree().filter(|&k| k > 0) {
        out.push((rest, deg));
    }
    out
}

fn equal_degree<F: FiniteField>(
    ring: &PolyRing<F>,
    f: &Poly<F::Elem>,
    d: usize,
    rng: &mut ChaCha8Rng,
) -> Vec<Poly<F::Elem>> {
    let n = f.degree().unwrap();
    if n == d {
        return vec![f.clone()];
    }
    let field = ring.base();
    loop {
        let a = ring.from_coeffs((0..n).map(|_| field.from_index(rng.gen_range(0..field.order()))).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = split_map(ring, &a, f, d);
        let g = ring.gcd(&b, f).unwrap();
        if !is_const(&g) && g.degree() != f.degree() {
            let h = ring.div_exact(f, &g);
            let mut out = equal_degree(ring, &g, d, rng);
            out.extend(equal_degree(ring, &h, d, rng));
            return out;
        }
    }
}

// Odd q: a^((q^d-1)/2) - 1. Even q: the absolute trace of F_{q^d} applied to a.
fn split_map<F: FiniteField>(ring: &PolyRing<F>, a: &Poly<F::Elem>, f: &Poly<F::Elem>, d: usize) -> Poly<F::Elem> {
    let q = ring.base().order();
    if ring.base().characteristic() == 2 {
        let bits = q.trailing_zeros() as usize * d;
        let mut term = ring.rem(a, f).unwrap();
        let mut acc = term.clone();
        for _ in 1..bits {
            term = ring.rem(&ring.mul(&term, &term), f).unwrap();
            acc = ring.add(&acc, &term);
        }
        return acc;
    }
    // (q^d - 1)/2 = (1 + q + ... + q^(d-1)) * (q - 1)/2
    let mut term = ring.rem(a, f).unwrap();
    let mut norm = term.clone();
    for _ in 1..d {
        term = ring.pow_mod(&term, q, f);
        norm = ring.rem(&ring.mul(&norm, &term), f).unwrap();
    }
    let b = ring.pow_mod(&norm, (q - 1) / 2, f);
    ring.sub(&b, &ring.one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::{Fq, Fq2};
    use proptest::prelude::*;

    fn ring(q_p: u64, n: usize) -> PolyRing<Fq> {
        PolyRing::new(Fq::new(q_p, n).unwrap(), "x")
    }

    fn brute_irreducible(r: &PolyRing<Fq>, f: &Poly<u64>) -> bool {
        // no monic factor of degree 1..=deg/2
        let n = f.degree().unwrap();
        let q = r.base().q();
        for d in 1..=n / 2 {
            let count = q.pow(d as u32);
            for k in 0..count {
                let mut coeffs = Vec::with_capacity(d + 1);
                let mut m = k;
                for _ in 0..d {
                    coeffs.push(m % q);
                    m /= q;
                }
                coeffs.push(1);
                if r.divides(&r.from_coeffs(coeffs), f) {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn irreducibility_matches_brute_force() {
        for (p, n) in [(2, 1), (3, 1), (2, 2)] {
            let r = ring(p, n);
            let q = r.base().q();
            for deg in 1..=5u32 {
                let total = q.pow(deg);
                for k in 0..total.min(400) {
                    let mut coeffs = Vec::new();
                    let mut m = k;
                    for _ in 0..deg {
                        coeffs.push(m % q);
                        m /= q;
                    }
                    coeffs.push(1);
                    let f = r.from_coeffs(coeffs);
                    assert_eq!(is_irreducible(&r, &f), brute_irreducible(&r, &f), "{}", r.format(&f));
                }
            }
        }
    }

    #[test]
    fn small_examples_over_f2() {
        let r = ring(2, 1);
        let f = r.from_coeffs(vec![0, 1, 1]);
        let fac = factorize(&r, &f).unwrap();
        assert_eq!(fac.lead, 1);
        assert_eq!(
            fac.factors,
            vec![(r.from_coeffs(vec![0, 1]), 1), (r.from_coeffs(vec![1, 1]), 1)]
        );
        let g = r.from_coeffs(vec![1, 1, 1]);
        assert_eq!(factorize(&r, &g).unwrap().factors, vec![(g.clone(), 1)]);
        let g3 = r.pow(&g, 3);
        assert_eq!(factorize(&r, &g3).unwrap().factors, vec![(g, 3)]);
        assert_eq!(factorize(&r, &r.zero()).unwrap_err(), Error::ZeroPolynomial);
    }

    #[test]
    fn pth_powers_in_char_3() {
        let r = ring(3, 1);
        let lin = r.from_coeffs(vec![1, 1]);
        let quad = r.from_coeffs(vec![1, 0, 1]);
        let f = r.mul(&r.pow(&lin, 9), &r.pow(&quad, 4));
        let f = r.scale(&2, &f);
        let fac = factorize(&r, &f).unwrap();
        assert_eq!(fac.lead, 2);
        assert_eq!(fac.factors, vec![(lin, 9), (quad, 4)]);
    }

    #[test]
    fn splits_over_quadratic_extension() {
        let fq2 = Fq2::new(Fq::prime(2).unwrap());
        let r = PolyRing::new(fq2.clone(), "x");
        let f = r.from_coeffs(vec![fq2.one(), fq2.one(), fq2.one()]);
        let fac = factorize(&r, &f).unwrap();
        assert_eq!(fac.factors.len(), 2);
        assert!(fac.factors.iter().all(|(g, m)| g.degree() == Some(1) && *m == 1));
        assert_eq!(fac.expand(&r), f);
    }

    #[test]
    fn deterministic_output() {
        let r = ring(7, 1);
        let f = r.from_coeffs(vec![3, 1, 4, 1, 5, 2, 6, 5, 3, 5, 1]);
        assert_eq!(factorize(&r, &f).unwrap(), factorize(&r, &f).unwrap());
    }

    fn check_roundtrip(r: &PolyRing<Fq>, coeffs: Vec<u64>) {
        let f = r.from_coeffs(coeffs);
        if f.is_zero() {
            return;
        }
        let fac = factorize(r, &f).unwrap();
        assert_eq!(fac.expand(r), f);
        for (i, (g, m)) in fac.factors.iter().enumerate() {
            assert!(*m >= 1);
            assert!(r.is_monic(g));
            assert!(is_irreducible(r, g));
            for (h, _) in &fac.factors[i + 1..] {
                assert_eq!(cmp_polys(r.base(), g, h), Ordering::Less);
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(250))]

        #[test]
        fn roundtrip_f2(c in prop::collection::vec(0u64..2, 1..=21)) {
            check_roundtrip(&ring(2, 1), c);
        }

        #[test]
        fn roundtrip_f5(c in prop::collection::vec(0u64..5, 1..=21)) {
            check_roundtrip(&ring(5, 1), c);
        }

        #[test]
        fn roundtrip_f9(c in prop::collection::vec(0u64..9, 1..=21)) {
            check_roundtrip(&ring(3, 2), c);
        }

        #[test]
        fn roundtrip_f8(c in prop::collection::vec(0u64..8, 1..=21)) {
            check_roundtrip(&ring(2, 3), c);
        }

        #[test]
        fn roundtrip_repeated_factors(a in prop::collection::vec(0u64..3, 1..=5), b in prop::collection::vec(0u64..3, 1..=4), e in 1u32..7) {
            let r = ring(3, 1);
            let fa = r.from_coeffs(a);
            let fb = r.from_coeffs(b);
            let f = r.mul(&r.pow(&fa, e as u128), &fb);
            check_roundtrip(&r, f.into_coeffs());
        }
    }
}
