use super::{Fq2RatFunc, KXi};
use crate::error::{Error, Result};
use crate::ff::{prime_factors, FieldTower, Fq2Elem};
use crate::poly::{factorize, Poly, PolyRing};
use crate::ring::{Field, FiniteField, Ring};

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// An `n`-th root of `c` in `F_{q^2}` (the one of least index), if any.
pub fn constant_root(tower: &FieldTower, c: &Fq2Elem, n: u64) -> Option<Fq2Elem> {
    let f = tower.fq2();
    if f.is_zero(c) {
        return Some(*c);
    }
    let order = f.order() - 1;
    if !f.is_one(&f.pow(c, order / gcd(n as u128, order))) {
        return None;
    }
    let ring = PolyRing::new(f.clone(), "X");
    let target = ring.sub(&ring.monomial(f.one(), n as usize), &ring.constant(*c));
    factorize(&ring, &target)
        .unwrap()
        .factors
        .into_iter()
        .filter(|(g, _)| g.degree() == Some(1))
        .map(|(g, _)| f.neg(&g.coeffs()[0]))
        .min_by_key(|r| f.index(r))
}

/// Decides whether `f = g^n` in `F_{q^2}(x)`, returning such a `g`.
pub fn is_nth_power(tower: &FieldTower, f: &Fq2RatFunc, n: u64) -> Result<Option<Fq2RatFunc>> {
    let k: KXi = tower.k_xi();
    if k.is_zero(f) {
        return Err(Error::ZeroInput);
    }
    if n == 0 {
        return Err(Error::InvalidSpec("exponent must be positive".into()));
    }
    let ring = k.poly_ring();
    let fac_num = factorize(ring, f.num())?;
    let fac_den = factorize(ring, f.den())?;
    let Some(c) = constant_root(tower, &fac_num.lead, n) else {
        return Ok(None);
    };
    let root = |fac: &[(Poly<Fq2Elem>, usize)]| -> Option<Poly<Fq2Elem>> {
        fac.iter().try_fold(ring.one(), |acc, (g, m)| {
            (*m as u64).is_multiple_of(n).then(|| ring.mul(&acc, &ring.pow(g, (*m as u64 / n) as u128)))
        })
    };
    let (Some(gn), Some(gd)) = (root(&fac_num.factors), root(&fac_den.factors)) else {
        return Ok(None);
    };
    Ok(Some(k.frac(ring.scale(&c, &gn), gd)?))
}

/// Irreducibility of `X^l - a` over `F_{q^2}(x)`: `a` is not an `r`-th power
/// for any prime `r | l`, and not in `-4 (F_{q^2}(x)^*)^4` when `4 | l`.
pub fn kummer_irreducible(tower: &FieldTower, a: &Fq2RatFunc, ell: u64) -> Result<bool> {
    let k = tower.k_xi();
    if k.is_zero(a) {
        return Err(Error::ZeroInput);
    }
    for r in prime_factors(ell) {
        if is_nth_power(tower, a, r)?.is_some() {
            return Ok(false);
        }
    }
    if ell.is_multiple_of(4) && tower.p() != 2 {
        let minus_quarter = k.base().inv(&k.base().from_i64(-4)).unwrap();
        let scaled = k.mul(a, &k.constant(minus_quarter));
        if is_nth_power(tower, &scaled, 4)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::build_field_tower;
    use crate::ring::Conjugation;

    #[test]
    fn power_examples() {
        let t = build_field_tower(2, 1, 3).unwrap();
        let k = t.k_xi();
        let x = k.gen();
        let x3 = k.pow(&x, 3);
        assert_eq!(is_nth_power(&t, &x3, 3).unwrap(), Some(x.clone()));
        let x1 = k.add(&x, &k.one());
        assert_eq!(is_nth_power(&t, &k.mul(&x3, &x1), 3).unwrap(), None);
        let f2 = t.fq2();
        let r = k.poly_ring();
        let lin = |c: Fq2Elem| r.from_coeffs(vec![c, f2.one()]);
        let xi2 = f2.mul(&t.xi(), &t.xi());
        let g = k.frac(lin(t.xi()), lin(xi2)).unwrap();
        let w = is_nth_power(&t, &k.pow(&g, 3), 3).unwrap().unwrap();
        // roots are determined up to a cube root of unity
        assert_eq!(k.pow(&w, 3), k.pow(&g, 3));
        assert_eq!(is_nth_power(&t, &k.zero(), 3).unwrap_err(), Error::ZeroInput);
    }

    #[test]
    fn constant_roots() {
        let t = build_field_tower(5, 1, 3).unwrap();
        let f = t.fq2();
        for i in 1..f.order() {
            let c = f.from_index(i);
            for n in [2u64, 3, 4, 6] {
                let brute = (1..f.order()).map(|j| f.from_index(j)).find(|r| f.pow(r, n as u128) == c);
                assert_eq!(constant_root(&t, &c, n), brute, "c = {c:?}, n = {n}");
            }
        }
    }

    #[test]
    fn irreducibility_examples() {
        let t = build_field_tower(2, 1, 3).unwrap();
        let k = t.k_xi();
        let x = k.gen();
        assert!(kummer_irreducible(&t, &x, 3).unwrap());
        assert!(!kummer_irreducible(&t, &k.pow(&x, 3), 3).unwrap());
        let f2 = t.fq2();
        let r = k.poly_ring();
        let xi2 = f2.mul(&t.xi(), &t.xi());
        let a = k
            .frac(r.from_coeffs(vec![xi2, f2.one()]), r.from_coeffs(vec![t.xi(), f2.one()]))
            .unwrap();
        assert!(kummer_irreducible(&t, &a, 3).unwrap());
        assert_eq!(k.conj(&a), k.inv(&a).unwrap());
    }

    #[test]
    fn minus_four_condition() {
        // X^4 + 4x^4 = (X^2 + 2xX + 2x^2)(X^2 - 2xX + 2x^2)
        let t = build_field_tower(7, 1, 4).unwrap();
        let k = t.k_xi();
        let x = k.gen();
        let a = k.mul(&k.from_i64(-4), &k.pow(&x, 4));
        assert!(!kummer_irreducible(&t, &a, 4).unwrap());
        let x1 = k.add(&x, &k.one());
        assert!(kummer_irreducible(&t, &k.mul(&x, &k.pow(&x1, 2)), 4).unwrap());
        // x^2 is a square, so X^4 - x^2 factors
        assert!(!kummer_irreducible(&t, &k.pow(&x, 2), 4).unwrap());
    }
}
