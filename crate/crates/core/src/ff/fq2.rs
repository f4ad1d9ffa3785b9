use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::fq::{Fq, FqElem};
use crate::error::{Error, Result};
use crate::poly::{is_irreducible, PolyRing};
use crate::ring::{needs_parens, Conjugation, Field, FiniteField, Ring};

/// Element `c0 + c1*s` of `F_q[s]/(s^2 + b1*s + b0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Fq2Elem {
    pub c0: FqElem,
    pub c1: FqElem,
}

impl Fq2Elem {
    pub const fn new(c0: FqElem, c1: FqElem) -> Self {
        Fq2Elem { c0, c1 }
    }
}

/// The quadratic extension `F_{q^2} = F_q[s]/(s^2 + b1*s + b0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fq2 {
    base: Fq,
    b0: FqElem,
    b1: FqElem,
}

impl Fq2 {
    /// Uses the least monic irreducible quadratic, ordering candidates
    /// `(b0, b1)` lexicographically by element index.
    pub fn new(base: Fq) -> Fq2 {
        let ring = PolyRing::new(base.clone(), "s");
        let q = base.q();
        for b0 in 1..q {
            for b1 in 0..q {
                if is_irreducible(&ring, &ring.from_coeffs(vec![b0, b1, 1])) {
                    return Fq2 { base, b0, b1 };
                }
            }
        }
        unreachable!("irreducible quadratics exist over every finite field")
    }

    /// Extension defined by an explicit monic quadratic `[b0, b1, 1]`.
    pub fn with_modulus(base: Fq, modulus: [FqElem; 3]) -> Result<Fq2> {
        let ring = PolyRing::new(base.clone(), "s");
        let [b0, b1, lead] = modulus;
        if lead != 1 || b0 >= base.q() || b1 >= base.q() {
            return Err(Error::InvalidSpec("quadratic modulus must be monic over F_q".into()));
        }
        if !is_irreducible(&ring, &ring.from_coeffs(vec![b0, b1, 1])) {
            return Err(Error::InvalidSpec("quadratic modulus is reducible".into()));
        }
        Ok(Fq2 { base, b0, b1 })
    }

    pub fn base(&self) -> &Fq {
        &self.base
    }

    /// Ascending coefficients `[b0, b1, 1]` of the defining quadratic.
    pub fn modulus(&self) -> [FqElem; 3] {
        [self.b0, self.b1, 1]
    }

    pub fn embed(&self, c: &FqElem) -> Fq2Elem {
        Fq2Elem::new(*c, 0)
    }

    /// The `F_q` value of a conjugation-fixed element.
    pub fn project(&self, a: &Fq2Elem) -> Option<FqElem> {
        (a.c1 == 0).then_some(a.c0)
    }

    /// The generator `s`.
    pub fn s(&self) -> Fq2Elem {
        Fq2Elem::new(0, 1)
    }

    /// `a * sigma(a)`, an element of `F_q`.
    pub fn norm(&self, a: &Fq2Elem) -> FqElem {
        let f = &self.base;
        // (c0 + c1 s)(c0 - b1 c1 - c1 s) = c0^2 - b1 c0 c1 + b0 c1^2
        let t0 = f.mul(&a.c0, &a.c0);
        let t1 = f.mul(&f.mul(&self.b1, &a.c0), &a.c1);
        let t2 = f.mul(&self.b0, &f.mul(&a.c1, &a.c1));
        f.add(&f.sub(&t0, &t1), &t2)
    }

    /// `a + sigma(a)`, an element of `F_q`.
    pub fn trace(&self, a: &Fq2Elem) -> FqElem {
        let f = &self.base;
        f.sub(&f.add(&a.c0, &a.c0), &f.mul(&self.b1, &a.c1))
    }
}

impl Ring for Fq2 {
    type Elem = Fq2Elem;

    fn zero(&self) -> Fq2Elem {
        Fq2Elem::new(0, 0)
    }
    fn one(&self) -> Fq2Elem {
        Fq2Elem::new(1, 0)
    }
    fn is_zero(&self, a: &Fq2Elem) -> bool {
        a.c0 == 0 && a.c1 == 0
    }
    fn add(&self, a: &Fq2Elem, b: &Fq2Elem) -> Fq2Elem {
        Fq2Elem::new(self.base.add(&a.c0, &b.c0), self.base.add(&a.c1, &b.c1))
    }
    fn neg(&self, a: &Fq2Elem) -> Fq2Elem {
        Fq2Elem::new(self.base.neg(&a.c0), self.base.neg(&a.c1))
    }
    fn sub(&self, a: &Fq2Elem, b: &Fq2Elem) -> Fq2Elem {
        Fq2Elem::new(self.base.sub(&a.c0, &b.c0), self.base.sub(&a.c1, &b.c1))
    }
    fn mul(&self, a: &Fq2Elem, b: &Fq2Elem) -> Fq2Elem {
        let f = &self.base;
        let r0 = f.mul(&a.c0, &b.c0);
        let r2 = f.mul(&a.c1, &b.c1);
        let mid = f.add(&f.mul(&a.c0, &b.c1), &f.mul(&a.c1, &b.c0));
        // s^2 = -b0 - b1 s
        Fq2Elem::new(
            f.sub(&r0, &f.mul(&self.b0, &r2)),
            f.sub(&mid, &f.mul(&self.b1, &r2)),
        )
    }
    fn from_bigint(&self, n: &BigInt) -> Fq2Elem {
        Fq2Elem::new(self.base.from_bigint(n), 0)
    }
    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }
    fn format(&self, a: &Fq2Elem) -> String {
        let f = &self.base;
        let part1 = if a.c1 == 0 {
            None
        } else if a.c1 == 1 {
            Some("s".to_string())
        } else {
            let s = f.format(&a.c1);
            Some(if needs_parens(&s) { format!("({s})*s") } else { format!("{s}*s") })
        };
        match (a.c0, part1) {
            (0, None) => "0".into(),
            (c0, None) => f.format(&c0),
            (0, Some(s)) => s,
            (c0, Some(s)) => format!("{} + {s}", f.format(&c0)),
        }
    }
}

impl Field for Fq2 {
    fn inv(&self, a: &Fq2Elem) -> Option<Fq2Elem> {
        let ninv = self.base.inv(&self.norm(a))?;
        let c = self.conj(a);
        Some(Fq2Elem::new(self.base.mul(&c.c0, &ninv), self.base.mul(&c.c1, &ninv)))
    }
}

impl FiniteField for Fq2 {
    fn order(&self) -> u128 {
        let q = self.base.q() as u128;
        q * q
    }
    fn index(&self, a: &Fq2Elem) -> u128 {
        a.c0 as u128 + a.c1 as u128 * self.base.q() as u128
    }
    fn from_index(&self, i: u128) -> Fq2Elem {
        let q = self.base.q() as u128;
        Fq2Elem::new((i % q) as u64, (i / q) as u64)
    }
}

impl Conjugation for Fq2 {
    /// The `q`-power Frobenius: `s -> -b1 - s`.
    fn conj(&self, a: &Fq2Elem) -> Fq2Elem {
        let f = &self.base;
        Fq2Elem::new(f.sub(&a.c0, &f.mul(&self.b1, &a.c1)), f.neg(&a.c1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conj_is_frobenius() {
        for (p, n) in [(2, 1), (3, 1), (5, 1), (2, 2), (3, 2), (7, 1)] {
            let f = Fq2::new(Fq::new(p, n).unwrap());
            let q = f.base().q() as u128;
            for i in 0..f.order() {
                let a = f.from_index(i);
                assert_eq!(f.conj(&a), f.pow(&a, q));
                assert_eq!(f.conj(&f.conj(&a)), a);
                assert_eq!(f.embed(&f.norm(&a)), f.mul(&a, &f.conj(&a)));
            }
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let f = Fq2::new(Fq::new(3, 2).unwrap());
        for i in 1..f.order() {
            let a = f.from_index(i);
            assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), f.one());
        }
        assert_eq!(f.inv(&f.zero()), None);
    }

    #[test]
    fn f4_presentation() {
        let f = Fq2::new(Fq::prime(2).unwrap());
        assert_eq!(f.modulus(), [1, 1, 1]);
        assert_eq!(f.format(&f.s()), "s");
        assert_eq!(f.format(&Fq2Elem::new(1, 1)), "1 + s");
    }
}
