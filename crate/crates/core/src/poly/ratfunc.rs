use num_bigint::BigInt;

use super::{Poly, PolyRing};
use crate::error::{Error, Result};
use crate::ring::{needs_parens, Conjugation, Field, Ring};

/// Reduced fraction `num/den`: `den` monic, `gcd(num, den) = 1`, zero is `0/1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc<E> {
    num: Poly<E>,
    den: Poly<E>,
}

impl<E> RatFunc<E> {
    pub fn num(&self) -> &Poly<E> {
        &self.num
    }

    pub fn den(&self) -> &Poly<E> {
        &self.den
    }

    pub fn into_parts(self) -> (Poly<E>, Poly<E>) {
        (self.num, self.den)
    }

    /// Whether the denominator is `1`.
    pub fn is_poly(&self) -> bool {
        self.den.degree() == Some(0)
    }
}

/// The rational function field `F(var)`.
#[derive(Clone, Debug)]
pub struct RatFuncField<F> {
    poly: PolyRing<F>,
}

impl<F: Field> RatFuncField<F> {
    pub fn new(base: F, var: &str) -> Self {
        RatFuncField {
            poly: PolyRing::new(base, var),
        }
    }

    pub fn poly_ring(&self) -> &PolyRing<F> {
        &self.poly
    }

    pub fn base(&self) -> &F {
        self.poly.base()
    }

    /// Reduces `num/den` to lowest terms with monic denominator.
    pub fn frac(&self, num: Poly<F::Elem>, den: Poly<F::Elem>) -> Result<RatFunc<F::Elem>> {
        let lead = den.lead().ok_or(Error::ZeroDenominator)?.clone();
        if num.is_zero() {
            return Ok(self.zero());
        }
        let p = &self.poly;
        let g = p.gcd(&num, &den)?;
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (p.div_exact(&num, &g), p.div_exact(&den, &g))
        };
        let li = self.base().inv(&lead).unwrap();
        // den/g has leading coefficient lead, since g is monic
        Ok(RatFunc {
            num: p.scale(&li, &num),
            den: p.scale(&li, &den),
        })
    }

    pub fn from_poly(&self, p: Poly<F::Elem>) -> RatFunc<F::Elem> {
        RatFunc {
            num: p,
            den: self.poly.one(),
        }
    }

    pub fn constant(&self, c: F::Elem) -> RatFunc<F::Elem> {
        self.from_poly(self.poly.constant(c))
    }

    /// The variable.
    pub fn gen(&self) -> RatFunc<F::Elem> {
        self.from_poly(self.poly.gen())
    }

    /// The value as a constant of `F`, if it is one.
    pub fn as_constant(&self, f: &RatFunc<F::Elem>) -> Option<F::Elem> {
        match (f.num.degree(), f.den.degree()) {
            (None, _) => Some(self.base().zero()),
            (Some(0), Some(0)) => Some(f.num.coeffs()[0].clone()),
            _ => None,
        }
    }

    /// Applies a coefficient map to numerator and denominator.
    pub fn map_into<G: Field>(
        &self,
        target: &RatFuncField<G>,
        f: &RatFunc<F::Elem>,
        m: impl Fn(&F::Elem) -> G::Elem,
    ) -> RatFunc<G::Elem> {
        let num = self.poly.map_into(&target.poly, &f.num, &m);
        let den = self.poly.map_into(&target.poly, &f.den, &m);
        target.frac(num, den).expect("coefficient map sends a monic polynomial to zero")
    }

    /// `f^e` for any integer `e`; `None` if `f = 0` and `e < 0`.
    pub fn pow_signed(&self, f: &RatFunc<F::Elem>, e: i64) -> Option<RatFunc<F::Elem>> {
        let base = if e < 0 { self.inv(f)? } else { f.clone() };
        Some(self.pow(&base, e.unsigned_abs() as u128))
    }
}

impl<F: Field> Ring for RatFuncField<F> {
    type Elem = RatFunc<F::Elem>;

    fn zero(&self) -> Self::Elem {
        self.from_poly(self.poly.zero())
    }

    fn one(&self) -> Self::Elem {
        self.from_poly(self.poly.one())
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.num.is_zero()
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let p = &self.poly;
        if a.den == b.den {
            return self.frac(p.add(&a.num, &b.num), a.den.clone()).unwrap();
        }
        let num = p.add(&p.mul(&a.num, &b.den), &p.mul(&b.num, &a.den));
        self.frac(num, p.mul(&a.den, &b.den)).unwrap()
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        RatFunc {
            num: self.poly.neg(&a.num),
            den: a.den.clone(),
        }
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let p = &self.poly;
        if a.is_poly() && b.is_poly() {
            return self.from_poly(p.mul(&a.num, &b.num));
        }
        self.frac(p.mul(&a.num, &b.num), p.mul(&a.den, &b.den)).unwrap()
    }

    fn from_bigint(&self, n: &BigInt) -> Self::Elem {
        self.constant(self.base().from_bigint(n))
    }

    fn characteristic(&self) -> u64 {
        self.base().characteristic()
    }

    fn format(&self, a: &Self::Elem) -> String {
        let num = self.poly.format(&a.num);
        if a.is_poly() {
            return num;
        }
        let den = self.poly.format(&a.den);
        let wrap = |s: String| if needs_parens(&s) || s.contains('*') { format!("({s})") } else { s };
        format!("{}/{}", wrap(num), wrap(den))
    }
}

impl<F: Field> Field for RatFuncField<F> {
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        if a.num.is_zero() {
            return None;
        }
        Some(self.frac(a.den.clone(), a.num.clone()).unwrap())
    }
}

impl<F: Conjugation> Conjugation for RatFuncField<F> {
    fn conj(&self, a: &Self::Elem) -> Self::Elem {
        // conjugation keeps monic denominators monic and coprime pairs coprime
        RatFunc {
            num: self.poly.conj(&a.num),
            den: self.poly.conj(&a.den),
        }
    }
}
