//! The algebra `M = F_{q^2}(x)[W]/(W^l - a)` with the semilinear involution
//! `sigma(W) = u W^(l-1) / a`.

use num_bigint::BigInt;

use super::{Fq2RatFunc, FqRatFunc, KXi, K};
use crate::ff::{FieldTower, Fq2Elem};
use crate::poly::{Poly, PolyRing};
use crate::ring::{needs_parens, Conjugation, Field, Ring};

/// `sum f_i W^i`, exactly `l` coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KummerModelElement {
    pub coeffs: Vec<Fq2RatFunc>,
}

#[derive(Clone, Debug)]
pub struct KummerModel {
    tower: FieldTower,
    kx: KXi,
    ell: usize,
    a: Fq2RatFunc,
    /// `u^i / a` for `i = 0..l`.
    sigma_scale: Vec<Fq2RatFunc>,
}

impl KummerModel {
    /// `a` nonzero, `u` in `F_q(x)` nonzero.
    pub fn new(tower: &FieldTower, a: &Fq2RatFunc, u: &FqRatFunc) -> KummerModel {
        let kx = tower.k_xi();
        let u = lift(tower, u);
        let a_inv = kx.inv(a).expect("a must be nonzero");
        let ell = tower.ell() as usize;
        let mut sigma_scale = Vec::with_capacity(ell);
        let mut u_pow = kx.one();
        for _ in 0..ell {
            sigma_scale.push(kx.mul(&u_pow, &a_inv));
            u_pow = kx.mul(&u_pow, &u);
        }
        KummerModel {
            tower: tower.clone(),
            kx,
            ell,
            a: a.clone(),
            sigma_scale,
        }
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn a(&self) -> &Fq2RatFunc {
        &self.a
    }

    pub fn k_xi(&self) -> &KXi {
        &self.kx
    }

    /// `W`.
    pub fn w(&self) -> KummerModelElement {
        self.monomial(self.kx.one(), 1)
    }

    /// `c W^i`, `i < l`.
    pub fn monomial(&self, c: Fq2RatFunc, i: usize) -> KummerModelElement {
        let mut coeffs = vec![self.kx.zero(); self.ell];
        coeffs[i % self.ell] = c;
        if i >= self.ell {
            let reduced = self.kx.mul(&coeffs[i % self.ell], &self.kx.pow(&self.a, (i / self.ell) as u128));
            coeffs[i % self.ell] = reduced;
        }
        KummerModelElement { coeffs }
    }

    pub fn embed(&self, c: &Fq2RatFunc) -> KummerModelElement {
        self.monomial(c.clone(), 0)
    }

    pub fn embed_base(&self, c: &FqRatFunc) -> KummerModelElement {
        self.embed(&lift(&self.tower, c))
    }

    pub fn scale(&self, c: &Fq2RatFunc, e: &KummerModelElement) -> KummerModelElement {
        KummerModelElement {
            coeffs: e.coeffs.iter().map(|f| self.kx.mul(c, f)).collect(),
        }
    }

    /// `sigma(sum f_i W^i) = sigma(f_0) + sum_(i>=1) sigma(f_i) (u^i/a) W^(l-i)`.
    pub fn sigma(&self, e: &KummerModelElement) -> KummerModelElement {
        let kx = &self.kx;
        let mut coeffs = vec![kx.zero(); self.ell];
        coeffs[0] = kx.conj(&e.coeffs[0]);
        for i in 1..self.ell {
            if kx.is_zero(&e.coeffs[i]) {
                continue;
            }
            coeffs[self.ell - i] = kx.mul(&kx.conj(&e.coeffs[i]), &self.sigma_scale[i]);
        }
        KummerModelElement { coeffs }
    }

    /// `sigma(W)`.
    pub fn sigma_w(&self) -> KummerModelElement {
        self.sigma(&self.w())
    }

    /// Coordinates over `F_q(x)` in the basis `W^0, s W^0, W^1, s W^1, ...`.
    pub fn coords(&self, e: &KummerModelElement) -> Vec<FqRatFunc> {
        let mut out = Vec::with_capacity(2 * self.ell);
        for f in &e.coeffs {
            let (g, h) = split(&self.tower, f);
            out.push(g);
            out.push(h);
        }
        out
    }

    /// The value in `F_q(x)` of an element of the embedded base field.
    pub fn as_base(&self, e: &KummerModelElement) -> Option<FqRatFunc> {
        if e.coeffs[1..].iter().any(|f| !self.kx.is_zero(f)) {
            return None;
        }
        project(&self.tower, &e.coeffs[0])
    }

    /// `p(e)` for `p` with coefficients in `F_q(x)`.
    pub fn eval_base_poly(&self, p: &Poly<FqRatFunc>, e: &KummerModelElement) -> KummerModelElement {
        p.coeffs()
            .iter()
            .rev()
            .fold(self.zero(), |acc, c| self.add(&self.mul(&acc, e), &self.embed_base(c)))
    }

    /// Monic minimal polynomial over `F_q(x)`, in `F_q(x)[X]`.
    pub fn minimal_poly(&self, e: &KummerModelElement) -> Poly<FqRatFunc> {
        let k: K = self.tower.k();
        let dim = 2 * self.ell;
        // echelon rows: (pivot, vector with pivot entry 1, combination of powers of e)
        let mut rows: Vec<(usize, Vec<FqRatFunc>, Vec<FqRatFunc>)> = Vec::new();
        let mut power = self.one();
        for n in 0..=dim {
            let mut v = self.coords(&power);
            let mut combo = vec![k.zero(); n + 1];
            combo[n] = k.one();
            for (pivot, rv, rc) in &rows {
                if k.is_zero(&v[*pivot]) {
                    continue;
                }
                let f = v[*pivot].clone();
                for (vi, ri) in v.iter_mut().zip(rv) {
                    if !k.is_zero(ri) {
                        *vi = k.sub(vi, &k.mul(&f, ri));
                    }
                }
                for (ci, ri) in combo.iter_mut().zip(rc) {
                    if !k.is_zero(ri) {
                        *ci = k.sub(ci, &k.mul(&f, ri));
                    }
                }
            }
            match v.iter().position(|c| !k.is_zero(c)) {
                None => return PolyRing::new(k.clone(), "X").from_coeffs(combo),
                Some(pivot) => {
                    let inv = k.inv(&v[pivot]).unwrap();
                    let v = v.iter().map(|c| k.mul(c, &inv)).collect();
                    let combo = combo.iter().map(|c| k.mul(c, &inv)).collect();
                    rows.push((pivot, v, combo));
                }
            }
            power = self.mul(&power, e);
        }
        unreachable!("M has dimension 2l over F_q(x)")
    }
}

/// `F_q(x) -> F_{q^2}(x)`.
pub fn lift(tower: &FieldTower, f: &FqRatFunc) -> Fq2RatFunc {
    let fq2 = tower.fq2();
    tower.k().map_into(&tower.k_xi(), f, |c| fq2.embed(c))
}

/// The `F_q(x)` value of a conjugation-fixed element.
pub fn project(tower: &FieldTower, f: &Fq2RatFunc) -> Option<FqRatFunc> {
    let fq2 = tower.fq2();
    let k = tower.k();
    let r = k.poly_ring();
    let proj = |p: &Poly<Fq2Elem>| -> Option<Poly<u64>> {
        p.coeffs().iter().map(|c| fq2.project(c)).collect::<Option<Vec<_>>>().map(|v| r.from_coeffs(v))
    };
    Some(k.frac(proj(f.num())?, proj(f.den())?).unwrap())
}

/// `f = g + h s` with `g, h ∈ F_q(x)`.
pub fn split(tower: &FieldTower, f: &Fq2RatFunc) -> (FqRatFunc, FqRatFunc) {
    let k = tower.k();
    if f.num().is_zero() {
        return (k.zero(), k.zero());
    }
    let kx = tower.k_xi();
    let r2 = kx.poly_ring();
    let conj_den = r2.conj(f.den());
    let num = r2.mul(f.num(), &conj_den);
    let den = r2.mul(f.den(), &conj_den);
    let r = k.poly_ring();
    let den = r.from_coeffs(den.coeffs().iter().map(|c| c.c0).collect());
    let g = r.from_coeffs(num.coeffs().iter().map(|c| c.c0).collect());
    let h = r.from_coeffs(num.coeffs().iter().map(|c| c.c1).collect());
    (k.frac(g, den.clone()).unwrap(), k.frac(h, den).unwrap())
}

impl Ring for KummerModel {
    type Elem = KummerModelElement;

    fn zero(&self) -> Self::Elem {
        KummerModelElement {
            coeffs: vec![self.kx.zero(); self.ell],
        }
    }

    fn one(&self) -> Self::Elem {
        self.embed(&self.kx.one())
    }

    fn is_zero(&self, e: &Self::Elem) -> bool {
        e.coeffs.iter().all(|f| self.kx.is_zero(f))
    }

    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        KummerModelElement {
            coeffs: x.coeffs.iter().zip(&y.coeffs).map(|(f, g)| self.kx.add(f, g)).collect(),
        }
    }

    fn neg(&self, x: &Self::Elem) -> Self::Elem {
        KummerModelElement {
            coeffs: x.coeffs.iter().map(|f| self.kx.neg(f)).collect(),
        }
    }

    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        let kx = &self.kx;
        let l = self.ell;
        let mut low = vec![kx.zero(); l];
        let mut high = vec![kx.zero(); l];
        for (i, f) in x.coeffs.iter().enumerate() {
            if kx.is_zero(f) {
                continue;
            }
            for (j, g) in y.coeffs.iter().enumerate() {
                if kx.is_zero(g) {
                    continue;
                }
                let t = kx.mul(f, g);
                let slot = if i + j < l { &mut low[i + j] } else { &mut high[i + j - l] };
                *slot = kx.add(slot, &t);
            }
        }
        for (lo, hi) in low.iter_mut().zip(&high) {
            if !kx.is_zero(hi) {
                *lo = kx.add(lo, &kx.mul(hi, &self.a));
            }
        }
        KummerModelElement { coeffs: low }
    }

    fn from_bigint(&self, n: &BigInt) -> Self::Elem {
        self.embed(&self.kx.from_bigint(n))
    }

    fn characteristic(&self) -> u64 {
        self.tower.p()
    }

    fn format(&self, e: &Self::Elem) -> String {
        let terms: Vec<String> = e
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, f)| !self.kx.is_zero(f))
            .map(|(i, f)| {
                let s = self.kx.format(f);
                let s = if i > 0 && needs_parens(&s) { format!("({s})") } else { s };
                match i {
                    0 => s,
                    1 => format!("{s}*W"),
                    _ => format!("{s}*W^{i}"),
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::build_field_tower;

    fn setup() -> (FieldTower, KummerModel) {
        let t = build_field_tower(2, 1, 3).unwrap();
        let k = t.k_xi();
        let f2 = t.fq2();
        let r = k.poly_ring();
        let xi2 = f2.mul(&t.xi(), &t.xi());
        let a = k
            .frac(r.from_coeffs(vec![xi2, f2.one()]), r.from_coeffs(vec![t.xi(), f2.one()]))
            .unwrap();
        let m = KummerModel::new(&t, &a, &t.k().one());
        (t, m)
    }

    #[test]
    fn w_to_the_l_is_a() {
        let (_, m) = setup();
        assert_eq!(m.pow(&m.w(), 3), m.embed(m.a()));
    }

    #[test]
    fn sigma_is_an_involutive_ring_map() {
        let (t, m) = setup();
        let k = t.k_xi();
        let x = m.embed(&k.gen());
        let e1 = m.add(&m.w(), &m.scale(&k.constant(t.xi()), &m.pow(&m.w(), 2)));
        let e2 = m.add(&x, &m.scale(&k.gen(), &m.w()));
        assert_eq!(m.sigma(&m.sigma(&e1)), e1);
        assert_eq!(m.sigma(&m.mul(&e1, &e2)), m.mul(&m.sigma(&e1), &m.sigma(&e2)));
        assert_eq!(m.sigma(&m.add(&e1, &e2)), m.add(&m.sigma(&e1), &m.sigma(&e2)));
        // W sigma(W) = u
        assert_eq!(m.as_base(&m.mul(&m.w(), &m.sigma_w())), Some(t.k().one()));
    }

    #[test]
    fn minimal_polynomials() {
        let (t, m) = setup();
        let k = t.k();
        let kp = PolyRing::new(k.clone(), "X");
        let y = m.add(&m.w(), &m.sigma_w());
        let mp = m.minimal_poly(&y);
        assert_eq!(kp.format(&mp), "X^3 + X + 1/(x^2 + x + 1)");
        let c = k.gen();
        assert_eq!(m.minimal_poly(&m.embed_base(&c)), kp.from_coeffs(vec![k.neg(&c), k.one()]));
        // W: (X^3 - a)(X^3 - sigma(a)) = X^6 - alpha X^3 + 1
        let mw = m.minimal_poly(&m.w());
        assert_eq!(mw.degree(), Some(6));
        assert_eq!(kp.format(&mw), "X^6 + (1/(x^2 + x + 1))*X^3 + 1");
    }

    #[test]
    fn split_recombines() {
        let t = build_field_tower(5, 1, 3).unwrap();
        let k = t.k_xi();
        let r = k.poly_ring();
        let f2 = t.fq2();
        let f = k
            .frac(
                r.from_coeffs(vec![t.xi(), f2.from_i64(3), f2.s()]),
                r.from_coeffs(vec![f2.s(), f2.one(), f2.one()]),
            )
            .unwrap();
        let (g, h) = split(&t, &f);
        let back = k.add(&lift(&t, &g), &k.mul(&k.constant(f2.s()), &lift(&t, &h)));
        assert_eq!(back, f);
        assert_eq!(project(&t, &f), None);
        assert_eq!(project(&t, &lift(&t, &g)), Some(g));
    }
}
