//! Cyclic extensions of `K = F_q(x)` of degree `l` built by Kummer descent
//! from `K(xi) = F_{q^2}(x)`.

mod model;
mod power;

pub use model::{lift, project, split, KummerModel, KummerModelElement};
pub use power::{constant_root, is_nth_power, kummer_irreducible};

use crate::error::{Error, Result};
use crate::ff::{FieldTower, Fq, Fq2, Fq2Elem, FqElem};
use crate::generic_poly::{build_p, GenericPolynomial};
use crate::poly::{cmp_polys, factorize, Poly, PolyRing, RatFunc, RatFuncField};
use crate::ring::{Conjugation, Field, Ring};

pub type K = RatFuncField<Fq>;
pub type KXi = RatFuncField<Fq2>;
pub type FqRatFunc = RatFunc<FqElem>;
pub type Fq2RatFunc = RatFunc<Fq2Elem>;

fn check_norm_one(kx: &KXi, d: &Fq2RatFunc) -> Result<()> {
    if kx.is_zero(d) {
        return Err(Error::ZeroInput);
    }
    if !kx.is_one(&kx.mul(d, &kx.conj(d))) {
        return Err(Error::NormNotOne);
    }
    Ok(())
}

/// `theta` with `d = theta / sigma(theta)`, for `d` of norm one.
pub fn hilbert90(tower: &FieldTower, d: &Fq2RatFunc) -> Result<Fq2RatFunc> {
    let kx = tower.k_xi();
    check_norm_one(&kx, d)?;
    let theta = kx.add(&kx.one(), d);
    if !kx.is_zero(&theta) {
        return Ok(theta);
    }
    // d = -1
    let f = tower.fq2();
    Ok(kx.constant(f.sub(&tower.xi(), &tower.xi_inv())))
}

/// `d = (A + xi B)/(A + xi^-1 B)` and `alpha = d + sigma(d)`, the latter
/// evaluated by the closed formula over `F_q`.
pub fn from_ab(tower: &FieldTower, a: &Poly<FqElem>, b: &Poly<FqElem>) -> Result<(Fq2RatFunc, FqRatFunc)> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::ZeroPair);
    }
    let f2 = tower.fq2();
    let kx = tower.k_xi();
    let r2 = kx.poly_ring();
    let r = tower.fq_x();
    let la = r.map_into(r2, a, |c| f2.embed(c));
    let lb = r.map_into(r2, b, |c| f2.embed(c));
    let num = r2.add(&la, &r2.scale(&tower.xi(), &lb));
    let den = r2.add(&la, &r2.scale(&tower.xi_inv(), &lb));
    let d = kx.frac(num, den)?;

    let fq = tower.fq();
    let t = tower.trace_xi();
    let (aa, ab, bb) = (r.mul(a, a), r.mul(a, b), r.mul(b, b));
    let two = fq.from_i64(2);
    let t2m2 = fq.sub(&fq.mul(&t, &t), &two);
    let alpha_num = r.add(&r.add(&r.scale(&two, &aa), &r.scale(&fq.mul(&two, &t), &ab)), &r.scale(&t2m2, &bb));
    let alpha_den = r.add(&r.add(&aa, &r.scale(&t, &ab)), &bb);
    let alpha = tower.k().frac(alpha_num, alpha_den)?;
    Ok((d, alpha))
}

/// `(A, B)` over `F_q` with `d = (A + xi B)/(A + xi^-1 B)`, for `d` of norm one.
pub fn norm_one_to_ab(tower: &FieldTower, d: &Fq2RatFunc) -> Result<(Poly<FqElem>, Poly<FqElem>)> {
    let kx = tower.k_xi();
    let theta = hilbert90(tower, d)?;
    // num(theta) sigma(den(theta)) differs from theta by a conjugation-fixed factor
    let gamma = kx.poly_ring().mul(theta.num(), &kx.poly_ring().conj(theta.den()));
    gamma_to_ab(tower, &gamma)
}

/// Writes a polynomial `gamma = A + xi B` with `A, B` over `F_q`.
fn gamma_to_ab(tower: &FieldTower, gamma: &Poly<Fq2Elem>) -> Result<(Poly<FqElem>, Poly<FqElem>)> {
    let fq = tower.fq();
    let r = tower.fq_x();
    // xi = x0 + x1 s with x1 != 0; c0 + c1 s = (c0 - c1 x0/x1) + (c1/x1) xi
    let xi = tower.xi();
    let inv_x1 = fq.inv(&xi.c1).ok_or(Error::Degenerate)?;
    let mut a = Vec::new();
    let mut b = Vec::new();
    for c in gamma.coeffs() {
        let bc = fq.mul(&c.c1, &inv_x1);
        a.push(fq.sub(&c.c0, &fq.mul(&bc, &xi.c0)));
        b.push(bc);
    }
    Ok((r.from_coeffs(a), r.from_coeffs(b)))
}

/// A cyclic degree-`l` extension of `K`, presented by its Kummer datum.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtensionSpec {
    pub tower: FieldTower,
    /// `W^l = a` generates `L(xi)/K(xi)`.
    pub a: Fq2RatFunc,
    pub u: FqRatFunc,
    /// `a + sigma(a)`.
    pub alpha: FqRatFunc,
    /// Unit-circle twist applied to `a` during construction.
    pub eta: Fq2Elem,
    pub provenance: Option<(Poly<FqElem>, Poly<FqElem>)>,
}

impl ExtensionSpec {
    /// Validates `a` and `u` and derives `alpha`.
    pub fn new(
        tower: &FieldTower,
        a: Fq2RatFunc,
        u: FqRatFunc,
        eta: Fq2Elem,
        provenance: Option<(Poly<FqElem>, Poly<FqElem>)>,
    ) -> Result<ExtensionSpec> {
        let kx = tower.k_xi();
        if kx.is_zero(&a) {
            return Err(Error::ZeroInput);
        }
        let k = tower.k();
        if k.is_zero(&u) {
            return Err(Error::ZeroU);
        }
        let sa = kx.conj(&a);
        if sa == a {
            return Err(Error::Degenerate);
        }
        let ell = tower.ell();
        if kx.mul(&a, &sa) != lift(tower, &k.pow(&u, ell as u128)) {
            return Err(Error::InconsistentNorm);
        }
        if !kummer_irreducible(tower, &a, ell)? {
            return Err(Error::NotIrreducible);
        }
        let alpha = project(tower, &kx.add(&a, &sa)).expect("a + sigma(a) is conjugation-fixed");
        Ok(ExtensionSpec {
            tower: tower.clone(),
            a,
            u,
            alpha,
            eta,
            provenance,
        })
    }

    pub fn ell(&self) -> u64 {
        self.tower.ell()
    }

    pub fn model(&self) -> KummerModel {
        KummerModel::new(&self.tower, &self.a, &self.u)
    }

    /// `P^l_{u,alpha}` over `F_q(x)`.
    pub fn generic_poly(&self) -> GenericPolynomial<FqRatFunc> {
        build_p(&self.tower.k(), self.ell(), &self.u, &self.alpha)
    }

    /// `a / u^(l/2)` for even `l`, `a` for odd `l`: the norm-one part.
    pub fn unit_part(&self) -> Fq2RatFunc {
        let kx = self.tower.k_xi();
        if self.ell() % 2 == 1 {
            return self.a.clone();
        }
        let half = kx.pow(&lift(&self.tower, &self.u), (self.ell() / 2) as u128);
        kx.div(&self.a, &half).expect("u is nonzero")
    }

    /// The same extension with the norm-one part of `a` replaced by its
    /// reduced representative.
    pub fn normalized(&self) -> Result<ExtensionSpec> {
        let kx = self.tower.k_xi();
        let reduced = normalize_rep(&self.tower, &self.unit_part(), self.ell())?;
        let a = if self.ell() % 2 == 1 {
            reduced
        } else {
            let half = kx.pow(&lift(&self.tower, &self.u), (self.ell() / 2) as u128);
            kx.mul(&reduced, &half)
        };
        ExtensionSpec::new(&self.tower, a, self.u.clone(), self.eta, None)
    }
}

/// Reduced representative of the class of a norm-one `a` modulo `l`-th
/// powers. Writing `a = c * prod (pi/sigma(pi))^n_pi` over conjugate pairs
/// with `pi` the smaller of its pair, returns `c * sigma(theta0)/theta0` with
/// `theta0 = prod pi^m_pi`, `m_pi = -n_pi mod l` in `[0, l-1]`.
pub fn normalize_rep(tower: &FieldTower, a: &Fq2RatFunc, ell: u64) -> Result<Fq2RatFunc> {
    let kx = tower.k_xi();
    check_norm_one(&kx, a)?;
    let r2 = kx.poly_ring();
    let num = factorize(r2, a.num())?;
    let den = factorize(r2, a.den())?;
    let mut places: Vec<(Poly<Fq2Elem>, i64)> = num.factors.iter().map(|(g, m)| (g.clone(), *m as i64)).collect();
    places.extend(den.factors.iter().map(|(g, m)| (g.clone(), -(*m as i64))));
    places.sort_by(|x, y| cmp_polys(tower.fq2(), &x.0, &y.0));
    let mut theta0 = r2.one();
    let mut seen: Vec<Poly<Fq2Elem>> = Vec::new();
    for (g, n) in &places {
        if seen.contains(g) {
            continue;
        }
        let conj = r2.conj(g);
        seen.push(conj);
        let m = (-n).rem_euclid(ell as i64);
        theta0 = r2.mul(&theta0, &r2.pow(g, m as u128));
    }
    let ratio = kx.frac(r2.conj(&theta0), theta0)?;
    Ok(kx.mul(&kx.constant(num.lead), &ratio))
}

/// The `l` conjugates `y_i = xi^i W + xi^-i u W^(l-1)/a` of the generator.
pub fn conjugate_roots_in_model(spec: &ExtensionSpec) -> Vec<KummerModelElement> {
    let m = spec.model();
    let kx = spec.tower.k_xi();
    let f2 = spec.tower.fq2();
    let w = m.w();
    let sw = m.sigma_w();
    let mut out = Vec::with_capacity(spec.ell() as usize);
    let mut z = f2.one();
    for _ in 0..spec.ell() {
        let zc = f2.conj(&z);
        out.push(m.add(&m.scale(&kx.constant(z), &w), &m.scale(&kx.constant(zc), &sw)));
        z = f2.mul(&z, &spec.tower.xi());
    }
    out
}

/// Monic minimal polynomial of `elem` over `F_q(x)`.
pub fn minimal_poly_in_model(elem: &KummerModelElement, spec: &ExtensionSpec) -> Poly<FqRatFunc> {
    spec.model().minimal_poly(elem)
}

/// Outcome of checking the conjugates of the generator against `P^l_{u,alpha}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugateReport {
    pub annihilated: bool,
    pub distinct: bool,
    /// `prod (X - y_i)` has coefficients in `F_q(x)` and equals `P`.
    pub product_matches: bool,
    pub generator_degree: Option<usize>,
}

impl ConjugateReport {
    pub fn passed(&self, ell: u64) -> bool {
        self.annihilated && self.distinct && self.product_matches && self.generator_degree == Some(ell as usize)
    }
}

pub fn check_conjugates(spec: &ExtensionSpec) -> ConjugateReport {
    let m = spec.model();
    let p = spec.generic_poly().poly;
    let roots = conjugate_roots_in_model(spec);
    let annihilated = roots.iter().all(|y| m.is_zero(&m.eval_base_poly(&p, y)));
    let distinct = (0..roots.len()).all(|i| (i + 1..roots.len()).all(|j| roots[i] != roots[j]));
    let mx = PolyRing::new(m.clone(), "X");
    let product = roots.iter().fold(mx.one(), |acc, y| {
        mx.mul(&acc, &mx.from_coeffs(vec![m.neg(y), m.one()]))
    });
    let product_matches = product.coeffs().len() == p.coeffs().len()
        && product
            .coeffs()
            .iter()
            .zip(p.coeffs())
            .all(|(c, expected)| m.as_base(c).as_ref() == Some(expected));
    let generator_degree = roots.first().and_then(|y| m.minimal_poly(y).degree());
    ConjugateReport {
        annihilated,
        distinct,
        product_matches,
        generator_degree,
    }
}

/// The first `eta` on the unit circle for which `eta W + sigma(eta W)` has
/// degree `l` over `F_q(x)`.
pub fn find_eta(tower: &FieldTower, a: &Fq2RatFunc, u: &FqRatFunc) -> Result<Fq2Elem> {
    let kx = tower.k_xi();
    let ell = tower.ell();
    if kx.is_zero(a) {
        return Err(Error::ZeroInput);
    }
    if kx.conj(a) == *a {
        return Err(Error::Degenerate);
    }
    if !kummer_irreducible(tower, a, ell)? {
        return Err(Error::NotIrreducible);
    }
    let m = KummerModel::new(tower, a, u);
    for eta in tower.unit_circle() {
        let z = m.scale(&kx.constant(eta), &m.w());
        let y = m.add(&z, &m.sigma(&z));
        if m.minimal_poly(&y).degree() == Some(ell as usize) {
            return Ok(eta);
        }
    }
    Err(Error::SearchExhausted)
}

/// The extension attached to `(A, B)`: `a = u^(l/2) sigma(d)` for even `l`
/// and `a = sigma(d)` with `u = 1` for odd `l`, twisted by `find_eta`.
pub fn build_extension(
    tower: &FieldTower,
    a_poly: &Poly<FqElem>,
    b_poly: &Poly<FqElem>,
    u: Option<FqRatFunc>,
) -> Result<(ExtensionSpec, GenericPolynomial<FqRatFunc>)> {
    let k = tower.k();
    let kx = tower.k_xi();
    let ell = tower.ell();
    let (d, _) = from_ab(tower, a_poly, b_poly)?;
    let u = match u {
        None => k.one(),
        Some(u) if k.is_zero(&u) => return Err(Error::ZeroU),
        Some(u) if ell % 2 == 1 && !k.is_one(&u) => return Err(Error::UnsupportedU),
        Some(u) => u,
    };
    let mut a = kx.conj(&d);
    if ell.is_multiple_of(2) {
        a = kx.mul(&a, &lift(tower, &k.pow(&u, (ell / 2) as u128)));
    }
    let eta = find_eta(tower, &a, &u)?;
    let a = kx.mul(&a, &kx.constant(tower.fq2().pow(&eta, ell as u128)));
    let spec = ExtensionSpec::new(tower, a, u, eta, Some((a_poly.clone(), b_poly.clone())))?;
    let p = spec.generic_poly();
    Ok((spec, p))
}

/// The least `j` prime to `l` with `a2 / a1^j` an `l`-th power, and a root `c`.
pub fn isomorphic(s1: &ExtensionSpec, s2: &ExtensionSpec) -> Result<Option<(u64, Fq2RatFunc)>> {
    if s1.tower != s2.tower {
        return Err(Error::TowerMismatch);
    }
    let kx = s1.tower.k_xi();
    let ell = s1.ell();
    for j in 1..ell {
        if num_integer::gcd(j, ell) != 1 {
            continue;
        }
        let q = kx.div(&s2.a, &kx.pow(&s1.a, j as u128)).expect("a1 is nonzero");
        if let Some(c) = is_nth_power(&s1.tower, &q, ell)? {
            return Ok(Some((j, c)));
        }
    }
    Ok(None)
}
