use serde::{Deserialize, Serialize};

use super::arith::{is_prime, prime_factors};
use super::fq::{checked_pow, Fq, FqElem};
use super::fq2::{Fq2, Fq2Elem};
use crate::error::{Error, Result};
use crate::poly::{PolyRing, RatFuncField};
use crate::ring::{Conjugation, Field, FiniteField, Ring};

/// The tower `F_p ⊂ F_q ⊂ F_{q^2}` with a distinguished primitive `l`-th
/// root of unity `xi ∈ F_{q^2} \ F_q`, for `q ≡ -1 (mod l)`.
#[derive(Clone, Debug)]
pub struct FieldTower {
    ell: u64,
    fq: Fq,
    fq2: Fq2,
    generator: Fq2Elem,
    xi: Fq2Elem,
}

impl PartialEq for FieldTower {
    fn eq(&self, other: &Self) -> bool {
        self.ell == other.ell && self.fq == other.fq && self.fq2 == other.fq2 && self.xi == other.xi
    }
}

impl Eq for FieldTower {}

/// Builds the tower for `q = p^n` and `l`, with deterministic moduli and
/// `xi = g^((q^2-1)/l)` for the least-index generator `g` of `F_{q^2}^*`.
pub fn build_field_tower(p: u64, n: usize, ell: u64) -> Result<FieldTower> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n == 0 {
        return Err(Error::InvalidDegree);
    }
    if ell < 3 {
        return Err(Error::EllTooSmall { ell });
    }
    let q = checked_pow(p, n).ok_or(Error::Overflow)?;
    if q % ell != ell - 1 {
        return Err(Error::CongruenceViolation { q, ell });
    }
    let fq = Fq::new(p, n)?;
    let fq2 = Fq2::new(fq.clone());
    FieldTower::assemble(ell, fq, fq2)
}

impl FieldTower {
    fn assemble(ell: u64, fq: Fq, fq2: Fq2) -> Result<FieldTower> {
        let q = fq.q();
        let order = fq2.order() - 1;
        let mut primes = prime_factors(q - 1);
        primes.extend(prime_factors(q + 1));
        primes.sort_unstable();
        primes.dedup();
        let generator = (1..fq2.order())
            .map(|i| fq2.from_index(i))
            .find(|g| {
                primes
                    .iter()
                    .all(|&r| !fq2.is_one(&fq2.pow(g, order / r as u128)))
            })
            .expect("F_q2^* is cyclic");
        let xi = fq2.pow(&generator, order / ell as u128);
        let tower = FieldTower {
            ell,
            fq,
            fq2,
            generator,
            xi,
        };
        tower.check_invariants()?;
        Ok(tower)
    }

    /// Rebuilds a tower from explicit moduli, checking that `xi` has order `l`.
    pub fn from_parts(
        p: u64,
        base_modulus: Vec<u64>,
        ext_modulus: [FqElem; 3],
        ell: u64,
        xi: Fq2Elem,
    ) -> Result<FieldTower> {
        let fq = Fq::with_modulus(p, base_modulus)?;
        if ell < 3 {
            return Err(Error::EllTooSmall { ell });
        }
        if fq.q() % ell != ell - 1 {
            return Err(Error::CongruenceViolation { q: fq.q(), ell });
        }
        let fq2 = Fq2::with_modulus(fq.clone(), ext_modulus)?;
        let mut tower = FieldTower::assemble(ell, fq, fq2)?;
        if xi.c0 >= tower.q() || xi.c1 >= tower.q() {
            return Err(Error::InvalidSpec("xi out of range".into()));
        }
        tower.xi = xi;
        tower.check_invariants()?;
        Ok(tower)
    }

    fn check_invariants(&self) -> Result<()> {
        let f = &self.fq2;
        let xi = &self.xi;
        let bad = |msg: &str| Err(Error::InvalidSpec(format!("xi: {msg}")));
        if !f.is_one(&f.pow(xi, self.ell as u128)) {
            return bad("xi^l != 1");
        }
        for r in prime_factors(self.ell) {
            if f.is_one(&f.pow(xi, (self.ell / r) as u128)) {
                return bad("xi is not primitive");
            }
        }
        if f.conj(xi) == *xi {
            return bad("xi lies in F_q");
        }
        if f.conj(xi) != self.xi_inv() {
            return bad("sigma(xi) != xi^-1");
        }
        let t = self.trace_xi();
        let two = self.fq.from_i64(2);
        if t == two || t == self.fq.neg(&two) {
            return bad("xi + xi^-1 = ±2");
        }
        // xi^2 - t xi + 1 = 0
        let tx = f.mul(&f.embed(&t), xi);
        let lhs = f.add(&f.sub(&f.mul(xi, xi), &tx), &f.one());
        if !f.is_zero(&lhs) {
            return bad("minimal polynomial mismatch");
        }
        Ok(())
    }

    pub fn p(&self) -> u64 {
        self.fq.p()
    }

    pub fn n(&self) -> usize {
        self.fq.n()
    }

    pub fn q(&self) -> u64 {
        self.fq.q()
    }

    pub fn ell(&self) -> u64 {
        self.ell
    }

    pub fn fq(&self) -> &Fq {
        &self.fq
    }

    pub fn fq2(&self) -> &Fq2 {
        &self.fq2
    }

    pub fn xi(&self) -> Fq2Elem {
        self.xi
    }

    pub fn xi_inv(&self) -> Fq2Elem {
        self.fq2.inv(&self.xi).unwrap()
    }

    /// `xi + xi^-1 ∈ F_q`.
    pub fn trace_xi(&self) -> FqElem {
        self.fq2.trace(&self.xi)
    }

    /// The least-index generator of `F_{q^2}^*` used to define `xi`.
    pub fn generator(&self) -> Fq2Elem {
        self.generator
    }

    /// `F_q[x]`.
    pub fn fq_x(&self) -> PolyRing<Fq> {
        PolyRing::new(self.fq.clone(), "x")
    }

    /// `F_{q^2}[x]`.
    pub fn fq2_x(&self) -> PolyRing<Fq2> {
        PolyRing::new(self.fq2.clone(), "x")
    }

    /// `K = F_q(x)`.
    pub fn k(&self) -> RatFuncField<Fq> {
        RatFuncField::new(self.fq.clone(), "x")
    }

    /// `K(xi) = F_{q^2}(x)`.
    pub fn k_xi(&self) -> RatFuncField<Fq2> {
        RatFuncField::new(self.fq2.clone(), "x")
    }

    /// The norm-one group `U_{q+1}`, sorted by element index.
    pub fn unit_circle(&self) -> Vec<Fq2Elem> {
        let f = &self.fq2;
        let h = f.pow(&self.generator, self.q() as u128 - 1);
        let mut out = Vec::with_capacity(self.q() as usize + 1);
        let mut cur = f.one();
        for _ in 0..=self.q() {
            out.push(cur);
            cur = f.mul(&cur, &h);
        }
        out.sort_by_key(|e| f.index(e));
        out
    }

    pub fn to_json(&self) -> TowerJson {
        TowerJson {
            p: self.p(),
            n: self.n(),
            ell: self.ell,
            base_modulus: self.fq.modulus().to_vec(),
            ext_modulus: self.fq2.modulus().to_vec(),
            xi: [self.xi.c0, self.xi.c1],
        }
    }

    pub fn from_json(j: &TowerJson) -> Result<FieldTower> {
        let ext: [FqElem; 3] = j
            .ext_modulus
            .clone()
            .try_into()
            .map_err(|_| Error::InvalidSpec("ext_modulus must have three entries".into()))?;
        if j.base_modulus.len() != j.n + 1 {
            return Err(Error::InvalidSpec("base_modulus length disagrees with n".into()));
        }
        FieldTower::from_parts(j.p, j.base_modulus.clone(), ext, j.ell, Fq2Elem::new(j.xi[0], j.xi[1]))
    }

    /// One-line description of the presentation, used as an output header.
    pub fn describe(&self) -> String {
        let t = PolyRing::new(Fq::prime(self.p()).unwrap(), "t");
        let s = PolyRing::new(self.fq.clone(), "s");
        let base = if self.n() == 1 {
            format!("F_q = F_{}", self.p())
        } else {
            format!(
                "F_q = F_{}[t]/({})",
                self.p(),
                t.format(&t.from_coeffs(self.fq.modulus().to_vec()))
            )
        };
        format!(
            "{base}; F_q2 = F_q[s]/({}); xi = {}; l = {}",
            s.format(&s.from_coeffs(self.fq2.modulus().to_vec())),
            self.fq2.format(&self.xi),
            self.ell
        )
    }
}

/// JSON form of a tower. `F_q` elements are integer codes `sum d_i p^i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerJson {
    pub p: u64,
    pub n: usize,
    pub ell: u64,
    pub base_modulus: Vec<u64>,
    pub ext_modulus: Vec<FqElem>,
    pub xi: [FqElem; 2],
}
