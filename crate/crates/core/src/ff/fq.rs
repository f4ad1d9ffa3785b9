use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::arith::{is_prime, mul_mod, prime_factors};
use crate::error::{Error, Result};
use crate::poly::{is_irreducible, PolyRing};
use crate::ring::{Field, FiniteField, Ring};

/// Element of `F_q`, encoded as `sum d_i p^i` where `d_i` is the coefficient
/// of `t^i` in `F_p[t]/(modulus)`.
pub type FqElem = u64;

// Largest field for which discrete log tables are precomputed.
const TABLE_LIMIT: u64 = 1 << 16;

/// The finite field `F_q = F_p[t]/(modulus)`, `q = p^n`.
#[derive(Clone)]
pub struct Fq {
    ctx: Arc<FqCtx>,
}

struct FqCtx {
    p: u64,
    n: usize,
    q: u64,
    /// Monic, ascending, length `n + 1`.
    modulus: Vec<u64>,
    tables: Option<LogTables>,
}

struct LogTables {
    exp: Vec<u64>,
    log: Vec<u32>,
}

impl fmt::Debug for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}^{}", self.ctx.p, self.ctx.n)
    }
}

impl PartialEq for Fq {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.p == other.ctx.p && self.ctx.modulus == other.ctx.modulus
    }
}

impl Eq for Fq {}

impl Fq {
    /// The prime field `F_p`, presented as `F_p[t]/(t)`.
    pub fn prime(p: u64) -> Result<Fq> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Fq::from_parts(p, vec![0, 1]))
    }

    /// `F_{p^n}` with the least monic irreducible modulus, comparing
    /// coefficient sequences lexicographically from the constant term up.
    pub fn new(p: u64, n: usize) -> Result<Fq> {
        let fp = Fq::prime(p)?;
        if n == 0 {
            return Err(Error::InvalidDegree);
        }
        let q = checked_pow(p, n).ok_or(Error::Overflow)?;
        if n == 1 {
            return Ok(fp);
        }
        let ring = PolyRing::new(fp, "t");
        for k in 0..q {
            // c_0 is the most significant digit of k
            let mut coeffs = vec![0u64; n + 1];
            let mut rest = k;
            for i in (0..n).rev() {
                coeffs[i] = rest % p;
                rest /= p;
            }
            coeffs[n] = 1;
            if coeffs[0] == 0 {
                continue;
            }
            let cand = ring.from_coeffs(coeffs.clone());
            if is_irreducible(&ring, &cand) {
                return Ok(Fq::from_parts(p, coeffs));
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    /// `F_{p^n}` for an explicitly given monic irreducible modulus.
    pub fn with_modulus(p: u64, modulus: Vec<u64>) -> Result<Fq> {
        let fp = Fq::prime(p)?;
        let n = modulus.len().checked_sub(1).filter(|&n| n > 0).ok_or(Error::InvalidDegree)?;
        checked_pow(p, n).ok_or(Error::Overflow)?;
        if modulus[n] != 1 || modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidSpec("modulus must be monic over F_p".into()));
        }
        if n == 1 {
            return if modulus[0] == 0 {
                Ok(fp)
            } else {
                Err(Error::InvalidSpec("degree-1 modulus must be t".into()))
            };
        }
        let ring = PolyRing::new(fp, "t");
        if !is_irreducible(&ring, &ring.from_coeffs(modulus.clone())) {
            return Err(Error::InvalidSpec("modulus is reducible".into()));
        }
        Ok(Fq::from_parts(p, modulus))
    }

    fn from_parts(p: u64, modulus: Vec<u64>) -> Fq {
        let n = modulus.len() - 1;
        let q = checked_pow(p, n).unwrap();
        let mut ctx = FqCtx {
            p,
            n,
            q,
            modulus,
            tables: None,
        };
        if n > 1 && q <= TABLE_LIMIT {
            ctx.tables = Some(LogTables::build(&ctx));
        }
        Fq { ctx: Arc::new(ctx) }
    }

    pub fn p(&self) -> u64 {
        self.ctx.p
    }

    pub fn n(&self) -> usize {
        self.ctx.n
    }

    pub fn q(&self) -> u64 {
        self.ctx.q
    }

    /// Ascending coefficients of the defining polynomial over `F_p`.
    pub fn modulus(&self) -> &[u64] {
        &self.ctx.modulus
    }

    /// Digits over `F_p` (coefficients of `1, t, ..., t^(n-1)`).
    pub fn digits(&self, a: FqElem) -> Vec<u64> {
        self.ctx.digits(a)
    }

    pub fn from_digits(&self, d: &[u64]) -> FqElem {
        self.ctx.encode(d)
    }
}

impl FqCtx {
    fn digits(&self, mut a: u64) -> Vec<u64> {
        let mut d = vec![0; self.n];
        for slot in d.iter_mut() {
            *slot = a % self.p;
            a /= self.p;
        }
        d
    }

    fn encode(&self, d: &[u64]) -> u64 {
        d.iter().rev().fold(0, |acc, &x| acc * self.p + x % self.p)
    }

    fn add(&self, a: u64, b: u64) -> u64 {
        if self.n == 1 {
            let s = a as u128 + b as u128;
            return (s % self.p as u128) as u64;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0u64;
        let mut place = 1u64;
        for _ in 0..self.n {
            let d = ((a % self.p) + (b % self.p)) % self.p;
            out += d * place;
            a /= self.p;
            b /= self.p;
            place = place.wrapping_mul(self.p);
        }
        out
    }

    fn neg(&self, a: u64) -> u64 {
        if self.n == 1 {
            return if a == 0 { 0 } else { self.p - a };
        }
        let d: Vec<u64> = self
            .digits(a)
            .into_iter()
            .map(|x| if x == 0 { 0 } else { self.p - x })
            .collect();
        self.encode(&d)
    }

    fn mul_slow(&self, a: u64, b: u64) -> u64 {
        let (da, db) = (self.digits(a), self.digits(b));
        let n = self.n;
        let p = self.p;
        let mut prod = vec![0u64; 2 * n - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + mul_mod(x, y, p)) % p;
            }
        }
        for k in (n..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for i in 0..n {
                let t = mul_mod(c, self.modulus[i], p);
                prod[k - n + i] = (prod[k - n + i] + p - t) % p;
            }
        }
        self.encode(&prod[..n])
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        if self.n == 1 {
            return mul_mod(a, b, self.p);
        }
        if a == 0 || b == 0 {
            return 0;
        }
        match &self.tables {
            Some(t) => {
                let s = t.log[a as usize] as usize + t.log[b as usize] as usize;
                t.exp[s % (self.q as usize - 1)]
            }
            None => self.mul_slow(a, b),
        }
    }

    fn pow(&self, a: u64, mut e: u128) -> u64 {
        let mut base = a;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    fn inv(&self, a: u64) -> Option<u64> {
        if a == 0 {
            return None;
        }
        if let Some(t) = &self.tables {
            let l = t.log[a as usize] as usize;
            let order = self.q as usize - 1;
            return Some(t.exp[(order - l) % order]);
        }
        Some(self.pow(a, self.q as u128 - 2))
    }
}

impl LogTables {
    fn build(ctx: &FqCtx) -> LogTables {
        let order = ctx.q - 1;
        let primes = prime_factors(order);
        let generator = (2..ctx.q)
            .find(|&g| primes.iter().all(|&r| ctx.pow_slow(g, order / r) != 1))
            .unwrap_or(1);
        let mut exp = Vec::with_capacity(order as usize);
        let mut log = vec![0u32; ctx.q as usize];
        let mut cur = 1u64;
        for i in 0..order {
            exp.push(cur);
            log[cur as usize] = i as u32;
            cur = ctx.mul_slow(cur, generator);
        }
        LogTables { exp, log }
    }
}

impl FqCtx {
    fn pow_slow(&self, a: u64, mut e: u64) -> u64 {
        let mut base = a;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_slow(acc, base);
            }
            base = self.mul_slow(base, base);
            e >>= 1;
        }
        acc
    }
}

pub(crate) fn checked_pow(p: u64, n: usize) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..n {
        acc = acc.checked_mul(p)?;
    }
    (acc < 1 << 62).then_some(acc)
}

impl Ring for Fq {
    type Elem = FqElem;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn is_one(&self, a: &u64) -> bool {
        *a == 1
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        self.ctx.add(*a, *b)
    }
    fn neg(&self, a: &u64) -> u64 {
        self.ctx.neg(*a)
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        self.ctx.mul(*a, *b)
    }
    fn pow(&self, a: &u64, e: u128) -> u64 {
        self.ctx.pow(*a, e)
    }
    fn from_bigint(&self, n: &BigInt) -> u64 {
        let p = BigInt::from(self.ctx.p);
        let r = ((n % &p) + &p) % &p;
        r.to_u64().unwrap()
    }
    fn characteristic(&self) -> u64 {
        self.ctx.p
    }
    fn format(&self, a: &u64) -> String {
        if self.ctx.n == 1 {
            return a.to_string();
        }
        let ring = PolyRing::new(Fq::prime(self.ctx.p).unwrap(), "t");
        ring.format(&ring.from_coeffs(self.ctx.digits(*a)))
    }
}

impl Field for Fq {
    fn inv(&self, a: &u64) -> Option<u64> {
        self.ctx.inv(*a)
    }
}

impl FiniteField for Fq {
    fn order(&self) -> u128 {
        self.ctx.q as u128
    }
    fn index(&self, a: &u64) -> u128 {
        *a as u128
    }
    fn from_index(&self, i: u128) -> u64 {
        i as u64
    }
}
