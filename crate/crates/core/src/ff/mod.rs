//! The finite field tower `F_p ⊂ F_q ⊂ F_{q^2}`.

mod arith;
mod fq;
mod fq2;
mod tower;

pub use arith::{is_prime, prime_factors};
pub use fq::{Fq, FqElem};
pub use fq2::{Fq2, Fq2Elem};
pub use tower::{build_field_tower, FieldTower, TowerJson};

/// Splits `q = p^n` into `(p, n)`; `None` if `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, usize)> {
    let primes = prime_factors(q);
    if primes.len() != 1 {
        return None;
    }
    let p = primes[0];
    let mut n = 0;
    let mut m = q;
    while m.is_multiple_of(p) {
        m /= p;
        n += 1;
    }
    Some((p, n))
}
