use super::{factorize, Poly, RatFunc, RatFuncField};
use crate::error::{Error, Result};
use crate::ff::{Fq, FieldTower};
use crate::ring::{Field, FiniteField, Ring};

/// A place of `F(x)`: a monic irreducible polynomial, or the pole of `x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Place<E> {
    Finite(Poly<E>),
    Infinity,
}

impl<E> Place<E> {
    pub fn degree(&self) -> usize {
        match self {
            Place::Finite(pi) => pi.degree().unwrap_or(0),
            Place::Infinity => 1,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Place::Infinity)
    }
}

impl<E: Clone + PartialEq + std::fmt::Debug> Place<E> {
    pub fn format<F: Field<Elem = E>>(&self, k: &RatFuncField<F>) -> String {
        match self {
            Place::Finite(pi) => k.poly_ring().format(pi),
            Place::Infinity => "infinity".to_string(),
        }
    }
}

/// `v(f)` at `place`; `v_inf = deg(den) - deg(num)`.
pub fn valuation<F: Field>(k: &RatFuncField<F>, f: &RatFunc<F::Elem>, place: &Place<F::Elem>) -> Result<i64> {
    let num_deg = f.num().degree().ok_or(Error::ZeroArgument)?;
    match place {
        Place::Infinity => Ok(f.den().degree().unwrap() as i64 - num_deg as i64),
        Place::Finite(pi) => {
            let p = k.poly_ring();
            Ok(p.multiplicity(f.num(), pi) as i64 - p.multiplicity(f.den(), pi) as i64)
        }
    }
}

/// The places of `F_{q^2}(x)` above a place of `F_q(x)`: one if inert, two
/// conjugate ones if split.
pub fn place_lift_split(place: &Place<u64>, tower: &FieldTower) -> Vec<Place<crate::ff::Fq2Elem>> {
    match place {
        Place::Infinity => vec![Place::Infinity],
        Place::Finite(pi) => {
            let fq2 = tower.fq2();
            let ring = tower.fq2_x();
            let lifted = tower.fq_x().map_into(&ring, pi, |c| fq2.embed(c));
            factorize(&ring, &lifted)
                .expect("place polynomial is nonzero")
                .factors
                .into_iter()
                .map(|(g, _)| Place::Finite(g))
                .collect()
        }
    }
}

/// The places in the support of a nonzero `f ∈ F(x)`: the monic irreducible
/// factors of numerators and denominators, sorted canonically, then infinity.
pub fn support<F: FiniteField>(k: &RatFuncField<F>, fs: &[&RatFunc<F::Elem>]) -> Result<Vec<Place<F::Elem>>> {
    let ring = k.poly_ring();
    let mut polys: Vec<Poly<F::Elem>> = Vec::new();
    for f in fs {
        if f.num().is_zero() {
            return Err(Error::ZeroArgument);
        }
        for part in [f.num(), f.den()] {
            for (g, _) in factorize(ring, part)?.factors {
                if !polys.contains(&g) {
                    polys.push(g);
                }
            }
        }
    }
    polys.sort_by(|a, b| super::factor::cmp_polys(k.base(), a, b));
    let mut out: Vec<_> = polys.into_iter().map(Place::Finite).collect();
    out.push(Place::Infinity);
    Ok(out)
}

/// Monic irreducibles over `F_q` of degree `d`, in canonical order (for tests
/// and exhaustive sums over small fields).
pub fn irreducibles_of_degree(fq: &Fq, d: usize) -> Vec<Poly<u64>> {
    let ring = super::PolyRing::new(fq.clone(), "x");
    let q = fq.q();
    let total = q.checked_pow(d as u32).expect("enumeration too large");
    let mut out = Vec::new();
    for k in 0..total {
        let mut coeffs = Vec::with_capacity(d + 1);
        let mut m = k;
        for _ in 0..d {
            coeffs.push(m % q);
            m /= q;
        }
        coeffs.push(1);
        let f = ring.from_coeffs(coeffs);
        if super::is_irreducible(&ring, &f) {
            out.push(f);
        }
    }
    out.sort_by(|a, b| super::factor::cmp_polys(fq, a, b));
    out
}
