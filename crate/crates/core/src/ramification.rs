//! Ramification indices of `L/K` read off from `v(u)` and `v(alpha)`.

use num_integer::gcd;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ff::FqElem;
use crate::kummer::{lift, ExtensionSpec, FqRatFunc, K};
use crate::poly::{place_lift_split, support, valuation, Place};

/// Which branch of the case analysis a place falls into.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CaseTag {
    #[serde(rename = "NonNegVal_AlphaNonzero")]
    NonNegValAlphaNonzero,
    #[serde(rename = "NonNegVal_AlphaZero")]
    NonNegValAlphaZero,
    #[serde(rename = "NegVal_OddU")]
    NegValOddU,
    #[serde(rename = "NegVal_EvenU")]
    NegValEvenU,
}

impl CaseTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            CaseTag::NonNegValAlphaNonzero => "NonNegVal_AlphaNonzero",
            CaseTag::NonNegValAlphaZero => "NonNegVal_AlphaZero",
            CaseTag::NegValOddU => "NegVal_OddU",
            CaseTag::NegValEvenU => "NegVal_EvenU",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamificationRecord {
    pub place: Place<FqElem>,
    pub degree: usize,
    pub v_alpha: i64,
    pub v_u: i64,
    pub case_tag: CaseTag,
    pub e: u64,
}

impl RamificationRecord {
    pub fn is_ramified(&self) -> bool {
        self.e > 1
    }
}

/// `e(P|p)` from `v = l v(u) - 2 v(alpha)`:
/// for `v >= 0`, `e = l / gcd(l, v(alpha))`, and `p` has even degree when
/// `v > 0` and `v(alpha) != 0`; for `v < 0`, `e = 2` if `v(u)` is odd, else 1.
pub fn ramification_index(
    k: &K,
    u: &FqRatFunc,
    alpha: &FqRatFunc,
    ell: u64,
    place: &Place<FqElem>,
) -> Result<RamificationRecord> {
    let v_u = valuation(k, u, place)?;
    let v_alpha = valuation(k, alpha, place)?;
    let v = ell as i64 * v_u - 2 * v_alpha;
    let degree = place.degree();
    let (case_tag, e) = if v >= 0 {
        if v_alpha != 0 {
            if v > 0 && degree % 2 == 1 {
                return Err(Error::EvenDegreeViolation {
                    place: place.format(k),
                    degree,
                });
            }
            (CaseTag::NonNegValAlphaNonzero, ell / gcd(ell, v_alpha.unsigned_abs()))
        } else {
            (CaseTag::NonNegValAlphaZero, 1)
        }
    } else if v_u % 2 != 0 {
        (CaseTag::NegValOddU, 2)
    } else {
        (CaseTag::NegValEvenU, 1)
    };
    if !ell.is_multiple_of(e) {
        return Err(Error::IndexDivisibilityViolation {
            place: place.format(k),
            e,
            ell,
        });
    }
    Ok(RamificationRecord {
        place: place.clone(),
        degree,
        v_alpha,
        v_u,
        case_tag,
        e,
    })
}

/// One record per place in the support of `u` and `alpha`, plus infinity,
/// in canonical order. Every other place is unramified.
pub fn ramification_table(spec: &ExtensionSpec) -> Result<Vec<RamificationRecord>> {
    let k = spec.tower.k();
    support(&k, &[&spec.u, &spec.alpha])?
        .iter()
        .map(|place| ramification_index(&k, &spec.u, &spec.alpha, spec.ell(), place))
        .collect()
}

/// `e` from the Kummer side: `l / gcd(l, v(a))` at any place of `F_{q^2}(x)`
/// above `place`.
pub fn kummer_side_index(spec: &ExtensionSpec, place: &Place<FqElem>) -> Result<u64> {
    let kx = spec.tower.k_xi();
    let ell = spec.ell();
    let mut out = None;
    for above in place_lift_split(place, &spec.tower) {
        let v = valuation(&kx, &spec.a, &above)?;
        let e = ell / gcd(ell, v.unsigned_abs());
        if *out.get_or_insert(e) != e {
            return Err(Error::InvalidSpec("conjugate places disagree".into()));
        }
    }
    Ok(out.expect("every place has a place above it"))
}

/// For odd `l` and `u = 1`: places where `ramified <=> v(alpha) < 0` or
/// `e = l / gcd(l, v(alpha))` fails. Empty for reduced representatives.
pub fn odd_criterion_violations(spec: &ExtensionSpec, records: &[RamificationRecord]) -> Vec<Place<FqElem>> {
    let ell = spec.ell();
    records
        .iter()
        .filter(|r| {
            let expected = if r.v_alpha < 0 { ell / gcd(ell, r.v_alpha.unsigned_abs()) } else { 1 };
            r.is_ramified() != (r.v_alpha < 0) || r.e != expected
        })
        .map(|r| r.place.clone())
        .collect()
}

/// Places where `v(alpha)` lies outside the reduced range: a ramified finite
/// place with `v(alpha) ∉ [-(l-1), -1]`, or `v_inf(alpha) < 0`.
pub fn normalization_violations(spec: &ExtensionSpec, records: &[RamificationRecord]) -> Vec<Place<FqElem>> {
    let ell = spec.ell() as i64;
    records
        .iter()
        .filter(|r| match r.place {
            Place::Infinity => r.v_alpha < 0,
            Place::Finite(_) => r.is_ramified() && !(-(ell - 1)..=-1).contains(&r.v_alpha),
        })
        .map(|r| r.place.clone())
        .collect()
}

/// `a` and `sigma(a)` are the roots of `X^2 - alpha X + u^l`.
pub fn trace_norm_consistent(spec: &ExtensionSpec) -> bool {
    use crate::ring::{Conjugation, Ring};
    let kx = spec.tower.k_xi();
    let k = spec.tower.k();
    let alpha = lift(&spec.tower, &spec.alpha);
    let norm = lift(&spec.tower, &k.pow(&spec.u, spec.ell() as u128));
    [spec.a.clone(), kx.conj(&spec.a)].iter().all(|r| {
        let val = kx.add(&kx.sub(&kx.mul(r, r), &kx.mul(&alpha, r)), &norm);
        kx.is_zero(&val)
    })
}
