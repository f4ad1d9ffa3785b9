//! JSON schemas for extension specs, ramification tables and classifications.
//!
//! Polynomials are ascending coefficient lists. `F_q` elements are integer
//! codes, `F_{q^2}` elements are pairs `[c0, c1]` meaning `c0 + c1*s`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ff::{FieldTower, Fq2Elem, FqElem, TowerJson};
use crate::kummer::{ExtensionSpec, Fq2RatFunc, FqRatFunc};
use crate::poly::{Poly, RatFuncField};
use crate::ramification::{CaseTag, RamificationRecord};
use crate::ring::{Field, FiniteField};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatFuncJson<C> {
    pub num: Vec<C>,
    pub den: Vec<C>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProvenanceJson {
    #[serde(rename = "A")]
    pub a: Vec<FqElem>,
    #[serde(rename = "B")]
    pub b: Vec<FqElem>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecJson {
    pub tower: TowerJson,
    pub a: RatFuncJson<[FqElem; 2]>,
    pub u: RatFuncJson<FqElem>,
    pub alpha: RatFuncJson<FqElem>,
    #[serde(rename = "P")]
    pub p: Vec<RatFuncJson<FqElem>>,
    pub eta: [FqElem; 2],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<ProvenanceJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RamificationJson {
    pub place: String,
    pub degree: usize,
    pub v_alpha: i64,
    pub v_u: i64,
    pub case: CaseTag,
    pub e: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyJson {
    pub isomorphic: bool,
    pub j: Option<u64>,
    pub witness: Option<RatFuncJson<[FqElem; 2]>>,
}

fn pair(e: &Fq2Elem) -> [FqElem; 2] {
    [e.c0, e.c1]
}

pub fn ratfunc_q_to_json(f: &FqRatFunc) -> RatFuncJson<FqElem> {
    RatFuncJson {
        num: f.num().coeffs().to_vec(),
        den: f.den().coeffs().to_vec(),
    }
}

pub fn ratfunc_q2_to_json(f: &Fq2RatFunc) -> RatFuncJson<[FqElem; 2]> {
    RatFuncJson {
        num: f.num().coeffs().iter().map(pair).collect(),
        den: f.den().coeffs().iter().map(pair).collect(),
    }
}

fn check_elem<F: FiniteField>(field: &F, code: u128) -> Result<()> {
    if code >= field.order() {
        return Err(Error::InvalidSpec(format!("coefficient {code} out of range")));
    }
    Ok(())
}

fn parse_q(tower: &FieldTower, coeffs: &[FqElem]) -> Result<Poly<FqElem>> {
    for c in coeffs {
        check_elem(tower.fq(), *c as u128)?;
    }
    Ok(tower.fq_x().from_coeffs(coeffs.to_vec()))
}

fn parse_q2(tower: &FieldTower, coeffs: &[[FqElem; 2]]) -> Result<Poly<Fq2Elem>> {
    for [c0, c1] in coeffs {
        check_elem(tower.fq(), *c0 as u128)?;
        check_elem(tower.fq(), *c1 as u128)?;
    }
    Ok(tower.fq2_x().from_coeffs(coeffs.iter().map(|[c0, c1]| Fq2Elem::new(*c0, *c1)).collect()))
}

fn frac<F: Field>(k: &RatFuncField<F>, num: Poly<F::Elem>, den: Poly<F::Elem>) -> Result<crate::poly::RatFunc<F::Elem>> {
    let f = k.frac(num.clone(), den.clone())?;
    if f.num() != &num || f.den() != &den {
        return Err(Error::InvalidSpec("rational function is not in lowest terms with monic denominator".into()));
    }
    Ok(f)
}

pub fn ratfunc_q_from_json(tower: &FieldTower, j: &RatFuncJson<FqElem>) -> Result<FqRatFunc> {
    frac(&tower.k(), parse_q(tower, &j.num)?, parse_q(tower, &j.den)?)
}

pub fn ratfunc_q2_from_json(tower: &FieldTower, j: &RatFuncJson<[FqElem; 2]>) -> Result<Fq2RatFunc> {
    frac(&tower.k_xi(), parse_q2(tower, &j.num)?, parse_q2(tower, &j.den)?)
}

pub fn spec_to_json(spec: &ExtensionSpec) -> SpecJson {
    SpecJson {
        tower: spec.tower.to_json(),
        a: ratfunc_q2_to_json(&spec.a),
        u: ratfunc_q_to_json(&spec.u),
        alpha: ratfunc_q_to_json(&spec.alpha),
        p: spec.generic_poly().poly.coeffs().iter().map(ratfunc_q_to_json).collect(),
        eta: pair(&spec.eta),
        provenance: spec.provenance.as_ref().map(|(a, b)| ProvenanceJson {
            a: a.coeffs().to_vec(),
            b: b.coeffs().to_vec(),
        }),
    }
}

/// Rebuilds and revalidates a spec; `alpha` and `P` must match the values
/// derived from `a` and `u`.
pub fn spec_from_json(j: &SpecJson) -> Result<ExtensionSpec> {
    let tower = FieldTower::from_json(&j.tower)?;
    let a = ratfunc_q2_from_json(&tower, &j.a)?;
    let u = ratfunc_q_from_json(&tower, &j.u)?;
    let eta = Fq2Elem::new(j.eta[0], j.eta[1]);
    check_elem(tower.fq(), eta.c0 as u128)?;
    check_elem(tower.fq(), eta.c1 as u128)?;
    let provenance = match &j.provenance {
        Some(p) => Some((parse_q(&tower, &p.a)?, parse_q(&tower, &p.b)?)),
        None => None,
    };
    let spec = ExtensionSpec::new(&tower, a, u, eta, provenance)?;
    if ratfunc_q_from_json(&tower, &j.alpha)? != spec.alpha {
        return Err(Error::InvalidSpec("alpha differs from a + sigma(a)".into()));
    }
    let p: Vec<_> = spec.generic_poly().poly.coeffs().iter().map(ratfunc_q_to_json).collect();
    if p != j.p {
        return Err(Error::InvalidSpec("P differs from the generic polynomial of (u, alpha)".into()));
    }
    Ok(spec)
}

pub fn spec_to_string(spec: &ExtensionSpec) -> String {
    serde_json::to_string_pretty(&spec_to_json(spec)).expect("spec serializes")
}

pub fn spec_from_str(s: &str) -> Result<ExtensionSpec> {
    let j: SpecJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    spec_from_json(&j)
}

pub fn ramification_to_json(tower: &FieldTower, records: &[RamificationRecord]) -> Vec<RamificationJson> {
    let k = tower.k();
    records
        .iter()
        .map(|r| RamificationJson {
            place: r.place.format(&k),
            degree: r.degree,
            v_alpha: r.v_alpha,
            v_u: r.v_u,
            case: r.case_tag,
            e: r.e,
        })
        .collect()
}

pub fn classify_to_json(result: &Option<(u64, Fq2RatFunc)>) -> ClassifyJson {
    ClassifyJson {
        isomorphic: result.is_some(),
        j: result.as_ref().map(|(j, _)| *j),
        witness: result.as_ref().map(|(_, c)| ratfunc_q2_to_json(c)),
    }
}
