//! JSON interchange for [`HopfData`]. Coefficients are exact expression
//! strings in `z` (standing for ζₙ), e.g. `"(1+z)/2"`.

use serde::{Deserialize, Serialize};

use crate::arith::{parse_expr, CycNumber};
use crate::error::{Error, Result};

use super::{validate_all, HopfData, HopfParts, Sparse};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum GrouplikeJson {
    Index(usize),
    Combination(Vec<(usize, String)>),
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct HopfJson {
    #[serde(default)]
    pub name: Option<String>,
    pub dim: usize,
    pub order: u32,
    pub basis: Vec<String>,
    /// `[i, j, k, c]`: `b_i b_j` has coefficient `c` at `b_k`.
    pub mult: Vec<(usize, usize, usize, String)>,
    /// `[i, j, k, c]`: `Δ(b_i)` has coefficient `c` at `b_j ⊗ b_k`.
    pub comult: Vec<(usize, usize, usize, String)>,
    /// `[k, c]`: `1_H` has coefficient `c` at `b_k`.
    pub unit: Vec<(usize, String)>,
    pub counit: Vec<String>,
    /// `[i, k, c]`: `S(b_i)` has coefficient `c` at `b_k`.
    pub antipode: Vec<(usize, usize, String)>,
    #[serde(default)]
    pub grouplikes: Vec<GrouplikeJson>,
    #[serde(default)]
    pub skew_primitives: Vec<(usize, usize, usize)>,
}

pub fn to_json(h: &HopfData) -> HopfJson {
    let d = h.dim();
    let s = |c: &CycNumber| c.to_string();
    let mut mult = Vec::new();
    for i in 0..d {
        for j in 0..d {
            for (k, c) in h.product(i, j) {
                mult.push((i, j, *k, s(c)));
            }
        }
    }
    let mut comult = Vec::new();
    for i in 0..d {
        for (j, k, c) in h.coproduct(i) {
            comult.push((i, *j, *k, s(c)));
        }
    }
    let mut antipode = Vec::new();
    for i in 0..d {
        for (k, c) in h.antipode(i) {
            antipode.push((i, *k, s(c)));
        }
    }
    let grouplikes = h
        .grouplikes()
        .iter()
        .map(|g| match g.as_slice() {
            [(i, c)] if c.is_one() => GrouplikeJson::Index(*i),
            _ => GrouplikeJson::Combination(g.iter().map(|(i, c)| (*i, s(c))).collect()),
        })
        .collect();
    HopfJson {
        name: Some(h.name().to_string()),
        dim: d,
        order: h.order(),
        basis: h.basis().to_vec(),
        mult,
        comult,
        unit: h.unit().iter().map(|(k, c)| (*k, s(c))).collect(),
        counit: h.counit().iter().map(s).collect(),
        antipode,
        grouplikes,
        skew_primitives: h.skew_primitives().to_vec(),
    }
}

fn scalar(text: &str, order: u32) -> Result<CycNumber> {
    parse_expr(text, order)?
        .constant_value()
        .ok_or_else(|| Error::Json(format!("coefficient `{text}` is not a constant")))
}

fn index(i: usize, dim: usize) -> Result<usize> {
    if i < dim {
        Ok(i)
    } else {
        Err(Error::Json(format!("basis index {i} out of range (dim {dim})")))
    }
}

/// Builds structure constants from JSON without checking axioms.
pub fn parts_from_json(j: &HopfJson) -> Result<HopfParts> {
    let d = j.dim;
    if j.order == 0 {
        return Err(Error::Json("order must be positive".into()));
    }
    if j.basis.len() != d {
        return Err(Error::Json(format!(
            "dim is {d} but {} basis labels given",
            j.basis.len()
        )));
    }
    if j.counit.len() != d {
        return Err(Error::Json(format!("counit must list {d} values")));
    }
    let mut mult: Vec<Sparse> = vec![Vec::new(); d * d];
    for (a, b, k, c) in &j.mult {
        mult[index(*a, d)? * d + index(*b, d)?].push((index(*k, d)?, scalar(c, j.order)?));
    }
    let mut comult = vec![Vec::new(); d];
    for (i, a, b, c) in &j.comult {
        comult[index(*i, d)?].push((index(*a, d)?, index(*b, d)?, scalar(c, j.order)?));
    }
    let mut antipode: Vec<Sparse> = vec![Vec::new(); d];
    for (i, k, c) in &j.antipode {
        antipode[index(*i, d)?].push((index(*k, d)?, scalar(c, j.order)?));
    }
    let unit = j
        .unit
        .iter()
        .map(|(k, c)| Ok((index(*k, d)?, scalar(c, j.order)?)))
        .collect::<Result<Sparse>>()?;
    let counit = j
        .counit
        .iter()
        .map(|c| scalar(c, j.order))
        .collect::<Result<Vec<_>>>()?;
    let grouplikes = j
        .grouplikes
        .iter()
        .map(|g| match g {
            GrouplikeJson::Index(i) => Ok(vec![(index(*i, d)?, CycNumber::one(j.order))]),
            GrouplikeJson::Combination(terms) => terms
                .iter()
                .map(|(i, c)| Ok((index(*i, d)?, scalar(c, j.order)?)))
                .collect(),
        })
        .collect::<Result<Vec<Sparse>>>()?;
    for &(x, g, h) in &j.skew_primitives {
        index(x, d)?;
        index(g, d)?;
        index(h, d)?;
    }
    Ok(HopfParts {
        name: j.name.clone().unwrap_or_else(|| "imported".into()),
        order: j.order,
        basis: j.basis.clone(),
        mult,
        unit,
        comult,
        counit,
        antipode,
        grouplikes,
        skew_primitives: j.skew_primitives.clone(),
    })
}

/// Imports and fully validates; any axiom failure rejects the data.
pub fn from_json(j: &HopfJson) -> Result<HopfData> {
    let h = HopfData::from_parts(parts_from_json(j)?)?;
    let report = validate_all(&h);
    if report.passed() {
        Ok(h)
    } else {
        Err(Error::Validation(report.to_string()))
    }
}
