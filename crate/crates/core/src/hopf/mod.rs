//! Finite-dimensional Hopf algebras given by structure constants.
//!
//! A [`HopfData`] stores, over the basis `b_0, …, b_{d-1}`:
//!
//! * `mult[i*d + j]`: the expansion of `b_i b_j`,
//! * `unit`: the expansion of `1_H`,
//! * `comult[i]`: the terms `(c, j, k)` of `Δ(b_i) = Σ c b_j ⊗ b_k`,
//! * `counit[i] = ε(b_i)`,
//! * `antipode[i]`: the expansion of `S(b_i)`,
//!
//! plus declared group-like elements (arbitrary combinations of basis
//! elements) and skew-primitive triples `(x, g, h)` meaning
//! `Δ(b_x) = b_x ⊗ b_g + b_h ⊗ b_x`. The engine never searches for
//! group-likes; it only checks what is declared.

mod dual;
mod element;
mod json;
mod validate;

use std::collections::BTreeMap;

use crate::arith::CycNumber;
use crate::error::{Error, Result};

pub use dual::{dual_hopf, dual_label, DualMetadata};
pub use element::{tensor_multiply, tensor_of, AlgElement, Functional, Tensor2};
pub use json::{from_json, parts_from_json, to_json, GrouplikeJson, HopfJson};
pub use validate::{validate_all, validate_antipode, validate_bialgebra, validate_metadata, AxiomFailure, AxiomReport};

/// Sparse vector over the basis: sorted indices, no zero coefficients.
pub type Sparse = Vec<(usize, CycNumber)>;

/// One term `c · b_j ⊗ b_k` of a coproduct.
pub type CoTerm = (usize, usize, CycNumber);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfData {
    name: String,
    dim: usize,
    order: u32,
    basis: Vec<String>,
    mult: Vec<Sparse>,
    unit: Sparse,
    comult: Vec<Vec<CoTerm>>,
    counit: Vec<CycNumber>,
    antipode: Vec<Sparse>,
    grouplikes: Vec<Sparse>,
    skew_primitives: Vec<(usize, usize, usize)>,
}

/// Raw parts for [`HopfData::from_parts`].
#[derive(Clone, Debug)]
pub struct HopfParts {
    pub name: String,
    pub order: u32,
    pub basis: Vec<String>,
    pub mult: Vec<Sparse>,
    pub unit: Sparse,
    pub comult: Vec<Vec<CoTerm>>,
    pub counit: Vec<CycNumber>,
    pub antipode: Vec<Sparse>,
    pub grouplikes: Vec<Sparse>,
    pub skew_primitives: Vec<(usize, usize, usize)>,
}

/// Sorts, merges and drops zeros.
pub fn normalize_sparse(v: impl IntoIterator<Item = (usize, CycNumber)>) -> Sparse {
    let mut acc: BTreeMap<usize, CycNumber> = BTreeMap::new();
    for (i, c) in v {
        match acc.get_mut(&i) {
            Some(x) => *x = &*x + &c,
            None => {
                acc.insert(i, c);
            }
        }
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

fn normalize_coterms(v: impl IntoIterator<Item = CoTerm>) -> Vec<CoTerm> {
    let mut acc: BTreeMap<(usize, usize), CycNumber> = BTreeMap::new();
    for (j, k, c) in v {
        match acc.get_mut(&(j, k)) {
            Some(x) => *x = &*x + &c,
            None => {
                acc.insert((j, k), c);
            }
        }
    }
    acc.into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|((j, k), c)| (j, k, c))
        .collect()
}

impl HopfData {
    /// Assembles structure constants after shape and field checks. Axioms are
    /// not checked here; see [`validate_all`].
    pub fn from_parts(p: HopfParts) -> Result<Self> {
        let dim = p.basis.len();
        if dim == 0 {
            return Err(Error::Malformed("empty basis".into()));
        }
        let shape = |what: &str, got: usize, want: usize| {
            if got == want {
                Ok(())
            } else {
                Err(Error::Malformed(format!("{what}: expected {want} entries, got {got}")))
            }
        };
        shape("mult", p.mult.len(), dim * dim)?;
        shape("comult", p.comult.len(), dim)?;
        shape("counit", p.counit.len(), dim)?;
        shape("antipode", p.antipode.len(), dim)?;
        let order = p.order;
        let check_scalar = |c: &CycNumber| {
            if c.order() == order {
                Ok(())
            } else {
                Err(Error::Malformed(format!(
                    "coefficient in Q(zeta_{}) inside an algebra over Q(zeta_{order})",
                    c.order()
                )))
            }
        };
        let check_index = |i: usize| {
            if i < dim {
                Ok(())
            } else {
                Err(Error::Malformed(format!("basis index {i} out of range (dim {dim})")))
            }
        };
        for s in p
            .mult
            .iter()
            .chain(&p.antipode)
            .chain(&p.grouplikes)
            .chain(std::iter::once(&p.unit))
        {
            for (i, c) in s {
                check_index(*i)?;
                check_scalar(c)?;
            }
        }
        for row in &p.comult {
            for (j, k, c) in row {
                check_index(*j)?;
                check_index(*k)?;
                check_scalar(c)?;
            }
        }
        for c in &p.counit {
            check_scalar(c)?;
        }
        for &(x, g, h) in &p.skew_primitives {
            check_index(x)?;
            check_index(g)?;
            check_index(h)?;
        }
        Ok(HopfData {
            name: p.name,
            dim,
            order,
            basis: p.basis,
            mult: p.mult.into_iter().map(normalize_sparse).collect(),
            unit: normalize_sparse(p.unit),
            comult: p.comult.into_iter().map(normalize_coterms).collect(),
            counit: p.counit,
            antipode: p.antipode.into_iter().map(normalize_sparse).collect(),
            grouplikes: p.grouplikes.into_iter().map(normalize_sparse).collect(),
            skew_primitives: p.skew_primitives,
        })
    }

    pub fn into_parts(self) -> HopfParts {
        HopfParts {
            name: self.name,
            order: self.order,
            basis: self.basis,
            mult: self.mult,
            unit: self.unit,
            comult: self.comult,
            counit: self.counit,
            antipode: self.antipode,
            grouplikes: self.grouplikes,
            skew_primitives: self.skew_primitives,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `n` such that scalars live in Q(ζₙ).
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn label(&self, i: usize) -> &str {
        &self.basis[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.basis.iter().position(|b| b == label)
    }

    /// `b_i b_j`.
    pub fn product(&self, i: usize, j: usize) -> &Sparse {
        &self.mult[i * self.dim + j]
    }

    pub fn unit(&self) -> &Sparse {
        &self.unit
    }

    /// Terms of `Δ(b_i)`.
    pub fn coproduct(&self, i: usize) -> &[CoTerm] {
        &self.comult[i]
    }

    pub fn counit(&self) -> &[CycNumber] {
        &self.counit
    }

    /// `S(b_i)`.
    pub fn antipode(&self, i: usize) -> &Sparse {
        &self.antipode[i]
    }

    pub fn grouplikes(&self) -> &[Sparse] {
        &self.grouplikes
    }

    pub fn skew_primitives(&self) -> &[(usize, usize, usize)] {
        &self.skew_primitives
    }

    /// Group-likes that are single basis elements with coefficient one.
    pub fn grouplike_indices(&self) -> Option<Vec<usize>> {
        self.grouplikes
            .iter()
            .map(|s| match s.as_slice() {
                [(i, c)] if c.is_one() => Some(*i),
                _ => None,
            })
            .collect()
    }

    /// Index of the unit when `1_H` is a basis element.
    pub fn unit_index(&self) -> Option<usize> {
        match self.unit.as_slice() {
            [(i, c)] if c.is_one() => Some(*i),
            _ => None,
        }
    }

    /// Equal structure constants, ignoring name, labels and metadata.
    pub fn same_structure(&self, other: &HopfData) -> bool {
        self.dim == other.dim
            && self.order == other.order
            && self.mult == other.mult
            && self.unit == other.unit
            && self.comult == other.comult
            && self.counit == other.counit
            && self.antipode == other.antipode
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Replaces the declared metadata.
    pub fn with_metadata(mut self, grouplikes: Vec<Sparse>, skew: Vec<(usize, usize, usize)>) -> Self {
        self.grouplikes = grouplikes.into_iter().map(normalize_sparse).collect();
        self.skew_primitives = skew;
        self
    }

    /// Returns a copy with one structure constant of the product replaced,
    /// for negative controls.
    pub fn with_mult_entry(&self, i: usize, j: usize, k: usize, c: CycNumber) -> Self {
        let mut out = self.clone();
        let row = &mut out.mult[i * self.dim + j];
        row.retain(|(idx, _)| *idx != k);
        row.push((k, c));
        out.mult[i * self.dim + j] = normalize_sparse(std::mem::take(row));
        out
    }

    /// Returns a copy with the antipode replaced by `rows`.
    pub fn with_antipode(&self, rows: Vec<Sparse>) -> Result<Self> {
        let mut parts = self.clone().into_parts();
        parts.antipode = rows;
        HopfData::from_parts(parts)
    }

    /// Product of sparse vectors.
    pub fn mul_sparse(&self, a: &Sparse, b: &Sparse) -> Sparse {
        let mut out = Vec::new();
        for (i, x) in a {
            for (j, y) in b {
                let xy = x * y;
                for (k, c) in self.product(*i, *j) {
                    out.push((*k, &xy * c));
                }
            }
        }
        normalize_sparse(out)
    }

    /// `Δ` of a sparse vector as a map on index pairs.
    pub fn comult_sparse(&self, a: &Sparse) -> BTreeMap<(usize, usize), CycNumber> {
        let mut out: BTreeMap<(usize, usize), CycNumber> = BTreeMap::new();
        for (i, x) in a {
            for (j, k, c) in self.coproduct(*i) {
                let v = x * c;
                match out.get_mut(&(*j, *k)) {
                    Some(e) => *e = &*e + &v,
                    None => {
                        out.insert((*j, *k), v);
                    }
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    pub fn counit_sparse(&self, a: &Sparse) -> CycNumber {
        a.iter().fold(CycNumber::zero(self.order), |acc, (i, c)| {
            &acc + &(c * &self.counit[*i])
        })
    }

    /// Renders a sparse vector with basis labels, `symbol` standing for ζₙ.
    pub fn render_sparse(&self, a: &Sparse, symbol: &str) -> String {
        if a.is_empty() {
            return "0".into();
        }
        a.iter()
            .map(|(i, c)| {
                if c.is_one() {
                    self.basis[*i].clone()
                } else {
                    format!("({})*{}", c.fmt_with(symbol), self.basis[*i])
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}
