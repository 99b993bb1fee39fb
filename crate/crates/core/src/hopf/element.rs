use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::arith::{CycNumber, ParamPoly};
use crate::error::{Error, Result};

use super::{HopfData, Sparse};

/// An element of `H ⊗ H`, keyed by basis index pairs; zeros are not stored.
pub type Tensor2 = BTreeMap<(usize, usize), ParamPoly>;

fn same_algebra(a: &Arc<HopfData>, b: &Arc<HopfData>) -> Result<()> {
    if Arc::ptr_eq(a, b) || **a == **b {
        Ok(())
    } else {
        Err(Error::AlgebraMismatch {
            left: a.name().to_string(),
            right: b.name().to_string(),
        })
    }
}

fn check_coords(h: &HopfData, coords: &[ParamPoly]) -> Result<()> {
    if coords.len() != h.dim() {
        return Err(Error::Malformed(format!(
            "expected {} coordinates, got {}",
            h.dim(),
            coords.len()
        )));
    }
    if let Some(c) = coords.iter().find(|c| c.order() != h.order()) {
        return Err(Error::Arith(crate::arith::ArithError::OrderMismatch {
            left: h.order(),
            right: c.order(),
        }));
    }
    Ok(())
}

fn sparse_to_coords(h: &HopfData, s: &Sparse) -> Vec<ParamPoly> {
    let mut coords = vec![ParamPoly::zero(h.order()); h.dim()];
    for (i, c) in s {
        coords[*i] = ParamPoly::constant(c.clone());
    }
    coords
}

fn add_to(t: &mut Tensor2, key: (usize, usize), c: &CycNumber, p: &ParamPoly) {
    let entry = t.entry(key).or_insert_with(|| ParamPoly::zero(p.order()));
    entry.add_scaled(c, p);
    if entry.is_zero() {
        t.remove(&key);
    }
}

/// An element of `H` with polynomial coordinates.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgElement {
    algebra: Arc<HopfData>,
    coords: Vec<ParamPoly>,
}

impl AlgElement {
    pub fn from_coords(algebra: &Arc<HopfData>, coords: Vec<ParamPoly>) -> Result<Self> {
        check_coords(algebra, &coords)?;
        Ok(AlgElement {
            algebra: Arc::clone(algebra),
            coords,
        })
    }

    pub fn from_sparse(algebra: &Arc<HopfData>, s: &Sparse) -> Self {
        AlgElement {
            algebra: Arc::clone(algebra),
            coords: sparse_to_coords(algebra, s),
        }
    }

    pub fn zero(algebra: &Arc<HopfData>) -> Self {
        AlgElement {
            algebra: Arc::clone(algebra),
            coords: vec![ParamPoly::zero(algebra.order()); algebra.dim()],
        }
    }

    pub fn one(algebra: &Arc<HopfData>) -> Self {
        Self::from_sparse(algebra, algebra.unit())
    }

    pub fn basis(algebra: &Arc<HopfData>, i: usize) -> Self {
        let mut e = Self::zero(algebra);
        e.coords[i] = ParamPoly::one(algebra.order());
        e
    }

    pub fn algebra(&self) -> &Arc<HopfData> {
        &self.algebra
    }

    pub fn coords(&self) -> &[ParamPoly] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &ParamPoly {
        &self.coords[i]
    }

    pub fn into_coords(self) -> Vec<ParamPoly> {
        self.coords
    }

    /// Parameters appearing in any coordinate.
    pub fn vars(&self) -> Vec<String> {
        let mut v: Vec<String> = self.coords.iter().flat_map(ParamPoly::vars).collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        same_algebra(&self.algebra, &other.algebra)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        Ok(AlgElement {
            algebra: Arc::clone(&self.algebra),
            coords,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&ParamPoly::from_int(self.algebra.order(), -1)))
    }

    pub fn scale(&self, c: &ParamPoly) -> Self {
        AlgElement {
            algebra: Arc::clone(&self.algebra),
            coords: self.coords.iter().map(|a| a * c).collect(),
        }
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        same_algebra(&self.algebra, &other.algebra)?;
        let h = &*self.algebra;
        let mut out = vec![ParamPoly::zero(h.order()); h.dim()];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in h.product(i, j) {
                    out[k.to_owned()].add_scaled(c, &ab);
                }
            }
        }
        Ok(AlgElement {
            algebra: Arc::clone(&self.algebra),
            coords: out,
        })
    }

    pub fn comultiply(&self) -> Tensor2 {
        let mut t = Tensor2::new();
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, k, c) in self.algebra.coproduct(i) {
                add_to(&mut t, (*j, *k), c, a);
            }
        }
        t
    }

    pub fn counit(&self) -> ParamPoly {
        let mut acc = ParamPoly::zero(self.algebra.order());
        for (a, e) in self.coords.iter().zip(self.algebra.counit()) {
            acc.add_scaled(e, a);
        }
        acc
    }

    pub fn antipode_apply(&self) -> Self {
        let h = &*self.algebra;
        let mut out = vec![ParamPoly::zero(h.order()); h.dim()];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (k, c) in h.antipode(i) {
                out[*k].add_scaled(c, a);
            }
        }
        AlgElement {
            algebra: Arc::clone(&self.algebra),
            coords: out,
        }
    }

    /// Substitutes values for parameters in every coordinate.
    pub fn substitute_all(&self, values: &BTreeMap<String, ParamPoly>) -> Self {
        AlgElement {
            algebra: Arc::clone(&self.algebra),
            coords: self.coords.iter().map(|c| c.substitute_all(values)).collect(),
        }
    }

    pub fn fmt_with(&self, symbol: &str) -> String {
        render(&self.algebra, &self.coords, symbol, |l| l.to_string())
    }
}

/// `(a ⊗ b)(c ⊗ d) = ac ⊗ bd` in `H ⊗ H`.
pub fn tensor_multiply(h: &HopfData, x: &Tensor2, y: &Tensor2) -> Tensor2 {
    let mut t = Tensor2::new();
    for ((a, b), p) in x {
        for ((c, d), r) in y {
            let pr = p * r;
            for (i, u) in h.product(*a, *c) {
                for (j, v) in h.product(*b, *d) {
                    add_to(&mut t, (*i, *j), &(u * v), &pr);
                }
            }
        }
    }
    t
}

/// `a ⊗ b` for elements of `H`.
pub fn tensor_of(a: &AlgElement, b: &AlgElement) -> Tensor2 {
    let mut t = Tensor2::new();
    for (i, x) in a.coords.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coords.iter().enumerate() {
            if !y.is_zero() {
                t.insert((i, j), x * y);
            }
        }
    }
    t
}

fn render(h: &HopfData, coords: &[ParamPoly], symbol: &str, label: impl Fn(&str) -> String) -> String {
    let parts: Vec<String> = coords
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| format!("[{}] {}", label(h.label(i)), c.fmt_with(symbol)))
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(", ")
    }
}

impl fmt::Debug for AlgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgElement<{}>({})", self.algebra.name(), self.fmt_with("z"))
    }
}

/// A linear functional `H → k`, stored by its values on the basis.
#[derive(Clone, PartialEq, Eq)]
pub struct Functional {
    algebra: Arc<HopfData>,
    coords: Vec<ParamPoly>,
}

impl Functional {
    pub fn from_coords(algebra: &Arc<HopfData>, coords: Vec<ParamPoly>) -> Result<Self> {
        check_coords(algebra, &coords)?;
        Ok(Functional {
            algebra: Arc::clone(algebra),
            coords,
        })
    }

    pub fn zero(algebra: &Arc<HopfData>) -> Self {
        Functional {
            algebra: Arc::clone(algebra),
            coords: vec![ParamPoly::zero(algebra.order()); algebra.dim()],
        }
    }

    /// The counit `ε`, the unit of the convolution algebra.
    pub fn counit(algebra: &Arc<HopfData>) -> Self {
        Functional {
            algebra: Arc::clone(algebra),
            coords: algebra.counit().iter().cloned().map(ParamPoly::constant).collect(),
        }
    }

    /// The dual basis functional `b_i*`.
    pub fn dual_basis(algebra: &Arc<HopfData>, i: usize) -> Self {
        let mut f = Self::zero(algebra);
        f.coords[i] = ParamPoly::one(algebra.order());
        f
    }

    pub fn algebra(&self) -> &Arc<HopfData> {
        &self.algebra
    }

    pub fn coords(&self) -> &[ParamPoly] {
        &self.coords
    }

    /// Value on the basis element `b_i`.
    pub fn value(&self, i: usize) -> &ParamPoly {
        &self.coords[i]
    }

    pub fn into_coords(self) -> Vec<ParamPoly> {
        self.coords
    }

    pub fn vars(&self) -> Vec<String> {
        let mut v: Vec<String> = self.coords.iter().flat_map(ParamPoly::vars).collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn apply(&self, a: &AlgElement) -> Result<ParamPoly> {
        same_algebra(&self.algebra, &a.algebra)?;
        let mut acc = ParamPoly::zero(self.algebra.order());
        for (f, x) in self.coords.iter().zip(&a.coords) {
            if !f.is_zero() && !x.is_zero() {
                acc.add_assign_ref(&(f * x));
            }
        }
        Ok(acc)
    }

    /// Value on a sparse constant vector.
    pub fn apply_sparse(&self, s: &Sparse) -> ParamPoly {
        let mut acc = ParamPoly::zero(self.algebra.order());
        for (i, c) in s {
            acc.add_scaled(c, &self.coords[*i]);
        }
        acc
    }

    /// `(f ∗ g)(b) = Σ f(b₁) g(b₂)`.
    pub fn convolution(&self, other: &Self) -> Result<Self> {
        same_algebra(&self.algebra, &other.algebra)?;
        let h = &*self.algebra;
        let coords = (0..h.dim())
            .map(|i| {
                let mut acc = ParamPoly::zero(h.order());
                for (j, k, c) in h.coproduct(i) {
                    let (a, b) = (&self.coords[*j], &other.coords[*k]);
                    if !a.is_zero() && !b.is_zero() {
                        acc.add_scaled(c, &(a * b));
                    }
                }
                acc
            })
            .collect();
        Ok(Functional {
            algebra: Arc::clone(&self.algebra),
            coords,
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        same_algebra(&self.algebra, &other.algebra)?;
        Ok(Functional {
            algebra: Arc::clone(&self.algebra),
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn scale(&self, c: &ParamPoly) -> Self {
        Functional {
            algebra: Arc::clone(&self.algebra),
            coords: self.coords.iter().map(|a| a * c).collect(),
        }
    }

    pub fn substitute_all(&self, values: &BTreeMap<String, ParamPoly>) -> Self {
        Functional {
            algebra: Arc::clone(&self.algebra),
            coords: self.coords.iter().map(|c| c.substitute_all(values)).collect(),
        }
    }

    pub fn fmt_with(&self, symbol: &str) -> String {
        render(&self.algebra, &self.coords, symbol, |l| {
            if l.chars().count() == 1 {
                format!("{l}*")
            } else {
                format!("({l})*")
            }
        })
    }
}

impl fmt::Debug for Functional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Functional<{}>({})", self.algebra.name(), self.fmt_with("z"))
    }
}
