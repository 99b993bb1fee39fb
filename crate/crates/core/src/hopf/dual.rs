use crate::arith::CycNumber;

use super::{normalize_sparse, HopfData, HopfParts, Sparse};

/// Group-like and skew-primitive metadata for a dual algebra, in dual-basis
/// coordinates.
#[derive(Clone, Debug, Default)]
pub struct DualMetadata {
    pub grouplikes: Vec<Sparse>,
    pub skew_primitives: Vec<(usize, usize, usize)>,
}

/// Label of the dual basis functional of `label`.
pub fn dual_label(label: &str) -> String {
    if label.chars().count() == 1 {
        format!("{label}*")
    } else {
        format!("({label})*")
    }
}

/// The dual Hopf algebra on the dual basis `b_i*`.
///
/// Multiplication is convolution, `Δ*` is the transpose of `m`, the unit is
/// `ε`, the counit is evaluation at `1`, and the antipode is the transpose of
/// `S`. Group-likes of the dual are not searched for; the result carries the
/// metadata passed in, or none.
pub fn dual_hopf(h: &HopfData, metadata: Option<DualMetadata>) -> HopfData {
    let d = h.dim();
    let order = h.order();
    let mut mult: Vec<Sparse> = vec![Vec::new(); d * d];
    for k in 0..d {
        for (a, b, c) in h.coproduct(k) {
            mult[a * d + b].push((k, c.clone()));
        }
    }
    let mut comult = vec![Vec::new(); d];
    for i in 0..d {
        for j in 0..d {
            for (k, c) in h.product(i, j) {
                comult[*k].push((i, j, c.clone()));
            }
        }
    }
    let unit = normalize_sparse(h.counit().iter().cloned().enumerate());
    let mut counit = vec![CycNumber::zero(order); d];
    for (i, c) in h.unit() {
        counit[*i] = c.clone();
    }
    let mut antipode: Vec<Sparse> = vec![Vec::new(); d];
    for j in 0..d {
        for (i, c) in h.antipode(j) {
            antipode[*i].push((j, c.clone()));
        }
    }
    let meta = metadata.unwrap_or_default();
    let name = format!("dual({})", h.name());
    HopfData::from_parts(HopfParts {
        name,
        order,
        basis: h.basis().iter().map(|l| dual_label(l)).collect(),
        mult,
        unit,
        comult,
        counit,
        antipode,
        grouplikes: meta.grouplikes,
        skew_primitives: meta.skew_primitives,
    })
    .expect("transposed structure constants keep their shape")
}
