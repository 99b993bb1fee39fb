//! Exhaustive axiom checks over basis tuples.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::CycNumber;

use super::{normalize_sparse, HopfData, Sparse};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomFailure {
    pub axiom: String,
    pub indices: Vec<usize>,
    pub detail: String,
}

/// Result of a validation sweep.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub checked: usize,
    pub failures: Vec<AxiomFailure>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn merge(&mut self, other: AxiomReport) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
    }

    /// Records one check; `detail` is only rendered on failure.
    pub fn check(&mut self, ok: bool, axiom: &str, indices: Vec<usize>, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(AxiomFailure {
                axiom: axiom.to_string(),
                indices,
                detail: detail(),
            });
        }
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} checks, {} failures", self.checked, self.failures.len())?;
        for fail in self.failures.iter().take(20) {
            write!(f, "\n  {} at {:?}: {}", fail.axiom, fail.indices, fail.detail)?;
        }
        if self.failures.len() > 20 {
            write!(f, "\n  ... {} more", self.failures.len() - 20)?;
        }
        Ok(())
    }
}

type Tensor = BTreeMap<Vec<usize>, CycNumber>;

fn push(t: &mut Tensor, key: Vec<usize>, c: CycNumber) {
    match t.get_mut(&key) {
        Some(x) => *x = &*x + &c,
        None => {
            t.insert(key, c);
        }
    }
}

fn clean(mut t: Tensor) -> Tensor {
    t.retain(|_, c| !c.is_zero());
    t
}

fn render(h: &HopfData, t: &Tensor) -> String {
    if t.is_empty() {
        return "0".into();
    }
    t.iter()
        .map(|(k, c)| {
            let labels: Vec<&str> = k.iter().map(|i| h.label(*i)).collect();
            format!("({})*{}", c, labels.join("⊗"))
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Runs `per_index` for each basis index in parallel and concatenates the
/// reports in index order.
fn sweep(h: &HopfData, per_index: impl Fn(usize) -> AxiomReport + Sync + Send) -> AxiomReport {
    let parts: Vec<AxiomReport> = (0..h.dim()).into_par_iter().map(per_index).collect();
    let mut out = AxiomReport::default();
    for p in parts {
        out.merge(p);
    }
    out
}

/// Associativity, unit, coassociativity, counit, and multiplicativity of
/// `Δ` and `ε`.
pub fn validate_bialgebra(h: &HopfData) -> AxiomReport {
    let d = h.dim();
    let unit = h.unit().clone();
    let one = CycNumber::one(h.order());
    let mut report = sweep(h, |i| {
        let mut r = AxiomReport::default();
        let bi: Sparse = vec![(i, one.clone())];
        for j in 0..d {
            let ij = h.product(i, j);
            for k in 0..d {
                let left = h.mul_sparse(ij, &vec![(k, one.clone())]);
                let right = h.mul_sparse(&bi, h.product(j, k));
                r.check(left == right, "associativity", vec![i, j, k], || {
                    format!(
                        "(ab)c = {} but a(bc) = {}",
                        h.render_sparse(&left, "z"),
                        h.render_sparse(&right, "z")
                    )
                });
            }
        }
        let lu = h.mul_sparse(&unit, &bi);
        r.check(lu == bi, "left unit", vec![i], || h.render_sparse(&lu, "z"));
        let ru = h.mul_sparse(&bi, &unit);
        r.check(ru == bi, "right unit", vec![i], || h.render_sparse(&ru, "z"));

        // (Δ⊗id)Δ = (id⊗Δ)Δ
        let mut left = Tensor::new();
        let mut right = Tensor::new();
        for (a, b, c) in h.coproduct(i) {
            for (a1, a2, c1) in h.coproduct(*a) {
                push(&mut left, vec![*a1, *a2, *b], c * c1);
            }
            for (b1, b2, c2) in h.coproduct(*b) {
                push(&mut right, vec![*a, *b1, *b2], c * c2);
            }
        }
        let (left, right) = (clean(left), clean(right));
        r.check(left == right, "coassociativity", vec![i], || {
            format!("{} vs {}", render(h, &left), render(h, &right))
        });

        let mut lc = Vec::new();
        let mut rc = Vec::new();
        for (a, b, c) in h.coproduct(i) {
            lc.push((*b, c * &h.counit()[*a]));
            rc.push((*a, c * &h.counit()[*b]));
        }
        let (lc, rc) = (normalize_sparse(lc), normalize_sparse(rc));
        r.check(lc == bi, "left counit", vec![i], || h.render_sparse(&lc, "z"));
        r.check(rc == bi, "right counit", vec![i], || h.render_sparse(&rc, "z"));

        // Δ(b_i b_j) = Δ(b_i)Δ(b_j) and ε(b_i b_j) = ε(b_i)ε(b_j)
        let di = h.coproduct(i);
        for j in 0..d {
            let ij = h.product(i, j);
            let mut lhs = Tensor::new();
            for (k, c) in ij {
                for (a, b, e) in h.coproduct(*k) {
                    push(&mut lhs, vec![*a, *b], c * e);
                }
            }
            let mut rhs = Tensor::new();
            for (a, b, c1) in di {
                for (x, y, c2) in h.coproduct(j) {
                    let c12 = c1 * c2;
                    for (u, cu) in h.product(*a, *x) {
                        let cc = &c12 * cu;
                        for (v, cv) in h.product(*b, *y) {
                            push(&mut rhs, vec![*u, *v], &cc * cv);
                        }
                    }
                }
            }
            let (lhs, rhs) = (clean(lhs), clean(rhs));
            r.check(lhs == rhs, "comultiplicativity", vec![i, j], || {
                format!("Δ(ab) = {} but Δ(a)Δ(b) = {}", render(h, &lhs), render(h, &rhs))
            });
            let e_ab = h.counit_sparse(ij);
            let e_a_e_b = &h.counit()[i] * &h.counit()[j];
            r.check(e_ab == e_a_e_b, "counit multiplicativity", vec![i, j], || {
                format!("ε(ab) = {e_ab} but ε(a)ε(b) = {e_a_e_b}")
            });
        }
        r
    });

    let du = h.comult_sparse(&unit);
    let mut expected = BTreeMap::new();
    for (a, x) in &unit {
        for (b, y) in &unit {
            expected.insert((*a, *b), x * y);
        }
    }
    expected.retain(|_, c: &mut CycNumber| !c.is_zero());
    report.check(du == expected, "unit comultiplication", vec![], || "Δ(1) ≠ 1⊗1".into());
    let eu = h.counit_sparse(&unit);
    report.check(eu.is_one(), "counit of unit", vec![], || format!("ε(1) = {eu}"));
    report
}

/// `m(S⊗id)Δ = uε = m(id⊗S)Δ` on every basis element.
pub fn validate_antipode(h: &HopfData) -> AxiomReport {
    sweep(h, |i| {
        let mut r = AxiomReport::default();
        let expected = normalize_sparse(h.unit().iter().map(|(k, c)| (*k, c * &h.counit()[i])));
        let mut left = Vec::new();
        let mut right = Vec::new();
        for (a, b, c) in h.coproduct(i) {
            let one_b: Sparse = vec![(*b, c.clone())];
            let one_a: Sparse = vec![(*a, c.clone())];
            left.extend(h.mul_sparse(h.antipode(*a), &one_b));
            right.extend(h.mul_sparse(&one_a, h.antipode(*b)));
        }
        let (left, right) = (normalize_sparse(left), normalize_sparse(right));
        r.check(left == expected, "left antipode", vec![i], || {
            format!("S(b₁)b₂ = {}", h.render_sparse(&left, "z"))
        });
        r.check(right == expected, "right antipode", vec![i], || {
            format!("b₁S(b₂) = {}", h.render_sparse(&right, "z"))
        });
        r
    })
}

/// Checks declared group-likes and skew-primitives against their definitions.
pub fn validate_metadata(h: &HopfData) -> AxiomReport {
    let mut r = AxiomReport::default();
    for (n, g) in h.grouplikes().iter().enumerate() {
        let dg = h.comult_sparse(g);
        let mut gg = BTreeMap::new();
        for (a, x) in g {
            for (b, y) in g {
                gg.insert((*a, *b), x * y);
            }
        }
        r.check(dg == gg, "group-like coproduct", vec![n], || {
            format!("Δ({}) is not its own square", h.render_sparse(g, "z"))
        });
        let e = h.counit_sparse(g);
        r.check(e.is_one(), "group-like counit", vec![n], || format!("ε = {e}"));
    }
    let one = CycNumber::one(h.order());
    for &(x, g, hh) in h.skew_primitives() {
        let dx = h.comult_sparse(&vec![(x, one.clone())]);
        let mut expected: BTreeMap<(usize, usize), CycNumber> = BTreeMap::new();
        for key in [(x, g), (hh, x)] {
            let v = expected.get(&key).map_or_else(|| one.clone(), |c| c + &one);
            expected.insert(key, v);
        }
        r.check(dx == expected, "skew-primitive", vec![x, g, hh], || {
            format!(
                "Δ({}) ≠ {}⊗{} + {}⊗{}",
                h.label(x),
                h.label(x),
                h.label(g),
                h.label(hh),
                h.label(x)
            )
        });
    }
    r
}

/// All three suites.
pub fn validate_all(h: &HopfData) -> AxiomReport {
    let mut r = validate_bialgebra(h);
    r.merge(validate_antipode(h));
    r.merge(validate_metadata(h));
    r
}
