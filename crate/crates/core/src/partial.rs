//! Partial actions and coactions of a Hopf algebra on its base field.
//!
//! A partial action is a functional `λ` with `λ(1) = 1` and
//! `λ(h)λ(y) = λ(h₁)λ(h₂y)`; it is symmetric when also
//! `λ(h)λ(y) = λ(h₁y)λ(h₂)`. A partial coaction is an element `z` with
//! `ε(z) = 1` and `z⊗z = (z⊗1)Δ(z)`; symmetric when also
//! `z⊗z = Δ(z)(z⊗1)`. All checks are exact polynomial identities in the
//! family parameters.

use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;

use crate::algebras::{group_label, nichols_label, taft_index};
use crate::arith::{CycNumber, ParamPoly, Rational};
use crate::error::{Error, Result};
use crate::hopf::{tensor_multiply, tensor_of, AlgElement, AxiomReport, Functional, HopfData, Tensor2};
use crate::qcomb::{q_factorial, q_number, QBinomialTable, QScalar};

/// A family of partial actions, possibly depending on free parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionFamily {
    pub name: String,
    pub params: Vec<String>,
    pub functional: Functional,
}

/// A family of partial coactions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoactionFamily {
    pub name: String,
    pub params: Vec<String>,
    pub element: AlgElement,
}

impl ActionFamily {
    pub fn algebra(&self) -> &Arc<HopfData> {
        self.functional.algebra()
    }

    /// The global action `ε`.
    pub fn global(h: &Arc<HopfData>) -> Self {
        ActionFamily {
            name: "epsilon".into(),
            params: vec![],
            functional: Functional::counit(h),
        }
    }

    /// Renames parameters (and the params list) through `map`.
    pub fn renamed(&self, map: &BTreeMap<String, String>) -> Self {
        let values: BTreeMap<String, ParamPoly> = map
            .iter()
            .map(|(a, b)| (a.clone(), ParamPoly::var(self.algebra().order(), b)))
            .collect();
        ActionFamily {
            name: self.name.clone(),
            params: self
                .params
                .iter()
                .map(|p| map.get(p).cloned().unwrap_or_else(|| p.clone()))
                .collect(),
            functional: self.functional.substitute_all(&values),
        }
    }

    /// Label-to-value table of the nonzero values, `symbol` standing for ζₙ.
    pub fn table(&self, symbol: &str) -> Vec<(String, String)> {
        let h = self.algebra();
        self.functional
            .coords()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (h.label(i).to_string(), c.fmt_with(symbol)))
            .collect()
    }
}

impl CoactionFamily {
    pub fn algebra(&self) -> &Arc<HopfData> {
        self.element.algebra()
    }

    /// The global coaction `1_H`.
    pub fn global(h: &Arc<HopfData>) -> Self {
        CoactionFamily {
            name: "one".into(),
            params: vec![],
            element: AlgElement::one(h),
        }
    }

    pub fn renamed(&self, map: &BTreeMap<String, String>) -> Self {
        let values: BTreeMap<String, ParamPoly> = map
            .iter()
            .map(|(a, b)| (a.clone(), ParamPoly::var(self.algebra().order(), b)))
            .collect();
        CoactionFamily {
            name: self.name.clone(),
            params: self
                .params
                .iter()
                .map(|p| map.get(p).cloned().unwrap_or_else(|| p.clone()))
                .collect(),
            element: self.element.substitute_all(&values),
        }
    }

    pub fn table(&self, symbol: &str) -> Vec<(String, String)> {
        let h = self.algebra();
        self.element
            .coords()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (h.label(i).to_string(), c.fmt_with(symbol)))
            .collect()
    }
}

/// Whether some bijection of parameter names makes the coordinate arrays
/// identical.
pub fn equivalent_up_to_renaming(a_params: &[String], a: &[ParamPoly], b_params: &[String], b: &[ParamPoly]) -> bool {
    if a_params.len() != b_params.len() || a.len() != b.len() {
        return false;
    }
    let mut perm: Vec<usize> = (0..b_params.len()).collect();
    loop {
        // rename a's params to temporaries first so overlapping names are safe
        let order = a.first().map_or(1, ParamPoly::order);
        let tmp: BTreeMap<String, ParamPoly> = a_params
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), ParamPoly::var(order, &format!("__tmp{i}"))))
            .collect();
        let back: BTreeMap<String, ParamPoly> = (0..a_params.len())
            .map(|i| (format!("__tmp{i}"), ParamPoly::var(order, &b_params[perm[i]])))
            .collect();
        if a.iter()
            .zip(b)
            .all(|(x, y)| &x.substitute_all(&tmp).substitute_all(&back) == y)
        {
            return true;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

// λ(b_a · b_y) for every pair, indexed a * d + y.
fn shifted_values(f: &Functional) -> Vec<ParamPoly> {
    let h = f.algebra();
    let d = h.dim();
    (0..d * d)
        .into_par_iter()
        .map(|k| f.apply_sparse(h.product(k / d, k % d)))
        .collect()
}

fn action_sweep(f: &Functional, symmetric: bool) -> AxiomReport {
    let h = f.algebra();
    let d = h.dim();
    let shifted = shifted_values(f);
    let mut report = AxiomReport::default();
    let at_one = f.apply_sparse(h.unit());
    report.check(at_one == ParamPoly::one(h.order()), "normalization", vec![], || {
        format!("λ(1) = {at_one}")
    });
    let name = if symmetric {
        "symmetric action"
    } else {
        "partial action"
    };
    let parts: Vec<AxiomReport> = (0..d)
        .into_par_iter()
        .map(|i| {
            let mut r = AxiomReport::default();
            let li = f.value(i);
            for y in 0..d {
                let lhs = li * f.value(y);
                let mut rhs = ParamPoly::zero(h.order());
                for (a, b, c) in h.coproduct(i) {
                    let term = if symmetric {
                        &shifted[a * d + y] * f.value(*b)
                    } else {
                        f.value(*a) * &shifted[b * d + y]
                    };
                    rhs.add_scaled(c, &term);
                }
                r.check(lhs == rhs, name, vec![i, y], || {
                    format!("h = {}, y = {}: lhs {} vs rhs {}", h.label(i), h.label(y), lhs, rhs)
                });
            }
            r
        })
        .collect();
    for p in parts {
        report.merge(p);
    }
    report
}

/// `λ(1) = 1` and `λ(h)λ(y) = λ(h₁)λ(h₂y)` for all basis pairs.
pub fn verify_partial_action(f: &Functional) -> AxiomReport {
    action_sweep(f, false)
}

/// `λ(1) = 1` and `λ(h)λ(y) = λ(h₁y)λ(h₂)` for all basis pairs.
pub fn verify_symmetric_action(f: &Functional) -> AxiomReport {
    action_sweep(f, true)
}

fn tensor_check(r: &mut AxiomReport, h: &HopfData, name: &str, lhs: &Tensor2, rhs: &Tensor2) {
    let keys: std::collections::BTreeSet<&(usize, usize)> = lhs.keys().chain(rhs.keys()).collect();
    let zero = ParamPoly::zero(h.order());
    for key in keys {
        let (a, b) = (lhs.get(key).unwrap_or(&zero), rhs.get(key).unwrap_or(&zero));
        r.check(a == b, name, vec![key.0, key.1], || {
            format!("coefficient of {}⊗{}: {} vs {}", h.label(key.0), h.label(key.1), a, b)
        });
    }
    if lhs.is_empty() && rhs.is_empty() {
        r.check(true, name, vec![], String::new);
    }
}

fn coaction_sweep(z: &AlgElement, symmetric: bool) -> AxiomReport {
    let h = z.algebra();
    let mut r = AxiomReport::default();
    let e = z.counit();
    r.check(e == ParamPoly::one(h.order()), "counit", vec![], || {
        format!("ε(z) = {e}")
    });
    let zz = tensor_of(z, z);
    let z1 = tensor_of(z, &AlgElement::one(h));
    let dz = z.comultiply();
    let rhs = if symmetric {
        tensor_multiply(h, &dz, &z1)
    } else {
        tensor_multiply(h, &z1, &dz)
    };
    let name = if symmetric {
        "symmetric coaction"
    } else {
        "partial coaction"
    };
    tensor_check(&mut r, h, name, &zz, &rhs);
    let sq = z.multiply(z).expect("same algebra");
    for (i, (a, b)) in sq.coords().iter().zip(z.coords()).enumerate() {
        r.check(a == b, "idempotent", vec![i], || {
            format!("(z²)[{}] = {a} but z[{}] = {b}", h.label(i), h.label(i))
        });
    }
    r
}

/// `ε(z) = 1`, `z⊗z = (z⊗1)Δ(z)`, and `z² = z`.
pub fn verify_partial_coaction(z: &AlgElement) -> AxiomReport {
    coaction_sweep(z, false)
}

/// `ε(z) = 1`, `z⊗z = Δ(z)(z⊗1)`, and `z² = z`.
pub fn verify_symmetric_coaction(z: &AlgElement) -> AxiomReport {
    coaction_sweep(z, true)
}

/// `λ ∗ λ = λ` in the convolution algebra.
pub fn verify_convolution_idempotent(f: &Functional) -> AxiomReport {
    let sq = f.convolution(f).expect("same algebra");
    let h = f.algebra();
    let mut r = AxiomReport::default();
    for (i, (a, b)) in sq.coords().iter().zip(f.coords()).enumerate() {
        r.check(a == b, "convolution idempotent", vec![i], || {
            format!("(λ∗λ)({}) = {a} but λ({}) = {b}", h.label(i), h.label(i))
        });
    }
    r
}

fn is_taft(h: &HopfData) -> Option<usize> {
    let n = h.name().strip_prefix("taft(")?.strip_suffix(')')?.parse().ok()?;
    (h.dim() == n * n).then_some(n)
}

fn is_nichols(h: &HopfData) -> Option<usize> {
    let n: usize = h.name().strip_prefix("nichols(")?.strip_suffix(')')?.parse().ok()?;
    (h.dim() == 1 << n).then_some(n)
}

fn require(n: Option<usize>, h: &HopfData, what: &str) -> Result<usize> {
    n.ok_or_else(|| Error::PreconditionViolated(format!("{what} does not apply to {}", h.name())))
}

fn divisor(n: usize, k: i64) -> Result<usize> {
    if k >= 1 && (n as i64) % k == 0 {
        Ok(k as usize)
    } else {
        Err(Error::NotADivisor { n: n as i64, k })
    }
}

fn constant(order: u32, c: CycNumber) -> ParamPoly {
    debug_assert_eq!(c.order(), order);
    ParamPoly::constant(c)
}

/// Name of the cyclic subgroup `⟨g^k⟩`.
pub fn subgroup_name(k: usize, n: usize) -> String {
    if k.is_multiple_of(n) {
        "1".into()
    } else {
        format!("<{}>", group_label(k))
    }
}

/// `λ_α(g^{n-i} x^j) = q^{i(i+1)/2} (j i)_q (-1)^i α^j`.
pub fn taft_lambda_alpha(h: &Arc<HopfData>) -> Result<ActionFamily> {
    let n = require(is_taft(h), h, "taft_lambda_alpha")?;
    let order = h.order();
    let binom = QBinomialTable::new(QScalar::zeta(order), n);
    let alpha = ParamPoly::var(order, "alpha");
    let mut coords = vec![ParamPoly::zero(order); h.dim()];
    for i in 0..n {
        for j in 0..n {
            let b = binom.get(j as i64, i as i64);
            let b = b.as_value().expect("concrete q");
            let sign = if i % 2 == 0 { 1 } else { -1 };
            let c = &(&CycNumber::zeta_pow(order, (i * (i + 1) / 2) as i64) * b) * &CycNumber::from_int(order, sign);
            coords[taft_index(n, n as i64 - i as i64, j)] = alpha.pow(j as u32).scale(&c);
        }
    }
    Ok(ActionFamily {
        name: "lambda_alpha".into(),
        params: vec!["alpha".into()],
        functional: Functional::from_coords(h, coords)?,
    })
}

/// `λ⁰_N` for `N = ⟨g^k⟩`: the indicator of `N` on group-likes, zero on every
/// `g^i x^j` with `j ≥ 1`.
pub fn taft_lambda_n0(h: &Arc<HopfData>, k: i64) -> Result<ActionFamily> {
    let n = require(is_taft(h), h, "taft_lambda_n0")?;
    let k = divisor(n, k)?;
    let order = h.order();
    let mut coords = vec![ParamPoly::zero(order); h.dim()];
    for i in (0..n).step_by(k) {
        coords[taft_index(n, i as i64, 0)] = ParamPoly::one(order);
    }
    Ok(ActionFamily {
        name: format!("lambda0[{}]", subgroup_name(k, n)),
        params: vec![],
        functional: Functional::from_coords(h, coords)?,
    })
}

/// The coaction `z_α`: `(1/n)Σ_k g^k` plus, for `j ≥ 1`, the coefficient
/// `(1/n) q^{j(j-1)/2 + kj} α^j Σ_{i≤j} (-1)^i q^{i(i+1)/2 - i(j+k)} / ((j-i)_q! (i)_q!)`
/// on `g^k x^j`.
pub fn taft_z_alpha(h: &Arc<HopfData>) -> Result<CoactionFamily> {
    let n = require(is_taft(h), h, "taft_z_alpha")?;
    let order = h.order();
    let q = QScalar::zeta(order);
    let zeta = |e: i64| CycNumber::zeta_pow(order, e);
    let fact: Vec<CycNumber> = (0..n as u32)
        .map(|m| {
            let f = q_factorial(m, &q).as_value().cloned().expect("concrete q");
            assert!(!f.is_zero(), "(m)_q! vanishes below n for primitive q");
            f
        })
        .collect();
    let inv_n = CycNumber::from_rational(order, Rational::new(1.into(), (n as i64).into()));
    let alpha = ParamPoly::var(order, "alpha");
    let mut coords = vec![ParamPoly::zero(order); h.dim()];
    for k in 0..n as i64 {
        coords[taft_index(n, k, 0)] = constant(order, inv_n.clone());
        for j in 1..n as i64 {
            let mut inner = CycNumber::zero(order);
            for i in 0..=j {
                let sign = CycNumber::from_int(order, if i % 2 == 0 { 1 } else { -1 });
                let num = &sign * &zeta(i * (i + 1) / 2 - i * (j + k));
                let den = &fact[(j - i) as usize] * &fact[i as usize];
                inner = &inner + &num.try_div(&den)?;
            }
            let c = &(&inv_n * &zeta(j * (j - 1) / 2 + k * j)) * &inner;
            coords[taft_index(n, k, j as usize)] = alpha.pow(j as u32).scale(&c);
        }
    }
    Ok(CoactionFamily {
        name: "z_alpha".into(),
        params: vec!["alpha".into()],
        element: AlgElement::from_coords(h, coords)?,
    })
}

/// `z_N = (1/|N|) Σ_{h∈N} h` for `N = ⟨g^k⟩` in `Tₙ(q)`.
pub fn taft_z_n(h: &Arc<HopfData>, k: i64) -> Result<CoactionFamily> {
    let n = require(is_taft(h), h, "taft_z_n")?;
    let k = divisor(n, k)?;
    let order = h.order();
    let size = (n / k) as i64;
    let c = CycNumber::from_rational(order, Rational::new(1.into(), size.into()));
    let mut coords = vec![ParamPoly::zero(order); h.dim()];
    for i in (0..n).step_by(k) {
        coords[taft_index(n, i as i64, 0)] = constant(order, c.clone());
    }
    Ok(CoactionFamily {
        name: format!("z[{}]", subgroup_name(k, n)),
        params: vec![],
        element: AlgElement::from_coords(h, coords)?,
    })
}

/// Parameter names `alpha1, …, alpha{n-1}`.
pub fn nichols_params(n: usize) -> Vec<String> {
    (1..n).map(|i| format!("alpha{i}")).collect()
}

/// `λ_α = 1* + Σ α_i ((x_i)* + (g x_i)*)`.
pub fn nichols_lambda_alpha(h: &Arc<HopfData>) -> Result<ActionFamily> {
    let n = require(is_nichols(h), h, "nichols_lambda_alpha")?;
    let order = h.order();
    let mut coords = vec![ParamPoly::zero(order); h.dim()];
    coords[0] = ParamPoly::one(order);
    for (i, p) in nichols_params(n).iter().enumerate() {
        let x = 1usize << (i + 1);
        coords[x] = ParamPoly::var(order, p);
        coords[x | 1] = ParamPoly::var(order, p);
    }
    Ok(ActionFamily {
        name: "lambda_alpha".into(),
        params: nichols_params(n),
        functional: Functional::from_coords(h, coords)?,
    })
}

/// `z_α = (1 + g)/2 - Σ α_i g x_i`.
pub fn nichols_z_alpha(h: &Arc<HopfData>) -> Result<CoactionFamily> {
    let n = require(is_nichols(h), h, "nichols_z_alpha")?;
    let order = h.order();
    let half = ParamPoly::constant(CycNumber::from_frac(order, 1, 2));
    let mut coords = vec![ParamPoly::zero(order); h.dim()];
    coords[0] = half.clone();
    coords[1] = half;
    for (i, p) in nichols_params(n).iter().enumerate() {
        let gx = (1usize << (i + 1)) | 1;
        debug_assert_eq!(h.label(gx), nichols_label(gx));
        coords[gx] = -&ParamPoly::var(order, p);
    }
    Ok(CoactionFamily {
        name: "z_alpha".into(),
        params: nichols_params(n),
        element: AlgElement::from_coords(h, coords)?,
    })
}

fn cyclic_order(h: &HopfData, prefix: &str) -> Option<usize> {
    let n: usize = h.name().strip_prefix(prefix)?.strip_suffix(')')?.parse().ok()?;
    (h.dim() == n).then_some(n)
}

/// `λ_N` on `kCₙ`, the indicator of `N = ⟨g^d⟩`.
pub fn group_partial_action(h: &Arc<HopfData>, d: i64) -> Result<ActionFamily> {
    let n = require(cyclic_order(h, "groupalg("), h, "group_partial_action")?;
    let d = divisor(n, d)?;
    let order = h.order();
    let coords = (0..n)
        .map(|i| {
            if i % d == 0 {
                ParamPoly::one(order)
            } else {
                ParamPoly::zero(order)
            }
        })
        .collect();
    Ok(ActionFamily {
        name: format!("lambda[{}]", subgroup_name(d, n)),
        params: vec![],
        functional: Functional::from_coords(h, coords)?,
    })
}

/// `λ*_N` on `(kCₙ)*`: `1/|N|` on `(g^i)*` for `g^i ∈ N = ⟨g^d⟩`.
pub fn dual_group_partial_action(h: &Arc<HopfData>, d: i64) -> Result<ActionFamily> {
    let n = require(cyclic_order(h, "dualgroupalg("), h, "dual_group_partial_action")?;
    let d = divisor(n, d)?;
    let order = h.order();
    let c = ParamPoly::constant(CycNumber::from_frac(order, d as i64, n as i64));
    let coords = (0..n)
        .map(|i| if i % d == 0 { c.clone() } else { ParamPoly::zero(order) })
        .collect();
    Ok(ActionFamily {
        name: format!("lambda*[{}]", subgroup_name(d, n)),
        params: vec![],
        functional: Functional::from_coords(h, coords)?,
    })
}

/// `z_N = (1/|N|) Σ_{h∈N} h` in `kCₙ`.
pub fn group_coaction(h: &Arc<HopfData>, d: i64) -> Result<CoactionFamily> {
    let n = require(cyclic_order(h, "groupalg("), h, "group_coaction")?;
    let d = divisor(n, d)?;
    let order = h.order();
    let c = ParamPoly::constant(CycNumber::from_frac(order, d as i64, n as i64));
    let coords = (0..n)
        .map(|i| if i % d == 0 { c.clone() } else { ParamPoly::zero(order) })
        .collect();
    Ok(CoactionFamily {
        name: format!("z[{}]", subgroup_name(d, n)),
        params: vec![],
        element: AlgElement::from_coords(h, coords)?,
    })
}

/// `z = Σ_{g∈N} g*` in `(kCₙ)*`.
pub fn dual_group_coaction(h: &Arc<HopfData>, d: i64) -> Result<CoactionFamily> {
    let n = require(cyclic_order(h, "dualgroupalg("), h, "dual_group_coaction")?;
    let d = divisor(n, d)?;
    let order = h.order();
    let coords = (0..n)
        .map(|i| {
            if i % d == 0 {
                ParamPoly::one(order)
            } else {
                ParamPoly::zero(order)
            }
        })
        .collect();
    Ok(CoactionFamily {
        name: format!("z*[{}]", subgroup_name(d, n)),
        params: vec![],
        element: AlgElement::from_coords(h, coords)?,
    })
}

fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Every built-in action family of a built-in algebra: `ε` first, then the
/// parameter-free families by decreasing subgroup, then the parametric one.
pub fn builtin_action_families(h: &Arc<HopfData>) -> Result<Vec<ActionFamily>> {
    if let Some(n) = is_taft(h) {
        let mut out = vec![ActionFamily::global(h)];
        for k in divisors(n).into_iter().filter(|&k| k > 1 && k < n) {
            out.push(taft_lambda_n0(h, k as i64)?);
        }
        out.push(taft_lambda_alpha(h)?);
        return Ok(out);
    }
    if is_nichols(h).is_some() {
        return Ok(vec![ActionFamily::global(h), nichols_lambda_alpha(h)?]);
    }
    if let Some(n) = cyclic_order(h, "groupalg(") {
        return divisors(n)
            .into_iter()
            .map(|d| group_partial_action(h, d as i64))
            .collect();
    }
    if let Some(n) = cyclic_order(h, "dualgroupalg(") {
        return divisors(n)
            .into_iter()
            .map(|d| dual_group_partial_action(h, d as i64))
            .collect();
    }
    Err(Error::PreconditionViolated(format!(
        "no built-in families for {}",
        h.name()
    )))
}

/// Every built-in coaction family, in the same order as the action families.
pub fn builtin_coaction_families(h: &Arc<HopfData>) -> Result<Vec<CoactionFamily>> {
    if let Some(n) = is_taft(h) {
        let mut out = vec![CoactionFamily::global(h)];
        for k in divisors(n).into_iter().filter(|&k| k > 1 && k < n) {
            // λ⁰ at ⟨g^k⟩ corresponds to z at ⟨g^{n/k}⟩; list by the action order
            out.push(taft_z_n(h, (n / k) as i64)?);
        }
        out.push(taft_z_alpha(h)?);
        return Ok(out);
    }
    if is_nichols(h).is_some() {
        return Ok(vec![CoactionFamily::global(h), nichols_z_alpha(h)?]);
    }
    if let Some(n) = cyclic_order(h, "groupalg(") {
        return divisors(n).into_iter().map(|d| group_coaction(h, d as i64)).collect();
    }
    if let Some(n) = cyclic_order(h, "dualgroupalg(") {
        return divisors(n)
            .into_iter()
            .map(|d| dual_group_coaction(h, d as i64))
            .collect();
    }
    Err(Error::PreconditionViolated(format!(
        "no built-in families for {}",
        h.name()
    )))
}

/// Closed forms for `λ_α` on `Tₙ(q)`:
/// `λ(x^j) = α^j`, `λ(g^{n-i}x^i) = (-1)^i q^{i(i+1)/2} α^i`,
/// `λ(g^{n-1}x^j) = -q (j)_q α^j`, `λ(g^i x^{n-1}) = α^{n-1}`.
pub fn special_value_checks(n: i64) -> Result<AxiomReport> {
    let h = Arc::new(crate::algebras::taft(n)?);
    let lam = taft_lambda_alpha(&h)?;
    let n = n as usize;
    let order = h.order();
    let q = QScalar::zeta(order);
    let alpha = ParamPoly::var(order, "alpha");
    let zeta = |e: i64| CycNumber::zeta_pow(order, e);
    let f = &lam.functional;
    let mut r = AxiomReport::default();
    let mut check = |rule: &str, idx: usize, expected: ParamPoly, at: Vec<usize>| {
        let got = f.value(idx).clone();
        r.check(got == expected, rule, at, || {
            format!("{}: got {got}, expected {expected}", h.label(idx))
        });
    };
    for j in 0..n {
        check("x^j", taft_index(n, 0, j), alpha.pow(j as u32), vec![j]);
    }
    for i in 0..n {
        let sign = CycNumber::from_int(order, if i % 2 == 0 { 1 } else { -1 });
        let c = &sign * &zeta((i * (i + 1) / 2) as i64);
        check(
            "g^(n-i)x^i",
            taft_index(n, (n - i) as i64, i),
            alpha.pow(i as u32).scale(&c),
            vec![i],
        );
    }
    for j in 0..n {
        let qj = q_number(j as u32, &q).as_value().cloned().expect("concrete q");
        let c = -&(&zeta(1) * &qj);
        check(
            "g^(n-1)x^j",
            taft_index(n, n as i64 - 1, j),
            alpha.pow(j as u32).scale(&c),
            vec![j],
        );
    }
    for i in 0..n {
        check(
            "g^i x^(n-1)",
            taft_index(n, i as i64, n - 1),
            alpha.pow(n as u32 - 1),
            vec![i],
        );
    }
    Ok(r)
}

/// Consequences of the action axioms at group-likes and skew-primitives:
/// `λ(g) = 1 ⇒ λ(gu) = λ(u)`; `λ(g) = λ(t) ⇒ λ(x) = 0` for `(g, t)`-primitive
/// `x`; `λ(x) = 0 ∧ λ(t) = 1 ⇒ λ(xu) = 0`. Premises are tested as polynomial
/// identities, so they apply for every value of the parameters.
pub fn grouplike_rules(f: &Functional) -> AxiomReport {
    let h = f.algebra();
    let d = h.dim();
    let order = h.order();
    let one = ParamPoly::one(order);
    let mut r = AxiomReport::default();
    for (gi, g) in h.grouplikes().iter().enumerate() {
        if f.apply_sparse(g) != one {
            continue;
        }
        for u in 0..d {
            let gu = h.mul_sparse(g, &vec![(u, CycNumber::one(order))]);
            let (a, b) = (f.apply_sparse(&gu), f.value(u).clone());
            r.check(a == b, "grouplike shift", vec![gi, u], || {
                format!("λ(g·{}) = {a} but λ({}) = {b}", h.label(u), h.label(u))
            });
        }
    }
    for &(x, g, t) in h.skew_primitives() {
        let (lg, lt) = (f.value(g), f.value(t));
        if lg == lt {
            let lx = f.value(x);
            r.check(lx.is_zero(), "skew-primitive vanishing", vec![x, g, t], || {
                format!("λ({}) = {lx}", h.label(x))
            });
        }
        if f.value(x).is_zero() && *lt == one {
            for u in 0..d {
                let v = f.apply_sparse(h.product(x, u));
                r.check(v.is_zero(), "skew-primitive absorption", vec![x, u], || {
                    format!("λ({}·{}) = {v}", h.label(x), h.label(u))
                });
            }
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::{group_algebra_cyclic, nichols, taft};
    use crate::arith::parse_expr;

    fn arc(h: Result<HopfData>) -> Arc<HopfData> {
        Arc::new(h.unwrap())
    }

    #[test]
    fn epsilon_is_global() {
        let h = arc(taft(3));
        let eps = ActionFamily::global(&h);
        assert!(verify_partial_action(&eps.functional).passed());
        assert!(verify_symmetric_action(&eps.functional).passed());
        assert!(verify_partial_coaction(&CoactionFamily::global(&h).element).passed());
    }

    #[test]
    fn taft3_lambda_alpha() {
        let h = arc(taft(3));
        let lam = taft_lambda_alpha(&h).unwrap();
        let f = &lam.functional;
        assert!(verify_partial_action(f).passed());
        assert!(verify_symmetric_action(f).passed());
        let at = |l: &str| f.value(h.index_of(l).unwrap()).clone();
        assert_eq!(at("g^2x"), parse_expr("-z*alpha", 3).unwrap());
        assert!(at("gx").is_zero());
        for l in ["x^2", "gx^2", "g^2x^2"] {
            assert_eq!(at(l), parse_expr("alpha^2", 3).unwrap());
        }
    }

    #[test]
    fn broken_functional_is_rejected() {
        let h = arc(taft(4));
        let order = h.order();
        let mut coords = vec![ParamPoly::zero(order); 16];
        coords[0] = ParamPoly::one(order);
        coords[4] = ParamPoly::one(order);
        let f = Functional::from_coords(&h, coords).unwrap();
        let r = verify_partial_action(&f);
        assert!(!r.passed());
        // λ(g)λ(g) = 1 while λ(g)λ(g·g) = 0
        assert!(r.failures.iter().any(|x| x.indices == vec![4, 4]));
    }

    #[test]
    fn lambda_n0_values() {
        let h = arc(taft(4));
        let f = taft_lambda_n0(&h, 2).unwrap().functional;
        for (i, c) in f.coords().iter().enumerate() {
            let expected = if i == 0 || i == 8 { 1 } else { 0 };
            assert_eq!(*c, ParamPoly::from_int(4, expected), "{}", h.label(i));
        }
        assert_eq!(taft_lambda_n0(&h, 1).unwrap().functional, Functional::counit(&h));
        assert!(matches!(taft_lambda_n0(&h, 3), Err(Error::NotADivisor { n: 4, k: 3 })));
        let at_zero = taft_lambda_alpha(&h)
            .unwrap()
            .functional
            .substitute_all(&[("alpha".to_string(), ParamPoly::zero(4))].into_iter().collect());
        assert_eq!(taft_lambda_n0(&h, 4).unwrap().functional, at_zero);
    }

    #[test]
    fn sweedler_coaction() {
        let h = arc(taft(2));
        let z = taft_z_alpha(&h).unwrap();
        let expected = ["1/2", "0", "1/2", "-alpha"];
        for (c, e) in z.element.coords().iter().zip(expected) {
            assert_eq!(*c, parse_expr(e, 2).unwrap());
        }
        assert!(verify_partial_coaction(&z.element).passed());
        assert!(verify_symmetric_coaction(&z.element).passed());
    }

    #[test]
    fn taft3_z_alpha_gx() {
        let h = arc(taft(3));
        let z = taft_z_alpha(&h).unwrap();
        assert_eq!(*z.element.coord(4), parse_expr("(z - 1)/3*alpha", 3).unwrap());
        assert_eq!(taft_z_n(&h, 3).unwrap().element, AlgElement::one(&h));
    }

    #[test]
    fn group_examples() {
        let h = arc(group_algebra_cyclic(6));
        let lam = group_partial_action(&h, 2).unwrap();
        for i in 0..6 {
            assert_eq!(*lam.functional.value(i), ParamPoly::from_int(6, (i % 2 == 0) as i64));
        }
        assert_eq!(group_partial_action(&h, 1).unwrap().functional, Functional::counit(&h));
        let z = group_coaction(&h, 2).unwrap();
        assert!(verify_partial_coaction(&z.element).passed());
        assert_eq!(*z.element.coord(4), parse_expr("1/3", 6).unwrap());
    }

    #[test]
    fn nichols3_values() {
        let h = arc(nichols(3));
        let lam = nichols_lambda_alpha(&h).unwrap();
        let at = |l: &str| lam.functional.value(h.index_of(l).unwrap()).clone();
        assert!(at("x1x2").is_zero());
        assert!(at("gx1x2").is_zero());
        assert_eq!(at("x2"), ParamPoly::var(1, "alpha2"));
        assert_eq!(at("gx1"), ParamPoly::var(1, "alpha1"));
        assert!(verify_symmetric_action(&lam.functional).passed());
    }

    #[test]
    fn renaming_equivalence() {
        let a = vec!["a".to_string(), "b".to_string()];
        let b = vec!["u".to_string(), "v".to_string()];
        let pa = vec![parse_expr("a + 2b", 3).unwrap()];
        let pb = vec![parse_expr("v + 2u", 3).unwrap()];
        assert!(equivalent_up_to_renaming(&a, &pa, &b, &pb));
        let pc = vec![parse_expr("v + 3u", 3).unwrap()];
        assert!(!equivalent_up_to_renaming(&a, &pa, &b, &pc));
    }
}
