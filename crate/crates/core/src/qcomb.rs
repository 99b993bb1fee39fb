//! q-numbers, q-factorials and Gaussian binomials, together with checkers
//! for the q-identities the Taft computations rely on.
//!
//! Every function works either at a concrete `q` in some Q(ζₙ) (rational
//! sample points live in Q = Q(ζ₁)) or at an indeterminate `q`, in which case
//! values are Laurent polynomials in `q` with rational coefficients.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{CycNumber, Monomial, ParamPoly, Rational};

/// Name of the reserved indeterminate used for generic `q`.
pub const GENERIC_Q: &str = "q";

/// Laurent polynomial `num · q^{-shift}` over Q, kept in lowest terms so that
/// structural equality is value equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Laurent {
    num: ParamPoly,
    shift: u32,
}

impl Laurent {
    fn new(num: ParamPoly, shift: u32) -> Self {
        let mut l = Laurent { num, shift };
        l.normalize();
        l
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.shift = 0;
            return;
        }
        let low = self.num.terms().map(|(m, _)| m.exponent(GENERIC_Q)).min().unwrap_or(0);
        let d = low.min(self.shift);
        if d > 0 {
            self.num = divide_q_power(&self.num, d);
            self.shift -= d;
        }
    }

    pub fn numerator(&self) -> &ParamPoly {
        &self.num
    }

    /// Power of `q` in the denominator.
    pub fn shift(&self) -> u32 {
        self.shift
    }

    fn mul_q_power(&self, k: i64) -> Laurent {
        if k >= 0 {
            Laurent::new(&self.num * &q_power_poly(k as u32), self.shift)
        } else {
            Laurent::new(self.num.clone(), self.shift + k.unsigned_abs() as u32)
        }
    }
}

fn q_power_poly(k: u32) -> ParamPoly {
    ParamPoly::monomial(CycNumber::one(1), Monomial::power(GENERIC_Q, k))
}

fn divide_q_power(p: &ParamPoly, d: u32) -> ParamPoly {
    let mut out = ParamPoly::zero(p.order());
    for (m, c) in p.terms() {
        let e = m.exponent(GENERIC_Q);
        out.add_assign_ref(&ParamPoly::monomial(c.clone(), Monomial::power(GENERIC_Q, e - d)));
    }
    out
}

/// A scalar in which q-combinatorics is evaluated.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum QScalar {
    Value(CycNumber),
    Generic(Laurent),
}

impl QScalar {
    /// The indeterminate `q`.
    pub fn generic() -> Self {
        QScalar::Generic(Laurent::new(q_power_poly(1), 0))
    }

    pub fn value(c: CycNumber) -> Self {
        QScalar::Value(c)
    }

    /// ζₙ as an element of Q(ζₙ).
    pub fn zeta(n: u32) -> Self {
        QScalar::Value(CycNumber::zeta_pow(n, 1))
    }

    /// A rational sample point, in Q.
    pub fn rational(r: Rational) -> Self {
        QScalar::Value(CycNumber::from_rational(1, r))
    }

    pub fn is_generic(&self) -> bool {
        matches!(self, QScalar::Generic(_))
    }

    /// The integer `v` in the same ring as `self`.
    pub fn int_like(&self, v: i64) -> Self {
        match self {
            QScalar::Value(c) => QScalar::Value(CycNumber::from_int(c.order(), v)),
            QScalar::Generic(_) => QScalar::Generic(Laurent::new(ParamPoly::from_int(1, v), 0)),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            QScalar::Value(c) => c.is_zero(),
            QScalar::Generic(l) => l.num.is_zero(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (QScalar::Value(a), QScalar::Value(b)) => QScalar::Value(a + b),
            (QScalar::Generic(a), QScalar::Generic(b)) => {
                let s = a.shift.max(b.shift);
                let x = &a.num * &q_power_poly(s - a.shift);
                let y = &b.num * &q_power_poly(s - b.shift);
                QScalar::Generic(Laurent::new(&x + &y, s))
            }
            _ => panic!("mixing generic and concrete q"),
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            QScalar::Value(a) => QScalar::Value(-a),
            QScalar::Generic(a) => QScalar::Generic(Laurent {
                num: -&a.num,
                shift: a.shift,
            }),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (QScalar::Value(a), QScalar::Value(b)) => QScalar::Value(a * b),
            (QScalar::Generic(a), QScalar::Generic(b)) => {
                QScalar::Generic(Laurent::new(&a.num * &b.num, a.shift + b.shift))
            }
            _ => panic!("mixing generic and concrete q"),
        }
    }

    /// `self^e`; negative exponents require a nonzero value.
    pub fn pow(&self, e: i64) -> Self {
        match self {
            QScalar::Value(a) => QScalar::Value(a.pow(e).expect("q must be nonzero")),
            QScalar::Generic(l) if *l == Laurent::new(q_power_poly(1), 0) => {
                QScalar::Generic(Laurent::new(ParamPoly::one(1), 0).mul_q_power(e))
            }
            QScalar::Generic(_) => {
                assert!(e >= 0, "negative power of a generic Laurent polynomial");
                let mut acc = self.int_like(1);
                for _ in 0..e {
                    acc = acc.mul(self);
                }
                acc
            }
        }
    }

    /// Underlying cyclotomic value, when concrete.
    pub fn as_value(&self) -> Option<&CycNumber> {
        match self {
            QScalar::Value(c) => Some(c),
            QScalar::Generic(_) => None,
        }
    }

    pub fn as_laurent(&self) -> Option<&Laurent> {
        match self {
            QScalar::Generic(l) => Some(l),
            QScalar::Value(_) => None,
        }
    }
}

impl fmt::Display for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QScalar::Value(c) => write!(f, "{c}"),
            QScalar::Generic(l) if l.shift == 0 => write!(f, "{}", l.num),
            QScalar::Generic(l) => write!(f, "({})*q^-{}", l.num, l.shift),
        }
    }
}

/// `(m)_q = 1 + q + … + q^{m-1}`.
pub fn q_number(m: u32, q: &QScalar) -> QScalar {
    let mut acc = q.int_like(0);
    let mut p = q.int_like(1);
    for _ in 0..m {
        acc = acc.add(&p);
        p = p.mul(q);
    }
    acc
}

/// `(m)_q! = (1)_q (2)_q ⋯ (m)_q`.
pub fn q_factorial(m: u32, q: &QScalar) -> QScalar {
    (1..=m).fold(q.int_like(1), |acc, k| acc.mul(&q_number(k, q)))
}

/// Gaussian binomial via the recurrence `(m ℓ) = (m-1 ℓ-1) + q^ℓ (m-1 ℓ)`.
/// Zero unless `0 ≤ ℓ ≤ m`.
pub fn q_binomial(m: i64, l: i64, q: &QScalar) -> QScalar {
    if m < 0 || l < 0 || l > m {
        return q.int_like(0);
    }
    QBinomialTable::new(q.clone(), m as usize).get(m, l)
}

/// Pascal triangle of Gaussian binomials up to a fixed top row.
#[derive(Clone, Debug)]
pub struct QBinomialTable {
    q: QScalar,
    zero: QScalar,
    rows: Vec<Vec<QScalar>>,
}

impl QBinomialTable {
    pub fn new(q: QScalar, max_m: usize) -> Self {
        let zero = q.int_like(0);
        let one = q.int_like(1);
        let mut q_pows = vec![one.clone()];
        for l in 1..=max_m {
            q_pows.push(q_pows[l - 1].mul(&q));
        }
        let mut rows: Vec<Vec<QScalar>> = vec![vec![one.clone()]];
        for m in 1..=max_m {
            let prev = &rows[m - 1];
            let row: Vec<QScalar> = (0..=m)
                .map(|l| {
                    let left = if l == 0 { zero.clone() } else { prev[l - 1].clone() };
                    let right = prev.get(l).map_or_else(|| zero.clone(), |p| q_pows[l].mul(p));
                    left.add(&right)
                })
                .collect();
            rows.push(row);
        }
        QBinomialTable { q, zero, rows }
    }

    pub fn q(&self) -> &QScalar {
        &self.q
    }

    pub fn max_m(&self) -> usize {
        self.rows.len() - 1
    }

    /// Panics if `m` exceeds the table size.
    pub fn get(&self, m: i64, l: i64) -> QScalar {
        if m < 0 || l < 0 || l > m {
            return self.zero.clone();
        }
        assert!((m as usize) <= self.max_m(), "q-binomial table too small for m = {m}");
        self.rows[m as usize][l as usize].clone()
    }
}

/// Outcome of one identity instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub name: String,
    pub indices: Vec<i64>,
    pub passed: bool,
    pub lhs: String,
    pub rhs: String,
    /// Power of `q` both sides were multiplied by before comparing.
    pub cleared: u32,
}

/// The two Pascal rules.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Pascal {
    /// `(i s) = (i-1 s-1) + q^s (i-1 s)`
    BottomWeight,
    /// `(i s) = (i-1 s) + q^{i-s} (i-1 s-1)`
    TopWeight,
}

impl Pascal {
    pub fn name(self) -> &'static str {
        match self {
            Pascal::BottomWeight => "pascal_bottom_weight",
            Pascal::TopWeight => "pascal_top_weight",
        }
    }
}

impl QBinomialTable {
    pub fn q_pow(&self, e: i64) -> QScalar {
        self.q.pow(e)
    }
}

/// Evaluates one Pascal rule at `(i, s)`.
pub fn check_pascal(rule: Pascal, i: i64, s: i64, q: &QScalar) -> Verdict {
    let table = QBinomialTable::new(q.clone(), i.max(0) as usize);
    check_pascal_with(rule, i, s, &table)
}

fn check_pascal_with(rule: Pascal, i: i64, s: i64, t: &QBinomialTable) -> Verdict {
    let lhs = t.get(i, s);
    let (rhs, exp) = match rule {
        Pascal::BottomWeight => (t.get(i - 1, s - 1).add(&t.q_pow(s).mul(&t.get(i - 1, s))), s),
        Pascal::TopWeight => (t.get(i - 1, s).add(&t.q_pow(i - s).mul(&t.get(i - 1, s - 1))), i - s),
    };
    // a negative weight only appears next to a vanishing binomial, but clear
    // it anyway so the comparison stays polynomial
    finish(rule.name(), vec![i, s], lhs, rhs, -exp.min(0), t)
}

fn finish(name: &str, indices: Vec<i64>, lhs: QScalar, rhs: QScalar, clear: i64, t: &QBinomialTable) -> Verdict {
    let (lhs, rhs) = if clear > 0 {
        let c = t.q_pow(clear);
        (lhs.mul(&c), rhs.mul(&c))
    } else {
        (lhs, rhs)
    };
    if let (Some(l), Some(r)) = (lhs.as_laurent(), rhs.as_laurent()) {
        assert!(
            l.shift == 0 && r.shift == 0,
            "{name}{indices:?}: clearing left a negative power"
        );
    }
    Verdict {
        name: name.to_string(),
        indices,
        passed: lhs == rhs,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        cleared: clear.max(0) as u32,
    }
}

/// The named q-identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Identity {
    /// `Σ_{s=0}^{i} (i s)(i+t-s, i+k)(-1)^s q^{sk+s(s+1)/2} = (t k)`, indices `(i, t, k)`.
    AlternatingShift,
    /// `(j ℓ)(j-ℓ, i-ℓ) = (j i)(i ℓ)` for `0 ≤ ℓ ≤ i ≤ j`, indices `(i, j, ℓ)`.
    TrinomialRevision,
    /// `q^{s(i-j)} Σ_{ℓ=0}^{j} (j ℓ)(j+t-ℓ, i+s-ℓ)(ℓ i)(-1)^{i-ℓ} q^{(i-ℓ)(i-ℓ+1)/2} = (j i)(t s)`,
    /// indices `(i, j, t, s)`.
    SymmetryKernel,
    /// `q^{-sj} Σ_{ℓ=0}^{j} (j ℓ)(j+t-ℓ, s-ℓ)(-1)^ℓ q^{ℓ(ℓ-1)/2} = (t s)`, indices `(j, t, s)`.
    InverseKernel,
}

impl Identity {
    pub const ALL: [Identity; 4] = [
        Identity::AlternatingShift,
        Identity::TrinomialRevision,
        Identity::SymmetryKernel,
        Identity::InverseKernel,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::AlternatingShift => "alternating_shift",
            Identity::TrinomialRevision => "trinomial_revision",
            Identity::SymmetryKernel => "symmetry_kernel",
            Identity::InverseKernel => "inverse_kernel",
        }
    }

    pub fn from_name(s: &str) -> Option<Identity> {
        Identity::ALL.into_iter().find(|i| i.name() == s)
    }

    pub fn arity(self) -> usize {
        match self {
            Identity::SymmetryKernel => 4,
            _ => 3,
        }
    }

    /// Largest top index of any binomial appearing at these indices.
    fn table_size(self, ix: &[i64]) -> usize {
        let m = match self {
            Identity::AlternatingShift => ix[0] + ix[1],
            Identity::TrinomialRevision => ix[1],
            Identity::SymmetryKernel => ix[1] + ix[2],
            Identity::InverseKernel => ix[0] + ix[1],
        };
        m.max(0) as usize
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IdentityError {
    #[error("{name} takes {expected} indices, got {got}")]
    ArityMismatch {
        name: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("{name}: indices {indices:?} violate {condition}")]
    PreconditionViolated {
        name: &'static str,
        indices: Vec<i64>,
        condition: &'static str,
    },
}

fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Evaluates a named identity at the given indices.
pub fn check_identity(id: Identity, indices: &[i64], q: &QScalar) -> Result<Verdict, IdentityError> {
    validate_indices(id, indices)?;
    let table = QBinomialTable::new(q.clone(), id.table_size(indices));
    Ok(evaluate(id, indices, &table))
}

fn validate_indices(id: Identity, ix: &[i64]) -> Result<(), IdentityError> {
    if ix.len() != id.arity() {
        return Err(IdentityError::ArityMismatch {
            name: id.name(),
            expected: id.arity(),
            got: ix.len(),
        });
    }
    if ix.iter().any(|&v| v < 0) {
        return Err(IdentityError::PreconditionViolated {
            name: id.name(),
            indices: ix.to_vec(),
            condition: "nonnegative indices",
        });
    }
    if id == Identity::TrinomialRevision && !(ix[2] <= ix[0] && ix[0] <= ix[1]) {
        return Err(IdentityError::PreconditionViolated {
            name: id.name(),
            indices: ix.to_vec(),
            condition: "0 <= l <= i <= j",
        });
    }
    Ok(())
}

fn evaluate(id: Identity, ix: &[i64], t: &QBinomialTable) -> Verdict {
    let zero = t.q().int_like(0);
    let signed = |s: i64| t.q().int_like(sign(s));
    match id {
        Identity::AlternatingShift => {
            let (i, tt, k) = (ix[0], ix[1], ix[2]);
            let mut lhs = zero;
            for s in 0..=i {
                let term = t
                    .get(i, s)
                    .mul(&t.get(i + tt - s, i + k))
                    .mul(&signed(s))
                    .mul(&t.q_pow(s * k + s * (s + 1) / 2));
                lhs = lhs.add(&term);
            }
            finish(id.name(), ix.to_vec(), lhs, t.get(tt, k), 0, t)
        }
        Identity::TrinomialRevision => {
            let (i, j, l) = (ix[0], ix[1], ix[2]);
            let lhs = t.get(j, l).mul(&t.get(j - l, i - l));
            let rhs = t.get(j, i).mul(&t.get(i, l));
            finish(id.name(), ix.to_vec(), lhs, rhs, 0, t)
        }
        Identity::SymmetryKernel => {
            let (i, j, tt, s) = (ix[0], ix[1], ix[2], ix[3]);
            let mut sum = zero;
            for l in 0..=j {
                let d = i - l;
                let term = t
                    .get(j, l)
                    .mul(&t.get(j + tt - l, i + s - l))
                    .mul(&t.get(l, i))
                    .mul(&signed(d))
                    .mul(&t.q_pow(d * (d + 1) / 2));
                sum = sum.add(&term);
            }
            let e = s * (i - j);
            let lhs = t.q_pow(e).mul(&sum);
            let rhs = t.get(j, i).mul(&t.get(tt, s));
            finish(id.name(), ix.to_vec(), lhs, rhs, -e.min(0), t)
        }
        Identity::InverseKernel => {
            let (j, tt, s) = (ix[0], ix[1], ix[2]);
            let mut sum = zero;
            for l in 0..=j {
                let term = t
                    .get(j, l)
                    .mul(&t.get(j + tt - l, s - l))
                    .mul(&signed(l))
                    .mul(&t.q_pow(l * (l - 1) / 2));
                sum = sum.add(&term);
            }
            let e = -s * j;
            let lhs = t.q_pow(e).mul(&sum);
            finish(id.name(), ix.to_vec(), lhs, t.get(tt, s), -e.min(0), t)
        }
    }
}

/// Index bounds for the exhaustive sweeps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepRanges {
    pub pascal_i: (i64, i64),
    pub pascal_s: (i64, i64),
    pub alternating_shift: i64,
    pub trinomial_revision_j: i64,
    pub symmetry_kernel: i64,
    pub inverse_kernel: i64,
}

impl Default for SweepRanges {
    fn default() -> Self {
        SweepRanges {
            pascal_i: (1, 10),
            pascal_s: (-2, 12),
            alternating_shift: 6,
            trinomial_revision_j: 8,
            symmetry_kernel: 5,
            inverse_kernel: 5,
        }
    }
}

impl SweepRanges {
    /// Caps every upper bound at `max`.
    pub fn capped(&self, max: i64) -> Self {
        SweepRanges {
            pascal_i: (self.pascal_i.0, self.pascal_i.1.min(max)),
            pascal_s: (self.pascal_s.0, self.pascal_s.1.min(max + 2)),
            alternating_shift: self.alternating_shift.min(max),
            trinomial_revision_j: self.trinomial_revision_j.min(max),
            symmetry_kernel: self.symmetry_kernel.min(max),
            inverse_kernel: self.inverse_kernel.min(max),
        }
    }

    fn tuples(&self, id: Identity) -> Vec<Vec<i64>> {
        let cube = |b: i64, k: usize| -> Vec<Vec<i64>> {
            let mut out = vec![vec![]];
            for _ in 0..k {
                out = out
                    .into_iter()
                    .flat_map(|v: Vec<i64>| {
                        (0..=b).map(move |x| {
                            let mut w = v.clone();
                            w.push(x);
                            w
                        })
                    })
                    .collect();
            }
            out
        };
        match id {
            Identity::AlternatingShift => cube(self.alternating_shift, 3),
            Identity::SymmetryKernel => cube(self.symmetry_kernel, 4),
            Identity::InverseKernel => cube(self.inverse_kernel, 3),
            Identity::TrinomialRevision => {
                let mut out = Vec::new();
                for j in 0..=self.trinomial_revision_j {
                    for i in 0..=j {
                        for l in 0..=i {
                            out.push(vec![i, j, l]);
                        }
                    }
                }
                out
            }
        }
    }
}

/// The sample points: generic q, the rationals 2, 3, 5/7, and ζₙ for
/// `2 ≤ n ≤ max_order`.
pub fn standard_q_values(max_order: u32) -> Vec<(String, QScalar)> {
    let mut out = vec![
        ("generic".to_string(), QScalar::generic()),
        ("2".to_string(), QScalar::rational(Rational::from_integer(2.into()))),
        ("3".to_string(), QScalar::rational(Rational::from_integer(3.into()))),
        ("5/7".to_string(), QScalar::rational(Rational::new(5.into(), 7.into()))),
    ];
    for n in 2..=max_order {
        out.push((format!("zeta_{n}"), QScalar::zeta(n)));
    }
    out
}

/// Both Pascal rules over the configured `(i, s)` box.
pub fn pascal_sweep(q: &QScalar, ranges: &SweepRanges) -> Vec<Verdict> {
    let table = QBinomialTable::new(q.clone(), ranges.pascal_i.1.max(0) as usize);
    let mut jobs = Vec::new();
    for rule in [Pascal::BottomWeight, Pascal::TopWeight] {
        for i in ranges.pascal_i.0..=ranges.pascal_i.1 {
            for s in ranges.pascal_s.0..=ranges.pascal_s.1 {
                jobs.push((rule, i, s));
            }
        }
    }
    jobs.into_par_iter()
        .map(|(rule, i, s)| check_pascal_with(rule, i, s, &table))
        .collect()
}

/// One identity over its configured index box.
pub fn identity_sweep(id: Identity, q: &QScalar, ranges: &SweepRanges) -> Vec<Verdict> {
    let tuples = ranges.tuples(id);
    let size = tuples.iter().map(|ix| id.table_size(ix)).max().unwrap_or(0);
    let table = QBinomialTable::new(q.clone(), size);
    tuples.into_par_iter().map(|ix| evaluate(id, &ix, &table)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{parse_expr_with_root, rat};

    fn gq(s: &str) -> QScalar {
        QScalar::Generic(Laurent::new(parse_expr_with_root(s, 1, "zz").unwrap(), 0))
    }

    #[test]
    fn q_numbers() {
        let g = QScalar::generic();
        assert!(q_number(0, &g).is_zero());
        assert!(q_number(3, &QScalar::zeta(3)).is_zero());
        assert_eq!(q_number(2, &g), gq("1 + q"));
        assert_eq!(
            q_number(4, &QScalar::rational(rat(2, 1))),
            QScalar::rational(rat(15, 1))
        );
    }

    #[test]
    fn q_factorials() {
        assert_eq!(q_factorial(0, &QScalar::generic()), gq("1"));
        assert!(q_factorial(3, &QScalar::zeta(3)).is_zero());
        let z4 = CycNumber::zeta_pow(4, 1);
        assert_eq!(
            q_factorial(2, &QScalar::zeta(4)),
            QScalar::Value(&CycNumber::one(4) + &z4)
        );
        assert!(!q_factorial(5, &QScalar::zeta(6)).is_zero());
    }

    #[test]
    fn q_binomials() {
        let g = QScalar::generic();
        for m in 0..6 {
            assert_eq!(q_binomial(m, 0, &g), gq("1"));
        }
        assert_eq!(q_binomial(2, 1, &g), gq("1 + q"));
        assert_eq!(q_binomial(4, 2, &g), gq("1 + q + 2q^2 + q^3 + q^4"));
        for n in 2..=8 {
            let z = QScalar::zeta(n);
            for k in 1..n as i64 {
                assert!(q_binomial(n as i64, k, &z).is_zero(), "n={n} k={k}");
            }
        }
        assert!(q_binomial(-1, 0, &g).is_zero());
        assert!(q_binomial(3, 4, &g).is_zero());
    }

    #[test]
    fn laurent_powers() {
        let g = QScalar::generic();
        let inv = g.pow(-3);
        assert_eq!(inv.as_laurent().unwrap().shift(), 3);
        assert_eq!(inv.mul(&g.pow(5)), g.pow(2));
        assert_eq!(g.pow(-1).add(&g.pow(1)).to_string(), "(1 + q^2)*q^-1");
    }

    #[test]
    fn pascal_examples() {
        let g = QScalar::generic();
        assert!(check_pascal(Pascal::BottomWeight, 1, 0, &g).passed);
        assert!(check_pascal(Pascal::BottomWeight, 4, 2, &QScalar::zeta(4)).passed);
        let v = check_pascal(Pascal::TopWeight, 3, 5, &g);
        assert!(v.passed);
        assert_eq!((v.lhs.as_str(), v.rhs.as_str()), ("0", "0"));
    }

    #[test]
    fn identity_examples() {
        let g = QScalar::generic();
        let v = check_identity(Identity::AlternatingShift, &[0, 5, 2], &g).unwrap();
        assert!(v.passed);
        assert_eq!(v.rhs, q_binomial(5, 2, &g).to_string());
        let v = check_identity(Identity::AlternatingShift, &[1, 1, 0], &g).unwrap();
        assert!(v.passed);
        assert_eq!(v.lhs, "1");
        assert!(
            check_identity(Identity::SymmetryKernel, &[0, 1, 1, 1], &g)
                .unwrap()
                .passed
        );
    }

    #[test]
    fn identity_errors() {
        let g = QScalar::generic();
        assert_eq!(
            check_identity(Identity::SymmetryKernel, &[0, 1, 1], &g),
            Err(IdentityError::ArityMismatch {
                name: "symmetry_kernel",
                expected: 4,
                got: 3
            })
        );
        assert!(matches!(
            check_identity(Identity::TrinomialRevision, &[3, 2, 1], &g),
            Err(IdentityError::PreconditionViolated { .. })
        ));
    }

    #[test]
    fn clearing_is_recorded() {
        let v = check_identity(Identity::SymmetryKernel, &[0, 2, 1, 2], &QScalar::generic()).unwrap();
        assert!(v.passed);
        assert_eq!(v.cleared, 4);
        let v = check_identity(Identity::InverseKernel, &[2, 1, 3], &QScalar::generic()).unwrap();
        assert!(v.passed);
        assert_eq!(v.cleared, 6);
    }

    #[test]
    fn symmetry_of_binomials() {
        let g = QScalar::generic();
        for m in 0..=10i64 {
            for l in -2..=m + 2 {
                assert_eq!(q_binomial(m, l, &g), q_binomial(m, m - l, &g), "m={m} l={l}");
            }
        }
    }

    #[test]
    fn quotient_formula_agrees() {
        for (_, q) in standard_q_values(8) {
            for m in 0..=9u32 {
                let fm = q_factorial(m, &q);
                if fm.is_zero() {
                    continue;
                }
                for k in 0..=m {
                    let lhs = q_binomial(m as i64, k as i64, &q)
                        .mul(&q_factorial(k, &q))
                        .mul(&q_factorial(m - k, &q));
                    assert_eq!(lhs, fm, "q={q} m={m} k={k}");
                }
            }
        }
    }

    #[test]
    fn small_sweeps_pass() {
        let ranges = SweepRanges::default().capped(3);
        for (label, q) in standard_q_values(4) {
            assert!(pascal_sweep(&q, &ranges).iter().all(|v| v.passed), "{label}");
            for id in Identity::ALL {
                let bad: Vec<_> = identity_sweep(id, &q, &ranges)
                    .into_iter()
                    .filter(|v| !v.passed)
                    .collect();
                assert!(bad.is_empty(), "{label}: {bad:?}");
            }
        }
    }
}
