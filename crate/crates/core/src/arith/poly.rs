//! Sparse polynomials in named parameters with coefficients in Q(ζₙ).

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed};

use super::{ArithError, CycNumber, Rational};

/// A monomial: parameter names with positive exponents, sorted by name.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<(Arc<str>, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(name: &str) -> Self {
        Monomial(vec![(Arc::from(name), 1)])
    }

    /// `name^e`; the empty monomial when `e = 0`.
    pub fn power(name: &str, e: u32) -> Self {
        if e == 0 {
            Self::one()
        } else {
            Monomial(vec![(Arc::from(name), e)])
        }
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> &[(Arc<str>, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn exponent(&self, name: &str) -> u32 {
        self.0.iter().find(|(v, _)| &**v == name).map_or(0, |(_, e)| *e)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (a, b) = (&self.0[i], &other.0[j]);
            match a.0.cmp(&b.0) {
                std::cmp::Ordering::Less => {
                    out.push(a.clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b.clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a.0.clone(), a.1 + b.1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    /// Removes `name` from the monomial, returning the rest and its exponent.
    fn split(&self, name: &str) -> (Monomial, u32) {
        let mut e = 0;
        let rest = self
            .0
            .iter()
            .filter(|(v, k)| {
                if &**v == name {
                    e = *k;
                    false
                } else {
                    true
                }
            })
            .cloned()
            .collect();
        (Monomial(rest), e)
    }

    fn render(&self) -> String {
        self.0
            .iter()
            .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// Polynomial over Q(ζₙ); zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct ParamPoly {
    order: u32,
    terms: BTreeMap<Monomial, CycNumber>,
}

impl ParamPoly {
    pub fn zero(order: u32) -> Self {
        ParamPoly {
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(order: u32) -> Self {
        Self::constant(CycNumber::one(order))
    }

    pub fn from_int(order: u32, v: i64) -> Self {
        Self::constant(CycNumber::from_int(order, v))
    }

    pub fn constant(c: CycNumber) -> Self {
        let mut p = Self::zero(c.order());
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn var(order: u32, name: &str) -> Self {
        Self::monomial(CycNumber::one(order), Monomial::var(name))
    }

    pub fn monomial(c: CycNumber, m: Monomial) -> Self {
        let mut p = Self::zero(c.order());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &CycNumber)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The value of a constant polynomial.
    pub fn constant_value(&self) -> Option<CycNumber> {
        match self.terms.len() {
            0 => Some(CycNumber::zero(self.order)),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    /// Constant term (zero when absent).
    pub fn constant_term(&self) -> CycNumber {
        self.terms
            .get(&Monomial::one())
            .cloned()
            .unwrap_or_else(|| CycNumber::zero(self.order))
    }

    /// Parameter names occurring in the polynomial, sorted.
    pub fn vars(&self) -> Vec<String> {
        let set: BTreeSet<&str> = self.terms.keys().flat_map(|m| m.0.iter().map(|(v, _)| &**v)).collect();
        set.into_iter().map(String::from).collect()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn mentions(&self, name: &str) -> bool {
        self.terms.keys().any(|m| m.exponent(name) > 0)
    }

    pub fn degree_in(&self, name: &str) -> u32 {
        self.terms.keys().map(|m| m.exponent(name)).max().unwrap_or(0)
    }

    /// Coefficient of `name^k`, as a polynomial in the remaining parameters.
    pub fn coefficient_in(&self, name: &str, k: u32) -> ParamPoly {
        let mut out = Self::zero(self.order);
        for (m, c) in &self.terms {
            let (rest, e) = m.split(name);
            if e == k {
                out.add_term(rest, c.clone());
            }
        }
        out
    }

    fn check(&self, other: &Self) -> Result<(), ArithError> {
        if self.order == other.order {
            Ok(())
        } else {
            Err(ArithError::OrderMismatch {
                left: self.order,
                right: other.order,
            })
        }
    }

    fn add_term(&mut self, m: Monomial, c: CycNumber) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ArithError> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ArithError> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ArithError> {
        self.check(other)?;
        let mut out = Self::zero(self.order);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    /// In-place `self += c * other`.
    pub fn add_scaled(&mut self, c: &CycNumber, other: &Self) {
        assert_eq!(self.order, other.order, "cyclotomic order mismatch");
        if c.is_zero() {
            return;
        }
        for (m, d) in &other.terms {
            self.add_term(m.clone(), c * d);
        }
    }

    /// In-place `self += other`.
    pub fn add_assign_ref(&mut self, other: &Self) {
        assert_eq!(self.order, other.order, "cyclotomic order mismatch");
        for (m, d) in &other.terms {
            self.add_term(m.clone(), d.clone());
        }
    }

    pub fn scale(&self, c: &CycNumber) -> Self {
        if c.is_zero() {
            return Self::zero(self.order);
        }
        ParamPoly {
            order: self.order,
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect(),
        }
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.scale(&CycNumber::from_rational(self.order, r.clone()))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluates with every parameter bound.
    pub fn eval(&self, assignment: &HashMap<String, CycNumber>) -> Result<CycNumber, ArithError> {
        let mut acc = CycNumber::zero(self.order);
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in &m.0 {
                let val = assignment
                    .get(&**v)
                    .ok_or_else(|| ArithError::UnboundVariable(v.to_string()))?;
                t = t.try_mul(&val.pow(*e as i64)?)?;
            }
            acc = acc.try_add(&t)?;
        }
        Ok(acc)
    }

    /// Replaces one parameter by a polynomial.
    pub fn substitute(&self, name: &str, value: &ParamPoly) -> ParamPoly {
        let mut map = BTreeMap::new();
        map.insert(name.to_string(), value.clone());
        self.substitute_all(&map)
    }

    /// Simultaneously replaces several parameters.
    pub fn substitute_all(&self, values: &BTreeMap<String, ParamPoly>) -> ParamPoly {
        let touched = self
            .terms
            .keys()
            .any(|m| m.0.iter().any(|(v, _)| values.contains_key(&**v)));
        if !touched {
            return self.clone();
        }
        let mut out = Self::zero(self.order);
        let mut powers: HashMap<(&str, u32), ParamPoly> = HashMap::new();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut factor = Self::constant(c.clone());
            for (v, e) in &m.0 {
                match values.get(&**v) {
                    Some(val) => {
                        let p = powers.entry((&**v, *e)).or_insert_with(|| val.pow(*e)).clone();
                        factor = &factor * &p;
                    }
                    None => kept.push((v.clone(), *e)),
                }
            }
            let rest = Self::monomial(CycNumber::one(self.order), Monomial(kept));
            out.add_assign_ref(&(&factor * &rest));
        }
        out
    }

    /// Renames parameters; names missing from `map` are kept.
    pub fn rename(&self, map: &BTreeMap<String, String>) -> ParamPoly {
        let values: BTreeMap<String, ParamPoly> = map
            .iter()
            .map(|(from, to)| (from.clone(), Self::var(self.order, to)))
            .collect();
        self.substitute_all(&values)
    }

    /// Renders with `symbol` standing for ζₙ. The output parses back.
    pub fn fmt_with(&self, symbol: &str) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        if let Some(c) = self.constant_value() {
            return c.fmt_with(symbol);
        }
        let mut out = String::new();
        for (m, c) in &self.terms {
            let (neg, body) = render_term(m, c, symbol);
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        out
    }
}

// Sign and body of one term, with the sign pulled out when the
// coefficient has a single coordinate.
fn render_term(m: &Monomial, c: &CycNumber, symbol: &str) -> (bool, String) {
    let coeff_single = c.weight() == 1;
    let (neg, coeff) = if coeff_single {
        let lead = c.coords().iter().find(|x| !num_traits::Zero::is_zero(*x)).unwrap();
        if lead.is_negative() {
            (true, (-c).fmt_with(symbol))
        } else {
            (false, c.fmt_with(symbol))
        }
    } else {
        (false, format!("({})", c.fmt_with(symbol)))
    };
    if m.is_one() {
        return (neg, coeff);
    }
    let mono = m.render();
    let is_unit = coeff_single && c.as_rational().is_some_and(|r| r.abs().is_one());
    if is_unit {
        (neg, mono)
    } else {
        (neg, format!("{coeff}*{mono}"))
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_with("z"))
    }
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ParamPoly<{}>({})", self.order, self.fmt_with("z"))
    }
}

impl<'a> Add<&'a ParamPoly> for &'a ParamPoly {
    type Output = ParamPoly;
    fn add(self, rhs: &'a ParamPoly) -> ParamPoly {
        self.try_add(rhs).expect("cyclotomic order mismatch")
    }
}

impl<'a> Sub<&'a ParamPoly> for &'a ParamPoly {
    type Output = ParamPoly;
    fn sub(self, rhs: &'a ParamPoly) -> ParamPoly {
        self.try_sub(rhs).expect("cyclotomic order mismatch")
    }
}

impl<'a> Mul<&'a ParamPoly> for &'a ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: &'a ParamPoly) -> ParamPoly {
        self.try_mul(rhs).expect("cyclotomic order mismatch")
    }
}

impl Neg for &ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        ParamPoly {
            order: self.order,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn var(name: &str) -> ParamPoly {
        ParamPoly::var(4, name)
    }

    #[test]
    fn cancellation_is_canonical() {
        let p = &var("alpha") + &ParamPoly::one(4);
        assert!((&p - &p).is_zero());
        assert_eq!(&p - &p, ParamPoly::zero(4));
    }

    #[test]
    fn eval_alpha_squared_at_i() {
        let p = var("alpha").pow(2);
        let mut env = HashMap::new();
        env.insert("alpha".to_string(), CycNumber::zeta_pow(4, 1));
        assert_eq!(p.eval(&env).unwrap(), CycNumber::from_int(4, -1));
        assert_eq!(var("beta").eval(&env), Err(ArithError::UnboundVariable("beta".into())));
    }

    #[test]
    fn monomial_product() {
        let p = &(&var("a1") * &var("a2")) * &var("a1");
        let expected = ParamPoly::monomial(
            CycNumber::one(4),
            Monomial::var("a1").mul(&Monomial::var("a1")).mul(&Monomial::var("a2")),
        );
        assert_eq!(p, expected);
        assert_eq!(p.to_string(), "a1^2*a2");
    }

    #[test]
    fn order_mismatch() {
        let a = ParamPoly::one(3);
        let b = ParamPoly::one(5);
        assert_eq!(a.try_mul(&b), Err(ArithError::OrderMismatch { left: 3, right: 5 }));
    }

    #[test]
    fn substitution_and_coefficients() {
        // (a + 2b)^2 with b -> a - 1
        let p = (&var("a") + &var("b").scale(&CycNumber::from_int(4, 2))).pow(2);
        let q = p.substitute("b", &(&var("a") - &ParamPoly::one(4)));
        let expected = (&var("a").scale(&CycNumber::from_int(4, 3)) - &ParamPoly::from_int(4, 2)).pow(2);
        assert_eq!(q, expected);
        assert_eq!(p.degree_in("b"), 2);
        assert_eq!(p.coefficient_in("b", 1), var("a").scale(&CycNumber::from_int(4, 4)));
        assert_eq!(p.vars(), vec!["a".to_string(), "b".to_string()]);
    }

    #[test]
    fn rendering() {
        let z = CycNumber::zeta_pow(4, 1);
        let p = &ParamPoly::constant(CycNumber::from_frac(4, 1, 2)) - &var("alpha").scale(&z);
        assert_eq!(p.to_string(), "1/2 - z*alpha");
        let c = &CycNumber::one(4) - &z;
        let p = var("beta").pow(2).scale(&c);
        assert_eq!(p.fmt_with("w"), "(1 - w)*beta^2");
        assert_eq!(ParamPoly::constant(c).to_string(), "1 - z");
    }
}
