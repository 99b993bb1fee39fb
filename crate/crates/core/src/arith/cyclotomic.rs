//! The cyclotomic field Q(ζₙ), realized as Q[x]/Φₙ(x).
//!
//! Elements are stored in the power basis `1, ζ, …, ζ^{φ(n)-1}`, so two
//! elements are equal exactly when their coordinate vectors agree. Field
//! tables (the modulus and reduced powers of ζ) are built once per order
//! and shared through an `Arc`.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{upoly, ArithError, Rational};

/// Φₙ with integer coefficients, lowest degree first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    assert!(n >= 1, "cyclotomic_polynomial: order must be positive");
    static CACHE: OnceLock<RwLock<HashMap<u32, Vec<BigInt>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.read().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by every Φ_d with d | n, d < n.
    let mut num: Vec<BigInt> = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            num = exact_div_monic(&num, &cyclotomic_polynomial(d));
        }
    }
    cache.write().unwrap().insert(n, num.clone());
    num
}

/// Exact quotient of integer polynomials by a monic divisor.
fn exact_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let nd = rem.len() - 1;
    let mut quot = vec![BigInt::zero(); nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (i, d) in den.iter().enumerate() {
            rem[k + i] -= &c * d;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "division was not exact");
    quot
}

pub fn euler_phi(n: u32) -> u32 {
    let mut m = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Precomputed data for Q(ζₙ).
#[derive(Debug)]
pub struct CycField {
    order: u32,
    degree: usize,
    modulus: Vec<Rational>,
    /// Canonical coordinates of ζ^k for k in 0..order.
    powers: Vec<Vec<Rational>>,
}

impl CycField {
    pub fn get(order: u32) -> Arc<CycField> {
        assert!(order >= 1, "cyclotomic field order must be positive");
        static FIELDS: OnceLock<RwLock<HashMap<u32, Arc<CycField>>>> = OnceLock::new();
        let fields = FIELDS.get_or_init(Default::default);
        if let Some(f) = fields.read().unwrap().get(&order) {
            return Arc::clone(f);
        }
        let field = Arc::new(CycField::build(order));
        fields.write().unwrap().entry(order).or_insert(field).clone()
    }

    fn build(order: u32) -> CycField {
        let modulus: Vec<Rational> = cyclotomic_polynomial(order)
            .into_iter()
            .map(Rational::from_integer)
            .collect();
        let degree = modulus.len() - 1;
        let mut powers = Vec::with_capacity(order as usize);
        let mut cur = vec![Rational::zero(); degree];
        cur[0] = Rational::one();
        for _ in 0..order {
            powers.push(cur.clone());
            // multiply by x and reduce with the monic modulus
            let top = cur[degree - 1].clone();
            for i in (1..degree).rev() {
                cur[i] = cur[i - 1].clone();
            }
            cur[0] = Rational::zero();
            if !top.is_zero() {
                for i in 0..degree {
                    cur[i] -= &top * &modulus[i];
                }
            }
        }
        CycField {
            order,
            degree,
            modulus,
            powers,
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.degree
    }
}

/// An element of Q(ζₙ) in canonical coordinates.
#[derive(Clone)]
pub struct CycNumber {
    field: Arc<CycField>,
    coords: Vec<Rational>,
}

impl CycNumber {
    pub fn zero(order: u32) -> Self {
        let field = CycField::get(order);
        let coords = vec![Rational::zero(); field.degree];
        CycNumber { field, coords }
    }

    pub fn one(order: u32) -> Self {
        Self::from_rational(order, Rational::one())
    }

    pub fn from_rational(order: u32, r: Rational) -> Self {
        let mut x = Self::zero(order);
        x.coords[0] = r;
        x
    }

    pub fn from_int(order: u32, v: i64) -> Self {
        Self::from_rational(order, Rational::from_integer(v.into()))
    }

    pub fn from_frac(order: u32, num: i64, den: i64) -> Self {
        Self::from_rational(order, Rational::new(num.into(), den.into()))
    }

    /// Builds an element from power-basis coordinates; missing entries are zero.
    pub fn from_coords(order: u32, coords: Vec<Rational>) -> Result<Self, ArithError> {
        let field = CycField::get(order);
        if coords.len() > field.degree {
            return Err(ArithError::BadCoordinates {
                order,
                expected: field.degree,
                got: coords.len(),
            });
        }
        let mut c = coords;
        c.resize(field.degree, Rational::zero());
        Ok(CycNumber { field, coords: c })
    }

    /// ζₙ^k, for any integer k.
    pub fn zeta_pow(order: u32, k: i64) -> Self {
        let field = CycField::get(order);
        let idx = k.rem_euclid(order as i64) as usize;
        let coords = field.powers[idx].clone();
        CycNumber { field, coords }
    }

    pub fn order(&self) -> u32 {
        self.field.order
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, when the element lies in Q.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coords[1..].iter().all(Zero::is_zero) {
            Some(&self.coords[0])
        } else {
            None
        }
    }

    fn check(&self, other: &Self) -> Result<(), ArithError> {
        if self.field.order == other.field.order {
            Ok(())
        } else {
            Err(ArithError::OrderMismatch {
                left: self.field.order,
                right: other.field.order,
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ArithError> {
        self.check(other)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        Ok(CycNumber {
            field: Arc::clone(&self.field),
            coords,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ArithError> {
        self.check(other)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect();
        Ok(CycNumber {
            field: Arc::clone(&self.field),
            coords,
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ArithError> {
        self.check(other)?;
        let deg = self.field.degree;
        if deg == 1 {
            return Ok(CycNumber {
                field: Arc::clone(&self.field),
                coords: vec![&self.coords[0] * &other.coords[0]],
            });
        }
        let mut prod = vec![Rational::zero(); 2 * deg - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let n = self.field.order as usize;
        let mut coords: Vec<Rational> = prod[..deg].to_vec();
        for (k, c) in prod.iter().enumerate().skip(deg) {
            if c.is_zero() {
                continue;
            }
            for (slot, p) in coords.iter_mut().zip(&self.field.powers[k % n]) {
                if !p.is_zero() {
                    *slot += c * p;
                }
            }
        }
        Ok(CycNumber {
            field: Arc::clone(&self.field),
            coords,
        })
    }

    pub fn scale(&self, r: &Rational) -> Self {
        CycNumber {
            field: Arc::clone(&self.field),
            coords: self.coords.iter().map(|c| c * r).collect(),
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against Φₙ.
    pub fn inv(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(self.order(), r.recip()));
        }
        let s = upoly::inverse_mod(&self.coords, &self.field.modulus)
            .expect("Φₙ is irreducible, so every nonzero residue is invertible");
        Self::from_coords(self.order(), s)
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, ArithError> {
        self.check(other)?;
        self.try_mul(&other.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self, ArithError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one(self.order());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Writes the element using `symbol` for ζₙ.
    pub fn fmt_with(&self, symbol: &str) -> String {
        let mut out = String::new();
        for (k, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let neg = c.is_negative();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let power = match k {
                0 => String::new(),
                1 => symbol.to_string(),
                _ => format!("{symbol}^{k}"),
            };
            if power.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&power);
            } else {
                out.push_str(&format!("{mag}*{power}"));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Number of nonzero coordinates.
    pub fn weight(&self) -> usize {
        self.coords.iter().filter(|c| !c.is_zero()).count()
    }
}

impl PartialEq for CycNumber {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.coords == other.coords
    }
}

impl Eq for CycNumber {}

impl Hash for CycNumber {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.order.hash(state);
        self.coords.hash(state);
    }
}

impl fmt::Debug for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycNumber<{}>({})", self.field.order, self.fmt_with("z"))
    }
}

impl fmt::Display for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_with("z"))
    }
}

// Operator forms panic on mismatched orders; use the `try_*` methods when the
// orders are not known to agree.
impl<'a> Add<&'a CycNumber> for &'a CycNumber {
    type Output = CycNumber;
    fn add(self, rhs: &'a CycNumber) -> CycNumber {
        self.try_add(rhs).expect("cyclotomic order mismatch")
    }
}

impl<'a> Sub<&'a CycNumber> for &'a CycNumber {
    type Output = CycNumber;
    fn sub(self, rhs: &'a CycNumber) -> CycNumber {
        self.try_sub(rhs).expect("cyclotomic order mismatch")
    }
}

impl<'a> Mul<&'a CycNumber> for &'a CycNumber {
    type Output = CycNumber;
    fn mul(self, rhs: &'a CycNumber) -> CycNumber {
        self.try_mul(rhs).expect("cyclotomic order mismatch")
    }
}

impl Neg for &CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        CycNumber {
            field: Arc::clone(&self.field),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(p: &[BigInt]) -> Vec<i64> {
        p.iter().map(|c| c.try_into().unwrap()).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(ints(&cyclotomic_polynomial(1)), vec![-1, 1]);
        assert_eq!(ints(&cyclotomic_polynomial(2)), vec![1, 1]);
        assert_eq!(ints(&cyclotomic_polynomial(4)), vec![1, 0, 1]);
        assert_eq!(ints(&cyclotomic_polynomial(6)), vec![1, -1, 1]);
        assert_eq!(ints(&cyclotomic_polynomial(8)), vec![1, 0, 0, 0, 1]);
    }

    #[test]
    fn product_over_divisors_is_x_n_minus_one() {
        for n in 1..=24u32 {
            let mut prod = vec![BigInt::one()];
            for d in 1..=n {
                if n % d == 0 {
                    let f = cyclotomic_polynomial(d);
                    let mut next = vec![BigInt::zero(); prod.len() + f.len() - 1];
                    for (i, a) in prod.iter().enumerate() {
                        for (j, b) in f.iter().enumerate() {
                            next[i + j] += a * b;
                        }
                    }
                    prod = next;
                }
            }
            let mut expected = vec![BigInt::zero(); n as usize + 1];
            expected[0] = -BigInt::one();
            expected[n as usize] = BigInt::one();
            assert_eq!(prod, expected, "n = {n}");
            assert_eq!(cyclotomic_polynomial(n).len() - 1, euler_phi(n) as usize);
        }
    }

    #[test]
    fn zeta_powers() {
        assert_eq!(CycNumber::zeta_pow(4, 2), CycNumber::from_int(4, -1));
        assert_eq!(CycNumber::zeta_pow(3, 3), CycNumber::one(3));
        assert_eq!(CycNumber::zeta_pow(5, 0), CycNumber::one(5));
        // ζ₃⁻¹ = ζ₃² = -1 - ζ₃
        let expected = &CycNumber::from_int(3, -1) - &CycNumber::zeta_pow(3, 1);
        assert_eq!(CycNumber::zeta_pow(3, -1), expected);
    }

    #[test]
    fn primitivity() {
        for n in 1..=16u32 {
            let z = CycNumber::zeta_pow(n, 1);
            assert!(z.pow(n as i64).unwrap().is_one());
            for k in 1..n as i64 {
                assert!(!z.pow(k).unwrap().is_one(), "ζ_{n}^{k} = 1");
            }
        }
    }

    #[test]
    fn inverses() {
        assert!(CycNumber::one(7).inv().unwrap().is_one());
        // (1 + ζ₃)⁻¹ = -ζ₃
        let a = &CycNumber::one(3) + &CycNumber::zeta_pow(3, 1);
        assert_eq!(a.inv().unwrap(), -CycNumber::zeta_pow(3, 1));
        assert_eq!(CycNumber::from_int(4, 2).inv().unwrap(), CycNumber::from_frac(4, 1, 2));
        assert_eq!(CycNumber::zero(5).inv(), Err(ArithError::DivisionByZero));
    }

    #[test]
    fn order_mismatch_is_reported() {
        let a = CycNumber::one(3);
        let b = CycNumber::one(4);
        assert_eq!(a.try_add(&b), Err(ArithError::OrderMismatch { left: 3, right: 4 }));
    }

    #[test]
    fn display() {
        let a = &CycNumber::from_frac(4, 1, 2) - &CycNumber::zeta_pow(4, 1);
        assert_eq!(a.to_string(), "1/2 - z");
        assert_eq!(CycNumber::zero(4).to_string(), "0");
        assert_eq!(
            CycNumber::zeta_pow(8, 3)
                .scale(&Rational::new(3.into(), 2.into()))
                .to_string(),
            "3/2*z^3"
        );
    }
}
