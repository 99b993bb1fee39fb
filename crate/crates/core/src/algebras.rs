//! Built-in Hopf algebras.
//!
//! Basis orderings are part of the public contract:
//!
//! * Taft `Tₙ(q)`: `g^i x^j` at index `i·n + j`, with `q = ζₙ`.
//! * Nichols `H_{2ⁿ}`: `g^{j₀} x₁^{j₁} ⋯ x_{n-1}^{j_{n-1}}` at the index whose
//!   binary digits are `j₀ j₁ …`, least significant first.
//! * Cyclic group algebra `kCₙ`: `g^i` at index `i`; its dual uses the dual
//!   basis `(g^i)*` in the same order.

use std::sync::Arc;

use crate::arith::CycNumber;
use crate::error::{Error, Result};
use crate::hopf::{dual_hopf, normalize_sparse, CoTerm, DualMetadata, HopfData, HopfParts, Sparse};
use crate::qcomb::{QBinomialTable, QScalar};

fn require(what: &'static str, n: i64, min: i64) -> Result<u32> {
    if n < min {
        Err(Error::InvalidOrder { what, n, min })
    } else {
        u32::try_from(n).map_err(|_| Error::InvalidOrder { what, n, min })
    }
}

fn mul_table(mult: &[Sparse], d: usize, a: &Sparse, b: &Sparse) -> Sparse {
    let mut out = Vec::new();
    for (i, x) in a {
        for (j, y) in b {
            let xy = x * y;
            for (k, c) in &mult[i * d + j] {
                out.push((*k, &xy * c));
            }
        }
    }
    normalize_sparse(out)
}

fn tensor_mul(mult: &[Sparse], d: usize, x: &[CoTerm], y: &[CoTerm]) -> Vec<CoTerm> {
    let mut out = Vec::new();
    for (a, b, c1) in x {
        for (u, v, c2) in y {
            let c = c1 * c2;
            for (p, cp) in &mult[a * d + u] {
                let cc = &c * cp;
                for (r, cr) in &mult[b * d + v] {
                    out.push((*p, *r, &cc * cr));
                }
            }
        }
    }
    let mut acc = std::collections::BTreeMap::new();
    for (p, r, c) in out {
        let e = acc.entry((p, r)).or_insert_with(|| CycNumber::zero(c.order()));
        *e = &*e + &c;
    }
    acc.into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|((p, r), c)| (p, r, c))
        .collect()
}

fn one(order: u32) -> CycNumber {
    CycNumber::one(order)
}

/// Label of `g^i x^j`.
pub fn taft_label(i: usize, j: usize) -> String {
    let part = |s: &str, e: usize| match e {
        0 => String::new(),
        1 => s.to_string(),
        _ => format!("{s}^{e}"),
    };
    let l = format!("{}{}", part("g", i), part("x", j));
    if l.is_empty() {
        "1".into()
    } else {
        l
    }
}

/// Index of `g^i x^j` in `Tₙ(q)`, exponent of `g` taken mod n.
pub fn taft_index(n: usize, i: i64, j: usize) -> usize {
    (i.rem_euclid(n as i64) as usize) * n + j
}

/// The Taft algebra `Tₙ(q)`, `q = ζₙ`: `gⁿ = 1`, `xⁿ = 0`, `xg = qgx`,
/// `Δ(g) = g⊗g`, `Δ(x) = x⊗1 + g⊗x`.
pub fn taft(n: i64) -> Result<HopfData> {
    let n = require("taft", n, 2)? as usize;
    let order = n as u32;
    let d = n * n;
    let zeta = |k: i64| CycNumber::zeta_pow(order, k);
    let mut basis = Vec::with_capacity(d);
    for i in 0..n {
        for j in 0..n {
            basis.push(taft_label(i, j));
        }
    }
    let mut mult = vec![Vec::new(); d * d];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    if j + l < n {
                        let c = zeta((j * k) as i64);
                        mult[(i * n + j) * d + k * n + l] = vec![(((i + k) % n) * n + j + l, c)];
                    }
                }
            }
        }
    }
    let binom = QBinomialTable::new(QScalar::zeta(order), n);
    let mut comult = vec![Vec::new(); d];
    for i in 0..n {
        for j in 0..n {
            comult[i * n + j] = (0..=j)
                .map(|l| {
                    let c = binom.get(j as i64, l as i64).as_value().cloned().expect("concrete q");
                    (((i + l) % n) * n + j - l, i * n + l, c)
                })
                .collect();
        }
    }
    let counit = (0..d)
        .map(|b| if b % n == 0 { one(order) } else { CycNumber::zero(order) })
        .collect();
    // S(g^i x^j) = S(x)^j S(g)^i with S(g) = g^{n-1}, S(x) = -g^{n-1}x
    let s_g: Sparse = vec![((n - 1) * n, one(order))];
    let s_x: Sparse = vec![((n - 1) * n + 1, -one(order))];
    let antipode = (0..d)
        .map(|b| {
            let (i, j) = (b / n, b % n);
            let mut acc: Sparse = vec![(0, one(order))];
            for _ in 0..j {
                acc = mul_table(&mult, d, &acc, &s_x);
            }
            for _ in 0..i {
                acc = mul_table(&mult, d, &acc, &s_g);
            }
            acc
        })
        .collect();
    HopfData::from_parts(HopfParts {
        name: format!("taft({n})"),
        order,
        basis,
        mult,
        unit: vec![(0, one(order))],
        comult,
        counit,
        antipode,
        grouplikes: (0..n).map(|i| vec![(i * n, one(order))]).collect(),
        skew_primitives: vec![(1, 0, n)],
    })
}

/// `Δ(g)^i Δ(x)^j`, computed in `Tₙ(q) ⊗ Tₙ(q)` independently of the closed
/// formula stored in [`taft`].
pub fn taft_coproduct_by_extension(h: &HopfData, n: usize, i: usize, j: usize) -> Vec<CoTerm> {
    let order = h.order();
    let mult: Vec<Sparse> = (0..h.dim() * h.dim())
        .map(|k| h.product(k / h.dim(), k % h.dim()).clone())
        .collect();
    let dg = vec![(n, n, one(order))];
    let dx = vec![(1, 0, one(order)), (n, 1, one(order))];
    let mut acc = vec![(0, 0, one(order))];
    for _ in 0..i {
        acc = tensor_mul(&mult, h.dim(), &acc, &dg);
    }
    for _ in 0..j {
        acc = tensor_mul(&mult, h.dim(), &acc, &dx);
    }
    acc
}

/// Label of the Nichols basis element with bit pattern `b`.
pub fn nichols_label(b: usize) -> String {
    if b == 0 {
        return "1".into();
    }
    let mut l = String::new();
    if b & 1 == 1 {
        l.push('g');
    }
    let mut k = 1;
    while (b >> k) != 0 {
        if (b >> k) & 1 == 1 {
            l.push_str(&format!("x{k}"));
        }
        k += 1;
    }
    l
}

// Letters of a basis element in canonical order: 0 for g, k for x_k.
fn nichols_letters(b: usize, n: usize) -> Vec<usize> {
    (0..n).filter(|k| (b >> k) & 1 == 1).collect()
}

/// Normal form of a word in g, x₁, …: all distinct letters anticommute,
/// `g² = 1`, `x_k² = 0`. Returns `(sign, index)` or `None` when zero.
fn nichols_normalize(word: &[usize]) -> Option<(i64, usize)> {
    let mut w = word.to_vec();
    let mut sign = 1;
    // bubble sort, each swap of distinct letters flips the sign
    for pass in 0..w.len() {
        for k in 0..w.len().saturating_sub(1 + pass) {
            if w[k] > w[k + 1] {
                w.swap(k, k + 1);
                sign = -sign;
            }
        }
    }
    let mut index = 0usize;
    let mut k = 0;
    while k < w.len() {
        let letter = w[k];
        let mut run = 0;
        while k < w.len() && w[k] == letter {
            run += 1;
            k += 1;
        }
        if letter == 0 {
            index |= run % 2;
        } else if run > 1 {
            return None;
        } else {
            index |= 1 << letter;
        }
    }
    Some((sign, index))
}

/// The Nichols Hopf algebra `H_{2ⁿ}` on `g, x₁, …, x_{n-1}`:
/// `g² = 1`, `x_k² = 0`, `x_k g = -g x_k`, `x_k x_l = -x_l x_k`,
/// `Δ(g) = g⊗g`, `Δ(x_k) = x_k⊗1 + g⊗x_k`, `S(g) = g`, `S(x_k) = -g x_k`.
/// Scalars live in Q.
pub fn nichols(n: i64) -> Result<HopfData> {
    let n = require("nichols", n, 2)? as usize;
    if n > 16 {
        return Err(Error::PreconditionViolated(format!(
            "nichols({n}) is too large to tabulate"
        )));
    }
    let order = 1;
    let d = 1usize << n;
    let basis: Vec<String> = (0..d).map(nichols_label).collect();
    let mut mult = vec![Vec::new(); d * d];
    for a in 0..d {
        for b in 0..d {
            let mut word = nichols_letters(a, n);
            word.extend(nichols_letters(b, n));
            if let Some((s, k)) = nichols_normalize(&word) {
                mult[a * d + b] = vec![(k, CycNumber::from_int(order, s))];
            }
        }
    }
    let letter_delta = |l: usize| -> Vec<CoTerm> {
        if l == 0 {
            vec![(1, 1, one(order))]
        } else {
            vec![(1 << l, 0, one(order)), (1, 1 << l, one(order))]
        }
    };
    let letter_s = |l: usize| -> Sparse {
        if l == 0 {
            vec![(1, one(order))]
        } else {
            vec![((1 << l) | 1, -one(order))]
        }
    };
    let mut comult = Vec::with_capacity(d);
    let mut antipode = Vec::with_capacity(d);
    for b in 0..d {
        let letters = nichols_letters(b, n);
        let mut delta = vec![(0, 0, one(order))];
        for &l in &letters {
            delta = tensor_mul(&mult, d, &delta, &letter_delta(l));
        }
        comult.push(delta);
        let mut s: Sparse = vec![(0, one(order))];
        for &l in letters.iter().rev() {
            s = mul_table(&mult, d, &s, &letter_s(l));
        }
        antipode.push(s);
    }
    let counit = (0..d)
        .map(|b| if b <= 1 { one(order) } else { CycNumber::zero(order) })
        .collect();
    HopfData::from_parts(HopfParts {
        name: format!("nichols({n})"),
        order,
        basis,
        mult,
        unit: vec![(0, one(order))],
        comult,
        counit,
        antipode,
        grouplikes: vec![vec![(0, one(order))], vec![(1, one(order))]],
        skew_primitives: (1..n).map(|k| (1 << k, 0, 1)).collect(),
    })
}

/// Label of `g^i`.
pub fn group_label(i: usize) -> String {
    taft_label(i, 0)
}

/// The group algebra `kCₙ` over Q(ζₙ).
pub fn group_algebra_cyclic(n: i64) -> Result<HopfData> {
    let n = require("groupalg", n, 1)? as usize;
    let order = n as u32;
    let mut mult = vec![Vec::new(); n * n];
    for i in 0..n {
        for j in 0..n {
            mult[i * n + j] = vec![((i + j) % n, one(order))];
        }
    }
    HopfData::from_parts(HopfParts {
        name: format!("groupalg({n})"),
        order,
        basis: (0..n).map(group_label).collect(),
        mult,
        unit: vec![(0, one(order))],
        comult: (0..n).map(|i| vec![(i, i, one(order))]).collect(),
        counit: vec![one(order); n],
        antipode: (0..n).map(|i| vec![((n - i) % n, one(order))]).collect(),
        grouplikes: (0..n).map(|i| vec![(i, one(order))]).collect(),
        skew_primitives: vec![],
    })
}

/// `(kCₙ)*`, with the characters `χ_k = Σ_j ζₙ^{jk} (g^j)*` declared as its
/// group-likes.
pub fn dual_group_algebra_cyclic(n: i64) -> Result<HopfData> {
    let g = group_algebra_cyclic(n)?;
    let n = n as usize;
    let order = g.order();
    let characters = (0..n)
        .map(|k| {
            (0..n)
                .map(|j| (j, CycNumber::zeta_pow(order, (j * k) as i64)))
                .collect()
        })
        .collect();
    let meta = DualMetadata {
        grouplikes: characters,
        skew_primitives: vec![],
    };
    Ok(dual_hopf(&g, Some(meta)).with_name(format!("dualgroupalg({n})")))
}

/// Which built-in family a command-line algebra argument names.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BuiltinKind {
    Taft,
    Nichols,
    GroupAlg,
    DualGroupAlg,
}

impl BuiltinKind {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "taft" => Some(BuiltinKind::Taft),
            "nichols" => Some(BuiltinKind::Nichols),
            "groupalg" => Some(BuiltinKind::GroupAlg),
            "dualgroupalg" => Some(BuiltinKind::DualGroupAlg),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BuiltinKind::Taft => "taft",
            BuiltinKind::Nichols => "nichols",
            BuiltinKind::GroupAlg => "groupalg",
            BuiltinKind::DualGroupAlg => "dualgroupalg",
        }
    }

    pub fn build(self, n: i64) -> Result<Arc<HopfData>> {
        let h = match self {
            BuiltinKind::Taft => taft(n)?,
            BuiltinKind::Nichols => nichols(n)?,
            BuiltinKind::GroupAlg => group_algebra_cyclic(n)?,
            BuiltinKind::DualGroupAlg => dual_group_algebra_cyclic(n)?,
        };
        Ok(Arc::new(h))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{validate_all, AlgElement};

    #[test]
    fn taft_labels_and_dim() {
        let t = taft(3).unwrap();
        assert_eq!(t.dim(), 9);
        assert_eq!(t.basis(), ["1", "x", "x^2", "g", "gx", "gx^2", "g^2", "g^2x", "g^2x^2"]);
        assert!(matches!(taft(1), Err(Error::InvalidOrder { .. })));
    }

    #[test]
    fn taft_relations() {
        let t = Arc::new(taft(3).unwrap());
        let x = AlgElement::basis(&t, 1);
        let g = AlgElement::basis(&t, 3);
        let gx = AlgElement::basis(&t, 4);
        let q = crate::arith::ParamPoly::constant(CycNumber::zeta_pow(3, 1));
        assert_eq!(x.multiply(&g).unwrap(), gx.scale(&q));
        let x3 = x.multiply(&x).unwrap().multiply(&x).unwrap();
        assert!(x3.coords().iter().all(|c| c.is_zero()));
    }

    #[test]
    fn taft3_coproduct_of_x_squared() {
        let t = taft(3).unwrap();
        let q = CycNumber::zeta_pow(3, 1);
        let two_q = &one(3) + &q;
        // x²⊗1 + (2)_q gx⊗x + g²⊗x²
        assert_eq!(t.coproduct(2), [(2, 0, one(3)), (4, 1, two_q), (6, 2, one(3))]);
    }

    #[test]
    fn sweedler_relations() {
        let t = taft(2).unwrap();
        let minus = CycNumber::from_int(2, -1);
        assert_eq!(t.product(2, 2), &vec![(0, one(2))]);
        assert!(t.product(1, 1).is_empty());
        assert_eq!(t.product(1, 2), &vec![(3, minus)]);
    }

    #[test]
    fn nichols_normal_form() {
        assert_eq!(nichols_normalize(&[1, 0]), Some((-1, 0b11)));
        assert_eq!(nichols_normalize(&[2, 1]), Some((-1, 0b110)));
        assert_eq!(nichols_normalize(&[1, 1]), None);
        assert_eq!(nichols_normalize(&[0, 0]), Some((1, 0)));
        assert_eq!(nichols_normalize(&[0, 1, 0]), Some((-1, 0b10)));
        assert_eq!(nichols_label(0b111), "gx1x2");
    }

    #[test]
    fn nichols3_coproduct_of_x1x2() {
        let h = nichols(3).unwrap();
        let i = |l: &str| h.index_of(l).unwrap();
        let c = |v: i64| CycNumber::from_int(1, v);
        let mut expected = vec![
            (i("x1x2"), i("1"), c(1)),
            (i("gx1"), i("x2"), c(-1)),
            (i("gx2"), i("x1"), c(1)),
            (i("1"), i("x1x2"), c(1)),
        ];
        expected.sort_by_key(|t| (t.0, t.1));
        assert_eq!(h.coproduct(i("x1x2")), expected);
    }

    #[test]
    fn group_algebras() {
        let g = group_algebra_cyclic(4).unwrap();
        assert_eq!(g.antipode(1), &vec![(3, one(4))]);
        assert_eq!(group_algebra_cyclic(1).unwrap().dim(), 1);
        let d = dual_group_algebra_cyclic(3).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let expected = if i == j { vec![(i, one(3))] } else { vec![] };
                assert_eq!(d.product(i, j), &expected);
            }
        }
        assert!(validate_all(&d).passed());
    }

    #[test]
    fn small_builtins_validate() {
        for h in [taft(2), taft(3), nichols(2), nichols(3), group_algebra_cyclic(5)] {
            let h = h.unwrap();
            let r = validate_all(&h);
            assert!(r.passed(), "{}: {r}", h.name());
        }
    }
}
