//! Worked examples of partial (co)actions, stored as exact expression strings
//! and compared against the constructors in the scalar ring.
//!
//! Labels not listed in a table are expected to be zero.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebras::BuiltinKind;
use crate::arith::{parse_expr_with_root, ParamPoly};
use crate::error::{Error, Result};
use crate::partial::{builtin_action_families, builtin_coaction_families};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TableKind {
    Action,
    Coaction,
}

#[derive(Clone, Debug)]
pub struct ExampleTable {
    pub id: &'static str,
    pub algebra: BuiltinKind,
    pub n: i64,
    pub kind: TableKind,
    /// Name of the built-in family the table describes.
    pub family: &'static str,
    /// Symbol used for ζₙ in the entries.
    pub root: &'static str,
    /// Parameter names used in the entries, in the family's parameter order.
    pub params: &'static [&'static str],
    pub entries: &'static [(&'static str, &'static str)],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub label: String,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableDiff {
    pub id: String,
    pub algebra: String,
    pub family: String,
    pub mismatches: Vec<Mismatch>,
}

impl TableDiff {
    pub fn is_empty(&self) -> bool {
        self.mismatches.is_empty()
    }
}

use BuiltinKind::{DualGroupAlg, GroupAlg, Nichols, Taft};
use TableKind::{Action, Coaction};

static TABLES: &[ExampleTable] = &[
    ExampleTable {
        id: "sweedler-action",
        algebra: Taft,
        n: 2,
        kind: Action,
        family: "lambda_alpha",
        root: "q",
        params: &["alpha"],
        entries: &[("1", "1"), ("x", "alpha"), ("gx", "alpha")],
    },
    ExampleTable {
        id: "sweedler-coaction",
        algebra: Taft,
        n: 2,
        kind: Coaction,
        family: "z_alpha",
        root: "q",
        params: &["alpha"],
        entries: &[("1", "1/2"), ("g", "1/2"), ("gx", "-alpha")],
    },
    ExampleTable {
        id: "taft3-action",
        algebra: Taft,
        n: 3,
        kind: Action,
        family: "lambda_alpha",
        root: "q",
        params: &["alpha"],
        entries: &[
            ("1", "1"),
            ("x", "alpha"),
            ("g^2x", "-q alpha"),
            ("x^2", "alpha^2"),
            ("gx^2", "alpha^2"),
            ("g^2x^2", "alpha^2"),
        ],
    },
    ExampleTable {
        id: "taft4-action-subgroup",
        algebra: Taft,
        n: 4,
        kind: Action,
        family: "lambda0[<g^2>]",
        root: "w",
        params: &[],
        entries: &[("1", "1"), ("g^2", "1")],
    },
    ExampleTable {
        id: "taft4-action",
        algebra: Taft,
        n: 4,
        kind: Action,
        family: "lambda_alpha",
        root: "w",
        params: &["beta"],
        entries: &[
            ("1", "1"),
            ("x", "beta"),
            ("g^3x", "-w beta"),
            ("x^2", "beta^2"),
            ("g^2x^2", "-w beta^2"),
            ("g^3x^2", "(1 - w) beta^2"),
            ("x^3", "beta^3"),
            ("gx^3", "beta^3"),
            ("g^2x^3", "beta^3"),
            ("g^3x^3", "beta^3"),
        ],
    },
    ExampleTable {
        id: "taft3-coaction",
        algebra: Taft,
        n: 3,
        kind: Coaction,
        family: "z_alpha",
        root: "q",
        params: &["alpha"],
        entries: &[
            ("1", "1/3"),
            ("g", "1/3"),
            ("g^2", "1/3"),
            ("gx", "(q - 1)/3 alpha"),
            ("g^2x", "(q^2 - 1)/3 alpha"),
            ("gx^2", "-3q/3 alpha^2"),
        ],
    },
    ExampleTable {
        id: "taft4-coaction-subgroup",
        algebra: Taft,
        n: 4,
        kind: Coaction,
        family: "z[<g^2>]",
        root: "w",
        params: &[],
        entries: &[("1", "1/2"), ("g^2", "1/2")],
    },
    ExampleTable {
        id: "taft4-coaction",
        algebra: Taft,
        n: 4,
        kind: Coaction,
        family: "z_alpha",
        root: "w",
        params: &["beta"],
        entries: &[
            ("1", "1/4"),
            ("g", "1/4"),
            ("g^2", "1/4"),
            ("g^3", "1/4"),
            ("gx", "w(1 + w)/4 beta"),
            ("g^2x", "-2/4 beta"),
            ("g^3x", "-(1 + w)/4 beta"),
            ("gx^2", "-2w/4 beta^2"),
            ("g^2x^2", "2/4 beta^2"),
            ("gx^3", "2(1 + w)/4 beta^3"),
        ],
    },
    ExampleTable {
        id: "nichols2-action",
        algebra: Nichols,
        n: 2,
        kind: Action,
        family: "lambda_alpha",
        root: "z",
        params: &["alpha"],
        entries: &[("1", "1"), ("x1", "alpha"), ("gx1", "alpha")],
    },
    ExampleTable {
        id: "nichols3-action",
        algebra: Nichols,
        n: 3,
        kind: Action,
        family: "lambda_alpha",
        root: "z",
        params: &["alpha1", "alpha2"],
        entries: &[
            ("1", "1"),
            ("x1", "alpha1"),
            ("gx1", "alpha1"),
            ("x2", "alpha2"),
            ("gx2", "alpha2"),
        ],
    },
    ExampleTable {
        id: "nichols4-action",
        algebra: Nichols,
        n: 4,
        kind: Action,
        family: "lambda_alpha",
        root: "z",
        params: &["beta1", "beta2", "beta3"],
        entries: &[
            ("1", "1"),
            ("x1", "beta1"),
            ("gx1", "beta1"),
            ("x2", "beta2"),
            ("gx2", "beta2"),
            ("x3", "beta3"),
            ("gx3", "beta3"),
        ],
    },
    ExampleTable {
        id: "nichols2-coaction",
        algebra: Nichols,
        n: 2,
        kind: Coaction,
        family: "z_alpha",
        root: "z",
        params: &["alpha"],
        entries: &[("1", "1/2"), ("g", "1/2"), ("gx1", "-alpha")],
    },
    ExampleTable {
        id: "nichols3-coaction",
        algebra: Nichols,
        n: 3,
        kind: Coaction,
        family: "z_alpha",
        root: "z",
        params: &["beta1", "beta2"],
        entries: &[("1", "1/2"), ("g", "1/2"), ("gx1", "-beta1"), ("gx2", "-beta2")],
    },
    ExampleTable {
        id: "nichols4-coaction",
        algebra: Nichols,
        n: 4,
        kind: Coaction,
        family: "z_alpha",
        root: "z",
        params: &["gamma1", "gamma2", "gamma3"],
        entries: &[
            ("1", "1/2"),
            ("g", "1/2"),
            ("gx1", "-gamma1"),
            ("gx2", "-gamma2"),
            ("gx3", "-gamma3"),
        ],
    },
    ExampleTable {
        id: "cyclic6-action",
        algebra: GroupAlg,
        n: 6,
        kind: Action,
        family: "lambda[<g^2>]",
        root: "z",
        params: &[],
        entries: &[("1", "1"), ("g^2", "1"), ("g^4", "1")],
    },
    ExampleTable {
        id: "cyclic6-coaction",
        algebra: GroupAlg,
        n: 6,
        kind: Coaction,
        family: "z[<g^2>]",
        root: "z",
        params: &[],
        entries: &[("1", "1/3"), ("g^2", "1/3"), ("g^4", "1/3")],
    },
    ExampleTable {
        id: "dual-cyclic4-action",
        algebra: DualGroupAlg,
        n: 4,
        kind: Action,
        family: "lambda*[<g^2>]",
        root: "z",
        params: &[],
        entries: &[("1*", "1/2"), ("(g^2)*", "1/2")],
    },
];

pub fn example_tables() -> &'static [ExampleTable] {
    TABLES
}

/// Tables for one algebra and kind.
pub fn tables_for(algebra: BuiltinKind, n: i64, kind: TableKind) -> Vec<&'static ExampleTable> {
    TABLES
        .iter()
        .filter(|t| t.algebra == algebra && t.n == n && t.kind == kind)
        .collect()
}

/// Compares a table with the matching constructor output, coefficient by
/// coefficient.
pub fn check_table(t: &ExampleTable) -> Result<TableDiff> {
    let h = t.algebra.build(t.n)?;
    let order = h.order();
    let (params, coords): (Vec<String>, Vec<ParamPoly>) = match t.kind {
        TableKind::Action => {
            let f = builtin_action_families(&h)?
                .into_iter()
                .find(|f| f.name == t.family)
                .ok_or_else(|| Error::PreconditionViolated(format!("no family {} on {}", t.family, h.name())))?;
            (f.params, f.functional.into_coords())
        }
        TableKind::Coaction => {
            let f = builtin_coaction_families(&h)?
                .into_iter()
                .find(|f| f.name == t.family)
                .ok_or_else(|| Error::PreconditionViolated(format!("no family {} on {}", t.family, h.name())))?;
            (f.params, f.element.into_coords())
        }
    };
    if params.len() != t.params.len() {
        return Err(Error::PreconditionViolated(format!(
            "table {} names {} parameters, family has {}",
            t.id,
            t.params.len(),
            params.len()
        )));
    }
    let rename: BTreeMap<String, String> = params
        .iter()
        .zip(t.params)
        .map(|(a, b)| (a.clone(), b.to_string()))
        .collect();
    let mut expected = vec![ParamPoly::zero(order); h.dim()];
    for (label, text) in t.entries {
        let i = h
            .index_of(label)
            .ok_or_else(|| Error::Malformed(format!("table {}: unknown basis label {label}", t.id)))?;
        expected[i] = parse_expr_with_root(text, order, t.root)?;
    }
    let mismatches = coords
        .iter()
        .zip(&expected)
        .enumerate()
        .filter_map(|(i, (got, want))| {
            let got = got.rename(&rename);
            (got != *want).then(|| Mismatch {
                label: h.label(i).to_string(),
                expected: want.fmt_with(t.root),
                got: got.fmt_with(t.root),
            })
        })
        .collect();
    Ok(TableDiff {
        id: t.id.to_string(),
        algebra: h.name().to_string(),
        family: t.family.to_string(),
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_table_matches() {
        for t in example_tables() {
            let d = check_table(t).unwrap();
            assert!(d.is_empty(), "{}: {:?}", t.id, d.mismatches);
        }
    }

    #[test]
    fn a_wrong_entry_is_reported() {
        let mut t = tables_for(Taft, 4, Action)
            .into_iter()
            .find(|t| t.family == "lambda_alpha")
            .unwrap()
            .clone();
        let mut entries = t.entries.to_vec();
        entries[5] = ("g^3x^2", "(1 + w) beta^2");
        t.entries = Box::leak(entries.into_boxed_slice());
        let d = check_table(&t).unwrap();
        assert_eq!(d.mismatches.len(), 1);
        assert_eq!(d.mismatches[0].label, "g^3x^2");
    }
}
