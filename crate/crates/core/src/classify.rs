//! Re-derives the partial actions of a Hopf algebra on its base field by
//! constraint propagation over the condition `λ(h)λ(y) = λ(h₁)λ(h₂y)`.
//!
//! The value `λ(b_i)` starts as the unknown `u{i}`. Every basis pair gives a
//! polynomial constraint in the unknowns. Constraints are consumed by three
//! rules:
//!
//! * linear in some unknown with a constant coefficient: solve and substitute;
//! * divisible by an unknown `u`: split into `u = 0` and `u ≠ 0`, the latter
//!   keeping the quotient as a new constraint;
//! * a nonzero constant: contradiction.
//!
//! A branch with nothing left is a solution; the unknowns still present are
//! its free parameters. A branch where no rule applies is reported as stuck
//! and makes the result non-exhaustive.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;

use serde::Serialize;

use crate::arith::{CycNumber, ParamPoly};
use crate::error::{Error, Result};
use crate::hopf::{Functional, HopfData};
use crate::partial::{builtin_action_families, equivalent_up_to_renaming, verify_partial_action, ActionFamily};

pub const DEFAULT_BRANCH_LIMIT: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassifyOptions {
    /// Maximum number of branch leaves before giving up with an error.
    pub branch_limit: usize,
    /// Feed the group-like consequences of the action condition in as extra
    /// constraints up front. They follow from the condition itself, so they
    /// only change the route, never the result.
    pub shortcuts: bool,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            branch_limit: DEFAULT_BRANCH_LIMIT,
            shortcuts: true,
        }
    }
}

fn unknown(i: usize) -> String {
    format!("u{i}")
}

fn unknown_index(name: &str) -> Option<usize> {
    name.strip_prefix('u')?.parse().ok()
}

/// Filtration degree of every basis element: 0 for group-likes, otherwise one
/// more than the largest degree among the other tensor factors of its
/// coproduct. Iterated to a fixed point, capped at the dimension.
pub fn basis_degrees(h: &HopfData) -> Vec<usize> {
    let d = h.dim();
    let mut deg = vec![0usize; d];
    for _ in 0..d {
        let mut changed = false;
        for i in 0..d {
            let terms = h.coproduct(i);
            let grouplike = matches!(terms, [(a, b, c)] if *a == i && *b == i && c.is_one());
            if grouplike {
                continue;
            }
            let inner = terms
                .iter()
                .flat_map(|(a, b, _)| [*a, *b])
                .filter(|&k| k != i)
                .map(|k| deg[k])
                .max()
                .unwrap_or(0);
            let v = (inner + 1).min(d);
            if v != deg[i] {
                deg[i] = v;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    deg
}

#[derive(Clone, Debug)]
struct Constraint {
    /// `None` for `λ(1) = 1` and for shortcut facts.
    pair: Option<(usize, usize)>,
    poly: ParamPoly,
}

/// One substitution performed by the solver.
#[derive(Clone, Debug, Serialize)]
pub struct Derivation {
    pub pair: Option<(usize, usize)>,
    pub basis: usize,
    pub value: String,
}

/// A branch of the search: current values of `λ` in terms of the remaining
/// unknowns, pending constraints, and the decisions that led here.
#[derive(Clone, Debug)]
pub struct SolverState {
    algebra: Arc<HopfData>,
    rank: Vec<(usize, usize)>,
    values: Vec<ParamPoly>,
    pending: Vec<Constraint>,
    nonzero: Vec<(String, ParamPoly)>,
    trail: Vec<String>,
    derivations: Vec<Derivation>,
}

/// Result of running [`propagate`] until it cannot continue on its own.
#[derive(Clone, Debug)]
pub enum Step {
    Solved,
    Contradiction(String),
    Stuck(Vec<String>),
    /// Constraint divisible by the unknown at this basis index.
    Split {
        basis: usize,
        quotient: ParamPoly,
    },
}

impl SolverState {
    /// Fixes the listed values and instantiates the condition on the pairs
    /// accepted by `keep`, ordered by total degree.
    pub fn new(h: &Arc<HopfData>, fixed: &[(usize, CycNumber)], keep: impl Fn(usize, usize) -> bool) -> Self {
        let d = h.dim();
        let order = h.order();
        let deg = basis_degrees(h);
        let rank: Vec<(usize, usize)> = (0..d).map(|i| (deg[i], i)).collect();
        let mut values: Vec<ParamPoly> = (0..d).map(|i| ParamPoly::var(order, &unknown(i))).collect();
        for (i, c) in fixed {
            values[*i] = ParamPoly::constant(c.clone());
        }
        let at = |s: &crate::hopf::Sparse, values: &[ParamPoly]| {
            let mut acc = ParamPoly::zero(order);
            for (k, c) in s {
                acc.add_scaled(c, &values[*k]);
            }
            acc
        };
        let mut pending = vec![Constraint {
            pair: None,
            poly: &at(h.unit(), &values) - &ParamPoly::one(order),
        }];
        let mut pairs: Vec<(usize, usize)> = (0..d)
            .flat_map(|a| (0..d).map(move |b| (a, b)))
            .filter(|&(a, b)| keep(a, b))
            .collect();
        pairs.sort_by_key(|&(a, b)| (deg[a] + deg[b], a, b));
        for (a, y) in pairs {
            let mut rhs = ParamPoly::zero(order);
            for (p, q, c) in h.coproduct(a) {
                let shifted = at(h.product(*q, y), &values);
                if !shifted.is_zero() && !values[*p].is_zero() {
                    rhs.add_scaled(c, &(&values[*p] * &shifted));
                }
            }
            let poly = &(&values[a] * &values[y]) - &rhs;
            if !poly.is_zero() {
                pending.push(Constraint {
                    pair: Some((a, y)),
                    poly,
                });
            }
        }
        SolverState {
            algebra: Arc::clone(h),
            rank,
            values,
            pending,
            nonzero: Vec::new(),
            trail: Vec::new(),
            derivations: Vec::new(),
        }
    }

    pub fn algebra(&self) -> &Arc<HopfData> {
        &self.algebra
    }

    /// Current value of `λ(b_i)`, in terms of unknowns `u{k}`.
    pub fn value(&self, i: usize) -> &ParamPoly {
        &self.values[i]
    }

    pub fn trail(&self) -> &[String] {
        &self.trail
    }

    pub fn derivations(&self) -> &[Derivation] {
        &self.derivations
    }

    pub fn pending_len(&self) -> usize {
        self.pending.len()
    }

    /// Unknowns still present in the values, lowest rank first.
    pub fn free_unknowns(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .values
            .iter()
            .flat_map(ParamPoly::vars)
            .filter_map(|v| unknown_index(&v))
            .collect();
        out.sort_by_key(|&i| self.rank[i]);
        out.dedup();
        out
    }

    fn label(&self, i: usize) -> &str {
        self.algebra.label(i)
    }

    fn render(&self, p: &ParamPoly) -> String {
        let names: BTreeMap<String, String> = p
            .vars()
            .into_iter()
            .filter_map(|v| unknown_index(&v).map(|i| (v, format!("λ({})", self.label(i)))))
            .collect();
        // λ(...) labels are not valid identifiers, so render by text replacement
        let mut s = p.fmt_with("z");
        let mut keys: Vec<&String> = names.keys().collect();
        keys.sort_by_key(|k| std::cmp::Reverse(k.len()));
        for k in keys {
            s = s.replace(k.as_str(), &names[k]);
        }
        s
    }

    fn substitute(&mut self, i: usize, value: &ParamPoly, pair: Option<(usize, usize)>) {
        let name = unknown(i);
        for v in &mut self.values {
            if v.mentions(&name) {
                *v = v.substitute(&name, value);
            }
        }
        for c in &mut self.pending {
            if c.poly.mentions(&name) {
                c.poly = c.poly.substitute(&name, value);
            }
        }
        for (_, p) in &mut self.nonzero {
            if p.mentions(&name) {
                *p = p.substitute(&name, value);
            }
        }
        self.derivations.push(Derivation {
            pair,
            basis: i,
            value: self.render(value),
        });
    }

    fn simplify(&mut self) -> Option<String> {
        self.pending.retain(|c| !c.poly.is_zero());
        if let Some(c) = self.pending.iter().find(|c| c.poly.is_constant()) {
            let at = match c.pair {
                Some((a, y)) => format!("pair ({}, {})", self.label(a), self.label(y)),
                None => "normalization".into(),
            };
            return Some(format!("{at} reduces to 0 = {}", -&c.poly));
        }
        if let Some((label, _)) = self.nonzero.iter().find(|(_, p)| p.is_zero()) {
            return Some(format!("{label} is forced to 0"));
        }
        self.nonzero.retain(|(_, p)| !p.is_constant());
        None
    }

    fn add_fact(&mut self, poly: ParamPoly) -> bool {
        if poly.is_zero() || self.pending.iter().any(|c| c.poly == poly) {
            return false;
        }
        self.pending.insert(0, Constraint { pair: None, poly });
        true
    }

    /// `λ(g) = 1 ⇒ λ(gu) = λ(u)`; `λ(g) = λ(t) ⇒ λ(x) = 0` for a
    /// `(g, t)`-primitive `x`; `λ(x) = 0, λ(t) = 1 ⇒ λ(xu) = 0`.
    fn shortcut_facts(&mut self) -> bool {
        let h = Arc::clone(&self.algebra);
        let order = h.order();
        let one = ParamPoly::one(order);
        let mut facts = Vec::new();
        if let Some(gs) = h.grouplike_indices() {
            for g in gs {
                if self.values[g] != one {
                    continue;
                }
                for u in 0..h.dim() {
                    let gu = h.product(g, u);
                    let mut v = ParamPoly::zero(order);
                    for (k, c) in gu {
                        v.add_scaled(c, &self.values[*k]);
                    }
                    facts.push(&v - &self.values[u]);
                }
            }
        }
        for &(x, g, t) in h.skew_primitives() {
            if self.values[g] == self.values[t] {
                facts.push(self.values[x].clone());
            }
            if self.values[x].is_zero() && self.values[t] == one {
                for u in 0..h.dim() {
                    let mut v = ParamPoly::zero(order);
                    for (k, c) in h.product(x, u) {
                        v.add_scaled(c, &self.values[*k]);
                    }
                    facts.push(v);
                }
            }
        }
        let mut added = false;
        for f in facts {
            added |= self.add_fact(f);
        }
        added
    }

    fn solve_linear(&mut self) -> bool {
        for idx in 0..self.pending.len() {
            let poly = &self.pending[idx].poly;
            let mut vars: Vec<usize> = poly.vars().iter().filter_map(|v| unknown_index(v)).collect();
            vars.sort_by_key(|&i| std::cmp::Reverse(self.rank[i]));
            for u in vars {
                let name = unknown(u);
                if poly.degree_in(&name) != 1 {
                    continue;
                }
                let Some(lead) = poly.coefficient_in(&name, 1).constant_value() else {
                    continue;
                };
                let inv = lead.inv().expect("nonzero coefficient");
                let value = (-&poly.coefficient_in(&name, 0)).scale(&inv);
                let pair = self.pending[idx].pair;
                self.substitute(u, &value, pair);
                return true;
            }
        }
        false
    }

    fn find_split(&self) -> Option<(usize, usize, ParamPoly)> {
        for (idx, c) in self.pending.iter().enumerate() {
            let mut vars: Vec<usize> = c.poly.vars().iter().filter_map(|v| unknown_index(v)).collect();
            vars.sort_by_key(|&i| self.rank[i]);
            for u in vars {
                let name = unknown(u);
                if !c.poly.coefficient_in(&name, 0).is_zero() {
                    continue;
                }
                let var = ParamPoly::var(c.poly.order(), &name);
                let mut quotient = ParamPoly::zero(c.poly.order());
                for k in (1..=c.poly.degree_in(&name)).rev() {
                    quotient = &(&quotient * &var) + &c.poly.coefficient_in(&name, k);
                }
                return Some((idx, u, quotient));
            }
        }
        None
    }

    fn known_nonzero(&self, i: usize) -> bool {
        let var = ParamPoly::var(self.algebra.order(), &unknown(i));
        self.nonzero.iter().any(|(_, p)| *p == var)
    }

    /// `λ(b_i) = 0` branch.
    fn assume_zero(mut self, i: usize) -> Self {
        self.trail.push(format!("λ({}) = 0", self.label(i)));
        let zero = ParamPoly::zero(self.algebra.order());
        self.substitute(i, &zero, None);
        self
    }

    /// `λ(b_i) ≠ 0` branch, keeping the cofactor as a constraint.
    fn assume_nonzero(mut self, i: usize, quotient: ParamPoly) -> Self {
        let label = format!("λ({})", self.label(i));
        self.trail.push(format!("{label} ≠ 0"));
        let var = ParamPoly::var(self.algebra.order(), &unknown(i));
        self.nonzero.push((label, var));
        self.pending.insert(
            0,
            Constraint {
                pair: None,
                poly: quotient,
            },
        );
        self
    }
}

/// Applies the rules until the branch is solved, contradicted, stuck, or
/// needs a case split.
pub fn propagate(state: &mut SolverState, opts: &ClassifyOptions) -> Step {
    loop {
        if let Some(reason) = state.simplify() {
            return Step::Contradiction(reason);
        }
        if state.pending.is_empty() {
            return Step::Solved;
        }
        if opts.shortcuts && state.shortcut_facts() {
            continue;
        }
        if state.solve_linear() {
            continue;
        }
        if let Some((idx, basis, quotient)) = state.find_split() {
            if state.known_nonzero(basis) {
                state.pending[idx].poly = quotient;
                continue;
            }
            return Step::Split { basis, quotient };
        }
        return Step::Stuck(
            state
                .pending
                .iter()
                .map(|c| format!("{} = 0", state.render(&c.poly)))
                .collect(),
        );
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LeafOutcome {
    Solution { family: usize },
    Contradiction { reason: String },
    Stuck { remaining: Vec<String> },
}

#[derive(Clone, Debug, Serialize)]
pub struct Leaf {
    pub trail: Vec<String>,
    pub outcome: LeafOutcome,
}

enum RawLeaf {
    Solved(SolverState),
    Dead(Vec<String>, LeafOutcome),
}

fn explore(mut state: SolverState, opts: &ClassifyOptions, leaves: &AtomicUsize) -> Result<Vec<RawLeaf>> {
    match propagate(&mut state, opts) {
        Step::Solved => Ok(vec![RawLeaf::Solved(state)]),
        Step::Contradiction(reason) => Ok(vec![RawLeaf::Dead(state.trail, LeafOutcome::Contradiction { reason })]),
        Step::Stuck(remaining) => Ok(vec![RawLeaf::Dead(state.trail, LeafOutcome::Stuck { remaining })]),
        Step::Split { basis, quotient } => {
            if leaves.fetch_add(1, Ordering::SeqCst) + 1 > opts.branch_limit {
                return Err(Error::BranchLimitExceeded {
                    limit: opts.branch_limit,
                });
            }
            let other = state.clone().assume_nonzero(basis, quotient);
            let zero = state.assume_zero(basis);
            let (a, b) = rayon::join(|| explore(zero, opts, leaves), || explore(other, opts, leaves));
            let mut out = a?;
            out.extend(b?);
            Ok(out)
        }
    }
}

/// One case of the restriction of `λ` to the group-likes.
#[derive(Clone, Debug, Serialize)]
pub struct GroupBranch {
    pub label: String,
    /// Basis indices of the subgroup; `λ` is 1 there and 0 on the other
    /// group-likes.
    pub subgroup: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GrouplikeBranches {
    /// `generator^i` for `i = 0..|G|`, or empty when the group-likes are not
    /// basis elements.
    pub elements: Vec<usize>,
    pub branches: Vec<GroupBranch>,
    /// The condition restricted to group-likes has exactly these solutions.
    pub verified: bool,
    /// Case splits and outcomes of that check.
    pub chain: Vec<Leaf>,
}

fn cyclic_elements(h: &HopfData) -> Result<Option<Vec<usize>>> {
    let Some(gs) = h.grouplike_indices() else {
        return Ok(None);
    };
    if gs.is_empty() {
        return Ok(None);
    }
    let unit = h
        .unit_index()
        .ok_or_else(|| Error::NonCyclicGrouplikes("unit is not a basis element".into()))?;
    let set: std::collections::BTreeSet<usize> = gs.iter().copied().collect();
    for &c in &gs {
        let mut powers = vec![unit];
        let mut cur = unit;
        loop {
            cur = match h.product(c, cur).as_slice() {
                [(k, x)] if x.is_one() && set.contains(k) => *k,
                _ => {
                    return Err(Error::NonCyclicGrouplikes(format!(
                        "{}·{} is not a declared group-like",
                        h.label(c),
                        h.label(cur)
                    )))
                }
            };
            if cur == unit || powers.len() > set.len() {
                break;
            }
            powers.push(cur);
        }
        if powers.len() == set.len() {
            return Ok(Some(powers));
        }
    }
    Err(Error::NonCyclicGrouplikes(format!(
        "no generator among {} group-likes",
        gs.len()
    )))
}

/// Splits on the subgroup `N` where `λ` restricted to the group-likes is 1,
/// one case per divisor of `|G|` in decreasing subgroup order, and checks by
/// solving the restricted condition that no other restriction exists.
pub fn grouplike_branches(h: &Arc<HopfData>) -> Result<GrouplikeBranches> {
    let Some(elements) = cyclic_elements(h)? else {
        return Ok(GrouplikeBranches {
            elements: vec![],
            branches: vec![GroupBranch {
                label: "no basis group-likes".into(),
                subgroup: vec![],
            }],
            verified: true,
            chain: vec![],
        });
    };
    let m = elements.len();
    let branches: Vec<GroupBranch> = (1..=m)
        .filter(|k| m % k == 0)
        .map(|k| {
            let label = if k == m {
                "N = {1}".to_string()
            } else {
                format!("N = <{}>", h.label(elements[k]))
            };
            GroupBranch {
                label,
                subgroup: (0..m).step_by(k).map(|i| elements[i]).collect(),
            }
        })
        .collect();

    let set: std::collections::BTreeSet<usize> = elements.iter().copied().collect();
    let state = SolverState::new(h, &[], |a, b| set.contains(&a) && set.contains(&b));
    let opts = ClassifyOptions {
        branch_limit: DEFAULT_BRANCH_LIMIT.max(4 * m),
        shortcuts: false,
    };
    let raw = explore(state, &opts, &AtomicUsize::new(1))?;
    let mut found: Vec<Vec<usize>> = Vec::new();
    let mut chain = Vec::new();
    let mut ok = true;
    for leaf in raw {
        match leaf {
            RawLeaf::Solved(s) => {
                let mut sub = Vec::new();
                for &g in &elements {
                    match s.values[g].constant_value() {
                        Some(c) if c.is_one() => sub.push(g),
                        Some(c) if c.is_zero() => {}
                        _ => ok = false,
                    }
                }
                sub.sort_unstable();
                chain.push(Leaf {
                    trail: s.trail.clone(),
                    outcome: LeafOutcome::Solution { family: found.len() },
                });
                found.push(sub);
            }
            RawLeaf::Dead(trail, outcome) => {
                if matches!(outcome, LeafOutcome::Stuck { .. }) {
                    ok = false;
                }
                chain.push(Leaf { trail, outcome });
            }
        }
    }
    let mut expected: Vec<Vec<usize>> = branches
        .iter()
        .map(|b| {
            let mut v = b.subgroup.clone();
            v.sort_unstable();
            v
        })
        .collect();
    expected.sort();
    found.sort();
    Ok(GrouplikeBranches {
        elements,
        branches,
        verified: ok && found == expected,
        chain,
    })
}

#[derive(Clone, Debug)]
pub struct ClassifiedFamily {
    pub family: ActionFamily,
    /// Group-like case this family came from.
    pub branch: String,
    pub trail: Vec<String>,
    /// Parameters that must be nonzero for this family.
    pub conditions: Vec<String>,
    /// Name of the constructor output it equals, when there is one.
    pub matches: Option<String>,
}

#[derive(Clone, Debug)]
pub struct SolutionSet {
    pub algebra: String,
    pub grouplikes: GrouplikeBranches,
    pub families: Vec<ClassifiedFamily>,
    pub leaves: Vec<Leaf>,
    /// No branch ended stuck.
    pub exhaustive: bool,
}

fn param_names(k: usize) -> Vec<String> {
    if k == 1 {
        vec!["alpha".into()]
    } else {
        (1..=k).map(|i| format!("alpha{i}")).collect()
    }
}

fn finish(state: &SolverState) -> (Vec<String>, Vec<ParamPoly>, Vec<String>) {
    let free = state.free_unknowns();
    let names = param_names(free.len());
    let order = state.algebra.order();
    let map: BTreeMap<String, ParamPoly> = free
        .iter()
        .zip(&names)
        .map(|(&i, n)| (unknown(i), ParamPoly::var(order, n)))
        .collect();
    let coords = state.values.iter().map(|v| v.substitute_all(&map)).collect();
    let conditions = state
        .nonzero
        .iter()
        .map(|(_, p)| format!("{} ≠ 0", p.substitute_all(&map)))
        .collect();
    (names, coords, conditions)
}

/// Every partial action of `h` on the base field, by group-like case split
/// and propagation.
pub fn classify_base_field_actions(h: &Arc<HopfData>) -> Result<SolutionSet> {
    classify_with(h, &ClassifyOptions::default())
}

pub fn classify_with(h: &Arc<HopfData>, opts: &ClassifyOptions) -> Result<SolutionSet> {
    use rayon::prelude::*;
    let gb = grouplike_branches(h)?;
    let leaves_used = AtomicUsize::new(gb.branches.len());
    if gb.branches.len() > opts.branch_limit {
        return Err(Error::BranchLimitExceeded {
            limit: opts.branch_limit,
        });
    }
    let one = CycNumber::one(h.order());
    let zero = CycNumber::zero(h.order());
    let per_branch: Vec<Result<Vec<RawLeaf>>> = gb
        .branches
        .par_iter()
        .map(|b| {
            let fixed: Vec<(usize, CycNumber)> = gb
                .elements
                .iter()
                .map(|&g| {
                    (
                        g,
                        if b.subgroup.contains(&g) {
                            one.clone()
                        } else {
                            zero.clone()
                        },
                    )
                })
                .collect();
            let mut state = SolverState::new(h, &fixed, |_, _| true);
            state.trail.push(b.label.clone());
            explore(state, opts, &leaves_used)
        })
        .collect();

    let known = builtin_action_families(h).ok();
    let mut families = Vec::new();
    let mut leaves = Vec::new();
    let mut exhaustive = true;
    for (b, raw) in gb.branches.iter().zip(per_branch) {
        for leaf in raw? {
            match leaf {
                RawLeaf::Solved(s) => {
                    let (params, coords, conditions) = finish(&s);
                    let functional = Functional::from_coords(h, coords)?;
                    let report = verify_partial_action(&functional);
                    if !report.passed() {
                        return Err(Error::Validation(format!(
                            "solver output on branch {:?} is not a partial action: {report}",
                            s.trail
                        )));
                    }
                    let matches = known.as_ref().and_then(|fams| {
                        fams.iter()
                            .find(|f| {
                                equivalent_up_to_renaming(
                                    &f.params,
                                    f.functional.coords(),
                                    &params,
                                    functional.coords(),
                                )
                            })
                            .map(|f| f.name.clone())
                    });
                    let name = matches.clone().unwrap_or_else(|| format!("family{}", families.len()));
                    leaves.push(Leaf {
                        trail: s.trail.clone(),
                        outcome: LeafOutcome::Solution { family: families.len() },
                    });
                    families.push(ClassifiedFamily {
                        family: ActionFamily {
                            name,
                            params,
                            functional,
                        },
                        branch: b.label.clone(),
                        trail: s.trail,
                        conditions,
                        matches,
                    });
                }
                RawLeaf::Dead(trail, outcome) => {
                    if matches!(outcome, LeafOutcome::Stuck { .. }) {
                        exhaustive = false;
                    }
                    leaves.push(Leaf { trail, outcome });
                }
            }
        }
    }
    Ok(SolutionSet {
        algebra: h.name().to_string(),
        grouplikes: gb,
        families,
        leaves,
        exhaustive,
    })
}

/// Number of partial-action families of `Tₙ(q)`: the number of divisors of
/// `n`, i.e. `(γ₁+1)⋯(γ_k+1)` for `n = p₁^γ₁⋯p_k^γ_k`.
pub fn family_count(n: i64) -> Result<usize> {
    if n < 2 {
        return Err(Error::InvalidOrder {
            what: "taft",
            n,
            min: 2,
        });
    }
    let mut m = n;
    let mut count = 1;
    let mut p = 2;
    while p * p <= m {
        let mut e = 0;
        while m % p == 0 {
            m /= p;
            e += 1;
        }
        count *= e + 1;
        p += 1;
    }
    if m > 1 {
        count *= 2;
    }
    Ok(count)
}
