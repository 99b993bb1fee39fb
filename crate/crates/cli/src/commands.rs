use std::fmt::Write as _;
use std::path::Path;
use std::sync::Arc;
use std::time::Instant;

use partial_hopf::algebras::BuiltinKind;
use partial_hopf::classify::{classify_with, family_count, ClassifyOptions, LeafOutcome};
use partial_hopf::duality::{builtin_transport_checks, check_character_sum, nichols_psi, taft_phi, taft_psi};
use partial_hopf::hopf::{parts_from_json, to_json, validate_all, AxiomReport, HopfData, HopfJson};
use partial_hopf::partial::{
    builtin_action_families, builtin_coaction_families, grouplike_rules, special_value_checks,
    verify_convolution_idempotent, verify_partial_action, verify_partial_coaction, verify_symmetric_action,
    verify_symmetric_coaction,
};
use partial_hopf::qcomb::{identity_sweep, pascal_sweep, standard_q_values, Identity, SweepRanges, Verdict};
use partial_hopf::tables::{check_table, tables_for, TableKind};
use partial_hopf::Error;
use serde_json::{json, Value};

use crate::AlgebraArgs;

pub struct Report {
    pub ok: bool,
    pub text: String,
    pub json: Value,
}

pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Validation(_) | Error::BranchLimitExceeded { .. } => 1,
            _ => 2,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> CliError {
    CliError {
        code: 2,
        message: message.into(),
    }
}

type CliResult = Result<Report, CliError>;

struct Loaded {
    builtin: Option<(BuiltinKind, i64)>,
    algebra: Arc<HopfData>,
}

impl Loaded {
    /// Symbol printed for the root of unity.
    fn symbol(&self) -> &'static str {
        match self.builtin {
            Some((BuiltinKind::Taft, _)) => "q",
            _ => "z",
        }
    }

    fn require_builtin(&self, what: &str) -> Result<(BuiltinKind, i64), CliError> {
        self.builtin
            .ok_or_else(|| usage(format!("{what} needs a built-in algebra, not an imported file")))
    }
}

fn read_json(path: &Path) -> Result<HopfJson, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load_file(path: &Path) -> Result<Arc<HopfData>, CliError> {
    let parts = parts_from_json(&read_json(path)?)?;
    Ok(Arc::new(HopfData::from_parts(parts)?))
}

fn load(a: &AlgebraArgs) -> Result<Loaded, CliError> {
    if a.kind == "file" {
        let path = a.arg.as_deref().ok_or_else(|| usage("`file` needs a path"))?;
        return Ok(Loaded {
            builtin: None,
            algebra: load_file(Path::new(path))?,
        });
    }
    let kind = BuiltinKind::parse(&a.kind).ok_or_else(|| {
        usage(format!(
            "unknown algebra `{}` (taft, nichols, groupalg, dualgroupalg, file)",
            a.kind
        ))
    })?;
    let n = match (&a.arg, a.n) {
        (Some(s), None) => s
            .parse::<i64>()
            .map_err(|_| usage(format!("`{s}` is not an integer")))?,
        (None, Some(n)) => n,
        (Some(s), Some(n)) if s.parse::<i64>().ok() == Some(n) => n,
        (Some(_), Some(_)) => return Err(usage("conflicting orders given")),
        (None, None) => return Err(usage("missing order n")),
    };
    Ok(Loaded {
        builtin: Some((kind, n)),
        algebra: kind.build(n)?,
    })
}

fn status(r: &AxiomReport) -> String {
    if r.passed() {
        format!("ok ({} checks)", r.checked)
    } else {
        format!("FAILED ({} of {} checks)", r.failures.len(), r.checked)
    }
}

fn report_json(r: &AxiomReport) -> Value {
    json!({ "passed": r.passed(), "checked": r.checked, "failures": r.failures })
}

fn table_text(out: &mut String, rows: &[(String, String)]) {
    let width = rows.iter().map(|(l, _)| l.chars().count()).max().unwrap_or(0);
    for (label, value) in rows {
        let pad = width - label.chars().count();
        let _ = writeln!(out, "    {label}{}  {value}", " ".repeat(pad));
    }
}

fn rows_json(rows: &[(String, String)]) -> Value {
    Value::Array(rows.iter().map(|(l, v)| json!([l, v])).collect())
}

pub fn validate(a: &AlgebraArgs) -> CliResult {
    let loaded = load(a)?;
    let h = &loaded.algebra;
    let start = Instant::now();
    let r = validate_all(h);
    let secs = start.elapsed().as_secs_f64();
    let text = format!("{} (dim {}): {r}\nruntime {secs:.3} s\n", h.name(), h.dim());
    Ok(Report {
        ok: r.passed(),
        text,
        json: json!({
            "algebra": h.name(),
            "dim": h.dim(),
            "report": report_json(&r),
            "seconds": secs,
        }),
    })
}

fn example_diffs(kind: BuiltinKind, n: i64, table: TableKind, text: &mut String) -> Result<(bool, Value), CliError> {
    let mut ok = true;
    let mut out = Vec::new();
    let tables = tables_for(kind, n, table);
    if tables.is_empty() {
        let _ = writeln!(text, "no worked examples for this algebra");
    }
    for t in tables {
        let d = check_table(t)?;
        if d.is_empty() {
            let _ = writeln!(text, "example {}: {} matches", d.id, d.family);
        } else {
            ok = false;
            let _ = writeln!(text, "example {}: {} differs", d.id, d.family);
            for m in &d.mismatches {
                let _ = writeln!(text, "    {}: expected {}, got {}", m.label, m.expected, m.got);
            }
        }
        out.push(serde_json::to_value(&d).expect("json"));
    }
    Ok((ok, Value::Array(out)))
}

pub fn actions(a: &AlgebraArgs, paper_examples: bool) -> CliResult {
    let loaded = load(a)?;
    let (kind, n) = loaded.require_builtin("actions")?;
    let h = &loaded.algebra;
    let sym = loaded.symbol();
    let mut text = format!("partial actions of {} on the base field\n", h.name());
    let mut ok = true;
    let mut fams = Vec::new();
    for f in builtin_action_families(h)? {
        let checks = [
            ("partial", verify_partial_action(&f.functional)),
            ("symmetric", verify_symmetric_action(&f.functional)),
            ("idempotent", verify_convolution_idempotent(&f.functional)),
            ("grouplike rules", grouplike_rules(&f.functional)),
        ];
        let _ = writeln!(text, "\n{}  params: [{}]", f.name, f.params.join(", "));
        for (name, r) in &checks {
            ok &= r.passed();
            let _ = writeln!(text, "  {name}: {}", status(r));
        }
        let rows = f.table(sym);
        table_text(&mut text, &rows);
        fams.push(json!({
            "name": f.name,
            "params": f.params,
            "values": rows_json(&rows),
            "checks": checks.iter().map(|(k, r)| (k.to_string(), report_json(r))).collect::<serde_json::Map<_, _>>(),
        }));
    }
    let mut special = Value::Null;
    if kind == BuiltinKind::Taft {
        let r = special_value_checks(n)?;
        ok &= r.passed();
        let _ = writeln!(text, "\nclosed-form values of lambda_alpha: {}", status(&r));
        special = report_json(&r);
    }
    let mut examples = Value::Null;
    if paper_examples {
        text.push('\n');
        let (eok, v) = example_diffs(kind, n, TableKind::Action, &mut text)?;
        ok &= eok;
        examples = v;
    }
    Ok(Report {
        ok,
        text,
        json: json!({ "algebra": h.name(), "families": fams, "special_values": special, "examples": examples }),
    })
}

pub fn coactions(a: &AlgebraArgs, paper_examples: bool) -> CliResult {
    let loaded = load(a)?;
    let (kind, n) = loaded.require_builtin("coactions")?;
    let h = &loaded.algebra;
    let sym = loaded.symbol();
    let mut text = format!("partial coactions of {} on the base field\n", h.name());
    let mut ok = true;
    let mut fams = Vec::new();
    for f in builtin_coaction_families(h)? {
        let checks = [
            ("partial", verify_partial_coaction(&f.element)),
            ("symmetric", verify_symmetric_coaction(&f.element)),
        ];
        let _ = writeln!(text, "\n{}  params: [{}]", f.name, f.params.join(", "));
        for (name, r) in &checks {
            ok &= r.passed();
            let _ = writeln!(text, "  {name}: {}", status(r));
        }
        let rows = f.table(sym);
        table_text(&mut text, &rows);
        fams.push(json!({
            "name": f.name,
            "params": f.params,
            "coefficients": rows_json(&rows),
            "checks": checks.iter().map(|(k, r)| (k.to_string(), report_json(r))).collect::<serde_json::Map<_, _>>(),
        }));
    }
    let mut examples = Value::Null;
    if paper_examples {
        text.push('\n');
        let (eok, v) = example_diffs(kind, n, TableKind::Coaction, &mut text)?;
        ok &= eok;
        examples = v;
    }
    Ok(Report {
        ok,
        text,
        json: json!({ "algebra": h.name(), "families": fams, "examples": examples }),
    })
}

pub fn classify(a: &AlgebraArgs, branch_limit: usize, shortcuts: bool) -> CliResult {
    let loaded = load(a)?;
    let h = &loaded.algebra;
    if loaded.builtin.is_none() {
        let r = validate_all(h);
        if !r.passed() {
            return Err(CliError {
                code: 1,
                message: format!("{} is not a Hopf algebra: {r}", h.name()),
            });
        }
    }
    let sym = loaded.symbol();
    let start = Instant::now();
    let s = classify_with(
        h,
        &ClassifyOptions {
            branch_limit,
            shortcuts,
        },
    )?;
    let secs = start.elapsed().as_secs_f64();
    let expected = match loaded.builtin {
        Some((BuiltinKind::Taft, n)) => Some(family_count(n)?),
        Some((BuiltinKind::Nichols, _)) => Some(2),
        _ => None,
    };
    let all_known = loaded.builtin.is_none() || s.families.iter().all(|f| f.matches.is_some());
    let ok = s.exhaustive && all_known && expected.is_none_or(|e| e == s.families.len());

    let mut text = format!("classification of partial actions of {} on the base field\n", h.name());
    let _ = writeln!(
        text,
        "group-like cases: {}",
        s.grouplikes
            .branches
            .iter()
            .map(|b| b.label.as_str())
            .collect::<Vec<_>>()
            .join(", ")
    );
    let _ = writeln!(
        text,
        "group-like restriction check: {}",
        if s.grouplikes.verified {
            "only subgroup indicators solve the condition"
        } else {
            "FAILED"
        }
    );
    for (i, f) in s.families.iter().enumerate() {
        let _ = writeln!(
            text,
            "\nfamily {i}: {}  params: [{}]",
            f.matches.as_deref().unwrap_or("(no matching constructor)"),
            f.family.params.join(", ")
        );
        let _ = writeln!(text, "  trail: {}", f.trail.join(" → "));
        if !f.conditions.is_empty() {
            let _ = writeln!(text, "  conditions: {}", f.conditions.join(", "));
        }
        table_text(&mut text, &f.family.table(sym));
    }
    let _ = writeln!(text, "\nbranches:");
    for leaf in &s.leaves {
        let what = match &leaf.outcome {
            LeafOutcome::Solution { family } => format!("family {family}"),
            LeafOutcome::Contradiction { reason } => format!("contradiction: {reason}"),
            LeafOutcome::Stuck { remaining } => format!("STUCK with {} constraints", remaining.len()),
        };
        let _ = writeln!(text, "  {} ⇒ {what}", leaf.trail.join(" → "));
    }
    let _ = writeln!(text, "\n{} families, exhaustive: {}", s.families.len(), s.exhaustive);
    if let Some(e) = expected {
        let _ = writeln!(text, "expected family count: {e}");
    }
    let _ = writeln!(text, "runtime {secs:.3} s");

    let families: Vec<Value> = s
        .families
        .iter()
        .map(|f| {
            json!({
                "name": f.family.name,
                "matches": f.matches,
                "params": f.family.params,
                "branch": f.branch,
                "trail": f.trail,
                "conditions": f.conditions,
                "values": rows_json(&f.family.table(sym)),
            })
        })
        .collect();
    Ok(Report {
        ok,
        text,
        json: json!({
            "algebra": h.name(),
            "grouplikes": s.grouplikes,
            "families": families,
            "leaves": s.leaves,
            "exhaustive": s.exhaustive,
            "expected_families": expected,
            "seconds": secs,
        }),
    })
}

pub fn identities(max_order: u32, max: Option<i64>) -> CliResult {
    if max_order < 2 {
        return Err(usage("--n must be at least 2"));
    }
    let mut ranges = SweepRanges::default();
    if let Some(m) = max {
        if m < 1 {
            return Err(usage("--max must be positive"));
        }
        ranges = ranges.capped(m);
    }
    let start = Instant::now();
    let mut rows = Vec::new();
    let mut failures: Vec<(String, Verdict)> = Vec::new();
    let mut record = |suite: &str, q: &str, vs: Vec<Verdict>| {
        let failed = vs.iter().filter(|v| !v.passed).count();
        rows.push(json!({ "suite": suite, "q": q, "checked": vs.len(), "failed": failed }));
        failures.extend(vs.into_iter().filter(|v| !v.passed).map(|v| (q.to_string(), v)));
    };
    for (label, q) in standard_q_values(max_order) {
        record("pascal", &label, pascal_sweep(&q, &ranges));
        for id in Identity::ALL {
            record(id.name(), &label, identity_sweep(id, &q, &ranges));
        }
    }
    let mut sums = Vec::new();
    for n in 1..=max_order as i64 {
        for k in (1..=n).filter(|k| n % k == 0) {
            sums.push(check_character_sum(n, k, n / k)?);
        }
    }
    record("character_sum", "zeta_n", sums);
    let secs = start.elapsed().as_secs_f64();

    let mut text = String::from("suite                 q          checked  failed\n");
    for r in &rows {
        let _ = writeln!(
            text,
            "{:<21} {:<10} {:>7}  {:>6}",
            r["suite"].as_str().unwrap_or(""),
            r["q"].as_str().unwrap_or(""),
            r["checked"],
            r["failed"]
        );
    }
    for (q, v) in failures.iter().take(20) {
        let _ = writeln!(
            text,
            "FAIL {} {:?} at q = {q}: {} ≠ {}",
            v.name, v.indices, v.lhs, v.rhs
        );
    }
    let total: u64 = rows.iter().map(|r| r["checked"].as_u64().unwrap_or(0)).sum();
    let _ = writeln!(text, "{total} checks, {} failures, runtime {secs:.3} s", failures.len());
    Ok(Report {
        ok: failures.is_empty(),
        text,
        json: json!({
            "suites": rows,
            "failures": failures.iter().map(|(q, v)| json!({ "q": q, "verdict": v })).collect::<Vec<_>>(),
            "seconds": secs,
        }),
    })
}

pub fn duality(a: &AlgebraArgs) -> CliResult {
    let loaded = load(a)?;
    let (kind, n) = loaded.require_builtin("duality")?;
    let h = &loaded.algebra;
    let mut text = format!("self-duality of {}\n", h.name());
    let mut ok = true;
    let mut morphisms = Vec::new();
    let mut note = |text: &mut String, name: &str, r: &AxiomReport, ok: &mut bool| {
        *ok &= r.passed();
        let _ = writeln!(text, "{name}: Hopf morphism {}", status(r));
        morphisms.push(json!({ "name": name, "report": report_json(r) }));
    };
    let identity;
    match kind {
        BuiltinKind::Taft => {
            let psi = taft_psi(n)?;
            let phi = taft_phi(n)?;
            note(&mut text, "psi", &psi.verify(), &mut ok);
            note(&mut text, "phi", &phi.verify(), &mut ok);
            identity = phi.compose(&psi)?.is_identity() && psi.compose(&phi)?.is_identity();
            let _ = writeln!(text, "phi∘psi = id and psi∘phi = id: {identity}");
        }
        BuiltinKind::Nichols => {
            let psi = nichols_psi(n)?;
            note(&mut text, "psi", &psi.verify(), &mut ok);
            let inv = psi.inverse()?;
            identity = inv.compose(&psi)?.is_identity();
            let _ = writeln!(text, "psi invertible, psi⁻¹∘psi = id: {identity}");
        }
        _ => return Err(usage("duality applies to taft and nichols")),
    }
    ok &= identity;
    let checks = builtin_transport_checks(h)?;
    let mut transported = Vec::new();
    for c in &checks {
        ok &= c.matches;
        let _ = writeln!(
            text,
            "\nimage of {} {} {}",
            c.action,
            if c.matches { "equals" } else { "DIFFERS FROM" },
            c.coaction
        );
        table_text(&mut text, &c.transported);
        transported.push(serde_json::to_value(c).expect("json"));
    }
    Ok(Report {
        ok,
        text,
        json: json!({ "algebra": h.name(), "morphisms": morphisms, "inverse_ok": identity, "transport": transported }),
    })
}

pub fn export(a: &AlgebraArgs, out: Option<&Path>) -> CliResult {
    let loaded = load(a)?;
    let value = serde_json::to_value(to_json(&loaded.algebra)).expect("json");
    let pretty = serde_json::to_string_pretty(&value).expect("json");
    match out {
        Some(path) => {
            std::fs::write(path, format!("{pretty}\n")).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            Ok(Report {
                ok: true,
                text: format!("wrote {} to {}\n", loaded.algebra.name(), path.display()),
                json: json!({ "algebra": loaded.algebra.name(), "path": path.display().to_string() }),
            })
        }
        None => Ok(Report {
            ok: true,
            text: format!("{pretty}\n"),
            json: value,
        }),
    }
}

pub fn import(path: &Path) -> CliResult {
    let h = load_file(path)?;
    let r = validate_all(&h);
    Ok(Report {
        ok: r.passed(),
        text: format!(
            "{} (dim {}, scalars in Q(zeta_{})): {r}\n",
            h.name(),
            h.dim(),
            h.order()
        ),
        json: json!({ "algebra": h.name(), "dim": h.dim(), "order": h.order(), "report": report_json(&r) }),
    })
}
