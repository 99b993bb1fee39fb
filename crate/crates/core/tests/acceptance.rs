//! One line per acceptance criterion. Runs without the libtest harness so the
//! lines are always printed; exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use partial_hopf::algebras::BuiltinKind;
use partial_hopf::classify::{classify_base_field_actions, family_count};
use partial_hopf::duality::{builtin_transport_checks, check_character_sum, nichols_psi, taft_phi, taft_psi};
use partial_hopf::hopf::validate_all;
use partial_hopf::partial::{
    builtin_action_families, builtin_coaction_families, grouplike_rules, special_value_checks,
    verify_convolution_idempotent, verify_partial_action, verify_partial_coaction, verify_symmetric_action,
    verify_symmetric_coaction,
};
use partial_hopf::qcomb::{identity_sweep, pascal_sweep, standard_q_values, Identity, SweepRanges};
use partial_hopf::tables::{check_table, example_tables};
use partial_hopf::Result;

type Outcome = Result<(bool, String)>;

/// Name, time budget in seconds, check.
type Criterion = (&'static str, u64, fn() -> Outcome);

fn taft(n: i64) -> std::sync::Arc<partial_hopf::hopf::HopfData> {
    BuiltinKind::Taft.build(n).unwrap()
}

fn nichols(n: i64) -> std::sync::Arc<partial_hopf::hopf::HopfData> {
    BuiltinKind::Nichols.build(n).unwrap()
}

fn hopf_axioms() -> Outcome {
    let mut algebras = Vec::new();
    for n in 2..=8 {
        algebras.push(taft(n));
    }
    for n in 2..=6 {
        algebras.push(nichols(n));
    }
    for n in 1..=12 {
        algebras.push(BuiltinKind::GroupAlg.build(n)?);
        algebras.push(BuiltinKind::DualGroupAlg.build(n)?);
    }
    let mut checks = 0;
    let mut bad = Vec::new();
    for h in &algebras {
        let r = validate_all(h);
        checks += r.checked;
        if !r.passed() {
            bad.push(h.name().to_string());
        }
    }
    Ok((
        bad.is_empty(),
        format!("{} algebras, {checks} checks, failing: {bad:?}", algebras.len()),
    ))
}

fn partial_actions() -> Outcome {
    let mut families = 0;
    let mut bad = Vec::new();
    let hs: Vec<_> = (2..=6).map(taft).chain((2..=5).map(nichols)).collect();
    for h in &hs {
        for f in builtin_action_families(h)? {
            if f.name == "epsilon" {
                continue;
            }
            families += 1;
            if !(verify_partial_action(&f.functional).passed() && verify_symmetric_action(&f.functional).passed()) {
                bad.push(format!("{} {}", h.name(), f.name));
            }
        }
    }
    Ok((bad.is_empty(), format!("{families} families, failing: {bad:?}")))
}

fn partial_coactions() -> Outcome {
    let mut families = 0;
    let mut bad = Vec::new();
    let hs: Vec<_> = (2..=6).map(taft).chain((2..=5).map(nichols)).collect();
    for h in &hs {
        for f in builtin_coaction_families(h)? {
            if f.name == "one" {
                continue;
            }
            families += 1;
            if !(verify_partial_coaction(&f.element).passed() && verify_symmetric_coaction(&f.element).passed()) {
                bad.push(format!("{} {}", h.name(), f.name));
            }
        }
    }
    Ok((bad.is_empty(), format!("{families} families, failing: {bad:?}")))
}

fn self_duality() -> Outcome {
    let mut bad = Vec::new();
    let mut transported = 0;
    for n in 2..=6 {
        let (psi, phi) = (taft_psi(n)?, taft_phi(n)?);
        if !(psi.verify().passed() && phi.verify().passed() && phi.compose(&psi)?.is_identity()) {
            bad.push(format!("taft({n}) morphisms"));
        }
        for c in builtin_transport_checks(&taft(n))? {
            transported += 1;
            if !c.matches {
                bad.push(format!("taft({n}) {} -> {}", c.action, c.coaction));
            }
        }
    }
    for n in 2..=5 {
        let psi = nichols_psi(n)?;
        if !(psi.verify().passed() && psi.inverse()?.compose(&psi)?.is_identity()) {
            bad.push(format!("nichols({n}) morphism"));
        }
        for c in builtin_transport_checks(&nichols(n))? {
            transported += 1;
            if !c.matches {
                bad.push(format!("nichols({n}) {} -> {}", c.action, c.coaction));
            }
        }
    }
    Ok((
        bad.is_empty(),
        format!("{transported} transported families, failing: {bad:?}"),
    ))
}

fn classification() -> Outcome {
    let mut bad = Vec::new();
    let mut counts = Vec::new();
    for n in 2..=8 {
        let s = classify_base_field_actions(&taft(n))?;
        let want = family_count(n)?;
        counts.push(format!("T{n}:{}", s.families.len()));
        if !s.exhaustive || s.families.len() != want || s.families.iter().any(|f| f.matches.is_none()) {
            bad.push(format!("taft({n})"));
        }
    }
    for n in 2..=5 {
        let s = classify_base_field_actions(&nichols(n))?;
        counts.push(format!("H{}:{}", 1 << n, s.families.len()));
        let params_ok = s.families.iter().any(|f| f.family.params.len() == (n - 1) as usize);
        if !s.exhaustive || s.families.len() != 2 || !params_ok || s.families.iter().any(|f| f.matches.is_none()) {
            bad.push(format!("nichols({n})"));
        }
    }
    Ok((bad.is_empty(), format!("{}, failing: {bad:?}", counts.join(" "))))
}

fn worked_examples() -> Outcome {
    let mut bad = Vec::new();
    for t in example_tables() {
        let d = check_table(t)?;
        if !d.is_empty() {
            bad.push(format!("{}: {:?}", d.id, d.mismatches));
        }
    }
    Ok((
        bad.is_empty(),
        format!("{} tables, failing: {bad:?}", example_tables().len()),
    ))
}

fn q_identities() -> Outcome {
    let ranges = SweepRanges::default();
    let mut checks = 0;
    let mut failed = 0;
    for (_, q) in standard_q_values(8) {
        let mut vs = pascal_sweep(&q, &ranges);
        for id in Identity::ALL {
            vs.extend(identity_sweep(id, &q, &ranges));
        }
        checks += vs.len();
        failed += vs.iter().filter(|v| !v.passed).count();
    }
    for n in 1..=8 {
        for k in (1..=n).filter(|k| n % k == 0) {
            checks += 1;
            failed += usize::from(!check_character_sum(n, k, n / k)?.passed);
        }
    }
    Ok((failed == 0, format!("{checks} checks, {failed} failures")))
}

fn cross_checks() -> Outcome {
    let mut bad = Vec::new();
    for n in 2..=8 {
        if !special_value_checks(n)?.passed() {
            bad.push(format!("special values n={n}"));
        }
    }
    let mut hs: Vec<_> = (2..=8).map(taft).chain((2..=5).map(nichols)).collect();
    for n in 2..=8 {
        hs.push(BuiltinKind::GroupAlg.build(n)?);
        hs.push(BuiltinKind::DualGroupAlg.build(n)?);
    }
    let mut families = 0;
    for h in &hs {
        for f in builtin_action_families(h)? {
            families += 1;
            if !grouplike_rules(&f.functional).passed() {
                bad.push(format!("{} {} group-like rules", h.name(), f.name));
            }
            if !verify_convolution_idempotent(&f.functional).passed() {
                bad.push(format!("{} {} idempotence", h.name(), f.name));
            }
        }
    }
    Ok((bad.is_empty(), format!("{families} families, failing: {bad:?}")))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("Hopf axioms of all built-in algebras", 10, hopf_axioms),
        ("partial action families verify", 30, partial_actions),
        ("partial coaction families verify", 30, partial_coactions),
        ("self-duality and transport", 20, self_duality),
        ("classification is complete", 60, classification),
        ("worked example tables", 5, worked_examples),
        ("q-identity sweeps", 60, q_identities),
        ("special values, group-like rules, idempotence", 20, cross_checks),
    ];
    let mut all = true;
    for (i, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(*budget);
        let (ok, detail) = match outcome {
            Ok((ok, detail)) => (ok && in_time, detail),
            Err(e) => (false, format!("error: {e}")),
        };
        all &= ok;
        println!(
            "criterion {}: {} {name} ({detail}; {:.2} s of {budget} s)",
            i + 1,
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64()
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
