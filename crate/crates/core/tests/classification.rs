use std::sync::Arc;

use partial_hopf::algebras::{dual_group_algebra_cyclic, nichols, taft};
use partial_hopf::classify::{classify_base_field_actions, family_count, LeafOutcome};
use partial_hopf::partial::builtin_action_families;

#[test]
fn taft_classification_matches_divisor_count() {
    for n in 2..=8 {
        let h = Arc::new(taft(n).unwrap());
        let s = classify_base_field_actions(&h).unwrap();
        assert!(s.exhaustive, "taft({n}) not exhaustive");
        assert_eq!(s.families.len(), family_count(n).unwrap(), "taft({n})");
        let expected: Vec<String> = builtin_action_families(&h)
            .unwrap()
            .into_iter()
            .map(|f| f.name)
            .collect();
        let got: Vec<String> = s
            .families
            .iter()
            .map(|f| f.matches.clone().unwrap_or_default())
            .collect();
        assert_eq!(got, expected, "taft({n})");
        assert!(s.grouplikes.verified);
    }
}

#[test]
fn nichols_classification_has_two_families() {
    for n in 2..=5 {
        let h = Arc::new(nichols(n).unwrap());
        let s = classify_base_field_actions(&h).unwrap();
        assert!(s.exhaustive);
        assert_eq!(s.families.len(), 2, "nichols({n})");
        assert_eq!(s.families[0].matches.as_deref(), Some("epsilon"));
        assert_eq!(s.families[1].matches.as_deref(), Some("lambda_alpha"));
        assert_eq!(s.families[1].family.params.len(), n as usize - 1);
        assert!(s.families.iter().all(|f| f.conditions.is_empty()));
    }
}

#[test]
fn taft_parametric_branch_derivation() {
    // On the trivial subgroup branch of T₃, λ(g²x) is solved as -q λ(x).
    let h = Arc::new(taft(3).unwrap());
    let s = classify_base_field_actions(&h).unwrap();
    let last = s.families.last().unwrap();
    assert_eq!(last.branch, "N = {1}");
    assert_eq!(last.family.params, ["alpha"]);
}

#[test]
fn dual_group_algebra_is_reported_as_is() {
    let h = Arc::new(dual_group_algebra_cyclic(4).unwrap());
    let s = classify_base_field_actions(&h).unwrap();
    for leaf in &s.leaves {
        if let LeafOutcome::Stuck { remaining } = &leaf.outcome {
            assert!(!remaining.is_empty());
        }
    }
    for f in &s.families {
        assert!(f.family.functional.coords().iter().any(|c| !c.is_zero()));
    }
}
