use hctree::coloring::{check_order, coloring_from_order, lower_bound, verify};
use hctree::families::{FamilySpec, OrderSource};

fn grid() -> Vec<FamilySpec> {
    let mut specs = Vec::new();
    for k in 2..=4 {
        for d in 2..=5 {
            specs.push(FamilySpec::Symmetric { k, d });
        }
    }
    for m in 3..=7 {
        for k in 4..=6 {
            specs.push(FamilySpec::Firecracker { m, k });
        }
    }
    for m in 3..=8 {
        for k in 3..=6 {
            specs.push(FamilySpec::Caterpillar { m, k });
        }
    }
    for m in 3..=12 {
        specs.push(FamilySpec::PathPlusPendant { m });
    }
    specs
}

#[test]
fn closed_forms_match_built_trees() {
    for spec in grid() {
        let inst = spec.generate().unwrap();
        let form = spec.closed_form().unwrap();
        assert_eq!(form.n, inst.tree.n() as u64, "{spec:?}");
        assert_eq!(form.total_level, inst.tree.level_table().total, "{spec:?}");
        assert_eq!(form.hc, lower_bound(&inst.tree).unwrap(), "{spec:?}");
        assert_eq!(inst.labels.len(), inst.tree.n());
    }
}

#[test]
fn canonical_orders_are_optimal() {
    for spec in grid() {
        let inst = spec.generate().unwrap();
        let report = check_order(&inst.tree, &inst.canonical_order, inst.require_gap()).unwrap();
        assert!(report.all_hold(), "{spec:?}: {:?}", report.first_violation);
        let coloring = coloring_from_order(&inst.tree, &inst.canonical_order).unwrap();
        assert!(verify(&inst.tree, &coloring).unwrap().is_valid(), "{spec:?}");
        assert_eq!(coloring.span() as i64, spec.closed_form().unwrap().hc, "{spec:?}");
    }
}

#[test]
fn explicit_orders_used_where_they_hold() {
    for spec in grid() {
        let inst = spec.generate().unwrap();
        let literal = inst.order_source == OrderSource::Literal;
        match spec {
            FamilySpec::Symmetric { .. } | FamilySpec::PathPlusPendant { .. } => assert!(literal, "{spec:?}"),
            FamilySpec::Firecracker { m, .. } if m % 2 == 0 => assert!(literal, "{spec:?}"),
            _ => {}
        }
    }
}

#[test]
fn generation_is_deterministic() {
    for spec in grid().into_iter().step_by(5) {
        let a = spec.generate().unwrap();
        let b = spec.generate().unwrap();
        assert_eq!(a.tree, b.tree);
        assert_eq!(a.canonical_order, b.canonical_order);
    }
}
