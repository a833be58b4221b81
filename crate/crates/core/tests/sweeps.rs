use rayon::prelude::*;

use nichols_core::catalog::catalog;
use nichols_core::sweeps::{self, combine, over_catalog, SweepTotals};

fn assert_clean(t: SweepTotals) {
    assert!(t.passed(), "{}: {:#?}", t.sweep, t.violations);
    assert!(t.checked > 0, "{} checked nothing", t.sweep);
}

#[test]
fn lie_blocks_follow_connectivity() {
    assert_clean(over_catalog("connected_blocks", |e| sweeps::connected_blocks(e, 4)).unwrap());
}

#[test]
fn membership_propagates_through_products() {
    assert_clean(
        over_catalog("membership_propagation", |e| {
            sweeps::membership_propagation(e, 5)
        })
        .unwrap(),
    );
}

#[test]
fn rank2_basis_spans_each_degree() {
    let reports: Vec<_> = sweeps::rank2_quantum_linear_grid()
        .par_iter()
        .filter_map(|b| sweeps::rank2_basis(b, 6).transpose())
        .collect::<nichols_core::Result<_>>()
        .unwrap();
    assert!(reports.len() > 20);
    assert_clean(combine("rank2_basis", reports));
}

#[test]
fn catalog_matrices_are_distinct() {
    let c = catalog();
    for (i, a) in c.iter().enumerate() {
        assert!(
            c[i + 1..].iter().all(|b| b.matrix != a.matrix),
            "{} repeated",
            a.name
        );
    }
}
