//! Fixed braiding matrices of rank at most 3 with entries of order 1, 2, 3, 4 or 6,
//! used by the sweeps and the acceptance suite.

use serde::Serialize;

use crate::braiding::{cartan_braiding, BraidingMatrix, CartanSpec, CartanType};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    QuantumLinear,
    CartanChain,
    Mixed,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub family: Family,
    pub matrix: BraidingMatrix,
}

const EXPLICIT: &[(&str, Family, &[&[&str]])] = &[
    ("rank1_sign", Family::QuantumLinear, &[&["1/2"]]),
    ("rank1_cube", Family::QuantumLinear, &[&["1/3"]]),
    ("rank1_quartic", Family::QuantumLinear, &[&["1/4"]]),
    ("rank1_trivial", Family::QuantumLinear, &[&["0/1"]]),
    (
        "ql2_signs_commuting",
        Family::QuantumLinear,
        &[&["1/2", "0/1"], &["0/1", "1/2"]],
    ),
    (
        "ql2_signs_twisted",
        Family::QuantumLinear,
        &[&["1/2", "1/4"], &["3/4", "1/2"]],
    ),
    (
        "ql2_signs_anticommuting",
        Family::QuantumLinear,
        &[&["1/2", "1/2"], &["1/2", "1/2"]],
    ),
    (
        "ql2_cube_quartic",
        Family::QuantumLinear,
        &[&["1/3", "1/2"], &["1/2", "1/4"]],
    ),
    (
        "ql2_cube_sextic",
        Family::QuantumLinear,
        &[&["1/3", "1/3"], &["2/3", "1/6"]],
    ),
    (
        "ql2_free_vertex",
        Family::QuantumLinear,
        &[&["1/4", "1/6"], &["5/6", "0/1"]],
    ),
    (
        "ql2_sign_cube",
        Family::QuantumLinear,
        &[&["1/2", "0/1"], &["0/1", "1/3"]],
    ),
    (
        "mixed2_generic",
        Family::Mixed,
        &[&["1/3", "1/4"], &["1/6", "1/2"]],
    ),
    (
        "mixed2_free_vertex",
        Family::Mixed,
        &[&["0/1", "1/2"], &["1/3", "1/4"]],
    ),
    (
        "ql3_signs_twisted",
        Family::QuantumLinear,
        &[
            &["1/2", "1/4", "1/3"],
            &["3/4", "1/2", "1/2"],
            &["2/3", "1/2", "1/2"],
        ],
    ),
    (
        "ql3_signs_commuting",
        Family::QuantumLinear,
        &[
            &["1/2", "0/1", "0/1"],
            &["0/1", "1/2", "0/1"],
            &["0/1", "0/1", "1/2"],
        ],
    ),
    (
        "ql3_signs_all_minus",
        Family::QuantumLinear,
        &[
            &["1/2", "1/2", "1/2"],
            &["1/2", "1/2", "1/2"],
            &["1/2", "1/2", "1/2"],
        ],
    ),
    (
        "ql3_mixed_orders",
        Family::QuantumLinear,
        &[
            &["1/3", "1/6", "0/1"],
            &["5/6", "1/2", "0/1"],
            &["0/1", "0/1", "1/4"],
        ],
    ),
    (
        "mixed3_edge_and_vertex",
        Family::Mixed,
        &[
            &["1/2", "1/3", "1/4"],
            &["0/1", "1/3", "0/1"],
            &["3/4", "0/1", "1/6"],
        ],
    ),
    (
        "mixed3_triangle",
        Family::Mixed,
        &[
            &["1/3", "1/3", "1/3"],
            &["0/1", "1/3", "1/3"],
            &["0/1", "0/1", "1/3"],
        ],
    ),
    (
        "mixed3_free_vertex",
        Family::Mixed,
        &[
            &["0/1", "1/4", "0/1"],
            &["1/4", "1/2", "1/6"],
            &["0/1", "0/1", "1/3"],
        ],
    ),
];

const CARTAN: &[(&str, CartanType, usize, u64)] = &[
    ("a2_cube", CartanType::A, 2, 3),
    ("a2_quartic", CartanType::A, 2, 4),
    ("a2_sextic", CartanType::A, 2, 6),
    ("a2_sign", CartanType::A, 2, 2),
    ("b2_quartic", CartanType::B, 2, 4),
    ("g2_quartic", CartanType::G2, 2, 4),
    ("a3_cube", CartanType::A, 3, 3),
    ("a3_sign", CartanType::A, 3, 2),
    ("a3_quartic", CartanType::A, 3, 4),
    ("c3_cube", CartanType::C, 3, 3),
];

/// The full catalog, explicit matrices first.
pub fn catalog() -> Vec<CatalogEntry> {
    let explicit = EXPLICIT.iter().map(|&(name, family, rows)| CatalogEntry {
        name,
        family,
        matrix: BraidingMatrix::from_strs(rows).expect("catalog entries are well formed"),
    });
    let cartan = CARTAN
        .iter()
        .map(|&(name, kind, rank, order)| CatalogEntry {
            name,
            family: Family::CartanChain,
            matrix: cartan_braiding(
                &CartanSpec::with_order(kind, rank, order)
                    .expect("catalog entries are well formed"),
            ),
        });
    explicit.chain(cartan).collect()
}

/// The rank-2 quantum linear space with `p_11 = ζ_3`, `p_22 = ζ_5`, `p_12 = p_21 = −1`.
pub fn example_rank2_basis() -> BraidingMatrix {
    BraidingMatrix::from_strs(&[&["1/3", "1/2"], &["1/2", "1/5"]]).expect("well formed")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_shape() {
        let c = catalog();
        assert!(c.len() >= 20);
        let allowed = [1, 2, 3, 4, 6];
        for e in &c {
            let b = &e.matrix;
            assert!(b.rank() <= 3, "{}", e.name);
            for i in 0..b.rank() {
                for j in 0..b.rank() {
                    assert!(allowed.contains(&b.entry(i, j).order()), "{}", e.name);
                }
            }
            if e.family == Family::QuantumLinear {
                assert!(b.is_quantum_linear(), "{}", e.name);
            }
        }
        let mut names: Vec<_> = c.iter().map(|e| e.name).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), c.len());
    }
}
