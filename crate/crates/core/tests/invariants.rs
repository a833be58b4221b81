use std::collections::BTreeSet;

use num_bigint::BigInt;
use proptest::prelude::*;

use nichols_core::algebra::{braided_bracket, minus_bracket, NCPolynomial};
use nichols_core::braiding::{cartan_braiding, BraidingMatrix, CartanSpec, CartanType};
use nichols_core::catalog::catalog;
use nichols_core::graphs::{component_decomposition, components, is_connected, pure_graph, Word};
use nichols_core::oracle::{LieVariant, NicholsOracle};
use nichols_core::roots::{
    count_connected_oracle, enumerate_cartan, enumerate_quantum_linear, positive_roots,
};
use nichols_core::scalars::{q_factorial, q_int, CycNumber, Order, RootFraction};

fn root_fraction() -> impl Strategy<Value = RootFraction> {
    (-24i64..24, 1u64..=12).prop_map(|(num, den)| RootFraction::new(num, den).unwrap())
}

fn small_root() -> impl Strategy<Value = RootFraction> {
    (0i64..12, prop::sample::select(vec![1u64, 2, 3, 4, 6]))
        .prop_map(|(num, den)| RootFraction::new(num, den).unwrap())
}

/// Integer combinations of twelfth roots of unity.
fn cyc_number() -> impl Strategy<Value = CycNumber> {
    prop::collection::vec(-3i64..=3, 12).prop_map(|coeffs| {
        coeffs
            .iter()
            .enumerate()
            .fold(CycNumber::zero(), |acc, (k, &c)| {
                let term = &CycNumber::embed(RootFraction::new(k as i64, 12).unwrap())
                    * &CycNumber::from_integer(c);
                &acc + &term
            })
    })
}

fn braiding(max_rank: usize) -> impl Strategy<Value = BraidingMatrix> {
    (1..=max_rank).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(small_root(), n), n)
            .prop_map(|rows| BraidingMatrix::new(rows).unwrap())
    })
}

fn braiding_and_word(
    max_rank: usize,
    max_len: usize,
) -> impl Strategy<Value = (BraidingMatrix, Word)> {
    braiding(max_rank).prop_flat_map(move |b| {
        let n = b.rank();
        (
            Just(b),
            prop::collection::vec(0..n, 1..=max_len).prop_map(Word::new),
        )
    })
}

fn degree(n: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..=3, n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn embedding_is_multiplicative(r in root_fraction(), s in root_fraction()) {
        prop_assert_eq!(CycNumber::embed(r * s), &CycNumber::embed(r) * &CycNumber::embed(s));
    }

    #[test]
    fn embedded_roots_have_their_denominator_as_order(r in root_fraction()) {
        prop_assert_eq!(CycNumber::embed(r).mult_order().unwrap(), Order::Finite(r.den()));
    }

    #[test]
    fn q_factorial_vanishes_with_some_q_integer(r in root_fraction(), s in 0u64..8) {
        let q = CycNumber::embed(r);
        let any_zero = (1..=s).any(|k| q_int(k, &q).is_zero());
        let order = r.order();
        let predicted = order >= 2 && order <= s;
        prop_assert_eq!(q_factorial(s, &q).is_zero(), any_zero);
        prop_assert_eq!(any_zero, predicted);
    }

    #[test]
    fn field_axioms(a in cyc_number(), b in cyc_number(), c in cyc_number()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn chi_is_bicharacter((b, x, y, z) in braiding(3).prop_flat_map(|b| {
        let n = b.rank();
        (Just(b), degree(n), degree(n), degree(n))
    })) {
        let sum: Vec<i64> = x.iter().zip(&y).map(|(p, q)| p + q).collect();
        prop_assert_eq!(b.chi(&sum, &z).unwrap(), b.chi(&x, &z).unwrap() * b.chi(&y, &z).unwrap());
        prop_assert_eq!(b.chi(&z, &sum).unwrap(), b.chi(&z, &x).unwrap() * b.chi(&z, &y).unwrap());
        prop_assert_eq!(b.ptilde(&x, &y).unwrap(), b.ptilde(&y, &x).unwrap());
    }

    #[test]
    fn connectivity_depends_on_support_only((b, w) in braiding_and_word(3, 6), seed in any::<u64>()) {
        let g = pure_graph(&b);
        let mut letters = w.letters().to_vec();
        let len = letters.len();
        letters.rotate_left(seed as usize % len);
        if len > 1 {
            letters.swap(0, (seed as usize / 7) % len);
        }
        prop_assert_eq!(is_connected(&w, &g), is_connected(&Word::new(letters), &g));
    }

    #[test]
    fn components_partition_the_vertices(b in braiding(4)) {
        let g = pure_graph(&b);
        let blocks = components(&g);
        let union: BTreeSet<usize> = blocks.iter().flatten().copied().collect();
        prop_assert_eq!(union.len(), blocks.iter().map(BTreeSet::len).sum::<usize>());
        prop_assert_eq!(union, g.vertices().clone());
        for &(x, y) in g.edges() {
            prop_assert!(blocks.iter().any(|c| c.contains(&x) && c.contains(&y)));
        }
    }

    #[test]
    fn decomposition_recovers_the_word((b, w) in braiding_and_word(3, 5)) {
        let n = b.rank();
        let (scalar, factors) = component_decomposition(&w, &b);
        let product = factors.iter().fold(Word::empty(), |acc, f| acc.concat(f));
        prop_assert_eq!(product.degree(n), w.degree(n));
        let rebuilt = NCPolynomial::monomial(n, product, CycNumber::embed(scalar));
        let oracle = NicholsOracle::new(&b);
        let difference = &NCPolynomial::word(n, w.clone()) - &rebuilt;
        prop_assert!(oracle.is_zero(&difference).unwrap());
    }

    #[test]
    fn minus_bracket_is_braided_bracket_when_p_trivial((b, u, v) in braiding(3).prop_flat_map(|b| {
        let n = b.rank();
        (Just(b), prop::collection::vec(0..n, 1..=3), prop::collection::vec(0..n, 1..=3))
    })) {
        let n = b.rank();
        let (u, v) = (Word::new(u), Word::new(v));
        if b.chi(&v.degree(n), &u.degree(n)).unwrap().is_one() {
            let (pu, pv) = (NCPolynomial::word(n, u), NCPolynomial::word(n, v));
            prop_assert_eq!(minus_bracket(&pu, &pv), braided_bracket(&pu, &pv, &b).unwrap());
        }
    }

    #[test]
    fn zero_test_matches_coordinates((b, words, coeffs) in braiding(3).prop_flat_map(|b| {
        let n = b.rank();
        (Just(b), prop::collection::vec(prop::collection::vec(0..n, 3), 1..5), prop::collection::vec(-2i64..=2, 5))
    })) {
        let n = b.rank();
        let mut p = NCPolynomial::zero(n);
        let mut degree_of_first = None;
        for (w, c) in words.into_iter().zip(coeffs) {
            let w = Word::new(w);
            let d = w.degree(n);
            if *degree_of_first.get_or_insert(d.clone()) == d {
                p.add_term(w, CycNumber::from_integer(c));
            }
        }
        let oracle = NicholsOracle::new(&b);
        if !p.is_zero() {
            prop_assert_eq!(oracle.is_zero(&p).unwrap(), oracle.coordinates(&p).unwrap().is_zero());
        }
    }
}

#[test]
fn type_a_roots_all_carry_q() {
    for n in 1..=5 {
        for order in [3u64, 4, 5] {
            let spec = CartanSpec::with_order(CartanType::A, n, order).unwrap();
            let b = cartan_braiding(&spec);
            for root in positive_roots(&spec).roots() {
                assert_eq!(b.chi(root, root).unwrap(), spec.q(), "A{n}, root {root:?}");
            }
        }
    }
}

#[test]
fn enumeration_matches_subset_count() {
    for kind in [CartanType::A, CartanType::B, CartanType::C, CartanType::G2] {
        for rank in [2usize, 3] {
            if kind == CartanType::G2 && rank != 2 || kind == CartanType::C && rank < 3 {
                continue;
            }
            for order in 2..=4 {
                let spec = CartanSpec::with_order(kind, rank, order).unwrap();
                let Ok(e) = enumerate_cartan(&spec, 2_000_000) else {
                    continue;
                };
                assert_eq!(
                    BigInt::from(e.monomials.len()),
                    count_connected_oracle(&spec),
                    "{kind}{rank}, N={order}"
                );
            }
        }
    }
}

#[test]
fn quantum_linear_enumeration_matches_lie_dimensions() {
    for entry in catalog() {
        let b = &entry.matrix;
        let n = b.rank();
        if !b.is_quantum_linear() || (0..n).any(|i| b.entry(i, i).is_one()) {
            continue;
        }
        let top = (0..n)
            .map(|i| b.entry(i, i).order() as usize)
            .max()
            .unwrap();
        let oracle = NicholsOracle::with_degree_cap(b, top.min(6));
        let total: usize = (1..=top.min(6))
            .map(|d| oracle.lie_dimension(d, LieVariant::Braided).unwrap())
            .sum();
        let e = enumerate_quantum_linear(b, None).unwrap();
        assert_eq!(e.monomials.len(), total, "{}", entry.name);
    }
}
