//! Property sweeps over the catalog. Each sweep runs one matrix per task with a
//! private oracle and reports the cases it checked and any violations.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{jacobi_sides, left_normed_minus, mixed_sides, NCPolynomial};
use crate::braiding::{unit_degree, BraidingMatrix, DegreeVector};
use crate::catalog::{catalog, CatalogEntry};
use crate::error::Result;
use crate::graphs::{pure_graph, support, Word};
use crate::oracle::{
    compositions, nonzero_by_order_criterion, words_of_content, words_of_length, LieVariant,
    NicholsOracle,
};
use crate::scalars::{q_factorial, CycNumber, RootFraction};
use crate::structure::{
    closed_form_left_normed, ladder_closed_form, ladder_expansion, lminus_rank2_basis,
    prop_6_3_decide, prop_6_4_decide, rank2_membership, rank2_monomial,
    verify_connectivity_criterion, verify_prop_6_5, CommutingFamily,
};

pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub sweep: String,
    pub matrix: String,
    pub checked: usize,
    pub violations: Vec<String>,
}

impl SweepReport {
    fn new(sweep: &str, matrix: &str) -> Self {
        SweepReport {
            sweep: sweep.into(),
            matrix: matrix.into(),
            ..Default::default()
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.violations.push(describe());
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Total counts over several per-matrix reports.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SweepTotals {
    pub sweep: String,
    pub matrices: usize,
    pub checked: usize,
    pub violations: Vec<String>,
}

impl SweepTotals {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn combine(sweep: &str, reports: Vec<SweepReport>) -> SweepTotals {
    let mut t = SweepTotals {
        sweep: sweep.into(),
        matrices: reports.len(),
        ..Default::default()
    };
    for r in reports {
        t.checked += r.checked;
        t.violations.extend(
            r.violations
                .into_iter()
                .map(|v| format!("{}: {v}", r.matrix)),
        );
    }
    t
}

/// Runs `sweep` on every catalog matrix in parallel, in catalog order.
pub fn over_catalog<F>(name: &str, sweep: F) -> Result<SweepTotals>
where
    F: Fn(&CatalogEntry) -> Result<SweepReport> + Sync,
{
    let reports = catalog()
        .par_iter()
        .map(&sweep)
        .collect::<Result<Vec<_>>>()?;
    Ok(combine(name, reports))
}

fn p_word(b: &BraidingMatrix, k: usize, w: &Word) -> RootFraction {
    w.letters()
        .iter()
        .fold(RootFraction::ONE, |acc, &j| acc * b.entry(k, j))
}

fn words_up_to(n: usize, max_len: usize) -> Vec<Word> {
    (0..=max_len)
        .flat_map(|len| words_of_length(n, len))
        .collect()
}

/// Words over the alphabet `0..n` without `avoid`, of length at most `max_len`.
fn words_avoiding(n: usize, avoid: usize, max_len: usize) -> Vec<Word> {
    words_up_to(n, max_len)
        .into_iter()
        .filter(|w| !w.letters().contains(&avoid))
        .collect()
}

/// `u_1 x_k u_2 ⋯ u_l x_k u_{l+1}`.
fn interleave(k: usize, parts: &[&Word]) -> Word {
    let mut w = parts[0].clone();
    for u in &parts[1..] {
        w = w.concat(&Word::letter(k)).concat(u);
    }
    w
}

/// The single-derivation and power-pairing formulas on every factorization
/// with `l ≤ max_l` and cofactors of length at most `max_part`.
pub fn pairing_formulas(
    entry: &CatalogEntry,
    max_l: usize,
    max_part: usize,
) -> Result<SweepReport> {
    let b = &entry.matrix;
    let n = b.rank();
    let oracle = NicholsOracle::new(b);
    let mut report = SweepReport::new("pairing_formulas", entry.name);
    for k in 0..n {
        let parts = words_avoiding(n, k, max_part);
        let q = CycNumber::embed(b.entry(k, k).inv());
        for l in 1..=max_l {
            for choice in
                itertools::Itertools::multi_cartesian_product((0..=l).map(|_| parts.iter()))
            {
                let w = interleave(k, &choice);
                let word = NCPolynomial::word(n, w.clone());

                let mut expected = NCPolynomial::zero(n);
                let mut prefix = Word::empty();
                let mut q_power = CycNumber::one();
                let mut positions = w
                    .letters()
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c == k)
                    .map(|(t, _)| t);
                for part in choice.iter().take(l) {
                    prefix = prefix.concat(part);
                    let coeff = &q_power * &CycNumber::embed(p_word(b, k, &prefix).inv());
                    expected.add_term(w.without(positions.next().expect("l occurrences")), coeff);
                    q_power = &q_power * &q;
                }
                let derived = oracle.skew_derive(k, &word)?;
                report.record(derived == expected, || {
                    format!("single derivation, k={}, w={w}", k + 1)
                });

                let mut chain = RootFraction::ONE;
                let mut prefix = Word::empty();
                for part in choice.iter().take(l) {
                    prefix = prefix.concat(part);
                    chain = chain * p_word(b, k, &prefix).inv();
                }
                let coeff = &q_factorial(l as u64, &q) * &CycNumber::embed(chain);
                let rest = choice.iter().fold(Word::empty(), |acc, u| acc.concat(u));
                let expected = NCPolynomial::monomial(n, rest, coeff);
                let paired = oracle.power_pairing(k, l, &word)?;
                report.record(paired == expected, || {
                    format!("power pairing, k={}, l={l}, w={w}", k + 1)
                });
            }
        }
    }
    Ok(report)
}

/// The braided Jacobi identity and the mixed product rule on all triples of
/// words of length 1..=`max_len`, compared in 𝔅(V).
pub fn bracket_identities(entry: &CatalogEntry, max_len: usize) -> Result<SweepReport> {
    let b = &entry.matrix;
    let n = b.rank();
    let oracle = NicholsOracle::new(b);
    let mut report = SweepReport::new("bracket_identities", entry.name);
    let elems: Vec<(Word, NCPolynomial)> = (1..=max_len)
        .flat_map(|len| words_of_length(n, len))
        .map(|w| (w.clone(), NCPolynomial::word(n, w)))
        .collect();
    for (wu, u) in &elems {
        for (wv, v) in &elems {
            for (ww, w) in &elems {
                let (lhs, rhs) = jacobi_sides(u, v, w, b)?;
                let ok = oracle.is_zero(&(&lhs - &rhs))?;
                report.record(ok, || format!("Jacobi identity, ({wu}, {wv}, {ww})"));
                let (lhs, rhs) = mixed_sides(u, v, w, b)?;
                let ok = oracle.is_zero(&(&lhs - &rhs))?;
                report.record(ok, || format!("product rule, ({wu}, {wv}, {ww})"));
            }
        }
    }
    Ok(report)
}

/// The order criterion implies a nonzero word, for all words up to `max_len`.
pub fn order_criterion(entry: &CatalogEntry, max_len: usize) -> Result<SweepReport> {
    let b = &entry.matrix;
    let oracle = NicholsOracle::new(b);
    let mut report = SweepReport::new("order_criterion", entry.name);
    for w in (1..=max_len).flat_map(|len| words_of_length(b.rank(), len)) {
        if nonzero_by_order_criterion(&w, b) {
            let ok = !oracle.is_zero_word(&w)?;
            report.record(ok, || format!("{w} meets the criterion but vanishes"));
        }
    }
    Ok(report)
}

fn cross_trivial(b: &BraidingMatrix, left: &BTreeSet<usize>, right: &BTreeSet<usize>) -> bool {
    left.iter()
        .all(|&i| right.iter().all(|&j| b.ptilde_gen(i, j).is_one()))
}

/// For monomials with disjoint, braided-commuting supports:
/// `u, v ≠ 0 ⇔ uv ≠ 0 ⇔ uv ∉ 𝔏(V)`.
pub fn disjoint_monomials(entry: &CatalogEntry, max_total: usize) -> Result<SweepReport> {
    let b = &entry.matrix;
    let n = b.rank();
    let oracle = NicholsOracle::new(b);
    let mut report = SweepReport::new("disjoint_monomials", entry.name);
    let words: Vec<Word> = (1..max_total)
        .flat_map(|len| words_of_length(n, len))
        .collect();
    for u in &words {
        for v in &words {
            if u.len() + v.len() > max_total {
                continue;
            }
            let (su, sv) = (support(u), support(v));
            if !su.is_disjoint(&sv) || !cross_trivial(b, &su, &sv) {
                continue;
            }
            let uv = u.concat(v);
            let factors_nonzero = !oracle.is_zero_word(u)? && !oracle.is_zero_word(v)?;
            let product_nonzero = !oracle.is_zero_word(&uv)?;
            let outside_lie = !oracle.in_lie_word(&uv, LieVariant::Braided)?;
            report.record(factors_nonzero == product_nonzero && product_nonzero == outside_lie, || {
                format!("u={u}, v={v}: factors {factors_nonzero}, product {product_nonzero}, outside {outside_lie}")
            });
        }
    }
    Ok(report)
}

fn degrees_up_to(n: usize, max_deg: usize) -> Vec<DegreeVector> {
    (1..=max_deg).flat_map(|d| compositions(d, n)).collect()
}

fn random_element(rng: &mut ChaCha8Rng, alpha: &[i64]) -> NCPolynomial {
    let mut p = NCPolynomial::zero(alpha.len());
    for w in words_of_content(alpha) {
        p.add_term(w, CycNumber::from_integer(rng.gen_range(-2..=2)));
    }
    p
}

/// For homogeneous `u, v` of disjoint support, `uv = 0` forces `u = 0` or `v = 0`.
/// Each degree pair is tried with `trials` random combinations and with all
/// pairs of words.
pub fn disjoint_products(
    entry: &CatalogEntry,
    max_total: usize,
    trials: usize,
    seed: u64,
) -> Result<SweepReport> {
    let b = &entry.matrix;
    let n = b.rank();
    let oracle = NicholsOracle::new(b);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SweepReport::new("disjoint_products", entry.name);
    let degrees = degrees_up_to(n, max_total.saturating_sub(1));
    let supp = |d: &DegreeVector| -> BTreeSet<usize> { (0..n).filter(|&i| d[i] > 0).collect() };
    for alpha in &degrees {
        for beta in &degrees {
            let total: i64 = alpha.iter().chain(beta).sum();
            if total as usize > max_total || !supp(alpha).is_disjoint(&supp(beta)) {
                continue;
            }
            let mut candidates: Vec<(NCPolynomial, NCPolynomial)> = (0..trials)
                .map(|_| {
                    (
                        random_element(&mut rng, alpha),
                        random_element(&mut rng, beta),
                    )
                })
                .collect();
            for wu in words_of_content(alpha) {
                for wv in words_of_content(beta) {
                    candidates.push((NCPolynomial::word(n, wu.clone()), NCPolynomial::word(n, wv)));
                }
            }
            for (u, v) in candidates {
                let product_zero = oracle.is_zero(&(&u * &v))?;
                let ok = !product_zero || oracle.is_zero(&u)? || oracle.is_zero(&v)?;
                report.record(ok, || format!("u={u}, v={v}: uv = 0 with nonzero factors"));
            }
        }
    }
    Ok(report)
}

/// For every degree outside the single-letter proviso, 𝔏(V) fills the whole
/// block when the support is connected and is zero otherwise.
pub fn connected_blocks(entry: &CatalogEntry, max_deg: usize) -> Result<SweepReport> {
    let b = &entry.matrix;
    let n = b.rank();
    let g = pure_graph(b);
    let oracle = NicholsOracle::new(b);
    let mut report = SweepReport::new("connected_blocks", entry.name);
    for alpha in degrees_up_to(n, max_deg) {
        let sup: BTreeSet<usize> = (0..n).filter(|&i| alpha[i] > 0).collect();
        if sup.len() == 1
            && b.entry(*sup.first().unwrap(), *sup.first().unwrap())
                .is_one()
        {
            continue;
        }
        let full = oracle.nichols_block_dimension(&alpha);
        if full == 0 {
            continue;
        }
        let lie = oracle.lie_block_dimension(&alpha, LieVariant::Braided)?;
        let expected = if g.is_connected_set(&sup) { full } else { 0 };
        report.record(lie == expected, || {
            format!("degree {alpha:?}: dim 𝔏 = {lie}, expected {expected}")
        });
    }
    Ok(report)
}

/// Membership propagation on triples from the generators and the degree-2 part
/// of 𝔏(V) with `uv, uw ∈ 𝔏(V)` and one of `a, b, c` nonzero, limited to
/// products of degree at most `max_deg`.
pub fn membership_propagation(entry: &CatalogEntry, max_deg: usize) -> Result<SweepReport> {
    let b = &entry.matrix;
    let n = b.rank();
    let oracle = NicholsOracle::new(b);
    let mut report = SweepReport::new("membership_propagation", entry.name);
    let mut elems: Vec<(DegreeVector, NCPolynomial)> = (0..n)
        .map(|i| (unit_degree(n, i), NCPolynomial::generator(n, i)))
        .collect();
    for p in oracle.lie_space_basis(2, LieVariant::Braided)? {
        let d = p.homogeneous_degree()?.expect("basis elements are nonzero");
        elems.push((d, p));
    }
    let p = |x: &DegreeVector, y: &DegreeVector| b.chi(x, y).map(CycNumber::embed);
    let one = CycNumber::one();
    for (du, u) in &elems {
        for (dv, v) in &elems {
            for (dw, w) in &elems {
                let deg = |ds: &[&DegreeVector]| {
                    ds.iter().map(|d| d.iter().sum::<i64>()).sum::<i64>() as usize
                };
                if deg(&[du, du, dv])
                    .max(deg(&[du, dv, dv]))
                    .max(deg(&[du, dv, dw]))
                    > max_deg
                {
                    continue;
                }
                let in_lie = |x: &NCPolynomial| oracle.in_lie(x, LieVariant::Braided);
                if !in_lie(&(u * v))? || !in_lie(&(u * w))? {
                    continue;
                }
                let a = &one - &(&p(du, dv)? * &p(dv, dw)?);
                let bb = &one - &(&p(du, dw)? * &p(dv, du)?);
                let c = &one - &(&p(du, dv)? * &p(dv, du)?);
                if a.is_zero() && bb.is_zero() && c.is_zero() {
                    continue;
                }
                let products = [
                    ("uvw", &(u * v) * w),
                    ("uuv", &(u * u) * v),
                    ("vuv", &(v * u) * v),
                    ("uvu", &(u * v) * u),
                    ("wuv", &(w * u) * v),
                    ("wvu", &(w * v) * u),
                ];
                for (label, x) in &products {
                    let ok = in_lie(x)?;
                    report.record(ok, || format!("{label} ∉ 𝔏 for u={u}, v={v}, w={w}"));
                }
            }
        }
    }
    Ok(report)
}

/// The connectivity criterion for words up to `max_len`.
pub fn connectivity(entry: &CatalogEntry, max_len: usize) -> Result<SweepReport> {
    let oracle = NicholsOracle::new(&entry.matrix);
    let r = verify_connectivity_criterion(&oracle, max_len)?;
    let mut report = SweepReport::new("connectivity", entry.name);
    report.checked = r.checked;
    report.violations = r
        .violations
        .iter()
        .map(|v| format!("{}: connected {}, in 𝔏 {}", v.word, v.connected, v.in_lie))
        .collect();
    Ok(report)
}

/// Weakly disconnected bracketings vanish, for words up to `max_len`.
pub fn disconnected_bracketings(entry: &CatalogEntry, max_len: usize) -> Result<SweepReport> {
    let oracle = NicholsOracle::new(&entry.matrix);
    let r = verify_prop_6_5(&oracle, max_len)?;
    let mut report = SweepReport::new("disconnected_bracketings", entry.name);
    report.checked = r.bracketings;
    report.violations = r
        .violations
        .iter()
        .map(|v| format!("{} on {} is nonzero", v.bracketing, v.word))
        .collect();
    Ok(report)
}

fn index_tuples(n: usize, len: usize) -> Vec<Vec<usize>> {
    itertools::Itertools::permutations(0..n, len).collect()
}

/// Left-normed and ladder closed forms against the direct expansions, on
/// families of distinct generators of a quantum linear space.
pub fn closed_forms(
    entry: &CatalogEntry,
    max_members: usize,
    max_exponent: u32,
) -> Result<SweepReport> {
    let b = &entry.matrix;
    let oracle = NicholsOracle::new(b);
    let mut report = SweepReport::new("closed_forms", entry.name);
    if !b.is_quantum_linear() {
        return Ok(report);
    }
    for k in 2..=max_members.min(b.rank()) {
        for idx in index_tuples(b.rank(), k) {
            let f = CommutingFamily::from_generators(&idx, &oracle)?;
            let form = closed_form_left_normed(&f);
            let direct = left_normed_minus(f.members())?;
            report.record(oracle.is_zero(&(&direct - &form.value()))?, || {
                format!("left-normed {idx:?}")
            });
            let ranges = (0..k - 1).map(|_| 0..=max_exponent);
            for ms in itertools::Itertools::multi_cartesian_product(ranges) {
                let ladder = ladder_closed_form(&f, &ms)?;
                let direct = ladder_expansion(&f, &ms);
                let ok = oracle.is_zero(&(&direct - &ladder.form.value()))?;
                report.record(ok, || format!("ladder {idx:?} with exponents {ms:?}"));
            }
        }
    }
    Ok(report)
}

/// Rank-2 quantum linear spaces with every entry of order at most 6.
pub fn rank2_quantum_linear_grid() -> Vec<BraidingMatrix> {
    let labels = ["0/1", "1/2", "1/3", "2/3", "1/4", "1/5", "1/6"];
    let mut out = Vec::new();
    for d1 in labels {
        for d2 in labels {
            for off in ["0/1", "1/2", "1/3", "1/4", "1/6", "5/6"] {
                let z: RootFraction = off.parse().expect("label");
                let rows = vec![
                    vec![d1.parse().expect("label"), z],
                    vec![z.inv(), d2.parse().expect("label")],
                ];
                out.push(BraidingMatrix::new(rows).expect("square"));
            }
        }
    }
    out
}

/// The divisibility criterion against oracle membership in `𝔏⁻(V)` on every
/// nonzero `u_1^{α_1} u_2^{α_2}`, `α_1 + α_2 ≤ max_total`, in both orders.
pub fn rank2_criterion(b: &BraidingMatrix, max_total: u32) -> Result<SweepReport> {
    let oracle = NicholsOracle::new(b);
    let mut report = SweepReport::new("rank2_criterion", &b.to_json());
    for order in [[0, 1], [1, 0]] {
        let f = CommutingFamily::from_generators(&order, &oracle)?;
        for a1 in 0..=max_total {
            for a2 in 0..=max_total - a1 {
                let w = Word::letter(order[0])
                    .power(a1 as usize)
                    .concat(&Word::letter(order[1]).power(a2 as usize));
                if w.is_empty() || oracle.is_zero_word(&w)? {
                    continue;
                }
                let predicted = rank2_membership(a1, a2, &f, &oracle)?;
                let actual = oracle.in_lie_word(&w, LieVariant::Minus)?;
                report.record(predicted == actual, || {
                    format!("{w}: criterion {predicted}, oracle {actual}")
                });
            }
        }
    }
    Ok(report)
}

/// The rank-2 basis of `𝔏⁻(V)`: nonzero members of `𝔏⁻(V)` whose count per
/// degree equals `dim 𝔏⁻(V)_d`, checked for matrices with top degree at most `max_top`.
pub fn rank2_basis(b: &BraidingMatrix, max_top: u64) -> Result<Option<SweepReport>> {
    let (d1, d2) = (b.entry(0, 0), b.entry(1, 1));
    if d1.is_one() || d2.is_one() || d1.order() + d2.order() - 2 > max_top {
        return Ok(None);
    }
    let top = (d1.order() + d2.order() - 2) as usize;
    let oracle = NicholsOracle::with_degree_cap(b, top);
    let basis = lminus_rank2_basis(b, max_top)?;
    let mut report = SweepReport::new("rank2_basis", &b.to_json());
    for &pair in &basis.pairs {
        let w = rank2_monomial(pair);
        let ok = !oracle.is_zero_word(&w)? && oracle.in_lie_word(&w, LieVariant::Minus)?;
        report.record(ok, || format!("{w} is not a nonzero element of 𝔏⁻"));
    }
    for d in 1..=top + 1 {
        let count = basis
            .pairs
            .iter()
            .filter(|(a, c)| (a + c) as usize == d)
            .count();
        let dim = if d > top {
            0
        } else {
            oracle.lie_dimension(d, LieVariant::Minus)?
        };
        report.record(count == dim, || {
            format!("degree {d}: {count} basis monomials, dim 𝔏⁻ = {dim}")
        });
    }
    Ok(Some(report))
}

/// `𝔏 = 𝔏⁻` decision against emptiness of both Lie spaces in degrees 2..=4.
pub fn prop_6_3_brute_force(entry: &CatalogEntry) -> Result<SweepReport> {
    let oracle = NicholsOracle::new(&entry.matrix);
    let mut report = SweepReport::new("prop_6_3", entry.name);
    let mut empty = true;
    for d in 2..=4 {
        for variant in [LieVariant::Braided, LieVariant::Minus] {
            empty &= oracle.lie_space_basis(d, variant)?.is_empty();
        }
    }
    let decided = prop_6_3_decide(&entry.matrix);
    report.record(decided == empty, || {
        format!("decision {decided}, brute force {empty}")
    });
    Ok(report)
}

/// `𝔅 = F ⊕ 𝔏⁻` decision against `dim 𝔅_d = dim 𝔏⁻_d` for `1 ≤ d ≤` top degree,
/// on finite-dimensional quantum linear spaces of rank 2 or 3.
pub fn prop_6_4_brute_force(entry: &CatalogEntry) -> Result<Option<SweepReport>> {
    let b = &entry.matrix;
    let n = b.rank();
    if !(2..=3).contains(&n) || !b.is_quantum_linear() || (0..n).any(|i| b.entry(i, i).is_one()) {
        return Ok(None);
    }
    let top: usize = (0..n).map(|i| b.entry(i, i).order() as usize - 1).sum();
    let oracle = NicholsOracle::with_degree_cap(b, top);
    let mut equal = true;
    for d in 1..=top {
        if oracle.nichols_dimension(d) != oracle.lie_dimension(d, LieVariant::Minus)? {
            equal = false;
            break;
        }
    }
    let decided = prop_6_4_decide(b);
    let mut report = SweepReport::new("prop_6_4", entry.name);
    report.record(decided == equal, || {
        format!("decision {decided}, brute force {equal}")
    });
    Ok(Some(report))
}

/// [`rank2_criterion`] over [`rank2_quantum_linear_grid`], in parallel.
pub fn rank2_criterion_over_grid(max_total: u32) -> Result<SweepTotals> {
    let reports = rank2_quantum_linear_grid()
        .par_iter()
        .map(|b| rank2_criterion(b, max_total))
        .collect::<Result<Vec<_>>>()?;
    Ok(combine("rank2_criterion", reports))
}

/// [`prop_6_4_brute_force`] on every applicable catalog matrix.
pub fn prop_6_4_over_catalog() -> Result<SweepTotals> {
    let reports = catalog()
        .par_iter()
        .filter_map(|e| prop_6_4_brute_force(e).transpose())
        .collect::<Result<Vec<_>>>()?;
    Ok(combine("prop_6_4", reports))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn entry(name: &str) -> CatalogEntry {
        catalog().into_iter().find(|e| e.name == name).unwrap()
    }

    #[test]
    fn small_sweeps_pass() {
        let e = entry("a2_cube");
        for r in [
            pairing_formulas(&e, 2, 1).unwrap(),
            bracket_identities(&e, 1).unwrap(),
            order_criterion(&e, 3).unwrap(),
            disjoint_monomials(&e, 3).unwrap(),
            disjoint_products(&e, 3, 2, DEFAULT_SEED).unwrap(),
            connected_blocks(&e, 3).unwrap(),
            connectivity(&e, 3).unwrap(),
            disconnected_bracketings(&e, 3).unwrap(),
            prop_6_3_brute_force(&e).unwrap(),
        ] {
            assert!(r.passed(), "{}: {:?}", r.sweep, r.violations);
            assert!(
                r.checked > 0 || r.sweep == "disjoint_monomials",
                "{}",
                r.sweep
            );
        }
    }

    #[test]
    fn quantum_linear_sweeps_pass() {
        let e = entry("ql2_cube_quartic");
        let r = closed_forms(&e, 2, 2).unwrap();
        assert!(r.passed() && r.checked > 0);
        assert!(rank2_criterion(&e.matrix, 4).unwrap().passed());
        assert!(prop_6_4_brute_force(&e).unwrap().unwrap().passed());
        assert!(rank2_basis(&e.matrix, 5).unwrap().unwrap().passed());
        assert!(disjoint_monomials(&e, 3).unwrap().checked > 0);
    }

    #[test]
    fn grid_is_quantum_linear() {
        let grid = rank2_quantum_linear_grid();
        assert_eq!(grid.len(), 7 * 7 * 6);
        assert!(grid.iter().all(BraidingMatrix::is_quantum_linear));
    }
}
