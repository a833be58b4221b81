//! Decision procedures and explicit constructions for the Nichols Lie algebra
//! `𝔏⁻(V)`, and verification harnesses for the connectivity criteria.
//!
//! The closed forms below report the coefficient in the multiplicative
//! convention `u·X = r·X·u ⟹ [u, X]⁻ ~ (r − 1)·X·u`. With `[x, y]⁻ = yx − xy`
//! each bracket level contributes a factor `−1`, exposed as `bracket_sign`.

use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::algebra::{minus_bracket, NCPolynomial};
use crate::braiding::BraidingMatrix;
use crate::error::{Error, Result};
use crate::graphs::{aug_graph, is_connected, pure_graph, support, Word};
use crate::oracle::{words_of_length, LieVariant, NicholsOracle};
use crate::scalars::{CycNumber, Order, RootFraction};

/// Homogeneous elements `u_1..u_k` with `u_i u_j = r_ij u_j u_i` in 𝔅(V).
#[derive(Clone, Debug)]
pub struct CommutingFamily {
    members: Vec<NCPolynomial>,
    ratios: Vec<Vec<RootFraction>>,
}

impl CommutingFamily {
    /// Checks every relation `u_i u_j = r_ij u_j u_i` with the oracle.
    pub fn new(
        members: Vec<NCPolynomial>,
        ratios: Vec<Vec<RootFraction>>,
        oracle: &NicholsOracle,
    ) -> Result<Self> {
        let k = members.len();
        if k == 0 || ratios.len() != k || ratios.iter().any(|row| row.len() != k) {
            return Err(Error::Precondition(
                "ratios must form a k×k table for k ≥ 1 members".into(),
            ));
        }
        for (i, u) in members.iter().enumerate() {
            if u.homogeneous_degree()?.is_none() {
                return Err(Error::Precondition(format!("member {} is zero", i + 1)));
            }
            for (j, v) in members.iter().enumerate() {
                if u == v && !ratios[i][j].is_one() {
                    return Err(Error::Precondition(format!(
                        "r_{{{},{}}} must be 1 for equal members",
                        i + 1,
                        j + 1
                    )));
                }
                let r = CycNumber::embed(ratios[i][j]);
                let rel = &(u * v) - &(v * u).scale(&r);
                if !oracle.is_zero(&rel)? {
                    return Err(Error::Precondition(format!(
                        "u_{} u_{} ≠ r u_{} u_{} in the Nichols algebra",
                        i + 1,
                        j + 1,
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
        Ok(CommutingFamily { members, ratios })
    }

    /// The generators `x_{i_1}, …, x_{i_k}` (0-based indices) of a quantum
    /// linear space, with `r = p_ij` for distinct letters and 1 otherwise.
    pub fn from_generators(indices: &[usize], oracle: &NicholsOracle) -> Result<Self> {
        let b = oracle.braiding();
        if let Some(&bad) = indices.iter().find(|&&i| i >= b.rank()) {
            return Err(Error::Precondition(format!(
                "generator {} outside the rank",
                bad + 1
            )));
        }
        let members = indices
            .iter()
            .map(|&i| NCPolynomial::generator(b.rank(), i))
            .collect();
        let ratios = indices
            .iter()
            .map(|&i| {
                indices
                    .iter()
                    .map(|&j| {
                        if i == j {
                            RootFraction::ONE
                        } else {
                            b.entry(i, j)
                        }
                    })
                    .collect()
            })
            .collect();
        Self::new(members, ratios, oracle)
    }

    pub fn members(&self) -> &[NCPolynomial] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// `r_{u_i, u_j}`, 0-based.
    pub fn ratio(&self, i: usize, j: usize) -> RootFraction {
        self.ratios[i][j]
    }

    /// `r_{u_t, u_{t+1} ⋯ u_m}` as the product of the single ratios.
    fn ratio_against_tail(&self, t: usize) -> RootFraction {
        (t + 1..self.len()).fold(RootFraction::ONE, |acc, s| acc * self.ratios[t][s])
    }

    fn product(&self, factors: impl IntoIterator<Item = usize>) -> NCPolynomial {
        let rank = self.members[0].rank();
        factors
            .into_iter()
            .fold(NCPolynomial::one(rank), |acc, i| &acc * &self.members[i])
    }
}

fn minus_one(r: RootFraction) -> CycNumber {
    &CycNumber::embed(r) - &CycNumber::one()
}

/// A scalar multiple of a product of family members.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForm {
    pub coefficient: CycNumber,
    pub product: NCPolynomial,
    /// `±1` such that the bracket equals `bracket_sign · coefficient · product`.
    pub bracket_sign: i64,
}

impl ClosedForm {
    /// `bracket_sign · coefficient · product` as a polynomial.
    pub fn value(&self) -> NCPolynomial {
        let c = self
            .coefficient
            .scale(&num_rational::BigRational::from_integer(
                self.bracket_sign.into(),
            ));
        self.product.scale(&c)
    }
}

/// `[u_1, …, u_m]⁻ ~ ∏_{t<m} (r_{u_t, u_{t+1}⋯u_m} − 1) · u_m ⋯ u_1`.
pub fn closed_form_left_normed(f: &CommutingFamily) -> ClosedForm {
    let m = f.len();
    let coefficient = (0..m.saturating_sub(1)).fold(CycNumber::one(), |acc, t| {
        &acc * &minus_one(f.ratio_against_tail(t))
    });
    ClosedForm {
        coefficient,
        product: f.product((0..m).rev()),
        bracket_sign: if m % 2 == 1 { 1 } else { -1 },
    }
}

/// The ladder `l_k^{m_k} ⋯ l_2^{m_2} u_1`, `l_i = [u_i, ·]⁻`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LadderForm {
    pub form: ClosedForm,
    /// `λ_2, …, λ_k` with `λ_i = r_{i,1} r_{i,2}^{m_2} ⋯ r_{i,i−1}^{m_{i−1}} − 1`.
    pub lambdas: Vec<CycNumber>,
}

/// Closed form of the ladder for exponents `m_2, …, m_k` (`exponents[0] = m_2`).
pub fn ladder_closed_form(f: &CommutingFamily, exponents: &[u32]) -> Result<LadderForm> {
    let k = f.len();
    if exponents.len() + 1 != k {
        return Err(Error::Precondition(format!(
            "{k} members need {} exponents",
            k - 1
        )));
    }
    let mult = |j: usize| if j == 0 { 1 } else { exponents[j - 1] as i64 };
    let lambdas: Vec<CycNumber> = (1..k)
        .map(|i| {
            minus_one((0..i).fold(RootFraction::ONE, |acc, j| acc * f.ratio(i, j).pow(mult(j))))
        })
        .collect();
    let mut coefficient = CycNumber::one();
    for (lambda, &m) in lambdas.iter().zip(exponents) {
        coefficient = &coefficient * &lambda.pow(m as i64)?;
    }
    let total: u32 = exponents.iter().sum();
    let factors = std::iter::once(0)
        .chain((1..k).flat_map(|i| std::iter::repeat_n(i, exponents[i - 1] as usize)));
    Ok(LadderForm {
        form: ClosedForm {
            coefficient,
            product: f.product(factors),
            bracket_sign: if total.is_multiple_of(2) { 1 } else { -1 },
        },
        lambdas,
    })
}

/// The ladder computed by iterated brackets, for comparison with the closed form.
pub fn ladder_expansion(f: &CommutingFamily, exponents: &[u32]) -> NCPolynomial {
    let mut acc = f.members[0].clone();
    for (i, &m) in exponents.iter().enumerate() {
        for _ in 0..m {
            acc = minus_bracket(&f.members[i + 1], &acc);
        }
    }
    acc
}

/// Membership of `u_1^{α_1} u_2^{α_2}` in `𝔏⁻(V)` for two generators, by the
/// divisibility criterion `ord(r_{u_2,u_1}) ∤ α_1` or `ord(r_{u_1,u_2}) ∤ α_2`.
///
/// When an exponent is 0 the monomial is a pure power, which lies in
/// `𝔏⁻(V)` only as the generator itself.
pub fn rank2_membership(
    alpha1: u32,
    alpha2: u32,
    f: &CommutingFamily,
    oracle: &NicholsOracle,
) -> Result<bool> {
    let letters: Vec<usize> = f
        .members
        .iter()
        .filter_map(|u| match u.terms().iter().next() {
            Some((w, c)) if u.len() == 1 && w.len() == 1 && c.is_one() => Some(w.letters()[0]),
            _ => None,
        })
        .collect();
    if f.len() != 2 || letters.len() != 2 {
        return Err(Error::Precondition(
            "the family must consist of two generators".into(),
        ));
    }
    let monomial = Word::letter(letters[0])
        .power(alpha1 as usize)
        .concat(&Word::letter(letters[1]).power(alpha2 as usize));
    if oracle.is_zero_word(&monomial)? {
        return Err(Error::Precondition(format!(
            "u_1^{alpha1} u_2^{alpha2} vanishes in the Nichols algebra"
        )));
    }
    if alpha1 == 0 || alpha2 == 0 {
        return Ok(alpha1 + alpha2 == 1);
    }
    let ord21 = Order::Finite(f.ratio(1, 0).order());
    let ord12 = Order::Finite(f.ratio(0, 1).order());
    Ok(!ord21.divides(alpha1 as u64) || !ord12.divides(alpha2 as u64))
}

/// Exponent pairs `(α_2, α_1)` of the monomials `x_2^{α_2} x_1^{α_1}` spanning
/// `𝔏⁻(V)` of a rank-2 quantum linear space, generators included.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Rank2Basis {
    pub pairs: Vec<(u64, u64)>,
    pub truncated: bool,
}

/// `N_i = ord(p_ii)`, or infinite when `p_ii = 1`.
fn nilpotency(b: &BraidingMatrix, i: usize) -> Order {
    let d = b.entry(i, i);
    if d.is_one() {
        Order::Infinite
    } else {
        Order::Finite(d.order())
    }
}

/// The basis of `𝔏⁻(V)` for a rank-2 quantum linear space, sorted by `(α_2, α_1)`.
/// `degree_cap` bounds `α_1 + α_2` when some `N_i` is infinite.
pub fn lminus_rank2_basis(b: &BraidingMatrix, degree_cap: u64) -> Result<Rank2Basis> {
    if b.rank() != 2 || !b.is_quantum_linear() {
        return Err(Error::Precondition(
            "a rank-2 quantum linear space is required".into(),
        ));
    }
    let (n1, n2) = (nilpotency(b, 0), nilpotency(b, 1));
    let truncated = n1 == Order::Infinite || n2 == Order::Infinite;
    let below = |n: Order, a: u64| match n {
        Order::Finite(n) => a < n,
        Order::Infinite => true,
    };
    let ord12 = Order::Finite(b.entry(0, 1).order());
    let top = match (n1, n2) {
        (Order::Finite(a), Order::Finite(c)) => a + c,
        _ => degree_cap,
    };
    let mut pairs = vec![(0, 1), (1, 0)];
    for a2 in 1..=top {
        for a1 in 1..=top {
            if !below(n2, a2) || !below(n1, a1) || (truncated && a1 + a2 > degree_cap) {
                continue;
            }
            if !ord12.divides(a2) || !ord12.divides(a1) {
                pairs.push((a2, a1));
            }
        }
    }
    pairs.sort();
    Ok(Rank2Basis { pairs, truncated })
}

/// `x_2^{α_2} x_1^{α_1}` for a basis pair.
pub fn rank2_monomial(pair: (u64, u64)) -> Word {
    let (a2, a1) = pair;
    Word::letter(1)
        .power(a2 as usize)
        .concat(&Word::letter(0).power(a1 as usize))
}

/// `𝔏(V) = 𝔏⁻(V)` exactly when every `p_ii² = 1` and every off-diagonal entry is 1.
pub fn prop_6_3_decide(b: &BraidingMatrix) -> bool {
    let n = b.rank();
    (0..n).all(|i| b.entry(i, i).pow(2).is_one())
        && (0..n).all(|i| (0..n).all(|j| i == j || b.entry(i, j).is_one()))
}

/// `𝔅(V) = F ⊕ 𝔏⁻(V)`: all `p_ii = −1`, a quantum linear space, and every set
/// of at least two generators admits an ordering whose left-normed bracket
/// coefficient `∏_t (p_{h_t, h_{t+1}⋯h_m} − 1)` is nonzero.
pub fn prop_6_4_decide(b: &BraidingMatrix) -> bool {
    let n = b.rank();
    if (0..n).any(|i| b.entry(i, i) != RootFraction::MINUS_ONE) || !b.is_quantum_linear() {
        return false;
    }
    (2..=n).all(|m| {
        (0..n).rev().combinations(m).all(|subset| {
            subset.iter().copied().permutations(m).any(|order| {
                (0..m - 1).all(|t| {
                    let r = (t + 1..m).fold(RootFraction::ONE, |acc, s| {
                        acc * b.entry(order[t], order[s])
                    });
                    !r.is_one()
                })
            })
        })
    })
}

/// One word where connectivity and membership disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionViolation {
    pub word: Word,
    pub connected: bool,
    pub in_lie: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CriterionReport {
    pub checked: usize,
    pub skipped_zero: usize,
    pub skipped_proviso: usize,
    pub violations: Vec<CriterionViolation>,
}

impl CriterionReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// For every nonzero word of length `1..=max_len` outside the single-letter
/// proviso, checks that connectivity in Γ(V) matches membership in 𝔏(V).
pub fn verify_connectivity_criterion(
    oracle: &NicholsOracle,
    max_len: usize,
) -> Result<CriterionReport> {
    let b = oracle.braiding();
    let g = pure_graph(b);
    let mut report = CriterionReport::default();
    for len in 1..=max_len {
        for w in words_of_length(b.rank(), len) {
            if oracle.is_zero_word(&w)? {
                report.skipped_zero += 1;
                continue;
            }
            let sup = support(&w);
            if sup.len() == 1 && b.entry(w.letters()[0], w.letters()[0]).is_one() {
                report.skipped_proviso += 1;
                continue;
            }
            report.checked += 1;
            let connected = is_connected(&w, &g);
            let in_lie = oracle.in_lie_word(&w, LieVariant::Braided)?;
            if connected != in_lie {
                report.violations.push(CriterionViolation {
                    word: w,
                    connected,
                    in_lie,
                });
            }
        }
    }
    Ok(report)
}

/// A full binary bracketing of positions `0..m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bracketing {
    Leaf(usize),
    Node(Box<Bracketing>, Box<Bracketing>),
}

impl Bracketing {
    /// All bracketings of the positions `lo..hi`.
    pub fn all(lo: usize, hi: usize) -> Vec<Bracketing> {
        if hi - lo == 1 {
            return vec![Bracketing::Leaf(lo)];
        }
        let mut out = Vec::new();
        for split in lo + 1..hi {
            for left in Self::all(lo, split) {
                for right in Self::all(split, hi) {
                    out.push(Bracketing::Node(Box::new(left.clone()), Box::new(right)));
                }
            }
        }
        out
    }

    /// Evaluates with `[·, ·]⁻` on the letters of `w`.
    pub fn evaluate(&self, w: &Word, rank: usize) -> NCPolynomial {
        match self {
            Bracketing::Leaf(p) => NCPolynomial::generator(rank, w.letters()[*p]),
            Bracketing::Node(a, b) => minus_bracket(&a.evaluate(w, rank), &b.evaluate(w, rank)),
        }
    }
}

impl fmt::Display for Bracketing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bracketing::Leaf(p) => write!(f, "h{}", p + 1),
            Bracketing::Node(a, b) => write!(f, "[{a}, {b}]"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BracketingViolation {
    pub word: Word,
    pub bracketing: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BracketingReport {
    pub words: usize,
    pub bracketings: usize,
    pub violations: Vec<BracketingViolation>,
}

impl BracketingReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Longest word whose bracketings are enumerated.
pub const MAX_BRACKETING_LEN: usize = 5;

/// Every `[·,·]⁻` bracketing of a word whose support is weakly disconnected in
/// Γ_a(V) (disconnected, or a single letter) vanishes in 𝔅(V).
pub fn verify_prop_6_5(oracle: &NicholsOracle, max_len: usize) -> Result<BracketingReport> {
    if max_len > MAX_BRACKETING_LEN {
        return Err(Error::CapExceeded(format!(
            "bracketings are enumerated up to length {MAX_BRACKETING_LEN}"
        )));
    }
    let b = oracle.braiding();
    let g = aug_graph(b);
    let mut report = BracketingReport::default();
    for len in 2..=max_len {
        let trees = Bracketing::all(0, len);
        for w in words_of_length(b.rank(), len) {
            let sup = support(&w);
            if sup.len() != 1 && g.is_connected_set(&sup) {
                continue;
            }
            report.words += 1;
            for t in &trees {
                report.bracketings += 1;
                if !oracle.is_zero(&t.evaluate(&w, b.rank()))? {
                    report.violations.push(BracketingViolation {
                        word: w.clone(),
                        bracketing: t.to_string(),
                    });
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::left_normed_minus;
    use crate::braiding::{cartan_braiding, CartanSpec, CartanType};

    fn m(rows: &[&[&str]]) -> BraidingMatrix {
        BraidingMatrix::from_strs(rows).unwrap()
    }

    fn example_68() -> BraidingMatrix {
        m(&[&["1/3", "1/2"], &["1/2", "1/5"]])
    }

    #[test]
    fn left_normed_examples() {
        let b = m(&[&["1/3", "1/2"], &["1/2", "1/5"]]);
        let o = NicholsOracle::new(&b);
        let f = CommutingFamily::from_generators(&[0, 1], &o).unwrap();
        let c = closed_form_left_normed(&f);
        assert_eq!(c.coefficient, CycNumber::from_integer(-2));
        assert_eq!(c.product, NCPolynomial::word(2, Word::new(vec![1, 0])));
        assert!(o
            .is_zero(&(&left_normed_minus(f.members()).unwrap() - &c.value()))
            .unwrap());

        let trivial = m(&[&["1/3", "0/1"], &["0/1", "1/5"]]);
        let o = NicholsOracle::new(&trivial);
        let f = CommutingFamily::from_generators(&[0, 1], &o).unwrap();
        assert!(closed_form_left_normed(&f).coefficient.is_zero());
    }

    #[test]
    fn family_relations_are_checked() {
        let a2 = cartan_braiding(&CartanSpec::with_order(CartanType::A, 2, 3).unwrap());
        let o = NicholsOracle::new(&a2);
        assert!(CommutingFamily::from_generators(&[0, 1], &o).is_err());
        assert!(CommutingFamily::from_generators(&[0, 0], &o).is_ok());
    }

    #[test]
    fn ladder_examples() {
        let b = example_68();
        let o = NicholsOracle::new(&b);
        let f = CommutingFamily::from_generators(&[0, 1], &o).unwrap();
        let l = ladder_closed_form(&f, &[1]).unwrap();
        assert_eq!(l.lambdas, vec![minus_one(f.ratio(1, 0))]);
        let l = ladder_closed_form(&f, &[3]).unwrap();
        assert_eq!(l.form.coefficient, CycNumber::from_integer(-8));
        assert!(o
            .is_zero(&(&ladder_expansion(&f, &[3]) - &l.form.value()))
            .unwrap());
        let trivial = m(&[&["1/3", "0/1"], &["0/1", "1/5"]]);
        let o = NicholsOracle::new(&trivial);
        let f = CommutingFamily::from_generators(&[0, 1], &o).unwrap();
        assert!(ladder_closed_form(&f, &[2])
            .unwrap()
            .form
            .coefficient
            .is_zero());
    }

    #[test]
    fn rank2_membership_examples() {
        let b = example_68();
        let o = NicholsOracle::new(&b);
        let f = CommutingFamily::from_generators(&[1, 0], &o).unwrap();
        assert!(rank2_membership(1, 1, &f, &o).unwrap());
        assert!(!rank2_membership(2, 2, &f, &o).unwrap());
        assert!(rank2_membership(0, 1, &f, &o).unwrap());
        assert!(rank2_membership(0, 3, &f, &o).is_err());
    }

    #[test]
    fn rank2_basis_examples() {
        let basis = lminus_rank2_basis(&example_68(), 10).unwrap();
        assert_eq!(
            basis.pairs,
            vec![
                (0, 1),
                (1, 0),
                (1, 1),
                (1, 2),
                (2, 1),
                (3, 1),
                (3, 2),
                (4, 1)
            ]
        );
        assert!(!basis.truncated);
        let signs = m(&[&["1/2", "0/1"], &["0/1", "1/2"]]);
        assert_eq!(
            lminus_rank2_basis(&signs, 10).unwrap().pairs,
            vec![(0, 1), (1, 0)]
        );
        let small = m(&[&["1/2", "1/2"], &["1/2", "1/2"]]);
        assert_eq!(
            lminus_rank2_basis(&small, 10).unwrap().pairs,
            vec![(0, 1), (1, 0), (1, 1)]
        );
        let free = m(&[&["0/1", "1/2"], &["1/2", "1/3"]]);
        let basis = lminus_rank2_basis(&free, 4).unwrap();
        assert!(basis.truncated);
        assert!(basis.pairs.iter().all(|(a, c)| a + c <= 4));
        assert!(lminus_rank2_basis(
            &cartan_braiding(&CartanSpec::with_order(CartanType::A, 2, 3).unwrap()),
            4
        )
        .is_err());
        assert_eq!(rank2_monomial((2, 1)), Word::new(vec![1, 1, 0]));
    }

    #[test]
    fn prop63_examples() {
        assert!(prop_6_3_decide(&m(&[&["1/2", "0/1"], &["0/1", "1/2"]])));
        assert!(!prop_6_3_decide(&cartan_braiding(
            &CartanSpec::with_order(CartanType::A, 2, 3).unwrap()
        )));
        assert!(!prop_6_3_decide(&m(&[&["1/2", "1/2"], &["1/2", "1/2"]])));
    }

    #[test]
    fn prop64_examples() {
        assert!(prop_6_4_decide(&m(&[&["1/2", "1/4"], &["3/4", "1/2"]])));
        assert!(!prop_6_4_decide(&example_68()));
        assert!(!prop_6_4_decide(&m(&[&["1/2", "0/1"], &["0/1", "1/2"]])));
    }

    #[test]
    fn connectivity_examples() {
        let ql = m(&[&["1/3", "1/4"], &["3/4", "1/3"]]);
        let r = verify_connectivity_criterion(&NicholsOracle::new(&ql), 3).unwrap();
        assert!(r.passed() && r.checked > 0);
        let a2 = cartan_braiding(&CartanSpec::with_order(CartanType::A, 2, 3).unwrap());
        let r = verify_connectivity_criterion(&NicholsOracle::new(&a2), 3).unwrap();
        assert!(r.passed());
        let free = m(&[&["0/1"]]);
        let r = verify_connectivity_criterion(&NicholsOracle::new(&free), 3).unwrap();
        assert_eq!((r.checked, r.skipped_proviso), (0, 3));
    }

    #[test]
    fn bracketing_examples() {
        assert_eq!(Bracketing::all(0, 4).len(), 5);
        assert_eq!(Bracketing::all(0, 5).len(), 14);
        let trivial = m(&[&["1/3", "0/1"], &["0/1", "1/4"]]);
        let r = verify_prop_6_5(&NicholsOracle::new(&trivial), 4).unwrap();
        assert!(r.passed() && r.words > 0);
        let chained = m(&[&["1/3", "1/4"], &["3/4", "1/4"]]);
        let r = verify_prop_6_5(&NicholsOracle::new(&chained), 4).unwrap();
        assert!(r.passed());
    }
}
