//! Positive roots of the finite Cartan types, PBW block counts, the
//! dimension recursions and printed closed forms for the braided Lie algebra,
//! and an independent count of connected PBW monomials.
//!
//! Blocks are 1-based vertex intervals `[i..k]` of the labelled diagram.
//! `|B_{i;k}|` counts nonzero exponent vectors over the roots supported in the
//! block; `|L_{1;k}|` counts those with connected support.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::braiding::{cartan_braiding, BraidingMatrix, CartanSpec, CartanType, DegreeVector};
use crate::error::{Error, Result};
use crate::graphs::VertexGraph;

/// Positive roots in simple-root coordinates with their heights `ord χ(α, α)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    spec: CartanSpec,
    positive_roots: Vec<DegreeVector>,
    heights: Vec<u64>,
}

impl RootSystem {
    pub fn spec(&self) -> &CartanSpec {
        &self.spec
    }

    pub fn roots(&self) -> &[DegreeVector] {
        &self.positive_roots
    }

    pub fn heights(&self) -> &[u64] {
        &self.heights
    }

    pub fn len(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positive_roots.is_empty()
    }

    /// Support of root `idx` as a bit mask over 0-based vertices.
    pub fn support_mask(&self, idx: usize) -> u64 {
        mask_of(&self.positive_roots[idx])
    }
}

fn mask_of(v: &[i64]) -> u64 {
    v.iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .fold(0, |m, (i, _)| m | (1 << i))
}

/// Closure from the simple roots: `β + α_i` is a root iff `r − ⟨β, α_i^∨⟩ > 0`,
/// where `r` is the largest `k` with `β − kα_i` a root.
pub fn positive_roots(spec: &CartanSpec) -> RootSystem {
    let n = spec.rank();
    let a = spec.cartan_matrix();
    let simple: Vec<DegreeVector> = (0..n).map(|i| crate::braiding::unit_degree(n, i)).collect();
    let mut known: std::collections::HashSet<DegreeVector> = simple.iter().cloned().collect();
    let mut roots = simple.clone();
    let mut frontier = simple;
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for beta in &frontier {
            for i in 0..n {
                let mut r = 0;
                loop {
                    let mut lower = beta.clone();
                    lower[i] -= r + 1;
                    if known.contains(&lower) {
                        r += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..n).map(|j| a[i][j] * beta[j]).sum();
                if r - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        roots.push(up.clone());
                        next.push(up);
                    }
                }
            }
        }
        frontier = next;
    }
    roots.sort_by(|x, y| {
        let hx: i64 = x.iter().sum();
        let hy: i64 = y.iter().sum();
        hx.cmp(&hy).then_with(|| y.cmp(x))
    });
    let b = cartan_braiding(spec);
    let heights = roots
        .iter()
        .map(|r| b.chi(r, r).expect("matching rank").order())
        .collect();
    RootSystem {
        spec: *spec,
        positive_roots: roots,
        heights,
    }
}

/// The classical number of positive roots of the type.
pub fn classical_root_count(spec: &CartanSpec) -> usize {
    let n = spec.rank();
    match spec.kind() {
        CartanType::A => n * (n + 1) / 2,
        CartanType::B | CartanType::C => n * n,
        CartanType::D => n * n - n,
        CartanType::E6 => 36,
        CartanType::G2 => 6,
    }
}

fn big(n: u64) -> BigInt {
    BigInt::from(n)
}

fn power(base: u64, exp: i64) -> BigInt {
    assert!(exp >= 0, "negative exponent {exp}");
    num_traits::pow(big(base), exp as usize)
}

/// `C²_k = k(k−1)/2`, taken as 0 for `k < 2`.
pub fn choose2(k: i64) -> i64 {
    if k < 2 {
        0
    } else {
        k * (k - 1) / 2
    }
}

/// Positive roots of the E6 sub-diagram on vertices `i..=k`.
fn e6_block_roots(i: usize, k: usize) -> i64 {
    match k {
        1..=4 => choose2((k - i + 2) as i64),
        5 => [20, 12, 6, 2, 1][i - 1],
        6 => [36, 20, 10, 4, 3, 1][i - 1],
        _ => unreachable!("E6 has six vertices"),
    }
}

/// `|B_{i;k}|` from the per-type exponent formulas; 0 when `i > k`.
///
/// Long and short roots of B, C and G2 have heights `ord(q^2)` (resp.
/// `ord(q^3)`) and `ord(q)`, which gives the parity branches.
pub fn count_b(spec: &CartanSpec, i: usize, k: usize) -> Result<BigInt> {
    let n = spec.rank();
    if i == 0 || k > n {
        return Err(Error::InvalidSpec(format!(
            "block [{i}..{k}] outside 1..={n}"
        )));
    }
    if i > k {
        return Ok(BigInt::zero());
    }
    let big_n = spec.order();
    let half = big_n / num_integer::gcd(big_n, 2);
    let chain = choose2((k - i + 2) as i64);
    let m = (n - i + 1) as i64;
    let total = match spec.kind() {
        CartanType::A => power(big_n, chain),
        CartanType::B if k < n => power(half, chain),
        CartanType::B => power(half, m * m - m) * power(big_n, m),
        CartanType::C if k < n => power(big_n, chain),
        CartanType::C => power(big_n, m * m - m) * power(half, m),
        CartanType::D if k < n => power(big_n, chain),
        CartanType::D if m == 1 => power(big_n, 1),
        CartanType::D => power(big_n, m * m - m),
        CartanType::E6 => power(big_n, e6_block_roots(i, k)),
        CartanType::G2 => {
            let long = big_n / num_integer::gcd(big_n, 3);
            match (i, k) {
                (1, 1) => power(big_n, 1),
                (2, 2) => power(long, 1),
                _ => power(big_n, 3) * power(long, 3),
            }
        }
    };
    Ok(total - 1)
}

/// `|B_{i;k}|` as `∏ h_α − 1` over the roots supported in the block.
pub fn count_b_from_roots(rs: &RootSystem, i: usize, k: usize) -> BigInt {
    if i > k {
        return BigInt::zero();
    }
    let block: u64 = (i - 1..k).fold(0, |m, v| m | (1 << v));
    let product = (0..rs.len())
        .filter(|&r| rs.support_mask(r) & !block == 0)
        .fold(BigInt::one(), |acc, r| acc * big(rs.heights[r]));
    product - 1
}

/// `Σ_j (−1)^j u_j` over chains `n = n_0 > n_1 > ⋯ > n_j ≥ 1` with gaps at
/// least 2, each weighted `head(n_j) ∏_t link(n_t, n_{t−1})`.
pub fn alternating_chain(
    n: usize,
    head: &dyn Fn(usize) -> BigInt,
    link: &dyn Fn(usize, usize) -> BigInt,
) -> BigInt {
    fn walk(
        last: usize,
        weight: BigInt,
        positive: bool,
        head: &dyn Fn(usize) -> BigInt,
        link: &dyn Fn(usize, usize) -> BigInt,
    ) -> BigInt {
        let here = &weight * head(last);
        let mut total = if positive { here } else { -here };
        for next in 1..=last.saturating_sub(2) {
            total += walk(next, &weight * link(next, last), !positive, head, link);
        }
        total
    }
    walk(n, BigInt::one(), true, head, link)
}

/// `|L_{1;t}|` of the chain `1..t` via the alternating expansion over `|B|` blocks.
fn chain_l(spec: &CartanSpec, t: usize) -> Result<BigInt> {
    if t == 0 {
        return Ok(BigInt::zero());
    }
    let b = |i: usize, k: usize| count_b(spec, i, k).expect("block inside the diagram");
    let head = |k: usize| b(1, k);
    let link = |a: usize, top: usize| b(a + 2, top) - b(a + 3, top);
    Ok(alternating_chain(t, &head, &link))
}

/// `|L_{1;n}|` by the block recursion of the diagram shape.
///
/// Chains (A, B, C, G2) subtract `|L_{1;i}| (|B_{i+2;n}| − |B_{i+3;n}|)`.
/// D_n treats the fork at `n−2`: the last chain term is replaced by
/// `|L_{1;n−3}| |B_{n−1;n}|` and `|B_{n−1;n−1}| |B_{n;n}|` is removed. E6 uses
/// the branch recursion at vertex 3.
pub fn dim_l_recursive(spec: &CartanSpec) -> Result<BigInt> {
    let n = spec.rank();
    let b = |i: usize, k: usize| count_b(spec, i, k);
    let l = |t: usize| chain_l(spec, t);
    match spec.kind() {
        CartanType::A | CartanType::B | CartanType::C | CartanType::G2 => {
            let mut total = b(1, n)?;
            for i in 1..=n.saturating_sub(2) {
                total -= l(i)? * (b(i + 2, n)? - b(i + 3, n)?);
            }
            Ok(total)
        }
        CartanType::D => {
            let mut total = b(1, n)? - b(n - 1, n - 1)? * b(n, n)?;
            for i in 1..=n - 4 {
                total -= l(i)? * (b(i + 2, n)? - b(i + 3, n)?);
            }
            total -= l(n - 3)? * b(n - 1, n)?;
            Ok(total)
        }
        CartanType::E6 => {
            let mut total = b(1, n)?;
            for i in 2..=n - 4 {
                total -= (l(i)? - l(i - 1)?) * b(i + 2, n)?;
            }
            total -= l(1)? * b(3, n)?;
            total -= (l(n - 2)? - l(n - 4)?) * b(n, n)?;
            total -= b(n - 2, n - 2)? * (b(n - 1, n)? - b(n, n)?);
            Ok(total)
        }
    }
}

/// The D_n recursion exactly as printed, with the sum running to `n − 3`.
pub fn dim_l_recursive_d_printed(spec: &CartanSpec) -> Result<BigInt> {
    if spec.kind() != CartanType::D {
        return Err(Error::Unsupported(
            "the printed fork recursion is stated for D_n".into(),
        ));
    }
    let n = spec.rank();
    let b = |i: usize, k: usize| count_b(spec, i, k);
    let mut total = b(1, n)? - b(n - 1, n - 1)? * b(n, n)? - chain_l(spec, n - 3)? * b(n - 1, n)?;
    for i in 1..=n - 3 {
        total -= chain_l(spec, i)? * (b(i + 2, n)? - b(i + 3, n)?);
    }
    Ok(total)
}

/// Evaluates `lead + Σ_{j=1}^{j_max} (−1)^j Σ_{n_1=1}^{n1_max} Σ_{n_2=1}^{n_1−2} ⋯
/// head(n_j) inner(n_j, n_{j−1}) ⋯ inner(n_2, n_1) tail(n_1)`.
fn printed_chain(
    lead: BigInt,
    j_max: i64,
    n1_max: i64,
    head: &dyn Fn(i64) -> BigInt,
    inner: &dyn Fn(i64, i64) -> BigInt,
    tail: &dyn Fn(i64) -> BigInt,
) -> BigInt {
    fn descend(
        levels: i64,
        cur: i64,
        head: &dyn Fn(i64) -> BigInt,
        inner: &dyn Fn(i64, i64) -> BigInt,
    ) -> BigInt {
        if levels == 0 {
            return head(cur);
        }
        (1..=cur - 2).fold(BigInt::zero(), |acc, next| {
            acc + inner(next, cur) * descend(levels - 1, next, head, inner)
        })
    }
    let mut total = lead;
    for j in 1..=j_max {
        let s = (1..=n1_max).fold(BigInt::zero(), |acc, n1| {
            acc + tail(n1) * descend(j - 1, n1, head, inner)
        });
        if j % 2 == 0 {
            total += s;
        } else {
            total -= s;
        }
    }
    total
}

/// The printed A_n closed form as a function of `n` and `N`.
fn closed_a(n: i64, big_n: u64) -> BigInt {
    let np = |e: i64| power(big_n, e);
    let head = |a: i64| np(choose2(a + 1)) - 1;
    let inner = |a: i64, b: i64| np(choose2(b - a)) - np(choose2(b - a - 1));
    let tail = |a: i64| inner(a, n);
    printed_chain(
        np(choose2(n + 1)) - 1,
        (n - 1) / 2,
        n - 2,
        &head,
        &inner,
        &tail,
    )
}

/// The E6 closed form written with `|L_{1;1}|, |L_{1;2}|, |L_{1;4}|` substituted.
pub fn dim_l_closed_e6_display(big_n: u64) -> BigInt {
    let np = |e: i64| power(big_n, e);
    let (l1, l2, l4) = (closed_a(1, big_n), closed_a(2, big_n), closed_a(4, big_n));
    np(36)
        - 1
        - (&l2 - &l1) * (np(1) * np(3) - 1)
        - (np(1) - 1) * (np(choose2(5)) - 1)
        - (&l4 - &l2) * (np(1) - 1)
        - (np(1) - 1) * (np(3) - np(1))
}

/// The printed closed form for `dim 𝔏(V)`, evaluated literally.
pub fn dim_l_closed(spec: &CartanSpec) -> Result<BigInt> {
    let n = spec.rank() as i64;
    let big_n = spec.order();
    let half = big_n / 2;
    let even = big_n.is_multiple_of(2);
    let np = |e: i64| power(big_n, e);
    let hp = |e: i64| power(half, e);
    let e1 = |a: i64| (n - a - 1).pow(2) - n + a + 1;
    let e2 = |a: i64| (n - a - 2).pow(2) - n + a + 2;
    let a_head = |a: i64| np(choose2(a + 1)) - 1;
    let a_inner = |a: i64, b: i64| np(choose2(b - a)) - np(choose2(b - a - 1));
    let j_max = (n - 1) / 2;
    Ok(match (spec.kind(), even) {
        (CartanType::A, _) => closed_a(n, big_n),
        (CartanType::B | CartanType::C, false) => {
            let tail = |a: i64| np(e1(a)) - np(e2(a));
            printed_chain(np(n * n) - 1, j_max, n - 2, &a_head, &a_inner, &tail)
        }
        (CartanType::B, true) => {
            let head = |a: i64| hp(choose2(a + 1)) - 1;
            let inner = |a: i64, b: i64| hp(choose2(b - a)) - hp(choose2(b - a - 1));
            let tail = |a: i64| hp(e1(a)) * np(n - a - 1) - hp(e2(a)) * np(n - a - 2);
            printed_chain(
                hp(n * n - n) * np(n) - 1,
                j_max,
                n - 2,
                &head,
                &inner,
                &tail,
            )
        }
        (CartanType::C, true) => {
            let tail = |a: i64| np(e1(a)) * hp(n - a - 1) - np(e2(a)) * hp(n - a - 2);
            printed_chain(
                hp(n) * np(n * n - n) - 1,
                j_max,
                n - 2,
                &a_head,
                &a_inner,
                &tail,
            )
        }
        (CartanType::D, _) => {
            let mut total = np(n * n - n) - 1 - (np(1) - 1) * (np(1) - 1);
            for i in 1..=n - 3 {
                let tail = |a: i64| np(choose2(i - a)) - np(choose2(i - a - 1));
                let brace = printed_chain(
                    np(choose2(i + 1)) - 1,
                    (i - 1) / 2,
                    n - 2,
                    &a_head,
                    &a_inner,
                    &tail,
                );
                total -= brace * (np(e1(i)) - np(e2(i)));
            }
            let tail = |a: i64| np(choose2(n - 3 - a)) - np(choose2(n - 4 - a));
            let brace = printed_chain(
                np(choose2(n - 2)) - 1,
                (n - 4) / 2,
                n - 5,
                &a_head,
                &a_inner,
                &tail,
            );
            total - brace * (np(2) - 1)
        }
        (CartanType::E6, false) => {
            np(24) - 1 - (np(1) - 1) * (np(3) - np(1)) - (np(3) - 1) * (np(1) - 1)
        }
        (CartanType::E6, true) => {
            hp(12) * np(12) - 1 - (hp(1) - 1) * (np(3) - np(1)) - (hp(3) - 1) * (np(1) - 1)
        }
        (CartanType::G2, _) => {
            if !big_n.is_multiple_of(3) {
                np(6) - 1
            } else {
                power(big_n / 3, 3) * np(3) - 1
            }
        }
    })
}

/// The Dynkin diagram of the type as a graph on `0..n`.
pub fn diagram_graph(spec: &CartanSpec) -> VertexGraph {
    VertexGraph::new(0..spec.rank(), spec.diagram_edges())
}

/// Number of PBW monomials with connected nonempty support, by Möbius
/// inversion over vertex subsets.
///
/// `f(S) = ∏_{supp α ⊆ S} h_α` counts exponent vectors supported inside `S`;
/// inverting gives those whose support is exactly `S`.
pub fn count_connected_oracle(spec: &CartanSpec) -> BigInt {
    let rs = positive_roots(spec);
    let g = diagram_graph(spec);
    count_connected(&rs_supports(&rs), spec.rank(), &g)
}

fn rs_supports(rs: &RootSystem) -> Vec<(u64, u64)> {
    (0..rs.len())
        .map(|r| (rs.support_mask(r), rs.heights[r]))
        .collect()
}

fn count_connected(roots: &[(u64, u64)], n: usize, g: &VertexGraph) -> BigInt {
    let subsets = 1u64 << n;
    let f: Vec<BigInt> = (0..subsets)
        .map(|s| {
            roots
                .iter()
                .filter(|(m, _)| m & !s == 0)
                .fold(BigInt::one(), |acc, (_, h)| acc * big(*h))
        })
        .collect();
    let mut total = BigInt::zero();
    for s in 1..subsets {
        let set = (0..n).filter(|v| s >> v & 1 == 1).collect();
        if !g.is_connected_set(&set) {
            continue;
        }
        let mut exact = BigInt::zero();
        let mut t = s;
        loop {
            let sign_negative = (s & !t).count_ones() % 2 == 1;
            if sign_negative {
                exact -= &f[t as usize];
            } else {
                exact += &f[t as usize];
            }
            if t == 0 {
                break;
            }
            t = (t - 1) & s;
        }
        total += exact;
    }
    total
}

/// A PBW monomial `∏ [u_α]^{k_α}` recorded by its exponents on positive roots.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct PbwMonomial {
    #[serde(serialize_with = "ser_exponents")]
    exponents: BTreeMap<DegreeVector, u64>,
}

/// Serialized as `[{"root": [..], "power": k}, ..]`.
fn ser_exponents<S: serde::Serializer>(
    m: &BTreeMap<DegreeVector, u64>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Factor<'a> {
        root: &'a DegreeVector,
        power: u64,
    }
    s.collect_seq(m.iter().map(|(root, &power)| Factor { root, power }))
}

impl PbwMonomial {
    pub fn new(exponents: BTreeMap<DegreeVector, u64>) -> Self {
        PbwMonomial {
            exponents: exponents.into_iter().filter(|(_, k)| *k > 0).collect(),
        }
    }

    pub fn exponents(&self) -> &BTreeMap<DegreeVector, u64> {
        &self.exponents
    }

    pub fn support_mask(&self) -> u64 {
        self.exponents.keys().fold(0, |m, r| m | mask_of(r))
    }

    pub fn degree(&self) -> DegreeVector {
        let n = self.exponents.keys().next().map_or(0, Vec::len);
        let mut d = vec![0; n];
        for (root, k) in &self.exponents {
            for (x, r) in d.iter_mut().zip(root) {
                *x += r * *k as i64;
            }
        }
        d
    }

    pub fn total_degree(&self) -> i64 {
        self.degree().iter().sum()
    }
}

/// The result of a basis enumeration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PbwEnumeration {
    pub monomials: Vec<PbwMonomial>,
    /// Some height was infinite and the degree cap cut the list.
    pub truncated: bool,
    /// Every diagonal entry differs from 1, as the basis theorem assumes for
    /// single-letter supports.
    pub hypothesis_holds: bool,
}

/// All connected PBW monomials over the abstract root vectors of a Cartan type.
/// `limit` bounds the number of exponent vectors visited.
pub fn enumerate_cartan(spec: &CartanSpec, limit: usize) -> Result<PbwEnumeration> {
    let rs = positive_roots(spec);
    let space = rs
        .heights
        .iter()
        .fold(BigInt::one(), |acc, h| acc * big(*h));
    if space > BigInt::from(limit) {
        return Err(Error::CapExceeded(format!(
            "{space} exponent vectors exceed the limit {limit}"
        )));
    }
    let g = diagram_graph(spec);
    let mut out = Vec::new();
    let mut digits = vec![0u64; rs.len()];
    loop {
        let mut pos = 0;
        loop {
            if pos == digits.len() {
                out.sort();
                return Ok(PbwEnumeration {
                    monomials: out,
                    truncated: false,
                    hypothesis_holds: true,
                });
            }
            digits[pos] += 1;
            if digits[pos] < rs.heights[pos] {
                break;
            }
            digits[pos] = 0;
            pos += 1;
        }
        let m = PbwMonomial::new(
            rs.roots()
                .iter()
                .cloned()
                .zip(digits.iter().copied())
                .collect(),
        );
        let set = (0..spec.rank())
            .filter(|v| m.support_mask() >> v & 1 == 1)
            .collect();
        if g.is_connected_set(&set) {
            out.push(m);
        }
    }
}

/// Connected PBW monomials of a quantum linear space: the powers `x_i^k` with
/// `1 ≤ k < ord(p_ii)`. Entries `p_ii = 1` have infinite height and need a cap.
pub fn enumerate_quantum_linear(
    b: &BraidingMatrix,
    degree_cap: Option<usize>,
) -> Result<PbwEnumeration> {
    if !b.is_quantum_linear() {
        return Err(Error::Precondition(
            "the matrix is not a quantum linear space".into(),
        ));
    }
    let n = b.rank();
    let mut monomials = Vec::new();
    let mut truncated = false;
    let mut hypothesis_holds = true;
    for i in 0..n {
        let diag = b.entry(i, i);
        let bound = if diag.is_one() {
            hypothesis_holds = false;
            truncated = true;
            degree_cap.ok_or_else(|| {
                Error::CapExceeded(format!(
                    "x_{} has infinite height; pass a degree cap",
                    i + 1
                ))
            })? as u64
        } else {
            let h = diag.order() - 1;
            match degree_cap {
                Some(cap) if (cap as u64) < h => {
                    truncated = true;
                    cap as u64
                }
                _ => h,
            }
        };
        for k in 1..=bound {
            let root = crate::braiding::unit_degree(n, i);
            monomials.push(PbwMonomial::new(BTreeMap::from([(root, k)])));
        }
    }
    monomials.sort();
    Ok(PbwEnumeration {
        monomials,
        truncated,
        hypothesis_holds,
    })
}

/// Which computation `dim` reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DimMethod {
    Closed,
    Recursive,
    Oracle,
}

impl std::str::FromStr for DimMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "closed" => Ok(DimMethod::Closed),
            "recursive" => Ok(DimMethod::Recursive),
            "oracle" => Ok(DimMethod::Oracle),
            other => Err(Error::Parse(format!("unknown method {other:?}"))),
        }
    }
}

pub fn dim_l(spec: &CartanSpec, method: DimMethod) -> Result<BigInt> {
    match method {
        DimMethod::Closed => dim_l_closed(spec),
        DimMethod::Recursive => dim_l_recursive(spec),
        DimMethod::Oracle => Ok(count_connected_oracle(spec)),
    }
}

/// One row of a three-way dimension comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimRow {
    #[serde(rename = "type")]
    pub kind: CartanType,
    pub rank: usize,
    #[serde(rename = "N")]
    pub order: u64,
    #[serde(serialize_with = "ser_big")]
    pub closed: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub recursive: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub oracle: BigInt,
    pub agree: bool,
}

/// Large integers are written as JSON numbers when they fit in 64 bits and as
/// decimal strings otherwise.
pub fn ser_big<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    match i64::try_from(v) {
        Ok(x) => s.serialize_i64(x),
        Err(_) => s.serialize_str(&v.to_string()),
    }
}

pub fn dim_row(spec: &CartanSpec) -> Result<DimRow> {
    let closed = dim_l_closed(spec)?;
    let recursive = dim_l_recursive(spec)?;
    let oracle = count_connected_oracle(spec);
    Ok(DimRow {
        kind: spec.kind(),
        rank: spec.rank(),
        order: spec.order(),
        agree: closed == recursive && recursive == oracle,
        closed,
        recursive,
        oracle,
    })
}

/// Smallest rank allowed for the type.
pub fn min_rank(kind: CartanType) -> usize {
    match kind {
        CartanType::A => 1,
        CartanType::B => 2,
        CartanType::C => 3,
        CartanType::D => 4,
        CartanType::E6 => 6,
        CartanType::G2 => 2,
    }
}

/// Comparison rows for all valid ranks up to `max_rank` and `N` in `2..=max_order`.
pub fn dim_table(kind: CartanType, max_rank: usize, max_order: u64) -> Result<Vec<DimRow>> {
    let ranks: Vec<usize> = match kind {
        CartanType::E6 => vec![6],
        CartanType::G2 => vec![2],
        _ => (min_rank(kind)..=max_rank).collect(),
    };
    let mut rows = Vec::new();
    for rank in ranks {
        for order in 2..=max_order {
            rows.push(dim_row(&CartanSpec::with_order(kind, rank, order)?)?);
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(kind: CartanType, rank: usize, order: u64) -> CartanSpec {
        CartanSpec::with_order(kind, rank, order).unwrap()
    }

    #[test]
    fn root_counts_match_classical_values() {
        let cases = [
            (CartanType::A, 1),
            (CartanType::A, 4),
            (CartanType::B, 2),
            (CartanType::B, 4),
            (CartanType::C, 3),
            (CartanType::C, 5),
            (CartanType::D, 4),
            (CartanType::D, 6),
            (CartanType::E6, 6),
            (CartanType::G2, 2),
        ];
        for (kind, rank) in cases {
            let s = spec(kind, rank, 5);
            assert_eq!(
                positive_roots(&s).len(),
                classical_root_count(&s),
                "{kind}{rank}"
            );
        }
    }

    #[test]
    fn root_examples() {
        let rs = positive_roots(&spec(CartanType::A, 2, 4));
        assert_eq!(rs.roots(), &[vec![1, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(rs.heights(), &[4, 4, 4]);
        let g2 = positive_roots(&spec(CartanType::G2, 2, 5));
        let mut got: Vec<_> = g2.roots().to_vec();
        got.sort();
        let mut want = vec![
            vec![1, 0],
            vec![0, 1],
            vec![1, 1],
            vec![2, 1],
            vec![3, 1],
            vec![3, 2],
        ];
        want.sort();
        assert_eq!(got, want);
        assert_eq!(
            positive_roots(&spec(CartanType::A, 1, 3)).roots(),
            &[vec![1]]
        );
    }

    #[test]
    fn heights_follow_root_length() {
        let rs = positive_roots(&spec(CartanType::B, 3, 4));
        let long = rs.heights().iter().filter(|&&h| h == 2).count();
        let short = rs.heights().iter().filter(|&&h| h == 4).count();
        assert_eq!((long, short), (6, 3));
        let rs = positive_roots(&spec(CartanType::G2, 2, 6));
        let mut hs = rs.heights().to_vec();
        hs.sort();
        assert_eq!(hs, vec![2, 2, 2, 6, 6, 6]);
    }

    #[test]
    fn block_formulas_match_root_products() {
        for kind in CartanType::ALL {
            let ranks: Vec<usize> = match kind {
                CartanType::E6 => vec![6],
                CartanType::G2 => vec![2],
                _ => (min_rank(kind)..=5).collect(),
            };
            for rank in ranks {
                for order in 2..=6 {
                    let s = spec(kind, rank, order);
                    let rs = positive_roots(&s);
                    for i in 1..=rank {
                        for k in i..=rank {
                            assert_eq!(
                                count_b(&s, i, k).unwrap(),
                                count_b_from_roots(&rs, i, k),
                                "{s} [{i}..{k}]"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn count_b_examples() {
        assert_eq!(
            count_b(&spec(CartanType::A, 2, 2), 1, 2).unwrap(),
            BigInt::from(7)
        );
        assert_eq!(
            count_b(&spec(CartanType::A, 3, 2), 3, 2).unwrap(),
            BigInt::zero()
        );
        assert_eq!(
            count_b(&spec(CartanType::B, 3, 3), 1, 3).unwrap(),
            power(3, 9) - 1
        );
        assert!(count_b(&spec(CartanType::A, 3, 2), 1, 4).is_err());
    }

    #[test]
    fn recursion_examples() {
        assert_eq!(
            dim_l_recursive(&spec(CartanType::A, 2, 2)).unwrap(),
            BigInt::from(7)
        );
        assert_eq!(
            dim_l_recursive(&spec(CartanType::A, 3, 2)).unwrap(),
            BigInt::from(62)
        );
        assert_eq!(
            dim_l_recursive(&spec(CartanType::A, 1, 3)).unwrap(),
            BigInt::from(2)
        );
    }

    #[test]
    fn closed_examples() {
        assert_eq!(
            dim_l_closed(&spec(CartanType::G2, 2, 2)).unwrap(),
            BigInt::from(63)
        );
        assert_eq!(
            dim_l_closed(&spec(CartanType::G2, 2, 3)).unwrap(),
            BigInt::from(26)
        );
        assert_eq!(
            dim_l_closed(&spec(CartanType::A, 2, 3)).unwrap(),
            BigInt::from(26)
        );
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(
            count_connected_oracle(&spec(CartanType::A, 2, 2)),
            BigInt::from(7)
        );
        assert_eq!(
            count_connected_oracle(&spec(CartanType::A, 3, 2)),
            BigInt::from(62)
        );
        for order in 2..=6 {
            assert_eq!(
                count_connected_oracle(&spec(CartanType::A, 1, order)),
                BigInt::from(order - 1)
            );
        }
    }

    #[test]
    fn chain_recursion_and_expansion_agree() {
        for rank in 1..=7 {
            for order in 2..=4 {
                let s = spec(CartanType::A, rank, order);
                let b = |i: usize, k: usize| count_b(&s, i, k).unwrap();
                let mut memo: Vec<BigInt> = vec![BigInt::zero()];
                for t in 1..=rank {
                    let mut v = b(1, t);
                    for i in 1..=t.saturating_sub(2) {
                        v -= &memo[i] * (b(i + 2, t) - b(i + 3, t));
                    }
                    memo.push(v);
                }
                assert_eq!(chain_l(&s, rank).unwrap(), memo[rank]);
            }
        }
    }

    #[test]
    fn enumeration_examples() {
        let ql = BraidingMatrix::from_strs(&[&["1/2", "1/3"], &["2/3", "1/2"]]).unwrap();
        let e = enumerate_quantum_linear(&ql, None).unwrap();
        assert_eq!(e.monomials.len(), 2);
        assert!(!e.truncated);
        let a2 = enumerate_cartan(&spec(CartanType::A, 2, 2), 1000).unwrap();
        assert_eq!(a2.monomials.len(), 7);
        let rank1 = BraidingMatrix::from_strs(&[&["1/3"]]).unwrap();
        let e = enumerate_quantum_linear(&rank1, None).unwrap();
        let degrees: Vec<i64> = e.monomials.iter().map(PbwMonomial::total_degree).collect();
        assert_eq!(degrees, vec![1, 2]);
        let free = BraidingMatrix::from_strs(&[&["0/1"]]).unwrap();
        assert!(enumerate_quantum_linear(&free, None).is_err());
        let e = enumerate_quantum_linear(&free, Some(3)).unwrap();
        assert!(e.truncated && !e.hypothesis_holds);
        assert_eq!(e.monomials.len(), 3);
    }
}
