//! Zero tests and coordinates in the Nichols algebra 𝔅(V).
//!
//! An element of positive degree vanishes in 𝔅(V) exactly when every skew
//! derivation `⟨y_k, ·⟩` kills it. Iterating, the values `⟨y_{i_1}⋯y_{i_d}, u⟩`
//! over all y-words of the right content are faithful linear coordinates of
//! the image of a homogeneous `u`. Membership in the Lie subspaces is then
//! exact linear algebra over ℚ(ζ_L) on these coordinates.
//!
//! Y-words act right to left: the entry at `(i_1, …, i_d)` is
//! `⟨y_{i_1}, ⟨y_{i_2}, … ⟨y_{i_d}, u⟩ …⟩⟩`.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::rc::Rc;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::{braided_bracket, minus_bracket, NCPolynomial};
use crate::braiding::{BraidingMatrix, DegreeVector};
use crate::error::{Error, Result};
use crate::graphs::Word;
use crate::linalg::EchelonBasis;
use crate::scalars::{CycNumber, Order, RootFraction};

pub const DEFAULT_DEGREE_CAP: usize = 6;
pub const DEFAULT_RANK_CAP: usize = 4;

/// Which bracket generates the Lie subspace.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LieVariant {
    /// `[x, y] = yx − p_yx xy`, generating 𝔏(V).
    Braided,
    /// `[x, y]⁻ = yx − xy`, generating 𝔏⁻(V).
    Minus,
}

impl FromStr for LieVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "braided" => Ok(LieVariant::Braided),
            "minus" => Ok(LieVariant::Minus),
            other => Err(Error::Parse(format!("unknown bracket variant {other:?}"))),
        }
    }
}

impl fmt::Display for LieVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LieVariant::Braided => "braided",
            LieVariant::Minus => "minus",
        })
    }
}

/// Nonzero pairing values `⟨y-word, u⟩` of a homogeneous element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingCoordinates {
    degree: DegreeVector,
    entries: BTreeMap<Word, CycNumber>,
}

impl PairingCoordinates {
    pub fn degree(&self) -> &DegreeVector {
        &self.degree
    }

    pub fn entries(&self) -> &BTreeMap<Word, CycNumber> {
        &self.entries
    }

    pub fn get(&self, y: &Word) -> CycNumber {
        self.entries.get(y).cloned().unwrap_or_else(CycNumber::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// The least y-word with a nonzero value.
    pub fn witness(&self) -> Option<&Word> {
        self.entries.keys().next()
    }
}

/// Y-words of a fixed content, with the index maps used by the recursion.
struct DegreeSpace {
    words: Vec<Word>,
    /// `append[k][j]`: index of `words(α − e_k)[j] ++ [k]`, when `α_k > 0`.
    append: Vec<Option<Vec<usize>>>,
}

/// A basis of one homogeneous block of a Lie subspace.
struct LieBlock {
    polys: Vec<NCPolynomial>,
    echelon: EchelonBasis,
}

/// Pairing computations for one braiding, with memoized word coordinates.
///
/// Not shareable across threads; build one oracle per worker.
pub struct NicholsOracle {
    b: BraidingMatrix,
    conductor: usize,
    degree_cap: usize,
    zero: CycNumber,
    spaces: RefCell<HashMap<DegreeVector, Rc<DegreeSpace>>>,
    word_coords: RefCell<HashMap<Word, Rc<Vec<CycNumber>>>>,
    block_dims: RefCell<HashMap<DegreeVector, usize>>,
    lie: RefCell<HashMap<(LieVariant, DegreeVector), Rc<LieBlock>>>,
}

/// Degree vectors of total degree `d` in `n` variables, lexicographically descending.
pub fn compositions(d: usize, n: usize) -> Vec<DegreeVector> {
    fn go(d: i64, n: usize, prefix: &mut Vec<i64>, out: &mut Vec<DegreeVector>) {
        if n == 1 {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in (0..=d).rev() {
            prefix.push(first);
            go(d - first, n - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(d as i64, n, &mut Vec::new(), &mut out);
    }
    out
}

/// All words of content `alpha`, lexicographically sorted.
pub fn words_of_content(alpha: &[i64]) -> Vec<Word> {
    fn go(left: &mut Vec<i64>, cur: &mut Vec<usize>, out: &mut Vec<Word>) {
        if left.iter().all(|&c| c == 0) {
            out.push(Word::new(cur.clone()));
            return;
        }
        for k in 0..left.len() {
            if left[k] > 0 {
                left[k] -= 1;
                cur.push(k);
                go(left, cur, out);
                cur.pop();
                left[k] += 1;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut alpha.to_vec(), &mut Vec::new(), &mut out);
    out
}

/// All words of length `len` over `n` letters, lexicographically.
pub fn words_of_length(n: usize, len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| (0..n).map(move |k| w.concat(&Word::letter(k))))
            .collect();
    }
    out
}

impl NicholsOracle {
    pub fn new(b: &BraidingMatrix) -> Self {
        Self::with_degree_cap(b, DEFAULT_DEGREE_CAP)
    }

    pub fn with_degree_cap(b: &BraidingMatrix, degree_cap: usize) -> Self {
        let conductor = b.conductor();
        NicholsOracle {
            b: b.clone(),
            conductor,
            degree_cap,
            zero: CycNumber::zero()
                .rebase(conductor)
                .expect("1 divides the conductor"),
            spaces: RefCell::new(HashMap::new()),
            word_coords: RefCell::new(HashMap::new()),
            block_dims: RefCell::new(HashMap::new()),
            lie: RefCell::new(HashMap::new()),
        }
    }

    pub fn braiding(&self) -> &BraidingMatrix {
        &self.b
    }

    pub fn rank(&self) -> usize {
        self.b.rank()
    }

    pub fn degree_cap(&self) -> usize {
        self.degree_cap
    }

    fn root(&self, r: RootFraction) -> CycNumber {
        CycNumber::embed_at(r, self.conductor).expect("braiding roots divide the conductor")
    }

    fn space(&self, alpha: &[i64]) -> Rc<DegreeSpace> {
        if let Some(s) = self.spaces.borrow().get(alpha) {
            return s.clone();
        }
        let words = words_of_content(alpha);
        let index: HashMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let mut append = Vec::with_capacity(alpha.len());
        for k in 0..alpha.len() {
            if alpha[k] == 0 {
                append.push(None);
                continue;
            }
            let mut lower = alpha.to_vec();
            lower[k] -= 1;
            let map = words_of_content(&lower)
                .iter()
                .map(|v| index[&v.concat(&Word::letter(k))])
                .collect();
            append.push(Some(map));
        }
        let s = Rc::new(DegreeSpace { words, append });
        self.spaces.borrow_mut().insert(alpha.to_vec(), s.clone());
        s
    }

    fn check_word(&self, w: &Word) -> Result<()> {
        if w.min_rank() > self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                found: w.min_rank(),
            });
        }
        Ok(())
    }

    fn check_poly(&self, p: &NCPolynomial) -> Result<()> {
        if p.rank() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                found: p.rank(),
            });
        }
        Ok(())
    }

    /// `⟨y_k, w⟩` as a list of (word, coefficient) pairs, one per occurrence of `k`.
    fn derive_word(&self, k: usize, w: &Word) -> Vec<(Word, RootFraction)> {
        let mut out = Vec::new();
        let mut prefix = RootFraction::ONE;
        for (t, &j) in w.letters().iter().enumerate() {
            if j == k {
                out.push((w.without(t), prefix));
            }
            prefix = prefix * self.b.entry(k, j).inv();
        }
        out
    }

    /// `⟨y_k, p⟩` in the free algebra (0-based `k`).
    pub fn skew_derive(&self, k: usize, p: &NCPolynomial) -> Result<NCPolynomial> {
        self.check_poly(p)?;
        if k >= self.rank() {
            return Err(Error::Parse(format!(
                "generator index {} outside 1..={}",
                k + 1,
                self.rank()
            )));
        }
        let mut out = NCPolynomial::zero(self.rank());
        for (w, c) in p.terms() {
            for (sub, r) in self.derive_word(k, w) {
                out.add_term(sub, c * &self.root(r));
            }
        }
        Ok(out)
    }

    /// `⟨y_k^l, p⟩`, by iterating the skew derivation.
    pub fn power_pairing(&self, k: usize, l: usize, p: &NCPolynomial) -> Result<NCPolynomial> {
        let mut cur = p.clone();
        for _ in 0..l {
            cur = self.skew_derive(k, &cur)?;
        }
        Ok(cur)
    }

    /// Dense coordinates of a word, indexed by the y-words of its content.
    fn word_coordinates(&self, w: &Word) -> Rc<Vec<CycNumber>> {
        if let Some(c) = self.word_coords.borrow().get(w) {
            return c.clone();
        }
        let alpha = w.degree(self.rank());
        let space = self.space(&alpha);
        let mut out = vec![self.zero.clone(); space.words.len()];
        if w.is_empty() {
            out[0] = CycNumber::one().rebase(self.conductor).expect("conductor");
        }
        for k in 0..self.rank() {
            let Some(map) = &space.append[k] else {
                continue;
            };
            for (sub, r) in self.derive_word(k, w) {
                let c = self.root(r);
                let sub_coords = self.word_coordinates(&sub);
                for (j, v) in sub_coords.iter().enumerate() {
                    if !v.is_zero() {
                        out[map[j]] = &out[map[j]] + &(&c * v);
                    }
                }
            }
        }
        let rc = Rc::new(out);
        self.word_coords.borrow_mut().insert(w.clone(), rc.clone());
        rc
    }

    /// Dense coordinates of a homogeneous element of degree `alpha`.
    fn dense(&self, p: &NCPolynomial, alpha: &[i64]) -> Vec<CycNumber> {
        let dim = self.space(alpha).words.len();
        let mut out = vec![self.zero.clone(); dim];
        for (w, c) in p.terms() {
            let wc = self.word_coordinates(w);
            for (x, v) in out.iter_mut().zip(wc.iter()) {
                if !v.is_zero() {
                    *x = &*x + &(c * v);
                }
            }
        }
        out
    }

    fn degree_of(&self, p: &NCPolynomial) -> Result<DegreeVector> {
        Ok(p.homogeneous_degree()?
            .unwrap_or_else(|| vec![0; self.rank()]))
    }

    /// Pairing coordinates of a homogeneous element.
    pub fn coordinates(&self, p: &NCPolynomial) -> Result<PairingCoordinates> {
        self.check_poly(p)?;
        let alpha = self.degree_of(p)?;
        let space = self.space(&alpha);
        let dense = self.dense(p, &alpha);
        let entries = space
            .words
            .iter()
            .zip(dense)
            .filter(|(_, v)| !v.is_zero())
            .map(|(w, v)| (w.clone(), v))
            .collect();
        Ok(PairingCoordinates {
            degree: alpha,
            entries,
        })
    }

    /// Whether `p` maps to zero in 𝔅(V); non-homogeneous input is split by degree.
    pub fn is_zero(&self, p: &NCPolynomial) -> Result<bool> {
        self.check_poly(p)?;
        for (alpha, block) in p.degree_blocks() {
            if self.dense(&block, &alpha).iter().any(|v| !v.is_zero()) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_zero_word(&self, w: &Word) -> Result<bool> {
        self.check_word(w)?;
        Ok(self.word_coordinates(w).iter().all(CycNumber::is_zero))
    }

    /// Whether the homogeneous `target` lies in the span of `gens` in 𝔅(V).
    pub fn span_membership(&self, target: &NCPolynomial, gens: &[NCPolynomial]) -> Result<bool> {
        self.check_poly(target)?;
        let degree = self.degree_of(target)?;
        let mut e = EchelonBasis::new();
        for g in gens {
            self.check_poly(g)?;
            match g.homogeneous_degree()? {
                None => continue,
                Some(d) if d == degree || target.is_zero() => e.insert(self.dense(g, &d)),
                Some(_) => return Err(Error::DegreeMismatch),
            };
        }
        if target.is_zero() {
            return Ok(true);
        }
        Ok(e.contains(self.dense(target, &degree)))
    }

    /// `dim 𝔅(V)_α` for a degree vector.
    pub fn nichols_block_dimension(&self, alpha: &[i64]) -> usize {
        if let Some(&d) = self.block_dims.borrow().get(alpha) {
            return d;
        }
        let words = self.space(alpha).words.clone();
        let mut e = EchelonBasis::new();
        for w in &words {
            e.insert(self.word_coordinates(w).as_ref().clone());
        }
        let d = e.rank();
        self.block_dims.borrow_mut().insert(alpha.to_vec(), d);
        d
    }

    /// `dim 𝔅(V)_d` for a total degree.
    pub fn nichols_dimension(&self, d: usize) -> usize {
        compositions(d, self.rank())
            .iter()
            .map(|a| self.nichols_block_dimension(a))
            .sum()
    }

    fn check_cap(&self, d: usize) -> Result<()> {
        if d > self.degree_cap {
            return Err(Error::CapExceeded(format!(
                "degree {d} exceeds the cap {}",
                self.degree_cap
            )));
        }
        Ok(())
    }

    fn lie_block(&self, alpha: &[i64], variant: LieVariant) -> Rc<LieBlock> {
        let key = (variant, alpha.to_vec());
        if let Some(b) = self.lie.borrow().get(&key) {
            return b.clone();
        }
        let n = self.rank();
        let total: i64 = alpha.iter().sum();
        let mut block = LieBlock {
            polys: Vec::new(),
            echelon: EchelonBasis::new(),
        };
        if total == 1 {
            let i = alpha.iter().position(|&a| a == 1).expect("unit degree");
            let x = NCPolynomial::generator(n, i);
            block.echelon.insert(self.dense(&x, alpha));
            block.polys.push(x);
        } else if total > 1 {
            let full = self.nichols_block_dimension(alpha);
            'splits: for beta in sub_degrees(alpha) {
                if block.polys.len() == full {
                    break;
                }
                let gamma: DegreeVector = alpha.iter().zip(&beta).map(|(a, b)| a - b).collect();
                let left = self.lie_block(&beta, variant);
                let right = self.lie_block(&gamma, variant);
                for a in &left.polys {
                    for c in &right.polys {
                        let br = match variant {
                            LieVariant::Braided => {
                                braided_bracket(a, c, &self.b).expect("homogeneous blocks")
                            }
                            LieVariant::Minus => minus_bracket(a, c),
                        };
                        if block.echelon.insert(self.dense(&br, alpha)) {
                            block.polys.push(br);
                            if block.polys.len() == full {
                                break 'splits;
                            }
                        }
                    }
                }
            }
        }
        let rc = Rc::new(block);
        self.lie.borrow_mut().insert(key, rc.clone());
        rc
    }

    /// A basis of the degree-`d` part of 𝔏(V) or 𝔏⁻(V), block by block.
    pub fn lie_space_basis(&self, d: usize, variant: LieVariant) -> Result<Vec<NCPolynomial>> {
        self.check_cap(d)?;
        Ok(compositions(d, self.rank())
            .iter()
            .flat_map(|a| self.lie_block(a, variant).polys.clone())
            .collect())
    }

    /// Dimension of one homogeneous block of the Lie subspace.
    pub fn lie_block_dimension(&self, alpha: &[i64], variant: LieVariant) -> Result<usize> {
        self.check_cap(alpha.iter().sum::<i64>() as usize)?;
        Ok(self.lie_block(alpha, variant).polys.len())
    }

    pub fn lie_dimension(&self, d: usize, variant: LieVariant) -> Result<usize> {
        self.check_cap(d)?;
        Ok(compositions(d, self.rank())
            .iter()
            .map(|a| self.lie_block(a, variant).polys.len())
            .sum())
    }

    /// Membership of a homogeneous element in the Lie subspace.
    pub fn in_lie(&self, p: &NCPolynomial, variant: LieVariant) -> Result<bool> {
        self.check_poly(p)?;
        let Some(alpha) = p.homogeneous_degree()? else {
            return Ok(true);
        };
        let d = alpha.iter().sum::<i64>() as usize;
        self.check_cap(d)?;
        if d == 0 {
            return Ok(false);
        }
        let block = self.lie_block(&alpha, variant);
        Ok(block.echelon.contains(self.dense(p, &alpha)))
    }

    pub fn in_lie_word(&self, w: &Word, variant: LieVariant) -> Result<bool> {
        self.check_word(w)?;
        self.in_lie(&NCPolynomial::word(self.rank(), w.clone()), variant)
    }
}

/// Degree vectors `β` with `0 ≤ β ≤ α`, `β ≠ 0`, `β ≠ α`.
fn sub_degrees(alpha: &[i64]) -> Vec<DegreeVector> {
    let mut out: Vec<DegreeVector> = vec![Vec::new()];
    for &a in alpha {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=a).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out.retain(|b| b.iter().any(|&x| x != 0) && b.as_slice() != alpha);
    out
}

/// `⟨y_k, p⟩` for a braiding, without a long-lived oracle.
pub fn skew_derive(k: usize, p: &NCPolynomial, b: &BraidingMatrix) -> Result<NCPolynomial> {
    NicholsOracle::new(b).skew_derive(k, p)
}

pub fn is_zero_in_nichols(p: &NCPolynomial, b: &BraidingMatrix) -> Result<bool> {
    NicholsOracle::new(b).is_zero(p)
}

pub fn coordinates(p: &NCPolynomial, b: &BraidingMatrix) -> Result<PairingCoordinates> {
    NicholsOracle::new(b).coordinates(p)
}

pub fn in_lie(w: &Word, b: &BraidingMatrix, variant: LieVariant) -> Result<bool> {
    NicholsOracle::new(b).in_lie_word(w, variant)
}

/// Every letter `i` of `w` has `p_ii = 1` or `ord(p_ii) > deg_i(w)`; this
/// guarantees `w ≠ 0` in 𝔅(V).
pub fn nonzero_by_order_criterion(w: &Word, b: &BraidingMatrix) -> bool {
    let deg = w.degree(b.rank().max(w.min_rank()));
    deg.iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .all(|(i, &c)| {
            let r = b.entry(i, i);
            r.is_one() || r.order() > c as u64
        })
}

/// `ord(p_ii)` as an [`Order`], infinite never occurring for roots of unity
/// but kept for uniformity with field elements.
pub fn diagonal_order(b: &BraidingMatrix, i: usize) -> Order {
    Order::Finite(b.entry(i, i).order())
}
