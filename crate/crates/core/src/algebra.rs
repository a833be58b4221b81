//! Noncommutative polynomials over cyclotomic fields and the two brackets.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::braiding::{BraidingMatrix, DegreeVector};
use crate::error::{Error, Result};
use crate::graphs::Word;
use crate::oracle::NicholsOracle;
use crate::scalars::CycNumber;

/// A finite linear combination of words in `x_1, …, x_n`.
///
/// Terms are kept in canonical word order and zero coefficients are never
/// stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NCPolynomial {
    rank: usize,
    terms: BTreeMap<Word, CycNumber>,
}

impl NCPolynomial {
    pub fn zero(rank: usize) -> Self {
        NCPolynomial {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        Self::word(rank, Word::empty())
    }

    /// The generator `x_{i+1}` (0-based `i`).
    pub fn generator(rank: usize, i: usize) -> Self {
        Self::word(rank, Word::letter(i))
    }

    pub fn word(rank: usize, w: Word) -> Self {
        Self::monomial(rank, w, CycNumber::one())
    }

    pub fn monomial(rank: usize, w: Word, c: CycNumber) -> Self {
        let mut p = Self::zero(rank);
        p.add_term(w, c);
        p
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> &BTreeMap<Word, CycNumber> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Zero in the free algebra (not in the quotient).
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &Word) -> CycNumber {
        self.terms.get(w).cloned().unwrap_or_else(CycNumber::zero)
    }

    pub fn add_term(&mut self, w: Word, c: CycNumber) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.terms.remove(&w);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn scale(&self, c: &CycNumber) -> Self {
        if c.is_zero() {
            return Self::zero(self.rank);
        }
        NCPolynomial {
            rank: self.rank,
            terms: self.terms.iter().map(|(w, k)| (w.clone(), k * c)).collect(),
        }
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                found: other.rank,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = Self::zero(self.rank);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.concat(b), x * y);
            }
        }
        Ok(out)
    }

    /// Splits into homogeneous components keyed by degree vector.
    pub fn degree_blocks(&self) -> BTreeMap<DegreeVector, NCPolynomial> {
        let mut out: BTreeMap<DegreeVector, NCPolynomial> = BTreeMap::new();
        for (w, c) in &self.terms {
            out.entry(w.degree(self.rank))
                .or_insert_with(|| Self::zero(self.rank))
                .add_term(w.clone(), c.clone());
        }
        out
    }

    /// The common degree of all terms: `None` for the zero polynomial, an
    /// error when terms have different degrees.
    pub fn homogeneous_degree(&self) -> Result<Option<DegreeVector>> {
        let mut it = self.terms.keys().map(|w| w.degree(self.rank));
        let Some(first) = it.next() else {
            return Ok(None);
        };
        if it.all(|d| d == first) {
            Ok(Some(first))
        } else {
            Err(Error::NonHomogeneous)
        }
    }

    pub fn is_homogeneous(&self, d: &[i64]) -> bool {
        self.terms.keys().all(|w| w.degree(self.rank) == d)
    }
}

impl<'a> Add<&'a NCPolynomial> for &'a NCPolynomial {
    type Output = NCPolynomial;

    /// Panics on rank mismatch; use [`NCPolynomial::try_add`] to recover.
    fn add(self, rhs: &NCPolynomial) -> NCPolynomial {
        self.try_add(rhs).expect("polynomials of equal rank")
    }
}

impl<'a> Sub<&'a NCPolynomial> for &'a NCPolynomial {
    type Output = NCPolynomial;

    fn sub(self, rhs: &NCPolynomial) -> NCPolynomial {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a NCPolynomial> for &'a NCPolynomial {
    type Output = NCPolynomial;

    fn mul(self, rhs: &NCPolynomial) -> NCPolynomial {
        self.try_mul(rhs).expect("polynomials of equal rank")
    }
}

impl Neg for &NCPolynomial {
    type Output = NCPolynomial;

    fn neg(self) -> NCPolynomial {
        NCPolynomial {
            rank: self.rank,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for NCPolynomial {
    /// Uses the grammar of [`crate::text`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            let s = c.to_string();
            let compound = s[1..].contains(" + ") || s[1..].contains(" - ");
            let (neg, mag) = match (compound, s.strip_prefix('-')) {
                (false, Some(rest)) => (true, rest.to_string()),
                (false, None) => (false, s),
                (true, _) => (false, format!("({s})")),
            };
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if mag == "1" {
                write!(f, "[{w}]")?;
            } else {
                write!(f, "{mag} * [{w}]")?;
            }
        }
        Ok(())
    }
}

/// `[u, v] = v·u − p_vu·u·v` for homogeneous `u`, `v`.
pub fn braided_bracket(
    u: &NCPolynomial,
    v: &NCPolynomial,
    b: &BraidingMatrix,
) -> Result<NCPolynomial> {
    u.check_rank(v)?;
    let (Some(du), Some(dv)) = (u.homogeneous_degree()?, v.homogeneous_degree()?) else {
        return Ok(NCPolynomial::zero(u.rank));
    };
    let p_vu = CycNumber::embed(b.chi(&dv, &du)?);
    Ok(&(v * u) - &(u * v).scale(&p_vu))
}

/// `[u, v]⁻ = v·u − u·v`.
pub fn minus_bracket(u: &NCPolynomial, v: &NCPolynomial) -> NCPolynomial {
    &(v * u) - &(u * v)
}

/// `[u_1, …, u_m]⁻ = [u_1, [u_2, …, [u_{m−1}, u_m]⁻ …]⁻]⁻`.
pub fn left_normed_minus(us: &[NCPolynomial]) -> Result<NCPolynomial> {
    let (last, rest) = us
        .split_last()
        .ok_or_else(|| Error::Precondition("left-normed bracket of an empty list".into()))?;
    Ok(rest
        .iter()
        .rev()
        .fold(last.clone(), |acc, u| minus_bracket(u, &acc)))
}

/// Right-nested braided bracket `[u_1, [u_2, …, [u_{m−1}, u_m] …]]`.
pub fn left_normed_braided(us: &[NCPolynomial], b: &BraidingMatrix) -> Result<NCPolynomial> {
    let (last, rest) = us
        .split_last()
        .ok_or_else(|| Error::Precondition("left-normed bracket of an empty list".into()))?;
    let mut acc = last.clone();
    for u in rest.iter().rev() {
        acc = braided_bracket(u, &acc, b)?;
    }
    Ok(acc)
}

fn require_homogeneous(xs: &[&NCPolynomial]) -> Result<Vec<DegreeVector>> {
    xs.iter()
        .map(|x| {
            x.homogeneous_degree()
                .map(|d| d.unwrap_or_else(|| vec![0; x.rank()]))
        })
        .collect()
}

/// Both sides of the braided Jacobi identity
/// `[[u,v],w] = [u,[v,w]] + p_vw⁻¹ [[u,w],v] + (p_wv − p_vw⁻¹) v·[u,w]`.
pub fn jacobi_sides(
    u: &NCPolynomial,
    v: &NCPolynomial,
    w: &NCPolynomial,
    b: &BraidingMatrix,
) -> Result<(NCPolynomial, NCPolynomial)> {
    let degs = require_homogeneous(&[u, v, w])?;
    let (dv, dw) = (&degs[1], &degs[2]);
    let p_vw = CycNumber::embed(b.chi(dv, dw)?);
    let p_wv = CycNumber::embed(b.chi(dw, dv)?);
    let p_vw_inv = p_vw.inv()?;
    let lhs = braided_bracket(&braided_bracket(u, v, b)?, w, b)?;
    let uw = braided_bracket(u, w, b)?;
    let rhs = &(&braided_bracket(u, &braided_bracket(v, w, b)?, b)?
        + &braided_bracket(&uw, v, b)?.scale(&p_vw_inv))
        + &(v * &uw).scale(&(&p_wv - &p_vw_inv));
    Ok((lhs, rhs))
}

/// The braided Jacobi identity, compared in 𝔅(V).
pub fn bracket_identity_check(
    u: &NCPolynomial,
    v: &NCPolynomial,
    w: &NCPolynomial,
    b: &BraidingMatrix,
) -> Result<bool> {
    let (lhs, rhs) = jacobi_sides(u, v, w, b)?;
    NicholsOracle::new(b).is_zero(&(&lhs - &rhs))
}

/// Both sides of `[u, v·w] = p_wu [u,v]·w + v·[u,w]`.
pub fn mixed_sides(
    u: &NCPolynomial,
    v: &NCPolynomial,
    w: &NCPolynomial,
    b: &BraidingMatrix,
) -> Result<(NCPolynomial, NCPolynomial)> {
    let degs = require_homogeneous(&[u, v, w])?;
    let p_wu = CycNumber::embed(b.chi(&degs[2], &degs[0])?);
    let lhs = braided_bracket(u, &(v * w), b)?;
    let rhs = &(&braided_bracket(u, v, b)? * w).scale(&p_wu) + &(v * &braided_bracket(u, w, b)?);
    Ok((lhs, rhs))
}

/// `[u, v·w] = p_wu [u,v]·w + v·[u,w]`, compared in 𝔅(V).
pub fn mixed_identity_check(
    u: &NCPolynomial,
    v: &NCPolynomial,
    w: &NCPolynomial,
    b: &BraidingMatrix,
) -> Result<bool> {
    let (lhs, rhs) = mixed_sides(u, v, w, b)?;
    NicholsOracle::new(b).is_zero(&(&lhs - &rhs))
}
