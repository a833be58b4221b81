//! Roots of unity and exact elements of cyclotomic fields.
//!
//! A [`CycNumber`] lives in ℚ(ζ_L) for a conductor `L` and is stored in the
//! power basis `1, ζ_L, …, ζ_L^{φ(L)−1}`, always reduced modulo the `L`-th
//! cyclotomic polynomial. Numbers with different conductors are compared and
//! combined after rebasing both to the least common multiple.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// The root of unity `exp(2πi·num/den)`, kept with `0 ≤ num < den` and
/// `gcd(num, den) = 1`. The scalar 1 is `0/1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootFraction {
    num: u64,
    den: u64,
}

impl RootFraction {
    pub const ONE: RootFraction = RootFraction { num: 0, den: 1 };
    pub const MINUS_ONE: RootFraction = RootFraction { num: 1, den: 2 };

    /// Canonical root for an arbitrary integer numerator.
    pub fn new(num: i64, den: u64) -> Result<Self> {
        if den == 0 {
            return Err(Error::Parse("root fraction with zero denominator".into()));
        }
        Ok(Self::reduce(num as i128, den as i128))
    }

    /// The primitive root `exp(2πi/den)`.
    pub fn primitive(den: u64) -> Result<Self> {
        Self::new(1, den)
    }

    fn reduce(num: i128, den: i128) -> Self {
        let r = num.rem_euclid(den);
        let g = r.gcd(&den);
        RootFraction {
            num: (r / g) as u64,
            den: (den / g) as u64,
        }
    }

    pub fn num(self) -> u64 {
        self.num
    }

    pub fn den(self) -> u64 {
        self.den
    }

    pub fn is_one(self) -> bool {
        self.den == 1
    }

    /// Multiplicative order, which is the reduced denominator.
    pub fn order(self) -> u64 {
        self.den
    }

    pub fn inv(self) -> Self {
        Self::reduce(-(self.num as i128), self.den as i128)
    }

    pub fn pow(self, k: i64) -> Self {
        Self::reduce(self.num as i128 * k as i128, self.den as i128)
    }
}

impl Div for RootFraction {
    type Output = RootFraction;

    fn div(self, rhs: Self) -> Self {
        Mul::mul(self, rhs.inv())
    }
}

impl Mul for RootFraction {
    type Output = RootFraction;

    fn mul(self, rhs: Self) -> Self {
        let d = (self.den as i128).lcm(&(rhs.den as i128));
        let n = self.num as i128 * (d / self.den as i128) + rhs.num as i128 * (d / rhs.den as i128);
        Self::reduce(n, d)
    }
}

impl fmt::Display for RootFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for RootFraction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected a root fraction \"a/b\", found {s:?}"));
        let (a, b) = s.trim().split_once('/').ok_or_else(bad)?;
        let num: i64 = a.trim().parse().map_err(|_| bad())?;
        let den: u64 = b.trim().parse().map_err(|_| bad())?;
        RootFraction::new(num, den)
    }
}

impl Serialize for RootFraction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for RootFraction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Multiplicative order of a field element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Order {
    Finite(u64),
    Infinite,
}

impl Order {
    /// Whether the order divides `k`. An infinite order divides only 0.
    pub fn divides(self, k: u64) -> bool {
        match self {
            Order::Finite(o) => k.is_multiple_of(o),
            Order::Infinite => k == 0,
        }
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            Order::Finite(o) => Some(o),
            Order::Infinite => None,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(o) => write!(f, "{o}"),
            Order::Infinite => write!(f, "infinite"),
        }
    }
}

/// Reduction data for ℚ(ζ_L).
struct Field {
    phi: usize,
    /// `powers[e]` holds `x^e mod Φ_L` for `0 ≤ e < L`.
    powers: Vec<Vec<i64>>,
    /// Residues coprime to `L`, i.e. the Galois group.
    units: Vec<usize>,
}

fn fields() -> &'static RwLock<HashMap<usize, Arc<Field>>> {
    static FIELDS: OnceLock<RwLock<HashMap<usize, Arc<Field>>>> = OnceLock::new();
    FIELDS.get_or_init(|| RwLock::new(HashMap::new()))
}

fn field(l: usize) -> Arc<Field> {
    if let Some(f) = fields().read().expect("field cache poisoned").get(&l) {
        return f.clone();
    }
    let built = Arc::new(build_field(l));
    fields()
        .write()
        .expect("field cache poisoned")
        .entry(l)
        .or_insert(built)
        .clone()
}

/// Integer coefficients of Φ_L, lowest degree first.
pub(crate) fn cyclotomic_polynomial(l: usize) -> Vec<i64> {
    // x^L - 1 = Π_{d | L} Φ_d
    let mut p = vec![0i64; l + 1];
    p[0] = -1;
    p[l] = 1;
    for d in 1..l {
        if l.is_multiple_of(d) {
            p = divide_monic(&p, &cyclotomic_polynomial(d));
        }
    }
    p
}

fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut quot = vec![0i64; qd + 1];
    for k in (0..=qd).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        for (j, &dj) in den.iter().enumerate() {
            rem[k + j] -= c * dj;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "inexact cyclotomic division");
    quot
}

fn build_field(l: usize) -> Field {
    let phi_poly = cyclotomic_polynomial(l);
    let phi = phi_poly.len() - 1;
    let mut powers = Vec::with_capacity(l);
    let mut cur = vec![0i64; phi];
    cur[0] = 1;
    for _ in 0..l {
        powers.push(cur.clone());
        let top = cur[phi - 1];
        let mut next = vec![0i64; phi];
        next[1..phi].copy_from_slice(&cur[..(phi - 1)]);
        for j in 0..phi {
            next[j] = next[j]
                .checked_sub(
                    top.checked_mul(phi_poly[j])
                        .expect("power reduction overflow"),
                )
                .expect("power reduction overflow");
        }
        cur = next;
    }
    let units = (1..=l).filter(|k| k.gcd(&l) == 1).map(|k| k % l).collect();
    Field { phi, powers, units }
}

/// Euler's totient.
pub fn euler_phi(l: usize) -> usize {
    (1..=l).filter(|k| k.gcd(&l) == 1).count()
}

/// An exact element of a cyclotomic field.
#[derive(Clone, Debug)]
pub struct CycNumber {
    conductor: usize,
    coeffs: Vec<BigRational>,
}

impl CycNumber {
    pub fn zero() -> Self {
        CycNumber {
            conductor: 1,
            coeffs: vec![BigRational::zero()],
        }
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(r: BigRational) -> Self {
        CycNumber {
            conductor: 1,
            coeffs: vec![r],
        }
    }

    /// Rebuilds an element from power-basis coefficients at conductor `l`.
    /// The vector may be shorter than φ(L); longer vectors are reduced.
    pub fn from_coeffs(l: usize, coeffs: Vec<BigRational>) -> Result<Self> {
        if l == 0 {
            return Err(Error::Parse("conductor must be positive".into()));
        }
        let f = field(l);
        let mut acc = vec![BigRational::zero(); l];
        for (t, c) in coeffs.into_iter().enumerate() {
            acc[t % l] += c;
        }
        Ok(CycNumber {
            conductor: l,
            coeffs: reduce_exponents(&f, acc),
        })
    }

    /// `ζ_den^num` at conductor `den`.
    pub fn embed(r: RootFraction) -> Self {
        Self::embed_at(r, r.den() as usize).expect("denominator divides itself")
    }

    /// `ζ_den^num` written at a conductor that the denominator divides.
    pub fn embed_at(r: RootFraction, l: usize) -> Result<Self> {
        let den = r.den() as usize;
        if l == 0 || !l.is_multiple_of(den) {
            return Err(Error::Precondition(format!(
                "conductor {l} is not a multiple of {den}"
            )));
        }
        Ok(Self::monomial(l, r.num() as usize * (l / den)))
    }

    fn monomial(l: usize, e: usize) -> Self {
        let f = field(l);
        let coeffs = f.powers[e % l]
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect();
        CycNumber {
            conductor: l,
            coeffs,
        }
    }

    pub fn conductor(&self) -> usize {
        self.conductor
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The value as a rational number, if it is one.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    /// Same element written at conductor `l`, which must be a multiple of
    /// the current one.
    pub fn rebase(&self, l: usize) -> Result<Self> {
        if l == self.conductor {
            return Ok(self.clone());
        }
        if l == 0 || !l.is_multiple_of(self.conductor) {
            return Err(Error::Precondition(format!(
                "cannot rebase conductor {} to {l}",
                self.conductor
            )));
        }
        let step = l / self.conductor;
        let f = field(l);
        let mut acc = vec![BigRational::zero(); l];
        for (t, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc[t * step] += c;
            }
        }
        Ok(CycNumber {
            conductor: l,
            coeffs: reduce_exponents(&f, acc),
        })
    }

    fn aligned(&self, other: &Self) -> (std::borrow::Cow<'_, Self>, Self, usize) {
        if self.conductor == other.conductor {
            return (
                std::borrow::Cow::Borrowed(self),
                other.clone(),
                self.conductor,
            );
        }
        let l = self.conductor.lcm(&other.conductor);
        (
            std::borrow::Cow::Owned(self.rebase(l).expect("lcm is a multiple")),
            other.rebase(l).expect("lcm is a multiple"),
            l,
        )
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        CycNumber {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Applies the automorphism `ζ_L ↦ ζ_L^k` (k coprime to L).
    fn galois(&self, k: usize) -> Self {
        let l = self.conductor;
        let f = field(l);
        let mut acc = vec![BigRational::zero(); l];
        for (t, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc[(t * k) % l] += c;
            }
        }
        CycNumber {
            conductor: l,
            coeffs: reduce_exponents(&f, acc),
        }
    }

    /// Multiplicative inverse via the field norm: `a⁻¹ = Π_{σ≠1} σ(a) / N(a)`.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(CycNumber {
                conductor: self.conductor,
                coeffs: std::iter::once(r.recip())
                    .chain(std::iter::repeat(BigRational::zero()))
                    .take(self.coeffs.len())
                    .collect(),
            });
        }
        let f = field(self.conductor);
        let mut conj = CycNumber::one().rebase(self.conductor)?;
        for &k in f.units.iter().filter(|&&k| k != 1) {
            conj = &conj * &self.galois(k);
        }
        let norm = self * &conj;
        let n = norm
            .as_rational()
            .expect("norm of a cyclotomic element is rational")
            .clone();
        Ok(conj.scale(&n.recip()))
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = CycNumber::one().rebase(self.conductor)?;
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Smallest `k ≥ 1` with `a^k = 1`, searched up to `lcm(2, L)`.
    pub fn mult_order(&self) -> Result<Order> {
        if self.is_zero() {
            return Err(Error::Precondition("order of zero is undefined".into()));
        }
        let bound = 2usize.lcm(&self.conductor);
        let mut acc = self.clone();
        for k in 1..=bound {
            if acc.is_one() {
                return Ok(Order::Finite(k as u64));
            }
            acc = &acc * self;
        }
        Ok(Order::Infinite)
    }
}

fn reduce_exponents(f: &Field, acc: Vec<BigRational>) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); f.phi];
    for (e, c) in acc.into_iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if e < f.phi {
            out[e] += c;
            continue;
        }
        for (j, &pj) in f.powers[e].iter().enumerate() {
            if pj != 0 {
                out[j] += &c * BigInt::from(pj);
            }
        }
    }
    out
}

fn mul_aligned(l: usize, a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let f = field(l);
    if f.phi == 1 {
        return vec![&a[0] * &b[0]];
    }
    let mut acc = vec![BigRational::zero(); l];
    for (s, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (t, y) in b.iter().enumerate() {
            if !y.is_zero() {
                acc[(s + t) % l] += x * y;
            }
        }
    }
    reduce_exponents(&f, acc)
}

impl PartialEq for CycNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b, _) = self.aligned(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycNumber {}

impl<'a> Add<&'a CycNumber> for &'a CycNumber {
    type Output = CycNumber;

    fn add(self, rhs: &CycNumber) -> CycNumber {
        if self.conductor == rhs.conductor {
            return CycNumber {
                conductor: self.conductor,
                coeffs: self
                    .coeffs
                    .iter()
                    .zip(&rhs.coeffs)
                    .map(|(x, y)| x + y)
                    .collect(),
            };
        }
        let (a, b, l) = self.aligned(rhs);
        CycNumber {
            conductor: l,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }
}

impl<'a> Sub<&'a CycNumber> for &'a CycNumber {
    type Output = CycNumber;

    fn sub(self, rhs: &CycNumber) -> CycNumber {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a CycNumber> for &'a CycNumber {
    type Output = CycNumber;

    fn mul(self, rhs: &CycNumber) -> CycNumber {
        if self.conductor == rhs.conductor {
            return CycNumber {
                conductor: self.conductor,
                coeffs: mul_aligned(self.conductor, &self.coeffs, &rhs.coeffs),
            };
        }
        let (a, b, l) = self.aligned(rhs);
        CycNumber {
            conductor: l,
            coeffs: mul_aligned(l, &a.coeffs, &b.coeffs),
        }
    }
}

impl Neg for &CycNumber {
    type Output = CycNumber;

    fn neg(self) -> CycNumber {
        CycNumber {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add for CycNumber {
    type Output = CycNumber;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl Sub for CycNumber {
    type Output = CycNumber;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl Mul for CycNumber {
    type Output = CycNumber;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl Neg for CycNumber {
    type Output = CycNumber;
    fn neg(self) -> Self {
        -&self
    }
}

impl From<RootFraction> for CycNumber {
    fn from(r: RootFraction) -> Self {
        CycNumber::embed(r)
    }
}

/// `(s)_q = 1 + q + ⋯ + q^{s−1}`.
pub fn q_int(s: u64, q: &CycNumber) -> CycNumber {
    let mut total = CycNumber::zero();
    let mut term = CycNumber::one();
    for _ in 0..s {
        total = &total + &term;
        term = &term * q;
    }
    total
}

/// `(s)_q! = (1)_q (2)_q ⋯ (s)_q`, with `(0)_q! = 1`.
pub fn q_factorial(s: u64, q: &CycNumber) -> CycNumber {
    (1..=s).fold(CycNumber::one(), |acc, k| &acc * &q_int(k, q))
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for CycNumber {
    /// Terms `c*e(t/L)` for ζ_L^t, constant first; see the text grammar in
    /// [`crate::text`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (t, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            if t == 0 {
                write!(f, "{}", fmt_rational(&mag))?;
                continue;
            }
            let root =
                RootFraction::new(t as i64, self.conductor as u64).expect("positive conductor");
            if mag.is_one() {
                write!(f, "e({root})")?;
            } else {
                write!(f, "{}*e({root})", fmt_rational(&mag))?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl FromStr for CycNumber {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        crate::text::parse_scalar(s)
    }
}
