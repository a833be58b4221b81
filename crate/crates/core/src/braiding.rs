//! Diagonal braiding data: the matrix `(q_ij)`, ℤⁿ-degrees and the bicharacter χ.
//!
//! Entries are roots of unity, so every value of χ is again a [`RootFraction`].

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::scalars::{CycNumber, RootFraction};

/// Coordinates of a degree in the basis `e_1, …, e_n` of ℤⁿ.
pub type DegreeVector = Vec<i64>;

/// The unit vector `e_i` (0-based `i`).
pub fn unit_degree(n: usize, i: usize) -> DegreeVector {
    let mut d = vec![0; n];
    d[i] = 1;
    d
}

/// An `n × n` matrix of roots of unity defining a diagonal braiding.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BraidingMatrix {
    n: usize,
    q: Vec<Vec<RootFraction>>,
}

impl BraidingMatrix {
    pub fn new(q: Vec<Vec<RootFraction>>) -> Result<Self> {
        let n = q.len();
        if n == 0 {
            return Err(Error::Parse(
                "braiding matrix must have rank at least 1".into(),
            ));
        }
        for (row, r) in q.iter().enumerate() {
            if r.len() != n {
                return Err(Error::MatrixEntry {
                    row: row + 1,
                    col: r.len().min(n) + 1,
                    reason: format!("row has {} entries, expected {n}", r.len()),
                });
            }
        }
        Ok(BraidingMatrix { n, q })
    }

    /// Builds a matrix from rows of `"a/b"` strings.
    pub fn from_strs(rows: &[&[&str]]) -> Result<Self> {
        let mut q = Vec::with_capacity(rows.len());
        for (i, row) in rows.iter().enumerate() {
            let mut r = Vec::with_capacity(row.len());
            for (j, s) in row.iter().enumerate() {
                r.push(s.parse().map_err(|e: Error| Error::MatrixEntry {
                    row: i + 1,
                    col: j + 1,
                    reason: e.to_string(),
                })?);
            }
            q.push(r);
        }
        Self::new(q)
    }

    /// Diagonal matrix with the given vertex labels and all off-diagonal entries 1.
    pub fn quantum_linear_diagonal(diag: &[RootFraction]) -> Result<Self> {
        let n = diag.len();
        let q = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { diag[i] } else { RootFraction::ONE })
                    .collect()
            })
            .collect();
        Self::new(q)
    }

    /// Parses the file format `{"n": 2, "q": [["a/b", …], …]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let v: Value =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))?;
        let rows = v
            .get("q")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing array field \"q\"".into()))?;
        let mut q = Vec::with_capacity(rows.len());
        for (i, row) in rows.iter().enumerate() {
            let cells = row.as_array().ok_or_else(|| Error::MatrixEntry {
                row: i + 1,
                col: 1,
                reason: "row is not an array".into(),
            })?;
            let mut r = Vec::with_capacity(cells.len());
            for (j, cell) in cells.iter().enumerate() {
                let entry_err = |reason: String| Error::MatrixEntry {
                    row: i + 1,
                    col: j + 1,
                    reason,
                };
                let s = cell.as_str().ok_or_else(|| {
                    entry_err("entry must be a string \"a/b\" naming a root of unity".into())
                })?;
                r.push(
                    s.parse::<RootFraction>()
                        .map_err(|e| entry_err(e.to_string()))?,
                );
            }
            q.push(r);
        }
        let m = Self::new(q)?;
        match v.get("n") {
            Some(n) if n.as_u64() == Some(m.n as u64) => Ok(m),
            Some(n) => Err(Error::Parse(format!(
                "field \"n\" = {n} does not match {} rows",
                m.n
            ))),
            None => Err(Error::Parse("missing field \"n\"".into())),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("matrix serializes")
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// `q_ij` with 0-based indices.
    pub fn entry(&self, i: usize, j: usize) -> RootFraction {
        self.q[i][j]
    }

    pub fn rows(&self) -> &[Vec<RootFraction>] {
        &self.q
    }

    /// Least common multiple of all entry orders; every χ value lives in ℚ(ζ_L).
    pub fn conductor(&self) -> usize {
        self.q
            .iter()
            .flatten()
            .fold(1usize, |acc, r| acc.lcm(&(r.den() as usize)))
    }

    /// `q_ij` as a field element at the matrix conductor.
    pub fn entry_value(&self, i: usize, j: usize) -> CycNumber {
        CycNumber::embed_at(self.q[i][j], self.conductor()).expect("entry order divides conductor")
    }

    fn check_len(&self, d: &[i64]) -> Result<()> {
        if d.len() != self.n {
            return Err(Error::RankMismatch {
                expected: self.n,
                found: d.len(),
            });
        }
        Ok(())
    }

    /// `χ(α, β) = Π q_ij^{α_i β_j}`.
    pub fn chi(&self, alpha: &[i64], beta: &[i64]) -> Result<RootFraction> {
        self.check_len(alpha)?;
        self.check_len(beta)?;
        Ok(self.chi_unchecked(alpha, beta))
    }

    pub(crate) fn chi_unchecked(&self, alpha: &[i64], beta: &[i64]) -> RootFraction {
        let mut acc = RootFraction::ONE;
        for (i, &a) in alpha.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in beta.iter().enumerate() {
                if b != 0 {
                    acc = acc * self.q[i][j].pow(a * b);
                }
            }
        }
        acc
    }

    /// `p_uv = χ(deg u, deg v)`.
    pub fn p(&self, u_deg: &[i64], v_deg: &[i64]) -> Result<RootFraction> {
        self.chi(u_deg, v_deg)
    }

    /// `p̃_uv = p_uv p_vu`.
    pub fn ptilde(&self, u_deg: &[i64], v_deg: &[i64]) -> Result<RootFraction> {
        Ok(self.chi(u_deg, v_deg)? * self.chi(v_deg, u_deg)?)
    }

    /// `q_ij q_ji` for generators (0-based).
    pub fn ptilde_gen(&self, i: usize, j: usize) -> RootFraction {
        self.q[i][j] * self.q[j][i]
    }

    /// All `q_ij q_ji = 1` for `i ≠ j`.
    pub fn is_quantum_linear(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| i == j || self.ptilde_gen(i, j).is_one()))
    }
}

impl fmt::Display for BraidingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_json())
    }
}

/// Finite Cartan types with dimension formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    E6,
    G2,
}

impl CartanType {
    pub const ALL: [CartanType; 6] = [
        CartanType::A,
        CartanType::B,
        CartanType::C,
        CartanType::D,
        CartanType::E6,
        CartanType::G2,
    ];
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CartanType::A => "A",
            CartanType::B => "B",
            CartanType::C => "C",
            CartanType::D => "D",
            CartanType::E6 => "E6",
            CartanType::G2 => "G2",
        };
        f.write_str(s)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(CartanType::A),
            "B" => Ok(CartanType::B),
            "C" => Ok(CartanType::C),
            "D" => Ok(CartanType::D),
            "E6" | "E" => Ok(CartanType::E6),
            "G2" | "G" => Ok(CartanType::G2),
            other => Err(Error::InvalidSpec(format!("unknown Cartan type {other:?}"))),
        }
    }
}

/// A Cartan type, its rank and the parameter `q`.
///
/// Construction enforces the rank constraints and `q ≠ 1`. The finer
/// restrictions on `q` that make the braiding genuinely of the named type are
/// reported by [`CartanSpec::is_admissible`]; counting formulas accept any
/// `q ≠ 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CartanSpec {
    #[serde(rename = "type")]
    kind: CartanType,
    rank: usize,
    q: RootFraction,
}

#[derive(Deserialize)]
struct CartanSpecFile {
    #[serde(rename = "type")]
    kind: String,
    rank: usize,
    q: String,
}

impl CartanSpec {
    pub fn new(kind: CartanType, rank: usize, q: RootFraction) -> Result<Self> {
        let ok = match kind {
            CartanType::A => rank >= 1,
            CartanType::B => rank >= 2,
            CartanType::C => rank > 2,
            CartanType::D => rank > 3,
            CartanType::E6 => rank == 6,
            CartanType::G2 => rank == 2,
        };
        if !ok {
            return Err(Error::InvalidSpec(format!(
                "rank {rank} is not allowed for type {kind}"
            )));
        }
        if q.is_one() {
            return Err(Error::InvalidSpec("q must differ from 1".into()));
        }
        Ok(CartanSpec { kind, rank, q })
    }

    /// Shorthand with `q = exp(2πi/order)`.
    pub fn with_order(kind: CartanType, rank: usize, order: u64) -> Result<Self> {
        Self::new(kind, rank, RootFraction::primitive(order)?)
    }

    /// Parses `{"type":"A","rank":3,"q":"1/4"}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let f: CartanSpecFile = serde_json::from_str(text)
            .map_err(|e| Error::Parse(format!("invalid Cartan spec: {e}")))?;
        Self::new(f.kind.parse()?, f.rank, f.q.parse()?)
    }

    pub fn kind(&self) -> CartanType {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn q(&self) -> RootFraction {
        self.q
    }

    /// `N = ord(q)`.
    pub fn order(&self) -> u64 {
        self.q.order()
    }

    /// The restrictions on `q` under which the dimension theorem is stated.
    pub fn is_admissible(&self) -> bool {
        let q = self.q;
        match self.kind {
            CartanType::A | CartanType::D | CartanType::E6 => !q.is_one(),
            CartanType::B | CartanType::C => !q.pow(2).is_one(),
            CartanType::G2 => !q.pow(2).is_one() && !q.pow(3).is_one(),
        }
    }

    /// Edges of the Dynkin diagram as 0-based pairs `(i, j)` with `i < j`.
    ///
    /// D_n is the chain `1 … n−1` with `n` attached to `n−2`. E6 is the chain
    /// `1-2-3-5-6` with `4` attached to `3`.
    pub fn diagram_edges(&self) -> Vec<(usize, usize)> {
        let n = self.rank;
        match self.kind {
            CartanType::A | CartanType::B | CartanType::C | CartanType::G2 => {
                (0..n - 1).map(|i| (i, i + 1)).collect()
            }
            CartanType::D => {
                let mut e: Vec<_> = (0..n - 2).map(|i| (i, i + 1)).collect();
                e.push((n - 3, n - 1));
                e
            }
            CartanType::E6 => vec![(0, 1), (1, 2), (2, 3), (2, 4), (4, 5)],
        }
    }

    /// Cartan matrix `a_ij`, consistent with `q_ij q_ji = q_ii^{a_ij}`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (i, j) in self.diagram_edges() {
            a[i][j] = -1;
            a[j][i] = -1;
        }
        match self.kind {
            CartanType::B => a[n - 1][n - 2] = -2,
            CartanType::C => a[n - 2][n - 1] = -2,
            CartanType::G2 => a[0][1] = -3,
            _ => {}
        }
        a
    }

    fn vertex_label(&self, i: usize) -> RootFraction {
        let (q, n) = (self.q, self.rank);
        match self.kind {
            CartanType::A | CartanType::D | CartanType::E6 => q,
            CartanType::B => {
                if i == n - 1 {
                    q
                } else {
                    q.pow(2)
                }
            }
            CartanType::C => {
                if i == n - 1 {
                    q.pow(2)
                } else {
                    q
                }
            }
            CartanType::G2 => {
                if i == 0 {
                    q
                } else {
                    q.pow(3)
                }
            }
        }
    }

    fn edge_label(&self, i: usize, j: usize) -> RootFraction {
        let (q, n) = (self.q, self.rank);
        match self.kind {
            CartanType::A | CartanType::D | CartanType::E6 => q.inv(),
            CartanType::B => q.pow(-2),
            CartanType::C => {
                if (i, j) == (n - 2, n - 1) {
                    q.pow(-2)
                } else {
                    q.inv()
                }
            }
            CartanType::G2 => q.pow(-3),
        }
    }
}

impl fmt::Display for CartanSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{} (q = {})", self.kind, self.rank, self.q)
    }
}

/// The braiding of a Cartan diagram: vertex labels on the diagonal, each edge
/// label stored as `q_ij` for `i < j` with `q_ji = 1`, and 1 elsewhere.
pub fn cartan_braiding(spec: &CartanSpec) -> BraidingMatrix {
    let n = spec.rank;
    let mut q = vec![vec![RootFraction::ONE; n]; n];
    for (i, row) in q.iter_mut().enumerate() {
        row[i] = spec.vertex_label(i);
    }
    for (i, j) in spec.diagram_edges() {
        q[i][j] = spec.edge_label(i, j);
    }
    BraidingMatrix::new(q).expect("square by construction")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(s: &str) -> RootFraction {
        s.parse().unwrap()
    }

    #[test]
    fn chi_examples() {
        let b = cartan_braiding(&CartanSpec::new(CartanType::A, 2, rf("1/4")).unwrap());
        assert_eq!(b.chi(&[0, 0], &[1, 1]).unwrap(), RootFraction::ONE);
        assert_eq!(b.chi(&[1, 0], &[0, 1]).unwrap(), b.entry(0, 1));
        assert_eq!(b.chi(&[1, 1], &[1, 1]).unwrap(), rf("1/4"));
        assert!(b.chi(&[1], &[1, 1]).is_err());
    }

    #[test]
    fn ptilde_examples() {
        let b = cartan_braiding(&CartanSpec::new(CartanType::A, 2, rf("1/2")).unwrap());
        assert_eq!(b.ptilde(&[1, 0], &[0, 1]).unwrap(), RootFraction::MINUS_ONE);
        let e1 = [1, 0];
        assert_eq!(b.ptilde(&e1, &e1).unwrap(), b.entry(0, 0).pow(2));
        let ql = BraidingMatrix::from_strs(&[&["1/2", "1/3"], &["2/3", "1/2"]]).unwrap();
        assert!(ql.ptilde(&[1, 0], &[0, 1]).unwrap().is_one());
        assert!(ql.is_quantum_linear());
    }

    #[test]
    fn cartan_braiding_examples() {
        let q = rf("1/5");
        let a2 = cartan_braiding(&CartanSpec::new(CartanType::A, 2, q).unwrap());
        assert_eq!(
            a2.rows(),
            &[vec![q, q.inv()], vec![RootFraction::ONE, q]][..]
        );
        let g2 = cartan_braiding(&CartanSpec::new(CartanType::G2, 2, q).unwrap());
        assert_eq!(
            g2.rows(),
            &[vec![q, q.pow(-3)], vec![RootFraction::ONE, q.pow(3)]][..]
        );
        let b2 = cartan_braiding(&CartanSpec::new(CartanType::B, 2, q).unwrap());
        assert_eq!(
            b2.rows(),
            &[vec![q.pow(2), q.pow(-2)], vec![RootFraction::ONE, q]][..]
        );
    }

    #[test]
    fn cartan_type_of_braiding() {
        // q_ij q_ji = q_ii^{a_ij} for every admissible example
        for kind in CartanType::ALL {
            let rank = match kind {
                CartanType::A | CartanType::B => 3,
                CartanType::C => 3,
                CartanType::D => 5,
                CartanType::E6 => 6,
                CartanType::G2 => 2,
            };
            let spec = CartanSpec::new(kind, rank, rf("1/7")).unwrap();
            let b = cartan_braiding(&spec);
            let a = spec.cartan_matrix();
            for i in 0..rank {
                for j in 0..rank {
                    if i != j {
                        assert_eq!(
                            b.ptilde_gen(i, j),
                            b.entry(i, i).pow(a[i][j]),
                            "{spec} ({i},{j})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn spec_constraints() {
        let q = rf("1/3");
        assert!(CartanSpec::new(CartanType::C, 2, q).is_err());
        assert!(CartanSpec::new(CartanType::D, 3, q).is_err());
        assert!(CartanSpec::new(CartanType::E6, 5, q).is_err());
        assert!(CartanSpec::new(CartanType::A, 1, RootFraction::ONE).is_err());
        assert!(!CartanSpec::new(CartanType::G2, 2, q)
            .unwrap()
            .is_admissible());
        assert!(!CartanSpec::new(CartanType::G2, 2, rf("1/2"))
            .unwrap()
            .is_admissible());
        assert!(CartanSpec::new(CartanType::G2, 2, rf("1/4"))
            .unwrap()
            .is_admissible());
        assert!(!CartanSpec::new(CartanType::B, 2, rf("1/2"))
            .unwrap()
            .is_admissible());
    }

    #[test]
    fn json_formats() {
        let m = BraidingMatrix::from_json(r#"{"n":2,"q":[["1/2","1/3"],["2/3","1/2"]]}"#).unwrap();
        assert_eq!(m.entry(0, 1), rf("1/3"));
        assert_eq!(BraidingMatrix::from_json(&m.to_json()).unwrap(), m);
        let err =
            BraidingMatrix::from_json(r#"{"n":2,"q":[["1/2","1/3"],["2/3","x"]]}"#).unwrap_err();
        assert!(matches!(err, Error::MatrixEntry { row: 2, col: 2, .. }));
        let err = BraidingMatrix::from_json(r#"{"n":2,"q":[["1/2","1/3"],["2/3"]]}"#).unwrap_err();
        assert!(matches!(err, Error::MatrixEntry { row: 2, .. }));
        let spec = CartanSpec::from_json(r#"{"type":"A","rank":3,"q":"1/4"}"#).unwrap();
        assert_eq!(
            (spec.kind(), spec.rank(), spec.order()),
            (CartanType::A, 3, 4)
        );
    }
}
