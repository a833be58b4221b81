//! Words in the generators, the pure and augmented Dynkin graphs of a braiding,
//! and connectivity of supports.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::braiding::{BraidingMatrix, DegreeVector};
use crate::error::{Error, Result};
use crate::scalars::RootFraction;

/// A word `x_{j_1} ⋯ x_{j_m}`. Letters are stored 0-based; the text form is
/// 1-based and space separated, e.g. `"1 2 1"`.
///
/// Words order by length first, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(i: usize) -> Self {
        Word(vec![i])
    }

    /// Parses 1-based, space-separated indices and checks them against the rank.
    pub fn parse(text: &str, rank: usize) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in text.split(|c: char| c.is_whitespace() || c == ',') {
            if tok.is_empty() {
                continue;
            }
            let i: usize = tok
                .parse()
                .map_err(|_| Error::Parse(format!("bad generator index {tok:?}")))?;
            if i == 0 || i > rank {
                return Err(Error::Parse(format!(
                    "generator index {i} outside 1..={rank}"
                )));
            }
            letters.push(i - 1);
        }
        Ok(Word(letters))
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn power(&self, k: usize) -> Word {
        Word(self.0.repeat(k))
    }

    pub fn without(&self, pos: usize) -> Word {
        let mut v = self.0.clone();
        v.remove(pos);
        Word(v)
    }

    pub fn degree(&self, rank: usize) -> DegreeVector {
        let mut d = vec![0i64; rank];
        for &i in &self.0 {
            d[i] += 1;
        }
        d
    }

    /// Largest letter plus one, i.e. the least rank containing the word.
    pub fn min_rank(&self) -> usize {
        self.0.iter().max().map_or(0, |m| m + 1)
    }

    /// 1-based letters, as used in every external format.
    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|i| i + 1).collect()
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|i| (i + 1).to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_based().serialize(s)
    }
}

/// An undirected simple graph on a subset of `{0, …, n−1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexGraph {
    vertices: BTreeSet<usize>,
    edges: BTreeSet<(usize, usize)>,
}

impl VertexGraph {
    pub fn new(
        vertices: impl IntoIterator<Item = usize>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Self {
        let vertices: BTreeSet<usize> = vertices.into_iter().collect();
        let edges = edges
            .into_iter()
            .filter(|&(a, b)| a != b && vertices.contains(&a) && vertices.contains(&b))
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        VertexGraph { vertices, edges }
    }

    pub fn vertices(&self) -> &BTreeSet<usize> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    /// Whether the subgraph induced on `set` is connected. The empty set is not.
    pub fn is_connected_set(&self, set: &BTreeSet<usize>) -> bool {
        let Some(&start) = set.iter().next() else {
            return false;
        };
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &w in set {
                if !seen.contains(&w) && self.has_edge(v, w) {
                    seen.insert(w);
                    stack.push(w);
                }
            }
        }
        seen.len() == set.len()
    }

    /// Connected components of the subgraph induced on `set`, each sorted,
    /// listed by smallest vertex.
    pub fn components_of(&self, set: &BTreeSet<usize>) -> Vec<BTreeSet<usize>> {
        let mut left = set.clone();
        let mut out = Vec::new();
        while let Some(&start) = left.iter().next() {
            let mut comp = BTreeSet::from([start]);
            let mut stack = vec![start];
            left.remove(&start);
            while let Some(v) = stack.pop() {
                let next: Vec<usize> = left
                    .iter()
                    .copied()
                    .filter(|&w| self.has_edge(v, w))
                    .collect();
                for w in next {
                    left.remove(&w);
                    comp.insert(w);
                    stack.push(w);
                }
            }
            out.push(comp);
        }
        out
    }
}

/// Edge `{i, j}` iff `q_ij q_ji ≠ 1`.
pub fn pure_graph(b: &BraidingMatrix) -> VertexGraph {
    let n = b.rank();
    let edges = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| !b.ptilde_gen(i, j).is_one());
    VertexGraph::new(0..n, edges.collect::<Vec<_>>())
}

/// Edge `{i, j}` iff `q_ij ≠ 1` or `q_ji ≠ 1`.
pub fn aug_graph(b: &BraidingMatrix) -> VertexGraph {
    let n = b.rank();
    let edges = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| !b.entry(i, j).is_one() || !b.entry(j, i).is_one());
    VertexGraph::new(0..n, edges.collect::<Vec<_>>())
}

/// The set of distinct letters of `w`.
pub fn support(w: &Word) -> BTreeSet<usize> {
    w.letters().iter().copied().collect()
}

/// Connectivity of the subgraph induced on the support of `w`.
pub fn is_connected(w: &Word, g: &VertexGraph) -> bool {
    g.is_connected_set(&support(w))
}

/// Connected components of the whole graph.
pub fn components(g: &VertexGraph) -> Vec<BTreeSet<usize>> {
    g.components_of(g.vertices())
}

/// Splits `w` into one factor per connected component of its support in
/// Γ(V), ordered by smallest vertex, keeping letter order inside each factor.
///
/// The scalar collects `q_ab` for every adjacent swap `x_a x_b → x_b x_a` the
/// stable bubble sort performs, so `w = scalar · u_1 ⋯ u_r` in 𝔅(V) (the
/// swapped letters have `p̃_ab = 1`).
pub fn component_decomposition(w: &Word, b: &BraidingMatrix) -> (RootFraction, Vec<Word>) {
    let g = pure_graph(b);
    let comps = g.components_of(&support(w));
    let comp_of = |letter: usize| {
        comps
            .iter()
            .position(|c| c.contains(&letter))
            .expect("letter in support")
    };
    let mut letters: Vec<(usize, usize)> = w.letters().iter().map(|&l| (comp_of(l), l)).collect();
    let mut scalar = RootFraction::ONE;
    let len = letters.len();
    for pass in 0..len {
        for i in 0..len.saturating_sub(pass + 1) {
            if letters[i].0 > letters[i + 1].0 {
                scalar = scalar * b.entry(letters[i].1, letters[i + 1].1);
                letters.swap(i, i + 1);
            }
        }
    }
    let mut factors = vec![Vec::new(); comps.len()];
    for (c, l) in letters {
        factors[c].push(l);
    }
    (scalar, factors.into_iter().map(Word::new).collect())
}
