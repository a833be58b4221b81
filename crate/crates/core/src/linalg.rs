//! Exact incremental row echelon form over a cyclotomic field.

use crate::scalars::CycNumber;

/// Rows kept with a unit pivot and zeros in the pivot columns of all earlier rows.
#[derive(Clone, Debug, Default)]
pub struct EchelonBasis {
    rows: Vec<(usize, Vec<CycNumber>)>,
}

impl EchelonBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, mut v: Vec<CycNumber>) -> Vec<CycNumber> {
        for (pivot, row) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let f = v[*pivot].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = &*x - &(&f * r);
                }
            }
        }
        v
    }

    /// Adds `v` and reports whether it was independent of the current rows.
    pub fn insert(&mut self, v: Vec<CycNumber>) -> bool {
        let v = self.reduce(v);
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[pivot].inv().expect("pivot is nonzero");
        let row = v.iter().map(|x| x * &inv).collect();
        self.rows.push((pivot, row));
        true
    }

    pub fn contains(&self, v: Vec<CycNumber>) -> bool {
        self.reduce(v).iter().all(CycNumber::is_zero)
    }
}

/// Rank of a list of vectors.
pub fn rank(vectors: impl IntoIterator<Item = Vec<CycNumber>>) -> usize {
    let mut e = EchelonBasis::new();
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(k: i64) -> CycNumber {
        CycNumber::from_integer(k)
    }

    #[test]
    fn rational_rank_and_membership() {
        let mut e = EchelonBasis::new();
        assert!(e.insert(vec![n(1), n(2), n(3)]));
        assert!(e.insert(vec![n(0), n(1), n(1)]));
        assert!(!e.insert(vec![n(2), n(5), n(7)]));
        assert!(e.contains(vec![n(1), n(3), n(4)]));
        assert!(!e.contains(vec![n(0), n(0), n(1)]));
        assert_eq!(e.rank(), 2);
    }

    #[test]
    fn cyclotomic_dependence() {
        let z = CycNumber::embed("1/3".parse().unwrap());
        let z2 = &z * &z;
        // (1, ζ) and (ζ, ζ²) are proportional
        assert_eq!(
            rank([vec![n(1), z.clone()], vec![z.clone(), z2.clone()]]),
            1
        );
        assert_eq!(rank([vec![n(1), z.clone()], vec![z, n(1)]]), 2);
    }
}
