//! Sparse exact linear algebra over Q.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::arith::Q;

/// Sparse vector: strictly increasing column indices with nonzero entries.
pub type SparseRow = Vec<(usize, Q)>;

/// `a − c·b` for sparse rows.
fn axpy(a: &SparseRow, c: &Q, b: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map(|e| e.0).unwrap_or(usize::MAX);
        let cb = b.get(j).map(|e| e.0).unwrap_or(usize::MAX);
        if ca < cb {
            out.push(a[i].clone());
            i += 1;
        } else if cb < ca {
            out.push((cb, -(c * &b[j].1)));
            j += 1;
        } else {
            let v = &a[i].1 - c * &b[j].1;
            if !v.is_zero() {
                out.push((ca, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Incrementally built row echelon form. Each stored row has leading entry 1.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    pivots: BTreeMap<usize, SparseRow>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` against the stored rows until its leading column is free.
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        while let Some((c, v)) = row.first().cloned() {
            match self.pivots.get(&c) {
                Some(p) => row = axpy(&row, &v, p),
                None => break,
            }
        }
        row
    }

    /// Adds `row`; returns whether it was independent of the stored rows.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let row: SparseRow = row.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        let r = self.reduce(row);
        match r.first() {
            None => false,
            Some((c, v)) => {
                let inv = Q::one() / v;
                let c = *c;
                let r = r.into_iter().map(|(k, x)| (k, x * &inv)).collect();
                self.pivots.insert(c, r);
                true
            }
        }
    }

    pub fn contains(&self, row: SparseRow) -> bool {
        let row: SparseRow = row.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        self.reduce(row).is_empty()
    }
}

/// Rank of a sparse matrix given by rows.
pub fn rank(rows: impl IntoIterator<Item = SparseRow>) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::q;

    fn row(v: &[i64]) -> SparseRow {
        v.iter().enumerate().filter(|(_, x)| **x != 0).map(|(i, &x)| (i, q(x))).collect()
    }

    #[test]
    fn small_ranks() {
        assert_eq!(rank(vec![row(&[1, 2, 3]), row(&[2, 4, 6]), row(&[0, 1, 1])]), 2);
        assert_eq!(rank(vec![row(&[1, 0]), row(&[0, 1]), row(&[1, 1])]), 2);
        assert_eq!(rank(Vec::<SparseRow>::new()), 0);
        let mut e = Echelon::new();
        assert!(e.insert(row(&[0, 3, 1])));
        assert!(e.contains(row(&[0, 6, 2])));
        assert!(!e.contains(row(&[1, 6, 2])));
    }
}
