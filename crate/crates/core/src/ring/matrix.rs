use std::fmt;

use serde::Serialize;

use crate::arith::Q;
use crate::error::{Result, WpsError};
use crate::ring::ideal::Ideal;
use crate::ring::poly::Polynomial;
use crate::ring::weights::WeightSystem;

/// A matrix of polynomials over `S(w)`; zero entries allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMatrix {
    ambient: WeightSystem,
    entries: Vec<Vec<Polynomial>>,
}

/// Column degrees sorted ascending, cumulative row offsets, and the permutations used.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatrixProfile {
    pub col_degrees: Vec<u64>,
    pub row_offsets: Vec<u64>,
    /// `column_order[k]` is the original index of the k-th sorted column.
    pub column_order: Vec<usize>,
    pub row_order: Vec<usize>,
}

impl fmt::Display for MatrixProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a: Vec<String> = self.col_degrees.iter().map(|d| d.to_string()).collect();
        let b: Vec<String> = self.row_offsets.iter().map(|d| d.to_string()).collect();
        write!(f, "({}; {})", a.join(","), b.join(","))
    }
}

impl GradedMatrix {
    pub fn new(ambient: WeightSystem, entries: Vec<Vec<Polynomial>>) -> Result<Self> {
        if entries.is_empty() || entries[0].is_empty() {
            return Err(WpsError::domain("matrix must have at least one row and column"));
        }
        let q = entries[0].len();
        for row in &entries {
            if row.len() != q {
                return Err(WpsError::domain("ragged matrix rows"));
            }
            for e in row {
                if e.nvars() != ambient.nvars() {
                    return Err(WpsError::domain("matrix entry over the wrong ring"));
                }
            }
        }
        Ok(GradedMatrix { ambient, entries })
    }

    pub fn ambient(&self) -> &WeightSystem {
        &self.ambient
    }

    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.entries[0].len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<Polynomial>] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[Polynomial] {
        &self.entries[i]
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial> {
        self.entries.iter().map(|r| r[j].clone()).collect()
    }

    pub fn with_columns_permuted(&self, order: &[usize]) -> GradedMatrix {
        let entries = self.entries.iter().map(|r| order.iter().map(|&j| r[j].clone()).collect()).collect();
        GradedMatrix { ambient: self.ambient.clone(), entries }
    }

    /// `P·M` for a constant matrix `P`.
    pub fn left_multiply(&self, p: &[Vec<Q>]) -> Result<GradedMatrix> {
        if p.iter().any(|r| r.len() != self.rows()) {
            return Err(WpsError::domain("left factor has the wrong width"));
        }
        let n = self.ambient.nvars();
        let entries = p
            .iter()
            .map(|prow| {
                (0..self.cols())
                    .map(|j| {
                        let mut acc = Polynomial::zero(n);
                        for (i, c) in prow.iter().enumerate() {
                            acc = &acc + &self.entries[i][j].scale(c);
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        GradedMatrix::new(self.ambient.clone(), entries)
    }

    /// Ideal of all `size × size` minors.
    pub fn minors(&self, size: usize) -> Result<Ideal> {
        if size == 0 || size > self.rows().min(self.cols()) {
            return Err(WpsError::domain(format!(
                "minor size {size} out of range for a {}x{} matrix",
                self.rows(),
                self.cols()
            )));
        }
        let mut gens = Vec::new();
        for rs in combinations(self.rows(), size) {
            for cs in combinations(self.cols(), size) {
                gens.push(self.det(&rs, &cs));
            }
        }
        Ideal::new(self.ambient.clone(), gens)
    }

    fn det(&self, rows: &[usize], cols: &[usize]) -> Polynomial {
        if rows.len() == 1 {
            return self.entries[rows[0]][cols[0]].clone();
        }
        let mut acc = Polynomial::zero(self.ambient.nvars());
        let rest_rows = &rows[1..];
        for (k, &c) in cols.iter().enumerate() {
            let e = &self.entries[rows[0]][c];
            if e.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let sub = &self.det(rest_rows, &rest) * e;
            acc = if k % 2 == 0 { &acc + &sub } else { &acc - &sub };
        }
        acc
    }

    /// Normalized profile: columns sorted by degree, rows sorted by offset.
    pub fn profile_of(&self) -> Result<MatrixProfile> {
        let (p, q) = (self.rows(), self.cols());
        let w = self.ambient.weights();
        let mut deg = vec![vec![None; q]; p];
        for i in 0..p {
            for j in 0..q {
                let e = &self.entries[i][j];
                if e.is_zero() {
                    continue;
                }
                match e.homogeneous_degree(w)? {
                    Some(d) => deg[i][j] = Some(d as i64),
                    None => {
                        return Err(WpsError::invariant(format!("profile error: entry ({i},{j}) is not homogeneous")))
                    }
                }
            }
        }
        // Solve deg[i][j] = a_j + o_i over the bipartite graph of nonzero cells.
        let mut off: Vec<Option<i64>> = vec![None; p];
        let mut col: Vec<Option<i64>> = vec![None; q];
        for start in 0..p {
            if off[start].is_some() {
                continue;
            }
            off[start] = Some(0);
            let mut stack = vec![(true, start)];
            while let Some((is_row, k)) = stack.pop() {
                if is_row {
                    let o = off[k].unwrap();
                    for j in 0..q {
                        if let Some(d) = deg[k][j] {
                            if col[j].is_none() {
                                col[j] = Some(d - o);
                                stack.push((false, j));
                            }
                        }
                    }
                } else {
                    let a = col[k].unwrap();
                    for i in 0..p {
                        if let Some(d) = deg[i][k] {
                            if off[i].is_none() {
                                off[i] = Some(d - a);
                                stack.push((true, i));
                            }
                        }
                    }
                }
            }
        }
        for (j, c) in col.iter().enumerate() {
            if c.is_none() {
                return Err(WpsError::invariant(format!("profile error: column {j} is zero")));
            }
        }
        for i in 0..p {
            for j in 0..q {
                if let Some(d) = deg[i][j] {
                    if d != col[j].unwrap() + off[i].unwrap() {
                        return Err(WpsError::invariant(format!(
                            "profile error: entry ({i},{j}) has degree {d}, inconsistent with its row and column"
                        )));
                    }
                }
            }
        }
        let mut row_order: Vec<usize> = (0..p).collect();
        row_order.sort_by_key(|&i| off[i].unwrap());
        let base = off[row_order[0]].unwrap();
        let mut column_order: Vec<usize> = (0..q).collect();
        column_order.sort_by_key(|&j| col[j].unwrap());
        let mut col_degrees = Vec::new();
        for &j in &column_order {
            let a = col[j].unwrap() + base;
            if a < 0 {
                return Err(WpsError::invariant(format!("profile error: column {j} has negative degree")));
            }
            col_degrees.push(a as u64);
        }
        let row_offsets = row_order[1..].iter().map(|&i| (off[i].unwrap() - base) as u64).collect();
        Ok(MatrixProfile { col_degrees, row_offsets, column_order, row_order })
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::q;
    use crate::ring::parse::VarTable;

    fn mat(w: &[u32], rows: &[&[&str]]) -> GradedMatrix {
        let ws = WeightSystem::new(w.to_vec()).unwrap();
        let t = VarTable::for_weights(&ws);
        let e = rows.iter().map(|r| r.iter().map(|s| t.parse(s).unwrap()).collect()).collect();
        GradedMatrix::new(ws, e).unwrap()
    }

    #[test]
    fn conic_minor() {
        let m = mat(&[1, 1, 1], &[&["x_1", "x_2"], &["x_2", "x_3"]]);
        let i = m.minors(2).unwrap();
        assert_eq!(i.generators().len(), 1);
        let t = VarTable::for_weights(m.ambient());
        assert_eq!(i.generators()[0], t.parse("x_1 x_3 - x_2^2").unwrap());
    }

    #[test]
    fn c1_minors_and_profile() {
        let m = mat(&[1, 1, 2, 2], &[&["x_1", "x_2^2", "y_1"], &["x_2", "y_1", "y_2"]]);
        let i = m.minors(2).unwrap();
        let mut d = i.degrees().unwrap();
        d.sort();
        assert_eq!(d, vec![3, 3, 4]);
        let p = m.profile_of().unwrap();
        assert_eq!(p.col_degrees, vec![1, 2, 2]);
        assert_eq!(p.row_offsets, vec![0]);
        assert_eq!(p.to_string(), "(1,2,2; 0)");
    }

    #[test]
    fn offset_profile_and_errors() {
        // candidate curve with m=2, n=3: [[x1, x2, y],[x2^2, y, z]] over (1,1,2,3)
        let m = mat(&[1, 1, 2, 3], &[&["x_1", "x_2", "y"], &["x_2^2", "y", "z"]]);
        let p = m.profile_of().unwrap();
        assert_eq!((p.col_degrees.clone(), p.row_offsets.clone()), (vec![1, 1, 2], vec![1]));
        let one = mat(&[1, 1], &[&["x_1"]]);
        assert_eq!(one.profile_of().unwrap().to_string(), "(1; )");
        let bad = mat(&[1, 1, 2, 2], &[&["x_1 + y_1", "x_2"], &["x_2", "y_1"]]);
        assert!(bad.profile_of().is_err());
        let zero_row = mat(&[1, 1, 1], &[&["x_1", "x_2"], &["0", "0"]]);
        assert!(zero_row.minors(2).unwrap().is_zero());
    }

    #[test]
    fn sorted_columns_record_permutation() {
        let m = mat(&[1, 1, 2, 2], &[&["y_1", "x_1", "x_2^2"], &["x_1^2", "x_2", "y_2"]]);
        let p = m.profile_of().unwrap();
        assert_eq!(p.col_degrees, vec![1, 2, 2]);
        assert_eq!(p.column_order, vec![1, 0, 2]);
        let swapped = m.left_multiply(&[vec![q(1), q(0)], vec![q(2), q(1)]]).unwrap();
        assert_eq!(swapped.profile_of().unwrap().col_degrees, p.col_degrees);
    }
}
