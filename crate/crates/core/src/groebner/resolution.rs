//! Graded Betti numbers of `S/I` from the Koszul homology `Tor_i(S/I, k)_j`.

use std::collections::HashMap;

use super::{default_basis, GroebnerBasis};
use crate::arith::Q;
use crate::betti::BettiTable;
use crate::error::{Result, WpsError};
use crate::linalg::{rank, SparseRow};
use crate::ring::Ideal;

/// Minimal graded free resolution data of `S/I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionData {
    pub betti: BettiTable,
    pub projective_dimension: usize,
    pub depth: usize,
}

struct Koszul<'a> {
    gb: &'a GroebnerBasis,
    weights: Vec<u32>,
    standard: HashMap<u64, Vec<Vec<u32>>>,
    ranks: HashMap<(usize, u64), usize>,
    subsets: Vec<Vec<u64>>,
}

impl Koszul<'_> {
    fn standard(&mut self, d: i64) -> Vec<Vec<u32>> {
        if d < 0 {
            return Vec::new();
        }
        let d = d as u64;
        if !self.standard.contains_key(&d) {
            let v = self.gb.standard_monomials(d).into_iter().map(|m| m.0).collect();
            self.standard.insert(d, v);
        }
        self.standard[&d].clone()
    }

    fn set_degree(&self, f: u64) -> i64 {
        (0..self.weights.len()).filter(|v| f >> v & 1 == 1).map(|v| self.weights[v] as i64).sum()
    }

    /// Basis of `(K_i ⊗ S/I)_j` as `(subset, standard monomial)`.
    fn basis(&mut self, i: usize, j: u64) -> Vec<(u64, Vec<u32>)> {
        let mut out = Vec::new();
        for f in self.subsets[i].clone() {
            for m in self.standard(j as i64 - self.set_degree(f)) {
                out.push((f, m));
            }
        }
        out
    }

    fn dim(&mut self, i: usize, j: u64) -> usize {
        if i >= self.subsets.len() {
            return 0;
        }
        self.subsets[i].clone().iter().map(|&f| self.standard(j as i64 - self.set_degree(f)).len()).sum()
    }

    /// Rank of `d_i : (K_i)_j → (K_{i−1})_j`.
    fn rank(&mut self, i: usize, j: u64) -> usize {
        if i == 0 || i >= self.subsets.len() {
            return 0;
        }
        if let Some(&r) = self.ranks.get(&(i, j)) {
            return r;
        }
        let src = self.basis(i, j);
        let tgt = self.basis(i - 1, j);
        let r = if src.is_empty() || tgt.is_empty() {
            0
        } else {
            let index: HashMap<(u64, Vec<u32>), usize> =
                tgt.into_iter().enumerate().map(|(k, b)| (b, k)).collect();
            let mut nf = self.gb.normal_form_cache();
            let mut rows: Vec<SparseRow> = Vec::with_capacity(src.len());
            for (f, m) in src {
                let mut acc: HashMap<usize, Q> = HashMap::new();
                let mut sign = true;
                for v in 0..self.weights.len() {
                    if f >> v & 1 == 0 {
                        continue;
                    }
                    let g = f & !(1u64 << v);
                    let mut e = m.clone();
                    e[v] += 1;
                    for (t, c) in nf.of(&e) {
                        let k = index[&(g, t.clone())];
                        let entry = acc.entry(k).or_default();
                        if sign {
                            *entry += c;
                        } else {
                            *entry -= c;
                        }
                    }
                    sign = !sign;
                }
                let mut row: SparseRow = acc.into_iter().filter(|(_, c)| *c != Q::default()).collect();
                row.sort_by_key(|e| e.0);
                rows.push(row);
            }
            rank(rows)
        };
        self.ranks.insert((i, j), r);
        r
    }
}

/// Betti table, projective dimension and depth of `S/I`.
pub fn resolution_data(ideal: &Ideal) -> Result<ResolutionData> {
    ideal.require_homogeneous()?;
    let gb = default_basis(ideal)?;
    if gb.is_unit() {
        return Err(WpsError::domain("the unit ideal has a zero quotient"));
    }
    let n = ideal.ambient().nvars();
    if n > 63 {
        return Err(WpsError::domain("at most 63 variables are supported"));
    }
    let weights = ideal.ambient().weights().to_vec();
    let lts: Vec<Vec<u32>> = gb.lt_ideal().iter().map(|m| m.0.clone()).collect();
    let wd = |e: &[u32]| -> u64 { e.iter().zip(&weights).map(|(&a, &w)| a as u64 * w as u64).sum() };
    let full_lcm: Vec<u32> = (0..n).map(|v| lts.iter().map(|e| e[v]).max().unwrap_or(0)).collect();
    let lcm_deg = wd(&full_lcm);
    let mut lt_degs: Vec<u64> = lts.iter().map(|e| wd(e)).collect();
    lt_degs.sort_unstable_by(|a, b| b.cmp(a));

    let mut subsets = vec![Vec::new(); n + 1];
    for f in 0u64..(1u64 << n) {
        subsets[f.count_ones() as usize].push(f);
    }
    let mut sorted_w = weights.clone();
    sorted_w.sort_unstable();

    let mut k = Koszul { gb: &gb, weights: weights.clone(), standard: HashMap::new(), ranks: HashMap::new(), subsets };
    let mut betti = BettiTable::new();
    betti.add(0, 0, 1);
    let top = n.min(lts.len());
    for i in 1..=top {
        let hi = lcm_deg.min(lt_degs[..i].iter().sum());
        let lo: u64 = sorted_w[..i].iter().map(|&w| w as u64).sum();
        for j in lo..=hi {
            let d = k.dim(i, j);
            if d == 0 {
                continue;
            }
            let b = d - k.rank(i, j) - k.rank(i + 1, j);
            betti.add(i, j, b as u64);
        }
    }
    let pd = betti.projective_dimension();
    Ok(ResolutionData { betti, projective_dimension: pd, depth: n - pd })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{VarTable, WeightSystem};

    fn ideal(w: &[u32], gens: &[&str]) -> Ideal {
        let ws = WeightSystem::new(w.to_vec()).unwrap();
        let t = VarTable::for_weights(&ws);
        Ideal::new(ws, gens.iter().map(|s| t.parse(s).unwrap()).collect()).unwrap()
    }

    #[test]
    fn hypersurface() {
        let r = resolution_data(&ideal(&[1, 1, 2], &["x_1^2 y + y^2"])).unwrap();
        assert_eq!(r.projective_dimension, 1);
        assert_eq!(r.betti.get(1, 4), 1);
        assert_eq!(r.depth, 2);
    }

    #[test]
    fn twisted_cubic_is_eagon_northcott() {
        let r = resolution_data(&ideal(&[1, 1, 1, 1], &["x0 x2 - x1^2", "x1 x3 - x2^2", "x0 x3 - x1 x2"])).unwrap();
        assert_eq!(r.betti.totals(), vec![1, 3, 2]);
        assert_eq!(r.betti.get(1, 2), 3);
        assert_eq!(r.betti.get(2, 3), 2);
        assert_eq!(r.depth, 2);
    }

    #[test]
    fn zero_ideal() {
        let r = resolution_data(&Ideal::zero(WeightSystem::new(vec![1, 2]).unwrap())).unwrap();
        assert_eq!(r.projective_dimension, 0);
        assert_eq!(r.depth, 2);
    }
}
