//! Eagon–Northcott Betti tables, wN_p conditions and regularities of scrolls.

use serde::Serialize;

use super::profile::{scroll_degree, Profile};
use crate::arith::Q;
use crate::betti::BettiTable;
use crate::error::{Result, WpsError};
use crate::groebner::ResolutionData;
use crate::ring::WeightSystem;

/// `β_{i,j} = i · [t^j x^{i+1}] Π (1 − t^{u_ℓ} x)` up to sign, plus `β_{0,0} = 1`.
pub fn betti_from_multiset(u: &[u32]) -> Result<BettiTable> {
    let q = u.len();
    if q < 2 {
        return Err(WpsError::domain("Eagon–Northcott tables need at least two columns"));
    }
    // counts[s] maps subset sums to the number of s-element sub-multisets (by position)
    let mut counts: Vec<std::collections::BTreeMap<u64, u64>> = vec![Default::default(); q + 1];
    counts[0].insert(0, 1);
    for &w in u {
        for s in (0..q).rev() {
            let add: Vec<(u64, u64)> = counts[s].iter().map(|(&j, &c)| (j + w as u64, c)).collect();
            for (j, c) in add {
                *counts[s + 1].entry(j).or_insert(0) += c;
            }
        }
    }
    let mut t = BettiTable::new();
    t.add(0, 0, 1);
    for i in 1..q {
        for (&j, &c) in &counts[i + 1] {
            t.add(i, j, i as u64 * c);
        }
    }
    Ok(t)
}

pub fn betti_from_profile(p: &Profile) -> BettiTable {
    betti_from_multiset(&p.multiset()).expect("profiles have at least two columns")
}

/// Sum of the `i + 1` largest column degrees.
pub fn tau(p: &Profile, i: usize) -> Result<u64> {
    let u = p.multiset();
    if i == 0 || i + 1 > u.len() {
        return Err(WpsError::domain(format!("tau_{i} undefined for {} columns", u.len())));
    }
    Ok(u.iter().rev().take(i + 1).map(|&w| w as u64).sum())
}

/// What is known about the depth of `S/I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DepthInfo {
    CohenMacaulay,
    Depth(usize),
}

impl From<&ResolutionData> for DepthInfo {
    fn from(r: &ResolutionData) -> Self {
        DepthInfo::Depth(r.depth)
    }
}

/// Outcome of the wN_p test; `columns[p-1]` is wN_p for `1 ≤ p ≤ pd`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WnpReport {
    pub wn0: bool,
    pub columns: Vec<bool>,
    pub all_p: bool,
    /// Largest `p` with wN_p; `None` when wN_0 fails or when every `p` holds.
    pub max_p: Option<usize>,
}

/// Table rows `w^{i+1} − i` bounding column `i`, for `i = 1..=pd`.
pub fn wnp_threshold_rows(ws: &WeightSystem, pd: usize) -> Vec<i64> {
    (1..=pd)
        .map(|i| {
            let w = ws.weights().iter().rev().take(i + 1).map(|&x| x as i64).sum::<i64>();
            w - i as i64
        })
        .collect()
}

pub fn check_wnp(b: &BettiTable, ws: &WeightSystem, depth: DepthInfo) -> WnpReport {
    let wn0 = match depth {
        DepthInfo::CohenMacaulay => true,
        DepthInfo::Depth(d) => d >= 2,
    };
    let pd = b.projective_dimension();
    let mut columns = Vec::with_capacity(pd);
    let mut ok = wn0;
    for i in 1..=pd {
        let bound: u64 = if i + 1 <= ws.nvars() {
            ws.weights().iter().rev().take(i + 1).map(|&x| x as u64).sum()
        } else {
            0
        };
        ok = ok && b.max_degree(i).map_or(true, |j| j <= bound);
        columns.push(ok);
    }
    let all_p = wn0 && columns.iter().all(|&c| c);
    let max_p = if !wn0 || all_p { None } else { Some(columns.iter().take_while(|&&c| c).count()) };
    WnpReport { wn0, columns, all_p, max_p }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegularityReport {
    pub k_reg: i64,
    pub w_reg: i64,
    #[serde(with = "crate::arith::serde_q")]
    pub degree: Q,
    pub wnp: WnpReport,
}

/// Koszul and weighted regularity from the closed forms, checked against the Betti table.
pub fn regularities(p: &Profile) -> Result<RegularityReport> {
    let ws = p.ambient();
    let d = p.dim();
    let lost: i64 = p
        .r()
        .iter()
        .zip(ws.grouped())
        .map(|(&r, &(m, a))| (a - r) as i64 * m as i64)
        .sum();
    let wd = ws.w_upper(d)? as i64;
    let k_reg = wd + 1 - lost;
    let w_reg = d as i64 + 1 - lost;
    let betti = betti_from_profile(p);
    let shift: i64 = ws.grouped().iter().map(|&(m, a)| a as i64 * (m as i64 - 1)).sum();
    let from_table = betti.height() - shift;
    if from_table != w_reg {
        return Err(WpsError::invariant(format!(
            "weighted regularity {w_reg} disagrees with the Betti height recomputation {from_table} for {p}"
        )));
    }
    let wnp = check_wnp(&betti, ws, DepthInfo::CohenMacaulay);
    Ok(RegularityReport { k_reg, w_reg, degree: scroll_degree(p), wnp })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig5() -> WeightSystem {
        WeightSystem::new(vec![1, 1, 3, 3, 6, 6, 6]).unwrap()
    }

    #[test]
    fn twisted_cubic() {
        let t = betti_from_multiset(&[1, 1, 1]).unwrap();
        assert_eq!(t.entries().collect::<Vec<_>>(), vec![(0, 0, 1), (1, 2, 3), (2, 3, 2)]);
    }

    #[test]
    fn left_table_of_the_three() {
        let p = Profile::from_multiset(fig5(), &[1, 3, 6, 6, 6]).unwrap();
        let t = betti_from_profile(&p);
        let expect = [
            (1, 4, 1), (1, 7, 3), (1, 9, 3), (1, 12, 3),
            (2, 10, 6), (2, 13, 6), (2, 15, 6), (2, 18, 2),
            (3, 16, 9), (3, 19, 3), (3, 21, 3),
            (4, 22, 4),
        ];
        let got: Vec<_> = t.entries().filter(|e| e.0 > 0).collect();
        assert_eq!(got, expect.to_vec());
        assert_eq!(tau(&p, 1).unwrap(), 12);
        assert_eq!(tau(&p, 4).unwrap(), 22);
        assert!(tau(&p, 5).is_err());
        assert_eq!(wnp_threshold_rows(p.ambient(), 4), vec![11, 16, 18, 20]);
    }

    #[test]
    fn wnp_and_depth() {
        let p = Profile::from_multiset(fig5(), &[1, 3, 3, 6, 6]).unwrap();
        let r = check_wnp(&betti_from_profile(&p), p.ambient(), DepthInfo::CohenMacaulay);
        assert!(r.all_p && r.max_p.is_none());
        let r = check_wnp(&betti_from_profile(&p), p.ambient(), DepthInfo::Depth(1));
        assert!(!r.wn0 && !r.all_p);
        // a generator in degree 13 > w^2 breaks wN_1
        let t = BettiTable::from_entries([((0, 0), 1), ((1, 13), 1)]);
        let r = check_wnp(&t, &fig5(), DepthInfo::CohenMacaulay);
        assert_eq!((r.columns.clone(), r.max_p), (vec![false], Some(0)));
    }

    #[test]
    fn regularity_rows() {
        let ws = fig5();
        let reg = |u: &[u32]| {
            let r = regularities(&Profile::from_multiset(ws.clone(), u).unwrap()).unwrap();
            (r.k_reg, r.w_reg)
        };
        assert_eq!(reg(&[1, 3, 3, 6, 6, 6]), (6, 1));
        assert_eq!(reg(&[1, 3, 6, 6, 6]), (9, -1));
        assert_eq!(reg(&[1, 3, 3]), (3, -14));
        let ws4 = WeightSystem::from_grouped(&[(1, 4), (2, 4), (4, 4)]).unwrap();
        for u in [&[1, 2, 2, 2, 2, 4][..], &[1, 1, 1, 2, 4, 4]] {
            let r = regularities(&Profile::from_multiset(ws4.clone(), u).unwrap()).unwrap();
            assert_eq!((r.k_reg, r.w_reg), (6, -8));
        }
    }
}
