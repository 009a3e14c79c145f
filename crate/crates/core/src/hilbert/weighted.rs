use std::collections::BTreeSet;

use num_traits::Zero;

use crate::arith::{lcm_all, Q};
use crate::error::{Result, WpsError};
use crate::groebner::has_basepoint;
use crate::linalg::{Echelon, SparseRow};
use crate::ring::{Polynomial, WeightSystem};

const WINDOW: usize = 6;
const MAX_STEPS: usize = 400;

/// Degree of the image of P¹ under binary forms of degrees `w_i·e`, as the limit of
/// `deg O(e) · dim (R_W)_{iq} / dim (R_{O(e)})_{iq}`.
pub fn weighted_series_degree(images: &[Polynomial], ws: &WeightSystem) -> Result<Q> {
    let n = ws.nvars();
    if images.len() != n {
        return Err(WpsError::domain(format!("expected {n} images, got {}", images.len())));
    }
    let mut degs = Vec::new();
    for f in images {
        match f.homogeneous_degree(&[1, 1]) {
            Ok(Some(d)) => degs.push(d),
            _ => return Err(WpsError::domain("images must be nonzero binary forms")),
        }
    }
    let e = degs[0] / ws.weights()[0] as u64;
    if e == 0 || degs.iter().zip(ws.weights()).any(|(&d, &w)| d != w as u64 * e) {
        return Err(WpsError::domain("image degrees are not e·w for a common e"));
    }
    if has_basepoint(images) {
        return Err(WpsError::domain("the weighted series has a basepoint"));
    }
    let q = lcm_all(ws.weights().iter().map(|&w| w as u64)) as usize;
    let monomial = images.iter().all(|f| f.len() == 1);
    let mut dims: Vec<usize> = Vec::new();
    if monomial {
        let a: Vec<usize> = images.iter().map(|f| f.terms().next().unwrap().0 .0[0] as usize).collect();
        let mut reach: Vec<BTreeSet<usize>> = vec![BTreeSet::from([0])];
        for i in 1..=MAX_STEPS {
            while reach.len() <= i * q {
                let j = reach.len();
                let mut r = BTreeSet::new();
                for (v, &w) in ws.weights().iter().enumerate() {
                    let w = w as usize;
                    if w <= j {
                        r.extend(reach[j - w].iter().map(|x| x + a[v]));
                    }
                }
                reach.push(r);
            }
            dims.push(reach[i * q].len());
            if let Some(v) = stable(&dims) {
                return Ok(Q::new(v.into(), (q as i64).into()));
            }
        }
    } else {
        // dense coefficient vectors indexed by the s-exponent
        let vecs: Vec<Vec<Q>> = images
            .iter()
            .map(|f| {
                let d = f.homogeneous_degree(&[1, 1]).unwrap().unwrap() as usize;
                let mut v = vec![Q::zero(); d + 1];
                for (m, c) in f.terms() {
                    v[m.0[0] as usize] = c.clone();
                }
                v
            })
            .collect();
        let mut spans: Vec<Vec<Vec<Q>>> = vec![vec![vec![Q::from_integer(1.into())]]];
        for i in 1..=MAX_STEPS {
            while spans.len() <= i * q {
                let j = spans.len();
                let mut ech = Echelon::new();
                let mut basis = Vec::new();
                for (v, &w) in ws.weights().iter().enumerate() {
                    let w = w as usize;
                    if w > j {
                        continue;
                    }
                    for b in &spans[j - w] {
                        let prod = convolve(b, &vecs[v]);
                        let row: SparseRow =
                            prod.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, c.clone())).collect();
                        if ech.insert(row) {
                            basis.push(prod);
                        }
                    }
                }
                spans.push(basis);
            }
            dims.push(spans[i * q].len());
            if let Some(v) = stable(&dims) {
                return Ok(Q::new(v.into(), (q as i64).into()));
            }
        }
    }
    Err(WpsError::budget(format!("series dimensions did not stabilize within {MAX_STEPS} steps")))
}

fn convolve(a: &[Q], b: &[Q]) -> Vec<Q> {
    let mut out = vec![Q::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Common first difference of the last `WINDOW + 1` values, if any.
fn stable(d: &[usize]) -> Option<i64> {
    if d.len() < WINDOW + 1 {
        return None;
    }
    let tail = &d[d.len() - WINDOW - 1..];
    let diff = tail[1] as i64 - tail[0] as i64;
    tail.windows(2).all(|w| w[1] as i64 - w[0] as i64 == diff).then_some(diff)
}
