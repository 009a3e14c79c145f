//! Monte Carlo test of pseudo 1-genericity through sampled generalized rows.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{fmt_q, q, Q};
use crate::error::Result;
use crate::groebner;
use crate::ring::{GradedMatrix, Ideal, Polynomial};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum ProbeOutcome {
    /// Some generalized row is provably not a regular sequence.
    CertifiedNo { witness: String },
    /// Every sampled row passed.
    ProbableYes { rows_checked: usize },
    /// An inhomogeneous row has a codimension deficit that may lie away from the origin.
    Inconclusive { witness: String },
}

/// Default sample sequence `1, −1, 2, −2, 3, …`.
pub fn sample_parameters(count: usize) -> Vec<Q> {
    (0..count).map(|k| {
        let v = (k / 2 + 1) as i64;
        if k % 2 == 0 { q(v) } else { q(-v) }
    }).collect()
}

fn render(l: &[Q]) -> String {
    format!("[{}]", l.iter().map(fmt_q).collect::<Vec<_>>().join(":"))
}

/// Tests the unit rows and the rows `(1, c, c², …)` for `c` in the sample sequence: each
/// must generate an ideal of codimension equal to the number of columns.
pub fn pseudo_1generic_probe(m: &GradedMatrix, sample_count: usize) -> Result<ProbeOutcome> {
    let p = m.rows();
    let ws = m.ambient();
    let mut params: Vec<Vec<Q>> = (0..p)
        .map(|r| (0..p).map(|s| if r == s { Q::one() } else { Q::zero() }).collect())
        .collect();
    if p > 1 {
        for c in sample_parameters(sample_count) {
            let mut l = vec![Q::one()];
            for _ in 1..p {
                let next = l.last().unwrap() * &c;
                l.push(next);
            }
            params.push(l);
        }
    }
    let n = ws.nvars();
    for l in &params {
        let entries: Vec<Polynomial> = (0..m.cols())
            .map(|j| {
                (0..p).fold(Polynomial::zero(n), |acc, r| &acc + &m.entry(r, j).scale(&l[r]))
            })
            .collect();
        let homogeneous = entries.iter().all(|e| e.is_homogeneous(ws.weights()));
        if entries.iter().any(Polynomial::is_zero) {
            return Ok(ProbeOutcome::CertifiedNo { witness: render(l) });
        }
        let ideal = Ideal::new(ws.clone(), entries)?;
        if groebner::codimension(&ideal)? < m.cols() {
            return Ok(if homogeneous {
                ProbeOutcome::CertifiedNo { witness: render(l) }
            } else {
                ProbeOutcome::Inconclusive { witness: render(l) }
            });
        }
    }
    Ok(ProbeOutcome::ProbableYes { rows_checked: params.len() })
}
