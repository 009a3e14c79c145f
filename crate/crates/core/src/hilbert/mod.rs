//! Hilbert series, quasi-polynomials and degrees.

mod quasi;
mod series;
mod weighted;

pub use quasi::{cone_degree, degree_from_qp, quasi_polynomial, QuasiPolynomial};
pub use series::HilbertSeries;
pub use weighted::weighted_series_degree;

use crate::arith::{fmt_q, Q};
use crate::error::{Result, WpsError};
use crate::groebner;
use crate::ring::Ideal;
use crate::upoly::ZPoly;

/// `HS(t) = P(t) / Π_{e ∈ kept} (1 − t^e)` with `P = p_num / p_den` regular at `t = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedSeries {
    pub p_num: ZPoly,
    pub p_den: ZPoly,
    pub kept: Vec<u32>,
}

impl ReducedSeries {
    pub fn p_at_one(&self) -> Q {
        Q::new(self.p_num.eval_one(), self.p_den.eval_one())
    }

    /// `P(1) / Π kept`.
    pub fn degree(&self) -> Q {
        let prod: u64 = self.kept.iter().map(|&e| e as u64).product();
        self.p_at_one() / Q::from_integer(prod.into())
    }

    pub fn render(&self) -> String {
        format!(
            "P(t) = ({}) / ({}), kept {:?}, P(1) = {}",
            self.p_num.render(),
            self.p_den.render(),
            self.kept,
            fmt_q(&self.p_at_one())
        )
    }
}

/// Keeps the denominator factors listed in `kept` (a sub-multiset of size `d + 1`) and
/// absorbs every other `(1 − t^e)` as `1 + t + … + t^{e−1}` into `P`.
pub fn reduce_series(hs: &HilbertSeries, d: usize, kept: &[u32]) -> Result<ReducedSeries> {
    if kept.len() != d + 1 {
        return Err(WpsError::domain(format!("a {d}-dimensional reduction keeps {} exponents", d + 1)));
    }
    let mut removed: Vec<u32> = hs.denominator().to_vec();
    for e in kept {
        let pos = removed
            .iter()
            .position(|x| x == e)
            .ok_or_else(|| WpsError::domain(format!("{e} is not an available denominator exponent")))?;
        removed.remove(pos);
    }
    let mut num = hs.numerator().clone();
    let mut den = ZPoly::one();
    for &e in &removed {
        num = num.div_one_minus_t().ok_or_else(|| {
            WpsError::domain("numerator is not divisible by the required power of (1 − t); dimension mismatch")
        })?;
        den = &den * &ZPoly::geometric(e as usize);
    }
    let mut kept = kept.to_vec();
    kept.sort_unstable_by(|a, b| b.cmp(a));
    Ok(ReducedSeries { p_num: num, p_den: den, kept })
}

/// `lim_{t→1} (1 − t)^{d+1} HS(t)`, the degree of a `d`-dimensional scheme.
pub fn degree_from_series(hs: &HilbertSeries, d: usize) -> Result<Q> {
    let den = hs.denominator();
    if den.len() < d + 1 {
        return Err(WpsError::domain(format!("series has pole order at most {} < {}", den.len(), d + 1)));
    }
    let top = hs.numerator_at_one_after(den.len() - d - 1)?;
    let prod: u64 = den.iter().map(|&e| e as u64).product();
    Ok(top / Q::from_integer(prod.into()))
}

/// Series of the `m`-cone.
pub fn cone_series(hs: &HilbertSeries, m: u32) -> HilbertSeries {
    hs.cone(m)
}

/// Dimension and degree of `V(I)` through the Gröbner pipeline.
pub fn ideal_degree(ideal: &Ideal) -> Result<(usize, Q)> {
    let hs = groebner::hilbert_series(ideal)?;
    let d = hs.dimension().ok_or_else(|| WpsError::domain("the ideal defines the empty scheme"))?;
    Ok((d, degree_from_series(&hs, d)?))
}

/// All sub-multisets of size `k` of a sorted multiset, each listed once.
pub fn sub_multisets(items: &[u32], k: usize) -> Vec<Vec<u32>> {
    let mut sorted = items.to_vec();
    sorted.sort_unstable();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(s: &[u32], k: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let mut i = 0;
        while i < s.len() {
            cur.push(s[i]);
            go(&s[i + 1..], k, cur, out);
            cur.pop();
            let v = s[i];
            while i < s.len() && s[i] == v {
                i += 1;
            }
        }
    }
    go(&sorted, k, &mut cur, &mut out);
    out
}
