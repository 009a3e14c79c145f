use num_traits::Zero;
use serde_json::{json, Value};

use super::series::HilbertSeries;
use crate::arith::{divisors, factorial, fmt_q, gcd_u64, lcm_all, lcm_u64, parse_q, Q};
use crate::error::{Result, WpsError};
use crate::upoly::QPoly;

/// Periodic family of polynomials `Q^0, …, Q^{p−1}` with `HF(t) = Q^{t mod p}(t)` for large `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiPolynomial {
    period: usize,
    strands: Vec<QPoly>,
    degree: usize,
}

impl QuasiPolynomial {
    pub fn new(strands: Vec<QPoly>, degree: usize) -> Result<Self> {
        if strands.is_empty() {
            return Err(WpsError::invariant("a quasi-polynomial needs at least one strand"));
        }
        Ok(QuasiPolynomial { period: strands.len(), strands, degree })
    }

    pub fn period(&self) -> usize {
        self.period
    }

    pub fn strands(&self) -> &[QPoly] {
        &self.strands
    }

    pub fn strand(&self, j: usize) -> &QPoly {
        &self.strands[j % self.period]
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn eval(&self, t: u64) -> Q {
        self.strand(t as usize).eval(&Q::from_integer(t.into()))
    }

    /// `c_d(j)`: the degree-`d` coefficient of strand `j`.
    pub fn leading_coefficient(&self, j: usize) -> Q {
        self.strand(j).coeff(self.degree)
    }

    pub fn has_constant_leading_coefficient(&self) -> bool {
        (1..self.period).all(|j| self.leading_coefficient(j) == self.leading_coefficient(0))
    }

    pub fn to_json_value(&self) -> Value {
        let strands: Vec<Vec<String>> =
            self.strands.iter().map(|s| s.coeffs().iter().map(fmt_q).collect()).collect();
        json!({ "period": self.period, "degree": self.degree, "strands": strands })
    }

    pub fn from_json_value(v: &Value) -> Result<Self> {
        let degree = v.get("degree").and_then(Value::as_u64).ok_or_else(|| WpsError::parse("missing degree"))?;
        let arr = v.get("strands").and_then(Value::as_array).ok_or_else(|| WpsError::parse("missing strands"))?;
        let mut strands = Vec::new();
        for s in arr {
            let cs = s.as_array().ok_or_else(|| WpsError::parse("strand must be an array"))?;
            let mut c = Vec::new();
            for x in cs {
                let q = match x {
                    Value::String(s) => parse_q(s)?,
                    Value::Number(n) => Q::from_integer(
                        n.as_i64().ok_or_else(|| WpsError::parse("non-integer coefficient"))?.into(),
                    ),
                    _ => return Err(WpsError::parse("bad coefficient")),
                };
                c.push(q);
            }
            strands.push(QPoly::new(c));
        }
        Self::new(strands, degree as usize)
    }
}

/// Hilbert quasi-polynomial of a series with a pole at `t = 1`.
pub fn quasi_polynomial(hs: &HilbertSeries) -> Result<QuasiPolynomial> {
    let pole = hs.pole_order();
    if pole == 0 {
        return Err(WpsError::domain("series has no pole at t = 1"));
    }
    let d = pole - 1;
    let l = lcm_all(hs.denominator().iter().map(|&e| e as u64)) as usize;
    let t0 = hs.numerator().degree().unwrap_or(0) + 1;
    let samples = d + 3;
    let h = hs.coefficients(t0 + l * (samples + 1));
    let mut strands = Vec::with_capacity(l);
    for j in 0..l {
        let start = t0 + (j + l - t0 % l) % l;
        let pts: Vec<(Q, Q)> = (0..samples)
            .map(|k| {
                let t = start + k * l;
                (Q::from_integer(t.into()), Q::from_integer(h[t].clone()))
            })
            .collect();
        let p = QPoly::interpolate(&pts[..d + 1]);
        for (x, y) in &pts[d + 1..] {
            if &p.eval(x) != y {
                return Err(WpsError::invariant(format!(
                    "strand {j} failed to stabilize beyond t = {t0}"
                )));
            }
        }
        strands.push(p);
    }
    let period = divisors(l as u64)
        .into_iter()
        .map(|p| p as usize)
        .find(|&p| (0..l).all(|j| strands[j] == strands[j % p]))
        .unwrap_or(l);
    strands.truncate(period);
    QuasiPolynomial::new(strands, d)
}

/// `d! · LC_0`.
pub fn degree_from_qp(qp: &QuasiPolynomial, d: usize) -> Result<Q> {
    let s0 = qp.strand(0);
    if s0.degree().is_none_or(|k| k < d) {
        return Err(WpsError::domain(format!("strand 0 has degree below {d}; the degree is not defined by it")));
    }
    Ok(Q::from_integer(factorial(d as u64)) * s0.coeff(d))
}

/// Degree of the `m`-cone over `X` from the quasi-polynomial of `X`:
/// `(d!/q′) Σ_{0≤j<q, gcd(m,q) | j} c_d(j)`, with `q′ = lcm(q, m)`.
pub fn cone_degree(qp: &QuasiPolynomial, d: usize, m: u64, q: u64, q_prime: u64) -> Result<Q> {
    if m == 0 || q == 0 {
        return Err(WpsError::domain("m and q must be positive"));
    }
    if q % qp.period() as u64 != 0 {
        return Err(WpsError::domain("q must be a multiple of the period"));
    }
    if q_prime != lcm_u64(q, m) {
        return Err(WpsError::domain("q′ must equal lcm(q, m)"));
    }
    let g = gcd_u64(m, q);
    let sum = (0..q).filter(|j| j % g == 0).fold(Q::zero(), |acc, j| acc + qp.leading_coefficient(j as usize));
    let value = Q::from_integer(factorial(d as u64)) * sum / Q::from_integer(q_prime.into());
    if qp.has_constant_leading_coefficient() {
        let direct = degree_from_qp(qp, d)? / Q::from_integer(m.into());
        if direct != value {
            return Err(WpsError::invariant(format!(
                "cone degree {} disagrees with deg/m = {}",
                fmt_q(&value),
                fmt_q(&direct)
            )));
        }
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{q, qf};
    use crate::upoly::ZPoly;

    #[test]
    fn full_ring_one_two() {
        let hs = HilbertSeries::new(ZPoly::one(), vec![1, 2]);
        let qp = quasi_polynomial(&hs).unwrap();
        assert_eq!(qp.period(), 2);
        assert_eq!(qp.strands()[0], QPoly::new(vec![q(1), qf(1, 2)]));
        assert_eq!(qp.strands()[1], QPoly::new(vec![qf(1, 2), qf(1, 2)]));
        assert!(qp.has_constant_leading_coefficient());
        assert_eq!(degree_from_qp(&qp, 1).unwrap(), qf(1, 2));
        let back = QuasiPolynomial::from_json_value(&qp.to_json_value()).unwrap();
        assert_eq!(back, qp);
    }

    #[test]
    fn plane_and_degenerate_strand() {
        let hs = HilbertSeries::new(ZPoly::one(), vec![1, 1, 1]);
        let qp = quasi_polynomial(&hs).unwrap();
        assert_eq!(qp.period(), 1);
        assert_eq!(qp.strands()[0], QPoly::new(vec![q(1), qf(3, 2), qf(1, 2)]));
        let odd = QuasiPolynomial::new(vec![QPoly::zero(), QPoly::new(vec![q(0), q(1)])], 1).unwrap();
        assert!(degree_from_qp(&odd, 1).is_err());
    }
}
