use std::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::arith::{Q, Z};
use crate::error::{Result, WpsError};
use crate::upoly::ZPoly;

/// `N(t) / Π_e (1 − t^e)` with integer numerator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HilbertSeries {
    numerator: ZPoly,
    denominator: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct Wire {
    numerator: Vec<Value>,
    denominator: Vec<u32>,
}

impl HilbertSeries {
    pub fn new(numerator: ZPoly, mut denominator: Vec<u32>) -> Self {
        denominator.sort_unstable();
        HilbertSeries { numerator, denominator }
    }

    pub fn numerator(&self) -> &ZPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &[u32] {
        &self.denominator
    }

    /// Order of the pole at `t = 1`, i.e. the Krull dimension of the graded module.
    pub fn pole_order(&self) -> usize {
        if self.numerator.is_zero() {
            return 0;
        }
        self.denominator.len().saturating_sub(self.numerator.multiplicity_at_one())
    }

    /// Projective dimension `d = pole order − 1`, absent for the empty scheme.
    pub fn dimension(&self) -> Option<usize> {
        self.pole_order().checked_sub(1)
    }

    /// Power series coefficients `h_0, …, h_{n−1}`.
    pub fn coefficients(&self, n: usize) -> Vec<Z> {
        let mut c: Vec<Z> = (0..n).map(|i| self.numerator.coeff(i)).collect();
        for &e in &self.denominator {
            let e = e as usize;
            for i in e..n {
                let prev = c[i - e].clone();
                c[i] += prev;
            }
        }
        c
    }

    /// Multiplies by `1/(1 − t^m)`.
    pub fn cone(&self, m: u32) -> HilbertSeries {
        let mut d = self.denominator.clone();
        d.push(m);
        HilbertSeries::new(self.numerator.clone(), d)
    }

    /// Cancels denominator factors `(1 − t^e)` dividing the numerator, largest first.
    pub fn cancel_common(&self) -> HilbertSeries {
        let mut num = self.numerator.clone();
        let mut den = self.denominator.clone();
        den.sort_unstable_by(|a, b| b.cmp(a));
        let mut kept = Vec::new();
        for e in den {
            match num.div_exact(&ZPoly::one_minus_t_pow(e as usize)) {
                Some(q) if !num.is_zero() => num = q,
                _ => kept.push(e),
            }
        }
        HilbertSeries::new(num, kept)
    }

    /// Equality as rational functions.
    pub fn same_function(&self, other: &HilbertSeries) -> bool {
        let prod = |d: &[u32]| d.iter().fold(ZPoly::one(), |a, &e| &a * &ZPoly::one_minus_t_pow(e as usize));
        &self.numerator * &prod(&other.denominator) == &other.numerator * &prod(&self.denominator)
    }

    pub fn to_json_value(&self) -> Value {
        let numerator = self
            .numerator
            .coeffs()
            .iter()
            .map(|c| match c.to_i64() {
                Some(v) => Value::from(v),
                None => Value::from(c.to_string()),
            })
            .collect();
        serde_json::to_value(Wire { numerator, denominator: self.denominator.clone() }).expect("serializable")
    }

    pub fn from_json_value(v: &Value) -> Result<Self> {
        let w: Wire = serde_json::from_value(v.clone()).map_err(|e| WpsError::parse(format!("series: {e}")))?;
        let mut coeffs = Vec::with_capacity(w.numerator.len());
        for c in w.numerator {
            let z = match &c {
                Value::Number(n) => n.as_i64().map(Z::from),
                Value::String(s) => s.trim().parse::<Z>().ok(),
                _ => None,
            };
            coeffs.push(z.ok_or_else(|| WpsError::parse(format!("bad numerator coefficient {c}")))?);
        }
        if w.denominator.contains(&0) {
            return Err(WpsError::parse("denominator exponents must be positive"));
        }
        Ok(HilbertSeries::new(ZPoly::new(coeffs), w.denominator))
    }

    pub(crate) fn numerator_at_one_after(&self, cancel: usize) -> Result<Q> {
        let mut n = self.numerator.clone();
        for _ in 0..cancel {
            n = n.div_one_minus_t().ok_or_else(|| {
                WpsError::domain("numerator is not divisible by the required power of (1 − t); dimension mismatch")
            })?;
        }
        Ok(Q::from_integer(n.eval_one()))
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.numerator.to_qpoly();
        let mut num = String::new();
        // lowest degree first reads naturally for series
        for (i, c) in n.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if num.is_empty() {
                if neg {
                    num.push('-');
                }
            } else {
                num.push_str(if neg { " - " } else { " + " });
            }
            let coef = if a.is_one() && i > 0 { String::new() } else { crate::arith::fmt_q(&a) };
            let mon = match i {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            };
            num.push_str(&coef);
            num.push_str(&mon);
        }
        if num.is_empty() {
            num.push('0');
        }
        if self.denominator.is_empty() {
            return write!(f, "{num}");
        }
        let den: Vec<String> =
            self.denominator.iter().map(|&e| if e == 1 { "(1 - t)".into() } else { format!("(1 - t^{e})") }).collect();
        write!(f, "({num}) / ({})", den.join(""))
    }
}
