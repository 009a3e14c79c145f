//! Dense univariate polynomials over Z and Q in a variable `t`.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::arith::{fmt_q, Q, Z};

/// Integer coefficients, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ZPoly(Vec<Z>);

impl ZPoly {
    pub fn new(mut c: Vec<Z>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        ZPoly(c)
    }

    pub fn from_i64(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| Z::from(x)).collect())
    }

    pub fn zero() -> Self {
        ZPoly(Vec::new())
    }

    pub fn one() -> Self {
        ZPoly(vec![Z::one()])
    }

    /// `t^k`.
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![Z::zero(); k + 1];
        c[k] = Z::one();
        ZPoly(c)
    }

    /// `1 − t^e`.
    pub fn one_minus_t_pow(e: usize) -> Self {
        let mut c = vec![Z::zero(); e + 1];
        c[0] = Z::one();
        c[e] -= Z::one();
        Self::new(c)
    }

    /// `1 + t + … + t^{e−1}`.
    pub fn geometric(e: usize) -> Self {
        ZPoly(vec![Z::one(); e])
    }

    pub fn coeffs(&self) -> &[Z] {
        &self.0
    }

    pub fn coeff(&self, i: usize) -> Z {
        self.0.get(i).cloned().unwrap_or_else(Z::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![Z::zero(); k];
        c.extend(self.0.iter().cloned());
        ZPoly(c)
    }

    pub fn eval_one(&self) -> Z {
        self.0.iter().fold(Z::zero(), |a, b| a + b)
    }

    pub fn eval(&self, x: &Q) -> Q {
        self.0.iter().rev().fold(Q::zero(), |acc, c| acc * x + Q::from_integer(c.clone()))
    }

    /// Exact quotient by `1 − t`, if divisible.
    pub fn div_one_minus_t(&self) -> Option<ZPoly> {
        if self.is_zero() {
            return Some(self.clone());
        }
        if !self.eval_one().is_zero() {
            return None;
        }
        // f = (1 − t) g  ⇒  g_i = Σ_{j≤i} f_j
        let mut g = Vec::with_capacity(self.0.len() - 1);
        let mut run = Z::zero();
        for c in &self.0[..self.0.len() - 1] {
            run += c;
            g.push(run.clone());
        }
        Some(ZPoly::new(g))
    }

    /// Multiplicity of `t = 1` as a root.
    pub fn multiplicity_at_one(&self) -> usize {
        let mut k = 0;
        let mut p = self.clone();
        if p.is_zero() {
            return usize::MAX;
        }
        while let Some(q) = p.div_one_minus_t() {
            if q == p {
                break;
            }
            p = q;
            k += 1;
        }
        k
    }

    /// Exact division, if the quotient has integer coefficients.
    pub fn div_exact(&self, d: &ZPoly) -> Option<ZPoly> {
        let dd = d.degree()?;
        if self.is_zero() {
            return Some(ZPoly::zero());
        }
        let mut rem: Vec<Z> = self.0.clone();
        let n = rem.len() - 1;
        if n < dd {
            return None;
        }
        let lead = &d.0[dd];
        let mut quo = vec![Z::zero(); n - dd + 1];
        for i in (0..=n - dd).rev() {
            let c = &rem[i + dd];
            if c.is_zero() {
                continue;
            }
            if !(c % lead).is_zero() {
                return None;
            }
            let f = c / lead;
            for (j, dj) in d.0.iter().enumerate() {
                rem[i + j] -= &f * dj;
            }
            quo[i] = f;
        }
        if rem.iter().all(|x| x.is_zero()) {
            Some(ZPoly::new(quo))
        } else {
            None
        }
    }

    pub fn to_qpoly(&self) -> QPoly {
        QPoly::new(self.0.iter().map(|c| Q::from_integer(c.clone())).collect())
    }

    pub fn render(&self) -> String {
        self.to_qpoly().render("t")
    }
}

impl Add for &ZPoly {
    type Output = ZPoly;
    fn add(self, o: &ZPoly) -> ZPoly {
        let n = self.0.len().max(o.0.len());
        ZPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &ZPoly {
    type Output = ZPoly;
    fn sub(self, o: &ZPoly) -> ZPoly {
        let n = self.0.len().max(o.0.len());
        ZPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Neg for &ZPoly {
    type Output = ZPoly;
    fn neg(self) -> ZPoly {
        ZPoly(self.0.iter().map(|c| -c).collect())
    }
}

impl Mul for &ZPoly {
    type Output = ZPoly;
    fn mul(self, o: &ZPoly) -> ZPoly {
        if self.is_zero() || o.is_zero() {
            return ZPoly::zero();
        }
        let mut c = vec![Z::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        ZPoly::new(c)
    }
}

/// Rational coefficients, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QPoly(Vec<Q>);

impl QPoly {
    pub fn new(mut c: Vec<Q>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        QPoly(c)
    }

    pub fn zero() -> Self {
        QPoly(Vec::new())
    }

    pub fn constant(c: Q) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.0
    }

    pub fn coeff(&self, i: usize) -> Q {
        self.0.get(i).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Q) -> Q {
        self.0.iter().rev().fold(Q::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &Q) -> QPoly {
        QPoly::new(self.0.iter().map(|a| a * c).collect())
    }

    pub fn leading(&self) -> Option<&Q> {
        self.0.last()
    }

    /// Quotient and remainder.
    pub fn div_rem(&self, d: &QPoly) -> (QPoly, QPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead = d.0[dd].clone();
        let mut rem = self.0.clone();
        if rem.len() <= dd {
            return (QPoly::zero(), self.clone());
        }
        let mut quo = vec![Q::zero(); rem.len() - dd];
        for i in (0..quo.len()).rev() {
            let c = &rem[i + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.0.iter().enumerate() {
                rem[i + j] -= &c * dj;
            }
            quo[i] = c;
        }
        rem.truncate(dd);
        (QPoly::new(quo), QPoly::new(rem))
    }

    /// Monic greatest common divisor; zero when both inputs are zero.
    pub fn gcd(&self, o: &QPoly) -> QPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        match a.leading().cloned() {
            Some(l) => a.scale(&(Q::one() / l)),
            None => a,
        }
    }

    /// The polynomial of degree < n through `n` points with distinct abscissae.
    pub fn interpolate(points: &[(Q, Q)]) -> QPoly {
        let mut acc = QPoly::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            if yi.is_zero() {
                continue;
            }
            let mut basis = QPoly::constant(Q::one());
            let mut denom = Q::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                basis = &basis * &QPoly::new(vec![-xj.clone(), Q::one()]);
                denom *= xi - xj;
            }
            acc = &acc + &basis.scale(&(yi / denom));
        }
        acc
    }

    /// Human-readable form in the given variable, highest degree first.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mon = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if mon.is_empty() {
                out.push_str(&fmt_q(&a));
            } else if a.is_one() {
                out.push_str(&mon);
            } else {
                out.push_str(&format!("{}*{}", fmt_q(&a), mon));
            }
        }
        out
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, o: &QPoly) -> QPoly {
        let n = self.0.len().max(o.0.len());
        QPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, o: &QPoly) -> QPoly {
        let n = self.0.len().max(o.0.len());
        QPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, o: &QPoly) -> QPoly {
        if self.is_zero() || o.is_zero() {
            return QPoly::zero();
        }
        let mut c = vec![Q::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        QPoly::new(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{q, qf};

    #[test]
    fn division_by_one_minus_t() {
        let f = &ZPoly::one_minus_t_pow(5) * &ZPoly::one_minus_t_pow(11);
        assert_eq!(f.multiplicity_at_one(), 2);
        let g = f.div_one_minus_t().unwrap();
        assert_eq!(g, &ZPoly::geometric(5) * &ZPoly::one_minus_t_pow(11));
        assert!(ZPoly::geometric(3).div_one_minus_t().is_none());
        assert_eq!(f.div_exact(&ZPoly::geometric(5)).unwrap().eval_one(), Z::zero());
        assert!(ZPoly::geometric(4).div_exact(&ZPoly::geometric(3)).is_none());
    }

    #[test]
    fn interpolation() {
        let pts: Vec<(Q, Q)> = [0i64, 2, 4].iter().map(|&x| (q(x), qf(x, 2) + q(1))).collect();
        let p = QPoly::interpolate(&pts);
        assert_eq!(p, QPoly::new(vec![q(1), qf(1, 2)]));
        assert_eq!(p.render("t"), "1/2*t + 1");
        let a = &QPoly::new(vec![q(-1), q(0), q(1)]) * &QPoly::new(vec![q(2), q(1)]);
        let b = QPoly::new(vec![q(1), q(1)]);
        assert_eq!(a.gcd(&b), b);
        assert_eq!(a.div_rem(&b).1, QPoly::zero());
    }
}
