//! Exact rational helpers shared by all modules.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Result, WpsError};

pub type Q = BigRational;
pub type Z = BigInt;

pub fn q(n: i64) -> Q {
    Q::from_integer(Z::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(Z::from(n), Z::from(d))
}

pub fn qz(n: &Z) -> Q {
    Q::from_integer(n.clone())
}

/// Renders `p/q` in lowest terms, or just `p` for integers.
pub fn fmt_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `p`, `-p`, or `p/q`.
pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || WpsError::parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((a, b)) => {
            let n: Z = a.trim().parse().map_err(|_| bad())?;
            let d: Z = b.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(WpsError::parse(format!("zero denominator in {s:?}")));
            }
            Ok(Q::new(n, d))
        }
        None => {
            let n: Z = s.parse().map_err(|_| bad())?;
            Ok(Q::from_integer(n))
        }
    }
}

pub fn factorial(n: u64) -> Z {
    (1..=n).fold(Z::one(), |acc, k| acc * Z::from(k))
}

pub fn binomial(n: u64, k: u64) -> Z {
    if k > n {
        return Z::zero();
    }
    let k = k.min(n - k);
    let mut acc = Z::one();
    for i in 0..k {
        acc = acc * Z::from(n - i) / Z::from(i + 1);
    }
    acc
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm_u64(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / a.gcd(&b) * b
    }
}

pub fn lcm_all(xs: impl IntoIterator<Item = u64>) -> u64 {
    xs.into_iter().fold(1, lcm_u64)
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
    out.sort_unstable();
    out
}

pub fn is_integer(x: &Q) -> bool {
    x.denom().is_one()
}

pub fn to_i64(x: &Z) -> Option<i64> {
    x.to_i64()
}

pub fn abs_z(x: &Z) -> Z {
    x.abs()
}

/// Serde helper: rationals travel as `"p/q"` strings.
pub mod serde_q {
    use super::{fmt_q, parse_q, Q};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_q(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Q, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        let text = match v {
            serde_json::Value::String(s) => s,
            serde_json::Value::Number(n) => n.to_string(),
            other => return Err(serde::de::Error::custom(format!("expected rational, got {other}"))),
        };
        parse_q(&text).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_round_trip() {
        for s in ["0", "7", "-3", "11/30", "-5/648"] {
            assert_eq!(fmt_q(&parse_q(s).unwrap()), s);
        }
        assert_eq!(fmt_q(&parse_q("4/6").unwrap()), "2/3");
        assert_eq!(fmt_q(&parse_q("6/-4").unwrap()), "-3/2");
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("x").is_err());
    }

    #[test]
    fn combinatorics() {
        assert_eq!(factorial(5), Z::from(120));
        assert_eq!(binomial(7, 3), Z::from(35));
        assert_eq!(binomial(3, 7), Z::zero());
        assert_eq!(lcm_all([1, 1, 3, 3, 6, 6, 6]), 6);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
    }
}
