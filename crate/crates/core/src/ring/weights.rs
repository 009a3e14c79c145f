use serde::{Deserialize, Serialize};

use crate::arith::{gcd_u64, lcm_all};
use crate::error::{Result, WpsError};

/// A weakly increasing weight sequence together with its run-length grouping `(m_i, a_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct WeightSystem {
    weights: Vec<u32>,
    grouped: Vec<(u32, usize)>,
    lcm: u64,
}

impl WeightSystem {
    pub fn new(weights: Vec<u32>) -> Result<Self> {
        if weights.is_empty() {
            return Err(WpsError::domain("weight system must be nonempty"));
        }
        if weights.iter().any(|&w| w == 0) {
            return Err(WpsError::domain("weights must be positive"));
        }
        if weights.windows(2).any(|p| p[0] > p[1]) {
            return Err(WpsError::domain(format!("weights must be sorted ascending: {weights:?}")));
        }
        let mut grouped: Vec<(u32, usize)> = Vec::new();
        for &w in &weights {
            match grouped.last_mut() {
                Some((m, a)) if *m == w => *a += 1,
                _ => grouped.push((w, 1)),
            }
        }
        let lcm = lcm_all(weights.iter().map(|&w| w as u64));
        Ok(WeightSystem { weights, grouped, lcm })
    }

    /// Builds `P(m_0^{a_0}, …, m_k^{a_k})` from grouped data.
    pub fn from_grouped(groups: &[(u32, usize)]) -> Result<Self> {
        let mut w = Vec::new();
        for &(m, a) in groups {
            w.extend(std::iter::repeat(m).take(a));
        }
        Self::new(w)
    }

    pub fn parse_list(s: &str) -> Result<Self> {
        let ws: std::result::Result<Vec<u32>, _> = s.split(',').map(|t| t.trim().parse::<u32>()).collect();
        let ws = ws.map_err(|_| WpsError::parse(format!("bad weight list {s:?}")))?;
        Self::new(ws)
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn grouped(&self) -> &[(u32, usize)] {
        &self.grouped
    }

    /// Number of variables `n + 1`.
    pub fn nvars(&self) -> usize {
        self.weights.len()
    }

    /// Index of the top weight class.
    pub fn k(&self) -> usize {
        self.grouped.len() - 1
    }

    pub fn m(&self, i: usize) -> u32 {
        self.grouped[i].0
    }

    pub fn a(&self, i: usize) -> usize {
        self.grouped[i].1
    }

    pub fn lcm(&self) -> u64 {
        self.lcm
    }

    pub fn is_well_formed(&self) -> bool {
        let n = self.weights.len();
        if n == 1 {
            return self.weights[0] == 1;
        }
        (0..n).all(|skip| {
            let g = self
                .weights
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .fold(0u64, |g, (_, &w)| gcd_u64(g, w as u64));
            g == 1
        })
    }

    pub fn is_divisible(&self) -> bool {
        let g = &self.grouped;
        g[0].0 == 1 && g[0].1 >= 2 && g.windows(2).all(|p| p[1].0 % p[0].0 == 0)
    }

    pub fn require_divisible(&self) -> Result<()> {
        if self.is_divisible() {
            Ok(())
        } else {
            Err(WpsError::domain(format!(
                "weights {:?} are not divisible; use the threefold tools for general weights",
                self.weights
            )))
        }
    }

    /// Sum of the `i` largest weights.
    pub fn w_upper(&self, i: usize) -> Result<u64> {
        if i > self.weights.len() {
            return Err(WpsError::domain(format!("w^{i} undefined for {} weights", self.weights.len())));
        }
        Ok(self.weights.iter().rev().take(i).map(|&w| w as u64).sum())
    }

    /// Grouped coordinates `(class, position)` of a variable, position counted from 1.
    pub fn group_of(&self, var: usize) -> (usize, usize) {
        let mut start = 0;
        for (i, &(_, a)) in self.grouped.iter().enumerate() {
            if var < start + a {
                return (i, var - start + 1);
            }
            start += a;
        }
        panic!("variable index {var} out of range");
    }

    /// Flat index of `x_{i,j}` (j counted from 1).
    pub fn var_index(&self, i: usize, j: usize) -> usize {
        assert!(j >= 1 && j <= self.grouped[i].1, "x_{{{i},{j}}} out of range");
        self.grouped[..i].iter().map(|g| g.1).sum::<usize>() + j - 1
    }

    pub fn class_of_weight(&self, w: u32) -> Option<usize> {
        self.grouped.iter().position(|g| g.0 == w)
    }

    /// Display form such as `(1^2,3^2,6^3)`.
    pub fn display_grouped(&self) -> String {
        let parts: Vec<String> = self
            .grouped
            .iter()
            .map(|&(m, a)| if a == 1 { m.to_string() } else { format!("{m}^{a}") })
            .collect();
        format!("({})", parts.join(","))
    }
}

impl TryFrom<Vec<u32>> for WeightSystem {
    type Error = WpsError;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        WeightSystem::new(v)
    }
}

impl From<WeightSystem> for Vec<u32> {
    fn from(w: WeightSystem) -> Vec<u32> {
        w.weights
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grouping_and_flags() {
        let w = WeightSystem::new(vec![1, 1, 3, 3, 6, 6, 6]).unwrap();
        assert_eq!(w.grouped(), &[(1, 2), (3, 2), (6, 3)]);
        assert_eq!(w.lcm(), 6);
        assert!(w.is_divisible());
        assert!(w.is_well_formed());
        assert_eq!(w.w_upper(2).unwrap(), 12);
        assert_eq!(w.w_upper(5).unwrap(), 24);
        assert_eq!(w.w_upper(0).unwrap(), 0);
        assert!(w.w_upper(8).is_err());
        assert_eq!(w.group_of(3), (1, 2));
        assert_eq!(w.var_index(2, 1), 4);
    }

    #[test]
    fn non_divisible_and_malformed() {
        let w = WeightSystem::new(vec![1, 3, 4, 7]).unwrap();
        assert!(!w.is_divisible());
        assert!(w.is_well_formed());
        assert!(WeightSystem::new(vec![2, 3, 5, 5]).unwrap().is_well_formed());
        assert!(!WeightSystem::new(vec![1, 2, 2]).unwrap().is_well_formed());
        assert!(WeightSystem::new(vec![2, 1]).is_err());
        assert!(WeightSystem::new(vec![]).is_err());
        let w = WeightSystem::new(vec![1, 2, 2]).unwrap();
        assert!(!w.is_divisible(), "a_0 = 1");
    }
}
