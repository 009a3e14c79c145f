use crate::error::{Result, WpsError};
use crate::ring::poly::Polynomial;
use crate::ring::weights::WeightSystem;

/// Generators in `S(w)`, zero-free and deduplicated up to scalar multiples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    ambient: WeightSystem,
    gens: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(ambient: WeightSystem, gens: Vec<Polynomial>) -> Result<Self> {
        let n = ambient.nvars();
        let mut kept: Vec<Polynomial> = Vec::new();
        let mut seen: Vec<Polynomial> = Vec::new();
        for g in gens {
            if g.nvars() != n {
                return Err(WpsError::domain(format!("generator has {} variables, ambient has {n}", g.nvars())));
            }
            if g.is_zero() {
                continue;
            }
            let key = g.normalized();
            if !seen.contains(&key) {
                seen.push(key);
                kept.push(g);
            }
        }
        Ok(Ideal { ambient, gens: kept })
    }

    pub fn zero(ambient: WeightSystem) -> Self {
        Ideal { ambient, gens: Vec::new() }
    }

    pub fn ambient(&self) -> &WeightSystem {
        &self.ambient
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous(self.ambient.weights()))
    }

    pub fn require_homogeneous(&self) -> Result<()> {
        for (i, g) in self.gens.iter().enumerate() {
            if !g.is_homogeneous(self.ambient.weights()) {
                return Err(WpsError::domain(format!("generator {i} ({g}) is not weighted-homogeneous")));
            }
        }
        Ok(())
    }

    /// Generator degrees, in generator order.
    pub fn degrees(&self) -> Result<Vec<u64>> {
        self.require_homogeneous()?;
        self.gens
            .iter()
            .map(|g| Ok(g.homogeneous_degree(self.ambient.weights())?.unwrap()))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::q;

    #[test]
    fn dedup_up_to_scalar() {
        let w = WeightSystem::new(vec![1, 1]).unwrap();
        let x = Polynomial::var(2, 0);
        let i = Ideal::new(w, vec![x.clone(), x.scale(&q(-3)), Polynomial::zero(2)]).unwrap();
        assert_eq!(i.generators().len(), 1);
    }
}
