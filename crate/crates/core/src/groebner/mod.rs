//! Buchberger's algorithm for weighted-homogeneous ideals and the invariants read off
//! leading-term ideals: codimension, Hilbert series, Betti numbers, elimination.

mod buchberger;
mod implicit;
pub mod monomial;
mod order;
mod resolution;

use std::collections::HashMap;

use buchberger::{reduce, GPoly};
pub use buchberger::Budget;
pub use implicit::{has_basepoint, implicitize};
pub use order::{MonomialOrder, TieBreak};
pub use resolution::{resolution_data, ResolutionData};

use crate::error::{Result, WpsError};
use crate::hilbert::HilbertSeries;
use crate::ring::{GradedMatrix, Ideal, Monomial, Polynomial, WeightSystem};

/// Reduced Gröbner basis of an ideal for a fixed order.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ideal: Ideal,
    order: MonomialOrder,
    polys: Vec<GPoly>,
    basis: Vec<Polynomial>,
    lt_ideal: Vec<Monomial>,
}

/// Reduced Gröbner basis, with the budget taken from the environment.
pub fn groebner(ideal: &Ideal, order: &MonomialOrder) -> Result<GroebnerBasis> {
    groebner_with_budget(ideal, order, &Budget::from_env())
}

pub fn groebner_with_budget(ideal: &Ideal, order: &MonomialOrder, budget: &Budget) -> Result<GroebnerBasis> {
    let n = ideal.ambient().nvars();
    if order.weights().len() != n {
        return Err(WpsError::invariant("monomial order and ring have different numbers of variables"));
    }
    let polys = buchberger::buchberger(ideal.generators(), order, budget)?;
    let basis = polys.iter().map(|g| g.to_poly(n)).collect();
    let lt_ideal = polys.iter().map(|g| Monomial(g.lt().clone())).collect();
    Ok(GroebnerBasis { ideal: ideal.clone(), order: order.clone(), polys, basis, lt_ideal })
}

impl GroebnerBasis {
    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn ambient(&self) -> &WeightSystem {
        self.ideal.ambient()
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    /// Minimal generators of the leading-term ideal.
    pub fn lt_ideal(&self) -> &[Monomial] {
        &self.lt_ideal
    }

    pub fn is_unit(&self) -> bool {
        self.lt_ideal.iter().any(|m| m.is_one())
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let refs: Vec<&GPoly> = self.polys.iter().collect();
        reduce(GPoly::from_poly(f, &self.order), &refs, &self.order, true).to_poly(f.nvars())
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Ideal equality, given bases for the same order.
    pub fn same_ideal(&self, other: &GroebnerBasis) -> bool {
        self.order == other.order && self.basis == other.basis
    }

    fn lt_exps(&self) -> Vec<Vec<u32>> {
        self.lt_ideal.iter().map(|m| m.0.clone()).collect()
    }

    pub fn codimension(&self) -> usize {
        monomial::codimension(&self.lt_exps(), self.ambient().nvars())
    }

    /// Krull dimension of the quotient ring (the affine cone).
    pub fn krull_dimension(&self) -> usize {
        self.ambient().nvars() - self.codimension()
    }

    pub fn hilbert_series(&self) -> HilbertSeries {
        let w = self.ambient().weights();
        HilbertSeries::new(monomial::hilbert_numerator(&self.lt_exps(), w), w.to_vec())
    }

    /// Monomials of weighted degree `d` outside the leading-term ideal.
    pub fn standard_monomials(&self, d: u64) -> Vec<Monomial> {
        let lts = self.lt_exps();
        monomial::monomials_of_degree(self.ambient().weights(), d)
            .into_iter()
            .filter(|m| !lts.iter().any(|l| l.iter().zip(m).all(|(a, b)| a <= b)))
            .map(Monomial)
            .collect()
    }

    pub(crate) fn normal_form_cache(&self) -> NormalForms<'_> {
        NormalForms { gb: self, memo: HashMap::new() }
    }
}

/// Memoized normal forms of monomials.
pub(crate) struct NormalForms<'a> {
    gb: &'a GroebnerBasis,
    memo: HashMap<Vec<u32>, Vec<(Vec<u32>, crate::arith::Q)>>,
}

impl NormalForms<'_> {
    pub fn of(&mut self, e: &[u32]) -> &[(Vec<u32>, crate::arith::Q)] {
        if !self.memo.contains_key(e) {
            let g = GPoly { terms: vec![(e.to_vec(), num_traits::One::one())] };
            let refs: Vec<&GPoly> = self.gb.polys.iter().collect();
            let r = reduce(g, &refs, &self.gb.order, true);
            self.memo.insert(e.to_vec(), r.terms);
        }
        &self.memo[e]
    }
}

/// Reduced basis under the default weighted reverse lexicographic order.
pub fn default_basis(ideal: &Ideal) -> Result<GroebnerBasis> {
    groebner(ideal, &MonomialOrder::default_for(ideal.ambient()))
}

/// `n + 1 − dim S/I`; the unit ideal gets `n + 1`.
pub fn codimension(ideal: &Ideal) -> Result<usize> {
    Ok(default_basis(ideal)?.codimension())
}

pub fn hilbert_series(ideal: &Ideal) -> Result<HilbertSeries> {
    ideal.require_homogeneous()?;
    Ok(default_basis(ideal)?.hilbert_series())
}

/// Whether the maximal minors of `m` have the expected codimension `q − p + 1`.
pub fn is_cm_determinantal(m: &GradedMatrix) -> Result<bool> {
    let (p, q) = (m.rows(), m.cols());
    if p > q {
        return Err(WpsError::domain("matrix must have at least as many columns as rows"));
    }
    let i = m.minors(p)?;
    Ok(codimension(&i)? == q - p + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::VarTable;

    fn ideal(w: &[u32], gens: &[&str]) -> Ideal {
        let ws = WeightSystem::new(w.to_vec()).unwrap();
        let t = VarTable::for_weights(&ws);
        Ideal::new(ws, gens.iter().map(|s| t.parse(s).unwrap()).collect()).unwrap()
    }

    #[test]
    fn principal_and_dedup() {
        let i = ideal(&[1, 1, 1], &["x_1 x_3 - x_2^2"]);
        let g = default_basis(&i).unwrap();
        assert_eq!(g.basis().len(), 1);
        assert_eq!(g.basis()[0].normalized(), i.generators()[0].normalized());
        let i = ideal(&[1, 1, 1], &["x_1", "x_1"]);
        assert_eq!(default_basis(&i).unwrap().basis().len(), 1);
    }

    #[test]
    fn codimension_examples() {
        assert_eq!(codimension(&Ideal::zero(WeightSystem::new(vec![1, 1, 2, 2]).unwrap())).unwrap(), 0);
        let c1 = ideal(&[1, 1, 2, 2], &["x_1 y_1 - x_2^3", "x_1 y_2 - x_2 y_1", "x_2^2 y_2 - y_1^2"]);
        assert_eq!(codimension(&c1).unwrap(), 2);
        assert_eq!(codimension(&ideal(&[1, 1, 1], &["x_1", "x_2", "x_3"])).unwrap(), 3);
        assert_eq!(codimension(&ideal(&[1, 1], &["x_1", "x_1 + 1"])).unwrap(), 2);
    }

    #[test]
    fn normal_forms() {
        let i = ideal(&[1, 1, 1], &["x_1 x_3 - x_2^2"]);
        let g = default_basis(&i).unwrap();
        let t = VarTable::for_weights(i.ambient());
        assert!(g.contains(&t.parse("x_1^2 x_3 - x_1 x_2^2").unwrap()));
        assert!(!g.contains(&t.parse("x_1").unwrap()));
        assert_eq!(g.standard_monomials(2).len(), 5);
    }
}
