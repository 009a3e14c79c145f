use num_traits::Zero;

use super::buchberger::{buchberger, Budget};
use super::order::{MonomialOrder, TieBreak};
use crate::arith::Q;
use crate::error::{Result, WpsError};
use crate::ring::{Ideal, Monomial, Polynomial, WeightSystem};
use crate::upoly::QPoly;

/// Whether binary forms in `(s, t)` share a zero on P¹.
pub fn has_basepoint(forms: &[Polynomial]) -> bool {
    let nz: Vec<&Polynomial> = forms.iter().filter(|f| !f.is_zero()).collect();
    if nz.is_empty() {
        return true;
    }
    // common zero at [0:1] means every form is divisible by s
    if nz.iter().all(|f| f.terms().all(|(m, _)| m.0[0] > 0)) {
        return true;
    }
    let dehom = |f: &Polynomial| -> QPoly {
        let d = f.terms().map(|(m, _)| m.0[1] as usize).max().unwrap_or(0);
        let mut c = vec![Q::zero(); d + 1];
        for (m, k) in f.terms() {
            c[m.0[1] as usize] += k;
        }
        QPoly::new(c)
    };
    let g = nz.iter().fold(QPoly::zero(), |g, f| g.gcd(&dehom(f)));
    g.degree().unwrap_or(0) > 0
}

/// Kernel of `x_i ↦ images[i]` for binary forms of degrees `w_i·e`.
pub fn implicitize(images: &[Polynomial], ws: &WeightSystem) -> Result<Ideal> {
    let n = ws.nvars();
    if images.len() != n {
        return Err(WpsError::domain(format!("expected {n} images, got {}", images.len())));
    }
    let mut degs = Vec::with_capacity(n);
    for (i, f) in images.iter().enumerate() {
        if f.nvars() != 2 {
            return Err(WpsError::domain("images must be forms in two variables s, t"));
        }
        match f.homogeneous_degree(&[1, 1]) {
            Ok(Some(d)) => degs.push(d),
            Ok(None) => return Err(WpsError::domain(format!("image {i} is not homogeneous"))),
            Err(_) => return Err(WpsError::domain(format!("image {i} is zero"))),
        }
    }
    let w0 = ws.weights()[0] as u64;
    if degs[0] % w0 != 0 {
        return Err(WpsError::domain("inconsistent image degrees"));
    }
    let e = degs[0] / w0;
    if e == 0 || degs.iter().zip(ws.weights()).any(|(&d, &w)| d != w as u64 * e) {
        return Err(WpsError::domain(format!("image degrees {degs:?} are not e·w for a common e")));
    }
    if has_basepoint(images) {
        return Err(WpsError::domain("images have a common factor (basepoint)"));
    }
    let total = n + 2;
    let mut weights = vec![1u32, 1];
    weights.extend(degs.iter().map(|&d| d as u32));
    let graph: Vec<Polynomial> = images
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let lifted = f.map_vars(total, |v| v);
            &Polynomial::var(total, i + 2) - &lifted
        })
        .collect();
    let ord = MonomialOrder::elimination(&weights, 2, TieBreak::RevLex);
    let gb = buchberger(&graph, &ord, &Budget::from_env())?;
    let kernel: Vec<Polynomial> = gb
        .iter()
        .filter(|g| g.terms.iter().all(|(e, _)| e[0] == 0 && e[1] == 0))
        .map(|g| {
            Polynomial::from_terms(n, g.terms.iter().map(|(e, c)| (Monomial(e[2..].to_vec()), c.clone())))
        })
        .collect();
    Ideal::new(ws.clone(), kernel)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::VarTable;

    fn forms(v: &[&str]) -> Vec<Polynomial> {
        let t = VarTable::from_names(&["s", "t"]);
        v.iter().map(|s| t.parse(s).unwrap()).collect()
    }

    #[test]
    fn conic() {
        let ws = WeightSystem::new(vec![1, 1, 1]).unwrap();
        let i = implicitize(&forms(&["s^2", "s t", "t^2"]), &ws).unwrap();
        assert_eq!(i.generators().len(), 1);
        let t = VarTable::for_weights(&ws);
        assert_eq!(i.generators()[0].normalized(), t.parse("x_1 x_3 - x_2^2").unwrap().normalized());
    }

    #[test]
    fn basepoints_and_degrees() {
        assert!(has_basepoint(&forms(&["s^2", "s t"])));
        assert!(has_basepoint(&forms(&["s t - t^2", "s^2 - t^2"])));
        assert!(!has_basepoint(&forms(&["s", "t"])));
        let ws = WeightSystem::new(vec![1, 1]).unwrap();
        assert!(implicitize(&forms(&["s^2", "s t"]), &ws).is_err());
        assert!(implicitize(&forms(&["s^2", "t"]), &ws).is_err());
    }
}
