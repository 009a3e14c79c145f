//! Scroll profiles `(1^{r_0}, m_1^{r_1}, …, m_k^{r_k})` and their closed-form invariants.

use num_traits::Zero;

use crate::arith::{q, Q};
use crate::error::{Result, WpsError};
use crate::hilbert::HilbertSeries;
use crate::ring::WeightSystem;
use crate::upoly::ZPoly;

/// Column multiplicities `r_i` of a 2-row 1-generic matrix over a divisible ambient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Profile {
    ambient: WeightSystem,
    r: Vec<usize>,
}

impl Profile {
    pub fn new(ambient: WeightSystem, r: Vec<usize>) -> Result<Self> {
        ambient.require_divisible()?;
        let g = ambient.grouped();
        if r.len() != g.len() {
            return Err(WpsError::domain(format!(
                "profile has {} multiplicities, ambient has {} weight classes",
                r.len(),
                g.len()
            )));
        }
        if r[0] + 1 > g[0].1 {
            return Err(WpsError::domain(format!(
                "at most a_0 - 1 = {} columns of weight 1 are possible, got {}",
                g[0].1 - 1,
                r[0]
            )));
        }
        for (i, (&ri, &(m, a))) in r.iter().zip(g).enumerate().skip(1) {
            if ri > a {
                return Err(WpsError::domain(format!("r_{i} = {ri} exceeds a_{i} = {a} (weight {m})")));
            }
        }
        if r.iter().sum::<usize>() < 2 {
            return Err(WpsError::domain("a profile needs at least two columns"));
        }
        Ok(Profile { ambient, r })
    }

    /// Profile from a sorted or unsorted multiset of column degrees.
    pub fn from_multiset(ambient: WeightSystem, u: &[u32]) -> Result<Self> {
        let mut r = vec![0; ambient.grouped().len()];
        for &w in u {
            let i = ambient
                .class_of_weight(w)
                .ok_or_else(|| WpsError::domain(format!("column degree {w} is not an ambient weight")))?;
            r[i] += 1;
        }
        Self::new(ambient, r)
    }

    pub fn ambient(&self) -> &WeightSystem {
        &self.ambient
    }

    pub fn r(&self) -> &[usize] {
        &self.r
    }

    /// Number of columns `q = Σ r_i`.
    pub fn columns(&self) -> usize {
        self.r.iter().sum()
    }

    pub fn codim(&self) -> usize {
        self.columns() - 1
    }

    pub fn dim(&self) -> usize {
        self.ambient.nvars() - self.columns()
    }

    /// The sorted multiset `u` of column degrees.
    pub fn multiset(&self) -> Vec<u32> {
        let mut u = Vec::new();
        for (&ri, &(m, _)) in self.r.iter().zip(self.ambient.grouped()) {
            u.extend(std::iter::repeat(m).take(ri));
        }
        u
    }

    /// Display form such as `(1,3^2,6^3)`.
    pub fn display(&self) -> String {
        let parts: Vec<String> = self
            .r
            .iter()
            .zip(self.ambient.grouped())
            .filter(|(&ri, _)| ri > 0)
            .map(|(&ri, &(m, _))| if ri == 1 { m.to_string() } else { format!("{m}^{ri}") })
            .collect();
        format!("({})", parts.join(","))
    }
}

impl std::fmt::Display for Profile {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.display())
    }
}

/// Sum of the `i` largest weights.
pub fn w_upper(ws: &WeightSystem, i: usize) -> Result<u64> {
    ws.w_upper(i)
}

fn qu(n: u64) -> Q {
    Q::from_integer(n.into())
}

/// Lower bound for the degree of a nondegenerate `d`-dimensional variety in a divisible ambient.
pub fn minimal_degree_bound(ws: &WeightSystem, d: usize) -> Result<Q> {
    ws.require_divisible()?;
    let g = ws.grouped();
    let n1 = ws.nvars();
    if d == 0 || d + 2 > n1 {
        return Err(WpsError::domain(format!("dimension {d} out of range 1..={}", n1.saturating_sub(2))));
    }
    let k = g.len() - 1;
    let a0 = g[0].1 as i64;
    if d <= g[k].1 {
        let mk = g[k].0 as u64;
        let mut s = q(a0 - 1);
        for &(m, a) in &g[1..] {
            s += Q::new((a as i64).into(), (m as i64).into());
        }
        s += Q::new((1 - d as i64).into(), (mk as i64).into());
        return Ok(s / qu(mk.pow(d as u32 - 1)));
    }
    // smallest i with d > Σ_{j>i} a_j
    let tail = |i: usize| g[i + 1..].iter().map(|x| x.1).sum::<usize>();
    let i = (0..=k).find(|&i| d > tail(i)).expect("i = k always qualifies");
    let above = tail(i);
    let mi = g[i].0 as u64;
    let mut den = qu(mi.pow((d - above - 1) as u32));
    for &(m, a) in &g[i + 1..] {
        den *= qu((m as u64).pow(a as u32));
    }
    let mut s = q(a0 - 1);
    for &(m, a) in &g[1..=i] {
        s += Q::new((a as i64).into(), (m as i64).into());
    }
    s += Q::new((1 + above as i64 - d as i64).into(), (mi as i64).into());
    Ok(s / den)
}

/// `(Σ r_i/m_i) / Π m_j^{a_j − r_j}`.
pub fn scroll_degree(p: &Profile) -> Q {
    let (num, den) = degree_parts(p);
    num / qu(den)
}

fn degree_parts(p: &Profile) -> (Q, u64) {
    let mut num = Q::zero();
    let mut den = 1u64;
    for (&ri, &(m, a)) in p.r.iter().zip(p.ambient.grouped()) {
        num += Q::new((ri as i64).into(), (m as i64).into());
        den *= (m as u64).pow((a - ri) as u32);
    }
    (num, den)
}

/// The degree written as a product, e.g. `5/(3*6^3)`.
pub fn degree_display(p: &Profile) -> String {
    let (num, _) = degree_parts(p);
    let mut factors: Vec<String> = Vec::new();
    if *num.denom() != 1.into() {
        factors.push(num.denom().to_string());
    }
    for (&ri, &(m, a)) in p.r.iter().zip(p.ambient.grouped()) {
        let e = a - ri;
        if m > 1 && e > 0 {
            factors.push(if e == 1 { m.to_string() } else { format!("{m}^{e}") });
        }
    }
    let top = num.numer().to_string();
    match factors.len() {
        0 => top,
        1 => format!("{top}/{}", factors[0]),
        _ => format!("{top}/({})", factors.join("*")),
    }
}

/// Hilbert series of the scroll with profile `p`.
pub fn scroll_hilbert_series(p: &Profile) -> HilbertSeries {
    let g = p.ambient.grouped();
    let k = g.len() - 1;
    let mk = g[k].0 as usize;
    let mut num = &ZPoly::one() - &ZPoly::monomial(mk);
    for (&ri, &(m, _)) in p.r.iter().zip(g) {
        let m = m as usize;
        let mut block = ZPoly::zero();
        for l in 1..=mk / m {
            block = &block + &ZPoly::monomial(l * m);
        }
        num = &num + &(&block * &ZPoly::from_i64(&[ri as i64]));
    }
    let mut den = Vec::new();
    for (j, (&rj, &(m, a))) in p.r.iter().zip(g).enumerate() {
        let e = a - rj + usize::from(j == k);
        den.extend(std::iter::repeat(m).take(e));
    }
    HilbertSeries::new(num, den)
}

/// Every feasible profile over `ws`, in lexicographic order of `r`.
pub fn feasible_profiles(ws: &WeightSystem) -> Result<Vec<Profile>> {
    ws.require_divisible()?;
    let g = ws.grouped();
    let mut out = Vec::new();
    let mut r = vec![0usize; g.len()];
    loop {
        if r.iter().sum::<usize>() >= 2 {
            out.push(Profile { ambient: ws.clone(), r: r.clone() });
        }
        // odometer over r_0 ≤ a_0 − 1, r_i ≤ a_i
        let mut i = g.len();
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            let cap = if i == 0 { g[0].1 - 1 } else { g[i].1 };
            if r[i] < cap {
                r[i] += 1;
                for x in r.iter_mut().skip(i + 1) {
                    *x = 0;
                }
                break;
            }
        }
    }
}

/// Greedy minimal-degree profile: `r_0 = a_0 − 1`, then fill `r_1, r_2, …` maximally.
pub fn minimal_profile(ws: &WeightSystem, d: usize) -> Result<Profile> {
    ws.require_divisible()?;
    let n1 = ws.nvars();
    if d == 0 || d + 2 > n1 {
        return Err(WpsError::domain(format!("dimension {d} out of range 1..={}", n1.saturating_sub(2))));
    }
    let g = ws.grouped();
    let mut left = n1 - d;
    let mut r = vec![0; g.len()];
    for (i, &(_, a)) in g.iter().enumerate() {
        let cap = if i == 0 { a - 1 } else { a };
        r[i] = cap.min(left);
        left -= r[i];
    }
    Profile::new(ws.clone(), r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::qf;
    use crate::hilbert::degree_from_series;

    fn fig5() -> WeightSystem {
        WeightSystem::new(vec![1, 1, 3, 3, 6, 6, 6]).unwrap()
    }

    #[test]
    fn profile_invariants() {
        let ws = fig5();
        let p = Profile::new(ws.clone(), vec![1, 2, 3]).unwrap();
        assert_eq!((p.dim(), p.codim()), (1, 5));
        assert_eq!(p.multiset(), vec![1, 3, 3, 6, 6, 6]);
        assert_eq!(p.display(), "(1,3^2,6^3)");
        assert!(Profile::new(ws.clone(), vec![2, 0, 0]).is_err());
        assert!(Profile::new(ws.clone(), vec![0, 0, 1]).is_err());
        assert!(Profile::new(ws.clone(), vec![0, 3, 0]).is_err());
        assert_eq!(Profile::from_multiset(ws, &[6, 1, 3]).unwrap().r(), &[1, 1, 1]);
    }

    #[test]
    fn bounds() {
        let ws = fig5();
        assert_eq!(minimal_degree_bound(&ws, 2).unwrap(), qf(1, 3));
        assert_eq!(minimal_degree_bound(&ws, 4).unwrap(), qf(5, 3 * 216));
        assert_eq!(minimal_degree_bound(&WeightSystem::new(vec![1, 1, 2, 2]).unwrap(), 1).unwrap(), q(2));
        for n in 2..7usize {
            let ws = WeightSystem::new(vec![1; n + 1]).unwrap();
            for d in 1..n {
                assert_eq!(minimal_degree_bound(&ws, d).unwrap(), q((n + 1 - d) as i64));
            }
        }
        assert!(minimal_degree_bound(&ws, 6).is_err());
        assert!(minimal_degree_bound(&WeightSystem::new(vec![1, 2, 3]).unwrap(), 1).is_err());
    }

    #[test]
    fn degrees_and_display() {
        let ws = fig5();
        let deg = |r: Vec<usize>| scroll_degree(&Profile::new(ws.clone(), r).unwrap());
        assert_eq!(deg(vec![1, 2, 3]), qf(13, 6));
        assert_eq!(deg(vec![0, 1, 3]), qf(5, 18));
        let p = Profile::new(ws.clone(), vec![1, 2, 0]).unwrap();
        assert_eq!(degree_display(&p), "5/(3*6^3)");
        let ws4 = WeightSystem::from_grouped(&[(1, 4), (2, 4), (4, 4)]).unwrap();
        assert_eq!(scroll_degree(&Profile::new(ws4, vec![1, 4, 1]).unwrap()), qf(13, 256));
    }

    #[test]
    fn series_of_the_rational_curve() {
        let ws = WeightSystem::new(vec![1, 1, 2, 2]).unwrap();
        let p = Profile::new(ws, vec![1, 2]).unwrap();
        let hs = scroll_hilbert_series(&p);
        assert_eq!(hs.numerator(), &ZPoly::from_i64(&[1, 1, 2]));
        assert_eq!(hs.denominator(), &[1, 2]);
        assert_eq!(degree_from_series(&hs, 1).unwrap(), q(2));
        let p = Profile::new(fig5(), vec![1, 2, 3]).unwrap();
        assert_eq!(degree_from_series(&scroll_hilbert_series(&p), 1).unwrap(), qf(13, 6));
    }

    #[test]
    fn greedy_profiles() {
        let ws = fig5();
        assert_eq!(minimal_profile(&ws, 1).unwrap().r(), &[1, 2, 3]);
        assert_eq!(minimal_profile(&ws, 4).unwrap().display(), "(1,3^2)");
        let p5 = WeightSystem::new(vec![1; 6]).unwrap();
        assert_eq!(minimal_profile(&p5, 2).unwrap().multiset(), vec![1, 1, 1, 1]);
        assert_eq!(feasible_profiles(&ws).unwrap().len(), 24 - 4);
    }
}
