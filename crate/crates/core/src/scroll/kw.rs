//! Block data in Kronecker–Weierstrass form, the matrices it defines, and the
//! structural 1-genericity certificate.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::profile::Profile;
use crate::arith::{fmt_q, Q};
use crate::error::{Result, WpsError};
use crate::ring::{GradedMatrix, Monomial, Polynomial, VarTable, WeightSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BlockKind {
    Jordan,
    Nilpotent1,
    /// General nilpotent block on `size` variables with `size + 1` columns.
    Nilpotent,
    Scroll,
    Zero,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Block {
    pub kind: BlockKind,
    pub size: usize,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "opt_q")]
    pub epsilon: Option<Q>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub perturbations: Option<Vec<String>>,
}

mod opt_q {
    use crate::arith::{fmt_q, parse_q, Q};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Option<Q>, s: S) -> std::result::Result<S::Ok, S::Error> {
        match x {
            Some(q) => s.serialize_str(&fmt_q(q)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Option<Q>, D::Error> {
        let v = Option::<serde_json::Value>::deserialize(d)?;
        match v {
            None | Some(serde_json::Value::Null) => Ok(None),
            Some(serde_json::Value::String(s)) => parse_q(&s).map(Some).map_err(serde::de::Error::custom),
            Some(serde_json::Value::Number(n)) => {
                parse_q(&n.to_string()).map(Some).map_err(serde::de::Error::custom)
            }
            Some(other) => Err(serde::de::Error::custom(format!("expected rational epsilon, got {other}"))),
        }
    }
}

impl Block {
    pub fn jordan(size: usize, epsilon: Q) -> Self {
        Block { kind: BlockKind::Jordan, size, epsilon: Some(epsilon), perturbations: None }
    }

    pub fn nilpotent1() -> Self {
        Block { kind: BlockKind::Nilpotent1, size: 1, epsilon: None, perturbations: None }
    }

    pub fn nilpotent(size: usize) -> Self {
        Block { kind: BlockKind::Nilpotent, size, epsilon: None, perturbations: None }
    }

    pub fn scroll(size: usize) -> Self {
        Block { kind: BlockKind::Scroll, size, epsilon: None, perturbations: None }
    }

    pub fn zero(size: usize) -> Self {
        Block { kind: BlockKind::Zero, size, epsilon: None, perturbations: None }
    }

    pub fn with_perturbations(mut self, p: &[&str]) -> Self {
        self.perturbations = Some(p.iter().map(|s| s.to_string()).collect());
        self
    }

    /// Number of degree-`m_i` variables used.
    pub fn variables(&self) -> usize {
        match self.kind {
            BlockKind::Zero => 0,
            _ => self.size,
        }
    }

    pub fn columns(&self) -> usize {
        match self.kind {
            BlockKind::Jordan | BlockKind::Nilpotent1 | BlockKind::Zero => self.size,
            BlockKind::Nilpotent => self.size + 1,
            BlockKind::Scroll => self.size.saturating_sub(1),
        }
    }

    fn perturbation_count(&self) -> usize {
        match self.kind {
            BlockKind::Jordan => self.size,
            BlockKind::Nilpotent1 => 1,
            BlockKind::Nilpotent => self.size + 2,
            BlockKind::Scroll => self.size.saturating_sub(2),
            BlockKind::Zero => 2 * self.size,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DegreeBlocks {
    pub degree_index: usize,
    pub blocks: Vec<Block>,
}

/// Blocks for each weight class `i ≥ 1`; the weight-1 scroll block is implicit.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BlockSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<u32>>,
    pub degrees: Vec<DegreeBlocks>,
}

impl BlockSpec {
    pub fn new(degrees: Vec<DegreeBlocks>) -> Self {
        BlockSpec { weights: None, degrees }
    }

    /// Accepts `{weights?, degrees: [...]}`, a bare list of degree entries, or one entry.
    pub fn from_json(text: &str) -> Result<Self> {
        let v: serde_json::Value =
            serde_json::from_str(text).map_err(|e| WpsError::parse(format!("bad block spec JSON: {e}")))?;
        Self::from_json_value(&v)
    }

    pub fn from_json_value(v: &serde_json::Value) -> Result<Self> {
        let err = |e: serde_json::Error| WpsError::parse(format!("bad block spec: {e}"));
        if v.get("degrees").is_some() {
            serde_json::from_value(v.clone()).map_err(err)
        } else if v.is_array() {
            Ok(Self::new(serde_json::from_value(v.clone()).map_err(err)?))
        } else {
            Ok(Self::new(vec![serde_json::from_value(v.clone()).map_err(err)?]))
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("block spec serializes")
    }

    /// The ambient named in the document, if any.
    pub fn ambient(&self) -> Result<Option<WeightSystem>> {
        self.weights.clone().map(WeightSystem::new).transpose()
    }

    fn sorted(&self) -> Result<Vec<&DegreeBlocks>> {
        let mut d: Vec<&DegreeBlocks> = self.degrees.iter().collect();
        d.sort_by_key(|x| x.degree_index);
        if d.windows(2).any(|p| p[0].degree_index == p[1].degree_index) {
            return Err(WpsError::domain("degree index listed twice in block spec"));
        }
        Ok(d)
    }
}

/// A block after variables and perturbations have been resolved.
#[derive(Clone, Debug, PartialEq)]
pub struct PlacedBlock {
    pub degree_index: usize,
    pub kind: BlockKind,
    pub epsilon: Q,
    /// Flat indices of the degree-`m_i` variables, in order.
    pub vars: Vec<usize>,
    pub first_column: usize,
    pub perturbations: Vec<Polynomial>,
}

impl PlacedBlock {
    pub fn columns(&self) -> usize {
        match self.kind {
            BlockKind::Jordan | BlockKind::Nilpotent1 => self.vars.len(),
            BlockKind::Nilpotent => self.vars.len() + 1,
            BlockKind::Scroll => self.vars.len() - 1,
            BlockKind::Zero => self.perturbations.len() / 2,
        }
    }
}

/// The matrix together with the placement of every block.
#[derive(Clone, Debug, PartialEq)]
pub struct KwMatrix {
    pub matrix: GradedMatrix,
    pub blocks: Vec<PlacedBlock>,
    /// Highest weight class holding a block (0 when only the weight-1 block is present).
    pub top: usize,
}

struct Allowed {
    p: Vec<usize>,
    q: Vec<usize>,
}

fn check_span(f: &Polynomial, allowed: &[usize], ws: &WeightSystem, deg: u64, what: &str) -> Result<()> {
    for (m, _) in f.terms() {
        let support: Vec<usize> = m.support().collect();
        let ok = support.len() == 1 && {
            let v = support[0];
            allowed.contains(&v) && m.0[v] as u64 * ws.weights()[v] as u64 == deg
        };
        if !ok {
            let t = VarTable::for_weights(ws);
            return Err(WpsError::domain(format!(
                "{what} {} is outside the allowed span (pure powers of {})",
                t.render(f),
                allowed.iter().map(|&v| t.names()[v].clone()).collect::<Vec<_>>().join(", ")
            )));
        }
    }
    Ok(())
}

fn lower_degree_form(f: &Polynomial, ws: &WeightSystem, class: usize, what: &str) -> Result<()> {
    let deg = ws.m(class) as u64;
    if f.is_zero() {
        return Ok(());
    }
    match f.homogeneous_degree(ws.weights())? {
        None => {}
        Some(d) if d == deg => {}
        Some(d) => return Err(WpsError::domain(format!("{what} has degree {d}, expected {deg}"))),
    }
    if !f.is_homogeneous(ws.weights()) {
        return Err(WpsError::domain(format!("{what} is not homogeneous")));
    }
    for (m, _) in f.terms() {
        if m.support().any(|v| ws.group_of(v).0 >= class) {
            return Err(WpsError::domain(format!("{what} involves a variable of weight at least {deg}")));
        }
    }
    Ok(())
}

/// Builds `M = (M_0 | M_1 | … )` from block data over a divisible ambient.
pub fn build_kw(ws: &WeightSystem, spec: &BlockSpec) -> Result<KwMatrix> {
    ws.require_divisible()?;
    let g = ws.grouped();
    let n = ws.nvars();
    let a0 = g[0].1;
    let table = VarTable::for_weights(ws);
    let degrees = spec.sorted()?;
    for d in &degrees {
        if d.degree_index == 0 || d.degree_index >= g.len() {
            return Err(WpsError::domain(format!(
                "degree index {} out of range 1..={}",
                d.degree_index,
                g.len() - 1
            )));
        }
    }
    let top = degrees.iter().filter(|d| !d.blocks.is_empty()).map(|d| d.degree_index).max().unwrap_or(0);
    for i in 1..top {
        if !degrees.iter().any(|d| d.degree_index == i) && g[i].1 > 0 {
            return Err(WpsError::domain(format!(
                "variable-count mismatch: weight {} has {} variables but no blocks below the top degree",
                g[i].0, g[i].1
            )));
        }
    }
    let mut top_row: Vec<Polynomial> = Vec::new();
    let mut bottom_row: Vec<Polynomial> = Vec::new();
    for j in 1..a0 {
        top_row.push(Polynomial::var(n, ws.var_index(0, j)));
        bottom_row.push(Polynomial::var(n, ws.var_index(0, j + 1)));
    }
    let mut allowed = Allowed { p: vec![ws.var_index(0, 1)], q: vec![ws.var_index(0, a0)] };
    let mut placed: Vec<PlacedBlock> = Vec::new();
    for d in degrees {
        let i = d.degree_index;
        let deg = g[i].0 as u64;
        let used: usize = d.blocks.iter().map(Block::variables).sum();
        if used > g[i].1 || (i < top && used != g[i].1) {
            return Err(WpsError::domain(format!(
                "variable-count mismatch: blocks in weight {} use {used} of {} variables",
                g[i].0, g[i].1
            )));
        }
        let mut next = 1;
        let mut new_leads = Vec::new();
        for (bi, b) in d.blocks.iter().enumerate() {
            let what = format!("perturbation of block {bi} in weight {}", g[i].0);
            let min_size = match b.kind {
                BlockKind::Scroll => 2,
                BlockKind::Nilpotent1 => 1,
                _ => 1,
            };
            if b.size < min_size || (b.kind == BlockKind::Nilpotent1 && b.size != 1) {
                return Err(WpsError::domain(format!("block {bi} in weight {} has invalid size {}", g[i].0, b.size)));
            }
            let want = b.perturbation_count();
            let perts: Vec<Polynomial> = match &b.perturbations {
                None => vec![Polynomial::zero(n); want],
                Some(ps) => {
                    if ps.len() != want {
                        return Err(WpsError::domain(format!(
                            "block {bi} in weight {} needs {want} perturbations, got {}",
                            g[i].0,
                            ps.len()
                        )));
                    }
                    ps.iter().map(|s| table.parse(s)).collect::<Result<_>>()?
                }
            };
            for f in &perts {
                lower_degree_form(f, ws, i, &what)?;
                match b.kind {
                    BlockKind::Jordan | BlockKind::Scroll => check_span(f, &allowed.p, ws, deg, &what)?,
                    BlockKind::Nilpotent1 => check_span(f, &allowed.q, ws, deg, &what)?,
                    BlockKind::Nilpotent | BlockKind::Zero => {}
                }
            }
            let vars: Vec<usize> = (0..b.variables()).map(|l| ws.var_index(i, next + l)).collect();
            next += b.variables();
            let x = |l: usize| Polynomial::var(n, vars[l]);
            let first_column = top_row.len();
            let eps = b.epsilon.clone().unwrap_or_else(Q::zero);
            match b.kind {
                BlockKind::Jordan => {
                    let l = vars.len();
                    for c in 0..l {
                        top_row.push(x(c));
                        let mut bot = &x(c).scale(&eps) + &perts[c];
                        if c + 1 < l {
                            bot = &bot + &x(c + 1);
                        }
                        bottom_row.push(bot);
                    }
                    new_leads.push(vars[0]);
                }
                BlockKind::Nilpotent1 => {
                    top_row.push(perts[0].clone());
                    bottom_row.push(x(0));
                    new_leads.push(vars[0]);
                }
                BlockKind::Nilpotent => {
                    let l = vars.len();
                    top_row.push(perts[0].clone());
                    bottom_row.push(&x(0) + &perts[1]);
                    for c in 0..l {
                        top_row.push(x(c));
                        bottom_row.push(if c + 1 < l { &x(c + 1) + &perts[c + 2] } else { perts[l + 1].clone() });
                    }
                }
                BlockKind::Scroll => {
                    let l = vars.len();
                    for c in 0..l - 1 {
                        top_row.push(x(c));
                        bottom_row.push(if c + 2 < l { &x(c + 1) + &perts[c] } else { x(c + 1) });
                    }
                }
                BlockKind::Zero => {
                    let l = b.size;
                    for c in 0..l {
                        top_row.push(perts[c].clone());
                        bottom_row.push(perts[l + c].clone());
                    }
                }
            }
            placed.push(PlacedBlock {
                degree_index: i,
                kind: b.kind,
                epsilon: eps,
                vars,
                first_column,
                perturbations: perts,
            });
        }
        allowed.p.extend(new_leads.iter().copied());
        allowed.q.extend(new_leads);
    }
    if top_row.is_empty() {
        return Err(WpsError::domain("block spec yields a matrix without columns"));
    }
    let matrix = GradedMatrix::new(ws.clone(), vec![top_row, bottom_row])?;
    Ok(KwMatrix { matrix, blocks: placed, top })
}

pub fn build_kw_matrix(ws: &WeightSystem, spec: &BlockSpec) -> Result<GradedMatrix> {
    Ok(build_kw(ws, spec)?.matrix)
}

/// Fills unset perturbations of Jordan and nilpotent blocks with a nondegenerate default:
/// a Jordan tail becomes a power of the lead variable of the latest lower Jordan block with
/// the same `ε` (else of `x_{0,1}`), and `q_i` a power of the latest lower nilpotent
/// variable (else of `x_{0,a_0}`).
pub fn standard_perturbations(ws: &WeightSystem, spec: &BlockSpec) -> Result<BlockSpec> {
    ws.require_divisible()?;
    let g = ws.grouped();
    let n = ws.nvars();
    let table = VarTable::for_weights(ws);
    let power = |v: usize, deg: u32| -> Result<String> {
        let w = ws.weights()[v];
        if deg % w != 0 {
            return Err(WpsError::domain("weight does not divide the block degree"));
        }
        Ok(table.render(&Polynomial::monomial(Monomial::var(n, v).pow(deg / w), Q::one())))
    };
    let mut out = spec.clone();
    out.degrees.sort_by_key(|d| d.degree_index);
    let mut jordan_leads: Vec<(Q, usize)> = Vec::new();
    let mut nil_vars: Vec<usize> = Vec::new();
    for d in &mut out.degrees {
        let i = d.degree_index;
        if i == 0 || i >= g.len() {
            return Err(WpsError::domain(format!("degree index {i} out of range")));
        }
        let deg = g[i].0;
        let mut next = 1;
        let (mut new_j, mut new_n) = (Vec::new(), Vec::new());
        for b in &mut d.blocks {
            let lead = if b.variables() > 0 && next <= g[i].1 { Some(ws.var_index(i, next)) } else { None };
            next += b.variables();
            let eps = b.epsilon.clone().unwrap_or_else(Q::zero);
            match b.kind {
                BlockKind::Jordan => {
                    if b.perturbations.is_none() {
                        let base = jordan_leads
                            .iter()
                            .rev()
                            .find(|(e, _)| *e == eps)
                            .map(|x| x.1)
                            .unwrap_or(ws.var_index(0, 1));
                        let mut p = vec!["0".to_string(); b.size];
                        p[b.size - 1] = power(base, deg)?;
                        b.perturbations = Some(p);
                    }
                    new_j.extend(lead.map(|v| (eps, v)));
                }
                BlockKind::Nilpotent1 => {
                    if b.perturbations.is_none() {
                        let base = nil_vars.last().copied().unwrap_or(ws.var_index(0, g[0].1));
                        b.perturbations = Some(vec![power(base, deg)?]);
                    }
                    new_n.extend(lead);
                }
                _ => {}
            }
        }
        jordan_leads.extend(new_j);
        nil_vars.extend(new_n);
    }
    Ok(out)
}

/// Outcome of the structural 1-genericity test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum StructuralVerdict {
    Certified { profile: String, top_weight: u32, rows_checked: Vec<String> },
    Violation { clause: String },
}

impl StructuralVerdict {
    pub fn is_certified(&self) -> bool {
        matches!(self, StructuralVerdict::Certified { .. })
    }
}

fn render_param(l: &[Q; 2]) -> String {
    format!("[{}:{}]", fmt_q(&l[0]), fmt_q(&l[1]))
}

/// Zero entries, or two monomial entries sharing a variable, rule out a regular sequence.
fn row_obstruction(entries: &[Polynomial]) -> Option<String> {
    if entries.iter().any(Polynomial::is_zero) {
        return Some("has a zero entry".into());
    }
    let monos: Vec<&Monomial> = entries.iter().filter(|e| e.len() == 1).map(|e| e.terms().next().unwrap().0).collect();
    for (a, x) in monos.iter().enumerate() {
        for y in &monos[a + 1..] {
            if !x.coprime(y) {
                return Some("has two monomial entries with a common factor".into());
            }
        }
    }
    None
}

/// Certifies the shape required by the structure theorem for 1-generic 2-row matrices,
/// or names the first violated clause.
pub fn structural_1generic_check(m: &GradedMatrix, spec: &BlockSpec) -> Result<StructuralVerdict> {
    let ws = m.ambient();
    let kw = build_kw(ws, spec)?;
    if &kw.matrix != m {
        return Err(WpsError::invariant("matrix differs from the one built from the block spec"));
    }
    Ok(structural_verdict(&kw))
}

pub fn structural_verdict(kw: &KwMatrix) -> StructuralVerdict {
    let ws = kw.matrix.ambient();
    let g = ws.grouped();
    let v = |clause: String| StructuralVerdict::Violation { clause };
    let mut per_degree: BTreeMap<usize, Vec<&PlacedBlock>> = BTreeMap::new();
    for b in &kw.blocks {
        per_degree.entry(b.degree_index).or_default().push(b);
    }
    for (&i, blocks) in &per_degree {
        let m = g[i].0;
        if blocks.iter().any(|b| b.kind == BlockKind::Zero) {
            return v(format!("zero block in weight {m}"));
        }
        if let Some(b) = blocks.iter().find(|b| b.kind == BlockKind::Nilpotent) {
            return v(format!(
                "nilpotent block of size {} with {} columns in weight {m}",
                b.vars.len(),
                b.vars.len() + 1
            ));
        }
        if blocks.iter().filter(|b| b.kind == BlockKind::Nilpotent1).count() > 1 {
            return v(format!("more than one nilpotent block in weight {m}"));
        }
        if i < kw.top && blocks.iter().any(|b| b.kind == BlockKind::Scroll) {
            return v(format!("scroll block in weight {m} below the top occupied weight {}", g[kw.top].0));
        }
    }
    for b in &kw.blocks {
        let m = g[b.degree_index].0;
        match b.kind {
            BlockKind::Jordan if b.perturbations.last().map_or(true, Polynomial::is_zero) => {
                return v(format!("Jordan block with epsilon {} in weight {m} has a zero tail perturbation", fmt_q(&b.epsilon)));
            }
            BlockKind::Nilpotent1 if b.perturbations[0].is_zero() => {
                return v(format!("nilpotent block in weight {m} has q = 0"));
            }
            _ => {}
        }
    }
    let mut params: Vec<[Q; 2]> = vec![[Q::one(), Q::zero()], [Q::zero(), Q::one()]];
    for b in &kw.blocks {
        if b.kind == BlockKind::Jordan {
            let p = [-b.epsilon.clone(), Q::one()];
            if !params.contains(&p) {
                params.push(p);
            }
        }
    }
    let mut rows_checked = Vec::new();
    for l in &params {
        let entries: Vec<Polynomial> = (0..kw.matrix.cols())
            .map(|j| &kw.matrix.entry(0, j).scale(&l[0]) + &kw.matrix.entry(1, j).scale(&l[1]))
            .collect();
        if let Some(why) = row_obstruction(&entries) {
            return v(format!("generalized row {} {why}", render_param(l)));
        }
        rows_checked.push(render_param(l));
    }
    let mut r = vec![0; g.len()];
    for j in 0..kw.matrix.cols() {
        let d = kw.matrix.entry(0, j).homogeneous_degree(ws.weights()).ok().flatten().unwrap_or(0);
        if let Some(c) = ws.class_of_weight(d as u32) {
            r[c] += 1;
        }
    }
    let profile = Profile::new(ws.clone(), r).map(|p| p.display()).unwrap_or_else(|e| e.to_string());
    StructuralVerdict::Certified { profile, top_weight: g[kw.top].0, rows_checked }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::q;

    fn table(ws: &WeightSystem) -> VarTable {
        VarTable::for_weights(ws)
    }

    #[test]
    fn one_jordan_block_curve() {
        let ws = WeightSystem::new(vec![1, 1, 2, 2]).unwrap();
        let spec = BlockSpec::new(vec![DegreeBlocks {
            degree_index: 1,
            blocks: vec![Block::jordan(2, q(0)).with_perturbations(&["0", "x_1^2"])],
        }]);
        let m = build_kw_matrix(&ws, &spec).unwrap();
        let t = table(&ws);
        let want: Vec<Vec<Polynomial>> = [["x_1", "y_1", "y_2"], ["x_2", "y_2", "x_1^2"]]
            .iter()
            .map(|r| r.iter().map(|s| t.parse(s).unwrap()).collect())
            .collect();
        assert_eq!(m.entries(), &want[..]);
        assert!(structural_1generic_check(&m, &spec).unwrap().is_certified());
    }

    #[test]
    fn classical_scroll() {
        let ws = WeightSystem::new(vec![1; 5]).unwrap();
        let m = build_kw_matrix(&ws, &BlockSpec::new(vec![])).unwrap();
        assert_eq!((m.rows(), m.cols()), (2, 4));
        assert_eq!(m.entry(1, 3), &Polynomial::var(5, 4));
    }

    #[test]
    fn rejections() {
        let ws = WeightSystem::new(vec![1, 1, 2, 2]).unwrap();
        let too_many = BlockSpec::new(vec![DegreeBlocks { degree_index: 1, blocks: vec![Block::jordan(3, q(0))] }]);
        assert!(build_kw(&ws, &too_many).is_err());
        let outside = BlockSpec::new(vec![DegreeBlocks {
            degree_index: 1,
            blocks: vec![Block::jordan(2, q(0)).with_perturbations(&["0", "x_1*x_2"])],
        }]);
        assert!(matches!(build_kw(&ws, &outside), Err(WpsError::Domain(_))));
    }

    #[test]
    fn violations() {
        let ws = WeightSystem::new(vec![1, 1, 2, 2, 4]).unwrap();
        let zero = BlockSpec::new(vec![DegreeBlocks {
            degree_index: 1,
            blocks: vec![Block::jordan(2, q(1)).with_perturbations(&["0", "x_1^2"]), Block::zero(1)],
        }]);
        let verdict = structural_verdict(&build_kw(&ws, &zero).unwrap());
        assert!(matches!(&verdict, StructuralVerdict::Violation { clause } if clause.starts_with("zero block")));
        let nil = BlockSpec::new(vec![
            DegreeBlocks { degree_index: 1, blocks: vec![Block::nilpotent(2)] },
            DegreeBlocks { degree_index: 2, blocks: vec![Block::jordan(1, q(0)).with_perturbations(&["x_1^4"])] },
        ]);
        let verdict = structural_verdict(&build_kw(&ws, &nil).unwrap());
        assert!(matches!(&verdict, StructuralVerdict::Violation { clause } if clause.contains("nilpotent block of size 2")));
        let bare = BlockSpec::new(vec![DegreeBlocks { degree_index: 1, blocks: vec![Block::jordan(2, q(0))] }]);
        let verdict = structural_verdict(&build_kw(&ws, &bare).unwrap());
        assert!(matches!(&verdict, StructuralVerdict::Violation { clause } if clause.contains("zero tail")));
    }

    #[test]
    fn standard_defaults_certify() {
        let ws = WeightSystem::from_grouped(&[(1, 3), (2, 3), (4, 3)]).unwrap();
        let spec = BlockSpec::new(vec![
            DegreeBlocks { degree_index: 1, blocks: vec![Block::jordan(2, q(0)), Block::nilpotent1()] },
            DegreeBlocks { degree_index: 2, blocks: vec![Block::jordan(1, q(0)), Block::jordan(1, q(1)), Block::nilpotent1()] },
        ]);
        let filled = standard_perturbations(&ws, &spec).unwrap();
        let kw = build_kw(&ws, &filled).unwrap();
        assert!(structural_verdict(&kw).is_certified(), "{:?}", structural_verdict(&kw));
        let p = &filled.degrees[1].blocks[0].perturbations.as_ref().unwrap()[0];
        assert_eq!(p, "x_{1,1}^2");
    }

    #[test]
    fn json_forms() {
        let one = r#"{"degree_index": 1, "blocks": [{"kind": "jordan", "size": 2, "epsilon": "1/2",
                      "perturbations": ["0", "x_{0,1}^2"]}]}"#;
        let s = BlockSpec::from_json(one).unwrap();
        assert_eq!(s.degrees[0].blocks[0].epsilon, Some(Q::new(1.into(), 2.into())));
        let again = BlockSpec::from_json(&s.to_json()).unwrap();
        assert_eq!(again, s);
        let list = r#"[{"degree_index": 1, "blocks": [{"kind": "nilpotent1", "size": 1, "epsilon": 3}]}]"#;
        assert_eq!(BlockSpec::from_json(list).unwrap().degrees[0].blocks[0].epsilon, Some(q(3)));
        assert!(BlockSpec::from_json("{\"degrees\": 4}").is_err());
    }
}
