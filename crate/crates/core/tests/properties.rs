//! Randomized invariants over divisible weight systems and KW curves.

use proptest::prelude::*;

use wps_core::arith::q;
use wps_core::groebner::{groebner, MonomialOrder, TieBreak};
use wps_core::hilbert::{cone_degree, cone_series, degree_from_series, quasi_polynomial};
use wps_core::param::{parameterize_curve, verify_parameterization};
use wps_core::scroll::{
    betti_from_profile, build_kw, enumerate_scrolls, feasible_profiles, regularities, scroll_hilbert_series,
    standard_perturbations, structural_verdict, tau, Block, BlockSpec, DegreeBlocks,
};
use wps_core::ring::WeightSystem;

/// Divisible weight groups `[(1, a_0), (m_1, a_1), …]` with weights at most 12.
fn groups(max_vars: usize) -> impl Strategy<Value = Vec<(u32, usize)>> {
    (2usize..=3, prop::collection::vec((prop::sample::select(vec![2u32, 3]), 1usize..=3), 0..=2)).prop_filter_map(
        "too many variables",
        move |(a0, rest)| {
            let mut g = vec![(1u32, a0)];
            let mut m = 1;
            for (step, a) in rest {
                m *= step;
                if m > 12 {
                    break;
                }
                g.push((m, a));
            }
            (g.iter().map(|x| x.1).sum::<usize>() <= max_vars).then_some(g)
        },
    )
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn tau_is_the_largest_betti_degree(g in groups(9)) {
        let ws = WeightSystem::from_grouped(&g).unwrap();
        for p in feasible_profiles(&ws).unwrap() {
            let b = betti_from_profile(&p);
            for i in 1..=b.projective_dimension() {
                prop_assert_eq!(Some(tau(&p, i).unwrap()), b.max_degree(i));
            }
        }
    }

    #[test]
    fn scrolls_satisfy_every_wnp(g in groups(9)) {
        let ws = WeightSystem::from_grouped(&g).unwrap();
        for row in enumerate_scrolls(&ws, 1).unwrap() {
            let r = regularities(&row.profile).unwrap();
            prop_assert!(r.wnp.all_p);
            let d = row.profile.dim();
            prop_assert_eq!(r.k_reg - r.w_reg, ws.w_upper(d).unwrap() as i64 - d as i64);
            prop_assert_eq!((row.k_reg, row.w_reg), (r.k_reg, r.w_reg));
        }
    }

    #[test]
    fn cone_degree_two_ways(g in groups(7), m in 1u64..=6) {
        let ws = WeightSystem::from_grouped(&g).unwrap();
        for p in feasible_profiles(&ws).unwrap() {
            let hs = scroll_hilbert_series(&p);
            let qp = quasi_polynomial(&hs).unwrap();
            let period = qp.period() as u64;
            let a = cone_degree(&qp, p.dim(), m, period, period * m / gcd(period, m)).unwrap();
            let b = degree_from_series(&cone_series(&hs, m as u32), p.dim() + 1).unwrap();
            prop_assert_eq!(a, b);
        }
    }
}

/// A curve spec: each positive weight class is split into Jordan blocks with an optional
/// trailing nilpotent block.
fn curve_spec() -> impl Strategy<Value = (Vec<(u32, usize)>, Vec<Vec<(usize, i64)>>)> {
    groups(7).prop_filter("needs a positive weight", |g| g.len() > 1).prop_flat_map(|g| {
        let parts: Vec<_> = g[1..]
            .iter()
            .map(|&(_, a)| prop::collection::vec((1usize..=a, -1i64..=2), 1..=a))
            .collect();
        (Just(g), parts)
    })
}

fn to_spec(g: &[(u32, usize)], parts: &[Vec<(usize, i64)>]) -> Option<BlockSpec> {
    let mut degrees = Vec::new();
    for (i, (&(_, a), part)) in g[1..].iter().zip(parts).enumerate() {
        let mut left = a;
        let mut blocks = Vec::new();
        for &(size, eps) in part {
            if left == 0 {
                break;
            }
            let size = size.min(left);
            // eps = 2 stands for a nilpotent block
            blocks.push(if eps == 2 { Block::nilpotent1() } else { Block::jordan(size, q(eps)) });
            left -= if eps == 2 { 1 } else { size };
        }
        if left > 0 {
            blocks.push(Block::jordan(left, q(0)));
        }
        degrees.push(DegreeBlocks { degree_index: i + 1, blocks });
    }
    let ws = WeightSystem::from_grouped(g).ok()?;
    standard_perturbations(&ws, &BlockSpec::new(degrees)).ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn parameterizations_satisfy_the_minors((g, parts) in curve_spec()) {
        let ws = WeightSystem::from_grouped(&g).unwrap();
        let spec = to_spec(&g, &parts);
        prop_assume!(spec.is_some());
        let spec = spec.unwrap();
        let kw = build_kw(&ws, &spec).unwrap();
        prop_assume!(structural_verdict(&kw).is_certified());
        let ps = parameterize_curve(&ws, &spec).unwrap();
        let r = verify_parameterization(&ps, &kw.matrix).unwrap();
        prop_assert!(r.passed, "{:?}", r.failures);
    }

    #[test]
    fn hilbert_series_ignores_the_order((g, parts) in curve_spec()) {
        let ws = WeightSystem::from_grouped(&g).unwrap();
        prop_assume!(ws.nvars() <= 6);
        let spec = to_spec(&g, &parts);
        prop_assume!(spec.is_some());
        let i = build_kw(&ws, &spec.unwrap()).unwrap().matrix.minors(2).unwrap();
        let w = ws.weights();
        let a = groebner(&i, &MonomialOrder::weighted(w, TieBreak::RevLex)).unwrap();
        let b = groebner(&i, &MonomialOrder::weighted(w, TieBreak::Lex)).unwrap();
        prop_assert!(a.hilbert_series().same_function(&b.hilbert_series()));
    }
}
