use wps_core::arith::{q, qf};
use wps_core::groebner::{
    codimension, default_basis, groebner, hilbert_series, implicitize, is_cm_determinantal, resolution_data,
    MonomialOrder, TieBreak,
};
use wps_core::hilbert::{degree_from_series, ideal_degree};
use wps_core::ring::{GradedMatrix, Ideal, Polynomial, VarTable, WeightSystem};
use wps_core::upoly::ZPoly;

fn ws(w: &[u32]) -> WeightSystem {
    WeightSystem::new(w.to_vec()).unwrap()
}

fn ideal(w: &[u32], gens: &[&str]) -> Ideal {
    let ws = ws(w);
    let t = VarTable::for_weights(&ws);
    Ideal::new(ws, gens.iter().map(|s| t.parse(s).unwrap()).collect()).unwrap()
}

fn matrix(w: &[u32], rows: &[&[&str]]) -> GradedMatrix {
    let ws = ws(w);
    let t = VarTable::for_weights(&ws);
    let e = rows.iter().map(|r| r.iter().map(|s| t.parse(s).unwrap()).collect()).collect();
    GradedMatrix::new(ws, e).unwrap()
}

fn forms(v: &[&str]) -> Vec<Polynomial> {
    let t = VarTable::from_names(&["s", "t"]);
    v.iter().map(|s| t.parse(s).unwrap()).collect()
}

fn c1() -> GradedMatrix {
    matrix(&[1, 1, 2, 2], &[&["x_1", "x_2^2", "y_1"], &["x_2", "y_1", "y_2"]])
}

fn same_ideal(a: &Ideal, b: &Ideal) -> bool {
    default_basis(a).unwrap().same_ideal(&default_basis(b).unwrap())
}

#[test]
fn weighted_complete_intersection_curve() {
    let i = ideal(&[2, 3, 5, 5], &["z_1 - z_2 + x y", "x^3 z_1 + 2 y^2 z_1 + x^3 z_2 - y^2 z_2"]);
    let hs = hilbert_series(&i).unwrap();
    let simple = hs.cancel_common();
    assert_eq!(simple.numerator(), &ZPoly::one_minus_t_pow(11));
    assert_eq!(simple.denominator(), &[2, 3, 5]);
    assert_eq!(degree_from_series(&hs, 1).unwrap(), qf(11, 30));
    assert_eq!(ideal_degree(&i).unwrap(), (1, qf(11, 30)));
}

#[test]
fn hilbert_series_examples() {
    let free = hilbert_series(&Ideal::zero(ws(&[1, 1, 2, 2]))).unwrap();
    assert_eq!(free.numerator(), &ZPoly::one());
    assert_eq!(free.denominator(), &[1, 1, 2, 2]);
    let h = hilbert_series(&ideal(&[1, 2, 2], &["x"])).unwrap();
    assert_eq!(h.cancel_common().denominator(), &[2, 2]);
    assert_eq!(h.cancel_common().numerator(), &ZPoly::one());
}

#[test]
fn three_rational_curves() {
    let w = ws(&[1, 1, 2, 2]);
    let t = VarTable::for_weights(&w);
    let i0 = implicitize(&forms(&["s^2", "t^2", "s^3 t", "s t^3"]), &w).unwrap();
    let expected = Ideal::new(
        w.clone(),
        ["x_2 y_1 - x_1 y_2", "x_1 x_2^3 - y_2^2", "x_1^2 x_2^2 - y_1 y_2", "x_1^3 x_2 - y_1^2"]
            .iter()
            .map(|s| t.parse(s).unwrap())
            .collect(),
    )
    .unwrap();
    assert!(same_ideal(&i0, &expected));
    let r = resolution_data(&i0).unwrap();
    assert_eq!(r.projective_dimension, 3);
    assert_eq!(r.betti.totals(), vec![1, 4, 4, 1]);
    assert_eq!(r.depth, 1);

    let i1 = implicitize(&forms(&["s^2", "s t", "s t^3", "t^4"]), &w).unwrap();
    assert!(same_ideal(&i1, &c1().minors(2).unwrap()));
    let i2 = implicitize(&forms(&["s^3 t", "s t^3", "s^8", "t^8"]), &w).unwrap();
    let m2 = matrix(&[1, 1, 2, 2], &[&["y_1", "x_1", "x_2^2"], &["x_1^2", "x_2", "y_2"]]);
    assert!(same_ideal(&i2, &m2.minors(2).unwrap()));
    for i in [&i0, &i1, &i2] {
        assert_eq!(ideal_degree(i).unwrap(), (1, q(2)));
    }
}

#[test]
fn determinantal_checks() {
    assert!(is_cm_determinantal(&c1()).unwrap());
    assert_eq!(codimension(&c1().minors(2).unwrap()).unwrap(), 2);
    let r = resolution_data(&c1().minors(2).unwrap()).unwrap();
    assert_eq!(r.projective_dimension, 2);
    assert_eq!(r.betti.totals(), vec![1, 3, 2]);
    let repeated = matrix(&[1, 1, 2, 2], &[&["x_1", "x_1", "y_1"], &["x_2", "x_2", "y_2"]]);
    assert!(!is_cm_determinantal(&repeated).unwrap());
    let cand = matrix(&[1, 1, 2, 3], &[&["x_1", "x_2", "y"], &["x_2^2", "y", "z"]]);
    assert!(is_cm_determinantal(&cand).unwrap());
}

#[test]
fn order_independence_and_brute_force_counts() {
    let cases = [
        ideal(&[1, 1, 2, 2], &["x_1 y_1 - x_2^3", "x_1 y_2 - x_2 y_1", "x_2^2 y_2 - y_1^2"]),
        ideal(&[2, 3, 5, 5], &["z_1 - z_2 + x y", "x^3 z_1 + 2 y^2 z_1 + x^3 z_2 - y^2 z_2"]),
        ideal(&[1, 2, 3], &["x y + z", "y^3 - z^2 + x^4 y"]),
    ];
    for i in &cases {
        let w = i.ambient().weights();
        let a = groebner(i, &MonomialOrder::weighted(w, TieBreak::RevLex)).unwrap();
        let b = groebner(i, &MonomialOrder::weighted(w, TieBreak::Lex)).unwrap();
        assert_eq!(a.hilbert_series(), b.hilbert_series());
        let h = a.hilbert_series().coefficients(41);
        for d in 0..=40u64 {
            assert_eq!(h[d as usize], (a.standard_monomials(d).len() as i64).into());
        }
    }
}
