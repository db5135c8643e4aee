//! Values computed independently of the library and frozen here.

use std::sync::Arc;

use num_bigint::BigInt;
use proptest::prelude::*;
use spinfactor::affine::{affine_irreducible_character, AffineWeight};
use spinfactor::charalg::{decompose, irreducible_character, weyl_dimension};
use spinfactor::embed::principal_specialization;
use spinfactor::qpoly::QPoly;
use spinfactor::{RootSystem, Weight};

fn rs(name: &str) -> Arc<RootSystem> {
    Arc::new(RootSystem::builtin(name).unwrap())
}

fn dim(name: &str, w: &[i32]) -> BigInt {
    weyl_dimension(&rs(name), &Weight::new(w.iter().copied())).unwrap()
}

#[test]
fn classical_dimensions() {
    // fundamental representations from standard tables
    assert_eq!(dim("G2", &[1, 0]), 7.into());
    assert_eq!(dim("G2", &[0, 1]), 14.into());
    let f4: Vec<i64> = (0..4)
        .map(|i| {
            let mut w = vec![0; 4];
            w[i] = 1;
            dim("F4", &w).try_into().unwrap()
        })
        .collect();
    let mut sorted = f4.clone();
    sorted.sort();
    assert_eq!(sorted, vec![26, 52, 273, 1274]);
    assert_eq!(dim("E6", &[1, 0, 0, 0, 0, 0]), 27.into());
    assert_eq!(dim("B3", &[0, 0, 1]), 8.into());
    assert_eq!(dim("D4", &[0, 0, 1, 0]), 8.into());
    assert_eq!(dim("C3", &[0, 0, 1]), 14.into());
    assert_eq!(dim("A4", &[1, 1, 1, 1]), 1024.into());
}

#[test]
fn b2_multiplicities() {
    // V(2 theta_s) is the traceless symmetric square of C^5
    let b2 = rs("B2");
    let chi = irreducible_character(&b2, &b2.theta_s().scale(2)).unwrap();
    assert_eq!(chi.dimension(), 14.into());
    assert_eq!(chi.coeff(&b2.zero_weight()), 2.into());
    let rho = irreducible_character(&b2, b2.rho()).unwrap();
    assert_eq!(rho.dimension(), 16.into());
    assert_eq!(rho.coeff(&b2.zero_weight()), 0.into());
}

#[test]
fn small_tensor_products() {
    // 3 (x) 3bar = 8 + 1 and 3 (x) 3 = 6 + 3bar for sl3
    let a2 = rs("A2");
    let v = irreducible_character(&a2, &Weight::new([1, 0])).unwrap();
    let vd = irreducible_character(&a2, &Weight::new([0, 1])).unwrap();
    let p = decompose(&a2, &v.multiply(&vd).unwrap()).unwrap();
    assert_eq!(p, vec![(Weight::new([1, 1]), 1.into()), (Weight::new([0, 0]), 1.into())]);
    let p = decompose(&a2, &v.multiply(&v).unwrap()).unwrap();
    assert_eq!(p, vec![(Weight::new([2, 0]), 1.into()), (Weight::new([0, 1]), 1.into())]);
}

/// Coefficients of `1 / phi(q)^2`.
const BIPARTITIONS: [i64; 6] = [1, 2, 5, 10, 20, 36];

#[test]
fn level_one_a2_string_functions() {
    // the level-one module of the affine sl3 has character
    // sum_{gamma in Q} e^gamma q^{|gamma|^2/2} / phi(q)^2
    let a2 = rs("A2");
    let ch = affine_irreducible_character(&a2, &AffineWeight::new(Weight::new([0, 0]), 1, 0), 5, false).unwrap();
    for j in 0..=5i64 {
        let s = &ch.slices[&-j];
        assert_eq!(s.coeff(&Weight::new([0, 0])), BIPARTITIONS[j as usize].into(), "zero weight at depth {j}");
        let root = if j >= 1 { BIPARTITIONS[j as usize - 1] } else { 0 };
        assert_eq!(s.coeff(&Weight::new([1, 1])), root.into(), "root weight at depth {j}");
        // 2 alpha_1 has |.|^2 / 2 = 4
        let far = if j >= 4 { BIPARTITIONS[j as usize - 4] } else { 0 };
        assert_eq!(s.coeff(&Weight::new([4, -2])), far.into());
    }
}

fn one_minus(k: i64) -> QPoly {
    let mut p = QPoly::one();
    p.add_term(k, (-1).into());
    p
}

/// `S_lambda(1, ..., q^{n-1}) prod (1 - q^hook) = q^{n(lambda)} prod (1 - q^{n + content})`.
fn hook_content_holds(lambda: &[i64], n: usize) -> bool {
    let mut lhs = principal_specialization(lambda, n).unwrap();
    let mut rhs = QPoly::monomial(lambda.iter().enumerate().map(|(i, &l)| i as i64 * l).sum(), 1);
    let conj = |j: i64| lambda.iter().filter(|&&l| l > j).count() as i64;
    for (i, &l) in lambda.iter().enumerate() {
        for j in 0..l {
            let hook = (l - j - 1) + (conj(j) - i as i64 - 1) + 1;
            lhs = lhs.mul(&one_minus(hook));
            rhs = rhs.mul(&one_minus(n as i64 + j - i as i64));
        }
    }
    lhs == rhs
}

#[test]
fn principal_specialization_example() {
    let p = principal_specialization(&[2, 1, 0], 3).unwrap();
    assert_eq!(p, QPoly::from_coeffs([0, 1, 2, 2, 2, 1]));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hook_content_formula(n in 1usize..=4, parts in prop::collection::vec(0i64..=3, 4)) {
        let mut lambda: Vec<i64> = parts.into_iter().take(n).collect();
        lambda.sort_by(|a, b| b.cmp(a));
        prop_assert!(hook_content_holds(&lambda, n));
    }
}
