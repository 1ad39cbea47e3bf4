use super::*;
use crate::exactlin::rational::int;

fn v(xs: &[i64]) -> Vector {
    xs.iter().map(|&x| int(x)).collect()
}

fn sl2_x() -> BilinearMap {
    BilinearMap::alternating_from(
        3,
        &[(0, 1, v(&[0, 2, 0])), (0, 2, v(&[0, 0, -2])), (1, 2, v(&[1, 0, 0]))],
    )
    .unwrap()
}

fn dual_numbers(alpha: LinearMap) -> HomAlgebra {
    let mu = BilinearMap::from_entries(
        2,
        &[(0, 0, v(&[1, 0])), (0, 1, v(&[0, 1])), (1, 0, v(&[0, 1]))],
    )
    .unwrap();
    HomAlgebra::with_default_labels(Kind::HomAssociative, mu, alpha).unwrap()
}

fn lie(bracket: BilinearMap, alpha: LinearMap) -> HomAlgebra {
    HomAlgebra::with_default_labels(Kind::HomLie, bracket, alpha).unwrap()
}

fn matrix(rows: &[[i64; 3]]) -> LinearMap {
    LinearMap::from_rows(rows.iter().map(|r| v(r)).collect()).unwrap()
}

#[test]
fn associator_vanishes_for_associative_identity_twist() {
    let a = dual_numbers(LinearMap::identity(2));
    for (i, j, k) in [(0, 0, 0), (0, 1, 1), (1, 0, 1)] {
        assert!(hom_associator(&a.product, &a.alpha, i, j, k).unwrap().iter().all(Zero::is_zero));
    }
}

#[test]
fn associator_one_dimensional() {
    let mu = BilinearMap::from_entries(1, &[(0, 0, v(&[1]))]).unwrap();
    let alpha = LinearMap::scalar(1, int(2));
    assert_eq!(hom_associator(&mu, &alpha, 0, 0, 0).unwrap(), v(&[0]));
}

#[test]
fn associator_square_zero_with_zero_twist() {
    let mu = BilinearMap::from_entries(2, &[(0, 0, v(&[0, 1]))]).unwrap();
    let alpha = LinearMap::zero(2);
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                assert_eq!(hom_associator(&mu, &alpha, i, j, k).unwrap(), v(&[0, 0]));
            }
        }
    }
}

#[test]
fn dual_numbers_pass_with_identity() {
    assert!(check_hom_associative(&dual_numbers(LinearMap::identity(2))).unwrap().passed);
}

#[test]
fn dual_numbers_nilpotent_twist_matches_brute_force() {
    // Oracle: elements a + bε with (a,b)(c,d) = (ac, ad + bc); α(a + bε) = aε.
    let mul = |x: (i64, i64), y: (i64, i64)| (x.0 * y.0, x.0 * y.1 + x.1 * y.0);
    let alpha = |x: (i64, i64)| (0, x.0);
    let basis = [(1, 0), (0, 1)];
    let mut expected = true;
    for &x in &basis {
        for &y in &basis {
            for &z in &basis {
                expected &= mul(alpha(x), mul(y, z)) == mul(mul(x, y), alpha(z));
            }
        }
    }
    let twist = LinearMap::from_rows(vec![v(&[0, 0]), v(&[1, 0])]).unwrap();
    let report = check_hom_associative(&dual_numbers(twist)).unwrap();
    assert_eq!(report.passed, expected);
}

#[test]
fn zero_product_is_hom_associative() {
    let a = HomAlgebra::with_default_labels(
        Kind::HomAssociative,
        BilinearMap::zero(3),
        matrix(&[[1, 2, 3], [4, 5, 6], [7, 8, 9]]),
    )
    .unwrap();
    assert!(check_hom_associative(&a).unwrap().passed);
}

#[test]
fn kind_mismatch_is_an_error() {
    let a = dual_numbers(LinearMap::identity(2));
    assert!(matches!(check_hom_lie(&a), Err(Error::KindMismatch { .. })));
}

#[test]
fn sl2_jacobiator() {
    let j = hom_jacobiator(&sl2_x(), &LinearMap::identity(3), 0, 1, 2).unwrap();
    assert_eq!(j, v(&[0, 0, 0]));
    let zero = hom_jacobiator(&sl2_x(), &LinearMap::zero(3), 0, 1, 2).unwrap();
    assert_eq!(zero, v(&[0, 0, 0]));
    let mut sym = sl2_x();
    sym.set(1, 0, 1, int(2));
    assert!(matches!(
        hom_jacobiator(&sym, &LinearMap::identity(3), 0, 1, 2),
        Err(Error::NotAlternating(..))
    ));
}

#[test]
fn sl2_twist_family_member_passes() {
    // rows (a,d,c; 2c,b,f; 2d,e,b) at a=1,b=2,c=3,d=4,e=5,f=6
    let alpha = matrix(&[[1, 4, 3], [6, 2, 6], [8, 5, 2]]);
    assert!(check_hom_lie(&lie(sl2_x(), alpha)).unwrap().passed);
    assert!(check_hom_lie(&lie(sl2_x(), LinearMap::identity(3))).unwrap().passed);
}

#[test]
fn sl2_off_family_twist_fails_at_first_triple() {
    let alpha = matrix(&[[0, 0, 0], [1, 0, 0], [0, 0, 0]]);
    let report = check_hom_lie(&lie(sl2_x(), alpha.clone())).unwrap();
    assert!(!report.passed);
    let w = report.witness.unwrap();
    assert_eq!(w.indices, vec![0, 1, 2]);
    assert_eq!(w.residual, hom_jacobiator(&sl2_x(), &alpha, 0, 1, 2).unwrap());
}

#[test]
fn leibniz_cases() {
    let zero = HomAlgebra::with_default_labels(Kind::HomLeibniz, BilinearMap::zero(2), LinearMap::identity(2))
        .unwrap();
    assert!(check_hom_leibniz(&zero).unwrap().passed);
    let sl2 = HomAlgebra::with_default_labels(Kind::HomLeibniz, sl2_x(), LinearMap::identity(3)).unwrap();
    assert!(check_hom_leibniz(&sl2).unwrap().passed);
}

#[test]
fn tensor_product_of_scalars() {
    let one_dim = |a: i64| {
        HomAlgebra::with_default_labels(
            Kind::HomAssociative,
            BilinearMap::from_entries(1, &[(0, 0, v(&[1]))]).unwrap(),
            LinearMap::scalar(1, int(a)),
        )
        .unwrap()
    };
    let t = tensor_product(&one_dim(2), &one_dim(3)).unwrap();
    assert_eq!(t.alpha, LinearMap::scalar(1, int(6)));
    assert_eq!(t.product.pair(0, 0), &[int(1)]);
    assert_eq!(t.labels, vec!["(e1,e1)".to_string()]);
}

#[test]
fn tensor_with_unit_algebra_keeps_constants() {
    let a = dual_numbers(LinearMap::identity(2));
    let unit = HomAlgebra::with_default_labels(
        Kind::HomAssociative,
        BilinearMap::from_entries(1, &[(0, 0, v(&[1]))]).unwrap(),
        LinearMap::identity(1),
    )
    .unwrap();
    let t = tensor_product(&a, &unit).unwrap();
    assert_eq!(t.product, a.product);
    assert_eq!(t.alpha, a.alpha);
    assert!(check_hom_associative(&t).unwrap().passed);
}

#[test]
fn morphisms() {
    let a = dual_numbers(LinearMap::identity(2));
    assert!(is_morphism(&LinearMap::identity(2), &a, &a).unwrap());
    assert!(is_morphism(&LinearMap::zero(2), &a, &a).unwrap());
    let unit = HomAlgebra::with_default_labels(
        Kind::HomAssociative,
        BilinearMap::from_entries(1, &[(0, 0, v(&[1]))]).unwrap(),
        LinearMap::identity(1),
    )
    .unwrap();
    assert!(!is_morphism(&LinearMap::scalar(1, int(2)), &unit, &unit).unwrap());
    assert!(is_morphism(&LinearMap::identity(1), &a, &a).is_err());
}

#[test]
fn units() {
    assert_eq!(find_unit(&dual_numbers(LinearMap::identity(2))).unwrap(), Some(v(&[1, 0])));
    let zero = HomAlgebra::with_default_labels(Kind::HomAssociative, BilinearMap::zero(2), LinearMap::identity(2))
        .unwrap();
    assert_eq!(find_unit(&zero).unwrap(), None);
    // e1 e1 = e1, e1 e2 = e2, e2 anything = 0: e1 is a left unit only.
    let left = BilinearMap::from_entries(2, &[(0, 0, v(&[1, 0])), (0, 1, v(&[0, 1]))]).unwrap();
    let a = HomAlgebra::with_default_labels(Kind::HomAssociative, left, LinearMap::identity(2)).unwrap();
    assert_eq!(find_unit(&a).unwrap(), None);
}

#[test]
fn hom_lie_construction_requires_alternation() {
    let mut b = sl2_x();
    b.set(0, 0, 0, int(1));
    assert!(HomAlgebra::with_default_labels(Kind::HomLie, b, LinearMap::identity(3)).is_err());
}
