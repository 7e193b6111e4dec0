//! Algebraic laws of truncated q,ζ-series.

use jacobi_mde::series::{int, rat};
use jacobi_mde::{Error, QZSeries, Rational};
use proptest::prelude::*;

const T: i64 = 96;

fn series(terms: Vec<(i64, i64, i64, i64)>) -> QZSeries {
    QZSeries::from_terms(0, 2, T, terms.into_iter().map(|(n, l, p, q)| (n, l, rat(p, q)))).unwrap()
}

fn arb_series() -> impl Strategy<Value = QZSeries> {
    prop::collection::vec((0i64..T, -8i64..=8, -20i64..=20, 1i64..=6), 0..12).prop_map(series)
}

proptest! {
    #[test]
    fn multiplication_commutes(a in arb_series(), b in arb_series()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn multiplication_associates(a in arb_series(), b in arb_series(), c in arb_series()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn multiplication_distributes(a in arb_series(), b in arb_series(), c in arb_series()) {
        let lhs = a.mul(&b.sum(&c).unwrap());
        let rhs = a.mul(&b).sum(&a.mul(&c)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn difference_with_itself_vanishes(a in arb_series()) {
        prop_assert!(a.difference(&a).unwrap().is_zero());
    }

    #[test]
    fn exact_division_undoes_multiplication(a in arb_series(), n in 0i64..24, l in -4i64..=4, c in 1i64..5) {
        // monic-in-q divisor: c·q^{n/24}ζ^{l/2} + (higher terms)
        let d = QZSeries::from_terms(0, 2, 2 * T, [(n, l, int(c)), (n + 24, l + 2, int(1)), (n + 48, 0, int(-3))]).unwrap();
        let product = a.mul(&d);
        let back = product.div_exact(&d).unwrap();
        let t = back.trunc24().min(a.trunc24());
        prop_assert_eq!(back.truncate(t), a.clone().truncate(t));
    }

    #[test]
    fn reflection_is_an_involution(a in arb_series()) {
        prop_assert_eq!(a.reflect().reflect(), a);
    }
}

#[test]
fn product_truncation_uses_leading_orders() {
    let a = QZSeries::from_terms(0, 0, 48, [(24, 0, int(1))]).unwrap();
    let b = QZSeries::from_terms(0, 0, 72, [(0, 0, int(1))]).unwrap();
    // min(48 + 0, 72 + 24)
    assert_eq!(a.mul(&b).trunc24(), 48);
    let c = QZSeries::from_terms(0, 0, 48, [(48 - 1, 0, int(1))]).unwrap();
    // min(48 + 24, 48 + 47)
    assert_eq!(c.mul(&a).trunc24(), 72);
}

#[test]
fn terms_at_or_beyond_truncation_are_rejected() {
    assert_eq!(
        QZSeries::from_terms(0, 0, 24, [(24, 0, int(1))]).unwrap_err(),
        Error::BeyondTruncation { n24: 24, trunc24: 24 }
    );
}

#[test]
fn division_needs_a_monomial_lowest_slice() {
    let d = QZSeries::from_terms(0, 2, 48, [(0, 2, int(1)), (0, -2, int(1))]).unwrap();
    let one = QZSeries::one(48);
    assert_eq!(one.div_exact(&d).unwrap_err(), Error::NonMonomialDivisor);
    assert_eq!(
        one.div_exact(&QZSeries::zero(0, 0, 48)).unwrap_err(),
        Error::ZeroDivisor
    );
}

#[test]
fn zero_coefficients_are_dropped() {
    let s = QZSeries::from_terms(0, 0, 48, [(0, 0, int(1)), (0, 0, Rational::from(int(-1)))]).unwrap();
    assert!(s.is_zero());
    assert_eq!(s.term_count(), 0);
}
