//! Ledger verification, discovery and elliptic genera.

use jacobi_mde::catalog::form;
use jacobi_mde::mde::{
    discover, discover_series, elliptic_genus, ledger, printed_variants, verify_entry, verify_equation,
    GenusInput, GenusWarning, Status,
};
use jacobi_mde::ring::basis;
use jacobi_mde::series::{int, rat};
use jacobi_mde::{Error, QZSeries, Rational};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const T: i64 = 24 * 6;

#[test]
fn printed_variants_fail() {
    for p in printed_variants() {
        assert_eq!(verify_entry(p, T).unwrap().status, Status::Fail, "{}", p.id);
    }
}

#[test]
fn corrected_equations_pass() {
    for id in [
        "deq:CY5-E2",
        "deq:theta3",
        "deq:phi101",
        "deq:theta4",
        "deq:KZ-classic",
    ] {
        assert_eq!(verify_equation(id, T).unwrap().status, Status::Pass, "{id}");
    }
}

#[test]
fn corrected_entries_carry_notes() {
    for id in ["deq:CY5-E2", "deq:theta3", "deq:phi101", "deq:theta4"] {
        let e = ledger().iter().find(|e| e.id == id).unwrap();
        assert!(e.note.is_some(), "{id}");
    }
}

#[test]
fn too_short_expansions_are_inconclusive() {
    assert_eq!(
        verify_equation("deq:phi03", 24).unwrap().status,
        Status::Inconclusive
    );
    assert!(matches!(
        discover("phi_0_3", 4, 24).unwrap_err(),
        Error::InsufficientTruncation { .. }
    ));
}

#[test]
fn discovery_on_random_index_two_and_three_forms() {
    let mut rng = StdRng::seed_from_u64(11);
    let t = 24 * 4;
    let (phi02, psi02) = (form("phi_0_2", t).unwrap(), form("psi_0_2", t).unwrap());
    for _ in 0..4 {
        let (x, y) = (rng.gen_range(1..=9), rng.gen_range(-9..=9));
        let phi = QZSeries::add(&phi02, &psi02, &int(x), &int(y)).unwrap();
        let eq = discover_series("mix", &phi, 0, 5).unwrap().equation.unwrap();
        assert!(eq.degree <= 5);
    }
    let t = 24 * 5;
    let phi01 = form("phi_0_1", t).unwrap();
    let phi = QZSeries::add(&phi01.pow(3), &form("phi_0_3", t).unwrap(), &int(2), &int(-5)).unwrap();
    let eq = discover_series("mix", &phi, 0, 7).unwrap().equation.unwrap();
    assert!(eq.degree <= 7);
}

#[test]
fn discovery_rejects_quasi_input() {
    let e2phi = form("e2", T).unwrap().mul(&form("phi_0_1", T).unwrap());
    assert_eq!(
        discover_series("e2phi", &e2phi, 0, 2).unwrap_err(),
        Error::QuasiModular
    );
}

#[test]
fn genus_in_dimensions_three_and_five_is_linear_in_e() {
    let phi032 = form("phi_0_3_half", T).unwrap();
    let phi052 = form("phi_0_5_half", T).unwrap();
    for e in [-6i64, 0, 4, 100] {
        let g = elliptic_genus(&GenusInput::from_euler(3, int(e)), T).unwrap();
        assert_eq!(g.series, phi032.scale(&rat(e, 2)));
        let g = elliptic_genus(&GenusInput::from_euler(5, int(e)), T).unwrap();
        assert_eq!(g.series, phi052.scale(&rat(e, 24)));
    }
    let g = elliptic_genus(&GenusInput::from_euler(5, int(23)), T).unwrap();
    assert_eq!(g.warnings, vec![GenusWarning::NonIntegral]);
}

fn chi_of(phi: &QZSeries, d: i64) -> Vec<Rational> {
    let q0 = phi.q_slice(0).unwrap();
    (0..=d)
        .map(|p| {
            let v = q0.get(&(d - 2 * p)).cloned().unwrap_or_default();
            if p % 2 == 0 {
                v
            } else {
                -v
            }
        })
        .collect()
}

#[test]
fn genus_round_trips_in_dimension_four() {
    let b = basis(0, 4);
    let cols = b.expand(T).unwrap();
    for (x, y) in [(1, 0), (0, 1), (2, -3), (5, 7)] {
        let phi = QZSeries::add(&cols[0], &cols[1], &int(x), &int(y)).unwrap();
        let chi = chi_of(&phi, 4);
        let g = elliptic_genus(&GenusInput::from_chi(4, chi.clone()), T).unwrap();
        assert_eq!(g.series, phi);
        let mut bad = chi;
        bad[0] += int(1);
        assert!(matches!(
            elliptic_genus(&GenusInput::from_chi(4, bad), T).unwrap_err(),
            Error::InconsistentHodgeData(_)
        ));
    }
}

#[test]
fn genus_of_k3_squared() {
    // K3 × K3: the genus is multiplicative, 4φ_{0,1}²
    let k3 = form("phi_0_1", T).unwrap().scale(&int(2));
    let product = k3.mul(&k3);
    let g = elliptic_genus(&GenusInput::from_chi(4, chi_of(&product, 4)), T).unwrap();
    assert_eq!(g.series, product);
    assert!(g.warnings.is_empty());
}

#[test]
fn genus_in_dimension_twelve_is_underdetermined() {
    let phi = form("phi_0_1", T).unwrap().pow(6);
    assert_eq!(
        elliptic_genus(&GenusInput::from_chi(12, chi_of(&phi, 12)), T).unwrap_err(),
        Error::Underdetermined
    );
}

#[test]
fn genus_dimension_range() {
    assert!(matches!(
        elliptic_genus(&GenusInput::from_euler(1, int(0)), T).unwrap_err(),
        Error::UnsupportedGenusInput(_)
    ));
    assert!(matches!(
        elliptic_genus(&GenusInput::from_chi(2, vec![int(2)]), T).unwrap_err(),
        Error::InvalidArgument(_)
    ));
}
