//! Named modular and Jacobi forms, expanded to a requested truncation.
//!
//! Every recipe computes its inputs with padding and truncates the result,
//! so `form(name, t)` is always complete below `t`.

use num_bigint::BigInt;
use num_traits::{One, Pow};

use crate::error::{Error, Result};
use crate::operators;
use crate::series::{int, rat, QZSeries, Rational};

/// Behaviour under `z → -z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub weight2: i64,
    pub index2: i64,
    pub parity: Parity,
    /// All Fourier coefficients are expected to be integers.
    pub integral: bool,
    /// Power of `η` dividing the form into a weak Jacobi form with trivial
    /// character (0 for forms that already are one).
    pub eta_power: u32,
    pub quasi: bool,
    pub formula: &'static str,
}

const fn entry(
    name: &'static str,
    weight2: i64,
    index2: i64,
    parity: Parity,
    integral: bool,
    eta_power: u32,
    formula: &'static str,
) -> CatalogEntry {
    CatalogEntry {
        name,
        weight2,
        index2,
        parity,
        integral,
        eta_power,
        quasi: false,
        formula,
    }
}

use Parity::{Even, Odd};

static ENTRIES: &[CatalogEntry] = &[
    entry("eta", 1, 0, Even, true, 1, "η = q^{1/24} ∏(1 − qⁿ)"),
    entry("delta", 24, 0, Even, true, 0, "Δ = η²⁴"),
    CatalogEntry {
        quasi: true,
        ..entry("e2", 4, 0, Even, true, 0, "E₂ = 1 − 24 ∑ σ₁(n) qⁿ")
    },
    entry("e4", 8, 0, Even, true, 0, "E₄ = 1 + 240 ∑ σ₃(n) qⁿ"),
    entry("e6", 12, 0, Even, true, 0, "E₆ = 1 − 504 ∑ σ₅(n) qⁿ"),
    entry("e8", 16, 0, Even, true, 0, "E₈ = E₄²"),
    entry("e10", 20, 0, Even, true, 0, "E₁₀ = E₄E₆"),
    entry("e14", 28, 0, Even, true, 0, "E₁₄ = E₄²E₆"),
    entry(
        "theta",
        1,
        1,
        Odd,
        true,
        3,
        "ϑ(τ,z) = q^{1/8} ζ^{1/2} ∑ (−1)ⁿ q^{n(n+1)/2} ζⁿ",
    ),
    entry("theta_2z", 1, 4, Odd, true, 3, "ϑ(τ,2z)"),
    entry("theta_3z", 1, 9, Odd, true, 3, "ϑ(τ,3z)"),
    entry("phi_m2_1", -4, 2, Even, true, 0, "φ_{-2,1} = ϑ²/η⁶"),
    entry("phi_0_1", 0, 2, Even, true, 0, "φ_{0,1} = −2·H_{-2}(φ_{-2,1})"),
    entry("phi_m1_1_half", -2, 1, Odd, true, 0, "φ_{-1,1/2} = ϑ/η³"),
    entry("phi_m1_2", -2, 4, Odd, true, 0, "φ_{-1,2} = ϑ(τ,2z)/η³"),
    entry("phi_0_3_half", 0, 3, Even, true, 0, "φ_{0,3/2} = ϑ(τ,2z)/ϑ(τ,z)"),
    entry(
        "phi_0_2",
        0,
        4,
        Even,
        true,
        0,
        "φ_{0,2} = (φ_{0,1}² − E₄φ_{-2,1}²)/24",
    ),
    entry("phi_0_3", 0, 6, Even, true, 0, "φ_{0,3} = φ_{0,3/2}²"),
    entry("phi_0_4", 0, 8, Even, true, 0, "φ_{0,4} = ϑ(τ,3z)/ϑ(τ,z)"),
    entry(
        "phi_0_5_half",
        0,
        5,
        Even,
        true,
        0,
        "φ_{0,5/2} = φ_{0,1}·φ_{0,3/2}",
    ),
    entry("psi_0_2", 0, 4, Even, true, 0, "ψ_{0,2} = φ_{0,1}² − 20φ_{0,2}"),
    entry("rho_0_2", 0, 4, Even, true, 0, "ρ_{0,2} = 2ψ_{0,2} − 11φ_{0,2}"),
    entry(
        "e_4_1",
        8,
        2,
        Even,
        true,
        0,
        "E_{4,1} = (E₄φ_{0,1} − E₆φ_{-2,1})/12",
    ),
    entry("phi_10_1", 20, 2, Even, true, 0, "φ_{10,1} = η¹⁸ϑ²"),
    entry("phi_12_1", 24, 2, Even, true, 0, "φ_{12,1} = Δ·φ_{0,1}"),
    entry("theta_sq", 2, 2, Even, true, 6, "ϑ²"),
    entry("theta_cube", 3, 3, Odd, true, 9, "ϑ³"),
    entry("theta_4th", 4, 4, Even, true, 12, "ϑ⁴"),
    entry("theta_theta_2z", 2, 5, Even, true, 6, "ϑ(τ,z)·ϑ(τ,2z)"),
    entry("theta_sq_theta_2z", 3, 6, Odd, true, 9, "ϑ(τ,z)²·ϑ(τ,2z)"),
    entry("eta_phi_0_3_half", 1, 3, Even, true, 1, "η·φ_{0,3/2}"),
];

/// Every named form, in a fixed order.
pub fn entries() -> &'static [CatalogEntry] {
    ENTRIES
}

pub fn lookup(name: &str) -> Result<&'static CatalogEntry> {
    ENTRIES
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownForm(name.to_string()))
}

// Inputs are computed this far past the requested truncation; covers every
// q-shift in the recipes below (the largest is the η⁶ division, 6/24).
const PAD24: i64 = 24;

/// Expands the named form, complete below `trunc24`.
pub fn form(name: &str, trunc24: i64) -> Result<QZSeries> {
    let entry = lookup(name)?;
    if trunc24 < 1 {
        return Err(Error::InsufficientTruncation {
            need: 1,
            got: trunc24,
        });
    }
    let t = trunc24 + PAD24;
    let s = match name {
        "eta" => eta_power(1, t),
        "delta" => eta_power(24, t),
        "e2" => eisenstein_series(2, t),
        "e4" => eisenstein_series(4, t),
        "e6" => eisenstein_series(6, t),
        "e8" => eisenstein_series(4, t).pow(2),
        "e10" => eisenstein_series(4, t).mul(&eisenstein_series(6, t)),
        "e14" => eisenstein_series(4, t).pow(2).mul(&eisenstein_series(6, t)),
        "theta" => theta_series(1, t),
        "theta_2z" => theta_series(2, t),
        "theta_3z" => theta_series(3, t),
        "phi_m2_1" => phi_m2_1(t)?,
        "phi_0_1" => phi_0_1(t)?,
        "phi_m1_1_half" => theta_series(1, t).div_exact(&eta_power(3, t))?,
        "phi_m1_2" => theta_series(2, t).div_exact(&eta_power(3, t))?,
        "phi_0_3_half" => theta_ratio(2, t),
        "phi_0_2" => phi_0_2(t)?,
        "phi_0_3" => theta_ratio(2, t).pow(2),
        "phi_0_4" => theta_ratio(3, t),
        "phi_0_5_half" => phi_0_1(t)?.mul(&theta_ratio(2, t)),
        "psi_0_2" => psi_0_2(t)?,
        "rho_0_2" => {
            let phi02 = phi_0_2(t)?;
            QZSeries::add(&psi_0_2(t)?, &phi02, &int(2), &int(-11))?
        }
        "e_4_1" => {
            let a = eisenstein_series(4, t).mul(&phi_0_1(t)?);
            let b = eisenstein_series(6, t).mul(&phi_m2_1(t)?);
            QZSeries::add(&a, &b, &rat(1, 12), &rat(-1, 12))?
        }
        "phi_10_1" => eta_power(18, t).mul(&theta_series(1, t).pow(2)),
        "phi_12_1" => eta_power(24, t).mul(&phi_0_1(t)?),
        "theta_sq" => theta_series(1, t).pow(2),
        "theta_cube" => theta_series(1, t).pow(3),
        "theta_4th" => theta_series(1, t).pow(4),
        "theta_theta_2z" => theta_series(1, t).mul(&theta_series(2, t)),
        "theta_sq_theta_2z" => theta_series(1, t).pow(2).mul(&theta_series(2, t)),
        "eta_phi_0_3_half" => eta_power(1, t).mul(&theta_ratio(2, t)),
        _ => unreachable!("catalog entry without recipe: {name}"),
    };
    debug_assert_eq!(s.bidegree(), (entry.weight2, entry.index2), "{name}");
    if s.trunc24() < trunc24 {
        return Err(Error::InsufficientTruncation {
            need: trunc24,
            got: s.trunc24(),
        });
    }
    Ok(s.truncate(trunc24).with_quasi(entry.quasi))
}

/// Dedekind eta, `q^{1/24}∏(1−qⁿ)`.
pub fn eta(trunc24: i64) -> Result<QZSeries> {
    if trunc24 < 1 {
        return Err(Error::InsufficientTruncation {
            need: 1,
            got: trunc24,
        });
    }
    Ok(eta_power(1, trunc24))
}

/// Eisenstein series `E₂`, `E₄`, `E₆` from divisor sums; `E₂` is flagged quasi.
pub fn eisenstein(k: u32, trunc24: i64) -> Result<QZSeries> {
    if !matches!(k, 2 | 4 | 6) {
        return Err(Error::UnsupportedEisenstein(k));
    }
    if trunc24 < 24 {
        return Err(Error::InsufficientTruncation {
            need: 24,
            got: trunc24,
        });
    }
    Ok(eisenstein_series(k, trunc24))
}

/// `ϑ(τ, a·z)` from its sum formula, `a ∈ {1, 2, 3}`.
pub fn theta(dilation: u32, trunc24: i64) -> Result<QZSeries> {
    if !(1..=3).contains(&dilation) {
        return Err(Error::UnsupportedDilation(dilation));
    }
    if trunc24 < 3 {
        return Err(Error::InsufficientTruncation {
            need: 3,
            got: trunc24,
        });
    }
    Ok(theta_series(dilation as i64, trunc24))
}

/// `q^{k/24} ∏_{n≥1} (1 − qⁿ)^k`, complete below `trunc24`.
pub fn eta_power(k: u32, trunc24: i64) -> QZSeries {
    let k2 = k as i64;
    if k2 >= trunc24 {
        return QZSeries::zero(k2, 0, trunc24);
    }
    let mut s = QZSeries::monomial(k2, 0, Rational::one(), k2, 0, trunc24).expect("below trunc");
    let minus_one = int(-1);
    let mut n = 1;
    while k2 + 24 * n < trunc24 {
        for _ in 0..k {
            s = s.mul_binomial(24 * n, 0, &minus_one);
        }
        n += 1;
    }
    s
}

pub(crate) fn eisenstein_series(k: u32, trunc24: i64) -> QZSeries {
    let (factor, power) = match k {
        2 => (-24, 1u32),
        4 => (240, 3),
        6 => (-504, 5),
        _ => unreachable!(),
    };
    let mut terms = Vec::new();
    if trunc24 > 0 {
        terms.push((0, 0, Rational::one()));
    }
    let mut n = 1i64;
    while 24 * n < trunc24 {
        let sigma: BigInt = (1..=n)
            .filter(|d| n % d == 0)
            .map(|d| Pow::pow(BigInt::from(d), power))
            .sum();
        terms.push((24 * n, 0, Rational::from_integer(sigma * factor)));
        n += 1;
    }
    QZSeries::from_terms(2 * k as i64, 0, trunc24, terms)
        .expect("terms below truncation")
        .with_quasi(k == 2)
}

pub(crate) fn theta_series(a: i64, trunc24: i64) -> QZSeries {
    let mut terms = Vec::new();
    let mut n = 0i64;
    // exponent 3 + 12n(n+1) is shared by n and -1-n
    while 3 + 12 * n * (n + 1) < trunc24 {
        let n24 = 3 + 12 * n * (n + 1);
        for m in [n, -1 - n] {
            let sign = if m.rem_euclid(2) == 0 { 1 } else { -1 };
            terms.push((n24, a * (2 * m + 1), int(sign)));
        }
        n += 1;
    }
    QZSeries::from_terms(1, a * a, trunc24, terms).expect("terms below truncation")
}

/// `ϑ(τ,az)/ϑ(τ,z)` via the triple product: the leading quotient
/// `(ζ^{a/2}−ζ^{-a/2})/(ζ^{1/2}−ζ^{-1/2})` times
/// `∏ (1−qⁿζ^a)(1−qⁿζ^{-a}) / ((1−qⁿζ)(1−qⁿζ^{-1}))`,
/// the denominators expanded as truncated geometric series.
pub(crate) fn theta_ratio(a: i64, trunc24: i64) -> QZSeries {
    let lead = (0..a).map(|j| (0, (a - 1) - 2 * j, Rational::one()));
    let mut s = QZSeries::from_terms(0, a * a - 1, trunc24, lead).expect("trunc24 > 0");
    let minus_one = int(-1);
    let mut n = 1;
    while 24 * n < trunc24 {
        for sign in [1, -1] {
            s = s.mul_binomial(24 * n, sign * 2 * a, &minus_one);
            s = s.div_binomial(24 * n, sign * 2, &minus_one);
        }
        n += 1;
    }
    s
}

fn phi_m2_1(t: i64) -> Result<QZSeries> {
    theta_series(1, t + PAD24)
        .pow(2)
        .div_exact(&eta_power(6, t + PAD24))
        .map(|s| s.truncate(t))
}

fn phi_0_1(t: i64) -> Result<QZSeries> {
    Ok(operators::heat_k(&phi_m2_1(t)?, -4)?
        .scale(&int(-2))
        .with_quasi(false))
}

fn phi_0_2(t: i64) -> Result<QZSeries> {
    let phi01 = phi_0_1(t)?;
    let phim2 = phi_m2_1(t)?;
    let e4 = eisenstein_series(4, t);
    QZSeries::add(&phi01.pow(2), &e4.mul(&phim2.pow(2)), &rat(1, 24), &rat(-1, 24))
}

fn psi_0_2(t: i64) -> Result<QZSeries> {
    QZSeries::add(&phi_0_1(t)?.pow(2), &phi_0_2(t)?, &int(1), &int(-20))
}
