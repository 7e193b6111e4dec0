//! The ledger of known identities and modular differential equations, each
//! assembled from catalog forms and operators and checked by a vanishing
//! certificate.

use rayon::prelude::*;

use crate::catalog::{self, form};
use crate::error::{Error, Result};
use crate::operators::{self, heat, heat_k, q_derivative, serre};
use crate::ring::{Verdict, ZeroCertificate};
use crate::series::{int, rat, QZSeries, Rational};

use super::certify_normalized;

/// One series that must vanish identically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub label: String,
    pub series: QZSeries,
    /// Power of `η` divided out before certification.
    pub eta_normalizer: u32,
}

impl Component {
    fn new(label: impl Into<String>, series: QZSeries, eta_normalizer: u32) -> Self {
        Component {
            label: label.into(),
            series,
            eta_normalizer,
        }
    }
}

type Builder = fn(i64) -> Result<Vec<Component>>;

/// A named identity: every component it builds must be identically zero.
#[derive(Clone, Copy)]
pub struct LedgerEntry {
    pub id: &'static str,
    pub statement: &'static str,
    pub note: Option<&'static str>,
    build: Builder,
}

impl std::fmt::Debug for LedgerEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("LedgerEntry")
            .field("id", &self.id)
            .field("statement", &self.statement)
            .field("note", &self.note)
            .finish()
    }
}

impl LedgerEntry {
    /// The left-hand sides, complete below `trunc24`.
    pub fn components(&self, trunc24: i64) -> Result<Vec<Component>> {
        (self.build)(trunc24)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Inconclusive => "INCONCLUSIVE",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentReport {
    pub label: String,
    pub eta_normalizer: u32,
    /// Bidegree of the combination before normalization.
    pub weight2: i64,
    pub index2: i64,
    /// Certificate of the `η`-normalized combination.
    pub certificate: ZeroCertificate,
}

impl ComponentReport {
    /// Truncation of the unnormalized combination needed for a certificate.
    pub fn required_trunc24(&self) -> Option<i64> {
        self.certificate
            .required_bound24
            .map(|b| b + self.eta_normalizer as i64)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verification {
    pub id: &'static str,
    pub statement: &'static str,
    pub note: Option<&'static str>,
    pub trunc24: i64,
    pub status: Status,
    pub components: Vec<ComponentReport>,
}

/// Verifies one entry: pass iff every component is certified zero.
pub fn verify_entry(entry: &LedgerEntry, trunc24: i64) -> Result<Verification> {
    let mut components = Vec::new();
    for c in entry.components(trunc24)? {
        components.push(ComponentReport {
            certificate: certify_normalized(&c.series, c.eta_normalizer)?,
            weight2: c.series.weight2(),
            index2: c.series.index2(),
            eta_normalizer: c.eta_normalizer,
            label: c.label,
        });
    }
    let verdicts = || components.iter().map(|c| c.certificate.verdict);
    let status = if verdicts().any(|v| v == Verdict::NotZero) {
        Status::Fail
    } else if verdicts().all(|v| v == Verdict::CertifiedZero) {
        Status::Pass
    } else {
        Status::Inconclusive
    };
    Ok(Verification {
        id: entry.id,
        statement: entry.statement,
        note: entry.note,
        trunc24,
        status,
        components,
    })
}

pub fn verify_equation(id: &str, trunc24: i64) -> Result<Verification> {
    verify_entry(lookup_equation(id)?, trunc24)
}

/// Verifies the whole ledger concurrently; results are in ledger order.
pub fn verify_all(trunc24: i64) -> Result<Vec<Verification>> {
    LEDGER.par_iter().map(|e| verify_entry(e, trunc24)).collect()
}

pub fn ledger() -> &'static [LedgerEntry] {
    LEDGER
}

pub fn lookup_equation(id: &str) -> Result<&'static LedgerEntry> {
    LEDGER
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::UnknownEquation(id.to_string()))
}

/// Commonly printed variants of ledger equations whose operator subscripts
/// do not match the weights of their arguments. They are not identities;
/// verification reports them as failing.
pub fn printed_variants() -> &'static [LedgerEntry] {
    PRINTED_VARIANTS
}

// ---------------------------------------------------------------------------
// assembly helpers

/// `Σ cᵢ·sᵢ` over series of one bidegree.
fn lin(terms: &[(Rational, &QZSeries)]) -> Result<QZSeries> {
    let (c0, s0) = &terms[0];
    let mut acc = s0.scale(c0);
    for (c, s) in &terms[1..] {
        acc = QZSeries::add(&acc, s, &int(1), c)?;
    }
    Ok(acc)
}

/// `[φ, H_k φ, H_{k+2}H_k φ, …]` (`r` applications).
fn chain(phi: &QZSeries, k2: i64, r: usize) -> Result<Vec<QZSeries>> {
    Ok(operators::iterate(phi, k2, r)?.iter().cloned().collect())
}

fn e4(t: i64) -> Result<QZSeries> {
    form("e4", t)
}

fn e6(t: i64) -> Result<QZSeries> {
    form("e6", t)
}

fn e2(t: i64) -> Result<QZSeries> {
    form("e2", t)
}

/// `ψ₂ + a·E₄ψ₀` on the chain of `φ` starting at weight `k2/2`.
fn degree2(phi: &QZSeries, k2: i64, a: Rational) -> Result<QZSeries> {
    let t = phi.trunc24();
    let psi = chain(phi, k2, 2)?;
    lin(&[(int(1), &psi[2]), (a, &e4(t)?.mul(&psi[0]))])
}

/// `ψ₃ + a·E₄ψ₁ + b·E₆ψ₀`.
fn degree3(phi: &QZSeries, k2: i64, a: Rational, b: Rational) -> Result<QZSeries> {
    let t = phi.trunc24();
    let psi = chain(phi, k2, 3)?;
    lin(&[
        (int(1), &psi[3]),
        (a, &e4(t)?.mul(&psi[1])),
        (b, &e6(t)?.mul(&psi[0])),
    ])
}

fn one(label: &str, series: QZSeries, eta: u32) -> Result<Vec<Component>> {
    Ok(vec![Component::new(label, series, eta)])
}

// ---------------------------------------------------------------------------
// builders

fn serre_e4(t: i64) -> Result<Vec<Component>> {
    let lhs = lin(&[(int(1), &serre(&e4(t)?, 8)?), (rat(1, 3), &e6(t)?)])?;
    one("D₄(E₄) + ⅓E₆", lhs, 0)
}

fn serre_e6(t: i64) -> Result<Vec<Component>> {
    let lhs = lin(&[(int(1), &serre(&e6(t)?, 12)?), (rat(1, 2), &e4(t)?.pow(2))])?;
    one("D₆(E₆) + ½E₄²", lhs, 0)
}

fn serre_eta(t: i64) -> Result<Vec<Component>> {
    (1..=24u32)
        .map(|k| {
            let eta_k = catalog::eta_power(k, t);
            Ok(Component::new(
                format!("D_{{{k}/2}}(η^{k})"),
                serre(&eta_k, k as i64)?,
                k,
            ))
        })
        .collect()
}

fn serre_delta(t: i64) -> Result<Vec<Component>> {
    one("D₁₂(Δ)", serre(&form("delta", t)?, 24)?, 0)
}

fn ramanujan_e2(t: i64) -> Result<Vec<Component>> {
    let e2 = e2(t)?;
    let rhs = lin(&[(int(1), &e2.pow(2)), (int(-1), &e4(t)?)])?;
    let lhs = lin(&[(int(1), &q_derivative(&e2)?), (rat(-1, 12), &rhs)])?;
    one("D(E₂) − (E₂² − E₄)/12", lhs, 0)
}

fn heat_theta(t: i64) -> Result<Vec<Component>> {
    one("H(ϑ)", heat_k(&form("theta", t)?, 1)?, 3)
}

fn heat_eta_phi_0_3_half(t: i64) -> Result<Vec<Component>> {
    one("H(η·φ_{0,3/2})", heat_k(&form("eta_phi_0_3_half", t)?, 1)?, 1)
}

fn cy3(t: i64) -> Result<Vec<Component>> {
    let phi = form("phi_0_3_half", t)?;
    let lhs = lin(&[(int(1), &heat(&phi)?), (rat(1, 2), &e2(t)?.mul(&phi))])?;
    one("H(φ_{0,3/2}) + ½E₂φ_{0,3/2}", lhs, 0)
}

fn h_phi_m2_1(t: i64) -> Result<Vec<Component>> {
    let lhs = lin(&[
        (int(1), &heat_k(&form("phi_m2_1", t)?, -4)?),
        (rat(1, 2), &form("phi_0_1", t)?),
    ])?;
    one("H₋₂(φ_{-2,1}) + ½φ_{0,1}", lhs, 0)
}

fn h_phi_0_1(t: i64) -> Result<Vec<Component>> {
    let lhs = lin(&[
        (int(1), &heat_k(&form("phi_0_1", t)?, 0)?),
        (rat(5, 2), &e4(t)?.mul(&form("phi_m2_1", t)?)),
    ])?;
    one("H₀(φ_{0,1}) + 5/2·E₄φ_{-2,1}", lhs, 0)
}

fn h2h0_phi_0_1(t: i64) -> Result<Vec<Component>> {
    let psi = chain(&form("phi_0_1", t)?, 0, 2)?;
    let lhs = lin(&[
        (int(1), &psi[2]),
        (int(-10), &e6(t)?.mul(&form("phi_m2_1", t)?)),
        (rat(-5, 4), &e4(t)?.mul(&psi[0])),
    ])?;
    one("H₂H₀(φ_{0,1}) − 10E₆φ_{-2,1} − 5/4·E₄φ_{0,1}", lhs, 0)
}

fn h_phi_0_5_half(t: i64) -> Result<Vec<Component>> {
    let prod = e4(t)?.mul(&form("phi_m2_1", t)?).mul(&form("phi_0_3_half", t)?);
    let lhs = lin(&[
        (int(1), &heat_k(&form("phi_0_5_half", t)?, 0)?),
        (rat(11, 5), &prod),
    ])?;
    one("H₀(φ_{0,5/2}) + 11/5·E₄φ_{-2,1}φ_{0,3/2}", lhs, 0)
}

fn h_phi_m2_1_phi_0_3_half(t: i64) -> Result<Vec<Component>> {
    let half = form("phi_0_3_half", t)?;
    let lhs = lin(&[
        (int(1), &heat_k(&form("phi_m2_1", t)?.mul(&half), -4)?),
        (rat(1, 5), &form("phi_0_1", t)?.mul(&half)),
    ])?;
    one("H₋₂(φ_{-2,1}φ_{0,3/2}) + ⅕φ_{0,1}φ_{0,3/2}", lhs, 0)
}

fn h2h0_phi_0_5_half(t: i64) -> Result<Vec<Component>> {
    let psi = chain(&form("phi_0_5_half", t)?, 0, 2)?;
    let prod = e6(t)?.mul(&form("phi_m2_1", t)?).mul(&form("phi_0_3_half", t)?);
    let lhs = lin(&[
        (int(1), &psi[2]),
        (rat(-44, 5), &prod),
        (rat(-11, 25), &e4(t)?.mul(&psi[0])),
    ])?;
    one(
        "H₂H₀(φ_{0,5/2}) − 44/5·E₆φ_{-2,1}φ_{0,3/2} − 11/25·E₄φ_{0,5/2}",
        lhs,
        0,
    )
}

fn k3(t: i64) -> Result<Vec<Component>> {
    let lhs = degree3(&form("phi_0_1", t)?, 0, rat(-101, 4), int(10))?;
    one("H₄H₂H₀(φ_{0,1}) − 101/4·E₄H₀(φ_{0,1}) + 10E₆φ_{0,1}", lhs, 0)
}

fn cy5(t: i64) -> Result<Vec<Component>> {
    let lhs = degree3(&form("phi_0_5_half", t)?, 0, rat(-611, 25), rat(88, 25))?;
    one(
        "H₄H₂H₀(φ_{0,5/2}) − 611/25·E₄H₀(φ_{0,5/2}) + 88/25·E₆φ_{0,5/2}",
        lhs,
        0,
    )
}

/// `H³φ − 9/2·E₂H²φ + (9/4·E₂² − a·E₄)Hφ + (3/8·E₂³ − a/2·E₂E₄ + b·E₆)φ`
/// with the raw heat operator.
fn expanded_cubic(phi: &QZSeries, a: Rational, b: Rational) -> Result<QZSeries> {
    let t = phi.trunc24();
    let (e2, e4, e6) = (e2(t)?, e4(t)?, e6(t)?);
    let h1 = heat(phi)?;
    let h2 = heat(&h1)?;
    let h3 = heat(&h2)?;
    let c1 = lin(&[(rat(9, 4), &e2.pow(2)), (-a.clone(), &e4)])?;
    let c0 = lin(&[(rat(3, 8), &e2.pow(3)), (-a / int(2), &e2.mul(&e4)), (b, &e6)])?;
    lin(&[
        (int(1), &h3),
        (rat(-9, 2), &e2.mul(&h2)),
        (int(1), &c1.mul(&h1)),
        (int(1), &c0.mul(phi)),
    ])
}

fn k3_expanded(t: i64) -> Result<Vec<Component>> {
    let lhs = expanded_cubic(&form("phi_0_1", t)?, rat(99, 4), int(12))?;
    one(
        "H³φ − 9/2·E₂H²φ + (9/4·E₂² − 99/4·E₄)Hφ + (3/8·E₂³ − 99/8·E₂E₄ + 12E₆)φ, φ = φ_{0,1}",
        lhs,
        0,
    )
}

fn cy5_expanded(t: i64) -> Result<Vec<Component>> {
    let lhs = expanded_cubic(&form("phi_0_5_half", t)?, rat(1197, 50), rat(138, 25))?;
    one(
        "H³φ − 9/2·E₂H²φ + (9/4·E₂² − 1197/50·E₄)Hφ + (3/8·E₂³ − 1197/100·E₂E₄ + 138/25·E₆)φ, φ = φ_{0,5/2}",
        lhs,
        0,
    )
}

fn cy5_expanded_printed(t: i64) -> Result<Vec<Component>> {
    let lhs = expanded_cubic(&form("phi_0_5_half", t)?, rat(1997, 50), rat(138, 25))?;
    one(
        "H³φ − 9/2·E₂H²φ + (9/4·E₂² − 1997/50·E₄)Hφ + (3/8·E₂³ − 1997/100·E₂E₄ + 138/25·E₆)φ, φ = φ_{0,5/2}",
        lhs,
        0,
    )
}

fn phi_12_1(t: i64) -> Result<Vec<Component>> {
    let lhs = degree3(&form("phi_12_1", t)?, 24, rat(-101, 4), int(10))?;
    one(
        "H₁₆H₁₄H₁₂(φ_{12,1}) − 101/4·E₄H₁₂(φ_{12,1}) + 10E₆φ_{12,1}",
        lhs,
        0,
    )
}

fn kaneko_zagier(t: i64) -> Result<Vec<Component>> {
    let e4 = e4(t)?;
    let dd = serre(&serre(&e4, 8)?, 12)?;
    let lhs = lin(&[(int(1), &dd), (rat(-4 * 6, 144), &e4.pow(2))])?;
    one("D₆D₄(E₄) − (4·6/144)·E₄²", lhs, 0)
}

fn kaneko_zagier_classic(t: i64) -> Result<Vec<Component>> {
    // f'' − (k+1)/6·E₂f' + k(k+1)/12·E₂'f with f = E₄, k = 4, ' = q d/dq
    let f = e4(t)?;
    let e2 = e2(t)?;
    let d1 = q_derivative(&f)?;
    let d2 = q_derivative(&d1)?;
    let de2 = q_derivative(&e2)?;
    let lhs = lin(&[
        (int(1), &d2),
        (rat(-5, 6), &e2.mul(&d1)),
        (rat(20, 12), &de2.mul(&f)),
    ])?;
    one("E₄'' − 5/6·E₂E₄' + 20/12·E₂'E₄", lhs, 0)
}

fn e_4_1(t: i64) -> Result<Vec<Component>> {
    let lhs = degree2(&form("e_4_1", t)?, 8, rat(-77, 4))?;
    one("H₆H₄(E_{4,1}) − 77/4·E₄E_{4,1}", lhs, 0)
}

fn phi_m2_1_eq(t: i64) -> Result<Vec<Component>> {
    let lhs = degree2(&form("phi_m2_1", t)?, -4, rat(-5, 4))?;
    one("H₀H₋₂(φ_{-2,1}) − 5/4·E₄φ_{-2,1}", lhs, 0)
}

fn theta_sq(t: i64) -> Result<Vec<Component>> {
    let lhs = degree2(&form("theta_sq", t)?, 2, rat(-5, 4))?;
    one("H₃H₁(ϑ²) − 5/4·E₄ϑ²", lhs, 6)
}

fn phi_10_1(t: i64) -> Result<Vec<Component>> {
    let lhs = degree2(&form("phi_10_1", t)?, 20, rat(-5, 4))?;
    one("H₁₂H₁₀(φ_{10,1}) − 5/4·E₄φ_{10,1}", lhs, 0)
}

fn theta_theta_2z(t: i64) -> Result<Vec<Component>> {
    let lhs = degree2(&form("theta_theta_2z", t)?, 2, rat(-11, 25))?;
    one("H₃H₁(ϑ(z)ϑ(2z)) − 11/25·E₄ϑ(z)ϑ(2z)", lhs, 6)
}

fn theta_cube_steps(t: i64) -> Result<Vec<Component>> {
    let half = form("phi_m1_1_half", t)?;
    let a = half.mul(&form("phi_m2_1", t)?);
    let b = half.mul(&form("phi_0_1", t)?);
    let first = lin(&[(int(1), &heat_k(&a, -6)?), (int(1), &b)])?;
    let second = lin(&[(int(1), &heat_k(&b, -2)?), (int(3), &e4(t)?.mul(&a))])?;
    Ok(vec![
        Component::new("H₋₃(φ_{-1,1/2}φ_{-2,1}) + φ_{-1,1/2}φ_{0,1}", first, 0),
        Component::new("H₋₁(φ_{-1,1/2}φ_{0,1}) + 3E₄φ_{-1,1/2}φ_{-2,1}", second, 0),
    ])
}

fn theta_cube(t: i64) -> Result<Vec<Component>> {
    let lhs = degree2(&form("theta_cube", t)?, 3, int(-3))?;
    one("H_{7/2}H_{3/2}(ϑ³) − 3E₄ϑ³", lhs, 9)
}

fn theta_sq_theta_2z_steps(t: i64) -> Result<Vec<Component>> {
    let two = form("phi_m1_2", t)?;
    let a = two.mul(&form("phi_m2_1", t)?);
    let b = two.mul(&form("phi_0_1", t)?);
    let first = lin(&[(int(1), &heat_k(&a, -6)?), (rat(1, 2), &b)])?;
    let second = lin(&[(int(1), &heat_k(&b, -2)?), (rat(5, 2), &e4(t)?.mul(&a))])?;
    Ok(vec![
        Component::new("H₋₃(φ_{-1,2}φ_{-2,1}) + ½φ_{-1,2}φ_{0,1}", first, 0),
        Component::new("H₋₁(φ_{-1,2}φ_{0,1}) + 5/2·E₄φ_{-1,2}φ_{-2,1}", second, 0),
    ])
}

fn theta_sq_theta_2z(t: i64) -> Result<Vec<Component>> {
    let lhs = degree2(&form("theta_sq_theta_2z", t)?, 3, rat(-5, 4))?;
    one("H_{7/2}H_{3/2}(ϑ(2z)ϑ²) − 5/4·E₄ϑ(2z)ϑ²", lhs, 9)
}

fn phi_m2_1_powers(t: i64) -> Result<Vec<Component>> {
    let phi = form("phi_m2_1", t)?;
    let phi01 = form("phi_0_1", t)?;
    (2..=6u32)
        .map(|n| {
            let lhs = lin(&[
                (int(1), &heat_k(&phi.pow(n), -4 * n as i64)?),
                (rat(2 * n as i64 - 1, 2), &phi.pow(n - 1).mul(&phi01)),
            ])?;
            Ok(Component::new(
                format!(
                    "H_{{-{}}}(φ_{{-2,1}}^{n}) + ({n} − ½)φ_{{-2,1}}^{}φ_{{0,1}}",
                    2 * n,
                    n - 1
                ),
                lhs,
                0,
            ))
        })
        .collect()
}

fn theta_4th_chain(t: i64) -> Result<Vec<Component>> {
    let lhs = degree3(&form("phi_m2_1", t)?.pow(2), -8, rat(-23, 4), rat(81, 4))?;
    one(
        "H₀H₋₂H₋₄(φ_{-2,1}²) − 23/4·E₄H₋₄(φ_{-2,1}²) + 81/4·E₆φ_{-2,1}²",
        lhs,
        0,
    )
}

fn theta_4th(t: i64) -> Result<Vec<Component>> {
    let lhs = degree3(&form("theta_4th", t)?, 4, rat(-23, 4), rat(81, 4))?;
    one("H₆H₄H₂(ϑ⁴) − 23/4·E₄H₂(ϑ⁴) + 81/4·E₆ϑ⁴", lhs, 12)
}

fn phi_0_2(t: i64) -> Result<Vec<Component>> {
    let lhs = degree3(&form("phi_0_2", t)?, 0, rat(-47, 4), rat(13, 4))?;
    one("H₄H₂H₀(φ_{0,2}) − 47/4·E₄H₀(φ_{0,2}) + 13/4·E₆φ_{0,2}", lhs, 0)
}

fn psi_0_2(t: i64) -> Result<Vec<Component>> {
    let lhs = degree3(&form("psi_0_2", t)?, 0, rat(-263, 4), rat(121, 4))?;
    one("H₄H₂H₀(ψ_{0,2}) − 263/4·E₄H₀(ψ_{0,2}) + 121/4·E₆ψ_{0,2}", lhs, 0)
}

fn rho_0_2(t: i64) -> Result<Vec<Component>> {
    let lhs = degree3(&form("rho_0_2", t)?, 0, rat(-335, 4), rat(-275, 4))?;
    one("H₄H₂H₀(ρ_{0,2}) − 335/4·E₄H₀(ρ_{0,2}) − 275/4·E₆ρ_{0,2}", lhs, 0)
}

fn phi_0_3_delta(t: i64) -> Result<Vec<Component>> {
    let cubic = degree3(&form("phi_0_3", t)?, 0, rat(-33, 4), rat(3, 2))?;
    let cusp = form("delta", t)?.mul(&form("phi_m2_1", t)?.pow(3));
    let lhs = lin(&[(int(1), &cubic), (int(-60), &cusp)])?;
    one(
        "H₄H₂H₀(φ_{0,3}) − 33/4·E₄H₀(φ_{0,3}) + 3/2·E₆φ_{0,3} − 60Δφ_{-2,1}³",
        lhs,
        0,
    )
}

fn phi_0_3(t: i64) -> Result<Vec<Component>> {
    let psi = chain(&form("phi_0_3", t)?, 0, 4)?;
    let lhs = lin(&[
        (int(1), &psi[4]),
        (rat(-29, 2), &e4(t)?.mul(&psi[2])),
        (int(22), &e6(t)?.mul(&psi[1])),
        (rat(-119, 16), &form("e8", t)?.mul(&psi[0])),
    ])?;
    one(
        "H₆H₄H₂H₀(φ_{0,3}) − 29/2·E₄H₂H₀(φ_{0,3}) + 22E₆H₀(φ_{0,3}) − 119/16·E₈φ_{0,3}",
        lhs,
        0,
    )
}

fn phi_0_4(t: i64) -> Result<Vec<Component>> {
    let lhs = degree3(&form("phi_0_4", t)?, 0, rat(-107, 16), rat(23, 32))?;
    one("H₄H₂H₀(φ_{0,4}) − 107/16·E₄H₀(φ_{0,4}) + 23/32·E₆φ_{0,4}", lhs, 0)
}

fn ring_relation(t: i64) -> Result<Vec<Component>> {
    let rhs = lin(&[
        (int(1), &form("phi_0_1", t)?.mul(&form("phi_0_3", t)?)),
        (int(-1), &form("phi_0_2", t)?.pow(2)),
    ])?;
    let lhs = lin(&[(int(4), &form("phi_0_4", t)?), (int(-1), &rhs)])?;
    one("4φ_{0,4} − φ_{0,1}φ_{0,3} + φ_{0,2}²", lhs, 0)
}

// printed variants

fn theta_4th_printed(t: i64) -> Result<Vec<Component>> {
    let f = form("theta_4th", t)?;
    let h1 = heat_k(&f, 2)?;
    let top = heat_k(&heat_k(&h1, 8)?, 12)?;
    let lhs = lin(&[
        (int(1), &top),
        (rat(-23, 4), &e4(t)?.mul(&heat_k(&f, 4)?)),
        (rat(81, 4), &e6(t)?.mul(&f)),
    ])?;
    one("H₆H₄H₁(ϑ⁴) − 23/4·E₄H₂(ϑ⁴) + 81/4·E₆ϑ⁴", lhs, 12)
}

fn theta_cube_printed(t: i64) -> Result<Vec<Component>> {
    let f = form("theta_cube", t)?;
    let top = heat_k(&heat_k(&f, 3)?, 5)?;
    let lhs = lin(&[(int(1), &top), (int(-3), &e4(t)?.mul(&f))])?;
    one("H_{5/2}H_{3/2}(ϑ³) − 3E₄ϑ³", lhs, 9)
}

fn phi_10_1_printed(t: i64) -> Result<Vec<Component>> {
    let f = form("phi_10_1", t)?;
    let top = heat_k(&heat_k(&f, 2)?, 6)?;
    let lhs = lin(&[(int(1), &top), (rat(-5, 4), &e4(t)?.mul(&f))])?;
    one("H₃H₁(φ_{10,1}) − 5/4·E₄φ_{10,1}", lhs, 0)
}

macro_rules! entry {
    ($id:expr, $stmt:expr, $build:expr) => {
        LedgerEntry {
            id: $id,
            statement: $stmt,
            note: None,
            build: $build,
        }
    };
    ($id:expr, $stmt:expr, $build:expr, $note:expr) => {
        LedgerEntry {
            id: $id,
            statement: $stmt,
            note: Some($note),
            build: $build,
        }
    };
}

static LEDGER: &[LedgerEntry] = &[
    entry!("id:serre-e4", "D₄(E₄) = −⅓E₆", serre_e4),
    entry!("id:serre-e6", "D₆(E₆) = −½E₄²", serre_e6),
    entry!("id:serre-eta", "D_{k/2}(ηᵏ) = 0 for k = 1, …, 24", serre_eta),
    entry!("id:serre-delta", "D₁₂(Δ) = 0", serre_delta),
    entry!("id:ramanujan-e2", "D(E₂) = (E₂² − E₄)/12", ramanujan_e2),
    entry!("id:heat-theta", "H(ϑ) = 0", heat_theta),
    entry!("id:heat-eta-phi032", "H(η·φ_{0,3/2}) = 0", heat_eta_phi_0_3_half),
    entry!("deq:CY3", "H(φ_{0,3/2}) + ½E₂·φ_{0,3/2} = 0", cy3),
    entry!("id:h-phi-m2-1", "H₋₂(φ_{-2,1}) = −½φ_{0,1}", h_phi_m2_1),
    entry!("id:h-phi01", "H₀(φ_{0,1}) = −5/2·E₄φ_{-2,1}", h_phi_0_1),
    entry!(
        "id:h2h0-phi01",
        "H₂H₀(φ_{0,1}) = 10E₆φ_{-2,1} + 5/4·E₄φ_{0,1}",
        h2h0_phi_0_1
    ),
    entry!(
        "id:h-phi052",
        "H₀(φ_{0,5/2}) = −11/5·E₄φ_{-2,1}φ_{0,3/2}",
        h_phi_0_5_half
    ),
    entry!(
        "id:h-phi-m2-1-phi032",
        "H₋₂(φ_{-2,1}φ_{0,3/2}) = −⅕φ_{0,1}φ_{0,3/2}",
        h_phi_m2_1_phi_0_3_half
    ),
    entry!(
        "id:h2h0-phi052",
        "H₂H₀(φ_{0,5/2}) = 44/5·E₆φ_{-2,1}φ_{0,3/2} + 11/25·E₄φ_{0,5/2}",
        h2h0_phi_0_5_half
    ),
    entry!(
        "deq:K3",
        "H₄H₂H₀(φ_{0,1}) − 101/4·E₄H₀(φ_{0,1}) + 10E₆φ_{0,1} = 0",
        k3
    ),
    entry!(
        "deq:K3-E2",
        "H³(φ_{0,1}) − 9/2·E₂H²(φ_{0,1}) + (9/4·E₂² − 99/4·E₄)H(φ_{0,1}) + (3/8·E₂³ − 99/8·E₂E₄ + 12E₆)φ_{0,1} = 0",
        k3_expanded
    ),
    entry!(
        "deq:CY5",
        "H₄H₂H₀(φ_{0,5/2}) − 611/25·E₄H₀(φ_{0,5/2}) + 88/25·E₆φ_{0,5/2} = 0",
        cy5
    ),
    entry!(
        "deq:CY5-E2",
        "H³(φ_{0,5/2}) − 9/2·E₂H²(φ_{0,5/2}) + (9/4·E₂² − 1197/50·E₄)H(φ_{0,5/2}) + (3/8·E₂³ − 1197/100·E₂E₄ + 138/25·E₆)φ_{0,5/2} = 0",
        cy5_expanded,
        "E₂-coefficients follow from expanding H₄H₂H₀ − a·E₄H₀ + b·E₆ with a = 611/25: (½ − a)E₄ and (¼ − a/2)E₂E₄; the digits 1997 sometimes printed do not satisfy the equation"
    ),
    entry!(
        "deq:phi121",
        "H₁₆H₁₄H₁₂(φ_{12,1}) − 101/4·E₄H₁₂(φ_{12,1}) + 10E₆φ_{12,1} = 0",
        phi_12_1
    ),
    entry!(
        "deq:KZ",
        "D_{k+2}D_k(f) − k(k+2)/144·E₄f = 0 with f = E₄, k = 4",
        kaneko_zagier
    ),
    entry!(
        "deq:KZ-classic",
        "f'' − (k+1)/6·E₂f' + k(k+1)/12·E₂'f = 0 with f = E₄, k = 4, ' = q d/dq",
        kaneko_zagier_classic
    ),
    entry!("deq:E41", "H₆H₄(E_{4,1}) − 77/4·E₄E_{4,1} = 0", e_4_1),
    entry!(
        "deq:phi-m2-1",
        "H₀H₋₂(φ_{-2,1}) − 5/4·E₄φ_{-2,1} = 0",
        phi_m2_1_eq
    ),
    entry!("deq:theta2", "H₃H₁(ϑ²) − 5/4·E₄ϑ² = 0", theta_sq),
    entry!(
        "deq:phi101",
        "H₁₂H₁₀(φ_{10,1}) − 5/4·E₄φ_{10,1} = 0",
        phi_10_1,
        "operator subscripts follow the weight of φ_{10,1} = η¹⁸ϑ²; the weights-1,3 form H₃H₁ applies to ϑ²"
    ),
    entry!(
        "deq:theta-theta2z",
        "H₃H₁(ϑ(τ,z)ϑ(τ,2z)) − 11/25·E₄·ϑ(τ,z)ϑ(τ,2z) = 0",
        theta_theta_2z
    ),
    entry!(
        "id:theta3-steps",
        "H₋₃(φ_{-1,1/2}φ_{-2,1}) = −φ_{-1,1/2}φ_{0,1}, H₋₁(φ_{-1,1/2}φ_{0,1}) = −3E₄φ_{-1,1/2}φ_{-2,1}",
        theta_cube_steps
    ),
    entry!(
        "deq:theta3",
        "H_{7/2}H_{3/2}(ϑ³) − 3E₄ϑ³ = 0",
        theta_cube,
        "the second operator acts on weight 7/2; the subscript 5/2 sometimes printed does not match"
    ),
    entry!(
        "id:theta2-theta2z-steps",
        "H₋₃(φ_{-1,2}φ_{-2,1}) = −½φ_{-1,2}φ_{0,1}, H₋₁(φ_{-1,2}φ_{0,1}) = −5/2·E₄φ_{-1,2}φ_{-2,1}",
        theta_sq_theta_2z_steps
    ),
    entry!(
        "deq:theta2-theta2z",
        "H_{7/2}H_{3/2}(ϑ(τ,2z)ϑ²(τ,z)) − 5/4·E₄·ϑ(τ,2z)ϑ²(τ,z) = 0",
        theta_sq_theta_2z
    ),
    entry!(
        "id:h-phi-m2-1-power",
        "H₋₂ₙ(φ_{-2,1}ⁿ) = (−n + ½)φ_{-2,1}ⁿ⁻¹φ_{0,1} for n = 2, …, 6",
        phi_m2_1_powers
    ),
    entry!(
        "id:theta4-chain",
        "H₀H₋₂H₋₄(φ_{-2,1}²) = 23/4·E₄H₋₄(φ_{-2,1}²) − 81/4·E₆φ_{-2,1}²",
        theta_4th_chain
    ),
    entry!(
        "deq:theta4",
        "H₆H₄H₂(ϑ⁴) − 23/4·E₄H₂(ϑ⁴) + 81/4·E₆ϑ⁴ = 0",
        theta_4th,
        "chain on weights 2, 4, 6 obtained from the φ_{-2,1}² chain by η¹² pull-through; the variant H₆H₄H₁ fails"
    ),
    entry!(
        "deq:phi02",
        "H₄H₂H₀(φ_{0,2}) − 47/4·E₄H₀(φ_{0,2}) + 13/4·E₆φ_{0,2} = 0",
        phi_0_2
    ),
    entry!(
        "deq:psi02",
        "H₄H₂H₀(ψ_{0,2}) − 263/4·E₄H₀(ψ_{0,2}) + 121/4·E₆ψ_{0,2} = 0",
        psi_0_2
    ),
    entry!(
        "deq:rho02",
        "H₄H₂H₀(ρ_{0,2}) − 335/4·E₄H₀(ρ_{0,2}) − 275/4·E₆ρ_{0,2} = 0",
        rho_0_2
    ),
    entry!(
        "id:phi03-delta",
        "H₄H₂H₀(φ_{0,3}) − 33/4·E₄H₀(φ_{0,3}) + 3/2·E₆φ_{0,3} = 60Δφ_{-2,1}³",
        phi_0_3_delta
    ),
    entry!(
        "deq:phi03",
        "H₆H₄H₂H₀(φ_{0,3}) − 29/2·E₄H₂H₀(φ_{0,3}) + 22E₆H₀(φ_{0,3}) − 119/16·E₈φ_{0,3} = 0",
        phi_0_3
    ),
    entry!(
        "deq:phi04",
        "H₄H₂H₀(φ_{0,4}) − 107/16·E₄H₀(φ_{0,4}) + 23/32·E₆φ_{0,4} = 0",
        phi_0_4
    ),
    entry!(
        "id:ring-relation",
        "4φ_{0,4} = φ_{0,1}φ_{0,3} − φ_{0,2}²",
        ring_relation
    ),
];

static PRINTED_VARIANTS: &[LedgerEntry] = &[
    entry!(
        "printed:CY5-E2",
        "H³(φ_{0,5/2}) − 9/2·E₂H²(φ_{0,5/2}) + (9/4·E₂² − 1997/50·E₄)H(φ_{0,5/2}) + (3/8·E₂³ − 1997/100·E₂E₄ + 138/25·E₆)φ_{0,5/2} = 0",
        cy5_expanded_printed,
        "1997 in place of 1197 = 50·(611/25 − ½)"
    ),
    entry!(
        "printed:theta4",
        "H₆H₄H₁(ϑ⁴) − 23/4·E₄H₂(ϑ⁴) + 81/4·E₆ϑ⁴ = 0",
        theta_4th_printed,
        "innermost subscript 1 does not match the weight 2 of ϑ⁴"
    ),
    entry!(
        "printed:theta3",
        "H_{5/2}H_{3/2}(ϑ³) − 3E₄ϑ³ = 0",
        theta_cube_printed,
        "outer subscript 5/2 does not match the weight 7/2 of H_{3/2}(ϑ³)"
    ),
    entry!(
        "printed:phi101",
        "H₃H₁(φ_{10,1}) − 5/4·E₄φ_{10,1} = 0",
        phi_10_1_printed,
        "subscripts 1, 3 belong to ϑ², not to the weight-10 form φ_{10,1}"
    ),
];
