//! Minimal-degree modular differential equations by `q⁰`-cancellation.
//!
//! For `ψ_j = H_{k+2j−2}⋯H_k(φ)` the ansatz of degree `r` is
//! `ψ_r + Σ_{i=2}^{r} g_{2i} ψ_{r−i}` with `g_{2i} ∈ M_{2i}` written in the
//! monomials `E₄^a E₆^b`. The combination is a weak Jacobi form of weight
//! `k + 2r`, so it vanishes identically as soon as its first
//! `vanishing_bound` slices do; those slices give an exact linear system for
//! the coordinates of the `g_{2i}`.

use crate::catalog::{self, form};
use crate::error::{Error, Result};
use crate::linalg::{self, LinearSolution};
use crate::operators::iterate;
use crate::ring::{coefficient_matrix, vanishing_bound, Verdict, ZeroCertificate};
use crate::series::{int, QZSeries, Rational};

use super::certify_normalized;

/// `g_{2i}`, the coefficient of `ψ_{r−i}`, over the monomials of `M_{2i}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModularCoefficient {
    /// Twice the weight, `4i`.
    pub weight2: i64,
    /// Index `r − i` of the iterate it multiplies.
    pub chain_index: usize,
    /// Exponents `(a, b)` of `E₄^a E₆^b`.
    pub monomials: Vec<(u32, u32)>,
    pub coords: Vec<Rational>,
}

impl ModularCoefficient {
    /// Nonzero `(coefficient, (a, b))` pairs.
    pub fn terms(&self) -> impl Iterator<Item = (&Rational, (u32, u32))> + '_ {
        self.coords
            .iter()
            .zip(self.monomials.iter().copied())
            .filter(|(c, _)| !num_traits::Zero::is_zero(*c))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DegreeOutcome {
    /// The cancellation system has no solution.
    Infeasible {
        rank: usize,
        augmented_rank: usize,
    },
    /// A solution of the slice system that is not zero beyond the bound; only
    /// possible if the input is not a Jacobi form of its stated bidegree.
    Uncertified {
        verdict: Verdict,
    },
    Found,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeReport {
    pub degree: usize,
    pub unknowns: usize,
    /// Number of `(n, l)` coefficients forced to vanish.
    pub equations: usize,
    /// Slices `n24 < bound24` (of the unnormalized combination) were imposed.
    pub bound24: i64,
    pub outcome: DegreeOutcome,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MDEquation {
    pub base_form: String,
    pub weight2: i64,
    pub index2: i64,
    pub eta_normalizer: u32,
    pub degree: usize,
    /// `g₄, g₆, …, g_{2r}` in that order.
    pub coeffs: Vec<ModularCoefficient>,
    /// Directions along which the coefficients may be moved without breaking
    /// the equation, as vectors over the concatenated monomial coordinates.
    /// Empty when the monic equation of this degree is unique.
    pub nullspace: Vec<Vec<Rational>>,
    pub certificate: ZeroCertificate,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discovery {
    pub base_form: String,
    pub reports: Vec<DegreeReport>,
    /// The equation of least degree, if one exists up to the requested degree.
    pub equation: Option<MDEquation>,
}

/// Monomials `E₄^a E₆^b` of weight `weight2/2`, `E₄`-heavy first.
pub fn eisenstein_monomials(weight2: i64) -> Vec<(u32, u32)> {
    if weight2 < 0 || weight2 % 4 != 0 {
        return Vec::new();
    }
    let w = weight2 / 2;
    (0..=w / 4)
        .rev()
        .filter(|a| (w - 4 * a) % 6 == 0)
        .map(|a| (a as u32, ((w - 4 * a) / 6) as u32))
        .collect()
}

fn eisenstein_monomial(a: u32, b: u32, trunc24: i64) -> Result<QZSeries> {
    Ok(form("e4", trunc24)?.pow(a).mul(&form("e6", trunc24)?.pow(b)))
}

/// Discovers the least-degree equation of a catalog form, trying degrees
/// `1..=max_degree`.
pub fn discover(name: &str, max_degree: usize, trunc24: i64) -> Result<Discovery> {
    let entry = catalog::lookup(name)?;
    if entry.index2 <= 0 {
        return Err(Error::ZeroIndex);
    }
    let phi = form(name, trunc24)?;
    discover_series(name, &phi, entry.eta_power, max_degree)
}

/// As [`discover`] for an arbitrary form `φ` such that `φ/η^eta_power` is a
/// weak Jacobi form with trivial character.
pub fn discover_series(label: &str, phi: &QZSeries, eta_power: u32, max_degree: usize) -> Result<Discovery> {
    if phi.is_quasi() {
        return Err(Error::QuasiModular);
    }
    let (weight2, index2) = phi.bidegree();
    if (weight2 - eta_power as i64) % 2 != 0 {
        return Err(Error::InvalidArgument(format!(
            "{label}: weight stays half-integral after dividing by η^{eta_power}"
        )));
    }
    let trunc24 = phi.trunc24();
    let mut chain = iterate(phi, weight2, 0)?;
    let mut reports = Vec::new();
    for r in 1..=max_degree {
        chain.extend(1)?;
        let norm_weight2 = weight2 + 4 * r as i64 - eta_power as i64;
        let bound24 = eta_power as i64 + 24 * vanishing_bound(norm_weight2, index2);
        if trunc24 < bound24 {
            return Err(Error::InsufficientTruncation {
                need: bound24,
                got: trunc24,
            });
        }

        let mut layout = Vec::new();
        let mut columns = Vec::new();
        for i in 2..=r {
            let monomials = eisenstein_monomials(4 * i as i64);
            for &(a, b) in &monomials {
                columns.push(eisenstein_monomial(a, b, trunc24)?.mul(chain.get(r - i)));
            }
            layout.push((i, monomials));
        }
        let rhs = chain.get(r).scale(&int(-1));
        let (matrix, b) = coefficient_matrix(&columns, Some(&rhs), bound24);
        let mut report = DegreeReport {
            degree: r,
            unknowns: columns.len(),
            equations: matrix.len(),
            bound24,
            outcome: DegreeOutcome::Found,
        };
        let (particular, nullspace) = match linalg::solve(&matrix, &b, columns.len()) {
            LinearSolution::Inconsistent { rank, augmented_rank } => {
                report.outcome = DegreeOutcome::Infeasible { rank, augmented_rank };
                reports.push(report);
                continue;
            }
            LinearSolution::Solved {
                particular,
                nullspace,
            } => (particular, nullspace),
        };

        let mut lhs = chain.get(r).clone();
        for (x, col) in particular.iter().zip(&columns) {
            lhs = QZSeries::add(&lhs, col, &int(1), x)?;
        }
        let certificate = certify_normalized(&lhs, eta_power)?;
        match certificate.verdict {
            Verdict::CertifiedZero => {}
            Verdict::Inconclusive => {
                return Err(Error::InsufficientTruncation {
                    need: certificate.required_bound24.unwrap_or(bound24) + eta_power as i64,
                    got: trunc24,
                })
            }
            verdict @ Verdict::NotZero => {
                report.outcome = DegreeOutcome::Uncertified { verdict };
                reports.push(report);
                continue;
            }
        }
        reports.push(report);

        let mut offset = 0;
        let coeffs = layout
            .into_iter()
            .map(|(i, monomials)| {
                let n = monomials.len();
                let coords = particular[offset..offset + n].to_vec();
                offset += n;
                ModularCoefficient {
                    weight2: 4 * i as i64,
                    chain_index: r - i,
                    monomials,
                    coords,
                }
            })
            .collect();
        return Ok(Discovery {
            base_form: label.to_string(),
            reports,
            equation: Some(MDEquation {
                base_form: label.to_string(),
                weight2,
                index2,
                eta_normalizer: eta_power,
                degree: r,
                coeffs,
                nullspace,
                certificate,
            }),
        });
    }
    Ok(Discovery {
        base_form: label.to_string(),
        reports,
        equation: None,
    })
}
