//! Modular differential equations: the verified equation ledger, discovery of
//! minimal-degree equations by `q⁰`-cancellation, and elliptic genera.
//!
//! Theta-type forms carry an `η`-power character. Before certification such a
//! combination is divided by `ηⁿ` (its *eta normalizer*), which turns it into
//! a weak Jacobi form of trivial character without changing whether it is
//! zero; the structural vanishing bound is applied to the quotient.

mod discover;
mod genus;
mod ledger;

pub use discover::{
    discover, discover_series, eisenstein_monomials, DegreeOutcome, DegreeReport, Discovery, MDEquation,
    ModularCoefficient,
};
pub use genus::{elliptic_genus, GenusInput, GenusResult, GenusWarning};
pub use ledger::{
    ledger, lookup_equation, printed_variants, verify_all, verify_entry, verify_equation, Component,
    ComponentReport, LedgerEntry, Status, Verification,
};

use crate::catalog;
use crate::error::Result;
use crate::ring::{certify_zero, ZeroCertificate};
use crate::series::QZSeries;

/// `φ / ηⁿ`, complete as far as `φ` allows.
pub fn eta_normalize(phi: &QZSeries, eta_power: u32) -> Result<QZSeries> {
    if eta_power == 0 {
        return Ok(phi.clone());
    }
    let eta = catalog::eta_power(eta_power, phi.trunc24() + 24);
    phi.div_exact(&eta)
}

/// Certificate for `φ / ηⁿ`.
pub fn certify_normalized(phi: &QZSeries, eta_power: u32) -> Result<ZeroCertificate> {
    Ok(certify_zero(&eta_normalize(phi, eta_power)?))
}
