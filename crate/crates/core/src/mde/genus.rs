//! Elliptic genera of Calabi–Yau `d`-folds as elements of `J_{0,d/2}`,
//! determined by their `q⁰`-slice: the coefficient of `ζ^{d/2−p}` there is
//! `(−1)^p χ_p` with `χ_p = Σ_q (−1)^q h^{p,q}`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{self, LinearSolution};
use crate::ring::{basis, JacobiBasis};
use crate::series::{QZSeries, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenusInput {
    pub dim: u32,
    pub euler: Option<Rational>,
    /// `(χ₀, …, χ_d)`.
    pub chi: Option<Vec<Rational>>,
}

impl GenusInput {
    pub fn from_euler(dim: u32, euler: Rational) -> Self {
        GenusInput {
            dim,
            euler: Some(euler),
            chi: None,
        }
    }

    pub fn from_chi(dim: u32, chi: Vec<Rational>) -> Self {
        GenusInput {
            dim,
            euler: None,
            chi: Some(chi),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenusWarning {
    /// Some Fourier coefficient is not an integer, so the data cannot come
    /// from a compact complex manifold.
    NonIntegral,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenusResult {
    pub series: QZSeries,
    pub basis: JacobiBasis,
    pub coordinates: Vec<Rational>,
    pub warnings: Vec<GenusWarning>,
}

/// Slice key `l2` of `ζ^{d/2−p}`.
fn l2_of(dim: u32, p: usize) -> i64 {
    dim as i64 - 2 * p as i64
}

/// The element of `J_{0,d/2}` with the given `χ_y` data, complete below
/// `trunc24`.
pub fn elliptic_genus(input: &GenusInput, trunc24: i64) -> Result<GenusResult> {
    let d = input.dim;
    if !(2..=12).contains(&d) {
        return Err(Error::UnsupportedGenusInput(format!(
            "dimension {d} outside 2..=12"
        )));
    }
    let b = basis(0, d as i64);
    let columns = b.expand(trunc24.max(1))?;
    let q0: Vec<_> = columns.iter().map(|s| s.q_slice(0)).collect::<Result<_>>()?;

    let coordinates =
        match (&input.chi, &input.euler) {
            (Some(chi), euler) => {
                if chi.len() != d as usize + 1 {
                    return Err(Error::InvalidArgument(format!(
                        "expected {} values χ_0..χ_{d}, got {}",
                        d + 1,
                        chi.len()
                    )));
                }
                if let Some(e) = euler {
                    let alternating: Rational = chi
                        .iter()
                        .enumerate()
                        .map(|(p, c)| if p % 2 == 0 { c.clone() } else { -c })
                        .sum();
                    if &alternating != e {
                        return Err(Error::InconsistentHodgeData(format!(
                            "Σ(−1)^p χ_p = {alternating} differs from the Euler number {e}"
                        )));
                    }
                }
                let rows: Vec<Vec<Rational>> = (0..=d as usize)
                    .map(|p| {
                        q0.iter()
                            .map(|s| s.get(&l2_of(d, p)).cloned().unwrap_or_default())
                            .collect()
                    })
                    .collect();
                let rhs: Vec<Rational> = chi
                    .iter()
                    .enumerate()
                    .map(|(p, c)| if p % 2 == 0 { c.clone() } else { -c })
                    .collect();
                match linalg::solve(&rows, &rhs, columns.len()) {
                    LinearSolution::Inconsistent { .. } => return Err(Error::InconsistentHodgeData(
                        "the χ_y data is not the q⁰-slice of any weak Jacobi form of weight 0 and index d/2"
                            .into(),
                    )),
                    LinearSolution::Solved { nullspace, .. } if !nullspace.is_empty() => {
                        return Err(Error::Underdetermined)
                    }
                    LinearSolution::Solved { particular, .. } => particular,
                }
            }
            (None, Some(e)) => {
                if b.dimension() != 1 {
                    return Err(Error::UnsupportedGenusInput(format!(
                        "the Euler number determines the genus only in dimensions 2, 3 and 5, not {d}"
                    )));
                }
                // at z = 0 the elliptic genus is the Euler number
                let at_zero: Rational = q0[0].values().sum();
                vec![e / at_zero]
            }
            (None, None) => {
                return Err(Error::UnsupportedGenusInput(
                    "give the Euler number or χ_0..χ_d".into(),
                ))
            }
        };

    let mut series = QZSeries::zero(0, d as i64, trunc24.max(1));
    for (c, s) in coordinates.iter().zip(&columns) {
        if !c.is_zero() {
            series = series.sum(&s.scale(c))?;
        }
    }
    let mut warnings = Vec::new();
    if !series.is_integral() {
        warnings.push(GenusWarning::NonIntegral);
    }
    Ok(GenusResult {
        series,
        basis: b,
        coordinates,
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::form;
    use crate::series::{int, rat};

    const T: i64 = 24 * 4;

    #[test]
    fn k3_genus_is_twice_phi_0_1() {
        let g = elliptic_genus(&GenusInput::from_euler(2, int(24)), T).unwrap();
        assert_eq!(g.series, form("phi_0_1", T).unwrap().scale(&int(2)));
        assert!(g.warnings.is_empty());
    }

    #[test]
    fn cy5_with_euler_23_is_not_integral() {
        let g = elliptic_genus(&GenusInput::from_euler(5, int(23)), T).unwrap();
        assert_eq!(g.warnings, vec![GenusWarning::NonIntegral]);
        assert_eq!(g.coordinates, vec![rat(23, 24)]);
    }

    #[test]
    fn euler_only_needs_a_one_dimensional_space() {
        let err = elliptic_genus(&GenusInput::from_euler(4, int(24)), T).unwrap_err();
        assert!(matches!(err, Error::UnsupportedGenusInput(_)));
    }

    #[test]
    fn euler_and_chi_must_agree() {
        let input = GenusInput {
            dim: 2,
            euler: Some(int(23)),
            chi: Some(vec![int(2), int(-20), int(2)]),
        };
        assert!(matches!(
            elliptic_genus(&input, T).unwrap_err(),
            Error::InconsistentHodgeData(_)
        ));
    }
}
