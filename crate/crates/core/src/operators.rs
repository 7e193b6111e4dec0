//! Differential operators on expansions: `D = q d/dq`, the Serre derivative,
//! the heat operator and its modular correction `H_k`.

use crate::catalog::eisenstein_series;
use crate::error::{Error, Result};
use crate::series::{rat, QZSeries};

/// `E₂` complete to the truncation needed for multiplying `f`.
fn e2_for(f: &QZSeries) -> QZSeries {
    let shift = f.ord24().map_or(0, |o| o.min(0));
    eisenstein_series(2, (f.trunc24() - shift).max(24))
}

/// `D = q d/dq`. Result is marked quasi-modular.
pub fn q_derivative(f: &QZSeries) -> Result<QZSeries> {
    if f.index2() != 0 {
        return Err(Error::NonzeroIndex(f.index2()));
    }
    Ok(f.map_terms(|n24, _, c| c * rat(n24, 24))
        .with_bidegree(f.weight2() + 4, 0)
        .with_quasi(true))
}

/// Serre derivative `D_k(f) = D(f) − (k/12)·E₂·f` with `k = k2/2`.
pub fn serre(f: &QZSeries, k2: i64) -> Result<QZSeries> {
    let d = q_derivative(f)?;
    let e2f = e2_for(f).mul(f);
    let out = QZSeries::add(&d, &e2f, &rat(1, 1), &rat(-k2, 24))?;
    Ok(out.with_quasi(f.is_quasi() || k2 != f.weight2()))
}

/// Heat multiplier `(3/m)(4nm − l²)` in doubled/24ths units:
/// `(n24·index2 − 3·l2²) / (2·index2)`.
pub fn heat_multiplier(n24: i64, l2: i64, index2: i64) -> crate::series::Rational {
    rat(n24 * index2 - 3 * l2 * l2, 2 * index2)
}

/// Heat operator `H = 12 q d/dq − (3/m)(ζ d/dζ)²`. Result is marked quasi-modular.
pub fn heat(f: &QZSeries) -> Result<QZSeries> {
    let index2 = f.index2();
    if index2 <= 0 {
        return Err(Error::ZeroIndex);
    }
    Ok(f.map_terms(|n24, l2, c| c * heat_multiplier(n24, l2, index2))
        .with_bidegree(f.weight2() + 4, index2)
        .with_quasi(true))
}

/// Modular heat operator `H_k(φ) = H(φ) − ((2k−1)/2)·E₂·φ` with `k = k2/2`.
pub fn heat_k(f: &QZSeries, k2: i64) -> Result<QZSeries> {
    let h = heat(f)?;
    let e2f = e2_for(f).mul(f);
    let out = QZSeries::add(&h, &e2f, &rat(1, 1), &rat(-(k2 - 1), 2))?;
    Ok(out.with_quasi(f.is_quasi() || k2 != f.weight2()))
}

/// The iterates `[φ, H_k φ, H_{k+2}H_k φ, …]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorChain {
    base_weight2: i64,
    base_index2: i64,
    produced: Vec<QZSeries>,
}

impl OperatorChain {
    pub fn base_weight2(&self) -> i64 {
        self.base_weight2
    }

    pub fn base_index2(&self) -> i64 {
        self.base_index2
    }

    /// Number of operator applications `r`.
    pub fn length(&self) -> usize {
        self.produced.len() - 1
    }

    /// `ψ_j`, the `j`-th iterate.
    pub fn get(&self, j: usize) -> &QZSeries {
        &self.produced[j]
    }

    pub fn iter(&self) -> impl Iterator<Item = &QZSeries> {
        self.produced.iter()
    }

    /// Twice the weight subscript of the operator producing `ψ_{j+1}` from `ψ_j`.
    pub fn step_weight2(&self, j: usize) -> i64 {
        self.base_weight2 + 4 * j as i64
    }

    /// Extends the chain by `extra` more applications.
    pub fn extend(&mut self, extra: usize) -> Result<()> {
        for _ in 0..extra {
            let j = self.length();
            let next = heat_k(&self.produced[j], self.step_weight2(j))?;
            self.produced.push(next);
        }
        Ok(())
    }
}

/// Builds `r` iterates of the modular heat operator starting at weight `k2/2`.
pub fn iterate(f: &QZSeries, k2: i64, r: usize) -> Result<OperatorChain> {
    if f.index2() <= 0 {
        return Err(Error::ZeroIndex);
    }
    let mut chain = OperatorChain {
        base_weight2: k2,
        base_index2: f.index2(),
        produced: vec![f.clone()],
    };
    chain.extend(r)?;
    Ok(chain)
}
