//! Structure-theorem bases of weak Jacobi forms, exact coordinates and
//! vanishing certificates.
//!
//! Even weight and integral index: monomials `E₄^a E₆^b φ_{-2,1}^c φ_{0,1}^d`
//! with `4a + 6b − 2c = k`, `c + d = m`. The other parities reduce to this
//! case by a single prefactor:
//!
//! * odd weight, integral index: `φ_{-1,2} · J_{k+1, m−2}`
//! * odd weight, half-integral index: `φ_{-1,1/2} · J_{k+1, m−1/2}`
//! * even weight, half-integral index: `φ_{0,3/2} · J_{k, m−3/2}`

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;

use crate::catalog;
use crate::error::{Error, Result};
use crate::linalg::{self, LinearSolution};
use crate::series::{QZSeries, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Prefactor {
    None,
    /// `φ_{-1,2}` (weight −1, index 2)
    PhiM1Two,
    /// `φ_{-1,1/2}` (weight −1, index 1/2)
    PhiM1Half,
    /// `φ_{0,3/2}` (weight 0, index 3/2)
    Phi0ThreeHalves,
}

impl Prefactor {
    pub fn form_name(self) -> Option<&'static str> {
        match self {
            Prefactor::None => None,
            Prefactor::PhiM1Two => Some("phi_m1_2"),
            Prefactor::PhiM1Half => Some("phi_m1_1_half"),
            Prefactor::Phi0ThreeHalves => Some("phi_0_3_half"),
        }
    }

    /// `(weight2, index2)` contributed by the prefactor.
    pub fn bidegree(self) -> (i64, i64) {
        match self {
            Prefactor::None => (0, 0),
            Prefactor::PhiM1Two => (-2, 4),
            Prefactor::PhiM1Half => (-2, 1),
            Prefactor::Phi0ThreeHalves => (0, 3),
        }
    }
}

/// `E₄^e4 · E₆^e6 · φ_{-2,1}^phi_m2_1 · φ_{0,1}^phi_0_1 · prefactor`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub e4: u32,
    pub e6: u32,
    pub phi_m2_1: u32,
    pub phi_0_1: u32,
    pub prefactor: Prefactor,
}

impl Monomial {
    pub fn bidegree(&self) -> (i64, i64) {
        let (pw, pi) = self.prefactor.bidegree();
        (
            8 * self.e4 as i64 + 12 * self.e6 as i64 - 4 * self.phi_m2_1 as i64 + pw,
            2 * (self.phi_m2_1 + self.phi_0_1) as i64 + pi,
        )
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (name, e) in [
            ("E4", self.e4),
            ("E6", self.e6),
            ("phi_m2_1", self.phi_m2_1),
            ("phi_0_1", self.phi_0_1),
        ] {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        if let Some(p) = self.prefactor.form_name() {
            parts.push(p.to_string());
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiBasis {
    weight2: i64,
    index2: i64,
    monomials: Vec<Monomial>,
}

impl JacobiBasis {
    pub fn weight2(&self) -> i64 {
        self.weight2
    }

    pub fn index2(&self) -> i64 {
        self.index2
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn dimension(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    /// Expansions of every monomial, complete below `trunc24`.
    pub fn expand(&self, trunc24: i64) -> Result<Vec<QZSeries>> {
        let mut gens = Generators::new(trunc24)?;
        self.monomials.iter().map(|m| gens.monomial(m)).collect()
    }
}

/// Generator expansions with memoised powers.
struct Generators {
    trunc24: i64,
    bases: [QZSeries; 4],
    powers: BTreeMap<(usize, u32), QZSeries>,
    prefactors: BTreeMap<Prefactor, QZSeries>,
}

impl Generators {
    fn new(trunc24: i64) -> Result<Self> {
        let t = trunc24.max(24);
        Ok(Generators {
            trunc24,
            bases: [
                catalog::form("e4", t)?,
                catalog::form("e6", t)?,
                catalog::form("phi_m2_1", t)?,
                catalog::form("phi_0_1", t)?,
            ],
            powers: BTreeMap::new(),
            prefactors: BTreeMap::new(),
        })
    }

    fn power(&mut self, g: usize, e: u32) -> QZSeries {
        if let Some(p) = self.powers.get(&(g, e)) {
            return p.clone();
        }
        let p = match e {
            0 => QZSeries::one(self.bases[g].trunc24()),
            1 => self.bases[g].clone(),
            _ => self.power(g, e - 1).mul(&self.bases[g]),
        };
        self.powers.insert((g, e), p.clone());
        p
    }

    fn monomial(&mut self, m: &Monomial) -> Result<QZSeries> {
        let mut s = self.power(0, m.e4);
        for (g, e) in [(1, m.e6), (2, m.phi_m2_1), (3, m.phi_0_1)] {
            if e > 0 {
                s = s.mul(&self.power(g, e));
            }
        }
        if let Some(name) = m.prefactor.form_name() {
            let t = self.bases[0].trunc24();
            let prefactor = match self.prefactors.entry(m.prefactor) {
                std::collections::btree_map::Entry::Occupied(e) => e.into_mut(),
                std::collections::btree_map::Entry::Vacant(e) => e.insert(catalog::form(name, t)?),
            };
            s = s.mul(prefactor);
        }
        Ok(s.truncate(self.trunc24))
    }
}

fn even_integral(k: i64, m: i64, prefactor: Prefactor) -> Vec<Monomial> {
    let mut out = Vec::new();
    if m < 0 {
        return out;
    }
    for c in 0..=m {
        let w = k + 2 * c;
        if w < 0 || w % 2 != 0 {
            continue;
        }
        for a in 0..=w / 4 {
            let rest = w - 4 * a;
            if rest % 6 == 0 {
                out.push(Monomial {
                    e4: a as u32,
                    e6: (rest / 6) as u32,
                    phi_m2_1: c as u32,
                    phi_0_1: (m - c) as u32,
                    prefactor,
                });
            }
        }
    }
    out.sort();
    out
}

/// Structure-theorem basis of `J_{weight2/2, index2/2}`.
///
/// Half-integral weights (odd `weight2`) have no trivial-character forms here
/// and give the empty basis.
pub fn basis(weight2: i64, index2: i64) -> JacobiBasis {
    let monomials = if index2 < 0 || weight2 % 2 != 0 {
        Vec::new()
    } else {
        let k = weight2 / 2;
        let odd_weight = k % 2 != 0;
        let half_index = index2 % 2 != 0;
        match (odd_weight, half_index) {
            (false, false) => even_integral(k, index2 / 2, Prefactor::None),
            (true, false) => even_integral(k + 1, index2 / 2 - 2, Prefactor::PhiM1Two),
            (true, true) => even_integral(k + 1, (index2 - 1) / 2, Prefactor::PhiM1Half),
            (false, true) => even_integral(k, (index2 - 3) / 2, Prefactor::Phi0ThreeHalves),
        }
    };
    JacobiBasis {
        weight2,
        index2,
        monomials,
    }
}

/// Least `t ≥ 0` with `J_{k−12t, m}` empty: a weak Jacobi form of this
/// bidegree vanishing to `q`-order `t` is zero.
pub fn vanishing_bound(weight2: i64, index2: i64) -> i64 {
    (0..)
        .find(|&t| basis(weight2 - 24 * t, index2).is_empty())
        .expect("weights below -2m are empty")
}

/// Slice-wise vanishing bound for quasi-modular series: the least `t` such
/// that the `q`-expansions of `E₂^j · J_{k−2j,m}` (all `j`) are linearly
/// independent on the slices `n24 < 24t`. Returns `None` if `trunc24` is too
/// small to reach full rank.
pub fn quasi_vanishing_bound(weight2: i64, index2: i64, trunc24: i64) -> Result<Option<i64>> {
    let mut columns = Vec::new();
    let e2 = catalog::form("e2", trunc24.max(24))?;
    let mut e2_power = QZSeries::one(trunc24.max(24));
    let mut j = 0;
    while weight2 - 4 * j >= -2 * index2 - 4 {
        for s in basis(weight2 - 4 * j, index2).expand(trunc24)? {
            columns.push(e2_power.mul(&s).truncate(trunc24));
        }
        e2_power = e2_power.mul(&e2);
        j += 1;
    }
    if columns.is_empty() {
        return Ok(Some(0));
    }
    let mut t = 0;
    while 24 * t <= trunc24 {
        let (a, _) = coefficient_matrix(&columns, None, 24 * t);
        if linalg::rank(&a, columns.len()) == columns.len() {
            return Ok(Some(t));
        }
        t += 1;
    }
    Ok(None)
}

/// Rows indexed by every `(n24, l2)` below `bound24` that appears in any
/// column (or the optional right-hand side).
pub(crate) fn coefficient_matrix(
    columns: &[QZSeries],
    rhs: Option<&QZSeries>,
    bound24: i64,
) -> (Vec<Vec<Rational>>, Vec<Rational>) {
    let mut keys = BTreeSet::new();
    for s in columns.iter().chain(rhs) {
        for (n, l, _) in s.terms() {
            if n >= bound24 {
                break;
            }
            keys.insert((n, l));
        }
    }
    let a = keys
        .iter()
        .map(|&(n, l)| columns.iter().map(|c| c.coeff(n, l)).collect())
        .collect();
    let b = keys
        .iter()
        .map(|&(n, l)| rhs.map_or_else(Rational::zero, |r| r.coeff(n, l)))
        .collect();
    (a, b)
}

/// Coordinates of `φ` in `basis(φ.weight2, φ.index2)`, verified by re-expansion.
pub fn coordinates(phi: &QZSeries) -> Result<Vec<Rational>> {
    if phi.is_quasi() {
        return Err(Error::QuasiModular);
    }
    let b = basis(phi.weight2(), phi.index2());
    let trunc24 = phi.trunc24();
    if b.is_empty() {
        return if phi.is_zero() {
            Ok(Vec::new())
        } else {
            Err(Error::NotInSpan)
        };
    }
    let t0 = vanishing_bound(phi.weight2(), phi.index2());
    let columns = b.expand(trunc24)?;
    let (a, rhs) = coefficient_matrix(&columns, Some(phi), (24 * (t0 + 1)).min(trunc24));
    let x = match linalg::solve(&a, &rhs, columns.len()) {
        LinearSolution::Inconsistent { .. } => return Err(Error::NotInSpan),
        LinearSolution::Solved { nullspace, .. } if !nullspace.is_empty() => {
            return Err(Error::Underdetermined)
        }
        LinearSolution::Solved { particular, .. } => particular,
    };
    let mut rebuilt = QZSeries::zero(phi.weight2(), phi.index2(), trunc24);
    for (c, s) in x.iter().zip(&columns) {
        rebuilt = rebuilt.sum(&s.scale(c))?;
    }
    if rebuilt != phi.clone().with_quasi(false).truncate(rebuilt.trunc24()) {
        return Err(Error::NotInSpan);
    }
    Ok(x)
}

/// Combination `Σ cᵢ·bᵢ` of the basis of the given bidegree.
pub fn from_coordinates(b: &JacobiBasis, coords: &[Rational], trunc24: i64) -> Result<QZSeries> {
    if coords.len() != b.dimension() {
        return Err(Error::InvalidArgument(format!(
            "expected {} coordinates, got {}",
            b.dimension(),
            coords.len()
        )));
    }
    let mut out = QZSeries::zero(b.weight2(), b.index2(), trunc24);
    for (c, s) in coords.iter().zip(b.expand(trunc24)?) {
        out = out.sum(&s.scale(c))?;
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    CertifiedZero,
    NotZero,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::CertifiedZero => "certified_zero",
            Verdict::NotZero => "not_zero",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

/// Which structural argument backs a certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Criterion {
    /// `J_{k−12t,m}` empty after `t` divisions by `Δ`.
    DeltaDivision,
    /// Linear independence of `E₂^j·J_{k−2j,m}` on the first `t` slices.
    QuasiRank,
    /// Half-integral weight: no structural bound available.
    Unsupported,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroCertificate {
    pub weight2: i64,
    pub index2: i64,
    /// First `n24` with a nonzero coefficient, or the truncation if none.
    pub vanish_order24: i64,
    pub required_bound24: Option<i64>,
    pub verdict: Verdict,
    pub criterion: Criterion,
}

/// Decides whether `phi` is identically zero from its computed slices.
///
/// `phi` must be a (quasi-)Jacobi form of its stated bidegree. Every
/// computed slice is checked, not only those below the bound.
pub fn certify_zero(phi: &QZSeries) -> ZeroCertificate {
    let (weight2, index2) = phi.bidegree();
    let vanish_order24 = phi.ord24().unwrap_or(phi.trunc24());
    let (criterion, required_bound24) = if weight2 % 2 != 0 {
        (Criterion::Unsupported, None)
    } else if phi.is_quasi() {
        let t = quasi_vanishing_bound(weight2, index2, phi.trunc24())
            .ok()
            .flatten();
        (Criterion::QuasiRank, t.map(|t| 24 * t))
    } else {
        (
            Criterion::DeltaDivision,
            Some(24 * vanishing_bound(weight2, index2)),
        )
    };
    let verdict = if !phi.is_zero() {
        Verdict::NotZero
    } else {
        match required_bound24 {
            Some(b) if phi.trunc24() >= b => Verdict::CertifiedZero,
            _ => Verdict::Inconclusive,
        }
    };
    ZeroCertificate {
        weight2,
        index2,
        vanish_order24,
        required_bound24,
        verdict,
        criterion,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::form;
    use crate::series::{int, rat};

    fn names(b: &JacobiBasis) -> Vec<String> {
        b.monomials().iter().map(|m| m.to_string()).collect()
    }

    #[test]
    fn basis_weight0_index2() {
        let b = basis(0, 4);
        assert_eq!(b.dimension(), 2);
        assert_eq!(names(&b), ["phi_0_1^2", "E4*phi_m2_1^2"]);
    }

    #[test]
    fn basis_is_lexicographic_in_exponents() {
        let b = basis(4, 6);
        let mut sorted = b.monomials().to_vec();
        sorted.sort();
        assert_eq!(sorted, b.monomials());
    }

    #[test]
    fn empty_and_prefactor_bases() {
        assert!(basis(-12, 2).is_empty());
        let b = basis(4, 5);
        assert_eq!(names(&b), ["E4*phi_m2_1*phi_0_3_half"]);
        assert_eq!(names(&basis(2, 3)), ["E4*phi_m2_1*phi_m1_1_half"]);
        assert!(basis(2, 2).is_empty());
        assert!(basis(4, 3).is_empty());
        assert_eq!(names(&basis(8, 0)), ["E4"]);
    }

    #[test]
    fn monomial_bidegrees_match_basis() {
        for w in -12..=16 {
            for i in 0..=8 {
                for m in basis(w, i).monomials() {
                    assert_eq!(m.bidegree(), (w, i));
                }
            }
        }
    }

    #[test]
    fn vanishing_bounds() {
        assert_eq!(vanishing_bound(12, 2), 1);
        assert_eq!(vanishing_bound(20, 4), 2);
        assert_eq!(vanishing_bound(0, 0), 1);
        assert_eq!(vanishing_bound(4, 0), 0);
    }

    #[test]
    fn coordinates_of_phi_0_2() {
        let phi = form("phi_0_2", 24 * 4).unwrap();
        // basis order: phi_0_1^2, E4*phi_m2_1^2
        assert_eq!(coordinates(&phi).unwrap(), vec![rat(1, 24), rat(-1, 24)]);
    }

    #[test]
    fn coordinates_of_e4() {
        let e4 = form("e4", 48).unwrap();
        assert_eq!(coordinates(&e4).unwrap(), vec![int(1)]);
    }

    #[test]
    fn coordinates_reject_quasi_and_foreign_series() {
        assert_eq!(coordinates(&form("e2", 48).unwrap()), Err(Error::QuasiModular));
        // q^0 slice only: ζ + ζ^{-1} is not a weight-0 index-1 form
        let bogus = QZSeries::from_terms(0, 2, 48, [(0, 2, int(1)), (0, -2, int(1))]).unwrap();
        assert_eq!(coordinates(&bogus), Err(Error::NotInSpan));
    }

    #[test]
    fn coordinates_underdetermined_at_low_truncation() {
        // two E4/E6 monomials of weight 12 need the q^1 slice
        let e12 = form("e4", 24).unwrap().pow(3);
        assert_eq!(coordinates(&e12), Err(Error::Underdetermined));
    }

    #[test]
    fn certificate_verdicts() {
        let t = 24 * 4;
        let z = QZSeries::zero(12, 2, t);
        assert_eq!(certify_zero(&z).verdict, Verdict::CertifiedZero);
        let nz = form("e4", t).unwrap().mul(&form("phi_m2_1", t).unwrap());
        let c = certify_zero(&nz);
        assert_eq!(c.verdict, Verdict::NotZero);
        assert_eq!(c.vanish_order24, 0);
        // bound for (10, 2) is q^2; truncation below that is inconclusive
        let short = QZSeries::zero(20, 4, 24);
        assert_eq!(certify_zero(&short).verdict, Verdict::Inconclusive);
        let half = QZSeries::zero(3, 3, t);
        assert_eq!(certify_zero(&half).criterion, Criterion::Unsupported);
        assert_eq!(certify_zero(&half).verdict, Verdict::Inconclusive);
    }
}
