//! JSON documents written by `--json`. Field order is fixed by the struct
//! definitions and every map is ordered, so output is byte-stable.

use jacobi_mde::mde::{ComponentReport, DegreeOutcome, Discovery, GenusResult, GenusWarning, Verification};
use jacobi_mde::ring::{Criterion, JacobiBasis, Monomial, ZeroCertificate};
use jacobi_mde::{Error, QZSeries, Rational};
use serde::{Deserialize, Serialize};

use crate::render;

/// `p/q` with `q > 0` in lowest terms; integers keep the `/1`.
pub fn rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_rational(s: &str) -> Result<Rational, String> {
    s.trim()
        .parse::<Rational>()
        .map_err(|e| format!("`{s}` is not a fraction p/q: {e}"))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub n24: i64,
    pub l2: i64,
    pub c: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Series {
    pub weight2: i64,
    pub index2: i64,
    pub trunc24: i64,
    /// Present (and `true`) only for quasi-modular series.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub quasi: bool,
    pub terms: Vec<Term>,
}

impl From<&QZSeries> for Series {
    fn from(s: &QZSeries) -> Self {
        Series {
            weight2: s.weight2(),
            index2: s.index2(),
            trunc24: s.trunc24(),
            quasi: s.is_quasi(),
            terms: s
                .terms()
                .map(|(n24, l2, c)| Term {
                    n24,
                    l2,
                    c: rational(c),
                })
                .collect(),
        }
    }
}

impl Series {
    pub fn to_series(&self) -> Result<QZSeries, String> {
        let terms = self
            .terms
            .iter()
            .map(|t| Ok((t.n24, t.l2, parse_rational(&t.c)?)))
            .collect::<Result<Vec<_>, String>>()?;
        QZSeries::from_terms(self.weight2, self.index2, self.trunc24, terms)
            .map(|s| s.with_quasi(self.quasi))
            .map_err(|e| e.to_string())
    }
}

/// Parses a series document written by `expand --json`.
pub fn series_from_str(text: &str) -> Result<QZSeries, String> {
    serde_json::from_str::<Series>(text)
        .map_err(|e| e.to_string())?
        .to_series()
}

pub fn to_string<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON documents always serialize");
    s.push('\n');
    s
}

#[derive(Serialize)]
pub struct ErrorBody {
    pub kind: &'static str,
    pub message: String,
}

#[derive(Serialize)]
pub struct ErrorDoc {
    pub error: ErrorBody,
}

pub fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::BeyondTruncation { .. } => "beyond_truncation",
        Error::BidegreeMismatch { .. } => "bidegree_mismatch",
        Error::ZeroDivisor => "zero_divisor",
        Error::NonMonomialDivisor => "non_monomial_divisor",
        Error::NonzeroIndex(_) => "nonzero_index",
        Error::ZeroIndex => "zero_index",
        Error::UnknownForm(_) => "unknown_form",
        Error::UnknownEquation(_) => "unknown_equation",
        Error::UnsupportedEisenstein(_) => "unsupported_eisenstein",
        Error::UnsupportedDilation(_) => "unsupported_dilation",
        Error::InsufficientTruncation { .. } => "insufficient_truncation",
        Error::QuasiModular => "quasi_modular",
        Error::NotInSpan => "not_in_span",
        Error::Underdetermined => "underdetermined",
        Error::InconsistentHodgeData(_) => "inconsistent_hodge_data",
        Error::UnsupportedGenusInput(_) => "unsupported_genus_input",
        Error::InvalidArgument(_) => "invalid_argument",
    }
}

#[derive(Serialize)]
pub struct Certificate {
    pub verdict: &'static str,
    pub criterion: &'static str,
    /// Bidegree the certificate applies to (after η-normalization).
    pub weight2: i64,
    pub index2: i64,
    pub vanish_order24: i64,
    pub required_bound24: Option<i64>,
}

pub fn criterion_name(c: Criterion) -> &'static str {
    match c {
        Criterion::DeltaDivision => "delta_division",
        Criterion::QuasiRank => "quasi_rank",
        Criterion::Unsupported => "unsupported",
    }
}

impl From<&ZeroCertificate> for Certificate {
    fn from(c: &ZeroCertificate) -> Self {
        Certificate {
            verdict: c.verdict.as_str(),
            criterion: criterion_name(c.criterion),
            weight2: c.weight2,
            index2: c.index2,
            vanish_order24: c.vanish_order24,
            required_bound24: c.required_bound24,
        }
    }
}

#[derive(Serialize)]
pub struct Component {
    pub label: String,
    pub weight2: i64,
    pub index2: i64,
    pub eta_normalizer: u32,
    pub certificate: Certificate,
}

impl From<&ComponentReport> for Component {
    fn from(c: &ComponentReport) -> Self {
        Component {
            label: c.label.clone(),
            weight2: c.weight2,
            index2: c.index2,
            eta_normalizer: c.eta_normalizer,
            certificate: (&c.certificate).into(),
        }
    }
}

#[derive(Serialize)]
pub struct Entry {
    pub id: &'static str,
    pub statement: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<&'static str>,
    pub status: &'static str,
    pub components: Vec<Component>,
}

impl From<&Verification> for Entry {
    fn from(v: &Verification) -> Self {
        Entry {
            id: v.id,
            statement: v.statement,
            note: v.note,
            status: v.status.as_str(),
            components: v.components.iter().map(Into::into).collect(),
        }
    }
}

#[derive(Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub inconclusive: usize,
}

#[derive(Serialize)]
pub struct VerifyDoc {
    pub q_order: u32,
    pub trunc24: i64,
    pub entries: Vec<Entry>,
    pub summary: Summary,
}

#[derive(Serialize)]
pub struct CoefficientTerm {
    pub e4: u32,
    pub e6: u32,
    pub c: String,
}

#[derive(Serialize)]
pub struct Coefficient {
    /// Twice the weight of `g`.
    pub weight2: i64,
    /// `j` such that `g` multiplies `ψ_j`.
    pub multiplies: usize,
    pub display: String,
    pub terms: Vec<CoefficientTerm>,
}

#[derive(Serialize)]
pub struct Equation {
    pub degree: usize,
    pub operator_weights2: Vec<i64>,
    pub display: String,
    pub coefficients: Vec<Coefficient>,
    pub nullspace: Vec<Vec<String>>,
    pub certificate: Certificate,
}

#[derive(Serialize)]
pub struct Degree {
    pub degree: usize,
    pub unknowns: usize,
    pub equations: usize,
    pub bound24: i64,
    pub outcome: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub augmented_rank: Option<usize>,
}

#[derive(Serialize)]
pub struct DiscoverDoc {
    pub form: String,
    pub weight2: i64,
    pub index2: i64,
    pub eta_normalizer: u32,
    pub trunc24: i64,
    pub degrees: Vec<Degree>,
    pub equation: Option<Equation>,
}

impl DiscoverDoc {
    pub fn new(d: &Discovery, weight2: i64, index2: i64, eta: u32, trunc24: i64) -> Self {
        DiscoverDoc {
            form: d.base_form.clone(),
            weight2,
            index2,
            eta_normalizer: eta,
            trunc24,
            degrees: d
                .reports
                .iter()
                .map(|r| {
                    let (outcome, rank, augmented_rank) = match &r.outcome {
                        DegreeOutcome::Infeasible { rank, augmented_rank } => {
                            ("infeasible", Some(*rank), Some(*augmented_rank))
                        }
                        DegreeOutcome::Uncertified { .. } => ("uncertified", None, None),
                        DegreeOutcome::Found => ("found", None, None),
                    };
                    Degree {
                        degree: r.degree,
                        unknowns: r.unknowns,
                        equations: r.equations,
                        bound24: r.bound24,
                        outcome,
                        rank,
                        augmented_rank,
                    }
                })
                .collect(),
            equation: d.equation.as_ref().map(|eq| Equation {
                degree: eq.degree,
                operator_weights2: (0..eq.degree).map(|j| eq.weight2 + 4 * j as i64).collect(),
                display: render::equation(eq),
                coefficients: eq
                    .coeffs
                    .iter()
                    .map(|g| Coefficient {
                        weight2: g.weight2,
                        multiplies: g.chain_index,
                        display: render::modular_coefficient(g),
                        terms: g
                            .terms()
                            .map(|(c, (e4, e6))| CoefficientTerm {
                                e4,
                                e6,
                                c: rational(c),
                            })
                            .collect(),
                    })
                    .collect(),
                nullspace: eq
                    .nullspace
                    .iter()
                    .map(|v| v.iter().map(rational).collect())
                    .collect(),
                certificate: (&eq.certificate).into(),
            }),
        }
    }
}

#[derive(Serialize)]
pub struct BasisMonomial {
    pub name: String,
    pub e4: u32,
    pub e6: u32,
    pub phi_m2_1: u32,
    pub phi_0_1: u32,
    pub prefactor: Option<&'static str>,
}

impl From<&Monomial> for BasisMonomial {
    fn from(m: &Monomial) -> Self {
        BasisMonomial {
            name: m.to_string(),
            e4: m.e4,
            e6: m.e6,
            phi_m2_1: m.phi_m2_1,
            phi_0_1: m.phi_0_1,
            prefactor: m.prefactor.form_name(),
        }
    }
}

#[derive(Serialize)]
pub struct BasisDoc {
    pub weight2: i64,
    pub index2: i64,
    pub dimension: usize,
    pub monomials: Vec<BasisMonomial>,
}

impl From<&JacobiBasis> for BasisDoc {
    fn from(b: &JacobiBasis) -> Self {
        BasisDoc {
            weight2: b.weight2(),
            index2: b.index2(),
            dimension: b.dimension(),
            monomials: b.monomials().iter().map(Into::into).collect(),
        }
    }
}

#[derive(Serialize)]
pub struct Coordinate {
    pub monomial: String,
    pub c: String,
}

#[derive(Serialize)]
pub struct GenusDoc {
    pub dim: u32,
    pub coordinates: Vec<Coordinate>,
    pub warnings: Vec<&'static str>,
    pub series: Series,
}

impl GenusDoc {
    pub fn new(dim: u32, g: &GenusResult) -> Self {
        GenusDoc {
            dim,
            coordinates: g
                .basis
                .monomials()
                .iter()
                .zip(&g.coordinates)
                .map(|(m, c)| Coordinate {
                    monomial: m.to_string(),
                    c: rational(c),
                })
                .collect(),
            warnings: g
                .warnings
                .iter()
                .map(|w| match w {
                    GenusWarning::NonIntegral => "non_integral",
                })
                .collect(),
            series: (&g.series).into(),
        }
    }
}

#[derive(Serialize)]
pub struct FormInfo {
    pub name: &'static str,
    pub weight2: i64,
    pub index2: i64,
    pub eta_power: u32,
    pub quasi: bool,
    pub formula: &'static str,
}

#[derive(Serialize)]
pub struct ListDoc {
    pub forms: Vec<FormInfo>,
    pub equations: Vec<&'static str>,
}
