//! Truncated bigraded Fourier expansions in `q` and `ζ`.
//!
//! A [`QZSeries`] stores finitely many monomials `c · q^{n24/24} ζ^{l2/2}` with
//! exact rational coefficients, together with twice the weight, twice the
//! index and an exclusive truncation `trunc24`: every coefficient with
//! `n24 < trunc24` is known, nothing at or above it is.
//!
//! Integer gradings in units of `1/24` (for `q`) and `1/2` (for `ζ`) make
//! every form used here integer-graded, including `η` (`q^{1/24}`) and the
//! theta series (`q^{1/8} ζ^{1/2}`).

use std::cmp::min;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar; always kept in lowest terms with positive denominator.
pub type Rational = BigRational;

/// One `q`-slice: a Laurent polynomial in `ζ^{1/2}`, keyed by `l2`.
pub type Slice = BTreeMap<i64, Rational>;

/// Builds `num/den` as a [`Rational`].
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Builds an integral [`Rational`].
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Clone, PartialEq, Eq)]
pub struct QZSeries {
    weight2: i64,
    index2: i64,
    trunc24: i64,
    quasi: bool,
    slices: BTreeMap<i64, Slice>,
}

impl QZSeries {
    /// The zero series of the given bidegree, known to vanish below `trunc24`.
    pub fn zero(weight2: i64, index2: i64, trunc24: i64) -> Self {
        QZSeries {
            weight2,
            index2,
            trunc24,
            quasi: false,
            slices: BTreeMap::new(),
        }
    }

    /// The constant series `1` (weight 0, index 0).
    pub fn one(trunc24: i64) -> Self {
        let mut s = Self::zero(0, 0, trunc24);
        if trunc24 > 0 {
            s.slices.insert(0, Slice::from([(0, Rational::one())]));
        }
        s
    }

    /// A single term `c · q^{n24/24} ζ^{l2/2}`.
    pub fn monomial(n24: i64, l2: i64, c: Rational, weight2: i64, index2: i64, trunc24: i64) -> Result<Self> {
        Self::from_terms(weight2, index2, trunc24, [(n24, l2, c)])
    }

    /// Collects terms, summing repeated keys and dropping zeros.
    pub fn from_terms<I>(weight2: i64, index2: i64, trunc24: i64, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, i64, Rational)>,
    {
        let mut s = Self::zero(weight2, index2, trunc24);
        for (n24, l2, c) in terms {
            if n24 >= trunc24 {
                return Err(Error::BeyondTruncation { n24, trunc24 });
            }
            *s.slices
                .entry(n24)
                .or_default()
                .entry(l2)
                .or_insert_with(Rational::zero) += c;
        }
        s.prune();
        Ok(s)
    }

    pub fn weight2(&self) -> i64 {
        self.weight2
    }

    pub fn index2(&self) -> i64 {
        self.index2
    }

    pub fn trunc24(&self) -> i64 {
        self.trunc24
    }

    /// True for `E₂` and anything built from it that is not known to be modular.
    pub fn is_quasi(&self) -> bool {
        self.quasi
    }

    pub fn bidegree(&self) -> (i64, i64) {
        (self.weight2, self.index2)
    }

    /// All stored terms in lexicographic `(n24, l2)` order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64, &Rational)> + '_ {
        self.slices
            .iter()
            .flat_map(|(&n, s)| s.iter().map(move |(&l, c)| (n, l, c)))
    }

    /// Non-empty slices in ascending `n24`.
    pub fn slices(&self) -> impl Iterator<Item = (i64, &Slice)> + '_ {
        self.slices.iter().map(|(&n, s)| (n, s))
    }

    pub fn term_count(&self) -> usize {
        self.slices.values().map(|s| s.len()).sum()
    }

    /// Coefficient of `q^{n24/24} ζ^{l2/2}` (zero when absent).
    pub fn coeff(&self, n24: i64, l2: i64) -> Rational {
        self.slices
            .get(&n24)
            .and_then(|s| s.get(&l2))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// The Laurent polynomial sitting at `q^{n24/24}`.
    pub fn q_slice(&self, n24: i64) -> Result<Slice> {
        if n24 >= self.trunc24 {
            return Err(Error::BeyondTruncation {
                n24,
                trunc24: self.trunc24,
            });
        }
        Ok(self.slices.get(&n24).cloned().unwrap_or_default())
    }

    /// Lowest `q`-exponent carrying a nonzero coefficient.
    pub fn ord24(&self) -> Option<i64> {
        self.slices.keys().next().copied()
    }

    /// Lowest exponent that may be nonzero: `ord24`, or the truncation for the zero series.
    fn valuation24(&self) -> i64 {
        self.ord24().unwrap_or(self.trunc24)
    }

    pub fn is_zero(&self) -> bool {
        self.slices.is_empty()
    }

    /// Whether every coefficient with `n24 < bound24` vanishes.
    pub fn is_zero_to(&self, bound24: i64) -> Result<bool> {
        if bound24 > self.trunc24 {
            return Err(Error::BeyondTruncation {
                n24: bound24,
                trunc24: self.trunc24,
            });
        }
        Ok(self.slices.range(..bound24).next().is_none())
    }

    /// Whether every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms().all(|(_, _, c)| c.is_integer())
    }

    /// Drops everything at or above `trunc24` (no-op if already shorter).
    pub fn truncate(mut self, trunc24: i64) -> Self {
        if trunc24 < self.trunc24 {
            self.slices.split_off(&trunc24);
            self.trunc24 = trunc24;
        }
        self
    }

    pub fn with_quasi(mut self, quasi: bool) -> Self {
        self.quasi = quasi;
        self
    }

    /// Overrides the bidegree metadata; the caller vouches for it.
    pub fn with_bidegree(mut self, weight2: i64, index2: i64) -> Self {
        self.weight2 = weight2;
        self.index2 = index2;
        self
    }

    /// `ca·a + cb·b` for series of equal bidegree.
    pub fn add(a: &Self, b: &Self, ca: &Rational, cb: &Rational) -> Result<Self> {
        if a.bidegree() != b.bidegree() {
            return Err(Error::BidegreeMismatch {
                left: a.bidegree(),
                right: b.bidegree(),
            });
        }
        let trunc24 = min(a.trunc24, b.trunc24);
        let mut out = Self::zero(a.weight2, a.index2, trunc24);
        out.quasi = a.quasi || b.quasi;
        for (src, c) in [(a, ca), (b, cb)] {
            if c.is_zero() {
                continue;
            }
            for (&n, slice) in src.slices.range(..trunc24) {
                let dst = out.slices.entry(n).or_default();
                for (&l, v) in slice {
                    *dst.entry(l).or_insert_with(Rational::zero) += v * c;
                }
            }
        }
        out.prune();
        Ok(out)
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        Self::add(self, other, &Rational::one(), &Rational::one())
    }

    pub fn difference(&self, other: &Self) -> Result<Self> {
        Self::add(self, other, &Rational::one(), &-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = self.clone();
        if c.is_zero() {
            out.slices.clear();
            return out;
        }
        for slice in out.slices.values_mut() {
            for v in slice.values_mut() {
                *v *= c;
            }
        }
        out
    }

    /// Cauchy product. The result is complete below
    /// `min(a.trunc24 + ord24(b), b.trunc24 + ord24(a))`.
    pub fn mul(&self, other: &Self) -> Self {
        let trunc24 = min(
            self.trunc24 + other.valuation24(),
            other.trunc24 + self.valuation24(),
        );
        let mut out = Self::zero(self.weight2 + other.weight2, self.index2 + other.index2, trunc24);
        out.quasi = self.quasi || other.quasi;

        for (&na, sa) in &self.slices {
            if na + other.valuation24() >= trunc24 {
                break;
            }
            for (&nb, sb) in &other.slices {
                let n = na + nb;
                if n >= trunc24 {
                    break;
                }
                let dst = out.slices.entry(n).or_default();
                for (&la, ca) in sa {
                    for (&lb, cb) in sb {
                        *dst.entry(la + lb).or_insert_with(Rational::zero) += ca * cb;
                    }
                }
            }
        }
        out.prune();
        out
    }

    /// `self^e` by repeated squaring; `e = 0` gives `1` at this truncation.
    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one(self.trunc24);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Exact quotient `self / divisor` by long division in `q`.
    ///
    /// The divisor's lowest slice must be a single monomial `c·q^{s/24}ζ^{t/2}`.
    /// The quotient is complete below
    /// `min(self.trunc24 - s, divisor.trunc24 - 2s + ord24(self))`.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (&s, lead) = divisor.slices.iter().next().ok_or(Error::ZeroDivisor)?;
        if lead.len() != 1 {
            return Err(Error::NonMonomialDivisor);
        }
        let (&t, c) = lead.iter().next().expect("non-empty slice");
        let trunc24 = min(self.trunc24 - s, divisor.trunc24 - 2 * s + self.valuation24());

        let mut rem: BTreeMap<i64, Slice> = self
            .slices
            .range(..trunc24 + s)
            .map(|(&n, sl)| (n, sl.clone()))
            .collect();
        let mut quot = Self::zero(
            self.weight2 - divisor.weight2,
            self.index2 - divisor.index2,
            trunc24,
        );
        quot.quasi = self.quasi || divisor.quasi;

        while let Some((&n, _)) = rem.iter().next() {
            let e = n - s;
            if e >= trunc24 {
                break;
            }
            let slice = rem.remove(&n).expect("present");
            let qslice: Slice = slice.into_iter().map(|(l, v)| (l - t, v / c)).collect();
            for (&nb, sb) in divisor.slices.iter().skip(1) {
                let target = e + nb;
                if target - s >= trunc24 {
                    break;
                }
                let dst = rem.entry(target).or_default();
                for (&lq, cq) in &qslice {
                    for (&lb, cb) in sb {
                        *dst.entry(lq + lb).or_insert_with(Rational::zero) -= cq * cb;
                    }
                }
                dst.retain(|_, v| !v.is_zero());
                if dst.is_empty() {
                    rem.remove(&target);
                }
            }
            quot.slices.insert(e, qslice);
        }
        quot.prune();
        Ok(quot)
    }

    /// Multiplies by the binomial `1 + c·q^{n24/24} ζ^{l2/2}` (`n24 > 0`).
    /// Truncation is preserved.
    pub fn mul_binomial(&self, n24: i64, l2: i64, c: &Rational) -> Self {
        assert!(n24 > 0, "binomial must raise the q-order");
        let mut out = self.clone();
        for (&n, slice) in self.slices.range(..self.trunc24 - n24) {
            let dst = out.slices.entry(n + n24).or_default();
            for (&l, v) in slice {
                *dst.entry(l + l2).or_insert_with(Rational::zero) += v * c;
            }
        }
        out.prune();
        out
    }

    /// Divides by `1 + c·q^{n24/24} ζ^{l2/2}` (`n24 > 0`), i.e. multiplies by
    /// the truncated geometric series. Truncation is preserved.
    pub fn div_binomial(&self, n24: i64, l2: i64, c: &Rational) -> Self {
        assert!(n24 > 0, "binomial must raise the q-order");
        // y = x - c q^n ζ^l y, solved in ascending q-order
        let mut out = self.clone();
        let keys: Vec<i64> = out.slices.keys().copied().collect();
        let mut pending: BTreeMap<i64, Slice> = BTreeMap::new();
        for k in keys {
            pending.insert(k, Slice::new());
        }
        let mut done: BTreeMap<i64, Slice> = BTreeMap::new();
        while let Some((&n, _)) = pending.iter().next() {
            pending.remove(&n);
            let mut slice = out.slices.remove(&n).unwrap_or_default();
            if let Some(prev) = done.get(&(n - n24)) {
                for (&l, v) in prev {
                    *slice.entry(l + l2).or_insert_with(Rational::zero) -= v * c;
                }
            }
            slice.retain(|_, v| !v.is_zero());
            if !slice.is_empty() {
                if n + n24 < self.trunc24 {
                    pending.entry(n + n24).or_default();
                }
                done.insert(n, slice);
            }
        }
        out.slices = done;
        out
    }

    /// Applies `f(n24, l2, c)` to every coefficient, keeping the metadata.
    pub(crate) fn map_terms<F>(&self, mut f: F) -> Self
    where
        F: FnMut(i64, i64, &Rational) -> Rational,
    {
        let mut out = self.clone();
        for (&n, slice) in out.slices.iter_mut() {
            for (&l, v) in slice.iter_mut() {
                *v = f(n, l, v);
            }
        }
        out.prune();
        out
    }

    /// `ζ → ζ^{-1}`.
    pub fn reflect(&self) -> Self {
        let mut out = self.clone();
        for slice in out.slices.values_mut() {
            *slice = slice.iter().map(|(&l, v)| (-l, v.clone())).collect();
        }
        out
    }

    fn prune(&mut self) {
        for slice in self.slices.values_mut() {
            slice.retain(|_, v| !v.is_zero());
        }
        self.slices.retain(|_, s| !s.is_empty());
    }
}

impl fmt::Debug for QZSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "QZSeries(w2={}, i2={}, t24={}{}) {{",
            self.weight2,
            self.index2,
            self.trunc24,
            if self.quasi { ", quasi" } else { "" }
        )?;
        for (n, l, c) in self.terms().take(24) {
            write!(f, " [{n},{l}]={c}")?;
        }
        if self.term_count() > 24 {
            write!(f, " …")?;
        }
        write!(f, " }}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn laurent(n24: i64, coeffs: &[(i64, i64)], weight2: i64, index2: i64, t: i64) -> QZSeries {
        QZSeries::from_terms(weight2, index2, t, coeffs.iter().map(|&(l, c)| (n24, l, int(c)))).unwrap()
    }

    #[test]
    fn monomial_constructor() {
        let one = QZSeries::monomial(0, 0, int(1), 0, 0, 240).unwrap();
        assert_eq!(one, QZSeries::one(240));
        let m = QZSeries::monomial(1, 1, int(1), 1, 1, 240).unwrap();
        assert_eq!(m.coeff(1, 1), int(1));
        assert_eq!(m.term_count(), 1);
        let e2_tail = QZSeries::monomial(24, 0, int(-24), 0, 0, 240).unwrap();
        assert_eq!(e2_tail.q_slice(24).unwrap(), Slice::from([(0, int(-24))]));
    }

    #[test]
    fn monomial_beyond_truncation_rejected() {
        let err = QZSeries::monomial(48, 0, int(1), 0, 0, 48).unwrap_err();
        assert_eq!(err, Error::BeyondTruncation { n24: 48, trunc24: 48 });
    }

    #[test]
    fn zero_coefficients_are_never_stored() {
        let s = QZSeries::from_terms(0, 2, 48, [(0, 2, int(1)), (0, 2, int(-1)), (24, 0, int(0))]).unwrap();
        assert!(s.is_zero());
        assert_eq!(s.term_count(), 0);
    }

    #[test]
    fn add_rejects_bidegree_mismatch() {
        let a = QZSeries::one(48);
        let b = QZSeries::zero(4, 0, 48);
        assert!(matches!(
            QZSeries::add(&a, &b, &int(1), &int(1)),
            Err(Error::BidegreeMismatch { .. })
        ));
    }

    #[test]
    fn add_takes_min_truncation() {
        let a = laurent(0, &[(0, 1)], 0, 0, 48);
        let b = laurent(24, &[(0, 3)], 0, 0, 96);
        let s = a.sum(&b).unwrap();
        assert_eq!(s.trunc24(), 48);
        assert_eq!(s.coeff(24, 0), int(3));
    }

    #[test]
    fn mul_truncation_uses_valuations() {
        // q^{1/24}(1 + ...) known below 48, times something known below 30 starting at q^0
        let a = laurent(1, &[(0, 1)], 1, 0, 48);
        let b = laurent(0, &[(0, 1)], 0, 0, 30);
        let p = a.mul(&b);
        assert_eq!(p.trunc24(), min(48, 30 + 1));
    }

    #[test]
    fn mul_of_laurent_slices() {
        // (ζ^{1/2} - ζ^{-1/2})^2 = ζ - 2 + ζ^{-1}
        let a = QZSeries::from_terms(1, 1, 24, [(0, 1, int(1)), (0, -1, int(-1))]).unwrap();
        let sq = a.mul(&a);
        assert_eq!(
            sq.q_slice(0).unwrap(),
            Slice::from([(-2, int(1)), (0, int(-2)), (2, int(1))])
        );
        assert_eq!(sq.bidegree(), (2, 2));
    }

    #[test]
    fn div_exact_rejects_bad_divisors() {
        let a = QZSeries::one(48);
        assert_eq!(a.div_exact(&QZSeries::zero(0, 0, 48)), Err(Error::ZeroDivisor));
        let b = QZSeries::from_terms(0, 1, 48, [(0, 1, int(1)), (0, -1, int(-1))]).unwrap();
        assert_eq!(a.div_exact(&b), Err(Error::NonMonomialDivisor));
    }

    #[test]
    fn div_exact_by_one_minus_q() {
        // 1/(1-q) = 1 + q + q^2 + ...
        let d = QZSeries::from_terms(0, 0, 120, [(0, 0, int(1)), (24, 0, int(-1))]).unwrap();
        let g = QZSeries::one(120).div_exact(&d).unwrap();
        assert_eq!(g.trunc24(), 120);
        for k in 0..5 {
            assert_eq!(g.coeff(24 * k, 0), int(1));
        }
        assert_eq!(g, QZSeries::one(120).div_binomial(24, 0, &int(-1)));
    }

    #[test]
    fn binomial_round_trip() {
        let x = QZSeries::from_terms(0, 2, 96, [(0, 2, int(1)), (0, -2, int(1)), (24, 0, int(7))]).unwrap();
        let y = x.mul_binomial(24, 2, &int(-1)).div_binomial(24, 2, &int(-1));
        assert_eq!(x, y);
    }

    #[test]
    fn q_slice_beyond_truncation_errors() {
        assert!(QZSeries::one(24).q_slice(24).is_err());
        assert_eq!(QZSeries::one(24).q_slice(0).unwrap(), Slice::from([(0, int(1))]));
    }

    #[test]
    fn is_zero_to_checks_bound() {
        let s = laurent(24, &[(0, 1)], 0, 0, 48);
        assert!(s.is_zero_to(24).unwrap());
        assert!(!s.is_zero_to(48).unwrap());
        assert!(s.is_zero_to(72).is_err());
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let a = QZSeries::from_terms(0, 1, 96, [(0, 1, int(1)), (0, -1, int(1)), (24, 3, int(-2))]).unwrap();
        assert_eq!(a.pow(3), a.mul(&a).mul(&a));
        assert_eq!(a.pow(0), QZSeries::one(96));
    }
}
