//! Exact Laurent polynomials in `v` with unbounded integer coefficients.
//!
//! A `LaurentPolynomial` never stores a zero coefficient, so two polynomials
//! are equal exactly when their term maps are equal.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPolynomial {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Self::default()
    }

    /// The constant 1.
    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        Self::monomial(0, c)
    }

    /// `c * v^exp`.
    pub fn monomial<T: Into<BigInt>>(exp: i64, c: T) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// `v^exp`.
    pub fn v_pow(exp: i64) -> Self {
        Self::monomial(exp, 1)
    }

    /// Builds a polynomial from (exponent, coefficient) pairs, summing repeats.
    pub fn from_terms<I, T>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (i64, T)>,
        T: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in pairs {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).map_or(false, |c| c.is_one())
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Coefficient of the highest power, or zero.
    pub fn leading_coeff(&self) -> BigInt {
        self.terms.values().next_back().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// Multiplication by `v^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale<T: Into<BigInt>>(&self, c: T) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(e, x)| (*e, x * &c)).collect() }
    }

    /// The bar involution `v -> v^-1`.
    pub fn bar(&self) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect() }
    }

    /// Specialization at `v = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |acc, c| acc + c)
    }

    /// Exact value at a rational point.
    pub fn eval(&self, v: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let p = pow_rational(v, *e);
            acc += p * BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn is_bar_invariant(&self) -> bool {
        self.bar() == *self
    }

    /// True when every exponent is strictly positive.
    pub fn in_v_zv(&self) -> bool {
        self.min_exp().map_or(true, |e| e > 0)
    }

    /// True when every exponent is strictly negative.
    pub fn in_vinv_zvinv(&self) -> bool {
        self.max_exp().map_or(true, |e| e < 0)
    }

    /// Part with exponents in `lo..=hi`.
    pub fn truncate(&self, lo: i64, hi: i64) -> Self {
        Self { terms: self.terms.range(lo..=hi).map(|(e, c)| (*e, c.clone())).collect() }
    }

    /// Sign of the leading coefficient as -1, 0 or 1.
    pub fn leading_sign(&self) -> i32 {
        let c = self.leading_coeff();
        if c.is_positive() {
            1
        } else if c.is_negative() {
            -1
        } else {
            0
        }
    }

    /// Returns `Some((e, c))` when the polynomial is the single term `c v^e`.
    pub fn as_monomial(&self) -> Option<(i64, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (*e, c))
        } else {
            None
        }
    }

    /// Reads `p(Q)` given by ascending integer coefficients and substitutes `Q = v^2`.
    pub fn from_q_coeffs(coeffs: &[BigInt]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(k, c)| (2 * k as i64, c.clone())))
    }

    /// Compact text form such as `1-v^-2` or `v+v^-1`.
    pub fn to_compact_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            let unit = a.is_one();
            match (*e, unit) {
                (0, _) => out.push_str(&a.to_string()),
                (1, true) => out.push('v'),
                (1, false) => out.push_str(&format!("{}*v", a)),
                (k, true) => out.push_str(&format!("v^{}", k)),
                (k, false) => out.push_str(&format!("{}*v^{}", a, k)),
            }
        }
        out
    }

    /// Pairs `(exponent, decimal coefficient)` in ascending exponent order.
    pub fn to_pairs(&self) -> Vec<(i64, String)> {
        self.terms.iter().map(|(e, c)| (*e, c.to_string())).collect()
    }

    pub fn from_pairs(pairs: &[(i64, String)]) -> Result<Self, String> {
        let mut p = Self::zero();
        for (e, s) in pairs {
            let c: BigInt = s.parse().map_err(|_| format!("bad coefficient {:?}", s))?;
            p.add_term(*e, c);
        }
        Ok(p)
    }

    /// LaTeX rendering, e.g. `v^{-1}+v`.
    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            let coef = if a.is_one() && *e != 0 { String::new() } else { a.to_string() };
            match *e {
                0 => out.push_str(&coef),
                1 => out.push_str(&format!("{}v", coef)),
                k => out.push_str(&format!("{}v^{{{}}}", coef, k)),
            }
        }
        out
    }

    /// Integer value if the polynomial is constant.
    pub fn as_constant_i64(&self) -> Option<i64> {
        match self.terms.len() {
            0 => Some(0),
            1 => self.terms.get(&0).and_then(|c| c.to_i64()),
            _ => None,
        }
    }
}

fn pow_rational(v: &BigRational, e: i64) -> BigRational {
    let mut r = BigRational::one();
    let base = if e < 0 { v.recip() } else { v.clone() };
    for _ in 0..e.unsigned_abs() {
        r *= &base;
    }
    r
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_compact_string())
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_compact_string())
    }
}

impl From<i64> for LaurentPolynomial {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl<'a> Add<&'a LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(mut self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        self += &rhs;
        self
    }
}

impl<'a> AddAssign<&'a LaurentPolynomial> for LaurentPolynomial {
    fn add_assign(&mut self, rhs: &LaurentPolynomial) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl AddAssign for LaurentPolynomial {
    fn add_assign(&mut self, rhs: LaurentPolynomial) {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl<'a> SubAssign<&'a LaurentPolynomial> for LaurentPolynomial {
    fn sub_assign(&mut self, rhs: &LaurentPolynomial) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl SubAssign for LaurentPolynomial {
    fn sub_assign(&mut self, rhs: LaurentPolynomial) {
        *self -= &rhs;
    }
}

impl<'a> Sub<&'a LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(mut self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        self -= &rhs;
        self
    }
}

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial { terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl<'a> Neg for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        self.clone().neg()
    }
}

impl<'a> Mul<&'a LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        &self * &rhs
    }
}

impl Serialize for LaurentPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_pairs().serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let pairs: Vec<(i64, String)> = Vec::deserialize(d)?;
        LaurentPolynomial::from_pairs(&pairs).map_err(D::Error::custom)
    }
}

/// A finitely supported map from basis labels to coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, LaurentPolynomial>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(k: K) -> Self {
        Self::single(k, LaurentPolynomial::one())
    }

    pub fn single(k: K, c: LaurentPolynomial) -> Self {
        let mut out = Self::zero();
        out.add_term(k, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&K, &LaurentPolynomial)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl DoubleEndedIterator<Item = &K> {
        self.terms.keys()
    }

    pub fn coeff(&self, k: &K) -> LaurentPolynomial {
        self.terms.get(k).cloned().unwrap_or_default()
    }

    pub fn get(&self, k: &K) -> Option<&LaurentPolynomial> {
        self.terms.get(k)
    }

    pub fn add_term(&mut self, k: K, c: LaurentPolynomial) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(slot) => {
                *slot += c;
                if slot.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, c);
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Self, c: &LaurentPolynomial) {
        if c.is_zero() {
            return;
        }
        for (k, x) in &other.terms {
            self.add_term(k.clone(), x * c);
        }
    }

    pub fn scale(&self, c: &LaurentPolynomial) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    /// Coefficientwise bar involution.
    pub fn bar_coeffs(&self) -> Self {
        Self { terms: self.terms.iter().map(|(k, c)| (k.clone(), c.bar())).collect() }
    }

    pub fn map_keys<J: Ord + Clone, F: Fn(&K) -> J>(&self, f: F) -> LinComb<J> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_term(f(k), c.clone());
        }
        out
    }

    /// Applies a linear map given on basis elements.
    pub fn apply<J: Ord + Clone, F: FnMut(&K) -> LinComb<J>>(&self, mut f: F) -> LinComb<J> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    pub fn eval_at_one(&self) -> BTreeMap<K, BigInt> {
        self.terms
            .iter()
            .map(|(k, c)| (k.clone(), c.eval_at_one()))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    pub fn into_map(self) -> BTreeMap<K, LaurentPolynomial> {
        self.terms
    }
}

impl<K: Ord + Clone> FromIterator<(K, LaurentPolynomial)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, LaurentPolynomial)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<K: Ord + Clone> AddAssign<&LinComb<K>> for LinComb<K> {
    fn add_assign(&mut self, rhs: &LinComb<K>) {
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), c.clone());
        }
    }
}

impl<K: Ord + Clone> SubAssign<&LinComb<K>> for LinComb<K> {
    fn sub_assign(&mut self, rhs: &LinComb<K>) {
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), -c);
        }
    }
}

impl<K: Ord + Clone> Add for LinComb<K> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += &rhs;
        self
    }
}

impl<K: Ord + Clone> Sub for LinComb<K> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        self -= &rhs;
        self
    }
}

impl<K: Ord + Clone> Neg for LinComb<K> {
    type Output = Self;
    fn neg(self) -> Self {
        Self { terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect() }
    }
}

impl<K: Ord + fmt::Debug> fmt::Debug for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter().map(|(k, c)| (k, c.to_compact_string()))).finish()
    }
}

/// `bar_poly` under its descriptive name.
pub fn bar_poly(p: &LaurentPolynomial) -> LaurentPolynomial {
    p.bar()
}

pub fn eval_at_one(p: &LaurentPolynomial) -> BigInt {
    p.eval_at_one()
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum FitError {
    #[error("need at least {needed} samples for degree bound {bound}, got {got}")]
    TooFewSamples { needed: usize, bound: usize, got: usize },
    #[error("sample points are not distinct")]
    RepeatedPoint,
    #[error("interpolant has a non-integral coefficient {coeff} at Q^{degree}")]
    NonIntegral { degree: usize, coeff: String },
    #[error("interpolant has degree {degree} above the bound {bound}")]
    DegreeTooHigh { degree: usize, bound: usize },
}

/// Interpolates integer counts taken at field sizes `Q` by a polynomial in `Q`.
///
/// Returns ascending integer coefficients. Every sample is used, so extra
/// samples beyond `bound + 1` act as consistency checks.
pub fn fit_polynomial_in_q(samples: &[(u64, BigInt)], bound: usize) -> Result<Vec<BigInt>, FitError> {
    if samples.len() < bound + 1 {
        return Err(FitError::TooFewSamples { needed: bound + 1, bound, got: samples.len() });
    }
    for (i, a) in samples.iter().enumerate() {
        if samples[..i].iter().any(|b| b.0 == a.0) {
            return Err(FitError::RepeatedPoint);
        }
    }
    let m = samples.len();
    let mut coeffs = vec![BigRational::zero(); m];
    for (i, (xi, yi)) in samples.iter().enumerate() {
        // basis polynomial prod_{j != i} (Q - x_j) / (x_i - x_j)
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for (j, (xj, _)) in samples.iter().enumerate() {
            if i == j {
                continue;
            }
            let xj = BigRational::from_integer(BigInt::from(*xj));
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (k, b) in basis.iter().enumerate() {
                next[k + 1] += b;
                next[k] -= b * &xj;
            }
            basis = next;
            denom *= BigRational::from_integer(BigInt::from(*xi)) - xj;
        }
        let scale = BigRational::from_integer(yi.clone()) / denom;
        for (k, b) in basis.iter().enumerate() {
            coeffs[k] += b * &scale;
        }
    }
    let mut out = Vec::with_capacity(m);
    for (k, c) in coeffs.iter().enumerate() {
        if !c.is_integer() {
            return Err(FitError::NonIntegral { degree: k, coeff: c.to_string() });
        }
        out.push(c.to_integer());
    }
    while out.last().map_or(false, |c| c.is_zero()) {
        out.pop();
    }
    if out.len() > bound + 1 {
        return Err(FitError::DegreeTooHigh { degree: out.len() - 1, bound });
    }
    Ok(out)
}

/// Evaluates ascending integer coefficients at `Q`.
pub fn eval_q_poly(coeffs: &[BigInt], q: u64) -> BigInt {
    let q = BigInt::from(q);
    coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * &q + c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(pairs: &[(i64, i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(pairs.iter().copied())
    }

    #[test]
    fn bar_examples() {
        assert_eq!(LaurentPolynomial::one().bar(), LaurentPolynomial::one());
        assert_eq!(lp(&[(1, 1), (-1, -1)]).bar(), lp(&[(-1, 1), (1, -1)]));
        assert_eq!(lp(&[(2, 1), (0, 3), (-1, 1)]).bar(), lp(&[(-2, 1), (0, 3), (1, 1)]));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(lp(&[(1, 1), (-1, 1)]).eval_at_one(), BigInt::from(2));
        assert_eq!(LaurentPolynomial::zero().eval_at_one(), BigInt::from(0));
        assert_eq!(lp(&[(0, 1), (1, -1)]).eval_at_one(), BigInt::from(0));
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let p = lp(&[(3, 2), (3, -2), (0, 1)]);
        assert_eq!(p, LaurentPolynomial::one());
        assert_eq!(&p - &p, LaurentPolynomial::zero());
    }

    #[test]
    fn compact_strings() {
        assert_eq!(lp(&[(0, 1), (-2, -1)]).to_compact_string(), "1-v^-2");
        assert_eq!(lp(&[(-1, -1)]).to_compact_string(), "-v^-1");
        assert_eq!(lp(&[(1, 1), (-1, 1)]).to_compact_string(), "v+v^-1");
        assert_eq!(LaurentPolynomial::zero().to_compact_string(), "0");
    }

    #[test]
    fn json_round_trip() {
        let p = lp(&[(-2, 1), (0, -7), (5, 3)]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"[[-2,"1"],[0,"-7"],[5,"3"]]"#);
        let q: LaurentPolynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn fit_examples() {
        let s = |v: &[(u64, i64)]| v.iter().map(|(q, c)| (*q, BigInt::from(*c))).collect::<Vec<_>>();
        assert_eq!(fit_polynomial_in_q(&s(&[(2, 2), (3, 3), (5, 5)]), 1).unwrap(), vec![BigInt::from(0), BigInt::from(1)]);
        assert_eq!(fit_polynomial_in_q(&s(&[(2, 1), (3, 1), (5, 1)]), 0).unwrap(), vec![BigInt::from(1)]);
        // |GL_1(F_Q)| = Q - 1, counted directly
        let gl1: Vec<(u64, BigInt)> = [2u64, 3, 5]
            .iter()
            .map(|&q| (q, BigInt::from((1..q).count() as i64)))
            .collect();
        assert_eq!(fit_polynomial_in_q(&gl1, 1).unwrap(), vec![BigInt::from(-1), BigInt::from(1)]);
    }

    #[test]
    fn fit_rejects_bad_bound() {
        let s: Vec<(u64, BigInt)> = [(2u64, 4i64), (3, 9), (5, 25)].iter().map(|(q, c)| (*q, BigInt::from(*c))).collect();
        assert!(matches!(fit_polynomial_in_q(&s, 1), Err(FitError::DegreeTooHigh { .. })));
        let s: Vec<(u64, BigInt)> = [(2u64, 1i64), (3, 2), (5, 2)].iter().map(|(q, c)| (*q, BigInt::from(*c))).collect();
        assert!(matches!(fit_polynomial_in_q(&s, 2), Err(FitError::NonIntegral { .. })));
    }
}
