//! Brute-force reduction modulo `Ω^l` by linear algebra over `ℚ(t)`, `t = v^-1`.
//!
//! Independent of the straightening recursion: it only uses the action of
//! `T_k` on words and exact elimination.

use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::straighten::is_normal;
use super::tensor::{word_apply_t, TensorVector, Word};
use super::HeckeError;
use crate::exactring::LaurentPolynomial as LP;

/// Dense polynomial in `t`, ascending coefficients, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Poly(Vec<BigRational>);

impl Poly {
    fn zero() -> Self {
        Poly(Vec::new())
    }
    fn constant(c: BigRational) -> Self {
        Poly(vec![c]).trim()
    }
    fn trim(mut self) -> Self {
        while self.0.last().map_or(false, |c| c.is_zero()) {
            self.0.pop();
        }
        self
    }
    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
    fn deg(&self) -> usize {
        self.0.len().saturating_sub(1)
    }
    fn lead(&self) -> &BigRational {
        self.0.last().unwrap()
    }
    fn add(&self, o: &Poly) -> Poly {
        let m = self.0.len().max(o.0.len());
        let z = BigRational::zero();
        Poly((0..m).map(|k| self.0.get(k).unwrap_or(&z) + o.0.get(k).unwrap_or(&z)).collect()).trim()
    }
    fn neg(&self) -> Poly {
        Poly(self.0.iter().map(|c| -c).collect())
    }
    fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigRational::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly(out).trim()
    }
    fn scale(&self, c: &BigRational) -> Poly {
        Poly(self.0.iter().map(|x| x * c).collect()).trim()
    }
    fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        let mut r = self.clone();
        if r.0.len() < d.0.len() {
            return (Poly::zero(), r);
        }
        let mut q = vec![BigRational::zero(); r.0.len() - d.0.len() + 1];
        let dl = d.lead().clone();
        while !r.is_zero() && r.deg() >= d.deg() {
            let shift = r.deg() - d.deg();
            let c = r.lead() / &dl;
            for (k, dc) in d.0.iter().enumerate() {
                r.0[k + shift] -= dc * &c;
            }
            q[shift] = c;
            r = r.trim();
        }
        (Poly(q).trim(), r)
    }
    fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.lead().recip();
        self.scale(&l)
    }
    fn gcd(a: &Poly, b: &Poly) -> Poly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }
}

/// Element of `ℚ(t)` kept in lowest terms with monic denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    fn new(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = Poly::gcd(&num, &den);
        let num = num.divrem(&g).0;
        let den = den.divrem(&g).0;
        let l = den.lead().recip();
        Self { num: num.scale(&l), den: den.scale(&l) }
    }
    pub fn zero() -> Self {
        Self { num: Poly::zero(), den: Poly::constant(BigRational::one()) }
    }
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    pub fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return Self::new(self.num.add(&o.num), self.den.clone());
        }
        Self::new(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den))
    }
    pub fn neg(&self) -> Self {
        Self { num: self.num.neg(), den: self.den.clone() }
    }
    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        Self::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }
    pub fn inv(&self) -> Self {
        Self::new(self.den.clone(), self.num.clone())
    }

    /// From a Laurent polynomial in `v`.
    pub fn from_laurent(p: &LP) -> Self {
        if p.is_zero() {
            return Self::zero();
        }
        // v^e = t^{-e}; multiply through by t^M with M = max exponent
        let m = p.max_exp().unwrap();
        let lo = p.min_exp().unwrap();
        let mut num = vec![BigRational::zero(); (m - lo) as usize + 1];
        for (e, c) in p.terms() {
            num[(m - e) as usize] = BigRational::from_integer(c.clone());
        }
        let num = Poly(num).trim();
        if m >= 0 {
            let mut den = vec![BigRational::zero(); m as usize + 1];
            den[m as usize] = BigRational::one();
            Self::new(num, Poly(den))
        } else {
            let mut sh = vec![BigRational::zero(); (-m) as usize + 1];
            sh[(-m) as usize] = BigRational::one();
            Self::new(num.mul(&Poly(sh)), Poly::constant(BigRational::one()))
        }
    }

    /// Back to `ℤ[v, v^-1]`, if possible.
    pub fn to_laurent(&self) -> Option<LP> {
        if self.is_zero() {
            return Some(LP::zero());
        }
        // denominator must be t^k
        let k = self.den.deg();
        if self.den.0[..k].iter().any(|c| !c.is_zero()) {
            return None;
        }
        let mut out = LP::zero();
        for (j, c) in self.num.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !c.is_integer() {
                return None;
            }
            // t^{j-k} = v^{k-j}
            out.add_term(k as i64 - j as i64, c.to_integer());
        }
        Some(out)
    }
}

/// Reduction table for `⊗^l / Ω^l` restricted to words with entries in `[lo, hi]`.
pub struct QuotientOracle {
    pub l: usize,
    pub n: usize,
    pub lo: i64,
    pub hi: i64,
    reductions: HashMap<Word, TensorVector>,
    /// Total number of normal words in the window.
    pub normal_count: usize,
    /// Dimension of the quotient computed by elimination.
    pub quotient_dim: usize,
}

fn all_words(l: usize, lo: i64, hi: i64) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    for _ in 0..l {
        let mut next = Vec::new();
        for w in &out {
            for a in lo..=hi {
                let mut w2 = w.clone();
                w2.push(a);
                next.push(w2);
            }
        }
        out = next;
    }
    out
}

fn block_key(w: &[i64], n: usize) -> (i64, Vec<i64>) {
    let mut r: Vec<i64> = w.iter().map(|a| a.rem_euclid(n as i64)).collect();
    r.sort();
    (w.iter().sum(), r)
}

impl QuotientOracle {
    pub fn build(l: usize, n: usize, lo: i64, hi: i64) -> Result<Self, HeckeError> {
        let mut blocks: BTreeMap<(i64, Vec<i64>), Vec<Word>> = BTreeMap::new();
        for w in all_words(l, lo, hi) {
            blocks.entry(block_key(&w, n)).or_default().push(w);
        }
        let mut reductions = HashMap::new();
        let mut normal_count = 0;
        let mut quotient_dim = 0;
        for (_, mut words) in blocks {
            // non-normal columns first, then normal ones
            words.sort_by_key(|w| (is_normal(w), w.clone()));
            let index: HashMap<Word, usize> = words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
            let first_normal = words.iter().position(|w| is_normal(w)).unwrap_or(words.len());
            normal_count += words.len() - first_normal;
            let mut pivots: BTreeMap<usize, BTreeMap<usize, RatFunc>> = BTreeMap::new();
            for w in &words {
                for k in 1..l {
                    let mut rel = word_apply_t(w, k, n)?;
                    rel.add_term(w.clone(), LP::one());
                    let mut row: BTreeMap<usize, RatFunc> = BTreeMap::new();
                    for (u, c) in rel.iter() {
                        let col = *index.get(u).ok_or_else(|| HeckeError::OracleWindow(u.clone()))?;
                        row.insert(col, RatFunc::from_laurent(c));
                    }
                    // reduce against pivots until the leading column is new
                    loop {
                        let Some((&lead, lc)) = row.iter().next() else { break };
                        let lc = lc.clone();
                        let Some(prow) = pivots.get(&lead) else {
                            let inv = lc.inv();
                            let normed: BTreeMap<usize, RatFunc> = row.iter().map(|(c, x)| (*c, x.mul(&inv))).collect();
                            pivots.insert(lead, normed);
                            break;
                        };
                        for (c, x) in prow {
                            let cur = row.get(c).cloned().unwrap_or_else(RatFunc::zero);
                            let nv = cur.sub(&x.mul(&lc));
                            if nv.is_zero() {
                                row.remove(c);
                            } else {
                                row.insert(*c, nv);
                            }
                        }
                    }
                }
            }
            if pivots.keys().any(|&c| c >= first_normal) || pivots.len() != first_normal {
                return Err(HeckeError::OracleRank);
            }
            quotient_dim += words.len() - pivots.len();
            // back substitution from the last column down
            let mut red: Vec<Option<BTreeMap<usize, RatFunc>>> = vec![None; words.len()];
            for c in (0..words.len()).rev() {
                let mut out: BTreeMap<usize, RatFunc> = BTreeMap::new();
                if c >= first_normal {
                    out.insert(c, RatFunc::from_laurent(&LP::one()));
                } else {
                    for (d, x) in pivots[&c].iter().filter(|(d, _)| **d != c) {
                        for (e, y) in red[*d].as_ref().unwrap() {
                            let cur = out.get(e).cloned().unwrap_or_else(RatFunc::zero);
                            let nv = cur.sub(&x.mul(y));
                            if nv.is_zero() {
                                out.remove(e);
                            } else {
                                out.insert(*e, nv);
                            }
                        }
                    }
                }
                red[c] = Some(out);
            }
            for (c, w) in words.iter().enumerate() {
                let mut tv = TensorVector::zero();
                for (e, x) in red[c].as_ref().unwrap() {
                    let p = x.to_laurent().ok_or(HeckeError::OracleNotLaurent)?;
                    tv.add_term(words[*e].clone(), p);
                }
                reductions.insert(w.clone(), tv);
            }
        }
        Ok(Self { l, n, lo, hi, reductions, normal_count, quotient_dim })
    }

    pub fn reduce(&self, word: &[i64]) -> Option<&TensorVector> {
        self.reductions.get(word)
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.reductions.keys()
    }
}

/// Exact conversions used by tests.
pub fn ratfunc_roundtrip(p: &LP) -> Option<LP> {
    RatFunc::from_laurent(p).to_laurent()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heckewedge::straighten::straighten;

    #[test]
    fn ratfunc_round_trip() {
        for p in [LP::from_terms([(3, 1), (-2, -4)]), LP::v_pow(-3), LP::from_terms([(5, 2), (6, 1)]), LP::zero()] {
            assert_eq!(ratfunc_roundtrip(&p), Some(p.clone()));
        }
        let a = RatFunc::from_laurent(&LP::from_terms([(0, 1), (-2, 1)]));
        assert_eq!(a.mul(&a.inv()).to_laurent(), Some(LP::one()));
    }

    #[test]
    fn oracle_l2_n2() {
        let o = QuotientOracle::build(2, 2, -4, 4).unwrap();
        assert_eq!(o.quotient_dim, o.normal_count);
        assert!(o.reduce(&[0, 0]).unwrap().is_zero());
        for w in o.words() {
            assert_eq!(o.reduce(w).unwrap(), &straighten(w, 2).unwrap(), "{:?}", w);
        }
    }
}
