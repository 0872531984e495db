//! Kazhdan–Lusztig polynomials of the extended affine symmetric group, and
//! the wedge bases they produce.
//!
//! `P_{x,y}` is computed as a polynomial in the classical variable `q`; as
//! a Laurent polynomial it is reported at `q = v^{-2}`, and `P̄` is the same
//! polynomial at `q = v^2`. The `π` factor has length zero and is split off.

use std::collections::{HashMap, HashSet};
use std::sync::{Arc, RwLock};

use once_cell::sync::Lazy;

use crate::combinat::affine::{alcove_decompose, finite_group, rho, AffinePermutation};
use crate::combinat::Partition;
use crate::exactring::LaurentPolynomial as LP;
use crate::heckewedge::fock::{word_partition, FockVector};

/// Longest element length handled.
pub const MAX_LENGTH: usize = 12;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum KlError {
    #[error("length {0} is out of desk scale (cap {MAX_LENGTH})")]
    OutOfScale(usize),
    #[error("{0:?} is not below {1:?} in the Bruhat order")]
    NotLeq(AffinePermutation, AffinePermutation),
    #[error("{0:?} is not in the alcove for n = {1}")]
    NotInAlcove(Vec<i64>, usize),
    #[error("{0} has more than {1} parts")]
    TooManyParts(Partition, usize),
    #[error("word {0:?} is not a partition word")]
    NotPartition(Vec<i64>),
}

type Key = Vec<i64>;
type QPoly = Vec<i64>;

static LOWER: Lazy<RwLock<HashMap<Key, Arc<HashSet<Key>>>>> = Lazy::new(|| RwLock::new(HashMap::new()));
static PMEMO: Lazy<RwLock<HashMap<(Key, Key), QPoly>>> = Lazy::new(|| RwLock::new(HashMap::new()));
static RMEMO: Lazy<RwLock<HashMap<(Key, Key), QPoly>>> = Lazy::new(|| RwLock::new(HashMap::new()));

fn perm(w: &[i64]) -> AffinePermutation {
    AffinePermutation::from_window(w.to_vec()).expect("valid window")
}

/// Coxeter elements below `c` (a Coxeter element), by subwords of a reduced word.
fn lower_interval(c: &AffinePermutation) -> Arc<HashSet<Key>> {
    let key = c.window().to_vec();
    if let Some(s) = LOWER.read().unwrap().get(&key) {
        return s.clone();
    }
    let l = c.rank();
    let (_, word) = c.reduced_word();
    let mut set: HashSet<Key> = HashSet::new();
    set.insert(AffinePermutation::identity(l).window().to_vec());
    for &j in &word {
        let next: Vec<Key> = set.iter().map(|w| perm(w).mul_s(j).window().to_vec()).collect();
        set.extend(next);
    }
    let set = Arc::new(set);
    LOWER.write().unwrap().entry(key).or_insert_with(|| set.clone());
    set
}

fn check_scale(w: &AffinePermutation) -> Result<(), KlError> {
    let len = w.length();
    if len > MAX_LENGTH {
        Err(KlError::OutOfScale(len))
    } else {
        Ok(())
    }
}

/// `x ≤ y` in the Bruhat order (equal `π` parts, subword criterion on the rest).
pub fn bruhat_leq(x: &AffinePermutation, y: &AffinePermutation) -> bool {
    if x.rank() != y.rank() || x.pi_power() != y.pi_power() {
        return false;
    }
    let cx = x.coxeter_part();
    let cy = y.coxeter_part();
    if cx.length() > cy.length() {
        return false;
    }
    lower_interval(&cy).contains(cx.window())
}

fn qadd(a: &mut QPoly, b: &[i64], shift: usize, sign: i64) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (k, c) in b.iter().enumerate() {
        a[k + shift] += sign * c;
    }
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn qmul(a: &[i64], b: &[i64]) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// KL polynomial of Coxeter elements in `q`, zero unless `x ≤ y`.
fn p_coxeter(x: &AffinePermutation, y: &AffinePermutation) -> QPoly {
    if x == y {
        return vec![1];
    }
    if !lower_interval(y).contains(x.window()) {
        return Vec::new();
    }
    let key = (x.window().to_vec(), y.window().to_vec());
    if let Some(p) = PMEMO.read().unwrap().get(&key) {
        return p.clone();
    }
    let s = y.right_descents()[0];
    let v = y.mul_s(s);
    let xs = x.mul_s(s);
    let mut out = Vec::new();
    if x.has_right_descent(s) {
        qadd(&mut out, &p_coxeter(&xs, &v), 0, 1);
        qadd(&mut out, &p_coxeter(x, &v), 1, 1);
    } else {
        qadd(&mut out, &p_coxeter(&xs, &v), 1, 1);
        qadd(&mut out, &p_coxeter(x, &v), 0, 1);
    }
    let ly = y.length();
    let lv = v.length();
    for zk in lower_interval(&v).iter() {
        let z = perm(zk);
        if !z.has_right_descent(s) || z == v {
            continue;
        }
        let lz = z.length();
        if (lv - lz) % 2 == 0 || !lower_interval(&z).contains(x.window()) {
            continue;
        }
        let pzv = p_coxeter(&z, &v);
        let mu = pzv.get((lv - lz - 1) / 2).copied().unwrap_or(0);
        if mu != 0 {
            let pxz = p_coxeter(x, &z);
            qadd(&mut out, &pxz, (ly - lz) / 2, -mu);
        }
    }
    PMEMO.write().unwrap().entry(key).or_insert_with(|| out.clone());
    out
}

/// Classical coefficients of `P_{x,y}` in ascending powers of `q`.
pub fn kl_q_coeffs(x: &AffinePermutation, y: &AffinePermutation) -> Result<Vec<i64>, KlError> {
    check_scale(y)?;
    if !bruhat_leq(x, y) {
        return Err(KlError::NotLeq(x.clone(), y.clone()));
    }
    Ok(p_coxeter(&x.coxeter_part(), &y.coxeter_part()))
}

fn q_to_v(c: &[i64], sign: i64) -> LP {
    LP::from_terms(c.iter().enumerate().map(|(k, &a)| (sign * 2 * k as i64, a)))
}

/// `P_{x,y}` at `q = v^{-2}`.
pub fn kl_polynomial(x: &AffinePermutation, y: &AffinePermutation) -> Result<LP, KlError> {
    Ok(q_to_v(&kl_q_coeffs(x, y)?, -1))
}

/// `P̄_{x,y}`, i.e. the classical polynomial at `q = v^2`.
pub fn kl_polynomial_bar(x: &AffinePermutation, y: &AffinePermutation) -> Result<LP, KlError> {
    Ok(q_to_v(&kl_q_coeffs(x, y)?, 1))
}

fn r_coxeter(x: &AffinePermutation, y: &AffinePermutation) -> QPoly {
    if x == y {
        return vec![1];
    }
    if !lower_interval(y).contains(x.window()) {
        return Vec::new();
    }
    let key = (x.window().to_vec(), y.window().to_vec());
    if let Some(p) = RMEMO.read().unwrap().get(&key) {
        return p.clone();
    }
    let s = y.right_descents()[0];
    let v = y.mul_s(s);
    let xs = x.mul_s(s);
    let out = if x.has_right_descent(s) {
        r_coxeter(&xs, &v)
    } else {
        let mut o = qmul(&[-1, 1], &r_coxeter(x, &v));
        qadd(&mut o, &r_coxeter(&xs, &v), 1, 1);
        o
    };
    RMEMO.write().unwrap().entry(key).or_insert_with(|| out.clone());
    out
}

/// The R-polynomial `R_{x,y}` in ascending powers of `q`.
pub fn r_polynomial(x: &AffinePermutation, y: &AffinePermutation) -> Result<Vec<i64>, KlError> {
    check_scale(y)?;
    if !bruhat_leq(x, y) {
        return Ok(Vec::new());
    }
    Ok(r_coxeter(&x.coxeter_part(), &y.coxeter_part()))
}

/// Elements below `y` (same `π` part).
pub fn bruhat_interval(y: &AffinePermutation) -> Result<Vec<AffinePermutation>, KlError> {
    check_scale(y)?;
    let p = y.pi_power();
    let pi = (0..p.unsigned_abs()).fold(AffinePermutation::identity(y.rank()), |acc, _| {
        if p > 0 {
            acc.mul(&AffinePermutation::pi(y.rank()))
        } else {
            acc.mul(&AffinePermutation::pi(y.rank()).inverse())
        }
    });
    let mut out: Vec<AffinePermutation> = lower_interval(&y.coxeter_part()).iter().map(|w| pi.mul(&perm(w))).collect();
    out.sort();
    Ok(out)
}

/// `ω_i`: the longest element of the stabilizer `𝔖_i` of `i`.
pub fn omega_i(i: &[i64]) -> AffinePermutation {
    let l = i.len();
    let mut window = vec![0i64; l];
    let mut k = 0;
    while k < l {
        let e = (k..l).find(|&m| i[m] != i[k]).unwrap_or(l);
        for m in k..e {
            window[m] = (k + e - 1 - m) as i64 + 1;
        }
        k = e;
    }
    AffinePermutation::from_window(window).unwrap()
}

/// Longest element of the finite symmetric group.
pub fn omega(l: usize) -> AffinePermutation {
    AffinePermutation::from_window((1..=l as i64).rev().collect()).unwrap()
}

/// `Q_{ω_i y, ω_i x} = Σ_{z ∈ 𝔖_l, yz ≤ x} (-1)^{l(z)} P_{ω_i yz, ω_i x}`, at `q = v^{-2}`.
pub fn parabolic_kl(i: &[i64], y: &AffinePermutation, x: &AffinePermutation) -> Result<LP, KlError> {
    let wi = omega_i(i);
    let top = wi.mul(x);
    check_scale(&top)?;
    let mut out = LP::zero();
    for z in finite_group(y.rank()) {
        let yz = y.mul(&z);
        if !bruhat_leq(&yz, x) {
            continue;
        }
        let a = wi.mul(&yz);
        if !bruhat_leq(&a, &top) {
            continue;
        }
        let p = kl_polynomial(&a, &top)?;
        if z.length() % 2 == 0 {
            out += p;
        } else {
            out -= p;
        }
    }
    Ok(out)
}

fn lambda_word(lambda: &Partition, l: usize) -> Result<Vec<i64>, KlError> {
    lambda.beta(l).ok_or_else(|| KlError::TooManyParts(lambda.clone(), l))
}

/// `b^-_λ = Σ_{y ≤ x} (-v)^{l(y)-l(x)} v^{-l(y_i)} P̄_{y,x} |λ·x^{-1}y⟩` in `∧^l`.
pub fn b_minus_via_kl(lambda: &Partition, n: usize, l: usize) -> Result<FockVector, KlError> {
    let word = lambda_word(lambda, l)?;
    let (i, x) = alcove_decompose(&word, n);
    let r = rho(l);
    let lx = x.length() as i64;
    let mut out = FockVector::zero();
    for y in bruhat_interval(&x)? {
        let w = y.act(&i, n);
        if !w.windows(2).all(|p| p[0] > p[1]) {
            continue;
        }
        let mu: Vec<i64> = w.iter().zip(&r).map(|(a, b)| a - b).collect();
        if mu.last().map_or(false, |&m| m < 0) {
            continue;
        }
        let ly = y.length() as i64;
        let (_, ymin) = alcove_decompose(&w, n);
        let lyi = ly - ymin.length() as i64;
        let sign = if (ly - lx).rem_euclid(2) == 0 { 1 } else { -1 };
        let c = kl_polynomial_bar(&y, &x)?.shift(ly - lx - lyi).scale(sign);
        let p = word_partition(&w).ok_or_else(|| KlError::NotPartition(w.clone()))?;
        out.add_term(p, c);
    }
    Ok(out)
}

/// `b^+_{(i)xω} = Σ_{y ∈ 𝔖(i,l), y ≤ x} v^{l(x)-l(y)} Q_{ω_i y, ω_i x} ∧x_{(i)yω}` in `∧^l`.
pub fn b_plus_via_kl(lambda: &Partition, n: usize, l: usize) -> Result<FockVector, KlError> {
    let word = lambda_word(lambda, l)?;
    let (i, xmin) = alcove_decompose(&word, n);
    let w0 = omega(l);
    let x = xmin.mul(&w0);
    let r = rho(l);
    let lx = x.length() as i64;
    let mut out = FockVector::zero();
    for y in bruhat_interval(&x)? {
        let yw = y.mul(&w0);
        let w = yw.act(&i, n);
        if !w.windows(2).all(|p| p[0] > p[1]) {
            continue;
        }
        // y ∈ 𝔖(i,l): yω is minimal in its coset
        if alcove_decompose(&w, n).1 != yw {
            continue;
        }
        let mu: Vec<i64> = w.iter().zip(&r).map(|(a, b)| a - b).collect();
        let q = parabolic_kl(&i, &y, &x)?;
        if q.is_zero() {
            continue;
        }
        if mu.last().map_or(false, |&m| m < 0) {
            return Err(KlError::NotPartition(w));
        }
        let p = word_partition(&w).ok_or_else(|| KlError::NotPartition(w.clone()))?;
        out.add_term(p, q.shift(lx - y.length() as i64));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i64]) -> AffinePermutation {
        AffinePermutation::from_window(v.to_vec()).unwrap()
    }

    #[test]
    fn bruhat_small() {
        let e = AffinePermutation::identity(2);
        let s0 = AffinePermutation::s(0, 2);
        let s1 = AffinePermutation::s(1, 2);
        assert!(bruhat_leq(&e, &s0));
        assert!(bruhat_leq(&s1, &s1));
        assert!(!bruhat_leq(&s0, &s1));
        assert!(!bruhat_leq(&s1, &s0));
        assert!(bruhat_leq(&s1, &s1.mul_s(0)));
    }

    #[test]
    fn affine_a1_polynomials_are_one() {
        let mut y = AffinePermutation::identity(2);
        for k in 0..6 {
            y = y.mul_s(k % 2);
            for x in bruhat_interval(&y).unwrap() {
                assert_eq!(kl_polynomial(&x, &y).unwrap(), LP::one());
            }
        }
    }

    #[test]
    fn finite_s3_polynomials_are_one() {
        for y in finite_group(3) {
            for x in finite_group(3) {
                if bruhat_leq(&x, &y) {
                    assert_eq!(kl_polynomial(&x, &y).unwrap(), LP::one());
                }
            }
        }
    }

    #[test]
    fn nontrivial_polynomial_in_affine_a2() {
        // s1 s2 s1 s0 s1 s2 s1 style elements give 1 + q somewhere in affine A2
        let mut found = false;
        let words: [&[usize]; 3] = [&[1, 0, 2, 1], &[0, 1, 2, 0], &[2, 1, 0, 2, 1]];
        for word in words {
            let y = word.iter().fold(AffinePermutation::identity(3), |acc, &j| acc.mul_s(j));
            for x in bruhat_interval(&y).unwrap() {
                let c = kl_q_coeffs(&x, &y).unwrap();
                assert_eq!(c[0], 1);
                found |= c.len() > 1;
            }
        }
        assert!(found);
    }

    #[test]
    fn b_minus_examples() {
        let got = b_minus_via_kl(&"2".parse().unwrap(), 2, 2).unwrap();
        let mut want = FockVector::basis("2".parse().unwrap());
        want.add_term("1,1".parse().unwrap(), LP::monomial(-1, -1));
        assert_eq!(got, want);
        assert_eq!(b_minus_via_kl(&"1".parse().unwrap(), 2, 2).unwrap(), FockVector::basis("1".parse().unwrap()));
        let _ = w(&[1, 2]);
    }
}
