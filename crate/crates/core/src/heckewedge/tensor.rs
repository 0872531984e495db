//! The affine Hecke algebra acting on the right of `⊗^l`.

use std::collections::HashMap;
use std::sync::RwLock;

use once_cell::sync::Lazy;

use super::HeckeError;
use crate::exactring::{LaurentPolynomial as LP, LinComb};

pub type Word = Vec<i64>;
pub type TensorVector = LinComb<Word>;

type PairImage = Vec<((i64, i64), LP)>;

static PAIR_RULES: Lazy<RwLock<HashMap<(usize, i64, i64), PairImage>>> = Lazy::new(|| RwLock::new(HashMap::new()));

/// `a = a0 + p n` with `a0` in `(-n, 0]`.
pub(crate) fn split(a: i64, n: usize) -> (i64, i64) {
    let n = n as i64;
    let a0 = -((-a).rem_euclid(n));
    (a0, (a - a0) / n)
}

fn in_window_rule(a: i64, b: i64) -> Vec<((i64, i64), LP)> {
    use std::cmp::Ordering::*;
    match a.cmp(&b) {
        Equal => vec![((a, a), LP::v_pow(-2))],
        Less => vec![((b, a), LP::v_pow(-1))],
        Greater => vec![((b, a), LP::v_pow(-1)), ((a, b), LP::from_terms([(-2, 1), (0, -1)]))],
    }
}

fn compute_pair(a: i64, b: i64, n: usize) -> PairImage {
    let (a0, p) = split(a, n);
    let (b0, r) = split(b, n);
    let nn = n as i64;
    let mut acc: LinComb<(i64, i64)> = LinComb::zero();
    // push the translations through T: X-shifts swap sides
    for ((x, y), c) in in_window_rule(a0, b0) {
        acc.add_term((x + r * nn, y + p * nn), c);
    }
    let one_minus = LP::from_terms([(0, 1), (-2, -1)]);
    if r > p {
        for k in 0..(r - p) {
            acc.add_term((a0 + (r - k) * nn, b0 + (p + k) * nn), one_minus.clone());
        }
    } else if p > r {
        for k in 0..(p - r) {
            acc.add_term((a0 + (p - k) * nn, b0 + (r + k) * nn), -&one_minus);
        }
    }
    acc.into_map().into_iter().collect()
}

/// `(x_a ⊗ x_b) T`, memoized per `(n, a, b)`.
pub fn pair_rule(a: i64, b: i64, n: usize) -> PairImage {
    let key = (n, a, b);
    if let Some(v) = PAIR_RULES.read().unwrap().get(&key) {
        return v.clone();
    }
    let v = compute_pair(a, b, n);
    PAIR_RULES.write().unwrap().entry(key).or_insert_with(|| v.clone());
    v
}

/// Right action of `T_k` (`1 ≤ k < l`) on a single word.
pub fn word_apply_t(word: &[i64], k: usize, n: usize) -> Result<TensorVector, HeckeError> {
    let l = word.len();
    if k == 0 || k >= l {
        return Err(HeckeError::GeneratorOutOfRange { k, l });
    }
    let mut out = TensorVector::zero();
    for ((x, y), c) in pair_rule(word[k - 1], word[k], n) {
        let mut w = word.to_vec();
        w[k - 1] = x;
        w[k] = y;
        out.add_term(w, c);
    }
    Ok(out)
}

pub fn tensor_apply_t(t: &TensorVector, k: usize, n: usize) -> Result<TensorVector, HeckeError> {
    let mut out = TensorVector::zero();
    for (w, c) in t.iter() {
        out.add_scaled(&word_apply_t(w, k, n)?, c);
    }
    Ok(out)
}

/// `T_k^{-1} = v^2 T_k + (v^2 - 1)`.
pub fn tensor_apply_t_inv(t: &TensorVector, k: usize, n: usize) -> Result<TensorVector, HeckeError> {
    let mut out = tensor_apply_t(t, k, n)?.scale(&LP::v_pow(2));
    out.add_scaled(t, &LP::from_terms([(2, 1), (0, -1)]));
    Ok(out)
}

/// `X_j^{-1}` adds `n` to entry `j` (`sign = -1`); `X_j` subtracts it (`sign = +1`).
pub fn tensor_apply_x(t: &TensorVector, j: usize, sign: i32, n: usize) -> Result<TensorVector, HeckeError> {
    let shift = if sign >= 0 { -(n as i64) } else { n as i64 };
    let mut out = TensorVector::zero();
    for (w, c) in t.iter() {
        if j == 0 || j > w.len() {
            return Err(HeckeError::PositionOutOfRange { j, l: w.len() });
        }
        let mut w = w.clone();
        w[j - 1] += shift;
        out.add_term(w, c.clone());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tv(w: &[i64]) -> TensorVector {
        TensorVector::basis(w.to_vec())
    }

    #[test]
    fn in_window_cases() {
        assert_eq!(tensor_apply_t(&tv(&[0, 0]), 1, 2).unwrap(), TensorVector::single(vec![0, 0], LP::v_pow(-2)));
        assert_eq!(tensor_apply_t(&tv(&[-1, 0]), 1, 2).unwrap(), TensorVector::single(vec![0, -1], LP::v_pow(-1)));
    }

    #[test]
    fn out_of_window_example() {
        let got = tensor_apply_t(&tv(&[-1, 2]), 1, 2).unwrap();
        let mut want = TensorVector::single(vec![2, -1], LP::v_pow(-1));
        want.add_term(vec![1, 0], LP::from_terms([(0, 1), (-2, -1)]));
        assert_eq!(got, want);
    }

    #[test]
    fn x_shifts() {
        assert_eq!(tensor_apply_x(&tv(&[0, -1]), 2, -1, 2).unwrap(), tv(&[0, 1]));
        let t = tv(&[3, -4, 1]);
        assert_eq!(tensor_apply_x(&tensor_apply_x(&t, 2, 1, 3).unwrap(), 2, -1, 3).unwrap(), t);
        assert_eq!(tensor_apply_x(&tv(&[0]), 1, -1, 3).unwrap(), tv(&[3]));
    }

    #[test]
    fn inverse_undoes() {
        let t = tv(&[2, -3, 1]);
        for k in 1..3 {
            let u = tensor_apply_t_inv(&tensor_apply_t(&t, k, 3).unwrap(), k, 3).unwrap();
            assert_eq!(u, t);
        }
    }
}
