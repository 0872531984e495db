//! Normal form of `⊗x_j` in `⊗^l / Ω^l`, expanded in strictly decreasing words.
//!
//! Relations used: `(a,a) ≡ 0` (since `(a,a)T = v^-2 (a,a)`), and for
//! `a < b` the pair `(a,b)` does not occur in its own image under `T`, so
//! `(a,b) ≡ -(a,b)T` rewrites it into strictly smaller material.

use std::collections::HashMap;
use std::sync::RwLock;

use once_cell::sync::Lazy;

use super::tensor::{pair_rule, TensorVector, Word};
use super::HeckeError;
use crate::exactring::LinComb;

static INSERT_MEMO: Lazy<RwLock<HashMap<(usize, Word, i64), TensorVector>>> = Lazy::new(|| RwLock::new(HashMap::new()));

/// Depth cap `10 · l · spread`.
pub fn rewrite_cap(word: &[i64]) -> usize {
    let spread = match (word.iter().max(), word.iter().min()) {
        (Some(a), Some(b)) => (a - b + 1) as usize,
        _ => 1,
    };
    10 * word.len().max(1) * spread
}

/// Class of `u ⊗ x_x` where `u` is strictly decreasing.
fn insert(u: &[i64], x: i64, n: usize, depth: usize, cap: usize) -> Result<TensorVector, HeckeError> {
    match u.last() {
        None => return Ok(TensorVector::basis(vec![x])),
        Some(&a) if a > x => {
            let mut w = u.to_vec();
            w.push(x);
            return Ok(TensorVector::basis(w));
        }
        Some(&a) if a == x => return Ok(TensorVector::zero()),
        _ => {}
    }
    let key = (n, u.to_vec(), x);
    if let Some(v) = INSERT_MEMO.read().unwrap().get(&key) {
        return Ok(v.clone());
    }
    if depth > cap {
        return Err(HeckeError::StraightenCap { word: [u, &[x]].concat(), cap });
    }
    let a = *u.last().unwrap();
    let prefix = &u[..u.len() - 1];
    let mut out = TensorVector::zero();
    for ((a1, b1), c) in pair_rule(a, x, n) {
        if (a1, b1) == (a, x) {
            return Err(HeckeError::SelfTerm(a, x));
        }
        let c = -c;
        for (w, c2) in insert(prefix, a1, n, depth + 1, cap)?.iter() {
            let coeff = &c * c2;
            out.add_scaled(&insert(w, b1, n, depth + 1, cap)?, &coeff);
        }
    }
    INSERT_MEMO.write().unwrap().entry(key).or_insert_with(|| out.clone());
    Ok(out)
}

/// Expands `∧x_word` in the basis of strictly decreasing words.
pub fn straighten(word: &[i64], n: usize) -> Result<TensorVector, HeckeError> {
    let cap = rewrite_cap(word);
    let mut acc = TensorVector::basis(Vec::new());
    for &x in word {
        let mut next = TensorVector::zero();
        for (u, c) in acc.iter() {
            next.add_scaled(&insert(u, x, n, 0, cap)?, c);
        }
        acc = next;
    }
    Ok(acc)
}

/// Linear extension of [`straighten`].
pub fn straighten_vector(t: &TensorVector, n: usize) -> Result<TensorVector, HeckeError> {
    let mut out = LinComb::zero();
    for (w, c) in t.iter() {
        out.add_scaled(&straighten(w, n)?, c);
    }
    Ok(out)
}

pub fn is_normal(word: &[i64]) -> bool {
    word.windows(2).all(|w| w[0] > w[1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactring::LaurentPolynomial as LP;

    #[test]
    fn small_examples() {
        assert!(straighten(&[0, 0], 2).unwrap().is_zero());
        assert_eq!(straighten(&[-1, 0], 2).unwrap(), TensorVector::single(vec![0, -1], -LP::v_pow(-1)));
        let mut want = TensorVector::single(vec![2, -1], -LP::v_pow(-1));
        want.add_term(vec![1, 0], LP::from_terms([(0, -1), (-2, 1)]));
        assert_eq!(straighten(&[-1, 2], 2).unwrap(), want);
        assert_eq!(straighten(&[2, -1], 2).unwrap(), TensorVector::basis(vec![2, -1]));
    }

    #[test]
    fn preserves_sum_and_residues() {
        for w in [[3, -2, 1], [-4, 4, 0], [1, 1, 5], [-3, 2, 2]] {
            let s = straighten(&w, 3).unwrap();
            let sum: i64 = w.iter().sum();
            let mut res: Vec<i64> = w.iter().map(|a| a.rem_euclid(3)).collect();
            res.sort();
            for (u, _) in s.iter() {
                assert!(is_normal(u));
                assert_eq!(u.iter().sum::<i64>(), sum);
                let mut r: Vec<i64> = u.iter().map(|a| a.rem_euclid(3)).collect();
                r.sort();
                assert_eq!(r, res);
            }
        }
    }
}
