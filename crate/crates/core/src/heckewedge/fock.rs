//! Wedge spaces in the partition basis, the generators `f_α`, and the
//! Hayashi action.

use super::tensor::{TensorVector, Word};
use super::HeckeError;
use crate::combinat::partition::{color, residue, residue_data};
use crate::combinat::Partition;
use crate::exactring::{LaurentPolynomial as LP, LinComb};

pub type FockVector = LinComb<Partition>;

/// `∧^l` for a fixed `l`, or the semi-infinite wedge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Space {
    Finite(usize),
    SemiInfinite,
}

impl Space {
    /// Whether `|λ⟩` exists in this space.
    pub fn contains(&self, lambda: &Partition) -> bool {
        match self {
            Space::Finite(l) => lambda.len() <= *l,
            Space::SemiInfinite => true,
        }
    }
}

/// `λ + ρ` of length `l`.
pub fn partition_word(lambda: &Partition, l: usize) -> Option<Word> {
    lambda.beta(l)
}

/// Inverse of [`partition_word`]; `None` when the word does not come from a partition.
pub fn word_partition(word: &[i64]) -> Option<Partition> {
    if !word.windows(2).all(|w| w[0] > w[1]) {
        return None;
    }
    Partition::from_beta(word)
}

/// `n(ε_x, ε_y)` on the cyclic quiver.
fn n_form(x: usize, y: usize, n: usize) -> i64 {
    i64::from((x + 1) % n == y) - i64::from(x == y)
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (idx, &first) in items.iter().enumerate() {
        for mut rest in combinations(&items[idx + 1..], k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `f_α(∧x_i)` on a strictly decreasing word.
pub fn f_alpha_word(word: &[i64], alpha: &[usize], n: usize) -> TensorVector {
    let res: Vec<usize> = word.iter().map(|&a| residue(a, n)).collect();
    let mut choices: Vec<Vec<usize>> = vec![Vec::new()];
    for r in 0..n {
        let need = alpha.get(r).copied().unwrap_or(0);
        let pos: Vec<usize> = (0..word.len()).filter(|&s| res[s] == r).collect();
        let combos = combinations(&pos, need);
        let mut next = Vec::new();
        for c in &choices {
            for extra in &combos {
                let mut v = c.clone();
                v.extend_from_slice(extra);
                next.push(v);
            }
        }
        choices = next;
        if choices.is_empty() {
            return TensorVector::zero();
        }
    }
    let mut out = TensorVector::zero();
    for raised in choices {
        let mut flag = vec![false; word.len()];
        for &s in &raised {
            flag[s] = true;
        }
        let new: Word = word.iter().zip(&flag).map(|(a, f)| a + i64::from(*f)).collect();
        if !new.windows(2).all(|w| w[0] > w[1]) {
            continue;
        }
        let mut c = 0i64;
        for t in 0..word.len() {
            if !flag[t] {
                continue;
            }
            for s in 0..t {
                if !flag[s] {
                    c -= n_form(res[t], res[s], n);
                }
            }
        }
        out.add_term(new, LP::v_pow(c));
    }
    out
}

pub fn f_alpha_tensor(t: &TensorVector, alpha: &[usize], n: usize) -> TensorVector {
    t.apply(|w| f_alpha_word(w, alpha, n))
}

fn f_alpha_at(lambda: &Partition, l: usize, alpha: &[usize], n: usize) -> Result<FockVector, HeckeError> {
    let word = partition_word(lambda, l).ok_or(HeckeError::TooManyParts(lambda.clone(), l))?;
    let mut out = FockVector::zero();
    for (w, c) in f_alpha_word(&word, alpha, n).iter() {
        let mu = word_partition(w).ok_or_else(|| HeckeError::LeavesWedge(w.clone()))?;
        out.add_term(mu, c.clone());
    }
    Ok(out)
}

/// Window used for the semi-infinite action of `f_α` on `|λ⟩`.
pub fn semiinfinite_window(lambda: &Partition, alpha: &[usize], n: usize) -> usize {
    let size: usize = alpha.iter().sum();
    let need = lambda.part(1) + lambda.len() + n * size;
    n * need.div_ceil(n).max(1)
}

/// `f_α` on `∧^l` or on the semi-infinite wedge.
pub fn f_alpha(space: Space, alpha: &[usize], f: &FockVector, n: usize) -> Result<FockVector, HeckeError> {
    let mut out = FockVector::zero();
    for (lambda, c) in f.iter() {
        let img = match space {
            Space::Finite(l) => f_alpha_at(lambda, l, alpha, n)?,
            Space::SemiInfinite => {
                let l = semiinfinite_window(lambda, alpha, n);
                let a = f_alpha_at(lambda, l, alpha, n)?;
                let b = f_alpha_at(lambda, l + n, alpha, n)?;
                if a != b {
                    return Err(HeckeError::Unstable(format!("f_alpha at {}", lambda)));
                }
                a
            }
        };
        out.add_scaled(&img, c);
    }
    Ok(out)
}

/// Which Hayashi generator to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HayashiKind {
    E,
    F,
    K,
    KInv,
}

/// Hayashi action of `e_ī`, `f_ī`, `k_ī^{±1}` on the semi-infinite wedge.
pub fn hayashi_action(kind: HayashiKind, r: usize, f: &FockVector, n: usize) -> FockVector {
    f.apply(|lambda| {
        let rd = residue_data(lambda, n);
        let mut out = FockVector::zero();
        match kind {
            HayashiKind::F => {
                for (row, col) in lambda.addable() {
                    let i = color(row, col);
                    if residue(i, n) == r {
                        out.add_term(lambda.add_box(row).unwrap(), LP::v_pow(rd.n_plus(i)));
                    }
                }
            }
            HayashiKind::E => {
                for (row, col) in lambda.removable() {
                    let i = color(row, col);
                    if residue(i, n) == r {
                        out.add_term(lambda.remove_box(row).unwrap(), LP::v_pow(-rd.n_minus(i)));
                    }
                }
            }
            HayashiKind::K => out.add_term(lambda.clone(), LP::v_pow(rd.n_class(r))),
            HayashiKind::KInv => out.add_term(lambda.clone(), LP::v_pow(-rd.n_class(r))),
        }
        out
    })
}

/// The integer-colored `f_i`: add the box of color `i` if possible.
pub fn f_color(i: i64, f: &FockVector) -> FockVector {
    f.apply(|lambda| {
        let mut out = FockVector::zero();
        for (row, col) in lambda.addable() {
            if color(row, col) == i {
                out.add_term(lambda.add_box(row).unwrap(), LP::one());
            }
        }
        out
    })
}

/// Restriction to `∧^l`: drops partitions with more than `l` parts.
pub fn restrict(space: Space, f: &FockVector) -> FockVector {
    f.iter().filter(|(k, _)| space.contains(k)).map(|(k, c)| (k.clone(), c.clone())).collect()
}

/// Unit vector `ε_r` of length `n`.
pub fn unit_alpha(r: usize, n: usize) -> Vec<usize> {
    let mut a = vec![0; n];
    a[r % n] += 1;
    a
}
