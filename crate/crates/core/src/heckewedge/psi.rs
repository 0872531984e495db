//! The semilinear involution ψ on wedges.

use super::fock::{partition_word, word_partition, FockVector, Space};
use super::straighten::{is_normal, straighten};
use super::tensor::TensorVector;
use super::HeckeError;
use crate::combinat::affine::omega_upper_length;
use crate::exactring::LaurentPolynomial as LP;

/// `ψ(∧x_w) = (-1)^{l(ω)} v^{l(ω^i)} ∧x_{reverse(w)}` for a strictly decreasing word.
pub fn psi_word(word: &[i64], n: usize) -> Result<TensorVector, HeckeError> {
    if !is_normal(word) {
        return Err(HeckeError::NotNormal(word.to_vec()));
    }
    let l = word.len();
    let lw = l * l.saturating_sub(1) / 2;
    let sign = if lw % 2 == 0 { 1 } else { -1 };
    let coeff = LP::monomial(omega_upper_length(word, n) as i64, sign);
    let rev: Vec<i64> = word.iter().rev().copied().collect();
    Ok(straighten(&rev, n)?.scale(&coeff))
}

/// Semilinear extension of [`psi_word`] to combinations of normal words.
pub fn psi_finite(t: &TensorVector, n: usize) -> Result<TensorVector, HeckeError> {
    let mut out = TensorVector::zero();
    for (w, c) in t.iter() {
        out.add_scaled(&psi_word(w, n)?, &c.bar());
    }
    Ok(out)
}

fn psi_partition_at(lambda: &crate::combinat::Partition, l: usize, n: usize) -> Result<FockVector, HeckeError> {
    let word = partition_word(lambda, l).ok_or(HeckeError::TooManyParts(lambda.clone(), l))?;
    let mut out = FockVector::zero();
    for (w, c) in psi_word(&word, n)?.iter() {
        let mu = word_partition(w).ok_or_else(|| HeckeError::LeavesWedge(w.clone()))?;
        out.add_term(mu, c.clone());
    }
    Ok(out)
}

/// ψ on `∧^l` (finite) or on the semi-infinite wedge, in the partition basis.
pub fn psi(space: Space, f: &FockVector, n: usize) -> Result<FockVector, HeckeError> {
    let mut out = FockVector::zero();
    for (lambda, c) in f.iter() {
        let img = match space {
            Space::Finite(l) => psi_partition_at(lambda, l, n)?,
            Space::SemiInfinite => {
                let l = lambda.weight().max(1);
                let a = psi_partition_at(lambda, l, n)?;
                let b = psi_partition_at(lambda, l + n, n)?;
                if a != b {
                    return Err(HeckeError::Unstable(format!("psi at {}", lambda)));
                }
                a
            }
        };
        out.add_scaled(&img, &c.bar());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::Partition;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn length_one_and_two() {
        assert_eq!(psi_word(&[5], 3).unwrap(), TensorVector::basis(vec![5]));
        assert_eq!(psi_word(&[0, -1], 2).unwrap(), TensorVector::basis(vec![0, -1]));
    }

    #[test]
    fn fock_examples() {
        let e = FockVector::basis(Partition::empty());
        assert_eq!(psi(Space::SemiInfinite, &e, 2).unwrap(), e);
        let one = FockVector::basis(p("1"));
        assert_eq!(psi(Space::SemiInfinite, &one, 2).unwrap(), one);
        let mut want = FockVector::basis(p("2"));
        want.add_term(p("1,1"), LP::from_terms([(1, 1), (-1, -1)]));
        assert_eq!(psi(Space::SemiInfinite, &FockVector::basis(p("2")), 2).unwrap(), want);
    }

    #[test]
    fn involutive_small() {
        for n in [2, 3] {
            for w in 0..5 {
                for lambda in crate::combinat::partitions_of(w, None) {
                    let f = FockVector::single(lambda.clone(), LP::from_terms([(1, 2), (-3, 1)]));
                    let g = psi(Space::SemiInfinite, &psi(Space::SemiInfinite, &f, n).unwrap(), n).unwrap();
                    assert_eq!(g, f, "n={} λ={}", n, lambda);
                }
            }
        }
    }
}
