//! Action of the Hall algebra on the semi-infinite wedge.
//!
//! Primary route: expand in monomials of the generators `f_α` and apply
//! them on wedges. Second route: `x|λ⟩ = Σ_d γ_d(x) k_{d'}|λ⟩`, where the
//! linear generators act through the ℤ-colored operators `f_i`.

use super::algebra::{components, to_monomials, HallVector, MonoVector};
use super::gamma::gamma_of_monomials;
use super::HallError;
use crate::combinat::multisegment::{dim_total, DimVec, Quiver};
use crate::combinat::partition::residue_data;
use crate::exactring::LaurentPolynomial as LP;
use crate::heckewedge::fock::{f_alpha, f_color, FockVector, Space};

fn alpha_of(step: &DimVec, n: usize) -> Vec<usize> {
    let mut a = vec![0; n];
    for (&i, &c) in step {
        a[i.rem_euclid(n as i64) as usize] += c;
    }
    a
}

/// `f_{d^1} ∘ ... ∘ f_{d^r}` on a Fock vector (the last step acts first).
pub fn monomial_action(flag: &[DimVec], f: &FockVector, n: usize) -> Result<FockVector, HallError> {
    monomial_action_in(Space::SemiInfinite, flag, f, n)
}

/// [`monomial_action`] on `∧^l` or the semi-infinite wedge.
pub fn monomial_action_in(space: Space, flag: &[DimVec], f: &FockVector, n: usize) -> Result<FockVector, HallError> {
    let mut cur = f.clone();
    for step in flag.iter().rev() {
        cur = f_alpha(space, &alpha_of(step, n), &cur, n)?;
        if cur.is_zero() {
            break;
        }
    }
    Ok(cur)
}

pub fn mono_vector_action(space: Space, m: &MonoVector, f: &FockVector, n: usize) -> Result<FockVector, HallError> {
    let mut out = FockVector::zero();
    for (flag, c) in m.iter() {
        out.add_scaled(&monomial_action_in(space, flag, f, n)?, c);
    }
    Ok(out)
}

/// Action of a cyclic-quiver Hall element on the Fock space.
pub fn hall_fock_action(u: &HallVector, f: &FockVector, n: usize) -> Result<FockVector, HallError> {
    hall_fock_action_in(Space::SemiInfinite, u, f, n)
}

/// [`hall_fock_action`] on `∧^l` or the semi-infinite wedge.
pub fn hall_fock_action_in(space: Space, u: &HallVector, f: &FockVector, n: usize) -> Result<FockVector, HallError> {
    for (q, _) in components(u).keys() {
        if *q != Quiver::Cyclic(n) {
            return Err(HallError::Grading(format!("expected the cyclic quiver with {} vertices", n)));
        }
    }
    mono_vector_action(space, &to_monomials(u)?, f, n)
}

/// Linear semisimple generator: `f_d = f_{i_1} ... f_{i_k}` with `i_1 < ... < i_k`,
/// zero if some `d_i ≥ 2`.
fn linear_generator(step: &DimVec, f: &FockVector) -> FockVector {
    if step.values().any(|&c| c >= 2) {
        return FockVector::zero();
    }
    let mut cur = f.clone();
    for &i in step.keys().rev() {
        cur = f_color(i, &cur);
        if cur.is_zero() {
            break;
        }
    }
    cur
}

pub fn linear_monomial_action(flag: &[DimVec], f: &FockVector) -> FockVector {
    let mut cur = f.clone();
    for step in flag.iter().rev() {
        cur = linear_generator(step, &cur);
        if cur.is_zero() {
            break;
        }
    }
    cur
}

/// ℤ-graded lifts of `dbar` supported in `[lo, hi]`.
fn window_lifts(dbar: &DimVec, lo: i64, hi: i64, n: usize) -> Vec<DimVec> {
    let mut out = vec![DimVec::new()];
    for (&r, &c) in dbar {
        let slots: Vec<i64> = (lo..=hi).filter(|i| i.rem_euclid(n as i64) == r).collect();
        let mut dists = Vec::new();
        compositions(c, &slots, 0, DimVec::new(), &mut dists);
        out = out
            .iter()
            .flat_map(|x| {
                dists.iter().map(move |y| {
                    let mut z = x.clone();
                    z.extend(y.iter().map(|(k, v)| (*k, *v)));
                    z
                })
            })
            .collect();
    }
    out
}

fn compositions(left: usize, slots: &[i64], idx: usize, cur: DimVec, out: &mut Vec<DimVec>) {
    if left == 0 {
        out.push(cur);
        return;
    }
    if idx == slots.len() {
        return;
    }
    for take in 0..=left {
        let mut next = cur.clone();
        if take > 0 {
            next.insert(slots[idx], take);
        }
        compositions(left - take, slots, idx + 1, next, out);
    }
}

/// `Σ_i d'_i n_i(λ)` with `d'_i = Σ_{j<i, j≡i} d_j`.
fn k_exponent(d: &DimVec, ni: &std::collections::BTreeMap<i64, i64>, n: usize) -> i64 {
    let n = n as i64;
    ni.iter()
        .map(|(&i, &c)| {
            let dp: i64 = d.iter().filter(|(&j, _)| j < i && (i - j) % n == 0).map(|(_, &x)| x as i64).sum();
            dp * c
        })
        .sum()
}

/// The same action computed through γ and the ℤ-colored operators.
pub fn hall_fock_action_gamma(u: &HallVector, f: &FockVector, n: usize) -> Result<FockVector, HallError> {
    let mut out = FockVector::zero();
    for ((q, dbar), piece) in components(u) {
        if q != Quiver::Cyclic(n) {
            return Err(HallError::Grading(format!("expected the cyclic quiver with {} vertices", n)));
        }
        let mono = to_monomials(&piece)?;
        let size = dim_total(&dbar) as i64;
        for (lambda, c) in f.iter() {
            let rd = residue_data(lambda, n);
            let lo = -(lambda.len() as i64) - size;
            let hi = lambda.part(1) as i64 + size;
            let basis = FockVector::basis(lambda.clone());
            for d in window_lifts(&dbar, lo, hi, n) {
                let g = gamma_of_monomials(&d, &mono, n);
                if g.is_zero() {
                    continue;
                }
                let k = LP::v_pow(k_exponent(&d, &rd.ni, n));
                for (flag, cg) in g.iter() {
                    let img = linear_monomial_action(flag, &basis);
                    if !img.is_zero() {
                        out.add_scaled(&img, &(&(c * cg) * &k));
                    }
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::multisegment::{unit_dim, Multisegment};
    use crate::combinat::Partition;

    #[test]
    fn generator_on_vacuum_both_routes() {
        let u = HallVector::basis(Multisegment::zero_rep(Quiver::Cyclic(2), &unit_dim(0)));
        let e = FockVector::basis(Partition::empty());
        let want = FockVector::basis("1".parse().unwrap());
        assert_eq!(hall_fock_action(&u, &e, 2).unwrap(), want);
        assert_eq!(hall_fock_action_gamma(&u, &e, 2).unwrap(), want);
        let unit = HallVector::basis(Multisegment::empty(Quiver::Cyclic(2)));
        assert_eq!(hall_fock_action(&unit, &e, 2).unwrap(), e);
    }

    #[test]
    fn canonical_seed_weight_two() {
        let q = Quiver::Cyclic(2);
        let c = super::super::algebra::hall_canonical(q, &crate::combinat::multisegment::parse_dimvec("1,1").unwrap()).unwrap();
        let e = FockVector::basis(Partition::empty());
        let got = hall_fock_action(&c.tilde[&Multisegment::parse(q, "0:2").unwrap()], &e, 2).unwrap();
        let mut want = FockVector::basis("2".parse().unwrap());
        want.add_term("1,1".parse().unwrap(), LP::v_pow(1));
        assert_eq!(got, want);
        let other = hall_fock_action_gamma(&c.tilde[&Multisegment::parse(q, "0:2").unwrap()], &e, 2).unwrap();
        assert_eq!(other, want);
    }
}
