//! Counting over `F_Q` and fitting the counts as polynomials in `Q`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::cache;
use super::field::Fp;
use super::rep::{Graded, Rep};
use super::HallError;
use crate::combinat::multisegment::{dim_add, dimvec_string, DimVec, Multisegment};
use crate::exactring::fit_polynomial_in_q;

/// Enumeration budget: `Q^bound` above this is refused.
const MAX_POINTS: f64 = 5.0e7;

fn flag_string(flag: &[DimVec]) -> String {
    flag.iter().map(dimvec_string).collect::<Vec<_>>().join("|")
}

/// Dimension of the variety of graded flags of type `flag`.
pub fn flag_variety_dim(flag: &[DimVec]) -> usize {
    let mut below = DimVec::new();
    let mut total = 0;
    for step in flag {
        for (i, c) in step {
            total += c * below.get(i).copied().unwrap_or(0);
        }
        below = dim_add(&below, step);
    }
    total
}

fn check_budget(bound: usize, what: &str) -> Result<Vec<u64>, HallError> {
    let primes = cache::primes_for(bound + 1);
    let biggest = primes[bound] as f64;
    if biggest.powi(bound as i32) > MAX_POINTS {
        return Err(HallError::ResourceCap(format!("{} needs Q^{} points", what, bound)));
    }
    Ok(primes[..=bound].to_vec())
}

/// Cartesian product of per-vertex choices.
fn product_of(choices: &[(i64, Vec<Vec<Vec<u64>>>)]) -> Vec<Graded> {
    let mut out: Vec<Graded> = vec![BTreeMap::new()];
    for (i, opts) in choices {
        let mut next = Vec::with_capacity(out.len() * opts.len());
        for g in &out {
            for o in opts {
                let mut h = g.clone();
                if !o.is_empty() {
                    h.insert(*i, o.clone());
                }
                next.push(h);
            }
        }
        out = next;
    }
    out
}

fn count_below(rep: &Rep, f: &Fp, flag: &[DimVec], top: &Graded) -> u128 {
    let Some((_, lower_steps)) = flag.split_last() else { return 1 };
    let mut target = DimVec::new();
    for s in lower_steps {
        target = dim_add(&target, s);
    }
    let img = rep.image(f, top);
    let mut choices = Vec::new();
    for i in rep.vertices() {
        let lower = img.get(&i).cloned().unwrap_or_default();
        let upper = top.get(&i).cloned().unwrap_or_default();
        let want = target.get(&i).copied().unwrap_or(0);
        let opts = f.subspaces_between(&lower, &upper, want);
        if opts.is_empty() {
            return 0;
        }
        choices.push((i, opts));
    }
    product_of(&choices).iter().map(|g| count_below(rep, f, lower_steps, g)).sum()
}

/// Number of flags `0 = F^0 ⊆ F^1 ⊆ ... ⊆ F^r = V` with `dim F^k/F^{k-1} = d^k`
/// and `x(F^k) ⊆ F^{k-1}`, for the representative of `o` over `F_p`.
pub fn count_stable_flags_at(flag: &[DimVec], o: &Multisegment, p: u64) -> u128 {
    let mut total = DimVec::new();
    for s in flag {
        total = dim_add(&total, s);
    }
    if total != o.dim_vector() {
        return 0;
    }
    let rep = Rep::of(o);
    let f = Fp::new(p);
    count_below(&rep, &f, flag, &rep.full())
}

/// [`count_stable_flags_at`] as a polynomial in `Q` (ascending coefficients).
pub fn count_stable_flags(flag: &[DimVec], o: &Multisegment) -> Result<Vec<BigInt>, HallError> {
    let key = format!("v{}|flags|{}|{}|{}", cache::FORMAT_VERSION, o.quiver().tag(), flag_string(flag), o.to_text());
    if let Some(e) = cache::lookup(&key) {
        if let Some(c) = e.get("") {
            return Ok(c.clone());
        }
    }
    let bound = flag_variety_dim(flag);
    let primes = check_budget(bound, "flag count")?;
    let samples: Vec<(u64, BigInt)> =
        primes.par_iter().map(|&p| (p, BigInt::from(count_stable_flags_at(flag, o, p)))).collect();
    let coeffs = fit_polynomial_in_q(&samples, bound)?;
    cache::store(&key, &[(String::new(), coeffs.clone())].into_iter().collect());
    Ok(coeffs)
}

/// x-stable graded subspaces `U` of dimension `a` in the representative of `o`,
/// bucketed by (class of `U`, class of `V/U`).
pub fn sub_quotient_counts_at(a: &DimVec, o: &Multisegment, p: u64) -> BTreeMap<(Multisegment, Multisegment), u128> {
    let rep = Rep::of(o);
    let f = Fp::new(p);
    let mut out = BTreeMap::new();
    let d = o.dim_vector();
    if a.iter().any(|(i, c)| d.get(i).copied().unwrap_or(0) < *c) {
        return out;
    }
    let choices: Vec<(i64, Vec<Vec<Vec<u64>>>)> = rep
        .vertices()
        .into_iter()
        .map(|i| (i, f.subspaces(&rep.vertex_basis(i), a.get(&i).copied().unwrap_or(0))))
        .collect();
    for u in product_of(&choices) {
        if rep.is_stable(&f, &u) {
            let key = (rep.sub_class(&f, &u), rep.quotient_class(&f, &u));
            *out.entry(key).or_insert(0) += 1;
        }
    }
    out
}

/// Fitted counts of stable `U ⊆ V_o` with `dim U = a`, keyed by
/// (sub class, quotient class).
pub fn sub_quotient_counts(a: &DimVec, o: &Multisegment) -> Result<BTreeMap<(Multisegment, Multisegment), Vec<BigInt>>, HallError> {
    let q = o.quiver();
    let key = format!("v{}|prod|{}|{}|{}", cache::FORMAT_VERSION, q.tag(), dimvec_string(a), o.to_text());
    let decode = |e: &cache::Entry| -> Result<BTreeMap<(Multisegment, Multisegment), Vec<BigInt>>, HallError> {
        let mut out = BTreeMap::new();
        for (k, c) in e {
            let (s, t) = k.split_once('/').ok_or_else(|| HallError::Grading(k.clone()))?;
            out.insert((Multisegment::parse(q, s)?, Multisegment::parse(q, t)?), c.clone());
        }
        Ok(out)
    };
    if let Some(e) = cache::lookup(&key) {
        if let Ok(m) = decode(&e) {
            return Ok(m);
        }
    }
    let d = o.dim_vector();
    let bound: usize = a.iter().map(|(i, c)| c * (d.get(i).copied().unwrap_or(0).saturating_sub(*c))).sum();
    let primes = check_budget(bound, "subobject count")?;
    let per_prime: Vec<(u64, BTreeMap<(Multisegment, Multisegment), u128>)> =
        primes.par_iter().map(|&p| (p, sub_quotient_counts_at(a, o, p))).collect();
    let mut keys: Vec<&(Multisegment, Multisegment)> = per_prime.iter().flat_map(|(_, m)| m.keys()).collect();
    keys.sort();
    keys.dedup();
    let mut entry = cache::Entry::new();
    for k in keys {
        let samples: Vec<(u64, BigInt)> =
            per_prime.iter().map(|(p, m)| (*p, BigInt::from(m.get(k).copied().unwrap_or(0)))).collect();
        let coeffs = fit_polynomial_in_q(&samples, bound)?;
        if !coeffs.is_empty() {
            entry.insert(format!("{}/{}", k.0.to_text(), k.1.to_text()), coeffs);
        }
    }
    cache::store(&key, &entry);
    decode(&entry)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::multisegment::{parse_dimvec, unit_dim, Quiver};
    use crate::exactring::eval_q_poly;

    fn ms(n: usize, s: &str) -> Multisegment {
        Multisegment::parse(Quiver::Cyclic(n), s).unwrap()
    }

    #[test]
    fn single_step_counts_zero_rep_only() {
        let d = parse_dimvec("1,1").unwrap();
        assert_eq!(count_stable_flags_at(&[d.clone()], &ms(2, "0:1;1:1"), 3), 1);
        assert_eq!(count_stable_flags_at(&[d], &ms(2, "1:2"), 3), 0);
    }

    #[test]
    fn two_step_flags() {
        let flag = vec![unit_dim(0), unit_dim(1)];
        // F^1 = V_0 must be stable
        for p in [2, 3, 5] {
            assert_eq!(count_stable_flags_at(&flag, &ms(2, "1:2"), p), 1);
            assert_eq!(count_stable_flags_at(&flag, &ms(2, "0:2"), p), 0);
            assert_eq!(count_stable_flags_at(&flag, &ms(2, "0:1;1:1"), p), 1);
        }
    }

    #[test]
    fn grassmannian_count() {
        let o = ms(2, "0:1:2");
        let flag = vec![unit_dim(0), unit_dim(0)];
        let c = count_stable_flags(&flag, &o).unwrap();
        assert_eq!(c, vec![BigInt::from(1), BigInt::from(1)]);
        assert_eq!(eval_q_poly(&c, 13), BigInt::from(count_stable_flags_at(&flag, &o, 13)));
    }

    #[test]
    fn sub_quotient_buckets() {
        let m = sub_quotient_counts_at(&unit_dim(0), &ms(2, "1:2"), 3);
        assert_eq!(m.len(), 1);
        let ((s, t), c) = m.iter().next().unwrap();
        assert_eq!((s, t, *c), (&ms(2, "0:1"), &ms(2, "1:1"), 1));
    }
}
