//! The map γ_d from the cyclic-quiver Hall algebra to the linear one.
//!
//! On monomials, with `f_𝐝 = v^{M(𝐝)} f_{d^1} ∘ ... ∘ f_{d^r}`,
//! `γ_d(f_𝐝̄) = Σ_{𝐝} v^{h(d) - 2r(𝐝)} f_𝐝` over the ℤ-graded lifts `𝐝` of `𝐝̄`
//! with total dimension `d`.

use super::algebra::{components, flag_twist, from_monomials, to_monomials, FlagType, HallVector, MonoVector};
use super::HallError;
use crate::combinat::multisegment::{enumerate_multisegments, DimVec, Multisegment, Quiver};
use crate::combinat::partition::residue;
use crate::exactring::LaurentPolynomial as LP;

fn get(d: &DimVec, i: i64) -> i64 {
    d.get(&i).copied().unwrap_or(0) as i64
}

fn same_class(i: i64, j: i64, n: usize) -> bool {
    (i - j).rem_euclid(n as i64) == 0
}

/// `h(d) = Σ_{i<j, ī=j̄} d_i (d_{j+1} - d_j)`.
pub fn h_form(d: &DimVec, n: usize) -> i64 {
    let mut s = 0;
    for (&i, &di) in d {
        // j ranges over the support of d and of its shift by one
        let mut js: Vec<i64> = d.keys().flat_map(|&k| [k, k - 1]).filter(|&j| j > i && same_class(i, j, n)).collect();
        js.sort();
        js.dedup();
        for j in js {
            s += di as i64 * (get(d, j + 1) - get(d, j));
        }
    }
    s
}

/// `k(b,a) = Σ_{i>j, ī=j̄} b_i (2a_j - a_{j-1} - a_{j+1})`.
pub fn k_form(b: &DimVec, a: &DimVec, n: usize) -> i64 {
    let mut s = 0;
    for (&i, &bi) in b {
        let mut js: Vec<i64> = a.keys().flat_map(|&k| [k - 1, k, k + 1]).filter(|&j| j < i && same_class(i, j, n)).collect();
        js.sort();
        js.dedup();
        for j in js {
            s += bi as i64 * (2 * get(a, j) - get(a, j - 1) - get(a, j + 1));
        }
    }
    s
}

/// `r(𝐝) = Σ_{k>l} Σ_{i>j, ī=j̄} d^k_j d^l_{i+1} + Σ_{k<l} Σ_{i>j, ī=j̄} d^k_j d^l_i`.
pub fn r_form(flag: &[DimVec], n: usize) -> i64 {
    let mut s = 0;
    for (k, dk) in flag.iter().enumerate() {
        for (l, dl) in flag.iter().enumerate() {
            if k == l {
                continue;
            }
            for (&j, &x) in dk {
                for (&t, &y) in dl {
                    // k > l pairs d^l at index t = i + 1, k < l at index t = i
                    let i = if k > l { t - 1 } else { t };
                    if i > j && same_class(i, j, n) {
                        s += (x * y) as i64;
                    }
                }
            }
        }
    }
    s
}

/// Reduction of a ℤ-graded dimension vector mod `n`.
pub fn reduce_dim(d: &DimVec, n: usize) -> DimVec {
    let mut out = DimVec::new();
    for (&i, &c) in d {
        *out.entry(residue(i, n) as i64).or_insert(0) += c;
    }
    out.retain(|_, c| *c > 0);
    out
}

/// Reduction of a linear multisegment mod `n`.
pub fn reduce_multisegment(o: &Multisegment, n: usize) -> Multisegment {
    Multisegment::from_segments(Quiver::Cyclic(n), o.segments()).expect("valid segments")
}

/// Linear orbits of dimension `d` reducing to `o`.
pub fn linear_lifts(o: &Multisegment, d: &DimVec) -> Vec<Multisegment> {
    let Quiver::Cyclic(n) = o.quiver() else { return Vec::new() };
    enumerate_multisegments(d, Quiver::Linear).into_iter().filter(|x| &reduce_multisegment(x, n) == o).collect()
}

/// Lifts `e ≤ rem` of a single cyclic step `s`.
fn step_lifts(s: &DimVec, rem: &DimVec, n: usize) -> Vec<DimVec> {
    let mut out = vec![DimVec::new()];
    for (&r, &c) in s {
        let slots: Vec<(i64, usize)> = rem.iter().filter(|(i, _)| residue(**i, n) as i64 == r).map(|(i, c)| (*i, *c)).collect();
        let mut next = Vec::new();
        for partial in &out {
            distribute(c, &slots, 0, partial.clone(), &mut next);
        }
        out = next;
    }
    out
}

fn distribute(left: usize, slots: &[(i64, usize)], idx: usize, cur: DimVec, out: &mut Vec<DimVec>) {
    if left == 0 {
        out.push(cur);
        return;
    }
    if idx == slots.len() {
        return;
    }
    let (i, cap) = slots[idx];
    for take in 0..=left.min(cap) {
        let mut next = cur.clone();
        if take > 0 {
            next.insert(i, take);
        }
        distribute(left - take, slots, idx + 1, next, out);
    }
}

/// All ℤ-graded lifts of the cyclic flag with total dimension `d`.
pub fn flag_lifts(flag: &[DimVec], d: &DimVec, n: usize) -> Vec<FlagType> {
    fn rec(flag: &[DimVec], rem: &DimVec, n: usize, cur: &mut FlagType, out: &mut Vec<FlagType>) {
        let Some((first, rest)) = flag.split_first() else {
            if rem.is_empty() {
                out.push(cur.clone());
            }
            return;
        };
        for e in step_lifts(first, rem, n) {
            let next = crate::combinat::multisegment::dim_sub(rem, &e).expect("lift within budget");
            cur.push(e);
            rec(rest, &next, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(flag, d, n, &mut Vec::new(), &mut out);
    out
}

/// γ_d on a combination of cyclic monomials, as linear monomials.
pub fn gamma_of_monomials(d: &DimVec, m: &MonoVector, n: usize) -> MonoVector {
    let h = h_form(d, n);
    let mut out = MonoVector::zero();
    for (flag, c) in m.iter() {
        let mbar = flag_twist(Quiver::Cyclic(n), flag);
        for lift in flag_lifts(flag, d, n) {
            let e = mbar + h - 2 * r_form(&lift, n) - flag_twist(Quiver::Linear, &lift);
            out.add_term(lift, c.shift(e));
        }
    }
    out
}

fn check_degree(d: &DimVec, f: &HallVector, n: usize) -> Result<(), HallError> {
    let want = reduce_dim(d, n);
    for (q, dbar) in components(f).keys() {
        if *q != Quiver::Cyclic(n) || *dbar != want {
            return Err(HallError::Grading(format!("γ_d needs degree {:?}, got {:?}", want, dbar)));
        }
    }
    Ok(())
}

/// γ_d(f) as linear monomials.
pub fn gamma_monomials(d: &DimVec, f: &HallVector, n: usize) -> Result<MonoVector, HallError> {
    check_degree(d, f, n)?;
    Ok(gamma_of_monomials(d, &to_monomials(f)?, n))
}

/// γ_d(f) in the orbit basis of the linear quiver.
pub fn gamma_map(d: &DimVec, f: &HallVector, n: usize) -> Result<HallVector, HallError> {
    from_monomials(Quiver::Linear, &gamma_monomials(d, f, n)?)
}

/// The twisted sum `Σ_{a+b=d} v^{-k(b,a)} γ_a(f) ∘ γ_b(g)` in linear monomials,
/// with `f`, `g` given as cyclic monomials of degrees `abar`, `bbar`.
pub fn twisted_gamma_product(d: &DimVec, f: &MonoVector, g: &MonoVector, abar: &DimVec, n: usize) -> MonoVector {
    let mut out = MonoVector::zero();
    for a in sub_dims(d, abar, n) {
        let b = crate::combinat::multisegment::dim_sub(d, &a).expect("a ≤ d");
        let ga = gamma_of_monomials(&a, f, n);
        let gb = gamma_of_monomials(&b, g, n);
        let tw = LP::v_pow(-k_form(&b, &a, n));
        for (x, cx) in ga.iter() {
            for (y, cy) in gb.iter() {
                let mut xy = x.clone();
                xy.extend(y.iter().cloned());
                out.add_term(xy, &(&tw * cx) * cy);
            }
        }
    }
    out
}

/// `a ≤ d` with `ā = abar`.
fn sub_dims(d: &DimVec, abar: &DimVec, n: usize) -> Vec<DimVec> {
    step_lifts(abar, d, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::multisegment::parse_dimvec;

    #[test]
    fn h_examples() {
        let d: DimVec = [(0, 1), (2, 1)].into_iter().collect();
        assert_eq!(h_form(&d, 2), -1);
        assert_eq!(h_form(&parse_dimvec("1,1").unwrap(), 2), 0);
    }

    #[test]
    fn lifts_count() {
        let d: DimVec = [(0, 1), (1, 1), (2, 1)].into_iter().collect();
        let fl = vec![parse_dimvec("2,1").unwrap()];
        assert_eq!(flag_lifts(&fl, &d, 2).len(), 1);
        let fl = vec![parse_dimvec("1").unwrap(), parse_dimvec("1,1").unwrap()];
        assert_eq!(flag_lifts(&fl, &d, 2).len(), 2);
    }
}
