//! Products, flag functions, the bar involution and the canonical basis.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use once_cell::sync::Lazy;

use super::count::{count_stable_flags, sub_quotient_counts};
use super::rep::dim_orbit;
use super::HallError;
use crate::combinat::multisegment::{
    closure_leq, dim_add, dim_sub, dim_total, enumerate_multisegments, form_m, DimVec, Multisegment, Quiver,
};
use crate::exactring::{LaurentPolynomial as LP, LinComb};

/// Functions on orbits, in the basis `f_O = v^{dim O} 1_O`.
pub type HallVector = LinComb<Multisegment>;

/// `(d^1, ..., d^r)`, bottom step first.
pub type FlagType = Vec<DimVec>;

/// Combinations of monomials `f_{d^1} ∘ ... ∘ f_{d^r}` in the semisimple generators.
pub type MonoVector = LinComb<FlagType>;

/// Drops empty steps.
pub fn normalize_flag(flag: &[DimVec]) -> FlagType {
    flag.iter().filter(|d| !d.is_empty()).cloned().collect()
}

pub fn flag_total(flag: &[DimVec]) -> DimVec {
    flag.iter().fold(DimVec::new(), |acc, d| dim_add(&acc, d))
}

/// `M(𝐝) = Σ_k m(Σ_{l>k} d^l, d^k)`, so that `f_𝐝 = v^{M(𝐝)} f_{d^1} ∘ ... ∘ f_{d^r}`.
pub fn flag_twist(q: Quiver, flag: &[DimVec]) -> i64 {
    let mut above = DimVec::new();
    let mut total = 0;
    for step in flag.iter().rev() {
        total += form_m(q, &above, step);
        above = dim_add(&above, step);
    }
    total
}

fn q_poly_to_v(coeffs: &[num_bigint::BigInt]) -> LP {
    LP::from_q_coeffs(coeffs)
}

/// The flag function `f_𝐝 = Σ_O #{stable flags}(v^2) 1_O`, by counting.
pub fn flag_function(q: Quiver, flag: &[DimVec]) -> Result<HallVector, HallError> {
    let flag = normalize_flag(flag);
    let d = flag_total(&flag);
    let mut out = HallVector::zero();
    for o in enumerate_multisegments(&d, q) {
        let c = count_stable_flags(&flag, &o)?;
        let c = q_poly_to_v(&c).shift(-(dim_orbit(&o) as i64));
        out.add_term(o, c);
    }
    Ok(out)
}

/// The monomial `f_{d^1} ∘ ... ∘ f_{d^r} = v^{-M(𝐝)} f_𝐝`.
pub fn monomial(q: Quiver, flag: &[DimVec]) -> Result<HallVector, HallError> {
    Ok(flag_function(q, flag)?.scale(&LP::v_pow(-flag_twist(q, &normalize_flag(flag)))))
}

/// `f_𝐝` computed as the twisted ordered product of generators.
pub fn flag_monomial(q: Quiver, flag: &[DimVec]) -> Result<HallVector, HallError> {
    let flag = normalize_flag(flag);
    let mut acc = HallVector::basis(Multisegment::empty(q));
    for step in &flag {
        acc = hall_product(&acc, &HallVector::basis(Multisegment::zero_rep(q, step)))?;
    }
    Ok(acc.scale(&LP::v_pow(flag_twist(q, &flag))))
}

/// `f_A ∘ f_B` with `A` on the subobject side.
pub fn hall_product_orbits(a: &Multisegment, b: &Multisegment) -> Result<HallVector, HallError> {
    let q = a.quiver();
    if b.quiver() != q {
        return Err(HallError::Grading("product of different quivers".into()));
    }
    let da = a.dim_vector();
    let db = b.dim_vector();
    let twist = dim_orbit(a) as i64 + dim_orbit(b) as i64 - form_m(q, &db, &da);
    let mut out = HallVector::zero();
    for o in enumerate_multisegments(&dim_add(&da, &db), q) {
        let counts = sub_quotient_counts(&da, &o)?;
        if let Some(c) = counts.get(&(a.clone(), b.clone())) {
            out.add_term(o.clone(), q_poly_to_v(c).shift(twist - dim_orbit(&o) as i64));
        }
    }
    Ok(out)
}

/// Bilinear extension of [`hall_product_orbits`].
pub fn hall_product(f: &HallVector, g: &HallVector) -> Result<HallVector, HallError> {
    let mut out = HallVector::zero();
    for (a, ca) in f.iter() {
        for (b, cb) in g.iter() {
            out.add_scaled(&hall_product_orbits(a, b)?, &(ca * cb));
        }
    }
    Ok(out)
}

/// Jordan-kernel type: `d^k` is the dimension vector of `Ker x^k / Ker x^{k-1}`.
pub fn jordan_type(o: &Multisegment) -> FlagType {
    let max_len = o.segments().map(|(_, l, _)| l).max().unwrap_or(0);
    let mut out = Vec::new();
    let mut prev = DimVec::new();
    for k in 1..=max_len {
        let cur = o.kernel_dims(k);
        out.push(dim_sub(&cur, &prev).expect("kernels increase"));
        prev = cur;
    }
    normalize_flag(&out)
}

/// Per-degree data: orbits, monomials in `f_O`, and `f_O` in monomials.
pub struct Graded {
    pub quiver: Quiver,
    pub orbits: Vec<Multisegment>,
    pub flags: Vec<FlagType>,
    /// `mono[i][j]`: coefficient of `f_{O_j}` in the monomial of `flags[i]`.
    pub mono: Vec<Vec<LP>>,
    /// `inv[i][j]`: coefficient of the monomial of `flags[j]` in `f_{O_i}`.
    pub inv: Vec<Vec<LP>>,
    pub dims: Vec<usize>,
}

static GRADED: Lazy<RwLock<HashMap<(Quiver, DimVec), Arc<Graded>>>> = Lazy::new(|| RwLock::new(HashMap::new()));

fn unit_inverse(c: &LP) -> Option<LP> {
    let (e, k) = c.as_monomial()?;
    if k == &1.into() {
        Some(LP::v_pow(-e))
    } else if k == &(-1).into() {
        Some(LP::monomial(-e, -1))
    } else {
        None
    }
}

pub fn graded(q: Quiver, d: &DimVec) -> Result<Arc<Graded>, HallError> {
    let key = (q, d.clone());
    if let Some(g) = GRADED.read().unwrap().get(&key) {
        return Ok(g.clone());
    }
    let orbits = enumerate_multisegments(d, q);
    let m = orbits.len();
    let flags: Vec<FlagType> = orbits.iter().map(jordan_type).collect();
    let index: BTreeMap<&Multisegment, usize> = orbits.iter().enumerate().map(|(i, o)| (o, i)).collect();
    let mut mono = vec![vec![LP::zero(); m]; m];
    for (i, fl) in flags.iter().enumerate() {
        for (o, c) in monomial(q, fl)?.iter() {
            mono[i][index[o]] = c.clone();
        }
    }
    // triangularity: mono[i][j] != 0 only for O_j ≤ O_i, unit diagonal
    for i in 0..m {
        for j in 0..m {
            if !mono[i][j].is_zero() && (j < i || !closure_leq(&orbits[j], &orbits[i])?) {
                return Err(HallError::Triangular(format!("monomial of {} meets {}", orbits[i], orbits[j])));
            }
        }
        if unit_inverse(&mono[i][i]).is_none() {
            return Err(HallError::Triangular(format!("diagonal at {} is {}", orbits[i], mono[i][i])));
        }
    }
    // back substitution: f_{O_i} = (mono_i - Σ_{j>i} mono[i][j] f_{O_j}) / mono[i][i]
    let mut inv = vec![vec![LP::zero(); m]; m];
    for i in (0..m).rev() {
        let u = unit_inverse(&mono[i][i]).unwrap();
        let mut row = vec![LP::zero(); m];
        row[i] = u.clone();
        for j in i + 1..m {
            if mono[i][j].is_zero() {
                continue;
            }
            let c = &mono[i][j] * &u;
            for k in 0..m {
                if !inv[j][k].is_zero() {
                    row[k] = &row[k] - &(&c * &inv[j][k]);
                }
            }
        }
        inv[i] = row;
    }
    let dims = orbits.iter().map(dim_orbit).collect();
    let g = Arc::new(Graded { quiver: q, orbits, flags, mono, inv, dims });
    GRADED.write().unwrap().entry(key).or_insert_with(|| g.clone());
    Ok(g)
}

/// Splits a vector into homogeneous pieces by (quiver, dimension vector).
pub fn components(f: &HallVector) -> BTreeMap<(Quiver, DimVec), HallVector> {
    let mut out: BTreeMap<(Quiver, DimVec), HallVector> = BTreeMap::new();
    for (o, c) in f.iter() {
        out.entry((o.quiver(), o.dim_vector())).or_default().add_term(o.clone(), c.clone());
    }
    out
}

/// `f` as a combination of the monomials attached to Jordan-kernel types.
pub fn to_monomials(f: &HallVector) -> Result<MonoVector, HallError> {
    let mut out = MonoVector::zero();
    for ((q, d), piece) in components(f) {
        let g = graded(q, &d)?;
        for (i, o) in g.orbits.iter().enumerate() {
            let c = piece.coeff(o);
            if c.is_zero() {
                continue;
            }
            for (j, x) in g.inv[i].iter().enumerate() {
                if !x.is_zero() {
                    out.add_term(g.flags[j].clone(), &c * x);
                }
            }
        }
    }
    Ok(out)
}

/// Expands monomials in the orbit basis.
pub fn from_monomials(q: Quiver, m: &MonoVector) -> Result<HallVector, HallError> {
    let mut out = HallVector::zero();
    for (flag, c) in m.iter() {
        out.add_scaled(&monomial(q, flag)?, c);
    }
    Ok(out)
}

/// `f_O = Σ c_𝐝 f_𝐝` over flag functions of Jordan-kernel types.
pub fn orbit_in_monomials(o: &Multisegment) -> Result<Vec<(FlagType, LP)>, HallError> {
    let q = o.quiver();
    let m = to_monomials(&HallVector::basis(o.clone()))?;
    Ok(m.iter().map(|(fl, c)| (fl.clone(), c.shift(-flag_twist(q, fl)))).collect())
}

/// The bar involution: monomials in the generators are fixed.
pub fn hall_bar(f: &HallVector) -> Result<HallVector, HallError> {
    let mut out = HallVector::zero();
    for ((q, _), piece) in components(f) {
        let m = to_monomials(&piece)?.bar_coeffs();
        out += &from_monomials(q, &m)?;
    }
    Ok(out)
}

/// Canonical basis in degree `d`.
#[derive(Clone, Debug)]
pub struct Canonical {
    pub orbits: Vec<Multisegment>,
    /// Bar-fixed `b̃_O ∈ v^{-2 dim O} f_O + Σ_{O'<O} v^{-1}Z[v^{-1}] v^{-2 dim O'} f_{O'}`.
    pub tilde: BTreeMap<Multisegment, HallVector>,
    /// `b_O = v^{2 dim O} b̃_O ∈ f_O + Σ_{O'<O} vZ[v] f_{O'}`.
    pub b: BTreeMap<Multisegment, HallVector>,
}

pub fn hall_canonical(q: Quiver, d: &DimVec) -> Result<Canonical, HallError> {
    let g = graded(q, d)?;
    let m = g.orbits.len();
    // r[i][j]: coefficient of g_i in bar(g_j), g_j = v^{-2 dim O_j} f_j
    let mut r = vec![vec![LP::zero(); m]; m];
    for j in 0..m {
        let b = hall_bar(&HallVector::basis(g.orbits[j].clone()))?;
        for i in 0..m {
            let c = b.coeff(&g.orbits[i]);
            if !c.is_zero() {
                r[i][j] = c.shift(2 * (g.dims[i] + g.dims[j]) as i64);
            }
        }
    }
    for j in 0..m {
        if !r[j][j].is_one() {
            return Err(HallError::Triangular(format!("bar diagonal at {} is {}", g.orbits[j], r[j][j])));
        }
        for i in 0..m {
            if i != j && !r[i][j].is_zero() && (i < j || !closure_leq(&g.orbits[i], &g.orbits[j])?) {
                return Err(HallError::Triangular(format!("bar of {} meets {}", g.orbits[j], g.orbits[i])));
            }
        }
    }
    let mut tilde = BTreeMap::new();
    let mut b = BTreeMap::new();
    for j in 0..m {
        let mut p = vec![LP::zero(); m];
        p[j] = LP::one();
        for i in j + 1..m {
            let mut rhs = LP::zero();
            for k in j..i {
                if !r[i][k].is_zero() && !p[k].is_zero() {
                    rhs += &r[i][k] * &p[k].bar();
                }
            }
            if !(&rhs + &rhs.bar()).is_zero() {
                return Err(HallError::NotBarFixed(format!("residual {} at ({}, {})", rhs, g.orbits[i], g.orbits[j])));
            }
            p[i] = rhs.truncate(i64::MIN, -1);
        }
        let mut t = HallVector::zero();
        for i in 0..m {
            if !p[i].is_zero() {
                t.add_term(g.orbits[i].clone(), p[i].shift(-2 * g.dims[i] as i64));
            }
        }
        let bo = t.scale(&LP::v_pow(2 * g.dims[j] as i64));
        if hall_bar(&t)? != t {
            return Err(HallError::NotBarFixed(format!("b̃ at {}", g.orbits[j])));
        }
        tilde.insert(g.orbits[j].clone(), t);
        b.insert(g.orbits[j].clone(), bo);
    }
    Ok(Canonical { orbits: g.orbits.clone(), tilde, b })
}

/// Total dimension of a flag type.
pub fn flag_size(flag: &[DimVec]) -> usize {
    flag.iter().map(dim_total).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::multisegment::{parse_dimvec, unit_dim};

    fn ms(n: usize, s: &str) -> Multisegment {
        Multisegment::parse(Quiver::Cyclic(n), s).unwrap()
    }
    fn lin(s: &str) -> Multisegment {
        Multisegment::parse(Quiver::Linear, s).unwrap()
    }
    fn lp(pairs: &[(i64, i64)]) -> LP {
        LP::from_terms(pairs.iter().copied())
    }

    #[test]
    fn generator_products() {
        let q = Quiver::Cyclic(2);
        let got = hall_product_orbits(&ms(2, "0:1"), &ms(2, "1:1")).unwrap();
        let mut want = HallVector::single(ms(2, "0:1;1:1"), LP::v_pow(-1));
        want.add_term(ms(2, "1:2"), LP::v_pow(-2));
        assert_eq!(got, want);
        let e = HallVector::basis(Multisegment::empty(q));
        assert_eq!(hall_product(&e, &e).unwrap(), e);
        let got = hall_product_orbits(&lin("0:1"), &lin("1:1")).unwrap();
        assert_eq!(got, HallVector::basis(lin("0:1;1:1")));
    }

    #[test]
    fn flag_routes_agree() {
        let q = Quiver::Cyclic(2);
        for flag in [vec![unit_dim(0), unit_dim(1)], vec![unit_dim(1), unit_dim(0), unit_dim(0)], vec![parse_dimvec("1,1").unwrap()]] {
            assert_eq!(flag_function(q, &flag).unwrap(), flag_monomial(q, &flag).unwrap());
        }
    }

    #[test]
    fn orbit_expansion_n2() {
        let o = ms(2, "1:2");
        let got = orbit_in_monomials(&o).unwrap();
        let want = vec![(vec![unit_dim(0), unit_dim(1)], lp(&[(1, 1)])), (vec![parse_dimvec("1,1").unwrap()], lp(&[(1, -1)]))];
        assert_eq!(got, want);
        let mut back = HallVector::zero();
        for (fl, c) in &got {
            back.add_scaled(&flag_function(Quiver::Cyclic(2), fl).unwrap(), c);
        }
        assert_eq!(back, HallVector::basis(o));
    }

    #[test]
    fn bar_linear_example() {
        let got = hall_bar(&HallVector::basis(lin("0:2"))).unwrap();
        let mut want = HallVector::single(lin("0:2"), LP::v_pow(-4));
        want.add_term(lin("0:1;1:1"), lp(&[(-3, 1), (-1, -1)]));
        assert_eq!(got, want);
    }

    #[test]
    fn canonical_worked_examples() {
        let c = hall_canonical(Quiver::Linear, &parse_dimvec("1,1").unwrap()).unwrap();
        let mut want = HallVector::basis(lin("0:2"));
        want.add_term(lin("0:1;1:1"), LP::v_pow(1));
        assert_eq!(c.b[&lin("0:2")], want);
        assert_eq!(c.b[&lin("0:1;1:1")], HallVector::basis(lin("0:1;1:1")));

        let c = hall_canonical(Quiver::Cyclic(2), &parse_dimvec("1,1").unwrap()).unwrap();
        for s in ["0:2", "1:2"] {
            let mut want = HallVector::basis(ms(2, s));
            want.add_term(ms(2, "0:1;1:1"), LP::v_pow(1));
            assert_eq!(c.b[&ms(2, s)], want);
        }
        let z = ms(2, "0:1;1:1");
        assert_eq!(c.b[&z], HallVector::basis(z));
        let prod = hall_product_orbits(&ms(2, "1:1"), &ms(2, "0:1")).unwrap();
        assert_eq!(c.tilde[&ms(2, "0:2")], prod);
    }
}
