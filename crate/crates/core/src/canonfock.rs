//! Bar-fixed bases of the Fock space and of the finite wedges.
//!
//! `B^±` come from the triangular algorithm: seed with a ψ-fixed monomial
//! vector, then subtract bar-symmetric multiples of lower basis vectors.
//! `B` is the image of the Hall canonical basis on the vacuum.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use once_cell::sync::Lazy;
use serde::Serialize;

use crate::combinat::multisegment::{Multisegment, Quiver};
use crate::combinat::partition::{color, residue};
use crate::combinat::{partitions_of, Partition};
use crate::exactring::LaurentPolynomial as LP;
use crate::hallalg::{hall_canonical, hall_fock_action_in, Canonical, HallError};
use crate::heckewedge::fock::{f_alpha, FockVector, Space};
use crate::heckewedge::{psi, HeckeError};
use crate::klpoly::{b_minus_via_kl, b_plus_via_kl, KlError};

#[derive(Debug, thiserror::Error)]
pub enum BasisError {
    #[error(transparent)]
    Hecke(#[from] HeckeError),
    #[error(transparent)]
    Hall(#[from] HallError),
    #[error(transparent)]
    Kl(#[from] KlError),
    #[error("column {0} is not unitriangular: {1}")]
    NotUnitriangular(Partition, String),
    #[error("column {0} is not ψ-fixed")]
    NotPsiFixed(Partition),
    #[error("residual coefficient {1} at {0} is not bar-symmetric")]
    NotSymmetric(Partition, String),
    #[error("the Hall seed is only available on the semi-infinite wedge")]
    NoHallSeed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Kind {
    Plus,
    Minus,
    Hall,
}

impl Kind {
    pub fn name(&self) -> &'static str {
        match self {
            Kind::Plus => "plus",
            Kind::Minus => "minus",
            Kind::Hall => "hall",
        }
    }
}

/// Basis vectors of one weight space, column `λ` expanded in `|μ⟩`.
#[derive(Clone, Debug, PartialEq)]
pub struct BasisTable {
    pub n: usize,
    pub weight: usize,
    pub space: Space,
    pub kind: Kind,
    /// Lex-decreasing, which refines dominance.
    pub partitions: Vec<Partition>,
    pub columns: Vec<FockVector>,
}

impl BasisTable {
    pub fn entry(&self, mu: &Partition, lambda: &Partition) -> LP {
        match self.partitions.iter().position(|p| p == lambda) {
            Some(j) => self.columns[j].coeff(mu),
            None => LP::zero(),
        }
    }

    /// `m[μ][λ]`.
    pub fn matrix(&self) -> Vec<Vec<LP>> {
        self.partitions.iter().map(|mu| self.columns.iter().map(|c| c.coeff(mu)).collect()).collect()
    }

    pub fn at_one(&self) -> Vec<Vec<BigInt>> {
        self.matrix().iter().map(|r| r.iter().map(|c| c.eval_at_one()).collect()).collect()
    }

    pub fn column(&self, lambda: &Partition) -> Option<&FockVector> {
        self.partitions.iter().position(|p| p == lambda).map(|j| &self.columns[j])
    }

    /// Unit diagonal and support of column `λ` inside `{μ ≤ λ}`.
    pub fn is_unitriangular(&self) -> bool {
        self.partitions.iter().zip(&self.columns).all(|(lam, col)| col.coeff(lam).is_one() && col.keys().all(|mu| mu <= lam))
    }

    /// Off-diagonal entries in `vZ[v]` (plus) or `v^{-1}Z[v^{-1}]` (minus).
    pub fn off_diagonal_in_ring(&self, sign: Kind) -> bool {
        self.partitions.iter().zip(&self.columns).all(|(lam, col)| {
            col.iter().filter(|(mu, _)| *mu != lam).all(|(_, c)| match sign {
                Kind::Minus => c.in_vinv_zvinv(),
                _ => c.in_v_zv(),
            })
        })
    }

    pub fn is_psi_fixed(&self) -> Result<bool, HeckeError> {
        for c in &self.columns {
            if &psi(self.space, c, self.n)? != c {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Partitions of `weight` in the space, lex-decreasing.
pub fn weight_partitions(space: Space, weight: usize) -> Vec<Partition> {
    match space {
        Space::Finite(l) => partitions_of(weight, Some(l)),
        Space::SemiInfinite => partitions_of(weight, None),
    }
}

/// Residue content of each column of `λ`, longest column first.
pub fn column_contents(lambda: &Partition, n: usize) -> Vec<Vec<usize>> {
    let dual = lambda.dual();
    dual.parts()
        .iter()
        .enumerate()
        .map(|(c, &h)| {
            let mut a = vec![0; n];
            for r in 1..=h {
                a[residue(color(r, c + 1), n)] += 1;
            }
            a
        })
        .collect()
}

/// `f_{α_last} ... f_{α_1} |∅⟩`, first column applied first.
pub fn monomial_seed(space: Space, lambda: &Partition, n: usize) -> Result<FockVector, HeckeError> {
    let mut cur = FockVector::basis(Partition::empty());
    for a in column_contents(lambda, n) {
        cur = f_alpha(space, &a, &cur, n)?;
    }
    Ok(cur)
}

static CANON: Lazy<RwLock<HashMap<(usize, Vec<(i64, usize)>), Arc<Canonical>>>> = Lazy::new(|| RwLock::new(HashMap::new()));

fn canonical_for(o: &Multisegment, n: usize) -> Result<Arc<Canonical>, HallError> {
    let d = o.dim_vector();
    let key = (n, d.iter().map(|(a, b)| (*a, *b)).collect::<Vec<_>>());
    if let Some(c) = CANON.read().unwrap().get(&key) {
        return Ok(c.clone());
    }
    let c = Arc::new(hall_canonical(Quiver::Cyclic(n), &d)?);
    CANON.write().unwrap().entry(key).or_insert_with(|| c.clone());
    Ok(c)
}

/// `b̃_{O_λ}|∅⟩` for the orbit `O_λ`.
pub fn hall_seed(space: Space, lambda: &Partition, n: usize) -> Result<FockVector, BasisError> {
    let o = Multisegment::of_partition(lambda, n);
    let c = canonical_for(&o, n)?;
    Ok(hall_fock_action_in(space, &c.tilde[&o], &FockVector::basis(Partition::empty()), n)?)
}

fn leading_ok(v: &FockVector, lambda: &Partition) -> bool {
    v.coeff(lambda).is_one() && v.keys().all(|mu| mu <= lambda)
}

/// The bar-symmetric polynomial removing all powers outside the allowed ring.
fn symmetric_part(c: &LP, sign: Kind) -> LP {
    let mut a = LP::zero();
    for (e, x) in c.terms() {
        let bad = match sign {
            Kind::Minus => e >= 0,
            _ => e <= 0,
        };
        if !bad {
            continue;
        }
        if e == 0 {
            a.add_term(0, x.clone());
        } else {
            a.add_term(e, x.clone());
            a.add_term(-e, x.clone());
        }
    }
    a
}

/// Starting vector of the triangular algorithm.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Seed {
    /// Column-content monomial, falling back to the Hall seed when it is not
    /// unitriangular.
    Monomial,
    /// `b̃_{O_λ}|∅⟩` throughout.
    Hall,
}

/// `B^+` or `B^-` in one weight space.
pub fn lt_basis(n: usize, weight: usize, sign: Kind, space: Space) -> Result<BasisTable, BasisError> {
    lt_basis_seeded(n, weight, sign, space, Seed::Monomial)
}

pub fn lt_basis_seeded(n: usize, weight: usize, sign: Kind, space: Space, seed: Seed) -> Result<BasisTable, BasisError> {
    let partitions = weight_partitions(space, weight);
    let mut columns: Vec<FockVector> = vec![FockVector::zero(); partitions.len()];
    for j in (0..partitions.len()).rev() {
        let lambda = &partitions[j];
        let mut b = match seed {
            Seed::Monomial => monomial_seed(space, lambda, n)?,
            Seed::Hall => hall_seed(space, lambda, n)?,
        };
        if !leading_ok(&b, lambda) {
            if seed == Seed::Hall || space != Space::SemiInfinite {
                return Err(BasisError::NotUnitriangular(lambda.clone(), format!("seed {:?}", b)));
            }
            b = hall_seed(space, lambda, n)?;
            if !leading_ok(&b, lambda) {
                return Err(BasisError::NotUnitriangular(lambda.clone(), format!("Hall seed {:?}", b)));
            }
        }
        for k in j + 1..partitions.len() {
            let mu = &partitions[k];
            let c = b.coeff(mu);
            if c.is_zero() {
                continue;
            }
            let a = symmetric_part(&c, sign);
            if !a.is_zero() {
                b.add_scaled(&columns[k], &-a);
            }
        }
        if &psi(space, &b, n)? != &b {
            return Err(BasisError::NotPsiFixed(lambda.clone()));
        }
        columns[j] = b;
    }
    let t = BasisTable { n, weight, space, kind: sign, partitions, columns };
    if !t.off_diagonal_in_ring(sign) {
        return Err(BasisError::NotSymmetric(Partition::empty(), "off-diagonal ring".into()));
    }
    Ok(t)
}

/// `B`: `b_λ = b̃_{O_λ}|∅⟩`.
pub fn hall_basis_b(n: usize, weight: usize, space: Space) -> Result<BasisTable, BasisError> {
    let partitions = weight_partitions(space, weight);
    let mut columns = Vec::new();
    for lambda in &partitions {
        let b = hall_seed(space, lambda, n)?;
        if !leading_ok(&b, lambda) {
            return Err(BasisError::NotUnitriangular(lambda.clone(), format!("{:?}", b)));
        }
        columns.push(b);
    }
    Ok(BasisTable { n, weight, space, kind: Kind::Hall, partitions, columns })
}

/// `D_{μλ} = e^+_{μλ}(1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionMatrix {
    pub n: usize,
    pub weight: usize,
    pub partitions: Vec<String>,
    pub entries: Vec<Vec<BigInt>>,
}

pub fn decomposition_matrix(n: usize, weight: usize) -> Result<DecompositionMatrix, BasisError> {
    let t = lt_basis(n, weight, Kind::Plus, Space::SemiInfinite)?;
    Ok(DecompositionMatrix {
        n,
        weight,
        partitions: t.partitions.iter().map(|p| p.to_string()).collect(),
        entries: t.at_one(),
    })
}

impl DecompositionMatrix {
    pub fn is_unitriangular(&self) -> bool {
        let m = self.entries.len();
        (0..m).all(|i| (0..m).all(|j| if i == j { self.entries[i][j] == 1.into() } else if i < j { self.entries[i][j] == 0.into() } else { true }))
    }
}

/// `Σ_ν e^+_{λν} ē^-_{μ'ν'} = δ_{λμ}`, with `e^±_{λμ}` the coefficient of `|λ⟩` in `b^±_μ`.
///
/// Read as matrices, `(e^+_{λμ})` is the inverse of the transpose of `(ē^-_{λ'μ'})`.
pub fn inversion_identity(plus: &BasisTable, minus: &BasisTable) -> bool {
    let parts = &plus.partitions;
    parts.iter().all(|lam| {
        parts.iter().all(|mu| {
            let mut s = LP::zero();
            for nu in parts {
                let a = plus.entry(lam, nu);
                if a.is_zero() {
                    continue;
                }
                let b = minus.entry(&mu.dual(), &nu.dual());
                if !b.is_zero() {
                    s += &a * &b.bar();
                }
            }
            if lam == mu { s.is_one() } else { s.is_zero() }
        })
    })
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct WeightReport {
    pub weight: usize,
    pub hall_equals_plus: Option<bool>,
    pub inversion_identity: Option<bool>,
    pub finite_identity: Option<bool>,
    pub kl_minus_agrees: Option<bool>,
    pub kl_plus_agrees: Option<bool>,
    pub decomposition_unitriangular: Option<bool>,
    pub mismatches: Vec<String>,
}

impl WeightReport {
    pub fn passed(&self) -> bool {
        [self.hall_equals_plus, self.inversion_identity, self.finite_identity, self.kl_minus_agrees, self.kl_plus_agrees, self.decomposition_unitriangular]
            .iter()
            .all(|x| x.unwrap_or(true))
    }
}

/// Cross-basis comparisons for weights `0..=max_weight`.
pub fn compare_bases(n: usize, max_weight: usize) -> Result<Vec<WeightReport>, BasisError> {
    let mut out = Vec::new();
    for w in 0..=max_weight {
        let mut r = WeightReport { weight: w, ..Default::default() };
        let plus = lt_basis(n, w, Kind::Plus, Space::SemiInfinite)?;
        let minus = lt_basis(n, w, Kind::Minus, Space::SemiInfinite)?;
        let hall = hall_basis_b(n, w, Space::SemiInfinite)?;
        let eq = hall == BasisTable { kind: Kind::Hall, ..plus.clone() };
        if !eq {
            r.mismatches.push(format!("B != B+ at weight {}", w));
        }
        r.hall_equals_plus = Some(eq);
        let inv = inversion_identity(&plus, &minus);
        if !inv {
            r.mismatches.push(format!("inversion identity fails at weight {}", w));
        }
        r.inversion_identity = Some(inv);
        let mut fin = true;
        for l in 1..=n {
            let bl = hall_basis_b(n, w, Space::Finite(l))?;
            let pl = lt_basis(n, w, Kind::Plus, Space::Finite(l))?;
            if bl.columns != pl.columns {
                fin = false;
                r.mismatches.push(format!("B_{} != B_{}+ at weight {}", l, l, w));
            }
        }
        r.finite_identity = Some(fin);
        let ml = lt_basis(n, w, Kind::Minus, Space::Finite(2))?;
        let mut kl = true;
        for (lam, col) in ml.partitions.iter().zip(&ml.columns) {
            match b_minus_via_kl(lam, n, 2) {
                Ok(v) if &v == col => {}
                Ok(_) => {
                    kl = false;
                    r.mismatches.push(format!("KL b- differs at {}", lam));
                }
                Err(KlError::OutOfScale(_)) => {}
                Err(e) => return Err(e.into()),
            }
        }
        r.kl_minus_agrees = Some(kl);
        let pl = lt_basis(n, w, Kind::Plus, Space::Finite(2))?;
        let mut klp = true;
        for (lam, col) in pl.partitions.iter().zip(&pl.columns) {
            match b_plus_via_kl(lam, n, 2) {
                Ok(v) if &v == col => {}
                Ok(_) => {
                    klp = false;
                    r.mismatches.push(format!("KL b+ differs at {}", lam));
                }
                Err(KlError::OutOfScale(_)) => {}
                Err(e) => return Err(e.into()),
            }
        }
        r.kl_plus_agrees = Some(klp);
        let d = decomposition_matrix(n, w)?;
        r.decomposition_unitriangular = Some(d.is_unitriangular());
        out.push(r);
    }
    Ok(out)
}

#[derive(Serialize)]
struct JsonTable<'a> {
    n: usize,
    weight: usize,
    kind: &'a str,
    space: String,
    convention: &'a str,
    partitions: Vec<String>,
    columns: BTreeMap<String, BTreeMap<String, String>>,
}

pub fn space_name(space: Space) -> String {
    match space {
        Space::Finite(l) => format!("wedge{}", l),
        Space::SemiInfinite => "fock".to_string(),
    }
}

/// Full polynomials as JSON: `columns[λ][μ]` is the coefficient of `|μ⟩` in `b_λ`.
pub fn table_to_json(t: &BasisTable) -> String {
    let j = JsonTable {
        n: t.n,
        weight: t.weight,
        kind: t.kind.name(),
        space: space_name(t.space),
        convention: "columns[lambda][mu] = coefficient of |mu> in b_lambda",
        partitions: t.partitions.iter().map(|p| p.to_string()).collect(),
        columns: t
            .partitions
            .iter()
            .zip(&t.columns)
            .map(|(lam, col)| (lam.to_string(), col.iter().map(|(mu, c)| (mu.to_string(), c.to_compact_string())).collect()))
            .collect(),
    };
    serde_json::to_string_pretty(&j).expect("serializable")
}

/// Matrix at `v = 1` as CSV, rows `μ`, columns `λ`, preceded by a header line.
pub fn matrix_to_csv(partitions: &[String], entries: &[Vec<BigInt>]) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "# rows mu, columns lambda, order: {}", partitions.join(" "));
    for row in entries {
        let _ = writeln!(s, "{}", row.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","));
    }
    s
}

pub fn table_to_csv(t: &BasisTable) -> String {
    let names: Vec<String> = t.partitions.iter().map(|p| p.to_string()).collect();
    matrix_to_csv(&names, &t.at_one())
}

pub fn table_to_latex(t: &BasisTable) -> String {
    let mut s = String::new();
    let k = t.partitions.len();
    let _ = writeln!(s, "% rows mu, columns lambda: coefficient of |mu> in b_lambda");
    let _ = writeln!(s, "\\begin{{tabular}}{{l|{}}}", "c".repeat(k));
    let head: Vec<String> = t.partitions.iter().map(|p| format!("${}$", p)).collect();
    let _ = writeln!(s, " & {} \\\\ \\hline", head.join(" & "));
    for (mu, row) in t.partitions.iter().zip(t.matrix()) {
        let cells: Vec<String> = row.iter().map(|c| format!("${}$", c.to_latex())).collect();
        let _ = writeln!(s, "${}$ & {} \\\\", mu, cells.join(" & "));
    }
    let _ = writeln!(s, "\\end{{tabular}}");
    s
}

pub fn decomposition_to_latex(d: &DecompositionMatrix) -> String {
    let mut s = String::new();
    let k = d.partitions.len();
    let _ = writeln!(s, "% rows mu, columns lambda: D = e^+(1)");
    let _ = writeln!(s, "\\begin{{tabular}}{{l|{}}}", "c".repeat(k));
    let head: Vec<String> = d.partitions.iter().map(|p| format!("${}$", p)).collect();
    let _ = writeln!(s, " & {} \\\\ \\hline", head.join(" & "));
    for (mu, row) in d.partitions.iter().zip(&d.entries) {
        let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
        let _ = writeln!(s, "${}$ & {} \\\\", mu, cells.join(" & "));
    }
    let _ = writeln!(s, "\\end{{tabular}}");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn small_weights() {
        for sign in [Kind::Plus, Kind::Minus] {
            let t = lt_basis(2, 0, sign, Space::SemiInfinite).unwrap();
            assert_eq!(t.columns, vec![FockVector::basis(Partition::empty())]);
            let t = lt_basis(2, 1, sign, Space::SemiInfinite).unwrap();
            assert_eq!(t.columns, vec![FockVector::basis(p("1"))]);
        }
    }

    #[test]
    fn weight_two_plus_n2() {
        let t = lt_basis(2, 2, Kind::Plus, Space::SemiInfinite).unwrap();
        let mut b2 = FockVector::basis(p("2"));
        b2.add_term(p("1,1"), LP::v_pow(1));
        assert_eq!(t.column(&p("2")).unwrap(), &b2);
        assert_eq!(t.column(&p("1,1")).unwrap(), &FockVector::basis(p("1,1")));
        let d = decomposition_matrix(2, 2).unwrap();
        assert_eq!(d.entries, vec![vec![BigInt::from(1), BigInt::from(0)], vec![BigInt::from(1), BigInt::from(1)]]);
        let minus = lt_basis(2, 2, Kind::Minus, Space::SemiInfinite).unwrap();
        assert!(inversion_identity(&t, &minus));
        assert_eq!(matrix_to_csv(&d.partitions, &d.entries), "# rows mu, columns lambda, order: (2) (1,1)\n1,0\n1,1\n");
    }

    #[test]
    fn hall_basis_small() {
        let t = hall_basis_b(2, 1, Space::SemiInfinite).unwrap();
        assert_eq!(t.columns, vec![FockVector::basis(p("1"))]);
        let t = hall_basis_b(2, 0, Space::SemiInfinite).unwrap();
        assert_eq!(t.columns, vec![FockVector::basis(Partition::empty())]);
    }
}
