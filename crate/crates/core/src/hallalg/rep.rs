//! Explicit representatives of nilpotent orbits and their classification
//! by rank data.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::field::{Fp, Vector};
use crate::combinat::multisegment::{DimVec, Multisegment, Quiver};

/// A representation given by chains of basis vectors, one chain per segment.
#[derive(Clone, Debug)]
pub struct Rep {
    pub quiver: Quiver,
    /// Vertex of each basis vector.
    pub vertex: Vec<i64>,
    /// `x(e_b) = e_{next[b]}` or zero.
    pub next: Vec<Option<usize>>,
}

/// Graded subspace: spanning vectors per vertex.
pub type Graded = BTreeMap<i64, Vec<Vector>>;

impl Rep {
    pub fn of(ms: &Multisegment) -> Self {
        let q = ms.quiver();
        let mut vertex = Vec::new();
        let mut next = Vec::new();
        for (s, len) in ms.segment_list() {
            let base = vertex.len();
            for o in 0..len {
                vertex.push(q.step(s, o as i64));
                next.push(if o + 1 < len { Some(base + o + 1) } else { None });
            }
        }
        Self { quiver: q, vertex, next }
    }

    pub fn dim(&self) -> usize {
        self.vertex.len()
    }

    pub fn vertices(&self) -> Vec<i64> {
        let mut v = self.vertex.clone();
        v.sort();
        v.dedup();
        v
    }

    pub fn apply_x(&self, f: &Fp, v: &Vector) -> Vector {
        let mut out = vec![0u64; v.len()];
        for (b, &a) in v.iter().enumerate() {
            if a != 0 {
                if let Some(t) = self.next[b] {
                    out[t] = f.add(out[t], a);
                }
            }
        }
        out
    }

    /// Standard basis of `V_i`.
    pub fn vertex_basis(&self, i: i64) -> Vec<Vector> {
        let d = self.dim();
        (0..d)
            .filter(|&b| self.vertex[b] == i)
            .map(|b| {
                let mut v = vec![0u64; d];
                v[b] = 1;
                v
            })
            .collect()
    }

    pub fn full(&self) -> Graded {
        self.vertices().into_iter().map(|i| (i, self.vertex_basis(i))).collect()
    }

    /// `x(U)` as a graded subspace.
    pub fn image(&self, f: &Fp, u: &Graded) -> Graded {
        let mut out: Graded = BTreeMap::new();
        for (i, vs) in u {
            let j = self.quiver.step(*i, 1);
            let imgs: Vec<Vector> = vs.iter().map(|v| self.apply_x(f, v)).filter(|v| v.iter().any(|&a| a != 0)).collect();
            out.entry(j).or_default().extend(imgs);
        }
        out
    }

    pub fn is_stable(&self, f: &Fp, u: &Graded) -> bool {
        for (i, vs) in u {
            let j = self.quiver.step(*i, 1);
            let target = u.get(&j).cloned().unwrap_or_default();
            let base = f.rank(&target);
            let mut all = target;
            all.extend(vs.iter().map(|v| self.apply_x(f, v)));
            if f.rank(&all) != base {
                return false;
            }
        }
        true
    }

    fn power_images(&self, f: &Fp, vs: &[Vector], k: usize) -> Vec<Vector> {
        let mut cur = vs.to_vec();
        for _ in 0..k {
            cur = cur.iter().map(|v| self.apply_x(f, v)).collect();
        }
        cur
    }

    /// Class of `x` restricted to the stable subspace `U`.
    pub fn sub_class(&self, f: &Fp, u: &Graded) -> Multisegment {
        let dims: DimVec = u.iter().map(|(i, vs)| (*i, f.rank(vs))).filter(|(_, d)| *d > 0).collect();
        let total: usize = dims.values().sum();
        let rank = |j: i64, k: usize| -> usize {
            match u.get(&self.quiver.normalize(j)) {
                Some(vs) => f.rank(&self.power_images(f, vs, k)),
                None => 0,
            }
        };
        multisegment_from_ranks(self.quiver, &dims, total, rank)
    }

    /// Class of the induced map on `V / U`.
    pub fn quotient_class(&self, f: &Fp, u: &Graded) -> Multisegment {
        let full = self.full();
        let mut dims = DimVec::new();
        for (i, vs) in &full {
            let d = vs.len() - u.get(i).map_or(0, |w| f.rank(w));
            if d > 0 {
                dims.insert(*i, d);
            }
        }
        let total: usize = dims.values().sum();
        let rank = |j: i64, k: usize| -> usize {
            let j = self.quiver.normalize(j);
            let tgt = self.quiver.step(j, k as i64);
            let uk = u.get(&tgt).cloned().unwrap_or_default();
            let base = f.rank(&uk);
            let Some(vs) = full.get(&j) else { return 0 };
            let mut all = self.power_images(f, vs, k);
            all.extend(uk);
            f.rank(&all) - base
        };
        multisegment_from_ranks(self.quiver, &dims, total, rank)
    }
}

/// Recovers the multisegment from `r(j,k) = rank(x^k: V_j -> V_{j+k})`.
pub fn multisegment_from_ranks<F: Fn(i64, usize) -> usize>(q: Quiver, dims: &DimVec, total: usize, r: F) -> Multisegment {
    let rr = |j: i64, k: usize| -> i64 {
        let j = q.normalize(j);
        if k == 0 {
            dims.get(&j).copied().unwrap_or(0) as i64
        } else if dims.contains_key(&j) {
            r(j, k) as i64
        } else {
            0
        }
    };
    // segments through j ending exactly at j + k
    let e = |j: i64, k: usize| -> i64 { rr(j, k) - rr(j, k + 1) };
    let mut segs = Vec::new();
    let ends: Vec<i64> = match q {
        Quiver::Cyclic(n) => (0..n as i64).collect(),
        Quiver::Linear => dims.keys().copied().collect(),
    };
    for &end in &ends {
        for len in 1..=total {
            let l = len as i64;
            let c = e(end - l + 1, len - 1) - if len < total { e(end - l, len) } else { 0 };
            assert!(c >= 0, "inconsistent rank data");
            if c > 0 {
                segs.push((q.step(end, 1 - l), len, c as usize));
            }
        }
    }
    Multisegment::from_segments(q, segs).expect("valid segments")
}

/// `dim Hom(M, N)` from the intertwiner equations, by exact rank over ℚ.
pub fn dim_hom(m: &Multisegment, n: &Multisegment) -> usize {
    let rm = Rep::of(m);
    let rn = Rep::of(n);
    // unknown φ(b -> c) for basis b of M and c of N at the same vertex
    let mut unknowns = BTreeMap::new();
    for b in 0..rm.dim() {
        for c in 0..rn.dim() {
            if rm.vertex[b] == rn.vertex[c] {
                let id = unknowns.len();
                unknowns.insert((b, c), id);
            }
        }
    }
    let nu = unknowns.len();
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    // for each basis b of M and c' of N at vertex(b)+1:
    //   (x_N φ)(b)_{c'} - (φ x_M)(b)_{c'} = 0
    for b in 0..rm.dim() {
        let j = rm.quiver.step(rm.vertex[b], 1);
        for c2 in 0..rn.dim() {
            if rn.vertex[c2] != j {
                continue;
            }
            let mut row = vec![BigRational::zero(); nu];
            for c in 0..rn.dim() {
                if rn.next[c] == Some(c2) {
                    if let Some(&id) = unknowns.get(&(b, c)) {
                        row[id] += BigRational::one();
                    }
                }
            }
            if let Some(b2) = rm.next[b] {
                if let Some(&id) = unknowns.get(&(b2, c2)) {
                    row[id] -= BigRational::one();
                }
            }
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
    }
    nu - rational_rank(rows)
}

fn rational_rank(mut m: Vec<Vec<BigRational>>) -> usize {
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let piv = m[r][c].clone();
        for i in r + 1..m.len() {
            if !m[i][c].is_zero() {
                let f = &m[i][c] / &piv;
                for j in c..cols {
                    let t = &m[r][j] * &f;
                    m[i][j] -= t;
                }
            }
        }
        r += 1;
    }
    r
}

/// `dim O = Σ d_i^2 - dim End(M_O)`.
pub fn dim_orbit(o: &Multisegment) -> usize {
    let g: usize = o.dim_vector().values().map(|d| d * d).sum();
    g - dim_hom(o, o)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::multisegment::parse_dimvec;

    fn ms(n: usize, s: &str) -> Multisegment {
        Multisegment::parse(Quiver::Cyclic(n), s).unwrap()
    }

    #[test]
    fn orbit_dimensions() {
        assert_eq!(dim_orbit(&ms(2, "0:1:2;1:1:1")), 0);
        assert_eq!(dim_orbit(&ms(2, "1:2")), 1);
        assert_eq!(dim_orbit(&ms(2, "0:1;1:1")), 0);
        assert_eq!(dim_orbit(&Multisegment::parse(Quiver::Linear, "0:2").unwrap()), 1);
    }

    #[test]
    fn ranks_recover_orbit() {
        for s in ["0:3", "1:2;0:1", "0:4;1:1", "1:3:2", "0:2;1:2"] {
            let o = ms(2, s);
            let f = Fp::new(3);
            let rep = Rep::of(&o);
            let full = rep.full();
            assert_eq!(rep.sub_class(&f, &full), o);
            assert_eq!(rep.quotient_class(&f, &BTreeMap::new()), o);
        }
        let _ = parse_dimvec("1");
    }
}
