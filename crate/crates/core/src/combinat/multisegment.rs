//! Multisegments: isomorphism classes of nilpotent representations of the
//! cyclic quiver, or of the linear quiver with vertices in ℤ.

use std::collections::BTreeMap;
use std::fmt;

use super::partition::Partition;
use super::CombinatError;

/// Dimension vector with zero entries omitted.
pub type DimVec = BTreeMap<i64, usize>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Quiver {
    /// Cyclic quiver with `n` vertices, arrows `i -> i+1 mod n`.
    Cyclic(usize),
    /// The linear quiver on ℤ, arrows `i -> i+1`.
    Linear,
}

impl Quiver {
    /// The vertex `i + k`.
    pub fn step(&self, i: i64, k: i64) -> i64 {
        match *self {
            Quiver::Cyclic(n) => (i + k).rem_euclid(n as i64),
            Quiver::Linear => i + k,
        }
    }

    pub fn normalize(&self, i: i64) -> i64 {
        self.step(i, 0)
    }

    /// Number of arrows `i -> j`.
    pub fn arrows(&self, i: i64, j: i64) -> i64 {
        i64::from(self.step(i, 1) == self.normalize(j))
    }

    pub fn tag(&self) -> String {
        match self {
            Quiver::Cyclic(n) => format!("cyclic{}", n),
            Quiver::Linear => "linear".to_string(),
        }
    }
}

/// Euler-type forms on dimension vectors.
///
/// `m(b,a) = Σ_{arrows i->j} b_i a_j + Σ_i b_i a_i`.
pub fn form_m(q: Quiver, b: &DimVec, a: &DimVec) -> i64 {
    arrow_sum(q, b, a) + diag_sum(b, a)
}

/// `n(b,a) = Σ_{arrows i->j} b_i a_j - Σ_i b_i a_i`.
pub fn form_n(q: Quiver, b: &DimVec, a: &DimVec) -> i64 {
    arrow_sum(q, b, a) - diag_sum(b, a)
}

fn arrow_sum(q: Quiver, b: &DimVec, a: &DimVec) -> i64 {
    b.iter()
        .map(|(i, bi)| {
            let j = q.step(*i, 1);
            *bi as i64 * a.get(&j).copied().unwrap_or(0) as i64
        })
        .sum()
}

fn diag_sum(b: &DimVec, a: &DimVec) -> i64 {
    b.iter().map(|(i, bi)| *bi as i64 * a.get(i).copied().unwrap_or(0) as i64).sum()
}

pub fn dim_total(d: &DimVec) -> usize {
    d.values().sum()
}

pub fn dim_add(a: &DimVec, b: &DimVec) -> DimVec {
    let mut out = a.clone();
    for (i, c) in b {
        *out.entry(*i).or_insert(0) += c;
    }
    out.retain(|_, c| *c > 0);
    out
}

/// `a - b`, or `None` if some entry would be negative.
pub fn dim_sub(a: &DimVec, b: &DimVec) -> Option<DimVec> {
    let mut out = a.clone();
    for (i, c) in b {
        let slot = out.entry(*i).or_insert(0);
        if *slot < *c {
            return None;
        }
        *slot -= c;
    }
    out.retain(|_, c| *c > 0);
    Some(out)
}

pub fn unit_dim(i: i64) -> DimVec {
    [(i, 1)].into_iter().collect()
}

/// Parses `"0:2,1:1"` style `vertex:dim` lists, or a plain list of dims
/// read from vertex 0 upward.
pub fn parse_dimvec(s: &str) -> Result<DimVec, CombinatError> {
    let mut out = DimVec::new();
    let t = s.trim();
    if t.is_empty() {
        return Ok(out);
    }
    for (idx, item) in t.split(',').enumerate() {
        let item = item.trim();
        let (k, v) = match item.split_once(':') {
            Some((k, v)) => (
                k.trim().parse::<i64>().map_err(|_| CombinatError::Parse(s.into()))?,
                v.trim().parse::<usize>().map_err(|_| CombinatError::Parse(s.into()))?,
            ),
            None => (idx as i64, item.parse::<usize>().map_err(|_| CombinatError::Parse(s.into()))?),
        };
        if v > 0 {
            *out.entry(k).or_insert(0) += v;
        }
    }
    Ok(out)
}

pub fn dimvec_string(d: &DimVec) -> String {
    d.iter().map(|(i, c)| format!("{}:{}", i, c)).collect::<Vec<_>>().join(",")
}

/// A multiset of segments `(start, length)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multisegment {
    quiver: Quiver,
    segs: BTreeMap<(i64, usize), usize>,
}

impl Multisegment {
    pub fn empty(quiver: Quiver) -> Self {
        Self { quiver, segs: BTreeMap::new() }
    }

    pub fn from_segments<I: IntoIterator<Item = (i64, usize, usize)>>(quiver: Quiver, it: I) -> Result<Self, CombinatError> {
        let mut m = Self::empty(quiver);
        for (s, len, mult) in it {
            if len == 0 {
                return Err(CombinatError::BadSegment(s, len));
            }
            if mult > 0 {
                *m.segs.entry((quiver.normalize(s), len)).or_insert(0) += mult;
            }
        }
        Ok(m)
    }

    /// The semisimple (zero) representation of dimension `d`.
    pub fn zero_rep(quiver: Quiver, d: &DimVec) -> Self {
        Self::from_segments(quiver, d.iter().map(|(i, c)| (*i, 1, *c))).expect("unit segments")
    }

    pub fn quiver(&self) -> Quiver {
        self.quiver
    }

    /// `(start, length, multiplicity)` triples in sorted order.
    pub fn segments(&self) -> impl Iterator<Item = (i64, usize, usize)> + '_ {
        self.segs.iter().map(|((s, l), m)| (*s, *l, *m))
    }

    /// Segments listed with repetition.
    pub fn segment_list(&self) -> Vec<(i64, usize)> {
        self.segs.iter().flat_map(|((s, l), m)| std::iter::repeat((*s, *l)).take(*m)).collect()
    }

    pub fn num_segments(&self) -> usize {
        self.segs.values().sum()
    }

    pub fn dim_vector(&self) -> DimVec {
        let mut d = DimVec::new();
        for ((s, l), m) in &self.segs {
            for o in 0..*l {
                *d.entry(self.quiver.step(*s, o as i64)).or_insert(0) += m;
            }
        }
        d
    }

    pub fn total_dim(&self) -> usize {
        self.segs.iter().map(|((_, l), m)| l * m).sum()
    }

    pub fn is_zero_rep(&self) -> bool {
        self.segs.keys().all(|(_, l)| *l == 1)
    }

    /// Rank of `x^k: V_j -> V_{j+k}`.
    pub fn rank(&self, j: i64, k: usize) -> usize {
        let j = self.quiver.normalize(j);
        let mut r = 0;
        for ((s, l), m) in &self.segs {
            for o in 0..*l {
                if o + k < *l && self.quiver.step(*s, o as i64) == j {
                    r += m;
                }
            }
        }
        r
    }

    /// Sum of all ranks `rank(x^k)` over vertices and `k ≥ 1`.
    pub fn rank_sum(&self) -> usize {
        self.segs.iter().map(|((_, l), m)| m * l * (l - 1) / 2).sum()
    }

    /// `dim Ker x^k` at each vertex.
    pub fn kernel_dims(&self, k: usize) -> DimVec {
        let mut d = DimVec::new();
        for ((s, l), m) in &self.segs {
            for o in 0..*l {
                if o + k >= *l {
                    *d.entry(self.quiver.step(*s, o as i64)).or_insert(0) += m;
                }
            }
        }
        d
    }

    /// Semicolon-separated `start:length:multiplicity`.
    pub fn to_text(&self) -> String {
        self.segs.iter().map(|((s, l), m)| format!("{}:{}:{}", s, l, m)).collect::<Vec<_>>().join(";")
    }

    pub fn parse(quiver: Quiver, s: &str) -> Result<Self, CombinatError> {
        let t = s.trim();
        if t.is_empty() || t == "0" {
            return Ok(Self::empty(quiver));
        }
        let mut triples = Vec::new();
        for item in t.split(';') {
            let f: Vec<&str> = item.trim().split(':').collect();
            let num = |x: &str| x.trim().parse::<i64>().map_err(|_| CombinatError::Parse(s.to_string()));
            let (st, len, mult) = match f.len() {
                2 => (num(f[0])?, num(f[1])?, 1),
                3 => (num(f[0])?, num(f[1])?, num(f[2])?),
                _ => return Err(CombinatError::Parse(s.to_string())),
            };
            if len <= 0 || mult < 0 {
                return Err(CombinatError::Parse(s.to_string()));
            }
            triples.push((st, len as usize, mult as usize));
        }
        Self::from_segments(quiver, triples)
    }

    /// The orbit `O_λ = ⊕_k [1-k, λ_k - k]`, segments reduced mod n.
    pub fn of_partition(lambda: &Partition, n: usize) -> Self {
        let q = Quiver::Cyclic(n);
        Self::from_segments(q, lambda.parts().iter().enumerate().map(|(k, &p)| (-(k as i64), p, 1))).expect("positive parts")
    }
}

impl fmt::Display for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.segs.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", self.to_text())
        }
    }
}

impl fmt::Debug for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self)
    }
}

/// All multisegments with dimension vector `d`, ordered so that any orbit
/// appears before the orbits in its closure.
pub fn enumerate_multisegments(d: &DimVec, quiver: Quiver) -> Vec<Multisegment> {
    let total = dim_total(d);
    let mut candidates = Vec::new();
    for &s in d.keys() {
        for len in 1..=total {
            let seg = Multisegment::from_segments(quiver, [(s, len, 1)]).unwrap();
            if dim_sub(d, &seg.dim_vector()).is_some() {
                candidates.push((s, len));
            } else {
                break;
            }
        }
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(
        idx: usize,
        rem: &DimVec,
        cands: &[(i64, usize)],
        quiver: Quiver,
        cur: &mut Vec<(i64, usize)>,
        out: &mut Vec<Multisegment>,
    ) {
        if rem.is_empty() {
            out.push(Multisegment::from_segments(quiver, cur.iter().map(|&(s, l)| (s, l, 1))).unwrap());
            return;
        }
        for j in idx..cands.len() {
            let (s, l) = cands[j];
            let content = Multisegment::from_segments(quiver, [(s, l, 1)]).unwrap().dim_vector();
            if let Some(next) = dim_sub(rem, &content) {
                cur.push((s, l));
                rec(j, &next, cands, quiver, cur, out);
                cur.pop();
            }
        }
    }
    rec(0, d, &candidates, quiver, &mut cur, &mut out);
    sort_orbits(&mut out);
    out.dedup();
    out
}

/// Descending total rank, then ascending segment list.
pub fn sort_orbits(v: &mut [Multisegment]) {
    v.sort_by(|a, b| b.rank_sum().cmp(&a.rank_sum()).then_with(|| a.segment_list().cmp(&b.segment_list())));
}

/// `O' ≤ O` in the closure order, decided by rank functions.
pub fn closure_leq(o1: &Multisegment, o: &Multisegment) -> Result<bool, CombinatError> {
    let d = o.dim_vector();
    if o1.dim_vector() != d || o1.quiver != o.quiver {
        return Err(CombinatError::DimMismatch);
    }
    let total = dim_total(&d);
    for &j in d.keys() {
        for k in 1..=total {
            if o1.rank(j, k) > o.rank(j, k) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ms(n: usize, s: &str) -> Multisegment {
        Multisegment::parse(Quiver::Cyclic(n), s).unwrap()
    }

    #[test]
    fn enumerate_n2() {
        let q = Quiver::Cyclic(2);
        assert_eq!(enumerate_multisegments(&unit_dim(0), q), vec![ms(2, "0:1:1")]);
        let d = parse_dimvec("1,1").unwrap();
        assert_eq!(enumerate_multisegments(&d, q), vec![ms(2, "0:2"), ms(2, "1:2"), ms(2, "0:1;1:1")]);
        let d = parse_dimvec("2").unwrap();
        assert_eq!(enumerate_multisegments(&d, q), vec![ms(2, "0:1:2")]);
    }

    #[test]
    fn closure_examples() {
        let a = ms(2, "0:2");
        let b = ms(2, "1:2");
        let z = ms(2, "0:1;1:1");
        assert!(closure_leq(&a, &a).unwrap());
        assert!(closure_leq(&z, &a).unwrap());
        assert!(!closure_leq(&a, &b).unwrap());
        assert!(!closure_leq(&b, &a).unwrap());
        assert!(closure_leq(&a, &ms(2, "0:1")).is_err());
    }

    #[test]
    fn text_round_trip() {
        let m = ms(3, "0:2:1;1:1:2");
        assert_eq!(m.to_text(), "0:2:1;1:1:2");
        assert_eq!(ms(3, &m.to_text()), m);
        assert_eq!(m.dim_vector(), parse_dimvec("1,3").unwrap());
    }

    #[test]
    fn orbit_of_partition() {
        let o = Multisegment::of_partition(&"2,1".parse().unwrap(), 2);
        // rows: [0,1] and [-1,-1] -> (0,2) and (1,1)
        assert_eq!(o, ms(2, "0:2;1:1"));
        assert_eq!(o.dim_vector(), parse_dimvec("1,2").unwrap());
    }

    #[test]
    fn forms() {
        let q = Quiver::Cyclic(2);
        assert_eq!(form_m(q, &unit_dim(1), &unit_dim(0)), 1);
        assert_eq!(form_n(q, &unit_dim(0), &unit_dim(0)), -1);
        assert_eq!(form_n(Quiver::Cyclic(3), &unit_dim(0), &unit_dim(2)), 0);
        assert_eq!(form_m(Quiver::Linear, &unit_dim(0), &unit_dim(1)), 1);
    }
}
