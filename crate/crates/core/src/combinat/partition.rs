//! Partitions, residues and beta-sequences.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::CombinatError;

/// A partition stored as its weakly decreasing positive parts.
///
/// `Ord` is the lexicographic order on parts, which refines dominance.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self, CombinatError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.iter().any(|&p| p == 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(CombinatError::NotAPartition(parts));
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_k` for 1-based `k`, zero past the end.
    pub fn part(&self, k: usize) -> usize {
        if k == 0 {
            return 0;
        }
        self.parts.get(k - 1).copied().unwrap_or(0)
    }

    /// The conjugate partition.
    pub fn dual(&self) -> Self {
        let m = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=m).map(|c| self.parts.iter().filter(|&&p| p >= c).count()).collect();
        Self { parts }
    }

    /// Boxes as 1-based `(row, col)` pairs, row by row.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts.iter().enumerate().flat_map(|(r, &p)| (1..=p).map(move |c| (r + 1, c)))
    }

    /// Boxes that can be added: (row, col).
    pub fn addable(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for r in 1..=self.len() + 1 {
            let c = self.part(r) + 1;
            if r == 1 || self.part(r - 1) >= c {
                out.push((r, c));
            }
        }
        out
    }

    /// Boxes that can be removed: (row, col).
    pub fn removable(&self) -> Vec<(usize, usize)> {
        (1..=self.len())
            .filter(|&r| self.part(r) > self.part(r + 1))
            .map(|r| (r, self.part(r)))
            .collect()
    }

    pub fn add_box(&self, row: usize) -> Option<Self> {
        let mut parts = self.parts.clone();
        if row == parts.len() + 1 {
            parts.push(1);
        } else if row >= 1 && row <= parts.len() {
            parts[row - 1] += 1;
        } else {
            return None;
        }
        Self::new(parts).ok()
    }

    pub fn remove_box(&self, row: usize) -> Option<Self> {
        if row == 0 || row > self.parts.len() {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[row - 1] -= 1;
        Self::new(parts).ok()
    }

    /// `(λ_k + 1 - k)_{k=1..l}`, or `None` if λ has more than `l` parts.
    pub fn beta(&self, l: usize) -> Option<Vec<i64>> {
        if self.len() > l {
            return None;
        }
        Some((1..=l).map(|k| self.part(k) as i64 + 1 - k as i64).collect())
    }

    /// Inverse of [`Partition::beta`]; accepts any strictly decreasing word
    /// whose entries are at least the tail values.
    pub fn from_beta(word: &[i64]) -> Option<Self> {
        let mut parts = Vec::with_capacity(word.len());
        for (k, &i) in word.iter().enumerate() {
            let p = i - 1 + (k as i64 + 1);
            if p < 0 {
                return None;
            }
            parts.push(p as usize);
        }
        Self::new(parts).ok()
    }

    /// Text key: parts separated by commas, empty string for the empty partition.
    pub fn key(&self) -> String {
        self.parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.key())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.key())
    }
}

impl FromStr for Partition {
    type Err = CombinatError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if t.is_empty() || t == "∅" {
            return Ok(Self::empty());
        }
        let parts = t
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| CombinatError::Parse(s.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(parts)
    }
}

/// All partitions of `w`, optionally with at most `max_parts` parts, in
/// lexicographically decreasing order (largest part first).
pub fn partitions_of(w: usize, max_parts: Option<usize>) -> Vec<Partition> {
    fn rec(rem: usize, cap: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=cap.min(rem)).rev() {
            cur.push(p);
            rec(rem - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(w, w, max_parts.unwrap_or(usize::MAX), &mut Vec::new(), &mut out);
    out
}

/// Dominance order: `μ ⊴ λ`.
pub fn dominance_leq(mu: &Partition, lambda: &Partition) -> Result<bool, CombinatError> {
    if mu.weight() != lambda.weight() {
        return Err(CombinatError::WeightMismatch(mu.weight(), lambda.weight()));
    }
    let (mut a, mut b) = (0usize, 0usize);
    for k in 1..=mu.len().max(lambda.len()) {
        a += mu.part(k);
        b += lambda.part(k);
        if a > b {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Integer residue `i mod n` in `0..n`.
pub fn residue(i: i64, n: usize) -> usize {
    i.rem_euclid(n as i64) as usize
}

/// Box colors and addable/removable counts of a partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueData {
    pub n: usize,
    /// `d_{λ,i}`: number of boxes of color `i = col - row`.
    pub contents: BTreeMap<i64, usize>,
    /// `n_i(λ)`: addable minus removable `i`-boxes, zero entries omitted.
    pub ni: BTreeMap<i64, i64>,
}

impl ResidueData {
    pub fn n_i(&self, i: i64) -> i64 {
        self.ni.get(&i).copied().unwrap_or(0)
    }

    /// `Σ n_j` over `j > i`, `j ≡ i`.
    pub fn n_plus(&self, i: i64) -> i64 {
        let n = self.n as i64;
        self.ni.range(i + 1..).filter(|(j, _)| (*j - i) % n == 0).map(|(_, v)| *v).sum()
    }

    /// `Σ n_j` over `j < i`, `j ≡ i`.
    pub fn n_minus(&self, i: i64) -> i64 {
        let n = self.n as i64;
        self.ni.range(..i).filter(|(j, _)| (i - *j) % n == 0).map(|(_, v)| *v).sum()
    }

    /// `n_ī`: sum over the whole residue class.
    pub fn n_class(&self, r: usize) -> i64 {
        self.ni.iter().filter(|(j, _)| residue(**j, self.n) == r).map(|(_, v)| *v).sum()
    }

    /// Dimension vector over `ℤ/nℤ`.
    pub fn class_dims(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for (i, c) in &self.contents {
            d[residue(*i, self.n)] += c;
        }
        d
    }

    pub fn d(&self, i: i64) -> usize {
        self.contents.get(&i).copied().unwrap_or(0)
    }
}

pub fn color(row: usize, col: usize) -> i64 {
    col as i64 - row as i64
}

pub fn residue_data(lambda: &Partition, n: usize) -> ResidueData {
    let mut contents = BTreeMap::new();
    for (r, c) in lambda.boxes() {
        *contents.entry(color(r, c)).or_insert(0) += 1;
    }
    let mut ni: BTreeMap<i64, i64> = BTreeMap::new();
    for (r, c) in lambda.addable() {
        *ni.entry(color(r, c)).or_insert(0) += 1;
    }
    for (r, c) in lambda.removable() {
        *ni.entry(color(r, c)).or_insert(0) -= 1;
    }
    ni.retain(|_, v| *v != 0);
    ResidueData { n, contents, ni }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn enumerate_small() {
        assert_eq!(partitions_of(0, None), vec![Partition::empty()]);
        assert_eq!(partitions_of(3, None), vec![p("3"), p("2,1"), p("1,1,1")]);
        assert_eq!(partitions_of(4, Some(2)), vec![p("4"), p("3,1"), p("2,2")]);
        let counts: Vec<usize> = (0..10).map(|w| partitions_of(w, None).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30]);
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&p("1,1,1"), &p("3")).unwrap());
        assert!(!dominance_leq(&p("3"), &p("1,1,1")).unwrap());
        assert!(dominance_leq(&p("2,2"), &p("3,1")).unwrap());
        assert!(dominance_leq(&p("2"), &p("1")).is_err());
    }

    #[test]
    fn colors_of_432() {
        let r = residue_data(&p("4,3,2"), 3);
        let expected: BTreeMap<i64, usize> = [(-2, 1), (-1, 2), (0, 2), (1, 2), (2, 1), (3, 1)].into_iter().collect();
        assert_eq!(r.contents, expected);
    }

    #[test]
    fn empty_and_single_box() {
        let r = residue_data(&Partition::empty(), 2);
        assert_eq!(r.ni, [(0, 1)].into_iter().collect());
        let r = residue_data(&p("1"), 2);
        assert_eq!(r.n_i(0), -1);
        assert_eq!(r.n_i(1), 1);
        assert_eq!(r.n_i(-1), 1);
        assert_eq!(r.n_plus(0), 0);
        assert_eq!(r.n_class(1), 2);
    }

    #[test]
    fn beta_round_trip() {
        let l = p("3,1");
        assert_eq!(l.beta(3).unwrap(), vec![3, 0, -2]);
        assert_eq!(Partition::from_beta(&[3, 0, -2]).unwrap(), l);
        assert!(p("1,1,1").beta(2).is_none());
    }
}
