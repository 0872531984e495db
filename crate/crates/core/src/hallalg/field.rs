//! Linear algebra over prime fields and subspace enumeration.

pub type Vector = Vec<u64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Self {
        Self { p }
    }
    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        (a * b) % self.p
    }
    pub fn inv(&self, a: u64) -> u64 {
        // Fermat
        let mut r = 1u64;
        let mut b = a % self.p;
        let mut e = self.p - 2;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        r
    }

    /// Reduced row echelon form of the span; returns the nonzero rows.
    pub fn rref(&self, rows: &[Vector]) -> Vec<Vector> {
        let mut m: Vec<Vector> = rows.to_vec();
        let cols = m.first().map_or(0, |r| r.len());
        let mut r = 0;
        for c in 0..cols {
            let Some(piv) = (r..m.len()).find(|&i| m[i][c] != 0) else { continue };
            m.swap(r, piv);
            let inv = self.inv(m[r][c]);
            for x in m[r].iter_mut() {
                *x = self.mul(*x, inv);
            }
            for i in 0..m.len() {
                if i != r && m[i][c] != 0 {
                    let f = m[i][c];
                    for j in 0..cols {
                        let t = self.mul(f, m[r][j]);
                        m[i][j] = self.sub(m[i][j], t);
                    }
                }
            }
            r += 1;
            if r == m.len() {
                break;
            }
        }
        m.truncate(r);
        m
    }

    pub fn rank(&self, rows: &[Vector]) -> usize {
        self.rref(rows).len()
    }

    /// Vectors from `big` extending a basis of `span(small)` to `span(small ∪ big)`.
    pub fn complement(&self, small: &[Vector], big: &[Vector]) -> Vec<Vector> {
        let mut cur: Vec<Vector> = small.to_vec();
        let mut base = self.rank(&cur);
        let mut out = Vec::new();
        for v in big {
            cur.push(v.clone());
            let r = self.rank(&cur);
            if r > base {
                base = r;
                out.push(v.clone());
            } else {
                cur.pop();
            }
        }
        out
    }

    /// All `m`-dimensional subspaces of `span(basis)` (basis assumed independent),
    /// each returned as a list of spanning vectors.
    pub fn subspaces(&self, basis: &[Vector], m: usize) -> Vec<Vec<Vector>> {
        let k = basis.len();
        if m > k {
            return Vec::new();
        }
        let len = basis.first().map_or(0, |v| v.len());
        let mut out = Vec::new();
        for pivots in combinations(k, m) {
            // free slots: (row, col) with col > pivot[row] and col not a pivot
            let mut free = Vec::new();
            for (row, &pc) in pivots.iter().enumerate() {
                for col in pc + 1..k {
                    if !pivots.contains(&col) {
                        free.push((row, col));
                    }
                }
            }
            let total = (self.p as u128).pow(free.len() as u32);
            for code in 0..total {
                let mut coeffs = vec![vec![0u64; k]; m];
                for (row, &pc) in pivots.iter().enumerate() {
                    coeffs[row][pc] = 1;
                }
                let mut c = code;
                for &(row, col) in &free {
                    coeffs[row][col] = (c % self.p as u128) as u64;
                    c /= self.p as u128;
                }
                let vecs: Vec<Vector> = coeffs
                    .iter()
                    .map(|cr| {
                        let mut v = vec![0u64; len];
                        for (j, &a) in cr.iter().enumerate() {
                            if a != 0 {
                                for (t, b) in basis[j].iter().enumerate() {
                                    v[t] = self.add(v[t], self.mul(a, *b));
                                }
                            }
                        }
                        v
                    })
                    .collect();
                out.push(vecs);
            }
        }
        out
    }

    /// All subspaces `W` with `lower ⊆ W ⊆ upper` and `dim W = m`.
    pub fn subspaces_between(&self, lower: &[Vector], upper: &[Vector], m: usize) -> Vec<Vec<Vector>> {
        let low = self.rref(lower);
        if m < low.len() {
            return Vec::new();
        }
        let comp = self.complement(&low, upper);
        self.subspaces(&comp, m - low.len())
            .into_iter()
            .map(|mut w| {
                w.extend(low.iter().cloned());
                w
            })
            .collect()
    }
}

/// Increasing `m`-subsets of `0..k`.
pub fn combinations(k: usize, m: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, k: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for i in start..k {
            if k - i < m - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, k, m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, k, m, &mut Vec::new(), &mut out);
    out
}

/// Number of `m`-subspaces of `F_q^k`.
pub fn gaussian_binomial(k: usize, m: usize, q: u64) -> u128 {
    if m > k {
        return 0;
    }
    let q = q as u128;
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..m {
        num *= q.pow((k - i) as u32) - 1;
        den *= q.pow((i + 1) as u32) - 1;
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    fn std_basis(k: usize) -> Vec<Vector> {
        (0..k).map(|i| (0..k).map(|j| u64::from(i == j)).collect()).collect()
    }

    #[test]
    fn subspace_counts_match_gaussian_binomials() {
        for p in [2u64, 3, 5] {
            let f = Fp::new(p);
            for k in 0..4 {
                for m in 0..=k {
                    assert_eq!(f.subspaces(&std_basis(k), m).len() as u128, gaussian_binomial(k, m, p));
                }
            }
        }
    }

    #[test]
    fn subspaces_are_distinct() {
        let f = Fp::new(3);
        let mut seen: Vec<Vec<Vector>> = f.subspaces(&std_basis(3), 2).into_iter().map(|w| f.rref(&w)).collect();
        let before = seen.len();
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), before);
    }

    #[test]
    fn between_counts() {
        let f = Fp::new(2);
        let b = std_basis(3);
        let lower = vec![b[0].clone()];
        assert_eq!(f.subspaces_between(&lower, &b, 2).len(), 3);
    }
}
