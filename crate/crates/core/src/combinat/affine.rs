//! The extended affine symmetric group acting on ℤ^l on the right.
//!
//! An element is stored as its window `w(1..=l)` of a bijection `ℤ -> ℤ`
//! with `w(k + l) = w(k) + l`. It acts on words by `((i)w)_k = ĩ_{w(k)}`
//! where `ĩ_{k+l} = ĩ_k + n`, so `(i)(xy) = ((i)x)y` and the window of
//! `xy` is `w_x ∘ w_y`.

use std::fmt;

use super::partition::residue;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffinePermutation {
    window: Vec<i64>,
}

impl AffinePermutation {
    /// Builds from a window, checking it describes a bijection.
    pub fn from_window(window: Vec<i64>) -> Option<Self> {
        let l = window.len() as i64;
        if l == 0 {
            return Some(Self { window });
        }
        let mut seen = vec![false; window.len()];
        for &w in &window {
            let r = w.rem_euclid(l) as usize;
            if seen[r] {
                return None;
            }
            seen[r] = true;
        }
        Some(Self { window })
    }

    pub fn identity(l: usize) -> Self {
        Self { window: (1..=l as i64).collect() }
    }

    /// The simple reflection `s_j`, `0 ≤ j < l`.
    pub fn s(j: usize, l: usize) -> Self {
        Self::identity(l).mul_s(j)
    }

    /// The length-zero generator: `w(k) = k + 1`.
    pub fn pi(l: usize) -> Self {
        Self { window: (2..=l as i64 + 1).collect() }
    }

    /// Translation by `λ ∈ ℤ^l`: `(i)λ = i + nλ`.
    pub fn translation(lambda: &[i64]) -> Self {
        let l = lambda.len() as i64;
        Self { window: lambda.iter().enumerate().map(|(k, t)| k as i64 + 1 + l * t).collect() }
    }

    pub fn rank(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    /// `w(k)` for any integer `k`.
    pub fn at(&self, k: i64) -> i64 {
        let l = self.window.len() as i64;
        let r = (k - 1).rem_euclid(l);
        let q = (k - 1).div_euclid(l);
        self.window[r as usize] + q * l
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(k, &w)| w == k as i64 + 1)
    }

    /// Product `self * other` (apply `self` first in the right action).
    pub fn mul(&self, other: &Self) -> Self {
        Self { window: other.window.iter().map(|&k| self.at(k)).collect() }
    }

    pub fn inverse(&self) -> Self {
        let l = self.window.len() as i64;
        let mut inv = vec![0i64; self.window.len()];
        for (k, &w) in self.window.iter().enumerate() {
            let r = (w - 1).rem_euclid(l);
            let q = (w - 1).div_euclid(l);
            inv[r as usize] = k as i64 + 1 - q * l;
        }
        Self { window: inv }
    }

    /// `self * s_j`.
    pub fn mul_s(&self, j: usize) -> Self {
        let l = self.window.len();
        let mut w = self.window.clone();
        if j == 0 {
            let last = w[l - 1];
            let first = w[0];
            w[0] = last - l as i64;
            w[l - 1] = first + l as i64;
        } else {
            w.swap(j - 1, j);
        }
        Self { window: w }
    }

    /// `s_j * self`.
    pub fn s_mul(&self, j: usize) -> Self {
        Self::s(j, self.rank()).mul(self)
    }

    /// Exponent of `π` in the factorization `π^p · c`.
    pub fn pi_power(&self) -> i64 {
        let l = self.window.len() as i64;
        let s: i64 = self.window.iter().enumerate().map(|(k, &w)| w - (k as i64 + 1)).sum();
        debug_assert_eq!(s.rem_euclid(l), 0);
        s / l
    }

    /// The Coxeter part `c` with `self = π^p · c`.
    pub fn coxeter_part(&self) -> Self {
        let p = self.pi_power();
        Self { window: self.window.iter().map(|w| w - p).collect() }
    }

    /// Number of inversions `a ∈ [1,l], b > a, w(a) > w(b)`.
    pub fn length(&self) -> usize {
        let l = self.window.len() as i64;
        let mut count = 0i64;
        for a in 0..l as usize {
            for b in 0..l as usize {
                // pairs (a, b + t l) with b + t l > a and w(a) > w(b) + t l
                let wa = self.window[a];
                let wb = self.window[b];
                let tmin = if b > a { 0 } else { 1 };
                // w(a) - w(b) > t l  <=>  t < (wa - wb)/l
                let diff = wa - wb;
                if diff <= 0 {
                    continue;
                }
                let tmax = (diff - 1).div_euclid(l);
                if tmax >= tmin {
                    count += tmax - tmin + 1;
                }
            }
        }
        count as usize
    }

    /// True when `s_j` is a right descent.
    pub fn has_right_descent(&self, j: usize) -> bool {
        self.at(j as i64) > self.at(j as i64 + 1)
    }

    pub fn right_descents(&self) -> Vec<usize> {
        (0..self.rank()).filter(|&j| self.has_right_descent(j)).collect()
    }

    pub fn has_left_descent(&self, j: usize) -> bool {
        self.inverse().has_right_descent(j)
    }

    /// `(i)w`.
    pub fn act(&self, word: &[i64], n: usize) -> Vec<i64> {
        let l = word.len() as i64;
        assert_eq!(word.len(), self.window.len());
        self.window
            .iter()
            .map(|&w| {
                let r = (w - 1).rem_euclid(l);
                let q = (w - 1).div_euclid(l);
                word[r as usize] + q * n as i64
            })
            .collect()
    }

    /// True when the element lies in the finite symmetric group.
    pub fn is_finite(&self) -> bool {
        let l = self.window.len() as i64;
        self.window.iter().all(|&w| w >= 1 && w <= l)
    }

    /// A reduced word `(p, [j_1, ..., j_r])` with `self = π^p s_{j_1} ... s_{j_r}`.
    pub fn reduced_word(&self) -> (i64, Vec<usize>) {
        let p = self.pi_power();
        let mut c = self.coxeter_part();
        let mut word = Vec::new();
        while !c.is_identity() {
            let j = c.right_descents()[0];
            c = c.mul_s(j);
            word.push(j);
        }
        word.reverse();
        (p, word)
    }
}

impl fmt::Debug for AffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.window)
    }
}

impl fmt::Display for AffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.window.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(","))
    }
}

/// Alcove decomposition `j = (i)x`: `i` the sorted reduction of `j` into
/// `(-n, 0]`, and `x` minimal in its coset `𝔖_i x`.
pub fn alcove_decompose(j: &[i64], n: usize) -> (Vec<i64>, AffinePermutation) {
    let l = j.len();
    let ni = n as i64;
    let reduce = |a: i64| -> (i64, i64) {
        // a = r + t n with r in (-n, 0]
        let r = -((-a).rem_euclid(ni));
        (r, (a - r) / ni)
    };
    let mut i: Vec<i64> = j.iter().map(|&a| reduce(a).0).collect();
    i.sort();
    let mut window = vec![0i64; l];
    let mut k = 0;
    while k < l {
        let r = i[k];
        let block_end = (k..l).find(|&m| i[m] != r).unwrap_or(l);
        // positions of j in this class, keyed by w^{-1} value k - t l
        let mut pos: Vec<(i64, usize, i64)> = j
            .iter()
            .enumerate()
            .filter(|(_, &a)| reduce(a).0 == r)
            .map(|(p, &a)| {
                let t = reduce(a).1;
                (p as i64 + 1 - t * l as i64, p, t)
            })
            .collect();
        pos.sort();
        for (off, (_, p, t)) in pos.into_iter().enumerate() {
            window[p] = (k + off) as i64 + 1 + t * l as i64;
        }
        k = block_end;
    }
    (i, AffinePermutation { window })
}

/// `true` when `i` is in the alcove `1-n ≤ i_1 ≤ ... ≤ i_l ≤ 0`.
pub fn in_alcove(i: &[i64], n: usize) -> bool {
    i.iter().all(|&a| a <= 0 && a > -(n as i64)) && i.windows(2).all(|w| w[0] <= w[1])
}

/// `(l(ω), l(ω_i), l(ω^i))` for `i` in the alcove.
pub fn parabolic_lengths(i: &[i64]) -> (usize, usize, usize) {
    let l = i.len();
    let lw = l * l.saturating_sub(1) / 2;
    let mut li = 0;
    let mut k = 0;
    while k < l {
        let e = (k..l).find(|&m| i[m] != i[k]).unwrap_or(l);
        let m = e - k;
        li += m * (m - 1) / 2;
        k = e;
    }
    (lw, li, lw - li)
}

/// `l(ω^i)` computed from any word through its residue multiplicities.
pub fn omega_upper_length(word: &[i64], n: usize) -> usize {
    let mut counts = vec![0usize; n];
    for &a in word {
        counts[residue(a, n)] += 1;
    }
    let l = word.len();
    l * l.saturating_sub(1) / 2 - counts.iter().map(|m| m * m.saturating_sub(1) / 2).sum::<usize>()
}

/// `ρ = (0, -1, ..., 1-l)`.
pub fn rho(l: usize) -> Vec<i64> {
    (0..l as i64).map(|k| -k).collect()
}

/// Dot action `λ·x = (λ + ρ)x - ρ`.
pub fn dot_action(lambda: &[i64], x: &AffinePermutation, n: usize) -> Vec<i64> {
    let r = rho(lambda.len());
    let shifted: Vec<i64> = lambda.iter().zip(&r).map(|(a, b)| a + b).collect();
    x.act(&shifted, n).iter().zip(&r).map(|(a, b)| a - b).collect()
}

/// All elements of the finite symmetric group of rank `l`.
pub fn finite_group(l: usize) -> Vec<AffinePermutation> {
    fn perms(v: &mut Vec<i64>, k: usize, out: &mut Vec<Vec<i64>>) {
        if k == v.len() {
            out.push(v.clone());
            return;
        }
        for m in k..v.len() {
            v.swap(k, m);
            perms(v, k + 1, out);
            v.swap(k, m);
        }
    }
    let mut out = Vec::new();
    perms(&mut (1..=l as i64).collect(), 0, &mut out);
    out.sort();
    out.into_iter().map(|window| AffinePermutation { window }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ap(w: &[i64]) -> AffinePermutation {
        AffinePermutation::from_window(w.to_vec()).unwrap()
    }

    #[test]
    fn generator_actions() {
        let i = vec![-1, 0, -2];
        assert_eq!(AffinePermutation::s(1, 3).act(&i, 3), vec![0, -1, -2]);
        assert_eq!(AffinePermutation::s(0, 3).act(&i, 3), vec![-2 - 3, 0, -1 + 3]);
        assert_eq!(AffinePermutation::translation(&[1, 0, -1]).act(&i, 3), vec![2, 0, -5]);
    }

    #[test]
    fn lengths() {
        assert_eq!(AffinePermutation::identity(3).length(), 0);
        assert_eq!(AffinePermutation::pi(3).length(), 0);
        for j in 0..3 {
            assert_eq!(AffinePermutation::s(j, 3).length(), 1);
        }
        assert_eq!(ap(&[4, 1]).length(), 2);
        assert_eq!(ap(&[5, 2]).length(), 2);
        assert_eq!(ap(&[6, 1]).length(), 3);
    }

    #[test]
    fn pi_conjugation() {
        let l = 4;
        let p = AffinePermutation::pi(l);
        let pinv = p.inverse();
        for i in 1..l {
            assert_eq!(AffinePermutation::s(i - 1, l), pinv.mul(&AffinePermutation::s(i, l)).mul(&p));
        }
        assert_eq!(AffinePermutation::s(l - 1, l), pinv.mul(&AffinePermutation::s(0, l)).mul(&p));
    }

    #[test]
    fn alcove_examples() {
        let (i, x) = alcove_decompose(&[-1, 0], 2);
        assert_eq!(i, vec![-1, 0]);
        assert!(x.is_identity());
        let (i, x) = alcove_decompose(&[0, -1], 2);
        assert_eq!(i, vec![-1, 0]);
        assert_eq!(x, AffinePermutation::s(1, 2));
        let (i, x) = alcove_decompose(&[-1, 2], 2);
        assert_eq!(i, vec![-1, 0]);
        assert_eq!(x.length(), 1);
        assert_eq!(x.pi_power(), 1);
        let (_, x) = alcove_decompose(&[2, -1], 2);
        assert_eq!(x, ap(&[4, 1]));
        let (i, x) = alcove_decompose(&[3, -1], 2);
        assert_eq!(i, vec![-1, -1]);
        assert_eq!(x, ap(&[5, 2]));
    }

    #[test]
    fn parabolic_examples() {
        assert_eq!(parabolic_lengths(&[-1, 0]), (1, 0, 1));
        assert_eq!(parabolic_lengths(&[0, 0]), (1, 1, 0));
        assert_eq!(parabolic_lengths(&[-1, -1, 0]), (3, 1, 2));
    }

    #[test]
    fn reduced_word_rebuilds() {
        let x = ap(&[5, 0, -2]);
        let (p, word) = x.reduced_word();
        assert_eq!(word.len(), x.length());
        let mut y = AffinePermutation::identity(3);
        let g = if p >= 0 { AffinePermutation::pi(3) } else { AffinePermutation::pi(3).inverse() };
        for _ in 0..p.abs() {
            y = y.mul(&g);
        }
        for j in word {
            y = y.mul_s(j);
        }
        assert_eq!(y, x);
    }
}
