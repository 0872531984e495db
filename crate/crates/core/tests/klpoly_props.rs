use fockbasis::combinat::{alcove_decompose, partitions_of, AffinePermutation};
use fockbasis::heckewedge::{psi, Space};
use fockbasis::klpoly::{b_minus_via_kl, b_plus_via_kl, bruhat_interval, kl_q_coeffs, r_polynomial};
use fockbasis::LaurentPolynomial as LP;

/// Elements `x` with `l(x) ≤ max_len` from alcove decompositions of small words.
fn sample(l: usize, n: usize, max_len: usize) -> Vec<AffinePermutation> {
    let mut out = Vec::new();
    let range: Vec<i64> = (-5..=5).collect();
    let mut words = vec![vec![]];
    for _ in 0..l {
        words = words.into_iter().flat_map(|w: Vec<i64>| range.iter().map(move |&a| [w.clone(), vec![a]].concat())).collect();
    }
    for w in words {
        let (_, x) = alcove_decompose(&w, n);
        let x = x.coxeter_part();
        if x.length() <= max_len && !out.contains(&x) {
            out.push(x);
        }
    }
    out
}

fn q_poly(c: &[i64]) -> LP {
    LP::from_terms(c.iter().enumerate().map(|(k, &a)| (k as i64, a)))
}

#[test]
fn degree_bound_and_r_polynomial_identity() {
    for (l, n) in [(2, 2), (2, 3), (3, 2), (3, 3)] {
        for y in sample(l, n, 7) {
            let ly = y.length() as i64;
            let below = bruhat_interval(&y).unwrap();
            for x in &below {
                let p = kl_q_coeffs(x, &y).unwrap();
                let lx = x.length() as i64;
                assert_eq!(p.first().copied(), Some(1), "{} {}", x, y);
                if x != &y {
                    assert!(2 * (p.len() as i64 - 1) <= ly - lx - 1, "degree of P_{{{},{}}} = {:?}", x, y, p);
                }
                // q^{l(y)-l(x)} P_{x,y}(q^-1) = Σ_{x ≤ z ≤ y} R_{x,z} P_{z,y}
                let lhs = q_poly(&p).bar().shift(ly - lx);
                let mut rhs = LP::zero();
                for z in &below {
                    let r = r_polynomial(x, z).unwrap();
                    if r.is_empty() {
                        continue;
                    }
                    rhs += &q_poly(&r) * &q_poly(&kl_q_coeffs(z, &y).unwrap());
                }
                assert_eq!(lhs, rhs, "x={} y={}", x, y);
            }
        }
    }
}

#[test]
fn kl_columns_are_psi_fixed() {
    for n in [2usize, 3] {
        for w in 0..=5 {
            for lam in partitions_of(w, Some(2)) {
                for b in [b_minus_via_kl(&lam, n, 2).unwrap(), b_plus_via_kl(&lam, n, 2).unwrap()] {
                    assert_eq!(psi(Space::Finite(2), &b, n).unwrap(), b, "{} n={}", lam, n);
                    assert!(b.coeff(&lam).is_one());
                }
            }
        }
    }
}
