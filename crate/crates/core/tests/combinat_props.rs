use fockbasis::combinat::multisegment::{closure_leq, enumerate_multisegments, DimVec, Quiver};
use fockbasis::combinat::{alcove_decompose, partitions_of, residue_data, AffinePermutation};
use proptest::prelude::*;

proptest! {
    #[test]
    fn alcove_decomposition_reproduces_word(n in 2usize..=3, j in prop::collection::vec(-8i64..=8, 1..=3)) {
        let (i, x) = alcove_decompose(&j, n);
        prop_assert_eq!(x.act(&i, n), j);
    }

    #[test]
    fn length_is_additive_along_reduced_words(n in 2usize..=3, j in prop::collection::vec(-8i64..=8, 2..=3)) {
        let (_, x) = alcove_decompose(&j, n);
        let l = x.rank();
        let (p, word) = x.reduced_word();
        let mut cur = AffinePermutation::identity(l);
        for _ in 0..p.unsigned_abs() {
            let pi = AffinePermutation::pi(l);
            cur = cur.mul(&if p > 0 { pi } else { pi.inverse() });
        }
        prop_assert_eq!(cur.length(), 0);
        for (k, &s) in word.iter().enumerate() {
            cur = cur.mul_s(s);
            prop_assert_eq!(cur.length(), k + 1);
        }
        prop_assert_eq!(cur, x);
    }
}

#[test]
fn residue_identities_up_to_weight_eight() {
    for n in [2usize, 3, 4] {
        for w in 0..=8 {
            for lam in partitions_of(w, None) {
                let rd = residue_data(&lam, n);
                let lo = -(lam.len() as i64) - 2;
                let hi = lam.part(1) as i64 + 2;
                let total: usize = (lo..=hi).map(|i| rd.d(i)).sum();
                assert_eq!(total, w);
                for j in lo + 1..hi {
                    let want = -2 * rd.d(j) as i64 + rd.d(j - 1) as i64 + rd.d(j + 1) as i64 + i64::from(j == 0);
                    assert_eq!(rd.n_i(j), want, "{} at {}", lam, j);
                }
            }
        }
    }
}

fn dims(n: usize, max: usize) -> Vec<DimVec> {
    let mut out: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..n {
        out = out.into_iter().flat_map(|a| (0..=max).map(move |c| [a.clone(), vec![c]].concat())).collect();
    }
    out.into_iter()
        .filter(|a| (1..=max).contains(&a.iter().sum()))
        .map(|a| a.iter().enumerate().filter(|(_, c)| **c > 0).map(|(i, c)| (i as i64, *c)).collect())
        .collect()
}

#[test]
fn closure_order_is_a_partial_order() {
    for n in [2usize, 3] {
        for d in dims(n, 5) {
            let os = enumerate_multisegments(&d, Quiver::Cyclic(n));
            let leq: Vec<Vec<bool>> = os.iter().map(|a| os.iter().map(|b| closure_leq(a, b).unwrap()).collect()).collect();
            for a in 0..os.len() {
                assert!(leq[a][a]);
                for b in 0..os.len() {
                    if a != b {
                        assert!(!(leq[a][b] && leq[b][a]), "{} {}", os[a], os[b]);
                    }
                    for c in 0..os.len() {
                        if leq[a][b] && leq[b][c] {
                            assert!(leq[a][c]);
                        }
                    }
                }
            }
        }
    }
}
