use fockbasis::combinat::partition::residue;
use fockbasis::combinat::partitions_of;
use fockbasis::heckewedge::fock::unit_alpha;
use fockbasis::heckewedge::straighten::is_normal;
use fockbasis::heckewedge::{f_alpha, hayashi_action, psi_finite, psi_word, straighten, straighten_vector, FockVector, HayashiKind, Space, TensorVector};
use fockbasis::verify::check_hecke_relations;
use fockbasis::LaurentPolynomial as LP;
use proptest::prelude::*;

#[test]
fn hecke_relations_on_wide_window() {
    for n in [2, 3] {
        for l in [2, 3] {
            let c = check_hecke_relations(n, l, -6, 6);
            assert!(c.passed, "{:?}", c.failures);
        }
    }
}

fn residues(w: &[i64], n: usize) -> Vec<usize> {
    let mut r: Vec<usize> = w.iter().map(|&a| residue(a, n)).collect();
    r.sort();
    r
}

proptest! {
    #[test]
    fn straighten_keeps_sum_and_residues(n in 2usize..=3, w in prop::collection::vec(-6i64..=6, 2..=4)) {
        let s = straighten(&w, n).unwrap();
        for (u, _) in s.iter() {
            prop_assert!(is_normal(u));
            prop_assert_eq!(u.iter().sum::<i64>(), w.iter().sum::<i64>());
            prop_assert_eq!(residues(u, n), residues(&w, n));
        }
        prop_assert_eq!(straighten_vector(&s, n).unwrap(), s);
    }

    #[test]
    fn psi_is_a_semilinear_involution(n in 2usize..=3, mut w in prop::collection::vec(-5i64..=5, 1..=3), e in -3i64..=3) {
        w.sort_unstable_by(|a, b| b.cmp(a));
        w.dedup();
        let p = psi_word(&w, n).unwrap();
        prop_assert_eq!(psi_finite(&p, n).unwrap(), TensorVector::basis(w.clone()));
        let scaled = TensorVector::single(w.clone(), LP::v_pow(e));
        prop_assert_eq!(psi_finite(&scaled, n).unwrap(), p.scale(&LP::v_pow(-e)));
    }
}

#[test]
fn single_box_generators_match_hayashi() {
    for n in [2usize, 3] {
        for w in 0..=6 {
            for lam in partitions_of(w, None) {
                let e = FockVector::basis(lam.clone());
                for r in 0..n {
                    let a = f_alpha(Space::SemiInfinite, &unit_alpha(r, n), &e, n).unwrap();
                    assert_eq!(a, hayashi_action(HayashiKind::F, r, &e, n), "{} r={}", lam, r);
                }
            }
        }
    }
}

/// `(v^m - v^-m)/(v - v^-1)`.
fn quantum_integer(m: i64) -> LP {
    let s = if m < 0 { -1 } else { 1 };
    let m = m.abs();
    LP::from_terms((0..m).map(|k| (m - 1 - 2 * k, s)))
}

#[test]
fn hayashi_commutator() {
    for n in [2usize, 3] {
        for w in 0..=5 {
            for lam in partitions_of(w, None) {
                let x = FockVector::basis(lam.clone());
                for i in 0..n {
                    for j in 0..n {
                        let ef = hayashi_action(HayashiKind::E, i, &hayashi_action(HayashiKind::F, j, &x, n), n);
                        let fe = hayashi_action(HayashiKind::F, j, &hayashi_action(HayashiKind::E, i, &x, n), n);
                        let mut lhs = ef;
                        lhs.add_scaled(&fe, &LP::from(-1));
                        let want = if i == j {
                            let k = hayashi_action(HayashiKind::K, i, &x, n);
                            let m = k.coeff(&lam).min_exp().unwrap();
                            FockVector::single(lam.clone(), quantum_integer(m))
                        } else {
                            FockVector::zero()
                        };
                        assert_eq!(lhs, want, "{} i={} j={}", lam, i, j);
                    }
                }
            }
        }
    }
}
