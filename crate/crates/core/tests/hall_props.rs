use fockbasis::combinat::multisegment::{enumerate_multisegments, parse_dimvec, DimVec, Quiver};
use fockbasis::combinat::partitions_of;
use fockbasis::hallalg::{flag_function, flag_monomial, hall_fock_action, jordan_type, orbit_in_monomials, HallVector};
use fockbasis::heckewedge::FockVector;
use fockbasis::verify::{
    check_associativity, check_bar, check_canonical, check_fock_dual_route, check_gamma_mod_v_minus_1, check_gamma_multiplicative,
    check_gamma_semisimple, check_held_out_prime, cyclic_dims,
};

#[test]
fn structure_checks() {
    for c in [
        check_associativity(2, 3),
        check_held_out_prime(2, 3),
        check_bar(Quiver::Cyclic(2), 2, 3),
        check_bar(Quiver::Linear, 1, 3),
        check_canonical(2, 4),
        check_canonical(3, 3),
    ] {
        assert!(c.passed, "{}: {:?}", c.name, c.failures);
    }
}

#[test]
fn gamma_checks() {
    for n in [2, 3] {
        for c in [
            check_gamma_semisimple(n, 25, 1),
            check_gamma_multiplicative(n, 25, 2),
            check_gamma_mod_v_minus_1(n, 3),
            check_fock_dual_route(n, 2, 4),
        ] {
            assert!(c.passed, "{}: {:?}", c.name, c.failures);
        }
    }
}

#[test]
fn flag_functions_two_routes() {
    for n in [2usize, 3] {
        let q = Quiver::Cyclic(n);
        for d in cyclic_dims(n, 1, 3) {
            for o in enumerate_multisegments(&d, q) {
                let fl = jordan_type(&o);
                assert_eq!(flag_function(q, &fl).unwrap(), flag_monomial(q, &fl).unwrap(), "{:?}", fl);
                let mut back = HallVector::zero();
                for (f, c) in orbit_in_monomials(&o).unwrap() {
                    back.add_scaled(&flag_function(q, &f).unwrap(), &c);
                }
                assert_eq!(back, HallVector::basis(o.clone()));
            }
        }
    }
}

#[test]
fn action_raises_weight_by_dimension() {
    let n = 2;
    let q = Quiver::Cyclic(n);
    for d in [parse_dimvec("1").unwrap(), parse_dimvec("1,1").unwrap(), parse_dimvec("2,1").unwrap()] {
        let size: usize = d.values().sum();
        for o in enumerate_multisegments(&d, q) {
            for w in 0..=3 {
                for lam in partitions_of(w, None) {
                    let out = hall_fock_action(&HallVector::basis(o.clone()), &FockVector::basis(lam), n).unwrap();
                    assert!(out.keys().all(|mu| mu.weight() == w + size));
                    // and the residue content grows by d
                    for mu in out.keys() {
                        let grown: DimVec = fockbasis::combinat::residue_data(mu, n)
                            .class_dims()
                            .iter()
                            .enumerate()
                            .filter(|(_, c)| **c > 0)
                            .map(|(i, c)| (i as i64, *c))
                            .collect();
                        assert!(d.iter().all(|(i, c)| grown.get(i).copied().unwrap_or(0) >= *c));
                    }
                }
            }
        }
    }
}
