//! One line per acceptance criterion; exits nonzero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use fockbasis::canonfock::decomposition_matrix;
use fockbasis::combinat::multisegment::Quiver;
use fockbasis::heckewedge::Space;
use fockbasis::verify::*;
use num_bigint::BigInt;

fn all(checks: Vec<Check>) -> (bool, String) {
    let cases: usize = checks.iter().map(|c| c.cases).sum();
    let bad: Vec<String> = checks
        .iter()
        .filter(|c| !c.passed)
        .map(|c| format!("{}: {}", c.name, c.failures.iter().take(3).cloned().collect::<Vec<_>>().join("; ")))
        .collect();
    (bad.is_empty(), if bad.is_empty() { format!("{} cases", cases) } else { bad.join(" | ") })
}

fn weight_two_matrix() -> Check {
    let d = decomposition_matrix(2, 2).expect("weight 2");
    let want = vec![vec![BigInt::from(1), BigInt::from(0)], vec![BigInt::from(1), BigInt::from(1)]];
    let ok = d.entries == want;
    Check {
        name: "n=2 weight 2 decomposition matrix".into(),
        passed: ok,
        cases: 1,
        failures: if ok { vec![] } else { vec![format!("{:?}", d.entries)] },
        seconds: 0.0,
    }
}

fn main() -> ExitCode {
    let criteria: Vec<(&str, Box<dyn Fn() -> Vec<Check>>)> = vec![
        ("straightening agrees with the quotient oracle", Box::new(|| {
            [2, 3].iter().flat_map(|&n| [2, 3].map(|l| check_straighten(n, l, -4, 4))).collect()
        })),
        ("quadratic, braid and Bernstein relations", Box::new(|| {
            [2, 3].iter().flat_map(|&n| [2, 3].map(|l| check_hecke_relations(n, l, -4, 4))).collect()
        })),
        ("psi is a semilinear involution commuting with f_alpha", Box::new(|| {
            [2, 3].iter().map(|&n| check_involution(n, Space::SemiInfinite, 5)).collect()
        })),
        ("Hall basis is psi-fixed and unitriangular", Box::new(|| {
            [2, 3].iter().map(|&n| check_hall_basis(n, 4)).collect()
        })),
        ("finite wedge B_l = B_l+ (n=3, l=2)", Box::new(|| vec![check_finite_identity(3, 2, 5)])),
        ("B = B+ (n=2)", Box::new(|| vec![check_compare(2, 4).remove(0)])),
        ("b- via KL equals b- via LT (n=2, l=2)", Box::new(|| vec![check_kl_minus(2, 2, 4)])),
        ("inversion identity and decomposition matrices", Box::new(|| {
            let mut v: Vec<Check> = [2, 3].iter().flat_map(|&n| check_compare(n, 4).into_iter().skip(1)).collect();
            v.push(weight_two_matrix());
            v
        })),
        ("Hall algebra products, fitting, bar, canonical basis", Box::new(|| {
            vec![
                check_associativity(2, 3),
                check_held_out_prime(2, 3),
                check_bar(Quiver::Cyclic(2), 2, 3),
                check_bar(Quiver::Linear, 1, 2),
                check_canonical(2, 3),
            ]
        })),
        ("gamma and the two Fock action routes", Box::new(|| {
            [2, 3]
                .iter()
                .flat_map(|&n| {
                    vec![
                        check_gamma_semisimple(n, 10, 11),
                        check_gamma_multiplicative(n, 10, 12),
                        check_gamma_mod_v_minus_1(n, 3),
                        check_fock_dual_route(n, 2, 4),
                    ]
                })
                .collect()
        })),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let (ok, detail) = all(run());
        if !ok {
            failed += 1;
        }
        println!(
            "criterion {:>2} {} {} ({}, {:.1}s)",
            i + 1,
            if ok { "PASS" } else { "FAIL" },
            name,
            detail,
            t.elapsed().as_secs_f64()
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{} criteria failed", failed);
        ExitCode::FAILURE
    }
}
