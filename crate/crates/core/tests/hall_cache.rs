use std::fs;

use fockbasis::combinat::multisegment::{parse_dimvec, unit_dim, Multisegment, Quiver};
use fockbasis::hallalg::algebra::hall_product_orbits;
use fockbasis::hallalg::cache;
use fockbasis::hallalg::count::count_stable_flags;

fn compute() -> Vec<String> {
    let q = Quiver::Cyclic(2);
    let o = Multisegment::parse(q, "0:2;1:1").unwrap();
    let flag = vec![unit_dim(1), parse_dimvec("1,1").unwrap()];
    let mut out = vec![format!("{:?}", count_stable_flags(&flag, &o).unwrap())];
    let a = Multisegment::parse(q, "0:1;1:1").unwrap();
    let b = Multisegment::parse(q, "0:1").unwrap();
    out.push(format!("{:?}", hall_product_orbits(&a, &b).unwrap()));
    out
}

#[test]
fn cache_never_changes_results() {
    let dir = tempfile::tempdir().unwrap();
    cache::set_cache_dir(Some(dir.path().to_path_buf()));
    cache::clear_memory();
    let cold = compute();
    let files: Vec<_> = fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().path()).collect();
    assert!(!files.is_empty());

    // warm from disk
    cache::clear_memory();
    assert_eq!(compute(), cold);

    // corrupted, stale-version and wrong-key files are all ignored
    for (k, f) in files.iter().enumerate() {
        let text = fs::read_to_string(f).unwrap();
        let bad = match k % 3 {
            0 => "{ not json".to_string(),
            1 => text.replace("\"format_version\":1", "\"format_version\":0"),
            _ => text.replace("\"key\":\"v1|", "\"key\":\"v1|x"),
        };
        fs::write(f, bad).unwrap();
    }
    cache::clear_memory();
    assert_eq!(compute(), cold);

    // and rewritten on recomputation
    cache::clear_memory();
    assert_eq!(compute(), cold);
    cache::set_cache_dir(None);
}
