use qgroup::chartable::{character_table, galois_orbits};
use qgroup::group::{conjugacy_classes, enumerate_group, Family, GroupSpec, DEFAULT_ORDER_CAP};
use qgroup::idempotents::{full_decomposition, Level};
use qgroup::subgroups::cyclic_subgroup_classes;

fn dims(spec: GroupSpec) -> Vec<String> {
    let g = enumerate_group(&spec, DEFAULT_ORDER_CAP).unwrap();
    let cc = conjugacy_classes(&g);
    let t = character_table(&g, &cc).unwrap();
    let cyc = cyclic_subgroup_classes(&g, &cc);
    let rc = galois_orbits(&t).unwrap();
    let rep = full_decomposition(&g, &cc, &t, &cyc, &rc, Level::Full).unwrap();
    assert!(rep.passed(), "{:?}", rep.failures);
    rep.records.iter().map(|r| r.dimension.to_string()).collect()
}

#[test]
fn cyclic_prime() {
    assert_eq!(dims(GroupSpec::named(Family::C, 7)), ["1", "6"]);
}

#[test]
fn cyclic_composite() {
    // one idempotent per divisor d, of dimension phi(d)
    assert_eq!(dims(GroupSpec::named(Family::C, 12)), ["1", "1", "2", "2", "2", "4"]);
}

#[test]
fn s4() {
    assert_eq!(dims(GroupSpec::named(Family::S, 4)), ["1", "1", "4", "9", "9"]);
}

#[test]
fn dic3_and_product() {
    assert_eq!(dims(GroupSpec::named(Family::Dic, 3)), ["1", "1", "2", "4", "4"]);
    let p = GroupSpec::product(vec![GroupSpec::named(Family::C, 2), GroupSpec::named(Family::C, 4)]);
    assert_eq!(dims(p), ["1", "1", "1", "1", "2", "2"]);
}
