//! Acceptance battery. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qgroup::algebra::{subgroup_average, AlgebraElement};
use qgroup::chartable::{
    character_table, galois_orbits, induced_trivial_by_definition, CharacterTable, ClassFunction, RationalClass,
};
use qgroup::cyclotomic::{CycloBasis, CyclotomicInt};
use qgroup::group::{conjugacy_classes, enumerate_group, ConjClassData, GroupTable};
use qgroup::idempotents::{
    artin_coefficients, b_coefficients, eq_classical, eq_via_cyclic, full_decomposition,
    non_idempotent_orbit_sums, Level, Route,
};
use qgroup::subgroups::{cyclic_subgroup_classes, mobius, CyclicClassData, Subgroup};
use qgroup::Rational;
use qgroup_cli::parse_group_name;

const ROUTE_BUDGET: Duration = Duration::from_secs(60);
const DIXON_A5_BUDGET: Duration = Duration::from_secs(10);
const RANDOM_COMBINATIONS: usize = 20;
const MAX_COMBINATION_COEFF: u32 = 5;
const MOBIUS_LIMIT: u64 = 10_000;
const ROOT_SUM_LIMIT: usize = 60;
const GALOIS_SAMPLES: usize = 1_000;
const SEED: u64 = 0x5eed_acce;

fn battery_names() -> Vec<String> {
    let mut v: Vec<String> = (1..=24).map(|n| format!("C{n}")).collect();
    v.extend((1..=12).map(|n| format!("D{n}")));
    for s in ["S3", "S4", "A4", "A5", "Q8", "Dic3", "C2xC4", "SL(2,3)", "He27"] {
        v.push(s.to_string());
    }
    v
}

struct Entry {
    name: String,
    g: GroupTable,
}

struct Data {
    cc: ConjClassData,
    table: CharacterTable,
    cyc: CyclicClassData,
    classes: Vec<RationalClass>,
}

fn prepare(g: &GroupTable) -> Result<Data, String> {
    let cc = conjugacy_classes(g);
    let table = character_table(g, &cc).map_err(|e| e.to_string())?;
    let cyc = cyclic_subgroup_classes(g, &cc);
    let classes = galois_orbits(&table).map_err(|e| e.to_string())?;
    Ok(Data { cc, table, cyc, classes })
}

type Outcome = Result<String, String>;

fn report(n: u32, title: &str, outcome: Outcome) -> bool {
    match outcome {
        Ok(detail) => {
            println!("[PASS] {n}. {title}: {detail}");
            true
        }
        Err(detail) => {
            println!("[FAIL] {n}. {title}: {detail}");
            false
        }
    }
}

fn for_battery(battery: &[Entry], mut f: impl FnMut(&Entry, &Data) -> Result<usize, String>) -> Result<usize, String> {
    let mut total = 0;
    for e in battery {
        let d = prepare(&e.g).map_err(|m| format!("{}: {m}", e.name))?;
        total += f(e, &d).map_err(|m| format!("{}: {m}", e.name))?;
    }
    Ok(total)
}

fn route_equality(battery: &[Entry]) -> Outcome {
    let start = Instant::now();
    let checked = for_battery(battery, |e, d| {
        for rc in &d.classes {
            let b = b_coefficients(&e.g, &d.cc, &d.table, &d.cyc, rc).map_err(|x| x.to_string())?;
            let classical = eq_classical(&e.g, &d.cc, rc);
            for route in [Route::OrbitSum, Route::Transversal] {
                let via = eq_via_cyclic(&e.g, &d.cyc, rc, &b, route).map_err(|x| x.to_string())?;
                if via != classical {
                    return Err(format!("class {:?} differs on {route:?}", rc.members));
                }
            }
        }
        Ok(d.classes.len())
    })?;
    let elapsed = start.elapsed();
    if elapsed > ROUTE_BUDGET {
        return Err(format!("{checked} classes equal but took {elapsed:.1?} > {ROUTE_BUDGET:?}"));
    }
    Ok(format!("{checked} rational classes, {} groups, {elapsed:.2?}", battery.len()))
}

fn decomposition_validity(battery: &[Entry]) -> Outcome {
    let checked = for_battery(battery, |e, d| {
        let g = &e.g;
        let rep = full_decomposition(g, &d.cc, &d.table, &d.cyc, &d.classes, Level::Full).map_err(|x| x.to_string())?;
        if !rep.passed() {
            return Err(format!("report failures {:?}", rep.failures));
        }
        let elems: Vec<&AlgebraElement> = rep.records.iter().map(|r| &r.element).collect();
        let mut sum = AlgebraElement::zero(g);
        let mut dims = Rational::zero();
        for (i, x) in elems.iter().enumerate() {
            sum = &sum + *x;
            dims += x.coeff(0) * Rational::from_integer(g.order().into());
            if &(*x * *x) != *x {
                return Err(format!("record {i} not idempotent"));
            }
            for y in 0..g.order() {
                if x.conjugate(y) != **x {
                    return Err(format!("record {i} not central"));
                }
            }
            for (j, z) in elems.iter().enumerate().skip(i + 1) {
                if !(*x * *z).is_zero() {
                    return Err(format!("records {i}, {j} not orthogonal"));
                }
            }
        }
        if sum != AlgebraElement::one(g) {
            return Err("sum is not 1".into());
        }
        if dims != Rational::from_integer(g.order().into()) {
            return Err(format!("dimensions sum to {dims}"));
        }
        Ok(elems.len())
    })?;
    Ok(format!("{checked} idempotents"))
}

fn check_reconstruction(e: &Entry, d: &Data, psi: &[BigInt]) -> Result<(), String> {
    let f = ClassFunction::from_integers(&d.table.basis, psi);
    let artin = artin_coefficients(&e.g, &d.cc, &d.cyc, &f).map_err(|x| x.to_string())?;
    let mut rebuilt = vec![Rational::zero(); d.cc.num_classes()];
    for (di, class) in artin.d.iter().zip(&d.cyc.classes) {
        let ind = induced_trivial_by_definition(&e.g, &d.cc, &class.representative);
        for (acc, v) in rebuilt.iter_mut().zip(ind) {
            *acc += di * Rational::from_integer(v);
        }
    }
    if rebuilt.iter().zip(psi).any(|(r, v)| *r != Rational::from_integer(v.clone())) {
        return Err(format!("reconstruction of {psi:?} failed"));
    }
    Ok(())
}

fn artin_reconstruction(battery: &[Entry]) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let checked = for_battery(battery, |e, d| {
        for rc in &d.classes {
            check_reconstruction(e, d, &rc.psi)?;
        }
        for _ in 0..RANDOM_COMBINATIONS {
            let mut psi = vec![BigInt::zero(); d.cc.num_classes()];
            for rc in &d.classes {
                let c = BigInt::from(rng.gen_range(0..=MAX_COMBINATION_COEFF));
                for (acc, v) in psi.iter_mut().zip(&rc.psi) {
                    *acc += &c * v;
                }
            }
            check_reconstruction(e, d, &psi)?;
        }
        Ok(d.classes.len() + RANDOM_COMBINATIONS)
    })?;
    Ok(format!("{checked} characters reconstructed"))
}

fn counting(battery: &[Entry]) -> Outcome {
    let checked = for_battery(battery, |_, d| {
        if d.classes.len() != d.cyc.len() {
            return Err(format!("{} rational classes vs {} cyclic classes", d.classes.len(), d.cyc.len()));
        }
        Ok(1)
    })?;
    Ok(format!("{checked} groups"))
}

fn dimensions(g: &GroupTable) -> Result<Vec<usize>, String> {
    let d = prepare(g)?;
    let rep = full_decomposition(g, &d.cc, &d.table, &d.cyc, &d.classes, Level::Fast).map_err(|x| x.to_string())?;
    let mut dims: Vec<usize> = rep.records.iter().map(|r| r.dimension.to_string().parse().unwrap()).collect();
    dims.sort_unstable();
    Ok(dims)
}

fn known_decompositions() -> Outcome {
    for p in [2usize, 3, 5, 7, 11, 13, 17, 19, 23] {
        let g = named(&format!("C{p}"));
        let d = prepare(&g)?;
        let rep = full_decomposition(&g, &d.cc, &d.table, &d.cyc, &d.classes, Level::Fast).map_err(|x| x.to_string())?;
        let whole = subgroup_average(&g, &Subgroup::whole(&g));
        let rest = &AlgebraElement::one(&g) - &whole;
        let mut got: Vec<&AlgebraElement> = rep.records.iter().map(|r| &r.element).collect();
        got.sort();
        let mut want = vec![&whole, &rest];
        want.sort();
        if got != want {
            return Err(format!("C{p}: idempotents are not {{G~, 1 - G~}}"));
        }
    }
    for (name, want) in [("Q8", vec![1, 1, 1, 1, 4]), ("A5", vec![1, 16, 18, 25]), ("S3", vec![1, 1, 4])] {
        let got = dimensions(&named(name))?;
        if got != want {
            return Err(format!("{name}: dimensions {got:?}, expected {want:?}"));
        }
    }
    Ok("C_p for p <= 23, Q8, A5, S3".into())
}

fn table_validity(battery: &[Entry]) -> Outcome {
    let checked = for_battery(battery, |e, d| {
        d.table.validate(&e.g).map_err(|x| x.to_string())?;
        let squares: BigInt = d
            .table
            .rows
            .iter()
            .map(|r| {
                let deg = r.values[0].as_integer().expect("integral degree");
                &deg * &deg
            })
            .sum();
        if squares != BigInt::from(e.g.order()) {
            return Err(format!("sum of squared degrees {squares}"));
        }
        Ok(1)
    })?;
    let a5 = named("A5");
    let start = Instant::now();
    let cc = conjugacy_classes(&a5);
    character_table(&a5, &cc).map_err(|x| x.to_string())?;
    let elapsed = start.elapsed();
    if elapsed > DIXON_A5_BUDGET {
        return Err(format!("A5 table took {elapsed:.1?} > {DIXON_A5_BUDGET:?}"));
    }
    Ok(format!("{checked} tables, A5 Dixon run {elapsed:.2?}"))
}

fn number_theory() -> Outcome {
    for n in 1..=MOBIUS_LIMIT {
        let mut s = 0i64;
        for d in (1..=n).filter(|d| n % d == 0) {
            s += i64::from(mobius(d).map_err(|x| x.to_string())?);
        }
        if s != i64::from(n == 1) {
            return Err(format!("sum of mu over divisors of {n} is {s}"));
        }
    }
    for e in 1..=ROOT_SUM_LIMIT {
        let basis = CycloBasis::new(e);
        let mut s = CyclotomicInt::zero(&basis);
        for j in (0..e).filter(|&j| num_integer::gcd(j, e) == 1) {
            s = &s + &CyclotomicInt::zeta(&basis, j as i64);
        }
        let mu = mobius(e as u64).map_err(|x| x.to_string())?;
        if s != CyclotomicInt::from_int(&basis, mu) {
            return Err(format!("primitive {e}-th roots sum to {s}"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 1);
    let units = |e: usize, rng: &mut ChaCha8Rng| loop {
        let k = rng.gen_range(1..=e.max(2)) as i64;
        if num_integer::gcd(k, e as i64) == 1 {
            return k;
        }
    };
    for _ in 0..GALOIS_SAMPLES {
        let e = rng.gen_range(1..=ROOT_SUM_LIMIT);
        let basis = CycloBasis::new(e);
        let mult: Vec<i64> = (0..e).map(|_| rng.gen_range(-3..=3)).collect();
        let x = CyclotomicInt::from_root_powers(&basis, &mult);
        let (a, b) = (units(e, &mut rng), units(e, &mut rng));
        let lhs = x.galois_apply(a).and_then(|y| y.galois_apply(b)).map_err(|m| m.to_string())?;
        let rhs = x.galois_apply(a * b).map_err(|m| m.to_string())?;
        if lhs != rhs {
            return Err(format!("sigma_{b} sigma_{a} != sigma_{} on {x}", a * b));
        }
    }
    Ok(format!("mu for n <= {MOBIUS_LIMIT}, root sums e <= {ROOT_SUM_LIMIT}, {GALOIS_SAMPLES} Galois samples"))
}

fn non_idempotent_witness(battery: &[Entry]) -> Outcome {
    let mut witnesses = Vec::new();
    for e in battery {
        let cc = conjugacy_classes(&e.g);
        let cyc = cyclic_subgroup_classes(&e.g, &cc);
        for i in non_idempotent_orbit_sums(&e.g, &cyc).map_err(|x| x.to_string())? {
            witnesses.push(format!("{}/C{i}", e.name));
        }
    }
    match witnesses.first() {
        Some(first) => Ok(format!("{} witnesses, first {first}", witnesses.len())),
        None => Err("every e(G,C,C) in the battery is idempotent".into()),
    }
}

fn determinism() -> Outcome {
    let exe = env!("CARGO_BIN_EXE_qgroup");
    let run = || {
        Command::new(exe)
            .args(["compute", "--group", "S4", "--format", "json"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    if !a.status.success() || !b.status.success() {
        return Err(format!("exit status {:?}", a.status.code()));
    }
    if a.stdout != b.stdout {
        return Err("outputs differ".into());
    }
    Ok(format!("{} identical bytes", a.stdout.len()))
}

fn named(name: &str) -> GroupTable {
    let spec = parse_group_name(name).unwrap();
    enumerate_group(&spec, 512).unwrap()
}

fn main() {
    let battery: Vec<Entry> = battery_names().into_iter().map(|name| Entry { g: named(&name), name }).collect();
    let results = [
        report(1, "route equality", route_equality(&battery)),
        report(2, "decomposition validity", decomposition_validity(&battery)),
        report(3, "Artin reconstruction", artin_reconstruction(&battery)),
        report(4, "rational classes = cyclic classes", counting(&battery)),
        report(5, "known decompositions", known_decompositions()),
        report(6, "character table validity", table_validity(&battery)),
        report(7, "Mobius and cyclotomic identities", number_theory()),
        report(8, "non-idempotent e(G,C,C) witness", non_idempotent_witness(&battery)),
        report(9, "determinism", determinism()),
    ];
    let passed = results.iter().filter(|&&r| r).count();
    println!("{passed}/{} criteria passed", results.len());
    if passed != results.len() {
        std::process::exit(1);
    }
}
