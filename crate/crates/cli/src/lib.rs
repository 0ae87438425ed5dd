//! Command-line pipeline: parse a group, compute its rational idempotents
//! and write a text or JSON report.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use num_traits::Zero;
use serde::Deserialize;
use serde_json::{json, Map, Value};

use qgroup::chartable::{character_table, galois_orbits, CharacterTable};
use qgroup::group::{
    conjugacy_classes, enumerate_group, heisenberg27_spec, sl23_spec, Family, GroupSpec, GroupTable,
    DEFAULT_ORDER_CAP,
};
use qgroup::idempotents::{full_decomposition, DecompositionReport, Level};
use qgroup::subgroups::{cyclic_subgroup_classes, CyclicClassData};
use qgroup::Error;

pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Compute,
    Verify,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSource {
    Named(String),
    File(PathBuf),
    Inline(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub source: GroupSource,
    pub format: Format,
    pub level: Level,
    pub chartable: Option<PathBuf>,
    pub max_order: usize,
    /// Adds wall-clock timings to the report, which makes it non-reproducible.
    pub timings: bool,
    /// Reserved; every computation is deterministic.
    pub seed: Option<u64>,
}

impl RunConfig {
    pub fn new(command: Command, source: GroupSource) -> Self {
        let level = match command {
            Command::Compute => Level::Fast,
            Command::Verify => Level::Full,
        };
        RunConfig {
            command,
            source,
            format: Format::Text,
            level,
            chartable: None,
            max_order: DEFAULT_ORDER_CAP,
            timings: false,
            seed: None,
        }
    }
}

/// A failed run with its exit status.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure { code: EXIT_INPUT, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::OrderCapExceeded { .. } => EXIT_CAP,
            Error::InvalidSpec(_)
            | Error::NotAPermutation { .. }
            | Error::NotAGroup(_)
            | Error::InvalidCharacterTable(_) => EXIT_INPUT,
            _ => EXIT_VERIFICATION,
        };
        Failure { code, message: e.to_string() }
    }
}

pub fn catalog() -> String {
    [
        "Named groups (--group NAME, products joined with 'x', e.g. C2xC4):",
        "  C n (n <= 512)     cyclic of order n",
        "  D n (n <= 128)     dihedral of order 2n",
        "  Dic n (n <= 128)   dicyclic of order 4n",
        "  Q 8                quaternion; also generalized quaternion Q 2^k up to Q 512",
        "  S n (n <= 6)       symmetric; S 6 needs --max-order 720",
        "  A n (n <= 6)       alternating",
        "  SL(2,3)            special linear group of degree 2 over F_3, order 24",
        "  He27               extraspecial group of order 27 and exponent 3",
        "Group files (--group-file) hold JSON: {\"named\": {...}}, {\"permutation\": {...}} or {\"cayley\": {...}}.",
    ]
    .join("\n")
        + "\n"
}

/// Parses names such as `S3`, `D 12`, `Dic3`, `Q8`, `C2xC4`, `SL(2,3)`.
pub fn parse_group_name(name: &str) -> Result<GroupSpec, String> {
    let parts: Vec<&str> = name.split(['x', '×']).map(str::trim).collect();
    if parts.len() > 1 {
        return parts.iter().map(|p| parse_factor(p)).collect::<Result<Vec<_>, _>>().map(GroupSpec::product);
    }
    parse_factor(name.trim())
}

fn parse_factor(name: &str) -> Result<GroupSpec, String> {
    match name {
        "SL(2,3)" | "SL23" | "SL2_3" => return Ok(sl23_spec()),
        "He27" | "He3" | "3^1+2" => return Ok(heisenberg27_spec()),
        _ => {}
    }
    let split = name.find(|c: char| c.is_ascii_digit() || c == ' ').ok_or_else(|| format!("unknown group '{name}'"))?;
    let (family, param) = name.split_at(split);
    let n: usize = param.trim().parse().map_err(|_| format!("bad parameter in '{name}'"))?;
    let family = match family {
        "C" => Family::C,
        "D" => Family::D,
        "Dic" => Family::Dic,
        "Q" => Family::Q,
        "S" => Family::S,
        "A" => Family::A,
        _ => return Err(format!("unknown family '{family}'")),
    };
    Ok(GroupSpec::named(family, n))
}

fn load_spec(source: &GroupSource) -> Result<GroupSpec, Failure> {
    match source {
        GroupSource::Named(name) => parse_group_name(name).map_err(Failure::input),
        GroupSource::Inline(text) => {
            serde_json::from_str(text).map_err(|e| Failure::input(format!("group JSON: {e}")))
        }
        GroupSource::File(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
            serde_json::from_str(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
        }
    }
}

#[derive(Deserialize)]
struct CharTableFile {
    e: usize,
    rows: Vec<Vec<Vec<i64>>>,
}

/// Everything computed for one group, ready to be rendered.
pub struct Analysis<'g> {
    pub spec: GroupSpec,
    pub group: &'g GroupTable,
    pub table: CharacterTable,
    pub cyclic: CyclicClassData,
    pub decomposition: DecompositionReport<'g>,
    pub table_ms: f64,
}

pub fn analyze<'g>(
    spec: GroupSpec,
    group: &'g GroupTable,
    chartable: Option<&PathBuf>,
    level: Level,
) -> Result<Analysis<'g>, Failure> {
    let cc = conjugacy_classes(group);
    let t = Instant::now();
    let table = match chartable {
        None => character_table(group, &cc)?,
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
            let file: CharTableFile =
                serde_json::from_str(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
            CharacterTable::from_root_multiplicities(group, &cc, file.e, &file.rows)?
        }
    };
    let table_ms = t.elapsed().as_secs_f64() * 1e3;
    let cyclic = cyclic_subgroup_classes(group, &cc);
    let classes = galois_orbits(&table)?;
    let decomposition = full_decomposition(group, &cc, &table, &cyclic, &classes, level)?;
    Ok(Analysis { spec, group, table, cyclic, decomposition, table_ms })
}

fn strings<T: ToString>(v: &[T]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

pub fn json_report(a: &Analysis<'_>, level: Level, timings: bool) -> Value {
    let g = a.group;
    let cc = &a.table.classes;
    let d = &a.decomposition;
    let classes: Vec<Value> = (0..cc.num_classes())
        .map(|c| {
            json!({
                "rep": cc.rep(c),
                "label": g.label(cc.rep(c)),
                "size": cc.size(c),
                "order": g.elem_order(cc.rep(c)),
            })
        })
        .collect();
    let cyclic: Vec<Value> = a
        .cyclic
        .classes
        .iter()
        .map(|c| {
            json!({
                "elements": c.representative.elements(),
                "generator": c.representative.generator(),
                "order": c.representative.order(),
                "normalizer_order": c.normalizer_order,
                "num_conjugates": c.conjugates.len(),
                "transversal": c.transversal,
            })
        })
        .collect();
    let mut rational = Vec::new();
    let mut idempotents = Vec::new();
    for r in &d.records {
        rational.push(json!({
            "members": r.class.members,
            "orbit_size": r.class.orbit_size,
            "degree": r.class.degree,
            "psi": strings(&r.class.psi),
        }));
        let b: Map<String, Value> =
            r.b.iter().enumerate().map(|(i, v)| (i.to_string(), Value::String(v.to_string()))).collect();
        idempotents.push(json!({
            "degree": r.class.degree,
            "orbit_size": r.class.orbit_size,
            "dimension": r.dimension.to_string(),
            "members": r.class.members,
            "b": b,
            "element": r.element,
            "checks": {
                "idempotent": r.idempotent,
                "central": r.central,
                "dimension": r.dimension_matches,
                "routes_agree": r.routes_agree,
            },
        }));
    }
    let mut report = json!({
        "schema": SCHEMA_VERSION,
        "group": {
            "spec": a.spec,
            "order": g.order(),
            "exponent": g.exponent(),
            "num_classes": cc.num_classes(),
            "num_cyclic_classes": a.cyclic.len(),
        },
        "character_table": {
            "e": a.table.conductor(),
            "prime": a.table.prime,
            "classes": classes,
            "rows": a.table.rows.iter().map(|r| &r.values).collect::<Vec<_>>(),
        },
        "cyclic_classes": cyclic,
        "rational_classes": rational,
        "idempotents": idempotents,
        "verification": {
            "level": level,
            "passed": d.passed(),
            "sum_to_one": d.sum_to_one,
            "pairwise_orthogonal": d.pairwise_orthogonal,
            "routes_agree": d.routes_agree,
            "failures": d.failures,
        },
    });
    if timings {
        let mut t = serde_json::to_value(&d.timings_ms).expect("timings serialize");
        t["character_table"] = json!(a.table_ms);
        report["timings_ms"] = t;
    }
    report
}

fn yes(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "FAIL"
    }
}

fn opt(b: Option<bool>) -> &'static str {
    b.map_or("skipped", yes)
}

pub fn text_report(a: &Analysis<'_>, command: Command, timings: bool) -> String {
    let g = a.group;
    let cc = &a.table.classes;
    let d = &a.decomposition;
    let mut s = String::new();
    let _ = writeln!(
        s,
        "group: order {}, exponent {}, {} conjugacy classes, {} classes of cyclic subgroups",
        g.order(),
        g.exponent(),
        cc.num_classes(),
        a.cyclic.len()
    );
    let degrees: Vec<String> = a.table.rows.iter().map(|r| r.values[0].to_string()).collect();
    let _ = writeln!(s, "irreducible degrees: {}", degrees.join(" "));
    let _ = writeln!(s, "\ncyclic subgroup classes:");
    for (i, c) in a.cyclic.classes.iter().enumerate() {
        let gen = c.representative.generator().unwrap_or(0);
        let _ = writeln!(
            s,
            "  C{i}: <{}> order {}, {} conjugate(s), |N| = {}",
            g.label(gen),
            c.representative.order(),
            c.conjugates.len(),
            c.normalizer_order
        );
    }
    let _ = writeln!(s, "\nprimitive central idempotents:");
    for (k, r) in d.records.iter().enumerate() {
        let _ = writeln!(
            s,
            "  e{k}: degree {}, orbit size {}, dimension {}",
            r.class.degree, r.class.orbit_size, r.dimension
        );
        let b: Vec<String> = r.b.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(i, v)| format!("C{i}: {v}")).collect();
        let _ = writeln!(s, "      b = {{{}}}", b.join(", "));
        let _ = writeln!(s, "      e = {}", r.element);
        if command == Command::Verify {
            let _ = writeln!(
                s,
                "      idempotent {}, central {}, dimension {}, route equality {}",
                yes(r.idempotent),
                yes(r.central),
                yes(r.dimension_matches),
                opt(r.routes_agree)
            );
        }
    }
    let _ = writeln!(
        s,
        "\nverification: sum to one {}, pairwise orthogonal {}, routes agree {}",
        yes(d.sum_to_one),
        opt(d.pairwise_orthogonal),
        opt(d.routes_agree)
    );
    for f in &d.failures {
        let _ = writeln!(s, "  failure: {f}");
    }
    if timings {
        let t = &d.timings_ms;
        let _ = writeln!(
            s,
            "timings (ms): table {:.2}, classical {:.2}, orbit sum {:.2}, transversal {:.2}, verification {:.2}",
            a.table_ms, t.classical, t.orbit_sum, t.transversal, t.verification
        );
    }
    s
}

/// Runs one command, writing the report to `out` and diagnostics to `err`.
/// Returns the process exit status.
pub fn run(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match run_inner(config, out) {
        Ok(code) => {
            if code == EXIT_VERIFICATION {
                let _ = writeln!(err, "verification failed");
            }
            code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn run_inner(config: &RunConfig, out: &mut dyn Write) -> Result<i32, Failure> {
    if config.max_order == 0 {
        return Err(Failure::input("--max-order must be at least 1"));
    }
    let spec = load_spec(&config.source)?;
    let group = enumerate_group(&spec, config.max_order)?;
    let analysis = analyze(spec, &group, config.chartable.as_ref(), config.level)?;
    let text = match config.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&json_report(&analysis, config.level, config.timings))
                .expect("report serializes");
            s.push('\n');
            s
        }
        Format::Text => text_report(&analysis, config.command, config.timings),
    };
    out.write_all(text.as_bytes()).map_err(|e| Failure { code: EXIT_INPUT, message: e.to_string() })?;
    Ok(if analysis.decomposition.passed() { EXIT_OK } else { EXIT_VERIFICATION })
}
