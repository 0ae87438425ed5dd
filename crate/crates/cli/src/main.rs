use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qgroup::group::DEFAULT_ORDER_CAP;
use qgroup::idempotents::Level;
use qgroup_cli::{catalog, run, Command, Format, GroupSource, RunConfig};

#[derive(Parser)]
#[command(name = "qgroup", version, about = "Primitive central idempotents of rational group algebras")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute the idempotents (default level: fast)
    Compute(RunArgs),
    /// Compute and run every check (default level: full)
    Verify(RunArgs),
    /// List the named groups understood by --group
    ListGroups,
}

#[derive(Args)]
#[group(id = "source", required = true, multiple = false)]
struct SourceArgs {
    /// Named group, e.g. S4, D12, C2xC4, SL(2,3)
    #[arg(long, group = "source")]
    group: Option<String>,
    /// JSON group description
    #[arg(long, group = "source")]
    group_file: Option<PathBuf>,
    /// Inline JSON group description
    #[arg(long, group = "source")]
    group_json: Option<String>,
}

#[derive(Args)]
struct RunArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    #[arg(long, value_enum)]
    level: Option<LevelArg>,
    /// Character table as JSON {"e": e, "rows": [[[root multiplicities]]]}
    #[arg(long)]
    chartable: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_ORDER_CAP)]
    max_order: usize,
    /// Include wall-clock timings (output is then not reproducible)
    #[arg(long)]
    timings: bool,
    /// Accepted for interface compatibility; results do not depend on it
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum LevelArg {
    Fast,
    Full,
}

fn config(command: Command, a: RunArgs) -> RunConfig {
    let s = a.source;
    let source = match (s.group, s.group_file, s.group_json) {
        (Some(n), _, _) => GroupSource::Named(n),
        (_, Some(p), _) => GroupSource::File(p),
        (_, _, Some(j)) => GroupSource::Inline(j),
        _ => unreachable!("clap enforces one source"),
    };
    let mut c = RunConfig::new(command, source);
    c.format = match a.format {
        FormatArg::Json => Format::Json,
        FormatArg::Text => Format::Text,
    };
    if let Some(l) = a.level {
        c.level = match l {
            LevelArg::Fast => Level::Fast,
            LevelArg::Full => Level::Full,
        };
    }
    c.chartable = a.chartable;
    c.max_order = a.max_order;
    c.timings = a.timings;
    c.seed = a.seed;
    c
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let cfg = match cli.command {
        Cmd::ListGroups => {
            print!("{}", catalog());
            return ExitCode::SUCCESS;
        }
        Cmd::Compute(a) => config(Command::Compute, a),
        Cmd::Verify(a) => config(Command::Verify, a),
    };
    let code = run(&cfg, &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    ExitCode::from(code as u8)
}
