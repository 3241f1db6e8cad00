use std::fs::File;
use std::io::Write;
use std::process::ExitCode;

use aww_core::daha::{self, ThetaTable};
use aww_core::error::Error;
use aww_core::label::{parse_dims, parse_product, LoopLabel};
use aww_core::nc::aw::Algebra;
use aww_core::nc::default_step_budget;
use aww_core::quantum::expand::{expand_in_pbw_basis, format_labels, pbw3_basis, pbw4_basis, CasimirTable};
use aww_core::quantum::{BraidWord, Convention};
use aww_core::report::{Status, VerificationReport};
use aww_core::skein::{self, SkeinElement};
use aww_core::suite::{self, RkrkSelection, Suite, SuiteOptions};
use aww_core::weyl;
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

#[derive(Parser)]
#[command(name = "aww", version, about = "Exact Askey-Wilson algebra workbench")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite; reports go to stdout as JSON lines.
    Verify(VerifyArgs),
    /// Expand a product of intermediate Casimirs in a monomial basis.
    Expand {
        #[arg(long)]
        product: String,
        #[arg(long)]
        dims: String,
        #[arg(long, default_value = "pbw4")]
        basis: String,
        #[arg(long, value_enum, default_value_t = ConventionArg::Standard)]
        convention: ConventionArg,
    },
    /// W(D4) queries.
    Weyl {
        #[command(subcommand)]
        command: WeylCommand,
    },
    /// Skein algebra queries.
    Skein {
        #[command(subcommand)]
        command: SkeinCommand,
    },
    /// Print the rewrite rules of an algebra.
    DumpRules {
        #[arg(long, value_enum, default_value_t = RulesArg::Aw3)]
        algebra: RulesArg,
    },
}

#[derive(clap::Args)]
struct VerifyArgs {
    /// all, aw3, reflection, yang-baxter, rkrk, sdet, weyl, skein, tensor, daha, classical, classical-limit
    suite: String,
    #[arg(long)]
    dims: Option<String>,
    #[arg(long)]
    degree: Option<usize>,
    /// Step budget of the DAHA searches.
    #[arg(long)]
    budget: Option<u64>,
    /// Series order of the classical limit.
    #[arg(long, default_value_t = 3)]
    order: usize,
    /// RKRK mode: symbolic, tensor, free or all.
    #[arg(long, default_value = "all")]
    mode: String,
    /// Theta table for the DAHA suite: default or exchanged.
    #[arg(long, default_value = "default")]
    table: String,
    #[arg(long, default_value_t = 20)]
    seed: u64,
    /// Treat UNDECIDED as failure.
    #[arg(long)]
    strict: bool,
    /// Zero the wall-time fields so reports are reproducible byte for byte.
    #[arg(long)]
    no_timing: bool,
    /// Also write the reports to this file.
    #[arg(long)]
    json: Option<String>,
}

#[derive(Subcommand)]
enum WeylCommand {
    /// Orbit of an integer parameter vector.
    Orbit {
        #[arg(long)]
        m: String,
    },
}

#[derive(Subcommand)]
enum SkeinCommand {
    /// Product of two skein elements, reduced to the loop basis.
    Product {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(short = 'n', default_value_t = 3)]
        n: usize,
    },
    /// Half Dehn twist of a loop by a braid word.
    Twist {
        #[arg(long)]
        word: String,
        #[arg(long = "loop")]
        loop_: String,
        #[arg(short = 'n', default_value_t = 3)]
        n: usize,
    },
    /// Minimal crossing number of two simple loops.
    Crossing {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(short = 'n')]
        n: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ConventionArg {
    Standard,
    Mirrored,
}

#[derive(Clone, Copy, ValueEnum)]
enum RulesArg {
    Aw3,
    Saw3,
    Zh,
    Szh,
    Daha,
}

// Writes to stdout, ignoring a closed pipe.
macro_rules! out {
    ($($t:tt)*) => {{
        let _ = writeln!(std::io::stdout().lock(), $($t)*);
    }};
}

fn config_error(e: impl std::fmt::Display) -> ExitCode {
    eprintln!("aww: {e}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify(args) => return verify(args),
        Command::Expand { product, dims, basis, convention } => expand(&product, &dims, &basis, convention),
        Command::Weyl { command: WeylCommand::Orbit { m } } => orbit(&m),
        Command::Skein { command } => skein_command(command),
        Command::DumpRules { algebra } => dump_rules(algebra),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => config_error(e),
    }
}

fn options(args: &VerifyArgs) -> Result<SuiteOptions, Error> {
    Ok(SuiteOptions {
        dims: args.dims.as_deref().map(parse_dims).transpose()?,
        degree: args.degree,
        budget: args.budget,
        order: args.order,
        mode: args.mode.parse::<RkrkSelection>()?,
        table: args.table.parse::<ThetaTable>()?,
        seed: args.seed,
    })
}

fn verify(args: VerifyArgs) -> ExitCode {
    let suite: Suite = match args.suite.parse() {
        Ok(s) => s,
        Err(e) => return config_error(e),
    };
    let jobs = match options(&args).and_then(|o| suite::suite_jobs(suite, &o)) {
        Ok(j) => j,
        Err(e) => return config_error(e),
    };
    let mut file = match args.json.as_deref().map(File::create).transpose() {
        Ok(f) => f,
        Err(e) => return config_error(format!("cannot open report file: {e}")),
    };
    let mut reports: Vec<VerificationReport> = jobs.into_par_iter().flat_map_iter(|j| j()).collect();
    suite::sort_reports(&mut reports);
    if args.no_timing {
        reports = reports.into_iter().map(|r| r.without_timing()).collect();
    }
    let mut stdout = std::io::stdout().lock();
    for r in &reports {
        let line = r.to_json_line();
        let _ = writeln!(stdout, "{line}");
        if let Some(f) = file.as_mut() {
            if let Err(e) = writeln!(f, "{line}") {
                return config_error(format!("cannot write report file: {e}"));
            }
        }
    }
    summary(&reports);
    let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
    let (fail, undecided) = (count(Status::Fail), count(Status::Undecided));
    if undecided > 0 {
        eprintln!("warning: {undecided} check(s) UNDECIDED");
    }
    if fail > 0 || (args.strict && undecided > 0) {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn summary(reports: &[VerificationReport]) {
    let width = reports.iter().map(|r| r.check_id.len()).max().unwrap_or(8).max(8);
    eprintln!("{:<width$}  {:<9}  {:>8}  params", "check", "status", "ms");
    for r in reports {
        let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        eprintln!("{:<width$}  {:<9}  {:>8}  {}", r.check_id, r.status.as_str(), r.wall_ms, params.join(" "));
    }
    let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
    eprintln!(
        "{} checks: {} PASS, {} FAIL, {} UNDECIDED",
        reports.len(),
        count(Status::Pass),
        count(Status::Fail),
        count(Status::Undecided)
    );
}

fn expand(product: &str, dims: &str, basis: &str, convention: ConventionArg) -> Result<(), Error> {
    let labels = parse_product(product, 'Q')?;
    let dims = parse_dims(dims)?;
    let basis = match basis {
        "pbw4" => pbw4_basis(),
        "pbw3" => pbw3_basis(),
        _ => return Err(Error::Parse(format!("unknown basis {basis:?}; expected pbw3 or pbw4"))),
    };
    let n = if basis.iter().flatten().any(|l| l.max_puncture() == 4) { 4 } else { 3 };
    if dims.len() != n {
        return Err(Error::DimensionMismatch(format!("basis needs {n} dims, got {}", dims.len())));
    }
    let conv = match convention {
        ConventionArg::Standard => Convention::Standard,
        ConventionArg::Mirrored => Convention::Mirrored,
    };
    let mut table = CasimirTable::new(conv);
    let coeffs = expand_in_pbw_basis(&labels, &basis, &[dims], &mut table)?;
    for (b, c) in basis.iter().zip(&coeffs) {
        if !c.is_zero() {
            out!("{}\t{}", format_labels(b), c);
        }
    }
    Ok(())
}

fn orbit(m: &str) -> Result<(), Error> {
    let v: Vec<i64> = m
        .split(',')
        .map(|s| s.trim().parse::<i64>().map_err(|e| Error::Parse(format!("{s:?}: {e}"))))
        .collect::<Result<_, _>>()?;
    let m: [i64; 4] =
        v.try_into().map_err(|v: Vec<i64>| Error::Parse(format!("expected 4 entries, got {}", v.len())))?;
    let o = weyl::orbit(m)?;
    out!("orbit size {}", o.len());
    for p in o {
        out!("{}", p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","));
    }
    Ok(())
}

fn skein_command(c: SkeinCommand) -> Result<(), Error> {
    match c {
        SkeinCommand::Product { x, y, n } => {
            let p = skein::loop_product(&SkeinElement::parse(&x, n)?, &SkeinElement::parse(&y, n)?)?;
            out!("theta: {p}");
            out!("q: {}", p.q_form());
        }
        SkeinCommand::Twist { word, loop_, n } => {
            let w: BraidWord = word.parse()?;
            let r = skein::half_dehn_twist(&w, &SkeinElement::parse(&loop_, n)?)?;
            out!("{r}");
        }
        SkeinCommand::Crossing { x, y, n } => {
            let x = LoopLabel::parse_with_prefix(&x, 'A')?;
            let y = LoopLabel::parse_with_prefix(&y, 'A')?;
            let n = n.unwrap_or_else(|| x.max_puncture().max(y.max_puncture()).max(3));
            out!("{}", skein::crossing_index(&x, &y, n)?);
        }
    }
    Ok(())
}

fn dump_rules(a: RulesArg) -> Result<(), Error> {
    let lines = match a {
        RulesArg::Aw3 => Algebra::Aw3.system().dump(),
        RulesArg::Saw3 => Algebra::Saw3.system().dump(),
        RulesArg::Zh => Algebra::Zh.system().dump(),
        RulesArg::Szh => Algebra::SZh.system().dump(),
        RulesArg::Daha => {
            let c = daha::complete(daha::DEFAULT_COMPLETION_ROUNDS, daha::DEFAULT_MAX_RULES, default_step_budget());
            c.system.dump()
        }
    };
    for l in lines {
        out!("{l}");
    }
    Ok(())
}
