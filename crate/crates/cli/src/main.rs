use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

use clambda::clambda::{classify_topology, decompose, enumerate, length_formula};
use clambda::perm::compositions;
use clambda::poset::{to_dot, to_json};
use clambda::verify::{run_check, Check, CheckReport};
use clambda::{build_poset, Composition, Error};

#[derive(Parser, Debug)]
#[command(name = "clambda", version, about = "Enumerate and verify the Bruhat posets C_lambda")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format; `dot` applies to `hasse` only.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Refuse any poset construction with n above this bound.
    #[arg(long, global = true, env = "CLAMBDA_MAX_N", default_value_t = 7)]
    max_n: usize,

    /// Worker threads for sweeps; 0 picks the number of CPUs.
    #[arg(long, global = true, default_value_t = 0)]
    parallelism: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Args, Debug)]
struct LambdaArg {
    /// Composition as comma-separated parts, e.g. 4,1,1.
    #[arg(long, value_parser = parse_composition)]
    lambda: Composition,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Target {
    #[arg(long, value_parser = parse_composition)]
    lambda: Option<Composition>,

    /// Run over every composition of n, in lexicographic order.
    #[arg(long)]
    sweep_n: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the elements of C_lambda with their ranks.
    Enumerate(LambdaArg),
    /// Emit the Hasse diagram of C_lambda.
    Hasse(LambdaArg),
    /// Split C_lambda into shifted copies of C_ST(lambda).
    Decompose(LambdaArg),
    /// Run structural checks; exits with status 1 if any check fails.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[command(flatten)]
        target: Target,
    },
    /// Topology class of the order complex, with length and Mobius value.
    Classify(LambdaArg),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Graded,
    Genfunc,
    El,
    Decompose,
    RisingChain,
    Mobius,
    Sphere,
    RankSelected,
    All,
}

impl Suite {
    fn checks(self) -> Vec<Check> {
        match self {
            Suite::Graded => vec![Check::Graded],
            Suite::Genfunc => vec![Check::Genfunc],
            Suite::El => vec![Check::El],
            Suite::Decompose => vec![Check::Decompose],
            Suite::RisingChain => vec![Check::RisingChain],
            Suite::Mobius => vec![Check::Mobius],
            Suite::Sphere => vec![Check::Sphere],
            Suite::RankSelected => vec![Check::RankSelected],
            Suite::All => Check::ALL.to_vec(),
        }
    }
}

fn parse_composition(s: &str) -> Result<Composition, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Everything a command needs, resolved from flags and environment.
#[derive(Debug)]
struct RunConfig {
    command: Command,
    output_format: Option<Format>,
    max_n: usize,
    parallelism: usize,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    ChecksFailed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl RunConfig {
    fn from_cli(cli: Cli) -> Result<Self, Failure> {
        if cli.max_n < 2 {
            return Err(Failure::Usage(format!("--max-n must be at least 2, got {}", cli.max_n)));
        }
        Ok(RunConfig { command: cli.command, output_format: cli.format, max_n: cli.max_n, parallelism: cli.parallelism })
    }

    fn check_bound(&self, n: usize) -> Result<(), Failure> {
        if n > self.max_n {
            return Err(Error::BoundExceeded { n, max: self.max_n }.into());
        }
        Ok(())
    }

    fn format(&self, default: Format, allowed: &[Format]) -> Result<Format, Failure> {
        let format = self.output_format.unwrap_or(default);
        if !allowed.contains(&format) {
            return Err(Failure::Usage(format!("--format {format:?} is not supported by this command")));
        }
        Ok(format)
    }
}

fn cmd_enumerate(cfg: &RunConfig, lambda: &Composition, out: &mut impl Write) -> Result<(), Failure> {
    cfg.check_bound(lambda.n())?;
    let format = cfg.format(Format::Text, &[Format::Text, Format::Json])?;
    let mut rows: Vec<_> = enumerate(lambda)?.into_iter().map(|p| (p.inversions(), p)).collect();
    rows.sort();
    match format {
        Format::Json => {
            let value: Vec<_> = rows.iter().map(|(r, p)| json!({ "rank": r, "word": p })).collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&value).unwrap())?;
        }
        _ => {
            for (rank, p) in rows {
                writeln!(out, "{rank}\t{p}")?;
            }
        }
    }
    Ok(())
}

fn cmd_hasse(cfg: &RunConfig, lambda: &Composition, out: &mut impl Write) -> Result<(), Failure> {
    cfg.check_bound(lambda.n())?;
    let format = cfg.format(Format::Dot, &[Format::Dot, Format::Json, Format::Text])?;
    let poset = build_poset(enumerate(lambda)?)?;
    match format {
        Format::Json => writeln!(out, "{}", to_json(&poset, Some(lambda)))?,
        Format::Dot => write!(out, "{}", to_dot(&poset, Some(lambda)))?,
        Format::Text => {
            for c in poset.covers() {
                let (lo, hi) = (&poset.elements()[c.lower], &poset.elements()[c.upper]);
                writeln!(out, "{lo} -> {hi}\t{}", c.label)?;
            }
        }
    }
    Ok(())
}

fn cmd_decompose(cfg: &RunConfig, lambda: &Composition, out: &mut impl Write) -> Result<(), Failure> {
    cfg.check_bound(lambda.n())?;
    let format = cfg.format(Format::Text, &[Format::Text, Format::Json])?;
    let d = decompose(lambda)?;
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&d).unwrap())?,
        _ => {
            writeln!(out, "C_{} = {} shifted copies of C_{} (t = {})", lambda, d.copies.len(), d.base, d.shift_position)?;
            for (i, copy) in d.copies.iter().enumerate() {
                let words: Vec<String> = copy.iter().map(ToString::to_string).collect();
                writeln!(out, "copy {i}: {}", words.join(" "))?;
            }
        }
    }
    Ok(())
}

fn cmd_classify(cfg: &RunConfig, lambda: &Composition, out: &mut impl Write) -> Result<(), Failure> {
    let format = cfg.format(Format::Text, &[Format::Text, Format::Json])?;
    let class = classify_topology(lambda);
    let length = length_formula(lambda);
    let mu = if lambda.n() <= cfg.max_n {
        Some(build_poset(enumerate(lambda)?)?.reduced_euler_characteristic())
    } else {
        None
    };
    match format {
        Format::Json => {
            let value = json!({
                "lambda": lambda,
                "class": class.to_string(),
                "length": length,
                "mobius": mu,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&value).unwrap())?;
        }
        _ => {
            let mu = mu.map_or_else(|| "not computed (n above --max-n)".to_string(), |m| m.to_string());
            writeln!(out, "{lambda}\t{class}\tlength {length}\tmu {mu}")?;
        }
    }
    Ok(())
}

fn cmd_verify(cfg: &RunConfig, suite: Suite, target: &Target, out: &mut impl Write) -> Result<(), Failure> {
    let format = cfg.format(Format::Text, &[Format::Text, Format::Json])?;
    let lambdas = match (&target.lambda, target.sweep_n) {
        (Some(lambda), _) => {
            cfg.check_bound(lambda.n())?;
            vec![lambda.clone()]
        }
        (None, Some(n)) => {
            cfg.check_bound(n)?;
            if n == 0 {
                return Err(Failure::Usage("--sweep-n must be positive".into()));
            }
            compositions(n)
        }
        (None, None) => unreachable!("clap enforces the target group"),
    };
    let jobs: Vec<(Composition, Check)> =
        lambdas.iter().flat_map(|l| suite.checks().into_iter().map(move |c| (l.clone(), c))).collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.parallelism)
        .build()
        .map_err(|e| Failure::Usage(e.to_string()))?;
    let reports: Vec<CheckReport> =
        pool.install(|| jobs.par_iter().map(|(l, c)| run_check(*c, l)).collect::<Result<_, _>>())?;
    let failures = reports.iter().filter(|r| !r.status.ok()).count();
    match format {
        Format::Json => {
            let value = json!({ "reports": reports, "checks": reports.len(), "failures": failures });
            writeln!(out, "{}", serde_json::to_string_pretty(&value).unwrap())?;
        }
        _ => {
            for r in &reports {
                writeln!(out, "{r}")?;
            }
            writeln!(out, "summary: {} checks, {failures} failed", reports.len())?;
        }
    }
    if failures > 0 {
        return Err(Failure::ChecksFailed);
    }
    Ok(())
}

fn run(cfg: &RunConfig, out: &mut impl Write) -> Result<(), Failure> {
    match &cfg.command {
        Command::Enumerate(a) => cmd_enumerate(cfg, &a.lambda, out),
        Command::Hasse(a) => cmd_hasse(cfg, &a.lambda, out),
        Command::Decompose(a) => cmd_decompose(cfg, &a.lambda, out),
        Command::Classify(a) => cmd_classify(cfg, &a.lambda, out),
        Command::Verify { suite, target } => cmd_verify(cfg, *suite, target, out),
    }
}

fn main() -> ExitCode {
    let result = RunConfig::from_cli(Cli::parse()).and_then(|cfg| {
        let stdout = io::stdout();
        let mut out = stdout.lock();
        run(&cfg, &mut out)
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::ChecksFailed) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
