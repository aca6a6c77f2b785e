use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use semiglue_cli::commands::{self, Context, Exit, Failure, Outcome};
use semiglue_cli::input::InputDocument;
use semiglue_cli::report::{Bounds, Provenance, ReportDocument};

/// Gluings of affine semigroups: lattice points, toric ideals, gluing
/// verification and the invariants they predict.
///
/// Exit codes: 0 affirmative, 1 negative, 2 input error, 3 inconclusive
/// within bounds.
#[derive(Parser, Debug)]
#[command(name = "semiglue", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Largest multiplier tried in searches for multiples of u.
    #[arg(long, global = true, env = "SEMIGLUE_KMAX")]
    kmax: Option<u64>,

    /// Print a JSON report instead of text.
    #[arg(long, global = true, env = "SEMIGLUE_JSON")]
    json: bool,

    /// Degree bound for the enumeration oracle, one integer or one per
    /// coordinate (comma separated).
    #[arg(
        long,
        global = true,
        env = "SEMIGLUE_DEGREE_BOUND",
        value_delimiter = ','
    )]
    degree_bound: Option<Vec<i64>>,

    /// Maximum number of lattice points visited by the oracle.
    #[arg(long, global = true, env = "SEMIGLUE_WORK_LIMIT")]
    work_limit: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The gluable lattice point u(A,B).
    LatticePoint { input: PathBuf },
    /// Minimal generators of the toric ideal of A.
    Toric { input: PathBuf },
    /// Decide whether k1·A u k2·B is a gluing.
    CheckGluing {
        input: PathBuf,
        #[arg(long)]
        k1: Option<u64>,
        #[arg(long)]
        k2: Option<u64>,
    },
    /// Search for coprime multipliers and verify the resulting gluing.
    FindGluing { input: PathBuf },
    /// Check the implications between the gluability conditions.
    Audit { input: PathBuf },
    /// Embed two homogeneous plane semigroups in N^3 and glue them.
    EmbedGlue {
        input: PathBuf,
        /// 1-based index into the steps of A.
        #[arg(long)]
        i: Option<usize>,
    },
    /// Betti numbers of a gluing from those of its parts.
    BettiGlue { input: PathBuf },
    /// Whether v lies in the semigroup generated by A.
    Membership { input: PathBuf },
    /// Level of a binomial of I_C.
    Level {
        input: PathBuf,
        #[arg(long)]
        k1: Option<u64>,
        #[arg(long)]
        k2: Option<u64>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::LatticePoint { .. } => "lattice-point",
            Command::Toric { .. } => "toric",
            Command::CheckGluing { .. } => "check-gluing",
            Command::FindGluing { .. } => "find-gluing",
            Command::Audit { .. } => "audit",
            Command::EmbedGlue { .. } => "embed-glue",
            Command::BettiGlue { .. } => "betti-glue",
            Command::Membership { .. } => "membership",
            Command::Level { .. } => "level",
        }
    }

    fn input(&self) -> &PathBuf {
        match self {
            Command::LatticePoint { input }
            | Command::Toric { input }
            | Command::CheckGluing { input, .. }
            | Command::FindGluing { input }
            | Command::Audit { input }
            | Command::EmbedGlue { input, .. }
            | Command::BettiGlue { input }
            | Command::Membership { input }
            | Command::Level { input, .. } => input,
        }
    }
}

fn read_input(path: &PathBuf) -> Result<Vec<u8>, Failure> {
    let mut buf = Vec::new();
    if path.as_os_str() == "-" {
        std::io::stdin()
            .read_to_end(&mut buf)
            .map_err(|e| Failure::input(format!("reading stdin: {e}")))?;
    } else {
        buf = std::fs::read(path)
            .map_err(|e| Failure::input(format!("reading {}: {e}", path.display())))?;
    }
    Ok(buf)
}

fn run(cli: &Cli, raw: &[u8], bounds: &mut Bounds) -> Result<Outcome, Failure> {
    let text = std::str::from_utf8(raw).map_err(|_| Failure::input("input is not UTF-8"))?;
    let doc = InputDocument::parse(text).map_err(|e| Failure::input(e.0))?;
    bounds.kmax = cli
        .kmax
        .or(doc.kmax)
        .unwrap_or(semiglue::gluing::DEFAULT_KMAX);
    bounds.degree_bound = cli
        .degree_bound
        .clone()
        .or_else(|| doc.degree_bound.clone());
    bounds.work_limit = cli
        .work_limit
        .or(doc.work_limit)
        .unwrap_or(semiglue::toric::DEFAULT_WORK_LIMIT);
    if bounds.kmax == 0 {
        return Err(Failure::input("kmax must be positive"));
    }
    let ctx = Context {
        doc: &doc,
        bounds: bounds.clone(),
    };
    match &cli.command {
        Command::LatticePoint { .. } => commands::lattice_point(&ctx),
        Command::Toric { .. } => commands::toric(&ctx),
        Command::CheckGluing { k1, k2, .. } => commands::check_gluing(&ctx, *k1, *k2),
        Command::FindGluing { .. } => commands::find_gluing(&ctx),
        Command::Audit { .. } => commands::audit(&ctx),
        Command::EmbedGlue { i, .. } => commands::embed_glue(&ctx, *i),
        Command::BettiGlue { .. } => commands::betti_glue(&ctx),
        Command::Membership { .. } => commands::membership(&ctx),
        Command::Level { k1, k2, .. } => commands::level_cmd(&ctx, *k1, *k2),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { Exit::Input as u8 } else { 0 });
        }
    };
    let mut bounds = Bounds {
        kmax: semiglue::gluing::DEFAULT_KMAX,
        degree_bound: None,
        work_limit: semiglue::toric::DEFAULT_WORK_LIMIT,
    };
    let raw = read_input(cli.command.input());
    let outcome = match raw {
        Ok(raw) => {
            let result = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| {
                run(&cli, &raw, &mut bounds)
            }))
            .unwrap_or_else(|_| Err(Failure::input("internal error")));
            (raw, result)
        }
        Err(f) => (Vec::new(), Err(f)),
    };
    let (raw, result) = outcome;
    let (exit, text, value) = match result {
        Ok(o) => (o.exit, o.text, o.result),
        Err(f) => {
            let message = format!("error: {}", f.message);
            (
                f.exit,
                message.clone() + "\n",
                serde_json::json!({ "error": f.message }),
            )
        }
    };
    if cli.json {
        let doc = ReportDocument {
            command: cli.command.name().to_string(),
            outcome: exit.outcome().to_string(),
            exit_code: exit as i32,
            result: value,
            provenance: Provenance::new(&raw, bounds),
        };
        println!("{}", doc.to_json());
    } else if matches!(exit, Exit::Input) {
        eprint!("{text}");
    } else {
        print!("{text}");
    }
    ExitCode::from(exit as u8)
}
