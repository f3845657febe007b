use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use shapovalov::barcore::{check_bar_core, core_quotient, find_rock_cores, is_rock};
use shapovalov::fock::{monomial_composite, parse_monomial, r_apply_divided, RFockVector};
use shapovalov::partitions::parse_list;
use shapovalov::symfunc::{closed_formula, theorem_inner};
use shapovalov::verify::{fock_side, full_sweep, SweepConfig, SweepReport};
use shapovalov::weyl::{core_from_word, WeylWord};
use shapovalov::{ColoredComposition, Error, GlobalParams, Partition, Rational};

#[derive(Parser)]
#[command(name = "shapovalov", version, about = "Shapovalov values of RoCK extremal weight spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate `(f(mu, j) u_rho, f(omega_d) u_rho)` by one or all methods.
    Dim(DimArgs),
    /// Bar-core, bar-weight and bar-quotient of a p-strict partition.
    Core {
        #[arg(long)]
        p: u32,
        #[arg(long, allow_hyphen_values = true)]
        partition: String,
    },
    /// Apply a divided-power monomial to a basis vector of the reduced Fock space.
    FockApply {
        #[arg(long)]
        ell: usize,
        #[arg(long, default_value = "")]
        start: String,
        /// `;`-separated factors `f<i>`, `f<i>^(<k>)` or `(<m>,<j>)`; the rightmost acts first.
        #[arg(long, conflicts_with = "cc")]
        monomial: Option<String>,
        /// Colored composition `mu/colors`, e.g. `2,1/0,1`.
        #[arg(long)]
        cc: Option<String>,
    },
    /// Sweep RoCK instances and compare all three methods.
    Verify(VerifyArgs),
    /// List RoCK bar-cores of a given weight.
    RockFind {
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        d: u32,
        #[arg(long, default_value_t = 40)]
        max_size: u32,
        #[arg(long)]
        count: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Fock,
    Sym,
    Formula,
    All,
}

#[derive(clap::Args)]
struct DimArgs {
    #[arg(long)]
    ell: usize,
    #[arg(long, conflicts_with = "word", required_unless_present = "word")]
    core: Option<String>,
    /// Weyl word, letters left to right, e.g. `0,1,0`.
    #[arg(long)]
    word: Option<String>,
    #[arg(long)]
    d: u32,
    #[arg(long)]
    mu: String,
    #[arg(long)]
    colors: String,
    #[arg(long, value_enum, default_value = "all")]
    method: Method,
    /// Reject cores that are not RoCK for the given weight.
    #[arg(long)]
    strict_hypothesis: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(clap::Args)]
struct VerifyArgs {
    #[arg(long, default_value = "1,2")]
    ell: String,
    #[arg(long, default_value_t = 3)]
    d_max: u32,
    #[arg(long, default_value_t = 3)]
    n_max: usize,
    /// RoCK cores per (ell, d).
    #[arg(long, default_value_t = 1)]
    cores: usize,
    /// Also record values for the empty core, outside the RoCK hypothesis.
    #[arg(long)]
    include_non_rock: bool,
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

enum Failure {
    Input(String),
    Mismatch,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Dim(args) => cmd_dim(args),
        Command::Core { p, partition } => cmd_core(p, &partition),
        Command::FockApply {
            ell,
            start,
            monomial,
            cc,
        } => cmd_fock_apply(ell, &start, monomial.as_deref(), cc.as_deref()),
        Command::Verify(args) => cmd_verify(args),
        Command::RockFind {
            ell,
            d,
            max_size,
            count,
        } => cmd_rock_find(ell, d, max_size, count),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Mismatch) => ExitCode::from(2),
    }
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json values serialize"));
}

fn cmd_dim(args: DimArgs) -> Outcome {
    let params = GlobalParams::new(args.ell)?;
    let rho = match (&args.core, &args.word) {
        (Some(core), _) => core.parse::<Partition>()?,
        (None, Some(word)) => {
            let word: WeylWord = word.parse()?;
            core_from_word(&WeylWord::new(word.letters, &params)?, &params)?
        }
        (None, None) => return Err(Failure::Input("one of --core or --word is required".into())),
    };
    check_bar_core(&rho, &params)?;
    let cc = ColoredComposition::new(parse_list(&args.mu, "mu")?, parse_list(&args.colors, "colors")?, &params)?;
    if cc.d() != args.d {
        return Err(Failure::Input(format!("mu = {:?} does not sum to d = {}", cc.mu(), args.d)));
    }
    let rock = is_rock(&rho, args.d, &params)?;
    if args.strict_hypothesis && !rock {
        return Err(Failure::Input(format!("core {rho} is not RoCK for d = {}", args.d)));
    }
    let mut out = serde_json::Map::new();
    out.insert("core".into(), json!(rho.to_string()));
    out.insert("rock".into(), json!(rock));
    let mut values: Vec<Rational> = Vec::new();
    let mut record = |key: &str, v: Rational, out: &mut serde_json::Map<String, Value>| {
        out.insert(key.into(), json!(v.to_string()));
        values.push(v);
    };
    if matches!(args.method, Method::Fock | Method::All) {
        record("fock", fock_side(&rho, args.d, &cc, &params)?, &mut out);
    }
    if matches!(args.method, Method::Sym | Method::All) {
        record("sym", theorem_inner(&cc, &params)?, &mut out);
    }
    if matches!(args.method, Method::Formula | Method::All) {
        record("formula", Rational::from_integer(closed_formula(&cc, &params)), &mut out);
    }
    let agree = values.windows(2).all(|w| w[0] == w[1]);
    if matches!(args.method, Method::All) {
        out.insert("agree".into(), json!(agree));
    }
    print_json(&Value::Object(out));
    if agree {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn params_for_p(p: u32) -> Result<GlobalParams, Failure> {
    if p < 3 || p.is_multiple_of(2) {
        return Err(Failure::Input(format!("p = {p} must be odd and at least 3")));
    }
    Ok(GlobalParams::new(((p - 1) / 2) as usize)?)
}

fn cmd_core(p: u32, partition: &str) -> Outcome {
    let params = params_for_p(p)?;
    let lambda: Partition = partition.parse()?;
    let data = core_quotient(&lambda, &params)?;
    print_json(&json!({
        "core": data.core.to_string(),
        "weight": data.weight,
        "quotient": data.quotient.components().iter().map(Partition::to_string).collect::<Vec<_>>(),
    }));
    Ok(())
}

fn cmd_fock_apply(ell: usize, start: &str, monomial: Option<&str>, cc: Option<&str>) -> Outcome {
    let params = GlobalParams::new(ell)?;
    let lambda: Partition = start.parse()?;
    lambda.check_p_strict(params.p)?;
    let mono = match (monomial, cc) {
        (Some(text), _) => parse_monomial(text, &params)?,
        (None, Some(cc)) => monomial_composite(&ColoredComposition::parse(cc, &params)?, &params)?,
        (None, None) => return Err(Failure::Input("one of --monomial or --cc is required".into())),
    };
    let v = r_apply_divided(&mono, &RFockVector::basis(lambda), &params)?;
    print_json(&json!(v.to_string_map()));
    Ok(())
}

fn cmd_verify(args: VerifyArgs) -> Outcome {
    let config = SweepConfig {
        ells: parse_list(&args.ell, "ell list")?,
        d_max: args.d_max,
        n_max: args.n_max,
        cores_per_case: args.cores,
        include_non_rock: args.include_non_rock,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs.unwrap_or(0))
        .build()
        .map_err(|e| Failure::Input(e.to_string()))?;
    let report = pool.install(|| full_sweep(&config))?;
    let text = match args.format {
        Format::Json => serde_json::to_string_pretty(&report).expect("report serializes"),
        Format::Table => table(&report),
    };
    match &args.out {
        Some(path) => {
            let json = serde_json::to_string_pretty(&report).expect("report serializes");
            fs::write(path, json).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            if let Format::Table = args.format {
                println!("{text}");
            } else {
                println!(
                    "{} instances, {} mismatches, status {}",
                    report.instances.len(),
                    report.mismatches,
                    report.status
                );
            }
        }
        None => println!("{text}"),
    }
    if report.all_agree() {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn table(report: &SweepReport) -> String {
    let mut lines = vec![format!(
        "{:>3} {:>3} {:<24} {:<10} {:<10} {:>10} {:>10} {:>10}  {}",
        "ell", "d", "core", "mu", "colors", "fock", "sym", "formula", "status"
    )];
    for r in &report.instances {
        let join = |v: Vec<String>| v.join(",");
        lines.push(format!(
            "{:>3} {:>3} {:<24} {:<10} {:<10} {:>10} {:>10} {:>10}  {}",
            r.ell,
            r.d,
            r.core.to_string(),
            join(r.mu.iter().map(u32::to_string).collect()),
            join(r.colors.iter().map(usize::to_string).collect()),
            r.fock_value,
            r.sym_value,
            r.formula_value,
            serde_json::to_value(&r.status).expect("status serializes").as_str().unwrap_or(""),
        ));
    }
    lines.push(format!(
        "{} instances, {} mismatches, status {}",
        report.instances.len(),
        report.mismatches,
        report.status
    ));
    lines.join("\n")
}

fn cmd_rock_find(ell: usize, d: u32, max_size: u32, count: Option<usize>) -> Outcome {
    let params = GlobalParams::new(ell)?;
    let mut cores = find_rock_cores(d, &params, max_size);
    if let Some(c) = count {
        cores.truncate(c);
    }
    print_json(&json!(cores.iter().map(Partition::to_string).collect::<Vec<_>>()));
    Ok(())
}
