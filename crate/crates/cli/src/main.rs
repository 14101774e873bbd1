mod report;
mod suites;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use covers_core::cubic::{norm_via_embeddings, solve_det_equation, Cubic};
use covers_core::hurwitz::{classify_coverings, frobenius_tuple_count, BranchData, CoveringContext};
use covers_core::matrix::{classify_polarization_matrices, conjugate_idempotent, sample_idempotents};
use num_bigint::BigInt;

use report::{Format, Record, Report};

#[derive(Parser)]
#[command(name = "covers", version, about = "Exact verification of degree-7 dihedral covers and the attached cubic-order arithmetic")]
struct Cli {
    /// Worker threads (default: all cores). Reports are byte-identical
    /// for any value.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a named verification suite.
    Verify {
        /// dihedral-table | conjugacy | count-400 | small-prime-grid |
        /// genus-tower | field | idempotents | all
        suite: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 3)]
        height: i64,
    },
    /// Enumerate and classify dihedral monodromy tuples for (prime, branch).
    Enumerate {
        #[arg(long)]
        prime: usize,
        #[arg(long)]
        branch: usize,
        /// Cap on the p^(b-1) search space for exact enumeration.
        #[arg(long, default_value_t = suites::DEFAULT_BUDGET)]
        budget: u128,
        /// Over budget, emit only the character-formula count, labeled
        /// conjectural (the free-action hypothesis is then unverified).
        #[arg(long)]
        allow_conjectural: bool,
    },
    /// Searches and randomized property checks in the cubic order.
    Field {
        /// solve-det | classify-polarizations | idempotent-roundtrip
        sub: String,
        #[arg(long)]
        height: i64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if t == 0 {
            eprintln!("error: --threads must be at least 1");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .expect("thread pool not yet initialized");
    }
    let started = Instant::now();
    let report = match run(&cli) {
        Ok(r) => r,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let rendered = report.render(cli.format);
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, rendered) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    } else {
        print!("{rendered}");
    }
    eprintln!("runtime: {:.3}s", started.elapsed().as_secs_f64());
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: &Cli) -> Result<Report, String> {
    match &cli.command {
        Command::Verify {
            suite,
            seed,
            samples,
            height,
        } => {
            let checks = suites::suite_checks(suite, *seed, *samples, *height)
                .ok_or_else(|| format!("unknown suite `{suite}`"))?;
            let mut config = base_config("verify", cli);
            config.insert("suite".into(), suite.clone());
            if suite == "idempotents" || suite == "all" {
                config.insert("seed".into(), seed.to_string());
                config.insert("samples".into(), samples.to_string());
                config.insert("height".into(), height.to_string());
            }
            Ok(Report::from_checks(config, checks))
        }
        Command::Enumerate {
            prime,
            branch,
            budget,
            allow_conjectural,
        } => cmd_enumerate(cli, *prime, *branch, *budget, *allow_conjectural),
        Command::Field {
            sub,
            height,
            seed,
            samples,
        } => cmd_field(cli, sub, *height, *seed, *samples),
    }
}

fn base_config(command: &str, cli: &Cli) -> BTreeMap<String, String> {
    let mut config = BTreeMap::new();
    config.insert("command".into(), command.to_string());
    config.insert(
        "format".into(),
        match cli.format {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Text => "text",
        }
        .to_string(),
    );
    config
}

fn cmd_enumerate(
    cli: &Cli,
    prime: usize,
    branch: usize,
    budget: u128,
    allow_conjectural: bool,
) -> Result<Report, String> {
    if !covers_core::dihedral::is_odd_prime(prime) || prime > 31 {
        return Err(format!("--prime must be an odd prime at most 31, got {prime}"));
    }
    if branch % 2 != 0 || branch < 2 || branch > 10 {
        return Err(format!("--branch must be even and between 2 and 10, got {branch}"));
    }
    if budget == 0 {
        return Err("--budget must be at least 1".into());
    }
    let mut config = base_config("enumerate", cli);
    config.insert("prime".into(), prime.to_string());
    config.insert("branch_count".into(), branch.to_string());
    config.insert("budget".into(), budget.to_string());

    let space = (prime as u128).pow(branch as u32 - 1);
    if space > budget {
        if !allow_conjectural {
            return Err(format!(
                "search space {space} exceeds budget {budget}; pass --allow-conjectural for the character-formula count only"
            ));
        }
        config.insert("mode".into(), "conjectural".into());
        let frob = frobenius_tuple_count(prime, branch).map_err(|e| e.to_string())?;
        let connected = frob - prime as u128;
        let normalizer = (prime * (prime - 1)) as u128;
        let mut rec = Record::new();
        rec.insert("tuple_total".into(), frob.to_string());
        rec.insert("connected_tuples".into(), connected.to_string());
        rec.insert(
            "conjectural_class_count".into(),
            (connected / normalizer).to_string(),
        );
        rec.insert(
            "label".into(),
            "conjectural count - free action unverified".into(),
        );
        return Ok(Report::from_results(config, vec![rec], "pass"));
    }
    config.insert("mode".into(), "exact".into());
    let ctx = CoveringContext::new(prime).map_err(|e| e.to_string())?;
    let c = classify_coverings(&ctx, BranchData { p: prime, b: branch }, budget)
        .map_err(|e| e.to_string())?;
    let mut rec = Record::new();
    rec.insert("tuple_total".into(), c.total_tuples.to_string());
    rec.insert("connected_tuples".into(), c.connected_tuples.to_string());
    rec.insert("class_count".into(), c.class_count().to_string());
    rec.insert("normalizer_order".into(), c.normalizer_order.to_string());
    rec.insert(
        "orbit_size_histogram".into(),
        format!("{:?}", c.orbit_size_histogram()),
    );
    Ok(Report::from_results(config, vec![rec], "pass"))
}

fn cmd_field(
    cli: &Cli,
    sub: &str,
    height: i64,
    seed: u64,
    samples: usize,
) -> Result<Report, String> {
    if height < 0 {
        return Err(format!("--height must be nonnegative, got {height}"));
    }
    let mut config = base_config("field", cli);
    config.insert("subcommand".into(), sub.to_string());
    config.insert("height".into(), height.to_string());
    match sub {
        "solve-det" => {
            let sols = solve_det_equation::<BigInt>(height);
            let mut ok = true;
            let results: Vec<Record> = sols
                .iter()
                .map(|phi| {
                    let v = Cubic::from_int(4).sub(&phi.square());
                    let recomputed = norm_via_embeddings(&v);
                    if recomputed != BigInt::from(7) {
                        ok = false;
                    }
                    let mut rec = Record::new();
                    rec.insert("phi".into(), phi.to_string());
                    rec.insert("norm_4_minus_phi_squared".into(), v.norm().to_string());
                    rec.insert("norm_recomputed_via_embeddings".into(), recomputed.to_string());
                    rec.insert(
                        "det_totally_positive".into(),
                        v.is_totally_positive().to_string(),
                    );
                    rec
                })
                .collect();
            Ok(Report::from_results(config, results, if ok { "pass" } else { "fail" }))
        }
        "classify-polarizations" => {
            let pols = classify_polarization_matrices::<i64>(height);
            let results: Vec<Record> = pols
                .iter()
                .map(|p| {
                    let mut rec = Record::new();
                    rec.insert("matrix".into(), p.matrix.to_string());
                    rec.insert("det".into(), p.matrix.det().to_string());
                    rec.insert("det_norm".into(), p.matrix.det().norm().to_string());
                    rec.insert("prym_shape".into(), p.prym_shape.to_string());
                    rec
                })
                .collect();
            Ok(Report::from_results(config, results, "pass"))
        }
        "idempotent-roundtrip" => {
            config.insert("seed".into(), seed.to_string());
            config.insert("samples".into(), samples.to_string());
            let eps_list = sample_idempotents::<BigInt>(seed, samples, height.max(1));
            let verified = eps_list
                .iter()
                .filter(|eps| {
                    conjugate_idempotent(eps)
                        .map(|c| {
                            c.conjugator.mul(eps).mul(&c.conjugator_inverse)
                                == covers_core::matrix::Mat2::idempotent_normal_form()
                                && c.conjugator.det().is_unit()
                        })
                        .unwrap_or(false)
                })
                .count();
            let mut rec = Record::new();
            rec.insert("samples".into(), samples.to_string());
            rec.insert("conjugated_and_verified".into(), verified.to_string());
            let status = if verified == samples { "pass" } else { "fail" };
            Ok(Report::from_results(config, vec![rec], status))
        }
        _ => Err(format!("unknown field subcommand `{sub}`")),
    }
}
