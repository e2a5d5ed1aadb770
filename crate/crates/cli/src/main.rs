use std::path::{Path, PathBuf};
use std::process::ExitCode;

use awfs_core::goldens::{self, DriftStatus};
use clap::{Parser, Subcommand};
use serde_json::json;

mod runner;
mod suites;

use runner::Runner;
use suites::{run_suite, SuiteConfig, SUITES};

#[derive(Parser)]
#[command(name = "awfs-lab", version, about = "Verification suites for algebraic weak factorization systems")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a verification suite
    Run {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// resource cap for pushouts and certificate searches
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long, default_value_t = awfs_core::sset::DEFAULT_DIM)]
        dim_bound: usize,
        #[arg(long)]
        corpus_size: Option<usize>,
        #[arg(long)]
        json_out: Option<PathBuf>,
    },
    /// Write every golden file under a directory
    EmitGoldens { path: PathBuf },
    /// Compare a golden directory against freshly rendered goldens
    DiffGoldens { path: PathBuf },
}

fn run(suite: &str, cfg: &SuiteConfig, json_out: Option<&Path>) -> u8 {
    let mut r = Runner::default();
    if let Err(e) = run_suite(suite, cfg, &mut r) {
        eprintln!("error: {e}");
        return 1;
    }
    let report = json!({
        "suite": suite,
        "checks": r.checks.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
        "seed": cfg.seed,
        "versions": {"awfs-core": awfs_core::VERSION, "awfs-lab": env!("CARGO_PKG_VERSION")},
    });
    if let Some(p) = json_out {
        let text = serde_json::to_string_pretty(&report).unwrap_or_default();
        if let Err(e) = std::fs::write(p, text + "\n") {
            eprintln!("error: cannot write {}: {e}", p.display());
            return 1;
        }
    }
    r.exit_code() as u8
}

fn emit(root: &Path) -> u8 {
    let files = match goldens::render() {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            return if e.is_resource_cap() { 2 } else { 1 };
        }
    };
    for g in &files {
        let p = root.join(&g.path);
        let res = p.parent().map_or(Ok(()), std::fs::create_dir_all).and_then(|_| std::fs::write(&p, &g.content));
        if let Err(e) = res {
            eprintln!("error: cannot write {}: {e}", p.display());
            return 1;
        }
    }
    println!("wrote {} golden files", files.len());
    0
}

fn diff(root: &Path) -> u8 {
    let files = match goldens::render() {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };
    let drift = goldens::diff(&files, |p| std::fs::read(root.join(p)).ok());
    for d in &drift {
        match d.status {
            DriftStatus::Missing => println!("missing {}", d.path),
            DriftStatus::Changed => println!("changed {} at byte {}", d.path, d.offset.unwrap_or(0)),
        }
    }
    println!("{}", serde_json::to_string(&json!({"drift": drift})).unwrap_or_default());
    u8::from(!drift.is_empty())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.cmd {
        Cmd::Run { suite, seed, cap, dim_bound, corpus_size, json_out } => {
            run(&suite, &SuiteConfig { seed, cap, dim_bound, corpus_size }, json_out.as_deref())
        }
        Cmd::EmitGoldens { path } => emit(&path),
        Cmd::DiffGoldens { path } => diff(&path),
    };
    ExitCode::from(code)
}
