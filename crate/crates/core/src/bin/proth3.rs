use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use proth3::fermat::{factor_gf3, DEFAULT_GF3_BUDGET};
use proth3::report::{to_jsonl, Gf3Table, ResultRecord};
use proth3::verify::{self, VerifyConfig};
use proth3::{classify, scan, Natural, Outcome, ProthCandidate, SearchConfig};

const EXIT_USAGE: u8 = 3;

#[derive(Parser)]
#[command(name = "proth3", version, about = "Base-3 Proth-style primality for p*2^n+1")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify R = p*2^n + 1 (exit 0 prime, 1 composite, 2 primover)
    Classify {
        #[arg(long)]
        p: Natural,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 1_000_000)]
        sieve_budget: u64,
        /// Vouch that p is prime when it is beyond the oracle's exact range
        #[arg(long)]
        attest_prime: bool,
        #[arg(long)]
        json: bool,
    },
    /// Smallest n with p*2^n + 1 prime for every odd prime p in a range, as JSON lines
    Search {
        #[arg(long)]
        p_min: u64,
        #[arg(long)]
        p_max: u64,
        #[arg(long)]
        n_max: u32,
        #[arg(long, default_value_t = 1_000_000)]
        sieve_budget: u64,
        #[arg(long, env = "THREADS", default_value_t = 1)]
        workers: usize,
        /// Output file, rewritten on every run (stdout when absent)
        #[arg(long)]
        out: Option<PathBuf>,
        /// Treat an unresolved GF(3,n-1) divisor as the end of the search
        #[arg(long)]
        accept_primover: bool,
    },
    /// Factor GF(3, n) = 3^(2^n) + 1 and classify its odd factors
    Gf3 {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = DEFAULT_GF3_BUDGET)]
        budget: u64,
        #[arg(long)]
        json: bool,
    },
    /// Replay the test against the brute-force oracle
    Verify {
        #[arg(long, default_value_t = 1000)]
        p_max: u64,
        #[arg(long, default_value_t = 20)]
        n_max: u32,
        #[arg(long, env = "THREADS", default_value_t = 1)]
        workers: usize,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(command: Command) -> Result<u8, String> {
    match command {
        Command::Classify {
            p,
            n,
            sieve_budget,
            attest_prime,
            json,
        } => {
            let start = Instant::now();
            let c = if attest_prime {
                ProthCandidate::attested(p, n)
            } else {
                ProthCandidate::new(p, n)
            }
            .map_err(|e| e.to_string())?;
            if n < 2 {
                return Err(format!("n = {n} is out of scope for classify; use `search` for n = 1"));
            }
            let verdict = classify(&c, sieve_budget).map_err(|e| e.to_string())?;
            let elapsed = start.elapsed().as_millis() as u64;
            if json {
                let record = ResultRecord::for_candidate(&c, &verdict).with_elapsed_ms(elapsed);
                println!("{}", serde_json::to_string(&record).map_err(|e| e.to_string())?);
            } else {
                println!("{}", verdict.describe(n));
            }
            Ok(match verdict.outcome() {
                Outcome::Prime => 0,
                Outcome::Composite => 1,
                Outcome::Primover => 2,
            })
        }
        Command::Search {
            p_min,
            p_max,
            n_max,
            sieve_budget,
            workers,
            out,
            accept_primover,
        } => {
            let config = SearchConfig::new(n_max)
                .sieve_budget(sieve_budget)
                .accept_primover(accept_primover);
            let reports = scan(p_min, p_max, &config, workers).map_err(|e| e.to_string())?;
            let body = to_jsonl(&reports);
            match out {
                Some(path) => {
                    std::fs::write(&path, body)
                        .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
                    let survivors = reports.iter().filter(|r| r.survivor).count();
                    eprintln!(
                        "{} lines written to {}, {survivors} survivors",
                        reports.len(),
                        path.display()
                    );
                }
                None => print!("{body}"),
            }
            Ok(0)
        }
        Command::Gf3 { n, budget, json } => {
            let fac = factor_gf3(n, budget).map_err(|e| e.to_string())?;
            let table = Gf3Table::new(n, &fac);
            if json {
                println!("{}", serde_json::to_string(&table).map_err(|e| e.to_string())?);
            } else {
                println!("{}", table.summary(&fac));
            }
            Ok(0)
        }
        Command::Verify {
            p_max,
            n_max,
            workers,
            json,
        } => {
            let summary = verify::run(&VerifyConfig::new(p_max, n_max).workers(workers))
                .map_err(|e| e.to_string())?;
            if json {
                println!("{}", serde_json::to_string(&summary).map_err(|e| e.to_string())?);
            } else {
                println!("{summary}");
            }
            Ok(if summary.is_clean() { 0 } else { 1 })
        }
    }
}
