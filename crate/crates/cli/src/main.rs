//! `e2`: command-line front end for the `e2-core` library.
//!
//! Exit codes: 0 success or PASS, 1 a verified FAIL, 2 usage or parse
//! errors, 3 an inconclusive search.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use e2_core::{
    check_lemma1, enumerate_special, lemma2_scan, matrix_in_e2, orbit_bfs, pairs_equivalent, pell_fundamental,
    reduce_pair, verify_corrigendum, Certificate, Error, Mat2, Membership, Outcome, RingDesc, SearchParams, UniPair,
};

const OK: u8 = 0;
const FAILED: u8 = 1;
const USAGE: u8 = 2;
const INCONCLUSIVE: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "e2", version, about = "Exact computations with E_2 over imaginary quadratic orders")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Ring as `sqrt:D` (Z[sqrt(-D)]) or `half:D` (w^2 = w - D).
    #[arg(long, global = true)]
    ring: Option<RingDesc>,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Largest entry norm kept in a search window.
    #[arg(long, global = true)]
    state_cap: Option<u64>,
    /// Largest norm of a move parameter t.
    #[arg(long, global = true)]
    gen_cap: Option<u64>,
    #[arg(long, global = true)]
    max_states: Option<usize>,
    #[arg(long, global = true)]
    max_depth: Option<usize>,
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run certificate suites.
    Verify(VerifyArgs),
    /// Bounded orbit of a pair under the right action.
    Orbit { pair: String },
    /// Search for a word taking one pair to another.
    Equiv { from: String, to: String },
    /// Search for an elementary word equal to a matrix.
    Member { matrix: String },
    /// Greedy reduction of a pair.
    Reduce { pair: String },
    /// List special pairs up to a norm cap.
    Special {
        #[arg(long)]
        cap: u64,
    },
    /// Fundamental solution of x^2 - D y^2 = 1.
    Pell { d: u64 },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Z[di] family parameter; defaults to the square root of D for `sqrt:d^2`.
    #[arg(long)]
    d: Option<u64>,
    /// `a..b` (inclusive, multiples of d) or a comma list.
    #[arg(long)]
    n: Option<String>,
    /// Run the sampled row/coset correspondence checks.
    #[arg(long)]
    lemma1: bool,
    #[arg(long, default_value_t = 500)]
    samples: usize,
    /// Run the special-pair separation scan.
    #[arg(long)]
    lemma2: bool,
    /// Norm cap for the separation scan.
    #[arg(long, default_value_t = 200)]
    cap: u64,
    /// Treat inconclusive search outcomes as not good enough (exit 3).
    #[arg(long)]
    proof: bool,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: USAGE, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: USAGE, message: message.into() }
}

type Run = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Run {
    let c = &cli.common;
    match &cli.command {
        Command::Verify(args) => cmd_verify(c, args),
        Command::Orbit { pair } => cmd_orbit(c, pair),
        Command::Equiv { from, to } => cmd_equiv(c, from, to),
        Command::Member { matrix } => cmd_member(c, matrix),
        Command::Reduce { pair } => cmd_reduce(c, pair),
        Command::Special { cap } => cmd_special(c, *cap),
        Command::Pell { d } => cmd_pell(c, *d),
    }
}

impl Common {
    fn ring(&self) -> Result<RingDesc, Failure> {
        self.ring.ok_or_else(|| usage("--ring is required for this command"))
    }

    fn budgets(&self, base: SearchParams) -> Result<SearchParams, Failure> {
        Ok(SearchParams::new(
            self.state_cap.unwrap_or(base.state_norm_cap),
            self.gen_cap.unwrap_or(base.gen_norm_cap),
            self.max_states.unwrap_or(base.max_states),
            self.max_depth.unwrap_or(base.max_depth),
        )?)
    }

    fn header(&self, ring: RingDesc) {
        if !self.json {
            println!("# ring {ring}, {}", ring.omega_description());
        }
    }
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json value"));
}

fn parse_n_values(spec: &str, d: u64) -> Result<Vec<u64>, Failure> {
    let num = |s: &str| s.trim().parse::<u64>().map_err(|_| usage(format!("bad number `{s}` in --n")));
    let values = if let Some((lo, hi)) = spec.split_once("..") {
        let (lo, hi) = (num(lo)?, num(hi)?);
        if lo > hi {
            return Err(usage(format!("empty range `{spec}`")));
        }
        (lo..=hi).filter(|n| n % d == 0).collect::<Vec<_>>()
    } else {
        spec.split(',').map(num).collect::<Result<Vec<_>, _>>()?
    };
    if values.is_empty() {
        return Err(usage(format!("--n `{spec}` contains no positive multiple of d = {d}")));
    }
    Ok(values)
}

fn family_parameter(c: &Common, args: &VerifyArgs) -> Result<u64, Failure> {
    match (args.d, c.ring) {
        (Some(d), None) => Ok(d),
        (Some(d), Some(r)) => {
            if RingDesc::gaussian_multiple(d).ok() != Some(r) {
                return Err(usage(format!("--d {d} needs --ring sqrt:{}, got {r}", d * d)));
            }
            Ok(d)
        }
        (None, Some(r)) => r
            .gaussian_scale()
            .filter(|&d| d >= 2)
            .ok_or_else(|| usage(format!("ring {r} is not Z[di] with d >= 2; pass --d"))),
        (None, None) => Err(usage("verify needs --d or --ring")),
    }
}

fn cmd_verify(c: &Common, args: &VerifyArgs) -> Run {
    let corrigendum = args.d.is_some() || args.n.is_some() || !(args.lemma1 || args.lemma2);
    let mut parts = Vec::new();
    let ring = if corrigendum {
        let d = family_parameter(c, args)?;
        let ns = match &args.n {
            Some(spec) => parse_n_values(spec, d)?,
            None => (1..=10).map(|k| k * d).collect(),
        };
        parts.push(verify_corrigendum(d, &ns)?);
        RingDesc::gaussian_multiple(d)?
    } else {
        c.ring()?
    };
    if args.lemma1 {
        if args.samples == 0 {
            return Err(usage("--samples must be positive"));
        }
        parts.push(check_lemma1(ring, args.samples, c.seed)?);
    }
    let mut inconclusive = 0;
    if args.lemma2 {
        let cap = args.cap;
        let base = SearchParams::new(4 * cap, 16 * cap, 1_000_000, 200)?;
        let cert = lemma2_scan(ring, cap, &c.budgets(base)?)?;
        inconclusive = cert.checks.iter().filter(|ch| ch.name.starts_with("lemma2.separation")).count();
        parts.push(cert);
    }
    let cert = Certificate::merge(ring, parts)?;

    if c.json {
        println!("{}", cert.to_json());
    } else {
        c.header(ring);
        for ch in &cert.checks {
            println!("{} {}", ch.status, ch.name);
            if !ch.passed() {
                println!("    claim: {}", ch.claim);
                if let Some(w) = &ch.witness {
                    println!("    witness: {w}");
                }
            }
        }
        println!("overall: {} ({} checks)", cert.overall, cert.checks.len());
        if inconclusive > 0 {
            println!("note: {inconclusive} separation checks rest on bounded searches and are inconclusive as proofs");
        }
    }
    Ok(if !cert.passed() {
        FAILED
    } else if args.proof && inconclusive > 0 {
        INCONCLUSIVE
    } else {
        OK
    })
}

fn cmd_orbit(c: &Common, pair: &str) -> Run {
    let ring = c.ring()?;
    let start = UniPair::parse(ring, pair)?;
    let report = orbit_bfs(&start, &c.budgets(SearchParams::default())?)?;
    if c.json {
        print_json(&report.to_json());
    } else {
        c.header(ring);
        println!(
            "visited {} pairs, window {}",
            report.len(),
            if report.frontier_exhausted() { "closed" } else { "truncated" }
        );
        for q in report.visited() {
            let w = report.witness(q).expect("visited pairs have witnesses");
            println!("{q}\t{w}");
        }
    }
    Ok(OK)
}

fn cmd_equiv(c: &Common, from: &str, to: &str) -> Run {
    let ring = c.ring()?;
    let p = UniPair::parse(ring, from)?;
    let q = UniPair::parse(ring, to)?;
    let result = pairs_equivalent(&p, &q, &c.budgets(SearchParams::default())?)?;
    found_or_inconclusive(c, ring, "EQUIVALENT", result.word().map(ToString::to_string))
}

fn cmd_member(c: &Common, matrix: &str) -> Run {
    let ring = c.ring()?;
    let m = Mat2::parse(ring, matrix)?;
    let word = match matrix_in_e2(&m, &c.budgets(SearchParams::default())?)? {
        Membership::Word(w) => Some(w.to_string()),
        Membership::NotFound => None,
    };
    found_or_inconclusive(c, ring, "WORD", word)
}

fn found_or_inconclusive(c: &Common, ring: RingDesc, label: &str, word: Option<String>) -> Run {
    if c.json {
        print_json(&match &word {
            Some(w) => json!({ "result": label, "word": w }),
            None => json!({ "result": "NOT_FOUND", "inconclusive": true }),
        });
    } else {
        c.header(ring);
        match &word {
            Some(w) => println!("{w}"),
            None => println!("NOT_FOUND (inconclusive: budgets exhausted)"),
        }
    }
    Ok(if word.is_some() { OK } else { INCONCLUSIVE })
}

fn cmd_reduce(c: &Common, pair: &str) -> Run {
    let ring = c.ring()?;
    let p = UniPair::parse(ring, pair)?;
    let res = reduce_pair(&p)?;
    let outcome = match res.outcome {
        Outcome::Reduced => "REDUCED",
        Outcome::Stalled => "STALLED",
    };
    if c.json {
        print_json(&json!({
            "outcome": outcome,
            "final": res.final_pair.to_string(),
            "word": res.word.to_string(),
        }));
    } else {
        c.header(ring);
        println!("{outcome}");
        println!("final: {}", res.final_pair);
        println!("word: {}", res.word);
    }
    Ok(OK)
}

fn cmd_special(c: &Common, cap: u64) -> Run {
    let ring = c.ring()?;
    if cap == 0 {
        return Err(usage("--cap must be positive"));
    }
    let pairs = enumerate_special(ring, cap);
    if c.json {
        print_json(&Value::from(pairs.iter().map(ToString::to_string).collect::<Vec<_>>()));
    } else {
        c.header(ring);
        for p in &pairs {
            println!("{p}");
        }
    }
    Ok(OK)
}

fn cmd_pell(c: &Common, d: u64) -> Run {
    let sol = pell_fundamental(d)?;
    if c.json {
        print_json(&match &sol {
            Some(s) => json!({ "d": d, "x": s.x.to_string(), "y": s.y.to_string() }),
            None => json!({ "d": d, "x": null, "y": null }),
        });
    } else {
        match &sol {
            Some(s) => println!("{} {}", s.x, s.y),
            None => println!("none ({d} is a perfect square)"),
        }
    }
    Ok(OK)
}
