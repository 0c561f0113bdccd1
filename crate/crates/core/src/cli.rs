//! Command-line front end.
//!
//! Every subcommand runs one library pipeline and writes one report. Exit
//! status is 0 on success, 1 when the pipeline rejects its input, and 2 on
//! a malformed command line.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::energy::{energy_report, EnergyReport, Mode};
use crate::error::Error;
use crate::graph::{c4free_capacity, cs_chain_audit, find_c4, graph_from_pq, ProductGraph};
use crate::low_energy::{bw_audit, t_exact, t_random_search, LowEnergyResult};
use crate::report::{emit_report, flat_csv, Format, Report};
use crate::scaling::{conjecture_audit, klr_experiment, run_scaling, Construction, KlrReport, Metric};
use crate::sets::{sample_subset, GroundSet, Provenance, SampleSpec};
use crate::sidon::{deletion_sidon, greedy_sidon, max_sidon_subset, sidon_check, DeletionOutcome, MaxSubsetResult, SidonVerdict};

/// Environment variable holding the worker thread count.
pub const THREADS_ENV: &str = "SIDONLAB_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "sidonlab",
    version,
    about = "Exact experiments on additive and multiplicative Sidon subsets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct SetInput {
    /// Set file: one element per line, optionally `element<TAB>f1,f2` with
    /// its prime labels; `#` lines carry provenance. `-` reads stdin.
    #[arg(long, value_name = "PATH")]
    set_file: Option<PathBuf>,
    /// Build the set in place instead of reading a file.
    #[arg(long, value_enum, requires = "n", conflicts_with = "set_file")]
    construction: Option<Construction>,
    /// Parameter of --construction.
    #[arg(long, requires = "construction")]
    n: Option<u64>,
}

#[derive(Debug, Args)]
struct Output {
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ModeArg {
    #[arg(long, value_enum)]
    mode: Mode,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a ground set: `pq` (products pq with p <= n < q <= n^2/ln n),
    /// `triple` (products of three primes <= n), `bw` ((2i-1)2^j with
    /// i <= n^2, j <= n) or `interval` ({1..n}). Optionally subsample it.
    Construct {
        #[arg(value_enum)]
        construction: Construction,
        #[arg(long)]
        n: u64,
        /// Keep a uniform subset of this size (needs --seed).
        #[arg(long, conflicts_with = "sample_p", requires = "seed")]
        sample_size: Option<usize>,
        /// Keep each element independently with this probability (needs --seed).
        #[arg(long, requires = "seed")]
        sample_p: Option<f64>,
        #[arg(long)]
        seed: Option<u64>,
        /// Output format; the set-file format when omitted.
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long, value_name = "PATH")]
        output: Option<PathBuf>,
    },
    /// Additive and multiplicative energy (ordered quadruples with
    /// a∘b = c∘d), sumset and productset sizes, and the Cauchy–Schwarz lower
    /// bounds |A|^4 / |A∘A|.
    Energy {
        #[command(flatten)]
        set: SetInput,
        #[command(flatten)]
        out: Output,
    },
    /// Decide whether the set is Sidon; a violation a∘b = c∘d is reported
    /// as a witness.
    SidonCheck {
        #[command(flatten)]
        set: SetInput,
        #[command(flatten)]
        mode: ModeArg,
        #[command(flatten)]
        out: Output,
    },
    /// Largest Sidon subset by branch and bound; `optimal` is true when the
    /// search finished inside the node budget.
    SidonMax {
        #[command(flatten)]
        set: SetInput,
        #[command(flatten)]
        mode: ModeArg,
        /// Node budget: an integer, `10^7` or `1e7`.
        #[arg(long, value_parser = parse_budget, default_value = "10^7")]
        budget: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Ascending greedy Sidon subset (a lower bound).
    SidonGreedy {
        #[command(flatten)]
        set: SetInput,
        #[command(flatten)]
        mode: ModeArg,
        #[command(flatten)]
        out: Output,
    },
    /// Random deletion: keep each element with probability
    /// p = min(1, (|A| / 2V)^(1/3)) for V violations, then delete one element
    /// of each surviving violation.
    SidonDelete {
        #[command(flatten)]
        set: SetInput,
        #[command(flatten)]
        mode: ModeArg,
        #[arg(long)]
        seed: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Look for a 4-cycle p-q-p'-q' in the bipartite graph of a labelled
    /// P·Q set (edge p-q for each element pq); a 4-cycle is exactly a
    /// multiplicative violation (pq)(p'q') = (p'q)(pq').
    C4 {
        #[command(flatten)]
        set: SetInput,
        /// Read a graph (`P: ...`, `Q: ...`, then `p q` edge lines) instead.
        #[arg(long, value_name = "PATH", conflicts_with_all = ["set_file", "construction"])]
        graph_file: Option<PathBuf>,
        #[command(flatten)]
        out: Output,
    },
    /// Largest e with e^2 <= |Q| (e + |P|^2): the most edges a 4-cycle-free
    /// bipartite graph on parts P, Q can carry, hence an upper bound on the
    /// multiplicative Sidon number of a P·Q set.
    Capacity {
        #[command(flatten)]
        set: SetInput,
        /// |P| (with --q, instead of a set).
        #[arg(long, requires = "q", conflicts_with_all = ["set_file", "construction"])]
        p: Option<u64>,
        /// |Q|.
        #[arg(long, requires = "p")]
        q: Option<u64>,
        #[command(flatten)]
        out: Output,
    },
    /// Evaluate the Cauchy–Schwarz chain |E|^2 <= |Q| Σ deg(q)^2 =
    /// |Q| (|E| + Σ codeg) <= |Q| (|E| + |P|^2) on the set's graph.
    CsAudit {
        #[command(flatten)]
        set: SetInput,
        #[arg(long, value_name = "PATH", conflicts_with_all = ["set_file", "construction"])]
        graph_file: Option<PathBuf>,
        #[command(flatten)]
        out: Output,
    },
    /// Largest subset A' with E(A') < 2|A'|^2 by exhaustive search
    /// (|A| <= 24).
    TExact {
        #[command(flatten)]
        set: SetInput,
        #[command(flatten)]
        mode: ModeArg,
        /// Only search subsets up to this size.
        #[arg(long)]
        size_cap: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// Randomized lower bound for the largest low-energy subset: peel to a
    /// half-size subset, take p-random samples over a grid of p, repair and
    /// extend each, keep the best.
    TSearch {
        #[command(flatten)]
        set: SetInput,
        #[command(flatten)]
        mode: ModeArg,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long)]
        seed: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Audit the dyadic progression union {(2i-1)2^j : i <= N^2, j <= N}:
    /// productset containment, progression structure, and energy bounds on
    /// random subsets of size ceil(C N^(5/2)).
    BwAudit {
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 1.0)]
        c: f64,
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long)]
        seed: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Evaluate metrics over a parameter sweep and fit log metric against
    /// log |A| by least squares.
    Scaling {
        #[arg(long, value_enum)]
        construction: Construction,
        /// Parameters: `20,30,40` or the inclusive range `20..200:10`.
        #[arg(long, value_parser = parse_params)]
        params: ParamList,
        /// Metrics to evaluate (repeat or comma-separate).
        #[arg(long = "metric", value_enum, value_delimiter = ',', required = true)]
        metrics: Vec<Metric>,
        #[command(flatten)]
        out: Output,
    },
    /// Exact additive Sidon numbers of uniform round(n^a)-subsets of
    /// {1..n}, compared with n^(1/3) and m^(1/2).
    Klr {
        #[arg(long)]
        n: u64,
        /// Exponent in [1/3, 1]; a fraction such as `1/3` or a decimal.
        #[arg(long, value_parser = parse_fraction)]
        a: f64,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, value_parser = parse_budget, default_value = "10^7")]
        budget: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Evidence table for one set: greedy, deletion, exact or budgeted Sidon
    /// numbers in both modes, low-energy search, doubling constant K and the
    /// comparison of s_* with |A|^(2/3) / (K^(2/3) (ln |A|)^(1/3)).
    Audit {
        #[command(flatten)]
        set: SetInput,
        #[arg(long, value_parser = parse_budget, default_value = "10^6")]
        budget: u64,
        #[arg(long)]
        seed: u64,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Debug, Clone)]
struct ParamList(Vec<u64>);

/// Parses a node budget: `12345`, `10^7` or `1e7`.
pub fn parse_budget(s: &str) -> std::result::Result<u64, String> {
    let s = s.trim().replace('_', "");
    let power = |base: &str, exp: &str, mant: u64| -> std::result::Result<u64, String> {
        let b: u64 = base.parse().map_err(|e| format!("bad budget {s:?}: {e}"))?;
        let e: u32 = exp.parse().map_err(|e| format!("bad budget {s:?}: {e}"))?;
        b.checked_pow(e)
            .and_then(|v| v.checked_mul(mant))
            .ok_or_else(|| format!("budget {s:?} overflows"))
    };
    let v = if let Some((b, e)) = s.split_once('^') {
        power(b, e, 1)?
    } else if let Some((m, e)) = s.split_once(['e', 'E']) {
        let mant: u64 = m.parse().map_err(|e| format!("bad budget {s:?}: {e}"))?;
        power("10", e, mant)?
    } else {
        s.parse().map_err(|e| format!("bad budget {s:?}: {e}"))?
    };
    if v == 0 {
        return Err("budget must be positive".into());
    }
    Ok(v)
}

/// Parses `p/q` or a decimal.
pub fn parse_fraction(s: &str) -> std::result::Result<f64, String> {
    let v = match s.split_once('/') {
        Some((p, q)) => {
            let p: f64 = p.trim().parse().map_err(|e| format!("bad fraction {s:?}: {e}"))?;
            let q: f64 = q.trim().parse().map_err(|e| format!("bad fraction {s:?}: {e}"))?;
            p / q
        }
        None => s.trim().parse().map_err(|e| format!("bad number {s:?}: {e}"))?,
    };
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("{s:?} is not finite"))
    }
}

fn parse_params(s: &str) -> std::result::Result<ParamList, String> {
    let bad = |e: std::num::ParseIntError| format!("bad parameter list {s:?}: {e}");
    if let Some((lo, rest)) = s.split_once("..") {
        let (hi, step) = rest.split_once(':').unwrap_or((rest, "1"));
        let (lo, hi, step): (u64, u64, u64) = (
            lo.trim().parse().map_err(bad)?,
            hi.trim().parse().map_err(bad)?,
            step.trim().parse().map_err(bad)?,
        );
        if step == 0 || lo > hi {
            return Err(format!("empty range {s:?}"));
        }
        Ok(ParamList((lo..=hi).step_by(step as usize).collect()))
    } else {
        s.split(',')
            .map(|w| w.trim().parse().map_err(bad))
            .collect::<std::result::Result<_, _>>()
            .map(ParamList)
    }
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Domain(Error::Io(e))
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

#[derive(Serialize)]
struct SetReport<'a> {
    size: usize,
    elements: &'a [u64],
    provenance: &'a Provenance,
}

impl Report for SetReport<'_> {
    fn csv(&self) -> String {
        let mut out = String::from("element\n");
        for x in self.elements {
            out.push_str(&format!("{x}\n"));
        }
        out
    }
}

#[derive(Serialize)]
struct SidonCheckReport {
    mode: Mode,
    set_size: usize,
    sidon: bool,
    witness: Option<[u64; 4]>,
}

#[derive(Serialize)]
struct GreedyReport {
    mode: Mode,
    size: usize,
    subset: Vec<u64>,
}

#[derive(Serialize)]
struct C4Report {
    left: usize,
    right: usize,
    edges: usize,
    c4_free: bool,
    /// `p, p', q, q'`.
    witness: Option<[u64; 4]>,
    /// `pq, pq', p'q, p'q'`.
    labels: Option<[u64; 4]>,
}

#[derive(Serialize)]
struct CapacityReport {
    p: u64,
    q: u64,
    capacity: u64,
}

macro_rules! flat_report {
    ($($t:ty),*) => {
        $(impl Report for $t {
            fn csv(&self) -> String {
                flat_csv(self)
            }
        })*
    };
}

flat_report!(
    EnergyReport,
    MaxSubsetResult,
    DeletionOutcome,
    LowEnergyResult,
    SidonCheckReport,
    GreedyReport,
    C4Report,
    CapacityReport
);

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
}

impl Io<'_> {
    fn read_path(&mut self, path: &PathBuf) -> Outcome<String> {
        if path.as_os_str() == "-" {
            let mut s = String::new();
            self.stdin.read_to_string(&mut s)?;
            Ok(s)
        } else {
            Ok(fs::read_to_string(path)?)
        }
    }

    fn load_set(&mut self, input: &SetInput) -> Outcome<GroundSet> {
        match (&input.set_file, input.construction, input.n) {
            (Some(path), _, _) => Ok(GroundSet::parse_text(&self.read_path(path)?)?),
            (None, Some(c), Some(n)) => Ok(c.build(n)?),
            _ => Err(Failure::Usage(
                "a set is required: --set-file PATH or --construction KIND --n N".into(),
            )),
        }
    }

    fn load_graph(&mut self, input: &SetInput, graph_file: &Option<PathBuf>) -> Outcome<ProductGraph> {
        match graph_file {
            Some(path) => Ok(ProductGraph::parse_text(&self.read_path(path)?)?),
            None => {
                let a = self.load_set(input)?;
                Ok(graph_from_pq(&a, None)?)
            }
        }
    }

    fn emit(&mut self, bytes: &[u8], output: &Option<PathBuf>) -> Outcome<()> {
        match output {
            Some(path) => fs::write(path, bytes)?,
            None => self.stdout.write_all(bytes)?,
        }
        Ok(())
    }

    fn report<R: Report>(&mut self, r: &R, out: &Output) -> Outcome<()> {
        self.emit(&emit_report(r, out.format), &out.output)
    }
}

fn verdict_report(v: SidonVerdict, mode: Mode, set_size: usize) -> SidonCheckReport {
    SidonCheckReport {
        mode,
        set_size,
        sidon: v.is_sidon(),
        witness: match v {
            SidonVerdict::Sidon => None,
            SidonVerdict::Violation(w) => Some(w.members()),
        },
    }
}

fn execute(command: Command, io: &mut Io<'_>) -> Outcome<()> {
    match command {
        Command::Construct {
            construction,
            n,
            sample_size,
            sample_p,
            seed,
            format,
            output,
        } => {
            let mut a = construction.build(n)?;
            if let Some(m) = sample_size {
                a = sample_subset(&a, SampleSpec::FixedSize { m, seed: seed.expect("required") })?;
            } else if let Some(p) = sample_p {
                a = sample_subset(&a, SampleSpec::Independent { p, seed: seed.expect("required") })?;
            }
            let bytes = match format {
                None => a.to_text().into_bytes(),
                Some(f) => emit_report(
                    &SetReport {
                        size: a.len(),
                        elements: a.elements(),
                        provenance: a.provenance(),
                    },
                    f,
                ),
            };
            io.emit(&bytes, &output)
        }
        Command::Energy { set, out } => {
            let a = io.load_set(&set)?;
            io.report(&energy_report(&a)?, &out)
        }
        Command::SidonCheck { set, mode, out } => {
            let a = io.load_set(&set)?;
            let v = sidon_check(&a, mode.mode)?;
            io.report(&verdict_report(v, mode.mode, a.len()), &out)
        }
        Command::SidonMax { set, mode, budget, out } => {
            let a = io.load_set(&set)?;
            io.report(&max_sidon_subset(&a, mode.mode, budget)?, &out)
        }
        Command::SidonGreedy { set, mode, out } => {
            let a = io.load_set(&set)?;
            let g = greedy_sidon(&a, mode.mode)?;
            io.report(
                &GreedyReport {
                    mode: mode.mode,
                    size: g.len(),
                    subset: g.elements().to_vec(),
                },
                &out,
            )
        }
        Command::SidonDelete { set, mode, seed, out } => {
            let a = io.load_set(&set)?;
            io.report(&deletion_sidon(&a, mode.mode, seed)?, &out)
        }
        Command::C4 { set, graph_file, out } => {
            let g = io.load_graph(&set, &graph_file)?;
            let w = find_c4(&g);
            io.report(
                &C4Report {
                    left: g.left().len(),
                    right: g.right().len(),
                    edges: g.edges().len(),
                    c4_free: w.is_none(),
                    witness: w.map(|w| [w.p, w.p2, w.q, w.q2]),
                    labels: w.map(|w| w.labels()),
                },
                &out,
            )
        }
        Command::Capacity { set, p, q, out } => {
            let (p, q) = match (p, q) {
                (Some(p), Some(q)) => (p, q),
                _ => {
                    let (left, right) = io.load_set(&set)?.pq_parts()?;
                    (left.len() as u64, right.len() as u64)
                }
            };
            io.report(
                &CapacityReport {
                    p,
                    q,
                    capacity: c4free_capacity(p, q),
                },
                &out,
            )
        }
        Command::CsAudit { set, graph_file, out } => {
            let g = io.load_graph(&set, &graph_file)?;
            io.report(&cs_chain_audit(&g), &out)
        }
        Command::TExact { set, mode, size_cap, out } => {
            let a = io.load_set(&set)?;
            io.report(&t_exact(&a, mode.mode, size_cap)?, &out)
        }
        Command::TSearch {
            set,
            mode,
            trials,
            seed,
            out,
        } => {
            let a = io.load_set(&set)?;
            io.report(&t_random_search(&a, mode.mode, trials, seed)?, &out)
        }
        Command::BwAudit {
            n,
            c,
            samples,
            seed,
            out,
        } => io.report(&bw_audit(n, c, samples, seed)?, &out),
        Command::Scaling {
            construction,
            params,
            metrics,
            out,
        } => io.report(&run_scaling(construction, &params.0, &metrics)?, &out),
        Command::Klr {
            n,
            a,
            trials,
            seed,
            budget,
            out,
        } => {
            let r: KlrReport = klr_experiment(n, a, trials, seed, budget)?;
            io.report(&r, &out)
        }
        Command::Audit { set, budget, seed, out } => {
            let a = io.load_set(&set)?;
            io.report(&conjecture_audit(&a, budget, seed)?, &out)
        }
    }
}

/// Runs one command line (`argv[0]` is the program name) against the given
/// streams and returns the exit status.
pub fn run_with(argv: &[String], stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = stdout.write_all(text.as_bytes());
            } else {
                let _ = stderr.write_all(text.as_bytes());
            }
            return if code == 0 { 0 } else { 2 };
        }
    };
    let mut io = Io { stdin, stdout };
    match execute(cli.command, &mut io) {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            1
        }
    }
}

/// [`run_with`] on the process streams.
pub fn run_command(argv: &[String]) -> i32 {
    let stdin = std::io::stdin();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdin.lock(), &mut stdout.lock(), &mut stderr.lock())
}

/// Sizes the global worker pool from [`THREADS_ENV`] when set.
pub fn configure_threads() -> std::result::Result<(), String> {
    match std::env::var(THREADS_ENV) {
        Ok(v) => {
            let n: usize = v
                .trim()
                .parse()
                .map_err(|e| format!("{THREADS_ENV}={v:?}: {e}"))?;
            rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global()
                .map_err(|e| e.to_string())
        }
        Err(_) => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str], stdin: &str) -> (i32, String, String) {
        let mut argv = vec!["sidonlab".to_string()];
        argv.extend(args.iter().map(|s| s.to_string()));
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_with(&argv, &mut stdin.as_bytes(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn budgets() {
        assert_eq!(parse_budget("10^7"), Ok(10_000_000));
        assert_eq!(parse_budget("1e7"), Ok(10_000_000));
        assert_eq!(parse_budget("3e2"), Ok(300));
        assert_eq!(parse_budget("12345"), Ok(12345));
        assert!(parse_budget("0").is_err());
        assert!(parse_budget("10^40").is_err());
        assert!(parse_budget("ten").is_err());
    }

    #[test]
    fn fractions_and_params() {
        assert!((parse_fraction("1/3").unwrap() - 1.0 / 3.0).abs() < 1e-15);
        assert_eq!(parse_fraction("0.5"), Ok(0.5));
        assert!(parse_fraction("1/0").is_err());
        assert_eq!(parse_params("20..50:10").unwrap().0, vec![20, 30, 40, 50]);
        assert_eq!(parse_params("4,6,8").unwrap().0, vec![4, 6, 8]);
        assert!(parse_params("5..1").is_err());
    }

    #[test]
    fn construct_pq() {
        let (code, out, _) = run(&["construct", "pq", "--n", "6"], "");
        assert_eq!(code, 0);
        let a = GroundSet::parse_text(&out).unwrap();
        assert_eq!(a.len(), 15);
        assert!(a.labels().is_some());
    }

    #[test]
    fn empty_prime_interval_exits_one() {
        let (code, out, err) = run(&["construct", "pq", "--n", "1"], "");
        assert_eq!(code, 1);
        assert!(out.is_empty());
        assert!(err.contains("empty prime interval"), "{err}");
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run(&["construct", "pq"], "").0, 2);
        assert_eq!(run(&["no-such-command"], "").0, 2);
        assert_eq!(run(&["sidon-delete", "--construction", "interval", "--n", "5", "--mode", "additive"], "").0, 2);
        assert_eq!(run(&["energy"], "").0, 2);
        assert_eq!(run(&["construct", "interval", "--n", "5", "--sample-size", "2"], "").0, 2);
        let (code, out, _) = run(&["--help"], "");
        assert_eq!(code, 0);
        assert!(out.contains("sidon-max"));
    }

    #[test]
    fn sidon_max_from_stdin() {
        let (code, out, _) = run(
            &["sidon-max", "--set-file", "-", "--mode", "additive", "--budget", "10^7"],
            "1\n2\n3\n4\n5\n6\n7\n",
        );
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["size"], 4);
        assert_eq!(v["optimal"], true);
    }

    #[test]
    fn energy_of_pair() {
        let (code, out, _) = run(&["energy", "--set-file", "-"], "1\n2\n");
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["energy_add"], 6);
        let (_, csv, _) = run(&["energy", "--set-file", "-", "--format", "csv"], "1\n2\n");
        assert!(csv.starts_with("key,value\nset_size,2\nenergy_add,6\n"), "{csv}");
    }

    #[test]
    fn c4_and_check_agree_on_pq4() {
        let (_, c4, _) = run(&["c4", "--construction", "pq", "--n", "4"], "");
        let (_, chk, _) = run(&["sidon-check", "--construction", "pq", "--n", "4", "--mode", "multiplicative"], "");
        let c4: serde_json::Value = serde_json::from_str(&c4).unwrap();
        let chk: serde_json::Value = serde_json::from_str(&chk).unwrap();
        assert_eq!(c4["c4_free"], false);
        assert_eq!(chk["sidon"], false);
        assert_eq!(c4["labels"], serde_json::json!([10, 14, 15, 21]));
    }

    #[test]
    fn seeded_commands_repeat_exactly() {
        for args in [
            vec!["sidon-delete", "--construction", "interval", "--n", "60", "--mode", "additive", "--seed", "3"],
            vec!["t-search", "--construction", "interval", "--n", "30", "--mode", "additive", "--seed", "3", "--trials", "8"],
            vec!["construct", "pq", "--n", "10", "--sample-p", "0.3", "--seed", "9"],
        ] {
            let first = run(&args, "");
            assert_eq!(first.0, 0, "{}", first.2);
            assert_eq!(first, run(&args, ""));
        }
    }
}
