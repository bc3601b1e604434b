//! `lcmd` subcommands.
//!
//! Exit codes: 0 on success (or when every comparison matches), 1 on a
//! mismatch, 2 on usage or domain errors.

use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lcmd_core::{
    collection_witness, count_maximal_collections, factor, incidence, kronecker, lcmd_formula,
    lcmd_formula_2x2, lcmd_formula_with, lcmd_small, path_witness, BigInt, BigUint, BruteOptions,
    BrutePlan, Collection, CollectionMode, FormulaValue, IntMatrix, KronLayout, Multiset,
    MultisetPair, SimpleGraph, SubmatrixSelector, DEFAULT_TRIAL_BOUND,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::json::{
    CompareRow, Components, ComputeOutput, FormulaOutput, SelectorJson, WitnessOutput,
};
use crate::parallel::lcmd_brute_parallel;
use crate::source::{self, SourceError};
use crate::{tables, THREADS_ENV};

/// Brute force refuses jobs with more selectors than C(30, 10) unless forced.
pub const BRUTE_CEILING: u128 = 30_045_015;

/// Maximal-collection count above which `formula` warns.
pub const COLLECTION_WARN: u128 = 10_000_000;

#[derive(Debug, Parser)]
#[command(
    name = "lcmd",
    version,
    about = "lcm of all subdeterminants of A ⊗ D(K_n)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate the closed formula for a two-column A.
    Formula(FormulaArgs),
    /// Enumerate every square submatrix.
    Brute(BruteArgs),
    /// Pick an engine and print value, factorisation and timing.
    Compute(ComputeArgs),
    /// Run formula and brute force side by side.
    Compare(CompareArgs),
    /// Build an extremal submatrix and check its determinant.
    Witness(WitnessArgs),
    /// Regenerate the bishop, queen and nightrider reference values.
    #[command(name = "paper-tables")]
    Tables(TablesArgs),
}

#[derive(Debug, Args)]
pub struct FormulaArgs {
    /// MB, MQ, MQT, MN, inline [[..],..] or a JSON file.
    #[arg(long)]
    pub matrix: String,
    #[arg(long)]
    pub n: usize,
    /// Also visit non-maximal collections and require the same value.
    #[arg(long)]
    pub all_collections: bool,
    /// Use the 2×2 product form.
    #[arg(long = "corollary-2x2")]
    pub corollary_2x2: bool,
}

#[derive(Debug, Args)]
pub struct ParallelArgs {
    /// Worker threads (default: all cores).
    #[arg(long, env = THREADS_ENV)]
    pub threads: Option<usize>,
    /// Selectors per work unit.
    #[arg(long, default_value_t = 4096)]
    pub chunk_size: usize,
}

#[derive(Debug, Args)]
pub struct BruteArgs {
    /// MB, MQ, MQT, MN, inline [[..],..] or a JSON file.
    #[arg(long)]
    pub matrix: String,
    /// Multiply by the incidence matrix of Kn or a graph JSON file first.
    #[arg(long)]
    pub kron: Option<String>,
    /// Skip minors above this order.
    #[arg(long)]
    pub max_order: Option<usize>,
    /// Disable rank and block pruning.
    #[arg(long)]
    pub no_prune: bool,
    /// Run even above the size ceiling.
    #[arg(long)]
    pub force: bool,
    #[command(flatten)]
    pub parallel: ParallelArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    Formula,
    Brute,
    Auto,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    /// MB, MQ, MQT, MN, inline [[..],..] or a JSON file.
    #[arg(long)]
    pub matrix: String,
    #[arg(long, value_enum, default_value_t = Engine::Auto)]
    pub engine: Engine,
    /// Number of vertices of K_n.
    #[arg(long)]
    pub n: Option<usize>,
    /// Kn or graph JSON; `--kron Kn` is the same as `--n n`.
    #[arg(long)]
    pub kron: Option<String>,
    #[arg(long)]
    pub force: bool,
    #[command(flatten)]
    pub parallel: ParallelArgs,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    /// Matrix to compare; omit when using --random.
    #[arg(long, required_unless_present = "random")]
    pub matrix: Option<String>,
    /// Inclusive range such as `2..4`, or a single value.
    #[arg(long, default_value = "2..4")]
    pub n: String,
    /// Compare this many random non-zero m×2 matrices instead.
    #[arg(long)]
    pub random: Option<usize>,
    #[arg(long, default_value_t = 2)]
    pub rows: usize,
    /// Random entries are drawn from [-max-entry, max-entry].
    #[arg(long, default_value_t = 3)]
    pub max_entry: i64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub force: bool,
    #[arg(long)]
    pub json: bool,
    #[command(flatten)]
    pub parallel: ParallelArgs,
}

#[derive(Debug, Args)]
pub struct WitnessArgs {
    /// MB, MQ, MQT, MN, inline [[..],..] or a JSON file.
    #[arg(long)]
    pub matrix: String,
    #[arg(long)]
    pub n: usize,
    /// Pair `I;J`, e.g. `1,1;2,4`. Repeat for a multi-pair collection.
    #[arg(long, conflicts_with = "path")]
    pub pair: Vec<String>,
    /// Path witness for rows `i,j`.
    #[arg(long)]
    pub path: Option<String>,
}

#[derive(Debug, Args)]
pub struct TablesArgs {
    #[arg(long, env = THREADS_ENV)]
    pub threads: Option<usize>,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Source(#[from] SourceError),
    #[error(transparent)]
    Core(#[from] lcmd_core::Error),
    #[error(
        "refusing brute force: {count} selectors exceed the ceiling of {BRUTE_CEILING}; pass --force to run anyway"
    )]
    Infeasible { count: u128 },
    #[error("output error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        2
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    Mismatch,
}

impl Outcome {
    pub fn exit_code(self) -> u8 {
        match self {
            Outcome::Success => 0,
            Outcome::Mismatch => 1,
        }
    }
}

pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Formula(a) => cmd_formula(a, out, err),
        Command::Brute(a) => cmd_brute(a, out, err),
        Command::Compute(a) => cmd_compute(a, out),
        Command::Compare(a) => cmd_compare(a, out),
        Command::Witness(a) => cmd_witness(a, out),
        Command::Tables(a) => cmd_tables(a, out),
    }
}

fn factored(v: &BigUint, base: Option<&BigUint>) -> String {
    let f = factor(v, DEFAULT_TRIAL_BOUND).expect("lcm values are positive");
    match base {
        Some(b) => f.render_with_base(b),
        None => f.render(),
    }
}

fn print_json<T: serde::Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    let text = serde_json::to_string(value).expect("serialisable");
    writeln!(out, "{text}")?;
    Ok(())
}

fn formula_output(a: &IntMatrix, v: &FormulaValue) -> Result<FormulaOutput, CliError> {
    let base = lcmd_small(a)?;
    Ok(FormulaOutput {
        value: v.value.to_string(),
        factored: factored(&v.value, Some(&base)),
        components: Components {
            lcmd_a_pow: v.lcmd_a_pow.to_string(),
            collection_lcm: v.collection_lcm.to_string(),
        },
    })
}

fn cmd_formula(
    a: FormulaArgs,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<Outcome, CliError> {
    let m = source::load_matrix(&a.matrix)?;
    let count = count_maximal_collections(m.rows(), a.n);
    if count > COLLECTION_WARN {
        writeln!(err, "warning: {count} maximal collections to enumerate")?;
    }
    let v = if a.corollary_2x2 {
        lcmd_formula_2x2(&m, a.n)?
    } else {
        lcmd_formula(&m, a.n)?
    };
    let mut outcome = Outcome::Success;
    if a.all_collections {
        let all = lcmd_formula_with(&m, a.n, CollectionMode::All)?;
        if all.value != v.value {
            writeln!(
                err,
                "mismatch: maximal {} vs all collections {}",
                v.value, all.value
            )?;
            outcome = Outcome::Mismatch;
        }
    }
    print_json(out, &formula_output(&m, &v)?)?;
    Ok(outcome)
}

struct BruteJob {
    matrix: IntMatrix,
    layout: Option<KronLayout>,
}

fn kron_job(a: &IntMatrix, g: &SimpleGraph) -> BruteJob {
    let layout = KronLayout {
        a_rows: a.rows(),
        a_cols: a.cols(),
        graph_n: g.vertex_count(),
        edges: g.edge_count(),
    };
    BruteJob {
        matrix: kronecker(a, &incidence(g)),
        layout: Some(layout),
    }
}

fn run_brute(
    job: &BruteJob,
    opts: BruteOptions,
    parallel: &ParallelArgs,
    force: bool,
) -> Result<BigUint, CliError> {
    let count = BrutePlan::new(&job.matrix, opts)?.total_selectors();
    if count > BRUTE_CEILING && !force {
        return Err(CliError::Infeasible { count });
    }
    Ok(lcmd_brute_parallel(&job.matrix, opts, parallel.threads)?)
}

fn cmd_brute(a: BruteArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<Outcome, CliError> {
    let m = source::load_matrix(&a.matrix)?;
    let job = match &a.kron {
        Some(g) => kron_job(&m, &source::load_graph(g)?),
        None => BruteJob {
            matrix: m,
            layout: None,
        },
    };
    if job.matrix.is_zero() {
        writeln!(err, "warning: matrix is identically zero; lcmd taken as 1")?;
    }
    let opts = BruteOptions {
        max_order: a.max_order,
        prune_rank: !a.no_prune,
        chunk_size: a.parallel.chunk_size,
        layout: job.layout,
    };
    let start = Instant::now();
    let v = run_brute(&job, opts, &a.parallel, a.force)?;
    print_json(
        out,
        &ComputeOutput {
            value: v.to_string(),
            factored: factored(&v, None),
            engine: "brute".into(),
            timing_ms: start.elapsed().as_millis() as u64,
        },
    )?;
    Ok(Outcome::Success)
}

fn cmd_compute(a: ComputeArgs, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let m = source::load_matrix(&a.matrix)?;
    if m.is_zero() {
        return Err(lcmd_core::Error::Domain("matrix is identically zero".into()).into());
    }
    let graph = match (&a.kron, a.n) {
        (Some(_), Some(_)) => return Err(CliError::Usage("give either --n or --kron".into())),
        (Some(g), None) => Some(source::load_graph(g)?),
        (None, Some(n)) => Some(lcmd_core::complete_graph(n)?),
        (None, None) => None,
    };
    let complete_n = graph.as_ref().and_then(|g| {
        let n = g.vertex_count();
        (g.edge_count() == n * (n - 1) / 2).then_some(n)
    });
    let engine = match a.engine {
        Engine::Auto if m.cols() == 2 && complete_n.is_some() => Engine::Formula,
        Engine::Auto => Engine::Brute,
        e => e,
    };
    let start = Instant::now();
    let (value, base) = match engine {
        Engine::Formula => {
            let n = complete_n
                .ok_or_else(|| CliError::Usage("formula engine needs --n or --kron Kn".into()))?;
            (lcmd_formula(&m, n)?.value, Some(lcmd_small(&m)?))
        }
        _ => {
            let job = match &graph {
                Some(g) => kron_job(&m, g),
                None => BruteJob {
                    matrix: m,
                    layout: None,
                },
            };
            let opts = BruteOptions {
                chunk_size: a.parallel.chunk_size,
                layout: job.layout,
                ..BruteOptions::default()
            };
            (run_brute(&job, opts, &a.parallel, a.force)?, None)
        }
    };
    print_json(
        out,
        &ComputeOutput {
            value: value.to_string(),
            factored: factored(&value, base.as_ref().filter(|b| **b != BigUint::from(1u32))),
            engine: match engine {
                Engine::Formula => "formula",
                _ => "brute",
            }
            .into(),
            timing_ms: start.elapsed().as_millis() as u64,
        },
    )?;
    Ok(Outcome::Success)
}

/// `a..b` (inclusive), `a..=b`, or a single number.
pub fn parse_range(s: &str) -> Result<Vec<usize>, CliError> {
    let bad = || CliError::Usage(format!("bad range {s:?}"));
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (parse(lo)?, parse(hi.trim_start_matches('='))?),
        None => {
            let v = parse(s)?;
            (v, v)
        }
    };
    if lo == 0 || lo > hi {
        return Err(bad());
    }
    Ok((lo..=hi).collect())
}

/// Random non-zero `rows × 2` matrices with entries in `[-max, max]`.
pub fn random_matrices(count: usize, rows: usize, max: i64, seed: u64) -> Vec<IntMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let m = IntMatrix::from_fn(rows, 2, |_, _| BigInt::from(rng.gen_range(-max..=max)));
        if !m.is_zero() {
            out.push(m);
        }
    }
    out
}

fn cmd_compare(a: CompareArgs, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let ns = parse_range(&a.n)?;
    let matrices: Vec<(String, IntMatrix)> = match (&a.matrix, a.random) {
        (Some(spec), _) => vec![(spec.clone(), source::load_matrix(spec)?)],
        (None, Some(k)) => {
            if a.rows == 0 || a.max_entry < 1 {
                return Err(CliError::Usage(
                    "--rows and --max-entry must be positive".into(),
                ));
            }
            random_matrices(k, a.rows, a.max_entry, a.seed)
                .into_iter()
                .map(|m| (compact(&m), m))
                .collect()
        }
        (None, None) => return Err(CliError::Usage("need --matrix or --random".into())),
    };
    let mut rows = Vec::new();
    for (label, m) in &matrices {
        for &n in &ns {
            let formula = lcmd_formula(m, n)?.value;
            let g = lcmd_core::complete_graph(n)?;
            let job = kron_job(m, &g);
            let opts = BruteOptions {
                chunk_size: a.parallel.chunk_size,
                layout: job.layout,
                ..BruteOptions::default()
            };
            let brute = run_brute(&job, opts, &a.parallel, a.force)?;
            rows.push(CompareRow {
                label: label.clone(),
                n,
                matches: formula == brute,
                formula: formula.to_string(),
                brute: brute.to_string(),
            });
        }
    }
    if a.json {
        print_json(out, &rows)?;
    } else {
        for r in &rows {
            writeln!(
                out,
                "{:<24} n={:<2} formula={:<16} brute={:<16} {}",
                r.label,
                r.n,
                r.formula,
                r.brute,
                if r.matches { "match" } else { "MISMATCH" }
            )?;
        }
    }
    Ok(if rows.iter().all(|r| r.matches) {
        Outcome::Success
    } else {
        Outcome::Mismatch
    })
}

fn compact(m: &IntMatrix) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|i| {
            let r: Vec<String> = m.row(i).iter().map(ToString::to_string).collect();
            format!("[{}]", r.join(","))
        })
        .collect();
    format!("[{}]", rows.join(","))
}

fn parse_indices(s: &str) -> Result<Vec<usize>, CliError> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Usage(format!("bad index list {s:?}")))
        })
        .collect()
}

/// `"1,1;2,4"` → `({1,1}, {2,4})`.
pub fn parse_pair(s: &str) -> Result<MultisetPair, CliError> {
    let (i, j) = s
        .split_once(';')
        .ok_or_else(|| CliError::Usage(format!("pair {s:?} must look like I;J")))?;
    Ok(MultisetPair::new(
        Multiset::new(parse_indices(i)?),
        Multiset::new(parse_indices(j)?),
    )?)
}

fn cmd_witness(a: WitnessArgs, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let m = source::load_matrix(&a.matrix)?;
    let (selector, predicted): (SubmatrixSelector, BigInt) = match &a.path {
        Some(p) => {
            let ij = parse_indices(p)?;
            let [i, j] = ij[..] else {
                return Err(CliError::Usage("--path takes i,j".into()));
            };
            let s = path_witness(&m, a.n, i, j)?;
            let d = m.get(i - 1, 0) * m.get(j - 1, 1) - m.get(i - 1, 1) * m.get(j - 1, 0);
            (s, d.pow((a.n - 1) as u32))
        }
        None => {
            if a.pair.is_empty() {
                return Err(CliError::Usage("give --pair I;J or --path i,j".into()));
            }
            let pairs = a
                .pair
                .iter()
                .map(|p| parse_pair(p))
                .collect::<Result<Vec<_>, _>>()?;
            let k = Collection::new(pairs);
            let s = collection_witness(&m, a.n, &k)?;
            (s, k.product(&m)?)
        }
    };
    let product = kronecker(&m, &incidence(&lcmd_core::complete_graph(a.n)?));
    let computed = selector.det(&product)?;
    let matches = computed.magnitude() == predicted.magnitude();
    print_json(
        out,
        &WitnessOutput {
            selector: SelectorJson {
                rows: selector.rows().iter().map(|r| r + 1).collect(),
                cols: selector.cols().iter().map(|c| c + 1).collect(),
            },
            predicted: predicted.to_string(),
            computed: computed.to_string(),
            matches,
        },
    )?;
    Ok(if matches {
        Outcome::Success
    } else {
        Outcome::Mismatch
    })
}

fn cmd_tables(a: TablesArgs, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let report = tables::generate(a.threads);
    for line in &report.lines {
        writeln!(out, "{line}")?;
    }
    if report.passed() {
        writeln!(out, "all values match")?;
        Ok(Outcome::Success)
    } else {
        writeln!(out, "MISMATCH against reference values:")?;
        for d in report.diff() {
            writeln!(out, "{d}")?;
        }
        Ok(Outcome::Mismatch)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("2..4").unwrap(), vec![2, 3, 4]);
        assert_eq!(parse_range("2..=3").unwrap(), vec![2, 3]);
        assert_eq!(parse_range("5").unwrap(), vec![5]);
        assert!(parse_range("4..2").is_err());
        assert!(parse_range("0..2").is_err());
        assert!(parse_range("x").is_err());
    }

    #[test]
    fn pairs() {
        let p = parse_pair("2,4;1,1").unwrap();
        assert_eq!(p.first().elements(), &[1, 1]);
        assert_eq!(p.second().elements(), &[2, 4]);
        assert!(parse_pair("1,2").is_err());
        assert!(parse_pair("1;1").is_err());
    }

    #[test]
    fn random_suite_is_reproducible() {
        let a = random_matrices(5, 3, 3, 42);
        let b = random_matrices(5, 3, 3, 42);
        assert_eq!(a, b);
        assert!(a.iter().all(|m| !m.is_zero() && m.rows() == 3));
    }
}
