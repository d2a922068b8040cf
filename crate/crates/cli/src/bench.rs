//! Benchmark sweeps: the cross product of families, sizes, algorithms,
//! pivots and trials, one CSV row per trial.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use adasort::measures::{decompose_maximal, entropy, theorem_bound};
use adasort::{check_sorted_stable_permutation, generate, Family};
use clap::Args;
use rayon::prelude::*;

use crate::commands::{build_spec, emit, parse_sizes, run_algo, sizes_label, Algo, Pivot};
use crate::{CliError, CliResult};

pub const BENCH_HEADER: &str =
    "family,n,param,algo,pivot,seed,comparisons,moves,bound_B,entropy_H,ratio,elapsed_ns";

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Comma-separated families.
    #[arg(long, value_delimiter = ',', required = true)]
    pub family: Vec<String>,
    /// Comma-separated sizes.
    #[arg(long, value_delimiter = ',', required = true)]
    pub n: Vec<usize>,
    /// Comma-separated algorithms.
    #[arg(long, value_enum, value_delimiter = ',', default_value = "psort")]
    pub algo: Vec<Algo>,
    /// Comma-separated pivot strategies (psort only).
    #[arg(long, value_enum, value_delimiter = ',', default_value = "median")]
    pub pivot: Vec<Pivot>,
    #[arg(long, default_value_t = 1)]
    pub trials: u64,
    /// Trial i uses seed base + i for both input and pivot randomness.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Displacement bound for the displacement family and block size for
    /// the blocked sort.
    #[arg(long)]
    pub k: Option<usize>,
    /// Distinct keys for the multiset family.
    #[arg(long)]
    pub h: Option<usize>,
    /// Explicit block sizes for the sorted-type family; must sum to n.
    #[arg(long = "type")]
    pub sizes: Option<String>,
    /// Uniform block count for the sorted-type family.
    #[arg(long)]
    pub blocks: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

struct Job {
    family: Family,
    n: usize,
    algo: Algo,
    pivot: Option<Pivot>,
    seed: u64,
}

struct Row {
    key: (String, usize, &'static str, &'static str, u64),
    line: String,
}

/// `n` split into `blocks` near-equal parts, larger parts first.
fn uniform_sizes(n: usize, blocks: usize) -> CliResult<Vec<usize>> {
    if blocks == 0 || blocks > n {
        return Err(CliError::usage(format!("--blocks {blocks} outside 1..={n}")));
    }
    Ok((0..blocks).map(|i| n / blocks + usize::from(i < n % blocks)).collect())
}

fn param_for(args: &BenchArgs, family: Family, sizes: Option<&[usize]>) -> String {
    match family {
        Family::Displacement => args.k.map_or("-".into(), |k| k.to_string()),
        Family::Multiset => args.h.map_or("-".into(), |h| h.to_string()),
        Family::SortedType => sizes.map_or("-".into(), sizes_label),
        _ => "-".into(),
    }
}

fn run_job(args: &BenchArgs, explicit: Option<&[usize]>, job: &Job) -> CliResult<Row> {
    let sizes = match (job.family, explicit, args.blocks) {
        (Family::SortedType, Some(s), _) => Some(s.to_vec()),
        (Family::SortedType, None, Some(b)) => Some(uniform_sizes(job.n, b)?),
        (Family::SortedType, None, None) => {
            return Err(CliError::usage("sorted-type needs --type or --blocks"))
        }
        _ => None,
    };
    let spec = build_spec(job.family, Some(job.n), args.k, sizes.clone(), args.h, job.seed)?;
    let seq = generate(&spec).map_err(|e| CliError::data(e.to_string()))?;
    let d = decompose_maximal(&seq);
    let bound = theorem_bound(&d.sizes, job.n).map_err(|e| CliError::data(e.to_string()))?;
    let h = entropy(&d.sizes, job.n).map_err(|e| CliError::data(e.to_string()))?;

    let started = Instant::now();
    let outcome = run_algo(&seq, job.algo, job.pivot.unwrap_or(Pivot::Median), job.seed, args.k)?;
    let elapsed = started.elapsed().as_nanos();
    check_sorted_stable_permutation(&seq, &outcome.output).map_err(|e| {
        CliError::verification(format!(
            "{} on {} n={} seed={}: {e}",
            job.algo.name(),
            job.family,
            job.n,
            job.seed
        ))
    })?;

    let pivot = match job.pivot {
        Some(p) => p.strategy(job.seed).name(),
        None => "-",
    };
    let mut line = String::new();
    write!(
        line,
        "{},{},{},{},{},{},{},{},{:.4},{:.6},{:.6},{}",
        job.family,
        job.n,
        param_for(args, job.family, sizes.as_deref()),
        job.algo.name(),
        pivot,
        job.seed,
        outcome.comparisons,
        outcome.moves,
        bound,
        h,
        outcome.comparisons as f64 / bound,
        elapsed
    )
    .unwrap();
    Ok(Row {
        key: (job.family.to_string(), job.n, job.algo.name(), pivot, job.seed),
        line,
    })
}

pub fn run(args: BenchArgs) -> CliResult {
    let families = args
        .family
        .iter()
        .map(|f| f.parse::<Family>().map_err(|e| CliError::usage(e.to_string())))
        .collect::<CliResult<Vec<_>>>()?;
    if let Some(&n) = args.n.iter().find(|&&n| n < 2) {
        return Err(CliError::usage(format!("bench needs n >= 2, got {n}")));
    }
    if args.trials == 0 {
        return Err(CliError::usage("--trials must be at least 1"));
    }
    let explicit = args.sizes.as_deref().map(parse_sizes).transpose()?;

    let mut jobs = Vec::new();
    for &family in &families {
        for &n in &args.n {
            for &algo in &args.algo {
                let pivots: Vec<Option<Pivot>> = if algo == Algo::Psort {
                    args.pivot.iter().copied().map(Some).collect()
                } else {
                    vec![None]
                };
                for pivot in pivots {
                    for t in 0..args.trials {
                        jobs.push(Job { family, n, algo, pivot, seed: args.seed + t });
                    }
                }
            }
        }
    }

    let mut rows = jobs
        .par_iter()
        .map(|job| run_job(&args, explicit.as_deref(), job))
        .collect::<CliResult<Vec<Row>>>()?;
    rows.sort_by(|a, b| a.key.cmp(&b.key));

    let mut out = String::with_capacity(64 * (rows.len() + 1));
    out.push_str(BENCH_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&row.line);
        out.push('\n');
    }
    emit(args.out.as_deref(), &out)
}
