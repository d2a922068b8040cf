use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use adasort::census::{
    enumerate_census, enumerate_census_with_worst_case, CensusRow, MAX_CENSUS_N, MAX_WORST_CASE_N,
};
use adasort::measures::profile;
use adasort::{
    blocked_sort, check_sorted_stable_permutation, generate, insertion_sort, natural_merge_sort,
    partition_sort, Error, Family, GenSpec, Meter, PivotStrategy, Profile, Sequence, SortOutcome,
};
use clap::{Args, ValueEnum};

use crate::{CliError, CliResult};

pub fn parse_sizes(text: &str) -> CliResult<Vec<usize>> {
    text.split([',', '-'])
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|e| CliError::usage(format!("bad sorted-type {text:?}: {e}")))
        })
        .collect()
}

pub fn sizes_label(sizes: &[usize]) -> String {
    adasort::census::type_label(sizes)
}

pub fn read_sequence(path: &Path) -> CliResult<Sequence> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::data(format!("cannot read {}: {e}", path.display())))?;
    Sequence::parse(&text).map_err(|e| CliError::data(format!("{}: {e}", path.display())))
}

/// Writes to `path`, or standard output when `path` is `None`.
pub fn emit(path: Option<&Path>, text: &str) -> CliResult {
    match path {
        Some(p) => fs::write(p, text)
            .map_err(|e| CliError::data(format!("cannot write {}: {e}", p.display()))),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::data(format!("cannot write to stdout: {e}"))),
    }
}

fn lib_error(e: Error) -> CliError {
    match e {
        Error::InvalidInput(_) | Error::NotApplicable(_) => CliError::usage(e.to_string()),
        Error::Parse { .. } | Error::Generation(_) => CliError::data(e.to_string()),
    }
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// sorted, reverse, random, displacement, transpose, sorted-type, multiset
    #[arg(long)]
    pub family: String,
    #[arg(long)]
    pub n: Option<usize>,
    /// Displacement bound (displacement family).
    #[arg(long)]
    pub k: Option<usize>,
    /// Block sizes, e.g. 3,2 (sorted-type family).
    #[arg(long = "type")]
    pub sizes: Option<String>,
    /// Distinct key count (multiset family).
    #[arg(long)]
    pub h: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output file; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn need<T>(value: Option<T>, flag: &str, family: Family) -> CliResult<T> {
    value.ok_or_else(|| CliError::usage(format!("--{flag} is required for family {family}")))
}

/// Builds a spec from flag values shared by `gen` and `bench`.
pub fn build_spec(
    family: Family,
    n: Option<usize>,
    k: Option<usize>,
    sizes: Option<Vec<usize>>,
    h: Option<usize>,
    seed: u64,
) -> CliResult<GenSpec> {
    let spec = match family {
        Family::Sorted => GenSpec::Sorted { n: need(n, "n", family)? },
        Family::Reverse => GenSpec::Reverse { n: need(n, "n", family)? },
        Family::Random => GenSpec::Random { n: need(n, "n", family)?, seed },
        Family::Transpose => GenSpec::Transpose { n: need(n, "n", family)? },
        Family::Displacement => GenSpec::Displacement {
            n: need(n, "n", family)?,
            k: need(k, "k", family)?,
            seed,
        },
        Family::Multiset => GenSpec::Multiset {
            n: need(n, "n", family)?,
            h: need(h, "h", family)?,
            seed,
        },
        Family::SortedType => {
            let sizes = need(sizes, "type", family)?;
            let total: usize = sizes.iter().sum();
            if let Some(n) = n.filter(|&n| n != total) {
                return Err(CliError::usage(format!("--type sums to {total}, but --n is {n}")));
            }
            GenSpec::SortedType { sizes, seed }
        }
    };
    spec.validate().map_err(lib_error)?;
    Ok(spec)
}

pub fn gen(args: GenArgs) -> CliResult {
    let family: Family = args.family.parse().map_err(lib_error)?;
    let sizes = args.sizes.as_deref().map(parse_sizes).transpose()?;
    let spec = build_spec(family, args.n, args.k, sizes, args.h, args.seed)?;
    let seq = generate(&spec).map_err(lib_error)?;
    emit(args.out.as_deref(), &seq.to_text())?;
    if args.out.is_some() {
        println!("n={}", seq.len());
        println!("family={family}");
    } else {
        eprintln!("n={} family={family}", seq.len());
    }
    Ok(())
}

#[derive(Debug, Args)]
pub struct MeasureArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Also print a CSV header and row.
    #[arg(long)]
    pub csv: bool,
}

pub const PROFILE_HEADER: &str = "n,k,sizes,entropy_H,bound_B,inversions,displacement,runs,distinct";

pub fn profile_csv_row(p: &Profile) -> String {
    format!(
        "{},{},{},{:.6},{:.4},{},{},{},{}",
        p.n,
        p.k,
        sizes_label(&p.sizes),
        p.entropy,
        p.bound,
        p.inversions,
        p.displacement,
        p.runs,
        p.distinct
    )
}

pub fn measure(args: MeasureArgs) -> CliResult {
    let seq = read_sequence(&args.input)?;
    let p = profile(&seq);
    let mut out = String::new();
    writeln!(out, "n={}", p.n).unwrap();
    writeln!(out, "k={}", p.k).unwrap();
    writeln!(out, "sizes={}", sizes_label(&p.sizes)).unwrap();
    writeln!(out, "H={}", p.entropy).unwrap();
    writeln!(out, "B={}", p.bound).unwrap();
    writeln!(out, "I={}", p.inversions).unwrap();
    writeln!(out, "Dis={}", p.displacement).unwrap();
    writeln!(out, "R={}", p.runs).unwrap();
    writeln!(out, "h={}", p.distinct).unwrap();
    if args.csv {
        writeln!(out, "{PROFILE_HEADER}").unwrap();
        writeln!(out, "{}", profile_csv_row(&p)).unwrap();
    }
    emit(None, &out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Algo {
    Psort,
    Blocked,
    Insertion,
    Natmerge,
}

impl Algo {
    pub fn name(self) -> &'static str {
        match self {
            Algo::Psort => "psort",
            Algo::Blocked => "blocked",
            Algo::Insertion => "insertion",
            Algo::Natmerge => "natmerge",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Pivot {
    Median,
    Randmid,
    Fr,
}

impl Pivot {
    pub fn strategy(self, seed: u64) -> PivotStrategy {
        match self {
            Pivot::Median => PivotStrategy::ExactMedian,
            Pivot::Randmid => PivotStrategy::RandomMiddleHalf { seed },
            Pivot::Fr => PivotStrategy::FloydRivest { seed },
        }
    }
}

/// Runs one sorter; `k` is required for the blocked sort.
pub fn run_algo(
    seq: &Sequence,
    algo: Algo,
    pivot: Pivot,
    seed: u64,
    k: Option<usize>,
) -> CliResult<SortOutcome> {
    let mut m = Meter::new();
    Ok(match algo {
        Algo::Psort => partition_sort(seq, pivot.strategy(seed), &mut m),
        Algo::Blocked => {
            let k = k.ok_or_else(|| CliError::usage("--k is required for --algo blocked"))?;
            blocked_sort(seq, k, &mut m).map_err(lib_error)?
        }
        Algo::Insertion => insertion_sort(seq, &mut m),
        Algo::Natmerge => natural_merge_sort(seq, &mut m),
    })
}

#[derive(Debug, Args)]
pub struct SortArgs {
    #[arg(long, value_enum)]
    pub algo: Algo,
    /// Pivot strategy for psort.
    #[arg(long, value_enum, default_value = "median")]
    pub pivot: Pivot,
    /// Seed for randomized pivot strategies.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Block size for the blocked sort.
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Write the sorted keys here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn sort(args: SortArgs) -> CliResult {
    let seq = read_sequence(&args.input)?;
    let outcome = run_algo(&seq, args.algo, args.pivot, args.seed, args.k)?;
    let verdict = check_sorted_stable_permutation(&seq, &outcome.output);
    println!("algo={}", args.algo.name());
    if args.algo == Algo::Psort {
        println!("pivot={}", args.pivot.strategy(args.seed).name());
    }
    println!("n={}", seq.len());
    println!("comparisons={}", outcome.comparisons);
    println!("moves={}", outcome.moves);
    println!("retries={}", outcome.pivot_retries);
    println!("depth={}", outcome.max_recursion_depth);
    println!("sorted={}", outcome.sorted);
    println!("verified={}", verdict.is_ok());
    if let Some(path) = &args.out {
        emit(Some(path), &outcome.output.to_text())?;
    }
    verdict.map_err(|e| CliError::verification(format!("output failed verification: {e}")))
}

#[allow(clippy::enum_variant_names)]
#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum WorstCase {
    #[value(name = "psort-median")]
    PsortMedian,
    #[value(name = "psort-randmid")]
    PsortRandmid,
    #[value(name = "psort-fr")]
    PsortFr,
}

#[derive(Debug, Args)]
pub struct CensusArgs {
    #[arg(long)]
    pub n: usize,
    /// Add the worst partition-sort comparison count per type (n <= 8).
    #[arg(long, value_enum)]
    pub worstcase: Option<WorstCase>,
    /// Seed held fixed across the class for randomized strategies.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn census_csv(rows: &[CensusRow], with_worst: bool) -> String {
    let mut out = String::from("type,nu,eq1_rhs,applicable,eq1_holds,info_bits");
    if with_worst {
        out.push_str(",worst_case_comparisons");
    }
    out.push('\n');
    for r in rows {
        let (rhs, applicable, holds) = match (r.eq1_rhs, r.eq1_holds()) {
            (Some(v), Some(h)) => (format!("{v:.6}"), "true", if h { "pass" } else { "fail" }),
            _ => (String::new(), "false", ""),
        };
        write!(out, "{},{},{rhs},{applicable},{holds},{:.6}", r.type_label(), r.nu, r.info_bits)
            .unwrap();
        if let Some(w) = r.worst_case_comparisons.filter(|_| with_worst) {
            write!(out, ",{w}").unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn census(args: CensusArgs) -> CliResult {
    let rows = match args.worstcase {
        None => {
            if !(1..=MAX_CENSUS_N).contains(&args.n) {
                return Err(CliError::usage(format!("--n must be in 1..={MAX_CENSUS_N}")));
            }
            enumerate_census(args.n).map_err(lib_error)?
        }
        Some(which) => {
            if !(1..=MAX_WORST_CASE_N).contains(&args.n) {
                return Err(CliError::usage(format!(
                    "--n must be in 1..={MAX_WORST_CASE_N} with --worstcase"
                )));
            }
            let strategy = match which {
                WorstCase::PsortMedian => PivotStrategy::ExactMedian,
                WorstCase::PsortRandmid => PivotStrategy::RandomMiddleHalf { seed: args.seed },
                WorstCase::PsortFr => PivotStrategy::FloydRivest { seed: args.seed },
            };
            enumerate_census_with_worst_case(args.n, strategy).map_err(lib_error)?
        }
    };
    emit(args.out.as_deref(), &census_csv(&rows, args.worstcase.is_some()))?;
    let violations: Vec<String> = rows
        .iter()
        .filter(|r| r.worst_case_comparisons.is_some_and(|w| w < r.decision_tree_bound()))
        .map(CensusRow::type_label)
        .collect();
    if !violations.is_empty() {
        return Err(CliError::verification(format!(
            "worst case below ceil(log2 nu) for {}",
            violations.join(" ")
        )));
    }
    Ok(())
}
