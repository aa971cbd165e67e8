use std::fmt;
use std::fs;
use std::path::Path;
use std::time::{Duration, Instant};

use maxblank_core::format::{MemberRecord, RegionReport, StatsRecord, System, SystemFile};
use maxblank_core::oracle::{self, check_joinblank_structure, enumerate_solutions, StructureReport};
use maxblank_core::{greatest_solution, solve_with, verify, Algebra, Element, Error, SolveOptions, Vector};
use rand::rngs::StdRng;
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};

use crate::args::{Cli, Command, GlobalArgs};

pub const EXIT_PARSE: u8 = 2;
pub const EXIT_INVALID: u8 = 3;
pub const EXIT_BUDGET: u8 = 4;
pub const EXIT_DISAGREE: u8 = 5;
pub const EXIT_NOT_FINITE: u8 = 6;

#[derive(Debug)]
pub enum Failure {
    Core(Error),
    Input(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Input(_) | Failure::Core(Error::Parse(_)) => EXIT_PARSE,
            Failure::Core(
                Error::AlgebraMismatch { .. } | Error::DimensionMismatch { .. } | Error::NotTotallyOrdered(_),
            ) => EXIT_INVALID,
            Failure::Core(Error::TermBudgetExceeded { .. } | Error::EnumerationTooLarge { .. }) => EXIT_BUDGET,
            Failure::Core(Error::CarrierNotFinite(_)) => EXIT_NOT_FINITE,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Core(e) => e.fmt(f),
            Failure::Input(msg) => f.write_str(msg),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

pub fn run(cli: &Cli) -> Result<u8, Failure> {
    let g = &cli.global;
    match &cli.command {
        Command::Solve { input } => cmd_solve(g, input),
        Command::Check { input, vector } => cmd_check(g, input, vector),
        Command::Oracle { input } => cmd_oracle(g, input),
        Command::Bench {
            rows,
            cols,
            count,
            seed,
        } => cmd_bench(g, *rows, *cols, *count, *seed),
    }
}

fn load(g: &GlobalArgs, path: &Path) -> Result<System, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
    let file: SystemFile = serde_json::from_str(&text)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Ok(file.parse(g.algebra)?)
}

fn options(g: &GlobalArgs) -> SolveOptions {
    SolveOptions {
        canonicalize: !g.raw,
        budget: g.budget,
        threads: usize::from(g.threads),
    }
}

fn cmd_solve(g: &GlobalArgs, input: &Path) -> Result<u8, Failure> {
    let sys = load(g, input)?;
    let start = Instant::now();
    let solution = solve_with(&sys.a, &sys.w, &options(g))?;
    let elapsed = start.elapsed();
    let greatest = greatest_solution(&sys.a, &sys.w)?;
    let report = RegionReport {
        system: SystemFile::from_system(&sys.a, &sys.w),
        members: solution
            .region
            .members()
            .iter()
            .map(MemberRecord::from_interval)
            .collect(),
        greatest: greatest.map(|x| x.literals()),
        canonical: !g.raw,
        stats: (!g.deterministic).then(|| StatsRecord::new(&solution.stats, millis(elapsed))),
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("report serializes")
    );
    Ok(0)
}

fn parse_vector_literal(algebra: Algebra, text: &str) -> Result<Vector, Failure> {
    let t = text.trim();
    let literals: Vec<String> = if t.starts_with('[') {
        serde_json::from_str(t).map_err(|e| Failure::Input(format!("vector literal: {e}")))?
    } else {
        t.split(',').map(|s| s.trim().to_owned()).collect()
    };
    Ok(Vector::parse(algebra, &literals)?)
}

fn cmd_check(g: &GlobalArgs, input: &Path, vector: &str) -> Result<u8, Failure> {
    let sys = load(g, input)?;
    let v = parse_vector_literal(sys.algebra, vector)?;
    let satisfies = verify(&sys.a, &sys.w, &v)?;
    let region = solve_with(&sys.a, &sys.w, &options(g))?.region;
    let contained = region.contains(&v)?;
    println!("vector: {v}");
    println!("satisfies Av=w: {satisfies}");
    println!("contained in computed region: {contained}");
    Ok(if satisfies == contained { 0 } else { EXIT_DISAGREE })
}

fn cmd_oracle(g: &GlobalArgs, input: &Path) -> Result<u8, Failure> {
    let sys = load(g, input)?;
    let alg = sys.algebra;
    if !alg.is_finite() {
        return Err(Error::CarrierNotFinite(alg).into());
    }
    let x = enumerate_solutions(&sys.a, &sys.w)?;
    println!("algebra: {alg}");
    println!("enumerated solutions: {}", x.len());

    let mut code = 0;
    if alg.is_totally_ordered() {
        let region = solve_with(&sys.a, &sys.w, &options(g))?.region;
        println!("region members: {}", region.len());
        let all = oracle::all_vectors(alg, sys.a.cols(), oracle::DEFAULT_ENUMERATION_LIMIT)?;
        match oracle::first_disagreement(&region, &sys.a, &sys.w, all)? {
            None => println!("agreement: exact"),
            Some(v) => {
                println!("agreement: no");
                println!(
                    "counterexample: {v} (solves: {}, in region: {})",
                    verify(&sys.a, &sys.w, &v)?,
                    region.contains(&v)?
                );
                code = EXIT_DISAGREE;
            }
        }
    } else {
        println!("region: not available, {alg} is not totally ordered");
    }

    match check_joinblank_structure(alg, sys.a.cols(), &x)? {
        StructureReport::Pass { terminal } => {
            let t = terminal.map_or_else(|| "none".to_owned(), |t| t.to_string());
            println!("join-blank structure: pass (terminal point {t})");
        }
        StructureReport::Fail {
            property,
            counterexample,
        } => {
            let vs: Vec<String> = counterexample.iter().map(Vector::to_string).collect();
            println!("join-blank structure: fail ({property:?}: {})", vs.join(", "));
            code = EXIT_DISAGREE;
        }
    }
    Ok(code)
}

fn cmd_bench(g: &GlobalArgs, rows: usize, cols: usize, count: usize, seed: u64) -> Result<u8, Failure> {
    if rows == 0 || cols == 0 {
        return Err(Failure::Input("--rows and --cols must be at least 1".into()));
    }
    let alg = g.algebra.unwrap_or(Algebra::MaxPlus);
    if !alg.is_totally_ordered() {
        return Err(Error::NotTotallyOrdered(alg).into());
    }
    let pool = alg.carrier().unwrap_or_else(|| {
        let mut p = vec![Element::neg_inf(), Element::pos_inf()];
        p.extend([-2, 0, 1, 3].map(Element::int));
        p
    });
    let mut rng = StdRng::seed_from_u64(seed);
    let pick = |rng: &mut StdRng, len: usize| -> Vec<Element> {
        (0..len).map(|_| pool.choose(rng).unwrap().clone()).collect()
    };

    let opts = options(g);
    let (mut total, mut worst) = (Duration::ZERO, Duration::ZERO);
    let (mut consistent, mut members, mut over_budget) = (0usize, 0usize, 0usize);
    let (mut explored, mut pruned) = (0u64, 0u64);
    for _ in 0..count {
        let a = maxblank_core::Matrix::from_rows(alg, (0..rows).map(|_| pick(&mut rng, cols)).collect())?;
        let w = if rng.random_bool(0.5) {
            Vector::new(alg, pick(&mut rng, rows))?
        } else {
            a.mat_vec(&Vector::new(alg, pick(&mut rng, cols))?)?
        };
        let start = Instant::now();
        match solve_with(&a, &w, &opts) {
            Ok(sol) => {
                let t = start.elapsed();
                total += t;
                worst = worst.max(t);
                consistent += usize::from(!sol.region.is_empty());
                members += sol.region.len();
                explored += sol.stats.explored;
                pruned += sol.stats.pruned;
            }
            Err(Error::TermBudgetExceeded { .. }) => over_budget += 1,
            Err(e) => return Err(e.into()),
        }
    }
    let solved = count - over_budget;
    println!("algebra: {alg}, systems: {count} of size {rows}x{cols}, seed {seed}");
    println!("consistent: {consistent}, region members: {members}, over budget: {over_budget}");
    println!("explored: {explored}, pruned: {pruned}");
    if !g.deterministic && solved > 0 {
        println!(
            "time: total {:.3} ms, mean {:.3} ms, max {:.3} ms",
            millis(total),
            millis(total) / solved as f64,
            millis(worst)
        );
    }
    Ok(0)
}

fn millis(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}
