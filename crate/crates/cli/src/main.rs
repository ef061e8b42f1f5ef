use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use latpath::cgo::ctot;
use latpath::chains::{expansion, surj_compose, ChainElement, HomologyScalar};
use latpath::checks::{self, GoldenItem, Report};
use latpath::cyclic::CyclicLatticePath;
use latpath::hochschild::{hochschild_ranks, FinAlgebra};
use latpath::paths::enumerate;
use latpath::scalar::{parse_scalar, Scalar};
use latpath::simplicial::{cohomology_basis, cup_i, is_coboundary, steenrod_square, SimplicialCochain, SimplicialSet};
use latpath::trees::LabelledPlanarTree;
use latpath::{LatticePath, F2, F3, Q, Z};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "latpath", version, about = "Lattice paths, their condensation and cochain operations")]
struct Cli {
    /// Coefficient ring for chain and cochain computations.
    #[arg(long, global = true, value_enum, default_value_t = Ring::Z)]
    ring: Ring,

    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Ring {
    Z,
    Q,
    F2,
    F3,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    PaperGolden,
    Acceptance,
}

#[derive(Subcommand)]
enum Command {
    /// Partial composition x ∘_i y of lattice paths.
    Compose { x: String, slot: usize, y: String },
    /// Partial composition of cyclic lattice paths.
    Ccompose { x: String, slot: usize, y: String },
    /// Rotate the output of a cyclic lattice path by s steps.
    Crotate { x: String, steps: usize },
    /// Complexity c(x) with the pairwise indices c_ij.
    Complexity { x: String },
    /// Cyclic complexity, an even integer.
    Ccomplexity { x: String },
    /// The complete graph c_tot(x).
    Ctot { x: String },
    /// Planar tree of a path of complexity at most 2.
    Tree { x: String },
    /// Lattice path of a planar tree.
    Untree { tree: String },
    /// Overlapping-cut expansion of a surjection into n + 1 pieces.
    Expand { u: String, n: usize },
    /// Composition u ∘_i v in the surjection operad.
    Scompose { u: String, slot: usize, v: String },
    /// Boundary of a chain such as "2*121 - 12|21".
    Dchain { chain: String },
    /// Hochschild cohomology of a built-in algebra or a JSON file.
    Hh {
        algebra: String,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
    },
    /// Steenrod squares of a basis of H^p(X; F2).
    Sq {
        #[arg(long)]
        space: String,
        #[arg(long)]
        degree: usize,
        i: usize,
    },
    /// The cup-j product of two cochains written "p:v0,v1,…".
    Cup {
        #[arg(long)]
        space: String,
        #[arg(short, long, default_value_t = 0)]
        j: usize,
        f: String,
        g: String,
    },
    /// Run a verification suite.
    Check {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Run a single acceptance criterion.
        #[arg(long)]
        criterion: Option<usize>,
    },
    /// List L(n_1,…,n_k; n) for comma-separated arities.
    Enumerate { arities: String, n: usize },
}

enum Failure {
    Parse(String),
    Check,
    Io(String),
}

impl From<latpath::Error> for Failure {
    fn from(e: latpath::Error) -> Self {
        Failure::Parse(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

// a closed pipe is not an error for a command-line filter
macro_rules! out {
    ($($t:tt)*) => {{
        let _ = writeln!(std::io::stdout(), $($t)*);
    }};
}

macro_rules! with_ring {
    ($ring:expr, $f:ident($($arg:expr),*)) => {
        match $ring {
            Ring::Z => $f::<Z>($($arg),*),
            Ring::Q => $f::<Q>($($arg),*),
            Ring::F2 => $f::<F2>($($arg),*),
            Ring::F3 => $f::<F3>($($arg),*),
        }
    };
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Parse(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Io(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
    }
}

fn path(s: &str) -> Result<LatticePath, Failure> {
    Ok(s.parse()?)
}

fn cyclic(s: &str) -> Result<CyclicLatticePath, Failure> {
    Ok(s.parse()?)
}

fn emit(json: bool, text: impl std::fmt::Display, value: Value) {
    if json {
        out!("{value}");
    } else {
        out!("{text}");
    }
}

fn run(cli: &Cli) -> Outcome {
    let json = cli.json;
    match &cli.command {
        Command::Compose { x, slot, y } => {
            let r = path(x)?.compose(*slot, &path(y)?)?;
            emit(json, &r, json!({ "result": r.to_string() }));
        }
        Command::Ccompose { x, slot, y } => {
            let r = cyclic(x)?.compose(*slot, &cyclic(y)?)?;
            emit(json, &r, json!({ "result": r.to_string() }));
        }
        Command::Crotate { x, steps } => {
            let r = cyclic(x)?.output_rotate(*steps);
            emit(json, &r, json!({ "result": r.to_string() }));
        }
        Command::Complexity { x } => {
            let t = path(x)?.complexity_table();
            let pairs: Vec<String> = t.pairs.iter().map(|((i, j), c)| format!("c{i},{j}={c}")).collect();
            let text = if pairs.is_empty() { t.max.to_string() } else { format!("{} ({})", t.max, pairs.join(" ")) };
            let pv: Vec<Value> = t.pairs.iter().map(|((i, j), c)| json!([i, j, c])).collect();
            emit(json, text, json!({ "complexity": t.max, "pairs": pv }));
        }
        Command::Ccomplexity { x } => {
            let c = cyclic(x)?.cyclic_complexity();
            emit(json, c, json!({ "cyclic_complexity": c }));
        }
        Command::Ctot { x } => {
            let g = ctot(&path(x)?);
            emit(json, &g, json!({ "graph": g.to_string() }));
        }
        Command::Tree { x } => {
            let t = LabelledPlanarTree::from_path(&path(x)?)?;
            emit(json, &t, json!({ "tree": t.to_string() }));
        }
        Command::Untree { tree } => {
            let t: LabelledPlanarTree = tree.parse()?;
            let x = t.to_path();
            emit(json, &x, json!({ "path": x.to_string() }));
        }
        Command::Expand { u, n } => with_ring!(cli.ring, expand(json, u, *n))?,
        Command::Scompose { u, slot, v } => with_ring!(cli.ring, scompose(json, u, *slot, v))?,
        Command::Dchain { chain } => with_ring!(cli.ring, dchain(json, chain))?,
        Command::Hh { algebra, max_degree } => with_ring!(cli.ring, hh(json, algebra, *max_degree))?,
        Command::Sq { space, degree, i } => sq(json, &load_space(space)?, *degree, *i)?,
        Command::Cup { space, j, f, g } => with_ring!(cli.ring, cup(json, &load_space(space)?, *j, f, g))?,
        Command::Check { suite, criterion } => check(json, *suite, *criterion)?,
        Command::Enumerate { arities, n } => {
            let ar = arities
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|s| s.trim().parse::<usize>().map_err(|_| Failure::Parse(format!("bad arity '{s}'"))))
                .collect::<Result<Vec<_>, _>>()?;
            let all = enumerate(&ar, *n);
            if json {
                out!("{}", json!(all.iter().map(|x| x.to_string()).collect::<Vec<_>>()));
            } else {
                for x in &all {
                    out!("{x}");
                }
            }
        }
    }
    Ok(())
}

fn print_chain<S: Scalar>(json: bool, c: &ChainElement<S>) {
    emit(json, c, json!({ "ring": S::ring_tag(), "chain": c.to_string() }));
}

fn expand<S: Scalar>(json: bool, u: &str, n: usize) -> Outcome {
    print_chain(json, &expansion::<S>(&path(u)?, n)?);
    Ok(())
}

fn scompose<S: Scalar>(json: bool, u: &str, slot: usize, v: &str) -> Outcome {
    print_chain(json, &surj_compose::<S>(&path(u)?, slot, &path(v)?)?);
    Ok(())
}

fn dchain<S: Scalar>(json: bool, chain: &str) -> Outcome {
    let c: ChainElement<S> = chain.parse()?;
    print_chain(json, &c.boundary());
    Ok(())
}

fn read_json(file: &str) -> Result<Value, Failure> {
    let text = std::fs::read_to_string(file).map_err(|e| Failure::Io(format!("cannot read {file}: {e}")))?;
    serde_json::from_str(&text).map_err(|e| Failure::Parse(format!("{file}: {e}")))
}

fn is_file(name: &str) -> bool {
    name.ends_with(".json") || name.contains('/') || Path::new(name).exists()
}

fn load_algebra<S: Scalar>(name: &str) -> Result<FinAlgebra<S>, Failure> {
    if let Some(d) = name.strip_prefix("poly:") {
        let d = d.parse().map_err(|_| Failure::Parse(format!("bad degree in '{name}'")))?;
        return Ok(FinAlgebra::truncated_polynomial(d)?);
    }
    match FinAlgebra::builtin(name) {
        Ok(a) => Ok(a),
        Err(_) if is_file(name) => Ok(FinAlgebra::from_json(&read_json(name)?)?),
        Err(e) => Err(e.into()),
    }
}

fn load_space(name: &str) -> Result<SimplicialSet, Failure> {
    match SimplicialSet::builtin(name) {
        Ok(x) => Ok(x),
        Err(_) if is_file(name) => Ok(SimplicialSet::from_json(&read_json(name)?)?),
        Err(e) => Err(e.into()),
    }
}

fn hh<S: HomologyScalar>(json: bool, algebra: &str, max_degree: usize) -> Outcome {
    let alg = load_algebra::<S>(algebra)?;
    let groups = hochschild_ranks(&alg, max_degree)?;
    if json {
        let v: Vec<Value> =
            groups.iter().map(|g| json!({ "degree": g.degree, "rank": g.rank, "torsion": g.torsion })).collect();
        out!("{}", json!({ "ring": S::ring_tag(), "groups": v }));
    } else {
        for g in &groups {
            let mut line = format!("HH^{}: rank {}", g.degree, g.rank);
            if !g.torsion.is_empty() {
                let t: Vec<String> = g.torsion.iter().map(|d| format!("Z/{d}")).collect();
                line.push_str(&format!(", torsion {}", t.join(" + ")));
            }
            out!("{line}");
        }
    }
    Ok(())
}

fn values<S: Scalar>(f: &SimplicialCochain<S>) -> String {
    f.values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

fn sq(json: bool, x: &SimplicialSet, degree: usize, i: usize) -> Outcome {
    let mut out = Vec::new();
    for (t, a) in cohomology_basis::<F2>(x, degree).iter().enumerate() {
        let s = steenrod_square(x, i, a)?;
        let nonzero = !is_coboundary(x, &s);
        if !json {
            let state = if nonzero { "nonzero" } else { "zero" };
            out!("Sq^{i} a{t} = {}:{} ({state} in H^{})", s.degree, values(&s), s.degree);
        }
        out.push(json!({ "class": values(a), "square": values(&s), "degree": s.degree, "nonzero": nonzero }));
    }
    if json {
        out!("{}", json!({ "space": x.name(), "i": i, "squares": out }));
    }
    Ok(())
}

fn parse_cochain<S: Scalar>(x: &SimplicialSet, text: &str) -> Result<SimplicialCochain<S>, Failure> {
    let (d, vals) = text.split_once(':').ok_or_else(|| Failure::Parse(format!("expected 'p:v0,v1,…', got '{text}'")))?;
    let degree: usize = d.trim().parse().map_err(|_| Failure::Parse(format!("bad degree '{d}'")))?;
    let values = vals
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| parse_scalar::<S>(s.trim()).ok_or_else(|| Failure::Parse(format!("bad scalar '{s}'"))))
        .collect::<Result<Vec<S>, _>>()?;
    if values.len() != x.count(degree) {
        return Err(Failure::Parse(format!(
            "{} has {} simplices in degree {degree}, got {} values",
            x.name(),
            x.count(degree),
            values.len()
        )));
    }
    Ok(SimplicialCochain { degree, values })
}

fn cup<S: Scalar>(json: bool, x: &SimplicialSet, j: usize, f: &str, g: &str) -> Outcome {
    let f = parse_cochain::<S>(x, f)?;
    let g = parse_cochain::<S>(x, g)?;
    match cup_i(x, j, &f, &g)? {
        Some(h) => emit(json, format!("{}:{}", h.degree, values(&h)), json!({ "degree": h.degree, "values": values(&h) })),
        None => emit(json, "0", json!({ "degree": null, "values": "" })),
    }
    Ok(())
}

fn report_line(r: &Report) -> String {
    let verdict = if r.passed() { "PASS" } else { "FAIL" };
    format!("{verdict} criterion {:>2}: {} ({} cases, {} violations)", r.id, r.title, r.checked, r.violations)
}

fn golden_line(g: &GoldenItem) -> String {
    let verdict = if g.passed { "PASS" } else { "FAIL" };
    format!("{verdict} {}: expected {}, got {}", g.name, g.expected, g.actual)
}

fn check(json: bool, suite: Suite, criterion: Option<usize>) -> Outcome {
    let ok = match suite {
        Suite::PaperGolden => {
            let items = checks::golden_examples();
            if json {
                out!("{}", serde_json::to_string(&items).expect("serializable"));
            } else {
                items.iter().for_each(|g| out!("{}", golden_line(g)));
            }
            items.iter().all(|g| g.passed)
        }
        Suite::Acceptance => {
            let reports = match criterion {
                Some(i) => vec![checks::criterion(i).ok_or_else(|| Failure::Parse(format!("no criterion {i}")))?],
                None => checks::acceptance(),
            };
            if json {
                out!("{}", serde_json::to_string(&reports).expect("serializable"));
            } else {
                for r in &reports {
                    out!("{}", report_line(r));
                    r.failures.iter().for_each(|f| out!("    violation: {f}"));
                    r.notes.iter().for_each(|n| out!("    note: {n}"));
                }
            }
            reports.iter().all(Report::passed)
        }
    };
    if ok {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}
