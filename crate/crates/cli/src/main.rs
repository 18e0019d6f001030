//! `treecensus` command line: spanning-tree counts, uprooted censuses,
//! brute-force tree dumps and identity checks, all as JSON on stdout.
//!
//! Exit status is 0 on success, 1 when a checked property fails, and 2 for
//! bad input or an instance that is too large for the oracle.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::{json, Value};

use treecensus::census::{census_all, census_formula, census_mtt, census_oracle, Family, Grain};
use treecensus::exact::parse_rational;
use treecensus::graph::{families, EdgeRef, Graph};
use treecensus::identities::{verify_all, verify_instance, IdentityId, IdentityReport};
use treecensus::kirchhoff::{count_spanning_trees, count_spanning_trees_with_edge};
use treecensus::oracle::{enumerate_spanning_trees, DEFAULT_BUDGET};

#[derive(Parser)]
#[command(name = "treecensus", version, about = "Exact spanning-tree and uprooted-tree counts")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count spanning trees with the matrix tree theorem.
    Count(CountArgs),
    /// Split the count into trees with and without one edge.
    CountEdge(CountEdgeArgs),
    /// Tabulate uprooted spanning trees by root or by root and highest child.
    Census(CensusArgs),
    /// Check summation identities in exact rationals.
    Verify(VerifyArgs),
    /// List every spanning tree by brute force.
    Oracle(OracleArgs),
}

#[derive(Args)]
struct FamilyArgs {
    /// kn, kmn, kn-minus-edge or file; `kn:8`, `kmn:3,3` and `file:g.json`
    /// carry their parameters inline.
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    /// Graph JSON for `--family file`.
    #[arg(long)]
    graph: Option<PathBuf>,
}

#[derive(Args)]
struct RestrictArgs {
    /// Delete the edges from root n-k (m+n for kmn) to the vertices above
    /// it, as in the census constructions.
    #[arg(long)]
    k: Option<usize>,
    /// With --k on kn, also delete the root's edges down to n-k-j+1.
    #[arg(long)]
    j: Option<usize>,
}

#[derive(Args)]
struct CountArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[command(flatten)]
    restrict: RestrictArgs,
}

#[derive(Args)]
struct CountEdgeArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[command(flatten)]
    restrict: RestrictArgs,
    /// Marked edge as `u,v`. Defaults to the census edge when --k is given
    /// for kmn, or --k and --j for kn.
    #[arg(long)]
    edge: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Formula,
    Mtt,
    Oracle,
    All,
}

#[derive(Args)]
struct CensusArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// `root` or `root+highest-child`. Defaults to the finest grain with a
    /// closed form for the family.
    #[arg(long)]
    grain: Option<String>,
    #[arg(long, value_enum, default_value = "all")]
    method: MethodArg,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Args)]
struct VerifyArgs {
    /// Identity id, or `all`.
    #[arg(long, default_value = "all")]
    identity: String,
    /// Check a single instance at this n instead of sweeping.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    /// Rational parameter of the general forms, `p/q`. Repeatable.
    #[arg(long = "a")]
    a: Vec<String>,
    #[arg(long, default_value_t = 10)]
    n_max: usize,
    #[arg(long, default_value_t = 6)]
    m_max: usize,
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

enum Failure {
    Violation(String),
    Input(String),
}

impl From<treecensus::Error> for Failure {
    fn from(e: treecensus::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn input<T>(msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure::Input(msg.into()))
}

fn parse_list(text: &str, what: &str) -> Result<Vec<usize>, Failure> {
    text.split(',')
        .map(|p| p.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .or_else(|_| input(format!("bad {what} `{text}`")))
}

fn resolve_family(args: &FamilyArgs) -> Result<Family, Failure> {
    let (tag, inline) = match args.family.split_once(':') {
        Some((tag, rest)) => (tag, Some(rest)),
        None => (args.family.as_str(), None),
    };
    let family = match tag {
        "kn" | "kn-minus-edge" => {
            let n = match inline {
                Some(text) => match parse_list(text, "n")?.as_slice() {
                    [n] => *n,
                    _ => return input(format!("expected `{tag}:<n>`, got `{}`", args.family)),
                },
                None => args.n.ok_or_else(|| Failure::Input(format!("{tag} needs --n")))?,
            };
            if tag == "kn" {
                Family::Complete { n }
            } else {
                Family::CompleteMinusEdge { n }
            }
        }
        "kmn" => {
            let (m, n) = match inline {
                Some(text) => match parse_list(text, "m,n")?.as_slice() {
                    [m, n] => (*m, *n),
                    _ => return input(format!("expected `kmn:<m>,<n>`, got `{}`", args.family)),
                },
                None => match (args.m, args.n) {
                    (Some(m), Some(n)) => (m, n),
                    _ => return input("kmn needs --m and --n"),
                },
            };
            Family::Bipartite { m, n }
        }
        "file" => {
            let path = match (inline, &args.graph) {
                (Some(p), _) => PathBuf::from(p),
                (None, Some(p)) => p.clone(),
                (None, None) => return input("file family needs --graph <path>"),
            };
            let text =
                std::fs::read_to_string(&path).or_else(|e| input(format!("cannot read {}: {e}", path.display())))?;
            Family::Custom {
                graph: Graph::parse_json(&text)?,
                source: Some(path.display().to_string()),
            }
        }
        other => return input(format!("unknown family `{other}`")),
    };
    family.validate()?;
    Ok(family)
}

fn descriptor(family: &Family, restrict: &RestrictArgs) -> Value {
    let mut params = family.params();
    if let Some(k) = restrict.k {
        params["k"] = json!(k);
    }
    if let Some(j) = restrict.j {
        params["j"] = json!(j);
    }
    json!({ "family": family.tag(), "params": params })
}

fn restricted_graph(family: &Family, restrict: &RestrictArgs) -> Result<Graph, Failure> {
    Ok(match (family, restrict.k, restrict.j) {
        (_, None, None) => family.graph()?,
        (Family::Complete { n }, Some(k), None) => families::restricted_complete(*n, k)?,
        (Family::Complete { n }, Some(k), Some(j)) => families::restricted_complete_with_child(*n, k, j)?,
        (Family::Bipartite { m, n }, Some(k), None) => families::restricted_bipartite(*m, *n, k)?,
        (Family::CompleteMinusEdge { n }, Some(0), None) => families::complete_minus_edge(*n)?,
        (Family::CompleteMinusEdge { n }, Some(k), None) => families::restricted_complete_minus_edge(*n, k)?,
        (_, None, Some(_)) => return input("--j needs --k"),
        _ => return input(format!("--k/--j do not apply to family `{}`", family.tag())),
    })
}

fn marked_edge(family: &Family, args: &CountEdgeArgs) -> Result<EdgeRef, Failure> {
    if let Some(text) = &args.edge {
        return match parse_list(text, "edge")?.as_slice() {
            [u, v] => Ok(EdgeRef::new(*u, *v)?),
            _ => input(format!("expected --edge u,v, got `{text}`")),
        };
    }
    let e = match (family, args.restrict.k, args.restrict.j) {
        (Family::Bipartite { m, n }, Some(k), None) if (1..=*m).contains(&k) => EdgeRef::new(m + 1 - k, m + n)?,
        (Family::Complete { n }, Some(k), Some(j)) if k + j < *n => EdgeRef::new(n - k - j, n - k)?,
        _ => return input("count-edge needs --edge u,v"),
    };
    Ok(e)
}

fn emit(value: &Value) {
    println!("{value}");
}

fn cmd_count(args: &CountArgs) -> Outcome {
    let family = resolve_family(&args.family)?;
    let g = restricted_graph(&family, &args.restrict)?;
    emit(&json!({
        "graph": descriptor(&family, &args.restrict),
        "spanning_trees": count_spanning_trees(&g).to_string(),
    }));
    Ok(())
}

fn cmd_count_edge(args: &CountEdgeArgs) -> Outcome {
    let family = resolve_family(&args.family)?;
    let g = restricted_graph(&family, &args.restrict)?;
    let e = marked_edge(&family, args)?;
    let with = count_spanning_trees_with_edge(&g, e)?;
    let without = count_spanning_trees(&g.remove_one(e)?);
    let total = count_spanning_trees(&g);
    if &with + &without != total {
        return Err(Failure::Violation(format!("{with} + {without} != {total}")));
    }
    emit(&json!({
        "graph": descriptor(&family, &args.restrict),
        "edge": [e.u, e.v],
        "with_edge": with.to_string(),
        "without_edge": without.to_string(),
        "total": total.to_string(),
    }));
    Ok(())
}

fn default_grain(family: &Family) -> Grain {
    match family {
        Family::Bipartite { .. } => Grain::RootAndChild,
        _ => Grain::Root,
    }
}

fn cmd_census(args: &CensusArgs) -> Outcome {
    let family = resolve_family(&args.family)?;
    let grain = match &args.grain {
        Some(text) => Grain::parse(text)?,
        None => default_grain(&family),
    };
    let table = match args.method {
        MethodArg::Formula => census_formula(&family, grain)?,
        MethodArg::Mtt => census_mtt(&family, grain)?,
        MethodArg::Oracle => census_oracle(&family, grain, args.budget)?,
        MethodArg::All => {
            let (tables, agree) = census_all(&family, grain, args.budget)?;
            emit(&json!({
                "tables": tables.iter().map(|t| t.to_json()).collect::<Vec<_>>(),
                "agreement": agree,
            }));
            return if agree {
                Ok(())
            } else {
                Err(Failure::Violation("census methods disagree".into()))
            };
        }
    };
    emit(&table.to_json());
    Ok(())
}

fn cmd_verify(args: &VerifyArgs) -> Outcome {
    let id = match args.identity.as_str() {
        "all" => None,
        text => Some(IdentityId::parse(text)?),
    };
    let samples: Vec<BigRational> = args.a.iter().map(|a| parse_rational(a)).collect::<Result<_, _>>()?;
    let reports: Vec<IdentityReport> = match (id, args.n) {
        (Some(id), Some(n)) => {
            if samples.is_empty() {
                vec![verify_instance(id, Some(n), args.m, args.k, None)?]
            } else {
                samples
                    .iter()
                    .map(|a| verify_instance(id, Some(n), args.m, args.k, Some(a)))
                    .collect::<Result<_, _>>()?
            }
        }
        (None, Some(_)) => return input("--n needs a specific --identity"),
        (_, None) => {
            let samples = if samples.is_empty() {
                ["7/3", "-2", "9"]
                    .iter()
                    .map(|a| parse_rational(a))
                    .collect::<Result<_, _>>()?
            } else {
                samples
            };
            verify_all(args.n_max, args.m_max, &samples)?
                .into_iter()
                .filter(|r| id.is_none_or(|id| r.id == id))
                .collect()
        }
    };
    for r in &reports {
        emit(&r.to_json());
    }
    let failed = reports.iter().filter(|r| !r.holds).count();
    if failed > 0 {
        return Err(Failure::Violation(format!(
            "{failed} of {} instances failed",
            reports.len()
        )));
    }
    Ok(())
}

fn cmd_oracle(args: &OracleArgs) -> Outcome {
    let family = resolve_family(&args.family)?;
    let trees = enumerate_spanning_trees(&family.graph()?, args.budget)?;
    emit(&json!({
        "graph": json!({ "family": family.tag(), "params": family.params() }),
        "count": trees.len().to_string(),
        "trees": trees.iter().map(|t| t.to_json()).collect::<Vec<_>>(),
    }));
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Count(a) => cmd_count(a),
        Command::CountEdge(a) => cmd_count_edge(a),
        Command::Census(a) => cmd_census(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Oracle(a) => cmd_oracle(a),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Violation(msg)) => {
            eprintln!("treecensus: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("treecensus: {msg}");
            ExitCode::from(2)
        }
    }
}
