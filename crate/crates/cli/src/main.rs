use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use nichols_core::algebra::NCPolynomial;
use nichols_core::braiding::{cartan_braiding, BraidingMatrix, CartanSpec, CartanType};
use nichols_core::errata::errata_report;
use nichols_core::graphs::{aug_graph, components, pure_graph, VertexGraph, Word};
use nichols_core::oracle::{LieVariant, NicholsOracle, DEFAULT_DEGREE_CAP, DEFAULT_RANK_CAP};
use nichols_core::roots::{
    dim_l, dim_table, enumerate_cartan, enumerate_quantum_linear, DimMethod, DimRow,
};
use nichols_core::structure::{
    lminus_rank2_basis, prop_6_3_decide, prop_6_4_decide, rank2_monomial,
    verify_connectivity_criterion, verify_prop_6_5,
};
use nichols_core::sweeps::{self, over_catalog, SweepTotals, DEFAULT_SEED};
use nichols_core::text::parse_polynomial;
use nichols_core::Error;

#[derive(Parser)]
#[command(
    name = "nichols",
    version,
    about = "Exact computations in Nichols algebras of diagonal type"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension of the braided Lie algebra of a Cartan-type braiding.
    Dim {
        #[command(flatten)]
        cartan: CartanArgs,
        #[arg(long, default_value = "recursive", value_parser = ["closed", "recursive", "oracle"])]
        method: String,
    },
    /// Closed form, recursion and connected-monomial count side by side.
    DimVerify {
        #[arg(long = "type")]
        kind: String,
        #[arg(long)]
        max_rank: usize,
        #[arg(long = "max-N")]
        max_order: u64,
        #[arg(long)]
        json: bool,
    },
    /// Zero tests, Lie membership and graded dimensions in the Nichols algebra.
    Oracle {
        #[command(subcommand)]
        op: OracleOp,
    },
    /// The pure and augmented graphs of a braiding.
    Graph {
        #[command(subcommand)]
        op: GraphOp,
    },
    /// Decision procedures and verification reports.
    Check {
        #[command(subcommand)]
        op: CheckOp,
    },
    /// Explicit bases.
    Basis {
        #[command(subcommand)]
        op: BasisOp,
    },
    /// Printed dimension formulas compared with the connected-monomial count.
    Errata {
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Property sweeps over the built-in catalog of braidings.
    Sweep {
        name: SweepName,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Args)]
struct CartanArgs {
    /// Cartan spec file, e.g. {"type":"A","rank":3,"q":"1/4"}.
    #[arg(long, conflicts_with_all = ["kind", "rank", "q", "order"])]
    spec: Option<PathBuf>,
    #[arg(long = "type")]
    kind: Option<String>,
    #[arg(long)]
    rank: Option<usize>,
    /// Vertex parameter as a root fraction "a/b".
    #[arg(long, conflicts_with = "order")]
    q: Option<String>,
    /// Order of the vertex parameter; q = e(1/N).
    #[arg(long = "N")]
    order: Option<u64>,
}

#[derive(Args)]
struct Source {
    /// Braiding matrix file {"n": .., "q": [["a/b", ..], ..]}.
    #[arg(long, conflicts_with_all = ["spec", "kind", "rank", "q", "order"])]
    matrix: Option<PathBuf>,
    #[command(flatten)]
    cartan: CartanArgs,
}

#[derive(Args)]
struct Element {
    /// A word as 1-based letters, e.g. "1 2 1".
    #[arg(long, conflicts_with = "poly", required_unless_present = "poly")]
    word: Option<String>,
    /// A polynomial, e.g. "[1 2] - e(1/3) * [2 1]".
    #[arg(long)]
    poly: Option<String>,
}

#[derive(Subcommand)]
enum OracleOp {
    IsZero {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        element: Element,
        #[arg(long, default_value_t = DEFAULT_DEGREE_CAP)]
        degree_cap: usize,
    },
    InL {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        element: Element,
        #[arg(long, default_value = "braided")]
        variant: String,
        #[arg(long, default_value_t = DEFAULT_DEGREE_CAP)]
        degree_cap: usize,
    },
    DimComponent {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value_t = DEFAULT_DEGREE_CAP)]
        degree_cap: usize,
    },
}

#[derive(Subcommand)]
enum GraphOp {
    Pure {
        #[command(flatten)]
        source: Source,
    },
    Aug {
        #[command(flatten)]
        source: Source,
    },
    Components {
        #[command(flatten)]
        source: Source,
    },
}

#[derive(Subcommand)]
enum CheckOp {
    Prop63 {
        #[command(flatten)]
        source: Source,
    },
    Prop64 {
        #[command(flatten)]
        source: Source,
    },
    Cor25 {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
        #[arg(long, default_value_t = DEFAULT_RANK_CAP)]
        rank_cap: usize,
    },
    Prop65 {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
        #[arg(long, default_value_t = DEFAULT_RANK_CAP)]
        rank_cap: usize,
    },
}

#[derive(Subcommand)]
enum BasisOp {
    LminusRank2 {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 10)]
        cap: u64,
    },
    Pbw {
        #[command(flatten)]
        source: Source,
        /// Degree cap for quantum linear spaces with a trivial diagonal entry.
        #[arg(long)]
        cap: Option<usize>,
        /// Largest number of exponent vectors visited for Cartan types.
        #[arg(long, default_value_t = 1_000_000)]
        limit: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SweepName {
    Connectivity,
    PairingFormulas,
    BracketIdentities,
    OrderCriterion,
    DisjointMonomials,
    DisjointProducts,
    Bracketings,
    ClosedForms,
    Rank2Criterion,
    Prop63,
    Prop64,
    ConnectedBlocks,
    Propagation,
}

/// Printed output and whether the command found a violation.
struct Report {
    text: String,
    ok: bool,
}

impl Report {
    fn json(v: &impl serde::Serialize) -> Self {
        Report::checked(v, true)
    }

    fn checked(v: &impl serde::Serialize, ok: bool) -> Self {
        Report {
            text: serde_json::to_string_pretty(v).expect("serializable") + "\n",
            ok,
        }
    }
}

fn read(path: &PathBuf) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

impl CartanArgs {
    fn spec(&self) -> Result<CartanSpec, Error> {
        if let Some(path) = &self.spec {
            return CartanSpec::from_json(&read(path)?);
        }
        let missing = |flag: &str| Error::Parse(format!("--{flag} is required"));
        let kind: CartanType = self
            .kind
            .as_deref()
            .ok_or_else(|| missing("type"))?
            .parse()?;
        let rank = self.rank.ok_or_else(|| missing("rank"))?;
        match (&self.q, self.order) {
            (Some(q), _) => CartanSpec::new(kind, rank, q.parse()?),
            (None, Some(order)) => CartanSpec::with_order(kind, rank, order),
            (None, None) => Err(Error::Parse("one of --q or --N is required".into())),
        }
    }
}

impl Source {
    fn braiding(&self) -> Result<BraidingMatrix, Error> {
        match &self.matrix {
            Some(path) => BraidingMatrix::from_json(&read(path)?),
            None => Ok(cartan_braiding(&self.cartan.spec()?)),
        }
    }
}

impl Element {
    fn polynomial(&self, rank: usize) -> Result<NCPolynomial, Error> {
        match (&self.word, &self.poly) {
            (Some(w), _) => Ok(NCPolynomial::word(rank, Word::parse(w, rank)?)),
            (None, Some(p)) => parse_polynomial(p, rank),
            (None, None) => Err(Error::Parse("one of --word or --poly is required".into())),
        }
    }
}

fn graph_json(g: &VertexGraph) -> Value {
    let vertices: Vec<usize> = g.vertices().iter().map(|v| v + 1).collect();
    let edges: Vec<[usize; 2]> = g.edges().iter().map(|&(a, b)| [a + 1, b + 1]).collect();
    json!({ "vertices": vertices, "edges": edges })
}

fn rank_within(b: &BraidingMatrix, cap: usize) -> Result<(), Error> {
    if b.rank() > cap {
        return Err(Error::CapExceeded(format!(
            "rank {} exceeds the rank cap {cap}",
            b.rank()
        )));
    }
    Ok(())
}

fn dim_table_text(rows: &[DimRow]) -> String {
    let header = [
        "type",
        "rank",
        "N",
        "closed",
        "recursive",
        "oracle",
        "agree",
    ];
    let cells: Vec<[String; 7]> = rows
        .iter()
        .map(|r| {
            [
                r.kind.to_string(),
                r.rank.to_string(),
                r.order.to_string(),
                r.closed.to_string(),
                r.recursive.to_string(),
                r.oracle.to_string(),
                r.agree.to_string(),
            ]
        })
        .collect();
    let width: Vec<usize> = (0..7)
        .map(|c| {
            cells
                .iter()
                .map(|r| r[c].len())
                .chain([header[c].len()])
                .max()
                .unwrap()
        })
        .collect();
    let line = |fields: Vec<&str>| {
        let padded: Vec<String> = fields
            .iter()
            .zip(&width)
            .map(|(f, w)| format!("{f:>w$}"))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header.to_vec());
    for r in &cells {
        out += &line(r.iter().map(String::as_str).collect());
    }
    out
}

fn run_sweep(name: SweepName, seed: u64) -> Result<SweepTotals, Error> {
    use SweepName::*;
    match name {
        Connectivity => over_catalog("connectivity", |e| sweeps::connectivity(e, 4)),
        PairingFormulas => over_catalog("pairing_formulas", |e| sweeps::pairing_formulas(e, 3, 2)),
        BracketIdentities => {
            over_catalog("bracket_identities", |e| sweeps::bracket_identities(e, 2))
        }
        OrderCriterion => over_catalog("order_criterion", |e| sweeps::order_criterion(e, 5)),
        DisjointMonomials => {
            over_catalog("disjoint_monomials", |e| sweeps::disjoint_monomials(e, 5))
        }
        DisjointProducts => over_catalog("disjoint_products", |e| {
            sweeps::disjoint_products(e, 5, 3, seed)
        }),
        Bracketings => over_catalog("disconnected_bracketings", |e| {
            sweeps::disconnected_bracketings(e, 5)
        }),
        ClosedForms => over_catalog("closed_forms", |e| sweeps::closed_forms(e, 3, 2)),
        Rank2Criterion => sweeps::rank2_criterion_over_grid(6),
        Prop63 => over_catalog("prop_6_3", sweeps::prop_6_3_brute_force),
        Prop64 => sweeps::prop_6_4_over_catalog(),
        ConnectedBlocks => over_catalog("connected_blocks", |e| sweeps::connected_blocks(e, 4)),
        Propagation => over_catalog("membership_propagation", |e| {
            sweeps::membership_propagation(e, 5)
        }),
    }
}

fn run(cli: Cli) -> Result<Report, Error> {
    Ok(match cli.command {
        Command::Dim { cartan, method } => {
            let method: DimMethod = method.parse()?;
            Report {
                text: format!("{}\n", dim_l(&cartan.spec()?, method)?),
                ok: true,
            }
        }
        Command::DimVerify {
            kind,
            max_rank,
            max_order,
            json,
        } => {
            let rows = dim_table(kind.parse()?, max_rank, max_order)?;
            let ok = rows.iter().all(|r| r.agree);
            if json {
                Report::checked(&rows, ok)
            } else {
                Report {
                    text: dim_table_text(&rows),
                    ok,
                }
            }
        }
        Command::Oracle { op } => match op {
            OracleOp::IsZero {
                source,
                element,
                degree_cap,
            } => {
                let b = source.braiding()?;
                let p = element.polynomial(b.rank())?;
                let oracle = NicholsOracle::with_degree_cap(&b, degree_cap);
                let degree = p.homogeneous_degree().ok().flatten();
                let witness = match &degree {
                    Some(_) => oracle.coordinates(&p)?.witness().cloned(),
                    None => None,
                };
                Report::json(&json!({
                    "result": oracle.is_zero(&p)?,
                    "degree": degree,
                    "witness": witness,
                }))
            }
            OracleOp::InL {
                source,
                element,
                variant,
                degree_cap,
            } => {
                let b = source.braiding()?;
                let variant: LieVariant = variant.parse()?;
                let p = element.polynomial(b.rank())?;
                let oracle = NicholsOracle::with_degree_cap(&b, degree_cap);
                let degree = p.homogeneous_degree()?;
                let witness = match &degree {
                    Some(_) => oracle.coordinates(&p)?.witness().cloned(),
                    None => None,
                };
                Report::json(&json!({
                    "result": oracle.in_lie(&p, variant)?,
                    "degree": degree,
                    "witness": witness,
                }))
            }
            OracleOp::DimComponent {
                source,
                degree,
                degree_cap,
            } => {
                let b = source.braiding()?;
                if degree > degree_cap {
                    return Err(Error::CapExceeded(format!(
                        "degree {degree} exceeds the degree cap {degree_cap}"
                    )));
                }
                let oracle = NicholsOracle::with_degree_cap(&b, degree_cap);
                Report::json(&json!({
                    "result": oracle.nichols_dimension(degree),
                    "degree": degree,
                    "witness": null,
                }))
            }
        },
        Command::Graph { op } => match op {
            GraphOp::Pure { source } => Report::json(&graph_json(&pure_graph(&source.braiding()?))),
            GraphOp::Aug { source } => Report::json(&graph_json(&aug_graph(&source.braiding()?))),
            GraphOp::Components { source } => {
                let blocks: Vec<Vec<usize>> = components(&pure_graph(&source.braiding()?))
                    .iter()
                    .map(|c| c.iter().map(|v| v + 1).collect())
                    .collect();
                Report::json(&json!({ "components": blocks }))
            }
        },
        Command::Check { op } => match op {
            CheckOp::Prop63 { source } => Report::json(
                &json!({ "check": "prop63", "result": prop_6_3_decide(&source.braiding()?) }),
            ),
            CheckOp::Prop64 { source } => Report::json(
                &json!({ "check": "prop64", "result": prop_6_4_decide(&source.braiding()?) }),
            ),
            CheckOp::Cor25 {
                source,
                max_len,
                rank_cap,
            } => {
                let b = source.braiding()?;
                rank_within(&b, rank_cap)?;
                let oracle = NicholsOracle::with_degree_cap(&b, max_len.max(DEFAULT_DEGREE_CAP));
                let r = verify_connectivity_criterion(&oracle, max_len)?;
                Report::checked(&r, r.passed())
            }
            CheckOp::Prop65 {
                source,
                max_len,
                rank_cap,
            } => {
                let b = source.braiding()?;
                rank_within(&b, rank_cap)?;
                let r = verify_prop_6_5(&NicholsOracle::new(&b), max_len)?;
                Report::checked(&r, r.passed())
            }
        },
        Command::Basis { op } => match op {
            BasisOp::LminusRank2 { source, cap } => {
                let basis = lminus_rank2_basis(&source.braiding()?, cap)?;
                let monomials: Vec<String> = basis
                    .pairs
                    .iter()
                    .map(|&p| rank2_monomial(p).to_string())
                    .collect();
                Report::json(&json!({
                    "pairs": basis.pairs,
                    "monomials": monomials,
                    "truncated": basis.truncated,
                }))
            }
            BasisOp::Pbw { source, cap, limit } => {
                let e = match &source.matrix {
                    Some(_) => enumerate_quantum_linear(&source.braiding()?, cap)?,
                    None => enumerate_cartan(&source.cartan.spec()?, limit)?,
                };
                Report::json(&json!({
                    "count": e.monomials.len(),
                    "monomials": e.monomials,
                    "truncated": e.truncated,
                    "hypothesis_holds": e.hypothesis_holds,
                }))
            }
        },
        Command::Errata { output } => {
            let text = errata_report()?.to_json();
            match output {
                Some(path) => {
                    fs::write(&path, &text)
                        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
                    Report {
                        text: String::new(),
                        ok: true,
                    }
                }
                None => Report { text, ok: true },
            }
        }
        Command::Sweep { name, seed } => {
            let t = run_sweep(name, seed)?;
            Report::checked(&t, t.passed())
        }
    })
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(report) => {
            print!("{}", report.text);
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
