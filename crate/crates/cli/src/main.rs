//! `matchcover` command-line front end.
//!
//! Machine-readable JSON goes to stdout (CSV for `bench`), a one-line human
//! summary to stderr. Exit codes: 0 success, 1 infeasible (a certificate is
//! printed) or a failed verification, 2 bad input.

mod doc;

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use matchcover::factor::min_weight_matching_k_cover;
use matchcover::gen::Family;
use matchcover::graph::{parse_lbounds, parse_subset, parse_weights};
use matchcover::variants::{
    l_bounded_cover, path_packing_k_cover, two_matching_k_cover, two_star_k_cover, HKCover,
};
use matchcover::{
    line_graph, min_k, oracle, parse_graph, solve, verify_certificate, verify_cover, Error, Graph,
    LBounds, MatchingDecomposition, Outcome, VertexSet,
};

use doc::{edge_pairs, set, CertDoc, CoverDoc};

#[derive(Parser, Debug)]
#[command(
    name = "matchcover",
    version,
    about = "Cover the vertices of a graph with k matchings"
)]
struct Cli {
    /// Also write a run report (command, input digest, timing, outcome) as JSON.
    #[arg(long, global = true, value_name = "FILE")]
    report: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Find k matchings covering the graph (or a subset), or a stable set
    /// proving there are none.
    Cover {
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        /// Only these vertices need to be covered.
        #[arg(long)]
        subset: Option<PathBuf>,
    },
    /// Least number of matchings covering every vertex.
    MinK {
        graph: PathBuf,
        /// Report 1 instead of 2 when the graph has a perfect matching.
        #[arg(long)]
        distinguish_k1: bool,
    },
    /// Minimum-weight matching-k-cover for nonnegative edge weights.
    Weighted {
        graph: PathBuf,
        weights: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Covers by richer families, or ℓ-bounded covers.
    Variant {
        kind: VariantKind,
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        /// Lower bounds for `lbounded` (default: 1 everywhere).
        #[arg(long)]
        lbounds: Option<PathBuf>,
    },
    /// Exhaustive reference answers for small graphs.
    Oracle {
        query: OracleQuery,
        graph: PathBuf,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        subset: Option<PathBuf>,
        #[arg(long)]
        weights: Option<PathBuf>,
        #[arg(long)]
        lbounds: Option<PathBuf>,
    },
    /// Line graph with its star cliques, plus the min-k report of the graph.
    Linegraph { graph: PathBuf },
    /// Check a cover or certificate document produced by this tool.
    Verify {
        graph: PathBuf,
        document: PathBuf,
        #[arg(long)]
        subset: Option<PathBuf>,
    },
    /// Time min-k on generated graphs; CSV on stdout.
    Bench {
        #[arg(long)]
        family: FamilyArg,
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        distinguish_k1: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum VariantKind {
    #[value(name = "2matching")]
    TwoMatching,
    #[value(name = "2star")]
    TwoStar,
    Path,
    Lbounded,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OracleQuery {
    MaxDeficit,
    MatchingNumber,
    MinK,
    MinWeight,
    LkDeficit,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    Random,
    StarBlowup,
    Path,
    Grid,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Random => Family::Random,
            FamilyArg::StarBlowup => Family::StarBlowup,
            FamilyArg::Path => Family::Path,
            FamilyArg::Grid => Family::Grid,
        }
    }
}

/// Anything that should end the run with exit code 2.
#[derive(Debug)]
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type CmdResult = Result<Output, InputError>;

struct Output {
    /// JSON document, also embedded in the run report.
    doc: Value,
    /// Replaces the JSON on stdout when set (CSV for `bench`).
    text: Option<String>,
    summary: String,
    code: u8,
}

impl Output {
    fn json(doc: impl serde::Serialize, summary: String, code: u8) -> CmdResult {
        Ok(Output {
            doc: serde_json::to_value(doc)?,
            text: None,
            summary,
            code,
        })
    }
}

/// Reads input files, hashing their bytes in order of use.
#[derive(Default)]
struct Inputs {
    hasher: Sha256,
}

impl Inputs {
    fn text(&mut self, path: &Path) -> Result<String, InputError> {
        let mut bytes = Vec::new();
        if path.as_os_str() == "-" {
            io::stdin().read_to_end(&mut bytes)?;
        } else {
            bytes = fs::read(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
        }
        self.hasher.update(&bytes);
        String::from_utf8(bytes).map_err(|_| InputError(format!("{}: not UTF-8", path.display())))
    }

    fn graph(&mut self, path: &Path) -> Result<Graph, InputError> {
        let text = self.text(path)?;
        parse_graph(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))
    }

    fn subset(&mut self, path: Option<&Path>, g: &Graph) -> Result<VertexSet, InputError> {
        match path {
            Some(p) => Ok(parse_subset(&self.text(p)?, g.n())?),
            None => Ok(VertexSet::full(g.n())),
        }
    }

    fn lbounds(&mut self, path: Option<&Path>, g: &Graph) -> Result<LBounds, InputError> {
        match path {
            Some(p) => Ok(parse_lbounds(&self.text(p)?, g.n())?),
            None => Ok(LBounds::uniform(g.n(), 1)),
        }
    }

    fn digest(self) -> String {
        self.hasher
            .finalize()
            .iter()
            .fold(String::new(), |mut s, b| {
                let _ = write!(s, "{b:02x}");
                s
            })
    }
}

fn cmd_cover(inp: &mut Inputs, graph: &Path, k: usize, subset: Option<&Path>) -> CmdResult {
    let g = inp.graph(graph)?;
    let u = inp.subset(subset, &g)?;
    let r = solve(&g, k, &u)?;
    let summary = match &r.witness {
        None => format!("{k} matchings cover all {} target vertices", u.len()),
        Some(c) => format!(
            "no matching-{k}-cover: {} uncovered; stable set of {} with {} neighbours",
            r.uncovered.len(),
            c.s.len(),
            c.n_of_s.len()
        ),
    };
    let code = if r.is_feasible() { 0 } else { 1 };
    Output::json(CoverDoc::from_solve(&r), summary, code)
}

fn min_k_doc(g: &Graph, distinguish_k1: bool) -> Result<(CoverDoc, String, u8), InputError> {
    match min_k(g, distinguish_k1) {
        Ok(r) => {
            let per_k: Vec<[usize; 2]> =
                r.augmentations_per_k.iter().map(|&(k, a)| [k, a]).collect();
            let doc = CoverDoc::from_decomposition(
                &r.decomposition,
                &VertexSet::new(),
                r.lower_bound.as_ref(),
            )
            .with("augmentations_per_k", serde_json::to_value(per_k)?);
            Ok((doc, format!("least k = {}", r.k), 0))
        }
        Err(Error::IsolatedVertex { vertex }) => {
            // S = {v} with N(S) empty rules out every k; 1 is recorded
            let doc = CoverDoc {
                feasible: false,
                k: None,
                matchings: Vec::new(),
                uncovered: vec![vertex],
                certificate: Some(CertDoc {
                    s: vec![vertex],
                    n_of_s: Vec::new(),
                    k: 1,
                }),
                extra: Default::default(),
            };
            Ok((doc, format!("vertex {vertex} is isolated; no k works"), 1))
        }
        Err(e) => Err(e.into()),
    }
}

fn cmd_min_k(inp: &mut Inputs, graph: &Path, distinguish_k1: bool) -> CmdResult {
    let g = inp.graph(graph)?;
    let (doc, summary, code) = min_k_doc(&g, distinguish_k1)?;
    Output::json(doc, summary, code)
}

fn cmd_weighted(inp: &mut Inputs, graph: &Path, weights: &Path, k: usize) -> CmdResult {
    let g = inp.graph(graph)?;
    let w = parse_weights(&inp.text(weights)?, &g)
        .map_err(|e| InputError(format!("{}: {e}", weights.display())))?;
    match min_weight_matching_k_cover(&g, k, &w)? {
        Outcome::Found(c) => {
            let total = c.total_weight.to_string();
            let doc = CoverDoc::from_decomposition(&c.decomposition, &VertexSet::new(), None)
                .with("total_weight", total.clone());
            Output::json(doc, format!("minimum weight {total}"), 0)
        }
        Outcome::Obstructed(_) => {
            // the solver's partial cover keeps the document checkable
            let r = solve(&g, k, &VertexSet::full(g.n()))?;
            let doc = CoverDoc::from_solve(&r).with("total_weight", Value::Null);
            Output::json(doc, format!("no matching-{k}-cover exists"), 1)
        }
    }
}

fn hk_doc(kind: &str, k: usize, outcome: Outcome<HKCover>) -> CmdResult {
    match outcome {
        Outcome::Found(c) => {
            let members: Vec<_> = c.members.iter().map(|m| edge_pairs(m)).collect();
            let doc = json!({
                "feasible": true,
                "k": k,
                "kind": kind,
                "members": members,
                "certificate": null,
            });
            Output::json(doc, format!("{kind}: {k} members cover the graph"), 0)
        }
        Outcome::Obstructed(c) => {
            let doc = json!({
                "feasible": false,
                "k": k,
                "kind": kind,
                "members": [],
                "certificate": CertDoc::from_cert(&c),
            });
            Output::json(doc, format!("{kind}: no cover with {k} members"), 1)
        }
    }
}

fn cmd_variant(
    inp: &mut Inputs,
    kind: VariantKind,
    graph: &Path,
    k: usize,
    lbounds: Option<&Path>,
) -> CmdResult {
    let g = inp.graph(graph)?;
    match kind {
        VariantKind::TwoMatching => hk_doc("2matching", k, two_matching_k_cover(&g, k)?),
        VariantKind::TwoStar => hk_doc("2star", k, two_star_k_cover(&g, k)?),
        VariantKind::Path => hk_doc("path", k, path_packing_k_cover(&g, k)?),
        VariantKind::Lbounded => {
            let l = inp.lbounds(lbounds, &g)?;
            match l_bounded_cover(&g, &l, k)? {
                Some(c) => {
                    let members: Vec<_> = c.matchings.iter().map(|m| edge_pairs(m)).collect();
                    let doc = json!({
                        "feasible": true,
                        "k": k,
                        "kind": "lbounded",
                        "members": members,
                        "multiplicity": c.multiplicity,
                    });
                    Output::json(
                        doc,
                        format!("lbounded: {k} disjoint matchings meet the bounds"),
                        0,
                    )
                }
                None => {
                    let doc = json!({
                        "feasible": false,
                        "k": k,
                        "kind": "lbounded",
                        "members": [],
                        "multiplicity": null,
                    });
                    Output::json(
                        doc,
                        format!("lbounded: no {k} disjoint matchings meet the bounds"),
                        1,
                    )
                }
            }
        }
    }
}

fn need_k(k: Option<usize>) -> Result<usize, InputError> {
    k.ok_or_else(|| InputError("this query needs --k".into()))
}

fn cmd_oracle(
    inp: &mut Inputs,
    query: OracleQuery,
    graph: &Path,
    k: Option<usize>,
    subset: Option<&Path>,
    weights: Option<&Path>,
    lbounds: Option<&Path>,
) -> CmdResult {
    let g = inp.graph(graph)?;
    match query {
        OracleQuery::MaxDeficit => {
            let k = need_k(k)?;
            let u = inp.subset(subset, &g)?;
            let r = oracle::brute_max_deficit(&g, k, &u)?;
            let n_of_s = matchcover::neighborhood(&g, &r.argmax_set);
            let doc = json!({
                "k": k,
                "max_deficit": r.max_deficit,
                "S": set(&r.argmax_set),
                "N_of_S": set(&n_of_s),
                "ratio_max": r.ratio_max,
                "ratio_S": r.ratio_argmax.as_ref().map(set),
            });
            Output::json(doc, format!("max deficit {} for k = {k}", r.max_deficit), 0)
        }
        OracleQuery::MatchingNumber => {
            let nu = oracle::brute_matching_number(&g)?;
            Output::json(
                json!({ "matching_number": nu }),
                format!("matching number {nu}"),
                0,
            )
        }
        OracleQuery::MinK => {
            let k = oracle::brute_min_k(&g)?;
            Output::json(json!({ "min_k": k }), format!("least k = {k}"), 0)
        }
        OracleQuery::MinWeight => {
            let k = need_k(k)?;
            let path = weights.ok_or_else(|| InputError("min-weight needs --weights".into()))?;
            let w = parse_weights(&inp.text(path)?, &g)?;
            let best = oracle::brute_min_weight_cover(&g, k, &w)?;
            let summary = match &best {
                Some(t) => format!("minimum weight {t}"),
                None => format!("no matching-{k}-cover"),
            };
            let doc = json!({ "k": k, "total_weight": best.map(|t| t.to_string()) });
            Output::json(doc, summary, 0)
        }
        OracleQuery::LkDeficit => {
            let k = need_k(k)?;
            let l = inp.lbounds(lbounds, &g)?;
            let (deficit, s) = oracle::brute_lk_deficit(&g, &l, k)?;
            let doc = json!({ "k": k, "max_deficit": deficit, "S": set(&s) });
            Output::json(doc, format!("(l,k) deficit {deficit}"), 0)
        }
    }
}

fn cmd_linegraph(inp: &mut Inputs, graph: &Path) -> CmdResult {
    let h = inp.graph(graph)?;
    let lg = line_graph(&h);
    let (cover, summary, code) = min_k_doc(&h, true)?;
    let cliques: Vec<Value> = lg.cliques.iter().map(set).collect();
    let doc = json!({
        "line_graph": { "n": lg.graph.n(), "edges": edge_pairs(lg.graph.edges()) },
        "nodes": edge_pairs(h.edges()),
        "cliques": cliques,
        "min_k": cover,
    });
    let summary = format!(
        "line graph: {} nodes, {} edges, {} cliques; {summary}",
        lg.graph.n(),
        lg.graph.m(),
        lg.cliques.len()
    );
    Output::json(doc, summary, code)
}

fn cmd_verify(inp: &mut Inputs, graph: &Path, document: &Path, subset: Option<&Path>) -> CmdResult {
    let g = inp.graph(graph)?;
    let d: CoverDoc = serde_json::from_str(&inp.text(document)?)
        .map_err(|e| InputError(format!("{}: {e}", document.display())))?;
    let u = inp.subset(subset, &g)?;
    let mut checks = serde_json::Map::new();
    if let Some(k) = d.k {
        let edges = d.matchings_as_edges();
        let ok = match MatchingDecomposition::new(k, edges) {
            Ok(dec) => {
                let uncovered: VertexSet = d.uncovered.iter().copied().collect();
                let in_graph = dec.edges().iter().all(|e| g.has_edge(e.0, e.1));
                in_graph
                    && d.matchings.len() == k
                    && uncovered.is_disjoint(&dec.covered)
                    && uncovered.is_subset(&u)
                    && u.iter()
                        .all(|v| dec.covered.contains(v) || uncovered.contains(v))
                    && d.feasible == uncovered.is_empty()
                    && (!d.feasible || verify_cover(&g, &dec, &u)?)
            }
            Err(_) => false,
        };
        checks.insert("cover".into(), ok.into());
    }
    if let Some(c) = &d.certificate {
        let cert = c.to_cert();
        let within = subset.is_some().then_some(&u);
        checks.insert(
            "certificate".into(),
            verify_certificate(&g, &cert, within).into(),
        );
    }
    if checks.is_empty() {
        return Err(InputError(
            "document has neither a cover nor a certificate".into(),
        ));
    }
    let valid = checks.values().all(|v| v == &Value::Bool(true));
    let summary = if valid {
        "document is valid"
    } else {
        "document is NOT valid"
    };
    Output::json(
        json!({ "valid": valid, "checks": checks }),
        summary.into(),
        if valid { 0 } else { 1 },
    )
}

fn cmd_bench(family: Family, sizes: &[usize], seed: u64, distinguish_k1: bool) -> CmdResult {
    if let Some(&n) = sizes.iter().find(|&&n| n < 2) {
        return Err(InputError(format!(
            "size {n} is too small (need at least 2)"
        )));
    }
    let mut csv = String::from("family,n,m,k,time_ms,augmentations,max_augmentations_per_k\n");
    let mut rows = Vec::new();
    for &n in sizes {
        let g = family.generate(n, seed);
        let start = Instant::now();
        let r = min_k(&g, distinguish_k1)?;
        let ms = start.elapsed().as_secs_f64() * 1e3;
        let total: usize = r.augmentations_per_k.iter().map(|p| p.1).sum();
        let most = r.augmentations_per_k.iter().map(|p| p.1).max().unwrap_or(0);
        let _ = writeln!(csv, "{family},{n},{},{},{ms:.3},{total},{most}", g.m(), r.k);
        rows.push(json!({
            "family": family.to_string(),
            "n": n,
            "m": g.m(),
            "k": r.k,
            "time_ms": ms,
            "augmentations": total,
            "max_augmentations_per_k": most,
        }));
    }
    Ok(Output {
        doc: Value::Array(rows),
        text: Some(csv),
        summary: format!("{} {family} instances, seed {seed}", sizes.len()),
        code: 0,
    })
}

fn dispatch(cmd: &Command, inp: &mut Inputs) -> CmdResult {
    match cmd {
        Command::Cover { graph, k, subset } => cmd_cover(inp, graph, *k, subset.as_deref()),
        Command::MinK {
            graph,
            distinguish_k1,
        } => cmd_min_k(inp, graph, *distinguish_k1),
        Command::Weighted { graph, weights, k } => cmd_weighted(inp, graph, weights, *k),
        Command::Variant {
            kind,
            graph,
            k,
            lbounds,
        } => cmd_variant(inp, *kind, graph, *k, lbounds.as_deref()),
        Command::Oracle {
            query,
            graph,
            k,
            subset,
            weights,
            lbounds,
        } => cmd_oracle(
            inp,
            *query,
            graph,
            *k,
            subset.as_deref(),
            weights.as_deref(),
            lbounds.as_deref(),
        ),
        Command::Linegraph { graph } => cmd_linegraph(inp, graph),
        Command::Verify {
            graph,
            document,
            subset,
        } => cmd_verify(inp, graph, document, subset.as_deref()),
        Command::Bench {
            family,
            sizes,
            seed,
            distinguish_k1,
        } => cmd_bench((*family).into(), sizes, *seed, *distinguish_k1),
    }
}

fn run(cli: Cli) -> Result<u8, InputError> {
    let mut inputs = Inputs::default();
    let start = Instant::now();
    let out = dispatch(&cli.command, &mut inputs)?;
    let wall_ms = start.elapsed().as_secs_f64() * 1e3;
    match &out.text {
        Some(t) => print!("{t}"),
        None => println!("{}", serde_json::to_string_pretty(&out.doc)?),
    }
    eprintln!("{}", out.summary);
    if let Some(path) = &cli.report {
        let seed = match &cli.command {
            Command::Bench { seed, .. } => Some(*seed),
            _ => None,
        };
        let report = json!({
            "command": std::env::args().collect::<Vec<_>>(),
            "input_sha256": inputs.digest(),
            "seed": seed,
            "wall_time_ms": wall_ms,
            "exit_code": out.code,
            "outcome": out.doc,
        });
        fs::write(path, serde_json::to_string_pretty(&report)? + "\n")
            .map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    }
    Ok(out.code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    // a panic is a defect, but the exit-code contract stays within {0, 1, 2}
    match std::panic::catch_unwind(|| run(cli)) {
        Ok(Ok(code)) => ExitCode::from(code),
        Ok(Err(InputError(msg))) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(_) => ExitCode::from(2),
    }
}
