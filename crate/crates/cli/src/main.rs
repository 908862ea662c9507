use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use cages::bounds::BoundsRow;
use cages::constructions::{
    amalgamate, canonical_double_cover, circulant, delete_edges_add_vertices, delete_vertices,
    gdgp, moore_tree_double_with, quartic_parity_graph, remove_biggs_tree, remove_perfect_matching,
    subdivide_merge, subdivide_three, subdivide_two, AmalgamationMode, CirculantSpec, GdgpSpec,
};
use cages::enumerate::{enumerate_regular_each, EnumSpec};
use cages::graph::{decode_graph6, encode_graph6, girth};
use cages::search::DEFAULT_BUDGET;
use cages::spectrum::{
    check_kg_graph, load_seeds, read_citations, spectrum_search, Construction, Generator,
    SpectrumConfig,
};
use cages::{Built, Edge, Error, Graph, Result, SearchConfig};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "cages", version, about = "Regular graphs of prescribed girth")]
struct Cli {
    /// Search budget per construction call (overrides CAGES_BUDGET).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    budget: Option<u64>,
    /// Seed for randomized search order; omit for lexicographic order.
    #[arg(long, global = true)]
    rng_seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that every graph6 line is a connected (K,G)-graph.
    Verify {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        g: usize,
        file: PathBuf,
    },
    /// Print order, degree profile and girth of every graph6 line.
    Girth { file: PathBuf },
    /// Run one construction on every input graph.
    Construct {
        name: ConstructName,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Girth floor for the output; defaults to the input girth.
        #[arg(long)]
        target: Option<usize>,
        #[arg(long)]
        edges: Option<usize>,
        #[arg(long)]
        vertices: Option<usize>,
        #[arg(long, default_value_t = 0)]
        radius: usize,
        #[arg(long, default_value_t = 0)]
        root: usize,
        /// Second input for amalgamation (first graph used); defaults to --in.
        #[arg(long)]
        in2: Option<PathBuf>,
        #[arg(long, value_delimiter = ',', num_args = 2)]
        e1: Option<Vec<usize>>,
        #[arg(long, value_delimiter = ',', num_args = 2)]
        e2: Option<Vec<usize>>,
        #[arg(long, value_enum, default_value_t = Mode::Cross)]
        mode: Mode,
    },
    /// Circulant graph G(N, S).
    Circulant {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Group divisible generalized Petersen graph GDGP_M(N; K).
    Gdgp {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long = "K", value_delimiter = ',', required = true)]
        jumps: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Quartic girth-6 graph of even order N >= 26.
    Parity46 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// All connected K-regular graphs of order N with girth >= G.
    Enumerate {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        min_girth: usize,
    },
    /// Spectrum of orders for (K,G) up to the horizon.
    Spectrum {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        g: usize,
        #[arg(long)]
        horizon: usize,
        /// Directory holding k{K}g{G}/*.g6.
        #[arg(long)]
        seeds: PathBuf,
        #[arg(long)]
        citations: Option<PathBuf>,
        /// Comma-separated construction names, `subdivisions` or `all`.
        #[arg(long, default_value = "all")]
        constructions: String,
        /// Circulant generator jumps; negative values count from n.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        circulant: Option<Vec<i64>>,
        /// Enable the quartic girth-6 parity family.
        #[arg(long)]
        parity46: bool,
        #[arg(long)]
        pool_width: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Moore and Sauer bounds, parity rule and excess-excluded orders.
    Bounds {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        g: u64,
        /// Largest order checked by the excess filters (default: Sauer bound).
        #[arg(long)]
        horizon: Option<u64>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstructName {
    SubdivideTwo,
    SubdivideThree,
    SubdivideMerge,
    DeleteEdgesAddVertices,
    DeleteVertices,
    RemoveBiggsTree,
    MooreTreeDouble,
    CanonicalDoubleCover,
    RemovePerfectMatching,
    Amalgamate,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Cross,
    Parallel,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let search = match search_config(&cli) {
        Ok(s) => s,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli.command, search, &mut out);
    let flushed = out.flush().map_err(io_err);
    match result.and_then(|code| flushed.map(|()| code)) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}: {e}", e.name());
            ExitCode::from(1)
        }
    }
}

fn search_config(cli: &Cli) -> std::result::Result<SearchConfig, String> {
    let budget = match (cli.budget, std::env::var("CAGES_BUDGET")) {
        (Some(b), _) => b,
        (None, Ok(v)) => match v.trim().parse::<u64>() {
            Ok(b) if b > 0 => b,
            _ => {
                return Err(format!(
                    "CAGES_BUDGET must be a positive integer, got {v:?}"
                ))
            }
        },
        (None, Err(_)) => DEFAULT_BUDGET,
    };
    Ok(SearchConfig {
        budget,
        rng_seed: cli.rng_seed,
    })
}

fn io_err(e: io::Error) -> Error {
    Error::Io(e.to_string())
}

/// Non-empty graph6 lines with their 1-based line numbers.
fn graph6_lines(path: &Path) -> Result<impl Iterator<Item = Result<(usize, String)>>> {
    let file = File::open(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    Ok(BufReader::new(file)
        .lines()
        .enumerate()
        .filter_map(|(i, line)| match line {
            Ok(l) if l.trim().is_empty() => None,
            Ok(l) => Some(Ok((i + 1, l.trim().to_string()))),
            Err(e) => Some(Err(io_err(e))),
        }))
}

fn first_graph(path: &Path) -> Result<Graph> {
    match graph6_lines(path)?.next() {
        Some(line) => decode_graph6(&line?.1),
        None => Err(Error::Io(format!("{}: no graphs", path.display()))),
    }
}

/// Writes graph6 lines to `path` and recipe lines to `path.recipe`.
struct BuiltSink {
    graphs: BufWriter<File>,
    recipes: BufWriter<File>,
    count: usize,
}

impl BuiltSink {
    fn create(path: &Path) -> Result<BuiltSink> {
        let open = |p: &Path| {
            File::create(p)
                .map(BufWriter::new)
                .map_err(|e| Error::Io(format!("{}: {e}", p.display())))
        };
        let mut recipe_path = path.as_os_str().to_owned();
        recipe_path.push(".recipe");
        Ok(BuiltSink {
            graphs: open(path)?,
            recipes: open(Path::new(&recipe_path))?,
            count: 0,
        })
    }

    fn push(&mut self, b: &Built) -> Result<()> {
        writeln!(self.graphs, "{}", encode_graph6(&b.graph)?).map_err(io_err)?;
        writeln!(self.recipes, "{}", b.recipe).map_err(io_err)?;
        self.count += 1;
        Ok(())
    }

    fn finish(mut self) -> Result<usize> {
        self.graphs.flush().map_err(io_err)?;
        self.recipes.flush().map_err(io_err)?;
        Ok(self.count)
    }
}

fn degree_profile(g: &Graph) -> String {
    let mut counts = std::collections::BTreeMap::new();
    for d in g.degree_sequence() {
        *counts.entry(d).or_insert(0usize) += 1;
    }
    counts
        .iter()
        .map(|(d, c)| format!("{d}^{c}"))
        .collect::<Vec<_>>()
        .join(",")
}

fn edge_arg(g: &Graph, e: &Option<Vec<usize>>) -> Result<Edge> {
    match e.as_deref() {
        Some([a, b]) => g.edge(*a, *b),
        _ => g
            .edges()
            .first()
            .copied()
            .ok_or_else(|| Error::ParameterOutOfRange("graph has no edges".into())),
    }
}

fn emit_single(b: &Built, path: Option<&Path>, w: &mut impl Write) -> Result<()> {
    writeln!(w, "{}", encode_graph6(&b.graph)?).map_err(io_err)?;
    if let Some(p) = path {
        let mut sink = BuiltSink::create(p)?;
        sink.push(b)?;
        sink.finish()?;
    }
    Ok(())
}

fn run(command: Command, search: SearchConfig, w: &mut impl Write) -> Result<ExitCode> {
    match command {
        Command::Verify { k, g, file } => {
            let (mut total, mut failed) = (0, 0);
            for line in graph6_lines(&file)? {
                let (no, text) = line?;
                total += 1;
                let verdict = decode_graph6(&text)
                    .map_err(|e| format!("{}: {e}", e.name()))
                    .and_then(|graph| check_kg_graph(&graph, k, g).map_err(|r| r.to_string()));
                match verdict {
                    Ok(()) => writeln!(w, "line {no}: PASS"),
                    Err(why) => {
                        failed += 1;
                        writeln!(w, "line {no}: FAIL {why}")
                    }
                }
                .map_err(io_err)?;
            }
            if failed > 0 {
                w.flush().map_err(io_err)?;
                eprintln!("error: VerificationFailed: {failed} of {total} graphs rejected");
                return Ok(ExitCode::from(1));
            }
        }
        Command::Girth { file } => {
            for line in graph6_lines(&file)? {
                let (no, text) = line?;
                let graph = decode_graph6(&text)?;
                writeln!(
                    w,
                    "line {no}: order={} degrees={} girth={}",
                    graph.order(),
                    degree_profile(&graph),
                    girth(&graph)
                )
                .map_err(io_err)?;
            }
        }
        Command::Construct {
            name,
            input,
            out,
            target,
            edges,
            vertices,
            radius,
            root,
            in2,
            e1,
            e2,
            mode,
        } => {
            let second = match (name, &in2) {
                (ConstructName::Amalgamate, Some(p)) => Some(first_graph(p)?),
                _ => None,
            };
            let mut sink = BuiltSink::create(&out)?;
            for line in graph6_lines(&input)? {
                let graph = decode_graph6(&line?.1)?;
                let floor = match target {
                    Some(t) => t,
                    None => girth(&graph).cycle_len().ok_or(Error::Acyclic)?,
                };
                let need = |x: Option<usize>, flag: &str| {
                    x.ok_or_else(|| Error::ParameterOutOfRange(format!("{flag} is required")))
                };
                let outputs = match name {
                    ConstructName::SubdivideTwo => subdivide_two(&graph, floor, &search)?,
                    ConstructName::SubdivideThree => subdivide_three(&graph, floor, &search)?,
                    ConstructName::SubdivideMerge => subdivide_merge(&graph, floor, &search)?,
                    ConstructName::DeleteEdgesAddVertices => delete_edges_add_vertices(
                        &graph,
                        need(edges, "--edges")?,
                        need(vertices, "--vertices")?,
                        floor,
                        &search,
                    )?,
                    ConstructName::DeleteVertices => {
                        delete_vertices(&graph, need(vertices, "--vertices")?, floor, &search)?
                    }
                    ConstructName::RemoveBiggsTree => vec![remove_biggs_tree(&graph, &search)?],
                    ConstructName::MooreTreeDouble => {
                        vec![moore_tree_double_with(&graph, radius, root, &search)?]
                    }
                    ConstructName::CanonicalDoubleCover => vec![canonical_double_cover(&graph)],
                    ConstructName::RemovePerfectMatching => vec![remove_perfect_matching(&graph)?],
                    ConstructName::Amalgamate => {
                        let other = second.as_ref().unwrap_or(&graph);
                        let mode = match mode {
                            Mode::Cross => AmalgamationMode::Cross,
                            Mode::Parallel => AmalgamationMode::Parallel,
                        };
                        vec![amalgamate(
                            &graph,
                            other,
                            edge_arg(&graph, &e1)?,
                            edge_arg(other, &e2)?,
                            mode,
                        )?]
                    }
                };
                for b in &outputs {
                    sink.push(b)?;
                }
            }
            let count = sink.finish()?;
            writeln!(w, "{count} graphs written to {}", out.display()).map_err(io_err)?;
        }
        Command::Circulant { n, set, out } => {
            let b = circulant(&CirculantSpec::new(n, set)?);
            emit_single(&b, out.as_deref(), w)?;
        }
        Command::Gdgp { m, n, jumps, out } => {
            let b = gdgp(&GdgpSpec::new(m, n, jumps)?)?;
            emit_single(&b, out.as_deref(), w)?;
        }
        Command::Parity46 { n, out } => {
            let b = quartic_parity_graph(n)?;
            emit_single(&b, out.as_deref(), w)?;
        }
        Command::Enumerate { k, n, min_girth } => {
            let spec = EnumSpec::new(k, n, min_girth).with_cap(search.budget);
            let mut failure = None;
            let count = enumerate_regular_each(&spec, &mut |g| {
                if failure.is_none() {
                    failure = encode_graph6(g)
                        .and_then(|s| writeln!(w, "{s}").map_err(io_err))
                        .err();
                }
            })?;
            if let Some(e) = failure {
                return Err(e);
            }
            writeln!(w, "{count} graphs").map_err(io_err)?;
        }
        Command::Spectrum {
            k,
            g,
            horizon,
            seeds,
            citations,
            constructions,
            circulant,
            parity46,
            pool_width,
            out,
        } => {
            let mut cfg = SpectrumConfig {
                constructions: Construction::parse_list(&constructions)?,
                search,
                ..SpectrumConfig::default()
            };
            if let Some(jumps) = circulant {
                cfg.generators.push(Generator::Circulant(jumps));
            }
            if parity46 {
                cfg.generators.push(Generator::QuarticParity);
            }
            if let Some(p) = citations {
                cfg.citations = read_citations(&p)?;
            }
            if let Some(width) = pool_width {
                cfg.pool_width = width;
            }
            let seeds = load_seeds(&seeds, k, g)?;
            let report = spectrum_search(k, g, &seeds, horizon, &cfg)?;
            match out {
                Some(p) => {
                    std::fs::write(&p, report.to_string())
                        .map_err(|e| Error::Io(format!("{}: {e}", p.display())))?;
                    writeln!(w, "{}", report.summary()).map_err(io_err)?;
                }
                None => write!(w, "{report}").map_err(io_err)?,
            }
        }
        Command::Bounds { k, g, horizon } => {
            let row = BoundsRow::new(k, g)?;
            writeln!(w, "Moore={}", row.moore).map_err(io_err)?;
            writeln!(w, "Sauer={}", row.sauer).map_err(io_err)?;
            let parity = if row.parity_even_required {
                "even orders only"
            } else {
                "any order"
            };
            writeln!(w, "parity: {parity}").map_err(io_err)?;
            let horizon = horizon.unwrap_or(row.sauer);
            let excluded: Vec<String> = row
                .excess_excluded(horizon)
                .iter()
                .map(u64::to_string)
                .collect();
            let list = if excluded.is_empty() {
                "none".to_string()
            } else {
                excluded.join(",")
            };
            writeln!(w, "excess-excluded up to {horizon}: {list}").map_err(io_err)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}
