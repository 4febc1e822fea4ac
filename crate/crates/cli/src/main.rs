use std::fs;
use std::io::{self, BufRead, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};
use wordrep::{
    emit_dot_graph, emit_dot_orientation, emit_edge_list, emit_graph6, find_word_bruteforce, generate, parse_edge_list,
    parse_graph6, FamilySpec, Graph, Orientation, Recognizer, ReportDocument, SearchConfig, SearchError, Word,
    WordError,
};

/// Word-representability and comparability of small graphs.
#[derive(Parser)]
#[command(name = "wordrep", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a member of one of Gallai's families, e.g. `g1:4` or `h7`.
    Gen {
        spec: String,
        #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
        format: GraphFormat,
    },
    /// Decide a property of one graph; exit 1 when it does not hold.
    Check {
        property: Property,
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        search: SearchArgs,
        /// Arc list `u v` per line (for `semitransitive-cert`).
        #[arg(long)]
        orientation: Option<PathBuf>,
    },
    /// Print a semi-transitive or transitive orientation; exit 1 if none exists.
    Orient {
        kind: OrientKind,
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long, value_enum, default_value_t = CertFormat::Dot)]
        format: CertFormat,
    },
    /// Append a vertex adjacent to every other vertex.
    Cone {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
        format: GraphFormat,
    },
    /// Words: alternation, the represented graph, brute-force search.
    Word {
        #[command(subcommand)]
        command: WordCommand,
    },
    /// Decide a property for every graph6 line of the input, in input order.
    Filter {
        property: Property,
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        search: SearchArgs,
        /// Worker threads (default: all cores).
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Classify every family member in the standard table and print JSON reports.
    ReproducePaper {
        /// Largest family parameter to include.
        #[arg(long, default_value_t = 4)]
        nmax: usize,
        #[command(flatten)]
        search: SearchArgs,
    },
}

#[derive(Subcommand)]
enum WordCommand {
    /// Alternation of every letter pair; with `--graph`, whether the word represents it.
    Check {
        word: String,
        #[arg(long)]
        graph: Option<PathBuf>,
    },
    /// The graph a word represents (letters become vertices 0..k-1).
    Graph {
        word: String,
        #[arg(long, value_enum, default_value_t = GraphFormat::Edgelist)]
        format: GraphFormat,
    },
    /// Shortest word with at most `kmax` copies of each letter.
    Find {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 3)]
        kmax: usize,
    },
}

#[derive(clap::Args)]
struct Input {
    /// Read the graph from a file instead of stdin (graph6 or edge list).
    #[arg(long, short)]
    input: Option<PathBuf>,
}

#[derive(clap::Args)]
struct SearchArgs {
    /// Require this vertex to be a source of the orientation.
    #[arg(long)]
    source: Option<usize>,
    /// Search-tree node budget.
    #[arg(long)]
    budget: Option<u64>,
}

impl SearchArgs {
    fn recognizer(&self) -> Recognizer {
        let defaults = SearchConfig::default();
        Recognizer::new(SearchConfig {
            fixed_source: self.source,
            node_budget: self.budget.unwrap_or(defaults.node_budget),
            ..defaults
        })
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Graph6,
    Edgelist,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum CertFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrientKind {
    Semitransitive,
    Transitive,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Property {
    Wr,
    Comparability,
    SemitransitiveCert,
    MinimalNwr,
    MinimalNcomp,
}

impl Property {
    fn key(self) -> &'static str {
        match self {
            Property::Wr => "word_representable",
            Property::Comparability => "comparability",
            Property::SemitransitiveCert => "semi_transitive",
            Property::MinimalNwr => "minimal_non_word_representable",
            Property::MinimalNcomp => "minimal_non_comparability",
        }
    }

    fn decide(self, r: &Recognizer, g: &Graph) -> Result<bool, SearchError> {
        match self {
            Property::Wr => r.is_word_representable(g),
            Property::Comparability => r.is_comparability(g),
            Property::MinimalNwr => r.is_minimal_non_word_representable(g),
            Property::MinimalNcomp => r.is_minimal_non_comparability(g),
            Property::SemitransitiveCert => unreachable!("needs an orientation"),
        }
    }
}

enum Failure {
    Usage(String),
    Budget(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn search_failure(e: SearchError) -> Failure {
    match e {
        SearchError::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
        other => Failure::Usage(other.to_string()),
    }
}

const EXIT_FALSE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("undecided: {msg}");
            ExitCode::from(EXIT_BUDGET)
        }
    }
}

fn read_text(path: Option<&PathBuf>) -> Result<String, Failure> {
    let mut text = String::new();
    match path {
        Some(p) => text = fs::read_to_string(p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?,
        None => {
            io::stdin().read_to_string(&mut text)?;
        }
    }
    Ok(text)
}

/// graph6 when the first non-blank line is a single token, otherwise an edge list.
fn parse_graph_text(text: &str) -> Result<Graph, Failure> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        None => Err(Failure::Usage("no graph on input".into())),
        Some(l) if l.split_whitespace().count() == 1 && !l.chars().all(|c| c.is_ascii_digit()) => Ok(parse_graph6(l)?),
        Some(_) => Ok(parse_edge_list(text)?),
    }
}

fn read_graph(input: &Input) -> Result<Graph, Failure> {
    parse_graph_text(&read_text(input.input.as_ref())?)
}

fn format_graph(g: &Graph, labels: Option<&[String]>, format: GraphFormat) -> String {
    match format {
        GraphFormat::Graph6 => format!("{}\n", emit_graph6(g)),
        GraphFormat::Edgelist => emit_edge_list(g),
        GraphFormat::Dot => emit_dot_graph(g, labels),
    }
}

fn arcs_json(o: &Orientation) -> Value {
    json!(o.arcs().map(|(u, v)| [u, v]).collect::<Vec<_>>())
}

fn print(s: &str) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    out.write_all(s.as_bytes())?;
    out.flush()?;
    Ok(())
}

fn print_json(v: &Value) -> Result<(), Failure> {
    print(&format!("{}\n", serde_json::to_string(v)?))
}

fn answer(holds: bool) -> ExitCode {
    if holds {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FALSE)
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Gen { spec, format } => {
            let spec: FamilySpec = spec.parse()?;
            let lg = generate(&spec)?;
            print(&format_graph(&lg.graph, Some(&lg.labels), format))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { property, input, search, orientation } => {
            let g = read_graph(&input)?;
            let g6 = emit_graph6(&g);
            if property == Property::SemitransitiveCert {
                let path = orientation.ok_or_else(|| Failure::Usage("--orientation is required".into()))?;
                let o = read_orientation(&g, &path)?;
                let mut doc =
                    json!({ "graph": g6, "acyclic": o.is_acyclic(), "semi_transitive": o.is_semi_transitive() });
                if let Ok(Some(v)) = o.violating_path() {
                    doc["violating_path"] = json!(v.path.vertices);
                    doc["missing"] = json!([v.missing.0, v.missing.1]);
                }
                print_json(&doc)?;
                return Ok(answer(o.is_semi_transitive()));
            }
            let r = search.recognizer();
            match property.decide(&r, &g) {
                Ok(holds) => {
                    print_json(&json!({ "graph": g6, property.key(): holds }))?;
                    Ok(answer(holds))
                }
                Err(e) => {
                    if matches!(e, SearchError::BudgetExceeded { .. }) {
                        print_json(&json!({ "graph": g6, property.key(): Value::Null, "budget_exceeded": true }))?;
                    }
                    Err(search_failure(e))
                }
            }
        }
        Command::Orient { kind, input, search, format } => {
            let g = read_graph(&input)?;
            let r = search.recognizer();
            let found = match kind {
                OrientKind::Semitransitive => r.exists_semi_transitive_orientation(&g),
                OrientKind::Transitive => r.exists_transitive_orientation(&g),
            }
            .map_err(search_failure)?;
            match (&found, format) {
                (Some(o), CertFormat::Dot) => print(&emit_dot_orientation(o, None))?,
                (None, CertFormat::Dot) => eprintln!("no such orientation"),
                (o, CertFormat::Json) => {
                    print_json(&json!({ "graph": emit_graph6(&g), "orientation": o.as_ref().map(arcs_json) }))?
                }
            }
            Ok(answer(found.is_some()))
        }
        Command::Cone { input, format } => {
            let g = read_graph(&input)?;
            print(&format_graph(&g.cone()?, None, format))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Word { command } => run_word(command),
        Command::Filter { property, input, search, jobs } => {
            if property == Property::SemitransitiveCert {
                return Err(Failure::Usage("filter does not take semitransitive-cert".into()));
            }
            let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs.unwrap_or(0)).build()?;
            let r = search.recognizer();
            let reader: Box<dyn BufRead> = match &input.input {
                Some(p) => Box::new(io::BufReader::new(
                    fs::File::open(p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?,
                )),
                None => Box::new(io::stdin().lock()),
            };
            filter(reader, property, &r, &pool)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::ReproducePaper { nmax, search } => {
            let r = search.recognizer();
            let mut docs = Vec::new();
            for spec in table(nmax) {
                let g = generate(&spec)?.graph;
                let report = r.classify(&g).map_err(search_failure)?;
                let doc = ReportDocument::from_report(&report, Some(&spec));
                doc.verify()?;
                docs.push(doc);
            }
            print(&format!("{}\n", serde_json::to_string_pretty(&docs)?))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn table(nmax: usize) -> Vec<FamilySpec> {
    let floors = [(1, 2), (2, 2), (3, 3), (4, 3), (5, 3), (6, 3), (7, 1), (8, 1), (9, 2)];
    let mut specs: Vec<FamilySpec> =
        floors.iter().flat_map(|&(f, lo)| (lo..=nmax).map(move |n| FamilySpec::g(f, n).unwrap())).collect();
    specs.extend((1..=11).map(|h| FamilySpec::h(h).unwrap()));
    specs
}

fn read_orientation(g: &Graph, path: &PathBuf) -> Result<Orientation, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let mut arcs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let nums: Vec<usize> = line
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<_, _>>()
            .map_err(|_| Failure::Usage(format!("orientation line {}: expected `u v`", i + 1)))?;
        match nums[..] {
            [u, v] => arcs.push((u, v)),
            _ => return Err(Failure::Usage(format!("orientation line {}: expected `u v`", i + 1))),
        }
    }
    Ok(Orientation::from_arcs(g, &arcs)?)
}

const FILTER_CHUNK: usize = 4096;

/// Evaluates chunks in parallel and writes each chunk in input order.
fn filter(
    reader: Box<dyn BufRead>,
    property: Property,
    r: &Recognizer,
    pool: &rayon::ThreadPool,
) -> Result<(), Failure> {
    let mut out = BufWriter::new(io::stdout().lock());
    let mut lines = reader.lines();
    loop {
        let chunk: Vec<String> = lines.by_ref().take(FILTER_CHUNK).collect::<Result<_, _>>()?;
        if chunk.is_empty() {
            break;
        }
        let verdicts: Vec<String> = pool.install(|| {
            chunk
                .par_iter()
                .map(|line| match parse_graph6(line) {
                    Err(e) => format!("error: {e}"),
                    Ok(g) => match property.decide(r, &g) {
                        Ok(b) => b.to_string(),
                        Err(SearchError::BudgetExceeded { .. }) => "budget".to_string(),
                        Err(e) => format!("error: {e}"),
                    },
                })
                .collect()
        });
        for (line, verdict) in chunk.iter().zip(verdicts) {
            writeln!(out, "{}\t{verdict}", line.trim())?;
        }
    }
    out.flush()?;
    Ok(())
}

fn run_word(command: WordCommand) -> Result<ExitCode, Failure> {
    match command {
        WordCommand::Check { word, graph } => {
            let g = graph.map(|p| read_text(Some(&p)).and_then(|t| parse_graph_text(&t))).transpose()?;
            let w = Word::parse(&word, g.as_ref().map(Graph::vertex_count))?;
            let k = w.alphabet_size();
            let (mut yes, mut no) = (Vec::new(), Vec::new());
            for i in 0..k {
                for j in i + 1..k {
                    let pair = [i + 1, j + 1];
                    if w.alternate(i, j)? {
                        yes.push(pair);
                    } else {
                        no.push(pair);
                    }
                }
            }
            let mut doc = json!({ "word": w.render(), "alternating": yes, "non_alternating": no });
            match g {
                Some(g) => {
                    let holds = w.represents(&g)?;
                    doc["represents"] = json!(holds);
                    print_json(&doc)?;
                    Ok(answer(holds))
                }
                None => {
                    print_json(&doc)?;
                    Ok(ExitCode::SUCCESS)
                }
            }
        }
        WordCommand::Graph { word, format } => {
            let w = Word::parse(&word, None)?;
            let g = w.graph()?;
            let labels: Vec<String> = (1..=g.vertex_count()).map(|i| i.to_string()).collect();
            print(&format_graph(&g, Some(&labels), format))?;
            Ok(ExitCode::SUCCESS)
        }
        WordCommand::Find { input, kmax } => {
            let g = read_graph(&input)?;
            match find_word_bruteforce(&g, kmax) {
                Ok(Some(w)) => {
                    print(&format!("{}\n", w.render()))?;
                    Ok(ExitCode::SUCCESS)
                }
                Ok(None) => {
                    eprintln!("no word with at most {kmax} copies of each letter");
                    Ok(ExitCode::from(EXIT_FALSE))
                }
                Err(e @ WordError::BudgetExceeded { .. }) => Err(Failure::Budget(e.to_string())),
                Err(e) => Err(e.into()),
            }
        }
    }
}
