mod error;

use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process;

use clap::{Args, Parser, Subcommand, ValueEnum};

use seqcolor::chromatic_sum::sum_report_for;
use seqcolor::coloring::{
    emit_coloring, exact_chromatic_index, misra_gries, obtain_r_coloring, parse_coloring, Method,
    EXACT_EDGE_LIMIT,
};
use seqcolor::formats::{
    emit_edge_list, emit_graph6, parse_edge_list, parse_graph6, parse_graph_auto,
};
use seqcolor::generate::{complete_bipartite, random_biregular, regular_class1, RegularFamily};
use seqcolor::oracle::{
    exact_edge_chromatic_sum, exact_max_sequential_set, OracleError, OracleOptions,
};
use seqcolor::report::{
    to_line, BoundRecord, CertificateRecord, Objective, OracleRecord, SumRecord,
};
use seqcolor::sequential::verify_sequential;
use seqcolor::{
    biregular_set_bound, edge_sum_bound, is_biregular_profile, sequential_set_bound, sequentialize,
    verify_proper, Color, Graph, Vertex,
};

use error::{CliError, ExitCode};

#[derive(Parser, Debug)]
#[command(
    name = "seqcolor",
    version,
    about = "Sequential edge colorings of near-regular Class 1 graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a graph from a named family.
    Generate(GenerateArgs),
    /// Edge-color a graph and print it in the coloring exchange format.
    Color(ColorArgs),
    /// Build a sequential coloring and certify the set-size and color-sum bounds.
    Sequentialize(SequentializeArgs),
    /// Evaluate the bounds for given n, n_r and r.
    Bound(BoundArgs),
    /// Check a coloring for properness and, optionally, a set for sequentiality.
    Verify(VerifyArgs),
    /// Exact minimum color sum and maximum sequential set by exhaustive search.
    Oracle(OracleArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Graph6,
    Edges,
}

#[derive(Args, Debug)]
struct InputArgs {
    /// Graph file; standard input when omitted or "-".
    input: Option<PathBuf>,
    /// Input format; detected from the content when omitted.
    #[arg(long, value_enum)]
    format: Option<GraphFormat>,
}

#[derive(Args, Debug)]
struct OutputArgs {
    /// Print a human-readable table instead of JSON lines.
    #[arg(long)]
    table: bool,
}

#[derive(Args, Debug)]
struct GenerateArgs {
    #[command(subcommand)]
    family: Family,
    #[arg(long, value_enum, default_value = "edges", global = true)]
    format: GraphFormat,
}

#[derive(Subcommand, Debug)]
enum Family {
    /// K_{a,b}.
    CompleteBipartite { a: usize, b: usize },
    /// Random bipartite graph with (2r-1)k vertices, degrees r-1 and r.
    Biregular {
        r: usize,
        k: usize,
        #[arg(long)]
        seed: u64,
    },
    /// An r-regular Class 1 graph: K_{r,r}, or K_{r+1} with --complete (odd r).
    RegularClass1 {
        r: usize,
        #[arg(long)]
        complete: bool,
    },
}

#[derive(Args, Debug)]
struct ColorArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Run the exact solver with at most this many colors.
    #[arg(long)]
    cap: Option<Color>,
    /// Allow the exact solver on graphs with more than 20 edges.
    #[arg(long)]
    override_size: bool,
}

#[derive(Args, Debug)]
struct SequentializeArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    output: OutputArgs,
    /// Attach exact oracle results (graphs with at most 20 edges).
    #[arg(long)]
    oracle: bool,
}

#[derive(Args, Debug)]
struct BoundArgs {
    n: u64,
    n_r: u64,
    r: u64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    graph: PathBuf,
    coloring: PathBuf,
    /// Whitespace-separated vertices claimed to be sequential.
    set: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<GraphFormat>,
}

#[derive(Args, Debug)]
struct OracleArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    output: OutputArgs,
    /// Run on graphs with more than 20 edges.
    #[arg(long)]
    override_size: bool,
}

fn main() {
    let cli = Cli::parse();
    let mut out = String::new();
    let status = match run(cli.command, &mut out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    if let Err(e) = io::stdout().write_all(out.as_bytes()) {
        eprintln!("error: {}", CliError::Write(e));
        process::exit(ExitCode::Io as i32);
    }
    process::exit(status as i32);
}

fn run(command: Command, out: &mut String) -> Result<ExitCode, CliError> {
    match command {
        Command::Generate(args) => generate(args, out),
        Command::Color(args) => color(args, out),
        Command::Sequentialize(args) => sequentialize_cmd(args, out),
        Command::Bound(args) => bound(args, out),
        Command::Verify(args) => verify(args, out),
        Command::Oracle(args) => oracle(args, out),
    }
}

fn read_source(path: Option<&Path>) -> Result<String, CliError> {
    match path {
        Some(p) if p != Path::new("-") => {
            std::fs::read_to_string(p).map_err(|source| CliError::Io {
                path: p.to_path_buf(),
                source,
            })
        }
        _ => {
            let mut text = String::new();
            io::stdin()
                .read_to_string(&mut text)
                .map_err(CliError::Stdin)?;
            Ok(text)
        }
    }
}

fn parse_graph(text: &str, format: Option<GraphFormat>) -> Result<Graph, CliError> {
    Ok(match format {
        Some(GraphFormat::Graph6) => parse_graph6(text)?,
        Some(GraphFormat::Edges) => parse_edge_list(text)?,
        None => parse_graph_auto(text)?,
    })
}

fn load_graph(input: &InputArgs) -> Result<Graph, CliError> {
    let text = read_source(input.input.as_deref())?;
    parse_graph(&text, input.format)
}

fn generate(args: GenerateArgs, out: &mut String) -> Result<ExitCode, CliError> {
    let g = match args.family {
        Family::CompleteBipartite { a, b } => complete_bipartite(a, b)?,
        Family::Biregular { r, k, seed } => random_biregular(r, k, seed)?,
        Family::RegularClass1 { r, complete } => {
            let family = if complete {
                RegularFamily::Complete
            } else {
                RegularFamily::CompleteBipartite
            };
            regular_class1(r, family)?
        }
    };
    match args.format {
        GraphFormat::Graph6 => {
            out.push_str(&emit_graph6(&g)?);
            out.push('\n');
        }
        GraphFormat::Edges => out.push_str(&emit_edge_list(&g)),
    }
    Ok(ExitCode::Ok)
}

fn color(args: ColorArgs, out: &mut String) -> Result<ExitCode, CliError> {
    let g = load_graph(&args.input)?;
    let coloring = match args.cap {
        Some(cap) => {
            if g.edge_count() > EXACT_EDGE_LIMIT && !args.override_size {
                return Err(CliError::Usage(format!(
                    "{} edges exceed the exact-solver limit of {EXACT_EDGE_LIMIT}; pass --override-size",
                    g.edge_count()
                )));
            }
            exact_chromatic_index(&g, cap)?.witness
        }
        None => match obtain_r_coloring(&g) {
            Ok(acquired) => acquired.coloring,
            Err(_) => misra_gries(&g),
        },
    };
    out.push_str(&emit_coloring(&g, &coloring));
    Ok(ExitCode::Ok)
}

fn sequentialize_cmd(args: SequentializeArgs, out: &mut String) -> Result<ExitCode, CliError> {
    let g = load_graph(&args.input)?;
    let cert = sequentialize(&g)?;
    let sums = sum_report_for(&g, &cert, args.oracle)?;
    let mut record = CertificateRecord::new(&g, &cert);
    if args.oracle {
        match exact_max_sequential_set(&g, cert.r as Color, OracleOptions::default()) {
            Ok(result) => record = record.with_oracle(&g, &result),
            Err(OracleError::TooLarge { .. }) => {}
            Err(e) => return Err(e.into()),
        }
    }
    if args.output.table {
        write_certificate_table(out, &record, &SumRecord::from(sums));
    } else {
        writeln!(out, "{}", to_line(&record)).unwrap();
        writeln!(out, "{}", to_line(&SumRecord::from(sums))).unwrap();
    }
    Ok(if cert.verified && cert.meets_bound() {
        ExitCode::Ok
    } else {
        ExitCode::VerificationFailed
    })
}

fn method_name(method: Method) -> &'static str {
    match method {
        Method::Konig => "konig",
        Method::MisraGries => "misra-gries",
        Method::Exact => "exact",
        Method::Given => "given",
    }
}

fn or_dash<T: ToString>(value: Option<T>) -> String {
    value.map_or_else(|| "-".to_string(), |v| v.to_string())
}

fn write_certificate_table(out: &mut String, cert: &CertificateRecord, sums: &SumRecord) {
    let s = &sums.report;
    let max_r = cert.oracle_max_sequential.as_ref().map(|o| o.value);
    writeln!(
        out,
        "{:>3} {:>4} {:>4} {:>5} {:>6} {:>6} {:>7} {:>8} {:>11} {:>6} {:>9} {:>6} {:>10}",
        "r",
        "n",
        "n_r",
        "swap",
        "|R|",
        "bound",
        "max|R|",
        "verified",
        "method",
        "sum",
        "sum_bound",
        "exact",
        "cap_stable"
    )
    .unwrap();
    writeln!(
        out,
        "{:>3} {:>4} {:>4} {:>5} {:>6} {:>6} {:>7} {:>8} {:>11} {:>6} {:>9} {:>6} {:>10}",
        cert.r,
        cert.n,
        cert.n_r,
        or_dash(cert.swap_color),
        cert.set_size,
        cert.bound,
        or_dash(max_r),
        cert.verified,
        method_name(cert.method),
        s.actual_sum,
        s.bound,
        or_dash(s.exact_sum),
        or_dash(s.cap_stable),
    )
    .unwrap();
}

fn bound(args: BoundArgs, out: &mut String) -> Result<ExitCode, CliError> {
    let BoundArgs { n, n_r, r, output } = args;
    if r < 1 {
        return Err(CliError::Usage("r must be at least 1".into()));
    }
    if n_r > n {
        return Err(CliError::Usage(format!("n_r = {n_r} exceeds n = {n}")));
    }
    let biregular = is_biregular_profile(n, n_r, r).then(|| biregular_set_bound(n, r));
    let record = BoundRecord {
        kind: "bound",
        n,
        n_r,
        r,
        sequential_set: sequential_set_bound(n, n_r, r),
        biregular_set: biregular,
        edge_sum: edge_sum_bound(n, n_r, r),
    };
    if output.table {
        writeln!(
            out,
            "{:>14} {:>14} {:>8}",
            "sequential_set", "biregular_set", "edge_sum"
        )
        .unwrap();
        writeln!(
            out,
            "{:>14} {:>14} {:>8}",
            record.sequential_set,
            or_dash(record.biregular_set),
            record.edge_sum
        )
        .unwrap();
    } else {
        writeln!(out, "{}", to_line(&record)).unwrap();
    }
    Ok(ExitCode::Ok)
}

fn parse_set(text: &str) -> Result<Vec<Vertex>, CliError> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .flat_map(|l| l.split(|c: char| c.is_whitespace() || c == ','))
        .filter(|tok| !tok.is_empty())
        .map(|tok| {
            tok.parse()
                .map_err(|_| CliError::Usage(format!("set file: {tok:?} is not a vertex")))
        })
        .collect()
}

fn verify(args: VerifyArgs, out: &mut String) -> Result<ExitCode, CliError> {
    let g = parse_graph(&read_source(Some(&args.graph))?, args.format)?;
    let coloring = parse_coloring(&g, &read_source(Some(&args.coloring))?)?;
    let mut ok = true;

    let proper = verify_proper(&g, &coloring)?;
    for clash in &proper.violations {
        ok = false;
        let edges: Vec<String> = clash
            .edges
            .iter()
            .map(|&e| {
                let (u, v) = g.edge(e);
                format!("{u}-{v}")
            })
            .collect();
        writeln!(
            out,
            "clash: vertex {} has color {} on edges {}",
            clash.vertex,
            clash.color,
            edges.join(", ")
        )
        .unwrap();
    }

    if let Some(path) = &args.set {
        let set = parse_set(&read_source(Some(path))?)?;
        let verdict = verify_sequential(&g, &coloring, &set)?;
        for v in &verdict.failing {
            ok = false;
            writeln!(out, "not sequential: vertex {v} (degree {})", g.degree(*v)).unwrap();
        }
    }

    if ok {
        writeln!(out, "ok").unwrap();
        Ok(ExitCode::Ok)
    } else {
        Ok(ExitCode::VerificationFailed)
    }
}

fn oracle(args: OracleArgs, out: &mut String) -> Result<ExitCode, CliError> {
    let g = load_graph(&args.input)?;
    let opts = OracleOptions {
        override_size: args.override_size,
    };
    let sum = exact_edge_chromatic_sum(&g, opts)?;
    let mut records = vec![OracleRecord::new(&g, Objective::EdgeChromaticSum, &sum)];
    match exact_max_sequential_set(&g, g.max_degree() as Color, opts) {
        Ok(result) => records.push(OracleRecord::new(&g, Objective::MaxSequentialSet, &result)),
        Err(OracleError::NoProperColoring { .. }) => {}
        Err(e) => return Err(e.into()),
    }
    if args.output.table {
        writeln!(
            out,
            "{:>20} {:>6} {:>10} {:>4} {:>10}",
            "objective", "value", "explored", "cap", "cap_stable"
        )
        .unwrap();
        for rec in &records {
            let name = match rec.objective {
                Objective::EdgeChromaticSum => "edge-chromatic-sum",
                Objective::MaxSequentialSet => "max-sequential-set",
            };
            writeln!(
                out,
                "{name:>20} {:>6} {:>10} {:>4} {:>10}",
                rec.value, rec.explored, rec.cap, rec.cap_stable
            )
            .unwrap();
        }
    } else {
        for rec in &records {
            writeln!(out, "{}", to_line(rec)).unwrap();
        }
    }
    Ok(ExitCode::Ok)
}
