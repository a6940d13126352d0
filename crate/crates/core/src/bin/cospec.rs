//! Command-line front end.
//!
//! Exit status: 0 for a positive answer (cospectral, isomorphic, holds,
//! found), 1 for a negative one, 2 for usage or input errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cospectral_lifts::algebra::GroupSpec;
use cospectral_lifts::graph::{emit_edge_list, emit_graph6, parse_edge_list, parse_graph6, Graph};
use cospectral_lifts::isomorph::are_isomorphic;
use cospectral_lifts::lift::{build_lift, parse_signature, Signature};
use cospectral_lifts::report::verify_example;
use cospectral_lifts::search::{search, FixturePair, SearchOptions, DEFAULT_BUDGET};
use cospectral_lifts::spectra::{charpoly, numeric_spectrum, verify_decomposition};

#[derive(Parser)]
#[command(name = "cospec", version, about = "Voltage lifts and cospectral graph pairs")]
struct Cli {
    /// Output format for graphs.
    #[arg(long, global = true, value_enum, default_value_t = Format::G6, alias = "out")]
    format: Format,
    /// Worker threads for `search` (default: available parallelism).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Signatures enumerated per side before `search` gives up.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    G6,
    Edges,
    Matrix,
}

/// Graph arguments are a graph6 string, or a file holding graph6 or an
/// edge list (`n <count>` header).
#[derive(Subcommand)]
enum Command {
    /// Build the lift of a graph by a signature file.
    Lift {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        signature: PathBuf,
    },
    /// Characteristic polynomial, highest degree first.
    Charpoly {
        graph: String,
        /// Also print the eigenvalues to this tolerance.
        #[arg(long)]
        spectrum: Option<f64>,
    },
    /// Exit 0 iff the two graphs are cospectral.
    Cospectral { g: String, h: String },
    /// Exit 0 iff the two graphs are isomorphic; prints the bijection.
    Iso { g: String, h: String },
    /// Compare the lift's characteristic polynomial with the product over
    /// characters, for an abelian signature.
    VerifyMota {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        signature: PathBuf,
    },
    /// All signature pairs over an abelian group with cospectral lifts.
    /// Without graphs, searches the built-in 6-vertex pair.
    Search {
        g: Option<String>,
        h: Option<String>,
        #[arg(long, default_value = "Z2")]
        group: String,
        /// Keep only pairs satisfying both conditions (built-in pair only).
        #[arg(long)]
        filter: bool,
        /// Write each result's signatures into this directory.
        #[arg(long)]
        signatures_dir: Option<PathBuf>,
    },
    /// Recompute every claim about the worked example.
    VerifyPaper,
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure(msg)) => {
            eprintln!("cospec: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<bool, Failure> {
    match &cli.command {
        Command::Lift { graph, signature } => {
            let (base, s) = load_pair(graph, signature)?;
            print!("{}", render(&build_lift(&base, &s)?, cli.format));
            Ok(true)
        }
        Command::Charpoly { graph, spectrum } => {
            let g = load_graph(graph)?;
            let p = charpoly(&g);
            println!("{p}");
            if let Some(tol) = *spectrum {
                if !(tol.is_finite() && tol > 0.0) {
                    return Err(Failure("--spectrum needs a positive tolerance".into()));
                }
                let roots: Vec<String> = numeric_spectrum(&p, tol).iter().map(|r| format!("{r:.9}")).collect();
                println!("{}", roots.join(" "));
            }
            Ok(true)
        }
        Command::Cospectral { g, h } => {
            let (pg, ph) = (charpoly(&load_graph(g)?), charpoly(&load_graph(h)?));
            println!("{pg}\n{ph}");
            let same = pg == ph;
            println!("{}", if same { "cospectral" } else { "not cospectral" });
            Ok(same)
        }
        Command::Iso { g, h } => match are_isomorphic(&load_graph(g)?, &load_graph(h)?)? {
            Some(map) => {
                let pairs: Vec<String> = map.iter().enumerate().map(|(v, w)| format!("{}->{}", v + 1, w + 1)).collect();
                println!("isomorphic");
                println!("{}", pairs.join(" "));
                Ok(true)
            }
            None => {
                println!("not isomorphic");
                Ok(false)
            }
        },
        Command::VerifyMota { graph, signature } => {
            let (base, s) = load_pair(graph, signature)?;
            let report = verify_decomposition(&base, &s)?;
            println!("lift:    {}", report.lift_poly);
            println!("product: {}", report.product_poly);
            println!("{}", if report.holds { "HOLDS" } else { "FAILS" });
            Ok(report.holds)
        }
        Command::Search { g, h, group, filter, signatures_dir } => {
            let (g, h) = match (g, h) {
                (Some(g), Some(h)) => (load_graph(g)?, load_graph(h)?),
                (None, None) => {
                    let fx = FixturePair::new();
                    (fx.g, fx.h)
                }
                _ => return Err(Failure("search takes two graphs or none".into())),
            };
            let gr: GroupSpec = group.parse()?;
            let opts = SearchOptions { filter_by_theorem: *filter, budget: cli.budget, jobs: cli.jobs };
            let results = search(&g, &h, &gr, &opts)?;
            if let Some(dir) = signatures_dir {
                fs::create_dir_all(dir)?;
            }
            for r in &results {
                println!("{}", r.to_line());
                if let Some(dir) = signatures_dir {
                    write_sidecar(dir, 'g', &r.s)?;
                    write_sidecar(dir, 'h', &r.s_prime)?;
                }
            }
            Ok(!results.is_empty())
        }
        Command::VerifyPaper => {
            let report = verify_example();
            print!("{report}");
            Ok(report.all_expected_pass())
        }
    }
}

fn write_sidecar(dir: &Path, side: char, s: &Signature) -> Result<(), Failure> {
    let path = dir.join(format!("{side}-{}.sig", s.rank()));
    if !path.exists() {
        fs::write(&path, s.to_text()).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn render(g: &Graph, format: Format) -> String {
    match format {
        Format::G6 => format!("{}\n", emit_graph6(g)),
        Format::Edges => emit_edge_list(g),
        Format::Matrix => g.matrix_text(),
    }
}

fn load_pair(graph: &str, signature: &Path) -> Result<(Graph, Signature), Failure> {
    let base = load_graph(graph)?;
    let text = fs::read_to_string(signature).map_err(|e| Failure(format!("{}: {e}", signature.display())))?;
    let s = parse_signature(&text, &base).map_err(|e| Failure(format!("{}: {e}", signature.display())))?;
    Ok((base, s))
}

fn load_graph(arg: &str) -> Result<Graph, Failure> {
    let path = Path::new(arg);
    if !path.is_file() {
        return parse_graph6(arg).map_err(|e| Failure(format!("{arg:?} is neither a file nor graph6: {e}")));
    }
    let text = fs::read_to_string(path).map_err(|e| Failure(format!("{arg}: {e}")))?;
    let first = text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).find(|l| !l.is_empty());
    let parsed = match first {
        Some(l) if l.starts_with("n ") || l == "n" => parse_edge_list(&text),
        Some(l) => parse_graph6(l),
        None => return Err(Failure(format!("{arg}: empty file"))),
    };
    parsed.map_err(|e| Failure(format!("{arg}: {e}")))
}
