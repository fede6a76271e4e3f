use std::collections::BTreeSet;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use planesq::construction::{construct, ConstructionError, ConstructionResult};
use planesq::corpus::{named_text, random_class_g};
use planesq::draw::{export_drawing, DrawFormat, Highlight};
use planesq::io::{
    emit_cycle, emit_edge_list, emit_pmg, emit_report, parse_cycle, parse_edge_list, parse_pmg,
};
use planesq::oracle::{bonds_via_dual_cycles, cross_check, hamilton_search_map, MAX_DUAL_FACES};
use planesq::two_factor::{
    default_two_factor, enumerate_perfect_matchings, first_matching_two_factor,
    min_component_two_factor, validate_two_factor, EnumerationLimits, TwoFactor,
};
use planesq::{verify, verify_embedding, PlaneMultigraph};

#[derive(Parser)]
#[command(
    name = "planesq",
    version,
    about = "Hamilton cycles in plane graphs between a cubic graph and its square"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build J and its Hamilton cycle from a map and a 2-factor.
    Construct {
        input: PathBuf,
        #[command(flatten)]
        factor: FactorChoice,
        /// Write J here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the Hamilton cycle here.
        #[arg(long)]
        cycle: Option<PathBuf>,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Check a J and a cycle against G.
    Verify {
        g: PathBuf,
        j: PathBuf,
        cycle: PathBuf,
        /// Edge ids of the 2-factor; computed as in `construct` when absent.
        #[arg(long)]
        two_factor: Option<PathBuf>,
    },
    /// Print a named map or a random one.
    Gen {
        /// One of theta, k4, prism, cube, tutte.
        name: Option<String>,
        #[arg(long, conflicts_with = "name", requires_all = ["n", "seed"])]
        random: bool,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// Allow parallel edges.
        #[arg(long)]
        multi: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Brute-force answers for small maps.
    Oracle {
        input: PathBuf,
        #[arg(long, group = "query")]
        hamilton: bool,
        #[arg(long, group = "query")]
        matchings: bool,
        #[arg(long, group = "query")]
        bonds: bool,
        #[arg(long, group = "query")]
        cross_check: bool,
        #[arg(long)]
        two_factor: Option<PathBuf>,
    },
    /// Draw a map. Highlights run the construction and draw J.
    Export {
        input: PathBuf,
        #[arg(long, value_enum)]
        format: Format,
        #[arg(long, value_enum, value_delimiter = ',')]
        highlight: Vec<Layer>,
        #[arg(long)]
        two_factor: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
#[group(multiple = false)]
struct FactorChoice {
    /// File of 2-factor edge ids.
    #[arg(long)]
    two_factor: Option<PathBuf>,
    /// Use a 2-factor with the fewest cycles.
    #[arg(long)]
    min_components: bool,
    /// Use the complement of the first maximum matching found.
    #[arg(long)]
    first_matching: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Svg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Layer {
    X,
    M,
    Chords,
    H,
}

/// A failure and the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

fn input_error(message: impl ToString) -> Failure {
    Failure {
        code: 2,
        message: message.to_string(),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn load_map(path: &Path) -> Result<PlaneMultigraph, Failure> {
    parse_pmg(&read(path)?).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn load_factor(g: &PlaneMultigraph, path: &Path) -> Result<TwoFactor, Failure> {
    let edges = parse_edge_list(&read(path)?)
        .map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    validate_two_factor(g, &edges).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn choose_factor(g: &PlaneMultigraph, choice: &FactorChoice) -> Result<TwoFactor, Failure> {
    let found = if let Some(path) = &choice.two_factor {
        return load_factor(g, path);
    } else if choice.min_components {
        min_component_two_factor(g, EnumerationLimits::default())
    } else if choice.first_matching {
        first_matching_two_factor(g)
    } else {
        default_two_factor(g)
    };
    found.map_err(input_error)
}

fn run_construction(g: &PlaneMultigraph, x: &TwoFactor) -> Result<ConstructionResult, Failure> {
    construct(g, x).map_err(|e| match e {
        ConstructionError::NotInClass(_) | ConstructionError::TwoFactor(_) => input_error(e),
        other => Failure {
            code: 1,
            message: other.to_string(),
        },
    })
}

/// Writes to stdout, ignoring a closed pipe.
fn say(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => write(path, text),
        None => {
            say(text);
            Ok(())
        }
    }
}

fn status(passed: bool) -> u8 {
    if passed {
        0
    } else {
        1
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Construct {
            input,
            factor,
            out,
            cycle,
            report,
        } => {
            let g = load_map(&input)?;
            let x = choose_factor(&g, &factor)?;
            let result = run_construction(&g, &x)?;
            let checked = verify(&g, x.edges(), &result);
            if let Some(path) = out {
                write(&path, &emit_pmg(&result.j))?;
            }
            if let Some(path) = cycle {
                write(&path, &emit_cycle(&result.hamilton.vertices))?;
            }
            emit(report.as_deref(), &emit_report(&checked, &result.metrics))?;
            for line in &checked.diagnostics {
                eprintln!("{line}");
            }
            Ok(status(checked.passed()))
        }
        Command::Verify {
            g,
            j,
            cycle,
            two_factor,
        } => {
            let g = load_map(&g)?;
            let j = load_map(&j)?;
            let cycle = parse_cycle(&read(&cycle)?).map_err(input_error)?;
            let x = match two_factor {
                Some(path) => load_factor(&g, &path)?,
                None => default_two_factor(&g).map_err(input_error)?,
            };
            let (checked, metrics) = verify_embedding(&g, x.edges(), &j, &cycle);
            say(&emit_report(&checked, &metrics));
            for line in &checked.diagnostics {
                eprintln!("{line}");
            }
            Ok(status(checked.passed()))
        }
        Command::Gen {
            name,
            random,
            n,
            seed,
            multi,
            out,
        } => {
            let text = match (name, random) {
                (Some(name), false) => named_text(&name).map_err(input_error)?.to_string(),
                (None, true) => {
                    let g = random_class_g(n.unwrap_or(0), seed.unwrap_or(0), multi)
                        .map_err(input_error)?;
                    emit_pmg(&g)
                }
                _ => return Err(input_error("give a corpus name or --random --n N --seed S")),
            };
            emit(out.as_deref(), &text)?;
            Ok(0)
        }
        Command::Oracle {
            input,
            hamilton,
            matchings,
            bonds,
            cross_check: cross,
            two_factor,
        } => {
            let g = load_map(&input)?;
            if hamilton {
                match hamilton_search_map(&g, &BTreeSet::new()).map_err(input_error)? {
                    Some(cycle) => say(&emit_cycle(&cycle)),
                    None => say("none\n"),
                }
            } else if matchings {
                let all = enumerate_perfect_matchings(&g, EnumerationLimits::default())
                    .map_err(input_error)?;
                for m in all {
                    say(&emit_edge_list(&m.edges));
                }
            } else if bonds {
                for b in bonds_via_dual_cycles(&g, MAX_DUAL_FACES).map_err(input_error)? {
                    say(&emit_edge_list(&b));
                }
            } else if cross {
                let x = match two_factor {
                    Some(path) => load_factor(&g, &path)?,
                    None => default_two_factor(&g).map_err(input_error)?,
                };
                let report = cross_check(&g, &x).map_err(input_error)?;
                say(&format!("bonds_agree {}\n", report.bonds_agree));
                say(&format!("even_factor_bonds {}\n", report.even_factor_bonds));
                say(&format!("hamilton_agree {}\n", report.hamilton_agree));
                say(&format!("num_bonds {}\n", report.num_bonds));
                for line in &report.diagnostics {
                    eprintln!("{line}");
                }
                return Ok(status(report.all_agree()));
            } else {
                return Err(input_error(
                    "choose --hamilton, --matchings, --bonds or --cross-check",
                ));
            }
            Ok(0)
        }
        Command::Export {
            input,
            format,
            highlight,
            two_factor,
            out,
        } => {
            let g = load_map(&input)?;
            let format = match format {
                Format::Dot => DrawFormat::Dot,
                Format::Svg => DrawFormat::Svg,
            };
            let (map, marks) = if highlight.is_empty() {
                (g, Highlight::default())
            } else {
                let x = match two_factor {
                    Some(path) => load_factor(&g, &path)?,
                    None => default_two_factor(&g).map_err(input_error)?,
                };
                let result = run_construction(&g, &x)?;
                let mut marks = Highlight::default();
                let on = |layer| highlight.contains(&layer);
                if on(Layer::X) {
                    marks.x = x.edges().clone();
                }
                if on(Layer::M) {
                    marks.m = result.ordering.connectors().into_iter().collect();
                }
                if on(Layer::Chords) {
                    marks.chords = (g.num_edges()..result.j.num_edges()).collect();
                }
                if on(Layer::H) {
                    marks.h = result.hamilton.edges.iter().copied().collect();
                }
                (result.j, marks)
            };
            let drawing = export_drawing(&map, &marks, format);
            if let Some(warning) = &drawing.layout_warning {
                eprintln!("warning: {warning}; using a circular layout");
            }
            emit(out.as_deref(), &drawing.text)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
