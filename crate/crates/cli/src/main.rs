use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use chordflip_core::oracle::{gen_bicrossing_diagram, random_color_sequence};
use chordflip_core::render::{render_svg, RenderOptions};
use chordflip_core::{
    complement_representation, emit_dow, interlacement_graph, verify_certificate, ChordColoring, ChordDiagram,
    Color, DiagramJson, FlipCertificate, PipelineError, Window,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_NOT_BIPARTITE: u8 = 3;
const EXIT_INTERNAL: u8 = 4;

/// Chord diagram tools: turn a chord representation of a graph whose
/// complement is bipartite into a chord representation of that complement.
#[derive(Debug, Parser)]
#[command(name = "chordflip", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Represent the complement of the input's interlacement graph.
    Flip {
        #[command(flatten)]
        io: Io,
        #[arg(long, value_enum, default_value_t = DiagramFormat::Dow)]
        format: DiagramFormat,
        /// Write the JSON certificate to this path.
        #[arg(long, value_name = "PATH")]
        certificate: Option<PathBuf>,
    },
    /// Re-check a flip certificate against its input and output diagrams.
    Check {
        input: PathBuf,
        output: PathBuf,
        certificate: PathBuf,
    },
    /// Generate a diagram whose two colour classes are each pairwise crossing.
    Gen {
        /// Number of chords.
        n: usize,
        /// Comma-separated red positions (an even number of them).
        #[arg(long, value_delimiter = ',', conflicts_with = "seed", required_unless_present = "seed")]
        red: Option<Vec<usize>>,
        /// Pick the red positions pseudo-randomly from this seed.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(short, long, value_name = "PATH")]
        output: Option<PathBuf>,
    },
    /// Print the interlacement graph of a diagram.
    Interlace {
        #[command(flatten)]
        io: Io,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
    },
    /// Draw a diagram as SVG.
    Render {
        #[command(flatten)]
        io: Io,
        /// Highlight the window of n positions starting here.
        #[arg(long, value_name = "START")]
        window: Option<usize>,
        /// Take chord colours (and the window, unless --window is given) from a certificate.
        #[arg(long, value_name = "PATH")]
        certificate: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct Io {
    /// Input file, or `-` for standard input.
    #[arg(default_value = "-")]
    input: PathBuf,
    /// Output file; standard output when omitted.
    #[arg(short, long, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DiagramFormat {
    Dow,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

/// A failure carrying the process exit code.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into() }
    }
}

type CliResult<T> = Result<T, Failure>;

/// Diagram JSON as accepted on input; `coloring` is present in `gen` output.
#[derive(Debug, Serialize, Deserialize)]
struct DiagramDoc {
    #[serde(flatten)]
    diagram: DiagramJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    coloring: Option<ChordColoring>,
}

fn read_input(path: &Path) -> CliResult<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::usage(format!("reading standard input: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
    }
}

fn write_output(path: Option<&Path>, text: &str) -> CliResult<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::usage(format!("{}: {e}", p.display()))),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::usage(format!("writing standard output: {e}"))),
    }
}

fn parse_diagram(text: &str, origin: &Path) -> CliResult<(ChordDiagram, Option<ChordColoring>)> {
    let err = |e: &dyn std::fmt::Display| Failure::usage(format!("{}: {e}", origin.display()));
    if text.trim_start().starts_with('{') {
        let doc: DiagramDoc = serde_json::from_str(text).map_err(|e| err(&e))?;
        let d = ChordDiagram::try_from(doc.diagram).map_err(|e| err(&e))?;
        Ok((d, doc.coloring))
    } else {
        let d = chordflip_core::parse_dow(text).map_err(|e| err(&e))?;
        Ok((d, None))
    }
}

fn load_diagram(path: &Path) -> CliResult<(ChordDiagram, Option<ChordColoring>)> {
    parse_diagram(&read_input(path)?, path)
}

fn load_certificate(path: &Path) -> CliResult<FlipCertificate> {
    let text = read_input(path)?;
    serde_json::from_str(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn diagram_text(d: &ChordDiagram, coloring: Option<&ChordColoring>, format: DiagramFormat) -> String {
    match format {
        DiagramFormat::Dow => format!("{}\n", emit_dow(d)),
        DiagramFormat::Json => {
            let doc = DiagramDoc { diagram: DiagramJson::from(d), coloring: coloring.cloned() };
            format!("{}\n", serde_json::to_string(&doc).expect("diagram serializes"))
        }
    }
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Flip { io, format, certificate } => {
            let (d, _) = load_diagram(&io.input)?;
            let (out, cert) = complement_representation(&d).map_err(|e| match e {
                PipelineError::NotBipartite(inner) => Failure {
                    code: EXIT_NOT_BIPARTITE,
                    message: format!("G is not bipartite ({inner})"),
                },
                other => Failure { code: EXIT_INTERNAL, message: other.to_string() },
            })?;
            if let Some(path) = certificate {
                write_output(Some(&path), &format!("{}\n", cert.to_json_pretty()))?;
            }
            write_output(io.output.as_deref(), &diagram_text(&out, None, format))
        }
        Command::Check { input, output, certificate } => {
            let (d, _) = load_diagram(&input)?;
            let (out, _) = load_diagram(&output)?;
            let cert = load_certificate(&certificate)?;
            match verify_certificate(&d, &out, &cert) {
                Ok(()) => write_output(None, "OK\n"),
                Err(clause) => {
                    write_output(None, &format!("FAILED {clause}\n"))?;
                    Err(Failure { code: EXIT_VERIFY_FAILED, message: "certificate check failed".into() })
                }
            }
        }
        Command::Gen { n, red, seed, output } => {
            let red = match (red, seed) {
                (Some(red), _) => red,
                (None, Some(seed)) => {
                    let seq = random_color_sequence(2 * n, seed).map_err(|e| Failure::usage(e.to_string()))?;
                    (0..2 * n).filter(|&p| seq.0[p] == Color::Red).collect()
                }
                (None, None) => return Err(Failure::usage("one of --red or --seed is required")),
            };
            let cd = gen_bicrossing_diagram(n, &red).map_err(|e| Failure::usage(e.to_string()))?;
            write_output(output.as_deref(), &diagram_text(&cd.diagram, Some(&cd.coloring), DiagramFormat::Json))
        }
        Command::Interlace { io, format } => {
            let (d, _) = load_diagram(&io.input)?;
            let g = interlacement_graph(&d);
            let text = match format {
                GraphFormat::Dot => g.to_dot(),
                GraphFormat::Json => format!("{}\n", serde_json::to_string(&g).expect("graph serializes")),
            };
            write_output(io.output.as_deref(), &text)
        }
        Command::Render { io, window, certificate } => {
            let (d, doc_coloring) = load_diagram(&io.input)?;
            let cert = certificate.as_deref().map(load_certificate).transpose()?;
            let coloring = cert.as_ref().map(|c| &c.coloring).or(doc_coloring.as_ref());
            let window = match window {
                Some(start) => {
                    let w = Window::new(start, d.num_chords());
                    if !w.is_valid_for(d.circumference()) {
                        return Err(Failure::usage(format!(
                            "window start {start} out of range for {} positions",
                            d.circumference()
                        )));
                    }
                    Some(w)
                }
                None => cert.as_ref().map(|c| c.window),
            };
            write_output(io.output.as_deref(), &render_svg(&d, &RenderOptions { coloring, window }))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure { code, message }) => {
            eprintln!("chordflip: {message}");
            ExitCode::from(code)
        }
    }
}
