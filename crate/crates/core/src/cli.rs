//! The `qchar` command line. Characters travel between verbs as canonical
//! JSON documents on stdin/stdout, so verbs compose with pipes:
//!
//! ```text
//! qchar kr --infinite --i 0 --k 1 --depth 4 | qchar fold --n 3 | qchar verify --frontier 2
//! ```
//!
//! Exit codes: 0 success or pass, 1 verification or generation failure,
//! 2 malformed input or usage.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::cartan::CartanDatum;
use crate::error::{Error, Result};
use crate::fm::{decompose_into_simples, fm_generate, verify_characterization, verify_ki, Verdict};
use crate::monomial::{fold_qcharacter, Monomial, QCharacter};
use crate::render::{monomial_latex, parse_monomial, render_latex, render_text, root_content_text, to_json, CharacterDoc};
use crate::tableaux::{kr_qcharacter, KrDescriptor, KrMode};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_MALFORMED: i32 = 2;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Text,
    Latex,
}

#[derive(Debug, Parser)]
#[command(name = "qchar", version, about = "q-characters of KR modules and their toroidal foldings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Read the input character from this file instead of stdin.
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,

    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tableau-sum character of a KR module.
    Kr {
        /// The module lives on the infinite line (the only supported base).
        #[arg(long)]
        infinite: bool,
        #[arg(long, allow_negative_numbers = true)]
        i: i64,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        shift: i64,
        #[command(flatten)]
        range: KrRange,
    },
    /// Relabel nodes modulo n + 1.
    Fold {
        #[arg(long)]
        n: i64,
    },
    /// Check ring membership at one node, or the full characterization.
    Verify {
        #[arg(long, allow_negative_numbers = true)]
        node: Option<i64>,
        #[arg(long)]
        frontier: Option<i64>,
    },
    /// Keep only the dominant monomials.
    Dominants,
    /// Multiplicities grouped by weight.
    Weights,
    /// Build the character of a dominant monomial from the characterization.
    Generate {
        #[command(flatten)]
        cartan: CartanArgs,
        /// e.g. "Y[0,0] Y[2,4]"
        #[arg(long)]
        highest: String,
        #[arg(long)]
        depth: i64,
    },
    /// Split a character into generated simple characters.
    Decompose {
        #[arg(long)]
        depth: i64,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct KrRange {
    /// Finite window of n nodes on each side of i.
    #[arg(long)]
    pub window: Option<i64>,
    /// Infinite line, truncated at this depth.
    #[arg(long)]
    pub depth: Option<i64>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct CartanArgs {
    #[arg(long)]
    pub infinite: bool,
    #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true)]
    pub window_cartan: Option<Vec<i64>>,
    #[arg(long)]
    pub cyclic: Option<i64>,
}

impl CartanArgs {
    fn datum(&self) -> Result<CartanDatum> {
        match (self.infinite, &self.window_cartan, self.cyclic) {
            (_, Some(w), _) => CartanDatum::window(w[0], w[1]),
            (_, _, Some(n)) => CartanDatum::cyclic(n),
            _ => Ok(CartanDatum::Infinite),
        }
    }
}

impl Command {
    fn needs_input(&self) -> bool {
        !matches!(self, Command::Kr { .. } | Command::Generate { .. })
    }
}

/// Result of one verb: the rendered document and the exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub body: String,
    pub code: i32,
}

impl Outcome {
    fn ok(body: String) -> Self {
        Outcome { body, code: EXIT_OK }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Generation(_) | Error::Decomposition(_) => EXIT_FAILURE,
        _ => EXIT_MALFORMED,
    }
}

fn line(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn json_line(v: &serde_json::Value) -> String {
    line(serde_json::to_string_pretty(v).expect("json value"))
}

fn render_character(chi: &QCharacter, format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => to_json(chi)?,
        Format::Text => line(render_text(chi)?),
        Format::Latex => line(render_latex(chi)?),
    })
}

fn render_verdict(v: &Verdict, node: Option<i64>, frontier: Option<i64>, format: Format) -> Result<String> {
    let (witness, fail_node, residual) = match v {
        Verdict::Pass => (None, None, 0),
        Verdict::PassWithFrontier { residual } => (None, None, residual.len()),
        Verdict::Fail { node, witness } => (Some(witness), *node, 0),
    };
    Ok(match format {
        Format::Json => json_line(&json!({
            "verdict": v.label(),
            "node": node,
            "frontier": frontier,
            "failed_node": fail_node,
            "witness": witness.map(|w| w.factors().to_vec()),
            "unjudged_terms": residual,
        })),
        Format::Text | Format::Latex => match v {
            Verdict::Pass => line("pass".into()),
            Verdict::PassWithFrontier { .. } => line(format!("pass_with_frontier ({residual} unjudged terms)")),
            Verdict::Fail { node: Some(i), witness } => line(format!("fail at node {i}: {witness}")),
            Verdict::Fail { node: None, witness } => line(format!("fail: extra dominant monomial {witness}")),
        },
    })
}

fn component_label(m: &Monomial, format: Format) -> String {
    match format {
        Format::Latex => format!("L({})", monomial_latex(m)),
        _ => format!("L({m})"),
    }
}

/// Runs one parsed command. `input` is the character read from stdin or
/// `--input`, present exactly for the verbs that consume one.
pub fn dispatch(cli: &Cli, input: Option<QCharacter>) -> Result<Outcome> {
    let format = cli.format;
    let take = || input.clone().ok_or_else(|| Error::Parse("missing input character".into()));
    match &cli.command {
        Command::Kr { i, k, shift, range, .. } => {
            let desc = KrDescriptor::with_shift(*i, *k, *shift);
            let mode = match (range.window, range.depth) {
                (Some(n), None) => KrMode::Window(n),
                (None, Some(d)) => KrMode::Depth(d),
                _ => return Err(Error::Parse("exactly one of --window and --depth is required".into())),
            };
            Ok(Outcome::ok(render_character(&kr_qcharacter(desc, mode)?, format)?))
        }
        Command::Fold { n } => Ok(Outcome::ok(render_character(&fold_qcharacter(&take()?, *n)?, format)?)),
        Command::Verify { node, frontier } => {
            let chi = take()?;
            let verdict = match node {
                Some(i) => {
                    if !chi.cartan().contains(*i) {
                        return Err(Error::InvalidNode { node: *i, cartan: chi.cartan() });
                    }
                    verify_ki(&chi, chi.cartan().canonical(*i), *frontier)?
                }
                None => {
                    let h = chi.highest().ok_or(Error::MissingHighest)?.clone();
                    verify_characterization(&chi, &h, *frontier)?
                }
            };
            let code = if verdict.is_fail() { EXIT_FAILURE } else { EXIT_OK };
            Ok(Outcome { body: render_verdict(&verdict, *node, *frontier, format)?, code })
        }
        Command::Dominants => {
            let chi = take()?;
            let mut out = QCharacter::new(chi.cartan());
            out.set_highest(chi.highest().cloned());
            out.set_depth_bound(chi.depth_bound());
            for (m, c) in chi.dominant_monomials() {
                out.add_term(m, c)?;
            }
            Ok(Outcome::ok(render_character(&out, format)?))
        }
        Command::Weights => {
            let chi = take()?;
            let h = chi.highest().ok_or(Error::MissingHighest)?.clone();
            let weights = chi.weight_multiplicities()?;
            let body = match format {
                Format::Json => json_line(&json!({
                    "cartan": chi.cartan(),
                    "highest": h.factors(),
                    "depth_bound": chi.depth_bound(),
                    "weights": weights.iter().map(|(rc, &m)| json!({
                        "root_content": rc.iter().map(|(&j, &c)| [j, c]).collect::<Vec<_>>(),
                        "multiplicity": m,
                    })).collect::<Vec<_>>(),
                })),
                Format::Text | Format::Latex => {
                    let mut s = String::new();
                    for (rc, m) in &weights {
                        s.push_str(&format!("{m}\t{}\n", root_content_text(&h, rc)));
                    }
                    s
                }
            };
            Ok(Outcome::ok(body))
        }
        Command::Generate { cartan, highest, depth } => {
            let d = cartan.datum()?;
            let m = parse_monomial(highest)?;
            for &(node, _, _) in m.factors() {
                if !d.contains(node) || d.canonical(node) != node {
                    return Err(Error::InvalidNode { node, cartan: d });
                }
            }
            Ok(Outcome::ok(render_character(&fm_generate(&d, &m, *depth)?, format)?))
        }
        Command::Decompose { depth } => {
            let chi = take()?;
            let dec = decompose_into_simples(&chi, *depth)?;
            let body = match format {
                Format::Json => json_line(&json!({
                    "components": dec.components.iter().map(|(m, c)| json!({
                        "coeff": c,
                        "highest": m.factors(),
                    })).collect::<Vec<_>>(),
                    "residual": CharacterDoc::from_character(&dec.residual)?,
                })),
                Format::Text | Format::Latex => {
                    let times = if format == Format::Latex { " \\times " } else { " × " };
                    let parts: Vec<String> = dec
                        .components
                        .iter()
                        .map(|(m, c)| match c {
                            1 => component_label(m, format),
                            c => format!("{c}{times}{}", component_label(m, format)),
                        })
                        .collect();
                    line(if parts.is_empty() { "0".into() } else { parts.join(" + ") })
                }
            };
            Ok(Outcome::ok(body))
        }
    }
}

fn diagnostic(e: &Error) -> String {
    json_line(&json!({ "error": e.kind(), "message": e.to_string() }))
}

/// Parses `args` (including the program name), reads input when the verb
/// needs it, and writes the result. Returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { stdout } else { stderr };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let input = if cli.command.needs_input() {
        let text = match &cli.input {
            Some(p) => fs::read_to_string(p).map_err(|e| Error::Parse(format!("{}: {e}", p.display()))),
            None => {
                let mut s = String::new();
                stdin.read_to_string(&mut s).map(|_| s).map_err(|e| Error::Parse(e.to_string()))
            }
        };
        match text.and_then(|t| crate::render::from_json(&t)) {
            Ok(chi) => Some(chi),
            Err(e) => {
                let _ = stderr.write_all(diagnostic(&e).as_bytes());
                return exit_code(&e);
            }
        }
    } else {
        None
    };
    match dispatch(&cli, input) {
        Ok(out) => {
            let written = match &cli.output {
                Some(p) => fs::write(p, &out.body),
                None => stdout.write_all(out.body.as_bytes()),
            };
            if let Err(e) = written {
                let _ = stderr.write_all(diagnostic(&Error::Parse(e.to_string())).as_bytes());
                return EXIT_MALFORMED;
            }
            out.code
        }
        Err(e) => {
            let _ = stderr.write_all(diagnostic(&e).as_bytes());
            exit_code(&e)
        }
    }
}
