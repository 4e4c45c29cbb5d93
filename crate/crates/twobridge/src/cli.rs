//! Command-line front end. [`run`] is the whole program minus process exit,
//! so tests can drive it in memory.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;
use twobridge_core::{
    cf_to_fraction, compute_twist_number, construct, constructor::DEFAULT_EPSILON, equivalent,
    fraction_to_cf, is_alternating, is_prime_diagram, lackenby_bounds, normalize,
    synthesize_diagram, verify_certificate, BetaTable, EquivalenceRule, Fraction, TwistSequence,
    TwoBridgeKnot,
};

use crate::beta::parse_beta_table;
use crate::json::{
    BoundsJson, CertificateJson, ConvertJson, DiagramJson, EquivJson, KnotJson, TwistJson,
    VerifyJson,
};
use crate::pd::{emit_pd, parse_pd};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "twobridge",
    version,
    about = "Exact computations with 2-bridge knots"
)]
struct Cli {
    /// Print a single JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Continued fraction to fraction, or fraction to canonical continued fraction.
    Convert {
        /// `[c1,c2,...]` or `p/q`.
        #[arg(allow_hyphen_values = true)]
        value: String,
    },
    /// Normalize `p/q` and report the knot's flags.
    Classify {
        #[arg(allow_hyphen_values = true)]
        fraction: String,
    },
    /// Decide whether two fractions name the same 2-bridge knot.
    Equiv {
        #[arg(allow_hyphen_values = true)]
        first: String,
        #[arg(allow_hyphen_values = true)]
        second: String,
        /// Also identify `q` with its inverse mod `p`.
        #[arg(long)]
        classical_equiv: bool,
    },
    /// Build the standard alternating diagram of a twist sequence.
    Diagram {
        sequence: String,
        /// Write the diagram as PD text.
        #[arg(long, value_name = "PATH")]
        emit_pd: Option<PathBuf>,
    },
    /// Twist number of a diagram read from PD text.
    Twist {
        #[arg(long, value_name = "PATH")]
        pd: PathBuf,
        /// Reject diagrams with nugatory crossings.
        #[arg(long)]
        reduced: bool,
    },
    /// Volume bounds from a twist sequence's diagram or a twist number.
    Bounds {
        #[arg(long, conflicts_with = "twist", required_unless_present = "twist")]
        sequence: Option<String>,
        #[arg(long, value_name = "T", allow_negative_numbers = true)]
        twist: Option<i64>,
    },
    /// Build a certificate for target norm N.
    Construct {
        #[arg(long, value_name = "N", allow_hyphen_values = true)]
        norm: String,
        #[arg(long, value_name = "E", allow_hyphen_values = true)]
        epsilon: Option<String>,
        /// File of `length value` lines.
        #[arg(long, value_name = "PATH")]
        beta_table: Option<PathBuf>,
        /// Write the twist sequence in full instead of run-length form.
        #[arg(long)]
        expand: bool,
    },
    /// Re-derive every checked fact of a certificate.
    Verify {
        #[arg(long, value_name = "PATH")]
        cert: PathBuf,
    },
}

/// A domain error: the arguments parsed but name something invalid.
#[derive(Debug)]
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

/// What a subcommand produced: text for humans, a JSON document, and the
/// exit status to report once both are written.
struct Output {
    text: String,
    json: String,
    status: i32,
}

impl Output {
    fn new(text: impl Into<String>, json: impl Serialize) -> Self {
        Output {
            text: text.into(),
            json: serde_json::to_string_pretty(&json).expect("output types serialize"),
            status: EXIT_OK,
        }
    }
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let to_out = !e.use_stderr();
            let sink: &mut dyn Write = if to_out { out } else { err };
            let _ = write!(sink, "{}", e.render());
            return if to_out { EXIT_OK } else { EXIT_USAGE };
        }
    };
    match execute(cli.command) {
        Ok(output) => {
            let written = if cli.json {
                writeln!(out, "{}", output.json)
            } else {
                write!(out, "{}", output.text)
            };
            match written {
                Ok(()) => output.status,
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    EXIT_DOMAIN
                }
            }
        }
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_DOMAIN
        }
    }
}

fn execute(command: Command) -> Result<Output, Failure> {
    match command {
        Command::Convert { value } => convert(&value),
        Command::Classify { fraction } => {
            let knot = parse_knot(&fraction)?;
            Ok(Output::new(describe_knot(&knot), KnotJson::from(&knot)))
        }
        Command::Equiv {
            first,
            second,
            classical_equiv,
        } => {
            let (a, b) = (parse_knot(&first)?, parse_knot(&second)?);
            let rule = if classical_equiv {
                EquivalenceRule::Classical
            } else {
                EquivalenceRule::Literal
            };
            let same = equivalent(&a, &b, rule);
            let text = format!("{}\n", if same { "equivalent" } else { "not equivalent" });
            Ok(Output::new(
                text,
                EquivJson {
                    first: KnotJson::from(&a),
                    second: KnotJson::from(&b),
                    rule: if classical_equiv {
                        "classical"
                    } else {
                        "literal"
                    }
                    .to_string(),
                    equivalent: same,
                },
            ))
        }
        Command::Diagram {
            sequence,
            emit_pd: path,
        } => diagram(&sequence, path.as_deref()),
        Command::Twist { pd, reduced } => twist(&pd, reduced),
        Command::Bounds { sequence, twist } => {
            let t = match (sequence, twist) {
                (Some(s), _) => {
                    let seq = parse_sequence(&s)?;
                    compute_twist_number(&synthesize_diagram(&seq)).twist_count as i64
                }
                (None, Some(t)) => t,
                (None, None) => unreachable!("clap requires one of --sequence and --twist"),
            };
            let b = lackenby_bounds(t)?;
            let mut text = format!(
                "t = {}\nlower: ({}) v3 = {}\nupper: ({}) v3 = {}\n",
                b.twist_number, b.lower_coeff, b.lower, b.upper_coeff, b.upper
            );
            if b.is_vacuous() {
                text.push_str("vacuous: no hyperbolic volume satisfies these bounds\n");
            }
            Ok(Output::new(text, BoundsJson::from(&b)))
        }
        Command::Construct {
            norm,
            epsilon,
            beta_table,
            expand,
        } => {
            let norm = parse_fraction(&norm)?;
            let epsilon = parse_fraction(epsilon.as_deref().unwrap_or(DEFAULT_EPSILON))?;
            let table = match beta_table {
                Some(path) => parse_beta_table(&read(&path)?)?,
                None => BetaTable::default_table(),
            };
            let cert = construct(&norm, &epsilon, &table)?;
            // the certificate is a document either way
            let mut output = Output::new("", CertificateJson::new(&cert, expand));
            output.text = format!("{}\n", output.json);
            Ok(output)
        }
        Command::Verify { cert } => {
            let json: CertificateJson = serde_json::from_str(&read(&cert)?)?;
            let c = json.to_certificate()?;
            let mut v = verify_certificate(&c);
            if !json.knot_flags_match(&c) && !v.reasons.iter().any(|r| r == "knot mismatch") {
                v.reasons.push("knot mismatch".to_string());
            }
            let text = if v.is_valid() {
                "valid\n".to_string()
            } else {
                format!("invalid: {}\n", v.reasons.join(", "))
            };
            let mut output = Output::new(
                text,
                VerifyJson {
                    valid: v.is_valid(),
                    reasons: v.reasons.clone(),
                },
            );
            if !v.is_valid() {
                output.status = EXIT_DOMAIN;
            }
            Ok(output)
        }
    }
}

fn convert(value: &str) -> Result<Output, Failure> {
    let (seq, fraction, text) = if value.contains('/') {
        let f = parse_fraction(value)?;
        let seq = fraction_to_cf(&f)?;
        let text = seq.to_string();
        (seq, f.reduced(), text)
    } else {
        let seq = parse_sequence(value)?;
        let f = cf_to_fraction(&seq);
        let text = f.to_string();
        (seq, f, text)
    };
    Ok(Output::new(
        text + "\n",
        ConvertJson {
            sequence: seq.to_string(),
            fraction: fraction.to_string(),
        },
    ))
}

fn diagram(sequence: &str, path: Option<&Path>) -> Result<Output, Failure> {
    let seq = parse_sequence(sequence)?;
    let d = synthesize_diagram(&seq);
    if let Some(path) = path {
        std::fs::write(path, emit_pd(&d))
            .map_err(|e| Failure(format!("cannot write {}: {e}", path.display())))?;
    }
    let t = compute_twist_number(&d);
    let json = DiagramJson {
        sequence: seq.to_string(),
        fraction: cf_to_fraction(&seq).to_string(),
        crossings: d.crossing_count(),
        edges: d.edge_count(),
        faces: d.face_count(),
        bigons: t.bigon_count,
        components: d.component_count(),
        twist_number: t.twist_count,
        alternating: is_alternating(&d),
        prime: is_prime_diagram(&d),
        pd: d.to_pd(),
    };
    let text = format!(
        "sequence: {}\nfraction: {}\ncrossings: {}\nfaces: {}\nbigons: {}\ncomponents: {}\n\
         twist number: {}\nalternating: {}\nprime: {}\n",
        json.sequence,
        json.fraction,
        json.crossings,
        json.faces,
        json.bigons,
        json.components,
        json.twist_number,
        json.alternating,
        json.prime
    );
    Ok(Output::new(text, json))
}

fn twist(path: &Path, reduced: bool) -> Result<Output, Failure> {
    let d = parse_pd(&read(path)?)?;
    if reduced {
        d.ensure_reduced()?;
    }
    let t = compute_twist_number(&d);
    let json = TwistJson::new(&d, &t, is_alternating(&d), is_prime_diagram(&d));
    let mut text = format!("twist number: {}\n", json.twist_number);
    for (i, twist) in json.twists.iter().enumerate() {
        let members: Vec<String> = twist.iter().map(ToString::to_string).collect();
        text.push_str(&format!(
            "twist {}: crossings {}\n",
            i + 1,
            members.join(" ")
        ));
    }
    if !json.connected {
        text.push_str(&format!(
            "warning: diagram has {} connected parts\n",
            d.connected_parts()
        ));
    }
    if !json.nugatory.is_empty() {
        text.push_str("warning: diagram has nugatory crossings\n");
    }
    Ok(Output::new(text, json))
}

fn describe_knot(k: &TwoBridgeKnot) -> String {
    let kind = if k.is_knot() {
        "knot"
    } else {
        "two-component link"
    };
    let mut text = format!("K({}): {kind}\ntorus: {}\n", k.fraction(), k.is_torus());
    if let Some(n) = k.tunnel_number() {
        text.push_str(&format!("tunnel number: {n}\n"));
    }
    text
}

fn parse_sequence(s: &str) -> Result<TwistSequence, Failure> {
    s.parse::<TwistSequence>()
        .map_err(|e| Failure(format!("invalid sequence `{s}`: {e}")))
}

fn parse_fraction(s: &str) -> Result<Fraction, Failure> {
    s.parse::<Fraction>()
        .map_err(|e| Failure(format!("invalid fraction `{s}`: {e}")))
}

fn parse_knot(s: &str) -> Result<TwoBridgeKnot, Failure> {
    Ok(normalize(&parse_fraction(s)?)?)
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure(format!("cannot read {}: {e}", path.display())))
}
