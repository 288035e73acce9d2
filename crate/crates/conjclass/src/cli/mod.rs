//! command-line front end. each invocation reads one JSON document from
//! stdin (newline-delimited documents under `compare --batch`), writes
//! one JSON document per answer to stdout, and reports the verdict
//! through the exit code so scripts can branch without parsing:
//!
//! * 0: classified / conjugate / witness verified
//! * 1: not conjugate, or witness failed verification
//! * 2: malformed input
//! * 3: conjugate, but `--synthesize` asked for a witness in a class
//!   with no supported construction
//! * 4: dimension outside 1 and 2
//! * 5: the two maps act on different spaces

pub mod wire;

use std::io::Read;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde::Deserialize;

use crate::classify::{conjugate, signature, AffineMap, WarningCode};
use crate::homeo::eval::{AffineF, Point};
use crate::homeo::{synthesize, verify_conjugacy, VerificationSpec};
use wire::{MapDocument, WarningDoc, WireError, WitnessDocument, SCHEMA_VERSION};

const EXIT_OK: i32 = 0;
const EXIT_NO: i32 = 1;
const EXIT_BAD_INPUT: i32 = 2;
const EXIT_SYNTH_UNSUPPORTED: i32 = 3;
const EXIT_UNSUPPORTED_DIMENSION: i32 = 4;
const EXIT_SPACE_MISMATCH: i32 = 5;

/// captured result of one invocation; the binary prints the streams and
/// exits with the code, tests assert on all three directly.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn fail(code: i32, message: impl std::fmt::Display) -> Outcome {
    Outcome { code, stdout: String::new(), stderr: format!("error: {message}\n") }
}

fn wire_fail(e: WireError) -> Outcome {
    match e {
        WireError::Schema(_) => fail(EXIT_BAD_INPUT, e),
        WireError::UnsupportedDimension(_) => fail(EXIT_UNSUPPORTED_DIMENSION, e),
    }
}

fn emit(doc: &impl serde::Serialize, code: i32) -> Outcome {
    let mut stdout = serde_json::to_string(doc).expect("wire documents serialize");
    stdout.push('\n');
    Outcome { code, stdout, stderr: String::new() }
}

#[derive(Parser)]
#[command(
    name = "conjclass",
    version,
    about = "decide topological conjugacy of affine maps over R and C in dimensions 1 and 2, \
             and build witness homeomorphisms where a construction exists"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// read one map document from stdin and print its conjugacy signature
    Classify {
        /// also emit the forward orbit of the origin, N steps long
        #[arg(long, value_name = "N")]
        emit_orbit: Option<usize>,
    },
    /// read {"f": ..., "g": ...} from stdin and print the verdict
    Compare {
        /// attach a witness homeomorphism when one can be built
        #[arg(long)]
        synthesize: bool,
        /// build the witness and numerically spot-check it
        #[arg(long)]
        verify: bool,
        /// sample count for the spot check
        #[arg(long, value_name = "N")]
        samples: Option<usize>,
        /// half-width of the sampling box
        #[arg(long, value_name = "R")]
        range: Option<f64>,
        /// acceptance tolerance (the CONJCLASS_TOL variable also sets this)
        #[arg(long, value_name = "T")]
        tol: Option<f64>,
        /// read newline-delimited pair documents, answer one line each
        #[arg(long)]
        batch: bool,
    },
    /// read {"f": ..., "g": ..., "h": ...} from stdin and spot-check the witness
    Verify {
        /// sample count for the spot check
        #[arg(long, value_name = "N")]
        samples: Option<usize>,
        /// half-width of the sampling box
        #[arg(long, value_name = "R")]
        range: Option<f64>,
        /// acceptance tolerance (the CONJCLASS_TOL variable also sets this)
        #[arg(long, value_name = "T")]
        tol: Option<f64>,
    },
}

fn default_version() -> u32 {
    SCHEMA_VERSION
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PairInput {
    #[serde(default = "default_version")]
    v: u32,
    f: MapDocument,
    g: MapDocument,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct VerifyInput {
    #[serde(default = "default_version")]
    v: u32,
    f: MapDocument,
    g: MapDocument,
    h: WitnessDocument,
}

/// runs the tool on explicit arguments, input, and environment; the only
/// entry point with real process state is `run_from_env`.
pub fn run(args: &[&str], input: &str, tol_env: Option<&str>) -> Outcome {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    Outcome { code: EXIT_OK, stdout: rendered, stderr: String::new() }
                }
                _ => Outcome { code: EXIT_BAD_INPUT, stdout: String::new(), stderr: rendered },
            };
        }
    };
    match cli.command {
        Command::Classify { emit_orbit } => cmd_classify(input, emit_orbit),
        Command::Compare { synthesize, verify, samples, range, tol, batch } => {
            let spec = match verification_spec(samples, range, tol, tol_env) {
                Ok(spec) => spec,
                Err(outcome) => return outcome,
            };
            let flags = CompareFlags { synthesize, verify };
            if batch {
                cmd_compare_batch(input, flags, &spec)
            } else {
                cmd_compare(input, flags, &spec)
            }
        }
        Command::Verify { samples, range, tol } => {
            match verification_spec(samples, range, tol, tol_env) {
                Ok(spec) => cmd_verify(input, &spec),
                Err(outcome) => outcome,
            }
        }
    }
}

/// binary entry point: real argv, stdin, and environment. stdin is only
/// consumed when a subcommand actually runs, so `--help` never blocks.
pub fn run_from_env() -> i32 {
    let args: Vec<String> = std::env::args().collect();
    let refs: Vec<&str> = args.iter().map(String::as_str).collect();
    let input = match Cli::try_parse_from(&refs) {
        Ok(_) => {
            let mut buf = String::new();
            if std::io::stdin().read_to_string(&mut buf).is_err() {
                eprintln!("error: stdin is not valid UTF-8");
                return EXIT_BAD_INPUT;
            }
            buf
        }
        Err(_) => String::new(),
    };
    let tol_env = std::env::var("CONJCLASS_TOL").ok();
    let outcome = run(&refs, &input, tol_env.as_deref());
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    outcome.code
}

fn verification_spec(
    samples: Option<usize>,
    range: Option<f64>,
    tol: Option<f64>,
    tol_env: Option<&str>,
) -> Result<VerificationSpec, Outcome> {
    let mut spec = VerificationSpec::default();
    if let Some(n) = samples {
        if n == 0 {
            return Err(fail(EXIT_BAD_INPUT, "--samples must be at least 1"));
        }
        spec.samples = n;
    }
    if let Some(r) = range {
        if !r.is_finite() || r <= 0.0 {
            return Err(fail(EXIT_BAD_INPUT, "--range must be a positive finite number"));
        }
        spec.range = r;
    }
    let tolerance = match tol {
        Some(t) => Some(t),
        None => match tol_env {
            Some(raw) => match raw.trim().parse::<f64>() {
                Ok(t) => Some(t),
                Err(_) => {
                    return Err(fail(
                        EXIT_BAD_INPUT,
                        format!("CONJCLASS_TOL value `{raw}` is not a number"),
                    ))
                }
            },
            None => None,
        },
    };
    if let Some(t) = tolerance {
        if !t.is_finite() || t <= 0.0 {
            return Err(fail(EXIT_BAD_INPUT, "tolerance must be a positive finite number"));
        }
        spec.tolerance = t;
    }
    Ok(spec)
}

fn parse_map_input(input: &str) -> Result<AffineMap, Outcome> {
    let doc: MapDocument = serde_json::from_str(input)
        .map_err(|e| fail(EXIT_BAD_INPUT, format!("malformed map document: {e}")))?;
    doc.to_affine().map_err(wire_fail)
}

fn orbit_points(map: &AffineMap, steps: usize) -> Vec<Vec<f64>> {
    let f = AffineF::from_map(map);
    let n = match map {
        AffineMap::Real(m) => m.dim(),
        AffineMap::Complex(m) => 2 * m.dim(),
    };
    let mut x = Point::from_slice(&vec![0.0; n]);
    let mut points = Vec::with_capacity(steps + 1);
    points.push(x.to_vec());
    for _ in 0..steps {
        x = f.apply(x);
        points.push(x.to_vec());
    }
    points
}

fn cmd_classify(input: &str, emit_orbit: Option<usize>) -> Outcome {
    let map = match parse_map_input(input) {
        Ok(map) => map,
        Err(outcome) => return outcome,
    };
    let mut doc = wire::signature_to_doc(&signature(&map));
    if let Some(steps) = emit_orbit {
        doc.orbit = Some(orbit_points(&map, steps));
    }
    emit(&doc, EXIT_OK)
}

#[derive(Clone, Copy)]
struct CompareFlags {
    synthesize: bool,
    verify: bool,
}

fn compare_docs(
    fd: &MapDocument,
    gd: &MapDocument,
    flags: CompareFlags,
    spec: &VerificationSpec,
) -> Result<(wire::VerdictDocument, i32), Outcome> {
    let f = fd.to_affine().map_err(wire_fail)?;
    let g = gd.to_affine().map_err(wire_fail)?;
    let verdict = match conjugate(&f, &g) {
        Ok(verdict) => verdict,
        Err(e) => return Err(fail(EXIT_SPACE_MISMATCH, e)),
    };
    let mut doc = wire::verdict_to_doc(&verdict, &signature(&f), &signature(&g));
    let mut code = if verdict.conjugate { EXIT_OK } else { EXIT_NO };
    if verdict.conjugate && (flags.synthesize || flags.verify) {
        match synthesize(&f, &g) {
            Ok(h) => {
                doc.witness = Some(wire::witness_to_doc(&h));
                if flags.verify {
                    doc.verification = Some(wire::report_to_doc(&verify_conjugacy(&f, &g, &h, spec)));
                }
            }
            Err(e) => {
                doc.warnings.push(WarningDoc {
                    code: WarningCode::SynthUnsupported.as_str().to_string(),
                    message: e.to_string(),
                });
                if flags.synthesize {
                    code = EXIT_SYNTH_UNSUPPORTED;
                }
            }
        }
    }
    Ok((doc, code))
}

fn cmd_compare(input: &str, flags: CompareFlags, spec: &VerificationSpec) -> Outcome {
    let pair: PairInput = match serde_json::from_str(input) {
        Ok(pair) => pair,
        Err(e) => return fail(EXIT_BAD_INPUT, format!("malformed pair document: {e}")),
    };
    if pair.v != SCHEMA_VERSION {
        return fail(EXIT_BAD_INPUT, format!("unsupported schema version {}", pair.v));
    }
    match compare_docs(&pair.f, &pair.g, flags, spec) {
        Ok((doc, code)) => emit(&doc, code),
        Err(outcome) => outcome,
    }
}

fn cmd_compare_batch(input: &str, flags: CompareFlags, spec: &VerificationSpec) -> Outcome {
    let mut stdout = String::new();
    for (idx, line) in input.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let pair: PairInput = match serde_json::from_str(line) {
            Ok(pair) => pair,
            Err(e) => {
                return fail(EXIT_BAD_INPUT, format!("line {}: malformed pair document: {e}", idx + 1))
            }
        };
        if pair.v != SCHEMA_VERSION {
            return fail(
                EXIT_BAD_INPUT,
                format!("line {}: unsupported schema version {}", idx + 1, pair.v),
            );
        }
        match compare_docs(&pair.f, &pair.g, flags, spec) {
            Ok((doc, _)) => {
                stdout.push_str(&serde_json::to_string(&doc).expect("wire documents serialize"));
                stdout.push('\n');
            }
            Err(mut outcome) => {
                outcome.stderr = format!("error: line {}: {}", idx + 1, &outcome.stderr[7..]);
                return outcome;
            }
        }
    }
    Outcome { code: EXIT_OK, stdout, stderr: String::new() }
}

fn cmd_verify(input: &str, spec: &VerificationSpec) -> Outcome {
    let docs: VerifyInput = match serde_json::from_str(input) {
        Ok(docs) => docs,
        Err(e) => return fail(EXIT_BAD_INPUT, format!("malformed verify document: {e}")),
    };
    if docs.v != SCHEMA_VERSION {
        return fail(EXIT_BAD_INPUT, format!("unsupported schema version {}", docs.v));
    }
    let f = match docs.f.to_affine().map_err(wire_fail) {
        Ok(f) => f,
        Err(outcome) => return outcome,
    };
    let g = match docs.g.to_affine().map_err(wire_fail) {
        Ok(g) => g,
        Err(outcome) => return outcome,
    };
    let h = match wire::witness_from_doc(&docs.h).map_err(wire_fail) {
        Ok(h) => h,
        Err(outcome) => return outcome,
    };
    if f.field() != g.field() || f.dim() != g.dim() {
        return fail(
            EXIT_BAD_INPUT,
            format!("cannot verify across {} and {}", f.space_label(), g.space_label()),
        );
    }
    if h.field != f.field() || h.dim != f.dim() {
        return fail(
            EXIT_BAD_INPUT,
            format!("the witness acts on {}^{}, the maps on {}", h.field.symbol(), h.dim, f.space_label()),
        );
    }
    let report = verify_conjugacy(&f, &g, &h, spec);
    let code = if report.pass { EXIT_OK } else { EXIT_NO };
    emit(&wire::report_to_doc(&report), code)
}
