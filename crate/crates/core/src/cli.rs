//! Command-line front end.
//!
//! ```text
//! ostrowski bound|extremize|minnorm|verify <instance.json> [--trials N] [--seed S] [--tol T] [--quiet]
//! ```
//!
//! An instance file is a single JSON document:
//!
//! ```json
//! {
//!   "space": {"kind": "dense" | "weighted" | "quadrature", "dim": 3,
//!             "weights": [...], "nodes": [...]},
//!   "a": [1, 1, 1],
//!   "b": [[1, 0], [2, 0], [3, 0]],
//!   "mode": "real" | "complex",
//!   "replay": {"bound": 2.0, "value": 0.5}
//! }
//! ```
//!
//! Entries of `a` and `b` are numbers or `[re, im]` pairs; real mode rejects
//! nonzero imaginary parts. `weights` is required for weighted spaces and
//! optional for quadrature spaces (trapezoid weights on the nodes are used
//! when absent). `replay` holds previously recorded results that `verify`
//! recomputes and compares.
//!
//! All output documents have a fixed key order and print floats with 17
//! significant digits. Exit codes: 0 success, 2 input error, 3 zero vector,
//! 4 dependent vectors, 5 verification failure.

use std::ffi::OsString;
use std::io;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::ops::{self, Tolerances};
use crate::scalar::Scalar;
use crate::space::{Space, SpaceKind};
use crate::vector::Vector;
use crate::verify::{self, RngSeed, Status, VerificationReport};
use crate::C64;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_ZERO_VECTOR: i32 = 3;
pub const EXIT_DEPENDENT: i32 = 4;
pub const EXIT_VERIFY_FAILED: i32 = 5;

pub const DEFAULT_TRIALS: usize = 1000;
pub const DEFAULT_SEED: u64 = 1;
pub const DEFAULT_TOL: f64 = 1e-9;

pub const CHECK_REPLAY: &str = "replay";

#[derive(Debug, Parser)]
#[command(name = "ostrowski", version, about = "Extremal bounds for |<x,b>|^2 under <x,a> = 0, |x| = 1")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Random trials per verification check.
    #[arg(long, global = true, default_value_t = DEFAULT_TRIALS)]
    trials: usize,

    /// Seed for the verification streams.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,

    /// Relative tolerance.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    tol: f64,

    /// Suppress human-readable diagnostics on stderr.
    #[arg(long, global = true)]
    quiet: bool,
}

#[derive(Debug, Clone, Subcommand)]
enum Command {
    /// Print the bound and the Gram summary.
    Bound { instance: PathBuf },
    /// Print the extremizer and its residuals.
    Extremize { instance: PathBuf },
    /// Print the minimum-norm solution of <x,a> = 0, <x,b> = 1.
    Minnorm { instance: PathBuf },
    /// Run every verification check and print one report per line.
    Verify { instance: PathBuf },
}

impl Command {
    fn instance(&self) -> &PathBuf {
        match self {
            Command::Bound { instance }
            | Command::Extremize { instance }
            | Command::Minnorm { instance }
            | Command::Verify { instance } => instance,
        }
    }
}

/// Result of one invocation; the binary writes both streams at the end.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn fail(code: i32, message: impl Into<String>) -> Self {
        let mut stderr = message.into();
        stderr.push('\n');
        Self {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Real,
    Complex,
}

/// Recorded results that `verify` recomputes and compares.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Replay {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<f64>,
}

/// A validated problem: space, the two vectors and the scalar mode.
#[derive(Debug, Clone, PartialEq)]
pub struct ProblemInstance {
    pub space: Space<f64>,
    pub a: Vector<C64>,
    pub b: Vector<C64>,
    pub mode: Mode,
    pub replay: Option<Replay>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
enum Entry {
    Real(f64),
    Pair([f64; 2]),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum KindField {
    Dense,
    Weighted,
    Quadrature,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpaceDoc {
    kind: KindField,
    dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    weights: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    nodes: Option<Vec<f64>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct InstanceDoc {
    space: SpaceDoc,
    a: Vec<Entry>,
    b: Vec<Entry>,
    mode: Mode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    replay: Option<Replay>,
}

/// Input problems, reported with the offending field.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[error("{field}: {message}")]
pub struct InputError {
    pub field: String,
    pub message: String,
}

fn input_err(field: impl Into<String>, message: impl Into<String>) -> InputError {
    InputError {
        field: field.into(),
        message: message.into(),
    }
}

fn space_err(field: &str, e: Error) -> InputError {
    let field = match e {
        Error::NonPositiveWeight { index, .. } => format!("{field}.weights[{index}]"),
        Error::NodesNotIncreasing { index } => format!("{field}.nodes[{index}]"),
        _ => field.to_owned(),
    };
    input_err(field, e.to_string())
}

impl ProblemInstance {
    pub fn from_json(text: &str) -> Result<Self, InputError> {
        let doc: InstanceDoc =
            serde_json::from_str(text).map_err(|e| input_err("instance", e.to_string()))?;
        Self::from_doc(doc)
    }

    fn from_doc(doc: InstanceDoc) -> Result<Self, InputError> {
        let SpaceDoc {
            kind,
            dim,
            weights,
            nodes,
        } = doc.space;
        if dim == 0 {
            return Err(input_err("space.dim", "must be at least 1"));
        }
        let check_len = |field: &str, len: usize| {
            if len == dim {
                Ok(())
            } else {
                Err(input_err(
                    field,
                    format!("expected {dim} entries, found {len}"),
                ))
            }
        };
        let space = match kind {
            KindField::Dense => {
                if weights.is_some() {
                    return Err(input_err("space.weights", "not allowed for dense spaces"));
                }
                if nodes.is_some() {
                    return Err(input_err("space.nodes", "only allowed for quadrature spaces"));
                }
                Space::dense(dim).map_err(|e| space_err("space", e))?
            }
            KindField::Weighted => {
                if nodes.is_some() {
                    return Err(input_err("space.nodes", "only allowed for quadrature spaces"));
                }
                let w = weights.ok_or_else(|| input_err("space.weights", "required for weighted spaces"))?;
                check_len("space.weights", w.len())?;
                Space::weighted(w).map_err(|e| space_err("space", e))?
            }
            KindField::Quadrature => {
                let x = nodes.ok_or_else(|| input_err("space.nodes", "required for quadrature spaces"))?;
                check_len("space.nodes", x.len())?;
                match weights {
                    Some(w) => {
                        check_len("space.weights", w.len())?;
                        Space::quadrature(x, w)
                    }
                    None => Space::trapezoid_on_nodes(x),
                }
                .map_err(|e| space_err("space", e))?
            }
        };
        let a = parse_vector("a", &doc.a, dim, doc.mode)?;
        let b = parse_vector("b", &doc.b, dim, doc.mode)?;
        Ok(Self {
            space,
            a,
            b,
            mode: doc.mode,
            replay: doc.replay,
        })
    }

    /// Serializes back to the instance format; parsing the result yields an
    /// identical instance.
    pub fn to_json(&self) -> String {
        let entries = |v: &Vector<C64>| {
            v.iter()
                .map(|c| match self.mode {
                    Mode::Real => Entry::Real(c.re),
                    Mode::Complex => Entry::Pair([c.re, c.im]),
                })
                .collect()
        };
        let space = &self.space;
        let doc = InstanceDoc {
            space: SpaceDoc {
                kind: match space.kind() {
                    SpaceKind::Dense => KindField::Dense,
                    SpaceKind::Weighted => KindField::Weighted,
                    SpaceKind::Quadrature => KindField::Quadrature,
                },
                dim: space.dim(),
                weights: (space.kind() != SpaceKind::Dense).then(|| space.weights().to_vec()),
                nodes: space.nodes().map(<[f64]>::to_vec),
            },
            a: entries(&self.a),
            b: entries(&self.b),
            mode: self.mode,
            replay: self.replay,
        };
        to_json_line(&doc)
    }

    fn vectors<S: Scalar<Real = f64>>(&self) -> (Vector<S>, Vector<S>) {
        let convert = |v: &Vector<C64>| {
            Vector::new(
                v.iter()
                    .map(|c| S::from_parts(c.re, c.im).expect("validated against mode on load"))
                    .collect(),
            )
            .expect("validated nonempty")
        };
        (convert(&self.a), convert(&self.b))
    }
}

fn parse_vector(field: &str, entries: &[Entry], dim: usize, mode: Mode) -> Result<Vector<C64>, InputError> {
    if entries.len() != dim {
        return Err(input_err(
            field,
            format!("expected {dim} entries, found {}", entries.len()),
        ));
    }
    let coords = entries
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let c = match *e {
                Entry::Real(re) => C64::new(re, 0.0),
                Entry::Pair([re, im]) => C64::new(re, im),
            };
            if !(c.re.is_finite() && c.im.is_finite()) {
                return Err(input_err(format!("{field}[{i}]"), "non-finite value"));
            }
            if mode == Mode::Real && c.im != 0.0 {
                return Err(input_err(
                    format!("{field}[{i}]"),
                    "nonzero imaginary part in real mode",
                ));
            }
            Ok(c)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Vector::new(coords).map_err(|e| input_err(field, e.to_string()))
}

/// JSON formatter that prints every float with 17 significant digits.
struct Fixed17;

impl serde_json::ser::Formatter for Fixed17 {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        write!(writer, "{value:.16e}")
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(writer, f64::from(value))
    }
}

fn to_json_line<T: Serialize>(value: &T) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, Fixed17);
    value.serialize(&mut ser).expect("in-memory serialization");
    let mut s = String::from_utf8(buf).expect("serde_json emits UTF-8");
    s.push('\n');
    s
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(untagged)]
enum Num {
    Real(f64),
    Complex([f64; 2]),
}

fn num<S: Scalar<Real = f64>>(s: S) -> Num {
    if S::IS_COMPLEX {
        Num::Complex([s.re(), s.im()])
    } else {
        Num::Real(s.re())
    }
}

fn nums<S: Scalar<Real = f64>>(v: &Vector<S>) -> Vec<Num> {
    v.iter().map(|&c| num(c)).collect()
}

#[derive(Serialize)]
struct GramOut {
    norm_a_sq: f64,
    norm_b_sq: f64,
    inner_ab: Num,
    det: f64,
}

#[derive(Serialize)]
struct BoundOut {
    bound: f64,
    gram: GramOut,
}

#[derive(Serialize)]
struct ExtremizeOut {
    x: Vec<Num>,
    attained: f64,
    bound: f64,
    residual_orth: f64,
    residual_norm: f64,
}

#[derive(Serialize)]
struct MinNormOut {
    x: Vec<Num>,
    value: f64,
    residual_orth: f64,
    residual_one: f64,
}

#[derive(Serialize)]
struct ReportOut<'a> {
    check: &'a str,
    status: &'static str,
    passed: bool,
    trials: usize,
    worst_violation: f64,
    tolerance: f64,
    worst_trial: Option<usize>,
    witness: Option<Vec<Num>>,
    reason: Option<&'a str>,
    mode: Mode,
    seed: u64,
    trials_requested: usize,
    tol: f64,
}

struct Settings {
    trials: usize,
    seed: u64,
    tol: Tolerances<f64>,
    quiet: bool,
}

enum Failure {
    Lib(Error),
    Verify,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ZeroVector { .. } => EXIT_ZERO_VECTOR,
        Error::DependentVectors { .. } => EXIT_DEPENDENT,
        _ => EXIT_INPUT,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_INPUT,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let tol = match Tolerances::with_rel_eps(cli.tol) {
        Ok(t) => t,
        Err(e) => return Outcome::fail(EXIT_INPUT, format!("--tol: {e}")),
    };
    let path = cli.command.instance();
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return Outcome::fail(EXIT_INPUT, format!("{}: {e}", path.display())),
    };
    let instance = match ProblemInstance::from_json(&text) {
        Ok(i) => i,
        Err(e) => return Outcome::fail(EXIT_INPUT, format!("{}: {e}", path.display())),
    };
    let settings = Settings {
        trials: cli.trials,
        seed: cli.seed,
        tol,
        quiet: cli.quiet,
    };
    execute(&cli.command, &instance, &settings)
}

fn execute(command: &Command, instance: &ProblemInstance, settings: &Settings) -> Outcome {
    let mut stdout = String::new();
    let mut stderr = String::new();
    let result = match instance.mode {
        Mode::Real => dispatch::<f64>(command, instance, settings, &mut stdout, &mut stderr),
        Mode::Complex => dispatch::<C64>(command, instance, settings, &mut stdout, &mut stderr),
    };
    let code = match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Verify) => EXIT_VERIFY_FAILED,
        Err(Failure::Lib(e)) => {
            stdout.clear();
            stderr.push_str(&format!("error: {e}\n"));
            exit_code(&e)
        }
    };
    Outcome {
        code,
        stdout,
        stderr,
    }
}

fn dispatch<S: Scalar<Real = f64>>(
    command: &Command,
    instance: &ProblemInstance,
    settings: &Settings,
    stdout: &mut String,
    stderr: &mut String,
) -> Result<(), Failure> {
    let space = &instance.space;
    let (a, b) = instance.vectors::<S>();
    let tol = &settings.tol;
    match command {
        Command::Bound { .. } => {
            let g = ops::gram2(space, &a, &b)?;
            let bound = ops::ostrowski_bound(space, &a, &b)?;
            stdout.push_str(&to_json_line(&BoundOut {
                bound,
                gram: GramOut {
                    norm_a_sq: g.norm_a_sq,
                    norm_b_sq: g.norm_b_sq,
                    inner_ab: num(g.inner_ab),
                    det: g.det,
                },
            }));
        }
        Command::Extremize { .. } => {
            let x = ops::extremizer(space, &a, &b, tol)?;
            let bound = ops::ostrowski_bound(space, &a, &b)?;
            stdout.push_str(&to_json_line(&ExtremizeOut {
                attained: ops::inner(space, &x, &b)?.abs_sq(),
                bound,
                residual_orth: ops::inner(space, &x, &a)?.abs(),
                residual_norm: (ops::norm_sq(space, &x)?.sqrt() - 1.0).abs(),
                x: nums(&x),
            }));
        }
        Command::Minnorm { .. } => {
            let sol = ops::min_norm_solution(space, &a, &b, tol)?;
            stdout.push_str(&to_json_line(&MinNormOut {
                residual_orth: ops::inner(space, &sol.x, &a)?.abs(),
                residual_one: (ops::inner(space, &sol.x, &b)? - S::one()).abs(),
                value: sol.value,
                x: nums(&sol.x),
            }));
        }
        Command::Verify { .. } => {
            let mut reports = verify::verify_all(
                space,
                &a,
                &b,
                settings.trials,
                tol,
                RngSeed(settings.seed),
            )?;
            if let Some(replay) = &instance.replay {
                reports.push(check_replay(space, &a, &b, replay, tol));
            }
            let mut failed = false;
            for r in &reports {
                failed |= r.status() == Status::Failed;
                stdout.push_str(&to_json_line(&report_out(r, instance.mode, settings)));
                if !settings.quiet {
                    stderr.push_str(&describe(r));
                }
            }
            if failed {
                return Err(Failure::Verify);
            }
        }
    }
    Ok(())
}

/// Compares recorded results against freshly computed ones; a recorded
/// value that can no longer be computed counts as an infinite violation.
fn check_replay<S: Scalar<Real = f64>>(
    space: &Space<f64>,
    a: &Vector<S>,
    b: &Vector<S>,
    replay: &Replay,
    tol: &Tolerances<f64>,
) -> VerificationReport<S> {
    let deviation = |recorded: f64, actual: Result<f64, Error>| match actual {
        Ok(v) => (recorded - v).abs() / (1.0 + v.abs()),
        Err(_) => f64::INFINITY,
    };
    let mut worst = 0.0f64;
    let mut trials = 0;
    if let Some(bound) = replay.bound {
        worst = worst.max(deviation(bound, ops::ostrowski_bound(space, a, b)));
        trials += 1;
    }
    if let Some(value) = replay.value {
        let actual = ops::min_norm_solution(space, a, b, tol).map(|s| s.value);
        worst = worst.max(deviation(value, actual));
        trials += 1;
    }
    VerificationReport {
        check_name: CHECK_REPLAY.to_owned(),
        trials,
        worst_violation: worst,
        tolerance: tol.rel_eps,
        passed: worst <= tol.rel_eps,
        worst_trial: None,
        witness: None,
        skipped: None,
    }
}

fn report_out<'a, S: Scalar<Real = f64>>(
    r: &'a VerificationReport<S>,
    mode: Mode,
    settings: &Settings,
) -> ReportOut<'a> {
    ReportOut {
        check: &r.check_name,
        status: r.status().as_str(),
        passed: r.passed,
        trials: r.trials,
        worst_violation: r.worst_violation,
        tolerance: r.tolerance,
        worst_trial: r.worst_trial,
        witness: r.witness.as_ref().map(nums),
        reason: r.skipped.as_deref(),
        mode,
        seed: settings.seed,
        trials_requested: settings.trials,
        tol: settings.tol.rel_eps,
    }
}

fn describe<S: Scalar<Real = f64>>(r: &VerificationReport<S>) -> String {
    match &r.skipped {
        Some(reason) => format!("{:<18} skipped: {reason}\n", r.check_name),
        None => format!(
            "{:<18} {}: worst {:.3e} vs tolerance {:.3e} over {} trials\n",
            r.check_name,
            r.status().as_str(),
            r.worst_violation,
            r.tolerance,
            r.trials
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_real_and_pair_entries() {
        let inst = ProblemInstance::from_json(
            r#"{"space": {"kind": "dense", "dim": 2}, "a": [1, [0, 0]], "b": [[0.5, 0], 2], "mode": "real"}"#,
        )
        .unwrap();
        assert_eq!(inst.a.coords(), &[C64::new(1.0, 0.0), C64::new(0.0, 0.0)]);
        assert_eq!(inst.b.coords(), &[C64::new(0.5, 0.0), C64::new(2.0, 0.0)]);
    }

    #[test]
    fn real_mode_rejects_imaginary_parts() {
        let err = ProblemInstance::from_json(
            r#"{"space": {"kind": "dense", "dim": 2}, "a": [1, 0], "b": [[0, 1], 2], "mode": "real"}"#,
        )
        .unwrap_err();
        assert_eq!(err.field, "b[0]");
    }

    #[test]
    fn validation_names_the_field() {
        let cases = [
            (r#"{"space": {"kind": "dense", "dim": 3}, "a": [1, 0], "b": [1, 1, 1], "mode": "real"}"#, "a"),
            (r#"{"space": {"kind": "weighted", "dim": 2}, "a": [1, 0], "b": [1, 1], "mode": "real"}"#, "space.weights"),
            (r#"{"space": {"kind": "weighted", "dim": 2, "weights": [1, -1]}, "a": [1, 0], "b": [1, 1], "mode": "real"}"#, "space.weights[1]"),
            (r#"{"space": {"kind": "quadrature", "dim": 3, "nodes": [0, 2, 1]}, "a": [1, 0, 0], "b": [1, 1, 1], "mode": "real"}"#, "space.nodes[2]"),
            (r#"{"space": {"kind": "dense", "dim": 0}, "a": [], "b": [], "mode": "real"}"#, "space.dim"),
            (r#"{"space": {"kind": "dense", "dim": 2}, "a": [1, 0], "b": [1, 1]}"#, "instance"),
        ];
        for (text, field) in cases {
            let err = ProblemInstance::from_json(text).unwrap_err();
            assert_eq!(err.field, field, "{text}");
        }
        let err = ProblemInstance::from_json(
            r#"{"space": {"kind": "dense", "dim": 2}, "a": [1, 0], "b": [1, 1]}"#,
        )
        .unwrap_err();
        assert!(err.message.contains("mode"), "{err}");
    }

    #[test]
    fn quadrature_defaults_to_trapezoid_weights() {
        let inst = ProblemInstance::from_json(
            r#"{"space": {"kind": "quadrature", "dim": 3, "nodes": [0, 0.5, 1]}, "a": [1, 1, 1], "b": [0, 0.5, 1], "mode": "real"}"#,
        )
        .unwrap();
        assert_eq!(inst.space.weights(), &[0.25, 0.5, 0.25]);
    }

    #[test]
    fn floats_print_with_17_digits() {
        assert_eq!(to_json_line(&[1.0f64, 0.1]), "[1.0000000000000000e0,1.0000000000000001e-1]\n");
        let parsed: Vec<f64> = serde_json::from_str(&to_json_line(&[0.1f64, 1.0 / 3.0])).unwrap();
        assert_eq!(parsed, vec![0.1, 1.0 / 3.0]);
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{"space": {"kind": "weighted", "dim": 2, "weights": [2, 0.3]}, "a": [[1, 2], [0.1, -3]], "b": [[0, 1], 5], "mode": "complex", "replay": {"bound": 1.5}}"#;
        let inst = ProblemInstance::from_json(text).unwrap();
        let again = ProblemInstance::from_json(&inst.to_json()).unwrap();
        assert_eq!(inst, again);
    }

    #[test]
    fn bad_tolerance_flag() {
        let out = run(["ostrowski", "bound", "missing.json", "--tol", "2"]);
        assert_eq!(out.code, EXIT_INPUT);
        assert!(out.stderr.contains("--tol"));
        let out = run(["ostrowski", "bound", "missing.json", "--trials", "x"]);
        assert_eq!(out.code, EXIT_INPUT);
        let out = run(["ostrowski", "frobnicate"]);
        assert_eq!(out.code, EXIT_INPUT);
    }

    #[test]
    fn missing_file_is_input_error() {
        let out = run(["ostrowski", "bound", "/nonexistent/instance.json"]);
        assert_eq!(out.code, EXIT_INPUT);
        assert!(out.stdout.is_empty());
    }
}
