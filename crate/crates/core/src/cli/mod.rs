//! The `planar` command: argument parsing, JSON input, run reports.
//!
//! Every command prints a [`RunReport`] (or writes it to `--out`). Fixture
//! generators instead emit the fixture itself so it can be fed back through
//! `--in`.

mod commands;
mod selftest;

use crate::{Error, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

pub use selftest::{run_selftest, SelfCheck};

#[derive(Parser, Debug, Clone)]
#[command(name = "planar", version, about = "Planar algebra computations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Input files.
    #[arg(long = "in", global = true, num_args = 1..)]
    pub inputs: Vec<PathBuf>,
    /// Write the report (or fixture) here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Override the default tolerance of float-mode decisions.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Accepted for compatibility; all computations run on one thread.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Temperley-Lieb diagrams.
    #[command(subcommand)]
    Tl(TlCmd),
    /// Spin and vertex model networks.
    #[command(subcommand)]
    Net(NetCmd),
    /// Link and graph invariants from state sums.
    #[command(subcommand)]
    Knot(KnotCmd),
    /// Generalized Hadamard matrices.
    #[command(subcommand)]
    Had(HadCmd),
    /// Principal graphs and path algebras.
    #[command(subcommand)]
    Graph(GraphCmd),
    /// Group planar algebras.
    #[command(subcommand)]
    Group(GroupCmd),
    /// Emit fixture files.
    Fixtures(FixtureArgs),
    /// Run a quick invariant suite.
    Selftest,
}

#[derive(Subcommand, Debug, Clone)]
pub enum TlCmd {
    /// Non-crossing pairings of 2k points.
    Basis {
        #[arg(long)]
        k: usize,
    },
    /// Product of the two elements given with --in.
    Mul {
        #[arg(long)]
        delta1: String,
        #[arg(long)]
        delta2: String,
    },
    /// Jones-Wenzl idempotent.
    Jw {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        delta: String,
    },
    /// Gram matrix of the Markov trace form.
    Gram {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        delta: String,
        /// Report only the numerical rank.
        #[arg(long)]
        rank: bool,
    },
}

#[derive(Subcommand, Debug, Clone)]
pub enum NetCmd {
    /// Partition function of a spin or vertex network.
    Eval,
}

#[derive(Subcommand, Debug, Clone)]
pub enum KnotCmd {
    /// Kauffman bracket of a PD code.
    Bracket {
        #[arg(long, default_value = "A")]
        var: String,
    },
    /// Chromatic polynomial value of a graph.
    Chromatic {
        #[arg(long)]
        q: usize,
    },
    /// Value of a triple point network in the A4 model.
    A4,
}

#[derive(Subcommand, Debug, Clone)]
pub enum HadCmd {
    Validate,
    Profile,
    Components,
    Standard,
    Check2117,
    /// dim P^u_k.
    Dimk {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = DimMethod::Sigma)]
        method: DimMethod,
    },
    /// Generate a matrix of a standard family.
    Make {
        #[arg(long)]
        family: String,
        #[arg(long)]
        q: usize,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum DimMethod {
    Sigma,
    Transfer,
    Both,
}

#[derive(Subcommand, Debug, Clone)]
pub enum GraphCmd {
    /// Loops of length 2k at the root.
    Walks {
        #[arg(long)]
        k: usize,
    },
    /// Perron-Frobenius trace vector.
    Perron,
    /// Truncated word tree of a finite dimensional algebra.
    Tree {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        depth: Option<usize>,
        /// Also report the trace of each word at this loop value.
        #[arg(long)]
        delta: Option<String>,
    },
    /// Chirality test for an ADE graph.
    Ade {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: Option<usize>,
    },
}

#[derive(Subcommand, Debug, Clone)]
pub enum GroupCmd {
    /// dim P_k for a label map into a finite group.
    Dim {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        labels: PathBuf,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Args, Debug, Clone)]
pub struct FixtureArgs {
    /// fourier, sylvester, paley, ade, pd, tree or cyclic.
    #[arg(long, required_unless_present = "all")]
    pub family: Option<String>,
    #[arg(long)]
    pub q: Option<usize>,
    /// ADE graph (E6, D5, ...) or PD code (unknot, hopf, trefoil).
    #[arg(long)]
    pub name: Option<String>,
    #[arg(long)]
    pub depth: Option<usize>,
    /// Write the whole corpus to --out, $PLANAR_FIXTURES or ./fixtures.
    #[arg(long)]
    pub all: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunReport {
    pub command: String,
    pub inputs: Vec<InputDigest>,
    /// `exact`, `float` or `integer`.
    pub mode: String,
    pub tolerances: BTreeMap<String, f64>,
    pub seed: u64,
    pub threads: usize,
    pub wall_ms: f64,
    pub result: Value,
    /// Fixture payload emitted in place of the report.
    pub artifact: Option<Value>,
}

impl RunReport {
    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "inputs": self.inputs.iter().map(|d| json!({"path": d.path, "sha256": d.sha256})).collect::<Vec<_>>(),
            "mode": self.mode,
            "tolerances": self.tolerances,
            "seed": self.seed,
            "threads": self.threads,
            "wall_ms": self.wall_ms,
            "result": self.result,
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("command: {}\nmode: {}\n", self.command, self.mode);
        for d in &self.inputs {
            s += &format!("input: {} sha256={}\n", d.path, d.sha256);
        }
        for (k, v) in &self.tolerances {
            s += &format!("tolerance {k}: {v:e}\n");
        }
        match &self.result {
            Value::Object(m) => {
                for (k, v) in m {
                    match v {
                        Value::String(x) => s += &format!("{k}: {x}\n"),
                        v => s += &format!("{k}: {v}\n"),
                    }
                }
            }
            v => s += &format!("result: {v}\n"),
        }
        s += &format!("wall time: {:.3} ms\n", self.wall_ms);
        s
    }
}

/// Collects inputs, tolerances and the scalar mode while a command runs.
pub(crate) struct Ctx<'a> {
    pub common: &'a Common,
    pub inputs: Vec<InputDigest>,
    pub tolerances: BTreeMap<String, f64>,
    pub mode: String,
}

impl<'a> Ctx<'a> {
    fn new(common: &'a Common) -> Self {
        Ctx { common, inputs: vec![], tolerances: BTreeMap::new(), mode: "exact".into() }
    }

    pub fn read(&mut self, path: &Path) -> Result<Value> {
        let bytes = std::fs::read(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        self.inputs.push(InputDigest { path: path.display().to_string(), sha256: format!("{:x}", Sha256::digest(&bytes)) });
        serde_json::from_slice(&bytes).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
    }

    /// The `i`-th `--in` file.
    pub fn input(&mut self, i: usize) -> Result<Value> {
        let p = self.common.inputs.get(i).cloned().ok_or_else(|| Error::Usage(format!("expected at least {} --in file(s)", i + 1)))?;
        self.read(&p)
    }

    /// Tolerance for a named float decision, recorded in the report.
    pub fn tol(&mut self, name: &str, default: f64) -> f64 {
        let t = self.common.tol.unwrap_or(default);
        self.tolerances.insert(name.into(), t);
        t
    }

    pub fn fixed_tol(&mut self, name: &str, t: f64) {
        self.tolerances.insert(name.into(), t);
    }
}

fn command_name(c: &Command) -> String {
    match c {
        Command::Tl(t) => format!("tl {}", variant(t)),
        Command::Net(n) => format!("net {}", variant(n)),
        Command::Knot(k) => format!("knot {}", variant(k)),
        Command::Had(h) => format!("had {}", variant(h)),
        Command::Graph(g) => format!("graph {}", variant(g)),
        Command::Group(g) => format!("group {}", variant(g)),
        Command::Fixtures(_) => "fixtures".into(),
        Command::Selftest => "selftest".into(),
    }
}

fn variant<T: std::fmt::Debug>(t: &T) -> String {
    let s = format!("{t:?}");
    let head: String = s.chars().take_while(|c| c.is_alphanumeric()).collect();
    head.to_lowercase()
}

/// Runs one parsed command.
pub fn dispatch(cli: &Cli) -> Result<RunReport> {
    let start = Instant::now();
    let mut ctx = Ctx::new(&cli.common);
    let (result, artifact) = commands::run(&cli.command, &mut ctx)?;
    Ok(RunReport {
        command: command_name(&cli.command),
        inputs: ctx.inputs,
        mode: ctx.mode,
        tolerances: ctx.tolerances,
        seed: cli.common.seed,
        threads: cli.common.threads,
        wall_ms: start.elapsed().as_secs_f64() * 1e3,
        result,
        artifact,
    })
}

/// Parses `argv`, runs the command and writes the output. Returns the exit code.
pub fn main_with_args<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind::{DisplayHelp, DisplayVersion};
            if matches!(e.kind(), DisplayHelp | DisplayVersion) {
                let _ = write!(stdout, "{}", e.render());
                return 0;
            }
            let _ = write!(stderr, "{}", e.render());
            return 64;
        }
    };
    let report = match dispatch(&cli) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return e.exit_code();
        }
    };
    let body = match (&report.artifact, cli.common.format) {
        (Some(a), _) => to_pretty(a),
        (None, Format::Json) => to_pretty(&report.to_json()),
        (None, Format::Text) => report.to_text(),
    };
    let written = match &cli.common.out {
        Some(p) if !matches!(cli.command, Command::Fixtures(FixtureArgs { all: true, .. })) => std::fs::write(p, &body),
        _ => stdout.write_all(body.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: {e}");
        return 2;
    }
    if let Command::Selftest = cli.command {
        if report.result.get("failed").and_then(Value::as_u64).unwrap_or(0) > 0 {
            return 2;
        }
    }
    0
}

fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}
