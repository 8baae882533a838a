//! Command-line surface for `su3poly`.

use std::path::PathBuf;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use su3poly::bounds::{check_spectrum, sum_bounds_three, sum_bounds_two, DoubleEigMatrixSpec};
use su3poly::classify::{classify_n2_with, classify_n3_with};
use su3poly::cones::local_cones;
use su3poly::export::{polytope_svg, polytope_to_json, SvgOptions};
use su3poly::moment::{fixed_point_spectra, FixedPointSpectra};
use su3poly::oracle::{sample_batch, verify, write_csv};
use su3poly::polytope::{build_polytope_n2_with, build_polytope_n3_with};
use su3poly::scalar::DEFAULT_SNAP_TOL;
use su3poly::{Rational, Scalar, Spectrum, Weights};

#[derive(Parser, Debug, Clone, PartialEq)]
#[command(name = "su3poly", version, about = "SU(3) momentum polytopes for weighted products of CP^2")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Output format; each command has a default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write the artifact here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Subcommand, Debug, Clone, PartialEq)]
pub enum Command {
    /// Region label of a weight vector.
    Classify {
        /// Comma-separated weights; fractions such as 4/3 select exact arithmetic.
        #[arg(long, allow_hyphen_values = true)]
        gamma: String,
        #[arg(long, default_value_t = DEFAULT_SNAP_TOL)]
        tolerance: f64,
    },
    /// Momentum polytope as JSON or SVG.
    Polytope {
        #[arg(long, allow_hyphen_values = true)]
        gamma: String,
        #[arg(long, default_value_t = DEFAULT_SNAP_TOL)]
        tolerance: f64,
        /// Include the five local cones.
        #[arg(long)]
        emit_cones: bool,
    },
    /// Monte Carlo samples of the momentum image as CSV.
    Sample {
        #[arg(long, allow_hyphen_values = true)]
        gamma: String,
        #[arg(long, default_value_t = 10_000)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Compare samples against the predicted polytope; exits nonzero on violations.
    Verify {
        #[arg(long, allow_hyphen_values = true)]
        gamma: String,
        #[arg(long, default_value_t = 100_000)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1e-6)]
        tolerance: f64,
    },
    /// Eigenvalue bounds for sums of matrices with spectra (l, l, -2l).
    Bounds {
        /// Two or three doubled eigenvalues.
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Spectrum to test for membership (three matrices only).
        #[arg(long, allow_hyphen_values = true)]
        target: Option<String>,
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
    },
    /// Labels and polytopes along the segment from one weight vector to another, as JSON lines.
    Sweep {
        #[arg(long, allow_hyphen_values = true)]
        from: String,
        #[arg(long, allow_hyphen_values = true)]
        to: String,
        #[arg(long, default_value_t = 100)]
        steps: usize,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Svg,
}

/// Artifact produced by a command together with the process exit status.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub status: i32,
    pub output: String,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Self { status: 0, output }
    }
}

/// Weights or eigenvalues, exact unless some component is a decimal literal.
#[derive(Debug, Clone, PartialEq)]
pub enum Numbers {
    Exact(Vec<Rational>),
    Float(Vec<f64>),
}

pub fn parse_numbers(s: &str) -> anyhow::Result<Numbers> {
    let parts: Vec<&str> = s
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|p| !p.is_empty())
        .collect();
    if parts.is_empty() {
        bail!("no numbers in {s:?}");
    }
    if let Some(exact) = parts.iter().map(|p| Rational::parse_scalar(p)).collect::<Option<Vec<_>>>() {
        return Ok(Numbers::Exact(exact));
    }
    let floats = parts
        .iter()
        .map(|p| f64::parse_scalar(p).with_context(|| format!("cannot parse {p:?} as a number")))
        .collect::<anyhow::Result<Vec<_>>>()?;
    Ok(Numbers::Float(floats))
}

impl Numbers {
    fn to_f64(&self) -> Vec<f64> {
        match self {
            Numbers::Exact(v) => v.iter().map(Scalar::to_f64).collect(),
            Numbers::Float(v) => v.clone(),
        }
    }

    fn len(&self) -> usize {
        match self {
            Numbers::Exact(v) => v.len(),
            Numbers::Float(v) => v.len(),
        }
    }
}

fn weights<T: Scalar>(g: Vec<T>) -> anyhow::Result<Weights<T>> {
    if g.len() != 2 && g.len() != 3 {
        bail!("expected 2 or 3 weights, got {}", g.len());
    }
    Weights::allowing_zero(g).context("invalid weights")
}

fn json_list<T: Scalar>(v: &[T]) -> Value {
    Value::Array(v.iter().map(Scalar::to_json).collect())
}

fn default_format(cmd: &Command) -> Format {
    match cmd {
        Command::Sample { .. } => Format::Csv,
        _ => Format::Json,
    }
}

fn allowed(cmd: &Command, f: Format) -> bool {
    match cmd {
        Command::Sample { .. } => f == Format::Csv,
        Command::Polytope { .. } => matches!(f, Format::Json | Format::Svg),
        _ => f == Format::Json,
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// Executes one command and writes its artifact to `output` when set.
pub fn run(cfg: &RunConfig) -> anyhow::Result<Outcome> {
    let format = cfg.format.unwrap_or_else(|| default_format(&cfg.command));
    if !allowed(&cfg.command, format) {
        bail!("format {format:?} is not available for this command");
    }
    let outcome = match &cfg.command {
        Command::Classify { gamma, tolerance } => Outcome::ok(pretty(&match parse_numbers(gamma)? {
            Numbers::Exact(g) => classify_json(g, *tolerance)?,
            Numbers::Float(g) => classify_json(g, *tolerance)?,
        })),
        Command::Polytope { gamma, tolerance, emit_cones } => Outcome::ok(match parse_numbers(gamma)? {
            Numbers::Exact(g) => polytope_artifact(g, *tolerance, *emit_cones, format)?,
            Numbers::Float(g) => polytope_artifact(g, *tolerance, *emit_cones, format)?,
        }),
        Command::Sample { gamma, count, seed } => {
            let w = weights(parse_numbers(gamma)?.to_f64())?;
            let batch = sample_batch(&w, *count, *seed).context("sampling failed")?;
            let mut buf = Vec::new();
            write_csv(&batch, &mut buf)?;
            Outcome::ok(String::from_utf8(buf)?)
        }
        Command::Verify { gamma, count, seed, tolerance } => {
            if *count == 0 {
                bail!("--count must be positive");
            }
            let report = match parse_numbers(gamma)? {
                Numbers::Exact(g) => verify(&weights(g)?, *count, *seed, *tolerance),
                Numbers::Float(g) => verify(&weights(g)?, *count, *seed, *tolerance),
            }
            .context("verify failed")?;
            let status = if report.passed() { 0 } else { 1 };
            Outcome { status, output: pretty(&serde_json::to_value(&report)?) }
        }
        Command::Bounds { lambda, target, tolerance } => {
            let lambdas = parse_numbers(lambda)?;
            let target = target.as_deref().map(parse_numbers).transpose()?;
            let exact = matches!(lambdas, Numbers::Exact(_)) && !matches!(target, Some(Numbers::Float(_)));
            let v = if exact {
                let Numbers::Exact(l) = lambdas else { unreachable!() };
                let t = match target {
                    Some(Numbers::Exact(t)) => Some(t),
                    _ => None,
                };
                bounds_json(l, t, *tolerance)?
            } else {
                bounds_json(lambdas.to_f64(), target.map(|t| t.to_f64()), *tolerance)?
            };
            Outcome::ok(pretty(&v))
        }
        Command::Sweep { from, to, steps } => {
            let (a, b) = (parse_numbers(from)?, parse_numbers(to)?);
            if a.len() != b.len() {
                bail!("--from and --to need the same number of weights");
            }
            if *steps == 0 {
                bail!("--steps must be positive");
            }
            Outcome::ok(match (a, b) {
                (Numbers::Exact(a), Numbers::Exact(b)) => sweep_lines(a, b, *steps)?,
                (a, b) => sweep_lines(a.to_f64(), b.to_f64(), *steps)?,
            })
        }
    };
    if let Some(path) = &cfg.output {
        std::fs::write(path, &outcome.output).with_context(|| format!("cannot write {}", path.display()))?;
    }
    Ok(outcome)
}

fn label_fields<T: Scalar>(w: &Weights<T>, tol: f64, m: &mut Map<String, Value>) {
    if w.len() == 2 {
        m.insert("label".into(), Value::String(classify_n2_with(w, tol).label().into()));
    } else {
        let (label, canon) = classify_n3_with(w, tol);
        m.insert("label".into(), Value::String(label.label().into()));
        m.insert("starred".into(), Value::Bool(canon.starred));
        m.insert("sorted_gammas".into(), json_list(&canon.sorted_gammas));
        m.insert("permutation".into(), json!(canon.permutation.0));
    }
}

fn classify_json<T: Scalar>(g: Vec<T>, tol: f64) -> anyhow::Result<Value> {
    let w = weights(g)?;
    let mut m = Map::new();
    m.insert("gammas".into(), json_list(w.gammas()));
    m.insert("n".into(), json!(w.len()));
    m.insert("exact".into(), Value::Bool(T::EXACT));
    label_fields(&w, tol, &mut m);
    Ok(Value::Object(m))
}

fn fixed_point_marks<T: Scalar>(w: &Weights<T>) -> Vec<(String, Spectrum<T>)> {
    if w.len() != w.nonzero().len() {
        return Vec::new();
    }
    match fixed_point_spectra(w) {
        FixedPointSpectra::Two(f) => vec![("a".into(), f.a), ("c".into(), f.c)],
        FixedPointSpectra::Three(f) => ["a", "b", "c1", "c2", "c3"]
            .iter()
            .zip(f.all())
            .map(|(n, s)| (n.to_string(), s.clone()))
            .collect(),
    }
}

fn polytope_json<T: Scalar>(w: &Weights<T>, tol: f64, emit_cones: bool) -> anyhow::Result<Value> {
    let p = if w.len() == 2 { build_polytope_n2_with(w, tol) } else { build_polytope_n3_with(w, tol) }
        .context("polytope construction failed")?;
    let mut m = Map::new();
    m.insert("gammas".into(), json_list(w.gammas()));
    m.insert("exact".into(), Value::Bool(T::EXACT));
    label_fields(w, tol, &mut m);
    let marks: Map<String, Value> = fixed_point_marks(w)
        .into_iter()
        .map(|(n, s)| (n, json_list(&s.to_array())))
        .collect();
    m.insert("fixed_points".into(), Value::Object(marks));
    m.insert("polytope".into(), polytope_to_json(&p));
    if emit_cones && w.len() == 3 && w.nonzero().len() == 3 {
        let (_, canon) = classify_n3_with(w, tol);
        let lc = local_cones(&canon.sorted_gammas, tol).context("local cones unavailable")?;
        let cones: Vec<Value> = lc
            .cones
            .iter()
            .map(|(which, c)| {
                let c = if canon.starred { c.starred() } else { c.clone() };
                let mut v = c.to_json();
                v["at"] = Value::String(which.name().into());
                v
            })
            .collect();
        m.insert("cones".into(), Value::Array(cones));
        m.insert("continuity_limit".into(), Value::Bool(lc.limit));
    }
    Ok(Value::Object(m))
}

fn polytope_artifact<T: Scalar>(g: Vec<T>, tol: f64, emit_cones: bool, format: Format) -> anyhow::Result<String> {
    let w = weights(g)?;
    let v = polytope_json(&w, tol, emit_cones)?;
    if format == Format::Svg {
        let p = if w.len() == 2 { build_polytope_n2_with(&w, tol) } else { build_polytope_n3_with(&w, tol) }?;
        let title = v["label"].as_str().map(|l| format!("Polytope {l}"));
        let marks = fixed_point_marks(&w).into_iter().map(|(n, s)| (n, s.to_f64())).collect();
        return Ok(polytope_svg(&p, &SvgOptions { title, marks }));
    }
    Ok(pretty(&v))
}

fn bounds_json<T: Scalar>(lambdas: Vec<T>, target: Option<Vec<T>>, tol: f64) -> anyhow::Result<Value> {
    let specs: Vec<DoubleEigMatrixSpec<T>> = lambdas.into_iter().map(DoubleEigMatrixSpec::new).collect();
    match specs.as_slice() {
        [a, b] => {
            if target.is_some() {
                bail!("--target needs three matrices");
            }
            let r = sum_bounds_two(a, b);
            Ok(json!({
                "lambda1": r.lambda1.to_json(),
                "lambda2_interval": [r.lambda2_interval.0.to_json(), r.lambda2_interval.1.to_json()],
            }))
        }
        [a, b, c] => {
            let p = sum_bounds_three(a, b, c).context("bounds unavailable")?;
            let gammas: Vec<T> = specs.iter().map(su3poly::bounds::gamma_of_lambda).collect();
            let mut m = Map::new();
            m.insert("gammas".into(), json_list(&gammas));
            label_fields(&weights(gammas)?, DEFAULT_SNAP_TOL, &mut m);
            m.insert("polytope".into(), polytope_to_json(&p));
            if let Some(t) = target {
                let [l1, l2, l3]: [T; 3] = t.try_into().map_err(|_| anyhow::anyhow!("--target needs three numbers"))?;
                let s = Spectrum::new(l1, l2, l3).context("invalid target spectrum")?;
                m.insert("contains".into(), Value::Bool(check_spectrum(a, b, c, &s, tol)?));
            }
            Ok(Value::Object(m))
        }
        _ => bail!("expected 2 or 3 eigenvalues"),
    }
}

fn sweep_lines<T: Scalar>(from: Vec<T>, to: Vec<T>, steps: usize) -> anyhow::Result<String> {
    let mut out = String::new();
    for k in 0..=steps {
        let t = T::ratio(k as i64, steps as i64);
        let g: Vec<T> = from
            .iter()
            .zip(&to)
            .map(|(a, b)| a.clone() + (b.clone() - a.clone()) * t.clone())
            .collect();
        let w = weights(g)?;
        let mut v = polytope_json(&w, DEFAULT_SNAP_TOL, false)?;
        v["step"] = json!(k);
        v["t"] = t.to_json();
        out.push_str(&serde_json::to_string(&v)?);
        out.push('\n');
    }
    Ok(out)
}
