//! The `rado` command line.
//!
//! Complexes are read from `-i PATH` (or standard input when omitted, or
//! inline when the argument starts with `{`) and written to `-o PATH` (or
//! standard output). Reports are single-line JSON records. Exit status is 0
//! on success, 1 for a domain failure (no witness, a failed `--strict`
//! check), 2 for usage and input errors, 3 when a size or label bound is hit.

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::ample::{
    all_witnesses, back_and_forth, embed_complex, find_witness, is_ample_window, is_d_ample_window,
    PartialIsomorphism, WitnessQuery,
};
use crate::arith::ArithmeticRado;
use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::format::{complex_from_arg, from_json_str, to_json_string};
use crate::grow::grow;
use crate::randomness::{
    cylinder_measure, extension_probability, induced_measure, lemma21_bruteforce, lemma21_sum, lemma21_sum_exact,
    p_of_subcomplex, select_vertices, CylinderSet, ProbabilitySystem, RandomComplex,
};
use crate::simplex::Simplex;
use crate::vertex::Vertex;

/// Default cap on the size of a sampled complex written out by `sample`.
pub const DEFAULT_SAMPLE_LIMIT: usize = 5_000_000;

#[derive(Debug, Parser)]
#[command(name = "rado", version, about = "Finite approximations of the Rado simplicial complex")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Window of the arithmetic complex, optionally with closed-form witnesses added.
    BuildExplicit(BuildExplicit),
    /// Levels of the inductive cone construction.
    BuildInductive(BuildInductive),
    /// Random complex on labels 1..=n.
    Sample(Sample),
    /// Complex induced on a random vertex selection.
    Induce(Induce),
    /// Witness vertex for a pair (U, A): closed form or scan.
    Witness(WitnessCmd),
    /// Window ampleness report.
    CheckAmple(CheckAmple),
    /// Window report for the d-ample variant.
    CheckDAmple(CheckDAmple),
    /// Back-and-forth extension of a partial isomorphism.
    ExtendIso(ExtendIso),
    /// Embed a complex as an induced subcomplex.
    Embed(Embed),
    /// Cylinder, induced, subcomplex and extension probabilities.
    Measure(Measure),
    /// Check that p(A) sums to one over the subcomplexes of L.
    #[command(name = "verify-lemma21")]
    VerifyLemma21(VerifyLemma21),
    /// Delete the closed star of some simplexes.
    Delete(Delete),
    /// Link of a simplex.
    Link(LinkCmd),
    /// Vertex and simplex counts.
    Stats(Stats),
}

#[derive(Debug, Args)]
pub struct Input {
    /// Input complex: a path, inline JSON, or standard input when omitted.
    #[arg(short = 'i', long = "input")]
    pub input: Option<String>,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Output path; standard output when omitted.
    #[arg(short = 'o', long = "output")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct Probability {
    /// Constant probability for every simplex.
    #[arg(long = "p", conflicts_with = "prob_spec")]
    pub p: Option<f64>,
    /// Probability-system spec, as a path or inline JSON.
    #[arg(long = "prob-spec")]
    pub prob_spec: Option<String>,
}

#[derive(Debug, Args)]
pub struct BuildExplicit {
    /// Labels to include, e.g. `1..20` or `1,2,5`.
    #[arg(long, alias = "vertices", default_value = "1..10")]
    pub labels: String,
    /// Add the closed-form witness for every U within these labels and every A.
    #[arg(long = "witnesses-over")]
    pub witnesses_over: Option<String>,
    /// Largest number of labels in the window.
    #[arg(long, default_value_t = 200)]
    pub cap: usize,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct BuildInductive {
    #[arg(long)]
    pub levels: usize,
    /// Attach cones only over subcomplexes with at most this many vertices.
    #[arg(long, alias = "base-bound")]
    pub bound: Option<usize>,
    /// Also write the base-to-apex table to this path.
    #[arg(long = "emit-witness-table")]
    pub emit_witness_table: Option<PathBuf>,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct Sample {
    #[arg(short = 'n')]
    pub n: u64,
    #[command(flatten)]
    pub prob: Probability,
    /// Seed; a fresh one is drawn and reported when omitted.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Refuse to materialize more simplexes than this.
    #[arg(long, default_value_t = DEFAULT_SAMPLE_LIMIT)]
    pub limit: usize,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct Induce {
    #[command(flatten)]
    pub input: Input,
    /// Selection probability per vertex.
    #[arg(long = "p", default_value_t = 0.5)]
    pub p: f64,
    /// Use p^v for vertex v instead of a constant.
    #[arg(long)]
    pub power: bool,
    #[arg(long)]
    pub seed: Option<u64>,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct WitnessCmd {
    /// Use the closed-form witness of the arithmetic complex.
    #[arg(long)]
    pub explicit: bool,
    #[command(flatten)]
    pub input: Input,
    /// The vertex set U, e.g. `1,2`.
    #[arg(short = 'U', long = "u", default_value = "", allow_hyphen_values = true)]
    pub u: String,
    /// The subcomplex A, as a path or inline JSON.
    #[arg(short = 'A', long = "a", default_value = r#"{"facets":[]}"#)]
    pub a: String,
    /// List every witness instead of the smallest.
    #[arg(long, conflicts_with = "explicit")]
    pub all: bool,
    /// Restrict the scan to these vertices.
    #[arg(long, conflicts_with = "explicit")]
    pub candidates: Option<String>,
}

#[derive(Debug, Args)]
pub struct CheckAmple {
    #[command(flatten)]
    pub input: Input,
    /// Vertices from which the sets U are drawn.
    #[arg(long)]
    pub umax: String,
    #[arg(long, default_value_t = 3)]
    pub cap: usize,
    /// Check the d-ample variant instead.
    #[arg(long)]
    pub d: Option<usize>,
    /// Exit with status 1 when some query fails.
    #[arg(long)]
    pub strict: bool,
}

#[derive(Debug, Args)]
pub struct CheckDAmple {
    #[command(flatten)]
    pub input: Input,
    #[arg(long)]
    pub umax: String,
    #[arg(long, default_value_t = 2)]
    pub cap: usize,
    #[arg(long, default_value_t = 3)]
    pub d: usize,
    #[arg(long)]
    pub strict: bool,
}

#[derive(Debug, Args)]
pub struct ExtendIso {
    #[arg(short = 'a')]
    pub a: String,
    #[arg(short = 'b')]
    pub b: String,
    #[arg(long, default_value_t = 6)]
    pub steps: usize,
    /// Initial pairs, e.g. `1:1,2:5`.
    #[arg(long = "seed-pairs", default_value = "")]
    pub seed_pairs: String,
}

#[derive(Debug, Args)]
pub struct Embed {
    #[command(flatten)]
    pub input: Input,
    /// The complex to embed.
    #[arg(short = 'l', long = "complex")]
    pub l: String,
}

#[derive(Debug, Args)]
pub struct Measure {
    /// Cylinder Z(Y, n): the complex Y.
    #[arg(long, requires = "n", group = "which")]
    pub cylinder: Option<String>,
    #[arg(short = 'n')]
    pub n: Option<usize>,
    /// Probability that the restriction to U is exactly this complex.
    #[arg(long, requires = "u", group = "which")]
    pub induced: Option<String>,
    #[arg(short = 'U', long = "u")]
    pub u: Option<String>,
    /// p(A) for this subcomplex of `--in`.
    #[arg(long, requires = "within", group = "which")]
    pub subcomplex: Option<String>,
    /// Probability that `--vertex` has link trace equal to this subcomplex of `--in`.
    #[arg(long, requires_all = ["within", "vertex"], group = "which")]
    pub extension: Option<String>,
    #[arg(long = "in")]
    pub within: Option<String>,
    #[arg(long)]
    pub vertex: Option<String>,
    #[command(flatten)]
    pub prob: Probability,
}

#[derive(Debug, Args)]
pub struct VerifyLemma21 {
    #[command(flatten)]
    pub input: Input,
    #[command(flatten)]
    pub prob: Probability,
    /// Compute in exact rational arithmetic.
    #[arg(long)]
    pub exact: bool,
    /// Also run the subset-enumeration check and compare marginals.
    #[arg(long)]
    pub bruteforce: bool,
}

#[derive(Debug, Args)]
pub struct Delete {
    #[command(flatten)]
    pub input: Input,
    /// A simplex whose star is removed, e.g. `1,2`; repeatable.
    #[arg(long = "simplex", required = true)]
    pub simplexes: Vec<String>,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct LinkCmd {
    #[command(flatten)]
    pub input: Input,
    #[arg(long)]
    pub simplex: String,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct Stats {
    #[command(flatten)]
    pub input: Input,
    /// Print a JSON record instead of text.
    #[arg(long)]
    pub json: bool,
}

/// Parses `1,2,7` and ranges such as `1..5`; the empty string is the empty list.
pub fn parse_labels(text: &str) -> Result<Vec<Vertex>> {
    let mut out = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        match part.split_once("..") {
            Some((lo, hi)) => {
                let lo: u64 = lo.trim().parse().map_err(|_| bad_label(part))?;
                let hi: u64 = hi.trim().parse().map_err(|_| bad_label(part))?;
                if lo == 0 {
                    return Err(bad_label(part));
                }
                out.extend((lo..=hi).map(Vertex::from));
            }
            None => out.push(part.parse()?),
        }
    }
    Ok(out)
}

fn bad_label(part: &str) -> Error {
    Error::InvalidInput(format!("cannot read labels from {part:?}"))
}

fn parse_simplex(text: &str) -> Result<Simplex> {
    Simplex::from_unsorted(parse_labels(text)?)
}

fn read_input(input: &Input) -> Result<Complex> {
    match &input.input {
        Some(arg) if arg != "-" => complex_from_arg(arg),
        _ => {
            let mut text = String::new();
            std::io::stdin().read_to_string(&mut text)?;
            from_json_str(&text)
        }
    }
}

fn read_system(prob: &Probability) -> Result<ProbabilitySystem> {
    match (&prob.p, &prob.prob_spec) {
        (Some(p), _) => ProbabilitySystem::constant(*p),
        (None, Some(spec)) if spec.trim_start().starts_with('{') => ProbabilitySystem::from_json_str(spec),
        (None, Some(path)) => ProbabilitySystem::from_json_str(&std::fs::read_to_string(path)?),
        (None, None) => Ok(ProbabilitySystem::half()),
    }
}

fn emit_complex(out: &Output, complex: &Complex, stdout: &mut dyn Write) -> Result<()> {
    let text = to_json_string(complex);
    match &out.output {
        Some(path) => std::fs::write(path, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn line(stdout: &mut dyn Write, value: serde_json::Value) -> Result<()> {
    writeln!(stdout, "{value}")?;
    Ok(())
}

fn labels_json(vs: &[Vertex]) -> serde_json::Value {
    json!(vs.iter().map(ToString::to_string).collect::<Vec<_>>())
}

/// Seed records go to standard output when the complex itself goes to a
/// file, and to standard error otherwise so that standard output stays a
/// single complex document.
fn report_seed(
    out: &Output,
    record: serde_json::Value,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<()> {
    if out.output.is_some() {
        line(stdout, record)
    } else {
        line(stderr, record)
    }
}

/// Exit status for an error.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::SizeLimit { .. } | Error::LabelTooLarge { .. } => 3,
        Error::InvalidInput(_) | Error::MalformedSimplex(_) | Error::Json(_) | Error::Io(_) => 2,
        _ => 1,
    }
}

/// Runs one parsed command. `Ok(status)` carries 0 or 1 for a domain failure.
pub fn run(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32> {
    match cli.command {
        Command::BuildExplicit(c) => {
            let ar = ArithmeticRado::new().with_window_cap(c.cap);
            let mut labels = parse_labels(&c.labels)?;
            if let Some(over) = &c.witnesses_over {
                let base = crate::view::sorted_unique(&parse_labels(over)?);
                for u in crate::grow::subsets_up_to(&base, base.len()) {
                    for a in ar.window(&u)?.subcomplexes()? {
                        labels.push(ar.witness(&u, &a)?);
                    }
                }
            }
            emit_complex(&c.out, &ar.window(&labels)?, stdout)?;
        }
        Command::BuildInductive(c) => {
            let rec = grow(c.levels, c.bound)?;
            if let Some(path) = &c.emit_witness_table {
                std::fs::write(path, format!("{}\n", rec.witness_table_json()))?;
            }
            emit_complex(&c.out, rec.top(), stdout)?;
        }
        Command::Sample(c) => {
            let sys = read_system(&c.prob)?;
            let seed = c.seed.unwrap_or_else(rand::random);
            let x = RandomComplex::new(c.n, sys.clone(), seed).materialize_bounded(c.limit)?;
            emit_complex(&c.out, &x, stdout)?;
            let record = json!({
                "command": "sample", "seed": seed, "n": c.n, "system": sys.to_json(),
                "vertices": x.vertices().len(), "simplexes": x.len(),
            });
            report_seed(&c.out, record, stdout, stderr)?;
        }
        Command::Induce(c) => {
            let x = read_input(&c.input)?;
            let seed = c.seed.unwrap_or_else(rand::random);
            let p = c.p;
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidInput(format!("p must lie in [0, 1], got {p}")));
            }
            let prob = |v: &Vertex| {
                if c.power {
                    v.as_u64().map_or(0.0, |l| p.powf(l as f64))
                } else {
                    p
                }
            };
            let keep = select_vertices(&x.vertices().iter().cloned().collect::<Vec<_>>(), prob, seed);
            let induced = x.induced(&keep);
            emit_complex(&c.out, &induced, stdout)?;
            let record = json!({"command": "induce", "seed": seed, "selected": keep.len()});
            report_seed(&c.out, record, stdout, stderr)?;
        }
        Command::Witness(c) => {
            let u = parse_labels(&c.u)?;
            let a = complex_from_arg(&c.a)?;
            if c.explicit {
                let w = ArithmeticRado::new().witness(&u, &a)?;
                writeln!(stdout, "{w}")?;
                return Ok(0);
            }
            let x = read_input(&c.input)?;
            let q = WitnessQuery::new(u, a);
            if c.all {
                let ws = all_witnesses(&x, &q)?;
                line(stdout, json!({"witnesses": labels_json(&ws)}))?;
                return Ok(if ws.is_empty() { 1 } else { 0 });
            }
            let candidates = c.candidates.as_deref().map(parse_labels).transpose()?;
            match find_witness(&x, &q, candidates.as_deref())? {
                Some(w) => writeln!(stdout, "{w}")?,
                None => {
                    writeln!(stdout, "none")?;
                    return Ok(1);
                }
            }
        }
        Command::CheckAmple(c) => {
            let x = read_input(&c.input)?;
            let umax = parse_labels(&c.umax)?;
            let report = match c.d {
                Some(d) => is_d_ample_window(&x, &umax, c.cap, d)?,
                None => is_ample_window(&x, &umax, c.cap)?,
            };
            line(stdout, report.to_json())?;
            return Ok(if c.strict && !report.passed() { 1 } else { 0 });
        }
        Command::CheckDAmple(c) => {
            let x = read_input(&c.input)?;
            let report = is_d_ample_window(&x, &parse_labels(&c.umax)?, c.cap, c.d)?;
            line(stdout, report.to_json())?;
            return Ok(if c.strict && !report.passed() { 1 } else { 0 });
        }
        Command::ExtendIso(c) => {
            let a = complex_from_arg(&c.a)?;
            let b = complex_from_arg(&c.b)?;
            let mut seed = PartialIsomorphism::empty();
            for pair in c.seed_pairs.split(',').map(str::trim).filter(|p| !p.is_empty()) {
                let (l, r) = pair
                    .split_once(':')
                    .ok_or_else(|| Error::InvalidInput(format!("seed pair {pair:?} is not of the form a:b")))?;
                seed.push(l.trim().parse()?, r.trim().parse()?)?;
            }
            let run = back_and_forth(&a, &b, seed, c.steps)?;
            line(stdout, run.to_json())?;
            return Ok(if run.failure.is_some() { 1 } else { 0 });
        }
        Command::Embed(c) => {
            let x = read_input(&c.input)?;
            let l = complex_from_arg(&c.l)?;
            match embed_complex(&x, &l)? {
                Some(iso) => line(stdout, json!({"embedding": iso.to_json()}))?,
                None => {
                    line(stdout, json!({"embedding": null}))?;
                    return Ok(1);
                }
            }
        }
        Command::Measure(c) => {
            let sys = read_system(&c.prob)?;
            let within = || -> Result<Complex> { complex_from_arg(c.within.as_deref().expect("required by clap")) };
            let (kind, value) = if let Some(y) = &c.cylinder {
                let cyl = CylinderSet::new(complex_from_arg(y)?, c.n.expect("required by clap"))?;
                ("cylinder", cylinder_measure(&cyl, &sys)?)
            } else if let Some(l) = &c.induced {
                let u = parse_labels(c.u.as_deref().expect("required by clap"))?;
                ("induced", induced_measure(&u, &complex_from_arg(l)?, &sys)?)
            } else if let Some(a) = &c.subcomplex {
                ("p-of-subcomplex", p_of_subcomplex(&complex_from_arg(a)?, &within()?, &sys)?)
            } else if let Some(a) = &c.extension {
                let v: Vertex = c.vertex.as_deref().expect("required by clap").parse()?;
                ("extension", extension_probability(&within()?, &complex_from_arg(a)?, &v, &sys)?)
            } else {
                return Err(Error::InvalidInput(
                    "choose one of --cylinder, --induced, --subcomplex, --extension".into(),
                ));
            };
            line(stdout, json!({"measure": kind, "value": value, "system": sys.to_json()}))?;
        }
        Command::VerifyLemma21(c) => {
            let l = read_input(&c.input)?;
            let sys = read_system(&c.prob)?;
            let mut ok = if c.exact {
                let one = num_traits::One::is_one(&lemma21_sum_exact(&l, &sys)?);
                if one {
                    writeln!(stdout, "sum = 1 (exact)")?;
                } else {
                    writeln!(stdout, "sum != 1 (exact)")?;
                }
                one
            } else {
                let s = lemma21_sum(&l, &sys)?;
                writeln!(stdout, "sum = {s} (float, error {:.1e})", (s - 1.0).abs())?;
                (s - 1.0).abs() <= 1e-9
            };
            if c.bruteforce {
                let bf = lemma21_bruteforce(&l, &sys)?;
                let mut worst: f64 = 0.0;
                for (a, w) in &bf.marginals {
                    worst = worst.max((w - p_of_subcomplex(a, &l, &sys)?).abs());
                }
                writeln!(stdout, "bruteforce total = {} over {} subcomplexes, max marginal error {worst:.1e}", bf.total, bf.marginals.len())?;
                ok &= (bf.total - 1.0).abs() <= 1e-9 && worst <= 1e-12;
            }
            return Ok(if ok { 0 } else { 1 });
        }
        Command::Delete(c) => {
            let x = read_input(&c.input)?;
            let f = c.simplexes.iter().map(|s| parse_simplex(s)).collect::<Result<Vec<_>>>()?;
            emit_complex(&c.out, &x.delete_star(&f)?, stdout)?;
        }
        Command::Link(c) => {
            let x = read_input(&c.input)?;
            emit_complex(&c.out, &x.link(&parse_simplex(&c.simplex)?)?, stdout)?;
        }
        Command::Stats(c) => {
            let x = read_input(&c.input)?;
            if c.json {
                line(stdout, json!({"vertices": x.vertices().len(), "simplexes": x.len(), "f_vector": x.f_vector()}))?;
            } else {
                writeln!(stdout, "{} vertices, {} simplexes", x.vertices().len(), x.len())?;
                let by_dim: Vec<String> = x.f_vector().iter().map(ToString::to_string).collect();
                writeln!(stdout, "by dimension: {}", by_dim.join(" "))?;
            }
        }
    }
    Ok(0)
}

/// Parses `args` and runs the command, returning the process exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let (mut out, mut err) = (std::io::stdout().lock(), std::io::stderr().lock());
    match run(cli, &mut out, &mut err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
