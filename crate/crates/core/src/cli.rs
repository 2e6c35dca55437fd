//! Command-line front end. [`run`] does all the work and returns the text
//! destined for stdout and stderr plus the exit code, so it can be driven
//! in-process.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 contract violation (for
//! example an ideal that is not w-stable), 3 negative answer from a decision
//! command (`is-wstable`, `weight-vector`).

use std::ffi::OsString;
use std::io::Read;

use clap::{Args, Parser, Subcommand};
use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::catalan::{catalan_diagram, generator_stats};
use crate::closure::{is_w_stable, w_borel_gens, w_closure};
use crate::cone::{cone_rays, constraint_system, principal_weight_vector, PrincipalOutcome};
use crate::error::Error;
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, WeightVector};
use crate::parse::{parse_generators, parse_ideal, parse_monomial, parse_weights, show, variable_name, Naming, ParseError};
use crate::series::{betti_numbers, hilbert_series, poincare_series, stanley_decomposition};
use crate::tree::{tree_from_ideal, tree_from_monomial, TruncationTree};

#[derive(Debug, Parser)]
#[command(name = "wstable", version, about = "Computations with w-stable monomial ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Options,
}

#[derive(Debug, Args)]
struct Options {
    /// Comma-separated non-increasing positive weights (default: all ones).
    #[arg(long, global = true)]
    weights: Option<String>,
    /// Number of variables (default: length of --weights, else inferred).
    #[arg(long, global = true)]
    nvars: Option<usize>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Largest weighted degree listed in Hilbert series expansions.
    #[arg(long = "expand-to", global = true, value_name = "D")]
    expand_to: Option<usize>,
    /// Replace the input ideal by its weighted closure first.
    #[arg(long, global = true)]
    closure: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Weighted Borel closure of a list of monomials.
    Closure { input: String },
    /// Weighted Borel generators of a w-stable ideal.
    Bgens { input: String },
    /// Whether an ideal is w-stable.
    IsWstable { input: String },
    /// Truncation tree of a monomial.
    Tree { input: String },
    /// Generator tree of an ideal.
    TreeIdeal { input: String },
    /// Weighted Catalan diagram of a monomial.
    Catalan { input: String },
    /// Hilbert series of the quotient by a w-stable ideal.
    Hilbert { input: String },
    /// Stanley decomposition of the quotient by a w-stable ideal.
    Stanley { input: String },
    /// Poincaré series of a w-stable ideal.
    Poincare { input: String },
    /// Total and graded Betti numbers of a w-stable ideal.
    Betti { input: String },
    /// Extreme rays of the principal cone of a strongly stable ideal.
    Cone { input: String },
    /// A weight vector making a strongly stable ideal principal, if any.
    WeightVector { input: String },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Closure { .. } => "closure",
            Command::Bgens { .. } => "bgens",
            Command::IsWstable { .. } => "is-wstable",
            Command::Tree { .. } => "tree",
            Command::TreeIdeal { .. } => "tree-ideal",
            Command::Catalan { .. } => "catalan",
            Command::Hilbert { .. } => "hilbert",
            Command::Stanley { .. } => "stanley",
            Command::Poincare { .. } => "poincare",
            Command::Betti { .. } => "betti",
            Command::Cone { .. } => "cone",
            Command::WeightVector { .. } => "weight-vector",
        }
    }

    fn input(&self) -> &str {
        match self {
            Command::Closure { input }
            | Command::Bgens { input }
            | Command::IsWstable { input }
            | Command::Tree { input }
            | Command::TreeIdeal { input }
            | Command::Catalan { input }
            | Command::Hilbert { input }
            | Command::Stanley { input }
            | Command::Poincare { input }
            | Command::Betti { input }
            | Command::Cone { input }
            | Command::WeightVector { input } => input,
        }
    }
}

/// Captured result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

enum Failure {
    Usage(String),
    Contract(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Contract(e)
    }
}

fn parse_failure(what: &str, text: &str, e: ParseError) -> Failure {
    Failure::Usage(format!("cannot parse {what} `{text}`: {e}"))
}

const DEFAULT_EXPANSION: usize = 10;

/// Successful output: the text form, the JSON result, and whether a decision
/// command answered no.
struct Report {
    text: String,
    result: Value,
    negative: bool,
}

impl Report {
    fn new(text: impl Into<String>, result: Value) -> Self {
        let mut text = text.into();
        if !text.ends_with('\n') {
            text.push('\n');
        }
        Self { text, result, negative: false }
    }
}

/// Runs the command line `args` (program name first). An input of `-` is
/// read from `stdin`.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { stdout: String::new(), stderr: text, code: 1 }
            } else {
                Outcome { stdout: text, stderr: String::new(), code: 0 }
            };
        }
    };
    let mut input = cli.command.input().to_string();
    if input == "-" {
        input.clear();
        if let Err(e) = stdin.read_to_string(&mut input) {
            return Outcome { stdout: String::new(), stderr: format!("error: cannot read stdin: {e}\n"), code: 1 };
        }
        input = input.trim().to_string();
    }
    match execute(&cli.command, &cli.opts, &input) {
        Ok((weights, report)) => {
            let stdout = if cli.opts.json {
                let doc = json!({
                    "command": cli.command.name(),
                    "input": input,
                    "weights": weights.as_slice(),
                    "result": report.result,
                });
                format!("{}\n", serde_json::to_string_pretty(&doc).expect("JSON values serialize"))
            } else {
                report.text
            };
            Outcome { stdout, stderr: String::new(), code: if report.negative { 3 } else { 0 } }
        }
        Err(Failure::Usage(msg)) => Outcome { stdout: String::new(), stderr: format!("error: {msg}\n"), code: 1 },
        Err(Failure::Contract(e)) => Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code: 2 },
    }
}

/// Resolves the weight vector and the number of variables: `--nvars` wins,
/// then the length of `--weights`, then the input itself.
fn weights_and_nvars(opts: &Options) -> Result<(Option<WeightVector>, Option<usize>), Failure> {
    let weights = match &opts.weights {
        Some(text) => Some(parse_weights(text).map_err(|e| parse_failure("weights", text, e))?),
        None => None,
    };
    match (&weights, opts.nvars) {
        (Some(w), Some(n)) if w.len() != n => {
            Err(Failure::Usage(format!("--weights has {} entries but --nvars is {n}", w.len())))
        }
        (Some(w), None) => Ok((weights.clone(), Some(w.len()))),
        _ => Ok((weights, opts.nvars)),
    }
}

fn finish_weights(weights: Option<WeightVector>, n: usize) -> WeightVector {
    weights.unwrap_or_else(|| WeightVector::ones(n))
}

fn execute(cmd: &Command, opts: &Options, input: &str) -> Result<(WeightVector, Report), Failure> {
    let (weights, nvars) = weights_and_nvars(opts)?;
    match cmd {
        Command::Closure { .. } => {
            let g = parse_generators(input, nvars).map_err(|e| parse_failure("monomials", input, e))?;
            let w = finish_weights(weights, g.nvars);
            let ideal = w_closure(&g.gens, &w)?;
            Ok((w, ideal_report(&ideal, g.naming)))
        }
        Command::Tree { .. } | Command::Catalan { .. } => {
            let (m, naming) = parse_monomial(input, nvars).map_err(|e| parse_failure("monomial", input, e))?;
            let w = finish_weights(weights, m.nvars());
            let report = if matches!(cmd, Command::Tree { .. }) {
                tree_report(&tree_from_monomial(&m, &w, None)?, naming)
            } else {
                catalan_report(&m, &w)?
            };
            Ok((w, report))
        }
        _ => {
            let expr = parse_ideal(input, nvars).map_err(|e| parse_failure("ideal", input, e))?;
            let naming = expr.naming;
            let n = expr.ideal.nvars();
            let w = finish_weights(weights, n);
            let ideal = if opts.closure {
                let closing = match cmd {
                    Command::Cone { .. } | Command::WeightVector { .. } => WeightVector::ones(n),
                    _ => w.clone(),
                };
                w_closure(expr.ideal.gens(), &closing)?
            } else {
                expr.ideal
            };
            let report = ideal_command(cmd, &ideal, &w, naming, opts)?;
            Ok((w, report))
        }
    }
}

fn ideal_command(
    cmd: &Command,
    ideal: &MonomialIdeal,
    w: &WeightVector,
    naming: Naming,
    opts: &Options,
) -> Result<Report, Failure> {
    let mono = |m: &Monomial| show(m, naming).to_string();
    let n = ideal.nvars();
    let report = match cmd {
        Command::Bgens { .. } => {
            let gens = w_borel_gens(ideal, w)?;
            let names: Vec<String> = gens.iter().map(mono).collect();
            Report::new(names.join(", "), json!(names))
        }
        Command::IsWstable { .. } => {
            let answer = is_w_stable(ideal, w)?;
            let mut r = Report::new(answer.to_string(), json!(answer));
            r.negative = !answer;
            r
        }
        Command::TreeIdeal { .. } => tree_report(&tree_from_ideal(ideal), naming),
        Command::Hilbert { .. } => {
            let hs = hilbert_series(ideal, w)?;
            let bound = opts.expand_to.unwrap_or(DEFAULT_EXPANSION);
            let expansion = hs.expand(bound);
            let mut text = format!("{}\n", hs.render());
            if let Some(terms) = hs.terms() {
                for t in terms {
                    let den: String = w.as_slice()[t.k + 1..]
                        .iter()
                        .map(|&x| if x == 1 { "(1-t)".to_string() } else { format!("(1-t^{x})") })
                        .collect();
                    let den = if den.is_empty() { String::new() } else { format!(" / {den}") };
                    let power = match t.degree {
                        0 => String::new(),
                        1 => "t".to_string(),
                        s => format!("t^{s}"),
                    };
                    let head = match (t.coefficient.to_string().as_str(), power.is_empty()) {
                        (c, true) => c.to_string(),
                        ("1", false) => power,
                        (c, false) => format!("{c}*{power}"),
                    };
                    text.push_str(&format!("  {head}{den}\n"));
                }
            }
            let values: Vec<String> = expansion.iter().map(ToString::to_string).collect();
            text.push_str(&format!("expansion: {}", values.join(", ")));
            let terms = hs.terms().map(|ts| {
                ts.iter()
                    .map(|t| json!({"coefficient": biguint(&t.coefficient), "degree": t.degree, "k": t.k + 1}))
                    .collect::<Vec<_>>()
            });
            Report::new(
                text,
                json!({
                    "numerator": hs.numerator().coeffs().iter().map(bigint).collect::<Vec<_>>(),
                    "denominator": w.as_slice(),
                    "terms": terms,
                    "expansion": expansion.iter().map(bigint).collect::<Vec<_>>(),
                }),
            )
        }
        Command::Stanley { .. } => {
            let sd = stanley_decomposition(ideal, w)?;
            let mut text = String::new();
            let mut pieces = Vec::new();
            for p in &sd.pieces {
                let free: Vec<String> = p.free_vars.iter().map(|&j| variable_name(j, n, naming)).collect();
                if free.is_empty() {
                    text.push_str(&format!("{}\n", mono(&p.coset)));
                } else {
                    text.push_str(&format!("{} * K[{}]\n", mono(&p.coset), free.join(", ")));
                }
                pieces.push(json!({"coset": mono(&p.coset), "free": free}));
            }
            if sd.pieces.is_empty() {
                text.push_str("0\n");
            }
            Report::new(text, json!(pieces))
        }
        Command::Poincare { .. } => {
            let p = poincare_series(ideal, w)?;
            Report::new(p.to_string(), json!({"text": p.to_string(), "terms": betti_entries(p.entries())}))
        }
        Command::Betti { .. } => {
            let b = betti_numbers(ideal, w)?;
            let table = b.render_table();
            Report::new(
                table.clone(),
                json!({
                    "totals": b.totals.iter().map(biguint).collect::<Vec<_>>(),
                    "graded": betti_entries(b.graded.entries()),
                    "table": table,
                }),
            )
        }
        Command::Cone { .. } => {
            let sys = constraint_system(ideal)?;
            let cone = cone_rays(&sys);
            let vec_text = |v: &Vec<BigInt>| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
            let mut text = String::new();
            for r in &cone.rays {
                text.push_str(&format!("{}\n", vec_text(r)));
            }
            for l in &cone.lineality {
                text.push_str(&format!("lineality: {}\n", vec_text(l)));
            }
            let vecs = |vs: &[Vec<BigInt>]| vs.iter().map(|v| v.iter().map(bigint).collect::<Vec<_>>()).collect::<Vec<_>>();
            let constraints: Vec<Value> = sys
                .halfspaces
                .iter()
                .map(|h| json!({"normal": h.normal.iter().map(bigint).collect::<Vec<_>>(), "strict": h.strict, "text": h.to_string()}))
                .collect();
            Report::new(
                text,
                json!({
                    "candidate": mono(&sys.candidate),
                    "rays": vecs(&cone.rays),
                    "lineality": vecs(&cone.lineality),
                    "constraints": constraints,
                }),
            )
        }
        Command::WeightVector { .. } => match principal_weight_vector(ideal)? {
            PrincipalOutcome::Principal { weights, generator } => Report::new(
                weights.to_string(),
                json!({"principal": true, "weights": weights.as_slice(), "generator": mono(&generator)}),
            ),
            PrincipalOutcome::NotPrincipal => {
                let mut r = Report::new(
                    "not principally w-stable",
                    json!({"principal": false, "weights": null, "generator": null}),
                );
                r.negative = true;
                r
            }
        },
        Command::Closure { .. } | Command::Tree { .. } | Command::Catalan { .. } => {
            unreachable!("handled before the ideal is parsed")
        }
    };
    Ok(report)
}

fn ideal_report(ideal: &MonomialIdeal, naming: Naming) -> Report {
    let gens: Vec<String> = ideal.gens().iter().map(|g| show(g, naming).to_string()).collect();
    Report::new(show(ideal, naming).to_string(), json!(gens))
}

fn tree_report(tree: &TruncationTree, naming: Naming) -> Report {
    let name = |m: &Monomial| show(m, naming).to_string();
    let mut vertices: Vec<&Monomial> = tree.vertices().collect();
    vertices.sort_by(|a, b| a.graded_cmp(b));
    let mut sinks: Vec<&Monomial> = tree.sinks().collect();
    sinks.sort_by(|a, b| a.graded_cmp(b));
    let edges: Vec<[String; 2]> = vertices
        .iter()
        .flat_map(|v| tree.children(v).iter().map(|c| [name(v), name(c)]))
        .collect();
    Report::new(
        tree.render(name),
        json!({
            "degree_bound": tree.degree_bound(),
            "vertices": vertices.iter().map(|v| name(v)).collect::<Vec<_>>(),
            "edges": edges,
            "sinks": sinks.iter().map(|v| name(v)).collect::<Vec<_>>(),
        }),
    )
}

fn catalan_report(m: &Monomial, w: &WeightVector) -> Result<Report, Failure> {
    let d = catalan_diagram(m, w)?;
    let rows: Vec<Vec<Value>> = d.rows().iter().map(|r| r.iter().map(biguint).collect()).collect();
    let stats: Vec<Value> = generator_stats(&d)
        .iter()
        .map(|s| json!({"degree": s.degree, "max_index": s.max_index + 1, "count": biguint(&s.count)}))
        .collect();
    Ok(Report::new(d.render(), json!({"degree": d.degree(), "rows": rows, "generator_stats": stats})))
}

fn betti_entries<'a>(entries: impl Iterator<Item = ((u32, u64), &'a BigInt)>) -> Vec<Value> {
    entries.map(|((i, j), c)| json!({"i": i, "j": j, "beta": bigint(c)})).collect()
}

/// Exact integers as JSON numbers when they fit in 64 bits, else strings.
fn bigint(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

fn biguint(x: &BigUint) -> Value {
    match x.to_u64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}
