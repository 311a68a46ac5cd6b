//! Command-line front end. [`run`] parses arguments, dispatches, and maps
//! outcomes to exit codes: 0 success, 2 bad input or parameter, 3 size or
//! budget exceeded, 4 a verification that did not hold, 64 usage.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use num_traits::{One, ToPrimitive, Zero};
use serde_json::json;

use crate::codes::{greene_check, group_code_check, weight_enumerator, GeneratingMatrix};
use crate::error::{Error, Result};
use crate::gadgets::{
    apply_plan, is_parallel_pair, is_series_pair, parallel_extend, parallel_partner, series_extend,
    series_partner, synthesize_weight, GadgetPlan,
};
use crate::groups::{cycle_index, orbit_count, PermutationGroup};
use crate::hypergraph::Hypergraph;
use crate::interval::Interval;
use crate::matroid::{BinaryMatroid, Element, Graph};
use crate::partition::{
    duality_multiple, hypergraph_potts, ising, potts_matroid, random_cluster_graph, sat_spectrum,
    tutte_t, tutte_tilde,
};
use crate::rational::{self, int, powi, Rational};
use crate::reductions::{hyper_to_matroid, var_binary_tutte, verify_reduction, weight_shift_pipeline, ReductionParams};
use crate::weights::WeightMap;
use crate::Gf2Matrix;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_SIZE: i32 = 3;
pub const EXIT_VERIFY: i32 = 4;
pub const EXIT_USAGE: i32 = 64;

#[derive(Parser, Debug)]
#[command(name = "bintutte", version, about = "Exact Tutte-polynomial evaluation for binary matroids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args, Debug)]
struct Opts {
    #[arg(long, global = true, allow_hyphen_values = true)]
    q: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    gamma: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    x: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    y: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    lambda: Option<String>,
    #[arg(long, global = true)]
    epsilon: Option<String>,
    /// Columns per hyperedge.
    #[arg(long = "N", global = true)]
    n_columns: Option<u64>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 100)]
    trials: usize,
    #[arg(long = "precision-bits", global = true, default_value_t = 128)]
    precision_bits: u32,
    #[arg(long, global = true, default_value_t = crate::groups::DEFAULT_GROUP_CAP)]
    cap: usize,
    /// Strings visited by `orbits`.
    #[arg(long, global = true, default_value_t = crate::groups::DEFAULT_STRING_BUDGET)]
    budget: u64,
    /// Leaf budget for plan synthesis.
    #[arg(long = "max-plan", global = true, default_value_t = 64)]
    max_plan: usize,
    /// One rational per line, column order.
    #[arg(long, global = true)]
    weights: Option<PathBuf>,
    #[arg(long = "weights-out", global = true)]
    weights_out: Option<PathBuf>,
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// 1-based column index.
    #[arg(long, global = true)]
    element: Option<usize>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    gamma1: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    gamma2: Option<String>,
    #[arg(long = "gamma-avail", global = true)]
    gamma_avail: Option<String>,
    #[arg(long, global = true)]
    target: Option<String>,
    #[arg(long, global = true)]
    tolerance: Option<String>,
    /// Plan text such as `P(1,S(2,2))`.
    #[arg(long, global = true)]
    plan: Option<String>,
    /// Size constant in the weight-shift tolerance.
    #[arg(long = "c-gamma", global = true)]
    c_gamma: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a polynomial or partition function.
    #[command(subcommand)]
    Eval(EvalCmd),
    /// Print a representation of the dual matroid.
    Dual { input: PathBuf },
    /// Series and parallel extensions and plans.
    #[command(subcommand)]
    Gadget(GadgetCmd),
    /// Hypergraph to matroid, and the weight shift that follows it.
    #[command(subcommand)]
    Reduce(ReduceCmd),
    /// Check an exact identity on one instance.
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Count orbits on strings over an `--x`-letter alphabet directly.
    Orbits { input: PathBuf },
}

#[derive(Subcommand, Debug)]
enum EvalCmd {
    /// Z̃(M; q, γ).
    Tutte { input: PathBuf },
    /// T(M; x, y).
    #[command(name = "T")]
    T { input: PathBuf },
    /// Random-cluster sum of a multigraph.
    Rc { input: PathBuf },
    /// Potts sum of a matroid, q ∈ {1, 2}.
    Potts { input: PathBuf },
    Ising { input: PathBuf },
    /// Sat-spectrum coefficients.
    Spectrum { input: PathBuf },
    /// Potts sum of a hypergraph.
    Hyper { input: PathBuf },
    /// Weight enumerator of a code.
    We { input: PathBuf },
    /// Cycle index of a group.
    Ci { input: PathBuf },
    /// Z̃(M; 2, 2^(2/N) - 1).
    Var { input: PathBuf },
}

#[derive(Subcommand, Debug)]
enum GadgetCmd {
    Parallel { input: PathBuf },
    Series { input: PathBuf },
    /// Find a plan for `--target` from leaves `--gamma-avail`.
    Synth,
    Apply { input: PathBuf },
}

#[derive(Subcommand, Debug)]
enum ReduceCmd {
    /// Uniform hypergraph to binary matroid.
    #[command(name = "hyper2matroid")]
    HyperToMatroid { input: PathBuf },
    /// Move a matroid from weight 2^(2/N) - 1 onto `--gamma-avail`.
    #[command(name = "weight-shift")]
    WeightShift { input: PathBuf },
}

#[derive(Subcommand, Debug)]
enum VerifyCmd {
    /// 2^|V| Z̃(M;2,γ) against the Ising sum.
    #[command(name = "ising", alias = "eq9")]
    Ising { input: PathBuf },
    /// Random-cluster sum against q^|V| Z̃ of the cycle matroid.
    #[command(name = "random-cluster", alias = "eq5")]
    RandomCluster { input: PathBuf },
    /// T(x,y) against (q/γ)^r(E) Z̃ with q=(x-1)(y-1), γ=y-1.
    #[command(name = "tutte-t", alias = "eq3")]
    TutteT { input: PathBuf },
    /// Weight enumerator against Z̃ at q = 2.
    Greene { input: PathBuf },
    /// Cycle index of the code's group against its weight enumerator.
    #[command(name = "code-group", alias = "cor8")]
    CodeGroup { input: PathBuf },
    /// Z̃(M) against q^-r(E) Πγ Z̃(M*) with dual weights q/γ.
    Duality { input: PathBuf },
    /// Z̃ is unchanged by a parallel extension.
    #[command(name = "parallel", alias = "lemma3")]
    Parallel { input: PathBuf },
    /// A series extension multiplies Z̃ by its prefactor.
    #[command(name = "series", alias = "lemma4")]
    Series { input: PathBuf },
    /// Repeated hypergraph reductions against the exact Potts value.
    #[command(name = "reduction", alias = "lemma2")]
    Reduction { input: PathBuf },
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run<S: AsRef<str>>(argv: &[S], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let args: Vec<&str> = argv.iter().map(AsRef::as_ref).collect();
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    let result = match cli.opts.threads {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| dispatch(&cli.command, &cli.opts)),
            Err(e) => Err(Error::Parameter(format!("thread pool: {e}"))),
        },
        None => dispatch(&cli.command, &cli.opts),
    };
    match result.and_then(|o| emit(o, &cli.opts, out)) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "{e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Input(_) | Error::Parameter(_) => EXIT_INPUT,
        Error::Size(_) | Error::Synthesis(_) => EXIT_SIZE,
    }
}

struct Outcome {
    text: String,
    holds: bool,
    weights: Option<String>,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome {
            text,
            holds: true,
            weights: None,
        }
    }
}

fn emit(o: Outcome, opts: &Opts, out: &mut dyn Write) -> Result<i32> {
    let io = |e: std::io::Error| Error::input(format!("write failed: {e}"));
    match &opts.output {
        Some(p) => fs::write(p, &o.text).map_err(io)?,
        None => out.write_all(o.text.as_bytes()).map_err(io)?,
    }
    if let (Some(p), Some(w)) = (&opts.weights_out, &o.weights) {
        fs::write(p, w).map_err(io)?;
    }
    Ok(if o.holds { EXIT_OK } else { EXIT_VERIFY })
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::input(format!("{}: {e}", path.display())))
}

fn matroid(path: &Path) -> Result<BinaryMatroid> {
    Ok(BinaryMatroid::new(Gf2Matrix::parse(&read(path)?)?))
}

fn need(v: &Option<String>, flag: &str) -> Result<Rational> {
    let s = v.as_ref().ok_or_else(|| Error::input(format!("--{flag} is required")))?;
    rational::parse(s)
}

fn small_int(v: &Rational, flag: &str) -> Result<u32> {
    v.is_integer()
        .then(|| v.to_integer().to_u32())
        .flatten()
        .ok_or_else(|| Error::parameter(format!("--{flag} must be a non-negative integer")))
}

/// Per-element weights from `--weights`, else the constant `--gamma`.
fn weights(opts: &Opts, ground: &[Element]) -> Result<WeightMap> {
    match (&opts.weights, &opts.gamma) {
        (Some(p), _) => WeightMap::parse(ground, &read(p)?),
        (None, Some(_)) => Ok(WeightMap::constant(ground, &need(&opts.gamma, "gamma")?)),
        (None, None) => Err(Error::input("give --gamma or --weights")),
    }
}

fn element(opts: &Opts, m: &BinaryMatroid) -> Result<Element> {
    let k = opts.element.ok_or_else(|| Error::input("--element is required"))?;
    if k == 0 || k > m.len() {
        return Err(Error::input(format!("--element {k} outside 1..={}", m.len())));
    }
    Ok(m.ground()[k - 1])
}

fn digits(bits: u32) -> usize {
    (bits as usize * 30103).div_ceil(100_000)
}

fn interval_text(iv: &Interval, bits: u32) -> String {
    if iv.is_point() {
        rational::format(iv.lo())
    } else {
        iv.to_decimal(digits(bits))
    }
}

fn fmt(r: &Rational) -> String {
    rational::format(r)
}

fn check(name: &str, lhs: &Rational, rhs: &Rational, extra: serde_json::Value) -> Outcome {
    let holds = lhs == rhs && extra.get("side_condition").is_none_or(|v| v == &json!(true));
    let mut rec = json!({ "check": name, "lhs": fmt(lhs), "rhs": fmt(rhs), "pass": holds });
    if let (Some(obj), serde_json::Value::Object(more)) = (rec.as_object_mut(), extra) {
        obj.extend(more);
    }
    Outcome {
        text: format!("{rec}\n"),
        holds,
        weights: None,
    }
}

/// Matrix text headed by comment lines, plus the weight file.
fn matroid_output(header: &[String], m: &BinaryMatroid, w: Option<&WeightMap>) -> Result<Outcome> {
    let mut text: String = header.iter().map(|h| format!("# {h}\n")).collect();
    let weights = match w {
        Some(w) => {
            let wt = w.to_text(m.ground())?;
            text.push_str(&format!("# weights {}\n", wt.split_whitespace().collect::<Vec<_>>().join(" ")));
            Some(wt)
        }
        None => None,
    };
    text.push_str(&m.rep().to_text());
    Ok(Outcome {
        text,
        holds: true,
        weights,
    })
}

fn dispatch(cmd: &Command, o: &Opts) -> Result<Outcome> {
    match cmd {
        Command::Eval(e) => eval(e, o),
        Command::Dual { input } => {
            let m = matroid(input)?;
            matroid_output(&[], &m.dual(), None)
        }
        Command::Gadget(g) => gadget(g, o),
        Command::Reduce(r) => reduce(r, o),
        Command::Verify(v) => verify(v, o),
        Command::Orbits { input } => {
            let g = PermutationGroup::parse(&read(input)?)?;
            let x = small_int(&need(&o.x, "x")?, "x")?;
            Ok(Outcome::ok(format!("{}\n", orbit_count(&g, x, o.budget)?)))
        }
    }
}

fn eval(cmd: &EvalCmd, o: &Opts) -> Result<Outcome> {
    let line = |r: Rational| Ok(Outcome::ok(format!("{}\n", fmt(&r))));
    match cmd {
        EvalCmd::Tutte { input } => {
            let m = matroid(input)?;
            line(tutte_tilde(&m, &need(&o.q, "q")?, &weights(o, m.ground())?)?)
        }
        EvalCmd::T { input } => {
            let m = matroid(input)?;
            line(tutte_t(&m, &need(&o.x, "x")?, &need(&o.y, "y")?)?)
        }
        EvalCmd::Rc { input } => {
            let g = Graph::parse(&read(input)?)?;
            let ground: Vec<Element> = (0..g.edges().len()).map(Element).collect();
            line(random_cluster_graph(&g, &need(&o.q, "q")?, &weights(o, &ground)?)?)
        }
        EvalCmd::Potts { input } => {
            let m = matroid(input)?;
            let q = small_int(&need(&o.q, "q")?, "q")?;
            line(potts_matroid(&m, q, &weights(o, m.ground())?)?)
        }
        EvalCmd::Ising { input } => {
            let m = matroid(input)?;
            line(ising(&m, &weights(o, m.ground())?)?)
        }
        EvalCmd::Spectrum { input } => {
            let m = matroid(input)?;
            Ok(Outcome::ok(format!("{}\n", sat_spectrum(&m)?.to_text())))
        }
        EvalCmd::Hyper { input } => {
            let h = Hypergraph::parse(&read(input)?)?;
            let q = small_int(&need(&o.q, "q")?, "q")?;
            let ground: Vec<Element> = (0..h.m()).map(Element).collect();
            line(hypergraph_potts(&h, q, &weights(o, &ground)?)?)
        }
        EvalCmd::We { input } => {
            let g = GeneratingMatrix::parse(&read(input)?)?;
            line(weight_enumerator(&g, &need(&o.lambda, "lambda")?)?)
        }
        EvalCmd::Ci { input } => {
            let g = PermutationGroup::parse(&read(input)?)?;
            line(cycle_index(&g, &need(&o.x, "x")?, o.cap)?)
        }
        EvalCmd::Var { input } => {
            let m = matroid(input)?;
            let n = o.n_columns.ok_or_else(|| Error::input("--N is required"))?;
            let iv = var_binary_tutte(&m, n, o.precision_bits)?;
            Ok(Outcome::ok(format!("{}\n", interval_text(&iv, o.precision_bits))))
        }
    }
}

fn gadget(cmd: &GadgetCmd, o: &Opts) -> Result<Outcome> {
    match cmd {
        GadgetCmd::Parallel { input } => {
            let m = matroid(input)?;
            let w = weights(o, m.ground())?;
            let c = element(o, &m)?;
            let (g1, g2) = parallel_split(o, &w, c)?;
            let (m2, w2, _) = parallel_extend(&m, &w, c, &g1, &g2)?;
            matroid_output(&["prefactor 1".into()], &m2, Some(&w2))
        }
        GadgetCmd::Series { input } => {
            let m = matroid(input)?;
            let w = weights(o, m.ground())?;
            let c = element(o, &m)?;
            let q = need(&o.q, "q")?;
            let (g1, g2) = series_split(o, &q, &w, c)?;
            let (m2, w2, _, p) = series_extend(&m, &w, c, &q, &g1, &g2)?;
            matroid_output(&[format!("prefactor {}", fmt(&p))], &m2, Some(&w2))
        }
        GadgetCmd::Synth => {
            let q = o.q.as_ref().map_or(Ok(int(2)), |s| rational::parse(s))?;
            let plan = synthesize_weight(
                &need(&o.target, "target")?,
                &need(&o.gamma_avail, "gamma-avail")?,
                &q,
                &need(&o.tolerance, "tolerance")?,
                o.max_plan,
            )?;
            Ok(Outcome::ok(format!("{}\n", plan_json(&plan))))
        }
        GadgetCmd::Apply { input } => {
            let m = matroid(input)?;
            let c = element(o, &m)?;
            let q = o.q.as_ref().map_or(Ok(int(2)), |s| rational::parse(s))?;
            let text = o.plan.as_ref().ok_or_else(|| Error::input("--plan is required"))?;
            let plan = GadgetPlan::parse(text, q)?;
            let w = match (&o.weights, &o.gamma) {
                (None, None) => WeightMap::constant(m.ground(), plan.effective()),
                _ => weights(o, m.ground())?,
            };
            let (m2, w2, p) = apply_plan(&m, &w, c, &plan)?;
            matroid_output(&[format!("prefactor {}", fmt(&p))], &m2, Some(&w2))
        }
    }
}

fn plan_json(plan: &GadgetPlan) -> serde_json::Value {
    json!({
        "plan": plan.to_text(),
        "effective": fmt(plan.effective()),
        "prefactor": fmt(plan.prefactor()),
        "leaves": plan.leaf_count(),
        "series": plan.series_steps(),
        "parallel": plan.parallel_steps(),
    })
}

fn current_weight(w: &WeightMap, c: Element) -> Result<Rational> {
    w.get(c)
        .cloned()
        .ok_or_else(|| Error::input(format!("no weight for element {c}")))
}

/// `--gamma1`, and `--gamma2` or the partner that makes the split exact.
fn parallel_split(o: &Opts, w: &WeightMap, c: Element) -> Result<(Rational, Rational)> {
    let g1 = need(&o.gamma1, "gamma1")?;
    let g2 = match &o.gamma2 {
        Some(s) => rational::parse(s)?,
        None => parallel_partner(&current_weight(w, c)?, &g1),
    };
    Ok((g1, g2))
}

fn series_split(o: &Opts, q: &Rational, w: &WeightMap, c: Element) -> Result<(Rational, Rational)> {
    let g1 = need(&o.gamma1, "gamma1")?;
    let g2 = match &o.gamma2 {
        Some(s) => rational::parse(s)?,
        None => series_partner(q, &current_weight(w, c)?, &g1)?,
    };
    Ok((g1, g2))
}

fn reduce(cmd: &ReduceCmd, o: &Opts) -> Result<Outcome> {
    match cmd {
        ReduceCmd::HyperToMatroid { input } => {
            let h = Hypergraph::parse(&read(input)?)?;
            let eps = need(&o.epsilon, "epsilon")?;
            let params = match o.n_columns {
                Some(n) => ReductionParams::with_columns(&h, eps, n, o.seed)?,
                None => ReductionParams::automatic(&h, eps, o.seed)?,
            };
            let (m, tags) = hyper_to_matroid(&h, &params)?;
            let tags: Vec<String> = tags.iter().map(|t| (t + 1).to_string()).collect();
            matroid_output(
                &[
                    format!(
                        "N {} seed {} heuristic {}",
                        params.n_columns(),
                        params.seed(),
                        params.heuristic()
                    ),
                    format!("hyperedges {}", tags.join(" ")),
                ],
                &m,
                None,
            )
        }
        ReduceCmd::WeightShift { input } => {
            let m = matroid(input)?;
            let n = o.n_columns.ok_or_else(|| Error::input("--N is required"))?;
            let c_gamma = o.c_gamma.as_ref().map_or(Ok(Rational::one()), |s| rational::parse(s))?;
            let r = weight_shift_pipeline(
                &m,
                n,
                &need(&o.gamma_avail, "gamma-avail")?,
                &need(&o.epsilon, "epsilon")?,
                &c_gamma,
                o.max_plan,
                o.precision_bits,
            )?;
            let d = digits(o.precision_bits);
            let report = json!({
                "plan": r.plan.to_text(),
                "gamma_star": fmt(&r.gamma_star),
                "gamma_target": r.gamma_target.to_decimal(d),
                "chi": fmt(&r.chi),
                "pi": r.pi.to_decimal(d),
                "c_gamma": fmt(&r.c_gamma),
                "prefactor": fmt(&r.prefactor),
                "in_target": r.gamma_star_in_target(),
                "certificate": r.certificate,
                "elements": r.matroid.len(),
            });
            let mut out = matroid_output(&[report.to_string()], &r.matroid, None)?;
            out.holds = r.gamma_star_in_target() && r.certificate != Some(false);
            Ok(out)
        }
    }
}

fn verify(cmd: &VerifyCmd, o: &Opts) -> Result<Outcome> {
    let none = json!({});
    match cmd {
        VerifyCmd::Ising { input } => {
            let m = matroid(input)?;
            let w = weights(o, m.ground())?;
            let lhs = tutte_tilde(&m, &int(2), &w)? * rational::pow2(m.rep().rows() as i64);
            Ok(check("ising", &lhs, &ising(&m, &w)?, none))
        }
        VerifyCmd::RandomCluster { input } => {
            let g = Graph::parse(&read(input)?)?;
            let ground: Vec<Element> = (0..g.edges().len()).map(Element).collect();
            let w = weights(o, &ground)?;
            let q = need(&o.q, "q")?;
            let lhs = random_cluster_graph(&g, &q, &w)?;
            let rhs = powi(&q, g.n() as i64) * tutte_tilde(&BinaryMatroid::from_graph(&g), &q, &w)?;
            Ok(check("random-cluster", &lhs, &rhs, none))
        }
        VerifyCmd::TutteT { input } => {
            let m = matroid(input)?;
            let (x, y) = (need(&o.x, "x")?, need(&o.y, "y")?);
            let gamma = &y - Rational::one();
            let q = (&x - Rational::one()) * &gamma;
            if q.is_zero() {
                return Err(Error::parameter("(x-1)(y-1) must be nonzero"));
            }
            let rhs = powi(&(&q / &gamma), m.rank() as i64)
                * tutte_tilde(&m, &q, &WeightMap::constant(m.ground(), &gamma))?;
            Ok(check("tutte-t", &tutte_t(&m, &x, &y)?, &rhs, none))
        }
        VerifyCmd::Greene { input } => {
            let g = GeneratingMatrix::parse(&read(input)?)?;
            let c = greene_check(&g, &need(&o.lambda, "lambda")?)?;
            Ok(check("greene", &c.lhs, &c.rhs, none))
        }
        VerifyCmd::CodeGroup { input } => {
            let g = GeneratingMatrix::parse(&read(input)?)?;
            let c = group_code_check(&g, &need(&o.x, "x")?, o.cap)?;
            Ok(check(
                "code-group",
                &c.lhs,
                &c.rhs,
                json!({ "group_order": c.group_order, "side_condition": c.order_ok }),
            ))
        }
        VerifyCmd::Duality { input } => {
            let m = matroid(input)?;
            let q = need(&o.q, "q")?;
            let w = weights(o, m.ground())?;
            let (mult, dw) = duality_multiple(&m, &q, &w)?;
            let rhs = mult * tutte_tilde(&m.dual(), &q, &dw)?;
            Ok(check("duality", &tutte_tilde(&m, &q, &w)?, &rhs, none))
        }
        VerifyCmd::Parallel { input } => {
            let m = matroid(input)?;
            let w = weights(o, m.ground())?;
            let c = element(o, &m)?;
            let q = need(&o.q, "q")?;
            let (g1, g2) = parallel_split(o, &w, c)?;
            let (m2, w2, e) = parallel_extend(&m, &w, c, &g1, &g2)?;
            let side = is_parallel_pair(&m2, c, e)?;
            Ok(check(
                "parallel",
                &tutte_tilde(&m, &q, &w)?,
                &tutte_tilde(&m2, &q, &w2)?,
                json!({ "side_condition": side }),
            ))
        }
        VerifyCmd::Series { input } => {
            let m = matroid(input)?;
            let w = weights(o, m.ground())?;
            let c = element(o, &m)?;
            let q = need(&o.q, "q")?;
            let (g1, g2) = series_split(o, &q, &w, c)?;
            let (m2, w2, e, p) = series_extend(&m, &w, c, &q, &g1, &g2)?;
            let side = is_series_pair(&m2, c, e)?;
            Ok(check(
                "series",
                &(&p * tutte_tilde(&m, &q, &w)?),
                &tutte_tilde(&m2, &q, &w2)?,
                json!({ "prefactor": fmt(&p), "side_condition": side }),
            ))
        }
        VerifyCmd::Reduction { input } => {
            let h = Hypergraph::parse(&read(input)?)?;
            let eps = need(&o.epsilon, "epsilon")?;
            let r = verify_reduction(&h, &eps, o.n_columns, o.trials, o.seed, o.precision_bits)?;
            Ok(Outcome {
                text: r.to_json_lines(digits(o.precision_bits)),
                holds: r.meets_three_quarters(),
                weights: None,
            })
        }
    }
}
