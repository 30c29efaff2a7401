//! The `fraclog` command line: constants, margin checks, optimal scales,
//! asymptotics tables and parameter sweeps, all emitted as CSV.
//!
//! Exit codes: 0 when every check passes, 1 when some margin falls below its
//! tolerance, 2 on any parameter or usage error.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::constants::{
    asymptotic_constant, asymptotic_lsi_factor, asymptotic_ratio, gns_constant, gns_exponents,
    lsi_rhs_constant, sobolev_constant, LsiParams,
};
use crate::error::{Error, Result};
use crate::extremals::{
    aubin_talenti, gaussian, gns_extremal, random_mixture, random_radial, Representation,
};
use crate::fields::{Field, SampledField};
use crate::inequalities::{
    entropy_interpolation_check, gns_margin, log_linear_bound_check, sobolev_margin,
    sobolev_margin_radial_s1, theorem2_margin, theorem2_margin_homogeneous, InequalityId,
    LiebLossTerms, MarginReport, Theorem1Terms, CSV_HEADER,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MARGIN: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;

/// Environment variable capping the worker thread count.
pub const THREADS_ENV: &str = "FRACLOG_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "fraclog",
    version,
    about = "Constants and margin checks for logarithmic Sobolev inequalities"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// Write the CSV output to this path instead of stdout.
    #[arg(long, global = true)]
    pub csv: Option<PathBuf>,
    /// Radial quadrature node count.
    #[arg(long, global = true, default_value_t = 512)]
    pub nodes: usize,
    /// Grid points per axis (power of two).
    #[arg(long = "grid-n", global = true, default_value_t = 256)]
    pub grid_n: usize,
    /// Grid half-width L; the box is [-L, L)^d.
    #[arg(long = "half-width", global = true, default_value_t = 8.0)]
    pub half_width: f64,
    /// Base seed for random corpora.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Multiplies every tolerance before deciding pass or fail.
    #[arg(long = "tolerance-scale", global = true, default_value_t = 1.0)]
    pub tolerance_scale: f64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print C(n,s) with its large-n approximant, or the GNS exponents and constant.
    Constants(ConstantsArgs),
    /// Evaluate an inequality on a field family and emit one CSV row per check.
    Verify(VerifyArgs),
    /// Tabulate C(n,s) against its large-n approximant.
    Asymptotics(AsymptoticsArgs),
    /// Closed-form best scale a with a bracket confirming minimality.
    #[command(name = "optimal-a")]
    OptimalA(VerifyArgs),
    /// Vary one parameter of a verify run.
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Args)]
pub struct ConstantsArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, conflicts_with_all = ["p", "q"])]
    pub s: Option<f64>,
    #[arg(long, requires = "q")]
    pub p: Option<f64>,
    #[arg(long, requires = "p")]
    pub q: Option<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct AsymptoticsArgs {
    #[arg(long, default_value_t = 1.0)]
    pub s: f64,
    /// Comma-separated dimensions; none gives a header-only table.
    #[arg(long = "n", value_delimiter = ',')]
    pub n_list: Vec<usize>,
}

/// Seeded corpus, written `seed=7,count=20[,components=4]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorpusSpec {
    pub seed: Option<u64>,
    pub count: usize,
    pub components: usize,
}

impl FromStr for CorpusSpec {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let mut spec = CorpusSpec {
            seed: None,
            count: 1,
            components: 4,
        };
        for part in s.split(',').filter(|p| !p.is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| format!("expected key=value, got '{part}'"))?;
            let bad = |e: std::num::ParseIntError| format!("{k}: {e}");
            match k {
                "seed" => spec.seed = Some(v.parse().map_err(bad)?),
                "count" => spec.count = v.parse().map_err(bad)?,
                "components" => spec.components = v.parse().map_err(bad)?,
                _ => return Err(format!("unknown corpus key '{k}'")),
            }
        }
        Ok(spec)
    }
}

#[derive(Debug, Clone, Args)]
#[group(id = "family", multiple = false)]
pub struct FieldSource {
    /// Gaussian exp(-pi|x|^2/(2w^2)); w is --width, else the first --a.
    #[arg(long)]
    pub gaussian: bool,
    /// The equality family of the chosen inequality.
    #[arg(long)]
    pub extremal: bool,
    /// Random fields: grid mixtures, or radial mixtures for radial checks.
    #[arg(long)]
    pub corpus: Option<CorpusSpec>,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(value_parser = parse_id)]
    pub inequality: InequalityId,
    #[command(flatten)]
    pub source: FieldSource,
    #[command(flatten)]
    pub params: ParamArgs,
}

#[derive(Debug, Clone, Default, Args)]
pub struct ParamArgs {
    /// Dimension of a radial field (falls back to --d).
    #[arg(long)]
    pub n: Option<usize>,
    /// Dimension of a grid field (falls back to --n).
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    pub s: Vec<f64>,
    #[arg(long, value_delimiter = ',')]
    pub a: Vec<f64>,
    #[arg(long)]
    pub p: Option<f64>,
    #[arg(long)]
    pub q: Option<f64>,
    #[arg(long, value_delimiter = ',')]
    pub eps: Vec<f64>,
    #[arg(long, value_delimiter = ',')]
    pub x: Vec<f64>,
    #[arg(long, value_delimiter = ',')]
    pub b: Vec<f64>,
    /// Gaussian width, when it should differ from --a.
    #[arg(long)]
    pub width: Option<f64>,
    /// Multiplies every field.
    #[arg(long, default_value_t = 1.0)]
    pub amplitude: f64,
    /// Sample the Gaussian on a grid instead of radially.
    #[arg(long)]
    pub grid: bool,
    /// Use the q-homogeneous form of the W^{1,p} log inequality instead of
    /// normalizing each field to unit L^r norm.
    #[arg(long)]
    pub homogeneous: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepVariable {
    N,
    S,
    A,
    P,
    Q,
    Resolution,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub verify: VerifyArgs,
    #[arg(long, value_enum)]
    pub variable: SweepVariable,
    /// Explicit values, comma-separated.
    #[arg(long, value_delimiter = ',', conflicts_with = "range")]
    pub values: Vec<f64>,
    /// start:stop:count, with an optional :log suffix.
    #[arg(long)]
    pub range: Option<SweepRange>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRange {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
    pub log: bool,
}

impl FromStr for SweepRange {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        let log = match parts.get(3) {
            None => false,
            Some(&"log") => true,
            Some(&"lin") => false,
            Some(other) => return Err(format!("unknown spacing '{other}'")),
        };
        if !(3..=4).contains(&parts.len()) {
            return Err("expected start:stop:count[:log]".into());
        }
        let num = |t: &str| t.parse::<f64>().map_err(|e| format!("{t}: {e}"));
        let range = SweepRange {
            start: num(parts[0])?,
            stop: num(parts[1])?,
            count: parts[2].parse().map_err(|e| format!("{}: {e}", parts[2]))?,
            log,
        };
        if range.log && !(range.start > 0.0 && range.stop > 0.0) {
            return Err("log spacing needs positive endpoints".into());
        }
        Ok(range)
    }
}

impl SweepRange {
    pub fn values(&self) -> Vec<f64> {
        let (a, b) = if self.log {
            (self.start.ln(), self.stop.ln())
        } else {
            (self.start, self.stop)
        };
        (0..self.count)
            .map(|i| {
                let t = if self.count == 1 {
                    a
                } else {
                    a + (b - a) * i as f64 / (self.count - 1) as f64
                };
                if self.log {
                    t.exp()
                } else {
                    t
                }
            })
            .collect()
    }
}

fn parse_id(s: &str) -> std::result::Result<InequalityId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return if e.use_stderr() { EXIT_DOMAIN } else { EXIT_OK };
        }
    };
    match execute(&cli) {
        Ok(outcome) => {
            if let Err(e) = emit(&cli.global, &outcome.csv, out) {
                let _ = writeln!(err, "error: {e}");
                return EXIT_DOMAIN;
            }
            if !outcome.summary.is_empty() {
                let _ = writeln!(err, "{}", outcome.summary);
            }
            if outcome.failures > 0 {
                EXIT_MARGIN
            } else {
                EXIT_OK
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_DOMAIN
        }
    }
}

fn emit(global: &GlobalOpts, csv: &str, out: &mut dyn Write) -> Result<()> {
    match &global.csv {
        Some(path) => std::fs::write(path, csv)?,
        None => out.write_all(csv.as_bytes())?,
    }
    Ok(())
}

/// CSV text plus a count of failed checks.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Outcome {
    pub csv: String,
    pub failures: usize,
    pub summary: String,
}

pub fn execute(cli: &Cli) -> Result<Outcome> {
    let pool = thread_pool()?;
    pool.install(|| match &cli.command {
        Command::Constants(args) => cmd_constants(args),
        Command::Verify(args) => cmd_verify(&cli.global, args),
        Command::Asymptotics(args) => cmd_asymptotics(args),
        Command::OptimalA(args) => cmd_optimal_a(&cli.global, args),
        Command::Sweep(args) => cmd_sweep(&cli.global, args),
    })
}

fn thread_pool() -> Result<rayon::ThreadPool> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var(THREADS_ENV) {
        let n: usize = v.trim().parse().map_err(|_| {
            Error::Domain(format!("{THREADS_ENV} must be a thread count, got '{v}'"))
        })?;
        builder = builder.num_threads(n);
    }
    builder
        .build()
        .map_err(|e| Error::Domain(format!("cannot start worker pool: {e}")))
}

pub fn cmd_constants(args: &ConstantsArgs) -> Result<Outcome> {
    let mut csv = String::new();
    match (args.s, args.p, args.q) {
        (Some(s), None, None) => {
            let c = sobolev_constant(args.n, s)?;
            csv.push_str("n,s,sobolev_constant,asymptotic_constant,asymptotic_ratio\n");
            let _ = writeln!(
                csv,
                "{},{s:?},{c:?},{:?},{:?}",
                args.n,
                asymptotic_constant(args.n, s)?,
                asymptotic_ratio(args.n, s)?
            );
        }
        (None, Some(p), Some(q)) => {
            let g = gns_exponents(args.n, p, q)?;
            csv.push_str("n,p,q,r,theta,delta,gns_constant\n");
            let _ = writeln!(
                csv,
                "{},{p:?},{q:?},{:?},{:?},{:?},{:?}",
                args.n,
                g.r,
                g.theta,
                g.delta,
                gns_constant(args.n, p, q)?
            );
        }
        _ => return Err(Error::Domain("give either --s or both --p and --q".into())),
    }
    Ok(Outcome {
        csv,
        ..Outcome::default()
    })
}

pub fn cmd_asymptotics(args: &AsymptoticsArgs) -> Result<Outcome> {
    let s = args.s;
    let mut csv = String::from(
        "n,s,sobolev_constant,asymptotic_constant,ratio,lsi_factor,asymptotic_lsi_factor\n",
    );
    for &n in &args.n_list {
        let c = sobolev_constant(n, s)?;
        // (ne/2s)·C(n,s): the right-hand factor per unit a²
        let lsi = lsi_rhs_constant(&LsiParams::new(n, s, 1.0)?)?;
        let _ = writeln!(
            csv,
            "{n},{s:?},{c:?},{:?},{:?},{lsi:?},{:?}",
            asymptotic_constant(n, s)?,
            asymptotic_ratio(n, s)?,
            asymptotic_lsi_factor(n, s)?
        );
    }
    Ok(Outcome {
        csv,
        ..Outcome::default()
    })
}

type TaggedField = (Vec<(&'static str, f64)>, SampledField);

/// Resolved parameters of a verify run.
#[derive(Debug, Clone)]
struct Plan {
    id: InequalityId,
    family: Family,
    n: Option<usize>,
    s: Vec<f64>,
    a: Vec<f64>,
    p: f64,
    q: f64,
    eps: Vec<f64>,
    x: Vec<f64>,
    b: Vec<f64>,
    width: Option<f64>,
    amplitude: f64,
    grid: bool,
    homogeneous: bool,
    nodes: usize,
    grid_n: usize,
    half_width: f64,
    seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Family {
    None,
    Gaussian,
    Extremal,
    Corpus(CorpusSpec),
}

impl Plan {
    fn new(global: &GlobalOpts, args: &VerifyArgs) -> Self {
        let pa = &args.params;
        let src = &args.source;
        let family = if src.gaussian {
            Family::Gaussian
        } else if src.extremal {
            Family::Extremal
        } else if let Some(c) = src.corpus {
            Family::Corpus(c)
        } else {
            Family::None
        };
        let or = |v: &Vec<f64>, d: f64| if v.is_empty() { vec![d] } else { v.clone() };
        Plan {
            id: args.inequality,
            family,
            n: pa.n.or(pa.d),
            s: or(&pa.s, 0.5),
            a: or(&pa.a, 1.0),
            p: pa.p.unwrap_or(2.0),
            // the interpolation lemma is usually applied to the L² entropy
            q: pa
                .q
                .unwrap_or(if args.inequality == InequalityId::Interpolation {
                    2.0
                } else {
                    3.0
                }),
            eps: or(&pa.eps, 1.0),
            x: or(&pa.x, 1.0),
            b: or(&pa.b, 1.0),
            width: pa.width,
            amplitude: pa.amplitude,
            grid: pa.grid,
            homogeneous: pa.homogeneous,
            nodes: global.nodes,
            grid_n: global.grid_n,
            half_width: global.half_width,
            seed: global.seed,
        }
    }

    fn grid_repr(&self) -> Representation {
        Representation::Grid {
            half_width: self.half_width,
            points_per_axis: self.grid_n,
        }
    }

    fn radial_repr(&self) -> Representation {
        Representation::Radial { nodes: self.nodes }
    }

    fn single_s(&self) -> Result<f64> {
        match self.s.as_slice() {
            [s] => Ok(*s),
            _ => Err(Error::Domain("this family needs exactly one --s".into())),
        }
    }

    /// Whether the inequality is evaluated on grid fields.
    fn wants_grid(&self) -> bool {
        match self.id {
            InequalityId::Theorem1 | InequalityId::Sobolev => true,
            InequalityId::LiebLoss | InequalityId::Interpolation => match self.family {
                Family::Corpus(_) => true,
                _ => self.grid,
            },
            _ => false,
        }
    }

    /// The fields to test, each with identifying parameters.
    fn fields(&self) -> Result<Vec<TaggedField>> {
        let grid = self.wants_grid();
        let dim = self.n.unwrap_or(if grid { 2 } else { 3 });
        let fields = match self.family {
            Family::None => {
                if self.id == InequalityId::LogBound {
                    return Ok(Vec::new());
                }
                return Err(Error::Domain(format!(
                    "{} needs a field family: --gaussian, --extremal or --corpus",
                    self.id
                )));
            }
            Family::Gaussian => {
                let w = self.width.unwrap_or(self.a[0]);
                let repr = if grid {
                    self.grid_repr()
                } else {
                    self.radial_repr()
                };
                vec![(vec![("width", w)], gaussian(dim, w, repr)?.0)]
            }
            Family::Extremal => {
                let f: SampledField = match self.id {
                    InequalityId::Sobolev => {
                        aubin_talenti(dim, self.single_s()?, 1.0, self.grid_repr())?
                    }
                    InequalityId::SobolevRadial => {
                        aubin_talenti(dim, 1.0, 1.0, self.radial_repr())?
                    }
                    InequalityId::Gns | InequalityId::Theorem2 => {
                        gns_extremal(dim, self.p, self.q, 1.0, self.nodes)?.into()
                    }
                    InequalityId::LiebLoss => {
                        let w = self.width.unwrap_or(self.a[0]);
                        let repr = if grid {
                            self.grid_repr()
                        } else {
                            self.radial_repr()
                        };
                        gaussian(dim, w, repr)?.0
                    }
                    other => {
                        return Err(Error::Domain(format!(
                            "{other} has no equality family here"
                        )))
                    }
                };
                vec![(Vec::new(), f)]
            }
            Family::Corpus(c) => {
                let base = c.seed.unwrap_or(self.seed);
                let seeds: Vec<u64> = (0..c.count as u64).map(|i| base.wrapping_add(i)).collect();
                seeds
                    .par_iter()
                    .map(|&seed| {
                        let f: SampledField = if grid {
                            random_mixture(seed, dim, c.components, self.half_width, self.grid_n)?
                                .into()
                        } else {
                            random_radial(seed, dim, c.components, self.nodes)?.into()
                        };
                        Ok((vec![("seed", seed as f64)], f))
                    })
                    .collect::<Result<Vec<_>>>()?
            }
        };
        Ok(fields
            .into_iter()
            .map(|(tag, f)| {
                (
                    tag,
                    if self.amplitude == 1.0 {
                        f
                    } else {
                        f.scaled(self.amplitude)
                    },
                )
            })
            .collect())
    }

    fn reports(&self) -> Result<Vec<MarginReport>> {
        if self.id == InequalityId::LogBound {
            let mut out = Vec::new();
            for &x in &self.x {
                for &b in &self.b {
                    out.push(log_linear_bound_check(x, b)?);
                }
            }
            return Ok(out);
        }
        let fields = self.fields()?;
        let per_field: Vec<Vec<MarginReport>> = fields
            .par_iter()
            .map(|(tag, f)| {
                let mut rows = self.evaluate(f)?;
                for r in &mut rows {
                    let tagged: Vec<(String, f64)> =
                        tag.iter().map(|(k, v)| (k.to_string(), *v)).collect();
                    r.params.splice(0..0, tagged);
                }
                Ok(rows)
            })
            .collect::<Result<_>>()?;
        Ok(per_field.into_iter().flatten().collect())
    }

    fn evaluate(&self, f: &SampledField) -> Result<Vec<MarginReport>> {
        let grid = || {
            f.as_grid()
                .ok_or_else(|| Error::Domain(format!("{} needs a grid field", self.id)))
        };
        let radial = || {
            f.as_radial()
                .ok_or_else(|| Error::Domain(format!("{} needs a radial field", self.id)))
        };
        let mut out = Vec::new();
        match self.id {
            InequalityId::LiebLoss => {
                let terms = LiebLossTerms::of(f)?;
                for &a in &self.a {
                    out.push(terms.report(a)?);
                }
            }
            InequalityId::Theorem1 => {
                let g = grid()?;
                for &s in &self.s {
                    let terms = Theorem1Terms::of(g, s)?;
                    for &a in &self.a {
                        out.push(terms.report(a)?);
                    }
                }
            }
            InequalityId::Sobolev => {
                for &s in &self.s {
                    out.push(sobolev_margin(grid()?, s)?);
                }
            }
            InequalityId::SobolevRadial => out.push(sobolev_margin_radial_s1(radial()?)?),
            InequalityId::Gns => out.push(gns_margin(radial()?, self.p, self.q)?),
            InequalityId::Theorem2 => {
                let r = radial()?;
                for &a in &self.a {
                    out.push(if self.homogeneous {
                        theorem2_margin_homogeneous(r, self.p, self.q, a)?
                    } else {
                        let lr = r.lp_norm(gns_exponents(r.dimension(), self.p, self.q)?.r)?;
                        if lr == 0.0 {
                            return Err(Error::ZeroField);
                        }
                        theorem2_margin(&r.scaled(1.0 / lr), self.p, self.q, a)?
                    });
                }
            }
            InequalityId::Interpolation => {
                for &eps in &self.eps {
                    out.push(entropy_interpolation_check(f, self.q, eps)?);
                }
            }
            InequalityId::LogBound => unreachable!("handled without fields"),
        }
        Ok(out)
    }
}

fn margin_csv(reports: &[MarginReport], scale: f64) -> (String, usize) {
    let mut csv = String::from(CSV_HEADER);
    csv.push('\n');
    let mut failures = 0;
    for r in reports {
        csv.push_str(&r.to_csv_row());
        csv.push('\n');
        if !r.passes(scale) {
            failures += 1;
        }
    }
    (csv, failures)
}

pub fn cmd_verify(global: &GlobalOpts, args: &VerifyArgs) -> Result<Outcome> {
    let plan = Plan::new(global, args);
    let reports = plan.reports()?;
    let (csv, failures) = margin_csv(&reports, global.tolerance_scale);
    let mut summary = format!(
        "{}: {} checks, {} below tolerance",
        plan.id,
        reports.len(),
        failures
    );
    for r in reports.iter().filter(|r| !r.passes(global.tolerance_scale)) {
        let _ = write!(summary, "\n  failing: {}", r.to_csv_row());
    }
    Ok(Outcome {
        csv,
        failures,
        summary,
    })
}

enum ScaleTerms {
    LiebLoss(LiebLossTerms),
    Theorem1(Theorem1Terms),
}

impl ScaleTerms {
    fn report(&self, a: f64) -> Result<MarginReport> {
        match self {
            ScaleTerms::LiebLoss(t) => t.report(a),
            ScaleTerms::Theorem1(t) => t.report(a),
        }
    }

    fn optimal_a(&self) -> Result<f64> {
        match self {
            ScaleTerms::LiebLoss(t) => t.optimal_a(),
            ScaleTerms::Theorem1(t) => t.optimal_a(),
        }
    }
}

/// Ratio between neighbouring points of the optimal-a bracket.
pub const BRACKET_STEP: f64 = 1.25;

pub fn cmd_optimal_a(global: &GlobalOpts, args: &VerifyArgs) -> Result<Outcome> {
    let plan = Plan::new(global, args);
    let mut csv = String::from("field,a_star,a,lhs,rhs,margin,is_star\n");
    let mut failures = 0;
    let fields = plan.fields()?;
    if fields.is_empty() {
        return Err(Error::Domain(format!("{} has no scale parameter", plan.id)));
    }
    let scale = global.tolerance_scale;
    for (i, (_, f)) in fields.iter().enumerate() {
        let terms = match plan.id {
            InequalityId::LiebLoss => ScaleTerms::LiebLoss(LiebLossTerms::of(f)?),
            InequalityId::Theorem1 => {
                let g = f
                    .as_grid()
                    .ok_or_else(|| Error::Domain("theorem1 needs a grid field".into()))?;
                ScaleTerms::Theorem1(Theorem1Terms::of(g, plan.single_s()?)?)
            }
            other => {
                return Err(Error::Domain(format!(
                    "optimal-a supports lieb-loss and theorem1, not {other}"
                )))
            }
        };
        let a_star = terms.optimal_a()?;
        let report_at = |a| terms.report(a);
        let star = report_at(a_star)?;
        let mut best_other = f64::INFINITY;
        for k in -4i32..=4 {
            let a = a_star * BRACKET_STEP.powi(k);
            let r = if k == 0 { star.clone() } else { report_at(a)? };
            if k != 0 {
                best_other = best_other.min(r.margin);
            }
            let _ = writeln!(
                csv,
                "{i},{a_star:?},{a:?},{:?},{:?},{:?},{}",
                r.lhs,
                r.rhs,
                r.margin,
                k == 0
            );
        }
        if star.margin > best_other + scale * 1e-12 * star.rhs.abs() {
            failures += 1;
        }
    }
    Ok(Outcome {
        csv,
        failures,
        summary: format!(
            "{}: {} fields, {} without a bracketed minimum",
            plan.id,
            fields.len(),
            failures
        ),
    })
}

fn apply_sweep(plan: &mut Plan, var: SweepVariable, v: f64) -> Result<()> {
    let as_count = |v: f64| {
        if v.fract() == 0.0 && v >= 1.0 {
            Ok(v as usize)
        } else {
            Err(Error::Domain(format!(
                "expected a positive integer, got {v}"
            )))
        }
    };
    match var {
        SweepVariable::N => plan.n = Some(as_count(v)?),
        SweepVariable::S => plan.s = vec![v],
        SweepVariable::A => plan.a = vec![v],
        SweepVariable::P => plan.p = v,
        SweepVariable::Q => plan.q = v,
        SweepVariable::Resolution => {
            let m = as_count(v)?;
            plan.nodes = m;
            plan.grid_n = m;
        }
    }
    Ok(())
}

pub fn cmd_sweep(global: &GlobalOpts, args: &SweepArgs) -> Result<Outcome> {
    let base = Plan::new(global, &args.verify);
    let values = match &args.range {
        Some(r) => r.values(),
        None => args.values.clone(),
    };
    let name = args
        .variable
        .to_possible_value()
        .map(|p| p.get_name().to_string())
        .unwrap_or_default();
    let results: Vec<Result<Vec<MarginReport>>> = values
        .par_iter()
        .map(|&v| {
            let mut plan = base.clone();
            apply_sweep(&mut plan, args.variable, v)?;
            plan.reports()
        })
        .collect();
    let scale = global.tolerance_scale;
    let mut csv = format!("{CSV_HEADER},status\n");
    let (mut failures, mut skipped) = (0, 0);
    for (v, res) in values.iter().zip(results) {
        match res {
            Ok(reports) => {
                for r in reports {
                    let ok = r.passes(scale);
                    if !ok {
                        failures += 1;
                    }
                    let _ = writeln!(csv, "{},{}", r.to_csv_row(), if ok { "ok" } else { "fail" });
                }
            }
            Err(e) if e.is_domain() => {
                skipped += 1;
                let msg = e.to_string().replace([',', '\n'], ";");
                let _ = writeln!(csv, "{},{name}={v:?},,,,,,,skipped: {msg}", base.id);
            }
            Err(e) => return Err(e),
        }
    }
    Ok(Outcome {
        csv,
        failures,
        summary: format!(
            "sweep {name}: {} values, {failures} failing, {skipped} skipped",
            values.len()
        ),
    })
}
