//! Command-line front end. [`run`] parses arguments, dispatches, and maps
//! every outcome to an exit status:
//!
//! * 0 success
//! * 2 unparseable arguments or input files
//! * 3 input that parses but is invalid
//! * 4 internal invariant breach, including disagreeing routes
//!
//! Failures print a single JSON object on the error stream.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use keyscan::atomgen::{generate_atom_tableaux_with, generate_demazure_tableaux_with, GenLimits};
use keyscan::keypoly::{
    atom_poly, by_route, demazure_poly, interval_tableaux_cellwise, interval_tableaux_scan, weight_sum,
    IntervalKind, Route,
};
use keyscan::verify::{Bounds, Counterexample, Suite, SuiteReport};
use keyscan::{left_scan, make_key, right_scan, Criteria, Partition, Permutation, Polynomial, SetKind, Tableau};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_INVALID: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "keyscan", version, about = "Scanning keys, Demazure and atom tableaux, key polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the key Y_λ(π).
    Key {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, value_delimiter = ',', required = true)]
        pi: Vec<usize>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Right key S(T) of a tableau file.
    Rkey(ScanArgs),
    /// Left key M(T) of a tableau file.
    Lkey(ScanArgs),
    /// Demazure polynomial d_λ(π;x).
    Demazure(PolyArgs),
    /// Demazure atom c_λ(π;x).
    Atom(PolyArgs),
    /// Tableaux between two keys, or the sum of their weights.
    Interval(IntervalArgs),
    /// A condition set at one cell of a tableau.
    Sets(SetsArgs),
    /// Run self-check suites.
    Verify(VerifyArgs),
    /// Draw a tableau file as text.
    Render {
        /// Tableau JSON file, or `-` for standard input.
        #[arg(long)]
        tableau: PathBuf,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false, id = "partition")]
struct ShapeGroup {
    /// Parts of λ, comma separated; padded with zeros to --n.
    #[arg(long, value_delimiter = ',')]
    lambda: Option<Vec<usize>>,
    /// Column lengths of λ, comma separated; needs --n.
    #[arg(long, value_delimiter = ',')]
    zeta: Option<Vec<usize>>,
}

#[derive(Args, Debug)]
struct ShapeArgs {
    #[command(flatten)]
    group: ShapeGroup,
    /// Number of variables; defaults to the length of π or λ.
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Args, Debug)]
struct OutArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct LimitArgs {
    /// Maximum number of live partial tableaux in a generator.
    #[arg(long)]
    frame_cap: Option<usize>,
    /// Wall-clock limit for a generator, in seconds.
    #[arg(long)]
    time_cap: Option<f64>,
}

impl LimitArgs {
    fn limits(&self) -> GenLimits {
        let mut l = GenLimits::default();
        if let Some(cap) = self.frame_cap {
            l.max_frames = cap;
        }
        if let Some(secs) = self.time_cap {
            l.deadline = Some(Instant::now() + Duration::from_secs_f64(secs.max(0.0)));
        }
        l
    }
}

#[derive(Args, Debug)]
struct ScanArgs {
    /// Tableau JSON file, or `-` for standard input.
    #[arg(long)]
    tableau: PathBuf,
    /// Also print the scanning paths.
    #[arg(long)]
    paths: bool,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum RouteArg {
    Operator,
    Tableaux,
    Both,
}

impl From<RouteArg> for Route {
    fn from(r: RouteArg) -> Route {
        match r {
            RouteArg::Operator => Route::Operator,
            RouteArg::Tableaux => Route::Tableaux,
            RouteArg::Both => Route::Both,
        }
    }
}

#[derive(Args, Debug)]
struct PolyArgs {
    #[command(flatten)]
    shape: ShapeArgs,
    #[arg(long, value_delimiter = ',', required = true)]
    pi: Vec<usize>,
    #[arg(long, value_enum, default_value_t = RouteArg::Operator)]
    route: RouteArg,
    /// List the generated tableaux instead of the polynomial.
    #[arg(long, conflicts_with = "count")]
    tableaux: bool,
    /// Print only the number of generated tableaux.
    #[arg(long)]
    count: bool,
    #[command(flatten)]
    limits: LimitArgs,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum IntervalRoute {
    Scan,
    Cellwise,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum IntervalKindArg {
    Exact,
    Bounded,
}

#[derive(Args, Debug)]
struct IntervalArgs {
    #[command(flatten)]
    shape: ShapeArgs,
    #[arg(long, value_delimiter = ',', required = true)]
    sigma: Vec<usize>,
    #[arg(long, value_delimiter = ',', required = true)]
    pi: Vec<usize>,
    #[arg(long, value_enum, default_value_t = IntervalKindArg::Exact)]
    kind: IntervalKindArg,
    #[arg(long, value_enum, default_value_t = IntervalRoute::Scan)]
    route: IntervalRoute,
    #[arg(long, conflicts_with = "count")]
    tableaux: bool,
    #[arg(long)]
    count: bool,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args, Debug)]
struct SetsArgs {
    /// Tableau JSON file, or `-` for standard input.
    #[arg(long)]
    tableau: PathBuf,
    /// One of A, B, C (need --pi) or F, G (need --sigma).
    #[arg(long)]
    kind: String,
    /// The cell as `column,row`.
    #[arg(long, value_parser = parse_cell)]
    cell: (usize, usize),
    #[arg(long, value_delimiter = ',')]
    pi: Option<Vec<usize>>,
    #[arg(long, value_delimiter = ',')]
    sigma: Option<Vec<usize>>,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Suite name, or `all`.
    suite: String,
    #[arg(long, default_value_t = 4)]
    n: usize,
    #[arg(long, default_value_t = 6)]
    max_cells: usize,
    /// Random polynomials for the algebra suite.
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[command(flatten)]
    out: OutArgs,
}

fn parse_cell(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected column,row but got {s:?}"))?;
    let p = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("{x:?}: {e}"));
    Ok((p(a)?, p(b)?))
}

/// A failed command: exit status plus the JSON body for the error stream.
#[derive(Debug)]
struct Failure {
    code: i32,
    body: serde_json::Value,
}

impl Failure {
    fn new(code: i32, kind: &str, message: impl Into<String>) -> Self {
        let message = message.into();
        Failure {
            code,
            body: json!({ "error": kind, "message": message }),
        }
    }

    fn parse(message: impl Into<String>) -> Self {
        Failure::new(EXIT_PARSE, "parse", message)
    }

    fn invalid(message: impl Into<String>) -> Self {
        Failure::new(EXIT_INVALID, "invalid", message)
    }

    fn counterexample(cx: &Counterexample) -> Self {
        Failure {
            code: EXIT_INTERNAL,
            body: serde_json::to_value(cx).unwrap_or_default(),
        }
    }
}

impl From<keyscan::Error> for Failure {
    fn from(e: keyscan::Error) -> Self {
        if e.is_internal() {
            Failure::new(EXIT_INTERNAL, "internal", e.to_string())
        } else {
            Failure::invalid(e.to_string())
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::new(EXIT_PARSE, "io", e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

/// Runs the CLI on `argv` (including the program name).
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let f = Failure::new(EXIT_PARSE, "usage", e.render().to_string());
            let _ = writeln!(err, "{}", f.body);
            return f.code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "{}", f.body);
            f.code
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> CmdResult {
    match cmd {
        Command::Key { shape, pi, out: fmt } => {
            let pi = permutation(&pi, "pi")?;
            let shape = shape.resolve(Some(pi.n()))?;
            emit_tableau(out, &make_key(&shape, &pi)?, fmt.format)
        }
        Command::Rkey(a) => scan(a, out, true),
        Command::Lkey(a) => scan(a, out, false),
        Command::Demazure(a) => poly_cmd(a, out, false),
        Command::Atom(a) => poly_cmd(a, out, true),
        Command::Interval(a) => interval(a, out),
        Command::Sets(a) => sets(a, out),
        Command::Verify(a) => verify(a, out),
        Command::Render { tableau } => {
            let t = read_tableau(&tableau)?;
            write!(out, "{}", t.render())?;
            Ok(())
        }
    }
}

impl ShapeArgs {
    fn resolve(&self, default_n: Option<usize>) -> Result<Partition, Failure> {
        let n = self.n.or(default_n);
        match (&self.group.lambda, &self.group.zeta) {
            (Some(parts), None) => {
                let n = n.unwrap_or(parts.len());
                Ok(Partition::with_rank(parts.clone(), n)?)
            }
            (None, Some(zeta)) => {
                let n = n.ok_or_else(|| Failure::parse("--zeta needs --n or a permutation to fix the rank"))?;
                Ok(Partition::from_column_lengths(zeta, n)?)
            }
            _ => Err(Failure::parse("give exactly one of --lambda and --zeta")),
        }
    }
}

fn permutation(v: &[usize], flag: &str) -> Result<Permutation, Failure> {
    Permutation::new(v.to_vec()).map_err(|e| Failure::invalid(format!("--{flag}: {e}")))
}

fn read_input(path: &PathBuf) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::new(EXIT_PARSE, "io", format!("{}: {e}", path.display())))
    }
}

fn read_tableau(path: &PathBuf) -> Result<Tableau, Failure> {
    let text = read_input(path)?;
    Tableau::from_json(&text).map_err(|e| {
        if e.classify() == serde_json::error::Category::Data {
            Failure::invalid(e.to_string())
        } else {
            Failure::parse(e.to_string())
        }
    })
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> CmdResult {
    let s = serde_json::to_string(value).map_err(|e| Failure::new(EXIT_INTERNAL, "internal", e.to_string()))?;
    writeln!(out, "{s}")?;
    Ok(())
}

fn emit_tableau(out: &mut dyn Write, t: &Tableau, format: Format) -> CmdResult {
    match format {
        Format::Text => write!(out, "{}", t.render())?,
        Format::Json => writeln!(out, "{}", t.to_json())?,
    }
    Ok(())
}

fn emit_tableaux(out: &mut dyn Write, ts: &[Tableau], format: Format) -> CmdResult {
    match format {
        Format::Json => emit_json(out, &ts),
        Format::Text => {
            for (idx, t) in ts.iter().enumerate() {
                if idx > 0 {
                    writeln!(out)?;
                }
                write!(out, "{}", t.render())?;
            }
            Ok(())
        }
    }
}

fn emit_poly(out: &mut dyn Write, p: &Polynomial, format: Format) -> CmdResult {
    match format {
        Format::Text => writeln!(out, "{p}")?,
        Format::Json => return emit_json(out, p),
    }
    Ok(())
}

fn emit_count(out: &mut dyn Write, count: usize, format: Format) -> CmdResult {
    match format {
        Format::Text => writeln!(out, "{count}")?,
        Format::Json => emit_json(out, &json!({ "count": count }))?,
    }
    Ok(())
}

fn scan(a: ScanArgs, out: &mut dyn Write, right: bool) -> CmdResult {
    let t = read_tableau(&a.tableau)?;
    let result = if right { right_scan(&t) } else { left_scan(&t)? };
    if !a.paths {
        return emit_tableau(out, &result.tableau, a.out.format);
    }
    let paths: Vec<_> = result.paths().collect();
    match a.out.format {
        Format::Json => emit_json(out, &json!({ "tableau": result.tableau, "paths": paths })),
        Format::Text => {
            write!(out, "{}", result.tableau.render())?;
            for p in paths {
                let steps: Vec<String> =
                    p.cells.iter().zip(&p.values).map(|((j, i), v)| format!("({j},{i})={v}")).collect();
                writeln!(out, "{}", steps.join(" -> "))?;
            }
            Ok(())
        }
    }
}

fn monomial_text(m: &keyscan::Monomial) -> String {
    Polynomial::from_monomial(m.clone()).to_string()
}

fn poly_cmd(a: PolyArgs, out: &mut dyn Write, atom: bool) -> CmdResult {
    let pi = permutation(&a.pi, "pi")?;
    let shape = a.shape.resolve(Some(pi.n()))?;
    let limits = a.limits.limits();
    let generate = || {
        if atom {
            generate_atom_tableaux_with(&shape, &pi, &limits)
        } else {
            generate_demazure_tableaux_with(&shape, &pi, &limits)
        }
    };
    if a.tableaux || a.count {
        let ts = generate()?;
        return if a.count {
            emit_count(out, ts.len(), a.out.format)
        } else {
            emit_tableaux(out, &ts, a.out.format)
        };
    }
    let operator = || if atom { atom_poly(&shape, &pi) } else { demazure_poly(&shape, &pi) };
    let tableaux = || weight_sum(shape.n(), &generate()?);
    match by_route(a.route.into(), operator, tableaux)? {
        Ok(p) => emit_poly(out, &p, a.out.format),
        Err(mismatch) => {
            let what = if atom { "atom" } else { "demazure" };
            let at = mismatch.witness.as_ref().map(monomial_text).unwrap_or_default();
            let cx = Counterexample::new(format!("{what}: operator and tableau routes differ at {at}"), &shape)
                .pi(&pi)
                .values(&mismatch.expected, &mismatch.actual);
            Err(Failure::counterexample(&cx))
        }
    }
}

fn interval(a: IntervalArgs, out: &mut dyn Write) -> CmdResult {
    let sigma = permutation(&a.sigma, "sigma")?;
    let pi = permutation(&a.pi, "pi")?;
    let shape = a.shape.resolve(Some(pi.n()))?;
    let kind = match a.kind {
        IntervalKindArg::Exact => IntervalKind::Exact,
        IntervalKindArg::Bounded => IntervalKind::Bounded,
    };
    let ts = match a.route {
        IntervalRoute::Scan => interval_tableaux_scan(&shape, &sigma, &pi, kind)?,
        IntervalRoute::Cellwise => interval_tableaux_cellwise(&shape, &sigma, &pi, kind)?,
        IntervalRoute::Both => {
            let scan = interval_tableaux_scan(&shape, &sigma, &pi, kind)?;
            let cell = interval_tableaux_cellwise(&shape, &sigma, &pi, kind)?;
            if scan != cell {
                let odd = scan.iter().find(|t| !cell.contains(t)).or_else(|| cell.iter().find(|t| !scan.contains(t)));
                let mut cx = Counterexample::new(format!("interval ({kind:?}): scan and cellwise routes differ"), &shape)
                    .pi(&pi)
                    .sigma(&sigma)
                    .values(&weight_sum(shape.n(), &scan)?, &weight_sum(shape.n(), &cell)?);
                if let Some(t) = odd {
                    cx = cx.tableau(t);
                }
                return Err(Failure::counterexample(&cx));
            }
            scan
        }
    };
    if a.count {
        emit_count(out, ts.len(), a.out.format)
    } else if a.tableaux {
        emit_tableaux(out, &ts, a.out.format)
    } else {
        emit_poly(out, &weight_sum(shape.n(), &ts)?, a.out.format)
    }
}

fn sets(a: SetsArgs, out: &mut dyn Write) -> CmdResult {
    let kind: SetKind = a.kind.parse().map_err(|_| Failure::parse(format!("unknown set kind {:?}", a.kind)))?;
    let t = read_tableau(&a.tableau)?;
    let (flag, perm) = match kind {
        SetKind::F | SetKind::G => ("sigma", &a.sigma),
        _ => ("pi", &a.pi),
    };
    let perm = perm.as_ref().ok_or_else(|| Failure::parse(format!("set {kind} needs --{flag}")))?;
    let key = make_key(t.shape(), &permutation(perm, flag)?)?;
    let (l, k) = a.cell;
    let set = Criteria::new(&t).set(kind, &key, l, k)?;
    match a.out.format {
        Format::Json => emit_json(out, &set),
        Format::Text => {
            let vals: Vec<String> = set.values.iter().map(|v| v.to_string()).collect();
            writeln!(out, "{kind}({l},{k}) = {{{}}}", vals.join(", "))?;
            Ok(())
        }
    }
}

fn verify(a: VerifyArgs, out: &mut dyn Write) -> CmdResult {
    let suites: Vec<Suite> = if a.suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![a.suite.parse().map_err(Failure::parse)?]
    };
    let mut bounds = Bounds::new(a.n, a.max_cells);
    if let Some(s) = a.samples {
        bounds.samples = s;
    }
    if let Some(s) = a.seed {
        bounds.seed = s;
    }
    let reports: Vec<SuiteReport> = suites.iter().map(|s| s.run(&bounds)).collect::<keyscan::Result<_>>()?;
    match a.out.format {
        Format::Json => emit_json(out, &reports)?,
        Format::Text => {
            for r in &reports {
                writeln!(out, "{r}")?;
            }
            let checks: u64 = reports.iter().map(|r| r.checks).sum();
            let failures: u64 = reports.iter().map(|r| r.failures).sum();
            writeln!(out, "total: {} suites, {checks} checks, {failures} failures", reports.len())?;
        }
    }
    match reports.iter().find(|r| !r.passed()) {
        None => Ok(()),
        Some(r) => Err(match r.examples.first() {
            Some(cx) => Failure::counterexample(cx),
            None => Failure::new(EXIT_INTERNAL, "internal", format!("suite {} ran no checks", r.suite)),
        }),
    }
}
