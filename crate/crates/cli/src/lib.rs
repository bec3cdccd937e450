//! `ordconf`: reproduces the bigraded Betti tables of `conf(C,n)`, the
//! binomial coefficient tables, Betti polynomials and oyster lower bounds.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use ordconf::cohomology::{deconvolve_by_c, CohomologyError, ResultCache};
use ordconf::partitions::{enumerate_oyster, hook_dim, oyster_lower_bound};
use ordconf::poly::binomial;
use ordconf::{BigradedTable, ComplexKind, Engine, RingPresentation};

pub mod verify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_GUARD: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

/// Largest `n` for `tables` without `--force`.
pub const TABLES_GUARD: usize = 7;
/// Largest `r` for `graded` without `--force` (`GRADED_WEIGHT_GUARD` with `--weight`).
pub const GRADED_GUARD: usize = 8;
pub const GRADED_WEIGHT_GUARD: usize = 10;
/// Largest `k` for `betti` without `--stretch`.
pub const BETTI_GUARD: usize = 5;

#[derive(Parser, Debug)]
#[command(
    name = "ordconf",
    version,
    about = "Bigraded Betti numbers of ordered configuration spaces of an elliptic curve"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalArgs {
    /// `elliptic` or a ring description in JSON.
    #[arg(long, global = true, default_value = "elliptic")]
    pub ring: String,
    /// Comma-separated primes for modular ranks.
    #[arg(long, global = true, value_delimiter = ',')]
    pub primes: Vec<u64>,
    /// JSON result cache, created if missing.
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Lift the size guards.
    #[arg(long, global = true)]
    pub force: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Directory for table files; tables go to stdout without it.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Md,
    Json,
}

impl Format {
    fn ext(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Md => "md",
            Format::Json => "json",
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// H^{p,q}(conf(X,n)) and, for the elliptic curve, H^{p,q}(conf(C,n)/C).
    Tables {
        #[arg(long, default_value_t = 7)]
        nmax: usize,
    },
    /// Coefficients a_r^{p,q} from the full-support quotient complexes.
    Graded {
        #[arg(long, default_value_t = 7)]
        rmax: usize,
        /// Restrict to one weight space.
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<i32>,
    },
    /// Oyster partitions and the lower bound for gr^{p+2q} H^{p,q}.
    Oyster {
        #[arg(long, requires = "q")]
        p: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        #[arg(long, requires_all = ["a", "size"], conflicts_with = "p")]
        k: Option<usize>,
        #[arg(long)]
        a: Option<usize>,
        /// Size N of the partitions (with --k and --a).
        #[arg(long)]
        size: Option<usize>,
    },
    /// Structural and numerical self-checks.
    Verify {
        #[arg(long, value_enum, default_value_t = verify::Level::Quick)]
        level: verify::Level,
    },
    /// Betti polynomials b_k(n) in the binomial basis.
    Betti {
        #[arg(long, default_value_t = 5)]
        kmax: usize,
        /// Values of n at which to evaluate.
        #[arg(long, value_delimiter = ',')]
        at: Vec<u64>,
        /// Allow kmax above the default guard.
        #[arg(long)]
        stretch: bool,
    },
}

/// Failure classes mapped onto exit codes.
#[derive(Debug)]
pub enum CliError {
    Guard(String),
    Input(String),
    Verify(String),
    Other(anyhow::Error),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Guard(_) => EXIT_GUARD,
            CliError::Input(_) => EXIT_INPUT,
            CliError::Verify(_) => EXIT_VERIFY,
            CliError::Other(_) => EXIT_VERIFY,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Guard(m) => write!(f, "size guard: {m} (pass --force to override)"),
            CliError::Input(m) => write!(f, "bad input: {m}"),
            CliError::Verify(m) => write!(f, "verification failed: {m}"),
            CliError::Other(e) => write!(f, "{e:#}"),
        }
    }
}

impl From<anyhow::Error> for CliError {
    fn from(e: anyhow::Error) -> Self {
        CliError::Other(e)
    }
}

impl From<CohomologyError> for CliError {
    fn from(e: CohomologyError) -> Self {
        CliError::Other(e.into())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Other(e.into())
    }
}

/// Parses arguments, runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    match execute(&cli, out, err) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.code()
        }
    }
}

pub fn load_ring(arg: &str) -> Result<RingPresentation, CliError> {
    if arg == "elliptic" {
        return Ok(RingPresentation::elliptic_curve());
    }
    let text = std::fs::read_to_string(arg).map_err(|e| CliError::Input(format!("{arg}: {e}")))?;
    RingPresentation::from_json(&text).map_err(|e| CliError::Input(format!("{arg}: {e}")))
}

pub fn build_engine(g: &GlobalArgs) -> Result<Engine, CliError> {
    let mut engine = Engine::new(load_ring(&g.ring)?);
    if !g.primes.is_empty() {
        engine = engine
            .with_primes(g.primes.clone())
            .map_err(|e| CliError::Input(e.to_string()))?;
    }
    if let Some(path) = &g.cache {
        let cache = ResultCache::open(path).map_err(|e| CliError::Input(e.to_string()))?;
        engine = engine.with_cache(cache);
    }
    Ok(engine)
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    let g = &cli.global;
    if let Some(j) = g.jobs {
        if j == 0 {
            return Err(CliError::Input("--jobs must be positive".into()));
        }
        // the global pool can be sized once per process
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build_global();
    }
    // oyster listings need no ring
    if let Command::Oyster { p, q, k, a, size } = &cli.command {
        return cmd_oyster(*p, *q, *k, *a, *size, out);
    }
    let engine = build_engine(g)?;
    let result = match &cli.command {
        Command::Tables { nmax } => cmd_tables(&engine, g, *nmax, out),
        Command::Graded { rmax, weight } => cmd_graded(&engine, g, *rmax, *weight, out),
        Command::Verify { level } => verify::cmd_verify(&engine, *level, out),
        Command::Betti { kmax, at, stretch } => cmd_betti(&engine, g, *kmax, at, *stretch, out),
        Command::Oyster { .. } => unreachable!(),
    };
    engine.save_cache()?;
    let _ = writeln!(err, "rank jobs: {}", engine.rank_jobs());
    result
}

/// Table serialization in the requested format.
pub fn render(table: &BigradedTable, format: Format) -> String {
    match format {
        Format::Csv => table.to_csv(),
        Format::Md => table.to_markdown(),
        Format::Json => {
            let rows: Vec<serde_json::Value> = table
                .layout()
                .into_iter()
                .map(|(q, values)| serde_json::json!({ "q": q, "values": values }))
                .collect();
            let doc = serde_json::json!({
                "n": table.n,
                "mode": table.mode,
                "weight": table.weight,
                "certified": table.certified,
                "rows": rows,
            });
            serde_json::to_string_pretty(&doc).unwrap() + "\n"
        }
    }
}

fn emit(
    g: &GlobalArgs,
    out: &mut dyn Write,
    name: &str,
    title: &str,
    table: &BigradedTable,
) -> Result<(), CliError> {
    let body = render(table, g.format);
    match &g.out {
        Some(dir) => {
            std::fs::create_dir_all(dir)?;
            let path = dir.join(format!("{name}.{}", g.format.ext()));
            std::fs::write(&path, body).with_context(|| path.display().to_string())?;
            writeln!(out, "wrote {}", path.display())?;
        }
        None => {
            writeln!(out, "# {title}")?;
            write!(out, "{body}")?;
            writeln!(out)?;
        }
    }
    if !table.certified {
        writeln!(
            out,
            "warning: {title} rests on ranks without two-prime agreement"
        )?;
    }
    Ok(())
}

fn is_elliptic(engine: &Engine) -> bool {
    *engine.ring() == RingPresentation::elliptic_curve()
}

/// File stem of the `/C` table of `conf(C,n)`.
pub fn conf_name(n: usize, over_c: bool) -> String {
    format!("conf{n}_{}", if over_c { "over_c" } else { "full" })
}

/// File stem of the coefficient table at `r`.
pub fn coeff_name(r: usize, over_c: bool, weight: Option<i32>) -> String {
    let w = weight.map_or(String::new(), |w| format!("_w{w}"));
    format!("coeff{r}{w}_{}", if over_c { "over_c" } else { "full" })
}

fn cmd_tables(
    engine: &Engine,
    g: &GlobalArgs,
    nmax: usize,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    if nmax > TABLES_GUARD && !g.force {
        return Err(CliError::Guard(format!(
            "tables up to n = {nmax} exceed n = {TABLES_GUARD}"
        )));
    }
    let name = engine.ring().name().to_string();
    for n in 1..=nmax {
        let full = engine.cohom_dims(n)?;
        emit(
            g,
            out,
            &conf_name(n, false),
            &format!("H^{{p,q}}(conf({name},{n}))"),
            &full,
        )?;
        if is_elliptic(engine) {
            let over = deconvolve_by_c(&full)?;
            emit(
                g,
                out,
                &conf_name(n, true),
                &format!("H^{{p,q}}(conf(C,{n})/C)"),
                &over,
            )?;
        }
        engine.save_cache()?;
    }
    Ok(())
}

fn cmd_graded(
    engine: &Engine,
    g: &GlobalArgs,
    rmax: usize,
    weight: Option<i32>,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let guard = if weight.is_some() {
        GRADED_WEIGHT_GUARD
    } else {
        GRADED_GUARD
    };
    if rmax > guard && !g.force {
        return Err(CliError::Guard(format!(
            "quotient complexes up to r = {rmax} exceed r = {guard}"
        )));
    }
    if engine.ring().euler_characteristic() != 0 {
        return Err(CliError::Input(format!(
            "ring {} has nonzero Euler characteristic",
            engine.ring().name()
        )));
    }
    let mut over_tables = Vec::new();
    for r in 2..=rmax {
        let table = match weight {
            None => engine.graded_coefficients(r)?,
            Some(w) => engine.weight_table(ComplexKind::Quotient, r, w)?,
        };
        emit(
            g,
            out,
            &coeff_name(r, false, weight),
            &format!("a_{r}^{{p,q}}"),
            &table,
        )?;
        if weight.is_none() && is_elliptic(engine) {
            let over = deconvolve_by_c(&table)?;
            emit(
                g,
                out,
                &coeff_name(r, true, None),
                &format!("a_{r}^{{p,q}} of conf(C,n)/C"),
                &over,
            )?;
            over_tables.push(over);
        }
        engine.save_cache()?;
    }
    if rmax >= 8 && weight.is_none() && is_elliptic(engine) {
        let a8 = over_tables
            .iter()
            .find(|t| t.n == 8)
            .map_or(0, |t| t.get(2, 3));
        writeln!(out, "a^{{2,3}}_8 = {a8}")?;
        let total: u64 = over_tables
            .iter()
            .map(|t| t.get(2, 3) * binomial(8, t.n as u64))
            .sum();
        writeln!(out, "dim H^{{2,3}}(conf(C,8)/C) = {total}")?;
    }
    Ok(())
}

fn cmd_oyster(
    p: Option<usize>,
    q: Option<usize>,
    k: Option<usize>,
    a: Option<usize>,
    size: Option<usize>,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    match (p, q, k, a, size) {
        (Some(p), Some(q), None, None, None) => {
            let bound = oyster_lower_bound(p, q);
            writeln!(
                out,
                "oyster partitions of {} for (p,q) = ({p},{q})",
                p + 2 * q
            )?;
            for t in &bound.terms {
                writeln!(
                    out,
                    "(k,a) = ({},{})  {}  frobenius {}  dim {}  x{}",
                    t.k,
                    t.a,
                    t.partition,
                    t.partition.frobenius(),
                    t.dim,
                    t.k + 1
                )?;
            }
            writeln!(out, "bound = {}", bound.dim_at_r)?;
            writeln!(out, "polynomial term = {}", bound.as_polynomial)?;
            Ok(())
        }
        (None, None, Some(k), Some(a), Some(n)) => {
            let list = enumerate_oyster(k, a, n);
            writeln!(out, "({k},{a})-oyster partitions of {n}: {}", list.len())?;
            for l in &list {
                writeln!(out, "{l}  frobenius {}  dim {}", l.frobenius(), hook_dim(l))?;
            }
            Ok(())
        }
        _ => Err(CliError::Input(
            "give either --p and --q, or --k, --a and --size".into(),
        )),
    }
}

fn cmd_betti(
    engine: &Engine,
    g: &GlobalArgs,
    kmax: usize,
    at: &[u64],
    stretch: bool,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    if kmax > BETTI_GUARD && !stretch && !g.force {
        return Err(CliError::Guard(format!(
            "b_k up to k = {kmax} exceeds k = {BETTI_GUARD}; pass --stretch"
        )));
    }
    if engine.ring().euler_characteristic() != 0 {
        return Err(CliError::Input(format!(
            "ring {} has nonzero Euler characteristic",
            engine.ring().name()
        )));
    }
    let polys = engine.betti_polynomials(kmax)?;
    if g.format == Format::Json {
        let doc: serde_json::Map<String, serde_json::Value> = polys
            .iter()
            .map(|(k, b)| {
                let values: serde_json::Map<String, serde_json::Value> =
                    at.iter().map(|&n| (n.to_string(), b.eval(n).into())).collect();
                let v = serde_json::json!({
                    "binomial": b.coeffs().iter().map(|(i, c)| (i.to_string(), (*c).into())).collect::<serde_json::Map<_, _>>(),
                    "text": b.to_string(),
                    "values": values,
                });
                (format!("b{k}"), v)
            })
            .collect();
        writeln!(out, "{}", serde_json::to_string_pretty(&doc).unwrap())?;
        return Ok(());
    }
    for (k, b) in &polys {
        let mut line = format!("b_{k} = {b}");
        for &n in at {
            write!(line, "; b_{k}({n}) = {}", b.eval(n)).unwrap();
        }
        writeln!(out, "{line}")?;
    }
    Ok(())
}

/// Reads a CSV table written by `tables`/`graded` back into `(q, values)` rows.
pub fn parse_csv_rows(text: &str) -> Vec<(usize, Vec<u64>)> {
    text.lines()
        .skip(1)
        .filter(|l| !l.is_empty())
        .map(|l| {
            let mut cells = l.split(',');
            let q = cells.next().unwrap().parse().unwrap();
            let vals = cells
                .filter(|c| !c.is_empty())
                .map(|c| c.parse().unwrap())
                .collect();
            (q, vals)
        })
        .collect()
}

/// Convenience for tests: runs with captured output.
pub fn run_captured(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(
        std::iter::once("ordconf").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (
        code,
        String::from_utf8_lossy(&out).into_owned(),
        String::from_utf8_lossy(&err).into_owned(),
    )
}

pub fn read_table_file(dir: &Path, stem: &str) -> std::io::Result<String> {
    std::fs::read_to_string(dir.join(format!("{stem}.csv")))
}
