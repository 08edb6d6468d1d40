use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use mubplane::algebra::{build_field, classify_order, FieldSpec};
use mubplane::geometry::{
    affinize, build_pg2, dualize, plane_from_difference_set, singer_difference_set,
    verify_affine_plane, verify_projective_plane, DifferenceSet, IncidenceStructure,
};
use mubplane::mub::{check_mub_set, construct_mub_set, MubSet, CERTIFY_TOL};
use mubplane::search::{optimize, optimize_with_trace, search_max_mubs, SearchConfig};
use mubplane::survey::{survey, SurveyOptions, DEFAULT_SEARCH_CAP};
use mubplane::Error;

const EXIT_VERIFY: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAPACITY: u8 = 3;

#[derive(Parser)]
#[command(
    name = "mubplane",
    version,
    about = "Finite projective planes and mutually unbiased bases"
)]
struct Cli {
    /// Seed for numerical search.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Unbiasedness tolerance for MUB certification.
    #[arg(long, global = true)]
    tol: Option<f64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Galois fields.
    #[command(subcommand)]
    Field(FieldCmd),
    /// Incidence structures and projective planes.
    #[command(subcommand)]
    Plane(PlaneCmd),
    /// Complete sets of mutually unbiased bases.
    #[command(subcommand)]
    Mub(MubCmd),
    /// Numerical search for unbiased bases.
    #[command(subcommand)]
    Search(SearchCmd),
    /// Plane existence against MUB evidence over a range of dimensions.
    Survey(SurveyArgs),
}

#[derive(Subcommand)]
enum FieldCmd {
    /// GF(p^n) with the smallest monic irreducible modulus.
    Build {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        n: u32,
    },
}

#[derive(Args)]
struct FieldSource {
    /// Field order q (a prime power).
    #[arg(long, conflicts_with = "field")]
    order: Option<u64>,
    /// Field specification JSON file.
    #[arg(long)]
    field: Option<PathBuf>,
}

#[derive(Subcommand)]
enum PlaneCmd {
    /// PG(2, q) from field coordinates.
    Build(FieldSource),
    /// Check projective (or affine) plane axioms.
    Verify {
        /// Incidence structure JSON, `-` for stdin.
        input: PathBuf,
        #[arg(long)]
        affine: bool,
    },
    /// Swap points and lines.
    Dualize { input: PathBuf },
    /// Delete a line and its points.
    Affinize {
        input: PathBuf,
        #[arg(long)]
        line: usize,
    },
    /// Singer difference set of PG(2, q), or the plane it generates.
    Singer {
        #[command(flatten)]
        source: FieldSource,
        /// Difference set JSON to build a plane from.
        #[arg(long, conflicts_with_all = ["order", "field"])]
        from_set: Option<PathBuf>,
        /// Emit the plane instead of the difference set.
        #[arg(long)]
        plane: bool,
    },
}

#[derive(Subcommand)]
enum MubCmd {
    /// Complete set of d + 1 MUBs for prime-power d.
    Build {
        #[arg(long)]
        d: u64,
    },
    /// Certify a MUB set file.
    Verify { input: PathBuf },
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    d: Option<usize>,
    /// SearchConfig JSON; flags given on the command line take precedence.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    restarts: Option<usize>,
    #[arg(long)]
    max_iterations: Option<usize>,
    #[arg(long)]
    parallel: bool,
}

#[derive(Subcommand)]
enum SearchCmd {
    /// Search for m bases (the identity included).
    Run {
        #[command(flatten)]
        common: SearchArgs,
        #[arg(long)]
        m: Option<usize>,
        /// Per-iteration costs as CSV (iteration,restart,cost).
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Largest m for which the search converges.
    Max {
        #[command(flatten)]
        common: SearchArgs,
    },
}

#[derive(Args)]
struct SurveyArgs {
    #[arg(long, default_value_t = 2)]
    from: u64,
    #[arg(long)]
    to: u64,
    /// Search non-prime-power dimensions up to the cap.
    #[arg(long)]
    search: bool,
    #[arg(long, default_value_t = DEFAULT_SEARCH_CAP)]
    search_cap: u64,
    /// SearchConfig JSON used for every search.
    #[arg(long)]
    config: Option<PathBuf>,
}

enum Failure {
    Lib(Error),
    Io(String),
    Verify,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

type CliResult = Result<(), Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Lib(Error::Usage(msg.into()))
}

fn read_input(path: &PathBuf) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn read_json<T: serde::de::DeserializeOwned>(path: &PathBuf) -> Result<T, Failure> {
    let text = read_input(path)?;
    serde_json::from_str(&text)
        .map_err(|e| Failure::Lib(Error::Format(format!("{}: {e}", path.display()))))
}

struct Output {
    format: Format,
    out: Option<PathBuf>,
}

impl Output {
    fn write(&self, text: &str) -> CliResult {
        match &self.out {
            Some(path) => fs::write(path, text)?,
            None => io::stdout().write_all(text.as_bytes())?,
        }
        Ok(())
    }

    fn json<T: Serialize>(&self, value: &T) -> CliResult {
        if self.format == Format::Csv {
            return Err(usage("this command has no CSV form"));
        }
        let mut text = serde_json::to_string_pretty(value).map_err(Error::from)?;
        text.push('\n');
        self.write(&text)
    }

    /// JSON, or CSV built from `rows` under `header`.
    fn table<T: Serialize>(&self, value: &T, header: &[&str], rows: Vec<Vec<String>>) -> CliResult {
        if self.format == Format::Json {
            return self.json(value);
        }
        self.write(&csv_text(header, rows)?)
    }
}

fn csv_text(header: &[&str], rows: Vec<Vec<String>>) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io_err = |e: csv::Error| Failure::Io(e.to_string());
    w.write_record(header).map_err(io_err)?;
    for row in rows {
        w.write_record(&row).map_err(io_err)?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::Io(e.to_string()))?;
    Ok(String::from_utf8_lossy(&bytes).into_owned())
}

fn field_for_order(q: u64) -> Result<FieldSpec, Failure> {
    let pp = classify_order(q)?.ok_or(Error::NotPrimePower(q))?;
    Ok(build_field(pp.prime, pp.exponent)?)
}

fn field_from(source: &FieldSource) -> Result<FieldSpec, Failure> {
    match (source.order, &source.field) {
        (Some(q), None) => field_for_order(q),
        (None, Some(path)) => read_json(path),
        _ => Err(usage("give exactly one of --order or --field")),
    }
}

fn search_config(
    common: &SearchArgs,
    m: Option<usize>,
    seed: Option<u64>,
) -> Result<SearchConfig, Failure> {
    let mut config = match &common.config {
        Some(path) => read_json(path)?,
        None => SearchConfig::default(),
    };
    if let Some(d) = common.d {
        config.dimension = d;
    } else if common.config.is_none() {
        return Err(usage("--d is required without --config"));
    }
    if let Some(m) = m {
        config.target_count = m;
    }
    if let Some(r) = common.restarts {
        config.restarts = r;
    }
    if let Some(it) = common.max_iterations {
        config.max_iterations = it;
    }
    if let Some(s) = seed {
        config.seed = s;
    }
    config.parallel |= common.parallel;
    Ok(config)
}

#[derive(Serialize)]
struct Verdict<C: Serialize, F: Serialize> {
    pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<C>,
    #[serde(skip_serializing_if = "Option::is_none")]
    failure: Option<F>,
}

fn verdict<C: Serialize, F: Serialize>(out: &Output, r: Result<C, F>) -> CliResult {
    let pass = r.is_ok();
    let (certificate, failure) = match r {
        Ok(c) => (Some(c), None),
        Err(f) => (None, Some(f)),
    };
    out.json(&Verdict {
        pass,
        certificate,
        failure,
    })?;
    if pass {
        Ok(())
    } else {
        Err(Failure::Verify)
    }
}

fn run(cli: Cli) -> CliResult {
    let out = Output {
        format: cli.format,
        out: cli.out.clone(),
    };
    let tol = cli.tol.unwrap_or(CERTIFY_TOL);
    match cli.command {
        Command::Field(FieldCmd::Build { p, n }) => {
            let spec = build_field(p, n)?;
            let modulus = spec
                .modulus()
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(" ");
            out.table(
                &spec,
                &["p", "n", "modulus"],
                vec![vec![p.to_string(), n.to_string(), modulus]],
            )
        }
        Command::Plane(cmd) => run_plane(cmd, &out),
        Command::Mub(MubCmd::Build { d }) => {
            let set = construct_mub_set(d)?;
            out.json(&set)
        }
        Command::Mub(MubCmd::Verify { input }) => {
            let set: MubSet = read_json(&input)?;
            let report = check_mub_set(&set, tol)?;
            let rows = report
                .pair_results
                .iter()
                .map(|p| {
                    vec![
                        p.first.to_string(),
                        p.second.to_string(),
                        format!("{:e}", p.deviation),
                    ]
                })
                .collect();
            out.table(&report, &["first", "second", "deviation"], rows)?;
            if report.pass {
                Ok(())
            } else {
                Err(Failure::Verify)
            }
        }
        Command::Search(SearchCmd::Run { common, m, trace }) => {
            let config = search_config(&common, m, cli.seed)?;
            let result = match trace {
                Some(path) => {
                    if config.parallel {
                        return Err(usage("--trace requires sequential restarts"));
                    }
                    let mut rows = Vec::new();
                    let result = optimize_with_trace(&config, |restart, it, cost| {
                        rows.push(vec![
                            it.to_string(),
                            restart.to_string(),
                            format!("{cost:e}"),
                        ]);
                    })?;
                    fs::write(path, csv_text(&["iteration", "restart", "cost"], rows)?)?;
                    result
                }
                None => optimize(&config)?,
            };
            out.json(&result)
        }
        Command::Search(SearchCmd::Max { common }) => {
            let config = search_config(&common, None, cli.seed)?;
            let found = search_max_mubs(config.dimension, &config)?;
            out.json(&found)
        }
        Command::Survey(args) => {
            let mut search = match &args.config {
                Some(path) => read_json(path)?,
                None => SearchConfig::default(),
            };
            if let Some(s) = cli.seed {
                search.seed = s;
            }
            let options = SurveyOptions {
                enable_search: args.search,
                search_cap: args.search_cap,
                search,
            };
            let table = survey(args.from, args.to, &options)?;
            match out.format {
                Format::Json => out.json(&table),
                Format::Csv => out.write(&table.to_csv()?),
            }
        }
    }
}

fn run_plane(cmd: PlaneCmd, out: &Output) -> CliResult {
    match cmd {
        PlaneCmd::Build(source) => out.json(&build_pg2(&field_from(&source)?)?),
        PlaneCmd::Verify { input, affine } => {
            let s: IncidenceStructure = read_json(&input)?;
            if affine {
                verdict(out, verify_affine_plane(&s))
            } else {
                verdict(out, verify_projective_plane(&s))
            }
        }
        PlaneCmd::Dualize { input } => {
            let s: IncidenceStructure = read_json(&input)?;
            out.json(&dualize(&s))
        }
        PlaneCmd::Affinize { input, line } => {
            let s: IncidenceStructure = read_json(&input)?;
            out.json(&affinize(&s, line)?)
        }
        PlaneCmd::Singer {
            source,
            from_set,
            plane,
        } => {
            let set: DifferenceSet = match &from_set {
                Some(path) => read_json(path)?,
                None => singer_difference_set(&field_from(&source)?)?,
            };
            if plane || from_set.is_some() {
                out.json(&plane_from_difference_set(&set)?)
            } else {
                out.json(&set)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verify) => ExitCode::from(EXIT_VERIFY),
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Capacity(_) => EXIT_CAPACITY,
                Error::Precondition(_) | Error::BoundViolation { .. } => EXIT_VERIFY,
                _ => EXIT_USAGE,
            })
        }
    }
}
