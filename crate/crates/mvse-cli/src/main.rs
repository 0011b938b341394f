//! Batch front door for the exact zonotope / minimal-enlargement toolkit.
//!
//! Every invocation reads its inputs from files (or standard input when a
//! path is `-`), writes exactly one JSON document to standard output, and
//! exits with:
//!
//! * `0` — positive answer,
//! * `1` — error (malformed input, violated precondition),
//! * `2` — refusal: a *sound negative answer* (not totally unimodular,
//!   membership refused, tiling refuted, no witness found).
//!
//! All exact scalars appear as strings `"p/q"`; nothing numeric travels as
//! a float.  Repeated runs with the same files, flags, and seeds produce
//! byte-identical output.  The environment variable `MVSE_LAB_THREADS`
//! caps internal parallelism.

mod selftest;
mod svg;

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use mvse_lab::bmdist::{bm_upper_bound_seeded, BM_DEFAULT_SEED};
use mvse_lab::json as wire;
use mvse_lab::matrix::RationalMatrix;
use mvse_lab::mvse::{
    coordinate_projection, enumerate_parallelepiped_mvse, find_circuit, hexagonal_subspace,
    make_projection, make_space, minimize_ratio_search, mvse_volume, random_projection,
    volume_ratio,
};
use mvse_lab::plucker::{plucker, SubsetIndex};
use mvse_lab::rat::{format_rat, parse_rat, rat};
use mvse_lab::tiling::{
    default_region_radius, det_volume_check, lattice_search, td_tiling_pipeline, tile_verify,
};
use mvse_lab::tumat::{gomory_certificate, td_membership, tu_violation};
use mvse_lab::zonotope::Zonotope;
use mvse_lab::{Error, Result};

#[derive(Parser)]
#[command(
    name = "mvselab",
    version,
    about = "Exact toolkit for zonotopes, unimodular presentations, lattice tilings, \
             and minimal-volume enlargements of polyhedral normed spaces"
)]
struct Cli {
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
    /// Print all d×d row minors of a matrix in lexicographic subset order.
    Plucker {
        /// Matrix file ("-" for standard input).
        #[arg(long)]
        matrix: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Total-unimodularity checks and certificates.
    Tu {
        #[command(subcommand)]
        cmd: TuCommand,
    },
    /// Membership in the scaled totally-unimodular zonotope class.
    Td {
        #[command(subcommand)]
        cmd: TdCommand,
    },
    /// Zonotope geometry: volume, vertex enumeration, figures.
    Zonotope {
        #[command(subcommand)]
        cmd: ZonotopeCommand,
    },
    /// Minimal-volume enlargement computations on a space presentation.
    Mvse {
        #[command(subcommand)]
        cmd: MvseCommand,
    },
    /// Construct projections onto a presented space.
    Project {
        #[command(subcommand)]
        cmd: ProjectCommand,
    },
    /// Extract the two-dimensional hexagonal subspace certified by a
    /// ratio-1 enlargement witness.
    Hexfind {
        /// Space presentation matrix file.
        #[arg(long)]
        space: String,
        /// Projection matrix file.
        #[arg(long)]
        proj: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Also write the extracted unit ball as an SVG figure.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Lattice tiling verification and search.
    Tile {
        #[command(subcommand)]
        cmd: TileCommand,
    },
    /// Positional distance bounds between two zonotopes.
    Bm {
        #[command(subcommand)]
        cmd: BmCommand,
    },
    /// Run the bundled example corpus and invariant suites.
    Selftest,
}

#[derive(Subcommand)]
enum TuCommand {
    /// Decide total unimodularity by exhausting all square minors.
    Check {
        #[arg(long)]
        matrix: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Produce the four-column certificate of non-unimodularity.
    Certificate {
        #[arg(long)]
        matrix: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

#[derive(Subcommand)]
enum TdCommand {
    /// Decide membership and emit the exact witness or the refusal reason.
    Member {
        #[arg(long)]
        zonotope: String,
    },
}

#[derive(Subcommand)]
enum ZonotopeCommand {
    /// Exact volume by the minor expansion.
    Volume {
        #[arg(long)]
        zonotope: String,
    },
    /// Vertices of a planar zonotope in counterclockwise order.
    Vertices {
        #[arg(long)]
        zonotope: String,
    },
    /// Render a planar zonotope as an SVG figure.
    Svg {
        #[arg(long)]
        zonotope: String,
        /// Output path for the figure.
        #[arg(long)]
        svg: PathBuf,
    },
}

#[derive(Subcommand)]
enum MvseCommand {
    /// Volume of the minimal enlargement of the presented space.
    Volume {
        #[arg(long)]
        space: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// All coordinate parallelepipeds attaining the minimal volume.
    Enumerate {
        #[arg(long)]
        space: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Volume ratio of a projection image against the minimal enlargement.
    Ratio {
        #[arg(long)]
        space: String,
        #[arg(long)]
        proj: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Search seeded projections for the smallest attainable ratio.
    Search {
        #[arg(long)]
        space: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Number of seeded random restarts after the coordinate sweep.
        #[arg(long, default_value_t = 16)]
        restarts: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum ProjectCommand {
    /// The coordinate projection determined by a row subset.
    Coordinate {
        #[arg(long)]
        space: String,
        /// Comma-separated 1-based row indices, e.g. "1,3".
        #[arg(long)]
        subset: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// A seeded random projection onto the presented space.
    Random {
        #[arg(long)]
        space: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

#[derive(Subcommand)]
enum TileCommand {
    /// Verify a claimed lattice tiling by exact-cover sampling.
    Verify {
        #[arg(long)]
        zonotope: String,
        #[arg(long)]
        lattice: String,
        /// Sampling region radius as a rational string (default: twice the
        /// widest bounding-box halfwidth).
        #[arg(long)]
        radius: Option<String>,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also write the tiling as an SVG figure (dimension 2 only).
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Search small generator combinations for a tiling lattice.
    Search {
        #[arg(long)]
        zonotope: String,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Full pipeline: class membership, lattice search, determinant check,
    /// tiling verification.
    Pipeline {
        #[arg(long)]
        zonotope: String,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum BmCommand {
    /// Distance upper bound at the given position via support-function
    /// ratio extremes.
    Bound {
        /// First zonotope file.
        #[arg(long)]
        z1: String,
        /// Second zonotope file.
        #[arg(long)]
        z2: String,
        /// Seed for the dimension-3 sampled directions.
        #[arg(long)]
        seed: Option<u64>,
    },
}

// ---------------------------------------------------------------------------
// Command results
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq)]
enum Status {
    Ok,
    Error,
    Refused,
}

impl Status {
    fn exit_code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::Error => 1,
            Status::Refused => 2,
        }
    }
}

struct CommandResult {
    status: Status,
    payload: Value,
}

fn ok(payload: Value) -> CommandResult {
    CommandResult {
        status: Status::Ok,
        payload,
    }
}

fn refused(payload: Value) -> CommandResult {
    CommandResult {
        status: Status::Refused,
        payload,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Shape { .. } => "shape",
        Error::Singular { .. } => "singular",
        Error::RankDeficient { .. } => "rank_deficient",
        Error::EntryOutOfRange { .. } => "entry_out_of_range",
        Error::SizeLimit { .. } => "size_limit",
        Error::UnsupportedDimension { .. } => "unsupported_dimension",
        Error::Precondition(_) => "precondition",
        Error::Parse(_) => "parse",
        Error::Io(_) => "io",
        Error::BudgetExhausted(_) => "budget_exhausted",
    }
}

fn error_value(e: &Error) -> Value {
    json!({"error": {"kind": error_kind(e), "message": e.to_string()}})
}

// ---------------------------------------------------------------------------
// Input loading
// ---------------------------------------------------------------------------

fn read_source(path: &str) -> Result<String> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Error::Io(format!("cannot read standard input: {e}")))?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(|e| Error::Io(format!("cannot read {path}: {e}")))
    }
}

fn load_matrix(path: &str, format: Format) -> Result<RationalMatrix> {
    let text = read_source(path)?;
    match format {
        Format::Json => wire::matrix_from_str(&text),
        Format::Csv => wire::matrix_from_csv(&text),
    }
}

fn load_zonotope(path: &str) -> Result<Zonotope> {
    wire::zonotope_from_str(&read_source(path)?)
}

fn load_lattice(path: &str) -> Result<mvse_lab::tiling::Lattice> {
    wire::lattice_from_str(&read_source(path)?)
}

fn write_file(path: &Path, content: &str) -> Result<()> {
    fs::write(path, content)
        .map_err(|e| Error::Io(format!("cannot write {}: {e}", path.display())))
}

fn parse_subset(text: &str) -> Result<SubsetIndex> {
    let indices = text
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("invalid row index {part:?} in subset")))
        })
        .collect::<Result<Vec<_>>>()?;
    SubsetIndex::new(indices)
}

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

fn dispatch(command: Command) -> Result<CommandResult> {
    match command {
        Command::Plucker { matrix, format } => {
            let m = load_matrix(&matrix, format)?;
            Ok(ok(wire::plucker_to_value(&plucker(&m)?)))
        }
        Command::Tu { cmd } => run_tu(cmd),
        Command::Td { cmd } => run_td(cmd),
        Command::Zonotope { cmd } => run_zonotope(cmd),
        Command::Mvse { cmd } => run_mvse(cmd),
        Command::Project { cmd } => run_project(cmd),
        Command::Hexfind {
            space,
            proj,
            format,
            svg,
        } => run_hexfind(&space, &proj, format, svg.as_deref()),
        Command::Tile { cmd } => run_tile(cmd),
        Command::Bm { cmd } => run_bm(cmd),
        Command::Selftest => Ok(selftest::run()),
    }
}

fn run_tu(cmd: TuCommand) -> Result<CommandResult> {
    match cmd {
        TuCommand::Check { matrix, format } => {
            let m = load_matrix(&matrix, format)?;
            Ok(match tu_violation(&m)? {
                None => ok(json!({"tu": true})),
                Some(v) => refused(json!({
                    "tu": false,
                    "violation": wire::tu_violation_to_value(&v),
                })),
            })
        }
        TuCommand::Certificate { matrix, format } => {
            let m = load_matrix(&matrix, format)?;
            Ok(match tu_violation(&m)? {
                None => refused(json!({
                    "tu": true,
                    "certificate": null,
                    "note": "matrix is totally unimodular; nothing to certify",
                })),
                Some(_) => {
                    let cert = gomory_certificate(&m)?;
                    ok(json!({
                        "tu": false,
                        "certificate": wire::gomory_to_value(&cert),
                    }))
                }
            })
        }
    }
}

fn run_td(cmd: TdCommand) -> Result<CommandResult> {
    match cmd {
        TdCommand::Member { zonotope } => {
            let z = load_zonotope(&zonotope)?;
            let membership = td_membership(&z)?;
            let payload = wire::td_membership_to_value(&membership);
            Ok(if membership.is_member() {
                ok(payload)
            } else {
                refused(payload)
            })
        }
    }
}

fn run_zonotope(cmd: ZonotopeCommand) -> Result<CommandResult> {
    match cmd {
        ZonotopeCommand::Volume { zonotope } => {
            let z = load_zonotope(&zonotope)?;
            Ok(ok(json!({"volume": format_rat(&z.volume()?)})))
        }
        ZonotopeCommand::Vertices { zonotope } => {
            let z = load_zonotope(&zonotope)?;
            Ok(ok(json!({
                "vertices": wire::vectors_to_value(&z.vertices2d()?),
            })))
        }
        ZonotopeCommand::Svg { zonotope, svg } => {
            let z = load_zonotope(&zonotope)?;
            write_file(&svg, &svg::zonotope_svg(&z)?)?;
            Ok(ok(json!({"svg": svg.display().to_string()})))
        }
    }
}

fn run_mvse(cmd: MvseCommand) -> Result<CommandResult> {
    match cmd {
        MvseCommand::Volume { space, format } => {
            let space = make_space(load_matrix(&space, format)?)?;
            Ok(ok(json!({"mvse_volume": format_rat(&mvse_volume(&space))})))
        }
        MvseCommand::Enumerate { space, format } => {
            let space = make_space(load_matrix(&space, format)?)?;
            let subsets = enumerate_parallelepiped_mvse(&space);
            let rendered: Vec<Value> = subsets
                .iter()
                .map(|s| Value::Array(s.indices().iter().map(|&i| json!(i)).collect()))
                .collect();
            Ok(ok(json!({
                "count": rendered.len(),
                "parallelepipeds": rendered,
            })))
        }
        MvseCommand::Ratio {
            space,
            proj,
            format,
        } => {
            let space = make_space(load_matrix(&space, format)?)?;
            let proj = make_projection(&space, load_matrix(&proj, format)?)?;
            Ok(ok(json!({"ratio": format_rat(&volume_ratio(&space, &proj))})))
        }
        MvseCommand::Search {
            space,
            format,
            restarts,
            seed,
        } => {
            let space = make_space(load_matrix(&space, format)?)?;
            let outcome = minimize_ratio_search(&space, restarts, seed)?;
            Ok(ok(wire::search_outcome_to_value(&outcome)))
        }
    }
}

fn run_project(cmd: ProjectCommand) -> Result<CommandResult> {
    match cmd {
        ProjectCommand::Coordinate {
            space,
            subset,
            format,
        } => {
            let space = make_space(load_matrix(&space, format)?)?;
            let subset = parse_subset(&subset)?;
            let proj = coordinate_projection(&space, &subset)?;
            Ok(ok(json!({
                "projection": wire::matrix_to_value(proj.a()),
                "ratio": format_rat(&volume_ratio(&space, &proj)),
            })))
        }
        ProjectCommand::Random {
            space,
            seed,
            format,
        } => {
            let space = make_space(load_matrix(&space, format)?)?;
            let proj = random_projection(&space, seed)?;
            Ok(ok(json!({
                "projection": wire::matrix_to_value(proj.a()),
                "ratio": format_rat(&volume_ratio(&space, &proj)),
            })))
        }
    }
}

fn run_hexfind(
    space_path: &str,
    proj_path: &str,
    format: Format,
    svg_path: Option<&Path>,
) -> Result<CommandResult> {
    let space = make_space(load_matrix(space_path, format)?)?;
    let proj = make_projection(&space, load_matrix(proj_path, format)?)?;
    if volume_ratio(&space, &proj) == rat(1) && find_circuit(&proj)?.is_none() {
        // Sound negative: the enlargement is a parallelepiped, so no
        // hexagonal subspace exists for this witness.
        return Ok(refused(json!({
            "witness": null,
            "reason": "the minimal enlargement is a parallelepiped; \
                       no hexagonal subspace arises from this projection",
        })));
    }
    let report = hexagonal_subspace(&space, &proj)?;
    if let Some(path) = svg_path {
        write_file(path, &svg::polygon_svg(&report.ball_vertices))?;
    }
    Ok(ok(wire::hexagon_report_to_value(&report)))
}

fn run_tile(cmd: TileCommand) -> Result<CommandResult> {
    match cmd {
        TileCommand::Verify {
            zonotope,
            lattice,
            radius,
            samples,
            seed,
            svg,
        } => {
            let z = load_zonotope(&zonotope)?;
            let lattice = load_lattice(&lattice)?;
            let radius = match radius {
                Some(text) => parse_rat(&text)?,
                None => default_region_radius(&z)?,
            };
            let verdict = tile_verify(&z, &lattice, &radius, samples, seed)?;
            if let Some(path) = svg {
                write_file(&path, &svg::tiling_svg(&z, &lattice, &radius)?)?;
            }
            let mut payload = wire::tile_verdict_to_value(&verdict);
            payload["region_radius"] = json!(format_rat(&radius));
            payload["det_check"] = json!(det_volume_check(&z, &lattice)?);
            Ok(if verdict.passed {
                ok(payload)
            } else {
                refused(payload)
            })
        }
        TileCommand::Search { zonotope, svg } => {
            let z = load_zonotope(&zonotope)?;
            match lattice_search(&z)? {
                Some(lattice) => {
                    if let Some(path) = svg {
                        let radius = default_region_radius(&z)?;
                        write_file(&path, &svg::tiling_svg(&z, &lattice, &radius)?)?;
                    }
                    Ok(ok(json!({
                        "lattice": wire::lattice_to_value(&lattice),
                        "determinant": format_rat(lattice.determinant()),
                        "det_check": det_volume_check(&z, &lattice)?,
                    })))
                }
                None => Ok(refused(json!({
                    "lattice": null,
                    "note": "no tiling lattice found within the fixed search \
                             budget; the search is inconclusive by contract",
                }))),
            }
        }
        TileCommand::Pipeline {
            zonotope,
            samples,
            seed,
            svg,
        } => {
            let z = load_zonotope(&zonotope)?;
            let report = td_tiling_pipeline(&z, samples, seed)?;
            let mut payload = wire::pipeline_to_value(&report);
            if let Some(path) = svg {
                let figure = match &report.lattice {
                    Some(lattice) if z.d() == 2 => {
                        svg::tiling_svg(&z, lattice, &default_region_radius(&z)?)?
                    }
                    _ => svg::zonotope_svg(&z)?,
                };
                write_file(&path, &figure)?;
                payload["svg"] = json!(path.display().to_string());
            }
            let positive = report.membership.is_member()
                && report.tile.as_ref().is_some_and(|t| t.passed);
            Ok(if positive {
                ok(payload)
            } else {
                refused(payload)
            })
        }
    }
}

fn run_bm(cmd: BmCommand) -> Result<CommandResult> {
    match cmd {
        BmCommand::Bound { z1, z2, seed } => {
            let first = load_zonotope(&z1)?;
            let second = load_zonotope(&z2)?;
            let bound =
                bm_upper_bound_seeded(&first, &second, seed.unwrap_or(BM_DEFAULT_SEED))?;
            Ok(ok(wire::bm_bound_to_value(&bound)))
        }
    }
}

// ---------------------------------------------------------------------------
// Entry point
// ---------------------------------------------------------------------------

fn configure_thread_pool() {
    if let Ok(text) = std::env::var("MVSE_LAB_THREADS") {
        match text.trim().parse::<usize>() {
            Ok(n) if n > 0 => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
            _ => eprintln!("warning: ignoring invalid MVSE_LAB_THREADS={text:?}"),
        }
    }
}

fn main() -> ExitCode {
    configure_thread_pool();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match dispatch(cli.command) {
        Ok(result) => result,
        Err(e) => CommandResult {
            status: Status::Error,
            payload: error_value(&e),
        },
    };
    let rendered = serde_json::to_string_pretty(&result.payload)
        .expect("JSON values serialize without failure");
    println!("{rendered}");
    ExitCode::from(result.status.exit_code())
}
