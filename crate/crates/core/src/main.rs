use clap::{Parser, Subcommand};
use ddecomp::bounds::{matrix_planar_bound, matrix_warren_bound, planar_bound, warren_bound};
use ddecomp::cli::{emit_json, emit_svg, parse_input, run_pipeline, PlotBox};
use ddecomp::family::TimeDomain;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "ddecomp", version, about = "Exact D-decomposition of two-parameter families")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a problem file; prints the JSON report unless --json is given.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Plot window XMIN:XMAX:YMIN:YMAX.
        #[arg(long = "box", allow_hyphen_values = true)]
        bbox: Option<String>,
        /// Plot grid resolution.
        #[arg(long)]
        grid: Option<usize>,
    },
    /// Print the region-count bounds for degree t in s and parameter degree d.
    Bounds {
        #[arg(long)]
        t: u32,
        #[arg(long)]
        d: u32,
        #[arg(long, default_value_t = 2)]
        n: u32,
        #[arg(long)]
        matrix: bool,
        #[arg(long)]
        discrete: bool,
    },
}

fn analyze(
    file: PathBuf,
    json: Option<PathBuf>,
    svg: Option<PathBuf>,
    bbox: Option<String>,
    grid: Option<usize>,
) -> Result<(), Box<dyn std::error::Error>> {
    let text = std::fs::read_to_string(&file).map_err(|e| format!("{}: {e}", file.display()))?;
    let problem = parse_input(&text).map_err(|e| format!("{}:{e}", file.display()))?;
    let report = run_pipeline(&problem)?;
    for w in &report.warnings {
        eprintln!("warning: {w}");
    }
    let doc = emit_json(&report);
    match json {
        Some(path) => std::fs::write(path, doc)?,
        None => print!("{doc}"),
    }
    if let Some(path) = svg {
        let b = match bbox.as_deref() {
            Some(text) => PlotBox::parse(text)?,
            None => problem.bbox.unwrap_or(report.default_box),
        };
        let n = grid.or(problem.grid).unwrap_or(256);
        std::fs::write(path, emit_svg(&report.border.h, &report.points, &b, n)?)?;
    }
    Ok(())
}

fn bounds(t: u32, d: u32, n: u32, matrix: bool, discrete: bool) -> Result<(), Box<dyn std::error::Error>> {
    let time = if discrete { TimeDomain::Discrete } else { TimeDomain::Continuous };
    let (planar, warren) = if matrix {
        (matrix_planar_bound(t, d, time)?, matrix_warren_bound(t, d, n, time)?)
    } else {
        (planar_bound(t, d)?, warren_bound(t, d, n)?)
    };
    println!("{{\"planar\": {planar}, \"warren\": {warren}}}");
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze { file, json, svg, bbox, grid } => analyze(file, json, svg, bbox, grid),
        Command::Bounds { t, d, n, matrix, discrete } => bounds(t, d, n, matrix, discrete),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
