use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use affine_h2::document::{export_json, to_string, MetaDocument};
use affine_h2::group::named;
use affine_h2::matrix::matrix_export;
use affine_h2::recipes::{self, Figure, RecipeOutput, DEFAULT_RADIUS_EDGES, DEFAULT_ROUNDS};
use affine_h2::render::{render_svg, StyleConfig};
use affine_h2::tiling::TileKind;
use affine_h2::verify::run_verify;
use affine_h2::voronoi::{cell_summary, root_cell_summary};
use affine_h2::Error;

#[derive(Parser)]
#[command(name = "affine-h2", version, about = "Five-fold tilings from affine A4 acting on projected Voronoi cells")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct Output {
    /// Write an SVG rendering of the patch.
    #[arg(long, global = true, value_name = "PATH")]
    svg: Option<PathBuf>,
    /// Write a JSON document.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Pixels per plane unit in SVG output.
    #[arg(long, global = true, value_name = "PX", default_value_t = 100.0)]
    scale: f64,
}

#[derive(Clone, Copy, ValueEnum)]
enum LatticeArg {
    Root,
    Weight,
}

#[derive(Subcommand)]
enum Command {
    /// Run the built-in self-checks.
    Verify,
    /// Face census of a Voronoi cell.
    Cell {
        #[arg(long, value_enum)]
        lattice: LatticeArg,
        #[arg(long)]
        summary: bool,
    },
    /// Decagonal patch projected from a Voronoi cell.
    Decagon {
        #[arg(long, value_enum)]
        lattice: LatticeArg,
    },
    /// Figure recipe or growth about a five-fold center.
    Tile {
        #[arg(long, value_parser = parse_figure, conflicts_with = "center", required_unless_present = "center")]
        recipe: Option<Figure>,
        /// Center parameters n1,n2,n3,n4.
        #[arg(long, value_name = "N1,N2,N3,N4", allow_hyphen_values = true)]
        center: Option<String>,
        /// Radius in edge lengths.
        #[arg(long, default_value_t = DEFAULT_RADIUS_EDGES, requires = "center")]
        radius: f64,
        #[arg(long, default_value_t = DEFAULT_ROUNDS, requires = "center")]
        rounds: usize,
    },
    /// Matrices of a named group element.
    Matrices {
        #[arg(long, value_parser = parse_element)]
        element: String,
    },
}

fn parse_figure(s: &str) -> Result<Figure, String> {
    s.parse()
}

fn parse_element(s: &str) -> Result<String, String> {
    if named::NAMES.contains(&s) {
        Ok(s.to_string())
    } else {
        Err(format!("expected one of {}", named::NAMES.join(", ")))
    }
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotFivefoldCenter(_) | Error::SchemaError(_) => Failure::Usage(e.to_string()),
            _ => Failure::Runtime(e.to_string()),
        }
    }
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::Runtime(format!("{}: {e}", path.display())))
}

fn emit_patch(out: &Output, o: &RecipeOutput) -> Result<(), Failure> {
    let p = &o.patch;
    println!("recipe {}", o.meta.recipe);
    println!("tiles {}", p.len());
    for kind in TileKind::ALL {
        let n = p.count(kind);
        if n > 0 {
            println!("  {kind} {n}");
        }
    }
    println!("area {}", p.area());
    println!("conflicts {}", o.meta.conflicts);
    println!("skipped {}", o.meta.skipped);
    if let Some(s) = &o.tessellation {
        println!(
            "translates {} added, {} skipped of {}",
            s.translates_added, s.translates_skipped, s.translates_considered
        );
        println!("coverage {:.4}", s.coverage());
    }
    if let Some(path) = &out.svg {
        let svg = render_svg(p, &StyleConfig::with_scale(out.scale)).map_err(Failure::from)?;
        write(path, &svg)?;
    }
    if let Some(path) = &out.json {
        write(path, &to_string(&export_json(p, MetaDocument::from(&o.meta))))?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let out = &cli.out;
    if out.scale.is_nan() || out.scale <= 0.0 {
        return Err(Failure::Usage("--scale must be positive".into()));
    }
    match cli.command {
        Command::Verify => {
            let report = run_verify();
            print!("{report}");
            Ok(report.exit_code() as u8)
        }
        Command::Cell { lattice, summary } => {
            let s = match lattice {
                LatticeArg::Root => root_cell_summary(),
                LatticeArg::Weight => cell_summary(),
            };
            println!("N0 {}  N1 {}  N2 {}  N3 {}  euler {}", s.n0, s.n1, s.n2, s.n3, s.euler());
            if summary {
                for (name, n) in &s.faces_by_kind {
                    println!("face {name} {n}");
                }
                for (name, n) in &s.facets_by_kind {
                    println!("facet {name} {n}");
                }
            }
            if let Some(path) = &out.json {
                let text = serde_json::to_string_pretty(&s).map_err(|e| Failure::Runtime(e.to_string()))?;
                write(path, &(text + "\n"))?;
            }
            if out.svg.is_some() {
                return Err(Failure::Usage("cell has no SVG output; use decagon".into()));
            }
            Ok(0)
        }
        Command::Decagon { lattice } => {
            let fig = match lattice {
                LatticeArg::Root => Figure::Fig4,
                LatticeArg::Weight => Figure::Fig8,
            };
            emit_patch(out, &recipes::run(fig)?)?;
            Ok(0)
        }
        Command::Tile {
            recipe,
            center,
            radius,
            rounds,
        } => {
            let o = match (recipe, center) {
                (Some(fig), _) => recipes::run(fig)?,
                (None, Some(c)) => {
                    if radius.is_nan() || radius <= 0.0 {
                        return Err(Failure::Usage("--radius must be positive".into()));
                    }
                    recipes::custom(recipes::parse_center(&c)?, radius, rounds)?
                }
                (None, None) => return Err(Failure::Usage("need --recipe or --center".into())),
            };
            emit_patch(out, &o)?;
            Ok(0)
        }
        Command::Matrices { element } => {
            let e = named::by_name(&element).expect("validated by parser");
            let (plane, full) = matrix_export(&e);
            println!("{element} = {e}");
            match &plane {
                Some(m) => println!("plane 3x3:\n{m}"),
                None => println!("plane 3x3: not plane-compatible"),
            }
            println!("full 5x5:\n{full}");
            if let Some(path) = &out.json {
                let doc = serde_json::json!({
                    "element": element,
                    "plane": plane.map(|m| m.0),
                    "full": full.0,
                });
                write(path, &(serde_json::to_string_pretty(&doc).expect("json") + "\n"))?;
            }
            if out.svg.is_some() {
                return Err(Failure::Usage("matrices has no SVG output".into()));
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
