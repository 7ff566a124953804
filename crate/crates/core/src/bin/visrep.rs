use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use visrep::drawers::{compact_levels, draw, Mode, VisibilityRepresentation};
use visrep::graph::{Embedding, EmbeddingFile};
use visrep::io::{from_json, generate_with, named_instance, render_svg, to_json, GenOptions, InstanceKind};
use visrep::normal_form::normalize;
use visrep::orderings::{extended_leftish_ordering, rhomboidal_st_numbering, skeleton_st_number};
use visrep::verifier::{check_area, verify};

#[derive(Parser)]
#[command(name = "visrep", version, about = "Visibility representations of planar, IC-planar and 1-planar embeddings")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Normal form: augmentation, rerouted B-configurations and separation-pair copies.
    Augment {
        input: PathBuf,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Vertex ordering of the planar skeleton.
    Order {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "leftish")]
        kind: OrderKind,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Draws a representation.
    Draw {
        input: PathBuf,
        #[arg(long, default_value = "t")]
        mode: String,
        /// Re-level bars by longest paths.
        #[arg(long)]
        compact: bool,
        /// Mirror top to bottom, turning ⊥-shapes into T-shapes.
        #[arg(long)]
        flip: bool,
        #[arg(short)]
        o: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Certifies a representation against a graph; prints one JSON line per violation.
    Verify {
        rep: PathBuf,
        graph: PathBuf,
        /// Also fail if the drawing exceeds the area bound of its mode.
        #[arg(long)]
        strict_area: bool,
    },
    /// Writes a random or built-in instance.
    Gen {
        #[arg(long, default_value_t = 20)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "one_planar")]
        kind: String,
        #[arg(long)]
        kites: Option<usize>,
        #[arg(long)]
        gadgets: Option<usize>,
        /// A built-in instance such as xw6 or dxw instead of a random one.
        #[arg(long)]
        named: Option<String>,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Renders a representation as SVG.
    Render {
        rep: PathBuf,
        #[arg(short)]
        o: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderKind {
    Leftish,
    St,
    Rhomboidal,
}

enum Fail {
    Usage(String),
    Validation(String),
    Verification,
}

impl From<visrep::Error> for Fail {
    fn from(e: visrep::Error) -> Self {
        Fail::Validation(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if e.use_stderr() => {
            let _ = e.print();
            return ExitCode::from(3);
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
    };
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
        Err(Fail::Validation(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Fail::Verification) => ExitCode::from(2),
    }
}

fn read(path: &Path) -> Result<String, Fail> {
    std::fs::read_to_string(path).map_err(|e| Fail::Usage(format!("{}: {e}", path.display())))
}

fn write(path: Option<&Path>, text: &str) -> Result<(), Fail> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Fail::Usage(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load(path: &Path) -> Result<Embedding, Fail> {
    let file: EmbeddingFile = from_json(&read(path)?)?;
    Ok(file.build()?)
}

fn run(cmd: Cmd) -> Result<(), Fail> {
    match cmd {
        Cmd::Augment { input, o } => {
            let aug = normalize(&load(&input)?);
            let out = json!({
                "n": aug.n(),
                "edges": aug.edges(),
                "crossings": aug.crossing_classes(),
                "reroutes": aug.reroutes(),
            });
            write(o.as_deref(), &to_json(&out)?)
        }
        Cmd::Order { input, kind, o } => {
            let aug = normalize(&load(&input)?);
            let (ordering, st_edge) = match kind {
                OrderKind::Leftish => {
                    let x = extended_leftish_ordering(&aug)?;
                    (x.ordering, x.st_edge)
                }
                OrderKind::St => {
                    let x = skeleton_st_number(&aug)?;
                    (x.ordering, x.st_edge)
                }
                OrderKind::Rhomboidal => {
                    let x = rhomboidal_st_numbering(&aug)?;
                    (x.ordering, x.st_edge)
                }
            };
            let out = json!({ "ordering": ordering, "st_edge": st_edge });
            write(o.as_deref(), &to_json(&out)?)
        }
        Cmd::Draw { input, mode, compact, flip, o, svg } => {
            let mode: Mode = mode.parse().map_err(|e: visrep::Error| Fail::Usage(e.to_string()))?;
            let emb = load(&input)?;
            let mut rep = draw(&emb, mode)?;
            if compact {
                rep = compact_levels(&rep, emb.graph().edges())?;
            }
            if flip {
                rep = rep.flip();
            }
            if let Some(p) = svg {
                write(Some(&p), &render_svg(&rep))?;
            }
            write(o.as_deref(), &to_json(&rep)?)
        }
        Cmd::Verify { rep, graph, strict_area } => {
            let r: VisibilityRepresentation = from_json(&read(&rep)?)?;
            let emb = load(&graph)?;
            if r.n() != emb.n() {
                return Err(Fail::Validation(format!("{} polygons for {} vertices", r.n(), emb.n())));
            }
            let report = verify(&r, emb.graph().edges());
            for v in &report.violations {
                println!("{}", serde_json::to_string(v).expect("violations serialize"));
            }
            let area_ok = !strict_area || check_area(&r, emb.n(), r.mode);
            if !area_ok {
                println!("{}", json!({ "kind": "area", "bounds": r.bounds }));
            }
            if report.ok() && area_ok {
                Ok(())
            } else {
                Err(Fail::Verification)
            }
        }
        Cmd::Gen { n, seed, kind, kites, gadgets, named, o } => {
            let file = match named {
                Some(name) => named_instance(&name).map_err(|e| Fail::Usage(e.to_string()))?,
                None => {
                    let kind: InstanceKind = kind.parse().map_err(|e: visrep::Error| Fail::Usage(e.to_string()))?;
                    generate_with(n, seed, kind, GenOptions { kites, gadgets })?
                }
            };
            write(o.as_deref(), &to_json(&file)?)
        }
        Cmd::Render { rep, o } => {
            let r: VisibilityRepresentation = from_json(&read(&rep)?)?;
            write(o.as_deref(), &render_svg(&r))
        }
    }
}
