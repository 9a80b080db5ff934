use clap::{Parser, Subcommand};
use geo4::geography::Bounds;
use geo4_cli::commands::{self, ConvertArgs};
use geo4_cli::config::CliConfig;
use geo4_cli::exit_codes;
use std::path::PathBuf;

/// Deterministic workbench for the order-two geography plane: coordinate
/// conversions, construction planning, coverage scans, and verification of
/// the word/group certificates behind every shipped recipe.
#[derive(Parser)]
#[command(name = "geo4", version, about)]
struct Cli {
    /// Optional key=value configuration file (keys: coset_cap, fixtures_dir)
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rebuild the full coordinate row from one coordinate pair
    Convert {
        #[arg(long)]
        e: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        sigma: Option<i64>,
        #[arg(long)]
        b2plus: Option<i64>,
        #[arg(long)]
        b2minus: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        c1sq: Option<i64>,
        /// Holomorphic Euler characteristic, integer or p/q
        #[arg(long, allow_hyphen_values = true)]
        chih: Option<String>,
        /// First Betti number (default 0)
        #[arg(long, default_value_t = 0)]
        b1: i64,
        #[arg(long)]
        json: bool,
    },
    /// Plan a construction for the lattice point (m, n) = (b₂⁺, b₂⁻)
    Plan {
        m: i64,
        n: i64,
        /// Write the recipe document to a file
        #[arg(long)]
        emit_recipe: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Scan a rectangle of lattice points and report coverage
    Scan {
        m_min: i64,
        m_max: i64,
        /// Defaults to the m-range when omitted
        n_min: Option<i64>,
        n_max: Option<i64>,
        /// Write the point table as CSV
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Write the scatter figure as SVG
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Run the named verification suite (relations, words, groups, recipes, all)
    Verify {
        #[arg(default_value = "all")]
        suite: String,
    },
    /// Parse a recipe document, reprint it canonically, optionally validate
    Recipe {
        file: PathBuf,
        #[arg(long)]
        validate: bool,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate a twist-word literal in the symplectic representation
    Word {
        /// Fiber genus of the standard surface model
        #[arg(long, short)]
        genus: usize,
        expr: String,
        /// Also report the image of this curve's homology class
        #[arg(long)]
        image: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Abelianization and coset certificate for a presentation literal
    Group {
        expr: String,
        /// Subgroup generator words (repeatable)
        #[arg(long)]
        subgroup: Vec<String>,
        /// Coset cap override
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long)]
        json: bool,
    },
}

fn main() {
    let cli = Cli::parse();
    let mut out = std::io::stdout();
    let mut err = std::io::stderr();
    let config = match &cli.config {
        Some(path) => match std::fs::read_to_string(path).map_err(|e| e.to_string()).and_then(|t| CliConfig::parse(&t)) {
            Ok(c) => c,
            Err(e) => {
                eprintln!("error: config {}: {e}", path.display());
                std::process::exit(exit_codes::DOMAIN);
            }
        },
        None => CliConfig::default(),
    };
    let code = match cli.command {
        Command::Convert { e, sigma, b2plus, b2minus, c1sq, chih, b1, json } => commands::cmd_convert(
            &ConvertArgs { e, sigma, b2plus, b2minus, c1sq, chih, b1, json },
            &mut out,
            &mut err,
        ),
        Command::Plan { m, n, emit_recipe, json } => {
            commands::cmd_plan(m, n, emit_recipe.as_deref(), json, &mut out, &mut err)
        }
        Command::Scan { m_min, m_max, n_min, n_max, csv, svg, json } => {
            let bounds = Bounds {
                m_min,
                m_max,
                n_min: n_min.unwrap_or(m_min),
                n_max: n_max.unwrap_or(m_max),
            };
            commands::cmd_scan(bounds, csv.as_deref(), svg.as_deref(), json, &mut out, &mut err)
        }
        Command::Verify { suite } => commands::cmd_verify(&suite, &config, &mut out, &mut err),
        Command::Recipe { file, validate, json } => {
            commands::cmd_recipe(&file, validate, json, &mut out, &mut err)
        }
        Command::Word { genus, expr, image, json } => {
            commands::cmd_word(genus, &expr, image.as_deref(), json, &mut out, &mut err)
        }
        Command::Group { expr, subgroup, cap, json } => {
            commands::cmd_group(&expr, &subgroup, cap.unwrap_or(config.coset_cap), json, &mut out, &mut err)
        }
    };
    std::process::exit(code);
}
