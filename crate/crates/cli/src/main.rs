//! Command-line interface for the multigame engine.
//!
//! Exit codes: 0 on success, 1 on validation or contract errors (the message
//! names the violated invariant), 2 on I/O or parse errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use multigame_core::double::{mixed_interpolate, region_svg};
use multigame_core::json as formats;
use multigame_core::mixed::mixed_nash_2x2;
use multigame_core::regularity::{
    coherent_pairs, completely_pure_regular, is_pure_regular, threshold, verify_bayes_ne,
    TypePrior,
};
use multigame_core::tournament::{
    builtin_factory, match_trace_csv, ranking_csv, run_tournament, InfoMode, StrategyFactory,
    TournamentConfig,
};
use multigame_core::{
    DoubleGame, Error as CoreError, ExampleVariant, PureProfile, Rational, SocialParams, TypeGrid,
};

#[derive(Parser)]
#[command(name = "multigame", version, about = "Weighted game composition: equilibria, regularity, tournaments")]
struct Cli {
    /// Print the JSON schemas of the file formats and exit
    #[arg(long)]
    schema: bool,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GridChoice {
    I,
    II,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeChoice {
    Complete,
    Incomplete,
}

#[derive(clap::Args, Clone, Debug)]
struct ParamArgs {
    /// Temptation payoff T
    #[arg(long = "T", default_value = "5")]
    t: String,
    /// Reward payoff R
    #[arg(long = "R", default_value = "3")]
    r: String,
    /// Punishment payoff P
    #[arg(long = "P", default_value = "1")]
    p: String,
    /// Sucker payoff S
    #[arg(long = "S", default_value = "0")]
    s: String,
    /// Social reward for player 1
    #[arg(long = "M1", default_value = "2.5")]
    m1: String,
    /// Social reward for player 2
    #[arg(long = "M2", default_value = "2.5")]
    m2: String,
    /// Social punishment for player 1 (defaults to S)
    #[arg(long = "M1p")]
    m1p: Option<String>,
    /// Social punishment for player 2 (defaults to S)
    #[arg(long = "M2p")]
    m2p: Option<String>,
    /// Drop the M'_i = S requirement (the other chains still hold)
    #[arg(long)]
    relax_mprime: bool,
}

impl ParamArgs {
    fn build(&self) -> Result<SocialParams, CliError> {
        let parse = |name: &str, s: &str| -> Result<Rational, CliError> {
            s.parse::<Rational>()
                .map_err(|e| CliError::Parse(format!("--{name}: {e}")))
        };
        let s = parse("S", &self.s)?;
        let m1p = match &self.m1p {
            Some(v) => parse("M1p", v)?,
            None => s.clone(),
        };
        let m2p = match &self.m2p {
            Some(v) => parse("M2p", v)?,
            None => s.clone(),
        };
        let build = if self.relax_mprime { SocialParams::new_relaxed } else { SocialParams::new };
        build(
            parse("T", &self.t)?,
            parse("R", &self.r)?,
            parse("P", &self.p)?,
            s,
            parse("M1", &self.m1)?,
            parse("M2", &self.m2)?,
            m1p,
            m2p,
        )
        .map_err(CliError::from)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Pure Nash equilibria of a game file
    Ne {
        /// Game JSON file
        #[arg(long)]
        game: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        timestamps: bool,
    },
    /// All Nash equilibria of a 2x2 game, by support enumeration
    Mixed {
        #[arg(long)]
        game: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        timestamps: bool,
    },
    /// Equilibrium regions of a double game over the weight square
    Regions {
        /// Double-game JSON file ({"g1": ..., "g2": ...})
        #[arg(long)]
        dg: PathBuf,
        /// Also write an SVG plot of the unit square
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        timestamps: bool,
    },
    /// Regularity analysis: coherent pairs, thresholds, certificates
    Regularity {
        #[arg(long)]
        dg: PathBuf,
        /// Type-grid JSON file ({"lambda": [...], "gamma": [...]})
        #[arg(long)]
        grid: PathBuf,
        /// Print the full NE table as CSV (rows gamma descending) instead of JSON
        #[arg(long)]
        table: bool,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        timestamps: bool,
    },
    /// Check a per-type action assignment against a prior
    BayesVerify {
        #[arg(long)]
        dg: PathBuf,
        #[arg(long)]
        grid: PathBuf,
        /// Assignment such as "DDCC,DDCC" (or "D,D,C,C;D,D,C,C")
        #[arg(long)]
        profile: String,
        /// "uniform" or a prior JSON file
        #[arg(long, default_value = "uniform")]
        prior: String,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        timestamps: bool,
    },
    /// Build and validate the PD + social game double game
    SocialDg {
        #[command(flatten)]
        params: ParamArgs,
        /// Include an example type grid in the output
        #[arg(long)]
        grid: Option<GridChoice>,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        timestamps: bool,
    },
    /// Interpolate the opponent mixture of a coherent pair of mixed equilibria
    Interpolate {
        /// Player 1's first-action probability
        #[arg(long)]
        p: String,
        /// Opponent first-action probability at its extreme type 0
        #[arg(long)]
        p0: String,
        /// Opponent first-action probability at its extreme type 1
        #[arg(long)]
        p1: String,
        #[arg(long)]
        gamma: String,
        /// Opponent payoffs of the game at opponent weight 0: "CC,CD,DC,DD"
        #[arg(long)]
        g1_entries: String,
        /// Opponent payoffs of the game at opponent weight 1: "CC,CD,DC,DD"
        #[arg(long)]
        g2_entries: String,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        timestamps: bool,
    },
    /// Round-robin tournament of the repeated double game
    Tournament {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 200)]
        rounds: u32,
        #[arg(long, value_enum, default_value_t = ModeChoice::Complete)]
        mode: ModeChoice,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Comma-separated strategy names (SEG, ALLC, ALLD, TFT)
        #[arg(long, default_value = "SEG,ALLC,ALLD,TFT")]
        strategies: String,
        /// Type grid: the 4-type example (i), the 5-type example (ii), or a JSON file
        #[arg(long, default_value = "ii")]
        grid: String,
        /// Output format for the report
        #[arg(long, value_enum, default_value_t = OutFormat::Json)]
        out: OutFormat,
        /// Directory for per-match round traces (one CSV per match)
        #[arg(long)]
        traces: Option<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        timestamps: bool,
    },
}

enum CliError {
    Validation(String),
    Parse(String),
    Io(String),
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::Parse(_) => CliError::Parse(e.to_string()),
            other => CliError::Validation(other.to_string()),
        }
    }
}

impl CliError {
    fn report(&self) -> (u8, &str) {
        match self {
            CliError::Validation(m) => (1, m),
            CliError::Parse(m) | CliError::Io(m) => (2, m),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.schema {
        print!("{}", formats::to_pretty_string(&schema_value()));
        return ExitCode::SUCCESS;
    }
    let Some(command) = cli.command else {
        eprintln!("error: a subcommand is required (see --help)");
        return ExitCode::from(2);
    };
    match run(command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let (code, message) = e.report();
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn read_json(path: &Path) -> Result<Value, CliError> {
    Ok(formats::from_str(&read_file(path)?)?)
}

/// Double-game files may be bare {"g1","g2"} objects or the output of
/// `social-dg`, which nests the pair under "dg".
fn read_dg(path: &Path) -> Result<DoubleGame, CliError> {
    let value = read_json(path)?;
    let inner = value.get("dg").unwrap_or(&value);
    Ok(formats::dg_from_value(inner)?)
}

fn write_output(path: &Option<PathBuf>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => {
            fs::write(p, text).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn stamped(mut value: Value, timestamps: bool) -> Value {
    if timestamps {
        let secs = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        if let Some(obj) = value.as_object_mut() {
            obj.insert("generated_at".into(), json!(secs));
        }
    }
    value
}

fn parse_rational(name: &str, s: &str) -> Result<Rational, CliError> {
    s.parse::<Rational>().map_err(|e| CliError::Parse(format!("--{name}: {e}")))
}

fn parse_entries(name: &str, s: &str) -> Result<[Rational; 4], CliError> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 4 {
        return Err(CliError::Parse(format!("--{name} needs four comma-separated values")));
    }
    let mut out = Vec::new();
    for part in parts {
        out.push(parse_rational(name, part.trim())?);
    }
    Ok([out[0].clone(), out[1].clone(), out[2].clone(), out[3].clone()])
}

/// Compact comma-free profile label for CSV cells: "DD", "DC", ...
fn compact_label(dg: &DoubleGame, profile: &PureProfile) -> String {
    profile
        .0
        .iter()
        .enumerate()
        .map(|(p, &a)| dg.action_labels(p)[a].clone())
        .collect::<Vec<_>>()
        .join("")
}

fn ne_table_csv(dg: &DoubleGame, grid: &TypeGrid) -> String {
    let mut out = String::from("gamma\\lambda");
    for l in grid.lambda() {
        out.push_str(&format!(",{l}"));
    }
    out.push('\n');
    for g in grid.gamma().iter().rev() {
        out.push_str(&g.to_string());
        for l in grid.lambda() {
            let cell: Vec<String> = dg
                .local_ne(l, g)
                .expect("grid weights are valid")
                .iter()
                .map(|p| compact_label(dg, p))
                .collect();
            out.push_str(&format!(",{}", cell.join("|")));
        }
        out.push('\n');
    }
    out
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Ne { game, output, timestamps } => {
            let game = formats::game_from_value(&read_json(&game)?)?;
            let value = formats::pure_nash_to_value(&game, &game.pure_nash());
            write_output(&output, &formats::to_pretty_string(&stamped(value, timestamps)))
        }
        Command::Mixed { game, output, timestamps } => {
            let game = formats::game_from_value(&read_json(&game)?)?;
            let outcome = mixed_nash_2x2(&game)?;
            let value = serde_json::to_value(&outcome).expect("serializable");
            write_output(&output, &formats::to_pretty_string(&stamped(value, timestamps)))
        }
        Command::Regions { dg, svg, output, timestamps } => {
            let dg = read_dg(&dg)?;
            let diagram = dg.region_diagram();
            if let Some(svg_path) = &svg {
                let rendered = region_svg(&dg, &diagram);
                fs::write(svg_path, rendered)
                    .map_err(|e| CliError::Io(format!("{}: {e}", svg_path.display())))?;
            }
            let value = serde_json::to_value(diagram.report(&dg)).expect("serializable");
            write_output(&output, &formats::to_pretty_string(&stamped(value, timestamps)))
        }
        Command::Regularity { dg, grid, table, output, timestamps } => {
            let dg = read_dg(&dg)?;
            let grid = formats::grid_from_value(&read_json(&grid)?)?;
            if table {
                return write_output(&output, &ne_table_csv(&dg, &grid));
            }
            let quadruples = is_pure_regular(&dg);
            let outcome = completely_pure_regular(&dg, &grid);
            let mut pairs = Vec::new();
            for player in 0..2 {
                for type_index in 0..grid.ladder(player).len() {
                    for pair in coherent_pairs(&dg, &grid, player, type_index)? {
                        let p = threshold(&dg, &grid, &pair)?;
                        pairs.push(json!({
                            "player": pair.player + 1,
                            "type_index": pair.type_index + 1,
                            "type": grid.ladder(player)[pair.type_index].to_string(),
                            "own": dg.action_labels(player)[pair.own],
                            "opp_at_zero": dg.action_labels(1 - player)[pair.opp_at_zero],
                            "opp_at_one": dg.action_labels(1 - player)[pair.opp_at_one],
                            "threshold": p,
                        }));
                    }
                }
            }
            let value = json!({
                "pure_regular": !quadruples.is_empty(),
                "quadruples": quadruples.iter().map(|q| json!({
                    "s": dg.action_labels(0)[q.s],
                    "t": dg.action_labels(0)[q.t],
                    "u": dg.action_labels(1)[q.u],
                    "v": dg.action_labels(1)[q.v],
                })).collect::<Vec<_>>(),
                "verdict": if outcome.is_regular() {
                    "completely pure regular"
                } else {
                    "not completely pure regular"
                },
                "certificate": outcome.certificate.as_ref().map(|c| c.label(&dg)),
                "certificates": outcome
                    .all_certificates()
                    .iter()
                    .map(|c| c.label(&dg))
                    .collect::<Vec<_>>(),
                "coherent_pairs": pairs,
                "ne_condition_evals": outcome.stats.ne_condition_evals,
            });
            write_output(&output, &formats::to_pretty_string(&stamped(value, timestamps)))
        }
        Command::BayesVerify { dg, grid, profile, prior, output, timestamps } => {
            let dg = read_dg(&dg)?;
            let grid = formats::grid_from_value(&read_json(&grid)?)?;
            let profile = formats::parse_bayes_profile(&dg, &profile)?;
            let prior = if prior == "uniform" {
                TypePrior::uniform(grid.k(), grid.l())
            } else {
                formats::prior_from_value(&read_json(Path::new(&prior))?)?
            };
            let verdict = verify_bayes_ne(&dg, &grid, &profile, &prior)?;
            let mut value = serde_json::to_value(&verdict).expect("serializable");
            if let Some(obj) = value.as_object_mut() {
                obj.insert("profile".into(), json!(profile.label(&dg)));
            }
            write_output(&output, &formats::to_pretty_string(&stamped(value, timestamps)))
        }
        Command::SocialDg { params, grid, output, timestamps } => {
            let params = params.build()?;
            let dg = params.build_dg();
            let cp = params.crossing_points();
            let mut value = json!({
                "params": serde_json::to_value(&params).expect("serializable"),
                "case": serde_json::to_value(params.classify_case()).expect("serializable"),
                "crossing_points": serde_json::to_value(&cp).expect("serializable"),
                "dg": formats::dg_to_value(&dg),
            });
            if let Some(choice) = grid {
                let variant = match choice {
                    GridChoice::I => ExampleVariant::I,
                    GridChoice::II => ExampleVariant::II,
                };
                let grid = params.example_grid(variant)?;
                value.as_object_mut().unwrap().insert("grid".into(), formats::grid_to_value(&grid));
            }
            write_output(&output, &formats::to_pretty_string(&stamped(value, timestamps)))
        }
        Command::Interpolate { p, p0, p1, gamma, g1_entries, g2_entries, output, timestamps } => {
            let result = mixed_interpolate(
                &parse_rational("p", &p)?,
                &parse_rational("p0", &p0)?,
                &parse_rational("p1", &p1)?,
                &parse_rational("gamma", &gamma)?,
                &parse_entries("g1-entries", &g1_entries)?,
                &parse_entries("g2-entries", &g2_entries)?,
            )?;
            let value = json!({ "p_gamma": result.to_string() });
            write_output(&output, &formats::to_pretty_string(&stamped(value, timestamps)))
        }
        Command::Tournament {
            params,
            rounds,
            mode,
            seed,
            strategies,
            grid,
            out,
            traces,
            output,
            timestamps,
        } => {
            let params = params.build()?;
            let dg = params.build_dg();
            let grid = match grid.to_lowercase().as_str() {
                "i" => params.example_grid(ExampleVariant::I)?,
                "ii" => params.example_grid(ExampleVariant::II)?,
                path => formats::grid_from_value(&read_json(Path::new(path))?)?,
            };
            let factories: Vec<Box<dyn StrategyFactory>> = strategies
                .split(',')
                .map(|name| builtin_factory(name.trim()).map_err(CliError::from))
                .collect::<Result<_, _>>()?;
            let config = TournamentConfig {
                rounds,
                mode: match mode {
                    ModeChoice::Complete => InfoMode::Complete,
                    ModeChoice::Incomplete => InfoMode::Incomplete,
                },
                seed,
            };
            let result = run_tournament(&factories, &dg, &grid, &config)?;
            if let Some(dir) = &traces {
                fs::create_dir_all(dir)
                    .map_err(|e| CliError::Io(format!("{}: {e}", dir.display())))?;
                for (i, record) in result.matches.iter().enumerate() {
                    let name = format!(
                        "match_{:03}_{}_vs_{}.csv",
                        i, record.strategy1, record.strategy2
                    );
                    let path = dir.join(name);
                    fs::write(&path, match_trace_csv(record))
                        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
                }
            }
            match out {
                OutFormat::Csv => write_output(&output, &ranking_csv(&result)),
                OutFormat::Json => {
                    let value = serde_json::to_value(&result).expect("serializable");
                    write_output(&output, &formats::to_pretty_string(&stamped(value, timestamps)))
                }
            }
        }
    }
}

fn schema_value() -> Value {
    json!({
        "rational": "integers, decimal strings (\"2.5\") or fraction strings (\"4/9\"); all exact",
        "game": {
            "players": "integer N",
            "actions": "array of N arrays of action labels (unique per player, no commas)",
            "payoffs": "object keyed by comma-joined labels in player order; each value is an array of N rationals"
        },
        "double_game": {
            "g1": "game (first basic game)",
            "g2": "game (second basic game; same strategy sets per player)"
        },
        "grid": {
            "lambda": "strictly increasing rationals from 0 to 1 (player 1 types)",
            "gamma": "strictly increasing rationals from 0 to 1 (player 2 types)"
        },
        "prior": {
            "joint": "k x l matrix of non-negative rationals summing to 1",
            "independent": { "p1": "k rationals summing to 1", "p2": "l rationals summing to 1" }
        },
        "bayes_profile": "\"DDCC,DDCC\" (single-char labels) or \"D,D,C,C;D,D,C,C\""
    })
}
