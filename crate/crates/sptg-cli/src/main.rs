//! `sptg`: generate, solve, query and draw simple priced timed games.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sptg::formula::{Formula, Qbf};
use sptg::io::{
    parse_game_or_reduction, render_diagram, serialize_game, serialize_reduction, RenderOptions,
    ReductionDocument, ValueDocument,
};
use sptg::reduce::{
    compile_conp, compile_np, compile_qbf, family_closed_form, gen_exp_family, rescale_integer, solve_any,
    to_degree3, OuterMode,
};
use sptg::{
    event_point_iteration, solve_undirected, value_iteration, value_iteration_fixpoint, ExtendedValue, Game,
    Rational, StateId, ValueMap,
};

type Failure = Box<dyn std::error::Error>;

#[derive(Parser)]
#[command(name = "sptg", version, about = "Exact solvers and hardness gadgets for simple priced timed games")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a game (or a compiled reduction) as JSON.
    Generate {
        #[command(subcommand)]
        what: Generate,
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Compute every value function.
    Solve {
        game: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print val(state, time).
    Value {
        game: PathBuf,
        #[command(flatten)]
        at: Point,
        /// Also print a decimal approximation.
        #[arg(long)]
        decimal: bool,
    },
    /// Is val(state, time) >= threshold? Exit code 0 for yes, 1 for no.
    Decide {
        game: PathBuf,
        #[command(flatten)]
        at: Point,
        /// Defaults to the midpoint of a reduction document's expected values.
        #[arg(long)]
        threshold: Option<Rational>,
    },
    /// Draw value functions as SVG, from a value document or a game.
    Render {
        input: PathBuf,
        /// Plot v + rho*t.
        #[arg(long, default_value = "0")]
        relative: Rational,
        /// Comma-separated state ids; default all.
        #[arg(long, value_delimiter = ',')]
        states: Vec<String>,
        #[arg(long, default_value_t = 12)]
        precision: usize,
        #[arg(long, default_value_t = 640)]
        width: u32,
        #[arg(long, default_value_t = 200)]
        panel_height: u32,
        /// Horizon of a CSV value document.
        #[arg(long, default_value = "1")]
        horizon: Rational,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Sizes and event-point counts.
    Stats { game: PathBuf },
    /// Cross-check value iteration against event-point iteration (and the
    /// closed form for the exponential family). Exit code 0 iff all agree.
    Verify {
        game: PathBuf,
        /// Compare against the closed form of family `i`.
        #[arg(long)]
        family: Option<usize>,
    },
}

#[derive(Subcommand)]
enum Generate {
    /// The family whose values have 2^i pieces.
    ExpFamily { i: usize },
    /// Satisfiability instance: value 2 + 2^{-n-2} iff satisfiable, else 2.
    Np(FormulaInput),
    /// Validity instance: value 2 iff valid, else 2 - 2^{-n-2}.
    Conp(FormulaInput),
    /// Quantified instance, e.g. "(forall (x1) (exists (x2) (or x1 x2)))".
    Tqbf {
        qbf: String,
        #[arg(long, value_enum, default_value_t = Outer::Horizontal)]
        outer: Outer,
    },
    /// Change the time unit to 2^-i so that costs become integers.
    Rescale { game: PathBuf, i: u32 },
    /// Give every state total degree at most 3.
    Degree3 { game: PathBuf },
}

#[derive(Args)]
struct FormulaInput {
    /// S-expression such as "(and x1 (or (not x2) x3))".
    formula: Option<String>,
    /// Read a DIMACS CNF file instead.
    #[arg(long, conflicts_with = "formula")]
    dimacs: Option<PathBuf>,
    /// Number of variables; default the largest index used.
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Args)]
struct Point {
    /// Defaults to the query state of a reduction document.
    #[arg(long)]
    state: Option<String>,
    #[arg(long, default_value = "0")]
    time: Rational,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    /// Value iteration for urgent games, event-point iteration otherwise.
    Auto,
    Epi,
    /// Value iteration to a fixpoint.
    Vi,
    Undirected,
}

#[derive(Clone, Copy, ValueEnum)]
enum Outer {
    Horizontal,
    Decaying,
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()).into())
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), Failure> {
    match output {
        Some(p) => fs::write(p, text).map_err(|e| format!("{}: {e}", p.display()).into()),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn load(path: &Path) -> Result<(Game, Option<ReductionDocument>), Failure> {
    Ok(parse_game_or_reduction(&read(path)?)?)
}

fn state_of(game: &Game, meta: &Option<ReductionDocument>, id: &Option<String>) -> Result<StateId, Failure> {
    match (id, meta) {
        (Some(id), _) => Ok(game.lookup(id)?),
        (None, Some(m)) => Ok(m.query),
        (None, None) => Err("--state is required for a plain game".into()),
    }
}

fn solve(game: &Game, method: Method) -> Result<ValueMap, Failure> {
    Ok(match method {
        Method::Auto => solve_any(game)?,
        Method::Epi => event_point_iteration(game)?,
        Method::Vi => value_iteration_fixpoint(game, game.len() + 2)?.0,
        Method::Undirected => solve_undirected(game)?,
    })
}

fn formula(input: &FormulaInput) -> Result<(Formula, usize), Failure> {
    let (f, declared) = match (&input.formula, &input.dimacs) {
        (Some(text), None) => {
            let f = Formula::parse(text)?;
            let n = f.max_var();
            (f, n)
        }
        (None, Some(path)) => Formula::from_dimacs(&read(path)?)?,
        _ => return Err("give a formula or --dimacs".into()),
    };
    Ok((f, input.n.unwrap_or(declared)))
}

fn generate(what: &Generate) -> Result<String, Failure> {
    Ok(match what {
        Generate::ExpFamily { i } => serialize_game(&gen_exp_family(*i)),
        Generate::Np(input) => {
            let (f, n) = formula(input)?;
            serialize_reduction(&compile_np(&f, n)?)
        }
        Generate::Conp(input) => {
            let (f, n) = formula(input)?;
            serialize_reduction(&compile_conp(&f, n)?)
        }
        Generate::Tqbf { qbf, outer } => {
            let mode = match outer {
                Outer::Horizontal => OuterMode::Horizontal,
                Outer::Decaying => OuterMode::Decaying,
            };
            serialize_reduction(&compile_qbf(&Qbf::parse(qbf)?, mode)?)
        }
        Generate::Rescale { game, i } => serialize_game(&rescale_integer(&load(game)?.0, *i)?),
        Generate::Degree3 { game } => serialize_game(&to_degree3(&load(game)?.0)?),
    })
}

fn show(v: &ExtendedValue, decimal: bool) -> String {
    match (v, decimal) {
        (ExtendedValue::Finite(r), true) => format!("{r} ({})", r.to_decimal(12)),
        _ => v.to_string(),
    }
}

fn value_document(path: &Path, horizon: &Rational) -> Result<ValueDocument, Failure> {
    let text = read(path)?;
    if path.extension().is_some_and(|e| e == "csv") {
        return Ok(ValueDocument::from_csv(&text, horizon.clone())?);
    }
    if let Ok(doc) = ValueDocument::from_json(&text) {
        return Ok(doc);
    }
    let (game, _) = parse_game_or_reduction(&text)?;
    Ok(ValueDocument::new(&game, &solve_any(&game)?))
}

fn stats(game: &Game) -> Result<String, Failure> {
    let vm = solve_any(game)?;
    let mut out = format!(
        "states {}\nedges {}\nacyclic {}\nurgent {}\nevent_points {}\ninfinite {}\n",
        game.len(),
        game.edges().len(),
        game.is_acyclic(),
        game.states().iter().filter(|s| s.urgent).count(),
        vm.event_points().len(),
        vm.infinite_states().len(),
    );
    out.push_str("segments\n");
    for s in game.state_ids() {
        let f = vm.get(s);
        let n = if f.is_infinite() { "inf".to_string() } else { f.segment_count().to_string() };
        out.push_str(&format!("  {} {n}\n", game.id(s)));
    }
    Ok(out)
}

/// Returns the report and whether every check passed.
fn verify(game: &Game, family: Option<usize>) -> Result<(String, bool), Failure> {
    let mut report = String::new();
    let mut ok = true;
    let reference = solve_any(game)?;
    let vi = if game.is_acyclic() {
        Some(value_iteration(game, game.longest_path_length()?)?)
    } else {
        value_iteration_fixpoint(game, 4 * game.len() + 4).ok().map(|(vm, _)| vm)
    };
    match vi {
        Some(vi) if !game.has_urgent() => {
            let agree = vi == reference;
            ok &= agree;
            report.push_str(&format!("value iteration vs event-point iteration: {}\n", verdict(agree)));
        }
        Some(_) => report.push_str("urgent states: value iteration is the reference\n"),
        None => report.push_str("value iteration did not reach a fixpoint; skipped\n"),
    }
    if let Some(i) = family {
        let closed = family_closed_form(i);
        let agree = gen_exp_family(i) == *game && closed == reference;
        ok &= agree;
        report.push_str(&format!("closed form of family {i}: {}\n", verdict(agree)));
    }
    Ok((report, ok))
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "agree"
    } else {
        "DIFFER"
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Generate { what, output } => emit(&generate(&what)?, output.as_deref())?,
        Command::Solve { game, format, method, output } => {
            let (game, _) = load(&game)?;
            let doc = ValueDocument::new(&game, &solve(&game, method)?);
            let text = match format {
                Format::Json => doc.to_json(),
                Format::Csv => doc.to_csv(),
            };
            emit(&text, output.as_deref())?;
        }
        Command::Value { game, at, decimal } => {
            let (game, meta) = load(&game)?;
            let s = state_of(&game, &meta, &at.state)?;
            let v = solve_any(&game)?.value(s, &at.time)?;
            println!("{}", show(&v, decimal));
        }
        Command::Decide { game, at, threshold } => {
            let (game, meta) = load(&game)?;
            let s = state_of(&game, &meta, &at.state)?;
            let c = match (threshold, &meta) {
                (Some(c), _) => c,
                (None, Some(m)) => m.midpoint(),
                (None, None) => return Err("--threshold is required for a plain game".into()),
            };
            let v = solve_any(&game)?.value(s, &at.time)?;
            let yes = v >= ExtendedValue::Finite(c.clone());
            println!("{yes}");
            return Ok(if yes { ExitCode::SUCCESS } else { ExitCode::FAILURE });
        }
        Command::Render { input, relative, states, precision, width, panel_height, horizon, output } => {
            let doc = value_document(&input, &horizon)?;
            let opts = RenderOptions { states, rho: relative, width, panel_height, precision };
            emit(&render_diagram(&doc, &opts)?, output.as_deref())?;
        }
        Command::Stats { game } => print!("{}", stats(&load(&game)?.0)?),
        Command::Verify { game, family } => {
            let (report, ok) = verify(&load(&game)?.0, family)?;
            print!("{report}");
            return Ok(if ok { ExitCode::SUCCESS } else { ExitCode::FAILURE });
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("sptg: {e}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use sptg::io::parse_game;

    #[test]
    fn parse_game_reads_generated_families() {
        let text = generate(&Generate::ExpFamily { i: 2 }).unwrap();
        assert_eq!(parse_game(&text).unwrap(), gen_exp_family(2));
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
