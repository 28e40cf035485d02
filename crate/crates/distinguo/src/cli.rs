//! The `distinguo` command line.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use distinguo_core::coloring::{distinguishing_number, Color};
use distinguo_core::game::{game_distinguishing_number, GameResult, GameState, Move, SolveStats, SolverConfig};
use distinguo_core::graph::parse_family_spec;
use distinguo_core::strategies::{verify_strategy_exhaustive, verify_strategy_random, DEFAULT_LEAF_BUDGET};
use distinguo_core::{automorphism_group, Error, Graph, Player};

use crate::graph6::{parse_graph6, parse_graph6_lines};
use crate::output::{
    moves_doc, schema_tag, AutDoc, DnumDoc, GnumDoc, GnumStatus, GraphDoc, GraphRef, ReplayDoc, ResourceDoc, SolveDoc, Status, VerifyDoc,
    INFINITY, RESOURCE_BOUNDED,
};
use crate::parallel::solve_parallel;
use crate::probe::{probe_candidate, probe_prime, ProbeReport};
use crate::registry::{self, STRATEGIES};
use crate::reproduce::{self, format_row, TABLE};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "distinguo", version, about = "Exact engine for the distinguishing game on small graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Transposition-table entries before the solver gives up.
    #[arg(long, global = true, env = "DISTINGUO_MEMO_BUDGET", default_value_t = SolverConfig::DEFAULT_MEMO_BUDGET)]
    pub memo_budget: usize,

    /// Expanded positions before the solver gives up.
    #[arg(long, global = true, default_value_t = SolverConfig::DEFAULT_NODE_BUDGET)]
    pub node_budget: u64,

    /// Expanded positions times group order before the solver gives up.
    #[arg(long, global = true, default_value_t = SolverConfig::DEFAULT_WORK_BUDGET)]
    pub work_budget: u64,

    /// Solver threads; 1 keeps every run deterministic.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FirstArg {
    Gentle,
    Rascal,
}

impl From<FirstArg> for Player {
    fn from(f: FirstArg) -> Player {
        match f {
            FirstArg::Gentle => Player::Gentle,
            FirstArg::Rascal => Player::Rascal,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exhaustive,
    Random,
}

#[derive(Args, Debug, Clone, Default)]
#[group(multiple = false)]
pub struct GraphArgs {
    /// Standard graph: cycle:N, path:N, complete:N, hypercube:N, disjoint_k2:N or k4k2.
    #[arg(long, value_name = "NAME:PARAM")]
    pub family: Option<String>,
    /// Graph in graph6 format.
    #[arg(long, value_name = "STR")]
    pub graph6: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print a graph as JSON or graph6.
    Gen {
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// Automorphism group: order, generators, orbits.
    Aut {
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// Classical distinguishing number.
    Dnum {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, default_value_t = 8)]
        dmax: Color,
    },
    /// Winner of the game with a fixed number of colors.
    Solve {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        d: Color,
        #[arg(long, value_enum)]
        first: FirstArg,
    },
    /// Game distinguishing number (D_G with --first gentle, D_R with --first rascal).
    Gnum {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum)]
        first: FirstArg,
        #[arg(long, default_value_t = 4)]
        dmax: Color,
    },
    /// Play a named strategy against every or many random adversary lines.
    Verify {
        #[command(flatten)]
        graph: GraphArgs,
        /// Strategy name; see `strategies`.
        #[arg(long)]
        strategy: String,
        #[arg(long, value_enum, default_value_t = Mode::Exhaustive)]
        mode: Mode,
        #[arg(long)]
        d: Option<Color>,
        #[arg(long, value_enum)]
        first: Option<FirstArg>,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Leaves allowed in exhaustive mode.
        #[arg(long, default_value_t = DEFAULT_LEAF_BUDGET)]
        leaf_budget: u64,
    },
    /// List the strategies known to `verify`.
    Strategies,
    /// Recompute the table of published values.
    Reproduce {
        /// Only rows whose instance name equals one of these.
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
    },
    /// Solver runs on conjectured instances, reported as evidence only.
    Probe {
        /// Primes p for C_p with two colors, the Gentle first.
        #[arg(long, value_delimiter = ',')]
        primes: Vec<usize>,
        /// Candidate graphs in graph6 format.
        #[arg(long = "graph6")]
        graph6: Vec<String>,
        /// File of candidate graphs, one graph6 line each.
        #[arg(long)]
        graphs_file: Option<PathBuf>,
        #[arg(long, default_value_t = 3)]
        dmax: Color,
    },
    /// Replay a move list, e.g. a failure history printed by `verify`.
    Replay {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        d: Color,
        #[arg(long, value_enum)]
        first: FirstArg,
        /// Moves as `v:c,v:c,...` or as JSON `[[v,c],...]`.
        #[arg(long, allow_hyphen_values = true)]
        moves: String,
    },
}

/// Failure with its exit status.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::Resource(_) | Error::GroupTooLarge { .. } => EXIT_RESOURCE,
            Error::Internal(_) => EXIT_MISMATCH,
            _ => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure { code: EXIT_MISMATCH, message: e.to_string() }
    }
}

type Outcome = Result<i32, Failure>;

fn load_graph(args: &GraphArgs) -> Result<Graph, Failure> {
    match (&args.family, &args.graph6) {
        (Some(spec), None) => Ok(parse_family_spec(spec)?),
        (None, Some(s)) => parse_graph6(s).map_err(|e| Failure::usage(e.to_string())),
        _ => Err(Failure::usage("exactly one of --family or --graph6 is required")),
    }
}

struct Ctx<'a> {
    format: Format,
    config: SolverConfig,
    threads: usize,
    out: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn json<T: Serialize>(&mut self, doc: &T) -> std::io::Result<()> {
        writeln!(self.out, "{}", serde_json::to_string(doc).expect("documents serialize"))
    }

    fn emit<T: Serialize>(&mut self, doc: &T, text: impl FnOnce() -> String) -> std::io::Result<()> {
        match self.format {
            Format::Json => self.json(doc),
            Format::Text => writeln!(self.out, "{}", text()),
        }
    }
}

fn parse_moves(s: &str) -> Result<Vec<Move>, Failure> {
    let s = s.trim();
    let pairs: Vec<(usize, usize)> = if s.starts_with('[') {
        serde_json::from_str::<Vec<(usize, usize)>>(s).map_err(|e| Failure::usage(format!("bad move list: {e}")))?
    } else if s.is_empty() {
        Vec::new()
    } else {
        s.split(',')
            .map(|m| {
                let (v, c) = m.trim().split_once(':').ok_or_else(|| Failure::usage(format!("bad move {m:?}, expected v:c")))?;
                let v = v.parse().map_err(|_| Failure::usage(format!("bad vertex in {m:?}")))?;
                let c = c.parse().map_err(|_| Failure::usage(format!("bad color in {m:?}")))?;
                Ok((v, c))
            })
            .collect::<Result<_, Failure>>()?
    };
    pairs
        .into_iter()
        .map(|(v, c)| Color::try_from(c).map(|c| Move::new(v, c)).map_err(|_| Failure::usage(format!("color {c} out of range"))))
        .collect()
}

fn solve_cmd(ctx: &mut Ctx, g: &Graph, d: Color, first: Player) -> Outcome {
    let (outcome, stats) = match solve_parallel(g, d, first, &ctx.config, ctx.threads) {
        Ok(s) => (Ok(s.winner), s.stats),
        Err(e) if e.is_resource() => (Err(e.to_string()), SolveStats::default()),
        Err(e) => return Err(e.into()),
    };
    let doc = SolveDoc::new(g, d, first, ctx.threads, outcome, stats);
    let code = if doc.status == Status::Solved { EXIT_OK } else { EXIT_RESOURCE };
    ctx.emit(&doc, || match (&doc.value, &doc.reason) {
        (Some(p), _) => format!("{g} d={d} first={first}: {p} wins ({} positions, {} memo hits)", doc.nodes_expanded, doc.memo_hits),
        (None, r) => format!("{g} d={d} first={first}: {RESOURCE_BOUNDED} ({})", r.clone().unwrap_or_default()),
    })?;
    Ok(code)
}

fn gnum_cmd(ctx: &mut Ctx, g: &Graph, first: Player, dmax: Color) -> Outcome {
    let r = match game_distinguishing_number(g, first, dmax, &ctx.config) {
        Ok(r) => Ok(r),
        Err(e) if e.is_resource() => Err(e.to_string()),
        Err(e) => return Err(e.into()),
    };
    let text = match &r {
        Ok(GameResult::Finite(d)) => d.to_string(),
        Ok(GameResult::InfiniteCertified(_)) => INFINITY.to_string(),
        Ok(GameResult::UnknownAtLeast(k)) => format!("unknown, at least {k}"),
        Err(e) => format!("{RESOURCE_BOUNDED} ({e})"),
    };
    let doc = GnumDoc::new(g, first, dmax, r);
    let quantity = if first == Player::Gentle { "D_G" } else { "D_R" };
    ctx.emit(&doc, || format!("{quantity}({g}) = {text}"))?;
    Ok(if doc.status == GnumStatus::ResourceBounded { EXIT_RESOURCE } else { EXIT_OK })
}

#[allow(clippy::too_many_arguments)]
fn verify_cmd(
    ctx: &mut Ctx,
    graph: &GraphArgs,
    name: &str,
    mode: Mode,
    d: Option<Color>,
    first: Option<Player>,
    trials: u64,
    seed: u64,
    leaf_budget: u64,
) -> Outcome {
    let entry = registry::lookup(name).ok_or_else(|| Failure::usage(format!("unknown strategy {name:?}; run `distinguo strategies`")))?;
    let g = match (graph.family.is_some() || graph.graph6.is_some(), entry.default_graph) {
        (true, _) => load_graph(graph)?,
        (false, Some(spec)) => parse_family_spec(spec)?,
        (false, None) => return Err(Failure::usage(format!("strategy {name} needs --family or --graph6"))),
    };
    let built = registry::build(name, &g, d, first)?;
    let report = match mode {
        Mode::Exhaustive => verify_strategy_exhaustive(&g, &built.strategy, built.d, built.first_player, leaf_budget),
        Mode::Random => verify_strategy_random(&g, &built.strategy, built.d, built.first_player, trials, seed),
    };
    let report = match report {
        Ok(r) => r,
        Err(e) if e.is_resource() => {
            let doc = ResourceDoc::new("verify", e.to_string());
            ctx.emit(&doc, || format!("{name} on {g}: {RESOURCE_BOUNDED} ({e})"))?;
            return Ok(EXIT_RESOURCE);
        }
        Err(e) => return Err(e.into()),
    };
    let doc = VerifyDoc::of(&g, &report);
    ctx.emit(&doc, || {
        let mut s = format!(
            "{} on {g} (d={}, {} first, {}): {} games, {} failures, {}",
            doc.strategy,
            doc.d,
            doc.first_player,
            doc.mode,
            doc.games_played,
            doc.failure_count,
            if doc.verified { "verified" } else { "NOT verified" }
        );
        if let Some(f) = doc.failures.first() {
            let moves: Vec<String> = f.iter().map(|[v, c]| format!("{v}:{c}")).collect();
            s.push_str(&format!("\nfirst failure: {}", moves.join(",")));
        }
        s
    })?;
    Ok(if report.verified { EXIT_OK } else { EXIT_MISMATCH })
}

fn replay_cmd(ctx: &mut Ctx, g: &Graph, d: Color, first: Player, moves: &str) -> Outcome {
    let moves = parse_moves(moves)?;
    let s = GameState::from_moves(g.n(), d, first, &moves)?;
    let winner = if s.is_terminal() { Some(distinguo_core::game::winner(&s, g)?) } else { None };
    let doc = ReplayDoc {
        schema: schema_tag("replay"),
        graph: GraphRef::of(g),
        d,
        first_player: first,
        moves: moves_doc(&moves),
        colors: s.colors().to_vec(),
        terminal: s.is_terminal(),
        winner,
        to_move: (!s.is_terminal()).then(|| s.to_move()),
    };
    ctx.emit(&doc, || match winner {
        Some(w) => format!("final coloring {:?}: {w} wins", doc.colors),
        None => format!("coloring {:?}, {} to move", doc.colors, s.to_move()),
    })?;
    Ok(EXIT_OK)
}

fn probe_cmd(ctx: &mut Ctx, primes: &[usize], graph6: &[String], file: Option<&PathBuf>, dmax: Color) -> Outcome {
    let mut graphs = Vec::new();
    for s in graph6 {
        graphs.push(parse_graph6(s).map_err(|e| Failure::usage(e.to_string()))?);
    }
    if let Some(path) = file {
        let text = std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
        let more = parse_graph6_lines(&text).map_err(|(line, e)| Failure::usage(format!("{}:{line}: {e}", path.display())))?;
        graphs.extend(more);
    }
    let mut report = ProbeReport::new();
    let text = ctx.format == Format::Text;
    if text {
        writeln!(ctx.out, "# {}", report.disclaimer)?;
    }
    for &p in primes {
        let r = probe_prime(p, &ctx.config);
        if text {
            let note = r.note.as_ref().map(|n| format!(" ({n})")).unwrap_or_default();
            writeln!(ctx.out, "C{p} d=2 Gentle first: {}{note}", r.outcome)?;
        }
        report.primes.push(r);
    }
    for g in &graphs {
        let r = probe_candidate(g, dmax, &ctx.config);
        if text {
            let values: Vec<String> = r.values.iter().map(|v| format!("{} first: {}", v.first_player, v.outcome)).collect();
            let verdict = if r.candidate { values.join(", ") } else { "has an automorphism of order 2, skipped".into() };
            writeln!(ctx.out, "{} |Aut|={}: {verdict}", r.graph.graph6, r.group_order)?;
        }
        report.candidates.push(r);
    }
    if !text {
        ctx.json(&report)?;
    }
    Ok(EXIT_OK)
}

fn reproduce_cmd(ctx: &mut Ctx, only: &[String]) -> Outcome {
    let specs: Vec<_> = TABLE.iter().filter(|s| only.is_empty() || only.iter().any(|o| o == s.instance)).copied().collect();
    let text = ctx.format == Format::Text;
    let out = &mut *ctx.out;
    let mut io = Ok(());
    let report = reproduce::run(&specs, &ctx.config, |r| {
        if text && io.is_ok() {
            io = writeln!(out, "{}", format_row(r));
        }
    });
    io?;
    if text {
        let s = &report.summary;
        writeln!(
            ctx.out,
            "{} rows: {} match, {} mismatch, {} skipped, {} consistent without certificate",
            s.total, s.matched, s.mismatched, s.skipped, s.consistent
        )?;
    } else {
        ctx.json(&report)?;
    }
    Ok(if report.has_mismatch() { EXIT_MISMATCH } else { EXIT_OK })
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Outcome {
    let config = SolverConfig {
        memo_budget: cli.memo_budget,
        node_budget: cli.node_budget,
        work_budget: cli.work_budget,
        ..SolverConfig::default()
    };
    if cli.threads == 0 {
        return Err(Failure::usage("--threads must be at least 1"));
    }
    let mut ctx = Ctx { format: cli.format, config, threads: cli.threads, out };
    match cli.command {
        Command::Gen { graph } => {
            let g = load_graph(&graph)?;
            let doc = GraphDoc::of(&g);
            ctx.emit(&doc, || doc.graph6.clone())?;
            Ok(EXIT_OK)
        }
        Command::Aut { graph } => {
            let g = load_graph(&graph)?;
            let aut = automorphism_group(&g)?;
            let doc = AutDoc::of(&g, &aut);
            ctx.emit(&doc, || format!("|Aut({g})| = {}\norbits: {:?}\ngenerators: {:?}", doc.order, doc.orbits, doc.generators))?;
            Ok(EXIT_OK)
        }
        Command::Dnum { graph, dmax } => {
            let g = load_graph(&graph)?;
            let r = distinguishing_number(&g, dmax)?;
            let doc = DnumDoc::of(&g, dmax, &r);
            ctx.emit(&doc, || match doc.value {
                Some(d) => d.to_string(),
                None => format!("more than {dmax}"),
            })?;
            Ok(EXIT_OK)
        }
        Command::Solve { graph, d, first } => {
            let g = load_graph(&graph)?;
            solve_cmd(&mut ctx, &g, d, first.into())
        }
        Command::Gnum { graph, first, dmax } => {
            let g = load_graph(&graph)?;
            gnum_cmd(&mut ctx, &g, first.into(), dmax)
        }
        Command::Verify { graph, strategy, mode, d, first, trials, seed, leaf_budget } => {
            verify_cmd(&mut ctx, &graph, &strategy, mode, d, first.map(Player::from), trials, seed, leaf_budget)
        }
        Command::Strategies => {
            for e in STRATEGIES {
                writeln!(ctx.out, "{:<16} {:<16} {}", e.name, e.default_graph.unwrap_or("-"), e.about)?;
            }
            Ok(EXIT_OK)
        }
        Command::Reproduce { only } => reproduce_cmd(&mut ctx, &only),
        Command::Probe { primes, graph6, graphs_file, dmax } => probe_cmd(&mut ctx, &primes, &graph6, graphs_file.as_ref(), dmax),
        Command::Replay { graph, d, first, moves } => {
            let g = load_graph(&graph)?;
            replay_cmd(&mut ctx, &g, d, first.into(), &moves)
        }
    }
}

/// Runs the tool on `args` (program name first) and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
