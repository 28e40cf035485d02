//! Playing a strategy against every (or many random) adversary lines.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Strategy;
use crate::coloring::{Color, Distinguisher};
use crate::error::{Error, Result};
use crate::game::{legal_moves, GameState, Move, Player};
use crate::graph::Graph;
use crate::symmetry::automorphism_group;

/// Default cap on the number of leaves visited by exhaustive verification.
pub const DEFAULT_LEAF_BUDGET: u64 = 20_000_000;

/// Failure histories kept in a report; the count is always exact.
pub const MAX_REPORTED_FAILURES: usize = 100;

/// Group elements tracked by the greedy adversary.
const GREEDY_ELEMENTS: usize = 256;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VerificationMode {
    Exhaustive,
    Random { trials: u64, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub strategy: String,
    pub role: Player,
    pub d: Color,
    pub first_player: Player,
    pub mode: VerificationMode,
    /// Finished games: leaves in exhaustive mode, trials in random mode.
    pub games_played: u64,
    /// Set in exhaustive mode only.
    pub leaf_count: Option<u64>,
    pub failure_count: u64,
    /// Full move lists of the first losing games.
    pub failures: Vec<Vec<Move>>,
    pub verified: bool,
}

fn start(g: &Graph, strategy: &dyn Strategy, d: Color, first_player: Player) -> Result<GameState> {
    let meta = strategy.meta();
    if meta.first_player != first_player {
        return Err(Error::Precondition(format!("{} assumes the {} moves first", meta.name, meta.first_player)));
    }
    GameState::new(g.n(), d, first_player)
}

fn report(strategy: &dyn Strategy, d: Color, first_player: Player, mode: VerificationMode) -> VerificationReport {
    VerificationReport {
        strategy: strategy.meta().name.clone(),
        role: strategy.meta().role,
        d,
        first_player,
        mode,
        games_played: 0,
        leaf_count: None,
        failure_count: 0,
        failures: Vec::new(),
        verified: false,
    }
}

fn strategy_move(g: &Graph, strategy: &dyn Strategy, s: &GameState, seed: u64) -> Result<Move> {
    let m = strategy.choose(g, s, seed)?;
    if !s.is_legal(m) {
        return Err(Error::Internal(format!("{} chose illegal move {m:?} after {:?}", strategy.meta().name, s.history())));
    }
    Ok(m)
}

fn record(rep: &mut VerificationReport, dist: &Distinguisher, s: &GameState) {
    rep.games_played += 1;
    let winner = if dist.is_distinguishing(s.colors()) { Player::Gentle } else { Player::Rascal };
    if winner != rep.role {
        rep.failure_count += 1;
        if rep.failures.len() < MAX_REPORTED_FAILURES {
            rep.failures.push(s.history().to_vec());
        }
    }
}

/// Plays `strategy` against every adversary line.
///
/// Fails with [`Error::Resource`] once more than `leaf_budget` games would
/// be needed.
pub fn verify_strategy_exhaustive(
    g: &Graph,
    strategy: &dyn Strategy,
    d: Color,
    first_player: Player,
    leaf_budget: u64,
) -> Result<VerificationReport> {
    let mut s = start(g, strategy, d, first_player)?;
    let leaves = adversary_lines(g.n(), d, first_player, strategy.meta().role);
    if leaves > leaf_budget {
        return Err(Error::Resource(format!("exhaustive verification needs {leaves} leaves, budget is {leaf_budget}")));
    }
    let dist = Distinguisher::new(&automorphism_group(g)?);
    let mut rep = report(strategy, d, first_player, VerificationMode::Exhaustive);
    explore(g, strategy, &dist, &mut s, &mut rep, leaf_budget)?;
    rep.leaf_count = Some(rep.games_played);
    rep.verified = rep.failure_count == 0;
    Ok(rep)
}

/// Number of complete games when the adversary may play anything and the
/// strategy answers deterministically, saturating at `u64::MAX`.
pub fn adversary_lines(n: usize, d: Color, first_player: Player, role: Player) -> u64 {
    let adversary_first = first_player != role;
    (0..n).filter(|k| (k % 2 == 0) == adversary_first).fold(1u64, |acc, k| acc.saturating_mul(((n - k) as u64).saturating_mul(d as u64)))
}

fn explore(
    g: &Graph,
    strategy: &dyn Strategy,
    dist: &Distinguisher,
    s: &mut GameState,
    rep: &mut VerificationReport,
    budget: u64,
) -> Result<()> {
    if s.is_terminal() {
        if rep.games_played >= budget {
            return Err(Error::Resource(format!("exhaustive verification exceeds {budget} leaves")));
        }
        record(rep, dist, s);
        return Ok(());
    }
    if s.to_move() == rep.role {
        let m = strategy_move(g, strategy, s, 0)?;
        s.play(m)?;
        let r = explore(g, strategy, dist, s, rep, budget);
        s.undo();
        return r;
    }
    for m in legal_moves(s) {
        s.play(m)?;
        let r = explore(g, strategy, dist, s, rep, budget);
        s.undo();
        r?;
    }
    Ok(())
}

/// Plays `trials` games: even trials against a uniformly random adversary,
/// odd ones against a greedy adversary that keeps as many automorphisms
/// consistent with the coloring as it can (or as few, when it plays the
/// Gentle). Trial `t` is seeded with `seed + t`.
pub fn verify_strategy_random(
    g: &Graph,
    strategy: &dyn Strategy,
    d: Color,
    first_player: Player,
    trials: u64,
    seed: u64,
) -> Result<VerificationReport> {
    if trials == 0 {
        return Err(Error::InvalidParameter("at least one trial is needed".into()));
    }
    let empty = start(g, strategy, d, first_player)?;
    let group = automorphism_group(g)?;
    let dist = Distinguisher::new(&group);
    let greedy = Greedy::new(g.n(), &group);
    let mut rep = report(strategy, d, first_player, VerificationMode::Random { trials, seed });
    for t in 0..trials {
        let trial_seed = seed.wrapping_add(t);
        let mut rng = ChaCha8Rng::seed_from_u64(trial_seed);
        let mut s = empty.clone();
        let mut tracker = greedy.tracker();
        while !s.is_terminal() {
            let m = if s.to_move() == rep.role {
                strategy_move(g, strategy, &s, trial_seed)?
            } else if t % 2 == 0 {
                *legal_moves(&s).choose(&mut rng).expect("non-terminal state")
            } else {
                greedy.choose(&s, &tracker, rep.role.other(), &mut rng)
            };
            s.play(m)?;
            greedy.update(&mut tracker, s.colors(), m.vertex);
        }
        record(&mut rep, &dist, &s);
    }
    rep.verified = rep.failure_count == 0;
    Ok(rep)
}

/// The smallest-support automorphisms, with images and preimages.
struct Greedy {
    forward: Vec<Vec<usize>>,
    backward: Vec<Vec<usize>>,
}

impl Greedy {
    fn new(n: usize, group: &crate::symmetry::AutGroup) -> Greedy {
        let mut elems: Vec<_> = group.non_identity().collect();
        elems.sort_by_key(|p| (0..n).filter(|&v| p.apply(v) != v).count());
        elems.truncate(GREEDY_ELEMENTS);
        let forward = elems.iter().map(|p| p.image().to_vec()).collect();
        let backward = elems.iter().map(|p| p.inverse().image().to_vec()).collect();
        Greedy { forward, backward }
    }

    fn tracker(&self) -> Vec<bool> {
        alloc::vec![true; self.forward.len()]
    }

    /// Whether element `i`, alive before, stays alive once `v` gets `c`.
    fn survives(&self, i: usize, colors: &[Color], v: usize, c: Color) -> bool {
        let fits = |w: usize| w == v || colors[w] == 0 || colors[w] == c;
        fits(self.forward[i][v]) && fits(self.backward[i][v])
    }

    fn update(&self, alive: &mut [bool], colors: &[Color], v: usize) {
        let c = colors[v];
        for (i, a) in alive.iter_mut().enumerate() {
            if *a {
                *a = self.survives(i, colors, v, c);
            }
        }
    }

    /// Best move for `player` by the number of surviving elements; ties are
    /// broken at random.
    fn choose(&self, s: &GameState, alive: &[bool], player: Player, rng: &mut ChaCha8Rng) -> Move {
        let mut best: Vec<Move> = Vec::new();
        let mut best_score = 0i64;
        for m in legal_moves(s) {
            let survivors = (0..alive.len()).filter(|&i| alive[i] && self.survives(i, s.colors(), m.vertex, m.color)).count() as i64;
            let score = if player == Player::Rascal { survivors } else { -survivors };
            if best.is_empty() || score > best_score {
                best.clear();
                best_score = score;
            }
            if score == best_score {
                best.push(m);
            }
        }
        best[rng.random_range(0..best.len())]
    }
}
