use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashMap;

use super::canonical::{CanonicalKey, Canonicalizer};
use super::{GameState, Move, Player};
use crate::coloring::{Color, UNCOLORED};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::symmetry::{automorphism_group, AutGroup};

/// Budgets and switches for the exact solver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    /// Use the symmetry-reduced transposition table.
    pub memoize: bool,
    /// Largest number of transposition-table entries before giving up.
    pub memo_budget: usize,
    /// Largest number of expanded positions before giving up.
    pub node_budget: u64,
    /// Largest value of expanded positions times the group order (the cost
    /// of canonicalizing) before giving up.
    pub work_budget: u64,
}

impl SolverConfig {
    pub const DEFAULT_MEMO_BUDGET: usize = 2_000_000;
    pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;
    pub const DEFAULT_WORK_BUDGET: u64 = 1_000_000_000;

    pub fn with_memo_budget(mut self, memo_budget: usize) -> SolverConfig {
        self.memo_budget = memo_budget;
        self
    }

    pub fn without_memo(mut self) -> SolverConfig {
        self.memoize = false;
        self
    }
}

impl Default for SolverConfig {
    fn default() -> SolverConfig {
        SolverConfig {
            memoize: true,
            memo_budget: SolverConfig::DEFAULT_MEMO_BUDGET,
            node_budget: SolverConfig::DEFAULT_NODE_BUDGET,
            work_budget: SolverConfig::DEFAULT_WORK_BUDGET,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub nodes_expanded: u64,
    pub memo_hits: u64,
    pub memo_entries: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub winner: Player,
    pub stats: SolveStats,
}

/// Exact minimax solver for one graph and one color budget.
///
/// Positions are values of the Gentle: `true` when the Gentle wins under
/// optimal play. Besides memoization, two exact cutoffs are used: a position
/// where no non-identity automorphism is still compatible with the colors is
/// won for the Gentle, and one where some non-identity automorphism already
/// preserves every colored vertex it moves (and moves only colored vertices)
/// is won for the Rascal.
pub struct Solver {
    n: usize,
    d: Color,
    config: SolverConfig,
    canon: Canonicalizer,
    group_order: u64,
    moved: Vec<Vec<(u8, u8)>>,
    support: Vec<u64>,
    orbit_id: Vec<usize>,
    orbit_size: Vec<usize>,
    memo: HashMap<CanonicalKey, bool>,
    stats: SolveStats,
    best: Vec<u8>,
    scratch: Vec<u8>,
}

impl Solver {
    pub fn new(g: &Graph, d: Color, config: SolverConfig) -> Result<Solver> {
        let aut = automorphism_group(g)?;
        Solver::with_group(&aut, d, config)
    }

    pub fn with_group(aut: &AutGroup, d: Color, config: SolverConfig) -> Result<Solver> {
        if d == 0 || d > 63 {
            return Err(Error::InvalidParameter(format!("solver color budget must lie in 1..=63, got {d}")));
        }
        let n = aut.degree();
        let mut moved: Vec<Vec<(u8, u8)>> =
            aut.non_identity().map(|p| (0..n).filter(|&v| p.apply(v) != v).map(|v| (v as u8, p.apply(v) as u8)).collect()).collect();
        moved.sort_by_key(|m| m.len());
        let support = moved.iter().map(|m| m.iter().fold(0u64, |acc, &(v, _)| acc | 1 << v)).collect();
        let orbit_id = aut.orbit_ids();
        let mut orbit_size = vec![0; n];
        for &o in &orbit_id {
            orbit_size[o] += 1;
        }
        Ok(Solver {
            n,
            d,
            config,
            canon: Canonicalizer::new(aut),
            group_order: aut.order() as u64,
            moved,
            support,
            orbit_id,
            orbit_size,
            memo: HashMap::new(),
            stats: SolveStats::default(),
            best: vec![0; n],
            scratch: vec![0; n],
        })
    }

    pub fn stats(&self) -> SolveStats {
        SolveStats { memo_entries: self.memo.len(), ..self.stats }
    }

    /// Winner from the empty position.
    pub fn solve(&mut self, first: Player) -> Result<Player> {
        let mut colors = vec![UNCOLORED; self.n];
        self.winner_from(&mut colors, first)
    }

    /// Winner from an arbitrary position with `to_move` to play.
    pub fn winner_from(&mut self, colors: &mut [Color], to_move: Player) -> Result<Player> {
        if colors.len() != self.n {
            return Err(Error::InvalidParameter("coloring size does not match the graph".into()));
        }
        if let Some(&c) = colors.iter().find(|&&c| c > self.d) {
            return Err(Error::InvalidColoring(format!("color {c} exceeds the budget {}", self.d)));
        }
        let colored = colors.iter().filter(|&&c| c != UNCOLORED).count();
        let gentle = self.value(colors, colored, to_move)?;
        Ok(if gentle { Player::Gentle } else { Player::Rascal })
    }

    fn value(&mut self, colors: &mut [Color], colored: usize, to_move: Player) -> Result<bool> {
        self.stats.nodes_expanded += 1;
        if self.stats.nodes_expanded > self.config.node_budget {
            return Err(Error::Resource(format!("node budget of {} positions exhausted", self.config.node_budget)));
        }
        if self.stats.nodes_expanded.saturating_mul(self.group_order) > self.config.work_budget {
            return Err(Error::Resource(format!(
                "work budget of {} exhausted ({} positions, {} automorphisms)",
                self.config.work_budget, self.stats.nodes_expanded, self.group_order
            )));
        }
        if let Some(v) = self.decided(colors) {
            return Ok(v);
        }
        debug_assert!(colored < self.n);
        let key = if self.config.memoize {
            self.canon.canonical_word(colors, &mut self.best, &mut self.scratch);
            let key = CanonicalKey::from_word(&self.best, to_move);
            if let Some(&v) = self.memo.get(&key) {
                self.stats.memo_hits += 1;
                return Ok(v);
            }
            Some(key)
        } else {
            None
        };

        let moves = self.ordered_moves(colors, to_move);
        let want = to_move == Player::Gentle;
        let mut result = !want;
        for m in moves {
            colors[m.vertex] = m.color;
            let v = self.value(colors, colored + 1, to_move.other());
            colors[m.vertex] = UNCOLORED;
            if v? == want {
                result = want;
                break;
            }
        }

        if let Some(key) = key {
            if self.memo.len() >= self.config.memo_budget {
                return Err(Error::Resource(format!("memo budget of {} entries exhausted", self.config.memo_budget)));
            }
            self.memo.insert(key, result);
        }
        Ok(result)
    }

    /// Exact value when it no longer depends on the remaining moves.
    fn decided(&self, colors: &[Color]) -> Option<bool> {
        let colored = colors.iter().enumerate().fold(0u64, |acc, (v, &c)| if c != UNCOLORED { acc | 1 << v } else { acc });
        let consistent = |m: &[(u8, u8)]| {
            m.iter().all(|&(v, w)| {
                let (a, b) = (colors[v as usize], colors[w as usize]);
                a == b || a == UNCOLORED || b == UNCOLORED
            })
        };
        let mut any_alive = false;
        for (m, &support) in self.moved.iter().zip(&self.support) {
            let complete = support & !colored == 0;
            if (complete || !any_alive) && consistent(m) {
                if complete {
                    return Some(false);
                }
                any_alive = true;
            }
        }
        if any_alive {
            None
        } else {
            Some(true)
        }
    }

    /// Moves up to color renaming (one unused color suffices), best first.
    fn ordered_moves(&self, colors: &[Color], to_move: Player) -> Vec<Move> {
        let mut used = 0u64;
        let mut orbit_colors = vec![0u64; self.n];
        for (v, &c) in colors.iter().enumerate() {
            if c != UNCOLORED {
                used |= 1 << c;
                orbit_colors[self.orbit_id[v]] |= 1 << c;
            }
        }
        let fresh = (1..=self.d).find(|&c| used >> c & 1 == 0);
        let mut scored: Vec<(usize, Move)> = Vec::new();
        for v in 0..self.n {
            if colors[v] != UNCOLORED {
                continue;
            }
            let o = self.orbit_id[v];
            let present = orbit_colors[o];
            for c in (1..=self.d).filter(|&c| used >> c & 1 == 1 || Some(c) == fresh) {
                let bit = 1u64 << c;
                // breaks a monochromatic orbit / keeps it monochromatic
                let breaks = present.count_ones() == 1 && present != bit;
                let keeps = present == bit;
                let score = match to_move {
                    Player::Gentle if breaks => 2 * self.orbit_size[o],
                    Player::Rascal if keeps => 2 * self.orbit_size[o],
                    _ if present == 0 => 1,
                    _ => 0,
                };
                scored.push((score, Move::new(v, c)));
            }
        }
        scored.sort_by_key(|s| core::cmp::Reverse(s.0));
        scored.into_iter().map(|(_, m)| m).collect()
    }
}

/// Winner of the game on `g` with `d` colors under optimal play.
pub fn solve(g: &Graph, d: Color, first: Player) -> Result<Solution> {
    solve_with(g, d, first, &SolverConfig::default())
}

pub fn solve_with(g: &Graph, d: Color, first: Player, config: &SolverConfig) -> Result<Solution> {
    let mut solver = Solver::new(g, d, config.clone())?;
    let winner = solver.solve(first)?;
    Ok(Solution { winner, stats: solver.stats() })
}

/// Winner from the position `s` under optimal play.
pub fn solve_state(g: &Graph, s: &GameState, config: &SolverConfig) -> Result<Solution> {
    if s.n() != g.n() {
        return Err(Error::InvalidParameter("state and graph sizes differ".into()));
    }
    let mut solver = Solver::new(g, s.d(), config.clone())?;
    let mut colors = s.colors().to_vec();
    let winner = solver.winner_from(&mut colors, s.to_move())?;
    Ok(Solution { winner, stats: solver.stats() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::is_distinguishing;
    use crate::coloring::PartialColoring;
    use crate::graph::{complement, make_family, Family};

    /// Plain minimax over all legal moves, no pruning of any kind.
    fn naive(g: &Graph, colors: &mut Vec<Color>, d: Color, to_move: Player) -> bool {
        match colors.iter().position(|&c| c == UNCOLORED) {
            None => is_distinguishing(g, &PartialColoring::new(colors.clone(), d).unwrap()).unwrap(),
            Some(_) => {
                let want = to_move == Player::Gentle;
                for v in 0..colors.len() {
                    if colors[v] != UNCOLORED {
                        continue;
                    }
                    for c in 1..=d {
                        colors[v] = c;
                        let r = naive(g, colors, d, to_move.other());
                        colors[v] = UNCOLORED;
                        if r == want {
                            return want;
                        }
                    }
                }
                !want
            }
        }
    }

    fn win(g: &Graph, d: Color, first: Player) -> Player {
        solve(g, d, first).unwrap().winner
    }

    #[test]
    fn spec_examples() {
        let c4 = make_family(Family::Cycle, 4).unwrap();
        assert_eq!(win(&c4, 2, Player::Gentle), Player::Rascal);
        let c8 = make_family(Family::Cycle, 8).unwrap();
        assert_eq!(win(&c8, 2, Player::Rascal), Player::Gentle);
        let k1 = make_family(Family::Complete, 1).unwrap();
        assert_eq!(win(&k1, 1, Player::Gentle), Player::Gentle);
        assert_eq!(win(&k1, 1, Player::Rascal), Player::Gentle);
    }

    #[test]
    fn agrees_with_naive_minimax() {
        let graphs = [
            make_family(Family::Cycle, 4).unwrap(),
            make_family(Family::Cycle, 5).unwrap(),
            make_family(Family::Path, 4).unwrap(),
            make_family(Family::Path, 5).unwrap(),
            make_family(Family::DisjointK2, 2).unwrap(),
            Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (1, 4)]).unwrap(),
        ];
        for g in &graphs {
            for d in 1..=3 {
                for first in [Player::Gentle, Player::Rascal] {
                    let expected = naive(g, &mut vec![0; g.n()], d, first);
                    let got = win(g, d, first) == Player::Gentle;
                    assert_eq!(got, expected, "{g:?} d={d} {first}");
                }
            }
        }
    }

    #[test]
    fn memo_on_and_off_agree() {
        let g = make_family(Family::Cycle, 6).unwrap();
        for d in 1..=3 {
            for first in [Player::Gentle, Player::Rascal] {
                let a = solve_with(&g, d, first, &SolverConfig::default()).unwrap();
                let b = solve_with(&g, d, first, &SolverConfig::default().without_memo()).unwrap();
                assert_eq!(a.winner, b.winner);
                assert_eq!(b.stats.memo_hits, 0);
            }
        }
    }

    #[test]
    fn complement_gives_same_value() {
        let g = make_family(Family::Path, 5).unwrap();
        for d in 1..=3 {
            assert_eq!(win(&g, d, Player::Gentle), win(&complement(&g), d, Player::Gentle));
        }
    }

    #[test]
    fn budgets_produce_resource_errors() {
        let g = make_family(Family::Cycle, 7).unwrap();
        let tiny = SolverConfig { memo_budget: 3, ..SolverConfig::default() };
        let err = solve_with(&g, 3, Player::Gentle, &tiny).unwrap_err();
        assert!(err.is_resource(), "{err:?}");
        let tiny = SolverConfig { node_budget: 10, ..SolverConfig::default() };
        assert!(solve_with(&g, 3, Player::Gentle, &tiny).unwrap_err().is_resource());
    }

    #[test]
    fn solving_from_a_position() {
        let c4 = make_family(Family::Cycle, 4).unwrap();
        // Gentle already has x0=1 and Rascal answered x2=1: mirror position, Rascal wins
        let s = GameState::from_moves(4, 3, Player::Gentle, &[Move::new(0, 1), Move::new(2, 1)]).unwrap();
        assert_eq!(solve_state(&c4, &s, &SolverConfig::default()).unwrap().winner, Player::Rascal);
    }

    #[test]
    fn stats_are_deterministic() {
        let g = make_family(Family::Cycle, 8).unwrap();
        let a = solve(&g, 2, Player::Rascal).unwrap();
        let b = solve(&g, 2, Player::Rascal).unwrap();
        assert_eq!(a, b);
        assert!(a.stats.nodes_expanded > 0);
    }
}
