//! Root-split solving on several threads.
//!
//! The first move is reduced to one vertex per orbit with color 1. Every
//! thread owns a solver and its transposition table; all children are
//! evaluated, so the value and the summed statistics do not depend on the
//! schedule.

use std::thread;

use distinguo_core::coloring::{Color, UNCOLORED};
use distinguo_core::game::{solve_with, Solution, SolveStats, Solver, SolverConfig};
use distinguo_core::{automorphism_group, Graph, Player, Result};

pub fn solve_parallel(g: &Graph, d: Color, first: Player, config: &SolverConfig, threads: usize) -> Result<Solution> {
    let aut = automorphism_group(g)?;
    if threads <= 1 || aut.is_trivial() {
        return solve_with(g, d, first, config);
    }
    let roots: Vec<usize> = aut.orbits().iter().map(|o| o[0]).collect();
    let threads = threads.min(roots.len());
    let mut outcomes: Vec<(usize, Result<Player>, SolveStats)> = thread::scope(|scope| {
        let handles: Vec<_> = (0..threads)
            .map(|t| {
                let (aut, roots) = (&aut, &roots);
                scope.spawn(move || {
                    let mut out = Vec::new();
                    for (i, &v) in roots.iter().enumerate().skip(t).step_by(threads) {
                        let mut colors = vec![UNCOLORED; aut.degree()];
                        colors[v] = 1;
                        match Solver::with_group(aut, d, config.clone()) {
                            Ok(mut solver) => {
                                let r = solver.winner_from(&mut colors, first.other());
                                out.push((i, r, solver.stats()));
                            }
                            Err(e) => out.push((i, Err(e), SolveStats::default())),
                        }
                    }
                    out
                })
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("solver thread panicked")).collect()
    });
    outcomes.sort_by_key(|o| o.0);

    let mut stats = SolveStats { nodes_expanded: 1, ..SolveStats::default() };
    for (_, _, s) in &outcomes {
        stats.nodes_expanded += s.nodes_expanded;
        stats.memo_hits += s.memo_hits;
        stats.memo_entries += s.memo_entries;
    }
    if outcomes.iter().any(|o| matches!(o.1, Ok(p) if p == first)) {
        return Ok(Solution { winner: first, stats });
    }
    if let Some((_, Err(e), _)) = outcomes.iter().find(|o| o.1.is_err()) {
        return Err(e.clone());
    }
    Ok(Solution { winner: first.other(), stats })
}

#[cfg(test)]
mod tests {
    use super::*;
    use distinguo_core::game::solve;
    use distinguo_core::graph::{make_family, Family};

    #[test]
    fn agrees_with_single_thread() {
        for (family, param, d, first) in [
            (Family::Cycle, 8, 2, Player::Rascal),
            (Family::Cycle, 7, 2, Player::Gentle),
            (Family::Cycle, 9, 2, Player::Gentle),
            (Family::Hypercube, 3, 3, Player::Rascal),
            (Family::DisjointK2, 3, 3, Player::Rascal),
        ] {
            let g = make_family(family, param).unwrap();
            let one = solve(&g, d, first).unwrap().winner;
            for threads in [2, 3, 8] {
                let many = solve_parallel(&g, d, first, &SolverConfig::default(), threads).unwrap();
                assert_eq!(many.winner, one, "{family:?}{param} d={d} threads={threads}");
            }
            let a = solve_parallel(&g, d, first, &SolverConfig::default(), 4).unwrap();
            let b = solve_parallel(&g, d, first, &SolverConfig::default(), 4).unwrap();
            assert_eq!(a, b);
        }
    }
}
