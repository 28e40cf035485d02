//! Gentle strategy on `K4 □ K2` with 3 colors, Rascal first.
//!
//! Vertex `(i, x)` is `2i + x` with fibers `i = 0..4` and sides `x ∈ {0, 1}`.
//! The vertex choices follow the case analysis below; within a case the
//! Gentle's color is the least one from which the case's target property can
//! still be forced against every Rascal continuation (a lookahead over the
//! remaining paired moves, at most three Rascal moves deep).
//!
//! 1. The Rascal colors `(f0, s)` with `a`. The Gentle colors the same side of
//!    the lowest other fiber `f1` with a different color.
//! 2. If the Rascal now completes `f0` or `f1` (call it `g`, the other one
//!    `h`): when his color differs from `h`'s color, the Gentle repeats `h`'s
//!    color on the free side of `h` (all four fiber color sets will be
//!    distinct); otherwise he puts `g`'s color there (`f0`, `f1` will be the
//!    only fibers with the same color set). Afterwards he always answers in
//!    the Rascal's fiber; one of the last two fibers ends bichromatic.
//! 3. If the Rascal instead plays side `x` of a third fiber, the Gentle plays
//!    side `x` of the fourth: with the third color if the Rascal reused a
//!    color of `f0`/`f1`, else with `f0`'s color. Fibers whose colored
//!    vertices agree are then paired and the Gentle answers across the pair,
//!    keeping all four fibers pairwise different as ordered pairs and one
//!    bichromatic fiber with a unique color set. This works for `x = 0`. For
//!    `x = 1` no pairing of the fibers wins (the Rascal makes an `l`-colored
//!    and an `r`-colored fiber from different pairs equal), so after his
//!    second move the Gentle plays any move from which the endgame (four
//!    vertices left) is won, found by exhaustive search.

use alloc::vec::Vec;

use super::{check_turn, fallback, uncolored, Strategy, StrategyMeta};
use crate::coloring::{Color, Distinguisher, UNCOLORED};
use crate::error::{Error, Result};
use crate::game::{GameState, Move, Player};
use crate::graph::{k4_box_k2, Graph, Vertex};
use crate::symmetry::automorphism_group;

pub struct K4K2Strategy {
    graph: Graph,
    dist: Distinguisher,
    meta: StrategyMeta,
}

pub fn gentle_k4k2(d: Color) -> Result<K4K2Strategy> {
    if d < 3 {
        return Err(Error::Precondition("the K4xK2 strategy needs 3 colors".into()));
    }
    let graph = k4_box_k2();
    Ok(K4K2Strategy {
        dist: Distinguisher::new(&automorphism_group(&graph)?),
        graph,
        meta: StrategyMeta::new("k4k2", Player::Gentle, 3, Player::Rascal, "fiber case analysis with forced color choices"),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Plan {
    /// All four fiber color sets distinct, a late fiber bichromatic.
    Distinct { f0: usize, f1: usize },
    /// Only `f0`, `f1` share a color set, a late fiber bichromatic.
    SharedPair { f0: usize, f1: usize },
    /// Fibers paired across; ordered pairs distinct, a unique bichromatic fiber.
    Crossed { partner: [usize; 4] },
    /// Any reply; the final coloring must be distinguishing.
    Open,
}

fn fiber(v: Vertex) -> usize {
    v / 2
}

fn pair(c: &[Color], f: usize) -> (Color, Color) {
    (c[2 * f], c[2 * f + 1])
}

fn set(c: &[Color], f: usize) -> (Color, Color) {
    let (a, b) = pair(c, f);
    (a.min(b), a.max(b))
}

impl Plan {
    /// Vertices the Gentle may answer on after the Rascal colored `v`.
    fn replies(&self, c: &[Color], v: Vertex) -> Vec<Vertex> {
        let w = match self {
            Plan::Distinct { .. } | Plan::SharedPair { .. } => v ^ 1,
            Plan::Crossed { partner } => {
                let f = partner[fiber(v)];
                if c[2 * f] == UNCOLORED {
                    2 * f
                } else {
                    2 * f + 1
                }
            }
            Plan::Open => return (0..8).filter(|&w| c[w] == UNCOLORED).collect(),
        };
        if c[w] == UNCOLORED {
            alloc::vec![w]
        } else {
            Vec::new()
        }
    }

    fn target(&self, c: &[Color], dist: &Distinguisher) -> bool {
        let sets: Vec<(Color, Color)> = (0..4).map(|f| set(c, f)).collect();
        let mono = |f: usize| sets[f].0 == sets[f].1;
        let late_bichromatic = |f0: usize, f1: usize| (0..4).any(|f| f != f0 && f != f1 && !mono(f));
        match *self {
            Plan::Distinct { f0, f1 } => (0..4).all(|a| (a + 1..4).all(|b| sets[a] != sets[b])) && late_bichromatic(f0, f1),
            Plan::SharedPair { f0, f1 } => {
                (0..4).all(|a| (a + 1..4).all(|b| (sets[a] == sets[b]) == ((a, b) == (f0.min(f1), f0.max(f1))))) && late_bichromatic(f0, f1)
            }
            Plan::Crossed { .. } => {
                let ordered_distinct = (0..4).all(|a| (a + 1..4).all(|b| pair(c, a) != pair(c, b)));
                let witness = (0..4).any(|f| !mono(f) && (0..4).all(|h| h == f || sets[h] != sets[f]));
                ordered_distinct && witness
            }
            Plan::Open => dist.is_distinguishing(c),
        }
    }

    /// Whether the Gentle can still force the target with the Rascal to move.
    fn forceable(&self, c: &mut [Color], dist: &Distinguisher) -> bool {
        if c.iter().all(|&x| x != UNCOLORED) {
            return self.target(c, dist);
        }
        for v in 0..8 {
            if c[v] != UNCOLORED {
                continue;
            }
            for a in 1..=3 {
                c[v] = a;
                let ok = self.replies(c, v).into_iter().any(|w| self.best_color(c, w, dist).is_some());
                c[v] = UNCOLORED;
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    /// Least color for `w` after which the target stays forceable.
    fn best_color(&self, c: &mut [Color], w: Vertex, dist: &Distinguisher) -> Option<Color> {
        (1..=3).find(|&b| {
            c[w] = b;
            let ok = self.forceable(c, dist);
            c[w] = UNCOLORED;
            ok
        })
    }

    /// First winning reply to the Rascal's move on `v`.
    fn best_reply(&self, c: &mut [Color], v: Vertex, dist: &Distinguisher) -> Option<Move> {
        let candidates = self.replies(c, v);
        candidates.into_iter().find_map(|w| self.best_color(c, w, dist).map(|b| Move::new(w, b)))
    }
}

/// The third of colors 1..=3.
fn third(a: Color, b: Color) -> Color {
    6 - a - b
}

impl K4K2Strategy {
    fn plan_move(&self, s: &GameState) -> Option<Move> {
        let h = s.history();
        if h.len() != s.colored_count() || h.len().is_multiple_of(2) {
            return None;
        }
        let c = s.colors();
        let r1 = h[0];
        let (f0, s0) = (fiber(r1.vertex), r1.vertex % 2);
        let f1 = (0..4).find(|&f| f != f0).unwrap();
        let e0 = r1.color.min(3);
        if h.len() == 1 {
            let b = if e0 == 2 { 1 } else { 2 };
            return Some(Move::new(2 * f1 + s0, b));
        }
        let e1 = c[2 * f1 + s0];
        let r2 = h[2];
        let g = fiber(r2.vertex);
        let a = r2.color.min(3);
        let (plan, second) = if g == f0 || g == f1 {
            let hf = if g == f0 { f1 } else { f0 };
            let (eg, eh) = (c[2 * g + s0], c[2 * hf + s0]);
            let free = 2 * hf + (1 - s0);
            if a != eh {
                (Plan::Distinct { f0, f1 }, Move::new(free, eh))
            } else {
                (Plan::SharedPair { f0, f1 }, Move::new(free, eg))
            }
        } else {
            let x = r2.vertex % 2;
            let f4 = (0..4).find(|&f| f != f0 && f != f1 && f != g).unwrap();
            let b = if a == e0 || a == e1 { third(e0, e1) } else { e0 };
            if x != s0 {
                (Plan::Open, Move::new(2 * f4 + x, b))
            } else {
                let vals = [(f0, e0), (f1, e1), (g, a), (f4, b)];
                let mut partner = [0usize; 4];
                // the unique pair of fibers whose colored vertices agree, and the rest
                let (i, j) = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).find(|&(i, j)| vals[i].1 == vals[j].1).unwrap_or((0, 1));
                let rest: Vec<usize> = (0..4).filter(|&k| k != i && k != j).collect();
                for (p, q) in [(i, j), (rest[0], rest[1])] {
                    partner[vals[p].0] = vals[q].0;
                    partner[vals[q].0] = vals[p].0;
                }
                (Plan::Crossed { partner }, Move::new(2 * f4 + x, b))
            }
        };
        if h.len() == 3 {
            return Some(second);
        }
        let last = h[h.len() - 1];
        let mut scratch: Vec<Color> = c.iter().map(|&x| x.min(3)).collect();
        plan.best_reply(&mut scratch, last.vertex, &self.dist).or_else(|| plan.replies(c, last.vertex).first().map(|&w| Move::new(w, 1)))
    }
}

impl Strategy for K4K2Strategy {
    fn meta(&self) -> &StrategyMeta {
        &self.meta
    }

    fn choose(&self, g: &Graph, s: &GameState, _seed: u64) -> Result<Move> {
        check_turn(&self.meta, &self.graph, g, s)?;
        Ok(match self.plan_move(s) {
            Some(m) if uncolored(s, m.vertex) && m.color >= 1 && m.color <= s.d() => m,
            _ => fallback(s),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dist() -> Distinguisher {
        Distinguisher::new(&automorphism_group(&k4_box_k2()).unwrap())
    }

    const MATCHINGS: [[usize; 4]; 3] = [[1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]];

    #[test]
    fn crossed_pairing_wins_on_the_same_side() {
        // (0,l)=1, (1,l)=2, (2,l)=1, (3,l)=3: fibers 0 and 2 paired
        let mut c = [1, 0, 2, 0, 1, 0, 3, 0];
        assert!(Plan::Crossed { partner: [2, 3, 0, 1] }.forceable(&mut c, &dist()));
    }

    #[test]
    fn no_pairing_wins_across_sides() {
        // (0,l)=1, (1,l)=2, (2,r)=1, (3,r)=3
        let mut c = [1, 0, 2, 0, 0, 1, 0, 3];
        let d = dist();
        for partner in MATCHINGS {
            assert!(!Plan::Crossed { partner }.forceable(&mut c, &d), "{partner:?}");
        }
        assert!(Plan::Open.forceable(&mut c, &d));
    }
}
