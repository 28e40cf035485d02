use alloc::format;

use super::{check_turn, fallback, other2, Strategy, StrategyMeta};
use crate::coloring::Color;
use crate::error::{Error, Result};
use crate::game::{GameState, Move, Player};
use crate::graph::{make_family, Family, Graph, Vertex};

/// Gentle on an odd cycle `C_n` with `n = p·k` composite, `p` the least prime
/// factor and `k >= 5`, two colors, Gentle first.
///
/// With `x_i` as vertex `i − 1`, `V_j` is the residue class `j − 1 (mod k)`
/// and `Δ_i` is the reflection fixing `x_{1+(i−1)k}`. The Gentle opens on
/// `x_1`; then:
/// * a Rascal move `v ∈ V_1` is answered at `Δ_1(v)` with the other color;
/// * a Rascal move that leaves one vertex of `V_j` uncolored is answered on
///   that vertex, making the parity of 1s in `V_j` differ from the one in `V_1`;
/// * otherwise the Gentle plays in the mirror class `V_{k+2−j}`, breaking the
///   first reflection `Δ_i` (`i >= 2`) not yet broken, or on its lowest free
///   vertex with color 1 once all are broken.
pub struct OddCompositeCycle {
    graph: Graph,
    p: usize,
    k: usize,
    meta: StrategyMeta,
}

fn least_prime_factor(n: usize) -> usize {
    (2..).take_while(|q| q * q <= n).find(|q| n.is_multiple_of(*q)).unwrap_or(n)
}

pub fn gentle_odd_composite_cycle(n: usize) -> Result<OddCompositeCycle> {
    let p = least_prime_factor(n);
    if n.is_multiple_of(2) || p == n || n <= 9 {
        return Err(Error::Precondition(format!("needs an odd composite cycle length above 9, got {n}")));
    }
    Ok(OddCompositeCycle {
        graph: make_family(Family::Cycle, n)?,
        p,
        k: n / p,
        meta: StrategyMeta::new(
            "odd-composite-cycle",
            Player::Gentle,
            2,
            Player::Gentle,
            "residue classes modulo k, parity control and reflection breaking",
        ),
    })
}

impl OddCompositeCycle {
    pub fn p(&self) -> usize {
        self.p
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Vertices of `V_j`, `j` 1-based.
    pub fn class(&self, j: usize) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.p).map(move |l| j - 1 + l * self.k)
    }
}

/// Reflection of `C_n` fixing vertex `a`.
#[inline]
pub(crate) fn reflect(n: usize, a: usize, v: Vertex) -> Vertex {
    (2 * a + n - v % n) % n
}

/// The Gentle's answer to `last` in the residue-class scheme; `None` when the
/// scheme has no answer in this position.
pub(crate) fn composite_reply(n: usize, p: usize, k: usize, colors: &[Color], last: Move) -> Option<Move> {
    let v = last.vertex;
    let free = |u: Vertex| colors[u] == 0;
    let cls = v % k;
    if cls == 0 {
        let w = reflect(n, 0, v);
        return free(w).then(|| Move::new(w, other2(last.color)));
    }
    let members = |r: usize| (0..p).map(move |l| r + l * k);
    let open: alloc::vec::Vec<Vertex> = members(cls).filter(|&u| free(u)).collect();
    if open.len() == 1 {
        let u = open[0];
        let ones = members(cls).filter(|&x| colors[x] == 1).count();
        let target = (1 + (p - 1) / 2) % 2;
        let color = if (ones + 1) % 2 != target { 1 } else { 2 };
        return Some(Move::new(u, color));
    }
    let mirror = (k - cls) % k;
    let broken = |i: usize| {
        let a = (i - 1) * k;
        (0..n).any(|x| colors[x] != 0 && colors[reflect(n, a, x)] != 0 && colors[x] != colors[reflect(n, a, x)])
    };
    if let Some(i0) = (2..=p).find(|&i| !broken(i)) {
        let a = (i0 - 1) * k;
        let hit = members(mirror).find(|&u| free(u) && colors[reflect(n, a, u)] != 0);
        if let Some(u) = hit {
            return Some(Move::new(u, other2(colors[reflect(n, a, u)])));
        }
    }
    members(mirror).find(|&u| free(u)).map(|u| Move::new(u, 1))
}

impl Strategy for OddCompositeCycle {
    fn meta(&self) -> &StrategyMeta {
        &self.meta
    }

    fn choose(&self, g: &Graph, s: &GameState, _seed: u64) -> Result<Move> {
        check_turn(&self.meta, &self.graph, g, s)?;
        let planned = match s.last_move() {
            None if s.colored_count() == 0 => Some(Move::new(0, 1)),
            None => None,
            Some(last) => {
                let colors: alloc::vec::Vec<Color> = s.colors().iter().map(|&c| c.min(2)).collect();
                let last = Move::new(last.vertex, last.color.min(2));
                composite_reply(g.n(), self.p, self.k, &colors, last)
            }
        };
        Ok(match planned {
            Some(m) if s.is_legal(m) => m,
            _ => fallback(s),
        })
    }
}
