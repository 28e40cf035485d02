use alloc::format;
use alloc::vec::Vec;

use super::{check_turn, fallback, uncolored, Strategy, StrategyMeta};
use crate::coloring::Color;
use crate::error::{Error, Result};
use crate::game::{GameState, Move, Player};
use crate::graph::{make_family, Family, Graph};

/// Blocks of `nK2` are `{2i, 2i+1}`.
#[inline]
fn partner(v: usize) -> usize {
    v ^ 1
}

fn unordered(a: Color, b: Color) -> (Color, Color) {
    (a.min(b), a.max(b))
}

/// Gentle on `nK2`, Rascal first: answer in the Rascal's block with a color
/// that keeps the block bichromatic and its color pair new.
pub struct GentleK2Union {
    graph: Graph,
    meta: StrategyMeta,
}

pub fn gentle_k2_union(n: usize, d: Color) -> Result<GentleK2Union> {
    if (d as usize) < n + 1 {
        return Err(Error::Precondition(format!("the Gentle needs at least {} colors on {n}K2, got {d}", n + 1)));
    }
    gentle_k2_union_unchecked(n, d)
}

/// The same strategy without the color-budget check, for exhibiting losses.
pub fn gentle_k2_union_unchecked(n: usize, d: Color) -> Result<GentleK2Union> {
    let graph = make_family(Family::DisjointK2, n)?;
    let meta =
        StrategyMeta::new("k2-union", Player::Gentle, d.min((n + 1) as Color), Player::Rascal, "fresh bichromatic color pair per block");
    Ok(GentleK2Union { graph, meta })
}

impl Strategy for GentleK2Union {
    fn meta(&self) -> &StrategyMeta {
        &self.meta
    }

    fn choose(&self, g: &Graph, s: &GameState, _seed: u64) -> Result<Move> {
        check_turn(&self.meta, &self.graph, g, s)?;
        let Some(last) = s.last_move() else {
            return Ok(fallback(s));
        };
        let w = partner(last.vertex);
        if !uncolored(s, w) {
            return Ok(fallback(s));
        }
        let c = s.coloring();
        let used: Vec<(Color, Color)> = (0..g.n() / 2)
            .filter(|&b| c.is_colored(2 * b) && c.is_colored(2 * b + 1))
            .map(|b| unordered(c.get(2 * b), c.get(2 * b + 1)))
            .collect();
        let fresh = (1..=s.d()).find(|&x| x != last.color && !used.contains(&unordered(last.color, x)));
        // without enough colors there is no good answer; any legal one will do
        let x = fresh.unwrap_or(if last.color == 1 { 2.min(s.d()) } else { 1 });
        Ok(Move::new(w, x))
    }
}

/// Rascal on `nK2` with at most `n` colors: make every block contain a 1.
pub struct RascalK2Union {
    graph: Graph,
    meta: StrategyMeta,
}

pub fn rascal_k2_union(n: usize, d: Color, first_player: Player) -> Result<RascalK2Union> {
    if d as usize > n {
        return Err(Error::Precondition(format!("the Rascal strategy on {n}K2 needs at most {n} colors, got {d}")));
    }
    let graph = make_family(Family::DisjointK2, n)?;
    let meta = StrategyMeta::new("rascal-k2-union", Player::Rascal, 1, first_player, "put color 1 into every block");
    Ok(RascalK2Union { graph, meta })
}

impl Strategy for RascalK2Union {
    fn meta(&self) -> &StrategyMeta {
        &self.meta
    }

    fn choose(&self, g: &Graph, s: &GameState, _seed: u64) -> Result<Move> {
        check_turn(&self.meta, &self.graph, g, s)?;
        let c = s.coloring();
        // a half-colored block without a 1 must get one now
        let urgent = (0..g.n()).find(|&v| c.is_colored(v) && c.get(v) != 1 && uncolored(s, partner(v)));
        if let Some(v) = urgent {
            return Ok(Move::new(partner(v), 1));
        }
        let fresh = (0..g.n() / 2).find(|&b| uncolored(s, 2 * b) && uncolored(s, 2 * b + 1));
        if let Some(b) = fresh {
            return Ok(Move::new(2 * b, 1));
        }
        Ok(fallback(s))
    }
}
