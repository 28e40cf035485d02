use alloc::format;

use super::{check_state, fallback, shift_color, uncolored, Strategy, StrategyMeta};
use crate::coloring::{is_distinguishing, Color, PartialColoring};
use crate::error::{Error, Result};
use crate::game::{GameState, Move, Player};
use crate::graph::Graph;
use crate::involutive::{only_bar_preserving, residue_table, BarMap, ResidueTable};
use crate::symmetry::automorphism_group;

fn check_bar(g: &Graph, bar: &BarMap) -> Result<()> {
    if bar.len() != g.n() {
        return Err(Error::InvalidParameter("involution and graph sizes differ".into()));
    }
    if !bar.commutes_with(&automorphism_group(g)?) {
        return Err(Error::Precondition("the involution does not commute with every automorphism".into()));
    }
    Ok(())
}

fn base_colors(g: &Graph, c: &PartialColoring) -> Result<Color> {
    if c.len() != g.n() {
        return Err(Error::InvalidColoring("base coloring size does not match the graph".into()));
    }
    c.require_complete()?;
    Ok(c.colors().iter().copied().max().unwrap_or(1))
}

/// Answers in the opposite vertex; the color offset across each block is a
/// function of the block's class in the base coloring.
fn mirror_reply(g: &Graph, bar: &BarMap, s: &GameState, offset: impl Fn(usize) -> i64, m: u32) -> Move {
    let Some(last) = s.last_move() else {
        return fallback(s);
    };
    let w = bar.opposite(last.vertex);
    if !uncolored(s, w) || last.vertex >= g.n() {
        return fallback(s);
    }
    // colors beyond the modulus are read as 1
    let x = if last.color as u32 > m { 1 } else { last.color };
    Move::new(w, shift_color(x, offset(last.vertex), m))
}

/// Gentle on an involutive graph, Rascal first, `d² + d − 2` colors where
/// `d` is the number of colors of a distinguishing base coloring.
pub struct InvolutiveStrategy {
    graph: Graph,
    bar: BarMap,
    base: PartialColoring,
    table: ResidueTable,
    meta: StrategyMeta,
}

pub fn gentle_involutive(g: &Graph, bar: &BarMap, base: &PartialColoring, budget: Color) -> Result<InvolutiveStrategy> {
    check_bar(g, bar)?;
    let d = base_colors(g, base)?.max(2);
    if !is_distinguishing(g, base)? {
        return Err(Error::Precondition("base coloring is not distinguishing".into()));
    }
    let table = residue_table(d)?;
    if (budget as u32) < table.k() {
        return Err(Error::Precondition(format!("needs {} colors, got {budget}", table.k())));
    }
    let meta = StrategyMeta::new(
        "involutive",
        Player::Gentle,
        table.k() as Color,
        Player::Rascal,
        "encode each block class in the color difference modulo d^2+d-2",
    );
    Ok(InvolutiveStrategy { graph: g.clone(), bar: bar.clone(), base: base.clone(), table, meta })
}

impl InvolutiveStrategy {
    pub fn table(&self) -> &ResidueTable {
        &self.table
    }
}

impl Strategy for InvolutiveStrategy {
    fn meta(&self) -> &StrategyMeta {
        &self.meta
    }

    fn choose(&self, g: &Graph, s: &GameState, _seed: u64) -> Result<Move> {
        if !g.same_structure(&self.graph) {
            return Err(Error::Precondition("strategy used on a different graph".into()));
        }
        check_state(&self.meta, g, s)?;
        let offset = |u: usize| self.table.r(self.base.get(u), self.base.get(self.bar.opposite(u))) as i64;
        Ok(mirror_reply(g, &self.bar, s, offset, self.table.k()))
    }
}

/// Gentle on an involutive graph when Bar is the only non-trivial automorphism
/// preserving the base coloring: `2d − 2` colors, offset `i − 1` on `V_ii`.
pub struct InvolutiveBarStrategy {
    graph: Graph,
    bar: BarMap,
    base: PartialColoring,
    modulus: u32,
    meta: StrategyMeta,
}

pub fn gentle_involutive_bar(g: &Graph, bar: &BarMap, base: &PartialColoring) -> Result<InvolutiveBarStrategy> {
    let d = base_colors(g, base)?;
    if d < 2 {
        return Err(Error::Precondition("base coloring needs at least 2 colors".into()));
    }
    let check = only_bar_preserving(g, bar, base)?;
    if !check.holds() {
        return Err(Error::Precondition(format!("Bar is not the only color-preserving automorphism: {check:?}")));
    }
    check_bar(g, bar)?;
    let modulus = 2 * d as u32 - 2;
    let meta = StrategyMeta::new(
        "involutive-bar",
        Player::Gentle,
        modulus as Color,
        Player::Rascal,
        "offset i-1 modulo 2d-2 across blocks of class i",
    );
    Ok(InvolutiveBarStrategy { graph: g.clone(), bar: bar.clone(), base: base.clone(), modulus, meta })
}

impl InvolutiveBarStrategy {
    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn base(&self) -> &PartialColoring {
        &self.base
    }
}

impl Strategy for InvolutiveBarStrategy {
    fn meta(&self) -> &StrategyMeta {
        &self.meta
    }

    fn choose(&self, g: &Graph, s: &GameState, _seed: u64) -> Result<Move> {
        if !g.same_structure(&self.graph) {
            return Err(Error::Precondition("strategy used on a different graph".into()));
        }
        check_state(&self.meta, g, s)?;
        let offset = |u: usize| self.base.get(u) as i64 - 1;
        Ok(mirror_reply(g, &self.bar, s, offset, self.modulus))
    }
}
