//! Running a strategy built for `d_base` colors in a game with more colors.

use alloc::format;
use alloc::vec::Vec;

use super::{Strategy, StrategyMeta};
use crate::coloring::Color;
use crate::error::{Error, Result};
use crate::game::{GameState, Move};
use crate::graph::Graph;

/// Wrapper that reads every color above `d_base` as color 1 before asking the
/// base strategy, so the base strategy only ever sees a `d_base`-color game.
pub struct Lifted<S> {
    base: S,
    d_base: Color,
    meta: StrategyMeta,
}

impl<S: Strategy> Lifted<S> {
    pub fn base(&self) -> &S {
        &self.base
    }

    pub fn d_base(&self) -> Color {
        self.d_base
    }

    /// The position as seen by the base strategy.
    pub fn project(&self, s: &GameState) -> Result<GameState> {
        let squash = |c: Color| if c > self.d_base { 1 } else { c };
        if s.history().len() == s.colored_count() {
            let moves: Vec<Move> = s.history().iter().map(|m| Move::new(m.vertex, squash(m.color))).collect();
            GameState::from_moves(s.n(), self.d_base, s.first_player(), &moves)
        } else {
            let colors = s.colors().iter().map(|&c| squash(c)).collect();
            GameState::from_coloring(crate::coloring::PartialColoring::new(colors, self.d_base)?, s.first_player())
        }
    }
}

impl<S: Strategy> Strategy for Lifted<S> {
    fn meta(&self) -> &StrategyMeta {
        &self.meta
    }

    fn choose(&self, g: &Graph, s: &GameState, seed: u64) -> Result<Move> {
        if s.d() < self.d_base {
            return Err(Error::Precondition(format!("lifted strategy needs at least {} colors", self.d_base)));
        }
        self.base.choose(g, &self.project(s)?, seed)
    }
}

/// Lifts `strategy` from `d_base` to `d >= d_base` colors.
pub fn lift_strategy<S: Strategy>(strategy: S, d_base: Color, d: Color) -> Result<Lifted<S>> {
    if d < d_base {
        return Err(Error::InvalidParameter(format!("cannot lift from {d_base} down to {d} colors")));
    }
    if d_base == 0 {
        return Err(Error::InvalidParameter("base color budget must be positive".into()));
    }
    let m = strategy.meta();
    let meta = StrategyMeta::new(
        format!("{}@{}", m.name, d),
        m.role,
        d_base,
        m.first_player,
        format!("{} (colors above {d_base} read as 1)", m.summary),
    );
    Ok(Lifted { base: strategy, d_base, meta })
}
