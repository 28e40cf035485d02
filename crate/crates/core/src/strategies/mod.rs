//! Executable constructive strategies and their adversarial verification.
//!
//! Every strategy is a pure function of the graph, the position (including
//! its move history) and a seed. Strategies reconstruct their plan from the
//! history on every call, so they can be queried from any position; when the
//! plan does not apply (an unreachable position) they fall back to the lowest
//! legal move, which keeps every answer legal.

use alloc::format;
use alloc::string::String;

use crate::coloring::Color;
use crate::error::{Error, Result};
use crate::game::{GameState, Move, Player};
use crate::graph::{Graph, Vertex};

mod composite;
mod cycles;
mod cyclic;
mod hypercube;
mod involutive;
mod k2;
mod k4k2;
pub mod lift;
mod mirror;
mod verify;

pub use composite::{gentle_odd_composite_cycle, OddCompositeCycle};
pub use cycles::{
    even_cycle_coloring, gentle_c10_as_printed, gentle_c8_c10, gentle_c9, gentle_c9_as_printed, gentle_prime_cycle, C8C10Strategy,
    C9Strategy, PrimeCycleStrategy,
};
pub use cyclic::{gentle_prime_cyclic, PrimeCyclic};
pub use hypercube::{gentle_q4, hypercube_s_coloring, hypercube_s_coloring_as_printed, Q4Strategy, Q4_S};
pub use involutive::{gentle_involutive, gentle_involutive_bar, InvolutiveBarStrategy, InvolutiveStrategy};
pub use k2::{gentle_k2_union, gentle_k2_union_unchecked, rascal_k2_union, GentleK2Union, RascalK2Union};
pub use k4k2::{gentle_k4k2, K4K2Strategy};
pub use lift::{lift_strategy, Lifted};
pub use mirror::{rascal_mirror_strategy, RascalMirror};
pub use verify::{
    adversary_lines, verify_strategy_exhaustive, verify_strategy_random, VerificationMode, VerificationReport, DEFAULT_LEAF_BUDGET,
};

/// Descriptive data attached to a strategy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrategyMeta {
    pub name: String,
    /// The player the strategy moves for.
    pub role: Player,
    /// Color budget the strategy is built for.
    pub required_d: Color,
    /// The opener the strategy assumes.
    pub first_player: Player,
    /// One-line description of the construction.
    pub summary: String,
}

impl StrategyMeta {
    pub(crate) fn new(
        name: impl Into<String>,
        role: Player,
        required_d: Color,
        first_player: Player,
        summary: impl Into<String>,
    ) -> StrategyMeta {
        StrategyMeta { name: name.into(), role, required_d, first_player, summary: summary.into() }
    }
}

/// A deterministic decision procedure for one player.
pub trait Strategy {
    fn meta(&self) -> &StrategyMeta;

    /// The move to play in `s`, which must have the strategy's role to move.
    fn choose(&self, g: &Graph, s: &GameState, seed: u64) -> Result<Move>;
}

impl<S: Strategy + ?Sized> Strategy for &S {
    fn meta(&self) -> &StrategyMeta {
        (**self).meta()
    }

    fn choose(&self, g: &Graph, s: &GameState, seed: u64) -> Result<Move> {
        (**self).choose(g, s, seed)
    }
}

impl<S: Strategy + ?Sized> Strategy for alloc::boxed::Box<S> {
    fn meta(&self) -> &StrategyMeta {
        (**self).meta()
    }

    fn choose(&self, g: &Graph, s: &GameState, seed: u64) -> Result<Move> {
        (**self).choose(g, s, seed)
    }
}

/// Shared entry checks: right graph, right player to move, game not over.
pub(crate) fn check_turn(meta: &StrategyMeta, expected: &Graph, g: &Graph, s: &GameState) -> Result<()> {
    if !g.same_structure(expected) {
        return Err(Error::Precondition(format!("{} is defined on {} with its canonical labeling", meta.name, expected)));
    }
    check_state(meta, g, s)
}

pub(crate) fn check_state(meta: &StrategyMeta, g: &Graph, s: &GameState) -> Result<()> {
    if s.n() != g.n() {
        return Err(Error::InvalidParameter("state and graph sizes differ".into()));
    }
    if s.is_terminal() {
        return Err(Error::Precondition("the game is over".into()));
    }
    if s.to_move() != meta.role {
        return Err(Error::Precondition(format!("{} plays for the {}, but the {} is to move", meta.name, meta.role, s.to_move())));
    }
    if s.d() < meta.required_d {
        return Err(Error::Precondition(format!("{} needs at least {} colors, the game has {}", meta.name, meta.required_d, s.d())));
    }
    Ok(())
}

/// Lowest uncolored vertex with color 1.
pub(crate) fn fallback(s: &GameState) -> Move {
    let v = s.coloring().uncolored_vertices().next().expect("non-terminal state");
    Move::new(v, 1)
}

/// `m` if legal, else the fallback move.
pub(crate) fn legal_or_fallback(s: &GameState, m: Option<Move>) -> Move {
    match m {
        Some(m) if s.is_legal(m) => m,
        _ => fallback(s),
    }
}

pub(crate) fn uncolored(s: &GameState, v: Vertex) -> bool {
    v < s.n() && !s.coloring().is_colored(v)
}

/// The other of colors 1 and 2.
#[inline]
pub(crate) fn other2(c: Color) -> Color {
    if c == 1 {
        2
    } else {
        1
    }
}

/// Color `x + offset` in `1..=m`, cyclically.
#[inline]
pub(crate) fn shift_color(x: Color, offset: i64, m: u32) -> Color {
    let m = m as i64;
    ((((x as i64 - 1) + offset) % m + m) % m + 1) as Color
}
