use alloc::format;
use alloc::vec::Vec;

use super::{check_state, fallback, legal_or_fallback, uncolored, Strategy, StrategyMeta};
use crate::error::{Error, Result};
use crate::game::{GameState, Move, Player};
use crate::graph::{Graph, Vertex};
use crate::symmetry::Permutation;

/// The Rascal copies every Gentle move through an involutive automorphism.
///
/// Outside the fixed set `A` of `sigma` the Rascal answers `(v, c)` with
/// `(sigma(v), c)`; inside `A` he answers with another vertex of `A`. When the
/// Rascal opens, his first move goes into `A`.
pub struct RascalMirror {
    graph: Graph,
    sigma: Permutation,
    fixed: Vec<Vertex>,
    meta: StrategyMeta,
}

pub fn rascal_mirror_strategy(g: &Graph, sigma: &Permutation, first_player: Player) -> Result<RascalMirror> {
    if sigma.order() != 2 {
        return Err(Error::Precondition(format!("mirror needs an automorphism of order 2, got order {}", sigma.order())));
    }
    if sigma.len() != g.n() || !sigma.is_automorphism(g) {
        return Err(Error::Precondition("mirror permutation is not an automorphism of the graph".into()));
    }
    let parity_ok = match first_player {
        Player::Gentle => g.n().is_multiple_of(2),
        Player::Rascal => g.n() % 2 == 1,
    };
    if !parity_ok {
        return Err(Error::Precondition(format!("mirror with {first_player} first needs the other vertex parity")));
    }
    Ok(RascalMirror {
        graph: g.clone(),
        sigma: sigma.clone(),
        fixed: sigma.fixed_points(),
        meta: StrategyMeta::new("rascal-mirror", Player::Rascal, 1, first_player, "copy the Gentle through an order-2 automorphism"),
    })
}

impl RascalMirror {
    fn free_fixed_point(&self, s: &GameState) -> Option<Vertex> {
        self.fixed.iter().copied().find(|&v| uncolored(s, v))
    }
}

impl Strategy for RascalMirror {
    fn meta(&self) -> &StrategyMeta {
        &self.meta
    }

    fn choose(&self, g: &Graph, s: &GameState, _seed: u64) -> Result<Move> {
        if !g.same_structure(&self.graph) {
            return Err(Error::Precondition("mirror strategy used on a different graph".into()));
        }
        check_state(&self.meta, g, s)?;
        let planned = match s.last_move() {
            None => self.free_fixed_point(s).map(|v| Move::new(v, 1)),
            Some(last) if self.sigma.apply(last.vertex) == last.vertex => self.free_fixed_point(s).map(|v| Move::new(v, 1)),
            Some(last) => Some(Move::new(self.sigma.apply(last.vertex), last.color)),
        };
        Ok(match planned {
            Some(m) => legal_or_fallback(s, Some(m)),
            None => fallback(s),
        })
    }
}
