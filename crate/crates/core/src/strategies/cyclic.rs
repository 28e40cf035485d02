use alloc::format;
use alloc::vec::Vec;

use super::{check_turn, fallback, other2, Strategy, StrategyMeta};
use crate::error::{Error, Result};
use crate::game::{GameState, Move, Player};
use crate::graph::{Graph, Vertex};
use crate::symmetry::automorphism_group;

/// Gentle strategy for graphs whose automorphism group has odd prime order:
/// keep the first orbit of size `p` from ending monochromatic.
pub struct PrimeCyclic {
    graph: Graph,
    orbit: Vec<Vertex>,
    meta: StrategyMeta,
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|q| q * q <= p).all(|q| !p.is_multiple_of(q))
}

/// Works for either opener; `first_player` only sets the metadata.
pub fn gentle_prime_cyclic(g: &Graph, first_player: Player) -> Result<PrimeCyclic> {
    let aut = automorphism_group(g)?;
    let p = aut.order();
    if p < 3 || !is_prime(p) {
        return Err(Error::Precondition(format!("automorphism group has order {p}, not an odd prime")));
    }
    let orbit = aut
        .orbits()
        .into_iter()
        .find(|o| o.len() == p)
        .ok_or_else(|| Error::Internal("group of prime order without a regular orbit".into()))?;
    Ok(PrimeCyclic {
        graph: g.clone(),
        orbit,
        meta: StrategyMeta::new("prime-cyclic", Player::Gentle, 2, first_player, "keep one regular orbit bichromatic"),
    })
}

impl PrimeCyclic {
    pub fn orbit(&self) -> &[Vertex] {
        &self.orbit
    }
}

impl Strategy for PrimeCyclic {
    fn meta(&self) -> &StrategyMeta {
        &self.meta
    }

    fn choose(&self, g: &Graph, s: &GameState, _seed: u64) -> Result<Move> {
        check_turn(&self.meta, &self.graph, g, s)?;
        let c = s.coloring();
        let mut present = 0u8;
        for &v in &self.orbit {
            if c.is_colored(v) {
                present |= 1 << c.get(v).min(2);
            }
        }
        // already bichromatic (colors above 2 count as a second color)
        if present.count_ones() >= 2 {
            return Ok(fallback(s));
        }
        let Some(&v) = self.orbit.iter().find(|&&v| !c.is_colored(v)) else {
            return Ok(fallback(s));
        };
        let color = if present == 0 { 1 } else { other2(present.trailing_zeros() as u8) };
        Ok(Move::new(v, color))
    }
}
