use super::solver::{Solver, SolverConfig};
use super::Player;
use crate::coloring::Color;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::symmetry::{automorphism_group, Permutation};

/// Proof that the Rascal wins with any number of colors: an automorphism of
/// order two, with the vertex count of the right parity for the opener.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfinityCertificate {
    pub witness: Permutation,
    pub first_player: Player,
    /// Vertex count; even when the Gentle opens, odd when the Rascal opens.
    pub n: usize,
}

impl InfinityCertificate {
    /// Re-checks the witness against `g`.
    pub fn check(&self, g: &Graph) -> bool {
        let parity_ok = match self.first_player {
            Player::Gentle => self.n.is_multiple_of(2),
            Player::Rascal => self.n % 2 == 1,
        };
        parity_ok && self.n == g.n() && self.witness.order() == 2 && self.witness.is_automorphism(g)
    }

    pub fn parity(&self) -> &'static str {
        if self.n.is_multiple_of(2) {
            "even"
        } else {
            "odd"
        }
    }
}

/// Value of a game distinguishing number computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GameResult {
    Finite(Color),
    InfiniteCertified(InfinityCertificate),
    /// No win found for the Gentle with fewer colors than this.
    UnknownAtLeast(usize),
}

/// The least order-two automorphism when the parity rule applies.
pub fn infinity_certificate(g: &Graph, first_player: Player) -> Result<Option<InfinityCertificate>> {
    let applies = match first_player {
        Player::Gentle => g.n().is_multiple_of(2),
        Player::Rascal => g.n() % 2 == 1,
    };
    if !applies {
        return Ok(None);
    }
    let aut = automorphism_group(g)?;
    Ok(aut.involution().map(|w| InfinityCertificate { witness: w.clone(), first_player, n: g.n() }))
}

/// `D_G` or `D_R` of `g`, scanning color budgets upward.
pub fn game_distinguishing_number(g: &Graph, first_player: Player, d_max: Color, config: &SolverConfig) -> Result<GameResult> {
    if d_max == 0 {
        return Err(Error::InvalidParameter("d_max must be at least 1".into()));
    }
    if let Some(cert) = infinity_certificate(g, first_player)? {
        return Ok(GameResult::InfiniteCertified(cert));
    }
    let aut = automorphism_group(g)?;
    for d in 1..=d_max {
        let mut solver = Solver::with_group(&aut, d, config.clone())?;
        if solver.solve(first_player)? == Player::Gentle {
            return Ok(GameResult::Finite(d));
        }
    }
    Ok(GameResult::UnknownAtLeast(d_max as usize + 1))
}
