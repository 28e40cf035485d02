//! Game states, the exact solver and game distinguishing numbers.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::coloring::{is_distinguishing, Color, PartialColoring};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

mod canonical;
mod certificate;
mod solver;

pub use canonical::{canonical_key, CanonicalKey, Canonicalizer};
pub use certificate::{game_distinguishing_number, infinity_certificate, GameResult, InfinityCertificate};
pub use solver::{solve, solve_state, solve_with, Solution, SolveStats, Solver, SolverConfig};

pub use crate::strategies::lift::lift_strategy;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Player {
    Gentle,
    Rascal,
}

impl Player {
    pub fn other(self) -> Player {
        match self {
            Player::Gentle => Player::Rascal,
            Player::Rascal => Player::Gentle,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Player::Gentle => "Gentle",
            Player::Rascal => "Rascal",
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Player {
    type Err = Error;

    fn from_str(s: &str) -> Result<Player> {
        match s.to_ascii_lowercase().as_str() {
            "gentle" | "g" => Ok(Player::Gentle),
            "rascal" | "r" => Ok(Player::Rascal),
            _ => Err(Error::InvalidParameter(format!("unknown player {s:?}"))),
        }
    }
}

/// Color `color` on `vertex`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Move {
    pub vertex: Vertex,
    pub color: Color,
}

impl Move {
    pub fn new(vertex: Vertex, color: Color) -> Move {
        Move { vertex, color }
    }
}

/// A position: the partial coloring, who opened and the moves so far.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameState {
    coloring: PartialColoring,
    first_player: Player,
    history: Vec<Move>,
}

impl GameState {
    pub fn new(n: usize, d: Color, first_player: Player) -> Result<GameState> {
        if d == 0 {
            return Err(Error::InvalidParameter("color budget must be at least 1".into()));
        }
        Ok(GameState { coloring: PartialColoring::uncolored(n, d), first_player, history: Vec::new() })
    }

    /// Replays `moves` from the empty position.
    pub fn from_moves(n: usize, d: Color, first_player: Player, moves: &[Move]) -> Result<GameState> {
        let mut s = GameState::new(n, d, first_player)?;
        for &m in moves {
            s.play(m)?;
        }
        Ok(s)
    }

    /// Position given only by its coloring; the move order is unknown, so the
    /// history is empty.
    pub fn from_coloring(coloring: PartialColoring, first_player: Player) -> Result<GameState> {
        if coloring.budget() == 0 {
            return Err(Error::InvalidParameter("color budget must be at least 1".into()));
        }
        Ok(GameState { coloring, first_player, history: Vec::new() })
    }

    pub fn n(&self) -> usize {
        self.coloring.len()
    }

    pub fn d(&self) -> Color {
        self.coloring.budget()
    }

    pub fn first_player(&self) -> Player {
        self.first_player
    }

    pub fn coloring(&self) -> &PartialColoring {
        &self.coloring
    }

    pub fn colors(&self) -> &[Color] {
        self.coloring.colors()
    }

    pub fn history(&self) -> &[Move] {
        &self.history
    }

    pub fn last_move(&self) -> Option<Move> {
        self.history.last().copied()
    }

    pub fn colored_count(&self) -> usize {
        self.coloring.colored_count()
    }

    pub fn to_move(&self) -> Player {
        if self.colored_count().is_multiple_of(2) {
            self.first_player
        } else {
            self.first_player.other()
        }
    }

    pub fn is_terminal(&self) -> bool {
        self.coloring.is_complete()
    }

    pub fn is_legal(&self, m: Move) -> bool {
        m.vertex < self.n() && !self.coloring.is_colored(m.vertex) && m.color >= 1 && m.color <= self.d()
    }

    pub fn play(&mut self, m: Move) -> Result<()> {
        if !self.is_legal(m) {
            return Err(Error::IllegalMove(format!(
                "({}, {}) in a game on {} vertices with {} colors",
                m.vertex,
                m.color,
                self.n(),
                self.d()
            )));
        }
        self.coloring.set(m.vertex, m.color)?;
        self.history.push(m);
        Ok(())
    }

    /// Takes back the last move.
    pub(crate) fn undo(&mut self) -> Option<Move> {
        let m = self.history.pop()?;
        self.coloring.clear(m.vertex);
        Some(m)
    }

    /// Copy of the state after `m`.
    pub fn after(&self, m: Move) -> Result<GameState> {
        let mut s = self.clone();
        s.play(m)?;
        Ok(s)
    }
}

/// All legal moves, vertex ascending then color ascending.
pub fn legal_moves(s: &GameState) -> Vec<Move> {
    s.coloring.uncolored_vertices().flat_map(|v| (1..=s.d()).map(move |c| Move::new(v, c))).collect()
}

/// Winner of a finished game.
pub fn winner(s: &GameState, g: &Graph) -> Result<Player> {
    if !s.is_terminal() {
        return Err(Error::Precondition(format!("{} vertices still uncolored", s.n() - s.colored_count())));
    }
    Ok(if is_distinguishing(g, &s.coloring)? { Player::Gentle } else { Player::Rascal })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, Family};

    #[test]
    fn legal_move_examples() {
        let s = GameState::new(3, 2, Player::Gentle).unwrap();
        let moves = legal_moves(&s);
        assert_eq!(moves.len(), 6);
        assert_eq!(moves[0], Move::new(0, 1));
        assert_eq!(moves[1], Move::new(0, 2));
        assert_eq!(moves[5], Move::new(2, 2));

        let s = GameState::from_moves(3, 3, Player::Rascal, &[Move::new(0, 1), Move::new(2, 3)]).unwrap();
        assert_eq!(legal_moves(&s), vec![Move::new(1, 1), Move::new(1, 2), Move::new(1, 3)]);
        let done = s.after(Move::new(1, 1)).unwrap();
        assert!(done.is_terminal());
        assert!(legal_moves(&done).is_empty());
    }

    #[test]
    fn turn_order_follows_parity() {
        let mut s = GameState::new(4, 2, Player::Rascal).unwrap();
        assert_eq!(s.to_move(), Player::Rascal);
        s.play(Move::new(1, 2)).unwrap();
        assert_eq!(s.to_move(), Player::Gentle);
        s.play(Move::new(0, 1)).unwrap();
        assert_eq!(s.to_move(), Player::Rascal);
        assert_eq!(s.history(), &[Move::new(1, 2), Move::new(0, 1)]);
    }

    #[test]
    fn illegal_moves_are_rejected() {
        let mut s = GameState::new(3, 2, Player::Gentle).unwrap();
        s.play(Move::new(0, 1)).unwrap();
        assert!(matches!(s.play(Move::new(0, 2)), Err(Error::IllegalMove(_))));
        assert!(s.play(Move::new(3, 1)).is_err());
        assert!(s.play(Move::new(1, 3)).is_err());
        assert!(s.play(Move::new(1, 0)).is_err());
        assert!(GameState::new(3, 0, Player::Gentle).is_err());
    }

    #[test]
    fn winner_examples() {
        let k1 = make_family(Family::Complete, 1).unwrap();
        let s = GameState::from_moves(1, 1, Player::Gentle, &[Move::new(0, 1)]).unwrap();
        assert_eq!(winner(&s, &k1).unwrap(), Player::Gentle);

        let c4 = make_family(Family::Cycle, 4).unwrap();
        let mono = GameState::from_coloring(PartialColoring::complete(vec![1; 4]).unwrap(), Player::Gentle).unwrap();
        assert_eq!(winner(&mono, &c4).unwrap(), Player::Rascal);

        let c6 = make_family(Family::Cycle, 6).unwrap();
        let good = PartialColoring::new(vec![1, 1, 2, 1, 2, 2], 2).unwrap();
        assert!(is_distinguishing(&c6, &good).unwrap());
        let s = GameState::from_coloring(good, Player::Rascal).unwrap();
        assert_eq!(winner(&s, &c6).unwrap(), Player::Gentle);

        let open = GameState::new(4, 2, Player::Gentle).unwrap();
        assert!(matches!(winner(&open, &c4), Err(Error::Precondition(_))));
    }

    #[test]
    fn player_parsing() {
        assert_eq!("gentle".parse::<Player>().unwrap(), Player::Gentle);
        assert_eq!("Rascal".parse::<Player>().unwrap(), Player::Rascal);
        assert!("nobody".parse::<Player>().is_err());
        assert_eq!(Player::Gentle.other(), Player::Rascal);
    }
}
