//! Exact engine for the two-player distinguishing game on small graphs.
//!
//! Two players, the Gentle and the Rascal, alternately color the vertices of a
//! graph with colors `1..=d`. The Gentle wins when the final coloring is
//! distinguishing (only the identity automorphism preserves it). This crate
//! provides:
//!
//! * [`graph`]: graphs on at most 64 vertices and the standard families,
//! * [`symmetry`]: explicit automorphism groups, orbits, determining sets,
//! * [`coloring`]: distinguishing colorings and the distinguishing number,
//! * [`game`]: the exact game solver, infinity certificates and game values,
//! * [`involutive`]: the block machinery for graphs with a central fixed-point-free involution,
//! * [`strategies`]: executable constructive strategies and their verification.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod coloring;
pub mod error;
pub mod game;
pub mod graph;
pub mod involutive;
pub mod strategies;
pub mod symmetry;

pub use coloring::{distinguishing_number, is_distinguishing, Color, PartialColoring};
pub use error::{Error, Result};
pub use game::{GameResult, GameState, Move, Player};
pub use graph::{Family, Graph, Vertex};
pub use symmetry::{automorphism_group, AutGroup, Permutation};
