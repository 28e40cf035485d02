//! JSON documents written by the command line tool. Every document carries a
//! `schema` tag naming its schema file under `schemas/`.

use serde::{Deserialize, Serialize};

use distinguo_core::coloring::DistinguishingNumber;
use distinguo_core::game::{GameResult, InfinityCertificate, SolveStats};
use distinguo_core::strategies::{VerificationMode, VerificationReport};
use distinguo_core::{AutGroup, Graph, Move, Player};

use crate::graph6::emit_graph6;

pub const SCHEMA_VERSION: u32 = 1;

/// Printed value of a certified infinite game distinguishing number.
pub const INFINITY: &str = "inf(order2-certificate)";

/// Printed status of a computation that ran out of budget.
pub const RESOURCE_BOUNDED: &str = "resource-bounded";

pub fn schema_tag(kind: &str) -> String {
    format!("distinguo/{kind}/v{SCHEMA_VERSION}")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRef {
    pub name: String,
    pub n: usize,
    pub graph6: String,
}

impl GraphRef {
    pub fn of(g: &Graph) -> GraphRef {
        GraphRef { name: g.name().to_string(), n: g.n(), graph6: emit_graph6(g) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDoc {
    pub schema: String,
    pub name: String,
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    pub graph6: String,
}

impl GraphDoc {
    pub fn of(g: &Graph) -> GraphDoc {
        GraphDoc {
            schema: schema_tag("graph"),
            name: g.name().to_string(),
            n: g.n(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
            graph6: emit_graph6(g),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutDoc {
    pub schema: String,
    pub graph: GraphRef,
    pub order: usize,
    pub generators: Vec<Vec<usize>>,
    pub orbits: Vec<Vec<usize>>,
}

impl AutDoc {
    pub fn of(g: &Graph, aut: &AutGroup) -> AutDoc {
        AutDoc {
            schema: schema_tag("aut"),
            graph: GraphRef::of(g),
            order: aut.order(),
            generators: aut.generators().iter().map(|p| p.image().to_vec()).collect(),
            orbits: aut.orbits(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DnumDoc {
    pub schema: String,
    pub graph: GraphRef,
    pub d_max: u8,
    /// `None` when no coloring with at most `d_max` colors distinguishes.
    pub value: Option<u8>,
    pub witness: Option<Vec<u8>>,
}

impl DnumDoc {
    pub fn of(g: &Graph, d_max: u8, r: &DistinguishingNumber) -> DnumDoc {
        let (value, witness) = match r {
            DistinguishingNumber::Exact { d, witness } => (Some(*d), Some(witness.colors().to_vec())),
            DistinguishingNumber::AboveMax { .. } => (None, None),
        };
        DnumDoc { schema: schema_tag("dnum"), graph: GraphRef::of(g), d_max, value, witness }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDoc {
    pub witness: Vec<usize>,
    pub order: u64,
    pub parity: String,
}

impl CertificateDoc {
    pub fn of(c: &InfinityCertificate) -> CertificateDoc {
        CertificateDoc { witness: c.witness.image().to_vec(), order: c.witness.order(), parity: c.parity().to_string() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Solved,
    ResourceBounded,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveDoc {
    pub schema: String,
    pub graph: GraphRef,
    pub first_player: Player,
    pub d: u8,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<Player>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub nodes_expanded: u64,
    pub memo_hits: u64,
    pub threads: usize,
}

impl SolveDoc {
    pub fn new(g: &Graph, d: u8, first_player: Player, threads: usize, outcome: Result<Player, String>, stats: SolveStats) -> SolveDoc {
        let (status, value, reason) = match outcome {
            Ok(p) => (Status::Solved, Some(p), None),
            Err(r) => (Status::ResourceBounded, None, Some(r)),
        };
        SolveDoc {
            schema: schema_tag("solve"),
            graph: GraphRef::of(g),
            first_player,
            d,
            status,
            value,
            reason,
            nodes_expanded: stats.nodes_expanded,
            memo_hits: stats.memo_hits,
            threads,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GnumStatus {
    Finite,
    Infinite,
    Unknown,
    ResourceBounded,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GnumDoc {
    pub schema: String,
    pub graph: GraphRef,
    pub first_player: Player,
    pub d_max: u8,
    pub status: GnumStatus,
    /// The finite value, or [`INFINITY`].
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unknown_at_least: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl GnumDoc {
    pub fn new(g: &Graph, first_player: Player, d_max: u8, r: Result<GameResult, String>) -> GnumDoc {
        let mut doc = GnumDoc {
            schema: schema_tag("gnum"),
            graph: GraphRef::of(g),
            first_player,
            d_max,
            status: GnumStatus::ResourceBounded,
            value: None,
            certificate: None,
            unknown_at_least: None,
            reason: None,
        };
        match r {
            Ok(GameResult::Finite(d)) => {
                doc.status = GnumStatus::Finite;
                doc.value = Some(d.into());
            }
            Ok(GameResult::InfiniteCertified(c)) => {
                doc.status = GnumStatus::Infinite;
                doc.value = Some(INFINITY.into());
                doc.certificate = Some(CertificateDoc::of(&c));
            }
            Ok(GameResult::UnknownAtLeast(k)) => {
                doc.status = GnumStatus::Unknown;
                doc.unknown_at_least = Some(k);
            }
            Err(reason) => doc.reason = Some(reason),
        }
        doc
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyDoc {
    pub schema: String,
    pub graph: GraphRef,
    pub strategy: String,
    pub role: Player,
    pub d: u8,
    pub first_player: Player,
    pub mode: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trials: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub games_played: u64,
    pub leaf_count: Option<u64>,
    pub failure_count: u64,
    /// Move lists `[[vertex, color], ...]` of the first losing games.
    pub failures: Vec<Vec<[usize; 2]>>,
    pub verified: bool,
}

pub fn moves_doc(moves: &[Move]) -> Vec<[usize; 2]> {
    moves.iter().map(|m| [m.vertex, m.color as usize]).collect()
}

impl VerifyDoc {
    pub fn of(g: &Graph, r: &VerificationReport) -> VerifyDoc {
        let (mode, trials, seed) = match r.mode {
            VerificationMode::Exhaustive => ("exhaustive", None, None),
            VerificationMode::Random { trials, seed } => ("random", Some(trials), Some(seed)),
        };
        VerifyDoc {
            schema: schema_tag("verify"),
            graph: GraphRef::of(g),
            strategy: r.strategy.clone(),
            role: r.role,
            d: r.d,
            first_player: r.first_player,
            mode: mode.to_string(),
            trials,
            seed,
            games_played: r.games_played,
            leaf_count: r.leaf_count,
            failure_count: r.failure_count,
            failures: r.failures.iter().map(|h| moves_doc(h)).collect(),
            verified: r.verified,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReplayDoc {
    pub schema: String,
    pub graph: GraphRef,
    pub d: u8,
    pub first_player: Player,
    pub moves: Vec<[usize; 2]>,
    pub colors: Vec<u8>,
    pub terminal: bool,
    /// Winner of the finished game; absent while moves remain.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub winner: Option<Player>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub to_move: Option<Player>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResourceDoc {
    pub schema: String,
    pub command: String,
    pub status: String,
    pub reason: String,
}

impl ResourceDoc {
    pub fn new(command: &str, reason: String) -> ResourceDoc {
        ResourceDoc { schema: schema_tag("resource"), command: command.into(), status: RESOURCE_BOUNDED.into(), reason }
    }
}
