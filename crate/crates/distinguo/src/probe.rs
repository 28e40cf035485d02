//! Experimental probes. Outcomes are evidence about single instances, not proofs.

use serde::{Deserialize, Serialize};

use distinguo_core::coloring::Color;
use distinguo_core::game::{game_distinguishing_number, solve_with, GameResult, SolverConfig};
use distinguo_core::graph::{make_family, Family};
use distinguo_core::{automorphism_group, Graph, Player};

use crate::output::{schema_tag, GraphRef, INFINITY, RESOURCE_BOUNDED};

pub const DISCLAIMER: &str = "experimental evidence for individual instances only, not a proof";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeProbe {
    pub p: usize,
    pub d: Color,
    pub first_player: Player,
    /// `Gentle`, `Rascal` or `resource-bounded`.
    pub outcome: String,
    pub nodes_expanded: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameValueProbe {
    pub first_player: Player,
    /// A number, [`INFINITY`], `>=k` or `resource-bounded`.
    pub outcome: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateProbe {
    pub graph: GraphRef,
    pub group_order: usize,
    /// Whether the graph has no automorphism of order 2.
    pub candidate: bool,
    pub values: Vec<GameValueProbe>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbeReport {
    pub schema: String,
    pub disclaimer: String,
    pub primes: Vec<PrimeProbe>,
    pub candidates: Vec<CandidateProbe>,
}

impl ProbeReport {
    pub fn new() -> ProbeReport {
        ProbeReport { schema: schema_tag("probe"), disclaimer: DISCLAIMER.into(), primes: Vec::new(), candidates: Vec::new() }
    }
}

impl Default for ProbeReport {
    fn default() -> ProbeReport {
        ProbeReport::new()
    }
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|q| q * q <= p).all(|q| !p.is_multiple_of(q))
}

/// Solves `C_p` with two colors, the Gentle first.
pub fn probe_prime(p: usize, config: &SolverConfig) -> PrimeProbe {
    let mut probe = PrimeProbe { p, d: 2, first_player: Player::Gentle, outcome: String::new(), nodes_expanded: 0, note: None };
    if !is_prime(p) || p < 3 {
        probe.outcome = "invalid".into();
        probe.note = Some(format!("{p} is not an odd prime"));
        return probe;
    }
    if p < 11 {
        probe.note = Some("control instance below the conjectured range".into());
    }
    match make_family(Family::Cycle, p).and_then(|g| solve_with(&g, 2, Player::Gentle, config)) {
        Ok(s) => {
            probe.outcome = s.winner.to_string();
            probe.nodes_expanded = s.stats.nodes_expanded;
        }
        Err(e) => {
            probe.outcome = RESOURCE_BOUNDED.into();
            probe.note = Some(e.to_string());
        }
    }
    probe
}

/// Game values of `g` with both openers, up to `d_max` colors, for graphs
/// without an automorphism of order 2.
pub fn probe_candidate(g: &Graph, d_max: Color, config: &SolverConfig) -> CandidateProbe {
    let aut = automorphism_group(g);
    let group_order = aut.as_ref().map_or(0, |a| a.order());
    let candidate = aut.as_ref().is_ok_and(|a| a.involution().is_none());
    let values = if candidate {
        [Player::Gentle, Player::Rascal]
            .into_iter()
            .map(|first| GameValueProbe {
                first_player: first,
                outcome: match game_distinguishing_number(g, first, d_max, config) {
                    Ok(GameResult::Finite(d)) => d.to_string(),
                    Ok(GameResult::InfiniteCertified(_)) => INFINITY.into(),
                    Ok(GameResult::UnknownAtLeast(k)) => format!(">={k}"),
                    Err(_) => RESOURCE_BOUNDED.into(),
                },
            })
            .collect()
    } else {
        Vec::new()
    };
    CandidateProbe { graph: GraphRef::of(g), group_order, candidate, values }
}
