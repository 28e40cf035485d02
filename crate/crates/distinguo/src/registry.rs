//! Named strategies for the `verify` command.

use distinguo_core::coloring::{distinguishing_number, Color, DistinguishingNumber, PartialColoring};
use distinguo_core::graph::{make_family, parse_family_spec, Family};
use distinguo_core::involutive::find_bar;
use distinguo_core::strategies::{
    even_cycle_coloring, gentle_c10_as_printed, gentle_c8_c10, gentle_c9, gentle_c9_as_printed, gentle_involutive, gentle_involutive_bar,
    gentle_k2_union_unchecked, gentle_k4k2, gentle_odd_composite_cycle, gentle_prime_cycle, gentle_prime_cyclic, gentle_q4,
    hypercube_s_coloring, lift_strategy, rascal_k2_union, rascal_mirror_strategy, Strategy,
};
use distinguo_core::{automorphism_group, Error, Graph, Player, Result};

pub struct Entry {
    pub name: &'static str,
    /// Graph used when none is given.
    pub default_graph: Option<&'static str>,
    pub about: &'static str,
}

pub const STRATEGIES: &[Entry] = &[
    Entry { name: "c8", default_graph: Some("cycle:8"), about: "Gentle on C8, 2 colors, Rascal first" },
    Entry { name: "c10", default_graph: Some("cycle:10"), about: "Gentle on C10, 2 colors, Rascal first" },
    Entry { name: "c10-as-printed", default_graph: Some("cycle:10"), about: "C10 with the unrepaired same-color pairs (loses)" },
    Entry { name: "c9", default_graph: Some("cycle:9"), about: "Gentle on C9, 2 colors, Gentle first" },
    Entry { name: "c9-as-printed", default_graph: Some("cycle:9"), about: "C9 with the unrepaired distance-2 pairs (loses)" },
    Entry { name: "prime-cycle", default_graph: Some("cycle:7"), about: "Gentle on a prime cycle above 5, 3 colors, Gentle first" },
    Entry {
        name: "odd-composite",
        default_graph: Some("cycle:15"),
        about: "Gentle on an odd composite cycle above 9, 2 colors, Gentle first",
    },
    Entry { name: "k4k2", default_graph: Some("k4k2"), about: "Gentle on K4xK2, 3 colors, Rascal first" },
    Entry { name: "q4", default_graph: Some("hypercube:4"), about: "Gentle on Q4, 3 colors, Rascal first" },
    Entry { name: "k2-union", default_graph: Some("disjoint_k2:3"), about: "Gentle on nK2, n+1 colors, Rascal first" },
    Entry { name: "rascal-k2-union", default_graph: Some("disjoint_k2:3"), about: "Rascal on nK2 with n colors" },
    Entry { name: "mirror", default_graph: Some("cycle:4"), about: "Rascal copying through an order-2 automorphism" },
    Entry { name: "involutive-bar", default_graph: Some("hypercube:5"), about: "Gentle on Q5, Q6 or C2n (n >= 6), 2 colors, Rascal first" },
    Entry { name: "involutive", default_graph: Some("hypercube:3"), about: "Gentle on an involutive graph, d^2+d-2 colors, Rascal first" },
    Entry { name: "prime-cyclic", default_graph: None, about: "Gentle on a graph whose group has odd prime order" },
];

pub fn lookup(name: &str) -> Option<&'static Entry> {
    STRATEGIES.iter().find(|e| e.name == name)
}

/// A strategy instance with the game it is meant for.
pub struct Built {
    pub strategy: Box<dyn Strategy>,
    pub d: Color,
    pub first_player: Player,
}

fn matches_family(g: &Graph, family: Family, param: usize) -> bool {
    make_family(family, param).is_ok_and(|h| h.same_structure(g))
}

fn hypercube_dim(g: &Graph) -> Option<usize> {
    let n = g.n();
    let k = n.trailing_zeros() as usize;
    (n.is_power_of_two() && matches_family(g, Family::Hypercube, k)).then_some(k)
}

fn base_coloring(g: &Graph) -> Result<PartialColoring> {
    if let Some(k) = hypercube_dim(g) {
        return hypercube_s_coloring(k);
    }
    if matches_family(g, Family::Cycle, g.n()) {
        return even_cycle_coloring(g.n());
    }
    Err(Error::Precondition("involutive-bar has a base coloring for Q5, Q6 and even cycles from C12 on".into()))
}

/// Lifts Gentle strategies built for fewer colors; other budgets are refused.
fn sized(strategy: Box<dyn Strategy>, d: Option<Color>) -> Result<(Box<dyn Strategy>, Color)> {
    let base = strategy.meta().required_d;
    match d {
        None => Ok((strategy, base)),
        Some(d) if d == base => Ok((strategy, d)),
        Some(d) if d > base => Ok((Box::new(lift_strategy(strategy, base, d)?), d)),
        Some(d) => Err(Error::Precondition(format!("strategy needs {base} colors, got {d}"))),
    }
}

/// Builds strategy `name` for `g`; `d` and `first` override the defaults.
pub fn build(name: &str, g: &Graph, d: Option<Color>, first: Option<Player>) -> Result<Built> {
    let entry = lookup(name).ok_or_else(|| Error::InvalidParameter(format!("unknown strategy {name:?}")))?;
    let need = |spec: &str| -> Result<()> {
        if parse_family_spec(spec)?.same_structure(g) {
            Ok(())
        } else {
            Err(Error::Precondition(format!("strategy {name} only plays on {spec}")))
        }
    };
    let n = g.n();
    let (strategy, d): (Box<dyn Strategy>, Color) = match entry.name {
        "c8" => {
            need("cycle:8")?;
            sized(Box::new(gentle_c8_c10(8)?), d)?
        }
        "c10" => {
            need("cycle:10")?;
            sized(Box::new(gentle_c8_c10(10)?), d)?
        }
        "c10-as-printed" => {
            need("cycle:10")?;
            sized(Box::new(gentle_c10_as_printed()?), d)?
        }
        "c9" => {
            need("cycle:9")?;
            sized(Box::new(gentle_c9()?), d)?
        }
        "c9-as-printed" => {
            need("cycle:9")?;
            sized(Box::new(gentle_c9_as_printed()?), d)?
        }
        "prime-cycle" => {
            need(&format!("cycle:{n}"))?;
            sized(Box::new(gentle_prime_cycle(n)?), d)?
        }
        "odd-composite" => {
            need(&format!("cycle:{n}"))?;
            sized(Box::new(gentle_odd_composite_cycle(n)?), d)?
        }
        "k4k2" => {
            need("k4k2")?;
            sized(Box::new(gentle_k4k2(3)?), d)?
        }
        "q4" => {
            need("hypercube:4")?;
            sized(Box::new(gentle_q4(3)?), d)?
        }
        "k2-union" => {
            need(&format!("disjoint_k2:{}", n / 2))?;
            let d = d.unwrap_or(n as Color / 2 + 1);
            (Box::new(gentle_k2_union_unchecked(n / 2, d)?), d)
        }
        "rascal-k2-union" => {
            need(&format!("disjoint_k2:{}", n / 2))?;
            let d = d.unwrap_or(n as Color / 2);
            let first = first.unwrap_or(Player::Rascal);
            (Box::new(rascal_k2_union(n / 2, d, first)?), d)
        }
        "mirror" => {
            let aut = automorphism_group(g)?;
            let sigma = aut.involution().ok_or_else(|| Error::Precondition("the graph has no automorphism of order 2".into()))?;
            let first = first.unwrap_or(if n.is_multiple_of(2) { Player::Gentle } else { Player::Rascal });
            (Box::new(rascal_mirror_strategy(g, sigma, first)?), d.unwrap_or(2))
        }
        "involutive-bar" => {
            let bar = find_bar(g)?.ok_or_else(|| Error::Precondition("no central fixed-point-free involution".into()))?;
            sized(Box::new(gentle_involutive_bar(g, &bar, &base_coloring(g)?)?), d)?
        }
        "involutive" => {
            let bar = find_bar(g)?.ok_or_else(|| Error::Precondition("no central fixed-point-free involution".into()))?;
            let base = match distinguishing_number(g, 8)? {
                DistinguishingNumber::Exact { witness, .. } => witness,
                DistinguishingNumber::AboveMax { .. } => {
                    return Err(Error::Precondition("no distinguishing coloring with at most 8 colors".into()))
                }
            };
            let s = gentle_involutive(g, &bar, &base, 63)?;
            let k = s.meta().required_d;
            let d = d.unwrap_or(k);
            (Box::new(gentle_involutive(g, &bar, &base, d)?), d)
        }
        "prime-cyclic" => {
            let first = first.unwrap_or(Player::Gentle);
            sized(Box::new(gentle_prime_cyclic(g, first)?), d)?
        }
        _ => unreachable!("registry entry without a builder"),
    };
    let first_player = first.unwrap_or(strategy.meta().first_player);
    Ok(Built { strategy, d, first_player })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_builds_on_its_default_graph() {
        for e in STRATEGIES {
            let Some(spec) = e.default_graph else { continue };
            let g = parse_family_spec(spec).unwrap();
            let b = build(e.name, &g, None, None).unwrap_or_else(|err| panic!("{}: {err}", e.name));
            assert_eq!(b.first_player, b.strategy.meta().first_player, "{}", e.name);
        }
    }

    #[test]
    fn wrong_graph_rejected() {
        let g = parse_family_spec("cycle:9").unwrap();
        assert!(build("c8", &g, None, None).is_err());
        assert!(build("q4", &g, None, None).is_err());
        assert!(build("nope", &g, None, None).is_err());
    }

    #[test]
    fn larger_budgets_lift() {
        let g = parse_family_spec("cycle:8").unwrap();
        let b = build("c8", &g, Some(4), None).unwrap();
        assert_eq!(b.d, 4);
        assert!(build("c8", &g, Some(1), None).is_err());
    }
}
