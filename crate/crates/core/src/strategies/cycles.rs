//! Strategies on cycles. Vertex `x_i` of the cycle is vertex `i − 1`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::composite::composite_reply;
use super::{check_turn, fallback, other2, uncolored, Strategy, StrategyMeta};
use crate::coloring::{Color, PartialColoring};
use crate::error::{Error, Result};
use crate::game::{GameState, Move, Player};
use crate::graph::{make_family, Family, Graph, Vertex};

/// Dihedral symmetry `v ↦ (sign·v + shift) mod n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Frame {
    n: usize,
    reflect: bool,
    shift: usize,
}

impl Frame {
    fn identity(n: usize) -> Frame {
        Frame { n, reflect: false, shift: 0 }
    }

    fn apply(&self, v: Vertex) -> Vertex {
        let v = if self.reflect { (self.n - v % self.n) % self.n } else { v % self.n };
        (v + self.shift) % self.n
    }

    /// `self ∘ other`.
    fn then_after(&self, other: &Frame) -> Frame {
        let probe0 = self.apply(other.apply(0));
        let reflect = self.reflect != other.reflect;
        Frame { n: self.n, reflect, shift: probe0 }
    }

    fn inverse(&self) -> Frame {
        if self.reflect {
            *self
        } else {
            Frame { n: self.n, reflect: false, shift: (self.n - self.shift) % self.n }
        }
    }

    /// Rotation taking `v` to `x_1`.
    fn to_origin(n: usize, v: Vertex) -> Frame {
        Frame { n, reflect: false, shift: (n - v) % n }
    }
}

fn pair_partner(pairs: &[(Vertex, Vertex)], u: Vertex) -> Option<Vertex> {
    pairs.iter().find_map(|&(a, b)| {
        if a == u {
            Some(b)
        } else if b == u {
            Some(a)
        } else {
            None
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum C10Pairs {
    /// `{x3,x5}, {x8,x10}, {x4,x9}`: the reading under which the subcase wins.
    Repaired,
    /// `{x3,x5}, {x8,x10}, {x4,x7}` as printed (`x7` is already colored there).
    AsPrinted,
}

/// Gentle on `C8` or `C10`, two colors, Rascal first.
///
/// The Gentle answers the opening `(v, a)` with `(v̄, a)` on the antipodal
/// vertex. On `C8` he then answers inside the pairs `{x2,x4}, {x6,x8},
/// {x3,x7}` (relative to the opening at `x1`) with the other color. On `C10`
/// the Rascal's second move is brought to `x2` or `x3` by a symmetry fixing
/// `{x1, x6}`, and:
/// * same color as his opening, at `x2`: Gentle `x7` with it, pairs
///   `{x3,x5}, {x8,x10}, {x4,x9}`, other color;
/// * same color, at `x3`: Gentle `x4` with it, pairs `{x2,x5}, {x7,x9},
///   {x8,x10}`, other color;
/// * the other color: the Gentle makes `{x2, x3}` carry it, then copies the
///   color in `{x4,x5}` and `{x9,x10}` and plays the other color in `{x7,x8}`.
pub struct C8C10Strategy {
    graph: Graph,
    pairs: C10Pairs,
    meta: StrategyMeta,
}

pub fn gentle_c8_c10(n: usize) -> Result<C8C10Strategy> {
    c8_c10(n, C10Pairs::Repaired)
}

/// The `C10` strategy with the first same-color subcase paired exactly as
/// printed: `{x3,x5}, {x8,x10}, {x4,x7}` after the Gentle colors `x7`. Where
/// that pairing has no move the Gentle takes the lowest free vertex.
pub fn gentle_c10_as_printed() -> Result<C8C10Strategy> {
    c8_c10(10, C10Pairs::AsPrinted)
}

fn c8_c10(n: usize, pairs: C10Pairs) -> Result<C8C10Strategy> {
    if n != 8 && n != 10 {
        return Err(Error::Precondition(format!("pairing strategy exists for C8 and C10 only, got C{n}")));
    }
    let name = match (n, pairs) {
        (8, _) => "c8",
        (_, C10Pairs::Repaired) => "c10",
        (_, C10Pairs::AsPrinted) => "c10-as-printed",
    };
    Ok(C8C10Strategy {
        graph: make_family(Family::Cycle, n)?,
        pairs,
        meta: StrategyMeta::new(name, Player::Gentle, 2, Player::Rascal, "antipodal answer, then fixed vertex pairs"),
    })
}

/// Elements of the stabilizer of `{x1, x6}` in the symmetries of `C10`.
const C10_STABILIZER: [Frame; 4] = [
    Frame { n: 10, reflect: false, shift: 0 },
    Frame { n: 10, reflect: true, shift: 0 },
    Frame { n: 10, reflect: false, shift: 5 },
    Frame { n: 10, reflect: true, shift: 5 },
];

/// Rules after the opening exchange: pairs and whether to copy the color.
struct PairRules {
    pairs: Vec<(Vertex, Vertex)>,
    copy: Vec<(Vertex, Vertex)>,
}

impl C8C10Strategy {
    fn plan(&self, s: &GameState) -> Option<Move> {
        let n = self.graph.n();
        let h = s.history();
        if h.len() != s.colored_count() || h.len().is_multiple_of(2) {
            return None;
        }
        let (v0, a0) = (h[0].vertex, h[0].color.min(2));
        let half = n / 2;
        if h.len() == 1 {
            return Some(Move::new((v0 + half) % n, a0));
        }
        let origin = Frame::to_origin(n, v0);
        let (frame, rules, second) = if n == 8 {
            let rules = PairRules { pairs: vec![(1, 3), (5, 7), (2, 6)], copy: vec![] };
            (origin, rules, None)
        } else {
            let r2 = h[2];
            let u = origin.apply(r2.vertex);
            let tau = C10_STABILIZER.iter().find(|t| matches!(t.apply(u), 1 | 2))?;
            let frame = tau.then_after(&origin);
            let at_x2 = tau.apply(u) == 1;
            let same = r2.color.min(2) == a0;
            let (rules, second) = match (same, at_x2) {
                (true, true) => {
                    let third = match self.pairs {
                        C10Pairs::Repaired => (3, 8),
                        C10Pairs::AsPrinted => (3, 6),
                    };
                    (PairRules { pairs: vec![(2, 4), (7, 9), third], copy: vec![] }, Move::new(6, a0))
                }
                (true, false) => (PairRules { pairs: vec![(1, 4), (6, 8), (7, 9)], copy: vec![] }, Move::new(3, a0)),
                (false, _) => {
                    let other = if at_x2 { 2 } else { 1 };
                    let rules = PairRules { pairs: vec![(3, 4), (6, 7), (8, 9)], copy: vec![(3, 4), (8, 9)] };
                    (rules, Move::new(other, other2(a0)))
                }
            };
            (frame, rules, Some(second))
        };
        let back = frame.inverse();
        if h.len() == 3 {
            if let Some(m) = second {
                return Some(Move::new(back.apply(m.vertex), m.color));
            }
        }
        let last = h[h.len() - 1];
        let u = frame.apply(last.vertex);
        let color_in = last.color.min(2);
        let copies = rules.copy.iter().any(|&(a, b)| a == u || b == u);
        let color = if copies { color_in } else { other2(color_in) };
        match pair_partner(&rules.pairs, u).map(|w| back.apply(w)).filter(|&w| uncolored(s, w)) {
            Some(w) => Some(Move::new(w, color)),
            // outside the pairing: lowest free vertex, still answering with the other color
            None => s.coloring().uncolored_vertices().next().map(|w| Move::new(w, color)),
        }
    }
}

impl Strategy for C8C10Strategy {
    fn meta(&self) -> &StrategyMeta {
        &self.meta
    }

    fn choose(&self, g: &Graph, s: &GameState, _seed: u64) -> Result<Move> {
        check_turn(&self.meta, &self.graph, g, s)?;
        Ok(match self.plan(s) {
            Some(m) if s.is_legal(m) => m,
            _ => fallback(s),
        })
    }
}

/// Two-coloring of `C_{2n}`, `n >= 6`: color 1 on `u = x1, v = x2, w = x4`
/// and their antipodes, color 2 elsewhere.
pub fn even_cycle_coloring(two_n: usize) -> Result<PartialColoring> {
    if two_n % 2 == 1 || two_n < 12 {
        return Err(Error::Precondition(format!("needs an even cycle of length at least 12, got {two_n}")));
    }
    let n = two_n / 2;
    let mut colors = vec![2u8; two_n];
    for v in [0, 1, 3, n, n + 1, n + 3] {
        colors[v] = 1;
    }
    PartialColoring::new(colors, 2)
}

/// Gentle on `C9`, two colors, Gentle first.
///
/// The Gentle opens `x1` with 1. If the Rascal answers with color 1 at
/// `y`, the Gentle puts 2 on the fixed vertex of the reflection exchanging
/// `x1` and `y`; if he answers with 2 at `y`, the Gentle puts 1 on the
/// reflection of `x1` through `y`. Up to the reflection fixing `x1`, the
/// two 1s are then at distance 1, 2, 3 or 4, and:
/// * distance 3 (`x1, x4` with 2 on `x7`): residue-class scheme modulo 3;
/// * distance 1: `O = {x3,x9}`, `O' = {x5,x7}`, `S = {x4,x8}`;
/// * distance 2: `S = {x6,x7}`, `O = {x4,x9}`, `O' = {x5,x8}` (the sets
///   `S = {x4,x6}`, `O = {x5,x8}`, `O' = {x7,x9}` lose here, see
///   [`gentle_c9_as_printed`]);
/// * distance 4: `S = {x2,x4}`, `O = {x6,x9}`, `O' = {x7,x8}`;
///
/// answering in the Rascal's pair with the other color in `O`, `O'` and the
/// same color in `S`.
pub struct C9Strategy {
    graph: Graph,
    as_printed: bool,
    meta: StrategyMeta,
}

pub fn gentle_c9() -> Result<C9Strategy> {
    c9(false)
}

/// The `C9` strategy with `S = {x4,x6}`, `O = {x5,x8}`, `O' = {x7,x9}` at
/// distance 2.
pub fn gentle_c9_as_printed() -> Result<C9Strategy> {
    c9(true)
}

fn c9(as_printed: bool) -> Result<C9Strategy> {
    Ok(C9Strategy {
        graph: make_family(Family::Cycle, 9)?,
        as_printed,
        meta: StrategyMeta::new(
            if as_printed { "c9-as-printed" } else { "c9" },
            Player::Gentle,
            2,
            Player::Gentle,
            "four opening cases, then monochromatic S and split O, O'",
        ),
    })
}

impl C9Strategy {
    fn plan(&self, s: &GameState) -> Option<Move> {
        let h = s.history();
        if h.len() != s.colored_count() || h.len() % 2 == 1 {
            return None;
        }
        if h.is_empty() {
            return Some(Move::new(0, 1));
        }
        if h[0] != Move::new(0, 1) {
            return None;
        }
        let (y, a) = (h[1].vertex, h[1].color.min(2));
        // 5 = 1/2 modulo 9
        let (z, two_at) = if a == 1 { (y, (5 * y) % 9) } else { ((2 * y) % 9, y) };
        if h.len() == 2 {
            return Some(if a == 1 { Move::new(two_at, 2) } else { Move::new(z, 1) });
        }
        let frame = if z <= 4 { Frame::identity(9) } else { Frame { n: 9, reflect: true, shift: 0 } };
        let dist = frame.apply(z);
        let last = h[h.len() - 1];
        let u = frame.apply(last.vertex);
        let color_in = last.color.min(2);
        let reply = if dist == 3 {
            let canon: Vec<Color> = (0..9).map(|x| s.colors()[frame.apply(x)].min(2)).collect();
            composite_reply(9, 3, 3, &canon, Move::new(u, color_in))?
        } else {
            let (same, split): ((Vertex, Vertex), [(Vertex, Vertex); 2]) = match dist {
                1 => ((3, 7), [(2, 8), (4, 6)]),
                2 if self.as_printed => ((3, 5), [(4, 7), (6, 8)]),
                2 => ((5, 6), [(3, 8), (4, 7)]),
                4 => ((1, 3), [(5, 8), (6, 7)]),
                _ => return None,
            };
            if let Some(w) = pair_partner(&[same], u) {
                Move::new(w, color_in)
            } else {
                Move::new(pair_partner(&split, u)?, other2(color_in))
            }
        };
        // the frame is an involution
        Some(Move::new(frame.apply(reply.vertex), reply.color))
    }
}

impl Strategy for C9Strategy {
    fn meta(&self) -> &StrategyMeta {
        &self.meta
    }

    fn choose(&self, g: &Graph, s: &GameState, _seed: u64) -> Result<Move> {
        check_turn(&self.meta, &self.graph, g, s)?;
        Ok(match self.plan(s) {
            Some(m) if s.is_legal(m) => m,
            _ => fallback(s),
        })
    }
}

/// Gentle on a prime cycle `C_p`, `p > 5`, three colors, Gentle first.
///
/// While the Rascal copies the Gentle's last color: open with 1, then play 2,
/// then 1 on the fixed vertex of the reflection swapping the two 2s (if
/// free), then 1 until the last move, which is 3. Once the Rascal deviates,
/// the Gentle plays the color making all three color counts odd and from then
/// on copies the Rascal's last color. Vertices are the lowest free ones
/// unless stated.
pub struct PrimeCycleStrategy {
    graph: Graph,
    p: usize,
    meta: StrategyMeta,
}

pub fn gentle_prime_cycle(p: usize) -> Result<PrimeCycleStrategy> {
    let prime = p >= 2 && (2..).take_while(|q| q * q <= p).all(|q| !p.is_multiple_of(q));
    if p <= 5 || !prime {
        return Err(Error::Precondition(format!("needs a prime cycle length above 5, got {p}")));
    }
    Ok(PrimeCycleStrategy {
        graph: make_family(Family::Cycle, p)?,
        p,
        meta: StrategyMeta::new(
            "prime-cycle",
            Player::Gentle,
            3,
            Player::Gentle,
            "parity of color counts, or two 2s and one 3 off the axis",
        ),
    })
}

/// Index of the first Rascal move (odd index) that does not copy the
/// preceding Gentle color.
pub(crate) fn first_deviation(h: &[Move]) -> Option<usize> {
    (1..h.len()).step_by(2).find(|&t| h[t].color != h[t - 1].color)
}

impl PrimeCycleStrategy {
    fn plan(&self, s: &GameState) -> Option<Move> {
        let h = s.history();
        if h.len() != s.colored_count() || h.len() % 2 == 1 {
            return None;
        }
        let lowest = s.coloring().uncolored_vertices().next()?;
        let last = h.last().copied();
        if let Some(t) = first_deviation(h) {
            if h.len() == t + 1 {
                let counts = |c: Color| s.colors().iter().filter(|&&x| x == c).count();
                let c = (1..=3).find(|&c| (1..=3).all(|x| (counts(x) + usize::from(x == c)) % 2 == 1))?;
                return Some(Move::new(lowest, c));
            }
            return Some(Move::new(lowest, last?.color));
        }
        let free = s.n() - s.colored_count();
        Some(match h.len() {
            0 => Move::new(0, 1),
            2 => Move::new(lowest, 2),
            4 => {
                let (u, w) = (h[2].vertex, h[3].vertex);
                let axis = (u + w) * (self.p + 1) / 2 % self.p;
                Move::new(if uncolored(s, axis) { axis } else { lowest }, 1)
            }
            _ if free == 1 => Move::new(lowest, 3),
            _ => Move::new(lowest, 1),
        })
    }
}

impl Strategy for PrimeCycleStrategy {
    fn meta(&self) -> &StrategyMeta {
        &self.meta
    }

    fn choose(&self, g: &Graph, s: &GameState, _seed: u64) -> Result<Move> {
        check_turn(&self.meta, &self.graph, g, s)?;
        Ok(match self.plan(s) {
            Some(m) if s.is_legal(m) => m,
            _ => fallback(s),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frames_compose() {
        let f = Frame { n: 10, reflect: true, shift: 3 };
        let g = Frame { n: 10, reflect: false, shift: 7 };
        let fg = f.then_after(&g);
        for v in 0..10 {
            assert_eq!(fg.apply(v), f.apply(g.apply(v)));
            assert_eq!(f.inverse().apply(f.apply(v)), v);
            assert_eq!(g.inverse().apply(g.apply(v)), v);
        }
    }

    #[test]
    fn c10_stabilizer_orbits() {
        for t in C10_STABILIZER {
            let mut fixed = [t.apply(0), t.apply(5)];
            fixed.sort();
            assert_eq!(fixed, [0, 5]);
        }
        let orbit = |u: usize| {
            let mut o: Vec<usize> = C10_STABILIZER.iter().map(|t| t.apply(u)).collect();
            o.sort();
            o
        };
        assert_eq!(orbit(1), [1, 4, 6, 9]);
        assert_eq!(orbit(2), [2, 3, 7, 8]);
    }

    #[test]
    fn even_cycle_coloring_shape() {
        let c = even_cycle_coloring(12).unwrap();
        assert_eq!(c.colors(), &[1, 1, 2, 1, 2, 2, 1, 1, 2, 1, 2, 2]);
        assert!(even_cycle_coloring(10).is_err());
        assert!(even_cycle_coloring(13).is_err());
    }

    #[test]
    fn constructors_validate() {
        assert!(gentle_c8_c10(9).is_err());
        assert!(gentle_prime_cycle(5).is_err());
        assert!(gentle_prime_cycle(9).is_err());
        assert!(gentle_prime_cycle(7).is_ok());
    }
}
