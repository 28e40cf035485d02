use alloc::format;
use alloc::vec;

use super::{check_turn, fallback, shift_color, uncolored, Strategy, StrategyMeta};
use crate::coloring::PartialColoring;
use crate::error::{Error, Result};
use crate::game::{GameState, Move, Player};
use crate::graph::{make_family, Family, Graph};

/// Two-coloring of `Q_n`, `n >= 5`, whose only non-trivial preserving
/// automorphism is the antipodal map.
///
/// Vertex `u` is the word whose `i`-th letter is bit `i − 1` of `u`. Color 1
/// goes on `v_i` (first `i` letters 1) for `0 <= i < n`, on `f = 10010…0`,
/// `c1 = 010…01`, `c2 = 110…01` and on all their complements; color 2
/// elsewhere. On `Q5` those words leave a preserving group of order 16, so
/// there `c1 = 01010` and `c2 = 11010` are used instead.
pub fn hypercube_s_coloring(n: usize) -> Result<PartialColoring> {
    if n == 5 {
        return s_coloring(n, 0b01010, 0b01011);
    }
    hypercube_s_coloring_as_printed(n)
}

/// The coloring above with `c1 = 010…01`, `c2 = 110…01` for every `n`.
pub fn hypercube_s_coloring_as_printed(n: usize) -> Result<PartialColoring> {
    if !(5..=6).contains(&n) {
        return Err(Error::InvalidParameter(format!("S-coloring is defined for 5 <= n <= 6 here, got {n}")));
    }
    s_coloring(n, 0b10 | 1 << (n - 1), 0b11 | 1 << (n - 1))
}

fn s_coloring(n: usize, c1: usize, c2: usize) -> Result<PartialColoring> {
    if !(5..=6).contains(&n) {
        return Err(Error::InvalidParameter(format!("S-coloring is defined for 5 <= n <= 6 here, got {n}")));
    }
    let all = (1usize << n) - 1;
    let mut colors = vec![2u8; 1 << n];
    let f = 0b1001;
    for u in (0..n).map(|i| (1usize << i) - 1).chain([f, c1, c2]) {
        colors[u] = 1;
        colors[u ^ all] = 1;
    }
    PartialColoring::new(colors, 2)
}

/// Words `0000, 1000, 1100, 1110, 1011` of `Q4`, as vertex numbers.
pub const Q4_S: [usize; 5] = [0b0000, 0b0001, 0b0011, 0b0111, 0b1101];

/// Gentle on `Q4` with 3 colors, Rascal first: answer in the antipodal vertex
/// with color offset +1 on `S`, −1 on its complement set, 0 elsewhere.
pub struct Q4Strategy {
    graph: Graph,
    meta: StrategyMeta,
}

pub fn gentle_q4(d: u8) -> Result<Q4Strategy> {
    if d < 3 {
        return Err(Error::Precondition(format!("the Q4 strategy needs 3 colors, got {d}")));
    }
    Ok(Q4Strategy {
        graph: make_family(Family::Hypercube, 4)?,
        meta: StrategyMeta::new("q4", Player::Gentle, 3, Player::Rascal, "antipodal answer, offsets +1/-1/0 modulo 3"),
    })
}

pub(crate) fn q4_offset(u: usize) -> i64 {
    if Q4_S.contains(&u) {
        1
    } else if Q4_S.contains(&(u ^ 15)) {
        -1
    } else {
        0
    }
}

impl Strategy for Q4Strategy {
    fn meta(&self) -> &StrategyMeta {
        &self.meta
    }

    fn choose(&self, g: &Graph, s: &GameState, _seed: u64) -> Result<Move> {
        check_turn(&self.meta, &self.graph, g, s)?;
        let Some(last) = s.last_move() else {
            return Ok(fallback(s));
        };
        let w = last.vertex ^ 15;
        if !uncolored(s, w) {
            return Ok(fallback(s));
        }
        let x = if last.color > 3 { 1 } else { last.color };
        Ok(Move::new(w, shift_color(x, q4_offset(last.vertex), 3)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::involutive::{find_bar, only_bar_preserving};

    #[test]
    fn s_coloring_size() {
        let c = hypercube_s_coloring(5).unwrap();
        assert_eq!(c.count(1), 16);
        assert!(hypercube_s_coloring(4).is_err());
    }

    #[test]
    fn s_coloring_only_bar_q5() {
        let q5 = make_family(Family::Hypercube, 5).unwrap();
        let bar = find_bar(&q5).unwrap().unwrap();
        assert!((0..32).all(|u| bar.opposite(u) == u ^ 31));
        let r = only_bar_preserving(&q5, &bar, &hypercube_s_coloring(5).unwrap()).unwrap();
        assert!(r.holds(), "{r:?}");
        let printed = only_bar_preserving(&q5, &bar, &hypercube_s_coloring_as_printed(5).unwrap()).unwrap();
        assert!(!printed.holds());
    }

    #[test]
    fn q4_sets_are_disjoint() {
        for u in Q4_S {
            assert!(!Q4_S.contains(&(u ^ 15)));
        }
        assert_eq!(q4_offset(0), 1);
        assert_eq!(q4_offset(15), -1);
        assert_eq!(q4_offset(5), 0);
    }
}
