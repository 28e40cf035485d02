//! Graphs with a fixed-point-free involution commuting with every automorphism.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::coloring::{Color, PartialColoring};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::symmetry::{automorphism_group, AutGroup, Permutation};

/// The involution `u ↦ ū` and its blocks `{u, ū}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BarMap {
    image: Vec<Vertex>,
}

impl BarMap {
    /// Validates that `image` is a fixed-point-free involution.
    pub fn from_image(image: Vec<Vertex>) -> Result<BarMap> {
        let n = image.len();
        for (u, &w) in image.iter().enumerate() {
            if w >= n || w == u || image[w] != u {
                return Err(Error::InvalidParameter(format!("not a fixed-point-free involution at vertex {u}")));
            }
        }
        Ok(BarMap { image })
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn image(&self) -> &[Vertex] {
        &self.image
    }

    #[inline]
    pub fn opposite(&self, u: Vertex) -> Vertex {
        self.image[u]
    }

    /// Blocks `(u, ū)` with `u < ū`, ordered by `u`.
    pub fn blocks(&self) -> Vec<(Vertex, Vertex)> {
        (0..self.image.len()).filter(|&u| u < self.image[u]).map(|u| (u, self.image[u])).collect()
    }

    pub fn as_permutation(&self) -> Permutation {
        Permutation::from_image(self.image.clone()).expect("validated involution")
    }

    /// `σ(ū) = σ(u)‾` for every element of `group`.
    pub fn commutes_with(&self, group: &AutGroup) -> bool {
        group.elements().iter().all(|s| (0..self.len()).all(|u| s.apply(self.image[u]) == self.image[s.apply(u)]))
    }
}

/// The lexicographically least fixed-point-free involution commuting with
/// all of `Aut(g)`, if any.
pub fn find_bar(g: &Graph) -> Result<Option<BarMap>> {
    let aut = automorphism_group(g)?;
    Ok(find_bar_in(&aut))
}

/// As [`find_bar`], for an explicit group.
pub fn find_bar_in(aut: &AutGroup) -> Option<BarMap> {
    let n = aut.degree();
    if n % 2 == 1 {
        return None;
    }
    let gens: Vec<&[Vertex]> = aut.generators().iter().map(|p| p.image()).collect();
    let mut bar = vec![usize::MAX; n];
    if extend_bar(&gens, &mut bar) {
        let map = BarMap::from_image(bar).ok()?;
        debug_assert!(map.commutes_with(aut));
        Some(map)
    } else {
        None
    }
}

fn extend_bar(gens: &[&[Vertex]], bar: &mut Vec<Vertex>) -> bool {
    let Some(u) = bar.iter().position(|&b| b == usize::MAX) else {
        return true;
    };
    for w in u + 1..bar.len() {
        if bar[w] != usize::MAX {
            continue;
        }
        let saved = bar.clone();
        if assign(gens, bar, u, w) && extend_bar(gens, bar) {
            return true;
        }
        *bar = saved;
    }
    false
}

/// Sets `ū = w` and everything forced by commuting with the generators.
fn assign(gens: &[&[Vertex]], bar: &mut [Vertex], u: Vertex, w: Vertex) -> bool {
    let mut work = vec![(u, w)];
    while let Some((x, y)) = work.pop() {
        if x == y {
            return false;
        }
        match (bar[x], bar[y]) {
            (a, b) if a == y && b == x => continue,
            (a, b) if a == usize::MAX && b == usize::MAX => {
                bar[x] = y;
                bar[y] = x;
            }
            _ => return false,
        }
        for s in gens {
            work.push((s[x], s[y]));
        }
    }
    true
}

/// `G′`: the same vertices with exactly the edges `{u, ū}`.
pub fn quotient_prime(g: &Graph, bar: &BarMap) -> Result<Graph> {
    if bar.len() != g.n() {
        return Err(Error::InvalidParameter("involution and graph sizes differ".into()));
    }
    Ok(Graph::from_edges(g.n(), &bar.blocks())?.with_name(format!("{}'", g.name())))
}

/// The sets `V_ij = {u : c(u) = i, c(ū) = j}` that are nonempty.
pub fn partition_vij(g: &Graph, bar: &BarMap, c: &PartialColoring) -> Result<BTreeMap<(Color, Color), Vec<Vertex>>> {
    if bar.len() != g.n() || c.len() != g.n() {
        return Err(Error::InvalidParameter("involution, coloring and graph sizes differ".into()));
    }
    c.require_complete()?;
    let mut parts: BTreeMap<(Color, Color), Vec<Vertex>> = BTreeMap::new();
    for u in 0..g.n() {
        parts.entry((c.get(u), c.get(bar.opposite(u)))).or_default().push(u);
    }
    Ok(parts)
}

/// Residues `r_ij` modulo `k = d² + d − 2` used by the Gentle to encode the
/// class `V_ij` of each block in the color difference across it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueTable {
    d: Color,
    k: u32,
    r: Vec<u32>,
}

impl ResidueTable {
    pub fn d(&self) -> Color {
        self.d
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// `r_ij`, for `1 <= i, j <= d`.
    pub fn r(&self, i: Color, j: Color) -> u32 {
        self.r[(i as usize - 1) * self.d as usize + (j as usize - 1)]
    }

    /// `δ_ij` for `i < j`: rank of `(i, j)` in lexicographic order, from 1.
    pub fn delta(&self, i: Color, j: Color) -> u32 {
        delta(self.d, i, j)
    }

    /// `(i, j, r_ij)` in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (Color, Color, u32)> + '_ {
        (1..=self.d).flat_map(move |i| (1..=self.d).map(move |j| (i, j, self.r(i, j))))
    }

    /// Checks the three separation properties the strategy relies on.
    pub fn check(&self) -> Result<()> {
        let k = self.k;
        let neg = |x: u32| (k - x % k) % k;
        let mut seen = vec![false; k as usize];
        for (i, j, r) in self.entries() {
            if r >= k || core::mem::replace(&mut seen[r as usize], true) {
                return Err(Error::Internal(format!("r_{i}{j} = {r} collides modulo {k}")));
            }
            if i != j && self.r(j, i) != neg(r) {
                return Err(Error::Internal(format!("r_{i}{j} and r_{j}{i} are not opposite modulo {k}")));
            }
        }
        for i in 1..=self.d {
            for j in 1..=self.d {
                if i != j && self.r(i, i) == neg(self.r(j, j)) {
                    return Err(Error::Internal(format!("r_{i}{i} is opposite to r_{j}{j} modulo {k}")));
                }
            }
        }
        Ok(())
    }
}

fn delta(d: Color, i: Color, j: Color) -> u32 {
    let (d, i, j) = (d as u32, i as u32, j as u32);
    // pairs (a, b) with a < i come first: sum over a of (d - a)
    (1..i).map(|a| d - a).sum::<u32>() + (j - i)
}

pub fn residue_table(d: Color) -> Result<ResidueTable> {
    if d < 2 {
        return Err(Error::InvalidParameter(format!("residue table needs d >= 2, got {d}")));
    }
    let du = d as u32;
    let k = du * du + du - 2;
    let half = du * (du - 1) / 2;
    let mut r = vec![0u32; (du * du) as usize];
    let idx = |i: u32, j: u32| ((i - 1) * du + (j - 1)) as usize;
    for i in 1..=du {
        for j in i + 1..=du {
            let v = delta(d, i as Color, j as Color);
            r[idx(i, j)] = v;
            r[idx(j, i)] = k - v;
        }
        r[idx(i, i)] = if i < du { half + i } else { 0 };
    }
    let table = ResidueTable { d, k, r };
    table.check()?;
    Ok(table)
}

/// Result of checking that Bar is the only non-trivial color-preserving automorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BarCheck {
    Holds,
    /// Bar is not an automorphism of the graph.
    BarNotAutomorphism,
    /// Bar does not preserve the coloring.
    BarNotPreserving,
    /// Another non-trivial automorphism preserves the coloring.
    OtherPreserving(Permutation),
}

impl BarCheck {
    pub fn holds(&self) -> bool {
        *self == BarCheck::Holds
    }
}

/// Whether `Aut_c(g) = {id, Bar}`, checked against the full group.
pub fn only_bar_preserving(g: &Graph, bar: &BarMap, c: &PartialColoring) -> Result<BarCheck> {
    if bar.len() != g.n() || c.len() != g.n() {
        return Err(Error::InvalidParameter("involution, coloring and graph sizes differ".into()));
    }
    c.require_complete()?;
    let b = bar.as_permutation();
    if !b.is_automorphism(g) {
        return Ok(BarCheck::BarNotAutomorphism);
    }
    let preserved = |p: &Permutation| (0..g.n()).all(|v| c.get(p.apply(v)) == c.get(v));
    if !preserved(&b) {
        return Ok(BarCheck::BarNotPreserving);
    }
    let aut = automorphism_group(g)?;
    for p in aut.non_identity() {
        if *p != b && preserved(p) {
            return Ok(BarCheck::OtherPreserving(p.clone()));
        }
    }
    Ok(BarCheck::Holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::distinguishing_number;
    use crate::graph::{make_family, Family};

    #[test]
    fn find_bar_examples() {
        let c6 = make_family(Family::Cycle, 6).unwrap();
        assert_eq!(find_bar(&c6).unwrap().unwrap().image(), &[3, 4, 5, 0, 1, 2]);
        let q3 = make_family(Family::Hypercube, 3).unwrap();
        let bar = find_bar(&q3).unwrap().unwrap();
        assert!((0..8).all(|u| bar.opposite(u) == u ^ 7));
        assert!(find_bar(&make_family(Family::Cycle, 5).unwrap()).unwrap().is_none());
    }

    #[test]
    fn find_bar_none_for_even_graph_without_one() {
        // K4: the group is S4, nothing central
        assert!(find_bar(&make_family(Family::Complete, 4).unwrap()).unwrap().is_none());
        // on P4 the least central involution is not itself an automorphism
        let bar = find_bar(&make_family(Family::Path, 4).unwrap()).unwrap().unwrap();
        assert_eq!(bar.image(), &[1, 0, 3, 2]);
    }

    #[test]
    fn bar_commutes_and_maps_blocks_to_blocks() {
        for g in [
            make_family(Family::Cycle, 8).unwrap(),
            make_family(Family::Hypercube, 4).unwrap(),
            make_family(Family::DisjointK2, 3).unwrap(),
        ] {
            let aut = automorphism_group(&g).unwrap();
            let bar = find_bar_in(&aut).unwrap();
            assert!(bar.commutes_with(&aut));
            for s in aut.elements() {
                for u in 0..g.n() {
                    let (a, b) = (s.apply(u), s.apply(bar.opposite(u)));
                    assert_eq!(bar.opposite(a), b);
                }
            }
        }
    }

    #[test]
    fn quotient_examples() {
        let c6 = make_family(Family::Cycle, 6).unwrap();
        let q = quotient_prime(&c6, &find_bar(&c6).unwrap().unwrap()).unwrap();
        assert_eq!(q.edge_count(), 3);
        assert!(q.has_edge(0, 3) && q.has_edge(1, 4) && q.has_edge(2, 5));
        let q3 = make_family(Family::Hypercube, 3).unwrap();
        let q = quotient_prime(&q3, &find_bar(&q3).unwrap().unwrap()).unwrap();
        assert_eq!(q.degree_sequence(), vec![1; 8]);

        let c8 = make_family(Family::Cycle, 8).unwrap();
        let q = quotient_prime(&c8, &find_bar(&c8).unwrap().unwrap()).unwrap();
        let d = distinguishing_number(&c8, 5).unwrap().value().unwrap();
        let dq = distinguishing_number(&q, 5).unwrap().value().unwrap();
        assert!(d <= dq);
    }

    #[test]
    fn partition_examples() {
        let c6 = make_family(Family::Cycle, 6).unwrap();
        let bar = find_bar(&c6).unwrap().unwrap();
        let mono = PartialColoring::complete(vec![1; 6]).unwrap();
        let p = partition_vij(&c6, &bar, &mono).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p[&(1, 1)], vec![0, 1, 2, 3, 4, 5]);
        let split = PartialColoring::complete(vec![1, 1, 1, 2, 2, 2]).unwrap();
        let p = partition_vij(&c6, &bar, &split).unwrap();
        assert_eq!(p[&(1, 2)].len(), 3);
        assert_eq!(p[&(2, 1)].len(), 3);
        assert!(partition_vij(&c6, &bar, &PartialColoring::new(vec![0; 6], 2).unwrap()).is_err());
    }

    #[test]
    fn residue_examples() {
        let t = residue_table(2).unwrap();
        assert_eq!(t.k(), 4);
        assert_eq!((t.r(1, 2), t.r(2, 1), t.r(1, 1), t.r(2, 2)), (1, 3, 2, 0));
        assert_eq!((t.r(1, 2) + t.r(2, 1)) % 4, 0);
        let t = residue_table(3).unwrap();
        assert_eq!(t.k(), 10);
        let mut all: Vec<u32> = t.entries().map(|(_, _, r)| r % 10).collect();
        all.sort();
        all.dedup();
        assert_eq!(all.len(), 9);
        assert_eq!((t.delta(1, 2), t.delta(1, 3), t.delta(2, 3)), (1, 2, 3));
        assert!(residue_table(1).is_err());
    }

    #[test]
    fn residue_properties_small_d() {
        for d in 2..=8 {
            residue_table(d).unwrap().check().unwrap();
        }
    }

    #[test]
    fn only_bar_examples() {
        let c6 = make_family(Family::Cycle, 6).unwrap();
        let bar = find_bar(&c6).unwrap().unwrap();
        let mono = PartialColoring::complete(vec![1; 6]).unwrap();
        assert!(matches!(only_bar_preserving(&c6, &bar, &mono).unwrap(), BarCheck::OtherPreserving(_)));
        let odd = PartialColoring::complete(vec![1, 2, 2, 2, 2, 2]).unwrap();
        assert_eq!(only_bar_preserving(&c6, &bar, &odd).unwrap(), BarCheck::BarNotPreserving);
        let p4 = make_family(Family::Path, 4).unwrap();
        let swap = BarMap::from_image(vec![1, 0, 3, 2]).unwrap();
        assert_eq!(only_bar_preserving(&p4, &swap, &PartialColoring::complete(vec![1; 4]).unwrap()).unwrap(), BarCheck::BarNotAutomorphism);
    }

    #[test]
    fn bar_map_validation() {
        assert!(BarMap::from_image(vec![1, 0, 2, 3]).is_err());
        assert!(BarMap::from_image(vec![1, 2, 0]).is_err());
        assert_eq!(BarMap::from_image(vec![2, 3, 0, 1]).unwrap().blocks(), vec![(0, 2), (1, 3)]);
    }
}
