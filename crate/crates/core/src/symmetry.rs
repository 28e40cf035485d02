//! Permutations, explicit automorphism groups, orbits and determining sets.
//!
//! Automorphism groups are enumerated in full. The backtracking maps vertices
//! `0, 1, 2, ...` in order and keeps, for every unmapped vertex, a bitset of
//! images still compatible with its degree profile and with its distances to
//! the vertices already mapped. Elements come out in lexicographic order of
//! their image arrays, so the identity is always element 0.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use hashbrown::HashSet;

use crate::error::{Error, Result};
use crate::graph::{BitIter, Graph, Vertex};

/// Default bound on the number of enumerated automorphisms.
pub const DEFAULT_GROUP_CAP: usize = 10_000_000;

/// A bijection of `0..n`; `image[v]` is the image of `v`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<Vertex>,
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.image)
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation { image: (0..n).collect() }
    }

    pub fn from_image(image: Vec<Vertex>) -> Result<Permutation> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            if v >= n || seen[v] {
                return Err(Error::InvalidParameter(format!("{image:?} is not a permutation")));
            }
            seen[v] = true;
        }
        Ok(Permutation { image })
    }

    /// Builds `v -> f(v)` on `0..n`.
    pub fn from_fn(n: usize, f: impl Fn(Vertex) -> Vertex) -> Result<Permutation> {
        Permutation::from_image((0..n).map(f).collect())
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    #[inline]
    pub fn apply(&self, v: Vertex) -> Vertex {
        self.image[v]
    }

    pub fn image(&self) -> &[Vertex] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(v, &w)| v == w)
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation { image: other.image.iter().map(|&v| self.image[v]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.len()];
        for (v, &w) in self.image.iter().enumerate() {
            image[w] = v;
        }
        Permutation { image }
    }

    /// Cycle decomposition, each cycle starting at its least vertex.
    pub fn cycles(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                cycle.push(v);
                v = self.image[v];
            }
            out.push(cycle);
        }
        out
    }

    /// Least `k >= 1` with `self^k = id`.
    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    pub fn fixed_points(&self) -> Vec<Vertex> {
        self.image.iter().enumerate().filter(|&(v, &w)| v == w).map(|(v, _)| v).collect()
    }

    pub fn is_automorphism(&self, g: &Graph) -> bool {
        // a bijection that maps edges to edges also maps non-edges to non-edges
        self.len() == g.n() && g.edges().all(|(u, v)| g.has_edge(self.image[u], self.image[v]))
    }
}

pub fn element_order(p: &Permutation) -> u64 {
    p.order()
}

pub fn fixed_points(p: &Permutation) -> Vec<Vertex> {
    p.fixed_points()
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// A permutation group given by the explicit list of its elements.
#[derive(Clone, Debug)]
pub struct AutGroup {
    n: usize,
    elements: Vec<Permutation>,
    generators: Vec<Permutation>,
}

impl AutGroup {
    fn from_elements(n: usize, mut elements: Vec<Permutation>) -> AutGroup {
        elements.sort();
        let generators = greedy_generators(n, &elements);
        AutGroup { n, elements, generators }
    }

    /// The group generated by `gens`, refusing to grow past `cap` elements.
    pub fn generated_by(n: usize, gens: &[Permutation], cap: usize) -> Result<AutGroup> {
        if let Some(p) = gens.iter().find(|p| p.len() != n) {
            return Err(Error::InvalidParameter(format!("generator {p:?} does not act on {n} points")));
        }
        let elements = closure(n, gens, cap)?;
        Ok(AutGroup::from_elements(n, elements))
    }

    /// Subgroup of elements satisfying `keep`; the caller guarantees closure.
    pub fn filter(&self, keep: impl Fn(&Permutation) -> bool) -> AutGroup {
        let elements: Vec<Permutation> = self.elements.iter().filter(|p| keep(p)).cloned().collect();
        AutGroup::from_elements(self.n, elements)
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn non_identity(&self) -> impl Iterator<Item = &Permutation> {
        self.elements.iter().filter(|p| !p.is_identity())
    }

    /// Orbit partition; cells sorted, ordered by least element.
    pub fn orbits(&self) -> Vec<Vec<Vertex>> {
        let mut cell = vec![usize::MAX; self.n];
        let mut out: Vec<Vec<Vertex>> = Vec::new();
        for v in 0..self.n {
            if cell[v] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![v];
            cell[v] = id;
            let mut i = 0;
            while i < members.len() {
                let x = members[i];
                for g in &self.generators {
                    let y = g.apply(x);
                    if cell[y] == usize::MAX {
                        cell[y] = id;
                        members.push(y);
                    }
                }
                i += 1;
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Orbit index of every vertex, indices following [`AutGroup::orbits`].
    pub fn orbit_ids(&self) -> Vec<usize> {
        let mut ids = vec![0; self.n];
        for (i, cell) in self.orbits().iter().enumerate() {
            for &v in cell {
                ids[v] = i;
            }
        }
        ids
    }

    /// True iff only the identity fixes every vertex of `s`.
    pub fn pointwise_stabilizer_is_trivial(&self, s: &[Vertex]) -> bool {
        self.non_identity().all(|p| s.iter().any(|&v| p.apply(v) != v))
    }

    /// Some element of order exactly 2, the least one in enumeration order.
    pub fn involution(&self) -> Option<&Permutation> {
        self.non_identity().find(|p| p.order() == 2)
    }
}

fn closure(n: usize, gens: &[Permutation], cap: usize) -> Result<Vec<Permutation>> {
    let id = Permutation::identity(n);
    let mut seen: HashSet<Permutation> = HashSet::new();
    seen.insert(id.clone());
    let mut queue = vec![id];
    let mut i = 0;
    while i < queue.len() {
        for g in gens {
            let y = queue[i].compose(g);
            if !seen.contains(&y) {
                if seen.len() >= cap {
                    return Err(Error::GroupTooLarge { cap });
                }
                seen.insert(y.clone());
                queue.push(y);
            }
        }
        i += 1;
    }
    Ok(queue)
}

/// Walks the (sorted) elements and keeps each one not yet generated by the
/// previously kept ones.
fn greedy_generators(n: usize, elements: &[Permutation]) -> Vec<Permutation> {
    let mut gens: Vec<Permutation> = Vec::new();
    let mut span: HashSet<Permutation> = HashSet::new();
    span.insert(Permutation::identity(n));
    for p in elements {
        if span.contains(p) {
            continue;
        }
        gens.push(p.clone());
        // extend the span to <gens>; every old element times the new generator
        // seeds the search
        let mut queue: Vec<Permutation> = span.iter().cloned().collect();
        let mut i = 0;
        while i < queue.len() {
            for g in &gens {
                let y = queue[i].compose(g);
                if span.insert(y.clone()) {
                    queue.push(y);
                }
            }
            i += 1;
        }
        if span.len() == elements.len() {
            break;
        }
    }
    gens
}

pub fn automorphism_group(g: &Graph) -> Result<AutGroup> {
    automorphism_group_capped(g, DEFAULT_GROUP_CAP)
}

/// Exact enumeration of `Aut(g)`; fails with [`Error::GroupTooLarge`] past `cap` elements.
pub fn automorphism_group_capped(g: &Graph, cap: usize) -> Result<AutGroup> {
    let n = g.n();
    let dist = g.distance_matrix();
    // by_dist[y][d] = vertices at distance d from y (u8::MAX bucket last)
    let max_d = dist.iter().flatten().filter(|&&d| d != u8::MAX).copied().max().unwrap_or(0) as usize;
    let buckets = max_d + 2;
    let bucket = |d: u8| if d == u8::MAX { buckets - 1 } else { d as usize };
    let mut by_dist = vec![vec![0u64; buckets]; n];
    for y in 0..n {
        for j in 0..n {
            by_dist[y][bucket(dist[j][y])] |= 1 << j;
        }
    }

    // degree plus sorted neighbor degrees
    let profile: Vec<(usize, Vec<usize>)> = (0..n)
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).map(|w| g.degree(w)).collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect();
    let mut cand = vec![0u64; n];
    for i in 0..n {
        for j in 0..n {
            if profile[i] == profile[j] {
                cand[i] |= 1 << j;
            }
        }
    }

    let mut search = AutSearch { n, dist: &dist, by_dist: &by_dist, bucket_of: &bucket, image: vec![0; n], found: Vec::new(), cap };
    search.extend(0, cand, 0)?;
    let found = search.found;
    let elements: Vec<Permutation> = found.into_iter().map(|image| Permutation { image }).collect();
    debug_assert!(elements.iter().all(|p| p.is_automorphism(g)));
    Ok(AutGroup::from_elements(n, elements))
}

struct AutSearch<'a, F: Fn(u8) -> usize> {
    n: usize,
    dist: &'a [Vec<u8>],
    by_dist: &'a [Vec<u64>],
    bucket_of: &'a F,
    image: Vec<Vertex>,
    found: Vec<Vec<Vertex>>,
    cap: usize,
}

impl<F: Fn(u8) -> usize> AutSearch<'_, F> {
    fn extend(&mut self, i: usize, cand: Vec<u64>, used: u64) -> Result<()> {
        if i == self.n {
            if self.found.len() >= self.cap {
                return Err(Error::GroupTooLarge { cap: self.cap });
            }
            self.found.push(self.image.clone());
            return Ok(());
        }
        for j in BitIter(cand[i] & !used) {
            self.image[i] = j;
            let mut next = cand.clone();
            let mut dead = false;
            for k in i + 1..self.n {
                next[k] &= self.by_dist[j][(self.bucket_of)(self.dist[k][i])] & !(used | 1 << j);
                if next[k] == 0 {
                    dead = true;
                    break;
                }
            }
            if !dead {
                self.extend(i + 1, next, used | 1 << j)?;
            }
        }
        Ok(())
    }
}

/// Orbit partition of `group` acting on the vertices of `g`.
pub fn orbits(group: &AutGroup, g: &Graph) -> Vec<Vec<Vertex>> {
    debug_assert_eq!(group.degree(), g.n());
    group.orbits()
}

/// True iff the pointwise stabilizer of `s` in `Aut(g)` is trivial.
pub fn is_determining_set(g: &Graph, s: &[Vertex]) -> Result<bool> {
    for &v in s {
        g.check_vertex(v)?;
    }
    Ok(automorphism_group(g)?.pointwise_stabilizer_is_trivial(s))
}

/// Sufficient condition for `s ⊆ V(Q_n)` to be determining: for every letter
/// position some two words of `s` differ exactly there.
pub fn hypercube_determining_condition(n: usize, s: &[Vertex]) -> bool {
    let members: HashSet<Vertex> = s.iter().copied().collect();
    (0..n).all(|bit| s.iter().any(|&u| members.contains(&(u ^ (1 << bit)))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complement, k4_box_k2, make_family, Family};

    fn rotation(n: usize, k: usize) -> Permutation {
        Permutation::from_fn(n, |v| (v + k) % n).unwrap()
    }

    fn reflection(n: usize, axis: usize) -> Permutation {
        Permutation::from_fn(n, |v| (2 * axis + n - v) % n).unwrap()
    }

    /// Brute force over all n! bijections.
    fn brute_force_order(g: &Graph) -> usize {
        fn rec(g: &Graph, img: &mut Vec<usize>, used: &mut Vec<bool>, count: &mut usize) {
            let i = img.len();
            if i == g.n() {
                *count += 1;
                return;
            }
            for j in 0..g.n() {
                if used[j] || (0..i).any(|k| g.has_edge(i, k) != g.has_edge(j, img[k])) {
                    continue;
                }
                used[j] = true;
                img.push(j);
                rec(g, img, used, count);
                img.pop();
                used[j] = false;
            }
        }
        let mut count = 0;
        rec(g, &mut Vec::new(), &mut vec![false; g.n()], &mut count);
        count
    }

    #[test]
    fn group_orders() {
        assert_eq!(automorphism_group(&make_family(Family::Cycle, 8).unwrap()).unwrap().order(), 16);
        assert_eq!(automorphism_group(&make_family(Family::Path, 4).unwrap()).unwrap().order(), 2);
        let q3 = make_family(Family::Hypercube, 3).unwrap();
        let aut = automorphism_group(&q3).unwrap();
        assert_eq!(aut.order(), 48);
        assert_eq!(brute_force_order(&q3), 48);
        assert!(aut.elements()[0].is_identity());
    }

    #[test]
    fn closed_form_orders() {
        let fact = |n: usize| (1..=n).product::<usize>();
        for n in 3..=10 {
            assert_eq!(automorphism_group(&make_family(Family::Cycle, n).unwrap()).unwrap().order(), 2 * n);
        }
        for n in 2..=9 {
            assert_eq!(automorphism_group(&make_family(Family::Path, n).unwrap()).unwrap().order(), 2);
        }
        for n in 1..=6 {
            assert_eq!(automorphism_group(&make_family(Family::Complete, n).unwrap()).unwrap().order(), fact(n));
        }
        for n in 1..=4 {
            let g = make_family(Family::DisjointK2, n).unwrap();
            assert_eq!(automorphism_group(&g).unwrap().order(), (1 << n) * fact(n));
        }
        assert_eq!(automorphism_group(&make_family(Family::Hypercube, 5).unwrap()).unwrap().order(), 3840);
        assert_eq!(automorphism_group(&k4_box_k2()).unwrap().order(), 48);
    }

    #[test]
    fn matches_brute_force_on_small_graphs() {
        let graphs = [
            make_family(Family::Cycle, 6).unwrap(),
            complement(&make_family(Family::Cycle, 7).unwrap()),
            make_family(Family::DisjointK2, 3).unwrap(),
            Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6)]).unwrap(),
            Graph::empty(5).unwrap(),
        ];
        for g in &graphs {
            assert_eq!(automorphism_group(g).unwrap().order(), brute_force_order(g), "{g:?}");
        }
    }

    #[test]
    fn group_is_closed_and_edge_preserving() {
        for g in [make_family(Family::Hypercube, 3).unwrap(), k4_box_k2(), make_family(Family::Cycle, 9).unwrap()] {
            let aut = automorphism_group(&g).unwrap();
            for p in aut.elements() {
                assert!(p.is_automorphism(&g));
                assert!(aut.contains(&p.inverse()));
                for q in aut.elements() {
                    assert!(aut.contains(&p.compose(q)));
                }
            }
            let regenerated = AutGroup::generated_by(g.n(), aut.generators(), 1000).unwrap();
            assert_eq!(regenerated.order(), aut.order());
        }
    }

    #[test]
    fn cap_is_enforced() {
        let k7 = make_family(Family::Complete, 7).unwrap();
        assert_eq!(automorphism_group_capped(&k7, 100).unwrap_err(), Error::GroupTooLarge { cap: 100 });
    }

    #[test]
    fn orbit_examples() {
        let c5 = make_family(Family::Cycle, 5).unwrap();
        let aut = automorphism_group(&c5).unwrap();
        assert_eq!(orbits(&aut, &c5), vec![vec![0, 1, 2, 3, 4]]);

        let p3 = make_family(Family::Path, 3).unwrap();
        assert_eq!(automorphism_group(&p3).unwrap().orbits(), vec![vec![0, 2], vec![1]]);

        let rot = AutGroup::generated_by(6, &[rotation(6, 1)], 100).unwrap();
        assert_eq!(rot.order(), 6);
        assert_eq!(rot.orbits(), vec![vec![0, 1, 2, 3, 4, 5]]);
    }

    #[test]
    fn subgroup_orbits_refine() {
        let q3 = make_family(Family::Hypercube, 3).unwrap();
        let aut = automorphism_group(&q3).unwrap();
        let full = aut.orbit_ids();
        for p in aut.elements().iter().take(20) {
            let sub = AutGroup::generated_by(8, std::slice::from_ref(p), 100).unwrap();
            for cell in sub.orbits() {
                assert!(cell.iter().all(|&v| full[v] == full[cell[0]]));
            }
        }
    }

    #[test]
    fn orders_and_fixed_points() {
        assert_eq!(element_order(&Permutation::identity(6)), 1);
        assert_eq!(element_order(&reflection(6, 0)), 2);
        assert_eq!(element_order(&rotation(6, 1)), 6);
        assert_eq!(element_order(&rotation(6, 2)), 3);

        assert_eq!(fixed_points(&reflection(5, 0)), vec![0]);
        // reflection of C6 swapping x0 and x1
        let edge_reflection = Permutation::from_fn(6, |v| (7 - v) % 6).unwrap();
        assert_eq!(edge_reflection.apply(0), 1);
        assert!(fixed_points(&edge_reflection).is_empty());
        assert_eq!(fixed_points(&Permutation::identity(5)), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn permutation_algebra() {
        let r = rotation(7, 3);
        assert!(r.compose(&r.inverse()).is_identity());
        assert_eq!(r.compose(&rotation(7, 4)), Permutation::identity(7));
        assert!(Permutation::from_image(vec![0, 2, 2]).is_err());
        assert_eq!(r.cycles().len(), 1);
    }

    #[test]
    fn determining_sets() {
        let q2 = make_family(Family::Hypercube, 2).unwrap();
        // 00, 10, 01 (letter i is bit i-1)
        assert!(is_determining_set(&q2, &[0b00, 0b01, 0b10]).unwrap());
        let c6 = make_family(Family::Cycle, 6).unwrap();
        assert!(is_determining_set(&c6, &[0, 1, 2, 3, 4, 5]).unwrap());
        let c4 = make_family(Family::Cycle, 4).unwrap();
        assert!(!is_determining_set(&c4, &[0]).unwrap());
        assert!(is_determining_set(&c4, &[0, 7]).is_err());
    }

    #[test]
    fn hypercube_condition_examples() {
        // v0..v4 and the complement of v0 in Q5
        let s = [0b00000, 0b00001, 0b00011, 0b00111, 0b01111, 0b11111];
        assert!(hypercube_determining_condition(5, &s));
        let q5 = make_family(Family::Hypercube, 5).unwrap();
        assert!(is_determining_set(&q5, &s).unwrap());
        let all: Vec<usize> = (0..16).collect();
        assert!(hypercube_determining_condition(4, &all));
        assert!(!hypercube_determining_condition(2, &[0b00, 0b11]));
    }
}
