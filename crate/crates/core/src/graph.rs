//! Simple undirected graphs on at most 64 vertices, the standard families and
//! a few graph operations.
//!
//! Vertices are the dense integers `0..n`. Adjacency is a symmetric bitset
//! matrix with one `u64` row per vertex.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Largest supported vertex count (one `u64` adjacency row per vertex).
pub const MAX_VERTICES: usize = 64;

pub type Vertex = usize;

/// An immutable simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
    name: String,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("name", &self.name).field("n", &self.n).field("edges", &self.edges().collect::<Vec<_>>()).finish()
    }
}

/// The graph families with a canonical labeling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `C_n`, edges `{i, i+1 mod n}`.
    Cycle,
    /// `P_n`, edges `{i, i+1}`.
    Path,
    /// `K_n`.
    Complete,
    /// `Q_n`: vertex `u` is the binary word whose letter `i` (1-based) is bit `i-1` of `u`.
    Hypercube,
    /// `nK_2`: edges `{2i, 2i+1}`.
    DisjointK2,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Cycle => "cycle",
            Family::Path => "path",
            Family::Complete => "complete",
            Family::Hypercube => "hypercube",
            Family::DisjointK2 => "disjoint_k2",
        }
    }

    pub fn from_name(s: &str) -> Option<Family> {
        Some(match s {
            "cycle" | "C" => Family::Cycle,
            "path" | "P" => Family::Path,
            "complete" | "K" => Family::Complete,
            "hypercube" | "Q" => Family::Hypercube,
            "disjoint_k2" | "k2" | "nK2" => Family::DisjointK2,
            _ => return None,
        })
    }
}

/// Error-checked constructor for one of the canonical families.
pub fn make_family(kind: Family, param: usize) -> Result<Graph> {
    if param == 0 {
        return Err(Error::InvalidParameter(format!("{} requires a positive parameter", kind.name())));
    }
    let (n, name) = match kind {
        Family::Cycle => {
            if param < 3 {
                return Err(Error::InvalidParameter(format!("cycle requires n >= 3, got {param}")));
            }
            (param, format!("C{param}"))
        }
        Family::Path => (param, format!("P{param}")),
        Family::Complete => (param, format!("K{param}")),
        Family::Hypercube => {
            if param > 6 {
                return Err(Error::InvalidParameter(format!("Q{param} exceeds {MAX_VERTICES} vertices")));
            }
            (1usize << param, format!("Q{param}"))
        }
        Family::DisjointK2 => (2 * param, format!("{param}K2")),
    };
    let mut g = Graph::empty(n)?.with_name(name);
    match kind {
        Family::Cycle => {
            for i in 0..n {
                g.add_edge(i, (i + 1) % n);
            }
        }
        Family::Path => {
            for i in 1..n {
                g.add_edge(i - 1, i);
            }
        }
        Family::Complete => {
            for u in 0..n {
                for v in u + 1..n {
                    g.add_edge(u, v);
                }
            }
        }
        Family::Hypercube => {
            for u in 0..n {
                for bit in 0..param {
                    let v = u ^ (1 << bit);
                    if u < v {
                        g.add_edge(u, v);
                    }
                }
            }
        }
        Family::DisjointK2 => {
            for i in 0..param {
                g.add_edge(2 * i, 2 * i + 1);
            }
        }
    }
    Ok(g)
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::InvalidGraph("a graph needs at least one vertex".into()));
        }
        if n > MAX_VERTICES {
            return Err(Error::InvalidGraph(format!("{n} vertices exceeds the limit of {MAX_VERTICES}")));
        }
        Ok(Graph { n, rows: vec![0; n], name: String::new() })
    }

    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { vertex: u.max(v), n });
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Graph {
        self.name = name.into();
        self
    }

    fn add_edge(&mut self, u: Vertex, v: Vertex) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        (self.rows[u] >> v) & 1 == 1
    }

    /// Neighbor bitset of `u`.
    #[inline]
    pub fn row(&self, u: Vertex) -> u64 {
        self.rows[u]
    }

    pub fn degree(&self, u: Vertex) -> usize {
        self.rows[u].count_ones() as usize
    }

    pub fn neighbors(&self, u: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        BitIter(self.rows[u])
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n).flat_map(move |u| BitIter(self.rows[u] & u64::MAX.checked_shl(u as u32 + 1).unwrap_or(0)).map(move |v| (u, v)))
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.degree(u)).collect()
    }

    /// Graph with `{image[u], image[v]}` an edge iff `{u, v}` is one.
    pub fn relabel(&self, image: &[Vertex]) -> Result<Graph> {
        if image.len() != self.n {
            return Err(Error::InvalidParameter(format!("relabeling has length {}, graph has {} vertices", image.len(), self.n)));
        }
        let mut seen = 0u64;
        for &v in image {
            if v >= self.n || seen >> v & 1 == 1 {
                return Err(Error::InvalidParameter("relabeling is not a bijection".into()));
            }
            seen |= 1 << v;
        }
        let mut g = Graph::empty(self.n)?.with_name(self.name.clone());
        for (u, v) in self.edges() {
            g.add_edge(image[u], image[v]);
        }
        Ok(g)
    }

    /// Shortest-path distances from `u`; `None` marks unreachable vertices.
    pub fn distances_from(&self, u: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[u] = Some(0);
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            let dx = dist[x].unwrap();
            for y in self.neighbors(x) {
                if dist[y].is_none() {
                    dist[y] = Some(dx + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    pub fn distance(&self, u: Vertex, v: Vertex) -> Result<Option<usize>> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.distances_from(u)[v])
    }

    /// All-pairs distances, unreachable pairs encoded as `u8::MAX`.
    pub fn distance_matrix(&self) -> Vec<Vec<u8>> {
        (0..self.n).map(|u| self.distances_from(u).into_iter().map(|d| d.map_or(u8::MAX, |d| d as u8)).collect()).collect()
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Same labeled edge set, ignoring the name.
    pub fn same_structure(&self, other: &Graph) -> bool {
        self.n == other.n && self.rows == other.rows
    }
}

/// Edge iff non-edge in `g`.
pub fn complement(g: &Graph) -> Graph {
    let mask = if g.n == 64 { u64::MAX } else { (1u64 << g.n) - 1 };
    let rows = (0..g.n).map(|u| !g.rows[u] & mask & !(1u64 << u)).collect();
    let name = if g.name.is_empty() { String::new() } else { format!("co-{}", g.name) };
    Graph { n: g.n, rows, name }
}

/// Cartesian product `g □ h`; vertex `(u, x)` is numbered `u * h.n() + x`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    let n = g.n * h.n;
    let name = if g.name.is_empty() || h.name.is_empty() { String::new() } else { format!("{}x{}", g.name, h.name) };
    let mut p = Graph::empty(n)?.with_name(name);
    for u in 0..g.n {
        for (x, y) in h.edges() {
            p.add_edge(u * h.n + x, u * h.n + y);
        }
    }
    for x in 0..h.n {
        for (u, v) in g.edges() {
            p.add_edge(u * h.n + x, v * h.n + x);
        }
    }
    Ok(p)
}

/// `K_4 □ K_2` with the canonical labeling `(i, x) -> 2i + x`, `x = 0` for `l`.
pub fn k4_box_k2() -> Graph {
    let k4 = make_family(Family::Complete, 4).unwrap();
    let k2 = make_family(Family::Complete, 2).unwrap();
    cartesian_product(&k4, &k2).unwrap().with_name("K4xK2")
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.name.is_empty() {
            write!(f, "graph(n={}, m={})", self.n, self.edge_count())
        } else {
            f.write_str(&self.name)
        }
    }
}

/// Parses family specs like `cycle:8`, `Q:3` or `k4k2`.
pub fn parse_family_spec(spec: &str) -> Result<Graph> {
    if spec.eq_ignore_ascii_case("k4k2") || spec == "K4xK2" {
        return Ok(k4_box_k2());
    }
    let (kind, param) = spec.split_once(':').ok_or_else(|| Error::InvalidParameter(format!("expected NAME:PARAM, got {spec:?}")))?;
    let family = Family::from_name(kind).ok_or_else(|| Error::InvalidParameter(format!("unknown family {kind:?}")))?;
    let param = param.parse::<usize>().map_err(|_| Error::InvalidParameter(format!("bad family parameter {param:?}")))?;
    make_family(family, param)
}

/// Iterator over the set bits of a `u64`.
#[derive(Clone, Copy)]
pub struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(i)
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_regular(g: &Graph, k: usize) -> bool {
        (0..g.n()).all(|u| g.degree(u) == k)
    }

    #[test]
    fn family_shapes() {
        let c4 = make_family(Family::Cycle, 4).unwrap();
        assert_eq!((c4.n(), c4.edge_count()), (4, 4));
        assert!(is_regular(&c4, 2));

        let q3 = make_family(Family::Hypercube, 3).unwrap();
        assert_eq!((q3.n(), q3.edge_count()), (8, 12));
        assert!(is_regular(&q3, 3));

        let k2s = make_family(Family::DisjointK2, 3).unwrap();
        assert_eq!((k2s.n(), k2s.edge_count()), (6, 3));
        assert!(is_regular(&k2s, 1));
        assert!(k2s.has_edge(2, 3) && !k2s.has_edge(1, 2));
    }

    #[test]
    fn family_degree_sequences() {
        for n in 3..12 {
            assert!(is_regular(&make_family(Family::Cycle, n).unwrap(), 2));
            assert!(is_regular(&make_family(Family::Complete, n).unwrap(), n - 1));
            assert!(is_regular(&make_family(Family::DisjointK2, n).unwrap(), 1));
        }
        for n in 1..=6 {
            assert!(is_regular(&make_family(Family::Hypercube, n).unwrap(), n));
        }
    }

    #[test]
    fn family_rejects_bad_params() {
        assert!(make_family(Family::Cycle, 2).is_err());
        assert!(make_family(Family::Path, 0).is_err());
        assert!(make_family(Family::Hypercube, 7).is_err());
        assert!(make_family(Family::Complete, 65).is_err());
    }

    #[test]
    fn products() {
        let k4k2 = k4_box_k2();
        assert_eq!(k4k2.n(), 8);
        assert!(is_regular(&k4k2, 4));
        assert!(k4k2.has_edge(0, 1) && k4k2.has_edge(0, 2) && !k4k2.has_edge(0, 3));

        let k2 = make_family(Family::Complete, 2).unwrap();
        let sq = cartesian_product(&k2, &k2).unwrap();
        assert!(is_regular(&sq, 2));
        assert_eq!(sq.edge_count(), 4);

        let p3 = make_family(Family::Path, 3).unwrap();
        let c5 = make_family(Family::Cycle, 5).unwrap();
        let p = cartesian_product(&p3, &c5).unwrap();
        assert_eq!(p.n(), 15);
        assert_eq!(p.edge_count(), 3 * 5 + 5 * 2);
    }

    #[test]
    fn complement_basics() {
        let k4 = make_family(Family::Complete, 4).unwrap();
        assert_eq!(complement(&k4).edge_count(), 0);
        let q3 = make_family(Family::Hypercube, 3).unwrap();
        assert_eq!(complement(&complement(&q3)).rows, q3.rows);
        let q6 = make_family(Family::Hypercube, 6).unwrap();
        let co = complement(&q6);
        assert_eq!(co.edge_count(), 64 * 63 / 2 - q6.edge_count());
    }

    #[test]
    fn distances() {
        let q4 = make_family(Family::Hypercube, 4).unwrap();
        // 0000 and 1011
        assert_eq!(q4.distance(0b0000, 0b1101).unwrap(), Some(3));
        let c8 = make_family(Family::Cycle, 8).unwrap();
        assert_eq!(c8.distance(0, 4).unwrap(), Some(4));
        assert_eq!(c8.distance(3, 3).unwrap(), Some(0));
        let k2s = make_family(Family::DisjointK2, 2).unwrap();
        assert_eq!(k2s.distance(0, 2).unwrap(), None);
        assert!(k2s.distance(0, 9).is_err());
    }

    #[test]
    fn family_spec_parsing() {
        assert_eq!(parse_family_spec("cycle:9").unwrap().n(), 9);
        assert_eq!(parse_family_spec("Q:3").unwrap().n(), 8);
        assert_eq!(parse_family_spec("k4k2").unwrap().n(), 8);
        assert!(parse_family_spec("cycle").is_err());
        assert!(parse_family_spec("torus:3").is_err());
    }

    #[test]
    fn relabel_rejects_non_bijection() {
        let c4 = make_family(Family::Cycle, 4).unwrap();
        assert!(c4.relabel(&[0, 0, 1, 2]).is_err());
        let r = c4.relabel(&[1, 2, 3, 0]).unwrap();
        assert_eq!(r.edge_count(), 4);
    }
}
