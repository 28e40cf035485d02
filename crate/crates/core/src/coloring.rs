//! Vertex colorings, color-preserving automorphisms and the distinguishing number.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::symmetry::{automorphism_group, AutGroup, Permutation};

/// Color `1..=d`; `0` means uncolored.
pub type Color = u8;

pub const UNCOLORED: Color = 0;

/// Assignment of colors (or [`UNCOLORED`]) to the vertices, with a budget `d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartialColoring {
    colors: Vec<Color>,
    d: Color,
}

impl PartialColoring {
    pub fn uncolored(n: usize, d: Color) -> PartialColoring {
        PartialColoring { colors: vec![UNCOLORED; n], d }
    }

    pub fn new(colors: Vec<Color>, d: Color) -> Result<PartialColoring> {
        if let Some((v, &c)) = colors.iter().enumerate().find(|&(_, &c)| c > d) {
            return Err(Error::InvalidColoring(format!("vertex {v} has color {c} outside 1..={d}")));
        }
        Ok(PartialColoring { colors, d })
    }

    /// Complete coloring using exactly the largest color present as budget.
    pub fn complete(colors: Vec<Color>) -> Result<PartialColoring> {
        let d = colors.iter().copied().max().unwrap_or(0);
        let c = PartialColoring::new(colors, d)?;
        c.require_complete()?;
        Ok(c)
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn budget(&self) -> Color {
        self.d
    }

    #[inline]
    pub fn get(&self, v: Vertex) -> Color {
        self.colors[v]
    }

    pub fn is_colored(&self, v: Vertex) -> bool {
        self.colors[v] != UNCOLORED
    }

    pub fn set(&mut self, v: Vertex, c: Color) -> Result<()> {
        if v >= self.colors.len() {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.colors.len() });
        }
        if c == UNCOLORED || c > self.d {
            return Err(Error::InvalidColoring(format!("color {c} outside 1..={}", self.d)));
        }
        self.colors[v] = c;
        Ok(())
    }

    pub(crate) fn clear(&mut self, v: Vertex) {
        self.colors[v] = UNCOLORED;
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn colored_count(&self) -> usize {
        self.colors.iter().filter(|&&c| c != UNCOLORED).count()
    }

    pub fn uncolored_vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.colors.iter().enumerate().filter(|&(_, &c)| c == UNCOLORED).map(|(v, _)| v)
    }

    pub fn is_complete(&self) -> bool {
        self.colors.iter().all(|&c| c != UNCOLORED)
    }

    pub fn require_complete(&self) -> Result<()> {
        let uncolored = self.len() - self.colored_count();
        if uncolored == 0 {
            Ok(())
        } else {
            Err(Error::IncompleteColoring { uncolored })
        }
    }

    /// Number of vertices carrying color `c`.
    pub fn count(&self, c: Color) -> usize {
        self.colors.iter().filter(|&&x| x == c).count()
    }
}

/// `c ∘ p = c` for a complete coloring.
pub fn preserves(p: &Permutation, c: &PartialColoring) -> Result<bool> {
    c.require_complete()?;
    if p.len() != c.len() {
        return Err(Error::InvalidParameter("permutation and coloring sizes differ".into()));
    }
    Ok((0..c.len()).all(|v| c.get(p.apply(v)) == c.get(v)))
}

/// `Aut_c(g)`, the subgroup of automorphisms preserving the complete coloring `c`.
pub fn color_preserving_subgroup(g: &Graph, c: &PartialColoring) -> Result<AutGroup> {
    check_size(g, c)?;
    c.require_complete()?;
    let aut = automorphism_group(g)?;
    Ok(aut.filter(|p| (0..c.len()).all(|v| c.get(p.apply(v)) == c.get(v))))
}

pub fn is_distinguishing(g: &Graph, c: &PartialColoring) -> Result<bool> {
    check_size(g, c)?;
    c.require_complete()?;
    Ok(Distinguisher::new(&automorphism_group(g)?).is_distinguishing(c.colors()))
}

fn check_size(g: &Graph, c: &PartialColoring) -> Result<()> {
    if g.n() != c.len() {
        return Err(Error::InvalidColoring(format!("coloring has {} entries, graph has {} vertices", c.len(), g.n())));
    }
    Ok(())
}

/// Fast repeated distinguishing tests against one group.
///
/// Keeps only the moved points of each non-identity element, smallest support
/// first: most non-distinguishing colorings are caught by a short involution.
#[derive(Clone, Debug)]
pub struct Distinguisher {
    moved: Vec<Vec<(u8, u8)>>,
}

impl Distinguisher {
    pub fn new(group: &AutGroup) -> Distinguisher {
        let mut moved: Vec<Vec<(u8, u8)>> = group
            .non_identity()
            .map(|p| (0..p.len()).filter(|&v| p.apply(v) != v).map(|v| (v as u8, p.apply(v) as u8)).collect())
            .collect();
        moved.sort_by_key(|m| m.len());
        Distinguisher { moved }
    }

    /// True iff no non-identity element maps `colors` to itself.
    #[inline]
    pub fn is_distinguishing(&self, colors: &[Color]) -> bool {
        !self.moved.iter().any(|m| m.iter().all(|&(v, w)| colors[v as usize] == colors[w as usize]))
    }

    /// Number of non-identity elements preserving `colors`.
    pub fn preserving_count(&self, colors: &[Color]) -> usize {
        self.moved.iter().filter(|m| m.iter().all(|&(v, w)| colors[v as usize] == colors[w as usize])).count()
    }
}

/// Outcome of a distinguishing-number search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DistinguishingNumber {
    /// Least `d`, with a distinguishing coloring using colors `1..=d`.
    Exact { d: Color, witness: PartialColoring },
    /// No distinguishing coloring with at most `d_max` colors.
    AboveMax { d_max: Color },
}

impl DistinguishingNumber {
    pub fn value(&self) -> Option<Color> {
        match self {
            DistinguishingNumber::Exact { d, .. } => Some(*d),
            DistinguishingNumber::AboveMax { .. } => None,
        }
    }
}

/// `D(g)`: least number of colors admitting a distinguishing coloring.
///
/// Colorings are enumerated in lexicographic order with first-use color
/// canonicalization (color `k+1` only after color `k` has appeared), which
/// removes the color-renaming symmetry exactly.
pub fn distinguishing_number(g: &Graph, d_max: Color) -> Result<DistinguishingNumber> {
    if d_max == 0 {
        return Err(Error::InvalidParameter("d_max must be at least 1".into()));
    }
    let aut = automorphism_group(g)?;
    let checker = Distinguisher::new(&aut);
    let n = g.n();
    for d in 1..=d_max {
        let mut colors = vec![UNCOLORED; n];
        if search_colorings(&checker, &mut colors, 0, 0, d) {
            let witness = PartialColoring::new(colors, d)?;
            return Ok(DistinguishingNumber::Exact { d, witness });
        }
    }
    Ok(DistinguishingNumber::AboveMax { d_max })
}

fn search_colorings(checker: &Distinguisher, colors: &mut [Color], v: usize, used: Color, d: Color) -> bool {
    if v == colors.len() {
        return checker.is_distinguishing(colors);
    }
    // with `used` colors so far, only colors 1..=used+1 are canonical
    for c in 1..=d.min(used + 1) {
        colors[v] = c;
        if search_colorings(checker, colors, v + 1, used.max(c), d) {
            return true;
        }
    }
    colors[v] = UNCOLORED;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complement, k4_box_k2, make_family, Family};

    fn all_colorings(n: usize, d: Color) -> Vec<Vec<Color>> {
        let mut out = vec![vec![]];
        for _ in 0..n {
            out = out.into_iter().flat_map(|w| (1..=d).map(move |c| [w.clone(), vec![c]].concat())).collect();
        }
        out
    }

    /// Path 0-1-2-3-4 plus a vertex 5 adjacent to 1 and 2.
    fn asymmetric() -> Graph {
        Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (2, 5)]).unwrap()
    }

    #[test]
    fn asymmetric_fixture_is_rigid() {
        assert!(automorphism_group(&asymmetric()).unwrap().is_trivial());
    }

    #[test]
    fn preserves_examples() {
        let c = PartialColoring::complete(vec![1, 2, 1, 2]).unwrap();
        assert!(preserves(&Permutation::identity(4), &c).unwrap());
        let rot = Permutation::from_fn(4, |v| (v + 1) % 4).unwrap();
        assert!(!preserves(&rot, &c).unwrap());
        let mono = PartialColoring::complete(vec![1; 4]).unwrap();
        assert!(preserves(&rot, &mono).unwrap());
        let partial = PartialColoring::new(vec![1, 0, 1, 2], 2).unwrap();
        assert!(matches!(preserves(&rot, &partial), Err(Error::IncompleteColoring { uncolored: 1 })));
    }

    #[test]
    fn preserving_subgroup_examples() {
        let c4 = make_family(Family::Cycle, 4).unwrap();
        // by hand: rotation by 2 and the two reflections through x0/x2 and x1/x3 survive
        let alt = PartialColoring::complete(vec![1, 2, 1, 2]).unwrap();
        assert_eq!(color_preserving_subgroup(&c4, &alt).unwrap().order(), 4);
        let mono = PartialColoring::complete(vec![1; 4]).unwrap();
        assert_eq!(color_preserving_subgroup(&c4, &mono).unwrap().order(), 8);
        let g = asymmetric();
        let any = PartialColoring::complete(vec![1, 1, 2, 1, 1, 1]).unwrap();
        assert!(color_preserving_subgroup(&g, &any).unwrap().is_trivial());
    }

    #[test]
    fn distinguishing_examples() {
        let g = asymmetric();
        assert!(is_distinguishing(&g, &PartialColoring::complete(vec![1; 6]).unwrap()).unwrap());
        let c6 = make_family(Family::Cycle, 6).unwrap();
        assert!(!is_distinguishing(&c6, &PartialColoring::complete(vec![1; 6]).unwrap()).unwrap());
        assert!(is_distinguishing(&c6, &PartialColoring::new(vec![1; 5], 1).unwrap()).is_err());
    }

    #[test]
    fn c6_has_one_distinguishing_two_coloring_up_to_symmetry() {
        let c6 = make_family(Family::Cycle, 6).unwrap();
        let aut = automorphism_group(&c6).unwrap();
        let checker = Distinguisher::new(&aut);
        let good: Vec<Vec<Color>> = all_colorings(6, 2).into_iter().filter(|w| checker.is_distinguishing(w)).collect();
        assert!(!good.is_empty());
        // every distinguishing coloring is an image of the first one under Aut x color swap
        let base = &good[0];
        for w in &good {
            let related = aut.elements().iter().any(|p| {
                let moved: Vec<Color> = (0..6).map(|v| base[p.apply(v)]).collect();
                moved == *w || moved.iter().map(|&c| 3 - c).collect::<Vec<_>>() == *w
            });
            assert!(related, "{w:?} not related to {base:?}");
        }
        // 12 group images, times 2 color swaps, each realized exactly once
        assert_eq!(good.len(), 12);
    }

    #[test]
    fn distinguishing_numbers() {
        for (n, expected) in [(1, 2), (2, 3), (3, 3), (4, 4)] {
            let g = make_family(Family::DisjointK2, n).unwrap();
            assert_eq!(distinguishing_number(&g, 6).unwrap().value(), Some(expected), "{n}K2");
        }
        for (k, expected) in [(2, 3), (3, 3), (4, 2)] {
            let q = make_family(Family::Hypercube, k).unwrap();
            assert_eq!(distinguishing_number(&q, 4).unwrap().value(), Some(expected), "Q{k}");
        }
        assert_eq!(distinguishing_number(&make_family(Family::Complete, 1).unwrap(), 1).unwrap().value(), Some(1));
        assert_eq!(distinguishing_number(&k4_box_k2(), 4).unwrap().value(), Some(3));
        assert_eq!(
            distinguishing_number(&make_family(Family::Complete, 5).unwrap(), 3).unwrap(),
            DistinguishingNumber::AboveMax { d_max: 3 }
        );
    }

    #[test]
    fn witness_is_distinguishing() {
        let c5 = make_family(Family::Cycle, 5).unwrap();
        match distinguishing_number(&c5, 4).unwrap() {
            DistinguishingNumber::Exact { d, witness } => {
                assert_eq!(d, 3);
                assert!(is_distinguishing(&c5, &witness).unwrap());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn complement_has_same_distinguishing_colorings() {
        let g = make_family(Family::Cycle, 6).unwrap();
        let co = complement(&g);
        for w in all_colorings(6, 2) {
            let c = PartialColoring::complete(w).unwrap();
            assert_eq!(is_distinguishing(&g, &c).unwrap(), is_distinguishing(&co, &c).unwrap());
        }
    }
}
