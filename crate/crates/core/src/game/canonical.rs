use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::{GameState, Player};
use crate::coloring::{Color, UNCOLORED};
use crate::symmetry::AutGroup;

/// Transposition-table key: equal for positions related by an automorphism
/// and a renaming of the colors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CanonicalKey {
    word: Word,
    to_move: Player,
}

impl CanonicalKey {
    pub(crate) fn from_word(word: &[u8], to_move: Player) -> CanonicalKey {
        CanonicalKey { word: Word::from_slice(word), to_move }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Word {
    Packed(u128),
    Bytes(Box<[u8]>),
}

impl Word {
    fn from_slice(w: &[u8]) -> Word {
        if w.len() <= 32 && w.iter().all(|&c| c < 16) {
            Word::Packed(w.iter().fold(0u128, |acc, &c| acc << 4 | c as u128))
        } else {
            Word::Bytes(w.into())
        }
    }
}

/// Precomputed images of every non-identity automorphism.
#[derive(Clone, Debug)]
pub struct Canonicalizer {
    n: usize,
    /// Non-identity elements sorted by image word.
    images: Vec<Box<[u8]>>,
    /// Common prefix length of each image with the one before it.
    lcp: Vec<usize>,
}

impl Canonicalizer {
    pub fn new(group: &AutGroup) -> Canonicalizer {
        let mut images: Vec<Box<[u8]>> = group.non_identity().map(|p| p.image().iter().map(|&v| v as u8).collect()).collect();
        images.sort();
        let lcp = (0..images.len())
            .map(|i| if i == 0 { 0 } else { images[i].iter().zip(images[i - 1].iter()).take_while(|(a, b)| a == b).count() })
            .collect();
        Canonicalizer { n: group.degree(), images, lcp }
    }

    pub fn key(&self, colors: &[Color], to_move: Player) -> CanonicalKey {
        let mut best = vec![0u8; self.n];
        let mut scratch = vec![0u8; self.n];
        self.canonical_word(colors, &mut best, &mut scratch);
        CanonicalKey::from_word(&best, to_move)
    }

    /// Lexicographically least first-occurrence renaming of `colors ∘ σ` over the group.
    pub fn canonical_word(&self, colors: &[Color], best: &mut [u8], scratch: &mut [u8]) {
        let mut map = [0u8; 256];
        let mut touched: Vec<Color> = Vec::with_capacity(16);
        rename_into(colors, None, &mut map, &mut touched, best, None);
        // an element sharing a longer prefix with one that lost at position p loses there too
        let mut lost_at = usize::MAX;
        for (img, &lcp) in self.images.iter().zip(&self.lcp) {
            if lost_at < lcp {
                continue;
            }
            let (ord, at) = rename_into(colors, Some(img), &mut map, &mut touched, scratch, Some(best));
            lost_at = usize::MAX;
            match ord {
                Ordering::Less => best.copy_from_slice(scratch),
                Ordering::Greater => lost_at = at,
                Ordering::Equal => {}
            }
        }
    }
}

/// Writes the renamed word of `colors ∘ img` into `out`, stopping early once
/// it is known to exceed `bound`.
fn rename_into(
    colors: &[Color],
    img: Option<&[u8]>,
    map: &mut [u8; 256],
    touched: &mut Vec<Color>,
    out: &mut [u8],
    bound: Option<&[u8]>,
) -> (Ordering, usize) {
    let mut next = 1u8;
    let mut at = colors.len();
    let mut ord = if bound.is_some() { Ordering::Equal } else { Ordering::Less };
    for i in 0..colors.len() {
        let c = match img {
            Some(img) => colors[img[i] as usize],
            None => colors[i],
        };
        let r = if c == UNCOLORED {
            0
        } else {
            if map[c as usize] == 0 {
                map[c as usize] = next;
                next += 1;
                touched.push(c);
            }
            map[c as usize]
        };
        out[i] = r;
        if ord == Ordering::Equal {
            ord = r.cmp(&bound.unwrap()[i]);
            if ord == Ordering::Greater {
                at = i;
                break;
            }
        }
    }
    for c in touched.drain(..) {
        map[c as usize] = 0;
    }
    (ord, at)
}

/// Canonical key of `s` under `aut`.
pub fn canonical_key(s: &GameState, aut: &AutGroup) -> CanonicalKey {
    Canonicalizer::new(aut).key(s.colors(), s.to_move())
}
