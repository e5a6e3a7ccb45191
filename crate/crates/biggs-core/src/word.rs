//! Words over the color alphabet: free reduction, evaluation to permutations,
//! tracks through the tree, and the named special words (rainbow, rotation
//! prefix, alternating, root-stabilizer palindromes, the length-2N relator).
//!
//! Generators are involutions, so free reduction just cancels equal adjacent
//! letters.

use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::tree::{vertex_count_formula, ColorId, ColoredTree, MAX_TREE_VERTICES};

/// A freely reduced color sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<ColorId>,
}

impl Word {
    pub fn empty() -> Self {
        Word { letters: Vec::new() }
    }

    /// Freely reduce a raw letter sequence by cancelling equal adjacent pairs
    /// until none remain. The result is independent of cancellation order.
    pub fn reduce(letters: &[ColorId]) -> Word {
        let mut stack: Vec<ColorId> = Vec::with_capacity(letters.len());
        for &c in letters {
            if stack.last() == Some(&c) {
                stack.pop();
            } else {
                stack.push(c);
            }
        }
        Word { letters: stack }
    }

    /// Wrap a sequence that is already reduced; panics otherwise.
    pub fn from_reduced(letters: Vec<ColorId>) -> Word {
        assert!(
            letters.windows(2).all(|w| w[0] != w[1]),
            "sequence is not freely reduced"
        );
        Word { letters }
    }

    pub fn letters(&self) -> &[ColorId] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn reversed(&self) -> Word {
        let mut letters = self.letters.clone();
        letters.reverse();
        Word { letters }
    }

    /// Concatenate and reduce.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word::reduce(&letters)
    }

    /// The permutation of the tree's vertices this word represents: the color
    /// involutions applied left-to-right. The empty word is the identity.
    pub fn evaluate(&self, tree: &ColoredTree) -> Permutation {
        evaluate_letters(tree, &self.letters)
    }

    /// Compact text form: color indices joined by dots, e.g. `0.1.2`; the
    /// empty word prints as the empty string.
    pub fn parse(s: &str) -> Result<Word> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Word::empty());
        }
        let letters: Vec<ColorId> = s
            .split('.')
            .map(|tok| {
                tok.parse::<u16>()
                    .map(ColorId)
                    .map_err(|_| Error::Parse(format!("bad color {tok:?}")))
            })
            .collect::<Result<_>>()?;
        Ok(Word::reduce(&letters))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, ".")?;
            }
            write!(f, "{}", c.0)?;
        }
        Ok(())
    }
}

/// Evaluate a raw letter sequence (reduction is irrelevant to the value, since
/// the generators are involutions).
pub fn evaluate_letters(tree: &ColoredTree, letters: &[ColorId]) -> Permutation {
    let n = tree.vertex_count();
    let mut images: Vec<u32> = (0..n as u32).collect();
    for &c in letters {
        for img in images.iter_mut() {
            *img = tree.neighbor(*img, c).0;
        }
    }
    Permutation::from_images(images).expect("pushing along edges is bijective")
}

/// The path traced from `v` by applying the letters in order; a mirrored
/// half-edge reflects in place (the vertex repeats). Returns the full vertex
/// path (length `letters.len() + 1`) and the endpoint.
pub fn track(tree: &ColoredTree, letters: &[ColorId], v: u32) -> (Vec<u32>, u32) {
    let mut path = Vec::with_capacity(letters.len() + 1);
    path.push(v);
    let mut cur = v;
    for &c in letters {
        cur = tree.neighbor(cur, c).0;
        path.push(cur);
    }
    (path, cur)
}

/// `c_1 c_2 ... c_C`.
pub fn rainbow_word(color_count: u32) -> Word {
    assert!(color_count >= 2, "need at least two colors");
    Word::from_reduced((0..color_count as u16).map(ColorId).collect())
}

/// The first `N_{C,R}` letters of the infinite repetition of the rainbow word.
/// Reduced by construction: consecutive letters differ, including across the
/// seam.
pub fn rotation_prefix_word(color_count: u32, radius: u32) -> Result<Word> {
    assert!(color_count >= 2, "need at least two colors");
    let order: Vec<ColorId> = (0..color_count as u16).map(ColorId).collect();
    rotation_prefix_with_order(color_count, radius, &order)
}

fn rotation_prefix_with_order(
    color_count: u32,
    radius: u32,
    order: &[ColorId],
) -> Result<Word> {
    let n_big = vertex_count_formula(u64::from(color_count), u64::from(radius));
    let n = usize::try_from(&n_big)
        .ok()
        .filter(|&n| n <= MAX_TREE_VERTICES)
        .ok_or_else(|| Error::Capacity(format!("rotation word of length {n_big} too long")))?;
    let letters: Vec<ColorId> = (0..n).map(|i| order[i % order.len()]).collect();
    Ok(Word::from_reduced(letters))
}

/// `a b a b ...` truncated to `len` letters.
pub fn alternating_word(a: ColorId, b: ColorId, len: usize) -> Result<Word> {
    if a == b {
        return Err(Error::Parameter("alternating word needs distinct colors".into()));
    }
    let letters: Vec<ColorId> = (0..len).map(|i| if i % 2 == 0 { a } else { b }).collect();
    Ok(Word::from_reduced(letters))
}

/// The root-stabilizer palindromes: for each boundary vertex `v` and each
/// mirror color `c` at `v`, the geodesic from the root to `v`, then `c`, then
/// the reverse geodesic. Each has length `2R+1`; there are
/// `(#boundary vertices) * (C-1)` of them.
pub fn palindrome_words(tree: &ColoredTree) -> Vec<Word> {
    let mut out = Vec::new();
    for v in 0..tree.vertex_count() as u32 {
        if !tree.is_boundary(v) {
            continue;
        }
        let down = tree.geodesic_colors(0, v);
        for c in tree.mirror_colors(v) {
            let mut letters = down.clone();
            letters.push(c);
            letters.extend(down.iter().rev());
            out.push(Word::from_reduced(letters));
        }
    }
    out
}

/// The identity word of length exactly `2 N_{C,R}`: the rotation prefix for
/// ascending color order followed by the rotation prefix for descending color
/// order. The two halves do not cancel at the seam, so the concatenation is
/// freely reduced.
pub fn relator_2n(color_count: u32, radius: u32) -> Result<Word> {
    if color_count < 3 {
        return Err(Error::Parameter(
            "the length-2N relator needs at least three colors".into(),
        ));
    }
    let ascending: Vec<ColorId> = (0..color_count as u16).map(ColorId).collect();
    let descending: Vec<ColorId> = (0..color_count as u16).rev().map(ColorId).collect();
    let fwd = rotation_prefix_with_order(color_count, radius, &ascending)?;
    let bwd = rotation_prefix_with_order(color_count, radius, &descending)?;
    let mut letters = fwd.letters;
    letters.extend(bwd.letters);
    // N is never divisible by C, so the forward half does not end with the
    // last color and nothing cancels.
    Ok(Word::from_reduced(letters))
}

/// Exhaustively enumerate nonempty reduced words of length at most `max_len`
/// and report whether any fixes `v`. Returns the first fixing word found (in
/// length-then-lexicographic order) if one exists.
pub fn shortest_fixing_word(
    tree: &ColoredTree,
    v: u32,
    max_len: usize,
) -> Option<Word> {
    // Depth-first over non-backtracking words, shortest first.
    let colors: Vec<ColorId> = tree.colors().collect();
    for len in 1..=max_len {
        let mut letters: Vec<ColorId> = Vec::with_capacity(len);
        if let Some(w) = search_fixing(tree, v, v, &colors, &mut letters, len) {
            return Some(w);
        }
    }
    None
}

fn search_fixing(
    tree: &ColoredTree,
    start: u32,
    cur: u32,
    colors: &[ColorId],
    letters: &mut Vec<ColorId>,
    target_len: usize,
) -> Option<Word> {
    if letters.len() == target_len {
        return (cur == start).then(|| Word::from_reduced(letters.clone()));
    }
    for &c in colors {
        if letters.last() == Some(&c) {
            continue;
        }
        letters.push(c);
        let next = tree.neighbor(cur, c).0;
        if let Some(w) = search_fixing(tree, start, next, colors, letters, target_len) {
            return Some(w);
        }
        letters.pop();
    }
    None
}

/// Order of the word's permutation, as a big integer.
pub fn word_order(tree: &ColoredTree, word: &Word) -> BigUint {
    word.evaluate(tree).order()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{generator_perm, generators};

    fn t32() -> ColoredTree {
        ColoredTree::build(3, 2).unwrap()
    }

    #[test]
    fn reduce_examples() {
        let r = ColorId(0);
        let g = ColorId(1);
        let b = ColorId(2);
        assert_eq!(Word::reduce(&[r, g, g, b]).letters(), &[r, b]);
        assert!(Word::reduce(&[r, r]).is_empty());
        assert_eq!(Word::reduce(&[r, g, b]).letters(), &[r, g, b]);
        // Nested cancellation.
        assert!(Word::reduce(&[r, g, b, b, g, r]).is_empty());
    }

    #[test]
    fn parse_and_display() {
        let w = Word::parse("0.1.2").unwrap();
        assert_eq!(w.len(), 3);
        assert_eq!(w.to_string(), "0.1.2");
        assert!(Word::parse("").unwrap().is_empty());
        assert!(Word::parse("0.x").is_err());
    }

    #[test]
    fn rainbow_is_full_cycle() {
        let t = t32();
        let p = rainbow_word(3).evaluate(&t);
        assert!(p.is_n_cycle(10));
    }

    #[test]
    fn empty_word_is_identity() {
        let t = t32();
        assert!(Word::empty().evaluate(&t).is_identity());
    }

    #[test]
    fn track_of_rainbow_word() {
        let t = t32();
        let w = rainbow_word(3);
        let (path, end) = track(&t, w.letters(), 0);
        assert_eq!(path.len(), 4);
        // One rainbow step from the root lands on the first grandchild.
        assert_eq!(end, t.vertex_at_path(&[ColorId(0), ColorId(1)]));
        assert_eq!(end, w.evaluate(&t).image(0));
    }

    #[test]
    fn track_reflects_at_mirror() {
        let t = ColoredTree::build(3, 1).unwrap();
        let (path, end) = track(&t, &[ColorId(1)], 1);
        assert_eq!(path, vec![1, 1]);
        assert_eq!(end, 1);
    }

    #[test]
    fn track_agrees_with_evaluate_on_random_words() {
        let t = t32();
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut rand = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..1000 {
            let len = (rand() % 12) as usize;
            let mut letters = Vec::with_capacity(len);
            for _ in 0..len {
                let c = ColorId((rand() % 3) as u16);
                if letters.last() == Some(&c) {
                    continue;
                }
                letters.push(c);
            }
            let p = evaluate_letters(&t, &letters);
            for v in 0..t.vertex_count() as u32 {
                let (_, end) = track(&t, &letters, v);
                assert_eq!(end, p.image(v));
            }
        }
    }

    #[test]
    fn geodesic_pushing_exhaustive() {
        let t = t32();
        for u in 0..t.vertex_count() as u32 {
            for v in 0..t.vertex_count() as u32 {
                let colors = t.geodesic_colors(u, v);
                let p = evaluate_letters(&t, &colors);
                assert_eq!(p.image(u), v);
            }
        }
    }

    #[test]
    fn rotation_prefix_on_smallest_ball() {
        let t = ColoredTree::build(3, 1).unwrap();
        let w = rotation_prefix_word(3, 1).unwrap();
        assert_eq!(w.len(), 4);
        let p = w.evaluate(&t);
        assert_eq!(p.image(0), 0);
        assert_eq!(p.cycle_string(), "(1 2 3)");
    }

    #[test]
    fn rotation_prefix_cth_power_is_identity() {
        for (c, r) in [(3u32, 1u32), (3, 2), (4, 2)] {
            let t = ColoredTree::build(c, r).unwrap();
            let w = rotation_prefix_word(c, r).unwrap();
            let p = w.evaluate(&t);
            assert!(p.pow(u64::from(c)).is_identity(), "C={c} R={r}");
        }
    }

    #[test]
    fn rotation_maps_edge_colors_cyclically() {
        let t = t32();
        let rho = rotation_prefix_word(3, 2).unwrap().evaluate(&t);
        assert_eq!(rho.image(0), 0);
        for v in 1..t.vertex_count() as u32 {
            let (p, c) = t.parent(v).unwrap();
            let image_color = ColorId((c.0 + 1) % 3);
            // The rotated edge pair {rho(v), rho(p)} must be joined by an edge
            // of the successor color.
            let (u, mirrored) = t.neighbor(rho.image(v), image_color);
            assert!(!mirrored);
            assert_eq!(u, rho.image(p));
        }
    }

    #[test]
    fn alternating_word_shape() {
        let w = alternating_word(ColorId(0), ColorId(1), 5).unwrap();
        assert_eq!(
            w.letters(),
            &[ColorId(0), ColorId(1), ColorId(0), ColorId(1), ColorId(0)]
        );
        assert!(alternating_word(ColorId(0), ColorId(0), 3).is_err());
    }

    #[test]
    fn alternating_word_fixes_root_and_far_boundary() {
        let t = t32();
        let w = alternating_word(ColorId(0), ColorId(1), 5).unwrap();
        let p = w.evaluate(&t);
        assert_eq!(p.image(0), 0);
        assert!(!p.is_identity());
        // Every boundary vertex whose down edge has the third color is fixed.
        for v in 0..t.vertex_count() as u32 {
            if t.is_boundary(v) && t.parent(v).unwrap().1 == ColorId(2) {
                assert_eq!(p.image(v), v);
            }
        }
    }

    #[test]
    fn palindrome_inventory() {
        let t = t32();
        let ps = palindrome_words(&t);
        assert_eq!(ps.len(), 12);
        for w in &ps {
            assert_eq!(w.len(), 5);
            assert_eq!(w.reversed(), *w);
            assert_eq!(w.evaluate(&t).image(0), 0);
        }

        let t = ColoredTree::build(2, 1).unwrap();
        let ps = palindrome_words(&t);
        assert_eq!(ps.len(), 2);
        assert!(ps.iter().all(|w| w.len() == 3));
    }

    #[test]
    fn relator_evaluates_to_identity() {
        for (c, r, n) in [(3u32, 1u32, 4usize), (3, 2, 10), (4, 2, 17)] {
            let t = ColoredTree::build(c, r).unwrap();
            let w = relator_2n(c, r).unwrap();
            assert_eq!(w.len(), 2 * n, "C={c} R={r}");
            assert!(w.evaluate(&t).is_identity(), "C={c} R={r}");
        }
        assert!(relator_2n(2, 3).is_err());
    }

    #[test]
    fn no_short_word_fixes_root() {
        for (c, r) in [(3u32, 1u32), (3, 2), (4, 2)] {
            let t = ColoredTree::build(c, r).unwrap();
            assert!(
                shortest_fixing_word(&t, 0, 2 * r as usize).is_none(),
                "C={c} R={r}"
            );
            // And at length 2R+1 a fixing word exists (a palindrome).
            let w = shortest_fixing_word(&t, 0, 2 * r as usize + 1).unwrap();
            assert_eq!(w.len(), 2 * r as usize + 1);
        }
    }

    #[test]
    fn evaluate_matches_generator_composition() {
        let t = t32();
        let gens = generators(&t);
        let w = Word::parse("0.1.2.0.1").unwrap();
        let direct = w.evaluate(&t);
        let mut composed = Permutation::identity(10);
        for c in w.letters() {
            composed = composed.compose(&gens[usize::from(c.0)]);
        }
        assert_eq!(direct, composed);
        let _ = generator_perm(&t, ColorId(0));
    }
}
