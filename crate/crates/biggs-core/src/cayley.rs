//! Girth and diameter of the Cayley graph by breadth-first search over group
//! elements, with state and depth budgets and certified outcomes.
//!
//! States are deduplicated by a canonical fixed-width byte encoding of the
//! image array, so equality is exact. Generators are involutions, so a word is
//! reduced iff it never repeats the previous letter; the search therefore only
//! skips the letter that produced each state, which is exactly the parent edge
//! of the breadth-first tree. Any other arrival at a known state closes a
//! cycle, and the minimum over a completed level is the girth: expanding
//! depth d can only produce cycles of length 2d+1 or 2d+2, and shorter cycles
//! would have surfaced at earlier levels.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::arith::odd_lcm_leq;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::tree::vertex_count_formula;

#[derive(Debug, Clone, Copy)]
pub struct SearchBudget {
    /// Maximum number of distinct states kept.
    pub max_states: usize,
    /// Maximum depth expanded.
    pub max_depth: u32,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_states: 20_000_000,
            max_depth: 64,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum OutcomeKind {
    Exact,
    LowerBoundOnly,
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchOutcome {
    pub kind: OutcomeKind,
    /// Girth or diameter when exact; the certified lower bound otherwise.
    pub value: u64,
    pub states_explored: u64,
    pub depth_reached: u32,
}

fn validate_involutions(gens: &[Permutation]) -> Result<usize> {
    if gens.len() < 2 {
        return Err(Error::Parameter(
            "search needs at least two generators".into(),
        ));
    }
    if gens.len() > 255 {
        return Err(Error::Capacity(
            "search supports at most 255 generators".into(),
        ));
    }
    let degree = gens[0].degree();
    for (i, g) in gens.iter().enumerate() {
        if g.degree() != degree {
            return Err(Error::DegreeMismatch(degree, g.degree()));
        }
        if g.is_identity() {
            return Err(Error::Contract(format!("generator {i} is trivial")));
        }
        if !g.compose(g).is_identity() {
            return Err(Error::Contract(format!("generator {i} is not an involution")));
        }
        for h in &gens[..i] {
            if g == h {
                return Err(Error::Contract("generators must be distinct".into()));
            }
        }
    }
    Ok(degree)
}

/// Byte width of one image entry for the canonical state encoding.
fn entry_width(degree: usize) -> usize {
    if degree <= 1 << 8 {
        1
    } else if degree <= 1 << 16 {
        2
    } else {
        4
    }
}

fn encode(images: &[u32], width: usize, out: &mut Vec<u8>) {
    out.clear();
    match width {
        1 => out.extend(images.iter().map(|&v| v as u8)),
        2 => {
            for &v in images {
                out.extend_from_slice(&(v as u16).to_le_bytes());
            }
        }
        _ => {
            for &v in images {
                out.extend_from_slice(&v.to_le_bytes());
            }
        }
    }
}

fn decode(bytes: &[u8], width: usize, out: &mut Vec<u32>) {
    out.clear();
    match width {
        1 => out.extend(bytes.iter().map(|&b| u32::from(b))),
        2 => out.extend(
            bytes
                .chunks_exact(2)
                .map(|c| u32::from(u16::from_le_bytes([c[0], c[1]]))),
        ),
        _ => out.extend(
            bytes
                .chunks_exact(4)
                .map(|c| u32::from_le_bytes([c[0], c[1], c[2], c[3]])),
        ),
    }
}

struct Meta {
    depth: u32,
}

/// Candidate edges produced by expanding one frontier chunk.
type Expansion = Vec<(Vec<u8>, u8)>;

fn expand_chunk(
    chunk: &[(Box<[u8]>, u8)],
    gens: &[Permutation],
    width: usize,
) -> Expansion {
    let mut out = Vec::with_capacity(chunk.len() * gens.len().saturating_sub(1));
    let mut images = Vec::new();
    let mut buf = Vec::new();
    for (bytes, last) in chunk {
        decode(bytes, width, &mut images);
        for (gi, g) in gens.iter().enumerate() {
            if gi as u8 == *last {
                continue;
            }
            encode_applied(&images, g, width, &mut buf);
            out.push((buf.clone(), gi as u8));
        }
    }
    out
}

fn encode_applied(images: &[u32], g: &Permutation, width: usize, out: &mut Vec<u8>) {
    out.clear();
    match width {
        1 => out.extend(images.iter().map(|&v| g.image(v) as u8)),
        2 => {
            for &v in images {
                out.extend_from_slice(&(g.image(v) as u16).to_le_bytes());
            }
        }
        _ => {
            for &v in images {
                out.extend_from_slice(&g.image(v).to_le_bytes());
            }
        }
    }
}

/// Girth of the Cayley graph on the given distinct involutions.
///
/// Breadth-first from the identity, expanding only non-backtracking words.
/// Exact when the first collision level completes within budget; otherwise a
/// certified lower bound of `2 * depth_reached + 1`, where `depth_reached` is
/// the deepest fully discovered level.
pub fn girth(gens: &[Permutation], budget: &SearchBudget, threads: usize) -> Result<SearchOutcome> {
    let degree = validate_involutions(gens)?;
    let width = entry_width(degree);

    let mut visited: HashMap<Box<[u8]>, Meta> = HashMap::new();
    let identity = Permutation::identity(degree);
    let mut buf = Vec::new();
    encode(identity.images(), width, &mut buf);
    visited.insert(buf.clone().into_boxed_slice(), Meta { depth: 0 });

    // The identity expands with every letter.
    let mut frontier: Vec<(Box<[u8]>, u8)> = vec![(buf.into_boxed_slice(), u8::MAX)];
    let mut depth: u32 = 0; // depth of the current frontier
    let mut best: Option<u64> = None;

    loop {
        // Levels 0..=depth are fully discovered and all collisions closing
        // cycles of length <= 2*depth are known.
        if let Some(g) = best {
            if g <= 2 * u64::from(depth) + 2 {
                return Ok(SearchOutcome {
                    kind: OutcomeKind::Exact,
                    value: g,
                    states_explored: visited.len() as u64,
                    depth_reached: depth,
                });
            }
        }
        if depth >= budget.max_depth || frontier.is_empty() {
            return Ok(SearchOutcome {
                kind: OutcomeKind::LowerBoundOnly,
                value: 2 * u64::from(depth) + 1,
                states_explored: visited.len() as u64,
                depth_reached: depth,
            });
        }

        let expansions = run_expansion(&frontier, gens, width, threads);
        let mut next: Vec<(Box<[u8]>, u8)> = Vec::new();
        for (bytes, gi) in expansions {
            match visited.get(bytes.as_slice()) {
                Some(meta) => {
                    // Cycle through the meeting state: one path of length
                    // `depth` plus the connecting edge, one of `meta.depth`.
                    debug_assert!(meta.depth >= depth);
                    let cand = u64::from(depth) + u64::from(meta.depth) + 1;
                    best = Some(best.map_or(cand, |b| b.min(cand)));
                }
                None => {
                    if visited.len() >= budget.max_states {
                        // Level depth+1 is incomplete: certify from the last
                        // complete level only.
                        return Ok(SearchOutcome {
                            kind: OutcomeKind::LowerBoundOnly,
                            value: 2 * u64::from(depth) + 1,
                            states_explored: visited.len() as u64,
                            depth_reached: depth,
                        });
                    }
                    let key = bytes.into_boxed_slice();
                    visited.insert(key.clone(), Meta { depth: depth + 1 });
                    next.push((key, gi));
                }
            }
        }
        frontier = next;
        depth += 1;
    }
}

fn run_expansion(
    frontier: &[(Box<[u8]>, u8)],
    gens: &[Permutation],
    width: usize,
    threads: usize,
) -> Vec<(Vec<u8>, u8)> {
    let threads = threads.max(1);
    if threads == 1 || frontier.len() < 4096 {
        return expand_chunk(frontier, gens, width);
    }
    let chunk_size = frontier.len().div_ceil(threads);
    let mut results: Vec<Expansion> = Vec::new();
    std::thread::scope(|scope| {
        let handles: Vec<_> = frontier
            .chunks(chunk_size)
            .map(|chunk| scope.spawn(move || expand_chunk(chunk, gens, width)))
            .collect();
        // Merge in chunk order so the outcome is schedule-independent.
        results = handles.into_iter().map(|h| h.join().unwrap()).collect();
    });
    results.into_iter().flatten().collect()
}

/// Diameter of the Cayley graph: eccentricity of the identity, which equals
/// the diameter by vertex-transitivity. Exact when the whole group fits in the
/// budget; otherwise a lower bound equal to the deepest completed level.
pub fn diameter(
    gens: &[Permutation],
    budget: &SearchBudget,
    threads: usize,
) -> Result<SearchOutcome> {
    let degree = validate_involutions(gens)?;
    let width = entry_width(degree);

    let mut visited: HashMap<Box<[u8]>, ()> = HashMap::new();
    let identity = Permutation::identity(degree);
    let mut buf = Vec::new();
    encode(identity.images(), width, &mut buf);
    visited.insert(buf.clone().into_boxed_slice(), ());
    let mut frontier: Vec<(Box<[u8]>, u8)> = vec![(buf.into_boxed_slice(), u8::MAX)];
    let mut depth: u32 = 0;

    loop {
        if frontier.is_empty() {
            return Ok(SearchOutcome {
                kind: OutcomeKind::Exact,
                value: u64::from(depth.saturating_sub(1)),
                states_explored: visited.len() as u64,
                depth_reached: depth.saturating_sub(1),
            });
        }
        if depth >= budget.max_depth {
            return Ok(SearchOutcome {
                kind: OutcomeKind::LowerBoundOnly,
                value: u64::from(depth),
                states_explored: visited.len() as u64,
                depth_reached: depth,
            });
        }
        let expansions = run_expansion(&frontier, gens, width, threads);
        let mut next: Vec<(Box<[u8]>, u8)> = Vec::new();
        for (bytes, gi) in expansions {
            if !visited.contains_key(bytes.as_slice()) {
                if visited.len() >= budget.max_states {
                    return Ok(SearchOutcome {
                        kind: OutcomeKind::LowerBoundOnly,
                        value: u64::from(depth),
                        states_explored: visited.len() as u64,
                        depth_reached: depth,
                    });
                }
                let key = bytes.into_boxed_slice();
                visited.insert(key.clone(), ());
                next.push((key, gi));
            }
        }
        // The frontier we just expanded was the last nonempty level iff next
        // is empty; depth then equals the eccentricity.
        if next.is_empty() {
            return Ok(SearchOutcome {
                kind: OutcomeKind::Exact,
                value: u64::from(depth),
                states_explored: visited.len() as u64,
                depth_reached: depth,
            });
        }
        frontier = next;
        depth += 1;
    }
}

/// Smallest `D` with `N_{C,D} >= group_order`: a ball of radius `D` in a
/// `C`-regular graph holds at most `N_{C,D}` vertices, so the diameter of any
/// `C`-regular Cayley graph of the group is at least this.
pub fn moore_diameter_lower_bound(c: u64, group_order: &BigUint) -> u64 {
    assert!(c >= 3);
    let mut d = 0u64;
    let mut ball = BigUint::one(); // N_{C,0}
    let mut shell = BigUint::from(c); // vertices added at depth d+1
    while &ball < group_order {
        ball += &shell;
        shell *= c - 1;
        d += 1;
    }
    d
}

#[derive(Debug, Clone, Serialize)]
pub struct RatioRow {
    pub r: u64,
    /// Decimal string of N_{C,R}.
    pub n: String,
    pub diameter_lower_bound: u64,
    /// Decimal string of min(2N, 2*oddlcm(2R+1)).
    pub girth_upper_bound: String,
    pub ratio_lower_bound: f64,
}

/// Hard cap on the degree for which the `N!/2` order bound is expanded.
const MAX_RATIO_DEGREE: u64 = 20_000;

/// Per radius: the Moore diameter lower bound from `|G| >= N!/2`, the girth
/// upper bound `min(2N, 2*oddlcm(2R+1))`, and their quotient.
pub fn ratio_report(c: u64, r_list: &[u64]) -> Result<Vec<RatioRow>> {
    if c < 3 {
        return Err(Error::Parameter("ratio report needs C >= 3".into()));
    }
    let mut rows = Vec::with_capacity(r_list.len());
    for &r in r_list {
        if r < 1 {
            return Err(Error::Parameter("radius must be at least 1".into()));
        }
        let n = vertex_count_formula(c, r);
        let n_u64: u64 = (&n)
            .try_into()
            .ok()
            .filter(|&v: &u64| v <= MAX_RATIO_DEGREE)
            .ok_or_else(|| {
                Error::Capacity(format!(
                    "degree {n} too large for the factorial order bound"
                ))
            })?;
        let order_lb = (1..=n_u64).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
            / BigUint::from(2u32);
        let d_lb = moore_diameter_lower_bound(c, &order_lb);
        let two_n = &n * BigUint::from(2u32);
        let odd = odd_lcm_leq(2 * r + 1) * BigUint::from(2u32);
        let girth_ub = two_n.min(odd);
        let ratio = d_lb as f64 / girth_ub.to_f64().unwrap_or(f64::INFINITY);
        rows.push(RatioRow {
            r,
            n: n.to_string(),
            diameter_lower_bound: d_lb,
            girth_upper_bound: girth_ub.to_string(),
            ratio_lower_bound: ratio,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::generators;
    use crate::tree::ColoredTree;
    use crate::word::evaluate_letters;
    use crate::tree::ColorId;

    fn gens_of(c: u32, r: u32) -> Vec<Permutation> {
        generators(&ColoredTree::build(c, r).unwrap())
    }

    /// Independent oracle: the shortest nonempty non-backtracking word (length
    /// at least 3, and not closing with the opening letter) evaluating to the
    /// identity, by exhaustive enumeration.
    fn girth_by_word_enumeration(c: u32, r: u32, max_len: usize) -> Option<usize> {
        let tree = ColoredTree::build(c, r).unwrap();
        let n = tree.vertex_count();
        for len in 3..=max_len {
            let mut letters: Vec<ColorId> = Vec::with_capacity(len);
            if enumerate(&tree, &mut letters, len, n) {
                return Some(len);
            }
        }
        return None;

        fn enumerate(
            tree: &ColoredTree,
            letters: &mut Vec<ColorId>,
            target: usize,
            n: usize,
        ) -> bool {
            if letters.len() == target {
                // A cycle has distinct first and last edges.
                if letters.first() == letters.last() {
                    return false;
                }
                return evaluate_letters(tree, letters).is_identity();
            }
            for c in 0..tree.color_count() as u16 {
                let c = ColorId(c);
                if letters.last() == Some(&c) {
                    continue;
                }
                letters.push(c);
                if enumerate(tree, letters, target, n) {
                    return true;
                }
                letters.pop();
            }
            false
        }
    }

    #[test]
    fn girth_of_smallest_cubic_ball() {
        let out = girth(&gens_of(3, 1), &SearchBudget::default(), 1).unwrap();
        assert_eq!(out.kind, OutcomeKind::Exact);
        assert_eq!(out.value, 6);
    }

    #[test]
    fn girth_of_dihedral_groups() {
        for r in 1..=4u32 {
            let out = girth(&gens_of(2, r), &SearchBudget::default(), 1).unwrap();
            assert_eq!(out.kind, OutcomeKind::Exact, "R={r}");
            assert_eq!(out.value, u64::from(4 * r + 2), "R={r}");
        }
    }

    #[test]
    fn girth_matches_word_enumeration_oracle() {
        // Dihedral cases and the smallest cubic case.
        for (c, r) in [(2u32, 1u32), (2, 2), (2, 3), (3, 1)] {
            let bfs = girth(&gens_of(c, r), &SearchBudget::default(), 1).unwrap();
            assert_eq!(bfs.kind, OutcomeKind::Exact);
            let oracle = girth_by_word_enumeration(c, r, bfs.value as usize).unwrap();
            assert_eq!(bfs.value as usize, oracle, "C={c} R={r}");
        }
    }

    #[test]
    fn girth_window_for_ten_points() {
        let out = girth(&gens_of(3, 2), &SearchBudget::default(), 1).unwrap();
        assert_eq!(out.kind, OutcomeKind::Exact);
        assert!(out.value >= 11 && out.value <= 20, "girth {}", out.value);
    }

    #[test]
    fn budget_exhaustion_certifies_lower_bound() {
        let budget = SearchBudget {
            max_states: usize::MAX,
            max_depth: 4,
        };
        let out = girth(&gens_of(3, 2), &budget, 1).unwrap();
        assert_eq!(out.kind, OutcomeKind::LowerBoundOnly);
        assert_eq!(out.value, 9);
        assert_eq!(out.depth_reached, 4);

        let tiny = SearchBudget {
            max_states: 10,
            max_depth: 64,
        };
        let out = girth(&gens_of(3, 2), &tiny, 1).unwrap();
        assert_eq!(out.kind, OutcomeKind::LowerBoundOnly);
        assert_eq!(out.value, 2 * u64::from(out.depth_reached) + 1);
    }

    #[test]
    fn parallel_expansion_is_deterministic() {
        let g1 = girth(&gens_of(3, 2), &SearchBudget::default(), 1).unwrap();
        let g2 = girth(&gens_of(3, 2), &SearchBudget::default(), 2).unwrap();
        assert_eq!(g1.value, g2.value);
        assert_eq!(g1.states_explored, g2.states_explored);
        assert_eq!(g1.depth_reached, g2.depth_reached);
    }

    #[test]
    fn generator_contract_is_enforced() {
        let three_cycle = Permutation::from_cycles(4, &[vec![0, 1, 2]]).unwrap();
        let swap = Permutation::from_cycles(4, &[vec![0, 1]]).unwrap();
        assert!(matches!(
            girth(&[three_cycle, swap.clone()], &SearchBudget::default(), 1),
            Err(Error::Contract(_))
        ));
        assert!(girth(&[swap.clone()], &SearchBudget::default(), 1).is_err());
        assert!(matches!(
            girth(&[swap.clone(), swap], &SearchBudget::default(), 1),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn diameter_examples() {
        let out = diameter(&gens_of(3, 1), &SearchBudget::default(), 1).unwrap();
        assert_eq!(out.kind, OutcomeKind::Exact);
        assert_eq!(out.value, 4);
        assert_eq!(out.states_explored, 24);

        // The dihedral group of order 22 on two involutions is a 22-cycle.
        let out = diameter(&gens_of(2, 5), &SearchBudget::default(), 1).unwrap();
        assert_eq!(out.kind, OutcomeKind::Exact);
        assert_eq!(out.value, 11);
        assert_eq!(out.states_explored, 22);
    }

    #[test]
    fn diameter_budget_gives_lower_bound() {
        let budget = SearchBudget {
            max_states: 10,
            max_depth: 64,
        };
        let out = diameter(&gens_of(3, 2), &budget, 1).unwrap();
        assert_eq!(out.kind, OutcomeKind::LowerBoundOnly);
    }

    #[test]
    fn moore_bound_examples() {
        assert_eq!(moore_diameter_lower_bound(3, &BigUint::one()), 0);
        // N_{3,3} = 22 < 24 <= N_{3,4} = 46.
        assert_eq!(moore_diameter_lower_bound(3, &BigUint::from(24u32)), 4);
        let ten_factorial = BigUint::from(3628800u64);
        let d = moore_diameter_lower_bound(3, &ten_factorial);
        assert!(vertex_count_formula(3, d) >= ten_factorial);
        assert!(vertex_count_formula(3, d - 1) < ten_factorial);
    }

    #[test]
    fn moore_bound_consistent_with_exact_diameter() {
        let out = diameter(&gens_of(3, 1), &SearchBudget::default(), 1).unwrap();
        assert!(out.value >= moore_diameter_lower_bound(3, &BigUint::from(24u32)));
    }

    #[test]
    fn ratio_report_diverges() {
        let rs: Vec<u64> = (2..=12).collect();
        let rows = ratio_report(3, &rs).unwrap();
        assert_eq!(rows.len(), 11);
        for pair in rows.windows(2) {
            assert!(pair[1].ratio_lower_bound > pair[0].ratio_lower_bound);
        }

        let one = ratio_report(3, &[2]).unwrap();
        assert_eq!(one.len(), 1);

        // For nine colors the oddlcm bound eventually wins.
        let rows = ratio_report(9, &[2, 3, 4]).unwrap();
        let two_n_last = vertex_count_formula(9, 4) * BigUint::from(2u32);
        assert!(rows[2].girth_upper_bound != two_n_last.to_string());
    }
}
