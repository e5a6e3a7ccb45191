//! The radius-`R` ball of the `C`-regular properly `C`-edge-colored tree,
//! augmented with mirrored half-edges at the boundary.
//!
//! Vertices are numbered canonically: breadth-first from the root (vertex 0),
//! children of each vertex in ascending color order. With that convention the
//! children of any interior vertex occupy a contiguous id range, so the tree
//! stores one `first_child` pointer per vertex instead of a full adjacency map.

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};

/// 0-based color index; the total order on colors is index order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ColorId(pub u16);

/// Hard cap on the number of vertices of a built tree. Closed-form counts are
/// exact big integers and have no such limit.
pub const MAX_TREE_VERTICES: usize = 10_000_000;

/// Hard cap on the number of colors of a built tree.
pub const MAX_TREE_COLORS: u32 = 1024;

const NO_VERTEX: u32 = u32::MAX;

/// Number of vertices of the radius-`r` ball: `2r+1` when `c = 2`, otherwise
/// `(c(c-1)^r - 2)/(c-2)`. Exact.
pub fn vertex_count_formula(c: u64, r: u64) -> BigUint {
    assert!(c >= 2, "need at least two colors");
    if c == 2 {
        return BigUint::from(2 * r + 1);
    }
    let cm1 = BigUint::from(c - 1);
    let num = BigUint::from(c) * cm1.pow(r as u32) - BigUint::from(2u32);
    num / BigUint::from(c - 2)
}

/// Number of full edges of each color: `r` when `c = 2`, otherwise
/// `((c-1)^r - 1)/(c-2)`; equals `(N-1)/c` exactly.
pub fn edge_count_formula(c: u64, r: u64) -> BigUint {
    assert!(c >= 2, "need at least two colors");
    assert!(r >= 1, "need radius at least 1");
    if c == 2 {
        return BigUint::from(r);
    }
    let num = BigUint::from(c - 1).pow(r as u32) - BigUint::one();
    num / BigUint::from(c - 2)
}

/// The mirrored colored ball. Immutable after construction.
#[derive(Debug, Clone)]
pub struct ColoredTree {
    color_count: u16,
    radius: u32,
    parent: Vec<u32>,
    parent_color: Vec<u16>,
    first_child: Vec<u32>,
    height: Vec<u32>,
}

impl ColoredTree {
    /// Build the ball of radius `radius` in the `color_count`-regular colored
    /// tree, with mirrors at every height-`radius` vertex.
    pub fn build(color_count: u32, radius: u32) -> Result<Self> {
        if color_count < 2 {
            return Err(Error::Parameter(format!(
                "color count must be at least 2, got {color_count}"
            )));
        }
        if radius < 1 {
            return Err(Error::Parameter(format!(
                "radius must be at least 1, got {radius}"
            )));
        }
        if color_count > MAX_TREE_COLORS {
            return Err(Error::Capacity(format!(
                "color count {color_count} exceeds limit {MAX_TREE_COLORS}"
            )));
        }
        let n_big = vertex_count_formula(u64::from(color_count), u64::from(radius));
        let n = usize::try_from(&n_big)
            .ok()
            .filter(|&n| n <= MAX_TREE_VERTICES)
            .ok_or_else(|| {
                Error::Capacity(format!(
                    "tree with {n_big} vertices exceeds limit {MAX_TREE_VERTICES}"
                ))
            })?;

        let mut parent = vec![NO_VERTEX; n];
        let mut parent_color = vec![0u16; n];
        let mut first_child = vec![NO_VERTEX; n];
        let mut height = vec![0u32; n];

        // Vertex ids are breadth-first, so one forward pass allocates all
        // children in canonical order.
        let mut next: u32 = 1;
        for v in 0..n {
            let h = height[v];
            if h == radius {
                continue;
            }
            first_child[v] = next;
            let down = if v == 0 { None } else { Some(parent_color[v]) };
            for c in 0..color_count as u16 {
                if Some(c) == down {
                    continue;
                }
                let u = next as usize;
                next += 1;
                parent[u] = v as u32;
                parent_color[u] = c;
                height[u] = h + 1;
            }
        }
        assert_eq!(next as usize, n, "vertex count disagrees with closed form");

        Ok(ColoredTree {
            color_count: color_count as u16,
            radius,
            parent,
            parent_color,
            first_child,
            height,
        })
    }

    pub fn color_count(&self) -> usize {
        usize::from(self.color_count)
    }

    pub fn radius(&self) -> u32 {
        self.radius
    }

    pub fn vertex_count(&self) -> usize {
        self.parent.len()
    }

    pub fn colors(&self) -> impl Iterator<Item = ColorId> {
        (0..self.color_count).map(ColorId)
    }

    pub fn height(&self, v: u32) -> u32 {
        self.height[v as usize]
    }

    /// Down edge of `v`: the neighbor one step closer to the root and the edge
    /// color. `None` exactly at the root.
    pub fn parent(&self, v: u32) -> Option<(u32, ColorId)> {
        let vi = v as usize;
        if self.parent[vi] == NO_VERTEX {
            None
        } else {
            Some((self.parent[vi], ColorId(self.parent_color[vi])))
        }
    }

    pub fn is_boundary(&self, v: u32) -> bool {
        self.height[v as usize] == self.radius
    }

    /// The unique `c`-colored neighbor of `v`. Returns `(v, true)` when `c` is
    /// a mirrored half-edge at `v`.
    #[inline]
    pub fn neighbor(&self, v: u32, c: ColorId) -> (u32, bool) {
        debug_assert!(c.0 < self.color_count);
        let vi = v as usize;
        let p = self.parent[vi];
        if p != NO_VERTEX && self.parent_color[vi] == c.0 {
            return (p, false);
        }
        if self.height[vi] == self.radius {
            return (v, true);
        }
        // Children sit in ascending color order with the down color skipped.
        let skip = u16::from(p != NO_VERTEX && c.0 > self.parent_color[vi]);
        (self.first_child[vi] + u32::from(c.0 - skip), false)
    }

    /// Up edges of `v` as `(color, child)` pairs in ascending color order.
    pub fn children(&self, v: u32) -> Vec<(ColorId, u32)> {
        let vi = v as usize;
        if self.height[vi] == self.radius {
            return Vec::new();
        }
        let down = if self.parent[vi] == NO_VERTEX {
            None
        } else {
            Some(self.parent_color[vi])
        };
        let mut out = Vec::with_capacity(self.color_count() - usize::from(down.is_some()));
        let mut next = self.first_child[vi];
        for c in 0..self.color_count {
            if Some(c) == down {
                continue;
            }
            out.push((ColorId(c), next));
            next += 1;
        }
        out
    }

    /// Colors carrying a mirrored half-edge at `v`: every color except the
    /// down color when `v` is on the boundary, empty otherwise.
    pub fn mirror_colors(&self, v: u32) -> Vec<ColorId> {
        let vi = v as usize;
        if self.height[vi] != self.radius {
            return Vec::new();
        }
        (0..self.color_count)
            .filter(|&c| c != self.parent_color[vi])
            .map(ColorId)
            .collect()
    }

    /// Number of full edges colored `c`.
    pub fn edge_count(&self, c: ColorId) -> usize {
        (1..self.vertex_count())
            .filter(|&v| self.parent_color[v] == c.0)
            .count()
    }

    /// Maximal subtrees connected by edges whose colors lie in `colors`.
    /// Components are listed by ascending minimal vertex; vertices within a
    /// component ascend.
    pub fn dichrome_components(&self, colors: &[ColorId]) -> Result<Vec<Vec<u32>>> {
        let mut in_set = vec![false; self.color_count()];
        for c in colors {
            if usize::from(c.0) >= self.color_count() {
                return Err(Error::Parameter(format!("color {} out of range", c.0)));
            }
            in_set[usize::from(c.0)] = true;
        }
        if in_set.iter().filter(|&&b| b).count() < 2 {
            return Err(Error::Parameter(
                "need at least two distinct colors".into(),
            ));
        }
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        for start in 0..n as u32 {
            if seen[start as usize] {
                continue;
            }
            let mut comp = vec![start];
            seen[start as usize] = true;
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for c in 0..self.color_count {
                    if !in_set[usize::from(c)] {
                        continue;
                    }
                    let (u, mirrored) = self.neighbor(v, ColorId(c));
                    if !mirrored && !seen[u as usize] {
                        seen[u as usize] = true;
                        comp.push(u);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        Ok(components)
    }

    /// Color sequence of the unique geodesic from `u` to `v`.
    pub fn geodesic_colors(&self, u: u32, v: u32) -> Vec<ColorId> {
        // Lift both endpoints to their lowest common ancestor.
        let (mut a, mut b) = (u, v);
        let mut up_a = Vec::new();
        let mut up_b = Vec::new();
        while self.height(a) > self.height(b) {
            let (p, c) = self.parent(a).expect("non-root has a parent");
            up_a.push(c);
            a = p;
        }
        while self.height(b) > self.height(a) {
            let (p, c) = self.parent(b).expect("non-root has a parent");
            up_b.push(c);
            b = p;
        }
        while a != b {
            let (pa, ca) = self.parent(a).expect("non-root has a parent");
            let (pb, cb) = self.parent(b).expect("non-root has a parent");
            up_a.push(ca);
            up_b.push(cb);
            a = pa;
            b = pb;
        }
        up_b.reverse();
        up_a.extend(up_b);
        up_a
    }

    /// Follow a color path from the root; `colors` read root-to-leaf.
    pub fn vertex_at_path(&self, colors: &[ColorId]) -> u32 {
        let mut v = 0;
        for &c in colors {
            let (u, mirrored) = self.neighbor(v, c);
            assert!(!mirrored, "path runs off the boundary");
            v = u;
        }
        v
    }

    /// Serializable view: `{C, R, N, parents, mirrors}`.
    pub fn to_json(&self) -> TreeJson {
        TreeJson {
            c: u32::from(self.color_count),
            r: self.radius,
            n: self.vertex_count(),
            parents: (0..self.vertex_count() as u32)
                .map(|v| self.parent(v).map(|(p, c)| (p, c.0)))
                .collect(),
            mirrors: (0..self.vertex_count() as u32)
                .map(|v| self.mirror_colors(v).iter().map(|c| c.0).collect())
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct TreeJson {
    #[serde(rename = "C")]
    pub c: u32,
    #[serde(rename = "R")]
    pub r: u32,
    #[serde(rename = "N")]
    pub n: usize,
    pub parents: Vec<Option<(u32, u16)>>,
    pub mirrors: Vec<Vec<u16>>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formula_values() {
        assert_eq!(vertex_count_formula(3, 2), BigUint::from(10u32));
        assert_eq!(vertex_count_formula(7, 2), BigUint::from(50u32));
        assert_eq!(vertex_count_formula(2, 5), BigUint::from(11u32));
        assert_eq!(vertex_count_formula(3, 0), BigUint::from(1u32));
        assert_eq!(edge_count_formula(3, 2), BigUint::from(3u32));
        assert_eq!(edge_count_formula(2, 4), BigUint::from(4u32));
        assert_eq!(edge_count_formula(4, 2), BigUint::from(4u32));
    }

    #[test]
    fn small_ball_structure() {
        let t = ColoredTree::build(3, 1).unwrap();
        assert_eq!(t.vertex_count(), 4);
        assert_eq!(t.neighbor(0, ColorId(0)), (1, false));
        assert_eq!(t.neighbor(0, ColorId(1)), (2, false));
        assert_eq!(t.neighbor(0, ColorId(2)), (3, false));
        // Leaf mirrors reflect in place.
        assert_eq!(t.neighbor(1, ColorId(1)), (1, true));
        assert_eq!(t.neighbor(1, ColorId(2)), (1, true));
        for leaf in 1..4 {
            assert_eq!(t.mirror_colors(leaf).len(), 2);
        }
        assert!(t.mirror_colors(0).is_empty());
    }

    #[test]
    fn ten_vertex_ball() {
        let t = ColoredTree::build(3, 2).unwrap();
        assert_eq!(t.vertex_count(), 10);
        // Leaf's down edge leads back to its parent.
        let leaf = 4;
        let (p, c) = t.parent(leaf).unwrap();
        assert_eq!(t.neighbor(leaf, c), (p, false));
    }

    #[test]
    fn two_colors_is_a_path() {
        let t = ColoredTree::build(2, 3).unwrap();
        assert_eq!(t.vertex_count(), 7);
        // Each endpoint of the path has exactly one mirror.
        let ends: Vec<u32> = (0..7).filter(|&v| t.is_boundary(v)).collect();
        assert_eq!(ends.len(), 2);
        for e in ends {
            assert_eq!(t.mirror_colors(e).len(), 1);
        }
        // Alternating colors along the path.
        for v in 1..7u32 {
            let (p, c) = t.parent(v).unwrap();
            if let Some((_, pc)) = t.parent(p) {
                assert_ne!(c, pc);
            }
        }
    }

    #[test]
    fn neighbor_is_involutive() {
        for (c, r) in [(2, 3), (3, 2), (4, 2), (5, 1)] {
            let t = ColoredTree::build(c, r).unwrap();
            for v in 0..t.vertex_count() as u32 {
                for col in t.colors() {
                    let (u, _) = t.neighbor(v, col);
                    let (w, _) = t.neighbor(u, col);
                    assert_eq!(w, v, "C={c} R={r} v={v} color={}", col.0);
                }
            }
        }
    }

    #[test]
    fn proper_coloring_with_mirrors() {
        let t = ColoredTree::build(4, 2).unwrap();
        for v in 0..t.vertex_count() as u32 {
            let mut seen = vec![false; t.color_count()];
            if let Some((_, c)) = t.parent(v) {
                seen[usize::from(c.0)] = true;
            }
            for (c, _) in t.children(v) {
                assert!(!seen[usize::from(c.0)]);
                seen[usize::from(c.0)] = true;
            }
            for c in t.mirror_colors(v) {
                assert!(!seen[usize::from(c.0)]);
                seen[usize::from(c.0)] = true;
            }
            assert!(seen.iter().all(|&s| s), "vertex {v} misses a color");
        }
    }

    #[test]
    fn dichrome_component_sizes() {
        let t = ColoredTree::build(3, 2).unwrap();
        let comps = t
            .dichrome_components(&[ColorId(0), ColorId(1)])
            .unwrap();
        let mut sizes: Vec<usize> = comps.iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 3, 5]);

        let t = ColoredTree::build(4, 2).unwrap();
        let comps = t
            .dichrome_components(&[ColorId(0), ColorId(1)])
            .unwrap();
        let mut sizes: Vec<usize> = comps.iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 1, 1, 1, 1, 3, 3, 5]);
        assert_eq!(sizes.iter().sum::<usize>(), 17);

        let t = ColoredTree::build(2, 4).unwrap();
        let comps = t
            .dichrome_components(&[ColorId(0), ColorId(1)])
            .unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].len(), 9);
    }

    #[test]
    fn dichrome_needs_two_colors() {
        let t = ColoredTree::build(3, 1).unwrap();
        assert!(t.dichrome_components(&[ColorId(0)]).is_err());
        assert!(t.dichrome_components(&[ColorId(0), ColorId(0)]).is_err());
    }

    #[test]
    fn formula_agreement_grid() {
        for c in 2..=7u32 {
            for r in 1..=5u32 {
                let t = ColoredTree::build(c, r).unwrap();
                let n = vertex_count_formula(u64::from(c), u64::from(r));
                assert_eq!(BigUint::from(t.vertex_count()), n);
                let e = edge_count_formula(u64::from(c), u64::from(r));
                for col in t.colors() {
                    assert_eq!(BigUint::from(t.edge_count(col)), e);
                }
            }
        }
    }

    #[test]
    fn parameter_errors() {
        assert!(ColoredTree::build(1, 1).is_err());
        assert!(ColoredTree::build(3, 0).is_err());
        // (64, 5) would need ~10^9 vertices.
        assert!(matches!(
            ColoredTree::build(64, 5),
            Err(Error::Capacity(_))
        ));
    }

    #[test]
    fn geodesic_round_trip() {
        let t = ColoredTree::build(3, 2).unwrap();
        for u in 0..t.vertex_count() as u32 {
            for v in 0..t.vertex_count() as u32 {
                let colors = t.geodesic_colors(u, v);
                // Walk it.
                let mut cur = u;
                for c in &colors {
                    let (next, mirrored) = t.neighbor(cur, *c);
                    assert!(!mirrored);
                    cur = next;
                }
                assert_eq!(cur, v);
            }
        }
    }

    #[test]
    fn json_shape() {
        let t = ColoredTree::build(3, 1).unwrap();
        let j = serde_json::to_value(t.to_json()).unwrap();
        assert_eq!(j["C"], 3);
        assert_eq!(j["N"], 4);
        assert_eq!(j["parents"][0], serde_json::Value::Null);
        assert_eq!(j["mirrors"][1], serde_json::json!([1, 2]));
    }
}
