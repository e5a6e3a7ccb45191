//! Exact permutation arithmetic on `{0..N-1}` under the right action:
//! `images[v]` is the image of `v`, and words apply left-to-right.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::tree::{ColorId, ColoredTree};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Internal constructor for arrays already known to be bijections.
    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        Permutation { images }
    }

    /// Build from an image array, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if (x as usize) >= n || seen[x as usize] {
                return Err(Error::Parameter(format!(
                    "image array of length {n} is not a bijection"
                )));
            }
            seen[x as usize] = true;
        }
        Ok(Permutation { images })
    }

    /// Build from disjoint cycles over `{0..degree-1}`.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (i, &v) in cycle.iter().enumerate() {
                if v as usize >= degree || touched[v as usize] {
                    return Err(Error::Parameter("cycles overlap or out of range".into()));
                }
                touched[v as usize] = true;
                images[v as usize] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, v: u32) -> u32 {
        self.images[v as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self` followed by `other`: `(self * other)[v] = other[self[v]]`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: self.images.iter().map(|&v| other.images[v as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// `self^k` for arbitrary-precision `k`, by rotating each cycle.
    pub fn power(&self, k: &BigUint) -> Permutation {
        let n = self.degree();
        let mut out = vec![0u32; n];
        let mut seen = vec![false; n];
        let mut cycle = Vec::new();
        for start in 0..n as u32 {
            if seen[start as usize] {
                continue;
            }
            cycle.clear();
            let mut v = start;
            loop {
                seen[v as usize] = true;
                cycle.push(v);
                v = self.images[v as usize];
                if v == start {
                    break;
                }
            }
            let len = cycle.len();
            let shift = (k % BigUint::from(len))
                .try_into()
                .unwrap_or(0usize);
            for (i, &u) in cycle.iter().enumerate() {
                out[u as usize] = cycle[(i + shift) % len];
            }
        }
        Permutation { images: out }
    }

    pub fn pow(&self, k: u64) -> Permutation {
        self.power(&BigUint::from(k))
    }

    /// Nontrivial cycles, each starting at its minimal element, listed by
    /// ascending minimal element.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n as u32 {
            if seen[start as usize] || self.images[start as usize] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut v = start;
            loop {
                seen[v as usize] = true;
                cycle.push(v);
                v = self.images[v as usize];
                if v == start {
                    break;
                }
            }
            out.push(cycle);
        }
        out
    }

    /// Multiset of cycle lengths including fixed points.
    pub fn cycle_type(&self) -> CycleType {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n as u32 {
            if seen[start as usize] {
                continue;
            }
            let mut len = 0usize;
            let mut v = start;
            loop {
                seen[v as usize] = true;
                len += 1;
                v = self.images[v as usize];
                if v == start {
                    break;
                }
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        CycleType { lengths }
    }

    /// Least `k >= 1` with `self^k = id`: the lcm of the cycle lengths.
    pub fn order(&self) -> BigUint {
        self.cycle_type()
            .lengths
            .iter()
            .fold(BigUint::one(), |acc, &l| acc.lcm(&BigUint::from(l)))
    }

    /// `+1` for even permutations, `-1` for odd; computed from the cycle count.
    pub fn sign(&self) -> i32 {
        let cycles = self.cycle_type().lengths.len();
        if (self.degree() - cycles) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn fixed_points(&self) -> Vec<u32> {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &x)| i as u32 == x)
            .map(|(i, _)| i as u32)
            .collect()
    }

    pub fn moved_count(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &x)| i as u32 != x)
            .count()
    }

    /// True iff the cycle type is a single `n`-cycle (n >= 2) plus fixed points.
    pub fn is_n_cycle(&self, n: usize) -> bool {
        if n < 2 {
            return false;
        }
        let ct = self.cycle_type();
        ct.lengths.first() == Some(&n) && ct.lengths.iter().skip(1).all(|&l| l == 1)
    }

    /// Disjoint-cycle form, e.g. `(0 1)(2 5 7)`; the identity prints `()`.
    pub fn cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".into();
        }
        cycles
            .iter()
            .map(|c| {
                let inner: Vec<String> = c.iter().map(|v| v.to_string()).collect();
                format!("({})", inner.join(" "))
            })
            .collect()
    }

    /// Parse the disjoint-cycle form produced by [`cycle_string`].
    ///
    /// [`cycle_string`]: Permutation::cycle_string
    pub fn parse_cycles(s: &str, degree: usize) -> Result<Permutation> {
        let s = s.trim();
        let mut cycles = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let open = rest
                .find('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' in {rest:?}")))?;
            let close = rest
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed cycle in {rest:?}")))?;
            if close < open {
                return Err(Error::Parse(format!("mismatched parens in {s:?}")));
            }
            let body = &rest[open + 1..close];
            let cycle: Vec<u32> = body
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad vertex {tok:?}")))
                })
                .collect::<Result<_>>()?;
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = &rest[close + 1..];
        }
        Permutation::from_cycles(degree, &cycles)
    }

    /// Parse the one-line image form `[i0 i1 ... iN-1]`.
    pub fn parse_images(s: &str) -> Result<Permutation> {
        let s = s.trim();
        let body = s
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected [..] image list, got {s:?}")))?;
        let images: Vec<u32> = body
            .split_whitespace()
            .map(|tok| {
                tok.parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad image {tok:?}")))
            })
            .collect::<Result<_>>()?;
        Permutation::from_images(images)
    }
}

impl fmt::Display for Permutation {
    /// One-line image form `[i0 i1 ... iN-1]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({})", self.cycle_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleType {
    /// Cycle lengths in descending order, fixed points included.
    pub lengths: Vec<usize>,
}

impl CycleType {
    pub fn degree(&self) -> usize {
        self.lengths.iter().sum()
    }
}

/// The color involution: the product of the disjoint transpositions swapping
/// the two endpoints of every `c`-colored edge. Mirrors contribute fixed
/// points.
pub fn generator_perm(tree: &ColoredTree, c: ColorId) -> Permutation {
    assert!(
        usize::from(c.0) < tree.color_count(),
        "color out of range"
    );
    let mut images: Vec<u32> = (0..tree.vertex_count() as u32).collect();
    for v in 1..tree.vertex_count() as u32 {
        if let Some((p, pc)) = tree.parent(v) {
            if pc == c {
                images[v as usize] = p;
                images[p as usize] = v;
            }
        }
    }
    Permutation { images }
}

/// All color involutions in ascending color order.
pub fn generators(tree: &ColoredTree) -> Vec<Permutation> {
    tree.colors().map(|c| generator_perm(tree, c)).collect()
}
