//! The boundary symmetry group of a configuration.
//!
//! The group is modelled as the automorphisms of the region tree that fix the
//! unbounded region, acting on circle labels. Two concentric circles have the
//! trivial group; two side-by-side circles can be swapped.
//!
//! Elements are listed explicitly, sorted by image sequence, so the identity
//! always comes first.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::boundary::{BoundaryConfig, ROOT};
use crate::error::{Error, Result};

/// A permutation of the circles `1..=n` of a configuration that preserves
/// nesting.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgePermutation {
    config: BoundaryConfig,
    image: Vec<usize>,
}

impl EdgePermutation {
    pub fn identity(config: &BoundaryConfig) -> Self {
        Self { config: config.clone(), image: (1..=config.len()).collect() }
    }

    /// Checks that `image` is a nesting-preserving bijection of `1..=n`.
    pub fn new(config: &BoundaryConfig, image: Vec<usize>) -> Result<Self> {
        let n = config.len();
        if image.len() != n {
            return Err(Error::NotAPermutation("length differs from circle count"));
        }
        let mut seen = vec![false; n + 1];
        for &j in &image {
            if j == 0 || j > n {
                return Err(Error::IndexOutOfRange { index: j, len: n });
            }
            if core::mem::replace(&mut seen[j], true) {
                return Err(Error::NotAPermutation("repeated image"));
            }
        }
        let lift = |v: usize| if v == ROOT { ROOT } else { image[v - 1] };
        if (1..=n).any(|i| config.parent(lift(i)) != lift(config.parent(i))) {
            return Err(Error::NotAPermutation("does not preserve nesting"));
        }
        Ok(Self { config: config.clone(), image })
    }

    pub fn config(&self) -> &BoundaryConfig {
        &self.config
    }

    /// Image of circle `i` (1-based).
    pub fn apply(&self, i: usize) -> Result<usize> {
        match i.checked_sub(1).and_then(|k| self.image.get(k)) {
            Some(&j) => Ok(j),
            None => Err(Error::IndexOutOfRange { index: i, len: self.image.len() }),
        }
    }

    /// Images of `1..=n`, in order.
    pub fn images(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(k, &j)| j == k + 1)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.config != other.config {
            return Err(Error::ConfigMismatch("permutations act on different configurations"));
        }
        let image = other.image.iter().map(|&j| self.image[j - 1]).collect();
        Ok(Self { config: self.config.clone(), image })
    }

    pub fn inverse(&self) -> Self {
        let mut image = vec![0; self.image.len()];
        for (k, &j) in self.image.iter().enumerate() {
            image[j - 1] = k + 1;
        }
        Self { config: self.config.clone(), image }
    }

    /// Cycle notation with labels `<prefix><i>`, e.g. `(t1 t2)(t3 t5)`.
    /// The identity is written `()`.
    pub fn cycles(&self, prefix: &str) -> String {
        let mut out = String::new();
        let mut done = vec![false; self.image.len() + 1];
        for start in 1..=self.image.len() {
            if done[start] || self.image[start - 1] == start {
                continue;
            }
            out.push('(');
            let mut i = start;
            loop {
                done[i] = true;
                if i != start {
                    out.push(' ');
                }
                let _ = write!(out, "{prefix}{i}");
                i = self.image[i - 1];
                if i == start {
                    break;
                }
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

pub fn compose_perms(a: &EdgePermutation, b: &EdgePermutation) -> Result<EdgePermutation> {
    a.compose(b)
}

pub fn inverse(a: &EdgePermutation) -> EdgePermutation {
    a.inverse()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryGroup {
    config: BoundaryConfig,
    elements: Vec<EdgePermutation>,
}

impl SymmetryGroup {
    pub fn config(&self) -> &BoundaryConfig {
        &self.config
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// All elements, identity first.
    pub fn elements(&self) -> &[EdgePermutation] {
        &self.elements
    }

    pub fn contains(&self, perm: &EdgePermutation) -> bool {
        self.elements.binary_search(perm).is_ok()
    }
}

/// Isomorphism type of the subtree below each vertex, as a nested
/// parenthesis code with children sorted.
fn subtree_codes(cfg: &BoundaryConfig) -> Vec<String> {
    let n = cfg.len();
    let mut codes = vec![String::new(); n + 1];
    // preorder: children have larger indices than parents
    for v in (0..=n).rev() {
        let mut kids: Vec<&str> = cfg.children(v).map(|c| codes[c].as_str()).collect();
        kids.sort_unstable();
        let mut code = String::from("(");
        kids.into_iter().for_each(|k| code.push_str(k));
        code.push(')');
        codes[v] = code;
    }
    codes
}

struct IsoSearch<'a> {
    cfg: &'a BoundaryConfig,
    codes: Vec<String>,
}

impl IsoSearch<'_> {
    /// Children of `v` sorted by subtree code.
    fn sorted_children(&self, v: usize) -> Vec<usize> {
        let mut kids: Vec<usize> = self.cfg.children(v).collect();
        kids.sort_by(|&a, &b| self.codes[a].cmp(&self.codes[b]).then(a.cmp(&b)));
        kids
    }

    /// All isomorphisms from the subtree at `u` onto the subtree at `v`, as
    /// lists of `(vertex, image)` pairs. Requires equal codes.
    fn isomorphisms(&self, u: usize, v: usize) -> Vec<Vec<(usize, usize)>> {
        let from = self.sorted_children(u);
        let to = self.sorted_children(v);
        let mut partial: Vec<Vec<(usize, usize)>> = vec![vec![(u, v)]];
        let mut start = 0;
        while start < from.len() {
            let end =
                (start..from.len()).find(|&k| self.codes[from[k]] != self.codes[from[start]]).unwrap_or(from.len());
            let class_from = &from[start..end];
            let class_to = &to[start..end];
            let mut next = Vec::new();
            for order in permutations(class_from.len()) {
                // child isomorphisms for this assignment of the class
                let mut choices: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
                for (k, &c) in class_from.iter().enumerate() {
                    let sub = self.isomorphisms(c, class_to[order[k]]);
                    choices = choices
                        .iter()
                        .flat_map(|prefix| {
                            sub.iter().map(move |s| {
                                let mut m = prefix.clone();
                                m.extend_from_slice(s);
                                m
                            })
                        })
                        .collect();
                }
                for p in &partial {
                    for c in &choices {
                        let mut m = p.clone();
                        m.extend_from_slice(c);
                        next.push(m);
                    }
                }
            }
            partial = next;
            start = end;
        }
        partial
    }
}

/// Permutations of `0..k` in lexicographic order.
fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..k).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..k).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..k).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

/// All root-fixing automorphisms of the region tree of `cfg`.
pub fn automorphism_group(cfg: &BoundaryConfig) -> SymmetryGroup {
    let search = IsoSearch { cfg, codes: subtree_codes(cfg) };
    let mut elements: Vec<EdgePermutation> = search
        .isomorphisms(ROOT, ROOT)
        .into_iter()
        .map(|pairs| {
            let mut image = vec![0; cfg.len()];
            for (a, b) in pairs.into_iter().filter(|&(a, _)| a != ROOT) {
                image[a - 1] = b;
            }
            EdgePermutation { config: cfg.clone(), image }
        })
        .collect();
    elements.sort();
    SymmetryGroup { config: cfg.clone(), elements }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boundary::parse_boundary;

    fn cfg(s: &str) -> BoundaryConfig {
        parse_boundary(s).unwrap()
    }

    /// Every permutation of the circles, kept when it preserves parents.
    fn brute_force(cfg: &BoundaryConfig) -> Vec<Vec<usize>> {
        let n = cfg.len();
        let mut out: Vec<Vec<usize>> = permutations(n)
            .into_iter()
            .map(|p| p.into_iter().map(|j| j + 1).collect::<Vec<_>>())
            .filter(|img| {
                let lift = |v: usize| if v == 0 { 0 } else { img[v - 1] };
                (1..=n).all(|i| cfg.parent(img[i - 1]) == lift(cfg.parent(i)))
            })
            .collect();
        out.sort();
        out
    }

    fn factorial(k: usize) -> usize {
        (1..=k).product()
    }

    /// Product over vertices of factorials of multiplicities of isomorphic
    /// child subtrees.
    fn structural_order(cfg: &BoundaryConfig) -> usize {
        let codes = subtree_codes(cfg);
        (0..=cfg.len())
            .map(|v| {
                let mut kids: Vec<&String> = cfg.children(v).map(|c| &codes[c]).collect();
                kids.sort();
                kids.chunk_by(|a, b| a == b).map(|run| factorial(run.len())).product::<usize>()
            })
            .product()
    }

    fn all_balanced(pairs: usize) -> Vec<String> {
        if pairs == 0 {
            return vec![String::new()];
        }
        let mut out = Vec::new();
        for inner in 0..pairs {
            for a in all_balanced(inner) {
                for b in all_balanced(pairs - 1 - inner) {
                    out.push(alloc::format!("({a}){b}"));
                }
            }
        }
        out
    }

    #[test]
    fn group_orders() {
        assert_eq!(automorphism_group(&cfg("(())")).order(), 1);
        assert_eq!(automorphism_group(&cfg("()()")).order(), 2);
        assert_eq!(automorphism_group(&cfg("()()()")).order(), 6);
        assert_eq!(automorphism_group(&cfg("(()())")).order(), 2);
        assert_eq!(automorphism_group(&cfg("")).order(), 1);
    }

    #[test]
    fn matches_brute_force_up_to_six_circles() {
        for pairs in 0..=6 {
            for s in all_balanced(pairs) {
                let c = cfg(&s);
                let g = automorphism_group(&c);
                let images: Vec<Vec<usize>> = g.elements().iter().map(|e| e.images().to_vec()).collect();
                assert_eq!(images, brute_force(&c), "{s}");
                assert_eq!(g.order(), structural_order(&c), "{s}");
                assert!(g.elements()[0].is_identity());
            }
        }
    }

    #[test]
    fn group_axioms_exhaustive() {
        for s in ["()()()", "(()())(())", "(()()())", "()()(())", "(())(())"] {
            let g = automorphism_group(&cfg(s));
            assert!(g.order() <= 24);
            for a in g.elements() {
                assert!(g.contains(&a.inverse()));
                assert!(a.compose(&a.inverse()).unwrap().is_identity());
                for b in g.elements() {
                    let ab = a.compose(b).unwrap();
                    assert!(g.contains(&ab), "{s}: not closed");
                    for c in g.elements() {
                        assert_eq!(ab.compose(c).unwrap(), a.compose(&b.compose(c).unwrap()).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn apply_examples() {
        let id = EdgePermutation::identity(&cfg("(())"));
        assert_eq!(id.apply(2), Ok(2));
        let g = automorphism_group(&cfg("()()"));
        let swap = &g.elements()[1];
        assert_eq!(swap.apply(1), Ok(2));
        assert_eq!(swap.apply(2), Ok(1));
        assert!(matches!(swap.apply(3), Err(Error::IndexOutOfRange { index: 3, len: 2 })));
        assert!(matches!(swap.apply(0), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn compose_and_inverse_examples() {
        let g = automorphism_group(&cfg("()()"));
        let (id, swap) = (&g.elements()[0], &g.elements()[1]);
        assert!(compose_perms(swap, swap).unwrap().is_identity());
        assert_eq!(&compose_perms(swap, id).unwrap(), swap);
        assert_eq!(&inverse(swap), swap);
        let other = EdgePermutation::identity(&cfg("(())"));
        assert!(matches!(swap.compose(&other), Err(Error::ConfigMismatch(_))));
    }

    #[test]
    fn constructor_validates() {
        let c = cfg("(())()");
        assert!(EdgePermutation::new(&c, vec![1, 2, 3]).is_ok());
        assert!(EdgePermutation::new(&c, vec![3, 2, 1]).is_err());
        assert!(EdgePermutation::new(&c, vec![1, 1, 3]).is_err());
        assert!(EdgePermutation::new(&c, vec![1, 2]).is_err());
        let c = cfg("(())(())");
        assert!(EdgePermutation::new(&c, vec![3, 4, 1, 2]).is_ok());
    }

    #[test]
    fn cycle_notation() {
        let g = automorphism_group(&cfg("(())(())"));
        let names: Vec<String> = g.elements().iter().map(|e| e.cycles("t")).collect();
        assert_eq!(names, vec!["()", "(t1 t3)(t2 t4)"]);
        let g = automorphism_group(&cfg("()()()"));
        assert!(g.elements().iter().any(|e| e.cycles("t") == "(t1 t2 t3)"));
    }
}
