//! Boundary configurations and their region trees.
//!
//! A configuration of disjoint circles in the plane is written with the
//! grammar `config := ε | '(' config ')' config`, one parenthesis pair per
//! circle. Circles are numbered `1..=n` by the position of their opening
//! parenthesis. Only the nesting matters: the region tree has one vertex per
//! component of the plane minus the circles and one edge per circle.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// Vertex index of the unbounded region.
pub const ROOT: usize = 0;

/// A system of disjoint circles, stored as its nesting forest.
///
/// `parent[i - 1]` is the circle immediately enclosing circle `i`, or
/// [`ROOT`] when circle `i` is outermost. Preorder numbering gives
/// `parent[i - 1] < i`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoundaryConfig {
    parent: Vec<usize>,
}

impl BoundaryConfig {
    /// The configuration with no circles.
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a configuration from a preorder parent list.
    pub fn from_parents(parent: Vec<usize>) -> Result<Self> {
        for (k, &p) in parent.iter().enumerate() {
            if p > k {
                return Err(Error::MalformedConfig("parent list is not in preorder"));
            }
        }
        // Preorder also requires each circle's parent to be open: an ancestor of
        // the previous circle or the root.
        let cfg = Self { parent };
        for i in 2..=cfg.len() {
            let p = cfg.parent(i);
            let mut v = i - 1;
            while v != p && v != ROOT {
                v = cfg.parent(v);
            }
            if v != p {
                return Err(Error::MalformedConfig("parent list is not in preorder"));
            }
        }
        Ok(cfg)
    }

    /// Number of circles, `|F|`.
    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    /// The circle enclosing circle `i` (1-based), or [`ROOT`].
    pub fn parent(&self, i: usize) -> usize {
        self.parent[i - 1]
    }

    pub fn parents(&self) -> &[usize] {
        &self.parent
    }

    /// Circles immediately inside region `v` (a circle index or [`ROOT`]), in order.
    pub fn children(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.parent.iter().enumerate().filter(move |&(_, &p)| p == v).map(|(k, _)| k + 1)
    }

    /// Canonical parenthesis string.
    pub fn render(&self) -> String {
        let mut out = String::with_capacity(2 * self.len());
        let mut open: Vec<usize> = Vec::new();
        for i in 1..=self.len() {
            let p = self.parent(i);
            while open.last().is_some_and(|&top| top != p) {
                open.pop();
                out.push(')');
            }
            out.push('(');
            open.push(i);
        }
        for _ in open {
            out.push(')');
        }
        out
    }
}

impl fmt::Display for BoundaryConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl FromStr for BoundaryConfig {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_boundary(s)
    }
}

/// Parses a balanced parenthesis string.
pub fn parse_boundary(text: &str) -> Result<BoundaryConfig> {
    let mut parent = Vec::new();
    let mut open: Vec<usize> = Vec::new();
    for (offset, byte) in text.bytes().enumerate() {
        match byte {
            b'(' => {
                parent.push(open.last().copied().unwrap_or(ROOT));
                open.push(parent.len());
            }
            b')' => {
                if open.pop().is_none() {
                    return Err(Error::BoundaryParse { offset, reason: "unmatched ')'" });
                }
            }
            _ => return Err(Error::BoundaryParse { offset, reason: "expected '(' or ')'" }),
        }
    }
    if !open.is_empty() {
        return Err(Error::BoundaryParse { offset: text.len(), reason: "unclosed '('" });
    }
    Ok(BoundaryConfig { parent })
}

/// Rooted tree of planar regions. Vertex `0` is the unbounded region and
/// vertex `i` the region just inside circle `i`; edge `i` joins vertex `i`
/// to its parent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionTree {
    parent: Vec<usize>,
}

impl RegionTree {
    pub fn vertex_count(&self) -> usize {
        self.parent.len() + 1
    }

    pub fn edge_count(&self) -> usize {
        self.parent.len()
    }

    pub fn root(&self) -> usize {
        ROOT
    }

    /// Edges as `(inner region, enclosing region)`, indexed by circle.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parent.iter().enumerate().map(|(k, &p)| (k + 1, p))
    }
}

pub fn region_tree(cfg: &BoundaryConfig) -> RegionTree {
    RegionTree { parent: cfg.parent.clone() }
}

/// An edge of a joined tree: a circle of the top or of the bottom
/// configuration, 1-based. Top labels sort before bottom labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeLabel {
    Top(usize),
    Bottom(usize),
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeLabel::Top(i) => write!(f, "t{i}"),
            EdgeLabel::Bottom(j) => write!(f, "b{j}"),
        }
    }
}

impl FromStr for EdgeLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnknownEdge(s.into());
        let (side, digits) = s.split_at_checked(1).ok_or_else(bad)?;
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let n: usize = digits.parse().map_err(|_| bad())?;
        if n == 0 {
            return Err(bad());
        }
        match side {
            "t" => Ok(EdgeLabel::Top(n)),
            "b" => Ok(EdgeLabel::Bottom(n)),
            _ => Err(bad()),
        }
    }
}

/// The region trees of a top and a bottom configuration glued at their roots.
///
/// Edges are indexed `0..n + m` in label order `t1 < … < tn < b1 < … < bm`.
/// Vertex `k + 1` is the inner end of edge `k`, vertex `0` the shared root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JoinedTree {
    top: BoundaryConfig,
    bottom: BoundaryConfig,
    parent: Vec<usize>,
    depth: Vec<usize>,
}

impl JoinedTree {
    pub fn top(&self) -> &BoundaryConfig {
        &self.top
    }

    pub fn bottom(&self) -> &BoundaryConfig {
        &self.bottom
    }

    pub fn edge_count(&self) -> usize {
        self.top.len() + self.bottom.len()
    }

    pub fn labels(&self) -> impl Iterator<Item = EdgeLabel> + '_ {
        (0..self.edge_count()).map(|k| self.label(k))
    }

    pub fn label(&self, edge: usize) -> EdgeLabel {
        let n = self.top.len();
        if edge < n {
            EdgeLabel::Top(edge + 1)
        } else {
            EdgeLabel::Bottom(edge - n + 1)
        }
    }

    pub fn index(&self, label: EdgeLabel) -> Result<usize> {
        let (n, m) = (self.top.len(), self.bottom.len());
        match label {
            EdgeLabel::Top(i) if (1..=n).contains(&i) => Ok(i - 1),
            EdgeLabel::Bottom(j) if (1..=m).contains(&j) => Ok(n + j - 1),
            _ => Err(Error::UnknownEdge(alloc::format!("{label}"))),
        }
    }

    /// Vertex on the root side of `edge`.
    pub fn outer_vertex(&self, edge: usize) -> usize {
        self.parent[edge + 1]
    }

    /// Edge indices on the path between two edges, excluding both, ordered
    /// from `a` towards `b`.
    pub fn chain_indices(&self, a: usize, b: usize) -> Vec<usize> {
        let (mut u, mut v) = (a + 1, b + 1);
        let mut up = Vec::new();
        let mut down = Vec::new();
        while self.depth[u] > self.depth[v] {
            up.push(u - 1);
            u = self.parent[u];
        }
        while self.depth[v] > self.depth[u] {
            down.push(v - 1);
            v = self.parent[v];
        }
        while u != v {
            up.push(u - 1);
            down.push(v - 1);
            u = self.parent[u];
            v = self.parent[v];
        }
        up.extend(down.into_iter().rev());
        up.retain(|&e| e != a && e != b);
        up
    }
}

/// Glues the region trees of `top` and `bottom` at their roots.
pub fn join(top: &BoundaryConfig, bottom: &BoundaryConfig) -> JoinedTree {
    let n = top.len();
    let mut parent = vec![ROOT; n + bottom.len() + 1];
    parent[1..=n].copy_from_slice(top.parents());
    for j in 1..=bottom.len() {
        let p = bottom.parent(j);
        parent[n + j] = if p == ROOT { ROOT } else { n + p };
    }
    let mut depth = vec![0; parent.len()];
    for v in 1..parent.len() {
        // parents precede children within each side
        depth[v] = depth[parent[v]] + 1;
    }
    JoinedTree { top: top.clone(), bottom: bottom.clone(), parent, depth }
}
