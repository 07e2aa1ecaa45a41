//! Admissible colourings of joined region trees.
//!
//! A minimal diagram between configurations `F` (top) and `F'` (bottom) is
//! determined up to strong heterotopy by its connectivity, a partition of the
//! circles of `F ⊔ F'`. Read as a colouring of the edges of the joined tree,
//! the partitions that occur are exactly the admissible ones: for every pair
//! of same-coloured edges, either the chain of edges between them contains
//! another edge of that colour, or every colour on the chain appears an even
//! number of times.
//!
//! Heterotopy classes are orbits of these partitions under the symmetry
//! groups of the two boundaries. Each orbit is represented by its least
//! member in restricted-growth order.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::boundary::{join, BoundaryConfig, EdgeLabel, JoinedTree};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::symmetry::{automorphism_group, SymmetryGroup};

/// A strong-heterotopy class: an admissible partition of the edges of
/// `join(top, bottom)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ShClass {
    top: BoundaryConfig,
    bottom: BoundaryConfig,
    partition: Partition,
}

impl ShClass {
    /// Wraps `partition`, checking size and admissibility.
    pub fn new(top: &BoundaryConfig, bottom: &BoundaryConfig, partition: Partition) -> Result<Self> {
        let tree = join(top, bottom);
        if !is_admissible(&tree, &partition)? {
            return Err(Error::NotAdmissible);
        }
        Ok(Self::new_unchecked(top, bottom, partition))
    }

    pub(crate) fn new_unchecked(top: &BoundaryConfig, bottom: &BoundaryConfig, partition: Partition) -> Self {
        Self { top: top.clone(), bottom: bottom.clone(), partition }
    }

    /// Parses the block format `t1,b1|t2|b2`. Whitespace is ignored and blocks
    /// may be given in any order.
    pub fn parse(top: &BoundaryConfig, bottom: &BoundaryConfig, text: &str) -> Result<Self> {
        let partition = parse_partition(&join(top, bottom), text)?;
        Self::new(top, bottom, partition)
    }

    pub fn top(&self) -> &BoundaryConfig {
        &self.top
    }

    pub fn bottom(&self) -> &BoundaryConfig {
        &self.bottom
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn tree(&self) -> JoinedTree {
        join(&self.top, &self.bottom)
    }

    /// Blocks as edge labels, in canonical order.
    pub fn label_blocks(&self) -> Vec<Vec<EdgeLabel>> {
        let tree = self.tree();
        self.partition.blocks().into_iter().map(|b| b.into_iter().map(|e| tree.label(e)).collect()).collect()
    }

    /// Number of components of a minimal diagram in this class.
    pub fn block_count(&self) -> usize {
        self.partition.block_count()
    }
}

impl fmt::Display for ShClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, block) in self.label_blocks().iter().enumerate() {
            if k > 0 {
                f.write_str("|")?;
            }
            for (i, label) in block.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{label}")?;
            }
        }
        Ok(())
    }
}

/// Parses `t1,b1|t2|b2` into a partition of the tree's edges.
pub fn parse_partition(tree: &JoinedTree, text: &str) -> Result<Partition> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Partition::from_blocks::<Vec<usize>>(tree.edge_count(), &[]);
    }
    let mut blocks = Vec::new();
    for block in compact.split('|') {
        let mut edges = Vec::new();
        for label in block.split(',') {
            if label.is_empty() {
                return Err(Error::PartitionParse(alloc::format!("empty label in {text:?}")));
            }
            edges.push(tree.index(label.parse()?)?);
        }
        blocks.push(edges);
    }
    Partition::from_blocks(tree.edge_count(), &blocks)
}

/// Edge labels strictly between `e` and `e2` on the tree path, ordered from `e`.
pub fn chain(tree: &JoinedTree, e: EdgeLabel, e2: EdgeLabel) -> Result<Vec<EdgeLabel>> {
    let (a, b) = (tree.index(e)?, tree.index(e2)?);
    if a == b {
        return Err(Error::SameEdge);
    }
    Ok(tree.chain_indices(a, b).into_iter().map(|k| tree.label(k)).collect())
}

/// Whether the same-block pair `(a, b)` with chain `between` satisfies the
/// colouring rule under `colour`.
fn pair_ok(colour: &[usize], a: usize, between: &[usize]) -> bool {
    let c = colour[a];
    if between.iter().any(|&e| colour[e] == c) {
        return true;
    }
    between.iter().all(|&e| between.iter().filter(|&&x| colour[x] == colour[e]).count() % 2 == 0)
}

pub fn is_admissible(tree: &JoinedTree, partition: &Partition) -> Result<bool> {
    if partition.len() != tree.edge_count() {
        return Err(Error::MalformedPartition("partition size differs from edge count"));
    }
    let colour = partition.rgs();
    let n = colour.len();
    for a in 0..n {
        for b in a + 1..n {
            if colour[a] == colour[b] && !pair_ok(colour, a, &tree.chain_indices(a, b)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Precomputed chains, grouped by the last edge index they mention so that a
/// restricted-growth prefix can be tested as soon as a pair is fully coloured.
struct PairChecks {
    ready_at: Vec<Vec<(usize, usize, Vec<usize>)>>,
}

impl PairChecks {
    fn new(tree: &JoinedTree) -> Self {
        let n = tree.edge_count();
        let mut ready_at = vec![Vec::new(); n];
        for a in 0..n {
            for b in a + 1..n {
                let between = tree.chain_indices(a, b);
                let last = between.iter().copied().chain([b]).max().unwrap();
                ready_at[last].push((a, b, between));
            }
        }
        Self { ready_at }
    }

    fn prefix_ok(&self, prefix: &[usize]) -> bool {
        let k = prefix.len() - 1;
        self.ready_at[k].iter().all(|(a, b, between)| prefix[*a] != prefix[*b] || pair_ok(prefix, *a, between))
    }
}

/// All admissible partitions of `join(top, bottom)`, in restricted-growth order.
pub fn enumerate_sh_classes(top: &BoundaryConfig, bottom: &BoundaryConfig) -> Vec<ShClass> {
    let tree = join(top, bottom);
    let checks = PairChecks::new(&tree);
    let n = tree.edge_count();
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(n);
    extend(&checks, n, &mut prefix, 0, &mut |rgs| {
        out.push(ShClass::new_unchecked(top, bottom, Partition::from_rgs(rgs.to_vec()).unwrap()));
    });
    out
}

fn extend(checks: &PairChecks, n: usize, prefix: &mut Vec<usize>, blocks: usize, emit: &mut impl FnMut(&[usize])) {
    if prefix.len() == n {
        emit(prefix);
        return;
    }
    for b in 0..=blocks {
        prefix.push(b);
        if checks.prefix_ok(prefix) {
            extend(checks, n, prefix, blocks.max(b + 1), emit);
        }
        prefix.pop();
    }
}

/// Filter over every partition; the baseline the pruned search must agree with.
#[cfg(test)]
fn enumerate_sh_classes_unpruned(top: &BoundaryConfig, bottom: &BoundaryConfig) -> Vec<ShClass> {
    let tree = join(top, bottom);
    Partition::all(tree.edge_count())
        .filter(|p| is_admissible(&tree, p).unwrap())
        .map(|p| ShClass::new_unchecked(top, bottom, p))
        .collect()
}

/// A heterotopy class, held by the least strong-heterotopy class in its orbit.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HClass {
    representative: ShClass,
}

impl HClass {
    pub fn representative(&self) -> &ShClass {
        &self.representative
    }

    pub fn top(&self) -> &BoundaryConfig {
        self.representative.top()
    }

    pub fn bottom(&self) -> &BoundaryConfig {
        self.representative.bottom()
    }
}

impl fmt::Display for HClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.representative.fmt(f)
    }
}

/// The classes between a fixed top and bottom configuration, with both
/// symmetry groups computed once.
#[derive(Clone, Debug)]
pub struct HomSpace {
    top_group: SymmetryGroup,
    bottom_group: SymmetryGroup,
}

impl HomSpace {
    pub fn new(top: &BoundaryConfig, bottom: &BoundaryConfig) -> Self {
        Self { top_group: automorphism_group(top), bottom_group: automorphism_group(bottom) }
    }

    pub fn from_groups(top_group: SymmetryGroup, bottom_group: SymmetryGroup) -> Self {
        Self { top_group, bottom_group }
    }

    pub fn top(&self) -> &BoundaryConfig {
        self.top_group.config()
    }

    pub fn bottom(&self) -> &BoundaryConfig {
        self.bottom_group.config()
    }

    pub fn top_group(&self) -> &SymmetryGroup {
        &self.top_group
    }

    pub fn bottom_group(&self) -> &SymmetryGroup {
        &self.bottom_group
    }

    fn check(&self, s: &ShClass) -> Result<()> {
        if s.top() != self.top() || s.bottom() != self.bottom() {
            return Err(Error::ConfigMismatch("class and symmetry groups differ in configuration"));
        }
        Ok(())
    }

    /// Images of `s.partition()` under every pair of group elements, with
    /// repetitions.
    fn images<'a>(&'a self, s: &'a ShClass) -> impl Iterator<Item = Partition> + 'a {
        let n = self.top().len();
        self.top_group.elements().iter().flat_map(move |g| {
            self.bottom_group.elements().iter().map(move |h| {
                s.partition().relabel(|e| if e < n { g.images()[e] - 1 } else { n + h.images()[e - n] - 1 })
            })
        })
    }

    pub fn orbit(&self, s: &ShClass) -> Result<BTreeSet<ShClass>> {
        self.check(s)?;
        Ok(self.images(s).map(|p| ShClass::new_unchecked(self.top(), self.bottom(), p)).collect())
    }

    pub fn h_class(&self, s: &ShClass) -> Result<HClass> {
        self.check(s)?;
        let least = self.images(s).min().expect("groups contain the identity");
        Ok(HClass { representative: ShClass::new_unchecked(self.top(), self.bottom(), least) })
    }

    pub fn sh_classes(&self) -> Vec<ShClass> {
        enumerate_sh_classes(self.top(), self.bottom())
    }

    /// Orbit representatives, in restricted-growth order.
    pub fn h_classes(&self) -> Vec<HClass> {
        self.sh_classes()
            .into_iter()
            .filter(|s| self.images(s).all(|p| &p >= s.partition()))
            .map(|representative| HClass { representative })
            .collect()
    }
}

/// The orbit of `s` under relabelling top circles by `g_top` and bottom
/// circles by `g_bottom`.
pub fn h_orbit(s: &ShClass, g_top: &SymmetryGroup, g_bottom: &SymmetryGroup) -> Result<BTreeSet<ShClass>> {
    HomSpace::from_groups(g_top.clone(), g_bottom.clone()).orbit(s)
}

pub fn enumerate_h_classes(top: &BoundaryConfig, bottom: &BoundaryConfig) -> Vec<HClass> {
    HomSpace::new(top, bottom).h_classes()
}

/// Class of the identity diagram: circle `i` on top joined to circle `i` below.
pub fn identity_class(cfg: &BoundaryConfig) -> HClass {
    let n = cfg.len();
    let rgs = (0..n).chain(0..n).collect();
    let representative = ShClass::new_unchecked(cfg, cfg, Partition::from_rgs(rgs).unwrap());
    // the pairing is the least member of its orbit
    HClass { representative }
}
