//! Composition of heterotopy classes.
//!
//! Two colourings `A` on `(F', F)` and `B` on `(F, F'')` compose by merging
//! the colour of each middle circle of `A` with the colour of the matching
//! middle circle of `B`. Colours that reach neither outer boundary are
//! bubbles and contribute a factor `q` each; with `C_b` colours before and
//! `C_a` after merging, the handle count `C_a - C_b + |F|` contributes a
//! power of `p`.
//!
//! When the middle configuration has nontrivial symmetry the matching is not
//! unique, and the product of classes is the average over all matchings
//! given by the symmetry group.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use crate::boundary::{join, BoundaryConfig};
use crate::coefficient::{Coefficient, Rational};
use crate::colouring::{is_admissible, HClass, HomSpace, ShClass};
use crate::dsu::DisjointSets;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::symmetry::{automorphism_group, EdgePermutation, SymmetryGroup};

/// Outcome of gluing two colourings along one matching of the middle circles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionOutcome {
    pub result: ShClass,
    /// Handles created, the exponent of `p`.
    pub g_exp: u32,
    /// Closed components created, the exponent of `q`.
    pub b_exp: u32,
    /// Colours before identification, `C_b`.
    pub colours_before: usize,
    /// Colours after identification, `C_a`.
    pub colours_after: usize,
}

/// Glues `a` on `(F', F)` to `b` on `(F, F'')`, matching bottom circle `i`
/// of `a` with top circle `pi(i)` of `b`.
pub fn compose_single(a: &ShClass, b: &ShClass, pi: &EdgePermutation) -> Result<CompositionOutcome> {
    if a.bottom() != b.top() {
        return Err(Error::ConfigMismatch("bottom of the first class differs from top of the second"));
    }
    if pi.config() != a.bottom() {
        return Err(Error::ConfigMismatch("permutation acts on a different configuration"));
    }
    let (outer_top, mid, outer_bottom) = (a.top().len(), a.bottom().len(), b.bottom().len());
    let (pa, pb) = (a.partition(), b.partition());
    let (ka, kb) = (pa.block_count(), pb.block_count());

    // colours 0..ka belong to a, ka..ka+kb to b
    let mut sets = DisjointSets::new(ka + kb);
    for (i, &j) in pi.images().iter().enumerate() {
        sets.union(pa.block_of(outer_top + i), ka + pb.block_of(j - 1));
    }
    let colours_before = ka + kb;
    let colours_after = sets.sets();

    let tags: Vec<usize> = (0..outer_top)
        .map(|e| pa.block_of(e))
        .chain((0..outer_bottom).map(|e| ka + pb.block_of(mid + e)))
        .map(|c| sets.find(c))
        .collect();
    let result = Partition::from_tags(&tags);
    let b_exp = colours_after - result.block_count();
    // each union lowers the count by at most one, so this cannot underflow
    let g_exp = colours_after + mid - colours_before;

    if !is_admissible(&join(a.top(), b.bottom()), &result)? {
        let shown = ShClass::new_unchecked(a.top(), b.bottom(), result);
        return Err(Error::InadmissibleComposite(shown.to_string()));
    }
    Ok(CompositionOutcome {
        result: ShClass::new_unchecked(a.top(), b.bottom(), result),
        g_exp: g_exp as u32,
        b_exp: b_exp as u32,
        colours_before,
        colours_after,
    })
}

/// A finite linear combination of heterotopy classes between fixed
/// configurations, with no zero coefficients stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    top: BoundaryConfig,
    bottom: BoundaryConfig,
    terms: BTreeMap<HClass, Coefficient>,
}

impl AlgebraElement {
    pub fn zero(top: &BoundaryConfig, bottom: &BoundaryConfig) -> Self {
        Self { top: top.clone(), bottom: bottom.clone(), terms: BTreeMap::new() }
    }

    pub fn basis(h: &HClass) -> Self {
        Self::term(h, Coefficient::one())
    }

    pub fn term(h: &HClass, c: Coefficient) -> Self {
        let mut out = Self::zero(h.top(), h.bottom());
        if !c.is_zero() {
            out.terms.insert(h.clone(), c);
        }
        out
    }

    pub fn top(&self) -> &BoundaryConfig {
        &self.top
    }

    pub fn bottom(&self) -> &BoundaryConfig {
        &self.bottom
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, h: &HClass) -> Coefficient {
        self.terms.get(h).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&HClass, &Coefficient)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, h: &HClass, c: &Coefficient) -> Result<()> {
        if h.top() != &self.top || h.bottom() != &self.bottom {
            return Err(Error::ConfigMismatch("class lies in a different hom-space"));
        }
        let slot = self.terms.entry(h.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(h);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (h, c) in &other.terms {
            out.add_term(h, c)?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        let mut out = Self::zero(&self.top, &self.bottom);
        for (h, x) in &self.terms {
            let y = x * c;
            if !y.is_zero() {
                out.terms.insert(h.clone(), y);
            }
        }
        out
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (h, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            match c.terms().count() {
                _ if c.is_one() => {}
                1 => write!(f, "{c} * ")?,
                _ => write!(f, "({c}) * ")?,
            }
            write!(f, "[{h}]")?;
        }
        Ok(())
    }
}

/// Composition with the symmetry groups of all three configurations fixed,
/// for repeated use.
#[derive(Clone, Debug)]
pub struct Composer {
    middle: SymmetryGroup,
    outer: HomSpace,
}

impl Composer {
    pub fn new(top: &BoundaryConfig, middle: &BoundaryConfig, bottom: &BoundaryConfig) -> Self {
        Self { middle: automorphism_group(middle), outer: HomSpace::new(top, bottom) }
    }

    pub fn from_groups(top: &SymmetryGroup, middle: &SymmetryGroup, bottom: &SymmetryGroup) -> Self {
        Self { middle: middle.clone(), outer: HomSpace::from_groups(top.clone(), bottom.clone()) }
    }

    fn check(&self, a: &HClass, b: &HClass) -> Result<()> {
        if a.bottom() != b.top() {
            return Err(Error::ConfigMismatch("bottom of the first class differs from top of the second"));
        }
        if a.bottom() != self.middle.config() || a.top() != self.outer.top() || b.bottom() != self.outer.bottom() {
            return Err(Error::ConfigMismatch("classes do not match the composer's configurations"));
        }
        Ok(())
    }

    /// Every single-matching outcome, one per group element, in group order.
    pub fn outcomes(&self, a: &HClass, b: &HClass) -> Result<Vec<CompositionOutcome>> {
        self.check(a, b)?;
        self.middle.elements().iter().map(|pi| compose_single(a.representative(), b.representative(), pi)).collect()
    }

    pub fn compose_h(&self, a: &HClass, b: &HClass) -> Result<AlgebraElement> {
        let weight = Rational::new(1, self.middle.order() as i64);
        let mut by_result: BTreeMap<ShClass, Coefficient> = BTreeMap::new();
        for o in self.outcomes(a, b)? {
            *by_result.entry(o.result).or_default() += &Coefficient::term(weight, o.g_exp, o.b_exp);
        }
        let mut out = AlgebraElement::zero(a.top(), b.bottom());
        for (result, c) in by_result {
            out.add_term(&self.outer.h_class(&result)?, &c)?;
        }
        Ok(out)
    }

    pub fn compose(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        if x.bottom() != y.top() {
            return Err(Error::ConfigMismatch("bottom of the first element differs from top of the second"));
        }
        let mut out = AlgebraElement::zero(x.top(), y.bottom());
        for (a, ca) in x.terms() {
            for (b, cb) in y.terms() {
                let c = ca * cb;
                for (h, ch) in self.compose_h(a, b)?.terms() {
                    out.add_term(h, &(&c * ch))?;
                }
            }
        }
        Ok(out)
    }
}

/// `a · b`: the average over the symmetry group of the middle configuration
/// of `p^g q^b [result]`.
pub fn compose_h(a: &HClass, b: &HClass) -> Result<AlgebraElement> {
    if a.bottom() != b.top() {
        return Err(Error::ConfigMismatch("bottom of the first class differs from top of the second"));
    }
    Composer::new(a.top(), a.bottom(), b.bottom()).compose_h(a, b)
}

/// Bilinear extension of [`compose_h`].
pub fn compose(x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
    if x.bottom() != y.top() {
        return Err(Error::ConfigMismatch("bottom of the first element differs from top of the second"));
    }
    Composer::new(x.top(), x.bottom(), y.bottom()).compose(x, y)
}

/// Classical partition-algebra product: `u` partitions `outer_top` top labels
/// followed by `mid` middle labels, `v` partitions `mid` middle labels
/// followed by its bottom labels. Blocks are joined through the middle and
/// restricted to the outer labels.
pub fn partition_compose_oracle(u: &Partition, v: &Partition, mid: usize) -> Result<Partition> {
    if u.len() < mid || v.len() < mid {
        return Err(Error::ConfigMismatch("partitions do not share the middle labels"));
    }
    let outer_top = u.len() - mid;
    let outer_bottom = v.len() - mid;
    // label graph on top ⊔ mid ⊔ bottom; components by repeated relabelling
    let total = outer_top + mid + outer_bottom;
    let mut comp: Vec<usize> = (0..total).collect();
    let same_u = |x: usize, y: usize| u.block_of(x) == u.block_of(y);
    let same_v = |x: usize, y: usize| v.block_of(x - outer_top) == v.block_of(y - outer_top);
    loop {
        let mut changed = false;
        for x in 0..total {
            for y in 0..total {
                let linked =
                    (x < u.len() && y < u.len() && same_u(x, y)) || (x >= outer_top && y >= outer_top && same_v(x, y));
                if linked && comp[y] < comp[x] {
                    comp[x] = comp[y];
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let outer: Vec<usize> = (0..outer_top).chain(outer_top + mid..total).map(|x| comp[x]).collect();
    Ok(Partition::from_tags(&outer))
}
