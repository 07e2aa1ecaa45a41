//! Multiplication tables of the endomorphism algebras `S_h[F, F]` and
//! checks of the unit and associativity laws.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{AlgebraElement, Composer};
use crate::boundary::BoundaryConfig;
use crate::coefficient::Coefficient;
use crate::colouring::{identity_class, HClass, HomSpace};
use crate::error::{Error, Result};
use crate::symmetry::automorphism_group;

pub const DEFAULT_BASIS_LIMIT: usize = 512;

/// Products of all ordered pairs of basis classes; `cells[i][j]` is
/// `basis[i] · basis[j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicationTable {
    config: BoundaryConfig,
    basis: Vec<HClass>,
    cells: Vec<Vec<AlgebraElement>>,
}

impl MultiplicationTable {
    /// Assembles a table from parts, checking that the basis is the
    /// canonical one for `config` and that cell shapes agree.
    pub fn from_parts(config: BoundaryConfig, basis: Vec<HClass>, cells: Vec<Vec<AlgebraElement>>) -> Result<Self> {
        if basis != HomSpace::new(&config, &config).h_classes() {
            return Err(Error::ConfigMismatch("basis is not the canonical basis of the configuration"));
        }
        if cells.len() != basis.len() || cells.iter().any(|row| row.len() != basis.len()) {
            return Err(Error::ConfigMismatch("cell grid does not match the basis size"));
        }
        if cells.iter().flatten().any(|c| c.top() != &config || c.bottom() != &config) {
            return Err(Error::ConfigMismatch("cell lies outside the endomorphism algebra"));
        }
        Ok(Self { config, basis, cells })
    }

    pub fn config(&self) -> &BoundaryConfig {
        &self.config
    }

    pub fn basis(&self) -> &[HClass] {
        &self.basis
    }

    pub fn cells(&self) -> &[Vec<AlgebraElement>] {
        &self.cells
    }

    pub fn cell(&self, row: usize, col: usize) -> &AlgebraElement {
        &self.cells[row][col]
    }

    pub fn index_of(&self, h: &HClass) -> Option<usize> {
        self.basis.binary_search(h).ok()
    }

    /// A cell as `(basis index, coefficient)` pairs in basis order.
    pub fn sparse_cell(&self, row: usize, col: usize) -> Vec<(usize, Coefficient)> {
        self.cells[row][col]
            .terms()
            .map(|(h, c)| (self.index_of(h).expect("cell terms are basis classes"), c.clone()))
            .collect()
    }
}

pub fn multiplication_table(cfg: &BoundaryConfig) -> Result<MultiplicationTable> {
    multiplication_table_with_limit(cfg, DEFAULT_BASIS_LIMIT)
}

pub fn multiplication_table_with_limit(cfg: &BoundaryConfig, limit: usize) -> Result<MultiplicationTable> {
    let group = automorphism_group(cfg);
    let space = HomSpace::from_groups(group.clone(), group.clone());
    let basis = space.h_classes();
    if basis.len() > limit {
        return Err(Error::BasisLimit { size: basis.len(), limit });
    }
    let composer = Composer::from_groups(&group, &group, &group);
    let cells = basis
        .iter()
        .map(|a| basis.iter().map(|b| composer.compose_h(a, b)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(MultiplicationTable { config: cfg.clone(), basis, cells })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Dimensions {
    pub sh_classes: usize,
    pub h_classes: usize,
    pub top_group_order: usize,
    pub bottom_group_order: usize,
}

pub fn dimensions(top: &BoundaryConfig, bottom: &BoundaryConfig) -> Dimensions {
    let space = HomSpace::new(top, bottom);
    Dimensions {
        sh_classes: space.sh_classes().len(),
        h_classes: space.h_classes().len(),
        top_group_order: space.top_group().order(),
        bottom_group_order: space.bottom_group().order(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LawMode {
    Exhaustive,
    /// `samples` associativity triples drawn uniformly with a ChaCha8
    /// generator seeded by `seed`.
    Sampled {
        seed: u64,
        samples: usize,
    },
}

/// A failing instance of a law, with the classes involved and both sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub classes: Vec<HClass>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawCheck {
    pub law: &'static str,
    pub tested: u64,
    pub passed: bool,
    pub counterexample: Option<Counterexample>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawReport {
    pub config: BoundaryConfig,
    pub mode: LawMode,
    pub basis_size: usize,
    pub checks: Vec<LawCheck>,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

type Sparse = Vec<(usize, Coefficient)>;

/// Lazily filled table of products in index form.
struct ProductCache {
    basis: Vec<HClass>,
    composer: Composer,
    cells: Vec<Option<Sparse>>,
}

impl ProductCache {
    fn get(&mut self, i: usize, j: usize) -> Result<&Sparse> {
        let n = self.basis.len();
        if self.cells[i * n + j].is_none() {
            let prod = self.composer.compose_h(&self.basis[i], &self.basis[j])?;
            let sparse = prod
                .terms()
                .map(|(h, c)| (self.basis.binary_search(h).expect("products stay in the basis"), c.clone()))
                .collect();
            self.cells[i * n + j] = Some(sparse);
        }
        Ok(self.cells[i * n + j].as_ref().unwrap())
    }

    /// `(Σ x_k e_k) · e_j` when `left`, else `e_j · (Σ x_k e_k)`.
    fn multiply(&mut self, x: &Sparse, j: usize, left: bool) -> Result<Sparse> {
        let mut acc: BTreeMap<usize, Coefficient> = BTreeMap::new();
        for (k, c) in x {
            let cell = if left { self.get(*k, j)? } else { self.get(j, *k)? };
            for (m, d) in cell {
                *acc.entry(*m).or_default() += &(c * d);
            }
        }
        Ok(acc.into_iter().filter(|(_, c)| !c.is_zero()).collect())
    }

    fn show(&self, x: &Sparse) -> String {
        let mut e = AlgebraElement::zero(self.basis[0].top(), self.basis[0].bottom());
        for (k, c) in x {
            e.add_term(&self.basis[*k], c).unwrap();
        }
        format!("{e}")
    }
}

struct Tally {
    check: LawCheck,
}

impl Tally {
    fn new(law: &'static str) -> Self {
        Self { check: LawCheck { law, tested: 0, passed: true, counterexample: None } }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> Counterexample) {
        self.check.tested += 1;
        if !ok && self.check.passed {
            self.check.passed = false;
            self.check.counterexample = Some(witness());
        }
    }
}

/// Checks the two unit laws on every basis class and associativity on every
/// triple (exhaustive) or on seeded random triples (sampled). Failures,
/// including compositions that cannot be carried out, are reported in the
/// returned checks rather than as errors.
pub fn check_laws(cfg: &BoundaryConfig, mode: LawMode) -> LawReport {
    let group = automorphism_group(cfg);
    let basis = HomSpace::from_groups(group.clone(), group.clone()).h_classes();
    let n = basis.len();
    let unit = identity_class(cfg);
    let unit_index = basis.binary_search(&unit).expect("identity class is a basis class");
    let mut cache =
        ProductCache { composer: Composer::from_groups(&group, &group, &group), cells: vec![None; n * n], basis };

    let mut left_unit = Tally::new("left unit");
    let mut right_unit = Tally::new("right unit");
    let mut assoc = Tally::new("associativity");
    let mut closure = Tally::new("composition");

    let one = |k: usize| vec![(k, Coefficient::one())];
    for k in 0..n {
        for (tally, i, j) in [(&mut left_unit, unit_index, k), (&mut right_unit, k, unit_index)] {
            match cache.get(i, j).cloned() {
                Ok(cell) => {
                    let ok = cell == one(k);
                    let (lhs, rhs) = (cache.show(&cell), cache.show(&one(k)));
                    let classes = vec![cache.basis[i].clone(), cache.basis[j].clone()];
                    tally.record(ok, || Counterexample { classes, lhs, rhs });
                }
                Err(e) => closure.record(false, || failed(&cache, &[i, j], e)),
            }
        }
    }

    let mut triple = |cache: &mut ProductCache, a: usize, b: usize, c: usize| {
        let sides = (|| {
            let ab = cache.get(a, b)?.clone();
            let left = cache.multiply(&ab, c, true)?;
            let bc = cache.get(b, c)?.clone();
            let right = cache.multiply(&bc, a, false)?;
            Ok::<_, Error>((left, right))
        })();
        match sides {
            Ok((left, right)) => assoc.record(left == right, || Counterexample {
                classes: vec![cache.basis[a].clone(), cache.basis[b].clone(), cache.basis[c].clone()],
                lhs: cache.show(&left),
                rhs: cache.show(&right),
            }),
            Err(e) => closure.record(false, || failed(cache, &[a, b, c], e)),
        }
    };
    match mode {
        LawMode::Exhaustive => {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        triple(&mut cache, a, b, c);
                    }
                }
            }
        }
        LawMode::Sampled { seed, samples } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..samples {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                triple(&mut cache, a, b, c);
            }
        }
    }

    let mut checks = vec![left_unit.check, right_unit.check, assoc.check];
    if !closure.check.passed {
        checks.push(closure.check);
    }
    LawReport { config: cfg.clone(), mode, basis_size: n, checks }
}

fn failed(cache: &ProductCache, idx: &[usize], e: Error) -> Counterexample {
    Counterexample {
        classes: idx.iter().map(|&k| cache.basis[k].clone()).collect(),
        lhs: format!("{e}"),
        rhs: String::new(),
    }
}
