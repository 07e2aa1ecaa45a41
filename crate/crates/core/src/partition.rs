//! Set partitions of `{0, …, n-1}` in restricted-growth form.
//!
//! A partition is stored as the block number of each element, with blocks
//! numbered by first occurrence. Two partitions are equal iff their
//! restricted-growth strings are equal, and they are ordered by comparing
//! those strings lexicographically.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    rgs: Vec<usize>,
}

impl Partition {
    /// Every element in its own block.
    pub fn singletons(n: usize) -> Self {
        Self { rgs: (0..n).collect() }
    }

    /// One block holding everything (or the empty partition when `n == 0`).
    pub fn whole(n: usize) -> Self {
        Self { rgs: vec![0; n] }
    }

    /// Partition from arbitrary block tags: `tags[i] == tags[j]` iff `i` and
    /// `j` share a block.
    pub fn from_tags<T: PartialEq>(tags: &[T]) -> Self {
        let mut seen: Vec<&T> = Vec::new();
        let rgs = tags
            .iter()
            .map(|t| match seen.iter().position(|s| *s == t) {
                Some(b) => b,
                None => {
                    seen.push(t);
                    seen.len() - 1
                }
            })
            .collect();
        Self { rgs }
    }

    /// Accepts a restricted-growth string, checking the growth condition.
    pub fn from_rgs(rgs: Vec<usize>) -> Result<Self> {
        let mut next = 0;
        for &b in &rgs {
            if b > next {
                return Err(Error::MalformedPartition("not a restricted-growth string"));
            }
            if b == next {
                next += 1;
            }
        }
        Ok(Self { rgs })
    }

    /// Builds a partition of `0..n` from explicit blocks. Blocks must be
    /// nonempty, disjoint and cover `0..n`; their order is irrelevant.
    pub fn from_blocks<B: AsRef<[usize]>>(n: usize, blocks: &[B]) -> Result<Self> {
        let mut tag = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            let block = block.as_ref();
            if block.is_empty() {
                return Err(Error::MalformedPartition("empty block"));
            }
            for &e in block {
                match tag.get_mut(e) {
                    None => return Err(Error::MalformedPartition("element out of range")),
                    Some(t) if *t != usize::MAX => return Err(Error::MalformedPartition("element in two blocks")),
                    Some(t) => *t = b,
                }
            }
        }
        if tag.contains(&usize::MAX) {
            return Err(Error::MalformedPartition("blocks do not cover every element"));
        }
        Ok(Self::from_tags(&tag))
    }

    pub fn len(&self) -> usize {
        self.rgs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rgs.is_empty()
    }

    pub fn rgs(&self) -> &[usize] {
        &self.rgs
    }

    pub fn block_of(&self, e: usize) -> usize {
        self.rgs[e]
    }

    pub fn block_count(&self) -> usize {
        self.rgs.iter().max().map_or(0, |&b| b + 1)
    }

    /// Blocks in canonical form: each sorted, ordered by least element.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.block_count()];
        for (e, &b) in self.rgs.iter().enumerate() {
            blocks[b].push(e);
        }
        blocks
    }

    /// The partition whose blocks are the images of this one's under the
    /// bijection `map` of `0..n`.
    pub fn relabel(&self, map: impl Fn(usize) -> usize) -> Self {
        let mut tags = vec![0; self.len()];
        for (e, &b) in self.rgs.iter().enumerate() {
            tags[map(e)] = b;
        }
        Self::from_tags(&tags)
    }

    /// Restricted-growth strings of length `n` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Partition> {
        let mut state = Some(vec![0; n]);
        core::iter::from_fn(move || {
            let current = state.take()?;
            state = next_rgs(&current);
            Some(Partition { rgs: current })
        })
    }
}

fn next_rgs(rgs: &[usize]) -> Option<Vec<usize>> {
    let mut next = rgs.to_vec();
    let mut blocks_before: Vec<usize> = Vec::with_capacity(rgs.len());
    let mut m = 0;
    for &b in rgs {
        blocks_before.push(m);
        m = m.max(b + 1);
    }
    for i in (1..rgs.len()).rev() {
        if next[i] < blocks_before[i] {
            next[i] += 1;
            for x in &mut next[i + 1..] {
                *x = 0;
            }
            return Some(next);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts_are_bell_numbers() {
        let bell = [1, 1, 2, 5, 15, 52, 203, 877];
        for (n, &b) in bell.iter().enumerate() {
            let all: Vec<_> = Partition::all(n).collect();
            assert_eq!(all.len(), b, "n = {n}");
            assert!(all.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn blocks_and_back() {
        let p = Partition::from_blocks(4, &[vec![3, 1], vec![0], vec![2]]).unwrap();
        assert_eq!(p.rgs(), &[0, 1, 2, 1]);
        assert_eq!(p.blocks(), vec![vec![0], vec![1, 3], vec![2]]);
        assert_eq!(Partition::from_blocks(4, &p.blocks()).unwrap(), p);
    }

    #[test]
    fn malformed_blocks() {
        assert!(Partition::from_blocks(2, &[vec![0], vec![0, 1]]).is_err());
        assert!(Partition::from_blocks(2, &[vec![0]]).is_err());
        assert!(Partition::from_blocks(2, &[vec![0, 1], vec![]]).is_err());
        assert!(Partition::from_blocks(1, &[vec![1]]).is_err());
        assert!(Partition::from_rgs(vec![0, 2]).is_err());
        assert!(Partition::from_rgs(vec![1]).is_err());
    }

    #[test]
    fn relabel_swaps() {
        let p = Partition::from_blocks(3, &[vec![0, 2], vec![1]]).unwrap();
        let q = p.relabel(|e| [1, 0, 2][e]);
        assert_eq!(q.blocks(), vec![vec![0], vec![1, 2]]);
    }

    #[test]
    fn whole_and_singletons() {
        assert_eq!(Partition::whole(3).block_count(), 1);
        assert_eq!(Partition::singletons(3).block_count(), 3);
        assert_eq!(Partition::whole(0), Partition::singletons(0));
        assert_eq!(Partition::whole(0).block_count(), 0);
    }
}
