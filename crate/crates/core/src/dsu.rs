use alloc::vec::Vec;

/// Union-find whose representative is always the least element of a set.
pub(crate) struct DisjointSets {
    parent: Vec<usize>,
    sets: usize,
}

impl DisjointSets {
    pub(crate) fn new(len: usize) -> Self {
        Self { parent: (0..len).collect(), sets: len }
    }

    pub(crate) fn find(&mut self, i: usize) -> usize {
        let mut root = i;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut i = i;
        while self.parent[i] != root {
            let next = self.parent[i];
            self.parent[i] = root;
            i = next;
        }
        root
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            self.parent[hi] = lo;
            self.sets -= 1;
        }
    }

    pub(crate) fn sets(&self) -> usize {
        self.sets
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn least_element_represents() {
        let mut d = DisjointSets::new(6);
        d.union(4, 2);
        d.union(5, 4);
        d.union(1, 3);
        assert_eq!(d.find(5), 2);
        assert_eq!(d.find(3), 1);
        assert_eq!(d.sets(), 3);
        d.union(3, 5);
        assert_eq!(d.find(4), 1);
        assert_eq!(d.sets(), 2);
        d.union(2, 1);
        assert_eq!(d.sets(), 2);
    }
}
