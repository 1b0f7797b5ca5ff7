//! Union-find, plain and with a parity label on every element.

use alloc::vec::Vec;

pub(crate) struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            rank: alloc::vec![0; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        match self.rank[a].cmp(&self.rank[b]) {
            core::cmp::Ordering::Less => self.parent[a] = b,
            core::cmp::Ordering::Greater => self.parent[b] = a,
            core::cmp::Ordering::Equal => {
                self.parent[b] = a;
                self.rank[a] += 1;
            }
        }
    }

    /// Class label of every element, classes numbered by their smallest member.
    pub fn labels(&mut self) -> (Vec<usize>, usize) {
        let n = self.parent.len();
        let mut label_of_root = alloc::vec![usize::MAX; n];
        let mut labels = alloc::vec![0; n];
        let mut count = 0;
        for x in 0..n {
            let r = self.find(x);
            if label_of_root[r] == usize::MAX {
                label_of_root[r] = count;
                count += 1;
            }
            labels[x] = label_of_root[r];
        }
        (labels, count)
    }
}

/// Union-find where each element carries a bit relative to its root.
///
/// `relate(a, b, p)` records `x_a + x_b = p (mod 2)` and reports whether that
/// is consistent with everything recorded so far.
pub(crate) struct ParityUnionFind {
    parent: Vec<usize>,
    // parity of the element relative to its parent
    parity: Vec<u8>,
    rank: Vec<u8>,
}

impl ParityUnionFind {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            parity: alloc::vec![0; n],
            rank: alloc::vec![0; n],
        }
    }

    /// Root of `x` and the parity of `x` relative to it.
    pub fn find(&mut self, x: usize) -> (usize, u8) {
        let mut path = Vec::new();
        let mut cur = x;
        while self.parent[cur] != cur {
            path.push(cur);
            cur = self.parent[cur];
        }
        let root = cur;
        // walk back from the node nearest the root, accumulating parities
        let mut acc = 0u8;
        for &node in path.iter().rev() {
            acc ^= self.parity[node];
            self.parity[node] = acc;
            self.parent[node] = root;
        }
        (root, if path.is_empty() { 0 } else { self.parity[x] })
    }

    pub fn relate(&mut self, a: usize, b: usize, p: u8) -> bool {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            return pa ^ pb == p;
        }
        let link = pa ^ pb ^ p;
        match self.rank[ra].cmp(&self.rank[rb]) {
            core::cmp::Ordering::Less => {
                self.parent[ra] = rb;
                self.parity[ra] = link;
            }
            core::cmp::Ordering::Greater => {
                self.parent[rb] = ra;
                self.parity[rb] = link;
            }
            core::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.parity[rb] = link;
                self.rank[ra] += 1;
            }
        }
        true
    }

    /// Parity of every element relative to the smallest member of its class.
    pub fn normalized(&mut self) -> Vec<u8> {
        let n = self.parent.len();
        let mut anchor = alloc::vec![None; n];
        let mut out = alloc::vec![0; n];
        for x in 0..n {
            let (r, p) = self.find(x);
            let base = *anchor[r].get_or_insert(p);
            out[x] = p ^ base;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_detects_odd_triangle() {
        let mut uf = ParityUnionFind::new(3);
        assert!(uf.relate(0, 1, 1));
        assert!(uf.relate(1, 2, 1));
        assert!(!uf.relate(2, 0, 1));
        assert!(uf.relate(2, 0, 0));
    }

    #[test]
    fn normalized_anchors_smallest() {
        let mut uf = ParityUnionFind::new(4);
        uf.relate(3, 2, 1);
        uf.relate(2, 1, 0);
        assert_eq!(uf.normalized(), alloc::vec![0, 0, 0, 1]);
    }

    #[test]
    fn labels_by_smallest_member() {
        let mut uf = UnionFind::new(5);
        uf.union(4, 1);
        uf.union(3, 0);
        let (labels, count) = uf.labels();
        assert_eq!(count, 3);
        assert_eq!(labels, alloc::vec![0, 1, 2, 0, 1]);
    }
}
