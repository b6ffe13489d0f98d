//! Simple undirected graphs on at most 64 vertices, one `u64` bitset per
//! adjacency row.

use std::collections::HashMap;
use std::fmt;

use rand::Rng;

use crate::error::{Error, Result, MAX_VERTICES};

/// Iterator over the set bits of a mask, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

#[inline]
pub fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the low `n` bits set.
#[inline]
pub fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Capacity(n));
        }
        Ok(Graph { adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for u in 0..n {
            g.adj[u] = low_mask(n) & !bit(u);
        }
        Ok(g)
    }

    /// Adds `u-v`; repeated edges are no-ops.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::InvalidParameter(format!("loop edge at vertex {u}")));
        }
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        Ok(())
    }

    /// Erdős–Rényi `G(n, p)`.
    pub fn random_gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.adj[u] |= bit(v);
                    g.adj[v] |= bit(u);
                }
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Open neighborhood `N(v)` as a mask.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Closed neighborhood `N[v]`.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> u64 {
        self.adj[v] | bit(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adj[u] & bit(v) != 0
    }

    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n())
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| Bits(self.adj[u] & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn is_independent(&self, set: u64) -> bool {
        Bits(set).all(|v| self.adj[v] & set == 0)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n() });
        }
        Ok(())
    }

    /// Subgraph induced by `mask`, surviving vertices renumbered in
    /// increasing order.
    pub fn induced_subgraph(&self, mask: u64) -> Result<Self> {
        if mask & !self.vertex_mask() != 0 {
            let v = (mask & !self.vertex_mask()).trailing_zeros() as usize;
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n() });
        }
        let kept: Vec<usize> = Bits(mask).collect();
        let mut index = [usize::MAX; 64];
        for (i, &v) in kept.iter().enumerate() {
            index[v] = i;
        }
        let adj = kept
            .iter()
            .map(|&v| Bits(self.adj[v] & mask).fold(0u64, |row, w| row | bit(index[w])))
            .collect();
        Ok(Graph { adj })
    }

    /// `G - v`.
    pub fn delete_vertex(&self, v: usize) -> Result<Self> {
        self.check_vertex(v)?;
        self.induced_subgraph(self.vertex_mask() & !bit(v))
    }

    /// `G - N[v]`.
    pub fn delete_closed_neighborhood(&self, v: usize) -> Result<Self> {
        self.check_vertex(v)?;
        self.induced_subgraph(self.vertex_mask() & !self.closed_neighbors(v))
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn component_of(&self, start: usize, within: u64) -> u64 {
        let mut comp = bit(start);
        let mut frontier = comp;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.adj[v] & within & !comp;
            comp |= fresh;
            frontier |= fresh;
        }
        comp
    }

    /// Connected components of the subgraph induced by `within`, ordered by
    /// lowest vertex.
    pub fn components_within(&self, within: u64) -> Vec<u64> {
        let mut rest = within;
        let mut out = Vec::new();
        while rest != 0 {
            let comp = self.component_of(rest.trailing_zeros() as usize, within);
            out.push(comp);
            rest &= !comp;
        }
        out
    }

    pub fn components(&self) -> Vec<u64> {
        self.components_within(self.vertex_mask())
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Connected with exactly `n - 1` edges. The null graph is not a tree.
    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.edge_count() == self.n() - 1 && self.is_connected()
    }

    /// Independence number, by branching on a maximum-degree vertex with
    /// memoization on the remaining vertex set.
    pub fn alpha(&self) -> usize {
        let mut memo = HashMap::new();
        self.alpha_within(self.vertex_mask(), &mut memo)
    }

    fn alpha_within(&self, mask: u64, memo: &mut HashMap<u64, usize>) -> usize {
        if mask == 0 {
            return 0;
        }
        if let Some(&a) = memo.get(&mask) {
            return a;
        }
        let mut pivot = None;
        let mut best_deg = 0;
        let mut isolated = 0;
        for v in Bits(mask) {
            let d = (self.adj[v] & mask).count_ones();
            if d == 0 {
                isolated |= bit(v);
            } else if d > best_deg {
                best_deg = d;
                pivot = Some(v);
            }
        }
        let result = match pivot {
            None => mask.count_ones() as usize,
            Some(_) if isolated != 0 => {
                isolated.count_ones() as usize + self.alpha_within(mask & !isolated, memo)
            }
            Some(v) => {
                let without = self.alpha_within(mask & !bit(v), memo);
                let with = 1 + self.alpha_within(mask & !self.closed_neighbors(v), memo);
                without.max(with)
            }
        };
        memo.insert(mask, result);
        result
    }

    /// Whether every maximal independent set has size `alpha`.
    ///
    /// Bron–Kerbosch style enumeration of maximal independent sets with
    /// pivoting. A branch whose current set already has `alpha` vertices can
    /// only close into maximum sets and is cut.
    pub fn is_well_covered(&self) -> bool {
        let alpha = self.alpha();
        let mut search = WellCoveredSearch { g: self, alpha };
        search.find_small_maximal(0, 0, self.vertex_mask(), 0).is_none()
    }

    /// Whether the graph has no induced `K_{1,3}`.
    pub fn is_claw_free(&self) -> bool {
        for c in 0..self.n() {
            let nb: Vec<usize> = Bits(self.adj[c]).collect();
            for (i, &a) in nb.iter().enumerate() {
                for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                    if self.has_edge(a, b) {
                        continue;
                    }
                    let far = !self.adj[a] & !self.adj[b];
                    if nb[j + 1..].iter().any(|&d| far & bit(d) != 0) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

struct WellCoveredSearch<'g> {
    g: &'g Graph,
    alpha: usize,
}

impl WellCoveredSearch<'_> {
    /// Returns a maximal independent set smaller than `alpha`, if one exists
    /// extending `set` with candidates `cand` and excluded vertices `excl`.
    fn find_small_maximal(&mut self, set: u64, size: usize, cand: u64, excl: u64) -> Option<u64> {
        if cand == 0 {
            return (excl == 0 && size < self.alpha).then_some(set);
        }
        if size >= self.alpha {
            return None;
        }
        // every maximal extension contains a vertex of N[pivot]
        let pivot = Bits(cand | excl)
            .min_by_key(|&u| (self.g.closed_neighbors(u) & cand).count_ones())
            .unwrap();
        let mut cand = cand;
        let mut excl = excl;
        let branch = cand & self.g.closed_neighbors(pivot);
        for v in Bits(branch) {
            let nv = self.g.closed_neighbors(v);
            if let Some(found) =
                self.find_small_maximal(set | bit(v), size + 1, cand & !nv, excl & !nv)
            {
                return Some(found);
            }
            cand &= !bit(v);
            excl |= bit(v);
        }
        None
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edges(leaves + 1, &edges).unwrap()
    }

    fn assert_well_formed(g: &Graph) {
        for v in 0..g.n() {
            assert_eq!(g.neighbors(v) & bit(v), 0);
            for u in Bits(g.neighbors(v)) {
                assert!(g.has_edge(u, v));
            }
        }
        let degree_sum: usize = (0..g.n()).map(|v| g.degree(v)).sum();
        assert_eq!(degree_sum, 2 * g.edge_count());
    }

    /// Every maximal independent set size, by subset enumeration.
    fn maximal_set_sizes(g: &Graph) -> Vec<usize> {
        let mut sizes = Vec::new();
        for s in 0..(1u64 << g.n()) {
            if !g.is_independent(s) {
                continue;
            }
            let maximal = (0..g.n())
                .filter(|&v| s & bit(v) == 0)
                .all(|v| g.neighbors(v) & s != 0);
            if maximal {
                sizes.push(s.count_ones() as usize);
            }
        }
        sizes
    }

    #[test]
    fn capacity_and_range_errors() {
        assert_eq!(Graph::empty(65), Err(Error::Capacity(65)));
        assert!(Graph::empty(64).is_ok());
        let mut g = Graph::empty(3).unwrap();
        assert_eq!(g.add_edge(0, 3), Err(Error::VertexOutOfRange { vertex: 3, n: 3 }));
        assert!(g.add_edge(1, 1).is_err());
        assert_eq!(g.delete_vertex(5), Err(Error::VertexOutOfRange { vertex: 5, n: 3 }));
    }

    #[test]
    fn duplicate_edges_are_idempotent() {
        let g = Graph::from_edges(2, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_well_formed(&g);
    }

    #[test]
    fn deletions() {
        let p3 = path(3);
        let g = p3.delete_vertex(1).unwrap();
        assert_eq!((g.n(), g.edge_count()), (2, 0));

        let k4 = Graph::complete(4).unwrap();
        for v in 0..4 {
            assert_eq!(k4.delete_closed_neighborhood(v).unwrap().n(), 0);
        }
        assert_well_formed(&path(6).delete_closed_neighborhood(2).unwrap());
    }

    #[test]
    fn double_deletion_matches_two_vertex_mask() {
        let g = cycle(7);
        let (a, b) = (2, 5);
        let step = g.delete_vertex(a).unwrap().delete_vertex(b - 1).unwrap();
        let direct = g.induced_subgraph(g.vertex_mask() & !bit(a) & !bit(b)).unwrap();
        assert_eq!(step, direct);
    }

    #[test]
    fn components_examples() {
        let mut g = Graph::empty(12).unwrap();
        for block in 0..3 {
            for u in 0..4 {
                for v in u + 1..4 {
                    g.add_edge(4 * block + u, 4 * block + v).unwrap();
                }
            }
        }
        let comps = g.components();
        assert_eq!(comps, vec![0xF, 0xF0, 0xF00]);
        assert_eq!(cycle(5).components().len(), 1);
        assert_eq!(Graph::empty(3).unwrap().components(), vec![1, 2, 4]);
        assert!(Graph::empty(0).unwrap().components().is_empty());
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(star(3).alpha(), 3);
        assert_eq!(Graph::complete(4).unwrap().alpha(), 1);
        assert_eq!(cycle(5).alpha(), 2);
        assert_eq!(Graph::empty(0).unwrap().alpha(), 0);
        assert_eq!(path(9).alpha(), 5);
    }

    #[test]
    fn well_covered_examples() {
        assert!(cycle(4).is_well_covered());
        assert!(!path(3).is_well_covered());
        assert!(cycle(5).is_well_covered());
        assert!(Graph::complete(5).unwrap().is_well_covered());
        assert!(Graph::empty(0).unwrap().is_well_covered());
    }

    #[test]
    fn well_covered_agrees_with_subset_enumeration() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let n = rng.gen_range(0..=10);
            let g = Graph::random_gnp(n, rng.gen_range(0.1..0.9), &mut rng).unwrap();
            let sizes = maximal_set_sizes(&g);
            let alpha = sizes.iter().copied().max().unwrap_or(0);
            assert_eq!(g.alpha(), alpha, "{g:?}");
            assert_eq!(g.is_well_covered(), sizes.iter().all(|&s| s == alpha), "{g:?}");
        }
    }

    #[test]
    fn claw_free_examples() {
        assert!(!star(3).is_claw_free());
        assert!(cycle(5).is_claw_free());
        for k in 1..10 {
            assert!(path(k).is_claw_free());
        }
        // an edge between two leaves removes the only claw
        let mut g = star(3);
        g.add_edge(1, 2).unwrap();
        assert!(g.is_claw_free());
        assert!(!star(4).is_claw_free());
    }

    #[test]
    fn claw_free_agrees_with_four_subset_scan() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let n = rng.gen_range(0..=9);
            let g = Graph::random_gnp(n, rng.gen_range(0.2..0.8), &mut rng).unwrap();
            let mut has_claw = false;
            for c in 0..n {
                for a in 0..n {
                    for b in a + 1..n {
                        for d in b + 1..n {
                            let leaves = [a, b, d];
                            if leaves.contains(&c) {
                                continue;
                            }
                            let spokes = leaves.iter().all(|&l| g.has_edge(c, l));
                            let apart = !g.has_edge(a, b) && !g.has_edge(a, d) && !g.has_edge(b, d);
                            has_claw |= spokes && apart;
                        }
                    }
                }
            }
            assert_eq!(g.is_claw_free(), !has_claw, "{g:?}");
        }
    }

    #[test]
    fn tree_recognition() {
        assert!(path(1).is_tree());
        assert!(star(4).is_tree());
        assert!(!cycle(4).is_tree());
        assert!(!Graph::empty(0).unwrap().is_tree());
        assert!(!Graph::empty(2).unwrap().is_tree());
    }
}
