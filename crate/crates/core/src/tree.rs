//! Labeled tree enumeration via Prüfer sequences and AHU canonical codes.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Bits, Graph};

/// The labeled tree on `0..n` whose Prüfer sequence is `seq`.
pub fn prufer_decode(seq: &[usize], n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("Prüfer decoding needs n >= 2, got {n}")));
    }
    if seq.len() != n - 2 {
        return Err(Error::InvalidParameter(format!(
            "Prüfer sequence for n = {n} must have length {}, got {}",
            n - 2,
            seq.len()
        )));
    }
    if let Some(&bad) = seq.iter().find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange { vertex: bad, n });
    }
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut g = Graph::empty(n)?;
    for &v in seq {
        let leaf = (0..n).find(|&u| degree[u] == 1).expect("a leaf always exists");
        g.add_edge(leaf, v)?;
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let mut rest = (0..n).filter(|&u| degree[u] == 1);
    let (a, b) = (rest.next().unwrap(), rest.next().unwrap());
    g.add_edge(a, b)?;
    Ok(g)
}

/// All `n^(n-2)` Prüfer sequences for `n`, in lexicographic order.
pub struct PruferSequences {
    n: usize,
    next: Option<Vec<usize>>,
}

impl PruferSequences {
    pub fn new(n: usize) -> Self {
        let next = (n >= 2).then(|| vec![0; n - 2]);
        PruferSequences { n, next }
    }
}

impl Iterator for PruferSequences {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut i = succ.len();
        while i > 0 {
            i -= 1;
            succ[i] += 1;
            if succ[i] < self.n {
                self.next = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(current)
    }
}

/// Center vertices of a tree (one or two), found by peeling leaves.
fn centers(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for u in Bits(g.neighbors(leaf)) {
                degree[u] -= 1;
                if degree[u] == 1 {
                    next.push(u);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

/// AHU code of the subtree hanging from `v`: `(` children codes sorted `)`.
fn rooted_code(g: &Graph, v: usize, parent: Option<usize>) -> Vec<u8> {
    let mut children: Vec<Vec<u8>> = Bits(g.neighbors(v))
        .filter(|&u| Some(u) != parent)
        .map(|u| rooted_code(g, u, Some(v)))
        .collect();
    children.sort_unstable();
    let mut code = Vec::with_capacity(2 + children.iter().map(Vec::len).sum::<usize>());
    code.push(b'(');
    for c in children {
        code.extend(c);
    }
    code.push(b')');
    code
}

/// Canonical code of a free tree: the AHU code rooted at its center, or the
/// smaller of the two rooted codes for a bicentral tree. Two trees have equal
/// codes exactly when they are isomorphic.
pub fn tree_canonical_code(g: &Graph) -> Result<Vec<u8>> {
    if !g.is_tree() {
        return Err(Error::NotATree);
    }
    Ok(centers(g)
        .into_iter()
        .map(|c| rooted_code(g, c, None))
        .min()
        .expect("a tree has a center"))
}

/// One representative of every isomorphism class of trees on `n` vertices,
/// keyed and ordered by canonical code. Built by attaching a leaf to every
/// vertex of every class on `n - 1` vertices.
pub fn nonisomorphic_trees(n: usize) -> Result<BTreeMap<Vec<u8>, Graph>> {
    if n == 0 {
        return Err(Error::InvalidParameter("trees need at least one vertex".into()));
    }
    let k1 = Graph::empty(1)?;
    let mut level = BTreeMap::from([(tree_canonical_code(&k1)?, k1)]);
    for size in 2..=n {
        let mut next = BTreeMap::new();
        for tree in level.values() {
            for v in 0..size - 1 {
                let mut grown = Graph::empty(size)?;
                for (a, b) in tree.edges() {
                    grown.add_edge(a, b)?;
                }
                grown.add_edge(v, size - 1)?;
                next.entry(tree_canonical_code(&grown)?).or_insert(grown);
            }
        }
        level = next;
    }
    Ok(level)
}
