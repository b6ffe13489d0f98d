//! Exact independence polynomials.
//!
//! [`independence_polynomial`] is the production solver: it recurses on
//! vertex-set masks of the fixed input graph using
//! `I(G) = I(G - v) + x I(G - N[v])`, multiplies across connected
//! components, and memoizes every mask it finishes.
//! [`brute_force_independence_polynomial`] enumerates independent sets one by
//! one and exists only to certify the solver.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::{bit, Bits, Graph};
use crate::poly::IntPoly;

/// Vertex cap for the enumerating oracle.
pub const BRUTE_FORCE_MAX_VERTICES: usize = 24;

/// Memo for one solver run, keyed by vertex masks over the input graph.
pub struct MemoTable {
    entries: HashMap<u64, IntPoly>,
}

impl MemoTable {
    fn new() -> Self {
        MemoTable {
            entries: HashMap::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, mask: u64) -> Option<&IntPoly> {
        self.entries.get(&mask)
    }
}

struct Solver<'g> {
    g: &'g Graph,
    memo: MemoTable,
    /// `(1 + x)^k` for `k = 0..=64`, filled lazily.
    edgeless: Vec<Option<IntPoly>>,
}

impl<'g> Solver<'g> {
    fn new(g: &'g Graph) -> Self {
        Solver {
            g,
            memo: MemoTable::new(),
            edgeless: vec![None; 65],
        }
    }

    fn edgeless_poly(&mut self, k: usize) -> IntPoly {
        self.edgeless[k]
            .get_or_insert_with(|| IntPoly::one_plus_x().pow(k as u32))
            .clone()
    }

    fn solve(&mut self, mask: u64) -> IntPoly {
        if mask == 0 {
            return IntPoly::one();
        }
        if let Some(p) = self.memo.entries.get(&mask) {
            return p.clone();
        }
        let adj = self.g.adjacency();
        let result = if Bits(mask).all(|v| adj[v] & mask == 0) {
            self.edgeless_poly(mask.count_ones() as usize)
        } else {
            let comp = self.g.component_of(mask.trailing_zeros() as usize, mask);
            if comp != mask {
                let first = self.solve(comp);
                let rest = self.solve(mask & !comp);
                &first * &rest
            } else {
                let pivot = Bits(mask)
                    .max_by_key(|&v| ((adj[v] & mask).count_ones(), std::cmp::Reverse(v)))
                    .expect("mask is nonempty");
                let without = self.solve(mask & !bit(pivot));
                let with = self.solve(mask & !self.g.closed_neighbors(pivot));
                &without + &with.shift(1)
            }
        };
        self.memo.entries.insert(mask, result.clone());
        result
    }
}

/// `I(G; x)` for any graph within the 64-vertex cap.
pub fn independence_polynomial(g: &Graph) -> IntPoly {
    independence_polynomial_with_memo(g).0
}

/// Like [`independence_polynomial`], also returning the memo table of the run.
pub fn independence_polynomial_with_memo(g: &Graph) -> (IntPoly, MemoTable) {
    let mut solver = Solver::new(g);
    let p = solver.solve(g.vertex_mask());
    (p, solver.memo)
}

/// `I(G; x)` by listing every independent set. Capped at 24 vertices.
pub fn brute_force_independence_polynomial(g: &Graph) -> Result<IntPoly> {
    let n = g.n();
    if n > BRUTE_FORCE_MAX_VERTICES {
        return Err(Error::Capacity(n));
    }
    let mut counts = vec![0u64; n + 1];
    // Extend the current set only with higher-numbered vertices so each
    // independent set is produced exactly once.
    fn extend(g: &Graph, next: usize, set: u64, size: usize, counts: &mut [u64]) {
        counts[size] += 1;
        for v in next..g.n() {
            if g.neighbors(v) & set == 0 {
                extend(g, v + 1, set | bit(v), size + 1, counts);
            }
        }
    }
    extend(g, 0, 0, 0, &mut counts);
    Ok(IntPoly::from_u64s(&counts))
}

/// `i_k(G)`, the number of independent sets of size `k`.
pub fn coefficient(g: &Graph, k: usize) -> BigInt {
    if k > g.n() {
        return BigInt::zero();
    }
    let c = independence_polynomial(g).coeff(k);
    match k {
        1 => debug_assert_eq!(c, BigInt::from(g.n())),
        2 => debug_assert_eq!(
            c,
            BigInt::from(g.n() * g.n().saturating_sub(1) / 2 - g.edge_count())
        ),
        _ => {}
    }
    c
}
