//! Graph products, and the polynomial formulas that predict their
//! independence polynomials without building the graph.

use num_bigint::BigInt;
use num_traits::One;

use crate::engine::independence_polynomial;
use crate::error::{Error, Result, MAX_VERTICES};
use crate::graph::Graph;
use crate::poly::IntPoly;

fn check_size(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::Capacity(n));
    }
    Ok(())
}

/// `G1 ⊔ G2`; vertices of `g2` follow those of `g1`.
pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Result<Graph> {
    let n1 = g1.n();
    check_size(n1 + g2.n())?;
    let mut g = Graph::empty(n1 + g2.n())?;
    for (u, v) in g1.edges() {
        g.add_edge(u, v)?;
    }
    for (u, v) in g2.edges() {
        g.add_edge(n1 + u, n1 + v)?;
    }
    Ok(g)
}

/// `G1 + G2`: disjoint union plus every edge between the two sides.
pub fn join(g1: &Graph, g2: &Graph) -> Result<Graph> {
    let mut g = disjoint_union(g1, g2)?;
    let n1 = g1.n();
    for u in 0..n1 {
        for v in 0..g2.n() {
            g.add_edge(u, n1 + v)?;
        }
    }
    Ok(g)
}

/// Disjoint union of `k` copies of `g`.
pub fn copies(g: &Graph, k: usize) -> Result<Graph> {
    (0..k).try_fold(Graph::empty(0)?, |acc, _| disjoint_union(&acc, g))
}

/// Lexicographic product `G1[G2]`. Vertex `(a, u)` has index `a * |G2| + u`;
/// `(a, u) ~ (b, w)` iff `a ~ b` in `G1`, or `a = b` and `u ~ w` in `G2`.
pub fn lexicographic(g1: &Graph, g2: &Graph) -> Result<Graph> {
    let (n1, n2) = (g1.n(), g2.n());
    check_size(n1 * n2)?;
    let mut g = Graph::empty(n1 * n2)?;
    for a in 0..n1 {
        for (u, w) in g2.edges() {
            g.add_edge(a * n2 + u, a * n2 + w)?;
        }
    }
    for (a, b) in g1.edges() {
        for u in 0..n2 {
            for w in 0..n2 {
                g.add_edge(a * n2 + u, b * n2 + w)?;
            }
        }
    }
    Ok(g)
}

fn require_unit_constant(p: &IntPoly, what: &str) -> Result<()> {
    if !p.constant_term().is_one() {
        return Err(Error::Precondition(format!(
            "{what} must have constant term 1, got {p}"
        )));
    }
    Ok(())
}

/// `I(G1; I(G2; x) - 1)`, the independence polynomial of `G1[G2]`.
pub fn lex_poly(i1: &IntPoly, i2: &IntPoly) -> Result<IntPoly> {
    require_unit_constant(i2, "I(G2)")?;
    Ok(i1.compose(&(i2 - &IntPoly::one())))
}

/// Rooted product `G ∘ H`: copy `i` of `H` occupies indices
/// `i * |H| .. (i + 1) * |H|`, its root is identified with vertex `i` of `G`,
/// and `G`'s edges join the roots.
pub fn rooted_product(g: &Graph, h: &Graph, root: usize) -> Result<Graph> {
    let (n, m) = (g.n(), h.n());
    if root >= m {
        return Err(Error::VertexOutOfRange { vertex: root, n: m });
    }
    check_size(n * m)?;
    let mut out = Graph::empty(n * m)?;
    for i in 0..n {
        for (u, w) in h.edges() {
            out.add_edge(i * m + u, i * m + w)?;
        }
    }
    for (a, b) in g.edges() {
        out.add_edge(a * m + root, b * m + root)?;
    }
    Ok(out)
}

/// `sum_k a_k x^k I(H - N[v])^k I(H - v)^(n - k)` where `I(G) = sum a_k x^k`:
/// the rooted-product formula with its rational substitution cleared.
pub fn rooted_product_poly(
    ig: &IntPoly,
    ih_minus_v: &IntPoly,
    ih_minus_nv: &IntPoly,
    n: usize,
) -> Result<IntPoly> {
    let alpha = ig.degree().unwrap_or(0);
    if alpha > n {
        return Err(Error::Precondition(format!(
            "deg I(G) = {alpha} exceeds the vertex count {n}"
        )));
    }
    require_unit_constant(ih_minus_v, "I(H - v)")?;
    require_unit_constant(ih_minus_nv, "I(H - N[v])")?;
    let mut acc = IntPoly::zero();
    let mut nv_pow = IntPoly::one();
    for (k, a) in ig.coeffs().iter().enumerate() {
        let term = &(&nv_pow * &ih_minus_v.pow((n - k) as u32)).shift(k);
        acc = &acc + &term.scale(a);
        nv_pow = &nv_pow * ih_minus_nv;
    }
    Ok(acc)
}

/// [`rooted_product_poly`] with the two sub-polynomials computed from `h`.
pub fn rooted_product_poly_for(ig: &IntPoly, g_order: usize, h: &Graph, root: usize) -> Result<IntPoly> {
    if root >= h.n() {
        return Err(Error::VertexOutOfRange { vertex: root, n: h.n() });
    }
    let ihv = independence_polynomial(&h.delete_vertex(root)?);
    let ihnv = independence_polynomial(&h.delete_closed_neighborhood(root)?);
    rooted_product_poly(ig, &ihv, &ihnv, g_order)
}

/// `I(G1) + I(G2) - 1`, the independence polynomial of the join.
pub fn join_poly(i1: &IntPoly, i2: &IntPoly) -> Result<IntPoly> {
    require_unit_constant(i1, "I(G1)")?;
    require_unit_constant(i2, "I(G2)")?;
    let p = &(i1 + i2) - &IntPoly::one();
    debug_assert!(p.constant_term().is_one());
    Ok(p)
}

/// `sum_i (1+x)^{n_i} - (k - 1)` for `K_{n_1,...,n_k}`.
pub fn multipartite_poly(parts: &[usize]) -> Result<IntPoly> {
    if parts.is_empty() {
        return Err(Error::InvalidParameter("need at least one part".into()));
    }
    if parts.contains(&0) {
        return Err(Error::InvalidParameter("part sizes must be positive".into()));
    }
    let base = IntPoly::one_plus_x();
    let sum = parts
        .iter()
        .fold(IntPoly::zero(), |acc, &m| &acc + &base.pow(m as u32));
    let p = &sum - &IntPoly::constant(BigInt::from(parts.len() - 1));
    debug_assert!(p.constant_term().is_one());
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::FamilySpec;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn build(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().build().unwrap()
    }

    #[test]
    fn join_counterexample() {
        let three_k4 = copies(&build("complete:4"), 3).unwrap();
        let g = join(&three_k4, &build("complete:37")).unwrap();
        assert_eq!(g.n(), 49);
        assert_eq!(independence_polynomial(&g), p(&[1, 49, 48, 64]));
    }

    #[test]
    fn union_and_join_examples() {
        let k1 = build("path:1");
        assert_eq!(
            independence_polynomial(&disjoint_union(&k1, &k1).unwrap()),
            p(&[1, 2, 1])
        );
        let k23 = join(&build("empty:2"), &build("empty:3")).unwrap();
        assert_eq!(k23, build("multipartite:2,3"));
        assert_eq!(
            disjoint_union(&build("empty:40"), &build("empty:25")),
            Err(Error::Capacity(65))
        );
    }

    #[test]
    fn lexicographic_examples() {
        let k2 = build("complete:2");
        let e2 = build("empty:2");
        assert_eq!(lexicographic(&k2, &k2).unwrap(), build("complete:4"));
        assert_eq!(lexicographic(&e2, &k2).unwrap(), copies(&k2, 2).unwrap());
        let c4 = lexicographic(&k2, &e2).unwrap();
        assert_eq!(c4.edge_count(), 4);
        assert!((0..4).all(|v| c4.degree(v) == 2));
        assert_eq!(
            lexicographic(&build("empty:9"), &build("empty:8")),
            Err(Error::Capacity(72))
        );
    }

    #[test]
    fn lex_poly_examples() {
        assert_eq!(lex_poly(&p(&[1, 2]), &p(&[1, 2])).unwrap(), p(&[1, 4]));
        assert_eq!(lex_poly(&p(&[1, 2, 1]), &p(&[1, 2])).unwrap(), p(&[1, 4, 4]));
        let f = p(&[1, 7, 9, 2]);
        assert_eq!(lex_poly(&f, &p(&[1, 1])).unwrap(), f);
        assert!(lex_poly(&f, &p(&[2, 1])).is_err());
    }

    #[test]
    fn rooted_product_examples() {
        let p2 = build("path:2");
        for root in 0..2 {
            let g = rooted_product(&p2, &p2, root).unwrap();
            assert!(g.is_tree());
            assert_eq!(independence_polynomial(&g), p(&[1, 4, 3]));
        }
        let h = build("T");
        assert_eq!(rooted_product(&build("path:1"), &h, 3).unwrap(), h);
        assert!(rooted_product(&p2, &p2, 2).is_err());
        assert_eq!(
            rooted_product(&build("path:9"), &build("path:8"), 0),
            Err(Error::Capacity(72))
        );
    }

    #[test]
    fn rooted_poly_examples() {
        assert_eq!(
            rooted_product_poly(&p(&[1, 2]), &p(&[1, 1]), &p(&[1]), 2).unwrap(),
            p(&[1, 4, 3])
        );
        assert_eq!(
            rooted_product_poly(&p(&[1, 3, 1]), &p(&[1, 1]), &p(&[1]), 3).unwrap(),
            p(&[1, 6, 10, 5])
        );
        let comb = rooted_product(&build("path:3"), &build("path:2"), 0).unwrap();
        assert_eq!(independence_polynomial(&comb), p(&[1, 6, 10, 5]));
        // H = K1: the product is G itself
        let ig = p(&[1, 5, 5]);
        assert_eq!(rooted_product_poly(&ig, &p(&[1]), &p(&[1]), 5).unwrap(), ig);
        assert!(rooted_product_poly(&p(&[1, 3, 1]), &p(&[1, 1]), &p(&[1]), 1).is_err());
    }

    #[test]
    fn multipartite_examples() {
        let mut parts = vec![1; 26];
        parts.push(8);
        assert_eq!(
            multipartite_poly(&parts).unwrap(),
            p(&[1, 34, 28, 56, 70, 56, 28, 8, 1])
        );
        assert_eq!(multipartite_poly(&[2, 3]).unwrap(), p(&[1, 5, 4, 1]));
        assert_eq!(multipartite_poly(&[6]).unwrap(), p(&[1, 1]).pow(6));
        assert!(multipartite_poly(&[]).is_err());
    }
}
