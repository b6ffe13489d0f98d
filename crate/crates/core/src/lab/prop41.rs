//! Rooted products with the two fixed claw-containing trees.
//!
//! With `T` rooted at 1, 2 or 3 the product with a real-rooted `G` stays
//! real-rooted; with `T` rooted at 4, and with `T1` at any of 1..=4, it stays
//! log-concave.

use num_rational::BigRational;
use num_traits::Signed;

use super::ConditionVerdict;
use crate::engine::independence_polynomial;
use crate::error::{Error, Result};
use crate::family::Fig2Tree;
use crate::graph::Graph;
use crate::products::rooted_product;
use crate::props::is_log_concave;
use crate::sturm::real_rooted;

/// Builds `G ∘ tree` rooted at `root_label` and checks the conclusion that
/// applies to that root. Fails if `I(G)` is not real-rooted.
pub fn prop41_verify(g: &Graph, tree: Fig2Tree, root_label: usize) -> Result<ConditionVerdict> {
    let root = Fig2Tree::root_index(root_label)?;
    if !real_rooted(&independence_polynomial(g))? {
        return Err(Error::Precondition("I(G) is not real-rooted".into()));
    }
    let product = rooted_product(g, &tree.graph(), root)?;
    let i = independence_polynomial(&product);
    let (name, observed) = match (tree, root_label) {
        (Fig2Tree::T, 1..=3) => ("prop41_T_real_rooted", real_rooted(&i)?),
        (Fig2Tree::T, _) => ("prop41_T_log_concave", is_log_concave(&i, false).holds),
        (Fig2Tree::T1, _) => ("prop41_T1_log_concave", is_log_concave(&i, false).holds),
    };
    Ok(ConditionVerdict::new(name, true, None).with_conclusion(observed))
}

/// For `r > 0`: whether `1 + (3+2r)x + 2r x^2` has positive discriminant, and
/// whether `1 + (3+r)x + 3(1+r)x^2 + (1+r)x^3` satisfies both interior
/// log-concavity inequalities strictly.
pub fn prop41_factor_check(r: &BigRational) -> Result<(bool, bool)> {
    if !r.is_positive() {
        return Err(Error::Precondition(format!("need r > 0, got {r}")));
    }
    // With r = p/q, every inequality is multiplied through by q^2 > 0.
    let (p, q) = (r.numer(), r.denom());
    let b = q * 3 + p * 2;
    let disc_positive = &b * &b > p * q * 8;
    let one_r = q + p;
    let three_r = q * 3 + p;
    // 9(1+r)^2 > (1+r)(3+r), divided by 1+r > 0.
    let middle = &one_r * 9 > three_r;
    let low = &three_r * &three_r > q * &one_r * 3;
    Ok((disc_positive, middle && low))
}
