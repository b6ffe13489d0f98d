use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::ConditionVerdict;
use crate::engine::independence_polynomial;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::IntPoly;
use crate::products::lex_poly;
use crate::props::{is_log_concave, is_unimodal, Check};

fn require_positive(a: &[BigInt]) -> Result<()> {
    match a.iter().position(|c| !c.is_positive()) {
        Some(i) => Err(Error::Precondition(format!(
            "coefficient a_{i} = {} is not positive",
            a[i]
        ))),
        None if a.is_empty() => Err(Error::Precondition("empty coefficient list".into())),
        None => Ok(()),
    }
}

/// `(a_i^2 - a_{i-1} a_{i+1}) b1^2 >= a_i a_{i-1} b2` for `1 <= i <= n`,
/// with `a_{n+1} = 0`.
pub fn thm22_condition_i(a: &[BigInt], b1: &BigInt, b2: &BigInt) -> Result<ConditionVerdict> {
    require_positive(a)?;
    if !b1.is_positive() || b2.is_negative() {
        return Err(Error::Precondition(format!(
            "need b1 > 0 and b2 >= 0, got b1 = {b1}, b2 = {b2}"
        )));
    }
    let zero = BigInt::zero();
    let b1_sq = b1 * b1;
    let n = a.len() - 1;
    for i in 1..=n {
        let next = a.get(i + 1).unwrap_or(&zero);
        let lhs = (&a[i] * &a[i] - &a[i - 1] * next) * &b1_sq;
        let rhs = &a[i] * &a[i - 1] * b2;
        if lhs < rhs {
            return Ok(ConditionVerdict::new("thm22_i", false, Some(i)));
        }
    }
    Ok(ConditionVerdict::new("thm22_i", true, None))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionIiVerdict {
    pub verdict: ConditionVerdict,
    /// `a` weakly increasing and `b1 >= 1`, which implies the condition.
    pub increasing_special_case: bool,
}

/// `a_{i-1} <= b1 a_i` for `1 <= i <= n`.
pub fn thm22_condition_ii(a: &[BigInt], b1: &BigInt) -> Result<ConditionIiVerdict> {
    require_positive(a)?;
    if !b1.is_positive() {
        return Err(Error::Precondition(format!("need b1 > 0, got {b1}")));
    }
    let failing = (1..a.len()).find(|&i| a[i - 1] > b1 * &a[i]);
    let increasing = a.windows(2).all(|w| w[0] <= w[1]) && *b1 >= BigInt::one();
    let verdict = ConditionVerdict::new("thm22_ii", failing.is_none(), failing);
    debug_assert!(!increasing || verdict.holds);
    Ok(ConditionIiVerdict {
        verdict,
        increasing_special_case: increasing,
    })
}

/// Condition (i) on a pair of independence polynomials, together with the
/// log-concavity hypotheses on both. The conclusion (log-concavity of the
/// composition) is always evaluated.
pub fn thm22_i_on_polys(i1: &IntPoly, i2: &IntPoly) -> Result<ConditionVerdict> {
    let composed = lex_poly(i1, i2)?;
    let hypotheses = is_log_concave(i1, false).holds && is_log_concave(i2, false).holds;
    let mut verdict = thm22_condition_i(i1.coeffs(), &i2.coeff(1), &i2.coeff(2))?;
    verdict.holds &= hypotheses;
    Ok(verdict.with_conclusion(is_log_concave(&composed, false).holds))
}

/// Condition (ii) with its hypothesis that `I(G2)` is log-concave; the
/// conclusion is unimodality of the composition.
pub fn thm22_ii_on_polys(i1: &IntPoly, i2: &IntPoly) -> Result<ConditionVerdict> {
    let composed = lex_poly(i1, i2)?;
    let mut verdict = thm22_condition_ii(i1.coeffs(), &i2.coeff(1))?.verdict;
    verdict.holds &= is_log_concave(i2, false).holds;
    Ok(verdict.with_conclusion(is_unimodal(&composed)?.holds))
}

/// Both graphs well-covered, `I(G2)` log-concave and `|V(G2)| >= alpha(G1)`.
/// The conclusion is unimodality of `I(G1[G2])`.
pub fn prop26_condition(g1: &Graph, g2: &Graph) -> Result<ConditionVerdict> {
    let i1 = independence_polynomial(g1);
    let i2 = independence_polynomial(g2);
    let holds = g1.is_well_covered()
        && g2.is_well_covered()
        && is_log_concave(&i2, false).holds
        && g2.n() >= g1.alpha();
    let composed = lex_poly(&i1, &i2)?;
    Ok(ConditionVerdict::new("prop26", holds, None).with_conclusion(is_unimodal(&composed)?.holds))
}

/// `i_{k-1}(G) <= k i_k(G)` for `1 <= k <= alpha(G)`; requires `G`
/// well-covered.
pub fn bdn_inequality(g: &Graph) -> Result<Check> {
    if !g.is_well_covered() {
        return Err(Error::Precondition("graph is not well-covered".into()));
    }
    let i = independence_polynomial(g);
    let alpha = i.degree().unwrap_or(0);
    for k in 1..=alpha {
        if i.coeff(k - 1) > BigInt::from(k) * i.coeff(k) {
            return Ok(Check::fail_at(k));
        }
    }
    Ok(Check::PASS)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Fact1Verdict {
    /// Nonzero entries weakly increasing; the value reported as `holds`.
    pub holds: bool,
    /// Nonzero entries strictly increasing.
    pub strictly_increasing: bool,
}

/// Whether the nonzero entries of `d` are increasing, which makes
/// `sum d_i (1+x)^i` unimodal.
pub fn fact1_condition(d: &[BigInt]) -> Result<Fact1Verdict> {
    if let Some(i) = d.iter().position(Signed::is_negative) {
        return Err(Error::NegativeCoefficient(i));
    }
    let nonzero: Vec<&BigInt> = d.iter().filter(|c| !c.is_zero()).collect();
    Ok(Fact1Verdict {
        holds: nonzero.windows(2).all(|w| w[0] <= w[1]),
        strictly_increasing: nonzero.windows(2).all(|w| w[0] < w[1]),
    })
}
