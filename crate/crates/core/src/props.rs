//! Sequence predicates on coefficient lists: unimodality, log-concavity,
//! symmetry and Newton's inequalities, all in exact integer arithmetic.

use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::IntPoly;
use crate::sturm;

/// Outcome of a sequence predicate with the first offending index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub holds: bool,
    pub violation: Option<usize>,
}

impl Check {
    pub const PASS: Check = Check {
        holds: true,
        violation: None,
    };

    pub fn fail_at(k: usize) -> Check {
        Check {
            holds: false,
            violation: Some(k),
        }
    }
}

fn first_negative(f: &IntPoly) -> Option<usize> {
    f.coeffs().iter().position(Signed::is_negative)
}

/// Weakly rising then weakly falling coefficients. The violation index is the
/// position `j` after the peak where `a_j < a_{j+1}`, so an interior zero
/// between positive coefficients is a failure.
pub fn is_unimodal(f: &IntPoly) -> Result<Check> {
    if let Some(k) = first_negative(f) {
        return Err(Error::NegativeCoefficient(k));
    }
    let a = f.coeffs();
    let mut falling = false;
    for j in 0..a.len().saturating_sub(1) {
        if a[j] > a[j + 1] {
            falling = true;
        } else if falling && a[j] < a[j + 1] {
            return Ok(Check::fail_at(j));
        }
    }
    Ok(Check::PASS)
}

/// `a_k^2 >= a_{k-1} a_{k+1}` (or `>` when `strict`) for every interior `k`.
pub fn is_log_concave(f: &IntPoly, strict: bool) -> Check {
    let a = f.coeffs();
    for k in 1..a.len().saturating_sub(1) {
        let lhs = &a[k] * &a[k];
        let rhs = &a[k - 1] * &a[k + 1];
        let ok = if strict { lhs > rhs } else { lhs >= rhs };
        if !ok {
            return Check::fail_at(k);
        }
    }
    Check::PASS
}

pub fn is_symmetric(f: &IntPoly) -> bool {
    let a = f.coeffs();
    a.iter().eq(a.iter().rev())
}

/// Newton's inequalities with denominators cleared:
/// `k (n-k) a_k^2 >= (k+1)(n-k+1) a_{k-1} a_{k+1}` for `1 <= k <= n-1`.
/// Vacuously true below degree 2.
pub fn newton_check(f: &IntPoly) -> Check {
    let a = f.coeffs();
    let Some(n) = f.degree() else {
        return Check::PASS;
    };
    for k in 1..n {
        let lhs = BigInt::from(k * (n - k)) * &a[k] * &a[k];
        let rhs = BigInt::from((k + 1) * (n - k + 1)) * &a[k - 1] * &a[k + 1];
        if lhs < rhs {
            return Check::fail_at(k);
        }
    }
    Check::PASS
}

/// Smallest index of a maximal coefficient.
pub fn mode_index(f: &IntPoly) -> usize {
    let a = f.coeffs();
    let mut best = 0;
    for (k, c) in a.iter().enumerate() {
        if *c > a[best] {
            best = k;
        }
    }
    best
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Violations {
    pub unimodal: Option<usize>,
    pub log_concave: Option<usize>,
    pub strictly_log_concave: Option<usize>,
    pub newton: Option<usize>,
}

/// Every predicate evaluated on one polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub unimodal: bool,
    pub log_concave: bool,
    pub strictly_log_concave: bool,
    pub symmetric: bool,
    pub real_rooted: bool,
    pub newton_ok: bool,
    pub mode_index: usize,
    pub first_violation: Violations,
}

impl PropertyReport {
    /// Requires a nonzero polynomial with nonnegative coefficients.
    pub fn evaluate(f: &IntPoly) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let unimodal = is_unimodal(f)?;
        let lc = is_log_concave(f, false);
        let slc = is_log_concave(f, true);
        let newton = newton_check(f);
        let report = PropertyReport {
            unimodal: unimodal.holds,
            log_concave: lc.holds,
            strictly_log_concave: slc.holds,
            symmetric: is_symmetric(f),
            real_rooted: sturm::real_rooted(f)?,
            newton_ok: newton.holds,
            mode_index: mode_index(f),
            first_violation: Violations {
                unimodal: unimodal.violation,
                log_concave: lc.violation,
                strictly_log_concave: slc.violation,
                newton: newton.violation,
            },
        };
        assert!(
            report.is_consistent(f),
            "inconsistent property report for {f}: {report:?}"
        );
        Ok(report)
    }

    /// The implication chain for positive coefficient sequences:
    /// strictly log-concave => log-concave, and
    /// real-rooted => Newton => log-concave => unimodal.
    pub fn is_consistent(&self, f: &IntPoly) -> bool {
        if self.strictly_log_concave && !self.log_concave {
            return false;
        }
        if !f.has_positive_coeffs() {
            return true;
        }
        let implies = |a: bool, b: bool| !a || b;
        implies(self.real_rooted, self.newton_ok)
            && implies(self.newton_ok, self.log_concave)
            && implies(self.log_concave, self.unimodal)
    }
}
