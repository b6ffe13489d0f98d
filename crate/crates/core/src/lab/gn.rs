//! The pendant-ladder family `G_n`: its three-term recurrence, the
//! trigonometric product form, and the symmetry/real-rootedness sweep.

use std::f64::consts::PI;

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::engine::independence_polynomial;
use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::poly::IntPoly;
use crate::props::is_symmetric;
use crate::sturm::real_rooted;

/// `I(G_n)` from `I(G_n) = (1+x) I(G_{n-1}) + x I(G_{n-2})` with
/// `I(G_{-1}) = 1` and `I(G_0) = 1 + x`.
pub fn gn_poly_recurrence(n: i64) -> Result<IntPoly> {
    if n < -1 {
        return Err(Error::InvalidParameter(format!("G_n needs n >= -1, got {n}")));
    }
    let one_x = IntPoly::one_plus_x();
    let mut prev = IntPoly::one();
    if n == -1 {
        return Ok(prev);
    }
    let mut cur = one_x.clone();
    for _ in 0..n {
        let next = &(&one_x * &cur) + &prev.shift(1);
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(cur)
}

/// Coefficients of `(1+x)^d prod_{s=1}^{ceil(n/2)} [(1+x)^2 + 4x cos^2(s pi/(n+2))]`,
/// `d = 1` for even `n` and 0 for odd, expanded in double precision.
pub fn gn_closed_form_coeffs(n: usize) -> Vec<f64> {
    let mul = |a: &[f64], b: &[f64]| {
        let mut out = vec![0.0; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    };
    let mut acc = if n.is_multiple_of(2) { vec![1.0, 1.0] } else { vec![1.0] };
    for s in 1..=n.div_ceil(2) {
        let c = (s as f64 * PI / (n as f64 + 2.0)).cos();
        acc = mul(&acc, &[1.0, 2.0 + 4.0 * c * c, 1.0]);
    }
    acc
}

/// Whether every coefficient of the product form is within relative error
/// `tol` of the recurrence polynomial.
pub fn gn_closed_form_check(n: usize, tol: f64) -> bool {
    let exact = gn_poly_recurrence(n as i64).expect("n >= 0");
    let approx = gn_closed_form_coeffs(n);
    approx.len() == exact.coeffs().len()
        && exact.coeffs().iter().zip(&approx).all(|(e, a)| {
            let e = e.to_f64().unwrap_or(f64::INFINITY);
            (a - e).abs() <= tol * e.abs()
        })
}

/// Whether the graph engine on `G_n` agrees with the recurrence.
pub fn gn_graph_check(n: usize) -> Result<bool> {
    let g = FamilySpec::PendantLadderG(n).build()?;
    Ok(independence_polynomial(&g) == gn_poly_recurrence(n as i64)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Thm52Row {
    pub n: usize,
    pub symmetric: bool,
    pub real_rooted: bool,
    pub degree_ok: bool,
}

impl Thm52Row {
    pub fn passed(&self) -> bool {
        self.symmetric && self.real_rooted && self.degree_ok
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Thm52Report {
    pub rows: Vec<Thm52Row>,
}

impl Thm52Report {
    pub fn all_passed(&self) -> bool {
        self.rows.iter().all(Thm52Row::passed)
    }
}

/// For each `0 <= n <= n_max`: `I(G_n)` is palindromic, real-rooted, and of
/// degree `n + 1`.
pub fn thm52_verify(n_max: usize) -> Thm52Report {
    let rows = (0..=n_max)
        .map(|n| {
            let p = gn_poly_recurrence(n as i64).expect("n >= 0");
            Thm52Row {
                n,
                symmetric: is_symmetric(&p),
                real_rooted: real_rooted(&p).expect("nonzero"),
                degree_ok: p.degree() == Some(n + 1),
            }
        })
        .collect();
    Thm52Report { rows }
}
