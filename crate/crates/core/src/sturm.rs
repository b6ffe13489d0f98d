//! Real-rootedness by Sturm sequences over primitive integer polynomials.
//!
//! All remainders are fraction-free pseudo-remainders with their content
//! divided out. Signs are tracked so that each chain element is a positive
//! multiple of the remainder the classical rational Sturm chain would use,
//! which keeps the sign-variation count exact.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPoly;

/// Positive gcd of all coefficients; zero for the zero polynomial.
pub fn content(f: &IntPoly) -> BigInt {
    f.coeffs()
        .iter()
        .fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

/// `f` divided by its positive content. Leading sign is preserved.
pub fn primitive_part(f: &IntPoly) -> IntPoly {
    let c = content(f);
    if c.is_zero() || c.is_one() {
        return f.clone();
    }
    IntPoly::new(f.coeffs().iter().map(|a| a / &c).collect())
}

/// Pseudo-division: returns `(q, r, e)` with `lc(b)^e a = q b + r` and
/// `deg r < deg b`, where `e = deg a - deg b + 1` (or 0 if `deg a < deg b`).
fn pseudo_divide(a: &IntPoly, b: &IntPoly) -> (IntPoly, IntPoly, usize) {
    let db = b.degree().expect("pseudo-division by zero polynomial");
    let lc = b.leading_coeff().unwrap().clone();
    let Some(da) = a.degree().filter(|&da| da >= db) else {
        return (IntPoly::zero(), a.clone(), 0);
    };
    let total = da - db + 1;
    let mut e = da - db + 1;
    let mut q = IntPoly::zero();
    let mut r = a.clone();
    while let Some(dr) = r.degree().filter(|&dr| dr >= db) {
        let lead = r.leading_coeff().unwrap().clone();
        let term = IntPoly::monomial(lead, dr - db);
        q = &q.scale(&lc) + &term;
        r = &r.scale(&lc) - &(&term * b);
        e -= 1;
    }
    let fix = num_traits::pow(lc, e);
    (q.scale(&fix), r.scale(&fix), total)
}

/// A positive multiple of the remainder of `a` by `b` over the rationals.
fn signed_pseudo_remainder(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let (_, r, e) = pseudo_divide(a, b);
    let negative_factor = b.leading_coeff().unwrap().is_negative() && e % 2 == 1;
    if negative_factor {
        -&r
    } else {
        r
    }
}

/// Primitive gcd with positive leading coefficient. `gcd(0, 0) = 0`.
pub fn gcd(f: &IntPoly, g: &IntPoly) -> IntPoly {
    let mut a = primitive_part(f);
    let mut b = primitive_part(g);
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let (_, r, _) = pseudo_divide(&a, &b);
        a = b;
        b = primitive_part(&r);
    }
    if a.leading_coeff().is_some_and(Signed::is_negative) {
        a = -&a;
    }
    a
}

/// Exact quotient `f / g` up to a nonzero rational factor, returned primitive.
/// Requires `g` to divide `f` over the rationals.
pub fn divide_exact(f: &IntPoly, g: &IntPoly) -> IntPoly {
    let (q, r, _) = pseudo_divide(f, g);
    debug_assert!(r.is_zero(), "divide_exact: {g} does not divide {f}");
    primitive_part(&q)
}

/// `f / gcd(f, f')`: same roots as `f`, each with multiplicity one.
pub fn square_free_part(f: &IntPoly) -> IntPoly {
    let g = gcd(f, &f.derivative());
    if g.degree().unwrap_or(0) == 0 {
        return primitive_part(f);
    }
    divide_exact(f, &g)
}

/// Sturm chain `p0 = f, p1 = f', p_{i+1} = -rem(p_{i-1}, p_i)`, each entry
/// scaled by a positive constant.
pub fn sturm_chain(f: &IntPoly) -> Vec<IntPoly> {
    let mut chain = vec![primitive_part(f)];
    let d = primitive_part(&f.derivative());
    if d.is_zero() {
        return chain;
    }
    chain.push(d);
    loop {
        let n = chain.len();
        let r = signed_pseudo_remainder(&chain[n - 2], &chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(primitive_part(&-&r));
    }
    chain
}

fn sign_changes(signs: impl Iterator<Item = Sign>) -> usize {
    let mut last = Sign::NoSign;
    let mut changes = 0;
    for s in signs.filter(|&s| s != Sign::NoSign) {
        if last != Sign::NoSign && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

fn sign_at_infinity(p: &IntPoly, negative: bool) -> Sign {
    let lc = p.leading_coeff().map_or(Sign::NoSign, BigInt::sign);
    let odd = p.degree().unwrap_or(0) % 2 == 1;
    if negative && odd {
        -lc
    } else {
        lc
    }
}

/// Number of distinct real roots of `f`.
pub fn count_distinct_real_roots(f: &IntPoly) -> Result<usize> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let chain = sturm_chain(f);
    let at_neg = sign_changes(chain.iter().map(|p| sign_at_infinity(p, true)));
    let at_pos = sign_changes(chain.iter().map(|p| sign_at_infinity(p, false)));
    Ok(at_neg - at_pos)
}

/// Whether every complex zero of `f` is real.
pub fn real_rooted(f: &IntPoly) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let s = square_free_part(f);
    let count = count_distinct_real_roots(&s)?;
    Ok(count == s.degree().unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn real_rooted_examples() {
        assert!(real_rooted(&p(&[1, 3, 1])).unwrap());
        assert!(!real_rooted(&p(&[1, 1, 1])).unwrap());
        assert!(!real_rooted(&p(&[1, 4, 3, 1])).unwrap());
        assert_eq!(real_rooted(&IntPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn constants_and_linears() {
        assert!(real_rooted(&p(&[5])).unwrap());
        assert!(real_rooted(&p(&[-3])).unwrap());
        assert!(real_rooted(&p(&[1, 7])).unwrap());
        assert!(real_rooted(&p(&[0, 0, 2])).unwrap());
    }

    #[test]
    fn repeated_roots() {
        // (1+x)^5 (2+3x)^2
        let f = &p(&[1, 1]).pow(5) * &p(&[2, 3]).pow(2);
        assert!(real_rooted(&f).unwrap());
        assert_eq!(square_free_part(&f).degree(), Some(2));
        // (1+x^2)^2 has no real roots at all
        assert!(!real_rooted(&p(&[1, 0, 1]).pow(2)).unwrap());
    }

    #[test]
    fn negative_leading_coefficient() {
        // -(x-1)(x-2)(x-3) = -x^3 + 6x^2 - 11x + 6
        let f = p(&[6, -11, 6, -1]);
        assert_eq!(count_distinct_real_roots(&f).unwrap(), 3);
        assert!(real_rooted(&f).unwrap());
        // -(x^2+1)(x-1)
        let g = p(&[1, -1, 1, -1]);
        assert_eq!(count_distinct_real_roots(&g).unwrap(), 1);
        assert!(!real_rooted(&g).unwrap());
    }

    #[test]
    fn gcd_is_primitive() {
        let a = &p(&[2, 2]) * &p(&[1, 2, 3]);
        let b = &p(&[3, 3]) * &p(&[5, 1]);
        assert_eq!(gcd(&a, &b), p(&[1, 1]));
        assert_eq!(gcd(&a, &IntPoly::zero()), p(&[1, 2, 3]) * p(&[1, 1]));
    }
}
