use alloc::vec::Vec;

use num_traits::Zero;

use super::{resultant, Poly, Rational};
use crate::{Error, Result};

/// Polynomial of degree below `points.len()` through the given points.
///
/// # Errors
/// Repeated abscissae.
pub fn interpolate(points: &[(Rational, Rational)]) -> Result<Poly> {
    let n = points.len();
    let xs: Vec<&Rational> = points.iter().map(|(x, _)| x).collect();
    let mut dd: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let den = xs[i] - xs[i - level];
            if den.is_zero() {
                return Err(Error::InvalidArgument("repeated interpolation node".into()));
            }
            dd[i] = (&dd[i] - &dd[i - 1]) / den;
        }
    }
    // Horner on the Newton form
    let mut acc = Poly::zero();
    for i in (0..n).rev() {
        let lin = Poly::new(alloc::vec![-xs[i].clone(), Rational::from_integer(1.into())]);
        acc = &(&acc * &lin) + &Poly::constant(dd[i].clone());
    }
    Ok(acc)
}

/// `R(t) = Res_z(q(z), f(z) - t)` as a polynomial in `t`, by evaluation at
/// `deg q + 1` integer points and interpolation.
pub fn resultant_in_t(q: &Poly, f: &Poly) -> Result<Poly> {
    let dq = q.degree().ok_or(Error::ZeroPolynomial("resultant_in_t"))?;
    let mut points = Vec::with_capacity(dq + 1);
    for i in 0..=dq {
        let t = Rational::from_integer((i as i64).into());
        let shifted = f - &Poly::constant(t.clone());
        points.push((t, resultant(q, &shifted)?));
    }
    interpolate(&points)
}
