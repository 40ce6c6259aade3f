use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::intpoly;
use super::{Poly, Rational};
use crate::{Error, Result};

/// Resultant with the convention `Res(A, B) = lc(A)^deg B * prod B(roots of A)`.
///
/// Denominators are cleared first and the integer resultant is computed with
/// the subresultant remainder sequence. A zero argument gives 0 against a
/// nonconstant partner and 1 against a nonzero constant.
pub fn resultant(a: &Poly, b: &Poly) -> Result<Rational> {
    match (a.degree(), b.degree()) {
        (None, None) => Err(Error::UndefinedResultant),
        (None, Some(0)) | (Some(0), None) => Ok(Rational::one()),
        (None, Some(_)) | (Some(_), None) => Ok(Rational::zero()),
        (Some(0), Some(db)) => Ok(pow(&a.coeff(0), db)),
        (Some(da), Some(0)) => Ok(pow(&b.coeff(0), da)),
        (Some(da), Some(db)) => {
            let (ai, ad) = a.to_integer_parts();
            let (bi, bd) = b.to_integer_parts();
            let r = int_resultant(&ai, &bi);
            let den = num_traits::pow(ad, db) * num_traits::pow(bd, da);
            Ok(Rational::new(r, den))
        }
    }
}

fn pow(x: &Rational, e: usize) -> Rational {
    num_traits::pow(x.clone(), e)
}

/// Subresultant PRS resultant of two nonconstant integer polynomials.
pub(crate) fn int_resultant(a: &[BigInt], b: &[BigInt]) -> BigInt {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    intpoly::trim(&mut a);
    intpoly::trim(&mut b);
    let (Some(mut da), Some(mut db)) = (intpoly::degree(&a), intpoly::degree(&b)) else {
        return BigInt::zero();
    };
    let ca = intpoly::content(&a);
    let cb = intpoly::content(&b);
    let t = num_traits::pow(ca.clone(), db) * num_traits::pow(cb.clone(), da);
    for c in a.iter_mut() {
        *c = &*c / &ca;
    }
    for c in b.iter_mut() {
        *c = &*c / &cb;
    }
    let mut s = BigInt::one();
    if da < db {
        core::mem::swap(&mut a, &mut b);
        core::mem::swap(&mut da, &mut db);
        if da % 2 == 1 && db % 2 == 1 {
            s = -s;
        }
    }
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            s = -s;
        }
        let r = intpoly::pseudo_rem(&a, &b);
        let divisor = &g * num_traits::pow(h.clone(), delta);
        a = b;
        da = db;
        b = r.into_iter().map(|c| c / &divisor).collect();
        g = a[da].clone();
        h = if delta == 0 {
            h
        } else {
            num_traits::pow(g.clone(), delta) / num_traits::pow(h, delta - 1)
        };
        match intpoly::degree(&b) {
            None => return BigInt::zero(),
            Some(0) => {
                let lb = b[0].clone();
                let num = num_traits::pow(lb, da);
                let hh = if da == 0 {
                    BigInt::one()
                } else {
                    num_traits::pow(h, da - 1)
                };
                return s * t * (num / hh);
            }
            Some(d) => db = d,
        }
    }
}
