use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::PolyMap;
use crate::exactalg::{Poly, Rational};
use crate::{Error, Result};

/// Chebyshev polynomial `T_d` normalized by `T_d(z + 1/z) = z^d + z^-d`:
/// `T_0 = 2`, `T_1 = z`, `T_{n+1} = z T_n - T_{n-1}`.
pub fn chebyshev(d: u32) -> Result<PolyMap> {
    if d == 0 {
        return Err(Error::InvalidArgument("chebyshev degree must be positive".into()));
    }
    let z = Poly::z();
    let mut prev = Poly::from_i64s(&[2]);
    let mut cur = z.clone();
    for _ in 1..d {
        let next = &(&z * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    PolyMap::new(cur)
}

/// Elementary symmetric functions `e_0..e_n` of the given values.
pub(crate) fn elementary_symmetric(xs: &[Rational]) -> Vec<Rational> {
    let mut e = vec![Rational::zero(); xs.len() + 1];
    e[0] = Rational::one();
    for (i, x) in xs.iter().enumerate() {
        for k in (1..=i + 1).rev() {
            let t = &e[k - 1] * x;
            e[k] += t;
        }
    }
    e
}

/// The critically marked polynomial
/// `z^d/d + sum_{j=2}^{d-1} (-1)^{d-j} e_{d-j}(c) z^j / j + a^d`,
/// whose finite critical points are `0, c_1, ..., c_{d-2}`.
pub fn build_pca(c: &[Rational], a: &Rational, d: usize) -> Result<PolyMap> {
    if d < 2 {
        return Err(Error::DegreeTooSmall {
            op: "build_pca",
            found: d,
            required: 2,
        });
    }
    if c.len() != d - 2 {
        return Err(Error::InvalidArgument(alloc::format!(
            "expected {} critical points, got {}",
            d - 2,
            c.len()
        )));
    }
    let e = elementary_symmetric(c);
    let mut coeffs = vec![Rational::zero(); d + 1];
    coeffs[d] = Rational::new(BigInt::one(), BigInt::from(d));
    for j in 2..d {
        let sign = if (d - j) % 2 == 0 { 1 } else { -1 };
        coeffs[j] = &e[d - j] * Rational::new(BigInt::from(sign), BigInt::from(j));
    }
    coeffs[0] = num_traits::pow(a.clone(), d);
    PolyMap::new(Poly::new(coeffs))
}
