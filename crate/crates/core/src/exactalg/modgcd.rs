//! Multi-modular gcd for polynomials too large for the remainder sequence.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::charpoly::log2_of;
use super::intpoly;
use super::modular::{self, CrtOptions, ModularImage, ZpCtx};
use super::{Poly, Rational};

struct GcdImage<'a> {
    a: &'a [BigInt],
    b: &'a [BigInt],
    degree: usize,
    log2_bound: f64,
}

fn reduce(a: &[BigInt], p: u64) -> Vec<u64> {
    let mut v: Vec<u64> = a.iter().map(|c| modular::reduce_int(c, p)).collect();
    super::modular::trim_zp(&mut v);
    v
}

impl GcdImage<'_> {
    fn gcd_mod(&self, p: u64) -> Vec<u64> {
        let ctx = ZpCtx::new(p, 1);
        ctx.gcd(&reduce(self.a, p), &reduce(self.b, p))
    }
}

impl ModularImage for GcdImage<'_> {
    fn output_len(&self) -> usize {
        self.degree
    }

    fn is_bad_prime(&self, p: u64) -> bool {
        modular::reduce_int(self.a.last().expect("nonzero"), p) == 0
            || modular::reduce_int(self.b.last().expect("nonzero"), p) == 0
    }

    fn image(&self, p: u64) -> Option<Vec<u64>> {
        let mut g = self.gcd_mod(p);
        if g.len() != self.degree + 1 {
            return None;
        }
        g.pop();
        Some(g)
    }

    fn log2_bound(&self) -> f64 {
        self.log2_bound
    }
}

/// Monic gcd over Q of two integer polynomials, or `None` if the modular
/// candidate fails the final divisibility check.
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> Option<Poly> {
    let mut img = GcdImage {
        a,
        b,
        degree: 0,
        log2_bound: 0.0,
    };
    // The true degree is at most the degree modulo any good prime; take the
    // minimum over a few primes to steer clear of unlucky ones.
    let degree = modular::NttPrimes::new(1)
        .filter(|&p| !img.is_bad_prime(p))
        .take(4)
        .map(|p| img.gcd_mod(p).len() - 1)
        .min()?;
    if degree == 0 {
        return Some(Poly::one());
    }
    img.degree = degree;
    // A monic factor has roots inside the Cauchy disk of `a`, so its
    // coefficients are at most C(k, i) R^i.
    let lc = Rational::from_integer(a.last().expect("nonzero").abs());
    let rmax = a[..a.len() - 1]
        .iter()
        .map(|c| Rational::from_integer(c.abs()) / &lc)
        .fold(Rational::zero(), |m, x| if x > m { x } else { m });
    let r = log2_of(&(rmax + Rational::one())).max(0.0);
    img.log2_bound = degree as f64 * (1.0 + r) + 1.0;
    let (mut coeffs, _) = modular::reconstruct(&img, &CrtOptions::default()).ok()?;
    coeffs.push(Rational::one());
    let g = Poly::new(coeffs);
    let gi = g.primitive_part();
    let divides = intpoly::exact_div(a, &gi).is_some() && intpoly::exact_div(b, &gi).is_some();
    divides.then_some(g)
}
