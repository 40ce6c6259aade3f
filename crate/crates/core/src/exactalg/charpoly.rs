use alloc::vec::Vec;

use num_bigint::BigInt;
#[cfg(not(feature = "std"))]
use num_traits::Float;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::modular::{self, CrtOptions, ModularImage, ZpCtx};
use super::{Poly, Rational};
use crate::{Error, Result};

pub use super::modular::Engine;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CharpolyOptions {
    pub engine: Engine,
    pub crt: CrtOptions,
}

/// Characteristic polynomial of multiplication by `b` on `Q[z]/(a)`, as a
/// monic polynomial in a fresh variable of degree `deg a`. Its roots are the
/// values `b(r)` over the roots `r` of `a`, with multiplicity.
pub fn charpoly_mod(b: &Poly, a: &Poly) -> Result<Poly> {
    charpoly_mod_with(b, a, &CharpolyOptions::default())
}

pub fn charpoly_mod_with(b: &Poly, a: &Poly, opts: &CharpolyOptions) -> Result<Poly> {
    let n = match a.degree() {
        None => return Err(Error::ZeroPolynomial("charpoly_mod modulus")),
        Some(0) => return Err(Error::ConstantPolynomial("charpoly_mod modulus")),
        Some(n) => n,
    };
    let b = if b.degree().is_some_and(|d| d >= n) {
        b.rem(a)
    } else {
        b.clone()
    };
    if b.is_constant() {
        // (w - c)^n
        let c = b.coeff(0);
        return Ok(Poly::new(alloc::vec![-c, Rational::one()]).pow(n as u32));
    }
    let image = CharpolyImage::new(&b, a);
    let (mut coeffs, _) = modular::reconstruct(&ModularEngine(&image, opts.engine), &opts.crt)?;
    coeffs.push(Rational::one());
    Ok(Poly::new(coeffs))
}

/// Integer data of a charpoly problem over Q.
struct CharpolyImage {
    n: usize,
    a: Vec<BigInt>,
    a_den: BigInt,
    b: Vec<BigInt>,
    b_den: BigInt,
    log2_bound: f64,
}

impl CharpolyImage {
    fn new(b: &Poly, a: &Poly) -> Self {
        let n = a.deg();
        let (ai, a_den) = a.to_integer_parts();
        let (bi, b_den) = b.to_integer_parts();
        // Cauchy bound on the roots of a, then |b(r)| <= sum |b_j| R^j.
        let lc = a.leading().expect("nonzero").abs();
        let rmax = a.coeffs()[..n]
            .iter()
            .map(|c| c.abs() / &lc)
            .fold(Rational::zero(), |m, x| if x > m { x } else { m });
        let r = log2_of(&(rmax + Rational::one()));
        let beta = b
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| log2_of(&c.abs()) + j as f64 * r)
            .fold(f64::NEG_INFINITY, f64::max)
            + (b.coeffs().len() as f64).log2();
        // |e_k| <= C(n, k) beta^k <= 2^n beta^k
        let log2_bound = n as f64 + n as f64 * beta.max(0.0) + 1.0;
        CharpolyImage {
            n,
            a: ai,
            a_den,
            b: bi,
            b_den,
            log2_bound,
        }
    }
}

/// `log2 |x|` as a float, finite for nonzero `x` of any size.
pub(crate) fn log2_of(x: &Rational) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let n = x.numer().magnitude();
    let d = x.denom().magnitude();
    let sn = n.bits().saturating_sub(64);
    let sd = d.bits().saturating_sub(64);
    let top = |v: &num_bigint::BigUint, s: u64| (v >> s).to_f64().unwrap_or(f64::MAX).log2();
    top(n, sn) - top(d, sd) + sn as f64 - sd as f64
}

struct ModularEngine<'a>(&'a CharpolyImage, Engine);

impl ModularImage for ModularEngine<'_> {
    fn output_len(&self) -> usize {
        self.0.n
    }

    fn is_bad_prime(&self, p: u64) -> bool {
        let d = self.0;
        p <= d.n as u64
            || modular::reduce_int(&d.a_den, p) == 0
            || modular::reduce_int(&d.b_den, p) == 0
            || modular::reduce_int(&d.a[d.n], p) == 0
    }

    fn image(&self, p: u64) -> Option<Vec<u64>> {
        let d = self.0;
        let ctx = ZpCtx::new(p, 2 * d.n);
        let f = ctx.f;
        let lc_inv = f.inv(modular::reduce_int(&d.a[d.n], p));
        let a: Vec<u64> = d
            .a
            .iter()
            .map(|c| f.mul(modular::reduce_int(c, p), lc_inv))
            .collect();
        let bd_inv = f.inv(modular::reduce_int(&d.b_den, p));
        let b: Vec<u64> = d
            .b
            .iter()
            .map(|c| f.mul(modular::reduce_int(c, p), bd_inv))
            .collect();
        let mut cp = modular::charpoly_zp(&ctx, &b, &a, self.1);
        cp.truncate(d.n);
        Some(cp)
    }

    fn log2_bound(&self) -> f64 {
        self.0.log2_bound
    }

    fn two_adicity(&self) -> u32 {
        modular::two_adicity_for(self.0.n)
    }
}
