use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Zero};

use super::PolyMap;
use crate::exactalg::{Poly, Rational};
use crate::{Error, Result};

/// Exact description of an algebraic scale `alpha` with `alpha^exponent =
/// value`, together with the relations `alpha^e = r` that were checked when
/// the certificate was issued.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootCertificate {
    pub exponent: u32,
    pub value: Rational,
    pub relations: Vec<(i64, Rational)>,
}

impl RootCertificate {
    /// Re-checks that every relation follows from `alpha^exponent = value`.
    pub fn verify(&self) -> bool {
        let g = i64::from(self.exponent);
        self.exponent > 0
            && !self.value.is_zero()
            && self
                .relations
                .iter()
                .all(|(e, r)| e % g == 0 && ipow(&self.value, e / g) == *r)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scale {
    Rational(Rational),
    Root(RootCertificate),
}

/// `sigma(z) = scale * (z + pre_shift) + shift`.
///
/// With a rational scale the pre-shift is folded into `shift` and is always
/// zero; it only carries information when the scale is a certified root.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineMap {
    scale: Scale,
    pre_shift: Rational,
    shift: Rational,
}

impl AffineMap {
    /// `alpha z + beta`.
    pub fn new(alpha: Rational, beta: Rational) -> Result<Self> {
        if alpha.is_zero() {
            return Err(Error::InvalidArgument("affine scale must be nonzero".into()));
        }
        Ok(AffineMap {
            scale: Scale::Rational(alpha),
            pre_shift: Rational::zero(),
            shift: beta,
        })
    }

    pub fn identity() -> Self {
        Self::translation(Rational::zero())
    }

    pub fn translation(beta: Rational) -> Self {
        AffineMap {
            scale: Scale::Rational(Rational::one()),
            pre_shift: Rational::zero(),
            shift: beta,
        }
    }

    /// `alpha (z + pre) + post` with `alpha` known only through a
    /// certificate.
    pub fn certified(cert: RootCertificate, pre: Rational, post: Rational) -> Self {
        AffineMap {
            scale: Scale::Root(cert),
            pre_shift: pre,
            shift: post,
        }
    }

    pub fn scale(&self) -> &Scale {
        &self.scale
    }

    pub fn rational_scale(&self) -> Option<&Rational> {
        match &self.scale {
            Scale::Rational(a) => Some(a),
            Scale::Root(_) => None,
        }
    }

    pub fn pre_shift(&self) -> &Rational {
        &self.pre_shift
    }

    pub fn shift(&self) -> &Rational {
        &self.shift
    }

    pub fn is_identity(&self) -> bool {
        self.rational_scale().is_some_and(One::is_one) && self.shift.is_zero()
    }

    fn parts(&self) -> Result<(&Rational, &Rational)> {
        match &self.scale {
            Scale::Rational(a) => Ok((a, &self.shift)),
            Scale::Root(_) => Err(Error::SymbolicScale),
        }
    }

    pub fn to_poly(&self) -> Result<Poly> {
        let (a, b) = self.parts()?;
        Ok(Poly::new(alloc::vec![b.clone(), a.clone()]))
    }

    pub fn apply(&self, x: &Rational) -> Result<Rational> {
        let (a, b) = self.parts()?;
        Ok(a * x + b)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &AffineMap) -> Result<AffineMap> {
        let (a1, b1) = self.parts()?;
        let (a2, b2) = other.parts()?;
        AffineMap::new(a1 * a2, a1 * b2 + b1)
    }

    pub fn inverse(&self) -> Result<AffineMap> {
        let (a, b) = self.parts()?;
        let ai = a.recip();
        let shift = -(&ai * b);
        AffineMap::new(ai, shift)
    }
}

impl fmt::Display for AffineMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.scale {
            Scale::Rational(a) => {
                write!(f, "{}", Poly::new(alloc::vec![self.shift.clone(), a.clone()]))
            }
            Scale::Root(c) => write!(
                f,
                "a*(z + {}) + {} where a^{} = {}",
                self.pre_shift, self.shift, c.exponent, c.value
            ),
        }
    }
}

fn ipow(x: &Rational, e: i64) -> Rational {
    let p = num_traits::pow(x.clone(), e.unsigned_abs() as usize);
    if e < 0 {
        p.recip()
    } else {
        p
    }
}

fn int_root(x: &BigInt, n: u32) -> Option<BigInt> {
    if x.sign() == Sign::Minus && n % 2 == 0 {
        return None;
    }
    let r = x.magnitude().nth_root(n);
    if num_traits::pow(r.clone(), n as usize) != *x.magnitude() {
        return None;
    }
    let r = BigInt::from(r);
    Some(if x.sign() == Sign::Minus { -r } else { r })
}

/// A rational `n`-th root of `x`, preferring the positive one.
pub(crate) fn rational_root(x: &Rational, n: u32) -> Option<Rational> {
    let num = int_root(x.numer(), n)?;
    let den = int_root(x.denom(), n)?;
    Some(Rational::new(num, den))
}

/// `sigma ∘ f ∘ sigma^{-1}`.
pub fn conjugate(f: &PolyMap, sigma: &AffineMap) -> Result<PolyMap> {
    let (a, b) = sigma.parts()?;
    let inv = Poly::new(alloc::vec![-(b / a), a.recip()]);
    let inner = f.poly().compose(&inv);
    let out = &inner.scale(a) + &Poly::constant(b.clone());
    PolyMap::new(out)
}

/// Shift `c` with `z -> f(z - c) + c` free of the `z^{d-1}` term.
pub(crate) fn centering_shift(f: &PolyMap) -> Rational {
    let d = f.degree();
    f.poly().coeff(d - 1) / (f.leading() * Rational::from_integer(BigInt::from(d)))
}

pub(crate) fn centered(f: &PolyMap) -> (Poly, Rational) {
    let c = centering_shift(f);
    let shifted = f.poly().compose(&Poly::new(alloc::vec![-c.clone(), Rational::one()]));
    (&shifted + &Poly::constant(c.clone()), c)
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        return (a, 1, 0);
    }
    let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
    (g, y, x - a.div_euclid(b) * y)
}

/// Decides whether `g = sigma ∘ f ∘ sigma^{-1}` for some complex affine
/// `sigma`, returning a witness.
///
/// After centering both maps only `sigma(z) = alpha z` remains, which
/// multiplies the coefficient of `z^j` by `alpha^{1-j}`. The constraints
/// `alpha^{1-j} = g_j / f_j` are solvable iff they are consistent on the
/// lattice generated by the exponents.
pub fn conjugacy_test(f: &PolyMap, g: &PolyMap) -> Result<Option<AffineMap>> {
    f.require_dynamical("conjugacy_test")?;
    g.require_dynamical("conjugacy_test")?;
    if f.degree() != g.degree() {
        return Err(Error::DegreeMismatch(f.degree(), g.degree()));
    }
    let d = f.degree();
    let (cf_poly, cf) = centered(f);
    let (cg_poly, cg) = centered(g);
    let mut constraints: Vec<(i64, Rational)> = Vec::new();
    for j in 0..=d {
        let a = cf_poly.coeff(j);
        let b = cg_poly.coeff(j);
        if a.is_zero() != b.is_zero() {
            return Ok(None);
        }
        if a.is_zero() {
            continue;
        }
        if j == 1 {
            if a != b {
                return Ok(None);
            }
            continue;
        }
        // beta = 1/alpha satisfies beta^{j-1} = b/a
        constraints.push((j as i64 - 1, b / a));
    }
    let mut g0 = 0i64;
    let mut coef: Vec<i64> = Vec::with_capacity(constraints.len());
    for (e, _) in &constraints {
        if coef.is_empty() {
            g0 = *e;
            coef.push(1);
            continue;
        }
        let (g, x, y) = ext_gcd(g0, *e);
        for c in coef.iter_mut() {
            *c *= x;
        }
        coef.push(y);
        g0 = g;
    }
    if g0 < 0 {
        g0 = -g0;
        for c in coef.iter_mut() {
            *c = -*c;
        }
    }
    let rho = constraints
        .iter()
        .zip(&coef)
        .fold(Rational::one(), |acc, ((_, r), &u)| acc * ipow(r, u));
    if !constraints.iter().all(|(e, r)| ipow(&rho, e / g0) == *r) {
        return Ok(None);
    }
    let g0u = u32::try_from(g0).expect("exponents are bounded by the degree");
    if let Some(beta) = rational_root(&rho, g0u) {
        let alpha = beta.recip();
        let shift = &alpha * &cf - &cg;
        return AffineMap::new(alpha, shift).map(Some);
    }
    // alpha^{g0} = 1/rho; relations alpha^{-e} = r
    let cert = RootCertificate {
        exponent: g0u,
        value: rho.recip(),
        relations: constraints.into_iter().map(|(e, r)| (-e, r)).collect(),
    };
    debug_assert!(cert.verify());
    Ok(Some(AffineMap::certified(cert, cf, -cg)))
}
