//! Polynomial maps as dynamical systems: orbits, affine conjugation, named
//! families and affine symmetry groups.

mod affine;
mod families;
mod symmetry;

pub use affine::{conjugacy_test, conjugate, AffineMap, RootCertificate, Scale};
pub use families::{build_pca, chebyshev};
pub use symmetry::{commuting_linear, cyclotomic, sigma_group, SymmetryElement, SymmetryGroup};

use alloc::vec::Vec;

use num_traits::{One, Signed};

use crate::exactalg::{Poly, Rational};
use crate::{Error, Result};

/// A polynomial of degree at least one, viewed as a self-map of the plane.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyMap {
    poly: Poly,
}

impl PolyMap {
    pub fn new(poly: Poly) -> Result<Self> {
        match poly.degree() {
            None => Err(Error::ZeroPolynomial("map")),
            Some(0) => Err(Error::ConstantPolynomial("map")),
            Some(_) => Ok(PolyMap { poly }),
        }
    }

    /// A map of degree at least two.
    pub fn dynamical(poly: Poly) -> Result<Self> {
        let m = Self::new(poly)?;
        m.require_dynamical("map")?;
        Ok(m)
    }

    pub fn from_i64s(cs: &[i64]) -> Result<Self> {
        Self::new(Poly::from_i64s(cs))
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn into_poly(self) -> Poly {
        self.poly
    }

    pub fn degree(&self) -> usize {
        self.poly.deg()
    }

    pub fn leading(&self) -> &Rational {
        self.poly.leading().expect("maps are nonzero")
    }

    pub(crate) fn require_dynamical(&self, op: &'static str) -> Result<()> {
        if self.degree() < 2 {
            return Err(Error::DegreeTooSmall {
                op,
                found: self.degree(),
                required: 2,
            });
        }
        Ok(())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.poly.eval(x)
    }

    pub fn compose(&self, other: &PolyMap) -> PolyMap {
        PolyMap {
            poly: self.poly.compose(&other.poly),
        }
    }

    pub fn iterate(&self, n: usize) -> PolyMap {
        PolyMap {
            poly: self.poly.iterate(n),
        }
    }

    /// A radius `R >= 1` with `|f(t)| > |t|` whenever `|t| > R`:
    /// `max(1, (1 + sum_{j<d} |a_j|) / |a_d|)`. Orbits that leave the disk of
    /// radius `R` increase in modulus forever.
    pub fn escape_radius(&self) -> Rational {
        let r = (Rational::one() + self.poly.lower_abs_sum()) / self.leading().abs();
        if r < Rational::one() {
            Rational::one()
        } else {
            r
        }
    }
}

impl core::fmt::Display for PolyMap {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        self.poly.fmt(f)
    }
}

/// Forward orbit `x, f(x), ..., f^n(x)` together with the first index whose
/// point lies strictly outside the escape radius.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    pub points: Vec<Rational>,
    pub escaped_at: Option<usize>,
}

impl Orbit {
    pub fn escaped(&self) -> bool {
        self.escaped_at.is_some()
    }
}

pub fn orbit(f: &PolyMap, x: &Rational, n: usize) -> Orbit {
    let radius = f.escape_radius();
    let mut points = Vec::with_capacity(n + 1);
    let mut escaped_at = None;
    let mut cur = x.clone();
    for i in 0..=n {
        if escaped_at.is_none() && f.degree() >= 2 && cur.abs() > radius {
            escaped_at = Some(i);
        }
        points.push(cur.clone());
        if i < n {
            cur = f.eval(&cur);
        }
    }
    Orbit { points, escaped_at }
}
