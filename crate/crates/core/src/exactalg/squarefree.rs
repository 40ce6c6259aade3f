use alloc::vec::Vec;

use super::{Poly, Rational};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeFactor {
    /// Monic, squarefree, nonconstant.
    pub factor: Poly,
    pub multiplicity: usize,
}

/// `unit * prod factor^multiplicity`, factors pairwise coprime and ordered by
/// increasing multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeDecomposition {
    pub unit: Rational,
    pub factors: Vec<SquarefreeFactor>,
}

impl SquarefreeDecomposition {
    pub fn reassemble(&self) -> Poly {
        let mut acc = Poly::constant(self.unit.clone());
        for f in &self.factors {
            acc = &acc * &f.factor.pow(f.multiplicity as u32);
        }
        acc
    }

    /// Product of the distinct factors.
    pub fn radical(&self) -> Poly {
        self.factors
            .iter()
            .fold(Poly::one(), |acc, f| &acc * &f.factor)
    }
}

/// Yun's squarefree decomposition over Q.
pub fn squarefree(a: &Poly) -> Result<SquarefreeDecomposition> {
    let Some(lc) = a.leading() else {
        return Err(Error::ZeroPolynomial("squarefree"));
    };
    let unit = lc.clone();
    let mut factors = Vec::new();
    if a.is_constant() {
        return Ok(SquarefreeDecomposition { unit, factors });
    }
    let a = a.monic();
    let da = a.derivative();
    let c = a.gcd(&da);
    let mut w = a.exact_div(&c).expect("gcd divides");
    let mut y = da.exact_div(&c).expect("gcd divides");
    let mut z = &y - &w.derivative();
    let mut i = 1;
    while !w.is_constant() {
        let g = w.gcd(&z);
        if !g.is_constant() {
            factors.push(SquarefreeFactor {
                factor: g.clone(),
                multiplicity: i,
            });
        }
        w = w.exact_div(&g).expect("gcd divides");
        y = z.exact_div(&g).expect("gcd divides");
        z = &y - &w.derivative();
        i += 1;
    }
    Ok(SquarefreeDecomposition { unit, factors })
}

/// Monic product of the distinct irreducible factors.
pub fn radical(a: &Poly) -> Result<Poly> {
    if a.is_zero() {
        return Err(Error::ZeroPolynomial("radical"));
    }
    if a.is_constant() {
        return Ok(Poly::one());
    }
    let g = a.gcd(&a.derivative());
    Ok(a.exact_div(&g).expect("gcd divides").monic())
}

/// Whether every root of `a` is a root of `b`.
pub fn radical_divides(a: &Poly, b: &Poly) -> Result<bool> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroPolynomial("radical_divides"));
    }
    let ra = radical(a)?;
    Ok(b.rem(&ra).is_zero())
}

/// Pairwise coprime monic squarefree polynomials such that every input is a
/// scalar times a product of basis elements. Inputs that are not squarefree
/// are replaced by their radicals; constant inputs contribute nothing.
pub fn coprime_basis(polys: &[Poly]) -> Result<Vec<Poly>> {
    let mut basis: Vec<Poly> = Vec::new();
    for p in polys {
        let mut rest = radical(p)?;
        let mut next = Vec::with_capacity(basis.len() + 2);
        for b in basis {
            if rest.is_constant() {
                next.push(b);
                continue;
            }
            let g = b.gcd(&rest);
            if g.is_constant() {
                next.push(b);
                continue;
            }
            let cofactor = b.exact_div(&g).expect("gcd divides");
            rest = rest.exact_div(&g).expect("gcd divides");
            if !cofactor.is_constant() {
                next.push(cofactor.monic());
            }
            next.push(g);
        }
        if !rest.is_constant() {
            next.push(rest.monic());
        }
        basis = next;
    }
    Ok(basis)
}
