use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::{AffineMap, PolyMap};
use crate::exactalg::{Poly, Rational};
use crate::Result;

/// The `n`-th cyclotomic polynomial, from `z^n - 1 = prod_{m | n} Phi_m`.
pub fn cyclotomic(n: usize) -> Poly {
    assert!(n >= 1, "cyclotomic index must be positive");
    let mut num = Poly::monomial(Rational::one(), n);
    num = &num - &Poly::one();
    for m in 1..n {
        if n % m == 0 {
            num = num.exact_div(&cyclotomic(m)).expect("cyclotomic sieve");
        }
    }
    num
}

fn totient(n: usize) -> usize {
    (1..=n).filter(|k| k.gcd(&n) == 1).count()
}

/// The affine maps `zeta z + b(zeta)` for all primitive `root_order`-th roots
/// of unity `zeta`; `shift` is a polynomial in `zeta` reduced modulo the
/// cyclotomic polynomial. The class has `phi(root_order)` members.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryElement {
    pub root_order: usize,
    pub shift: Poly,
}

impl SymmetryElement {
    pub fn class_size(&self) -> usize {
        totient(self.root_order)
    }

    /// The explicit map when the root of unity is rational (`±1`).
    pub fn as_rational(&self) -> Option<AffineMap> {
        let b = self.shift.coeff(0);
        match self.root_order {
            1 => AffineMap::new(Rational::one(), b).ok(),
            2 => AffineMap::new(-Rational::one(), b).ok(),
            _ => None,
        }
    }
}

/// A finite group of affine maps, listed by root-of-unity classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryGroup {
    pub order: usize,
    pub elements: Vec<SymmetryElement>,
}

impl SymmetryGroup {
    pub fn root_orders(&self) -> Vec<usize> {
        self.elements.iter().map(|e| e.root_order).collect()
    }

    pub fn contains_identity(&self) -> bool {
        self.elements
            .iter()
            .any(|e| e.root_order == 1 && e.shift.is_zero())
    }

    /// The linear parts form a subgroup of the roots of unity, which is
    /// cyclic: the set of orders must be closed under divisors and lcm.
    pub fn is_closed(&self) -> bool {
        let orders: BTreeSet<usize> = self.root_orders().into_iter().collect();
        orders.iter().all(|&a| {
            (1..=a).filter(|m| a % m == 0).all(|m| orders.contains(&m))
                && orders.iter().all(|&b| orders.contains(&a.lcm(&b)))
        }) && self.order == orders.iter().map(|&e| totient(e)).sum::<usize>()
    }
}

/// Arithmetic in `Q[x]/(Phi_e)`.
struct CycloRing {
    modulus: Poly,
}

impl CycloRing {
    fn new(e: usize) -> Self {
        CycloRing {
            modulus: cyclotomic(e),
        }
    }

    fn reduce(&self, a: Poly) -> Poly {
        if a.degree() >= self.modulus.degree() {
            a.rem(&self.modulus)
        } else {
            a
        }
    }

    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        self.reduce(a * b)
    }

    fn zeta(&self) -> Poly {
        self.reduce(Poly::z())
    }

    /// Coefficients of `F(a z + b)` as ring elements.
    fn compose_affine(&self, f: &Poly, a: &Poly, b: &Poly) -> Vec<Poly> {
        let mut acc: Vec<Poly> = Vec::new();
        for c in f.coeffs().iter().rev() {
            let mut next = vec![Poly::zero(); acc.len() + 1];
            for (i, x) in acc.iter().enumerate() {
                next[i] = &next[i] + &self.mul(x, b);
                next[i + 1] = &next[i + 1] + &self.mul(x, a);
            }
            next[0] = &next[0] + &Poly::constant(c.clone());
            acc = next;
        }
        acc
    }
}

enum Relation {
    /// `F ∘ sigma = F`
    Invariance,
    /// `sigma ∘ F = F ∘ sigma`
    Commuting,
}

fn solve(f: &Poly, exponent: usize, rel: Relation) -> SymmetryGroup {
    let d = f.deg();
    let lead = f.leading().expect("nonzero");
    let c = f.coeff(d - 1) / (lead * Rational::from_integer(BigInt::from(d)));
    let mut elements = Vec::new();
    for e in (1..=exponent).filter(|e| exponent % e == 0) {
        let ring = CycloRing::new(e);
        let a = ring.zeta();
        let b = ring.reduce((&a - &Poly::one()).scale(&c));
        let lhs = ring.compose_affine(f, &a, &b);
        let ok = match rel {
            Relation::Invariance => (0..=d).all(|i| lhs[i] == Poly::constant(f.coeff(i))),
            Relation::Commuting => (0..=d).all(|i| {
                let mut rhs = ring.mul(&a, &Poly::constant(f.coeff(i)));
                if i == 0 {
                    rhs = &rhs + &b;
                }
                lhs[i] == rhs
            }),
        };
        if ok {
            elements.push(SymmetryElement {
                root_order: e,
                shift: b,
            });
        }
    }
    let order = elements.iter().map(SymmetryElement::class_size).sum();
    SymmetryGroup { order, elements }
}

/// Affine maps `sigma` with `f^k ∘ sigma = f^k`, for `k = 1..=iterate_bound`
/// (entry `k - 1`). The linear part satisfies `a^D = 1` with `D = deg f^k`,
/// and the `z^{D-1}` coefficient then fixes the translation part.
///
/// These are finite groups at each level; the union over all iterates is
/// only sampled up to the bound.
pub fn sigma_group(f: &PolyMap, iterate_bound: usize) -> Result<Vec<SymmetryGroup>> {
    f.require_dynamical("sigma_group")?;
    let mut out = Vec::with_capacity(iterate_bound);
    let mut it = f.clone();
    for k in 1..=iterate_bound {
        if k > 1 {
            it = f.compose(&it);
        }
        out.push(solve(it.poly(), it.degree(), Relation::Invariance));
    }
    Ok(out)
}

/// Affine maps commuting with `f`; the linear part satisfies `a^{d-1} = 1`.
pub fn commuting_linear(f: &PolyMap) -> Result<SymmetryGroup> {
    f.require_dynamical("commuting_linear")?;
    Ok(solve(f.poly(), f.degree() - 1, Relation::Commuting))
}
