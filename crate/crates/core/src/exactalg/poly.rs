use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::intpoly;
use super::Rational;

const MODULAR_GCD_DEGREE: usize = 12;

/// Dense univariate polynomial with rational coefficients, ascending order.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is the
/// empty vector and `degree` is the index of the last entry.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The identity polynomial `z`.
    pub fn z() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c * z^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn from_integers(cs: &[BigInt]) -> Self {
        Self::new(cs.iter().cloned().map(Rational::from_integer).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `z^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Number of trailing zero coefficients, i.e. the order of vanishing at 0.
    pub fn low_order(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(0)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Divides by the leading coefficient; the zero polynomial is returned as is.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) if !l.is_one() => self.scale(&l.recip()),
            _ => self.clone(),
        }
    }

    /// `z^k * self`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Divides by `z^k`, dropping the low coefficients.
    pub fn shift_down(&self, k: usize) -> Self {
        Self::new(self.coeffs.iter().skip(k).cloned().collect())
    }

    /// `self(z^k)`.
    pub fn expand_power(&self, k: usize) -> Self {
        assert!(k >= 1, "expand_power needs k >= 1");
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.deg() * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Poly { coeffs }
    }

    /// Clears denominators: returns integer coefficients `a` and `den > 0`
    /// with `self = a / den`.
    pub fn to_integer_parts(&self) -> (Vec<BigInt>, BigInt) {
        let mut den = BigInt::one();
        for c in &self.coeffs {
            if !c.denom().is_one() {
                den = den.lcm(c.denom());
            }
        }
        let nums = self
            .coeffs
            .iter()
            .map(|c| {
                if c.denom() == &den {
                    c.numer().clone()
                } else {
                    c.numer() * (&den / c.denom())
                }
            })
            .collect();
        (nums, den)
    }

    pub fn from_integer_parts(nums: Vec<BigInt>, den: &BigInt) -> Self {
        if den.is_one() {
            return Self::new(nums.into_iter().map(Rational::from_integer).collect());
        }
        Self::new(
            nums.into_iter()
                .map(|n| Rational::new(n, den.clone()))
                .collect(),
        )
    }

    /// Primitive integer polynomial with positive leading coefficient and the
    /// same roots.
    pub fn primitive_part(&self) -> Vec<BigInt> {
        intpoly::primitive(&self.to_integer_parts().0)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Euclidean division over Q.
    ///
    /// # Panics
    /// Panics when `d` is the zero polynomial.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("polynomial division by zero");
        if self.coeffs.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let inv = d.coeffs[dd].recip();
        let mut r = self.coeffs.clone();
        let mut q = vec![Rational::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = &r[i + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate().take(dd) {
                if !dc.is_zero() {
                    r[i + j] -= &c * dc;
                }
            }
            r[i + dd] = Rational::zero();
            q[i] = c;
        }
        r.truncate(dd);
        (Poly::new(q), Poly::new(r))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.div_rem(d).1
    }

    /// Quotient when `d` divides `self` exactly, otherwise `None`.
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        if self.is_constant() || other.is_constant() {
            return Poly::one();
        }
        let a = self.primitive_part();
        let b = other.primitive_part();
        if a.len().min(b.len()) > MODULAR_GCD_DEGREE {
            if let Some(g) = super::modgcd::gcd(&a, &b) {
                return g;
            }
        }
        Poly::from_integers(&intpoly::gcd(&a, &b)).monic()
    }

    /// Monic lcm of two nonzero polynomials.
    pub fn lcm(&self, other: &Poly) -> Poly {
        let g = self.gcd(other);
        let q = (self * other).exact_div(&g).expect("gcd divides the product");
        q.monic()
    }

    /// `self(g(z))`.
    pub fn compose(&self, g: &Poly) -> Poly {
        let Some(n) = self.degree() else {
            return Poly::zero();
        };
        if n == 0 || g.is_constant() {
            return Poly::constant(self.eval(&g.coeff(0)));
        }
        let (fi, df) = self.to_integer_parts();
        let (gi, dg) = g.to_integer_parts();
        let num = intpoly::compose_scaled(&fi, &gi, &dg);
        let den = df * num_traits::pow(dg, n);
        Poly::from_integer_parts(num, &den)
    }

    /// `n`-fold composition; `iterate(0)` is `z`.
    pub fn iterate(&self, n: usize) -> Poly {
        let mut acc = Poly::z();
        for _ in 0..n {
            acc = self.compose(&acc);
        }
        acc
    }

    /// Sum of absolute values of coefficients of degree below `deg`.
    pub(crate) fn lower_abs_sum(&self) -> Rational {
        let d = self.deg();
        self.coeffs[..d].iter().map(|c| c.abs()).sum()
    }

    /// Renders in the same grammar the command line accepts, e.g.
    /// `3*z^2 - 1/2*z + 4`.
    pub fn to_text(&self) -> String {
        self.render("z")
    }

    pub fn render(&self, var: &str) -> String {
        use core::fmt::Write;
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.into(),
                _ => alloc::format!("{var}^{i}"),
            };
            if i == 0 {
                let _ = write!(s, "{a}");
            } else if a.is_one() {
                s.push_str(&mono);
            } else {
                let _ = write!(s, "{a}*{mono}");
            }
        }
        s
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self.to_text())
    }
}

impl From<Rational> for Poly {
    fn from(c: Rational) -> Self {
        Poly::constant(c)
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Poly::new(coeffs)
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < rhs.coeffs.len() {
            coeffs.resize(rhs.coeffs.len(), Rational::zero());
        }
        for (c, s) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= s;
        }
        Poly::new(coeffs)
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        if self.is_constant() {
            return rhs.scale(&self.coeffs[0]);
        }
        if rhs.is_constant() {
            return self.scale(&rhs.coeffs[0]);
        }
        let (a, da) = self.to_integer_parts();
        let (b, db) = rhs.to_integer_parts();
        Poly::from_integer_parts(intpoly::mul(&a, &b), &(da * db))
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly {
                (&self).$m(rhs)
            }
        }
        impl $tr<Poly> for &Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}
