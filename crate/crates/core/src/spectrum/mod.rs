//! Exact multiplier spectra and their comparison.
//!
//! For a polynomial map `f` of degree `d`, the fixed points of `f^n` are the
//! `d^n` roots of `f^n(z) - z` together with `∞`. The multiplier
//! characteristic polynomial `M_n(w) = prod (w - (f^n)'(z_i))` over the finite
//! fixed points is the characteristic polynomial of multiplication by
//! `(f^n)'` modulo `f^n(z) - z`; the point at infinity adds a multiplier 0.

mod numeric;
mod sac;

pub use numeric::{aberth, length_spectrum_numeric, multipliers_numeric, AberthOptions};
pub use sac::{superattracting_cycle_count, SacReport};

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::dynmaps::PolyMap;
use crate::exactalg::modular::{self, CrtOptions, Engine, ModularImage, ZpCtx};
use crate::exactalg::{radical_divides, Poly, Rational};
use crate::{Error, Result};

/// Default bound on `d^n`.
pub const DEFAULT_SIZE_CAP: usize = 2000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumOptions {
    /// Largest admissible number `d^n` of finite fixed points.
    pub size_cap: usize,
    pub engine: Engine,
    pub crt: CrtOptions,
}

impl Default for SpectrumOptions {
    fn default() -> Self {
        SpectrumOptions {
            size_cap: DEFAULT_SIZE_CAP,
            engine: Engine::Auto,
            crt: CrtOptions::default(),
        }
    }
}

/// Monic polynomial whose roots are the multipliers of the finite fixed
/// points of `f^level`, plus the flag for the extra multiplier 0 at `∞`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplierPoly {
    pub level: usize,
    pub charpoly: Poly,
    pub includes_infinity: bool,
}

/// Elementary symmetric functions `σ_1..σ_{d^n + 1}` of the full multiplier
/// multiset at one level.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpectrumLevel {
    pub level: usize,
    pub sigmas: Vec<Rational>,
}

impl From<&MultiplierPoly> for SpectrumLevel {
    fn from(m: &MultiplierPoly) -> Self {
        let n = m.charpoly.deg();
        let mut sigmas: Vec<Rational> = (1..=n)
            .map(|k| {
                let c = m.charpoly.coeff(n - k);
                if k % 2 == 1 {
                    -c
                } else {
                    c
                }
            })
            .collect();
        if m.includes_infinity {
            sigmas.push(Rational::zero());
        }
        SpectrumLevel {
            level: m.level,
            sigmas,
        }
    }
}

impl SpectrumLevel {
    /// Inverse of the `From<&MultiplierPoly>` conversion.
    pub fn to_multiplier_poly(&self) -> MultiplierPoly {
        let total = self.sigmas.len();
        let n = total - 1;
        let mut coeffs = Vec::with_capacity(n + 1);
        for k in (1..=n).rev() {
            let s = &self.sigmas[k - 1];
            coeffs.push(if k % 2 == 1 { -s.clone() } else { s.clone() });
        }
        coeffs.push(Rational::one());
        MultiplierPoly {
            level: self.level,
            charpoly: Poly::new(coeffs),
            includes_infinity: true,
        }
    }
}

fn level_size(d: usize, n: usize, cap: usize) -> Result<usize> {
    let size = (d as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if n == 0 || size > cap as u128 {
        return Err(Error::LevelTooLarge { size, cap });
    }
    Ok(size as usize)
}

pub fn multiplier_charpoly(f: &PolyMap, n: usize) -> Result<MultiplierPoly> {
    multiplier_charpoly_with(f, n, &SpectrumOptions::default())
}

pub fn multiplier_charpoly_with(
    f: &PolyMap,
    n: usize,
    opts: &SpectrumOptions,
) -> Result<MultiplierPoly> {
    f.require_dynamical("multiplier_charpoly")?;
    if n == 0 {
        return Err(Error::InvalidArgument("level must be positive".into()));
    }
    let size = level_size(f.degree(), n, opts.size_cap)?;
    let img = MultiplierImage::new(f, n, size, opts.engine);
    let (mut coeffs, _) = modular::reconstruct(&img, &opts.crt)?;
    coeffs.push(Rational::one());
    Ok(MultiplierPoly {
        level: n,
        charpoly: Poly::new(coeffs),
        includes_infinity: true,
    })
}

pub fn spectrum_level(f: &PolyMap, n: usize) -> Result<SpectrumLevel> {
    spectrum_level_with(f, n, &SpectrumOptions::default())
}

pub fn spectrum_level_with(f: &PolyMap, n: usize, opts: &SpectrumOptions) -> Result<SpectrumLevel> {
    Ok(SpectrumLevel::from(&multiplier_charpoly_with(f, n, opts)?))
}

/// Images of `M_n` modulo primes: `f^n` is iterated directly in `Z_p[z]`.
struct MultiplierImage {
    f: Vec<BigInt>,
    f_den: BigInt,
    level: usize,
    size: usize,
    engine: Engine,
    log2_bound: f64,
}

impl MultiplierImage {
    fn new(f: &PolyMap, level: usize, size: usize, engine: Engine) -> Self {
        let (fi, f_den) = f.poly().to_integer_parts();
        // Periodic points lie in |z| <= R, where |f'| <= sum j |a_j| R^{j-1};
        // so |multiplier| <= beta and |σ_k| <= C(N, k) beta^k <= 2^N beta^N.
        let r = f.escape_radius();
        let mut lip = Rational::zero();
        let mut rpow = Rational::one();
        for (j, a) in f.poly().coeffs().iter().enumerate().skip(1) {
            lip += a.abs() * Rational::from_integer(BigInt::from(j)) * &rpow;
            rpow *= &r;
        }
        let beta = level as f64 * crate::exactalg::log2_of(&lip).max(0.0);
        let log2_bound = size as f64 * (1.0 + beta) + 1.0;
        MultiplierImage {
            f: fi,
            f_den,
            level,
            size,
            engine,
            log2_bound,
        }
    }
}

impl ModularImage for MultiplierImage {
    fn output_len(&self) -> usize {
        self.size
    }

    fn is_bad_prime(&self, p: u64) -> bool {
        p <= self.size as u64
            || modular::reduce_int(&self.f_den, p) == 0
            || modular::reduce_int(self.f.last().expect("nonzero"), p) == 0
    }

    fn image(&self, p: u64) -> Option<Vec<u64>> {
        let ctx = ZpCtx::new(p, 2 * self.size);
        let fd = &ctx.f;
        let den_inv = fd.inv(modular::reduce_int(&self.f_den, p));
        let fp: Vec<u64> = self
            .f
            .iter()
            .map(|c| fd.mul(modular::reduce_int(c, p), den_inv))
            .collect();
        let mut it = fp.clone();
        for _ in 1..self.level {
            it = ctx.compose(&fp, &it);
        }
        debug_assert_eq!(it.len(), self.size + 1);
        let b = ctx.derivative(&it);
        let mut a = it;
        a[1] = fd.sub(a[1], 1);
        let lc_inv = fd.inv(a[self.size]);
        let a = ctx.scale(&a, lc_inv);
        let mut cp = modular::charpoly_zp(&ctx, &b, &a, self.engine);
        cp.truncate(self.size);
        Some(cp)
    }

    fn log2_bound(&self) -> f64 {
        self.log2_bound
    }

    fn two_adicity(&self) -> u32 {
        modular::two_adicity_for(self.size)
    }
}

/// Outcome of a level-by-level comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumComparison {
    pub equal: bool,
    pub first_diff: Option<usize>,
}

fn same_degree(f: &PolyMap, g: &PolyMap) -> Result<()> {
    if f.degree() != g.degree() {
        return Err(Error::DegreeMismatch(f.degree(), g.degree()));
    }
    Ok(())
}

/// Compares `S_n(f)` and `S_n(g)` for `n = 1..=m`, stopping at the first
/// difference.
pub fn spectra_equal_up_to(f: &PolyMap, g: &PolyMap, m: usize) -> Result<SpectrumComparison> {
    spectra_equal_up_to_with(f, g, m, &SpectrumOptions::default())
}

pub fn spectra_equal_up_to_with(
    f: &PolyMap,
    g: &PolyMap,
    m: usize,
    opts: &SpectrumOptions,
) -> Result<SpectrumComparison> {
    same_degree(f, g)?;
    f.require_dynamical("spectra_equal_up_to")?;
    level_size(f.degree(), m, opts.size_cap)?;
    for n in 1..=m {
        if f != g && spectrum_level_with(f, n, opts)? != spectrum_level_with(g, n, opts)? {
            return Ok(SpectrumComparison {
                equal: false,
                first_diff: Some(n),
            });
        }
    }
    Ok(SpectrumComparison {
        equal: true,
        first_diff: None,
    })
}

/// `spectra_equal_up_to(f^k, g^k, m)`.
pub fn compare_iterates(f: &PolyMap, g: &PolyMap, k: usize, m: usize) -> Result<SpectrumComparison> {
    compare_iterates_with(f, g, k, m, &SpectrumOptions::default())
}

pub fn compare_iterates_with(
    f: &PolyMap,
    g: &PolyMap,
    k: usize,
    m: usize,
    opts: &SpectrumOptions,
) -> Result<SpectrumComparison> {
    same_degree(f, g)?;
    if k == 0 {
        return Err(Error::InvalidArgument("iterate index must be positive".into()));
    }
    let fk = f.iterate(k);
    let gk = g.iterate(k);
    spectra_equal_up_to_with(&fk, &gk, m, opts)
}

/// Whether every multiplier of `f` at level `n` is also one of `g`.
pub fn spectrum_containment(f: &PolyMap, g: &PolyMap, n: usize) -> Result<bool> {
    spectrum_containment_with(f, g, n, &SpectrumOptions::default())
}

pub fn spectrum_containment_with(
    f: &PolyMap,
    g: &PolyMap,
    n: usize,
    opts: &SpectrumOptions,
) -> Result<bool> {
    same_degree(f, g)?;
    let mf = multiplier_charpoly_with(f, n, opts)?;
    if f == g {
        return Ok(true);
    }
    let mg = multiplier_charpoly_with(g, n, opts)?;
    radical_divides(&mf.charpoly, &mg.charpoly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, rat};

    fn map(cs: &[i64]) -> PolyMap {
        PolyMap::from_i64s(cs).unwrap()
    }

    #[test]
    fn charpoly_examples() {
        let sq = map(&[0, 0, 1]);
        assert_eq!(multiplier_charpoly(&sq, 1).unwrap().charpoly, Poly::from_i64s(&[0, -2, 1]));
        let c = rat(-3, 7);
        let f = PolyMap::new(Poly::new(alloc::vec![c.clone(), int(0), int(1)])).unwrap();
        let want = Poly::new(alloc::vec![int(4) * &c, int(-2), int(1)]);
        assert_eq!(multiplier_charpoly(&f, 1).unwrap().charpoly, want);
        // w (w - 4)^3
        let want = Poly::from_i64s(&[0, -64, 48, -12, 1]);
        assert_eq!(multiplier_charpoly(&sq, 2).unwrap().charpoly, want);
    }

    #[test]
    fn level_examples() {
        let c = rat(5, 2);
        let f = PolyMap::new(Poly::new(alloc::vec![c.clone(), int(0), int(1)])).unwrap();
        let s = spectrum_level(&f, 1).unwrap();
        assert_eq!(s.sigmas, alloc::vec![int(2), int(4) * &c, int(0)]);
        let s = spectrum_level(&map(&[0, 0, 1]), 2).unwrap();
        assert_eq!(s.sigmas, [12, 48, 64, 0, 0].map(int));
        let back = s.to_multiplier_poly();
        assert_eq!(SpectrumLevel::from(&back), s);
    }

    #[test]
    fn comparison_examples() {
        let sq = map(&[0, 0, 1]);
        let cheb = map(&[-2, 0, 1]);
        let r = spectra_equal_up_to(&sq, &cheb, 1).unwrap();
        assert_eq!(r.first_diff, Some(1));
        assert_eq!(spectrum_level(&cheb, 1).unwrap().sigmas, [2, -8, 0].map(int));
        let r = compare_iterates(&sq, &map(&[-1, 0, 1]), 1, 1).unwrap();
        assert_eq!(r.first_diff, Some(1));
        assert_eq!(spectrum_level(&map(&[-1, 0, 1]), 1).unwrap().sigmas, [2, -4, 0].map(int));
        assert!(!spectrum_containment(&sq, &cheb, 1).unwrap());
        assert!(spectrum_containment(&sq, &sq, 1).unwrap());
    }

    #[test]
    fn size_cap() {
        let f = map(&[1, 0, 1]);
        let opts = SpectrumOptions {
            size_cap: 10,
            ..Default::default()
        };
        assert!(matches!(
            multiplier_charpoly_with(&f, 4, &opts),
            Err(Error::LevelTooLarge { size: 16, cap: 10 })
        ));
        assert!(multiplier_charpoly(&map(&[0, 1]), 1).is_err());
    }
}
