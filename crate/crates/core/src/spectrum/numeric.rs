//! Floating-point root isolation, used only as an independent cross-check of
//! the exact results.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
#[cfg(not(feature = "std"))]
use num_traits::Float;
use num_traits::ToPrimitive;

use super::{multiplier_charpoly, MultiplierPoly};
use crate::dynmaps::PolyMap;
use crate::exactalg::{squarefree, Poly};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct AberthOptions {
    pub max_iterations: usize,
    /// Stop once every correction is below `tolerance * max(1, |z|)`.
    pub tolerance: f64,
}

impl Default for AberthOptions {
    fn default() -> Self {
        AberthOptions {
            max_iterations: 500,
            tolerance: 1e-14,
        }
    }
}

/// Approximates all roots of the polynomial with ascending coefficients
/// `coeffs` by Aberth–Ehrlich iteration.
pub fn aberth(coeffs: &[Complex64], opts: &AberthOptions) -> Result<Vec<Complex64>> {
    let mut n = coeffs.len();
    while n > 0 && coeffs[n - 1] == Complex64::new(0.0, 0.0) {
        n -= 1;
    }
    if n == 0 {
        return Err(Error::ZeroPolynomial("aberth"));
    }
    let p = &coeffs[..n];
    let deg = n - 1;
    if deg == 0 {
        return Ok(Vec::new());
    }
    if p.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
        return Err(Error::PrecisionExhausted("non-finite coefficient".into()));
    }
    let dp: Vec<Complex64> = p[1..]
        .iter()
        .enumerate()
        .map(|(i, c)| c * (i + 1) as f64)
        .collect();

    // Fujiwara-style bound on the root moduli for the starting circle.
    let lc = p[deg].norm();
    let radius = (0..deg)
        .map(|j| (p[j].norm() / lc).powf(1.0 / (deg - j) as f64))
        .fold(0.0f64, f64::max)
        .max(1e-3);
    let mut z: Vec<Complex64> = (0..deg)
        .map(|k| {
            let theta = 2.0 * core::f64::consts::PI * (k as f64 + 0.25) / deg as f64 + 0.4;
            Complex64::from_polar(radius, theta)
        })
        .collect();

    let abs_p: Vec<Complex64> = p.iter().map(|c| Complex64::new(c.norm(), 0.0)).collect();
    let noise = 4.0 * (deg as f64 + 1.0) * f64::EPSILON;
    let mut converged = vec![false; deg];
    for _ in 0..opts.max_iterations {
        let mut done = true;
        for i in 0..deg {
            if converged[i] {
                continue;
            }
            let pv = horner(p, z[i]);
            // The value is at rounding level: no further correction is meaningful.
            if pv.norm() <= noise * horner(&abs_p, Complex64::new(z[i].norm(), 0.0)).re {
                converged[i] = true;
                continue;
            }
            let ratio = pv / horner(&dp, z[i]);
            let sum: Complex64 = (0..deg)
                .filter(|&j| j != i)
                .map(|j| Complex64::new(1.0, 0.0) / (z[i] - z[j]))
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * sum);
            if !step.re.is_finite() || !step.im.is_finite() {
                continue;
            }
            z[i] -= step;
            if step.norm() > opts.tolerance * z[i].norm().max(1.0) {
                done = false;
            } else {
                converged[i] = true;
            }
        }
        if done {
            return Ok(z);
        }
    }
    Err(Error::PrecisionExhausted(format!(
        "Aberth iteration did not converge in {} steps",
        opts.max_iterations
    )))
}

fn horner(p: &[Complex64], x: Complex64) -> Complex64 {
    p.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * x + c)
}

/// Roots of a squarefree polynomial, each inside a certified disk of radius
/// at most `tol * max(1, |z|)`.
///
/// The disks are `D(z_i, deg * |W_i|)` with the Weierstrass correction
/// `W_i = p(z_i) / (lc * prod_{j != i} (z_i - z_j))`, inflated by a bound on
/// the rounding error of the Horner evaluation. When they are pairwise
/// disjoint, each contains exactly one root.
fn isolate(p: &Poly, tol: f64) -> Result<Vec<Complex64>> {
    let prim = p.primitive_part();
    // Rescale so the largest coefficient is near 1 before leaving exact land.
    let top = prim.iter().map(|c| c.bits()).max().unwrap_or(0);
    let shift = top.saturating_sub(900) as i64;
    let coeffs: Vec<Complex64> = prim
        .iter()
        .map(|c| {
            let scaled = if shift > 0 { c >> shift as usize } else { c.clone() };
            Complex64::new(scaled.to_f64().unwrap_or(f64::NAN), 0.0)
        })
        .collect();
    if shift > 0 {
        // Truncating coefficients would break the residual certificate.
        return Err(Error::PrecisionExhausted("coefficients exceed f64 range".into()));
    }
    let roots = aberth(&coeffs, &AberthOptions::default())?;
    let deg = roots.len();
    if deg == 1 {
        return Ok(roots);
    }
    let lc = coeffs[deg];
    let abs_coeffs: Vec<f64> = coeffs.iter().map(|c| c.norm()).collect();
    let gamma = 4.0 * (deg as f64 + 1.0) * f64::EPSILON;
    let mut radii = Vec::with_capacity(deg);
    for (i, &zi) in roots.iter().enumerate() {
        let residual = horner(&coeffs, zi).norm();
        let r = zi.norm();
        let slack = gamma * abs_coeffs.iter().rev().fold(0.0, |acc, c| acc * r + c);
        let mut denom = lc.norm();
        for (j, &zj) in roots.iter().enumerate() {
            if j != i {
                denom *= (zi - zj).norm();
            }
        }
        let rad = deg as f64 * (residual + slack) / denom * (1.0 + 1e-12);
        if !rad.is_finite() || rad > tol * r.max(1.0) {
            return Err(Error::PrecisionExhausted(format!(
                "root near {zi} not isolated to {tol:e}"
            )));
        }
        radii.push(rad);
    }
    for i in 0..deg {
        for j in i + 1..deg {
            if (roots[i] - roots[j]).norm() <= radii[i] + radii[j] {
                return Err(Error::PrecisionExhausted(
                    "inclusion disks overlap".into(),
                ));
            }
        }
    }
    Ok(roots)
}

/// Certified numeric roots of a nonzero polynomial, with multiplicity.
pub(crate) fn roots_with_multiplicity(p: &Poly, tol: f64) -> Result<Vec<Complex64>> {
    let dec = squarefree(p)?;
    let mut out = Vec::with_capacity(p.deg());
    for f in &dec.factors {
        let roots = isolate(&f.factor, tol)?;
        for _ in 0..f.multiplicity {
            out.extend_from_slice(&roots);
        }
    }
    Ok(out)
}

/// Finite multipliers of the fixed points of `f^n`, from numeric roots of the
/// exact multiplier polynomial.
pub fn multipliers_numeric(f: &PolyMap, n: usize, tol: f64) -> Result<Vec<Complex64>> {
    let mp: MultiplierPoly = multiplier_charpoly(f, n)?;
    roots_with_multiplicity(&mp.charpoly, tol)
}

/// Sorted moduli of all multipliers of the fixed points of `f^n`, including
/// the 0 contributed by `∞`.
pub fn length_spectrum_numeric(f: &PolyMap, n: usize, tol: f64) -> Result<Vec<f64>> {
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument("tolerance must be positive".into()));
    }
    let mut out: Vec<f64> = multipliers_numeric(f, n, tol)?
        .into_iter()
        .map(|w| w.norm())
        .collect();
    out.push(0.0);
    out.sort_by(f64::total_cmp);
    Ok(out)
}
