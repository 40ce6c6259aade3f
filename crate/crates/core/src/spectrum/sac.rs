use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
#[cfg(not(feature = "std"))]
use num_traits::Float;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::numeric::{aberth, AberthOptions};
use crate::dynmaps::PolyMap;
use crate::exactalg::{charpoly_mod, radical, Poly, Rational};
use crate::{Error, Result};

use num_complex::Complex64;

/// Superattracting cycles found up to a period bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SacReport {
    pub count: usize,
    /// `(period, number of cycles)`, increasing in period.
    pub per_period: Vec<(usize, usize)>,
    /// Every critical point was shown to be either periodic or not periodic
    /// at all (escaping, or landing on a cycle that does not contain it).
    pub certified_complete: bool,
    pub bound: usize,
}

/// Steps of forward iteration tried when certifying that leftover critical
/// points are not periodic.
const CERTIFY_STEPS: usize = 64;
const ESCAPE_STEPS: usize = 10;

/// Counts the cycles of `f` that contain a critical point.
///
/// Critical points of exact period `n <= bound` are the roots of
/// `q_n = gcd(g, f^n - z) / lcm_{m | n, m < n} gcd(g, f^m - z)` with
/// `g = rad f'`; the union of their orbits is the root set of
/// `prod_i charpoly(f^i mod q_n, q_n)`, which has `n` points per cycle.
pub fn superattracting_cycle_count(f: &PolyMap, bound: usize) -> Result<SacReport> {
    f.require_dynamical("superattracting_cycle_count")?;
    if bound == 0 {
        return Err(Error::InvalidArgument("period bound must be positive".into()));
    }
    let g = radical(&f.poly().derivative())?;
    let fp = f.poly();
    let z = Poly::z();

    let mut per_period: BTreeMap<usize, usize> = BTreeMap::new();
    let mut level_gcds: Vec<Poly> = Vec::with_capacity(bound);
    let mut periodic = Poly::one();
    let mut h = z.rem(&g);
    for n in 1..=bound {
        h = compose_mod(fp, &h, &g);
        let gn = g.gcd(&(&h - &z));
        let mut lower = Poly::one();
        for m in (1..n).filter(|m| n % m == 0) {
            lower = lower.lcm(&level_gcds[m - 1]);
        }
        let q = gn.exact_div(&lower).expect("divisor levels divide");
        level_gcds.push(gn);
        if q.is_constant() {
            continue;
        }
        periodic = periodic.lcm(&q);
        let cycles = count_cycles(fp, &q, n)?;
        if cycles > 0 {
            *per_period.entry(n).or_default() += cycles;
        }
    }

    let rest = g.exact_div(&periodic).expect("periodic part divides g");
    let certified_complete = classify_rest(f, &rest, bound, &mut per_period)?;
    let per_period: Vec<(usize, usize)> = per_period.into_iter().collect();
    let count = per_period.iter().map(|(_, c)| c).sum();
    Ok(SacReport {
        count,
        per_period,
        certified_complete,
        bound,
    })
}

fn compose_mod(f: &Poly, h: &Poly, m: &Poly) -> Poly {
    let mut acc = Poly::zero();
    for c in f.coeffs().iter().rev() {
        acc = (&(&acc * h) + &Poly::constant(c.clone())).rem(m);
    }
    acc
}

fn count_cycles(f: &Poly, q: &Poly, n: usize) -> Result<usize> {
    let mut points = Poly::one();
    let mut h = Poly::z().rem(q);
    for i in 0..n {
        if i > 0 {
            h = compose_mod(f, &h, q);
        }
        let cp = charpoly_mod(&h, q)?;
        points = points.lcm(&radical(&cp)?);
    }
    let k = points.deg();
    if k % n != 0 {
        return Err(Error::Inconsistent(alloc::format!(
            "{k} periodic critical orbit points at period {n}"
        )));
    }
    Ok(k / n)
}

/// Tries to show that no root of `rest` is periodic. Rational roots are
/// followed exactly; if one turns out periodic beyond the bound its cycle is
/// recorded. Returns whether everything was resolved.
fn classify_rest(
    f: &PolyMap,
    rest: &Poly,
    bound: usize,
    per_period: &mut BTreeMap<usize, usize>,
) -> Result<bool> {
    if rest.is_constant() {
        return Ok(true);
    }
    let radius = f.escape_radius();
    let roots = rational_roots(rest);
    let mut irrational = rest.clone();
    let mut complete = true;
    let mut seen_cycles: Vec<Vec<Rational>> = Vec::new();
    for x in &roots {
        irrational = irrational
            .exact_div(&Poly::new(alloc::vec![-x.clone(), Rational::one()]))
            .expect("root divides");
        match follow(f, x, &radius, bound + CERTIFY_STEPS) {
            Fate::Escapes | Fate::Preperiodic => {}
            Fate::Periodic(cycle) => {
                let mut key = cycle.clone();
                key.sort();
                if !seen_cycles.contains(&key) {
                    *per_period.entry(cycle.len()).or_default() += 1;
                    seen_cycles.push(key);
                }
            }
            Fate::Unknown => complete = false,
        }
    }
    if !irrational.is_constant() && !escapes(f.poly(), &irrational, &radius)? {
        complete = false;
    }
    Ok(complete)
}

enum Fate {
    Escapes,
    Preperiodic,
    Periodic(Vec<Rational>),
    Unknown,
}

/// Orbit points taller than this are no longer followed.
const HEIGHT_BITS: u64 = 1 << 14;
const TRIAL_DIVISION_LIMIT: u32 = 1 << 16;

fn follow(f: &PolyMap, x: &Rational, radius: &Rational, steps: usize) -> Fate {
    let adic = AdicEscape::new(f);
    let mut orbit: Vec<Rational> = alloc::vec![x.clone()];
    let mut cur = x.clone();
    for _ in 0..steps {
        if cur.abs() > *radius || adic.escapes(&cur) {
            return Fate::Escapes;
        }
        if cur.numer().bits() + cur.denom().bits() > HEIGHT_BITS {
            return Fate::Unknown;
        }
        cur = f.eval(&cur);
        if let Some(pos) = orbit.iter().position(|y| *y == cur) {
            return if pos == 0 {
                Fate::Periodic(orbit)
            } else {
                Fate::Preperiodic
            };
        }
        orbit.push(cur.clone());
    }
    Fate::Unknown
}

/// Non-archimedean escape. If `v_p(x) < 0` and the leading term of `f`
/// dominates `p`-adically with `v_p(f(x)) < v_p(x)`, both conditions persist
/// and `v_p` decreases along the orbit forever, so `x` is not periodic.
///
/// For primes not dividing `M = num(a_d) * lcm(den(a_j))` this holds as soon
/// as `p` divides the denominator of `x`, which is detected without
/// factoring by stripping the factors shared with `M`. The small primes of
/// `M` are checked individually.
struct AdicEscape {
    coeffs: Vec<Rational>,
    modulus: BigInt,
    primes: Vec<BigInt>,
}

impl AdicEscape {
    fn new(f: &PolyMap) -> Self {
        let coeffs = f.poly().coeffs().to_vec();
        let dens = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let modulus = f.leading().numer().abs() * dens;
        let mut primes = Vec::new();
        let mut rest = modulus.clone();
        let mut p = 2u32;
        while p < TRIAL_DIVISION_LIMIT && !rest.is_one() {
            let bp = BigInt::from(p);
            if (&rest % &bp).is_zero() {
                while (&rest % &bp).is_zero() {
                    rest /= &bp;
                }
                primes.push(bp);
            }
            p += if p == 2 { 1 } else { 2 };
        }
        AdicEscape { coeffs, modulus, primes }
    }

    fn escapes(&self, x: &Rational) -> bool {
        let mut free = x.denom().clone();
        loop {
            let g = free.gcd(&self.modulus);
            if g.is_one() {
                break;
            }
            free /= g;
        }
        if !free.is_one() {
            return true;
        }
        self.primes.iter().any(|p| self.dominates(p, x))
    }

    fn dominates(&self, p: &BigInt, x: &Rational) -> bool {
        let vx = valuation(x, p);
        if vx >= 0 {
            return false;
        }
        let d = self.coeffs.len() - 1;
        let vd = valuation(&self.coeffs[d], p);
        let leading_dominates = self.coeffs[..d].iter().enumerate().all(|(j, c)| {
            c.is_zero() || (d - j) as i64 * vx < valuation(c, p) - vd
        });
        leading_dominates && vd + (d as i64 - 1) * vx < 0
    }
}

fn valuation(x: &Rational, p: &BigInt) -> i64 {
    let count = |n: &BigInt| {
        let mut n = n.clone();
        let mut k = 0i64;
        while !n.is_zero() && (&n % p).is_zero() {
            n /= p;
            k += 1;
        }
        k
    };
    count(x.numer()) - count(x.denom())
}

/// Whether some forward image of every root of `u` lies outside the escape
/// disk: all roots of `charpoly(f^i mod u, u)` avoid `|w| <= R`.
fn escapes(f: &Poly, u: &Poly, radius: &Rational) -> Result<bool> {
    let mut h = Poly::z().rem(u);
    for _ in 0..ESCAPE_STEPS {
        h = compose_mod(f, &h, u);
        let height: u64 = h.coeffs().iter().map(|c| c.numer().bits() + c.denom().bits()).sum();
        if height > HEIGHT_BITS {
            return Ok(false);
        }
        let cp = charpoly_mod(&h, u)?;
        if roots_outside(&cp, radius) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// `|c_0| > sum_{j >= 1} |c_j| R^j` rules out roots in the closed disk.
fn roots_outside(p: &Poly, radius: &Rational) -> bool {
    let mut rhs = Rational::zero();
    let mut rpow = Rational::one();
    for c in &p.coeffs()[1..] {
        rpow *= radius;
        rhs += c.abs() * &rpow;
    }
    p.coeff(0).abs() > rhs
}

/// Rational roots of a squarefree polynomial: every rational root `x`
/// satisfies `lc * x ∈ Z` for the primitive integer form, so rounding the
/// numeric roots and checking exactly finds them all up to float accuracy.
pub(crate) fn rational_roots(p: &Poly) -> Vec<Rational> {
    let prim = p.primitive_part();
    let lc = prim.last().expect("nonzero").clone();
    let q = Poly::from_integers(&prim);
    let coeffs: Vec<Complex64> = prim
        .iter()
        .map(|c| Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0))
        .collect();
    let mut out: Vec<Rational> = Vec::new();
    if q.deg() == 1 {
        out.push(-q.coeff(0) / q.coeff(1));
        return out;
    }
    let Ok(roots) = aberth(&coeffs, &AberthOptions::default()) else {
        return out;
    };
    let lcf = lc.to_f64().unwrap_or(f64::NAN);
    for r in roots {
        if r.im.abs() > 1e-6 * (1.0 + r.re.abs()) {
            continue;
        }
        let scaled = (r.re * lcf).round();
        if !scaled.is_finite() {
            continue;
        }
        for delta in [-1.0, 0.0, 1.0] {
            let Some(num) = num_bigint::BigInt::from_f64_exact(scaled + delta) else {
                continue;
            };
            let x = Rational::new(num, lc.clone());
            if q.eval(&x).is_zero() && !out.contains(&x) {
                out.push(x);
            }
        }
    }
    out
}

trait FromF64Exact: Sized {
    fn from_f64_exact(x: f64) -> Option<Self>;
}

impl FromF64Exact for BigInt {
    fn from_f64_exact(x: f64) -> Option<Self> {
        num_traits::FromPrimitive::from_f64(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, rat};

    fn map(cs: &[i64]) -> PolyMap {
        PolyMap::from_i64s(cs).unwrap()
    }

    #[test]
    fn quadratic_examples() {
        let r = superattracting_cycle_count(&map(&[0, 0, 1]), 5).unwrap();
        assert_eq!((r.count, r.per_period.clone(), r.certified_complete), (1, alloc::vec![(1, 1)], true));
        let r = superattracting_cycle_count(&map(&[-1, 0, 1]), 5).unwrap();
        assert_eq!((r.count, r.per_period.clone(), r.certified_complete), (1, alloc::vec![(2, 1)], true));
        let r = superattracting_cycle_count(&map(&[1, 0, 1]), 10).unwrap();
        assert_eq!((r.count, r.certified_complete), (0, true));
    }

    #[test]
    fn preperiodic_critical_point() {
        // 0 -> -2 -> 2 -> 2
        let r = superattracting_cycle_count(&map(&[-2, 0, 1]), 6).unwrap();
        assert_eq!((r.count, r.certified_complete), (0, true));
    }

    #[test]
    fn cubic_with_two_cycles() {
        // f = 2z^3 - 3z^2 + 1 has critical points 0 and 1 forming a 2-cycle
        let r = superattracting_cycle_count(&map(&[1, 0, -3, 2]), 4).unwrap();
        assert_eq!(r.per_period, alloc::vec![(2, 1)]);
        // critical points +-1/2 of -2z^3 + 3z/2 are both fixed
        let f = PolyMap::new(Poly::new(alloc::vec![int(0), rat(3, 2), int(0), int(-2)])).unwrap();
        let r = superattracting_cycle_count(&f, 3).unwrap();
        assert_eq!(r.per_period, alloc::vec![(1, 2)]);
    }

    #[test]
    fn irrational_critical_points() {
        // critical points +-1/sqrt(3) of z^3 - z + 5 escape
        let r = superattracting_cycle_count(&map(&[5, -1, 0, 1]), 3).unwrap();
        assert_eq!((r.count, r.certified_complete), (0, true));
        let f = map(&[0, -6, 0, 1]);
        let r = superattracting_cycle_count(&f, 4).unwrap();
        assert!(r.count <= 2);
    }

    #[test]
    fn bounded_wandering_orbit_is_certified_by_valuation() {
        // the critical point 1 maps to 7/12 and 3 divides every later denominator
        let f = PolyMap::new(Poly::new(alloc::vec![rat(3, 4), int(2), rat(-9, 2), rat(7, 3)])).unwrap();
        let r = superattracting_cycle_count(&f, 10).unwrap();
        assert!(r.certified_complete);
        assert_eq!(valuation(&rat(7, 12), &BigInt::from(3)), -1);
    }
}
