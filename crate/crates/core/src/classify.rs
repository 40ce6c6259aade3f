//! Classification predicates and ramification data.
//!
//! Critical values are handled through `R_q(t) = Res_z(q(z), F(z) - t)`,
//! whose roots are the values `F(c)` at the roots `c` of a factor `q` of
//! `F'`, each counted once per critical point. Grouping values by a coprime
//! basis of the squarefree parts of all `R_q` makes every count uniform
//! across the roots of a basis element, so no factorization over `Q` is
//! needed.

use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::dynmaps::{chebyshev, conjugacy_test, PolyMap};
use crate::exactalg::{coprime_basis, radical, resultant_in_t, squarefree, Poly, Rational};
use crate::{Error, Result};

/// Number of distinct finite critical values of `f`.
pub fn distinct_critical_values_count(f: &PolyMap) -> Result<usize> {
    f.require_dynamical("distinct_critical_values_count")?;
    let r = resultant_in_t(&f.poly().derivative(), f.poly())?;
    Ok(radical(&r)?.deg())
}

/// Exactly `deg f - 1` distinct critical values.
pub fn is_presimple(f: &PolyMap) -> Result<bool> {
    Ok(distinct_critical_values_count(f)? == f.degree() - 1)
}

/// Which normal form an exceptional polynomial is conjugate to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Exceptional {
    /// `z^d`
    Power,
    /// `T_d`
    ChebyshevPlus,
    /// `-T_d`
    ChebyshevMinus,
    None,
}

impl Exceptional {
    pub fn is_exceptional(self) -> bool {
        self != Exceptional::None
    }

    pub fn name(self) -> &'static str {
        match self {
            Exceptional::Power => "power",
            Exceptional::ChebyshevPlus => "chebyshev_plus",
            Exceptional::ChebyshevMinus => "chebyshev_minus",
            Exceptional::None => "none",
        }
    }
}

/// Tests conjugacy to `z^d`, `T_d` and `-T_d` in that order. For even `d`
/// the last two are conjugate, so `-T_d` is only reported for odd `d`.
pub fn is_exceptional(f: &PolyMap) -> Result<Exceptional> {
    f.require_dynamical("is_exceptional")?;
    let d = f.degree();
    let power = PolyMap::new(Poly::monomial(Rational::one(), d))?;
    if conjugacy_test(f, &power)?.is_some() {
        return Ok(Exceptional::Power);
    }
    let d32 = u32::try_from(d).map_err(|_| Error::InvalidArgument("degree too large".into()))?;
    let t = chebyshev(d32)?;
    if conjugacy_test(f, &t)?.is_some() {
        return Ok(Exceptional::ChebyshevPlus);
    }
    let minus = PolyMap::new(-t.poly())?;
    if conjugacy_test(f, &minus)?.is_some() {
        return Ok(Exceptional::ChebyshevMinus);
    }
    Ok(Exceptional::None)
}

/// `λ² z³ + λ(3μ + 2b) z² + (μ + b)(3μ + b) z + (μ/λ)(μ² + 2μb + b² - 1)`.
pub fn gl_cubic_family(lambda: &Rational, b: &Rational, mu: &Rational) -> Result<PolyMap> {
    if lambda.is_zero() || b.is_zero() {
        return Err(Error::InvalidArgument("λ and b must be nonzero".into()));
    }
    let three = Rational::from_integer(3.into());
    let two = Rational::from_integer(2.into());
    let c3 = lambda * lambda;
    let c2 = lambda * (&three * mu + &two * b);
    let c1 = (mu + b) * (&three * mu + b);
    let c0 = mu / lambda * (mu * mu + &two * mu * b + b * b - Rational::one());
    PolyMap::new(Poly::new(vec![c0, c1, c2, c3]))
}

/// A set of critical values (the roots of `factor`) together with the local
/// degrees of each map above any one of them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValueClass {
    /// Monic squarefree polynomial in `t`.
    pub factor: Poly,
    /// One partition of the map degree per map, in decreasing order.
    pub profiles: Vec<Vec<usize>>,
}

impl ValueClass {
    /// Number of values in the class.
    pub fn size(&self) -> usize {
        self.factor.deg()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamificationPortrait {
    pub degrees: Vec<usize>,
    pub classes: Vec<ValueClass>,
}

impl RamificationPortrait {
    /// Number of distinct finite values that are critical for some map.
    pub fn value_count(&self) -> usize {
        self.classes.iter().map(ValueClass::size).sum()
    }
}

/// Critical data of one map: for each squarefree factor `q` of `F'` with
/// multiplicity `e`, the squarefree levels of `R_q`.
struct CriticalData {
    degree: usize,
    levels: Vec<(usize, Vec<(Poly, usize)>)>,
}

fn critical_data(f: &PolyMap) -> Result<CriticalData> {
    let degree = f.degree();
    let mut levels = Vec::new();
    if degree >= 2 {
        for q in squarefree(&f.poly().derivative())?.factors {
            let rq = resultant_in_t(&q.factor, f.poly())?;
            let split = squarefree(&rq)?
                .factors
                .into_iter()
                .map(|l| (l.factor, l.multiplicity))
                .collect();
            levels.push((q.multiplicity, split));
        }
    }
    Ok(CriticalData { degree, levels })
}

impl CriticalData {
    /// Local degrees above a root of `v`, a basis element.
    fn profile(&self, v: &Poly) -> Result<Vec<usize>> {
        let mut parts = Vec::new();
        for (e, split) in &self.levels {
            for (factor, count) in split {
                if factor.rem(v).is_zero() {
                    parts.extend(core::iter::repeat(e + 1).take(*count));
                }
            }
        }
        let used: usize = parts.iter().sum();
        if used > self.degree {
            return Err(Error::Inconsistent("local degrees exceed the map degree".into()));
        }
        parts.extend(core::iter::repeat(1).take(self.degree - used));
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(parts)
    }

    fn factors(&self) -> impl Iterator<Item = &Poly> {
        self.levels.iter().flat_map(|(_, s)| s.iter().map(|(p, _)| p))
    }
}

/// Joint ramification data of one or two maps over their finite critical
/// values.
pub fn ramification_portrait(maps: &[PolyMap]) -> Result<RamificationPortrait> {
    if maps.is_empty() || maps.len() > 2 {
        return Err(Error::InvalidArgument("portrait needs one or two maps".into()));
    }
    let data: Vec<CriticalData> = maps.iter().map(critical_data).collect::<Result<_>>()?;
    let inputs: Vec<Poly> = data.iter().flat_map(|d| d.factors().cloned()).collect();
    let mut basis = coprime_basis(&inputs)?;
    basis.sort_by(|a, b| a.deg().cmp(&b.deg()).then_with(|| a.coeffs().cmp(b.coeffs())));
    let mut classes = Vec::with_capacity(basis.len());
    for v in basis {
        let profiles = data.iter().map(|d| d.profile(&v)).collect::<Result<_>>()?;
        classes.push(ValueClass { factor: v, profiles });
    }
    let portrait = RamificationPortrait {
        degrees: data.iter().map(|d| d.degree).collect(),
        classes,
    };
    for (i, &deg) in portrait.degrees.iter().enumerate() {
        let ramification: usize = portrait
            .classes
            .iter()
            .map(|c| c.size() * c.profiles[i].iter().map(|p| p - 1).sum::<usize>())
            .sum();
        if ramification != deg - 1 {
            return Err(Error::Inconsistent(alloc::format!(
                "map {i} has total ramification {ramification}, expected {}",
                deg - 1
            )));
        }
    }
    Ok(portrait)
}

fn half_of_two_minus(x: i64, base: i64) -> Result<i64> {
    let twice = base - x;
    if twice % 2 != 0 {
        return Err(Error::Inconsistent(alloc::format!("odd Euler characteristic {x}")));
    }
    Ok(twice / 2)
}

/// Genus formula for the curve `F(x) = H(y)`:
/// `2 - 2g = gcd(m, n) - (r - 1) m n + sum_j sum gcd(a, b)` over the `r`
/// critical values and the local degrees `a` of `F`, `b` of `H` above each.
///
/// The value is returned as computed; for reducible curves it is not a
/// geometric genus and may be negative.
pub fn genus_hfh(f: &PolyMap, h: &PolyMap) -> Result<i64> {
    let portrait = ramification_portrait(&[f.clone(), h.clone()])?;
    let (m, n) = (f.degree() as i64, h.degree() as i64);
    let r = portrait.value_count() as i64;
    let mut sum = 0i64;
    for c in &portrait.classes {
        let mut local = 0i64;
        for &a in &c.profiles[0] {
            for &b in &c.profiles[1] {
                local += a.gcd(&b) as i64;
            }
        }
        sum += c.size() as i64 * local;
    }
    half_of_two_minus(m.gcd(&n) - (r - 1) * m * n + sum, 2)
}

/// Genus formula for the curve `(F(x) - F(y)) / (x - y) = 0`:
/// `4 - 2g = m - (r - 1) m^2 + sum_j sum gcd(a, a')`.
pub fn genus_hf(f: &PolyMap) -> Result<i64> {
    f.require_dynamical("genus_hf")?;
    let portrait = ramification_portrait(core::slice::from_ref(f))?;
    let m = f.degree() as i64;
    let r = portrait.value_count() as i64;
    let mut sum = 0i64;
    for c in &portrait.classes {
        let p = &c.profiles[0];
        let local: i64 = p
            .iter()
            .flat_map(|a| p.iter().map(move |b| a.gcd(b) as i64))
            .sum();
        sum += c.size() as i64 * local;
    }
    half_of_two_minus(m - (r - 1) * m * m + sum, 4)
}

/// Fixed points witnessing a generalized Lattès form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FixedPointWitness {
    Rational(Rational),
    /// Every root of this monic squarefree polynomial is a witness.
    Algebraic(Poly),
}

/// `f` is conjugate to `z^r R(z)^n` by a translation taking a witness fixed
/// point to 0, with `gcd(r, n) = 1` and `n >= 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlForm {
    pub r: usize,
    pub n: usize,
    /// `deg R`, so that `r + n * rest_degree = deg f`.
    pub rest_degree: usize,
    pub witness: FixedPointWitness,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GlWitness {
    /// Exceptional maps are generalized Lattès.
    Exceptional(Exceptional),
    Form(GlForm),
}

/// Searches for a fixed point `p` with `f(z) - p = c (z - p)^r S(z)^n`.
///
/// Such a `p` is a critical value of `f` unless `f` is a power map. Candidate
/// fixed points are split into pieces on which both `r - 1 = ord_p f'` and
/// the value class of `p` are constant, so each piece is decided at once.
pub fn generalized_lattes_form(f: &PolyMap) -> Result<Option<GlWitness>> {
    let tag = is_exceptional(f)?;
    if tag.is_exceptional() {
        return Ok(Some(GlWitness::Exceptional(tag)));
    }
    let d = f.degree();
    let fp = f.poly();
    let data = critical_data(f)?;
    let fixed = fp - &Poly::z();
    let inputs: Vec<Poly> = data.factors().cloned().collect();
    let classes = coprime_basis(&inputs)?;
    let deriv = squarefree(&fp.derivative())?;

    let mut pieces: Vec<(Poly, usize, Vec<usize>)> = Vec::new();
    for v in &classes {
        let w = v.gcd(&fixed);
        if w.is_constant() {
            continue;
        }
        let profile = data.profile(v)?;
        let mut rest = w;
        for q in &deriv.factors {
            let g = rest.gcd(&q.factor);
            if !g.is_constant() {
                rest = rest.exact_div(&g).expect("gcd divides");
                pieces.push((g, q.multiplicity + 1, profile.clone()));
            }
        }
        if !rest.is_constant() {
            pieces.push((rest, 1, profile));
        }
    }
    pieces.sort_by(|a, b| a.0.deg().cmp(&b.0.deg()).then_with(|| a.0.coeffs().cmp(b.0.coeffs())));

    for (piece, r, mut profile) in pieces {
        let pos = profile
            .iter()
            .position(|&p| p == r)
            .ok_or_else(|| Error::Inconsistent("fixed point missing from its fibre".into()))?;
        profile.remove(pos);
        let g = profile.iter().fold(0usize, |acc, &p| acc.gcd(&p));
        let n = coprime_part(g, r);
        if n < 2 {
            continue;
        }
        let witness = if piece.deg() == 1 {
            FixedPointWitness::Rational(-piece.coeff(0) / piece.coeff(1))
        } else {
            FixedPointWitness::Algebraic(piece.monic())
        };
        return Ok(Some(GlWitness::Form(GlForm {
            r,
            n,
            rest_degree: (d - r) / n,
            witness,
        })));
    }
    Ok(None)
}

/// Largest divisor of `g` coprime to `r`.
fn coprime_part(mut g: usize, r: usize) -> usize {
    loop {
        let c = g.gcd(&r);
        if c == 1 {
            return g;
        }
        g /= c;
    }
}
