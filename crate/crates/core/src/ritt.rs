//! Ritt moves `z^r R(z^k)` and `z^r R(z)^k`.
//!
//! The two maps satisfy `Q ∘ z^k = z^k ∘ P`, and whenever
//! `gcd(r (r^n - 1), k) = 1` they share the multiplier spectrum at level `n`.
//! Such levels include the progression `c1 + N d` where `d` is the order of
//! `r` modulo `k`.

use alloc::format;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::dynmaps::PolyMap;
use crate::exactalg::Poly;
use crate::spectrum::{spectrum_level_with, SpectrumOptions};
use crate::{Error, Result};

/// `P = z^r R(z^k)` and `Q = z^r R(z)^k`.
///
/// Fields are public so that callers can build deliberately broken pairs for
/// the checks below; [`build_ritt_pair`] is the validated constructor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RittPair {
    pub r: usize,
    pub k: usize,
    /// The polynomial `R`.
    pub base: Poly,
    pub p: PolyMap,
    pub q: PolyMap,
}

pub fn build_ritt_pair(r: usize, k: usize, base: &Poly) -> Result<RittPair> {
    if base.is_zero() {
        return Err(Error::ZeroPolynomial("Ritt pair R"));
    }
    if r == 0 || k == 0 {
        return Err(Error::InvalidArgument("r and k must be positive".into()));
    }
    let total = r + k * base.deg();
    if total < 2 {
        return Err(Error::DegreeTooSmall {
            op: "build_ritt_pair",
            found: total,
            required: 2,
        });
    }
    let k32 = u32::try_from(k).map_err(|_| Error::InvalidArgument(format!("k = {k} too large")))?;
    let p = PolyMap::new(base.expand_power(k).shift_up(r))?;
    let q = PolyMap::new(base.pow(k32).shift_up(r))?;
    let pair = RittPair {
        r,
        k,
        base: base.clone(),
        p,
        q,
    };
    if !semiconjugacy_check(&pair, 1) {
        return Err(Error::Inconsistent("Q ∘ z^k != z^k ∘ P".into()));
    }
    Ok(pair)
}

/// Moves the factor `z^l` of `R` into the monomial: `(r, k, z^l R0)` becomes
/// `(r + l k, k, R0)` with `R0(0) != 0`. `P` and `Q` do not change.
pub fn normalize_pair(pair: &RittPair) -> RittPair {
    let l = pair.base.low_order();
    if l == 0 {
        return pair.clone();
    }
    RittPair {
        r: pair.r + l * pair.k,
        k: pair.k,
        base: pair.base.shift_down(l),
        p: pair.p.clone(),
        q: pair.q.clone(),
    }
}

/// `d` is the multiplicative order of `r` modulo `k` and `c1` the least
/// `n >= 1` with `gcd(r (r^n - 1), k) = 1`. When no such `n` exists the
/// params are invalid and `c1` is 0; `d` is 0 if `r` is not a unit mod `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ProgressionParams {
    pub c1: usize,
    pub d: usize,
    pub valid: bool,
}

impl ProgressionParams {
    /// The level `c1 + N d`.
    pub fn level(&self, n: usize) -> usize {
        self.c1 + n * self.d
    }
}

fn pow_mod(base: u128, mut e: usize, m: u128) -> u128 {
    let mut acc = 1 % m;
    let mut b = base % m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

fn multiplicative_order(r: usize, k: usize) -> Option<usize> {
    if k == 1 {
        return Some(1);
    }
    if r.gcd(&k) != 1 {
        return None;
    }
    let (r, m) = (r as u128 % k as u128, k as u128);
    let mut x = r;
    for n in 1..=k {
        if x == 1 {
            return Some(n);
        }
        x = x * r % m;
    }
    None
}

pub fn progression_params(r: usize, k: usize) -> ProgressionParams {
    let invalid = |d| ProgressionParams { c1: 0, d, valid: false };
    if r == 0 || k == 0 {
        return invalid(0);
    }
    let Some(d) = multiplicative_order(r, k) else {
        return invalid(0);
    };
    match (1..=d).find(|&n| good_level(r, k, n)) {
        Some(c1) => ProgressionParams { c1, d, valid: true },
        None => invalid(d),
    }
}

/// Whether `gcd(r^n - 1, k) = 1`.
pub fn good_level(r: usize, k: usize, n: usize) -> bool {
    if k == 0 {
        return false;
    }
    let m = k as u128;
    let x = (pow_mod(r as u128, n, m) + m - 1 % m) % m;
    (x as usize).gcd(&k) == 1
}

/// Whether `Q^n ∘ z^k = z^k ∘ P^n` holds exactly.
pub fn semiconjugacy_check(pair: &RittPair, n: usize) -> bool {
    let Ok(k) = u32::try_from(pair.k) else {
        return false;
    };
    let lhs = pair.q.poly().iterate(n).expand_power(pair.k);
    let rhs = pair.p.poly().iterate(n).pow(k);
    lhs == rhs
}

/// Whether `((Q^n)'(z^k) - (P^n)'(z)) z^(k-1)` vanishes modulo `P^n(z) - z`,
/// so that each fixed point `z0` of `P^n` has the multiplier of `z0^k` under
/// `Q^n`.
pub fn multiplier_congruence_check(pair: &RittPair, n: usize) -> bool {
    let pn = pair.p.poly().iterate(n);
    let qn = pair.q.poly().iterate(n);
    let modulus = &pn - &Poly::z();
    if modulus.is_zero() {
        return true;
    }
    let diff = &qn.derivative().expand_power(pair.k) - &pn.derivative();
    diff.shift_up(pair.k - 1).rem(&modulus).is_zero()
}

/// Outcome of comparing `S_n(P)` and `S_n(Q)` level by level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelCheck {
    pub level: usize,
    /// `gcd(r (r^n - 1), k) = 1`, so equality is guaranteed.
    pub guaranteed: bool,
    pub on_progression: bool,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProgressionReport {
    /// The normalized pair that was checked.
    pub pair: RittPair,
    pub params: ProgressionParams,
    /// Levels `1..=max` in order, up to the first one over the size cap.
    pub levels: Vec<LevelCheck>,
    /// The largest level that was requested.
    pub max_level: usize,
    /// The first level skipped for exceeding the size cap.
    pub truncated_at: Option<usize>,
}

impl ProgressionReport {
    pub fn all_equal(&self) -> bool {
        self.levels.iter().all(|l| l.equal)
    }

    pub fn unequal_levels(&self) -> Vec<usize> {
        self.levels.iter().filter(|l| !l.equal).map(|l| l.level).collect()
    }
}

pub fn verify_progression(pair: &RittPair, terms: usize) -> Result<ProgressionReport> {
    verify_progression_with(pair, terms, &SpectrumOptions::default())
}

/// Compares the spectra of `P` and `Q` at every level up to `c1 + (terms - 1) d`.
/// If the progression hypothesis fails, levels `1..=terms` are scanned with
/// nothing guaranteed. An inequality at a guaranteed level is reported as
/// [`Error::Inconsistent`].
pub fn verify_progression_with(
    pair: &RittPair,
    terms: usize,
    opts: &SpectrumOptions,
) -> Result<ProgressionReport> {
    if terms == 0 {
        return Err(Error::InvalidArgument("terms must be positive".into()));
    }
    let pair = normalize_pair(pair);
    pair.p.require_dynamical("verify_progression")?;
    let (r, k) = (pair.r, pair.k);
    let params = progression_params(r, k);
    let max_level = if params.valid {
        params.level(terms - 1)
    } else {
        terms
    };
    let coprime = r.gcd(&k) == 1;
    let deg = pair.p.degree() as u128;
    let mut levels = Vec::with_capacity(max_level);
    let mut truncated_at = None;
    for n in 1..=max_level {
        let size = deg.checked_pow(n as u32).unwrap_or(u128::MAX);
        if size > opts.size_cap as u128 {
            truncated_at = Some(n);
            break;
        }
        let equal = pair.p == pair.q
            || spectrum_level_with(&pair.p, n, opts)? == spectrum_level_with(&pair.q, n, opts)?;
        let guaranteed = coprime && good_level(r, k, n);
        if guaranteed && !equal {
            return Err(Error::Inconsistent(format!(
                "spectra differ at guaranteed level {n} for r = {r}, k = {k}"
            )));
        }
        let on_progression = params.valid && n >= params.c1 && (n - params.c1) % params.d == 0;
        levels.push(LevelCheck {
            level: n,
            guaranteed,
            on_progression,
            equal,
        });
    }
    Ok(ProgressionReport {
        pair,
        params,
        levels,
        max_level,
        truncated_at,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(r: usize, k: usize, base: &[i64]) -> RittPair {
        build_ritt_pair(r, k, &Poly::from_i64s(base)).unwrap()
    }

    #[test]
    fn build_examples() {
        let p = pair(2, 3, &[1, 1]);
        assert_eq!(*p.p.poly(), Poly::from_i64s(&[0, 0, 1, 0, 0, 1]));
        assert_eq!(*p.q.poly(), Poly::from_i64s(&[0, 0, 1, 3, 3, 1]));
        let p = pair(1, 2, &[-3, 1]);
        assert_eq!(*p.p.poly(), Poly::from_i64s(&[0, -3, 0, 1]));
        assert_eq!(*p.q.poly(), Poly::from_i64s(&[0, 9, -6, 1]));
        let p = pair(3, 1, &[2, -1, 5]);
        assert_eq!(p.p, p.q);
        assert!(build_ritt_pair(1, 1, &Poly::zero()).is_err());
        assert!(build_ritt_pair(1, 1, &Poly::one()).is_err());
    }

    #[test]
    fn normalization() {
        let p = pair(2, 3, &[0, 1, 1]);
        let n = normalize_pair(&p);
        assert_eq!((n.r, n.k, n.base.clone()), (5, 3, Poly::from_i64s(&[1, 1])));
        assert_eq!(n.p, p.p);
        assert_eq!(n.p, pair(5, 3, &[1, 1]).p);
        let p = pair(2, 3, &[1, 1]);
        assert_eq!(normalize_pair(&p), p);
        let n = normalize_pair(&pair(1, 2, &[0, 0, 0, 1]));
        assert_eq!((n.r, n.base.clone()), (7, Poly::one()));
        assert_eq!(*n.p.poly(), Poly::monomial(crate::exactalg::int(1), 7));
    }

    #[test]
    fn params() {
        let v = |c1, d| ProgressionParams { c1, d, valid: true };
        assert_eq!(progression_params(2, 3), v(1, 2));
        assert_eq!(progression_params(5, 1), v(1, 1));
        assert!(!progression_params(3, 4).valid);
        assert!(!progression_params(2, 4).valid);
        assert_eq!(progression_params(2, 7), v(1, 3));
        // 4 ≡ 1 mod 3 makes 4^n - 1 always divisible by 3
        assert!(!progression_params(4, 3).valid);
    }

    #[test]
    fn good_levels() {
        assert!(good_level(2, 3, 1));
        assert!(!good_level(2, 3, 2));
        assert!(good_level(2, 3, 5));
        assert!((1..6).all(|n| good_level(7, 1, n)));
    }

    #[test]
    fn identities() {
        let p = pair(2, 3, &[1, 1]);
        assert!(semiconjugacy_check(&p, 1));
        assert!(semiconjugacy_check(&p, 3));
        assert!(multiplier_congruence_check(&p, 1));
        assert!(multiplier_congruence_check(&p, 2));
        assert!(multiplier_congruence_check(&pair(1, 2, &[-3, 1]), 1));
        let mut bad = p.clone();
        bad.q = PolyMap::new(bad.q.poly() + &Poly::one()).unwrap();
        assert!(!semiconjugacy_check(&bad, 1));
        // a constant shift leaves Q' unchanged
        assert!(multiplier_congruence_check(&bad, 1));
        bad.q = PolyMap::new(p.q.poly() + &Poly::z()).unwrap();
        assert!(!multiplier_congruence_check(&bad, 1));
    }

    #[test]
    fn progression_two_three() {
        let rep = verify_progression(&pair(2, 3, &[1, 1]), 2).unwrap();
        assert_eq!(rep.max_level, 3);
        assert_eq!(rep.truncated_at, None);
        assert_eq!(rep.unequal_levels(), alloc::vec![2]);
        assert!(rep.levels[0].on_progression && rep.levels[2].on_progression);
    }

    #[test]
    fn progression_conjugate_pair() {
        let rep = verify_progression(&pair(1, 2, &[-3, 1]), 3).unwrap();
        assert!(!rep.params.valid);
        assert!(rep.all_equal());
        assert_eq!(rep.levels.len(), 3);
    }

    #[test]
    fn progression_truncates() {
        let opts = SpectrumOptions {
            size_cap: 200,
            ..SpectrumOptions::default()
        };
        let rep = verify_progression_with(&pair(2, 3, &[1, 1]), 3, &opts).unwrap();
        assert_eq!(rep.max_level, 5);
        assert_eq!(rep.truncated_at, Some(4));
        assert_eq!(rep.levels.len(), 3);
    }
}
