//! Chinese remaindering with early termination and rational reconstruction.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::field::{NttPrimes, Zp};
use super::reduce_int;
use crate::exactalg::Rational;
use crate::{Error, Result};

/// A computation over Q that can be evaluated modulo word-size primes.
pub trait ModularImage {
    /// Number of rational outputs.
    fn output_len(&self) -> usize;

    /// Primes at which reduction of the inputs is undefined or not
    /// faithful (a denominator or a leading coefficient vanishes).
    fn is_bad_prime(&self, p: u64) -> bool;

    /// Residues of all outputs modulo `p`, or `None` when `p` turns out to
    /// be unlucky and must be skipped.
    fn image(&self, p: u64) -> Option<Vec<u64>>;

    /// A priori bound on `log2 |x|` for every output `x`.
    fn log2_bound(&self) -> f64;

    /// Primes are drawn from `p ≡ 1 (mod 2^k)` with this `k`.
    fn two_adicity(&self) -> u32 {
        1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrtOptions {
    /// Fresh primes that must agree with a reconstructed candidate before it
    /// is accepted.
    pub confirm_primes: usize,
    /// Number of good primes to skip at the start of the sequence; two runs
    /// with offsets further apart than the primes used see disjoint sets.
    pub prime_offset: usize,
    /// Hard limit on the number of primes used.
    pub max_primes: usize,
}

impl Default for CrtOptions {
    fn default() -> Self {
        CrtOptions {
            confirm_primes: 2,
            prime_offset: 0,
            max_primes: 20_000,
        }
    }
}

/// Statistics from a reconstruction run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CrtStats {
    pub primes_used: usize,
    pub modulus_bits: u64,
    pub attempts: usize,
}

/// Runs the modular computation until the reconstructed rationals are
/// confirmed by fresh primes and respect the magnitude bound.
pub fn reconstruct<I: ModularImage + ?Sized>(
    img: &I,
    opts: &CrtOptions,
) -> Result<(Vec<Rational>, CrtStats)> {
    let len = img.output_len();
    let mut primes = NttPrimes::new(img.two_adicity())
        .filter(|&p| !img.is_bad_prime(p))
        .skip(opts.prime_offset);
    let mut acc = Accumulator::new(len);
    let mut stats = CrtStats::default();
    let mut next_attempt = 1usize;
    let bound = img.log2_bound();
    let mut pending: Option<(u64, Vec<u64>)> = None;

    loop {
        if stats.primes_used >= opts.max_primes {
            return Err(Error::PrimesExhausted);
        }
        let p = primes.next().ok_or(Error::PrimesExhausted)?;
        stats.primes_used += 1;
        let Some(r) = img.image(p) else {
            continue;
        };
        debug_assert_eq!(r.len(), len);
        match pending.take() {
            None => pending = Some((p, r)),
            Some((q, s)) => acc.absorb_pair(q, &s, p, &r),
        }
        if stats.primes_used < next_attempt {
            continue;
        }
        next_attempt = stats.primes_used + (stats.primes_used / 8).max(1);
        if let Some((q, s)) = pending.take() {
            acc.absorb(q, &s);
        }
        stats.attempts += 1;
        let Some(candidate) = acc.rational_reconstruct() else {
            continue;
        };
        let mut confirmed = true;
        let mut checked = 0;
        while checked < opts.confirm_primes {
            let p = primes.next().ok_or(Error::PrimesExhausted)?;
            stats.primes_used += 1;
            let Some(r) = img.image(p) else {
                continue;
            };
            let f = Zp::new(p);
            match agrees(&f, &candidate, &r) {
                Some(true) => checked += 1,
                Some(false) => {
                    confirmed = false;
                    acc.absorb(p, &r);
                    break;
                }
                // a candidate denominator vanishes mod p; not informative
                None => {}
            }
            acc.absorb(p, &r);
        }
        if !confirmed {
            continue;
        }
        let within = candidate.iter().all(|x| log2_abs(x) <= bound + 1.0);
        if !within {
            return Err(Error::Inconsistent(alloc::format!(
                "reconstructed value exceeds the a priori bound of 2^{bound:.1}"
            )));
        }
        stats.modulus_bits = acc.modulus.bits();
        return Ok((candidate, stats));
    }
}

fn agrees(f: &Zp, candidate: &[Rational], r: &[u64]) -> Option<bool> {
    let p = f.modulus();
    for (x, &res) in candidate.iter().zip(r) {
        let den = (x.denom() % p).to_u64().unwrap_or(0);
        if den == 0 {
            return None;
        }
        let num = reduce_int(x.numer(), p);
        if f.mul(num, f.inv(den)) != res {
            return Some(false);
        }
    }
    Some(true)
}

pub(crate) fn log2_abs(x: &Rational) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    x.numer().bits() as f64 - x.denom().bits() as f64 + 1.0
}

struct Accumulator {
    residues: Vec<BigUint>,
    modulus: BigUint,
}

impl Accumulator {
    fn new(len: usize) -> Self {
        Accumulator {
            residues: vec![BigUint::zero(); len],
            modulus: BigUint::one(),
        }
    }

    /// Folds in residues modulo `m < 2^62` (a prime or a product of two).
    fn absorb_word(&mut self, m: u64, r: &[u64]) {
        let big_m = self.modulus.clone();
        let mm = (&big_m % m).to_u64().expect("fits");
        if mm == 0 {
            return;
        }
        let inv = inverse_mod(mm, m);
        for (x, &ri) in self.residues.iter_mut().zip(r) {
            let xm = (&*x % m).to_u64().expect("fits");
            let diff = (ri + m - xm) % m;
            let t = mulmod(diff, inv, m);
            if t != 0 {
                *x += &big_m * t;
            }
        }
        self.modulus *= m;
    }

    fn absorb(&mut self, p: u64, r: &[u64]) {
        self.absorb_word(p, r);
    }

    fn absorb_pair(&mut self, p: u64, rp: &[u64], q: u64, rq: &[u64]) {
        let m = p * q;
        let pinv = inverse_mod(p % q, q);
        let combined: Vec<u64> = rp
            .iter()
            .zip(rq)
            .map(|(&a, &b)| {
                // x = a + p * ((b - a) / p mod q)
                let t = mulmod((b + q - a % q) % q, pinv, q);
                a + p * t
            })
            .collect();
        self.absorb_word(m, &combined);
    }

    /// Reconstructs every entry, highest index first, sharing a running
    /// common denominator. Returns `None` when some entry does not yet
    /// determine a small rational.
    fn rational_reconstruct(&self) -> Option<Vec<Rational>> {
        let m = BigInt::from(self.modulus.clone());
        let half = &m >> 1u32;
        // Integers are accepted with a 48-bit margin below m/2; new
        // denominators need the classical balanced bound.
        let int_limit = &m >> 49u32;
        let wang_limit = BigInt::from(self.modulus.sqrt()) >> 1u32;
        let mut den = BigInt::one();
        let mut last_factor = BigInt::one();
        let mut out = vec![Rational::zero(); self.residues.len()];
        for (i, r) in self.residues.iter().enumerate().rev() {
            let r = BigInt::from(r.clone());
            let u = (&r * &den).mod_floor(&m);
            let s = if u > half { &u - &m } else { u.clone() };
            if s.magnitude() <= int_limit.magnitude() {
                out[i] = Rational::new(s, den.clone());
                continue;
            }
            if !last_factor.is_one() {
                let u2 = (&u * &last_factor).mod_floor(&m);
                let s2 = if u2 > half { &u2 - &m } else { u2 };
                if s2.magnitude() <= int_limit.magnitude() {
                    den *= &last_factor;
                    out[i] = Rational::new(s2, den.clone());
                    continue;
                }
            }
            let (n, d) = wang(&u, &m, &wang_limit)?;
            den *= &d;
            if den.bits() * 2 > m.bits() {
                return None;
            }
            last_factor = d;
            out[i] = Rational::new(n, den.clone());
        }
        Some(out)
    }
}

/// Rational reconstruction: finds `n/d ≡ u (mod m)` with `|n|, d <= limit`.
fn wang(u: &BigInt, m: &BigInt, limit: &BigInt) -> Option<(BigInt, BigInt)> {
    let (mut r0, mut r1) = (m.clone(), u.clone());
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > *limit {
        let (q, r) = r0.div_rem(&r1);
        r0 = core::mem::replace(&mut r1, r);
        let t = &t0 - &q * &t1;
        t0 = core::mem::replace(&mut t1, t);
    }
    if t1.is_zero() || t1.magnitude() > limit.magnitude() || !r1.gcd(&t1).is_one() {
        return None;
    }
    if t1.sign() == Sign::Minus {
        Some((-r1, -t1))
    } else {
        Some((r1, t1))
    }
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn inverse_mod(a: u64, m: u64) -> u64 {
    let (mut r0, mut r1) = (m as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    assert_eq!(r0, 1, "not invertible");
    t0.rem_euclid(m as i128) as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    struct Fixed(Vec<Rational>);

    impl ModularImage for Fixed {
        fn output_len(&self) -> usize {
            self.0.len()
        }
        fn is_bad_prime(&self, p: u64) -> bool {
            self.0.iter().any(|x| (x.denom() % p).is_zero())
        }
        fn image(&self, p: u64) -> Option<Vec<u64>> {
            let f = Zp::new(p);
            let v = self
                .0
                .iter()
                .map(|x| {
                    let d = (x.denom() % p).to_u64().unwrap();
                    f.mul(reduce_int(x.numer(), p), f.inv(d))
                })
                .collect();
            Some(v)
        }
        fn log2_bound(&self) -> f64 {
            400.0
        }
    }

    #[test]
    fn recovers_mixed_rationals() {
        let big: BigInt = num_traits::pow(BigInt::from(3), 200) - 7;
        let vals = vec![
            rat(0, 1),
            rat(-5, 1),
            Rational::new(big.clone(), BigInt::from(1024)),
            rat(7, 9),
            Rational::from_integer(-big),
            rat(1, 3),
        ];
        let (got, stats) = reconstruct(&Fixed(vals.clone()), &CrtOptions::default()).unwrap();
        assert_eq!(got, vals);
        assert!(stats.primes_used > 10);
    }

    #[test]
    fn disjoint_prime_sets_agree() {
        let vals = vec![rat(22, 7), rat(-355, 113), rat(1, 1)];
        let a = reconstruct(&Fixed(vals.clone()), &CrtOptions::default()).unwrap();
        let opts = CrtOptions {
            prime_offset: 200,
            ..CrtOptions::default()
        };
        let b = reconstruct(&Fixed(vals.clone()), &opts).unwrap();
        assert_eq!(a.0, b.0);
        assert_eq!(a.0, vals);
    }

    #[test]
    fn wang_small_case() {
        let m = BigInt::from(1_000_003u64);
        // 2/3 mod m
        let inv3 = BigInt::from(inverse_mod(3, 1_000_003));
        let u = (BigInt::from(2) * inv3).mod_floor(&m);
        assert_eq!(wang(&u, &m, &BigInt::from(700)), Some((BigInt::from(2), BigInt::from(3))));
    }
}
