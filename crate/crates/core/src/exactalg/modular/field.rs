//! Arithmetic in Z/pZ for word-size primes p < 2^31.

use alloc::vec::Vec;

/// A prime field with Barrett reduction for products of two residues.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Zp {
    p: u64,
    m: u64,
}

impl Zp {
    /// # Panics
    /// Panics unless `2 < p < 2^31`.
    pub fn new(p: u64) -> Self {
        assert!(p > 2 && p < (1 << 31), "modulus out of range");
        let m = u64::MAX / p;
        Zp { p, m }
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Reduces any `x < 2^64`.
    #[inline]
    pub fn reduce(&self, x: u64) -> u64 {
        let q = ((x as u128 * self.m as u128) >> 64) as u64;
        let mut r = x.wrapping_sub(q.wrapping_mul(self.p));
        if r >= self.p {
            r -= self.p;
        }
        if r >= self.p {
            r -= self.p;
        }
        r
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        self.reduce(a * b)
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    /// # Panics
    /// Panics on `a == 0`.
    pub fn inv(&self, a: u64) -> u64 {
        assert!(a != 0, "inverse of zero mod {}", self.p);
        self.pow(a, self.p - 2)
    }

    /// Reduces a signed value.
    pub fn from_i64(&self, a: i64) -> u64 {
        let r = a.rem_euclid(self.p as i64);
        r as u64
    }

    /// Symmetric representative in `(-p/2, p/2]`.
    pub fn signed(&self, a: u64) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }

    /// Generator of the multiplicative group.
    pub fn primitive_root(&self) -> u64 {
        let phi = self.p - 1;
        let factors = prime_factors(phi);
        (2..self.p)
            .find(|&g| factors.iter().all(|&q| self.pow(g, phi / q) != 1))
            .expect("prime fields are cyclic")
    }

    /// Inner product. Four products of residues below 2^31 fit in a u64, so
    /// reduction happens once per group of four.
    #[inline]
    pub fn dot(&self, a: &[u64], b: &[u64]) -> u64 {
        let mut acc = 0u64;
        let mut chunks_a = a.chunks_exact(4);
        let mut chunks_b = b.chunks_exact(4);
        for (x, y) in (&mut chunks_a).zip(&mut chunks_b) {
            let s = x[0] * y[0] + x[1] * y[1] + x[2] * y[2] + x[3] * y[3];
            acc = self.add(acc, self.reduce(s));
        }
        for (x, y) in chunks_a.remainder().iter().zip(chunks_b.remainder()) {
            acc = self.add(acc, self.mul(*x, *y));
        }
        acc
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut q = 2;
    while q * q <= n {
        if n % q == 0 {
            out.push(q);
            while n % q == 0 {
                n /= q;
            }
        }
        q += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Deterministic Miller–Rabin, valid for all `n < 3.4 * 10^14`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17] {
        if n % q == 0 {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut a: u64, mut e: u64| {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mulmod(r, a);
            }
            a = mulmod(a, a);
            e >>= 1;
        }
        r
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes `p < 2^31` with `p ≡ 1 (mod 2^k)`, in decreasing order.
#[derive(Clone, Debug)]
pub struct NttPrimes {
    shift: u32,
    next_c: u64,
}

impl NttPrimes {
    pub fn new(two_adicity: u32) -> Self {
        let shift = two_adicity.clamp(1, 30);
        NttPrimes {
            shift,
            next_c: ((1u64 << 31) - 1) >> shift,
        }
    }
}

impl Iterator for NttPrimes {
    type Item = u64;
    fn next(&mut self) -> Option<u64> {
        while self.next_c > 0 {
            let p = (self.next_c << self.shift) + 1;
            self.next_c -= 1;
            if is_prime(p) {
                return Some(p);
            }
        }
        None
    }
}
