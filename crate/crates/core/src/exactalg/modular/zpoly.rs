//! Dense polynomials over Z/pZ as ascending `Vec<u64>`.

use alloc::vec;
use alloc::vec::Vec;

use super::field::Zp;
use super::ntt::Ntt;

const SCHOOLBOOK_CUTOFF: usize = 48;

pub fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Arithmetic context: a field plus transform tables large enough for the
/// products that will be requested.
#[derive(Clone, Debug)]
pub struct ZpCtx {
    pub f: Zp,
    pub ntt: Option<Ntt>,
}

impl ZpCtx {
    /// Tables cover products of length up to `max_product_len`; fields
    /// without enough 2-power roots fall back to schoolbook products.
    pub fn new(p: u64, max_product_len: usize) -> Self {
        let f = Zp::new(p);
        let log = max_product_len.max(2).next_power_of_two().trailing_zeros();
        ZpCtx {
            f,
            ntt: Ntt::new(f, log),
        }
    }

    pub fn p(&self) -> u64 {
        self.f.modulus()
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let n = a.len() + b.len() - 1;
        let mut out = match &self.ntt {
            Some(ntt) if a.len().min(b.len()) > SCHOOLBOOK_CUTOFF && n <= ntt.max_len() => {
                let mut c = ntt.cyclic(a, b, n.next_power_of_two());
                c.truncate(n);
                c
            }
            _ => self.schoolbook(a, b),
        };
        trim(&mut out);
        out
    }

    fn schoolbook(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let f = &self.f;
        let n = a.len() + b.len() - 1;
        let mut out = vec![0u64; n];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (o, &y) in out[i..].iter_mut().zip(b) {
                *o = f.add(*o, f.mul(x, y));
            }
        }
        out
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let mut out = vec![0u64; a.len().max(b.len())];
        for (i, o) in out.iter_mut().enumerate() {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            *o = self.f.add(x, y);
        }
        trim(&mut out);
        out
    }

    pub fn sub(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let mut out = vec![0u64; a.len().max(b.len())];
        for (i, o) in out.iter_mut().enumerate() {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            *o = self.f.sub(x, y);
        }
        trim(&mut out);
        out
    }

    pub fn scale(&self, a: &[u64], c: u64) -> Vec<u64> {
        let mut out: Vec<u64> = a.iter().map(|&x| self.f.mul(x, c)).collect();
        trim(&mut out);
        out
    }

    pub fn derivative(&self, a: &[u64]) -> Vec<u64> {
        let p = self.p();
        let mut out: Vec<u64> = a
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| self.f.mul(c, i as u64 % p))
            .collect();
        trim(&mut out);
        out
    }

    pub fn eval(&self, a: &[u64], x: u64) -> u64 {
        a.iter().rev().fold(0, |acc, &c| self.f.add(self.f.mul(acc, x), c))
    }

    /// `a(b)` by Horner's rule.
    pub fn compose(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let mut acc: Vec<u64> = Vec::new();
        for &c in a.iter().rev() {
            acc = self.mul(&acc, b);
            if acc.is_empty() {
                acc.push(c);
            } else {
                acc[0] = self.f.add(acc[0], c);
            }
            trim(&mut acc);
        }
        acc
    }

    /// Remainder by a divisor with invertible leading coefficient.
    pub fn rem(&self, a: &[u64], d: &[u64]) -> Vec<u64> {
        let f = &self.f;
        let dd = d.len() - 1;
        let mut r = a.to_vec();
        trim(&mut r);
        if r.len() <= dd {
            return r;
        }
        let li = f.inv(d[dd]);
        for i in (dd..r.len()).rev() {
            let c = f.mul(r[i], li);
            if c == 0 {
                continue;
            }
            let base = i - dd;
            for (j, &dc) in d[..dd].iter().enumerate() {
                r[base + j] = f.sub(r[base + j], f.mul(c, dc));
            }
            r[i] = 0;
        }
        r.truncate(dd);
        trim(&mut r);
        r
    }

    /// Monic gcd.
    pub fn gcd(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let mut x = a.to_vec();
        let mut y = b.to_vec();
        trim(&mut x);
        trim(&mut y);
        while !y.is_empty() {
            let r = self.rem(&x, &y);
            x = y;
            y = r;
        }
        if let Some(&l) = x.last() {
            let li = self.f.inv(l);
            x = self.scale(&x, li);
        }
        x
    }

    /// `a^{-1} mod z^n`; requires `a[0] != 0`.
    pub fn inv_series(&self, a: &[u64], n: usize) -> Vec<u64> {
        let f = &self.f;
        let mut g = vec![f.inv(a[0])];
        let mut len = 1;
        while len < n {
            len = (2 * len).min(n);
            // g <- g (2 - a g) mod z^len
            let a_cut = &a[..a.len().min(len)];
            let mut ag = self.mul(a_cut, &g);
            ag.resize(len, 0);
            for x in ag.iter_mut() {
                *x = f.neg(*x);
            }
            ag[0] = f.add(ag[0], 2);
            let mut next = self.mul(&g, &ag);
            next.resize(len, 0);
            g = next;
        }
        g.truncate(n);
        g
    }

    /// Power sums `sum r^k` over the roots of `a` with multiplicity, for
    /// `k = 0..count`.
    pub fn power_sums(&self, a: &[u64], count: usize) -> Vec<u64> {
        let f = &self.f;
        let n = a.len() - 1;
        let li = f.inv(a[n]);
        // reversed monic polynomial prod (1 - r t)
        let rev: Vec<u64> = a.iter().rev().map(|&c| f.mul(c, li)).collect();
        let inv = self.inv_series(&rev, count.max(1));
        let drev = self.derivative(&rev);
        let mut q = self.mul(&drev, &inv);
        q.resize(count.max(1), 0);
        let mut out = vec![0u64; count];
        if count > 0 {
            out[0] = n as u64 % self.p();
        }
        for k in 1..count {
            out[k] = f.neg(q[k - 1]);
        }
        out
    }
}

/// Multiplication modulo a fixed monic polynomial, using a precomputed
/// reciprocal for quotient estimation when the modulus is large.
#[derive(Clone, Debug)]
pub struct ModRing<'a> {
    ctx: &'a ZpCtx,
    modulus: Vec<u64>,
    n: usize,
    fast: Option<FastRem>,
}

#[derive(Clone, Debug)]
struct FastRem {
    len: usize,
    inv_rev_hat: Vec<u64>,
    modulus_hat: Vec<u64>,
}

impl<'a> ModRing<'a> {
    /// `modulus` must be monic of degree at least 1.
    pub fn new(ctx: &'a ZpCtx, modulus: &[u64]) -> Self {
        let n = modulus.len() - 1;
        debug_assert_eq!(modulus[n], 1);
        let len = (2 * n).max(2).next_power_of_two();
        let fast = match &ctx.ntt {
            Some(ntt) if n > SCHOOLBOOK_CUTOFF && len <= ntt.max_len() => {
                let rev: Vec<u64> = modulus.iter().rev().copied().collect();
                let inv_rev = ctx.inv_series(&rev, n - 1);
                let mut inv_rev_hat = ntt.padded(&inv_rev, len);
                ntt.forward(&mut inv_rev_hat);
                let mut modulus_hat = ntt.padded(modulus, len);
                ntt.forward(&mut modulus_hat);
                Some(FastRem {
                    len,
                    inv_rev_hat,
                    modulus_hat,
                })
            }
            _ => None,
        };
        ModRing {
            ctx,
            modulus: modulus.to_vec(),
            n,
            fast,
        }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn reduce(&self, a: &[u64]) -> Vec<u64> {
        self.ctx.rem(a, &self.modulus)
    }

    /// Product of two reduced elements, returned as a vector of length `n`.
    pub fn mul(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        let n = self.n;
        let mut out = match &self.fast {
            Some(fr) => self.mul_fast(fr, x, y),
            None => self.ctx.rem(&self.ctx.mul(x, y), &self.modulus),
        };
        out.resize(n, 0);
        out
    }

    fn mul_fast(&self, fr: &FastRem, x: &[u64], y: &[u64]) -> Vec<u64> {
        let ntt = self.ctx.ntt.as_ref().expect("fast path has tables");
        let f = &self.ctx.f;
        let n = self.n;
        let len = fr.len;
        let mut xh = ntt.padded(x, len);
        ntt.forward(&mut xh);
        let mut prod = if core::ptr::eq(x, y) {
            for v in xh.iter_mut() {
                *v = f.mul(*v, *v);
            }
            xh
        } else {
            let mut yh = ntt.padded(y, len);
            ntt.forward(&mut yh);
            for (a, b) in xh.iter_mut().zip(&yh) {
                *a = f.mul(*a, *b);
            }
            xh
        };
        ntt.inverse(&mut prod);
        // prod has degree <= 2n - 2; quotient has degree <= n - 2.
        if 2 * n - 1 <= n || prod[n..2 * n - 1].iter().all(|&c| c == 0) {
            prod.truncate(n);
            return prod;
        }
        let m = n - 1;
        let mut top = vec![0u64; len];
        for i in 0..m {
            top[i] = prod[2 * n - 2 - i];
        }
        ntt.forward(&mut top);
        for (a, b) in top.iter_mut().zip(&fr.inv_rev_hat) {
            *a = f.mul(*a, *b);
        }
        ntt.inverse(&mut top);
        let mut q = vec![0u64; len];
        for i in 0..m {
            q[m - 1 - i] = top[i];
        }
        ntt.forward(&mut q);
        for (a, b) in q.iter_mut().zip(&fr.modulus_hat) {
            *a = f.mul(*a, *b);
        }
        ntt.inverse(&mut q);
        prod.truncate(n);
        for (r, s) in prod.iter_mut().zip(&q) {
            *r = f.sub(*r, *s);
        }
        prod
    }

    pub fn pow(&self, x: &[u64], mut e: u64) -> Vec<u64> {
        let mut result = self.reduce(&[1]);
        result.resize(self.n, 0);
        let mut base = self.reduce(x);
        base.resize(self.n, 0);
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(&result, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        result
    }
}

#[cfg(test)]
mod tests {
    use super::super::field::NttPrimes;
    use super::*;

    fn lcg(seed: &mut u64, p: u64) -> u64 {
        *seed = seed
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        (*seed >> 33) % p
    }

    #[test]
    fn fast_mulmod_matches_plain_remainder() {
        let p = NttPrimes::new(16).next().unwrap();
        let ctx = ZpCtx::new(p, 1 << 12);
        let mut s = 7;
        for n in [3usize, 49, 50, 130, 700] {
            let mut m: Vec<u64> = (0..n).map(|_| lcg(&mut s, p)).collect();
            m.push(1);
            let ring = ModRing::new(&ctx, &m);
            let x: Vec<u64> = (0..n).map(|_| lcg(&mut s, p)).collect();
            let y: Vec<u64> = (0..n).map(|_| lcg(&mut s, p)).collect();
            let mut want = ctx.rem(&ctx.mul(&x, &y), &m);
            want.resize(n, 0);
            assert_eq!(ring.mul(&x, &y), want, "n = {n}");
            let mut want_sq = ctx.rem(&ctx.mul(&x, &x), &m);
            want_sq.resize(n, 0);
            assert_eq!(ring.mul(&x, &x), want_sq);
        }
    }

    #[test]
    fn series_inverse_and_power_sums() {
        let p = NttPrimes::new(16).next().unwrap();
        let ctx = ZpCtx::new(p, 1 << 10);
        let f = ctx.f;
        let mut s = 3;
        let a: Vec<u64> = core::iter::once(1).chain((0..100).map(|_| lcg(&mut s, p))).collect();
        let inv = ctx.inv_series(&a, 150);
        let mut prod = ctx.mul(&a, &inv);
        prod.resize(150, 0);
        assert_eq!(prod[0], 1);
        assert!(prod[1..].iter().all(|&c| c == 0));
        // (z - 2)(z - 3)(z + 1): power sums of {2, 3, -1}
        let roots = [2u64, 3, p - 1];
        let mut poly = vec![1u64];
        for &r in &roots {
            poly = ctx.mul(&poly, &[f.neg(r), 1]);
        }
        let ps = ctx.power_sums(&poly, 6);
        for (k, &v) in ps.iter().enumerate() {
            let want = roots.iter().fold(0, |acc, &r| f.add(acc, f.pow(r, k as u64)));
            assert_eq!(v, want);
        }
    }
}
