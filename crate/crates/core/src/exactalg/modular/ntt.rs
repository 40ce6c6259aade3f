//! Radix-2 number-theoretic transform over a prime field.

use alloc::vec;
use alloc::vec::Vec;

use super::field::Zp;

/// Twiddle tables for transforms of every power-of-two length up to
/// `2^max_log`.
#[derive(Clone, Debug)]
pub struct Ntt {
    f: Zp,
    max_log: u32,
    // For each stage half-length h = 2^s, entries [h, 2h) hold w_{2h}^i.
    fwd: Vec<u64>,
    inv: Vec<u64>,
}

impl Ntt {
    /// `None` when the field has no root of unity of order `2^max_log`.
    pub fn new(f: Zp, max_log: u32) -> Option<Self> {
        let p = f.modulus();
        if max_log >= 63 || (p - 1) % (1u64 << max_log) != 0 {
            return None;
        }
        let n = 1usize << max_log;
        let g = f.primitive_root();
        let w = f.pow(g, (p - 1) >> max_log);
        let wi = f.inv(w);
        let mut fwd = vec![0u64; n.max(2)];
        let mut inv = vec![0u64; n.max(2)];
        let mut h = 1usize;
        while h < n {
            // primitive (2h)-th root
            let step = (n / (2 * h)) as u64;
            let (r, ri) = (f.pow(w, step), f.pow(wi, step));
            let (mut x, mut xi) = (1u64, 1u64);
            for i in 0..h {
                fwd[h + i] = x;
                inv[h + i] = xi;
                x = f.mul(x, r);
                xi = f.mul(xi, ri);
            }
            h *= 2;
        }
        Some(Ntt {
            f,
            max_log,
            fwd,
            inv,
        })
    }

    pub fn field(&self) -> &Zp {
        &self.f
    }

    pub fn max_len(&self) -> usize {
        1 << self.max_log
    }

    fn transform(&self, a: &mut [u64], table: &[u64]) {
        let n = a.len();
        debug_assert!(n.is_power_of_two() && n <= self.max_len());
        let mut j = 0usize;
        for i in 1..n {
            let mut bit = n >> 1;
            while j & bit != 0 {
                j ^= bit;
                bit >>= 1;
            }
            j |= bit;
            if i < j {
                a.swap(i, j);
            }
        }
        let f = &self.f;
        let mut h = 1usize;
        while h < n {
            let tw = &table[h..2 * h];
            for block in a.chunks_exact_mut(2 * h) {
                let (lo, hi) = block.split_at_mut(h);
                for ((x, y), &w) in lo.iter_mut().zip(hi.iter_mut()).zip(tw) {
                    let t = f.mul(*y, w);
                    let u = *x;
                    *x = f.add(u, t);
                    *y = f.sub(u, t);
                }
            }
            h *= 2;
        }
    }

    pub fn forward(&self, a: &mut [u64]) {
        self.transform(a, &self.fwd);
    }

    /// Inverse transform including the `1/n` scaling.
    pub fn inverse(&self, a: &mut [u64]) {
        self.transform(a, &self.inv);
        let n_inv = self.f.inv(a.len() as u64 % self.f.modulus());
        for x in a.iter_mut() {
            *x = self.f.mul(*x, n_inv);
        }
    }

    /// Cyclic convolution of length `len` (a power of two). Inputs longer
    /// than `len` wrap around.
    pub fn cyclic(&self, a: &[u64], b: &[u64], len: usize) -> Vec<u64> {
        let mut fa = self.padded(a, len);
        let mut fb = self.padded(b, len);
        self.forward(&mut fa);
        self.forward(&mut fb);
        for (x, y) in fa.iter_mut().zip(&fb) {
            *x = self.f.mul(*x, *y);
        }
        self.inverse(&mut fa);
        fa
    }

    pub(crate) fn padded(&self, a: &[u64], len: usize) -> Vec<u64> {
        let mut v = vec![0u64; len];
        for (i, &x) in a.iter().enumerate() {
            let k = i % len;
            v[k] = self.f.add(v[k], x);
        }
        v
    }
}
