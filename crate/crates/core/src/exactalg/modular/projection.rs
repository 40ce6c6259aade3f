//! Characteristic polynomial of multiplication by `b` on `Z_p[z]/(a)` from
//! the traces `Tr(b^k)`, `k = 1..n`.
//!
//! With `P_j = Tr(z^j)` (power sums of the roots of `a`) and the Hankel
//! matrix `H_{ij} = P_{i+j}`, we have `Tr(u v) = u^T H v` for reduced `u, v`.
//! Writing `k = j + m t` with baby steps `x_j = b^j` and giant steps
//! `y_t = (b^m)^t` gives every trace from `O(sqrt n)` modular products, one
//! Hankel product per giant step and `n^2` multiply-adds.

use alloc::vec;
#[cfg(not(feature = "std"))]
use num_traits::Float;
use alloc::vec::Vec;

use super::zpoly::{ModRing, ZpCtx};

/// Monic characteristic polynomial, ascending. `a` must be monic and the
/// field characteristic must exceed `deg a`.
pub fn charpoly(ctx: &ZpCtx, b: &[u64], a: &[u64]) -> Vec<u64> {
    let n = a.len() - 1;
    debug_assert!((n as u64) < ctx.p());
    let ring = ModRing::new(ctx, a);
    let power = ctx.power_sums(a, 2 * n - 1);
    let traces = traces(ctx, &ring, &power, b, n);
    newton(ctx, &traces, n)
}

/// `Tr(b^k)` for `k = 0..=count`.
fn traces(ctx: &ZpCtx, ring: &ModRing<'_>, power: &[u64], b: &[u64], count: usize) -> Vec<u64> {
    let f = &ctx.f;
    let n = ring.degree();
    let total = count + 1;
    let m = ((total as f64).sqrt().ceil() as usize).max(1);
    let giant = total.div_ceil(m);

    let bb = {
        let mut v = ring.reduce(b);
        v.resize(n, 0);
        v
    };
    let mut baby: Vec<Vec<u64>> = Vec::with_capacity(m);
    let mut one = ring.reduce(&[1]);
    one.resize(n, 0);
    baby.push(one.clone());
    for j in 1..m {
        let next = ring.mul(&baby[j - 1], &bb);
        baby.push(next);
    }
    let g = ring.mul(&baby[m - 1], &bb);

    let hankel = HankelProduct::new(ctx, power, n);
    let mut out = vec![0u64; total];
    let mut y = one;
    for t in 0..giant {
        let w = hankel.apply(&y);
        for (j, x) in baby.iter().enumerate() {
            let k = j + m * t;
            if k >= total {
                break;
            }
            out[k] = f.dot(x, &w);
        }
        if t + 1 < giant {
            y = ring.mul(&y, &g);
        }
    }
    out
}

/// `v -> H v` for the Hankel matrix built from `power[0..2n-1]`.
struct HankelProduct<'a> {
    ctx: &'a ZpCtx,
    n: usize,
    power: Vec<u64>,
    hat: Option<(usize, Vec<u64>)>,
}

impl<'a> HankelProduct<'a> {
    fn new(ctx: &'a ZpCtx, power: &[u64], n: usize) -> Self {
        let len = (2 * n).max(2).next_power_of_two();
        let hat = match &ctx.ntt {
            Some(ntt) if n > 32 && len <= ntt.max_len() => {
                let mut h = ntt.padded(power, len);
                ntt.forward(&mut h);
                Some((len, h))
            }
            _ => None,
        };
        HankelProduct {
            ctx,
            n,
            power: power.to_vec(),
            hat,
        }
    }

    fn apply(&self, y: &[u64]) -> Vec<u64> {
        let n = self.n;
        let f = &self.ctx.f;
        match (&self.hat, &self.ctx.ntt) {
            (Some((len, ph)), Some(ntt)) => {
                // (H y)_a is entry a + n - 1 of power * reverse(y); a cyclic
                // length of at least 2n - 1 keeps those entries clean.
                let mut yr = vec![0u64; *len];
                for (i, &c) in y.iter().enumerate() {
                    yr[n - 1 - i] = c;
                }
                ntt.forward(&mut yr);
                for (a, b) in yr.iter_mut().zip(ph) {
                    *a = f.mul(*a, *b);
                }
                ntt.inverse(&mut yr);
                yr[n - 1..2 * n - 1].to_vec()
            }
            _ => (0..n).map(|a| f.dot(&self.power[a..a + n], y)).collect(),
        }
    }
}

/// Monic polynomial of degree `n` whose roots have power sums `s_1..s_n`.
fn newton(ctx: &ZpCtx, s: &[u64], n: usize) -> Vec<u64> {
    let f = &ctx.f;
    // c[n - k] for k = 0..n, stored as e[k] = c[n - k]
    let mut e = vec![0u64; n + 1];
    e[0] = 1;
    // k e_k = -sum_{i=1}^{k} s_i e_{k-i}
    let rev_s: Vec<u64> = s[1..=n].iter().rev().copied().collect();
    for k in 1..=n {
        let acc = f.dot(&rev_s[n - k..], &e[..k]);
        e[k] = f.mul(f.neg(acc), f.inv(k as u64));
    }
    e.reverse();
    e
}
