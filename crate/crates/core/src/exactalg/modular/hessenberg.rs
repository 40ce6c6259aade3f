//! Characteristic polynomial of a dense matrix over Z/pZ by reduction to
//! upper Hessenberg form. Cubic time; used for small operators and as an
//! independent check on the projection engine.

use alloc::vec;
use alloc::vec::Vec;

use super::field::Zp;
use super::zpoly::ZpCtx;

/// Matrix of multiplication by `b` on `Z_p[z]/(a)` in the monomial basis,
/// stored row-major. `a` must be monic.
pub fn multiplication_matrix(ctx: &ZpCtx, b: &[u64], a: &[u64]) -> Vec<Vec<u64>> {
    let f = &ctx.f;
    let n = a.len() - 1;
    let mut m = vec![vec![0u64; n]; n];
    let mut col = ctx.rem(b, a);
    col.resize(n, 0);
    for j in 0..n {
        for i in 0..n {
            m[i][j] = col[i];
        }
        // col <- z * col mod a
        let top = col[n - 1];
        for i in (1..n).rev() {
            col[i] = f.sub(col[i - 1], f.mul(top, a[i]));
        }
        col[0] = f.neg(f.mul(top, a[0]));
    }
    m
}

/// Characteristic polynomial `det(w I - M)`, ascending and monic.
pub fn charpoly(f: &Zp, mut h: Vec<Vec<u64>>) -> Vec<u64> {
    let n = h.len();
    // Similarity transform to upper Hessenberg form.
    for j in 0..n.saturating_sub(2) {
        let Some(piv) = (j + 1..n).find(|&i| h[i][j] != 0) else {
            continue;
        };
        if piv != j + 1 {
            h.swap(piv, j + 1);
            for row in h.iter_mut() {
                row.swap(piv, j + 1);
            }
        }
        let inv = f.inv(h[j + 1][j]);
        for i in j + 2..n {
            if h[i][j] == 0 {
                continue;
            }
            let u = f.mul(h[i][j], inv);
            let (upper, lower) = h.split_at_mut(i);
            let src = &upper[j + 1];
            let dst = &mut lower[0];
            for k in j..n {
                dst[k] = f.sub(dst[k], f.mul(u, src[k]));
            }
            for row in h.iter_mut() {
                let add = f.mul(u, row[i]);
                row[j + 1] = f.add(row[j + 1], add);
            }
        }
    }
    // p_0 = 1, p_m = (w - h_mm) p_{m-1} - sum_i h_{m-i,m} prod(subdiag) p_{m-i-1}
    let mut polys: Vec<Vec<u64>> = Vec::with_capacity(n + 1);
    polys.push(vec![1]);
    for m in 1..=n {
        let prev = &polys[m - 1];
        let mut cur = vec![0u64; m + 1];
        for (k, &c) in prev.iter().enumerate() {
            cur[k + 1] = f.add(cur[k + 1], c);
            cur[k] = f.sub(cur[k], f.mul(h[m - 1][m - 1], c));
        }
        let mut t = 1u64;
        for i in 1..m {
            t = f.mul(t, h[m - i][m - i - 1]);
            if t == 0 {
                break;
            }
            let coef = f.mul(h[m - i - 1][m - 1], t);
            if coef == 0 {
                continue;
            }
            for (k, &c) in polys[m - i - 1].iter().enumerate() {
                cur[k] = f.sub(cur[k], f.mul(coef, c));
            }
        }
        polys.push(cur);
    }
    polys.pop().expect("n + 1 entries")
}
