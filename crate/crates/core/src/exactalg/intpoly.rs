//! Dense polynomials over Z stored as `Vec<BigInt>` in ascending order.
//!
//! These are the working representation for products, compositions and
//! remainder sequences; rational polynomials are mapped here after clearing
//! denominators.

use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

const KARATSUBA_CUTOFF: usize = 24;

pub(crate) fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

pub(crate) fn degree(v: &[BigInt]) -> Option<usize> {
    v.iter().rposition(|c| !c.is_zero())
}

pub(crate) fn add_into(acc: &mut Vec<BigInt>, b: &[BigInt], offset: usize) {
    if acc.len() < b.len() + offset {
        acc.resize(b.len() + offset, BigInt::zero());
    }
    for (i, c) in b.iter().enumerate() {
        if !c.is_zero() {
            acc[i + offset] += c;
        }
    }
}

fn sub_into(acc: &mut Vec<BigInt>, b: &[BigInt]) {
    if acc.len() < b.len() {
        acc.resize(b.len(), BigInt::zero());
    }
    for (i, c) in b.iter().enumerate() {
        if !c.is_zero() {
            acc[i] -= c;
        }
    }
}

fn schoolbook(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn karatsuba(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.len().min(b.len()) <= KARATSUBA_CUTOFF {
        return schoolbook(a, b);
    }
    let half = a.len().max(b.len()) / 2;
    if a.len() <= half || b.len() <= half {
        // Unbalanced: split the long operand into chunks of the short length.
        let (short, long) = if a.len() <= b.len() { (a, b) } else { (b, a) };
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (ci, chunk) in long.chunks(short.len()).enumerate() {
            let part = karatsuba(short, chunk);
            add_into(&mut out, &part, ci * short.len());
        }
        return out;
    }
    let (a0, a1) = a.split_at(half);
    let (b0, b1) = b.split_at(half);
    let z0 = karatsuba(a0, b0);
    let z2 = karatsuba(a1, b1);
    let mut sa = a0.to_vec();
    add_into(&mut sa, a1, 0);
    let mut sb = b0.to_vec();
    add_into(&mut sb, b1, 0);
    let mut z1 = karatsuba(&sa, &sb);
    sub_into(&mut z1, &z0);
    sub_into(&mut z1, &z2);
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    add_into(&mut out, &z0, 0);
    add_into(&mut out, &z1, half);
    add_into(&mut out, &z2, 2 * half);
    out.truncate(a.len() + b.len() - 1);
    out
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = karatsuba(a, b);
    trim(&mut out);
    out
}

pub(crate) fn content(a: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        if !c.is_zero() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
    }
    g
}

/// Primitive part with positive leading coefficient.
pub(crate) fn primitive(a: &[BigInt]) -> Vec<BigInt> {
    let mut v = a.to_vec();
    trim(&mut v);
    if v.is_empty() {
        return v;
    }
    let mut g = content(&v);
    if v.last().is_some_and(Signed::is_negative) {
        g = -g;
    }
    if !g.is_one() {
        for c in v.iter_mut() {
            *c = &*c / &g;
        }
    }
    v
}

/// Pseudo-remainder of `a` by `b`: lc(b)^(deg a - deg b + 1) a mod b.
pub(crate) fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = degree(b).expect("pseudo_rem by zero");
    let mut r = a.to_vec();
    trim(&mut r);
    let Some(da) = degree(&r) else {
        return r;
    };
    if da < db {
        return r;
    }
    let lb = &b[db];
    let mut steps = da - db + 1;
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        let shift = dr - db;
        for (i, c) in b.iter().enumerate() {
            if !c.is_zero() {
                r[i + shift] -= &lr * c;
            }
        }
        r.truncate(dr);
        trim(&mut r);
        steps -= 1;
    }
    if steps > 0 {
        let f = num_traits::pow(lb.clone(), steps);
        for c in r.iter_mut() {
            *c *= &f;
        }
    }
    r
}

/// Primitive gcd via the primitive remainder sequence.
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut x = primitive(a);
    let mut y = primitive(b);
    if x.is_empty() {
        return y;
    }
    if y.is_empty() {
        return x;
    }
    if x.len() < y.len() {
        core::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = primitive(&pseudo_rem(&x, &y));
        x = y;
        y = r;
    }
    x
}

/// Exact division in Z[z]; returns `None` when `b` does not divide `a`.
pub(crate) fn exact_div(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let db = degree(b).expect("exact_div by zero");
    let mut r = a.to_vec();
    trim(&mut r);
    let Some(da) = degree(&r) else {
        return Some(Vec::new());
    };
    if da < db {
        return None;
    }
    let lb = &b[db];
    let mut q = vec![BigInt::zero(); da - db + 1];
    for i in (0..=da - db).rev() {
        let c = &r[i + db];
        if c.is_zero() {
            continue;
        }
        let (qi, rem) = c.div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        for (j, bc) in b.iter().enumerate() {
            if !bc.is_zero() {
                r[i + j] -= &qi * bc;
            }
        }
        q[i] = qi;
    }
    if r.iter().all(Zero::is_zero) {
        trim(&mut q);
        Some(q)
    } else {
        None
    }
}

/// `f(g)` scaled so that everything stays integral:
/// returns `sum_i f_i g^i dg^(n-i)` where `n = deg f`.
pub(crate) fn compose_scaled(f: &[BigInt], g: &[BigInt], dg: &BigInt) -> Vec<BigInt> {
    let Some(n) = degree(f) else {
        return Vec::new();
    };
    let mut acc = vec![f[n].clone()];
    let mut dpow = BigInt::one();
    for i in (0..n).rev() {
        dpow *= dg;
        acc = mul(&acc, g);
        if !f[i].is_zero() {
            let term = &f[i] * &dpow;
            if acc.is_empty() {
                acc.push(term);
            } else {
                acc[0] += term;
            }
        }
    }
    trim(&mut acc);
    acc
}
