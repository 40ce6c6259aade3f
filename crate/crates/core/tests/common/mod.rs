#![allow(dead_code)]

use multispec_core::dynmaps::{AffineMap, PolyMap};
use multispec_core::exactalg::rat;
use multispec_core::{Poly, Rational};
use num_complex::Complex64;
use num_traits::ToPrimitive;
use proptest::prelude::*;

pub fn small_rat() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

pub fn nonzero_rat() -> impl Strategy<Value = Rational> {
    (prop_oneof![-9i64..=-1, 1i64..=9], 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

/// Polynomial of exact degree `deg` with small rational coefficients.
pub fn poly_of_degree(deg: usize) -> impl Strategy<Value = Poly> {
    (proptest::collection::vec(small_rat(), deg), nonzero_rat()).prop_map(|(mut cs, lc)| {
        cs.push(lc);
        Poly::new(cs)
    })
}

pub fn poly_up_to(max_deg: usize) -> impl Strategy<Value = Poly> {
    (0..=max_deg).prop_flat_map(poly_of_degree)
}

pub fn map_of_degree(lo: usize, hi: usize) -> impl Strategy<Value = PolyMap> {
    (lo..=hi).prop_flat_map(poly_of_degree).prop_map(|p| PolyMap::new(p).unwrap())
}

pub fn affine() -> impl Strategy<Value = AffineMap> {
    (nonzero_rat(), small_rat()).prop_map(|(a, b)| AffineMap::new(a, b).unwrap())
}

pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap()
}

/// Elementary symmetric functions `e_1..e_n` of complex values.
pub fn elementary(xs: &[Complex64]) -> Vec<Complex64> {
    let mut e = vec![Complex64::new(0.0, 0.0); xs.len() + 1];
    e[0] = Complex64::new(1.0, 0.0);
    for (i, x) in xs.iter().enumerate() {
        for k in (1..=i + 1).rev() {
            let t = e[k - 1] * x;
            e[k] += t;
        }
    }
    e.remove(0);
    e
}
