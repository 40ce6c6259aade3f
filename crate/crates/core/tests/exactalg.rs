mod common;

use common::{poly_of_degree, poly_up_to, small_rat, to_f64};
use multispec_core::exactalg::modular::{CrtOptions, Engine};
use multispec_core::exactalg::{
    charpoly_mod, charpoly_mod_with, int, resultant, squarefree, CharpolyOptions,
};
use multispec_core::Poly;
use num_complex::Complex64;
use proptest::prelude::*;

/// Durand–Kerner iteration with Newton polishing, kept separate from the
/// library's root finder.
fn roots(p: &Poly) -> Vec<Complex64> {
    let lc = to_f64(p.leading().unwrap());
    let cs: Vec<Complex64> = p.coeffs().iter().map(|c| Complex64::new(to_f64(c) / lc, 0.0)).collect();
    let n = cs.len() - 1;
    let eval = |x: Complex64| cs.iter().rev().fold(Complex64::new(0.0, 0.0), |a, c| a * x + c);
    let deval = |x: Complex64| {
        cs.iter()
            .enumerate()
            .skip(1)
            .rev()
            .fold(Complex64::new(0.0, 0.0), |a, (i, c)| a * x + c * i as f64)
    };
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..n).map(|i| seed.powu(i as u32)).collect();
    for _ in 0..2000 {
        let mut delta = 0.0f64;
        for i in 0..n {
            let mut den = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if i != j {
                    den *= z[i] - z[j];
                }
            }
            let step = eval(z[i]) / den;
            z[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 {
            break;
        }
    }
    for zi in &mut z {
        for _ in 0..3 {
            let d = deval(*zi);
            if d.norm() > 0.0 {
                *zi -= eval(*zi) / d;
            }
        }
    }
    z
}

fn numeric_charpoly(b: &Poly, a: &Poly) -> Vec<Complex64> {
    let vals: Vec<Complex64> = roots(a)
        .into_iter()
        .map(|r| {
            b.coeffs()
                .iter()
                .rev()
                .fold(Complex64::new(0.0, 0.0), |acc, c| acc * r + to_f64(c))
        })
        .collect();
    // prod (w - v_i), ascending
    let mut out = vec![Complex64::new(1.0, 0.0)];
    for v in vals {
        let mut next = vec![Complex64::new(0.0, 0.0); out.len() + 1];
        for (i, c) in out.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * v;
        }
        out = next;
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn composition_is_associative(f in poly_up_to(3), g in poly_up_to(3), h in poly_up_to(3)) {
        prop_assert_eq!(f.compose(&g).compose(&h), f.compose(&g.compose(&h)));
    }

    #[test]
    fn iterates_add(f in poly_up_to(3), a in 0usize..3, b in 0usize..3) {
        prop_assert_eq!(f.iterate(a + b), f.iterate(a).compose(&f.iterate(b)));
    }

    #[test]
    fn resultant_detects_common_factors(
        a in poly_up_to(4),
        b in poly_up_to(4),
        c in poly_up_to(2),
    ) {
        prop_assume!(!a.is_zero() && !b.is_zero() && !c.is_zero());
        let (ac, bc) = (&a * &c, &b * &c);
        let res = resultant(&ac, &bc).unwrap();
        let common = ac.gcd(&bc).deg() >= 1;
        prop_assert_eq!(res == int(0), common);
        let res = resultant(&a, &b).unwrap();
        prop_assert_eq!(res == int(0), a.gcd(&b).deg() >= 1);
    }

    #[test]
    fn resultant_is_multiplicative(a in poly_up_to(3), b in poly_up_to(3), c in poly_up_to(3)) {
        prop_assume!(!a.is_zero() && !b.is_zero() && !c.is_zero());
        let lhs = resultant(&(&a * &b), &c).unwrap();
        prop_assert_eq!(lhs, resultant(&a, &c).unwrap() * resultant(&b, &c).unwrap());
    }

    #[test]
    fn charpoly_matches_numeric_oracle(n in 1usize..=12, seed in any::<u64>()) {
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(seed);
        let mut coeffs = |len: usize| -> Vec<i64> {
            (0..len).map(|_| rand::Rng::gen_range(&mut rng, -5i64..=5)).collect()
        };
        let mut ac = coeffs(n);
        ac.push(1 + (seed % 3) as i64);
        let a = Poly::from_i64s(&ac);
        let b = Poly::from_i64s(&coeffs(n));
        let exact = charpoly_mod(&b, &a).unwrap();
        let numeric = numeric_charpoly(&b, &a);
        let scale = exact.coeffs().iter().map(|c| to_f64(c).abs()).fold(1.0, f64::max);
        for (i, c) in exact.coeffs().iter().enumerate() {
            let err = (numeric[i] - Complex64::new(to_f64(c), 0.0)).norm() / scale;
            prop_assert!(err < 1e-9, "coefficient {} off by {}", i, err);
        }
    }

    #[test]
    fn squarefree_reassembles(
        factors in proptest::collection::vec((poly_up_to(2), 1u32..=3), 1..4),
        unit in small_rat(),
    ) {
        prop_assume!(unit != int(0));
        let mut a = Poly::constant(unit);
        for (f, e) in &factors {
            if !f.is_zero() {
                a = &a * &f.pow(*e);
            }
        }
        let dec = squarefree(&a).unwrap();
        prop_assert_eq!(dec.reassemble(), a.clone());
        for w in dec.factors.windows(2) {
            prop_assert!(w[0].multiplicity < w[1].multiplicity);
            prop_assert!(w[0].factor.gcd(&w[1].factor).is_constant());
        }
    }

    #[test]
    fn engines_and_prime_sets_agree(b in poly_of_degree(5), a in poly_of_degree(8)) {
        let base = charpoly_mod(&b, &a).unwrap();
        for engine in [Engine::Hessenberg, Engine::Projection] {
            for offset in [0, 400] {
                let opts = CharpolyOptions {
                    engine,
                    crt: CrtOptions { prime_offset: offset, ..CrtOptions::default() },
                };
                prop_assert_eq!(charpoly_mod_with(&b, &a, &opts).unwrap(), base.clone());
            }
        }
    }
}

#[test]
fn squarefree_on_many_planted_inputs() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    for _ in 0..1000 {
        let mut a = Poly::constant(int(rng.gen_range(1..=6)));
        for _ in 0..rng.gen_range(1..=3) {
            let f = Poly::from_i64s(&[rng.gen_range(-4..=4), rng.gen_range(-3..=3), 1]);
            a = &a * &f.pow(rng.gen_range(1..=3));
        }
        assert_eq!(squarefree(&a).unwrap().reassemble(), a);
    }
}

#[test]
fn large_gcd_with_planted_factor() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    let mut random = |deg: usize| {
        let mut cs: Vec<i64> = (0..deg).map(|_| rng.gen_range(-50..=50)).collect();
        cs.push(rng.gen_range(1..=7));
        Poly::from_i64s(&cs)
    };
    let g = random(40);
    let a = &g * &random(60);
    let b = &g * &random(55);
    let found = a.gcd(&b);
    assert_eq!(found, g.monic());
}
