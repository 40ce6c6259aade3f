mod common;

use common::{affine, map_of_degree, nonzero_rat, small_rat};
use multispec_core::classify::{
    distinct_critical_values_count, generalized_lattes_form, genus_hf, gl_cubic_family,
    is_exceptional, is_presimple, ramification_portrait, Exceptional, GlWitness,
};
use multispec_core::dynmaps::{chebyshev, conjugate, PolyMap};
use multispec_core::exactalg::{resultant, resultant_in_t};
use multispec_core::{Poly, Rational};
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_monic(rng: &mut ChaCha8Rng, deg: usize) -> PolyMap {
    let mut cs: Vec<i64> = (0..deg).map(|_| rng.gen_range(-5..=5)).collect();
    cs.push(1);
    PolyMap::from_i64s(&cs).unwrap()
}

/// `Res_t(R, R')` for `R(t) = Res_z(F', F - t)`.
fn critical_discriminant(f: &PolyMap) -> Rational {
    let r = resultant_in_t(&f.poly().derivative(), f.poly()).unwrap();
    resultant(&r, &r.derivative()).unwrap()
}

#[test]
fn presimple_is_generic_and_detected_by_the_discriminant() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut degenerate = 0;
    for i in 0..500 {
        let f = random_monic(&mut rng, 3 + i % 4);
        let pre = is_presimple(&f).unwrap();
        assert_eq!(pre, !critical_discriminant(&f).is_zero(), "{}", f.poly().render("z"));
        if !pre {
            degenerate += 1;
            assert!(distinct_critical_values_count(&f).unwrap() < f.degree() - 1);
        }
    }
    assert!(degenerate < 50, "{degenerate} non-pre-simple maps out of 500");
}

#[test]
fn genus_of_presimple_maps() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for deg in 4..=7usize {
        let mut found = 0;
        while found < 6 {
            let f = random_monic(&mut rng, deg);
            if !is_presimple(&f).unwrap() {
                continue;
            }
            let want = ((deg - 2) * (deg - 3) / 2) as i64;
            assert_eq!(genus_hf(&f).unwrap(), want, "{}", f.poly().render("z"));
            found += 1;
        }
    }
}

fn normal_form(kind: u8, d: u32) -> (PolyMap, Exceptional) {
    match kind {
        0 => (PolyMap::new(Poly::monomial(Rational::one(), d as usize)).unwrap(), Exceptional::Power),
        1 => (chebyshev(d).unwrap(), Exceptional::ChebyshevPlus),
        _ => {
            let minus = PolyMap::new(-chebyshev(d).unwrap().poly()).unwrap();
            // -T_d is conjugate to T_d by z -> -z when d is even
            let tag = if d % 2 == 0 { Exceptional::ChebyshevPlus } else { Exceptional::ChebyshevMinus };
            (minus, tag)
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn exceptional_tags_survive_conjugation(kind in 0u8..3, d in 2u32..=6, sigma in affine()) {
        let (f, tag) = normal_form(kind, d);
        let g = conjugate(&f, &sigma).unwrap();
        prop_assert_eq!(is_exceptional(&g).unwrap(), tag);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn cubic_family_is_generalized_lattes(lambda in nonzero_rat(), b in nonzero_rat(), mu in small_rat()) {
        let f = gl_cubic_family(&lambda, &b, &mu).unwrap();
        match generalized_lattes_form(&f).unwrap() {
            Some(GlWitness::Form(form)) => {
                prop_assert!(form.n >= 2);
                prop_assert_eq!(form.r + form.n * form.rest_degree, 3);
            }
            Some(GlWitness::Exceptional(tag)) => prop_assert!(tag.is_exceptional()),
            None => prop_assert!(false, "no form for {}", f.poly().render("z")),
        }
    }

    #[test]
    fn portraits_account_for_all_ramification(
        f in map_of_degree(2, 6),
        h in map_of_degree(2, 4),
    ) {
        for maps in [vec![f.clone()], vec![f.clone(), h.clone()]] {
            let p = ramification_portrait(&maps).unwrap();
            for (i, m) in maps.iter().enumerate() {
                let total: usize = p
                    .classes
                    .iter()
                    .map(|c| c.size() * c.profiles[i].iter().map(|a| a - 1).sum::<usize>())
                    .sum();
                prop_assert_eq!(total, m.degree() - 1);
                for c in &p.classes {
                    prop_assert_eq!(c.profiles[i].iter().sum::<usize>(), m.degree());
                }
            }
        }
    }
}

#[test]
fn generic_cubic_is_not_generalized_lattes() {
    let f = PolyMap::from_i64s(&[1, 2, 0, 1]).unwrap();
    assert_eq!(generalized_lattes_form(&f).unwrap(), None);
}
