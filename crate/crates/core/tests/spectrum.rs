mod common;

use common::{affine, elementary, map_of_degree};
use multispec_core::dynmaps::{conjugate, PolyMap};
use multispec_core::exactalg::int;
use multispec_core::spectrum::{
    multiplier_charpoly, multipliers_numeric, spectra_equal_up_to, spectrum_level,
    superattracting_cycle_count, SpectrumLevel,
};
use multispec_core::Error;
use num_complex::Complex64;
use num_traits::ToPrimitive;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn spectra_are_conjugacy_invariant(f in map_of_degree(2, 4), sigma in affine()) {
        let g = conjugate(&f, &sigma).unwrap();
        let top = if f.degree() == 4 { 2 } else { 3 };
        for n in 1..=top {
            prop_assert_eq!(spectrum_level(&f, n).unwrap(), spectrum_level(&g, n).unwrap());
        }
    }

    #[test]
    fn numeric_multipliers_match_exact_sigmas(f in map_of_degree(2, 3), n in 1usize..=3) {
        let exact = spectrum_level(&f, n).unwrap();
        let mut w = multipliers_numeric(&f, n, 1e-6).unwrap();
        w.push(Complex64::new(0.0, 0.0));
        let e = elementary(&w);
        prop_assert_eq!(e.len(), exact.sigmas.len());
        for (num, ex) in e.iter().zip(&exact.sigmas) {
            let x = ex.to_f64().unwrap();
            prop_assert!((num - Complex64::new(x, 0.0)).norm() <= 1e-6 * x.abs().max(1.0));
        }
    }

    #[test]
    fn levels_are_normalized(f in map_of_degree(2, 3), n in 1usize..=3) {
        let mp = multiplier_charpoly(&f, n).unwrap();
        let d = f.degree().pow(n as u32);
        prop_assert_eq!(mp.charpoly.deg(), d);
        prop_assert!(mp.charpoly.is_monic());
        let lvl = SpectrumLevel::from(&mp);
        prop_assert_eq!(lvl.sigmas.len(), d + 1);
        prop_assert_eq!(lvl.sigmas.last().unwrap().clone(), int(0));
        prop_assert_eq!(lvl.to_multiplier_poly(), mp);
    }

    #[test]
    fn superattracting_cycles_are_bounded(f in map_of_degree(2, 4)) {
        let rep = superattracting_cycle_count(&f, 4).unwrap();
        prop_assert!(rep.count < f.degree());
        prop_assert_eq!(rep.count, rep.per_period.iter().map(|(_, c)| c).sum::<usize>());
    }

    #[test]
    fn equal_spectra_is_an_equivalence(
        f in map_of_degree(2, 2),
        s1 in affine(),
        s2 in affine(),
        h in map_of_degree(2, 2),
    ) {
        let g = conjugate(&f, &s1).unwrap();
        let k = conjugate(&g, &s2).unwrap();
        let eq = |a: &PolyMap, b: &PolyMap| spectra_equal_up_to(a, b, 2).unwrap().equal;
        prop_assert!(eq(&f, &f));
        prop_assert!(eq(&f, &g) && eq(&g, &f));
        prop_assert!(eq(&g, &k) && eq(&f, &k));
        prop_assert_eq!(eq(&f, &h), eq(&h, &f));
        if eq(&f, &h) {
            prop_assert!(eq(&g, &h));
        }
    }
}

#[test]
fn level_cap_is_enforced() {
    let f = PolyMap::from_i64s(&[1, 0, 0, 1]).unwrap();
    match multiplier_charpoly(&f, 7) {
        Err(Error::LevelTooLarge { size, cap }) => assert_eq!((size, cap), (2187, 2000)),
        other => panic!("expected a cap error, got {other:?}"),
    }
}

#[test]
fn spectrum_examples() {
    let sq = PolyMap::from_i64s(&[0, 0, 1]).unwrap();
    let lvl = spectrum_level(&sq, 2).unwrap();
    assert_eq!(lvl.sigmas, [int(12), int(48), int(64), int(0), int(0)]);
    let t2 = PolyMap::from_i64s(&[-2, 0, 1]).unwrap();
    let c = spectra_equal_up_to(&sq, &t2, 1).unwrap();
    assert_eq!((c.equal, c.first_diff), (false, Some(1)));
    assert_eq!(spectrum_level(&t2, 1).unwrap().sigmas, [int(2), int(-8), int(0)]);
}
