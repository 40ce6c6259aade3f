//! Acceptance suite: one PASS/FAIL line per criterion. Run with
//! `cargo test -p multispec --test acceptance`.

use std::time::Instant;

use multispec_core::classify::{
    distinct_critical_values_count, generalized_lattes_form, genus_hf, gl_cubic_family,
    is_presimple, GlWitness,
};
use multispec_core::dynmaps::{chebyshev, conjugacy_test, conjugate, sigma_group, AffineMap, PolyMap};
use multispec_core::exactalg::{int, rat};
use multispec_core::ritt::{build_ritt_pair, good_level, progression_params};
use multispec_core::spectrum::{
    compare_iterates, multipliers_numeric, spectra_equal_up_to, spectrum_level, superattracting_cycle_count,
};
use multispec_core::{Poly, Rational};
use num_complex::Complex64;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Relative tolerance for the numeric oracle.
const NUMERIC_TOL: f64 = 1e-6;
/// Largest `deg(P)^n` at which random Ritt pairs are compared.
const RITT_LEVEL_SIZE: usize = 350;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e2s<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn map(cs: &[i64]) -> PolyMap {
    PolyMap::from_i64s(cs).unwrap()
}

fn small_rat(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.gen_range(-9..=9), rng.gen_range(1..=4))
}

fn nonzero_rat(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let x = small_rat(rng);
        if x != int(0) {
            return x;
        }
    }
}

fn random_monic(rng: &mut ChaCha8Rng, deg: usize) -> PolyMap {
    let mut cs: Vec<i64> = (0..deg).map(|_| rng.gen_range(-5..=5)).collect();
    cs.push(1);
    map(&cs)
}

fn random_map(rng: &mut ChaCha8Rng, deg: usize) -> PolyMap {
    let mut cs: Vec<Rational> = (0..deg).map(|_| small_rat(rng)).collect();
    cs.push(nonzero_rat(rng));
    PolyMap::new(Poly::new(cs)).unwrap()
}

fn random_affine(rng: &mut ChaCha8Rng) -> AffineMap {
    AffineMap::new(nonzero_rat(rng), small_rat(rng)).unwrap()
}

fn same_spectrum(f: &PolyMap, g: &PolyMap, n: usize) -> Result<bool, String> {
    Ok(spectrum_level(f, n).map_err(e2s)? == spectrum_level(g, n).map_err(e2s)?)
}

fn twenty_three_move() -> Outcome {
    let pair = build_ritt_pair(2, 3, &Poly::from_i64s(&[1, 1])).map_err(e2s)?;
    let got: Vec<bool> = (1..=4).map(|n| same_spectrum(&pair.p, &pair.q, n)).collect::<Result<_, _>>()?;
    ensure(got == [true, false, true, false], || format!("equalities at levels 1..4: {got:?}"))?;
    Ok("levels 1,3 equal; 2,4 differ".into())
}

fn ritt_progressions() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let (mut pairs, mut levels) = (0, 0);
    while pairs < 50 {
        let r = rng.gen_range(1..=4usize);
        let k = rng.gen_range(1..=5usize);
        let deg_r = rng.gen_range(1..=2usize);
        let mut cs: Vec<Rational> = vec![nonzero_rat(&mut rng)];
        cs.extend((1..deg_r).map(|_| small_rat(&mut rng)));
        cs.push(nonzero_rat(&mut rng));
        let pair = build_ritt_pair(r, k, &Poly::new(cs)).map_err(e2s)?;
        if !progression_params(r, k).valid {
            continue;
        }
        pairs += 1;
        let deg = pair.p.degree();
        for n in (1..=5usize).filter(|&n| good_level(r, k, n)) {
            if deg.pow(n as u32) > RITT_LEVEL_SIZE {
                break;
            }
            levels += 1;
            ensure(same_spectrum(&pair.p, &pair.q, n)?, || {
                format!("r = {r}, k = {k}, R = {}: level {n} differs", pair.base.render("z"))
            })?;
        }
    }
    Ok(format!("{pairs} pairs, {levels} guaranteed levels compared, level size <= {RITT_LEVEL_SIZE}"))
}

fn progression_recipe() -> Outcome {
    let p = progression_params(2, 3);
    ensure(p.valid && (p.c1, p.d) == (1, 2), || format!("(2,3) gave {p:?}"))?;
    ensure(!progression_params(3, 4).valid, || "(3,4) reported valid".into())?;
    let mut valid = 0;
    for r in 1..=12 {
        for k in 2..=12 {
            let p = progression_params(r, k);
            if p.valid {
                valid += 1;
                ensure(p.c1 < p.d, || format!("r = {r}, k = {k}: {p:?}"))?;
            }
        }
    }
    Ok(format!("c1 < d for all {valid} valid (r, k) with k >= 2"))
}

fn conjugate_pair() -> Outcome {
    let p = map(&[0, -3, 0, 1]);
    let q = map(&[0, 9, -6, 1]);
    let w = conjugacy_test(&p, &q).map_err(e2s)?;
    ensure(w == Some(AffineMap::translation(rat(2, 1))), || format!("witness {w:?}"))?;
    let c = spectra_equal_up_to(&p, &q, 3).map_err(e2s)?;
    ensure(c.equal, || format!("spectra differ at {:?}", c.first_diff))?;
    Ok("witness z + 2, equal to level 3".into())
}

fn presimple_genus() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for m in 4..=6usize {
        let mut found = 0;
        while found < 20 {
            let f = random_monic(&mut rng, m);
            if !is_presimple(&f).map_err(e2s)? {
                continue;
            }
            let g = genus_hf(&f).map_err(e2s)?;
            ensure(g == ((m - 2) * (m - 3) / 2) as i64, || format!("{} has genus {g}", f.poly().render("z")))?;
            found += 1;
        }
    }
    Ok("60 maps".into())
}

fn critical_value_counts() -> Outcome {
    for m in 3..=8usize {
        let power = PolyMap::new(Poly::monomial(rat(1, 1), m)).unwrap();
        let n = distinct_critical_values_count(&power).map_err(e2s)?;
        ensure(n == 1, || format!("z^{m}: {n}"))?;
        let t = chebyshev(m as u32).map_err(e2s)?;
        let n = distinct_critical_values_count(&t).map_err(e2s)?;
        ensure(n == 2, || format!("T_{m}: {n}"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..50 {
        let f = random_map(&mut rng, 2);
        ensure(is_presimple(&f).map_err(e2s)?, || format!("{} not pre-simple", f.poly().render("z")))?;
    }
    Ok("z^m: 1, T_m: 2 for m = 3..8; 50 quadratics pre-simple".into())
}

fn quadratic_symmetries() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..20 {
        let c = nonzero_rat(&mut rng);
        let f = PolyMap::new(Poly::new(vec![c.clone(), int(0), int(1)])).unwrap();
        let groups = sigma_group(&f, 3).map_err(e2s)?;
        ensure(groups.len() == 3, || format!("{} groups", groups.len()))?;
        for (i, g) in groups.iter().enumerate() {
            let mut orders = g.root_orders();
            orders.sort_unstable();
            let linear = g.elements.iter().all(|e| e.shift.is_zero());
            ensure(g.order == 2 && orders == [1, 2] && linear, || format!("c = {c}, iterate {}: {g:?}", i + 1))?;
        }
    }
    Ok("20 values of c, iterates 1..3".into())
}

fn cubic_iterate_coefficients() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..20 {
        let (a, b) = (small_rat(&mut rng), small_rat(&mut rng));
        let f = PolyMap::new(Poly::new(vec![b.clone(), a.clone(), int(0), int(1)])).unwrap();
        for k in 1..=4u32 {
            let fk = f.iterate(k as usize);
            let top = 3usize.pow(k);
            let want = &a * rat(3i64.pow(k - 1), 1);
            let ok = fk.poly().coeff(top - 1) == int(0) && fk.poly().coeff(top - 2) == want;
            ensure(ok, || format!("a = {a}, b = {b}, k = {k}"))?;
        }
    }
    Ok("20 (a, b), k = 1..4".into())
}

fn sac_oracle() -> Outcome {
    let cases = [(map(&[0, 0, 1]), vec![(1, 1)]), (map(&[-1, 0, 1]), vec![(2, 1)]), (map(&[1, 0, 1]), vec![])];
    for (f, want) in cases {
        let rep = superattracting_cycle_count(&f, 10).map_err(e2s)?;
        ensure(rep.per_period == want && rep.certified_complete, || {
            format!("{}: {rep:?}", f.poly().render("z"))
        })?;
    }
    Ok("z^2: 1 fixed, z^2 - 1: one 2-cycle, z^2 + 1: 0 certified".into())
}

fn stable_spectrum() -> Outcome {
    let p = map(&[0, 1, 0, 1]);
    let q = map(&[0, -1, 0, -1]);
    let c = compare_iterates(&p, &q, 2, 2).map_err(e2s)?;
    ensure(c.equal, || format!("second iterates differ at {:?}", c.first_diff))?;
    let first = spectra_equal_up_to(&p, &q, 1).map_err(e2s)?;
    Ok(format!("iterates equal to level 2; S_1 equal: {}", first.equal))
}

fn conjugacy_invariance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..500 {
        let deg = rng.gen_range(2..=4);
        let f = random_map(&mut rng, deg);
        let sigma = random_affine(&mut rng);
        let g = conjugate(&f, &sigma).map_err(e2s)?;
        for n in 1..=3 {
            ensure(same_spectrum(&f, &g, n)?, || format!("{} level {n}", f.poly().render("z")))?;
        }
    }
    Ok("500 (f, sigma), levels 1..3".into())
}

fn elementary(xs: &[Complex64]) -> Vec<Complex64> {
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

fn numeric_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let f = random_map(&mut rng, 3);
        for n in 1..=3 {
            let exact = spectrum_level(&f, n).map_err(e2s)?;
            let mut w = multipliers_numeric(&f, n, NUMERIC_TOL).map_err(e2s)?;
            w.push(Complex64::new(0.0, 0.0));
            let e = elementary(&w);
            ensure(e.len() == exact.sigmas.len(), || "length mismatch".into())?;
            for (num, ex) in e.iter().zip(&exact.sigmas) {
                let x = ex.to_f64().ok_or("sigma out of f64 range")?;
                let rel = (num - Complex64::new(x, 0.0)).norm() / x.abs().max(1.0);
                worst = worst.max(rel);
                ensure(rel <= NUMERIC_TOL, || format!("{} level {n}: rel {rel:e}", f.poly().render("z")))?;
            }
        }
    }
    Ok(format!("100 cubics, levels 1..3, worst relative error {worst:.1e}"))
}

fn gl_cubic_family_witnessed() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let (mut forms, mut exceptional) = (0, 0);
    for _ in 0..100 {
        let (l, b, mu) = (nonzero_rat(&mut rng), nonzero_rat(&mut rng), small_rat(&mut rng));
        let f = gl_cubic_family(&l, &b, &mu).map_err(e2s)?;
        match generalized_lattes_form(&f).map_err(e2s)? {
            Some(GlWitness::Form(_)) => forms += 1,
            Some(GlWitness::Exceptional(_)) => exceptional += 1,
            None => return Err(format!("no witness for ({l}, {b}, {mu})")),
        }
    }
    Ok(format!("{forms} forms, {exceptional} exceptional"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 13] = [
        ("ritt move z^2(z^3+1) / z^2(z+1)^3 at levels 1..4", twenty_three_move),
        ("random Ritt pairs agree at guaranteed levels", ritt_progressions),
        ("progression parameters and c1 < d on r, k <= 12", progression_recipe),
        ("z(z^2-3) ~ z(z-3)^2 by a shift of 2", conjugate_pair),
        ("pre-simple genus law, degrees 4..6", presimple_genus),
        ("critical value counts of z^m, T_m and quadratics", critical_value_counts),
        ("symmetries of z^2 + c are {z, -z}", quadratic_symmetries),
        ("iterate coefficients of z^3 + a z + b", cubic_iterate_coefficients),
        ("superattracting cycle counts", sac_oracle),
        ("stable spectrum of z^3 + z and -z^3 - z", stable_spectrum),
        ("conjugacy invariance of spectra", conjugacy_invariance),
        ("numeric multipliers agree with exact spectra", numeric_oracle),
        ("cubic family is generalized Lattès", gl_cubic_family_witnessed),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
