//! Worked examples checked end to end by `multispec repro`.

use multispec_core::classify::{genus_hf, is_exceptional, is_presimple, Exceptional};
use multispec_core::dynmaps::{chebyshev, conjugacy_test, sigma_group, AffineMap, PolyMap};
use multispec_core::exactalg::rat;
use multispec_core::ritt::{build_ritt_pair, progression_params};
use multispec_core::spectrum::{
    compare_iterates_with, spectra_equal_up_to_with, spectrum_level_with, superattracting_cycle_count,
    SpectrumOptions,
};
use multispec_core::{Poly, Result};
use serde_json::{json, Value};

use crate::report::Status;
use crate::CliError;

struct Check {
    name: &'static str,
    outcome: Result<bool>,
}

fn poly(cs: &[i64]) -> Poly {
    Poly::from_i64s(cs)
}

fn map(cs: &[i64]) -> Result<PolyMap> {
    PolyMap::new(poly(cs))
}

fn twenty_three_move(opts: &SpectrumOptions) -> Result<bool> {
    let pair = build_ritt_pair(2, 3, &poly(&[1, 1]))?;
    let s = |n| -> Result<bool> {
        Ok(spectrum_level_with(&pair.p, n, opts)? == spectrum_level_with(&pair.q, n, opts)?)
    };
    Ok(s(1)? && !s(2)? && s(3)?)
}

fn conjugate_ritt_pair(opts: &SpectrumOptions) -> Result<bool> {
    let p = map(&[0, -3, 0, 1])?;
    let q = map(&[0, 9, -6, 1])?;
    let shift_two = conjugacy_test(&p, &q)? == Some(AffineMap::translation(rat(2, 1)));
    Ok(shift_two && spectra_equal_up_to_with(&p, &q, 3, opts)?.equal)
}

fn chebyshev_commute() -> Result<bool> {
    for p in 1..=5 {
        for q in 1..=5 {
            let (tp, tq) = (chebyshev(p)?, chebyshev(q)?);
            if tp.compose(&tq) != tq.compose(&tp) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn chebyshev_differential() -> Result<bool> {
    let four_minus = |p: &Poly| &poly(&[4]) - &(p * p);
    for m in 2..=7u32 {
        let t = chebyshev(m)?.into_poly();
        let d = t.derivative();
        let lhs = &four_minus(&Poly::z()) * &(&d * &d);
        let rhs = four_minus(&t).scale(&rat(i64::from(m * m), 1));
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

fn sigma_quadratic() -> Result<bool> {
    for c in [rat(1, 1), rat(-3, 4), rat(2, 5)] {
        let f = PolyMap::new(Poly::new(vec![c, rat(0, 1), rat(1, 1)]))?;
        for group in sigma_group(&f, 2)? {
            let mut orders = group.root_orders();
            orders.sort_unstable();
            let shifts_zero = group.elements.iter().all(|e| e.shift.is_zero());
            if group.order != 2 || orders != [1, 2] || !shifts_zero {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// First pre-simple map among `z^m + a z^2 + z`, `a = 1, 2, ...`.
pub fn presimple_example(m: usize) -> Result<PolyMap> {
    for a in 1..100 {
        let mut cs = vec![0i64; m + 1];
        cs[m] = 1;
        cs[2] += a;
        cs[1] += 1;
        let f = map(&cs)?;
        if is_presimple(&f)? {
            return Ok(f);
        }
    }
    unreachable!("a generic member of the family is pre-simple")
}

fn presimple_genus() -> Result<bool> {
    for m in 3..=6usize {
        let g = genus_hf(&presimple_example(m)?)?;
        if g != ((m - 2) * (m - 3) / 2) as i64 {
            return Ok(false);
        }
    }
    Ok(true)
}

fn stable_example(opts: &SpectrumOptions) -> Result<bool> {
    let p = map(&[0, 1, 0, 1])?;
    let q = map(&[0, -1, 0, -1])?;
    Ok(p.iterate(2) == q.iterate(2) && compare_iterates_with(&p, &q, 2, 1, opts)?.equal)
}

fn sac_quadratics() -> Result<bool> {
    let a = superattracting_cycle_count(&map(&[0, 0, 1])?, 10)?;
    let b = superattracting_cycle_count(&map(&[-1, 0, 1])?, 10)?;
    let c = superattracting_cycle_count(&map(&[1, 0, 1])?, 10)?;
    Ok(a.per_period == [(1, 1)]
        && b.per_period == [(2, 1)]
        && c.count == 0
        && a.certified_complete
        && b.certified_complete
        && c.certified_complete)
}

fn classify_t3() -> Result<bool> {
    let t3 = map(&[0, -3, 0, 1])?;
    Ok(is_presimple(&t3)? && is_exceptional(&t3)? == Exceptional::ChebyshevPlus)
}

fn progression_recipe() -> Result<bool> {
    let p = progression_params(2, 3);
    Ok(p.valid && (p.c1, p.d) == (1, 2) && !progression_params(3, 4).valid)
}

pub(crate) fn run(opts: &SpectrumOptions) -> std::result::Result<(Value, Status), CliError> {
    let checks = [
        Check { name: "ritt move z^2(z^3+1) / z^2(z+1)^3: S1 = S1, S2 != S2, S3 = S3", outcome: twenty_three_move(opts) },
        Check { name: "z(z^2-3) and z(z-3)^2 conjugate by shift 2, spectra equal to level 3", outcome: conjugate_ritt_pair(opts) },
        Check { name: "progression parameters for (2,3) and (3,4)", outcome: progression_recipe() },
        Check { name: "Chebyshev polynomials commute, degrees 1..5", outcome: chebyshev_commute() },
        Check { name: "(4 - z^2) T_m'^2 = m^2 (4 - T_m^2), m = 2..7", outcome: chebyshev_differential() },
        Check { name: "symmetries of z^2 + c are z and -z", outcome: sigma_quadratic() },
        Check { name: "pre-simple genus (m-2)(m-3)/2, m = 3..6", outcome: presimple_genus() },
        Check { name: "z^3 + z and -z^3 - z have equal second iterates", outcome: stable_example(opts) },
        Check { name: "superattracting cycles of z^2, z^2 - 1, z^2 + 1", outcome: sac_quadratics() },
        Check { name: "T_3 is pre-simple and exceptional", outcome: classify_t3() },
    ];
    let mut failed = 0;
    let rows: Vec<Value> = checks
        .into_iter()
        .map(|c| {
            let (pass, error) = match c.outcome {
                Ok(p) => (p, None),
                Err(e) => (false, Some(e.to_string())),
            };
            if !pass {
                failed += 1;
            }
            let mut row = json!({ "name": c.name, "pass": pass });
            if let Some(e) = error {
                row["error"] = json!(e);
            }
            row
        })
        .collect();
    let status = if failed == 0 { Status::Ok } else { Status::Error };
    let v = json!({ "checks": rows, "passed": rows.len() - failed, "failed": failed });
    Ok((v, status))
}
