//! Subcommand definitions and their evaluation into report results.

use clap::{Args, Subcommand};
use multispec_core::classify::{
    distinct_critical_values_count, generalized_lattes_form, genus_hf, genus_hfh, is_exceptional,
    is_presimple, ramification_portrait, FixedPointWitness, GlWitness,
};
use multispec_core::dynmaps::{conjugacy_test, PolyMap, Scale};
use multispec_core::ritt::{
    build_ritt_pair, multiplier_congruence_check, semiconjugacy_check, verify_progression_with,
};
use multispec_core::spectrum::{
    compare_iterates_with, multiplier_charpoly_with, spectra_equal_up_to_with,
    superattracting_cycle_count, SpectrumLevel, SpectrumOptions,
};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::parse::parse_poly;
use crate::report::{poly, poly_in, rat, rats, Status};
use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Subcommand, Serialize, Deserialize)]
#[serde(tag = "command", content = "inputs", rename_all = "kebab-case")]
pub enum Command {
    /// Multiplier polynomial and spectrum S_n(f) at one level
    Spectrum(SpectrumArgs),
    /// Compare S_n(f) and S_n(g) for n = 1..m
    Compare(CompareArgs),
    /// Build the Ritt pair z^r R(z^k), z^r R(z)^k and check spectra along the progression
    Ritt(RittArgs),
    /// Pre-simplicity, exceptional type and generalized Lattès form
    Classify(MapArgs),
    /// Genus formula for F(x) = H(y), or for (F(x) - F(y))/(x - y) without -g
    Genus(GenusArgs),
    /// Count superattracting cycles up to a period bound
    Sac(SacArgs),
    /// Compare spectra of the k-th iterates up to level m
    StableCompare(StableCompareArgs),
    /// Decide affine conjugacy and print a witness
    Conj(PairArgs),
    /// Re-run a JSON report and check that the results are reproduced
    VerifyReport(VerifyArgs),
    /// Run the built-in corpus of worked examples
    Repro(ReproArgs),
}

#[derive(Clone, Debug, PartialEq, Eq, Args, Serialize, Deserialize)]
pub struct MapArgs {
    #[arg(short = 'f', allow_hyphen_values = true)]
    pub f: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Args, Serialize, Deserialize)]
pub struct PairArgs {
    #[arg(short = 'f', allow_hyphen_values = true)]
    pub f: String,
    #[arg(short = 'g', allow_hyphen_values = true)]
    pub g: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Args, Serialize, Deserialize)]
pub struct SpectrumArgs {
    #[arg(short = 'f', allow_hyphen_values = true)]
    pub f: String,
    #[arg(short = 'n')]
    pub n: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Args, Serialize, Deserialize)]
pub struct CompareArgs {
    #[arg(short = 'f', allow_hyphen_values = true)]
    pub f: String,
    #[arg(short = 'g', allow_hyphen_values = true)]
    pub g: String,
    #[arg(short = 'm')]
    pub m: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Args, Serialize, Deserialize)]
pub struct RittArgs {
    #[arg(short = 'r')]
    pub r: usize,
    #[arg(short = 'k')]
    pub k: usize,
    #[arg(short = 'R', allow_hyphen_values = true)]
    pub base: String,
    #[arg(long, default_value_t = 2)]
    pub terms: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Args, Serialize, Deserialize)]
pub struct GenusArgs {
    #[arg(short = 'f', allow_hyphen_values = true)]
    pub f: String,
    #[arg(short = 'g', allow_hyphen_values = true)]
    pub g: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Args, Serialize, Deserialize)]
pub struct SacArgs {
    #[arg(short = 'f', allow_hyphen_values = true)]
    pub f: String,
    #[arg(long, default_value_t = 10)]
    pub bound: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Args, Serialize, Deserialize)]
pub struct StableCompareArgs {
    #[arg(short = 'f', allow_hyphen_values = true)]
    pub f: String,
    #[arg(short = 'g', allow_hyphen_values = true)]
    pub g: String,
    #[arg(short = 'k')]
    pub k: usize,
    #[arg(short = 'm')]
    pub m: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Args, Serialize, Deserialize)]
pub struct VerifyArgs {
    /// Report file, or `-` for standard input
    pub path: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Args, Serialize, Deserialize)]
pub struct ReproArgs {}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Spectrum(_) => "spectrum",
            Command::Compare(_) => "compare",
            Command::Ritt(_) => "ritt",
            Command::Classify(_) => "classify",
            Command::Genus(_) => "genus",
            Command::Sac(_) => "sac",
            Command::StableCompare(_) => "stable-compare",
            Command::Conj(_) => "conj",
            Command::VerifyReport(_) => "verify-report",
            Command::Repro(_) => "repro",
        }
    }
}

pub(crate) fn map(text: &str) -> Result<PolyMap, CliError> {
    Ok(PolyMap::new(parse_poly(text)?)?)
}

pub(crate) fn execute(cmd: &Command, opts: &SpectrumOptions) -> Result<(Value, Status), CliError> {
    let ok = |v: Value| Ok((v, Status::Ok));
    match cmd {
        Command::Spectrum(a) => ok(spectrum(a, opts)?),
        Command::Compare(a) => {
            let c = spectra_equal_up_to_with(&map(&a.f)?, &map(&a.g)?, a.m, opts)?;
            ok(json!({ "equal": c.equal, "first_diff": c.first_diff, "levels": a.m }))
        }
        Command::Ritt(a) => ritt(a, opts),
        Command::Classify(a) => ok(classify(&map(&a.f)?)?),
        Command::Genus(a) => ok(genus(a)?),
        Command::Sac(a) => {
            let rep = superattracting_cycle_count(&map(&a.f)?, a.bound)?;
            let status = if rep.certified_complete {
                Status::Ok
            } else {
                Status::HypothesisNotSatisfied
            };
            let v = json!({
                "count": rep.count,
                "per_period": rep.per_period,
                "certified_complete": rep.certified_complete,
                "bound": rep.bound,
            });
            Ok((v, status))
        }
        Command::StableCompare(a) => {
            let c = compare_iterates_with(&map(&a.f)?, &map(&a.g)?, a.k, a.m, opts)?;
            ok(json!({ "equal": c.equal, "first_diff": c.first_diff, "k": a.k, "levels": a.m }))
        }
        Command::Conj(a) => ok(conj(a)?),
        Command::VerifyReport(a) => crate::verify_report(&a.path),
        Command::Repro(_) => crate::repro::run(opts),
    }
}

fn spectrum(a: &SpectrumArgs, opts: &SpectrumOptions) -> Result<Value, CliError> {
    let f = map(&a.f)?;
    let mp = multiplier_charpoly_with(&f, a.n, opts)?;
    let level = SpectrumLevel::from(&mp);
    Ok(json!({
        "map": poly(f.poly()),
        "level": a.n,
        "fixed_points": mp.charpoly.deg() + 1,
        "charpoly": poly_in(&mp.charpoly, "w"),
        "sigmas": rats(&level.sigmas),
    }))
}

fn ritt(a: &RittArgs, opts: &SpectrumOptions) -> Result<(Value, Status), CliError> {
    let pair = build_ritt_pair(a.r, a.k, &parse_poly(&a.base)?)?;
    let rep = verify_progression_with(&pair, a.terms, opts)?;
    let levels: Vec<Value> = rep
        .levels
        .iter()
        .map(|l| {
            json!({
                "level": l.level,
                "equal": l.equal,
                "guaranteed": l.guaranteed,
                "on_progression": l.on_progression,
            })
        })
        .collect();
    let v = json!({
        "P": poly(pair.p.poly()),
        "Q": poly(pair.q.poly()),
        "normalized": { "r": rep.pair.r, "k": rep.pair.k, "R": poly(&rep.pair.base) },
        "c1": rep.params.c1,
        "d": rep.params.d,
        "valid": rep.params.valid,
        "semiconjugacy": semiconjugacy_check(&pair, 1),
        "multiplier_congruence": multiplier_congruence_check(&pair, 1),
        "max_level": rep.max_level,
        "truncated_at": rep.truncated_at,
        "levels": levels,
    });
    let status = if rep.params.valid {
        Status::Ok
    } else {
        Status::HypothesisNotSatisfied
    };
    Ok((v, status))
}

fn classify(f: &PolyMap) -> Result<Value, CliError> {
    let gl = match generalized_lattes_form(f)? {
        None => Value::Null,
        Some(GlWitness::Exceptional(tag)) => json!({ "kind": "exceptional", "tag": tag.name() }),
        Some(GlWitness::Form(form)) => {
            let witness = match &form.witness {
                FixedPointWitness::Rational(x) => json!({ "rational": rat(x) }),
                FixedPointWitness::Algebraic(p) => json!({ "root_of": poly(p) }),
            };
            json!({
                "kind": "form",
                "r": form.r,
                "n": form.n,
                "rest_degree": form.rest_degree,
                "witness": witness,
            })
        }
    };
    Ok(json!({
        "map": poly(f.poly()),
        "distinct_critical_values": distinct_critical_values_count(f)?,
        "presimple": is_presimple(f)?,
        "exceptional": is_exceptional(f)?.name(),
        "generalized_lattes": gl,
    }))
}

fn genus(a: &GenusArgs) -> Result<Value, CliError> {
    let f = map(&a.f)?;
    let (maps, g) = match &a.g {
        Some(h) => {
            let h = map(h)?;
            let g = genus_hfh(&f, &h)?;
            (vec![f, h], g)
        }
        None => {
            let g = genus_hf(&f)?;
            (vec![f], g)
        }
    };
    let portrait = ramification_portrait(&maps)?;
    let classes: Vec<Value> = portrait
        .classes
        .iter()
        .map(|c| json!({ "values": poly_in(&c.factor, "t"), "profiles": c.profiles }))
        .collect();
    let curve = if maps.len() == 2 {
        "F(x) = H(y)"
    } else {
        "(F(x) - F(y))/(x - y) = 0"
    };
    Ok(json!({ "curve": curve, "genus": g, "critical_values": portrait.value_count(), "classes": classes }))
}

fn conj(a: &PairArgs) -> Result<Value, CliError> {
    let f = map(&a.f)?;
    let g = map(&a.g)?;
    let Some(sigma) = conjugacy_test(&f, &g)? else {
        return Ok(json!({ "conjugate": false, "witness": null }));
    };
    let witness = match sigma.scale() {
        Scale::Rational(alpha) => json!({
            "text": sigma.to_string(),
            "scale": rat(alpha),
            "shift": rat(sigma.shift()),
        }),
        Scale::Root(cert) => {
            let relations: Vec<Value> = cert
                .relations
                .iter()
                .map(|(e, r)| json!({ "exponent": e, "value": rat(r) }))
                .collect();
            json!({
                "text": sigma.to_string(),
                "scale_root": { "exponent": cert.exponent, "value": rat(&cert.value) },
                "pre_shift": rat(sigma.pre_shift()),
                "shift": rat(sigma.shift()),
                "relations": relations,
                "certificate_verified": cert.verify(),
            })
        }
    };
    Ok(json!({ "conjugate": true, "witness": witness }))
}
