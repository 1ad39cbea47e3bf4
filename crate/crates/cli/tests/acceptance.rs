//! Acceptance run: one pass/fail line per criterion.
//!
//! All arithmetic is exact, so every numeric comparison is equality. The only
//! tolerances are the runtime budgets below, measured on the dev profile.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::Zero;
use serde_json::Value;

use homdef::catalog::{self, classical_jacobiator_orders, Instance};
use homdef::cochain::{alpha_associator, delta1_hl, delta1_hom, delta2_hl, delta2_hom};
use homdef::deform::{apply_equivalence, first_order_cocycle_check, verify, DeformationSeries, FormalIso};
use homdef::exactlin::rational::{frac, int, Rational};
use homdef::graded::{
    qwitt_bracket, sigma_jacobi_residual, sigma_jacobi_series, virasoro_bracket, virasoro_hom_jacobi,
    witt_alpha_order, witt_alpha_series, witt_bracket_order, witt_bracket_series, witt_deformation_residual,
    witt_noncocycle_remark,
};
use homdef::homcore::{check_hom_lie, HomAlgebra, Kind, LinearMap, TriTensor};
use homdef::hompoisson::{
    check_hom_poisson, cocycle_leibniz_property, cyclic_delta2_pair, cyclic_self_associator, poisson_from_deformation,
    skew_cocycle_basis,
};
use homdef::sample::{self, SampleRng};

mod common;

const JACKSON_BUDGET: Duration = Duration::from_secs(1);
const TWIST_BUDGET: Duration = Duration::from_secs(1);
const QWITT_BUDGET: Duration = Duration::from_secs(10);

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ok<T>(r: homdef::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, budget: Duration) -> Result<(), String> {
    ensure(elapsed < budget, || format!("took {elapsed:.2?}, budget {budget:.0?}"))
}

fn params(pairs: &[(&str, &Rational)]) -> BTreeMap<String, Rational> {
    pairs.iter().map(|(k, v)| (k.to_string(), (*v).clone())).collect()
}

fn series(inst: Instance) -> DeformationSeries {
    match inst {
        Instance::Deformation { series, .. } => series,
        other => panic!("expected a deformation, got {other:?}"),
    }
}

fn c1_jackson() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = dir.path().join("jackson10.json");
    let path = path.to_str().ok_or("non-UTF-8 temp path")?;
    let export = common::run(&["catalog", "export", "jackson-sl2", "--N", "10", "--out", path]);
    ensure(export.code == 0, || format!("export failed: {}", export.stderr))?;
    let start = Instant::now();
    let r = common::run(&["deform", "verify", path, "--json"]);
    let elapsed = start.elapsed();
    ensure(r.code == 0, || format!("exit {}: {}", r.code, r.stdout))?;
    let doc: Value = serde_json::from_str(&r.stdout).map_err(|e| e.to_string())?;
    let rows = doc["facts"]["residuals"].as_array().ok_or("no residual table")?;
    ensure(rows.len() == 11, || format!("{} orders reported", rows.len()))?;
    ensure(rows.iter().all(|row| row["status"] == "pass" && row.get("witness").is_none()), || {
        "nonzero residual".into()
    })?;
    within(elapsed, JACKSON_BUDGET)?;
    Ok(format!("orders 0..=10 exactly zero via the CLI in {elapsed:.2?}"))
}

fn c2_twists() -> Outcome {
    let start = Instant::now();
    let s = catalog::solve_sl2_twists().map_err(|e| e.to_string())?;
    ensure(s.dimension == 6, || format!("dimension {}", s.dimension))?;
    for m in &s.basis {
        ensure(
            m.get(1, 0) == &(int(2) * m.get(0, 2)) && m.get(2, 0) == &(int(2) * m.get(0, 1)) && m.get(1, 1) == m.get(2, 2),
            || "basis vector violates the displayed relations".into(),
        )?;
    }
    let mut rng = sample::rng(2);
    for _ in 0..20 {
        let p: Vec<Rational> = (0..6).map(|_| sample::small_rational(&mut rng)).collect();
        let alpha = catalog::sl2_twist(&p[0], &p[1], &p[2], &p[3], &p[4], &p[5]);
        let a = HomAlgebra::new(Kind::HomLie, vec!["x1".into(), "x2".into(), "x3".into()], catalog::sl2_x_bracket(), alpha)
            .map_err(|e| e.to_string())?;
        ensure(check_hom_lie(&a).map_err(|e| e.to_string())?.passed, || "random member fails".into())?;
    }
    let elapsed = start.elapsed();
    within(elapsed, TWIST_BUDGET)?;
    Ok(format!("dimension 6, relations hold, 20 random members pass, {elapsed:.2?}"))
}

fn c3_families() -> Outcome {
    let mut rng = sample::rng(3);
    let names = ["sl2-inf-1", "sl2-inf-2", "sl2-inf-3"];
    for name in names {
        let keys: Vec<&str> = catalog::entry(name).map_err(|e| e.to_string())?.params.iter().map(|(k, _)| *k).collect();
        for draw in 0..50 {
            let values: Vec<Rational> = keys.iter().map(|_| sample::small_rational(&mut rng)).collect();
            let p: Vec<(&str, &Rational)> = keys.iter().copied().zip(values.iter()).collect();
            let d = series(catalog::get(name, &params(&p), None).map_err(|e| e.to_string())?);
            let c = first_order_cocycle_check(&d).map_err(|e| e.to_string())?;
            ensure(c.hypothesis.passed && c.cocycle.passed, || format!("{name} draw {draw}: {} / {}", c.hypothesis, c.cocycle))?;
        }
    }
    Ok("150 draws: twist condition and delta2 of the bracket both exactly zero".into())
}

fn c4_nonlie() -> Outcome {
    let mut rng = sample::rng(4);
    let z = Rational::zero();
    for draw in 0..20 {
        let a: Vec<Rational> = (0..6).map(|_| sample::small_rational(&mut rng)).collect();
        let keys = ["a1", "a2", "a3", "a4", "b1", "b2"];
        let p: Vec<(&str, &Rational)> = keys.iter().copied().zip(a.iter()).collect();
        let d = series(catalog::get("sl2-nonlie", &params(&p), Some(2)).map_err(|e| e.to_string())?);
        ensure(verify(&d).map_err(|e| e.to_string())?.passed, || format!("draw {draw} fails verify"))?;
        let jac = classical_jacobiator_orders(&d.products).map_err(|e| e.to_string())?;
        let (a1, a2, a3, a4) = (&a[0], &a[1], &a[2], &a[3]);
        let expected: [Vec<Rational>; 3] = [
            vec![z.clone(), z.clone(), z.clone()],
            vec![z.clone(), int(2) * a3, int(2) * a1],
            vec![z.clone(), -(a2 * a3 + a1 * a4), -(a1 * a2)],
        ];
        for (s, e) in expected.iter().enumerate() {
            ensure(jac[s].at(0, 1, 2) == &e[..], || format!("draw {draw}: order {s} Jacobiator differs"))?;
        }
        ensure(jac[3..].iter().all(TriTensor::is_zero), || format!("draw {draw}: Jacobiator beyond t^2"))?;
    }
    let grid = [int(-1), int(0), int(1)];
    let mut lie_points = 0;
    for a1 in &grid {
        for a2 in &grid {
            for a3 in &grid {
                for a4 in &grid {
                    let d = catalog::sl2_nonlie(a1, a2, a3, a4, &int(1), &int(1)).map_err(|e| e.to_string())?;
                    let lie = classical_jacobiator_orders(&d.products).map_err(|e| e.to_string())?.iter().all(TriTensor::is_zero);
                    ensure(lie == (a1.is_zero() && a3.is_zero()), || format!("grid point ({a1},{a2},{a3},{a4})"))?;
                    lie_points += lie as usize;
                }
            }
        }
    }
    Ok(format!("20 draws verify through N = 2 with the stated Jacobiator; Lie at {lie_points}/81 grid points, exactly a1 = a3 = 0"))
}

fn c5_qwitt() -> Outcome {
    let start = Instant::now();
    for q in [int(2), int(3), frac(1, 2), int(-2)] {
        for n in -6..=6 {
            for l in -6..=6 {
                for m in -6..=6 {
                    ensure(ok(sigma_jacobi_residual(n, l, m, &q))?.is_zero(), || format!("sigma-Jacobi at q = {q}, ({n},{l},{m})"))?;
                }
            }
        }
        // keeps the bracket itself in the loop, not just the residual
        ensure(!ok(qwitt_bracket(1, 2, &q))?.is_zero(), || "degenerate bracket".into())?;
    }
    let order = 6;
    for n in 0..=8i64 {
        let alpha = ok(witt_alpha_series(n, order))?;
        for k in 0..=order {
            ensure(alpha.coeff(k) == ok(witt_alpha_order(n, k))?, || format!("alpha series vs order at n = {n}, k = {k}"))?;
        }
        for m in 0..=8i64 {
            let b0 = ok(witt_bracket_order(n, m, 0))?;
            let b1 = ok(witt_bracket_order(n, m, 1))?;
            let c0 = int(n - m);
            let c1 = int((n - m) * (n + m - 1)) / int(2);
            let get = |b: &homdef::graded::GradedElement| b.coeff(n + m).cloned().unwrap_or_else(Rational::zero);
            ensure(get(&b0) == c0 && get(&b1) == c1, || format!("bracket orders at ({n},{m})"))?;
            let series = ok(witt_bracket_series(n, m, order))?;
            for k in 0..=order {
                ensure(series.coeff(k) == get(&ok(witt_bracket_order(n, m, k))?), || format!("bracket series vs order at ({n},{m}), k = {k}"))?;
            }
            for l in 0..=8i64 {
                for s in 0..=order {
                    ensure(ok(witt_deformation_residual(n, l, m, s))?.is_zero(), || format!("residual at ({n},{l},{m}), s = {s}"))?;
                }
                ensure(ok(sigma_jacobi_series(n, l, m, order))?.is_zero(), || format!("series Jacobi at ({n},{l},{m})"))?;
            }
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, QWITT_BUDGET)?;
    Ok(format!("sigma-Jacobi on [-6,6]^3 at 4 values of q, Witt orders and residuals s <= 6 on [0,8]^3, series agree, {elapsed:.2?}"))
}

fn c6_virasoro() -> Outcome {
    for n in 0..=6i64 {
        let b = ok(virasoro_bracket(n, -n, &int(1)))?;
        let c = b.central_coeff().cloned().unwrap_or_else(Rational::zero);
        let expected = int((n - 1) * n * (n + 1)) / int(12);
        ensure(c == expected, || format!("central coefficient at n = {n}: {c} vs {expected}"))?;
    }
    for q in [int(2), frac(1, 2)] {
        for n in -6..=6 {
            for l in -6..=6 {
                for m in -6..=6 {
                    ensure(ok(virasoro_hom_jacobi(n, l, m, &q))?.is_zero(), || format!("Hom-Jacobi at q = {q}, ({n},{l},{m})"))?;
                }
            }
        }
    }
    Ok("central term (n-1)n(n+1)/12 at q = 1; Hom-Jacobi with alpha(c) = 2c on [-6,6]^3 at q = 2, 1/2".into())
}

fn c7_remark() -> Outcome {
    let (combined, partial) = witt_noncocycle_remark(1, 2, 4).map_err(|e| e.to_string())?;
    ensure(combined.is_zero(), || format!("combined = {combined}"))?;
    ensure(!partial.is_zero(), || "cocycle part vanishes".into())?;
    Ok(format!("at (1,2,4): combined expression 0, cocycle part {partial}"))
}

fn c8_cochains() -> Outcome {
    let mut rng = sample::rng(8);
    for i in 0..100 {
        let a = sample::hom_associative(&mut rng);
        let f = sample::commuting_map(&mut rng, &a.alpha);
        ensure(ok(delta2_hom(&a, &ok(delta1_hom(&a, &f))?.map))?.is_zero(), || format!("associative base {i}"))?;
        let g = sample::hom_lie(&mut rng);
        let f = sample::commuting_map(&mut rng, &g.alpha);
        ensure(ok(delta2_hl(&g, &ok(delta1_hl(&g, &f))?.map))?.is_zero(), || format!("Lie base {i}"))?;
    }
    for i in 0..100 {
        let a = sample::hom_associative(&mut rng);
        let phi = sample::bilinear_map(&mut rng, a.dim());
        let lhs = ok(delta2_hom(&a, &phi))?;
        let rhs = ok(ok(alpha_associator(&phi, &a.product, &a.alpha))?.add(&ok(alpha_associator(&a.product, &phi, &a.alpha))?))?;
        ensure(lhs == rhs, || format!("tensor identity, sample {i}"))?;
    }
    Ok("delta2 delta1 = 0 on 100 bases per flavor; delta2 as a sum of associators on 100 cochains".into())
}

fn c9_poisson() -> Outcome {
    let mut built = 0;
    let mut nontrivial = 0;
    for seed in 0..40u64 {
        let mut rng = sample::rng(seed);
        let Some(d) = sample::commutative_deformation(&mut rng, seed % 2 == 1) else { continue };
        built += 1;
        let p = ok(poisson_from_deformation(&d))?;
        let r = ok(check_hom_poisson(&p))?;
        ensure(r.passed, || format!("seed {seed}: {r}"))?;
        nontrivial += !p.bracket.is_zero() as usize;
    }
    let mut qplanes = 0;
    let mut rng = sample::rng(90);
    for i in 0..10 {
        let d = sample::twisted_quantum_plane(&mut rng, 2);
        let p = ok(poisson_from_deformation(&d))?;
        let r = ok(check_hom_poisson(&p))?;
        ensure(r.passed, || format!("quantum plane {i}: {r}"))?;
        qplanes += !p.bracket.is_zero() as usize;
    }
    ensure(nontrivial + qplanes > 0, || "every constructed bracket vanished".into())?;
    let mut rng = sample::rng(9);
    for i in 0..100 {
        let a = sample::commutative_hom_associative(&mut rng);
        let mu2 = sample::bilinear_map(&mut rng, a.dim());
        let (lhs, rhs) = ok(cyclic_delta2_pair(&a.product, &a.alpha, &mu2))?;
        ensure(lhs == rhs, || format!("cyclic delta2 lemma, base {i}"))?;
        let phi = sample::bilinear_combination(&mut rng, &ok(skew_cocycle_basis(&a))?, a.dim());
        ensure(ok(cocycle_leibniz_property(&a, &phi))?.passed, || format!("Leibniz lemma, base {i}"))?;
        ensure(ok(cyclic_self_associator(&a.product, &a.alpha))?.is_zero(), || format!("self-associator lemma, base {i}"))?;
    }
    Ok(format!("{built} extended deformations ({nontrivial} with nonzero bracket) and 10 twisted quantum planes ({qplanes} nonzero) are Hom-Poisson; 3 lemmas on 100 bases"))
}

fn c10_equivalence() -> Outcome {
    let mut rng: SampleRng = sample::rng(10);
    let mut commuting = 0;
    for i in 0..50 {
        let d = sample::associative_deformation(&mut rng, 3);
        ensure(ok(verify(&d))?.passed, || format!("pair {i}: sampled deformation fails"))?;
        let n = d.dim();
        let phi = sample::formal_iso(&mut rng, n, d.order());
        let e = ok(apply_equivalence(&d, &phi))?;
        ensure(ok(verify(&e))?.passed, || format!("pair {i}: equivalent series fails"))?;
        if d.order() >= 1 {
            let (p1, id) = (&phi.maps[1], LinearMap::identity(n));
            let (mu0, a0) = (&d.products[0], &d.twists[0]);
            let mu1 = ok(ok(ok(d.products[1].add(&ok(mu0.post_compose(p1))?))?.sub(&ok(mu0.pre_compose(p1, &id))?))?
                .sub(&ok(mu0.pre_compose(&id, p1))?))?;
            let a1 = ok(ok(d.twists[1].add(&ok(p1.compose(a0))?))?.sub(&ok(a0.compose(p1))?))?;
            ensure(e.products[1] == mu1 && e.twists[1] == a1, || format!("pair {i}: first-order formulas"))?;
            let base = ok(d.base())?;
            let c = sample::commuting_map(&mut rng, a0);
            let psi = FormalIso::new(vec![id.clone(), c.clone()]).map_err(|e| e.to_string())?;
            let f = ok(apply_equivalence(&ok(d.truncate(1))?, &psi))?;
            ensure(ok(f.products[1].sub(&d.products[1]))? == ok(delta1_hom(&base, &c))?.map, || format!("pair {i}: class change is not delta1"))?;
            ensure(f.twists[1] == d.twists[1], || format!("pair {i}: twist moved"))?;
            commuting += 1;
        }
    }
    Ok(format!("50 pairs preserve verify and the first-order formulas; {commuting} commuting changes shift by delta1"))
}

fn c11_cli() -> Outcome {
    let mismatched = common::golden_mismatches(false);
    ensure(mismatched.is_empty(), || mismatched.join("\n"))?;
    for (name, args) in common::ROUND_TRIP {
        let (first, again) = common::reexport(name, args);
        ensure(first == again, || format!("{name}: re-export differs"))?;
    }
    let malformed = common::run(&["check", "tests/fixtures/malformed.json"]);
    ensure(malformed.code == 2, || format!("malformed input exits {}", malformed.code))?;
    Ok(format!(
        "{} golden cases byte-identical with expected exit codes; {} exports round-trip; malformed input exits 2",
        common::CASES.len(),
        common::ROUND_TRIP.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("Jackson sl2 deformation verifies through N = 10", c1_jackson),
        ("sl2 twist family", c2_twists),
        ("infinitesimal families are first-order cocycles", c3_families),
        ("non-Lie family", c4_nonlie),
        ("q-Witt and Witt deformation", c5_qwitt),
        ("q-Virasoro", c6_virasoro),
        ("non-cocycle remark", c7_remark),
        ("cohomology engine", c8_cochains),
        ("Hom-Poisson construction and lemmas", c9_poisson),
        ("equivalence", c10_equivalence),
        ("CLI contract", c11_cli),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
