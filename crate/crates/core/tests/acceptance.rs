//! One line per acceptance criterion. Runs without the libtest harness so
//! the lines always show up in `cargo test` output; exits nonzero if any
//! criterion fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use qmink::algebra::{check_confluence, pbw_dimension, AlgebraPresentation};
use qmink::classical::bosonic::{minkowski_form, pauli_map};
use qmink::classical::limit::rules_failing_at_q1;
use qmink::classical::maps::{conjugated_translation, special_conformal_map, MapSpace};
use qmink::cli::{closure_table_output, run_suite_with, Context, Format, RunOptions, VerificationReport};
use qmink::grassmann::{Convention, Frac, Vars};
use qmink::minkowski::{
    build_chiral_abstract, check_presentation_confluence, coaction_membership, compare_dimensions,
    verify_presentation, QuantumMinkowski,
};
use qmink::realforms::{fixed_points, sigma, sl41_basis};
use qmink::scalar::Gauss;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn suite(ctx: &Context, name: &str) -> Result<VerificationReport, String> {
    let r = run_suite_with(name, RunOptions::default(), ctx).map_err(|e| e.to_string())?;
    if let Some(f) = r.failures().next() {
        return Err(format!("{}: {}", f.id, f.witness.clone().unwrap_or_default()));
    }
    Ok(r)
}

/// Monomials of degree `d` in a free supercommutative algebra, counted by
/// explicit enumeration of nondecreasing index sequences where odd indices
/// may not repeat.
fn enumerate_monomials(parities: &[bool], d: usize) -> u128 {
    fn go(parities: &[bool], start: usize, left: usize, last: Option<usize>) -> u128 {
        if left == 0 {
            return 1;
        }
        (start..parities.len())
            .filter(|&g| !(parities[g] && last == Some(g)))
            .map(|g| go(parities, g, left - 1, Some(g)))
            .sum()
    }
    go(parities, 0, d, None)
}

/// Normal words of length `d` by brute force over all words.
fn brute_force_normal_words(pres: &AlgebraPresentation, d: u32) -> u128 {
    let n = pres.num_generators() as u64;
    (0..n.pow(d))
        .filter(|&code| {
            let letters: Vec<u16> = (0..d).map(|k| ((code / n.pow(k)) % n) as u16).collect();
            letters.windows(2).all(|w| pres.rule_for(w[0], w[1]).is_none())
        })
        .count() as u128
}

fn manin_confluence(qm: &QuantumMinkowski) -> Outcome {
    let start = Instant::now();
    let report = check_confluence(qm.alg.presentation()).map_err(|e| e.to_string())?;
    let unresolved = report.unresolved().count();
    ensure(unresolved == 0, format!("{unresolved} unresolved overlaps"))?;
    ensure(start.elapsed() < Duration::from_secs(120), "slower than 2 minutes")?;
    Ok(format!(
        "{} overlaps, 0 unresolved, {:.2}s",
        report.overlaps.len(),
        start.elapsed().as_secs_f64()
    ))
}

fn pbw_dimensions(qm: &QuantumMinkowski) -> Outcome {
    let pres = qm.alg.presentation();
    let parities: Vec<bool> = pres.generators().iter().map(|g| g.parity.is_odd()).collect();
    ensure(parities.iter().filter(|&&p| !p).count() == 17, "expected 17 even generators")?;
    let mut dims = Vec::new();
    for d in 1..=4 {
        let normal = pbw_dimension(pres, d);
        let classical = enumerate_monomials(&parities, d);
        ensure(normal == classical, format!("degree {d}: {normal} != {classical}"))?;
        if d <= 3 {
            let brute = brute_force_normal_words(pres, d as u32);
            ensure(brute == normal, format!("degree {d}: brute force {brute} != {normal}"))?;
        }
        dims.push(normal);
    }
    ensure(dims[1] == 317, "degree-2 count is not 317")?;
    Ok(format!("degrees 1..4: {dims:?}"))
}

fn grassmannian_closure(ctx: &Context) -> Outcome {
    let r = suite(ctx, "grassmannian-closure")?;
    ensure(r.records.len() == 66, format!("{} pairs", r.records.len()))?;
    let json = closure_table_output(Format::Json).map_err(|e| e.to_string())?;
    let rows: serde_json::Value = serde_json::from_str(&json).map_err(|e| e.to_string())?;
    let rows = rows.as_array().ok_or("table is not a list")?;
    ensure(rows.len() == 66, "emitted table does not have 66 rows")?;
    let corrected = rows
        .iter()
        .filter(|r| r["terms"].as_array().map_or(0, Vec::len) > 1)
        .count();
    Ok(format!("66 pairs resolve, {corrected} with correction terms, table emitted"))
}

fn chiral_presentation(qm: &QuantumMinkowski) -> Outcome {
    let report = verify_presentation(&qm.localized, &qm.chiral, &qm.alg, &qm.minors)
        .map_err(|e| e.to_string())?;
    ensure(report.families.len() == 8, "expected 8 families")?;
    if let Some(f) = report.families.iter().find(|f| !f.holds()) {
        return Err(format!("family {} fails: {:?}", f.family, f.witness));
    }
    let (conf, _) = check_presentation_confluence().map_err(|e| e.to_string())?;
    ensure(conf.confluent(), "abstract presentation is not confluent")?;
    let mut dims = Vec::new();
    for d in 0..=3 {
        let c = compare_dimensions(d, &qm.localized, &qm.chiral, &qm.alg, &qm.minors)
            .map_err(|e| e.to_string())?;
        ensure(c.abstract_dim == c.image_dim as u128, c.to_string())?;
        let brute = brute_force_normal_words(&build_chiral_abstract(), d as u32);
        ensure(brute == c.abstract_dim, format!("degree {d}: brute force {brute}"))?;
        dims.push(c.image_dim);
    }
    Ok(format!(
        "8 families vanish, {} overlaps resolve, dims {dims:?} match",
        conf.overlaps.len()
    ))
}

fn coaction(qm: &QuantumMinkowski) -> Outcome {
    for idx in 0..qm.minors.len() {
        let r = coaction_membership(&qm.alg, &qm.minors, idx).map_err(|e| e.to_string())?;
        ensure(r.member(), format!("{}: {:?}", r.minor, r.witness))?;
    }
    let failures = qm.alg.comultiplication_failures().map_err(|e| e.to_string())?;
    ensure(failures.is_empty(), failures.join(", "))?;
    // spot check: the comultiplication of a product is the product of the
    // comultiplications
    let pres = qm.alg.presentation();
    let x = qm.alg.a(1, 2);
    let y = qm.alg.a(2, 5);
    let lhs = qm.alg.comultiply(&pres.mul(&x, &y).map_err(|e| e.to_string())?);
    let rhs = qm
        .alg
        .comultiply(&x)
        .and_then(|a| Ok(a.mul(&qm.alg.comultiply(&y)?, pres)))
        .and_then(|t| t.normal_form(pres));
    ensure(lhs == rhs, "Δ(xy) != Δ(x)Δ(y)")?;
    Ok(format!(
        "11 minors coact into the minor span, {} rules respected",
        pres.rules().len()
    ))
}

fn classical_limit(ctx: &Context, qm: &QuantumMinkowski) -> Outcome {
    let a = rules_failing_at_q1(qm.alg.presentation());
    let b = rules_failing_at_q1(&build_chiral_abstract());
    ensure(a.is_empty() && b.is_empty(), format!("{a:?} {b:?}"))?;
    // a relation's two sides differ by a sign exactly when both letters are
    // odd; check the coefficient of every single-word right-hand side at q = 1
    for r in qm.alg.presentation().rules() {
        let mut terms = r.rhs.terms();
        if let (Some((w, c)), None) = (terms.next(), terms.next()) {
            if w.letters() == [r.lhs[1], r.lhs[0]] {
                let odd = |g: u16| qm.alg.presentation().generator(g).parity.is_odd();
                let expected = if odd(r.lhs[0]) && odd(r.lhs[1]) { -1 } else { 1 };
                ensure(
                    c.at_q_one() == Gauss::from_int(expected),
                    format!("rule {:?}", r.lhs),
                )?;
            }
        }
    }
    suite(ctx, "classical-limit")?;
    Ok("every relation of slq41 and the chiral algebra becomes supercommutativity".into())
}

fn conformal_closure(ctx: &Context) -> Outcome {
    let r = suite(ctx, "conformal-algebra")?;
    ensure(r.records.len() == 105, format!("{} pairs", r.records.len()))?;
    let space = MapSpace::new();
    ensure(
        special_conformal_map(&space.b, false) == conjugated_translation(&space.b),
        "K_b != I T_b I",
    )?;
    ensure(
        special_conformal_map(&space.b, true) != conjugated_translation(&space.b),
        "literal variant unexpectedly matches",
    )?;
    Ok("105 brackets close; K_b = I∘T_b∘I; literal variant fails it".into())
}

fn geometry(ctx: &Context) -> Outcome {
    let mut vars = Vars::new(Convention::Automorphism);
    let x: [Frac; 4] = std::array::from_fn(|mu| Frac::from_poly(vars.real(&format!("x{mu}"))));
    ensure(pauli_map(&x).det2() == minkowski_form(&x), "det differs")?;
    // numeric oracle: det [[x0 + x3, x1 - i x2], [x1 + i x2, x0 - x3]]
    for (x0, x1, x2, x3) in [(1, 2, 3, 4), (-5, 0, 7, 2), (3, 3, -1, 0)] {
        let num = |v: i64| Frac::constant(Gauss::from_int(v));
        let m = pauli_map(&[num(x0), num(x1), num(x2), num(x3)]);
        let expected = x0 * x0 - x1 * x1 - x2 * x2 - x3 * x3;
        ensure(m.det2() == num(expected), "numeric determinant")?;
        ensure(
            *m.get(0, 1) == Frac::constant(Gauss::gaussian(x1, -x2)),
            "sigma_2 sign convention",
        )?;
    }
    suite(ctx, "poincare-action")?;
    suite(ctx, "twistor")?;
    Ok("det∘pauli = Minkowski form; action axiom, covariance, twistor relation hold".into())
}

fn real_forms(ctx: &Context) -> Outcome {
    suite(ctx, "sigma-involution")?;
    suite(ctx, "su221-dimensions")?;
    suite(ctx, "poincare-reality")?;
    suite(ctx, "super-action")?;
    ensure(sl41_basis().len() == 24, "basis size")?;
    let fp = fixed_points();
    ensure(fp.dimensions() == (16, 8), format!("{:?}", fp.dimensions()))?;
    for x in fp.even.iter().chain(&fp.odd) {
        ensure(sigma(x) == *x, "fixed point not fixed")?;
    }
    Ok("σ involutive and bracket-compatible, dims (16|8), ρ involutive, reality preserved".into())
}

fn cli_contract() -> Outcome {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_qmink"))
        .args(["check", "all", "--format", "json"])
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(out.status.success(), format!("exit status {}", out.status))?;
    let report = VerificationReport::from_json(&String::from_utf8_lossy(&out.stdout))
        .map_err(|e| e.to_string())?;
    ensure(report.overall, "overall verdict false")?;
    ensure(report.records.iter().all(|r| r.verdict), "a verdict is false")?;
    ensure(elapsed < Duration::from_secs(600), "slower than 10 minutes")?;
    Ok(format!(
        "{} records, all true, {:.1}s",
        report.records.len(),
        elapsed.as_secs_f64()
    ))
}

fn main() -> ExitCode {
    let ctx = Context::default();
    let qm = match ctx.minkowski() {
        Ok(qm) => qm,
        Err(e) => {
            println!("cannot build the quantum Grassmannian: {e}");
            return ExitCode::FAILURE;
        }
    };
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("Manin confluence", Box::new(|| manin_confluence(qm))),
        ("PBW dimensions", Box::new(|| pbw_dimensions(qm))),
        ("Grassmannian closure", Box::new(|| grassmannian_closure(&ctx))),
        ("Chiral Minkowski presentation", Box::new(|| chiral_presentation(qm))),
        ("Coaction", Box::new(|| coaction(qm))),
        ("Classical limit", Box::new(|| classical_limit(&ctx, qm))),
        ("Conformal closure", Box::new(|| conformal_closure(&ctx))),
        ("Geometry identities", Box::new(|| geometry(&ctx))),
        ("Real forms", Box::new(|| real_forms(&ctx))),
        ("CLI contract", Box::new(cli_contract)),
    ];
    let mut failed = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("[PASS] {:>2}. {name}: {detail}", n + 1),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {:>2}. {name}: {why}", n + 1);
            }
        }
    }
    println!("acceptance: {}/{} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
