//! The named verification suites.

use std::sync::OnceLock;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use crate::algebra::{
    check_confluence, pbw_dimension, supercommutative_count, AlgebraPresentation,
    ConfluenceReport, NCPoly, Parity, Word,
};
use crate::classical::bosonic::{big_cell_reduce, minkowski_form, pauli_map, poincare_action, PoincareElement};
use crate::classical::conformal::{bracket_closure_table, conformal_generator};
use crate::classical::limit::{rules_failing_at_q1, Specializer};
use crate::classical::maps::{conjugated_translation, special_conformal_map, MapSpace, RationalMap};
use crate::classical::superflag::{generic_superflag, superflag_reduce};
use crate::classical::superpoincare::{
    act_on_flag, generic_element, generic_point, generic_real_element, generic_real_point,
    is_real_point, real_form_action, super_poincare_chiral_action,
};
use crate::classical::symbols::{complex_matrix, FMat};
use crate::error::{Error, Result};
use crate::grassmann::{Convention, Frac, Ring, SuperPoly, Vars};
use crate::matrix::Mat;
use crate::minkowski::{
    build_chiral_abstract, check_presentation_confluence, closure_entry, coaction_membership,
    compare_dimensions, verify_presentation, QuantumMinkowski,
};
use crate::realforms::{
    check_bracket_compatibility, check_involution, fixed_points, odd_correction,
    poincare_reality_reduce, rho, satisfies_su221,
};

use super::report::{CheckRecord, VerificationReport};

/// Every suite name accepted by [`run_suite`], `all` excluded.
pub const SUITES: [&str; 15] = [
    "manin-confluence",
    "grassmannian-closure",
    "minkowski-presentation",
    "presentation-confluence",
    "coaction",
    "classical-limit",
    "conformal-algebra",
    "sct-inversion",
    "pauli-metric",
    "poincare-action",
    "twistor",
    "super-action",
    "sigma-involution",
    "su221-dimensions",
    "poincare-reality",
];

#[derive(Clone, Copy, Debug, Default)]
pub struct RunOptions {
    /// Run on a single worker thread.
    pub serial: bool,
}

/// Shared state built lazily by the suites that need it.
#[derive(Default)]
pub struct Context {
    minkowski: OnceLock<std::result::Result<QuantumMinkowski, Error>>,
}

impl Context {
    pub fn minkowski(&self) -> Result<&QuantumMinkowski> {
        self.minkowski
            .get_or_init(QuantumMinkowski::build)
            .as_ref()
            .map_err(Clone::clone)
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed().as_secs_f64())
}

fn run_named(name: &str, ctx: &Context) -> Vec<CheckRecord> {
    let result = match name {
        "manin-confluence" => manin_confluence(ctx),
        "grassmannian-closure" => grassmannian_closure(ctx),
        "minkowski-presentation" => minkowski_presentation(ctx),
        "presentation-confluence" => presentation_confluence(ctx),
        "coaction" => coaction(ctx),
        "classical-limit" => classical_limit(ctx),
        "conformal-algebra" => conformal_algebra(),
        "sct-inversion" => sct_inversion(),
        "pauli-metric" => pauli_metric(),
        "poincare-action" => poincare_action_suite(),
        "twistor" => twistor(),
        "super-action" => super_action(),
        "sigma-involution" => sigma_involution(),
        "su221-dimensions" => su221_dimensions(),
        "poincare-reality" => poincare_reality(),
        _ => unreachable!("suite names are validated"),
    };
    let records = result.unwrap_or_else(|e| {
        vec![CheckRecord::new("error", "the suite ran to completion", "").fail(e.to_string())]
    });
    records
        .into_iter()
        .map(|mut r| {
            r.id = format!("{name}/{}", r.id);
            r
        })
        .collect()
}

fn run_in(name: &str, ctx: &Context) -> Result<VerificationReport> {
    let records = if name == "all" {
        SUITES
            .par_iter()
            .map(|s| run_named(s, ctx))
            .collect::<Vec<_>>()
            .concat()
    } else if SUITES.contains(&name) {
        run_named(name, ctx)
    } else {
        return Err(Error::UnknownSuite(name.to_string()));
    };
    Ok(VerificationReport::new(name, records))
}

/// Runs a suite, or every suite for `all`. Records appear in a fixed order
/// whatever the scheduling.
pub fn run_suite(name: &str, options: RunOptions) -> Result<VerificationReport> {
    run_suite_with(name, options, &Context::default())
}

/// As [`run_suite`], reusing the lazily built state in `ctx`.
pub fn run_suite_with(name: &str, options: RunOptions, ctx: &Context) -> Result<VerificationReport> {
    if name != "all" && !SUITES.contains(&name) {
        return Err(Error::UnknownSuite(name.to_string()));
    }
    if options.serial {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .map_err(|e| Error::ThreadPool(e.to_string()))?;
        pool.install(|| run_in(name, ctx))
    } else {
        run_in(name, ctx)
    }
}

/// Time of a computation shared by several records, charged to the first.
fn shared_time(n: usize, t: f64) -> f64 {
    if n == 0 {
        t
    } else {
        0.0
    }
}

fn overlap_records(report: &ConfluenceReport, pres: &AlgebraPresentation, anchor: &str, t: f64) -> Vec<CheckRecord> {
    report
        .by_class()
        .into_iter()
        .enumerate()
        .map(|(n, ((l, r), total, unresolved))| {
            CheckRecord::new(
                format!("overlap/{l}+{r}"),
                format!("all {total} overlaps of a {l} rule followed by a {r} rule resolve"),
                anchor,
            )
            .verdict(unresolved == 0, || {
                let o = report
                    .unresolved()
                    .find(|o| o.class == (l.clone(), r.clone()))
                    .expect("class has an unresolved overlap");
                format!(
                    "{}: {}",
                    pres.display_word(&o.word),
                    pres.display(&o.difference)
                )
            })
            .timed(shared_time(n, t))
        })
        .collect()
}

fn manin_confluence(ctx: &Context) -> Result<Vec<CheckRecord>> {
    let qm = ctx.minkowski()?;
    let pres = qm.alg.presentation();
    let (report, t) = timed(|| check_confluence(pres));
    let report = report?;
    let mut records = overlap_records(&report, pres, "(xy)z = x(yz)", t);
    let even = pres.generators().iter().filter(|g| !g.parity.is_odd()).count() as u64;
    let odd = pres.num_generators() as u64 - even;
    for d in 1..=4 {
        let ((normal, expected), t) =
            timed(|| (pbw_dimension(pres, d), supercommutative_count(even, odd, d as u64)));
        records.push(
            CheckRecord::new(
                format!("pbw/degree-{d}"),
                format!(
                    "{normal} normal words of degree {d}, {expected} supercommutative monomials in {even} even and {odd} odd variables"
                ),
                "\\dim M_q(4|1)_d = \\dim \\mathbb{C}[x_1, \\dots, x_{17} | \\xi_1, \\dots, \\xi_8]_d",
            )
            .verdict(normal == expected, || format!("{normal} != {expected}"))
            .timed(t),
        );
    }
    Ok(records)
}

fn grassmannian_closure(ctx: &Context) -> Result<Vec<CheckRecord>> {
    let qm = ctx.minkowski()?;
    let (alg, set) = (&qm.alg, &qm.minors);
    let pres = alg.presentation();
    let n = set.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect();
    pairs
        .par_iter()
        .map(|&(a, b)| {
            let (entry, t) = timed(|| -> Result<_> {
                let entry = closure_entry(alg, set, a, b)?;
                let lhs = pres.mul(&set.minors[b].value, &set.minors[a].value)?;
                let mut rhs = NCPoly::zero();
                for ((c, d), k) in &entry.coefficients {
                    let Some(s) = k.as_scalar() else {
                        return Ok((entry.clone(), Some(format!("coefficient {k} is not a Laurent polynomial"))));
                    };
                    rhs = &rhs + &pres.mul(&set.minors[*c].value, &set.minors[*d].value)?.scale(s);
                }
                let residue = &lhs - &rhs;
                Ok((entry, (!residue.is_zero()).then(|| pres.display(&residue))))
            });
            let id = format!("{}*{}", set.label(b), set.label(a));
            let record = CheckRecord::new(
                format!("pair/{id}"),
                String::new(),
                "D_{ij} D_{kl} \\in \\mathrm{span}\\{D_{ab} D_{cd}\\}",
            )
            .timed(t);
            Ok(match entry {
                Ok((entry, witness)) => {
                    let mut r = record.verdict(witness.is_none(), || witness.clone().unwrap_or_default());
                    r.statement = entry.display(set);
                    r
                }
                Err(e) => {
                    let mut r = record.fail(e.to_string());
                    r.statement = format!("{id} is a combination of ordered minor words");
                    r
                }
            })
        })
        .collect()
}

fn minkowski_presentation(ctx: &Context) -> Result<Vec<CheckRecord>> {
    let qm = ctx.minkowski()?;
    let (report, t) = timed(|| verify_presentation(&qm.localized, &qm.chiral, &qm.alg, &qm.minors));
    Ok(report?
        .families
        .iter()
        .enumerate()
        .map(|(n, f)| {
            CheckRecord::new(
                format!("family-{}", f.family),
                format!(
                    "{} holds on all {} instances with t = [[-q^-1 D23, D13], [-q^-1 D24, D14]] D12inv, tau = (-q^-1 D25, D15) D12inv",
                    f.statement, f.instances
                ),
                CHIRAL_ANCHORS[f.family - 1],
            )
            .verdict(f.holds(), || f.witness.clone().unwrap_or_default())
            .timed(shared_time(n, t))
        })
        .collect())
}

const CHIRAL_ANCHORS: [&str; 8] = [
    "t_{i1}t_{i2} = q\\, t_{i2}t_{i1}",
    "t_{3j}t_{4j} = q^{-1} t_{4j}t_{3j}",
    "t_{31}t_{42} = t_{42}t_{31}",
    "t_{32}t_{41} = t_{41}t_{32} + (q^{-1}-q) t_{42}t_{31}",
    "\\tau_{51}\\tau_{52} = -q^{-1} \\tau_{52}\\tau_{51}",
    "t_{ij}\\tau_{5j} = q^{-1} \\tau_{5j}t_{ij}",
    "t_{i1}\\tau_{52} = \\tau_{52}t_{i1}",
    "t_{i2}\\tau_{51} = \\tau_{51}t_{i2} + (q^{-1}-q) t_{i1}\\tau_{52}",
];

fn presentation_confluence(ctx: &Context) -> Result<Vec<CheckRecord>> {
    let qm = ctx.minkowski()?;
    let ((report, t), pres) = (timed(check_presentation_confluence), build_chiral_abstract());
    let (report, _) = report?;
    let mut records = overlap_records(&report, &pres, "(xy)z = x(yz)", t);
    let dims = (0..=3usize)
        .into_par_iter()
        .map(|d| timed(|| compare_dimensions(d, &qm.localized, &qm.chiral, &qm.alg, &qm.minors)))
        .collect::<Vec<_>>();
    for (cmp, t) in dims {
        let cmp = cmp?;
        records.push(
            CheckRecord::new(
                format!("dimension/degree-{}", cmp.degree),
                format!(
                    "degree {} of the abstract algebra has dimension {} and its image spans {}",
                    cmp.degree, cmp.abstract_dim, cmp.image_dim
                ),
                "\\dim \\mathcal{O}_q(M)_d = \\dim \\mathrm{span}\\, \\iota(\\mathcal{O}_q(M)_d)",
            )
            .verdict(cmp.abstract_dim == cmp.image_dim as u128, || cmp.to_string())
            .timed(t),
        );
    }
    Ok(records)
}

fn coaction(ctx: &Context) -> Result<Vec<CheckRecord>> {
    let qm = ctx.minkowski()?;
    let mut records = (0..qm.minors.len())
        .into_par_iter()
        .map(|idx| {
            let (report, t) = timed(|| coaction_membership(&qm.alg, &qm.minors, idx));
            let report = report?;
            Ok(CheckRecord::new(
                format!("minor/{}", report.minor),
                format!(
                    "the comultiplication of {} has every second tensor slot in the span of the minors ({} nonzero cofactors)",
                    report.minor,
                    report.cofactors.len()
                ),
                "\\Delta(D_{ij}) \\in M_q(4|1) \\otimes Gr_q",
            )
            .verdict(report.member(), || report.witness.clone().unwrap_or_default())
            .timed(t))
        })
        .collect::<Result<Vec<_>>>()?;
    let (failures, t) = timed(|| qm.alg.comultiplication_failures());
    let failures = failures?;
    records.push(
        CheckRecord::new(
            "homomorphism",
            format!(
                "the comultiplication sends all {} defining relations to zero",
                qm.alg.presentation().rules().len()
            ),
            "\\Delta(a_{ij}) = \\sum_k a_{ik} \\otimes a_{kj}",
        )
        .verdict(failures.is_empty(), || failures.join(", "))
        .timed(t),
    );
    Ok(records)
}

/// Specializing a word and its normal form at `q = 1` gives the same
/// supercommutative monomial; checked on seeded random words.
fn algebra_map_samples(pres: &AlgebraPresentation, samples: usize, seed: u64) -> Result<Option<String>> {
    let spec = Specializer::new(pres);
    let mut rng = StdRng::seed_from_u64(seed);
    let n = pres.num_generators() as u16;
    let words: Vec<Word> = (0..samples)
        .map(|_| {
            let len = rng.gen_range(2..=5);
            Word::from_slice(&(0..len).map(|_| rng.gen_range(0..n)).collect::<Vec<_>>())
        })
        .collect();
    let bad = words
        .par_iter()
        .map(|w| {
            let p = NCPoly::word(w.letters());
            let nf = pres.normal_form(&p)?;
            Ok((spec.specialize(&p) != spec.specialize(&nf)).then(|| pres.display_word(w)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(bad.into_iter().flatten().next())
}

fn classical_limit(ctx: &Context) -> Result<Vec<CheckRecord>> {
    let qm = ctx.minkowski()?;
    let chiral = build_chiral_abstract();
    let mut records = Vec::new();
    for (name, pres) in [("slq41", qm.alg.presentation()), ("chiral-abstract", &chiral)] {
        let (failing, t) = timed(|| rules_failing_at_q1(pres));
        records.push(
            CheckRecord::new(
                format!("{name}/relations"),
                format!(
                    "all {} rules of {name} become supercommutativity at q = 1",
                    pres.rules().len()
                ),
                "q \\to 1:\\ xy = (-1)^{|x||y|} yx",
            )
            .verdict(failing.is_empty(), || failing.join(", "))
            .timed(t),
        );
        let (bad, t) = timed(|| algebra_map_samples(pres, 200, 0x5eed));
        let bad = bad?;
        records.push(
            CheckRecord::new(
                format!("{name}/algebra-map"),
                format!("200 seeded random words of {name} and their normal forms agree at q = 1"),
                "q \\to 1:\\ xy = (-1)^{|x||y|} yx",
            )
            .verdict(bad.is_none(), || bad.clone().unwrap_or_default())
            .timed(t),
        );
    }
    let (bad, t) = timed(|| -> Result<Option<String>> {
        let pres = qm.alg.presentation();
        let spec = Specializer::new(pres);
        let minor = |k: usize| spec.specialize(&qm.minors.minors[k].value);
        for e in &qm.table.entries {
            let mut rhs = SuperPoly::zero();
            for ((c, d), k) in &e.coefficients {
                let s = k.as_scalar().ok_or_else(|| Error::NotInSpan(k.to_string()))?;
                rhs = &rhs + &(&minor(*c) * &minor(*d)).scale(&s.at_q_one());
            }
            if &minor(e.b) * &minor(e.a) != rhs {
                return Ok(Some(e.display(&qm.minors)));
            }
        }
        Ok(None)
    });
    let bad = bad?;
    records.push(
        CheckRecord::new(
            "closure-table",
            "every entry of the closure table holds between the classical minors at q = 1",
            "q \\to 1:\\ D_{ij} D_{kl} = \\pm D_{kl} D_{ij}",
        )
        .verdict(bad.is_none(), || bad.clone().unwrap_or_default())
        .timed(t),
    );
    Ok(records)
}

fn conformal_algebra() -> Result<Vec<CheckRecord>> {
    let (table, t) = timed(bracket_closure_table);
    let table = table?;
    let fields = table
        .basis
        .iter()
        .map(|&k| conformal_generator(k))
        .collect::<Result<Vec<_>>>()?;
    Ok(table
        .entries
        .par_iter()
        .enumerate()
        .map(|(n, e)| {
            let (residual, t2) = timed(|| {
                let lhs = fields[e.i].bracket(&fields[e.j]);
                e.coefficients
                    .iter()
                    .fold(lhs, |acc, (k, c)| acc.add(&fields[*k].scale(&-c.clone())))
            });
            CheckRecord::new(
                format!("bracket/{},{}", table.basis[e.i], table.basis[e.j]),
                table.display_entry(e),
                "[V_a, V_b] = \\sum_c f_{ab}^{\\ c} V_c",
            )
            .verdict(residual.is_zero(), || "bracket minus expansion is nonzero".into())
            .timed(shared_time(n, t) + t2)
        })
        .collect())
}

fn sct_inversion() -> Result<Vec<CheckRecord>> {
    let space = MapSpace::new();
    let (b, c) = (&space.b, &space.c);
    let anchor = "x \\mapsto \\frac{x + b x^2}{1 + 2 b\\cdot x + b^2 x^2} = I \\circ T_b \\circ I";
    let checks: Vec<(&str, &str, Box<dyn Fn() -> bool + Send + Sync>)> = vec![
        (
            "inversion-identity",
            "the special conformal map with parameter b equals inversion, translation by b, inversion",
            Box::new(|| special_conformal_map(b, false) == conjugated_translation(b)),
        ),
        (
            "literal-variant-rejected",
            "the variant with denominator 1 + 2 b.x + 2 b^2 x^2 differs from inversion, translation by b, inversion",
            Box::new(|| special_conformal_map(b, true) != conjugated_translation(b)),
        ),
        (
            "composition",
            "special conformal maps with parameters b and c compose to the one with parameter b + c",
            Box::new(|| {
                let sum: [SuperPoly; 4] = std::array::from_fn(|mu| &b[mu] + &c[mu]);
                special_conformal_map(b, false).compose(&special_conformal_map(c, false))
                    == special_conformal_map(&sum, false)
            }),
        ),
        (
            "inversion-involutive",
            "inversion composed with itself is the identity",
            Box::new(|| RationalMap::inversion().compose(&RationalMap::inversion()) == RationalMap::identity()),
        ),
    ];
    Ok(checks
        .par_iter()
        .map(|(id, statement, f)| {
            let (ok, t) = timed(f);
            CheckRecord::new(*id, *statement, anchor)
                .verdict(ok, || "rational maps differ".into())
                .timed(t)
        })
        .collect())
}

fn real_coordinates(vars: &mut Vars) -> [Frac; 4] {
    std::array::from_fn(|mu| Frac::from_poly(vars.real(&format!("x{mu}"))))
}

fn pauli_metric() -> Result<Vec<CheckRecord>> {
    let mut vars = Vars::new(Convention::Automorphism);
    let x = real_coordinates(&mut vars);
    let (ok, t) = timed(|| pauli_map(&x).det2() == minkowski_form(&x));
    let (herm, t2) = timed(|| pauli_map(&x).dagger(&vars) == pauli_map(&x));
    Ok(vec![
        CheckRecord::new(
            "determinant",
            "the determinant of x^mu sigma_mu is the Minkowski quadratic form",
            "\\det(x^\\mu \\sigma_\\mu) = (x^0)^2 - (x^1)^2 - (x^2)^2 - (x^3)^2",
        )
        .verdict(ok, || "determinant differs".into())
        .timed(t),
        CheckRecord::new(
            "hermitian",
            "x^mu sigma_mu is hermitian for real x",
            "(x^\\mu \\sigma_\\mu)^\\dagger = x^\\mu \\sigma_\\mu",
        )
        .verdict(herm, || "not hermitian".into())
        .timed(t2),
    ])
}

fn generic_poincare(vars: &mut Vars, tag: &str) -> PoincareElement {
    PoincareElement {
        l: complex_matrix(vars, &format!("{tag}l"), 2, 2, Parity::Even),
        r: complex_matrix(vars, &format!("{tag}r"), 2, 2, Parity::Even),
        n: complex_matrix(vars, &format!("{tag}n"), 2, 2, Parity::Even),
    }
}

fn poincare_action_suite() -> Result<Vec<CheckRecord>> {
    let mut vars = Vars::new(Convention::Automorphism);
    let g1 = generic_poincare(&mut vars, "g");
    let g2 = generic_poincare(&mut vars, "h");
    let a = complex_matrix(&mut vars, "a", 2, 2, Parity::Even);
    let b = complex_matrix(&mut vars, "b", 2, 2, Parity::Even);
    let p1 = complex_matrix(&mut vars, "p", 4, 2, Parity::Even);
    let h = complex_matrix(&mut vars, "k", 2, 2, Parity::Even);
    let anchor = "A \\mapsto N + R A L^{-1}";
    type Check<'a> = Box<dyn Fn() -> Result<bool> + Send + Sync + 'a>;
    let checks: Vec<(&str, &str, Check)> = vec![
        (
            "axiom",
            "acting by h and then by g equals acting by the block product g h",
            Box::new(|| {
                let lhs = poincare_action(&g1, &poincare_action(&g2, &a)?)?;
                Ok(lhs == poincare_action(&g1.compose(&g2)?, &a)?)
            }),
        ),
        (
            "identity",
            "the identity element acts trivially",
            Box::new(|| Ok(poincare_action(&PoincareElement::identity(), &a)? == a)),
        ),
        (
            "covariance",
            "det(A' - B') det L = det R det(A - B)",
            Box::new(|| {
                let diff = poincare_action(&g1, &a)?.sub(&poincare_action(&g1, &b)?);
                Ok(diff.det2().mul(&g1.l.det2()) == g1.r.det2().mul(&a.sub(&b).det2()))
            }),
        ),
        (
            "frame-action",
            "reducing the transformed frame g [1; A] gives the action on A",
            Box::new(|| {
                let frame = Mat::from_blocks(&[vec![&Mat::identity(2)], vec![&a]]);
                Ok(big_cell_reduce(&g1.to_block().mul(&frame))? == poincare_action(&g1, &a)?)
            }),
        ),
        (
            "chart-invariance",
            "the big cell coordinate of a frame is unchanged by the right action of GL(2)",
            Box::new(|| Ok(big_cell_reduce(&p1.mul(&h))? == big_cell_reduce(&p1)?)),
        ),
    ];
    Ok(checks
        .par_iter()
        .map(|(id, statement, f)| {
            let (ok, t) = timed(f);
            let record = CheckRecord::new(*id, *statement, anchor).timed(t);
            match ok {
                Ok(ok) => record.verdict(ok, || "matrices differ".into()),
                Err(e) => record.fail(e.to_string()),
            }
        })
        .collect())
}

fn twistor() -> Result<Vec<CheckRecord>> {
    [(false, "generic"), (true, "even-only")]
        .par_iter()
        .map(|&(even_only, id)| {
            let (red, t) = timed(|| {
                let mut vars = Vars::new(Convention::Automorphism);
                let (p1, p2) = generic_superflag(&mut vars, even_only);
                superflag_reduce(&p1, &p2).map(|r| (r, vars))
            });
            let (red, vars) = red?;
            Ok(CheckRecord::new(
                id,
                format!(
                    "for a {} flag P1 in P2 the chart coordinates satisfy B = A - beta alpha",
                    if even_only { "purely even" } else { "generic" }
                ),
                "B = A - \\beta\\alpha",
            )
            .verdict(red.twistor_holds(), || red.residual.display(&vars))
            .timed(t))
        })
        .collect()
}

fn super_action() -> Result<Vec<CheckRecord>> {
    let mut vars = Vars::new(Convention::Automorphism);
    let g = generic_element(&mut vars, "g");
    let h = generic_element(&mut vars, "h");
    let p = generic_point(&mut vars, "p");
    let gr = generic_real_element(&mut vars, "r")?;
    let pr = generic_real_point(&mut vars, "s");
    let vars = &vars;
    let anchor = "C' = R(C + \\tfrac12 \\varphi\\bar\\theta^t - \\tfrac12 \\theta\\chi)L^{-1} + T,\\ \\theta' = d^{-1}R(\\theta + \\varphi),\\ \\bar\\theta' = d (L^{-1})^t(\\bar\\theta + \\chi^t)";
    type Check<'a> = Box<dyn Fn() -> Result<bool> + Send + Sync + 'a>;
    let checks: Vec<(&str, &str, Check)> = vec![
        (
            "flag-oracle",
            "the closed form agrees with acting on both flag frames and renormalizing",
            Box::new(|| Ok(super_poincare_chiral_action(&g, &p)? == act_on_flag(&g, &p)?)),
        ),
        (
            "composition",
            "acting by h and then by g equals acting by g h",
            Box::new(|| {
                let lhs = super_poincare_chiral_action(&g, &super_poincare_chiral_action(&h, &p)?)?;
                Ok(lhs == super_poincare_chiral_action(&g.compose(&h)?, &p)?)
            }),
        ),
        (
            "identity",
            "the identity element acts trivially",
            Box::new(|| {
                Ok(super_poincare_chiral_action(&crate::classical::SuperPoincare::identity(), &p)? == p)
            }),
        ),
        (
            "reality-preserved",
            "a real element maps real points (C hermitian, theta_bar = conj theta) to real points",
            Box::new(|| Ok(is_real_point(&super_poincare_chiral_action(&gr, &pr)?, vars))),
        ),
        (
            "real-form-display",
            "on real elements the closed form equals the form written with R^dagger and conj phi",
            Box::new(|| Ok(real_form_action(&gr, &pr, vars)? == super_poincare_chiral_action(&gr, &pr)?)),
        ),
    ];
    Ok(checks
        .par_iter()
        .map(|(id, statement, f)| {
            let (ok, t) = timed(f);
            let record = CheckRecord::new(*id, *statement, anchor).timed(t);
            match ok {
                Ok(ok) => record.verdict(ok, || "points differ".into()),
                Err(e) => record.fail(e.to_string()),
            }
        })
        .collect())
}

fn sigma_involution() -> Result<Vec<CheckRecord>> {
    let anchor = "\\sigma(X) = (-F p^\\dagger F,\\ iF\\beta^\\dagger,\\ i\\alpha^\\dagger F,\\ -\\bar c)";
    let (inv, t) = timed(check_involution);
    let (br, t2) = timed(check_bracket_compatibility);
    let first = |v: &[crate::realforms::Violation]| {
        v.first()
            .map(|x| format!("{}, {}: {}", x.pair.0, x.pair.1, x.detail))
            .unwrap_or_default()
    };
    Ok(vec![
        CheckRecord::new(
            "involution",
            "sigma is antilinear and squares to the identity on all 24 basis elements",
            anchor,
        )
        .verdict(inv.is_empty(), || first(&inv))
        .timed(t),
        CheckRecord::new(
            "bracket",
            "sigma preserves the supercommutator on all 576 ordered basis pairs",
            anchor,
        )
        .verdict(br.is_empty(), || first(&br))
        .timed(t2),
    ])
}

fn su221_dimensions() -> Result<Vec<CheckRecord>> {
    let (fp, t) = timed(fixed_points);
    let dims = fp.dimensions();
    let bad = fp.even.iter().chain(&fp.odd).position(|x| !satisfies_su221(x));
    Ok(vec![
        CheckRecord::new(
            "dimensions",
            format!("the fixed points of sigma have real dimension ({}|{})", dims.0, dims.1),
            "\\dim_{\\mathbb{R}} \\mathfrak{su}(2,2|1) = (16|8)",
        )
        .verdict(dims == (16, 8), || format!("{dims:?}"))
        .timed(t),
        CheckRecord::new(
            "conditions",
            "every fixed point X satisfies F p + p^dagger F = 0, tr p = c, c + conj c = 0, alpha = i F beta^dagger",
            "F p + p^\\dagger F = 0,\\ \\alpha = iF\\beta^\\dagger",
        )
        .verdict(bad.is_none(), || format!("fixed-point basis element {}", bad.unwrap_or(0)))
        .timed(t),
    ])
}

fn poincare_reality() -> Result<Vec<CheckRecord>> {
    let anchor = "R = (L^\\dagger)^{-1},\\ \\varphi = \\chi^\\dagger,\\ T = T^\\dagger,\\ d\\bar d = 1";
    let tasks: Vec<(&str, &str, Convention)> = vec![
        ("involutive", "rho(rho(g)) = g for a generic complex element", Convention::Automorphism),
        ("real-fixed", "generic elements meeting the reality conditions are fixed by rho", Convention::Automorphism),
        ("converse", "for R = (L^dagger)^-1 and phi = chi^dagger, M(rho g) - M = (T^dagger - T) L, so rho g = g forces T = T^dagger", Convention::Automorphism),
        ("reversal-rejected", "with the reversing convention (ab)* = b* a*, rho fails to be involutive", Convention::Reversal),
    ];
    tasks
        .par_iter()
        .map(|&(id, statement, conv)| {
            let (ok, t) = timed(|| -> Result<bool> {
                let mut vars = Vars::new(conv);
                match id {
                    "involutive" | "reversal-rejected" => {
                        let g = generic_element(&mut vars, "g");
                        let twice = rho(&rho(&g, &vars)?, &vars)?;
                        Ok((twice == g) == (id == "involutive"))
                    }
                    "real-fixed" => {
                        let g = generic_real_element(&mut vars, "r")?;
                        let red = poincare_reality_reduce(&g, &vars)?;
                        Ok(red.fixed && red.real() && red.raw_condition)
                    }
                    _ => {
                        let mut g = generic_real_element(&mut vars, "r")?;
                        let n: FMat = complex_matrix(&mut vars, "n", 2, 2, Parity::Even);
                        g.m = n.mul(&g.l);
                        let red = poincare_reality_reduce(&g, &vars)?;
                        let r = rho(&g, &vars)?;
                        let skew = red.t.sub(&red.t.dagger(&vars));
                        let identity = r.m.sub(&g.m).add(&skew.mul(&g.l)).is_zero();
                        let h = odd_correction(&g, &vars)?;
                        let forms = red.n.sub(&red.n.dagger(&vars)).sub(&h) == skew;
                        let rest = r.l == g.l && r.r == g.r && r.phi == g.phi && r.chi == g.chi && r.d == g.d;
                        Ok(identity && forms && rest)
                    }
                }
            });
            let record = CheckRecord::new(id, statement, anchor).timed(t);
            Ok(match ok {
                Ok(ok) => record.verdict(ok, || "identity fails".into()),
                Err(e) => record.fail(e.to_string()),
            })
        })
        .collect()
}
