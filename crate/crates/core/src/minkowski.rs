//! Quantum super Grassmannian, its localization at `D[1,2]` and the quantum
//! chiral Minkowski superspace.
//!
//! Everything is computed inside the quantum matrix superalgebra: the
//! Grassmannian is the subalgebra generated by the eleven minors, and an
//! element of the localization is written `u * D12inv^k` and tested by
//! clearing the inverse powers and reducing in the ambient algebra. Since
//! `D[1,2]` is a regular element, this decides equality exactly.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::algebra::{
    self, check_confluence, linalg, pbw_dimension, AlgebraPresentation, ConfluenceReport,
    NCPoly, Parity, RewriteRule, TensorPoly, Word,
};
use crate::error::{Error, Result};
use crate::scalar::{RatFunc, Scalar};
use crate::supergroup::{index_parity, QMatrixAlgebra, QuantumMinor};

/// Row pairs of the eleven Grassmannian minors, in table order: even minors
/// lexicographically, then the odd `D[i,5]`, then `D[5,5]`.
pub const MINOR_ROWS: [(u8, u8); 11] = [
    (1, 2),
    (1, 3),
    (1, 4),
    (2, 3),
    (2, 4),
    (3, 4),
    (1, 5),
    (2, 5),
    (3, 5),
    (4, 5),
    (5, 5),
];

/// The generating minors of the quantum super Grassmannian.
#[derive(Clone, Debug)]
pub struct MinorSet {
    pub minors: Vec<QuantumMinor>,
}

impl MinorSet {
    pub fn new(alg: &QMatrixAlgebra) -> Result<Self> {
        let minors = MINOR_ROWS
            .iter()
            .map(|&(i, j)| alg.minor(i, j))
            .collect::<Result<Vec<_>>>()?;
        Ok(MinorSet { minors })
    }

    pub fn len(&self) -> usize {
        self.minors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.minors.is_empty()
    }

    pub fn index_of(&self, rows: (u8, u8)) -> Option<usize> {
        MINOR_ROWS.iter().position(|&r| r == rows)
    }

    pub fn label(&self, idx: usize) -> String {
        self.minors[idx].label()
    }

    /// Multiset of row indices, as counts per row 1..5.
    fn row_weight(idx: usize) -> [u8; 5] {
        let (i, j) = MINOR_ROWS[idx];
        let mut w = [0u8; 5];
        w[i as usize - 1] += 1;
        w[j as usize - 1] += 1;
        w
    }

    fn pair_weight(a: usize, b: usize) -> [u8; 5] {
        let (x, y) = (Self::row_weight(a), Self::row_weight(b));
        std::array::from_fn(|k| x[k] + y[k])
    }
}

/// One closure identity `D_b D_a = Σ c_{cd} D_c D_d` over ordered minor
/// words (`c <= d` in table order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureEntry {
    pub a: usize,
    pub b: usize,
    /// Nonzero coefficients on ordered minor words.
    pub coefficients: Vec<((usize, usize), RatFunc)>,
}

impl ClosureEntry {
    /// `true` when `D_b D_a` vanishes.
    pub fn vanishes(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Coefficient of `D_a D_b` as `(sign, exponent)` when it is `±q^s`.
    pub fn leading(&self) -> Option<(i64, i32)> {
        let c = self
            .coefficients
            .iter()
            .find(|(w, _)| *w == (self.a, self.b))?;
        let (g, k) = c.1.as_scalar()?.as_monomial()?;
        if g.is_one() {
            Some((1, k))
        } else if (-g).is_one() {
            Some((-1, k))
        } else {
            None
        }
    }

    /// Terms other than `D_a D_b`.
    pub fn correction(&self) -> impl Iterator<Item = &((usize, usize), RatFunc)> {
        self.coefficients
            .iter()
            .filter(move |(w, _)| *w != (self.a, self.b))
    }

    /// Pure q-commutation: `D_b D_a = ±q^s D_a D_b` with no other terms.
    pub fn is_pure(&self) -> bool {
        self.leading().is_some() && self.correction().next().is_none()
    }

    pub fn display(&self, set: &MinorSet) -> String {
        let lhs = format!("{}*{}", set.label(self.b), set.label(self.a));
        if self.vanishes() {
            return format!("{lhs} = 0");
        }
        let mut rhs = String::new();
        for (idx, ((c, d), k)) in self.coefficients.iter().enumerate() {
            let word = format!("{}*{}", set.label(*c), set.label(*d));
            let (neg, body) = match k.as_scalar() {
                Some(s) => algebra::format_term(s, &word, false),
                None => (false, format!("({k})*{word}")),
            };
            match (idx, neg) {
                (0, true) => rhs.push('-'),
                (0, false) => {}
                (_, true) => rhs.push_str(" - "),
                (_, false) => rhs.push_str(" + "),
            }
            rhs.push_str(&body);
        }
        format!("{lhs} = {rhs}")
    }
}

/// The derived table of reordering identities for all 66 pairs `a <= b`.
#[derive(Clone, Debug)]
pub struct QCommutationTable {
    pub entries: Vec<ClosureEntry>,
}

impl QCommutationTable {
    pub fn get(&self, a: usize, b: usize) -> Option<&ClosureEntry> {
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        self.entries.iter().find(|e| e.a == a && e.b == b)
    }
}

/// Reorders `D_b D_a` (for every `a <= b`) into the span of ordered minor
/// words of the same row weight, by exact linear algebra on the degree-4
/// component of the ambient algebra.
pub fn derive_closure_table(alg: &QMatrixAlgebra, set: &MinorSet) -> Result<QCommutationTable> {
    let n = set.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect();
    let entries = pairs
        .par_iter()
        .map(|&(a, b)| closure_entry(alg, set, a, b))
        .collect::<Result<Vec<_>>>()?;
    Ok(QCommutationTable { entries })
}

/// One entry of the closure table: `D_b D_a` for `a <= b`.
pub fn closure_entry(
    alg: &QMatrixAlgebra,
    set: &MinorSet,
    a: usize,
    b: usize,
) -> Result<ClosureEntry> {
    let p = alg.presentation();
    let target = p.mul(&set.minors[b].value, &set.minors[a].value)?;
    if target.is_zero() {
        return Ok(ClosureEntry {
            a,
            b,
            coefficients: Vec::new(),
        });
    }
    if a == b {
        return Ok(ClosureEntry {
            a,
            b,
            coefficients: vec![((a, a), RatFunc::one())],
        });
    }
    let weight = MinorSet::pair_weight(a, b);
    let n = set.len();
    let mut words = vec![(a, b)];
    words.extend(
        (0..n)
            .flat_map(|c| (c..n).map(move |d| (c, d)))
            .filter(|&(c, d)| (c, d) != (a, b) && MinorSet::pair_weight(c, d) == weight),
    );
    let mut basis_words = Vec::new();
    let mut basis = Vec::new();
    for (c, d) in words {
        let v = p.mul(&set.minors[c].value, &set.minors[d].value)?;
        if !v.is_zero() {
            basis_words.push((c, d));
            basis.push(v);
        }
    }
    let solution = linalg::solve_reduced(&target, &basis).ok_or_else(|| {
        Error::NonClosure(format!("{}*{}", set.label(b), set.label(a)))
    })?;
    let coefficients = basis_words
        .into_iter()
        .zip(solution)
        .filter(|(_, c)| !c.is_zero())
        .collect();
    Ok(ClosureEntry { a, b, coefficients })
}

/// The quantum Grassmannian localized at `D[1,2]`.
///
/// Generators are the minors that q-commute purely with `D[1,2]`, then
/// `D[1,2]` itself, then `D12inv`. Rules move `D[1,2]` and `D12inv` to the
/// right past every other minor and cancel `D[1,2] D12inv`.
#[derive(Clone, Debug)]
pub struct LocalizedAlgebra {
    presentation: AlgebraPresentation,
    /// Minor index (in [`MINOR_ROWS`]) of each generator below `D[1,2]`.
    minor_of: Vec<usize>,
    d12: u16,
    d12inv: u16,
    /// `c` with `X D12 = c D12 X`, per localized generator below `D[1,2]`.
    commutation: Vec<Scalar>,
}

/// Minors that the chiral generators use.
pub const CHIRAL_MINORS: [(u8, u8); 6] = [(1, 3), (1, 4), (2, 3), (2, 4), (1, 5), (2, 5)];

impl LocalizedAlgebra {
    pub fn presentation(&self) -> &AlgebraPresentation {
        &self.presentation
    }

    pub fn d12(&self) -> NCPoly {
        NCPoly::generator(self.d12)
    }

    pub fn d12inv(&self) -> NCPoly {
        NCPoly::generator(self.d12inv)
    }

    /// Generator for the minor with the given rows (including `D[1,2]`).
    pub fn minor(&self, rows: (u8, u8)) -> Option<NCPoly> {
        self.presentation
            .find("D", Some(rows))
            .map(NCPoly::generator)
    }

    /// The scalar `c` with `X D12 = c D12 X` for a localized minor `X`.
    pub fn commutation_scalar(&self, rows: (u8, u8)) -> Option<&Scalar> {
        let rank = self.presentation.find("D", Some(rows))?;
        self.commutation.get(rank as usize)
    }

    pub fn normal_form(&self, p: &NCPoly) -> Result<NCPoly> {
        self.presentation.normal_form(p)
    }

    /// Writes every word of the normal form of `p` as `u * D12^m` with
    /// `m` possibly negative (`u` free of `D[1,2]` and its inverse).
    fn split_tails(&self, p: &NCPoly) -> Result<Vec<(Vec<usize>, i32, Scalar)>> {
        let nf = self.normal_form(p)?;
        let mut out = Vec::new();
        for (w, c) in nf.terms() {
            let mut body = Vec::new();
            let mut power = 0i32;
            for &g in w.letters() {
                if g == self.d12 {
                    power += 1;
                } else if g == self.d12inv {
                    power -= 1;
                } else {
                    debug_assert_eq!(power, 0, "normal words end in D12 powers");
                    body.push(self.minor_of[g as usize]);
                }
            }
            out.push((body, power, c.clone()));
        }
        Ok(out)
    }

    /// Largest power of `D12inv` in the normal form of `p`.
    pub fn inverse_depth(&self, p: &NCPoly) -> Result<u32> {
        Ok(self
            .split_tails(p)?
            .iter()
            .map(|(_, m, _)| (-m).max(0) as u32)
            .max()
            .unwrap_or(0))
    }

    /// The ambient element `p * D12^depth`, which is free of inverses when
    /// `depth >= inverse_depth(p)`.
    pub fn to_ambient(
        &self,
        p: &NCPoly,
        depth: u32,
        alg: &QMatrixAlgebra,
        set: &MinorSet,
    ) -> Result<NCPoly> {
        let amb = alg.presentation();
        let d12 = &set.minors[0].value;
        let mut total = NCPoly::zero();
        for (body, power, c) in self.split_tails(p)? {
            let exp = power + depth as i32;
            assert!(exp >= 0, "depth below inverse depth");
            let mut acc = NCPoly::constant(c);
            for idx in body {
                acc = amb.mul(&acc, &set.minors[idx].value)?;
            }
            for _ in 0..exp {
                acc = amb.mul(&acc, d12)?;
            }
            total = &total + &acc;
        }
        Ok(total)
    }

    /// Exact zero test in the localized Grassmannian.
    pub fn is_zero(&self, p: &NCPoly, alg: &QMatrixAlgebra, set: &MinorSet) -> Result<bool> {
        let depth = self.inverse_depth(p)?;
        Ok(self.to_ambient(p, depth, alg, set)?.is_zero())
    }
}

/// Adjoins `D12inv` to the minors that q-commute purely with `D[1,2]`.
/// Fails if one of the minors used by the chiral generators does not.
pub fn localize_at_d12(table: &QCommutationTable, set: &MinorSet) -> Result<LocalizedAlgebra> {
    let d12_idx = set.index_of((1, 2)).expect("D[1,2] present");
    let mut pure = Vec::new();
    for idx in 0..set.len() {
        if idx == d12_idx {
            continue;
        }
        let entry = table.get(d12_idx, idx).expect("complete table");
        // entry: X D12 = c D12 X (X = b, D12 = a)
        let c = entry
            .is_pure()
            .then(|| entry.coefficients[0].1.as_scalar().cloned())
            .flatten();
        match c {
            Some(c) => pure.push((idx, c)),
            None if CHIRAL_MINORS.contains(&MINOR_ROWS[idx]) => {
                return Err(Error::NotQCommuting(set.label(idx)));
            }
            None => {}
        }
    }
    let mut b = AlgebraPresentation::builder("minkq");
    let mut minor_of = Vec::new();
    let mut commutation = Vec::new();
    for &(idx, ref c) in &pure {
        let (i, j) = MINOR_ROWS[idx];
        b.generator("D", Some((i, j)), index_parity(i).sum(index_parity(j)));
        minor_of.push(idx);
        commutation.push(c.clone());
    }
    let d12 = b.generator("D", Some((1, 2)), Parity::Even);
    let d12inv = b.generator("D12inv", None, Parity::Even);
    for (rank, c) in commutation.iter().enumerate() {
        let x = rank as u16;
        let c_inv = c.unit_inverse().expect("q-commutation scalar is a unit");
        b.rule(RewriteRule::new(
            [d12, x],
            NCPoly::term(c_inv, Word::from_slice(&[x, d12])),
            "D12-commute",
        ));
        b.rule(RewriteRule::new(
            [d12inv, x],
            NCPoly::term(c.clone(), Word::from_slice(&[x, d12inv])),
            "D12inv-commute",
        ));
    }
    b.rule(RewriteRule::new([d12, d12inv], NCPoly::one(), "inverse"));
    b.rule(RewriteRule::new([d12inv, d12], NCPoly::one(), "inverse"));
    Ok(LocalizedAlgebra {
        presentation: b.build(false)?,
        minor_of,
        d12,
        d12inv,
        commutation,
    })
}

/// The chiral coordinates as elements of the localized Grassmannian.
#[derive(Clone, Debug)]
pub struct ChiralGenerators {
    /// `t[0] = (t31, t32)`, `t[1] = (t41, t42)`.
    pub t: [[NCPoly; 2]; 2],
    /// `(tau51, tau52)`.
    pub tau: [NCPoly; 2],
}

impl ChiralGenerators {
    /// Image of an abstract chiral generator, by its rank in
    /// [`build_chiral_abstract`]'s order.
    pub fn image(&self, rank: u16) -> &NCPoly {
        match rank {
            0 => &self.t[0][0],
            1 => &self.t[0][1],
            2 => &self.t[1][0],
            3 => &self.t[1][1],
            4 => &self.tau[0],
            5 => &self.tau[1],
            _ => panic!("chiral algebra has six generators"),
        }
    }
}

/// `t = [[-q^-1 D23, D13], [-q^-1 D24, D14]] D12inv`,
/// `tau = (-q^-1 D25, D15) D12inv`.
pub fn build_chiral_generators(l: &LocalizedAlgebra) -> Result<ChiralGenerators> {
    let inv = l.d12inv();
    let mk = |rows: (u8, u8), coeff: Scalar| -> Result<NCPoly> {
        let d = l.minor(rows).ok_or(Error::NotQCommuting(format!(
            "D[{},{}]",
            rows.0, rows.1
        )))?;
        l.normal_form(&(&d * &inv).scale(&coeff))
    };
    let mq = -Scalar::q_pow(-1);
    Ok(ChiralGenerators {
        t: [
            [mk((2, 3), mq.clone())?, mk((1, 3), Scalar::one())?],
            [mk((2, 4), mq.clone())?, mk((1, 4), Scalar::one())?],
        ],
        tau: [mk((2, 5), mq)?, mk((1, 5), Scalar::one())?],
    })
}

/// Names of the abstract chiral generators in rank order.
pub const CHIRAL_NAMES: [(&str, (u8, u8)); 6] = [
    ("t", (3, 1)),
    ("t", (3, 2)),
    ("t", (4, 1)),
    ("t", (4, 2)),
    ("tau", (5, 1)),
    ("tau", (5, 2)),
];

/// One displayed relation `lhs = rhs` of the chiral presentation.
#[derive(Clone, Debug)]
pub struct ChiralRelation {
    pub family: usize,
    pub lhs: NCPoly,
    pub rhs: NCPoly,
}

/// The eight relation families, instantiated over their index ranges.
pub const CHIRAL_FAMILIES: [&str; 8] = [
    "t_i1 t_i2 = q t_i2 t_i1",
    "t_3j t_4j = q^-1 t_4j t_3j",
    "t31 t42 = t42 t31",
    "t32 t41 = t41 t32 + (q^-1 - q) t42 t31",
    "tau51 tau52 = -q^-1 tau52 tau51",
    "t_ij tau_5j = q^-1 tau_5j t_ij",
    "t_i1 tau52 = tau52 t_i1",
    "t_i2 tau51 = tau51 t_i2 + (q^-1 - q) t_i1 tau52",
];

pub fn chiral_relations() -> Vec<ChiralRelation> {
    let t = |i: u8, j: u8| -> u16 { ((i - 3) * 2 + (j - 1)) as u16 };
    let tau = |j: u8| -> u16 { 4 + (j - 1) as u16 };
    let w = |a: u16, b: u16| NCPoly::word(&[a, b]);
    let sc = |s: Scalar, a: u16, b: u16| w(a, b).scale(&s);
    let c = Scalar::q_inv_minus_q();
    let mut out = Vec::new();
    let mut push = |family: usize, lhs: NCPoly, rhs: NCPoly| {
        out.push(ChiralRelation { family, lhs, rhs })
    };
    for i in 3..=4 {
        push(1, w(t(i, 1), t(i, 2)), sc(Scalar::q_pow(1), t(i, 2), t(i, 1)));
    }
    for j in 1..=2 {
        push(2, w(t(3, j), t(4, j)), sc(Scalar::q_pow(-1), t(4, j), t(3, j)));
    }
    push(3, w(t(3, 1), t(4, 2)), w(t(4, 2), t(3, 1)));
    push(
        4,
        w(t(3, 2), t(4, 1)),
        &w(t(4, 1), t(3, 2)) + &sc(c.clone(), t(4, 2), t(3, 1)),
    );
    push(5, w(tau(1), tau(2)), sc(-Scalar::q_pow(-1), tau(2), tau(1)));
    for i in 3..=4 {
        for j in 1..=2 {
            push(6, w(t(i, j), tau(j)), sc(Scalar::q_pow(-1), tau(j), t(i, j)));
        }
    }
    for i in 3..=4 {
        push(7, w(t(i, 1), tau(2)), w(tau(2), t(i, 1)));
    }
    for i in 3..=4 {
        push(
            8,
            w(t(i, 2), tau(1)),
            &w(tau(1), t(i, 2)) + &sc(c.clone(), t(i, 1), tau(2)),
        );
    }
    out
}

/// The abstract chiral presentation on `t31 < t32 < t41 < t42 < tau51 <
/// tau52`, with each displayed relation oriented to rewrite its largest word
/// and `tau5j^2 = 0`.
pub fn build_chiral_abstract() -> AlgebraPresentation {
    let mut b = AlgebraPresentation::builder("chiral-abstract");
    for (name, idx) in CHIRAL_NAMES {
        let parity = if name == "tau" { Parity::Odd } else { Parity::Even };
        b.generator(name, Some(idx), parity);
    }
    let (t31, t32, t41, t42, tau1, tau2) = (0u16, 1u16, 2u16, 3u16, 4u16, 5u16);
    let w = |a: u16, b: u16| NCPoly::word(&[a, b]);
    let sc = |s: Scalar, a: u16, b: u16| w(a, b).scale(&s);
    let c = Scalar::q_inv_minus_q();
    let t = [[t31, t32], [t41, t42]];
    let tau = [tau1, tau2];
    for row in t {
        b.rule(RewriteRule::new(
            [row[1], row[0]],
            sc(Scalar::q_pow(-1), row[0], row[1]),
            "family-1",
        ));
    }
    for j in 0..2 {
        b.rule(RewriteRule::new(
            [t[1][j], t[0][j]],
            sc(Scalar::q_pow(1), t[0][j], t[1][j]),
            "family-2",
        ));
    }
    b.rule(RewriteRule::new([t42, t31], w(t31, t42), "family-3"));
    b.rule(RewriteRule::new(
        [t41, t32],
        &w(t32, t41) - &sc(c.clone(), t31, t42),
        "family-4",
    ));
    b.rule(RewriteRule::new(
        [tau2, tau1],
        sc(-Scalar::q_pow(1), tau1, tau2),
        "family-5",
    ));
    for row in t {
        for j in 0..2 {
            b.rule(RewriteRule::new(
                [tau[j], row[j]],
                sc(Scalar::q_pow(1), row[j], tau[j]),
                "family-6",
            ));
        }
    }
    for row in t {
        b.rule(RewriteRule::new([tau2, row[0]], w(row[0], tau2), "family-7"));
    }
    for row in t {
        b.rule(RewriteRule::new(
            [tau1, row[1]],
            &w(row[1], tau1) - &sc(c.clone(), row[0], tau2),
            "family-8",
        ));
    }
    b.build(true).expect("chiral rules are order-decreasing")
}

/// Substitutes chiral generator images into an abstract chiral polynomial.
pub fn substitute(
    p: &NCPoly,
    gens: &ChiralGenerators,
    l: &LocalizedAlgebra,
) -> Result<NCPoly> {
    let pres = l.presentation();
    let mut total = NCPoly::zero();
    for (w, c) in p.terms() {
        let mut acc = NCPoly::constant(c.clone());
        for &g in w.letters() {
            acc = pres.mul(&acc, gens.image(g))?;
        }
        total = &total + &acc;
    }
    Ok(total)
}

/// Verdict for one relation family.
#[derive(Clone, Debug)]
pub struct FamilyVerdict {
    pub family: usize,
    pub statement: &'static str,
    pub instances: usize,
    /// Printed residue of the first failing instance.
    pub witness: Option<String>,
}

impl FamilyVerdict {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Clone, Debug)]
pub struct PresentationReport {
    pub families: Vec<FamilyVerdict>,
}

impl PresentationReport {
    pub fn all_hold(&self) -> bool {
        self.families.iter().all(FamilyVerdict::holds)
    }
}

/// Substitutes the minor expressions into each relation of the chiral
/// presentation and tests the difference of both sides for zero.
pub fn verify_presentation(
    l: &LocalizedAlgebra,
    gens: &ChiralGenerators,
    alg: &QMatrixAlgebra,
    set: &MinorSet,
) -> Result<PresentationReport> {
    let relations = chiral_relations();
    let results = relations
        .par_iter()
        .map(|rel| -> Result<(usize, Option<String>)> {
            let diff = substitute(&(&rel.lhs - &rel.rhs), gens, l)?;
            let zero = l.is_zero(&diff, alg, set)?;
            Ok((
                rel.family,
                (!zero).then(|| l.presentation().display(&diff)),
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    let families = (1..=8)
        .map(|family| {
            let mine: Vec<_> = results.iter().filter(|(f, _)| *f == family).collect();
            FamilyVerdict {
                family,
                statement: CHIRAL_FAMILIES[family - 1],
                instances: mine.len(),
                witness: mine.iter().find_map(|(_, w)| w.clone()),
            }
        })
        .collect();
    Ok(PresentationReport { families })
}

/// Confluence of the abstract chiral presentation on its own, with its PBW
/// dimensions.
pub fn check_presentation_confluence() -> Result<(ConfluenceReport, Vec<u128>)> {
    let pres = build_chiral_abstract();
    let report = check_confluence(&pres)?;
    let dims = (0..=4).map(|d| pbw_dimension(&pres, d)).collect();
    Ok((report, dims))
}

/// All normal words of length `d`.
pub fn normal_words(pres: &AlgebraPresentation, d: usize) -> Vec<Word> {
    let n = pres.num_generators() as u16;
    let mut words = vec![Word::empty()];
    for _ in 0..d {
        let mut next = Vec::new();
        for w in &words {
            for g in 0..n {
                if let Some(&last) = w.letters().last() {
                    if pres.rule_for(last, g).is_some() {
                        continue;
                    }
                }
                let mut v = w.clone();
                v.0.push(g);
                next.push(v);
            }
        }
        words = next;
    }
    words
}

/// Row/column weight of an ambient word: counts of each row index and each
/// column index. The Manin relations preserve it.
fn ambient_weight(alg: &QMatrixAlgebra, w: &Word) -> [u8; 10] {
    let mut out = [0u8; 10];
    for &g in w.letters() {
        let (i, j) = alg.presentation().generator(g).index.unwrap();
        out[i as usize - 1] += 1;
        out[4 + j as usize] += 1;
    }
    out
}

/// Rank of a family of weight-homogeneous ambient polynomials, computed one
/// weight component at a time.
pub fn graded_rank(alg: &QMatrixAlgebra, polys: &[NCPoly]) -> usize {
    let mut groups: BTreeMap<[u8; 10], Vec<&NCPoly>> = BTreeMap::new();
    for p in polys {
        let Some(w) = p.leading_word() else { continue };
        debug_assert!(p.terms().all(|(x, _)| ambient_weight(alg, x) == ambient_weight(alg, w)));
        groups.entry(ambient_weight(alg, w)).or_default().push(p);
    }
    groups
        .values()
        .map(|g| linalg::rank(&linalg::coordinates(g)))
        .sum()
}

/// Degree-`d` dimension of the abstract chiral algebra versus the dimension
/// of the span of its image in the localized Grassmannian.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionComparison {
    pub degree: usize,
    pub abstract_dim: u128,
    pub image_dim: usize,
}

pub fn compare_dimensions(
    d: usize,
    l: &LocalizedAlgebra,
    gens: &ChiralGenerators,
    alg: &QMatrixAlgebra,
    set: &MinorSet,
) -> Result<DimensionComparison> {
    let pres = build_chiral_abstract();
    let words = normal_words(&pres, d);
    let images = words
        .par_iter()
        .map(|w| substitute(&NCPoly::term(Scalar::one(), w.clone()), gens, l))
        .collect::<Result<Vec<_>>>()?;
    let depth = images
        .iter()
        .map(|p| l.inverse_depth(p))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .max()
        .unwrap_or(0);
    let ambient = images
        .par_iter()
        .map(|p| l.to_ambient(p, depth, alg, set))
        .collect::<Result<Vec<_>>>()?;
    Ok(DimensionComparison {
        degree: d,
        abstract_dim: pbw_dimension(&pres, d),
        image_dim: graded_rank(alg, &ambient),
    })
}

/// Result of expanding `Δ(m)` as `Σ (cofactor) ⊗ D_kl`.
#[derive(Clone, Debug)]
pub struct TensorExpansionReport {
    pub minor: String,
    /// Cofactor per minor index, only nonzero ones.
    pub cofactors: Vec<(usize, NCPoly)>,
    /// First-slot word whose second slot left the minor span, if any.
    pub witness: Option<String>,
}

impl TensorExpansionReport {
    pub fn member(&self) -> bool {
        self.witness.is_none()
    }
}

/// Checks that the comultiplication of a minor lands in `M ⊗ Gr`.
pub fn coaction_membership(
    alg: &QMatrixAlgebra,
    set: &MinorSet,
    idx: usize,
) -> Result<TensorExpansionReport> {
    let pres = alg.presentation();
    let delta: TensorPoly = alg.comultiply(&set.minors[idx].value)?;
    let basis: Vec<NCPoly> = set.minors.iter().map(|m| m.value.clone()).collect();
    let mut cofactors: Vec<NCPoly> = vec![NCPoly::zero(); set.len()];
    for (left, right) in delta.right_slots() {
        let Some(coeffs) = linalg::solve_reduced(&right, &basis) else {
            return Ok(TensorExpansionReport {
                minor: set.label(idx),
                cofactors: Vec::new(),
                witness: Some(format!(
                    "{} ⊗ ({})",
                    pres.display_word(&left),
                    pres.display(&right)
                )),
            });
        };
        for (k, c) in coeffs.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let c = c
                .as_scalar()
                .cloned()
                .ok_or_else(|| Error::NotInSpan(format!("non-polynomial cofactor {c}")))?;
            cofactors[k].add_term(left.clone(), c);
        }
    }
    Ok(TensorExpansionReport {
        minor: set.label(idx),
        cofactors: cofactors
            .into_iter()
            .enumerate()
            .filter(|(_, p)| !p.is_zero())
            .collect(),
        witness: None,
    })
}

impl fmt::Display for DimensionComparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "degree {}: abstract {} / image {}",
            self.degree, self.abstract_dim, self.image_dim
        )
    }
}

/// Convenience bundle of everything the Minkowski checks need.
pub struct QuantumMinkowski {
    pub alg: QMatrixAlgebra,
    pub minors: MinorSet,
    pub table: QCommutationTable,
    pub localized: LocalizedAlgebra,
    pub chiral: ChiralGenerators,
}

impl QuantumMinkowski {
    pub fn build() -> Result<Self> {
        let alg = crate::supergroup::build_slq41();
        let minors = MinorSet::new(&alg)?;
        let table = derive_closure_table(&alg, &minors)?;
        let localized = localize_at_d12(&table, &minors)?;
        let chiral = build_chiral_generators(&localized)?;
        Ok(QuantumMinkowski {
            alg,
            minors,
            table,
            localized,
            chiral,
        })
    }
}
