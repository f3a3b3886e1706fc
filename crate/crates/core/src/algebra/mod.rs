//! Parity-graded free algebras with quadratic rewriting.
//!
//! An [`AlgebraPresentation`] fixes a totally ordered list of generators and a
//! set of [`RewriteRule`]s whose left-hand sides are words of length two.
//! Words are compared graded-lexicographically by generator rank; every rule
//! rewrites its left-hand side into strictly smaller words, so reduction
//! terminates.

mod confluence;
pub mod linalg;
mod pbw;
mod tensor;

pub use confluence::{check_confluence, ConfluenceReport, Overlap};
pub use linalg::{express_in_basis, span_rank};
pub use pbw::{pbw_dimension, supercommutative_count};
pub use tensor::TensorPoly;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::scalar::{forward_owned_binops, Gauss, Scalar};

/// Z/2 grading.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(bit: u8) -> Self {
        if bit % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn sum(self, other: Parity) -> Parity {
        Parity::from_bit(self.bit() + other.bit())
    }
}

/// Koszul sign `(-1)^{|a||b|}`.
pub fn koszul_sign(a: Parity, b: Parity) -> i64 {
    if a.is_odd() && b.is_odd() {
        -1
    } else {
        1
    }
}

/// A generator: a symbol tag with an optional index pair, a parity and its
/// rank in the total generator order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub name: String,
    pub index: Option<(u8, u8)>,
    pub parity: Parity,
    pub rank: u16,
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.index {
            Some((i, j)) => write!(f, "{}[{},{}]", self.name, i, j),
            None => write!(f, "{}", self.name),
        }
    }
}

/// A word in the generators, stored as ranks. The empty word is the unit.
///
/// Ordering is graded-lexicographic: shorter words are smaller, words of
/// equal length compare letter by letter.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(pub SmallVec<[u16; 12]>);

impl Word {
    pub fn empty() -> Self {
        Word(SmallVec::new())
    }

    pub fn from_slice(letters: &[u16]) -> Self {
        Word(SmallVec::from_slice(letters))
    }

    pub fn letters(&self) -> &[u16] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.as_slice().cmp(other.0.as_slice()))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A noncommutative polynomial: a finite map from words to nonzero scalars.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct NCPoly {
    terms: BTreeMap<Word, Scalar>,
}

impl NCPoly {
    pub fn zero() -> Self {
        NCPoly::default()
    }

    pub fn one() -> Self {
        NCPoly::term(Scalar::one(), Word::empty())
    }

    pub fn constant(c: Scalar) -> Self {
        NCPoly::term(c, Word::empty())
    }

    pub fn term(c: Scalar, w: Word) -> Self {
        let mut p = NCPoly::zero();
        p.add_term(w, c);
        p
    }

    pub fn word(letters: &[u16]) -> Self {
        NCPoly::term(Scalar::one(), Word::from_slice(letters))
    }

    pub fn generator(rank: u16) -> Self {
        NCPoly::word(&[rank])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn leading_word(&self) -> Option<&Word> {
        self.terms.keys().next_back()
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> NCPoly {
        if c.is_zero() {
            return NCPoly::zero();
        }
        NCPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, a)| (w.clone(), a * c))
                .collect(),
        }
    }

    /// Maps every coefficient through `f`, dropping zeros.
    pub fn map_coefficients(&self, f: impl Fn(&Scalar) -> Scalar) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c));
        }
        out
    }

    /// Largest word length among the terms.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Word::len).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut lens = self.terms.keys().map(Word::len);
        match lens.next() {
            None => true,
            Some(first) => lens.all(|l| l == first),
        }
    }

    pub(crate) fn into_terms(self) -> BTreeMap<Word, Scalar> {
        self.terms
    }

    pub(crate) fn from_map(terms: BTreeMap<Word, Scalar>) -> Self {
        NCPoly { terms }
    }
}

impl FromIterator<(Word, Scalar)> for NCPoly {
    fn from_iter<I: IntoIterator<Item = (Word, Scalar)>>(iter: I) -> Self {
        let mut p = NCPoly::zero();
        for (w, c) in iter {
            p.add_term(w, c);
        }
        p
    }
}

impl Add<&NCPoly> for &NCPoly {
    type Output = NCPoly;
    fn add(self, rhs: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub<&NCPoly> for &NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }
}

impl Mul<&NCPoly> for &NCPoly {
    type Output = NCPoly;
    /// Free (unreduced) product: concatenation of words.
    fn mul(self, rhs: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a.concat(b), ca * cb);
            }
        }
        out
    }
}

impl Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        self.scale(&Scalar::from_int(-1))
    }
}

impl Neg for NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        -&self
    }
}

forward_owned_binops!(NCPoly, Add::add, Sub::sub, Mul::mul);

/// A rewrite rule `lhs -> rhs` with a length-two left-hand side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule {
    pub lhs: [u16; 2],
    pub rhs: NCPoly,
    /// Free-form label naming the relation family the rule comes from.
    pub family: String,
}

impl RewriteRule {
    pub fn new(lhs: [u16; 2], rhs: NCPoly, family: impl Into<String>) -> Self {
        RewriteRule {
            lhs,
            rhs,
            family: family.into(),
        }
    }

    pub fn lhs_word(&self) -> Word {
        Word::from_slice(&self.lhs)
    }

    pub fn is_degree_preserving(&self) -> bool {
        self.rhs.terms().all(|(w, _)| w.len() == 2)
    }
}

/// Generators, rewrite rules indexed by left-hand side, and the odd-square
/// convention.
#[derive(Clone, Debug)]
pub struct AlgebraPresentation {
    name: String,
    generators: Vec<Generator>,
    rules: Vec<RewriteRule>,
    rule_index: Vec<Option<u32>>,
    odd_squares_vanish: bool,
}

/// Default budget of rule applications for a single normal-form call.
pub const DEFAULT_STEP_BUDGET: usize = 20_000_000;

impl AlgebraPresentation {
    pub fn builder(name: impl Into<String>) -> PresentationBuilder {
        PresentationBuilder {
            name: name.into(),
            generators: Vec::new(),
            rules: Vec::new(),
            check_order: true,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn generator(&self, rank: u16) -> &Generator {
        &self.generators[rank as usize]
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn odd_squares_vanish(&self) -> bool {
        self.odd_squares_vanish
    }

    /// Looks up a generator by tag and index.
    pub fn find(&self, name: &str, index: Option<(u8, u8)>) -> Option<u16> {
        self.generators
            .iter()
            .find(|g| g.name == name && g.index == index)
            .map(|g| g.rank)
    }

    /// Like [`find`](Self::find) but returns the generator as a polynomial.
    pub fn gen(&self, name: &str, index: Option<(u8, u8)>) -> Result<NCPoly> {
        self.find(name, index).map(NCPoly::generator).ok_or_else(|| {
            Error::UnknownGenerator(match index {
                Some((i, j)) => format!("{name}[{i},{j}]"),
                None => name.to_string(),
            })
        })
    }

    pub fn rule_for(&self, a: u16, b: u16) -> Option<&RewriteRule> {
        let n = self.generators.len();
        self.rule_index[a as usize * n + b as usize].map(|i| &self.rules[i as usize])
    }

    pub fn word_parity(&self, w: &Word) -> Parity {
        w.letters().iter().fold(Parity::Even, |p, &g| {
            p.sum(self.generators[g as usize].parity)
        })
    }

    /// Parity of a polynomial if all its terms agree.
    pub fn poly_parity(&self, p: &NCPoly) -> Option<Parity> {
        let mut parities = p.terms().map(|(w, _)| self.word_parity(w));
        let first = parities.next().unwrap_or(Parity::Even);
        parities.all(|x| x == first).then_some(first)
    }

    fn first_redex(&self, w: &Word) -> Option<(usize, &RewriteRule)> {
        let l = w.letters();
        (0..l.len().saturating_sub(1)).find_map(|i| self.rule_for(l[i], l[i + 1]).map(|r| (i, r)))
    }

    pub fn is_normal_word(&self, w: &Word) -> bool {
        self.first_redex(w).is_none()
    }

    /// Normal form of `p` under the rewrite system.
    pub fn normal_form(&self, p: &NCPoly) -> Result<NCPoly> {
        self.normal_form_with_budget(p, DEFAULT_STEP_BUDGET)
    }

    /// Normal form with an explicit bound on the number of rule
    /// applications.
    ///
    /// The largest pending word is always reduced first. Rules only produce
    /// smaller words, so a word that has been found irreducible is never
    /// revisited and like terms are combined before they are expanded.
    pub fn normal_form_with_budget(&self, p: &NCPoly, budget: usize) -> Result<NCPoly> {
        let mut pending = p.clone().into_terms();
        let mut done: BTreeMap<Word, Scalar> = BTreeMap::new();
        let mut steps = 0usize;
        while let Some((w, c)) = pending.pop_last() {
            let Some((pos, rule)) = self.first_redex(&w) else {
                done.insert(w, c);
                continue;
            };
            steps += 1;
            if steps > budget {
                return Err(Error::StepBudgetExceeded { budget });
            }
            let letters = w.letters();
            for (rw, rc) in rule.rhs.terms() {
                let mut nw: SmallVec<[u16; 12]> = SmallVec::with_capacity(letters.len());
                nw.extend_from_slice(&letters[..pos]);
                nw.extend_from_slice(rw.letters());
                nw.extend_from_slice(&letters[pos + 2..]);
                let coeff = &c * rc;
                let key = Word(nw);
                debug_assert!(done.get(&key).is_none() || key < w);
                add_into(&mut pending, key, coeff);
            }
        }
        Ok(NCPoly::from_map(done))
    }

    /// Normal form of the product `a * b`.
    pub fn mul(&self, a: &NCPoly, b: &NCPoly) -> Result<NCPoly> {
        self.normal_form(&(a * b))
    }

    /// Normal form of a product of several factors, reducing after each
    /// multiplication.
    pub fn product(&self, factors: &[&NCPoly]) -> Result<NCPoly> {
        let mut acc = NCPoly::one();
        for f in factors {
            acc = self.mul(&acc, f)?;
        }
        Ok(acc)
    }

    /// Prints a polynomial in the canonical expression grammar.
    pub fn display(&self, p: &NCPoly) -> String {
        format_poly(p, |w| self.display_word(w))
    }

    pub fn display_word(&self, w: &Word) -> String {
        w.letters()
            .iter()
            .map(|&g| self.generators[g as usize].to_string())
            .collect::<Vec<_>>()
            .join("*")
    }
}

pub(crate) fn add_into(map: &mut BTreeMap<Word, Scalar>, w: Word, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match map.entry(w) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let sum = e.get() + &c;
            if sum.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
    }
}

/// Formats `sum c_w * w` with terms in decreasing word order.
pub(crate) fn format_poly(p: &NCPoly, word: impl Fn(&Word) -> String) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (w, c)) in p.terms().rev().enumerate() {
        let (neg, body) = format_term(c, &word(w), w.is_empty());
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    out
}

/// Formats one `coefficient * word` term; returns whether it is negated.
pub(crate) fn format_term(c: &Scalar, word: &str, unit_word: bool) -> (bool, String) {
    let (neg, c) = match c.as_monomial() {
        Some((g, _)) if g.is_real() && num_traits::Signed::is_negative(&g.re) => (true, -c),
        _ => (false, c.clone()),
    };
    let body = if unit_word {
        if c.needs_parens() && neg {
            format!("({c})")
        } else {
            c.to_string()
        }
    } else if c.is_one() {
        word.to_string()
    } else if c.needs_parens() {
        format!("({c})*{word}")
    } else {
        format!("{c}*{word}")
    };
    (neg, body)
}

/// Incremental construction of an [`AlgebraPresentation`].
pub struct PresentationBuilder {
    name: String,
    generators: Vec<Generator>,
    rules: Vec<RewriteRule>,
    check_order: bool,
}

impl PresentationBuilder {
    /// Appends a generator; its rank is its position.
    pub fn generator(&mut self, name: &str, index: Option<(u8, u8)>, parity: Parity) -> u16 {
        let rank = self.generators.len() as u16;
        self.generators.push(Generator {
            name: name.to_string(),
            index,
            parity,
            rank,
        });
        rank
    }

    pub fn rule(&mut self, rule: RewriteRule) -> &mut Self {
        self.rules.push(rule);
        self
    }

    /// Skips the order check on rules. Only useful to construct malformed
    /// systems, e.g. to exercise the termination guard.
    pub fn unchecked(&mut self) -> &mut Self {
        self.check_order = false;
        self
    }

    fn describe(&self, w: &Word) -> String {
        w.letters()
            .iter()
            .map(|&g| self.generators[g as usize].to_string())
            .collect::<Vec<_>>()
            .join("*")
    }

    pub fn build(&self, odd_squares_vanish: bool) -> Result<AlgebraPresentation> {
        let n = self.generators.len();
        let mut rules = self.rules.clone();
        if odd_squares_vanish {
            for g in &self.generators {
                if g.parity.is_odd() {
                    rules.push(RewriteRule::new([g.rank, g.rank], NCPoly::zero(), "odd-square"));
                }
            }
        }
        let parity = |w: &Word| {
            w.letters().iter().fold(Parity::Even, |p, &g| {
                p.sum(self.generators[g as usize].parity)
            })
        };
        let mut rule_index = vec![None; n * n];
        for (idx, r) in rules.iter().enumerate() {
            let [a, b] = r.lhs;
            if a as usize >= n || b as usize >= n {
                return Err(Error::UnknownGenerator(format!("rank {a} or {b}")));
            }
            let lhs = r.lhs_word();
            let slot = &mut rule_index[a as usize * n + b as usize];
            if slot.is_some() {
                return Err(Error::DuplicateRule {
                    lhs: self.describe(&lhs),
                });
            }
            *slot = Some(idx as u32);
            for (w, _) in r.rhs.terms() {
                if w.letters().iter().any(|&g| g as usize >= n) {
                    return Err(Error::UnknownGenerator(self.describe(&lhs)));
                }
                if self.check_order && *w >= lhs {
                    return Err(Error::RuleNotDecreasing {
                        lhs: self.describe(&lhs),
                        word: self.describe(w),
                    });
                }
                if self.check_order && parity(w) != parity(&lhs) {
                    return Err(Error::ParityMismatch {
                        lhs: self.describe(&lhs),
                    });
                }
            }
        }
        Ok(AlgebraPresentation {
            name: self.name.clone(),
            generators: self.generators.clone(),
            rules,
            rule_index,
            odd_squares_vanish,
        })
    }
}

/// Convenience: `c * q^k` as a scalar with integer `c`.
pub fn cq(c: i64, k: i32) -> Scalar {
    Scalar::monomial(Gauss::from_int(c), k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_gen() -> AlgebraPresentation {
        let mut b = AlgebraPresentation::builder("plane");
        let x = b.generator("x", None, Parity::Even);
        let y = b.generator("y", None, Parity::Even);
        // y x -> q x y
        b.rule(RewriteRule::new([y, x], NCPoly::term(cq(1, 1), Word::from_slice(&[x, y])), "q"));
        b.build(false).unwrap()
    }

    #[test]
    fn graded_lex_order() {
        let a = Word::from_slice(&[3]);
        let b = Word::from_slice(&[0, 0]);
        let c = Word::from_slice(&[0, 1]);
        assert!(a < b && b < c);
        assert!(Word::empty() < a);
    }

    #[test]
    fn quantum_plane_reordering() {
        let alg = two_gen();
        let p = NCPoly::word(&[1, 1, 0]);
        // y y x = q^2 x y y
        let nf = alg.normal_form(&p).unwrap();
        assert_eq!(nf, NCPoly::term(cq(1, 2), Word::from_slice(&[0, 1, 1])));
        assert_eq!(alg.display(&nf), "q^2*x*y*y");
    }

    #[test]
    fn non_decreasing_rule_is_rejected() {
        let mut b = AlgebraPresentation::builder("bad");
        let x = b.generator("x", None, Parity::Even);
        let y = b.generator("y", None, Parity::Even);
        b.rule(RewriteRule::new([x, y], NCPoly::word(&[y, x]), "bad"));
        assert!(matches!(b.build(false), Err(Error::RuleNotDecreasing { .. })));
    }

    #[test]
    fn step_budget_guards_non_termination() {
        let mut b = AlgebraPresentation::builder("loop");
        let x = b.generator("x", None, Parity::Even);
        let y = b.generator("y", None, Parity::Even);
        b.unchecked()
            .rule(RewriteRule::new([x, y], NCPoly::word(&[y, x]), "up"))
            .rule(RewriteRule::new([y, x], NCPoly::word(&[x, y]), "down"));
        let alg = b.build(false).unwrap();
        let err = alg.normal_form_with_budget(&NCPoly::word(&[y, x]), 1000);
        assert_eq!(err, Err(Error::StepBudgetExceeded { budget: 1000 }));
    }

    #[test]
    fn duplicate_lhs_rejected() {
        let mut b = AlgebraPresentation::builder("dup");
        let x = b.generator("x", None, Parity::Even);
        let y = b.generator("y", None, Parity::Even);
        b.rule(RewriteRule::new([y, x], NCPoly::word(&[x, y]), "a"));
        b.rule(RewriteRule::new([y, x], NCPoly::zero(), "b"));
        assert!(matches!(b.build(false), Err(Error::DuplicateRule { .. })));
    }

    #[test]
    fn odd_square_rule_added() {
        let mut b = AlgebraPresentation::builder("ext");
        let t = b.generator("t", None, Parity::Odd);
        let alg = b.build(true).unwrap();
        assert!(alg.normal_form(&NCPoly::word(&[t, t])).unwrap().is_zero());
        assert_eq!(alg.rules().len(), 1);
    }
}
