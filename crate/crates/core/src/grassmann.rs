//! Supercommutative polynomials over Q(i), with a conjugation.
//!
//! A [`SuperPoly`] is a polynomial in commuting even variables and
//! anticommuting odd variables. Variables are plain ids; a [`Vars`] registry
//! supplies names and conjugate partners. A [`Frac`] divides by a polynomial
//! in even variables only, which is enough to invert every even element whose
//! body (odd-free part) is nonzero.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;
use smallvec::SmallVec;

use crate::algebra::Parity;
use crate::scalar::{forward_owned_binops, Gauss};

pub type VarId = u16;

/// A monomial: even variables with exponents, times an increasing product of
/// distinct odd variables.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    even: SmallVec<[(VarId, u32); 4]>,
    odd: SmallVec<[VarId; 4]>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn is_one(&self) -> bool {
        self.even.is_empty() && self.odd.is_empty()
    }

    pub fn even_part(&self) -> &[(VarId, u32)] {
        &self.even
    }

    pub fn odd_part(&self) -> &[VarId] {
        &self.odd
    }

    pub fn parity(&self) -> Parity {
        Parity::from_bit((self.odd.len() % 2) as u8)
    }

    pub fn degree(&self) -> u32 {
        self.even.iter().map(|&(_, e)| e).sum::<u32>() + self.odd.len() as u32
    }

    /// Product with sign, or `None` when an odd variable repeats.
    pub fn mul(&self, other: &Monomial) -> Option<(Monomial, bool)> {
        let mut even = self.even.clone();
        for &(v, e) in &other.even {
            match even.binary_search_by_key(&v, |&(w, _)| w) {
                Ok(pos) => even[pos].1 += e,
                Err(pos) => even.insert(pos, (v, e)),
            }
        }
        let (odd, negative) = sort_odd(self.odd.iter().chain(&other.odd).copied())?;
        Some((Monomial { even, odd }, negative))
    }
}

/// Sorts a product of odd variables, tracking the sign of the permutation.
fn sort_odd(vars: impl Iterator<Item = VarId>) -> Option<(SmallVec<[VarId; 4]>, bool)> {
    let mut v: SmallVec<[VarId; 4]> = vars.collect();
    let mut negative = false;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            negative = !negative;
            j -= 1;
        }
        if j > 0 && v[j - 1] == v[j] {
            return None;
        }
    }
    Some((v, negative))
}

/// Element of the free supercommutative algebra over Q(i).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SuperPoly {
    terms: BTreeMap<Monomial, Gauss>,
}

impl SuperPoly {
    pub fn zero() -> Self {
        SuperPoly::default()
    }

    pub fn one() -> Self {
        SuperPoly::constant(Gauss::one())
    }

    pub fn constant(c: Gauss) -> Self {
        let mut p = SuperPoly::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn from_int(n: i64) -> Self {
        SuperPoly::constant(Gauss::from_int(n))
    }

    pub fn even_var(v: VarId) -> Self {
        let mut p = SuperPoly::zero();
        p.add_term(
            Monomial {
                even: smallvec::smallvec![(v, 1)],
                odd: SmallVec::new(),
            },
            Gauss::one(),
        );
        p
    }

    pub fn odd_var(v: VarId) -> Self {
        let mut p = SuperPoly::zero();
        p.add_term(
            Monomial {
                even: SmallVec::new(),
                odd: smallvec::smallvec![v],
            },
            Gauss::one(),
        );
        p
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

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Gauss)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m: Monomial, c: Gauss) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    pub fn scale(&self, c: &Gauss) -> SuperPoly {
        if c.is_zero() {
            return SuperPoly::zero();
        }
        SuperPoly {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn as_constant(&self) -> Option<Gauss> {
        match self.terms.len() {
            0 => Some(Gauss::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    /// `Some(parity)` for a homogeneous element, `None` for mixed or zero.
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys().map(Monomial::parity);
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    pub fn has_odd(&self) -> bool {
        self.terms.keys().any(|m| !m.odd.is_empty())
    }

    /// Part free of odd variables.
    pub fn body(&self) -> SuperPoly {
        SuperPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.odd.is_empty())
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Sets every odd variable to zero.
    pub fn drop_odd(&self) -> SuperPoly {
        self.body()
    }

    /// Partial derivative in an even variable.
    pub fn diff_even(&self, v: VarId) -> SuperPoly {
        let mut out = SuperPoly::zero();
        for (m, c) in &self.terms {
            if let Ok(pos) = m.even.binary_search_by_key(&v, |&(w, _)| w) {
                let e = m.even[pos].1;
                let mut m2 = m.clone();
                if e == 1 {
                    m2.even.remove(pos);
                } else {
                    m2.even[pos].1 -= 1;
                }
                out.add_term(m2, c.scale_int(e as i64));
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> SuperPoly {
        (0..k).fold(SuperPoly::one(), |acc, _| &acc * self)
    }

    /// Substitutes ring elements for variables. `subst(v)` is consulted for
    /// every variable; odd variables must map to odd elements so that the
    /// monomial order of odd factors is respected.
    pub fn substitute<R: Ring>(&self, subst: &impl Fn(VarId) -> R, lift: impl Fn(&Gauss) -> R) -> R {
        let mut total = R::zero();
        for (m, c) in &self.terms {
            let mut acc = lift(c);
            for &(v, e) in &m.even {
                let x = subst(v);
                for _ in 0..e {
                    acc = acc.mul(&x);
                }
            }
            for &v in &m.odd {
                acc = acc.mul(&subst(v));
            }
            total = total.add(&acc);
        }
        total
    }

    /// Applies a map of variables to variables of the same parity, then a
    /// coefficient map, re-sorting odd factors with the appropriate sign.
    fn map_vars(
        &self,
        var: impl Fn(VarId) -> VarId,
        coeff: impl Fn(&Gauss) -> Gauss,
        reverse_odd: bool,
    ) -> SuperPoly {
        let mut out = SuperPoly::zero();
        for (m, c) in &self.terms {
            let mut even: SmallVec<[(VarId, u32); 4]> =
                m.even.iter().map(|&(v, e)| (var(v), e)).collect();
            even.sort_unstable();
            let mut merged: SmallVec<[(VarId, u32); 4]> = SmallVec::new();
            for (v, e) in even {
                match merged.last_mut() {
                    Some(last) if last.0 == v => last.1 += e,
                    _ => merged.push((v, e)),
                }
            }
            let mapped: SmallVec<[VarId; 4]> = if reverse_odd {
                m.odd.iter().rev().map(|&v| var(v)).collect()
            } else {
                m.odd.iter().map(|&v| var(v)).collect()
            };
            let Some((odd, negative)) = sort_odd(mapped.into_iter()) else {
                continue;
            };
            let c = coeff(c);
            out.add_term(
                Monomial { even: merged, odd },
                if negative { -c } else { c },
            );
        }
        out
    }
}

impl Add<&SuperPoly> for &SuperPoly {
    type Output = SuperPoly;
    fn add(self, rhs: &SuperPoly) -> SuperPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub<&SuperPoly> for &SuperPoly {
    type Output = SuperPoly;
    fn sub(self, rhs: &SuperPoly) -> SuperPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul<&SuperPoly> for &SuperPoly {
    type Output = SuperPoly;
    fn mul(self, rhs: &SuperPoly) -> SuperPoly {
        let mut out = SuperPoly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                if let Some((m, negative)) = a.mul(b) {
                    let c = x * y;
                    out.add_term(m, if negative { -c } else { c });
                }
            }
        }
        out
    }
}

impl Neg for &SuperPoly {
    type Output = SuperPoly;
    fn neg(self) -> SuperPoly {
        self.scale(&Gauss::from_int(-1))
    }
}

impl Neg for SuperPoly {
    type Output = SuperPoly;
    fn neg(self) -> SuperPoly {
        -&self
    }
}

forward_owned_binops!(SuperPoly, Add::add, Sub::sub, Mul::mul);

/// How the conjugation acts on products of odd elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Convention {
    /// `(ab)* = a* b*`: an antilinear algebra automorphism.
    #[default]
    Automorphism,
    /// `(ab)* = b* a*`: an antilinear anti-automorphism.
    Reversal,
}

#[derive(Clone, Debug)]
struct VarInfo {
    name: String,
    parity: Parity,
    partner: VarId,
}

/// Names, parities and conjugate partners of variables.
#[derive(Clone, Debug, Default)]
pub struct Vars {
    vars: Vec<VarInfo>,
    convention: Convention,
}

impl Vars {
    pub fn new(convention: Convention) -> Self {
        Vars {
            vars: Vec::new(),
            convention,
        }
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    fn push(&mut self, name: &str, parity: Parity) -> VarId {
        let id = self.vars.len() as VarId;
        self.vars.push(VarInfo {
            name: name.to_string(),
            parity,
            partner: id,
        });
        id
    }

    fn poly(&self, id: VarId) -> SuperPoly {
        match self.vars[id as usize].parity {
            Parity::Even => SuperPoly::even_var(id),
            Parity::Odd => SuperPoly::odd_var(id),
        }
    }

    /// A self-conjugate even variable.
    pub fn real(&mut self, name: &str) -> SuperPoly {
        let id = self.push(name, Parity::Even);
        self.poly(id)
    }

    /// A self-conjugate variable of the given parity.
    pub fn var(&mut self, name: &str, parity: Parity) -> SuperPoly {
        let id = self.push(name, parity);
        self.poly(id)
    }

    /// A variable together with its conjugate, `name` and `name~`.
    pub fn pair(&mut self, name: &str, parity: Parity) -> (SuperPoly, SuperPoly) {
        let a = self.push(name, parity);
        let b = self.push(&format!("{name}~"), parity);
        self.vars[a as usize].partner = b;
        self.vars[b as usize].partner = a;
        (self.poly(a), self.poly(b))
    }

    pub fn name(&self, id: VarId) -> &str {
        &self.vars[id as usize].name
    }

    pub fn parity(&self, id: VarId) -> Parity {
        self.vars[id as usize].parity
    }

    /// The antilinear conjugation under this registry's convention.
    pub fn conj(&self, p: &SuperPoly) -> SuperPoly {
        p.map_vars(
            |v| self.vars[v as usize].partner,
            Gauss::conj,
            self.convention == Convention::Reversal,
        )
    }

    pub fn display(&self, p: &SuperPoly) -> String {
        if p.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (idx, (m, c)) in p.terms.iter().enumerate() {
            let mut factors: Vec<String> = Vec::new();
            for &(v, e) in &m.even {
                factors.push(if e == 1 {
                    self.name(v).to_string()
                } else {
                    format!("{}^{e}", self.name(v))
                });
            }
            factors.extend(m.odd.iter().map(|&v| self.name(v).to_string()));
            let neg = c.is_real() && c.re.is_negative();
            let c = if neg { -c } else { c.clone() };
            let body = match (factors.is_empty(), c.is_one()) {
                (true, _) => c.to_string(),
                (false, true) => factors.join("*"),
                (false, false) => format!("{c}*{}", factors.join("*")),
            };
            match (idx, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            out.push_str(&body);
        }
        out
    }
}

/// Commutative-enough ring interface used by the small matrix code.
pub trait Ring: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
}

impl Ring for Gauss {
    fn zero() -> Self {
        Gauss::zero()
    }
    fn one() -> Self {
        Gauss::one()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Gauss::is_zero(self)
    }
}

impl Ring for SuperPoly {
    fn zero() -> Self {
        SuperPoly::zero()
    }
    fn one() -> Self {
        SuperPoly::one()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        SuperPoly::is_zero(self)
    }
}

/// Graded lexicographic comparison of the even parts, ties broken by the
/// odd part. Compatible with multiplication by even monomials.
fn cmp_grlex(a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
    let da: u32 = a.even.iter().map(|&(_, e)| e).sum();
    let db: u32 = b.even.iter().map(|&(_, e)| e).sum();
    da.cmp(&db)
        .then_with(|| {
            let (mut i, mut j) = (0, 0);
            loop {
                match (a.even.get(i), b.even.get(j)) {
                    (None, None) => return std::cmp::Ordering::Equal,
                    (Some(_), None) => return std::cmp::Ordering::Greater,
                    (None, Some(_)) => return std::cmp::Ordering::Less,
                    (Some(&(va, ea)), Some(&(vb, eb))) => {
                        if va != vb {
                            return if va < vb {
                                std::cmp::Ordering::Greater
                            } else {
                                std::cmp::Ordering::Less
                            };
                        }
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                        i += 1;
                        j += 1;
                    }
                }
            }
        })
        .then_with(|| a.odd.cmp(&b.odd))
}

impl SuperPoly {
    fn leading(&self) -> Option<(&Monomial, &Gauss)> {
        self.terms.iter().max_by(|x, y| cmp_grlex(x.0, y.0))
    }

    /// Exact quotient by a polynomial in even variables, if it exists.
    pub fn div_exact(&self, divisor: &SuperPoly) -> Option<SuperPoly> {
        if divisor.has_odd() {
            return None;
        }
        let (lm, lc) = divisor.leading()?;
        let lc_inv = lc.inv()?;
        let mut rem = self.clone();
        let mut quot = SuperPoly::zero();
        while let Some((m, c)) = rem.leading() {
            let mut even: SmallVec<[(VarId, u32); 4]> = SmallVec::new();
            for &(v, e) in &m.even {
                let need = lm
                    .even
                    .iter()
                    .find(|&&(w, _)| w == v)
                    .map_or(0, |&(_, f)| f);
                if e < need {
                    return None;
                }
                if e > need {
                    even.push((v, e - need));
                }
            }
            for &(w, _) in &lm.even {
                if !m.even.iter().any(|&(v, _)| v == w) {
                    return None;
                }
            }
            let t = SuperPoly {
                terms: std::iter::once((
                    Monomial {
                        even,
                        odd: m.odd.clone(),
                    },
                    c * &lc_inv,
                ))
                .collect(),
            };
            rem = &rem - &(&t * divisor);
            quot = &quot + &t;
        }
        Some(quot)
    }

    /// Scales so that the grlex-leading coefficient is one; returns the
    /// factor removed.
    fn monic(&self) -> (SuperPoly, Gauss) {
        match self.leading() {
            Some((_, c)) => {
                let c = c.clone();
                (self.scale(&c.inv().expect("nonzero")), c)
            }
            None => (self.clone(), Gauss::zero()),
        }
    }
}

/// `num / prod den_k^e_k` with every denominator factor a monic polynomial
/// in even variables.
///
/// Denominators are kept factored so that sums use the least common multiple
/// of the factor lists; numerators are divided by factors whenever that is
/// exact. Equality is decided by cross-multiplication over the common
/// denominator.
#[derive(Clone, Debug)]
pub struct Frac {
    num: SuperPoly,
    den: Vec<(SuperPoly, u32)>,
}

impl Frac {
    pub fn new(num: SuperPoly, den: SuperPoly) -> Option<Self> {
        if den.is_zero() || den.has_odd() {
            return None;
        }
        Some(Frac::from_poly(num).with_factor(den, 1))
    }

    pub fn from_poly(p: SuperPoly) -> Self {
        Frac {
            num: p,
            den: Vec::new(),
        }
    }

    pub fn constant(c: Gauss) -> Self {
        Frac::from_poly(SuperPoly::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        Frac::constant(Gauss::from_int(n))
    }

    pub fn numer(&self) -> &SuperPoly {
        &self.num
    }

    /// The denominator, expanded.
    pub fn denom(&self) -> SuperPoly {
        self.den
            .iter()
            .fold(SuperPoly::one(), |acc, (f, e)| &acc * &f.pow(*e))
    }

    /// Divides by `factor^e`, splitting off known factors and cancelling
    /// against the numerator where possible.
    fn with_factor(mut self, factor: SuperPoly, e: u32) -> Self {
        if self.num.is_zero() || e == 0 {
            return self;
        }
        let mut factor = factor;
        for (f, _) in self.den.clone() {
            while let Some(q) = factor.div_exact(&f) {
                if q.as_constant().is_some() && !q.is_zero() {
                    break;
                }
                factor = q;
                self = self.with_factor(f.clone(), e);
            }
        }
        let (factor, c) = factor.monic();
        self.num = self.num.scale(&c.inv().expect("nonzero factor"));
        if factor.as_constant().is_some() {
            return self;
        }
        let mut e = e;
        while e > 0 {
            match self.num.div_exact(&factor) {
                Some(q) => {
                    self.num = q;
                    e -= 1;
                }
                None => break,
            }
        }
        if e > 0 {
            match self.den.iter_mut().find(|(f, _)| *f == factor) {
                Some(slot) => slot.1 += e,
                None => self.den.push((factor, e)),
            }
        }
        self
    }

    /// Least common denominator of two fractions, with the cofactors that
    /// bring each numerator over it.
    fn common(&self, other: &Frac) -> (SuperPoly, SuperPoly) {
        let mut left = self.num.clone();
        let mut right = other.num.clone();
        for (f, e) in &self.den {
            let o = other
                .den
                .iter()
                .find(|(g, _)| g == f)
                .map_or(0, |&(_, k)| k);
            if o > *e {
                left = &left * &f.pow(o - e);
            } else if *e > o {
                right = &right * &f.pow(e - o);
            }
        }
        for (g, k) in &other.den {
            if !self.den.iter().any(|(f, _)| f == g) {
                left = &left * &g.pow(*k);
            }
        }
        (left, right)
    }

    fn lcm_den(&self, other: &Frac) -> Vec<(SuperPoly, u32)> {
        let mut den = self.den.clone();
        for (g, k) in &other.den {
            match den.iter_mut().find(|(f, _)| f == g) {
                Some(slot) => slot.1 = slot.1.max(*k),
                None => den.push((g.clone(), *k)),
            }
        }
        den
    }

    /// Cancels numerator against each denominator factor.
    fn reduce(mut self) -> Self {
        if self.num.is_zero() {
            self.den.clear();
            return self;
        }
        for slot in self.den.iter_mut() {
            while slot.1 > 0 {
                match self.num.div_exact(&slot.0) {
                    Some(q) => {
                        self.num = q;
                        slot.1 -= 1;
                    }
                    None => break,
                }
            }
        }
        self.den.retain(|(_, e)| *e > 0);
        self
    }

    /// Inverse of an even element with invertible body:
    /// `x^-1 = sum_k (-n)^k / b^(k+1)` for `x = b + n`, `n` nilpotent.
    pub fn inv(&self) -> Option<Frac> {
        if self.num.parity() != Some(Parity::Even) {
            return None;
        }
        let body = self.num.body();
        if body.is_zero() {
            return None;
        }
        let nil = &self.num - &body;
        let mut powers = vec![SuperPoly::one()];
        loop {
            let next = &powers[powers.len() - 1] * &(-&nil);
            if next.is_zero() {
                break;
            }
            powers.push(next);
        }
        let k = powers.len() as u32;
        let mut num = SuperPoly::zero();
        for (j, p) in powers.iter().enumerate() {
            num = &num + &(p * &body.pow(k - 1 - j as u32));
        }
        let num = &num * &self.denom();
        Some(Frac::from_poly(num).with_factor(body, k))
    }

    pub fn div(&self, other: &Frac) -> Option<Frac> {
        Some(Ring::mul(self, &other.inv()?))
    }

    pub fn scale(&self, c: &Gauss) -> Frac {
        let mut out = self.clone();
        out.num = out.num.scale(c);
        if out.num.is_zero() {
            out.den.clear();
        }
        out
    }

    /// Applies a ring map that preserves even-ness to numerator and every
    /// denominator factor.
    pub fn map_parts(&self, f: impl Fn(&SuperPoly) -> SuperPoly) -> Frac {
        self.den
            .iter()
            .fold(Frac::from_poly(f(&self.num)), |acc, (g, e)| {
                acc.with_factor(f(g), *e)
            })
    }

    pub fn conj(&self, vars: &Vars) -> Frac {
        self.map_parts(|p| vars.conj(p))
    }

    pub fn drop_odd(&self) -> Frac {
        self.map_parts(SuperPoly::drop_odd)
    }

    pub fn display(&self, vars: &Vars) -> String {
        if self.den.is_empty() {
            return vars.display(&self.num);
        }
        let den: Vec<String> = self
            .den
            .iter()
            .map(|(f, e)| {
                if *e == 1 {
                    format!("({})", vars.display(f))
                } else {
                    format!("({})^{e}", vars.display(f))
                }
            })
            .collect();
        format!("({}) / {}", vars.display(&self.num), den.join("*"))
    }
}

impl PartialEq for Frac {
    fn eq(&self, other: &Frac) -> bool {
        let (a, b) = self.common(other);
        a == b
    }
}

impl From<SuperPoly> for Frac {
    fn from(p: SuperPoly) -> Frac {
        Frac::from_poly(p)
    }
}

impl Ring for Frac {
    fn zero() -> Self {
        Frac::from_poly(SuperPoly::zero())
    }
    fn one() -> Self {
        Frac::from_poly(SuperPoly::one())
    }
    fn add(&self, o: &Self) -> Self {
        if self.num.is_zero() {
            return o.clone();
        }
        if o.num.is_zero() {
            return self.clone();
        }
        let (a, b) = self.common(o);
        Frac {
            num: &a + &b,
            den: self.lcm_den(o),
        }
        .reduce()
    }
    fn sub(&self, o: &Self) -> Self {
        Ring::add(self, &Ring::neg(o))
    }
    fn mul(&self, o: &Self) -> Self {
        if self.num.is_zero() || o.num.is_zero() {
            return <Frac as Ring>::zero();
        }
        let mut den = self.den.clone();
        for (g, k) in &o.den {
            match den.iter_mut().find(|(f, _)| f == g) {
                Some(slot) => slot.1 += k,
                None => den.push((g.clone(), *k)),
            }
        }
        Frac {
            num: &self.num * &o.num,
            den,
        }
        .reduce()
    }
    fn neg(&self) -> Self {
        Frac {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .even
            .iter()
            .map(|&(v, e)| if e == 1 { format!("v{v}") } else { format!("v{v}^{e}") })
            .collect();
        parts.extend(self.odd.iter().map(|v| format!("v{v}")));
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_variables_anticommute_and_square_to_zero() {
        let mut v = Vars::new(Convention::Automorphism);
        let a = v.var("a", Parity::Odd);
        let b = v.var("b", Parity::Odd);
        assert_eq!(&a * &b, -(&b * &a));
        assert!((&a * &a).is_zero());
        assert_eq!((&a * &b).parity(), Some(Parity::Even));
    }

    #[test]
    fn conjugation_conventions_differ_by_reversal_sign() {
        let mut auto = Vars::new(Convention::Automorphism);
        let (t, tc) = auto.pair("t", Parity::Odd);
        let (s, sc) = auto.pair("s", Parity::Odd);
        let mut rev = auto.clone();
        rev.convention = Convention::Reversal;
        let ts = &t * &s;
        assert_eq!(auto.conj(&ts), &tc * &sc);
        assert_eq!(rev.conj(&ts), &sc * &tc);
        for vars in [&auto, &rev] {
            assert_eq!(vars.conj(&vars.conj(&ts)), ts);
        }
    }

    #[test]
    fn conjugation_is_antilinear() {
        let mut v = Vars::new(Convention::Automorphism);
        let x = v.real("x");
        let p = x.scale(&Gauss::i());
        assert_eq!(v.conj(&p), x.scale(&-Gauss::i()));
    }

    #[test]
    fn inverse_with_nilpotent_part() {
        let mut v = Vars::new(Convention::Automorphism);
        let b = v.real("b");
        let e1 = v.var("e1", Parity::Odd);
        let e2 = v.var("e2", Parity::Odd);
        let x = Frac::from_poly(&b + &(&e1 * &e2));
        let inv = x.inv().unwrap();
        assert_eq!(Ring::mul(&x, &inv), <Frac as Ring>::one());
        assert!(Frac::from_poly(e1).inv().is_none());
    }

    #[test]
    fn derivative() {
        let mut v = Vars::new(Convention::Automorphism);
        let x = v.real("x");
        let y = v.real("y");
        let p = &(&x * &x) * &y;
        assert_eq!(p.diff_even(0), (&x * &y).scale(&Gauss::from_int(2)));
        assert_eq!(p.diff_even(1), &x * &x);
    }
}
