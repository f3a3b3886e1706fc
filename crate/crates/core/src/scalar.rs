//! Exact coefficients.
//!
//! [`Gauss`] is an element of the Gaussian rationals Q(i). [`Scalar`] is a
//! Laurent polynomial in `q` with Gaussian-rational coefficients, i.e. an
//! element of Q(i)[q, q^-1]. [`RatFunc`] is a reduced fraction of two
//! scalars, an element of the function field Q(i)(q).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A Gaussian rational `re + im*i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Gauss {
    pub re: BigRational,
    pub im: BigRational,
}

impl Gauss {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Gauss { re, im }
    }

    pub fn zero() -> Self {
        Gauss::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        Gauss::from_int(1)
    }

    pub fn i() -> Self {
        Gauss::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Gauss::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Gauss::new(
            BigRational::new(BigInt::from(num), BigInt::from(den)),
            BigRational::zero(),
        )
    }

    pub fn gaussian(re: i64, im: i64) -> Self {
        Gauss::new(
            BigRational::from_integer(BigInt::from(re)),
            BigRational::from_integer(BigInt::from(im)),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Gauss::new(self.re.clone(), -&self.im)
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let norm = &self.re * &self.re + &self.im * &self.im;
        Some(Gauss::new(&self.re / &norm, -&self.im / &norm))
    }

    pub fn scale_int(&self, n: i64) -> Self {
        let n = BigRational::from_integer(BigInt::from(n));
        Gauss::new(&self.re * &n, &self.im * &n)
    }

    /// `true` when the value is an integer combination of 1 and i.
    pub fn is_gaussian_integer(&self) -> bool {
        self.re.is_integer() && self.im.is_integer()
    }

    fn fmt_rational(r: &BigRational) -> String {
        if r.is_integer() {
            r.numer().to_string()
        } else {
            format!("{}/{}", r.numer(), r.denom())
        }
    }
}

impl fmt::Display for Gauss {
    /// Prints in the expression grammar: `3`, `-1/2`, `i`, `-2*i`, `(1 + i)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", Gauss::fmt_rational(&self.re));
        }
        let imag = if self.im.is_one() {
            "i".to_string()
        } else if (-&self.im).is_one() {
            "-i".to_string()
        } else {
            format!("{}*i", Gauss::fmt_rational(&self.im))
        };
        if self.re.is_zero() {
            write!(f, "{imag}")
        } else if self.im.is_negative() {
            write!(
                f,
                "({} - {})",
                Gauss::fmt_rational(&self.re),
                imag.trim_start_matches('-')
            )
        } else {
            write!(f, "({} + {})", Gauss::fmt_rational(&self.re), imag)
        }
    }
}

impl Add<&Gauss> for &Gauss {
    type Output = Gauss;
    fn add(self, rhs: &Gauss) -> Gauss {
        Gauss::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub<&Gauss> for &Gauss {
    type Output = Gauss;
    fn sub(self, rhs: &Gauss) -> Gauss {
        Gauss::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul<&Gauss> for &Gauss {
    type Output = Gauss;
    fn mul(self, rhs: &Gauss) -> Gauss {
        if self.im.is_zero() && rhs.im.is_zero() {
            return Gauss::new(&self.re * &rhs.re, BigRational::zero());
        }
        Gauss::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for &Gauss {
    type Output = Gauss;
    fn neg(self) -> Gauss {
        Gauss::new(-&self.re, -&self.im)
    }
}

impl Neg for Gauss {
    type Output = Gauss;
    fn neg(self) -> Gauss {
        -&self
    }
}

macro_rules! forward_owned_binops {
    ($t:ty, $($trait:ident :: $method:ident),*) => {
        $(
            impl $trait<$t> for $t {
                type Output = $t;
                fn $method(self, rhs: $t) -> $t {
                    <&$t as $trait<&$t>>::$method(&self, &rhs)
                }
            }
            impl $trait<&$t> for $t {
                type Output = $t;
                fn $method(self, rhs: &$t) -> $t {
                    <&$t as $trait<&$t>>::$method(&self, rhs)
                }
            }
            impl $trait<$t> for &$t {
                type Output = $t;
                fn $method(self, rhs: $t) -> $t {
                    <&$t as $trait<&$t>>::$method(self, &rhs)
                }
            }
        )*
    };
}
pub(crate) use forward_owned_binops;

forward_owned_binops!(Gauss, Add::add, Sub::sub, Mul::mul);

/// An element of Q(i)[q, q^-1].
///
/// Terms are stored as `(exponent, coefficient)` pairs in strictly increasing
/// exponent order with no zero coefficients, so the representation is
/// canonical and zero is the empty list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    terms: Vec<(i32, Gauss)>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Scalar::constant(Gauss::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::constant(Gauss::from_int(n))
    }

    pub fn i() -> Self {
        Scalar::constant(Gauss::i())
    }

    pub fn constant(c: Gauss) -> Self {
        Scalar::monomial(c, 0)
    }

    /// `c * q^k`.
    pub fn monomial(c: Gauss, k: i32) -> Self {
        if c.is_zero() {
            Scalar::zero()
        } else {
            Scalar { terms: vec![(k, c)] }
        }
    }

    /// `q^k`.
    pub fn q_pow(k: i32) -> Self {
        Scalar::monomial(Gauss::one(), k)
    }

    /// `q^-1 - q`, the correction coefficient of the Manin relations.
    pub fn q_inv_minus_q() -> Self {
        Scalar::q_pow(-1) - Scalar::q_pow(1)
    }

    /// Builds a scalar from arbitrary `(exponent, coefficient)` pairs.
    pub fn from_terms(terms: impl IntoIterator<Item = (i32, Gauss)>) -> Self {
        let mut v: Vec<(i32, Gauss)> = terms.into_iter().collect();
        v.sort_by_key(|(k, _)| *k);
        let mut out: Vec<(i32, Gauss)> = Vec::with_capacity(v.len());
        for (k, c) in v {
            match out.last_mut() {
                Some((lk, lc)) if *lk == k => *lc = &*lc + &c,
                _ => out.push((k, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Scalar { terms: out }
    }

    pub fn terms(&self) -> &[(i32, Gauss)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    pub fn min_exponent(&self) -> Option<i32> {
        self.terms.first().map(|(k, _)| *k)
    }

    pub fn max_exponent(&self) -> Option<i32> {
        self.terms.last().map(|(k, _)| *k)
    }

    /// Returns `(c, k)` when the scalar is the single term `c * q^k`.
    pub fn as_monomial(&self) -> Option<(&Gauss, i32)> {
        match self.terms.as_slice() {
            [(k, c)] => Some((c, *k)),
            _ => None,
        }
    }

    /// Returns the constant when the scalar does not involve `q`.
    pub fn as_constant(&self) -> Option<Gauss> {
        match self.terms.as_slice() {
            [] => Some(Gauss::zero()),
            [(0, c)] => Some(c.clone()),
            _ => None,
        }
    }

    /// Units of the Laurent ring are exactly the nonzero monomials.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1
    }

    /// Inverse of a monomial unit `c*q^k`.
    pub fn unit_inverse(&self) -> Option<Scalar> {
        let (c, k) = self.as_monomial()?;
        Some(Scalar::monomial(c.inv()?, -k))
    }

    /// Complex conjugation `i -> -i`, fixing `q`.
    pub fn conj(&self) -> Scalar {
        Scalar {
            terms: self.terms.iter().map(|(k, c)| (*k, c.conj())).collect(),
        }
    }

    /// Substitutes `q = 1`.
    pub fn at_q_one(&self) -> Gauss {
        self.terms
            .iter()
            .fold(Gauss::zero(), |acc, (_, c)| &acc + c)
    }

    /// Substitutes `q = value` for a nonzero rational value.
    pub fn at_q(&self, value: &BigRational) -> Gauss {
        let mut acc = Gauss::zero();
        for (k, c) in &self.terms {
            let p = pow_rational(value, *k);
            acc = &acc + &Gauss::new(&c.re * &p, &c.im * &p);
        }
        acc
    }

    pub fn scale(&self, c: &Gauss) -> Scalar {
        if c.is_zero() {
            return Scalar::zero();
        }
        Scalar {
            terms: self.terms.iter().map(|(k, a)| (*k, a * c)).collect(),
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i32) -> Scalar {
        Scalar {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Leading coefficient (of the highest power of `q`).
    pub fn leading_coefficient(&self) -> Option<&Gauss> {
        self.terms.last().map(|(_, c)| c)
    }

    /// Division with remainder in Q(i)[q], valid when both operands are
    /// ordinary polynomials (no negative exponents).
    fn poly_div_rem(&self, divisor: &Scalar) -> (Scalar, Scalar) {
        debug_assert!(self.min_exponent().map_or(true, |k| k >= 0));
        debug_assert!(divisor.min_exponent().map_or(true, |k| k >= 0));
        let (dlead_k, dlead_c) = divisor.terms.last().expect("division by zero");
        let dlead_inv = dlead_c.inv().expect("nonzero leading coefficient");
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((rk, rc)) = rem.terms.last().cloned() {
            if rk < *dlead_k {
                break;
            }
            let factor = Scalar::monomial(&rc * &dlead_inv, rk - dlead_k);
            rem = &rem - &(&factor * divisor);
            quot.push(factor.terms[0].clone());
        }
        (Scalar::from_terms(quot), rem)
    }

    /// Exact division in the Laurent ring. Returns `None` when `divisor` does
    /// not divide `self`.
    pub fn div_exact(&self, divisor: &Scalar) -> Option<Scalar> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Scalar::zero());
        }
        if let Some(inv) = divisor.unit_inverse() {
            return Some(self * &inv);
        }
        let sa = self.min_exponent().unwrap();
        let sb = divisor.min_exponent().unwrap();
        let a = self.shift(-sa);
        let b = divisor.shift(-sb);
        let (quot, rem) = a.poly_div_rem(&b);
        if rem.is_zero() {
            Some(quot.shift(sa - sb))
        } else {
            None
        }
    }

    /// Greatest common divisor in Q(i)[q, q^-1], normalised to have lowest
    /// exponent 0 and leading coefficient 1.
    pub fn gcd(&self, other: &Scalar) -> Scalar {
        if self.is_zero() {
            return other.normalized_associate();
        }
        if other.is_zero() {
            return self.normalized_associate();
        }
        let mut a = self.shift(-self.min_exponent().unwrap());
        let mut b = other.shift(-other.min_exponent().unwrap());
        while !b.is_zero() {
            let (_, r) = a.poly_div_rem(&b);
            a = b;
            b = if r.is_zero() {
                r
            } else {
                r.shift(-r.min_exponent().unwrap())
            };
        }
        a.normalized_associate()
    }

    /// The associate of `self` with lowest exponent 0 and leading
    /// coefficient 1 (zero stays zero).
    pub fn normalized_associate(&self) -> Scalar {
        match (self.min_exponent(), self.leading_coefficient()) {
            (Some(k), Some(c)) => self.shift(-k).scale(&c.inv().unwrap()),
            _ => Scalar::zero(),
        }
    }
}

fn pow_rational(value: &BigRational, k: i32) -> BigRational {
    let base = if k < 0 { value.recip() } else { value.clone() };
    let mut acc = BigRational::one();
    for _ in 0..k.unsigned_abs() {
        acc = &acc * &base;
    }
    acc
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < rhs.terms.len() {
            let (ka, ca) = &self.terms[i];
            let (kb, cb) = &rhs.terms[j];
            match ka.cmp(kb) {
                Ordering::Less => {
                    out.push((*ka, ca.clone()));
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((*kb, cb.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = ca + cb;
                    if !c.is_zero() {
                        out.push((*ka, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&rhs.terms[j..]);
        Scalar { terms: out }
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        if self.terms.len() == 1 && rhs.terms.len() == 1 {
            let (ka, ca) = &self.terms[0];
            let (kb, cb) = &rhs.terms[0];
            return Scalar::monomial(ca * cb, ka + kb);
        }
        let mut prods = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (ka, ca) in &self.terms {
            for (kb, cb) in &rhs.terms {
                prods.push((ka + kb, ca * cb));
            }
        }
        Scalar::from_terms(prods)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

forward_owned_binops!(Scalar, Add::add, Sub::sub, Mul::mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl From<Gauss> for Scalar {
    fn from(c: Gauss) -> Self {
        Scalar::constant(c)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

fn fmt_q_power(k: i32) -> String {
    match k {
        1 => "q".to_string(),
        k => format!("q^{k}"),
    }
}

impl Scalar {
    /// Prints a single term `c*q^k` in the expression grammar; the boolean
    /// reports whether the printed form starts with a minus sign.
    fn fmt_term(k: i32, c: &Gauss) -> String {
        let neg = c.is_real() && c.re.is_negative();
        let abs = if neg { -c } else { c.clone() };
        let body = if k == 0 {
            abs.to_string()
        } else if abs.is_one() {
            fmt_q_power(k)
        } else {
            format!("{}*{}", abs, fmt_q_power(k))
        };
        if neg {
            format!("-{body}")
        } else {
            body
        }
    }

    /// `true` if printing this scalar as a product factor needs parentheses.
    pub(crate) fn needs_parens(&self) -> bool {
        self.terms.len() > 1
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (k, c)) in self.terms.iter().enumerate() {
            let t = Scalar::fmt_term(*k, c);
            if idx == 0 {
                write!(f, "{t}")?;
            } else if let Some(rest) = t.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {t}")?;
            }
        }
        Ok(())
    }
}

/// An element of Q(i)(q), stored as a reduced fraction with a normalised
/// denominator (lowest exponent 0, leading coefficient 1).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Scalar,
    den: Scalar,
}

impl RatFunc {
    pub fn new(num: Scalar, den: Scalar) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(RatFunc::zero());
        }
        let g = num.gcd(&den);
        let mut num = num.div_exact(&g).expect("gcd divides");
        let mut den = den.div_exact(&g).expect("gcd divides");
        // Move the unit part of the denominator into the numerator.
        let k = den.min_exponent().unwrap();
        let c = den.leading_coefficient().unwrap().inv().unwrap();
        let unit = Scalar::monomial(c, -k);
        num = &num * &unit;
        den = &den * &unit;
        Some(RatFunc { num, den })
    }

    pub fn zero() -> Self {
        RatFunc {
            num: Scalar::zero(),
            den: Scalar::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc::from_scalar(Scalar::one())
    }

    pub fn from_scalar(s: Scalar) -> Self {
        RatFunc {
            num: s,
            den: Scalar::one(),
        }
    }

    pub fn numer(&self) -> &Scalar {
        &self.num
    }

    pub fn denom(&self) -> &Scalar {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The Laurent polynomial this fraction equals, if its denominator is 1.
    pub fn as_scalar(&self) -> Option<&Scalar> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn inv(&self) -> Option<RatFunc> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &RatFunc) -> Option<RatFunc> {
        Some(self * &other.inv()?)
    }
}

impl Add<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den.clone()).unwrap();
        }
        RatFunc::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .unwrap()
    }
}

impl Sub<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den).unwrap()
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

forward_owned_binops!(RatFunc, Add::add, Sub::sub, Mul::mul);

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(terms: &[(i32, i64, i64)]) -> Scalar {
        Scalar::from_terms(terms.iter().map(|&(k, re, im)| (k, Gauss::gaussian(re, im))))
    }

    #[test]
    fn zero_is_unique() {
        let a = s(&[(1, 2, 0), (-1, 0, 3)]);
        assert_eq!(&a - &a, Scalar::zero());
        assert!(Scalar::from_terms(vec![(3, Gauss::zero())]).is_zero());
    }

    #[test]
    fn laurent_product() {
        let a = Scalar::q_inv_minus_q();
        let sq = &a * &a;
        assert_eq!(sq, s(&[(-2, 1, 0), (0, -2, 0), (2, 1, 0)]));
    }

    #[test]
    fn conjugation_fixes_q_and_flips_i() {
        let a = s(&[(2, 1, 1)]);
        assert_eq!(a.conj(), s(&[(2, 1, -1)]));
        assert_eq!(a.conj().conj(), a);
    }

    #[test]
    fn exact_division() {
        let a = s(&[(0, 1, 0), (1, 1, 0)]);
        let b = s(&[(-1, 1, 0), (1, -1, 0)]);
        let p = &a * &b;
        assert_eq!(p.div_exact(&a), Some(b.clone()));
        assert_eq!(p.div_exact(&b), Some(a.clone()));
        assert_eq!(a.div_exact(&b), None);
        assert_eq!(Scalar::zero().div_exact(&a), Some(Scalar::zero()));
    }

    #[test]
    fn gcd_and_ratfunc_reduce() {
        // (1 - q^2) / (q - q^3) = 1/q
        let n = s(&[(0, 1, 0), (2, -1, 0)]);
        let d = s(&[(1, 1, 0), (3, -1, 0)]);
        let r = RatFunc::new(n, d).unwrap();
        assert_eq!(r.as_scalar(), Some(&Scalar::q_pow(-1)));
    }

    #[test]
    fn ratfunc_field_ops() {
        let a = RatFunc::new(Scalar::one(), s(&[(0, 1, 0), (1, 1, 0)])).unwrap();
        let b = RatFunc::new(Scalar::q_pow(1), s(&[(0, 1, 0), (1, 1, 0)])).unwrap();
        assert_eq!(&a + &b, RatFunc::one());
        assert_eq!((&a * &a.inv().unwrap()), RatFunc::one());
    }

    #[test]
    fn display_forms() {
        assert_eq!(Scalar::q_inv_minus_q().to_string(), "q^-1 - q");
        assert_eq!((-Scalar::q_pow(-1)).to_string(), "-q^-1");
        assert_eq!(Scalar::i().to_string(), "i");
        assert_eq!(s(&[(0, 1, -2)]).to_string(), "(1 - 2*i)");
        assert_eq!(Scalar::constant(Gauss::from_ratio(-1, 2)).to_string(), "-1/2");
    }

    #[test]
    fn evaluation_at_one() {
        assert!(Scalar::q_inv_minus_q().at_q_one().is_zero());
        let v = BigRational::from_integer(BigInt::from(2));
        assert_eq!(Scalar::q_pow(-2).at_q(&v), Gauss::from_ratio(1, 4));
    }
}
