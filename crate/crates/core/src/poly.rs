//! Sparse exact polynomials with big-integer coefficients.
//!
//! Exponents are signed so that Laurent polynomials (needed on the hyperbola
//! `uv = 1`) share the same representation. Zero coefficients are never stored.
//!
//! The canonical text form lists terms by total degree, descending, ties broken
//! by the exponent of the first variable, descending:
//! `u^2 + u*v + 4*u + v + 3`. A coefficient of one is omitted except on the
//! constant term; the zero polynomial prints as `0`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

fn rational_pow(x: &BigRational, e: i64) -> Result<BigRational> {
    if e < 0 {
        if x.is_zero() {
            return Err(Error::ZeroToNegativePower);
        }
        Ok(num_traits::pow(x.recip(), e.unsigned_abs() as usize))
    } else {
        Ok(num_traits::pow(x.clone(), e as usize))
    }
}

/// A polynomial in `u` and `v` with integer coefficients and integer (possibly
/// negative) exponents.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Bivariate {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl Bivariate {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn u() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn v() -> Self {
        Self::monomial(0, 1, 1)
    }

    /// `c·u^eu·v^ev`.
    pub fn monomial(eu: i64, ev: i64, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(eu, ev, c.into());
        p
    }

    pub fn add_term(&mut self, eu: i64, ev: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((eu, ev)).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(eu, ev));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, eu: i64, ev: i64) -> BigInt {
        self.terms.get(&(eu, ev)).cloned().unwrap_or_default()
    }

    /// Terms as `((eu, ev), coefficient)`, in storage order.
    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &BigInt)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Highest exponent of `v`, or `None` for the zero polynomial.
    pub fn degree_v(&self) -> Option<i64> {
        self.terms.keys().map(|&(_, ev)| ev).max()
    }

    pub fn degree_u(&self) -> Option<i64> {
        self.terms.keys().map(|&(eu, _)| eu).max()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Bivariate { terms: self.terms.iter().map(|(k, x)| (*k, x * c)).collect() }
    }

    /// Multiplies by `u^du·v^dv`.
    pub fn shift(&self, du: i64, dv: i64) -> Self {
        Bivariate { terms: self.terms.iter().map(|(&(a, b), c)| ((a + du, b + dv), c.clone())).collect() }
    }

    /// `p(v, u)`.
    pub fn swap_variables(&self) -> Self {
        Bivariate { terms: self.terms.iter().map(|(&(a, b), c)| ((b, a), c.clone())).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn evaluate(&self, u: &BigRational, v: &BigRational) -> Result<BigRational> {
        let mut acc = BigRational::zero();
        for (&(eu, ev), c) in &self.terms {
            acc += BigRational::from_integer(c.clone()) * rational_pow(u, eu)? * rational_pow(v, ev)?;
        }
        Ok(acc)
    }

    /// Evaluates at integer points. Fails if a negative exponent meets a zero
    /// coordinate or the result is not an integer.
    pub fn evaluate_int(&self, u: impl Into<BigInt>, v: impl Into<BigInt>) -> Result<BigInt> {
        let u = BigRational::from_integer(u.into());
        let v = BigRational::from_integer(v.into());
        let r = self.evaluate(&u, &v)?;
        if !r.is_integer() {
            return Err(Error::NonIntegral(r.to_string()));
        }
        Ok(r.to_integer())
    }

    /// Substitutes univariate polynomials for both variables. A negative
    /// exponent needs the substituted polynomial to be a unit monomial.
    pub fn substitute(&self, u: &Univariate, v: &Univariate) -> Result<Univariate> {
        let mut acc = Univariate::zero();
        for (&(eu, ev), c) in &self.terms {
            let term = &u.pow_laurent(eu)? * &v.pow_laurent(ev)?;
            acc = &acc + &term.scale(c);
        }
        Ok(acc)
    }

    /// Substitutes `u ↦ u + a`, `v ↦ v + b` for nonnegative-exponent
    /// polynomials. This is the raw shift behind Tutte-style rewritings.
    pub fn shift_variables(&self, a: &BigInt, b: &BigInt) -> Result<Self> {
        let ua = Bivariate::u() + Bivariate::constant(a.clone());
        let vb = Bivariate::v() + Bivariate::constant(b.clone());
        let mut acc = Self::zero();
        for (&(eu, ev), c) in &self.terms {
            if eu < 0 || ev < 0 {
                return Err(Error::ZeroToNegativePower);
            }
            acc = acc + (&ua.pow(eu as u32) * &vb.pow(ev as u32)).scale(c);
        }
        Ok(acc)
    }

    fn ordered_terms(&self) -> Vec<((i64, i64), &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().map(|(k, c)| (*k, c)).collect();
        v.sort_by(|(a, _), (b, _)| (b.0 + b.1, b.0).cmp(&(a.0 + a.1, a.0)));
        v
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut p = Self::zero();
        for (c, exps) in parse_terms(text, &["u", "v"])? {
            p.add_term(exps[0], exps[1], c);
        }
        Ok(p)
    }
}

/// A polynomial in one variable with integer coefficients and integer
/// exponents. The variable name is chosen at print time.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Univariate {
    terms: BTreeMap<i64, BigInt>,
}

impl Univariate {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, c)
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::monomial(1, 1)
    }

    pub fn monomial(e: i64, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c.into());
        p
    }

    pub fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    /// Terms as `(exponent, coefficient)`, ascending exponent.
    pub fn terms(&self) -> impl Iterator<Item = (&i64, &BigInt)> {
        self.terms.iter()
    }

    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Univariate { terms: self.terms.iter().map(|(k, x)| (*k, x * c)).collect() }
    }

    /// Multiplies by `x^d`.
    pub fn shift(&self, d: i64) -> Self {
        Univariate { terms: self.terms.iter().map(|(&e, c)| (e + d, c.clone())).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Integer power; negative powers only for `±x^k`.
    pub fn pow_laurent(&self, e: i64) -> Result<Self> {
        if e >= 0 {
            return Ok(self.pow(e as u32));
        }
        if self.terms.len() != 1 {
            return Err(Error::ZeroToNegativePower);
        }
        let (&k, c) = self.terms.iter().next().expect("one term");
        if !c.abs().is_one() {
            return Err(Error::ZeroToNegativePower);
        }
        let sign = if c.is_negative() && e % 2 != 0 { -BigInt::one() } else { BigInt::one() };
        Ok(Univariate::monomial(k * e, sign))
    }

    pub fn evaluate(&self, x: &BigRational) -> Result<BigRational> {
        let mut acc = BigRational::zero();
        for (&e, c) in &self.terms {
            acc += BigRational::from_integer(c.clone()) * rational_pow(x, e)?;
        }
        Ok(acc)
    }

    /// Evaluation at an integer; exponents must be nonnegative unless `x ≠ 0`
    /// and the result is integral.
    pub fn evaluate_int(&self, x: impl Into<BigInt>) -> Result<BigInt> {
        let r = self.evaluate(&BigRational::from_integer(x.into()))?;
        if !r.is_integer() {
            return Err(Error::NonIntegral(r.to_string()));
        }
        Ok(r.to_integer())
    }

    /// Text form with the given variable name.
    pub fn display<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        UnivariateDisplay { p: self, var }
    }

    pub fn parse(text: &str, var: &str) -> Result<Self> {
        let mut p = Self::zero();
        for (c, exps) in parse_terms(text, &[var])? {
            p.add_term(exps[0], c);
        }
        Ok(p)
    }
}

struct UnivariateDisplay<'a> {
    p: &'a Univariate,
    var: &'a str,
}

impl fmt::Display for UnivariateDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<_> = self.p.terms.iter().rev().map(|(&e, c)| (vec![(self.var, e)], c)).collect();
        write_terms(f, &terms)
    }
}

impl fmt::Display for Univariate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display("x").fmt(f)
    }
}

impl fmt::Debug for Univariate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Univariate({self})")
    }
}

impl fmt::Display for Bivariate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<_> = self
            .ordered_terms()
            .into_iter()
            .map(|((eu, ev), c)| (vec![("u", eu), ("v", ev)], c))
            .collect();
        write_terms(f, &terms)
    }
}

impl fmt::Debug for Bivariate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bivariate({self})")
    }
}

fn write_terms(f: &mut fmt::Formatter<'_>, terms: &[(Vec<(&str, i64)>, &BigInt)]) -> fmt::Result {
    if terms.is_empty() {
        return f.write_str("0");
    }
    for (idx, (vars, c)) in terms.iter().enumerate() {
        let negative = c.is_negative();
        match (idx, negative) {
            (0, true) => f.write_str("-")?,
            (0, false) => {}
            (_, true) => f.write_str(" - ")?,
            (_, false) => f.write_str(" + ")?,
        }
        let abs = c.abs();
        let factors: Vec<String> = vars
            .iter()
            .filter(|(_, e)| *e != 0)
            .map(|(name, e)| if *e == 1 { name.to_string() } else { format!("{name}^{e}") })
            .collect();
        if factors.is_empty() {
            write!(f, "{abs}")?;
        } else {
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            f.write_str(&factors.join("*"))?;
        }
    }
    Ok(())
}

/// Parses a sum of terms such as `-3*u^2*v + v^-1 - 7`. Whitespace is ignored.
fn parse_terms(text: &str, vars: &[&str]) -> Result<Vec<(BigInt, Vec<i64>)>> {
    let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    let err = |pos: usize, msg: &str| Error::Parse {
        location: format!("character {}", pos + 1),
        message: msg.to_string(),
    };
    if chars.is_empty() {
        return Err(err(0, "empty polynomial"));
    }
    let mut out = Vec::new();
    let mut pos = 0;
    let read_int = |pos: &mut usize| -> Option<String> {
        let start = *pos;
        while *pos < chars.len() && chars[*pos].is_ascii_digit() {
            *pos += 1;
        }
        (start < *pos).then(|| chars[start..*pos].iter().collect())
    };
    let mut first = true;
    while pos < chars.len() {
        let mut negative = false;
        match chars[pos] {
            '+' if !first => pos += 1,
            '-' => {
                negative = true;
                pos += 1;
            }
            _ if first => {}
            _ => return Err(err(pos, "expected '+' or '-'")),
        }
        first = false;
        let mut coeff = BigInt::one();
        let mut exps = vec![0i64; vars.len()];
        let mut expect_factor = true;
        let mut had_factor = false;
        if let Some(digits) = read_int(&mut pos) {
            coeff = digits.parse().expect("digits");
            had_factor = true;
            expect_factor = false;
            if pos < chars.len() && chars[pos] == '*' {
                pos += 1;
                expect_factor = true;
            }
        }
        while expect_factor {
            let rest: String = chars[pos..].iter().collect();
            let Some(vi) = vars.iter().position(|v| rest.starts_with(v)) else {
                if had_factor {
                    return Err(err(pos, "expected a variable after '*'"));
                }
                return Err(err(pos, "expected a coefficient or variable"));
            };
            pos += vars[vi].chars().count();
            let mut e = 1i64;
            if pos < chars.len() && chars[pos] == '^' {
                pos += 1;
                let neg = pos < chars.len() && chars[pos] == '-';
                if neg {
                    pos += 1;
                }
                let digits = read_int(&mut pos).ok_or_else(|| err(pos, "expected exponent"))?;
                e = digits.parse().map_err(|_| err(pos, "exponent too large"))?;
                if neg {
                    e = -e;
                }
            }
            exps[vi] += e;
            had_factor = true;
            expect_factor = pos < chars.len() && chars[pos] == '*';
            if expect_factor {
                pos += 1;
            }
        }
        if negative {
            coeff = -coeff;
        }
        out.push((coeff, exps));
    }
    Ok(out)
}

macro_rules! ring_ops {
    ($t:ident, $key:ty, $combine:expr) => {
        impl Add<&$t> for &$t {
            type Output = $t;
            fn add(self, rhs: &$t) -> $t {
                let mut out = self.clone();
                for (k, c) in &rhs.terms {
                    let slot = out.terms.entry(*k).or_insert_with(BigInt::zero);
                    *slot += c;
                    if slot.is_zero() {
                        out.terms.remove(k);
                    }
                }
                out
            }
        }

        impl Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                &self + &rhs
            }
        }

        impl Neg for &$t {
            type Output = $t;
            fn neg(self) -> $t {
                $t { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
            }
        }

        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }

        impl Sub<&$t> for &$t {
            type Output = $t;
            fn sub(self, rhs: &$t) -> $t {
                self + &(-rhs)
            }
        }

        impl Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                &self - &rhs
            }
        }

        impl Mul<&$t> for &$t {
            type Output = $t;
            fn mul(self, rhs: &$t) -> $t {
                let combine: fn($key, $key) -> $key = $combine;
                let mut terms: BTreeMap<$key, BigInt> = BTreeMap::new();
                for (ka, ca) in &self.terms {
                    for (kb, cb) in &rhs.terms {
                        let slot = terms.entry(combine(*ka, *kb)).or_insert_with(BigInt::zero);
                        *slot += ca * cb;
                    }
                }
                terms.retain(|_, c| !c.is_zero());
                $t { terms }
            }
        }

        impl Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                &self * &rhs
            }
        }

        impl std::iter::Sum for $t {
            fn sum<I: Iterator<Item = $t>>(iter: I) -> $t {
                iter.fold($t::zero(), |a, b| a + b)
            }
        }
    };
}

ring_ops!(Bivariate, (i64, i64), |a, b| (a.0 + b.0, a.1 + b.1));
ring_ops!(Univariate, i64, |a, b| a + b);

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bi(s: &str) -> Bivariate {
        Bivariate::parse(s).unwrap()
    }

    #[test]
    fn ring_examples() {
        let p = bi("u^2 + 3*u*v - 7");
        assert_eq!(&p + &Bivariate::zero(), p);
        let a = Bivariate::u() + Bivariate::one();
        let b = Bivariate::v() + Bivariate::one();
        assert_eq!((&a * &b).to_string(), "u*v + u + v + 1");
        let sum = &(&a * &a) + &(&a * &b);
        let sum = &sum + &a;
        assert_eq!(sum.to_string(), "u^2 + u*v + 4*u + v + 3");
    }

    #[test]
    fn evaluation() {
        let p = bi("u^2 + u*v + 4*u + v + 3");
        assert_eq!(p.evaluate_int(0, 0).unwrap(), BigInt::from(3));
        assert_eq!(p.evaluate_int(1, 1).unwrap(), BigInt::from(10));
        assert_eq!(Bivariate::one().evaluate_int(5, -2).unwrap(), BigInt::one());
        let laurent = bi("v^-1");
        assert_eq!(laurent.evaluate_int(3, 0), Err(Error::ZeroToNegativePower));
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(laurent.evaluate(&half, &half).unwrap(), BigRational::from_integer(2.into()));
    }

    #[test]
    fn printing() {
        assert_eq!(Bivariate::zero().to_string(), "0");
        assert_eq!(bi("-u + 1").to_string(), "-u + 1");
        assert_eq!(bi("v^-2*u^3 - 2*v").to_string(), "u^3*v^-2 - 2*v");
        let t = Univariate::parse("t^3 - 6*t^2 + 10*t - 5", "t").unwrap();
        assert_eq!(t.display("t").to_string(), "t^3 - 6*t^2 + 10*t - 5");
        assert_eq!(Univariate::monomial(-2, -1).display("v").to_string(), "-v^-2");
    }

    #[test]
    fn parse_errors_are_reported() {
        assert!(Bivariate::parse("").is_err());
        assert!(Bivariate::parse("u^").is_err());
        assert!(Bivariate::parse("2*").is_err());
        assert!(Bivariate::parse("u v").is_err());
        assert!(Bivariate::parse("x").is_err());
    }

    #[test]
    fn substitution() {
        let p = bi("u^2 + u*v + 4*u + v + 3");
        let x = Univariate::var();
        let diag = p.substitute(&x, &x).unwrap();
        assert_eq!(diag.to_string(), "2*x^2 + 5*x + 3");
        let inv = Univariate::monomial(-1, 1);
        let hyper = p.substitute(&inv, &x).unwrap();
        assert_eq!(hyper.display("v").to_string(), "v + 4 + 4*v^-1 + v^-2");
        assert_eq!(hyper.coefficient(0), BigInt::from(4));
        assert_eq!(hyper.coefficient(-1), BigInt::from(4));
        assert_eq!(hyper.coefficient(-2), BigInt::from(1));
        assert!(Univariate::parse("x + 1", "x").unwrap().pow_laurent(-1).is_err());
    }

    #[test]
    fn shift_variables_is_tutte_style() {
        // R(u,v) = u^2 + 3u + 1 becomes x^2 + x - 1 under u = x - 1.
        let r = bi("u^2 + 3*u + 1");
        let t = r.shift_variables(&BigInt::from(-1), &BigInt::from(-1)).unwrap();
        assert_eq!(t.to_string(), "u^2 + u - 1");
    }

    fn arb_bivariate() -> impl Strategy<Value = Bivariate> {
        prop::collection::vec((-3i64..4, -3i64..4, -20i64..20), 0..6).prop_map(|ts| {
            let mut p = Bivariate::zero();
            for (a, b, c) in ts {
                p.add_term(a, b, BigInt::from(c));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(p in arb_bivariate()) {
            let text = p.to_string();
            let q = Bivariate::parse(&text).unwrap();
            prop_assert_eq!(&q, &p);
            prop_assert_eq!(q.to_string(), text);
        }

        #[test]
        fn ring_axioms(a in arb_bivariate(), b in arb_bivariate(), c in arb_bivariate()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn evaluation_is_a_ring_morphism(a in arb_bivariate(), b in arb_bivariate(), x in 1i64..4, y in -3i64..-1) {
            let (x, y) = (BigRational::from_integer(x.into()), BigRational::from_integer(y.into()));
            let prod = (&a * &b).evaluate(&x, &y).unwrap();
            prop_assert_eq!(prod, a.evaluate(&x, &y).unwrap() * b.evaluate(&x, &y).unwrap());
        }
    }
}
