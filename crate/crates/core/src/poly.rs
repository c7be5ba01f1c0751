//! Exact multivariate Laurent polynomials with big-integer coefficients.
//!
//! Variables are named. A polynomial only carries the variables that actually
//! occur in it, kept in sorted order, so two polynomials that are equal as
//! functions are equal as values. Half-integer powers of `Q` are modelled by a
//! separate variable `S` together with the contract `S^2 = Q`
//! (see [`LaurentPoly::reduce_square`]).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type ComplexValue = Complex64;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        Self { vars: Vec::new(), terms }
    }

    /// The polynomial consisting of the single variable `name`.
    pub fn var(name: &str) -> Self {
        Self::monomial(1, &[(name, 1)])
    }

    /// `coeff * Π name^exp`. Repeated names are multiplied together.
    pub fn monomial(coeff: impl Into<BigInt>, factors: &[(&str, i64)]) -> Self {
        let coeff = coeff.into();
        let mut exps: BTreeMap<String, i64> = BTreeMap::new();
        for &(name, e) in factors {
            *exps.entry(name.to_string()).or_insert(0) += e;
        }
        let vars: Vec<String> = exps.keys().cloned().collect();
        let key: Vec<i64> = exps.values().copied().collect();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(key, coeff);
        }
        Self::from_raw(vars, terms)
    }

    /// Builds a polynomial from `(coefficient, factors)` pairs.
    pub fn from_terms<'a, I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (C, &'a [(&'a str, i64)])>,
        C: Into<BigInt>,
    {
        terms
            .into_iter()
            .fold(Self::zero(), |acc, (c, f)| acc + Self::monomial(c, f))
    }

    /// Univariate helper: `Σ c_k * name^{e_k}`.
    pub fn univariate(name: &str, terms: &[(i64, i64)]) -> Self {
        terms.iter().fold(Self::zero(), |acc, &(e, c)| {
            acc + Self::monomial(c, &[(name, e)])
        })
    }

    fn from_raw(vars: Vec<String>, terms: BTreeMap<Vec<i64>, BigInt>) -> Self {
        let mut p = Self { vars, terms };
        p.normalize();
        p
    }

    /// Drops zero coefficients and variables that no longer occur.
    fn normalize(&mut self) {
        self.terms.retain(|_, c| !c.is_zero());
        let used: Vec<bool> = (0..self.vars.len())
            .map(|i| self.terms.keys().any(|k| k[i] != 0))
            .collect();
        if used.iter().all(|&u| u) {
            return;
        }
        let keep: Vec<usize> = (0..self.vars.len()).filter(|&i| used[i]).collect();
        self.vars = keep.iter().map(|&i| self.vars[i].clone()).collect();
        let old = std::mem::take(&mut self.terms);
        for (k, c) in old {
            let nk: Vec<i64> = keep.iter().map(|&i| k[i]).collect();
            *self.terms.entry(nk).or_insert_with(BigInt::zero) += c;
        }
        self.terms.retain(|_, c| !c.is_zero());
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (Vec<(&str, i64)>, &BigInt)> + '_ {
        self.terms.iter().map(move |(k, c)| {
            let f = self
                .vars
                .iter()
                .zip(k)
                .filter(|(_, &e)| e != 0)
                .map(|(v, &e)| (v.as_str(), e))
                .collect();
            (f, c)
        })
    }

    /// Coefficient of the monomial `Π name^exp` (unlisted variables at exponent 0).
    pub fn coeff(&self, factors: &[(&str, i64)]) -> BigInt {
        let probe = Self::monomial(1, factors);
        if probe.vars.iter().any(|v| !self.vars.contains(v)) {
            return BigInt::zero();
        }
        let key: Vec<i64> = self
            .vars
            .iter()
            .map(|v| {
                probe
                    .vars
                    .iter()
                    .position(|w| w == v)
                    .map(|i| probe.terms.keys().next().unwrap()[i])
                    .unwrap_or(0)
            })
            .collect();
        self.terms.get(&key).cloned().unwrap_or_default()
    }

    /// Smallest and largest exponent of `var`, or `None` for the zero polynomial.
    pub fn degree_range(&self, var: &str) -> Option<(i64, i64)> {
        if self.is_zero() {
            return None;
        }
        match self.vars.iter().position(|v| v == var) {
            None => Some((0, 0)),
            Some(i) => {
                let lo = self.terms.keys().map(|k| k[i]).min().unwrap();
                let hi = self.terms.keys().map(|k| k[i]).max().unwrap();
                Some((lo, hi))
            }
        }
    }

    /// Re-expresses both operands over the union of their variables.
    fn align(a: &Self, b: &Self) -> (Vec<String>, Vec<usize>, Vec<usize>) {
        if a.vars == b.vars {
            let id: Vec<usize> = (0..a.vars.len()).collect();
            return (a.vars.clone(), id.clone(), id);
        }
        let mut vars: Vec<String> = a.vars.iter().chain(&b.vars).cloned().collect();
        vars.sort();
        vars.dedup();
        let pos = |v: &String| vars.binary_search(v).unwrap();
        let ma = a.vars.iter().map(pos).collect();
        let mb = b.vars.iter().map(pos).collect();
        (vars, ma, mb)
    }

    fn lift(key: &[i64], map: &[usize], width: usize) -> Vec<i64> {
        let mut out = vec![0; width];
        for (i, &e) in key.iter().enumerate() {
            out[map[i]] = e;
        }
        out
    }

    fn add_scaled(&self, other: &Self, sign: i32) -> Self {
        let (vars, ma, mb) = Self::align(self, other);
        let w = vars.len();
        let mut terms: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
        for (k, c) in &self.terms {
            terms.insert(Self::lift(k, &ma, w), c.clone());
        }
        for (k, c) in &other.terms {
            let e = terms.entry(Self::lift(k, &mb, w)).or_insert_with(BigInt::zero);
            if sign > 0 {
                *e += c;
            } else {
                *e -= c;
            }
        }
        Self::from_raw(vars, terms)
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let (vars, ma, mb) = Self::align(self, other);
        let w = vars.len();
        let lb: Vec<(Vec<i64>, &BigInt)> = other
            .terms
            .iter()
            .map(|(k, c)| (Self::lift(k, &mb, w), c))
            .collect();
        let mut terms: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
        for (ka, ca) in &self.terms {
            let ka = Self::lift(ka, &ma, w);
            for (kb, cb) in &lb {
                let k: Vec<i64> = ka.iter().zip(kb).map(|(x, y)| x + y).collect();
                *terms.entry(k).or_insert_with(BigInt::zero) += ca * *cb;
            }
        }
        Self::from_raw(vars, terms)
    }

    /// Non-negative integer power. Negative exponents are rejected: there are
    /// no polynomial inverses in general.
    pub fn pow(&self, exp: i64) -> Result<Self> {
        if exp < 0 {
            return Err(Error::NegativePower(exp));
        }
        let mut base = self.clone();
        let mut acc = Self::one();
        let mut e = exp as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    /// Inverse of a unit monomial `±Π x^e`.
    fn unit_inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (k, c) = self.terms.iter().next().unwrap();
        if !c.abs().is_one() {
            return None;
        }
        let mut terms = BTreeMap::new();
        terms.insert(k.iter().map(|e| -e).collect(), c.clone());
        Some(Self::from_raw(self.vars.clone(), terms))
    }

    /// Groups terms by the exponent of `var`: returns `exp -> cofactor`.
    fn collect_in(&self, var: &str) -> BTreeMap<i64, Self> {
        let mut out: BTreeMap<i64, Self> = BTreeMap::new();
        let Some(i) = self.vars.iter().position(|v| v == var) else {
            out.insert(0, self.clone());
            return out;
        };
        let mut grouped: BTreeMap<i64, BTreeMap<Vec<i64>, BigInt>> = BTreeMap::new();
        for (k, c) in &self.terms {
            let mut rest = k.clone();
            rest[i] = 0;
            grouped.entry(k[i]).or_default().insert(rest, c.clone());
        }
        for (e, terms) in grouped {
            out.insert(e, Self::from_raw(self.vars.clone(), terms));
        }
        out
    }

    fn power_of(repl: &Self, inv: &Option<Self>, var: &str, e: i64) -> Result<Self> {
        if e >= 0 {
            repl.pow(e)
        } else {
            inv.as_ref()
                .ok_or_else(|| Error::NotInvertible(var.to_string()))?
                .pow(-e)
        }
    }

    /// Replaces every occurrence of `var` by `replacement`. Negative powers of
    /// `var` require `replacement` to be a unit monomial.
    pub fn substitute(&self, var: &str, replacement: &Self) -> Result<Self> {
        let inv = replacement.unit_inverse();
        let mut acc = Self::zero();
        for (e, cof) in self.collect_in(var) {
            acc += &cof * &Self::power_of(replacement, &inv, var, e)?;
        }
        Ok(acc)
    }

    /// Replaces `var^2` by `replacement`. Every exponent of `var` must be even.
    pub fn substitute_square(&self, var: &str, replacement: &Self) -> Result<Self> {
        let groups = self.collect_in(var);
        if let Some((&e, _)) = groups.iter().find(|(e, _)| *e % 2 != 0) {
            return Err(Error::MalformedParity {
                var: var.to_string(),
                exponent: e,
            });
        }
        let inv = replacement.unit_inverse();
        let mut acc = Self::zero();
        for (e, cof) in groups {
            acc += &cof * &Self::power_of(replacement, &inv, var, e / 2)?;
        }
        Ok(acc)
    }

    /// Applies `root^2 = square`: every `root^e` becomes
    /// `root^(e mod 2) * square^(e div 2)`, leaving at most one factor of `root`.
    pub fn reduce_square(&self, root: &str, square: &str) -> Self {
        let mut acc = Self::zero();
        for (e, cof) in self.collect_in(root) {
            let m = Self::monomial(1, &[(root, e.rem_euclid(2)), (square, e.div_euclid(2))]);
            acc += &cof * &m;
        }
        acc
    }

    /// Numeric evaluation. Every variable of the polynomial must be assigned.
    pub fn evaluate(&self, assignment: &[(&str, ComplexValue)]) -> Result<ComplexValue> {
        let mut values = Vec::with_capacity(self.vars.len());
        for (i, v) in self.vars.iter().enumerate() {
            let x = assignment
                .iter()
                .find(|(n, _)| n == v)
                .map(|(_, x)| *x)
                .ok_or_else(|| Error::Unassigned(v.clone()))?;
            if x == Complex64::zero() && self.terms.keys().any(|k| k[i] < 0) {
                return Err(Error::PoleAtZero(v.clone()));
            }
            values.push(x);
        }
        let mut sum = Complex64::zero();
        for (k, c) in &self.terms {
            let mut t = Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0);
            for (x, &e) in values.iter().zip(k) {
                if e != 0 {
                    t *= x.powi(e as i32);
                }
            }
            sum += t;
        }
        Ok(sum)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (factors, c)) in self.terms().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut parts: Vec<String> = Vec::new();
            if !mag.is_one() || factors.is_empty() {
                parts.push(mag.to_string());
            }
            for (v, e) in factors {
                if e == 1 {
                    parts.push(v.to_string());
                } else {
                    parts.push(format!("{v}^{e}"));
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

struct Scanner<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Scanner<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn err(&self, msg: &str) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn digits(&mut self) -> Option<&str> {
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.s[start..self.pos]).unwrap())
    }

    fn ident(&mut self) -> Option<&str> {
        let start = self.pos;
        while self.pos < self.s.len()
            && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_')
        {
            if self.pos == start && self.s[self.pos].is_ascii_digit() {
                return None;
            }
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.s[start..self.pos]).unwrap())
    }

    fn exponent(&mut self) -> Result<i64> {
        self.skip_ws();
        let neg = match self.s.get(self.pos) {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        self.skip_ws();
        let start = self.pos;
        let Some(d) = self.digits().map(str::to_owned) else {
            return Err(self.err("expected exponent"));
        };
        let e: i64 = d.parse().map_err(|_| Error::Syntax {
            pos: start,
            msg: "exponent out of range".into(),
        })?;
        Ok(if neg { -e } else { e })
    }

    fn term(&mut self) -> Result<LaurentPoly> {
        let mut coeff = BigInt::one();
        let mut factors: Vec<(String, i64)> = Vec::new();
        loop {
            self.skip_ws();
            if let Some(d) = self.digits() {
                coeff *= d.parse::<BigInt>().unwrap();
            } else if let Some(name) = self.ident() {
                let name = name.to_string();
                let e = if self.peek() == Some(b'^') {
                    self.pos += 1;
                    self.exponent()?
                } else {
                    1
                };
                factors.push((name, e));
            } else {
                return Err(self.err("expected coefficient or variable"));
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        let f: Vec<(&str, i64)> = factors.iter().map(|(n, e)| (n.as_str(), *e)).collect();
        Ok(LaurentPoly::monomial(coeff, &f))
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Parses the text produced by `Display`: `c*q^a*rho^b` terms joined by
    /// `+`/`-`.
    fn from_str(s: &str) -> Result<Self> {
        let mut sc = Scanner {
            s: s.as_bytes(),
            pos: 0,
        };
        let mut acc = LaurentPoly::zero();
        let mut first = true;
        loop {
            let sign = match sc.peek() {
                None if first => return Err(sc.err("empty polynomial")),
                None => break,
                Some(b'+') => {
                    sc.pos += 1;
                    1
                }
                Some(b'-') => {
                    sc.pos += 1;
                    -1
                }
                Some(_) if first => 1,
                Some(_) => return Err(sc.err("expected `+` or `-`")),
            };
            first = false;
            let t = sc.term()?;
            if sign > 0 {
                acc += t;
            } else {
                acc -= t;
            }
        }
        Ok(acc)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                $body(self, rhs)
            }
        }
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                $body(&self, &rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                $body(&self, rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                $body(self, &rhs)
            }
        }
    };
}

binop!(Add, add, |a: &LaurentPoly, b: &LaurentPoly| a.add_scaled(b, 1));
binop!(Sub, sub, |a: &LaurentPoly, b: &LaurentPoly| a.add_scaled(b, -1));
binop!(Mul, mul, |a: &LaurentPoly, b: &LaurentPoly| a.mul_impl(b));

impl AddAssign<LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        *self = self.add_scaled(&rhs, 1);
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        *self = self.add_scaled(rhs, 1);
    }
}

impl SubAssign<LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: LaurentPoly) {
        *self = self.add_scaled(&rhs, -1);
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |a, b| a + b)
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |a, b| a * b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn q() -> LaurentPoly {
        LaurentPoly::var("q")
    }

    fn qinv() -> LaurentPoly {
        LaurentPoly::monomial(1, &[("q", -1)])
    }

    #[test]
    fn annihilator_and_identity() {
        let p = q() + qinv();
        assert!((&p * &LaurentPoly::zero()).is_zero());
        let one_plus_q = LaurentPoly::one() + q();
        assert_eq!(&one_plus_q * &LaurentPoly::one(), one_plus_q);
    }

    #[test]
    fn binomial_square() {
        let p = (q() + qinv()).pow(2).unwrap();
        assert_eq!(p, LaurentPoly::univariate("q", &[(2, 1), (0, 2), (-2, 1)]));
        assert_eq!(p.to_string(), "q^2 + 2 + q^-2");
    }

    #[test]
    fn negative_power_is_an_error() {
        assert_eq!(q().pow(-1), Err(Error::NegativePower(-1)));
    }

    #[test]
    fn square_substitution() {
        let p = LaurentPoly::univariate("A", &[(2, 1), (-2, 1)]);
        let r = -qinv();
        let got = p.substitute_square("A", &r).unwrap();
        assert_eq!(got, -qinv() - q());

        let s2 = LaurentPoly::monomial(1, &[("S", 2)]);
        assert_eq!(
            s2.substitute_square("S", &LaurentPoly::var("Q")).unwrap(),
            LaurentPoly::var("Q")
        );

        let a3 = LaurentPoly::monomial(1, &[("A", 3)]);
        assert!(matches!(
            a3.substitute_square("A", &r),
            Err(Error::MalformedParity { exponent: 3, .. })
        ));
    }

    #[test]
    fn substitution_needs_unit_for_negative_powers() {
        let p = qinv();
        let two_q = LaurentPoly::monomial(2, &[("t", 1)]);
        assert!(matches!(p.substitute("q", &two_q), Err(Error::NotInvertible(_))));
        let t = LaurentPoly::var("t");
        assert_eq!(
            p.substitute("q", &t).unwrap(),
            LaurentPoly::monomial(1, &[("t", -1)])
        );
    }

    #[test]
    fn reduce_square_root() {
        let p = LaurentPoly::monomial(1, &[("S", 3), ("v", 1)])
            + LaurentPoly::monomial(1, &[("S", -1)]);
        let r = p.reduce_square("S", "Q");
        let want = LaurentPoly::monomial(1, &[("S", 1), ("Q", 1), ("v", 1)])
            + LaurentPoly::monomial(1, &[("S", 1), ("Q", -1)]);
        assert_eq!(r, want);
    }

    #[test]
    fn evaluation() {
        let p = q() + qinv();
        let z = Complex64::from_polar(1.0, PI / 4.0);
        let v = p.evaluate(&[("q", z)]).unwrap();
        assert!((v - Complex64::new(2f64.sqrt(), 0.0)).norm() < 1e-12);
        let v = p.evaluate(&[("q", Complex64::new(1.0, 0.0))]).unwrap();
        assert_eq!(v, Complex64::new(2.0, 0.0));
        assert_eq!(
            qinv().evaluate(&[("q", Complex64::zero())]),
            Err(Error::PoleAtZero("q".into()))
        );
        assert_eq!(qinv().evaluate(&[]), Err(Error::Unassigned("q".into())));
    }

    #[test]
    fn text_roundtrip() {
        let p = LaurentPoly::monomial(-3, &[("q", 2), ("rho", -1)])
            + LaurentPoly::monomial(1, &[("q", -1)])
            + LaurentPoly::constant(7);
        let s = p.to_string();
        assert_eq!(s, "-3*q^2*rho^-1 + 7 + q^-1");
        assert_eq!(s.parse::<LaurentPoly>().unwrap(), p);
        assert_eq!("q + q^-1".parse::<LaurentPoly>().unwrap(), q() + qinv());
        assert_eq!("0".parse::<LaurentPoly>().unwrap(), LaurentPoly::zero());
        assert!(matches!("q +".parse::<LaurentPoly>(), Err(Error::Syntax { .. })));
        assert!(matches!("q ^".parse::<LaurentPoly>(), Err(Error::Syntax { .. })));
    }

    #[test]
    fn unused_variables_are_dropped() {
        let p = LaurentPoly::monomial(1, &[("q", 1), ("rho", 1)]);
        let r = p.substitute("rho", &LaurentPoly::one()).unwrap();
        assert_eq!(r, q());
        assert_eq!(r.vars(), ["q".to_string()]);
        assert_eq!(p.coeff(&[("q", 1), ("rho", 1)]), BigInt::one());
        assert_eq!(p.coeff(&[("q", 1)]), BigInt::zero());
    }
}
