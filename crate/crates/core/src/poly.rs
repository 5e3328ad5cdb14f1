//! Sparse multivariate polynomials with exact rational coefficients over the
//! fixed six-variable alphabet `s, t, u, v, w, y`.
//!
//! [`MPoly`] is the coefficient ring for every identity checked by this
//! crate. Values are immutable after construction and always held in
//! canonical form: no stored term has a zero coefficient, so structural
//! equality is polynomial equality.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num::traits::ToPrimitive;
use num::{BigInt, One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational coefficients. `BigRational` keeps values in lowest terms
/// with a positive denominator, which is exactly the canonical form we need.
pub type Rational = num::BigRational;

/// Number of variables in the fixed alphabet.
pub const NUM_VARS: usize = 6;

/// A formal variable. The ordering `s < t < u < v < w < y` is fixed and is
/// what the canonical monomial order below refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    S,
    T,
    U,
    V,
    W,
    Y,
}

impl Var {
    /// All variables in alphabet order.
    pub const ALL: [Var; NUM_VARS] = [Var::S, Var::T, Var::U, Var::V, Var::W, Var::Y];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn letter(self) -> char {
        match self {
            Var::S => 's',
            Var::T => 't',
            Var::U => 'u',
            Var::V => 'v',
            Var::W => 'w',
            Var::Y => 'y',
        }
    }

    pub fn from_letter(c: char) -> Option<Var> {
        match c {
            's' => Some(Var::S),
            't' => Some(Var::T),
            'u' => Some(Var::U),
            'v' => Some(Var::V),
            'w' => Some(Var::W),
            'y' => Some(Var::Y),
            _ => None,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// An exponent vector over the fixed alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u32; NUM_VARS],
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        exps: [0; NUM_VARS],
    };

    pub fn new(exps: [u32; NUM_VARS]) -> Monomial {
        Monomial { exps }
    }

    pub fn var(v: Var) -> Monomial {
        Monomial::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: u32) -> Monomial {
        let mut exps = [0; NUM_VARS];
        exps[v.index()] = e;
        Monomial { exps }
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.exps[v.index()]
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_constant(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Product of two monomials (exponents add).
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = [0; NUM_VARS];
        for (out, (&a, &b)) in exps.iter_mut().zip(self.exps.iter().zip(&other.exps)) {
            *out = a.checked_add(b).expect("monomial exponent overflow");
        }
        Monomial { exps }
    }

}

/// Graded lexicographic order: compare total degree first, then the exponent
/// vector read in alphabet order (so within a degree, a higher power of `s`
/// sorts above a higher power of `t`, and so on).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_constant() {
            return write!(f, "1");
        }
        let mut first = true;
        for v in Var::ALL {
            let e = self.exps[v.index()];
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A sparse multivariate polynomial over `Rational`.
///
/// Terms are kept in a `BTreeMap` keyed by the graded-lex monomial order, so
/// equal polynomials have equal representations and iteration order is
/// deterministic.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MPoly {
    pub fn zero() -> MPoly {
        MPoly::default()
    }

    pub fn one() -> MPoly {
        MPoly::from_int(1)
    }

    pub fn constant(c: Rational) -> MPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::ONE, c);
        }
        MPoly { terms }
    }

    pub fn from_int(n: i64) -> MPoly {
        MPoly::constant(Rational::from_integer(BigInt::from(n)))
    }

    pub fn var(v: Var) -> MPoly {
        MPoly::monomial(Monomial::var(v), Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> MPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_constant())
    }

    /// The value of a constant polynomial, or `None` if any variable occurs.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.terms.is_empty() {
            return Some(Rational::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&Monomial::ONE) {
                return Some(c.clone());
            }
        }
        None
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(Monomial::total_degree)
            .max()
            .unwrap_or(0)
    }

    /// Coefficient of the given monomial (zero if absent).
    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (*m, k * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut acc = MPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Simultaneous substitution of polynomials for a subset of variables.
    /// Unbound variables are left alone.
    pub fn substitute(&self, bindings: &[(Var, MPoly)]) -> MPoly {
        let mut result = MPoly::zero();
        for (m, c) in &self.terms {
            let mut term = MPoly::constant(c.clone());
            for v in Var::ALL {
                let e = m.exponent(v);
                if e == 0 {
                    continue;
                }
                match bindings.iter().find(|(bv, _)| *bv == v) {
                    Some((_, p)) => term = &term * &p.pow(e),
                    None => term = &term * &MPoly::monomial(Monomial::var_pow(v, e), Rational::one()),
                }
            }
            result = &result + &term;
        }
        result
    }

    /// Exact division by a nonzero rational constant polynomial.
    pub fn div_constant(&self, d: &MPoly) -> Result<MPoly> {
        let c = d.as_constant().ok_or(Error::NonConstantDivisor)?;
        if c.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.scale(&c.recip()))
    }

    /// Double-precision evaluation at a total assignment of the variables
    /// appearing in the polynomial.
    pub fn eval_f64(&self, bindings: &[(Var, f64)]) -> Result<f64> {
        let mut values = [None; NUM_VARS];
        for (v, x) in bindings {
            values[v.index()] = Some(*x);
        }
        let mut total = 0.0;
        for (m, c) in &self.terms {
            let mut term = c.to_f64().expect("rational out of f64 range");
            for v in Var::ALL {
                let e = m.exponent(v);
                if e == 0 {
                    continue;
                }
                let x = values[v.index()].ok_or(Error::UnboundVariable(v))?;
                term *= x.powi(e as i32);
            }
            total += term;
        }
        Ok(total)
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(self, rhs: MPoly) -> MPoly {
        &self + &rhs
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(self, rhs: MPoly) -> MPoly {
        &self - &rhs
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        &self * &rhs
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

/// Canonical text form: terms in descending graded-lex order, coefficients
/// as `p` or `p/q`, `*` between factors, `^` for powers. Examples:
/// `8*t^3 - 4*s*t`, `1/2 + 1/2*t`, `0`.
impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_constant() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for MPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<MPoly> {
        Parser::new(s).parse()
    }
}

/// Recursive-descent parser for polynomial expressions.
///
/// Grammar (whitespace insensitive):
/// ```text
/// expr   := ['-'] term (('+'|'-') term)*
/// term   := factor (('*'|'/') factor)*
/// factor := atom ['^' integer]
/// atom   := integer | variable | '(' expr ')' | '-' atom
/// ```
/// Division is only defined by nonzero rational constants, which covers the
/// specializations used here such as `(1+t)/2`.
struct Parser<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Parser<'a> {
        Parser {
            chars: s.chars().peekable(),
        }
    }

    fn parse(mut self) -> Result<MPoly> {
        let p = self.expr()?;
        self.skip_ws();
        match self.chars.peek() {
            None => Ok(p),
            Some(c) => Err(Error::Parse(format!("unexpected character `{c}`"))),
        }
    }

    fn skip_ws(&mut self) {
        while matches!(self.chars.peek(), Some(c) if c.is_whitespace()) {
            self.chars.next();
        }
    }

    fn eat(&mut self, expected: char) -> bool {
        self.skip_ws();
        if self.chars.peek() == Some(&expected) {
            self.chars.next();
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<MPoly> {
        let mut acc = if self.eat('-') {
            -&self.term()?
        } else {
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MPoly> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.factor()?;
            } else if self.eat('/') {
                acc = acc.div_constant(&self.factor()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<MPoly> {
        let base = self.atom()?;
        if self.eat('^') {
            let e = self.integer()?;
            let e = u32::try_from(&e)
                .map_err(|_| Error::Parse(format!("invalid exponent {e}")))?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<MPoly> {
        self.skip_ws();
        match self.chars.peek().copied() {
            Some('(') => {
                self.chars.next();
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("expected `)`".into()));
                }
                Ok(inner)
            }
            Some('-') => {
                self.chars.next();
                Ok(-&self.atom()?)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(MPoly::constant(Rational::from_integer(n)))
            }
            Some(c) => match Var::from_letter(c) {
                Some(v) => {
                    self.chars.next();
                    Ok(MPoly::var(v))
                }
                None => Err(Error::Parse(format!("unexpected character `{c}`"))),
            },
            None => Err(Error::Parse("unexpected end of input".into())),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let mut digits = String::new();
        while matches!(self.chars.peek(), Some(c) if c.is_ascii_digit()) {
            digits.push(self.chars.next().unwrap());
        }
        if digits.is_empty() {
            return Err(Error::Parse("expected an integer".into()));
        }
        digits
            .parse::<BigInt>()
            .map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Convenience constructor for rational constants in tests and checks.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> MPoly {
        s.parse().unwrap()
    }

    #[test]
    fn monomial_product_and_cancellation() {
        assert_eq!(&p("2*t") * &p("2*t"), p("4*t^2"));
        assert_eq!(&p("4*t^2 - s") + &p("s"), p("4*t^2"));
        // 2t * U_2 - s * U_1 = U_3
        let prod = &p("2*t") * &p("4*t^2 - s");
        assert_eq!(&prod - &(&p("s") * &p("2*t")), p("8*t^3 - 4*s*t"));
    }

    #[test]
    fn substitute_specializations() {
        let half = p("(1+t)/2");
        assert_eq!(p("2*t").substitute(&[(Var::T, half)]), p("1 + t"));
        let pell = p("4*t^2 - s").substitute(&[(Var::T, p("1")), (Var::S, p("-1"))]);
        assert_eq!(pell, p("5"));
        let mixed = p("2*t").substitute(&[(Var::S, p("s*t")), (Var::T, p("(u+v)/2"))]);
        assert_eq!(mixed, p("u + v"));
    }

    #[test]
    fn eval_examples() {
        let u2 = p("4*t^2 - s");
        assert_eq!(u2.eval_f64(&[(Var::S, 1.0), (Var::T, 0.5)]).unwrap(), 0.0);
        assert_eq!(p("2*t").eval_f64(&[(Var::T, 0.25)]).unwrap(), 0.5);
        let u4 = p("16*t^4 - 12*s*t^2 + s^2");
        assert_eq!(
            u4.eval_f64(&[(Var::S, -1.0), (Var::T, 1.0)]).unwrap(),
            29.0
        );
    }

    #[test]
    fn eval_unbound_variable_errors() {
        let err = p("4*t^2 - s").eval_f64(&[(Var::T, 1.0)]).unwrap_err();
        assert!(matches!(err, Error::UnboundVariable(Var::S)));
    }

    #[test]
    fn display_canonical_order() {
        assert_eq!(p("8*t^3 - 4*s*t").to_string(), "8*t^3 - 4*s*t");
        assert_eq!(p("-s + 4*t^2").to_string(), "4*t^2 - s");
        assert_eq!(p("(1+t)/2").to_string(), "1/2*t + 1/2");
        assert_eq!(MPoly::zero().to_string(), "0");
        assert_eq!(p("t - t").to_string(), "0");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("4x".parse::<MPoly>().is_err());
        assert!("(1+t".parse::<MPoly>().is_err());
        assert!("t/(1+s)".parse::<MPoly>().is_err());
        assert!("1/0".parse::<MPoly>().is_err());
    }

    prop_compose! {
        fn arb_poly()(terms in prop::collection::vec(
            ((0u32..3, 0u32..3, 0u32..3), -5i64..=5, 1i64..=3),
            0..4,
        )) -> MPoly {
            let mut out = MPoly::zero();
            for ((es, et, eu), num, den) in terms {
                let m = Monomial::new([es, et, eu, 0, 0, 0]);
                out.add_term(m, rat(num, den));
            }
            out
        }
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &(-&a), MPoly::zero());
        }

        #[test]
        fn substitute_identity_is_identity(a in arb_poly()) {
            let id: Vec<_> = Var::ALL.iter().map(|&v| (v, MPoly::var(v))).collect();
            prop_assert_eq!(a.substitute(&id), a);
        }

        #[test]
        fn display_round_trips(a in arb_poly()) {
            let back: MPoly = a.to_string().parse().unwrap();
            prop_assert_eq!(back, a);
        }

        #[test]
        fn eval_commutes_with_substitute(a in arb_poly(), sn in -3i64..=3, tn in -3i64..=3, un in -3i64..=3) {
            let rational_bindings = vec![
                (Var::S, MPoly::from_int(sn)),
                (Var::T, MPoly::from_int(tn)),
                (Var::U, MPoly::from_int(un)),
            ];
            let substituted = a.substitute(&rational_bindings)
                .as_constant()
                .expect("fully bound")
                .to_f64()
                .unwrap();
            let float_bindings = vec![
                (Var::S, sn as f64),
                (Var::T, tn as f64),
                (Var::U, un as f64),
            ];
            let direct = a.eval_f64(&float_bindings).unwrap();
            let scale = direct.abs().max(1.0);
            prop_assert!((direct - substituted).abs() <= 1e-12 * scale);
        }
    }
}
