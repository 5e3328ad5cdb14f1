//! Truncated exponential generating series with polynomial coefficients.
//!
//! An [`EgfSeries`] of order `N` stores the coefficients of `x^n/n!` for
//! `n = 0..=N`. Multiplication is the binomial convolution
//! `c_n(ab) = sum_k C(n,k) c_k(a) c_{n-k}(b)`, which is what makes the
//! set-partition arguments behind the identities in this crate direct
//! computations. Operations on series of different orders truncate to the
//! smaller order.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num::{BigInt, One, Zero};

use crate::error::{Error, Result};
use crate::poly::{MPoly, Rational, Var};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EgfSeries {
    coeffs: Vec<MPoly>,
}

impl EgfSeries {
    /// Build a series from the coefficients of `x^n/n!`. The order is
    /// `coeffs.len() - 1`; an empty vector is treated as order 0.
    pub fn new(coeffs: Vec<MPoly>) -> EgfSeries {
        if coeffs.is_empty() {
            EgfSeries::zero(0)
        } else {
            EgfSeries { coeffs }
        }
    }

    pub fn with_order(order: usize, f: impl FnMut(usize) -> MPoly) -> EgfSeries {
        EgfSeries {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn zero(order: usize) -> EgfSeries {
        EgfSeries::with_order(order, |_| MPoly::zero())
    }

    pub fn one(order: usize) -> EgfSeries {
        EgfSeries::with_order(order, |n| if n == 0 { MPoly::one() } else { MPoly::zero() })
    }

    /// The series `x` (coefficient 1 at n = 1).
    pub fn x(order: usize) -> EgfSeries {
        EgfSeries::with_order(order, |n| if n == 1 { MPoly::one() } else { MPoly::zero() })
    }

    /// `e^x`: every coefficient 1.
    pub fn exp_x(order: usize) -> EgfSeries {
        EgfSeries::with_order(order, |_| MPoly::one())
    }

    /// `e^{cx}` for a polynomial `c`: coefficient `c^n` at `x^n/n!`.
    pub fn exp_cx(c: &MPoly, order: usize) -> EgfSeries {
        EgfSeries::with_order(order, |n| c.pow(n as u32))
    }

    /// `sin(x)`: coefficients 0, 1, 0, -1, ...
    pub fn sin(order: usize) -> EgfSeries {
        EgfSeries::with_order(order, |n| match n % 4 {
            1 => MPoly::one(),
            3 => MPoly::from_int(-1),
            _ => MPoly::zero(),
        })
    }

    /// `cos(x)`: coefficients 1, 0, -1, 0, ...
    pub fn cos(order: usize) -> EgfSeries {
        EgfSeries::with_order(order, |n| match n % 4 {
            0 => MPoly::one(),
            2 => MPoly::from_int(-1),
            _ => MPoly::zero(),
        })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^n/n!`.
    pub fn coeff(&self, n: usize) -> &MPoly {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[MPoly] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> EgfSeries {
        let keep = order.min(self.order());
        EgfSeries {
            coeffs: self.coeffs[..=keep].to_vec(),
        }
    }

    pub fn scale(&self, c: &MPoly) -> EgfSeries {
        EgfSeries {
            coeffs: self.coeffs.iter().map(|p| p * c).collect(),
        }
    }

    /// Shift down: `c_n(a') = c_{n+1}(a)`, dropping the order by one.
    pub fn derivative(&self) -> Result<EgfSeries> {
        if self.order() == 0 {
            return Err(Error::DerivativeOrderZero);
        }
        Ok(EgfSeries {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// Termwise integration with constant term 0 (the order grows by one).
    pub fn integrate(&self) -> EgfSeries {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(MPoly::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        EgfSeries { coeffs }
    }

    /// Multiplicative inverse up to the order, via the binomial-convolution
    /// recurrence `b_0 = 1/c_0`, `b_n = -(1/c_0) sum_{k>=1} C(n,k) c_k b_{n-k}`.
    /// Requires the constant term to be a nonzero rational constant.
    pub fn reciprocal(&self) -> Result<EgfSeries> {
        let c0 = self.coeffs[0]
            .as_constant()
            .filter(|c| !c.is_zero())
            .ok_or_else(|| Error::NonConstantLeadingTerm(self.coeffs[0].to_string()))?;
        let inv_c0 = MPoly::constant(c0.recip());
        let neg_inv_c0 = -&inv_c0;
        let order = self.order();
        let mut out: Vec<MPoly> = Vec::with_capacity(order + 1);
        out.push(inv_c0);
        for n in 1..=order {
            let row = pascal_row(n);
            let mut acc = MPoly::zero();
            for k in 1..=n {
                let prod = &self.coeffs[k] * &out[n - k];
                acc = &acc + &prod.scale(&Rational::from_integer(row[k].clone()));
            }
            out.push(&neg_inv_c0 * &acc);
        }
        Ok(EgfSeries { coeffs: out })
    }

    /// Logarithm of a series with constant term 1, via `L' = a'/a`
    /// integrated termwise with `L_0 = 0`.
    pub fn log(&self) -> Result<EgfSeries> {
        if self.coeffs[0].as_constant() != Some(Rational::one()) {
            return Err(Error::LogConstantTerm(self.coeffs[0].to_string()));
        }
        if self.order() == 0 {
            return Ok(EgfSeries::zero(0));
        }
        let quotient = &self.derivative()? * &self.reciprocal()?;
        Ok(quotient.integrate())
    }

    /// Exponential of a series with constant term 0, via the first-order
    /// recurrence `E_0 = 1`, `E_{n+1} = sum_k C(n,k) a_{k+1} E_{n-k}`.
    pub fn exp(&self) -> Result<EgfSeries> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ExpConstantTerm(self.coeffs[0].to_string()));
        }
        let order = self.order();
        let mut out: Vec<MPoly> = Vec::with_capacity(order + 1);
        out.push(MPoly::one());
        for n in 0..order {
            let row = pascal_row(n);
            let mut acc = MPoly::zero();
            for k in 0..=n {
                let prod = &self.coeffs[k + 1] * &out[n - k];
                acc = &acc + &prod.scale(&Rational::from_integer(row[k].clone()));
            }
            out.push(acc);
        }
        Ok(EgfSeries { coeffs: out })
    }

    /// `a^e = exp(e * log(a))` for a series with constant term 1. The
    /// exponent may be any polynomial, e.g. the cycle-marking variable `w`.
    pub fn pow(&self, e: &MPoly) -> Result<EgfSeries> {
        if self.coeffs[0].as_constant() != Some(Rational::one()) {
            return Err(Error::PowConstantTerm(self.coeffs[0].to_string()));
        }
        self.log()?.scale(e).truncate(self.order()).exp()
    }

    /// `sum_n c_n(bindings) x0^n / n!` in double precision.
    pub fn eval_f64(&self, bindings: &[(Var, f64)], x0: f64) -> Result<f64> {
        let mut total = 0.0;
        let mut weight = 1.0; // x0^n / n!
        for (n, c) in self.coeffs.iter().enumerate() {
            if n > 0 {
                weight *= x0 / n as f64;
            }
            total += c.eval_f64(bindings)? * weight;
        }
        Ok(total)
    }

    /// Coefficients rendered as strings, for JSON output.
    pub fn to_poly_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

impl Add for &EgfSeries {
    type Output = EgfSeries;
    fn add(self, rhs: &EgfSeries) -> EgfSeries {
        let order = self.order().min(rhs.order());
        EgfSeries::with_order(order, |n| &self.coeffs[n] + &rhs.coeffs[n])
    }
}

impl Sub for &EgfSeries {
    type Output = EgfSeries;
    fn sub(self, rhs: &EgfSeries) -> EgfSeries {
        let order = self.order().min(rhs.order());
        EgfSeries::with_order(order, |n| &self.coeffs[n] - &rhs.coeffs[n])
    }
}

impl Mul for &EgfSeries {
    type Output = EgfSeries;
    fn mul(self, rhs: &EgfSeries) -> EgfSeries {
        let order = self.order().min(rhs.order());
        let mut coeffs = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let row = pascal_row(n);
            let mut acc = MPoly::zero();
            for (k, binom) in row.iter().enumerate() {
                if self.coeffs[k].is_zero() || rhs.coeffs[n - k].is_zero() {
                    continue;
                }
                let prod = &self.coeffs[k] * &rhs.coeffs[n - k];
                acc = &acc + &prod.scale(&Rational::from_integer(binom.clone()));
            }
            coeffs.push(acc);
        }
        EgfSeries { coeffs }
    }
}

/// Indexed display, one line per coefficient: `n: <polynomial>`.
impl fmt::Display for EgfSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, c) in self.coeffs.iter().enumerate() {
            writeln!(f, "{n}: {c}")?;
        }
        Ok(())
    }
}

/// Row `n` of Pascal's triangle as big integers.
fn pascal_row(n: usize) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n + 1);
    row.push(BigInt::one());
    for k in 0..n {
        let next = &row[k] * BigInt::from(n - k) / BigInt::from(k + 1);
        row.push(next);
    }
    row
}
