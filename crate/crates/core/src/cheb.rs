//! Bivariate Chebyshev polynomials, their monomino-domino tiling model, the
//! series built from them, and the named integer sequences they specialize
//! to (parity, Pell, Euler numbers).
//!
//! `U_n = 2t U_{n-1} - s U_{n-2}` with `U_0 = 1`, `U_1 = 2t`, extended
//! backward by `U_{-1} = 0`. Equivalently, `U_n` is the weighted count of
//! tilings of a `1 x n` rectangle by two kinds of monominoes (weight `t`
//! each) and dominoes (weight `-s`).

use std::fmt;

use num::{BigInt, One};

use crate::error::{Error, Result};
use crate::poly::{MPoly, Rational};
use crate::series::EgfSeries;

/// One tile: a red or blue monomino covering one cell, or a domino
/// covering two.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Piece {
    MonominoRed,
    MonominoBlue,
    Domino,
}

impl Piece {
    pub fn cells(self) -> usize {
        match self {
            Piece::MonominoRed | Piece::MonominoBlue => 1,
            Piece::Domino => 2,
        }
    }
}

/// A tiling of a `1 x n` rectangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tiling {
    pieces: Vec<Piece>,
}

impl Tiling {
    pub fn new(pieces: Vec<Piece>) -> Tiling {
        Tiling { pieces }
    }

    pub fn empty() -> Tiling {
        Tiling { pieces: Vec::new() }
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    /// Number of cells covered.
    pub fn len(&self) -> usize {
        self.pieces.iter().map(|p| p.cells()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn num_dominoes(&self) -> usize {
        self.pieces.iter().filter(|p| **p == Piece::Domino).count()
    }

    /// Product of the piece weights: monomino -> `tArg`, domino -> `-sArg`.
    pub fn weight(&self, s_arg: &MPoly, t_arg: &MPoly) -> MPoly {
        let neg_s = -s_arg;
        let mut acc = MPoly::one();
        for piece in &self.pieces {
            acc = match piece {
                Piece::Domino => &acc * &neg_s,
                _ => &acc * t_arg,
            };
        }
        acc
    }
}

/// Tokens `r`, `b`, `d` for red monomino, blue monomino, domino.
impl fmt::Display for Tiling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pieces.is_empty() {
            return write!(f, "(empty)");
        }
        for (i, piece) in self.pieces.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            let token = match piece {
                Piece::MonominoRed => "r",
                Piece::MonominoBlue => "b",
                Piece::Domino => "d",
            };
            write!(f, "{token}")?;
        }
        Ok(())
    }
}

/// All tilings of a `1 x n` rectangle, in a fixed order.
pub fn tilings(n: usize) -> Vec<Tiling> {
    fn go(remaining: usize, prefix: &mut Vec<Piece>, out: &mut Vec<Tiling>) {
        if remaining == 0 {
            out.push(Tiling::new(prefix.clone()));
            return;
        }
        for piece in [Piece::MonominoRed, Piece::MonominoBlue, Piece::Domino] {
            if piece.cells() <= remaining {
                prefix.push(piece);
                go(remaining - piece.cells(), prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut out);
    out
}

/// The sum of tiling weights, which must agree with `cheb_u(n, ..)`.
pub fn tiling_sum(n: usize, s_arg: &MPoly, t_arg: &MPoly) -> MPoly {
    tilings(n)
        .iter()
        .fold(MPoly::zero(), |acc, t| &acc + &t.weight(s_arg, t_arg))
}

/// `U_n(sArg, tArg)` by the recurrence, with `U_{-1} = 0`.
pub fn cheb_u(n: i64, s_arg: &MPoly, t_arg: &MPoly) -> Result<MPoly> {
    if n < -1 {
        return Err(Error::ChebIndexOutOfRange(n));
    }
    Ok(cheb_u_list(n, s_arg, t_arg).pop().unwrap())
}

/// `U_{-1}, U_0, ..., U_n` in one pass.
fn cheb_u_list(n: i64, s_arg: &MPoly, t_arg: &MPoly) -> Vec<MPoly> {
    let two_t = t_arg.scale(&Rational::from_integer(2.into()));
    let mut list = vec![MPoly::zero()];
    if n >= 0 {
        list.push(MPoly::one());
    }
    for k in 2..=(n + 1) as usize {
        let next = &(&two_t * &list[k - 1]) - &(s_arg * &list[k - 2]);
        list.push(next);
    }
    list
}

/// The series `V(sArg, tArg; x)` with `c_0 = c_1 = 0` and `c_{n+2} = U_n`.
pub fn series_v(s_arg: &MPoly, t_arg: &MPoly, order: usize) -> EgfSeries {
    if order < 2 {
        return EgfSeries::zero(order);
    }
    let us = cheb_u_list(order as i64 - 2, s_arg, t_arg);
    EgfSeries::with_order(order, |n| {
        if n < 2 {
            MPoly::zero()
        } else {
            us[n - 1].clone() // us[k+1] = U_k
        }
    })
}

/// Pell numbers with `g_0 = 1`, `g_1 = 0`, `g_n = 2 g_{n-1} + g_{n-2}`.
pub fn pell(count: usize) -> Vec<BigInt> {
    let mut out: Vec<BigInt> = Vec::with_capacity(count);
    for n in 0..count {
        let next = match n {
            0 => BigInt::one(),
            1 => BigInt::ZERO,
            _ => 2 * &out[n - 1] + &out[n - 2],
        };
        out.push(next);
    }
    out
}

/// The parity sequence `f_n = (n+1) mod 2`, i.e. 1, 0, 1, 0, ...
pub fn parity(count: usize) -> Vec<BigInt> {
    (0..count).map(|n| BigInt::from((n + 1) % 2)).collect()
}

/// Euler numbers from their defining series: `E_n` is the coefficient of
/// `x^n/n!` in `sec(x) + tan(x) = (1 + sin(x)) / cos(x)`.
pub fn euler_numbers(count: usize) -> Vec<BigInt> {
    if count == 0 {
        return Vec::new();
    }
    let order = count - 1;
    let sec = EgfSeries::cos(order).reciprocal().expect("cos has constant term 1");
    let one_plus_sin = &EgfSeries::one(order) + &EgfSeries::sin(order);
    let sec_plus_tan = &one_plus_sin * &sec;
    sec_plus_tan
        .coeffs()
        .iter()
        .map(|c| {
            let r = c.as_constant().expect("constant coefficients");
            assert!(r.is_integer(), "Euler numbers are integers");
            r.to_integer()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{enumerate, PermSet, Permutation};
    use crate::poly::Var;

    fn p(s: &str) -> MPoly {
        s.parse().unwrap()
    }

    fn s() -> MPoly {
        MPoly::var(Var::S)
    }

    fn t() -> MPoly {
        MPoly::var(Var::T)
    }

    #[test]
    fn chebyshev_table() {
        let table = [
            "1",
            "2*t",
            "4*t^2 - s",
            "8*t^3 - 4*s*t",
            "16*t^4 - 12*s*t^2 + s^2",
            "32*t^5 - 32*s*t^3 + 6*s^2*t",
            "64*t^6 - 80*s*t^4 + 24*s^2*t^2 - s^3",
            "128*t^7 - 192*s*t^5 + 80*s^2*t^3 - 8*s^3*t",
        ];
        for (n, expected) in table.iter().enumerate() {
            assert_eq!(cheb_u(n as i64, &s(), &t()).unwrap(), p(expected), "n = {n}");
        }
        assert_eq!(cheb_u(-1, &s(), &t()).unwrap(), MPoly::zero());
        assert!(cheb_u(-2, &s(), &t()).is_err());
    }

    #[test]
    fn pell_specialization() {
        // g_n = U_{n-2}(-1, 1)
        let g = pell(13);
        for (n, expected) in g.iter().enumerate().skip(2) {
            let u = cheb_u(n as i64 - 2, &p("-1"), &p("1")).unwrap();
            assert_eq!(&u.as_constant().unwrap().to_integer(), expected);
        }
        assert_eq!(
            cheb_u(4, &p("-1"), &p("1")).unwrap(),
            MPoly::from_int(29)
        );
    }

    #[test]
    fn geometric_specialization() {
        // U_n(t, (1+t)/2) = 1 + t + ... + t^n
        let half = p("(1+t)/2");
        for n in 1..=30u32 {
            let got = cheb_u(n as i64, &t(), &half).unwrap();
            let mut expected = MPoly::zero();
            for k in 0..=n {
                expected = &expected + &p("t").pow(k);
            }
            assert_eq!(got, expected, "n = {n}");
        }
    }

    #[test]
    fn tilings_match_recurrence() {
        assert_eq!(tiling_sum(0, &s(), &t()), MPoly::one());
        assert_eq!(tiling_sum(2, &s(), &t()), p("4*t^2 - s"));
        assert_eq!(tiling_sum(3, &s(), &t()), p("8*t^3 - 4*s*t"));
        for n in 0..=8 {
            assert_eq!(
                tiling_sum(n, &s(), &t()),
                cheb_u(n as i64, &s(), &t()).unwrap(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn tiling_counts() {
        // Tiling counts follow T(n) = 2 T(n-1) + T(n-2), the Pell-like
        // recurrence with T(0) = 1, T(1) = 2.
        let counts: Vec<usize> = (0..7).map(|n| tilings(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 12, 29, 70, 169]);
    }

    #[test]
    fn series_v_coefficients() {
        let v = series_v(&s(), &t(), 6);
        assert!(v.coeff(0).is_zero() && v.coeff(1).is_zero());
        assert_eq!(v.coeff(2), &MPoly::one());
        assert_eq!(v.coeff(3), &p("2*t"));
        assert_eq!(v.coeff(4), &p("4*t^2 - s"));

        // F = 1 + V(-1, 0; x) has coefficients 1, 0, 1, 0, ...
        let f = &EgfSeries::one(8) + &series_v(&p("-1"), &p("0"), 8);
        for n in 0..=8 {
            let expected = if n % 2 == 0 { MPoly::one() } else { MPoly::zero() };
            assert_eq!(f.coeff(n), &expected);
        }

        // G = 1 + V(-1, 1; x) has Pell coefficients.
        let g = &EgfSeries::one(12) + &series_v(&p("-1"), &p("1"), 12);
        let pells = pell(13);
        for (n, expected) in pells.iter().enumerate() {
            assert_eq!(
                &g.coeff(n).as_constant().unwrap().to_integer(),
                expected,
                "n = {n}"
            );
        }

        // termwise addition: (F + G) at n = 4 is f_4 + g_4 = 1 + 5.
        let f = &EgfSeries::one(12) + &series_v(&p("-1"), &p("0"), 12);
        assert_eq!((&f + &g).coeff(4), &MPoly::from_int(6));
    }

    #[test]
    fn v_squared_counts_ordered_block_pairs() {
        // c_4 of V^2 is binom(4,2) * U_0 * U_0 = 6: the six ways to split
        // [4] into two ordered blocks of size 2.
        let v = series_v(&s(), &t(), 4);
        let sq = &v * &v;
        assert_eq!(sq.coeff(4), &MPoly::from_int(6));
        for n in 0..4 {
            assert!(sq.coeff(n).is_zero());
        }
    }

    #[test]
    fn exp_log_round_trip_on_one_plus_v() {
        let one_plus_v = &EgfSeries::one(8) + &series_v(&s(), &t(), 8);
        let back = one_plus_v.log().unwrap().truncate(8).exp().unwrap();
        assert_eq!(back, one_plus_v);
    }

    #[test]
    fn ordinary_generating_function() {
        // (1 - 2tx + sx^2) * sum U_n x^n = 1 up to degree 15, as ordinary
        // (not exponential) series in x.
        let us = cheb_u_list(15, &s(), &t());
        let mut product = vec![MPoly::zero(); 16];
        let two_t = p("2*t");
        let u = |k: i64| -> MPoly {
            if k < -1 {
                MPoly::zero()
            } else {
                us[(k + 1) as usize].clone()
            }
        };
        for (n, slot) in product.iter_mut().enumerate() {
            // coefficient of x^n in (1 - 2tx + sx^2) * sum U_k x^k
            *slot = &(&u(n as i64) - &(&two_t * &u(n as i64 - 1)))
                + &(&s() * &u(n as i64 - 2));
        }
        assert_eq!(product[0], MPoly::one());
        for c in &product[1..] {
            assert!(c.is_zero());
        }
    }

    #[test]
    fn egf_recurrence_at_series_level() {
        let sv = EgfSeries::with_order(10, |n| cheb_u(n as i64, &s(), &t()).unwrap());
        let two_t = p("2*t");
        for n in 0..=8usize {
            let lhs = sv.coeff(n + 2);
            let rhs = &(&two_t * sv.coeff(n + 1)) - &(&s() * sv.coeff(n));
            assert_eq!(lhs, &rhs);
        }
    }

    #[test]
    fn pell_and_parity_tables() {
        let g = pell(13);
        let expected = [1, 0, 1, 2, 5, 12, 29, 70, 169, 408, 985, 2378, 5741];
        for (a, b) in g.iter().zip(expected) {
            assert_eq!(a, &BigInt::from(b));
        }
        assert_eq!(parity(7), vec![1, 0, 1, 0, 1, 0, 1].into_iter().map(BigInt::from).collect::<Vec<_>>());
    }

    #[test]
    fn euler_numbers_match_alternating_counts() {
        let e = euler_numbers(11);
        assert_eq!(e[3], BigInt::from(2));
        assert_eq!(e[4], BigInt::from(5));
        for (n, expected) in e.iter().enumerate().take(9) {
            let count = enumerate(n, PermSet::All)
                .filter(Permutation::is_alternating)
                .count();
            assert_eq!(expected, &BigInt::from(count), "n = {n}");
        }
    }

    #[test]
    fn g_closed_form_matches_numerically() {
        let g = &EgfSeries::one(24) + &series_v(&p("-1"), &p("1"), 24);
        let x = 0.2f64;
        let got = g.eval_f64(&[], x).unwrap();
        let want = 0.5 * x.exp() * (2.0 * (x * 2f64.sqrt()).cosh() - 2f64.sqrt() * (x * 2f64.sqrt()).sinh());
        assert!((got - want).abs() <= 1e-8 * want.abs());
    }
}
