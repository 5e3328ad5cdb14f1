//! Exact arithmetic for permutation statistics and their generating
//! functions.
//!
//! The crate has three layers:
//!
//! - an exact computational core: arbitrary-precision rationals, sparse
//!   multivariate polynomials in `s, t, u, v, w, y` ([`poly`]), and
//!   truncated exponential generating series with polynomial coefficients
//!   ([`series`]);
//! - the combinatorics: permutations with their linear and cyclic
//!   statistics and exhaustive distributions ([`perm`]), valley-hopping and
//!   Foata bijections ([`hop`]), and bivariate Chebyshev polynomials with
//!   their monomino-domino tiling model ([`cheb`]);
//! - a verification harness ([`verify`]) that replays every identity the
//!   engines encode against brute-force enumeration at desk scale, plus
//!   OEIS b-file comparison ([`bfile`]).

pub mod bfile;
pub mod cheb;
mod error;
pub mod hop;
pub mod perm;
pub mod poly;
pub mod series;
pub mod verify;

pub use error::{Error, Result};

pub use cheb::{cheb_u, euler_numbers, parity, pell, series_v, tiling_sum, tilings, Piece, Tiling};
pub use hop::{
    big_phi, big_phi_inv, big_phi_ring, big_phi_ring_inv, foata_o, foata_o_inv, foata_o_prime,
    foata_o_prime_inv, phi_k, phi_set, theta_k, theta_set, Color, ColoredDerangement, ColoredPerm,
};
pub use perm::{
    count_matching, distribution, enumerate, increasing_runs, LetterClass, PermSet, Permutation,
    Stat,
};
pub use poly::{rat, MPoly, Monomial, Rational, Var};
pub use series::EgfSeries;
pub use verify::{
    all_check_ids, check_identity, cyclic_series, enumerate_objects, fixed_points, linear_series,
    partition_sum, BarMode, BarTilingObject, CheckParams, CheckReport, CheckStatus,
};
