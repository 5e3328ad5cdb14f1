//! Executable checks for the identities this crate implements: exact
//! coefficient comparisons between series engines and brute-force
//! distributions, the bar-tiling proof objects with their sign-reversing
//! involution, and floating-point spot checks of hyperbolic closed forms.

use std::collections::BTreeSet;
use std::fmt;
use std::time::Instant;

use num::traits::ToPrimitive;
use num::{BigInt, One, Zero};
use serde::Serialize;

use crate::cheb::{cheb_u, euler_numbers, pell, series_v, tilings, Piece, Tiling};
use crate::error::{Error, Result};
use crate::hop::{
    big_phi, big_phi_inv, big_phi_ring, big_phi_ring_inv, colored_derangements, colored_perms,
    foata_o, ColoredDerangement, ColoredPerm,
};
use crate::perm::{
    count_matching, distribution, enumerate, LetterClass, PermSet, Permutation, Stat, MAX_ENUM_N,
};
use crate::poly::{rat, MPoly, Monomial, Rational, Var};
use crate::series::EgfSeries;

// ---------------------------------------------------------------------------
// Bar-tiling proof objects
// ---------------------------------------------------------------------------

/// Whether the object carries a distinguished leading block read with a
/// virtual `infinity` prefix (the one-line story) or consists solely of
/// blocks of size at least two (the cycle story).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BarMode {
    Linear,
    Cyclic,
}

/// An ordered set partition of `[n]` into strictly decreasing blocks, each
/// carrying a monomino-domino tiling of its interior cells.
///
/// In `Linear` mode the leading block's cells are all its letters except the
/// last (the virtual `infinity` plays the role of the missing first letter),
/// and every other block must have size at least two with cells excluding
/// its first and last letters. In `Cyclic` mode every block follows the
/// interior-cell rule. The signed weight is
/// `s^k * prod(monomino -> t, domino -> -s)` with `k` the number of
/// non-leading blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BarTilingObject {
    mode: BarMode,
    blocks: Vec<Vec<u32>>,
    tilings: Vec<Tiling>,
}

impl BarTilingObject {
    pub fn new(mode: BarMode, blocks: Vec<Vec<u32>>, tilings: Vec<Tiling>) -> Result<Self> {
        let object = BarTilingObject {
            mode,
            blocks,
            tilings,
        };
        object.validate()?;
        Ok(object)
    }

    fn validate(&self) -> Result<()> {
        let n: usize = self.blocks.iter().map(Vec::len).sum();
        let mut seen = vec![false; n];
        for (b, block) in self.blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidBarTiling("empty block".into()));
            }
            let min_size = if self.mode == BarMode::Linear && b == 0 { 1 } else { 2 };
            if block.len() < min_size {
                return Err(Error::InvalidBarTiling(format!(
                    "block {b} has size {} (minimum {min_size})",
                    block.len()
                )));
            }
            for window in block.windows(2) {
                if window[0] <= window[1] {
                    return Err(Error::InvalidBarTiling(format!(
                        "block {b} is not strictly decreasing"
                    )));
                }
            }
            for &letter in block {
                let idx = letter as usize;
                if idx == 0 || idx > n || seen[idx - 1] {
                    return Err(Error::InvalidBarTiling(format!(
                        "blocks do not partition [{n}]"
                    )));
                }
                seen[idx - 1] = true;
            }
        }
        if self.tilings.len() != self.blocks.len() {
            return Err(Error::InvalidBarTiling(
                "one tiling required per block".into(),
            ));
        }
        for (b, tiling) in self.tilings.iter().enumerate() {
            if tiling.len() != self.cell_count(b) {
                return Err(Error::InvalidBarTiling(format!(
                    "tiling of block {b} covers {} cells, expected {}",
                    tiling.len(),
                    self.cell_count(b)
                )));
            }
        }
        Ok(())
    }

    pub fn mode(&self) -> BarMode {
        self.mode
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn tilings(&self) -> &[Tiling] {
        &self.tilings
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    fn is_leading(&self, block: usize) -> bool {
        self.mode == BarMode::Linear && block == 0
    }

    fn cell_count(&self, block: usize) -> usize {
        let len = self.blocks[block].len();
        if self.is_leading(block) {
            len - 1
        } else {
            len - 2
        }
    }

    /// Local index of the first cell within a block.
    fn cell_start(&self, block: usize) -> usize {
        if self.is_leading(block) {
            0
        } else {
            1
        }
    }

    /// The concatenated word.
    pub fn word(&self) -> Vec<u32> {
        self.blocks.iter().flatten().copied().collect()
    }

    fn block_starts(&self) -> Vec<usize> {
        let mut starts = Vec::with_capacity(self.blocks.len());
        let mut offset = 0;
        for block in &self.blocks {
            starts.push(offset);
            offset += block.len();
        }
        starts
    }

    /// Global positions `p` such that a domino covers `(p, p+1)`.
    fn domino_starts(&self) -> Vec<usize> {
        let starts = self.block_starts();
        let mut out = Vec::new();
        for (b, tiling) in self.tilings.iter().enumerate() {
            let mut cell = starts[b] + self.cell_start(b);
            for piece in tiling.pieces() {
                if *piece == Piece::Domino {
                    out.push(cell);
                }
                cell += piece.cells();
            }
        }
        out
    }

    /// `s^k * prod(piece weights)` in the plain variables `s`, `t`.
    pub fn weight(&self) -> MPoly {
        let s = MPoly::var(Var::S);
        let t = MPoly::var(Var::T);
        let k = self.blocks.len() - usize::from(self.mode == BarMode::Linear);
        let mut acc = s.pow(k as u32);
        for tiling in &self.tilings {
            acc = &acc * &tiling.weight(&s, &t);
        }
        acc
    }

    pub fn num_dominoes(&self) -> usize {
        self.tilings.iter().map(Tiling::num_dominoes).sum()
    }

    /// True when the object survives the cancellation: no dominoes, and an
    /// ascent across every bar.
    pub fn is_fixed_point(&self) -> bool {
        if self.num_dominoes() > 0 {
            return false;
        }
        self.blocks
            .windows(2)
            .all(|pair| pair[0].last().unwrap() < pair[1].first().unwrap())
    }

    /// One step of the sign-reversing involution: scan pairs left to right
    /// and act on the first domino or descent-across-a-bar found. A domino
    /// becomes a bar (splitting its block) and a descent across a bar
    /// becomes a domino (merging the blocks); the weight is exactly
    /// negated.
    pub fn involution_step(&self) -> Result<BarTilingObject> {
        let word = self.word();
        let starts = self.block_starts();
        let dominoes: BTreeSet<usize> = self.domino_starts().into_iter().collect();
        let mut block_of = vec![0usize; word.len()];
        for (b, &start) in starts.iter().enumerate() {
            block_of[start..start + self.blocks[b].len()].fill(b);
        }
        for i in 0..word.len().saturating_sub(1) {
            let has_domino = dominoes.contains(&i);
            let crosses_bar = block_of[i] != block_of[i + 1];
            // A domino lies inside one block, so it can never sit on a bar.
            assert!(!(has_domino && crosses_bar), "domino spans a bar");
            if has_domino {
                return Ok(self.split_at(block_of[i], i - starts[block_of[i]]));
            }
            if crosses_bar && word[i] > word[i + 1] {
                return Ok(self.merge_at(block_of[i]));
            }
        }
        Err(Error::InvolutionFixedPoint)
    }

    /// Remove the domino covering local letters `(j, j+1)` of `block` and
    /// insert a bar between them.
    fn split_at(&self, block: usize, j: usize) -> BarTilingObject {
        let letters = &self.blocks[block];
        let mut left_pieces = Vec::new();
        let mut right_pieces = Vec::new();
        let mut cell = self.cell_start(block);
        let mut seen_split = false;
        for piece in self.tilings[block].pieces() {
            if *piece == Piece::Domino && cell == j {
                seen_split = true;
            } else if seen_split {
                right_pieces.push(*piece);
            } else {
                left_pieces.push(*piece);
            }
            cell += piece.cells();
        }
        debug_assert!(seen_split, "no domino at the split position");

        let mut blocks = self.blocks.clone();
        let mut tilings = self.tilings.clone();
        blocks[block] = letters[..=j].to_vec();
        blocks.insert(block + 1, letters[j + 1..].to_vec());
        tilings[block] = Tiling::new(left_pieces);
        tilings.insert(block + 1, Tiling::new(right_pieces));
        BarTilingObject::new(self.mode, blocks, tilings).expect("split keeps the object valid")
    }

    /// Merge `block` with its right neighbor and cover the boundary pair
    /// with a domino.
    fn merge_at(&self, block: usize) -> BarTilingObject {
        let mut blocks = self.blocks.clone();
        let mut tilings = self.tilings.clone();
        let right_letters = blocks.remove(block + 1);
        let right_tiling = tilings.remove(block + 1);
        blocks[block].extend(right_letters);
        let mut pieces = tilings[block].pieces().to_vec();
        pieces.push(Piece::Domino);
        pieces.extend_from_slice(right_tiling.pieces());
        tilings[block] = Tiling::new(pieces);
        BarTilingObject::new(self.mode, blocks, tilings).expect("merge keeps the object valid")
    }

    /// Read a linear-mode fixed point as a colored permutation: the word
    /// with each monomino's color attached to its letter.
    pub fn to_colored_perm(&self) -> Result<ColoredPerm> {
        if self.mode != BarMode::Linear {
            return Err(Error::InvalidBarTiling("expected a linear-mode object".into()));
        }
        if !self.is_fixed_point() {
            return Err(Error::InvalidBarTiling("not a fixed point".into()));
        }
        let base = Permutation::new(self.word())?;
        let mut colors = std::collections::BTreeMap::new();
        let starts = self.block_starts();
        for (b, tiling) in self.tilings.iter().enumerate() {
            // fixed points are all monominoes, one cell per piece
            for (pos, piece) in (starts[b] + self.cell_start(b)..).zip(tiling.pieces()) {
                let color = match piece {
                    Piece::MonominoRed => crate::hop::Color::Red,
                    Piece::MonominoBlue => crate::hop::Color::Blue,
                    Piece::Domino => unreachable!("fixed points have no dominoes"),
                };
                colors.insert(pos, color);
            }
        }
        ColoredPerm::new(base, colors)
    }

    /// Read a cyclic-mode fixed point as a colored derangement: merge
    /// blocks whose first letter is not a left-to-right maximum of the
    /// word, then read the merged blocks as cycles.
    pub fn to_colored_derangement(&self) -> Result<ColoredDerangement> {
        if self.mode != BarMode::Cyclic {
            return Err(Error::InvalidBarTiling("expected a cyclic-mode object".into()));
        }
        if !self.is_fixed_point() {
            return Err(Error::InvalidBarTiling("not a fixed point".into()));
        }
        let word = self.word();
        let maxima: BTreeSet<usize> = Permutation::new(word.clone())?
            .left_to_right_maxima()
            .into_iter()
            .collect();
        let starts = self.block_starts();
        let mut cycles: Vec<Vec<u32>> = Vec::new();
        for (b, block) in self.blocks.iter().enumerate() {
            // 1-based position of the block's first letter in the word.
            if b == 0 || maxima.contains(&(starts[b] + 1)) {
                cycles.push(block.clone());
            } else {
                cycles.last_mut().unwrap().extend(block.iter().copied());
            }
        }
        let base = Permutation::from_cycles(&cycles, self.n())?;
        let mut colors = std::collections::BTreeMap::new();
        for (b, tiling) in self.tilings.iter().enumerate() {
            for (local, piece) in (self.cell_start(b)..).zip(tiling.pieces()) {
                let color = match piece {
                    Piece::MonominoRed => crate::hop::Color::Red,
                    Piece::MonominoBlue => crate::hop::Color::Blue,
                    Piece::Domino => unreachable!("fixed points have no dominoes"),
                };
                let letter = self.blocks[b][local];
                let position = base
                    .word()
                    .iter()
                    .position(|&x| x == letter)
                    .expect("letter present");
                colors.insert(position, color);
            }
        }
        ColoredDerangement::new(base, colors)
    }
}

/// Renders like `inf 7b [6 5] 3r 2 | 9 8r 4b 1`: monominoes as letter plus
/// color suffix, dominoes bracketing their two letters, bars between blocks.
impl fmt::Display for BarTilingObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (b, block) in self.blocks.iter().enumerate() {
            if b == 0 {
                if self.mode == BarMode::Linear {
                    write!(f, "inf")?;
                }
            } else {
                write!(f, " |")?;
            }
            let mut rendered: Vec<String> = Vec::new();
            let mut covered = vec![None::<Piece>; block.len()];
            let mut cell = self.cell_start(b);
            for piece in self.tilings[b].pieces() {
                covered[cell] = Some(*piece);
                cell += piece.cells();
            }
            let mut j = 0;
            while j < block.len() {
                match covered[j] {
                    Some(Piece::Domino) => {
                        rendered.push(format!("[{} {}]", block[j], block[j + 1]));
                        j += 2;
                    }
                    Some(Piece::MonominoRed) => {
                        rendered.push(format!("{}r", block[j]));
                        j += 1;
                    }
                    Some(Piece::MonominoBlue) => {
                        rendered.push(format!("{}b", block[j]));
                        j += 1;
                    }
                    None => {
                        rendered.push(block[j].to_string());
                        j += 1;
                    }
                }
            }
            for token in rendered {
                write!(f, " {token}")?;
            }
        }
        Ok(())
    }
}

fn mask_to_block(mask: u32, n: usize) -> Vec<u32> {
    (0..n as u32)
        .rev()
        .filter(|bit| mask & (1 << bit) != 0)
        .map(|bit| bit + 1)
        .collect()
}

/// Ordered set partitions of `[n]` into the block shapes of the given mode,
/// blocks written in decreasing order.
fn ordered_partitions(n: usize, mode: BarMode) -> Vec<Vec<Vec<u32>>> {
    assert!(n <= 12, "partition enumeration is desk-scale only");
    fn rest(remaining: u32, n: usize, acc: &mut Vec<Vec<u32>>, out: &mut Vec<Vec<Vec<u32>>>) {
        if remaining == 0 {
            out.push(acc.clone());
            return;
        }
        let mut sub = remaining;
        while sub > 0 {
            if sub.count_ones() >= 2 {
                acc.push(mask_to_block(sub, n));
                rest(remaining & !sub, n, acc, out);
                acc.pop();
            }
            sub = (sub - 1) & remaining;
        }
    }

    let full: u32 = if n == 0 { 0 } else { (1 << n) - 1 };
    let mut out = Vec::new();
    match mode {
        BarMode::Cyclic => rest(full, n, &mut Vec::new(), &mut out),
        BarMode::Linear => {
            let mut b0 = full;
            while b0 > 0 {
                let mut acc = vec![mask_to_block(b0, n)];
                rest(full & !b0, n, &mut acc, &mut out);
                b0 = (b0 - 1) & full;
            }
        }
    }
    out
}

/// Every bar-tiling object on `[n]`.
pub fn enumerate_objects(n: usize, mode: BarMode) -> Vec<BarTilingObject> {
    let mut out = Vec::new();
    for blocks in ordered_partitions(n, mode) {
        let per_block: Vec<Vec<Tiling>> = blocks
            .iter()
            .enumerate()
            .map(|(b, block)| {
                let leading = mode == BarMode::Linear && b == 0;
                tilings(block.len() - if leading { 1 } else { 2 })
            })
            .collect();
        let mut choice = vec![0usize; blocks.len()];
        loop {
            let tiling_choice: Vec<Tiling> = choice
                .iter()
                .enumerate()
                .map(|(b, &i)| per_block[b][i].clone())
                .collect();
            out.push(
                BarTilingObject::new(mode, blocks.clone(), tiling_choice)
                    .expect("enumerated objects are valid"),
            );
            // odometer over the per-block tiling choices
            let mut b = 0;
            loop {
                if b == blocks.len() {
                    break;
                }
                choice[b] += 1;
                if choice[b] < per_block[b].len() {
                    break;
                }
                choice[b] = 0;
                b += 1;
            }
            if b == blocks.len() {
                break;
            }
        }
    }
    out
}

/// The surviving objects: no dominoes, ascents across all bars.
pub fn fixed_points(n: usize, mode: BarMode) -> Vec<BarTilingObject> {
    enumerate_objects(n, mode)
        .into_iter()
        .filter(BarTilingObject::is_fixed_point)
        .collect()
}

/// The block-size sum `sum_k s^k sum_B U_{|B_0|-1} U_{|B_1|-2} ...` (linear)
/// or `sum_k s^k sum_B U_{|B_1|-2} ...` (cyclic), computed directly from the
/// Chebyshev recurrence, independently of the series machinery.
pub fn partition_sum(n: usize, mode: BarMode, s_arg: &MPoly, t_arg: &MPoly) -> MPoly {
    let mut total = MPoly::zero();
    for blocks in ordered_partitions(n, mode) {
        let k = blocks.len() - usize::from(mode == BarMode::Linear && !blocks.is_empty());
        let mut term = s_arg.pow(k as u32);
        for (b, block) in blocks.iter().enumerate() {
            let leading = mode == BarMode::Linear && b == 0;
            let index = block.len() as i64 - if leading { 1 } else { 2 };
            term = &term * &cheb_u(index, s_arg, t_arg).expect("index >= -1");
        }
        total = &total + &term;
    }
    total
}

// ---------------------------------------------------------------------------
// Series engines
// ---------------------------------------------------------------------------

/// `dV/dx * (1 - s V)^{-1}` with the given arguments, up to `order`. The
/// coefficient of `x^n/n!` is the joint (peak, double)-distribution over S_n
/// when called with the plain variables.
pub fn linear_series(s_arg: &MPoly, t_arg: &MPoly, order: usize) -> EgfSeries {
    let v = series_v(s_arg, t_arg, order + 1);
    let numerator = v.derivative().expect("order >= 1");
    let denominator = &EgfSeries::one(order) - &v.truncate(order).scale(s_arg);
    &numerator * &denominator.reciprocal().expect("constant term 1")
}

/// `(1 - s V)^{-1}`: the derangement-side engine.
pub fn cyclic_series(s_arg: &MPoly, t_arg: &MPoly, order: usize) -> EgfSeries {
    let v = series_v(s_arg, t_arg, order);
    let denominator = &EgfSeries::one(order) - &v.scale(s_arg);
    denominator.reciprocal().expect("constant term 1")
}

// ---------------------------------------------------------------------------
// Check reports
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

/// Outcome of one identity check.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub id: String,
    pub params: String,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub elapsed_ms: u128,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }

    /// Deterministic text rendering (timing deliberately excluded).
    pub fn render_text(&self) -> String {
        let status = match self.status {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "FAIL",
        };
        match &self.witness {
            Some(w) => format!("{:<12} {status}  [{}]\n    {w}", self.id, self.params),
            None => format!("{:<12} {status}  [{}]", self.id, self.params),
        }
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Optional overrides for a check's brute-force bound and series order.
#[derive(Clone, Copy, Debug, Default)]
pub struct CheckParams {
    pub max_n: Option<usize>,
    pub order: Option<usize>,
}

/// All check identifiers, in the order `verify all` runs them.
pub fn all_check_ids() -> &'static [&'static str] {
    &[
        "t1a",
        "t1b",
        "eq1",
        "t3",
        "t3-closed",
        "eq4",
        "lemma2",
        "t4",
        "carlitz",
        "c5a",
        "c5b",
        "c5c",
        "t6",
        "t7",
        "t8",
        "eq8",
        "eq9-10",
        "zeng",
        "c9",
        "c9-closed",
        "c10+roselle",
        "eq11",
        "c11",
        "c11-closed",
        "prop12",
        "c13",
        "c14",
        "c14-closed",
        "prop15",
        "t16",
        "eq5",
        "eq7",
        "tables",
    ]
}

/// Run one named check; `Err` means the id or parameters were invalid, a
/// failed comparison is reported through the `CheckReport` itself.
pub fn check_identity(id: &str, params: &CheckParams) -> Result<CheckReport> {
    let start = Instant::now();
    let (desc, witness) = dispatch(id, params)?;
    Ok(CheckReport {
        id: id.to_string(),
        params: desc,
        status: if witness.is_none() {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        },
        witness,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

type Outcome = (String, Option<String>);

fn dispatch(id: &str, params: &CheckParams) -> Result<Outcome> {
    match id {
        "t1a" => check_t1a(params),
        "t1b" => check_t1b(params),
        "eq1" => check_eq1(params),
        "t3" => check_t3(params),
        "t3-closed" => check_t3_closed(params),
        "eq4" => check_eq4(params),
        "lemma2" => check_lemma2(params),
        "t4" => check_t4(params),
        "carlitz" => check_carlitz(params),
        "c5a" => check_c5a(params),
        "c5b" => check_c5b(params),
        "c5c" => check_c5c(params),
        "t6" => check_t6(params),
        "t7" => check_t7(params),
        "t8" => check_t8(params),
        "eq8" => check_eq8(params),
        "eq9-10" => check_eq9_10(params),
        "zeng" => check_zeng(params),
        "c9" => check_c9(params),
        "c9-closed" => check_c9_closed(params),
        "c10+roselle" => check_c10_roselle(params),
        "eq11" => check_eq11(params),
        "c11" => check_c11(params),
        "c11-closed" => check_c11_closed(params),
        "prop12" => check_prop12(params),
        "c13" => check_c13(params),
        "c14" => check_c14(params),
        "c14-closed" => check_c14_closed(params),
        "prop15" => check_prop15(params),
        "t16" => check_t16(params),
        "eq5" => check_eq5(params),
        "eq7" => check_eq7(params),
        "tables" => check_tables(params),
        other => Err(Error::UnknownCheck(other.to_string())),
    }
}

// ---------------------------------------------------------------------------
// Shared helpers
// ---------------------------------------------------------------------------

const NUMERIC_TOLERANCE: f64 = 1e-6;
const NUMERIC_X: f64 = 0.2;

fn resolve_max_n(params: &CheckParams, default: usize) -> Result<usize> {
    let max_n = params.max_n.unwrap_or(default);
    if max_n == 0 || max_n > MAX_ENUM_N {
        return Err(Error::ParamOutOfRange(format!(
            "max_n = {max_n} outside 1..={MAX_ENUM_N}"
        )));
    }
    Ok(max_n)
}

fn resolve_order(params: &CheckParams) -> Result<usize> {
    let order = params.order.unwrap_or(24);
    if !(2..=64).contains(&order) {
        return Err(Error::ParamOutOfRange(format!(
            "order = {order} outside 2..=64"
        )));
    }
    Ok(order)
}

fn s_var() -> MPoly {
    MPoly::var(Var::S)
}

fn t_var() -> MPoly {
    MPoly::var(Var::T)
}

fn poly(text: &str) -> MPoly {
    text.parse().expect("literal polynomial")
}

/// First mismatching coefficient between two polynomials, smallest monomial
/// first.
fn poly_mismatch(n: usize, label: &str, got: &MPoly, want: &MPoly) -> Option<String> {
    if got == want {
        return None;
    }
    let monomials: BTreeSet<Monomial> = got
        .terms()
        .map(|(m, _)| *m)
        .chain(want.terms().map(|(m, _)| *m))
        .collect();
    for m in monomials {
        let g = got.coeff(&m);
        let w = want.coeff(&m);
        if g != w {
            return Some(format!(
                "n={n}: {label}: coefficient of {m} is {g}, expected {w}"
            ));
        }
    }
    unreachable!("unequal polynomials differ in some coefficient")
}

/// Compare engine coefficients against brute-force distributions for
/// `n = from..=max_n`.
fn engine_vs_brute(
    engine: &EgfSeries,
    set: PermSet,
    stats: &[Stat],
    vars: &[Var],
    from: usize,
    max_n: usize,
    label: &str,
) -> Result<Option<String>> {
    for n in from..=max_n {
        let brute = distribution(n, set, stats, vars)?;
        if let Some(w) = poly_mismatch(n, label, engine.coeff(n), &brute) {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

fn constant_of(p: &MPoly) -> Rational {
    p.as_constant().expect("constant polynomial")
}

fn eval_at_t(p: &MPoly, value: i64) -> Rational {
    constant_of(&p.substitute(&[(Var::T, MPoly::from_int(value))]))
}

/// `(-1)^k` as a rational sign.
fn sign_pow(k: usize) -> Rational {
    if k.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Expected alternation pattern: `E_n` terms on one parity, zero on the
/// other, with an optional alternating sign.
fn euler_pattern(n: usize, euler: &[BigInt], odd_side: bool, signed: bool) -> Rational {
    let on_side = (n % 2 == 1) == odd_side;
    if !on_side {
        return Rational::zero();
    }
    let magnitude = Rational::from_integer(euler[n].clone());
    if signed {
        sign_pow((n - usize::from(odd_side)) / 2) * magnitude
    } else {
        magnitude
    }
}

/// A numeric sample point: exact rational values used to build the engine,
/// plus their float images for the closed form.
struct SamplePoint {
    values: Vec<(Var, Rational)>,
}

impl SamplePoint {
    fn new(values: &[(Var, i64, i64)]) -> SamplePoint {
        SamplePoint {
            values: values.iter().map(|&(v, p, q)| (v, rat(p, q))).collect(),
        }
    }

    fn rational(&self, v: Var) -> Rational {
        self.values
            .iter()
            .find(|(var, _)| *var == v)
            .map(|(_, r)| r.clone())
            .expect("variable bound at sample point")
    }

    fn f(&self, v: Var) -> f64 {
        self.rational(v).to_f64().unwrap()
    }

    fn poly(&self, v: Var) -> MPoly {
        MPoly::constant(self.rational(v))
    }

    fn describe(&self) -> String {
        self.values
            .iter()
            .map(|(v, r)| format!("{v}={r}"))
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Relative-error comparison of an engine evaluation against a closed form.
fn numeric_mismatch(id: &str, point: &SamplePoint, engine: f64, closed: f64) -> Option<String> {
    let scale = closed.abs().max(1e-30);
    let err = (engine - closed).abs() / scale;
    if err <= NUMERIC_TOLERANCE {
        None
    } else {
        Some(format!(
            "{id} at ({}), x={NUMERIC_X}: engine {engine:.12e}, closed form {closed:.12e}, rel err {err:.3e}",
            point.describe()
        ))
    }
}

fn run_numeric(
    id: &str,
    order: usize,
    points: Vec<SamplePoint>,
    engine: impl Fn(&SamplePoint, usize) -> EgfSeries,
    closed: impl Fn(&SamplePoint, f64) -> f64,
) -> Outcome {
    let desc = format!("order={order}, x={NUMERIC_X}, points={}", points.len());
    for point in &points {
        let series = engine(point, order);
        let engine_value = series.eval_f64(&[], NUMERIC_X).expect("constant series");
        let closed_value = closed(point, NUMERIC_X);
        if let Some(w) = numeric_mismatch(id, point, engine_value, closed_value) {
            return (desc, Some(w));
        }
    }
    (desc, None)
}

// Closed forms, in the same notation they are usually written.

fn coth(x: f64) -> f64 {
    x.cosh() / x.sinh()
}

fn v_closed(s: f64, t: f64, x: f64) -> f64 {
    let r = (t * t - s).sqrt();
    (1.0 - (x * r).cosh() * (t * x).exp() + t * (t * x).exp() * (x * r).sinh() / r) / s
}

fn pk_dbl_closed(s: f64, t: f64, x: f64) -> f64 {
    let r = (t * t - s).sqrt();
    1.0 / (r * coth(x * r) - t)
}

fn four_stat_closed(s: f64, t: f64, u: f64, v: f64, x: f64) -> f64 {
    let alpha = ((u + v) * (u + v) - 4.0 * s * t).sqrt();
    2.0 * t / (alpha * coth(0.5 * alpha * x) - u - v)
}

fn cyclic_four_stat_closed(s: f64, t: f64, u: f64, v: f64, x: f64) -> f64 {
    let alpha = ((u + v) * (u + v) - 4.0 * s * t).sqrt();
    alpha * (-0.5 * (u + v) * x).exp()
        / (alpha * (0.5 * alpha * x).cosh() - (u + v) * (0.5 * alpha * x).sinh())
}

fn sextuple_closed(s: f64, t: f64, u: f64, v: f64, w: f64, y: f64, x: f64) -> f64 {
    let alpha = ((u + v) * (u + v) - 4.0 * s * t).sqrt();
    let base = alpha * ((y - 0.5 * (u + v)) * x).exp()
        / (alpha * (0.5 * alpha * x).cosh() - (u + v) * (0.5 * alpha * x).sinh());
    base.powf(w)
}

fn excedance_closed(t: f64, x: f64) -> f64 {
    (1.0 - t) * (-x).exp() / ((-(1.0 - t) * x).exp() - t)
}

fn cpk_closed(t: f64, x: f64) -> f64 {
    let r = (1.0 - t).sqrt();
    r * (-x).exp() / (r * (x * r).cosh() - (x * r).sinh())
}

fn cddes_closed(t: f64, x: f64) -> f64 {
    let beta = ((t + 3.0) * (t - 1.0)).sqrt();
    beta * (-0.5 * (1.0 + t) * x).exp()
        / (beta * (0.5 * beta * x).cosh() - (1.0 + t) * (0.5 * beta * x).sinh())
}

// ---------------------------------------------------------------------------
// The checks
// ---------------------------------------------------------------------------

/// The Eulerian polynomials at -1 are the logarithmic derivative of
/// cosh(x): engine vs brute force, and the signed tangent-number pattern.
fn check_t1a(params: &CheckParams) -> Result<Outcome> {
    let max_n = resolve_max_n(params, 9)?;
    let pattern_n = 12;
    let f = &EgfSeries::one(pattern_n + 1) + &series_v(&poly("-1"), &poly("0"), pattern_n + 1);
    let ld = &f.derivative()? * &f.reciprocal()?;
    let euler = euler_numbers(pattern_n + 1);
    let desc = format!("brute n<={max_n}, pattern n<={pattern_n}");
    for n in 1..=max_n {
        let brute = eval_at_t(&distribution(n, PermSet::All, &[Stat::Des], &[Var::T])?, -1);
        let engine = constant_of(ld.coeff(n));
        if engine != brute {
            return Ok((
                desc,
                Some(format!("n={n}: dF/dx / F gives {engine}, brute force gives {brute}")),
            ));
        }
    }
    for n in 1..=pattern_n {
        let engine = constant_of(ld.coeff(n));
        let expected = euler_pattern(n, &euler, true, true);
        if engine != expected {
            return Ok((
                desc,
                Some(format!("n={n}: dF/dx / F gives {engine}, pattern gives {expected}")),
            ));
        }
    }
    Ok((desc, None))
}

/// The peak polynomials at -1 are the logarithmic derivative of the Pell
/// series, with the published value table.
fn check_t1b(params: &CheckParams) -> Result<Outcome> {
    let max_n = resolve_max_n(params, 10)?;
    let g = &EgfSeries::one(max_n + 1) + &series_v(&poly("-1"), &poly("1"), max_n + 1);
    let ld = &g.derivative()? * &g.reciprocal()?;
    let table: [i64; 10] = [1, 2, 2, -8, -56, -112, 848, 9088, 25216, -310528];
    let desc = format!("brute n<={max_n}, table n<=10");
    for n in 1..=max_n {
        let brute = eval_at_t(&distribution(n, PermSet::All, &[Stat::Pk], &[Var::T])?, -1);
        let engine = constant_of(ld.coeff(n));
        if engine != brute {
            return Ok((
                desc,
                Some(format!("n={n}: dG/dx / G gives {engine}, brute force gives {brute}")),
            ));
        }
        if n <= 10 {
            let expected = Rational::from_integer(table[n - 1].into());
            if brute != expected {
                return Ok((
                    desc,
                    Some(format!("n={n}: brute force gives {brute}, table says {expected}")),
                ));
            }
        }
    }
    Ok((desc, None))
}

/// The classical (-1)-evaluation of the Eulerian distribution.
fn check_eq1(params: &CheckParams) -> Result<Outcome> {
    let max_n = resolve_max_n(params, 9)?;
    let euler = euler_numbers(max_n + 1);
    let desc = format!("n<={max_n}");
    for n in 1..=max_n {
        let brute = eval_at_t(&distribution(n, PermSet::All, &[Stat::Des], &[Var::T])?, -1);
        let expected = euler_pattern(n, &euler, true, true);
        if brute != expected {
            return Ok((
                desc,
                Some(format!("n={n}: A_n(-1) = {brute}, expected {expected}")),
            ));
        }
    }
    Ok((desc, None))
}

/// The joint (peak, double)-distribution equals dV/dx / (1 - sV).
fn check_t3(params: &CheckParams) -> Result<Outcome> {
    let max_n = resolve_max_n(params, 9)?;
    let engine = linear_series(&s_var(), &t_var(), max_n);
    let witness = engine_vs_brute(
        &engine,
        PermSet::All,
        &[Stat::Pk, Stat::Dbl],
        &[Var::S, Var::T],
        1,
        max_n,
        "(pk,dbl) vs dV/dx/(1-sV)",
    )?;
    Ok((format!("n<={max_n}"), witness))
}

/// Hyperbolic closed form of the (peak, double) generating function.
fn check_t3_closed(params: &CheckParams) -> Result<Outcome> {
    let order = resolve_order(params)?;
    let points = vec![
        SamplePoint::new(&[(Var::S, -1, 1), (Var::T, 1, 1)]),
        SamplePoint::new(&[(Var::S, -1, 1), (Var::T, 0, 1)]),
        SamplePoint::new(&[(Var::S, 1, 1), (Var::T, 2, 1)]),
    ];
    Ok(run_numeric(
        "t3-closed",
        order,
        points,
        |pt, order| linear_series(&pt.poly(Var::S), &pt.poly(Var::T), order),
        |pt, x| pk_dbl_closed(pt.f(Var::S), pt.f(Var::T), x),
    ))
}

/// Hyperbolic closed form of V itself, plus the cosh and Pell specials.
fn check_eq4(params: &CheckParams) -> Result<Outcome> {
    let order = resolve_order(params)?;
    let points = vec![
        SamplePoint::new(&[(Var::S, -1, 1), (Var::T, 1, 1)]),
        SamplePoint::new(&[(Var::S, -1, 1), (Var::T, 0, 1)]),
        SamplePoint::new(&[(Var::S, 1, 1), (Var::T, 2, 1)]),
    ];
    let (desc, witness) = run_numeric(
        "eq4",
        order,
        points,
        |pt, order| series_v(&pt.poly(Var::S), &pt.poly(Var::T), order),
        |pt, x| v_closed(pt.f(Var::S), pt.f(Var::T), x),
    );
    if witness.is_some() {
        return Ok((desc, witness));
    }
    // 1 + V(-1,0;x) = cosh(x) and 1 + V(-1,1;x) = the Pell series closed form
    let f = &EgfSeries::one(order) + &series_v(&poly("-1"), &poly("0"), order);
    let f_val = f.eval_f64(&[], NUMERIC_X)?;
    if (f_val - NUMERIC_X.cosh()).abs() > NUMERIC_TOLERANCE {
        return Ok((desc, Some(format!("1+V(-1,0;x) = {f_val}, cosh({NUMERIC_X}) = {}", NUMERIC_X.cosh()))));
    }
    let g = &EgfSeries::one(order) + &series_v(&poly("-1"), &poly("1"), order);
    let g_val = g.eval_f64(&[], NUMERIC_X)?;
    let root2 = 2f64.sqrt();
    let g_closed = 0.5
        * NUMERIC_X.exp()
        * (2.0 * (NUMERIC_X * root2).cosh() - root2 * (NUMERIC_X * root2).sinh());
    if ((g_val - g_closed) / g_closed).abs() > NUMERIC_TOLERANCE {
        return Ok((desc, Some(format!("1+V(-1,1;x) = {g_val}, closed form = {g_closed}"))));
    }
    Ok((desc, None))
}

/// The colored-permutation bijections preserve their statistics and
/// round-trip, in both the linear and the cyclic settings.
fn check_lemma2(params: &CheckParams) -> Result<Outcome> {
    let max_n = resolve_max_n(params, 7)?;
    let desc = format!("n<={max_n}");
    for n in 1..=max_n {
        let colored = colored_perms(n);
        let mut images = BTreeSet::new();
        for c in &colored {
            let image = big_phi(c);
            if c.base().stat(Stat::Pk) != image.stat(Stat::Pk)
                || c.base().stat(Stat::Dbl) != image.stat(Stat::Dbl)
            {
                return Ok((desc, Some(format!("Phi changed (pk,dbl) on {c}"))));
            }
            if &big_phi_inv(&image) != c {
                return Ok((desc, Some(format!("Phi round trip failed on {c}"))));
            }
            images.insert(image);
        }
        let total = enumerate(n, PermSet::All).count();
        if colored.len() != total || images.len() != total {
            return Ok((
                desc,
                Some(format!(
                    "n={n}: |colored| = {}, |images| = {}, |S_n| = {total}",
                    colored.len(),
                    images.len()
                )),
            ));
        }

        let colored = colored_derangements(n);
        let mut images = BTreeSet::new();
        for c in &colored {
            let image = big_phi_ring(c);
            if c.base().stat(Stat::Cpk) != image.stat(Stat::Cpk)
                || c.base().stat(Stat::Cdbl) != image.stat(Stat::Cdbl)
            {
                return Ok((desc, Some(format!("ring Phi changed (cpk,cdbl) on {c}"))));
            }
            if &big_phi_ring_inv(&image)? != c {
                return Ok((desc, Some(format!("ring Phi round trip failed on {c}"))));
            }
            images.insert(image);
        }
        let total = enumerate(n, PermSet::Derangements).count();
        if colored.len() != total || images.len() != total {
            return Ok((
                desc,
                Some(format!(
                    "n={n}: |colored derangements| = {}, |images| = {}, |D_n| = {total}",
                    colored.len(),
                    images.len()
                )),
            ));
        }
    }
    Ok((desc, None))
}

/// The four-statistic refinement via the substitution s -> st,
/// t -> (u+v)/2 and an extra factor t.
fn check_t4(params: &CheckParams) -> Result<Outcome> {
    let max_n = resolve_max_n(params, 8)?;
    let engine = linear_series(&poly("s*t"), &poly("(u+v)/2"), max_n).scale(&t_var());
    let witness = engine_vs_brute(
        &engine,
        PermSet::All,
        &[Stat::Pk, Stat::Val, Stat::Dasc, Stat::Ddes],
        &[Var::S, Var::T, Var::U, Var::V],
        1,
        max_n,
        "(pk,val,dasc,ddes)",
    )?;
    Ok((format!("n<={max_n}"), witness))
}

/// The Carlitz-Scoville style closed form of the four-statistic series.
fn check_carlitz(params: &CheckParams) -> Result<Outcome> {
    let order = resolve_order(params)?;
    let points = vec![
        SamplePoint::new(&[(Var::S, 1, 1), (Var::T, 1, 1), (Var::U, 2, 1), (Var::V, 1, 1)]),
        SamplePoint::new(&[(Var::S, -1, 1), (Var::T, 1, 1), (Var::U, 1, 1), (Var::V, 0, 1)]),
        SamplePoint::new(&[(Var::S, 1, 1), (Var::T, 2, 1), (Var::U, 3, 1), (Var::V, 1, 1)]),
    ];
    Ok(run_numeric(
        "carlitz",
        order,
        points,
        |pt, order| {
            let s_arg = MPoly::constant(pt.rational(Var::S) * pt.rational(Var::T));
            let t_arg = MPoly::constant((pt.rational(Var::U) + pt.rational(Var::V)) / rat(2, 1));
            linear_series(&s_arg, &t_arg, order).scale(&pt.poly(Var::T))
        },
        |pt, x| four_stat_closed(pt.f(Var::S), pt.f(Var::T), pt.f(Var::U), pt.f(Var::V), x),
    ))
}

/// Eulerian specialization: A(t;x) from the engine with s -> t,
/// t -> (1+t)/2.
fn check_c5a(params: &CheckParams) -> Result<Outcome> {
    let max_n = resolve_max_n(params, 9)?;
    let engine = linear_series(&t_var(), &poly("(1+t)/2"), max_n);
    let witness = engine_vs_brute(
        &engine,
        PermSet::All,
        &[Stat::Des],
        &[Var::T],
        1,
        max_n,
        "des",
    )?;
    Ok((format!("n<={max_n}"), witness))
}

/// Peak specialization: s -> t, t -> 1.
fn check_c5b(params: &CheckParams) -> Result<Outcome> {
    let max_n = resolve_max_n(params, 9)?;
    let engine = linear_series(&t_var(), &MPoly::one(), max_n);
    let witness = engine_vs_brute(
        &engine,
        PermSet::All,
        &[Stat::Pk],
        &[Var::T],
        1,
        max_n,
        "pk",
    )?;
    Ok((format!("n<={max_n}"), witness))
}

/// Double-descent specialization: s -> 1, t -> (1+t)/2.
fn check_c5c(params: &CheckParams) -> Result<Outcome> {
    let max_n = resolve_max_n(params, 9)?;
    let engine = linear_series(&MPoly::one(), &poly("(1+t)/2"), max_n);
    let witness = engine_vs_brute(
        &engine,
        PermSet::All,
        &[Stat::Ddes],
        &[Var::T],
        1,
        max_n,
        "ddes",
    )?;
    Ok((format!("n<={max_n}"), witness))
}

/// Double descents at -1 give tangent numbers, and the permutations with no
/// double ascents or descents are the alternating ones (odd n).
fn check_t6(params: &CheckParams) -> Result<Outcome> {
    let max_n = resolve_max_n(params, 10)?;
    let euler = euler_numbers(max_n + 1);
    let desc = format!("n<={max_n}");
    for n in 1..=max_n {
        let ddes_at_minus_one =
            eval_at_t(&distribution(n, PermSet::All, &[Stat::Ddes], &[Var::T])?, -1);
        let expected = euler_pattern(n, &euler, true, false);
        if ddes_at_minus_one != expected {
            return Ok((
                desc,
                Some(format!("n={n}: ddes distribution at -1 is {ddes_at_minus_one}, expected {expected}")),
            ));
        }
        let pk_dbl = distribution(n, PermSet::All, &[Stat::Pk, Stat::Dbl], &[Var::S, Var::T])?;
        let at_1_0 = constant_of(&pk_dbl.substitute(&[
            (Var::S, MPoly::one()),
            (Var::T, MPoly::zero()),
        ]));
        let alternating = count_matching(n, PermSet::All, Permutation::is_alternating);
        if Rational::from_integer(BigInt::from(alternating)) != Rational::from_integer(euler[n].clone()) {
            return Ok((
                desc,
                Some(format!("n={n}: {alternating} alternating permutations, E_n = {}", euler[n])),
            ));
        }
        let expected_count = if n % 2 == 1 {
            Rational::from_integer(euler[n].clone())
        } else {
            Rational::zero()
        };
        if at_1_0 != expected_count {
            return Ok((
                desc,
                Some(format!("n={n}: (pk,dbl) at (1,0) is {at_1_0}, expected {expected_count}")),
            ));
        }
    }
    Ok((desc, None))
}

/// The cyclic main identity: (cpk, cdbl) over derangements equals
/// 1/(1 - sV).
fn check_t7(params: &CheckParams) -> Result<Outcome> {
    let max_n = resolve_max_n(params, 9)?;
    let engine = cyclic_series(&s_var(), &t_var(), max_n);
    let witness = engine_vs_brute(
        &engine,
        PermSet::Derangements,
        &[Stat::Cpk, Stat::Cdbl],
        &[Var::S, Var::T],
        0,
        max_n,
        "(cpk,cdbl)",
    )?;
    Ok((format!("n<={max_n}"), witness))
}

/// The four cyclic statistics via the same substitution as t4.
fn check_t8(params: &CheckParams) -> Result<Outcome> {
    let max_n = resolve_max_n(params, 8)?;
    let engine = cyclic_series(&poly("s*t"), &poly("(u+v)/2"), max_n);
    let witness = engine_vs_brute(
        &engine,
        PermSet::Derangements,
        &[Stat::Cpk, Stat::Cval, Stat::Cdasc, Stat::Cddes],
        &[Var::S, Var::T, Var::U, Var::V],
        0,
        max_n,
        "(cpk,cval,cdasc,cddes)",
    )?;
    Ok((format!("n<={max_n}"), witness))
}

/// Hyperbolic closed form of the cyclic four-statistic series.
fn check_eq8(params: &CheckParams) -> Result<Outcome> {
    let order = resolve_order(params)?;
    let points = vec![
        SamplePoint::new(&[(Var::S, 1, 1), (Var::T, 1, 1), (Var::U, 2, 1), (Var::V, 1, 1)]),
        SamplePoint::new(&[(Var::S, -1, 1), (Var::T, 1, 1), (Var::U, 1, 1), (Var::V, 0, 1)]),
        SamplePoint::new(&[(Var::S, 1, 1), (Var::T, 2, 1), (Var::U, 3, 1), (Var::V, 1, 1)]),
    ];
    Ok(run_numeric(
        "eq8",
        order,
        points,
        |pt, order| {
            let s_arg = MPoly::constant(pt.rational(Var::S) * pt.rational(Var::T));
            let t_arg = MPoly::constant((pt.rational(Var::U) + pt.rational(Var::V)) / rat(2, 1));
            cyclic_series(&s_arg, &t_arg, order)
        },
        |pt, x| cyclic_four_stat_closed(pt.f(Var::S), pt.f(Var::T), pt.f(Var::U), pt.f(Var::V), x),
    ))
}

/// Cycle and fixed-point refinements via series powers and e^{wyx}.
fn check_eq9_10(params: &CheckParams) -> Result<Outcome> {
    let max_n = resolve_max_n(params, 7)?;
    let base = cyclic_series(&poly("s*t"), &poly("(u+v)/2"), max_n);
    let with_cycles = base.pow(&MPoly::var(Var::W))?;
    let witness = engine_vs_brute(
        &with_cycles,
        PermSet::Derangements,
        &[Stat::Cpk, Stat::Cval, Stat::Cdasc, Stat::Cddes, Stat::Cyc],
        &[Var::S, Var::T, Var::U, Var::V, Var::W],
        0,
        max_n,
        "derangements with cyc",
    )?;
    if witness.is_some() {
        return Ok((format!("n<={max_n}"), witness));
    }
    let full = &EgfSeries::exp_cx(&poly("w*y"), max_n) * &with_cycles;
    for n in 0..=max_n {
        let brute = if n == 0 {
            MPoly::one()
        } else {
            distribution(
                n,
                PermSet::All,
                &[Stat::Cpk, Stat::Cval, Stat::Cdasc, Stat::Cddes, Stat::Cyc, Stat::Fix],
                &[Var::S, Var::T, Var::U, Var::V, Var::W, Var::Y],
            )?
        };
        if let Some(w) = poly_mismatch(n, "all permutations with cyc and fix", full.coeff(n), &brute)
        {
            return Ok((format!("n<={max_n}"), Some(w)));
        }
    }
    Ok((format!("n<={max_n}"), None))
}

/// The sextuple closed form (all six statistics at once).
fn check_zeng(params: &CheckParams) -> Result<Outcome> {
    let order = resolve_order(params)?;
    let points = vec![
        SamplePoint::new(&[
            (Var::S, 1, 1),
            (Var::T, 1, 1),
            (Var::U, 2, 1),
            (Var::V, 1, 1),
            (Var::W, 2, 1),
            (Var::Y, 1, 1),
        ]),
        SamplePoint::new(&[
            (Var::S, -1, 1),
            (Var::T, 1, 1),
            (Var::U, 1, 1),
            (Var::V, 0, 1),
            (Var::W, 1, 1),
            (Var::Y, 2, 1),
        ]),
        SamplePoint::new(&[
            (Var::S, 1, 1),
            (Var::T, 2, 1),
            (Var::U, 3, 1),
            (Var::V, 1, 1),
            (Var::W, 1, 2),
            (Var::Y, 1, 1),
        ]),
    ];
    Ok(run_numeric(
        "zeng",
        order,
        points,
        |pt, order| {
            let s_arg = MPoly::constant(pt.rational(Var::S) * pt.rational(Var::T));
            let t_arg = MPoly::constant((pt.rational(Var::U) + pt.rational(Var::V)) / rat(2, 1));
            let base = cyclic_series(&s_arg, &t_arg, order)
                .pow(&pt.poly(Var::W))
                .expect("constant term 1");
            let wy = MPoly::constant(pt.rational(Var::W) * pt.rational(Var::Y));
            &EgfSeries::exp_cx(&wy, order) * &base
        },
        |pt, x| {
            sextuple_closed(
                pt.f(Var::S),
                pt.f(Var::T),
                pt.f(Var::U),
                pt.f(Var::V),
                pt.f(Var::W),
                pt.f(Var::Y),
                x,
            )
        },
    ))
}

/// Excedances over derangements: s -> t, t -> (1+t)/2.
fn check_c9(params: &CheckParams) -> Result<Outcome> {
    let max_n = resolve_max_n(params, 9)?;
    let engine = cyclic_series(&t_var(), &poly("(1+t)/2"), max_n);
    let witness = engine_vs_brute(
        &engine,
        PermSet::Derangements,
        &[Stat::Exc],
        &[Var::T],
        0,
        max_n,
        "exc",
    )?;
    Ok((format!("n<={max_n}"), witness))
}

/// Roselle's exponential generating function for excedance polynomials.
fn check_c9_closed(params: &CheckParams) -> Result<Outcome> {
    let order = resolve_order(params)?;
    let points = vec![
        SamplePoint::new(&[(Var::T, -1, 1)]),
        SamplePoint::new(&[(Var::T, 1, 2)]),
        SamplePoint::new(&[(Var::T, 2, 1)]),
    ];
    Ok(run_numeric(
        "c9-closed",
        order,
        points,
        |pt, order| {
            let t_arg = MPoly::constant((Rational::one() + pt.rational(Var::T)) / rat(2, 1));
            cyclic_series(&pt.poly(Var::T), &t_arg, order)
        },
        |pt, x| excedance_closed(pt.f(Var::T), x),
    ))
}

/// D(-1;x) is the reciprocal of cosh, giving Roselle's signed secant
/// numbers.
fn check_c10_roselle(params: &CheckParams) -> Result<Outcome> {
    let max_n = resolve_max_n(params, 10)?;
    let euler = euler_numbers(max_n + 1);
    let f = &EgfSeries::one(max_n) + &series_v(&poly("-1"), &poly("0"), max_n);
    let engine = cyclic_series(&poly("-1"), &poly("0"), max_n); // (1+t)/2 at t = -1
    let f_inv = f.reciprocal()?;
    let desc = format!("n<={max_n}");
    if engine != f_inv {
        return Ok((desc, Some("D(-1;x) differs from 1/cosh as a series".into())));
    }
    for n in 0..=max_n {
        let brute = if n == 0 {
            Rational::one()
        } else {
            eval_at_t(&distribution(n, PermSet::Derangements, &[Stat::Exc], &[Var::T])?, -1)
        };
        let engine_value = constant_of(engine.coeff(n));
        if brute != engine_value {
            return Ok((
                desc,
                Some(format!("n={n}: brute D_n(-1) = {brute}, engine = {engine_value}")),
            ));
        }
        if n >= 1 {
            let expected = euler_pattern(n, &euler, false, true);
            if brute != expected {
                return Ok((
                    desc,
                    Some(format!("n={n}: D_n(-1) = {brute}, pattern = {expected}")),
                ));
            }
        }
    }
    Ok((desc, None))
}

/// U_n(t, (1+t)/2) telescopes to 1 + t + ... + t^n.
fn check_eq11(params: &CheckParams) -> Result<Outcome> {
    let max_n = params.max_n.unwrap_or(30);
    if max_n == 0 || max_n > 200 {
        return Err(Error::ParamOutOfRange(format!("max_n = {max_n} outside 1..=200")));
    }
    let half = poly("(1+t)/2");
    let desc = format!("n<={max_n}");
    let mut geometric = MPoly::one();
    for n in 1..=max_n {
        geometric = &geometric + &t_var().pow(n as u32);
        let u = cheb_u(n as i64, &t_var(), &half)?;
        if let Some(w) = poly_mismatch(n, "U_n(t,(1+t)/2)", &u, &geometric) {
            return Ok((desc, Some(w)));
        }
    }
    Ok((desc, None))
}

const CPK_TABLE: [&str; 8] = [
    "0",
    "t",
    "2*t",
    "4*t + 5*t^2",
    "8*t + 36*t^2",
    "16*t + 188*t^2 + 61*t^3",
    "32*t + 864*t^2 + 958*t^3",
    "64*t + 3728*t^2 + 9656*t^3 + 1385*t^4",
];

const CDDES_TABLE: [&str; 8] = [
    "0",
    "1",
    "1 + t",
    "6 + 2*t + t^2",
    "19 + 21*t + 3*t^2 + t^3",
    "109 + 98*t + 53*t^2 + 4*t^3 + t^4",
    "588 + 808*t + 334*t^2 + 118*t^3 + 5*t^4 + t^5",
    "4033 + 5766*t + 3827*t^2 + 952*t^3 + 248*t^4 + 6*t^5 + t^6",
];

/// Cyclic peaks over derangements: s -> t, t -> 1, with the value table.
fn check_c11(params: &CheckParams) -> Result<Outcome> {
    let max_n = resolve_max_n(params, 9)?;
    let engine = cyclic_series(&t_var(), &MPoly::one(), max_n);
    let witness = engine_vs_brute(
        &engine,
        PermSet::Derangements,
        &[Stat::Cpk],
        &[Var::T],
        0,
        max_n,
        "cpk",
    )?;
    let desc = format!("n<={max_n}, table n<=8");
    if witness.is_some() {
        return Ok((desc, witness));
    }
    for n in 1..=8.min(max_n) {
        let expected = poly(CPK_TABLE[n - 1]);
        if let Some(w) = poly_mismatch(n, "cpk table", engine.coeff(n), &expected) {
            return Ok((desc, Some(w)));
        }
    }
    Ok((desc, None))
}

/// Closed form of the cyclic peak series (real for t < 1).
fn check_c11_closed(params: &CheckParams) -> Result<Outcome> {
    let order = resolve_order(params)?;
    let points = vec![
        SamplePoint::new(&[(Var::T, -1, 1)]),
        SamplePoint::new(&[(Var::T, 1, 2)]),
        SamplePoint::new(&[(Var::T, -2, 1)]),
    ];
    Ok(run_numeric(
        "c11-closed",
        order,
        points,
        |pt, order| cyclic_series(&pt.poly(Var::T), &MPoly::one(), order),
        |pt, x| cpk_closed(pt.f(Var::T), x),
    ))
}

/// Derangements with exactly one cyclic peak number 2^{n-2}.
fn check_prop12(params: &CheckParams) -> Result<Outcome> {
    let max_n = resolve_max_n(params, 10)?;
    let engine = cyclic_series(&t_var(), &MPoly::one(), max_n);
    let desc = format!("2<=n<={max_n}");
    for n in 2..=max_n {
        let expected = Rational::from_integer(BigInt::one() << (n - 2));
        let coefficient = engine.coeff(n).coeff(&Monomial::var(Var::T));
        if coefficient != expected {
            return Ok((
                desc,
                Some(format!("n={n}: coefficient of t is {coefficient}, expected {expected}")),
            ));
        }
        let count = count_matching(n, PermSet::Derangements, |d| d.stat(Stat::Cpk) == 1);
        if Rational::from_integer(count.into()) != expected {
            return Ok((
                desc,
                Some(format!("n={n}: {count} derangements with one cyclic peak, expected {expected}")),
            ));
        }
    }
    Ok((desc, None))
}

/// Cyclic peaks at -1 give the reciprocal of the Pell series.
fn check_c13(params: &CheckParams) -> Result<Outcome> {
    let max_n = resolve_max_n(params, 10)?;
    let g = &EgfSeries::one(max_n) + &series_v(&poly("-1"), &poly("1"), max_n);
    let engine = cyclic_series(&poly("-1"), &MPoly::one(), max_n);
    let g_inv = g.reciprocal()?;
    let table: [i64; 10] = [0, -1, -2, 1, 28, 111, -126, -4607, -26280, 53663];
    let desc = format!("n<={max_n}, table n<=10");
    if engine != g_inv {
        return Ok((desc, Some("cpk engine at -1 differs from 1/G as a series".into())));
    }
    for n in 1..=max_n {
        let brute = eval_at_t(
            &distribution(n, PermSet::Derangements, &[Stat::Cpk], &[Var::T])?,
            -1,
        );
        let engine_value = constant_of(engine.coeff(n));
        if brute != engine_value {
            return Ok((
                desc,
                Some(format!("n={n}: brute cpk at -1 = {brute}, engine = {engine_value}")),
            ));
        }
        if n <= 10 {
            let expected = Rational::from_integer(table[n - 1].into());
            if brute != expected {
                return Ok((
                    desc,
                    Some(format!("n={n}: cpk at -1 = {brute}, table says {expected}")),
                ));
            }
        }
    }
    Ok((desc, None))
}

/// Cyclic double descents over derangements: s -> 1, t -> (1+t)/2.
fn check_c14(params: &CheckParams) -> Result<Outcome> {
    let max_n = resolve_max_n(params, 9)?;
    let engine = cyclic_series(&MPoly::one(), &poly("(1+t)/2"), max_n);
    let witness = engine_vs_brute(
        &engine,
        PermSet::Derangements,
        &[Stat::Cddes],
        &[Var::T],
        0,
        max_n,
        "cddes",
    )?;
    let desc = format!("n<={max_n}, table n<=8");
    if witness.is_some() {
        return Ok((desc, witness));
    }
    for n in 1..=8.min(max_n) {
        let expected = poly(CDDES_TABLE[n - 1]);
        if let Some(w) = poly_mismatch(n, "cddes table", engine.coeff(n), &expected) {
            return Ok((desc, Some(w)));
        }
    }
    Ok((desc, None))
}

/// Closed form of the cyclic double descent series (real for t > 1).
fn check_c14_closed(params: &CheckParams) -> Result<Outcome> {
    let order = resolve_order(params)?;
    let points = vec![
        SamplePoint::new(&[(Var::T, 3, 2)]),
        SamplePoint::new(&[(Var::T, 2, 1)]),
        SamplePoint::new(&[(Var::T, 3, 1)]),
    ];
    Ok(run_numeric(
        "c14-closed",
        order,
        points,
        |pt, order| {
            let t_arg = MPoly::constant((Rational::one() + pt.rational(Var::T)) / rat(2, 1));
            cyclic_series(&MPoly::one(), &t_arg, order)
        },
        |pt, x| cddes_closed(pt.f(Var::T), x),
    ))
}

/// Letterwise: i is a fixed point or cyclic double descent of pi exactly
/// when i is a short run of the smallest-first Foata word; hence the
/// constant term of the cddes distribution counts short-run-free
/// permutations.
fn check_prop15(params: &CheckParams) -> Result<Outcome> {
    let max_n = resolve_max_n(params, 8)?;
    let desc = format!("n<={max_n}");
    for n in 1..=max_n {
        let good = count_matching(n, PermSet::All, |p| {
            let mut special: BTreeSet<u32> = p.fixed_points().iter().map(|&i| i as u32).collect();
            for (i, class) in p.classify_cyclic().iter().enumerate() {
                if *class == Some(LetterClass::DoubleDescent) {
                    special.insert(p.word()[i]);
                }
            }
            let short: BTreeSet<u32> = crate::hop::foata_o_prime(p)
                .short_run_letters()
                .into_iter()
                .collect();
            special == short
        });
        let total = enumerate(n, PermSet::All).count() as u64;
        if good != total {
            return Ok((
                desc,
                Some(format!("n={n}: short-run correspondence fails for {} permutations", total - good)),
            ));
        }
        let cddes = distribution(n, PermSet::Derangements, &[Stat::Cddes], &[Var::T])?;
        let constant = cddes.coeff(&Monomial::ONE);
        let no_short_runs = count_matching(n, PermSet::All, |p| p.short_runs().is_empty());
        if constant != Rational::from_integer(no_short_runs.into()) {
            return Ok((
                desc,
                Some(format!(
                    "n={n}: cddes constant term {constant}, {no_short_runs} permutations with no short runs"
                )),
            ));
        }
    }
    Ok((desc, None))
}

/// Cyclic double descents at -1 give secant numbers, and the derangements
/// with no cyclic double ascents or descents map under o onto
/// reverse-alternating permutations (even n).
fn check_t16(params: &CheckParams) -> Result<Outcome> {
    let max_n = resolve_max_n(params, 10)?;
    let euler = euler_numbers(max_n + 1);
    let desc = format!("n<={max_n}");
    for n in 1..=max_n {
        let at_minus_one = eval_at_t(
            &distribution(n, PermSet::Derangements, &[Stat::Cddes], &[Var::T])?,
            -1,
        );
        let expected = euler_pattern(n, &euler, false, false);
        if at_minus_one != expected {
            return Ok((
                desc,
                Some(format!("n={n}: cddes distribution at -1 is {at_minus_one}, expected {expected}")),
            ));
        }
        let free = count_matching(n, PermSet::Derangements, |d| d.stat(Stat::Cdbl) == 0);
        let free_mapping = count_matching(n, PermSet::Derangements, |d| {
            d.stat(Stat::Cdbl) == 0 && foata_o(d).is_reverse_alternating()
        });
        let reverse_alternating =
            count_matching(n, PermSet::All, Permutation::is_reverse_alternating);
        let expected_free = if n % 2 == 0 {
            euler[n].to_u64().expect("desk-scale count")
        } else {
            0
        };
        if free != expected_free || free_mapping != free {
            return Ok((
                desc,
                Some(format!(
                    "n={n}: {free} cdbl-free derangements ({free_mapping} map to reverse-alternating), expected {expected_free}"
                )),
            ));
        }
        if n % 2 == 0 && reverse_alternating != expected_free {
            return Ok((
                desc,
                Some(format!(
                    "n={n}: {reverse_alternating} reverse-alternating permutations, E_n = {expected_free}"
                )),
            ));
        }
    }
    Ok((desc, None))
}

/// The linear bar-tiling story: partition sum, total signed weight, fixed
/// point weight, and the brute-force (pk,dbl) distribution all agree, and
/// the involution is weight-negating.
fn check_eq5(params: &CheckParams) -> Result<Outcome> {
    bar_tiling_check(params, BarMode::Linear)
}

/// The cyclic analogue over derangements.
fn check_eq7(params: &CheckParams) -> Result<Outcome> {
    bar_tiling_check(params, BarMode::Cyclic)
}

fn bar_tiling_check(params: &CheckParams, mode: BarMode) -> Result<Outcome> {
    let max_n = resolve_max_n(params, 6)?;
    if max_n > 7 {
        return Err(Error::ParamOutOfRange(format!(
            "max_n = {max_n} too large for object enumeration"
        )));
    }
    let desc = format!("n<={max_n}");
    for n in 1..=max_n {
        let objects = enumerate_objects(n, mode);
        let mut total = MPoly::zero();
        let mut fixed_total = MPoly::zero();
        let mut decoded = Vec::new();
        for object in &objects {
            let weight = object.weight();
            total = &total + &weight;
            if object.is_fixed_point() {
                fixed_total = &fixed_total + &weight;
                match mode {
                    BarMode::Linear => decoded.push(format!("{}", object.to_colored_perm()?)),
                    BarMode::Cyclic => {
                        decoded.push(format!("{}", object.to_colored_derangement()?))
                    }
                }
                if !matches!(object.involution_step(), Err(Error::InvolutionFixedPoint)) {
                    return Ok((desc, Some(format!("involution acted on fixed point {object}"))));
                }
            } else {
                let image = object.involution_step()?;
                if (-&image.weight()) != weight {
                    return Ok((desc, Some(format!("involution did not negate weight of {object}"))));
                }
                if image.involution_step()? != *object {
                    return Ok((desc, Some(format!("involution not self-inverse on {object}"))));
                }
            }
        }
        let sum = partition_sum(n, mode, &s_var(), &t_var());
        let brute = match mode {
            BarMode::Linear => {
                distribution(n, PermSet::All, &[Stat::Pk, Stat::Dbl], &[Var::S, Var::T])?
            }
            BarMode::Cyclic => distribution(
                n,
                PermSet::Derangements,
                &[Stat::Cpk, Stat::Cdbl],
                &[Var::S, Var::T],
            )?,
        };
        for (label, got) in [("partition sum", &sum), ("object total", &total), ("fixed-point total", &fixed_total)] {
            if let Some(w) = poly_mismatch(n, label, got, &brute) {
                return Ok((desc, Some(w)));
            }
        }
        // fixed points decode bijectively onto the colored sets
        decoded.sort();
        let mut expected: Vec<String> = match mode {
            BarMode::Linear => colored_perms(n).iter().map(|c| c.to_string()).collect(),
            BarMode::Cyclic => colored_derangements(n).iter().map(|c| c.to_string()).collect(),
        };
        expected.sort();
        if decoded != expected {
            return Ok((
                desc,
                Some(format!("n={n}: fixed points decode to {} colored objects, expected {}", decoded.len(), expected.len())),
            ));
        }
    }
    Ok((desc, None))
}

/// Every value table in one place, checked from the series engines.
fn check_tables(params: &CheckParams) -> Result<Outcome> {
    let order = 12.max(params.order.unwrap_or(12)).min(64);
    let desc = format!("order={order}");

    let u_table = [
        "1",
        "2*t",
        "4*t^2 - s",
        "8*t^3 - 4*s*t",
        "16*t^4 - 12*s*t^2 + s^2",
        "32*t^5 - 32*s*t^3 + 6*s^2*t",
        "64*t^6 - 80*s*t^4 + 24*s^2*t^2 - s^3",
        "128*t^7 - 192*s*t^5 + 80*s^2*t^3 - 8*s^3*t",
    ];
    for (n, expected) in u_table.iter().enumerate() {
        let u = cheb_u(n as i64, &s_var(), &t_var())?;
        if let Some(w) = poly_mismatch(n, "Chebyshev table", &u, &poly(expected)) {
            return Ok((desc, Some(w)));
        }
    }

    let pells = pell(13);
    let expected_pell: [i64; 13] = [1, 0, 1, 2, 5, 12, 29, 70, 169, 408, 985, 2378, 5741];
    for (n, expected) in expected_pell.iter().enumerate() {
        if pells[n] != BigInt::from(*expected) {
            return Ok((desc, Some(format!("Pell g_{n} = {}, expected {expected}", pells[n]))));
        }
    }

    let g = &EgfSeries::one(order) + &series_v(&poly("-1"), &poly("1"), order);
    let ld = &g.derivative()? * &g.reciprocal()?;
    let pk_table: [i64; 10] = [1, 2, 2, -8, -56, -112, 848, 9088, 25216, -310528];
    for (n, expected) in pk_table.iter().enumerate() {
        let value = constant_of(ld.coeff(n + 1));
        if value != Rational::from_integer((*expected).into()) {
            return Ok((
                desc,
                Some(format!("peak table at n={}: engine {value}, expected {expected}", n + 1)),
            ));
        }
    }

    let cpk_engine = cyclic_series(&poly("-1"), &MPoly::one(), order);
    let cpk_neg1: [i64; 10] = [0, -1, -2, 1, 28, 111, -126, -4607, -26280, 53663];
    for (n, expected) in cpk_neg1.iter().enumerate() {
        let value = constant_of(cpk_engine.coeff(n + 1));
        if value != Rational::from_integer((*expected).into()) {
            return Ok((
                desc,
                Some(format!("cpk(-1) table at n={}: engine {value}, expected {expected}", n + 1)),
            ));
        }
    }

    let cpk_series = cyclic_series(&t_var(), &MPoly::one(), order.min(10));
    for (n, expected) in CPK_TABLE.iter().enumerate() {
        if let Some(w) = poly_mismatch(n + 1, "cpk polynomial table", cpk_series.coeff(n + 1), &poly(expected)) {
            return Ok((desc, Some(w)));
        }
    }

    let cddes_series = cyclic_series(&MPoly::one(), &poly("(1+t)/2"), order.min(10));
    for (n, expected) in CDDES_TABLE.iter().enumerate() {
        if let Some(w) = poly_mismatch(n + 1, "cddes polynomial table", cddes_series.coeff(n + 1), &poly(expected)) {
            return Ok((desc, Some(w)));
        }
    }

    Ok((desc, None))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str) -> MPoly {
        text.parse().unwrap()
    }

    fn figure_object() -> BarTilingObject {
        BarTilingObject::new(
            BarMode::Linear,
            vec![vec![7, 6, 5, 3, 2], vec![9, 8, 4, 1]],
            vec![
                Tiling::new(vec![Piece::MonominoBlue, Piece::Domino, Piece::MonominoRed]),
                Tiling::new(vec![Piece::MonominoRed, Piece::MonominoBlue]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn involution_on_the_figure_object() {
        let upper = figure_object();
        assert_eq!(upper.weight(), p("-s^2*t^4"));
        let lower = upper.involution_step().unwrap();
        assert_eq!(
            lower.blocks(),
            &[vec![7, 6], vec![5, 3, 2], vec![9, 8, 4, 1]]
        );
        assert_eq!(lower.weight(), p("s^2*t^4"));
        assert_eq!(lower.involution_step().unwrap(), upper);
        assert_eq!(upper.to_string(), "inf 7b [6 5] 3r 2 | 9 8r 4b 1");
    }

    #[test]
    fn involution_is_weight_negating_exhaustively() {
        for mode in [BarMode::Linear, BarMode::Cyclic] {
            for n in 1..=4 {
                for object in enumerate_objects(n, mode) {
                    if object.is_fixed_point() {
                        assert!(matches!(
                            object.involution_step(),
                            Err(Error::InvolutionFixedPoint)
                        ));
                    } else {
                        let image = object.involution_step().unwrap();
                        assert_eq!(image.weight(), -&object.weight(), "object {object}");
                        assert_eq!(image.involution_step().unwrap(), object);
                    }
                }
            }
        }
    }

    #[test]
    fn object_validation() {
        assert!(BarTilingObject::new(
            BarMode::Linear,
            vec![vec![2, 1], vec![3]],
            vec![Tiling::new(vec![Piece::MonominoRed]), Tiling::empty()],
        )
        .is_err()); // non-leading block of size 1
        assert!(BarTilingObject::new(
            BarMode::Linear,
            vec![vec![1, 2]],
            vec![Tiling::new(vec![Piece::MonominoRed])],
        )
        .is_err()); // not decreasing
        assert!(BarTilingObject::new(
            BarMode::Cyclic,
            vec![vec![2, 1]],
            vec![Tiling::new(vec![Piece::MonominoRed])],
        )
        .is_err()); // tiling too long
    }

    #[test]
    fn fixed_point_examples() {
        // Linear, n = 2: the fixed points carry total weight 2t.
        let fixed = fixed_points(2, BarMode::Linear);
        let total = fixed
            .iter()
            .fold(MPoly::zero(), |acc, o| &acc + &o.weight());
        assert_eq!(total, p("2*t"));

        // Cyclic, n = 2: a single object of weight s.
        let fixed = fixed_points(2, BarMode::Cyclic);
        assert_eq!(fixed.len(), 1);
        assert_eq!(fixed[0].weight(), p("s"));
        assert_eq!(
            fixed[0].to_colored_derangement().unwrap().base(),
            &"21".parse::<Permutation>().unwrap()
        );

        // Cyclic, n = 1: no objects at all.
        assert!(enumerate_objects(1, BarMode::Cyclic).is_empty());
    }

    #[test]
    fn partition_sum_examples() {
        assert_eq!(partition_sum(2, BarMode::Linear, &s_var(), &t_var()), p("2*t"));
        assert_eq!(partition_sum(3, BarMode::Cyclic, &s_var(), &t_var()), p("2*s*t"));
        assert_eq!(partition_sum(0, BarMode::Cyclic, &s_var(), &t_var()), MPoly::one());
        assert_eq!(partition_sum(0, BarMode::Linear, &s_var(), &t_var()), MPoly::zero());
        assert_eq!(
            partition_sum(3, BarMode::Linear, &s_var(), &t_var()),
            p("4*t^2 + 2*s")
        );
    }

    #[test]
    fn engines_match_small_distributions() {
        let linear = linear_series(&s_var(), &t_var(), 4);
        assert_eq!(linear.coeff(1), &MPoly::one());
        assert_eq!(linear.coeff(2), &p("2*t"));
        let cyclic = cyclic_series(&s_var(), &t_var(), 4);
        assert_eq!(cyclic.coeff(0), &MPoly::one());
        assert_eq!(cyclic.coeff(2), &p("s"));
        assert_eq!(cyclic.coeff(3), &p("2*s*t"));
    }

    #[test]
    fn check_identity_smoke() {
        let params = CheckParams {
            max_n: Some(5),
            order: None,
        };
        for id in ["t3", "t7", "eq5", "eq7", "lemma2"] {
            let report = check_identity(id, &params).unwrap();
            assert!(report.passed(), "{id}: {:?}", report.witness);
        }
        let report = check_identity("eq11", &CheckParams::default()).unwrap();
        assert!(report.passed());
        assert!(check_identity("nope", &CheckParams::default()).is_err());
        assert!(check_identity(
            "t3",
            &CheckParams {
                max_n: Some(99),
                order: None
            }
        )
        .is_err());
    }

    #[test]
    fn report_rendering() {
        let report = CheckReport {
            id: "t3".into(),
            params: "n<=5".into(),
            status: CheckStatus::Pass,
            witness: None,
            elapsed_ms: 7,
        };
        assert_eq!(report.render_text(), "t3           pass  [n<=5]");
        let json: serde_json::Value = serde_json::from_str(&report.render_json()).unwrap();
        assert_eq!(json["id"], "t3");
        assert_eq!(json["status"], "pass");
        assert!(json.get("witness").is_none());
        assert!(json["elapsed_ms"].is_number());
    }
}
