//! Permutations, their linear and cyclic statistics, exhaustive enumeration
//! of S_n and D_n, and brute-force distribution polynomials.
//!
//! A letter is classified against its neighbors under the boundary
//! convention `pi_0 = pi_{n+1} = +infinity`; the cyclic classification of
//! position `i` compares `i`, `pi_i`, and `pi_{pi_i}` instead. Enumeration
//! is in lexicographic order, and distribution sums are parallelized by
//! first-letter prefix for larger `n` (polynomial addition is commutative,
//! so the result is identical to the sequential one).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::poly::{MPoly, Monomial, Rational, Var, NUM_VARS};

/// Largest `n` for which exhaustive enumeration is considered feasible.
pub const MAX_ENUM_N: usize = 11;

const INF: u64 = u64::MAX;

/// Classification of one letter by comparison with its neighbors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LetterClass {
    Peak,
    Valley,
    DoubleAscent,
    DoubleDescent,
}

impl fmt::Display for LetterClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            LetterClass::Peak => "peak",
            LetterClass::Valley => "valley",
            LetterClass::DoubleAscent => "dasc",
            LetterClass::DoubleDescent => "ddes",
        };
        write!(f, "{name}")
    }
}

/// `prev`, `cur`, `next` are pairwise distinct.
fn class_of(prev: u64, cur: u64, next: u64) -> LetterClass {
    match (prev > cur, cur > next) {
        (true, false) => LetterClass::Valley,
        (false, true) => LetterClass::Peak,
        (false, false) => LetterClass::DoubleAscent,
        (true, true) => LetterClass::DoubleDescent,
    }
}

/// A named permutation statistic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stat {
    Pk,
    Val,
    Dasc,
    Ddes,
    Dbl,
    Des,
    Cpk,
    Cval,
    Cdasc,
    Cddes,
    Cdbl,
    Exc,
    Cyc,
    Fix,
}

impl Stat {
    pub const ALL: [Stat; 14] = [
        Stat::Pk,
        Stat::Val,
        Stat::Dasc,
        Stat::Ddes,
        Stat::Dbl,
        Stat::Des,
        Stat::Cpk,
        Stat::Cval,
        Stat::Cdasc,
        Stat::Cddes,
        Stat::Cdbl,
        Stat::Exc,
        Stat::Cyc,
        Stat::Fix,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Stat::Pk => "pk",
            Stat::Val => "val",
            Stat::Dasc => "dasc",
            Stat::Ddes => "ddes",
            Stat::Dbl => "dbl",
            Stat::Des => "des",
            Stat::Cpk => "cpk",
            Stat::Cval => "cval",
            Stat::Cdasc => "cdasc",
            Stat::Cddes => "cddes",
            Stat::Cdbl => "cdbl",
            Stat::Exc => "exc",
            Stat::Cyc => "cyc",
            Stat::Fix => "fix",
        }
    }
}

impl fmt::Display for Stat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl FromStr for Stat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Stat> {
        Stat::ALL
            .into_iter()
            .find(|st| st.name() == s)
            .ok_or_else(|| Error::UnknownStat(s.to_string()))
    }
}

/// Which subset of S_n to enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PermSet {
    All,
    Derangements,
}

impl FromStr for PermSet {
    type Err = Error;
    fn from_str(s: &str) -> Result<PermSet> {
        match s {
            "all" => Ok(PermSet::All),
            "derangements" => Ok(PermSet::Derangements),
            other => Err(Error::UnknownPermSet(other.to_string())),
        }
    }
}

/// A permutation of `[n]` in one-line notation (1-indexed letters).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    word: Vec<u32>,
}

impl Permutation {
    pub fn new(word: Vec<u32>) -> Result<Permutation> {
        let n = word.len();
        let mut seen = vec![false; n];
        for &letter in &word {
            if letter == 0 || letter as usize > n {
                return Err(Error::InvalidPermutation(format!(
                    "letter {letter} out of range for [{n}]"
                )));
            }
            if seen[letter as usize - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "letter {letter} repeated"
                )));
            }
            seen[letter as usize - 1] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation {
            word: (1..=n as u32).collect(),
        }
    }

    pub(crate) fn from_word_unchecked(word: Vec<u32>) -> Permutation {
        debug_assert!(Permutation::new(word.clone()).is_ok());
        Permutation { word }
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    /// `pi(i)` for a 1-based position.
    pub fn image(&self, i: usize) -> u32 {
        self.word[i - 1]
    }

    pub fn is_derangement(&self) -> bool {
        !has_fixed_point(&self.word)
    }

    /// Positions `i` (1-based) with `pi_i = i`.
    pub fn fixed_points(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&i| self.image(i) as usize == i).collect()
    }

    /// The reversal `pi_n ... pi_1`.
    pub fn reversal(&self) -> Permutation {
        Permutation {
            word: self.word.iter().rev().copied().collect(),
        }
    }

    /// Linear class of every position under the `infinity` boundary.
    pub fn classify_linear(&self) -> Vec<LetterClass> {
        let w = &self.word;
        (0..w.len())
            .map(|i| {
                let prev = if i == 0 { INF } else { w[i - 1] as u64 };
                let next = if i + 1 == w.len() { INF } else { w[i + 1] as u64 };
                class_of(prev, w[i] as u64, next)
            })
            .collect()
    }

    /// Cyclic class of every position; `None` marks a fixed point. The
    /// class at position `i` compares `i`, `pi_i`, `pi_{pi_i}`.
    pub fn classify_cyclic(&self) -> Vec<Option<LetterClass>> {
        let w = &self.word;
        (0..w.len())
            .map(|i| {
                let cur = w[i];
                if cur as usize == i + 1 {
                    return None;
                }
                let next = w[cur as usize - 1];
                Some(class_of((i + 1) as u64, cur as u64, next as u64))
            })
            .collect()
    }

    pub fn stat(&self, stat: Stat) -> usize {
        stat_of(&self.word, stat)
    }

    /// Cycles in canonical form: each cycle starts with its largest letter,
    /// cycles ordered by increasing largest letters.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut cycles = raw_cycles(&self.word);
        for c in &mut cycles {
            let max_pos = c
                .iter()
                .enumerate()
                .max_by_key(|(_, &x)| x)
                .map(|(i, _)| i)
                .unwrap();
            c.rotate_left(max_pos);
        }
        cycles.sort_by_key(|c| c[0]);
        cycles
    }

    /// Cycles under the smallest-first convention: each cycle starts with
    /// its smallest letter, cycles ordered by decreasing smallest letters.
    pub fn cycles_smallest_first(&self) -> Vec<Vec<u32>> {
        let mut cycles = raw_cycles(&self.word);
        for c in &mut cycles {
            let min_pos = c
                .iter()
                .enumerate()
                .min_by_key(|(_, &x)| x)
                .map(|(i, _)| i)
                .unwrap();
            c.rotate_left(min_pos);
        }
        cycles.sort_by_key(|c| std::cmp::Reverse(c[0]));
        cycles
    }

    /// Build a permutation of `[n]` from cycles (any rotation/order).
    pub fn from_cycles(cycles: &[Vec<u32>], n: usize) -> Result<Permutation> {
        let mut word = vec![0u32; n];
        for cycle in cycles {
            for (i, &a) in cycle.iter().enumerate() {
                let b = cycle[(i + 1) % cycle.len()];
                if a == 0 || a as usize > n {
                    return Err(Error::LetterOutOfRange { letter: a, n });
                }
                if word[a as usize - 1] != 0 {
                    return Err(Error::InvalidPermutation(format!("letter {a} repeated")));
                }
                word[a as usize - 1] = b;
            }
        }
        if word.contains(&0) {
            return Err(Error::InvalidPermutation(
                "cycles do not cover [n]".to_string(),
            ));
        }
        Permutation::new(word)
    }

    pub fn cycle_string(&self) -> String {
        render_cycles(&self.cycles(), self.n())
    }

    pub fn cycle_string_smallest_first(&self) -> String {
        render_cycles(&self.cycles_smallest_first(), self.n())
    }

    /// Maximal increasing runs, in word order.
    pub fn runs(&self) -> Vec<Vec<u32>> {
        increasing_runs(&self.word)
    }

    /// 1-based positions of the length-1 increasing runs.
    pub fn short_runs(&self) -> Vec<usize> {
        let mut positions = Vec::new();
        let mut start = 1;
        for run in self.runs() {
            if run.len() == 1 {
                positions.push(start);
            }
            start += run.len();
        }
        positions
    }

    /// Letters that form length-1 increasing runs.
    pub fn short_run_letters(&self) -> Vec<u32> {
        let mut letters: Vec<u32> = self
            .runs()
            .into_iter()
            .filter(|r| r.len() == 1)
            .map(|r| r[0])
            .collect();
        letters.sort_unstable();
        letters
    }

    /// 1-based positions of left-to-right maxima.
    pub fn left_to_right_maxima(&self) -> Vec<usize> {
        let mut best = 0;
        let mut out = Vec::new();
        for (i, &x) in self.word.iter().enumerate() {
            if x > best {
                best = x;
                out.push(i + 1);
            }
        }
        out
    }

    /// 1-based positions of left-to-right minima.
    pub fn left_to_right_minima(&self) -> Vec<usize> {
        let mut best = u32::MAX;
        let mut out = Vec::new();
        for (i, &x) in self.word.iter().enumerate() {
            if x < best {
                best = x;
                out.push(i + 1);
            }
        }
        out
    }

    /// `pi_1 < pi_2 > pi_3 < ...`
    pub fn is_alternating(&self) -> bool {
        is_alternating_word(&self.word)
    }

    /// `pi_1 > pi_2 < pi_3 > ...`
    pub fn is_reverse_alternating(&self) -> bool {
        is_reverse_alternating_word(&self.word)
    }
}

/// One-line notation: concatenated digits for `n <= 9`, space-separated
/// letters otherwise.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for &x in &self.word {
                write!(f, "{x}")?;
            }
        } else {
            for (i, &x) in self.word.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Permutation> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty permutation".into()));
        }
        let word: Vec<u32> = if s.contains(char::is_whitespace) || s.contains(',') {
            s.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|tok| !tok.is_empty())
                .map(|tok| {
                    tok.parse::<u32>()
                        .map_err(|_| Error::Parse(format!("invalid letter `{tok}`")))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .filter(|&d| d > 0)
                        .ok_or_else(|| Error::Parse(format!("invalid letter `{c}`")))
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(word)
    }
}

fn render_cycles(cycles: &[Vec<u32>], n: usize) -> String {
    let mut out = String::new();
    for cycle in cycles {
        out.push('(');
        for (i, &x) in cycle.iter().enumerate() {
            if i > 0 && n > 9 {
                out.push(' ');
            }
            out.push_str(&x.to_string());
        }
        out.push(')');
    }
    out
}

fn raw_cycles(word: &[u32]) -> Vec<Vec<u32>> {
    let n = word.len();
    let mut visited = vec![false; n];
    let mut cycles = Vec::new();
    for start in 0..n {
        if visited[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut cur = start;
        while !visited[cur] {
            visited[cur] = true;
            cycle.push(cur as u32 + 1);
            cur = word[cur] as usize - 1;
        }
        cycles.push(cycle);
    }
    cycles
}

/// Maximal increasing runs of an arbitrary word (not required to be a
/// permutation).
pub fn increasing_runs(word: &[u32]) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut run: Vec<u32> = Vec::new();
    for &x in word {
        if let Some(&last) = run.last() {
            if x < last {
                out.push(std::mem::take(&mut run));
            }
        }
        run.push(x);
    }
    if !run.is_empty() {
        out.push(run);
    }
    out
}

pub(crate) fn has_fixed_point(word: &[u32]) -> bool {
    word.iter().enumerate().any(|(i, &x)| x as usize == i + 1)
}

pub(crate) fn is_alternating_word(word: &[u32]) -> bool {
    word.windows(2)
        .enumerate()
        .all(|(i, w)| if i % 2 == 0 { w[0] < w[1] } else { w[0] > w[1] })
}

pub(crate) fn is_reverse_alternating_word(word: &[u32]) -> bool {
    word.windows(2)
        .enumerate()
        .all(|(i, w)| if i % 2 == 0 { w[0] > w[1] } else { w[0] < w[1] })
}

/// All statistic counts computed in one pass each over the word.
#[derive(Clone, Copy, Debug, Default)]
struct StatCounts {
    pk: u32,
    val: u32,
    dasc: u32,
    ddes: u32,
    des: u32,
    cpk: u32,
    cval: u32,
    cdasc: u32,
    cddes: u32,
    exc: u32,
    cyc: u32,
    fix: u32,
}

#[derive(Clone, Copy, Default)]
struct Needs {
    linear: bool,
    des: bool,
    cyclic: bool,
    exc: bool,
    cycles: bool,
    fix: bool,
}

fn needs_of(stats: &[Stat]) -> Needs {
    let mut needs = Needs::default();
    for stat in stats {
        match stat {
            Stat::Pk | Stat::Val | Stat::Dasc | Stat::Ddes | Stat::Dbl => needs.linear = true,
            Stat::Des => needs.des = true,
            Stat::Cpk | Stat::Cval | Stat::Cdasc | Stat::Cddes | Stat::Cdbl => {
                needs.cyclic = true
            }
            Stat::Exc => needs.exc = true,
            Stat::Cyc => needs.cycles = true,
            Stat::Fix => needs.fix = true,
        }
    }
    needs
}

fn counts_of(word: &[u32], needs: Needs) -> StatCounts {
    let mut c = StatCounts::default();
    let n = word.len();
    if needs.linear {
        for i in 0..n {
            let prev = if i == 0 { INF } else { word[i - 1] as u64 };
            let next = if i + 1 == n { INF } else { word[i + 1] as u64 };
            match class_of(prev, word[i] as u64, next) {
                LetterClass::Peak => c.pk += 1,
                LetterClass::Valley => c.val += 1,
                LetterClass::DoubleAscent => c.dasc += 1,
                LetterClass::DoubleDescent => c.ddes += 1,
            }
        }
    }
    if needs.des {
        c.des = word.windows(2).filter(|w| w[0] > w[1]).count() as u32;
    }
    if needs.cyclic || needs.fix {
        for i in 0..n {
            let cur = word[i];
            if cur as usize == i + 1 {
                c.fix += 1;
                continue;
            }
            if needs.cyclic {
                let next = word[cur as usize - 1];
                match class_of((i + 1) as u64, cur as u64, next as u64) {
                    LetterClass::Peak => c.cpk += 1,
                    LetterClass::Valley => c.cval += 1,
                    LetterClass::DoubleAscent => c.cdasc += 1,
                    LetterClass::DoubleDescent => c.cddes += 1,
                }
            }
        }
    }
    if needs.exc {
        c.exc = word
            .iter()
            .enumerate()
            .filter(|&(i, &x)| (i + 1) < x as usize)
            .count() as u32;
    }
    if needs.cycles {
        if n <= 64 {
            let mut visited = 0u64;
            for start in 0..n {
                if visited & (1 << start) != 0 {
                    continue;
                }
                c.cyc += 1;
                let mut cur = start;
                while visited & (1 << cur) == 0 {
                    visited |= 1 << cur;
                    cur = word[cur] as usize - 1;
                }
            }
        } else {
            c.cyc = raw_cycles(word).len() as u32;
        }
    }
    c
}

fn stat_of(word: &[u32], stat: Stat) -> usize {
    let c = counts_of(word, needs_of(&[stat]));
    value_of(&c, stat) as usize
}

fn value_of(c: &StatCounts, stat: Stat) -> u32 {
    match stat {
        Stat::Pk => c.pk,
        Stat::Val => c.val,
        Stat::Dasc => c.dasc,
        Stat::Ddes => c.ddes,
        Stat::Dbl => c.dasc + c.ddes,
        Stat::Des => c.des,
        Stat::Cpk => c.cpk,
        Stat::Cval => c.cval,
        Stat::Cdasc => c.cdasc,
        Stat::Cddes => c.cddes,
        Stat::Cdbl => c.cdasc + c.cddes,
        Stat::Exc => c.exc,
        Stat::Cyc => c.cyc,
        Stat::Fix => c.fix,
    }
}

/// Classic lexicographic successor; returns false after the last word.
fn next_permutation(w: &mut [u32]) -> bool {
    if w.len() < 2 {
        return false;
    }
    let mut i = w.len() - 1;
    while i > 0 && w[i - 1] >= w[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = w.len() - 1;
    while w[j] <= w[i - 1] {
        j -= 1;
    }
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}

/// Lazy lexicographic enumeration of S_n or D_n.
pub struct Perms {
    word: Option<Vec<u32>>,
    set: PermSet,
}

impl Iterator for Perms {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        loop {
            let word = self.word.as_mut()?;
            let keep = match self.set {
                PermSet::All => true,
                PermSet::Derangements => !has_fixed_point(word),
            };
            let current = keep.then(|| Permutation::from_word_unchecked(word.clone()));
            if !next_permutation(word) {
                self.word = None;
            }
            if let Some(p) = current {
                return Some(p);
            }
        }
    }
}

/// Every element of the chosen set exactly once, lexicographically.
pub fn enumerate(n: usize, set: PermSet) -> Perms {
    Perms {
        word: Some((1..=n as u32).collect()),
        set,
    }
}

/// Sequential visit of the chosen set in lexicographic order.
pub fn for_each(n: usize, set: PermSet, mut f: impl FnMut(&Permutation)) {
    for p in enumerate(n, set) {
        f(&p);
    }
}

/// Parallel count of the elements satisfying a predicate, partitioned by
/// first-letter prefix.
pub fn count_matching(
    n: usize,
    set: PermSet,
    pred: impl Fn(&Permutation) -> bool + Sync,
) -> u64 {
    if n == 0 {
        let empty = Permutation::from_word_unchecked(Vec::new());
        return pred(&empty) as u64;
    }
    if n < 8 {
        let mut count = 0;
        for_each(n, set, |p| count += pred(p) as u64);
        return count;
    }
    (1..=n as u32)
        .into_par_iter()
        .map(|first| {
            let mut count = 0u64;
            visit_with_first(n, set, first, |word| {
                count += pred(&Permutation::from_word_unchecked(word.to_vec())) as u64;
            });
            count
        })
        .sum()
}

/// Visit all words of S_n with the given first letter (lexicographically),
/// filtered to the chosen set.
fn visit_with_first(n: usize, set: PermSet, first: u32, mut f: impl FnMut(&[u32])) {
    if set == PermSet::Derangements && first == 1 {
        return;
    }
    let mut word: Vec<u32> = Vec::with_capacity(n);
    word.push(first);
    word.extend((1..=n as u32).filter(|&x| x != first));
    loop {
        let keep = match set {
            PermSet::All => true,
            PermSet::Derangements => !has_fixed_point(&word),
        };
        if keep {
            f(&word);
        }
        if !next_permutation(&mut word[1..]) {
            break;
        }
    }
}

/// The distribution polynomial `sum over the set of prod var_j^{stat_j}`.
pub fn distribution(n: usize, set: PermSet, stats: &[Stat], vars: &[Var]) -> Result<MPoly> {
    if stats.len() != vars.len() {
        return Err(Error::StatVarMismatch {
            stats: stats.len(),
            vars: vars.len(),
        });
    }
    if n > MAX_ENUM_N {
        return Err(Error::ParamOutOfRange(format!(
            "n = {n} exceeds the enumeration bound {MAX_ENUM_N}"
        )));
    }
    let needs = needs_of(stats);
    let accumulate = |acc: &mut BTreeMap<Monomial, i64>, word: &[u32]| {
        let counts = counts_of(word, needs);
        let mut exps = [0u32; NUM_VARS];
        for (stat, var) in stats.iter().zip(vars) {
            exps[var.index()] += value_of(&counts, *stat);
        }
        *acc.entry(Monomial::new(exps)).or_insert(0) += 1;
    };

    let merged = if n < 9 {
        let mut acc = BTreeMap::new();
        if n == 0 {
            accumulate(&mut acc, &[]);
        } else {
            let mut word: Vec<u32> = (1..=n as u32).collect();
            loop {
                let keep = match set {
                    PermSet::All => true,
                    PermSet::Derangements => !has_fixed_point(&word),
                };
                if keep {
                    accumulate(&mut acc, &word);
                }
                if !next_permutation(&mut word) {
                    break;
                }
            }
        }
        acc
    } else {
        let partials: Vec<BTreeMap<Monomial, i64>> = (1..=n as u32)
            .into_par_iter()
            .map(|first| {
                let mut acc = BTreeMap::new();
                visit_with_first(n, set, first, |word| accumulate(&mut acc, word));
                acc
            })
            .collect();
        let mut merged = BTreeMap::new();
        for partial in partials {
            for (m, count) in partial {
                *merged.entry(m).or_insert(0) += count;
            }
        }
        merged
    };

    let mut out = MPoly::zero();
    for (m, count) in merged {
        out.add_term(m, Rational::from_integer(count.into()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn poly(s: &str) -> MPoly {
        s.parse().unwrap()
    }

    use LetterClass::*;

    #[test]
    fn linear_classification_examples() {
        assert_eq!(perm("132").classify_linear(), vec![Valley, Peak, Valley]);
        assert_eq!(
            perm("213").classify_linear(),
            vec![DoubleDescent, Valley, DoubleAscent]
        );
        let p = perm("467125839");
        assert_eq!(p.stat(Stat::Pk), 2);
        assert_eq!(p.stat(Stat::Val), 3);
        assert_eq!(p.stat(Stat::Dasc), 4);
        assert_eq!(p.stat(Stat::Ddes), 0);
    }

    #[test]
    fn cyclic_classification_examples() {
        assert_eq!(
            perm("21").classify_cyclic(),
            vec![Some(Peak), Some(Valley)]
        );
        assert_eq!(
            perm("231").classify_cyclic(),
            vec![Some(DoubleAscent), Some(Peak), Some(Valley)]
        );
        assert_eq!(
            Permutation::identity(3).classify_cyclic(),
            vec![None, None, None]
        );
    }

    #[test]
    fn stat_examples() {
        assert_eq!(perm("321").stat(Stat::Des), 2);
        assert_eq!(perm("321").stat(Stat::Dbl), 2);
        let p = perm("21");
        assert_eq!(
            p.stat(Stat::Exc),
            p.stat(Stat::Cval) + p.stat(Stat::Cdasc)
        );
        let p = perm("649237185");
        assert_eq!(p.stat(Stat::Cyc), 4);
        assert_eq!(p.stat(Stat::Fix), 1);
        assert_eq!(p.cycle_string(), "(42)(716)(8)(953)");
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate(3, PermSet::All).count(), 6);
        let d3: Vec<String> = enumerate(3, PermSet::Derangements)
            .map(|p| p.to_string())
            .collect();
        assert_eq!(d3, vec!["231", "312"]);
        assert_eq!(enumerate(1, PermSet::Derangements).count(), 0);
        assert_eq!(enumerate(0, PermSet::All).count(), 1);
        assert_eq!(enumerate(0, PermSet::Derangements).count(), 1);
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let all: Vec<Permutation> = enumerate(4, PermSet::All).collect();
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
        assert_eq!(all.len(), 24);
    }

    #[test]
    fn distribution_examples() {
        assert_eq!(
            distribution(3, PermSet::All, &[Stat::Des], &[Var::T]).unwrap(),
            poly("1 + 4*t + t^2")
        );
        assert_eq!(
            distribution(5, PermSet::Derangements, &[Stat::Cpk], &[Var::T]).unwrap(),
            poly("8*t + 36*t^2")
        );
        assert_eq!(
            distribution(5, PermSet::Derangements, &[Stat::Cddes], &[Var::T]).unwrap(),
            poly("19 + 21*t + 3*t^2 + t^3")
        );
    }

    #[test]
    fn distribution_rejects_bad_args() {
        assert!(distribution(3, PermSet::All, &[Stat::Pk], &[]).is_err());
        assert!(distribution(12, PermSet::All, &[Stat::Pk], &[Var::T]).is_err());
    }

    #[test]
    fn parallel_and_sequential_distributions_agree() {
        // n = 9 takes the parallel path; spot-check against a small n = 6
        // identity that must also hold at 9: total mass is n!.
        let d = distribution(9, PermSet::All, &[Stat::Pk], &[Var::T]).unwrap();
        let total: Rational = d.terms().map(|(_, c)| c.clone()).sum();
        assert_eq!(total, Rational::from_integer(362880.into()));
        let seq = {
            let mut acc = MPoly::zero();
            for_each(6, PermSet::All, |p| {
                let m = Monomial::var_pow(Var::T, p.stat(Stat::Pk) as u32);
                acc.add_term(m, Rational::from_integer(1.into()));
            });
            acc
        };
        assert_eq!(
            seq,
            distribution(6, PermSet::All, &[Stat::Pk], &[Var::T]).unwrap()
        );
    }

    #[test]
    fn runs_and_short_runs() {
        // The increasing runs of the word 4,6,7,1,9,2,6,8,5 are 467, 19,
        // 268, and 5; only the run 5 is short. (Increasing runs are defined
        // for arbitrary words, not just permutations.)
        let word = [4, 6, 7, 1, 9, 2, 6, 8, 5];
        let runs = increasing_runs(&word);
        assert_eq!(
            runs,
            vec![vec![4, 6, 7], vec![1, 9], vec![2, 6, 8], vec![5]]
        );
        assert_eq!(runs.iter().filter(|r| r.len() == 1).count(), 1);

        let p = perm("467125839");
        assert_eq!(p.runs(), vec![vec![4, 6, 7], vec![1, 2, 5, 8], vec![3, 9]]);
        assert_eq!(p.short_runs(), Vec::<usize>::new());
    }

    #[test]
    fn alternating_flags() {
        assert!(perm("1324").is_alternating());
        let count = enumerate(4, PermSet::All)
            .filter(Permutation::is_alternating)
            .count();
        assert_eq!(count, 5); // E_4
        assert!(perm("21435").is_reverse_alternating());
    }

    #[test]
    fn maxima_and_minima() {
        // The left-to-right maxima of a canonical cycle word mark the cycle
        // starts; same for minima under the smallest-first convention.
        let p = perm("427168953");
        assert_eq!(p.left_to_right_maxima(), vec![1, 3, 6, 7]);
        assert_eq!(perm("839524167").left_to_right_minima(), vec![1, 2, 5, 7]);
    }

    #[test]
    fn parse_and_render() {
        assert_eq!(perm("231").to_string(), "231");
        let big: Permutation = "10 2 3 4 5 6 7 8 9 1".parse().unwrap();
        assert_eq!(big.to_string(), "10 2 3 4 5 6 7 8 9 1");
        assert!("122".parse::<Permutation>().is_err());
        assert!("103".parse::<Permutation>().is_err());
        assert!("".parse::<Permutation>().is_err());
    }

    #[test]
    fn cycle_round_trip() {
        let p = perm("649237185");
        let q = Permutation::from_cycles(&p.cycles(), 9).unwrap();
        assert_eq!(p, q);
        assert_eq!(p.cycle_string_smallest_first(), "(8)(395)(24)(167)");
        let big: Permutation = "2 1 3 4 5 6 7 8 9 10".parse().unwrap();
        assert_eq!(big.cycle_string(), "(2 1)(3)(4)(5)(6)(7)(8)(9)(10)");
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn class_partition_and_val_pk(n in 1usize..8, seed in 0u64..10_000) {
            let p = nth_perm(n, seed);
            prop_assert_eq!(
                p.stat(Stat::Pk) + p.stat(Stat::Val) + p.stat(Stat::Dasc) + p.stat(Stat::Ddes),
                n
            );
            prop_assert_eq!(p.stat(Stat::Val), p.stat(Stat::Pk) + 1);
        }

        #[test]
        fn exc_is_cval_plus_cdasc(n in 1usize..8, seed in 0u64..10_000) {
            let p = nth_perm(n, seed);
            prop_assert_eq!(p.stat(Stat::Exc), p.stat(Stat::Cval) + p.stat(Stat::Cdasc));
        }

        #[test]
        fn reversal_preserves_pk_val_and_swaps_dasc_ddes(n in 1usize..8, seed in 0u64..10_000) {
            let p = nth_perm(n, seed);
            let r = p.reversal();
            prop_assert_eq!(p.stat(Stat::Pk), r.stat(Stat::Pk));
            prop_assert_eq!(p.stat(Stat::Val), r.stat(Stat::Val));
            prop_assert_eq!(p.stat(Stat::Dasc), r.stat(Stat::Ddes));
            prop_assert_eq!(p.stat(Stat::Ddes), r.stat(Stat::Dasc));
        }
    }

    /// Deterministic pseudo-random permutation for property tests.
    fn nth_perm(n: usize, seed: u64) -> Permutation {
        let mut word: Vec<u32> = (1..=n as u32).collect();
        let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1);
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (state >> 33) as usize % (i + 1);
            word.swap(i, j);
        }
        Permutation::new(word).unwrap()
    }

    #[test]
    fn linear_class_partition_exhaustive() {
        for n in 1..=9 {
            let total = enumerate(n, PermSet::All).count() as u64;
            let good = count_matching(n, PermSet::All, |p| {
                p.stat(Stat::Pk) + p.stat(Stat::Val) + p.stat(Stat::Dasc) + p.stat(Stat::Ddes)
                    == n
                    && p.stat(Stat::Val) == p.stat(Stat::Pk) + 1
                    && p.stat(Stat::Exc) == p.stat(Stat::Cval) + p.stat(Stat::Cdasc)
            });
            assert_eq!(good, total, "n = {n}");
        }
    }

    #[test]
    fn cyclic_class_partition_on_derangements() {
        for n in 2..=9 {
            let total = enumerate(n, PermSet::Derangements).count() as u64;
            let good = count_matching(n, PermSet::Derangements, |d| {
                d.stat(Stat::Cpk)
                    + d.stat(Stat::Cval)
                    + d.stat(Stat::Cdasc)
                    + d.stat(Stat::Cddes)
                    == n
                    && d.stat(Stat::Cpk) == d.stat(Stat::Cval)
            });
            assert_eq!(good, total, "n = {n}");
        }
    }

    #[test]
    fn des_and_exc_equidistributed() {
        for n in 1..=9 {
            let des = distribution(n, PermSet::All, &[Stat::Des], &[Var::T]).unwrap();
            let exc = distribution(n, PermSet::All, &[Stat::Exc], &[Var::T]).unwrap();
            assert_eq!(des, exc, "n = {n}");
        }
    }
}
