//! Valley-hopping involutions and the bijections built from them.
//!
//! `phi_k` moves the letter `k` across the maximal adjacent runs of smaller
//! letters, toggling it between double ascent and double descent while
//! fixing peaks and valleys. `big_phi` turns a permutation with no double
//! ascents and two-colored double descents into an arbitrary permutation by
//! hopping the red ones. The cyclic story conjugates by Foata's
//! fundamental transformation `o` (canonical cycle form, parentheses
//! erased), with the left boundary treated as 0 rather than infinity.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::{enumerate, LetterClass, PermSet, Permutation};

/// Color of a (cyclic) double descent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    fn suffix(self) -> char {
        match self {
            Color::Red => 'r',
            Color::Blue => 'b',
        }
    }
}

const LEFT_INF: u64 = u64::MAX;
const LEFT_ZERO: u64 = 0;

fn phi_k_word(word: &[u32], k: u32, left_boundary: u64) -> Vec<u32> {
    let n = word.len();
    let pos = word.iter().position(|&x| x == k).expect("letter present");
    let prev = if pos == 0 {
        left_boundary
    } else {
        word[pos - 1] as u64
    };
    let next = if pos + 1 == n {
        u64::MAX
    } else {
        word[pos + 1] as u64
    };
    let k64 = k as u64;
    let is_double = (prev < k64) == (k64 < next);
    if !is_double {
        return word.to_vec();
    }
    // word = w1 w2 k w4 w5 with w2, w4 the maximal adjacent runs of letters
    // smaller than k; the hop emits w1 w4 k w2 w5.
    let mut lo = pos;
    while lo > 0 && word[lo - 1] < k {
        lo -= 1;
    }
    let mut hi = pos;
    while hi + 1 < n && word[hi + 1] < k {
        hi += 1;
    }
    let mut out = Vec::with_capacity(n);
    out.extend_from_slice(&word[..lo]);
    out.extend_from_slice(&word[pos + 1..=hi]);
    out.push(k);
    out.extend_from_slice(&word[lo..pos]);
    out.extend_from_slice(&word[hi + 1..]);
    out
}

/// The valley-hopping involution `phi_k`.
pub fn phi_k(p: &Permutation, k: u32) -> Result<Permutation> {
    if k == 0 || k as usize > p.n() {
        return Err(Error::LetterOutOfRange { letter: k, n: p.n() });
    }
    Ok(Permutation::new(phi_k_word(p.word(), k, LEFT_INF)).expect("phi_k keeps a bijection"))
}

/// `phi_S`: the product of `phi_k` over the set (they commute; applied in
/// increasing order for reproducibility).
pub fn phi_set(p: &Permutation, set: &BTreeSet<u32>) -> Result<Permutation> {
    let mut out = p.clone();
    for &k in set {
        out = phi_k(&out, k)?;
    }
    Ok(out)
}

/// Foata's fundamental transformation: write the permutation in canonical
/// cycle form (largest letter first, cycles by increasing maxima) and erase
/// the parentheses.
pub fn foata_o(p: &Permutation) -> Permutation {
    let word: Vec<u32> = p.cycles().into_iter().flatten().collect();
    Permutation::new(word).expect("cycle letters form a bijection")
}

/// Inverse of `foata_o`: cut the word before each left-to-right maximum and
/// read the segments as cycles.
pub fn foata_o_inv(p: &Permutation) -> Permutation {
    let cycles = split_at_positions(p.word(), &p.left_to_right_maxima());
    Permutation::from_cycles(&cycles, p.n()).expect("segments form disjoint cycles")
}

/// The smallest-first variant: each cycle starts with its smallest letter,
/// cycles ordered by decreasing smallest letters.
pub fn foata_o_prime(p: &Permutation) -> Permutation {
    let word: Vec<u32> = p.cycles_smallest_first().into_iter().flatten().collect();
    Permutation::new(word).expect("cycle letters form a bijection")
}

/// Inverse of `foata_o_prime`, cutting before each left-to-right minimum.
pub fn foata_o_prime_inv(p: &Permutation) -> Permutation {
    let cycles = split_at_positions(p.word(), &p.left_to_right_minima());
    Permutation::from_cycles(&cycles, p.n()).expect("segments form disjoint cycles")
}

fn split_at_positions(word: &[u32], starts: &[usize]) -> Vec<Vec<u32>> {
    let mut cycles = Vec::with_capacity(starts.len());
    for (i, &start) in starts.iter().enumerate() {
        let end = starts.get(i + 1).map_or(word.len(), |&next| next - 1);
        cycles.push(word[start - 1..end].to_vec());
    }
    cycles
}

/// Cyclic valley-hopping `theta_k = o^{-1} . phi_k . o`, where the 0th
/// letter of `o(pi)` is treated as 0 rather than infinity. Restricted to
/// derangements.
pub fn theta_k(d: &Permutation, k: u32) -> Result<Permutation> {
    theta_set(d, &BTreeSet::from([k]))
}

/// `theta_S`, the product of `theta_k` over the set.
pub fn theta_set(d: &Permutation, set: &BTreeSet<u32>) -> Result<Permutation> {
    if !d.is_derangement() {
        return Err(Error::NotADerangement);
    }
    for &k in set {
        if k == 0 || k as usize > d.n() {
            return Err(Error::LetterOutOfRange { letter: k, n: d.n() });
        }
    }
    let mut word = foata_o(d).word().to_vec();
    for &k in set {
        word = phi_k_word(&word, k, LEFT_ZERO);
    }
    let out = foata_o_inv(&Permutation::new(word).expect("phi_k keeps a bijection"));
    debug_assert!(out.is_derangement());
    Ok(out)
}

/// A permutation with no double ascents whose double descents each carry a
/// color; the `colors` map is keyed by 0-based position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredPerm {
    base: Permutation,
    colors: BTreeMap<usize, Color>,
}

impl ColoredPerm {
    pub fn new(base: Permutation, colors: BTreeMap<usize, Color>) -> Result<ColoredPerm> {
        let classes = base.classify_linear();
        let ddes: BTreeSet<usize> = classes
            .iter()
            .enumerate()
            .filter(|(_, c)| **c == LetterClass::DoubleDescent)
            .map(|(i, _)| i)
            .collect();
        if classes.contains(&LetterClass::DoubleAscent) {
            return Err(Error::InvalidColoredPerm(format!(
                "{base} has a double ascent"
            )));
        }
        let keys: BTreeSet<usize> = colors.keys().copied().collect();
        if keys != ddes {
            return Err(Error::InvalidColoredPerm(format!(
                "colored positions {keys:?} differ from double-descent positions {ddes:?}"
            )));
        }
        Ok(ColoredPerm { base, colors })
    }

    pub fn base(&self) -> &Permutation {
        &self.base
    }

    pub fn colors(&self) -> &BTreeMap<usize, Color> {
        &self.colors
    }

    /// Letters at red positions.
    pub fn red_letters(&self) -> BTreeSet<u32> {
        self.colors
            .iter()
            .filter(|(_, c)| **c == Color::Red)
            .map(|(&pos, _)| self.base.word()[pos])
            .collect()
    }
}

impl fmt::Display for ColoredPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render_colored(self.base.word(), &self.colors, f)
    }
}

impl FromStr for ColoredPerm {
    type Err = Error;
    fn from_str(s: &str) -> Result<ColoredPerm> {
        let (base, colors) = parse_colored(s)?;
        ColoredPerm::new(base, colors)
    }
}

/// A derangement with no cyclic double ascents whose cyclic double descents
/// each carry a color; keyed by 0-based position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredDerangement {
    base: Permutation,
    colors: BTreeMap<usize, Color>,
}

impl ColoredDerangement {
    pub fn new(base: Permutation, colors: BTreeMap<usize, Color>) -> Result<ColoredDerangement> {
        if !base.is_derangement() {
            return Err(Error::NotADerangement);
        }
        let classes = base.classify_cyclic();
        let cddes: BTreeSet<usize> = classes
            .iter()
            .enumerate()
            .filter(|(_, c)| **c == Some(LetterClass::DoubleDescent))
            .map(|(i, _)| i)
            .collect();
        if classes.contains(&Some(LetterClass::DoubleAscent)) {
            return Err(Error::InvalidColoredPerm(format!(
                "{base} has a cyclic double ascent"
            )));
        }
        let keys: BTreeSet<usize> = colors.keys().copied().collect();
        if keys != cddes {
            return Err(Error::InvalidColoredPerm(format!(
                "colored positions {keys:?} differ from cyclic double-descent positions {cddes:?}"
            )));
        }
        Ok(ColoredDerangement { base, colors })
    }

    pub fn base(&self) -> &Permutation {
        &self.base
    }

    pub fn colors(&self) -> &BTreeMap<usize, Color> {
        &self.colors
    }

    /// Letters at red positions.
    pub fn red_letters(&self) -> BTreeSet<u32> {
        self.colors
            .iter()
            .filter(|(_, c)| **c == Color::Red)
            .map(|(&pos, _)| self.base.word()[pos])
            .collect()
    }
}

impl fmt::Display for ColoredDerangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render_colored(self.base.word(), &self.colors, f)
    }
}

impl FromStr for ColoredDerangement {
    type Err = Error;
    fn from_str(s: &str) -> Result<ColoredDerangement> {
        let (base, colors) = parse_colored(s)?;
        ColoredDerangement::new(base, colors)
    }
}

fn render_colored(
    word: &[u32],
    colors: &BTreeMap<usize, Color>,
    f: &mut fmt::Formatter<'_>,
) -> fmt::Result {
    for (i, &x) in word.iter().enumerate() {
        if i > 0 {
            write!(f, " ")?;
        }
        write!(f, "{x}")?;
        if let Some(c) = colors.get(&i) {
            write!(f, "{}", c.suffix())?;
        }
    }
    Ok(())
}

fn parse_colored(s: &str) -> Result<(Permutation, BTreeMap<usize, Color>)> {
    let mut word = Vec::new();
    let mut colors = BTreeMap::new();
    for (i, token) in s.split_whitespace().enumerate() {
        let (digits, color) = match token.strip_suffix(['r', 'b']) {
            Some(head) => {
                let color = if token.ends_with('r') {
                    Color::Red
                } else {
                    Color::Blue
                };
                (head, Some(color))
            }
            None => (token, None),
        };
        let letter: u32 = digits
            .parse()
            .map_err(|_| Error::Parse(format!("invalid colored letter `{token}`")))?;
        word.push(letter);
        if let Some(c) = color {
            colors.insert(i, c);
        }
    }
    Ok((Permutation::new(word)?, colors))
}

/// `Phi`: hop the red double descents and forget the colors.
pub fn big_phi(c: &ColoredPerm) -> Permutation {
    phi_set(c.base(), &c.red_letters()).expect("letters are in range")
}

/// Inverse of `Phi`: hop every double ascent away, then color the double
/// descents that were already double descents blue and the rest red.
pub fn big_phi_inv(p: &Permutation) -> ColoredPerm {
    let classes = p.classify_linear();
    let dasc_letters: BTreeSet<u32> = letters_with(p, &classes, LetterClass::DoubleAscent);
    let old_ddes: BTreeSet<u32> = letters_with(p, &classes, LetterClass::DoubleDescent);
    let sigma = phi_set(p, &dasc_letters).expect("letters are in range");
    let mut colors = BTreeMap::new();
    for (i, class) in sigma.classify_linear().iter().enumerate() {
        if *class == LetterClass::DoubleDescent {
            let letter = sigma.word()[i];
            let color = if old_ddes.contains(&letter) {
                Color::Blue
            } else {
                Color::Red
            };
            colors.insert(i, color);
        }
    }
    ColoredPerm::new(sigma, colors).expect("hopping all double ascents lands in the colored set")
}

/// The cyclic analogue of `Phi`.
pub fn big_phi_ring(c: &ColoredDerangement) -> Permutation {
    theta_set(c.base(), &c.red_letters()).expect("base is a derangement")
}

/// Inverse of `big_phi_ring`.
pub fn big_phi_ring_inv(d: &Permutation) -> Result<ColoredDerangement> {
    if !d.is_derangement() {
        return Err(Error::NotADerangement);
    }
    let classes = d.classify_cyclic();
    let cdasc_letters: BTreeSet<u32> =
        letters_with_cyclic(d, &classes, LetterClass::DoubleAscent);
    let old_cddes: BTreeSet<u32> =
        letters_with_cyclic(d, &classes, LetterClass::DoubleDescent);
    let sigma = theta_set(d, &cdasc_letters)?;
    let mut colors = BTreeMap::new();
    for (i, class) in sigma.classify_cyclic().iter().enumerate() {
        if *class == Some(LetterClass::DoubleDescent) {
            let letter = sigma.word()[i];
            let color = if old_cddes.contains(&letter) {
                Color::Blue
            } else {
                Color::Red
            };
            colors.insert(i, color);
        }
    }
    Ok(ColoredDerangement::new(sigma, colors)
        .expect("hopping all cyclic double ascents lands in the colored set"))
}

fn letters_with(p: &Permutation, classes: &[LetterClass], class: LetterClass) -> BTreeSet<u32> {
    classes
        .iter()
        .enumerate()
        .filter(|(_, c)| **c == class)
        .map(|(i, _)| p.word()[i])
        .collect()
}

fn letters_with_cyclic(
    p: &Permutation,
    classes: &[Option<LetterClass>],
    class: LetterClass,
) -> BTreeSet<u32> {
    classes
        .iter()
        .enumerate()
        .filter(|(_, c)| **c == Some(class))
        .map(|(i, _)| p.word()[i])
        .collect()
}

/// All elements of the colored set over S_n (no double ascents, each double
/// descent red or blue).
pub fn colored_perms(n: usize) -> Vec<ColoredPerm> {
    let mut out = Vec::new();
    for p in enumerate(n, PermSet::All) {
        let classes = p.classify_linear();
        if classes.contains(&LetterClass::DoubleAscent) {
            continue;
        }
        let ddes_positions: Vec<usize> = classes
            .iter()
            .enumerate()
            .filter(|(_, c)| **c == LetterClass::DoubleDescent)
            .map(|(i, _)| i)
            .collect();
        for mask in 0u32..(1 << ddes_positions.len()) {
            let colors: BTreeMap<usize, Color> = ddes_positions
                .iter()
                .enumerate()
                .map(|(bit, &pos)| {
                    let color = if mask & (1 << bit) != 0 {
                        Color::Red
                    } else {
                        Color::Blue
                    };
                    (pos, color)
                })
                .collect();
            out.push(ColoredPerm::new(p.clone(), colors).unwrap());
        }
    }
    out
}

/// All elements of the colored set over D_n (no cyclic double ascents, each
/// cyclic double descent red or blue).
pub fn colored_derangements(n: usize) -> Vec<ColoredDerangement> {
    let mut out = Vec::new();
    for d in enumerate(n, PermSet::Derangements) {
        let classes = d.classify_cyclic();
        if classes.contains(&Some(LetterClass::DoubleAscent)) {
            continue;
        }
        let cddes_positions: Vec<usize> = classes
            .iter()
            .enumerate()
            .filter(|(_, c)| **c == Some(LetterClass::DoubleDescent))
            .map(|(i, _)| i)
            .collect();
        for mask in 0u32..(1 << cddes_positions.len()) {
            let colors: BTreeMap<usize, Color> = cddes_positions
                .iter()
                .enumerate()
                .map(|(bit, &pos)| {
                    let color = if mask & (1 << bit) != 0 {
                        Color::Red
                    } else {
                        Color::Blue
                    };
                    (pos, color)
                })
                .collect();
            out.push(ColoredDerangement::new(d.clone(), colors).unwrap());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Stat;
    use std::collections::BTreeSet;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn phi_k_examples() {
        assert_eq!(phi_k(&perm("467125839"), 5).unwrap(), perm("467512839"));
        assert_eq!(phi_k(&perm("132"), 3).unwrap(), perm("132"));
        let p = perm("213");
        assert_eq!(phi_k(&phi_k(&p, 2).unwrap(), 2).unwrap(), p);
        assert!(phi_k(&p, 4).is_err());
        assert!(phi_k(&p, 0).is_err());
    }

    #[test]
    fn phi_set_composition_and_empty() {
        let p = perm("5317426");
        assert_eq!(phi_set(&p, &BTreeSet::new()).unwrap(), p);
        for a in 1..=7u32 {
            for b in 1..=7u32 {
                let stepwise = phi_set(
                    &phi_set(&p, &BTreeSet::from([a])).unwrap(),
                    &BTreeSet::from([b]),
                )
                .unwrap();
                let reversed = phi_set(
                    &phi_set(&p, &BTreeSet::from([b])).unwrap(),
                    &BTreeSet::from([a]),
                )
                .unwrap();
                assert_eq!(stepwise, reversed);
                if a == b {
                    assert_eq!(stepwise, p); // involution
                } else {
                    assert_eq!(phi_set(&p, &BTreeSet::from([a, b])).unwrap(), stepwise);
                }
            }
        }
    }

    #[test]
    fn phi_involution_and_stat_preservation_exhaustive() {
        for n in 1..=5 {
            for p in enumerate(n, PermSet::All) {
                for k in 1..=n as u32 {
                    let q = phi_k(&p, k).unwrap();
                    assert_eq!(phi_k(&q, k).unwrap(), p);
                    assert_eq!(p.stat(Stat::Pk), q.stat(Stat::Pk));
                    assert_eq!(p.stat(Stat::Dbl), q.stat(Stat::Dbl));
                }
            }
        }
    }

    #[test]
    fn orbit_size_is_two_to_the_dbl() {
        // The orbit of a permutation under all phi_S has size 2^dbl; for
        // 213 (one double ascent, one double descent) that is 4.
        for n in 1..=6 {
            for p in enumerate(n, PermSet::All) {
                let mut orbit = BTreeSet::new();
                let mut frontier = vec![p.clone()];
                while let Some(q) = frontier.pop() {
                    if !orbit.insert(q.clone()) {
                        continue;
                    }
                    for k in 1..=n as u32 {
                        frontier.push(phi_k(&q, k).unwrap());
                    }
                }
                assert_eq!(orbit.len(), 1 << p.stat(Stat::Dbl), "orbit of {p}");
            }
        }
        let p = perm("213");
        assert_eq!(p.stat(Stat::Dbl), 2);
    }

    #[test]
    fn big_phi_worked_example_round_trip() {
        let colored: ColoredPerm = "7r 2 6 5b 3 9 8r 4b 1".parse().unwrap();
        assert_eq!(big_phi(&colored), perm("265379418"));
        assert_eq!(big_phi_inv(&perm("265379418")), colored);
        assert_eq!(colored.to_string(), "7r 2 6 5b 3 9 8r 4b 1");
    }

    #[test]
    fn big_phi_identity_on_descentless_bases() {
        // An odd-length alternating base has no double descents at all, so
        // there is nothing to hop.
        let c = ColoredPerm::new(perm("231"), BTreeMap::new()).unwrap();
        assert_eq!(big_phi(&c), perm("231"));
    }

    #[test]
    fn colored_perm_validation() {
        assert!(ColoredPerm::new(perm("123"), BTreeMap::new()).is_err()); // double ascents
        assert!(ColoredPerm::new(perm("321"), BTreeMap::new()).is_err()); // uncolored ddes
        assert!(ColoredDerangement::new(perm("132"), BTreeMap::new()).is_err()); // fixed point
    }

    #[test]
    fn big_phi_bijection_exhaustive() {
        for n in 1..=5 {
            let colored = colored_perms(n);
            let mut images = BTreeSet::new();
            for c in &colored {
                let image = big_phi(c);
                assert_eq!(c.base().stat(Stat::Pk), image.stat(Stat::Pk));
                assert_eq!(c.base().stat(Stat::Dbl), image.stat(Stat::Dbl));
                assert_eq!(&big_phi_inv(&image), c);
                images.insert(image);
            }
            let total: usize = enumerate(n, PermSet::All).count();
            assert_eq!(colored.len(), total);
            assert_eq!(images.len(), total);
        }
    }

    #[test]
    fn foata_examples() {
        let p = perm("649237185");
        assert_eq!(p.cycle_string(), "(42)(716)(8)(953)");
        assert_eq!(foata_o(&p), perm("427168953"));
        assert_eq!(foata_o_inv(&perm("427168953")), p);
        assert_eq!(foata_o(&Permutation::identity(3)), perm("123"));

        assert_eq!(foata_o_prime(&p), perm("839524167"));
        assert_eq!(foata_o_prime_inv(&perm("839524167")), p);
        assert_eq!(foata_o_prime(&Permutation::identity(2)), perm("21"));
    }

    #[test]
    fn foata_round_trips_exhaustive() {
        for n in 0..=6 {
            for p in enumerate(n, PermSet::All) {
                assert_eq!(foata_o_inv(&foata_o(&p)), p);
                assert_eq!(foata_o_prime_inv(&foata_o_prime(&p)), p);
            }
        }
    }

    #[test]
    fn theta_examples() {
        assert_eq!(theta_k(&perm("231"), 2).unwrap(), perm("312"));
        assert!(theta_k(&perm("132"), 2).is_err());
        let d = perm("2143");
        assert_eq!(theta_set(&d, &BTreeSet::new()).unwrap(), d);
    }

    #[test]
    fn theta_involution_and_stat_preservation_exhaustive() {
        for n in 2..=5 {
            for d in enumerate(n, PermSet::Derangements) {
                for k in 1..=n as u32 {
                    let e = theta_k(&d, k).unwrap();
                    assert!(e.is_derangement());
                    assert_eq!(theta_k(&e, k).unwrap(), d);
                    assert_eq!(d.stat(Stat::Cpk), e.stat(Stat::Cpk));
                    assert_eq!(d.stat(Stat::Cdbl), e.stat(Stat::Cdbl));
                }
            }
        }
    }

    #[test]
    fn big_phi_ring_bijection_exhaustive() {
        for n in 2..=5 {
            let colored = colored_derangements(n);
            let mut images = BTreeSet::new();
            for c in &colored {
                let image = big_phi_ring(c);
                assert_eq!(c.base().stat(Stat::Cpk), image.stat(Stat::Cpk));
                assert_eq!(c.base().stat(Stat::Cdbl), image.stat(Stat::Cdbl));
                assert_eq!(&big_phi_ring_inv(&image).unwrap(), c);
                images.insert(image);
            }
            let total: usize = enumerate(n, PermSet::Derangements).count();
            assert_eq!(colored.len(), total, "n = {n}");
            assert_eq!(images.len(), total);
        }
        assert_eq!(colored_derangements(4).len(), 9);
    }

    #[test]
    fn big_phi_ring_identity_without_cyclic_double_descents() {
        let c = ColoredDerangement::new(perm("21"), BTreeMap::new()).unwrap();
        assert_eq!(big_phi_ring(&c), perm("21"));
    }

    #[test]
    fn short_run_proposition_small() {
        for n in 1..=6 {
            for p in enumerate(n, PermSet::All) {
                let mut special: BTreeSet<u32> =
                    p.fixed_points().iter().map(|&i| i as u32).collect();
                for (i, class) in p.classify_cyclic().iter().enumerate() {
                    if *class == Some(LetterClass::DoubleDescent) {
                        special.insert(p.word()[i]);
                    }
                }
                let short: BTreeSet<u32> =
                    foata_o_prime(&p).short_run_letters().into_iter().collect();
                assert_eq!(special, short, "pi = {p}");
            }
        }
    }
}
