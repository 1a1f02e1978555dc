//! Borel subalgebras of gl(m|n) up to conjugacy, as words in δ and ε.
//!
//! The i-th δ of a word stands for the unbarred letter `i` and the j-th ε for
//! the barred letter `j̄`. Reading the word left to right gives the total
//! order `<_b` on the alphabet, the offsets `d_i`, `e_j`, and the highest
//! weight `λ^b` attached to a hook partition.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partitions::Partition;

/// Largest `m + n` for which [`all_sequences`] will list every word.
pub const DEFAULT_RANK_CAP: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Delta,
    Epsilon,
}

impl Symbol {
    pub fn code(self) -> char {
        match self {
            Symbol::Delta => 'd',
            Symbol::Epsilon => 'e',
        }
    }
}

#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BorelSequence {
    word: Vec<Symbol>,
}

impl BorelSequence {
    pub fn new(word: Vec<Symbol>) -> Self {
        BorelSequence { word }
    }

    /// The standard Borel `δ^m ε^n` of upper triangular matrices.
    pub fn standard(m: usize, n: usize) -> Self {
        let mut word = vec![Symbol::Delta; m];
        word.extend(std::iter::repeat_n(Symbol::Epsilon, n));
        BorelSequence { word }
    }

    pub fn word(&self) -> &[Symbol] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Number of δ's.
    pub fn m(&self) -> usize {
        self.word.iter().filter(|&&s| s == Symbol::Delta).count()
    }

    /// Number of ε's.
    pub fn n(&self) -> usize {
        self.word.len() - self.m()
    }

    /// The first `len` symbols.
    pub fn prefix(&self, len: usize) -> BorelSequence {
        BorelSequence {
            word: self.word[..len].to_vec(),
        }
    }

    /// Drops the last symbol, returning the shorter word and what was removed.
    pub fn truncate(&self) -> Result<(BorelSequence, Symbol)> {
        let (&last, rest) = self.word.split_last().ok_or(Error::EmptyBorel)?;
        Ok((BorelSequence { word: rest.to_vec() }, last))
    }

    /// `d_i` = number of ε's before the i-th δ, `e_j` = number of δ's before
    /// the j-th ε.
    pub fn offsets(&self) -> (Vec<usize>, Vec<usize>) {
        let (mut d, mut e) = (Vec::new(), Vec::new());
        for &s in &self.word {
            match s {
                Symbol::Delta => d.push(e.len()),
                Symbol::Epsilon => e.push(d.len()),
            }
        }
        (d, e)
    }

    /// Run lengths `(μ_r, ν_r)` of the factorization
    /// `δ^{μ_1} ε^{ν_1} ⋯ δ^{μ_t} ε^{ν_t}` where only `μ_1` and `ν_t` may
    /// vanish. The empty word has no blocks.
    pub fn blocks(&self) -> Vec<(usize, usize)> {
        let mut blocks: Vec<(usize, usize)> = Vec::new();
        let mut prev = None;
        for &s in &self.word {
            match s {
                Symbol::Delta if prev != Some(Symbol::Delta) => blocks.push((1, 0)),
                Symbol::Delta => blocks.last_mut().unwrap().0 += 1,
                Symbol::Epsilon if prev.is_none() => blocks.push((0, 1)),
                Symbol::Epsilon => blocks.last_mut().unwrap().1 += 1,
            }
            prev = Some(s);
        }
        blocks
    }

    /// The alphabet `{1..m, 1̄..n̄}` listed in increasing `<_b` order.
    pub fn letters(&self) -> Vec<Letter> {
        let (mut i, mut j) = (0, 0);
        self.word
            .iter()
            .map(|s| match s {
                Symbol::Delta => {
                    i += 1;
                    Letter::Unbarred(i)
                }
                Symbol::Epsilon => {
                    j += 1;
                    Letter::Barred(j)
                }
            })
            .collect()
    }

    /// Position of `letter` in the word, i.e. its rank under `<_b`.
    pub fn rank(&self, letter: Letter) -> Option<usize> {
        let (target, idx) = match letter {
            Letter::Unbarred(i) => (Symbol::Delta, i),
            Letter::Barred(j) => (Symbol::Epsilon, j),
        };
        if idx == 0 {
            return None;
        }
        self.word
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == target)
            .nth(idx - 1)
            .map(|(pos, _)| pos)
    }

    pub fn check_letter(&self, letter: Letter) -> Result<usize> {
        self.rank(letter).ok_or_else(|| Error::LetterOutOfRange {
            letter: letter.to_string(),
            m: self.m(),
            n: self.n(),
        })
    }

    /// The total order `<_b`. Both letters must be valid for this word.
    pub fn compare(&self, a: Letter, c: Letter) -> Ordering {
        let ra = self.rank(a).expect("letter out of range");
        let rc = self.rank(c).expect("letter out of range");
        ra.cmp(&rc)
    }

    /// The highest weight `λ^b`: `p_i = max(λ_i − d_i, 0)` on `δ_i` and
    /// `q_j = max(λ'_j − e_j, 0)` on `ε_j`.
    pub fn frobenius_weight(&self, lambda: &Partition) -> Result<Weight> {
        let (m, n) = (self.m(), self.n());
        require_hook(lambda, m, n)?;
        let conj = lambda.conjugate();
        let (d, e) = self.offsets();
        let delta = d
            .iter()
            .enumerate()
            .map(|(i, &di)| lambda.part(i).saturating_sub(di) as i64)
            .collect();
        let epsilon = e
            .iter()
            .enumerate()
            .map(|(j, &ej)| conj.part(j).saturating_sub(ej) as i64)
            .collect();
        Ok(Weight { delta, epsilon })
    }
}

impl fmt::Display for BorelSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.word.iter().try_for_each(|s| write!(f, "{}", s.code()))
    }
}

impl fmt::Debug for BorelSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BorelSequence({self})")
    }
}

impl FromStr for BorelSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                'd' => Ok(Symbol::Delta),
                'e' => Ok(Symbol::Epsilon),
                _ => Err(Error::BadBorel(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()
            .map(BorelSequence::new)
    }
}

impl Serialize for BorelSequence {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BorelSequence {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All `C(m+n, m)` words with `m` δ's and `n` ε's, in lexicographic order
/// with δ before ε.
pub fn all_sequences(m: usize, n: usize) -> Result<Vec<BorelSequence>> {
    all_sequences_capped(m, n, DEFAULT_RANK_CAP)
}

pub fn all_sequences_capped(m: usize, n: usize, cap: usize) -> Result<Vec<BorelSequence>> {
    if m + n > cap {
        return Err(Error::TooLarge { rank: m + n, cap });
    }
    fn go(m: usize, n: usize, word: &mut Vec<Symbol>, out: &mut Vec<BorelSequence>) {
        if m == 0 && n == 0 {
            out.push(BorelSequence::new(word.clone()));
            return;
        }
        if m > 0 {
            word.push(Symbol::Delta);
            go(m - 1, n, word, out);
            word.pop();
        }
        if n > 0 {
            word.push(Symbol::Epsilon);
            go(m, n - 1, word, out);
            word.pop();
        }
    }
    let mut out = Vec::new();
    go(m, n, &mut Vec::with_capacity(m + n), &mut out);
    Ok(out)
}

/// `λ^♮`: the first `m` rows on the δ's and the conjugate of the remaining
/// rows on the ε's.
pub fn natural_weight(lambda: &Partition, m: usize, n: usize) -> Result<Weight> {
    require_hook(lambda, m, n)?;
    let delta = (0..m).map(|i| lambda.part(i) as i64).collect();
    let tail = Partition::new(lambda.parts().iter().skip(m).copied().collect())
        .expect("a tail of a partition is a partition")
        .conjugate();
    let epsilon = (0..n).map(|j| tail.part(j) as i64).collect();
    Ok(Weight { delta, epsilon })
}

pub(crate) fn require_hook(lambda: &Partition, m: usize, n: usize) -> Result<()> {
    if lambda.is_hook(m, n) {
        Ok(())
    } else {
        Err(Error::NotHook {
            lambda: lambda.clone(),
            m,
            n,
        })
    }
}

/// A letter of the alphabet `{1..m, 1̄..n̄}`; indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    Unbarred(usize),
    Barred(usize),
}

impl Letter {
    pub fn is_barred(self) -> bool {
        matches!(self, Letter::Barred(_))
    }

    pub fn index(self) -> usize {
        match self {
            Letter::Unbarred(i) | Letter::Barred(i) => i,
        }
    }

    /// JSON encoding: `"3"` or `"2b"`.
    pub fn code(self) -> String {
        match self {
            Letter::Unbarred(i) => i.to_string(),
            Letter::Barred(j) => format!("{j}b"),
        }
    }

    /// LaTeX for a `\young` cell.
    pub fn latex(self) -> String {
        match self {
            Letter::Unbarred(i) if i < 10 => i.to_string(),
            Letter::Unbarred(i) => format!("{{{i}}}"),
            Letter::Barred(j) => format!("\\bar{{{j}}}"),
        }
    }
}

/// Plain-text form: `3` or `2'`.
impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Unbarred(i) => write!(f, "{i}"),
            Letter::Barred(j) => write!(f, "{j}'"),
        }
    }
}

/// Accepts `3`, `2b` and `2'`.
impl FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadLetter(s.to_string());
        let (digits, barred) = match s.strip_suffix('b').or_else(|| s.strip_suffix('\'')) {
            Some(rest) => (rest, true),
            None => (s, false),
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let idx: usize = digits.parse().map_err(|_| bad())?;
        if idx == 0 {
            return Err(bad());
        }
        Ok(if barred {
            Letter::Barred(idx)
        } else {
            Letter::Unbarred(idx)
        })
    }
}

impl Serialize for Letter {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.code())
    }
}

impl<'de> Deserialize<'de> for Letter {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `Σ μ_i δ_i + Σ ν_j ε_j`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Weight {
    pub delta: Vec<i64>,
    pub epsilon: Vec<i64>,
}

impl Weight {
    pub fn zero(m: usize, n: usize) -> Self {
        Weight {
            delta: vec![0; m],
            epsilon: vec![0; n],
        }
    }

    /// Sum of all coefficients.
    pub fn total(&self) -> i64 {
        self.delta.iter().chain(&self.epsilon).sum()
    }

    pub fn is_polynomial(&self) -> bool {
        self.delta.iter().chain(&self.epsilon).all(|&c| c >= 0)
    }

    /// Coefficients listed in increasing `<_b` order of their letters.
    pub fn in_order_of(&self, b: &BorelSequence) -> Vec<i64> {
        b.letters()
            .into_iter()
            .map(|l| match l {
                Letter::Unbarred(i) => self.delta[i - 1],
                Letter::Barred(j) => self.epsilon[j - 1],
            })
            .collect()
    }

    /// `self − other` is a nonnegative combination of `b`-positive roots:
    /// equal totals and every partial sum along `<_b` at least as large.
    pub fn dominates(&self, other: &Weight, b: &BorelSequence) -> bool {
        if self.total() != other.total() {
            return false;
        }
        let (a, c) = (self.in_order_of(b), other.in_order_of(b));
        let (mut sa, mut sc) = (0, 0);
        a.iter().zip(&c).all(|(x, y)| {
            sa += x;
            sc += y;
            sa >= sc
        })
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        write!(f, "({} | {})", join(&self.delta), join(&self.epsilon))
    }
}
