//! Integer partitions, Young diagrams and skew shapes.
//!
//! A [`Partition`] is stored without trailing zeros, so two partitions are
//! equal exactly when their positive parts agree. Rows and columns are
//! 0-indexed throughout; `part(i)` returns 0 past the last row.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros. Fails if the parts are
    /// not weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i` (0-indexed), or 0 when `i` is past the last row.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of positive parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width)
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// `λ_{m+1} ≤ n`, i.e. no box at row `m`, column `n` (0-indexed).
    pub fn is_hook(&self, m: usize, n: usize) -> bool {
        self.part(m) <= n
    }

    /// Diagram containment: `other[i] ≤ self[i]` for every row.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Boxes as `(row, column)` pairs in reading order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The skew diagram `outer / inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained { outer, inner });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn conjugate(&self) -> SkewShape {
        SkewShape {
            outer: self.outer.conjugate(),
            inner: self.inner.conjugate(),
        }
    }

    /// Boxes of the skew diagram in reading order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.outer.len())
            .flat_map(move |r| (self.inner.part(r)..self.outer.part(r)).map(move |c| (r, c)))
    }

    /// At most one box in every column (the empty diagram included).
    pub fn is_horizontal_strip(&self) -> bool {
        (1..self.outer.len()).all(|r| self.outer.part(r) <= self.inner.part(r - 1))
    }

    /// At most one box in every row (the empty diagram included).
    pub fn is_vertical_strip(&self) -> bool {
        (0..self.outer.len()).all(|r| self.outer.part(r) - self.inner.part(r) <= 1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StripKind {
    Horizontal,
    Vertical,
}

/// `λ_i ≥ μ_i ≥ λ_{i+1}` for every row.
pub fn interlaces(mu: &Partition, lambda: &Partition) -> bool {
    let rows = lambda.len().max(mu.len());
    (0..rows).all(|i| lambda.part(i) >= mu.part(i) && mu.part(i) >= lambda.part(i + 1))
}

/// All partitions of `total`, largest first in reverse-lexicographic order.
///
/// `max_length` bounds the number of parts; `hook = Some((m, n))` keeps only
/// `(m|n)`-hook partitions.
pub fn enumerate_partitions(
    total: usize,
    max_length: Option<usize>,
    hook: Option<(usize, usize)>,
) -> Vec<Partition> {
    fn go(
        remaining: usize,
        cap: usize,
        prefix: &mut Vec<usize>,
        max_length: Option<usize>,
        hook: Option<(usize, usize)>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        let row = prefix.len();
        if max_length.is_some_and(|l| row >= l) {
            return;
        }
        let mut cap = cap.min(remaining);
        if let Some((m, n)) = hook {
            if row >= m {
                cap = cap.min(n);
            }
        }
        for p in (1..=cap).rev() {
            prefix.push(p);
            go(remaining - p, p, prefix, max_length, hook, out);
            prefix.pop();
        }
    }

    let mut out = Vec::new();
    go(total, total, &mut Vec::new(), max_length, hook, &mut out);
    out
}

/// Every `(m|n)`-hook `σ ⊆ λ` such that `λ/σ` is a strip of the given kind,
/// the empty strip included. Reverse-lexicographic order.
pub fn strip_removals(lambda: &Partition, kind: StripKind, hook: (usize, usize)) -> Vec<Partition> {
    let rows = lambda.len();
    let mut out = Vec::new();
    let mut sigma = vec![0; rows];

    // Row i of σ ranges over [lo(i), λ_i], filled bottom-up so the choice
    // for row i+1 is known when bounding row i.
    fn go(
        i: usize,
        lambda: &Partition,
        kind: StripKind,
        hook: (usize, usize),
        sigma: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if i == 0 {
            if let Ok(p) = Partition::new(sigma.clone()) {
                if p.is_hook(hook.0, hook.1) {
                    out.push(p);
                }
            }
            return;
        }
        let row = i - 1;
        let below = sigma.get(row + 1).copied().unwrap_or(0);
        let lo = match kind {
            StripKind::Horizontal => lambda.part(row + 1),
            StripKind::Vertical => lambda.part(row).saturating_sub(1),
        }
        .max(below);
        for v in lo..=lambda.part(row) {
            sigma[row] = v;
            go(row, lambda, kind, hook, sigma, out);
        }
    }

    go(rows, lambda, kind, hook, &mut sigma, &mut out);
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn skew(outer: &[usize], inner: &[usize]) -> SkewShape {
        SkewShape::new(p(outer), p(inner)).unwrap()
    }

    #[test]
    fn normalizes_trailing_zeros() {
        assert_eq!(p(&[3, 1, 0, 0]), p(&[3, 1]));
        assert_eq!(p(&[0]).len(), 0);
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[3, 2, 1]).conjugate(), p(&[3, 2, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[4, 3, 3, 2, 2, 1]).conjugate(), p(&[6, 5, 3, 1]));
    }

    #[test]
    fn hook_examples() {
        assert!(p(&[3, 2, 1]).is_hook(2, 1));
        assert!(!p(&[2, 2]).is_hook(1, 1));
        assert!(p(&[4, 3, 3, 2, 2, 1]).is_hook(3, 2));
    }

    #[test]
    fn strip_examples() {
        assert!(skew(&[3, 2], &[2, 2]).is_horizontal_strip());
        assert!(!skew(&[3, 2], &[1]).is_horizontal_strip());
        assert!(skew(&[3, 2, 1], &[3, 2, 1]).is_horizontal_strip());

        assert!(skew(&[3, 2, 1], &[2, 1]).is_vertical_strip());
        assert!(!skew(&[2, 2], &[]).is_vertical_strip());
        assert!(skew(&[3, 2, 1], &[3, 2, 1]).is_vertical_strip());
    }

    #[test]
    fn skew_requires_containment() {
        assert!(SkewShape::new(p(&[2]), p(&[1, 1])).is_err());
        assert_eq!(skew(&[3, 2], &[1]).size(), 4);
    }

    #[test]
    fn interlacing_examples() {
        assert!(interlaces(&p(&[2, 1]), &p(&[3, 2])));
        assert!(interlaces(&p(&[3, 2]), &p(&[3, 2])));
        assert!(!interlaces(&p(&[1]), &p(&[3, 3])));
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(enumerate_partitions(2, None, None), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(enumerate_partitions(2, None, Some((1, 1))), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(enumerate_partitions(0, None, None), vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(5, Some(2), None).len(), 3);
        // (1|1)-hooks of 5 are exactly the hook shapes (a,1^b)
        assert_eq!(
            enumerate_partitions(5, None, Some((1, 1))),
            vec![p(&[5]), p(&[4, 1]), p(&[3, 1, 1]), p(&[2, 1, 1, 1]), p(&[1, 1, 1, 1, 1])]
        );
    }

    #[test]
    fn strip_removal_examples() {
        assert_eq!(
            strip_removals(&p(&[3, 2, 1]), StripKind::Vertical, (2, 0)),
            vec![p(&[3, 2]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1])]
        );
        for kind in [StripKind::Horizontal, StripKind::Vertical] {
            assert_eq!(strip_removals(&Partition::empty(), kind, (0, 0)), vec![Partition::empty()]);
        }
        assert_eq!(
            strip_removals(&p(&[1]), StripKind::Horizontal, (0, 1)),
            vec![p(&[1]), Partition::empty()]
        );
    }

    #[test]
    fn json_shape() {
        assert_eq!(serde_json::to_string(&p(&[3, 2, 1])).unwrap(), "[3,2,1]");
        assert_eq!(serde_json::to_string(&Partition::empty()).unwrap(), "[]");
        let back: Partition = serde_json::from_str("[2,2,0]").unwrap();
        assert_eq!(back, p(&[2, 2]));
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }
}
