//! Littlewood-Richardson coefficients by direct enumeration of LR fillings,
//! and the check that one-step branching multiplicities are the Pieri sums
//! `Σ_μ c^λ_{σμ}` over one-row or one-column `μ`.

use serde::Serialize;

use crate::borel::{require_hook, BorelSequence, Symbol};
use crate::branching::branch;
use crate::error::Result;
use crate::partitions::{enumerate_partitions, Partition, SkewShape};

/// `c^λ_{σμ}`: semistandard fillings of `λ/σ` with content `μ` whose reverse
/// reading word (right to left, top to bottom) is a lattice word.
pub fn lr_coefficient(sigma: &Partition, mu: &Partition, lambda: &Partition) -> u64 {
    if sigma.size() + mu.size() != lambda.size() || !lambda.contains(sigma) {
        return 0;
    }
    let skew = SkewShape::new(lambda.clone(), sigma.clone()).expect("containment checked");
    // reverse reading order
    let mut cells: Vec<(usize, usize)> = skew.cells().collect();
    cells.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));

    let mut filler = LrFiller {
        skew: &skew,
        content: mu.parts(),
        grid: lambda.parts().iter().map(|&l| vec![0; l]).collect(),
        used: vec![0; mu.len()],
        count: 0,
    };
    filler.fill(&cells, 0);
    filler.count
}

struct LrFiller<'a> {
    skew: &'a SkewShape,
    content: &'a [usize],
    // 1-based entries; 0 marks a box of the inner shape
    grid: Vec<Vec<usize>>,
    used: Vec<usize>,
    count: u64,
}

impl LrFiller<'_> {
    fn fill(&mut self, cells: &[(usize, usize)], k: usize) {
        let Some(&(r, c)) = cells.get(k) else {
            self.count += 1;
            return;
        };
        let inner = self.skew.inner();
        // right neighbour is already filled; entries weakly increase along rows
        let hi = if c + 1 < self.skew.outer().part(r) {
            self.grid[r][c + 1]
        } else {
            self.content.len()
        };
        // box above, if in the skew shape, must be strictly smaller
        let lo = if r > 0 && c >= inner.part(r - 1) {
            self.grid[r - 1][c] + 1
        } else {
            1
        };
        for x in lo..=hi {
            if self.used[x - 1] == self.content[x - 1] {
                continue;
            }
            if x > 1 && self.used[x - 1] + 1 > self.used[x - 2] {
                continue;
            }
            self.used[x - 1] += 1;
            self.grid[r][c] = x;
            self.fill(cells, k + 1);
            self.used[x - 1] -= 1;
        }
    }
}

/// `c^λ_{σ,(n)}`: 1 exactly when `λ/σ` is a horizontal strip of `n` boxes.
pub fn pieri_row(sigma: &Partition, n: usize, lambda: &Partition) -> u64 {
    match SkewShape::new(lambda.clone(), sigma.clone()) {
        Ok(skew) if skew.size() == n && skew.is_horizontal_strip() => 1,
        _ => 0,
    }
}

/// `c^λ_{σ,(1^n)}`: 1 exactly when `λ'/σ'` is a horizontal strip of `n` boxes.
pub fn pieri_column(sigma: &Partition, n: usize, lambda: &Partition) -> u64 {
    pieri_row(&sigma.conjugate(), n, &lambda.conjugate())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplicityMismatch {
    pub sigma: Partition,
    pub expected: u64,
    pub got: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplicityReport {
    pub ok: bool,
    pub mismatches: Vec<MultiplicityMismatch>,
    /// Every `σ` with a nonzero multiplicity on either side, as
    /// `(σ, LR sum, occurrences in the branching)`.
    #[serde(skip)]
    pub terms: Vec<(Partition, u64, u64)>,
}

/// Compares `branch(b, λ)` against `Σ_μ c^λ_{σμ}` for every `(m̂|n̂)`-hook `σ`
/// with `|σ| ≤ |λ|`, where `μ = (s)` when a δ is dropped and `μ = (1^s)` when
/// an ε is dropped.
pub fn verify_branch_multiplicities(b: &BorelSequence, lambda: &Partition) -> Result<MultiplicityReport> {
    let (rest, removed) = b.truncate()?;
    require_hook(lambda, b.m(), b.n())?;
    let branched = branch(b, lambda)?;

    let mut mismatches = Vec::new();
    let mut terms = Vec::new();
    for size in 0..=lambda.size() {
        for sigma in enumerate_partitions(size, None, Some((rest.m(), rest.n()))) {
            let expected: u64 = (0..=lambda.size() - size)
                .map(|s| {
                    let mu = match removed {
                        Symbol::Delta => vec![s],
                        Symbol::Epsilon => vec![1; s],
                    };
                    lr_coefficient(&sigma, &Partition::new(mu).expect("row or column"), lambda)
                })
                .sum();
            let got = branched.iter().filter(|&s| *s == sigma).count() as u64;
            if expected != 0 || got != 0 {
                terms.push((sigma.clone(), expected, got));
            }
            if expected != got {
                mismatches.push(MultiplicityMismatch { sigma, expected, got });
            }
        }
    }
    Ok(MultiplicityReport {
        ok: mismatches.is_empty(),
        mismatches,
        terms,
    })
}
