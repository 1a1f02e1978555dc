//! Restriction from gl(m|n) to gl(m̂|n̂), where `b̂` drops the last symbol of
//! `b`, and the Gelfand-Tsetlin chains obtained by iterating it.
//!
//! Dropping a δ removes horizontal strips from `λ`, dropping an ε removes
//! vertical strips; in both cases the smaller partition must be a hook
//! partition for the smaller superalgebra and every summand occurs once.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::borel::{require_hook, BorelSequence, Letter, Symbol};
use crate::error::{Error, Result};
use crate::partitions::{strip_removals, Partition, SkewShape, StripKind};
use crate::tableaux::Tableau;

fn strip_kind(removed: Symbol) -> StripKind {
    match removed {
        Symbol::Delta => StripKind::Horizontal,
        Symbol::Epsilon => StripKind::Vertical,
    }
}

/// The highest weights `σ` of the gl(m̂|n̂)-summands of `L(b, λ^b)`, in
/// reverse-lexicographic order.
pub fn branch(b: &BorelSequence, lambda: &Partition) -> Result<Vec<Partition>> {
    let (rest, removed) = b.truncate()?;
    require_hook(lambda, b.m(), b.n())?;
    Ok(strip_removals(lambda, strip_kind(removed), (rest.m(), rest.n())))
}

/// One stage `(m_k, n_k, λ^k)` of a branching chain.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChainStep {
    pub m: usize,
    pub n: usize,
    pub lambda: Partition,
}

/// A Gelfand-Tsetlin chain: one stage per prefix of `b`, from the full word
/// down to the empty word with the empty partition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BranchingChain {
    pub steps: Vec<ChainStep>,
}

impl BranchingChain {
    pub fn top(&self) -> Option<&Partition> {
        self.steps.first().map(|s| &s.lambda)
    }

    /// Checks the stage counts, hook conditions and strip conditions against `b`.
    pub fn validate(&self, b: &BorelSequence) -> Result<()> {
        let invalid = |msg: String| Err(Error::InvalidChain(msg));
        if self.steps.len() != b.len() + 1 {
            return invalid(format!(
                "expected {} stages for {b}, found {}",
                b.len() + 1,
                self.steps.len()
            ));
        }
        for (k, step) in self.steps.iter().enumerate() {
            let prefix = b.prefix(b.len() - k);
            if (step.m, step.n) != (prefix.m(), prefix.n()) {
                return invalid(format!(
                    "stage {} has (m,n) = ({},{}), expected ({},{})",
                    k + 1,
                    step.m,
                    step.n,
                    prefix.m(),
                    prefix.n()
                ));
            }
            if !step.lambda.is_hook(step.m, step.n) {
                return invalid(format!(
                    "stage {}: {} is not a ({}|{})-hook partition",
                    k + 1,
                    step.lambda,
                    step.m,
                    step.n
                ));
            }
        }
        for (k, pair) in self.steps.windows(2).enumerate() {
            let removed = b.word()[b.len() - 1 - k];
            let skew = SkewShape::new(pair[0].lambda.clone(), pair[1].lambda.clone())
                .map_err(|_| {
                    Error::InvalidChain(format!("stage {} does not contain stage {}", k + 1, k + 2))
                })?;
            let ok = match strip_kind(removed) {
                StripKind::Horizontal => skew.is_horizontal_strip(),
                StripKind::Vertical => skew.is_vertical_strip(),
            };
            if !ok {
                return invalid(format!(
                    "{}/{} is not a {:?} strip",
                    pair[0].lambda,
                    pair[1].lambda,
                    strip_kind(removed)
                ));
            }
        }
        Ok(())
    }
}

impl fmt::Display for BranchingChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, s) in self.steps.iter().enumerate() {
            if k > 0 {
                write!(f, " -> ")?;
            }
            write!(f, "({},{},{})", s.m, s.n, s.lambda)?;
        }
        Ok(())
    }
}

/// Every chain obtained by branching along successive truncations of `b`.
pub fn chains(b: &BorelSequence, lambda: &Partition) -> Result<Vec<BranchingChain>> {
    require_hook(lambda, b.m(), b.n())?;
    let mut out = Vec::new();
    let mut stack = Vec::with_capacity(b.len() + 1);
    collect_chains(b, b.len(), lambda, &mut stack, &mut out);
    Ok(out)
}

fn collect_chains(
    b: &BorelSequence,
    len: usize,
    lambda: &Partition,
    stack: &mut Vec<ChainStep>,
    out: &mut Vec<BranchingChain>,
) {
    let prefix = b.prefix(len);
    stack.push(ChainStep {
        m: prefix.m(),
        n: prefix.n(),
        lambda: lambda.clone(),
    });
    if len == 0 {
        out.push(BranchingChain {
            steps: stack.clone(),
        });
    } else {
        let sigmas = branch(&prefix, lambda).expect("chain stages are hook partitions");
        for sigma in &sigmas {
            collect_chains(b, len - 1, sigma, stack, out);
        }
    }
    stack.pop();
}

/// Fills each box of `λ^k/λ^{k+1}` with the k-th largest letter under `<_b`.
pub fn chain_to_tableau(b: &BorelSequence, chain: &BranchingChain) -> Result<Tableau> {
    chain.validate(b)?;
    let letters = b.letters();
    let top = chain.top().expect("validated chains are nonempty");
    let mut rows: Vec<Vec<Option<Letter>>> = top.parts().iter().map(|&l| vec![None; l]).collect();
    for (k, pair) in chain.steps.windows(2).enumerate() {
        let letter = letters[letters.len() - 1 - k];
        let skew = SkewShape::new(pair[0].lambda.clone(), pair[1].lambda.clone())?;
        for (r, c) in skew.cells() {
            rows[r][c] = Some(letter);
        }
    }
    let rows = rows
        .into_iter()
        .map(|row| row.into_iter().map(|x| x.expect("every box is covered")).collect())
        .collect();
    Tableau::new(rows)
}

/// Strips the largest letter, then the next largest, recording the shapes.
pub fn tableau_to_chain(b: &BorelSequence, t: &Tableau) -> Result<BranchingChain> {
    if !t.is_b_semistandard(b) {
        return Err(Error::NotSemistandard(b.to_string()));
    }
    let ranks: Vec<Vec<usize>> = t
        .rows()
        .iter()
        .map(|row| row.iter().map(|&l| b.rank(l).expect("checked above")).collect())
        .collect();
    let steps = (0..=b.len())
        .map(|k| {
            // stage k keeps letters of rank < len - k
            let bound = b.len() - k;
            let parts = ranks.iter().map(|row| row.iter().take_while(|&&x| x < bound).count()).collect();
            let prefix = b.prefix(bound);
            ChainStep {
                m: prefix.m(),
                n: prefix.n(),
                lambda: Partition::new(parts).expect("row prefixes of a tableau form a partition"),
            }
        })
        .collect();
    Ok(BranchingChain { steps })
}

/// `dim L(b, λ^b)`, the number of chains, by memoized recursion over
/// `(prefix length, σ)` without listing the chains.
pub fn dimension(b: &BorelSequence, lambda: &Partition) -> Result<BigUint> {
    require_hook(lambda, b.m(), b.n())?;
    let mut memo = HashMap::new();
    Ok(dimension_memo(b, b.len(), lambda, &mut memo))
}

fn dimension_memo(
    b: &BorelSequence,
    len: usize,
    lambda: &Partition,
    memo: &mut HashMap<(usize, Partition), BigUint>,
) -> BigUint {
    if len == 0 {
        return if lambda.is_empty() { BigUint::one() } else { BigUint::zero() };
    }
    if let Some(v) = memo.get(&(len, lambda.clone())) {
        return v.clone();
    }
    let prefix = b.prefix(len);
    let mut total = BigUint::zero();
    for sigma in branch(&prefix, lambda).expect("hook partitions branch") {
        total += dimension_memo(b, len - 1, &sigma, memo);
    }
    memo.insert((len, lambda.clone()), total.clone());
    total
}
