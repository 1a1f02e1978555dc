//! Super Kostka numbers and exact checks of the counting identities that
//! follow from the branching rule: independence of the Borel, and the graded
//! dimension of `S(C^{m|n} ⊗ C^k)` under Howe duality.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::borel::{all_sequences, require_hook, BorelSequence};
use crate::branching::dimension;
use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, Partition};
use crate::tableaux::{Content, TableauSearch};

fn as_decimal<S: Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// Number of `b`-semistandard tableaux of shape `λ` and content `μ`.
pub fn super_kostka(b: &BorelSequence, lambda: &Partition, mu: &Content) -> Result<u64> {
    require_hook(lambda, b.m(), b.n())?;
    TableauSearch::new(b, lambda).content(Some(mu)).count()
}

/// Content → number of `b`-semistandard tableaux, for one shape.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KostkaTable {
    pub entries: BTreeMap<Content, u64>,
}

impl KostkaTable {
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn get(&self, content: &Content) -> u64 {
        self.entries.get(content).copied().unwrap_or(0)
    }
}

#[derive(Serialize)]
struct KostkaEntry<'a> {
    unbarred: &'a [usize],
    barred: &'a [usize],
    count: u64,
}

/// `[{"unbarred":[..],"barred":[..],"count":n}, ..]` in content order.
impl Serialize for KostkaTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.entries.len()))?;
        for (c, &count) in &self.entries {
            seq.serialize_element(&KostkaEntry {
                unbarred: &c.unbarred,
                barred: &c.barred,
                count,
            })?;
        }
        seq.end()
    }
}

pub fn kostka_table(b: &BorelSequence, lambda: &Partition) -> Result<KostkaTable> {
    kostka_table_with_limit(b, lambda, None)
}

/// As [`kostka_table`], aborting once the search has placed `max_nodes` letters.
pub fn kostka_table_with_limit(
    b: &BorelSequence,
    lambda: &Partition,
    max_nodes: Option<u64>,
) -> Result<KostkaTable> {
    require_hook(lambda, b.m(), b.n())?;
    let (m, n) = (b.m(), b.n());
    let mut table = KostkaTable::default();
    TableauSearch::new(b, lambda).max_nodes(max_nodes).for_each(|t| {
        let c = t.content(m, n).expect("enumerated letters are in range");
        *table.entries.entry(c).or_insert(0) += 1;
    })?;
    Ok(table)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KostkaDifference {
    pub borel: BorelSequence,
    pub other: BorelSequence,
    pub content: Content,
    pub count: u64,
    pub other_count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndependenceReport {
    pub ok: bool,
    pub m: usize,
    pub n: usize,
    pub lambda: Partition,
    pub borels: Vec<BorelSequence>,
    /// The table of the first Borel; equal to every other when `ok`.
    pub table: KostkaTable,
    pub difference: Option<KostkaDifference>,
}

/// Computes the Kostka table for every Borel of gl(m|n) and reports the
/// first content on which two of them disagree.
pub fn verify_borel_independence(m: usize, n: usize, lambda: &Partition) -> Result<IndependenceReport> {
    require_hook(lambda, m, n)?;
    let borels = all_sequences(m, n)?;
    let tables = borels
        .iter()
        .map(|b| kostka_table(b, lambda))
        .collect::<Result<Vec<_>>>()?;

    let reference = &tables[0];
    let mut difference = None;
    'outer: for (b, table) in borels.iter().zip(&tables).skip(1) {
        let keys = reference.entries.keys().chain(table.entries.keys());
        for c in keys {
            let (x, y) = (reference.get(c), table.get(c));
            if x != y {
                difference = Some(KostkaDifference {
                    borel: borels[0].clone(),
                    other: b.clone(),
                    content: c.clone(),
                    count: x,
                    other_count: y,
                });
                break 'outer;
            }
        }
    }
    Ok(IndependenceReport {
        ok: difference.is_none(),
        m,
        n,
        lambda: lambda.clone(),
        borels,
        table: tables.into_iter().next().expect("at least one Borel"),
        difference,
    })
}

/// Dimension of the gl(k)-module `L_k(λ)`: semistandard tableaux of shape
/// `λ` in `{1..k}`, zero when `λ` has more than `k` rows.
pub fn gl_dimension(lambda: &Partition, k: usize) -> BigUint {
    if lambda.len() > k {
        return BigUint::zero();
    }
    dimension(&BorelSequence::standard(k, 0), lambda).expect("l(λ) ≤ k makes λ a (k|0)-hook")
}

pub fn binomial(n: usize, r: usize) -> BigUint {
    if r > n {
        return BigUint::zero();
    }
    let r = r.min(n - r);
    (0..r).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Monomials of degree `a` in `vars` commuting variables.
fn multichoose(vars: usize, a: usize) -> BigUint {
    if vars == 0 {
        return if a == 0 { BigUint::one() } else { BigUint::zero() };
    }
    binomial(vars + a - 1, a)
}

/// Degree-`d` dimension of `S(C^{m|n} ⊗ C^k) = Sym(C^{mk}) ⊗ Λ(C^{nk})`.
pub fn supersymmetric_dimension(m: usize, n: usize, k: usize, d: usize) -> BigUint {
    (0..=d)
        .map(|a| multichoose(m * k, a) * binomial(n * k, d - a))
        .sum()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HoweReport {
    pub ok: bool,
    pub m: usize,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub borel: BorelSequence,
    #[serde(serialize_with = "as_decimal")]
    pub lhs: BigUint,
    #[serde(serialize_with = "as_decimal")]
    pub rhs: BigUint,
}

/// Compares `Σ_λ dim L(b, λ^b) · dim L_k(λ)` over `|λ| = d`, `l(λ) ≤ k`,
/// `λ_{m+1} ≤ n` with the degree-`d` dimension of the supersymmetric algebra.
pub fn verify_howe_dimension(
    m: usize,
    n: usize,
    k: usize,
    d: usize,
    b: &BorelSequence,
) -> Result<HoweReport> {
    if (b.m(), b.n()) != (m, n) {
        return Err(Error::BorelMismatch {
            m,
            n,
            got_m: b.m(),
            got_n: b.n(),
        });
    }
    let mut lhs = BigUint::zero();
    for lambda in enumerate_partitions(d, Some(k), Some((m, n))) {
        lhs += dimension(b, &lambda)? * gl_dimension(&lambda, k);
    }
    let rhs = supersymmetric_dimension(m, n, k, d);
    Ok(HoweReport {
        ok: lhs == rhs,
        m,
        n,
        k,
        d,
        borel: b.clone(),
        lhs,
        rhs,
    })
}
