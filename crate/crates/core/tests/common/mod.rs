//! Brute-force oracles shared by the integration tests. None of these go
//! through the search or branching code they are used to check.
#![allow(dead_code)]

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use supertab::{BorelSequence, Letter, Partition, Tableau};

pub fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

pub fn b(s: &str) -> BorelSequence {
    s.parse().unwrap()
}

/// All partitions with at most `max` boxes, by plain recursion.
pub fn partitions_up_to(max: usize) -> Vec<Partition> {
    fn go(remaining: usize, cap: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        out.push(Partition::new(prefix.clone()).unwrap());
        for part in 1..=cap.min(remaining) {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(max, max, &mut Vec::new(), &mut out);
    out
}

/// Every `σ ⊆ λ`, by filtering all small partitions on containment.
pub fn subpartitions(lambda: &Partition) -> Vec<Partition> {
    partitions_up_to(lambda.size())
        .into_iter()
        .filter(|s| (0..lambda.len().max(s.len())).all(|i| s.part(i) <= lambda.part(i)))
        .collect()
}

/// Every `(m, n)` with `m + n ≤ rank`.
pub fn ranks_up_to(rank: usize) -> Vec<(usize, usize)> {
    (0..=rank).flat_map(|r| (0..=r).map(move |m| (m, r - m))).collect()
}

/// All words in δ and ε with the given counts, built independently of the
/// crate's generator.
pub fn borels(m: usize, n: usize) -> Vec<BorelSequence> {
    let len = m + n;
    (0..1u32 << len)
        .filter(|mask| mask.count_ones() as usize == n)
        .map(|mask| {
            let s: String = (0..len)
                .map(|i| if mask >> (len - 1 - i) & 1 == 1 { 'e' } else { 'd' })
                .collect();
            b(&s)
        })
        .collect()
}

pub fn alphabet(m: usize, n: usize) -> Vec<Letter> {
    (1..=m)
        .map(Letter::Unbarred)
        .chain((1..=n).map(Letter::Barred))
        .collect()
}

/// Every filling of `λ` by letters of gl(m|n), with no conditions at all.
pub fn all_fillings(lambda: &Partition, m: usize, n: usize) -> Vec<Tableau> {
    let letters = alphabet(m, n);
    let cells = lambda.size();
    if letters.is_empty() {
        return if cells == 0 { vec![Tableau::empty()] } else { vec![] };
    }
    let total = letters.len().pow(cells as u32);
    (0..total)
        .map(|mut code| {
            let mut flat = Vec::with_capacity(cells);
            for _ in 0..cells {
                flat.push(letters[code % letters.len()]);
                code /= letters.len();
            }
            let mut it = flat.into_iter();
            let rows = lambda.parts().iter().map(|&len| it.by_ref().take(len).collect()).collect();
            Tableau::new(rows).unwrap()
        })
        .collect()
}

/// Literal block form of `<_b`: with `b = δ^{μ_1} ε^{ν_1} ⋯ δ^{μ_t} ε^{ν_t}`
/// and `ν_0 = 0`, `i < k̄` iff `i ≤ μ_1+…+μ_r` and `k > ν_0+…+ν_{r−1}` for
/// some `r`, and `k̄ < i` iff `i > μ_1+…+μ_r` and `k ≤ ν_0+…+ν_r` for some `r`.
pub fn literal_less(b: &BorelSequence, x: Letter, y: Letter) -> bool {
    let blocks = b.blocks();
    let mu_sum = |r: usize| blocks[..r].iter().map(|bl| bl.0).sum::<usize>();
    let nu_sum = |r: usize| blocks[..r].iter().map(|bl| bl.1).sum::<usize>();
    let t = blocks.len();
    match (x, y) {
        (Letter::Unbarred(i), Letter::Unbarred(j)) => i < j,
        (Letter::Barred(k), Letter::Barred(l)) => k < l,
        (Letter::Unbarred(i), Letter::Barred(k)) => {
            (1..=t).any(|r| i <= mu_sum(r) && k > nu_sum(r - 1))
        }
        (Letter::Barred(k), Letter::Unbarred(i)) => (1..=t).any(|r| i > mu_sum(r) && k <= nu_sum(r)),
    }
}

/// Classical semistandard tableaux of shape `λ` in `{1..k}`: column-strict,
/// row-weak, counted by brute force over all fillings.
pub fn ssyt_count(lambda: &Partition, k: usize) -> u64 {
    let cells: Vec<(usize, usize)> = lambda.cells().collect();
    fn go(cells: &[(usize, usize)], idx: usize, k: usize, grid: &mut Vec<Vec<usize>>) -> u64 {
        let Some(&(r, c)) = cells.get(idx) else {
            return 1;
        };
        let mut total = 0;
        for x in 1..=k {
            if c > 0 && grid[r][c - 1] > x {
                continue;
            }
            if r > 0 && grid[r - 1][c] >= x {
                continue;
            }
            grid[r][c] = x;
            total += go(cells, idx + 1, k, grid);
        }
        total
    }
    let mut grid: Vec<Vec<usize>> = lambda.parts().iter().map(|&l| vec![0; l]).collect();
    go(&cells, 0, k, &mut grid)
}

/// `∏_{x ∈ λ} (k + c(x)) / h(x)` in exact rationals.
pub fn hook_content(lambda: &Partition, k: usize) -> BigUint {
    let conj = lambda.conjugate();
    let mut acc = BigRational::from_integer(BigInt::from(1));
    for (r, c) in lambda.cells() {
        let content = k as i64 + c as i64 - r as i64;
        let hook = (lambda.part(r) - c) + (conj.part(c) - r) - 1;
        acc *= BigRational::new(BigInt::from(content), BigInt::from(hook));
    }
    assert!(acc.is_integer());
    let value = acc.to_integer();
    if value.sign() == num_bigint::Sign::Minus {
        panic!("negative dimension");
    }
    value.to_biguint().unwrap()
}
