mod common;

use common::{hook_content, partitions_up_to, ranks_up_to};
use num_bigint::BigUint;
use supertab::borel::all_sequences;
use supertab::lr::{lr_coefficient, pieri_column, pieri_row, verify_branch_multiplicities};
use supertab::partitions::enumerate_partitions;
use supertab::verify::gl_dimension;
use supertab::Partition;

fn triples(max: usize) -> Vec<(Partition, Partition, Partition)> {
    let all = partitions_up_to(max);
    let mut out = Vec::new();
    for lambda in &all {
        for sigma in all.iter().filter(|s| lambda.contains(s)) {
            for mu in enumerate_partitions(lambda.size() - sigma.size(), None, None) {
                out.push((sigma.clone(), mu, lambda.clone()));
            }
        }
    }
    out
}

#[test]
fn lr_symmetry_and_conjugation() {
    for (sigma, mu, lambda) in triples(8) {
        let c = lr_coefficient(&sigma, &mu, &lambda);
        assert_eq!(c, lr_coefficient(&mu, &sigma, &lambda), "{sigma} {mu} {lambda}");
        assert_eq!(
            c,
            lr_coefficient(&sigma.conjugate(), &mu.conjugate(), &lambda.conjugate()),
            "{sigma} {mu} {lambda}"
        );
    }
}

#[test]
fn lr_vanishes_off_size() {
    let all = partitions_up_to(5);
    for lambda in &all {
        for sigma in &all {
            for mu in &all {
                if sigma.size() + mu.size() != lambda.size() {
                    assert_eq!(lr_coefficient(sigma, mu, lambda), 0);
                }
            }
        }
    }
}

#[test]
fn pieri_agreement() {
    let all = partitions_up_to(8);
    for lambda in &all {
        for sigma in &all {
            for k in 0..=8 {
                let row = Partition::new(vec![k]).unwrap();
                let col = Partition::new(vec![1; k]).unwrap();
                assert_eq!(lr_coefficient(sigma, &row, lambda), pieri_row(sigma, k, lambda));
                assert_eq!(lr_coefficient(sigma, &col, lambda), pieri_column(sigma, k, lambda));
            }
        }
    }
}

#[test]
fn tensor_product_dimensions() {
    // s_σ(1^k) s_μ(1^k) = Σ_λ c^λ_{σμ} s_λ(1^k)
    for k in 0..=3 {
        for sigma in partitions_up_to(4) {
            for mu in partitions_up_to(4) {
                let lhs = gl_dimension(&sigma, k) * gl_dimension(&mu, k);
                let rhs: BigUint = enumerate_partitions(sigma.size() + mu.size(), None, None)
                    .iter()
                    .map(|lambda| gl_dimension(lambda, k) * lr_coefficient(&sigma, &mu, lambda))
                    .sum();
                assert_eq!(lhs, rhs, "k={k} {sigma} {mu}");
                // and against the hook-content formula
                if sigma.len() <= k && mu.len() <= k {
                    assert_eq!(lhs, hook_content(&sigma, k) * hook_content(&mu, k));
                }
            }
        }
    }
}

#[test]
fn branch_multiplicities_are_pieri_sums() {
    for (m, n) in ranks_up_to(4) {
        for b in all_sequences(m, n).unwrap().into_iter().filter(|b| !b.is_empty()) {
            for lambda in partitions_up_to(6).into_iter().filter(|l| l.is_hook(m, n)) {
                let report = verify_branch_multiplicities(&b, &lambda).unwrap();
                assert!(report.ok, "{b} {lambda}: {:?}", report.mismatches);
                assert!(report.terms.iter().all(|&(_, e, g)| e == 1 && g == 1));
            }
        }
    }
}
