//! Deterministic families of semigroups for sweeps and tests.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::semigroup::{gcd, NumericalSemigroup};

/// Every numerical semigroup with multiplicity `≤ max_e` and Frobenius number
/// `≤ max_f`, sorted by minimal generators. Includes `ℤ≥0`.
///
/// Semigroups of multiplicity `m` correspond to Kunz coordinates
/// `k₁, …, k_(m-1) ≥ 1` with `k_i + k_j ≥ k_(i+j)` for `i + j < m` and
/// `k_i + k_j + 1 ≥ k_(i+j-m)` for `i + j > m`; the Apéry set is
/// `{k_i·m + i}`.
pub fn kunz_corpus(max_e: i64, max_f: i64) -> Vec<NumericalSemigroup> {
    let mut out = Vec::new();
    if max_e >= 1 {
        out.push(NumericalSemigroup::naturals());
    }
    for m in 2..=max_e {
        let mut k = vec![0i64; m as usize];
        kunz_fill(m, max_f, 1, &mut k, &mut out);
    }
    out.sort_by(|a, b| a.minimal_generators().cmp(b.minimal_generators()));
    out
}

fn kunz_fill(m: i64, max_f: i64, t: usize, k: &mut Vec<i64>, out: &mut Vec<NumericalSemigroup>) {
    let mu = m as usize;
    if t == mu {
        let gens: Vec<i64> = std::iter::once(m)
            .chain((1..mu).map(|i| k[i] * m + i as i64))
            .collect();
        out.push(NumericalSemigroup::new(&gens).expect("contains m and every residue"));
        return;
    }
    let cap = (max_f + m - t as i64) / m;
    for value in 1..=cap {
        k[t] = value;
        if kunz_ok(mu, t, k) {
            kunz_fill(m, max_f, t + 1, k, out);
        }
    }
}

/// Checks the Kunz inequalities whose largest index is `t`.
fn kunz_ok(m: usize, t: usize, k: &[i64]) -> bool {
    for i in 1..=t {
        for j in i..=t {
            let s = i + j;
            if s < m {
                if s <= t && (j == t || s == t) && k[i] + k[j] < k[s] {
                    return false;
                }
            } else if s > m {
                let r = s - m;
                if r <= t && (j == t || r == t) && k[i] + k[j] + 1 < k[r] {
                    return false;
                }
            }
        }
    }
    true
}

/// All triples `a₁ < a₂ < a₃ ≤ max` that minimally generate a numerical
/// semigroup.
pub fn three_generated(max: i64) -> Vec<[i64; 3]> {
    let mut out = Vec::new();
    for a1 in 2..=max {
        for a2 in a1 + 1..=max {
            for a3 in a2 + 1..=max {
                if gcd(gcd(a1, a2), a3) != 1 {
                    continue;
                }
                if is_minimal_triple(a1, a2, a3) {
                    out.push([a1, a2, a3]);
                }
            }
        }
    }
    out
}

fn is_minimal_triple(a1: i64, a2: i64, a3: i64) -> bool {
    a2 % a1 != 0 && !(0..=a3 / a2).any(|y| (a3 - y * a2) % a1 == 0)
}

/// The `index`-th member of a fixed pseudo-random sequence of semigroups
/// with two to five generators in `[2, max_gen]`.
pub fn pseudo_random_semigroup(index: u64, max_gen: i64) -> NumericalSemigroup {
    let mut rng = ChaCha8Rng::seed_from_u64(index);
    loop {
        let count = rng.gen_range(2..=5);
        let gens: Vec<i64> = (0..count).map(|_| rng.gen_range(2..=max_gen)).collect();
        if gens.iter().fold(0, |g, &a| gcd(g, a)) == 1 {
            return NumericalSemigroup::new(&gens).expect("gcd 1");
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kunz_counts_by_multiplicity() {
        let corpus = kunz_corpus(4, 20);
        let count = |m: i64| corpus.iter().filter(|h| h.multiplicity() == m).count();
        assert_eq!(count(1), 1);
        // <2, 2k+1> with 2k - 1 ≤ 20.
        assert_eq!(count(2), 10);
        assert!(corpus.iter().all(|h| h.frobenius() <= 20 && h.multiplicity() <= 4));
        let mut gens: Vec<_> = corpus.iter().map(|h| h.minimal_generators().to_vec()).collect();
        gens.dedup();
        assert_eq!(gens.len(), corpus.len());
    }

    #[test]
    fn kunz_matches_gap_subsets() {
        // Semigroups of multiplicity 3 with f ≤ 8, by brute force over gap sets.
        let mut brute = 0;
        for mask in 0u32..(1 << 8) {
            let gaps: Vec<i64> = (1..=8).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            if let Ok(h) = NumericalSemigroup::from_gaps(&gaps) {
                if h.multiplicity() == 3 {
                    brute += 1;
                }
            }
        }
        let kunz = kunz_corpus(3, 8).iter().filter(|h| h.multiplicity() == 3).count();
        assert_eq!(kunz, brute);
    }

    #[test]
    fn triples() {
        let t = three_generated(8);
        assert!(t.contains(&[3, 7, 8]));
        assert!(t.contains(&[5, 6, 8]));
        assert!(!t.contains(&[3, 6, 7]));
        assert!(!t.contains(&[2, 3, 5]));
        assert!(!t.contains(&[4, 6, 8]));
        for [a, b, c] in t {
            assert_eq!(NumericalSemigroup::new(&[a, b, c]).unwrap().embedding_dimension(), 3);
        }
    }

    #[test]
    fn random_semigroups_are_reproducible() {
        for i in 0..20 {
            let h = pseudo_random_semigroup(i, 25);
            assert_eq!(h, pseudo_random_semigroup(i, 25));
            assert!(h.raw_generators().iter().all(|&a| (2..=25).contains(&a)));
        }
    }
}
