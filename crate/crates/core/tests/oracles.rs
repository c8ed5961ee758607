//! Library output against naive reimplementations that share no code with it.

use ggl_core::corpus::pseudo_random_semigroup;
use ggl_core::{NumericalSemigroup, RelativeIdeal};
use proptest::prelude::*;

/// Membership table on `[0, bound]` by the coin-problem recursion.
fn coin_table(gens: &[i64], bound: i64) -> Vec<bool> {
    let mut mem = vec![false; bound as usize + 1];
    mem[0] = true;
    for z in 1..=bound {
        mem[z as usize] = gens.iter().any(|&a| a <= z && mem[(z - a) as usize]);
    }
    mem
}

/// A semigroup known only through its table, with every integer above the
/// table assumed to be a member (the table is sized well past `f`).
struct Naive {
    table: Vec<bool>,
}

impl Naive {
    fn new(gens: &[i64]) -> Self {
        let lo = *gens.iter().min().unwrap();
        let hi = *gens.iter().max().unwrap();
        // Any gcd-1 set has f < 2·min·max.
        Naive {
            table: coin_table(gens, 2 * lo * hi + hi),
        }
    }

    fn has(&self, z: i64) -> bool {
        z >= 0 && (z as usize >= self.table.len() || self.table[z as usize])
    }

    fn frobenius(&self) -> i64 {
        (0..self.table.len() as i64).rev().find(|&z| !self.has(z)).unwrap_or(-1)
    }

    /// Gaps that are maximal for `z ≤ w ⇔ w - z ∈ H`.
    fn pseudo_frobenius(&self) -> Vec<i64> {
        let f = self.frobenius();
        if f < 0 {
            return vec![-1];
        }
        let gaps: Vec<i64> = (1..=f).filter(|&z| !self.has(z)).collect();
        gaps.iter()
            .copied()
            .filter(|&z| !gaps.iter().any(|&w| w != z && self.has(w - z)))
            .collect()
    }

    fn apery(&self, e: i64) -> Vec<i64> {
        (0..e)
            .map(|r| (0..).map(|k| r + k * e).find(|&z| self.has(z)).unwrap())
            .collect()
    }
}

fn random_ideal_gens(seed: u64, lo: i64, hi: i64) -> Vec<i64> {
    // Small LCG so the ideal choice is independent of the library's RNG.
    let mut x = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
    let mut next = || {
        x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (x >> 33) as i64
    };
    let count = 1 + next() % 4;
    (0..count).map(|_| lo + next() % (hi - lo + 1)).collect()
}

#[test]
fn random_semigroups_against_naive_tables() {
    let mut mismatches = Vec::new();
    for index in 0..200u64 {
        let h = pseudo_random_semigroup(index, 25);
        let naive = Naive::new(h.raw_generators());
        let f = naive.frobenius();
        if h.frobenius() != f {
            mismatches.push(format!("{h}: frobenius"));
        }
        if (0..=4 * f.max(1)).any(|z| h.contains(z) != naive.has(z)) || h.contains(-1) {
            mismatches.push(format!("{h}: membership"));
        }
        if h.pseudo_frobenius() != naive.pseudo_frobenius() {
            mismatches.push(format!("{h}: PF"));
        }
        let e = h.multiplicity();
        if h.apery_set(e).unwrap() != naive.apery(e) {
            mismatches.push(format!("{h}: Apéry"));
        }
        let g = h.minimal_generators()[h.embedding_dimension() - 1];
        if h.apery_set(g).unwrap() != naive.apery(g) {
            mismatches.push(format!("{h}: Apéry at {g}"));
        }

        let i_gens = random_ideal_gens(index, -5, 20);
        let j_gens = random_ideal_gens(index + 1000, -5, 20);
        let i = RelativeIdeal::from_generators(&h, &i_gens).unwrap();
        let j = RelativeIdeal::from_generators(&h, &j_gens).unwrap();
        let colon = i.colon(&j).unwrap();
        // Generators lie in [-5, 20], so J above 21 + f and I above 21 + f
        // are full; the windows below cover both with room to spare.
        let span = 4 * f.max(1) + 60;
        let in_i = |z: i64| i_gens.iter().any(|&a| naive.has(z - a));
        let j_members: Vec<i64> = (-10..span)
            .filter(|&y| j_gens.iter().any(|&a| naive.has(y - a)))
            .collect();
        for z in -span..span {
            let expected = j_members.iter().all(|&y| in_i(z + y));
            if colon.contains(z) != expected {
                mismatches.push(format!("{h}: colon {i_gens:?}:{j_gens:?} at {z}"));
                break;
            }
        }
    }
    assert!(mismatches.is_empty(), "{mismatches:#?}");
}

#[test]
fn overrings_against_gap_subsets() {
    for gens in [&[4, 5, 7][..], &[3, 8, 10], &[5, 6, 7, 8], &[4, 6, 9]] {
        let h = NumericalSemigroup::new(gens).unwrap();
        let gaps = h.gaps().to_vec();
        let mut expected = Vec::new();
        for mask in 0u64..(1 << gaps.len()) {
            let kept: Vec<i64> = (0..gaps.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| gaps[i])
                .collect();
            let member = |z: i64| z >= 0 && !kept.contains(&z);
            let closed = (0..=h.frobenius() + 1)
                .all(|x| !member(x) || (0..=h.frobenius() + 1).all(|y| !member(y) || member(x + y)));
            if closed {
                expected.push(kept);
            }
        }
        let mut got: Vec<Vec<i64>> = h.overrings().iter().map(|t| t.gaps().to_vec()).collect();
        got.sort();
        expected.sort();
        assert_eq!(got, expected, "{h}");
    }
}

fn semigroup_strategy(max_gen: i64) -> impl Strategy<Value = NumericalSemigroup> {
    prop::collection::vec(2..=max_gen, 2..=5)
        .prop_filter_map("gcd must be 1", |gens| NumericalSemigroup::new(&gens).ok())
}

fn ideal_strategy(h: NumericalSemigroup) -> impl Strategy<Value = RelativeIdeal> {
    prop::collection::vec(-6i64..25, 1..=4)
        .prop_map(move |gens| RelativeIdeal::from_generators(&h, &gens).unwrap())
}

fn semigroup_and_ideals() -> impl Strategy<Value = (NumericalSemigroup, RelativeIdeal, RelativeIdeal, RelativeIdeal)> {
    semigroup_strategy(20).prop_flat_map(|h| {
        (
            Just(h.clone()),
            ideal_strategy(h.clone()),
            ideal_strategy(h.clone()),
            ideal_strategy(h),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn canonical_duality_of_lengths((h, i, x, _) in semigroup_and_ideals()) {
        // J = I·X' with X' = X shifted into H, so J ⊆ I.
        let shift = (h.conductor() - x.min_element()).max(0);
        let j = i.product(&x.shift(shift)).unwrap();
        let k = ggl_core::classify::canonical_ideal(&h);
        let lhs = i.length_quotient(&j).unwrap();
        let rhs = k.colon(&j).unwrap().length_quotient(&k.colon(&i).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn colon_and_product_laws((h, i, j, l) in semigroup_and_ideals()) {
        let r = RelativeIdeal::ring(&h);
        prop_assert!(r.is_subset(&i.colon(&i).unwrap()));
        prop_assert!(i.is_subset(&r.colon(&r.colon(&i).unwrap()).unwrap()));
        let left = i.product(&j.sum(&l).unwrap()).unwrap();
        let right = i.product(&j).unwrap().sum(&i.product(&l).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(i.product(&j).unwrap(), j.product(&i).unwrap());
        let ij_l = i.product(&j).unwrap().product(&l).unwrap();
        let i_jl = i.product(&j.product(&l).unwrap()).unwrap();
        prop_assert_eq!(ij_l, i_jl);
        // (I:J)J ⊆ I
        prop_assert!(i.colon(&j).unwrap().product(&j).unwrap().is_subset(&i));
    }

    #[test]
    fn principal_colength_is_valuation((h, i, _, _) in semigroup_and_ideals(), k in 0i64..40) {
        // k + I ⊆ I needs k ∈ H; move k up to the next element.
        let k = (k..).find(|&z| h.contains(z)).unwrap();
        prop_assert_eq!(i.length_quotient(&i.shift(k)).unwrap(), k as usize);
    }

    #[test]
    fn closure_of_closure(h in semigroup_strategy(20)) {
        let k = ggl_core::classify::canonical_ideal(&h);
        let (s, _) = k.ring_closure().unwrap();
        let (again, rn) = s.ring_closure().unwrap();
        prop_assert_eq!(again, s.clone());
        prop_assert_eq!(rn, 1);
    }

    #[test]
    fn semigroup_structure(h in semigroup_strategy(30)) {
        let f = h.frobenius();
        prop_assert!(f < h.multiplicity() * h.genus() as i64 || h.is_naturals());
        prop_assert!((f + 1..f + 50).all(|z| h.contains(z)));
        let pairing = (0..=f).all(|z| h.contains(z) != h.contains(f - z));
        prop_assert_eq!(h.is_symmetric(), pairing);
        let e = h.multiplicity();
        let mut apery = h.apery_set(e).unwrap();
        apery.sort();
        let mut expected: Vec<i64> = std::iter::once(0)
            .chain(h.minimal_generators().iter().copied().filter(|&a| a != e))
            .collect();
        expected.sort();
        prop_assert_eq!(h.has_minimal_multiplicity(), apery == expected);
        prop_assert!(h.embedding_dimension() as i64 <= e);
        prop_assert_eq!(h.pseudo_frobenius().last().copied(), Some(f));
    }

    #[test]
    fn classification_is_consistent(h in semigroup_strategy(20)) {
        let report = ggl_core::classify(&h);
        prop_assert!(report.is_ok(), "{:?}", report);
    }
}
