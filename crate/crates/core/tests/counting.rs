use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;

use vibnorm::algebra::{hilbert_basis, poisson_bracket, Polynomial};
use vibnorm::counting::{
    additional_operators_by_order, count_closed, count_closed_n2, count_closed_n3,
    count_closed_n3_by_support, count_compositions, enumerate_signatures, CountSpec,
    MonomialSignature,
};

/// Independent enumeration: every power vector in [0, q0]^n, filtered by
/// its total, counted by recursion over modes.
fn brute_force(n: usize, q0: u32) -> Vec<Vec<u32>> {
    fn rec(prefix: &mut Vec<u32>, n: usize, budget: u32, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == n {
            if prefix.iter().any(|&r| r > 0) {
                out.push(prefix.clone());
            }
            return;
        }
        for r in 0..=budget {
            prefix.push(r);
            rec(prefix, n, budget - r, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), n, q0, &mut out);
    out
}

fn exact_binomial(n: u64, k: u64) -> u128 {
    // Pascal's triangle, independent of the library's multiplicative form.
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = vec![1u128; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] + row[i];
        }
        row = next;
    }
    row.get(k as usize).copied().unwrap_or(0)
}

/// Table 1 transcription: powers of (σ1, σ2, σ3) for n = 3, N = 8.
fn table_one_n3() -> BTreeSet<Vec<u32>> {
    let rows: [[u32; 3]; 34] = [
        [1, 0, 0],
        [0, 1, 0],
        [0, 0, 1],
        [2, 0, 0],
        [0, 2, 0],
        [0, 0, 2],
        [3, 0, 0],
        [0, 3, 0],
        [0, 0, 3],
        [4, 0, 0],
        [0, 4, 0],
        [0, 0, 4],
        [1, 1, 0],
        [2, 1, 0],
        [1, 2, 0],
        [3, 1, 0],
        [2, 2, 0],
        [1, 3, 0],
        [1, 0, 1],
        [2, 0, 1],
        [1, 0, 2],
        [3, 0, 1],
        [2, 0, 2],
        [1, 0, 3],
        [0, 1, 1],
        [0, 2, 1],
        [0, 1, 2],
        [0, 3, 1],
        [0, 2, 2],
        [0, 1, 3],
        [1, 1, 1],
        [2, 1, 1],
        [1, 2, 1],
        [1, 1, 2],
    ];
    rows.iter().map(|r| r.to_vec()).collect()
}

fn signature_set(n: usize, order: u32) -> BTreeSet<Vec<u32>> {
    enumerate_signatures(&CountSpec::new(n, order).unwrap())
        .unwrap()
        .into_iter()
        .map(|s| s.powers().to_vec())
        .collect()
}

#[test]
fn table_one_three_modes() {
    let table = table_one_n3();
    assert_eq!(table.len(), 34);
    assert_eq!(signature_set(3, 8), table);
}

#[test]
fn table_one_four_modes() {
    // Table 1 (n = 4) is built from the same patterns over every choice of
    // modes: pure powers 1..4, pairs with total <= 4, triples with total <= 4
    // and σ1σ2σ3σ4. Rebuild it from those rows.
    let mut table = BTreeSet::new();
    for k in 0..4 {
        for r in 1..=4 {
            let mut v = vec![0; 4];
            v[k] = r;
            table.insert(v);
        }
    }
    let pair_powers = [(1, 1), (2, 1), (1, 2), (3, 1), (2, 2), (1, 3)];
    for i in 0..4 {
        for j in i + 1..4 {
            for (a, b) in pair_powers {
                let mut v = vec![0; 4];
                v[i] = a;
                v[j] = b;
                table.insert(v);
            }
        }
    }
    let triple_powers = [(1, 1, 1), (2, 1, 1), (1, 2, 1), (1, 1, 2)];
    for i in 0..4 {
        for j in i + 1..4 {
            for k in j + 1..4 {
                for (a, b, c) in triple_powers {
                    let mut v = vec![0; 4];
                    v[i] = a;
                    v[j] = b;
                    v[k] = c;
                    table.insert(v);
                }
            }
        }
    }
    table.insert(vec![1, 1, 1, 1]);
    assert_eq!(table.len(), 69);
    assert_eq!(signature_set(4, 8), table);
    assert_eq!(count_closed(&CountSpec::new(4, 8).unwrap()).unwrap(), 69);
}

#[test]
fn closed_form_matches_brute_force() {
    for n in 1..=8 {
        for order in (2..=24).step_by(2) {
            let spec = CountSpec::new(n, order).unwrap();
            let q0 = order / 2;
            let brute = brute_force(n, q0);
            let closed = count_closed(&spec).unwrap();
            assert_eq!(closed, brute.len() as u128, "n={n} N={order}");
            assert_eq!(
                closed,
                exact_binomial(n as u64 + u64::from(q0), n as u64) - 1
            );
            let listed = enumerate_signatures(&spec).unwrap();
            assert_eq!(listed.len(), brute.len());
            let listed: BTreeSet<Vec<u32>> = listed.iter().map(|s| s.powers().to_vec()).collect();
            let brute: BTreeSet<Vec<u32>> = brute.into_iter().collect();
            assert_eq!(listed, brute);
        }
    }
}

#[test]
fn stars_and_bars_identity() {
    for n in 1..=30u64 {
        for q0 in 1..=30u64 {
            let spec = CountSpec::new(n as usize, 2 * q0 as u32).unwrap();
            let sum: u128 = (1..=n.min(q0))
                .map(|l| exact_binomial(n, l) * exact_binomial(q0, l))
                .sum();
            assert_eq!(sum, exact_binomial(n + q0, n) - 1);
            assert_eq!(count_closed(&spec).unwrap(), sum);
        }
    }
}

#[test]
fn small_mode_closed_forms() {
    for q0 in 1..=30u64 {
        let n2 = count_closed(&CountSpec::new(2, 2 * q0 as u32).unwrap()).unwrap();
        assert_eq!(count_closed_n2(q0), n2);
        let n3 = count_closed(&CountSpec::new(3, 2 * q0 as u32).unwrap()).unwrap();
        assert_eq!(count_closed_n3(q0), n3);
        assert_eq!(count_closed_n3_by_support(q0), n3);
        assert_eq!(brute_force(3, q0 as u32).len() as u128, n3);
    }
    assert_eq!(count_closed_n2(2), brute_force(2, 2).len() as u128);
    assert_eq!(count_closed_n2(4), 14);
    assert_eq!(count_closed_n3(3), 19);
}

#[test]
fn printed_three_mode_numerator_is_not_integral() {
    // Q0 (Q0² + Q0 + 11) / 6 at Q0 = 4 is 124/6; the 6 Q0 form gives 34.
    let q0 = 4u64;
    assert_ne!((q0 * (q0 * q0 + q0 + 11)) % 6, 0);
    assert_eq!(count_closed_n3(q0), 34);
}

#[test]
fn compositions_by_listing() {
    fn list(r: u32, parts: u32) -> Vec<Vec<u32>> {
        if parts == 0 {
            return if r == 0 { vec![vec![]] } else { vec![] };
        }
        (1..=r)
            .flat_map(|first| {
                list(r - first, parts - 1).into_iter().map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
            })
            .collect()
    }
    assert_eq!(list(4, 2), vec![vec![1, 3], vec![2, 2], vec![3, 1]]);
    for r in 1..=10 {
        for lambda in 1..=6 {
            assert_eq!(
                count_compositions(r.into(), lambda.into()),
                list(r, lambda).len() as u128
            );
        }
    }
    for q0 in 1..=12u64 {
        for lambda in 1..=q0 {
            let sum: u128 = (lambda..=q0).map(|r| count_compositions(r, lambda)).sum();
            assert_eq!(sum, exact_binomial(q0, lambda));
        }
    }
}

#[test]
fn order_ledger_matches_enumeration() {
    for n in 1..=5 {
        for order in (2..=12).step_by(2) {
            let ledger = additional_operators_by_order(n, order).unwrap();
            let mut by_degree: BTreeMap<u32, u128> = BTreeMap::new();
            for sig in enumerate_signatures(&CountSpec::new(n, order).unwrap()).unwrap() {
                *by_degree.entry(sig.degree()).or_default() += 1;
            }
            assert_eq!(ledger, by_degree, "n={n} N={order}");
            let mut running = 0;
            for (&m, &c) in &ledger {
                running += c;
                assert_eq!(
                    running,
                    count_closed(&CountSpec::new(n, m).unwrap()).unwrap()
                );
            }
        }
    }
}

#[test]
fn enumerated_terms_commute_with_generators() {
    let spec = CountSpec::new(2, 6).unwrap();
    let basis: Vec<Polynomial> = hilbert_basis(2)
        .into_iter()
        .map(Polynomial::monomial)
        .collect();
    for sig in enumerate_signatures(&spec).unwrap() {
        for s in &basis {
            assert!(
                poisson_bracket(&sig.to_polynomial(), s).unwrap().is_zero(),
                "{sig}"
            );
        }
    }
}

proptest! {
    #[test]
    fn enumeration_is_monotone_and_bounded(n in 1usize..=5, q0 in 1u32..=6) {
        let small = enumerate_signatures(&CountSpec::new(n, 2 * q0).unwrap()).unwrap();
        let large = enumerate_signatures(&CountSpec::new(n, 2 * q0 + 2).unwrap()).unwrap();
        prop_assert!(small.iter().all(|s| s.degree() <= 2 * q0));
        let large: BTreeSet<MonomialSignature> = large.into_iter().collect();
        prop_assert!(small.iter().all(|s| large.contains(s)));
        prop_assert!(small.windows(2).all(|w| w[0] < w[1]));
    }
}
