//! Invariants checked exhaustively on small inputs or with proptest on random ones, each
//! against an oracle computed a different way from the code under test.

use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use z2star::combinatorics::SubsetMask;
use z2star::free_product::{
    build_m_alpha, build_one_quiver, canonicalize_characters, components, dimvector_of_characters,
    is_simple_alpha, is_simple_alpha_oracle, one_quiver_euler_closed, one_quiver_euler_recursive,
    CharacterMultiset,
};
use z2star::quiver::{euler_form, is_simple_dimvector};
use z2star::{DimVector, Quiver};

fn unit(v: usize, i: usize) -> Vec<i64> {
    let mut e = vec![0; v];
    e[i] = 1;
    e
}

#[test]
fn one_quiver_euler_form_on_generators() {
    for n in 1..=5 {
        let q = build_one_quiver(n).unwrap();
        let v: usize = 1 << n;
        for a in 0..v {
            for b in 0..v {
                let d: i64 = (a ^ b).count_ones().into();
                assert_eq!(euler_form(&q, &unit(v, a), &unit(v, b)).unwrap(), 1 - d);
                let ext = if a == b { 0 } else { d - 1 };
                assert_eq!(q.arrows(a, b) as i64, ext);
            }
        }
    }
}

#[test]
fn one_quiver_recursive_matches_closed() {
    for n in 1..=8 {
        assert_eq!(
            one_quiver_euler_recursive(n).unwrap(),
            one_quiver_euler_closed(n).unwrap(),
            "n = {n}"
        );
    }
}

#[test]
fn simple_alpha_formula_matches_local_quiver_test() {
    for n in 1..=4 {
        for m in 1..=4 {
            for alpha in components(n, m).unwrap() {
                assert_eq!(
                    is_simple_alpha(&alpha).unwrap(),
                    is_simple_alpha_oracle(&alpha).unwrap(),
                    "{alpha}"
                );
            }
        }
    }
}

/// Simplicity on the one quiver through the inequalities `|β| <= Σ_B b_B |A Δ B|` for every
/// character `A`, with the two exceptional supports handled separately: a pair at distance
/// two (simple iff both entries are 1) and two such pairs at distance one from each other
/// (never simple). A single vertex carries the one-dimensional simple.
fn one_quiver_simple_by_inequalities(n: usize, beta: &[u32]) -> bool {
    let support: Vec<usize> = (0..beta.len()).filter(|&i| beta[i] > 0).collect();
    let dist = |a: usize, b: usize| (a ^ b).count_ones();
    match support.as_slice() {
        [a] => return beta[*a] == 1,
        [a, b] if dist(*a, *b) == 2 => return beta[*a] == 1 && beta[*b] == 1,
        [_, _, _, _] => {
            let pairs_at_two = support
                .iter()
                .enumerate()
                .flat_map(|(i, &a)| support[i + 1..].iter().map(move |&b| (a, b)))
                .filter(|&(a, b)| dist(a, b) >= 2)
                .collect::<Vec<_>>();
            let disjoint_pairs =
                pairs_at_two.len() == 2 && pairs_at_two.iter().all(|&(a, b)| dist(a, b) == 2) && {
                    let (p, q) = (pairs_at_two[0], pairs_at_two[1]);
                    BTreeSet::from([p.0, p.1, q.0, q.1]).len() == 4
                };
            if disjoint_pairs {
                return false;
            }
        }
        _ => {}
    }
    let total: u64 = beta.iter().map(|&b| b as u64).sum();
    (0..1usize << n).all(|a| {
        let weighted: u64 = (0..beta.len())
            .map(|b| beta[b] as u64 * dist(a, b) as u64)
            .sum();
        total <= weighted
    })
}

fn check_one_quiver_simplicity(q: &Quiver, n: usize, beta: &[u32]) {
    if beta.iter().all(|&b| b == 0) {
        return;
    }
    assert_eq!(
        is_simple_dimvector(q, beta).unwrap(),
        one_quiver_simple_by_inequalities(n, beta),
        "n = {n}, beta = {beta:?}"
    );
}

#[test]
fn one_quiver_simplicity_exhaustive_small() {
    // n = 2: entries up to 3; n = 3: entries up to 2; n = 4: entries up to 1
    for (n, max) in [(2usize, 3u32), (3, 2), (4, 1)] {
        let q = build_one_quiver(n).unwrap();
        let v = 1usize << n;
        let mut beta = vec![0u32; v];
        loop {
            check_one_quiver_simplicity(&q, n, &beta);
            let Some(i) = (0..v).find(|&i| beta[i] < max) else {
                break;
            };
            for b in beta.iter_mut().take(i) {
                *b = 0;
            }
            beta[i] += 1;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn one_quiver_simplicity_random_n4(beta in prop::collection::vec(0u32..=2, 16)) {
        let q = build_one_quiver(4).unwrap();
        check_one_quiver_simplicity(&q, 4, &beta);
    }
}

fn arb_characters() -> impl Strategy<Value = CharacterMultiset> {
    (1usize..=5).prop_flat_map(|n| {
        prop::collection::vec((0u32..(1 << n), 1u32..=2), 1..=4).prop_filter_map(
            "degree at most 5",
            move |entries| {
                let degree: u32 = entries.iter().map(|e| e.1).sum();
                let entries = entries
                    .into_iter()
                    .map(|(bits, k)| (SubsetMask::new(bits, n).unwrap(), k));
                (degree <= 5).then(|| CharacterMultiset::new(n, entries).unwrap())
            },
        )
    })
}

/// Straightens one random incomparable pair at a time until the support is a chain,
/// checking the invariants after every step.
fn straighten_randomly(c: &CharacterMultiset, seed: u64) -> CharacterMultiset {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut cur = c.clone();
    let alpha = dimvector_of_characters(c);
    loop {
        let pairs = cur.incomparable_pairs();
        if pairs.is_empty() {
            return cur;
        }
        let (a, b) = pairs[rng.random_range(0..pairs.len())];
        cur.straighten(a, b).unwrap();
        assert_eq!(cur.degree(), c.degree());
        assert_eq!(dimvector_of_characters(&cur), alpha);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn straightening_is_confluent(c in arb_characters(), s1 in any::<u64>(), s2 in any::<u64>()) {
        let r1 = straighten_randomly(&c, s1);
        let r2 = straighten_randomly(&c, s2);
        prop_assert_eq!(&r1, &r2);
        prop_assert_eq!(&r1, &canonicalize_characters(&c));
        prop_assert!(r1.is_chain());
    }

    #[test]
    fn euler_form_is_bilinear(
        n in 1usize..=4,
        x in prop::collection::vec(-3i64..=3, 16),
        y in prop::collection::vec(-3i64..=3, 16),
        z in prop::collection::vec(-3i64..=3, 16),
        c in -4i64..=4,
    ) {
        let q = build_one_quiver(n).unwrap();
        let v = 1 << n;
        let (x, y, z) = (&x[..v], &y[..v], &z[..v]);
        let yz: Vec<i64> = y.iter().zip(z).map(|(a, b)| c * a + b).collect();
        prop_assert_eq!(
            euler_form(&q, x, &yz).unwrap(),
            c * euler_form(&q, x, y).unwrap() + euler_form(&q, x, z).unwrap()
        );
        // symmetric quiver, symmetric form
        prop_assert_eq!(euler_form(&q, x, y).unwrap(), euler_form(&q, y, x).unwrap());
    }

    #[test]
    fn m_alpha_realizes_alpha(pairs in prop::collection::vec(0u32..=5, 1..=6), m in 1u32..=5) {
        let pairs: Vec<(u32, u32)> = pairs.into_iter().map(|a| (a.min(m), m - a.min(m))).collect();
        let alpha = DimVector::new(pairs).unwrap();
        let canonical = alpha.bn_canonical();
        let point = build_m_alpha(&canonical).unwrap();
        prop_assert!(point.is_chain());
        prop_assert_eq!(point.degree(), m as u64);
        prop_assert_eq!(dimvector_of_characters(&point), canonical);
    }

    #[test]
    fn bn_canonical_is_orbit_invariant(
        pairs in prop::collection::vec((0u32..=4, any::<bool>()), 1..=6),
        seed in any::<u64>(),
    ) {
        let m = 4;
        let alpha = DimVector::new(pairs.iter().map(|&(a, _)| (a, m - a)).collect()).unwrap();
        let mut moved = alpha.clone();
        for (i, &(_, f)) in pairs.iter().enumerate() {
            if f {
                moved.flip(i);
            }
        }
        let mut perm: Vec<usize> = (0..pairs.len()).collect();
        let mut rng = StdRng::seed_from_u64(seed);
        for i in (1..perm.len()).rev() {
            perm.swap(i, rng.random_range(0..=i));
        }
        let moved = moved.permuted(&perm).unwrap();
        prop_assert_eq!(alpha.bn_canonical(), moved.bn_canonical());
        prop_assert_eq!(is_simple_alpha(&alpha).unwrap(), is_simple_alpha(&moved).unwrap());
    }
}

#[test]
fn disconnected_full_subquivers_of_q3() {
    let q = build_one_quiver(3).unwrap();
    for subset in 1u32..256 {
        let vertices: Vec<usize> = (0..8).filter(|&i| subset >> i & 1 == 1).collect();
        let sub = q.full_subquiver(&vertices);
        let comps = sub.components();
        if comps.len() == 2 && comps.iter().all(|c| c.len() >= 2) {
            assert_eq!(vertices.len(), 4, "{vertices:?}");
            for c in &comps {
                assert_eq!(c.len(), 2);
                assert_eq!(sub.arrows(c[0], c[1]), 1);
                assert_eq!(sub.arrows(c[1], c[0]), 1);
            }
        }
    }
}

#[test]
fn semigroup_degree_two_count() {
    let n = 3;
    let mut forms = BTreeSet::new();
    let all: Vec<SubsetMask> = SubsetMask::all(n).unwrap().collect();
    for (i, &a) in all.iter().enumerate() {
        for &b in &all[i..] {
            let c = CharacterMultiset::new(n, [(a, 1), (b, 1)]).unwrap();
            forms.insert(canonicalize_characters(&c).to_string());
        }
    }
    assert_eq!(forms.len(), 27);
    // one normal form per dimension vector of level 2
    assert_eq!(forms.len(), components(n, 2).unwrap().count());
}
