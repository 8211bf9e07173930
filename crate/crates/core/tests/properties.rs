mod common;

use std::collections::BTreeSet;

use common::{planted, random_connected, random_graph, MODES};
use cospec::construct::{swap_construct, verify_distance_preservation, verify_pi_isomorphism, verify_similarity};
use cospec::cousins::{classify_pair, enumerate_cousin_pairs, find_involution, CousinFlag};
use cospec::graph::is_isomorphic;
use cospec::{check_hypotheses, cospectral, Graph, MatrixKind, SwapInvolution, SwapPlan};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        ..ProptestConfig::default()
    }
}

/// Two disjoint sets of size `m` drawn from `0..n`, decided by `seed`.
fn disjoint_sets(n: usize, m: usize, seed: u64) -> (Vec<usize>, Vec<usize>) {
    use rand::seq::SliceRandom;
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(&mut rng(seed));
    (v[..m].to_vec(), v[m..2 * m].to_vec())
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn classification_is_symmetric(seed in any::<u64>(), n in 4usize..10, m in 1usize..3) {
        let g = random_connected(&mut rng(seed), n, 0.3);
        let (v1, v2) = disjoint_sets(n, m, seed ^ 1);
        let a = classify_pair(&g, &v1, &v2).unwrap();
        let b = classify_pair(&g, &v2, &v1).unwrap();
        prop_assert_eq!(a.relaxed, b.relaxed);
        prop_assert_eq!(a.co_degree, b.co_degree);
        prop_assert_eq!(a.cousins, b.cousins);
        prop_assert_eq!(a.co_transmission, b.co_transmission);
    }

    #[test]
    fn involution_is_edge_preserving_and_self_inverse(seed in any::<u64>(), idx in 0usize..4, m in 2usize..5) {
        let plan = planted(&mut rng(seed), MODES[idx], m);
        let pi = find_involution(plan.base(), plan.v1(), plan.v2()).unwrap().expect("planted sets admit a swap");
        let n = plan.base().order();
        let perm = pi.as_permutation(n);
        for v in 0..n {
            prop_assert_eq!(perm[perm[v]], v);
        }
        // An automorphism of the block G[V₁ ∪ V₂], not of the whole graph.
        let block: Vec<usize> = plan.v1().iter().chain(plan.v2()).copied().collect();
        for &u in &block {
            for &v in &block {
                prop_assert_eq!(plan.base().has_edge(u, v), plan.base().has_edge(perm[u], perm[v]));
            }
        }
        let v1: BTreeSet<usize> = plan.v1().iter().copied().collect();
        let images: BTreeSet<usize> = plan.v2().iter().map(|&v| pi.apply(v)).collect();
        prop_assert_eq!(v1, images);
    }

    #[test]
    fn mirrored_plan_exchanges_the_pair(seed in any::<u64>(), idx in 0usize..4, m in 2usize..5) {
        let plan = planted(&mut rng(seed), MODES[idx], m);
        let (g1, g2) = swap_construct(&plan).unwrap();
        let (h1, h2) = swap_construct(&plan.mirrored()).unwrap();
        prop_assert_eq!(h1, g2);
        prop_assert_eq!(h2, g1);
    }

    #[test]
    fn similarity_implies_cospectral(seed in any::<u64>(), idx in 0usize..4, m in 2usize..5) {
        let plan = planted(&mut rng(seed), MODES[idx], m);
        let (g1, g2) = swap_construct(&plan).unwrap();
        for kind in MatrixKind::ALL {
            let similar = match verify_similarity(&g1, &g2, &plan.swap_order(), kind) {
                Ok(s) => s,
                Err(_) => continue,
            };
            if similar {
                prop_assert!(cospectral(&g1, &g2, kind).unwrap(), "{}", kind);
            }
        }
    }

    #[test]
    fn pi_carries_the_swapped_block(seed in any::<u64>(), idx in 0usize..4, m in 2usize..5) {
        let plan = planted(&mut rng(seed), MODES[idx], m);
        let (g1, g2) = swap_construct(&plan).unwrap();
        prop_assert!(verify_pi_isomorphism(&plan, &g1, &g2));
    }
}

proptest! {
    #![proptest_config(config(32))]

    #[test]
    fn enumeration_is_duplicate_free_and_sound(seed in any::<u64>(), n in 4usize..9, m in 1usize..3) {
        let g = random_graph(&mut rng(seed), n, 0.45);
        let found = enumerate_cousin_pairs(&g, m, CousinFlag::Relaxed).unwrap();
        let unique: BTreeSet<_> = found.iter().cloned().collect();
        prop_assert_eq!(unique.len(), found.len());
        for (v1, v2) in &found {
            prop_assert!(v1 < v2);
            prop_assert!(classify_pair(&g, v1, v2).unwrap().relaxed);
            prop_assert!(classify_pair(&g, v2, v1).unwrap().relaxed);
        }
        // Every relaxed pair of two singletons is listed.
        if m == 1 {
            for a in 0..n {
                for b in a + 1..n {
                    let holds = classify_pair(&g, &[a], &[b]).unwrap().relaxed;
                    prop_assert_eq!(holds, found.contains(&(vec![a], vec![b])));
                }
            }
        }
    }

    #[test]
    fn isomorphic_houses_placed_symmetrically_give_isomorphic_graphs(seed in any::<u64>(), idx in 0usize..4, m in 2usize..4) {
        let plan = planted(&mut rng(seed), MODES[idx], m);
        // Put H₁ into V₂ through π∘φ₁ so the two copies are π-images.
        let pi = plan.pi().clone();
        let phi2 = plan.phi1().then(|v| pi.apply(v));
        let sym = SwapPlan::new(
            plan.base().clone(),
            plan.v1().to_vec(),
            plan.v2().to_vec(),
            Some(pi),
            plan.h1().clone(),
            plan.h1().clone(),
            Some(plan.phi1().clone()),
            Some(phi2),
        )
        .unwrap();
        let (g1, g2) = swap_construct(&sym).unwrap();
        if g1.order() <= cospec::graph::MAX_ISO_ORDER {
            prop_assert!(is_isomorphic(&g1, &g2).unwrap());
        }
    }
}

#[test]
fn distance_preservation_on_planted_instances() {
    let mut r = rng(0xd157);
    let mut checked = 0;
    for i in 0..50 {
        let plan = planted(&mut r, MODES[i % 4], 2 + i % 3);
        let (g1, g2) = swap_construct(&plan).unwrap();
        let report = check_hypotheses(&plan, &g1).unwrap();
        if report.classification.cousins != Some(true) || !g1.is_connected() || !g2.is_connected() {
            continue;
        }
        assert!(verify_distance_preservation(&g1, &g2, plan.v1(), plan.v2()).unwrap(), "instance {i}");
        checked += 1;
    }
    assert!(checked >= 10, "only {checked} cousin instances");
}

#[test]
fn identical_graphs_preserve_distances() {
    let g = Graph::cycle(6);
    assert!(verify_distance_preservation(&g, &g, &[0], &[3]).unwrap());
}

#[test]
fn corrupted_pi_is_detected() {
    // No base edges inside V₁ ∪ V₂, so any exchange is a valid plan.
    let plan = cospec::fixtures::load(cospec::fixtures::LAPLACIAN_P3);
    let (g1, g2) = swap_construct(&plan).unwrap();
    assert!(verify_pi_isomorphism(&plan, &g1, &g2));
    // Exchange the images of the first two vertices of V₁.
    let mut pairs = plan.pi().pairs().to_vec();
    let (a, b) = (pairs[0].1, pairs[1].1);
    pairs[0].1 = b;
    pairs[1].1 = a;
    let pi = SwapInvolution::from_pairs(plan.v1(), plan.v2(), &pairs).unwrap();
    let corrupt = SwapPlan::new(
        plan.base().clone(),
        plan.v1().to_vec(),
        plan.v2().to_vec(),
        Some(pi),
        plan.h1().clone(),
        plan.h2().clone(),
        Some(plan.phi1().clone()),
        Some(plan.phi2().clone()),
    )
    .unwrap();
    assert!(!verify_pi_isomorphism(&corrupt, &g1, &g2));
}
