use std::collections::BTreeSet;

use itertools::Itertools;

use z2star::combinatorics::{young_diagrams, SubsetMask};
use z2star::local::{
    count_settings_for_young, degenerates, degenerates_class, degeneration_graph,
    enumerate_labeled_settings, enumerate_settings, labeled_degeneration_graph, local_euler_matrix,
    local_quiver,
};
use z2star::LocalSetting;

#[test]
fn local_quiver_symmetric_and_matches_euler_formula() {
    for n in 1..=6 {
        for m in 1..=n {
            for s in enumerate_settings(n, m).unwrap() {
                let q = local_quiver(&s);
                assert!(q.quiver.is_symmetric(), "{s}");
                assert!(q.dims[..s.len()].iter().all(|&d| d == 1));
                let built = q.quiver.euler_matrix();
                let closed = local_euler_matrix(&s);
                assert_eq!(built, closed, "({n},{m}) {s}");
            }
        }
    }
}

#[test]
fn per_diagram_counts_for_m_equal_n() {
    for n in 1..=8 {
        let settings = enumerate_settings(n, n).unwrap();
        for diagram in young_diagrams(n) {
            let count = settings
                .iter()
                .filter(|s| s.young_label().diagram() == diagram)
                .count();
            assert_eq!(
                count as u128,
                count_settings_for_young(&diagram),
                "{diagram:?}"
            );
        }
    }
}

#[test]
fn settings_are_distinct_classes() {
    for n in 1..=7 {
        for m in 1..=n {
            let settings = enumerate_settings(n, m).unwrap();
            let labels: BTreeSet<_> = settings.iter().map(|s| s.young_label()).collect();
            assert_eq!(labels.len(), settings.len());
            assert!(settings.iter().all(|s| s.k_total() <= m));
            // sorted by |k| descending
            assert!(settings
                .windows(2)
                .all(|w| w[0].k_total() >= w[1].k_total()));
        }
    }
}

/// Class-level degeneration by trying every relabeling of the target.
fn degenerates_by_permutation(s: &LocalSetting, t: &LocalSetting) -> bool {
    let n = s.n();
    (0..n).permutations(n).any(|perm| {
        let blocks = t
            .blocks()
            .iter()
            .map(|b| {
                let moved: Vec<usize> = b.elements().map(|e| perm[e - 1] + 1).collect();
                SubsetMask::from_elements(&moved, n).unwrap()
            })
            .collect();
        let relabeled = LocalSetting::new(n, t.m(), blocks, t.k().to_vec()).unwrap();
        degenerates(s, &relabeled).unwrap()
    })
}

#[test]
fn class_degeneration_matches_permutation_search() {
    for n in 1..=5 {
        for m in 1..=n {
            let settings = enumerate_settings(n, m).unwrap();
            for s in &settings {
                for t in &settings {
                    assert_eq!(
                        degenerates_class(s, t).unwrap(),
                        degenerates_by_permutation(s, t),
                        "({n},{m}) {s} -> {t}"
                    );
                }
            }
        }
    }
}

#[test]
fn restricting_the_square_graph_gives_smaller_m() {
    for n in 1..=6 {
        let full = degeneration_graph(n, n).unwrap();
        for m in 1..=n {
            let restricted = full.restrict_k_total(m);
            let direct = degeneration_graph(n, m).unwrap();
            let labels = |g: &z2star::DegenerationGraph| -> Vec<String> {
                g.nodes.iter().map(|x| x.label.to_string()).collect()
            };
            assert_eq!(labels(&restricted), labels(&direct), "({n},{m})");
            assert_eq!(restricted.edges, direct.edges, "({n},{m})");
        }
    }
}

#[test]
fn graphs_are_acyclic_and_edges_degenerate() {
    for n in 1..=6 {
        for m in 1..=n {
            let g = degeneration_graph(n, m).unwrap();
            for &(a, b) in &g.edges {
                assert!(a != b);
                assert!(g.nodes[a].setting.k_total() >= g.nodes[b].setting.k_total());
                assert!(degenerates_class(&g.nodes[a].setting, &g.nodes[b].setting).unwrap());
                assert!(!degenerates_class(&g.nodes[b].setting, &g.nodes[a].setting).unwrap());
            }
        }
    }
}

#[test]
fn labeled_graph_projects_onto_class_graph() {
    for n in 1..=4 {
        for m in 1..=n {
            let labeled = labeled_degeneration_graph(n, m).unwrap();
            let classes = degeneration_graph(n, m).unwrap();
            let projected: BTreeSet<(String, String)> = labeled
                .edges
                .iter()
                .map(|&(a, b)| {
                    (
                        labeled.nodes[a].label.to_string(),
                        labeled.nodes[b].label.to_string(),
                    )
                })
                .collect();
            let direct: BTreeSet<(String, String)> = classes
                .edges
                .iter()
                .map(|&(a, b)| {
                    (
                        classes.nodes[a].label.to_string(),
                        classes.nodes[b].label.to_string(),
                    )
                })
                .collect();
            assert_eq!(projected, direct, "({n},{m})");
            let reach = labeled.reachability();
            for (i, s) in labeled.nodes.iter().enumerate() {
                for (j, t) in labeled.nodes.iter().enumerate() {
                    assert_eq!(reach[i][j], degenerates(&s.setting, &t.setting).unwrap());
                }
            }
        }
    }
    assert_eq!(
        enumerate_labeled_settings(4, 4).unwrap().len(),
        4 + 4 * 3 + 3 * 4 + 6 * 2 + 1
    );
}
