mod common;

use common::*;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use treeratio_core::invariants::total_subtrees_rooted_at;
use treeratio_core::*;

fn big(x: u64) -> BigCount {
    BigCount::from(x)
}

fn all_binary_trees(n_max: usize) -> Vec<Tree> {
    (2..=n_max).step_by(2).flat_map(|n| enumerate_binary_trees(n).unwrap()).collect()
}

#[test]
fn distance_sums_match_bfs_on_enumerated_trees() {
    for t in all_binary_trees(18) {
        assert_eq!(distance_sums(&t), bfs_distance_sums(&t), "{t:?}");
        let pairs: u64 = bfs_all_pairs(&t).iter().flatten().sum::<u64>() / 2;
        assert_eq!(wiener_index(&t), pairs);
    }
}

#[test]
fn subtree_counts_match_subset_enumeration() {
    for t in all_binary_trees(14) {
        let brute = brute_subtrees(&t);
        let fast = subtree_counts(&t);
        for v in t.vertices() {
            assert_eq!(fast[v], big(brute.per_vertex[v]));
        }
        assert_eq!(total_subtrees(&t), big(brute.total));
        for u in t.vertices() {
            for v in t.vertices().filter(|&v| v != u) {
                assert_eq!(subtree_count_pair(&t, u, v).unwrap(), big(brute.pairs[u][v]));
            }
        }
    }
}

#[test]
fn random_trees_match_oracles() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7EE5);
    for _ in 0..300 {
        let n = rand::Rng::gen_range(&mut rng, 1..=16);
        let t = random_tree(&mut rng, n);
        assert_eq!(distance_sums(&t), bfs_distance_sums(&t));
        let brute = brute_subtrees(&t);
        let fast = subtree_counts(&t);
        assert!(t.vertices().all(|v| fast[v] == big(brute.per_vertex[v])), "{t:?}");
        for root in t.vertices() {
            assert_eq!(total_subtrees_rooted_at(&t, root), big(brute.total));
        }
    }
}

#[test]
fn rerooted_counts_equal_rooted_dynamic_program() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let n = rand::Rng::gen_range(&mut rng, 2..=40);
        let t = random_tree(&mut rng, n);
        let all = subtree_counts(&t);
        for v in t.vertices() {
            let rt = RootedTree::new(t.clone(), v).unwrap();
            assert_eq!(rooted_subtree_counts(&rt)[v], all[v]);
        }
    }
}

#[test]
fn enumeration_matches_labeled_oracle() {
    for n in (2..=12).step_by(2) {
        let ours: Vec<CanonicalCode> = binary_tree_codes(n).unwrap();
        let oracle: Vec<CanonicalCode> = prufer_binary_classes(n).into_iter().collect();
        assert_eq!(ours, oracle, "n={n}");
        assert_eq!(count_binary_trees(n).unwrap(), oracle.len() as u128);
    }
}

#[test]
fn rooted_enumeration_matches_composition_count() {
    // c(l) rooted shapes with l leaves: unordered pairs of smaller shapes
    let mut c = vec![0u128, 1];
    for l in 2..=12 {
        let mut total = 0;
        for a in 1..=l / 2 {
            let b = l - a;
            total += if a == b { c[a] * (c[a] + 1) / 2 } else { c[a] * c[b] };
        }
        c.push(total);
    }
    for (l, &expected) in c.iter().enumerate().skip(1) {
        let m = 2 * l - 1;
        assert_eq!(enumerate_rooted_binary_trees(m).unwrap().len() as u128, expected, "m={m}");
        assert_eq!(count_rooted_binary_trees(m).unwrap(), expected);
    }
}

#[test]
fn codes_are_complete_invariants_for_small_trees() {
    for n in 1..=7 {
        let mut classes: Vec<(CanonicalCode, Tree)> = Vec::new();
        for t in all_labeled_trees(n) {
            let code = canonical_code(&t);
            match classes.iter().find(|(c, _)| *c == code) {
                Some((_, rep)) => assert!(isomorphic(rep, &t), "equal codes, not isomorphic: {code}"),
                None => {
                    assert!(
                        classes.iter().all(|(_, rep)| !isomorphic(rep, &t)),
                        "isomorphic, different codes"
                    );
                    classes.push((code, t));
                }
            }
        }
        let expected = [1, 1, 1, 2, 3, 6, 11][n - 1];
        assert_eq!(classes.len(), expected, "n={n}");
    }
}

#[test]
fn codes_separate_random_trees_up_to_ten() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for n in 8..=10 {
        let mut reps: Vec<(CanonicalCode, Tree)> = Vec::new();
        for _ in 0..400 {
            let t = random_tree(&mut rng, n);
            let code = canonical_code(&t);
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            assert_eq!(canonical_code(&relabel(&t, &perm)), code);
            if !reps.iter().any(|(c, _)| *c == code) {
                reps.push((code, t));
            }
        }
        for i in 0..reps.len() {
            for j in i + 1..reps.len() {
                assert!(!isomorphic(&reps[i].1, &reps[j].1), "{} vs {}", reps[i].0, reps[j].0);
            }
        }
    }
}

#[test]
fn code_round_trips_over_enumeration() {
    for t in all_binary_trees(14) {
        let code = canonical_code(&t);
        let back = parse_code(code.as_str()).unwrap();
        assert_eq!(canonical_code(&back), code);
        if t.order() <= 12 {
            assert!(isomorphic(&back, &t));
        }
    }
}

#[test]
fn named_examples() {
    let star = make_tree(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
    assert!(star.is_binary());
    assert_eq!(distance_sums(&star), vec![3, 5, 5, 5]);
    assert_eq!(wiener_index(&star), 9);
    assert_eq!(total_subtrees(&star), big(11));
    assert_eq!(subtree_count_pair(&star, 0, 1).unwrap(), big(4));
    assert!(matches!(make_tree(4, &[(0, 1), (0, 2)]), Err(TreeError::NotATree(_))));

    let path = make_tree(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
    assert!(!path.is_binary());

    let edge = make_tree(2, &[(0, 1)]).unwrap();
    assert_eq!(wiener_index(&edge), 1);
    assert_eq!(total_subtrees(&edge), big(3));
    assert_eq!(subtree_count_pair(&edge, 0, 1).unwrap(), big(1));
    assert_eq!(branch_sizes(&edge, 0, 1).unwrap(), (1, 1));
    let parts = middle_parts(&edge);
    assert_eq!((parts.centroid, parts.core), (vec![0, 1], vec![0, 1]));

    let c6 = binary_caterpillar(6).unwrap();
    assert_eq!(middle_parts(&c6).centroid, vec![0, 1]);

    let c8 = binary_caterpillar(8).unwrap();
    let parts = middle_parts(&c8);
    assert_eq!((parts.centroid, parts.core), (vec![1], vec![1]));
    let brute = brute_subtrees(&c8);
    assert_eq!((brute.per_vertex[1], brute.per_vertex[5]), (50, 26));

    let k3 = rooted_binary_caterpillar(3).unwrap();
    assert_eq!(brute_subtrees(k3.tree()).per_vertex[0], 22);
    assert_eq!(rooted_subtree_counts(&k3)[0], big(22));

    let (t, center) = three_way_caterpillar(5, 3, 3).unwrap();
    assert_eq!(bfs_distance_sums(&t)[center], 21);
    assert_eq!(closed_form_sigma_t1(5, 3, 3).unwrap(), 21);
    let c10 = binary_caterpillar(10).unwrap();
    assert_eq!(bfs_distance_sums(&c10)[middle_parts(&c10).centroid[0]], 17);
}

#[test]
fn edge_list_round_trip() {
    let t = binary_caterpillar(8).unwrap();
    let text = t.to_edge_list();
    assert!(text.starts_with("n=8\n"));
    assert_eq!(Tree::from_edge_list(&text).unwrap(), t);
}

fn arb_tree(max_n: usize) -> impl Strategy<Value = Tree> {
    (3..=max_n).prop_flat_map(|n| proptest::collection::vec(0..n, n - 2).prop_map(|seq| prufer_decode(&seq)))
}

proptest! {
    #[test]
    fn profile_inequalities(t in arb_tree(30)) {
        let n = t.order() as u64;
        let sigma = distance_sums(&t);
        let f = subtree_counts(&t);
        for v in t.vertices() {
            prop_assert!(sigma[v] >= n - 1);
            prop_assert_eq!(sigma[v] == n - 1, t.degree(v) as u64 == n - 1);
            prop_assert!(f[v] >= big(t.degree(v) as u64 + 1));
        }
        prop_assert_eq!(sigma.iter().sum::<u64>(), 2 * wiener_index(&t));
    }

    #[test]
    fn rerooting_identities(t in arb_tree(30)) {
        let sigma = distance_sums(&t);
        let f = subtree_counts(&t);
        for (u, v) in t.edges() {
            let (nu, nv) = branch_sizes(&t, u, v).unwrap();
            prop_assert_eq!(nu + nv, t.order());
            prop_assert_eq!(sigma[v] as i64 - sigma[u] as i64, nu as i64 - nv as i64);
            let pair = subtree_count_pair(&t, u, v).unwrap();
            prop_assert_eq!(&f[v], &(side_subtree_count(&t, u, v).unwrap() + &pair));
            prop_assert_eq!(pair, side_subtree_count(&t, u, v).unwrap() * side_subtree_count(&t, v, u).unwrap());
        }
    }

    #[test]
    fn middle_parts_are_small_and_adjacent(t in arb_tree(40)) {
        let parts = middle_parts(&t);
        for set in [&parts.centroid, &parts.core] {
            prop_assert!(set.len() == 1 || set.len() == 2);
            if set.len() == 2 {
                prop_assert!(t.has_edge(set[0], set[1]));
            }
        }
    }

    #[test]
    fn codes_ignore_labels(t in arb_tree(24), seed in any::<u64>()) {
        let mut perm: Vec<usize> = t.vertices().collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(canonical_code(&relabel(&t, &perm)), canonical_code(&t));
        let back = parse_code(canonical_code(&t).as_str()).unwrap();
        prop_assert_eq!(canonical_code(&back), canonical_code(&t));
    }
}
