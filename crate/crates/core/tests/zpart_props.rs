use std::collections::HashSet;

use proptest::prelude::*;
use zrel_core::zpart::{compose, enumerate, ComponentKind, Vertex, ZStablePartition};

/// Joins a random partition with its sign flip, which is always stable.
fn stable_from_labels(k: usize, rows: usize, labels: &[usize]) -> Vec<Vec<Vertex>> {
    let n = 2 * k * rows;
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut v: usize) -> usize {
        while p[v] != v {
            p[v] = p[p[v]];
            v = p[v];
        }
        v
    }
    for u in 0..n {
        for v in u + 1..n {
            if labels[u] == labels[v] {
                for (a, b) in [(u, v), (u ^ 1, v ^ 1)] {
                    let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                    parent[ra] = rb;
                }
            }
        }
    }
    let mut blocks: Vec<Vec<Vertex>> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for v in 0..n {
        let r = find(&mut parent, v);
        if slot[r] == usize::MAX {
            slot[r] = blocks.len();
            blocks.push(Vec::new());
        }
        blocks[slot[r]].push(Vertex::from_id(v, k));
    }
    blocks
}

fn diagram_strategy(k: usize, rows: usize) -> impl Strategy<Value = ZStablePartition> {
    let n = 2 * k * rows;
    proptest::collection::vec(0..n, n).prop_map(move |labels| {
        ZStablePartition::canonicalize(stable_from_labels(k, rows, &labels), k, rows).unwrap()
    })
}

/// Set partitions of `n` points as restricted growth strings.
fn growth_strings(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0; n];
    fn rec(i: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for c in 0..=max + 1 {
            cur[i] = c;
            rec(i + 1, max.max(c), cur, out);
        }
    }
    if n > 0 {
        rec(1, 0, &mut cur, &mut out);
    }
    out
}

fn stable_string(s: &[usize]) -> bool {
    (0..s.len()).all(|u| (0..s.len()).all(|v| (s[u] == s[v]) == (s[u ^ 1] == s[v ^ 1])))
}

#[test]
fn one_row_counts_match_brute_force() {
    for k in 1..=3 {
        let oracle = growth_strings(2 * k)
            .into_iter()
            .filter(|s| stable_string(s))
            .count();
        assert_eq!(enumerate(k, 1).unwrap().len(), oracle, "k={k}");
    }
}

#[test]
fn two_row_counts() {
    assert_eq!(enumerate(1, 2).unwrap().len(), 7);
    assert_eq!(enumerate(2, 2).unwrap().len(), 164);
    let oracle = growth_strings(8)
        .into_iter()
        .filter(|s| stable_string(s))
        .count();
    assert_eq!(oracle, 164);
}

#[test]
fn enumerated_diagrams_are_stable_with_paired_classes() {
    for k in 1..=2 {
        let all = enumerate(k, 2).unwrap();
        let distinct: HashSet<_> = all.iter().collect();
        assert_eq!(distinct.len(), all.len());
        for d in &all {
            let blocks = d.blocks();
            assert!(zrel_core::zpart::is_z2_stable(&blocks), "{d}");
            for b in &blocks {
                match d.kind_of(b).unwrap() {
                    ComponentKind::Z2Class => assert_eq!(b.len() % 2, 0, "{d}"),
                    ComponentKind::EPair => {
                        let mut image: Vec<Vertex> = b.iter().map(|v| v.flip()).collect();
                        image.sort();
                        assert!(blocks.iter().any(|c| {
                            let mut c = c.clone();
                            c.sort();
                            c == image
                        }));
                    }
                }
            }
        }
    }
}

fn check_assoc(a: &ZStablePartition, b: &ZStablePartition, c: &ZStablePartition) {
    let (ab, l1) = compose(a, b).unwrap();
    let (ab_c, l2) = compose(&ab, c).unwrap();
    let (bc, l3) = compose(b, c).unwrap();
    let (a_bc, l4) = compose(a, &bc).unwrap();
    assert_eq!(ab_c, a_bc);
    assert_eq!(l1 + l2, l3 + l4);
}

#[test]
fn compose_associative_k1() {
    let all = enumerate(1, 2).unwrap();
    for a in &all {
        for b in &all {
            for c in &all {
                check_assoc(a, b, c);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn canonicalize_is_idempotent(d in diagram_strategy(2, 2), seed in any::<u64>()) {
        let mut blocks = d.blocks();
        // scramble block and vertex order
        let n = blocks.len();
        blocks.rotate_left((seed as usize) % n.max(1));
        for b in blocks.iter_mut() {
            b.reverse();
        }
        let again = ZStablePartition::canonicalize(blocks, 2, 2).unwrap();
        prop_assert_eq!(&again, &d);
        let twice = ZStablePartition::canonicalize(again.blocks(), 2, 2).unwrap();
        prop_assert_eq!(twice, again);
    }

    #[test]
    fn compose_associative_k2(a in diagram_strategy(2, 2), b in diagram_strategy(2, 2), c in diagram_strategy(2, 2)) {
        check_assoc(&a, &b, &c);
    }

    #[test]
    fn propagating_number_never_grows(a in diagram_strategy(2, 2), b in diagram_strategy(2, 2)) {
        let (ab, _) = compose(&a, &b).unwrap();
        prop_assert!(ab.propagating_number() <= a.propagating_number().min(b.propagating_number()));
    }

    #[test]
    fn json_roundtrip(d in diagram_strategy(3, 2)) {
        prop_assert_eq!(ZStablePartition::from_json(&d.to_json()).unwrap(), d);
    }
}
