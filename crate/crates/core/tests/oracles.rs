//! Fast deciders checked against slow, obviously-correct ones.

mod common;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wordrep::{find_word_bruteforce, is_comparability, Graph, Orientation, Recognizer, SearchConfig, VertexSet};

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

#[test]
fn corpus_sizes() {
    assert_eq!(common::small_graphs().len(), 1 + 2 + 4 + 11 + 34);
    assert_eq!(common::six_vertex_graphs().len(), 156);
}

#[test]
fn pruned_checker_matches_naive_on_every_small_orientation() {
    for g in common::small_graphs() {
        for o in Orientation::all(&g) {
            assert_eq!(o.is_semi_transitive(), o.is_semi_transitive_naive().unwrap(), "{g:?} {:?}", o);
            if o.is_acyclic() {
                let witness = o.violating_path().unwrap();
                assert_eq!(witness.is_none(), o.is_semi_transitive());
                assert!(witness.is_none_or(|v| v.verify(&o)));
            }
        }
    }
}

#[test]
fn pruned_checker_matches_naive_on_random_orientations() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..10_000 {
        let n = rng.gen_range(1..=8);
        let p = rng.gen_range(0.2..0.9);
        let g = random_graph(&mut rng, n, p);
        let key: Vec<i64> = (0..n).map(|_| rng.gen_range(0..1000)).collect();
        let o = if rng.gen_bool(0.5) {
            let mut order: Vec<i64> = (0..n as i64).collect();
            order.sort_by_key(|&i| key[i as usize]);
            Orientation::from_order(&g, &order).unwrap()
        } else {
            // Arbitrary directions, cycles allowed.
            Orientation::from_edge_mask(&g, rng.gen::<u64>())
        };
        assert_eq!(o.is_semi_transitive(), o.is_semi_transitive_naive().unwrap(), "{g:?}");
    }
}

#[test]
fn backtracking_matches_enumeration() {
    let r = Recognizer::default();
    for g in common::small_graphs() {
        let all: Vec<Orientation> = Orientation::all(&g).filter(|o| o.is_semi_transitive()).collect();
        let found = r.exists_semi_transitive_orientation(&g).unwrap();
        assert_eq!(found.is_some(), !all.is_empty(), "{g:?}");
        assert_eq!(r.count_semi_transitive_orientations(&g).unwrap(), all.len() as u64, "{g:?}");

        let transitive = Orientation::all(&g).any(|o| o.is_transitive());
        let t = r.exists_transitive_orientation(&g).unwrap();
        assert_eq!(t.is_some(), transitive, "{g:?}");
    }
}

#[test]
fn every_graph_on_five_vertices_is_word_representable() {
    for g in common::small_graphs() {
        assert!(Recognizer::default().is_word_representable(&g).unwrap());
    }
}

#[test]
fn only_the_wheel_fails_on_six_vertices() {
    let r = Recognizer::default();
    let bad: Vec<Graph> =
        common::six_vertex_graphs().into_iter().filter(|g| !r.is_word_representable(g).unwrap()).collect();
    assert_eq!(bad.len(), 1);
    assert!(bad[0].is_isomorphic(&Graph::wheel(5).unwrap()).unwrap());
}

#[test]
fn word_search_agrees_with_recognizer() {
    for g in common::small_graphs() {
        let w = find_word_bruteforce(&g, 3).unwrap();
        let w = w.unwrap_or_else(|| panic!("no word for {g:?}"));
        assert!(w.represents(&g).unwrap());
    }
    let w5 = Graph::wheel(5).unwrap();
    assert_eq!(find_word_bruteforce(&w5, 2).unwrap(), None);
}

#[test]
fn transitive_search_matches_enumeration_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..300 {
        let n = rng.gen_range(1..=6);
        let g = random_graph(&mut rng, n, 0.5);
        if g.edge_count() > 14 {
            continue;
        }
        let brute = Orientation::all(&g).any(|o| o.is_transitive());
        assert_eq!(is_comparability(&g).unwrap(), brute, "{g:?}");
    }
}

#[test]
fn edge_orders_agree_on_corpus() {
    use wordrep::EdgeOrder::*;
    for g in common::six_vertex_graphs() {
        let verdicts: Vec<bool> = [DegreeAscending, Lexicographic, Connected]
            .map(|e| Recognizer::new(SearchConfig::default().with_edge_order(e)).is_word_representable(&g).unwrap())
            .to_vec();
        assert!(verdicts.windows(2).all(|w| w[0] == w[1]), "{g:?}");
    }
}

#[test]
fn source_freedom_on_six_vertices() {
    for g in common::small_graphs().into_iter().chain(common::six_vertex_graphs()) {
        if !Recognizer::default().is_word_representable(&g).unwrap() {
            continue;
        }
        for v in 0..g.vertex_count() {
            let r = Recognizer::new(SearchConfig::default().with_source(v));
            let o = r.exists_semi_transitive_orientation(&g).unwrap().expect("source freedom");
            assert!(o.source_of(v).unwrap());
        }
    }
}

#[test]
fn hereditary_consistency() {
    let r = Recognizer::default();
    for g in common::six_vertex_graphs() {
        let wr = r.is_word_representable(&g).unwrap();
        let comp = r.is_comparability(&g).unwrap();
        for v in 0..g.vertex_count() {
            let h = g.delete_vertex(v).unwrap();
            assert!(!wr || r.is_word_representable(&h).unwrap());
            assert!(!comp || r.is_comparability(&h).unwrap());
        }
    }
}

#[test]
fn minimal_subgraph_shrinking() {
    let r = Recognizer::default();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..40 {
        let g = random_graph(&mut rng, 7, 0.5);
        match r.minimal_non_comparability_subgraph(&g).unwrap() {
            None => assert!(r.is_comparability(&g).unwrap()),
            Some(s) => {
                let h = g.induced_subgraph(s).unwrap();
                assert!(r.is_minimal_non_comparability(&h).unwrap());
            }
        }
    }
    let w5 = Graph::wheel(5).unwrap();
    assert_eq!(r.minimal_non_word_representable_subgraph(&w5).unwrap(), Some(VertexSet::full(6)));
}

#[test]
fn graph6_round_trip_on_seeded_corpus_and_families() {
    use wordrep::{emit_graph6, generate, parse_graph6, Family, FamilySpec};
    let mut rng = ChaCha8Rng::seed_from_u64(1000);
    let mut graphs: Vec<Graph> = (0..1000)
        .map(|_| {
            let n = rng.gen_range(0..=64);
            let p = rng.gen_range(0.0..1.0);
            random_graph(&mut rng, n, p)
        })
        .collect();
    for f in Family::ALL {
        match f.floor() {
            Some(lo) => {
                graphs.extend((lo..=lo + 4).map(|n| generate(&FamilySpec::new(f, Some(n)).unwrap()).unwrap().graph))
            }
            None => graphs.push(generate(&FamilySpec::new(f, None).unwrap()).unwrap().graph),
        }
    }
    for g in graphs {
        let s = emit_graph6(&g);
        assert_eq!(parse_graph6(&s).unwrap(), g);
        assert_eq!(emit_graph6(&parse_graph6(&s).unwrap()), s);
    }
}
