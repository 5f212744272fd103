use std::collections::BTreeSet;

use chordflip_core::oracle::{
    bipartite_complement_bruteforce, enumerate_matchings, gen_bicrossing_diagram, ColoredDiagram,
};
use chordflip_core::{
    complement, complement_representation, emit_dow, graphs_equal, interlacement_graph, parse_dow,
    two_color_complement, verify_certificate, BoundaryStatus, ChordColoring, ChordDiagram, Color,
    InterlacementGraph, PipelineError, Window,
};
use proptest::prelude::*;

/// Crossing oracle: restrict the word to the two labels and look for `uvuv`/`vuvu`.
fn alternates(d: &ChordDiagram, u: &str, v: &str) -> bool {
    let sub: Vec<&str> = d.word().into_iter().filter(|&l| l == u || l == v).collect();
    sub[0] != sub[1] && sub[1] != sub[2] && sub[2] != sub[3]
}

fn oracle_graph(d: &ChordDiagram) -> InterlacementGraph {
    let labels: Vec<&str> = d.labels().collect();
    let mut edges = Vec::new();
    for (i, u) in labels.iter().enumerate() {
        for v in &labels[i + 1..] {
            if alternates(d, u, v) {
                edges.push((u.to_string(), v.to_string()));
            }
        }
    }
    InterlacementGraph::new(labels.iter().copied(), edges).unwrap()
}

fn arb_diagram(max_n: usize) -> impl Strategy<Value = ChordDiagram> {
    (0..=max_n).prop_flat_map(arb_diagram_exact)
}

fn arb_diagram_and_window(max_n: usize) -> impl Strategy<Value = (ChordDiagram, Window)> {
    (1..=max_n).prop_flat_map(|n| {
        let m = 2 * n;
        (arb_diagram_exact(n), 0..m, 1..m).prop_map(|(d, s, l)| (d, Window::new(s, l)))
    })
}

/// Random perfect matching on 2n points via a shuffled position list.
fn arb_diagram_exact(n: usize) -> impl Strategy<Value = ChordDiagram> {
    Just((0..2 * n).collect::<Vec<usize>>()).prop_shuffle().prop_map(|perm| {
        let mut pairing = vec![0; perm.len()];
        for pair in perm.chunks(2) {
            pairing[pair[0]] = pair[1];
            pairing[pair[1]] = pair[0];
        }
        ChordDiagram::from_pairing(pairing).unwrap()
    })
}

fn arb_graph(max_v: usize) -> impl Strategy<Value = InterlacementGraph> {
    (0..=max_v).prop_flat_map(|v| {
        proptest::collection::vec(any::<bool>(), v * v.saturating_sub(1) / 2).prop_map(move |bits| {
            let names: Vec<String> = (0..v).map(|i| format!("v{i:02}")).collect();
            let mut edges = Vec::new();
            let mut k = 0;
            for i in 0..v {
                for j in i + 1..v {
                    if bits[k] {
                        edges.push((names[i].clone(), names[j].clone()));
                    }
                    k += 1;
                }
            }
            InterlacementGraph::new(names.clone(), edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn dow_round_trip(d in arb_diagram(12)) {
        prop_assert_eq!(parse_dow(&emit_dow(&d)).unwrap(), d);
    }

    #[test]
    fn interlacement_matches_alternation_oracle(d in arb_diagram(10)) {
        prop_assert!(graphs_equal(&interlacement_graph(&d), &oracle_graph(&d)));
    }

    #[test]
    fn crossing_is_symmetric(d in arb_diagram(8)) {
        let labels: Vec<&str> = d.labels().collect();
        for u in &labels {
            for v in &labels {
                if u != v {
                    prop_assert_eq!(d.chords_cross(u, v).unwrap(), d.chords_cross(v, u).unwrap());
                }
            }
        }
    }

    #[test]
    fn reverse_arc_is_an_involution((d, w) in arb_diagram_and_window(10)) {
        prop_assert_eq!(d.reverse_arc(&w).reverse_arc(&w), d);
    }

    #[test]
    fn flip_law_any_window_length((d, w) in arb_diagram_and_window(9)) {
        let after = d.reverse_arc(&w);
        let labels: Vec<&str> = d.labels().collect();
        for (i, u) in labels.iter().enumerate() {
            for v in &labels[i + 1..] {
                let both = d.boundary_status(&w, u).unwrap() == BoundaryStatus::Crossing
                    && d.boundary_status(&w, v).unwrap() == BoundaryStatus::Crossing;
                prop_assert_eq!(alternates(&after, u, v), alternates(&d, u, v) ^ both);
            }
        }
    }

    #[test]
    fn inside_and_outside_chords_never_cross((d, w) in arb_diagram_and_window(9)) {
        for a in d.chords() {
            for b in d.chords() {
                if d.boundary_status(&w, &a.label).unwrap() == BoundaryStatus::Inside
                    && d.boundary_status(&w, &b.label).unwrap() == BoundaryStatus::Outside
                {
                    prop_assert!(!alternates(&d, &a.label, &b.label));
                }
            }
        }
    }

    #[test]
    fn complement_is_an_involution(g in arb_graph(10)) {
        prop_assert!(graphs_equal(&complement(&complement(&g)), &g));
    }

    #[test]
    fn two_coloring_agrees_with_bruteforce(g in arb_graph(9)) {
        let brute = bipartite_complement_bruteforce(&g).unwrap();
        match two_color_complement(&g) {
            Ok(col) => {
                prop_assert!(brute);
                prop_assert!(col.classes_are_cliques(&g));
                // no edge of the complement is monochromatic
                for (u, v) in complement(&g).edges() {
                    prop_assert_ne!(col.get(u), col.get(v));
                }
            }
            Err(_) => prop_assert!(!brute),
        }
    }

    #[test]
    fn pipeline_on_generated_inputs(n in 1usize..=11, bits in any::<u32>()) {
        let m = 2 * n;
        let mut red: Vec<usize> = (0..m).filter(|p| bits >> p & 1 == 1).collect();
        if red.len() % 2 == 1 {
            red.pop();
        }
        let ColoredDiagram { diagram, .. } = gen_bicrossing_diagram(n, &red).unwrap();
        let (out, cert) = complement_representation(&diagram).unwrap();
        prop_assert_eq!(verify_certificate(&diagram, &out, &cert), Ok(()));
        prop_assert!(graphs_equal(&oracle_graph(&out), &complement(&oracle_graph(&diagram))));

        // Flipping the output needs the input's own interlacement to be
        // bipartite; when it is, the second flip recovers the input graph.
        let input_graph = interlacement_graph(&diagram);
        let flippable = bipartite_complement_bruteforce(&complement(&input_graph)).unwrap();
        match complement_representation(&out) {
            Ok((back, _)) => {
                prop_assert!(flippable);
                prop_assert!(graphs_equal(&interlacement_graph(&back), &input_graph));
            }
            Err(PipelineError::NotBipartite(_)) => prop_assert!(!flippable),
            Err(e) => prop_assert!(false, "{}", e),
        }
    }
}

#[test]
fn pipeline_is_deterministic() {
    let d = parse_dow("a b c a d b e c d e").unwrap();
    let first = complement_representation(&d);
    for _ in 0..5 {
        assert_eq!(complement_representation(&d), first);
    }
}

#[test]
fn oracle_agreement_on_all_small_diagrams() {
    for n in 0..=5 {
        for d in enumerate_matchings(n) {
            let g = interlacement_graph(&d);
            let brute = bipartite_complement_bruteforce(&g).unwrap();
            assert_eq!(two_color_complement(&g).is_ok(), brute, "{}", emit_dow(&d));
            match complement_representation(&d) {
                Ok(_) => assert!(brute),
                Err(PipelineError::NotBipartite(_)) => assert!(!brute),
                Err(e) => panic!("{}: {e}", emit_dow(&d)),
            }
        }
    }
}

fn coloring_key(col: &ChordColoring) -> String {
    col.0.values().map(|c| c.as_char()).collect()
}

#[test]
fn generator_is_complete_for_small_n() {
    for n in 0..=4 {
        let m = 2 * n;
        let mut filtered = BTreeSet::new();
        for d in enumerate_matchings(n) {
            let g = interlacement_graph(&d);
            let labels: Vec<String> = d.labels().map(String::from).collect();
            for mask in 0u32..1 << n {
                let col: ChordColoring = labels
                    .iter()
                    .enumerate()
                    .map(|(i, l)| (l.clone(), if mask >> i & 1 == 1 { Color::Red } else { Color::Blue }))
                    .collect();
                if col.classes_are_cliques(&g) {
                    filtered.insert((emit_dow(&d), coloring_key(&col)));
                }
            }
        }
        let mut generated = BTreeSet::new();
        let mut produced = 0;
        for mask in 0u32..1 << m {
            let red: Vec<usize> = (0..m).filter(|p| mask >> p & 1 == 1).collect();
            if red.len() % 2 == 1 {
                continue;
            }
            let cd = gen_bicrossing_diagram(n, &red).unwrap();
            generated.insert((emit_dow(&cd.diagram), coloring_key(&cd.coloring)));
            produced += 1;
        }
        // non-redundant: every red set yields a distinct coloured diagram
        assert_eq!(generated.len(), produced, "n = {n}");
        assert_eq!(filtered, generated, "n = {n}");
    }
}

#[test]
fn values_are_shareable_across_threads() {
    fn assert_send_sync<T: Send + Sync>() {}
    assert_send_sync::<ChordDiagram>();
    assert_send_sync::<InterlacementGraph>();
    assert_send_sync::<chordflip_core::FlipCertificate>();

    let d = std::sync::Arc::new(parse_dow("a b a c b d c d").unwrap());
    let handles: Vec<_> = (0..4)
        .map(|_| {
            let d = d.clone();
            std::thread::spawn(move || emit_dow(&complement_representation(&d).unwrap().0))
        })
        .collect();
    for h in handles {
        assert_eq!(h.join().unwrap(), "a b d b c a c d");
    }
}
