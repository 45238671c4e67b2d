//! Fast engines against brute-force references, and invariants under random
//! inputs.

use proptest::prelude::*;

use arlab_core::canon::{canonical_form, colored_key, ColorMode};
use arlab_core::codec::{from_graph6, from_json, to_graph6, to_json};
use arlab_core::embed::find_rainbow_in;
use arlab_core::firstfit::{ff_replay, find_good_coloring, is_h_good};
use arlab_core::forcing::{forces, forces_naive};
use arlab_core::game::*;
use arlab_core::notation::parse_pattern;
use arlab_core::params::{chromatic_index, greedy_in_order, greedy_proper_coloring, matching_number, vertex_cover_number};
use arlab_core::budget::{Meter, SearchBudget, Status};
use arlab_core::{Color, EdgeColoring, Graph, Pattern};

/// Simple graph on `n` vertices from a bitmask over vertex pairs.
fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

fn graphs(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| any::<u64>().prop_map(move |m| graph_from_mask(n, m)))
}

/// A graph with at most `max_m` edges.
fn sparse_graphs(max_n: usize, max_m: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(move |n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        proptest::sample::subsequence(pairs, 0..=max_m.min(n * (n - 1) / 2))
            .prop_map(move |es| Graph::from_edges(n, &es).unwrap())
    })
}

fn small_patterns() -> Vec<Pattern> {
    ["P1", "P2", "P3", "M2", "C3", "K1,3", "M3"]
        .iter()
        .map(|s| parse_pattern(s).unwrap())
        .collect()
}

/// Every injective vertex map, checking each pattern edge for a host edge
/// with a color not used before.
fn rainbow_brute(g: &Graph, c: &EdgeColoring, h: &Graph) -> bool {
    fn rec(g: &Graph, c: &EdgeColoring, h: &Graph, map: &mut Vec<usize>) -> bool {
        if map.len() == h.n() {
            let mut colors: Vec<Color> = Vec::new();
            for &(a, b) in h.edges() {
                let Some(e) = g.edges_between(map[a], map[b]).next() else { return false };
                let Some(col) = c.get(e) else { return false };
                if colors.contains(&col) {
                    return false;
                }
                colors.push(col);
            }
            return true;
        }
        for v in 0..g.n() {
            if map.contains(&v) {
                continue;
            }
            map.push(v);
            if rec(g, c, h, map) {
                return true;
            }
            map.pop();
        }
        false
    }
    rec(g, c, h, &mut Vec::new())
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rainbow_search_matches_brute_force(g in graphs(6), seed in any::<u64>(), which in 0usize..7) {
        let h = &small_patterns()[which];
        let colors: Vec<Color> = (0..g.m()).map(|e| 1 + ((seed >> (2 * (e % 32))) & 3) as Color).collect();
        let c = EdgeColoring::from_colors(colors).unwrap();
        let fast = find_rainbow_in(&g, &c, h.graph());
        prop_assert_eq!(fast.is_some(), rainbow_brute(&g, &c, h.graph()));
        if let Some(emb) = fast {
            prop_assert!(emb.is_valid(&g, &c, h.graph()));
        }
    }

    #[test]
    fn canonical_form_ignores_labels(g in graphs(7), perm_seed in any::<u64>()) {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = perm_seed;
        for i in (1..n).rev() {
            perm.swap(i, (s % (i as u64 + 1)) as usize);
            s /= i as u64 + 1;
        }
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
    }

    #[test]
    fn colored_key_ignores_labels_and_palette(g in graphs(6), perm in permutation(6), shift in 1u32..5) {
        let perm: Vec<usize> = perm.into_iter().filter(|&v| v < g.n()).collect();
        let c = greedy_proper_coloring(&g);
        let h = g.relabel(&perm).unwrap();
        let renamed = EdgeColoring::from_colors(
            (0..g.m()).map(|e| c.get(e).unwrap() + shift).collect()
        ).unwrap();
        prop_assert_eq!(
            colored_key(&g, &c, ColorMode::UpToPalette, 16).unwrap(),
            colored_key(&h, &renamed, ColorMode::UpToPalette, 16).unwrap()
        );
        prop_assert_eq!(
            colored_key(&g, &c, ColorMode::Absolute, 16).unwrap(),
            colored_key(&h, &c, ColorMode::Absolute, 16).unwrap()
        );
    }

    #[test]
    fn greedy_colorings_are_proper(g in graphs(7), order in permutation(21)) {
        prop_assert!(greedy_proper_coloring(&g).is_proper(&g));
        let order: Vec<usize> = order.into_iter().filter(|&e| e < g.m()).collect();
        if order.len() == g.m() {
            prop_assert!(greedy_in_order(&g, &order).is_proper(&g));
        }
    }

    #[test]
    fn chromatic_index_is_max_degree_or_one_more(g in graphs(6)) {
        prop_assume!(g.m() > 0);
        let chi = chromatic_index(&g, u64::MAX).unwrap();
        let d = g.max_degree();
        prop_assert!(chi == d || chi == d + 1, "chi' {} with max degree {}", chi, d);
    }

    #[test]
    fn cover_sits_between_matching_and_twice_matching(g in graphs(8)) {
        let nu = matching_number(&g);
        let tau = vertex_cover_number(&g).unwrap();
        prop_assert!(nu <= tau && tau <= 2 * nu);
    }

    #[test]
    fn graph6_and_json_round_trip(g in graphs(9)) {
        let back = from_graph6(&to_graph6(&g).unwrap()).unwrap();
        prop_assert_eq!(back.edges().len(), g.m());
        prop_assert_eq!(canonical_form(&back).unwrap(), canonical_form(&g).unwrap());
        let c = greedy_proper_coloring(&g);
        let (g2, c2) = from_json(&to_json(&g, Some(&c))).unwrap();
        prop_assert_eq!(g2.edges(), g.edges());
        prop_assert_eq!(c2, Some(c));
    }

    #[test]
    fn painter_options_are_feasible(g in sparse_graphs(6, 8), seed in any::<u64>()) {
        prop_assume!(g.m() > 0);
        let mut c = greedy_proper_coloring(&g);
        let e = (seed % g.m() as u64) as usize;
        c.unset(e);
        for col in painter_options(&g, &c, e) {
            let mut c2 = c.clone();
            c2.set(e, col);
            prop_assert!(c2.is_proper(&g));
        }
    }

    #[test]
    fn transcripts_replay_to_the_same_game(seed in 1u64..500, which in 0usize..7) {
        let h = &small_patterns()[which];
        let mut b = GenericBuilder::new(h).unwrap();
        let mut p = RandomPainter::new(seed);
        let k = h.k();
        let t = run_game(&mut b, &mut p, h, GameCaps::simple(k * k));
        prop_assert!(t.result);
        prop_assert!(t.edges_used <= k * k);
        let (g, c, won) = replay(&t.moves, false, h).unwrap();
        prop_assert_eq!(&g, &t.graph);
        prop_assert_eq!(&c, &t.coloring);
        prop_assert!(won && c.is_proper(&g));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn forcing_matches_naive_search(g in sparse_graphs(6, 6), which in 0usize..6) {
        let h = &small_patterns()[which];
        let v = forces(&g, h, &SearchBudget::default()).unwrap();
        let naive = forces_naive(&g, h);
        prop_assert_eq!(v.status == Status::Forces, naive);
        if let Some(w) = v.witness {
            prop_assert!(w.is_proper(&g));
            prop_assert!(find_rainbow_in(&g, &w, h.graph()).is_none());
        }
    }

    #[test]
    fn good_colorings_are_first_fit_fixed_points(g in sparse_graphs(6, 6), which in 0usize..5) {
        let h = &small_patterns()[which];
        if let Some(Some(c)) = find_good_coloring(&g, h, &mut Meter::unlimited()).unwrap() {
            prop_assert!(is_h_good(&g, &c, h).unwrap().is_good());
            prop_assert_eq!(ff_replay(&g, &c).unwrap(), c);
        }
    }
}
