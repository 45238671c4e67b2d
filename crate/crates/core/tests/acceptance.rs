//! One PASS/FAIL line per acceptance criterion, with time caps.
//!
//! Criteria listed in `KNOWN_RED` fail for reasons outside the code (the
//! stated bound does not hold); they print FAIL with the numbers but do not
//! fail the run. Any other FAIL exits with status 1.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use arlab_core::bounds::{check_chain, Computed, Function};
use arlab_core::canon::canonical_form;
use arlab_core::budget::{Meter, SearchBudget, Status, Value};
use arlab_core::constructions::*;
use arlab_core::embed::{contains_subgraph, find_rainbow_in};
use arlab_core::enumerate::{levels_up_to, EnumOptions};
use arlab_core::firstfit::*;
use arlab_core::forcing::{ar_local, ar_size_exact, forces};
use arlab_core::game::*;
use arlab_core::notation::parse_pattern;
use arlab_core::params::{chromatic_index, vertex_cover_number};
use arlab_core::{Graph, Pattern};

const KNOWN_RED: &[u32] = &[10, 12];

fn pat(g: Graph) -> Pattern {
    Pattern::new(g).unwrap()
}

fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Decided values gathered along the way, keyed by canonical form.
#[derive(Default)]
struct Decided {
    sets: BTreeMap<String, (Pattern, Computed)>,
}

impl Decided {
    fn put(&mut self, h: &Pattern, f: Function, v: Value) {
        if v.exact().is_none() {
            return;
        }
        let key = canonical_form(h.graph()).unwrap();
        let slot = self.sets.entry(key).or_insert_with(|| (h.clone(), Computed::new()));
        slot.1.insert(f, v);
    }
}

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn c1(d: &mut Decided) -> Outcome {
    let b = SearchBudget::default();
    let mut got = Vec::new();
    for k in 1..=3 {
        let h = parse_pattern(&format!("M{k}")).unwrap();
        let r = ar_size_exact(&h, &b).unwrap();
        d.put(&h, Function::Size, r.value);
        got.push(r.value);
    }
    let want = [1, 3, 6].map(|v| Value::Exact { value: v });
    outcome(got == want, format!("AR_s(M_1..M_3) = {}, {}, {}", got[0], got[1], got[2]))
}

fn c2(_: &mut Decided) -> Outcome {
    let b = SearchBudget::default();
    let k4 = pat(Graph::complete(4));
    let yes = forces(&k4_witness().graph, &k4, &b).unwrap();
    let k6 = Graph::complete(6);
    let no = forces(&k6, &k4, &b).unwrap();
    let witness_ok = no.witness.as_ref().is_some_and(|c| {
        c.validate(&k6, true).is_ok()
            && c.is_proper(&k6)
            && c.distinct_colors().len() == 5
            && find_rainbow_in(&k6, c, k4.graph()).is_none()
    });
    outcome(
        yes.status == Status::Forces && no.status == Status::Refuted && witness_ok,
        format!(
            "k4-witness {:?} ({} edges), K6 {:?}, witness proper 5-color rainbow-free: {witness_ok}",
            yes.status,
            k4_witness().graph.m(),
            no.status
        ),
    )
}

fn c3(d: &mut Decided) -> Outcome {
    let k4 = pat(Graph::complete(4));
    let r = ar_local(&k4, 8, &SearchBudget::default()).unwrap();
    d.put(&k4, Function::Local, r.value);
    let step = r.steps.iter().find(|s| s.status == Status::Forces);
    let certified = step.is_some_and(|s| {
        s.n == 7 && s.certificate.as_deref() == Some("k4-witness") && contains_subgraph(&Graph::complete(7), &k4_witness().graph)
    });
    outcome(
        r.value == Value::Exact { value: 7 } && certified,
        format!("AR_loc(K4) = {}, forcing side certified by k4-witness: {certified}", r.value),
    )
}

fn c4(_: &mut Decided) -> Outcome {
    let b = SearchBudget::default();
    let mut suite: Vec<(ProvenancedGraph, usize)> = Vec::new();
    for k in 1..=4 {
        suite.push((stars_union(k).unwrap(), k * (k + 1) / 2));
    }
    suite.push((cycle_chain(4).unwrap(), 4 * 4 - 2 * 4 + 2));
    suite.push((cycle_chain(5).unwrap(), 5 * 5));
    for k in 2..=5 {
        suite.push((multi_path(k).unwrap(), binom2(k) + 1));
    }
    for k in 3..=5 {
        suite.push((multi_cycle(k).unwrap(), binom2(k)));
    }
    for level in levels_up_to(3, &EnumOptions::default()).unwrap() {
        for h in level.graphs {
            let k = h.m();
            suite.push((multi_replace(&h).unwrap(), k * (k + 1) / 2));
        }
    }
    let mut bad = Vec::new();
    for (p, closed) in &suite {
        let target = p.target_pattern().unwrap().unwrap();
        let v = forces(&p.graph, &target, &b).unwrap();
        if v.status != Status::Forces || p.graph.m() != *closed || p.predicted_edges != *closed {
            bad.push(format!("{} {:?} {} edges (closed form {closed})", p.name, v.status, p.graph.m()));
        }
    }
    let detail = if bad.is_empty() {
        format!("{} constructions force their targets, edge counts match", suite.len())
    } else {
        bad.join("; ")
    };
    outcome(bad.is_empty(), detail)
}

fn c5(_: &mut Decided) -> Outcome {
    let mut bad = Vec::new();
    for k in 1..=10 {
        for (name, g) in [("path", path_good(k).unwrap()), ("matching", matching_good(k).unwrap())] {
            if ff_replay(&g.graph, &g.coloring).unwrap() != g.coloring {
                bad.push(format!("{name}({k})"));
            }
        }
    }
    outcome(bad.is_empty(), format!("First-Fit replay is a fixed point for k = 1..10; mismatches: {bad:?}"))
}

fn c6(_: &mut Decided) -> Outcome {
    let mut bad = Vec::new();
    for k in 1..=10 {
        let p = path_good(k).unwrap();
        if !is_h_good(&p.graph, &p.coloring, &pat(Graph::path(k))).unwrap().is_good() {
            bad.push(format!("path({k}) not good"));
        }
        if 8 * p.graph.m() > k * k + 24 * k {
            bad.push(format!("path({k}) has {} edges", p.graph.m()));
        }
        let m = matching_good(k).unwrap();
        if !is_h_good(&m.graph, &m.coloring, &pat(Graph::matching(k))).unwrap().is_good() {
            bad.push(format!("matching({k}) not good"));
        }
        if !m.graph.is_bipartite() || m.graph.m() != k * k / 4 + k {
            bad.push(format!("matching({k}) has {} edges", m.graph.m()));
        }
    }
    outcome(bad.is_empty(), format!("good colorings, sizes and bipartiteness for k = 1..10; problems: {bad:?}"))
}

fn c7(d: &mut Decided) -> Outcome {
    let b = SearchBudget::default();
    let mut bad = Vec::new();
    let mut count = 0;
    let mut exact = 0;
    for level in levels_up_to(5, &EnumOptions::default()).unwrap().into_iter().skip(1) {
        for g in level.graphs {
            let h = pat(g);
            let k = h.k();
            count += 1;
            let chi = chromatic_index(h.graph(), u64::MAX).unwrap();
            let tau = vertex_cover_number(h.graph()).unwrap();
            let w = weights(h.graph(), &mut Meter::unlimited()).unwrap();
            let lo = w.w_max.div_ceil(2);
            let hi = 2 * w.w_greedy;
            if (k * k).div_ceil(4 * chi) > lo {
                bad.push(format!("{}: k^2/(4 chi') above w_max/2", h.name()));
            }
            if hi > (tau + 1) * k {
                bad.push(format!("{}: 2 w_greedy above (tau+1)k", h.name()));
            }
            let r = ar_ff_exact(&h, &b).unwrap();
            if r.value.exact().is_some() {
                exact += 1;
            }
            let inside = r.value.upper().is_some_and(|u| u <= hi && u >= lo) && r.value.lower() <= hi;
            if !inside {
                bad.push(format!("{}: AR_FF {} outside [{lo}, {hi}]", h.name(), r.value));
            }
            d.put(&h, Function::FirstFit, r.value);
        }
    }
    outcome(
        bad.is_empty(),
        format!("{count} patterns, {exact} decided exactly; problems: {bad:?}"),
    )
}

fn c8(_: &mut Decided) -> Outcome {
    let mut bad = Vec::new();
    for x in 1..=4 {
        for y in 1..=3 {
            let h = Graph::star(x).disjoint_union(&Graph::matching(y));
            let w = weights(&h, &mut Meter::unlimited()).unwrap();
            let want = x + y + y * (y + 1) / 2;
            if w.w_max != want || w.w_greedy != want {
                bad.push(format!("({x},{y}): {} / {} vs {want}", w.w_max, w.w_greedy));
            }
        }
    }
    outcome(bad.is_empty(), format!("w_max = w_greedy = x+y+y(y+1)/2 on 12 pairs; mismatches: {bad:?}"))
}

fn c9(d: &mut Decided) -> Outcome {
    let b = SearchBudget::default();
    let mut got = Vec::new();
    for (name, want) in [("M2", 3), ("P2", 2), ("P3", 4)] {
        let h = parse_pattern(name).unwrap();
        let r = ar_ff_exact(&h, &b).unwrap();
        d.put(&h, Function::FirstFit, r.value);
        got.push((h.name().to_string(), r.value, want));
    }
    let m2 = parse_pattern("M2").unwrap();
    let online = ar_online_exact(&m2, GameCaps::simple(6), &b).unwrap().value;
    let size = ar_size_exact(&m2, &b).unwrap().value;
    d.put(&m2, Function::Online, online);
    d.put(&m2, Function::Size, size);
    let three = Value::Exact { value: 3 };
    let ok = got.iter().all(|(_, v, w)| *v == Value::Exact { value: *w }) && online == three && size == three;
    let ff: Vec<String> = got.iter().map(|(n, v, _)| format!("{n}={v}")).collect();
    outcome(ok, format!("AR_FF {}; M2 chain AR_o = {online}, AR_s = {size}", ff.join(" ")))
}

fn painter_pool(h: &Pattern, multigraph: bool) -> Vec<Box<dyn Painter>> {
    let mut pool: Vec<Box<dyn Painter>> = vec![Box::new(FirstFitPainter)];
    for seed in 1..=20 {
        pool.push(Box::new(RandomPainter::new(seed)));
    }
    if h.k() <= 3 {
        pool.push(Box::new(MinimaxPainter::full(h, multigraph)));
    }
    pool
}

fn c10(_: &mut Decided) -> Outcome {
    let mut suite = Vec::new();
    for k in 1..=5 {
        suite.push((format!("P{k}"), true));
    }
    for k in 3..=5 {
        suite.push((format!("C{k}"), true));
    }
    for k in 1..=4 {
        suite.push((format!("M{k}"), false));
    }
    suite.push(("K4".to_string(), false));
    let mut square_bad = Vec::new();
    let mut refined_bad = Vec::new();
    for (name, refined) in suite {
        let h = parse_pattern(&name).unwrap();
        let k = h.k();
        for p in painter_pool(&h, false).iter_mut() {
            let mut b = GenericBuilder::new(&h).unwrap();
            let t = run_game(&mut b, p.as_mut(), &h, GameCaps::simple(k * k));
            if !t.result || t.edges_used > k * k {
                square_bad.push(format!("{} vs {}", h.name(), t.painter));
            } else if refined && t.edges_used > binom2(k) + 1 {
                refined_bad.push(format!("{} vs {}: {} > {}", h.name(), t.painter, t.edges_used, binom2(k) + 1));
            }
        }
    }
    outcome(
        square_bad.is_empty() && refined_bad.is_empty(),
        format!(
            "k^2 bound broken by {square_bad:?}; C(k,2)+1 bound for paths and cycles broken by {refined_bad:?}"
        ),
    )
}

fn c11(_: &mut Decided) -> Outcome {
    let mut bad = Vec::new();
    let mut worst = Vec::new();
    for k in 1..=6 {
        let h = parse_pattern(&format!("M{k}")).unwrap();
        let mut most = 0;
        for p in painter_pool(&h, true).iter_mut() {
            let mut b = MatchingMultiBuilder::new(k).unwrap();
            let bound = b.edge_bound();
            let t = run_game(&mut b, p.as_mut(), &h, GameCaps::multigraph(bound));
            let phases = t.checks.iter().filter(|c| c.label.starts_with("phase")).count();
            if !t.result || t.edges_used > bound || t.failed_checks().count() > 0 || (k > 1 && phases == 0) {
                bad.push(format!("M{k} vs {}", t.painter));
            }
            most = most.max(t.edges_used);
        }
        worst.push(most);
    }
    outcome(bad.is_empty(), format!("worst edges for k = 1..6: {worst:?}; failures: {bad:?}"))
}

fn c12(_: &mut Decided) -> Outcome {
    let mut structural_bad = Vec::new();
    let mut over = Vec::new();
    for n in (2..=14).step_by(2) {
        let r = kn_ff_coloring(n).unwrap();
        let kn = Graph::complete(n);
        let color = |u: usize, v: usize| {
            let e = kn.edges_between(u, v).next().unwrap();
            r.coloring[e] as usize
        };
        for i in 1..=n / 2 {
            // Pair i is vertices 2i-2, 2i-1; its clique is the first 2i vertices.
            let top = binom2(2 * i);
            let mut seen: Vec<usize> = Vec::new();
            for u in 0..2 * i {
                for v in u + 1..2 * i {
                    seen.push(color(u, v));
                }
            }
            seen.sort_unstable();
            if color(2 * i - 2, 2 * i - 1) != top || seen != (1..=top).collect::<Vec<_>>() {
                structural_bad.push(format!("n={n} i={i}"));
            }
        }
        let weight: usize = (1..=n / 2).map(|i| binom2(2 * i)).sum();
        if r.greedy.weight != weight {
            structural_bad.push(format!("n={n} greedy weight {}", r.greedy.weight));
        }
        if 6 * 2 * r.greedy.weight > n * n * n {
            over.push(format!("n={n}: 2w = {} > n^3/6 = {:.1}", 2 * r.greedy.weight, (n * n * n) as f64 / 6.0));
        }
    }
    outcome(
        structural_bad.is_empty() && over.is_empty(),
        format!("structure problems {structural_bad:?}; 2 w_greedy <= n^3/6 broken at {over:?}"),
    )
}

fn c13(d: &mut Decided) -> Outcome {
    // Local values for two small patterns, so the cited local-number
    // formulas are exercised as well.
    for name in ["M2", "P2"] {
        let h = parse_pattern(name).unwrap();
        let r = ar_local(&h, 8, &SearchBudget::default()).unwrap();
        d.put(&h, Function::Local, r.value);
    }
    let mut violations = Vec::new();
    let mut claimed = Vec::new();
    let mut sets = 0;
    for (h, computed) in d.sets.values() {
        sets += 1;
        let r = check_chain(h, computed);
        violations.extend(r.violations.iter().map(|f| format!("{}: {}", h.name(), f.anchor)));
        claimed.extend(r.claimed_inconsistent.iter().map(|f| format!("{}: {}", h.name(), f.anchor)));
    }
    outcome(
        violations.is_empty(),
        format!(
            "{sets} value sets, violations {violations:?}; claimed/inconsistent ({}): {claimed:?}",
            claimed.len()
        ),
    )
}

type Criterion = (u32, &'static str, Duration, fn(&mut Decided) -> Outcome);

fn main() {
    let min = |m: u64| Duration::from_secs(60 * m);
    let secs = Duration::from_secs(10);
    let criteria: [Criterion; 13] = [
        (1, "size numbers of small matchings", min(5), c1),
        (2, "K4 size witness and K6 refutation", min(10), c2),
        (3, "local number of K4", min(10), c3),
        (4, "construction forcing suite", min(20), c4),
        (5, "First-Fit replay fixed point", secs, c5),
        (6, "good colorings of the path and matching graphs", secs, c6),
        (7, "weight sandwich for all patterns up to 5 edges", min(30), c7),
        (8, "star plus matching weights", secs, c8),
        (9, "exact First-Fit values and the M2 chain", min(10), c9),
        (10, "generic builder guarantees", min(30), c10),
        (11, "multigraph matching builder", min(10), c11),
        (12, "K_n First-Fit coloring", secs, c12),
        (13, "inequality chain on decided values", secs, c13),
    ];
    let mut decided = Decided::default();
    let mut unexpected = 0;
    for (id, name, cap, run) in criteria {
        let start = Instant::now();
        let out = run(&mut decided);
        let took = start.elapsed();
        let ok = out.ok && took <= cap;
        let tag = if ok {
            "PASS"
        } else if KNOWN_RED.contains(&id) {
            "FAIL (known)"
        } else {
            unexpected += 1;
            "FAIL"
        };
        println!("{tag} [{id:>2}] {name} ({took:.2?}, cap {cap:?}): {}", out.detail);
    }
    if unexpected > 0 {
        std::process::exit(1);
    }
}
