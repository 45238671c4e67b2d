use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::firstfit::path_good;
use crate::graph::{Color, EdgeId, Graph, Vertex};
use crate::params::Pattern;

use super::{Builder, Game, Spec, Stop};

type Play = std::result::Result<(), Stop>;

/// Vertex order and per-vertex counts behind the generic strategy.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BuilderPlan {
    /// Pattern vertices in play order.
    pub order: Vec<Vertex>,
    /// Neighbors of each ordered vertex among the earlier ones.
    pub back_degrees: Vec<usize>,
    /// For each ordered vertex: edges among the vertices placed before its
    /// last neighbor.
    pub prefix_edges: Vec<usize>,
    /// `k + sum (prefix_edges[i] - deg + 1) * back_degrees[i + 1]`.
    pub refined_bound: usize,
}

impl BuilderPlan {
    /// Greedy order: next is the vertex with the most placed neighbors, ties
    /// to the lower index.
    pub fn new(h: &Graph) -> Self {
        let n = h.n();
        let mut placed = vec![false; n];
        let mut back = vec![0usize; n];
        let mut order = Vec::with_capacity(n);
        let mut back_degrees = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| !placed[v])
                .max_by_key(|&v| (back[v], std::cmp::Reverse(v)))
                .expect("an unplaced vertex remains");
            placed[v] = true;
            order.push(v);
            back_degrees.push(back[v]);
            for w in h.neighbors(v) {
                back[w] += 1;
            }
        }
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let prefix_edges: Vec<usize> = order
            .iter()
            .map(|&v| {
                let last = h.neighbors(v).map(|w| pos[w]).max().unwrap_or(0);
                h.edges().iter().filter(|&&(a, b)| pos[a] < last && pos[b] < last).count()
            })
            .collect();
        let mut refined = h.m() as i64;
        for i in 0..n.saturating_sub(1) {
            let term = prefix_edges[i] as i64 - h.degree(order[i]) as i64 + 1;
            refined += term.max(0) * back_degrees[i + 1] as i64;
        }
        BuilderPlan {
            order,
            back_degrees,
            prefix_edges,
            refined_bound: refined as usize,
        }
    }
}

/// Builds the target vertex by vertex. For each vertex it probes fresh
/// vertices joined one edge at a time to the images of its earlier
/// neighbors, dropping a probe as soon as Painter repeats a color of the
/// copy built so far. Dropped probes stay in the graph and are not reused.
pub struct GenericBuilder {
    h: Graph,
    plan: BuilderPlan,
    /// Probes dropped in the last game.
    pub abandoned: usize,
}

impl GenericBuilder {
    pub fn new(h: &Pattern) -> Result<Self> {
        h.require_no_isolated()?;
        Ok(GenericBuilder {
            h: h.graph().clone(),
            plan: BuilderPlan::new(h.graph()),
            abandoned: 0,
        })
    }

    pub fn plan(&self) -> &BuilderPlan {
        &self.plan
    }
}

impl Builder for GenericBuilder {
    fn name(&self) -> String {
        "generic".into()
    }

    fn play(&mut self, game: &mut Game<'_>) -> Play {
        let order = &self.plan.order;
        let mut pos = vec![0; order.len()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        // Image of each ordered vertex; created lazily by its first edge.
        let mut image: Vec<Option<Vertex>> = vec![None; order.len()];
        let mut copy_colors: BTreeSet<Color> = BTreeSet::new();
        self.abandoned = 0;
        for i in 1..order.len() {
            let mut back: Vec<usize> = self.h.neighbors(order[i]).map(|w| pos[w]).filter(|&j| j < i).collect();
            back.sort_unstable();
            back.dedup();
            if back.is_empty() {
                continue;
            }
            loop {
                let mut x: Option<Vertex> = None;
                let mut fresh_colors = Vec::new();
                let mut dropped = false;
                for &j in &back {
                    let p = game.present(Spec::of(x), Spec::of(image[j]))?;
                    x = Some(p.u);
                    image[j] = Some(p.v);
                    if copy_colors.contains(&p.color) {
                        dropped = true;
                        break;
                    }
                    fresh_colors.push(p.color);
                }
                if !dropped {
                    image[i] = x;
                    copy_colors.extend(fresh_colors);
                    break;
                }
                self.abandoned += 1;
            }
        }
        Ok(())
    }
}

/// First-Fit cycle strategy: present the path good graph for `k - 2` in
/// replay order, which forces a rainbow path with ends `u, v` against
/// First-Fit, then close it through fresh vertices joined to both ends.
pub struct CycleFfBuilder {
    k: usize,
    /// Probe pairs whose colors hit the path, in the last game.
    pub blocked: usize,
}

impl CycleFfBuilder {
    pub fn new(k: usize) -> Result<Self> {
        if k < 3 {
            return Err(Error::domain("cycle_ff_builder needs k >= 3"));
        }
        Ok(CycleFfBuilder { k, blocked: 0 })
    }

    /// Edges of the path stage plus two per probe vertex.
    pub fn edge_bound(&self) -> Result<usize> {
        Ok(path_good(self.k - 2)?.graph.m() + 4 * self.k)
    }
}

impl Builder for CycleFfBuilder {
    fn name(&self) -> String {
        format!("cycle-ff({})", self.k)
    }

    fn play(&mut self, game: &mut Game<'_>) -> Play {
        let k = self.k;
        let pg = path_good(k - 2).map_err(|e| Stop::Illegal {
            offender: super::Offender::Builder,
            reason: e.to_string(),
        })?;
        let colors = pg.coloring.complete_colors().expect("good colorings are complete");
        let mut order: Vec<EdgeId> = (0..pg.graph.m()).collect();
        order.sort_by_key(|&e| (colors[e], e));
        let mut image: Vec<Option<Vertex>> = vec![None; pg.graph.n()];
        let mut followed = true;
        let mut got = vec![0 as Color; pg.graph.m()];
        for e in order {
            let (a, b) = pg.graph.edge(e);
            let p = game.present(Spec::of(image[a]), Spec::of(image[b]))?;
            image[a] = Some(p.u);
            image[b] = Some(p.v);
            got[e] = p.color;
            followed &= p.color == colors[e];
        }
        game.record_check(
            "opponent plays First-Fit",
            followed,
            if followed {
                "path stage colored as replayed"
            } else {
                "path stage colors differ from the replay; no guarantee"
            },
        );
        let path = &pg.rainbow_witness;
        let u = image[path.vertex_map[0]].expect("path end placed");
        let v = image[path.vertex_map[k - 2]].expect("path end placed");
        let path_colors: BTreeSet<Color> = path.edge_map.iter().map(|&e| got[e]).collect();
        self.blocked = 0;
        for _ in 0..2 * k {
            let first = game.present(Spec::Fresh, Spec::Existing(u))?;
            let second = game.present(Spec::Existing(first.u), Spec::Existing(v))?;
            if path_colors.contains(&first.color) || path_colors.contains(&second.color) {
                self.blocked += 1;
                continue;
            }
            break;
        }
        game.record_check(
            "blocked probe pairs",
            !followed || self.blocked <= 2 * (k - 2),
            format!("{} blocked, bound {}", self.blocked, 2 * (k - 2)),
        );
        Ok(())
    }
}

/// Multigraph matching strategy. Phase `i` presents two bundles of
/// `ceil(i/3)` parallel edges and keeps a rainbow matching `F` of size `i`
/// plus a reserve vertex of degree `ceil(i/3)` that `F` avoids and whose
/// newly colored edges avoid `F`.
pub struct MatchingMultiBuilder {
    k: usize,
}

impl MatchingMultiBuilder {
    pub fn new(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::domain("matching_multi_builder needs k >= 1"));
        }
        Ok(MatchingMultiBuilder { k })
    }

    /// `sum_{i=1..k} 2 ceil(i/3)`.
    pub fn edge_bound(&self) -> usize {
        (1..=self.k).map(|i| 2 * i.div_ceil(3)).sum()
    }
}

fn bundle(game: &mut Game<'_>, a: Option<Vertex>, b: Option<Vertex>, size: usize) -> std::result::Result<(Vertex, Vertex, Vec<EdgeId>), Stop> {
    let (mut a, mut b) = (a, b);
    let mut edges = Vec::with_capacity(size);
    for _ in 0..size {
        let p = game.present(Spec::of(a), Spec::of(b))?;
        a = Some(p.u);
        b = Some(p.v);
        edges.push(p.edge);
    }
    Ok((a.unwrap(), b.unwrap(), edges))
}

/// `None` when the phase invariant holds, else what broke.
fn phase_violation(g: &Graph, c: &crate::graph::EdgeColoring, f: &[EdgeId], reserve: Vertex, i: usize) -> Option<String> {
    let f_colors: BTreeSet<Color> = f.iter().filter_map(|&e| c.get(e)).collect();
    if f.len() != i || f_colors.len() != i {
        return Some(format!("F has {} edges and {} colors, expected {i}", f.len(), f_colors.len()));
    }
    let mut covered = BTreeSet::new();
    for &e in f {
        let (a, b) = g.edge(e);
        if !covered.insert(a) || !covered.insert(b) {
            return Some("F is not a matching".into());
        }
    }
    if g.degree(reserve) != i.div_ceil(3) {
        return Some(format!("reserve degree {} != {}", g.degree(reserve), i.div_ceil(3)));
    }
    if covered.contains(&reserve) {
        return Some("reserve vertex is covered by F".into());
    }
    for &e in g.incident(reserve) {
        let new = c.get(e).is_some_and(|col| !f_colors.contains(&col));
        if new && covered.contains(&g.other_end(e, reserve)) {
            return Some(format!("edge {e} at the reserve has a new color and touches F"));
        }
    }
    None
}

impl Builder for MatchingMultiBuilder {
    fn name(&self) -> String {
        format!("matching-multi({})", self.k)
    }

    fn play(&mut self, game: &mut Game<'_>) -> Play {
        let first = game.present(Spec::Fresh, Spec::Fresh)?;
        let second = game.present(Spec::Fresh, Spec::Fresh)?;
        let mut f = vec![first.edge];
        let mut reserve = second.u;
        self.check(game, &f, reserve, 1);
        for i in 2..=self.k {
            let size = i.div_ceil(3);
            let prev = reserve;
            let (_, v, _) = bundle(game, Some(prev), None, size)?;
            let f_colors: BTreeSet<Color> = f.iter().filter_map(|&e| game.coloring().get(e)).collect();
            let is_new = |game: &Game<'_>, e: EdgeId| game.coloring().get(e).is_some_and(|c| !f_colors.contains(&c));
            let at_prev = game.graph().incident(prev).iter().copied().find(|&e| is_new(game, e));
            match at_prev {
                Some(e) => {
                    let (u, _, _) = bundle(game, None, None, size)?;
                    f.push(e);
                    reserve = u;
                }
                None => {
                    let (_, _, edges) = bundle(game, Some(prev), None, size)?;
                    // Degree at `prev` now exceeds the i - 1 colors of F.
                    let Some(e) = edges.into_iter().find(|&e| is_new(game, e)) else {
                        game.record_check(format!("phase {i}"), false, "no new color at the reserve vertex");
                        return Ok(());
                    };
                    f.push(e);
                    reserve = v;
                }
            }
            self.check(game, &f, reserve, i);
        }
        Ok(())
    }
}

impl MatchingMultiBuilder {
    fn check(&self, game: &mut Game<'_>, f: &[EdgeId], reserve: Vertex, i: usize) {
        let broken = phase_violation(game.graph(), game.coloring(), f, reserve, i);
        let detail = broken.clone().unwrap_or_else(|| format!("|F| = {i}, reserve {reserve}"));
        game.record_check(format!("phase {i}"), broken.is_none(), detail);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{run_game, FirstFitPainter, GameCaps, RandomPainter};

    fn pat(g: Graph) -> Pattern {
        Pattern::new(g).unwrap()
    }

    #[test]
    fn plans_for_paths_and_cycles() {
        let p = BuilderPlan::new(&Graph::path(3));
        assert_eq!(p.order, vec![0, 1, 2, 3]);
        assert_eq!(p.back_degrees, vec![0, 1, 1, 1]);
        assert_eq!(p.refined_bound, 4);
        let c = BuilderPlan::new(&Graph::cycle(5));
        assert_eq!(c.order, vec![0, 1, 2, 3, 4]);
        assert_eq!(c.back_degrees, vec![0, 1, 1, 1, 2]);
        assert_eq!(c.back_degrees.iter().sum::<usize>(), 5);
        for k in 2..=6 {
            assert_eq!(BuilderPlan::new(&Graph::path(k)).refined_bound, k * (k - 1) / 2 + 1);
        }
    }

    #[test]
    fn generic_wins_small_games() {
        for (h, bound) in [(Graph::path(2), 2), (Graph::cycle(3), 4), (Graph::matching(2), 3)] {
            let h = pat(h);
            let mut b = GenericBuilder::new(&h).unwrap();
            let t = run_game(&mut b, &mut FirstFitPainter, &h, GameCaps::simple(100));
            assert!(t.result, "{}", h.name());
            assert!(t.edges_used <= bound, "{} used {}", h.name(), t.edges_used);
        }
    }

    #[test]
    fn cycle_ff_closes_the_cycle() {
        for k in [3, 4, 5] {
            let h = pat(Graph::cycle(k));
            let mut b = CycleFfBuilder::new(k).unwrap();
            let bound = b.edge_bound().unwrap();
            let t = run_game(&mut b, &mut FirstFitPainter, &h, GameCaps::simple(200));
            assert!(t.result, "C{k}");
            assert!(t.edges_used <= bound);
            assert_eq!(t.failed_checks().count(), 0);
        }
    }

    #[test]
    fn matching_multi_keeps_its_invariant() {
        for k in 1..=6 {
            let h = pat(Graph::matching(k));
            let mut b = MatchingMultiBuilder::new(k).unwrap();
            for seed in 1..=5 {
                let t = run_game(&mut b, &mut RandomPainter::new(seed), &h, GameCaps::multigraph(100));
                assert!(t.result);
                assert!(t.edges_used <= b.edge_bound());
                assert_eq!(t.failed_checks().count(), 0, "{:?}", t.checks);
            }
        }
    }
}
