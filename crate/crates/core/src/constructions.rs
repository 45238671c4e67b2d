//! Explicit forcing graphs, each with its closed-form edge count.

use serde::Serialize;

use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::graph::{Color, EdgeColoring, Embedding, Graph, Vertex};
use crate::params::Pattern;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Claim {
    /// Every proper coloring contains a rainbow copy of the target.
    Forces,
    /// Shape only, no claim attached.
    Shape,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProvenancedGraph {
    pub name: String,
    pub graph: Graph,
    pub target: Option<Graph>,
    pub claim: Claim,
    /// How the graph is built and why the claim holds, in one line.
    pub basis: &'static str,
    pub predicted_edges: usize,
}

impl ProvenancedGraph {
    fn new(
        name: String,
        graph: Graph,
        target: Option<Graph>,
        claim: Claim,
        basis: &'static str,
        predicted_edges: usize,
    ) -> Self {
        debug_assert_eq!(graph.m(), predicted_edges, "{name}");
        ProvenancedGraph {
            name,
            graph,
            target,
            claim,
            basis,
            predicted_edges,
        }
    }

    pub fn target_pattern(&self) -> Result<Option<Pattern>> {
        self.target.clone().map(Pattern::new).transpose()
    }
}

fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Disjoint stars with 1, 2, ..., k edges.
pub fn stars_union(k: usize) -> Result<ProvenancedGraph> {
    if k == 0 {
        return Err(Error::domain("stars_union needs k >= 1"));
    }
    let mut g = Graph::new(0);
    for size in 1..=k {
        let center = g.add_vertex();
        for _ in 0..size {
            let leaf = g.add_vertex();
            g.add_edge(center, leaf)?;
        }
    }
    Ok(ProvenancedGraph::new(
        format!("stars-union({k})"),
        g,
        Some(Graph::matching(k)),
        Claim::Forces,
        "pick one edge per star, smallest star first, avoiding used colors and vertices",
        k * (k + 1) / 2,
    ))
}

/// Hubs `v_1..v_{k/2}` joined through pools: pool `i` is complete to
/// `{v_i, v_{i+1}}` for `i < k/2` and the last pool to `{v_1, v_{k/2}}`;
/// the first pool has one vertex and pool `i >= 2` has `4(i-1)`. For odd `k`
/// the graph for `k+1` with its first pool vertex merged into `v_1`.
pub fn cycle_chain(k: usize) -> Result<ProvenancedGraph> {
    if k < 4 {
        return Err(Error::domain("cycle_chain needs k >= 4"));
    }
    let even = if k.is_multiple_of(2) { k } else { k + 1 };
    let hubs = even / 2;
    let mut g = Graph::new(hubs);
    for i in 1..=hubs {
        let size = if i == 1 { 1 } else { 4 * (i - 1) };
        let (a, b) = if i < hubs { (i - 1, i) } else { (0, hubs - 1) };
        for _ in 0..size {
            let w = g.add_vertex();
            g.add_edge(a, w)?;
            g.add_edge(b, w)?;
        }
    }
    if k.is_multiple_of(2) {
        return Ok(ProvenancedGraph::new(
            format!("cycle-chain({k})"),
            g,
            Some(Graph::cycle(k)),
            Claim::Forces,
            "rainbow 2-paths through successive pools with disjoint colors close a cycle",
            k * k - 2 * k + 2,
        ));
    }
    // The first pool vertex is `hubs` with edges to v_1 (edge 0) and v_2 (edge 1).
    let w1 = hubs;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if e == 0 {
            continue;
        }
        let map = |x: Vertex| match x.cmp(&w1) {
            std::cmp::Ordering::Equal => 0,
            std::cmp::Ordering::Greater => x - 1,
            std::cmp::Ordering::Less => x,
        };
        edges.push((map(u), map(v)));
    }
    let contracted = Graph::from_edges(g.n() - 1, &edges)?;
    Ok(ProvenancedGraph::new(
        format!("cycle-chain({k})"),
        contracted,
        Some(Graph::cycle(k)),
        Claim::Forces,
        "the chain for k+1 with one edge of the single-vertex pool contracted",
        k * k,
    ))
}

/// The `i`-th edge of `h` (input order, from 1) becomes `i` parallel edges.
pub fn multi_replace(h: &Graph) -> Result<ProvenancedGraph> {
    if h.m() == 0 {
        return Err(Error::domain("multi_replace needs at least one edge"));
    }
    let mut g = Graph::multigraph(h.n());
    for (i, &(u, v)) in h.edges().iter().enumerate() {
        for _ in 0..=i {
            g.add_edge(u, v)?;
        }
    }
    let k = h.m();
    Ok(ProvenancedGraph::new(
        format!("multi-replace({})", crate::codec::to_graph6(h).unwrap_or_default()),
        g,
        Some(Graph::from_edges(h.n(), h.edges())?),
        Claim::Forces,
        "bundle i has i parallel edges, so edges can be picked bundle by bundle with fresh colors",
        k * (k + 1) / 2,
    ))
}

/// The path with edges `e_1..e_k`: `e_1` single, `e_i` as `i-1` parallel
/// edges. Every copy of the path runs between the two end vertices.
pub fn multi_path(k: usize) -> Result<ProvenancedGraph> {
    if k < 2 {
        return Err(Error::domain("multi_path needs k >= 2"));
    }
    let mut g = Graph::multigraph(k + 1);
    g.add_edge(0, 1)?;
    for i in 2..=k {
        for _ in 0..i - 1 {
            g.add_edge(i - 1, i)?;
        }
    }
    Ok(ProvenancedGraph::new(
        format!("multi-path({k})"),
        g,
        Some(Graph::path(k)),
        Claim::Forces,
        "walk the path; bundle i has i-1 edges, enough to dodge the i-1 colors already used",
        binom2(k) + 1,
    ))
}

/// [`multi_path`] for `k-1` plus `k-2` parallel edges joining its ends.
pub fn multi_cycle(k: usize) -> Result<ProvenancedGraph> {
    if k < 3 {
        return Err(Error::domain("multi_cycle needs k >= 3"));
    }
    let mut g = multi_path(k - 1)?.graph;
    for _ in 0..k - 2 {
        g.add_edge(0, k - 1)?;
    }
    Ok(ProvenancedGraph::new(
        format!("multi-cycle({k})"),
        g,
        Some(Graph::cycle(k)),
        Claim::Forces,
        "a rainbow path between the fixed ends, closed by one of k-2 parallel edges",
        binom2(k),
    ))
}

/// A clique on `S = {0..s-1}` plus all edges from `S` to `T = {s..s+t-1}`.
pub fn kst(s: usize, t: usize) -> Result<ProvenancedGraph> {
    if s == 0 {
        return Err(Error::domain("kst needs s >= 1"));
    }
    let mut g = Graph::complete(s);
    for _ in 0..t {
        let x = g.add_vertex();
        for v in 0..s {
            g.add_edge(v, x)?;
        }
    }
    Ok(ProvenancedGraph::new(
        format!("kst({s},{t})"),
        g,
        None,
        Claim::Shape,
        "clique on S joined completely to an independent set T",
        binom2(s) + s * t,
    ))
}

/// A triangle completely joined to four independent vertices.
pub fn k4_witness() -> ProvenancedGraph {
    let mut p = kst(3, 4).expect("fixed parameters");
    p.name = "k4-witness".into();
    p.target = Some(Graph::complete(4));
    p.claim = Claim::Forces;
    p.basis = "the triangle is rainbow; some independent vertex sees it in three fresh colors";
    p
}

/// Forcing constructions whose target is isomorphic to `h` and whose host is
/// simple, so each fits inside a complete graph.
pub fn forcing_certificates(h: &Pattern) -> Result<Vec<ProvenancedGraph>> {
    let key = canonical_form(h.graph())?;
    let k = h.k();
    let mut out = Vec::new();
    if key == canonical_form(&Graph::matching(k))? {
        out.push(stars_union(k)?);
    }
    if k >= 4 && key == canonical_form(&Graph::cycle(k))? {
        out.push(cycle_chain(k)?);
    }
    if key == canonical_form(&Graph::complete(4))? {
        out.push(k4_witness());
    }
    Ok(out)
}

/// Where the extractor stopped.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Extraction {
    Found { embedding: Embedding },
    NoRainbowClique,
    /// `T` ran out after `picked` vertices.
    TooFewCandidates { picked: usize, remaining_after_discard: usize },
}

/// Greedy extraction of a rainbow `K(s, target_t)` from a properly colored
/// host of the [`kst`] shape: a rainbow `s`-clique in `S` first, then
/// `T`-vertices whose stars to the clique carry fresh colors.
pub fn rainbow_kst_extractor(g: &Graph, c: &EdgeColoring, s: usize, target_t: usize) -> Result<Extraction> {
    c.validate(g, true)?;
    if !g.is_simple() {
        return Err(Error::domain("extractor needs a simple host"));
    }
    let n = g.n();
    let big: Vec<Vertex> = (0..n).filter(|&v| g.degree(v) + 1 == n).collect();
    let small: Vec<Vertex> = (0..n).filter(|&v| g.degree(v) + 1 != n).collect();
    let s_size = big.len();
    let shape_ok = small.iter().all(|&v| g.degree(v) == s_size)
        && g.m() == binom2(s_size) + s_size * small.len();
    if !shape_ok || s == 0 || s > s_size {
        return Err(Error::domain(format!(
            "host is not a clique-plus-independent-set shape with |S| >= {s}"
        )));
    }
    let color_of = |u: Vertex, v: Vertex| c.get(g.edges_between(u, v).next().unwrap()).unwrap();

    let Some(clique) = rainbow_clique(&big, s, &color_of) else {
        return Ok(Extraction::NoRainbowClique);
    };
    let mut used: Vec<Color> = Vec::new();
    for (i, &a) in clique.iter().enumerate() {
        for &b in &clique[..i] {
            used.push(color_of(a, b));
        }
    }
    let mut candidates: Vec<Vertex> = small
        .iter()
        .copied()
        .filter(|&x| clique.iter().all(|&a| !used.contains(&color_of(a, x))))
        .collect();
    let remaining_after_discard = candidates.len();
    let mut picked = Vec::new();
    while picked.len() < target_t {
        let Some(&x) = candidates.first() else {
            return Ok(Extraction::TooFewCandidates {
                picked: picked.len(),
                remaining_after_discard,
            });
        };
        let star: Vec<Color> = clique.iter().map(|&a| color_of(a, x)).collect();
        candidates.retain(|&y| y != x && clique.iter().all(|&a| !star.contains(&color_of(a, y))));
        picked.push(x);
    }

    let pattern = kst(s, target_t)?.graph;
    let vertex_map: Vec<Vertex> = clique.iter().chain(picked.iter()).copied().collect();
    let edge_map = pattern
        .edges()
        .iter()
        .map(|&(a, b)| g.edges_between(vertex_map[a], vertex_map[b]).next().unwrap())
        .collect();
    let embedding = Embedding {
        vertex_map,
        edge_map,
        rainbow: true,
    };
    assert!(embedding.is_valid(g, c, &pattern), "extracted copy must be rainbow");
    Ok(Extraction::Found { embedding })
}

fn rainbow_clique(pool: &[Vertex], s: usize, color_of: &dyn Fn(Vertex, Vertex) -> Color) -> Option<Vec<Vertex>> {
    fn rec(
        pool: &[Vertex],
        s: usize,
        start: usize,
        chosen: &mut Vec<Vertex>,
        colors: &mut Vec<Color>,
        color_of: &dyn Fn(Vertex, Vertex) -> Color,
    ) -> bool {
        if chosen.len() == s {
            return true;
        }
        for i in start..pool.len() {
            let v = pool[i];
            let new: Vec<Color> = chosen.iter().map(|&a| color_of(a, v)).collect();
            let mut all = colors.clone();
            all.extend(&new);
            let mut dedup = all.clone();
            dedup.sort_unstable();
            dedup.dedup();
            if dedup.len() != all.len() {
                continue;
            }
            chosen.push(v);
            let saved = std::mem::replace(colors, all);
            if rec(pool, s, i + 1, chosen, colors, color_of) {
                return true;
            }
            *colors = saved;
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::new();
    rec(pool, s, 0, &mut chosen, &mut Vec::new(), color_of).then_some(chosen)
}
