//! Target patterns and their exact parameters: edge count, degrees, chromatic
//! index and vertex cover number.

use crate::error::{Error, Result};
use crate::graph::{Color, EdgeColoring, EdgeId, Graph};

/// Search-node cap for the exact chromatic index and vertex cover routines.
pub const PARAM_NODE_CAP: u64 = 20_000_000;

/// A simple target graph with cached parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pattern {
    graph: Graph,
    name: String,
    k: usize,
    max_degree: usize,
    min_degree: usize,
    chromatic_index: usize,
    cover_number: usize,
}

impl Pattern {
    /// Computes all parameters exactly. The graph must be simple and have at
    /// most 12 vertices or at most 20 edges.
    pub fn new(graph: Graph) -> Result<Self> {
        let name = match crate::codec::to_graph6(&graph) {
            Ok(code) => format!("g6:{code}"),
            Err(_) => String::from("pattern"),
        };
        Self::named(graph, name)
    }

    pub fn named(graph: Graph, name: impl Into<String>) -> Result<Self> {
        if graph.has_parallel_edges() {
            return Err(Error::domain("patterns must be simple graphs"));
        }
        let graph = if graph.is_simple() {
            graph
        } else {
            Graph::from_edges(graph.n(), graph.edges())?
        };
        if graph.n() > 12 && graph.m() > 20 {
            return Err(Error::budget(format!(
                "exact parameters need at most 12 vertices or 20 edges (got {} and {})",
                graph.n(),
                graph.m()
            )));
        }
        let chromatic_index = chromatic_index(&graph, PARAM_NODE_CAP)?;
        let cover_number = vertex_cover_number(&graph)?;
        Ok(Pattern {
            k: graph.m(),
            max_degree: graph.max_degree(),
            min_degree: graph.min_degree(),
            name: name.into(),
            chromatic_index,
            cover_number,
            graph,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Number of edges.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn min_degree(&self) -> usize {
        self.min_degree
    }

    pub fn chromatic_index(&self) -> usize {
        self.chromatic_index
    }

    pub fn cover_number(&self) -> usize {
        self.cover_number
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn has_isolated_vertices(&self) -> bool {
        self.min_degree == 0 && self.graph.n() > 0
    }

    /// Fails unless the pattern has no isolated vertices.
    pub fn require_no_isolated(&self) -> Result<()> {
        if self.has_isolated_vertices() {
            return Err(Error::domain(format!(
                "pattern {} has isolated vertices",
                self.name
            )));
        }
        Ok(())
    }
}

/// Exact chromatic index by backtracking from the larger of the maximum degree
/// and the matching-size bound `ceil(m / floor(n/2))`.
pub fn chromatic_index(g: &Graph, max_nodes: u64) -> Result<usize> {
    if g.m() == 0 {
        return Ok(0);
    }
    let half = (g.n() / 2).max(1);
    let mut colors = g.max_degree().max(g.m().div_ceil(half));
    let mut nodes = 0u64;
    loop {
        let mut assign = vec![0 as Color; g.m()];
        match color_with(g, colors as Color, &mut assign, 0, &mut nodes, max_nodes) {
            Some(true) => return Ok(colors),
            Some(false) => colors += 1,
            None => {
                return Err(Error::budget(format!(
                    "chromatic index search exceeded {max_nodes} nodes"
                )))
            }
        }
    }
}

/// DSatur-style edge coloring with at most `palette` colors. `None` on budget.
fn color_with(
    g: &Graph,
    palette: Color,
    assign: &mut [Color],
    used: Color,
    nodes: &mut u64,
    max_nodes: u64,
) -> Option<bool> {
    *nodes += 1;
    if *nodes > max_nodes {
        return None;
    }
    // Most constrained uncolored edge: most distinct neighbor colors, then most uncolored neighbors.
    let mut pick: Option<(usize, usize, EdgeId)> = None;
    for e in 0..g.m() {
        if assign[e] != 0 {
            continue;
        }
        let adj = g.adjacent_edges(e);
        let mut seen: Vec<Color> = adj.iter().map(|&f| assign[f]).filter(|&c| c != 0).collect();
        seen.sort_unstable();
        seen.dedup();
        let free = adj.iter().filter(|&&f| assign[f] == 0).count();
        let key = (seen.len(), free, e);
        if pick.is_none_or(|p| (key.0, key.1) > (p.0, p.1)) {
            pick = Some(key);
        }
    }
    let Some((_, _, e)) = pick else {
        return Some(true);
    };
    let adj = g.adjacent_edges(e);
    let top = palette.min(used + 1);
    for c in 1..=top {
        if adj.iter().any(|&f| assign[f] == c) {
            continue;
        }
        assign[e] = c;
        match color_with(g, palette, assign, used.max(c), nodes, max_nodes) {
            Some(true) => return Some(true),
            None => return None,
            Some(false) => {}
        }
        assign[e] = 0;
    }
    Some(false)
}

/// Exact vertex cover number by branching on a maximum-degree vertex: either
/// it joins the cover or all of its neighbors do.
pub fn vertex_cover_number(g: &Graph) -> Result<usize> {
    if g.n() > 64 {
        return Err(Error::budget("vertex cover limited to 64 vertices"));
    }
    let adj: Vec<u64> = (0..g.n())
        .map(|v| g.neighbors(v).fold(0u64, |acc, w| acc | (1 << w)))
        .collect();
    let alive = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    let mut best = g.n();
    cover_branch(&adj, alive, 0, &mut best);
    Ok(best)
}

fn cover_branch(adj: &[u64], alive: u64, taken: usize, best: &mut usize) {
    if taken >= *best {
        return;
    }
    let mut pick = None;
    let mut pick_deg = 0;
    let mut bits = alive;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let d = (adj[v] & alive).count_ones();
        if d > pick_deg {
            pick_deg = d;
            pick = Some(v);
        }
    }
    let Some(v) = pick else {
        *best = taken;
        return;
    };
    cover_branch(adj, alive & !(1 << v), taken + 1, best);
    let nb = adj[v] & alive;
    cover_branch(adj, alive & !nb & !(1 << v), taken + nb.count_ones() as usize, best);
}

/// Maximum matching size by exhaustive include/exclude recursion.
pub fn matching_number(g: &Graph) -> usize {
    fn rec(g: &Graph, e: usize, used: &mut Vec<bool>) -> usize {
        if e == g.m() {
            return 0;
        }
        let skip = rec(g, e + 1, used);
        let (u, v) = g.edge(e);
        if used[u] || used[v] {
            return skip;
        }
        used[u] = true;
        used[v] = true;
        let take = 1 + rec(g, e + 1, used);
        used[u] = false;
        used[v] = false;
        skip.max(take)
    }
    rec(g, 0, &mut vec![false; g.n()])
}

/// First-Fit coloring in edge-id order: each edge takes the smallest color
/// absent at both endpoints, so at most `2*Delta - 1` colors are used.
pub fn greedy_proper_coloring(g: &Graph) -> EdgeColoring {
    let order: Vec<EdgeId> = (0..g.m()).collect();
    greedy_in_order(g, &order)
}

/// First-Fit coloring presenting edges in the given order.
pub fn greedy_in_order(g: &Graph, order: &[EdgeId]) -> EdgeColoring {
    let mut c = EdgeColoring::uncolored(g.m());
    for &e in order {
        let (u, v) = g.edge(e);
        let mut seen: Vec<Color> = g
            .incident(u)
            .iter()
            .chain(g.incident(v))
            .filter_map(|&f| c.get(f))
            .collect();
        seen.sort_unstable();
        seen.dedup();
        let mut color = 1;
        for s in seen {
            if s == color {
                color += 1;
            } else if s > color {
                break;
            }
        }
        c.set(e, color);
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pat(g: Graph) -> Pattern {
        Pattern::new(g).unwrap()
    }

    #[test]
    fn matching_parameters() {
        let p = pat(Graph::matching(3));
        assert_eq!(
            (p.k(), p.max_degree(), p.chromatic_index(), p.cover_number()),
            (3, 1, 1, 3)
        );
    }

    #[test]
    fn k4_parameters() {
        let p = pat(Graph::complete(4));
        assert_eq!(
            (p.k(), p.max_degree(), p.chromatic_index(), p.cover_number()),
            (6, 3, 3, 3)
        );
    }

    #[test]
    fn odd_cycle_is_class_two() {
        let p = pat(Graph::cycle(5));
        assert_eq!(
            (p.k(), p.max_degree(), p.chromatic_index(), p.cover_number()),
            (5, 2, 3, 3)
        );
    }

    #[test]
    fn complete_graph_indices() {
        assert_eq!(chromatic_index(&Graph::complete(5), PARAM_NODE_CAP).unwrap(), 5);
        assert_eq!(chromatic_index(&Graph::complete(6), PARAM_NODE_CAP).unwrap(), 5);
        assert_eq!(chromatic_index(&Graph::complete(7), PARAM_NODE_CAP).unwrap(), 7);
    }

    #[test]
    fn petersen_is_class_two() {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        let g = Graph::from_edges(10, &edges).unwrap();
        assert_eq!(chromatic_index(&g, PARAM_NODE_CAP).unwrap(), 4);
        assert_eq!(vertex_cover_number(&g).unwrap(), 6);
    }

    #[test]
    fn multigraph_chromatic_index_counts_bundles() {
        let g = Graph::multi_from_edges(3, &[(0, 1), (0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(chromatic_index(&g, PARAM_NODE_CAP).unwrap(), 4);
    }

    #[test]
    fn greedy_examples() {
        let m = greedy_proper_coloring(&Graph::matching(4));
        assert_eq!(m.complete_colors().unwrap(), vec![1; 4]);
        let s = greedy_proper_coloring(&Graph::star(4));
        assert_eq!(s.complete_colors().unwrap(), vec![1, 2, 3, 4]);
        let c4 = greedy_proper_coloring(&Graph::cycle(4));
        assert!(c4.is_proper(&Graph::cycle(4)));
        assert!(c4.max_color() <= 3);
    }

    #[test]
    fn oversized_patterns_rejected() {
        let g = Graph::matching(21);
        assert!(matches!(Pattern::new(g), Err(Error::Budget(_))));
        let m = Graph::multi_from_edges(2, &[(0, 1), (0, 1)]).unwrap();
        assert!(Pattern::new(m).is_err());
    }
}
