//! Graphs with dense vertex indices, edge colorings, and embeddings.
//!
//! Edge identity is the position in the edge list, so parallel edges are
//! distinct edges and multigraphs need no separate representation.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type EdgeId = usize;
pub type Color = u32;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    simple: bool,
    incident: Vec<Vec<EdgeId>>,
}

impl Graph {
    /// An edgeless simple graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            simple: true,
            incident: vec![Vec::new(); n],
        }
    }

    /// An edgeless graph on `n` vertices that accepts parallel edges.
    pub fn multigraph(n: usize) -> Self {
        Graph {
            simple: false,
            ..Graph::new(n)
        }
    }

    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn multi_from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut g = Graph::multigraph(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn is_simple(&self) -> bool {
        self.simple
    }

    /// True when no two edges share both endpoints, regardless of the `simple` flag.
    pub fn has_parallel_edges(&self) -> bool {
        let mut seen = BTreeSet::new();
        !self.edges.iter().all(|e| seen.insert(*e))
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> (Vertex, Vertex) {
        self.edges[e]
    }

    pub fn add_vertex(&mut self) -> Vertex {
        self.n += 1;
        self.incident.push(Vec::new());
        self.n - 1
    }

    /// Appends an edge and returns its id. Endpoints are stored as `(min, max)`.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<EdgeId> {
        if u == v {
            return Err(Error::domain(format!("loop at vertex {u}")));
        }
        if u >= self.n || v >= self.n {
            return Err(Error::domain(format!(
                "edge ({u},{v}) out of range for {} vertices",
                self.n
            )));
        }
        if self.simple && self.has_edge(u, v) {
            return Err(Error::domain(format!("duplicate edge ({u},{v}) in simple graph")));
        }
        let id = self.edges.len();
        self.edges.push((u.min(v), u.max(v)));
        self.incident[u].push(id);
        self.incident[v].push(id);
        Ok(id)
    }

    /// Edges incident to `v`, in increasing id order.
    pub fn incident(&self, v: Vertex) -> &[EdgeId] {
        &self.incident[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.incident[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.degrees().into_iter().min().unwrap_or(0)
    }

    pub fn other_end(&self, e: EdgeId, v: Vertex) -> Vertex {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.incident[v].iter().map(move |&e| self.other_end(e, v))
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.multiplicity(u, v) > 0
    }

    pub fn multiplicity(&self, u: Vertex, v: Vertex) -> usize {
        if u >= self.n || v >= self.n {
            return 0;
        }
        let (a, b) = (u.min(v), u.max(v));
        self.incident[u]
            .iter()
            .filter(|&&e| self.edges[e] == (a, b))
            .count()
    }

    pub fn edges_between(&self, u: Vertex, v: Vertex) -> impl Iterator<Item = EdgeId> + '_ {
        let key = (u.min(v), u.max(v));
        self.incident[u]
            .iter()
            .copied()
            .filter(move |&e| self.edges[e] == key)
    }

    /// Edges sharing at least one endpoint with `e`, excluding `e`, each listed once.
    pub fn adjacent_edges(&self, e: EdgeId) -> Vec<EdgeId> {
        let (u, v) = self.edges[e];
        let mut out: Vec<EdgeId> = self.incident[u]
            .iter()
            .chain(self.incident[v].iter())
            .copied()
            .filter(|&f| f != e)
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Number of edges adjacent to `e`, counting `e` itself.
    pub fn edge_degree(&self, e: EdgeId) -> usize {
        self.adjacent_edges(e).len() + 1
    }

    pub fn edges_adjacent(&self, e: EdgeId, f: EdgeId) -> bool {
        let (a, b) = self.edges[e];
        let (c, d) = self.edges[f];
        a == c || a == d || b == c || b == d
    }

    pub fn isolated_vertices(&self) -> Vec<Vertex> {
        (0..self.n).filter(|&v| self.degree(v) == 0).collect()
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut stack = vec![s];
            comp[s] = id;
            let mut members = vec![s];
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v).collect::<Vec<_>>() {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![None; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                let sv = side[v].unwrap();
                for w in self.neighbors(v).collect::<Vec<_>>() {
                    match side[w] {
                        None => {
                            side[w] = Some(!sv);
                            stack.push(w);
                        }
                        Some(sw) if sw == sv => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    /// Image of the graph under `perm` (vertex `v` becomes `perm[v]`); edge ids are preserved.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::domain("permutation length differs from vertex count"));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || seen[p] {
                return Err(Error::domain("not a permutation"));
            }
            seen[p] = true;
        }
        let mut g = Graph {
            simple: self.simple,
            ..Graph::new(self.n)
        };
        for &(u, v) in &self.edges {
            g.add_edge(perm[u], perm[v])?;
        }
        Ok(g)
    }

    /// Drops isolated vertices, keeping the relative order of the rest and all edge ids.
    pub fn without_isolated(&self) -> Graph {
        let mut map = vec![usize::MAX; self.n];
        let mut next = 0;
        for (v, slot) in map.iter_mut().enumerate() {
            if self.degree(v) > 0 {
                *slot = next;
                next += 1;
            }
        }
        let mut g = Graph {
            simple: self.simple,
            ..Graph::new(next)
        };
        for &(u, v) in &self.edges {
            g.add_edge(map[u], map[v]).expect("relabeling preserves validity");
        }
        g
    }

    /// The same vertex and edge lists with the `simple` flag cleared.
    pub fn as_multigraph(&self) -> Graph {
        Graph {
            simple: false,
            ..self.clone()
        }
    }

    /// Vertex-disjoint union; the vertices and edges of `other` come after those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph {
            simple: self.simple && other.simple,
            ..self.clone()
        };
        let offset = g.n;
        for _ in 0..other.n {
            g.add_vertex();
        }
        for &(u, v) in &other.edges {
            g.add_edge(u + offset, v + offset).expect("disjoint union is valid");
        }
        g
    }

    /// Subgraph spanned by the listed edges (all vertices kept).
    pub fn edge_subgraph(&self, edges: &[EdgeId]) -> Graph {
        let mut g = Graph {
            simple: self.simple,
            ..Graph::new(self.n)
        };
        for &e in edges {
            let (u, v) = self.edges[e];
            g.add_edge(u, v).expect("subgraph of a valid graph");
        }
        g
    }

    /// Path with `k` edges on vertices `0..=k` in order.
    pub fn path(k: usize) -> Graph {
        let mut g = Graph::new(k + 1);
        for i in 0..k {
            g.add_edge(i, i + 1).unwrap();
        }
        g
    }

    /// Cycle with `k >= 3` edges; edge `i` joins `i` and `i+1 mod k`.
    pub fn cycle(k: usize) -> Graph {
        assert!(k >= 3, "a simple cycle needs at least 3 edges");
        let mut g = Graph::new(k);
        for i in 0..k {
            g.add_edge(i, (i + 1) % k).unwrap();
        }
        g
    }

    /// Matching with `k` edges `(2i, 2i+1)`.
    pub fn matching(k: usize) -> Graph {
        let mut g = Graph::new(2 * k);
        for i in 0..k {
            g.add_edge(2 * i, 2 * i + 1).unwrap();
        }
        g
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    /// Star with center 0 and leaves `1..=x`.
    pub fn star(x: usize) -> Graph {
        let mut g = Graph::new(x + 1);
        for i in 1..=x {
            g.add_edge(0, i).unwrap();
        }
        g
    }

    /// Complete bipartite graph with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut g = Graph::new(a + b);
        for u in 0..a {
            for v in 0..b {
                g.add_edge(u, a + v).unwrap();
            }
        }
        g
    }
}

/// A partial or complete assignment of positive colors to edge ids.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct EdgeColoring {
    colors: Vec<Option<Color>>,
}

impl EdgeColoring {
    /// All `m` edges uncolored.
    pub fn uncolored(m: usize) -> Self {
        EdgeColoring {
            colors: vec![None; m],
        }
    }

    pub fn from_colors(colors: Vec<Color>) -> Result<Self> {
        Self::from_partial(colors.into_iter().map(Some).collect())
    }

    pub fn from_partial(colors: Vec<Option<Color>>) -> Result<Self> {
        if let Some(e) = colors.iter().position(|c| *c == Some(0)) {
            return Err(Error::domain(format!("edge {e} has color 0; colors are positive")));
        }
        Ok(EdgeColoring { colors })
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn get(&self, e: EdgeId) -> Option<Color> {
        self.colors.get(e).copied().flatten()
    }

    pub fn set(&mut self, e: EdgeId, c: Color) {
        assert!(c > 0, "colors are positive");
        self.colors[e] = Some(c);
    }

    pub fn unset(&mut self, e: EdgeId) {
        self.colors[e] = None;
    }

    /// Appends a slot for a newly added edge.
    pub fn push(&mut self, c: Option<Color>) {
        assert!(c != Some(0), "colors are positive");
        self.colors.push(c);
    }

    pub fn as_slice(&self) -> &[Option<Color>] {
        &self.colors
    }

    pub fn is_complete(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    /// The colors of a complete coloring.
    pub fn complete_colors(&self) -> Option<Vec<Color>> {
        self.colors.iter().copied().collect()
    }

    pub fn max_color(&self) -> Color {
        self.colors.iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn distinct_colors(&self) -> BTreeSet<Color> {
        self.colors.iter().flatten().copied().collect()
    }

    /// Colors on edges incident to `v`.
    pub fn colors_at(&self, g: &Graph, v: Vertex) -> BTreeSet<Color> {
        g.incident(v).iter().filter_map(|&e| self.get(e)).collect()
    }

    /// First pair of adjacent edges sharing a color, if any.
    pub fn properness_violation(&self, g: &Graph) -> Option<(EdgeId, EdgeId)> {
        for v in 0..g.n() {
            let inc = g.incident(v);
            for (i, &e) in inc.iter().enumerate() {
                let Some(ce) = self.get(e) else { continue };
                for &f in &inc[i + 1..] {
                    if self.get(f) == Some(ce) {
                        return Some((e.min(f), e.max(f)));
                    }
                }
            }
        }
        None
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.properness_violation(g).is_none()
    }

    /// Checks length, properness, and (optionally) completeness against `g`.
    pub fn validate(&self, g: &Graph, require_complete: bool) -> Result<()> {
        if self.colors.len() != g.m() {
            return Err(Error::domain(format!(
                "coloring has {} entries for {} edges",
                self.colors.len(),
                g.m()
            )));
        }
        if require_complete && !self.is_complete() {
            return Err(Error::domain("coloring is not complete"));
        }
        if let Some((e, f)) = self.properness_violation(g) {
            return Err(Error::domain(format!(
                "edges {e} and {f} are adjacent and share color {}",
                self.get(e).unwrap()
            )));
        }
        Ok(())
    }

    /// The reverse `c'(e) = top + 1 - c(e)`; uncolored edges stay uncolored.
    pub fn reversed(&self, top: Color) -> EdgeColoring {
        EdgeColoring {
            colors: self
                .colors
                .iter()
                .map(|c| c.map(|c| top + 1 - c))
                .collect(),
        }
    }
}

/// A copy of a pattern inside a host graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    /// Pattern vertex `a` maps to host vertex `vertex_map[a]`.
    pub vertex_map: Vec<Vertex>,
    /// Pattern edge `i` maps to host edge `edge_map[i]`.
    pub edge_map: Vec<EdgeId>,
    /// Whether the image edges carry pairwise distinct colors.
    pub rainbow: bool,
}

impl Embedding {
    /// Structural check: injective vertex map, consistent edge map, and a
    /// rainbow flag that matches the coloring.
    pub fn is_valid(&self, host: &Graph, coloring: &EdgeColoring, pattern: &Graph) -> bool {
        if self.vertex_map.len() != pattern.n() || self.edge_map.len() != pattern.m() {
            return false;
        }
        let mut used = BTreeSet::new();
        if !self
            .vertex_map
            .iter()
            .all(|&v| v < host.n() && used.insert(v))
        {
            return false;
        }
        let mut edges_used = BTreeSet::new();
        for (i, &(a, b)) in pattern.edges().iter().enumerate() {
            let he = self.edge_map[i];
            if he >= host.m() || !edges_used.insert(he) {
                return false;
            }
            let (x, y) = (self.vertex_map[a], self.vertex_map[b]);
            if host.edge(he) != (x.min(y), x.max(y)) {
                return false;
            }
        }
        let colors: Vec<Option<Color>> = self.edge_map.iter().map(|&e| coloring.get(e)).collect();
        let rainbow = colors.iter().all(Option::is_some)
            && colors.iter().flatten().collect::<BTreeSet<_>>().len() == colors.len();
        rainbow == self.rainbow
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_duplicates() {
        let mut g = Graph::new(3);
        assert!(g.add_edge(1, 1).is_err());
        g.add_edge(0, 1).unwrap();
        assert!(g.add_edge(1, 0).is_err());
        let mut m = Graph::multigraph(2);
        m.add_edge(0, 1).unwrap();
        m.add_edge(1, 0).unwrap();
        assert_eq!(m.multiplicity(0, 1), 2);
        assert!(m.has_parallel_edges());
    }

    #[test]
    fn parallel_edges_must_differ_in_color() {
        let g = Graph::multi_from_edges(2, &[(0, 1), (0, 1)]).unwrap();
        let same = EdgeColoring::from_colors(vec![1, 1]).unwrap();
        assert_eq!(same.properness_violation(&g), Some((0, 1)));
        let diff = EdgeColoring::from_colors(vec![1, 2]).unwrap();
        assert!(diff.is_proper(&g));
    }

    #[test]
    fn components_and_bipartiteness() {
        let g = Graph::matching(2).disjoint_union(&Graph::cycle(3));
        assert_eq!(g.components().len(), 3);
        assert!(!g.is_bipartite());
        assert!(Graph::cycle(4).is_bipartite());
        assert!(Graph::complete_bipartite(2, 3).is_bipartite());
    }

    #[test]
    fn edge_degree_counts_itself() {
        let p = Graph::path(3);
        assert_eq!(p.edge_degree(0), 2);
        assert_eq!(p.edge_degree(1), 3);
        assert_eq!(Graph::star(4).edge_degree(2), 4);
    }

    #[test]
    fn zero_color_rejected() {
        assert!(EdgeColoring::from_colors(vec![1, 0]).is_err());
    }

    #[test]
    fn reversal() {
        let c = EdgeColoring::from_colors(vec![1, 2, 3]).unwrap();
        assert_eq!(c.reversed(3).complete_colors().unwrap(), vec![3, 2, 1]);
    }
}
