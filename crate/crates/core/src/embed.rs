//! Subgraph embeddings: rainbow-copy search and enumeration of all copies.
//!
//! Pattern vertices are placed one at a time, preferring the vertex with the
//! most already-placed neighbors and then the highest degree. Each placement
//! also fixes a host edge for every pattern edge back to a placed vertex, so
//! parallel host edges are separate branches.

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::graph::{Color, EdgeColoring, EdgeId, Embedding, Graph, Vertex};
use crate::params::Pattern;

/// A rainbow copy of `h` among the colored edges of `g`, or `None`.
///
/// Deterministic: the first copy in the search order is returned.
pub fn find_rainbow_embedding(g: &Graph, c: &EdgeColoring, h: &Pattern) -> Option<Embedding> {
    find_rainbow_in(g, c, h.graph())
}

/// Same as [`find_rainbow_embedding`] for a bare pattern graph.
pub fn find_rainbow_in(g: &Graph, c: &EdgeColoring, h: &Graph) -> Option<Embedding> {
    if h.n() > g.n() {
        return None;
    }
    if c.distinct_colors().len() < h.m() {
        return None;
    }
    let mut found = None;
    Matcher::new(g, h, Some(c)).run(&mut |vmap, emap| {
        found = Some(Embedding {
            vertex_map: vmap.to_vec(),
            edge_map: emap.to_vec(),
            rainbow: true,
        });
        false
    });
    found
}

pub fn contains_subgraph(g: &Graph, h: &Graph) -> bool {
    if h.n() > g.n() || h.m() > g.m() {
        return false;
    }
    let mut found = false;
    Matcher::new(g, h, None).run(&mut |_, _| {
        found = true;
        false
    });
    found
}

/// Every copy of `h` in `g` as a sorted host edge set, deduplicated, in
/// discovery order. Fails once more than `max_embeddings` embeddings have
/// been visited.
pub fn copies(g: &Graph, h: &Graph, max_embeddings: u64) -> Result<Vec<Vec<EdgeId>>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut visited = 0u64;
    let mut over = false;
    if h.n() <= g.n() && h.m() <= g.m() {
        Matcher::new(g, h, None).run(&mut |_, emap| {
            visited += 1;
            if visited > max_embeddings {
                over = true;
                return false;
            }
            let mut set = emap.to_vec();
            set.sort_unstable();
            if seen.insert(set.clone()) {
                out.push(set);
            }
            true
        });
    }
    if over {
        return Err(Error::budget(format!(
            "more than {max_embeddings} embeddings of the pattern"
        )));
    }
    Ok(out)
}

struct Matcher<'a> {
    g: &'a Graph,
    h: &'a Graph,
    coloring: Option<&'a EdgeColoring>,
    /// Non-isolated pattern vertices in placement order.
    order: Vec<Vertex>,
    /// For each position, the pattern edges back to earlier positions as (edge, earlier vertex).
    back: Vec<Vec<(EdgeId, Vertex)>>,
    isolated: Vec<Vertex>,
    host_degree: Vec<usize>,
    vmap: Vec<Vertex>,
    emap: Vec<EdgeId>,
    host_used: Vec<bool>,
    colors_used: BTreeSet<Color>,
}

const UNSET: usize = usize::MAX;

impl<'a> Matcher<'a> {
    fn new(g: &'a Graph, h: &'a Graph, coloring: Option<&'a EdgeColoring>) -> Self {
        let mut placed = vec![false; h.n()];
        let mut order = Vec::new();
        let active: Vec<Vertex> = (0..h.n()).filter(|&v| h.degree(v) > 0).collect();
        while order.len() < active.len() {
            let next = active
                .iter()
                .copied()
                .filter(|&v| !placed[v])
                .max_by_key(|&v| {
                    let back = h.neighbors(v).filter(|&w| placed[w]).count();
                    (back, h.degree(v), std::cmp::Reverse(v))
                })
                .unwrap();
            placed[next] = true;
            order.push(next);
        }
        let mut pos = vec![usize::MAX; h.n()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let back = order
            .iter()
            .map(|&v| {
                h.incident(v)
                    .iter()
                    .map(|&e| (e, h.other_end(e, v)))
                    .filter(|&(_, w)| pos[w] < pos[v])
                    .collect()
            })
            .collect();
        let host_degree = (0..g.n())
            .map(|v| match coloring {
                None => g.degree(v),
                Some(c) => g.incident(v).iter().filter(|&&e| c.get(e).is_some()).count(),
            })
            .collect();
        Matcher {
            g,
            h,
            coloring,
            order,
            back,
            isolated: (0..h.n()).filter(|&v| h.degree(v) == 0).collect(),
            host_degree,
            vmap: vec![UNSET; h.n()],
            emap: vec![UNSET; h.m()],
            host_used: vec![false; g.n()],
            colors_used: BTreeSet::new(),
        }
    }

    /// Calls `visit` on each embedding until it returns false. Returns false if stopped.
    fn run(&mut self, visit: &mut dyn FnMut(&[Vertex], &[EdgeId]) -> bool) -> bool {
        self.place(0, visit)
    }

    fn place(&mut self, pos: usize, visit: &mut dyn FnMut(&[Vertex], &[EdgeId]) -> bool) -> bool {
        if pos == self.order.len() {
            return self.place_isolated(0, visit);
        }
        let pv = self.order[pos];
        let need = self.h.degree(pv);
        let candidates: Vec<Vertex> = match self.back[pos].first() {
            Some(&(_, w)) => {
                let anchor = self.vmap[w];
                let mut c: Vec<Vertex> = self.g.neighbors(anchor).collect();
                c.sort_unstable();
                c.dedup();
                c
            }
            None => (0..self.g.n()).collect(),
        };
        for x in candidates {
            if self.host_used[x] || self.host_degree[x] < need {
                continue;
            }
            self.host_used[x] = true;
            self.vmap[pv] = x;
            let keep_going = self.choose_edges(pos, 0, visit);
            self.vmap[pv] = UNSET;
            self.host_used[x] = false;
            if !keep_going {
                return false;
            }
        }
        true
    }

    fn choose_edges(
        &mut self,
        pos: usize,
        i: usize,
        visit: &mut dyn FnMut(&[Vertex], &[EdgeId]) -> bool,
    ) -> bool {
        if i == self.back[pos].len() {
            return self.place(pos + 1, visit);
        }
        let (pe, w) = self.back[pos][i];
        let x = self.vmap[self.order[pos]];
        let y = self.vmap[w];
        let options: Vec<EdgeId> = self.g.edges_between(x, y).collect();
        let mut tried_colors = BTreeSet::new();
        for he in options {
            let color = match self.coloring {
                None => None,
                Some(c) => match c.get(he) {
                    None => continue,
                    Some(col) if self.colors_used.contains(&col) => continue,
                    Some(col) => {
                        // Parallel edges of equal color are interchangeable here.
                        if !tried_colors.insert(col) {
                            continue;
                        }
                        Some(col)
                    }
                },
            };
            if let Some(col) = color {
                self.colors_used.insert(col);
            }
            self.emap[pe] = he;
            let keep_going = self.choose_edges(pos, i + 1, visit);
            self.emap[pe] = UNSET;
            if let Some(col) = color {
                self.colors_used.remove(&col);
            }
            if !keep_going {
                return false;
            }
        }
        true
    }

    fn place_isolated(&mut self, i: usize, visit: &mut dyn FnMut(&[Vertex], &[EdgeId]) -> bool) -> bool {
        if i == self.isolated.len() {
            return visit(&self.vmap, &self.emap);
        }
        // Isolated pattern vertices only need distinct unused hosts; take the smallest.
        let Some(x) = (0..self.g.n()).find(|&x| !self.host_used[x]) else {
            return true;
        };
        let pv = self.isolated[i];
        self.host_used[x] = true;
        self.vmap[pv] = x;
        let r = self.place_isolated(i + 1, visit);
        self.vmap[pv] = UNSET;
        self.host_used[x] = false;
        r
    }
}
