//! The least good graph by search over graphs of growing size.
//!
//! In a good coloring the color-1 edges form a maximal matching (any edge
//! missing it would need color 1 itself), the color-2 edges a maximal
//! matching of what is left, and so on; conversely every such peeling is a
//! good coloring once some copy of the pattern has its edges in distinct
//! layers. The search enumerates peelings and drops a branch when every copy
//! has two edges in one layer.

use serde::Serialize;

use crate::budget::{Meter, SearchBudget, Value};
use crate::embed::{copies, find_rainbow_in};
use crate::enumerate::{first_level, next_level, EnumOptions};
use crate::error::{Error, Result};
use crate::forcing::COPY_CAP;
use crate::graph::{Color, EdgeColoring, EdgeId, Graph};
use crate::params::Pattern;

use super::good::{goodify, GoodColoredGraph};
use super::weights::{degree_order_coloring, w_greedy, MAX_WEIGHT_EDGES};

/// `Ok(Some(Some(c)))`: a good coloring. `Ok(Some(None))`: none exists.
/// `Ok(None)`: the meter tripped.
pub fn find_good_coloring(g: &Graph, h: &Pattern, meter: &mut Meter) -> Result<Option<Option<EdgeColoring>>> {
    let sets = copies(g, h.graph(), COPY_CAP)?;
    if sets.is_empty() {
        return Ok(Some(None));
    }
    let mut p = Peeler {
        g,
        layer: vec![0; g.m()],
        copies: sets,
        meter,
    };
    Ok(match p.peel(1) {
        None => None,
        Some(false) => Some(None),
        Some(true) => Some(Some(EdgeColoring::from_colors(p.layer.clone())?)),
    })
}

struct Peeler<'a, 'm> {
    g: &'a Graph,
    /// 0 while unassigned.
    layer: Vec<Color>,
    copies: Vec<Vec<EdgeId>>,
    meter: &'m mut Meter,
}

impl Peeler<'_, '_> {
    fn any_copy_alive(&self) -> bool {
        self.copies.iter().any(|set| {
            let mut seen: Vec<Color> = set.iter().map(|&e| self.layer[e]).filter(|&l| l != 0).collect();
            let n = seen.len();
            seen.sort_unstable();
            seen.dedup();
            seen.len() == n
        })
    }

    fn peel(&mut self, depth: Color) -> Option<bool> {
        if !self.meter.tick() {
            return None;
        }
        let rest: Vec<EdgeId> = (0..self.g.m()).filter(|&e| self.layer[e] == 0).collect();
        if rest.is_empty() {
            return Some(self.any_copy_alive());
        }
        for m in maximal_matchings(self.g, &rest) {
            for &e in &m {
                self.layer[e] = depth;
            }
            if self.any_copy_alive() {
                match self.peel(depth + 1) {
                    Some(true) => return Some(true),
                    None => {
                        for &e in &m {
                            self.layer[e] = 0;
                        }
                        return None;
                    }
                    Some(false) => {}
                }
            }
            for &e in &m {
                self.layer[e] = 0;
            }
        }
        Some(false)
    }
}

/// Every maximal matching of the edge subset `edges`.
fn maximal_matchings(g: &Graph, edges: &[EdgeId]) -> Vec<Vec<EdgeId>> {
    fn rec(g: &Graph, edges: &[EdgeId], i: usize, used: &mut Vec<bool>, cur: &mut Vec<EdgeId>, out: &mut Vec<Vec<EdgeId>>) {
        if i == edges.len() {
            let maximal = edges.iter().all(|&e| {
                let (u, v) = g.edge(e);
                used[u] || used[v]
            });
            if maximal {
                out.push(cur.clone());
            }
            return;
        }
        let e = edges[i];
        let (u, v) = g.edge(e);
        if !used[u] && !used[v] {
            used[u] = true;
            used[v] = true;
            cur.push(e);
            rec(g, edges, i + 1, used, cur, out);
            cur.pop();
            used[u] = false;
            used[v] = false;
        }
        rec(g, edges, i + 1, used, cur, out);
    }
    let mut out = Vec::new();
    rec(g, edges, 0, &mut vec![false; g.n()], &mut Vec::new(), &mut out);
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FirstFitResult {
    pub value: Value,
    #[serde(skip)]
    pub witness: Option<GoodColoredGraph>,
    pub graphs_checked: usize,
    /// Every graph with fewer edges than this was shown not good.
    pub cleared_below: usize,
}

/// Least number of edges in a good graph for `h`.
///
/// The padded greedy-matching construction gives the starting upper bound.
/// Levels are scanned by edge count with at most as many components as `h`
/// (a least good graph has no component free of the rainbow copy).
pub fn ar_ff_exact(h: &Pattern, b: &SearchBudget) -> Result<FirstFitResult> {
    h.require_no_isolated()?;
    let bijection = if h.k() <= MAX_WEIGHT_EDGES {
        w_greedy(h.graph(), &mut Meter::unlimited())?.1
    } else {
        degree_order_coloring(h.graph()).coloring
    };
    let padded = goodify(h, &bijection)?;
    let mut best = padded.graph.m();
    let mut witness = Some(padded);

    let opts = EnumOptions {
        max_vertices: b.max_vertices,
        max_components: Some(h.graph().components().iter().filter(|c| c.len() > 1).count()),
        ..EnumOptions::default()
    };
    let mut level = first_level(&opts);
    let mut unresolved: Option<usize> = None;
    let mut checked = 0;
    let mut cleared_below = 1;
    loop {
        let m = level.edges;
        if m >= best || m > b.max_edges {
            break;
        }
        let mut found = None;
        if m >= h.k() {
            for g in &level.graphs {
                checked += 1;
                let mut meter = b.meter();
                match find_good_coloring(g, h, &mut meter)? {
                    Some(Some(c)) => {
                        found = Some((g.clone(), c));
                        break;
                    }
                    Some(None) => {}
                    None => {
                        unresolved.get_or_insert(m);
                    }
                }
            }
        }
        if let Some((g, c)) = found {
            let rainbow_witness = find_rainbow_in(&g, &c, h.graph()).expect("good colorings contain a rainbow copy");
            best = m;
            witness = Some(GoodColoredGraph {
                graph: g,
                coloring: c,
                forward: None,
                target: h.clone(),
                rainbow_witness,
            });
            break;
        }
        if unresolved.is_none() {
            cleared_below = m + 1;
        }
        if m + 1 >= best {
            break;
        }
        level = match next_level(&level, &opts) {
            Ok(l) => l,
            Err(Error::Budget(_)) => {
                unresolved.get_or_insert(m + 1);
                break;
            }
            Err(e) => return Err(e),
        };
    }
    let lower = match unresolved {
        Some(u) => u,
        None => cleared_below.min(best),
    };
    Ok(FirstFitResult {
        value: Value::from_bounds(lower, Some(best)),
        witness,
        graphs_checked: checked,
        cleared_below,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::firstfit::is_h_good;

    fn pat(g: Graph) -> Pattern {
        Pattern::new(g).unwrap()
    }

    #[test]
    fn small_exact_values() {
        let b = SearchBudget::default();
        for (h, want) in [(Graph::matching(1), 1), (Graph::matching(2), 3), (Graph::path(2), 2), (Graph::path(3), 4)] {
            let h = pat(h);
            let r = ar_ff_exact(&h, &b).unwrap();
            assert_eq!(r.value.exact(), Some(want), "{}", h.name());
            let w = r.witness.unwrap();
            assert_eq!(w.graph.m(), want);
            assert!(is_h_good(&w.graph, &w.coloring, &h).unwrap().is_good());
        }
    }

    #[test]
    fn maximal_matchings_of_a_path() {
        let g = Graph::path(3);
        let mut ms = maximal_matchings(&g, &[0, 1, 2]);
        ms.sort();
        assert_eq!(ms, vec![vec![0, 2], vec![1]]);
    }
}
