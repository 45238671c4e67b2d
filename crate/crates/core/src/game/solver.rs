//! Exact game values by depth-bounded search over colored positions.
//!
//! `wins(g, c, t)` asks whether Builder, from position `(g, c)`, can force a
//! rainbow copy within `t` more edges. Positions are memoized on their key up
//! to isomorphism and palette renaming; the answer is monotone in `t`, so an
//! entry keeps the least winning and the largest losing budget seen.

use std::collections::HashMap;

use serde::Serialize;

use crate::budget::{Meter, SearchBudget, Value};
use crate::canon::{colored_key, ColorMode};
use crate::embed::find_rainbow_in;
use crate::error::Result;
use crate::graph::{EdgeColoring, EdgeId, Graph};
use crate::params::Pattern;

use super::painters::painter_options;
use super::GameCaps;

#[derive(Clone, Copy, Debug)]
struct Entry {
    win_min: usize,
    /// Largest losing budget, or `None`.
    lose_max: Option<usize>,
}

pub struct Solver {
    h: Graph,
    multigraph: bool,
    max_vertices: usize,
    node_budget: u64,
    memo: HashMap<String, Entry>,
    meter: Meter,
}

impl Solver {
    pub fn new(h: &Pattern, multigraph: bool, max_vertices: usize, node_budget: u64) -> Self {
        Solver {
            h: h.graph().clone(),
            multigraph,
            max_vertices,
            node_budget,
            memo: HashMap::new(),
            meter: Meter::new(node_budget, None),
        }
    }

    pub fn with_meter(mut self, meter: Meter) -> Self {
        self.meter = meter;
        self
    }

    /// Starts a fresh node count; memo entries are kept.
    pub fn reset_meter(&mut self) {
        self.meter = Meter::new(self.node_budget, None);
    }

    pub fn nodes(&self) -> u64 {
        self.meter.nodes
    }

    pub fn positions(&self) -> usize {
        self.memo.len()
    }

    pub fn key(&self, g: &Graph, c: &EdgeColoring) -> Result<String> {
        colored_key(g, c, ColorMode::UpToPalette, g.n().max(1))
    }

    /// `None` when the node budget ran out.
    pub fn wins(&mut self, g: &Graph, c: &EdgeColoring, t: usize) -> Option<bool> {
        if !self.meter.tick() {
            return None;
        }
        if find_rainbow_in(g, c, &self.h).is_some() {
            return Some(true);
        }
        if t == 0 || g.m() + t < self.h.m() {
            return Some(false);
        }
        let key = self.key(g, c).ok()?;
        if let Some(en) = self.memo.get(&key) {
            if en.win_min <= t {
                return Some(true);
            }
            if en.lose_max.is_some_and(|l| l >= t) {
                return Some(false);
            }
        }
        let mut result = false;
        for (g2, c2, e) in self.builder_moves(g, c) {
            if self.painter_holds(&g2, &c2, e, t - 1)? {
                continue;
            }
            result = true;
            break;
        }
        let en = self.memo.entry(key).or_insert(Entry {
            win_min: usize::MAX,
            lose_max: None,
        });
        if result {
            en.win_min = en.win_min.min(t);
        } else {
            en.lose_max = Some(en.lose_max.map_or(t, |l| l.max(t)));
        }
        Some(result)
    }

    /// Whether some color for `e` keeps Builder from winning within `t`.
    fn painter_holds(&mut self, g: &Graph, c: &EdgeColoring, e: EdgeId, t: usize) -> Option<bool> {
        let mut seen = Vec::new();
        for col in painter_options(g, c, e) {
            let mut c2 = c.clone();
            c2.set(e, col);
            let key = self.key(g, &c2).ok()?;
            if seen.contains(&key) {
                continue;
            }
            seen.push(key);
            if !self.wins(g, &c2, t)? {
                return Some(true);
            }
        }
        Some(false)
    }

    /// Every legal edge up to isomorphism of the resulting position, with the
    /// new edge uncolored.
    fn builder_moves(&self, g: &Graph, c: &EdgeColoring) -> Vec<(Graph, EdgeColoring, EdgeId)> {
        let n = g.n();
        let mut pairs = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                let mult = g.multiplicity(u, v);
                if mult == 0 || (self.multigraph && mult < self.h.m()) {
                    pairs.push((Some(u), Some(v)));
                }
            }
        }
        if n < self.max_vertices {
            pairs.extend((0..n).map(|u| (Some(u), None)));
        }
        if n + 2 <= self.max_vertices {
            pairs.push((None, None));
        }
        let mut seen = Vec::new();
        let mut out = Vec::new();
        for (a, b) in pairs {
            let mut g2 = g.clone();
            let u = a.unwrap_or_else(|| g2.add_vertex());
            let v = b.unwrap_or_else(|| g2.add_vertex());
            let e = g2.add_edge(u, v).expect("legal move");
            let mut c2 = c.clone();
            c2.push(None);
            let Ok(key) = self.key(&g2, &c2) else { continue };
            if seen.contains(&key) {
                continue;
            }
            seen.push(key);
            out.push((g2, c2, e));
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OnlineResult {
    pub value: Value,
    pub nodes: u64,
    pub positions: usize,
}

/// Least number of edges Builder needs against every Painter, by iterative
/// deepening from `k` edges up to `caps.max_edges`.
pub fn ar_online_exact(h: &Pattern, caps: GameCaps, b: &SearchBudget) -> Result<OnlineResult> {
    h.require_no_isolated()?;
    let mut solver = Solver::new(h, caps.multigraph, caps.max_vertices, b.max_nodes).with_meter(b.meter());
    let empty = if caps.multigraph { Graph::multigraph(0) } else { Graph::new(0) };
    let none = EdgeColoring::uncolored(0);
    let mut value = Value::Interval {
        lower: caps.max_edges + 1,
        upper: None,
    };
    for t in h.k()..=caps.max_edges {
        match solver.wins(&empty, &none, t) {
            Some(true) => {
                value = Value::Exact { value: t };
                break;
            }
            Some(false) => {}
            None => {
                value = Value::Interval { lower: t, upper: None };
                break;
            }
        }
    }
    Ok(OnlineResult {
        value,
        nodes: solver.nodes(),
        positions: solver.positions(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn value(h: Graph, multigraph: bool) -> Value {
        let h = Pattern::new(h).unwrap();
        let caps = if multigraph { GameCaps::multigraph(8) } else { GameCaps::simple(8) };
        ar_online_exact(&h, caps, &SearchBudget::default()).unwrap().value
    }

    #[test]
    fn tiny_game_values() {
        assert_eq!(value(Graph::matching(1), false), Value::Exact { value: 1 });
        assert_eq!(value(Graph::path(2), false), Value::Exact { value: 2 });
        assert_eq!(value(Graph::matching(2), false), Value::Exact { value: 3 });
    }

    #[test]
    fn tight_caps_give_an_interval() {
        let h = Pattern::new(Graph::matching(2)).unwrap();
        let r = ar_online_exact(&h, GameCaps::simple(2), &SearchBudget::default()).unwrap();
        assert_eq!(r.value, Value::Interval { lower: 3, upper: None });
    }
}
