//! Deciding whether every proper edge coloring of a host contains a rainbow
//! copy of a pattern, and the exact size and local numbers built on it.
//!
//! The search looks for a bad coloring: complete, proper, and with a repeated
//! color inside every copy of the pattern. Colors are canonical up to palette
//! renaming (a new edge may use at most one color above the largest used so
//! far). Each copy tracks its colored edges; a copy completed without a
//! repeat kills the branch, and a copy with one uncolored edge restricts that
//! edge to the copy's colors.

use serde::Serialize;

use crate::budget::{Meter, SearchBudget, Status, Value};
use crate::constructions;
use crate::embed::{copies, find_rainbow_in};
use crate::enumerate::{first_level, next_level, EnumOptions};
use crate::error::{Error, Result};
use crate::graph::{Color, EdgeColoring, EdgeId, Graph};
use crate::params::{greedy_proper_coloring, Pattern};

/// Embeddings visited while listing copies of the pattern.
pub const COPY_CAP: u64 = 5_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ForcingVerdict {
    pub status: Status,
    /// A bad coloring when refuted.
    pub witness: Option<EdgeColoring>,
    pub nodes: u64,
}

pub fn forces(g: &Graph, h: &Pattern, b: &SearchBudget) -> Result<ForcingVerdict> {
    h.require_no_isolated()?;
    let palette = b.max_colors.unwrap_or(g.m()).min(g.m()).max(1);
    if palette > 62 {
        return Err(Error::budget("coloring search supports at most 62 colors"));
    }
    let copy_sets = copies(g, h.graph(), COPY_CAP)?;

    let greedy = greedy_proper_coloring(g);
    if greedy.max_color() as usize <= palette && !any_rainbow(&copy_sets, &greedy) {
        return Ok(refuted(g, h, greedy, 0));
    }
    let mut s = Search::new(g, copy_sets, palette as u32, b.meter());
    let found = s.dfs();
    let nodes = s.meter.nodes;
    match found {
        None => Ok(ForcingVerdict {
            status: Status::Exhausted,
            witness: None,
            nodes,
        }),
        Some(false) => Ok(ForcingVerdict {
            status: Status::Forces,
            witness: None,
            nodes,
        }),
        Some(true) => {
            let colors = s.color.iter().map(|&c| c as Color).collect();
            Ok(refuted(g, h, EdgeColoring::from_colors(colors)?, nodes))
        }
    }
}

fn refuted(g: &Graph, h: &Pattern, witness: EdgeColoring, nodes: u64) -> ForcingVerdict {
    assert!(witness.validate(g, true).is_ok(), "bad-coloring witness must be complete and proper");
    assert!(
        find_rainbow_in(g, &witness, h.graph()).is_none(),
        "bad-coloring witness must avoid a rainbow copy"
    );
    ForcingVerdict {
        status: Status::Refuted,
        witness: Some(witness),
        nodes,
    }
}

fn any_rainbow(copy_sets: &[Vec<EdgeId>], c: &EdgeColoring) -> bool {
    copy_sets.iter().any(|set| {
        let mut cols: Vec<Option<Color>> = set.iter().map(|&e| c.get(e)).collect();
        cols.sort_unstable();
        cols.dedup();
        cols.len() == set.len() && cols.iter().all(Option::is_some)
    })
}

struct Search<'a> {
    g: &'a Graph,
    copies: Vec<Vec<EdgeId>>,
    edge_copies: Vec<Vec<usize>>,
    color: Vec<u8>,
    vmask: Vec<u64>,
    cmask: Vec<u64>,
    cdups: Vec<u32>,
    cfree: Vec<u32>,
    max_used: u32,
    palette: u32,
    /// Per assignment, which copies counted it as a repeat.
    undo: Vec<Vec<bool>>,
    meter: Meter,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, copies: Vec<Vec<EdgeId>>, palette: u32, meter: Meter) -> Self {
        let mut edge_copies = vec![Vec::new(); g.m()];
        for (i, set) in copies.iter().enumerate() {
            for &e in set {
                edge_copies[e].push(i);
            }
        }
        Search {
            g,
            cmask: vec![0; copies.len()],
            cdups: vec![0; copies.len()],
            cfree: copies.iter().map(|s| s.len() as u32).collect(),
            copies,
            edge_copies,
            color: vec![0; g.m()],
            vmask: vec![0; g.n()],
            max_used: 0,
            palette,
            undo: Vec::new(),
            meter,
        }
    }

    fn allowed(&self, e: EdgeId) -> u64 {
        let (u, v) = self.g.edge(e);
        let top = (self.max_used + 1).min(self.palette);
        let mut mask = ((1u64 << (top + 1)) - 2) & !(self.vmask[u] | self.vmask[v]);
        for &ci in &self.edge_copies[e] {
            if self.cdups[ci] == 0 && self.cfree[ci] == 1 {
                mask &= self.cmask[ci];
            }
        }
        mask
    }

    /// A copy with two uncolored edges and no repeat needs one of them to
    /// reuse a copy color, or both to share a color.
    fn pairs_feasible(&self) -> bool {
        for ci in 0..self.copies.len() {
            if self.cdups[ci] != 0 || self.cfree[ci] != 2 {
                continue;
            }
            let mut open = self.copies[ci].iter().copied().filter(|&e| self.color[e] == 0);
            let (e, f) = (open.next().unwrap(), open.next().unwrap());
            let (ae, af) = (self.allowed(e), self.allowed(f));
            let reuse = (ae | af) & self.cmask[ci] != 0;
            // Any color beyond the used ones is interchangeable with the
            // smallest fresh color, which is in both masks when it exists.
            let share = !self.g.edges_adjacent(e, f) && ae & af != 0;
            if !(reuse || share) {
                return false;
            }
        }
        true
    }

    fn assign(&mut self, e: EdgeId, c: u32) -> bool {
        let bit = 1u64 << c;
        let (u, v) = self.g.edge(e);
        self.color[e] = c as u8;
        self.vmask[u] |= bit;
        self.vmask[v] |= bit;
        let mut ok = true;
        let mut record = Vec::with_capacity(self.edge_copies[e].len());
        for &ci in &self.edge_copies[e] {
            self.cfree[ci] -= 1;
            if self.cmask[ci] & bit != 0 {
                self.cdups[ci] += 1;
                record.push(true);
            } else {
                self.cmask[ci] |= bit;
                record.push(false);
            }
            if self.cfree[ci] == 0 && self.cdups[ci] == 0 {
                ok = false;
            }
        }
        self.undo.push(record);
        ok
    }

    fn unassign(&mut self, e: EdgeId) {
        let c = self.color[e] as u32;
        let bit = 1u64 << c;
        let (u, v) = self.g.edge(e);
        self.color[e] = 0;
        self.vmask[u] &= !bit;
        self.vmask[v] &= !bit;
        let record = self.undo.pop().unwrap();
        for (&ci, dup) in self.edge_copies[e].iter().zip(record) {
            self.cfree[ci] += 1;
            if dup {
                self.cdups[ci] -= 1;
            } else {
                self.cmask[ci] &= !bit;
            }
        }
    }

    /// Some(true): bad coloring left in `color`. Some(false): none exists. None: budget.
    fn dfs(&mut self) -> Option<bool> {
        if !self.meter.tick() {
            return None;
        }
        let mut pick: Option<(u32, usize, EdgeId, u64)> = None;
        for e in 0..self.g.m() {
            if self.color[e] != 0 {
                continue;
            }
            let a = self.allowed(e);
            if a == 0 {
                return Some(false);
            }
            let colored_nbrs = self
                .g
                .adjacent_edges(e)
                .iter()
                .filter(|&&f| self.color[f] != 0)
                .count();
            let key = (a.count_ones(), usize::MAX - colored_nbrs, e, a);
            if pick.is_none_or(|p| (key.0, key.1) < (p.0, p.1)) {
                pick = Some(key);
            }
        }
        let Some((_, _, e, mut a)) = pick else {
            return Some(true);
        };
        if !self.pairs_feasible() {
            return Some(false);
        }
        while a != 0 {
            let c = a.trailing_zeros();
            a &= a - 1;
            let saved = self.max_used;
            self.max_used = self.max_used.max(c);
            let ok = self.assign(e, c);
            let r = if ok { self.dfs() } else { Some(false) };
            if r == Some(true) {
                return r;
            }
            self.unassign(e);
            self.max_used = saved;
            r?;
        }
        Some(false)
    }
}

/// Exhaustive reference: every proper coloring with palette `1..=m`, no
/// symmetry breaking. Only for hosts with a handful of edges.
pub fn forces_naive(g: &Graph, h: &Pattern) -> bool {
    fn rec(g: &Graph, h: &Graph, c: &mut EdgeColoring, e: usize) -> bool {
        if e == g.m() {
            return find_rainbow_in(g, c, h).is_some();
        }
        for col in 1..=g.m() as Color {
            c.set(e, col);
            if c.is_proper(g) && !rec(g, h, c, e + 1) {
                c.unset(e);
                return false;
            }
        }
        c.unset(e);
        true
    }
    rec(g, h.graph(), &mut EdgeColoring::uncolored(g.m()), 0)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalResult {
    pub value: Value,
    /// Verdict for each `K_n` examined, with how the forcing side was settled.
    pub steps: Vec<LocalStep>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalStep {
    pub n: usize,
    pub status: Status,
    /// Name of the forcing subgraph that settled this `n`, if one did.
    pub certificate: Option<String>,
}

/// Smallest `n <= n_cap` whose complete graph forces `h`. Known forcing
/// constructions on at most `n` vertices are tried first; any of them sits
/// inside `K_n`, so its verdict carries over.
pub fn ar_local(h: &Pattern, n_cap: usize, b: &SearchBudget) -> Result<LocalResult> {
    h.require_no_isolated()?;
    if n_cap < h.n() {
        return Err(Error::domain(format!("n_cap {n_cap} is below the pattern's {} vertices", h.n())));
    }
    let certificates = constructions::forcing_certificates(h)?;
    let mut steps = Vec::new();
    let mut lower: Option<usize> = None;
    for n in h.n().max(2)..=n_cap {
        let mut step = LocalStep {
            n,
            status: Status::Exhausted,
            certificate: None,
        };
        for cert in certificates.iter().filter(|c| c.graph.n() <= n) {
            if forces(&cert.graph, h, b)?.status == Status::Forces {
                step.status = Status::Forces;
                step.certificate = Some(cert.name.clone());
                break;
            }
        }
        if step.status != Status::Forces {
            step.status = forces(&Graph::complete(n), h, b)?.status;
        }
        let status = step.status;
        steps.push(step);
        match status {
            Status::Forces => {
                let lo = lower.unwrap_or(n);
                return Ok(LocalResult {
                    value: Value::from_bounds(lo, Some(n)),
                    steps,
                });
            }
            Status::Exhausted => {
                lower.get_or_insert(n);
            }
            Status::Refuted => {}
        }
    }
    Ok(LocalResult {
        value: Value::Interval {
            lower: lower.unwrap_or(n_cap + 1),
            upper: None,
        },
        steps,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SizeResult {
    pub value: Value,
    /// A forcing graph with `value.upper()` edges.
    pub witness: Option<Graph>,
    pub graphs_checked: usize,
    pub nodes: u64,
}

/// Least edge count of a simple graph forcing `h`.
pub fn ar_size_exact(h: &Pattern, b: &SearchBudget) -> Result<SizeResult> {
    size_search(h, b, EnumOptions {
        max_vertices: b.max_vertices,
        ..EnumOptions::default()
    })
}

/// Least edge count of a multigraph forcing `h`, with at most `mult_cap`
/// parallel edges per pair.
pub fn ar_size_multi_exact(h: &Pattern, mult_cap: usize, b: &SearchBudget) -> Result<SizeResult> {
    if mult_cap == 0 {
        return Err(Error::domain("mult_cap must be at least 1"));
    }
    size_search(h, b, EnumOptions {
        multigraph: true,
        mult_cap,
        max_vertices: b.max_vertices,
        ..EnumOptions::default()
    })
}

/// Scans levels by edge count. A least forcing graph is minimal, so every
/// vertex has at least `min_degree(h)` distinct neighbors and every edge lies
/// in a copy of `h` (otherwise that vertex's or edge's colors could be made
/// fresh in a bad coloring of the rest); other graphs are skipped.
fn size_search(h: &Pattern, b: &SearchBudget, opts: EnumOptions) -> Result<SizeResult> {
    h.require_no_isolated()?;
    let mut level = first_level(&opts);
    let mut unresolved: Option<usize> = None;
    let mut checked = 0;
    let mut nodes = 0;
    let clock = b.meter();
    loop {
        let m = level.edges;
        if m >= h.k() {
            for g in &level.graphs {
                if !(0..g.n()).all(|v| distinct_neighbors(g, v) >= h.min_degree()) {
                    continue;
                }
                let sets = copies(g, h.graph(), COPY_CAP)?;
                let mut covered = vec![false; g.m()];
                for e in sets.iter().flatten() {
                    covered[*e] = true;
                }
                if sets.is_empty() || covered.contains(&false) {
                    continue;
                }
                checked += 1;
                let v = forces(g, h, b)?;
                nodes += v.nodes;
                match v.status {
                    Status::Forces => {
                        let lower = unresolved.unwrap_or(m);
                        return Ok(SizeResult {
                            value: Value::from_bounds(lower, Some(m)),
                            witness: Some(g.clone()),
                            graphs_checked: checked,
                            nodes,
                        });
                    }
                    Status::Exhausted => {
                        unresolved.get_or_insert(m);
                    }
                    Status::Refuted => {}
                }
            }
        }
        // Once a search has given up, further levels can only lift the upper
        // end; that scan is held to one search call's budget in total.
        let spent = nodes >= b.max_nodes || clock.out_of_time();
        if m >= b.max_edges || (unresolved.is_some() && spent) {
            return Ok(SizeResult {
                value: Value::Interval {
                    lower: unresolved.unwrap_or(m + 1),
                    upper: None,
                },
                witness: None,
                graphs_checked: checked,
                nodes,
            });
        }
        level = match next_level(&level, &opts) {
            Ok(l) => l,
            Err(Error::Budget(_)) => {
                return Ok(SizeResult {
                    value: Value::Interval {
                        lower: unresolved.unwrap_or(m + 1),
                        upper: None,
                    },
                    witness: None,
                    graphs_checked: checked,
                    nodes,
                })
            }
            Err(e) => return Err(e),
        };
    }
}

fn distinct_neighbors(g: &Graph, v: usize) -> usize {
    let mut nb: Vec<usize> = g.neighbors(v).collect();
    nb.sort_unstable();
    nb.dedup();
    nb.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;

    fn pat(g: Graph) -> Pattern {
        Pattern::new(g).unwrap()
    }

    fn budget() -> SearchBudget {
        SearchBudget::default()
    }

    #[test]
    fn two_stars_force_two_matching() {
        let g = Graph::from_edges(5, &[(0, 1), (2, 3), (2, 4)]).unwrap();
        assert_eq!(forces(&g, &pat(Graph::matching(2)), &budget()).unwrap().status, Status::Forces);
    }

    #[test]
    fn disjoint_edges_refuted_by_one_color() {
        let v = forces(&Graph::matching(2), &pat(Graph::matching(2)), &budget()).unwrap();
        assert_eq!(v.status, Status::Refuted);
        assert_eq!(v.witness.unwrap().complete_colors().unwrap(), vec![1, 1]);
    }

    #[test]
    fn k6_does_not_force_k4() {
        let v = forces(&Graph::complete(6), &pat(Graph::complete(4)), &budget()).unwrap();
        assert_eq!(v.status, Status::Refuted);
        assert!(v.witness.unwrap().max_color() <= 5);
    }

    #[test]
    fn isolated_pattern_vertices_rejected() {
        let mut h = Graph::new(3);
        h.add_edge(0, 1).unwrap();
        assert!(forces(&Graph::complete(3), &pat(h), &budget()).is_err());
    }

    #[test]
    fn node_cap_reports_exhausted() {
        let b = SearchBudget::with_nodes(2);
        let g = crate::constructions::k4_witness().graph;
        let v = forces(&g, &pat(Graph::complete(4)), &b).unwrap();
        assert_eq!(v.status, Status::Exhausted);
    }

    #[test]
    fn local_numbers_small() {
        assert_eq!(ar_local(&pat(Graph::matching(1)), 4, &budget()).unwrap().value.exact(), Some(2));
        assert_eq!(ar_local(&pat(Graph::matching(2)), 6, &budget()).unwrap().value.exact(), Some(5));
        assert_eq!(ar_local(&pat(Graph::path(2)), 6, &budget()).unwrap().value.exact(), Some(3));
    }

    #[test]
    fn size_numbers_small() {
        let r = ar_size_exact(&pat(Graph::matching(1)), &budget()).unwrap();
        assert_eq!(r.value.exact(), Some(1));
        let r = ar_size_exact(&pat(Graph::matching(2)), &budget()).unwrap();
        assert_eq!(r.value.exact(), Some(3));
        let expect = Graph::from_edges(5, &[(0, 1), (2, 3), (2, 4)]).unwrap();
        assert_eq!(canonical_form(&r.witness.unwrap()).unwrap(), canonical_form(&expect).unwrap());
    }

    #[test]
    fn multigraph_size_numbers_small() {
        let b = budget();
        assert_eq!(ar_size_multi_exact(&pat(Graph::matching(2)), 2, &b).unwrap().value.exact(), Some(3));
        assert_eq!(ar_size_multi_exact(&pat(Graph::path(2)), 2, &b).unwrap().value.exact(), Some(2));
    }
}
