use serde::Serialize;

use crate::budget::Meter;
use crate::error::{Error, Result};
use crate::graph::{Color, EdgeColoring, EdgeId, Graph};

/// Largest pattern whose bijections are enumerated.
pub const MAX_WEIGHT_EDGES: usize = 9;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatchingPick {
    pub edges: Vec<EdgeId>,
    pub weight: usize,
}

/// Repeatedly takes the highest-colored edge disjoint from those taken.
/// Ties (only possible for non-rainbow colorings) go to the lower edge id.
pub fn greedy_matching(h: &Graph, c: &EdgeColoring) -> Result<MatchingPick> {
    let colors = c.complete_colors().ok_or_else(|| Error::domain("coloring must be complete"))?;
    if colors.len() != h.m() {
        return Err(Error::domain("coloring length differs from edge count"));
    }
    let mut order: Vec<EdgeId> = (0..h.m()).collect();
    order.sort_by_key(|&e| (std::cmp::Reverse(colors[e]), e));
    let mut used = vec![false; h.n()];
    let mut pick = MatchingPick {
        edges: Vec::new(),
        weight: 0,
    };
    for e in order {
        let (u, v) = h.edge(e);
        if !used[u] && !used[v] {
            used[u] = true;
            used[v] = true;
            pick.edges.push(e);
            pick.weight += colors[e] as usize;
        }
    }
    Ok(pick)
}

/// Heaviest matching by exhaustive include/exclude search.
pub fn max_weight_matching(h: &Graph, c: &EdgeColoring) -> Result<MatchingPick> {
    if h.m() > 20 {
        return Err(Error::budget("max_weight_matching is exhaustive; at most 20 edges"));
    }
    let colors = c.complete_colors().ok_or_else(|| Error::domain("coloring must be complete"))?;
    if colors.len() != h.m() {
        return Err(Error::domain("coloring length differs from edge count"));
    }
    let weights: Vec<usize> = colors.iter().map(|&x| x as usize).collect();
    let mut best = MatchingPick {
        edges: Vec::new(),
        weight: 0,
    };
    let mut chosen = Vec::new();
    max_rec(h, &weights, 0, &mut vec![false; h.n()], &mut chosen, 0, &mut best);
    Ok(best)
}

fn max_rec(
    h: &Graph,
    w: &[usize],
    e: usize,
    used: &mut Vec<bool>,
    chosen: &mut Vec<EdgeId>,
    weight: usize,
    best: &mut MatchingPick,
) {
    if e == h.m() {
        if weight > best.weight || (weight == best.weight && best.edges.is_empty() && !chosen.is_empty()) {
            best.weight = weight;
            best.edges = chosen.clone();
        }
        return;
    }
    let rest: usize = w[e..].iter().sum();
    if weight + rest <= best.weight && !best.edges.is_empty() {
        return;
    }
    let (u, v) = h.edge(e);
    if !used[u] && !used[v] {
        used[u] = true;
        used[v] = true;
        chosen.push(e);
        max_rec(h, w, e + 1, used, chosen, weight + w[e], best);
        chosen.pop();
        used[u] = false;
        used[v] = false;
    }
    max_rec(h, w, e + 1, used, chosen, weight, best);
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightReport {
    pub w_max: usize,
    pub w_greedy: usize,
    /// A bijection (colors by edge id) attaining each minimum.
    pub max_coloring: Vec<Color>,
    pub greedy_coloring: Vec<Color>,
}

/// Least maximum-matching weight over bijections `E(h) -> 1..k`.
pub fn w_max(h: &Graph, meter: &mut Meter) -> Result<(usize, Vec<Color>)> {
    min_over_bijections(h, meter, |c| max_weight_matching(h, c).map(|p| p.weight))
}

/// Least greedy-matching weight over bijections `E(h) -> 1..k`.
pub fn w_greedy(h: &Graph, meter: &mut Meter) -> Result<(usize, Vec<Color>)> {
    min_over_bijections(h, meter, |c| greedy_matching(h, c).map(|p| p.weight))
}

pub fn weights(h: &Graph, meter: &mut Meter) -> Result<WeightReport> {
    let (w_max, max_coloring) = w_max(h, meter)?;
    let (w_greedy, greedy_coloring) = w_greedy(h, meter)?;
    Ok(WeightReport {
        w_max,
        w_greedy,
        max_coloring,
        greedy_coloring,
    })
}

/// Visits permutations in lexicographic order and keeps the first minimum.
fn min_over_bijections(
    h: &Graph,
    meter: &mut Meter,
    weight: impl Fn(&EdgeColoring) -> Result<usize>,
) -> Result<(usize, Vec<Color>)> {
    let k = h.m();
    if k > MAX_WEIGHT_EDGES {
        return Err(Error::budget(format!(
            "weights enumerate all bijections; at most {MAX_WEIGHT_EDGES} edges"
        )));
    }
    let mut perm: Vec<Color> = (1..=k as Color).collect();
    let mut best: Option<(usize, Vec<Color>)> = None;
    loop {
        if !meter.tick() {
            return Err(Error::budget("bijection enumeration exceeded the node budget"));
        }
        let w = weight(&EdgeColoring::from_colors(perm.clone())?)?;
        if best.as_ref().is_none_or(|b| w < b.0) {
            best = Some((w, perm.clone()));
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(best.unwrap_or((0, Vec::new())))
}

fn next_permutation(p: &mut [Color]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let Some(i) = (0..p.len() - 1).rev().find(|&i| p[i] < p[i + 1]) else {
        return false;
    };
    let j = (i + 1..p.len()).rev().find(|&j| p[j] > p[i]).unwrap();
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DegreeOrder {
    /// Colors by edge id; the ordering gets `k, k-1, ..., 1`.
    pub coloring: Vec<Color>,
    /// First edge of each block, in order.
    pub leaders: Vec<EdgeId>,
    /// Degree of each leader in the residual graph when it was chosen.
    pub leader_degrees: Vec<usize>,
    /// Total color of the leaders.
    pub weight: usize,
    /// `(m-1)k/2` for `m` leaders, reported for comparison only.
    pub stated_bound: f64,
}

/// Blocks of a highest-degree edge followed by its neighbors, repeated on
/// the graph left after deleting the leader's endpoints. Ties go to the
/// lower edge id.
pub fn degree_order_coloring(h: &Graph) -> DegreeOrder {
    let k = h.m();
    let mut alive_v = vec![true; h.n()];
    let mut placed = vec![false; k];
    let mut order = Vec::with_capacity(k);
    let mut leaders = Vec::new();
    let mut leader_degrees = Vec::new();
    let live = |e: EdgeId, alive_v: &[bool]| {
        let (u, v) = h.edge(e);
        alive_v[u] && alive_v[v]
    };
    while order.len() < k {
        let degree = |e: EdgeId| {
            1 + h
                .adjacent_edges(e)
                .into_iter()
                .filter(|&f| live(f, &alive_v))
                .count()
        };
        let leader = (0..k)
            .filter(|&e| !placed[e] && live(e, &alive_v))
            .max_by_key(|&e| (degree(e), std::cmp::Reverse(e)))
            .expect("blocks cover every edge");
        leaders.push(leader);
        leader_degrees.push(degree(leader));
        placed[leader] = true;
        order.push(leader);
        for f in h.adjacent_edges(leader) {
            if !placed[f] && live(f, &alive_v) {
                placed[f] = true;
                order.push(f);
            }
        }
        let (u, v) = h.edge(leader);
        alive_v[u] = false;
        alive_v[v] = false;
    }
    let mut coloring = vec![0; k];
    for (i, &e) in order.iter().enumerate() {
        coloring[e] = (k - i) as Color;
    }
    let weight = leaders.iter().map(|&e| coloring[e] as usize).sum();
    let m = leaders.len();
    DegreeOrder {
        coloring,
        leaders,
        leader_degrees,
        weight,
        stated_bound: (m as f64 - 1.0) * k as f64 / 2.0,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KnColoring {
    pub n: usize,
    /// Colors by edge id of `Graph::complete(n)`.
    pub coloring: Vec<Color>,
    pub greedy: MatchingPick,
}

/// A bijection on the edges of `K_n` (`n` even) filled clique by clique:
/// the edges added with vertices `2i-1, 2i` take the next block of colors,
/// and the edge between those two vertices takes the block's top color
/// `C(2i, 2)`.
pub fn kn_ff_coloring(n: usize) -> Result<KnColoring> {
    if !n.is_multiple_of(2) || n == 0 || n > 14 {
        return Err(Error::domain("kn_ff_coloring needs an even n between 2 and 14"));
    }
    let g = Graph::complete(n);
    let mut coloring = vec![0 as Color; g.m()];
    let mut next: Color = 1;
    for i in 1..=n / 2 {
        let (a, b) = (2 * i - 2, 2 * i - 1);
        for x in 0..a {
            for y in [a, b] {
                coloring[g.edges_between(x, y).next().unwrap()] = next;
                next += 1;
            }
        }
        coloring[g.edges_between(a, b).next().unwrap()] = next;
        next += 1;
    }
    let greedy = greedy_matching(&g, &EdgeColoring::from_colors(coloring.clone())?)?;
    Ok(KnColoring { n, coloring, greedy })
}
