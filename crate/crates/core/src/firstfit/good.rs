use serde::Serialize;

use crate::embed::find_rainbow_in;
use crate::error::{Error, Result};
use crate::graph::{Color, EdgeColoring, EdgeId, Embedding, Graph, Vertex};
use crate::params::Pattern;

use super::weights::greedy_matching;

/// A host, its good coloring, and a rainbow copy of the target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodColoredGraph {
    pub graph: Graph,
    /// The good coloring.
    pub coloring: EdgeColoring,
    /// For the inductive constructions, the coloring built round by round;
    /// `coloring` is its reverse.
    pub forward: Option<EdgeColoring>,
    pub target: Pattern,
    pub rainbow_witness: Embedding,
}

impl GoodColoredGraph {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "graph": crate::codec::to_value(&self.graph, Some(&self.coloring)),
            "target": self.target.name(),
            "witness": self.rainbow_witness,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum GoodCheck {
    Good { witness: Embedding },
    NoRainbowCopy,
    /// `edge` has color `color` but no incident edge of color `missing`.
    MissingSupport { edge: EdgeId, color: Color, missing: Color },
}

impl GoodCheck {
    pub fn is_good(&self) -> bool {
        matches!(self, GoodCheck::Good { .. })
    }
}

pub fn is_h_good(g: &Graph, c: &EdgeColoring, h: &Pattern) -> Result<GoodCheck> {
    c.validate(g, true)?;
    let Some(witness) = find_rainbow_in(g, c, h.graph()) else {
        return Ok(GoodCheck::NoRainbowCopy);
    };
    if let Some((edge, color, missing)) = support_violation(g, c) {
        return Ok(GoodCheck::MissingSupport { edge, color, missing });
    }
    Ok(GoodCheck::Good { witness })
}

/// First edge, in id order, missing an incident color below its own.
fn support_violation(g: &Graph, c: &EdgeColoring) -> Option<(EdgeId, Color, Color)> {
    for e in 0..g.m() {
        let color = c.get(e)?;
        let (u, v) = g.edge(e);
        let mut seen = c.colors_at(g, u);
        seen.extend(c.colors_at(g, v));
        if let Some(missing) = (1..color).find(|x| !seen.contains(x)) {
            return Some((e, color, missing));
        }
    }
    None
}

/// Smallest color absent at both endpoints of `e`, ignoring `e` itself.
pub fn first_fit_color(g: &Graph, c: &EdgeColoring, e: EdgeId) -> Color {
    let (u, v) = g.edge(e);
    let mut seen: Vec<Color> = g
        .incident(u)
        .iter()
        .chain(g.incident(v))
        .filter(|&&f| f != e)
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
    color
}

/// Presents the edges in nondecreasing `c` order (ties by id) to First-Fit.
/// Reproduces `c` exactly when every edge of `c` sees all lower colors.
pub fn ff_replay(g: &Graph, c: &EdgeColoring) -> Result<EdgeColoring> {
    c.validate(g, true)?;
    let mut order: Vec<EdgeId> = (0..g.m()).collect();
    order.sort_by_key(|&e| (c.get(e), e));
    let mut out = EdgeColoring::uncolored(g.m());
    for e in order {
        let col = first_fit_color(g, &out, e);
        out.set(e, col);
    }
    Ok(out)
}

/// Builds the path graph round by round: round `i` adds the path edge
/// `v_i v_{i+1}`, chords `v_{2j} v_{i-2j}` for `j <= (i-2)/4`, and a pendant
/// probe at every even `v_j` strictly between `2q` and `i-2q` (`q = (i-2)/4`),
/// all in color `i`. The good coloring is the reverse.
pub fn path_good(k: usize) -> Result<GoodColoredGraph> {
    if k == 0 {
        return Err(Error::domain("path_good needs k >= 1"));
    }
    // `v[j]` is path vertex v_j (1-based); probes get ids in between.
    let mut g = Graph::new(2);
    let mut v: Vec<Vertex> = vec![usize::MAX, 0, 1];
    let mut fwd: Vec<Color> = Vec::new();
    g.add_edge(0, 1)?;
    fwd.push(1);
    let mut path_edges = vec![0];
    for i in 2..=k {
        let color = i as Color;
        let next = g.add_vertex();
        v.push(next);
        path_edges.push(g.add_edge(v[i], next)?);
        fwd.push(color);
        let q = (i - 2) / 4;
        for j in 1..=q {
            g.add_edge(v[2 * j], v[i - 2 * j])?;
            fwd.push(color);
        }
        for j in (2 * q + 1..i - 2 * q).filter(|j| j % 2 == 0) {
            let probe = g.add_vertex();
            g.add_edge(v[j], probe)?;
            fwd.push(color);
        }
    }
    let forward = EdgeColoring::from_colors(fwd)?;
    let coloring = forward.reversed(k as Color);
    let target = Pattern::named(Graph::path(k), format!("P{k}"))?;
    let rainbow_witness = Embedding {
        vertex_map: v[1..].to_vec(),
        edge_map: path_edges,
        rainbow: true,
    };
    Ok(GoodColoredGraph {
        graph: g,
        coloring,
        forward: Some(forward),
        target,
        rainbow_witness,
    })
}

/// Builds the bipartite matching graph round by round: round `i` adds
/// `u_i v_i`, cross edges `u_j v_{i-j}` for `j <= (i-1)/2`, and for even `i`
/// a pendant at `u_{i/2}`, all in color `i`. The good coloring is the reverse.
pub fn matching_good(k: usize) -> Result<GoodColoredGraph> {
    if k == 0 {
        return Err(Error::domain("matching_good needs k >= 1"));
    }
    let mut g = Graph::new(0);
    let mut fwd: Vec<Color> = Vec::new();
    let mut u: Vec<Vertex> = vec![usize::MAX];
    let mut v: Vec<Vertex> = vec![usize::MAX];
    let mut matching_edges = Vec::new();
    for i in 1..=k {
        let color = i as Color;
        u.push(g.add_vertex());
        v.push(g.add_vertex());
        matching_edges.push(g.add_edge(u[i], v[i])?);
        fwd.push(color);
        let f = (i - 1) / 2;
        for j in 1..=f {
            g.add_edge(u[j], v[i - j])?;
            fwd.push(color);
        }
        if f + 1 < i - f {
            let w = g.add_vertex();
            g.add_edge(u[f + 1], w)?;
            fwd.push(color);
        }
    }
    let forward = EdgeColoring::from_colors(fwd)?;
    let coloring = forward.reversed(k as Color);
    let target = Pattern::named(Graph::matching(k), format!("M{k}"))?;
    let vertex_map = (1..=k).flat_map(|i| [u[i], v[i]]).collect();
    let rainbow_witness = Embedding {
        vertex_map,
        edge_map: matching_edges,
        rainbow: true,
    };
    Ok(GoodColoredGraph {
        graph: g,
        coloring,
        forward: Some(forward),
        target,
        rainbow_witness,
    })
}

/// Pads `h` under the bijection `c` into a good graph: for each greedy
/// matching edge, each endpoint and each lower color missing there, one
/// pendant edge in that color.
pub fn goodify(h: &Pattern, c: &[Color]) -> Result<GoodColoredGraph> {
    let k = h.k();
    let mut sorted = c.to_vec();
    sorted.sort_unstable();
    if sorted != (1..=k as Color).collect::<Vec<_>>() {
        return Err(Error::domain("goodify needs a bijection onto 1..k"));
    }
    let base = EdgeColoring::from_colors(c.to_vec())?;
    let pick = greedy_matching(h.graph(), &base)?;
    let mut g = h.graph().clone();
    let mut colors = c.to_vec();
    for &e in &pick.edges {
        let top = c[e];
        let (a, b) = h.graph().edge(e);
        for x in [a, b] {
            let present: Vec<Color> = g.incident(x).iter().map(|&f| colors[f]).collect();
            for gamma in 1..top {
                if !present.contains(&gamma) {
                    let leaf = g.add_vertex();
                    g.add_edge(x, leaf)?;
                    colors.push(gamma);
                }
            }
        }
    }
    let bound = 2 * pick.weight - pick.edges.len();
    debug_assert!(g.m() <= bound);
    let coloring = EdgeColoring::from_colors(colors)?;
    let rainbow_witness = Embedding {
        vertex_map: (0..h.n()).collect(),
        edge_map: (0..k).collect(),
        rainbow: true,
    };
    Ok(GoodColoredGraph {
        graph: g,
        coloring,
        forward: None,
        target: h.clone(),
        rainbow_witness,
    })
}
