//! Isomorphism classes of graphs without isolated vertices, level by level in
//! the edge count. Level `m + 1` is every one-edge extension of level `m`
//! (new edges may bring one or two new vertices), deduplicated by canonical
//! form. Every class with `m + 1` edges has a one-edge deletion in level `m`,
//! so the levels are complete.
//!
//! An optional component cap keeps only graphs with at most that many
//! components. This stays complete: each such graph loses a cycle edge or a
//! leaf edge without gaining a component.

use std::collections::BTreeMap;

use crate::canon::canonical_form_capped;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug)]
pub struct EnumOptions {
    /// Allow parallel edges up to `mult_cap` per pair.
    pub multigraph: bool,
    pub mult_cap: usize,
    pub max_vertices: usize,
    pub max_components: Option<usize>,
    /// Fail with a budget error when a level would exceed this many classes.
    pub max_level_size: usize,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            multigraph: false,
            mult_cap: 1,
            max_vertices: 16,
            max_components: None,
            max_level_size: 200_000,
        }
    }
}

/// One level: representatives sorted by canonical key.
#[derive(Clone, Debug)]
pub struct Level {
    pub edges: usize,
    pub graphs: Vec<Graph>,
}

pub fn first_level(opts: &EnumOptions) -> Level {
    let g = if opts.multigraph {
        Graph::multi_from_edges(2, &[(0, 1)]).unwrap()
    } else {
        Graph::from_edges(2, &[(0, 1)]).unwrap()
    };
    Level { edges: 1, graphs: vec![g] }
}

pub fn next_level(level: &Level, opts: &EnumOptions) -> Result<Level> {
    let mut found: BTreeMap<String, Graph> = BTreeMap::new();
    for g in &level.graphs {
        for ext in extensions(g, opts) {
            if let Some(cap) = opts.max_components {
                if ext.components().len() > cap {
                    continue;
                }
            }
            let key = canonical_form_capped(&ext, opts.max_vertices)?;
            found.entry(key).or_insert(ext);
            if found.len() > opts.max_level_size {
                return Err(Error::budget(format!(
                    "level {} has more than {} classes",
                    level.edges + 1,
                    opts.max_level_size
                )));
            }
        }
    }
    Ok(Level {
        edges: level.edges + 1,
        graphs: found.into_values().collect(),
    })
}

/// All levels from 1 to `max_edges` edges.
pub fn levels_up_to(max_edges: usize, opts: &EnumOptions) -> Result<Vec<Level>> {
    let mut out = Vec::new();
    if max_edges == 0 {
        return Ok(out);
    }
    out.push(first_level(opts));
    while out.len() < max_edges {
        let next = next_level(out.last().unwrap(), opts)?;
        out.push(next);
    }
    Ok(out)
}

fn extensions(g: &Graph, opts: &EnumOptions) -> Vec<Graph> {
    let n = g.n();
    let mut out = Vec::new();
    let mut push = |extra: usize, u: usize, v: usize| {
        if n + extra > opts.max_vertices {
            return;
        }
        let mut h = g.clone();
        for _ in 0..extra {
            h.add_vertex();
        }
        h.add_edge(u, v).expect("extension edges are legal");
        out.push(h);
    };
    for v in 1..n {
        for u in 0..v {
            let mult = g.multiplicity(u, v);
            let room = if opts.multigraph { mult < opts.mult_cap } else { mult == 0 };
            if room {
                push(0, u, v);
            }
        }
    }
    for u in 0..n {
        push(1, u, n);
    }
    push(2, n, n + 1);
    out
}
