//! Canonical keys for small (multi)graphs, optionally edge-colored.
//!
//! Each connected component is labeled by individualization-refinement: an
//! equitable-style partition refinement on edge multiplicities, then a full
//! search over individualizations of the first non-singleton cell, pruned by
//! vertex twins and by the code prefix fixed by leading singleton cells.
//! The component key is the lexicographically least adjacency code over all
//! leaves; the graph key is the sorted list of component keys.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{Color, EdgeColoring, Graph};

pub const DEFAULT_VERTEX_CAP: usize = 16;

/// How edge colors enter a colored key.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColorMode {
    /// Colors are fixed labels: isomorphisms must preserve every color value.
    Absolute,
    /// Colors may be renamed: isomorphisms may permute the palette.
    UpToPalette,
}

/// Canonical key of an uncolored graph, respecting parallel-edge multiplicities.
/// Two graphs get equal keys iff they are isomorphic.
pub fn canonical_form(g: &Graph) -> Result<String> {
    canonical_form_capped(g, DEFAULT_VERTEX_CAP)
}

pub fn canonical_form_capped(g: &Graph, vertex_cap: usize) -> Result<String> {
    check_cap(g, vertex_cap)?;
    Ok(Keyer::new(g, None, ColorMode::Absolute).key())
}

/// Key of a colored graph. Uncolored edges are a distinguished label that is
/// never renamed.
///
/// For simple graphs the key is canonical in both modes. For multigraphs in
/// [`ColorMode::UpToPalette`] it is a complete invariant (equal keys imply
/// isomorphic colored graphs) but may separate some isomorphic pairs, which
/// is enough for memoization.
pub fn colored_key(g: &Graph, c: &EdgeColoring, mode: ColorMode, vertex_cap: usize) -> Result<String> {
    check_cap(g, vertex_cap)?;
    if c.len() != g.m() {
        return Err(Error::domain("coloring length differs from edge count"));
    }
    Ok(Keyer::new(g, Some(c), mode).key())
}

fn check_cap(g: &Graph, cap: usize) -> Result<()> {
    if g.n() > cap {
        return Err(Error::budget(format!(
            "canonical form limited to {cap} vertices, graph has {}",
            g.n()
        )));
    }
    Ok(())
}

const UNCOLORED: u32 = 0;

struct Keyer<'a> {
    g: &'a Graph,
    coloring: Option<&'a EdgeColoring>,
    mode: ColorMode,
}

type Sig = (u32, u32, Vec<u32>);

/// Per-component data: pair labels indexed by local vertex ids.
struct Component {
    size: usize,
    /// Sorted edge labels between local vertices i and j (empty if none).
    labels: Vec<Vec<Vec<u32>>>,
    /// Refinement signature of each pair, invariant under the allowed relabelings.
    sig: Vec<Vec<Sig>>,
    /// `twins[u][w]`: swapping u and w (and nothing else) is an automorphism.
    twins: Vec<Vec<bool>>,
}

impl<'a> Keyer<'a> {
    fn new(g: &'a Graph, coloring: Option<&'a EdgeColoring>, mode: ColorMode) -> Self {
        Keyer { g, coloring, mode }
    }

    fn label(&self, e: usize) -> u32 {
        match self.coloring {
            None => 1,
            Some(c) => c.get(e).map_or(UNCOLORED, |c: Color| c),
        }
    }

    fn key(&self) -> String {
        let units: Vec<Vec<usize>> = if self.coloring.is_some() && self.mode == ColorMode::UpToPalette {
            // Palette renaming must be shared across components, so all
            // non-isolated vertices form a single unit.
            let mut units: Vec<Vec<usize>> = self.g.isolated_vertices().into_iter().map(|v| vec![v]).collect();
            let rest: Vec<usize> = (0..self.g.n()).filter(|&v| self.g.degree(v) > 0).collect();
            if !rest.is_empty() {
                units.push(rest);
            }
            units
        } else {
            self.g.components()
        };
        let mut parts: Vec<String> = units.iter().map(|vs| self.component_key(vs)).collect();
        parts.sort();
        let tag = if self.coloring.is_some() { "c" } else { "g" };
        format!("{tag}{}[{}]", self.g.n(), parts.join(";"))
    }

    fn component_key(&self, vs: &[usize]) -> String {
        let size = vs.len();
        let local: HashMap<usize, usize> = vs.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut labels = vec![vec![Vec::new(); size]; size];
        for &v in vs {
            for &e in self.g.incident(v) {
                let (a, b) = self.g.edge(e);
                if a != v {
                    continue;
                }
                let (i, j) = (local[&a], local[&b]);
                let l = self.label(e);
                labels[i][j].push(l);
                labels[j][i].push(l);
            }
        }
        for row in labels.iter_mut() {
            for cell in row.iter_mut() {
                cell.sort_unstable();
            }
        }
        let sig = labels
            .iter()
            .map(|row| {
                row.iter()
                    .map(|ls| {
                        let mult = ls.len() as u32;
                        let unc = ls.iter().filter(|&&l| l == UNCOLORED).count() as u32;
                        let abs = match (self.coloring, self.mode) {
                            (Some(_), ColorMode::Absolute) => ls.clone(),
                            _ => Vec::new(),
                        };
                        (mult, unc, abs)
                    })
                    .collect()
            })
            .collect();
        let twins = (0..size)
            .map(|u| {
                (0..size)
                    .map(|w| u != w && (0..size).all(|x| x == u || x == w || labels[u][x] == labels[w][x]))
                    .collect()
            })
            .collect();
        let comp = Component {
            size,
            labels,
            sig,
            twins,
        };
        let mut best: Option<Vec<u32>> = None;
        let start = vec![(0..size).collect::<Vec<_>>()];
        self.search(&comp, start, &mut best);
        let code = best.unwrap_or_default();
        let body: Vec<String> = code.iter().map(u32::to_string).collect();
        format!("{size}:{}", body.join(","))
    }

    fn search(&self, comp: &Component, mut cells: Vec<Vec<usize>>, best: &mut Option<Vec<u32>>) {
        refine(comp, &mut cells);
        // Leading singleton cells fix a prefix of every leaf code below this node.
        let fixed = cells.iter().take_while(|c| c.len() == 1).count();
        if fixed > 1 && fixed < comp.size {
            if let Some(b) = best.as_ref() {
                let order: Vec<usize> = cells[..fixed].iter().map(|c| c[0]).collect();
                let prefix = self.leaf_code(comp, &order);
                if prefix.as_slice() > &b[..prefix.len().min(b.len())] {
                    return;
                }
            }
        }
        let target = cells.iter().position(|c| c.len() > 1);
        match target {
            None => {
                let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
                let code = self.leaf_code(comp, &order);
                if best.as_ref().is_none_or(|b| code < *b) {
                    *best = Some(code);
                }
            }
            Some(t) => {
                let mut tried: Vec<usize> = Vec::new();
                for &v in &cells[t] {
                    if tried.iter().any(|&u| comp.twins[u][v]) {
                        continue;
                    }
                    tried.push(v);
                    let mut next = cells.clone();
                    let rest: Vec<usize> = cells[t].iter().copied().filter(|&w| w != v).collect();
                    next[t] = vec![v];
                    next.insert(t + 1, rest);
                    self.search(comp, next, best);
                }
            }
        }
    }

    fn leaf_code(&self, comp: &Component, order: &[usize]) -> Vec<u32> {
        let mut rename: HashMap<u32, u32> = HashMap::new();
        let mut code = Vec::with_capacity(comp.size * comp.size);
        for j in 1..order.len() {
            for i in 0..j {
                let ls = &comp.labels[order[i]][order[j]];
                code.push(ls.len() as u32);
                if self.coloring.is_none() {
                    continue;
                }
                let mut mapped: Vec<u32> = ls
                    .iter()
                    .map(|&l| match self.mode {
                        ColorMode::Absolute => l,
                        ColorMode::UpToPalette if l == UNCOLORED => UNCOLORED,
                        ColorMode::UpToPalette => {
                            let next = rename.len() as u32 + 1;
                            *rename.entry(l).or_insert(next)
                        }
                    })
                    .collect();
                mapped.sort_unstable();
                code.extend(mapped);
            }
        }
        code
    }
}

/// Splits cells by their signature toward every other cell until stable.
fn refine(comp: &Component, cells: &mut Vec<Vec<usize>>) {
    'outer: loop {
        for s in 0..cells.len() {
            let splitter = cells[s].clone();
            for x in 0..cells.len() {
                if cells[x].len() < 2 {
                    continue;
                }
                let mut keyed: Vec<(Vec<&Sig>, usize)> = cells[x]
                    .iter()
                    .map(|&v| {
                        let mut k: Vec<&Sig> =
                            splitter.iter().map(|&w| &comp.sig[v][w]).collect();
                        k.sort();
                        (k, v)
                    })
                    .collect();
                keyed.sort();
                if keyed.first().map(|k| &k.0) == keyed.last().map(|k| &k.0) {
                    continue;
                }
                let mut groups: Vec<Vec<usize>> = Vec::new();
                let mut prev: Option<&Vec<&(u32, u32, Vec<u32>)>> = None;
                for (k, v) in &keyed {
                    if prev != Some(k) {
                        groups.push(Vec::new());
                        prev = Some(k);
                    }
                    groups.last_mut().unwrap().push(*v);
                }
                cells.splice(x..=x, groups);
                continue 'outer;
            }
        }
        break;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabeled_c4_matches() {
        let a = Graph::cycle(4);
        let b = Graph::from_edges(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
    }

    #[test]
    fn p2_differs_from_m2() {
        let p2 = Graph::path(2);
        let m2 = Graph::matching(2).without_isolated();
        let p2_four = Graph::from_edges(4, &[(0, 1), (1, 2)]).unwrap();
        assert_ne!(canonical_form(&p2).unwrap(), canonical_form(&m2).unwrap());
        assert_ne!(canonical_form(&p2_four).unwrap(), canonical_form(&m2).unwrap());
    }

    #[test]
    fn triangle_all_labelings() {
        let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let base = canonical_form(&Graph::cycle(3)).unwrap();
        for p in perms {
            let g = Graph::cycle(3).relabel(&p).unwrap();
            assert_eq!(canonical_form(&g).unwrap(), base);
        }
    }

    #[test]
    fn multiplicity_matters() {
        let a = Graph::multi_from_edges(3, &[(0, 1), (0, 1), (1, 2)]).unwrap();
        let b = Graph::multi_from_edges(3, &[(0, 1), (1, 2), (1, 2)]).unwrap();
        let c = Graph::multi_from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
        assert_ne!(canonical_form(&a).unwrap(), canonical_form(&c).unwrap());
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            canonical_form(&Graph::new(17)),
            Err(Error::Budget(_))
        ));
        assert!(canonical_form_capped(&Graph::new(17), 20).is_ok());
    }

    #[test]
    fn palette_mode_ignores_color_names() {
        let g = Graph::path(2);
        let c12 = EdgeColoring::from_colors(vec![1, 2]).unwrap();
        let c57 = EdgeColoring::from_colors(vec![7, 5]).unwrap();
        let k = |c: &EdgeColoring, m| colored_key(&g, c, m, 16).unwrap();
        assert_eq!(k(&c12, ColorMode::UpToPalette), k(&c57, ColorMode::UpToPalette));
        assert_ne!(k(&c12, ColorMode::Absolute), k(&c57, ColorMode::Absolute));
        let c21 = EdgeColoring::from_colors(vec![2, 1]).unwrap();
        assert_eq!(k(&c12, ColorMode::Absolute), k(&c21, ColorMode::Absolute));
    }

    #[test]
    fn palette_mode_distinguishes_structure() {
        // Two P3 colorings: 1,2,1 versus 1,2,3.
        let g = Graph::path(3);
        let a = EdgeColoring::from_colors(vec![1, 2, 1]).unwrap();
        let b = EdgeColoring::from_colors(vec![1, 2, 3]).unwrap();
        assert_ne!(
            colored_key(&g, &a, ColorMode::UpToPalette, 16).unwrap(),
            colored_key(&g, &b, ColorMode::UpToPalette, 16).unwrap()
        );
    }
}
