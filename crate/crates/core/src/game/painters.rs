use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::firstfit::first_fit_color;
use crate::graph::{Color, EdgeColoring, EdgeId, Graph};
use crate::params::Pattern;

use super::solver::Solver;
use super::Painter;

/// Colors already used somewhere that are free at both ends of `e`, then one
/// fresh color. Fresh colors are interchangeable, so one stands for all.
pub fn painter_options(g: &Graph, c: &EdgeColoring, e: EdgeId) -> Vec<Color> {
    let (u, v) = g.edge(e);
    let blocked: Vec<Color> = c.colors_at(g, u).union(&c.colors_at(g, v)).copied().collect();
    let mut out: Vec<Color> = c
        .distinct_colors()
        .into_iter()
        .filter(|x| !blocked.contains(x))
        .collect();
    out.push(c.max_color() + 1);
    out
}

pub struct FirstFitPainter;

impl Painter for FirstFitPainter {
    fn name(&self) -> String {
        "first-fit".into()
    }

    fn color(&mut self, g: &Graph, c: &EdgeColoring, e: EdgeId) -> Color {
        first_fit_color(g, c, e)
    }
}

/// Uniform over [`painter_options`], reproducible from the seed.
pub struct RandomPainter {
    seed: u64,
    rng: ChaCha8Rng,
}

impl RandomPainter {
    pub fn new(seed: u64) -> Self {
        RandomPainter {
            seed,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }
}

impl Painter for RandomPainter {
    fn name(&self) -> String {
        format!("random({})", self.seed)
    }

    fn color(&mut self, g: &Graph, c: &EdgeColoring, e: EdgeId) -> Color {
        let opts = painter_options(g, c, e);
        opts[self.rng.gen_range(0..opts.len())]
    }
}

/// Picks the color after which Builder needs the most further edges, looking
/// `depth` edges ahead against every Builder. Ties go to the smaller color.
/// When the node budget of a decision runs out it falls back to First-Fit.
pub struct MinimaxPainter {
    depth: usize,
    solver: Solver,
    /// Decisions that hit the node budget.
    pub fallbacks: usize,
}

impl MinimaxPainter {
    pub fn new(h: &Pattern, depth: usize, multigraph: bool) -> Self {
        MinimaxPainter {
            depth,
            solver: Solver::new(h, multigraph, 4 * depth + 4, 2_000_000),
            fallbacks: 0,
        }
    }

    /// Horizon `k^2`, past which every Builder game against `h` is decided.
    pub fn full(h: &Pattern, multigraph: bool) -> Self {
        Self::new(h, h.k() * h.k(), multigraph)
    }
}

impl Painter for MinimaxPainter {
    fn name(&self) -> String {
        format!("minimax({})", self.depth)
    }

    fn color(&mut self, g: &Graph, c: &EdgeColoring, e: EdgeId) -> Color {
        let mut best: Option<(usize, Color)> = None;
        let mut seen = Vec::new();
        self.solver.reset_meter();
        for col in painter_options(g, c, e) {
            let mut c2 = c.clone();
            c2.set(e, col);
            let Ok(key) = self.solver.key(g, &c2) else {
                self.fallbacks += 1;
                return first_fit_color(g, c, e);
            };
            if seen.contains(&key) {
                continue;
            }
            seen.push(key);
            // Edges Builder still needs, or depth + 1 if more than depth.
            let mut need = self.depth + 1;
            for t in 0..=self.depth {
                match self.solver.wins(g, &c2, t) {
                    Some(true) => {
                        need = t;
                        break;
                    }
                    Some(false) => {}
                    None => {
                        self.fallbacks += 1;
                        return first_fit_color(g, c, e);
                    }
                }
            }
            if best.is_none_or(|(b, _)| need > b) {
                best = Some((need, col));
            }
        }
        best.expect("a fresh color is always available").1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn options_include_one_fresh_color() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3), (1, 2)]).unwrap();
        let c = EdgeColoring::from_partial(vec![Some(1), Some(2), None]).unwrap();
        assert_eq!(painter_options(&g, &c, 2), vec![3]);
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let c = EdgeColoring::from_partial(vec![Some(1), None]).unwrap();
        assert_eq!(painter_options(&g, &c, 1), vec![1, 2]);
    }

    #[test]
    fn first_fit_on_an_isolated_edge() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let c = EdgeColoring::uncolored(1);
        assert_eq!(FirstFitPainter.color(&g, &c, 0), 1);
    }

    #[test]
    fn random_is_reproducible() {
        let g = Graph::from_edges(6, &[(0, 1), (2, 3), (4, 5)]).unwrap();
        let c = EdgeColoring::from_partial(vec![Some(1), Some(2), None]).unwrap();
        let draw = |seed| {
            let mut p = RandomPainter::new(seed);
            (0..20).map(|_| p.color(&g, &c, 2)).collect::<Vec<_>>()
        };
        assert_eq!(draw(5), draw(5));
        assert!(draw(5).iter().all(|x| (1..=3).contains(x)));
    }
}
