//! The online game: Builder presents edges one at a time, Painter colors
//! each properly on arrival, and Builder wins once a rainbow copy of the
//! target appears.
//!
//! Builders drive a [`Game`] directly; every [`Game::present`] call asks the
//! painter for a color and returns it, or a [`Stop`] that ends the game.

mod builders;
mod painters;
mod solver;

use serde::ser::{Serialize, Serializer};
use serde_json::json;

use crate::embed::find_rainbow_embedding;
use crate::error::{Error, Result};
use crate::graph::{Color, EdgeColoring, EdgeId, Graph, Vertex};
use crate::params::Pattern;

pub use builders::{BuilderPlan, CycleFfBuilder, GenericBuilder, MatchingMultiBuilder};
pub use painters::{painter_options, FirstFitPainter, MinimaxPainter, RandomPainter};
pub use solver::{ar_online_exact, OnlineResult, Solver};

/// One endpoint of a presented edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Spec {
    Existing(Vertex),
    Fresh,
}

impl Serialize for Spec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match *self {
            Spec::Existing(v) => s.serialize_u64(v as u64),
            Spec::Fresh => s.serialize_str("new"),
        }
    }
}

impl Spec {
    fn of(v: Option<Vertex>) -> Spec {
        v.map_or(Spec::Fresh, Spec::Existing)
    }
}

/// A presented edge as the game recorded it.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Move {
    pub ends: [Spec; 2],
    /// Vertex ids after fresh endpoints were created.
    pub vertices: [Vertex; 2],
    /// Set when the edge joins an already adjacent pair (multigraph games).
    pub parallel: bool,
    pub color: Color,
}

/// The edge a [`Game::present`] call added.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Placed {
    pub u: Vertex,
    pub v: Vertex,
    pub edge: EdgeId,
    pub color: Color,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GameCaps {
    pub max_edges: usize,
    pub max_vertices: usize,
    pub multigraph: bool,
}

impl GameCaps {
    pub fn simple(max_edges: usize) -> Self {
        GameCaps {
            max_edges,
            max_vertices: 4 * max_edges + 4,
            multigraph: false,
        }
    }

    pub fn multigraph(max_edges: usize) -> Self {
        GameCaps {
            multigraph: true,
            ..Self::simple(max_edges)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Offender {
    Builder,
    Painter,
}

/// Why a game stopped before the builder finished its own plan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stop {
    Won,
    Cap,
    Illegal { offender: Offender, reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(tag = "status", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum GameStatus {
    Won,
    Exhausted { reason: String },
    Invalid { offender: Offender, reason: String },
}

/// A named property a builder checked during play.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Check {
    pub label: String,
    pub ok: bool,
    pub detail: String,
}

/// What a painter does with a newly presented edge `e` (uncolored in `c`).
pub trait Painter {
    fn name(&self) -> String;
    fn color(&mut self, g: &Graph, c: &EdgeColoring, e: EdgeId) -> Color;
}

pub trait Builder {
    fn name(&self) -> String;
    /// Plays until the plan ends; `Err` propagates a stop from `present`.
    fn play(&mut self, game: &mut Game<'_>) -> std::result::Result<(), Stop>;
}

pub struct Game<'p> {
    target: Pattern,
    caps: GameCaps,
    graph: Graph,
    coloring: EdgeColoring,
    painter: &'p mut dyn Painter,
    moves: Vec<Move>,
    checks: Vec<Check>,
    won: bool,
}

impl<'p> Game<'p> {
    pub fn new(target: &Pattern, caps: GameCaps, painter: &'p mut dyn Painter) -> Self {
        let graph = if caps.multigraph { Graph::multigraph(0) } else { Graph::new(0) };
        Game {
            target: target.clone(),
            caps,
            graph,
            coloring: EdgeColoring::uncolored(0),
            painter,
            moves: Vec::new(),
            checks: Vec::new(),
            won: false,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn coloring(&self) -> &EdgeColoring {
        &self.coloring
    }

    pub fn caps(&self) -> GameCaps {
        self.caps
    }

    pub fn target(&self) -> &Pattern {
        &self.target
    }

    pub fn won(&self) -> bool {
        self.won
    }

    pub fn moves(&self) -> &[Move] {
        &self.moves
    }

    pub fn record_check(&mut self, label: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            label: label.into(),
            ok,
            detail: detail.into(),
        });
    }

    /// Checks a builder move without playing it.
    pub fn check_move(&self, a: Spec, b: Spec) -> std::result::Result<(), Stop> {
        let illegal = |reason: String| Stop::Illegal {
            offender: Offender::Builder,
            reason,
        };
        if self.won {
            return Err(Stop::Won);
        }
        if self.moves.len() >= self.caps.max_edges {
            return Err(Stop::Cap);
        }
        let fresh = [a, b].iter().filter(|s| **s == Spec::Fresh).count();
        if self.graph.n() + fresh > self.caps.max_vertices {
            return Err(Stop::Cap);
        }
        for s in [a, b] {
            if let Spec::Existing(v) = s {
                if v >= self.graph.n() {
                    return Err(illegal(format!("vertex {v} does not exist")));
                }
            }
        }
        if let (Spec::Existing(u), Spec::Existing(v)) = (a, b) {
            if u == v {
                return Err(illegal(format!("loop at vertex {u}")));
            }
            if !self.caps.multigraph && self.graph.has_edge(u, v) {
                return Err(illegal(format!("edge {u}-{v} already present")));
            }
        }
        Ok(())
    }

    /// Adds the edge, asks the painter for its color, and returns it. A
    /// rejected move or color leaves the game unchanged.
    pub fn present(&mut self, a: Spec, b: Spec) -> std::result::Result<Placed, Stop> {
        self.check_move(a, b)?;
        let mut g = self.graph.clone();
        let mut resolve = |s: Spec| match s {
            Spec::Existing(v) => v,
            Spec::Fresh => g.add_vertex(),
        };
        let (u, v) = (resolve(a), resolve(b));
        let parallel = g.has_edge(u, v);
        let e = g.add_edge(u, v).expect("move was checked");
        let mut c = self.coloring.clone();
        c.push(None);
        let color = self.painter.color(&g, &c, e);
        if color == 0 || c.colors_at(&g, u).contains(&color) || c.colors_at(&g, v).contains(&color) {
            return Err(Stop::Illegal {
                offender: Offender::Painter,
                reason: format!("color {color} on edge {u}-{v} is not proper"),
            });
        }
        c.set(e, color);
        self.graph = g;
        self.coloring = c;
        self.moves.push(Move {
            ends: [a, b],
            vertices: [u, v],
            parallel,
            color,
        });
        self.won = find_rainbow_embedding(&self.graph, &self.coloring, &self.target).is_some();
        Ok(Placed { u, v, edge: e, color })
    }

    pub fn finish(self, builder: String, stop: std::result::Result<(), Stop>) -> GameTranscript {
        let status = match stop {
            Ok(()) | Err(Stop::Won) if self.won => GameStatus::Won,
            Ok(()) | Err(Stop::Won) => GameStatus::Exhausted {
                reason: "builder plan ended without a rainbow copy".into(),
            },
            Err(Stop::Cap) => GameStatus::Exhausted {
                reason: format!(
                    "caps reached ({} edges, {} vertices)",
                    self.caps.max_edges, self.caps.max_vertices
                ),
            },
            Err(Stop::Illegal { offender, reason }) => GameStatus::Invalid { offender, reason },
        };
        // Independent recomputation from the move list.
        let result = match replay(&self.moves, self.caps.multigraph, &self.target) {
            Ok((_, _, found)) => found,
            Err(_) => false,
        };
        GameTranscript {
            builder,
            painter: self.painter.name(),
            target: self.target.name().to_string(),
            edges_used: self.moves.len(),
            result,
            status,
            checks: self.checks,
            moves: self.moves,
            graph: self.graph,
            coloring: self.coloring,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameTranscript {
    pub builder: String,
    pub painter: String,
    pub target: String,
    pub moves: Vec<Move>,
    pub graph: Graph,
    pub coloring: EdgeColoring,
    /// Whether the final state holds a rainbow target copy.
    pub result: bool,
    pub edges_used: usize,
    pub status: GameStatus,
    pub checks: Vec<Check>,
}

impl GameTranscript {
    pub fn failed_checks(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.ok)
    }

    pub fn summary(&self) -> serde_json::Value {
        json!({
            "builder": self.builder,
            "painter": self.painter,
            "target": self.target,
            "result": self.result,
            "edges_used": self.edges_used,
            "status": self.status,
            "checks": self.checks,
            "graph": crate::codec::to_value(&self.graph, Some(&self.coloring)),
        })
    }

    /// One JSON document per move, then `{"summary": ...}`.
    pub fn to_stream(&self) -> String {
        let mut out = String::new();
        for (i, m) in self.moves.iter().enumerate() {
            let line = json!({
                "move": i + 1,
                "edge": m.ends,
                "vertices": m.vertices,
                "color": m.color,
            });
            out.push_str(&line.to_string());
            out.push('\n');
        }
        out.push_str(&json!({ "summary": self.summary() }).to_string());
        out.push('\n');
        out
    }
}

/// Rebuilds the final state from recorded moves, checking properness after
/// every prefix, and reports whether the target is rainbow at the end.
pub fn replay(moves: &[Move], multigraph: bool, target: &Pattern) -> Result<(Graph, EdgeColoring, bool)> {
    let mut g = if multigraph { Graph::multigraph(0) } else { Graph::new(0) };
    let mut c = EdgeColoring::uncolored(0);
    for (i, m) in moves.iter().enumerate() {
        let mut ids = [0; 2];
        for (slot, (spec, &v)) in m.ends.iter().zip(&m.vertices).enumerate() {
            ids[slot] = match *spec {
                Spec::Fresh => {
                    let x = g.add_vertex();
                    if x != v {
                        return Err(Error::domain(format!("move {}: fresh vertex is {x}, recorded {v}", i + 1)));
                    }
                    x
                }
                Spec::Existing(x) => {
                    if x != v {
                        return Err(Error::domain(format!("move {}: endpoint mismatch", i + 1)));
                    }
                    x
                }
            };
        }
        let e = g.add_edge(ids[0], ids[1])?;
        c.push(Some(m.color));
        if let Some((a, b)) = c.properness_violation(&g) {
            return Err(Error::domain(format!(
                "move {}: edges {a} and {b} share an endpoint and color",
                i + 1
            )));
        }
        debug_assert_eq!(e, i);
    }
    let found = find_rainbow_embedding(&g, &c, target).is_some();
    Ok((g, c, found))
}

/// Plays `builder` against `painter` until a rainbow target, a cap, an
/// illegal action, or the end of the builder's plan.
pub fn run_game(builder: &mut dyn Builder, painter: &mut dyn Painter, h: &Pattern, caps: GameCaps) -> GameTranscript {
    let mut game = Game::new(h, caps, painter);
    let stop = builder.play(&mut game);
    game.finish(builder.name(), stop)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pat(g: Graph) -> Pattern {
        Pattern::new(g).unwrap()
    }

    #[test]
    fn cap_of_one_edge_exhausts() {
        let h = pat(Graph::matching(2));
        let mut b = GenericBuilder::new(&h).unwrap();
        let mut p = FirstFitPainter;
        let t = run_game(&mut b, &mut p, &h, GameCaps::simple(1));
        assert!(!t.result);
        assert_eq!(t.edges_used, 1);
        assert!(matches!(t.status, GameStatus::Exhausted { .. }));
    }

    #[test]
    fn illegal_moves_leave_state_alone() {
        let h = pat(Graph::path(2));
        let mut p = FirstFitPainter;
        let mut game = Game::new(&h, GameCaps::simple(10), &mut p);
        let first = game.present(Spec::Fresh, Spec::Fresh).unwrap();
        assert_eq!(first.color, 1);
        let dup = game.present(Spec::Existing(0), Spec::Existing(1));
        assert!(matches!(dup, Err(Stop::Illegal { offender: Offender::Builder, .. })));
        assert!(matches!(game.present(Spec::Existing(0), Spec::Existing(0)), Err(Stop::Illegal { .. })));
        assert!(matches!(game.present(Spec::Existing(7), Spec::Fresh), Err(Stop::Illegal { .. })));
        assert_eq!(game.graph().m(), 1);
        let second = game.present(Spec::Existing(1), Spec::Fresh).unwrap();
        assert_eq!(second.color, 2);
        assert!(game.won());
    }

    struct Stubborn;
    impl Painter for Stubborn {
        fn name(&self) -> String {
            "stubborn".into()
        }
        fn color(&mut self, _: &Graph, _: &EdgeColoring, _: EdgeId) -> Color {
            1
        }
    }

    #[test]
    fn improper_painter_is_the_offender() {
        let h = pat(Graph::path(2));
        let mut b = GenericBuilder::new(&h).unwrap();
        let t = run_game(&mut b, &mut Stubborn, &h, GameCaps::simple(10));
        assert!(matches!(
            t.status,
            GameStatus::Invalid {
                offender: Offender::Painter,
                ..
            }
        ));
        assert_eq!(t.edges_used, 1);
    }

    #[test]
    fn stream_has_one_line_per_move_and_a_summary() {
        let h = pat(Graph::path(3));
        let mut b = GenericBuilder::new(&h).unwrap();
        let t = run_game(&mut b, &mut FirstFitPainter, &h, GameCaps::simple(20));
        let stream = t.to_stream();
        let lines: Vec<&str> = stream.lines().collect();
        assert_eq!(lines.len(), t.edges_used + 1);
        let first: serde_json::Value = serde_json::from_str(lines[0]).unwrap();
        assert_eq!(first["move"], 1);
        assert_eq!(first["edge"], json!(["new", "new"]));
        assert!(lines.last().unwrap().starts_with("{\"summary\""));
        let (_, _, found) = replay(&t.moves, false, &h).unwrap();
        assert_eq!(found, t.result);
    }
}
