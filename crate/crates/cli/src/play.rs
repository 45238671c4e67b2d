//! Engine games and the text REPL for a human Builder or Painter.

use std::io::{BufRead, Write};

use arlab_core::canon::canonical_form;
use arlab_core::game::*;
use arlab_core::notation::parse_pattern;
use arlab_core::{Color, EdgeColoring, EdgeId, Error, Graph, Pattern};
use clap::{Args, ValueEnum};

use crate::{Report, EXIT_BUDGET, EXIT_OK, EXIT_VIOLATED};

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum BuilderKind {
    Generic,
    CycleFf,
    MatchingMulti,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum PainterKind {
    FirstFit,
    Random,
    Minimax,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Role {
    Painter,
    Builder,
}

#[derive(Args, Debug)]
pub struct PlayArgs {
    #[arg(long)]
    pattern: String,
    #[arg(long, value_enum, default_value_t = BuilderKind::Generic)]
    builder: BuilderKind,
    #[arg(long, value_enum, default_value_t = PainterKind::FirstFit)]
    painter: PainterKind,
    /// Seed of the random painter.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Look-ahead of the minimax painter in edges; defaults to k^2.
    #[arg(long)]
    depth: Option<usize>,
    /// Edge cap; defaults to the builder's guarantee (k^2 for a human builder).
    #[arg(long)]
    max_edges: Option<usize>,
    /// Allow parallel edges (always on for matching-multi).
    #[arg(long)]
    multigraph: bool,
    /// Play one side yourself at the prompt; the engine plays the other.
    #[arg(long, value_enum)]
    role: Option<Role>,
}

fn same_shape(h: &Pattern, g: &Graph) -> Result<bool, Error> {
    Ok(canonical_form(h.graph())? == canonical_form(g)?)
}

fn engine_builder(a: &PlayArgs, h: &Pattern) -> Result<(Box<dyn Builder>, usize), Error> {
    let k = h.k();
    Ok(match a.builder {
        BuilderKind::Generic => (Box::new(GenericBuilder::new(h)?), k * k),
        BuilderKind::CycleFf => {
            if !(k >= 3 && same_shape(h, &Graph::cycle(k))?) {
                return Err(Error::Usage("cycle-ff plays for cycle patterns only".into()));
            }
            let b = CycleFfBuilder::new(k)?;
            let bound = b.edge_bound()?;
            (Box::new(b), bound)
        }
        BuilderKind::MatchingMulti => {
            if !same_shape(h, &Graph::matching(k))? {
                return Err(Error::Usage("matching-multi plays for matching patterns only".into()));
            }
            let b = MatchingMultiBuilder::new(k)?;
            let bound = b.edge_bound();
            (Box::new(b), bound)
        }
    })
}

fn engine_painter(a: &PlayArgs, h: &Pattern, multigraph: bool) -> Box<dyn Painter> {
    match a.painter {
        PainterKind::FirstFit => Box::new(FirstFitPainter),
        PainterKind::Random => Box::new(RandomPainter::new(a.seed)),
        PainterKind::Minimax => match a.depth {
            Some(d) => Box::new(MinimaxPainter::new(h, d, multigraph)),
            None => Box::new(MinimaxPainter::full(h, multigraph)),
        },
    }
}

fn spec_text(s: Spec) -> String {
    match s {
        Spec::Existing(v) => v.to_string(),
        Spec::Fresh => "new".into(),
    }
}

fn move_lines(t: &GameTranscript) -> String {
    let mut out = String::new();
    for (i, m) in t.moves.iter().enumerate() {
        out.push_str(&format!(
            "move {}: {} {} -> edge {}-{} color {}\n",
            i + 1,
            spec_text(m.ends[0]),
            spec_text(m.ends[1]),
            m.vertices[0],
            m.vertices[1],
            m.color
        ));
    }
    out
}

fn verdict(t: &GameTranscript) -> (String, u8) {
    let failed: Vec<String> = t.failed_checks().map(|c| format!("{}: {}", c.label, c.detail)).collect();
    let (mut line, code) = match &t.status {
        GameStatus::Won if failed.is_empty() => (format!("WON {} in {} edges", t.target, t.edges_used), EXIT_OK),
        GameStatus::Won => (format!("WON {} in {} edges, but checks failed", t.target, t.edges_used), EXIT_VIOLATED),
        GameStatus::Exhausted { reason } if reason.starts_with("caps") => {
            (format!("NOT WON after {} edges: {reason}", t.edges_used), EXIT_BUDGET)
        }
        GameStatus::Exhausted { reason } => (format!("NOT WON after {} edges: {reason}", t.edges_used), EXIT_VIOLATED),
        GameStatus::Invalid { offender, reason } => (format!("INVALID ({offender:?}): {reason}"), EXIT_VIOLATED),
    };
    line.push_str(&format!(" ({} vs {})", t.builder, t.painter));
    for f in failed {
        line.push_str(&format!("\nfailed check {f}"));
    }
    (line, code)
}

pub fn play(a: &PlayArgs, json: bool) -> Result<Report, Error> {
    let h = parse_pattern(&a.pattern)?;
    let multigraph = a.multigraph || a.builder == BuilderKind::MatchingMulti;
    let stdin = std::io::stdin();
    let mut input = stdin.lock();
    // Prompts stay off stdout when stdout carries JSON.
    let mut prompt: Box<dyn Write> = if json { Box::new(std::io::stderr()) } else { Box::new(std::io::stdout()) };
    let mut stopped = false;
    let t = match a.role {
        None => {
            let (mut b, bound) = engine_builder(a, &h)?;
            let mut p = engine_painter(a, &h, multigraph);
            let caps = caps(a.max_edges.unwrap_or(bound), multigraph);
            run_game(b.as_mut(), p.as_mut(), &h, caps)
        }
        Some(Role::Painter) => {
            let (mut b, bound) = engine_builder(a, &h)?;
            let mut p = HumanPainter {
                input: &mut input,
                out: &mut prompt,
                quit: false,
            };
            let caps = caps(a.max_edges.unwrap_or(bound), multigraph);
            let t = run_game(b.as_mut(), &mut p, &h, caps);
            stopped = p.quit;
            t
        }
        Some(Role::Builder) => {
            let mut p = engine_painter(a, &h, multigraph);
            let mut b = HumanBuilder {
                input: &mut input,
                out: &mut prompt,
                quit: false,
            };
            let caps = caps(a.max_edges.unwrap_or(h.k() * h.k()), multigraph);
            let t = run_game(&mut b, p.as_mut(), &h, caps);
            stopped = b.quit;
            t
        }
    };
    if a.role.is_some() {
        let _ = writeln!(prompt, "{}", render_state(&t.graph, &t.coloring));
    }
    let (mut line, mut code) = verdict(&t);
    if stopped {
        line = format!("STOPPED at the prompt after {} edges", t.edges_used);
        code = EXIT_OK;
    }
    let text = if a.role.is_some() { line } else { format!("{}{line}", move_lines(&t)) };
    Ok(Report {
        text,
        json: t.to_stream(),
        code,
    })
}

fn caps(max_edges: usize, multigraph: bool) -> GameCaps {
    if multigraph {
        GameCaps::multigraph(max_edges)
    } else {
        GameCaps::simple(max_edges)
    }
}

/// The live colored graph, one edge per line.
pub fn render_state(g: &Graph, c: &EdgeColoring) -> String {
    let mut out = format!("graph: {} vertices, {} edges", g.n(), g.m());
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let col = c.get(e).map_or("-".to_string(), |x| x.to_string());
        out.push_str(&format!("\n  {u}-{v}  color {col}"));
    }
    out
}

fn read_line(input: &mut dyn BufRead) -> Option<String> {
    let mut line = String::new();
    match input.read_line(&mut line) {
        Ok(0) | Err(_) => None,
        Ok(_) => Some(line.trim().to_string()),
    }
}

struct HumanPainter<'a> {
    input: &'a mut dyn BufRead,
    out: &'a mut dyn Write,
    quit: bool,
}

impl HumanPainter<'_> {
    fn check(g: &Graph, c: &EdgeColoring, e: EdgeId, text: &str) -> Result<Color, String> {
        let col: Color = text.parse().map_err(|_| format!("{text:?} is not a color"))?;
        if col == 0 {
            return Err("colors start at 1".into());
        }
        let (u, v) = g.edge(e);
        for w in [u, v] {
            if c.colors_at(g, w).contains(&col) {
                return Err(format!("color {col} is already used at vertex {w}"));
            }
        }
        Ok(col)
    }
}

impl Painter for HumanPainter<'_> {
    fn name(&self) -> String {
        "human".into()
    }

    fn color(&mut self, g: &Graph, c: &EdgeColoring, e: EdgeId) -> Color {
        if self.quit {
            return 0;
        }
        let (u, v) = g.edge(e);
        let _ = writeln!(self.out, "{}", render_state(g, c));
        let options: Vec<String> = painter_options(g, c, e).iter().map(|x| x.to_string()).collect();
        loop {
            let _ = write!(self.out, "color for edge {u}-{v} (feasible: {}, or any unused)> ", options.join(" "));
            let _ = self.out.flush();
            let Some(line) = read_line(self.input) else {
                self.quit = true;
                return 0;
            };
            if line == "quit" {
                self.quit = true;
                return 0;
            }
            match Self::check(g, c, e, &line) {
                Ok(col) => return col,
                Err(why) => {
                    let _ = writeln!(self.out, "rejected: {why}");
                }
            }
        }
    }
}

struct HumanBuilder<'a> {
    input: &'a mut dyn BufRead,
    out: &'a mut dyn Write,
    quit: bool,
}

fn parse_end(t: &str) -> Result<Spec, String> {
    if t == "new" || t == "n" {
        return Ok(Spec::Fresh);
    }
    t.parse().map(Spec::Existing).map_err(|_| format!("{t:?} is neither a vertex number nor 'new'"))
}

impl Builder for HumanBuilder<'_> {
    fn name(&self) -> String {
        "human".into()
    }

    fn play(&mut self, game: &mut Game<'_>) -> Result<(), Stop> {
        loop {
            let _ = writeln!(self.out, "{}", render_state(game.graph(), game.coloring()));
            let _ = write!(self.out, "edge (two of: vertex number, 'new'; 'quit' ends)> ");
            let _ = self.out.flush();
            let line = read_line(self.input);
            let Some(line) = line.filter(|l| l != "quit") else {
                self.quit = true;
                return Ok(());
            };
            let parts: Vec<&str> = line.split_whitespace().collect();
            let ends = match parts.as_slice() {
                [a, b] => parse_end(a).and_then(|a| Ok((a, parse_end(b)?))),
                _ => Err("enter exactly two endpoints".to_string()),
            };
            let (a, b) = match ends {
                Ok(x) => x,
                Err(why) => {
                    let _ = writeln!(self.out, "rejected: {why}");
                    continue;
                }
            };
            match game.check_move(a, b) {
                Err(Stop::Illegal { reason, .. }) => {
                    let _ = writeln!(self.out, "rejected: {reason}");
                    continue;
                }
                Err(stop) => return Err(stop),
                Ok(()) => {}
            }
            let p = game.present(a, b)?;
            let _ = writeln!(self.out, "painter colors {}-{} with {}", p.u, p.v, p.color);
            if game.won() {
                return Ok(());
            }
        }
    }
}
