//! Browser entry points. Each returns one JSON document as a string; the
//! page in `www/` draws it.
//!
//! The searches run on the page's thread, so every call carries a node cap.

use arlab_core::bounds::{bounds_table, render_text};
use arlab_core::budget::SearchBudget;
use arlab_core::codec::to_value;
use arlab_core::constructions;
use arlab_core::forcing::forces;
use arlab_core::game::{run_game, Builder, CycleFfBuilder, FirstFitPainter, GameCaps, GenericBuilder, Painter, RandomPainter};
use arlab_core::notation::parse_pattern;
use arlab_core::{Error, Result};
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Forcing checks give up past this many search nodes.
pub const NODE_CAP: u64 = 2_000_000;

/// Builds a named construction and checks that it forces its target.
pub fn construction_json(name: &str, k: usize) -> Result<String> {
    let (p, target) = match name {
        "stars-union" => (constructions::stars_union(k)?, format!("M{k}")),
        "cycle-chain" => (constructions::cycle_chain(k)?, format!("C{k}")),
        "multi-path" => (constructions::multi_path(k)?, format!("P{k}")),
        "multi-cycle" => (constructions::multi_cycle(k)?, format!("C{k}")),
        _ => return Err(Error::Usage(format!("unknown construction {name:?}"))),
    };
    let h = parse_pattern(&target)?;
    let v = forces(&p.graph, &h, &SearchBudget::with_nodes(NODE_CAP))?;
    Ok(json!({
        "construction": p.name,
        "target": target,
        "basis": p.basis,
        "edges": p.graph.m(),
        "predicted_edges": p.predicted_edges,
        "status": v.status,
        "nodes": v.nodes,
        "graph": to_value(&p.graph, None),
        "witness": v.witness.as_ref().map(|c| to_value(&p.graph, Some(c))),
    })
    .to_string())
}

/// Plays one engine game; `moves` lists every presented edge and its color.
pub fn game_json(pattern: &str, builder: &str, painter: &str, seed: u64) -> Result<String> {
    let h = parse_pattern(pattern)?;
    let k = h.k();
    let (mut b, bound): (Box<dyn Builder>, usize) = match builder {
        "generic" => (Box::new(GenericBuilder::new(&h)?), k * k),
        "cycle-ff" => {
            let b = CycleFfBuilder::new(k)?;
            let bound = b.edge_bound()?;
            (Box::new(b), bound)
        }
        _ => return Err(Error::Usage(format!("unknown builder {builder:?}"))),
    };
    let mut p: Box<dyn Painter> = match painter {
        "first-fit" => Box::new(FirstFitPainter),
        "random" => Box::new(RandomPainter::new(seed)),
        _ => return Err(Error::Usage(format!("unknown painter {painter:?}"))),
    };
    let t = run_game(b.as_mut(), p.as_mut(), &h, GameCaps::simple(bound));
    let moves: Vec<_> = t
        .moves
        .iter()
        .map(|m| json!({ "vertices": m.vertices, "color": m.color }))
        .collect();
    Ok(json!({ "bound": bound, "moves": moves, "summary": t.summary() }).to_string())
}

/// Every catalogued bound for a pattern, as text and as records.
pub fn bounds_json(pattern: &str) -> Result<String> {
    let h = parse_pattern(pattern)?;
    let reports = bounds_table(&h);
    Ok(json!({
        "pattern": h.name(),
        "text": render_text(&h, &reports),
        "reports": reports,
    })
    .to_string())
}

fn js(r: Result<String>) -> std::result::Result<String, JsError> {
    r.map_err(|e| JsError::new(&e.to_string()))
}

#[wasm_bindgen]
pub fn construction(name: &str, k: usize) -> std::result::Result<String, JsError> {
    js(construction_json(name, k))
}

#[wasm_bindgen]
pub fn play(pattern: &str, builder: &str, painter: &str, seed: u32) -> std::result::Result<String, JsError> {
    js(game_json(pattern, builder, painter, seed.into()))
}

#[wasm_bindgen]
pub fn bounds(pattern: &str) -> std::result::Result<String, JsError> {
    js(bounds_json(pattern))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    fn parse(s: String) -> Value {
        serde_json::from_str(&s).unwrap()
    }

    #[test]
    fn stars_union_forces() {
        let v = parse(construction_json("stars-union", 3).unwrap());
        assert_eq!(v["status"], "FORCES");
        assert_eq!(v["edges"], 6);
        assert!(v["witness"].is_null());
    }

    #[test]
    fn unknown_names_are_errors() {
        assert!(construction_json("petersen", 3).is_err());
        assert!(game_json("M2", "greedy", "first-fit", 1).is_err());
        assert!(bounds_json("Q3").is_err());
    }

    #[test]
    fn games_are_won_within_the_bound() {
        for (h, b) in [("M3", "generic"), ("C4", "cycle-ff"), ("P3", "generic")] {
            let v = parse(game_json(h, b, "random", 5).unwrap());
            assert_eq!(v["summary"]["result"], true, "{h} {b}");
            let moves = v["moves"].as_array().unwrap().len();
            assert!(moves as u64 <= v["bound"].as_u64().unwrap());
        }
    }

    #[test]
    fn bounds_list_every_function() {
        let v = parse(bounds_json("K4").unwrap());
        assert!(v["text"].as_str().unwrap().contains("AR_FF"));
        assert!(v["reports"].as_array().unwrap().len() >= 5);
    }
}
