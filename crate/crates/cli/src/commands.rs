use std::io::Read;

use arlab_core::bounds::{bounds_table, check_chain, overview, render_overview, render_text, Computed, Function};
use arlab_core::budget::{SearchBudget, Status, Value};
use arlab_core::canon::canonical_form;
use arlab_core::codec::{from_graph6, from_json, to_graph6, to_json, to_value};
use arlab_core::constructions::{self, ProvenancedGraph};
use arlab_core::firstfit::{ar_ff_exact, ff_replay, is_h_good, kn_ff_coloring, matching_good, path_good, weights, GoodColoredGraph};
use arlab_core::forcing::{ar_local, ar_size_exact, ar_size_multi_exact, forces};
use arlab_core::game::{ar_online_exact, GameCaps};
use arlab_core::notation::parse_pattern;
use arlab_core::params::matching_number;
use arlab_core::{Error, Graph, Pattern};
use clap::{Args, ValueEnum};
use serde_json::json;

use crate::{BudgetArgs, Format, Report, EXIT_BUDGET, EXIT_OK, EXIT_VIOLATED};

type Result<T> = std::result::Result<T, Error>;

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quantity {
    /// Least edges of a simple graph forcing a rainbow copy.
    ArS,
    /// Same over multigraphs.
    ArSMulti,
    /// Online game value.
    ArO,
    /// Online game value with parallel edges.
    ArOMulti,
    /// Online game value against First-Fit.
    ArFf,
    /// Least n with K_n forcing a rainbow copy.
    ArLoc,
    /// Whether a given host forces a rainbow copy.
    Forces,
    /// Structural parameters and matching weights.
    Params,
}

#[derive(Args, Debug)]
pub struct ComputeArgs {
    quantity: Quantity,
    /// Pattern: Pk, Ck, Mk, Kn, K1,x or g6:<code>.
    #[arg(long)]
    pattern: String,
    /// Host graph for `forces`: a pattern name, g6:<code> or a JSON document.
    #[arg(long)]
    host: Option<String>,
    /// Largest complete graph tried by `ar-loc`.
    #[arg(long, default_value_t = 10)]
    n_cap: usize,
    /// Parallel-edge cap for `ar-s-multi`; defaults to the pattern's edge count.
    #[arg(long)]
    mult_cap: Option<usize>,
    /// Edge cap of the game for `ar-o`; defaults to k^2.
    #[arg(long)]
    game_edges: Option<usize>,
    #[command(flatten)]
    budget: BudgetArgs,
}

fn value_report(h: &Pattern, what: &str, value: Value, extra: serde_json::Value) -> Report {
    let code = if value.exact().is_some() { EXIT_OK } else { EXIT_BUDGET };
    let text = match value {
        Value::Exact { value } => value.to_string(),
        v => format!("{v} (undecided within budget)"),
    };
    Report::new(
        text,
        json!({ "pattern": h.name(), "quantity": what, "value": value, "details": extra }),
        code,
    )
}

/// A pattern name, a graph6 code, or a JSON graph document.
fn parse_graph(s: &str) -> Result<Graph> {
    let t = s.trim();
    if t.starts_with('{') {
        return Ok(from_json(t)?.0);
    }
    match parse_pattern(t) {
        Ok(p) => Ok(p.graph().clone()),
        Err(_) => from_graph6(t).map_err(|e| Error::Usage(format!("cannot read graph {t:?}: {e}"))),
    }
}

pub fn compute(a: &ComputeArgs) -> Result<Report> {
    let h = parse_pattern(&a.pattern)?;
    let b = a.budget.budget()?;
    let k = h.k();
    Ok(match a.quantity {
        Quantity::ArS => {
            let r = ar_size_exact(&h, &b)?;
            let witness = r.witness.as_ref().and_then(|g| to_graph6(g).ok());
            value_report(&h, "AR_s", r.value, json!({ "witness_g6": witness, "graphs_checked": r.graphs_checked }))
        }
        Quantity::ArSMulti => {
            let r = ar_size_multi_exact(&h, a.mult_cap.unwrap_or(k), &b)?;
            let witness = r.witness.as_ref().map(|g| to_value(g, None));
            value_report(&h, "AR_s*", r.value, json!({ "witness": witness, "graphs_checked": r.graphs_checked }))
        }
        Quantity::ArO | Quantity::ArOMulti => {
            let edges = a.game_edges.unwrap_or(k * k);
            let multi = a.quantity == Quantity::ArOMulti;
            let caps = if multi { GameCaps::multigraph(edges) } else { GameCaps::simple(edges) };
            let r = ar_online_exact(&h, caps, &b)?;
            let name = if multi { "AR_o*" } else { "AR_o" };
            value_report(&h, name, r.value, json!({ "nodes": r.nodes, "positions": r.positions }))
        }
        Quantity::ArFf => {
            let r = ar_ff_exact(&h, &b)?;
            let witness = r.witness.as_ref().map(GoodColoredGraph::to_json);
            value_report(&h, "AR_FF", r.value, json!({ "witness": witness, "graphs_checked": r.graphs_checked }))
        }
        Quantity::ArLoc => {
            let r = ar_local(&h, a.n_cap, &b)?;
            value_report(&h, "AR_loc", r.value, json!({ "steps": r.steps }))
        }
        Quantity::Forces => {
            let host = a
                .host
                .as_deref()
                .ok_or_else(|| Error::Usage("forces needs --host".into()))?;
            let g = parse_graph(host)?;
            let v = forces(&g, &h, &b)?;
            let code = if v.status == Status::Exhausted { EXIT_BUDGET } else { EXIT_OK };
            let status = serde_json::to_value(v.status).unwrap();
            let text = format!("{} {}, host with {} edges", status.as_str().unwrap_or("?"), h.name(), g.m());
            let witness = v.witness.as_ref().map(|c| to_value(&g, Some(c)));
            Report::new(
                text,
                json!({ "pattern": h.name(), "status": v.status, "nodes": v.nodes, "witness": witness }),
                code,
            )
        }
        Quantity::Params => params(&h, &b)?,
    })
}

fn params(h: &Pattern, b: &SearchBudget) -> Result<Report> {
    let g = h.graph();
    let mut doc = json!({
        "pattern": h.name(),
        "k": h.k(),
        "n": h.n(),
        "max_degree": h.max_degree(),
        "min_degree": h.min_degree(),
        "chromatic_index": h.chromatic_index(),
        "cover_number": h.cover_number(),
        "matching_number": matching_number(g),
    });
    let mut text = format!(
        "{}: k = {}, n = {}, max degree {}, min degree {}, chromatic index {}, cover number {}, matching number {}",
        h.name(),
        h.k(),
        h.n(),
        h.max_degree(),
        h.min_degree(),
        h.chromatic_index(),
        h.cover_number(),
        matching_number(g)
    );
    if h.k() <= arlab_core::firstfit::MAX_WEIGHT_EDGES {
        let w = weights(g, &mut b.meter())?;
        doc["w_max"] = json!(w.w_max);
        doc["w_greedy"] = json!(w.w_greedy);
        text.push_str(&format!(", w_max {}, w_greedy {}", w.w_max, w.w_greedy));
    }
    Ok(Report::new(text, doc, EXIT_OK))
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Construction {
    StarsUnion,
    CycleChain,
    MultiPath,
    MultiCycle,
    MultiReplace,
    K4Witness,
    PathGood,
    MatchingGood,
    KnFf,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    construction: Construction,
    /// Size parameter (edges of the target).
    #[arg(long)]
    k: Option<usize>,
    /// Vertex count for `kn-ff`.
    #[arg(long)]
    n: Option<usize>,
    /// Pattern for `multi-replace`.
    #[arg(long)]
    pattern: Option<String>,
    #[command(flatten)]
    budget: BudgetArgs,
}

pub fn verify(a: &VerifyArgs) -> Result<Report> {
    let need_k = || a.k.ok_or_else(|| Error::Usage("this construction needs --k".into()));
    let b = a.budget.budget()?;
    let (p, target) = match a.construction {
        Construction::StarsUnion => (constructions::stars_union(need_k()?)?, format!("M{}", need_k()?)),
        Construction::CycleChain => (constructions::cycle_chain(need_k()?)?, format!("C{}", need_k()?)),
        Construction::MultiPath => (constructions::multi_path(need_k()?)?, format!("P{}", need_k()?)),
        Construction::MultiCycle => (constructions::multi_cycle(need_k()?)?, format!("C{}", need_k()?)),
        Construction::MultiReplace => {
            let spec = a
                .pattern
                .as_deref()
                .ok_or_else(|| Error::Usage("multi-replace needs --pattern".into()))?;
            let h = parse_pattern(spec)?;
            (constructions::multi_replace(h.graph())?, h.name().to_string())
        }
        Construction::K4Witness => (constructions::k4_witness(), "K4".to_string()),
        Construction::PathGood => return verify_good(path_good(need_k()?)?, &format!("P{}", need_k()?), false),
        Construction::MatchingGood => {
            return verify_good(matching_good(need_k()?)?, &format!("M{}", need_k()?), true)
        }
        Construction::KnFf => return verify_kn(a.n.ok_or_else(|| Error::Usage("kn-ff needs --n".into()))?),
    };
    verify_forcing(&p, &target, &b)
}

fn verify_forcing(p: &ProvenancedGraph, target: &str, b: &SearchBudget) -> Result<Report> {
    let h = parse_pattern(target)?;
    let v = forces(&p.graph, &h, b)?;
    let edges_ok = p.graph.m() == p.predicted_edges;
    let code = match v.status {
        Status::Forces if edges_ok => EXIT_OK,
        Status::Exhausted => EXIT_BUDGET,
        _ => EXIT_VIOLATED,
    };
    let word = match v.status {
        Status::Forces => "FORCES",
        Status::Refuted => "REFUTED",
        Status::Exhausted => "EXHAUSTED",
    };
    let mut text = format!("{word} {target}, {} edges", p.graph.m());
    if !edges_ok {
        text.push_str(&format!(" (closed form says {})", p.predicted_edges));
    }
    let witness = v.witness.as_ref().map(|c| to_value(&p.graph, Some(c)));
    Ok(Report::new(
        text,
        json!({
            "construction": p.name,
            "target": target,
            "status": v.status,
            "edges": p.graph.m(),
            "predicted_edges": p.predicted_edges,
            "basis": p.basis,
            "nodes": v.nodes,
            "witness": witness,
            "graph": to_value(&p.graph, None),
        }),
        code,
    ))
}

fn verify_good(g: GoodColoredGraph, target: &str, matching: bool) -> Result<Report> {
    let h = parse_pattern(target)?;
    let k = h.k();
    let good = is_h_good(&g.graph, &g.coloring, &h)?;
    let fixed = ff_replay(&g.graph, &g.coloring)? == g.coloring;
    let m = g.graph.m();
    let (size_ok, size_rule) = if matching {
        (m == k * k / 4 + k && g.graph.is_bipartite(), format!("bipartite with floor(k^2/4)+k = {}", k * k / 4 + k))
    } else {
        (8 * m <= k * k + 24 * k, format!("at most k^2/8+3k = {:.1}", (k * k) as f64 / 8.0 + 3.0 * k as f64))
    };
    let ok = good.is_good() && fixed && size_ok;
    let text = format!(
        "{} {target}, {m} edges; good: {}; First-Fit replay fixed point: {fixed}; size {size_rule}: {size_ok}",
        if ok { "GOOD" } else { "VIOLATED" },
        good.is_good()
    );
    Ok(Report::new(
        text,
        json!({
            "target": target,
            "edges": m,
            "good": good,
            "replay_fixed_point": fixed,
            "size_ok": size_ok,
            "graph": g.to_json(),
        }),
        if ok { EXIT_OK } else { EXIT_VIOLATED },
    ))
}

fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Checks the two structural rules of the clique coloring and the weight
/// claim `2 w <= n^3/6`.
fn verify_kn(n: usize) -> Result<Report> {
    let r = kn_ff_coloring(n)?;
    let kn = Graph::complete(n);
    let color = |u: usize, v: usize| r.coloring[kn.edges_between(u, v).next().expect("complete graph")] as usize;
    let mut structure = Vec::new();
    for i in 1..=n / 2 {
        let top = binom2(2 * i);
        let mut seen: Vec<usize> = Vec::new();
        for u in 0..2 * i {
            for v in u + 1..2 * i {
                seen.push(color(u, v));
            }
        }
        seen.sort_unstable();
        if color(2 * i - 2, 2 * i - 1) != top || seen != (1..=top).collect::<Vec<_>>() {
            structure.push(i);
        }
    }
    let w = r.greedy.weight;
    let weight_ok = 6 * 2 * w <= n * n * n;
    let ok = structure.is_empty() && weight_ok;
    let text = format!(
        "{} K{n}: structure {}; 2 w_greedy = {} vs n^3/6 = {:.2}",
        if ok { "VERIFIED" } else { "VIOLATED" },
        if structure.is_empty() { "ok".to_string() } else { format!("broken at pairs {structure:?}") },
        2 * w,
        (n * n * n) as f64 / 6.0
    );
    Ok(Report::new(
        text,
        json!({
            "n": n,
            "coloring": r.coloring,
            "greedy_weight": w,
            "structure_ok": structure.is_empty(),
            "weight_bound_ok": weight_ok,
        }),
        if ok { EXIT_OK } else { EXIT_VIOLATED },
    ))
}

#[derive(Args, Debug)]
pub struct BoundsArgs {
    #[arg(long)]
    pattern: String,
    /// Computed value to check against the chain, e.g. `AR_FF=3` or
    /// `AR_s=10..15` (`10..` leaves the top open). Repeatable.
    #[arg(long = "value")]
    values: Vec<String>,
}

fn parse_value(s: &str) -> Result<(Function, Value)> {
    let bad = || Error::Usage(format!("expected FUNCTION=VALUE or FUNCTION=LOW..HIGH, got {s:?}"));
    let (f, v) = s.split_once('=').ok_or_else(bad)?;
    let f: Function = f.trim().parse()?;
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    let value = match v.split_once("..") {
        Some((lo, hi)) if hi.trim().is_empty() => Value::from_bounds(num(lo)?, None),
        Some((lo, hi)) => Value::from_bounds(num(lo)?, Some(num(hi)?)),
        None => Value::Exact { value: num(v)? },
    };
    Ok((f, value))
}

pub fn bounds(a: &BoundsArgs) -> Result<Report> {
    let h = parse_pattern(&a.pattern)?;
    let reports = bounds_table(&h);
    let mut text = render_text(&h, &reports);
    let mut doc = json!({ "pattern": h.name(), "reports": reports });
    let mut code = EXIT_OK;
    if !a.values.is_empty() {
        let computed: Computed = a.values.iter().map(|s| parse_value(s)).collect::<Result<_>>()?;
        let chain = check_chain(&h, &computed);
        if chain.violations.is_empty() {
            text.push_str("chain: no violations\n");
        }
        for f in &chain.violations {
            text.push_str(&format!("violation: {} ({})\n", f.anchor, f.detail));
        }
        for f in &chain.claimed_inconsistent {
            text.push_str(&format!("claimed/inconsistent: {} ({})\n", f.anchor, f.detail));
        }
        if !chain.is_clean() {
            code = EXIT_VIOLATED;
        }
        doc["chain"] = json!(chain);
    }
    Ok(Report::new(text, doc, code))
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[arg(long, default_value_t = 1)]
    k_min: usize,
    #[arg(long, default_value_t = 8)]
    k_max: usize,
    /// Largest clique order; cliques start at 3.
    #[arg(long, default_value_t = 8)]
    n_max: usize,
}

pub fn table(a: &TableArgs) -> Result<Report> {
    if a.k_min == 0 || a.k_min > a.k_max {
        return Err(Error::Usage("need 1 <= --k-min <= --k-max".into()));
    }
    let rows = overview(a.k_min..=a.k_max, 3..=a.n_max)?;
    Ok(Report::new(render_overview(&rows), json!(rows), EXIT_OK))
}

#[derive(Args, Debug)]
pub struct ConvertArgs {
    /// Pattern name, graph6 code or JSON document; `-` reads standard input.
    input: String,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    to: Format,
}

pub fn convert(a: &ConvertArgs) -> Result<Report> {
    let raw = if a.input == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Usage(format!("reading standard input: {e}")))?;
        s
    } else {
        a.input.clone()
    };
    let t = raw.trim();
    let (g, c) = if t.starts_with('{') { from_json(t)? } else { (parse_graph(t)?, None) };
    let out = match a.to {
        Format::G6 => to_graph6(&g)?,
        Format::Json => to_json(&g, c.as_ref()),
        Format::Key => canonical_form(&g)?,
    };
    Ok(Report::new(out.clone(), json!({ "output": out }), EXIT_OK))
}
