//! Textual pattern names: `P4` (path, 4 edges), `C5` (cycle, 5 edges),
//! `M3` (matching, 3 edges), `K4` (complete, 4 vertices), `K1,3` (star) and
//! `g6:<code>`. Paths and cycles are indexed by edge count.

use std::fmt;
use std::str::FromStr;

use crate::codec;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::params::Pattern;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PatternSpec {
    Path(usize),
    Cycle(usize),
    Matching(usize),
    Complete(usize),
    Star(usize),
    Graph6(String),
}

impl PatternSpec {
    pub fn graph(&self) -> Result<Graph> {
        Ok(match self {
            PatternSpec::Path(k) => Graph::path(*k),
            PatternSpec::Cycle(k) => Graph::cycle(*k),
            PatternSpec::Matching(k) => Graph::matching(*k),
            PatternSpec::Complete(n) => Graph::complete(*n),
            PatternSpec::Star(x) => Graph::star(*x),
            PatternSpec::Graph6(code) => codec::from_graph6(code)?,
        })
    }

    pub fn pattern(&self) -> Result<Pattern> {
        Pattern::named(self.graph()?, self.to_string())
    }
}

impl fmt::Display for PatternSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternSpec::Path(k) => write!(f, "P{k}"),
            PatternSpec::Cycle(k) => write!(f, "C{k}"),
            PatternSpec::Matching(k) => write!(f, "M{k}"),
            PatternSpec::Complete(n) => write!(f, "K{n}"),
            PatternSpec::Star(x) => write!(f, "K1,{x}"),
            PatternSpec::Graph6(code) => write!(f, "g6:{code}"),
        }
    }
}

impl FromStr for PatternSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |why: &str| Error::Usage(format!("pattern '{s}': {why}"));
        if let Some(code) = s.strip_prefix("g6:") {
            codec::from_graph6(code).map_err(|e| bad(&e.to_string()))?;
            return Ok(PatternSpec::Graph6(code.to_string()));
        }
        let mut chars = s.chars();
        let head = chars.next().ok_or_else(|| bad("empty"))?;
        let rest = chars.as_str();
        let number = |t: &str| -> Result<usize> {
            if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) || (t.len() > 1 && t.starts_with('0')) {
                return Err(bad("expected a decimal size"));
            }
            t.parse().map_err(|_| bad("size out of range"))
        };
        let spec = match head {
            'P' => PatternSpec::Path(number(rest)?),
            'C' => PatternSpec::Cycle(number(rest)?),
            'M' => PatternSpec::Matching(number(rest)?),
            'K' => match rest.strip_prefix("1,") {
                Some(x) => PatternSpec::Star(number(x)?),
                None => PatternSpec::Complete(number(rest)?),
            },
            _ => return Err(bad("expected P, C, M, K or g6:")),
        };
        let ok = match spec {
            PatternSpec::Path(k) | PatternSpec::Matching(k) | PatternSpec::Star(k) => (1..=64).contains(&k),
            PatternSpec::Cycle(k) => (3..=64).contains(&k),
            PatternSpec::Complete(n) => (2..=16).contains(&n),
            PatternSpec::Graph6(_) => true,
        };
        if !ok {
            return Err(bad("size outside the supported range"));
        }
        Ok(spec)
    }
}

/// Parses a pattern name and computes its parameters.
pub fn parse_pattern(s: &str) -> Result<Pattern> {
    s.parse::<PatternSpec>()?.pattern()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_families() {
        let p = parse_pattern("P4").unwrap();
        assert_eq!((p.k(), p.n()), (4, 5));
        let k = parse_pattern("K4").unwrap();
        assert_eq!(k.k(), 6);
        let s = parse_pattern("K1,3").unwrap();
        assert_eq!((s.k(), s.max_degree()), (3, 3));
        let g = parse_pattern("g6:Bg").unwrap();
        assert_eq!(g.k(), 2);
        assert_eq!(parse_pattern("C5").unwrap().chromatic_index(), 3);
    }

    #[test]
    fn rejects_unknown_forms() {
        for s in ["Q3", "", "P", "P-1", "C2", "K1,", "P04", "g6:C~~", "K1,x"] {
            assert!(matches!(s.parse::<PatternSpec>(), Err(Error::Usage(_))), "{s}");
        }
    }

    #[test]
    fn print_parse_idempotent() {
        for s in ["P4", "C3", "M2", "K5", "K1,4", "g6:C~"] {
            let spec: PatternSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
            assert_eq!(spec.to_string().parse::<PatternSpec>().unwrap(), spec);
        }
    }
}
