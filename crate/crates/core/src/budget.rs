//! Work caps for the exhaustive searches and a meter that enforces them.

use std::time::Duration;

#[cfg(not(target_arch = "wasm32"))]
use std::time::Instant;

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    /// Search-tree nodes per search call.
    pub max_nodes: u64,
    /// Wall-clock cap per search call. Ignored on wasm, which has no clock.
    pub time_limit: Option<Duration>,
    /// Palette cap for coloring searches; `None` means the host's edge count.
    pub max_colors: Option<usize>,
    /// Vertex cap for graph enumeration.
    pub max_vertices: usize,
    /// Edge cap for graph enumeration.
    pub max_edges: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_nodes: 50_000_000,
            time_limit: None,
            max_colors: None,
            max_vertices: 16,
            max_edges: 24,
        }
    }
}

impl SearchBudget {
    pub fn with_nodes(max_nodes: u64) -> Self {
        SearchBudget {
            max_nodes,
            ..Self::default()
        }
    }

    pub fn meter(&self) -> Meter {
        Meter::new(self.max_nodes, self.time_limit)
    }
}

/// Decided or not: the three-way answer of every capped search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Forces,
    Refuted,
    Exhausted,
}

/// An exact value, or the bracket left when a cap stopped the search.
/// `upper: None` means no upper bound was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Value {
    Exact { value: usize },
    Interval { lower: usize, upper: Option<usize> },
}

impl Value {
    pub fn exact(&self) -> Option<usize> {
        match *self {
            Value::Exact { value } => Some(value),
            Value::Interval { .. } => None,
        }
    }

    pub fn lower(&self) -> usize {
        match *self {
            Value::Exact { value } => value,
            Value::Interval { lower, .. } => lower,
        }
    }

    pub fn upper(&self) -> Option<usize> {
        match *self {
            Value::Exact { value } => Some(value),
            Value::Interval { upper, .. } => upper,
        }
    }

    /// Exact when the bracket is closed.
    pub fn from_bounds(lower: usize, upper: Option<usize>) -> Value {
        match upper {
            Some(u) if u == lower => Value::Exact { value: u },
            _ => Value::Interval { lower, upper },
        }
    }
}

impl std::fmt::Display for Value {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            Value::Exact { value } => write!(f, "{value}"),
            Value::Interval { lower, upper: Some(u) } => write!(f, "[{lower}, {u}]"),
            Value::Interval { lower, upper: None } => write!(f, "[{lower}, ?]"),
        }
    }
}

/// Counts nodes and checks the clock every 4096 ticks.
#[derive(Debug)]
pub struct Meter {
    pub nodes: u64,
    max_nodes: u64,
    #[cfg(not(target_arch = "wasm32"))]
    deadline: Option<Instant>,
    tripped: bool,
}

impl Meter {
    pub fn new(max_nodes: u64, time_limit: Option<Duration>) -> Self {
        #[cfg(target_arch = "wasm32")]
        let _ = time_limit;
        Meter {
            nodes: 0,
            max_nodes,
            #[cfg(not(target_arch = "wasm32"))]
            deadline: time_limit.map(|d| Instant::now() + d),
            tripped: false,
        }
    }

    pub fn unlimited() -> Self {
        Meter::new(u64::MAX, None)
    }

    /// Counts one node; false once a cap has tripped.
    pub fn tick(&mut self) -> bool {
        if self.tripped {
            return false;
        }
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            self.tripped = true;
        }
        #[cfg(not(target_arch = "wasm32"))]
        if self.nodes.is_multiple_of(4096) {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.tripped = true;
                }
            }
        }
        !self.tripped
    }

    pub fn tripped(&self) -> bool {
        self.tripped
    }

    /// Whether the wall-clock cap has passed, without counting a node.
    pub fn out_of_time(&self) -> bool {
        #[cfg(not(target_arch = "wasm32"))]
        if let Some(d) = self.deadline {
            return Instant::now() >= d;
        }
        false
    }
}
