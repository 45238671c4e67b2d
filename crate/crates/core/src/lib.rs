//! Exact search engines for anti-Ramsey numbers under proper edge colorings.
//!
//! The crate decides rainbow forcing (`G -> H`), replays the explicit forcing
//! graphs, First-Fit constructions and Builder strategies, computes exact
//! size, online, First-Fit and local anti-Ramsey values on small instances,
//! and checks them against a catalogue of closed-form bounds.

pub mod error;
pub mod graph;
pub mod canon;
pub mod params;
pub mod embed;
pub mod codec;
pub mod notation;
pub mod budget;
pub mod enumerate;
pub mod forcing;
pub mod constructions;
pub mod firstfit;
pub mod game;
pub mod bounds;

pub use error::{Error, Result};
pub use graph::{Color, EdgeColoring, EdgeId, Embedding, Graph, Vertex};
pub use params::Pattern;
