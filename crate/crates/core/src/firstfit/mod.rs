//! First-Fit colorings: good colorings and their replay, the inductive good
//! graphs for paths and matchings, matching weights of rainbow colorings, and
//! the exact First-Fit number by search.
//!
//! A coloring is *good* for a pattern `h` when it is proper, contains a
//! rainbow `h`, and every edge of color `i` touches edges of every color
//! below `i`. First-Fit produces exactly the colorings with the second
//! property, so the least good graph is the First-Fit number.

mod exact;
mod good;
mod weights;

pub use exact::{ar_ff_exact, find_good_coloring, FirstFitResult};
pub use good::{
    ff_replay, first_fit_color, goodify, is_h_good, matching_good, path_good, GoodCheck, GoodColoredGraph,
};
pub use weights::{
    degree_order_coloring, greedy_matching, kn_ff_coloring, max_weight_matching, w_greedy, w_max, weights,
    DegreeOrder, KnColoring, MatchingPick, WeightReport, MAX_WEIGHT_EDGES,
};
