//! Local antimagic labelings of graphs.
//!
//! A bijection from the `q` edges of a graph onto `1..=q` is local antimagic
//! when adjacent vertices receive different incident-label sums; the sums then
//! form a proper vertex coloring. This crate builds such labelings for cycles,
//! even-regular bipartite graphs, hub-based tripartite graphs and
//! lexicographic products `G[O_n]`, checks them, and computes the minimum
//! number of colors exactly on small graphs.

pub mod graph;
pub mod labeling;
pub mod magic;
pub mod constructions;
pub mod solver;
pub mod theorems;
