#![allow(dead_code)]

use wordrep::{parse_graph6, Graph};

pub const SMALL: &str = include_str!("../data/graphs_n1_to_5.g6");
pub const SIX: &str = include_str!("../data/graphs_n6.g6");

/// All isomorphism classes on 1..=5 vertices.
pub fn small_graphs() -> Vec<Graph> {
    SMALL.lines().map(|l| parse_graph6(l).unwrap()).collect()
}

/// All isomorphism classes on 6 vertices.
pub fn six_vertex_graphs() -> Vec<Graph> {
    SIX.lines().map(|l| parse_graph6(l).unwrap()).collect()
}
