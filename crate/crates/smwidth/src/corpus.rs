//! Small named graphs and parametric families used throughout the tests
//! and the command-line `generate` command.

use crate::graph::{Graph, Vertex};

/// Path on `n` vertices `0 - 1 - ... - n-1`.
pub fn path_graph(n: usize) -> Graph {
    Graph::new(
        0..n as Vertex,
        (1..n as Vertex).map(|v| (v - 1, v)),
    )
    .expect("path is a valid graph")
}

/// Cycle on `n >= 3` vertices.
pub fn cycle_graph(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    Graph::new(
        0..n as Vertex,
        (0..n as Vertex).map(|v| (v, (v + 1) % n as Vertex)),
    )
    .expect("cycle is a valid graph")
}

/// Complete graph on `n` vertices.
pub fn complete_graph(n: usize) -> Graph {
    let n = n as Vertex;
    Graph::new(0..n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        .expect("clique is a valid graph")
}

/// Star with center `0` and `leaves` leaves.
pub fn star_graph(leaves: usize) -> Graph {
    Graph::new(
        0..=leaves as Vertex,
        (1..=leaves as Vertex).map(|v| (0, v)),
    )
    .expect("star is a valid graph")
}

/// The path `0 - 1 - 2 - 3`.
pub fn p4() -> Graph {
    path_graph(4)
}

/// The 4-cycle.
pub fn c4() -> Graph {
    cycle_graph(4)
}

/// The 5-cycle.
pub fn c5() -> Graph {
    cycle_graph(5)
}

/// The complete graph on 4 vertices.
pub fn k4() -> Graph {
    complete_graph(4)
}

/// The star with center 0 and leaves 1, 2, 3.
pub fn k13() -> Graph {
    star_graph(3)
}

/// Two triangles `{0,1,2}` and `{3,4,5}` bridged by the edge `2-3`.
pub fn tt() -> Graph {
    Graph::new(0..6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (2, 3)])
        .expect("bridged triangles form a valid graph")
}

/// Looks up one of the named corpus graphs.
pub fn by_name(name: &str) -> Option<Graph> {
    match name.to_ascii_lowercase().as_str() {
        "p4" => Some(p4()),
        "c4" => Some(c4()),
        "c5" => Some(c5()),
        "k4" => Some(k4()),
        "k13" => Some(k13()),
        "tt" => Some(tt()),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_shapes() {
        assert_eq!(p4().m(), 3);
        assert_eq!(c4().m(), 4);
        assert_eq!(c5().m(), 5);
        assert_eq!(k4().m(), 6);
        assert_eq!(k13().m(), 3);
        assert_eq!(k13().degree(0), 3);
        let tt = tt();
        assert_eq!(tt.n(), 6);
        assert_eq!(tt.m(), 7);
        assert!(tt.has_edge(2, 3));
        assert!(tt.is_connected());
        assert!(by_name("C5").is_some());
        assert!(by_name("q7").is_none());
    }
}
