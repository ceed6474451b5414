//! Simple undirected graphs with explicit vertex ids.
//!
//! Vertices are arbitrary `u32` ids: parsed graphs use the dense range
//! `0..n`, while decomposition steps introduce marker vertices with ids at
//! or above `n`.  Graphs are immutable after construction; every operation
//! returns a new value.  All iteration orders are ascending, so results are
//! deterministic.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};

pub type Vertex = u32;

/// Sorted set of vertex ids; the working currency for cuts, sides and
/// decomposition bookkeeping.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default, Hash, serde::Serialize)]
#[serde(transparent)]
pub struct VertexSet(BTreeSet<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(BTreeSet::new())
    }

    pub fn singleton(v: Vertex) -> Self {
        VertexSet(BTreeSet::from([v]))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.contains(&v)
    }

    pub fn insert(&mut self, v: Vertex) -> bool {
        self.0.insert(v)
    }

    pub fn remove(&mut self, v: Vertex) -> bool {
        self.0.remove(&v)
    }

    /// Ascending iterator over the members.
    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    /// Smallest member.  (Named to avoid clashing with `Ord::min`.)
    pub fn first(&self) -> Option<Vertex> {
        self.0.first().copied()
    }

    /// Largest member.
    pub fn last(&self) -> Option<Vertex> {
        self.0.last().copied()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.union(&other.0).copied().collect())
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.intersection(&other.0).copied().collect())
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.difference(&other.0).copied().collect())
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.0.iter().copied().collect()
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        VertexSet(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = Vertex;
    type IntoIter = std::iter::Copied<std::collections::btree_set::Iter<'a, Vertex>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

impl From<BTreeSet<Vertex>> for VertexSet {
    fn from(s: BTreeSet<Vertex>) -> Self {
        VertexSet(s)
    }
}

impl<const N: usize> From<[Vertex; N]> for VertexSet {
    fn from(vs: [Vertex; N]) -> Self {
        vs.into_iter().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Immutable simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: BTreeMap<Vertex, BTreeSet<Vertex>>,
    m: usize,
}

impl Graph {
    /// Builds a graph from an explicit vertex set and edge list.
    ///
    /// Duplicate edges collapse silently; self-loops and edges with an
    /// endpoint outside the vertex set are domain errors.
    pub fn new(
        vertices: impl IntoIterator<Item = Vertex>,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Graph> {
        let mut adj: BTreeMap<Vertex, BTreeSet<Vertex>> =
            vertices.into_iter().map(|v| (v, BTreeSet::new())).collect();
        let mut m = 0;
        for (u, v) in edges {
            if u == v {
                return Err(Error::domain(format!("self-loop at vertex {u}")));
            }
            if !adj.contains_key(&u) || !adj.contains_key(&v) {
                return Err(Error::domain(format!(
                    "edge {u}-{v} has an endpoint outside the vertex set"
                )));
            }
            let fresh = adj.get_mut(&u).unwrap().insert(v);
            adj.get_mut(&v).unwrap().insert(u);
            if fresh {
                m += 1;
            }
        }
        Ok(Graph { adj, m })
    }

    /// Builds a graph whose vertex set is exactly the edge endpoints.
    pub fn from_edges(edges: impl IntoIterator<Item = (Vertex, Vertex)> + Clone) -> Result<Graph> {
        let vertices: BTreeSet<Vertex> = edges
            .clone()
            .into_iter()
            .flat_map(|(u, v)| [u, v])
            .collect();
        Graph::new(vertices, edges)
    }

    /// Graph with no edges on the given vertices.
    pub fn edgeless(vertices: impl IntoIterator<Item = Vertex>) -> Graph {
        Graph::new(vertices, []).expect("edgeless graph is always valid")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> VertexSet {
        self.adj.keys().copied().collect()
    }

    pub fn vertex_iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.keys().copied()
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj.get(&u).is_some_and(|nb| nb.contains(&v))
    }

    /// Neighbors of `v`, which must be a vertex of the graph.
    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj
            .get(&v)
            .unwrap_or_else(|| panic!("vertex {v} not in graph"))
            .iter()
            .copied()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj
            .get(&v)
            .unwrap_or_else(|| panic!("vertex {v} not in graph"))
            .len()
    }

    /// Edges as `(u, v)` pairs with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .flat_map(|(&u, nb)| nb.iter().copied().filter(move |&v| u < v).map(move |v| (u, v)))
    }

    /// Open neighborhood of a set: all vertices outside `s` adjacent to `s`.
    pub fn neighborhood(&self, s: &VertexSet) -> VertexSet {
        s.iter()
            .flat_map(|v| self.neighbors(v))
            .filter(|&u| !s.contains(u))
            .collect()
    }

    /// Complement of `a` within this graph's vertex set.
    pub fn complement_set(&self, a: &VertexSet) -> VertexSet {
        self.vertex_iter().filter(|&v| !a.contains(v)).collect()
    }

    /// Subgraph induced on `a`, which must be a subset of the vertices.
    pub fn induced_subgraph(&self, a: &VertexSet) -> Result<Graph> {
        if !a.is_subset(&self.vertices()) {
            return Err(Error::domain(format!(
                "induced subgraph on {a} requested but it is not a subset of the vertex set"
            )));
        }
        let adj: BTreeMap<Vertex, BTreeSet<Vertex>> = a
            .iter()
            .map(|v| {
                let nb: BTreeSet<Vertex> =
                    self.neighbors(v).filter(|&u| a.contains(u)).collect();
                (v, nb)
            })
            .collect();
        let m = adj.values().map(|nb| nb.len()).sum::<usize>() / 2;
        Ok(Graph { adj, m })
    }

    /// The bipartite cut graph `G[A, V\A]`: same vertices, only the edges
    /// crossing between `a` and its complement.
    pub fn bipartite_cut_graph(&self, a: &VertexSet) -> Result<Graph> {
        if !a.is_subset(&self.vertices()) {
            return Err(Error::domain(format!(
                "cut graph for {a} requested but it is not a subset of the vertex set"
            )));
        }
        let adj: BTreeMap<Vertex, BTreeSet<Vertex>> = self
            .adj
            .iter()
            .map(|(&v, nb)| {
                let side = a.contains(v);
                let nb: BTreeSet<Vertex> =
                    nb.iter().copied().filter(|&u| a.contains(u) != side).collect();
                (v, nb)
            })
            .collect();
        let m = adj.values().map(|nb| nb.len()).sum::<usize>() / 2;
        Ok(Graph { adj, m })
    }

    /// Crossing edges of the cut `(a, V\a)` as `(inside, outside)` pairs.
    pub fn crossing_edges(&self, a: &VertexSet) -> Vec<(Vertex, Vertex)> {
        a.iter()
            .flat_map(|u| {
                self.neighbors(u)
                    .filter(|&v| !a.contains(v))
                    .map(move |v| (u, v))
            })
            .collect()
    }

    /// Relabels vertices: the i-th smallest vertex becomes `names[i]`.
    /// `names` must list one distinct id per vertex.
    pub fn relabel(&self, names: &[Vertex]) -> Graph {
        assert_eq!(names.len(), self.n(), "one name per vertex required");
        let map: BTreeMap<Vertex, Vertex> = self
            .vertex_iter()
            .zip(names.iter().copied())
            .collect();
        Graph::new(
            names.iter().copied(),
            self.edges().map(|(u, v)| (map[&u], map[&v])),
        )
        .expect("relabeling a valid graph stays valid")
    }

    /// Union of two graphs (vertices and edges).
    pub fn sum(&self, other: &Graph) -> Graph {
        let mut adj = self.adj.clone();
        for (&v, nb) in &other.adj {
            adj.entry(v).or_default().extend(nb.iter().copied());
        }
        let m = adj.values().map(|nb| nb.len()).sum::<usize>() / 2;
        Graph { adj, m }
    }

    pub fn is_connected(&self) -> bool {
        if self.n() <= 1 {
            return true;
        }
        self.components().len() == 1
    }

    /// Connected components, sorted by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen: BTreeSet<Vertex> = BTreeSet::new();
        let mut out = Vec::new();
        for v in self.vertex_iter() {
            if seen.contains(&v) {
                continue;
            }
            let mut comp = BTreeSet::from([v]);
            let mut queue = vec![v];
            while let Some(u) = queue.pop() {
                for w in self.neighbors(u) {
                    if comp.insert(w) {
                        queue.push(w);
                    }
                }
            }
            seen.extend(comp.iter().copied());
            out.push(VertexSet(comp));
        }
        out
    }

    /// Serializes to the plain edge-list format (`n m` header, one `u v`
    /// line per edge).  Requires the dense vertex range `0..n`.
    pub fn to_edge_list(&self) -> Result<String> {
        let n = self.n();
        if self.vertex_iter().zip(0..n as Vertex).any(|(v, i)| v != i) {
            return Err(Error::domain(
                "edge-list format requires vertices 0..n".to_string(),
            ));
        }
        let mut out = format!("{} {}\n", n, self.m);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        Ok(out)
    }

    /// Parses a graph from either supported text format.
    ///
    /// Lines starting with `c` or `p` select the DIMACS format (`p edge n m`
    /// header, 1-indexed `e u v` lines); otherwise the plain edge-list
    /// format is used (`n m` header, 0-indexed `u v` lines).  Errors carry
    /// the offending 1-based line number.
    pub fn parse(text: &str) -> Result<Graph> {
        let first = text
            .lines()
            .find(|l| !l.trim().is_empty())
            .unwrap_or_default();
        if first.trim_start().starts_with(['c', 'p']) {
            Self::parse_dimacs(text)
        } else {
            Self::parse_edge_list(text)
        }
    }

    fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
        let mut n = 0usize;
        let mut seen: BTreeSet<(Vertex, Vertex)> = BTreeSet::new();
        for (idx, line) in text.lines().enumerate() {
            let lineno = idx + 1;
            if line.trim().is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if header.is_none() {
                let [ns, ms] = fields[..] else {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: "expected header `n m`".to_string(),
                    });
                };
                let nv = parse_num(ns, lineno)?;
                let mv = parse_num(ms, lineno)?;
                n = nv as usize;
                header = Some((n, mv as usize));
                continue;
            }
            let [us, vs] = fields[..] else {
                return Err(Error::Parse {
                    line: lineno,
                    msg: "expected edge line `u v`".to_string(),
                });
            };
            let u = parse_num(us, lineno)?;
            let v = parse_num(vs, lineno)?;
            if u == v {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("self-loop {u}-{v}"),
                });
            }
            if u as usize >= n || v as usize >= n {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("edge {u}-{v} out of range for {n} vertices"),
                });
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("duplicate edge {u}-{v}"),
                });
            }
            edges.push(key);
        }
        let Some((n, m)) = header else {
            return Err(Error::Parse {
                line: 1,
                msg: "empty input".to_string(),
            });
        };
        if edges.len() != m {
            return Err(Error::Parse {
                line: text.lines().count(),
                msg: format!("header announces {m} edges but {} were given", edges.len()),
            });
        }
        Graph::new(0..n as Vertex, edges)
    }

    fn parse_dimacs(text: &str) -> Result<Graph> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
        let mut seen: BTreeSet<(Vertex, Vertex)> = BTreeSet::new();
        for (idx, line) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = line.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            if let Some(rest) = line.strip_prefix('p') {
                if header.is_some() {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: "repeated problem line".to_string(),
                    });
                }
                let fields: Vec<&str> = rest.split_whitespace().collect();
                let ["edge", ns, ms] = fields[..] else {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: "expected `p edge n m`".to_string(),
                    });
                };
                header = Some((
                    parse_num(ns, lineno)? as usize,
                    parse_num(ms, lineno)? as usize,
                ));
                continue;
            }
            if let Some(rest) = line.strip_prefix('e') {
                let Some((n, _)) = header else {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: "edge before problem line".to_string(),
                    });
                };
                let fields: Vec<&str> = rest.split_whitespace().collect();
                let [us, vs] = fields[..] else {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: "expected `e u v`".to_string(),
                    });
                };
                let u = parse_num(us, lineno)?;
                let v = parse_num(vs, lineno)?;
                if u == 0 || v == 0 || u as usize > n || v as usize > n {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: format!("edge {u}-{v} out of range for {n} vertices (1-indexed)"),
                    });
                }
                if u == v {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: format!("self-loop {u}-{v}"),
                    });
                }
                let (u, v) = (u - 1, v - 1);
                let key = (u.min(v), u.max(v));
                if !seen.insert(key) {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: format!("duplicate edge {}-{}", u + 1, v + 1),
                    });
                }
                edges.push(key);
                continue;
            }
            return Err(Error::Parse {
                line: lineno,
                msg: format!("unrecognized line `{line}`"),
            });
        }
        let Some((n, m)) = header else {
            return Err(Error::Parse {
                line: 1,
                msg: "missing problem line".to_string(),
            });
        };
        if edges.len() != m {
            return Err(Error::Parse {
                line: text.lines().count(),
                msg: format!("header announces {m} edges but {} were given", edges.len()),
            });
        }
        Graph::new(0..n as Vertex, edges)
    }
}

fn parse_num(s: &str, lineno: usize) -> Result<Vertex> {
    s.parse().map_err(|_| Error::Parse {
        line: lineno,
        msg: format!("expected a number, found `{s}`"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::parse("4 3\n0 1\n1 2\n2 3\n").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.m(), 3);
        assert!(g.has_edge(1, 2));
        assert!(!g.has_edge(0, 2));
        let text = g.to_edge_list().unwrap();
        assert_eq!(Graph::parse(&text).unwrap(), g);
    }

    #[test]
    fn duplicate_edge_names_line() {
        let err = Graph::parse("3 3\n0 1\n1 2\n1 2\n").unwrap_err();
        match err {
            Error::Parse { line, msg } => {
                assert_eq!(line, 4);
                assert!(msg.contains("duplicate"), "{msg}");
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn out_of_range_vertex_rejected() {
        let err = Graph::parse("3 1\n0 5\n").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn edge_count_mismatch_rejected() {
        assert!(Graph::parse("3 2\n0 1\n").is_err());
    }

    #[test]
    fn dimacs_is_one_indexed() {
        let g = Graph::parse("c a comment\np edge 3 2\ne 1 2\ne 2 3\n").unwrap();
        assert_eq!(g, corpus::path_graph(3));
        assert!(Graph::parse("p edge 3 1\ne 0 1\n").is_err());
        assert!(Graph::parse("p edge 3 1\ne 1 1\n").is_err());
    }

    #[test]
    fn neighborhood_excludes_the_set() {
        let g = corpus::k13();
        let s = VertexSet::from([1, 2, 3]);
        assert_eq!(g.neighborhood(&s), VertexSet::from([0]));
        assert_eq!(g.neighborhood(&VertexSet::from([0])), VertexSet::from([1, 2, 3]));
    }

    #[test]
    fn induced_subgraph_keeps_internal_edges() {
        let g = corpus::p4();
        let h = g.induced_subgraph(&VertexSet::from([0, 1, 3])).unwrap();
        assert_eq!(h.n(), 3);
        assert_eq!(h.m(), 1);
        assert!(h.has_edge(0, 1));
        assert!(g.induced_subgraph(&VertexSet::from([0, 9])).is_err());
    }

    #[test]
    fn cut_graph_keeps_only_crossing_edges() {
        let g = corpus::p4();
        let h = g.bipartite_cut_graph(&VertexSet::from([0, 1])).unwrap();
        assert_eq!(h.m(), 1);
        assert!(h.has_edge(1, 2));
        assert!(!h.has_edge(0, 1));
    }

    #[test]
    fn sum_unions_vertices_and_edges() {
        let a = Graph::from_edges([(0, 1)]).unwrap();
        let b = Graph::from_edges([(1, 2)]).unwrap();
        let s = a.sum(&b);
        assert_eq!(s, corpus::path_graph(3));
    }

    #[test]
    fn components_are_sorted() {
        let g = Graph::new(0..5, [(3, 1), (0, 4)]).unwrap();
        let comps = g.components();
        assert_eq!(comps.len(), 3);
        assert_eq!(comps[0], VertexSet::from([0, 4]));
        assert_eq!(comps[1], VertexSet::from([1, 3]));
        assert_eq!(comps[2], VertexSet::from([2]));
        assert!(!g.is_connected());
        assert!(corpus::c5().is_connected());
    }

    #[test]
    fn self_loop_rejected_in_constructor() {
        assert!(Graph::new([0, 1], [(0, 0)]).is_err());
        assert!(Graph::new([0, 1], [(0, 2)]).is_err());
    }
}
