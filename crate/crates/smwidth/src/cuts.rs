//! Cut functions on vertex bipartitions: maximum matchings of the crossing
//! edges, König covers, split detection, and the split-matching value that
//! drives every width computation in this crate.
//!
//! For a cut `(A, V\A)` the matching value `mm(A)` is the size of a maximum
//! matching of the bipartite cut graph `G[A, V\A]`.  The split-matching
//! value `sm(A)` equals 1 when the cut is a split (both sides have at least
//! two vertices and the crossing edges form a complete bipartite graph
//! between the two boundaries) and `mm(A)` otherwise.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// Which cut function a width computation uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CutFunction {
    /// Maximum-matching value of the cut.
    Mm,
    /// Split-matching value: 1 on splits, `mm` elsewhere.
    Sm,
}

impl CutFunction {
    pub fn value(self, g: &Graph, a: &VertexSet) -> usize {
        let eval = evaluate_cut(g, a);
        match self {
            CutFunction::Mm => eval.mm,
            CutFunction::Sm => eval.sm,
        }
    }
}

/// Full evaluation of one cut: matching value, split flag, split-matching
/// value, and the witnesses backing them.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct CutEvaluation {
    /// The side `A` the evaluation was asked about.
    pub side: VertexSet,
    /// Whether `(A, V\A)` is a split of the graph.
    pub is_split: bool,
    /// Maximum matching size of the bipartite cut graph.
    pub mm: usize,
    /// Split-matching value: 1 if `is_split`, else `mm`.
    pub sm: usize,
    /// A maximum matching of the cut graph, as `(inside, outside)` pairs.
    pub matching: Vec<(Vertex, Vertex)>,
    /// A minimum vertex cover of the cut graph (König), size `mm`.
    pub cover: VertexSet,
}

/// Maximum matching of the bipartite cut graph `G[A, V\A]`, as sorted
/// `(inside, outside)` pairs.  Deterministic for a fixed graph and side.
pub fn max_matching_cut(g: &Graph, a: &VertexSet) -> Result<Vec<(Vertex, Vertex)>> {
    if !a.is_subset(&g.vertices()) {
        return Err(Error::domain(format!(
            "cut side {a} is not a subset of the vertex set"
        )));
    }
    let adj = cut_adjacency(g, a);
    let pairing = hopcroft_karp(&adj);
    Ok(pairing.into_iter().collect())
}

/// Minimum vertex cover of the cut graph, derived from a maximum matching
/// by the König construction.  `matching` must be a maximum matching of
/// `G[A, V\A]`; anything smaller or malformed is a domain error.
pub fn koenig_cover(
    g: &Graph,
    a: &VertexSet,
    matching: &[(Vertex, Vertex)],
) -> Result<VertexSet> {
    if !a.is_subset(&g.vertices()) {
        return Err(Error::domain(format!(
            "cut side {a} is not a subset of the vertex set"
        )));
    }
    let adj = cut_adjacency(g, a);
    let mut mate: BTreeMap<Vertex, Vertex> = BTreeMap::new();
    for &(u, v) in matching {
        if !a.contains(u) || a.contains(v) || !g.has_edge(u, v) {
            return Err(Error::domain(format!(
                "pair {u}-{v} is not a crossing edge of the cut"
            )));
        }
        if mate.insert(u, v).is_some() || mate.insert(v, u).is_some() {
            return Err(Error::domain(format!(
                "vertex reused by the matching at pair {u}-{v}"
            )));
        }
    }
    if matching.len() != hopcroft_karp(&adj).len() {
        return Err(Error::domain(
            "matching is not maximum on the cut graph".to_string(),
        ));
    }

    // Alternating reachability from the unmatched left vertices: free edges
    // left-to-right, matched edges right-to-left.
    let mut visited_left: VertexSet = adj
        .keys()
        .copied()
        .filter(|u| !mate.contains_key(u))
        .collect();
    let mut visited_right = VertexSet::new();
    let mut frontier: Vec<Vertex> = visited_left.iter().collect();
    while let Some(u) = frontier.pop() {
        for &v in &adj[&u] {
            if mate.get(&u) == Some(&v) || !visited_right.insert(v) {
                continue;
            }
            if let Some(&u2) = mate.get(&v) {
                if visited_left.insert(u2) {
                    frontier.push(u2);
                }
            }
        }
    }
    let cover: VertexSet = adj
        .keys()
        .copied()
        .filter(|u| mate.contains_key(u) && !visited_left.contains(*u))
        .chain(visited_right.iter())
        .collect();
    debug_assert_eq!(cover.len(), matching.len());
    Ok(cover)
}

/// Whether `(A, V\A)` is a split: both sides have at least two vertices and
/// every boundary vertex of `A` has the same neighborhood across the cut.
/// Splits are only defined for connected graphs.
pub fn is_split(g: &Graph, a: &VertexSet) -> Result<bool> {
    if !a.is_subset(&g.vertices()) {
        return Err(Error::domain(format!(
            "cut side {a} is not a subset of the vertex set"
        )));
    }
    if !g.is_connected() {
        return Err(Error::domain(
            "splits are only defined for connected graphs".to_string(),
        ));
    }
    Ok(split_check(g, a))
}

fn split_check(g: &Graph, a: &VertexSet) -> bool {
    if a.len() < 2 || g.n() - a.len() < 2 {
        return false;
    }
    let mut shared: Option<VertexSet> = None;
    for u in a.iter() {
        let outside: VertexSet = g.neighbors(u).filter(|&v| !a.contains(v)).collect();
        if outside.is_empty() {
            continue;
        }
        match &shared {
            None => shared = Some(outside),
            Some(t) => {
                if *t != outside {
                    return false;
                }
            }
        }
    }
    true
}

/// Evaluates `mm` and `sm` on the cut `(A, V\A)` together with witnesses.
///
/// On a disconnected graph no cut counts as a split, so `sm` falls back to
/// the matching value there; likewise when either side has fewer than two
/// vertices.
pub fn evaluate_cut(g: &Graph, a: &VertexSet) -> CutEvaluation {
    let matching = max_matching_cut(g, a).expect("side must be a subset of the vertex set");
    let cover = koenig_cover(g, a, &matching).expect("matching was just computed as maximum");
    let mm = matching.len();
    let is_split = g.is_connected() && split_check(g, a);
    let sm = if is_split { 1 } else { mm };
    CutEvaluation {
        side: a.clone(),
        is_split,
        mm,
        sm,
        matching,
        cover,
    }
}

/// Adjacency of the bipartite cut graph, keyed by the `A`-side vertices
/// that have at least one crossing edge.
fn cut_adjacency(g: &Graph, a: &VertexSet) -> BTreeMap<Vertex, Vec<Vertex>> {
    a.iter()
        .filter_map(|u| {
            let nb: Vec<Vertex> = g.neighbors(u).filter(|&v| !a.contains(v)).collect();
            (!nb.is_empty()).then_some((u, nb))
        })
        .collect()
}

/// Hopcroft–Karp maximum bipartite matching.  `adj` maps each left vertex
/// to its right neighbors in ascending order; the result maps left to
/// right.  Deterministic: vertices are scanned in ascending order.
fn hopcroft_karp(adj: &BTreeMap<Vertex, Vec<Vertex>>) -> BTreeMap<Vertex, Vertex> {
    const INF: usize = usize::MAX;
    let mut mate_left: BTreeMap<Vertex, Vertex> = BTreeMap::new();
    let mut mate_right: BTreeMap<Vertex, Vertex> = BTreeMap::new();

    loop {
        // Breadth-first layering from the free left vertices.
        let mut dist: BTreeMap<Vertex, usize> = BTreeMap::new();
        let mut queue: std::collections::VecDeque<Vertex> = adj
            .keys()
            .copied()
            .filter(|u| !mate_left.contains_key(u))
            .collect();
        for &u in &queue {
            dist.insert(u, 0);
        }
        let mut found_free_right = false;
        while let Some(u) = queue.pop_front() {
            for v in &adj[&u] {
                match mate_right.get(v) {
                    None => found_free_right = true,
                    Some(&u2) => {
                        if !dist.contains_key(&u2) {
                            dist.insert(u2, dist[&u] + 1);
                            queue.push_back(u2);
                        }
                    }
                }
            }
        }
        if !found_free_right {
            break;
        }

        // Depth-first augmentation along the layering.
        fn augment(
            u: Vertex,
            adj: &BTreeMap<Vertex, Vec<Vertex>>,
            dist: &mut BTreeMap<Vertex, usize>,
            mate_left: &mut BTreeMap<Vertex, Vertex>,
            mate_right: &mut BTreeMap<Vertex, Vertex>,
        ) -> bool {
            for &v in &adj[&u] {
                let ok = match mate_right.get(&v) {
                    None => true,
                    Some(&u2) => {
                        dist.get(&u2) == Some(&(dist[&u] + 1))
                            && augment(u2, adj, dist, mate_left, mate_right)
                    }
                };
                if ok {
                    mate_left.insert(u, v);
                    mate_right.insert(v, u);
                    return true;
                }
            }
            dist.insert(u, INF);
            false
        }

        let free: Vec<Vertex> = adj
            .keys()
            .copied()
            .filter(|u| !mate_left.contains_key(u))
            .collect();
        let mut augmented = false;
        for u in free {
            if augment(u, adj, &mut dist, &mut mate_left, &mut mate_right) {
                augmented = true;
            }
        }
        if !augmented {
            break;
        }
    }
    mate_left
}

/// Maximum matching of a (not necessarily bipartite) graph, found by
/// memoized search over vertex subsets.  Intended for small graphs; more
/// than 24 vertices is refused.
pub fn max_matching_general(g: &Graph) -> Result<Vec<(Vertex, Vertex)>> {
    if g.n() > 24 {
        return Err(Error::refusal(format!(
            "general matching by subset search is limited to 24 vertices, got {}",
            g.n()
        )));
    }
    let verts: Vec<Vertex> = g.vertex_iter().collect();
    let index: BTreeMap<Vertex, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut memo: BTreeMap<u32, usize> = BTreeMap::new();

    fn best(
        mask: u32,
        g: &Graph,
        verts: &[Vertex],
        index: &BTreeMap<Vertex, usize>,
        memo: &mut BTreeMap<u32, usize>,
    ) -> usize {
        if mask == 0 {
            return 0;
        }
        if let Some(&v) = memo.get(&mask) {
            return v;
        }
        let i = mask.trailing_zeros() as usize;
        // Either leave verts[i] unmatched...
        let mut result = best(mask & !(1 << i), g, verts, index, memo);
        // ...or match it to a remaining neighbor.
        for w in g.neighbors(verts[i]) {
            let j = index[&w];
            if mask & (1 << j) != 0 {
                let rest = mask & !(1 << i) & !(1 << j);
                result = result.max(1 + best(rest, g, verts, index, memo));
            }
        }
        memo.insert(mask, result);
        result
    }

    let full: u32 = if verts.len() == 32 {
        u32::MAX
    } else {
        (1u32 << verts.len()) - 1
    };
    let total = best(full, g, &verts, &index, &mut memo);

    // Deterministic witness: repeatedly commit the choice at the lowest
    // live vertex that keeps the optimum.
    let mut mask = full;
    let mut matching = Vec::new();
    while mask != 0 && matching.len() < total {
        let i = mask.trailing_zeros() as usize;
        let without = mask & !(1 << i);
        if best(without, g, &verts, &index, &mut memo) == best(mask, g, &verts, &index, &mut memo)
        {
            mask = without;
            continue;
        }
        let target = best(mask, g, &verts, &index, &mut memo);
        let mut advanced = false;
        for w in g.neighbors(verts[i]) {
            let j = index[&w];
            if mask & (1 << j) != 0 {
                let rest = without & !(1 << j);
                if 1 + best(rest, g, &verts, &index, &mut memo) == target {
                    matching.push((verts[i].min(w), verts[i].max(w)));
                    mask = rest;
                    advanced = true;
                    break;
                }
            }
        }
        debug_assert!(advanced, "witness reconstruction must progress");
    }
    Ok(matching)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::graph::Graph;

    fn vs(vs: impl IntoIterator<Item = Vertex>) -> VertexSet {
        vs.into_iter().collect()
    }

    #[test]
    fn matching_on_star_cut_is_one() {
        let g = corpus::k13();
        let m = max_matching_cut(&g, &vs([1, 2, 3])).unwrap();
        assert_eq!(m.len(), 1);
        let cover = koenig_cover(&g, &vs([1, 2, 3]), &m).unwrap();
        assert_eq!(cover, vs([0]));
    }

    #[test]
    fn matching_on_clique_cut() {
        let g = corpus::k4();
        let m = max_matching_cut(&g, &vs([0, 1])).unwrap();
        assert_eq!(m.len(), 2);
        let cover = koenig_cover(&g, &vs([0, 1]), &m).unwrap();
        assert_eq!(cover.len(), 2);
        // Every crossing edge must have an endpoint in the cover.
        for (u, v) in g.crossing_edges(&vs([0, 1])) {
            assert!(cover.contains(u) || cover.contains(v));
        }
    }

    #[test]
    fn koenig_rejects_non_maximum_matching() {
        let g = corpus::k4();
        assert!(koenig_cover(&g, &vs([0, 1]), &[(0, 2)]).is_err());
        assert!(koenig_cover(&g, &vs([0, 1]), &[(0, 1)]).is_err());
    }

    #[test]
    fn split_detection() {
        let g = corpus::p4();
        assert!(is_split(&g, &vs([0, 1])).unwrap());
        assert!(!is_split(&g, &vs([0, 2])).unwrap());
        assert!(!is_split(&g, &vs([0])).unwrap());
        // Clique: every balanced-enough cut is a split.
        let k4 = corpus::k4();
        assert!(is_split(&k4, &vs([0, 1])).unwrap());
        assert!(is_split(&k4, &vs([1, 3])).unwrap());
        // C5 is prime: no split at all.
        let c5 = corpus::c5();
        for mask in 0u32..(1 << 5) {
            let a: VertexSet = (0..5).filter(|&i| mask & (1 << i) != 0).collect();
            assert!(!is_split(&c5, &a).unwrap(), "C5 should not have split {a}");
        }
        let disconnected = Graph::new(0..4, [(0, 1), (2, 3)]).unwrap();
        assert!(is_split(&disconnected, &vs([0, 1])).is_err());
    }

    #[test]
    fn evaluate_cut_combines_the_pieces() {
        let g = corpus::p4();
        let eval = evaluate_cut(&g, &vs([0, 1]));
        assert!(eval.is_split);
        assert_eq!(eval.mm, 1);
        assert_eq!(eval.sm, 1);
        assert_eq!(eval.matching.len(), eval.mm);
        assert_eq!(eval.cover.len(), eval.mm);

        let eval = evaluate_cut(&g, &vs([0, 2]));
        assert!(!eval.is_split);
        assert_eq!(eval.mm, 2);
        assert_eq!(eval.sm, 2);

        // Degenerate sides.
        let eval = evaluate_cut(&g, &vs([]));
        assert_eq!(eval.sm, 0);
        let eval = evaluate_cut(&g, &g.vertices());
        assert_eq!(eval.sm, 0);

        // Disconnected graph: zero-crossing cut is not a split.
        let h = Graph::new(0..4, [(0, 1), (2, 3)]).unwrap();
        let eval = evaluate_cut(&h, &vs([0, 1]));
        assert!(!eval.is_split);
        assert_eq!(eval.mm, 0);
        assert_eq!(eval.sm, 0);
    }

    #[test]
    fn general_matching_matches_bipartite_on_paths() {
        let g = corpus::path_graph(7);
        let m = max_matching_general(&g).unwrap();
        assert_eq!(m.len(), 3);
        let g = corpus::cycle_graph(5);
        assert_eq!(max_matching_general(&g).unwrap().len(), 2);
        let g = corpus::complete_graph(6);
        assert_eq!(max_matching_general(&g).unwrap().len(), 3);
        // Witness edges must be disjoint and real.
        let g = corpus::tt();
        let m = max_matching_general(&g).unwrap();
        assert_eq!(m.len(), 3);
        let mut used = std::collections::BTreeSet::new();
        for (u, v) in m {
            assert!(g.has_edge(u, v));
            assert!(used.insert(u) && used.insert(v));
        }
    }
}
