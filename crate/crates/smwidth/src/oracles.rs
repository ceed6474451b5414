//! Brute-force reference solvers, exhaustive graph enumerators, and
//! known-width family generators.
//!
//! Everything here is deliberately independent of the decomposition and
//! dynamic-programming machinery: the solvers enumerate raw search spaces,
//! so they can serve as differential oracles for the clever code paths.

use std::collections::BTreeSet;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::branch_dec::exact_branch_decomposition;
use crate::cuts::CutFunction;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Vertex ceiling of the subset-enumeration oracles.
pub const BRUTE_LIMIT: usize = 8;

/// Vertex ceiling of the edge-subset oracle for edge dominating set.
pub const BRUTE_EDS_LIMIT: usize = 7;

/// Vertex ceiling of the exact width oracles.
pub const EXACT_WIDTH_LIMIT: usize = 8;

/// Vertex ceiling of the labeled exhaustive sweep.
pub const LABELED_SWEEP_LIMIT: usize = 7;

/// Vertex ceiling of the isomorphism-class sweep.
pub const CLASS_SWEEP_LIMIT: usize = 8;

/// The four target problems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Problem {
    #[serde(rename = "maxcut")]
    MaxCut,
    #[serde(rename = "hc")]
    HamiltonianCycle,
    #[serde(rename = "chromatic")]
    Chromatic,
    #[serde(rename = "eds")]
    EdgeDominatingSet,
}

impl Problem {
    pub const ALL: [Problem; 4] =
        [Problem::MaxCut, Problem::HamiltonianCycle, Problem::Chromatic, Problem::EdgeDominatingSet];

    pub fn name(self) -> &'static str {
        match self {
            Problem::MaxCut => "maxcut",
            Problem::HamiltonianCycle => "hc",
            Problem::Chromatic => "chromatic",
            Problem::EdgeDominatingSet => "eds",
        }
    }
}

impl std::str::FromStr for Problem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Problem> {
        match s {
            "maxcut" => Ok(Problem::MaxCut),
            "hc" => Ok(Problem::HamiltonianCycle),
            "chromatic" => Ok(Problem::Chromatic),
            "eds" => Ok(Problem::EdgeDominatingSet),
            other => Err(Error::domain(format!(
                "unknown problem {other:?}; expected maxcut, hc, chromatic, or eds"
            ))),
        }
    }
}

impl std::fmt::Display for Problem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// A solved instance: an optimum value or a yes/no decision.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase", tag = "kind", content = "answer")]
pub enum Answer {
    Value(usize),
    Decision(bool),
}

impl std::fmt::Display for Answer {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Answer::Value(v) => write!(f, "{v}"),
            Answer::Decision(true) => f.write_str("yes"),
            Answer::Decision(false) => f.write_str("no"),
        }
    }
}

/// Dense `u32` adjacency rows over the graph's sorted vertices.
fn dense_rows(g: &Graph) -> (Vec<u32>, Vec<Vertex>) {
    let order: Vec<Vertex> = g.vertex_iter().collect();
    let mut rows = vec![0u32; order.len()];
    for (i, &v) in order.iter().enumerate() {
        for w in g.neighbors(v) {
            let j = order.binary_search(&w).expect("neighbor is a vertex");
            rows[i] |= 1 << j;
        }
    }
    (rows, order)
}

fn check_limit(g: &Graph, limit: usize, what: &str) -> Result<()> {
    if g.n() > limit {
        return Err(Error::refusal(format!(
            "{what} oracle is limited to {limit} vertices; the graph has {}",
            g.n()
        )));
    }
    Ok(())
}

/// Largest cut value, by scanning all `2^n` vertex bipartitions.
pub fn brute_max_cut(g: &Graph) -> Result<usize> {
    check_limit(g, BRUTE_LIMIT, "max-cut")?;
    let (rows, order) = dense_rows(g);
    let n = order.len();
    let mut best = 0usize;
    for mask in 0..(1u32 << n) {
        let mut crossing = 0usize;
        let mut bits = mask;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            crossing += (rows[v] & !mask).count_ones() as usize;
        }
        best = best.max(crossing);
    }
    Ok(best)
}

/// Whether a cycle through every vertex exists, by subset dynamic
/// programming over paths anchored at the smallest vertex.  Graphs with
/// fewer than three vertices have no cycle.
pub fn brute_hamiltonian_cycle(g: &Graph) -> Result<bool> {
    check_limit(g, BRUTE_LIMIT, "hamiltonian-cycle")?;
    let (rows, order) = dense_rows(g);
    let n = order.len();
    if n < 3 {
        return Ok(false);
    }
    let full = (1u32 << n) - 1;
    // ends[mask] = set of possible endpoints of a path from vertex 0
    // covering exactly `mask`.
    let mut ends = vec![0u32; 1 << n];
    ends[1] = 1;
    for mask in 1..=full {
        if mask & 1 == 0 || ends[mask as usize] == 0 {
            continue;
        }
        let mut here = ends[mask as usize];
        while here != 0 {
            let v = here.trailing_zeros() as usize;
            here &= here - 1;
            let mut next = rows[v] & !mask;
            while next != 0 {
                let w = next.trailing_zeros();
                next &= next - 1;
                ends[(mask | (1 << w)) as usize] |= 1 << w;
            }
        }
    }
    Ok(ends[full as usize] & rows[0] & !1 != 0)
}

/// Chromatic number by subset dynamic programming: peel one independent
/// color class containing the smallest remaining vertex at a time.
pub fn brute_chromatic_number(g: &Graph) -> Result<usize> {
    check_limit(g, BRUTE_LIMIT, "chromatic-number")?;
    let (rows, order) = dense_rows(g);
    let n = order.len();
    if n == 0 {
        return Ok(0);
    }
    let size = 1usize << n;
    let mut independent = vec![false; size];
    independent[0] = true;
    for mask in 1..size as u32 {
        let v = 31 - mask.leading_zeros();
        let rest = mask & !(1 << v);
        independent[mask as usize] = independent[rest as usize] && rows[v as usize] & rest == 0;
    }
    let mut chi = vec![u8::MAX; size];
    chi[0] = 0;
    for mask in 1..size as u32 {
        let low = mask & mask.wrapping_neg();
        let mut best = u8::MAX;
        // All submasks containing the lowest vertex; one of them is its
        // color class.
        let mut t = mask;
        while t > 0 {
            if t & low != 0 && independent[t as usize] {
                best = best.min(1 + chi[(mask ^ t) as usize]);
            }
            t = (t - 1) & mask;
        }
        chi[mask as usize] = best;
    }
    Ok(chi[size - 1] as usize)
}

/// Minimum edge dominating set size, by scanning all edge subsets.
pub fn brute_min_eds(g: &Graph) -> Result<usize> {
    check_limit(g, BRUTE_EDS_LIMIT, "edge-dominating-set")?;
    let edges: Vec<(Vertex, Vertex)> = g.edges().collect();
    let m = edges.len();
    if m == 0 {
        return Ok(0);
    }
    // dominated[i] = mask of edges sharing an endpoint with edge i.
    let mut dominated = vec![0u32; m];
    for (i, &(a, b)) in edges.iter().enumerate() {
        for (j, &(c, d)) in edges.iter().enumerate() {
            if a == c || a == d || b == c || b == d {
                dominated[i] |= 1 << j;
            }
        }
    }
    let full = if m == 32 { u32::MAX } else { (1u32 << m) - 1 };
    let mut best = m;
    for mask in 0..=full {
        let size = mask.count_ones() as usize;
        if size >= best {
            continue;
        }
        let mut covered = 0u32;
        let mut bits = mask;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            covered |= dominated[i];
        }
        if covered == full {
            best = size;
        }
    }
    Ok(best)
}

/// Runs the named brute-force solver.
pub fn brute_force_solve(problem: Problem, g: &Graph) -> Result<Answer> {
    Ok(match problem {
        Problem::MaxCut => Answer::Value(brute_max_cut(g)?),
        Problem::HamiltonianCycle => Answer::Decision(brute_hamiltonian_cycle(g)?),
        Problem::Chromatic => Answer::Value(brute_chromatic_number(g)?),
        Problem::EdgeDominatingSet => Answer::Value(brute_min_eds(g)?),
    })
}

/// Exact split-matching width via exhaustive decomposition search.
pub fn exact_smw(g: &Graph) -> Result<usize> {
    check_limit(g, EXACT_WIDTH_LIMIT, "exact width")?;
    Ok(exact_branch_decomposition(g, CutFunction::Sm, EXACT_WIDTH_LIMIT)?.1.width)
}

/// Exact maximum-matching width via exhaustive decomposition search.
pub fn exact_mmw(g: &Graph) -> Result<usize> {
    check_limit(g, EXACT_WIDTH_LIMIT, "exact width")?;
    Ok(exact_branch_decomposition(g, CutFunction::Mm, EXACT_WIDTH_LIMIT)?.1.width)
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration
// ---------------------------------------------------------------------------

fn rows_connected(n: usize, rows: &[u32]) -> bool {
    if n == 0 {
        return true;
    }
    let full = (1u32 << n) - 1;
    let mut seen = 1u32;
    loop {
        let mut grown = seen;
        let mut bits = seen;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            grown |= rows[v];
        }
        if grown == seen {
            return seen == full;
        }
        seen = grown;
    }
}

fn graph_from_rows(n: usize, rows: &[u32]) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        let mut bits = rows[u] >> (u + 1) << (u + 1);
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            edges.push((u as Vertex, v as Vertex));
        }
    }
    Graph::new((0..n as Vertex).collect::<Vec<_>>(), edges).expect("rows describe a simple graph")
}

/// Every labeled graph on vertices `0..n`, streaming, optionally filtered
/// to connected ones.  Refuses beyond [`LABELED_SWEEP_LIMIT`] vertices
/// (the count doubles per edge slot).
pub fn labeled_graphs(
    n: usize,
    connected_only: bool,
) -> Result<impl Iterator<Item = Graph>> {
    if n > LABELED_SWEEP_LIMIT {
        return Err(Error::refusal(format!(
            "labeled sweep is limited to {LABELED_SWEEP_LIMIT} vertices; asked for {n}"
        )));
    }
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            pairs.push((u, v));
        }
    }
    let total = 1u64 << pairs.len();
    Ok((0..total).filter_map(move |mask| {
        let mut rows = vec![0u32; n];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                rows[u] |= 1 << v;
                rows[v] |= 1 << u;
            }
        }
        if connected_only && !rows_connected(n, &rows) {
            return None;
        }
        Some(graph_from_rows(n, &rows))
    }))
}

/// Upper-triangle adjacency bits in column order: for each column `t`,
/// bits `(0,t), (1,t), ..., (t-1,t)`.  Assigning vertices to slots
/// `0, 1, ..., t` determines a prefix of this string, which makes it the
/// right shape for canonical-form backtracking.
#[cfg(test)]
fn rows_to_bits(n: usize, rows: &[u32]) -> u64 {
    let mut bits = 0u64;
    for t in 1..n {
        for i in 0..t {
            bits <<= 1;
            if rows[i] >> t & 1 == 1 {
                bits |= 1;
            }
        }
    }
    bits
}

fn bits_to_rows(n: usize, bits: u64) -> Vec<u32> {
    let total = n * (n - 1) / 2;
    let mut rows = vec![0u32; n];
    let mut pos = 0;
    for t in 1..n {
        for i in 0..t {
            if bits >> (total - 1 - pos) & 1 == 1 {
                rows[i] |= 1 << t;
                rows[t] |= 1 << i;
            }
            pos += 1;
        }
    }
    rows
}

/// Lexicographically smallest upper-triangle bit string over all vertex
/// relabelings, by backtracking with prefix pruning.
fn canonical_bits(n: usize, rows: &[u32]) -> u64 {
    if n <= 1 {
        return 0;
    }
    let total = n * (n - 1) / 2;
    struct Search<'a> {
        n: usize,
        total: usize,
        rows: &'a [u32],
        chosen: Vec<usize>,
        best: u64,
    }
    impl Search<'_> {
        fn go(&mut self, prefix: u64, prefix_len: usize) {
            let t = self.chosen.len();
            if t == self.n {
                if prefix < self.best {
                    self.best = prefix;
                }
                return;
            }
            for cand in 0..self.n {
                if self.chosen.contains(&cand) {
                    continue;
                }
                let mut next = prefix;
                for &earlier in &self.chosen {
                    next <<= 1;
                    if self.rows[cand] >> earlier & 1 == 1 {
                        next |= 1;
                    }
                }
                let next_len = prefix_len + t;
                // Compare against the best result's prefix of equal length.
                if next > self.best >> (self.total - next_len) {
                    continue;
                }
                self.chosen.push(cand);
                self.go(next, next_len);
                self.chosen.pop();
            }
        }
    }
    let mut search =
        Search { n, total, rows, chosen: Vec::new(), best: (1u64 << total) - 1 };
    search.go(0, 0);
    search.best
}

/// One representative per isomorphism class of graphs on `n` vertices,
/// optionally restricted to connected graphs, in a deterministic order.
///
/// Classes are grown by vertex extension: every (connected) graph arises
/// from a (connected) graph one vertex smaller by attaching the new vertex
/// to some subset, so extending canonical representatives by all subsets
/// and re-canonicalizing reaches every class.  Refuses beyond
/// [`CLASS_SWEEP_LIMIT`] vertices.
pub fn graph_classes(n: usize, connected_only: bool) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::domain("isomorphism classes start at one vertex"));
    }
    if n > CLASS_SWEEP_LIMIT {
        return Err(Error::refusal(format!(
            "class enumeration is limited to {CLASS_SWEEP_LIMIT} vertices; asked for {n}"
        )));
    }
    let mut reps: Vec<Vec<u32>> = vec![vec![0u32]];
    for size in 2..=n {
        let mut seen = BTreeSet::new();
        for parent in &reps {
            let subsets = 1u32 << (size - 1);
            let start = if connected_only { 1 } else { 0 };
            for attach in start..subsets {
                let mut rows = parent.clone();
                rows.push(0);
                let mut bits = attach;
                while bits != 0 {
                    let u = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    rows[u] |= 1 << (size - 1);
                    rows[size - 1] |= 1 << u;
                }
                seen.insert(canonical_bits(size, &rows));
            }
        }
        reps = seen.into_iter().map(|bits| bits_to_rows(size, bits)).collect();
    }
    Ok(reps.into_iter().map(|rows| graph_from_rows(n, &rows)).collect())
}

// ---------------------------------------------------------------------------
// Seeded generators
// ---------------------------------------------------------------------------

/// Random graph on `0..n`: each pair becomes an edge with probability `p`.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n as Vertex {
        for v in (u + 1)..n as Vertex {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(0..n as Vertex, edges).expect("generated pairs are simple")
}

/// Random connected graph: a random recursive tree plus independent extra
/// edges with probability `p`.
pub fn random_connected_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    assert!(n >= 1, "a connected graph needs a vertex");
    let mut edges = Vec::new();
    for v in 1..n as Vertex {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n as Vertex {
        for v in (u + 1)..n as Vertex {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(0..n as Vertex, edges).expect("tree plus extras is simple")
}

/// Random tree on `0..n` (each vertex attaches to a random earlier one).
pub fn random_tree(rng: &mut impl Rng, n: usize) -> Graph {
    random_connected_graph(rng, n, 0.0)
}

/// One growth step of a distance-hereditary construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase", tag = "step", content = "anchor")]
pub enum DhStep {
    /// New vertex adjacent to the anchor only.
    Pendant(Vertex),
    /// New vertex adjacent to the anchor and all its neighbors.
    TrueTwin(Vertex),
    /// New vertex adjacent to exactly the anchor's neighbors.
    FalseTwin(Vertex),
}

/// Applies one growth step, adding vertex `v`.
fn apply_dh_step(edges: &mut Vec<(Vertex, Vertex)>, g: &Graph, v: Vertex, step: DhStep) {
    match step {
        DhStep::Pendant(a) => edges.push((a, v)),
        DhStep::TrueTwin(a) => {
            edges.push((a, v));
            for w in g.neighbors(a) {
                edges.push((w, v));
            }
        }
        DhStep::FalseTwin(a) => {
            for w in g.neighbors(a) {
                edges.push((w, v));
            }
        }
    }
}

/// Random connected distance-hereditary graph, grown from one vertex by
/// pendant and twin additions; the construction sequence is returned so a
/// width-one certificate can be rebuilt independently.
pub fn random_distance_hereditary(rng: &mut impl Rng, n: usize) -> (Graph, Vec<DhStep>) {
    assert!(n >= 1);
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut steps = Vec::new();
    let mut g = Graph::edgeless([0]);
    for v in 1..n as Vertex {
        let anchor = rng.gen_range(0..v);
        let step = if g.degree(anchor) == 0 {
            // A false twin of an isolated vertex would disconnect.
            [DhStep::Pendant(anchor), DhStep::TrueTwin(anchor)][rng.gen_range(0..2)]
        } else {
            [DhStep::Pendant(anchor), DhStep::TrueTwin(anchor), DhStep::FalseTwin(anchor)]
                [rng.gen_range(0..3)]
        };
        apply_dh_step(&mut edges, &g, v, step);
        steps.push(step);
        g = Graph::new(0..=v, edges.clone()).expect("growth steps are simple");
    }
    (g, steps)
}

/// Replays a recorded construction sequence from a single vertex.
pub fn replay_dh_steps(steps: &[DhStep]) -> Graph {
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut g = Graph::edgeless([0]);
    for (i, &step) in steps.iter().enumerate() {
        let v = i as Vertex + 1;
        apply_dh_step(&mut edges, &g, v, step);
        g = Graph::new(0..=v, edges.clone()).expect("recorded steps are simple");
    }
    g
}

/// Random connected graph with a twin cover of at most `k` vertices:
/// cover vertices `0..k` form a path plus random chords, and the remaining
/// vertices form cliques whose members all see cover vertex 0 plus one
/// random cover subset.
pub fn random_twin_cover(rng: &mut impl Rng, k: usize, n: usize) -> Result<Graph> {
    if k < 1 || n < k + 1 {
        return Err(Error::domain(format!(
            "twin-cover construction needs k >= 1 and n >= k+1, got k={k}, n={n}"
        )));
    }
    let k = k as Vertex;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    for s in 1..k {
        edges.push((s - 1, s));
    }
    for a in 0..k {
        for b in (a + 1)..k {
            if rng.gen_bool(0.4) {
                edges.push((a, b));
            }
        }
    }
    let mut clique: Vec<Vertex> = Vec::new();
    let mut hood: Vec<Vertex> = Vec::new();
    let flush = |clique: &mut Vec<Vertex>, hood: &mut Vec<Vertex>, edges: &mut Vec<_>| {
        for i in 0..clique.len() {
            for j in (i + 1)..clique.len() {
                edges.push((clique[i], clique[j]));
            }
            for &s in hood.iter() {
                edges.push((s, clique[i]));
            }
        }
        clique.clear();
        hood.clear();
    };
    for v in k..n as Vertex {
        if clique.is_empty() || rng.gen_bool(0.4) {
            flush(&mut clique, &mut hood, &mut edges);
            hood.push(0);
            for s in 1..k {
                if rng.gen_bool(0.5) {
                    hood.push(s);
                }
            }
        }
        clique.push(v);
    }
    flush(&mut clique, &mut hood, &mut edges);
    Graph::new(0..n as Vertex, edges).map_err(|e| Error::domain(format!("construction bug: {e}")))
}

/// Random graph of treewidth at most `k` containing a `(k+1)`-clique bag:
/// sequential vertex addition onto existing `k`-cliques.
fn random_partial_k_tree(rng: &mut impl Rng, k: usize, n: usize) -> Vec<(Vertex, Vertex)> {
    debug_assert!(n >= k + 1);
    let mut edges = Vec::new();
    for a in 0..(k + 1) as Vertex {
        for b in (a + 1)..(k + 1) as Vertex {
            edges.push((a, b));
        }
    }
    // All k-subsets of the initial bag seed the clique list.
    let mut cliques: Vec<Vec<Vertex>> = (0..=k as Vertex)
        .map(|skip| (0..=k as Vertex).filter(|&x| x != skip).collect())
        .collect();
    for v in (k + 1) as Vertex..n as Vertex {
        let q = cliques[rng.gen_range(0..cliques.len())].clone();
        for &u in &q {
            edges.push((u, v));
        }
        for (i, _) in q.iter().enumerate() {
            let mut fresh = q.clone();
            fresh[i] = v;
            fresh.sort_unstable();
            cliques.push(fresh);
        }
    }
    edges
}

/// Random member of the glued class: a distance-hereditary part with a
/// split side `X` of size `k+1`, a treewidth-`k` part with a clique bag
/// `Y`, and random edges between `X` and `Y`.
pub fn random_glued(rng: &mut impl Rng, k: usize, n: usize) -> Result<Graph> {
    if k < 1 || n < 2 * k + 4 {
        return Err(Error::domain(format!(
            "glued construction needs k >= 1 and n >= 2k+4, got k={k}, n={n}"
        )));
    }
    let x_size = k + 1;
    // Distance-hereditary side: X plus a hub plus at least one more vertex.
    let spare = n - (x_size + 2) - (k + 1);
    let extra_dh = rng.gen_range(0..=spare);
    let a = x_size + 2 + extra_dh;
    let b = n - a;

    let hub = x_size as Vertex;
    let mut edges: Vec<(Vertex, Vertex)> = (0..x_size as Vertex).map(|x| (x, hub)).collect();
    let mut dh = Graph::new(0..=hub, edges.clone()).expect("star is simple");
    for v in (x_size + 1) as Vertex..a as Vertex {
        // Growth anchored outside X keeps (X, rest) a split.
        let anchor = rng.gen_range(x_size as Vertex..v);
        let step = if dh.degree(anchor) == 0 {
            DhStep::Pendant(anchor)
        } else {
            [DhStep::Pendant(anchor), DhStep::TrueTwin(anchor), DhStep::FalseTwin(anchor)]
                [rng.gen_range(0..3)]
        };
        apply_dh_step(&mut edges, &dh, v, step);
        dh = Graph::new(0..=v, edges.clone()).expect("growth steps are simple");
    }

    let offset = a as Vertex;
    for (u, v) in random_partial_k_tree(rng, k, b) {
        edges.push((u + offset, v + offset));
    }
    // Glue X to the first bag Y with at least one edge.
    let mut glued_any = false;
    for x in 0..x_size as Vertex {
        for y in offset..offset + (k + 1) as Vertex {
            if rng.gen_bool(0.4) {
                edges.push((x, y));
                glued_any = true;
            }
        }
    }
    if !glued_any {
        edges.push((0, offset));
    }
    Graph::new(0..n as Vertex, edges).map_err(|e| Error::domain(format!("construction bug: {e}")))
}

/// Random connected series-parallel graph (treewidth at most two), grown
/// by repeated edge subdivision and duplication from a single edge.
pub fn random_series_parallel(rng: &mut impl Rng, n: usize) -> Graph {
    assert!(n >= 2);
    let mut multi: Vec<(Vertex, Vertex)> = vec![(0, 1)];
    let mut vertices = 2 as Vertex;
    while (vertices as usize) < n {
        let i = rng.gen_range(0..multi.len());
        let (u, v) = multi[i];
        if rng.gen_bool(0.7) {
            multi[i] = (u, vertices);
            multi.push((vertices, v));
            vertices += 1;
        } else {
            multi.push((u, v));
        }
    }
    Graph::new(0..vertices, multi).expect("subdivision keeps the graph simple")
}

/// A generator family with a declared split-matching-width bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "family")]
pub enum KnownWidthFamily {
    Tree { n: usize },
    Cycle { n: usize },
    Clique { n: usize },
    DistanceHereditary { n: usize },
    TwinCover { k: usize, n: usize },
    Glued { k: usize, n: usize },
}

impl KnownWidthFamily {
    /// Declared upper bound on the split-matching width of every instance.
    pub fn width_bound(&self) -> usize {
        match *self {
            // Treewidth families are bounded by tw + 1.
            KnownWidthFamily::Tree { .. } => 2,
            KnownWidthFamily::Cycle { .. } => 3,
            KnownWidthFamily::Clique { n } => n.max(1),
            KnownWidthFamily::DistanceHereditary { .. } => 1,
            KnownWidthFamily::TwinCover { k, .. } => k.max(1),
            KnownWidthFamily::Glued { k, .. } => k + 1,
        }
    }

    /// Generates one instance; the same seed yields the same graph.
    pub fn generate(&self, seed: u64) -> Result<Graph> {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        match *self {
            KnownWidthFamily::Tree { n } => {
                if n < 1 {
                    return Err(Error::domain("a tree needs at least one vertex"));
                }
                Ok(random_tree(&mut rng, n))
            }
            KnownWidthFamily::Cycle { n } => {
                if n < 3 {
                    return Err(Error::domain("a cycle needs at least three vertices"));
                }
                Ok(crate::corpus::cycle_graph(n))
            }
            KnownWidthFamily::Clique { n } => {
                if n < 1 {
                    return Err(Error::domain("a clique needs at least one vertex"));
                }
                Ok(crate::corpus::complete_graph(n))
            }
            KnownWidthFamily::DistanceHereditary { n } => {
                if n < 1 {
                    return Err(Error::domain("need at least one vertex"));
                }
                Ok(random_distance_hereditary(&mut rng, n).0)
            }
            KnownWidthFamily::TwinCover { k, n } => random_twin_cover(&mut rng, k, n),
            KnownWidthFamily::Glued { k, n } => random_glued(&mut rng, k, n),
        }
    }
}
