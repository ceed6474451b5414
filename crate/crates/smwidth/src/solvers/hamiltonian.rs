//! Hamiltonian-cycle decisions via systems of vertex-disjoint paths.
//!
//! A certificate on a vertex set `A` is the restriction of a prospective
//! Hamiltonian cycle to `G[A]`: vertex-disjoint paths covering `A`, where a
//! lone vertex counts as a length-zero path.  Only once `A` is the whole
//! vertex set may the certificate instead be the finished cycle.  Combining
//! two certificates means adding edges between path endpoints across the
//! two sides.
//!
//! What decides whether a system can still finish a cycle is, per path, the
//! unordered pair of outside-neighborhoods of its two endpoints — its
//! *class*.  Two systems whose paths match up class for class complete
//! identically, so each join keeps one representative per class multiset.
//! The join also exploits the structure of the child cuts:
//!
//! * when neither child side is a split, only endpoint-to-endpoint crossing
//!   edges can extend paths, and every degree-respecting subset is tried;
//! * when both sides are splits, all paths on a side are interchangeable,
//!   so for each feasible number of alternating chains one canonical
//!   chaining is built (plus the full cyclic closure at the root);
//! * when exactly one side is a split, at most `2 · |other side's paths|`
//!   of its interchangeable paths can touch new edges, so the endpoint pool
//!   is truncated to the paths with the smallest endpoints before subsets
//!   are tried.
//!
//! Kept systems are trimmed: a path with an endpoint that cannot reach the
//! complement can never be wired into a cycle, and no system needs more
//! paths than the cut's maximum matching, because a finished cycle leaves
//! every side along a matching of the crossing edges.

use std::collections::{BTreeMap, BTreeSet};

use crate::branch_dec::BranchDecomposition;
use crate::dp::{solve_decision, NodeContext, ProblemDefinition, RunStats};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// Vertex-disjoint paths covering a vertex set, or a finished cycle.
///
/// Stored canonically: every path runs from its smaller endpoint to its
/// larger one, paths are sorted, and a cycle starts at its smallest vertex
/// in the direction that compares smaller.  The derived order is therefore
/// a canonical serialization.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, serde::Serialize)]
pub struct PathSystem {
    /// The vertex set the system covers.
    pub domain: VertexSet,
    /// The paths, each a vertex sequence; a single vertex is a length-zero
    /// path.  Empty exactly when the system is a cycle.
    pub paths: Vec<Vec<Vertex>>,
    /// The cyclic vertex order when the system is a finished cycle over
    /// the whole graph.
    pub cycle: Option<Vec<Vertex>>,
}

impl PathSystem {
    /// Builds a path system, canonicalizing orientations and order.
    fn from_paths(domain: VertexSet, mut paths: Vec<Vec<Vertex>>) -> PathSystem {
        for path in &mut paths {
            if path.first() > path.last() {
                path.reverse();
            }
        }
        paths.sort_unstable();
        PathSystem {
            domain,
            paths,
            cycle: None,
        }
    }

    /// Builds a cycle system, canonicalizing rotation and direction.
    fn from_cycle(domain: VertexSet, cycle: Vec<Vertex>) -> PathSystem {
        PathSystem {
            domain,
            paths: Vec::new(),
            cycle: Some(canonical_cycle(cycle)),
        }
    }

    /// Number of paths; zero for a cycle.
    pub fn path_count(&self) -> usize {
        self.paths.len()
    }

    /// Whether the system is a finished cycle.
    pub fn is_cycle(&self) -> bool {
        self.cycle.is_some()
    }

    /// Every path endpoint, deduplicated and ascending; a length-zero path
    /// contributes its single vertex.
    fn endpoint_set(&self) -> VertexSet {
        self.paths
            .iter()
            .flat_map(|p| [*p.first().unwrap(), *p.last().unwrap()])
            .collect()
    }

    /// The edges of the system, each ordered with the smaller vertex
    /// first.
    fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for path in &self.paths {
            for w in path.windows(2) {
                out.push(ordered(w[0], w[1]));
            }
        }
        if let Some(cycle) = &self.cycle {
            for w in cycle.windows(2) {
                out.push(ordered(w[0], w[1]));
            }
            if cycle.len() >= 2 {
                out.push(ordered(cycle[cycle.len() - 1], cycle[0]));
            }
        }
        out
    }
}

fn ordered(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Rotates a cyclic vertex order to start at its smallest vertex, running
/// in whichever direction compares smaller.
fn canonical_cycle(cycle: Vec<Vertex>) -> Vec<Vertex> {
    let n = cycle.len();
    let min_pos = cycle
        .iter()
        .enumerate()
        .min_by_key(|(_, &v)| v)
        .map(|(i, _)| i)
        .unwrap();
    let forward: Vec<Vertex> = (0..n).map(|i| cycle[(min_pos + i) % n]).collect();
    let backward: Vec<Vertex> = (0..n).map(|i| cycle[(min_pos + n - i) % n]).collect();
    if forward <= backward {
        forward
    } else {
        backward
    }
}

/// The unordered pair of outside-neighborhoods at a path's two endpoints,
/// stored as sorted vertex lists with the smaller list first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PathClass {
    /// The lexicographically smaller neighborhood.
    pub low: Vec<Vertex>,
    /// The larger (or equal) neighborhood.
    pub high: Vec<Vertex>,
}

impl PathClass {
    fn new(a: Vec<Vertex>, b: Vec<Vertex>) -> PathClass {
        if a <= b {
            PathClass { low: a, high: b }
        } else {
            PathClass { low: b, high: a }
        }
    }

    /// Whether both endpoints can reach the complement.  A path failing
    /// this can never be wired into a cycle and is dropped by the join.
    pub fn touches_outside(&self) -> bool {
        // The empty list sorts first, so only `low` can be empty.
        !self.low.is_empty()
    }
}

/// The class of every path of `system`, sorted — the multiset two systems
/// must share to be interchangeable for every completion.
pub fn path_classes(g: &Graph, system: &PathSystem) -> Vec<PathClass> {
    let outside_neighbors = |v: Vertex| -> Vec<Vertex> {
        g.neighbors(v)
            .filter(|&w| !system.domain.contains(w))
            .collect()
    };
    let mut classes: Vec<PathClass> = system
        .paths
        .iter()
        .map(|p| {
            PathClass::new(
                outside_neighbors(*p.first().unwrap()),
                outside_neighbors(*p.last().unwrap()),
            )
        })
        .collect();
    classes.sort_unstable();
    classes
}

/// Reads a path system off an edge list over `domain`, or a full cycle
/// when `domain` is the whole vertex set.  Returns `None` when a vertex
/// exceeds degree two, or a cycle shows up that is not a single cycle
/// spanning the entire graph.
fn assemble(g: &Graph, domain: &VertexSet, edges: &[(Vertex, Vertex)]) -> Option<PathSystem> {
    let mut adjacency: BTreeMap<Vertex, Vec<Vertex>> =
        domain.iter().map(|v| (v, Vec::new())).collect();
    for &(u, v) in edges {
        debug_assert!(g.has_edge(u, v), "assembled edge {u}-{v} is not in the graph");
        adjacency.get_mut(&u)?.push(v);
        adjacency.get_mut(&v)?.push(u);
    }
    if adjacency.values().any(|nb| nb.len() > 2) {
        return None;
    }
    let mut visited: BTreeSet<Vertex> = BTreeSet::new();
    let mut paths: Vec<Vec<Vertex>> = Vec::new();
    for v in domain.iter() {
        if visited.contains(&v) || adjacency[&v].len() > 1 {
            continue;
        }
        // v has degree at most one: walk to the far end of its path.
        let mut path = vec![v];
        visited.insert(v);
        let mut prev = None;
        let mut cur = v;
        while let Some(next) = adjacency[&cur].iter().copied().find(|&w| Some(w) != prev) {
            visited.insert(next);
            path.push(next);
            prev = Some(cur);
            cur = next;
        }
        paths.push(path);
    }
    let leftover: Vec<Vertex> = domain.iter().filter(|v| !visited.contains(v)).collect();
    if leftover.is_empty() {
        return Some(PathSystem::from_paths(domain.clone(), paths));
    }
    // Every leftover vertex has degree two, so it lies on a cycle.  That is
    // only acceptable as one cycle through the entire graph.
    if *domain != g.vertices() || !paths.is_empty() {
        return None;
    }
    let start = leftover[0];
    let mut cycle = vec![start];
    let mut prev = None;
    let mut cur = start;
    loop {
        let next = adjacency[&cur]
            .iter()
            .copied()
            .find(|&w| Some(w) != prev)
            .expect("a degree-two vertex continues its cycle");
        if next == start {
            break;
        }
        cycle.push(next);
        prev = Some(cur);
        cur = next;
    }
    if cycle.len() != domain.len() || cycle.len() < 3 {
        return None;
    }
    Some(PathSystem::from_cycle(domain.clone(), cycle))
}

/// Every subset of `candidates` that, added on top of `base`, keeps all
/// degrees at most two, assembled into systems; branches die as soon as a
/// vertex runs out of capacity, and assembly rejects stray cycles.
fn extend_with_edge_subsets(
    g: &Graph,
    domain: &VertexSet,
    base: &[(Vertex, Vertex)],
    candidates: &[(Vertex, Vertex)],
) -> Vec<PathSystem> {
    let mut capacity: BTreeMap<Vertex, usize> = domain.iter().map(|v| (v, 2)).collect();
    for &(u, v) in base {
        *capacity.get_mut(&u).unwrap() -= 1;
        *capacity.get_mut(&v).unwrap() -= 1;
    }
    let mut chosen: Vec<(Vertex, Vertex)> = base.to_vec();
    let mut out = Vec::new();
    fn walk(
        g: &Graph,
        domain: &VertexSet,
        candidates: &[(Vertex, Vertex)],
        idx: usize,
        capacity: &mut BTreeMap<Vertex, usize>,
        chosen: &mut Vec<(Vertex, Vertex)>,
        out: &mut Vec<PathSystem>,
    ) {
        if idx == candidates.len() {
            out.extend(assemble(g, domain, chosen));
            return;
        }
        walk(g, domain, candidates, idx + 1, capacity, chosen, out);
        let (u, v) = candidates[idx];
        if capacity[&u] > 0 && capacity[&v] > 0 {
            *capacity.get_mut(&u).unwrap() -= 1;
            *capacity.get_mut(&v).unwrap() -= 1;
            chosen.push((u, v));
            walk(g, domain, candidates, idx + 1, capacity, chosen, out);
            chosen.pop();
            *capacity.get_mut(&u).unwrap() += 1;
            *capacity.get_mut(&v).unwrap() += 1;
        }
    }
    walk(g, domain, candidates, 0, &mut capacity, &mut chosen, &mut out);
    out
}

/// Crossing edges of `g` between the path endpoints of two systems,
/// ascending.
fn endpoint_crossing_edges(g: &Graph, a: &PathSystem, b: &PathSystem) -> Vec<(Vertex, Vertex)> {
    let ea = a.endpoint_set();
    let eb = b.endpoint_set();
    let mut out = Vec::new();
    for u in ea.iter() {
        for v in eb.iter() {
            if g.has_edge(u, v) {
                out.push((u, v));
            }
        }
    }
    out
}

/// Chains path chunks alternately, verifying every connecting edge, and
/// returns the merged vertex sequence.  `None` when a needed edge is
/// absent.
fn chain(g: &Graph, chunks: &[&[Vertex]]) -> Option<Vec<Vertex>> {
    let mut merged: Vec<Vertex> = chunks[0].to_vec();
    for chunk in &chunks[1..] {
        let tail = *merged.last().unwrap();
        let head = *chunk.first().unwrap();
        if !g.has_edge(tail, head) {
            return None;
        }
        merged.extend_from_slice(chunk);
    }
    Some(merged)
}

/// Canonical merge for the case where both child sides are splits: the
/// first `zp` paths of each side (ascending, hence smallest endpoints) are
/// chained alternately into `z` new paths, the rest carried over
/// unchanged.  `None` when a connecting edge is missing.
fn chain_merge(
    g: &Graph,
    domain: &VertexSet,
    g1: &PathSystem,
    g2: &PathSystem,
    zp: usize,
    z: usize,
) -> Option<PathSystem> {
    let mut paths: Vec<Vec<Vertex>> = Vec::new();
    paths.extend(g1.paths[zp..].iter().cloned());
    paths.extend(g2.paths[zp..].iter().cloned());
    // Split the zp chosen pairs into z contiguous groups, the earlier
    // groups one pair larger when zp is not a multiple of z.
    let base = zp / z;
    let extra = zp % z;
    let mut offset = 0;
    for group in 0..z {
        let size = base + usize::from(group < extra);
        let mut chunks: Vec<&[Vertex]> = Vec::with_capacity(2 * size);
        for i in offset..offset + size {
            chunks.push(&g1.paths[i]);
            chunks.push(&g2.paths[i]);
        }
        offset += size;
        paths.push(chain(g, &chunks)?);
    }
    Some(PathSystem::from_paths(domain.clone(), paths))
}

/// Canonical merge absorbing `d` pairs into a single chain that starts and
/// ends on the host side: `d + 1` host paths alternating with `d` guest
/// paths.  Even chains cannot reach this endpoint pattern — the chain's
/// two ends carry the host side's neighborhood — yet a completion may wire
/// both ends to the complement (through one shared vertex, for instance),
/// so these systems are kept alongside the even chains.  `None` when the
/// host has too few paths or a connecting edge is missing.
fn odd_chain_merge(
    g: &Graph,
    domain: &VertexSet,
    host: &PathSystem,
    guest: &PathSystem,
    d: usize,
) -> Option<PathSystem> {
    if host.path_count() <= d || guest.path_count() < d {
        return None;
    }
    let mut chunks: Vec<&[Vertex]> = Vec::with_capacity(2 * d + 1);
    for i in 0..d {
        chunks.push(&host.paths[i]);
        chunks.push(&guest.paths[i]);
    }
    chunks.push(&host.paths[d]);
    let mut paths: Vec<Vec<Vertex>> = Vec::new();
    paths.extend(host.paths[d + 1..].iter().cloned());
    paths.extend(guest.paths[d..].iter().cloned());
    paths.push(chain(g, &chunks)?);
    Some(PathSystem::from_paths(domain.clone(), paths))
}

/// Canonical cyclic closure for the case where both child sides are splits
/// and the node covers the whole graph: all paths of both sides chained
/// alternately and closed into one cycle.  `None` when an edge is missing
/// or the cycle would be shorter than three vertices.
fn chain_cycle(
    g: &Graph,
    domain: &VertexSet,
    g1: &PathSystem,
    g2: &PathSystem,
) -> Option<PathSystem> {
    debug_assert_eq!(g1.path_count(), g2.path_count());
    let mut chunks: Vec<&[Vertex]> = Vec::with_capacity(2 * g1.path_count());
    for i in 0..g1.path_count() {
        chunks.push(&g1.paths[i]);
        chunks.push(&g2.paths[i]);
    }
    let merged = chain(g, &chunks)?;
    if merged.len() < 3 || !g.has_edge(*merged.last().unwrap(), *merged.first().unwrap()) {
        return None;
    }
    Some(PathSystem::from_cycle(domain.clone(), merged))
}

/// Combines the kept path systems of two children into the kept systems of
/// their parent.
///
/// Every pair contributes its plain union.  Pairs within the matching
/// bounds of their cuts are then extended according to the split structure
/// of the child cuts, and the union of everything gathered is trimmed:
/// systems with a path that cannot reach the complement or with more paths
/// than the parent cut's maximum matching are dropped, and one
/// representative per class multiset survives (the canonically smallest,
/// or largest under `keep_last`, which tests use to confirm the choice of
/// representative is immaterial).
fn join_hc_keeping(
    ctx: &NodeContext<'_>,
    s1: &[PathSystem],
    s2: &[PathSystem],
    keep_last: bool,
) -> Result<Vec<PathSystem>> {
    let g = ctx.graph;
    let a1 = ctx.left();
    let a2 = ctx.right();
    let a = ctx.union();
    let full = *a == g.vertices();
    let split1 = ctx.left_cut.is_split;
    let split2 = ctx.right_cut.is_split;
    let mm1 = ctx.left_cut.mm;
    let mm2 = ctx.right_cut.mm;

    let mut gathered: BTreeSet<PathSystem> = BTreeSet::new();
    for g1 in s1 {
        if g1.domain != *a1 || g1.is_cycle() {
            return Err(Error::invariant(format!(
                "left input of the join at node {} is not a path system over {a1}",
                ctx.node
            )));
        }
        for g2 in s2 {
            if g2.domain != *a2 || g2.is_cycle() {
                return Err(Error::invariant(format!(
                    "right input of the join at node {} is not a path system over {a2}",
                    ctx.node
                )));
            }
            let mut base = g1.edges();
            base.extend(g2.edges());
            gathered.insert(
                assemble(g, a, &base)
                    .expect("the union of path systems over disjoint sets is a path system"),
            );
            // A finished cycle crosses each child cut along a matching, so
            // systems with more paths than that can only contribute their
            // union.
            if g1.path_count() > mm1 || g2.path_count() > mm2 {
                continue;
            }
            match (split1, split2) {
                (false, false) => {
                    let candidates = endpoint_crossing_edges(g, g1, g2);
                    gathered.extend(extend_with_edge_subsets(g, a, &base, &candidates));
                }
                (true, true) => {
                    // All paths on a split side are interchangeable, so
                    // only how many chains form and how many pairs they
                    // consume matters; one canonical chaining each.
                    let bound = g1.path_count().min(g2.path_count());
                    for zp in 1..=bound {
                        for z in 1..=zp {
                            gathered.extend(chain_merge(g, a, g1, g2, zp, z));
                        }
                        // One chain with both ends on the same side; the
                        // host is whichever side still has a path left
                        // over (the choice does not affect the class
                        // multiset, so one host suffices).
                        if g1.path_count() > zp {
                            gathered.extend(odd_chain_merge(g, a, g1, g2, zp));
                        } else if g2.path_count() > zp {
                            gathered.extend(odd_chain_merge(g, a, g2, g1, zp));
                        }
                    }
                    if full && g1.path_count() == g2.path_count() {
                        gathered.extend(chain_cycle(g, a, g1, g2));
                    }
                }
                _ => {
                    // Exactly one side is a split: its paths are
                    // interchangeable and at most 2·|other side's paths|
                    // of them can touch new edges, so the endpoint pool
                    // keeps only the paths with the smallest endpoints.
                    let (gs, gr) = if split1 { (g1, g2) } else { (g2, g1) };
                    let eligible: VertexSet = gs
                        .paths
                        .iter()
                        .take(2 * gr.path_count())
                        .flat_map(|p| [*p.first().unwrap(), *p.last().unwrap()])
                        .collect();
                    let mut candidates = Vec::new();
                    for u in eligible.iter() {
                        for v in gr.endpoint_set().iter() {
                            if g.has_edge(u, v) {
                                candidates.push(ordered(u, v));
                            }
                        }
                    }
                    candidates.sort_unstable();
                    gathered.extend(extend_with_edge_subsets(g, a, &base, &candidates));
                }
            }
        }
    }

    let mm_a = ctx.parent_cut.mm;
    let mut by_class: BTreeMap<(bool, Vec<PathClass>), PathSystem> = BTreeMap::new();
    for system in gathered {
        let key = if system.is_cycle() {
            (true, Vec::new())
        } else {
            let classes = path_classes(g, &system);
            if classes.iter().any(|c| !c.touches_outside()) {
                continue;
            }
            if system.path_count() > mm_a {
                continue;
            }
            (false, classes)
        };
        if keep_last {
            by_class.insert(key, system);
        } else {
            by_class.entry(key).or_insert(system);
        }
    }
    Ok(by_class.into_values().collect())
}

/// The join: see [`join_hc_keeping`]; keeps the canonically smallest
/// representative of every class multiset.
pub fn join_hc(
    ctx: &NodeContext<'_>,
    s1: &[PathSystem],
    s2: &[PathSystem],
) -> Result<Vec<PathSystem>> {
    join_hc_keeping(ctx, s1, s2, false)
}

fn valid_system(g: &Graph, x: &VertexSet, c: &PathSystem) -> bool {
    if c.domain != *x {
        return false;
    }
    if let Some(cycle) = &c.cycle {
        if !c.paths.is_empty()
            || *x != g.vertices()
            || cycle.len() != x.len()
            || cycle.len() < 3
        {
            return false;
        }
        let covered: VertexSet = cycle.iter().copied().collect();
        if covered != *x {
            return false;
        }
        return cycle.windows(2).all(|w| g.has_edge(w[0], w[1]))
            && g.has_edge(cycle[cycle.len() - 1], cycle[0]);
    }
    let mut covered = VertexSet::new();
    for path in &c.paths {
        if path.is_empty() {
            return false;
        }
        for &v in path {
            if !x.contains(v) || !covered.insert(v) {
                return false;
            }
        }
        if !path.windows(2).all(|w| g.has_edge(w[0], w[1])) {
            return false;
        }
    }
    covered == *x
}

/// 4 raised to `mm²`, saturating; with the additive `n` this caps how many
/// class multisets a join may keep.
fn class_multiset_bound(mm: usize) -> usize {
    let bits = mm.saturating_mul(mm).saturating_mul(2);
    if bits >= usize::BITS as usize - 1 {
        usize::MAX
    } else {
        1usize << bits
    }
}

/// Hamiltonian-cycle decisions over path-system certificates.
pub struct HamiltonianCycle;

impl ProblemDefinition for HamiltonianCycle {
    type Certificate = PathSystem;

    fn name(&self) -> &'static str {
        "hamiltonian-cycle"
    }

    fn initialize_leaf(&self, _g: &Graph, v: Vertex) -> Vec<PathSystem> {
        vec![PathSystem::from_paths(
            VertexSet::singleton(v),
            vec![vec![v]],
        )]
    }

    fn join(
        &self,
        ctx: &NodeContext<'_>,
        s1: &[PathSystem],
        s2: &[PathSystem],
    ) -> Result<Vec<PathSystem>> {
        join_hc(ctx, s1, s2)
    }

    fn verify(&self, g: &Graph, certificate: &PathSystem) -> bool {
        certificate.is_cycle() && valid_system(g, &g.vertices(), certificate)
    }

    fn brute_conc(&self, g: &Graph, x: &PathSystem, y: &PathSystem) -> Vec<PathSystem> {
        debug_assert!(x.domain.is_disjoint(&y.domain));
        let domain = x.domain.union(&y.domain);
        let mut base = x.edges();
        base.extend(y.edges());
        let candidates: Vec<(Vertex, Vertex)> = g
            .edges()
            .filter(|&(u, v)| {
                (x.domain.contains(u) && y.domain.contains(v))
                    || (y.domain.contains(u) && x.domain.contains(v))
            })
            .collect();
        extend_with_edge_subsets(g, &domain, &base, &candidates)
    }

    fn all_certificates(&self, g: &Graph, x: &VertexSet) -> Vec<PathSystem> {
        if x.is_empty() {
            return vec![PathSystem::from_paths(VertexSet::new(), Vec::new())];
        }
        let edges: Vec<(Vertex, Vertex)> = g
            .edges()
            .filter(|&(u, v)| x.contains(u) && x.contains(v))
            .collect();
        let mut out = extend_with_edge_subsets(g, x, &[], &edges);
        out.sort_unstable();
        out.dedup();
        out
    }

    fn certificate_fits(&self, g: &Graph, x: &VertexSet, certificate: &PathSystem) -> bool {
        valid_system(g, x, certificate)
    }

    fn join_ceiling(&self, ctx: &NodeContext<'_>) -> Option<usize> {
        Some(
            ctx.graph
                .n()
                .saturating_add(class_multiset_bound(ctx.parent_cut.mm)),
        )
    }
}

/// Outcome of a Hamiltonian-cycle run.
#[derive(Debug, Clone, serde::Serialize)]
pub struct HamiltonianSolution {
    /// Whether the graph has a Hamiltonian cycle.
    pub hamiltonian: bool,
    /// A witness cycle as a cyclic vertex order, when one exists.
    pub cycle: Option<Vec<Vertex>>,
    /// Traversal statistics.
    pub stats: RunStats,
}

/// Decides whether `g` has a Hamiltonian cycle along `bd` and extracts a
/// witness cycle when it does.
pub fn solve_hamiltonian(g: &Graph, bd: &BranchDecomposition) -> Result<HamiltonianSolution> {
    let decision = solve_decision(&HamiltonianCycle, g, bd)?;
    let cycle = decision.witness.as_ref().and_then(|w| w.cycle.clone());
    Ok(HamiltonianSolution {
        hamiltonian: decision.satisfied,
        cycle,
        stats: decision.stats,
    })
}
