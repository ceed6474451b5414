//! Minimum edge dominating sets via partial-subgraph certificates.
//!
//! A certificate on a vertex set `A` is the restriction of a prospective
//! edge dominating set to `A`: the subgraph formed by the chosen edges
//! inside `G[A]` together with the vertices that the finished solution
//! will touch.  A vertex kept without any incident chosen edge is
//! *isolated* in the certificate — a promise that some future edge across
//! the cut will use it.  A certificate is locally correct when every edge
//! of `G[A]` already has an endpoint among its vertices and every isolated
//! vertex can still reach the other side.
//!
//! Combining the two children of a node means choosing crossing edges
//! between the two certificates' vertex sets.  Only two things about that
//! choice matter to the rest of the graph: how many edges it spends, and
//! which isolated vertices it leaves for later.  Each join therefore keeps,
//! per certificate pair, one minimum crossing extension for every way of
//! postponing isolated vertices (grouped by neighborhood, since same-
//! neighborhood isolated vertices are interchangeable), plus the candidate
//! contact sets derived from the cut's vertex cover.  Trims then compress
//! the result: across a split, one cheapest certificate per (isolated
//! count, boundary count) signature; across a general cut, one cheapest
//! certificate per way of assigning the cut's vertex cover to the roles
//! "untouched", "touched now", and "touched later".
//!
//! Minimum crossing extensions reduce to a matching computation: a
//! smallest edge set spanning a vertex set `A` pairs up as many `A`
//! vertices as a maximum matching of `G[A]` allows and gives every
//! remaining vertex one private edge, so it has `|A| - |matching|` edges.

use std::collections::{BTreeMap, BTreeSet};

use petgraph::graph::{NodeIndex, UnGraph};

use crate::branch_dec::BranchDecomposition;
use crate::cuts::CutEvaluation;
use crate::dp::{solve_decision, NodeContext, ProblemDefinition, RunStats};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// Canonically ordered edge set: every pair satisfies `u < v`.
pub type EdgeSet = BTreeSet<(Vertex, Vertex)>;

fn ordered(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A subgraph of `G[domain]`: the restriction of a prospective edge
/// dominating set to `domain`.
///
/// `vertices` are the domain vertices the finished solution will touch;
/// `edges` are the solution edges chosen so far, all inside `G[domain]`
/// with both endpoints in `vertices`.  The derived order is the canonical
/// serialization used for deduplication and tie-breaking.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, serde::Serialize)]
pub struct SubgraphCertificate {
    /// The vertex set this certificate restricts to.
    pub domain: VertexSet,
    /// Domain vertices touched by the prospective solution.
    pub vertices: VertexSet,
    /// Solution edges chosen inside the domain, each stored `(min, max)`.
    pub edges: EdgeSet,
}

impl SubgraphCertificate {
    /// Builds a certificate, validating that it is a subgraph of
    /// `G[domain]`.
    pub fn new(
        g: &Graph,
        domain: VertexSet,
        vertices: VertexSet,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<SubgraphCertificate> {
        if !vertices.is_subset(&domain) {
            return Err(Error::domain(
                "certificate vertices must lie inside the domain",
            ));
        }
        let mut canonical = EdgeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::domain("certificate edges cannot be loops"));
            }
            let (u, v) = ordered(u, v);
            if !vertices.contains(u) || !vertices.contains(v) {
                return Err(Error::domain(
                    "certificate edges must join certificate vertices",
                ));
            }
            if !g.has_edge(u, v) {
                return Err(Error::domain("certificate edges must exist in the graph"));
            }
            canonical.insert((u, v));
        }
        Ok(SubgraphCertificate {
            domain,
            vertices,
            edges: canonical,
        })
    }

    /// Internal constructor for inputs already known to be canonical.
    fn assemble(domain: VertexSet, vertices: VertexSet, edges: EdgeSet) -> SubgraphCertificate {
        debug_assert!(vertices.is_subset(&domain));
        debug_assert!(edges
            .iter()
            .all(|&(u, v)| u < v && vertices.contains(u) && vertices.contains(v)));
        SubgraphCertificate {
            domain,
            vertices,
            edges,
        }
    }

    /// Certificate vertices incident with at least one certificate edge.
    pub fn covered(&self) -> VertexSet {
        self.edges.iter().flat_map(|&(u, v)| [u, v]).collect()
    }

    /// Certificate vertices still waiting for an incident solution edge.
    pub fn isolated(&self) -> VertexSet {
        self.vertices.difference(&self.covered())
    }

    /// Whether the certificate can still grow into a solution: every edge
    /// of `G[domain]` has an endpoint among the certificate vertices, and
    /// every isolated certificate vertex has a neighbor outside the
    /// domain to pick its promised edge from.
    pub fn is_locally_correct(&self, g: &Graph) -> bool {
        let covered_inside = g.edges().all(|(u, v)| {
            !(self.domain.contains(u) && self.domain.contains(v))
                || self.vertices.contains(u)
                || self.vertices.contains(v)
        });
        if !covered_inside {
            return false;
        }
        let outside = g.complement_set(&self.domain);
        self.isolated()
            .iter()
            .all(|v| g.neighbors(v).any(|u| outside.contains(u)))
    }

    /// Disjoint union with another certificate plus crossing edges.
    fn combine(
        &self,
        other: &SubgraphCertificate,
        domain: &VertexSet,
        crossing: &EdgeSet,
    ) -> SubgraphCertificate {
        let vertices = self.vertices.union(&other.vertices);
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().copied());
        edges.extend(crossing.iter().copied());
        SubgraphCertificate::assemble(domain.clone(), vertices, edges)
    }
}

/// Maximum matching of the subgraph induced on `within`, as normalized
/// vertex pairs.  Exact on general graphs, odd cycles included.
fn induced_maximum_matching(g: &Graph, within: &VertexSet) -> Vec<(Vertex, Vertex)> {
    let mut pg: UnGraph<Vertex, ()> = UnGraph::default();
    let mut index: BTreeMap<Vertex, NodeIndex> = BTreeMap::new();
    for v in within.iter() {
        index.insert(v, pg.add_node(v));
    }
    for (u, v) in g.edges() {
        if within.contains(u) && within.contains(v) {
            pg.add_edge(index[&u], index[&v], ());
        }
    }
    let matching = petgraph::algo::maximum_matching(&pg);
    matching.edges().map(|(a, b)| ordered(pg[a], pg[b])).collect()
}

/// A smallest subset of `g`'s edges whose endpoints cover every vertex of
/// `targets`, or `None` when some target is isolated in `g`.
///
/// A maximum matching of the subgraph induced on `targets` covers two
/// targets per edge; every unmatched target then borrows its smallest
/// neighbor, possibly outside `targets`.  Only induced edges can cover two
/// targets at once, so the result's size, `|targets| - |matching|`, is
/// minimum.
fn min_spanning_in(g: &Graph, targets: &VertexSet) -> Option<EdgeSet> {
    let mut picked = EdgeSet::new();
    let mut covered = VertexSet::new();
    for (u, v) in induced_maximum_matching(g, targets) {
        picked.insert((u, v));
        covered.insert(u);
        covered.insert(v);
    }
    for v in targets.iter() {
        if covered.contains(v) {
            continue;
        }
        let u = g.neighbors(v).next()?;
        picked.insert(ordered(u, v));
    }
    Some(picked)
}

/// A minimum-cardinality edge set of `g` spanning `a`, meaning every
/// vertex of `a` is an endpoint of some chosen edge.
///
/// The result has exactly `|a| - |maximum matching of G[a]|` edges.
/// Errors when some vertex of `a` is missing from the graph or has no
/// neighbor at all.
pub fn min_spanning_edge_set(g: &Graph, a: &VertexSet) -> Result<EdgeSet> {
    for v in a.iter() {
        if !g.contains_vertex(v) {
            return Err(Error::domain(format!(
                "vertex {v} is not in the graph, so no edge set can span it"
            )));
        }
    }
    min_spanning_in(g, a)
        .ok_or_else(|| Error::domain("no edge set can span an isolated vertex"))
}

/// The subgraph holding exactly the `g`-edges with one endpoint in `left`
/// and the other in `right`.
fn contact_graph(g: &Graph, left: &VertexSet, right: &VertexSet) -> Graph {
    debug_assert!(left.is_disjoint(right));
    let edges: Vec<(Vertex, Vertex)> = g
        .edges()
        .filter(|&(u, v)| {
            (left.contains(u) && right.contains(v)) || (right.contains(u) && left.contains(v))
        })
        .collect();
    Graph::new(left.union(right).iter(), edges)
        .expect("contact graphs reuse existing vertices and edges")
}

fn subsets(s: &VertexSet) -> Vec<VertexSet> {
    let items = s.to_vec();
    assert!(items.len() < usize::BITS as usize, "subset pool too large");
    (0..1usize << items.len())
        .map(|mask| {
            items
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect()
        })
        .collect()
}

/// Candidate contact sets for the two sides of a join: for each
/// certificate, which of its vertices the crossing edges added at this
/// node may touch.
///
/// Across a split, the cut graph is complete bipartite on its members, so
/// only the size of the contact set and how many isolated vertices it
/// swallows matter: the candidates are one greedy set per size, isolated
/// vertices first.  Across a general cut, crossing edges are pinned to the
/// cut's vertex cover: a candidate pairs a choice of covered own-side
/// cover vertices with all isolated vertices, kept when every isolated
/// vertex left unchosen can still be spanned through the cover vertices
/// reachable on the other side or beyond the join.
pub fn edsc_families(
    ctx: &NodeContext<'_>,
    g1: &SubgraphCertificate,
    g2: &SubgraphCertificate,
) -> (Vec<VertexSet>, Vec<VertexSet>) {
    let f1 = contact_family(ctx.graph, &ctx.left_cut, g1, g2);
    let f2 = contact_family(ctx.graph, &ctx.right_cut, g2, g1);
    (f1, f2)
}

fn contact_family(
    g: &Graph,
    own_cut: &CutEvaluation,
    own: &SubgraphCertificate,
    other: &SubgraphCertificate,
) -> Vec<VertexSet> {
    if own_cut.is_split {
        let isolated = own.isolated();
        let mut order: Vec<Vertex> = isolated.to_vec();
        order.extend(own.vertices.difference(&isolated).iter());
        return (0..=order.len())
            .map(|i| order[..i].iter().copied().collect())
            .collect();
    }
    let cover = &own_cut.cover;
    let own_pool = cover.intersection(&own.vertices);
    let sibling_pool = cover.intersection(&other.vertices);
    let elsewhere = cover.difference(&own_cut.side).difference(&other.domain);
    let reachable = sibling_pool.union(&elsewhere);
    let isolated = own.isolated();
    let mut family: BTreeSet<VertexSet> = BTreeSet::new();
    for picked in subsets(&own_pool) {
        let pending = isolated.difference(&picked);
        let feasible = pending
            .iter()
            .all(|v| g.neighbors(v).any(|u| reachable.contains(u)));
        if feasible {
            family.insert(picked.union(&isolated));
        }
    }
    family.into_iter().collect()
}

/// Ways of postponing isolated vertices to edges above this node: one
/// canonical subset per count of each neighborhood class.
///
/// Only vertices with a neighbor outside the joined domain can wait, and
/// isolated vertices with identical neighborhoods are interchangeable —
/// relabeling one for another maps completions to completions — so a
/// single representative per class count covers every choice.
fn deferral_choices(g: &Graph, outside: &VertexSet, isolated: &VertexSet) -> Vec<VertexSet> {
    let mut classes: BTreeMap<Vec<Vertex>, Vec<Vertex>> = BTreeMap::new();
    for v in isolated.iter() {
        let neighborhood: Vec<Vertex> = g.neighbors(v).collect();
        if !neighborhood.iter().any(|&u| outside.contains(u)) {
            continue;
        }
        classes.entry(neighborhood).or_default().push(v);
    }
    let mut choices = vec![VertexSet::new()];
    for members in classes.values() {
        let mut extended = Vec::with_capacity(choices.len() * (members.len() + 1));
        for base in &choices {
            for take in 0..=members.len() {
                let mut set = base.clone();
                for &v in &members[..take] {
                    set.insert(v);
                }
                extended.push(set);
            }
        }
        choices = extended;
    }
    choices
}

/// Joins the kept certificate sets of two sibling nodes.
///
/// Per certificate pair, two generators contribute candidates before the
/// node's trim compresses them.  The deferral generator adds one minimum
/// crossing extension for every way of postponing isolated vertices that
/// can still reach outside the joined domain; postponing everything yields
/// the bare union, so certificates that add no crossing edge survive
/// whenever they are locally correct.  The contact-set generator pairs the
/// two candidate contact families and adds a minimum crossing set spanning
/// each feasible pair; pairs whose contact sets cannot span each other are
/// skipped.  Certificates that already spend more than `t` edges can never
/// finish inside the budget and are dropped immediately.
pub fn join_eds(
    ctx: &NodeContext<'_>,
    s1: &[SubgraphCertificate],
    s2: &[SubgraphCertificate],
    t: usize,
) -> Result<Vec<SubgraphCertificate>> {
    let g = ctx.graph;
    for (certs, cut) in [(s1, &ctx.left_cut), (s2, &ctx.right_cut)] {
        for c in certs {
            if c.domain != cut.side {
                return Err(Error::invariant(
                    "joined certificates must cover exactly their child sides",
                ));
            }
        }
    }
    let domain = ctx.union().clone();
    let outside = ctx.outside();
    let mut gathered: BTreeSet<SubgraphCertificate> = BTreeSet::new();
    for g1 in s1 {
        for g2 in s2 {
            // Crossing graph edges need an endpoint among the certificate
            // vertices or no extension can ever dominate them.
            let joint = g1.vertices.union(&g2.vertices);
            let coverable = g.edges().all(|(u, v)| {
                let crosses = (g1.domain.contains(u) && g2.domain.contains(v))
                    || (g2.domain.contains(u) && g1.domain.contains(v));
                !crosses || joint.contains(u) || joint.contains(v)
            });
            if !coverable {
                continue;
            }
            let contact = contact_graph(g, &g1.vertices, &g2.vertices);
            let isolated = g1.isolated().union(&g2.isolated());
            for deferred in deferral_choices(g, &outside, &isolated) {
                let targets = isolated.difference(&deferred);
                let Some(extra) = min_spanning_in(&contact, &targets) else {
                    continue;
                };
                let cert = g1.combine(g2, &domain, &extra);
                if cert.edges.len() <= t {
                    gathered.insert(cert);
                }
            }
            let (f1, f2) = edsc_families(ctx, g1, g2);
            for x1 in &f1 {
                for x2 in &f2 {
                    let local = contact_graph(g, x1, x2);
                    let span = x1.union(x2);
                    let Some(extra) = min_spanning_in(&local, &span) else {
                        continue;
                    };
                    let cert = g1.combine(g2, &domain, &extra);
                    if cert.edges.len() <= t {
                        gathered.insert(cert);
                    }
                }
            }
        }
    }
    let gathered: Vec<SubgraphCertificate> = gathered.into_iter().collect();
    Ok(if ctx.parent_cut.is_split {
        trim_eds_split_keeping(ctx, &gathered, false)
    } else {
        trim_eds_nonsplit_keeping(ctx, &gathered, false)
    })
}

/// Trim across a split: drop locally incorrect certificates, then keep one
/// cheapest certificate per signature.
///
/// Inside a split side, crossing edges attach to boundary vertices
/// interchangeably, so all that distinguishes certificates with the same
/// edge budget is how many isolated vertices they still carry and how many
/// of their vertices touch the boundary.  One minimum-edge certificate per
/// such pair suffices, for at most `(n + 1)^2` kept certificates.
pub fn trim_eds_split(ctx: &NodeContext<'_>, s: &[SubgraphCertificate]) -> Vec<SubgraphCertificate> {
    trim_eds_split_keeping(ctx, s, false)
}

fn trim_eds_split_keeping(
    ctx: &NodeContext<'_>,
    s: &[SubgraphCertificate],
    keep_last: bool,
) -> Vec<SubgraphCertificate> {
    let g = ctx.graph;
    let boundary = g.neighborhood(&ctx.outside());
    let mut best: BTreeMap<(usize, usize), &SubgraphCertificate> = BTreeMap::new();
    for cert in s {
        if !cert.is_locally_correct(g) {
            continue;
        }
        let key = (
            cert.isolated().len(),
            cert.vertices.intersection(&boundary).len(),
        );
        let replace = match best.get(&key) {
            None => true,
            Some(held) => {
                cert.edges.len() < held.edges.len()
                    || (keep_last && cert.edges.len() == held.edges.len())
            }
        };
        if replace {
            best.insert(key, cert);
        }
    }
    let kept: BTreeSet<SubgraphCertificate> = best.into_values().cloned().collect();
    kept.into_iter().collect()
}

/// Trim across a general cut: drop locally incorrect certificates, then
/// keep one cheapest certificate per role assignment of the cut's vertex
/// cover.
///
/// Every future crossing edge touches the cover, so a certificate's fate
/// depends on which cover vertices it touches on its own side, which
/// outside cover vertices it will connect to, and which of those contacts
/// are postponed past this cut.  For each assignment the cheapest
/// certificate is scored by its own edges plus a minimum crossing set
/// spanning the promised contacts; unspannable assignments are skipped.
/// At most `3^|cover|` certificates survive.
pub fn trim_eds_nonsplit(
    ctx: &NodeContext<'_>,
    s: &[SubgraphCertificate],
) -> Vec<SubgraphCertificate> {
    trim_eds_nonsplit_keeping(ctx, s, false)
}

fn trim_eds_nonsplit_keeping(
    ctx: &NodeContext<'_>,
    s: &[SubgraphCertificate],
    keep_last: bool,
) -> Vec<SubgraphCertificate> {
    let g = ctx.graph;
    let side = &ctx.parent_cut.side;
    let cover = ctx.parent_cut.cover.to_vec();
    let cover_set = &ctx.parent_cut.cover;
    let correct: Vec<&SubgraphCertificate> =
        s.iter().filter(|c| c.is_locally_correct(g)).collect();
    let assignments = 3usize
        .checked_pow(cover.len() as u32)
        .expect("cut covers stay small enough to enumerate");
    let mut kept: BTreeSet<SubgraphCertificate> = BTreeSet::new();
    for code in 0..assignments {
        let mut selected = VertexSet::new();
        let mut postponed = VertexSet::new();
        let mut digits = code;
        for &v in &cover {
            match digits % 3 {
                0 => {}
                1 => {
                    selected.insert(v);
                }
                _ => {
                    selected.insert(v);
                    postponed.insert(v);
                }
            }
            digits /= 3;
        }
        let selected_inside = selected.intersection(side);
        let selected_outside = selected.difference(side);
        // An unselected outside cover vertex stays outside the final vertex
        // set, so every crossing edge it covers must instead be covered on
        // this side: all of its neighbors inside the cut must already be
        // certificate vertices.
        let demanded: VertexSet = cover
            .iter()
            .copied()
            .filter(|&v| !side.contains(v) && !selected_outside.contains(v))
            .collect();
        let mut best: Option<(usize, &SubgraphCertificate)> = None;
        for &cert in &correct {
            if cert.vertices.intersection(cover_set) != selected_inside {
                continue;
            }
            let covers_demanded = demanded.iter().all(|c| {
                g.neighbors(c)
                    .all(|x| !side.contains(x) || cert.vertices.contains(x))
            });
            if !covers_demanded {
                continue;
            }
            let contact = contact_graph(g, &cert.vertices, &selected_outside);
            let required = cert
                .isolated()
                .union(&selected_outside)
                .difference(&postponed);
            let Some(promised) = min_spanning_in(&contact, &required) else {
                continue;
            };
            let score = cert.edges.len() + promised.len();
            let replace = match best {
                None => true,
                Some((held, _)) => score < held || (keep_last && score == held),
            };
            if replace {
                best = Some((score, cert));
            }
        }
        if let Some((_, cert)) = best {
            kept.insert(cert.clone());
        }
    }
    kept.into_iter().collect()
}

/// Decision problem: does the graph have an edge dominating set of at
/// most `t` edges?
pub struct EdgeDomination {
    /// Maximum number of solution edges.
    pub t: usize,
}

impl ProblemDefinition for EdgeDomination {
    type Certificate = SubgraphCertificate;

    fn name(&self) -> &'static str {
        "edge-dominating-set"
    }

    fn initialize_leaf(&self, _g: &Graph, v: Vertex) -> Vec<SubgraphCertificate> {
        let domain = VertexSet::singleton(v);
        vec![
            SubgraphCertificate::assemble(domain.clone(), VertexSet::new(), EdgeSet::new()),
            SubgraphCertificate::assemble(domain.clone(), domain, EdgeSet::new()),
        ]
    }

    fn join(
        &self,
        ctx: &NodeContext<'_>,
        s1: &[SubgraphCertificate],
        s2: &[SubgraphCertificate],
    ) -> Result<Vec<SubgraphCertificate>> {
        join_eds(ctx, s1, s2, self.t)
    }

    fn verify(&self, g: &Graph, certificate: &SubgraphCertificate) -> bool {
        certificate.domain == g.vertices()
            && certificate.edges.len() <= self.t
            && certificate.isolated().is_empty()
            && g.edges().all(|(u, v)| {
                certificate
                    .edges
                    .iter()
                    .any(|&(a, b)| a == u || a == v || b == u || b == v)
            })
    }

    fn brute_conc(
        &self,
        g: &Graph,
        x: &SubgraphCertificate,
        y: &SubgraphCertificate,
    ) -> Vec<SubgraphCertificate> {
        let domain = x.domain.union(&y.domain);
        let crossing: Vec<(Vertex, Vertex)> = g
            .edges()
            .filter(|&(u, v)| {
                (x.vertices.contains(u) && y.vertices.contains(v))
                    || (y.vertices.contains(u) && x.vertices.contains(v))
            })
            .collect();
        assert!(crossing.len() < 32, "brute combination is for small cuts");
        let mut out = Vec::with_capacity(1 << crossing.len());
        for mask in 0..1u64 << crossing.len() {
            let chosen: EdgeSet = crossing
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            out.push(x.combine(y, &domain, &chosen));
        }
        out
    }

    fn all_certificates(&self, g: &Graph, x: &VertexSet) -> Vec<SubgraphCertificate> {
        let items = x.to_vec();
        assert!(items.len() < 16, "certificate enumeration is for small sets");
        let mut out = Vec::new();
        for vmask in 0..1u64 << items.len() {
            let vertices: VertexSet = items
                .iter()
                .enumerate()
                .filter(|&(i, _)| vmask >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect();
            let internal: Vec<(Vertex, Vertex)> = g
                .edges()
                .filter(|&(u, v)| vertices.contains(u) && vertices.contains(v))
                .collect();
            assert!(internal.len() < 32, "certificate enumeration is for small sets");
            for emask in 0..1u64 << internal.len() {
                let edges: EdgeSet = internal
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| emask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                out.push(SubgraphCertificate::assemble(
                    x.clone(),
                    vertices.clone(),
                    edges,
                ));
            }
        }
        out
    }

    fn certificate_fits(&self, g: &Graph, x: &VertexSet, certificate: &SubgraphCertificate) -> bool {
        certificate.domain == *x
            && certificate.vertices.is_subset(x)
            && certificate.edges.iter().all(|&(u, v)| {
                u < v
                    && certificate.vertices.contains(u)
                    && certificate.vertices.contains(v)
                    && g.has_edge(u, v)
            })
    }

    fn join_ceiling(&self, ctx: &NodeContext<'_>) -> Option<usize> {
        let n = ctx.graph.n();
        Some(if ctx.parent_cut.is_split {
            (n + 1).saturating_mul(n + 1)
        } else {
            3usize.saturating_pow(ctx.parent_cut.sm as u32)
        })
    }
}

/// A minimum edge dominating set together with traversal statistics.
#[derive(Debug, Clone, serde::Serialize)]
pub struct EdsSolution {
    /// Number of edges in a minimum edge dominating set.
    pub size: usize,
    /// The witnessing edge set, normalized and sorted.
    pub edges: Vec<(Vertex, Vertex)>,
    /// Statistics accumulated over all decision runs.
    pub stats: RunStats,
}

/// Computes a minimum edge dominating set by deciding budgets in
/// ascending order.
///
/// Any maximal matching is an edge dominating set, so the answer is at
/// most `n / 2` and the loop always terminates with a witness.
pub fn solve_eds(g: &Graph, bd: &BranchDecomposition) -> Result<EdsSolution> {
    if g.n() == 0 {
        return Err(Error::domain(
            "edge domination needs at least one vertex",
        ));
    }
    let mut stats = RunStats::default();
    for t in 0..=g.n() / 2 {
        let problem = EdgeDomination { t };
        let decision = solve_decision(&problem, g, bd)?;
        stats.joins += decision.stats.joins;
        stats.largest_set = stats.largest_set.max(decision.stats.largest_set);
        if decision.satisfied {
            let witness = decision
                .witness
                .expect("satisfied edge-domination decisions carry a witness");
            debug_assert_eq!(witness.edges.len(), t);
            return Ok(EdsSolution {
                size: witness.edges.len(),
                edges: witness.edges.iter().copied().collect(),
                stats,
            });
        }
    }
    Err(Error::invariant(
        "every graph has an edge dominating set no larger than a maximal matching",
    ))
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::branch_dec::root_decomposition;
    use crate::corpus;
    use crate::dp::{canonical_set, check_preserves, conc_sets};
    use crate::oracles::{self, brute_min_eds};
    use crate::pipeline::{compute_sm_decomposition, PipelineOptions};

    fn pipeline_bd(g: &Graph) -> BranchDecomposition {
        compute_sm_decomposition(g, &PipelineOptions::default())
            .unwrap()
            .decomposition
    }

    fn vset(vs: &[Vertex]) -> VertexSet {
        vs.iter().copied().collect()
    }

    fn eset(es: &[(Vertex, Vertex)]) -> EdgeSet {
        es.iter().map(|&(u, v)| ordered(u, v)).collect()
    }

    fn replay_joins(
        g: &Graph,
        bd: &BranchDecomposition,
        t: usize,
        mut visit: impl FnMut(
            &NodeContext<'_>,
            &[SubgraphCertificate],
            &[SubgraphCertificate],
            &[SubgraphCertificate],
        ),
    ) {
        let p = EdgeDomination { t };
        let rbd = root_decomposition(bd).unwrap();
        let mut sets: BTreeMap<usize, Vec<SubgraphCertificate>> = BTreeMap::new();
        for w in rbd.post_order() {
            if let Some(v) = rbd.leaf_vertex(w) {
                sets.insert(w, p.initialize_leaf(g, v));
                continue;
            }
            let ctx = NodeContext::new(g, &rbd, w).unwrap();
            let children = rbd.children(w);
            let s1 = sets[&children[0]].clone();
            let s2 = sets[&children[1]].clone();
            let mut joined = p.join(&ctx, &s1, &s2).unwrap();
            canonical_set(&mut joined);
            visit(&ctx, &s1, &s2, &joined);
            sets.insert(w, joined);
        }
    }

    /// Exhaustive maximum matching size of the subgraph induced on
    /// `within`, independent of the production matcher.
    fn brute_matching_size(g: &Graph, within: &VertexSet) -> usize {
        fn go(edges: &[(Vertex, Vertex)], taken: &mut VertexSet) -> usize {
            match edges.split_first() {
                None => 0,
                Some((&(u, v), rest)) => {
                    let mut best = go(rest, taken);
                    if !taken.contains(u) && !taken.contains(v) {
                        taken.insert(u);
                        taken.insert(v);
                        best = best.max(1 + go(rest, taken));
                        taken.remove(u);
                        taken.remove(v);
                    }
                    best
                }
            }
        }
        let edges: Vec<(Vertex, Vertex)> = g
            .edges()
            .filter(|&(u, v)| within.contains(u) && within.contains(v))
            .collect();
        go(&edges, &mut VertexSet::new())
    }

    fn spans(edges: &EdgeSet, targets: &VertexSet) -> bool {
        targets
            .iter()
            .all(|v| edges.iter().any(|&(a, b)| a == v || b == v))
    }

    #[test]
    fn spanning_sets_meet_the_size_law() {
        let star = corpus::k13();
        let picked = min_spanning_edge_set(&star, &vset(&[1, 2, 3])).unwrap();
        assert_eq!(picked.len(), 3);
        assert!(spans(&picked, &vset(&[1, 2, 3])));

        let path = corpus::path_graph(3);
        let picked = min_spanning_edge_set(&path, &path.vertices()).unwrap();
        assert_eq!(picked, eset(&[(0, 1), (1, 2)]));

        assert!(min_spanning_edge_set(&path, &VertexSet::new())
            .unwrap()
            .is_empty());

        let lonely = Graph::new([0, 1, 2], [(1, 2)]).unwrap();
        assert!(min_spanning_edge_set(&lonely, &vset(&[0])).is_err());

        let mut rng = ChaCha8Rng::seed_from_u64(431);
        for round in 0..80 {
            let n = 4 + round % 4;
            let g = oracles::random_graph(&mut rng, n, 0.5);
            let mut a = VertexSet::new();
            for v in g.vertex_iter() {
                if rng.gen_bool(0.5) {
                    a.insert(v);
                }
            }
            if a.iter().any(|v| g.degree(v) == 0) {
                assert!(min_spanning_edge_set(&g, &a).is_err());
                continue;
            }
            let picked = min_spanning_edge_set(&g, &a).unwrap();
            assert!(spans(&picked, &a), "{picked:?} misses {a} in {g:?}");
            assert_eq!(
                picked.len(),
                a.len() - brute_matching_size(&g, &a),
                "size law fails for {a} in {g:?}"
            );
        }
    }

    #[test]
    fn spanning_sets_are_exhaustively_minimal() {
        let mut rng = ChaCha8Rng::seed_from_u64(432);
        for _ in 0..12 {
            let g = oracles::random_connected_graph(&mut rng, 5, 0.6);
            let a = g.vertices();
            let picked = min_spanning_edge_set(&g, &a).unwrap();
            let edges: Vec<(Vertex, Vertex)> = g.edges().collect();
            for mask in 0..1u64 << edges.len() {
                if (mask.count_ones() as usize) >= picked.len() {
                    continue;
                }
                let subset: EdgeSet = edges
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                assert!(
                    !spans(&subset, &a),
                    "smaller spanning set {subset:?} exists in {g:?}"
                );
            }
        }
    }

    #[test]
    fn certificates_validate_their_shape() {
        let g = corpus::p4();
        let cert = SubgraphCertificate::new(
            &g,
            vset(&[0, 1, 2]),
            vset(&[1, 2]),
            [(2, 1)],
        )
        .unwrap();
        assert_eq!(cert.edges, eset(&[(1, 2)]));
        assert!(cert.isolated().is_empty());
        assert_eq!(cert.covered(), vset(&[1, 2]));

        // Vertices outside the domain, edges outside the vertex set, and
        // edges missing from the graph are all rejected.
        assert!(SubgraphCertificate::new(&g, vset(&[0, 1]), vset(&[2]), []).is_err());
        assert!(SubgraphCertificate::new(&g, vset(&[0, 1, 2]), vset(&[1]), [(1, 2)]).is_err());
        assert!(SubgraphCertificate::new(&g, vset(&[0, 1, 3]), vset(&[1, 3]), [(1, 3)]).is_err());
    }

    #[test]
    fn local_correctness_needs_coverage_and_outside_contact() {
        // Two triangles joined by a bridge; domain = first triangle.
        let g = corpus::tt();
        let domain = vset(&[0, 1, 2]);

        // Vertex 0 alone leaves edge 1-2 uncovered.
        let miss = SubgraphCertificate::new(&g, domain.clone(), vset(&[0]), []).unwrap();
        assert!(!miss.is_locally_correct(&g));

        // Vertices 0 and 1 cover all triangle edges but are isolated and
        // cannot reach the other side (only vertex 2 can).
        let stuck = SubgraphCertificate::new(&g, domain.clone(), vset(&[0, 1]), []).unwrap();
        assert!(!stuck.is_locally_correct(&g));

        // An edge at 1-2 covers the triangle and leaves nothing isolated.
        let good =
            SubgraphCertificate::new(&g, domain.clone(), vset(&[1, 2]), [(1, 2)]).unwrap();
        assert!(good.is_locally_correct(&g));

        // Isolated vertex 2 may wait: it sees the other triangle.
        let waiting = SubgraphCertificate::new(&g, domain, vset(&[0, 1, 2]), [(0, 1)]).unwrap();
        assert!(waiting.is_locally_correct(&g));
    }

    #[test]
    fn contact_families_stay_small_and_prefer_isolated_vertices() {
        let mut rng = ChaCha8Rng::seed_from_u64(433);
        let mut split_sides = 0;
        for round in 0..10 {
            let n = 5 + round % 2;
            let g = oracles::random_connected_graph(&mut rng, n, 0.5);
            let bd = pipeline_bd(&g);
            replay_joins(&g, &bd, 2, |ctx, s1, s2, _| {
                for g1 in s1 {
                    for g2 in s2 {
                        let (f1, f2) = edsc_families(ctx, g1, g2);
                        for (family, cut, own) in
                            [(&f1, &ctx.left_cut, g1), (&f2, &ctx.right_cut, g2)]
                        {
                            let bound = (1usize << cut.sm).max(g.n());
                            assert!(
                                family.len() <= bound,
                                "family of {} sets exceeds {bound}",
                                family.len()
                            );
                            for x in family {
                                assert!(x.is_subset(&own.vertices));
                            }
                            if cut.is_split {
                                split_sides += 1;
                                let isolated = own.isolated();
                                for (i, x) in family.iter().enumerate() {
                                    assert_eq!(x.len(), i);
                                    assert_eq!(
                                        x.intersection(&isolated).len(),
                                        i.min(isolated.len()),
                                        "size-{i} set must swallow isolated vertices first"
                                    );
                                }
                            }
                        }
                    }
                }
            });
        }
        assert!(split_sides > 0, "no split side was ever exercised");
    }

    #[test]
    fn joining_adjacent_leaves_keeps_the_connecting_edge() {
        let g = corpus::c4();
        let bd = BranchDecomposition::new(
            6,
            [(0, 1), (0, 4), (0, 5), (1, 2), (1, 3)],
            [(2, 0), (3, 1), (4, 2), (5, 3)],
        )
        .unwrap();
        let mut seen_pair = false;
        replay_joins(&g, &bd, 2, |ctx, _, _, joined| {
            if *ctx.union() == vset(&[0, 1]) {
                seen_pair = true;
                let edge = SubgraphCertificate::new(
                    &g,
                    vset(&[0, 1]),
                    vset(&[0, 1]),
                    [(0, 1)],
                )
                .unwrap();
                assert!(
                    joined.contains(&edge),
                    "join over adjacent leaves lost the connecting edge: {joined:?}"
                );
            }
        });
        assert!(seen_pair, "expected a join over the leaf pair {{0, 1}}");
    }

    #[test]
    fn trims_keep_one_minimizer_per_signature() {
        // Star with the split side {1, 2}: certificates collapse to their
        // (isolated, boundary) signature with minimum edges.
        let g = corpus::k13();
        let bd = BranchDecomposition::new(
            6,
            [(0, 1), (0, 4), (0, 5), (1, 2), (1, 3)],
            [(2, 1), (3, 2), (4, 0), (5, 3)],
        )
        .unwrap();
        let mut checked = false;
        replay_joins(&g, &bd, 2, |ctx, _, _, joined| {
            if *ctx.union() != vset(&[1, 2]) {
                return;
            }
            checked = true;
            assert!(ctx.parent_cut.is_split);
            let mut seen = BTreeSet::new();
            for cert in joined {
                assert!(cert.is_locally_correct(&g));
                let key = (
                    cert.isolated().len(),
                    cert.vertices
                        .intersection(&g.neighborhood(&ctx.outside()))
                        .len(),
                );
                assert!(seen.insert(key), "duplicate signature {key:?} kept");
            }
            // G[{1,2}] has no edges, so the kept certificates are exactly
            // the subsets of {1, 2} up to interchangeability, edge-free.
            assert!(joined.iter().all(|c| c.edges.is_empty()));
        });
        assert!(checked, "expected a join over the leaf pair {{1, 2}}");

        // At the root the cover is empty: a single best certificate with
        // no isolated vertices survives.
        let rbd = root_decomposition(&bd).unwrap();
        let root_ctx = NodeContext::new(&g, &rbd, rbd.root()).unwrap();
        assert!(!root_ctx.parent_cut.is_split);
        let full = g.vertices();
        let a = SubgraphCertificate::new(&g, full.clone(), vset(&[0, 1]), [(0, 1)]).unwrap();
        let b = SubgraphCertificate::new(
            &g,
            full.clone(),
            vset(&[0, 1, 2]),
            [(0, 1), (0, 2)],
        )
        .unwrap();
        let lonely =
            SubgraphCertificate::new(&g, full.clone(), vset(&[0, 1, 2]), [(0, 1)]).unwrap();
        let kept = trim_eds_nonsplit(&root_ctx, &[b, a.clone(), lonely]);
        assert_eq!(kept, vec![a], "root trim keeps the single cheapest cover");
    }

    #[test]
    fn solves_the_named_corpus() {
        let cases = [
            (corpus::k13(), 1),
            (corpus::c4(), 2),
            (corpus::c5(), 2),
            (corpus::p4(), 1),
            (corpus::tt(), 2),
            (corpus::path_graph(1), 0),
            (corpus::path_graph(2), 1),
            (corpus::cycle_graph(6), 2),
            (corpus::complete_graph(6), 3),
        ];
        for (g, expected) in cases {
            let solution = solve_eds(&g, &pipeline_bd(&g)).unwrap();
            assert_eq!(solution.size, expected, "eds size of {g:?}");
            assert_eq!(solution.edges.len(), expected);
            for &(u, v) in &solution.edges {
                assert!(g.has_edge(u, v), "witness edge {u}-{v} missing from {g:?}");
            }
            for (u, v) in g.edges() {
                assert!(
                    solution
                        .edges
                        .iter()
                        .any(|&(a, b)| a == u || a == v || b == u || b == v),
                    "edge {u}-{v} of {g:?} is not dominated"
                );
            }
        }
    }

    #[test]
    fn agrees_with_the_oracle_on_small_connected_classes() {
        for n in 1..=6 {
            for g in oracles::graph_classes(n, true).unwrap() {
                let expected = brute_min_eds(&g).unwrap();
                let solution = solve_eds(&g, &pipeline_bd(&g)).unwrap();
                assert_eq!(solution.size, expected, "eds size of {g:?}");
            }
        }
    }

    #[test]
    fn agrees_with_the_oracle_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(434);
        for round in 0..40 {
            let n = 4 + round % 4;
            let g = if round % 3 == 0 {
                oracles::random_graph(&mut rng, n, 0.4)
            } else {
                oracles::random_connected_graph(&mut rng, n, 0.5)
            };
            let expected = brute_min_eds(&g).unwrap();
            let solution = solve_eds(&g, &pipeline_bd(&g)).unwrap();
            assert_eq!(solution.size, expected, "eds size of {g:?}");
        }
    }

    #[test]
    fn joins_preserve_their_inputs_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(435);
        let mut joins = 0;
        for round in 0..10 {
            let n = 4 + round % 2;
            let g = oracles::random_connected_graph(&mut rng, n, 0.5);
            let bd = pipeline_bd(&g);
            for t in 1..=2 {
                let p = EdgeDomination { t };
                replay_joins(&g, &bd, t, |ctx, s1, s2, joined| {
                    let big = conc_sets(&p, &g, s1, s2);
                    check_preserves(&p, &g, ctx.union(), joined, &big).unwrap();
                    joins += 1;
                });
            }
        }
        assert!(joins >= 30, "only {joins} joins were checked");
    }

    #[test]
    fn representative_choice_within_the_trim_is_immaterial() {
        struct KeepLast {
            t: usize,
        }
        impl ProblemDefinition for KeepLast {
            type Certificate = SubgraphCertificate;
            fn name(&self) -> &'static str {
                "edge-dominating-set-keep-last"
            }
            fn initialize_leaf(&self, g: &Graph, v: Vertex) -> Vec<SubgraphCertificate> {
                EdgeDomination { t: self.t }.initialize_leaf(g, v)
            }
            fn join(
                &self,
                ctx: &NodeContext<'_>,
                s1: &[SubgraphCertificate],
                s2: &[SubgraphCertificate],
            ) -> Result<Vec<SubgraphCertificate>> {
                let g = ctx.graph;
                let domain = ctx.union().clone();
                let outside = ctx.outside();
                let mut gathered: BTreeSet<SubgraphCertificate> = BTreeSet::new();
                for g1 in s1 {
                    for g2 in s2 {
                        let contact = contact_graph(g, &g1.vertices, &g2.vertices);
                        let isolated = g1.isolated().union(&g2.isolated());
                        for deferred in deferral_choices(g, &outside, &isolated) {
                            let targets = isolated.difference(&deferred);
                            let Some(extra) = min_spanning_in(&contact, &targets) else {
                                continue;
                            };
                            let cert = g1.combine(g2, &domain, &extra);
                            if cert.edges.len() <= self.t {
                                gathered.insert(cert);
                            }
                        }
                        let (f1, f2) = edsc_families(ctx, g1, g2);
                        for x1 in &f1 {
                            for x2 in &f2 {
                                let local = contact_graph(g, x1, x2);
                                let span = x1.union(x2);
                                let Some(extra) = min_spanning_in(&local, &span) else {
                                    continue;
                                };
                                let cert = g1.combine(g2, &domain, &extra);
                                if cert.edges.len() <= self.t {
                                    gathered.insert(cert);
                                }
                            }
                        }
                    }
                }
                let gathered: Vec<SubgraphCertificate> = gathered.into_iter().collect();
                Ok(if ctx.parent_cut.is_split {
                    trim_eds_split_keeping(ctx, &gathered, true)
                } else {
                    trim_eds_nonsplit_keeping(ctx, &gathered, true)
                })
            }
            fn verify(&self, g: &Graph, c: &SubgraphCertificate) -> bool {
                EdgeDomination { t: self.t }.verify(g, c)
            }
            fn brute_conc(
                &self,
                g: &Graph,
                x: &SubgraphCertificate,
                y: &SubgraphCertificate,
            ) -> Vec<SubgraphCertificate> {
                EdgeDomination { t: self.t }.brute_conc(g, x, y)
            }
            fn all_certificates(&self, g: &Graph, x: &VertexSet) -> Vec<SubgraphCertificate> {
                EdgeDomination { t: self.t }.all_certificates(g, x)
            }
            fn certificate_fits(
                &self,
                g: &Graph,
                x: &VertexSet,
                c: &SubgraphCertificate,
            ) -> bool {
                EdgeDomination { t: self.t }.certificate_fits(g, x, c)
            }
            fn join_ceiling(&self, ctx: &NodeContext<'_>) -> Option<usize> {
                EdgeDomination { t: self.t }.join_ceiling(ctx)
            }
        }

        let mut graphs = vec![
            corpus::k13(),
            corpus::c5(),
            corpus::p4(),
            corpus::tt(),
        ];
        for n in 3..=5 {
            graphs.extend(oracles::graph_classes(n, true).unwrap());
        }
        let mut rng = ChaCha8Rng::seed_from_u64(436);
        for _ in 0..8 {
            graphs.push(oracles::random_connected_graph(&mut rng, 6, 0.5));
        }
        for g in graphs {
            let bd = pipeline_bd(&g);
            for t in 0..=g.n() / 2 {
                let first = solve_decision(&EdgeDomination { t }, &g, &bd).unwrap();
                let last = solve_decision(&KeepLast { t }, &g, &bd).unwrap();
                assert_eq!(
                    first.satisfied, last.satisfied,
                    "trim tie-break changed the t={t} answer on {g:?}"
                );
            }
        }
    }

    #[test]
    fn budget_zero_and_single_vertices_behave() {
        let single = corpus::path_graph(1);
        let solution = solve_eds(&single, &pipeline_bd(&single)).unwrap();
        assert_eq!(solution.size, 0);
        assert!(solution.edges.is_empty());

        let pair = corpus::path_graph(2);
        let decision =
            solve_decision(&EdgeDomination { t: 0 }, &pair, &pipeline_bd(&pair)).unwrap();
        assert!(!decision.satisfied, "one edge cannot be dominated for free");
    }
}
