//! Certificate-set dynamic programming over rooted branch decompositions.
//!
//! A decision problem plugs into the framework by saying what a certificate
//! on a vertex subset looks like, how single-vertex sets start, how the
//! certificate sets of two sibling subtrees combine at their parent, and
//! how a certificate spanning the whole graph is verified as a witness.
//! The bottom-up traversal then keeps at every tree node `w` a set that
//! *preserves* the full certificate set of the vertices below `w`: for
//! every dropped certificate some kept one completes to a witness against
//! every completion from the other side of the cut that the dropped one
//! would have.  At the root the kept set therefore contains a witness
//! exactly when the instance has one.
//!
//! Fast joins earn their keep by discarding aggressively, so the module
//! also ships the machinery to audit them: `brute_conc` gives the reference
//! combination semantics, `all_certificates` enumerates a full certificate
//! set, and [`check_preserves`] replays the preservation definition
//! literally.  Both reference routines are exponential and exist for small
//! differential tests, not for solving.

use std::collections::BTreeMap;
use std::fmt::Debug;

use crate::branch_dec::{root_decomposition, BranchDecomposition, RootedBranchDecomposition};
use crate::cuts::{evaluate_cut, CutEvaluation};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// Largest vertex count for which [`check_preserves`] will enumerate the
/// outside certificate set exhaustively.
pub const PRESERVE_CHECK_LIMIT: usize = 6;

/// A decision problem expressed through certificates on vertex subsets.
///
/// Implementations must keep three semantic promises, which the reference
/// routines make testable on small graphs:
///
/// * `brute_conc` is commutative, and associative at the set level;
/// * combining the full certificate sets of disjoint `X` and `Y` pairwise
///   with `brute_conc` yields exactly the full certificate set of `X ∪ Y`;
/// * when the instance is a yes-instance, some certificate on the whole
///   vertex set passes `verify`.
pub trait ProblemDefinition {
    /// A concrete solution fragment on a vertex subset.  The `Ord` order
    /// doubles as the canonical serialization used for deduplication and
    /// tie-breaking, so structurally equal certificates must compare equal.
    type Certificate: Clone + Ord + Debug;

    /// Short problem name used in diagnostics.
    fn name(&self) -> &'static str;

    /// The certificate set of a single vertex.
    fn initialize_leaf(&self, g: &Graph, v: Vertex) -> Vec<Self::Certificate>;

    /// Combines the kept sets of the two children of an inner node into
    /// the kept set of the node itself.  The inputs each preserve the full
    /// certificate set of their side; the output must preserve their
    /// pairwise combination.
    fn join(
        &self,
        ctx: &NodeContext<'_>,
        s1: &[Self::Certificate],
        s2: &[Self::Certificate],
    ) -> Result<Vec<Self::Certificate>>;

    /// Witness test on a certificate spanning the whole vertex set.  Runs
    /// in polynomial time.
    fn verify(&self, g: &Graph, certificate: &Self::Certificate) -> bool;

    /// Reference combination semantics: every certificate of the union
    /// that this pair can produce.  Exponential in general; used by tests
    /// and [`check_preserves`], never by the traversal itself.
    fn brute_conc(
        &self,
        g: &Graph,
        x: &Self::Certificate,
        y: &Self::Certificate,
    ) -> Vec<Self::Certificate>;

    /// Exhaustive enumeration of the certificate set of `x`.  Exponential;
    /// used by tests and [`check_preserves`], never by the traversal.
    fn all_certificates(&self, g: &Graph, x: &VertexSet) -> Vec<Self::Certificate>;

    /// Cheap shape test: could `certificate` belong to the certificate set
    /// of `x`?  The traversal asserts this for every certificate it keeps
    /// at any node and fails with an invariant error otherwise.
    fn certificate_fits(&self, g: &Graph, x: &VertexSet, certificate: &Self::Certificate) -> bool;

    /// Pinned ceiling on how many certificates a join may keep at this
    /// node, when the problem declares one.  The traversal fails with an
    /// invariant error if a deduplicated join output exceeds it.
    fn join_ceiling(&self, _ctx: &NodeContext<'_>) -> Option<usize> {
        None
    }
}

/// Everything a join may look at: the graph, the rooted decomposition, the
/// inner node being processed, and full cut evaluations for the vertex
/// sets below its two children and below the node itself.
#[derive(Debug, Clone)]
pub struct NodeContext<'a> {
    pub graph: &'a Graph,
    pub rbd: &'a RootedBranchDecomposition,
    pub node: usize,
    /// Cut at the first child; its `side` holds the vertices below it.
    pub left_cut: CutEvaluation,
    /// Cut at the second child.
    pub right_cut: CutEvaluation,
    /// Cut at the node itself; its `side` is the union of the child sides
    /// (the whole vertex set when `node` is the root).
    pub parent_cut: CutEvaluation,
}

impl<'a> NodeContext<'a> {
    /// Builds the context for an inner node of the rooted decomposition.
    pub fn new(g: &'a Graph, rbd: &'a RootedBranchDecomposition, node: usize) -> Result<Self> {
        let children = rbd.children(node);
        if children.len() != 2 {
            return Err(Error::domain(format!(
                "node {node} has {} children; joins happen at binary inner nodes",
                children.len()
            )));
        }
        let left = rbd.vertices_below(children[0]);
        let right = rbd.vertices_below(children[1]);
        if !left.is_disjoint(right) {
            return Err(Error::invariant(format!(
                "child vertex sets {left} and {right} of node {node} overlap"
            )));
        }
        let union = rbd.vertices_below(node);
        if *union != left.union(right) {
            return Err(Error::invariant(format!(
                "node {node} covers {union} but its children cover {} together",
                left.union(right)
            )));
        }
        Ok(NodeContext {
            graph: g,
            rbd,
            node,
            left_cut: evaluate_cut(g, left),
            right_cut: evaluate_cut(g, right),
            parent_cut: evaluate_cut(g, union),
        })
    }

    /// Vertices below the first child.
    pub fn left(&self) -> &VertexSet {
        &self.left_cut.side
    }

    /// Vertices below the second child.
    pub fn right(&self) -> &VertexSet {
        &self.right_cut.side
    }

    /// Vertices below the node: the disjoint union of the two child sides.
    pub fn union(&self) -> &VertexSet {
        &self.parent_cut.side
    }

    /// Vertices not yet gathered below the node.
    pub fn outside(&self) -> VertexSet {
        self.graph.complement_set(self.union())
    }
}

/// Outcome of one full traversal: the decision, one witness when the
/// answer is yes, the entire kept set at the root, and size statistics.
#[derive(Debug, Clone)]
pub struct Decision<C> {
    pub satisfied: bool,
    pub witness: Option<C>,
    /// The kept set at the root.  It preserves the full certificate set of
    /// the whole graph, so problems that rank certificates by a cached
    /// value can read their optimum from it directly.
    pub root_certificates: Vec<C>,
    pub stats: RunStats,
}

/// Size statistics of one traversal.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, serde::Serialize)]
pub struct RunStats {
    /// Number of inner-node joins performed.
    pub joins: usize,
    /// Largest certificate set kept at any node, after deduplication.
    pub largest_set: usize,
}

/// Sorts a certificate set into canonical order and drops duplicates.
pub fn canonical_set<C: Ord>(set: &mut Vec<C>) {
    set.sort_unstable();
    set.dedup();
}

/// Reference combination of two certificate sets: `brute_conc` over every
/// pair, canonicalized.  Exponential; for tests.
pub fn conc_sets<P: ProblemDefinition>(
    problem: &P,
    g: &Graph,
    s1: &[P::Certificate],
    s2: &[P::Certificate],
) -> Vec<P::Certificate> {
    let mut out = Vec::new();
    for x in s1 {
        for y in s2 {
            out.extend(problem.brute_conc(g, x, y));
        }
    }
    canonical_set(&mut out);
    out
}

/// All subsets of `set`, in ascending bitmask order over the ascending
/// member list: the empty set first, the full set last.
pub fn subsets_of(set: &VertexSet) -> Vec<VertexSet> {
    let members = set.to_vec();
    assert!(
        members.len() < 64,
        "subset enumeration over {} members would overflow",
        members.len()
    );
    (0u64..(1u64 << members.len()))
        .map(|mask| {
            members
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect()
        })
        .collect()
}

/// Runs the bottom-up traversal over a rooted decomposition of `g` and
/// verifies the root set.
///
/// Leaves start from `initialize_leaf`, every inner node joins the kept
/// sets of its two children, and the answer is yes exactly when some
/// certificate kept at the root verifies; that certificate is returned as
/// the witness.  Every kept set is canonicalized, shape-checked, and
/// measured against the problem's join ceiling.
pub fn recursive_solve<P: ProblemDefinition>(
    rbd: &RootedBranchDecomposition,
    problem: &P,
    g: &Graph,
) -> Result<Decision<P::Certificate>> {
    if *rbd.vertices_below(rbd.root()) != g.vertices() {
        return Err(Error::domain(format!(
            "decomposition leaves cover {} but the graph's vertices are {}",
            rbd.vertices_below(rbd.root()),
            g.vertices()
        )));
    }
    let mut kept: BTreeMap<usize, Vec<P::Certificate>> = BTreeMap::new();
    let mut stats = RunStats::default();
    for w in rbd.post_order() {
        let set = if rbd.is_leaf(w) {
            let v = rbd.leaf_vertex(w).expect("every leaf maps to a vertex");
            let mut set = problem.initialize_leaf(g, v);
            canonical_set(&mut set);
            set
        } else {
            let ctx = NodeContext::new(g, rbd, w)?;
            let s1 = kept
                .remove(&rbd.children(w)[0])
                .expect("children are processed before their parent");
            let s2 = kept
                .remove(&rbd.children(w)[1])
                .expect("children are processed before their parent");
            let mut set = problem.join(&ctx, &s1, &s2)?;
            canonical_set(&mut set);
            stats.joins += 1;
            if let Some(cap) = problem.join_ceiling(&ctx) {
                if set.len() > cap {
                    return Err(Error::invariant(format!(
                        "{} kept {} certificates at node {w}, above the pinned ceiling {cap}",
                        problem.name(),
                        set.len()
                    )));
                }
            }
            set
        };
        let below = rbd.vertices_below(w);
        if let Some(bad) = set.iter().find(|c| !problem.certificate_fits(g, below, c)) {
            return Err(Error::invariant(format!(
                "{} kept a certificate outside the shape of {below} at node {w}: {bad:?}",
                problem.name()
            )));
        }
        stats.largest_set = stats.largest_set.max(set.len());
        kept.insert(w, set);
    }
    let root_certificates = kept.remove(&rbd.root()).expect("the root is processed last");
    let witness = root_certificates
        .iter()
        .find(|c| problem.verify(g, c))
        .cloned();
    Ok(Decision {
        satisfied: witness.is_some(),
        witness,
        root_certificates,
        stats,
    })
}

/// Decides the problem on `g` along `bd`, rooting the decomposition first.
/// A one-vertex graph is decided directly from its leaf certificates,
/// since a single-leaf decomposition has no edge to root at.
pub fn solve_decision<P: ProblemDefinition>(
    problem: &P,
    g: &Graph,
    bd: &BranchDecomposition,
) -> Result<Decision<P::Certificate>> {
    if g.n() == 0 {
        return Err(Error::domain("the empty graph has no certificates"));
    }
    if bd.vertices() != g.vertices() {
        return Err(Error::domain(format!(
            "decomposition covers {} but the graph's vertices are {}",
            bd.vertices(),
            g.vertices()
        )));
    }
    if g.n() == 1 {
        let v = g.vertices().first().expect("one vertex");
        let mut set = problem.initialize_leaf(g, v);
        canonical_set(&mut set);
        let witness = set.iter().find(|c| problem.verify(g, c)).cloned();
        return Ok(Decision {
            satisfied: witness.is_some(),
            witness,
            root_certificates: set,
            stats: RunStats::default(),
        });
    }
    let rbd = root_decomposition(bd)?;
    recursive_solve(&rbd, problem, g)
}

/// Checks literally that `s_small` preserves `s_big` on the side `x`: for
/// every `y` in `s_big` and every certificate `z` on the complement of `x`
/// such that combining `y` with `z` yields a witness, some `x'` in
/// `s_small` combined with the same `z` also yields a witness.
///
/// Enumerates the complete outside certificate set, so it refuses graphs
/// with more than [`PRESERVE_CHECK_LIMIT`] vertices.
pub fn check_preserves<P: ProblemDefinition>(
    problem: &P,
    g: &Graph,
    x: &VertexSet,
    s_small: &[P::Certificate],
    s_big: &[P::Certificate],
) -> Result<bool> {
    if g.n() > PRESERVE_CHECK_LIMIT {
        return Err(Error::refusal(format!(
            "preservation checking enumerates every outside certificate and is limited to \
             {PRESERVE_CHECK_LIMIT} vertices, got {}",
            g.n()
        )));
    }
    if !x.is_subset(&g.vertices()) {
        return Err(Error::domain(format!(
            "side {x} is not a subset of the vertex set"
        )));
    }
    let outside = problem.all_certificates(g, &g.complement_set(x));
    for y in s_big {
        'next_completion: for z in &outside {
            if !completes_to_witness(problem, g, y, z) {
                continue;
            }
            for candidate in s_small {
                if completes_to_witness(problem, g, candidate, z) {
                    continue 'next_completion;
                }
            }
            return Ok(false);
        }
    }
    Ok(true)
}

fn completes_to_witness<P: ProblemDefinition>(
    problem: &P,
    g: &Graph,
    a: &P::Certificate,
    b: &P::Certificate,
) -> bool {
    problem
        .brute_conc(g, a, b)
        .iter()
        .any(|c| problem.verify(g, c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::branch_dec::{exact_branch_decomposition, heuristic_decomposition};
    use crate::corpus;
    use crate::cuts::CutFunction;
    use crate::oracles;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// Test problem: does the graph have an independent set with at least
    /// `t` vertices?  A certificate on `X` is an arbitrary subset of `X`
    /// and combining two certificates is plain union, so the reference
    /// semantics are easy to audit by hand.
    struct IndependentSet {
        t: usize,
        /// When set, the join keeps the smallest member of every
        /// neighborhood class instead of the largest: a deliberately lossy
        /// trim that preservation checking must catch.
        keep_smallest: bool,
        /// Forwarded as the declared join ceiling.
        ceiling: Option<usize>,
    }

    impl IndependentSet {
        fn new(t: usize) -> Self {
            IndependentSet {
                t,
                keep_smallest: false,
                ceiling: None,
            }
        }
    }

    fn is_independent(g: &Graph, s: &VertexSet) -> bool {
        s.iter().all(|u| g.neighbors(u).all(|v| !s.contains(v)))
    }

    impl ProblemDefinition for IndependentSet {
        type Certificate = VertexSet;

        fn name(&self) -> &'static str {
            "independent-set"
        }

        fn initialize_leaf(&self, _g: &Graph, v: Vertex) -> Vec<VertexSet> {
            vec![VertexSet::new(), VertexSet::singleton(v)]
        }

        fn join(
            &self,
            ctx: &NodeContext<'_>,
            s1: &[VertexSet],
            s2: &[VertexSet],
        ) -> Result<Vec<VertexSet>> {
            // Keep one largest independent union per open neighborhood
            // across the node's cut: a completion only interacts with the
            // neighborhood, and among equals a larger set is never worse.
            let g = ctx.graph;
            let outside = ctx.outside();
            let mut best: BTreeMap<VertexSet, VertexSet> = BTreeMap::new();
            for x in s1 {
                for y in s2 {
                    let u = x.union(y);
                    if !is_independent(g, &u) {
                        continue;
                    }
                    let boundary = g.neighborhood(&u).intersection(&outside);
                    let slot = best.entry(boundary).or_insert_with(|| u.clone());
                    let improves = if self.keep_smallest {
                        u.len() < slot.len()
                    } else {
                        u.len() > slot.len()
                    };
                    if improves || (u.len() == slot.len() && u < *slot) {
                        *slot = u;
                    }
                }
            }
            Ok(best.into_values().collect())
        }

        fn verify(&self, g: &Graph, c: &VertexSet) -> bool {
            is_independent(g, c) && c.len() >= self.t
        }

        fn brute_conc(&self, _g: &Graph, x: &VertexSet, y: &VertexSet) -> Vec<VertexSet> {
            vec![x.union(y)]
        }

        fn all_certificates(&self, _g: &Graph, x: &VertexSet) -> Vec<VertexSet> {
            subsets_of(x)
        }

        fn certificate_fits(&self, _g: &Graph, x: &VertexSet, c: &VertexSet) -> bool {
            c.is_subset(x)
        }

        fn join_ceiling(&self, _ctx: &NodeContext<'_>) -> Option<usize> {
            self.ceiling
        }
    }

    /// Minimal problem whose join leaks a vertex that is not below the
    /// node, to exercise the traversal's shape assertion.
    struct OutOfShape;

    impl ProblemDefinition for OutOfShape {
        type Certificate = VertexSet;

        fn name(&self) -> &'static str {
            "out-of-shape"
        }

        fn initialize_leaf(&self, _g: &Graph, _v: Vertex) -> Vec<VertexSet> {
            vec![VertexSet::new()]
        }

        fn join(
            &self,
            _ctx: &NodeContext<'_>,
            _s1: &[VertexSet],
            _s2: &[VertexSet],
        ) -> Result<Vec<VertexSet>> {
            Ok(vec![VertexSet::singleton(999)])
        }

        fn verify(&self, _g: &Graph, _c: &VertexSet) -> bool {
            false
        }

        fn brute_conc(&self, _g: &Graph, x: &VertexSet, y: &VertexSet) -> Vec<VertexSet> {
            vec![x.union(y)]
        }

        fn all_certificates(&self, _g: &Graph, x: &VertexSet) -> Vec<VertexSet> {
            subsets_of(x)
        }

        fn certificate_fits(&self, _g: &Graph, x: &VertexSet, c: &VertexSet) -> bool {
            c.is_subset(x)
        }
    }

    fn brute_independence_number(g: &Graph) -> usize {
        subsets_of(&g.vertices())
            .iter()
            .filter(|s| is_independent(g, s))
            .map(|s| s.len())
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn conc_laws_hold_for_the_test_problem() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let p = IndependentSet::new(2);
        for _ in 0..10 {
            let g = oracles::random_graph(&mut rng, 6, 0.5);
            let x: VertexSet = [0, 1].into();
            let y: VertexSet = [2, 3].into();
            let z: VertexSet = [4, 5].into();
            let certs_x = p.all_certificates(&g, &x);
            let certs_y = p.all_certificates(&g, &y);
            let certs_z = p.all_certificates(&g, &z);

            // Commutativity and set-level associativity.
            assert_eq!(
                conc_sets(&p, &g, &certs_x, &certs_y),
                conc_sets(&p, &g, &certs_y, &certs_x)
            );
            let xy_then_z = conc_sets(&p, &g, &conc_sets(&p, &g, &certs_x, &certs_y), &certs_z);
            let x_then_yz = conc_sets(&p, &g, &certs_x, &conc_sets(&p, &g, &certs_y, &certs_z));
            assert_eq!(xy_then_z, x_then_yz);

            // Combining full certificate sets of disjoint sides gives
            // exactly the full certificate set of the union.
            let mut expected = p.all_certificates(&g, &x.union(&y));
            canonical_set(&mut expected);
            assert_eq!(conc_sets(&p, &g, &certs_x, &certs_y), expected);
        }
    }

    #[test]
    fn recursive_solve_matches_exhaustive_search() {
        let named = [
            corpus::p4(),
            corpus::c4(),
            corpus::c5(),
            corpus::k4(),
            corpus::k13(),
            corpus::tt(),
        ];
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let random: Vec<Graph> = (0..20)
            .map(|_| oracles::random_connected_graph(&mut rng, 6, 0.4))
            .collect();
        for g in named.iter().chain(random.iter()) {
            let alpha = brute_independence_number(g);
            let (bd, _) = exact_branch_decomposition(g, CutFunction::Sm, 8).unwrap();
            let heuristic = heuristic_decomposition(g);
            for t in 0..=g.n() + 1 {
                for bd in [&bd, &heuristic] {
                    let decision = solve_decision(&IndependentSet::new(t), g, bd).unwrap();
                    assert_eq!(
                        decision.satisfied,
                        t <= alpha,
                        "independent set of size {t} on {g:?} (alpha {alpha})"
                    );
                    assert_eq!(decision.stats.joins, g.n() - 1);
                    match decision.witness {
                        Some(w) => {
                            assert!(is_independent(g, &w) && w.len() >= t);
                        }
                        None => assert!(!decision.satisfied),
                    }
                }
            }
        }
    }

    #[test]
    fn one_vertex_graphs_are_decided_from_the_leaf() {
        let g = Graph::edgeless([7]);
        let bd = BranchDecomposition::single_leaf(7);
        let yes = solve_decision(&IndependentSet::new(1), &g, &bd).unwrap();
        assert!(yes.satisfied);
        assert_eq!(yes.witness, Some(VertexSet::singleton(7)));
        assert_eq!(yes.stats.joins, 0);
        let no = solve_decision(&IndependentSet::new(2), &g, &bd).unwrap();
        assert!(!no.satisfied);
        assert!(no.witness.is_none());
    }

    #[test]
    fn the_root_set_preserves_the_full_certificate_set() {
        // On the whole vertex set the outside certificate set collapses to
        // the empty certificate, so preservation means: if any full
        // certificate verifies, a kept one does.
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..10 {
            let g = oracles::random_connected_graph(&mut rng, 5, 0.5);
            let p = IndependentSet::new(2);
            let bd = heuristic_decomposition(&g);
            let decision = solve_decision(&p, &g, &bd).unwrap();
            let everything = p.all_certificates(&g, &g.vertices());
            assert!(check_preserves(
                &p,
                &g,
                &g.vertices(),
                &decision.root_certificates,
                &everything
            )
            .unwrap());
        }
    }

    #[test]
    fn joins_preserve_their_inputs() {
        // Replay the traversal by hand and check every join's output
        // against the reference combination of its inputs.
        let mut rng = ChaCha8Rng::seed_from_u64(47);
        let p = IndependentSet::new(2);
        for _ in 0..15 {
            let g = oracles::random_connected_graph(&mut rng, 6, 0.45);
            let rbd = root_decomposition(&heuristic_decomposition(&g)).unwrap();
            let mut kept: BTreeMap<usize, Vec<VertexSet>> = BTreeMap::new();
            for w in rbd.post_order() {
                let set = if rbd.is_leaf(w) {
                    let mut s = p.initialize_leaf(&g, rbd.leaf_vertex(w).unwrap());
                    canonical_set(&mut s);
                    s
                } else {
                    let ctx = NodeContext::new(&g, &rbd, w).unwrap();
                    let s1 = kept.remove(&rbd.children(w)[0]).unwrap();
                    let s2 = kept.remove(&rbd.children(w)[1]).unwrap();
                    let combined = conc_sets(&p, &g, &s1, &s2);
                    let mut joined = p.join(&ctx, &s1, &s2).unwrap();
                    canonical_set(&mut joined);
                    assert!(
                        check_preserves(&p, &g, ctx.union(), &joined, &combined).unwrap(),
                        "join at node {w} lost a completion on {g:?}"
                    );
                    // Reflexivity: any set preserves itself.
                    assert!(check_preserves(&p, &g, ctx.union(), &combined, &combined).unwrap());
                    joined
                };
                kept.insert(w, set);
            }
        }
    }

    #[test]
    fn an_empty_set_does_not_preserve_an_important_certificate() {
        let g = corpus::p4();
        let p = IndependentSet::new(1);
        let x = VertexSet::singleton(0);
        // The singleton {0} completes to a witness (itself), so dropping
        // everything is not a preserving trim.
        let s_big = p.all_certificates(&g, &x);
        assert!(!check_preserves(&p, &g, &x, &[], &s_big).unwrap());
    }

    #[test]
    fn check_preserves_rejects_a_lossy_trim() {
        // On an edgeless pair every union has the same (empty) boundary,
        // so a smallest-representative trim keeps only the empty set and
        // loses the two-vertex witness.
        let g = Graph::edgeless([0, 1]);
        let p = IndependentSet::new(2);
        let x = VertexSet::singleton(0);
        let s_big = p.all_certificates(&g, &x);
        let s_small = vec![VertexSet::new()];
        assert!(!check_preserves(&p, &g, &x, &s_small, &s_big).unwrap());

        // The same loss, end to end: the broken trim answers no on a yes
        // instance.
        let lossy = IndependentSet {
            t: 2,
            keep_smallest: true,
            ceiling: None,
        };
        let bd = heuristic_decomposition(&g);
        assert!(!solve_decision(&lossy, &g, &bd).unwrap().satisfied);
        assert!(solve_decision(&IndependentSet::new(2), &g, &bd)
            .unwrap()
            .satisfied);
    }

    #[test]
    fn out_of_shape_joins_are_rejected() {
        let g = corpus::path_graph(2);
        let bd = heuristic_decomposition(&g);
        let err = solve_decision(&OutOfShape, &g, &bd).unwrap_err();
        assert!(matches!(err, Error::Invariant(_)));
        assert!(err.to_string().contains("shape"));
    }

    #[test]
    fn join_ceilings_are_enforced() {
        let g = corpus::path_graph(2);
        let bd = heuristic_decomposition(&g);
        let capped = IndependentSet {
            t: 1,
            keep_smallest: false,
            ceiling: Some(0),
        };
        let err = solve_decision(&capped, &g, &bd).unwrap_err();
        assert!(matches!(err, Error::Invariant(_)));
        assert!(err.to_string().contains("ceiling"));
    }

    #[test]
    fn oversized_and_mismatched_inputs_are_refused() {
        let p = IndependentSet::new(1);
        let big = corpus::path_graph(7);
        let err = check_preserves(&p, &big, &VertexSet::singleton(0), &[], &[]).unwrap_err();
        assert!(matches!(err, Error::Refusal(_)));

        let g = corpus::p4();
        let other = corpus::c5();
        let bd = heuristic_decomposition(&other);
        assert!(matches!(
            solve_decision(&p, &g, &bd),
            Err(Error::Domain(_))
        ));

        // Contexts exist only at binary inner nodes.
        let rbd = root_decomposition(&heuristic_decomposition(&g)).unwrap();
        let leaf = rbd
            .post_order()
            .into_iter()
            .find(|&w| rbd.is_leaf(w))
            .unwrap();
        assert!(matches!(
            NodeContext::new(&g, &rbd, leaf),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn subset_enumeration_is_complete() {
        let set: VertexSet = [1, 5, 9].into();
        let subsets = subsets_of(&set);
        assert_eq!(subsets.len(), 8);
        assert_eq!(subsets[0], VertexSet::new());
        assert_eq!(subsets[7], set);
        let distinct: std::collections::BTreeSet<_> = subsets.iter().cloned().collect();
        assert_eq!(distinct.len(), 8);
        assert_eq!(subsets_of(&VertexSet::new()).len(), 1);
    }
}
