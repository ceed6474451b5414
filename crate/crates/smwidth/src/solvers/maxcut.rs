//! Cut-threshold decisions and maximum cuts along a branch decomposition.
//!
//! A certificate on a vertex set `A` is a subset of `A` together with its
//! cached cut value inside `G[A]`; combining certificates is plain union.
//! The join keeps few representatives per node:
//!
//! * when the node's cut `(A, Ā)` is a split, all crossing edges run
//!   between the two boundaries, so only the number of boundary vertices a
//!   subset grabs matters — one argmax per count, at most `n + 1` kept;
//! * otherwise the crossing edges have a minimum vertex cover `C` of size
//!   `mm(A)`.  A completion interacts with a subset `c ⊆ A` only through
//!   `c`'s trace on `C ∩ A` and through the edges from `A ∖ C` into
//!   `C ∩ Ā`, whose contribution is fixed once the completion's trace on
//!   `C ∩ Ā` is fixed.  So for every subset of `C` — its `A`-half a trace
//!   to match, its `Ā`-half an assumed completion trace — one argmax of
//!   the resulting cut value is kept, at most `2^mm(A)` in total.
//!
//! The maximum cut itself is read off the root set of a single traversal:
//! at the root the cover is empty, so exactly one certificate survives,
//! the one maximizing the full cut value.

use crate::branch_dec::BranchDecomposition;
use crate::dp::{
    solve_decision, subsets_of, NodeContext, ProblemDefinition, RunStats,
};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// A subset of a ground set with its cached internal cut value.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, serde::Serialize)]
pub struct CutCertificate {
    /// The vertex set this certificate lives on.
    pub domain: VertexSet,
    /// The chosen side of the cut, a subset of `domain`.
    pub subset: VertexSet,
    /// Number of edges of `G[domain]` with exactly one endpoint in
    /// `subset`; always equal to the recomputed value.
    pub best_internal: usize,
}

impl CutCertificate {
    fn new(g: &Graph, domain: VertexSet, subset: VertexSet) -> Self {
        let best_internal = internal_cut_value(g, &domain, &subset);
        CutCertificate {
            domain,
            subset,
            best_internal,
        }
    }
}

/// Number of edges of `G[domain]` crossing `(subset, domain ∖ subset)`.
fn internal_cut_value(g: &Graph, domain: &VertexSet, subset: &VertexSet) -> usize {
    subset
        .iter()
        .map(|u| {
            g.neighbors(u)
                .filter(|&v| domain.contains(v) && !subset.contains(v))
                .count()
        })
        .sum()
}

/// Decision problem: does the graph have a cut of size at least `t`?
#[derive(Debug, Clone, Copy)]
pub struct CutThreshold {
    pub t: usize,
}

impl ProblemDefinition for CutThreshold {
    type Certificate = CutCertificate;

    fn name(&self) -> &'static str {
        "maxcut"
    }

    fn initialize_leaf(&self, g: &Graph, v: Vertex) -> Vec<CutCertificate> {
        let domain = VertexSet::singleton(v);
        vec![
            CutCertificate::new(g, domain.clone(), VertexSet::new()),
            CutCertificate::new(g, domain.clone(), domain),
        ]
    }

    fn join(
        &self,
        ctx: &NodeContext<'_>,
        s1: &[CutCertificate],
        s2: &[CutCertificate],
    ) -> Result<Vec<CutCertificate>> {
        join_maxcut(ctx, s1, s2, self.t)
    }

    fn verify(&self, g: &Graph, c: &CutCertificate) -> bool {
        c.domain == g.vertices()
            && c.subset.is_subset(&c.domain)
            && c.best_internal == internal_cut_value(g, &c.domain, &c.subset)
            && c.best_internal >= self.t
    }

    fn brute_conc(
        &self,
        g: &Graph,
        x: &CutCertificate,
        y: &CutCertificate,
    ) -> Vec<CutCertificate> {
        debug_assert!(x.domain.is_disjoint(&y.domain), "combining needs disjoint domains");
        vec![CutCertificate::new(
            g,
            x.domain.union(&y.domain),
            x.subset.union(&y.subset),
        )]
    }

    fn all_certificates(&self, g: &Graph, x: &VertexSet) -> Vec<CutCertificate> {
        subsets_of(x)
            .into_iter()
            .map(|s| CutCertificate::new(g, x.clone(), s))
            .collect()
    }

    fn certificate_fits(&self, g: &Graph, x: &VertexSet, c: &CutCertificate) -> bool {
        c.domain == *x
            && c.subset.is_subset(x)
            && c.best_internal == internal_cut_value(g, &c.domain, &c.subset)
    }

    fn join_ceiling(&self, ctx: &NodeContext<'_>) -> Option<usize> {
        Some(if ctx.parent_cut.is_split {
            ctx.graph.n() + 1
        } else {
            1usize << ctx.parent_cut.mm
        })
    }
}

/// Joins two certificate sets at a node, keeping at most `n + 1`
/// certificates under a split cut and at most `2^mm(A)` otherwise.
/// `t` is carried by the enclosing decision but does not affect the
/// selection, only the final verification.
pub fn join_maxcut(
    ctx: &NodeContext<'_>,
    s1: &[CutCertificate],
    s2: &[CutCertificate],
    _t: usize,
) -> Result<Vec<CutCertificate>> {
    let g = ctx.graph;
    let a = ctx.union();

    // Edges between the two child sides, to extend cached values without
    // rescanning the whole induced subgraph per pair.
    let bridging: Vec<(Vertex, Vertex)> = ctx
        .left()
        .iter()
        .flat_map(|u| {
            g.neighbors(u)
                .filter(|&v| ctx.right().contains(v))
                .map(move |v| (u, v))
        })
        .collect();

    let mut combined = Vec::with_capacity(s1.len() * s2.len());
    for x in s1 {
        if x.domain != *ctx.left() {
            return Err(Error::invariant(format!(
                "certificate domain {} does not match the child side {}",
                x.domain,
                ctx.left()
            )));
        }
        for y in s2 {
            if y.domain != *ctx.right() {
                return Err(Error::invariant(format!(
                    "certificate domain {} does not match the child side {}",
                    y.domain,
                    ctx.right()
                )));
            }
            let crossing = bridging
                .iter()
                .filter(|&&(u, v)| x.subset.contains(u) != y.subset.contains(v))
                .count();
            combined.push(CutCertificate {
                domain: a.clone(),
                subset: x.subset.union(&y.subset),
                best_internal: x.best_internal + y.best_internal + crossing,
            });
        }
    }

    let kept = if ctx.parent_cut.is_split {
        // All crossing edges run between the two boundaries, so
        // completions only see how many boundary vertices the subset took.
        let boundary = g.neighborhood(&ctx.outside());
        let mut best: Vec<Option<&CutCertificate>> = vec![None; g.n() + 1];
        for c in &combined {
            let grabbed = boundary.intersection(&c.subset).len();
            let slot = &mut best[grabbed];
            let better = match slot {
                None => true,
                Some(cur) => {
                    c.best_internal > cur.best_internal
                        || (c.best_internal == cur.best_internal && c.subset < cur.subset)
                }
            };
            if better {
                *slot = Some(c);
            }
        }
        best.into_iter().flatten().cloned().collect()
    } else {
        // A completion z interacts with c through c's trace on the cover's
        // A-side and through the edges from A ∖ C into the cover's outside
        // half, whose count is fixed once z's trace there is fixed.  Keep
        // one argmax per cover subset: its A-half is the trace to match,
        // its outside half the assumed completion trace.
        let cover = &ctx.parent_cut.cover;
        let cover_inside = cover.intersection(a);
        let cover_outside = cover.difference(a);
        let uncovered_edges: Vec<(Vertex, Vertex)> = a
            .iter()
            .filter(|&u| !cover.contains(u))
            .flat_map(|u| {
                g.neighbors(u)
                    .filter(|&v| !a.contains(v))
                    .map(move |v| (u, v))
            })
            .collect();
        debug_assert!(
            uncovered_edges.iter().all(|&(_, v)| cover_outside.contains(v)),
            "edges not covered inside must be covered outside"
        );

        let mut kept: Vec<CutCertificate> = Vec::new();
        for picked in subsets_of(cover) {
            let want_inside = picked.intersection(&cover_inside);
            let assumed_outside = picked.intersection(&cover_outside);
            let mut best: Option<(usize, &CutCertificate)> = None;
            for c in &combined {
                if c.subset.intersection(&cover_inside) != want_inside {
                    continue;
                }
                let toward = uncovered_edges
                    .iter()
                    .filter(|&&(u, v)| c.subset.contains(u) != assumed_outside.contains(v))
                    .count();
                let value = c.best_internal + toward;
                let better = match best {
                    None => true,
                    Some((cur, cur_c)) => {
                        value > cur || (value == cur && c.subset < cur_c.subset)
                    }
                };
                if better {
                    best = Some((value, c));
                }
            }
            if let Some((_, c)) = best {
                kept.push(c.clone());
            }
        }
        kept
    };
    Ok(kept)
}

/// A maximum cut and how it was found.
#[derive(Debug, Clone, serde::Serialize)]
pub struct MaxCutSolution {
    /// Number of edges crossing the cut `(witness, rest)`.
    pub size: usize,
    /// One side of a maximum cut.
    pub witness: VertexSet,
    pub stats: RunStats,
}

/// Computes a maximum cut of `g` along `bd` in one traversal: the join
/// keeps value-maximal representatives, so the best certificate at the
/// root attains the maximum.  Threshold decisions for specific `t` go
/// through [`CutThreshold`] directly.
pub fn solve_maxcut(g: &Graph, bd: &BranchDecomposition) -> Result<MaxCutSolution> {
    let decision = solve_decision(&CutThreshold { t: 0 }, g, bd)?;
    let best = decision
        .root_certificates
        .iter()
        .max_by(|x, y| {
            x.best_internal
                .cmp(&y.best_internal)
                .then_with(|| y.subset.cmp(&x.subset))
        })
        .ok_or_else(|| Error::invariant("a zero-threshold run always keeps a certificate"))?;
    Ok(MaxCutSolution {
        size: best.best_internal,
        witness: best.subset.clone(),
        stats: decision.stats,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::branch_dec::root_decomposition;
    use crate::corpus;
    use crate::dp::{canonical_set, check_preserves, conc_sets, recursive_solve};
    use crate::oracles;
    use crate::pipeline::{compute_sm_decomposition, PipelineOptions};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::collections::BTreeMap;

    fn pipeline_bd(g: &Graph) -> BranchDecomposition {
        compute_sm_decomposition(g, &PipelineOptions::default())
            .unwrap()
            .decomposition
    }

    #[test]
    fn threshold_decision_on_an_edge() {
        let g = corpus::path_graph(2);
        let bd = pipeline_bd(&g);
        let rbd = root_decomposition(&bd).unwrap();
        let yes = recursive_solve(&rbd, &CutThreshold { t: 1 }, &g).unwrap();
        assert!(yes.satisfied);
        let witness = yes.witness.unwrap();
        assert_eq!(witness.subset, VertexSet::singleton(0));
        assert_eq!(witness.best_internal, 1);
        let no = recursive_solve(&rbd, &CutThreshold { t: 2 }, &g).unwrap();
        assert!(!no.satisfied);
    }

    #[test]
    fn maximum_cuts_of_the_named_corpus() {
        let cases: [(Graph, usize); 6] = [
            (corpus::c5(), 4),
            (corpus::k4(), 4),
            (corpus::p4(), 3),
            (corpus::c4(), 4),
            (corpus::k13(), 3),
            (corpus::tt(), 5),
        ];
        for (g, expected) in cases {
            let solution = solve_maxcut(&g, &pipeline_bd(&g)).unwrap();
            assert_eq!(solution.size, expected, "maximum cut of {g:?}");
            // The witness attains the reported size in the real graph.
            assert_eq!(
                internal_cut_value(&g, &g.vertices(), &solution.witness),
                expected
            );
        }
        let single = Graph::edgeless([3]);
        let solution =
            solve_maxcut(&single, &BranchDecomposition::single_leaf(3)).unwrap();
        assert_eq!(solution.size, 0);
    }

    /// Decomposition of C4 shaped so that one inner node gathers exactly
    /// the vertices 0 and 1.
    fn c4_with_pair_node() -> (Graph, BranchDecomposition) {
        let g = corpus::c4();
        let bd = BranchDecomposition::new(
            6,
            [(0, 1), (0, 4), (0, 5), (1, 2), (1, 3)],
            [(4, 0), (5, 1), (2, 2), (3, 3)],
        )
        .unwrap();
        (g, bd)
    }

    #[test]
    fn join_respects_the_cover_ceiling_on_c4() {
        let (g, bd) = c4_with_pair_node();
        let rbd = root_decomposition(&bd).unwrap();
        // Node 0 joins the two leaves carrying vertices 0 and 1; the cut
        // {0,1} of C4 is not a split and has a cover of size two.
        let ctx = NodeContext::new(&g, &rbd, 0).unwrap();
        assert_eq!(*ctx.union(), VertexSet::from([0, 1]));
        assert!(!ctx.parent_cut.is_split);
        assert_eq!(ctx.parent_cut.cover.len(), 2);

        let p = CutThreshold { t: 0 };
        let s1 = p.initialize_leaf(&g, 0);
        let s2 = p.initialize_leaf(&g, 1);
        let mut joined = join_maxcut(&ctx, &s1, &s2, 0).unwrap();
        canonical_set(&mut joined);
        assert!(joined.len() <= 4);

        let combined = conc_sets(&p, &g, &s1, &s2);
        assert!(check_preserves(&p, &g, ctx.union(), &joined, &combined).unwrap());
    }

    #[test]
    fn mixed_side_covers_preserve_witnesses() {
        // The cut {0,1,2} of this graph has boundary {0,1,2} but matching
        // value 2, so every minimum cover of its crossing edges takes the
        // outside vertex 3; a trim bucketing only on the inside trace
        // would lose the witness {0,1} against the completion {4}.
        let g = Graph::new(0..5, [(0, 3), (1, 3), (2, 4), (3, 4)]).unwrap();
        let side: VertexSet = [0, 1, 2].into();
        let eval = crate::cuts::evaluate_cut(&g, &side);
        assert!(!eval.is_split);
        assert!(eval.cover.iter().any(|v| !side.contains(v)));

        // A decomposition with a node gathering exactly {0,1,2}.
        let bd = BranchDecomposition::new(
            8,
            [(0, 1), (0, 4), (0, 2), (2, 5), (2, 6), (1, 3), (1, 7)],
            [(4, 0), (5, 1), (6, 2), (3, 3), (7, 4)],
        )
        .unwrap();
        let solution = solve_maxcut(&g, &bd).unwrap();
        assert_eq!(solution.size, oracles::brute_max_cut(&g).unwrap());

        // And the join at that node preserves the reference combination.
        let rbd = root_decomposition(&bd).unwrap();
        let target = (0..rbd.n_nodes())
            .find(|&w| !rbd.is_leaf(w) && *rbd.vertices_below(w) == side)
            .expect("the tree has a node gathering {0,1,2}");
        let ctx = NodeContext::new(&g, &rbd, target).unwrap();
        let p = CutThreshold { t: 4 };
        let child_sets: Vec<Vec<CutCertificate>> = rbd
            .children(target)
            .iter()
            .map(|&c| p.all_certificates(&g, rbd.vertices_below(c)))
            .collect();
        let mut joined = join_maxcut(&ctx, &child_sets[0], &child_sets[1], 4).unwrap();
        canonical_set(&mut joined);
        let combined = conc_sets(&p, &g, &child_sets[0], &child_sets[1]);
        assert!(check_preserves(&p, &g, &side, &joined, &combined).unwrap());
    }

    #[test]
    fn agrees_with_the_oracle_on_small_connected_classes() {
        for n in 1..=6 {
            for g in oracles::graph_classes(n, true).unwrap() {
                let expected = oracles::brute_max_cut(&g).unwrap();
                let solution = solve_maxcut(&g, &pipeline_bd(&g)).unwrap();
                assert_eq!(solution.size, expected, "maximum cut of {g:?}");
            }
        }
    }

    #[test]
    fn agrees_with_the_oracle_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(401);
        for round in 0..60 {
            let n = 4 + (round % 5);
            let g = oracles::random_graph(&mut rng, n, 0.5);
            let expected = oracles::brute_max_cut(&g).unwrap();
            let solution = solve_maxcut(&g, &pipeline_bd(&g)).unwrap();
            assert_eq!(solution.size, expected, "maximum cut of {g:?}");
        }
    }

    #[test]
    fn threshold_runs_match_the_single_pass() {
        let mut rng = ChaCha8Rng::seed_from_u64(402);
        for _ in 0..15 {
            let g = oracles::random_connected_graph(&mut rng, 6, 0.5);
            let bd = pipeline_bd(&g);
            let max = solve_maxcut(&g, &bd).unwrap().size;
            for t in 0..=max + 1 {
                let decision = solve_decision(&CutThreshold { t }, &g, &bd).unwrap();
                assert_eq!(decision.satisfied, t <= max, "threshold {t} on {g:?}");
            }
        }
    }

    #[test]
    fn joins_preserve_their_inputs_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(403);
        let mut checked = 0usize;
        for _ in 0..12 {
            let g = oracles::random_connected_graph(&mut rng, 6, 0.5);
            let max = oracles::brute_max_cut(&g).unwrap();
            for t in [max, max.saturating_sub(1)] {
                let p = CutThreshold { t };
                let rbd = root_decomposition(&pipeline_bd(&g)).unwrap();
                let mut kept: BTreeMap<usize, Vec<CutCertificate>> = BTreeMap::new();
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
                            "join at node {w} lost a completion on {g:?} at threshold {t}"
                        );
                        checked += 1;
                        joined
                    };
                    kept.insert(w, set);
                }
            }
        }
        assert!(checked >= 100, "checked only {checked} joins");
    }
}
