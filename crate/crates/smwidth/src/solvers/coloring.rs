//! Chromatic-number decisions via bounded vertex partitions.
//!
//! A certificate on a vertex set `A` is a partition of `A` into at most
//! `t` color classes, recorded together with the budget `t` so that unused
//! empty classes stay implicit.  A certificate completes to a witness when
//! its classes can be paired one-to-one with the classes of a partition of
//! the complement so that every combined class is an independent set — a
//! perfect-matching condition on the class-compatibility graph, decided by
//! [`merge_partitions`].
//!
//! Joins exploit the structure of the child cuts:
//!
//! * when both child sides are splits, classes divide into those touching
//!   the side's boundary and those interior to it, and how a combination
//!   looks from outside depends only on how many classes of each kind were
//!   paired, so one canonical pairing per feasible interior-interior count
//!   is built;
//! * when neither side is a split, a minimum vertex cover of each child
//!   cut together separates the union from the rest of the graph, and only
//!   the partition a completion induces on that cover matters, so every
//!   at-most-`t` partition of the cover is merged through both children;
//! * with exactly one split side, cover partitions of the non-split side
//!   are combined with the split side once per subset of cover classes
//!   designated to pair with interior classes, then with the non-split
//!   side's certificate.
//!
//! Trimming keeps, across a split cut, a single certificate minimizing the
//! number of boundary-touching classes; across any other cut, one
//! mergeable certificate per at-most-`t` partition of a minimum vertex
//! cover of the crossing edges.  Deciding ascending budgets `t` yields the
//! chromatic number.

use std::collections::BTreeSet;

use crate::branch_dec::BranchDecomposition;
use crate::dp::{solve_decision, NodeContext, ProblemDefinition, RunStats};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// A partition of a ground set into at most `t` color classes.
///
/// Stored canonically: only the non-empty classes are kept, sorted, with
/// the budget `t` recorded so the implicit empty classes are recoverable.
/// The derived order doubles as the canonical certificate order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, serde::Serialize)]
pub struct TPartition {
    /// The vertex set being partitioned.
    pub ground: VertexSet,
    /// The non-empty classes: pairwise disjoint, sorted, union `ground`.
    pub parts: Vec<VertexSet>,
    /// Total class budget, implicit empty classes included.
    pub t: usize,
}

impl TPartition {
    /// Builds a partition after validating disjointness, coverage of the
    /// ground set, and the class budget.  Empty classes may be passed and
    /// are dropped from the stored representation.
    pub fn new(ground: VertexSet, parts: Vec<VertexSet>, t: usize) -> Result<TPartition> {
        let mut kept: Vec<VertexSet> = parts.into_iter().filter(|p| !p.is_empty()).collect();
        if kept.len() > t {
            return Err(Error::domain(format!(
                "{} non-empty classes exceed the class budget {t}",
                kept.len()
            )));
        }
        let mut union = VertexSet::new();
        let mut total = 0;
        for p in &kept {
            total += p.len();
            union = union.union(p);
        }
        if total != union.len() {
            return Err(Error::domain(
                "classes of a partition must be pairwise disjoint",
            ));
        }
        if union != ground {
            return Err(Error::domain(format!(
                "classes cover {union} but the ground set is {ground}"
            )));
        }
        kept.sort();
        Ok(TPartition {
            ground,
            parts: kept,
            t,
        })
    }

    /// Constructor for classes produced by a pairing, which form a
    /// partition by construction.
    fn assemble(ground: VertexSet, parts: Vec<VertexSet>, t: usize) -> TPartition {
        TPartition::new(ground, parts, t).expect("paired classes always form a partition")
    }

    /// All `t` classes, the implicit empty ones included, in canonical
    /// order with the empty classes last.
    fn padded(&self) -> Vec<VertexSet> {
        let mut all = self.parts.clone();
        all.resize(self.t, VertexSet::new());
        all
    }

    /// The partition induced on a subset of the ground set.
    pub fn restrict(&self, s: &VertexSet) -> TPartition {
        TPartition::assemble(
            self.ground.intersection(s),
            self.parts.iter().map(|p| p.intersection(s)).collect(),
            self.t,
        )
    }

    /// Whether every class is an independent set of `g`.
    pub fn all_independent(&self, g: &Graph) -> bool {
        self.parts.iter().all(|p| is_independent(g, p))
    }
}

/// Whether `s` spans no edge of `g`.
fn is_independent(g: &Graph, s: &VertexSet) -> bool {
    s.iter().all(|u| g.neighbors(u).all(|v| !s.contains(v)))
}

/// All partitions of `elements` into at most `max_blocks` non-empty
/// blocks.  Each element either joins an existing block or opens a new
/// one, so every partition is produced exactly once, blocks ordered by
/// first appearance.  The empty element list yields the single empty
/// partition.
pub fn set_partitions(elements: &[Vertex], max_blocks: usize) -> Vec<Vec<VertexSet>> {
    fn extend(
        elements: &[Vertex],
        idx: usize,
        max_blocks: usize,
        blocks: &mut Vec<VertexSet>,
        out: &mut Vec<Vec<VertexSet>>,
    ) {
        if idx == elements.len() {
            out.push(blocks.clone());
            return;
        }
        let v = elements[idx];
        for b in 0..blocks.len() {
            blocks[b].insert(v);
            extend(elements, idx + 1, max_blocks, blocks, out);
            blocks[b].remove(v);
        }
        if blocks.len() < max_blocks {
            blocks.push(VertexSet::singleton(v));
            extend(elements, idx + 1, max_blocks, blocks, out);
            blocks.pop();
        }
    }
    let mut out = Vec::new();
    extend(elements, 0, max_blocks, &mut Vec::new(), &mut out);
    out
}

/// A successful merge of two partitions: the class pairing (indices into
/// the two padded class lists, empty classes included) and the combined
/// partition.
#[derive(Debug, Clone)]
pub struct MergeWitness {
    /// One entry per class of the first partition: `(i, j)` pairs class
    /// `i` of the first padded list with class `j` of the second.
    pub pairing: Vec<(usize, usize)>,
    /// The combined partition over the union of the ground sets.
    pub merged: TPartition,
}

/// Pairs the classes of `p` and `q` one-to-one so that every combined
/// class is an independent set, if possible.
///
/// The ground sets may overlap: classes sharing a vertex are forced
/// together, and a class meeting two classes on the other side rules a
/// merge out.  The remaining classes are paired by an augmenting-path
/// matching on the compatibility graph; ascending index order makes the
/// returned pairing canonical.
pub fn merge_partitions(g: &Graph, p: &TPartition, q: &TPartition) -> Option<MergeWitness> {
    assert_eq!(p.t, q.t, "only partitions with the same class budget merge");
    let t = p.t;
    let pp = p.padded();
    let qq = q.padded();
    let (forced, forced_rev) = forced_pairs(&pp, &qq)?;
    let mut pair_of_p: Vec<Option<usize>> = vec![None; t];
    let mut pair_of_q: Vec<Option<usize>> = vec![None; t];
    for i in 0..t {
        if let Some(j) = forced[i] {
            if !is_independent(g, &pp[i].union(&qq[j])) {
                return None;
            }
            pair_of_p[i] = Some(j);
            pair_of_q[j] = Some(i);
        }
    }
    let open_q: Vec<usize> = (0..t).filter(|&j| forced_rev[j].is_none()).collect();
    let adj: Vec<Vec<usize>> = (0..t)
        .map(|i| {
            if forced[i].is_some() {
                Vec::new()
            } else {
                open_q
                    .iter()
                    .copied()
                    .filter(|&j| is_independent(g, &pp[i].union(&qq[j])))
                    .collect()
            }
        })
        .collect();
    for i in 0..t {
        if pair_of_p[i].is_none()
            && !augment(i, &adj, &mut vec![false; t], &mut pair_of_p, &mut pair_of_q)
        {
            return None;
        }
    }
    let pairing: Vec<(usize, usize)> = pair_of_p
        .iter()
        .enumerate()
        .map(|(i, j)| (i, j.expect("every class is paired")))
        .collect();
    let parts = pairing.iter().map(|&(i, j)| pp[i].union(&qq[j])).collect();
    let merged = TPartition::assemble(p.ground.union(&q.ground), parts, t);
    Some(MergeWitness { pairing, merged })
}

/// Partners forced by shared vertices: `forced[i] = Some(j)` when class
/// `i` of the first list meets class `j` of the second.  `None` overall
/// when some class meets two classes on the other side.
fn forced_pairs(
    pp: &[VertexSet],
    qq: &[VertexSet],
) -> Option<(Vec<Option<usize>>, Vec<Option<usize>>)> {
    let mut forced = vec![None; pp.len()];
    let mut forced_rev = vec![None; qq.len()];
    for (i, pi) in pp.iter().enumerate() {
        for (j, qj) in qq.iter().enumerate() {
            if pi.is_disjoint(qj) {
                continue;
            }
            if forced[i].is_some_and(|k| k != j) || forced_rev[j].is_some_and(|k| k != i) {
                return None;
            }
            forced[i] = Some(j);
            forced_rev[j] = Some(i);
        }
    }
    Some((forced, forced_rev))
}

/// One augmenting-path step of the matching search.  Forced pairs are
/// never displaced: forced classes carry no adjacency entries and their
/// partners are only reachable through them.
fn augment(
    i: usize,
    adj: &[Vec<usize>],
    seen: &mut Vec<bool>,
    pair_of_p: &mut Vec<Option<usize>>,
    pair_of_q: &mut Vec<Option<usize>>,
) -> bool {
    for &j in &adj[i] {
        if seen[j] {
            continue;
        }
        seen[j] = true;
        let free = match pair_of_q[j] {
            None => true,
            Some(i2) => augment(i2, adj, seen, pair_of_p, pair_of_q),
        };
        if free {
            pair_of_q[j] = Some(i);
            pair_of_p[i] = Some(j);
            return true;
        }
    }
    false
}

/// Splits the padded classes of `p` by whether they touch `boundary`,
/// keeping canonical order in both lists (implicit empty classes land at
/// the end of the interior list).
fn classify(p: &TPartition, boundary: &VertexSet) -> (Vec<VertexSet>, Vec<VertexSet>) {
    let mut touching = Vec::new();
    let mut interior = Vec::new();
    for part in p.padded() {
        if part.is_disjoint(boundary) {
            interior.push(part);
        } else {
            touching.push(part);
        }
    }
    (touching, interior)
}

/// Canonical merge of two split-side partitions in which exactly `z`
/// interior classes of one side pair with interior classes of the other.
///
/// On a split side every boundary class sees the whole outside
/// neighborhood and every interior class sees nothing, so classes of a
/// kind are interchangeable: fixing `z` fixes how many boundary classes
/// must pair with each other, and one representative pairing per feasible
/// `z` realizes every combination shape.
fn split_split_merge(
    g: &Graph,
    p1: &TPartition,
    p2: &TPartition,
    boundary1: &VertexSet,
    boundary2: &VertexSet,
    z: usize,
) -> Option<TPartition> {
    let t = p1.t;
    let (b1, f1) = classify(p1, boundary1);
    let (b2, f2) = classify(p2, boundary2);
    if z > f1.len().min(f2.len()) {
        return None;
    }
    // Exactly `z` interior-interior pairs force `w` boundary-boundary
    // pairs; every remaining class pairs across kinds.
    let w = (z + t).checked_sub(f1.len() + f2.len())?;
    if w > b1.len().min(b2.len()) {
        return None;
    }
    let mut parts: Vec<VertexSet> = Vec::with_capacity(t);
    for i in 0..w {
        parts.push(b1[i].union(&b2[i]));
    }
    for i in w..b1.len() {
        parts.push(b1[i].union(&f2[i - w]));
    }
    for i in w..b2.len() {
        parts.push(b2[i].union(&f1[i - w]));
    }
    let (used1, used2) = (b2.len() - w, b1.len() - w);
    debug_assert_eq!(f1.len() - used1, z, "interior classes left on side one");
    debug_assert_eq!(f2.len() - used2, z, "interior classes left on side two");
    for i in 0..z {
        parts.push(f1[used1 + i].union(&f2[used2 + i]));
    }
    if parts.iter().any(|part| !is_independent(g, part)) {
        return None;
    }
    Some(TPartition::assemble(p1.ground.union(&p2.ground), parts, t))
}

/// Merge of a cover partition `pc` with a split-side partition `ps` in
/// which the non-empty cover classes pairing with interior (boundary-free)
/// split classes are exactly those indexed by `chosen`.
///
/// Interior classes of a split side are interchangeable and so are its
/// boundary classes, so a first-fit assignment within each kind is
/// canonical.  Shared vertices (the cover may reach into the split side)
/// force pairs; a forced partner contains a cut vertex and is therefore
/// never interior, so it conflicts with membership in `chosen`.
fn contact_merge(
    g: &Graph,
    pc: &TPartition,
    ps: &TPartition,
    boundary_s: &VertexSet,
    chosen: &BTreeSet<usize>,
) -> Option<TPartition> {
    let t = pc.t;
    let cp = pc.padded();
    let sp = ps.padded();
    let (forced, forced_rev) = forced_pairs(&cp, &sp)?;
    let interior = |j: usize| sp[j].is_disjoint(boundary_s);
    let mut assignment: Vec<Option<usize>> = forced.clone();
    for (i, slot) in assignment.iter().enumerate() {
        if let Some(j) = *slot {
            if chosen.contains(&i) != interior(j) {
                return None;
            }
        }
    }
    let mut free_interior: Vec<usize> = (0..t)
        .filter(|&j| forced_rev[j].is_none() && interior(j))
        .collect();
    let mut free_boundary: Vec<usize> = (0..t)
        .filter(|&j| forced_rev[j].is_none() && !interior(j))
        .collect();
    // `pop` takes from the back, so reversing gives first-fit ascending.
    free_interior.reverse();
    free_boundary.reverse();
    for i in 0..pc.parts.len() {
        if assignment[i].is_some() {
            continue;
        }
        assignment[i] = Some(if chosen.contains(&i) {
            free_interior.pop()?
        } else {
            free_boundary.pop()?
        });
    }
    let mut rest: Vec<usize> = free_interior.into_iter().chain(free_boundary).collect();
    rest.sort_unstable();
    let mut rest = rest.into_iter();
    for slot in assignment.iter_mut().skip(pc.parts.len()) {
        if slot.is_none() {
            *slot = Some(rest.next().expect("as many classes as slots remain"));
        }
    }
    let parts: Vec<VertexSet> = assignment
        .iter()
        .enumerate()
        .map(|(i, j)| cp[i].union(&sp[j.expect("every class is assigned")]))
        .collect();
    if parts.iter().any(|part| !is_independent(g, part)) {
        return None;
    }
    Some(TPartition::assemble(pc.ground.union(&ps.ground), parts, t))
}

/// Every at-most-`t` partition of a vertex cover, carried as partitions
/// with class budget `t`.
fn partitions_of_cover(cover: &VertexSet, t: usize) -> Vec<TPartition> {
    let elems = cover.to_vec();
    set_partitions(&elems, t.min(elems.len()))
        .into_iter()
        .map(|blocks| TPartition::assemble(cover.clone(), blocks, t))
        .collect()
}

/// Trims a gathered certificate set down to what completions can
/// distinguish.  Certificates with a dependent class are dropped outright.
/// Across a split cut all certificates with the fewest boundary-touching
/// classes complete identically, so the first one in canonical order is
/// kept.  Across any other cut a minimum vertex cover `C` of the crossing
/// edges separates the side from the rest of the graph and completability
/// depends only on the partition induced on `C`, so the first certificate
/// mergeable with each at-most-`t` partition of `C` is kept.
pub fn trim_col(ctx: &NodeContext<'_>, t: usize, s: &[TPartition]) -> Vec<TPartition> {
    trim_col_keeping(ctx, t, s, false)
}

/// [`trim_col`] with a switchable tie-break: `keep_last` marks the last
/// eligible certificate instead of the first.  Decisions must not depend
/// on the choice; tests compare both.
fn trim_col_keeping(
    ctx: &NodeContext<'_>,
    t: usize,
    s: &[TPartition],
    keep_last: bool,
) -> Vec<TPartition> {
    let g = ctx.graph;
    let valid: Vec<&TPartition> = s.iter().filter(|p| p.all_independent(g)).collect();
    if valid.is_empty() {
        return Vec::new();
    }
    if ctx.parent_cut.is_split {
        let boundary = g.neighborhood(&ctx.outside());
        let count = |p: &TPartition| {
            p.parts
                .iter()
                .filter(|part| !part.is_disjoint(&boundary))
                .count()
        };
        let best = if keep_last {
            valid.iter().copied().rev().min_by_key(|p| count(p))
        } else {
            valid.iter().copied().min_by_key(|p| count(p))
        };
        return vec![best.expect("the valid set is non-empty").clone()];
    }
    let cover = ctx.parent_cut.cover.clone();
    let mut kept: BTreeSet<TPartition> = BTreeSet::new();
    for pc in partitions_of_cover(&cover, t) {
        let mergeable = |p: &&TPartition| merge_partitions(g, &pc, p).is_some();
        let marked = if keep_last {
            valid.iter().copied().rev().find(mergeable)
        } else {
            valid.iter().copied().find(mergeable)
        };
        if let Some(first) = marked {
            kept.insert(first.clone());
        }
    }
    kept.into_iter().collect()
}

/// Joins the kept sets of two children into the kept set of their parent,
/// gathering case-by-case over the child cut structure and trimming with
/// [`trim_col`].
pub fn join_col(
    ctx: &NodeContext<'_>,
    s1: &[TPartition],
    s2: &[TPartition],
    t: usize,
) -> Result<Vec<TPartition>> {
    join_col_keeping(ctx, s1, s2, t, false)
}

/// [`join_col`] with the trim tie-break switched; see
/// [`trim_col_keeping`].
fn join_col_keeping(
    ctx: &NodeContext<'_>,
    s1: &[TPartition],
    s2: &[TPartition],
    t: usize,
    keep_last: bool,
) -> Result<Vec<TPartition>> {
    let g = ctx.graph;
    for (set, side) in [(s1, ctx.left()), (s2, ctx.right())] {
        for p in set {
            if p.ground != *side || p.t != t {
                return Err(Error::invariant(format!(
                    "certificate over {} with budget {} joined at a node expecting {side} with budget {t}",
                    p.ground, p.t
                )));
            }
        }
    }
    let a = ctx.union();
    let mut gathered: BTreeSet<TPartition> = BTreeSet::new();
    match (ctx.left_cut.is_split, ctx.right_cut.is_split) {
        (true, true) => {
            let boundary1 = g.neighborhood(&g.complement_set(ctx.left()));
            let boundary2 = g.neighborhood(&g.complement_set(ctx.right()));
            for p1 in s1 {
                for p2 in s2 {
                    for z in 0..=t {
                        if let Some(m) =
                            split_split_merge(g, p1, p2, &boundary1, &boundary2, z)
                        {
                            gathered.insert(m);
                        }
                    }
                }
            }
        }
        (false, false) => {
            let cover = ctx.left_cut.cover.union(&ctx.right_cut.cover);
            let cover_partitions = partitions_of_cover(&cover, t);
            for p1 in s1 {
                for p2 in s2 {
                    for pc in &cover_partitions {
                        let Some(first) = merge_partitions(g, pc, p1) else {
                            continue;
                        };
                        if merge_partitions(g, pc, p2).is_none() {
                            continue;
                        }
                        let Some(both) = merge_partitions(g, &first.merged, p2) else {
                            continue;
                        };
                        gathered.insert(both.merged.restrict(a));
                    }
                }
            }
        }
        (split1, _) => {
            let (ss, sr, split_side, other_cut) = if split1 {
                (s1, s2, ctx.left(), &ctx.right_cut)
            } else {
                (s2, s1, ctx.right(), &ctx.left_cut)
            };
            let boundary_s = g.neighborhood(&g.complement_set(split_side));
            let cover_partitions = partitions_of_cover(&other_cut.cover, t);
            for ps in ss {
                for pr in sr {
                    for pc in &cover_partitions {
                        if merge_partitions(g, pc, pr).is_none() {
                            continue;
                        }
                        for mask in 0u64..(1 << pc.parts.len()) {
                            let chosen: BTreeSet<usize> = (0..pc.parts.len())
                                .filter(|&i| mask & (1 << i) != 0)
                                .collect();
                            let Some(pq) = contact_merge(g, pc, ps, &boundary_s, &chosen)
                            else {
                                continue;
                            };
                            let Some(full) = merge_partitions(g, &pq, pr) else {
                                continue;
                            };
                            gathered.insert(full.merged.restrict(a));
                        }
                    }
                }
            }
        }
    }
    let list: Vec<TPartition> = gathered.into_iter().collect();
    Ok(trim_col_keeping(ctx, t, &list, keep_last))
}

/// Decision problem: can the vertices be partitioned into at most `t`
/// independent classes?
#[derive(Debug, Clone, Copy)]
pub struct TColoring {
    /// The class budget.
    pub t: usize,
}

impl ProblemDefinition for TColoring {
    type Certificate = TPartition;

    fn name(&self) -> &'static str {
        "coloring"
    }

    fn initialize_leaf(&self, _g: &Graph, v: Vertex) -> Vec<TPartition> {
        if self.t == 0 {
            return Vec::new();
        }
        let ground = VertexSet::singleton(v);
        vec![TPartition::assemble(ground.clone(), vec![ground], self.t)]
    }

    fn join(
        &self,
        ctx: &NodeContext<'_>,
        s1: &[TPartition],
        s2: &[TPartition],
    ) -> Result<Vec<TPartition>> {
        join_col(ctx, s1, s2, self.t)
    }

    fn verify(&self, g: &Graph, c: &TPartition) -> bool {
        c.t == self.t && c.ground == g.vertices() && c.all_independent(g)
    }

    fn brute_conc(&self, _g: &Graph, x: &TPartition, y: &TPartition) -> Vec<TPartition> {
        assert_eq!(x.t, self.t);
        assert_eq!(y.t, self.t);
        let xp = x.padded();
        let yp = y.padded();
        let ground = x.ground.union(&y.ground);
        let mut out: BTreeSet<TPartition> = BTreeSet::new();
        let mut used = vec![false; self.t];
        let mut image = vec![0usize; self.t];
        all_pairings(&xp, &yp, &ground, 0, &mut used, &mut image, &mut out);
        out.into_iter().collect()
    }

    fn all_certificates(&self, _g: &Graph, x: &VertexSet) -> Vec<TPartition> {
        let elems = x.to_vec();
        set_partitions(&elems, self.t.min(elems.len()))
            .into_iter()
            .map(|blocks| TPartition::assemble(x.clone(), blocks, self.t))
            .collect()
    }

    fn certificate_fits(&self, _g: &Graph, x: &VertexSet, c: &TPartition) -> bool {
        if c.t != self.t || c.ground != *x || c.parts.len() > self.t {
            return false;
        }
        let mut total = 0;
        let mut union = VertexSet::new();
        for p in &c.parts {
            if p.is_empty() {
                return false;
            }
            total += p.len();
            union = union.union(p);
        }
        total == union.len() && union == *x
    }

    fn join_ceiling(&self, ctx: &NodeContext<'_>) -> Option<usize> {
        Some(self_power(ctx.parent_cut.sm))
    }
}

/// Recursively enumerates bijections between two padded class lists and
/// records every combined partition.  Identical classes on the second list
/// (all the implicit empties, for one) are used left to right, so repeated
/// images are skipped rather than re-derived.
fn all_pairings(
    xp: &[VertexSet],
    yp: &[VertexSet],
    ground: &VertexSet,
    i: usize,
    used: &mut Vec<bool>,
    image: &mut Vec<usize>,
    out: &mut BTreeSet<TPartition>,
) {
    let t = xp.len();
    if i == t {
        let parts = (0..t).map(|k| xp[k].union(&yp[image[k]])).collect();
        out.insert(TPartition::assemble(ground.clone(), parts, t));
        return;
    }
    for j in 0..t {
        if used[j] || (j > 0 && !used[j - 1] && yp[j - 1] == yp[j]) {
            continue;
        }
        used[j] = true;
        image[i] = j;
        all_pairings(xp, yp, ground, i + 1, used, image, out);
        used[j] = false;
    }
}

/// `k` to its own power, saturating, with `0^0 = 1` (the empty cover has
/// exactly one partition).
fn self_power(k: usize) -> usize {
    if k == 0 {
        return 1;
    }
    u32::try_from(k)
        .ok()
        .and_then(|e| k.checked_pow(e))
        .unwrap_or(usize::MAX)
}

/// Result of a chromatic run: the least feasible class count, a proper
/// coloring using exactly that many classes, and traversal statistics from
/// the successful pass.
#[derive(Debug, Clone, serde::Serialize)]
pub struct ChromaticSolution {
    pub chromatic_number: usize,
    pub coloring: Vec<VertexSet>,
    pub stats: RunStats,
}

/// Computes the chromatic number along `bd` by deciding `t`-colorability
/// for ascending budgets; `t = n` always succeeds, so the loop terminates.
pub fn solve_chromatic(g: &Graph, bd: &BranchDecomposition) -> Result<ChromaticSolution> {
    if g.n() == 0 {
        return Err(Error::domain("the empty graph has no coloring"));
    }
    for t in 1..=g.n() {
        let decision = solve_decision(&TColoring { t }, g, bd)?;
        if decision.satisfied {
            let witness = decision
                .witness
                .expect("a satisfied coloring run yields its witness");
            debug_assert_eq!(
                witness.parts.len(),
                t,
                "the first feasible budget is used in full"
            );
            return Ok(ChromaticSolution {
                chromatic_number: t,
                coloring: witness.parts,
                stats: decision.stats,
            });
        }
    }
    Err(Error::invariant("a graph with n vertices is n-colorable"))
}
