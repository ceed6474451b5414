//! Bitmask-based cut evaluation for exhaustive width searches.
//!
//! The public [`crate::cuts`] routines return witness-carrying evaluations
//! built on ordered sets.  Decomposition searches only need the numeric cut
//! values, but they need them millions of times, so this module provides a
//! compact engine over dense `u32` vertex masks plus a memo table keyed by
//! mask.  A differential test checks the engine against the public route.

use crate::cuts::CutFunction;
use crate::graph::{Graph, Vertex};

/// Largest vertex count the mask representation supports.
pub(crate) const MASK_LIMIT: usize = 32;

/// A graph re-encoded over dense indices `0..n` with `u32` adjacency masks.
///
/// Index `i` corresponds to the `i`-th smallest vertex of the source graph.
pub(crate) struct CutEngine {
    n: usize,
    adj: Vec<u32>,
    connected: bool,
}

impl CutEngine {
    pub(crate) fn new(g: &Graph) -> CutEngine {
        let n = g.n();
        assert!(n <= MASK_LIMIT, "mask engine supports at most {MASK_LIMIT} vertices");
        let vertex_of: Vec<Vertex> = g.vertex_iter().collect();
        let mut adj = vec![0u32; n];
        for (i, &v) in vertex_of.iter().enumerate() {
            for w in g.neighbors(v) {
                let j = vertex_of.binary_search(&w).expect("neighbor is a vertex");
                adj[i] |= 1 << j;
            }
        }
        CutEngine { n, adj, connected: g.is_connected() }
    }

    pub(crate) fn full_mask(&self) -> u32 {
        if self.n == MASK_LIMIT {
            u32::MAX
        } else {
            (1u32 << self.n) - 1
        }
    }

    /// Maximum matching of the bipartite crossing graph between `side` and
    /// its complement, by augmenting paths from each side vertex in
    /// ascending index order.
    pub(crate) fn mm(&self, side: u32) -> usize {
        let other = self.full_mask() & !side;
        let mut match_of = [usize::MAX; MASK_LIMIT];
        let mut size = 0usize;
        let mut bits = side;
        while bits != 0 {
            let u = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let mut visited = 0u32;
            if self.augment(u, other, &mut visited, &mut match_of) {
                size += 1;
            }
        }
        size
    }

    fn augment(
        &self,
        u: usize,
        other: u32,
        visited: &mut u32,
        match_of: &mut [usize; MASK_LIMIT],
    ) -> bool {
        let mut cands = self.adj[u] & other & !*visited;
        while cands != 0 {
            let v = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            if *visited & (1 << v) != 0 {
                continue;
            }
            *visited |= 1 << v;
            if match_of[v] == usize::MAX || self.augment(match_of[v], other, visited, match_of) {
                match_of[v] = u;
                return true;
            }
        }
        false
    }

    /// Whether `(side, complement)` is a split: the underlying graph is
    /// connected, both sides have at least two vertices, and all boundary
    /// vertices of `side` share one neighborhood trace across the cut.
    pub(crate) fn is_split(&self, side: u32) -> bool {
        if !self.connected {
            return false;
        }
        let other = self.full_mask() & !side;
        if side.count_ones() < 2 || other.count_ones() < 2 {
            return false;
        }
        let mut trace = 0u32;
        let mut bits = side;
        while bits != 0 {
            let u = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let t = self.adj[u] & other;
            if t != 0 {
                if trace == 0 {
                    trace = t;
                } else if trace != t {
                    return false;
                }
            }
        }
        // A connected graph always has a crossing edge over a proper
        // nonempty side, so `trace` is nonzero here.
        trace != 0
    }

    pub(crate) fn sm(&self, side: u32) -> usize {
        if self.is_split(side) {
            1
        } else {
            self.mm(side)
        }
    }

    pub(crate) fn value(&self, f: CutFunction, side: u32) -> usize {
        match f {
            CutFunction::Mm => self.mm(side),
            CutFunction::Sm => self.sm(side),
        }
    }
}

/// Memoized cut values over all `2^n` side masks for one engine and one cut
/// function.  Values are symmetric under complement, so each computation
/// fills two table entries.
pub(crate) struct MemoCut<'a> {
    engine: &'a CutEngine,
    f: CutFunction,
    table: Vec<u8>,
}

const UNSET: u8 = u8::MAX;

impl<'a> MemoCut<'a> {
    pub(crate) fn new(engine: &'a CutEngine, f: CutFunction) -> MemoCut<'a> {
        assert!(engine.n <= 24, "memo table is sized for small graphs");
        MemoCut { engine, f, table: vec![UNSET; 1usize << engine.n] }
    }

    pub(crate) fn value(&mut self, side: u32) -> usize {
        let cached = self.table[side as usize];
        if cached != UNSET {
            return cached as usize;
        }
        let v = self.engine.value(self.f, side);
        debug_assert!(v < UNSET as usize);
        self.table[side as usize] = v as u8;
        self.table[(self.engine.full_mask() & !side) as usize] = v as u8;
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cuts::evaluate_cut;
    use crate::graph::VertexSet;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_graph(rng: &mut ChaCha8Rng, n: u32, p: f64) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(0..n, edges).unwrap()
    }

    /// Original vertex ids of a dense index mask, using the same ascending
    /// vertex order the engine is built on.
    fn set_of(g: &Graph, mask: u32) -> VertexSet {
        g.vertex_iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, v)| v)
            .collect()
    }

    #[test]
    fn engine_matches_the_public_route_on_every_cut() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xb17c);
        for case in 0..60 {
            let n = 1 + case % 9;
            let g = random_graph(&mut rng, n as u32, 0.4);
            let engine = CutEngine::new(&g);
            let mut memo = MemoCut::new(&engine, CutFunction::Sm);
            for mask in 0..(1u32 << n) {
                let side = set_of(&g, mask);
                let eval = evaluate_cut(&g, &side);
                assert_eq!(engine.mm(mask), eval.mm, "mm mismatch on {side} of {g:?}");
                assert_eq!(engine.is_split(mask), eval.is_split, "split mismatch on {side}");
                assert_eq!(engine.sm(mask), eval.sm, "sm mismatch on {side}");
                assert_eq!(memo.value(mask), eval.sm);
            }
        }
    }

    #[test]
    fn masks_index_sparse_vertex_ids_in_ascending_order() {
        let g = Graph::new([3, 7, 10, 20], [(3, 7), (7, 10), (10, 20)]).unwrap();
        let engine = CutEngine::new(&g);
        // Mask 0b1010 selects the second and fourth smallest ids, 7 and 20.
        assert_eq!(set_of(&g, 0b1010), VertexSet::from([7, 20]));
        assert_eq!(engine.mm(0b1010), 2);
        let eval = evaluate_cut(&g, &VertexSet::from([7, 20]));
        assert_eq!(eval.mm, 2);
    }
}
