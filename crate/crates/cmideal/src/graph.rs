//! Simple graphs on index vertices, induced subgraphs, chordless-cycle
//! detection, and the structural classifiers the decision procedures reduce to.
//!
//! Vertices are `0..n-1`. Edges are unordered pairs stored with the smaller
//! endpoint first, deduplicated and sorted, so two equal graphs compare equal
//! structurally.

use crate::bits::VertexSet;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<VertexSet>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Graph {
    /// Builds a graph from an edge list, normalizing pair order and dropping
    /// duplicates. Rejects loops and out-of-range endpoints.
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Graph> {
        if n > 32 {
            return Err(Error::LimitExceeded {
                what: "graph vertex count",
                limit: 32,
                got: n,
            });
        }
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(u, v) in edge_list {
            if u >= n {
                return Err(Error::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        edges.dedup();
        let mut adj = vec![VertexSet::EMPTY; n];
        for &(u, v) in &edges {
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { n, edges, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && u < self.n && v < self.n && self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Index of edge `{u,v}` in the sorted edge list.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    /// The induced subgraph on `w`, with vertices relabeled `0..|w|-1` by
    /// ascending original index. Returns the graph together with the map from
    /// new index to original vertex.
    pub fn induced(&self, w: VertexSet) -> Result<(Graph, Vec<usize>)> {
        if !w.is_subset_of(self.vertex_set()) {
            let v = w.difference(self.vertex_set()).min().unwrap();
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        let map: Vec<usize> = w.iter().collect();
        let mut back = vec![usize::MAX; self.n];
        for (new, &old) in map.iter().enumerate() {
            back[old] = new;
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if w.contains(u) && w.contains(v) {
                edges.push((back[u], back[v]));
            }
        }
        let g = Graph::new(map.len(), &edges)?;
        Ok((g, map))
    }

    /// Connected components as vertex sets, in order of their minimum vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::singleton(start);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for u in self.adj[v].difference(comp).iter() {
                    comp.insert(u);
                    stack.push(u);
                }
            }
            seen = seen.union(comp);
            out.push(comp);
        }
        out
    }

    /// All chordless (induced) cycles of length `>= min_len`, each reported
    /// once up to rotation and reflection as a vertex sequence starting at the
    /// cycle's minimum vertex.
    ///
    /// Search: depth-first extension of induced paths anchored at the cycle's
    /// minimum vertex. A candidate extension must avoid all earlier path
    /// vertices' neighborhoods; a vertex adjacent to the anchor can only close
    /// the cycle, never extend the path. The orientation with the smaller
    /// second vertex is kept.
    pub fn chordless_cycles(&self, min_len: usize) -> Result<Vec<Vec<usize>>> {
        if min_len < 3 {
            return Err(Error::LimitExceeded {
                what: "chordless cycle minimum length (lower bound)",
                limit: 3,
                got: min_len,
            });
        }
        let mut out = Vec::new();
        let mut path = Vec::new();
        for s in 0..self.n {
            path.clear();
            path.push(s);
            self.extend_cycle_search(s, &mut path, min_len, &mut out);
        }
        Ok(out)
    }

    fn extend_cycle_search(
        &self,
        anchor: usize,
        path: &mut Vec<usize>,
        min_len: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        let last = *path.last().unwrap();
        // forbidden: anything adjacent to an internal vertex (everything on
        // the path except the anchor and the current endpoint)
        let mut internal_nbrs = VertexSet::EMPTY;
        for &v in path.get(1..path.len() - 1).unwrap_or(&[]) {
            internal_nbrs = internal_nbrs.union(self.adj[v]);
        }
        let on_path = VertexSet::from_iter(path.iter().copied());
        for u in self.adj[last].iter() {
            if u <= anchor || on_path.contains(u) || internal_nbrs.contains(u) {
                continue;
            }
            if path.len() == 1 {
                // choosing the second cycle vertex; anchor adjacency is trivial
                path.push(u);
                self.extend_cycle_search(anchor, path, min_len, out);
                path.pop();
            } else if self.adj[anchor].contains(u) {
                // an anchor neighbor can only close the cycle, never sit
                // inside it (that edge would be a chord)
                let len = path.len() + 1;
                if len >= min_len && path[1] < u {
                    let mut cycle = path.clone();
                    cycle.push(u);
                    out.push(cycle);
                }
            } else {
                path.push(u);
                self.extend_cycle_search(anchor, path, min_len, out);
                path.pop();
            }
        }
    }

    /// No chordless cycles of length other than 3 or 5.
    pub fn is_woodroofe(&self) -> bool {
        self.chordless_cycles(4)
            .expect("min_len 4 is valid")
            .iter()
            .all(|c| c.len() == 5)
    }

    /// Every connected component is a clique. Decided both by component
    /// inspection and by absence of an induced path on three vertices; the two
    /// routes are asserted to agree.
    pub fn is_disjoint_union_of_cliques(&self) -> bool {
        let by_components = self.components().iter().all(|&comp| {
            let k = comp.len();
            comp.iter().all(|v| self.adj[v].intersection(comp).len() == k - 1)
        });
        let mut has_induced_p3 = false;
        'outer: for mid in 0..self.n {
            let nbrs: Vec<usize> = self.adj[mid].to_vec();
            for (i, &a) in nbrs.iter().enumerate() {
                for &b in &nbrs[i + 1..] {
                    if !self.adj[a].contains(b) {
                        has_induced_p3 = true;
                        break 'outer;
                    }
                }
            }
        }
        assert_eq!(by_components, !has_induced_p3);
        by_components
    }

    /// First induced path on three vertices, as (end, middle, end).
    pub fn find_induced_p3(&self) -> Option<(usize, usize, usize)> {
        for mid in 0..self.n {
            let nbrs: Vec<usize> = self.adj[mid].to_vec();
            for (i, &a) in nbrs.iter().enumerate() {
                for &b in &nbrs[i + 1..] {
                    if !self.adj[a].contains(b) {
                        return Some((a, mid, b));
                    }
                }
            }
        }
        None
    }

    /// All maximal independent sets, by depth-first branching on the lowest
    /// undecided vertex (include it, or exclude it and charge a neighbor).
    pub fn maximal_independent_sets(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        // Simple subset scan is fine at our sizes (n <= 14 in practice),
        // but branch on independence to keep the suspension graphs quick.
        fn rec(g: &Graph, v: usize, current: VertexSet, out: &mut Vec<VertexSet>) {
            if v == g.n {
                // maximal iff every vertex outside has a neighbor inside
                let maximal = (0..g.n)
                    .all(|u| current.contains(u) || !g.adj[u].intersection(current).is_empty());
                if maximal {
                    out.push(current);
                }
                return;
            }
            if g.adj[v].intersection(current).is_empty() {
                let mut with = current;
                with.insert(v);
                rec(g, v + 1, with, out);
            }
            rec(g, v + 1, current, out);
        }
        rec(self, 0, VertexSet::EMPTY, &mut out);
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Minimal vertex covers, as complements of maximal independent sets.
    pub fn minimal_vertex_covers(&self) -> Vec<VertexSet> {
        let mut covers: Vec<VertexSet> = self
            .maximal_independent_sets()
            .into_iter()
            .map(|s| s.complement(self.n))
            .collect();
        covers.sort_unstable();
        covers
    }

    /// Every minimal vertex cover has size `n / 2` (requires even `n`).
    pub fn is_very_well_covered(&self) -> bool {
        if self.n % 2 != 0 {
            return false;
        }
        let half = self.n / 2;
        self.minimal_vertex_covers().iter().all(|c| c.len() == half)
    }
}

pub fn path_graph(k: usize) -> Graph {
    let edges: Vec<_> = (0..k.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Graph::new(k, &edges).expect("valid path")
}

pub fn cycle_graph(t: usize) -> Result<Graph> {
    if t < 3 {
        return Err(Error::LimitExceeded {
            what: "cycle length (lower bound)",
            limit: 3,
            got: t,
        });
    }
    let edges: Vec<_> = (0..t).map(|i| (i, (i + 1) % t)).collect();
    Graph::new(t, &edges)
}

pub fn complete_graph(k: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..k {
        for v in u + 1..k {
            edges.push((u, v));
        }
    }
    Graph::new(k, &edges).expect("valid clique")
}

/// The cycle on `t` vertices with one pendant vertex attached to each cycle
/// vertex: cycle vertices are `0..t`, the pendant of `i` is `t + i`.
pub fn suspension_of_cycle(t: usize) -> Result<Graph> {
    if t < 3 {
        return Err(Error::LimitExceeded {
            what: "suspension cycle length (lower bound)",
            limit: 3,
            got: t,
        });
    }
    let mut edges: Vec<_> = (0..t).map(|i| (i, (i + 1) % t)).collect();
    for i in 0..t {
        edges.push((i, t + i));
    }
    Graph::new(2 * t, &edges)
}

/// Two 5-cycles joined by a single bridge edge: vertices `0..5` form the first
/// pentagon (in cycle order 0-1-2-3-4-0), `5..10` the second (5-6-7-8-9-5),
/// and `{0,5}` is the bridge.
pub fn two_pentagons_bridged() -> Graph {
    let edges = [
        (0, 1),
        (1, 2),
        (2, 3),
        (3, 4),
        (0, 4),
        (5, 6),
        (6, 7),
        (7, 8),
        (8, 9),
        (5, 9),
        (0, 5),
    ];
    Graph::new(10, &edges).expect("valid bridged pentagons")
}

/// Positive integer weights on the edges of a companion graph, stored in the
/// graph's sorted edge order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightFunction {
    weights: Vec<u32>,
}

impl WeightFunction {
    /// Weights aligned with `g.edges()`. Every weight must be >= 1.
    pub fn new(g: &Graph, weights: Vec<u32>) -> Result<WeightFunction> {
        if weights.len() != g.edge_count() {
            return Err(Error::WeightDomain(format!(
                "expected {} weights, got {}",
                g.edge_count(),
                weights.len()
            )));
        }
        if let Some(idx) = weights.iter().position(|&w| w == 0) {
            let (u, v) = g.edges()[idx];
            return Err(Error::WeightDomain(format!(
                "weight of edge {{{u},{v}}} must be positive"
            )));
        }
        Ok(WeightFunction { weights })
    }

    /// Builds from `(u, v, w)` triples; every edge of `g` must appear exactly
    /// once (in either endpoint order) and no non-edges are allowed.
    pub fn from_triples(g: &Graph, triples: &[(usize, usize, u32)]) -> Result<WeightFunction> {
        let mut weights = vec![0u32; g.edge_count()];
        let mut seen = vec![false; g.edge_count()];
        for &(u, v, w) in triples {
            let idx = g
                .edge_index(u, v)
                .ok_or_else(|| Error::WeightDomain(format!("{{{u},{v}}} is not an edge")))?;
            if seen[idx] {
                return Err(Error::WeightDomain(format!(
                    "edge {{{u},{v}}} weighted twice"
                )));
            }
            seen[idx] = true;
            weights[idx] = w;
        }
        if let Some(idx) = seen.iter().position(|&s| !s) {
            let (u, v) = g.edges()[idx];
            return Err(Error::MissingWeight { u, v });
        }
        WeightFunction::new(g, weights)
    }

    pub fn constant(g: &Graph, w: u32) -> WeightFunction {
        WeightFunction::new(g, vec![w; g.edge_count()]).expect("constant weight is valid")
    }

    pub fn all_ones(g: &Graph) -> WeightFunction {
        WeightFunction::constant(g, 1)
    }

    pub fn of_edge(&self, g: &Graph, u: usize, v: usize) -> Option<u32> {
        g.edge_index(u, v).map(|i| self.weights[i])
    }

    /// Weight of the i-th edge in the graph's sorted edge order.
    pub fn get(&self, edge_idx: usize) -> u32 {
        self.weights[edge_idx]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.weights
    }

    pub fn max_weight(&self) -> u32 {
        self.weights.iter().copied().max().unwrap_or(1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force induced-cycle finder: a vertex subset induces a cycle iff
    /// the induced subgraph is connected and 2-regular.
    fn chordless_cycles_oracle(g: &Graph, min_len: usize) -> Vec<VertexSet> {
        let mut out = Vec::new();
        for mask in 0u32..(1 << g.n()) {
            let set = VertexSet(mask);
            if set.len() < min_len {
                continue;
            }
            let (h, _) = g.induced(set).unwrap();
            let two_regular = (0..h.n()).all(|v| h.degree(v) == 2);
            if two_regular && h.components().len() == 1 {
                out.push(set);
            }
        }
        out
    }

    #[test]
    fn build_rejects_bad_edges() {
        assert!(matches!(
            Graph::new(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { v: 3, n: 3 })
        ));
        assert!(matches!(Graph::new(3, &[(1, 1)]), Err(Error::SelfLoop(1))));
    }

    #[test]
    fn build_normalizes() {
        let g = Graph::new(3, &[(1, 0), (0, 1), (2, 1)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn single_vertex() {
        let g = Graph::new(1, &[]).unwrap();
        assert_eq!(g.n(), 1);
        assert!(g.edges().is_empty());
    }

    #[test]
    fn induced_of_cycle_is_path() {
        let c5 = cycle_graph(5).unwrap();
        let (h, map) = c5.induced(VertexSet::from_iter([0, 1, 2])).unwrap();
        assert_eq!(map, vec![0, 1, 2]);
        assert_eq!(h.edges(), path_graph(3).edges());
    }

    #[test]
    fn induced_on_full_vertex_set_is_identity() {
        let g = Graph::new(5, &[(0, 2), (1, 4), (2, 3)]).unwrap();
        let (h, _) = g.induced(g.vertex_set()).unwrap();
        assert_eq!(h.edges(), g.edges());
    }

    #[test]
    fn induced_of_clique_is_clique() {
        let k4 = complete_graph(4);
        for mask in subsets_of_size(4, 3) {
            let (h, _) = k4.induced(mask).unwrap();
            assert_eq!(h.edges(), complete_graph(3).edges());
        }
    }

    fn subsets_of_size(n: usize, k: usize) -> Vec<VertexSet> {
        (0u32..1 << n)
            .map(VertexSet)
            .filter(|s| s.len() == k)
            .collect()
    }

    #[test]
    fn c6_has_one_chordless_cycle() {
        let c6 = cycle_graph(6).unwrap();
        let cycles = c6.chordless_cycles(4).unwrap();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].len(), 6);
    }

    #[test]
    fn k4_has_no_long_chordless_cycles() {
        let k4 = complete_graph(4);
        assert!(k4.chordless_cycles(4).unwrap().is_empty());
    }

    #[test]
    fn c5_plus_chord_splits_into_c3_and_c4() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        let mut lens: Vec<usize> = g
            .chordless_cycles(3)
            .unwrap()
            .iter()
            .map(|c| c.len())
            .collect();
        lens.sort_unstable();
        assert_eq!(lens, vec![3, 4]);
        // cross-check against the subset oracle
        let oracle: Vec<usize> = {
            let mut v: Vec<usize> = chordless_cycles_oracle(&g, 3)
                .iter()
                .map(|s| s.len())
                .collect();
            v.sort_unstable();
            v
        };
        assert_eq!(lens, oracle);
    }

    #[test]
    fn chordless_cycles_match_oracle_on_small_graphs() {
        // every graph on 5 vertices
        for mask in 0u32..(1 << 10) {
            let mut edges = Vec::new();
            let mut bit = 0;
            for u in 0..5 {
                for v in u + 1..5 {
                    if mask >> bit & 1 == 1 {
                        edges.push((u, v));
                    }
                    bit += 1;
                }
            }
            let g = Graph::new(5, &edges).unwrap();
            let found = g.chordless_cycles(3).unwrap();
            // each reported cycle really is induced and a cycle
            for cyc in &found {
                let set = VertexSet::from_iter(cyc.iter().copied());
                let (h, _) = g.induced(set).unwrap();
                assert!((0..h.n()).all(|v| h.degree(v) == 2));
                assert_eq!(h.components().len(), 1);
                assert_eq!(h.edge_count(), cyc.len());
            }
            // exactly one report per induced-cycle vertex set
            let mut sets: Vec<VertexSet> = found
                .iter()
                .map(|c| VertexSet::from_iter(c.iter().copied()))
                .collect();
            sets.sort_unstable();
            let dedup_len = sets.len();
            sets.dedup();
            assert_eq!(sets.len(), dedup_len, "duplicate cycle report");
            assert_eq!(sets, chordless_cycles_oracle(&g, 3));
        }
    }

    #[test]
    fn woodroofe_classifier() {
        assert!(!cycle_graph(4).unwrap().is_woodroofe());
        assert!(cycle_graph(5).unwrap().is_woodroofe());
        assert!(!cycle_graph(6).unwrap().is_woodroofe());
        // chordal graphs are Woodroofe
        assert!(path_graph(6).is_woodroofe());
        assert!(complete_graph(5).is_woodroofe());
        let gem = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)]).unwrap();
        assert!(gem.is_woodroofe());
    }

    #[test]
    fn clique_union_classifier() {
        let k3_k2 = Graph::new(5, &[(0, 1), (0, 2), (1, 2), (3, 4)]).unwrap();
        assert!(k3_k2.is_disjoint_union_of_cliques());
        assert!(!path_graph(3).is_disjoint_union_of_cliques());
        assert!(!cycle_graph(5).unwrap().is_disjoint_union_of_cliques());
        assert!(path_graph(3).find_induced_p3().is_some());
        assert!(complete_graph(4).find_induced_p3().is_none());
    }

    #[test]
    fn covers_of_k2_and_p3() {
        let k2 = complete_graph(2);
        let covers = k2.minimal_vertex_covers();
        assert_eq!(
            covers,
            vec![VertexSet::singleton(0), VertexSet::singleton(1)]
        );
        assert!(k2.is_very_well_covered());

        let p3 = path_graph(3);
        let covers = p3.minimal_vertex_covers();
        assert_eq!(
            covers,
            vec![VertexSet::singleton(1), VertexSet::from_iter([0, 2])]
        );
        assert!(!p3.is_very_well_covered());
    }

    #[test]
    fn suspension_shapes() {
        let s4 = suspension_of_cycle(4).unwrap();
        assert_eq!(s4.n(), 8);
        assert_eq!(s4.edge_count(), 8);
        assert!(s4.is_very_well_covered());

        let s3 = suspension_of_cycle(3).unwrap();
        assert_eq!(s3.n(), 6);
        assert_eq!(s3.edge_count(), 6);

        assert!(suspension_of_cycle(2).is_err());
    }

    #[test]
    fn bridged_pentagons_shape() {
        let h = two_pentagons_bridged();
        assert_eq!(h.n(), 10);
        assert_eq!(h.edge_count(), 11);
        assert!(h.has_edge(0, 5));
        // two chordless pentagons and nothing else of length >= 4
        let mut lens: Vec<usize> = h
            .chordless_cycles(4)
            .unwrap()
            .iter()
            .map(|c| c.len())
            .collect();
        lens.sort_unstable();
        assert_eq!(lens, vec![5, 5]);
        assert!(h.is_woodroofe());
    }

    #[test]
    fn weight_function_validation() {
        let p3 = path_graph(3);
        assert!(WeightFunction::new(&p3, vec![1]).is_err());
        assert!(WeightFunction::new(&p3, vec![1, 0]).is_err());
        let w = WeightFunction::from_triples(&p3, &[(1, 0, 2), (1, 2, 3)]).unwrap();
        assert_eq!(w.of_edge(&p3, 0, 1), Some(2));
        assert_eq!(w.of_edge(&p3, 2, 1), Some(3));
        assert!(matches!(
            WeightFunction::from_triples(&p3, &[(0, 1, 2)]),
            Err(Error::MissingWeight { u: 1, v: 2 })
        ));
        assert!(WeightFunction::from_triples(&p3, &[(0, 1, 2), (1, 0, 1), (1, 2, 1)]).is_err());
        assert!(WeightFunction::from_triples(&p3, &[(0, 2, 1), (0, 1, 1), (1, 2, 1)]).is_err());
    }
}
