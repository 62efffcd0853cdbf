//! Graph isomorphism at desk scale: canonical forms by exhaustive permutation
//! scan and one-representative-per-class enumeration of small graphs.

use crate::error::{Error, Result};
use crate::graph::Graph;

const CANON_MAX_N: usize = 9;
const ENUM_MAX_N: usize = 7;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    fn rec(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k == items.len() {
            out.push(items.clone());
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            rec(items, k + 1, out);
            items.swap(k, i);
        }
    }
    rec(&mut items, 0, &mut out);
    out
}

fn adjacency_rows(g: &Graph) -> Vec<u16> {
    let mut rows = vec![0u16; g.n()];
    for &(u, v) in g.edges() {
        rows[u] |= 1 << v;
        rows[v] |= 1 << u;
    }
    rows
}

/// Packs the upper-triangle adjacency bits (pair order (0,1), (0,2), ...,
/// (n-2,n-1)) of the relabeling `perm` into a u64, earliest pair in the
/// highest bit, so numeric order equals lexicographic bitstring order.
fn relabeled_bits(rows: &[u16], perm: &[usize]) -> u64 {
    let n = rows.len();
    let mut val = 0u64;
    for i in 0..n {
        let row = rows[perm[i]];
        for j in i + 1..n {
            val = val << 1 | (row >> perm[j] & 1) as u64;
        }
    }
    val
}

fn canonical_bits(rows: &[u16], perms: &[Vec<usize>]) -> u64 {
    perms
        .iter()
        .map(|p| relabeled_bits(rows, p))
        .min()
        .expect("at least one permutation")
}

/// Lexicographically minimal adjacency bitstring over all vertex relabelings,
/// prefixed with the vertex count. Two graphs on the same vertex count are
/// isomorphic iff their forms are equal. Exhaustive scan, so `n <= 9`.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>> {
    if g.n() > CANON_MAX_N {
        return Err(Error::LimitExceeded {
            what: "canonical form vertex count",
            limit: CANON_MAX_N,
            got: g.n(),
        });
    }
    let n = g.n();
    let bits = canonical_bits(&adjacency_rows(g), &permutations(n));
    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(8);
    let mut out = Vec::with_capacity(1 + nbytes);
    out.push(n as u8);
    for byte_idx in 0..nbytes {
        let mut b = 0u8;
        for k in 0..8 {
            let p = byte_idx * 8 + k;
            if p < nbits {
                let bit = bits >> (nbits - 1 - p) & 1;
                b |= (bit as u8) << (7 - k);
            }
        }
        out.push(b);
    }
    Ok(out)
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.n() != b.n() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

fn graph_from_bits(n: usize, bits: u64) -> Graph {
    let nbits = n * (n - 1) / 2;
    let mut edges = Vec::new();
    let mut p = 0;
    for i in 0..n {
        for j in i + 1..n {
            if bits >> (nbits - 1 - p) & 1 == 1 {
                edges.push((i, j));
            }
            p += 1;
        }
    }
    Graph::new(n, &edges).expect("bits decode to a valid graph")
}

/// One representative per isomorphism class of simple graphs on `n` vertices,
/// in increasing canonical-form order (empty graph first, complete graph
/// last). Each representative carries its canonical labeling.
///
/// For `n <= 6` this deduplicates all `2^C(n,2)` labeled graphs directly. For
/// `n = 7` the full labeled scan is out of reach, so classes are grown by
/// attaching a new vertex with every possible neighborhood to each class on
/// six vertices; deleting any vertex of a 7-vertex graph lands in some
/// 6-vertex class, so every class is reached.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > ENUM_MAX_N {
        return Err(Error::LimitExceeded {
            what: "graph enumeration vertex count",
            limit: ENUM_MAX_N,
            got: n,
        });
    }
    let perms = permutations(n);
    let mut keys: Vec<u64> = if n <= 6 {
        let nbits = n * (n - 1) / 2;
        let mut set = std::collections::HashSet::new();
        for mask in 0u64..1 << nbits {
            let g = graph_from_bits(n, mask);
            set.insert(canonical_bits(&adjacency_rows(&g), &perms));
        }
        set.into_iter().collect()
    } else {
        let mut set = std::collections::HashSet::new();
        for rep in enumerate_graphs(n - 1)? {
            let mut rows = adjacency_rows(&rep);
            rows.push(0);
            for nbhd in 0u16..1 << (n - 1) {
                rows[n - 1] = nbhd;
                for v in 0..n - 1 {
                    if nbhd >> v & 1 == 1 {
                        rows[v] |= 1 << (n - 1);
                    } else {
                        rows[v] &= !(1 << (n - 1));
                    }
                }
                set.insert(canonical_bits(&rows, &perms));
            }
        }
        set.into_iter().collect()
    };
    keys.sort_unstable();
    Ok(keys.into_iter().map(|k| graph_from_bits(n, k)).collect())
}
