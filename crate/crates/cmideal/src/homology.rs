//! Reduced simplicial homology ranks over the rationals or a prime field,
//! from boundary matrices with exact rank computations.
//!
//! The reduced chain complex includes the empty face in degree -1, so the
//! rank at -1 is 1 exactly for the complex `{emptyset}`. Boundary matrices
//! order faces lexicographically as vertex lists and sign the summand
//! removing the k-th smallest vertex by `(-1)^k`; any consistent convention
//! yields the same ranks, this one is fixed for reproducibility.

use crate::bits::VertexSet;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;

/// Coefficient field for homology and the derived verdicts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Rationals,
    Prime(u32),
}

impl FieldSpec {
    pub fn prime(p: u32) -> Result<FieldSpec> {
        if is_prime(p as u64) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(Error::NotPrime(p as u64))
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "F{p}"),
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Ranks of reduced homology indexed from dimension -1 up to the dimension of
/// the complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiVector {
    ranks: Vec<usize>,
}

impl BettiVector {
    /// Rank in dimension `i` (zero outside the stored range).
    pub fn rank(&self, i: i64) -> usize {
        let idx = i + 1;
        if idx < 0 || idx as usize >= self.ranks.len() {
            0
        } else {
            self.ranks[idx as usize]
        }
    }

    /// Top dimension covered (the complex's dimension).
    pub fn dim(&self) -> i64 {
        self.ranks.len() as i64 - 2
    }

    /// `(dimension, rank)` pairs from -1 upward.
    pub fn iter(&self) -> impl Iterator<Item = (i64, usize)> + '_ {
        self.ranks.iter().enumerate().map(|(k, &r)| (k as i64 - 1, r))
    }

    pub fn is_zero(&self) -> bool {
        self.ranks.iter().all(|&r| r == 0)
    }
}

impl fmt::Display for BettiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, (i, r)) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "h{i}={r}")?;
        }
        write!(f, "]")
    }
}

/// Reduced homology ranks of a non-void complex over the given field.
pub fn reduced_betti(complex: &SimplicialComplex, field: FieldSpec) -> Result<BettiVector> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    let layers = complex.faces_by_size();
    let top = layers.len(); // = dim + 2
    let mut boundary_ranks = vec![0usize; top + 1];
    for k in 1..top {
        let matrix = boundary_matrix(&layers[k - 1], &layers[k]);
        boundary_ranks[k] = rank(&matrix, layers[k - 1].len(), layers[k].len(), field);
    }
    let ranks: Vec<usize> = (0..top)
        .map(|k| layers[k].len() - boundary_ranks[k] - boundary_ranks[k + 1])
        .collect();
    Ok(BettiVector { ranks })
}

/// Reduced Euler characteristic computed two ways: alternating face counts
/// (including the empty face) and alternating homology ranks. Equal by the
/// Euler-Poincare identity; exposed for the test corpus.
pub fn euler_characteristics(complex: &SimplicialComplex, field: FieldSpec) -> Result<(i64, i64)> {
    let layers = complex.faces_by_size();
    let from_faces: i64 = layers
        .iter()
        .enumerate()
        .map(|(k, layer)| {
            let sign = if k % 2 == 0 { -1 } else { 1 }; // k faces have dim k-1
            sign * layer.len() as i64
        })
        .sum();
    let betti = reduced_betti(complex, field)?;
    let from_ranks: i64 = betti
        .iter()
        .map(|(i, r)| {
            let sign = if (i + 1) % 2 == 0 { -1 } else { 1 };
            sign * r as i64
        })
        .sum();
    Ok((from_faces, from_ranks))
}

/// Sparse column entries (row, sign) of the boundary map from `cols` faces to
/// `rows` faces, both sorted lexicographically.
fn boundary_matrix(rows: &[u32], cols: &[u32]) -> Vec<Vec<(usize, i8)>> {
    let row_index: HashMap<u32, usize> = rows.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    cols.iter()
        .map(|&face| {
            VertexSet(face)
                .iter()
                .enumerate()
                .map(|(k, v)| {
                    let sub = face & !(1 << v);
                    let sign = if k % 2 == 0 { 1i8 } else { -1i8 };
                    (row_index[&sub], sign)
                })
                .collect()
        })
        .collect()
}

fn rank(matrix: &[Vec<(usize, i8)>], nrows: usize, ncols: usize, field: FieldSpec) -> usize {
    if nrows == 0 || ncols == 0 {
        return 0;
    }
    match field {
        FieldSpec::Prime(p) => rank_mod_p(matrix, nrows, ncols, p as u64),
        FieldSpec::Rationals => {
            let dense: Vec<Vec<i128>> = to_dense(matrix, nrows, ncols);
            match rank_bareiss_i128(dense) {
                Some(r) => r,
                None => {
                    let dense: Vec<Vec<BigInt>> = matrix_to_bigint(matrix, nrows, ncols);
                    rank_bareiss_bigint(dense)
                }
            }
        }
    }
}

fn to_dense(matrix: &[Vec<(usize, i8)>], nrows: usize, ncols: usize) -> Vec<Vec<i128>> {
    let mut dense = vec![vec![0i128; ncols]; nrows];
    for (j, col) in matrix.iter().enumerate() {
        for &(i, s) in col {
            dense[i][j] = s as i128;
        }
    }
    dense
}

fn matrix_to_bigint(matrix: &[Vec<(usize, i8)>], nrows: usize, ncols: usize) -> Vec<Vec<BigInt>> {
    let mut dense = vec![vec![BigInt::zero(); ncols]; nrows];
    for (j, col) in matrix.iter().enumerate() {
        for &(i, s) in col {
            dense[i][j] = BigInt::from(s);
        }
    }
    dense
}

/// Fraction-free elimination; intermediate entries are minors of the input,
/// so every division is exact. Returns `None` on i128 overflow.
fn rank_bareiss_i128(mut m: Vec<Vec<i128>>) -> Option<usize> {
    let nrows = m.len();
    let ncols = m[0].len();
    let mut prev = 1i128;
    let mut rank = 0usize;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        // smallest-magnitude pivot keeps growth down
        let pivot_row = (rank..nrows)
            .filter(|&r| m[r][col] != 0)
            .min_by_key(|&r| m[r][col].unsigned_abs());
        let Some(p) = pivot_row else { continue };
        m.swap(rank, p);
        for r in rank + 1..nrows {
            for c in col + 1..ncols {
                let a = m[rank][col].checked_mul(m[r][c])?;
                let b = m[r][col].checked_mul(m[rank][c])?;
                let num = a.checked_sub(b)?;
                debug_assert_eq!(num % prev, 0, "fraction-free division must be exact");
                m[r][c] = num / prev;
            }
            m[r][col] = 0;
        }
        prev = m[rank][col];
        rank += 1;
    }
    Some(rank)
}

fn rank_bareiss_bigint(mut m: Vec<Vec<BigInt>>) -> usize {
    let nrows = m.len();
    let ncols = m[0].len();
    let mut prev = BigInt::from(1);
    let mut rank = 0usize;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let pivot_row = (rank..nrows)
            .filter(|&r| !m[r][col].is_zero())
            .min_by_key(|&r| m[r][col].abs());
        let Some(p) = pivot_row else { continue };
        m.swap(rank, p);
        for r in rank + 1..nrows {
            for c in col + 1..ncols {
                let num = &m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c];
                debug_assert!((&num % &prev).is_zero());
                m[r][c] = num / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

fn rank_mod_p(matrix: &[Vec<(usize, i8)>], nrows: usize, ncols: usize, p: u64) -> usize {
    let mut dense = vec![vec![0u64; ncols]; nrows];
    for (j, col) in matrix.iter().enumerate() {
        for &(i, s) in col {
            dense[i][j] = if s >= 0 { s as u64 % p } else { p - 1 };
        }
    }
    let mut rank = 0usize;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot) = (rank..nrows).find(|&r| dense[r][col] != 0) else {
            continue;
        };
        dense.swap(rank, pivot);
        let inv = mod_inverse(dense[rank][col], p);
        for c in col..ncols {
            dense[rank][c] = dense[rank][c] * inv % p;
        }
        for r in rank + 1..nrows {
            let factor = dense[r][col];
            if factor == 0 {
                continue;
            }
            for c in col..ncols {
                dense[r][c] = (dense[r][c] + (p - factor) * dense[rank][c]) % p;
            }
        }
        rank += 1;
    }
    rank
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p
    let mut result = 1u64;
    let mut base = a % p;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = (result as u128 * base as u128 % p as u128) as u64;
        }
        base = (base as u128 * base as u128 % p as u128) as u64;
        exp >>= 1;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::VertexSet;
    use crate::graph::cycle_graph;
    use crate::monomial::edge_ideal;

    fn mask(verts: &[usize]) -> u32 {
        VertexSet::from_iter(verts.iter().copied()).0
    }

    fn betti_q(c: &SimplicialComplex) -> BettiVector {
        reduced_betti(c, FieldSpec::Rationals).unwrap()
    }

    #[test]
    fn hollow_triangle_is_a_circle() {
        let c =
            SimplicialComplex::from_facets(3, &[mask(&[0, 1]), mask(&[1, 2]), mask(&[0, 2])])
                .unwrap();
        let b = betti_q(&c);
        assert_eq!(b.rank(-1), 0);
        assert_eq!(b.rank(0), 0);
        assert_eq!(b.rank(1), 1);
    }

    #[test]
    fn full_simplices_are_acyclic() {
        for k in 1..=5 {
            let c = SimplicialComplex::full_simplex(k).unwrap();
            assert!(betti_q(&c).is_zero(), "simplex on {k} vertices");
        }
    }

    #[test]
    fn pentagon_independence_complex_is_a_circle() {
        let c = SimplicialComplex::stanley_reisner(&edge_ideal(&cycle_graph(5).unwrap())).unwrap();
        let b = betti_q(&c);
        assert_eq!(b.rank(0), 0);
        assert_eq!(b.rank(1), 1);
        assert_eq!(b.rank(-1), 0);
    }

    #[test]
    fn empty_complex_has_rank_one_below_zero() {
        let c = SimplicialComplex::empty_complex(3);
        let b = betti_q(&c);
        assert_eq!(b.rank(-1), 1);
        assert_eq!(b.dim(), -1);
    }

    #[test]
    fn isolated_points() {
        let one = SimplicialComplex::from_facets(2, &[mask(&[0])]).unwrap();
        assert!(betti_q(&one).is_zero());
        let two = SimplicialComplex::from_facets(2, &[mask(&[0]), mask(&[1])]).unwrap();
        let b = betti_q(&two);
        assert_eq!(b.rank(-1), 0);
        assert_eq!(b.rank(0), 1);
    }

    #[test]
    fn boundary_spheres() {
        // boundary of the (k+1)-simplex is a k-sphere
        for k in 0..=3i64 {
            let n = (k + 2) as usize;
            let full = VertexSet::full(n).0;
            let facets: Vec<u32> = (0..n).map(|v| full & !(1 << v)).collect();
            let c = SimplicialComplex::from_facets(n, &facets).unwrap();
            let b = betti_q(&c);
            for (i, r) in b.iter() {
                assert_eq!(r, usize::from(i == k), "S^{k} at dimension {i}");
            }
        }
    }

    #[test]
    fn void_complex_is_an_error() {
        let c = SimplicialComplex::void(2);
        assert!(matches!(
            reduced_betti(&c, FieldSpec::Rationals),
            Err(Error::VoidComplex)
        ));
    }

    #[test]
    fn euler_identity_on_small_corpus() {
        let complexes = vec![
            SimplicialComplex::empty_complex(2),
            SimplicialComplex::full_simplex(4).unwrap(),
            SimplicialComplex::stanley_reisner(&edge_ideal(&cycle_graph(5).unwrap())).unwrap(),
            SimplicialComplex::stanley_reisner(&edge_ideal(&cycle_graph(6).unwrap())).unwrap(),
            SimplicialComplex::from_facets(4, &[mask(&[0, 1]), mask(&[2, 3])]).unwrap(),
        ];
        for c in complexes {
            let (faces, ranks) = euler_characteristics(&c, FieldSpec::Rationals).unwrap();
            assert_eq!(faces, ranks, "{c:?}");
        }
    }

    #[test]
    fn relabeling_leaves_betti_fixed() {
        let c = SimplicialComplex::stanley_reisner(&edge_ideal(&cycle_graph(6).unwrap())).unwrap();
        let b = betti_q(&c);
        for perm in [
            vec![5, 4, 3, 2, 1, 0],
            vec![1, 2, 3, 4, 5, 0],
            vec![2, 0, 4, 1, 5, 3],
        ] {
            assert_eq!(betti_q(&c.relabel(&perm)), b);
        }
    }

    #[test]
    fn projective_plane_shows_torsion_at_two() {
        // minimal 6-vertex triangulation of the real projective plane:
        // rationally acyclic, but with one-dimensional homology over F2
        let triangles = [
            [0, 1, 3],
            [0, 1, 4],
            [0, 2, 3],
            [0, 2, 5],
            [0, 4, 5],
            [1, 2, 4],
            [1, 2, 5],
            [1, 3, 5],
            [2, 3, 4],
            [3, 4, 5],
        ];
        let facets: Vec<u32> = triangles.iter().map(|t| mask(t)).collect();
        let c = SimplicialComplex::from_facets(6, &facets).unwrap();
        assert_eq!(c.f_vector(), vec![6, 15, 10]);

        let over_q = betti_q(&c);
        assert!(over_q.is_zero());

        let over_f2 = reduced_betti(&c, FieldSpec::Prime(2)).unwrap();
        assert_eq!(over_f2.rank(1), 1);
        assert_eq!(over_f2.rank(2), 1);

        let over_f3 = reduced_betti(&c, FieldSpec::Prime(3)).unwrap();
        assert!(over_f3.is_zero());

        // rank over Q never exceeds rank over a prime field
        for (i, r) in over_q.iter() {
            assert!(r <= over_f2.rank(i));
        }
    }

    #[test]
    fn primality_check() {
        assert!(is_prime(2));
        assert!(is_prime(3));
        assert!(is_prime(1_000_003));
        assert!(!is_prime(1));
        assert!(!is_prime(91));
        assert!(FieldSpec::prime(7).is_ok());
        assert!(FieldSpec::prime(9).is_err());
    }
}
