//! Simplicial complexes given by their facets, Stanley-Reisner complexes of
//! squarefree ideals, links, and pure skeletons.
//!
//! Complexes are downward closed by convention; only the inclusion-maximal
//! faces are stored. The complex `{emptyset}` (one empty face, dimension -1)
//! is distinct from the void complex (no faces at all): the former has the
//! single facet `0`, the latter an empty facet list.

use crate::bits::{subsets_of, VertexSet};
use crate::error::{Error, Result};
use crate::lattice::minimal_transversals;
use crate::monomial::MonomialIdeal;

pub const MAX_AMBIENT: usize = 20;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<u32>,
}

impl std::fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SimplicialComplex(n={}, facets=[", self.n)?;
        for (i, &m) in self.facets.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", VertexSet(m))?;
        }
        write!(f, "])")
    }
}

impl SimplicialComplex {
    /// Builds from generating faces, keeping only the inclusion-maximal ones.
    /// An empty list yields the void complex.
    pub fn from_facets(n: usize, faces: &[u32]) -> Result<SimplicialComplex> {
        if n > MAX_AMBIENT {
            return Err(Error::LimitExceeded {
                what: "complex ambient vertex count",
                limit: MAX_AMBIENT,
                got: n,
            });
        }
        let full = VertexSet::full(n).0;
        for &f in faces {
            if f & !full != 0 {
                let v = VertexSet(f & !full).min().unwrap();
                return Err(Error::VertexOutOfRange { v, n });
            }
        }
        let mut facets: Vec<u32> = Vec::with_capacity(faces.len());
        for &f in faces {
            if faces.iter().any(|&g| g != f && f & !g == 0) {
                continue;
            }
            facets.push(f);
        }
        facets.sort_unstable();
        facets.dedup();
        Ok(SimplicialComplex { n, facets })
    }

    pub fn void(n: usize) -> SimplicialComplex {
        SimplicialComplex { n, facets: Vec::new() }
    }

    pub fn empty_complex(n: usize) -> SimplicialComplex {
        SimplicialComplex { n, facets: vec![0] }
    }

    pub fn full_simplex(n: usize) -> Result<SimplicialComplex> {
        SimplicialComplex::from_facets(n, &[VertexSet::full(n).0])
    }

    /// Faces are the supports of squarefree monomials outside the ideal;
    /// facets are the complements of the minimal transversals of the
    /// generator supports. Requires a proper squarefree ideal.
    pub fn stanley_reisner(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
        if ideal.is_unit() {
            return Err(Error::UnitIdeal);
        }
        if !ideal.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        let n = ideal.n();
        if n > MAX_AMBIENT {
            return Err(Error::LimitExceeded {
                what: "complex ambient vertex count",
                limit: MAX_AMBIENT,
                got: n,
            });
        }
        let supports: Vec<u32> = ideal.gens().iter().map(|g| g.support().0).collect();
        let facets: Vec<u32> = minimal_transversals(n, &supports)
            .into_iter()
            .map(|t| VertexSet(t).complement(n).0)
            .collect();
        SimplicialComplex::from_facets(n, &facets)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[u32] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// True for `{emptyset}`, the complex whose only face is empty.
    pub fn is_empty_complex(&self) -> bool {
        self.facets == [0]
    }

    /// `None` for the void complex, `-1` for `{emptyset}`.
    pub fn dim(&self) -> Option<i64> {
        self.facets
            .iter()
            .map(|f| f.count_ones() as i64 - 1)
            .max()
    }

    pub fn contains_face(&self, face: u32) -> bool {
        self.facets.iter().any(|&f| face & !f == 0)
    }

    /// Union of all facets.
    pub fn vertices(&self) -> VertexSet {
        VertexSet(self.facets.iter().fold(0, |acc, &f| acc | f))
    }

    /// A vertex lying in every facet, if one exists (making the complex a
    /// cone, hence contractible).
    pub fn cone_vertex(&self) -> Option<usize> {
        if self.is_void() {
            return None;
        }
        let common = self.facets.iter().fold(u32::MAX, |acc, &f| acc & f);
        VertexSet(common).min()
    }

    /// `lk(face) = { t : t disjoint from face, t union face a face }`.
    pub fn link(&self, face: u32) -> Result<SimplicialComplex> {
        if !self.contains_face(face) {
            return Err(Error::NotAFace(VertexSet(face).to_vec()));
        }
        let facets: Vec<u32> = self
            .facets
            .iter()
            .filter(|&&f| face & !f == 0)
            .map(|&f| f & !face)
            .collect();
        // facets over a fixed face are incomparable already
        Ok(SimplicialComplex { n: self.n, facets: sorted(facets) })
    }

    /// The subcomplex generated by all faces of dimension exactly `i`.
    pub fn pure_skeleton(&self, i: i64) -> Result<SimplicialComplex> {
        let dim = self.dim().ok_or(Error::VoidComplex)?;
        if i < -1 || i > dim {
            return Err(Error::SkeletonOutOfRange { dim: i, max: dim });
        }
        if i == -1 {
            return Ok(SimplicialComplex::empty_complex(self.n));
        }
        let k = (i + 1) as usize;
        let mut faces: Vec<u32> = Vec::new();
        for &f in &self.facets {
            k_subsets(f, k, &mut faces);
        }
        faces.sort_unstable();
        faces.dedup();
        Ok(SimplicialComplex { n: self.n, facets: faces })
    }

    /// All faces grouped by vertex count: entry `k` lists the faces with `k`
    /// vertices sorted lexicographically as vertex lists. Entry `0` is the
    /// empty face. Empty for the void complex.
    pub fn faces_by_size(&self) -> Vec<Vec<u32>> {
        if self.is_void() {
            return Vec::new();
        }
        let dim = self.dim().unwrap();
        let mut layers: Vec<std::collections::HashSet<u32>> =
            vec![std::collections::HashSet::new(); (dim + 2) as usize];
        for &f in &self.facets {
            for s in subsets_of(f) {
                layers[s.count_ones() as usize].insert(s);
            }
        }
        layers
            .into_iter()
            .map(|set| {
                let mut v: Vec<u32> = set.into_iter().collect();
                v.sort_by_cached_key(|&m| VertexSet(m).to_vec());
                v
            })
            .collect()
    }

    /// Face counts by dimension, starting at dimension 0. The empty face is
    /// not counted.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces_by_size()
            .into_iter()
            .skip(1)
            .map(|layer| layer.len())
            .collect()
    }

    pub fn face_count(&self) -> usize {
        self.faces_by_size().iter().map(|l| l.len()).sum()
    }

    /// The image complex under a vertex relabeling (`perm[old] = new`).
    pub fn relabel(&self, perm: &[usize]) -> SimplicialComplex {
        let facets = self
            .facets
            .iter()
            .map(|&f| {
                VertexSet(f)
                    .iter()
                    .fold(0u32, |acc, v| acc | 1 << perm[v])
            })
            .collect();
        SimplicialComplex { n: self.n, facets: sorted(facets) }
    }

    /// Facets as sorted vertex lists, one per line.
    pub fn dump_facets(&self) -> String {
        let mut out = String::new();
        for &f in &self.facets {
            let verts: Vec<String> = VertexSet(f).iter().map(|v| v.to_string()).collect();
            out.push_str(&verts.join(" "));
            out.push('\n');
        }
        out
    }
}

fn sorted(mut v: Vec<u32>) -> Vec<u32> {
    v.sort_unstable();
    v
}

/// Appends all `k`-element subsets of `mask` to `out`.
fn k_subsets(mask: u32, k: usize, out: &mut Vec<u32>) {
    let bits: Vec<usize> = VertexSet(mask).iter().collect();
    if k > bits.len() {
        return;
    }
    let mut choose: Vec<usize> = (0..k).collect();
    loop {
        out.push(choose.iter().fold(0u32, |acc, &i| acc | 1 << bits[i]));
        // next combination
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if choose[i] + (k - i) < bits.len() {
                choose[i] += 1;
                for j in i + 1..k {
                    choose[j] = choose[j - 1] + 1;
                }
                break;
            }
        }
    }
}
