//! Cohen-Macaulay and sequentially Cohen-Macaulay decisions.
//!
//! For complexes: Reisner's criterion (reduced homology of every link
//! vanishes below the link's dimension) and Duval's criterion (every pure
//! skeleton is Cohen-Macaulay). For arbitrary proper monomial ideals the
//! verdicts transfer to the radicals `sqrt(I : u)` over monomials `u`
//! outside `I`, which the engine checks over the bounded exponent lattice
//! with a shared verdict cache:
//!
//! * `S/I` is Cohen-Macaulay iff every such radical is Cohen-Macaulay **of
//!   the full dimension** `dim S/I` (the depth of `S/I` is the minimum of
//!   the depths over the radical quotients, each of which is bounded by its
//!   own dimension, which never exceeds `dim S/I`; the dimension condition
//!   is essential: `(x0^2, x0 x1)` has every radical Cohen-Macaulay but has
//!   depth 0 under dimension 1);
//! * `S/I` is sequentially Cohen-Macaulay iff every radical is, with no
//!   dimension condition.
//!
//! Before consulting the cache, each radical is normalized: single-variable
//! generators are quotiented away (a ring isomorphism onto fewer variables)
//! and variables appearing in no generator are dropped (a free polynomial
//! extension); neither changes either verdict. Radicals of weighted edge
//! ideals all normalize to plain edge ideals of induced subgraphs, so the
//! cache stays small across big weight sweeps.

use crate::bits::VertexSet;
use crate::complex::{SimplicialComplex, MAX_AMBIENT};
use crate::error::{Error, Result};
use crate::homology::{reduced_betti, FieldSpec};
use crate::lattice::{
    krull_dim, masks_to_ideal, minimal_transversals, visit_associated_radicals,
};
use crate::monomial::{Monomial, MonomialIdeal};
use std::collections::{HashMap, HashSet};
use std::fmt;
use std::ops::ControlFlow;
use std::sync::RwLock;

/// Where a negative verdict came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComplexWitness {
    /// A face whose link has nonvanishing reduced homology below its
    /// dimension.
    Reisner { face: VertexSet, homology_dim: i64 },
    /// A pure skeleton that is not Cohen-Macaulay.
    Duval { skeleton_dim: i64 },
}

impl fmt::Display for ComplexWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComplexWitness::Reisner { face, homology_dim } => {
                write!(f, "link of {face} has homology in dimension {homology_dim}")
            }
            ComplexWitness::Duval { skeleton_dim } => {
                write!(f, "pure {skeleton_dim}-skeleton is not Cohen-Macaulay")
            }
        }
    }
}

/// Why a radical disqualifies the ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessDetail {
    /// The radical's complex fails Reisner or Duval.
    Complex(ComplexWitness),
    /// The radical is Cohen-Macaulay but of too small a dimension.
    Dimension { radical_dim: usize, ideal_dim: usize },
}

impl fmt::Display for WitnessDetail {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessDetail::Complex(w) => write!(f, "{w}"),
            WitnessDetail::Dimension {
                radical_dim,
                ideal_dim,
            } => write!(
                f,
                "radical has dimension {radical_dim}, the ideal has dimension {ideal_dim}"
            ),
        }
    }
}

/// The monomial whose radical fails, the radical itself, and the reason (a
/// Reisner or Duval failure in the radical's complex, or a dimension drop).
/// Faces in the reason are in the radical's own variable labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealWitness {
    pub monomial: Monomial,
    pub radical: MonomialIdeal,
    pub detail: WitnessDetail,
}

impl fmt::Display for IdealWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "u = {}; radical = {}; {}",
            self.monomial, self.radical, self.detail
        )
    }
}

/// Full verdict record for one ideal over one field.
#[derive(Clone, Debug)]
pub struct CMReport {
    pub is_cm: bool,
    pub is_scm: bool,
    pub unmixed: bool,
    pub dim: usize,
    pub field: FieldSpec,
    pub cm_witness: Option<IdealWitness>,
    pub scm_witness: Option<IdealWitness>,
    pub field_sensitive: bool,
}

/// Reisner's criterion: for every face (the empty face included), the link
/// has vanishing reduced homology strictly below its dimension. Links of
/// dimension at most zero and cones pass without a rank computation.
pub fn is_cm_complex(
    complex: &SimplicialComplex,
    field: FieldSpec,
) -> Result<(bool, Option<ComplexWitness>)> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    for layer in complex.faces_by_size() {
        for &face in &layer {
            let lk = complex.link(face).expect("faces of the complex have links");
            let d = lk.dim().expect("links are never void");
            if d <= 0 || lk.cone_vertex().is_some() {
                continue;
            }
            let betti = reduced_betti(&lk, field)?;
            for i in -1..d {
                if betti.rank(i) != 0 {
                    return Ok((
                        false,
                        Some(ComplexWitness::Reisner {
                            face: VertexSet(face),
                            homology_dim: i,
                        }),
                    ));
                }
            }
        }
    }
    Ok((true, None))
}

/// Duval's criterion: every pure skeleton (dimension -1 through dim) is
/// Cohen-Macaulay.
pub fn is_scm_complex(
    complex: &SimplicialComplex,
    field: FieldSpec,
) -> Result<(bool, Option<ComplexWitness>)> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    let dim = complex.dim().expect("non-void complex has a dimension");
    for i in -1..=dim {
        let skeleton = complex.pure_skeleton(i).expect("skeleton index in range");
        if !is_cm_complex(&skeleton, field)?.0 {
            return Ok((false, Some(ComplexWitness::Duval { skeleton_dim: i })));
        }
    }
    Ok((true, None))
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct CacheKey {
    n: usize,
    gens: Vec<u32>,
    field: FieldSpec,
}

#[derive(Clone)]
struct Cached {
    ok: bool,
    witness: Option<ComplexWitness>,
    /// Smallest minimal-prime size of the normalized radical; together with
    /// the dropped single-variable generators this gives the radical
    /// quotient's dimension in the original ambient ring.
    min_cover: usize,
}

/// Decision engine with a shared radical-verdict cache. Cheap to share by
/// reference across threads; all methods take `&self`.
#[derive(Default)]
pub struct CmEngine {
    cm_cache: RwLock<HashMap<CacheKey, Cached>>,
    scm_cache: RwLock<HashMap<CacheKey, Cached>>,
}

/// A squarefree radical with single-variable generators quotiented away and
/// unused variables dropped, relabeled onto `0..n`.
struct Normalized {
    n: usize,
    gens: Vec<u32>,
    old_of_new: Vec<usize>,
}

fn normalize_radical(masks: &[u32]) -> Normalized {
    let multi: Vec<u32> = masks.iter().copied().filter(|m| m.count_ones() >= 2).collect();
    let used = multi.iter().fold(0u32, |acc, &m| acc | m);
    let old_of_new: Vec<usize> = VertexSet(used).iter().collect();
    let mut new_of_old = [0usize; 32];
    for (new, &old) in old_of_new.iter().enumerate() {
        new_of_old[old] = new;
    }
    let mut gens: Vec<u32> = multi
        .iter()
        .map(|&m| {
            VertexSet(m)
                .iter()
                .fold(0u32, |acc, v| acc | 1 << new_of_old[v])
        })
        .collect();
    gens.sort_unstable();
    Normalized {
        n: old_of_new.len(),
        gens,
        old_of_new,
    }
}

impl CmEngine {
    pub fn new() -> CmEngine {
        CmEngine::default()
    }

    fn cached_verdict(&self, norm: &Normalized, field: FieldSpec, scm: bool) -> Result<Cached> {
        let key = CacheKey {
            n: norm.n,
            gens: norm.gens.clone(),
            field,
        };
        let cache = if scm { &self.scm_cache } else { &self.cm_cache };
        if let Some(v) = cache.read().expect("cache lock").get(&key) {
            return Ok(v.clone());
        }
        let transversals = minimal_transversals(norm.n, &norm.gens);
        let min_cover = transversals
            .iter()
            .map(|t| t.count_ones() as usize)
            .min()
            .unwrap_or(0);
        let facets: Vec<u32> = transversals
            .into_iter()
            .map(|t| VertexSet(t).complement(norm.n).0)
            .collect();
        let complex = SimplicialComplex::from_facets(norm.n, &facets)?;
        let (ok, witness) = if scm {
            is_scm_complex(&complex, field)?
        } else {
            is_cm_complex(&complex, field)?
        };
        let value = Cached {
            ok,
            witness,
            min_cover,
        };
        cache
            .write()
            .expect("cache lock")
            .insert(key, value.clone());
        Ok(value)
    }

    fn translate_witness(w: ComplexWitness, norm: &Normalized) -> ComplexWitness {
        match w {
            ComplexWitness::Reisner { face, homology_dim } => ComplexWitness::Reisner {
                face: VertexSet::from_iter(face.iter().map(|v| norm.old_of_new[v])),
                homology_dim,
            },
            duval => duval,
        }
    }

    fn decide(
        &self,
        ideal: &MonomialIdeal,
        field: FieldSpec,
        scm: bool,
    ) -> Result<(bool, Option<IdealWitness>)> {
        if ideal.is_unit() {
            return Err(Error::UnitIdeal);
        }
        if ideal.n() > MAX_AMBIENT {
            return Err(Error::LimitExceeded {
                what: "ideal ambient variable count",
                limit: MAX_AMBIENT,
                got: ideal.n(),
            });
        }
        let ideal_dim = krull_dim(ideal)?;
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        let mut failure: Option<IdealWitness> = None;
        let mut error: Option<Error> = None;
        visit_associated_radicals(ideal, false, |point, masks| {
            if !seen.insert(masks.to_vec()) {
                return ControlFlow::Continue(());
            }
            let singles = masks.iter().filter(|m| m.count_ones() == 1).count();
            let norm = normalize_radical(masks);
            match self.cached_verdict(&norm, field, scm) {
                Ok(cached) => {
                    let radical_dim = ideal.n() - singles - cached.min_cover;
                    let detail = if !scm && radical_dim != ideal_dim {
                        debug_assert!(radical_dim < ideal_dim);
                        Some(WitnessDetail::Dimension {
                            radical_dim,
                            ideal_dim,
                        })
                    } else if !cached.ok {
                        Some(WitnessDetail::Complex(Self::translate_witness(
                            cached.witness.expect("negative verdicts carry a witness"),
                            &norm,
                        )))
                    } else {
                        None
                    };
                    match detail {
                        None => ControlFlow::Continue(()),
                        Some(detail) => {
                            failure = Some(IdealWitness {
                                monomial: Monomial::new(point.to_vec()),
                                radical: masks_to_ideal(ideal.n(), masks),
                                detail,
                            });
                            ControlFlow::Break(())
                        }
                    }
                }
                Err(e) => {
                    error = Some(e);
                    ControlFlow::Break(())
                }
            }
        });
        if let Some(e) = error {
            return Err(e);
        }
        Ok(match failure {
            Some(w) => (false, Some(w)),
            None => (true, None),
        })
    }

    /// Is `S/I` Cohen-Macaulay over the field? Negative verdicts carry the
    /// first failing monomial in lattice order and its radical.
    pub fn is_cm_ideal(
        &self,
        ideal: &MonomialIdeal,
        field: FieldSpec,
    ) -> Result<(bool, Option<IdealWitness>)> {
        self.decide(ideal, field, false)
    }

    /// Is `S/I` sequentially Cohen-Macaulay over the field?
    pub fn is_scm_ideal(
        &self,
        ideal: &MonomialIdeal,
        field: FieldSpec,
    ) -> Result<(bool, Option<IdealWitness>)> {
        self.decide(ideal, field, true)
    }

    /// Both verdicts plus unmixedness, dimension, and (optionally) whether a
    /// second field disagrees with the primary one.
    pub fn report(
        &self,
        ideal: &MonomialIdeal,
        field: FieldSpec,
        cross_field: Option<FieldSpec>,
    ) -> Result<CMReport> {
        let (is_cm, cm_witness) = self.is_cm_ideal(ideal, field)?;
        let (is_scm, scm_witness) = self.is_scm_ideal(ideal, field)?;
        let unmixed = crate::lattice::is_unmixed(ideal);
        let dim = krull_dim(ideal)?;
        let mut field_sensitive = false;
        if let Some(other) = cross_field {
            let (cm2, _) = self.is_cm_ideal(ideal, other)?;
            let (scm2, _) = self.is_scm_ideal(ideal, other)?;
            field_sensitive = cm2 != is_cm || scm2 != is_scm;
        }
        debug_assert!(!is_cm || is_scm, "CM must imply sequentially CM");
        debug_assert!(!is_cm || unmixed, "CM must imply unmixed");
        Ok(CMReport {
            is_cm,
            is_scm,
            unmixed,
            dim,
            field,
            cm_witness,
            scm_witness,
            field_sensitive,
        })
    }

}

/// Independent oracle: the verdict of Reisner's criterion on the
/// Stanley-Reisner complex of the polarization. Polarization preserves both
/// properties, and this route never touches the radical enumeration.
pub fn is_cm_via_polarization(ideal: &MonomialIdeal, field: FieldSpec) -> Result<bool> {
    let complex = polarized_complex(ideal)?;
    Ok(is_cm_complex(&complex, field)?.0)
}

/// Independent oracle for the sequential property via Duval's criterion on
/// the polarized complex.
pub fn is_scm_via_polarization(ideal: &MonomialIdeal, field: FieldSpec) -> Result<bool> {
    let complex = polarized_complex(ideal)?;
    Ok(is_scm_complex(&complex, field)?.0)
}

fn polarized_complex(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let (pol, _) = ideal.polarize();
    if pol.n() > MAX_AMBIENT {
        return Err(Error::LimitExceeded {
            what: "polarized ambient variable count",
            limit: MAX_AMBIENT,
            got: pol.n(),
        });
    }
    SimplicialComplex::stanley_reisner(&pol)
}
