//! Bounded-lattice enumeration under a monomial ideal: the complete set of
//! radicals `sqrt(I : u)` over monomials `u` outside `I`, associated primes,
//! unmixedness, and Krull dimension.
//!
//! Colon ideals `I : x^a` depend on each `a_i` only through
//! `min(a_i, bound_i)` where `bound_i` is the largest exponent of `x_i` among
//! the generators, so the finite box `prod 0..=bound_i` is an exhaustive
//! search space. For radicals the box shrinks further: if `a_i` is positive
//! but strictly below every exponent of `x_i` among generators containing
//! `x_i`, the quotient supports are unchanged by zeroing `a_i`, so only
//! `a_i
//! in {0} union {min_exp_i ..= bound_i}` needs visiting.

use crate::bits::VertexSet;
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use std::collections::HashSet;
use std::ops::ControlFlow;

/// Per-variable exponent values the lattice walk visits.
fn lattice_values(ideal: &MonomialIdeal, full: bool) -> Vec<Vec<u32>> {
    let n = ideal.n();
    let bound = ideal.exponent_bound();
    (0..n)
        .map(|i| {
            if full {
                return (0..=bound[i]).collect();
            }
            let min_exp = ideal
                .gens()
                .iter()
                .filter(|g| g.exp(i) > 0)
                .map(|g| g.exp(i))
                .min();
            match min_exp {
                None => vec![0],
                Some(lo) => {
                    let mut vals = vec![0];
                    vals.extend(lo..=bound[i]);
                    vals
                }
            }
        })
        .collect()
}

/// Walks lattice points `a` with `x^a` outside the ideal, handing each point
/// the sorted minimal support masks of `sqrt(I : x^a)`. Points are visited in
/// lexicographic exponent order (last variable fastest). Returns `false` when
/// the visitor broke early.
pub(crate) fn visit_associated_radicals<F>(ideal: &MonomialIdeal, full: bool, mut visit: F) -> bool
where
    F: FnMut(&[u32], &[u32]) -> ControlFlow<()>,
{
    assert!(ideal.is_proper(), "lattice walk needs a proper ideal");
    let n = ideal.n();
    let gens: Vec<&[u32]> = ideal.gens().iter().map(|g| g.exps()).collect();
    let values = lattice_values(ideal, full);
    let mut idx = vec![0usize; n];
    let mut point = vec![0u32; n];
    for (i, v) in values.iter().enumerate() {
        point[i] = v[0];
    }
    let mut masks: Vec<u32> = Vec::with_capacity(gens.len());
    let mut minimal: Vec<u32> = Vec::with_capacity(gens.len());
    loop {
        masks.clear();
        let mut inside = false;
        for g in &gens {
            let mut mask = 0u32;
            for (j, &e) in g.iter().enumerate() {
                if e > point[j] {
                    mask |= 1 << j;
                }
            }
            if mask == 0 {
                inside = true; // some generator divides x^a
                break;
            }
            masks.push(mask);
        }
        if !inside {
            minimal.clear();
            'outer: for (k, &m) in masks.iter().enumerate() {
                for (k2, &m2) in masks.iter().enumerate() {
                    // keep m only if no other mask is a strict subset and no
                    // earlier duplicate exists
                    if m2 & !m == 0 && (m2 != m || k2 < k) && k2 != k {
                        continue 'outer;
                    }
                }
                minimal.push(m);
            }
            minimal.sort_unstable();
            if let ControlFlow::Break(()) = visit(&point, &minimal) {
                return false;
            }
        }
        // odometer step
        let mut k = n;
        loop {
            if k == 0 {
                return true;
            }
            k -= 1;
            if idx[k] + 1 < values[k].len() {
                idx[k] += 1;
                point[k] = values[k][idx[k]];
                break;
            }
            idx[k] = 0;
            point[k] = values[k][0];
        }
    }
}

pub(crate) fn masks_to_ideal(n: usize, masks: &[u32]) -> MonomialIdeal {
    MonomialIdeal::new(
        n,
        masks
            .iter()
            .map(|&m| Monomial::from_support(n, VertexSet(m)))
            .collect(),
    )
}

/// The complete set `{ sqrt(I : u) : u a monomial outside I }`, one entry per
/// distinct radical, paired with the first witness monomial producing it (in
/// lexicographic lattice order).
pub fn enumerate_associated_radicals(ideal: &MonomialIdeal) -> Vec<(Monomial, MonomialIdeal)> {
    enumerate_radicals_inner(ideal, false)
}

/// Same set as [`enumerate_associated_radicals`] but walking the full
/// unreduced exponent box; used to validate the reduction.
pub fn enumerate_associated_radicals_full(ideal: &MonomialIdeal) -> Vec<(Monomial, MonomialIdeal)> {
    enumerate_radicals_inner(ideal, true)
}

fn enumerate_radicals_inner(ideal: &MonomialIdeal, full: bool) -> Vec<(Monomial, MonomialIdeal)> {
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut out = Vec::new();
    visit_associated_radicals(ideal, full, |point, masks| {
        if seen.insert(masks.to_vec()) {
            out.push((
                Monomial::new(point.to_vec()),
                masks_to_ideal(ideal.n(), masks),
            ));
        }
        ControlFlow::Continue(())
    });
    out
}

/// All associated primes of `S/I`, i.e. variable sets `P` with `I : u = (P)`
/// for some monomial `u` outside `I`, found by scanning the exponent box.
pub fn associated_primes(ideal: &MonomialIdeal) -> Vec<VertexSet> {
    assert!(ideal.is_proper(), "associated primes need a proper ideal");
    let n = ideal.n();
    let gens: Vec<&[u32]> = ideal.gens().iter().map(|g| g.exps()).collect();
    let values = lattice_values(ideal, true);
    let mut idx = vec![0usize; n];
    let mut point = vec![0u32; n];
    let mut found: HashSet<VertexSet> = HashSet::new();
    loop {
        // quotient exponents of every generator; prime iff the minimal
        // generators are exactly distinct single variables
        let mut inside = false;
        let mut quotients: Vec<Vec<u32>> = Vec::with_capacity(gens.len());
        for g in &gens {
            let q: Vec<u32> = g
                .iter()
                .enumerate()
                .map(|(j, &e)| e.saturating_sub(point[j]))
                .collect();
            if q.iter().all(|&e| e == 0) {
                inside = true;
                break;
            }
            quotients.push(q);
        }
        if !inside {
            let colon = MonomialIdeal::new(n, quotients.into_iter().map(Monomial::new).collect());
            let prime = !colon.is_zero()
                && colon
                    .gens()
                    .iter()
                    .all(|m| m.degree() == 1);
            if prime || colon.is_zero() {
                let vars = colon
                    .gens()
                    .iter()
                    .fold(VertexSet::EMPTY, |acc, m| acc.union(m.support()));
                found.insert(vars);
            }
        }
        let mut k = n;
        loop {
            if k == 0 {
                let mut out: Vec<VertexSet> = found.into_iter().collect();
                out.sort_unstable_by_key(|s| (s.len(), s.0));
                return out;
            }
            k -= 1;
            if idx[k] + 1 < values[k].len() {
                idx[k] += 1;
                point[k] = values[k][idx[k]];
                break;
            }
            idx[k] = 0;
            point[k] = values[k][0];
        }
    }
}

/// All associated primes have the same cardinality.
pub fn is_unmixed(ideal: &MonomialIdeal) -> bool {
    let primes = associated_primes(ideal);
    primes.windows(2).all(|w| w[0].len() == w[1].len())
}

/// Minimal transversals (hitting sets) of a list of support masks over
/// `0..n`. The empty list has the empty transversal.
pub(crate) fn minimal_transversals(n: usize, supports: &[u32]) -> Vec<u32> {
    let mut candidates: Vec<u32> = Vec::new();
    fn rec(supports: &[u32], current: u32, out: &mut Vec<u32>) {
        match supports.iter().find(|&&s| s & current == 0) {
            None => out.push(current),
            Some(&uncovered) => {
                let mut rest = uncovered;
                while rest != 0 {
                    let v = rest.trailing_zeros();
                    rest &= rest - 1;
                    rec(supports, current | 1 << v, out);
                }
            }
        }
    }
    rec(supports, 0, &mut candidates);
    candidates.sort_unstable_by_key(|c| c.count_ones());
    let mut minimal: Vec<u32> = Vec::new();
    for c in candidates {
        if !minimal.iter().any(|&m| m & !c == 0) {
            minimal.push(c);
        }
    }
    let _ = n;
    minimal.sort_unstable();
    minimal
}

/// Minimal primes of the radical, as variable sets: the minimal transversals
/// of the generator supports of `sqrt(I)`.
pub fn minimal_primes(ideal: &MonomialIdeal) -> Vec<VertexSet> {
    assert!(ideal.is_proper(), "minimal primes need a proper ideal");
    let supports: Vec<u32> = ideal.radical().gens().iter().map(|g| g.support().0).collect();
    minimal_transversals(ideal.n(), &supports)
        .into_iter()
        .map(VertexSet)
        .collect()
}

/// All minimal primes have the same cardinality (the radical-level notion of
/// unmixedness; weaker than [`is_unmixed`]).
pub fn is_unmixed_radical(ideal: &MonomialIdeal) -> bool {
    let primes = minimal_primes(ideal);
    primes.windows(2).all(|w| w[0].len() == w[1].len())
}

/// Krull dimension of `S/I`: the ambient count minus the smallest minimal
/// prime of the radical.
pub fn krull_dim(ideal: &MonomialIdeal) -> Result<usize> {
    if !ideal.is_proper() {
        return Err(Error::UnitIdeal);
    }
    let least = minimal_primes(ideal)
        .iter()
        .map(|p| p.len())
        .min()
        .unwrap_or(0);
    Ok(ideal.n() - least)
}
