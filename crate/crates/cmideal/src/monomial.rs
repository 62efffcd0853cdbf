//! Monomials, monomial ideals, weighted edge ideals, and the generator-wise
//! colon/radical calculus everything downstream is built on.
//!
//! Ideals are kept in a normal form: a minimal generating set (no generator
//! divides another), sorted by exponent vector, with the unit ideal flagged
//! explicitly rather than represented by a unit generator. Normal forms double
//! as memoization keys.

use crate::bits::VertexSet;
use crate::graph::{Graph, WeightFunction};
use std::fmt;

/// An exponent vector over a fixed ambient variable count.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Monomial {
        Monomial { exps }
    }

    pub fn unit(n: usize) -> Monomial {
        Monomial { exps: vec![0; n] }
    }

    pub fn var(n: usize, i: usize) -> Monomial {
        let mut exps = vec![0; n];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn n(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Indices with positive exponent.
    pub fn support(&self) -> VertexSet {
        VertexSet::from_iter(
            self.exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, _)| i),
        )
    }

    /// All exponents clamped to at most one.
    pub fn radical(&self) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|&e| e.min(1)).collect(),
        }
    }

    pub fn from_support(n: usize, support: VertexSet) -> Monomial {
        let mut exps = vec![0; n];
        for i in support.iter() {
            exps[i] = 1;
        }
        Monomial { exps }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(&a, &b)| a <= b)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a + b)
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|&a| a * k).collect(),
        }
    }

    /// `self / gcd(self, other)`.
    pub fn quotient_by_gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a - a.min(b))
                .collect(),
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
    unit: bool,
}

impl MonomialIdeal {
    /// Normalizes a generating set: drops generators divisible by another,
    /// sorts, deduplicates. A unit generator collapses the whole thing to the
    /// unit ideal (flagged, never stored as a generator).
    pub fn new(n: usize, gens: Vec<Monomial>) -> MonomialIdeal {
        for g in &gens {
            assert_eq!(g.n(), n, "generator ambient mismatch");
        }
        if gens.iter().any(|g| g.is_unit()) {
            return MonomialIdeal {
                n,
                gens: Vec::new(),
                unit: true,
            };
        }
        let mut minimal: Vec<Monomial> = Vec::with_capacity(gens.len());
        for g in gens {
            if minimal.iter().any(|m| m.divides(&g)) {
                continue;
            }
            minimal.retain(|m| !g.divides(m));
            minimal.push(g);
        }
        // canonical order: decreasing exponent-vector lex, so generators in
        // earlier variables print first
        minimal.sort_unstable_by(|a, b| b.cmp(a));
        MonomialIdeal {
            n,
            gens: minimal,
            unit: false,
        }
    }

    pub fn zero(n: usize) -> MonomialIdeal {
        MonomialIdeal {
            n,
            gens: Vec::new(),
            unit: false,
        }
    }

    pub fn unit_ideal(n: usize) -> MonomialIdeal {
        MonomialIdeal {
            n,
            gens: Vec::new(),
            unit: true,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Minimal generators, sorted by exponent vector. Empty for both the zero
    /// ideal and the unit ideal; check `is_unit` to tell them apart.
    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_unit(&self) -> bool {
        self.unit
    }

    pub fn is_proper(&self) -> bool {
        !self.unit
    }

    pub fn is_zero(&self) -> bool {
        !self.unit && self.gens.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.is_squarefree())
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.unit || self.gens.iter().any(|g| g.divides(m))
    }

    /// `{ m : m * u in self }`, minimally generated from the generator-wise
    /// quotients `f / gcd(f, u)`. Equals the unit ideal exactly when `u` lies
    /// in the ideal.
    pub fn colon(&self, u: &Monomial) -> MonomialIdeal {
        if self.unit {
            return MonomialIdeal::unit_ideal(self.n);
        }
        MonomialIdeal::new(
            self.n,
            self.gens.iter().map(|f| f.quotient_by_gcd(u)).collect(),
        )
    }

    /// Radical: generator-wise support monomials, minimalized.
    pub fn radical(&self) -> MonomialIdeal {
        if self.unit {
            return MonomialIdeal::unit_ideal(self.n);
        }
        MonomialIdeal::new(self.n, self.gens.iter().map(|g| g.radical()).collect())
    }

    /// `sqrt(self : u)`, generated by the radicals of the generator-wise
    /// quotients. Returns the unit ideal when `u` lies in the ideal.
    pub fn radical_colon(&self, u: &Monomial) -> MonomialIdeal {
        if self.unit {
            return MonomialIdeal::unit_ideal(self.n);
        }
        MonomialIdeal::new(
            self.n,
            self.gens
                .iter()
                .map(|f| f.quotient_by_gcd(u).radical())
                .collect(),
        )
    }

    /// Componentwise maximum exponent over the generators. Colon ideals
    /// `self : x^a` depend on `a` only through `min(a_i, bound_i)`, so the box
    /// `prod 0..=bound_i` is an exhaustive search space for them.
    pub fn exponent_bound(&self) -> Vec<u32> {
        let mut bound = vec![0u32; self.n];
        for g in &self.gens {
            for (b, &e) in bound.iter_mut().zip(g.exps()) {
                *b = (*b).max(e);
            }
        }
        bound
    }

    /// Sum of two ideals in the same ambient ring.
    pub fn plus(&self, other: &MonomialIdeal) -> MonomialIdeal {
        assert_eq!(self.n, other.n, "ambient mismatch");
        if self.unit || other.unit {
            return MonomialIdeal::unit_ideal(self.n);
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        MonomialIdeal::new(self.n, gens)
    }

    /// Standard polarization: `x_i^e` inside a generator becomes the product
    /// of the first `e` slot variables of `x_i`. Slots are laid out
    /// variable-major, slot-minor; variables absent from every generator keep
    /// one slot so the ambient ring stays a (free) polynomial extension.
    /// Returns the squarefree ideal together with the slot layout.
    pub fn polarize(&self) -> (MonomialIdeal, PolarizationMap) {
        let bound = self.exponent_bound();
        let slots: Vec<usize> = bound.iter().map(|&b| (b as usize).max(1)).collect();
        let mut offset = Vec::with_capacity(self.n);
        let mut total = 0usize;
        for &s in &slots {
            offset.push(total);
            total += s;
        }
        let map = PolarizationMap {
            slots,
            offset,
            total,
        };
        if self.unit {
            return (MonomialIdeal::unit_ideal(total), map);
        }
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut exps = vec![0u32; total];
                for (i, &e) in g.exps().iter().enumerate() {
                    for k in 0..e as usize {
                        exps[map.offset[i] + k] = 1;
                    }
                }
                Monomial::new(exps)
            })
            .collect();
        (MonomialIdeal::new(total, gens), map)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.unit {
            return write!(f, "(1)");
        }
        if self.gens.is_empty() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Slot layout of a polarization: variable `i` of the source ring owns the
/// contiguous block `offset[i] .. offset[i] + slots[i]` of target variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolarizationMap {
    pub slots: Vec<usize>,
    pub offset: Vec<usize>,
    pub total: usize,
}

impl PolarizationMap {
    /// Source variable and slot index of a target variable.
    pub fn source_of(&self, target: usize) -> (usize, usize) {
        let i = match self.offset.binary_search(&target) {
            Ok(i) => i,
            Err(i) => i - 1,
        };
        (i, target - self.offset[i])
    }
}

/// The ideal generated by `(x_u x_v)^{w(uv)}` over the edges of `g`, in the
/// ambient ring with one variable per vertex. Generators of distinct edges
/// never divide one another, which is asserted after minimalization.
pub fn weighted_edge_ideal(g: &Graph, w: &WeightFunction) -> MonomialIdeal {
    assert_eq!(
        w.as_slice().len(),
        g.edge_count(),
        "weight function does not match the graph's edge set"
    );
    let gens: Vec<Monomial> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(idx, &(u, v))| {
            let mut exps = vec![0u32; g.n()];
            exps[u] = w.get(idx);
            exps[v] = w.get(idx);
            Monomial::new(exps)
        })
        .collect();
    let ideal = MonomialIdeal::new(g.n(), gens);
    assert_eq!(
        ideal.gens().len(),
        g.edge_count(),
        "edge generators must already be minimal"
    );
    ideal
}

/// Plain edge ideal (all weights one).
pub fn edge_ideal(g: &Graph) -> MonomialIdeal {
    weighted_edge_ideal(g, &WeightFunction::all_ones(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{path_graph, suspension_of_cycle, WeightFunction};

    fn mono(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    #[test]
    fn support_and_radical() {
        let m = mono(&[2, 0, 1]);
        assert_eq!(m.support(), VertexSet::from_iter([0, 2]));
        assert_eq!(m.radical(), mono(&[1, 0, 1]));

        let unit = Monomial::unit(3);
        assert!(unit.support().is_empty());
        assert_eq!(unit.radical(), unit);

        let sf = mono(&[1, 1, 0]);
        assert_eq!(sf.radical(), sf);
    }

    #[test]
    fn ideal_normal_form() {
        // x0*x1 divides x0^2*x1, and duplicates collapse
        let i = MonomialIdeal::new(
            2,
            vec![mono(&[2, 1]), mono(&[1, 1]), mono(&[1, 1])],
        );
        assert_eq!(i.gens(), &[mono(&[1, 1])]);
        assert!(!i.is_unit());

        let u = MonomialIdeal::new(2, vec![mono(&[0, 0]), mono(&[1, 1])]);
        assert!(u.is_unit());
        assert!(u.gens().is_empty());
    }

    #[test]
    fn edge_ideal_of_p3() {
        let p3 = path_graph(3);
        let i = edge_ideal(&p3);
        assert_eq!(i.gens(), &[mono(&[1, 1, 0]), mono(&[0, 1, 1])]);
        assert!(i.is_squarefree());
    }

    #[test]
    fn single_edge_cubed() {
        let k2 = crate::graph::complete_graph(2);
        let w = WeightFunction::constant(&k2, 3);
        let i = weighted_edge_ideal(&k2, &w);
        assert_eq!(i.gens(), &[mono(&[3, 3])]);
    }

    #[test]
    fn weighted_suspension_degrees() {
        let g = suspension_of_cycle(4).unwrap();
        // 2 on cycle edges, 1 on pendants
        let weights: Vec<u32> = g
            .edges()
            .iter()
            .map(|&(u, v)| if u < 4 && v < 4 { 2 } else { 1 })
            .collect();
        let w = WeightFunction::new(&g, weights).unwrap();
        let i = weighted_edge_ideal(&g, &w);
        assert_eq!(i.gens().len(), 8);
        let mut degs: Vec<u32> = i.gens().iter().map(|g| g.degree()).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![2, 2, 2, 2, 4, 4, 4, 4]);
    }

    #[test]
    fn colon_basics() {
        let i = MonomialIdeal::new(3, vec![mono(&[1, 1, 0]), mono(&[0, 1, 1])]);
        let q = i.colon(&Monomial::var(3, 1));
        assert_eq!(q.gens(), &[mono(&[1, 0, 0]), mono(&[0, 0, 1])]);

        assert_eq!(i.colon(&Monomial::unit(3)), i);

        // u in I gives the unit ideal
        let q = i.colon(&mono(&[1, 1, 0]));
        assert!(q.is_unit());
    }

    /// Membership oracle: m is in I:u iff m*u is in I.
    fn colon_membership_oracle(i: &MonomialIdeal, u: &Monomial, max_deg: u32) -> Vec<Monomial> {
        let n = i.n();
        let mut found = Vec::new();
        let mut exps = vec![0u32; n];
        loop {
            let m = Monomial::new(exps.clone());
            if m.degree() <= max_deg && i.contains(&m.mul(u)) {
                found.push(m);
            }
            // odometer over exponent vectors bounded by max_deg per slot
            let mut k = n;
            loop {
                if k == 0 {
                    return found;
                }
                k -= 1;
                if exps[k] < max_deg {
                    exps[k] += 1;
                    break;
                }
                exps[k] = 0;
            }
        }
    }

    #[test]
    fn colon_example_against_membership_oracle() {
        // ((x0 x1)^2, x0 x2) : x0^2 x1 = (x1, x2)
        let i = MonomialIdeal::new(3, vec![mono(&[2, 2, 0]), mono(&[1, 0, 1])]);
        let u = mono(&[2, 1, 0]);
        let q = i.colon(&u);
        assert_eq!(q.gens(), &[mono(&[0, 1, 0]), mono(&[0, 0, 1])]);
        for m in colon_membership_oracle(&i, &u, 4) {
            assert!(q.contains(&m), "oracle says {m} is in the colon");
        }
        for mdeg in colon_membership_oracle(&q, &Monomial::unit(3), 4) {
            assert!(i.contains(&mdeg.mul(&u)), "colon overshoots at {mdeg}");
        }
    }

    #[test]
    fn radical_colon_matches_radical_of_colon() {
        let i = MonomialIdeal::new(3, vec![mono(&[2, 2, 0]), mono(&[1, 0, 1])]);
        for exps in [[0, 0, 0], [1, 0, 0], [2, 1, 0], [0, 1, 1], [2, 2, 1]] {
            let u = mono(&exps);
            assert_eq!(i.radical_colon(&u), i.colon(&u).radical());
        }
    }

    /// Radical-membership oracle by bounded saturation: a squarefree m lies in
    /// sqrt(I:u) iff m^k * u lies in I for some k.
    fn in_radical_colon_oracle(i: &MonomialIdeal, u: &Monomial, m: &Monomial) -> bool {
        let kmax = i
            .gens()
            .iter()
            .map(|g| g.degree())
            .max()
            .unwrap_or(0)
            .max(1);
        (1..=kmax).any(|k| i.contains(&m.pow(k).mul(u)))
    }

    #[test]
    fn radical_colon_against_saturation_oracle() {
        // ((x0 x1)^2) : x0 has radical (x0 x1)
        let i = MonomialIdeal::new(2, vec![mono(&[2, 2])]);
        let u = Monomial::var(2, 0);
        let r = i.radical_colon(&u);
        assert_eq!(r.gens(), &[mono(&[1, 1])]);
        // check against the oracle on every squarefree monomial
        for mask in 0u32..4 {
            let m = Monomial::from_support(2, VertexSet(mask));
            assert_eq!(
                r.contains(&m),
                in_radical_colon_oracle(&i, &u, &m),
                "disagreement at {m}"
            );
        }
    }

    #[test]
    fn radical_colon_of_unit_input() {
        let i = MonomialIdeal::new(2, vec![mono(&[2, 1])]);
        assert_eq!(i.radical_colon(&Monomial::unit(2)), i.radical());
        // u in I flags the unit ideal
        assert!(i.radical_colon(&mono(&[2, 1])).is_unit());
    }

    #[test]
    fn suspension_radical_colon_witness() {
        // weight 2 on cycle edges of the suspension of C4, 1 on pendants;
        // colon by x0 x1 x2 x3 leaves the plain 4-cycle ideal plus all
        // pendant variables
        let g = suspension_of_cycle(4).unwrap();
        let weights: Vec<u32> = g
            .edges()
            .iter()
            .map(|&(u, v)| if u < 4 && v < 4 { 2 } else { 1 })
            .collect();
        let w = WeightFunction::new(&g, weights).unwrap();
        let i = weighted_edge_ideal(&g, &w);
        let u = Monomial::new(vec![1, 1, 1, 1, 0, 0, 0, 0]);
        let r = i.radical_colon(&u);

        let cycle = crate::graph::cycle_graph(4).unwrap();
        let mut expected_gens: Vec<Monomial> = cycle
            .edges()
            .iter()
            .map(|&(u, v)| {
                let mut e = vec![0u32; 8];
                e[u] = 1;
                e[v] = 1;
                Monomial::new(e)
            })
            .collect();
        for y in 4..8 {
            expected_gens.push(Monomial::var(8, y));
        }
        assert_eq!(r, MonomialIdeal::new(8, expected_gens));
    }

    #[test]
    fn exponent_bound_and_stabilization() {
        let i = MonomialIdeal::new(2, vec![mono(&[2, 2])]);
        assert_eq!(i.exponent_bound(), vec![2, 2]);
        // colon depends on exponents only up to the bound
        let big = mono(&[7, 1]);
        let clamped = mono(&[2, 1]);
        assert_eq!(i.colon(&big), i.colon(&clamped));
        assert_eq!(i.radical_colon(&big), i.radical_colon(&clamped));
    }

    #[test]
    fn polarize_examples() {
        // squarefree ideals are fixed up to slot embedding
        let sf = MonomialIdeal::new(2, vec![mono(&[1, 1])]);
        let (p, map) = sf.polarize();
        assert_eq!(map.total, 2);
        assert_eq!(p.gens(), &[mono(&[1, 1])]);

        let sq = MonomialIdeal::new(1, vec![mono(&[2])]);
        let (p, map) = sq.polarize();
        assert_eq!(map.total, 2);
        assert_eq!(p.gens(), &[mono(&[1, 1])]);

        let sq2 = MonomialIdeal::new(2, vec![mono(&[2, 2])]);
        let (p, map) = sq2.polarize();
        assert_eq!(map.total, 4);
        assert_eq!(p.gens(), &[mono(&[1, 1, 1, 1])]);
        assert_eq!(map.source_of(0), (0, 0));
        assert_eq!(map.source_of(1), (0, 1));
        assert_eq!(map.source_of(3), (1, 1));
    }

    #[test]
    fn polarize_keeps_unused_variables() {
        // x1 appears in no generator but stays in the ring
        let i = MonomialIdeal::new(2, vec![mono(&[2, 0])]);
        let (p, map) = i.polarize();
        assert_eq!(map.slots, vec![2, 1]);
        assert_eq!(map.total, 3);
        assert_eq!(p.gens(), &[mono(&[1, 1, 0])]);
    }
}
