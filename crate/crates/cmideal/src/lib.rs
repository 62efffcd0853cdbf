//! Decides the Cohen-Macaulay and sequentially Cohen-Macaulay properties of
//! edge ideals of edge-weighted graphs, exactly, at desk scale.
//!
//! A weight function `w` on the edges of a simple graph `G` turns the edge
//! ideal into `I(G_w)`, generated by `(x_u x_v)^{w(uv)}`. Whether the quotient
//! by such an ideal is (sequentially) Cohen-Macaulay over a field is decided
//! here by a finite procedure:
//!
//! * every radical `sqrt(I : u)` over monomials `u` outside `I` is squarefree
//!   and there are finitely many of them (the exponent box of the generators
//!   bounds the search); the ideal is Cohen-Macaulay iff every such radical
//!   is Cohen-Macaulay of the full dimension `dim S/I`, and sequentially
//!   Cohen-Macaulay iff every radical is;
//! * each squarefree radical corresponds to a Stanley-Reisner complex, where
//!   Cohen-Macaulayness is Reisner's homological criterion on links and the
//!   sequential version is Duval's criterion on pure skeletons;
//! * reduced homology ranks are computed exactly, over the rationals by
//!   fraction-free elimination or over a prime field.
//!
//! Polarization provides an independent second route to both verdicts, and
//! the [`verify`] module packages exhaustive sweeps that compare structural
//! graph classifiers (disjoint unions of cliques, graphs whose chordless
//! cycles all have length 3 or 5) against the homological verdicts over every
//! small graph and weighting.

pub mod bits;
pub mod cm;
pub mod complex;
pub mod error;
pub mod graph;
pub mod homology;
pub mod io;
pub mod iso;
pub mod lattice;
pub mod monomial;
pub mod verify;

pub use bits::VertexSet;
pub use complex::SimplicialComplex;
pub use error::{Error, Result};
pub use graph::{Graph, WeightFunction};
pub use homology::{BettiVector, FieldSpec};
pub use monomial::{Monomial, MonomialIdeal};
