//! Exact weights of quadratic Boolean forms over GF(2).
//!
//! The weight of `f_G(x) = Σ_{ij ∈ E} x_i x_j` is the MS-number of the graph
//! state |G⟩: the number of basis states carrying a minus sign, equivalently
//! the number of induced subgraphs with an odd number of edges. It is
//! computed in polynomial time by reducing the form to a readonce form with
//! a checkable certificate ([`quadform::reduce_to_readonce`]).
//!
//! Modules:
//! - [`gf2`]: bit-packed vectors and matrices, rank, symplectic decomposition
//! - [`graph`]: graphs, graph6 and edge-list I/O, local complementation, pivots
//! - [`quadform`]: polynomials, readonce reduction, weights and the brute-force oracle
//! - [`graphstate`]: amplitudes, Walsh–Hadamard spectra, bentness, Schmidt rank
//! - [`closedforms`]: closed-form MS-numbers of standard families
//! - [`classify`]: classification of graph streams and pivot orbits
//! - [`enumerate`]: exhaustive and random graph sources

pub mod classify;
pub mod closedforms;
pub mod enumerate;
pub mod error;
pub mod gf2;
pub mod graph;
pub mod graphstate;
pub mod quadform;

pub use error::{Error, Result};
pub use gf2::{BitMatrix, BitVector};
pub use graph::{Bipartition, Graph};
pub use graphstate::{ms_number, plus_number};
pub use quadform::{
    brute_force_weight, reduce_to_readonce, verify_certificate, weight, QuadraticPolynomial,
    ReadonceForm, ReadonceKind, Reduction, ReductionCertificate,
};
