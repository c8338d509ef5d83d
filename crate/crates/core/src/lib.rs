//! Exact combinatorics of the Hecke congruence subgroups Γ₀(N).
//!
//! The coset space Γ₀(N)\PSL₂(Z) is modelled as the projective line
//! P¹(Z/NZ). The generators S and U of the modular group act on it from the
//! right, which turns the point set into the edge set of a dessin d'enfant
//! B₀,N: white vertices are the cycles of S, black vertices the cycles of U,
//! and faces (cusps) the cycles of the composite "U then S", i.e. the
//! translation T = [[1,0],[1,1]].
//!
//! From the dessin the crate derives torsion points, cusps and their widths,
//! the genus of X₀(N), the Conway lattice names L_{M,b} of every edge, the
//! Dirichlet series of the cusp count, and it checks the ramification of the
//! fifteen genus-zero Belyi maps symbolically.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

pub mod arith;
pub mod belyi;
pub mod cusps;
pub mod dessin;
mod error;
pub mod projline;

pub use error::{Error, Result};

/// The fifteen levels N for which X₀(N) has genus zero.
pub const GENUS_ZERO_LEVELS: [u64; 15] = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 16, 18, 25];
