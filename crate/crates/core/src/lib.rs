//! Quaternionic polynomial algebra and Lagrange interpolation over the
//! quaternions.
//!
//! Two families of polynomials are covered:
//!
//! * [`FormalPoly`], the formal ring `H[z]` with the central variable written
//!   to the left of its coefficients, star multiplication and left/right
//!   evaluation. Left interpolation from `H[z]` lives in [`hz`].
//! * [`TxyzPoly`], quaternion-valued polynomial functions of `q = t+ix+jy+kz`
//!   stored in the commuting real coordinates. Order-independent Lagrange
//!   interpolation for these lives in [`sym`]; regularity, harmonicity and the
//!   regular bases live in [`txyz`] and [`regular`].
//!
//! Linear algebra over the skew field (right-module unknowns, left-acting
//! coefficients) is in [`linalg`].
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod error;
pub mod formal;
pub mod hz;
pub mod linalg;
mod perm;
pub mod points;
pub mod quat;
pub mod regular;
pub mod sym;
pub mod txyz;

pub use error::{Error, Result};
pub use formal::{annihilator_hz, FormalPoly};
pub use hz::{
    interpolate_hz, newton_extend_hz, newton_interpolate_hz, similar_dependency_residual,
    similar_triple_gap, unisolvent_hz, NewtonUpdate,
};
pub use linalg::{gauss_solve, rank, QuatColumn, QuatMatrix};
pub use num_complex::Complex64;
pub use points::PointSet;
pub use quat::{coord_extract, similar, Quaternion, Tolerance};
pub use regular::{sudbery_basis, sudbery_basis_with, symmetrized_regular_basis, SudberyIndexing};
pub use sym::{
    barycentric_basis, barycentric_linear, cayley_dickson, cayley_dickson_by_identities,
    from_cayley_dickson, interpolate_sym, lagrange_basis, newton_step_sym, real_interpolate,
    sym_annihilator, LagrangeBasis, LagrangeChoice, NewtonBasis, RealInterpolant,
    MAX_SYM_DEGREE,
};
pub use txyz::{classify, dims, span_rank, Classification, DimKind, Exponent, QuatWord, TxyzPoly};
