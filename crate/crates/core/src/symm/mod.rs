//! Partitions, sparse symmetric functions in the monomial and Schur bases,
//! and the affine Stanley symmetric function.

mod kostka;
mod partition;
mod pieri;
mod stanley;
mod symfn;

pub use kostka::{monomial_to_schur, schur_to_monomial, KostkaTable};
pub use partition::{partitions_bounded, partitions_in_box, partitions_of, Partition};
pub use pieri::{pieri_multiply_ek, pieri_power_ek};
pub use stanley::{
    affine_stanley_monomial, affine_stanley_monomial_expansion, affine_stanley_schur,
    FactorizationCounter,
};
pub use symfn::{coeff_json, Basis, SymFn};
pub(crate) use symfn::{terms_repr, TermRepr};
