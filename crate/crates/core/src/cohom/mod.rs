//! `H*(Gr(k, n))` as a quotient of symmetric functions: positroid classes,
//! truncation to `H*(Gr(k, k + m))`, kinematical support and projection degrees.

mod class;
mod ops;

pub use class::{complement, AmplituhedronClass, DegreeInfo, GrassmannClass, SchubertIndex};
pub use ops::{
    add_columns, amplituhedron_class, degree_gcd_bound, degree_top_cell, degree_via_pieri,
    duality_pair, kinematical_support, kinematical_support_by_coefficients, positroid_class,
    reduce_to_quotient, schubert_class, support_propagates_check, support_propagation_violations,
    support_table, truncate,
};
