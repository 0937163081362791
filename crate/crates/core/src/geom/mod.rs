//! Exact and numerical geometry of positroid cells and their images under
//! positive linear maps.

mod cell;
mod flag;
mod jacobian;
mod label;
pub mod linalg;
mod zmap;

pub use cell::{sample_cell_point, BridgeChain, CellPoint};
pub use flag::{inverse_flag_extension, intersection_dimension, schubert_member, subspace_in_schubert, FlagSpec};
pub use jacobian::{numeric_image_dimension, numerical_rank, DEFAULT_TOL};
pub use label::{grassmann_necklace, nonzero_plucker_set, plucker_coordinates, positroid_bases, positroid_label};
pub use linalg::{QMatrix, Q};
pub use zmap::{left_kernel, project, project_matrix, sample_positive_z, ZMap};
