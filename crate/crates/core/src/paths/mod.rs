//! Nonintersecting lattice paths for descending plane partitions, their
//! extension with region dependent weights, and the determinant algebra that
//! connects them to the closed formula.

mod identities;
mod lattice;
mod lgv;

pub use identities::{verify_identity, IdentityFailure, IDENTITY_NAMES, MAX_IDENTITY_ORDER};
pub use lattice::{
    dpp_pair_to_family, dpp_to_paths, enumerate_collapsed_families, enumerate_extended_families,
    family_to_dpp_pair, family_weight, for_each_extended_family, for_each_family_with_sources, gf_paths_enum,
    gf_paths_with_sources, paths_to_dpp, single_paths, LatticePath, PathFamily, PathKind, Step,
};
pub use lgv::{gf_lgv, lgv_subset, single_path_gf, single_path_sum, w_matrix, w_matrix_enum};
