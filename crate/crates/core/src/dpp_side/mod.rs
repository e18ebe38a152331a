//! Descending plane partitions and the set-valued near-balanced plane
//! partitions that extend them.

mod bcspp;
mod pairs;
mod sbcspp;
mod shape;
mod shifted;

pub use bcspp::{bcspp_weight, enumerate_bcspp, for_each_bcspp, gf_bcspp, Bcspp};
pub use pairs::{
    enumerate_dpp_pairs, for_each_dpp_pair, gf_dpp_pairs, pair_from_sbcspp, pair_weight, sbcspp_from_pair, DppPair,
};
pub use sbcspp::{
    dpp_sbcspp_to_dpp, dpp_to_dpp_sbcspp, enumerate_sbcspp, for_each_sbcspp, gf_sbcspp, involution_a, involution_b,
    is_dpp_sbcspp, principal, sbcspp_weight, Sbcspp,
};
pub use shape::{enumerate_near_balanced, NearBalancedShape};
pub use shifted::{class2_to_dpp, dpp_to_class2, enumerate_dpp, Dpp, ShiftedCsspp};
