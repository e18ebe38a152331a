//! Alternating sign matrices, monotone triangles and their decorated variants.

mod arrowed;
mod asm;
mod recursion;
mod triangle;

pub use arrowed::{
    amt_weight, arrowings, enumerate_amt, enumerate_damt, gf_amt_enum, gf_damt_enum, ArrowedMt, Decoration,
    DownArrow, DownArrowedMt,
};
pub use asm::{asm_count, asm_to_mt, enumerate_asm, mt_to_asm, Asm};
pub use recursion::{gf_extended_recursion, gf_generalized_recursion, signed_interval};
pub use triangle::{enumerate_mt, mt_statistics, mt_weight_w0, MonotoneTriangle, MtStatistics};
