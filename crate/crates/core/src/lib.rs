// Negated float comparisons are deliberate: they reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod poly;
pub mod families;
pub mod crossing;
pub mod cli;
pub mod orbits;
