//! Exact arithmetic: rationals, one real quadratic field per quantity, and
//! points with quadratic coordinates.

mod parse;
mod point;
mod quad;
mod rat;

pub use parse::{parse_quad, parse_rat};
pub use point::QuadPoint;
pub use quad::{floor_div, QuadRat};
pub use rat::{
    big, int, is_rational_square, primitive, primitive_big, rat, rat_floor_sqrt, sign_of,
    sqrt_bounds, square_free_split, to_f64, Rat,
};

use std::cmp::Ordering;

use crate::error::Result;

/// Exact order of two quadratic values from the same field.
pub fn quad_cmp(u: &QuadRat, v: &QuadRat) -> Result<Ordering> {
    u.quad_cmp(v)
}
