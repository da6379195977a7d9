use std::fmt;

use super::quad::QuadRat;
use super::rat::Rat;

/// Point of the plane with quadratic coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadPoint {
    pub x: QuadRat,
    pub y: QuadRat,
}

impl QuadPoint {
    pub fn new(x: QuadRat, y: QuadRat) -> Self {
        Self { x, y }
    }

    pub fn from_rats(x: Rat, y: Rat) -> Self {
        Self {
            x: x.into(),
            y: y.into(),
        }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Self {
            x: x.into(),
            y: y.into(),
        }
    }

    pub fn origin() -> Self {
        Self::from_ints(0, 0)
    }

    pub fn is_origin(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.x.is_rational() && self.y.is_rational()
    }

    pub fn to_rats(&self) -> Option<(Rat, Rat)> {
        Some((self.x.to_rat()?, self.y.to_rat()?))
    }

    pub fn add(&self, o: &Self) -> Self {
        Self {
            x: &self.x + &o.x,
            y: &self.y + &o.y,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self {
            x: &self.x - &o.x,
            y: &self.y - &o.y,
        }
    }

    pub fn scale(&self, k: &Rat) -> Self {
        Self {
            x: self.x.scale(k),
            y: self.y.scale(k),
        }
    }

    pub fn scale_q(&self, k: &QuadRat) -> Self {
        Self {
            x: &self.x * k,
            y: &self.y * k,
        }
    }

    pub fn dot(&self, o: &Self) -> QuadRat {
        &(&self.x * &o.x) + &(&self.y * &o.y)
    }

    /// `self.x·o.y − self.y·o.x`; positive when `o` is counterclockwise of `self`.
    pub fn cross(&self, o: &Self) -> QuadRat {
        &(&self.x * &o.y) - &(&self.y * &o.x)
    }

    pub fn norm_sq(&self) -> QuadRat {
        self.dot(self)
    }

    pub fn in_closed_quadrant(&self) -> bool {
        !self.x.is_negative() && !self.y.is_negative()
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.x.to_f64(), self.y.to_f64())
    }
}

impl fmt::Display for QuadPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}
