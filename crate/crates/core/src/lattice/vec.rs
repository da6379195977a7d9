use std::fmt;
use std::ops::{Add, Mul, Sub};

/// Lattice point of the plane. Semigroup elements live in `ℕ²`; differences
/// may leave it, so the coordinates are signed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntVec2 {
    pub x: i64,
    pub y: i64,
}

impl IntVec2 {
    pub const ZERO: IntVec2 = IntVec2 { x: 0, y: 0 };

    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    pub fn norm1(&self) -> i64 {
        self.x.abs() + self.y.abs()
    }

    pub fn norm2_sq(&self) -> i64 {
        self.x * self.x + self.y * self.y
    }

    pub fn is_zero(&self) -> bool {
        self.x == 0 && self.y == 0
    }

    pub fn is_nonneg(&self) -> bool {
        self.x >= 0 && self.y >= 0
    }

    /// Componentwise `self ≤ o`.
    pub fn le(&self, o: &Self) -> bool {
        self.x <= o.x && self.y <= o.y
    }

    pub fn cross(&self, o: &Self) -> i64 {
        self.x * o.y - self.y * o.x
    }

    pub fn dot(&self, o: &Self) -> i64 {
        self.x * o.x + self.y * o.y
    }

    pub fn primitive(&self) -> Option<Self> {
        crate::exactnum::primitive((self.x, self.y))
            .ok()
            .map(|(x, y)| Self::new(x, y))
    }

    /// `Some(k)` when `self = k·g` for a non-negative integer `k`.
    pub fn multiple_of(&self, g: &Self) -> Option<i64> {
        if g.is_zero() || self.cross(g) != 0 {
            return None;
        }
        let k = if g.x != 0 { self.x / g.x } else { self.y / g.y };
        (k >= 0 && g.x * k == self.x && g.y * k == self.y).then_some(k)
    }
}

impl Add for IntVec2 {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for IntVec2 {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<IntVec2> for i64 {
    type Output = IntVec2;
    fn mul(self, v: IntVec2) -> IntVec2 {
        IntVec2::new(self * v.x, self * v.y)
    }
}

impl From<(i64, i64)> for IntVec2 {
    fn from((x, y): (i64, i64)) -> Self {
        Self::new(x, y)
    }
}

impl fmt::Display for IntVec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// Lattice point of space; used for lifted polygon cones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntVec3 {
    pub x: i64,
    pub y: i64,
    pub z: i64,
}

impl IntVec3 {
    pub const fn new(x: i64, y: i64, z: i64) -> Self {
        Self { x, y, z }
    }

    pub fn is_zero(&self) -> bool {
        self.x == 0 && self.y == 0 && self.z == 0
    }

    pub fn dot(&self, o: &Self) -> i128 {
        self.x as i128 * o.x as i128 + self.y as i128 * o.y as i128 + self.z as i128 * o.z as i128
    }

    pub fn cross(&self, o: &Self) -> IntVec3 {
        IntVec3::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }

    pub fn primitive(&self) -> Option<Self> {
        use num_integer::Integer;
        if self.is_zero() {
            return None;
        }
        let g = self.x.gcd(&self.y).gcd(&self.z);
        Some(Self::new(self.x / g, self.y / g, self.z / g))
    }

    pub fn xy(&self) -> IntVec2 {
        IntVec2::new(self.x, self.y)
    }
}

pub fn det3(a: &IntVec3, b: &IntVec3, c: &IntVec3) -> i128 {
    a.dot(&b.cross(c))
}

impl fmt::Display for IntVec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x, self.y, self.z)
    }
}
