//! Convex bodies of the plane and the rational cone they span.

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::exactnum::{QuadPoint, QuadRat, Rat};
use crate::lattice::{Cone2, IntVec2};

/// Closed disc with center `(a, b)` and radius `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circle {
    pub a: Rat,
    pub b: Rat,
    pub r: Rat,
}

impl Circle {
    pub fn new(a: Rat, b: Rat, r: Rat) -> Result<Self> {
        if !r.is_positive() {
            return Err(Error::InvalidBody("radius must be positive".into()));
        }
        Ok(Self { a, b, r })
    }

    pub fn center(&self) -> QuadPoint {
        QuadPoint::from_rats(self.a.clone(), self.b.clone())
    }

    /// `a² + b²`.
    pub fn center_norm_sq(&self) -> Rat {
        &self.a * &self.a + &self.b * &self.b
    }

    /// `a² + b² − r²`, the squared tangent length from the origin.
    pub fn power_of_origin(&self) -> Rat {
        self.center_norm_sq() - &self.r * &self.r
    }

    pub fn contains_rat(&self, x: &Rat, y: &Rat) -> bool {
        let dx = x - &self.a;
        let dy = y - &self.b;
        &dx * &dx + &dy * &dy <= &self.r * &self.r
    }
}

/// Compact convex polygon with vertices in `ℚ(√D)²`, stored clockwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polygon {
    vertices: Vec<QuadPoint>,
}

impl Polygon {
    /// Accepts either orientation; rejects non-strictly-convex input, vertices
    /// outside the closed quadrant, the origin as a vertex, and mixed fields.
    pub fn new(vertices: Vec<QuadPoint>) -> Result<Self> {
        let n = vertices.len();
        if n < 3 {
            return Err(Error::InvalidBody(
                "a polygon needs at least 3 vertices".into(),
            ));
        }
        let mut disc: Option<&num_bigint::BigInt> = None;
        for v in &vertices {
            if !v.in_closed_quadrant() {
                return Err(Error::InvalidBody(format!(
                    "vertex {v} outside the closed quadrant"
                )));
            }
            if v.is_origin() {
                return Err(Error::InvalidBody("the origin cannot be a vertex".into()));
            }
            for c in [&v.x, &v.y] {
                if !c.is_rational() {
                    match disc {
                        Some(d) if d != c.disc() => {
                            return Err(Error::IncompatibleExtensions(d.clone(), c.disc().clone()))
                        }
                        _ => disc = Some(c.disc()),
                    }
                }
            }
        }
        // Every other vertex strictly on the same side of every edge.
        let mut side = 0i8;
        for i in 0..n {
            let p = &vertices[i];
            let e = vertices[(i + 1) % n].sub(p);
            for (j, v) in vertices.iter().enumerate() {
                if j == i || j == (i + 1) % n {
                    continue;
                }
                let s = e.cross(&v.sub(p)).signum();
                if s == 0 || (side != 0 && s != side) {
                    return Err(Error::InvalidBody("polygon is not strictly convex".into()));
                }
                side = s;
            }
        }
        let mut vertices = vertices;
        if side > 0 {
            vertices.reverse();
        }
        Ok(Self { vertices })
    }

    pub fn from_rats(vs: &[(Rat, Rat)]) -> Result<Self> {
        Self::new(
            vs.iter()
                .map(|(x, y)| QuadPoint::from_rats(x.clone(), y.clone()))
                .collect(),
        )
    }

    pub fn from_ints(vs: &[(i64, i64)]) -> Result<Self> {
        Self::new(
            vs.iter()
                .map(|&(x, y)| QuadPoint::from_ints(x, y))
                .collect(),
        )
    }

    /// Vertices in clockwise order.
    pub fn vertices(&self) -> &[QuadPoint] {
        &self.vertices
    }

    pub fn is_rational(&self) -> bool {
        self.vertices.iter().all(QuadPoint::is_rational)
    }

    /// Half-planes `cross(e, X) ≤ cross(e, P)` for each directed edge `e = Q − P`.
    pub fn half_planes(&self) -> Vec<(QuadPoint, QuadRat)> {
        let n = self.vertices.len();
        (0..n)
            .map(|i| {
                let p = &self.vertices[i];
                let e = self.vertices[(i + 1) % n].sub(p);
                let c = e.cross(p);
                (e, c)
            })
            .collect()
    }

    pub fn contains(&self, x: &QuadPoint) -> bool {
        self.half_planes().iter().all(|(e, c)| e.cross(x) <= *c)
    }

    /// Range `[s_lo, s_hi]` of `s ≥ 0` with `s·u ∈ F`, if the ray meets the polygon.
    pub fn ray_range(&self, u: &QuadPoint) -> Option<(QuadRat, QuadRat)> {
        let mut lo = QuadRat::zero();
        let mut hi: Option<QuadRat> = None;
        for (e, c) in self.half_planes() {
            let k = e.cross(u);
            match k.signum() {
                1 => {
                    let b = &c / &k;
                    hi = Some(match hi {
                        Some(h) if h <= b => h,
                        _ => b,
                    });
                }
                -1 => {
                    let b = &c / &k;
                    if b > lo {
                        lo = b;
                    }
                }
                _ => {
                    if c.is_negative() {
                        return None;
                    }
                }
            }
        }
        let hi = hi?;
        (lo <= hi).then_some((lo, hi))
    }

    /// Exact membership of a lattice point in the polygon semigroup.
    pub fn semigroup_contains(&self, x: IntVec2) -> bool {
        if x.is_zero() {
            return true;
        }
        let u = QuadPoint::from_ints(x.x, x.y);
        let Some((lo, hi)) = self.ray_range(&u) else {
            return false;
        };
        if hi.is_zero() {
            return false;
        }
        // X/i ∈ F ⇔ 1/i ∈ [lo, hi] ⇔ 1/hi ≤ i ≤ 1/lo
        let imin = hi.recip().expect("nonzero").ceil().max(1.into());
        if lo.is_zero() {
            return true;
        }
        let imax = lo.recip().expect("nonzero").floor();
        imin <= imax
    }

    pub fn max_l1(&self) -> QuadRat {
        self.vertices
            .iter()
            .map(|v| &v.x + &v.y)
            .max()
            .expect("non-empty")
    }
}

/// Segment `[α·u, β·u]` on the ray spanned by the primitive vector `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RaySegment {
    pub direction: IntVec2,
    pub alpha: QuadRat,
    pub beta: QuadRat,
}

impl RaySegment {
    /// `alpha = beta` is allowed and describes a single point.
    pub fn new(direction: IntVec2, alpha: QuadRat, beta: QuadRat) -> Result<Self> {
        if !direction.is_nonneg() {
            return Err(Error::InvalidBody(
                "direction must lie in the closed quadrant".into(),
            ));
        }
        let direction = direction.primitive().ok_or(Error::ZeroVector)?;
        if alpha.is_negative() {
            return Err(Error::Precondition("alpha must be non-negative".into()));
        }
        if alpha > beta {
            return Err(Error::DegenerateInterval);
        }
        Ok(Self {
            direction,
            alpha,
            beta,
        })
    }

    pub fn endpoints(&self) -> (QuadPoint, QuadPoint) {
        let u = QuadPoint::from_ints(self.direction.x, self.direction.y);
        (u.scale_q(&self.alpha), u.scale_q(&self.beta))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConvexBody2 {
    Circle(Circle),
    Polygon(Polygon),
    Segment(RaySegment),
}

/// How a boundary ray of the cone meets the body.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RayHit {
    Point(QuadPoint),
    /// Nearer endpoint first.
    Segment(QuadPoint, QuadPoint),
}

impl RayHit {
    pub fn near(&self) -> &QuadPoint {
        match self {
            RayHit::Point(p) | RayHit::Segment(p, _) => p,
        }
    }

    pub fn far(&self) -> &QuadPoint {
        match self {
            RayHit::Point(p) | RayHit::Segment(_, p) => p,
        }
    }

    /// Whether the intersection contains a point of `ℚ²`.
    pub fn has_rational_point(&self, primitive: Option<IntVec2>) -> bool {
        match self {
            RayHit::Point(p) => p.is_rational(),
            RayHit::Segment(..) => primitive.is_some(),
        }
    }
}

/// A boundary ray of the cone together with its intersection with the body.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RayInfo {
    /// Primitive direction when the slope is rational.
    pub primitive: Option<IntVec2>,
    pub hit: RayHit,
}

impl RayInfo {
    pub fn from_hit(hit: RayHit) -> Self {
        Self {
            primitive: rational_direction(hit.near()),
            hit,
        }
    }

    /// Parameters `(α, β)` with `near = α·g`, `far = β·g` for the primitive `g`.
    pub fn params(&self) -> Option<(QuadRat, QuadRat)> {
        let g = self.primitive?;
        let coord = |p: &QuadPoint| {
            if g.x != 0 {
                p.x.scale(&Rat::new(1.into(), g.x.into()))
            } else {
                p.y.scale(&Rat::new(1.into(), g.y.into()))
            }
        };
        Some((coord(self.hit.near()), coord(self.hit.far())))
    }

    pub fn is_rational_point(&self) -> bool {
        matches!(&self.hit, RayHit::Point(p) if p.is_rational())
    }
}

/// Primitive integer direction of the ray through `p`, if its slope is rational.
pub fn rational_direction(p: &QuadPoint) -> Option<IntVec2> {
    if p.is_origin() {
        return None;
    }
    if p.x.is_zero() {
        return Some(IntVec2::new(0, if p.y.is_positive() { 1 } else { -1 }));
    }
    let slope = (&p.y / &p.x).to_rat()?;
    let (n, d) = (slope.numer().clone(), slope.denom().clone());
    let sx = if p.x.is_positive() { 1 } else { -1 };
    let x: i64 = i64::try_from(d).ok()? * sx;
    let y: i64 = i64::try_from(n).ok()? * sx;
    IntVec2::new(x, y).primitive()
}

/// Verdict on finite generation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FgVerdict {
    FinitelyGenerated,
    NotFinitelyGenerated(String),
    /// The semigroup is `{0}`.
    TrivialZero,
    /// The semigroup is the whole cone `ℕ²`.
    FullCone,
}

/// Shape of `L_{ℚ≥}(F ∩ ℝ²≥)` and how its boundary rays meet the body.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConeShape {
    /// The body misses the closed quadrant; the semigroup is `{0}`.
    Zero,
    /// The origin lies in the body; the semigroup is all of `ℕ²`.
    FullQuadrant,
    /// The body meets the quadrant in one ray only (a point or a segment).
    SingleRay(RayInfo),
    /// Two distinct boundary rays; `hi` has the larger slope.
    Rays { hi: RayInfo, lo: RayInfo },
    /// The cone is not closed (origin on the boundary of the body); never
    /// finitely generated.
    Open(String),
}

impl ConeShape {
    /// The rational cone, when both boundary rays have rational slope.
    pub fn cone2(&self) -> Option<Cone2> {
        match self {
            ConeShape::FullQuadrant => Cone2::new(IntVec2::new(1, 0), IntVec2::new(0, 1)).ok(),
            ConeShape::SingleRay(r) => Cone2::ray(r.primitive?).ok(),
            ConeShape::Rays { hi, lo } => Cone2::new(lo.primitive?, hi.primitive?).ok(),
            _ => None,
        }
    }
}

/// The cone of a body and the exact intersection of each boundary ray with it.
pub fn cone_of_body(body: &ConvexBody2) -> Result<ConeShape> {
    match body {
        ConvexBody2::Circle(c) => Ok(crate::circle::tangent_rays(c)),
        ConvexBody2::Polygon(p) => Ok(crate::polygon::polygon_cone(p)),
        ConvexBody2::Segment(s) => {
            let (p, q) = s.endpoints();
            if s.alpha.is_zero() {
                return Ok(ConeShape::SingleRay(RayInfo {
                    primitive: Some(s.direction),
                    hit: RayHit::Segment(p, q),
                }));
            }
            let hit = if s.alpha == s.beta {
                RayHit::Point(p)
            } else {
                RayHit::Segment(p, q)
            };
            Ok(ConeShape::SingleRay(RayInfo {
                primitive: Some(s.direction),
                hit,
            }))
        }
    }
}
