//! Circle semigroups `𝒮 = (⋃ iC) ∩ ℕ²`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::body::{Circle, ConeShape, FgVerdict, RayHit, RayInfo};
use crate::error::{Error, Result};
use crate::exactnum::{QuadPoint, QuadRat, Rat};
use crate::lattice::{hilbert_basis_2d, Cone2, GenSet, IntVec2};
use crate::ray::{
    interval_semigroup_gens, modular_inequality_holds, overlap_index, segment_semigroup,
};
use crate::surgery::{
    generator_norm_bound, remove_finite_set, replace_ray_gens, BoundInputs, RaySurgerySpec,
};

fn r(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// Boundary rays of the cone spanned by `C ∩ ℝ²≥`, classified exactly.
pub fn tangent_rays(c: &Circle) -> ConeShape {
    let l2 = c.power_of_origin();
    if l2.is_negative() {
        return ConeShape::FullQuadrant;
    }
    if l2.is_zero() {
        return if c.a.is_positive() && c.b.is_positive() {
            ConeShape::FullQuadrant
        } else if !c.a.is_positive() && !c.b.is_positive() {
            ConeShape::Zero
        } else {
            ConeShape::Open(
                "the origin lies on the circle and the cone of the body is not closed".into(),
            )
        };
    }
    let dx = if c.a.is_negative() {
        -c.a.clone()
    } else {
        Rat::zero()
    };
    let dy = if c.b.is_negative() {
        -c.b.clone()
    } else {
        Rat::zero()
    };
    let gap = &dx * &dx + &dy * &dy;
    let r2 = &c.r * &c.r;
    match gap.cmp(&r2) {
        Ordering::Greater => return ConeShape::Zero,
        Ordering::Equal => {
            // Touches one half-axis from outside the quadrant.
            let (g, p) = if c.a.is_negative() {
                (
                    IntVec2::new(0, 1),
                    QuadPoint::from_rats(Rat::zero(), c.b.clone()),
                )
            } else {
                (
                    IntVec2::new(1, 0),
                    QuadPoint::from_rats(c.a.clone(), Rat::zero()),
                )
            };
            return ConeShape::SingleRay(RayInfo {
                primitive: Some(g),
                hit: RayHit::Point(p),
            });
        }
        Ordering::Less => {}
    }
    let (tp, tm) = tangent_points(c);
    let hi = if tp.x.is_negative() {
        let h = QuadRat::sqrt_of(&(&r2 - &c.a * &c.a)).expect("chord");
        let b = QuadRat::from_rat(c.b.clone());
        RayInfo {
            primitive: Some(IntVec2::new(0, 1)),
            hit: RayHit::Segment(
                QuadPoint::new(QuadRat::zero(), &b - &h),
                QuadPoint::new(QuadRat::zero(), &b + &h),
            ),
        }
    } else {
        RayInfo::from_hit(RayHit::Point(tp))
    };
    let lo = if tm.y.is_negative() {
        let h = QuadRat::sqrt_of(&(&r2 - &c.b * &c.b)).expect("chord");
        let a = QuadRat::from_rat(c.a.clone());
        RayInfo {
            primitive: Some(IntVec2::new(1, 0)),
            hit: RayHit::Segment(
                QuadPoint::new(&a - &h, QuadRat::zero()),
                QuadPoint::new(&a + &h, QuadRat::zero()),
            ),
        }
    } else {
        RayInfo::from_hit(RayHit::Point(tm))
    };
    ConeShape::Rays { hi, lo }
}

/// Tangency points `(T₊, T₋)` of the tangent lines from the origin; `T₊` is
/// counterclockwise of the center. Requires the origin outside the disc.
pub fn tangent_points(c: &Circle) -> (QuadPoint, QuadPoint) {
    let l2 = c.power_of_origin();
    let l = QuadRat::sqrt_of(&l2).expect("origin outside the disc");
    let n2 = c.center_norm_sq();
    let base = QuadPoint::from_rats(&l2 * &c.a / &n2, &l2 * &c.b / &n2);
    let k = l.scale(&(&c.r / &n2));
    let perp = QuadPoint::new(k.scale(&-c.b.clone()), k.scale(&c.a));
    (base.add(&perp), base.sub(&perp))
}

pub fn circle_fg_decision(c: &Circle) -> FgVerdict {
    match tangent_rays(c) {
        ConeShape::Zero => FgVerdict::TrivialZero,
        ConeShape::FullQuadrant => FgVerdict::FullCone,
        ConeShape::Open(why) => FgVerdict::NotFinitelyGenerated(why),
        ConeShape::SingleRay(ray) => {
            if ray.hit.has_rational_point(ray.primitive) {
                FgVerdict::FinitelyGenerated
            } else {
                FgVerdict::NotFinitelyGenerated("the only point of the body is irrational".into())
            }
        }
        ConeShape::Rays { hi, lo } => {
            let bad: Vec<&str> = [("tau1", &hi), ("tau2", &lo)]
                .into_iter()
                .filter(|(_, ray)| !ray.hit.has_rational_point(ray.primitive))
                .map(|(n, _)| n)
                .collect();
            if bad.is_empty() {
                FgVerdict::FinitelyGenerated
            } else {
                let names = bad.join(" and ");
                FgVerdict::NotFinitelyGenerated(format!("{names}: tangency point irrational"))
            }
        }
    }
}

/// Exact membership: `X ∈ iC` for some integer `i ≥ 1`, decided from the
/// roots of `|X − i·c|² − i²r² = L²i² − 2(X·c)i + |X|²`.
pub fn circle_member(x: i64, y: i64, c: &Circle) -> bool {
    if x == 0 && y == 0 {
        return true;
    }
    let (xr, yr) = (r(x), r(y));
    let l2 = c.power_of_origin();
    let xc = &xr * &c.a + &yr * &c.b;
    let xx = &xr * &xr + &yr * &yr;
    if l2.is_negative() {
        return true;
    }
    if l2.is_zero() {
        return xc.is_positive();
    }
    let disc = &xc * &xc - &l2 * &xx;
    if disc.is_negative() {
        return false;
    }
    let s = QuadRat::sqrt_of(&disc).expect("non-negative");
    let xcq = QuadRat::from_rat(xc);
    let inv = l2.recip();
    let lo = (&xcq - &s).scale(&inv);
    let hi = (&xcq + &s).scale(&inv);
    let imin = lo.ceil().max(BigInt::one());
    imin <= hi.floor()
}

/// `a·d(X) mod b ≤ d(X)` for the chord that the ray through `X` cuts from
/// the disc, in units where `d(X) = 1`.
pub fn circle_modular_inequality(x: i64, y: i64, c: &Circle) -> Result<bool> {
    if x == 0 && y == 0 {
        return Err(Error::Precondition("X must be nonzero".into()));
    }
    let (xr, yr) = (r(x), r(y));
    let xx = &xr * &xr + &yr * &yr;
    let cross = &c.b * &xr - &c.a * &yr;
    let rad = &xx * &c.r * &c.r - &cross * &cross;
    match rad.cmp(&Rat::zero()) {
        Ordering::Less => return Err(Error::RayOutsideBody),
        Ordering::Equal => return Err(Error::Precondition("X lies on a tangent ray".into())),
        Ordering::Greater => {}
    }
    let xc = QuadRat::from_rat(&xr * &c.a + &yr * &c.b);
    let s = QuadRat::sqrt_of(&rad)?;
    let inv = xx.recip();
    let dp = (&xc - &s).scale(&inv);
    let dq = (&xc + &s).scale(&inv);
    if !dp.is_positive() {
        // The chord reaches the origin: every far enough dilation covers X.
        return Ok(true);
    }
    modular_inequality_holds(&QuadRat::one(), &dp, &dq)
}

/// Height `h_i` above a tangent ray of the lower intersection point of
/// `C_i` and `C_{i+1}`, in terms of the tangent length `L² = a²+b²−r²`.
/// `None` when the two discs are disjoint.
pub fn height(i: u64, l2: &Rat, rr: &Rat) -> Option<QuadRat> {
    let i = Rat::from_integer(i.into());
    let rad = r(4) * rr * rr * &i * (&i + r(1)) - l2;
    if rad.is_negative() {
        return None;
    }
    let s = QuadRat::sqrt_of(&rad).expect("non-negative");
    let den = r(2) * (l2 + rr * rr);
    let num = QuadRat::from_rat(l2 * rr * (r(1) + r(2) * &i)) - s.scale(l2);
    Some(num.scale(&den.recip()))
}

/// `h_i` for a circle with at least one tangent boundary ray.
pub fn overlap_height(i: u64, c: &Circle) -> Result<Option<QuadRat>> {
    match tangent_rays(c) {
        ConeShape::Rays { hi, lo }
            if matches!(hi.hit, RayHit::Point(_)) || matches!(lo.hit, RayHit::Point(_)) =>
        {
            Ok(height(i, &c.power_of_origin(), &c.r))
        }
        _ => Err(Error::HeightUndefined),
    }
}

fn below(h: &QuadRat, eps_sq: &Rat) -> bool {
    !h.is_positive() || h.square() < QuadRat::from_rat(eps_sq.clone())
}

/// Least `i` with `h_i` defined and `h_i < ε`, given `ε²`. The heights
/// decrease once defined, so a doubling search followed by bisection is exact.
pub fn first_height_below(l2: &Rat, rr: &Rat, eps_sq: &Rat) -> u64 {
    let ok = |i: u64| height(i, l2, rr).is_some_and(|h| below(&h, eps_sq));
    let defined = |i: u64| height(i, l2, rr).is_some();
    let mut lo = 1u64;
    while !defined(lo) {
        lo *= 2;
    }
    // Smallest defined index.
    let mut a = lo / 2;
    while a + 1 < lo {
        let m = (a + lo) / 2;
        if defined(m) {
            lo = m;
        } else {
            a = m;
        }
    }
    if ok(lo) {
        return lo;
    }
    let mut hi = lo * 2;
    while !ok(hi) {
        lo = hi;
        hi *= 2;
    }
    while lo + 1 < hi {
        let m = lo + (hi - lo) / 2;
        if ok(m) {
            hi = m;
        } else {
            lo = m;
        }
    }
    hi
}

/// Threshold and cutoff of the interior stabilization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stabilization {
    /// `d′²`: squared height of the lattice-free strips along the rays.
    pub d_prime_sq: Rat,
    pub i0: u64,
    /// `d²` with `d = i0·(|c| + r)`.
    pub d_sq: QuadRat,
}

fn ray_multiple(info: &RayInfo) -> Result<Vec<i64>> {
    let g = info
        .primitive
        .ok_or_else(|| Error::NotFinitelyGenerated("irrational ray".into()))?;
    match &info.hit {
        RayHit::Point(_) => {
            let (t, _) = info.params().expect("rational ray");
            let t = t.to_rat().ok_or_else(|| {
                Error::NotFinitelyGenerated(format!("tangency on {g} is irrational"))
            })?;
            Ok(vec![t.numer().to_i64().ok_or_else(|| {
                Error::Precondition("multiple too large".into())
            })?])
        }
        RayHit::Segment(..) => {
            let (a, b) = info.params().expect("rational ray");
            let sg = interval_semigroup_gens(&a, &b)?;
            Ok(sg.gens.iter().map(|&v| v as i64).collect())
        }
    }
}

/// Everything the generator computation derives from the circle.
#[derive(Clone, Debug)]
pub struct CircleAnalysis {
    pub circle: Circle,
    pub hi: RayInfo,
    pub lo: RayInfo,
    pub cone: Cone2,
    /// Minimal generators of the cone `𝒞 = L_{ℚ≥}(C) ∩ ℕ²`.
    pub hilbert: GenSet,
    /// `s_list` on `τ₁` and `τ₂` (multiples of the primitive ray vectors).
    pub s_hi: RaySurgerySpec,
    pub s_lo: RaySurgerySpec,
    pub stab: Stabilization,
}

impl CircleAnalysis {
    pub fn new(c: &Circle) -> Result<Self> {
        let (hi, lo) = match tangent_rays(c) {
            ConeShape::Rays { hi, lo } => (hi, lo),
            other => {
                return Err(Error::Precondition(format!(
                    "circle has no two-ray cone ({})",
                    shape_name(&other)
                )))
            }
        };
        if let FgVerdict::NotFinitelyGenerated(w) = circle_fg_decision(c) {
            return Err(Error::NotFinitelyGenerated(w));
        }
        let (g1, g2) = (
            hi.primitive.expect("rational"),
            lo.primitive.expect("rational"),
        );
        let cone = Cone2::new(g2, g1)?;
        let hilbert = hilbert_basis_2d(&cone);
        let spec = |info: &RayInfo, g: IntVec2| -> Result<RaySurgerySpec> {
            let ls = ray_multiple(info)?;
            RaySurgerySpec::new(g, ls.into_iter().map(|l| l * g).collect())
        };
        let s_hi = spec(&hi, g1)?;
        let s_lo = spec(&lo, g2)?;
        let stab = stabilization_of(c, &hi, &lo)?;
        Ok(Self {
            circle: c.clone(),
            hi,
            lo,
            cone,
            hilbert,
            s_hi,
            s_lo,
            stab,
        })
    }

    /// Largest multiple `λ` over both rays.
    pub fn k(&self) -> u64 {
        let m = |s: &RaySurgerySpec| {
            s.lambdas()
                .ok()
                .and_then(|l| l.last().copied())
                .unwrap_or(1)
        };
        m(&self.s_hi).max(m(&self.s_lo)) as u64
    }
}

fn shape_name(s: &ConeShape) -> &'static str {
    match s {
        ConeShape::Zero => "empty",
        ConeShape::FullQuadrant => "full quadrant",
        ConeShape::SingleRay(_) => "single ray",
        ConeShape::Rays { .. } => "two rays",
        ConeShape::Open(_) => "open cone",
    }
}

fn stabilization_of(c: &Circle, hi: &RayInfo, lo: &RayInfo) -> Result<Stabilization> {
    let mut d_prime_sq: Option<Rat> = None;
    for info in [hi, lo] {
        let g = info.primitive.expect("rational");
        let v = Rat::new(1.into(), (4 * g.norm2_sq()).into());
        d_prime_sq = Some(match d_prime_sq {
            Some(d) if d <= v => d,
            _ => v,
        });
    }
    let d_prime_sq = d_prime_sq.expect("two rays");
    let l2 = c.power_of_origin();
    let mut i0 = 1u64;
    for info in [hi, lo] {
        let i = match &info.hit {
            RayHit::Point(_) => first_height_below(&l2, &c.r, &d_prime_sq),
            RayHit::Segment(..) => {
                let (a, b) = info.params().expect("rational");
                overlap_index(&a, &b)?
                    .to_u64()
                    .ok_or_else(|| Error::Precondition("index too large".into()))?
            }
        };
        i0 = i0.max(i);
    }
    // d² = i0²·(|c| + r)²
    let norm = QuadRat::sqrt_of(&c.center_norm_sq())?;
    let d = (&norm + &QuadRat::from_rat(c.r.clone())).scale(&Rat::from_integer(i0.into()));
    Ok(Stabilization {
        d_prime_sq,
        i0,
        d_sq: d.square(),
    })
}

/// `d′`, `i0` and `d` of the interior stabilization.
pub fn stabilization(c: &Circle) -> Result<Stabilization> {
    match circle_fg_decision(c) {
        FgVerdict::FullCone => {
            return Ok(Stabilization {
                d_prime_sq: Rat::zero(),
                i0: 1,
                d_sq: QuadRat::zero(),
            })
        }
        FgVerdict::NotFinitelyGenerated(w) => return Err(Error::NotFinitelyGenerated(w)),
        _ => {}
    }
    match tangent_rays(c) {
        ConeShape::Rays { hi, lo } => stabilization_of(c, &hi, &lo),
        other => Err(Error::Precondition(format!(
            "no stabilization for a {} cone",
            shape_name(&other)
        ))),
    }
}

/// Generators of `𝒮′`: the cone's semigroup with the boundary rays replaced
/// by `𝒮 ∩ τ₁` and `𝒮 ∩ τ₂`.
pub fn sprime_generators(a: &CircleAnalysis) -> Result<GenSet> {
    let f1 = replace_ray_gens(&a.hilbert, &a.s_hi)?;
    replace_ray_gens(&f1, &a.s_lo)
}

/// Interior lattice points of the cone within distance `d` that miss `𝒮`.
pub fn exceptional_set(a: &CircleAnalysis) -> Vec<IntVec2> {
    let d_sq = &a.stab.d_sq;
    let n = d_sq.rat_bounds(32).1.ceil().to_integer();
    let n = rat_floor_sqrt_i64(&n) + 1;
    let mut out: Vec<IntVec2> = (0..=n)
        .into_par_iter()
        .flat_map_iter(|x| {
            (0..=n).filter_map(move |y| {
                let p = IntVec2::new(x, y);
                let inside = a.cone.interior_contains(&p)
                    && QuadRat::from_int(p.norm2_sq()).cmp_any(d_sq) != Ordering::Greater
                    && !circle_member(x, y, &a.circle);
                inside.then_some(p)
            })
        })
        .collect();
    out.sort();
    out
}

fn rat_floor_sqrt_i64(n: &BigInt) -> i64 {
    n.sqrt().to_i64().expect("small")
}

/// Minimal generators of the circle semigroup.
pub fn circle_min_gens(c: &Circle) -> Result<GenSet> {
    Ok(circle_pipeline(c)?.gens)
}

/// Intermediate and final results of the generator computation.
#[derive(Clone, Debug)]
pub struct CirclePipeline {
    pub analysis: Option<CircleAnalysis>,
    pub sprime: GenSet,
    pub exceptional: Vec<IntVec2>,
    pub gens: GenSet,
}

impl CirclePipeline {
    /// Inputs of the bound `3^l·(2k−1)·M` on generator norms.
    pub fn bound_inputs(&self) -> BoundInputs {
        match &self.analysis {
            Some(a) => BoundInputs {
                m: a.hilbert.max_norm1() as u64,
                k: a.k(),
                l: self.exceptional.len() as u32,
            },
            None => BoundInputs {
                m: self.gens.max_norm1().max(1) as u64,
                k: 1,
                l: 0,
            },
        }
    }

    pub fn bound(&self) -> num_bigint::BigUint {
        generator_norm_bound(self.bound_inputs())
    }
}

pub fn circle_pipeline(c: &Circle) -> Result<CirclePipeline> {
    let simple = |gens: GenSet| CirclePipeline {
        analysis: None,
        sprime: gens.clone(),
        exceptional: Vec::new(),
        gens,
    };
    match circle_fg_decision(c) {
        FgVerdict::TrivialZero => return Ok(simple(GenSet::empty())),
        FgVerdict::FullCone => {
            return Ok(simple(GenSet::new(
                [IntVec2::new(1, 0), IntVec2::new(0, 1)],
                true,
            )))
        }
        FgVerdict::NotFinitelyGenerated(w) => return Err(Error::NotFinitelyGenerated(w)),
        FgVerdict::FinitelyGenerated => {}
    }
    if let ConeShape::SingleRay(info) = tangent_rays(c) {
        let (t, _) = info.params().expect("axis");
        let seg = crate::body::RaySegment::new(info.primitive.expect("axis"), t.clone(), t)?;
        return Ok(simple(segment_semigroup(&seg)?));
    }
    let analysis = CircleAnalysis::new(c)?;
    let sprime = sprime_generators(&analysis)?;
    let exceptional = exceptional_set(&analysis);
    let gens = remove_finite_set(&sprime, &exceptional)?;
    Ok(CirclePipeline {
        analysis: Some(analysis),
        sprime,
        exceptional,
        gens,
    })
}
