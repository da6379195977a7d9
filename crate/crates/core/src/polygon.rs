//! Convex polygonal semigroups `𝒫 = (⋃ iF) ∩ ℕ²`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::body::{ConeShape, FgVerdict, Polygon, RayHit, RayInfo};
use crate::error::{Error, Result};
use crate::exactnum::{QuadPoint, QuadRat, Rat};
use crate::lattice::{
    hilbert_basis_2d, hilbert_basis_3d, minimalize, project_to_plane, Cone2, GenSet, IntVec2,
    IntVec3,
};
use crate::ray::interval_semigroup_gens;
use crate::surgery::{remove_finite_set, replace_ray_gens, BoundInputs, RaySurgerySpec};

/// Which boundary ray of the cone.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `τ₁`, the ray of larger slope.
    Hi,
    /// `τ₂`, the ray of smaller slope.
    Lo,
}

/// Extremal rays of the polygon's cone and how each meets the polygon.
pub fn polygon_cone(p: &Polygon) -> ConeShape {
    let vs = p.vertices();
    let extreme = |side: Side| -> RayInfo {
        let mut best: Vec<&QuadPoint> = vec![&vs[0]];
        for v in &vs[1..] {
            let c = best[0].cross(v).signum();
            let better = match side {
                Side::Hi => c > 0,
                Side::Lo => c < 0,
            };
            if better {
                best = vec![v];
            } else if c == 0 {
                best.push(v);
            }
        }
        if best.len() == 1 {
            RayInfo::from_hit(RayHit::Point(best[0].clone()))
        } else {
            best.sort_by_key(|a| a.norm_sq());
            RayInfo::from_hit(RayHit::Segment(best[0].clone(), best[1].clone()))
        }
    };
    ConeShape::Rays {
        hi: extreme(Side::Hi),
        lo: extreme(Side::Lo),
    }
}

fn rays_of(p: &Polygon) -> (RayInfo, RayInfo) {
    match polygon_cone(p) {
        ConeShape::Rays { hi, lo } => (hi, lo),
        _ => unreachable!("a polygon with interior spans two rays"),
    }
}

/// Finitely generated iff both `F ∩ τ₁` and `F ∩ τ₂` contain a rational point.
pub fn polygon_fg_decision(p: &Polygon) -> FgVerdict {
    let (hi, lo) = rays_of(p);
    let bad: Vec<&str> = [("tau1", &hi), ("tau2", &lo)]
        .into_iter()
        .filter(|(_, r)| !r.hit.has_rational_point(r.primitive))
        .map(|(n, _)| n)
        .collect();
    if bad.is_empty() {
        FgVerdict::FinitelyGenerated
    } else {
        FgVerdict::NotFinitelyGenerated(format!(
            "{}: no rational point on the ray",
            bad.join(" and ")
        ))
    }
}

fn require_fg(p: &Polygon) -> Result<()> {
    match polygon_fg_decision(p) {
        FgVerdict::NotFinitelyGenerated(w) => Err(Error::NotFinitelyGenerated(w)),
        _ => Ok(()),
    }
}

fn to_i64(n: &BigInt) -> Result<i64> {
    n.to_i64()
        .ok_or_else(|| Error::Precondition(format!("{n} does not fit in 64 bits")))
}

/// `(P, 1)` scaled to a primitive integer vector.
fn lift(v: &QuadPoint) -> Result<IntVec3> {
    let (x, y) = v
        .to_rats()
        .ok_or_else(|| Error::Precondition(format!("vertex {v} is not rational")))?;
    let l = x.denom().lcm(y.denom());
    let lr = Rat::from_integer(l.clone());
    let xi = (&x * &lr).to_integer();
    let yi = (&y * &lr).to_integer();
    Ok(IntVec3::new(to_i64(&xi)?, to_i64(&yi)?, to_i64(&l)?)
        .primitive()
        .expect("nonzero"))
}

/// Minimal generators through the cone over `{(P_i, 1)}` in `ℕ³`.
pub fn polygon_min_gens_rational(p: &Polygon) -> Result<GenSet> {
    let rays = p.vertices().iter().map(lift).collect::<Result<Vec<_>>>()?;
    Ok(project_to_plane(&hilbert_basis_3d(&rays)?))
}

/// Minimal generators of a finitely generated polygonal semigroup.
pub fn polygon_min_gens(p: &Polygon) -> Result<GenSet> {
    require_fg(p)?;
    if p.is_rational() {
        polygon_min_gens_rational(p)
    } else {
        polygon_min_gens_decomposition(p)
    }
}

/// Generators through the decomposition into apex triangles and a middle
/// piece whose boundary rays both meet it in segments. Works for any
/// finitely generated polygon.
pub fn polygon_min_gens_decomposition(p: &Polygon) -> Result<GenSet> {
    require_fg(p)?;
    let d = decompose(p)?;
    let mut all: Vec<IntVec2> = corte_pipeline(&d.middle)?.gens.into_points();
    for t in &d.triangles {
        all.extend(triangle_min_gens(t)?.into_points());
    }
    Ok(minimalize(&all))
}

/// Pieces of a polygon cut along auxiliary rational rays.
#[derive(Clone, Debug)]
pub struct Decomposition {
    /// Triangles cut off next to the rays met in a single vertex.
    pub triangles: Vec<Polygon>,
    /// The rest; both boundary rays meet it in segments.
    pub middle: Polygon,
    /// Primitive directions of the cutting rays.
    pub cuts: Vec<IntVec2>,
}

/// `y/(x+y)`, increasing with the angle.
fn angle_param(v: &QuadPoint) -> QuadRat {
    &v.y / &(&v.x + &v.y)
}

/// Simplest rational number in the open interval `(lo, hi)` (`hi = None`
/// meaning `+∞`), for `0 ≤ lo < hi`.
pub fn simplest_between(lo: &QuadRat, hi: Option<&QuadRat>) -> Rat {
    let fl = lo.floor();
    let next = Rat::from_integer(&fl + 1);
    if hi.is_none_or(|h| QuadRat::from_rat(next.clone()) < *h) {
        return next;
    }
    let hi = hi.expect("bounded");
    let f = QuadRat::from_rat(Rat::from_integer(fl.clone()));
    let new_lo = (hi - &f).recip().expect("hi > floor(lo)");
    let gap = lo - &f;
    let new_hi = (!gap.is_zero()).then(|| gap.recip().expect("nonzero"));
    Rat::from_integer(fl) + simplest_between(&new_lo, new_hi.as_ref()).recip()
}

/// Direction of the cutting ray strictly between the ray at `v` and every
/// other vertex.
fn cut_direction(p: &Polygon, side: Side, v: &QuadPoint) -> IntVec2 {
    let tv = angle_param(v);
    let others = p.vertices().iter().filter(|w| *w != v).map(angle_param);
    let t = match side {
        Side::Hi => simplest_between(&others.max().expect("≥ 2 others"), Some(&tv)),
        Side::Lo => simplest_between(&tv, Some(&others.min().expect("≥ 2 others"))),
    };
    let (n, d) = (
        to_i64(t.numer()).expect("small"),
        to_i64(t.denom()).expect("small"),
    );
    IntVec2::new(d - n, n)
}

/// Part of a convex polygon on one side of the line through the origin
/// along `d` (`left`: counterclockwise side).
fn clip(vs: &[QuadPoint], d: IntVec2, left: bool) -> Vec<QuadPoint> {
    let dq = QuadPoint::from_ints(d.x, d.y);
    let side = |v: &QuadPoint| {
        let s = dq.cross(v).signum();
        if left {
            s
        } else {
            -s
        }
    };
    let n = vs.len();
    let mut out = Vec::new();
    for i in 0..n {
        let (p, q) = (&vs[i], &vs[(i + 1) % n]);
        let (sp, sq) = (side(p), side(q));
        if sp >= 0 {
            out.push(p.clone());
        }
        if sp * sq < 0 {
            let cp = dq.cross(p);
            let cq = dq.cross(q);
            let s = &cp / &(&cp - &cq);
            out.push(p.add(&q.sub(p).scale_q(&s)));
        }
    }
    out
}

pub fn decompose(p: &Polygon) -> Result<Decomposition> {
    let (hi, lo) = rays_of(p);
    let mut triangles = Vec::new();
    let mut cuts = Vec::new();
    let mut middle: Vec<QuadPoint> = p.vertices().to_vec();
    for (side, info) in [(Side::Hi, &hi), (Side::Lo, &lo)] {
        if let RayHit::Point(v) = &info.hit {
            let d = cut_direction(p, side, v);
            let tri = clip(p.vertices(), d, side == Side::Hi);
            triangles.push(Polygon::new(tri)?);
            middle = clip(&middle, d, side == Side::Lo);
            cuts.push(d);
        }
    }
    Ok(Decomposition {
        triangles,
        middle: Polygon::new(middle)?,
        cuts,
    })
}

/// Segment/segment pipeline: rays replaced by their interval semigroups,
/// then the finitely many interior lattice points outside `𝒫` removed.
#[derive(Clone, Debug)]
pub struct CortePipeline {
    pub cone: Cone2,
    pub hilbert: GenSet,
    pub s_hi: RaySurgerySpec,
    pub s_lo: RaySurgerySpec,
    pub sprime: GenSet,
    /// Interior points of larger `ℓ₁` norm all lie in `𝒫`.
    pub norm_cutoff: i64,
    pub exceptional: Vec<IntVec2>,
    pub gens: GenSet,
}

impl CortePipeline {
    pub fn bound_inputs(&self) -> BoundInputs {
        let k = [&self.s_hi, &self.s_lo]
            .iter()
            .filter_map(|s| s.lambdas().ok()?.last().copied())
            .max()
            .unwrap_or(1);
        BoundInputs {
            m: self.hilbert.max_norm1() as u64,
            k: k as u64,
            l: self.exceptional.len() as u32,
        }
    }
}

pub fn corte_pipeline(p: &Polygon) -> Result<CortePipeline> {
    let (hi, lo) = rays_of(p);
    let spec = |info: &RayInfo| -> Result<RaySurgerySpec> {
        let (Some(g), RayHit::Segment(..)) = (info.primitive, &info.hit) else {
            return Err(Error::Precondition(
                "both rays must meet the polygon in segments of rational slope".into(),
            ));
        };
        let (a, b) = info.params().expect("rational");
        let ls = interval_semigroup_gens(&a, &b)?.gens;
        RaySurgerySpec::new(g, ls.iter().map(|&l| l as i64 * g).collect())
    };
    let (s_hi, s_lo) = (spec(&hi)?, spec(&lo)?);
    let cone = Cone2::new(s_lo.g1, s_hi.g1)?;
    let hilbert = hilbert_basis_2d(&cone);
    let sprime = replace_ray_gens(&replace_ray_gens(&hilbert, &s_hi)?, &s_lo)?;
    // Along a direction with near/far ratio ρ the dilations overlap from
    // ℓ₁ norm ρ/(ρ−1)·(near ℓ₁) on; the ratio is smallest at a vertex.
    let rho = p
        .vertices()
        .iter()
        .map(|v| {
            let (s0, s1) = p.ray_range(v).expect("vertex lies in the polygon");
            &s1 / &s0
        })
        .min()
        .expect("vertices");
    let factor = &rho / &(&rho - &QuadRat::one());
    let norm_cutoff = to_i64(&(&factor * &p.max_l1()).floor())?;
    let mut exceptional: Vec<IntVec2> = cone
        .points_up_to(norm_cutoff)
        .into_par_iter()
        .filter(|x| cone.interior_contains(x) && !p.semigroup_contains(*x))
        .collect();
    exceptional.sort();
    let gens = remove_finite_set(&sprime, &exceptional)?;
    Ok(CortePipeline {
        cone,
        hilbert,
        s_hi,
        s_lo,
        sprime,
        norm_cutoff,
        exceptional,
        gens,
    })
}

/// Data for a triangle with one vertex `P₁ ∈ ℚ²` alone on its ray and the
/// opposite side on the other, rational-slope, ray.
#[derive(Clone, Debug)]
pub struct TriangleAnalysis {
    pub apex: QuadPoint,
    /// Primitive direction of the ray carrying the opposite side.
    pub base_ray: IntVec2,
    /// Near and far end of the opposite side, as multiples of `base_ray`.
    pub alpha: QuadRat,
    pub beta: QuadRat,
    /// Least `j` with `j·[P₁,P_far] ∩ (j+1)·[P₁,P_near] ≠ ∅` and `j·P₁ ∈ ℕ²`.
    pub j0: u64,
    /// Interior lattice points of `ℓ₁` norm at most `(j0+1)·max ℓ₁(F)` outside `𝒫`.
    pub exceptional: Vec<IntVec2>,
    /// Rational triangle with the same semigroup.
    pub rational: Polygon,
    pub gens: GenSet,
}

fn triangle_shape(f: &Polygon) -> Result<(QuadPoint, IntVec2, QuadRat, QuadRat)> {
    let bad = || {
        Error::Precondition(
            "expected a triangle with a rational apex on one ray and a side on the other".into(),
        )
    };
    if f.vertices().len() != 3 {
        return Err(bad());
    }
    let (hi, lo) = rays_of(f);
    let (apex, base) = match (&hi.hit, &lo.hit) {
        (RayHit::Point(v), RayHit::Segment(..)) => (v.clone(), lo),
        (RayHit::Segment(..), RayHit::Point(v)) => (v.clone(), hi),
        _ => return Err(bad()),
    };
    let g = base.primitive.ok_or_else(bad)?;
    if !apex.is_rational() {
        return Err(bad());
    }
    let (a, b) = base.params().expect("rational");
    Ok((apex, g, a, b))
}

fn denominator_lcm(v: &QuadPoint) -> BigInt {
    let (x, y) = v.to_rats().expect("rational");
    x.denom().lcm(y.denom())
}

/// Best approximations of `x` from below and above with denominators at most `n`.
fn best_bounds(x: &QuadRat, n: u64) -> (Rat, Rat) {
    let mut lo: Option<Rat> = None;
    let mut hi: Option<Rat> = None;
    for i in 1..=n {
        let ix = x.scale(&Rat::from_integer(i.into()));
        let d = BigInt::from(i);
        let (f, c) = (Rat::new(ix.floor(), d.clone()), Rat::new(ix.ceil(), d));
        if lo.as_ref().is_none_or(|l| f > *l) {
            lo = Some(f);
        }
        if hi.as_ref().is_none_or(|h| c < *h) {
            hi = Some(c);
        }
    }
    (lo.expect("n ≥ 1"), hi.expect("n ≥ 1"))
}

const COVER_LEVELS: u32 = 11;

/// Rational triangle `(P₁, α′g, β′g) ⊇ F`, accepted once each of its minimal
/// generators lies in `𝒫(F)`. At level `L`, `α′` is the simplest rational
/// between `α` and its best lower approximation with denominator `≤ 2^L`
/// (symmetrically for `β′`), so the candidates approach `α`, `β` from outside.
fn rational_cover(
    f: &Polygon,
    apex: &QuadPoint,
    g: IntVec2,
    a: &QuadRat,
    b: &QuadRat,
) -> Result<(Polygon, GenSet)> {
    let gq = |t: &Rat| QuadPoint::from_ints(g.x, g.y).scale(t);
    for level in 0..COVER_LEVELS {
        let n = 1u64 << level;
        let a1 = match a.to_rat() {
            Some(r) => r,
            None => {
                let (l, _) = best_bounds(a, n);
                let l = if l.is_positive() { l } else { Rat::zero() };
                let t = simplest_between(&QuadRat::from_rat(l), Some(a));
                if QuadRat::from_rat(t.clone()) >= *a {
                    continue;
                }
                t
            }
        };
        let b1 = match b.to_rat() {
            Some(r) => r,
            None => {
                let (_, h) = best_bounds(b, n);
                simplest_between(b, Some(&QuadRat::from_rat(h)))
            }
        };
        let cover = Polygon::new(vec![apex.clone(), gq(&a1), gq(&b1)])?;
        let gens = polygon_min_gens_rational(&cover)?;
        if gens.iter().all(|x| f.semigroup_contains(*x)) {
            return Ok((cover, gens));
        }
    }
    Err(Error::Precondition(
        "no rational triangle with the same semigroup found".into(),
    ))
}

pub fn triangle_analysis(f: &Polygon) -> Result<TriangleAnalysis> {
    let (apex, g, alpha, beta) = triangle_shape(f)?;
    let gq = QuadPoint::from_ints(g.x, g.y);
    let (near, far) = (gq.scale_q(&alpha), gq.scale_q(&beta));
    // j·P₁ + s·e1 = (j+1)·P₁ + t·e2 has constant solutions s = σj, t = −τ(j+1).
    let (e1, e2) = (far.sub(&apex), near.sub(&apex));
    let den = e1.cross(&e2);
    let s = &apex.cross(&e2) / &den;
    let t = &e1.cross(&apex) / &den;
    if s.is_negative() || t.is_positive() {
        return Err(Error::Precondition("dilated sides never meet".into()));
    }
    let k = denominator_lcm(&apex);
    let lower = s.ceil().max((-&t).ceil() - 1).max(BigInt::one());
    let j0 = to_i64(&(Integer::div_ceil(&lower, &k) * &k))? as u64;
    let (rational, gens) = if f.is_rational() {
        (f.clone(), polygon_min_gens_rational(f)?)
    } else {
        rational_cover(f, &apex, g, &alpha, &beta)?
    };
    let cone = rays_cone(f)?;
    let cutoff = to_i64(
        &f.max_l1()
            .scale(&Rat::from_integer((j0 + 1).into()))
            .floor(),
    )?;
    let mut exceptional: Vec<IntVec2> = cone
        .points_up_to(cutoff)
        .into_par_iter()
        .filter(|x| cone.interior_contains(x) && !f.semigroup_contains(*x))
        .collect();
    exceptional.sort();
    Ok(TriangleAnalysis {
        apex,
        base_ray: g,
        alpha,
        beta,
        j0,
        exceptional,
        rational,
        gens,
    })
}

pub fn triangle_min_gens(f: &Polygon) -> Result<GenSet> {
    Ok(triangle_analysis(f)?.gens)
}

fn rays_cone(p: &Polygon) -> Result<Cone2> {
    let (hi, lo) = rays_of(p);
    match (hi.primitive, lo.primitive) {
        (Some(h), Some(l)) => Cone2::new(l, h),
        _ => Err(Error::NotFinitelyGenerated(
            "irrational extremal ray".into(),
        )),
    }
}

/// `V_i = i·line(P₁, P_far) ∩ (i+1)·line(P_near, P₁)` where `P₁` is the only
/// point of the polygon on the chosen ray and the far neighbour is the one
/// whose edge has the polygon and the origin on the same side.
pub fn apex_point(p: &Polygon, side: Side, i: u64) -> Result<QuadPoint> {
    let (hi, lo) = rays_of(p);
    let info = if side == Side::Hi { hi } else { lo };
    let RayHit::Point(p1) = info.hit else {
        return Err(Error::Precondition(
            "the ray meets the polygon in a segment".into(),
        ));
    };
    let vs = p.vertices();
    let n = vs.len();
    let k = vs.iter().position(|v| *v == p1).expect("vertex");
    let (u, w) = (&vs[(k + n - 1) % n], &vs[(k + 1) % n]);
    let eu = u.sub(&p1);
    let origin_side = -eu.cross(&p1).signum();
    let body_side = eu.cross(&w.sub(&p1)).signum();
    let (far, near) = if origin_side == body_side {
        (u, w)
    } else {
        (w, u)
    };
    let (e1, e2) = (far.sub(&p1), near.sub(&p1));
    let den = e1.cross(&e2);
    let s = &p1.cross(&e2) / &den;
    let ir = Rat::from_integer(i.into());
    Ok(p1.scale(&ir).add(&e1.scale_q(&s)))
}

/// Squared distance from `V_i` to the ray; independent of `i`.
pub fn apex_strip_distance(p: &Polygon, side: Side) -> Result<QuadRat> {
    let v = apex_point(p, side, 1)?;
    let (hi, lo) = rays_of(p);
    let p1 = if side == Side::Hi {
        hi.hit.near().clone()
    } else {
        lo.hit.near().clone()
    };
    let c = p1.cross(&v);
    Ok(&c.square() / &p1.norm_sq())
}

/// Cone data and decisions for a polygon.
#[derive(Clone, Debug)]
pub struct PolygonAnalysis {
    pub hi: RayInfo,
    pub lo: RayInfo,
    pub verdict: FgVerdict,
    pub cone: Option<Cone2>,
    /// Squared apex-strip distance for each ray met in a single point.
    pub apex_dist_sq: (Option<QuadRat>, Option<QuadRat>),
}

impl PolygonAnalysis {
    pub fn new(p: &Polygon) -> Self {
        let (hi, lo) = rays_of(p);
        Self {
            verdict: polygon_fg_decision(p),
            cone: rays_cone(p).ok(),
            apex_dist_sq: (
                apex_strip_distance(p, Side::Hi).ok(),
                apex_strip_distance(p, Side::Lo).ok(),
            ),
            hi,
            lo,
        }
    }
}
