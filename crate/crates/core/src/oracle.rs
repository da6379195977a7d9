//! Brute-force reference: dilation scans and naive generator extraction.
//! Shares nothing with the pipelines beyond exact arithmetic and the body
//! types' point-in-set predicates.

use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;

use crate::body::{Circle, ConvexBody2, Polygon, RaySegment};
use crate::exactnum::{sqrt_bounds, QuadPoint, QuadRat, Rat};
use crate::lattice::{GenSet, IntVec2};

/// A point set `F` whose dilations `iF` are scanned.
pub trait DilationBody: Sync {
    fn contains(&self, x: &Rat, y: &Rat) -> bool;

    /// Exact bounds `0 < lo ≤ ‖P‖₁ ≤ hi` over `P ∈ F ∩ ℝ²≥`; `None` when
    /// `F` reaches the origin.
    fn l1_window(&self) -> Option<(Rat, Rat)>;

    /// Integer description of `F`, when one fits in `i128`.
    fn integer_form(&self) -> Option<IntegerForm> {
        None
    }
}

/// `F` with denominators cleared, so that `X ∈ iF` is decided in `i128`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntegerForm {
    /// `F = {P : |dP − c| ≤ r}` for the integer centre `c` and radius `r`.
    Disc {
        d: i128,
        cx: i128,
        cy: i128,
        r: i128,
    },
    /// `F = {P : ex·Py − ey·Px ≤ c}` for each half-plane `(ex, ey, c)`.
    HalfPlanes(Vec<(i128, i128, i128)>),
}

impl IntegerForm {
    fn contains_dilated(&self, x: i128, y: i128, i: i128) -> bool {
        match self {
            IntegerForm::Disc { d, cx, cy, r } => {
                let (u, v) = (d * x - i * cx, d * y - i * cy);
                u * u + v * v <= i * i * r * r
            }
            IntegerForm::HalfPlanes(hp) => hp.iter().all(|&(ex, ey, c)| ex * y - ey * x <= i * c),
        }
    }
}

fn small(x: &Rat) -> Option<(i128, i128)> {
    Some((x.numer().to_i128()?, x.denom().to_i128()?))
}

fn lcm(a: i128, b: i128) -> i128 {
    a / num_integer::gcd(a, b) * b
}

const BITS: u32 = 64;

impl DilationBody for Circle {
    fn contains(&self, x: &Rat, y: &Rat) -> bool {
        self.contains_rat(x, y)
    }

    fn l1_window(&self) -> Option<(Rat, Rat)> {
        // ‖P‖₁ ≥ ‖P‖₂ ≥ |c| − r and ‖P‖₁ ≤ |a| + |b| + 2r.
        let (norm_lo, _) = sqrt_bounds(&self.center_norm_sq(), BITS);
        let lo = norm_lo - &self.r;
        let hi = self.a.abs() + self.b.abs() + &self.r * Rat::from_integer(2.into());
        lo.is_positive().then_some((lo, hi))
    }

    fn integer_form(&self) -> Option<IntegerForm> {
        let [a, b, r] = [&self.a, &self.b, &self.r].map(small);
        let (a, b, r) = (a?, b?, r?);
        let d = lcm(lcm(a.1, b.1), r.1);
        if d > 1 << 20 || [a.0, b.0, r.0].iter().any(|v| v.abs() > 1 << 30) {
            return None;
        }
        Some(IntegerForm::Disc {
            d,
            cx: a.0 * (d / a.1),
            cy: b.0 * (d / b.1),
            r: r.0 * (d / r.1),
        })
    }
}

impl DilationBody for Polygon {
    fn contains(&self, x: &Rat, y: &Rat) -> bool {
        Polygon::contains(self, &QuadPoint::from_rats(x.clone(), y.clone()))
    }

    fn l1_window(&self) -> Option<(Rat, Rat)> {
        let l1: Vec<QuadRat> = self.vertices().iter().map(|v| &v.x + &v.y).collect();
        let lo = l1.iter().min()?.rat_bounds(BITS).0;
        let hi = l1.iter().max()?.rat_bounds(BITS).1;
        lo.is_positive().then_some((lo, hi))
    }

    fn integer_form(&self) -> Option<IntegerForm> {
        let planes = self
            .half_planes()
            .iter()
            .map(|(e, c)| {
                let [ex, ey, c] = [e.x.to_rat()?, e.y.to_rat()?, c.to_rat()?].map(|v| small(&v));
                let (ex, ey, c) = (ex?, ey?, c?);
                let d = lcm(lcm(ex.1, ey.1), c.1);
                let out = (ex.0 * (d / ex.1), ey.0 * (d / ey.1), c.0 * (d / c.1));
                (d <= 1 << 20 && [out.0, out.1, out.2].iter().all(|v| v.abs() <= 1 << 40))
                    .then_some(out)
            })
            .collect::<Option<Vec<_>>>()?;
        Some(IntegerForm::HalfPlanes(planes))
    }
}

impl DilationBody for RaySegment {
    fn contains(&self, x: &Rat, y: &Rat) -> bool {
        let g = self.direction;
        if x * Rat::from_integer(g.y.into()) != y * Rat::from_integer(g.x.into()) {
            return false;
        }
        let t = if g.x != 0 {
            x / Rat::from_integer(g.x.into())
        } else {
            y / Rat::from_integer(g.y.into())
        };
        let t = QuadRat::from_rat(t);
        self.alpha <= t && t <= self.beta
    }

    fn l1_window(&self) -> Option<(Rat, Rat)> {
        let n = Rat::from_integer(self.direction.norm1().into());
        let lo = self.alpha.rat_bounds(BITS).0 * &n;
        let hi = self.beta.rat_bounds(BITS).1 * &n;
        lo.is_positive().then_some((lo, hi))
    }
}

impl DilationBody for ConvexBody2 {
    fn contains(&self, x: &Rat, y: &Rat) -> bool {
        match self {
            ConvexBody2::Circle(c) => c.contains(x, y),
            ConvexBody2::Polygon(p) => DilationBody::contains(p, x, y),
            ConvexBody2::Segment(s) => s.contains(x, y),
        }
    }

    fn l1_window(&self) -> Option<(Rat, Rat)> {
        match self {
            ConvexBody2::Circle(c) => c.l1_window(),
            ConvexBody2::Polygon(p) => p.l1_window(),
            ConvexBody2::Segment(s) => s.l1_window(),
        }
    }

    fn integer_form(&self) -> Option<IntegerForm> {
        match self {
            ConvexBody2::Circle(c) => c.integer_form(),
            ConvexBody2::Polygon(p) => p.integer_form(),
            ConvexBody2::Segment(_) => None,
        }
    }
}

/// Closed segment between two rational points.
#[derive(Clone, Debug)]
pub struct Segment {
    pub p: (Rat, Rat),
    pub q: (Rat, Rat),
}

impl Segment {
    pub fn new(p: (Rat, Rat), q: (Rat, Rat)) -> Self {
        Self { p, q }
    }
}

impl DilationBody for Segment {
    fn contains(&self, x: &Rat, y: &Rat) -> bool {
        let (ex, ey) = (&self.q.0 - &self.p.0, &self.q.1 - &self.p.1);
        let (dx, dy) = (x - &self.p.0, y - &self.p.1);
        if &ex * &dy != &ey * &dx {
            return false;
        }
        let t = &ex * &dx + &ey * &dy;
        !t.is_negative() && t <= &ex * &ex + &ey * &ey
    }

    fn l1_window(&self) -> Option<(Rat, Rat)> {
        let a = &self.p.0 + &self.p.1;
        let b = &self.q.0 + &self.q.1;
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        lo.is_positive().then_some((lo, hi))
    }
}

/// `{P : r_in ≤ |P| ≤ r_out}`; not convex.
#[derive(Clone, Debug)]
pub struct Annulus {
    pub r_in: Rat,
    pub r_out: Rat,
}

impl DilationBody for Annulus {
    fn contains(&self, x: &Rat, y: &Rat) -> bool {
        let n = x * x + y * y;
        &self.r_in * &self.r_in <= n && n <= &self.r_out * &self.r_out
    }

    fn l1_window(&self) -> Option<(Rat, Rat)> {
        let hi = &self.r_out * Rat::from_integer(2.into());
        self.r_in.is_positive().then(|| (self.r_in.clone(), hi))
    }
}

/// Number of small indices scanned for bodies that reach the origin.
const OPEN_SCAN: i64 = 4096;

/// A body with its window and integer form computed once.
struct Prepared<'a, B: ?Sized> {
    body: &'a B,
    window: Option<(Rat, Rat)>,
    form: Option<IntegerForm>,
}

impl<'a, B: DilationBody + ?Sized> Prepared<'a, B> {
    fn new(body: &'a B) -> Self {
        Self {
            body,
            window: body.l1_window(),
            form: body.integer_form(),
        }
    }

    fn member(&self, x: i64, y: i64) -> bool {
        if x == 0 && y == 0 {
            return true;
        }
        let (xr, yr) = (Rat::from_integer(x.into()), Rat::from_integer(y.into()));
        let at = |i: i64| match &self.form {
            Some(f) => f.contains_dilated(x.into(), y.into(), i.into()),
            None => {
                let ir = Rat::from_integer(i.into());
                self.body.contains(&(&xr / &ir), &(&yr / &ir))
            }
        };
        match &self.window {
            Some((lo, hi)) => {
                let n = Rat::from_integer((x + y).into());
                let first = (&n / hi).ceil().to_integer().max(1.into());
                let last = (&n / lo).floor().to_integer();
                let (Ok(first), Ok(last)) = (i64::try_from(first), i64::try_from(last)) else {
                    return false;
                };
                (first..=last).any(at)
            }
            None => (1..=OPEN_SCAN).any(at) || at(1 << 40),
        }
    }
}

/// `X ∈ iF` for some integer `i ≥ 1`. For bodies reaching the origin the
/// indices `1..=4096` and `2^40` are tested.
pub fn dilation_member<B: DilationBody + ?Sized>(x: i64, y: i64, body: &B) -> bool {
    Prepared::new(body).member(x, y)
}

/// Lattice points of `ℓ₁` norm at most `norm_bound` in the semigroup, sorted.
pub fn enumerate_members<B: DilationBody + ?Sized>(body: &B, norm_bound: i64) -> Vec<IntVec2> {
    let prep = Prepared::new(body);
    let prep = &prep;
    let mut out: Vec<IntVec2> = (0..=norm_bound)
        .into_par_iter()
        .flat_map_iter(|x| (0..=norm_bound - x).map(move |y| IntVec2::new(x, y)))
        .filter(|p| prep.member(p.x, p.y))
        .collect();
    out.sort();
    out
}

/// Members of norm at most `norm_bound` that are not a sum of two nonzero members.
pub fn naive_min_gens<B: DilationBody + ?Sized>(body: &B, norm_bound: i64) -> GenSet {
    let n = norm_bound.max(0) as usize;
    let w = n + 1;
    let mut member = vec![false; w * w];
    for p in enumerate_members(body, norm_bound) {
        member[p.x as usize * w + p.y as usize] = true;
    }
    let is = |x: usize, y: usize| member[x * w + y];
    let gens: Vec<IntVec2> = (0..w)
        .into_par_iter()
        .flat_map_iter(|x| (0..w - x).map(move |y| (x, y)))
        .filter(|&(x, y)| {
            if (x, y) == (0, 0) || !is(x, y) {
                return false;
            }
            for ux in 0..=x {
                for uy in 0..=y {
                    let trivial = (ux, uy) == (0, 0) || (ux, uy) == (x, y);
                    if !trivial && is(ux, uy) && is(x - ux, y - uy) {
                        return false;
                    }
                }
            }
            true
        })
        .map(|(x, y)| IntVec2::new(x as i64, y as i64))
        .collect();
    GenSet::new(gens, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn worked() -> Circle {
        Circle::new(rat(7, 3), rat(4, 3), rat(1, 3)).unwrap()
    }

    #[test]
    fn member_examples() {
        assert!(dilation_member(7, 4, &worked()));
        assert!(!dilation_member(2, 1, &worked()));
        let ann = Annulus {
            r_in: rat(3, 1),
            r_out: rat(5, 1),
        };
        assert!(!dilation_member(4, 4, &ann));
        assert!(dilation_member(4, 0, &ann));
        assert!(dilation_member(0, 4, &ann));
    }

    #[test]
    fn enumerate_examples() {
        let m = enumerate_members(&worked(), 10);
        for p in [(5, 3), (6, 4), (7, 3)] {
            assert!(m.contains(&IntVec2::from(p)));
        }
        assert!(!m.contains(&IntVec2::new(7, 4)));
        let m12 = enumerate_members(&worked(), 12);
        assert!(m12.contains(&IntVec2::new(7, 4)) && m12.contains(&IntVec2::new(7, 5)));
        assert!(!m.contains(&IntVec2::new(2, 1)) && !m.contains(&IntVec2::new(4, 3)));
        let far = Circle::new(rat(-5, 1), rat(-5, 1), rat(1, 1)).unwrap();
        assert_eq!(enumerate_members(&far, 10), vec![IntVec2::ZERO]);
        let full = Circle::new(rat(1, 2), rat(1, 2), rat(3, 4)).unwrap();
        assert_eq!(enumerate_members(&full, 2).len(), 6);
    }

    #[test]
    fn naive_gens_examples() {
        let seg = Segment::new((rat(2, 1), rat(0, 1)), (rat(0, 1), rat(2, 1)));
        let want = GenSet::new(
            [IntVec2::new(2, 0), IntVec2::new(0, 2), IntVec2::new(1, 1)],
            true,
        );
        assert_eq!(naive_min_gens(&seg, 30), want);
        let full = Circle::new(rat(1, 2), rat(1, 2), rat(3, 4)).unwrap();
        assert_eq!(
            naive_min_gens(&full, 20),
            GenSet::new([IntVec2::new(1, 0), IntVec2::new(0, 1)], true)
        );
    }

    #[test]
    fn integer_form_matches_rational_test() {
        let bodies: Vec<ConvexBody2> = vec![
            ConvexBody2::Circle(worked()),
            ConvexBody2::Circle(Circle::new(rat(1, 2), rat(3, 1), rat(7, 10)).unwrap()),
            ConvexBody2::Polygon(
                Polygon::from_rats(&[
                    (rat(3, 2), rat(1, 1)),
                    (rat(2, 1), rat(3, 1)),
                    (rat(5, 1), rat(2, 1)),
                ])
                .unwrap(),
            ),
            ConvexBody2::Polygon(Polygon::from_ints(&[(1, 0), (0, 1), (1, 1)]).unwrap()),
        ];
        for b in &bodies {
            let f = b.integer_form().unwrap();
            for i in 1..6i64 {
                for x in 0..30i64 {
                    for y in 0..30i64 {
                        let (xr, yr) = (rat(x, i), rat(y, i));
                        assert_eq!(
                            f.contains_dilated(x.into(), y.into(), i.into()),
                            b.contains(&xr, &yr),
                            "{b:?} {x} {y} {i}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn ray_segment_body() {
        let s = RaySegment::new(
            IntVec2::new(1, 0),
            QuadRat::from_rat(rat(7, 3)),
            QuadRat::from_rat(rat(7, 2)),
        )
        .unwrap();
        let g = naive_min_gens(&s, 40);
        assert_eq!(
            g.points(),
            &[IntVec2::new(3, 0), IntVec2::new(5, 0), IntVec2::new(7, 0)]
        );
    }
}
