//! Lattice points, generating sets and Hilbert bases of rational cones.

mod cone3;
mod genset;
mod vec;

pub use cone3::{hilbert_basis_3d, project_to_plane, Cone3};
pub use genset::{GenSet, GenSet3};
pub use vec::{det3, IntVec2, IntVec3};

use crate::error::{Error, Result};

/// Rational cone of the plane spanned by two primitive rays, `lo` clockwise of
/// `hi`. `lo == hi` is a single ray.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cone2 {
    pub lo: IntVec2,
    pub hi: IntVec2,
}

impl Cone2 {
    /// Cone spanned by two nonzero vectors, in either order. Fails on a zero
    /// vector or on opposite directions.
    pub fn new(a: IntVec2, b: IntVec2) -> Result<Self> {
        let a = a.primitive().ok_or(Error::ZeroVector)?;
        let b = b.primitive().ok_or(Error::ZeroVector)?;
        let c = a.cross(&b);
        if c == 0 && a != b {
            return Err(Error::ConeNotPointed);
        }
        Ok(if c >= 0 {
            Self { lo: a, hi: b }
        } else {
            Self { lo: b, hi: a }
        })
    }

    pub fn ray(g: IntVec2) -> Result<Self> {
        Self::new(g, g)
    }

    pub fn is_ray(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, p: &IntVec2) -> bool {
        if self.is_ray() {
            return p.cross(&self.lo) == 0 && p.dot(&self.lo) >= 0;
        }
        self.lo.cross(p) >= 0 && p.cross(&self.hi) >= 0
    }

    pub fn interior_contains(&self, p: &IntVec2) -> bool {
        !self.is_ray() && self.lo.cross(p) > 0 && p.cross(&self.hi) > 0
    }

    /// Lattice points of the cone with ℓ1 norm in `1..=n`, lexicographic.
    pub fn points_up_to(&self, n: i64) -> Vec<IntVec2> {
        let mut out = Vec::new();
        for x in -n..=n {
            let rest = n - x.abs();
            for y in -rest..=rest {
                let p = IntVec2::new(x, y);
                if !p.is_zero() && self.contains(&p) {
                    out.push(p);
                }
            }
        }
        out
    }
}

/// Minimal generating subset of the semigroup generated by `points`
/// (all in `ℕ²`). Zero is dropped; duplicates merge.
pub fn minimalize(points: &[IntVec2]) -> GenSet {
    let mut cands: Vec<IntVec2> = points.iter().copied().filter(|p| !p.is_zero()).collect();
    assert!(
        cands.iter().all(IntVec2::is_nonneg),
        "minimalize expects points of N^2"
    );
    cands.sort_by_key(|p| (p.norm1(), *p));
    cands.dedup();
    if cands.is_empty() {
        return GenSet::empty();
    }
    let mx = cands.iter().map(|p| p.x).max().unwrap();
    let my = cands.iter().map(|p| p.y).max().unwrap();
    let w = (mx + 1) as usize;
    let idx = |p: IntVec2| p.y as usize * w + p.x as usize;
    let mut reach = vec![false; w * (my + 1) as usize];
    reach[0] = true;
    let mut kept: Vec<IntVec2> = Vec::new();
    let mut next = 0;
    for s in 1..=(mx + my) {
        // Kept generators all have norm < s, so a cell's status at level s
        // depends only on lower levels.
        for x in (s - my).max(0)..=s.min(mx) {
            let p = IntVec2::new(x, s - x);
            reach[idx(p)] = kept.iter().any(|g| g.le(&p) && reach[idx(p - *g)]);
        }
        while next < cands.len() && cands[next].norm1() == s {
            let p = cands[next];
            if !reach[idx(p)] {
                kept.push(p);
                reach[idx(p)] = true;
            }
            next += 1;
        }
        if next == cands.len() {
            break;
        }
    }
    GenSet::new(kept, true)
}

/// Whether `x` is a non-negative integer combination of `gens`.
pub fn member_of_generated(x: IntVec2, gens: &GenSet) -> bool {
    if x.is_zero() {
        return true;
    }
    if !x.is_nonneg() {
        return false;
    }
    let gs: Vec<IntVec2> = gens
        .iter()
        .copied()
        .filter(|g| g.le(&x) && g.is_nonneg())
        .collect();
    if gs.is_empty() {
        return false;
    }
    let w = (x.x + 1) as usize;
    let mut reach = vec![false; w * (x.y + 1) as usize];
    reach[0] = true;
    for yy in 0..=x.y {
        for xx in 0..=x.x {
            let p = IntVec2::new(xx, yy);
            if p.is_zero() {
                continue;
            }
            let r = gs.iter().any(|g| {
                g.le(&p) && {
                    let q = p - *g;
                    reach[q.y as usize * w + q.x as usize]
                }
            });
            reach[yy as usize * w + xx as usize] = r;
        }
    }
    reach[x.y as usize * w + x.x as usize]
}

/// Minimal generators of a numerical semigroup given by any generating set.
pub fn minimalize_1d(values: &[u64]) -> Vec<u64> {
    let mut vs: Vec<u64> = values.iter().copied().filter(|&v| v > 0).collect();
    vs.sort_unstable();
    vs.dedup();
    let Some(&max) = vs.last() else {
        return Vec::new();
    };
    let mut reach = vec![false; max as usize + 1];
    reach[0] = true;
    let mut kept: Vec<u64> = Vec::new();
    let mut next = 0;
    for t in 1..=max {
        reach[t as usize] = kept.iter().any(|&g| g <= t && reach[(t - g) as usize]);
        if next < vs.len() && vs[next] == t {
            if !reach[t as usize] {
                kept.push(t);
                reach[t as usize] = true;
            }
            next += 1;
        }
    }
    kept
}

/// Hilbert basis of `cone ∩ ℤ²`.
pub fn hilbert_basis_2d(cone: &Cone2) -> GenSet {
    if cone.is_ray() {
        return GenSet::new([cone.lo], true);
    }
    let (a, b) = (cone.lo, cone.hi);
    let det = a.cross(&b);
    let mut cands = vec![a, b];
    // Half-open fundamental parallelogram: p = λa + μb, 0 ≤ λ, μ < 1.
    let xs = [0, a.x, b.x, a.x + b.x];
    let ys = [0, a.y, b.y, a.y + b.y];
    for x in *xs.iter().min().unwrap()..=*xs.iter().max().unwrap() {
        for y in *ys.iter().min().unwrap()..=*ys.iter().max().unwrap() {
            let p = IntVec2::new(x, y);
            let l = p.cross(&b);
            let m = a.cross(&p);
            if (0..det).contains(&l) && (0..det).contains(&m) && !p.is_zero() {
                cands.push(p);
            }
        }
    }
    cands.sort();
    cands.dedup();
    let kept: Vec<IntVec2> = cands
        .iter()
        .copied()
        .filter(|p| !cands.iter().any(|g| g != p && cone.contains(&(*p - *g))))
        .collect();
    GenSet::new(kept, true)
}
