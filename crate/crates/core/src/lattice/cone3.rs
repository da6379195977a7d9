use num_integer::Integer;

use super::genset::{GenSet, GenSet3};
use super::vec::{det3, IntVec2, IntVec3};
use crate::error::{Error, Result};

/// Pointed rational cone of `ℝ³`, described by its extreme rays in cyclic
/// order around a positive functional.
#[derive(Clone, Debug)]
pub struct Cone3 {
    rays: Vec<IntVec3>,
}

impl Cone3 {
    pub fn new(rays: &[IntVec3]) -> Result<Self> {
        let mut prim: Vec<IntVec3> = Vec::new();
        for r in rays {
            let p = r.primitive().ok_or(Error::ZeroVector)?;
            if !prim.contains(&p) {
                prim.push(p);
            }
        }
        if prim.is_empty() {
            return Err(Error::ZeroVector);
        }
        let w = positive_functional(&prim).ok_or(Error::ConeNotPointed)?;
        Ok(Self {
            rays: cyclic_hull(&prim, &w),
        })
    }

    /// Extreme rays in counterclockwise order seen from inside the cone.
    pub fn rays(&self) -> &[IntVec3] {
        &self.rays
    }

    pub fn contains(&self, p: &IntVec3) -> bool {
        let r = &self.rays;
        match r.len() {
            1 => p.cross(&r[0]).is_zero() && p.dot(&r[0]) >= 0,
            2 => {
                let n = r[0].cross(&r[1]);
                p.dot(&n) == 0 && r[0].cross(p).dot(&n) >= 0 && p.cross(&r[1]).dot(&n) >= 0
            }
            m => (0..m).all(|i| det3(&r[i], &r[(i + 1) % m], p) >= 0),
        }
    }
}

fn span_dim(rays: &[IntVec3]) -> usize {
    let a = rays[0];
    let Some(b) = rays.iter().find(|r| !a.cross(r).is_zero()) else {
        return 1;
    };
    let n = a.cross(b);
    if rays.iter().any(|r| n.dot(r) != 0) {
        3
    } else {
        2
    }
}

/// Integer functional strictly positive on every ray, if the cone is pointed.
fn positive_functional(rays: &[IntVec3]) -> Option<IntVec3> {
    let ok = |w: &IntVec3| rays.iter().all(|r| w.dot(r) > 0);
    let mut dual: Vec<IntVec3> = Vec::new();
    match span_dim(rays) {
        1 => return Some(rays[0]).filter(ok),
        2 => {
            let a = rays[0];
            let b = *rays.iter().find(|r| !a.cross(r).is_zero()).unwrap();
            let n = a.cross(&b);
            for r in rays {
                let c = n.cross(r);
                for w in [c, IntVec3::new(-c.x, -c.y, -c.z)] {
                    if rays.iter().all(|s| w.dot(s) >= 0) {
                        dual.push(w);
                    }
                }
            }
        }
        _ => {
            for (i, a) in rays.iter().enumerate() {
                for b in &rays[i + 1..] {
                    let c = a.cross(b);
                    if c.is_zero() {
                        continue;
                    }
                    for w in [c, IntVec3::new(-c.x, -c.y, -c.z)] {
                        if rays.iter().all(|s| w.dot(s) >= 0) {
                            dual.push(w);
                        }
                    }
                }
            }
        }
    }
    // Sum of the dual cone's extreme rays lies in its interior when pointed.
    let w = dual
        .into_iter()
        .filter_map(|d| d.primitive())
        .fold(IntVec3::new(0, 0, 0), |acc, d| acc.add(&d));
    Some(w).filter(ok)
}

/// Extreme rays in cyclic order: a gift-wrap of the section by `w·p = 1`.
fn cyclic_hull(rays: &[IntVec3], w: &IntVec3) -> Vec<IntVec3> {
    if rays.len() == 1 {
        return rays.to_vec();
    }
    // Section points as exact fractions r/(w·r); compared by cross-multiplying.
    let wr = |r: &IntVec3| w.dot(r);
    // Distance along a common direction from `a`, scaled to compare collinear points.
    let farther = |a: &IntVec3, b: &IntVec3, c: &IntVec3| {
        // c strictly beyond b from a in the section.
        let sec = |r: &IntVec3, s: &IntVec3| -> [i128; 3] {
            let (wr_, ws) = (wr(r), wr(s));
            [
                s.x as i128 * wr_ - r.x as i128 * ws,
                s.y as i128 * wr_ - r.y as i128 * ws,
                s.z as i128 * wr_ - r.z as i128 * ws,
            ]
        };
        let ab = sec(a, b);
        let ac = sec(a, c);
        // ac = t·ab·(w·b)/(w·c) scaled; compare squared lengths with the scale removed.
        let len = |v: [i128; 3], s: i128| {
            let n = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
            (n, s * s)
        };
        let (nb, sb) = len(ab, wr(b));
        let (nc, sc) = len(ac, wr(c));
        nc * sb > nb * sc
    };
    if span_dim(rays) == 2 {
        // Two extreme rays: the pair with nothing strictly outside.
        let a = rays[0];
        let b = *rays.iter().find(|r| !a.cross(r).is_zero()).unwrap();
        let n = a.cross(&b);
        let lo = *rays
            .iter()
            .find(|r| rays.iter().all(|s| r.cross(s).dot(&n) >= 0))
            .unwrap();
        let hi = *rays
            .iter()
            .find(|r| rays.iter().all(|s| s.cross(r).dot(&n) >= 0))
            .unwrap();
        return vec![lo, hi];
    }
    let start = *rays
        .iter()
        .min_by(|a, b| {
            // Lexicographic order of section points.
            let key = |r: &IntVec3, s: &IntVec3| {
                (
                    (r.x as i128 * wr(s)).cmp(&(s.x as i128 * wr(r))),
                    (r.y as i128 * wr(s)).cmp(&(s.y as i128 * wr(r))),
                    (r.z as i128 * wr(s)).cmp(&(s.z as i128 * wr(r))),
                )
            };
            let (cx, cy, cz) = key(a, b);
            cx.then(cy).then(cz)
        })
        .unwrap();
    let mut hull = vec![start];
    let mut cur = start;
    loop {
        let mut cand: Option<IntVec3> = None;
        for r in rays {
            if *r == cur {
                continue;
            }
            cand = Some(match cand {
                None => *r,
                Some(c) => {
                    let d = det3(&cur, &c, r);
                    if d < 0 || (d == 0 && farther(&cur, &c, r)) {
                        *r
                    } else {
                        c
                    }
                }
            });
        }
        let next = cand.unwrap();
        if next == start {
            break;
        }
        hull.push(next);
        cur = next;
        assert!(hull.len() <= rays.len(), "gift wrap did not close");
    }
    hull
}

fn floor_div(a: i128, b: i128) -> i128 {
    Integer::div_floor(&a, &b)
}

fn ceil_div(a: i128, b: i128) -> i128 {
    -Integer::div_floor(&-a, &b)
}

/// Nonzero lattice points of the half-open parallelepiped of a simplicial cone.
fn parallelepiped_points(a: IntVec3, b: IntVec3, c: IntVec3, out: &mut Vec<IntVec3>) {
    let (b, c) = if det3(&a, &b, &c) < 0 { (c, b) } else { (b, c) };
    let det = det3(&a, &b, &c);
    let normals = [b.cross(&c), c.cross(&a), a.cross(&b)];
    let range = |f: fn(&IntVec3) -> i64| {
        let vs = [f(&a), f(&b), f(&c)];
        let lo: i64 = vs.iter().filter(|v| **v < 0).sum();
        let hi: i64 = vs.iter().filter(|v| **v > 0).sum();
        (lo, hi)
    };
    let (x0, x1) = range(|v| v.x);
    let (y0, y1) = range(|v| v.y);
    let (z0, z1) = range(|v| v.z);
    for x in x0..=x1 {
        for z in z0..=z1 {
            let (mut lo, mut hi) = (y0 as i128, y1 as i128);
            for n in &normals {
                // 0 ≤ k + n.y·y ≤ det − 1
                let k = n.x as i128 * x as i128 + n.z as i128 * z as i128;
                let ny = n.y as i128;
                if ny > 0 {
                    lo = lo.max(ceil_div(-k, ny));
                    hi = hi.min(floor_div(det - 1 - k, ny));
                } else if ny < 0 {
                    lo = lo.max(ceil_div(det - 1 - k, ny));
                    hi = hi.min(floor_div(-k, ny));
                } else if k < 0 || k > det - 1 {
                    hi = lo - 1;
                }
            }
            for y in lo..=hi {
                let p = IntVec3::new(x, y as i64, z);
                if !p.is_zero() {
                    out.push(p);
                }
            }
        }
    }
}

/// Points `λa + μb` with `0 ≤ λ, μ < 1` for two independent vectors of `ℤ³`.
fn parallelogram_points_3d(a: IntVec3, b: IntVec3, out: &mut Vec<IntVec3>) {
    let n = a.cross(&b);
    let nn = n.dot(&n);
    let range = |f: fn(&IntVec3) -> i64| {
        let vs = [f(&a), f(&b)];
        let lo: i64 = vs.iter().filter(|v| **v < 0).sum();
        let hi: i64 = vs.iter().filter(|v| **v > 0).sum();
        (lo, hi)
    };
    let (x0, x1) = range(|v| v.x);
    let (y0, y1) = range(|v| v.y);
    let (z0, z1) = range(|v| v.z);
    for x in x0..=x1 {
        for y in y0..=y1 {
            for z in z0..=z1 {
                let p = IntVec3::new(x, y, z);
                if p.is_zero() || p.dot(&n) != 0 {
                    continue;
                }
                // λ·|n|² = (p×b)·n, μ·|n|² = (a×p)·n
                let l = p.cross(&b).dot(&n);
                let m = a.cross(&p).dot(&n);
                if (0..nn).contains(&l) && (0..nn).contains(&m) {
                    out.push(p);
                }
            }
        }
    }
}

/// Hilbert basis of `cone(rays) ∩ ℤ³` for a pointed rational cone.
pub fn hilbert_basis_3d(rays: &[IntVec3]) -> Result<GenSet3> {
    let cone = Cone3::new(rays)?;
    let r = cone.rays();
    let mut cands: Vec<IntVec3> = r.to_vec();
    match r.len() {
        1 => return Ok(GenSet3::new(cands, true)),
        2 => parallelogram_points_3d(r[0], r[1], &mut cands),
        m => {
            for i in 1..m - 1 {
                parallelepiped_points(r[0], r[i], r[i + 1], &mut cands);
            }
        }
    }
    cands.sort();
    cands.dedup();
    let kept: Vec<IntVec3> = cands
        .iter()
        .copied()
        .filter(|p| !cands.iter().any(|g| g != p && cone.contains(&p.sub(g))))
        .collect();
    Ok(GenSet3::new(kept, true))
}

/// Image of a generating set under `(x,y,z) ↦ (x,y)`, minimalized.
pub fn project_to_plane(g: &GenSet3) -> GenSet {
    let pts: Vec<IntVec2> = g
        .points()
        .iter()
        .map(IntVec3::xy)
        .filter(|p| !p.is_zero())
        .collect();
    super::minimalize(&pts)
}
