//! Semigroups spanned by dilations of a segment on a ray, and the modular
//! inequalities that describe them.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::body::RaySegment;
use crate::error::{Error, Result};
use crate::exactnum::{floor_div, QuadRat, Rat};
use crate::lattice::{minimalize_1d, GenSet, IntVec2};

/// Subsemigroup of `ℕ` given by generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumSG {
    pub gens: Vec<u64>,
    pub minimal: bool,
}

impl NumSG {
    /// Whether `t` is an `ℕ`-combination of the generators.
    pub fn contains(&self, t: u64) -> bool {
        let mut reach = vec![false; t as usize + 1];
        reach[0] = true;
        for v in 1..=t as usize {
            reach[v] = self
                .gens
                .iter()
                .any(|&g| g as usize <= v && reach[v - g as usize]);
        }
        reach[t as usize]
    }
}

fn to_u64(n: &BigInt) -> Result<u64> {
    n.to_u64()
        .ok_or_else(|| Error::Precondition(format!("integer {n} out of range")))
}

/// Whether the positive integer `t` lies in `i·[α, β]` for some `i ≥ 1`.
pub fn in_interval_dilation(t: u64, alpha: &QuadRat, beta: &QuadRat) -> bool {
    if t == 0 {
        return true;
    }
    let tq = QuadRat::from_int(t as i64);
    if alpha.is_zero() {
        return true;
    }
    // i ≥ t/β and i ≤ t/α
    let lo = (&tq / beta).ceil();
    let hi = (&tq / alpha).floor();
    lo <= hi
}

/// Smallest `k ≥ 1` with `kβ ≥ (k+1)α`: from there on consecutive dilations overlap.
pub fn overlap_index(alpha: &QuadRat, beta: &QuadRat) -> Result<BigInt> {
    let gap = beta.checked_sub(alpha)?;
    if !gap.is_positive() {
        return Err(Error::DegenerateInterval);
    }
    Ok(alpha.checked_div(&gap)?.ceil().max(BigInt::one()))
}

/// Minimal generators of `{t ∈ ℕ : iα ≤ t ≤ iβ for some i ∈ ℕ}`.
pub fn interval_semigroup_gens(alpha: &QuadRat, beta: &QuadRat) -> Result<NumSG> {
    if alpha.is_negative() {
        return Err(Error::Precondition("alpha must be non-negative".into()));
    }
    if alpha >= beta {
        return Err(Error::DegenerateInterval);
    }
    if alpha.is_zero() {
        return Ok(NumSG {
            gens: vec![1],
            minimal: true,
        });
    }
    let k = overlap_index(alpha, beta)?;
    // Every integer ≥ kα lies in some i[α, β] with i ≥ k.
    let tail = to_u64(&alpha.scale(&Rat::from_integer(k)).ceil())?.max(1);
    // A generator g ≥ 2·tail would split as tail + (g − tail).
    let cands: Vec<u64> = (1..2 * tail)
        .filter(|&t| in_interval_dilation(t, alpha, beta))
        .collect();
    Ok(NumSG {
        gens: minimalize_1d(&cands),
        minimal: true,
    })
}

/// Minimal generators of `(⋃ i·[P, Q]) ∩ ℕ²` for a segment on a rational ray.
pub fn segment_semigroup(seg: &RaySegment) -> Result<GenSet> {
    let g = seg.direction;
    let ts: Vec<u64> = if seg.alpha == seg.beta {
        // Single point α·g: multiples iα·g are lattice points iff iα ∈ ℕ.
        match seg.alpha.to_rat() {
            Some(a) if a.is_positive() => vec![to_u64(a.numer())?],
            Some(_) => vec![1],
            None => Vec::new(),
        }
    } else {
        interval_semigroup_gens(&seg.alpha, &seg.beta)?.gens
    };
    Ok(GenSet::new(ts.into_iter().map(|t| t as i64 * g), true))
}

/// Exact membership in the ray segment semigroup.
pub fn segment_member(x: IntVec2, seg: &RaySegment) -> bool {
    if x.is_zero() {
        return true;
    }
    let Some(t) = x.multiple_of(&seg.direction) else {
        return false;
    };
    if seg.alpha == seg.beta {
        // t = i·α for some integer i ≥ 1
        let Some(a) = seg.alpha.to_rat() else {
            return false;
        };
        if a.is_zero() {
            return false;
        }
        return (Rat::from_integer(t.into()) / a).is_integer();
    }
    in_interval_dilation(t as u64, &seg.alpha, &seg.beta)
}

/// `a·dX mod b ≤ dX` with `a = dQ/(dQ−dP)`, `b = dP·dQ/(dQ−dP)` and the
/// real remainder `x mod b = x − ⌊x/b⌋·b`.
pub fn modular_inequality_holds(dx: &QuadRat, dp: &QuadRat, dq: &QuadRat) -> Result<bool> {
    if dp == dq {
        return Err(Error::DegenerateInterval);
    }
    if !dp.is_positive() || dp > dq {
        return Err(Error::Precondition("need 0 < dP < dQ".into()));
    }
    if dx.is_negative() {
        return Err(Error::Precondition("need dX ≥ 0".into()));
    }
    let (a, b) = modular_pair(dp, dq)?;
    let ax = a.checked_mul(dx)?;
    let quot = floor_div(&ax, &b)?;
    let rem = ax.checked_sub(&b.scale(&Rat::from_integer(quot)))?;
    Ok(rem.quad_cmp(dx)?.is_le())
}

/// The pair `(dQ/(dQ−dP), dP·dQ/(dQ−dP))`.
pub fn modular_pair(dp: &QuadRat, dq: &QuadRat) -> Result<(QuadRat, QuadRat)> {
    let gap = dq.checked_sub(dp)?;
    if gap.is_zero() {
        return Err(Error::DegenerateInterval);
    }
    let a = dq.checked_div(&gap)?;
    let b = dp.checked_mul(dq)?.checked_div(&gap)?;
    Ok((a, b))
}

/// What the ray through `X` meets in the body: a point at distance `d_p`, or
/// a segment between distances `d_p < d_q`.
#[derive(Clone, Debug)]
pub enum RayTrace {
    Point { d_p: QuadRat },
    Segment { d_p: QuadRat, d_q: QuadRat },
}

/// A pair `(a, b)` with `a·dX mod b ≤ dX`, built as in the proof of the
/// inequality: `(2, 2·i·dP)` when `X = i·P`, the segment pair otherwise, and
/// `(2, 3)` for `X = 0`.
///
/// For a segment the pair satisfies `1 < a`, but `a < b` only when `dP > 1`.
pub fn general_inequality_witness(dx: &QuadRat, trace: &RayTrace) -> Result<(QuadRat, QuadRat)> {
    if dx.is_zero() {
        return Ok((QuadRat::from_int(2), QuadRat::from_int(3)));
    }
    match trace {
        RayTrace::Point { d_p } => {
            if !d_p.is_positive() {
                return Err(Error::Precondition("dP must be positive".into()));
            }
            let i = dx.checked_div(d_p)?;
            match i.to_rat() {
                Some(i) if i.is_integer() && i.is_positive() => {
                    let two = QuadRat::from_int(2);
                    Ok((two.clone(), d_p.scale(&(i * Rat::from_integer(2.into())))))
                }
                _ => Err(Error::NotMember),
            }
        }
        RayTrace::Segment { d_p, d_q } => {
            if !modular_inequality_holds(dx, d_p, d_q)? {
                return Err(Error::NotMember);
            }
            modular_pair(d_p, d_q)
        }
    }
}

/// Evaluates `a·x mod b ≤ x` for real `a, b` and `x`.
pub fn mod_le(a: &QuadRat, b: &QuadRat, x: &QuadRat) -> Result<bool> {
    let ax = a.checked_mul(x)?;
    let q = floor_div(&ax, b)?;
    let rem = ax.checked_sub(&b.scale(&Rat::from_integer(q)))?;
    Ok(rem <= *x)
}
