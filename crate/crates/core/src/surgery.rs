//! Transformations of generating sets: replacing the part on a boundary ray,
//! removing finitely many elements, and the resulting generator-norm bound.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::lattice::{member_of_generated, minimalize, GenSet, IntVec2};

/// New generators for the semigroup on one boundary ray `τ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RaySurgerySpec {
    /// Primitive direction of `τ`.
    pub ray: IntVec2,
    /// Minimal generator of `ℕ² ∩ τ`.
    pub g1: IntVec2,
    /// Elements `λ_i·g1` that generate the new semigroup on `τ`.
    pub s_list: Vec<IntVec2>,
}

impl RaySurgerySpec {
    pub fn new(ray: IntVec2, s_list: Vec<IntVec2>) -> Result<Self> {
        let g1 = ray.primitive().ok_or(Error::ZeroVector)?;
        Ok(Self {
            ray: g1,
            g1,
            s_list,
        })
    }

    /// The multiples `λ_i`, sorted and deduplicated.
    pub fn lambdas(&self) -> Result<Vec<i64>> {
        let mut ls = Vec::with_capacity(self.s_list.len());
        for s in &self.s_list {
            match s.multiple_of(&self.g1) {
                Some(l) if l > 0 => ls.push(l),
                _ => return Err(Error::NotRayMultiple(*s, self.g1)),
            }
        }
        ls.sort_unstable();
        ls.dedup();
        Ok(ls)
    }
}

/// Generators of the semigroup that agrees with `⟨F⟩` off `τ` and with
/// `⟨s_list⟩` on `τ`, minimalized.
pub fn replace_ray_gens(f: &GenSet, spec: &RaySurgerySpec) -> Result<GenSet> {
    let lambdas = spec.lambdas()?;
    if !f.contains(&spec.g1) {
        return Err(Error::Precondition(format!(
            "{} is not a generator of F",
            spec.g1
        )));
    }
    let Some(&lt) = lambdas.last() else {
        return Err(Error::Precondition("empty list of ray generators".into()));
    };
    let g1 = spec.g1;
    let rest: Vec<IntVec2> = f.iter().copied().filter(|g| *g != g1).collect();
    let mut b: Vec<IntVec2> = lambdas.iter().map(|&l| l * g1).collect();
    b.extend(rest.iter().copied());
    for g in &rest {
        for j in 1..lt {
            b.push(*g + j * g1);
        }
    }
    Ok(minimalize(&b))
}

/// Minimal generators of `⟨F⟩ ∖ {a}` for a minimal generator `a`.
pub fn remove_element(f: &GenSet, a: IntVec2) -> Result<GenSet> {
    if !f.contains(&a) {
        return Err(Error::NotMinimalGenerator(a));
    }
    let rest: Vec<IntVec2> = f.iter().copied().filter(|g| *g != a).collect();
    let mut b = rest.clone();
    b.extend(rest.iter().map(|g| *g + a));
    b.push(2 * a);
    b.push(3 * a);
    Ok(minimalize(&b))
}

/// Minimal generators of `⟨F⟩ ∖ A`. At every step the lexicographically
/// smallest element of `A` that is a current minimal generator is removed;
/// elements of `A` outside the current semigroup are dropped.
pub fn remove_finite_set(f: &GenSet, a: &[IntVec2]) -> Result<GenSet> {
    let mut cur = f.clone();
    let mut rest: Vec<IntVec2> = a.iter().copied().filter(|p| !p.is_zero()).collect();
    rest.sort();
    rest.dedup();
    loop {
        rest.retain(|p| member_of_generated(*p, &cur));
        if rest.is_empty() {
            return Ok(cur);
        }
        let Some(pos) = rest.iter().position(|p| cur.contains(p)) else {
            return Err(Error::NotRemovable(rest));
        };
        let p = rest.remove(pos);
        cur = remove_element(&cur, p)?;
    }
}

/// Inputs of the generator-norm bound `3^l·(2k−1)·M`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundInputs {
    /// Largest `‖·‖₁` among the cone's minimal generators.
    pub m: u64,
    /// Largest multiple `k` defining the ray generators.
    pub k: u64,
    /// Number of removed exceptional points.
    pub l: u32,
}

pub fn generator_norm_bound(b: BoundInputs) -> BigUint {
    BigUint::from(3u32).pow(b.l) * BigUint::from(2 * b.k - 1) * BigUint::from(b.m)
}
