//! Helpers over arbitrary-precision rationals.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational number. Always reduced, denominator positive.
pub type Rat = BigRational;

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn big(n: &BigInt) -> Rat {
    Rat::from_integer(n.clone())
}

/// Largest integer `n` with `n² ≤ x`.
pub fn rat_floor_sqrt(x: &Rat) -> Result<BigInt> {
    if x.is_negative() {
        return Err(Error::NegativeRadicand);
    }
    // floor(sqrt(p/q)) = floor(sqrt(p*q) / q) = floor(isqrt(p*q) / q)
    let p = x.numer();
    let q = x.denom();
    let s = (p * q).sqrt();
    Ok(s.div_floor(q))
}

/// `Some(s)` with `s ≥ 0` and `s² = x` when `x` is the square of a rational.
pub fn is_rational_square(x: &Rat) -> Option<Rat> {
    if x.is_negative() {
        return None;
    }
    let p = x.numer().sqrt();
    let q = x.denom().sqrt();
    if &(&p * &p) == x.numer() && &(&q * &q) == x.denom() {
        Some(Rat::new(p, q))
    } else {
        None
    }
}

/// Divides an integer vector by the gcd of its coordinates.
pub fn primitive(v: (i64, i64)) -> Result<(i64, i64)> {
    if v == (0, 0) {
        return Err(Error::ZeroVector);
    }
    let g = v.0.gcd(&v.1);
    Ok((v.0 / g, v.1 / g))
}

pub fn primitive_big(x: &BigInt, y: &BigInt) -> Result<(BigInt, BigInt)> {
    if x.is_zero() && y.is_zero() {
        return Err(Error::ZeroVector);
    }
    let g = x.gcd(y);
    Ok((x / &g, y / &g))
}

/// Splits `n > 0` as `root² · free` with `free` square-free.
///
/// Trial division up to 10⁶ followed by a perfect-square test on the cofactor.
/// A cofactor above 10¹² that is neither prime nor a perfect square could in
/// principle hide a square factor; such inputs do not arise from desk-scale data.
pub fn square_free_split(n: &BigUint) -> (BigUint, BigUint) {
    let mut rest = n.clone();
    let mut root = BigUint::one();
    let mut free = BigUint::one();
    if rest.is_zero() {
        return (BigUint::zero(), BigUint::one());
    }
    let mut p: u64 = 2;
    while p <= 1_000_000 {
        let bp = BigUint::from(p);
        if &bp * &bp > rest {
            break;
        }
        let mut e = 0u32;
        while (&rest % &bp).is_zero() {
            rest /= &bp;
            e += 1;
        }
        if e > 0 {
            root *= bp.pow(e / 2);
            if e % 2 == 1 {
                free *= &bp;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if !rest.is_one() {
        let s = rest.sqrt();
        if &s * &s == rest {
            root *= s;
        } else {
            free *= rest;
        }
    }
    (root, free)
}

pub fn to_f64(x: &Rat) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        let n = x.numer().to_f64().unwrap_or(f64::MAX);
        let d = x.denom().to_f64().unwrap_or(f64::MAX);
        n / d
    })
}

pub fn sign_of(x: &Rat) -> i8 {
    match x.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// Rational lower and upper bounds on `√x` within `2^-bits`.
pub fn sqrt_bounds(x: &Rat, bits: u32) -> (Rat, Rat) {
    assert!(!x.is_negative());
    let scale = BigInt::one() << bits;
    // floor(sqrt(x) * 2^bits) via floor_sqrt(x * 4^bits)
    let scaled = x * big(&(&scale * &scale));
    let lo = rat_floor_sqrt(&scaled).expect("non-negative");
    let lo_r = Rat::new(lo.clone(), scale.clone());
    let hi_r = if &lo_r * &lo_r == *x {
        lo_r.clone()
    } else {
        Rat::new(lo + 1, scale)
    };
    (lo_r, hi_r)
}
