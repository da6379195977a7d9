//! Elements `p + q·√D` of a real quadratic field.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use super::rat::{big, rat_floor_sqrt, sign_of, sqrt_bounds, square_free_split, to_f64, Rat};
use crate::error::{Error, Result};

/// Exact real number `rat + surd·√disc` with `disc` square-free.
///
/// A value whose surd part vanishes is stored with `disc = 1`, so every
/// rational has exactly one representation and is compatible with every field.
/// Arithmetic between two genuinely irrational values requires equal
/// discriminants; the checked methods report a mismatch, the operators panic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadRat {
    rat: Rat,
    surd: Rat,
    disc: BigInt,
}

impl QuadRat {
    pub fn new(rat: Rat, surd: Rat, disc: BigInt) -> Result<Self> {
        if !disc.is_positive() {
            return Err(Error::Parse(format!(
                "discriminant must be positive, got {disc}"
            )));
        }
        let (root, free) = square_free_split(disc.magnitude());
        let surd = surd * Rat::from_integer(BigInt::from(root));
        Ok(Self::normalized(rat, surd, BigInt::from(free)))
    }

    fn normalized(rat: Rat, surd: Rat, disc: BigInt) -> Self {
        if surd.is_zero() || disc.is_one() {
            Self {
                rat: rat + surd,
                surd: Rat::zero(),
                disc: BigInt::one(),
            }
        } else {
            Self { rat, surd, disc }
        }
    }

    pub fn from_rat(r: Rat) -> Self {
        Self {
            rat: r,
            surd: Rat::zero(),
            disc: BigInt::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(Rat::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// `√x` for `x ≥ 0`, rational whenever `x` is a rational square.
    pub fn sqrt_of(x: &Rat) -> Result<Self> {
        if x.is_negative() {
            return Err(Error::NegativeRadicand);
        }
        if x.is_zero() {
            return Ok(Self::zero());
        }
        // √(n/m) = √(n·m) / m
        let nm = (x.numer() * x.denom()).to_biguint().expect("positive");
        let (root, free) = square_free_split(&nm);
        let coeff = Rat::new(BigInt::from(root), x.denom().clone());
        Ok(Self::normalized(Rat::zero(), coeff, BigInt::from(free)))
    }

    pub fn rat_part(&self) -> &Rat {
        &self.rat
    }

    pub fn surd_part(&self) -> &Rat {
        &self.surd
    }

    pub fn disc(&self) -> &BigInt {
        &self.disc
    }

    pub fn is_rational(&self) -> bool {
        self.surd.is_zero()
    }

    pub fn to_rat(&self) -> Option<Rat> {
        self.is_rational().then(|| self.rat.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.surd.is_zero()
    }

    fn common_disc(&self, other: &Self) -> Result<BigInt> {
        match (self.is_rational(), other.is_rational()) {
            (true, _) => Ok(other.disc.clone()),
            (_, true) => Ok(self.disc.clone()),
            _ if self.disc == other.disc => Ok(self.disc.clone()),
            _ => Err(Error::IncompatibleExtensions(
                self.disc.clone(),
                other.disc.clone(),
            )),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let d = self.common_disc(other)?;
        Ok(Self::normalized(
            &self.rat + &other.rat,
            &self.surd + &other.surd,
            d,
        ))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        let d = self.common_disc(other)?;
        Ok(Self::normalized(
            &self.rat - &other.rat,
            &self.surd - &other.surd,
            d,
        ))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let d = self.common_disc(other)?;
        let dr = big(&d);
        let rat = &self.rat * &other.rat + &self.surd * &other.surd * dr;
        let surd = &self.rat * &other.surd + &self.surd * &other.rat;
        Ok(Self::normalized(rat, surd, d))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.checked_mul(&other.recip()?)
    }

    /// Multiplicative inverse via the conjugate.
    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let norm = &self.rat * &self.rat - &self.surd * &self.surd * big(&self.disc);
        Ok(Self::normalized(
            &self.rat / &norm,
            -&self.surd / &norm,
            self.disc.clone(),
        ))
    }

    pub fn scale(&self, k: &Rat) -> Self {
        Self::normalized(&self.rat * k, &self.surd * k, self.disc.clone())
    }

    pub fn square(&self) -> Self {
        self.checked_mul(self).expect("same field")
    }

    /// Sign of the real value: -1, 0 or 1.
    pub fn signum(&self) -> i8 {
        let sp = sign_of(&self.rat);
        let sq = sign_of(&self.surd);
        if sq == 0 {
            return sp;
        }
        if sp == 0 || sp == sq {
            return sq;
        }
        // opposite signs: compare rat² with surd²·D
        let lhs = &self.rat * &self.rat;
        let rhs = &self.surd * &self.surd * big(&self.disc);
        match lhs.cmp(&rhs) {
            Ordering::Greater => sp,
            Ordering::Less => sq,
            Ordering::Equal => 0,
        }
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    /// Exact comparison of two values in the same field.
    pub fn quad_cmp(&self, other: &Self) -> Result<Ordering> {
        let diff = self.checked_sub(other)?;
        Ok(diff.signum().cmp(&0))
    }

    /// Exact comparison of values from possibly different quadratic fields.
    pub fn cmp_any(&self, other: &Self) -> Ordering {
        if let Ok(o) = self.quad_cmp(other) {
            return o;
        }
        // x = (p1 - p2) + q1√D1, y = -q2√D2; sign(x + y)
        let x = Self::normalized(&self.rat - &other.rat, self.surd.clone(), self.disc.clone());
        let sx = x.signum();
        let sy = -sign_of(&other.surd);
        let s = if sx == 0 || sx == sy {
            sy
        } else if sy == 0 {
            sx
        } else {
            let y2 = &other.surd * &other.surd * big(&other.disc);
            let diff = x
                .square()
                .checked_sub(&Self::from_rat(y2))
                .expect("rational");
            match diff.signum() {
                1 => sx,
                -1 => sy,
                _ => 0,
            }
        };
        s.cmp(&0)
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn floor(&self) -> BigInt {
        let mut n = self.rat.floor().to_integer();
        if !self.surd.is_zero() {
            let t = &self.surd * &self.surd * big(&self.disc);
            let s = rat_floor_sqrt(&t).expect("non-negative");
            if self.surd.is_negative() {
                n -= s;
            } else {
                n += s;
            }
        }
        loop {
            let nr = Self::from_rat(big(&n));
            if self.cmp_any(&nr) == Ordering::Less {
                n -= 1;
                continue;
            }
            let n1 = Self::from_rat(big(&(&n + 1)));
            if self.cmp_any(&n1) != Ordering::Less {
                n += 1;
                continue;
            }
            return n;
        }
    }

    pub fn ceil(&self) -> BigInt {
        -(-self).floor()
    }

    /// Rational enclosure `lo ≤ self ≤ hi` of width about `2^-bits·|surd|`.
    pub fn rat_bounds(&self, bits: u32) -> (Rat, Rat) {
        if self.is_rational() {
            return (self.rat.clone(), self.rat.clone());
        }
        let (lo, hi) = sqrt_bounds(&big(&self.disc), bits);
        let a = &self.rat + &self.surd * &lo;
        let b = &self.rat + &self.surd * &hi;
        if a <= b {
            (a, b)
        } else {
            (b, a)
        }
    }

    pub fn to_f64(&self) -> f64 {
        to_f64(&self.rat) + to_f64(&self.surd) * to_f64(&big(&self.disc)).sqrt()
    }

    /// Square-free part of the discriminant as an unsigned integer.
    pub fn disc_u(&self) -> BigUint {
        self.disc.magnitude().clone()
    }

    /// The conjugate `rat − surd·√D`.
    pub fn conj(&self) -> Self {
        Self::normalized(self.rat.clone(), -&self.surd, self.disc.clone())
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        let r = self.to_rat()?;
        r.is_integer().then(|| r.to_integer())
    }
}

impl PartialOrd for QuadRat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadRat {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_any(other)
    }
}

impl From<Rat> for QuadRat {
    fn from(r: Rat) -> Self {
        Self::from_rat(r)
    }
}

impl From<i64> for QuadRat {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

macro_rules! forward_op {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl<'a> $tr<&'a QuadRat> for &'a QuadRat {
            type Output = QuadRat;
            fn $m(self, rhs: &'a QuadRat) -> QuadRat {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<QuadRat> for QuadRat {
            type Output = QuadRat;
            fn $m(self, rhs: QuadRat) -> QuadRat {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_op!(Add, add, checked_add);
forward_op!(Sub, sub, checked_sub);
forward_op!(Mul, mul, checked_mul);
forward_op!(Div, div, checked_div);

impl Neg for &QuadRat {
    type Output = QuadRat;
    fn neg(self) -> QuadRat {
        QuadRat {
            rat: -&self.rat,
            surd: -&self.surd,
            disc: self.disc.clone(),
        }
    }
}

impl Neg for QuadRat {
    type Output = QuadRat;
    fn neg(self) -> QuadRat {
        -&self
    }
}

impl fmt::Display for QuadRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.rat);
        }
        let sq = if self.surd.is_one() {
            format!("sqrt({})", self.disc)
        } else {
            format!("{}*sqrt({})", self.surd.abs(), self.disc)
        };
        if self.rat.is_zero() {
            if self.surd.is_negative() {
                write!(f, "-{sq}")
            } else {
                write!(f, "{sq}")
            }
        } else {
            let op = if self.surd.is_negative() { '-' } else { '+' };
            let sq = if self.surd.is_negative() && (-&self.surd).is_one() {
                format!("sqrt({})", self.disc)
            } else {
                sq
            };
            write!(f, "{} {op} {sq}", self.rat)
        }
    }
}

/// `⌊a / b⌋`.
pub fn floor_div(a: &QuadRat, b: &QuadRat) -> Result<BigInt> {
    Ok(a.checked_div(b)?.floor())
}
