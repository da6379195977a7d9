//! Text syntax for exact numbers: `p/q`, decimals, and `p/q + r/s*sqrt(D)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::quad::QuadRat;
use super::rat::Rat;
use crate::error::{Error, Result};

/// Parses a rational literal: `-7/3`, `5`, `0.25`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err(Error::Parse("empty number".into()));
    }
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        return Ok(Rat::new(n, d));
    }
    if let Some((ip, fp)) = t.split_once('.') {
        let neg = ip.starts_with('-');
        let ip = ip.trim_start_matches(['-', '+']);
        if fp.is_empty() || !fp.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let whole: BigInt = if ip.is_empty() {
            BigInt::zero()
        } else {
            ip.parse().map_err(|_| bad())?
        };
        let frac: BigInt = fp.parse().map_err(|_| bad())?;
        let scale = num_traits::pow(BigInt::from(10), fp.len());
        let v = Rat::new(whole * &scale + frac, scale);
        return Ok(if neg { -v } else { v });
    }
    let n: BigInt = t.parse().map_err(|_| bad())?;
    Ok(Rat::from_integer(n))
}

/// Parses `a`, `sqrt(D)`, `c*sqrt(D)`, `a + c*sqrt(D)`, `a - sqrt(D)`, ...
pub fn parse_quad(s: &str) -> Result<QuadRat> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err(Error::Parse("empty number".into()));
    }
    // split into signed terms at top-level '+'/'-' (not after '/', '*', '(' or at start)
    let bytes = t.as_bytes();
    let mut terms = Vec::new();
    let mut start = 0;
    for i in 1..bytes.len() {
        let c = bytes[i];
        let prev = bytes[i - 1];
        if (c == b'+' || c == b'-') && !matches!(prev, b'/' | b'*' | b'(' | b'e' | b'E') {
            terms.push(&t[start..i]);
            start = i;
        }
    }
    terms.push(&t[start..]);
    if terms.len() > 2 {
        return Err(Error::Parse(format!("too many terms in {s:?}")));
    }
    let mut rat_part: Option<Rat> = None;
    let mut surd: Option<(Rat, BigInt)> = None;
    for term in terms {
        let (neg, body) = match term.as_bytes()[0] {
            b'-' => (true, &term[1..]),
            b'+' => (false, &term[1..]),
            _ => (false, term),
        };
        if let Some(idx) = body.find("sqrt(") {
            if surd.is_some() {
                return Err(Error::Parse(format!("two surd terms in {s:?}")));
            }
            let coeff_txt = &body[..idx];
            let coeff = if coeff_txt.is_empty() {
                Rat::one()
            } else {
                let c = coeff_txt
                    .strip_suffix('*')
                    .ok_or_else(|| Error::Parse(format!("expected '*' before sqrt in {s:?}")))?;
                parse_rat(c)?
            };
            let inner = body[idx + 5..]
                .strip_suffix(')')
                .ok_or_else(|| Error::Parse(format!("unclosed sqrt in {s:?}")))?;
            let d: BigInt = inner.parse().map_err(|_| {
                Error::Parse(format!("sqrt argument must be a positive integer in {s:?}"))
            })?;
            if d <= BigInt::zero() {
                return Err(Error::Parse(format!(
                    "sqrt argument must be a positive integer in {s:?}"
                )));
            }
            surd = Some((if neg { -coeff } else { coeff }, d));
        } else {
            if rat_part.is_some() {
                return Err(Error::Parse(format!("two rational terms in {s:?}")));
            }
            let v = parse_rat(body)?;
            rat_part = Some(if neg { -v } else { v });
        }
    }
    let r = rat_part.unwrap_or_else(Rat::zero);
    match surd {
        Some((c, d)) => QuadRat::new(r, c, d),
        None => Ok(QuadRat::from_rat(r)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat::{int, rat};

    #[test]
    fn rationals() {
        assert_eq!(parse_rat("7/3").unwrap(), rat(7, 3));
        assert_eq!(parse_rat(" -4 / 6 ").unwrap(), rat(-2, 3));
        assert_eq!(parse_rat("0.25").unwrap(), rat(1, 4));
        assert_eq!(parse_rat("-1.5").unwrap(), rat(-3, 2));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("abc").is_err());
    }

    #[test]
    fn quadratics() {
        let v = parse_quad("1/2 + 3/4*sqrt(5)").unwrap();
        assert_eq!(v, QuadRat::new(rat(1, 2), rat(3, 4), 5.into()).unwrap());
        let v = parse_quad("2-sqrt(2)/1").is_err();
        assert!(v);
        let v = parse_quad("-sqrt(2)").unwrap();
        assert_eq!(v, QuadRat::new(int(0), int(-1), 2.into()).unwrap());
        let v = parse_quad("3 - 1/10*sqrt(2)").unwrap();
        assert_eq!(v, QuadRat::new(int(3), rat(-1, 10), 2.into()).unwrap());
        let v = parse_quad("sqrt(8)").unwrap();
        assert_eq!(v, QuadRat::new(int(0), int(2), 2.into()).unwrap());
        assert_eq!(parse_quad("-2/3").unwrap(), QuadRat::from_rat(rat(-2, 3)));
        assert!(parse_quad("sqrt(-2)").is_err());
        assert!(parse_quad("1 + 2 + 3").is_err());
    }

    #[test]
    fn display_roundtrip() {
        for s in ["1/2 - 3/4*sqrt(5)", "sqrt(2)", "-7/3", "2 + sqrt(3)"] {
            let v = parse_quad(s).unwrap();
            assert_eq!(parse_quad(&v.to_string()).unwrap(), v);
        }
    }
}
