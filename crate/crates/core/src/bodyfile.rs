//! TOML body descriptions.
//!
//! ```toml
//! [body]
//! kind = "circle"          # or "polygon", "segment"
//! center = ["7/3", "4/3"]
//! radius = "1/3"
//! # polygon: vertices = [["1", "1"], ["2 + sqrt(2)", "2"], ["3", "1"]]
//! # segment: direction = [1, 0], alpha = "7/3", beta = "7/2"
//! ```
//!
//! Numbers are strings in the exact syntax (`p/q`, decimals,
//! `p/q + r/s*sqrt(D)`) or TOML integers.

use std::path::Path;

use toml::Value;

use crate::body::{Circle, ConvexBody2, Polygon, RaySegment};
use crate::error::{Error, Result};
use crate::exactnum::{parse_quad, parse_rat, QuadPoint, QuadRat, Rat};
use crate::lattice::IntVec2;

fn perr(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn number_text(v: &Value, key: &str) -> Result<String> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Integer(n) => Ok(n.to_string()),
        _ => Err(perr(format!(
            "`{key}`: expected a number string or an integer"
        ))),
    }
}

fn rat_of(v: &Value, key: &str) -> Result<Rat> {
    parse_rat(&number_text(v, key)?)
}

fn quad_of(v: &Value, key: &str) -> Result<QuadRat> {
    parse_quad(&number_text(v, key)?)
}

fn pair<'a>(v: &'a Value, key: &str) -> Result<(&'a Value, &'a Value)> {
    match v.as_array().map(Vec::as_slice) {
        Some([a, b]) => Ok((a, b)),
        _ => Err(perr(format!("`{key}`: expected a pair"))),
    }
}

fn field<'a>(t: &'a toml::Table, key: &str) -> Result<&'a Value> {
    t.get(key).ok_or_else(|| perr(format!("missing `{key}`")))
}

/// Parses a body description. Invalid geometry is reported as a parse error.
pub fn parse_body(text: &str) -> Result<ConvexBody2> {
    let doc: toml::Table = text
        .parse()
        .map_err(|e: toml::de::Error| perr(e.message().to_string()))?;
    let body = doc
        .get("body")
        .and_then(Value::as_table)
        .ok_or_else(|| perr("missing [body] table"))?;
    let kind = field(body, "kind")?
        .as_str()
        .ok_or_else(|| perr("`kind` must be a string"))?;
    let invalid = |e: Error| if e.is_parse() { e } else { perr(e.to_string()) };
    match kind {
        "circle" => {
            let (a, b) = pair(field(body, "center")?, "center")?;
            let c = Circle::new(
                rat_of(a, "center")?,
                rat_of(b, "center")?,
                rat_of(field(body, "radius")?, "radius")?,
            );
            Ok(ConvexBody2::Circle(c.map_err(invalid)?))
        }
        "polygon" => {
            let vs = field(body, "vertices")?
                .as_array()
                .ok_or_else(|| perr("`vertices` must be a list"))?;
            let pts = vs
                .iter()
                .map(|v| {
                    let (x, y) = pair(v, "vertices")?;
                    Ok(QuadPoint::new(
                        quad_of(x, "vertices")?,
                        quad_of(y, "vertices")?,
                    ))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(ConvexBody2::Polygon(Polygon::new(pts).map_err(invalid)?))
        }
        "segment" => {
            let (x, y) = pair(field(body, "direction")?, "direction")?;
            let int = |v: &Value| {
                v.as_integer()
                    .ok_or_else(|| perr("`direction` must be integers"))
            };
            let dir = IntVec2::new(int(x)?, int(y)?);
            let alpha = quad_of(field(body, "alpha")?, "alpha")?;
            let beta = quad_of(field(body, "beta")?, "beta")?;
            if !alpha.is_rational() && !beta.is_rational() && alpha.disc() != beta.disc() {
                return Err(perr(
                    Error::IncompatibleExtensions(alpha.disc().clone(), beta.disc().clone())
                        .to_string(),
                ));
            }
            Ok(ConvexBody2::Segment(
                RaySegment::new(dir, alpha, beta).map_err(invalid)?,
            ))
        }
        other => Err(perr(format!("unknown body kind `{other}`"))),
    }
}

pub fn load_body(path: &Path) -> Result<ConvexBody2> {
    parse_body(&std::fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn circle_file() {
        let b = parse_body(
            "[body]\nkind = \"circle\"\ncenter = [\"7/3\", \"4/3\"]\nradius = \"1/3\"\n",
        )
        .unwrap();
        assert_eq!(
            b,
            ConvexBody2::Circle(Circle::new(rat(7, 3), rat(4, 3), rat(1, 3)).unwrap())
        );
        let b = parse_body("[body]\nkind = \"circle\"\ncenter = [2, 1]\nradius = 1\n").unwrap();
        assert!(matches!(b, ConvexBody2::Circle(_)));
    }

    #[test]
    fn polygon_and_segment_files() {
        let b = parse_body(
            "[body]\nkind = \"polygon\"\nvertices = [[\"sqrt(2)\", \"sqrt(2)\"], [2, 1], [3, 1]]\n",
        )
        .unwrap();
        assert!(matches!(b, ConvexBody2::Polygon(_)));
        let b = parse_body(
            "[body]\nkind = \"segment\"\ndirection = [2, 0]\nalpha = \"7/3\"\nbeta = \"7/2\"\n",
        )
        .unwrap();
        let ConvexBody2::Segment(s) = b else { panic!() };
        assert_eq!(s.direction, IntVec2::new(1, 0));
    }

    #[test]
    fn rejects() {
        for bad in [
            "",
            "[body]\nkind = \"ellipse\"\n",
            "[body]\nkind = \"circle\"\ncenter = [\"1\"]\nradius = \"1\"\n",
            "[body]\nkind = \"circle\"\ncenter = [1, 1]\nradius = \"-1\"\n",
            "[body]\nkind = \"circle\"\ncenter = [1.5, 1]\nradius = \"1\"\n",
            "[body]\nkind = \"polygon\"\nvertices = [[\"sqrt(2)\", 1], [\"sqrt(3)\", 2], [3, 1]]\n",
            "[body]\nkind = \"polygon\"\nvertices = [[0, 0], [1, 2], [2, 1], [1, 1]]\n",
        ] {
            assert!(parse_body(bad).unwrap_err().is_parse(), "{bad:?}");
        }
    }
}
