//! Finite-generation verdicts for circles, polygons and segments.
//!
//!     cargo run --example fg_decisions

use cbsg::body::{Circle, ConvexBody2, Polygon, RaySegment};
use cbsg::exactnum::{parse_quad, rat, QuadPoint};
use cbsg::lattice::IntVec2;
use cbsg::semigroup::fg_decision;

fn main() -> cbsg::Result<()> {
    let q = |s: &str| parse_quad(s).expect("literal");
    let bodies: Vec<(&str, ConvexBody2)> = vec![
        (
            "circle (7/3, 4/3), r = 1/3",
            ConvexBody2::Circle(Circle::new(rat(7, 3), rat(4, 3), rat(1, 3))?),
        ),
        (
            "circle (1, 1), r = 1/2",
            ConvexBody2::Circle(Circle::new(rat(1, 1), rat(1, 1), rat(1, 2))?),
        ),
        (
            "circle (1/2, 1/2), r = 3/4",
            ConvexBody2::Circle(Circle::new(rat(1, 2), rat(1, 2), rat(3, 4))?),
        ),
        (
            "circle (-5, -5), r = 1",
            ConvexBody2::Circle(Circle::new(rat(-5, 1), rat(-5, 1), rat(1, 1))?),
        ),
        (
            "unit square at (1, 1)",
            ConvexBody2::Polygon(Polygon::from_ints(&[(1, 1), (1, 2), (2, 2), (2, 1)])?),
        ),
        (
            "triangle (sqrt2, sqrt2), (2, 1), (3, 1)",
            ConvexBody2::Polygon(Polygon::new(vec![
                QuadPoint::new(q("sqrt(2)"), q("sqrt(2)")),
                QuadPoint::from_ints(2, 1),
                QuadPoint::from_ints(3, 1),
            ])?),
        ),
        (
            "segment [sqrt2, 2] on (1, 0)",
            ConvexBody2::Segment(RaySegment::new(IntVec2::new(1, 0), q("sqrt(2)"), q("2"))?),
        ),
    ];
    for (name, b) in &bodies {
        println!("{name:42} {:?}", fg_decision(b));
    }
    Ok(())
}
