//! Uniform entry points over the three body kinds.

use crate::body::{ConvexBody2, FgVerdict};
use crate::circle::{circle_fg_decision, circle_member, circle_min_gens};
use crate::error::Result;
use crate::lattice::{GenSet, IntVec2};
use crate::polygon::{polygon_fg_decision, polygon_min_gens};
use crate::ray::{segment_member, segment_semigroup};

pub fn fg_decision(body: &ConvexBody2) -> FgVerdict {
    match body {
        ConvexBody2::Circle(c) => circle_fg_decision(c),
        ConvexBody2::Polygon(p) => polygon_fg_decision(p),
        ConvexBody2::Segment(s) => {
            if s.alpha == s.beta && !s.alpha.is_rational() {
                FgVerdict::TrivialZero
            } else {
                FgVerdict::FinitelyGenerated
            }
        }
    }
}

/// Minimal generators, sorted lexicographically.
pub fn min_gens(body: &ConvexBody2) -> Result<GenSet> {
    match body {
        ConvexBody2::Circle(c) => circle_min_gens(c),
        ConvexBody2::Polygon(p) => polygon_min_gens(p),
        ConvexBody2::Segment(s) => segment_semigroup(s),
    }
}

/// Exact membership of a point of `ℕ²`.
pub fn member(body: &ConvexBody2, x: IntVec2) -> bool {
    if !x.is_nonneg() {
        return false;
    }
    match body {
        ConvexBody2::Circle(c) => circle_member(x.x, x.y, c),
        ConvexBody2::Polygon(p) => p.semigroup_contains(x),
        ConvexBody2::Segment(s) => segment_member(x, s),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::body::{Circle, Polygon, RaySegment};
    use crate::exactnum::{parse_quad, rat};

    #[test]
    fn dispatch() {
        let c = ConvexBody2::Circle(Circle::new(rat(7, 3), rat(4, 3), rat(1, 3)).unwrap());
        assert_eq!(fg_decision(&c), FgVerdict::FinitelyGenerated);
        assert!(member(&c, IntVec2::new(7, 4)) && !member(&c, IntVec2::new(2, 1)));
        let p = ConvexBody2::Polygon(Polygon::from_ints(&[(1, 0), (0, 1), (1, 1)]).unwrap());
        assert_eq!(min_gens(&p).unwrap().len(), 2);
        let s = ConvexBody2::Segment(
            RaySegment::new(
                IntVec2::new(1, 1),
                parse_quad("sqrt(2)").unwrap(),
                parse_quad("sqrt(2)").unwrap(),
            )
            .unwrap(),
        );
        assert_eq!(fg_decision(&s), FgVerdict::TrivialZero);
        assert!(min_gens(&s).unwrap().is_empty());
    }
}
