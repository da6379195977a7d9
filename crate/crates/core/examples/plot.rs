//! Write an SVG with dilations, cone rays, semigroup points and generators.
//!
//!     cargo run --example plot -- circle.svg

use cbsg::body::{Circle, ConvexBody2};
use cbsg::exactnum::rat;
use cbsg::svg::{plot, PlotOptions};

fn main() -> cbsg::Result<()> {
    let out = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "circle.svg".into());
    let body = ConvexBody2::Circle(Circle::new(rat(7, 3), rat(4, 3), rat(1, 3))?);
    let svg = plot(
        &body,
        &PlotOptions {
            dilations: 8,
            norm_bound: 40,
        },
    );
    std::fs::write(&out, svg)?;
    println!("wrote {out}");
    Ok(())
}
