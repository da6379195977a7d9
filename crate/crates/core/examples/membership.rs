//! Three independent membership tests on a circle semigroup: the exact
//! quadratic in the dilation index, the modular inequality on the chord
//! through the point, and a direct scan of dilations.
//!
//!     cargo run --example membership -- 7 4

use cbsg::body::Circle;
use cbsg::circle::{circle_member, circle_modular_inequality};
use cbsg::exactnum::rat;
use cbsg::oracle::dilation_member;

fn main() -> cbsg::Result<()> {
    let args: Vec<i64> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let c = Circle::new(rat(7, 3), rat(4, 3), rat(1, 3))?;
    let points: Vec<(i64, i64)> = match args.as_slice() {
        [x, y] => vec![(*x, *y)],
        _ => vec![(2, 1), (7, 4), (5, 3), (4, 3), (139, 58), (140, 58)],
    };
    for (x, y) in points {
        let modular = match circle_modular_inequality(x, y, &c) {
            Ok(b) => b.to_string(),
            Err(e) => format!("n/a ({e})"),
        };
        println!(
            "({x},{y}): quadratic {}  modular {modular}  scan {}",
            circle_member(x, y, &c),
            dilation_member(x, y, &c)
        );
    }
    Ok(())
}
