//! Minimal generators of polygon semigroups, rational and with quadratic
//! irrational vertices, and the decomposition into triangles and a middle part.
//!
//!     cargo run --example polygon_gens

use cbsg::body::Polygon;
use cbsg::exactnum::{parse_quad, rat, QuadPoint};
use cbsg::polygon::{
    decompose, polygon_min_gens, polygon_min_gens_decomposition, polygon_min_gens_rational,
};

fn main() -> cbsg::Result<()> {
    let q = |s: &str| parse_quad(s).expect("literal");
    let rational = Polygon::from_rats(&[
        (rat(3, 2), rat(1, 1)),
        (rat(2, 1), rat(3, 1)),
        (rat(5, 1), rat(2, 1)),
    ])?;
    let lift = polygon_min_gens_rational(&rational)?;
    let pieces = polygon_min_gens_decomposition(&rational)?;
    println!(
        "rational triangle: {} generators, lift and decomposition agree: {}",
        lift.len(),
        lift == pieces
    );
    println!("{lift}");

    let d = decompose(&rational)?;
    let cuts: Vec<String> = d.cuts.iter().map(|c| c.to_string()).collect();
    println!(
        "decomposition: {} triangles, cuts along {}",
        d.triangles.len(),
        cuts.join(" ")
    );

    let irrational = Polygon::new(vec![
        QuadPoint::from_ints(1, 2),
        QuadPoint::new(q("2 + sqrt(2)"), q("2")),
        QuadPoint::from_ints(3, 1),
    ])?;
    let g = polygon_min_gens(&irrational)?;
    println!(
        "triangle with vertex (2 + sqrt2, 2): {} generators",
        g.len()
    );
    println!("{g}");
    Ok(())
}
