//! Segments on rational rays: proportionally modular numerical semigroups
//! and the modular membership test.
//!
//!     cargo run --example ray_segments

use cbsg::body::RaySegment;
use cbsg::exactnum::{parse_quad, rat, QuadRat};
use cbsg::lattice::IntVec2;
use cbsg::ray::{
    in_interval_dilation, interval_semigroup_gens, modular_inequality_holds, segment_semigroup,
};

fn main() -> cbsg::Result<()> {
    // {x : 7x mod 12 <= 2x} is generated by the interval [12/7, 12/5].
    let (a, b, c) = (7i64, 12i64, 2i64);
    let sg = interval_semigroup_gens(
        &QuadRat::from_rat(rat(b, a)),
        &QuadRat::from_rat(rat(b, a - c)),
    )?;
    println!("{a}x mod {b} <= {c}x: generators {:?}", sg.gens);
    let members: Vec<i64> = (0..30).filter(|&x| (a * x) % b <= c * x).collect();
    println!("members below 30: {members:?}");

    let seg = RaySegment::new(
        IntVec2::new(2, 1),
        parse_quad("sqrt(2)").expect("literal"),
        parse_quad("2").expect("literal"),
    )?;
    println!("[sqrt2, 2]*(2,1): {}", segment_semigroup(&seg)?);

    // Dilations of [7/3, 7/2] against the modular inequality for the same interval.
    let (p, q) = (QuadRat::from_rat(rat(7, 3)), QuadRat::from_rat(rat(7, 2)));
    for t in 1..=12u64 {
        let scan = in_interval_dilation(t, &p, &q);
        let modular = modular_inequality_holds(&QuadRat::from_int(t as i64), &p, &q)?;
        println!("t = {t:2}: dilation {scan:5}  modular {modular}");
    }
    Ok(())
}
