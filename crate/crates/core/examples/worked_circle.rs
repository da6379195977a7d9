//! Full generator computation for the circle with centre (7/3, 4/3) and
//! radius 1/3: cone, ray surgery, exceptional set, minimal generators.
//!
//!     cargo run --example worked_circle

use cbsg::body::Circle;
use cbsg::circle::circle_pipeline;
use cbsg::exactnum::rat;
use cbsg::lattice::GenSet;

fn main() -> cbsg::Result<()> {
    let c = Circle::new(rat(7, 3), rat(4, 3), rat(1, 3))?;
    let p = circle_pipeline(&c)?;
    let a = p.analysis.as_ref().expect("two-ray cone");

    println!("cone rays       {} {}", a.cone.hi, a.cone.lo);
    println!("Hilbert basis   {}", a.hilbert);
    println!("ray generators  {} {}", a.s_hi.s_list[0], a.s_lo.s_list[0]);
    println!("i0 = {}, d'^2 = {}", a.stab.i0, a.stab.d_prime_sq);
    println!("S' ({})         {}", p.sprime.len(), p.sprime);
    println!(
        "removed ({})    {}",
        p.exceptional.len(),
        GenSet::new(p.exceptional.clone(), false)
    );
    println!("generators ({}) {}", p.gens.len(), p.gens);

    let b = p.bound_inputs();
    println!(
        "max norm {} <= 3^{}*(2*{}-1)*{} = {}",
        p.gens.max_norm1(),
        b.l,
        b.k,
        b.m,
        p.bound()
    );
    Ok(())
}
