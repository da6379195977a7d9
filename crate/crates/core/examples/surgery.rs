//! Generator surgery: replacing the generators on a ray and removing
//! finitely many elements from an affine semigroup.
//!
//!     cargo run --example surgery

use cbsg::lattice::{hilbert_basis_2d, Cone2, IntVec2};
use cbsg::surgery::{remove_element, remove_finite_set, replace_ray_gens, RaySurgerySpec};

fn main() -> cbsg::Result<()> {
    let cone = Cone2::new(IntVec2::new(2, 1), IntVec2::new(1, 2))?;
    let h = hilbert_basis_2d(&cone);
    println!("Hilbert basis: {h}");

    // Keep only the multiples 3g and 5g of g = (2, 1) on that ray.
    let g = IntVec2::new(2, 1);
    let spec = RaySurgerySpec::new(g, vec![3 * g, 5 * g])?;
    let s = replace_ray_gens(&h, &spec)?;
    println!("after ray surgery: {s}");

    let one = remove_element(&s, IntVec2::new(1, 1))?;
    println!("without (1,1): {one}");
    let both = remove_finite_set(&s, &[IntVec2::new(1, 1), IntVec2::new(2, 2)])?;
    println!("without (1,1), (2,2): {both}");
    Ok(())
}
