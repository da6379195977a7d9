//! Certify pipeline output against the brute-force dilation scan.
//!
//!     cargo run --example oracle_check -- 7/3 4/3 1/3 200

use cbsg::body::{Circle, ConvexBody2};
use cbsg::exactnum::parse_rat;
use cbsg::lattice::GenSet;
use cbsg::oracle::naive_min_gens;
use cbsg::semigroup::min_gens;

fn main() -> cbsg::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let get = |i: usize, d: &str| args.get(i).cloned().unwrap_or_else(|| d.to_owned());
    let c = Circle::new(
        parse_rat(&get(0, "7/3"))?,
        parse_rat(&get(1, "4/3"))?,
        parse_rat(&get(2, "1/3"))?,
    )?;
    let n: i64 = get(3, "200").parse().expect("norm bound");

    let pipeline = min_gens(&ConvexBody2::Circle(c.clone()))?;
    let naive = naive_min_gens(&c, n);
    let truncated = GenSet::new(pipeline.iter().copied().filter(|p| p.norm1() <= n), true);
    println!(
        "pipeline: {} generators (max norm {})",
        pipeline.len(),
        pipeline.max_norm1()
    );
    println!("oracle:   {} generators up to norm {n}", naive.len());
    println!("agree up to norm {n}: {}", truncated == naive);
    Ok(())
}
