//! Read a TOML body description and report verdict and generators.
//!
//!     cargo run --example body_file -- body.toml

use cbsg::bodyfile::{load_body, parse_body};
use cbsg::semigroup::{fg_decision, min_gens};

const DEFAULT: &str = r#"
[body]
kind = "polygon"
vertices = [["1", "2"], ["2 + sqrt(2)", "2"], ["3", "1"]]
"#;

fn main() -> cbsg::Result<()> {
    let body = match std::env::args().nth(1) {
        Some(path) => load_body(path.as_ref())?,
        None => parse_body(DEFAULT)?,
    };
    println!("{:?}", fg_decision(&body));
    match min_gens(&body) {
        Ok(g) => println!("{} generators: {g}", g.len()),
        Err(e) => println!("no generators: {e}"),
    }
    Ok(())
}
