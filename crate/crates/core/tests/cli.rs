use std::path::PathBuf;

use cbsg::cli::run;
use tempfile::TempDir;

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn cbsg(args: &[&str]) -> Run {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("cbsg").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn body(dir: &TempDir, name: &str, text: &str) -> String {
    let p: PathBuf = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

fn circle(dir: &TempDir, name: &str, a: &str, b: &str, r: &str) -> String {
    body(
        dir,
        name,
        &format!("[body]\nkind = \"circle\"\ncenter = [\"{a}\", \"{b}\"]\nradius = \"{r}\"\n"),
    )
}

#[test]
fn gens_example_circle() {
    let d = TempDir::new().unwrap();
    let f = circle(&d, "example_circle.toml", "7/3", "4/3", "1/3");
    let r = cbsg(&["gens", &f]);
    assert_eq!(r.code, 0, "{}", r.err);
    let lines: Vec<&str> = r.out.lines().collect();
    assert_eq!(lines.len(), 32);
    assert_eq!(lines[0], "(5,3)");
    assert_eq!(*lines.last().unwrap(), "(139,58)");
    // Deterministic output.
    assert_eq!(cbsg(&["gens", &f]).out, r.out);

    let j = cbsg(&["gens", &f, "--json"]);
    let v: Vec<[i64; 2]> = serde_json::from_str(j.out.trim()).unwrap();
    assert_eq!(v.len(), 32);
    assert_eq!(v[31], [139, 58]);
}

#[test]
fn member_and_check_fg() {
    let d = TempDir::new().unwrap();
    let f = circle(&d, "c.toml", "7/3", "4/3", "1/3");
    let r = cbsg(&["member", &f, "2", "1"]);
    assert_eq!((r.code, r.out.as_str()), (1, "OUT\n"));
    let r = cbsg(&["member", &f, "7", "4"]);
    assert_eq!((r.code, r.out.as_str()), (0, "IN\n"));
    let r = cbsg(&["oracle", "member", &f, "2", "1"]);
    assert_eq!((r.code, r.out.as_str()), (1, "OUT\n"));

    let r = cbsg(&["check-fg", &f]);
    assert_eq!((r.code, r.out.as_str()), (0, "FINITELY_GENERATED\n"));
    let g = circle(&d, "circle_1_1_half.toml", "1", "1", "1/2");
    let r = cbsg(&["check-fg", &g]);
    assert_eq!(r.code, 1);
    assert!(r.out.starts_with("NOT_FINITELY_GENERATED "));
    let full = circle(&d, "full.toml", "1/2", "1/2", "3/4");
    assert_eq!(cbsg(&["check-fg", &full]).out, "FULL_CONE\n");
    let far = circle(&d, "far.toml", "-5", "-5", "1");
    let r = cbsg(&["check-fg", &far]);
    assert_eq!((r.code, r.out.as_str()), (0, "ZERO\n"));
}

#[test]
fn bound_output() {
    let d = TempDir::new().unwrap();
    let f = circle(&d, "c.toml", "7/3", "4/3", "1/3");
    let r = cbsg(&["bound", &f]);
    assert_eq!(r.code, 0);
    assert_eq!(r.out, "M = 17\nk = 8\nl = 13\nbound = 406552365\n");
    let p = body(
        &d,
        "p.toml",
        "[body]\nkind = \"polygon\"\nvertices = [[1, 0], [0, 1], [1, 1]]\n",
    );
    assert_eq!(cbsg(&["bound", &p]).code, 3);
}

#[test]
fn oracle_gens_matches_pipeline() {
    let d = TempDir::new().unwrap();
    let f = circle(&d, "c.toml", "2", "1", "1");
    let a = cbsg(&["gens", &f]);
    let b = cbsg(&["oracle", "gens", &f, "--norm-bound", "60"]);
    assert_eq!((a.code, b.code), (0, 0));
    assert_eq!(a.out, b.out);
    let p = body(
        &d,
        "p.toml",
        "[body]\nkind = \"polygon\"\nvertices = [[\"3/2\", 1], [2, 3], [5, 2]]\n",
    );
    assert_eq!(
        cbsg(&["gens", &p]).out,
        cbsg(&["oracle", "gens", &p, "--norm-bound", "60"]).out
    );
}

#[test]
fn segment_and_polygon_bodies() {
    let d = TempDir::new().unwrap();
    let s = body(
        &d,
        "s.toml",
        "[body]\nkind = \"segment\"\ndirection = [1, 0]\nalpha = \"7/3\"\nbeta = \"7/2\"\n",
    );
    assert_eq!(cbsg(&["gens", &s]).out, "(3,0)\n(5,0)\n(7,0)\n");
    let t = body(
        &d,
        "t.toml",
        "[body]\nkind = \"polygon\"\nvertices = [[\"sqrt(2)\", \"sqrt(2)\"], [2, 1], [3, 1]]\n",
    );
    let r = cbsg(&["check-fg", &t]);
    assert_eq!(r.code, 1);
    assert_eq!(cbsg(&["gens", &t]).code, 3);
}

#[test]
fn error_exit_codes() {
    let d = TempDir::new().unwrap();
    let bad = body(&d, "bad.toml", "[body]\nkind = \"ellipse\"\n");
    assert_eq!(cbsg(&["gens", &bad]).code, 2);
    let neg = circle(&d, "neg.toml", "1", "1", "-1");
    assert_eq!(cbsg(&["gens", &neg]).code, 2);
    assert_eq!(cbsg(&["gens", "/nonexistent/body.toml"]).code, 2);
    assert_eq!(cbsg(&["frobnicate"]).code, 2);
    assert_eq!(cbsg(&["--help"]).code, 0);
    let nfg = circle(&d, "n.toml", "1", "1", "1/2");
    let r = cbsg(&["gens", &nfg]);
    assert_eq!(r.code, 3);
    assert!(r.err.starts_with("error:"));
    let f = circle(&d, "c.toml", "7/3", "4/3", "1/3");
    // A negative coordinate reads as an unknown flag.
    assert_eq!(cbsg(&["member", &f, "-1", "2"]).code, 2);
}

#[test]
fn plot_svg() {
    let d = TempDir::new().unwrap();
    let f = circle(&d, "c.toml", "7/3", "4/3", "1/3");
    let out = d.path().join("fig.svg");
    let r = cbsg(&[
        "plot",
        &f,
        "-o",
        out.to_str().unwrap(),
        "--dilations",
        "5",
        "--norm-bound",
        "30",
    ]);
    assert_eq!(r.code, 0, "{}", r.err);
    let text = std::fs::read_to_string(&out).unwrap();
    let doc = roxmltree::Document::parse(&text).unwrap();
    let root = doc.root_element();
    assert_eq!(root.tag_name().name(), "svg");
    let declared: usize = root.attribute("data-markers").unwrap().parse().unwrap();
    let markers = doc
        .descendants()
        .filter(|n| {
            n.attribute("class")
                .is_some_and(|c| c.split(' ').any(|w| w == "member"))
        })
        .count();
    assert_eq!(markers, declared);
    let gens = doc
        .descendants()
        .filter(|n| n.attribute("class") == Some("member generator"))
        .count();
    let inside = cbsg(&["gens", &f])
        .out
        .lines()
        .filter(|l| {
            let (x, y) = l
                .trim_matches(|c| c == '(' || c == ')')
                .split_once(',')
                .unwrap();
            x.parse::<i64>().unwrap() <= 30 && y.parse::<i64>().unwrap() <= 30
        })
        .count();
    assert_eq!(gens, inside);
    let disks = doc
        .descendants()
        .filter(|n| n.tag_name().name() == "circle" && n.attribute("class").is_none())
        .count();
    assert_eq!(disks, 5);
}
