use std::io::Write;
use std::process::{Command, Output, Stdio};

fn fourpow(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_fourpow"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn ok(args: &[&str], stdin: &str) -> String {
    let out = fourpow(args, stdin);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn fails_with(args: &[&str], stdin: &str, code: i32) -> String {
    let out = fourpow(args, stdin);
    assert_eq!(out.status.code(), Some(code), "{args:?}");
    String::from_utf8(out.stderr).unwrap()
}

#[test]
fn count_pairs() {
    assert_eq!(ok(&["count", "--class", "pairs", "--n", "3"], ""), "16\n");
    assert_eq!(
        ok(&["count", "--class", "marked_peak", "--n", "2"], ""),
        "3\n"
    );
    assert_eq!(
        ok(&["count", "--class", "two_colored", "--n", "0"], ""),
        "1\n"
    );
}

#[test]
fn count_matches_enumerate() {
    for class in [
        "3comp",
        "pairs",
        "walk",
        "two_colored",
        "marked_bridge",
        "height_labeled",
        "bridge",
        "meander",
        "dyck",
        "marked_peak",
        "composition",
    ] {
        for n in 1..=4 {
            let n = n.to_string();
            let count: usize = ok(&["count", "--class", class, "--n", &n], "")
                .trim()
                .parse()
                .unwrap();
            let listed = ok(&["enumerate", "--class", class, "--n", &n], "");
            assert_eq!(listed.lines().count(), count, "{class} {n}");
        }
    }
}

#[test]
fn enumerate_is_canonical() {
    assert_eq!(
        ok(&["enumerate", "--class", "bridge", "--n", "1"], ""),
        "{\"type\":\"path\",\"steps\":\"UD\"}\n{\"type\":\"path\",\"steps\":\"DU\"}\n"
    );
    assert_eq!(
        ok(&["enumerate", "--class", "composition", "--n", "3"], ""),
        concat!(
            "{\"type\":\"composition\",\"parts\":[1,1,1]}\n",
            "{\"type\":\"composition\",\"parts\":[1,2]}\n",
            "{\"type\":\"composition\",\"parts\":[2,1]}\n",
            "{\"type\":\"composition\",\"parts\":[3]}\n",
        )
    );
}

#[test]
fn map_pair_walk_unit() {
    let out = ok(
        &["map", "--bijection", "pair_walk", "--direction", "fwd"],
        "{\"type\":\"pair\",\"first\":[1],\"second\":[1]}\n",
    );
    assert_eq!(out, "{\"type\":\"path\",\"steps\":\"\"}\n");
}

#[test]
fn map_worked_example() {
    let out = ok(
        &["map", "--bijection", "colored_pair", "--direction", "fwd"],
        "{\"type\":\"colored_composition\",\"parts\":[[6,1],[1,2],[4,3],[2,1]]}\n",
    );
    assert_eq!(
        out,
        "{\"type\":\"pair\",\"first\":[6,5,2],\"second\":[6,1,6]}\n"
    );
}

/// `(bijection, class feeding fwd, size shift, class feeding inv)`
const BIJECTIONS: [(&str, &str, usize, &str); 7] = [
    ("pair_walk", "pairs", 0, "walk"),
    ("colored_pair", "3comp", 0, "pairs"),
    ("twocol_walk", "two_colored", 1, "walk"),
    ("bridge_meander", "bridge", 0, "meander"),
    ("peak_bridge", "marked_peak", 0, ""),
    ("label_maxima", "height_labeled", 0, "marked_bridge"),
    ("maxima_twocol", "marked_bridge", 0, ""),
];

#[test]
fn map_fwd_then_inv_is_identity() {
    for (b, domain, shift, codomain) in BIJECTIONS {
        for n in 1..=5 {
            let size = (n - shift).to_string();
            let input = ok(&["enumerate", "--class", domain, "--n", &size], "");
            let image = ok(&["map", "--bijection", b, "--direction", "fwd"], &input);
            assert_eq!(image.lines().count(), input.lines().count());
            let back = ok(&["map", "--bijection", b, "--direction", "inv"], &image);
            assert_eq!(back, input, "{b} n={n}");
            if !codomain.is_empty() {
                let size = (n - if codomain == "walk" { 0 } else { shift }).to_string();
                let input = ok(&["enumerate", "--class", codomain, "--n", &size], "");
                let pre = ok(&["map", "--bijection", b, "--direction", "inv"], &input);
                let again = ok(&["map", "--bijection", b, "--direction", "fwd"], &pre);
                assert_eq!(again, input, "{b} inv n={n}");
            }
        }
    }
}

#[test]
fn maxima_twocol_inverse_from_two_colored() {
    for m in 0..=4 {
        let input = ok(
            &["enumerate", "--class", "two_colored", "--n", &m.to_string()],
            "",
        );
        let pre = ok(
            &["map", "--bijection", "maxima_twocol", "--direction", "inv"],
            &input,
        );
        let again = ok(
            &["map", "--bijection", "maxima_twocol", "--direction", "fwd"],
            &pre,
        );
        assert_eq!(again, input);
    }
}

#[test]
fn chain_end_to_end() {
    let input = ok(&["enumerate", "--class", "3comp", "--n", "3"], "");
    let labeled = ok(
        &["chain", "--from", "3comp", "--to", "height_labeled"],
        &input,
    );
    let mut sorted: Vec<&str> = labeled.lines().collect();
    sorted.sort();
    let mut all: Vec<String> = ok(&["enumerate", "--class", "height_labeled", "--n", "3"], "")
        .lines()
        .map(String::from)
        .collect();
    all.sort();
    assert_eq!(sorted, all);
    let back = ok(
        &["chain", "--from", "height_labeled", "--to", "3comp"],
        &labeled,
    );
    assert_eq!(back, input);
}

#[test]
fn verify_and_oeis() {
    let text = ok(&["verify", "--suite", "cardinality", "--max-n", "5"], "");
    assert!(text.contains("checked:  30"), "{text}");
    let json = ok(
        &["verify", "--suite", "congruence", "--max-n", "6", "--json"],
        "",
    );
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["suite"], "congruence");
    assert_eq!(v["n_max"], 6);
    assert_eq!(v["failures"], serde_json::json!([]));
    ok(&["verify", "--suite", "all", "--max-n", "5"], "");
    let o = ok(
        &["oeis", "--sequence", "A001700", "--max-n", "4", "--json"],
        "",
    );
    let v: serde_json::Value = serde_json::from_str(&o).unwrap();
    assert_eq!(v["checked"], 4);
}

#[test]
fn sample_is_seeded() {
    let args = [
        "sample", "--class", "dyck", "--n", "4", "--count", "25", "--seed", "9",
    ];
    let a = ok(&args, "");
    assert_eq!(a, ok(&args, ""));
    assert_eq!(a.lines().count(), 25);
    let empty = ok(
        &[
            "sample", "--class", "dyck", "--n", "0", "--count", "3", "--seed", "1",
        ],
        "",
    );
    assert_eq!(empty, "{\"type\":\"path\",\"steps\":\"\"}\n".repeat(3));
}

#[test]
fn render_marked_bridge() {
    let svg = ok(
        &["render"],
        "{\"type\":\"marked_bridge\",\"steps\":\"UDDU\",\"peak\":0}\n",
    );
    assert!(svg.starts_with("<svg"));
    assert!(svg.contains("<circle cx=\"1\" cy=\"1\""));
    assert!(svg.contains("<rect x=\"1.8\" y=\"-0.2\""));
    let again = ok(
        &["render"],
        "{\"type\":\"marked_bridge\",\"steps\":\"UDDU\",\"peak\":0}\n",
    );
    assert_eq!(svg, again);
}

#[test]
fn render_to_files() {
    let dir = tempfile::tempdir().unwrap();
    let one = dir.path().join("one.svg");
    ok(
        &["render", "--output", one.to_str().unwrap()],
        "{\"type\":\"marked_peak\",\"steps\":\"UUDD\",\"peak\":1}\n",
    );
    let s = std::fs::read_to_string(&one).unwrap();
    assert_eq!(s.matches("<circle").count(), 1);

    let many = dir.path().join("fig.svg");
    ok(
        &["render", "--output", many.to_str().unwrap()],
        "{\"type\":\"path\",\"steps\":\"\"}\n{\"type\":\"path\",\"steps\":\"UD\"}\n",
    );
    assert!(dir.path().join("fig-1.svg").exists());
    assert!(dir.path().join("fig-2.svg").exists());
    assert!(!many.exists());
}

#[test]
fn usage_and_domain_errors_exit_two() {
    let cases: [(&[&str], &str); 10] = [
        (&["count", "--class", "trees", "--n", "3"], ""),
        (&["count", "--class", "pairs"], ""),
        (&["frobnicate"], ""),
        (&["map", "--bijection", "nope", "--direction", "fwd"], ""),
        (
            &["map", "--bijection", "pair_walk", "--direction", "fwd"],
            "not json\n",
        ),
        (
            &["map", "--bijection", "peak_bridge", "--direction", "fwd"],
            "{\"type\":\"marked_peak\",\"steps\":\"UDDU\",\"peak\":0}\n",
        ),
        (
            &["map", "--bijection", "pair_walk", "--direction", "fwd"],
            "{\"type\":\"path\",\"steps\":\"UD\"}\n",
        ),
        (&["verify", "--suite", "speed", "--max-n", "3"], ""),
        (
            &[
                "sample", "--class", "pairs", "--n", "2", "--count", "1", "--seed", "0",
            ],
            "",
        ),
        (&["render"], "{\"type\":\"composition\",\"parts\":[1]}\n"),
    ];
    for (args, stdin) in cases {
        let err = fails_with(args, stdin, 2);
        assert!(!err.is_empty(), "{args:?}");
    }
    let err = fails_with(&["oeis", "--sequence", "A000045", "--max-n", "3"], "", 2);
    assert_eq!(err.lines().count(), 1, "{err}");
    assert!(err.contains("A000045"));
}

#[test]
fn help_exits_zero() {
    let out = ok(&["--help"], "");
    assert!(out.contains("0-based"));
}
