//! Fixture suite shared by the CLI tests and the acceptance run.

#![allow(dead_code)]

use std::fs;
use std::path::PathBuf;
use std::process::Command;

use homdef_cli::files::{self, AlgebraFile, DeformationFile};

pub fn manifest() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_homdef"))
        .args(args)
        .current_dir(manifest())
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("exited normally, not by signal"),
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
    }
}

pub const CASES: &[(&str, &[&str], i32)] = &[
    ("check-sl2", &["check", "tests/fixtures/sl2.json"], 0),
    ("check-sl2-json", &["check", "tests/fixtures/sl2.json", "--json"], 0),
    ("check-sl2-corrupt", &["check", "tests/fixtures/sl2-corrupt.json"], 1),
    ("check-sl2-corrupt-json", &["check", "tests/fixtures/sl2-corrupt.json", "--json"], 1),
    ("check-sl2-as-associative", &["check", "tests/fixtures/sl2.json", "--kind", "hom-associative"], 1),
    ("check-dual-numbers", &["check", "tests/fixtures/dual-numbers.json"], 0),
    ("check-bad-rational", &["check", "tests/fixtures/bad-rational.json"], 2),
    ("check-malformed", &["check", "tests/fixtures/malformed.json"], 2),
    ("check-out-of-range", &["check", "tests/fixtures/out-of-range.json"], 2),
    ("check-missing-file", &["check", "tests/fixtures/absent.json"], 2),
    ("cohomology-sl2", &["cohomology", "tests/fixtures/sl2.json", "--bases"], 0),
    ("cohomology-abelian2-json", &["cohomology", "tests/fixtures/abelian2.json", "--json"], 0),
    ("cohomology-dual-numbers", &["cohomology", "tests/fixtures/dual-numbers.json"], 0),
    ("cohomology-corrupt-base", &["cohomology", "tests/fixtures/sl2-corrupt.json"], 1),
    ("deform-jackson5", &["deform", "verify", "tests/fixtures/jackson5.json"], 0),
    ("deform-jackson5-json", &["deform", "verify", "tests/fixtures/jackson5.json", "--orders", "3", "--json"], 0),
    ("deform-jackson-corrupt", &["deform", "verify", "tests/fixtures/jackson-corrupt.json"], 1),
    ("deform-trivial", &["deform", "verify", "tests/fixtures/trivial-n0.json"], 0),
    ("deform-orders-too-high", &["deform", "verify", "tests/fixtures/trivial-n0.json", "--orders", "2"], 2),
    ("deform-not-a-deformation", &["deform", "verify", "tests/fixtures/sl2.json"], 2),
    ("graded-qwitt", &["graded", "qwitt", "--q", "2", "--window", "-4..4"], 0),
    ("graded-witt", &["graded", "witt-deformation", "--orders", "4", "--window", "0..6"], 0),
    ("graded-virq-json", &["graded", "virq", "--q", "1/2", "--window", "-3..3", "--json"], 0),
    ("graded-virq-pole", &["graded", "virq", "--q", "-1", "--window", "0..2"], 2),
    ("graded-unknown", &["graded", "heisenberg"], 2),
    ("graded-bad-window", &["graded", "qwitt", "--window", "4..-4"], 2),
    ("catalog-list", &["catalog", "list"], 0),
    ("catalog-show-twist", &["catalog", "show", "sl2-twist", "--a", "1", "--b", "2", "--c", "3", "--d", "4", "--e", "5", "--f", "6"], 0),
    ("catalog-show-nonlie", &["catalog", "show", "sl2-nonlie", "--params", "a1=1,a2=0,a3=0,a4=0,b1=0,b2=0"], 0),
    ("catalog-show-unknown", &["catalog", "show", "sl3"], 2),
    ("catalog-show-bad-param", &["catalog", "show", "sl2-twist", "--g", "1"], 2),
    ("probe-json", &["probe", "--samples", "25", "--seed", "1", "--json"], 0),
    ("usage-none", &[], 2),
];

/// Runs every case, checks its exit code and compares output with its golden
/// file. Returns one message per mismatch; rewrites the goldens instead when
/// `update` is set.
pub fn golden_mismatches(update: bool) -> Vec<String> {
    let mut mismatched = Vec::new();
    for (name, args, code) in CASES {
        let r = run(args);
        if r.code != *code {
            mismatched.push(format!("{name}: exit code {} (expected {code}); stderr: {}", r.code, r.stderr));
            continue;
        }
        let mut got = r.stdout.clone();
        if !r.stderr.is_empty() {
            got.push_str("--- stderr ---\n");
            got.push_str(&r.stderr);
        }
        let path = manifest().join("tests/golden").join(format!("{name}.out"));
        if update {
            fs::write(&path, &got).expect("golden directory is writable");
            continue;
        }
        match fs::read_to_string(&path) {
            Ok(want) if want == got => {}
            Ok(want) => mismatched.push(format!("{name}:\n--- want\n{want}\n--- got\n{got}")),
            Err(_) => mismatched.push(format!("{name}: missing golden {}", path.display())),
        }
    }
    mismatched
}

/// Catalog exports that must survive parse and re-export unchanged.
pub const ROUND_TRIP: &[(&str, &[&str])] = &[
    ("sl2-efh", &[]),
    ("sl2-x", &[]),
    ("sl2-twist", &["--a", "1/2", "--f", "-3"]),
    ("jackson-sl2", &["--N", "7"]),
    ("sl2-inf-1", &[]),
    ("sl2-inf-2", &["--params", "a1=2,b4=-1/3"]),
    ("sl2-inf-3", &["--N", "2"]),
    ("sl2-nonlie", &["--N", "3"]),
    ("qplane", &["--lambda", "2", "--nu", "-1"]),
];

/// Exported text and its parse-then-export image.
pub fn reexport(name: &str, args: &[&str]) -> (String, String) {
    let mut full = vec!["catalog", "export", name];
    full.extend_from_slice(args);
    let first = run(&full);
    assert_eq!(first.code, 0, "{name}: {}", first.stderr);
    let text = first.stdout;
    let again = if text.contains("\"orders\"") {
        let f = files::parse_deformation_file(&text).unwrap();
        let (d, labels) = f.to_series().unwrap();
        files::to_canonical(&DeformationFile::from_series(&d, &labels).unwrap())
    } else {
        let f = files::parse_algebra_file(&text).unwrap();
        files::to_canonical(&AlgebraFile::from_algebra(&f.to_algebra().unwrap()))
    };
    (text, again)
}
