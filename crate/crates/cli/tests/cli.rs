use std::path::Path;

use ordconf::RingPresentation;
use ordconf_cli::{
    coeff_name, conf_name, read_table_file, run_captured, EXIT_GUARD, EXIT_INPUT, EXIT_VERIFY,
};

fn golden(stem: &str) -> String {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    read_table_file(&dir, stem).unwrap()
}

fn ok(args: &[&str]) -> (String, String) {
    let (code, out, err) = run_captured(args);
    assert_eq!(code, 0, "ordconf {args:?}: {err}");
    (out, err)
}

fn rank_jobs(err: &str) -> usize {
    err.lines()
        .find_map(|l| l.strip_prefix("rank jobs: "))
        .expect("rank job count on stderr")
        .parse()
        .unwrap()
}

#[test]
fn tables_match_goldens_up_to_three() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    ok(&["tables", "--nmax", "3", "--out", out]);
    for n in 2..=3 {
        assert_eq!(
            read_table_file(dir.path(), &conf_name(n, true)).unwrap(),
            golden(&conf_name(n, true))
        );
    }
    // n = 1 carries the cohomology of C itself: 1, 2, 1
    let one = read_table_file(dir.path(), &conf_name(1, false)).unwrap();
    assert_eq!(one, "q\\p,0,1,2\n0,1,2,1\n");
}

#[test]
fn tables_to_stdout_in_markdown_and_json() {
    let (md, _) = ok(&["tables", "--nmax", "2", "--format", "md"]);
    assert!(md.contains("# H^{p,q}(conf(C,2)/C)"));
    assert!(md.contains('|'));
    let (json, _) = ok(&["tables", "--nmax", "2", "--format", "json"]);
    assert!(json.contains("\"certified\": true"));
}

#[test]
fn graded_three_is_a_single_two() {
    let dir = tempfile::tempdir().unwrap();
    ok(&[
        "graded",
        "--rmax",
        "3",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    let t = read_table_file(dir.path(), &coeff_name(3, true, None)).unwrap();
    assert_eq!(t, golden(&coeff_name(3, true, None)));
    let cells: Vec<&str> = t
        .lines()
        .skip(1)
        .flat_map(|l| l.split(',').skip(1))
        .filter(|c| !c.is_empty() && *c != "0")
        .collect();
    assert_eq!(cells, ["2"]);
}

#[test]
fn graded_single_weight() {
    let dir = tempfile::tempdir().unwrap();
    ok(&[
        "graded",
        "--rmax",
        "4",
        "--weight",
        "-1",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(dir
        .path()
        .join(format!("{}.csv", coeff_name(4, false, Some(-1))))
        .exists());
}

#[test]
fn oyster_bounds_and_listings() {
    let (out, _) = ok(&["oyster", "--p", "2", "--q", "3"]);
    assert!(out.contains("bound = 63"), "{out}");
    assert!(out.contains("(4,4)") && out.contains("(6,1,1)"), "{out}");
    let (out, _) = ok(&["oyster", "--p", "2", "--q", "1"]);
    assert!(out.contains("bound = 10"), "{out}");
    let (out, _) = ok(&["oyster", "--k", "3", "--a", "0", "--size", "2"]);
    assert!(out.contains(": 0"), "{out}");
    assert_eq!(run_captured(&["oyster", "--q", "1"]).0, EXIT_INPUT);
}

#[test]
fn betti_listing() {
    let (out, _) = ok(&["betti", "--kmax", "2", "--at", "3"]);
    assert!(out.contains("b_0 = 1; b_0(3) = 1"), "{out}");
    assert!(out.contains("b_1 = 2·n; b_1(3) = 6"), "{out}");
    assert!(
        out.contains("b_2 = 2·C(n,3)+3·C(n,2)+n; b_2(3) = 14"),
        "{out}"
    );
}

#[test]
fn guards_and_bad_input() {
    assert_eq!(run_captured(&["tables", "--nmax", "8"]).0, EXIT_GUARD);
    assert_eq!(run_captured(&["graded", "--rmax", "9"]).0, EXIT_GUARD);
    assert_eq!(
        run_captured(&["graded", "--rmax", "11", "--weight", "0"]).0,
        EXIT_GUARD
    );
    assert_eq!(run_captured(&["betti", "--kmax", "6"]).0, EXIT_GUARD);
    assert_eq!(
        run_captured(&["tables", "--ring", "/nonexistent/ring.json"]).0,
        EXIT_INPUT
    );
    assert_eq!(run_captured(&["tables", "--primes", "15"]).0, EXIT_INPUT);
    assert_eq!(run_captured(&["tables", "--jobs", "0"]).0, EXIT_INPUT);
    assert_eq!(run_captured(&["frobnicate"]).0, EXIT_INPUT);
    assert_eq!(run_captured(&["--help"]).0, 0);

    let dir = tempfile::tempdir().unwrap();
    let garbage = dir.path().join("bad.json");
    std::fs::write(&garbage, "{ not json").unwrap();
    assert_eq!(
        run_captured(&["tables", "--ring", garbage.to_str().unwrap()]).0,
        EXIT_INPUT
    );

    // quotient complexes need χ = 0
    let surface = dir.path().join("surface.json");
    std::fs::write(&surface, RingPresentation::surface(2).to_json()).unwrap();
    let s = surface.to_str().unwrap();
    assert_eq!(
        run_captured(&["graded", "--rmax", "3", "--ring", s]).0,
        EXIT_INPUT
    );
    let (out, _) = ok(&["tables", "--nmax", "2", "--ring", s]);
    assert!(!out.contains("/C"));
}

#[test]
fn verify_quick_passes() {
    let (out, _) = ok(&["verify", "--level", "quick"]);
    assert!(out.lines().all(|l| !l.starts_with("FAIL")), "{out}");
    assert!(out.contains("checks passed"), "{out}");
}

#[test]
fn warm_cache_is_idempotent() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache.json");
    let (a, b) = (dir.path().join("a"), dir.path().join("b"));
    let run = |out: &Path| {
        ok(&[
            "tables",
            "--nmax",
            "4",
            "--cache",
            cache.to_str().unwrap(),
            "--out",
            out.to_str().unwrap(),
        ])
    };
    let (_, cold) = run(&a);
    assert!(rank_jobs(&cold) > 0);
    let (_, warm) = run(&b);
    assert_eq!(rank_jobs(&warm), 0);
    for n in 1..=4 {
        for over in [false, true] {
            let stem = conf_name(n, over);
            assert_eq!(
                read_table_file(&a, &stem).unwrap(),
                read_table_file(&b, &stem).unwrap()
            );
        }
    }
}

#[test]
fn tampered_cache_is_detected() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache.json");
    let c = cache.to_str().unwrap();
    ok(&["verify", "--level", "quick", "--cache", c]);

    let mut doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&cache).unwrap()).unwrap();
    let entries = doc["entries"].as_object_mut().unwrap();
    let victim = entries
        .iter_mut()
        .find(|(k, v)| k.contains("/graded/n=4/") && v["rank_out"].as_u64().unwrap() > 0)
        .map(|(_, v)| v)
        .unwrap();
    let r = victim["rank_out"].as_u64().unwrap();
    victim["rank_out"] = (r - 1).into();
    std::fs::write(&cache, serde_json::to_string(&doc).unwrap()).unwrap();

    let (code, out, _) = run_captured(&["verify", "--level", "quick", "--cache", c]);
    assert_eq!(code, EXIT_VERIFY, "{out}");
    assert!(out.contains("FAIL"), "{out}");
}
