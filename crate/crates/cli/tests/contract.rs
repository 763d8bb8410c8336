mod common;

use common::{qsuper, schema, validation_errors, JSON_CASES};
use serde_json::Value;

#[test]
fn examples() {
    let r = qsuper(&["nf", "a*d + t*b*c"]);
    assert_eq!((r.code, r.stdout.trim()), (0, "s"));
    assert_eq!(qsuper(&["nf", "s^2"]).stdout.trim(), "1");
    // a*d - (t^-1 - t)*b*c, printed with a canonical coefficient
    let r = qsuper(&["--ring", "B", "nf", "d*a"]);
    assert_eq!(r.stdout.trim(), "a*d + ((t^2 - 1)/t)*b*c");
    assert_eq!(qsuper(&["nf", "c*b", "--ring", "B"]).stdout.trim(), "-b*c");
    assert_eq!(qsuper(&["nf", "s*b"]).stdout.trim(), "-b*s");
    assert_eq!(qsuper(&["haar", "zeta"]).stdout.trim(), "t^2/(t^2 + 1)");
    assert_eq!(qsuper(&["inner", "a", "a"]).stdout.trim(), "1/(t^2 + 1)");
    assert_eq!(qsuper(&["inner", "a", "b"]).stdout.trim(), "0");
    let r = qsuper(&["verify", "--suite", "hopf", "--degree", "4"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    let r = qsuper(&["sphere", "--infinity", "--check", "characters"]);
    assert_eq!(r.stdout, "sphere infinity\n(y-1, y0, y1) = (0, 1, 0)\n(y-1, y0, y1) = (0, -1, 0)\n");
}

#[test]
fn numeric_mode() {
    let r = qsuper(&["eps", "t", "--numeric", "q=-2"]);
    let v: f64 = r.stdout.lines().nth(1).unwrap().rsplit(": ").next().unwrap().parse().unwrap();
    assert!((v + 2f64.sqrt()).abs() < 1e-12);
    let r = qsuper(&["haar", "1 + t^2", "--numeric", "q=-1/2"]);
    assert!(r.stdout.contains("at q = -0.5: 1.5"), "{}", r.stdout);
    assert_eq!(qsuper(&["nf", "a", "--numeric", "q=-2"]).code, 2);
    assert_eq!(qsuper(&["eps", "a", "--numeric", "-2"]).code, 2);
}

#[test]
fn exit_codes() {
    let r = qsuper(&["nf", "a*("]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("offset 3"), "{}", r.stderr);
    assert_eq!(qsuper(&["frobnicate"]).code, 2);
    assert_eq!(qsuper(&["nf", "a", "--no-such-flag"]).code, 2);
    assert_eq!(qsuper(&["nf"]).code, 2);
    assert_eq!(qsuper(&["matcoef", "--twoL", "9"]).code, 2);
    assert_eq!(qsuper(&["sphere", "--alpha", "1,0,1", "--infinity"]).code, 2);
    assert_eq!(qsuper(&["sphere", "--alpha", "0,0,0"]).code, 1);
    assert_eq!(qsuper(&["nf", "1/(t - t)"]).code, 1);
    assert_eq!(qsuper(&["--ring", "B", "nf", "s"]).code, 1);
    assert_eq!(qsuper(&["--ring", "B", "haar", "a"]).code, 1);
    assert_eq!(qsuper(&["verify", "--suite", "corep", "--degree", "3", "--route", "stated"]).code, 1);
    assert_eq!(qsuper(&["verify", "--suite", "corep", "--degree", "3"]).code, 0);
    assert_eq!(qsuper(&["--help"]).code, 0);
}

#[test]
fn cache_size_does_not_change_results() {
    let a = qsuper(&["haar", "b^2*c^2*s"]);
    let b = qsuper(&["--cache-size", "0", "haar", "b^2*c^2*s"]);
    let c = qsuper(&["--cache-size", "3", "haar", "b^2*c^2*s"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn json_outputs_match_schema() {
    let schema = schema();
    for (args, code) in JSON_CASES {
        let mut full = vec!["--json"];
        full.extend_from_slice(args);
        let r = qsuper(&full);
        assert_eq!(r.code, *code, "{args:?}: {}", r.stderr);
        if *code == 2 {
            continue;
        }
        let v: Value = serde_json::from_str(&r.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}"));
        let errs = validation_errors(&schema, &v);
        assert!(errs.is_empty(), "{args:?}: {errs:?}");
    }
}
