//! The command line criterion: round trip of the expression printer, the
//! exit code contract and schema validation of every JSON output.

mod common;

use std::process::ExitCode;

use proptest::strategy::{Strategy, ValueTree};
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use qsuper_cli::expr::parse;
use serde_json::Value;

const ROUND_TRIPS: usize = 1000;

fn round_trips() -> (usize, Option<String>) {
    let rng = TestRng::from_seed(RngAlgorithm::ChaCha, &[7; 32]);
    let mut runner = TestRunner::new_with_rng(Config::default(), rng);
    let strategy = common::expr_strategy();
    let mut ok = 0;
    for _ in 0..ROUND_TRIPS {
        let e = strategy.new_tree(&mut runner).expect("tree").current();
        let printed = e.to_string();
        match parse(&printed) {
            Ok(back) if back == e && back.to_string() == printed => ok += 1,
            Ok(_) => return (ok, Some(format!("changed by round trip: {printed}"))),
            Err(err) => return (ok, Some(format!("{printed}: {err}"))),
        }
    }
    (ok, None)
}

fn exit_contract() -> (usize, usize, Vec<String>) {
    let cases: [(&[&str], i32); 8] = [
        (&["nf", "d*a"], 0),
        (&["verify", "--suite", "hopf", "--degree", "4"], 0),
        (&["verify", "--suite", "spheres", "--route", "stated"], 1),
        (&["haar", "1/(t - t)"], 1),
        (&["nf", "a*("], 2),
        (&["unknown-command"], 2),
        (&["nf", "a", "--unknown-flag"], 2),
        (&["sphere"], 2),
    ];
    let mut bad = Vec::new();
    for (args, code) in cases {
        let r = common::qsuper(args);
        if r.code != code {
            bad.push(format!("{args:?} exited {} (want {code})", r.code));
        }
    }
    (cases.len() - bad.len(), cases.len(), bad)
}

fn schema_validation() -> (usize, usize, Vec<String>) {
    let schema = common::schema();
    let mut bad = Vec::new();
    let mut total = 0;
    for (args, code) in common::JSON_CASES {
        if *code == 2 {
            continue;
        }
        total += 1;
        let mut full = vec!["--json"];
        full.extend_from_slice(args);
        let r = common::qsuper(&full);
        match serde_json::from_str::<Value>(&r.stdout) {
            Ok(v) => {
                let errs = common::validation_errors(&schema, &v);
                if !errs.is_empty() {
                    bad.push(format!("{args:?}: {}", errs.join("; ")));
                }
            }
            Err(e) => bad.push(format!("{args:?}: not JSON ({e})")),
        }
    }
    (total - bad.len(), total, bad)
}

fn main() -> ExitCode {
    let (trips, trip_err) = round_trips();
    let (codes_ok, codes, code_errs) = exit_contract();
    let (valid, outputs, schema_errs) = schema_validation();
    let pass = trip_err.is_none() && code_errs.is_empty() && schema_errs.is_empty();
    println!(
        "criterion 11: {}: cli [round trip {trips}/{ROUND_TRIPS}, exit codes {codes_ok}/{codes}, json schema {valid}/{outputs}]",
        if pass { "PASS" } else { "FAIL" }
    );
    for e in trip_err.iter().chain(&code_errs).chain(&schema_errs) {
        println!("  {e}");
    }
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
