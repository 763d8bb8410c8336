#![allow(dead_code)]

use std::process::Command;

use jsonschema::JSONSchema;
use proptest::prelude::*;
use qsuper_cli::expr::{Expr, Sym};
use serde_json::Value;

pub fn expr_strategy() -> impl Strategy<Value = Expr> {
    let leaf =
        prop_oneof![(0u64..50).prop_map(Expr::Int), proptest::sample::select(Sym::ALL.to_vec()).prop_map(Expr::Sym),];
    leaf.prop_recursive(5, 48, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|x| Expr::Neg(Box::new(x))),
            (inner.clone(), inner.clone()).prop_map(|(x, y)| Expr::Add(Box::new(x), Box::new(y))),
            (inner.clone(), inner.clone()).prop_map(|(x, y)| Expr::Sub(Box::new(x), Box::new(y))),
            (inner.clone(), inner.clone()).prop_map(|(x, y)| Expr::Mul(Box::new(x), Box::new(y))),
            (inner.clone(), inner.clone()).prop_map(|(x, y)| Expr::Div(Box::new(x), Box::new(y))),
            (inner, -3i64..6).prop_map(|(x, n)| Expr::Pow(Box::new(x), n)),
        ]
    })
}

pub fn schema() -> JSONSchema {
    let raw = include_str!("../../../../docs/schemas/output.schema.json");
    let v: Value = serde_json::from_str(raw).expect("schema is JSON");
    JSONSchema::options().with_draft(jsonschema::Draft::Draft202012).compile(&v).expect("schema compiles")
}

/// Every command in JSON mode, with the exit code it must produce.
pub const JSON_CASES: &[(&[&str], i32)] = &[
    (&["nf", "d*a", "--ring", "B"], 0),
    (&["nf", "a*d + t*b*c"], 0),
    (&["delta", "a*b"], 0),
    (&["eps", "a + d", "--numeric", "q=-2"], 0),
    (&["antipode", "b*s"], 0),
    (&["star", "i*c"], 0),
    (&["grade", "a*b"], 0),
    (&["grade", "a + b"], 0),
    (&["pair", "ef+fe", "a"], 0),
    (&["haar", "zeta", "--numeric", "q=-1/2"], 0),
    (&["haar", "sqrt"], 2),
    (&["inner", "a", "a", "--form", "l"], 0),
    (&["jacobi", "2", "--alpha", "1", "--zeta"], 0),
    (&["matcoef", "--twoL", "2", "--s", "1", "--closed-form"], 0),
    (&["matcoef", "--twoL", "1", "--closed-form", "--route", "stated"], 0),
    (&["gram", "--twoL-max", "1"], 0),
    (&["sphere", "--infinity", "--check", "relations"], 0),
    (&["sphere", "--alpha", "1,0,1"], 0),
    (&["sphere", "--infinity", "--check", "basis", "--degree", "1"], 0),
    (&["sphere", "--infinity", "--check", "characters"], 0),
    (&["verify", "--suite", "formulas", "--degree", "2"], 0),
    (&["verify", "--suite", "spheres", "--route", "stated"], 1),
];

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn qsuper(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_qsuper")).args(args).output().expect("binary runs");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8_lossy(&out.stdout).into_owned(),
        stderr: String::from_utf8_lossy(&out.stderr).into_owned(),
    }
}

pub fn validation_errors(schema: &JSONSchema, v: &Value) -> Vec<String> {
    match schema.validate(v) {
        Ok(()) => Vec::new(),
        Err(errs) => errs.map(|e| format!("{} at {}", e, e.instance_path)).collect(),
    }
}
