mod common;

use proptest::prelude::*;
use qsuper_cli::expr::parse;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn print_then_parse_is_identity(e in common::expr_strategy()) {
        let printed = e.to_string();
        let back = parse(&printed).map_err(|err| TestCaseError::fail(format!("{printed}: {err}")))?;
        prop_assert_eq!(&back, &e);
        prop_assert_eq!(back.to_string(), printed);
    }
}

#[test]
fn whitespace_and_redundant_parentheses() {
    let a = parse("((a)) * ( b^2 )  -  -c").unwrap();
    let b = parse("a*b^2 - -c").unwrap();
    assert_eq!(a, b);
    assert_eq!(parse(&a.to_string()).unwrap(), a);
}
