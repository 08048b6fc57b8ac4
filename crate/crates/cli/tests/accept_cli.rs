//! Argument handling, exit codes and output shapes of the `aspw` binary.

use std::process::Command;

use aspw::{run, EXIT_INPUT, EXIT_OK};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_aspw"))
}

#[test]
fn witt_sum_in_z_mod_4() {
    let out = bin().args(["witt", "add", "--p", "2", "--m", "2", "[1;0]", "[1;0]"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "[0;1]\n");
}

#[test]
fn parse_errors_point_at_the_column() {
    let out = run(["aspw", "reduce", "--field", "p=3", "--f", "X^3-X", "--u", "T + * 2"]);
    assert_eq!(out.code, EXIT_INPUT);
    assert!(out.stderr.contains("column 5"), "{}", out.stderr);
    assert!(out.stdout.is_empty());
}

#[test]
fn module_errors_exit_with_two() {
    // X^9 - X over F_3 has only three roots in the constant field
    let out = run(["aspw", "ramify", "--field", "p=3", "--f", "X^9-X", "--u", "T"]);
    assert_eq!(out.code, EXIT_INPUT);
    let out = run(["aspw", "witt", "add", "--p", "2", "--m", "9", "[1]", "[1]"]);
    assert_eq!(out.code, EXIT_INPUT);
}

#[test]
fn usage_errors_and_help() {
    assert_eq!(run(["aspw", "frobnicate"]).code, EXIT_INPUT);
    let help = run(["aspw", "--help"]);
    assert_eq!(help.code, EXIT_OK);
    assert!(help.stdout.contains("witt"));
}

#[test]
fn json_reports_carry_the_schema() {
    let out = run(["aspw", "--json", "witt", "infty", "--p", "3", "--m", "2", "[0;T]"]);
    assert_eq!(out.code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["schema"], "aspw/1");
    assert_eq!((v["e"].as_u64(), v["f"].as_u64(), v["g"].as_u64()), (Some(3), Some(1), Some(3)));
}

#[test]
fn split_text_for_cubic_example() {
    let u = "1/(T+1)^54 + 1/(T+1) + T^9+T^3+T+w+1";
    let out = run(["aspw", "split", "--field", "p=3,s=3,mod=x^3-x-2", "--f", "X^27-X", "--u", u, "--place", "inf"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("e=3 f=3 g=3"), "{}", out.stdout);
}

#[test]
fn split_with_oracle_at_finite_places() {
    for place in ["T", "T+2", "T+w", "inf"] {
        let out = run(["aspw", "split", "--field", "p=3,s=2", "--f", "X^9-X", "--u", "T^2+1/T", "--place", place, "--oracle"]);
        assert_eq!(out.code, EXIT_OK, "{place}: {}{}", out.stdout, out.stderr);
    }
}

#[test]
fn jobs_do_not_change_the_report() {
    let args = |j: &'static str| {
        run(["aspw", "--json", "--jobs", j, "verify", "oracle", "--field", "p=2,s=2", "--n", "2", "--count", "12", "--max-place-degree", "2"])
    };
    let (a, b) = (args("1"), args("4"));
    assert_eq!(a.code, EXIT_OK);
    assert_eq!(a.stdout, b.stdout);
}
