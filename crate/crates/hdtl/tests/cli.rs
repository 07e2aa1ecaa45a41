use std::process::Command;

use hdtl::cli::{AutDocument, ClassesDocument, DimsDocument, ElementDocument, LawsDocument};
use hdtl::format::TableDocument;
use hdtl::run;

fn binary(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_hdtl")).args(args).output().expect("binary runs")
}

#[test]
fn dims_text() {
    let out = binary(&["dims", "(())", "(())"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "sh=9 h=9 |Pi_top|=1 |Pi_bottom|=1\n");
}

#[test]
fn compose_z2_example() {
    let out = binary(&["compose", "()()", "t1,b1|t2|b2", "t1,b1|t2|b2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "1/2*q * [t1,b1|t2|b2] + 1/2 * [t1|t2|b1|b2]\n");
}

#[test]
fn compose_across_configurations() {
    let out = run(["hdtl", "compose", "--top", "", "--mid", "()", "--bottom", "", "b1", "t1"]);
    assert_eq!((out.code, out.stdout.as_str()), (0, "q * []\n"));
}

#[test]
fn malformed_input_exits_one() {
    let out = binary(&["table", "(()"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr).unwrap().contains("unclosed"));
    assert_eq!(run(["hdtl", "compose", "()", "t1,b1", "t9"]).code, 1);
    assert_eq!(run(["hdtl", "dims", "()"]).code, 1);
    assert_eq!(run(["hdtl", "--help"]).code, 0);
}

#[test]
fn aut_text_and_json() {
    let out = run(["hdtl", "aut", "()()"]);
    assert_eq!(out.stdout, "order=2\n()\n(t1 t2)\n");
    let out = run(["hdtl", "aut", "(()())", "--format", "json"]);
    let doc: AutDocument = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!((doc.schema.as_str(), doc.order, doc.elements.len()), ("hdtl-aut/1", 2, 2));
    assert_eq!(doc.elements[0].images, vec![1, 2, 3]);
}

#[test]
fn json_documents_deserialise() {
    let dims: DimsDocument =
        serde_json::from_str(&run(["hdtl", "dims", "()()", "()()", "--format", "json"]).stdout).unwrap();
    assert_eq!((dims.sh_classes, dims.h_classes, dims.top_group_order), (15, 9, 2));

    let classes: ClassesDocument =
        serde_json::from_str(&run(["hdtl", "classes", "()()", "()()", "--format", "json"]).stdout).unwrap();
    assert_eq!(classes.h_classes.len(), 9);
    assert_eq!(classes.h_classes.iter().map(|h| h.orbit.len()).sum::<usize>(), 15);

    let out = run(["hdtl", "compose", "()()", "t1,b1|t2|b2", "t1,b1|t2|b2", "--format", "json"]);
    let element: ElementDocument = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(element.terms.len(), 2);

    let out =
        run(["hdtl", "check", "()()()", "--mode", "sampled", "--seed", "7", "--samples", "50", "--format", "json"]);
    let laws: LawsDocument = serde_json::from_str(&out.stdout).unwrap();
    assert!(laws.passed);
    assert_eq!((laws.seed, laws.samples), (Some(7), Some(50)));

    let table: TableDocument =
        serde_json::from_str(&run(["hdtl", "table", "(())", "--format", "json"]).stdout).unwrap();
    assert_eq!(table.basis.len(), 9);
    assert!(hdtl::parse_table(&serde_json::to_string(&table).unwrap()).is_ok());
}

#[test]
fn repeated_runs_are_byte_identical() {
    for args in [
        vec!["table", "(()())", "--format", "json"],
        vec!["check", "()()()", "--mode", "sampled", "--samples", "200"],
        vec!["classes", "()()", "(())", "--sh"],
    ] {
        let first = binary(&args);
        let second = binary(&args);
        assert_eq!(first.stdout, second.stdout, "{args:?}");
    }
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.csv");
    let path_text = path.to_str().unwrap();
    let out = run(["hdtl", "table", "()", "--format", "csv", "--output", path_text]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.starts_with("row \\ col,"));
}

#[test]
fn table_limit_is_enforced() {
    let out = run(["hdtl", "table", "(()())", "--limit", "10"]);
    assert_eq!(out.code, 1);
    assert!(!out.stderr.is_empty());
}
