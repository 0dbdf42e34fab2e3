use std::process::Command;

use invseq_cli::{parse_basis, run, EXIT_FAILED, EXIT_OK, EXIT_USAGE};

fn invseq(args: &str) -> invseq_cli::Outcome {
    run(std::iter::once("invseq").chain(args.split_whitespace()))
}

#[test]
fn count_by_rules() {
    let out = invseq("count --system 201-210 --n 7 --method rules");
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(out.stdout, "3720\n");
}

#[test]
fn count_methods_agree() {
    for method in ["rules", "oracle", "gf"] {
        let out = invseq(&format!("count --basis 210,201 --n 6 --method {method}"));
        assert_eq!(out.stdout, "632\n", "{method}");
    }
    assert_eq!(invseq("count --basis 011,201 --n 5").stdout, "51\n");
}

#[test]
fn bfile_output() {
    let out = invseq("series --system 201-210 --n-max 5 --format bfile");
    assert_eq!(out.stdout, "0 1\n1 1\n2 2\n3 6\n4 24\n5 116\n");
}

#[test]
fn csv_and_plain_output() {
    let csv = invseq("series --basis 10 --n-max 3 --format csv");
    assert_eq!(csv.stdout, "n,count\n0,1\n1,1\n2,2\n3,5\n");
    let plain = invseq("series --system 011-201 --n-max 5");
    assert_eq!(plain.stdout, "1 + 1*x + 2*x^2 + 5*x^3 + 15*x^4 + 51*x^5\n");
}

#[test]
fn verify_passes_and_reports() {
    let out = invseq("verify --check oracle-vs-rules --n-max 10");
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.starts_with("PASS oracle-vs-rules"));
    for check in [
        "minpoly-A --n-max 40",
        "system-201-210 --n-max 10",
        "fe-vs-rules --n-max 12",
        "known-values",
    ] {
        assert_eq!(
            invseq(&format!("verify --check {check}")).code,
            EXIT_OK,
            "{check}"
        );
    }
    let conj = invseq("verify --check conjecture-010-102 --n-max 9");
    assert!(conj.stdout.contains("conjecture evidence"));
}

#[test]
fn usage_errors() {
    let bad = invseq("count --basis 202 --n 3");
    assert_eq!(bad.code, EXIT_USAGE);
    assert!(bad.stderr.contains("not an inversion pattern"));
    assert_eq!(
        invseq("count --basis 10 --n 3 --method rules").code,
        EXIT_USAGE
    );
    assert_eq!(
        invseq("count --system 011-201 --n 3 --method gf").code,
        EXIT_USAGE
    );
    assert_eq!(invseq("verify --check no-such-check").code, EXIT_USAGE);
    assert_eq!(invseq("count --n 3").code, EXIT_USAGE);
    assert_eq!(
        invseq("count --system 201-210 --basis 10 --n 3").code,
        EXIT_USAGE
    );
    assert_eq!(
        invseq("series --system 201-210 --n-max 3 --format dot").code,
        EXIT_USAGE
    );
    assert_ne!(EXIT_FAILED, EXIT_USAGE);
}

#[test]
fn basis_parsing() {
    assert_eq!(parse_basis("201,210").unwrap().len(), 2);
    assert!(parse_basis("").unwrap().is_empty());
    assert!(parse_basis("202")
        .unwrap_err()
        .to_string()
        .contains("not an inversion pattern"));
    assert!(parse_basis("2a1").is_err());
}

#[test]
fn diagram_and_profile() {
    let dot = invseq("diagram --system 201-210 --n 3").stdout;
    assert!(dot.starts_with("digraph \"201-210\" {"));
    assert!(dot.contains("label=\"(1,T,T)\", depth=3, count=4"));
    let profile = invseq("profile --system 201-210 --n 3 --format csv").stdout;
    assert!(profile.starts_with("state,count\n"));
    assert!(profile.contains("\"(2,T,F)\",1\n"));
}

#[test]
fn binary_is_deterministic() {
    let bin = env!("CARGO_BIN_EXE_invseq");
    let args = [
        "series", "--basis", "010,102", "--n-max", "9", "--format", "bfile",
    ];
    let a = Command::new(bin).args(args).output().unwrap();
    let b = Command::new(bin).args(args).output().unwrap();
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    assert!(text.ends_with("9 11024\n"));
    assert!(text.lines().all(|l| !l.ends_with(' ')));

    let fail = Command::new(bin)
        .args(["count", "--basis", "202", "--n", "2"])
        .output()
        .unwrap();
    assert_eq!(fail.status.code(), Some(EXIT_USAGE));
}
