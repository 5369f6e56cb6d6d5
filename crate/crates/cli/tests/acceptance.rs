//! Acceptance gate, continued from the library crate: criterion 11.

use std::process::Command;

fn run_with_threads(args: &[&str], threads: &str) -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_gft"))
        .args(args)
        .env("GFT_THREADS", threads)
        .output()
        .expect("binary runs");
    assert!(
        out.status.code() == Some(0) || out.status.code() == Some(2),
        "unexpected exit {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    out.stdout
}

#[test]
fn criterion_11_reports_are_byte_identical_across_thread_counts() {
    let invocations: Vec<Vec<&str>> = vec![
        vec![
            "verify",
            "--theorem",
            "1",
            "--coeffs",
            "0,1,0.2",
            "--points",
            "0,0.25",
            "--rho",
            "7.0710678",
        ],
        vec![
            "verify",
            "--theorem",
            "2",
            "--coeffs",
            "0,1,0.1,0.05i",
            "--points",
            "0,0.25,0.625",
            "--rho",
            "3",
        ],
        vec!["example", "--id", "5"],
        vec!["sup", "--kind", "t3", "--coeffs", "0,1,0.1,0.05", "--disk"],
        vec![
            "field",
            "--kind",
            "t1",
            "--coeffs",
            "0,1,0.2,0.1i",
            "--grid",
            "33",
        ],
        vec![
            "jack-probe",
            "--trials",
            "8",
            "--seed",
            "7",
            "--angular-samples",
            "1024",
            "--refine-iters",
            "48",
        ],
    ];
    for args in &invocations {
        let single = run_with_threads(args, "1");
        let multi = run_with_threads(args, "4");
        let repeat = run_with_threads(args, "4");
        assert!(!single.is_empty(), "no output for {args:?}");
        assert_eq!(single, multi, "thread count changed output of {args:?}");
        assert_eq!(multi, repeat, "repeat run changed output of {args:?}");
    }
    println!(
        "ACCEPTANCE 11: PASS - {} invocations byte-identical across GFT_THREADS in {{1, 4}}",
        invocations.len()
    );
}
