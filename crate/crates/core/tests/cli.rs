mod common;

use std::process::Command;

use common::{golden_path, run_cli, GOLDEN_CASES};
use radtrig::cli::{EXIT_IO, EXIT_OK, EXIT_USAGE, EXIT_VERIFY};

#[test]
fn golden_outputs_in_process() {
    for &(file, args, code) in GOLDEN_CASES {
        let want = std::fs::read_to_string(golden_path(file)).unwrap();
        let (got_code, out, err) = run_cli(args);
        assert_eq!(got_code, code, "{file}: {err}");
        assert_eq!(out, want, "{file}");
    }
}

#[test]
fn golden_outputs_from_binary() {
    for &(file, args, code) in GOLDEN_CASES {
        let want = std::fs::read(golden_path(file)).unwrap();
        let out = Command::new(env!("CARGO_BIN_EXE_radtrig"))
            .args(args)
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(code), "{file}");
        assert_eq!(out.stdout, want, "{file}");
    }
}

#[test]
fn help_and_version_go_to_stdout() {
    let (code, out, err) = run_cli(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("cardioid") && err.is_empty());
    let (code, out, _) = run_cli(&["--version"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("radtrig "));
}

#[test]
fn usage_errors() {
    for args in [
        &[
            "integrate",
            "--family",
            "tan",
            "--sign",
            "+",
            "--from",
            "0",
            "--to",
            "1",
        ][..],
        &[
            "integrate",
            "--family",
            "sin",
            "--sign",
            "*",
            "--from",
            "0",
            "--to",
            "1",
        ],
        &["eval", "--family", "sin", "--sign", "+", "--x", "tau"],
        &["eval", "--family", "sin", "--sign", "+"],
        &["cardioid", "--a", "-1", "--trig", "sin", "--sign", "+"],
        &["cardioid", "--a", "0", "--trig", "sin", "--sign", "+"],
        &[
            "antideriv",
            "--family",
            "cos",
            "--sign",
            "+",
            "--form",
            "I1",
            "--x",
            "1",
        ],
        &[
            "antideriv",
            "--family",
            "sin",
            "--sign",
            "+",
            "--form",
            "I2",
            "--x",
            "1",
        ],
        &[
            "antideriv",
            "--family",
            "sin",
            "--sign",
            "+",
            "--form",
            "G1",
            "--x",
            "1",
            "--global-base",
            "0",
        ],
        &[
            "antideriv",
            "--family",
            "sin",
            "--sign",
            "+",
            "--form",
            "A",
            "--x",
            "1",
            "--global-base",
            "pi/2",
        ],
        &["plot", "cardioid", "--samples", "2"],
        &["frobnicate"],
    ] {
        let (code, out, err) = run_cli(args);
        assert_eq!(code, EXIT_USAGE, "{args:?}");
        assert!(out.is_empty(), "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
}

#[test]
fn negative_angles_and_pi_expressions() {
    let (code, out, _) = run_cli(&["eval", "--family", "cos", "--sign", "+", "--x", "-pi"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "0\n");
    let (code, out, _) = run_cli(&[
        "integrate",
        "--family",
        "sin",
        "--sign",
        "+",
        "--from",
        "-2pi",
        "--to",
        "0",
        "--method",
        "floor",
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("value: 5.65685424949238\n"), "{out}");
    assert!(!out.contains("oracle:"));
}

#[test]
fn every_method_and_form_is_reachable() {
    for m in ["global", "split", "floor", "oracle"] {
        let (code, out, _) = run_cli(&[
            "cardioid", "--a", "3", "--trig", "sin", "--sign", "-", "--method", m,
        ]);
        assert_eq!(code, EXIT_OK);
        let v: f64 = out
            .lines()
            .find_map(|l| l.strip_prefix("value: "))
            .unwrap()
            .parse()
            .unwrap();
        assert!((v - 24.0).abs() < 1e-6, "{m}: {v}");
    }
    for f in ["A", "B", "C1", "C2", "G1", "G2", "a", "g2"] {
        let (code, out, _) = run_cli(&[
            "antideriv",
            "--family",
            "cos",
            "--sign",
            "-",
            "--form",
            f,
            "--x",
            "1",
        ]);
        assert_eq!(code, EXIT_OK, "{f}");
        assert!(out.trim().parse::<f64>().is_ok());
    }
    let (code, out, _) = run_cli(&[
        "antideriv",
        "--family",
        "sin",
        "--sign",
        "+",
        "--form",
        "A",
        "--x",
        "2pi",
        "--global-base",
        "0",
    ]);
    assert_eq!(code, EXIT_OK);
    let v: f64 = out.trim().parse().unwrap();
    assert!((v - (4.0 * 2f64.sqrt() - 2.0)).abs() < 1e-12, "{v}");
}

#[test]
fn plot_writes_files_and_reports_io_errors() {
    let dir = std::env::temp_dir().join(format!("radtrig-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("a.svg");
    let (code, out, _) = run_cli(&[
        "plot",
        "antiderivative",
        "--trig",
        "sin",
        "--sign",
        "+",
        "--form",
        "A",
        "--global",
        "--format",
        "svg",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(out.is_empty());
    let svg = std::fs::read_to_string(&path).unwrap();
    assert_eq!(svg.matches("<polyline").count(), 1);
    std::fs::remove_dir_all(&dir).unwrap();

    let missing = dir.join("no/such/dir/x.csv");
    let (code, _, err) = run_cli(&["plot", "cardioid", "--out", missing.to_str().unwrap()]);
    assert_eq!(code, EXIT_IO);
    assert!(err.contains("x.csv"));
}

#[test]
fn verify_exit_code_tracks_discrepancy() {
    let (code, out, _) = run_cli(&[
        "integrate",
        "--family",
        "sin",
        "--sign",
        "-",
        "--from",
        "-10",
        "--to",
        "25",
        "--verify",
    ]);
    assert_eq!(code, EXIT_OK, "{out}");
    let d: f64 = out
        .lines()
        .find_map(|l| l.strip_prefix("discrepancy: "))
        .unwrap()
        .parse()
        .unwrap();
    assert!(d <= radtrig::cli::VERIFY_THRESHOLD);
    assert_ne!(EXIT_VERIFY, EXIT_OK);
}
