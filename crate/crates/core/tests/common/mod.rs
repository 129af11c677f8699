use std::path::PathBuf;

/// One invocation per subcommand, with its golden stdout file and exit code.
pub const GOLDEN_CASES: &[(&str, &[&str], i32)] = &[
    (
        "eval.txt",
        &["eval", "--family", "sin", "--sign", "-", "--x", "3pi/2"],
        0,
    ),
    (
        "antideriv.txt",
        &[
            "antideriv",
            "--family",
            "sin",
            "--sign",
            "+",
            "--form",
            "I1",
            "--x",
            "4.71238898038469",
        ],
        0,
    ),
    (
        "integrate.txt",
        &[
            "integrate",
            "--family",
            "cos",
            "--sign",
            "-",
            "--from",
            "0",
            "--to",
            "6.283185307179586",
            "--verify",
        ],
        0,
    ),
    (
        "cardioid.txt",
        &[
            "cardioid", "--a", "2.5", "--trig", "cos", "--sign", "+", "--verify",
        ],
        0,
    ),
    (
        "plot_cardioid.csv",
        &["plot", "cardioid", "--samples", "8"],
        0,
    ),
    (
        "plot_abs_carrier.svg",
        &[
            "plot",
            "abs-carrier",
            "--kind",
            "coshalf+sinhalf",
            "--samples",
            "16",
            "--format",
            "svg",
        ],
        0,
    ),
    ("verify_cardioid.txt", &["verify", "--scope", "cardioid"], 0),
];

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

/// Runs the CLI in-process and returns `(exit code, stdout, stderr)`.
#[allow(dead_code)]
pub fn run_cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("radtrig").chain(args.iter().copied());
    let code = radtrig::cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}
