use std::path::PathBuf;
use std::process::Command;

/// One CLI invocation pinned by a golden file.
pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub env: &'static [(&'static str, &'static str)],
    pub exit: i32,
}

const fn case(name: &'static str, args: &'static [&'static str], exit: i32) -> Case {
    Case {
        name,
        args,
        env: &[],
        exit,
    }
}

pub const CASES: &[Case] = &[
    case("embed_interval_3", &["embed", "--model", "interval", "--depth", "3"], 0),
    case(
        "embed_negative_depth",
        &["embed", "--model", "interval", "--depth", "-1"],
        2,
    ),
    case("embed_square_2", &["embed", "--model", "square", "--depth", "2"], 0),
    case(
        "embed_tripod_2_csv",
        &["embed", "--model", "tripod", "--depth", "2", "--format", "csv"],
        0,
    ),
    case("embed_unknown_model", &["embed", "--model", "disk", "--depth", "2"], 2),
    case(
        "embed_over_default_cap",
        &["embed", "--model", "interval", "--depth", "13"],
        2,
    ),
    Case {
        name: "embed_over_env_cap",
        args: &["embed", "--model", "interval", "--depth", "3"],
        env: &[("PRIMCHAOS_MAX_DEPTH", "2")],
        exit: 2,
    },
    case(
        "chaos_realize_doubling_01",
        &["chaos", "realize", "--system", "doubling", "--word", "01"],
        0,
    ),
    case(
        "chaos_realize_doubling_01_decimal",
        &[
            "chaos",
            "realize",
            "--system",
            "doubling",
            "--word",
            "01",
            "--decimal",
            "6",
        ],
        0,
    ),
    case(
        "chaos_periodic_tent_01",
        &["chaos", "periodic", "--system", "tent", "--word", "01"],
        0,
    ),
    case(
        "chaos_realize_bad_symbol",
        &["chaos", "realize", "--system", "doubling", "--word", "2"],
        2,
    ),
    case(
        "chaos_unknown_system",
        &["chaos", "realize", "--system", "logistic", "--word", "0"],
        2,
    ),
    case(
        "chaos_dense_doubling_3",
        &["chaos", "dense", "--system", "doubling", "--depth", "3"],
        0,
    ),
    case(
        "chaos_sensitivity_doubling",
        &[
            "chaos",
            "sensitivity",
            "--system",
            "doubling",
            "--delta",
            "1/1048576",
            "--samples",
            "10",
        ],
        0,
    ),
    case(
        "chaos_sensitivity_tent",
        &["chaos", "sensitivity", "--system", "tent", "--delta", "1/16777216"],
        0,
    ),
    case(
        "chaos_transitivity_baker_4",
        &["chaos", "transitivity", "--system", "baker", "--depth", "4"],
        0,
    ),
    case(
        "chaos_sensitivity_baker",
        &["chaos", "sensitivity", "--system", "baker", "--delta", "1/16"],
        2,
    ),
    case(
        "chaos_transitivity_doubling_1",
        &["chaos", "transitivity", "--system", "doubling", "--depth", "1"],
        0,
    ),
    case(
        "surject_block_swap_8",
        &["surject", "--kind", "block", "--swap-halves", "--depth", "8"],
        0,
    ),
    case(
        "surject_block_padded",
        &[
            "surject",
            "--kind",
            "block",
            "--domain-blocks",
            "00",
            "--target-blocks",
            "1",
        ],
        0,
    ),
    case(
        "surject_block_overlap",
        &[
            "surject",
            "--kind",
            "block",
            "--domain-blocks",
            "0;01",
            "--target-blocks",
            "1;0",
        ],
        2,
    ),
    case(
        "surject_waypoint_square_single",
        &[
            "surject",
            "--kind",
            "waypoint",
            "--target",
            "square",
            "--point",
            "1/2=1/2,1/2",
        ],
        0,
    ),
    case(
        "surject_waypoint_out_of_order",
        &[
            "surject", "--kind", "waypoint", "--target", "interval", "--point", "1/2=0", "--point", "1/3=1",
        ],
        2,
    ),
    case(
        "surject_binary_16",
        &["surject", "--kind", "binary", "--depth", "16"],
        0,
    ),
    case(
        "surject_interleave_8_csv",
        &["surject", "--kind", "interleave", "--depth", "8", "--format", "csv"],
        0,
    ),
    case(
        "fintop_quotient_chain3",
        &["fintop", "quotient", "--space", "chain3", "--blocks", "ab|c"],
        0,
    ),
    case("fintop_sweep", &["fintop", "sweep"], 0),
    case(
        "fintop_quotient_not_partition",
        &["fintop", "quotient", "--blocks", "a|a"],
        2,
    ),
    case(
        "fintop_prop5_discrete4",
        &[
            "fintop",
            "verify-prop5",
            "--space",
            "discrete4",
            "--blocks",
            "ab|cd",
            "--reps",
            "a,c",
        ],
        0,
    ),
    case(
        "fintop_prop5_bad_rep",
        &[
            "fintop",
            "verify-prop5",
            "--space",
            "discrete4",
            "--blocks",
            "ab|cd",
            "--reps",
            "c,d",
        ],
        2,
    ),
    case(
        "fintop_lemma7_pairs",
        &[
            "fintop",
            "verify-lemma7",
            "--space",
            "discrete4",
            "--codomain",
            "discrete2",
            "--map",
            "a=a,b=a,c=b,d=b",
        ],
        0,
    ),
    case(
        "fintop_lemma7_discontinuous",
        &[
            "fintop",
            "verify-lemma7",
            "--space",
            "chain3",
            "--codomain",
            "discrete2",
            "--map",
            "a=a,b=b,c=b",
        ],
        1,
    ),
];

pub struct Run {
    pub exit: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run(args: &[&str], env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_primchaos"));
    cmd.args(args).env_remove("PRIMCHAOS_MAX_DEPTH");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    Run {
        exit: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
    }
}

/// Golden text: exit code, stdout, and stderr for rejected input.
pub fn transcript(r: &Run) -> String {
    let mut s = format!("exit: {}\n--- stdout\n{}", r.exit, r.stdout);
    if r.exit == 2 {
        s.push_str("--- stderr\n");
        s.push_str(&r.stderr);
    }
    s
}

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{name}.txt"))
}

/// Runs every case twice; returns the mismatches. With `UPDATE_GOLDENS=1`
/// the golden files are rewritten first.
pub fn check_goldens() -> Vec<String> {
    let update = std::env::var("UPDATE_GOLDENS").is_ok_and(|v| v == "1");
    let mut problems = Vec::new();
    for c in CASES {
        let first = run(c.args, c.env);
        let second = run(c.args, c.env);
        let text = transcript(&first);
        if text != transcript(&second) {
            problems.push(format!("{}: output differs between runs", c.name));
        }
        if first.exit != c.exit {
            problems.push(format!(
                "{}: exit {} (expected {}): {}",
                c.name, first.exit, c.exit, first.stderr
            ));
        }
        let path = golden_path(c.name);
        if update {
            std::fs::write(&path, &text).expect("write golden");
        }
        match std::fs::read_to_string(&path) {
            Ok(g) if g == text => {}
            Ok(_) => problems.push(format!("{}: differs from {}", c.name, path.display())),
            Err(_) => problems.push(format!("{}: missing golden {}", c.name, path.display())),
        }
    }
    problems
}
