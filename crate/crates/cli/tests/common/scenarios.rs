//! Scripted command-line scenarios with expected exit codes. The expected
//! output of each lives in `tests/golden/<name>.txt`.

use std::path::PathBuf;
use std::process::Command;

pub struct Scenario {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub exit: i32,
}

const fn s(name: &'static str, args: &'static [&'static str], exit: i32) -> Scenario {
    Scenario { name, args, exit }
}

pub const SCENARIOS: &[Scenario] = &[
    s("star_delta_theta", &["star", "delta(x)", "theta(x)"], 0),
    s("star_theta_delta", &["star", "theta(x)", "delta(x)"], 0),
    s("star_delta_delta", &["star", "delta(x)", "delta(x)"], 0),
    s("star_json", &["--json", "star", "delta(x)", "theta(x)"], 0),
    s("star_confined_sine", &["star", "delta'(x)", "theta(x)*sin(3*x)"], 0),
    s("product_disjoint", &["product", "theta(x)", "delta(x-1)"], 0),
    s("product_overlap", &["product", "theta(x)", "delta(x)"], 1),
    s("product_overlap_inline", &["normalize", "theta(x) * delta(x)"], 1),
    s("derive_jump_free", &["derive", "theta(x)*sin(2*x)"], 0),
    s("derive_twice", &["derive", "--order", "2", "theta(x)"], 0),
    s("derive_json", &["derive", "theta(x-0.5)*exp(-x)", "--json"], 0),
    s("pair_delta_prime", &["pair", "delta'(x)", "--test", "bump(0.5,1)"], 0),
    s("pair_bad_test", &["pair", "delta(x)", "--test", "bump(0,-1)"], 1),
    s("eigen_hc_pass", &["check-eigen", "--op", "HC", "--psi", "theta(x)*sin(2*x)", "--energy", "4"], 0),
    s("eigen_hc_wrong_energy", &["check-eigen", "--op", "HC", "--psi", "theta(x)*sin(2*x)", "--energy", "5"], 1),
    s("eigen_hd_left", &["check-eigen", "--op", "HD", "--psi", "theta(-x)*sin(3*x)", "--energy", "9"], 0),
    s("eigen_hs_domain", &["check-eigen", "--op", "HS", "--psi", "theta(x)*sin(x)", "--energy", "1"], 1),
    s("eigen_negative_energy", &["check-eigen", "--op", "HC", "--psi", "theta(x)*sin(x)", "--energy", "-1"], 1),
    s("eigen_unknown_operator", &["check-eigen", "--op", "HX", "--psi", "theta(x)", "--energy", "1"], 2),
    s("commutator_plus", &["commutator", "--sign", "plus", "--psi", "theta(-x)*sin(x) + theta(x)*sin(3*x)"], 0),
    s("commutator_minus", &["commutator", "--sign", "minus", "--psi", "theta(-x)*sin(x) + theta(x)*sin(3*x)"], 0),
    s("commutator_domain", &["commutator", "--sign", "plus", "--psi", "theta(x)*cos(x)"], 1),
    s("defect_witness", &["symmetry-defect", "--op", "HC", "--phi", "theta(x)*x*exp(-x)", "--psi", "theta(x)*exp(-x)"], 0),
    s("defect_not_l2", &["symmetry-defect", "--op", "HC", "--phi", "theta(-x)*exp(x)", "--psi", "theta(x)*exp(-x)"], 1),
    s("defect_no_decay", &["symmetry-defect", "--op", "HD", "--phi", "theta(x)*sin(x)", "--psi", "theta(x)*sin(2*x)"], 1),
    s("normalize_pruned", &["normalize", "theta(x)*sin(x) + theta(-x)*sin(x)"], 0),
    s("normalize_combs_sorted", &["normalize", "delta''(x) + 2*delta(x-1) - delta(x)"], 0),
    s("syntax_error", &["normalize", "theta(x) + (sin(x)"], 2),
    s("non_smooth", &["normalize", "1/x"], 2),
    s("unknown_identifier", &["normalize", "foo(x)"], 2),
    s("usage_unknown_command", &["frobnicate"], 2),
    s("usage_missing_argument", &["star", "delta(x)"], 2),
];

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{name}.txt"))
}

/// Runs the binary and renders exit code, stdout and stderr in the golden
/// file layout.
pub fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_distalg"))
        .args(args)
        .output()
        .expect("binary runs");
    let code = out.status.code().unwrap_or(-1);
    let text = format!(
        "exit: {code}\n--- stdout\n{}--- stderr\n{}",
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    );
    (code, text)
}

/// Checks one scenario against its golden file; with `UPDATE_GOLDEN` set
/// the file is rewritten instead.
pub fn check(sc: &Scenario) -> Result<(), String> {
    let (code, text) = run(sc.args);
    let path = golden_path(sc.name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &text).map_err(|e| e.to_string())?;
    }
    if code != sc.exit {
        return Err(format!("{}: exit {code}, expected {}\n{text}", sc.name, sc.exit));
    }
    let golden = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if golden != text {
        return Err(format!("{}: output differs from golden\n--- got\n{text}--- want\n{golden}", sc.name));
    }
    Ok(())
}
