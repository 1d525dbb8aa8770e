//! Builds the C example against the generated header and the static library.

use std::path::PathBuf;
use std::process::Command;

fn profile_dir() -> PathBuf {
    // target/<profile>/deps/c_header-<hash>
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(|d| d.parent()).unwrap().to_path_buf()
}

#[test]
fn c_example_compiles_and_runs() {
    if Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping: no C compiler");
        return;
    }
    // Test builds only produce the rlib, so build the static archive here.
    let built = Command::new(env!("CARGO"))
        .args(["build", "--quiet", "-p", "qlga-ffi", "--lib"])
        .status()
        .unwrap();
    assert!(built.success(), "cargo build failed");
    let lib = profile_dir().join("libqlga_ffi.a");
    assert!(lib.exists(), "{} missing", lib.display());
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let bin = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("qlga_evolve_c");
    let status = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-o"])
        .arg(&bin)
        .arg(root.join("examples/c/evolve.c"))
        .arg("-I")
        .arg(root.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm"])
        .status()
        .unwrap();
    assert!(status.success(), "cc failed");

    let out = Command::new(&bin).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();

    let expect = qlga::quantum_mixing_time(
        qlga::LatticeSize::new(17).unwrap(),
        qlga::ScatterAngle(std::f64::consts::FRAC_PI_4),
        qlga::InitialState::Symmetric { x0: 0 },
        0.05,
        10_000,
    )
    .unwrap()
    .t_mix
    .unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "sum=1.000000000000");
    assert_eq!(lines[1], format!("t_mix={expect}"));
    assert!(lines[2].starts_with("error=") && lines[2].contains("null"));
}
