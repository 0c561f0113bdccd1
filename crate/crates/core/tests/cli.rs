use std::io::Write;
use std::process::{Command, Stdio};

fn sidonlab(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_sidonlab"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn exit_codes() {
    assert_eq!(sidonlab(&["construct", "pq", "--n", "6"], "").0, 0);
    let (code, _, err) = sidonlab(&["construct", "pq", "--n", "1"], "");
    assert_eq!(code, 1);
    assert!(err.contains("empty prime interval"));
    assert_eq!(sidonlab(&["sidon-max", "--mode", "sideways"], "").0, 2);
    assert_eq!(sidonlab(&["t-exact", "--construction", "interval", "--n", "30", "--mode", "additive"], "").0, 1);
}

#[test]
fn construct_then_analyse_through_pipe() {
    let (_, set, _) = sidonlab(&["construct", "pq", "--n", "6"], "");
    assert_eq!(set.lines().filter(|l| !l.starts_with('#')).count(), 15);
    let (code, out, _) = sidonlab(&["sidon-max", "--set-file", "-", "--mode", "multiplicative", "--budget", "1e7"], &set);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["optimal"], true);
    let (_, cap, _) = sidonlab(&["capacity", "--set-file", "-"], &set);
    let cap: serde_json::Value = serde_json::from_str(&cap).unwrap();
    assert!(v["size"].as_u64().unwrap() <= cap["capacity"].as_u64().unwrap());
}

#[test]
fn every_subcommand_has_help() {
    for sub in [
        "construct", "energy", "sidon-check", "sidon-max", "sidon-greedy", "sidon-delete", "c4", "capacity",
        "cs-audit", "t-exact", "t-search", "bw-audit", "scaling", "klr", "audit",
    ] {
        let (code, out, _) = sidonlab(&[sub, "--help"], "");
        assert_eq!(code, 0, "{sub}");
        assert!(out.contains("Usage"), "{sub}");
    }
}

#[test]
fn output_file_matches_stdout() {
    let dir = std::env::temp_dir().join(format!("sidonlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("audit.csv");
    let args = ["cs-audit", "--construction", "pq", "--n", "8", "--format", "csv"];
    let (_, direct, _) = sidonlab(&args, "");
    let mut with_file = args.to_vec();
    with_file.extend(["--output", path.to_str().unwrap()]);
    let (code, out, _) = sidonlab(&with_file, "");
    assert_eq!(code, 0);
    assert!(out.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), direct);
    assert!(direct.starts_with("check,lhs,rhs,pass\n"));
    std::fs::remove_dir_all(&dir).unwrap();
}
