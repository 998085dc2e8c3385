use assert_cmd::Command;

fn cli() -> Command {
    Command::cargo_bin("mirrorcert").unwrap()
}

#[test]
fn list_names_every_command() {
    let out = cli().arg("--list").assert().success().get_output().stdout.clone();
    let s = String::from_utf8(out).unwrap();
    for name in ["lattice", "relations", "deflate", "table1", "table2", "certify", "modular", "autoform", "plane"] {
        assert!(s.lines().any(|l| l.starts_with(name)), "{name}");
    }
}

#[test]
fn exit_codes() {
    cli().arg("relations").assert().code(0);
    // the literal Re(ξc) ≥ 0 observation fails, so table2 is a certificate failure
    cli().arg("table2").assert().code(1);
    cli().args(["certify", "--pair", "bogus"]).assert().code(2);
    cli().args(["autoform", "--tau", "1-2i"]).assert().code(2);
    cli().args(["lattice", "--bogus-flag"]).assert().code(2);
    cli().assert().code(2);
    cli().arg("relations").env("MIRRORCERT_THREADS", "zero").assert().code(2);
}

#[test]
fn json_is_deterministic_across_thread_counts() {
    let run = |threads: &str| {
        cli()
            .args(["modular", "--check-membership", "40", "--check-extension", "8", "--seed", "5", "--json"])
            .env("MIRRORCERT_THREADS", threads)
            .assert()
            .success()
            .get_output()
            .stdout
            .clone()
    };
    let a = run("1");
    assert_eq!(a, run("4"));
    let v: serde_json::Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(v["config"]["seed"], 5);
    assert_eq!(v["result"]["membership"]["samples"], 40);
}

#[test]
fn formats_and_output_file() {
    let dir = std::env::temp_dir().join(format!("mirrorcert-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("deflate.json");
    cli().args(["deflate", "--format", "json", "--output"]).arg(&path).assert().success().stdout("");
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["result"]["unit_is_omega_squared"], true);

    let csv = cli().args(["lattice", "--format", "csv"]).assert().success().get_output().stdout.clone();
    let csv = String::from_utf8(csv).unwrap();
    assert!(csv.starts_with("path,value\n"));
    assert!(csv.lines().any(|l| l == "result.sigma_exists,true"));

    let text = cli().args(["plane", "--q", "4"]).assert().success().get_output().stdout.clone();
    assert!(String::from_utf8(text).unwrap().starts_with("plane: PASS"));
    std::fs::remove_dir_all(&dir).ok();
}
