use std::{
    io::Write,
    process::{Command, Output, Stdio},
};

use tempfile::TempDir;

fn mapforge(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_mapforge"))
        .args(args)
        .env_remove("MAPFORGE_SEED")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.unwrap_or("").as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn generated(args: &[&str]) -> String {
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    let o = mapforge(&full, None);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

#[test]
fn info_of_the_cube() {
    let cube = generated(&["cube"]);
    let o = mapforge(&["info", "-"], Some(&cube));
    assert!(o.status.success());
    assert!(stdout(&o).contains("V=8 E=12 F=6 chi=2 surface=o0 T=e,0,12,012"));
}

#[test]
fn json_output() {
    let cube = generated(&["cube"]);
    let o = mapforge(&["--json", "tgroup", "-"], Some(&cube));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["T"], "e,0,12,012");
    assert_eq!(v["order"], 4);
}

#[test]
fn exit_codes() {
    let cube = generated(&["cube"]);
    let o = mapforge(&["color", "--set", "1", "-"], Some(&cube));
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("colorable=false"));
    let o = mapforge(&["color", "--set", "0", "-"], Some(&cube));
    assert_eq!(o.status.code(), Some(0));

    let o = mapforge(&["info", "-"], Some("rank 2\nflags 2\nr0: 1 0\nr1: 1 0\nr2: 0 1\n"));
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 5"));
    let o = mapforge(&["info", "-"], Some("nonsense"));
    assert_eq!(o.status.code(), Some(2));
    let o = mapforge(&["sherk", "-"], Some(&cube));
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn operators_through_files() {
    let dir = TempDir::new().unwrap();
    let tetra = dir.path().join("tetra.flags");
    std::fs::write(&tetra, generated(&["tetrahedron"])).unwrap();
    let tetra = tetra.to_str().unwrap();

    let a = mapforge(&["double", "--set", "02", tetra], None);
    let b = mapforge(&["double", "--set", "1", tetra], None);
    let (pa, pb) = (dir.path().join("a.flags"), dir.path().join("b.flags"));
    std::fs::write(&pa, &a.stdout).unwrap();
    std::fs::write(&pb, &b.stdout).unwrap();
    let o = mapforge(&["iso", pa.to_str().unwrap(), pb.to_str().unwrap()], None);
    assert!(o.status.success());
    assert!(stdout(&o).contains("isomorphic=true"));

    let o = mapforge(&["recognize-double", "--set", "02", pa.to_str().unwrap()], None);
    assert!(o.status.success());
    let base = dir.path().join("base.flags");
    std::fs::write(&base, &o.stdout).unwrap();
    let o = mapforge(&["iso", base.to_str().unwrap(), tetra], None);
    assert!(o.status.success());

    let o = mapforge(&["iso", tetra, pa.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(1));

    let dual = mapforge(&["dual", tetra], None);
    let o = mapforge(&["info", "-"], Some(&stdout(&dual)));
    assert!(stdout(&o).contains("V=4 E=6 F=4"));
}

#[test]
fn surgeries_and_sums() {
    let cube = generated(&["cube"]);
    let o = mapforge(&["subdivide", "--edge", "0", "-"], Some(&cube));
    let info = mapforge(&["info", "-"], Some(&stdout(&o)));
    assert!(stdout(&info).contains("V=9 E=13 F=6"));

    let dir = TempDir::new().unwrap();
    let path = dir.path().join("cube.flags");
    std::fs::write(&path, &cube).unwrap();
    let p = path.to_str().unwrap();
    let o = mapforge(&["sum", p, p, "--flags", "0,0"], None);
    assert!(o.status.success());
    let info = mapforge(&["info", "-"], Some(&stdout(&o)));
    assert!(stdout(&info).contains("F=10 chi=2"));
    let o = mapforge(&["sum", p, p, "--flags", "0"], None);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn build_group() {
    let o = mapforge(&["build-group", "--group", "e,02", "--surface", "n4"], None);
    assert!(o.status.success());
    let info = mapforge(&["info", "-"], Some(&stdout(&o)));
    assert!(stdout(&info).contains("surface=n4 T=e,02"));
    let o = mapforge(&["build-group", "--group", "e,1", "--surface", "n1"], None);
    assert_eq!(o.status.code(), Some(1));
    let o = mapforge(&["build-group", "--group", "e,1,2", "--surface", "n1"], None);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn pso_report() {
    let cube = generated(&["cube"]);
    let o = mapforge(&["pso", "--kind", "vertex", "-"], Some(&cube));
    assert_eq!(stdout(&o).trim(), "vertex=true");
    let o = mapforge(&["pso", "-"], Some(&cube));
    assert!(stdout(&o).contains("face=false"));
}

#[test]
fn quotient_by_a_deck_file() {
    let dir = TempDir::new().unwrap();
    let tetra = generated(&["tetrahedron"]);
    let d = mapforge(&["double", "--set", "2", "-"], Some(&tetra));
    let text = stdout(&d);
    let flags: usize = text
        .lines()
        .find_map(|l| l.strip_prefix("flags "))
        .unwrap()
        .trim()
        .parse()
        .unwrap();
    let deck: Vec<String> = (0..flags).map(|x| (x ^ 1).to_string()).collect();
    let deck_path = dir.path().join("deck.txt");
    std::fs::write(&deck_path, format!("# sheet swap\n{}\n", deck.join(" "))).unwrap();
    let o = mapforge(&["quotient", "--deck", deck_path.to_str().unwrap(), "-"], Some(&text));
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let info = mapforge(&["info", "-"], Some(&stdout(&o)));
    assert!(stdout(&info).contains("V=4 E=6 F=4"));
}

#[test]
fn verify_default_corpus() {
    let o = mapforge(&["verify", "--properties", "closure,dubgp"], None);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("maps=60"));
    assert!(out.contains("property=dubgp passed=60 failed=0"));
}

#[test]
fn verify_reports_corrupted_files() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.flags");
    std::fs::write(&bad, "rank 2\nflags 4\nr0: 1 0 3 2\nr1: 1 0\n").unwrap();
    let dump = dir.path().join("dump");
    let o = mapforge(
        &[
            "verify",
            "--properties",
            "closure",
            "--extra",
            bad.to_str().unwrap(),
            "--dump",
            dump.to_str().unwrap(),
        ],
        None,
    );
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL property=validate"));
}

#[test]
fn verify_seed_override_and_spec() {
    let dir = TempDir::new().unwrap();
    let spec = dir.path().join("spec.json");
    std::fs::write(
        &spec,
        r#"{"seed": 7, "generators": ["cube", "tri-torus:2,3"], "variants": 1, "operations": ["pso"]}"#,
    )
    .unwrap();
    let o = mapforge(&["--json", "verify", "--spec", spec.to_str().unwrap()], None);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["seed"], 7);
    assert_eq!(v["maps"], 4);

    let o = Command::new(env!("CARGO_BIN_EXE_mapforge"))
        .args(["verify", "--spec", spec.to_str().unwrap()])
        .env("MAPFORGE_SEED", "99")
        .output()
        .unwrap();
    assert!(String::from_utf8_lossy(&o.stdout).starts_with("seed=99"));
}
