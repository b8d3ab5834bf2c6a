use std::process::{Command, Output};

fn qsk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qsk"))
        .args(args)
        .current_dir(concat!(env!("CARGO_MANIFEST_DIR"), "/../.."))
        .output()
        .expect("the binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn mul_of_x_and_one_on_a1() {
    let o = qsk(&["mul", "--quiver", "quivers/a1.json", "--comp", "(1,1)", "--f", "x[1,1]", "--g", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "-1");
}

#[test]
fn merge_of_zero_is_zero() {
    let o = qsk(&["merge", "--comp", "(1,1)", "--to", "(2)", "--f", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "0");
}

#[test]
fn split_of_a_symmetric_polynomial_echoes_it() {
    let o = qsk(&["split", "--comp", "(2)", "--to", "(1,1)", "--f", "x[1,1]*x[1,2]"]);
    assert_eq!(stdout(&o).trim(), "(1,1): x[1,1]*x[1,2]");
}

#[test]
fn jordan_classes_for_two_singletons() {
    let o = qsk(&["tables", "--quiver", "quivers/jordan.json", "--comp", "(1,1)"]);
    let out = stdout(&o);
    assert!(out.contains("S_d = x[1,2] - x[1,1]"), "{}", out);
    assert!(out.contains("E_d = x[1,2] - x[1,1]"), "{}", out);
}

#[test]
fn classes_of_a_single_part_are_one() {
    let out = stdout(&qsk(&["tables", "--quiver", "jordan", "--comp", "(3)"]));
    assert!(out.contains("S_d = 1") && out.contains("E_d = 1"), "{}", out);
}

#[test]
fn refinement_table_of_the_a3_orbit_datum() {
    let o = qsk(&[
        "tables",
        "--quiver",
        "quivers/a3.json",
        "--comp",
        "(2i1+3i2+i3, 3i1+i2+2i3)",
        "--to",
        "(3i1+2i3, 2i2+i3, 2i1+2i2)",
        "--word",
        "3,2,4",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("u = [1 4 2 5 3 6] = s_3 s_2 s_4"), "{}", out);
}

#[test]
fn json_mirrors_text() {
    let text = stdout(&qsk(&["tables", "--quiver", "jordan", "--comp", "(1,1)"]));
    let json: serde_json::Value = serde_json::from_str(&stdout(&qsk(&["--json", "tables", "--quiver", "jordan", "--comp", "(1,1)"]))).unwrap();
    for key in ["c", "d", "S_d", "E_d"] {
        let v = json[key].as_str().unwrap();
        assert!(text.contains(&format!("{} = {}", key, v)), "{} missing from {}", key, text);
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "refinement", "--dim", "3", "--seed", "7"];
    assert_eq!(stdout(&qsk(&args)), stdout(&qsk(&args)));
}

#[test]
fn exit_codes() {
    assert_eq!(qsk(&["verify", "cosets", "--dim", "3"]).status.code(), Some(0));
    assert_eq!(qsk(&["verify", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(qsk(&["mul", "--comp", "(1)", "--f", "1", "--g", "1"]).status.code(), Some(2));
    assert_eq!(qsk(&["verify", "refinement", "--quiver", "a1"]).status.code(), Some(2));
    assert_eq!(qsk(&["merge", "--comp", "(2)", "--to", "(1,1)", "--f", "1"]).status.code(), Some(2));
}

#[test]
fn failing_suite_exits_with_one() {
    let o = qsk(&["verify", "theta-suite", "--dim", "1", "--degree", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("result: FAIL"));
}

#[test]
fn errors_are_structured_in_json() {
    let o = qsk(&["--json", "mul", "--comp", "(1,1)", "--f", "x[", "--g", "1"]);
    assert_eq!(o.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["error"]["kind"], "parse");
}

#[test]
fn thread_count_does_not_change_reports() {
    let run = |n: &str| {
        let o = Command::new(env!("CARGO_BIN_EXE_qsk"))
            .args(["verify", "merge-demazure", "--dim", "3", "--degree", "3"])
            .env("QSK_THREADS", n)
            .output()
            .unwrap();
        String::from_utf8(o.stdout).unwrap()
    };
    assert_eq!(run("1"), run("4"));
    let bad = Command::new(env!("CARGO_BIN_EXE_qsk")).args(["verify", "cosets"]).env("QSK_THREADS", "0").output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
