use std::process::{Command, Output};

fn starconfig(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_starconfig")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const EX: [&str; 6] = ["--s", "4", "--b", "2", "--a", "6"];

fn with_example(cmd: &str, rest: &[&str]) -> Output {
    let mut args = vec![cmd];
    args.extend(EX);
    args.extend(rest);
    starconfig(&args)
}

#[test]
fn betti_methods_agree_on_the_example() {
    let o = with_example("betti", &["--method", "formula,cone,homology"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("total: 22 75 115 94 40 7"), "{text}");
    assert!(text.contains("methods agree"));
}

#[test]
fn betti_json_layout() {
    let o = with_example("betti", &["--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["table"]["total"], serde_json::json!([22, 75, 115, 94, 40, 7]));
    assert_eq!(v["table"]["rows"]["3"], serde_json::json!([4, 19, 36, 34, 16, 3]));
}

#[test]
fn containment_reports_holds() {
    let o = with_example("containment", &["--k", "3", "--l", "2", "--m", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("HOLDS\n"));
}

#[test]
fn bad_parameters_exit_with_two() {
    let o = starconfig(&["gens", "--s", "4", "--b", "2", "--a", "5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("error:"));
    let o = with_example("dual", &["--format", "csv"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn sweep_csv_leaves_runtime_blank() {
    let o = starconfig(&["sweep", "--s", "4", "--b", "2", "--l", "1", "--m", "1"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("s,b,a,h,c0,k,l,m,lhs_order,mm_power,holds,alpha_lhs,runtime_ms")
    );
    assert_eq!(lines.next(), Some("4,2,6,3,2,1,1,1,1,0,true,6,"));
}

#[test]
fn linquot_prints_the_quotient_table() {
    let o = with_example("linquot", &[]);
    let text = stdout(&o);
    assert!(text.contains("<z_{3,2},z_{2,2},z_{4,1},z_{3,1},z_{2,1}>"));
    assert!(text.contains("linear quotients verified for 22 generators"));
}

#[test]
fn export_cas_writes_macaulay2() {
    let dir = std::env::temp_dir().join(format!("starconfig-cas-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("dual.m2");
    let o = with_example("export-cas", &["--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("R = QQ[z_(1,1)..z_(4,4)];"));
    std::fs::remove_dir_all(&dir).unwrap();
}
