//! Runs every seed-suite criterion, then drives the `ehrlace` binary through
//! the documented command examples. Prints one PASS/FAIL line per check and
//! exits nonzero if any fails.

use std::process::{Command, ExitCode};
use std::time::Instant;

use ehrlace_cli::suite;
use serde_json::Value;

fn ehrlace(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_ehrlace"))
        .args(args)
        .output()
        .expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned())
}

fn json(args: &[&str]) -> (i32, Value) {
    let (code, out) = ehrlace(args);
    (code, serde_json::from_str(&out).unwrap_or(Value::Null))
}

/// `(name, passed, detail)` for each binary-level check.
fn cli_checks() -> Vec<(&'static str, bool, String)> {
    let mut out = Vec::new();

    let (code, v) = json(&["eval", "k3n:n=3"]);
    let coeffs = v["payload"]["coefficients"].clone();
    let want = serde_json::json!(["1", "113/30", "23/4", "16/3", "9/4", "9/10"]);
    out.push(("eval k3n:n=3", code == 0 && coeffs == want && v["schema"] == "ehrlace/1", coeffs.to_string()));

    let (code, v) = json(&["eval", "cube:d=2"]);
    out.push(("eval cube:d=2", code == 0 && v["payload"]["polynomial"] == "4x^2 + 4x + 1", v["payload"]["polynomial"].to_string()));

    let (code, v) = json(&["certify", "poly:1,43/10,481/60,33/4,37/6,49/20,49/60", "--interlace-with", "poly:1,113/30,23/4,16/3,9/4,9/10"]);
    let line = v["payload"]["line"]["verdict"].clone();
    let il = v["payload"]["interlace"]["verdict"].clone();
    out.push(("certify H_(3,3,1) vs H_(3,3)", code == 1 && line == "AllOnLine" && il == "Fail", format!("{line} / {il}")));

    let (code, v) = json(&["certify", "stasheff:d=12"]);
    out.push(("certify stasheff:d=12", code == 0 && v["payload"]["line"]["verdict"] == "AllOnLine", v["status"].to_string()));

    let (code, v) = json(&["certify", "cycle:8", "--via-oracle"]);
    let left = v["payload"]["off_line"]["beside_minus_one"]["left"].as_u64().unwrap_or(0);
    out.push((
        "certify cycle:8 --via-oracle",
        code == 1 && v["reason"] == "SymmetricButOffLine" && left > 0,
        format!("{} roots left of -1", left),
    ));

    let (code, v) = json(&["certify", "k1n:n=5", "--interlace-with", "k1n:n=6"]);
    out.push(("certify k1n:n=5 --interlace-with k1n:n=6", code == 0 && v["payload"]["interlace"]["verdict"] == "Interlace", v["status"].to_string()));

    let (code, v) = json(&["certify", "rootb:d=6"]);
    out.push(("certify rootb:d=6", code == 1 && v["reason"] == "NotSymmetric", v["reason"].to_string()));

    let start = Instant::now();
    let (code, csv) = ehrlace(&["roots", "rootd:d=6", "--format", "csv"]);
    let rows = csv.lines().count();
    out.push(("roots rootd:d=6", code == 0 && rows == 7 && start.elapsed().as_secs_f64() < 1.0, format!("{} data rows", rows - 1)));

    let (code, csv) = ehrlace(&["roots", "cube:d=4"]);
    let ok = csv.lines().skip(1).filter(|l| l.ends_with("4,-0.500000,0.000000")).count() == 4;
    out.push(("roots cube:d=4", code == 0 && ok, csv.lines().nth(1).unwrap_or("").to_string()));

    let (code, v) = json(&["recurrence", "verify", "crossrec", "--dmax", "50"]);
    out.push(("recurrence verify crossrec --dmax 50", code == 0 && v["payload"]["failed"] == 0, v["payload"]["checked"].to_string()));

    let (code, v) = json(&["recurrence", "verify", "relh2n2", "--nmax", "2"]);
    out.push(("recurrence verify relh2n2 --nmax 2", code == 0, v["status"].to_string()));

    let (code, v) = json(&["recurrence", "discover", "rech3n", "--var", "k"]);
    let values: Vec<String> = v["payload"]["coefficients"]
        .as_array()
        .map(|a| a.iter().map(|c| c["value"].as_str().unwrap_or("").to_string()).collect())
        .unwrap_or_default();
    out.push(("recurrence discover rech3n", code == 0 && values.len() == 4, values.join("; ")));

    let (code, v) = json(&["count", "cycle:8", "--dilate", "1"]);
    out.push(("count cycle:8 --dilate 1", code == 0 && v["payload"]["count"] == 17, v["payload"]["count"].to_string()));

    let (code, v) = json(&["count", "--correct", "2,2,3"]);
    out.push((
        "count --correct 2,2,3",
        code == 0 && v["payload"]["cumulative"] == v["payload"]["ehrhart_value"],
        v["payload"]["cumulative"].to_string(),
    ));

    let (code, v) = json(&["count", "complete:4", "--interpolate"]);
    let (_, roota) = json(&["eval", "roota:d=3"]);
    out.push((
        "count complete:4 --interpolate",
        code == 0 && v["payload"]["coefficients"] == roota["payload"]["coefficients"],
        v["payload"]["polynomial"].to_string(),
    ));

    let (code, v) = json(&["eval", "k3n:n="]);
    out.push(("parse errors exit 2", code == 2 && v["reason"] == "ParseError", v["reason"].to_string()));

    let (code, _) = ehrlace(&["count", "cycle:8", "--dilate", "40"]);
    let (bcode, bv) = {
        let out = Command::new(env!("CARGO_BIN_EXE_ehrlace"))
            .args(["count", "cycle:8", "--dilate", "6"])
            .env("EHRLACE_BUDGET", "100")
            .output()
            .expect("binary runs");
        (out.status.code().unwrap_or(-1), serde_json::from_slice::<Value>(&out.stdout).unwrap_or(Value::Null))
    };
    out.push(("EHRLACE_BUDGET ceiling", code == 2 && bcode == 2 && bv["reason"] == "OverBudget", bv["reason"].to_string()));

    let (a, b) = (ehrlace(&["recurrence", "discover", "rech3n"]).1, ehrlace(&["recurrence", "discover", "rech3n"]).1);
    let strip = |s: &str| {
        let mut v: Value = serde_json::from_str(s).unwrap_or(Value::Null);
        v["timing_ms"] = Value::Null;
        v.to_string()
    };
    out.push(("deterministic payloads", strip(&a) == strip(&b), String::new()));

    out
}

fn main() -> ExitCode {
    let mut all = true;
    for c in suite::criteria() {
        let o = suite::run(c.id).expect("listed criterion");
        println!("{}", o.line());
        all &= o.passed;
    }
    for (name, passed, detail) in cli_checks() {
        println!("{} [cli] {name}: {detail}", if passed { "PASS" } else { "FAIL" });
        all &= passed;
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
