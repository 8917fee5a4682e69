//! The subcommands: eval, certify, roots, recurrence, count.

use std::path::PathBuf;

use ehrlace::certify::{
    certify_interlace, certify_line, count_roots_beside_line, default_center,
    leftmost_real_part, InterlaceCertificate, LineCertificate, LineVerdict,
};
use ehrlace::error::{Error, Result};
use ehrlace::exactcore::{int, numeric_roots, parse_rational, rat, Polynomial, Rational};
use ehrlace::families::{family_series, FamilyId};
use ehrlace::latticecount::{
    count_correct_graphs, count_dilate, ehrhart_interpolate, CorrectGraphQuery, GraphSpec,
};
use ehrlace::recurrence::{
    check_hs3n_series, check_hs3n_series_symbolic, check_rec_h3n, check_rel_h2n1,
    check_rel_h2n2, default_probe_orders, discover_recurrence, favard_window,
    three_term_report, verify_f3nk_recursion, verify_g_lemmas, verify_hdj_recursion,
    verify_relation_bank, check_h_recursion, RelationAnsatz, Report, ThreeTermRule,
};
use ehrlace::series::{polynomial_to_delta, reflexivity_checks, series_coefficient, EhrhartData};
use serde_json::{json, Value};

use crate::subject::{
    graph_subject, parse_graph, parse_subject, read_graph_file, read_polynomial_file, Subject,
};
use crate::{budget, interval_json, poly_json, rational_json, timed, CommandResult};

fn delta_json(e: &EhrhartData) -> Value {
    json!({
        "delta": e.padded().iter().map(rational_json).collect::<Vec<_>>(),
        "dim": e.dim,
    })
}

/// Exact polynomial, δ-vector and reflexivity summary of a subject.
pub fn cmd_eval(spec: &str) -> CommandResult {
    timed("eval", || {
        let s = parse_subject(spec)?;
        let series = match &s.family {
            Some(id) => family_series(id).ok(),
            None => polynomial_to_delta(&s.poly).ok(),
        };
        let refl = reflexivity_checks(&s.poly).ok().map(|r| {
            json!({
                "palindromic": r.palindromic,
                "functional_equation": r.functional_eq,
                "coefficient_relation": r.coeff_relation,
                "reflexive": r.all(),
            })
        });
        Ok(CommandResult::ok(
            "eval",
            json!({
                "subject": s.label,
                "degree": s.poly.degree(),
                "coefficients": poly_json(&s.poly),
                "polynomial": s.poly.to_string_var("x"),
                "series": series.as_ref().map(delta_json),
                "reflexivity": refl,
            }),
        ))
    })
}

pub fn line_json(c: &LineCertificate) -> Value {
    json!({
        "subject": poly_json(&c.subject),
        "line_center": rational_json(&c.line_center),
        "verdict": c.verdict.as_str(),
        "transformed": poly_json(&c.transformed),
        "isolating": c.isolating.iter().map(interval_json).collect::<Vec<_>>(),
    })
}

pub fn interlace_json(c: &InterlaceCertificate) -> Value {
    json!({
        "f": poly_json(&c.f),
        "g": poly_json(&c.g),
        "verdict": c.verdict.as_str(),
        "slots": c.slots.iter().map(interval_json).collect::<Vec<_>>(),
        "merged_ordering": c.merged_ordering.iter().map(|e| json!({
            "root": e.label(),
            "slot": e.slot,
        })).collect::<Vec<_>>(),
    })
}

/// Exact data locating the roots off the line: the leftmost real part to
/// within 1/1024, and root counts beside `Re z = -1`.
pub fn off_line_json(p: &Polynomial) -> Value {
    let leftmost = leftmost_real_part(p, &rat(1, 1024)).ok();
    let beside = count_roots_beside_line(p, &int(-1)).ok();
    json!({
        "leftmost_real_part": leftmost.as_ref().map(interval_json),
        "beside_minus_one": beside.map(|c| json!({ "left": c.left, "right": c.right })),
    })
}

#[derive(Clone, Debug, Default)]
pub struct CertifyArgs {
    pub subject: Option<String>,
    pub file: Option<PathBuf>,
    pub interlace_with: Option<String>,
    pub via_oracle: bool,
    pub center: Option<String>,
}

fn resolve(spec: Option<&str>, file: Option<&PathBuf>, via_oracle: bool) -> Result<Subject> {
    match (spec, file, via_oracle) {
        (Some(s), None, false) => parse_subject(s),
        (Some(s), None, true) => graph_subject(s, &parse_graph(s)?, budget()),
        (None, Some(path), false) => Ok(Subject {
            label: path.display().to_string(),
            family: None,
            poly: read_polynomial_file(path)?,
        }),
        (None, Some(path), true) => {
            graph_subject(&path.display().to_string(), &read_graph_file(path)?, budget())
        }
        (Some(_), Some(_), _) => Err(Error::Param("give a subject or --file, not both".into())),
        (None, None, _) => Err(Error::Param("missing subject".into())),
    }
}

/// Line certificate, plus an interlacing certificate with `--interlace-with`.
pub fn cmd_certify(args: &CertifyArgs) -> CommandResult {
    timed("certify", || {
        let center = match &args.center {
            Some(c) => parse_rational(c)?,
            None => default_center(),
        };
        let s = resolve(args.subject.as_deref(), args.file.as_ref(), args.via_oracle)?;
        let line = certify_line(&s.poly, &center);
        let mut payload = json!({
            "subject": s.label,
            "polynomial": s.poly.to_string_var("x"),
            "line": line_json(&line),
        });
        if line.verdict == LineVerdict::SymmetricButOffLine && s.poly.deg() > 0 {
            payload["off_line"] = off_line_json(&s.poly);
        }
        if line.verdict != LineVerdict::AllOnLine {
            return Ok(CommandResult::fail("certify", line.verdict.as_str(), payload));
        }
        let Some(other) = &args.interlace_with else {
            return Ok(CommandResult::ok("certify", payload));
        };
        let o = resolve(Some(other), None, args.via_oracle)?;
        let (f, g) = match (s.poly.deg(), o.poly.deg()) {
            (a, b) if a == b + 1 => (&s, &o),
            (a, b) if b == a + 1 => (&o, &s),
            (a, b) => return Err(Error::Degree { f: a.max(b), g: a.min(b) }),
        };
        let cert = certify_interlace(&f.poly, &g.poly, &center)?;
        payload["interlace"] = interlace_json(&cert);
        payload["interlace"]["f_subject"] = json!(f.label);
        payload["interlace"]["g_subject"] = json!(g.label);
        Ok(CommandResult::check(
            "certify",
            cert.verdict == ehrlace::certify::InterlaceVerdict::Interlace,
            "InterlaceFail",
            payload,
        ))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum RootFormat {
    Csv,
    Json,
}

/// Rounded to 6 decimals, without negative zero.
fn round6(x: f64) -> f64 {
    let r = (x * 1e6).round() / 1e6;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Numeric roots sorted by real then imaginary part.
pub fn sorted_roots(p: &Polynomial) -> Result<Vec<(f64, f64)>> {
    let mut roots: Vec<(f64, f64)> = numeric_roots(p, 1e-12)?
        .into_iter()
        .map(|z| (round6(z.re), round6(z.im)))
        .collect();
    roots.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
    Ok(roots)
}

pub fn cmd_roots(spec: &str, format: RootFormat, via_oracle: bool) -> CommandResult {
    timed("roots", || {
        let s = resolve(Some(spec), None, via_oracle)?;
        let roots = sorted_roots(&s.poly)?;
        let degree = s.poly.deg();
        let mut res = CommandResult::ok(
            "roots",
            json!({
                "subject": s.label,
                "degree": degree,
                "roots": roots.iter().map(|(re, im)| json!({ "re": re, "im": im })).collect::<Vec<_>>(),
            }),
        );
        if format == RootFormat::Csv {
            let mut out = String::from("family,degree,re,im\n");
            for (re, im) in &roots {
                out.push_str(&format!("{},{degree},{re:.6},{im:.6}\n", csv_field(&s.label)));
            }
            res.text = Some(out.trim_end().to_string());
        }
        Ok(res)
    })
}

fn report_json(id: &str, rep: &Report) -> Value {
    let failed = rep.failures().count();
    json!({
        "relation": id,
        "checked": rep.rows.len(),
        "failed": failed,
        "rows": rep.rows.iter().map(|r| json!({
            "relation": r.relation,
            "params": r.params,
            "holds": r.holds,
        })).collect::<Vec<_>>(),
    })
}

#[derive(Clone, Debug)]
pub struct VerifyArgs {
    pub id: String,
    pub dmax: Option<usize>,
    pub nmax: Option<usize>,
    pub kmax: Option<usize>,
}

fn single_relation(name: &str, n_min: usize, n_max: usize, check: fn(usize) -> Result<bool>) -> Result<Report> {
    let mut rep = Report::default();
    for n in n_min..=n_max {
        rep.rows.push(ehrlace::recurrence::CheckRow {
            relation: name.to_string(),
            params: format!("n={n}"),
            holds: check(n)?,
        });
    }
    Ok(rep)
}

/// Names accepted by `recurrence verify`.
pub const VERIFY_IDS: &[&str] = &[
    "crossrec", "stasheff", "roota", "rootc", "relh2n1", "relh2n2", "rech3n", "bank", "hdj",
    "hdj-printed", "glemmas", "f3nk", "hs3n",
];

pub fn verify_report(args: &VerifyArgs) -> Result<Report> {
    let row = |relation: &str, params: String, holds: bool| ehrlace::recurrence::CheckRow {
        relation: relation.to_string(),
        params,
        holds,
    };
    let nmax = args.nmax.unwrap_or(40);
    match args.id.as_str() {
        id @ ("crossrec" | "stasheff" | "roota" | "rootc") => {
            three_term_report(&ThreeTermRule::by_name(id)?, args.dmax.unwrap_or(50))
        }
        "relh2n1" => single_relation("relh2n1", 2, nmax, check_rel_h2n1),
        "relh2n2" => single_relation("relh2n2", 2, nmax, check_rel_h2n2),
        "rech3n" => single_relation("rech3n", 2, nmax, check_rec_h3n),
        "bank" => verify_relation_bank(nmax),
        "hdj" => verify_hdj_recursion(args.dmax.unwrap_or(20)),
        "hdj-printed" => {
            // the H-form exactly as printed, without the j(j-1) factor
            let mut rep = Report::default();
            for d in 2..=args.dmax.unwrap_or(12) {
                for j in 2..d.saturating_sub(2) {
                    rep.rows.push(row("h-printed", format!("d={d},j={j}"), check_h_recursion(d, j, false)));
                }
            }
            Ok(rep)
        }
        "glemmas" => verify_g_lemmas(args.dmax.unwrap_or(21)),
        "f3nk" => verify_f3nk_recursion(args.nmax.unwrap_or(3), args.kmax.unwrap_or(6)),
        "hs3n" => {
            let mut rep = single_relation("hs3n", 2, nmax, check_hs3n_series)?;
            rep.rows.push(row("hs3n-symbolic", "n".into(), check_hs3n_series_symbolic()));
            Ok(rep)
        }
        other => Err(Error::Parse(format!(
            "unknown relation {other:?}; expected one of {}",
            VERIFY_IDS.join(", ")
        ))),
    }
}

pub fn cmd_recurrence_verify(args: &VerifyArgs) -> CommandResult {
    timed("recurrence verify", || {
        let rep = verify_report(args)?;
        Ok(CommandResult::check(
            "recurrence verify",
            rep.all_hold(),
            "RelationFailed",
            report_json(&args.id, &rep),
        ))
    })
}

pub fn cmd_recurrence_discover(ansatz: &str, probe: Option<usize>, var: &str) -> CommandResult {
    timed("recurrence discover", || {
        let a = RelationAnsatz::by_name(ansatz)?;
        let found = discover_recurrence(&a, probe.unwrap_or_else(|| default_probe_orders(&a)))?;
        let basis: Vec<Value> = a
            .basis
            .iter()
            .map(|b| json!({
                "unknown": b.unknown,
                "series": b.series.to_string(),
                "times_k": b.times_k,
            }))
            .collect();
        let coefficients: Vec<Value> = found
            .coefficients
            .iter()
            .map(|(name, f)| json!({
                "unknown": name,
                "value": f.to_factored_string(var),
                "numerator": poly_json(f.num()),
                "denominator": poly_json(f.den()),
            }))
            .collect();
        Ok(CommandResult::ok(
            "recurrence discover",
            json!({
                "ansatz": found.ansatz,
                "target": a.target.to_string(),
                "basis": basis,
                "coefficients": coefficients,
                "variable": var,
                "probe_orders": found.probe_orders,
                "verified_orders": found.verified_orders,
            }),
        ))
    })
}

pub fn cmd_recurrence_favard(rule: &str, jmax: usize) -> CommandResult {
    timed("recurrence favard", || {
        let r = ThreeTermRule::by_name(rule)?;
        let rep = favard_window(&r, jmax)?;
        let pairs = |v: &[(usize, Rational)]| -> Vec<Value> {
            v.iter().map(|(j, x)| json!({ "j": j, "value": rational_json(x) })).collect()
        };
        Ok(CommandResult::check(
            "recurrence favard",
            rep.all_in_unit_interval && rep.favard_positive,
            "OutsideWindow",
            json!({
                "rule": r.name,
                "m2_eighths": rational_json(&rep.m2_eighths),
                "m2_admissible": rep.m2_admissible,
                "all_in_unit_interval": rep.all_in_unit_interval,
                "favard_positive": rep.favard_positive,
                "m_values": pairs(&rep.m_values),
                "lambdas": pairs(&rep.lambdas),
            }),
        ))
    })
}

#[derive(Clone, Debug, Default)]
pub struct CountArgs {
    pub graph: Option<String>,
    pub file: Option<PathBuf>,
    pub dilate: Option<i64>,
    pub correct: Option<String>,
    pub interpolate: bool,
}

fn parse_triple(s: &str) -> Result<(usize, usize, usize)> {
    let parts: Vec<usize> = s
        .split(',')
        .map(|t| t.trim().parse().map_err(|_| Error::Parse(format!("bad count {t:?} in {s:?}"))))
        .collect::<Result<_>>()?;
    match parts[..] {
        [a, b, k] => Ok((a, b, k)),
        _ => Err(Error::Parse(format!("expected a,b,k, got {s:?}"))),
    }
}

/// Ehrhart series of the complete bipartite graph `K_{a,b}` when a closed
/// form is known.
fn complete_bipartite_series(a: usize, b: usize) -> Option<EhrhartData> {
    let (a, b) = (a.min(b), a.max(b));
    let id = match a {
        1 => FamilyId::K1n { n: b },
        2 => FamilyId::K2n { n: b },
        3 => FamilyId::K3n { n: b },
        _ => return None,
    };
    family_series(&id).ok()
}

pub fn cmd_count(args: &CountArgs) -> CommandResult {
    timed("count", || {
        if let Some(triple) = &args.correct {
            let (a, b, k) = parse_triple(triple)?;
            let q = |k| CorrectGraphQuery { a, b, k, typed: Vec::new() };
            let exact = count_correct_graphs(&q(k))?;
            let mut cumulative = exact.clone();
            for j in 0..k {
                cumulative += count_correct_graphs(&q(j))?;
            }
            let closed = complete_bipartite_series(a, b).map(|e| series_coefficient(&e, k));
            let mut payload = json!({
                "a": a,
                "b": b,
                "k": k,
                "count": exact.to_string(),
                "cumulative": cumulative.to_string(),
            });
            let agrees = match &closed {
                Some(v) => {
                    payload["ehrhart_value"] = rational_json(v);
                    *v == Rational::from_integer(cumulative)
                }
                None => true,
            };
            return Ok(CommandResult::check("count", agrees, "ClosedFormMismatch", payload));
        }
        let g: GraphSpec = match (&args.graph, &args.file) {
            (Some(s), None) => parse_graph(s)?,
            (None, Some(p)) => read_graph_file(p)?,
            _ => return Err(Error::Param("give exactly one of a graph spec or --file".into())),
        };
        let label = args
            .graph
            .clone()
            .or_else(|| args.file.as_ref().map(|p| p.display().to_string()))
            .unwrap_or_default();
        let budget = budget();
        if let Some(s) = args.dilate {
            let n = count_dilate(&g, s, budget)?;
            return Ok(CommandResult::ok(
                "count",
                json!({ "graph": label, "dilation": s, "count": n }),
            ));
        }
        if args.interpolate {
            let p = ehrhart_interpolate(&g, budget)?;
            return Ok(CommandResult::ok(
                "count",
                json!({
                    "graph": label,
                    "degree": p.degree(),
                    "coefficients": poly_json(&p),
                    "polynomial": p.to_string_var("x"),
                }),
            ));
        }
        Err(Error::Param("count needs --dilate, --correct or --interpolate".into()))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Status;

    #[test]
    fn eval_k33() {
        let r = cmd_eval("k3n:n=3");
        assert_eq!(r.status, Status::Ok);
        assert_eq!(
            r.payload["coefficients"],
            json!(["1", "113/30", "23/4", "16/3", "9/4", "9/10"])
        );
        let r = cmd_eval("duala:d=3");
        assert_eq!(r.payload["coefficients"], json!(["1", "4", "6", "4"]));
        let r = cmd_eval("k3n:n=");
        assert_eq!((r.status, r.reason.as_deref()), (Status::Error, Some("ParseError")));
    }

    #[test]
    fn certify_examples() {
        let args = |s: &str, w: Option<&str>| CertifyArgs {
            subject: Some(s.into()),
            interlace_with: w.map(Into::into),
            ..Default::default()
        };
        assert_eq!(cmd_certify(&args("stasheff:d=12", None)).status, Status::Ok);
        let r = cmd_certify(&args("k1n:n=5", Some("k1n:n=6")));
        assert_eq!(r.status, Status::Ok);
        assert_eq!(r.payload["interlace"]["verdict"], "Interlace");
        let r = cmd_certify(&args("rootb:d=6", None));
        assert_eq!(r.reason.as_deref(), Some("NotSymmetric"));
        let r = cmd_certify(&args("cross:d=3", Some("cross:d=5")));
        assert_eq!(r.reason.as_deref(), Some("DegreeError"));
    }

    #[test]
    fn roots_csv() {
        let r = cmd_roots("cube:d=4", RootFormat::Csv, false);
        let text = r.text.unwrap();
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines[0], "family,degree,re,im");
        assert_eq!(lines.len(), 5);
        assert!(lines[1..].iter().all(|l| l.ends_with(",4,-0.500000,0.000000")));
        let r = cmd_roots("g:d=5,c=4", RootFormat::Csv, false);
        assert!(r.text.unwrap().lines().nth(1).unwrap().starts_with("\"g:d=5,c=4\","));
    }

    #[test]
    fn count_examples() {
        let r = cmd_count(&CountArgs { graph: Some("cycle:8".into()), dilate: Some(1), ..Default::default() });
        assert_eq!(r.payload["count"], 17);
        let r = cmd_count(&CountArgs { correct: Some("2,2,3".into()), ..Default::default() });
        assert_eq!(r.status, Status::Ok);
        assert_eq!(r.payload["cumulative"], r.payload["ehrhart_value"]);
        let r = cmd_count(&CountArgs { graph: Some("cycle:8".into()), ..Default::default() });
        assert_eq!(r.status, Status::Error);
    }

    #[test]
    fn verify_boundary_and_unknown() {
        let args = |id: &str, nmax| VerifyArgs { id: id.into(), dmax: None, nmax, kmax: None };
        assert_eq!(cmd_recurrence_verify(&args("relh2n2", Some(2))).status, Status::Ok);
        assert_eq!(cmd_recurrence_verify(&args("nope", None)).status, Status::Error);
        let printed = VerifyArgs { id: "hdj-printed".into(), dmax: Some(9), nmax: None, kmax: None };
        assert_eq!(cmd_recurrence_verify(&printed).status, Status::Fail);
    }
}
