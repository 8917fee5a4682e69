//! The seed suite: twelve end-to-end checks over the whole toolkit, each
//! reported as one PASS/FAIL line.

use std::time::{Duration, Instant};

use ehrlace::certify::{
    certify_interlace, certify_line, count_roots_beside_line, default_center, leftmost_real_part,
    InterlaceVerdict, LineVerdict,
};
use ehrlace::error::Result;
use ehrlace::exactcore::{int, rat, Polynomial, RationalFunction};
use ehrlace::families::{build_g, family_polynomial, FamilyId};
use ehrlace::latticecount::{all_labeled_trees, ehrhart_interpolate, verify_corollary_counts, GraphSpec};
use ehrlace::recurrence::{
    discover_recurrence, favard_window, three_term_report, verify_g_lemmas, verify_hdj_recursion,
    verify_relation_bank, RelationAnsatz, ThreeTermRule,
};
use serde_json::{json, Value};

use crate::commands::{cmd_eval, cmd_roots, RootFormat};
use crate::subject::parse_literal;
use crate::{budget, Status};

pub const H33: &str = "1,113/30,23/4,16/3,9/4,9/10";
pub const H331: &str = "1,43/10,481/60,33/4,37/6,49/20,49/60";

/// The eight-cycle Ehrhart polynomial as printed, constant term first.
pub const EIGHT_CYCLE: &str = "1,7/2,175/36,161/36,35/18,35/36,7/36,1/18";

#[derive(Clone, Debug)]
pub struct Criterion {
    pub id: usize,
    pub title: &'static str,
    pub limit: Option<Duration>,
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub id: usize,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub limit: Option<Duration>,
}

impl Outcome {
    pub fn line(&self) -> String {
        format!(
            "{} [{:>2}] {}: {} ({:.2}s)",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.detail,
            self.elapsed.as_secs_f64()
        )
    }

    pub fn to_json(&self) -> Value {
        json!({
            "id": self.id,
            "title": self.title,
            "passed": self.passed,
            "detail": self.detail,
            "elapsed_ms": self.elapsed.as_secs_f64() * 1e3,
            "limit_ms": self.limit.map(|l| l.as_secs_f64() * 1e3),
        })
    }
}

const fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

pub fn criteria() -> Vec<Criterion> {
    let c = |id, title, limit| Criterion { id, title, limit };
    vec![
        c(1, "closed-form fidelity", secs(1)),
        c(2, "line certification suite", secs(300)),
        c(3, "counterexamples", None),
        c(4, "recurrence bank", secs(120)),
        c(5, "relation discovery", None),
        c(6, "favard window", None),
        c(7, "oracle equivalence", secs(600)),
        c(8, "correct-graph counts", None),
        c(9, "(2,n) coverage", secs(600)),
        c(10, "H/F/A/B/G lemma bank", None),
        c(11, "duals", None),
        c(12, "numeric reproduction", None),
    ]
}

/// `Ok(detail)` on success, `Err(detail)` on a failed check.
type Check = std::result::Result<String, String>;

fn lib<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| format!("{}: {e}", e.code()))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn run(id: usize) -> Option<Outcome> {
    let crit = criteria().into_iter().find(|c| c.id == id)?;
    let start = Instant::now();
    let result = match id {
        1 => closed_form(),
        2 => line_suite(),
        3 => counterexamples(),
        4 => recurrence_bank(),
        5 => discovery(),
        6 => favard(),
        7 => oracles(),
        8 => correct_graphs(),
        9 => two_n_coverage(),
        10 => lemma_bank(),
        11 => duals(),
        12 => numeric(),
        _ => unreachable!("criteria() lists ids 1..=12"),
    };
    let elapsed = start.elapsed();
    let (mut passed, mut detail) = match result {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    if let Some(limit) = crit.limit {
        if elapsed > limit {
            passed = false;
            detail = format!("{detail}; over the {:.0}s limit", limit.as_secs_f64());
        }
    }
    Some(Outcome { id, title: crit.title, passed, detail, elapsed, limit: crit.limit })
}

pub fn run_all() -> Vec<Outcome> {
    criteria().iter().filter_map(|c| run(c.id)).collect()
}

fn closed_form() -> Check {
    let r = cmd_eval("k3n:n=3");
    let want = json!(["1", "113/30", "23/4", "16/3", "9/4", "9/10"]);
    ensure(r.payload["coefficients"] == want, || {
        format!("eval k3n:n=3 gave {}", r.payload["coefficients"])
    })?;
    let h33 = lib(parse_literal(H33))?;
    let h331 = lib(parse_literal(H331))?;
    let c = default_center();
    let v = certify_line(&h331, &c).verdict;
    ensure(v == LineVerdict::AllOnLine, || format!("H_(3,3,1) verdict {}", v.as_str()))?;
    let il = lib(certify_interlace(&h331, &h33, &c))?;
    ensure(il.verdict == InterlaceVerdict::Fail, || "H_(3,3,1), H_(3,3) interlace".into())?;
    let order: Vec<String> = il.merged_ordering.iter().map(|e| e.label()).collect();
    Ok(format!("k3n:n=3 exact; H_(3,3,1) AllOnLine; interlace Fail ({})", order.join(" ")))
}

/// Every member `1..=d_max` on the line and consecutive members interlaced.
fn family_chain(name: &str, d_max: usize) -> std::result::Result<(), String> {
    let c = default_center();
    let mut prev: Option<Polynomial> = None;
    for d in 1..=d_max {
        let id: FamilyId = lib(format!("{name}:d={d}").parse())?;
        let p = lib(family_polynomial(&id))?;
        let v = certify_line(&p, &c).verdict;
        ensure(v == LineVerdict::AllOnLine, || format!("{id}: {}", v.as_str()))?;
        if let Some(q) = &prev {
            let cert = lib(certify_interlace(&p, q, &c))?;
            ensure(cert.verdict == InterlaceVerdict::Interlace, || {
                format!("{name} d={} and d={d} do not interlace", d - 1)
            })?;
        }
        prev = Some(p);
    }
    Ok(())
}

fn line_suite() -> Check {
    for name in ["cross", "stasheff", "roota", "rootc"] {
        family_chain(name, 30)?;
    }
    Ok("cross, stasheff, roota, rootc: AllOnLine and consecutive Interlace for d <= 30".into())
}

fn counterexamples() -> Check {
    let c = default_center();
    let b6 = lib(family_polynomial(&FamilyId::RootB { d: 6 }))?;
    let d6 = lib(family_polynomial(&FamilyId::RootD { d: 6 }))?;
    let vb = certify_line(&b6, &c).verdict;
    let vd = certify_line(&d6, &c).verdict;
    ensure(vb == LineVerdict::NotSymmetric, || format!("B6 verdict {}", vb.as_str()))?;
    ensure(vd == LineVerdict::SymmetricButOffLine, || format!("D6 verdict {}", vd.as_str()))?;
    let cycle = lib(GraphSpec::cycle(8))?;
    let h = lib(ehrhart_interpolate(&cycle, budget()))?;
    ensure(h == lib(parse_literal(EIGHT_CYCLE))?, || "eight-cycle polynomial differs".into())?;
    let v8 = certify_line(&h, &c).verdict;
    ensure(v8 == LineVerdict::SymmetricButOffLine, || format!("C8 verdict {}", v8.as_str()))?;
    let left = lib(count_roots_beside_line(&h, &int(-1)))?;
    ensure(left.left > 0, || "no root left of Re z = -1".into())?;
    let iv = lib(leftmost_real_part(&h, &rat(1, 1024)))?;
    ensure(iv.hi < int(-1), || format!("leftmost real part bracket ends at {}", iv.hi))?;
    Ok(format!(
        "B6 NotSymmetric; D6 SymmetricButOffLine; C8 SymmetricButOffLine with {} roots left of -1, leftmost real part in ({}, {}]",
        left.left, iv.lo, iv.hi
    ))
}

fn recurrence_bank() -> Check {
    for name in ThreeTermRule::names() {
        let rep = lib(three_term_report(&lib(ThreeTermRule::by_name(name))?, 50))?;
        ensure(rep.all_hold(), || format!("{name} fails: {:?}", rep.failures().next()))?;
    }
    let rep = lib(verify_relation_bank(40))?;
    ensure(rep.all_hold(), || format!("bank fails: {:?}", rep.failures().next()))?;
    Ok(format!("four three-term rules for d <= 50; {} bank checks for n <= 40", rep.rows.len()))
}

/// The four coefficients in the form the relation was first published:
/// `-(num)/(den)` in the variable n.
fn published_rech3n() -> [(&'static str, RationalFunction); 4] {
    let q = Polynomial::from_ints(&[6, 5, 1]);
    let nm1 = Polynomial::from_ints(&[-1, 1]);
    let f = |num: &[i64], den: Polynomial| {
        -&RationalFunction::new(Polynomial::from_ints(num), den).expect("nonzero")
    };
    [
        ("a", f(&[-16, -13, -3], q.scale(&int(4)))),
        ("b", f(&[-16, -13, -3], q.scale(&int(8)))),
        ("c", f(&[0, -18, -13, -1], (&nm1 * &q).scale(&int(8)))),
        ("d", f(&[32, 13, -9, -4], (&nm1 * &q).scale(&int(8)))),
    ]
}

fn discovery() -> Check {
    let ans = RelationAnsatz::rech3n();
    let found = lib(discover_recurrence(&ans, ehrlace::recurrence::default_probe_orders(&ans)))?;
    let mut shown = Vec::new();
    for ((name, got), (ename, want)) in found.coefficients.iter().zip(published_rech3n()) {
        ensure(name == ename && *got == want, || {
            format!("{name} = {got}, expected {want}")
        })?;
        shown.push(format!("{name} = {}", got.to_factored_string("n")));
    }
    let r = crate::commands::cmd_recurrence_discover("rech3n", None, "n");
    ensure(r.status == Status::Ok, || "recurrence discover rech3n did not succeed".into())?;
    Ok(shown.join("; "))
}

fn favard() -> Check {
    let mut shown = Vec::new();
    for (name, eighths) in ThreeTermRule::names().into_iter().zip([4, 5, 6, 8]) {
        let rep = lib(favard_window(&lib(ThreeTermRule::by_name(name))?, 30))?;
        ensure(rep.m2_eighths == int(eighths), || {
            format!("{name}: 8 M_2 = {}", rep.m2_eighths)
        })?;
        ensure(rep.all_in_unit_interval, || format!("{name}: M_j leaves [0, 1]"))?;
        shown.push(format!("{name} {eighths}/8"));
    }
    Ok(format!("M_2 = {}; M_j in [0, 1] for j <= 30", shown.join(", ")))
}

fn oracles() -> Check {
    let b = budget();
    let interp = |g: &GraphSpec| lib(ehrhart_interpolate(g, b));
    let fam = |id: FamilyId| lib(family_polynomial(&id));
    let mut trees = 0;
    for n in 1..=6 {
        let want = fam(FamilyId::Cross { d: n - 1 })?;
        for t in all_labeled_trees(n) {
            ensure(interp(&t)? == want, || format!("a tree on {n} vertices differs"))?;
            trees += 1;
        }
    }
    for n in 1..=5 {
        ensure(interp(&GraphSpec::complete(n))? == fam(FamilyId::RootA { d: n - 1 })?, || {
            format!("K_{n} differs")
        })?;
    }
    for n in 1..=4 {
        ensure(
            interp(&GraphSpec::complete_bipartite(2, n))? == fam(FamilyId::K2n { n })?,
            || format!("K_(2,{n}) differs"),
        )?;
    }
    ensure(interp(&GraphSpec::complete_bipartite(3, 3))? == fam(FamilyId::K3n { n: 3 })?, || {
        "K_(3,3) differs".into()
    })?;
    ensure(interp(&lib(GraphSpec::cycle(8))?)? == lib(parse_literal(EIGHT_CYCLE))?, || {
        "eight-cycle differs".into()
    })?;
    Ok(format!("{trees} labeled trees, K_1..K_5, K_(2,1..4), K_(3,3), C_8 exact"))
}

fn correct_graphs() -> Check {
    let cases = [(1, 1), (1, 2), (1, 3), (1, 4), (2, 2), (2, 3), (3, 3)];
    for (a, b) in cases {
        ensure(lib(verify_corollary_counts(a, b, 6))?, || format!("({a},{b}) fails"))?;
    }
    Ok("(1,1..4), (2,2), (2,3), (3,3) for k <= 6".into())
}

fn two_n_coverage() -> Check {
    let c = default_center();
    let mut checked = 0;
    for d in 3..=13usize {
        let bound = if d % 2 == 1 { 4 * d - 6 } else { 4 * d + 2 } as i64;
        for cc in (-2..=bound).step_by(2) {
            let g = lib(build_g(d, &int(cc)))?;
            let v = certify_line(&g, &c).verdict;
            ensure(v == LineVerdict::AllOnLine, || format!("G d={d} c={cc}: {}", v.as_str()))?;
            checked += 1;
        }
    }
    for n in 1..=10 {
        for m in 1..=n {
            let p = lib(family_polynomial(&FamilyId::Bipartite2 { m, n }))?;
            let v = certify_line(&p, &c).verdict;
            ensure(v == LineVerdict::AllOnLine, || format!("bip2 m={m} n={n}: {}", v.as_str()))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} members AllOnLine"))
}

fn lemma_bank() -> Check {
    let hdj = lib(verify_hdj_recursion(20))?;
    ensure(hdj.all_hold(), || format!("{:?}", hdj.failures().next()))?;
    let g = lib(verify_g_lemmas(40))?;
    ensure(g.all_hold(), || format!("{:?}", g.failures().next()))?;
    Ok(format!(
        "{} H/F/A/B checks (d <= 20), {} G checks (d <= 40)",
        hdj.rows.len(),
        g.rows.len()
    ))
}

fn duals() -> Check {
    family_chain("duala", 30)?;
    let c = default_center();
    for d in 1..=30 {
        let p = lib(family_polynomial(&FamilyId::Cube { d }))?;
        ensure(certify_line(&p, &c).verdict == LineVerdict::AllOnLine, || format!("cube d={d}"))?;
    }
    for d in 2..=30 {
        let p = lib(family_polynomial(&FamilyId::DualSimplexP { d }))?;
        let v = certify_line(&p, &c).verdict;
        ensure(v != LineVerdict::AllOnLine, || format!("dualsimplexp d={d} is on the line"))?;
    }
    Ok("duala AllOnLine + Interlace d <= 30; cube AllOnLine; dualsimplexp off the line for 2 <= d <= 30".into())
}

/// Parsed `(re, im)` pairs from a roots CSV, after checking the header.
fn csv_roots(text: &str) -> std::result::Result<Vec<(f64, f64)>, String> {
    let mut lines = text.lines();
    ensure(lines.next() == Some("family,degree,re,im"), || "bad CSV header".into())?;
    lines
        .map(|l| {
            let f: Vec<&str> = l.rsplitn(3, ',').collect();
            match (f.first().and_then(|s| s.parse().ok()), f.get(1).and_then(|s| s.parse().ok())) {
                (Some(im), Some(re)) => Ok((re, im)),
                _ => Err(format!("bad CSV row {l:?}")),
            }
        })
        .collect()
}

/// Each root of `a` within `tol` of a distinct root of `b`.
fn matches(a: &[(f64, f64)], b: &[(f64, f64)], tol: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    a.iter().all(|&(re, im)| {
        let hit = b.iter().enumerate().position(|(i, &(r2, i2))| {
            !used[i] && (re - r2).abs() <= tol && (im - i2).abs() <= tol
        });
        hit.map(|i| used[i] = true).is_some()
    })
}

fn reflect(roots: &[(f64, f64)]) -> Vec<(f64, f64)> {
    roots.iter().map(|&(re, im)| (-1.0 - re, im)).collect()
}

fn timed_roots(spec: &str) -> std::result::Result<Vec<(f64, f64)>, String> {
    let start = Instant::now();
    let r = cmd_roots(spec, RootFormat::Csv, false);
    ensure(start.elapsed() < Duration::from_secs(1), || format!("roots {spec} took over 1s"))?;
    ensure(r.status == Status::Ok, || format!("roots {spec}: {:?}", r.reason))?;
    csv_roots(r.text.as_deref().unwrap_or(""))
}

fn numeric() -> Check {
    let k33 = timed_roots("k3n:n=3")?;
    let printed = [(-0.5, -1.7292), (-0.5, -0.6602), (-0.5, 0.0), (-0.5, 0.6602), (-0.5, 1.7292)];
    ensure(matches(&k33, &printed, 1e-3), || format!("k3n:n=3 roots {k33:?}"))?;
    let h331 = lib(parse_literal(H331))?;
    let printed331 = [
        (-0.5, -1.6154),
        (-0.5, -1.0638),
        (-0.5, -0.2448),
        (-0.5, 0.2448),
        (-0.5, 1.0638),
        (-0.5, 1.6154),
    ];
    let r331 = lib(crate::commands::sorted_roots(&h331))?;
    ensure(matches(&r331, &printed331, 1e-3), || format!("H_(3,3,1) roots {r331:?}"))?;
    let b6 = timed_roots("rootb:d=6")?;
    let d6 = timed_roots("rootd:d=6")?;
    ensure(b6.len() == 6 && d6.len() == 6, || "expected six roots each".into())?;
    ensure(!matches(&b6, &reflect(&b6), 1e-5), || "B6 roots symmetric about -1/2".into())?;
    ensure(matches(&d6, &reflect(&d6), 1e-5), || "D6 roots not symmetric about -1/2".into())?;
    ensure(d6.iter().any(|(re, _)| (re + 0.5).abs() > 1e-3), || "D6 roots all on the line".into())?;
    Ok("k3n:n=3 and H_(3,3,1) within 1e-3; B6 asymmetric, D6 symmetric but off the line".into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn published_form_matches_library_constants() {
        for ((n1, a), (n2, b)) in published_rech3n()
            .into_iter()
            .zip(ehrlace::recurrence::rech3n_coefficients())
        {
            assert_eq!((n1, a), (n2, b));
        }
    }

    #[test]
    fn csv_parsing() {
        let rows = csv_roots("family,degree,re,im\n\"g:d=5,c=4\",4,-0.500000,1.250000").unwrap();
        assert_eq!(rows, [(-0.5, 1.25)]);
        assert!(csv_roots("x\n").is_err());
    }

    #[test]
    fn root_matching() {
        let a = [(0.0, 1.0), (0.0, -1.0)];
        assert!(matches(&a, &[(0.0, -1.0), (0.0005, 1.0)], 1e-3));
        assert!(!matches(&a, &[(0.0, 1.0), (0.0, 1.0)], 1e-3));
    }
}
