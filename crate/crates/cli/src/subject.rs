//! Parsing of command subjects: family specs, literal polynomials and
//! graphs.

use std::path::Path;

use ehrlace::error::{Error, Result};
use ehrlace::exactcore::{parse_rational, Polynomial};
use ehrlace::families::{family_polynomial, FamilyId};
use ehrlace::latticecount::{ehrhart_interpolate, GraphSpec};

/// A polynomial together with the label it was requested under.
#[derive(Clone, Debug)]
pub struct Subject {
    pub label: String,
    pub family: Option<FamilyId>,
    pub poly: Polynomial,
}

/// `poly:c0,c1,...` with rational coefficients, constant term first.
pub fn parse_literal(body: &str) -> Result<Polynomial> {
    let coeffs = body
        .split([',', ' ', '\t', '\n'])
        .filter(|t| !t.trim().is_empty())
        .map(parse_rational)
        .collect::<Result<Vec<_>>>()?;
    if coeffs.is_empty() {
        return Err(Error::Parse("literal polynomial has no coefficients".into()));
    }
    Ok(Polynomial::new(coeffs))
}

/// A family spec such as `stasheff:d=12` or a literal `poly:1,2,2`.
pub fn parse_subject(s: &str) -> Result<Subject> {
    let s = s.trim();
    if let Some(body) = s.strip_prefix("poly:") {
        return Ok(Subject {
            label: s.to_string(),
            family: None,
            poly: parse_literal(body)?,
        });
    }
    let id: FamilyId = s.parse()?;
    Ok(Subject {
        label: id.to_string(),
        poly: family_polynomial(&id)?,
        family: Some(id),
    })
}

/// A built-in graph (`cycle:8`) or GraphSpec text.
pub fn parse_graph(s: &str) -> Result<GraphSpec> {
    s.trim().parse()
}

pub fn read_graph_file(path: &Path) -> Result<GraphSpec> {
    GraphSpec::parse_text(&read(path)?)
}

/// Whitespace or comma separated coefficients, constant term first; `#`
/// starts a comment.
pub fn read_polynomial_file(path: &Path) -> Result<Polynomial> {
    let text = read(path)?;
    let body: String = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .collect::<Vec<_>>()
        .join(" ");
    parse_literal(&body)
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))
}

/// Ehrhart polynomial of a graph's symmetric edge polytope by counting.
pub fn graph_subject(label: &str, g: &GraphSpec, budget: usize) -> Result<Subject> {
    Ok(Subject {
        label: label.to_string(),
        family: None,
        poly: ehrhart_interpolate(g, budget)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use ehrlace::exactcore::rat;

    #[test]
    fn literal() {
        let p = parse_literal("1, 43/10,481/60").unwrap();
        assert_eq!(p.coeffs(), &[rat(1, 1), rat(43, 10), rat(481, 60)]);
        assert!(parse_literal("").is_err());
        assert!(matches!(parse_literal("1,x"), Err(Error::Parse(_))));
    }

    #[test]
    fn family_subject() {
        let s = parse_subject("cube:d=2").unwrap();
        assert_eq!(s.poly, Polynomial::from_ints(&[1, 4, 4]));
        assert!(parse_subject("nosuch:d=2").is_err());
    }
}
