//! Brute-force oracles: lattice points in dilates of symmetric edge
//! polytopes, and enumeration of correct bipartite graphs.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactcore::rational::binomial;
use crate::exactcore::{Polynomial, Rational};
use crate::families::{family_series, FamilyId};
use crate::series::series_coefficient;

/// Default ceiling on the number of stored lattice points.
pub const DEFAULT_BUDGET: usize = 10_000_000;

/// A simple undirected graph on vertices `0..num_vertices`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphSpec {
    pub num_vertices: usize,
    pub edges: Vec<(usize, usize)>,
    /// Part sizes `(a, b)`: vertices `0..a` and `a..a+b`.
    pub bipartition: Option<(usize, usize)>,
}

impl GraphSpec {
    pub fn new(
        num_vertices: usize,
        edges: Vec<(usize, usize)>,
        bipartition: Option<(usize, usize)>,
    ) -> Result<Self> {
        let mut seen = HashSet::new();
        for &(u, v) in &edges {
            if u >= num_vertices || v >= num_vertices {
                return Err(Error::Param(format!("edge ({u}, {v}) out of range")));
            }
            if u == v {
                return Err(Error::Param(format!("loop at vertex {u}")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::Param(format!("duplicate edge ({u}, {v})")));
            }
        }
        if let Some((a, b)) = bipartition {
            if a + b != num_vertices {
                return Err(Error::Param(format!(
                    "bipartition {a} + {b} does not cover {num_vertices} vertices"
                )));
            }
            if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| (u < a) == (v < a)) {
                return Err(Error::Param(format!("edge ({u}, {v}) does not cross the bipartition")));
            }
        }
        Ok(GraphSpec {
            num_vertices,
            edges,
            bipartition,
        })
    }

    /// Path with `d` edges.
    pub fn tree_path(d: usize) -> Self {
        let edges = (0..d).map(|i| (i, i + 1)).collect();
        GraphSpec {
            num_vertices: d + 1,
            edges,
            bipartition: None,
        }
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Param("cycle needs n >= 3".into()));
        }
        let edges = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::new(n, edges, None)
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        GraphSpec {
            num_vertices: n,
            edges,
            bipartition: None,
        }
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in a..a + b {
                edges.push((u, v));
            }
        }
        GraphSpec {
            num_vertices: a + b,
            edges,
            bipartition: Some((a, b)),
        }
    }

    /// Text format: `n m`, then `m` lines `u v`, then optionally
    /// `bipartition a b`. Blank lines and `#` comments are skipped.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty graph description".into()))?;
        let [n, m] = parse_pair(header)?;
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse(format!("expected {m} edge lines")))?;
            let [u, v] = parse_pair(line)?;
            edges.push((u, v));
        }
        let mut bipartition = None;
        if let Some(line) = lines.next() {
            let rest = line
                .strip_prefix("bipartition")
                .ok_or_else(|| Error::Parse(format!("unexpected line {line:?}")))?;
            bipartition = Some(parse_pair(rest).map(|[a, b]| (a, b))?);
        }
        if let Some(line) = lines.next() {
            return Err(Error::Parse(format!("trailing line {line:?}")));
        }
        Self::new(n, edges, bipartition)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.num_vertices, self.edges.len());
        for (u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        if let Some((a, b)) = self.bipartition {
            out.push_str(&format!("bipartition {a} {b}\n"));
        }
        out
    }

    pub fn num_components(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.num_vertices).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        let mut comps = self.num_vertices;
        for &(u, v) in &self.edges {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                parent[ru] = rv;
                comps -= 1;
            }
        }
        comps
    }

    /// Dimension of the symmetric edge polytope.
    pub fn ehrhart_degree(&self) -> usize {
        self.num_vertices - self.num_components()
    }
}

fn parse_pair(s: &str) -> Result<[usize; 2]> {
    let toks: Vec<&str> = s.split_whitespace().collect();
    if toks.len() != 2 {
        return Err(Error::Parse(format!("expected two integers in {s:?}")));
    }
    let p = |t: &str| {
        t.parse::<usize>()
            .map_err(|_| Error::Parse(format!("{t:?} is not a nonnegative integer")))
    };
    Ok([p(toks[0])?, p(toks[1])?])
}

impl FromStr for GraphSpec {
    type Err = Error;

    /// Built-ins `tree:d`, `cycle:n`, `complete:n`, `kab:a,b`.
    fn from_str(s: &str) -> Result<Self> {
        let (name, arg) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected name:args in {s:?}")))?;
        let num = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("{t:?} is not a nonnegative integer")))
        };
        match name {
            "tree" => Ok(Self::tree_path(num(arg)?)),
            "cycle" => Self::cycle(num(arg)?),
            "complete" => Ok(Self::complete(num(arg)?)),
            "kab" => {
                let (a, b) = arg
                    .split_once(',')
                    .ok_or_else(|| Error::Parse(format!("kab expects a,b, got {arg:?}")))?;
                Ok(Self::complete_bipartite(num(a)?, num(b)?))
            }
            _ => Err(Error::Parse(format!("unknown graph {name:?}"))),
        }
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph(n={}, m={})", self.num_vertices, self.edges.len())
    }
}

/// All labeled trees on `n` vertices, via Prüfer sequences.
pub fn all_labeled_trees(n: usize) -> Vec<GraphSpec> {
    if n <= 1 {
        return vec![GraphSpec::tree_path(0); n];
    }
    if n == 2 {
        return vec![GraphSpec::tree_path(1)];
    }
    let mut out = Vec::new();
    let mut seq = vec![0usize; n - 2];
    loop {
        out.push(prufer_tree(&seq, n));
        let mut i = 0;
        while i < seq.len() {
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
            i += 1;
        }
        if i == seq.len() {
            return out;
        }
    }
}

fn prufer_tree(seq: &[usize], n: usize) -> GraphSpec {
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = (0..n).find(|&u| degree[u] == 1).unwrap_or(0);
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    GraphSpec {
        num_vertices: n,
        edges,
        bipartition: None,
    }
}

type Point = Box<[i32]>;

/// Generators `±(e_u - e_v)`, written in the first `n - 1` coordinates
/// (the last is determined by the zero sum).
fn generators(g: &GraphSpec) -> Vec<Vec<i32>> {
    let dim = g.num_vertices.saturating_sub(1);
    let mut out = Vec::with_capacity(2 * g.edges.len());
    for &(u, v) in &g.edges {
        let mut e = vec![0i32; dim];
        if u < dim {
            e[u] += 1;
        }
        if v < dim {
            e[v] -= 1;
        }
        out.push(e.iter().map(|x| -x).collect());
        out.push(e);
    }
    out
}

/// Breadth-first expansion of the dilates `0, 1, ..., s_max`; calls
/// `visit(s, layer)` with the points first reached at step `s`.
fn expand_layers(
    g: &GraphSpec,
    s_max: usize,
    budget: usize,
    mut visit: impl FnMut(usize, &[Point]),
) -> Result<()> {
    let gens = generators(g);
    let origin: Point = vec![0i32; g.num_vertices.saturating_sub(1)].into_boxed_slice();
    let mut seen: HashSet<Point> = HashSet::new();
    seen.insert(origin.clone());
    let mut frontier = vec![origin];
    visit(0, &frontier);
    for s in 1..=s_max {
        let mut next = Vec::new();
        for p in &frontier {
            for e in &gens {
                let q: Point = p.iter().zip(e).map(|(a, b)| a + b).collect();
                if !seen.contains(&q) {
                    seen.insert(q.clone());
                    next.push(q);
                    if seen.len() > budget {
                        return Err(Error::OverBudget { budget, dilation: s });
                    }
                }
            }
        }
        visit(s, &next);
        frontier = next;
    }
    Ok(())
}

/// `|s P_G ∩ Z^n|` for `s = 0..=s_max`.
pub fn count_dilates(g: &GraphSpec, s_max: usize, budget: usize) -> Result<Vec<u64>> {
    let mut counts = Vec::with_capacity(s_max + 1);
    let mut total = 0u64;
    expand_layers(g, s_max, budget, |_, layer| {
        total += layer.len() as u64;
        counts.push(total);
    })?;
    Ok(counts)
}

/// Number of lattice points in the `s`-th dilate of the symmetric edge
/// polytope, generated as sums of at most `s` lattice points of P_G.
pub fn count_dilate(g: &GraphSpec, s: i64, budget: usize) -> Result<u64> {
    if s < 0 {
        return Err(Error::Param(format!("dilation {s} is negative")));
    }
    let counts = count_dilates(g, s as usize, budget)?;
    Ok(counts[s as usize])
}

/// The lattice points of `s P_G` as full vectors in `Z^n`, sorted.
pub fn dilate_points(g: &GraphSpec, s: usize, budget: usize) -> Result<Vec<Vec<i64>>> {
    let mut out = Vec::new();
    expand_layers(g, s, budget, |_, layer| {
        for p in layer {
            let mut v: Vec<i64> = p.iter().map(|&x| x as i64).collect();
            if g.num_vertices > 0 {
                v.push(-v.iter().sum::<i64>());
            }
            out.push(v);
        }
    })?;
    out.sort();
    Ok(out)
}

/// Newton interpolation through `(s, values[s])`, `s = 0..values.len()`.
pub fn newton_interpolate(values: &[Rational]) -> Polynomial {
    let mut diffs = values.to_vec();
    let mut out = Polynomial::zero();
    for k in 0..values.len() {
        out = &out + &Polynomial::binomial(&Polynomial::x(), k).scale(&diffs[0]);
        for i in 0..diffs.len() - 1 {
            diffs[i] = &diffs[i + 1] - &diffs[i];
        }
        diffs.pop();
    }
    out
}

/// Ehrhart polynomial of `P_G` from `count_dilate` at `s = 0..D` with
/// `D = |V| - #components`, cross-checked at `s = D + 1`.
pub fn ehrhart_interpolate(g: &GraphSpec, budget: usize) -> Result<Polynomial> {
    let d = g.ehrhart_degree();
    let counts = count_dilates(g, d + 1, budget)?;
    let values: Vec<Rational> = counts[..=d]
        .iter()
        .map(|&c| Rational::from_integer(BigInt::from(c)))
        .collect();
    let poly = newton_interpolate(&values);
    let check = Rational::from_integer(BigInt::from(counts[d + 1]));
    let predicted = poly.eval(&Rational::from_integer(BigInt::from(d + 1)));
    if predicted != check {
        return Err(Error::InterpolationMismatch {
            dilation: d + 1,
            predicted: predicted.to_string(),
            counted: check.to_string(),
        });
    }
    Ok(poly)
}

/// Side of the bipartition: part A (size a, the `w` vertices) or part B
/// (size b, the `v` vertices).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    A,
    B,
}

/// A directed edge between the parts, indices 0-based within each part.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DirectedEdge {
    pub tail: (Side, usize),
    pub head: (Side, usize),
}

/// Whether `{e, f}` contains a leading term of the quadratic Gröbner
/// basis, under the literal reading of its index ranges.
fn forbidden_pair(e: &DirectedEdge, f: &DirectedEdge) -> bool {
    if e == f {
        return false;
    }
    // (v_i, w_j)(w_j, v_i)
    if e.tail == f.head && e.head == f.tail {
        return true;
    }
    // (v_i, w_j)(w_j, v_i') for i != i', j != 1, and the mirror image
    for (p, q) in [(e, f), (f, e)] {
        if p.head == q.tail && p.head.1 >= 1 && p.tail != q.head {
            return true;
        }
    }
    // (v_i, w_j)(v_i', w_j') for i > i', j < j', and the mirror image
    if e.tail.0 == f.tail.0 {
        let anti = |x: &DirectedEdge, y: &DirectedEdge| x.tail.1 > y.tail.1 && x.head.1 < y.head.1;
        return anti(e, f) || anti(f, e);
    }
    false
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexType {
    Incoming,
    Outgoing,
    Zero,
}

/// Restrict to graphs where the given vertex has the given type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VertexFilter {
    pub side: Side,
    pub index: usize,
    pub kind: VertexType,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrectGraphQuery {
    pub a: usize,
    pub b: usize,
    pub k: usize,
    pub typed: Vec<VertexFilter>,
}

/// All supports of correct `(a, b)` graphs, as bitmasks over
/// [`CorrectGraphTable::edges`].
#[derive(Clone, Debug)]
pub struct CorrectGraphTable {
    pub a: usize,
    pub b: usize,
    pub edges: Vec<DirectedEdge>,
    pub supports: Vec<u64>,
}

impl CorrectGraphTable {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::Param("part sizes must be positive".into()));
        }
        if 2 * a * b > 64 {
            return Err(Error::Param(format!("({a}, {b}) has too many edges to enumerate")));
        }
        let mut edges = Vec::with_capacity(2 * a * b);
        for i in 0..a {
            for j in 0..b {
                edges.push(DirectedEdge { tail: (Side::A, i), head: (Side::B, j) });
                edges.push(DirectedEdge { tail: (Side::B, j), head: (Side::A, i) });
            }
        }
        let conflicts: Vec<u64> = edges
            .iter()
            .map(|e| {
                edges
                    .iter()
                    .enumerate()
                    .filter(|(_, f)| forbidden_pair(e, f))
                    .fold(0u64, |m, (j, _)| m | (1 << j))
            })
            .collect();
        let mut supports = Vec::new();
        fn rec(i: usize, cur: u64, conflicts: &[u64], out: &mut Vec<u64>) {
            if i == conflicts.len() {
                out.push(cur);
                return;
            }
            rec(i + 1, cur, conflicts, out);
            if conflicts[i] & cur == 0 {
                rec(i + 1, cur | (1 << i), conflicts, out);
            }
        }
        rec(0, 0, &conflicts, &mut supports);
        Ok(CorrectGraphTable { a, b, edges, supports })
    }

    /// Type of a vertex in a support; `None` when it has both in- and
    /// out-edges.
    pub fn vertex_type(&self, support: u64, side: Side, index: usize) -> Option<VertexType> {
        let (mut inc, mut out) = (false, false);
        for (i, e) in self.edges.iter().enumerate() {
            if support & (1 << i) == 0 {
                continue;
            }
            inc |= e.head == (side, index);
            out |= e.tail == (side, index);
        }
        match (inc, out) {
            (false, false) => Some(VertexType::Zero),
            (true, false) => Some(VertexType::Incoming),
            (false, true) => Some(VertexType::Outgoing),
            (true, true) => None,
        }
    }

    fn matches(&self, support: u64, filters: &[VertexFilter]) -> bool {
        filters
            .iter()
            .all(|f| self.vertex_type(support, f.side, f.index) == Some(f.kind))
    }

    /// Number of correct graphs of total weight `k` passing `filters`.
    pub fn count(&self, k: usize, filters: &[VertexFilter]) -> BigInt {
        let mut total = BigInt::zero();
        for &s in &self.supports {
            if !self.matches(s, filters) {
                continue;
            }
            total += weightings(s.count_ones() as usize, k);
        }
        total
    }
}

/// Ways to give `size` edges positive integer weights summing to `k`.
fn weightings(size: usize, k: usize) -> BigInt {
    match (size, k) {
        (0, 0) => BigInt::one(),
        (0, _) => BigInt::zero(),
        _ => binomial(k as i64 - 1, size as i64 - 1),
    }
}

/// `f(a, b, k)`, optionally restricted by vertex types.
pub fn count_correct_graphs(q: &CorrectGraphQuery) -> Result<BigInt> {
    let table = CorrectGraphTable::new(q.a, q.b)?;
    for f in &q.typed {
        let size = match f.side {
            Side::A => q.a,
            Side::B => q.b,
        };
        if f.index >= size {
            return Err(Error::Param(format!("filter vertex {} out of range", f.index)));
        }
    }
    Ok(table.count(q.k, &q.typed))
}

/// Closed-form Ehrhart series of K_{a,b} for `min(a, b) <= 3`.
fn complete_bipartite_family(a: usize, b: usize) -> Result<FamilyId> {
    let (small, n) = (a.min(b), a.max(b));
    Ok(match small {
        1 => FamilyId::K1n { n },
        2 => FamilyId::K2n { n },
        3 => FamilyId::K3n { n },
        _ => {
            return Err(Error::Precondition(format!(
                "no closed form for K_({a},{b})"
            )))
        }
    })
}

/// `Σ_{j<=k} f(a, b, j) = H_{a,b}(k)` for all `k <= k_max`.
pub fn verify_corollary_counts(a: usize, b: usize, k_max: usize) -> Result<bool> {
    let series = family_series(&complete_bipartite_family(a, b)?)?;
    let table = CorrectGraphTable::new(a, b)?;
    let mut cumulative = BigInt::zero();
    for k in 0..=k_max {
        cumulative += table.count(k, &[]);
        if Rational::from_integer(cumulative.clone()) != series_coefficient(&series, k) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Check the seven-case decomposition of correct (3, n) graphs by the type
/// of the last `v` vertex, for every weight `k <= k_max`. Part A holds
/// `w_1, w_2, w_3` and part B holds `v_1, ..., v_n`.
pub fn verify_seven_case_decomposition(n: usize, k_max: usize) -> Result<bool> {
    if n < 2 {
        return Err(Error::Param("seven-case decomposition needs n >= 2".into()));
    }
    let full = CorrectGraphTable::new(3, n)?;
    let smaller = CorrectGraphTable::new(3, n - 1)?;
    use VertexType::*;
    for vn_kind in [Outgoing, Incoming] {
        // types seen from the new vertex: "i" means w is a head of an
        // existing edge when v_n is outgoing; the incoming case swaps i/o
        let (i, o) = match vn_kind {
            Outgoing => (Incoming, Outgoing),
            _ => (Outgoing, Incoming),
        };
        let typed = |w3: Option<VertexType>, w2: Option<VertexType>, j: usize| {
            let mut f = Vec::new();
            if let Some(t) = w3 {
                f.push(VertexFilter { side: Side::A, index: 2, kind: t });
            }
            if let Some(t) = w2 {
                f.push(VertexFilter { side: Side::A, index: 1, kind: t });
            }
            smaller.count(j, &f)
        };
        for k in 0..=k_max {
            let lhs = full.count(k, &[VertexFilter { side: Side::B, index: n - 1, kind: vn_kind }]);
            let mut rhs = BigInt::zero();
            for j in 0..k {
                let r = BigInt::from(k - j + 1);
                let r2 = binomial((k - j + 2) as i64, 2);
                rhs += typed(Some(i), None, j);
                rhs += &r * typed(Some(Zero), Some(i), j);
                rhs += typed(Some(o), Some(i), j);
                rhs += r2 * typed(Some(Zero), Some(Zero), j);
                rhs += &r * typed(Some(Zero), Some(o), j);
                rhs += typed(Some(o), Some(o), j);
                rhs += &r * typed(Some(o), Some(Zero), j);
            }
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
