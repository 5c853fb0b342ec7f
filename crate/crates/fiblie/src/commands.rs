//! Table builders behind the subcommands. Every builder is deterministic:
//! rows follow the canonical monomial order or lattice order.

use fiblie_core::basis::{classify_fig1, enumerate_w, enumerate_w_restricted, Fig1Colour};
use fiblie_core::calculus::{bracket, DEFAULT_MONOMIAL_CAP};
use fiblie_core::grading::{gr, strip_check, swt, wt};
use fiblie_core::homology::HomologyTable;
use fiblie_core::nil::{conjecture_scan, nil_index, shift_structure_check};
use fiblie_core::presentation::{fibonacci_relations, quotient_dims};
use fiblie_core::series::{
    enveloping_growth_report, euler_product, hilbert_lie, hilbert_one_var, hilbert_recursive, EnvelopeReport,
};
use fiblie_core::{BasisKind, Element, LatticeSeries, Monomial, Result};
use serde_json::{json, Value};

use crate::expr::LieExpr;
use crate::output::Table;

/// Figure-1 colour of a basis monomial: pivots are red, standard monomials
/// of length `>= 4` are green or blue, everything else (short levels, pivot
/// squares) is grey.
pub fn colour(m: Monomial) -> &'static str {
    if m.tail().is_one() {
        return "red";
    }
    match classify_fig1(m) {
        Ok(Fig1Colour::Green) => "green",
        Ok(Fig1Colour::Blue) => "blue",
        Err(_) => "grey",
    }
}

fn levels(max_n: u32, kind: BasisKind) -> Result<Vec<Monomial>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let level = match kind {
            BasisKind::Lie => enumerate_w(n)?,
            BasisKind::Restricted => enumerate_w_restricted(n)?,
        };
        out.extend(level.monomials);
    }
    Ok(out)
}

pub fn basis_table(max_n: u32, kind: BasisKind) -> Result<Table> {
    let mut t = Table::new(&["length", "tail", "pivot", "fig1_colour"]);
    for m in levels(max_n, kind)? {
        t.push(vec![json!(m.pivot()), json!(m.tail().to_string()), json!(m.pivot()), json!(colour(m))]);
    }
    Ok(t)
}

pub fn eval_table(sources: &[String], cap: usize) -> Result<Table> {
    let mut t = Table::new(&["expr", "value", "monomials"]);
    for s in sources {
        let e = LieExpr::parse(s)?;
        let v = e.eval(cap)?;
        t.push(vec![json!(e.to_string()), json!(v.to_string()), json!(v.len())]);
    }
    Ok(t)
}

pub fn bracket_table(a: &str, b: &str, cap: usize) -> Result<Table> {
    let x = LieExpr::parse(a)?.eval(cap)?;
    let y = LieExpr::parse(b)?.eval(cap)?;
    let mut t = Table::new(&["a", "b", "bracket"]);
    t.push(vec![json!(x.to_string()), json!(y.to_string()), json!(bracket(&x, &y).to_string())]);
    Ok(t)
}

pub fn nil_table(source: &str, cap: u32, monomial_cap: usize) -> Result<Table> {
    let e: Element = LieExpr::parse(source)?.eval(monomial_cap)?;
    let r = nil_index(&e, cap, monomial_cap)?;
    let mut t = Table::new(&[
        "element",
        "min_pivot",
        "max_pivot",
        "senior",
        "index",
        "bound",
        "within_bound",
        "peak_monomials",
        "structure_ok",
    ]);
    t.push(vec![
        json!(r.element.to_string()),
        json!(r.min_pivot),
        json!(r.max_pivot),
        json!(r.senior),
        json!(r.index),
        json!(r.bound),
        json!(r.within_bound()),
        json!(r.peak_monomials),
        json!(shift_structure_check(&e, r.index)),
    ]);
    Ok(t)
}

pub fn nil_scan_table(lo: u32, hi: u32) -> Result<Table> {
    let mut t = Table::new(&["n", "m", "index", "bound", "tight"]);
    for r in conjecture_scan(lo, hi, DEFAULT_MONOMIAL_CAP)? {
        t.push(vec![json!(r.n), json!(r.m), json!(r.index), json!(r.bound), json!(r.tight())]);
    }
    Ok(t)
}

fn big(c: &num_bigint::BigInt) -> Value {
    // exact integers beyond i64 are carried as decimal strings
    match i64::try_from(c) {
        Ok(v) => json!(v),
        Err(_) => json!(c.to_string()),
    }
}

pub fn lattice_table(s: &LatticeSeries) -> Table {
    let mut t = Table::new(&["a", "b", "coefficient"]);
    for ((a, b), c) in s.iter() {
        t.push(vec![json!(a), json!(b), big(c)]);
    }
    t
}

/// `H(𝓛)` through total degree `degree`, or `H(W_{<=n})` by the recursion.
pub fn hilbert_table(degree: u32, n: Option<u32>) -> Result<Table> {
    let s = match n {
        Some(n) => hilbert_recursive(n, degree)?,
        None => hilbert_lie(degree),
    };
    Ok(lattice_table(&s))
}

pub fn euler_table(degree: u32) -> Table {
    lattice_table(&euler_product(degree))
}

pub fn hilbert_one_var_table(degree: u32, kind: BasisKind) -> Result<Table> {
    let s = hilbert_one_var(kind, degree)?;
    let mut t = Table::new(&["degree", "dim"]);
    for (n, c) in s.coeffs().iter().enumerate().skip(1) {
        t.push(vec![json!(n), big(c)]);
    }
    Ok(t)
}

pub fn envelope_table(degree: u32) -> Result<(Table, EnvelopeReport)> {
    let report = enveloping_growth_report(degree)?;
    let mut t = Table::new(&["n", "dim", "gamma", "theta_hat"]);
    for r in &report.rows {
        t.push(vec![json!(r.n), big(&r.dim), big(&r.gamma), json!(r.theta_hat)]);
    }
    Ok((t, report))
}

pub struct HomologyOutput {
    pub table: Table,
    pub d_squared_zero: bool,
    pub euler_mismatches: Vec<(i64, i64)>,
}

/// Nonzero homology dimensions `(n, a, b, dim)` with `a + b <= max_total`,
/// optionally restricted to one homological degree.
pub fn homology_table(max_total: u32, only_n: Option<usize>) -> HomologyOutput {
    let h = HomologyTable::compute(max_total);
    let mut table = Table::new(&["n", "a", "b", "dim"]);
    let mut rows: Vec<_> = h.entries().filter(|&(n, ..)| only_n.is_none_or(|k| k == n)).collect();
    rows.sort_unstable();
    for (n, a, b, d) in rows {
        table.push(vec![json!(n), json!(a), json!(b), json!(d)]);
    }
    let euler_mismatches = h.euler_mismatches(&euler_product(max_total));
    HomologyOutput { table, d_squared_zero: h.d_squared_zero(), euler_mismatches }
}

/// Quotient dimensions by the three defining relations next to `dim 𝓛_k`.
pub fn presentation_table(max_degree: u32) -> Result<(Table, bool)> {
    let target = hilbert_one_var(BasisKind::Lie, max_degree)?;
    let mut t = Table::new(&["degree", "free", "ideal", "quotient", "target", "match"]);
    let mut all = true;
    for row in quotient_dims(&fibonacci_relations(), max_degree) {
        let want = target.coeff(row.degree);
        let ok = num_bigint::BigInt::from(row.quotient) == want;
        all &= ok;
        t.push(vec![json!(row.degree), json!(row.free), json!(row.ideal), json!(row.quotient), big(&want), json!(ok)]);
    }
    Ok((t, all))
}

/// Weights of every monomial of `W_{<=max_n}` (or `W̃`), exact and approximate.
pub fn strip_table(max_n: u32, kind: BasisKind) -> Result<Table> {
    let mut t = Table::new(&["tail", "pivot", "a", "b", "wt", "swt", "wt_approx", "swt_approx", "colour", "in_strip"]);
    for m in levels(max_n, kind)? {
        let d = gr(m);
        let (w, s) = (wt(m), swt(m));
        t.push(vec![
            json!(m.tail().to_string()),
            json!(m.pivot()),
            json!(d.a),
            json!(d.b),
            json!(w.to_string()),
            json!(s.to_string()),
            json!(w.to_f64()),
            json!(s.to_f64()),
            json!(colour(m)),
            json!(strip_check(m)),
        ]);
    }
    Ok(t)
}
