//! Figure data: each figure is a table (the CSV artifact) plus an SVG drawn
//! from exactly those rows.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use fiblie_core::basis::enumerate_w;
use fiblie_core::golden::GoldenInt;
use fiblie_core::grading::{gr, swt, weight_coords, wt, Multidegree};
use fiblie_core::series::euler_product;
use fiblie_core::{Monomial, Result};
use serde_json::{json, Value};

use crate::commands::colour;
use crate::output::Table;

pub struct Figure {
    pub name: &'static str,
    pub table: Table,
    pub svg: String,
}

fn col(t: &Table, name: &str) -> usize {
    t.columns.iter().position(|c| *c == name).expect("column present")
}

fn num(v: &Value) -> f64 {
    match v {
        Value::Number(n) => n.as_f64().unwrap(),
        Value::String(s) => s.parse().unwrap_or(0.0),
        _ => 0.0,
    }
}

/// Minimal SVG canvas mapping a data box onto a square plot area.
struct Canvas {
    body: String,
    x: (f64, f64),
    y: (f64, f64),
}

const SIZE: f64 = 640.0;
const MARGIN: f64 = 48.0;

impl Canvas {
    fn new(x: (f64, f64), y: (f64, f64)) -> Self {
        let pad = |(lo, hi): (f64, f64)| {
            let w = (hi - lo).max(1e-9) * 0.04;
            (lo - w, hi + w)
        };
        Canvas { body: String::new(), x: pad(x), y: pad(y) }
    }

    fn px(&self, x: f64) -> f64 {
        MARGIN + (x - self.x.0) / (self.x.1 - self.x.0) * (SIZE - 2.0 * MARGIN)
    }

    fn py(&self, y: f64) -> f64 {
        SIZE - MARGIN - (y - self.y.0) / (self.y.1 - self.y.0) * (SIZE - 2.0 * MARGIN)
    }

    fn circle(&mut self, x: f64, y: f64, r: f64, fill: &str, extra: &str) {
        let _ = writeln!(
            self.body,
            r#"<circle cx="{:.2}" cy="{:.2}" r="{:.2}" fill="{fill}"{extra}/>"#,
            self.px(x),
            self.py(y),
            r
        );
    }

    fn line(&mut self, a: (f64, f64), b: (f64, f64), style: &str) {
        let _ = writeln!(
            self.body,
            r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" {style}/>"#,
            self.px(a.0),
            self.py(a.1),
            self.px(b.0),
            self.py(b.1)
        );
    }

    fn rect(&mut self, x: (f64, f64), y: (f64, f64), style: &str) {
        let (l, r) = (self.px(x.0), self.px(x.1));
        let (t, b) = (self.py(y.1), self.py(y.0));
        let _ =
            writeln!(self.body, r#"<rect x="{l:.2}" y="{t:.2}" width="{:.2}" height="{:.2}" {style}/>"#, r - l, b - t);
    }

    fn finish(self, title: &str, xlabel: &str, ylabel: &str) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
        );
        let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
        let _ = writeln!(s, r#"<text x="{}" y="24" text-anchor="middle" font-size="16">{title}</text>"#, SIZE / 2.0);
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" text-anchor="middle" font-size="13">{xlabel}</text>"#,
            SIZE / 2.0,
            SIZE - 12.0
        );
        let _ = writeln!(
            s,
            r#"<text x="14" y="{}" text-anchor="middle" font-size="13" transform="rotate(-90 14 {})">{ylabel}</text>"#,
            SIZE / 2.0,
            SIZE / 2.0
        );
        let _ = writeln!(
            s,
            r#"<rect x="{MARGIN}" y="{MARGIN}" width="{}" height="{}" fill="none" stroke="black"/>"#,
            SIZE - 2.0 * MARGIN,
            SIZE - 2.0 * MARGIN
        );
        s.push_str(&self.body);
        s.push_str("</svg>\n");
        s
    }
}

fn bounds(vals: impl Iterator<Item = f64>) -> (f64, f64) {
    vals.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)))
}

/// Lattice points of `W_{<=n}` with per-colour counts and weight coordinates.
pub fn figure1(n: u32) -> Result<Figure> {
    #[derive(Default)]
    struct Point {
        level: u32,
        counts: BTreeMap<&'static str, u64>,
    }
    let mut points: BTreeMap<(i64, i64), Point> = BTreeMap::new();
    for k in 1..=n {
        for m in enumerate_w(k)?.monomials {
            let d = gr(m);
            let p = points.entry((d.a, d.b)).or_default();
            p.level = k;
            *p.counts.entry(colour(m)).or_default() += 1;
        }
    }
    let mut table = Table::new(&[
        "a",
        "b",
        "level",
        "count",
        "red",
        "green",
        "blue",
        "grey",
        "xi",
        "eta",
        "xi_approx",
        "eta_approx",
    ]);
    for (&(a, b), p) in &points {
        let (xi, eta) = weight_coords(Multidegree::new(a, b));
        let c = |k: &str| p.counts.get(k).copied().unwrap_or(0);
        table.push(vec![
            json!(a),
            json!(b),
            json!(p.level),
            json!(p.counts.values().sum::<u64>()),
            json!(c("red")),
            json!(c("green")),
            json!(c("blue")),
            json!(c("grey")),
            json!(xi.to_string()),
            json!(eta.to_string()),
            json!(xi.to_f64()),
            json!(eta.to_f64()),
        ]);
    }
    let svg = render_figure1(&table, n);
    Ok(Figure { name: "fig1", table, svg })
}

fn render_figure1(t: &Table, n: u32) -> String {
    let (ia, ib, ic) = (col(t, "a"), col(t, "b"), col(t, "count"));
    let (ir, ig, iblue) = (col(t, "red"), col(t, "green"), col(t, "blue"));
    let xs = bounds(t.rows.iter().map(|r| num(&r[ia])));
    let ys = bounds(t.rows.iter().map(|r| num(&r[ib])));
    let mut c = Canvas::new((0.0, xs.1.max(1.0)), (0.0, ys.1.max(1.0)));
    let max = t.rows.iter().map(|r| num(&r[ic])).fold(1.0, f64::max);
    for r in &t.rows {
        let (a, b, count) = (num(&r[ia]), num(&r[ib]), num(&r[ic]));
        let radius = 2.0 + 6.0 * (count / max).sqrt();
        let (red, green, blue) = (num(&r[ir]), num(&r[ig]), num(&r[iblue]));
        let fill = if red > 0.0 {
            "red"
        } else if blue > 0.0 && green == 0.0 {
            "blue"
        } else if green > 0.0 {
            "green"
        } else {
            "grey"
        };
        let ring = if green > 0.0 && blue > 0.0 { r#" stroke="blue" stroke-width="2""# } else { "" };
        c.circle(a, b, radius, fill, ring);
    }
    c.finish(&format!("Lattice points of W up to length {n}"), "a (degree in v1)", "b (degree in v2)")
}

fn rectangle_contains(m: Monomial, n: u32) -> bool {
    let (w, s) = (wt(m), swt(m));
    GoldenInt::lambda_pow(n as i32 - 1) < w
        && w <= GoldenInt::lambda_pow(n as i32)
        && -GoldenInt::LAMBDA < s
        && s < GoldenInt::ONE
}

/// `W_n` in weight coordinates, with the exact rectangle test.
pub fn figure2(n: u32) -> Result<Figure> {
    let mut table = Table::new(&["tail", "pivot", "a", "b", "xi", "eta", "xi_approx", "eta_approx", "inside"]);
    for m in enumerate_w(n)?.monomials {
        let d = gr(m);
        let (w, s) = (wt(m), swt(m));
        table.push(vec![
            json!(m.tail().to_string()),
            json!(m.pivot()),
            json!(d.a),
            json!(d.b),
            json!(w.to_string()),
            json!(s.to_string()),
            json!(w.to_f64()),
            json!(s.to_f64()),
            json!(rectangle_contains(m, n)),
        ]);
    }
    let lo = GoldenInt::lambda_pow(n as i32 - 1).to_f64();
    let hi = GoldenInt::lambda_pow(n as i32).to_f64();
    let (ix, iy) = (col(&table, "xi_approx"), col(&table, "eta_approx"));
    let lambda = GoldenInt::LAMBDA.to_f64();
    let mut c = Canvas::new((lo, hi), (-lambda, 1.0));
    c.rect((lo, hi), (-lambda, 1.0), r#"fill="none" stroke="grey" stroke-dasharray="4 3""#);
    for r in &table.rows {
        c.circle(num(&r[ix]), num(&r[iy]), 1.6, "black", "");
    }
    let svg = c.finish(&format!("W_{n} in its weight rectangle"), "xi", "eta");
    Ok(Figure { name: "fig2", table, svg })
}

/// Every level `W_k`, `k <= n`, rescaled by `λ^{-k}` into one rectangle.
pub fn figure3(n: u32) -> Result<Figure> {
    let mut table = Table::new(&["level", "tail", "pivot", "xi_normalized", "eta"]);
    for k in 1..=n {
        let scale = GoldenInt::lambda_pow(k as i32).to_f64();
        for m in enumerate_w(k)?.monomials {
            table.push(vec![
                json!(k),
                json!(m.tail().to_string()),
                json!(m.pivot()),
                json!(wt(m).to_f64() / scale),
                json!(swt(m).to_f64()),
            ]);
        }
    }
    let lambda = GoldenInt::LAMBDA.to_f64();
    let (il, ix, iy) = (col(&table, "level"), col(&table, "xi_normalized"), col(&table, "eta"));
    let mut c = Canvas::new((1.0 / lambda, 1.0), (-lambda, 1.0));
    c.rect((1.0 / lambda, 1.0), (-lambda, 1.0), r#"fill="none" stroke="grey" stroke-dasharray="4 3""#);
    for r in &table.rows {
        let hue = (num(&r[il]) * 360.0 / n.max(1) as f64) as u32;
        c.circle(num(&r[ix]), num(&r[iy]), 1.4, &format!("hsl({hue},70%,40%)"), "");
    }
    let svg = c.finish(&format!("Levels 1..{n}, normalized"), "xi / lambda^n", "eta");
    Ok(Figure { name: "fig3", table, svg })
}

/// Signed coefficients of the Euler characteristic through total degree `degree`.
pub fn figure4(degree: u32) -> Figure {
    let e = euler_product(degree);
    let mut table = Table::new(&["a", "b", "coefficient", "sign", "area"]);
    for ((a, b), c) in e.iter() {
        let sign = if c.sign() == num_bigint::Sign::Minus { "negative" } else { "positive" };
        table.push(vec![json!(a), json!(b), json!(c.to_string()), json!(sign), json!(c.magnitude().to_string())]);
    }
    let (ia, ib, is, iarea) = (col(&table, "a"), col(&table, "b"), col(&table, "sign"), col(&table, "area"));
    let max = table.rows.iter().map(|r| num(&r[iarea])).fold(1.0, f64::max);
    let mut c = Canvas::new((0.0, degree as f64), (0.0, degree as f64));
    c.line((0.0, degree as f64), (degree as f64, 0.0), r#"stroke="lightgrey""#);
    let cell = (SIZE - 2.0 * MARGIN) / degree.max(1) as f64;
    for r in &table.rows {
        // area proportional to |coefficient| on a logarithmic scale
        let area = (1.0 + num(&r[iarea])).ln() / (1.0 + max).ln();
        let radius = 0.5 * cell * area.sqrt();
        let fill = if r[is] == json!("negative") { "crimson" } else { "royalblue" };
        c.circle(num(&r[ia]), num(&r[ib]), radius.max(0.8), fill, r#" fill-opacity="0.8""#);
    }
    let svg = c.finish(&format!("Euler characteristic coefficients, a+b <= {degree}"), "a", "b");
    Figure { name: "fig4", table, svg }
}
