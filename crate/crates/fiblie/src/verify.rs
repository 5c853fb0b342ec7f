//! One-shot verification suites with pass/fail verdicts and timings.
//!
//! Hard checks decide the exit status; soft checks are diagnostics that are
//! reported but never fail a run.

use std::time::Instant;

use fiblie_core::basis::{
    build_w_recursive, enumerate_w, enumerate_w_restricted, enumerate_w_restricted_upto, enumerate_w_upto,
    for_each_standard, square_monomial,
};
use fiblie_core::calculus::{bracket, power_2k, square, DEFAULT_MONOMIAL_CAP};
use fiblie_core::golden::GoldenInt;
use fiblie_core::grading::{
    degree_growth, left_normed_products, local_nilpotency_bound, log_lambda_2, nonuniform_constant, sign_split,
    strip_check, swt, theta, wt, WeightGrowth,
};
use fiblie_core::homology::{paraboloid_report, HomologyTable};
use fiblie_core::nil::{bound_constants_check, nil_index, shift_structure_check, NilReport};
use fiblie_core::presentation::{fibonacci_relations, quotient_dims, relation_shifts_check};
use fiblie_core::series::{
    e_operator, e_operator_exp, enveloping_growth_report, euler_inverse_check, euler_product, hilbert_enumerated,
    hilbert_lie, hilbert_one_var, hilbert_recursive,
};
use fiblie_core::{BasisKind, Element, Monomial};
use num_traits::ToPrimitive;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::expr::LieExpr;
use crate::output::Table;

pub const SUITES: &[&str] = &[
    "basis",
    "relations",
    "laws",
    "nil",
    "hilbert",
    "euler",
    "growth",
    "geometry",
    "homology",
    "presentation",
    "diagnostics",
];

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub suite: &'static str,
    pub name: &'static str,
    /// Hard checks decide the verdict; soft ones are informational.
    pub hard: bool,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
}

struct Recorder {
    suite: &'static str,
    checks: Vec<Check>,
}

impl Recorder {
    fn hard(&mut self, name: &'static str, f: impl FnOnce() -> (bool, String)) {
        self.run(name, true, f);
    }

    fn soft(&mut self, name: &'static str, f: impl FnOnce() -> (bool, String)) {
        self.run(name, false, f);
    }

    fn run(&mut self, name: &'static str, hard: bool, f: impl FnOnce() -> (bool, String)) {
        let start = Instant::now();
        let (passed, detail) = f();
        let millis = start.elapsed().as_millis();
        self.checks.push(Check { suite: self.suite, name, hard, passed, detail, millis });
    }
}

/// Runs one suite, or every suite for `"all"`.
pub fn run(suite: &str, seed: u64) -> Result<Vec<Check>, String> {
    if suite == "all" {
        let mut out = Vec::new();
        for s in SUITES {
            out.extend(run(s, seed)?);
        }
        return Ok(out);
    }
    let name = *SUITES
        .iter()
        .find(|s| **s == suite)
        .ok_or_else(|| format!("unknown suite '{suite}'; expected one of: all, {}", SUITES.join(", ")))?;
    let mut r = Recorder { suite: name, checks: Vec::new() };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match name {
        "basis" => basis(&mut r),
        "relations" => relations(&mut r),
        "laws" => laws(&mut r, &mut rng),
        "nil" => nil(&mut r, &mut rng),
        "hilbert" => hilbert(&mut r),
        "euler" => euler(&mut r),
        "growth" => growth(&mut r, &mut rng),
        "geometry" => geometry(&mut r, &mut rng),
        "homology" => homology(&mut r),
        "presentation" => presentation(&mut r),
        "diagnostics" => diagnostics(&mut r),
        _ => unreachable!(),
    }
    Ok(r.checks)
}

pub fn all_hard_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| !c.hard || c.passed)
}

pub fn table(checks: &[Check]) -> Table {
    let mut t = Table::new(&["suite", "check", "kind", "passed", "millis", "detail"]);
    for c in checks {
        t.push(vec![
            json!(c.suite),
            json!(c.name),
            json!(if c.hard { "hard" } else { "soft" }),
            json!(c.passed),
            json!(c.millis as u64),
            json!(c.detail),
        ]);
    }
    t
}

fn verdict(failures: Vec<String>, ok: String) -> (bool, String) {
    match failures.first() {
        None => (true, ok),
        Some(first) => (false, format!("{} failure(s), first: {first}", failures.len())),
    }
}

fn basis(r: &mut Recorder) {
    r.hard("level sizes n <= 24", || {
        let mut bad = Vec::new();
        for n in 3..=24u32 {
            let w = enumerate_w(n).map(|l| l.monomials.len() as u64);
            let want = 1u64 << (n - 3);
            match w {
                Ok(c) if c == want => {}
                other => bad.push(format!("|W_{n}| = {other:?}, want {want}")),
            }
            let restricted = enumerate_w_restricted(n).map(|l| l.monomials.len() as u64);
            if restricted != Ok(want + 1) {
                bad.push(format!("|W~_{n}| = {restricted:?}, want {}", want + 1));
            }
        }
        verdict(bad, "|W_n| = 2^(n-3) and |W~_n| = |W_n| + 1 for 3 <= n <= 24".into())
    });
    r.hard("recursive construction n <= 20", || {
        let mut bad = Vec::new();
        for n in 3..20u32 {
            match (build_w_recursive(n), enumerate_w(n + 1)) {
                (Ok(a), Ok(b)) if a.monomials == b.monomials => {}
                (a, _) => bad.push(format!("level {}: {:?}", n + 1, a.err())),
            }
        }
        verdict(bad, "[v_(n-1), W_n] u [v_(n-2), W_n] = W_(n+1) for 3 <= n+1 <= 20".into())
    });
}

fn relations(r: &mut Recorder) {
    r.hard("defining relations and shifts k <= 10", || {
        let ok = relation_shifts_check(&fibonacci_relations(), 10);
        (ok, "[v2,v1^3], [v2,v1,v1,v2,v2], [v1,v2^4] and v1^4 vanish, with all shifts k <= 10".into())
    });
    r.hard("relations through the expression parser", || {
        let mut bad = Vec::new();
        for k in 0..=10u32 {
            let (a, b) = (1 + k, 2 + k);
            for src in [
                format!("[v{b}, v{a}^3]"),
                format!("[v{b}, v{a}, v{a}, v{b}, v{b}]"),
                format!("[v{a}, v{b}^4]"),
                format!("v{a}^4"),
            ] {
                match LieExpr::parse(&src).and_then(|e| e.eval(DEFAULT_MONOMIAL_CAP)) {
                    Ok(v) if v.is_zero() => {}
                    other => bad.push(format!("{src} -> {other:?}")),
                }
            }
        }
        verdict(bad, "44 expressions evaluate to 0".into())
    });
}

/// Basis monomials of `W̃_{<=max}`.
fn restricted_pool(max: u32) -> Vec<Monomial> {
    enumerate_w_restricted_upto(max).unwrap().into_iter().flat_map(|l| l.monomials).collect()
}

fn random_element(rng: &mut ChaCha8Rng, pool: &[Monomial], max_terms: usize) -> Element {
    let k = rng.gen_range(1..=max_terms);
    pool.choose_multiple(rng, k).copied().collect()
}

fn laws(r: &mut Recorder, rng: &mut ChaCha8Rng) {
    let pool = restricted_pool(8);
    let trials: Vec<(Element, Element, Element)> = (0..10_000)
        .map(|_| (random_element(rng, &pool, 4), random_element(rng, &pool, 4), random_element(rng, &pool, 4)))
        .collect();
    r.hard("alternation [a,a] = 0", || {
        let bad: Vec<_> =
            trials.iter().filter(|(a, ..)| !bracket(a, a).is_zero()).map(|(a, ..)| a.to_string()).collect();
        verdict(bad, "10000 seeded trials, pivots <= 8".into())
    });
    r.hard("Jacobi identity", || {
        let bad: Vec<_> = trials
            .iter()
            .filter(|(a, b, c)| {
                let mut s = bracket(&bracket(a, b), c);
                s.add_assign(&bracket(&bracket(b, c), a));
                s.add_assign(&bracket(&bracket(c, a), b));
                !s.is_zero()
            })
            .map(|(a, b, c)| format!("{a} | {b} | {c}"))
            .collect();
        verdict(bad, "10000 seeded trials, pivots <= 8".into())
    });
    r.hard("restricted identity [a^2,b] = [a,[a,b]]", || {
        let bad: Vec<_> = trials
            .iter()
            .filter(|(a, b, _)| bracket(&square(a), b) != bracket(a, &bracket(a, b)))
            .map(|(a, b, _)| format!("{a} | {b}"))
            .collect();
        verdict(bad, "10000 seeded trials, pivots <= 8".into())
    });
    r.hard("square of a sum (a+b)^2 = a^2 + b^2 + [a,b]", || {
        let bad: Vec<_> = trials
            .iter()
            .filter(|(a, b, _)| {
                let mut rhs = square(a);
                rhs.add_assign(&square(b));
                rhs.add_assign(&bracket(a, b));
                square(&a.add(b)) != rhs
            })
            .map(|(a, b, _)| format!("{a} | {b}"))
            .collect();
        verdict(bad, "10000 seeded trials, pivots <= 8".into())
    });
}

fn nil_family() -> Vec<Element> {
    let w: Vec<Monomial> = enumerate_w_upto(6).unwrap().into_iter().flat_map(|l| l.monomials).collect();
    let mut out = Vec::new();
    for i in 0..w.len() {
        out.push(Element::from(w[i]));
        for j in i + 1..w.len() {
            out.push([w[i], w[j]].into_iter().collect());
            for k in j + 1..w.len() {
                out.push([w[i], w[j], w[k]].into_iter().collect());
            }
        }
    }
    out
}

fn check_nil(e: &Element) -> Result<NilReport, String> {
    let report = nil_index(e, 64, DEFAULT_MONOMIAL_CAP).map_err(|err| format!("{e}: {err}"))?;
    let at_bound = power_2k(e, report.bound, DEFAULT_MONOMIAL_CAP).map_err(|err| format!("{e}: {err}"))?;
    if !at_bound.is_zero() || !report.within_bound() {
        return Err(format!("{e}: index {} > bound {}", report.index, report.bound));
    }
    Ok(report)
}

fn nil(r: &mut Recorder, rng: &mut ChaCha8Rng) {
    r.hard("exhaustive family: sums of <= 3 monomials, pivots <= 6", || {
        let family = nil_family();
        let bad: Vec<_> = family.iter().filter_map(|e| check_nil(e).err()).collect();
        verdict(bad, format!("{} elements, e^(2^(m-n+2)) = 0 and index <= bound", family.len()))
    });
    let pool = restricted_pool(10);
    let samples: Vec<Element> = (0..500)
        .map(|_| {
            let k = rng.gen_range(4..=8);
            pool.choose_multiple(rng, k).copied().collect()
        })
        .collect();
    r.hard("500 random larger elements, pivots <= 10", || {
        let bad: Vec<_> = samples.iter().filter_map(|e| check_nil(e).err()).collect();
        verdict(bad, "index <= m - n + 2 on every sample".into())
    });
    r.hard("v1 has index exactly 2", || match nil_index(&Element::v(1), 8, DEFAULT_MONOMIAL_CAP) {
        Ok(rep) => (rep.index == 2, format!("index {}", rep.index)),
        Err(e) => (false, e.to_string()),
    });
    r.hard("shape of iterated squares", || {
        let bad: Vec<_> = samples.iter().filter(|e| !shift_structure_check(e, 12)).map(|e| e.to_string()).collect();
        verdict(bad, "pivots of e^(2^k) lie in [n+2k, s+k] on all samples".into())
    });
    r.soft("index estimates with floating constants", || {
        let reports: Vec<_> = samples.iter().filter_map(|e| check_nil(e).ok()).collect();
        (bound_constants_check(&reports), format!("{} reports", reports.len()))
    });
}

fn hilbert(r: &mut Recorder) {
    r.hard("recursion equals enumeration, n <= 20, D = 40", || {
        let mut bad = Vec::new();
        for n in 2..=20 {
            match (hilbert_recursive(n, 40), hilbert_enumerated(n, BasisKind::Lie, 40)) {
                (Ok(a), Ok(b)) if a == b => {}
                (a, b) => bad.push(format!("n = {n}: recursive {:?} / enumerated {:?}", a.err(), b.err())),
            }
        }
        verdict(bad, "coefficient-exact for 2 <= n <= 20".into())
    });
    r.hard("bivariate series specializes to the univariate one", || {
        let two = hilbert_lie(60).specialize();
        let one = hilbert_one_var(BasisKind::Lie, 60).unwrap();
        (two == one, "H(L, t, t) through degree 60".into())
    });
}

fn euler(r: &mut Recorder) {
    r.hard("inversion identity through D = 40", || match euler_inverse_check(40) {
        Ok(()) => (true, "E(L) * E-operator(H(L)) = 1".into()),
        Err((a, b)) => (false, format!("first mismatch at ({a},{b})")),
    });
    r.hard("product and exponential routes agree, D = 24", || {
        let h = hilbert_lie(24);
        let ok = matches!((e_operator(&h), e_operator_exp(&h)), (Ok(a), Ok(b)) if a == b);
        (ok, "E-operator by geometric factors and by exp-log".into())
    });
}

fn sandwich_holds(gamma: u64, x: f64) -> bool {
    let p = x.powf(log_lambda_2());
    p / 8.0 <= gamma as f64 && gamma as f64 <= 1.0 + p / 2.0
}

fn growth(r: &mut Recorder, rng: &mut ChaCha8Rng) {
    let g = match WeightGrowth::new(BasisKind::Lie, 20) {
        Ok(g) => g,
        Err(e) => {
            r.hard("weight growth table", || (false, e.to_string()));
            return;
        }
    };
    r.hard("growth at lambda^n is 1 + 2^(n-2)", || {
        let bad: Vec<_> = (3..=20)
            .filter_map(|n| {
                let c = g.count_at_most(GoldenInt::lambda_pow(n)).ok()?;
                (c != 1 + (1u64 << (n - 2))).then(|| format!("n = {n}: {c}"))
            })
            .collect();
        verdict(bad, "3 <= n <= 20".into())
    });
    let weights: Vec<GoldenInt> = enumerate_w_upto(19).unwrap().into_iter().flat_map(|l| l.monomials).map(wt).collect();
    r.hard("growth sandwich at 1000 thresholds", || {
        let mut bad = Vec::new();
        let top = GoldenInt::lambda_pow(20);
        for i in 0..1000 {
            // alternate exact weights (where the count jumps) and integers
            let x =
                if i % 2 == 0 { *weights.choose(rng).unwrap() } else { GoldenInt::int(rng.gen_range(2..=top.floor())) };
            if x < GoldenInt::LAMBDA {
                continue;
            }
            match g.count_at_most(x) {
                Ok(c) if sandwich_holds(c, x.to_f64()) => {}
                other => bad.push(format!("x = {x}: {other:?}")),
            }
        }
        verdict(bad, "x^t/8 <= growth(x) <= 1 + x^t/2 with t = log_lambda 2, lambda <= x <= lambda^20".into())
    });
    r.hard("s(F_n) = s(F_n + 1) = 2 for 4 <= n <= 20", || {
        let series = match hilbert_one_var(BasisKind::Lie, 6766) {
            Ok(s) => s,
            Err(e) => return (false, e.to_string()),
        };
        let s = degree_growth(&series, 6766).unwrap();
        let bad: Vec<_> = (4..=20)
            .filter_map(|n| {
                let f = fiblie_core::grading::fib(n) as usize;
                let (a, b) = (s[f - 1], s[f]);
                (a != 2 || b != 2).then(|| format!("n = {n}: s({f}) = {a}, s({}) = {b}", f + 1))
            })
            .collect();
        verdict(bad, "Fibonacci convention F_1 = F_2 = 1".into())
    });
    r.hard("two witness sequences of oscillation", || {
        let c = nonuniform_constant();
        let t = log_lambda_2();
        let mut bad = Vec::new();
        if (c - 1.0197).abs() > 1e-3 {
            bad.push(format!("C = {c}"));
        }
        for n in 5..=19 {
            let x = GoldenInt::lambda_pow(n);
            let gx = g.count_at_most(x).unwrap() as f64;
            if (gx - (1.0 + 0.25 * x.to_f64().powf(t))).abs() > 1e-6 * gx {
                bad.push(format!("x({n}): {gx}"));
            }
            let y = GoldenInt::lambda_pow(n) + GoldenInt::lambda_pow(n - 2);
            let gy = g.count_at_most(y).unwrap();
            let floor = 1 + (1u64 << (n - 2)) + (1u64 << (n - 3)) + (1u64 << (n - 5));
            if gy < floor || gy as f64 <= c / 4.0 * y.to_f64().powf(t) {
                bad.push(format!("y({n}): {gy}"));
            }
        }
        verdict(bad, format!("C = {c:.6}; x-sequence hits 1 + x^t/4, y-sequence exceeds (C/4) y^t for 5 <= n <= 19"))
    });
}

fn geometry(r: &mut Recorder, rng: &mut ChaCha8Rng) {
    r.hard("strip -lambda < swt < 1 on W~ up to length 24", || {
        let mut bad = Vec::new();
        let mut count = 0u64;
        for n in 1..=24 {
            for_each_standard(n, |m| {
                count += 1;
                if !strip_check(m) {
                    bad.push(m.to_string());
                }
            })
            .unwrap();
            if n >= 3 {
                count += 1;
                if !strip_check(square_monomial(n)) {
                    bad.push(square_monomial(n).to_string());
                }
            }
        }
        verdict(bad, format!("{count} monomials, exact signs"))
    });
    r.hard("weight rectangles lambda^(n-1) < wt <= lambda^n", || {
        let mut bad = Vec::new();
        for n in 3..=24u32 {
            let (lo, hi) = (GoldenInt::lambda_pow(n as i32 - 1), GoldenInt::lambda_pow(n as i32));
            let mut range: Option<(GoldenInt, GoldenInt)> = None;
            for_each_standard(n, |m| {
                let w = wt(m);
                range = Some(range.map_or((w, w), |(a, b)| (a.min(w), b.max(w))));
            })
            .unwrap();
            let (min, max) = range.unwrap();
            if !(lo < min && max <= hi) {
                bad.push(format!("W_{n}: [{min}, {max}]"));
            }
        }
        verdict(bad, "3 <= n <= 24".into())
    });
    let pool = restricted_pool(9);
    let (plus, minus) = sign_split(&pool).expect("no zero superweights");
    r.hard("plus and minus parts are closed", || {
        let mut bad = Vec::new();
        for part in [&plus, &minus] {
            let sign = swt(part[0]).signum();
            for &a in part.iter() {
                let sq = square(&a.into());
                for b in part.iter().map(|&b| bracket(&a.into(), &b.into())).chain([sq]) {
                    for m in b.iter() {
                        if swt(*m).signum() != sign {
                            bad.push(format!("{a}: {m}"));
                        }
                    }
                }
            }
        }
        verdict(bad, format!("{} plus and {} minus monomials of W~ up to length 9", plus.len(), minus.len()))
    });
    r.hard("sampled subalgebras nilpotent within the bound", || {
        let mut bad = Vec::new();
        let mut tried = 0;
        while tried < 300 {
            let part = if rng.gen_bool(0.5) { &plus } else { &minus };
            let k = rng.gen_range(1..=3).min(part.len());
            let gens: Vec<Monomial> = part.choose_multiple(rng, k).copied().collect();
            let Ok(bound) = local_nilpotency_bound(&gens) else {
                bad.push(format!("{gens:?}: no bound"));
                continue;
            };
            if bound > 8 {
                continue;
            }
            tried += 1;
            if !left_normed_products(&gens, bound).is_empty() {
                bad.push(format!("{gens:?}: products of length {bound} survive"));
            }
        }
        verdict(bad, "300 generator sets with bound <= 8".into())
    });
    r.hard("abelian ideal, lengths <= 8", || {
        let w: Vec<Monomial> = enumerate_w_upto(8).unwrap().into_iter().flat_map(|l| l.monomials).collect();
        let a: Vec<Monomial> = w.iter().copied().filter(|m| m.tail().contains(0)).collect();
        let mut bad = Vec::new();
        for &x in &a {
            for &y in &a {
                if !bracket(&x.into(), &y.into()).is_zero() {
                    bad.push(format!("[{x}, {y}]"));
                }
            }
            for &y in &w {
                if bracket(&x.into(), &y.into()).iter().any(|m| !m.tail().contains(0)) {
                    bad.push(format!("[{x}, {y}] leaves the ideal"));
                }
            }
        }
        verdict(bad, format!("{} monomials with t0 in the tail", a.len()))
    });
}

fn homology(r: &mut Recorder) {
    let start = Instant::now();
    let table = HomologyTable::compute(10);
    let elapsed = start.elapsed().as_millis();
    r.hard("d o d = 0 on every slice a+b <= 10", || {
        (table.d_squared_zero(), format!("{} slices, computed in {elapsed} ms", table.slices.len()))
    });
    r.hard("H_0 and H_1", || {
        let mut bad = Vec::new();
        for (n, a, b, d) in table.entries() {
            let want = match (n, a, b) {
                (0, 0, 0) | (1, 1, 0) | (1, 0, 1) => 1,
                (0 | 1, ..) => 0,
                _ => continue,
            };
            if d != want {
                bad.push(format!("H_{n}({a},{b}) = {d}"));
            }
        }
        for (n, a, b) in [(0, 0, 0), (1, 1, 0), (1, 0, 1)] {
            if table.dim(n, a, b) != 1 {
                bad.push(format!("H_{n}({a},{b}) = {}", table.dim(n, a, b)));
            }
        }
        verdict(bad, "H_0 = 1 at (0,0); H_1 = 1 exactly at (1,0) and (0,1)".into())
    });
    r.hard("Euler characteristic matches the product", || {
        let bad: Vec<_> = table.euler_mismatches(&euler_product(10)).iter().map(|p| format!("{p:?}")).collect();
        verdict(bad, "every (a,b) with a+b <= 10".into())
    });
    r.hard("nonzero H_2 by total degree 5", || {
        let acc = table.accumulation(2);
        (acc[5] > 0, format!("H_2 partial sums {acc:?}"))
    });
    r.hard("H_2 partial sums nondecreasing", || {
        let acc = table.accumulation(2);
        (acc.windows(2).all(|w| w[0] <= w[1]), format!("{acc:?}"))
    });
    r.hard("homology inside its strips", || {
        let bad: Vec<_> = table.strip_violations().iter().map(|p| format!("{p:?}")).collect();
        verdict(bad, "lambda x - lambda^3 n < y < lambda x + lambda^2 n".into())
    });
}

fn presentation(r: &mut Recorder) {
    r.hard("quotient dimensions through degree 7", || {
        let target = hilbert_one_var(BasisKind::Lie, 7).unwrap();
        let rows = quotient_dims(&fibonacci_relations(), 7);
        let bad: Vec<_> = rows
            .iter()
            .filter(|row| target.coeff(row.degree).to_usize() != Some(row.quotient))
            .map(|row| format!("degree {}: {} vs {}", row.degree, row.quotient, target.coeff(row.degree)))
            .collect();
        let dims: Vec<_> = rows.iter().map(|r| r.quotient).collect();
        verdict(bad, format!("quotient dims {dims:?}"))
    });
    r.hard("relations hold in the algebra", || {
        let gens = [Element::v(1), Element::v(2)];
        let ok = fibonacci_relations().iter().all(|rel| rel.evaluate(&gens).is_zero());
        (ok, "x1 -> v1, x2 -> v2".into())
    });
}

/// `ln Π_{n <= D} (1 - t^n)^{s(n)}` and a lower bound on the remaining factors
/// from `s(n) <= 1 + 2 n^{log_λ 2}`.
fn euler_interval(t: f64, s: &[f64]) -> (f64, f64) {
    let d = s.len() - 1;
    let head: f64 = s.iter().enumerate().skip(1).map(|(n, &c)| c * (1.0 - t.powi(n as i32)).ln()).sum();
    let b = |n: f64| 1.0 + 2.0 * n.powf(log_lambda_2());
    // Σ_{n > D} b_n t^n / (1 - t^n): explicit terms, then a ratio-test remainder
    let mut tail = 0.0;
    let mut n = d + 1;
    loop {
        let term = b(n as f64) * t.powi(n as i32) / (1.0 - t.powi(n as i32));
        tail += term;
        let ratio = t * b(n as f64 + 1.0) / b(n as f64);
        if ratio < 0.99 && term < 1e-18 {
            tail += term * ratio / (1.0 - ratio);
            break;
        }
        n += 1;
    }
    (head - tail, head)
}

fn diagnostics(r: &mut Recorder) {
    r.soft("enveloping growth exponent", || match enveloping_growth_report(400) {
        Ok(rep) => {
            let last = rep.rows.iter().rev().find_map(|row| row.theta_hat);
            let witness = rep.witness.map(|w| format!("level {} witness holds: {}", w.level, w.holds));
            (
                true,
                format!(
                    "empirical exponent {:.4} at n = 400 against {:.4}; {}",
                    last.unwrap_or(f64::NAN),
                    theta(),
                    witness.unwrap_or_default()
                ),
            )
        }
        Err(e) => (false, e.to_string()),
    });
    r.soft("envelope of the Euler support", || {
        let e = euler_product(30);
        let fit = paraboloid_report(e.iter().map(|(p, _)| p));
        (
            true,
            format!(
                "|eta| <= {:.4} xi^theta on the support; fitted exponent {:.4} against {:.4}",
                fit.constant,
                fit.exponent.unwrap_or(f64::NAN),
                theta()
            ),
        )
    });
    r.soft("Euler evaluation 0 < E(t) <= exp(-1/(2(1-t)))", || {
        let series = hilbert_one_var(BasisKind::Lie, 2000).unwrap();
        let s: Vec<f64> = series.coeffs().iter().map(|c| c.to_f64().unwrap()).collect();
        let mut parts = Vec::new();
        let mut ok = true;
        for t in [0.5, 0.6, 0.7] {
            let (lo, hi) = euler_interval(t, &s);
            let target = -0.5 / (1.0 - t);
            let state = if hi <= target {
                "holds"
            } else if lo > target {
                ok = false;
                "fails"
            } else {
                "undecided"
            };
            parts.push(format!("t = {t}: ln E in [{lo:.6}, {hi:.6}], bound {target:.6} {state}"));
        }
        (ok, parts.join("; "))
    });
}
