//! One line per acceptance criterion; exits non-zero if any fails.

use std::f64::consts::{E, PI, TAU};
use std::process::Command;
use std::time::{Duration, Instant};

use fracalc::verify_constants;
use fracalc_core::{
    apply_expr, beta, check_semigroup, format, frac_coeff, in_e, jacobi_rule, k_independence_check,
    nested_integral_oracle, parse, rl_derivative, rl_integral, Evaluable, Func, GenExpr, PowerTerm,
    SignedOrder, TrigBase, TrigTerm,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn rel(a: f64, b: f64) -> f64 {
    if b == 0.0 {
        a.abs()
    } else {
        (a - b).abs() / b.abs()
    }
}

fn power(k: f64) -> Func<impl Fn(f64) -> f64> {
    Func::new(format!("x^{k}"), move |x: f64| x.powf(k))
}

fn single_term(expr: &GenExpr, coeff: f64, exponent: f64, what: &str) -> Result<(), String> {
    match (expr.power_terms(), expr.trig_terms()) {
        ([t], []) if rel(t.coeff(), coeff) <= 1e-12 && (t.exponent() - exponent).abs() <= 1e-12 => {
            Ok(())
        }
        _ => Err(format!(
            "{what}: got {}, expected {coeff}*x^{exponent}",
            format(expr)
        )),
    }
}

fn apply(expr: &GenExpr, alpha: f64) -> Result<GenExpr, String> {
    apply_expr(expr, SignedOrder::new(alpha).map_err(|e| e.to_string())?).map_err(|e| e.to_string())
}

fn worked_examples() -> Outcome {
    let sqrt_pi = PI.sqrt();
    let p = |t: &str| parse(t).map_err(|e| e.to_string());
    single_term(
        &apply(&p("x^0.5")?, -0.5)?,
        sqrt_pi / 2.0,
        1.0,
        "J^1/2 x^1/2",
    )?;
    single_term(
        &apply(&p("x")?, -0.5)?,
        4.0 / (3.0 * sqrt_pi),
        1.5,
        "J^1/2 x",
    )?;
    let twice = apply(&apply(&p("x^0.5")?, -0.5)?, -0.5)?;
    single_term(&twice, 2.0 / 3.0, 1.5, "J^1/2 J^1/2 x^1/2")?;
    single_term(&apply(&p("x^0.5")?, -1.0)?, 2.0 / 3.0, 1.5, "J^1 x^1/2")?;
    single_term(
        &apply(&p("x^2")?, -1.5)?,
        32.0 / (105.0 * sqrt_pi),
        3.5,
        "J^3/2 x^2",
    )?;
    let x = p("x")?;
    single_term(&apply(&x, 0.5)?, 2.0 / sqrt_pi, 0.5, "D^1/2 x")?;
    single_term(
        &apply(&apply(&x, -0.5)?, 1.0)?,
        2.0 / sqrt_pi,
        0.5,
        "D^1 J^1/2 x",
    )?;
    single_term(
        &apply(&apply(&x, -1.5)?, 2.0)?,
        2.0 / sqrt_pi,
        0.5,
        "D^2 J^3/2 x",
    )?;
    single_term(&apply(&apply(&x, 0.5)?, 0.5)?, 1.0, 0.0, "D^1/2 D^1/2 x")?;
    let coeff = frac_coeff(-0.5, 0.5).map_err(|e| e.to_string())?;
    if coeff != 0.0 || !apply(&p("x^-0.5")?, 0.5)?.is_zero() {
        return Err(format!("D^1/2 x^-1/2 should vanish, coefficient {coeff}"));
    }
    let one = Func::new("1", |_| 1.0);
    let d = rl_derivative(&one, 0.5, 1.0, 64).map_err(|e| e.to_string())?;
    let gap = rel(d.value, 1.0 / sqrt_pi);
    if gap > 1e-5 {
        return Err(format!(
            "numeric D^1/2 1 at x = 1: {} (rel {gap:.1e})",
            d.value
        ));
    }
    Ok(format!(
        "9 closed-form identities at 1e-12, numeric D^1/2 1 rel {gap:.1e}"
    ))
}

fn constants_table() -> Outcome {
    let report = verify_constants().map_err(|e| e.to_string())?;
    let required = [
        "e!",
        "pi!",
        "(pi+e)!",
        "pi!/(pi-e)!",
        "e!/(e-pi)!",
        "pi!/(pi-e)! * e!/(e-pi)!",
        "pi!/(pi+e)!",
    ];
    for name in required {
        let entry = report
            .entries
            .iter()
            .find(|e| e.name == name)
            .ok_or(format!("missing {name}"))?;
        if entry.flagged || entry.matching_significant_digits < 12 {
            return Err(format!(
                "{name}: {} digits",
                entry.matching_significant_digits
            ));
        }
    }
    if !report.passed() {
        return Err(format!(
            "{} unflagged entries below 12 digits",
            report.failures().len()
        ));
    }
    let unflagged: Vec<_> = report.entries.iter().filter(|e| !e.flagged).collect();
    let worst = unflagged
        .iter()
        .map(|e| e.matching_significant_digits)
        .min()
        .unwrap_or(0);
    Ok(format!(
        "{} unflagged entries, worst agreement {worst} digits, {} flagged",
        unflagged.len(),
        report.entries.len() - unflagged.len()
    ))
}

fn clear_of_poles(expr: &GenExpr, a: f64, b: f64) -> bool {
    expr.power_terms().iter().all(|t| {
        let k = t.exponent();
        [k - a, k - b, k - a - b].iter().all(|&e| {
            let z = e + 1.0;
            e > -1.0 + 1e-3 && (z > 0.0 || (z - z.round()).abs() > 1e-3)
        })
    })
}

fn random_expr(rng: &mut ChaCha8Rng) -> GenExpr {
    let powers = (0..rng.gen_range(1..4))
        .map(|_| PowerTerm::new(rng.gen_range(-10.0..10.0), rng.gen_range(0.0..5.0)).unwrap())
        .collect();
    let trig = (0..rng.gen_range(0..2))
        .map(|_| {
            let base = if rng.gen_bool(0.5) {
                TrigBase::Sin
            } else {
                TrigBase::Cos
            };
            TrigTerm::new(rng.gen_range(-5.0..5.0), base, rng.gen_range(0.0..TAU)).unwrap()
        })
        .collect();
    GenExpr::new(powers, trig)
}

fn semigroup() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2014);
    let mut cases = 0;
    let mut worst: f64 = 0.0;
    while cases < 500 {
        let expr = random_expr(&mut rng);
        let (a, b) = (rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
        if !clear_of_poles(&expr, a, b) {
            continue;
        }
        let report =
            check_semigroup(&expr, a, b).map_err(|e| format!("{expr}, a={a}, b={b}: {e}"))?;
        if report.deviation > 1e-12 {
            return Err(format!(
                "{expr}, a={a}, b={b}: deviation {:.1e}",
                report.deviation
            ));
        }
        worst = worst.max(report.deviation);
        cases += 1;
    }
    let mut numeric_worst: f64 = 0.0;
    for (a, b) in [(0.5, 0.5), (1.0, 1.5)] {
        for k in [0.5, 1.0, 2.0] {
            let f = power(k);
            let inner = Func::new("J^a f", |y: f64| {
                rl_integral(&f, a, y, 64).unwrap_or(f64::NAN)
            });
            let composed = rl_integral(&inner, b, 1.0, 64).map_err(|e| e.to_string())?;
            let direct = rl_integral(&f, a + b, 1.0, 64).map_err(|e| e.to_string())?;
            let gap = rel(composed, direct);
            if gap > 1e-7 {
                return Err(format!("numeric J^{b} J^{a} x^{k}: rel {gap:.1e}"));
            }
            numeric_worst = numeric_worst.max(gap);
        }
    }
    Ok(format!(
        "500 symbolic cases, worst {worst:.1e}; numeric worst {numeric_worst:.1e}"
    ))
}

fn oracle_equivalence() -> Outcome {
    let sin = Func::new("sin", f64::sin);
    let (x, x2) = (power(1.0), power(2.0));
    let functions: [&dyn Evaluable; 3] = [&x, &x2, &sin];
    let mut worst: f64 = 0.0;
    for m in [2usize, 3] {
        for f in functions {
            let nested = nested_integral_oracle(f, m, 1.0, 48).map_err(|e| e.to_string())?;
            let kernel = rl_integral(f, m as f64, 1.0, 64).map_err(|e| e.to_string())?;
            let gap = rel(nested, kernel);
            if gap > 1e-8 {
                return Err(format!("m={m} f={}: rel {gap:.1e}", f.label()));
            }
            worst = worst.max(gap);
        }
    }
    Ok(format!("6 cases, worst {worst:.1e}"))
}

fn k_independence() -> Outcome {
    let mut worst: f64 = 0.0;
    for p in [1.0, 2.0, PI] {
        for s in [0.5, 1.5, E] {
            let r = k_independence_check(&power(p), s, 1.0, 64).map_err(|e| e.to_string())?;
            if r.relative_difference > 1e-5 {
                return Err(format!("x^{p}, s={s}: rel {:.1e}", r.relative_difference));
            }
            worst = worst.max(r.relative_difference);
        }
    }
    Ok(format!("9 cases, worst {worst:.1e}"))
}

fn quadrature_exactness() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut moments = 0;
    for s in [0.5, 1.0, 1.5, PI] {
        for n in [4usize, 8, 16, 32] {
            let rule = jacobi_rule(s, n).map_err(|e| e.to_string())?;
            for m in 0..2 * n {
                let exact = beta(m as f64 + 1.0, s).map_err(|e| e.to_string())?;
                let gap = rel(rule.apply(|u| u.powi(m as i32)), exact);
                if gap > 1e-11 {
                    return Err(format!("s={s} n={n} m={m}: rel {gap:.1e}"));
                }
                worst = worst.max(gap);
                moments += 1;
            }
        }
    }
    Ok(format!("{moments} moments, worst {worst:.1e}"))
}

fn failure_modes() -> Outcome {
    let one = parse("1").map_err(|e| e.to_string())?;
    let back = apply(&apply(&one, 1.0)?, -1.0)?;
    if !back.is_zero() {
        return Err(format!("J^1 D^1 1 = {}, expected 0", format(&back)));
    }
    if in_e(&one) {
        return Err("1 reported as a member of E".into());
    }
    Ok("J^1 D^1 1 = 0, 1 not in E".into())
}

fn parser_and_golden() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1993);
    for _ in 0..1000 {
        let mut expr = random_expr(&mut rng);
        if rng.gen_bool(0.3) {
            expr = expr
                .add(&GenExpr::power(rng.gen_range(-1e6..1e6), rng.gen_range(-0.99..0.0)).unwrap());
        }
        let text = format(&expr);
        match parse(&text) {
            Ok(back) if back == expr => {}
            other => return Err(format!("{text} came back as {other:?}")),
        }
    }
    let golden = [
        (
            include_str!("golden/j1_sqrt_x.csv"),
            ["J", "1", "x^0.5", "1:1:1"],
        ),
        (
            include_str!("golden/d1_x_squared.csv"),
            ["D", "1", "x^2", "1:3:3"],
        ),
    ];
    for (expected, [op, order, expr, grid]) in golden {
        let out = Command::new(env!("CARGO_BIN_EXE_fracalc"))
            .args([
                "table", "--op", op, "--order", order, "--expr", expr, "--grid", grid,
            ])
            .output()
            .map_err(|e| e.to_string())?;
        if !out.status.success() || out.stdout != expected.as_bytes() {
            return Err(format!(
                "table {op} {order} {expr} {grid}: {:?}",
                String::from_utf8_lossy(&out.stdout)
            ));
        }
    }
    Ok("1000 round trips, 2 golden CSV files byte-exact".into())
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("worked examples", worked_examples, Duration::from_secs(1)),
        ("constants table", constants_table, Duration::from_secs(1)),
        ("semigroup", semigroup, Duration::from_secs(10)),
        (
            "oracle equivalence",
            oracle_equivalence,
            Duration::from_secs(5),
        ),
        ("k-independence", k_independence, Duration::from_secs(5)),
        (
            "quadrature exactness",
            quadrature_exactness,
            Duration::from_secs(2),
        ),
        ("failure modes", failure_modes, Duration::from_millis(100)),
        (
            "parser round trip and golden CSV",
            parser_and_golden,
            Duration::from_secs(2),
        ),
    ];
    let mut failed = 0;
    for (i, (name, check, budget)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let (status, detail) = match outcome {
            Ok(detail) if elapsed <= budget => ("PASS", detail),
            Ok(detail) => (
                "FAIL",
                format!("{detail}; took {elapsed:.2?}, budget {budget:?}"),
            ),
            Err(why) => ("FAIL", why),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("{status} {}. {name} ({elapsed:.2?}): {detail}", i + 1);
    }
    if failed > 0 {
        println!("{failed} of 8 acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all 8 acceptance criteria passed");
}
