use std::f64::consts::{E, PI, TAU};
use std::fmt;

use fracalc_core::{
    apply_expr, beta, check_semigroup, expr_deviation, format, gamma, in_e, k_independence_check,
    nested_integral_oracle, parse, rl_derivative, rl_integral, Func, GenExpr, PowerTerm, Result,
    SignedOrder, TrigBase, TrigTerm,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_SEED: u64 = 1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub passed: usize,
    pub total: usize,
}

impl SuiteResult {
    pub fn ok(&self) -> bool {
        self.passed == self.total
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelfcheckReport {
    pub seed: u64,
    pub suites: Vec<SuiteResult>,
}

impl SelfcheckReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::ok)
    }
}

impl fmt::Display for SelfcheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "seed {}", self.seed)?;
        for s in &self.suites {
            let status = if s.ok() { "pass" } else { "FAIL" };
            writeln!(f, "{:<20} {:>4}/{:<4} {status}", s.name, s.passed, s.total)?;
        }
        let failed = self.suites.iter().filter(|s| !s.ok()).count();
        if failed == 0 {
            write!(f, "all {} suites passed", self.suites.len())
        } else {
            write!(f, "{failed} of {} suites failed", self.suites.len())
        }
    }
}

fn relative_gap(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}

fn run(name: &'static str, cases: impl IntoIterator<Item = bool>) -> SuiteResult {
    let (mut passed, mut total) = (0, 0);
    for ok in cases {
        total += 1;
        passed += usize::from(ok);
    }
    SuiteResult {
        name,
        passed,
        total,
    }
}

fn within(value: Result<f64>, tolerance: f64) -> bool {
    matches!(value, Ok(v) if v <= tolerance)
}

fn random_expr(rng: &mut ChaCha8Rng, min_exponent: f64, with_trig: bool) -> GenExpr {
    let powers = (0..rng.gen_range(1..4))
        .map(|_| {
            PowerTerm::new(rng.gen_range(-10.0..10.0), rng.gen_range(min_exponent..5.0)).unwrap()
        })
        .collect();
    let trig = if with_trig && rng.gen_bool(0.5) {
        let base = if rng.gen_bool(0.5) {
            TrigBase::Sin
        } else {
            TrigBase::Cos
        };
        vec![TrigTerm::new(rng.gen_range(-5.0..5.0), base, rng.gen_range(0.0..TAU)).unwrap()]
    } else {
        Vec::new()
    };
    GenExpr::new(powers, trig)
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

fn power(k: f64) -> Func<impl Fn(f64) -> f64> {
    Func::new(format!("x^{k}"), move |x: f64| x.powf(k))
}

/// Runs every suite with the library gamma.
pub fn selfcheck(seed: u64) -> SelfcheckReport {
    selfcheck_with_gamma(seed, gamma)
}

/// Runs every suite; the gamma and beta identity suites use `gamma_fn`, so
/// a perturbed gamma can be injected.
pub fn selfcheck_with_gamma(seed: u64, gamma_fn: impl Fn(f64) -> Result<f64>) -> SelfcheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut suites = Vec::new();

    let xs: Vec<f64> = (0..200).map(|_| rng.gen_range(0.1..20.0)).collect();
    suites.push(run(
        "gamma-recurrence",
        xs.iter().map(|&x| {
            within(
                (|| Ok(relative_gap(gamma_fn(x + 1.0)?, x * gamma_fn(x)?)))(),
                1e-12,
            )
        }),
    ));

    let pairs: Vec<(f64, f64)> = (0..200)
        .map(|_| (rng.gen_range(0.1..10.0), rng.gen_range(0.1..10.0)))
        .collect();
    suites.push(run(
        "beta-identity",
        pairs.iter().map(|&(p, q)| {
            let gap = (|| {
                Ok(relative_gap(
                    beta(p, q)?,
                    gamma_fn(p)? * gamma_fn(q)? / gamma_fn(p + q)?,
                ))
            })();
            within(gap, 1e-12)
        }),
    ));

    let mut semigroup = Vec::new();
    while semigroup.len() < 200 {
        let expr = random_expr(&mut rng, 0.0, true);
        let (a, b) = (rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
        if clear_of_poles(&expr, a, b) {
            semigroup.push(within(
                check_semigroup(&expr, a, b).map(|r| r.deviation),
                1e-12,
            ));
        }
    }
    suites.push(run("semigroup", semigroup));

    let mut inverse = Vec::new();
    for _ in 0..100 {
        let expr = random_expr(&mut rng, 1e-6, false);
        let s = rng.gen_range(0.01..3.0);
        let round_trip = (|| {
            let up = apply_expr(&expr, SignedOrder::integral(s)?)?;
            let back = apply_expr(&up, SignedOrder::derivative(s)?)?;
            Ok(expr_deviation(&back, &expr))
        })();
        inverse.push(in_e(&expr) && within(round_trip, 1e-12));
    }
    let f = power(2.0);
    let integrated = Func::new("J^0.5 x^2", |y: f64| {
        rl_integral(&f, 0.5, y, 64).unwrap_or(f64::NAN)
    });
    inverse.push(within(
        rl_derivative(&integrated, 0.5, 1.0, 64).map(|d| relative_gap(d.value, 1.0)),
        1e-5,
    ));
    suites.push(run("inverse", inverse));

    let mut k_cases: Vec<(f64, f64)> = [1.0, 2.0, PI]
        .iter()
        .flat_map(|&p| [0.5, 1.5, E].map(|s| (p, s)))
        .collect();
    for _ in 0..6 {
        let s = rng.gen_range(0.2..2.8);
        k_cases.push((rng.gen_range(s + 0.2..4.0), s));
    }
    suites.push(run(
        "k-independence",
        k_cases.iter().map(|&(p, s)| {
            within(
                k_independence_check(&power(p), s, 1.0, 64).map(|r| r.relative_difference),
                1e-5,
            )
        }),
    ));

    let sin = Func::new("sin", f64::sin);
    let (x_pow, x_sq) = (power(1.0), power(2.0));
    let functions: [&dyn fracalc_core::Evaluable; 3] = [&x_pow, &x_sq, &sin];
    let mut oracle = Vec::new();
    for m in [2usize, 3] {
        for f in functions {
            let x = if oracle.len() < 3 {
                1.0
            } else {
                rng.gen_range(0.5..2.0)
            };
            let gap = (|| {
                Ok(relative_gap(
                    nested_integral_oracle(f, m, x, 48)?,
                    rl_integral(f, m as f64, x, 64)?,
                ))
            })();
            oracle.push(within(gap, 1e-8));
        }
    }
    suites.push(run("oracle-equivalence", oracle));

    suites.push(run(
        "parser-round-trip",
        (0..200).map(|_| {
            let expr = random_expr(&mut rng, -0.99, true);
            parse(&format(&expr)).as_ref() == Ok(&expr)
        }),
    ));

    SelfcheckReport { seed, suites }
}
