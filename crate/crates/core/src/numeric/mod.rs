//! Quadrature evaluation of `J^s` and `D^s` on arbitrary functions.
//!
//! The integral is taken on the unit interval after substituting `t = u·x`:
//!
//! ```text
//! J^s f(x) = x^s / Γ(s) · ∫₀¹ (1-u)^(s-1) f(u·x) du
//! ```
//!
//! and the kernel `(1-u)^(s-1)` is absorbed into a Gauss–Jacobi weight, so
//! orders below one need no special treatment. Derivatives use
//! `D^s = D^k J^(k-s)` with an integer `k > s`, the outer `D^k` taken by
//! finite differences.
//!
//! The identities this engine is checked against (inverse, semigroup) hold for
//! functions that vanish at the origin. For `f(0) ≠ 0` the results are still
//! the values of the definition, e.g. `D^{1/2} 1 = x^{-1/2}/√π`, but they are
//! not what a classical derivative would suggest.

mod diff;
mod jacobi;
mod legendre;

use alloc::string::String;
use alloc::sync::Arc;

pub use jacobi::{jacobi_rule, QuadratureRule, MAX_NODES};

use crate::error::{Error, Result};
use crate::parser::format;
use crate::special::rgamma;
use crate::symbolic::GenExpr;

/// Orders within this distance of an integer are treated as integers.
pub const INTEGER_ORDER_TOLERANCE: f64 = 1e-12;

/// A real function of `x ≥ 0` that the numeric engine can sample.
pub trait Evaluable {
    fn eval(&self, x: f64) -> f64;

    fn label(&self) -> String {
        String::from("f")
    }
}

impl<T: Evaluable + ?Sized> Evaluable for &T {
    fn eval(&self, x: f64) -> f64 {
        (**self).eval(x)
    }

    fn label(&self) -> String {
        (**self).label()
    }
}

impl Evaluable for GenExpr {
    fn eval(&self, x: f64) -> f64 {
        GenExpr::eval(self, x)
    }

    fn label(&self) -> String {
        format(self)
    }
}

/// A closure with a name attached.
pub struct Func<F> {
    label: String,
    f: F,
}

impl<F: Fn(f64) -> f64> Func<F> {
    pub fn new(label: impl Into<String>, f: F) -> Self {
        Func {
            label: label.into(),
            f,
        }
    }
}

impl<F: Fn(f64) -> f64> Evaluable for Func<F> {
    fn eval(&self, x: f64) -> f64 {
        (self.f)(x)
    }

    fn label(&self) -> String {
        self.label.clone()
    }
}

/// Where the engine gets its quadrature rules from.
pub trait RuleSource {
    fn rule(&self, s: f64, n: usize) -> Result<Arc<QuadratureRule>>;
}

impl<R: RuleSource + ?Sized> RuleSource for &R {
    fn rule(&self, s: f64, n: usize) -> Result<Arc<QuadratureRule>> {
        (**self).rule(s, n)
    }
}

/// Builds every rule on demand.
#[derive(Debug, Clone, Copy, Default)]
pub struct FreshRules;

impl RuleSource for FreshRules {
    fn rule(&self, s: f64, n: usize) -> Result<Arc<QuadratureRule>> {
        jacobi_rule(s, n).map(Arc::new)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AccuracyWarning {
    /// The difference stencil had to be squeezed, or sits within ten steps
    /// of the origin where the integrand may not be smooth.
    StencilNearOrigin { x: f64, step: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct DerivativeEstimate {
    pub value: f64,
    /// Integer order `k` of the outer derivative in `D^k J^(k-s)`.
    pub outer_order: usize,
    pub step: f64,
    pub warning: Option<AccuracyWarning>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct KIndependenceReport {
    pub k_low: usize,
    pub k_high: usize,
    pub value_low: f64,
    pub value_high: f64,
    pub relative_difference: f64,
}

fn check_order(operation: &'static str, s: f64) -> Result<()> {
    if s.is_finite() && s > 0.0 {
        Ok(())
    } else {
        Err(Error::domain(operation, "order must be positive"))
    }
}

fn check_point(operation: &'static str, x: f64) -> Result<()> {
    if x.is_finite() && x > 0.0 {
        Ok(())
    } else {
        Err(Error::domain(
            operation,
            "evaluation point must be positive",
        ))
    }
}

/// `J^s f(x)` on an order-`s` rule.
///
/// Integrands like `u^k` with fractional `k` are not smooth at `u = 0`, which
/// limits Gauss convergence to an algebraic rate. Substituting `u = w⁴` turns
/// `u^k` into `w^(4k+3)` and leaves the kernel in Jacobi form, since
/// `(1 - w⁴)^(s-1) = (1 - w)^(s-1) (1 + w + w² + w³)^(s-1)`.
fn integrate_with<F: Evaluable + ?Sized>(rule: &QuadratureRule, f: &F, x: f64) -> f64 {
    let s = rule.order_s();
    let sum = rule.apply(|w| {
        let w2 = w * w;
        let w3 = w2 * w;
        let stretch = 1.0 + w + w2 + w3;
        4.0 * w3 * libm::pow(stretch, s - 1.0) * f.eval(w2 * w2 * x)
    });
    libm::pow(x, s) * rgamma(s) * sum
}

/// Fractional integral and derivative evaluator over a [`RuleSource`].
#[derive(Debug, Clone, Default)]
pub struct Engine<R = FreshRules> {
    rules: R,
}

impl<R: RuleSource> Engine<R> {
    pub fn new(rules: R) -> Self {
        Engine { rules }
    }

    pub fn rules(&self) -> &R {
        &self.rules
    }

    /// `J^s f(x)` by `n`-node Gauss–Jacobi quadrature.
    pub fn rl_integral<F: Evaluable + ?Sized>(
        &self,
        f: &F,
        s: f64,
        x: f64,
        n: usize,
    ) -> Result<f64> {
        check_order("rl_integral", s)?;
        check_point("rl_integral", x)?;
        let rule = self.rules.rule(s, n)?;
        Ok(integrate_with(&rule, f, x))
    }

    /// `D^s f(x)`, with outer order `floor(s) + 1`. Integer orders skip the
    /// quadrature and difference `f` directly.
    pub fn rl_derivative<F: Evaluable + ?Sized>(
        &self,
        f: &F,
        s: f64,
        x: f64,
        n: usize,
    ) -> Result<DerivativeEstimate> {
        check_order("rl_derivative", s)?;
        check_point("rl_derivative", x)?;
        let nearest = libm::round(s);
        if libm::fabs(s - nearest) <= INTEGER_ORDER_TOLERANCE {
            return self.difference(x, nearest as usize, &mut |y| Ok(f.eval(y)));
        }
        self.rl_derivative_with_k(f, s, x, n, libm::floor(s) as usize + 1)
    }

    /// `D^k J^(k-s) f(x)` for an explicit integer `k > s`.
    pub fn rl_derivative_with_k<F: Evaluable + ?Sized>(
        &self,
        f: &F,
        s: f64,
        x: f64,
        n: usize,
        k: usize,
    ) -> Result<DerivativeEstimate> {
        check_order("rl_derivative", s)?;
        check_point("rl_derivative", x)?;
        let rest = k as f64 - s;
        if rest <= INTEGER_ORDER_TOLERANCE {
            return Err(Error::domain(
                "rl_derivative",
                alloc::format!("outer order {k} must exceed s = {s}"),
            ));
        }
        let rule = self.rules.rule(rest, n)?;
        self.difference(x, k, &mut |y| Ok(integrate_with(&rule, f, y)))
    }

    fn difference<G>(&self, x: f64, k: usize, g: &mut G) -> Result<DerivativeEstimate>
    where
        G: FnMut(f64) -> Result<f64>,
    {
        if k == 0 {
            return Ok(DerivativeEstimate {
                value: g(x)?,
                outer_order: 0,
                step: 0.0,
                warning: None,
            });
        }
        let reach = diff::stencil_half_width(k) as f64;
        let preferred = diff::default_step(k, x);
        // the coarse stencil must stay strictly right of the origin
        let step = preferred.min(x / (reach + 1.0));
        let warning = (step < preferred || x < 10.0 * step)
            .then_some(AccuracyWarning::StencilNearOrigin { x, step });
        let value = diff::central_derivative(g, x, k, step)?;
        Ok(DerivativeEstimate {
            value,
            outer_order: k,
            step,
            warning,
        })
    }

    /// Evaluates `D^s f(x)` with outer orders `floor(s)+1` and `floor(s)+2`.
    pub fn k_independence_check<F: Evaluable + ?Sized>(
        &self,
        f: &F,
        s: f64,
        x: f64,
        n: usize,
    ) -> Result<KIndependenceReport> {
        check_order("k_independence_check", s)?;
        let k_low = libm::floor(s) as usize + 1;
        let k_high = k_low + 1;
        let value_low = self.rl_derivative_with_k(f, s, x, n, k_low)?.value;
        let value_high = self.rl_derivative_with_k(f, s, x, n, k_high)?.value;
        let scale = libm::fabs(value_low).max(libm::fabs(value_high));
        let relative_difference = if scale == 0.0 {
            0.0
        } else {
            libm::fabs(value_low - value_high) / scale
        };
        Ok(KIndependenceReport {
            k_low,
            k_high,
            value_low,
            value_high,
            relative_difference,
        })
    }
}

/// Literal `m`-fold iterated integral `∫₀ˣ∫₀^{t₁}…f`, each level by `n`-point
/// Gauss–Legendre. Shares no code with the kernel-form evaluator.
pub fn nested_integral_oracle<F: Evaluable + ?Sized>(
    f: &F,
    m: usize,
    x: f64,
    n: usize,
) -> Result<f64> {
    if !(1..=3).contains(&m) {
        return Err(Error::domain(
            "nested_integral_oracle",
            "fold count must be 1, 2 or 3",
        ));
    }
    check_point("nested_integral_oracle", x)?;
    if n == 0 || n > MAX_NODES {
        return Err(Error::domain(
            "nested_integral_oracle",
            "node count out of range",
        ));
    }
    let (nodes, weights) = legendre::gauss_legendre(n);

    fn level<F: Evaluable + ?Sized>(
        f: &F,
        depth: usize,
        t: f64,
        nodes: &[f64],
        weights: &[f64],
    ) -> f64 {
        if depth == 0 {
            return f.eval(t);
        }
        t * nodes
            .iter()
            .zip(weights)
            .map(|(&u, &w)| w * level(f, depth - 1, u * t, nodes, weights))
            .sum::<f64>()
    }
    Ok(level(f, m, x, &nodes, &weights))
}

/// [`Engine::rl_integral`] without rule reuse.
pub fn rl_integral<F: Evaluable + ?Sized>(f: &F, s: f64, x: f64, n: usize) -> Result<f64> {
    Engine::<FreshRules>::default().rl_integral(f, s, x, n)
}

/// [`Engine::rl_derivative`] without rule reuse.
pub fn rl_derivative<F: Evaluable + ?Sized>(
    f: &F,
    s: f64,
    x: f64,
    n: usize,
) -> Result<DerivativeEstimate> {
    Engine::<FreshRules>::default().rl_derivative(f, s, x, n)
}

/// [`Engine::k_independence_check`] without rule reuse.
pub fn k_independence_check<F: Evaluable + ?Sized>(
    f: &F,
    s: f64,
    x: f64,
    n: usize,
) -> Result<KIndependenceReport> {
    Engine::<FreshRules>::default().k_independence_check(f, s, x, n)
}
