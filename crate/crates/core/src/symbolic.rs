//! Closed-form fractional calculus on generalized polynomials and sin/cos.
//!
//! Integrals and derivatives share one parameter: a [`SignedOrder`] `alpha`
//! stands for `D^alpha`, with negative orders meaning the integral
//! `J^{-alpha}`. A power term transforms as
//!
//! ```text
//! D^alpha (c x^k) = c Γ(k+1)/Γ(k-alpha+1) x^(k-alpha)
//! ```
//!
//! and a trig term picks up a phase shift of `alpha·π/2`.
//!
//! Compositions are written in application order: `apply_expr(apply_expr(f, a), b)`
//! is `D^b D^a f`.
//!
//! The phase-shift rule for sin/cos is the lower-limit −∞ convention. It does
//! not match the lower-limit-0 integral that [`crate::numeric`] evaluates:
//! `∫₀ˣ sin t dt = 1 − cos x` whereas the rule gives `−cos x`. The two engines
//! therefore answer different questions on trig input.

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::f64::consts::{FRAC_PI_2, TAU};

use crate::error::{Error, Result};
use crate::special::{genfactorial, is_pole, ln_gamma, rgamma};

/// Exponents closer than this are the same exponent.
pub const EXPONENT_TOLERANCE: f64 = 1e-12;

/// Operator order: `D^alpha` for `alpha > 0`, `J^{-alpha}` for `alpha < 0`,
/// the identity for `alpha = 0`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct SignedOrder(f64);

impl SignedOrder {
    pub fn new(alpha: f64) -> Result<Self> {
        if alpha.is_finite() {
            Ok(SignedOrder(alpha))
        } else {
            Err(Error::domain("order", "order must be finite"))
        }
    }

    /// `D^s`.
    pub fn derivative(s: f64) -> Result<Self> {
        Self::new(s)
    }

    /// `J^s`, i.e. `D^{-s}`.
    pub fn integral(s: f64) -> Result<Self> {
        Self::new(-s)
    }

    pub const fn identity() -> Self {
        SignedOrder(0.0)
    }

    pub fn alpha(self) -> f64 {
        self.0
    }

    pub fn is_identity(self) -> bool {
        self.0 == 0.0
    }
}

/// `coeff · x^exponent` with `exponent > -1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerTerm {
    coeff: f64,
    exponent: f64,
}

impl PowerTerm {
    pub fn new(coeff: f64, exponent: f64) -> Result<Self> {
        if !coeff.is_finite() {
            return Err(Error::domain("power term", "coefficient must be finite"));
        }
        if !exponent.is_finite() || exponent <= -1.0 + EXPONENT_TOLERANCE {
            return Err(Error::domain(
                "power term",
                alloc::format!("exponent {exponent} must exceed -1"),
            ));
        }
        Ok(PowerTerm { coeff, exponent })
    }

    pub fn coeff(&self) -> f64 {
        self.coeff
    }

    pub fn exponent(&self) -> f64 {
        self.exponent
    }

    pub fn eval(&self, x: f64) -> f64 {
        if self.exponent == 0.0 {
            return self.coeff;
        }
        self.coeff * libm::pow(x, self.exponent)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TrigBase {
    Sin,
    Cos,
}

impl TrigBase {
    pub fn name(self) -> &'static str {
        match self {
            TrigBase::Sin => "sin",
            TrigBase::Cos => "cos",
        }
    }

    fn apply(self, arg: f64) -> f64 {
        match self {
            TrigBase::Sin => libm::sin(arg),
            TrigBase::Cos => libm::cos(arg),
        }
    }
}

/// `coeff · base(x + phase)`, phase in radians reduced to `[0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrigTerm {
    coeff: f64,
    base: TrigBase,
    phase: f64,
}

pub(crate) fn reduce_phase(phase: f64) -> f64 {
    let reduced = crate::special::rem_euclid(phase, TAU);
    if reduced >= TAU {
        0.0
    } else {
        reduced
    }
}

impl TrigTerm {
    pub fn new(coeff: f64, base: TrigBase, phase: f64) -> Result<Self> {
        if !coeff.is_finite() || !phase.is_finite() {
            return Err(Error::domain(
                "trig term",
                "coefficient and phase must be finite",
            ));
        }
        Ok(TrigTerm {
            coeff,
            base,
            phase: reduce_phase(phase),
        })
    }

    pub fn coeff(&self) -> f64 {
        self.coeff
    }

    pub fn base(&self) -> TrigBase {
        self.base
    }

    pub fn phase(&self) -> f64 {
        self.phase
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeff * self.base.apply(x + self.phase)
    }
}

/// A finite sum of power and trig terms, kept in canonical form: power terms
/// sorted by exponent with near-equal exponents merged, trig terms sorted by
/// base then phase, zero coefficients dropped.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct GenExpr {
    power_terms: Vec<PowerTerm>,
    trig_terms: Vec<TrigTerm>,
}

impl GenExpr {
    pub fn new(power_terms: Vec<PowerTerm>, trig_terms: Vec<TrigTerm>) -> Self {
        GenExpr {
            power_terms: normalize_powers(power_terms),
            trig_terms: normalize_trig(trig_terms),
        }
    }

    pub fn zero() -> Self {
        GenExpr::default()
    }

    pub fn power(coeff: f64, exponent: f64) -> Result<Self> {
        Ok(GenExpr::new(
            alloc::vec![PowerTerm::new(coeff, exponent)?],
            Vec::new(),
        ))
    }

    pub fn trig(coeff: f64, base: TrigBase, phase: f64) -> Result<Self> {
        Ok(GenExpr::new(
            Vec::new(),
            alloc::vec![TrigTerm::new(coeff, base, phase)?],
        ))
    }

    pub fn is_zero(&self) -> bool {
        self.power_terms.is_empty() && self.trig_terms.is_empty()
    }

    pub fn power_terms(&self) -> &[PowerTerm] {
        &self.power_terms
    }

    pub fn trig_terms(&self) -> &[TrigTerm] {
        &self.trig_terms
    }

    pub fn has_trig(&self) -> bool {
        !self.trig_terms.is_empty()
    }

    pub fn eval(&self, x: f64) -> f64 {
        let powers: f64 = self.power_terms.iter().map(|t| t.eval(x)).sum();
        let trig: f64 = self.trig_terms.iter().map(|t| t.eval(x)).sum();
        powers + trig
    }

    /// Sum of two expressions.
    pub fn add(&self, other: &GenExpr) -> GenExpr {
        let mut powers = self.power_terms.clone();
        powers.extend_from_slice(&other.power_terms);
        let mut trig = self.trig_terms.clone();
        trig.extend_from_slice(&other.trig_terms);
        GenExpr::new(powers, trig)
    }
}

fn normalize_powers(mut terms: Vec<PowerTerm>) -> Vec<PowerTerm> {
    terms.retain(|t| t.coeff != 0.0);
    terms.sort_by(|a, b| a.exponent.total_cmp(&b.exponent));
    let mut merged: Vec<PowerTerm> = Vec::with_capacity(terms.len());
    let mut group_start = f64::NAN;
    for term in terms {
        match merged.last_mut() {
            Some(last) if term.exponent - group_start <= EXPONENT_TOLERANCE => {
                last.coeff += term.coeff;
            }
            _ => {
                group_start = term.exponent;
                merged.push(term);
            }
        }
    }
    merged.retain(|t| t.coeff != 0.0);
    merged
}

fn normalize_trig(mut terms: Vec<TrigTerm>) -> Vec<TrigTerm> {
    terms.retain(|t| t.coeff != 0.0);
    terms.sort_by(|a, b| match a.base.cmp(&b.base) {
        Ordering::Equal => a.phase.total_cmp(&b.phase),
        other => other,
    });
    let mut merged: Vec<TrigTerm> = Vec::with_capacity(terms.len());
    let mut group_start = f64::NAN;
    for term in terms {
        match merged.last_mut() {
            Some(last)
                if last.base == term.base && term.phase - group_start <= EXPONENT_TOLERANCE =>
            {
                last.coeff += term.coeff;
            }
            _ => {
                group_start = term.phase;
                merged.push(term);
            }
        }
    }
    merged.retain(|t| t.coeff != 0.0);
    merged
}

/// Coefficient `Γ(p+1)/Γ(p-alpha+1)` picked up by `x^p` under `D^alpha`.
///
/// Exactly zero when `p - alpha + 1` is a gamma pole.
pub fn frac_coeff(p: f64, alpha: f64) -> Result<f64> {
    if !p.is_finite() || !alpha.is_finite() {
        return Err(Error::domain("frac_coeff", "arguments must be finite"));
    }
    if p <= -1.0 {
        return Err(Error::domain(
            "frac_coeff",
            alloc::format!("exponent {p} must exceed -1"),
        ));
    }
    if alpha == 0.0 {
        return Ok(1.0);
    }
    let top = p + 1.0;
    let bottom = p - alpha + 1.0;
    if is_pole(bottom) {
        return Ok(0.0);
    }
    if bottom > 0.0 && top.max(bottom) > 170.0 {
        return Ok(libm::exp(ln_gamma(top)? - ln_gamma(bottom)?));
    }
    Ok(genfactorial(p)? * rgamma(bottom))
}

/// Applies `D^alpha` to one power term.
///
/// `Ok(None)` means the coefficient vanished at a gamma pole (for instance
/// `D^1` of a constant, or `D^{1/2} x^{-1/2}`); the term drops out of the sum.
pub fn apply_power(term: &PowerTerm, order: SignedOrder) -> Result<Option<PowerTerm>> {
    let alpha = order.alpha();
    if alpha == 0.0 {
        return Ok(Some(*term));
    }
    let factor = frac_coeff(term.exponent, alpha)?;
    if factor == 0.0 {
        return Ok(None);
    }
    PowerTerm::new(term.coeff * factor, term.exponent - alpha).map(Some)
}

/// Applies `D^alpha` to a trig term by rotating its phase `alpha·π/2`.
pub fn apply_trig(term: &TrigTerm, order: SignedOrder) -> TrigTerm {
    if order.is_identity() {
        return *term;
    }
    TrigTerm {
        coeff: term.coeff,
        base: term.base,
        phase: reduce_phase(term.phase + order.alpha() * FRAC_PI_2),
    }
}

/// Applies `D^alpha` term by term.
pub fn apply_expr(expr: &GenExpr, order: SignedOrder) -> Result<GenExpr> {
    apply_tracked(expr, order, false)
}

fn apply_tracked(expr: &GenExpr, order: SignedOrder, reject_poles: bool) -> Result<GenExpr> {
    let mut powers = Vec::with_capacity(expr.power_terms.len());
    for term in &expr.power_terms {
        let annotate = |source: Error| Error::Term {
            term: crate::parser::format_power(term),
            source: Box::new(source),
        };
        match apply_power(term, order).map_err(annotate)? {
            Some(next) => powers.push(next),
            None if reject_poles => {
                let location = libm::round(term.exponent - order.alpha() + 1.0);
                return Err(annotate(Error::pole(location, "frac_coeff")));
            }
            None => {}
        }
    }
    let trig = expr
        .trig_terms
        .iter()
        .map(|t| apply_trig(t, order))
        .collect();
    Ok(GenExpr::new(powers, trig))
}

/// Whether the expression vanishes at the origin, the condition under which
/// the inverse and semigroup laws hold.
pub fn in_e(expr: &GenExpr) -> bool {
    let powers_vanish = expr.power_terms.iter().all(|t| t.exponent > 0.0);
    let trig_vanishes = expr
        .trig_terms
        .iter()
        .all(|t| libm::fabs(t.base.apply(t.phase)) <= EXPONENT_TOLERANCE);
    powers_vanish && trig_vanishes
}

/// Outcome of comparing `D^b D^a`, `D^a D^b` and `D^{a+b}` on one expression.
#[derive(Debug, Clone, PartialEq)]
pub struct SemigroupReport {
    pub a_then_b: GenExpr,
    pub b_then_a: GenExpr,
    pub combined: GenExpr,
    /// Largest relative coefficient difference, or absolute exponent/phase
    /// difference, across the three results. Infinite if their term
    /// structure differs.
    pub deviation: f64,
}

pub fn check_semigroup(expr: &GenExpr, a: f64, b: f64) -> Result<SemigroupReport> {
    let first = SignedOrder::new(a)?;
    let second = SignedOrder::new(b)?;
    let sum = SignedOrder::new(a + b)?;

    let compose = |which: &'static str, orders: &[SignedOrder]| -> Result<GenExpr> {
        let mut current = expr.clone();
        for &order in orders {
            current =
                apply_tracked(&current, order, true).map_err(|source| Error::Composition {
                    which,
                    source: Box::new(source),
                })?;
        }
        Ok(current)
    };

    let a_then_b = compose("a then b", &[first, second])?;
    let b_then_a = compose("b then a", &[second, first])?;
    let combined = compose("a+b", &[sum])?;
    let deviation = expr_deviation(&a_then_b, &combined)
        .max(expr_deviation(&b_then_a, &combined))
        .max(expr_deviation(&a_then_b, &b_then_a));
    Ok(SemigroupReport {
        a_then_b,
        b_then_a,
        combined,
        deviation,
    })
}

fn relative_gap(x: f64, y: f64) -> f64 {
    let scale = libm::fabs(x).max(libm::fabs(y));
    if scale == 0.0 {
        0.0
    } else {
        libm::fabs(x - y) / scale
    }
}

fn phase_gap(x: f64, y: f64) -> f64 {
    let d = libm::fabs(x - y) % TAU;
    d.min(TAU - d)
}

/// Term-wise distance between two canonical expressions; see
/// [`SemigroupReport::deviation`].
pub fn expr_deviation(x: &GenExpr, y: &GenExpr) -> f64 {
    if x.power_terms.len() != y.power_terms.len() || x.trig_terms.len() != y.trig_terms.len() {
        return f64::INFINITY;
    }
    let powers = x
        .power_terms
        .iter()
        .zip(&y.power_terms)
        .map(|(p, q)| relative_gap(p.coeff, q.coeff).max(libm::fabs(p.exponent - q.exponent)));
    let trig = x.trig_terms.iter().zip(&y.trig_terms).map(|(p, q)| {
        if p.base != q.base {
            f64::INFINITY
        } else {
            relative_gap(p.coeff, q.coeff).max(phase_gap(p.phase, q.phase))
        }
    });
    powers.chain(trig).fold(0.0, f64::max)
}

impl core::fmt::Display for SignedOrder {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.0 < 0.0 {
            write!(f, "J^{}", -self.0)
        } else {
            write!(f, "D^{}", self.0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use core::f64::consts::{E, PI};

    fn sqrt_pi() -> f64 {
        libm::sqrt(PI)
    }

    fn j(s: f64) -> SignedOrder {
        SignedOrder::integral(s).unwrap()
    }

    fn d(s: f64) -> SignedOrder {
        SignedOrder::derivative(s).unwrap()
    }

    #[test]
    fn frac_coeff_examples() {
        assert_relative_eq!(
            frac_coeff(0.5, -0.5).unwrap(),
            sqrt_pi() / 2.0,
            max_relative = 1e-14
        );
        assert_relative_eq!(
            frac_coeff(1.0, 0.5).unwrap(),
            2.0 / sqrt_pi(),
            max_relative = 1e-14
        );
        assert_eq!(frac_coeff(-0.5, 0.5).unwrap(), 0.0);
        assert_eq!(frac_coeff(3.0, 0.0).unwrap(), 1.0);
        assert!(frac_coeff(-1.0, 0.5).is_err());
        assert!(frac_coeff(-2.5, 0.5).is_err());
    }

    #[test]
    fn frac_coeff_large_arguments_use_logs() {
        // Γ(201)/Γ(200.5) ≈ sqrt(200.25) to leading order
        let c = frac_coeff(200.0, 0.5).unwrap();
        assert!(c.is_finite());
        assert_relative_eq!(c, 14.150_977_211_994_375, max_relative = 1e-11);
    }

    #[test]
    fn apply_power_examples() {
        let x2 = PowerTerm::new(1.0, 2.0).unwrap();
        let r = apply_power(&x2, j(1.5)).unwrap().unwrap();
        assert_relative_eq!(r.coeff(), 32.0 / (105.0 * sqrt_pi()), max_relative = 1e-12);
        assert_eq!(r.exponent(), 3.5);

        let x1 = PowerTerm::new(1.0, 1.0).unwrap();
        let r = apply_power(&x1, j(0.5)).unwrap().unwrap();
        assert_relative_eq!(r.coeff(), 4.0 / (3.0 * sqrt_pi()), max_relative = 1e-12);
        assert_eq!(r.exponent(), 1.5);

        // e!/(e+π)! from high-precision reference values
        let xe = PowerTerm::new(1.0, E).unwrap();
        let r = apply_power(&xe, j(PI)).unwrap().unwrap();
        assert_relative_eq!(
            r.coeff(),
            4.260_820_476_357_003 / 554.654_105_737_269_4,
            max_relative = 1e-12
        );
        assert_relative_eq!(r.exponent(), E + PI, max_relative = 1e-15);

        let t = PowerTerm::new(-3.25, 0.75).unwrap();
        assert_eq!(apply_power(&t, SignedOrder::identity()).unwrap(), Some(t));
    }

    #[test]
    fn apply_power_domain_and_pole() {
        let root = PowerTerm::new(1.0, 0.5).unwrap();
        assert!(matches!(
            apply_power(&root, d(1.7)),
            Err(Error::Domain { .. })
        ));
        let inv_root = PowerTerm::new(1.0, -0.5).unwrap();
        assert_eq!(apply_power(&inv_root, d(0.5)).unwrap(), None);
        let one = PowerTerm::new(1.0, 0.0).unwrap();
        assert_eq!(apply_power(&one, d(1.0)).unwrap(), None);
        assert!(PowerTerm::new(1.0, -1.0).is_err());
        assert!(PowerTerm::new(f64::NAN, 1.0).is_err());
    }

    #[test]
    fn apply_trig_examples() {
        let sin = TrigTerm::new(1.0, TrigBase::Sin, 0.0).unwrap();
        assert_eq!(apply_trig(&sin, d(1.0)).phase(), FRAC_PI_2);
        let shifted = apply_trig(&sin, d(PI));
        assert_relative_eq!(shifted.phase(), PI * PI / 2.0, max_relative = 1e-15);
        assert_eq!(shifted.base(), TrigBase::Sin);
        let back = apply_trig(&shifted, d(-PI));
        assert!(phase_gap(back.phase(), 0.0) < 1e-15);
        // D^4 is a full turn
        let full = apply_trig(&sin, d(4.0));
        assert!(phase_gap(full.phase(), 0.0) < 1e-15);
    }

    #[test]
    fn apply_expr_examples() {
        let root = GenExpr::power(1.0, 0.5).unwrap();
        let once = apply_expr(&root, j(0.5)).unwrap();
        let twice = apply_expr(&once, j(0.5)).unwrap();
        assert_eq!(twice.power_terms().len(), 1);
        assert_relative_eq!(
            twice.power_terms()[0].coeff(),
            2.0 / 3.0,
            max_relative = 1e-12
        );
        assert_eq!(twice.power_terms()[0].exponent(), 1.5);

        let x = GenExpr::power(1.0, 1.0).unwrap();
        let half = apply_expr(&x, d(0.5)).unwrap();
        let full = apply_expr(&half, d(0.5)).unwrap();
        assert_eq!(full.power_terms().len(), 1);
        assert_relative_eq!(full.power_terms()[0].coeff(), 1.0, max_relative = 1e-12);
        assert_eq!(full.power_terms()[0].exponent(), 0.0);

        assert!(apply_expr(&GenExpr::zero(), d(0.3)).unwrap().is_zero());
    }

    #[test]
    fn apply_expr_names_failing_term() {
        let expr = GenExpr::new(
            alloc::vec![
                PowerTerm::new(2.0, 3.0).unwrap(),
                PowerTerm::new(1.0, 0.25).unwrap()
            ],
            Vec::new(),
        );
        match apply_expr(&expr, d(1.5)) {
            Err(Error::Term { term, .. }) => assert_eq!(term, "x^0.25"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn normalization_merges_sorts_and_drops() {
        let expr = GenExpr::new(
            alloc::vec![
                PowerTerm::new(1.0, 2.0).unwrap(),
                PowerTerm::new(3.0, 0.5).unwrap(),
                PowerTerm::new(-1.0, 2.0 + 5e-13).unwrap(),
                PowerTerm::new(0.0, 1.0).unwrap(),
            ],
            alloc::vec![
                TrigTerm::new(1.0, TrigBase::Sin, 1.0).unwrap(),
                TrigTerm::new(2.0, TrigBase::Cos, 0.0).unwrap(),
                TrigTerm::new(1.0, TrigBase::Sin, 0.0).unwrap(),
            ],
        );
        assert_eq!(expr.power_terms(), &[PowerTerm::new(3.0, 0.5).unwrap()]);
        let bases: Vec<_> = expr
            .trig_terms()
            .iter()
            .map(|t| (t.base(), t.phase()))
            .collect();
        assert_eq!(
            bases,
            [
                (TrigBase::Sin, 0.0),
                (TrigBase::Sin, 1.0),
                (TrigBase::Cos, 0.0)
            ]
        );
    }

    #[test]
    fn membership_in_e() {
        assert!(in_e(&GenExpr::power(1.0, 0.5).unwrap()));
        assert!(!in_e(&GenExpr::power(1.0, 0.0).unwrap()));
        assert!(!in_e(&GenExpr::trig(1.0, TrigBase::Cos, 0.0).unwrap()));
        assert!(in_e(&GenExpr::trig(1.0, TrigBase::Sin, PI).unwrap()));
        assert!(in_e(&GenExpr::trig(1.0, TrigBase::Cos, FRAC_PI_2).unwrap()));
        assert!(!in_e(&GenExpr::power(1.0, -0.5).unwrap()));
        assert!(in_e(&GenExpr::zero()));
    }

    #[test]
    fn semigroup_examples() {
        let root = GenExpr::power(1.0, 0.5).unwrap();
        let report = check_semigroup(&root, -0.5, -0.5).unwrap();
        assert!(report.deviation <= 1e-12);
        assert_relative_eq!(
            report.combined.power_terms()[0].coeff(),
            2.0 / 3.0,
            max_relative = 1e-12
        );

        let sq = GenExpr::power(1.0, 2.0).unwrap();
        let report = check_semigroup(&sq, -E, -PI).unwrap();
        assert!(report.deviation <= 1e-12, "{}", report.deviation);

        let mixed = GenExpr::power(1.0, 2.0)
            .unwrap()
            .add(&GenExpr::trig(-2.0, TrigBase::Cos, 0.3).unwrap());
        assert_eq!(check_semigroup(&mixed, 0.0, 0.0).unwrap().deviation, 0.0);
    }

    #[test]
    fn semigroup_reports_pole_crossing() {
        // D^{1.5} annihilates x^{0.5}; J^1 afterwards cannot bring it back.
        let root = GenExpr::power(1.0, 0.5).unwrap();
        match check_semigroup(&root, 1.5, -1.0) {
            Err(Error::Composition { which, .. }) => assert_eq!(which, "a then b"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn left_inverse_fails_on_constants() {
        let one = GenExpr::power(1.0, 0.0).unwrap();
        let there = apply_expr(&one, d(1.0)).unwrap();
        let back = apply_expr(&there, j(1.0)).unwrap();
        assert!(back.is_zero());
        assert_ne!(back, one);
        assert!(!in_e(&one));
    }

    #[test]
    fn pole_breaks_half_derivative_composition() {
        // D^{1/2} D^{1/2} x^{-1/2} = 0, but D^1 x^{-1/2} = -x^{-3/2}/2
        assert_eq!(frac_coeff(-0.5, 0.5).unwrap(), 0.0);
        assert_relative_eq!(frac_coeff(-0.5, 1.0).unwrap(), -0.5, max_relative = 1e-14);
    }

    #[test]
    fn ratio_of_cross_integrals_is_factorial_ratio() {
        let ratio = frac_coeff(E, -PI).unwrap() / frac_coeff(PI, -E).unwrap();
        let expected = genfactorial(E).unwrap() / genfactorial(PI).unwrap();
        assert_relative_eq!(ratio, expected, max_relative = 1e-12);
        assert_relative_eq!(ratio, 0.592_761_747_048_502_9, max_relative = 1e-12);
    }
}
