//! Fractional integrals `J^s` and derivatives `D^s` of arbitrary positive real
//! order.
//!
//! * [`special`]: gamma, reciprocal gamma, log-gamma, beta, generalized factorial.
//! * [`symbolic`]: closed-form application to sums of `c·x^k`, `sin` and `cos`.
//! * [`numeric`]: Gauss–Jacobi evaluation of the integral kernel and `D^k J^(k-s)`
//!   derivatives for any sampled function.
//! * [`parser`]: text form of symbolic expressions.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;

pub mod error;
pub mod numeric;
pub mod parser;
pub mod special;
pub mod symbolic;

pub use error::{Error, PoleReport, Result};
pub use numeric::{
    jacobi_rule, k_independence_check, nested_integral_oracle, rl_derivative, rl_integral,
    AccuracyWarning, DerivativeEstimate, Engine, Evaluable, FreshRules, Func, KIndependenceReport,
    QuadratureRule, RuleSource,
};
pub use parser::{format, format_number, parse, ParseError, SourceSpan, TokenKind};
pub use special::{beta, gamma, genfactorial, ln_gamma, rgamma, RealArg};
pub use symbolic::{
    apply_expr, apply_power, apply_trig, check_semigroup, expr_deviation, frac_coeff, in_e,
    GenExpr, PowerTerm, SemigroupReport, SignedOrder, TrigBase, TrigTerm,
};
