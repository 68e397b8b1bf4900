use std::fmt;
use std::str::FromStr;

use fracalc_core::{
    apply_expr, format, format_number, parse, AccuracyWarning, Engine, GenExpr, RuleSource,
    SignedOrder,
};

use crate::failure::Failure;
use crate::table::EvalTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    /// Fractional derivative `D^s`.
    D,
    /// Fractional integral `J^s`.
    J,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EngineKind {
    #[default]
    Closed,
    Numeric,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EvalRequest {
    pub op: Op,
    pub order: f64,
    pub expr: String,
    pub at: Option<f64>,
    pub engine: EngineKind,
    pub nodes: usize,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct EvalOutput {
    pub text: String,
    pub warnings: Vec<String>,
}

impl EvalRequest {
    fn signed_order(&self) -> Result<SignedOrder, Failure> {
        if !(self.order.is_finite() && self.order >= 0.0) {
            return Err(Failure::Domain(format!(
                "order must be a finite real >= 0, got {}",
                self.order
            )));
        }
        let order = match self.op {
            Op::D => SignedOrder::derivative(self.order),
            Op::J => SignedOrder::integral(self.order),
        };
        Ok(order?)
    }
}

/// `start:stop:steps`, with `steps` the number of evenly spaced points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub start: f64,
    pub stop: f64,
    pub steps: usize,
}

impl FromStr for Grid {
    type Err = Failure;

    fn from_str(text: &str) -> Result<Self, Failure> {
        let usage = || {
            Failure::Usage(format!(
                "grid must look like <start>:<stop>:<steps>, got `{text}`"
            ))
        };
        let mut parts = text.split(':');
        let (Some(start), Some(stop), Some(steps), None) =
            (parts.next(), parts.next(), parts.next(), parts.next())
        else {
            return Err(usage());
        };
        let start: f64 = start.trim().parse().map_err(|_| usage())?;
        let stop: f64 = stop.trim().parse().map_err(|_| usage())?;
        let steps: usize = steps.trim().parse().map_err(|_| usage())?;
        Grid::new(start, stop, steps)
    }
}

impl Grid {
    pub fn new(start: f64, stop: f64, steps: usize) -> Result<Self, Failure> {
        if !(start.is_finite() && stop.is_finite() && start > 0.0) {
            return Err(Failure::Domain(
                "grid start must be a finite real > 0".into(),
            ));
        }
        if steps == 0 {
            return Err(Failure::Domain("grid needs at least one step".into()));
        }
        if steps == 1 && start != stop {
            return Err(Failure::Domain(
                "a one-step grid needs start == stop".into(),
            ));
        }
        if steps > 1 && start >= stop {
            return Err(Failure::Domain("grid start must be below stop".into()));
        }
        Ok(Grid { start, stop, steps })
    }

    pub fn points(&self) -> Vec<f64> {
        if self.steps == 1 {
            return vec![self.start];
        }
        let last = (self.steps - 1) as f64;
        (0..self.steps)
            .map(|i| {
                if i + 1 == self.steps {
                    self.stop
                } else {
                    self.start + (self.stop - self.start) * (i as f64 / last)
                }
            })
            .collect()
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:{}:{}",
            format_number(self.start),
            format_number(self.stop),
            self.steps
        )
    }
}

fn describe(warning: &AccuracyWarning) -> String {
    match warning {
        AccuracyWarning::StencilNearOrigin { x, step } => format!(
            "warning: difference stencil at x = {} crowds the origin (step {}); accuracy may suffer",
            format_number(*x),
            format_number(*step)
        ),
    }
}

fn numeric_value<R: RuleSource>(
    engine: &Engine<R>,
    expr: &GenExpr,
    req: &EvalRequest,
    x: f64,
    warnings: &mut Vec<String>,
) -> Result<f64, Failure> {
    if !(x.is_finite() && x > 0.0) {
        return Err(Failure::Domain(format!(
            "numeric evaluation point must be > 0, got {}",
            format_number(x)
        )));
    }
    if req.order == 0.0 {
        return Ok(expr.eval(x));
    }
    match req.op {
        Op::J => Ok(engine.rl_integral(expr, req.order, x, req.nodes)?),
        Op::D => {
            let estimate = engine.rl_derivative(expr, req.order, x, req.nodes)?;
            if let Some(w) = &estimate.warning {
                warnings.push(describe(w));
            }
            Ok(estimate.value)
        }
    }
}

fn trig_note(expr: &GenExpr) -> Option<String> {
    expr.has_trig().then(|| {
        "note: the numeric engine integrates from 0, while closed-form trig terms use the phase-shift rule; \
         the two differ on sin/cos"
            .to_string()
    })
}

/// `eval`: closed form prints the transformed expression (and its value at
/// `at`), numeric prints the value at `at`.
pub fn eval<R: RuleSource>(req: &EvalRequest, engine: &Engine<R>) -> Result<EvalOutput, Failure> {
    let order = req.signed_order()?;
    let expr = parse(&req.expr)?;
    let mut out = EvalOutput::default();
    match req.engine {
        EngineKind::Closed => {
            let result = apply_expr(&expr, order)?;
            out.text = format(&result);
            if let Some(x) = req.at {
                if !(x.is_finite() && x >= 0.0) {
                    return Err(Failure::Domain(format!(
                        "evaluation point must be >= 0, got {x}"
                    )));
                }
                out.text.push('\n');
                out.text.push_str(&format_number(result.eval(x)));
            }
        }
        EngineKind::Numeric => {
            let x = req
                .at
                .ok_or_else(|| Failure::Usage("the numeric engine needs --at <x>".into()))?;
            out.warnings.extend(trig_note(&expr));
            out.text = format_number(numeric_value(engine, &expr, req, x, &mut out.warnings)?);
        }
    }
    Ok(out)
}

/// `table`: evaluates the operator at every grid point.
pub fn table<R: RuleSource>(
    req: &EvalRequest,
    grid: &Grid,
    engine: &Engine<R>,
) -> Result<(EvalTable, Vec<String>), Failure> {
    let order = req.signed_order()?;
    let expr = parse(&req.expr)?;
    let points = grid.points();
    let mut warnings = Vec::new();
    let rows = match req.engine {
        EngineKind::Closed => {
            let result = apply_expr(&expr, order)?;
            points.iter().map(|&x| (x, result.eval(x))).collect()
        }
        EngineKind::Numeric => {
            warnings.extend(trig_note(&expr));
            let mut rows = Vec::with_capacity(points.len());
            for &x in &points {
                rows.push((x, numeric_value(engine, &expr, req, x, &mut warnings)?));
            }
            rows
        }
    };
    warnings.dedup();
    Ok((EvalTable::new(rows)?, warnings))
}
