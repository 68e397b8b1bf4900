use alloc::vec::Vec;

use crate::error::{Error, Result};

pub const MAX_NODES: usize = 512;

/// Gauss rule on (0, 1) for the weight `(1 - u)^(s - 1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    order_s: f64,
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn order_s(&self) -> f64 {
        self.order_s
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// `Σ wᵢ f(uᵢ)`.
    pub fn apply<F: FnMut(f64) -> f64>(&self, mut f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&u, &w)| w * f(u))
            .sum()
    }
}

/// Recurrence coefficients of the monic polynomials orthogonal under
/// `(1 - u)^a` on (0, 1): diagonal `a_k` for k < n and off-diagonal `b_k`
/// for 1 ≤ k ≤ n (index 0 unused).
fn shifted_jacobi_recurrence(a: f64, n: usize) -> (Vec<f64>, Vec<f64>) {
    // Jacobi on [-1, 1] with weight (1 - t)^a (1 + t)^0, then u = (1 + t)/2.
    let ab = a;
    let mut diag = Vec::with_capacity(n);
    for k in 0..n {
        let kf = k as f64;
        let t = if k == 0 {
            -a / (ab + 2.0)
        } else {
            -a * a / ((2.0 * kf + ab) * (2.0 * kf + ab + 2.0))
        };
        diag.push(0.5 * (1.0 + t));
    }
    let mut off = alloc::vec![0.0; n + 1];
    for (k, slot) in off.iter_mut().enumerate().skip(1) {
        let kf = k as f64;
        let two_k = 2.0 * kf + ab;
        let b =
            4.0 * kf * (kf + a) * kf * (kf + ab) / (two_k * two_k * (two_k + 1.0) * (two_k - 1.0));
        *slot = 0.25 * b;
    }
    (diag, off)
}

/// Eigenvalues of the symmetric tridiagonal matrix with diagonal `d` and
/// off-diagonal `e` (`e[i]` couples rows i and i+1), by implicit QL with
/// Wilkinson shifts. `d` is overwritten with the eigenvalues, unsorted.
fn tridiagonal_eigenvalues(d: &mut [f64], e: &mut [f64]) -> Result<()> {
    let n = d.len();
    if n == 0 {
        return Ok(());
    }
    e[n - 1] = 0.0;
    for l in 0..n {
        let mut iterations = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = libm::fabs(d[m]) + libm::fabs(d[m + 1]);
                if libm::fabs(e[m]) <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iterations += 1;
            if iterations > 60 {
                return Err(Error::domain(
                    "jacobi_rule",
                    "eigenvalue iteration did not converge",
                ));
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = libm::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + libm::copysign(r, g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = libm::hypot(f, g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}

struct OrthonormalEval {
    /// `Σ_{k<n} p̂ₖ(u)²`
    christoffel_sum: f64,
    value: f64,
    slope: f64,
    curvature: f64,
}

/// `p̂ₙ` and its first two derivatives at `u`, plus the Christoffel sum.
fn orthonormal_at(u: f64, p0: f64, diag: &[f64], sqrt_off: &[f64]) -> OrthonormalEval {
    let (mut prev, mut cur) = (0.0, p0);
    let (mut prev_d, mut cur_d) = (0.0, 0.0);
    let (mut prev_dd, mut cur_dd) = (0.0, 0.0);
    let mut christoffel_sum = 0.0;
    for (k, &a) in diag.iter().enumerate() {
        christoffel_sum += cur * cur;
        let scale = sqrt_off[k + 1];
        let next = ((u - a) * cur - sqrt_off[k] * prev) / scale;
        let next_d = (cur + (u - a) * cur_d - sqrt_off[k] * prev_d) / scale;
        let next_dd = (2.0 * cur_d + (u - a) * cur_dd - sqrt_off[k] * prev_dd) / scale;
        (prev, cur) = (cur, next);
        (prev_d, cur_d) = (cur_d, next_d);
        (prev_dd, cur_dd) = (cur_dd, next_dd);
    }
    OrthonormalEval {
        christoffel_sum,
        value: cur,
        slope: cur_d,
        curvature: cur_dd,
    }
}

/// Gauss–Jacobi rule with `n` nodes for `∫₀¹ (1-u)^(s-1) f(u) du`.
///
/// Nodes are the eigenvalues of the Jacobi matrix built from the
/// three-term recurrence, refined by Newton steps on `p̂ₙ`. Weights come
/// from the Christoffel function `1 / Σₖ p̂ₖ(uᵢ)²` over the orthonormal
/// polynomials, which keeps small weights accurate in the relative sense.
pub fn jacobi_rule(s: f64, n: usize) -> Result<QuadratureRule> {
    if !(s.is_finite() && s > 0.0) {
        return Err(Error::domain("jacobi_rule", "order s must be positive"));
    }
    if n == 0 || n > MAX_NODES {
        return Err(Error::domain(
            "jacobi_rule",
            alloc::format!("node count must be in 1..={MAX_NODES}"),
        ));
    }
    let a = s - 1.0;
    let (diag, off) = shifted_jacobi_recurrence(a, n);
    let sqrt_off: Vec<f64> = off.iter().map(|&b| libm::sqrt(b)).collect();

    let mut nodes = diag.clone();
    let mut e: Vec<f64> = (0..n)
        .map(|i| if i + 1 < n { sqrt_off[i + 1] } else { 0.0 })
        .collect();
    tridiagonal_eigenvalues(&mut nodes, &mut e)?;
    nodes.sort_by(f64::total_cmp);

    let p0 = libm::sqrt(s);
    let mut weights = Vec::with_capacity(n);
    for u in nodes.iter_mut() {
        for _ in 0..3 {
            let eval = orthonormal_at(*u, p0, &diag, &sqrt_off);
            let step = eval.value / eval.slope;
            if !step.is_finite() || libm::fabs(step) <= f64::EPSILON * libm::fabs(*u) {
                break;
            }
            *u -= step;
        }
        // The weight is very sensitive to the node near a singular endpoint,
        // so carry it to first order across the sub-ulp gap to the true root.
        let eval = orthonormal_at(*u, p0, &diag, &sqrt_off);
        let gap = -eval.value / eval.slope;
        weights.push((1.0 - eval.curvature / eval.slope * gap) / eval.christoffel_sum);
    }

    Ok(QuadratureRule {
        order_s: s,
        nodes,
        weights,
    })
}
