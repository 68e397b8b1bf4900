use alloc::vec::Vec;

use crate::error::Result;

/// Fornberg's weights for the `order`-th derivative at `center` from samples
/// at `points`.
pub(crate) fn fd_weights(center: f64, points: &[f64], order: usize) -> Vec<f64> {
    let n = points.len();
    let mut c = alloc::vec![alloc::vec![0.0; order + 1]; n];
    let mut c1 = 1.0;
    let mut c4 = points[0] - center;
    c[0][0] = 1.0;
    for i in 1..n {
        let mn = i.min(order);
        let mut c2 = 1.0;
        let c5 = c4;
        c4 = points[i] - center;
        for j in 0..i {
            let c3 = points[i] - points[j];
            c2 *= c3;
            if j == i - 1 {
                for k in (1..=mn).rev() {
                    c[i][k] = c1 * (k as f64 * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                }
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for k in (1..=mn).rev() {
                c[j][k] = (c4 * c[j][k] - k as f64 * c[j][k - 1]) / c3;
            }
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    c.into_iter().map(|row| row[order]).collect()
}

/// Half-width of the symmetric stencil used for an order-`k` derivative:
/// `2·ceil(k/2) + 3` points in total.
pub(crate) fn stencil_half_width(k: usize) -> usize {
    k.div_ceil(2) + 1
}

/// Step for an order-`k` derivative around `x`.
///
/// The stencils are fourth-order accurate and one Richardson level lifts that
/// to sixth order, so truncation `~h⁶` balances rounding `~ε/hᵏ` at
/// `h ~ ε^(1/(k+6))`.
pub(crate) fn default_step(k: usize, x: f64) -> f64 {
    x.max(1.0) * libm::pow(f64::EPSILON, 1.0 / (k as f64 + 6.0))
}

/// `k`-th derivative of `g` at `x` by central differences with step `h`,
/// refined by one Richardson step against `h/2`.
pub(crate) fn central_derivative<G>(g: &mut G, x: f64, k: usize, h: f64) -> Result<f64>
where
    G: FnMut(f64) -> Result<f64>,
{
    let m = stencil_half_width(k) as i64;
    let offsets: Vec<f64> = (-m..=m).map(|j| j as f64).collect();
    let weights = fd_weights(0.0, &offsets, k);

    let mut estimate = |step: f64| -> Result<f64> {
        let mut acc = 0.0;
        for (&offset, &w) in offsets.iter().zip(&weights) {
            if w != 0.0 {
                acc += w * g(x + offset * step)?;
            }
        }
        Ok(acc / libm::pow(step, k as f64))
    };
    let coarse = estimate(h)?;
    let fine = estimate(0.5 * h)?;
    Ok((16.0 * fine - coarse) / 15.0)
}
