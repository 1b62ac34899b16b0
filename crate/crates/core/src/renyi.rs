//! Rényi entropies of order `alpha` and the order-`alpha` mutual information
//! of a channel under the uniform input.
//!
//! With `alpha = 1/(1+rho)`, the mutual information of order `alpha` equals
//! `E0(rho) / rho`.

use std::f64::consts::LN_2;

use crate::channel::BinaryChannel;
use crate::error::{domain, Error, Result};

fn check_alpha(alpha: f64) -> Result<()> {
    if !(alpha > 0.0 && alpha.is_finite()) || alpha == 1.0 {
        return Err(domain(format!("Rényi order {alpha} must be positive, finite and != 1")));
    }
    Ok(())
}

/// Joint law of a binary `X` and an output `Y`.
#[derive(Debug, Clone, PartialEq)]
pub struct JointDistribution {
    p0: Vec<f64>,
    p1: Vec<f64>,
}

impl JointDistribution {
    /// Rows `P(0, y)` and `P(1, y)`.
    pub fn new(p0: Vec<f64>, p1: Vec<f64>) -> Result<Self> {
        if p0.len() != p1.len() || p0.is_empty() {
            return Err(Error::InvalidDistribution("joint rows must be non-empty and of equal length".into()));
        }
        if p0.iter().chain(&p1).any(|&p| !(p >= 0.0 && p.is_finite())) {
            return Err(Error::InvalidDistribution("joint entries must be non-negative".into()));
        }
        let total: f64 = p0.iter().chain(&p1).sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidDistribution(format!("joint mass {total} is not 1")));
        }
        Ok(Self { p0, p1 })
    }

    /// `P(x, y) = W(y|x) / 2`.
    pub fn from_channel_uniform(ch: &BinaryChannel) -> Self {
        Self { p0: ch.w0().iter().map(|w| 0.5 * w).collect(), p1: ch.w1().iter().map(|w| 0.5 * w).collect() }
    }

    /// Law of `X`.
    pub fn x_marginal(&self) -> [f64; 2] {
        [self.p0.iter().sum(), self.p1.iter().sum()]
    }
}

/// `H_alpha(P) = alpha/(1-alpha) ln (sum P^alpha)^{1/alpha}`.
pub fn renyi_entropy(alpha: f64, dist: &[f64]) -> Result<f64> {
    check_alpha(alpha)?;
    if dist.is_empty() || dist.iter().any(|&p| !(p >= 0.0 && p.is_finite())) {
        return Err(Error::InvalidDistribution("entries must be non-negative".into()));
    }
    let total: f64 = dist.iter().sum();
    if (total - 1.0).abs() > 1e-12 {
        return Err(Error::InvalidDistribution(format!("mass {total} is not 1")));
    }
    let s: f64 = dist.iter().filter(|&&p| p > 0.0).map(|p| p.powf(alpha)).sum();
    Ok(s.ln() / (1.0 - alpha))
}

/// `H_alpha(X|Y) = alpha/(1-alpha) ln sum_y (sum_x P(x,y)^alpha)^{1/alpha}`.
pub fn renyi_cond_entropy(alpha: f64, joint: &JointDistribution) -> Result<f64> {
    check_alpha(alpha)?;
    let s: f64 = joint
        .p0
        .iter()
        .zip(&joint.p1)
        .map(|(&a, &b)| {
            let inner = if a > 0.0 { a.powf(alpha) } else { 0.0 } + if b > 0.0 { b.powf(alpha) } else { 0.0 };
            inner.powf(1.0 / alpha)
        })
        .sum();
    Ok(alpha / (1.0 - alpha) * s.ln())
}

/// `H_alpha(X) - H_alpha(X|Y)` for uniform `X`.
pub fn order_mutual_info(alpha: f64, ch: &BinaryChannel) -> Result<f64> {
    check_alpha(alpha)?;
    let joint = JointDistribution::from_channel_uniform(ch);
    Ok(LN_2 - renyi_cond_entropy(alpha, &joint)?)
}
