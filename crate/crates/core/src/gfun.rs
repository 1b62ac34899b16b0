//! The kernel `g(rho, z)` of the Z-representation of E0 and the helper
//! functions built on it.
//!
//! `g(rho, z) = (½(1+z)^{1/(1+rho)} + ½(1-z)^{1/(1+rho)})^{1+rho}` for
//! `rho > -1` and `z in [0, 1]`. It equals 1 at `z = 0` and `2^{-rho}` at
//! `z = 1`, is non-increasing and concave in `z` for `rho >= 0`, and
//! non-decreasing and convex for `rho in (-1, 0]`.
//!
//! `g - 1` is evaluated with `expm1`/`ln_1p`, which keeps quantities such as
//! `E0` and the normalized `h_norm` accurate when `z` or `rho` is small.

use std::f64::consts::LN_2;

use crate::error::{domain, Error, Result};
use crate::numerics::{check_rho, find_root, maximize_concave};

/// Stand-in for `rho -> infinity` in limit computations and root searches.
pub const RHO_CAP: f64 = 200.0;

/// Points of the coarse scan that precedes the golden-section refinement
/// in [`rho_max`].
const RHO_MAX_SCAN: usize = 512;

fn check_z(z: f64) -> Result<()> {
    if (0.0..=1.0).contains(&z) {
        Ok(())
    } else {
        Err(domain(format!("z = {z} must lie in [0, 1]")))
    }
}

/// `A - 1` for the inner average `A = ½(1+z)^a + ½(1-z)^a`.
#[inline]
fn inner_avg_m1(a: f64, z: f64) -> f64 {
    0.5 * ((a * z.ln_1p()).exp_m1() + (a * (-z).ln_1p()).exp_m1())
}

/// `k^a` for `k = (1-z)/(1+z)`, with `0^a = 0`.
#[inline]
fn k_pow(a: f64, z: f64) -> f64 {
    if z == 1.0 {
        0.0
    } else {
        (a * ((1.0 - z) / (1.0 + z)).ln()).exp()
    }
}

/// `ln A`. Near `rho = -1` the exponent `a` is huge and `(1+z)^a`
/// overflows, so `A` is then factored as `(1+z)^a ½(1 + k^a)`.
#[inline]
fn ln_inner(a: f64, z: f64) -> f64 {
    let lp = z.ln_1p();
    if a * lp < 700.0 {
        inner_avg_m1(a, z).ln_1p()
    } else {
        a * lp + (0.5 * (1.0 + k_pow(a, z))).ln()
    }
}

/// `g(rho, z) - 1`, unchecked.
#[inline]
pub(crate) fn gm1_raw(rho: f64, z: f64) -> f64 {
    if rho == 0.0 || z == 0.0 {
        return 0.0;
    }
    let a = 1.0 / (1.0 + rho);
    ((1.0 + rho) * ln_inner(a, z)).exp_m1()
}

#[inline]
pub(crate) fn g_raw(rho: f64, z: f64) -> f64 {
    1.0 + gm1_raw(rho, z)
}

/// `2^{-rho} - 1`.
#[inline]
pub(crate) fn pow2m1(rho: f64) -> f64 {
    (-rho * LN_2).exp_m1()
}

#[inline]
pub(crate) fn g_drho_raw(rho: f64, z: f64) -> f64 {
    if z == 0.0 {
        return 0.0;
    }
    let a = 1.0 / (1.0 + rho);
    let la = ln_inner(a, z);
    let g = ((1.0 + rho) * la).exp();
    // A'/A = -a^2 (ln(1+z) + k^a ln(1-z)) / (1 + k^a)
    let ka = k_pow(a, z);
    let tail = if ka == 0.0 { 0.0 } else { ka * (-z).ln_1p() };
    let dlog = -a * a * (z.ln_1p() + tail) / (1.0 + ka);
    g * (la + (1.0 + rho) * dlog)
}

/// The kernel `g(rho, z)`.
pub fn g(rho: f64, z: f64) -> Result<f64> {
    check_rho(rho)?;
    check_z(z)?;
    Ok(g_raw(rho, z))
}

/// `∂g/∂z`, via `(½)^{1+rho} (1 + k^{1/(1+rho)})^rho (1 - k^{-rho/(1+rho)})`
/// with `k = (1-z)/(1+z)`.
///
/// At `z = 1` the derivative is infinite for `rho > 0` and that point is
/// rejected.
pub fn g_dz(rho: f64, z: f64) -> Result<f64> {
    check_rho(rho)?;
    check_z(z)?;
    if rho == 0.0 {
        return Ok(0.0);
    }
    let k = k_of_z(z)?;
    let a = 1.0 / (1.0 + rho);
    let t = rho * a;
    if k == 0.0 {
        if rho > 0.0 {
            return Err(domain(format!("dg/dz is unbounded at z = 1 for rho = {rho} > 0")));
        }
        return Ok(0.5f64.powf(1.0 + rho));
    }
    let alpha = (1.0 + k.powf(a)).powf(rho);
    // 1 - k^{-t}
    let beta = -(-t * k.ln()).exp_m1();
    Ok(0.5f64.powf(1.0 + rho) * alpha * beta)
}

/// `∂g/∂rho = g (ln A + (1+rho) A'/A)` with `A` the inner average.
pub fn g_drho(rho: f64, z: f64) -> Result<f64> {
    check_rho(rho)?;
    check_z(z)?;
    Ok(g_drho_raw(rho, z))
}

/// Range `[lo, hi]` of `t = g(rho, z)` over `z in [0, 1]`.
pub fn t_range(rho: f64) -> (f64, f64) {
    let end = 2f64.powf(-rho);
    if rho >= 0.0 {
        (end, 1.0)
    } else {
        (1.0, end)
    }
}

/// Inverse of `z -> g(rho, z)` on `[0, 1]`.
pub fn g_inv(rho: f64, t: f64) -> Result<f64> {
    check_rho(rho)?;
    if rho == 0.0 {
        return Err(Error::NotInvertible { rho });
    }
    let (lo, hi) = t_range(rho);
    let slack = 1e-14 * hi;
    if !(t >= lo - slack && t <= hi + slack) {
        return Err(domain(format!("t = {t} outside [{lo}, {hi}] for rho = {rho}")));
    }
    let end = if rho > 0.0 { lo } else { hi };
    if t == 1.0 {
        return Ok(0.0);
    }
    if t == end {
        return Ok(1.0);
    }
    // Solve g - 1 = t - 1; the shifted form keeps precision near z = 0.
    let target = t - 1.0;
    let f = |z: f64| gm1_raw(rho, z) - target;
    let (f0, f1) = (f(0.0), f(1.0));
    if f0.signum() == f1.signum() {
        // t sits within rounding of an endpoint.
        return Ok(if f0.abs() <= f1.abs() { 0.0 } else { 1.0 });
    }
    let z = find_root(f, 0.0, 1.0, 1e-16)?;
    // Brent stops a few ulps short near z = 1, where g has infinite slope
    // for rho > 0; walk to the double with the smallest residual.
    Ok(polish_ulps(f, z))
}

fn polish_ulps(f: impl Fn(f64) -> f64, mut z: f64) -> f64 {
    let mut best = f(z).abs();
    for _ in 0..64 {
        let step = [z.next_down(), z.next_up()]
            .into_iter()
            .filter(|c| (0.0..=1.0).contains(c))
            .map(|c| (c, f(c).abs()))
            .min_by(|a, b| a.1.total_cmp(&b.1));
        match step {
            Some((c, r)) if r < best => {
                z = c;
                best = r;
            }
            _ => break,
        }
    }
    z
}

/// Normalized kernel `(g(rho, z) - 2^{-rho}) / (1 - 2^{-rho})`, in `[0, 1]`.
///
/// For a BSC with tilt `z`, this is the erasure probability of the BEC whose
/// E0 curve meets the BSC's at `rho`.
pub fn h_norm(rho: f64, z: f64) -> Result<f64> {
    check_rho(rho)?;
    check_z(z)?;
    if rho == 0.0 {
        return Err(domain("h_norm is 0/0 at rho = 0"));
    }
    Ok(1.0 - one_minus_h(rho, z))
}

/// `1 - h_norm(rho, z) = (1 - g) / (1 - 2^{-rho})`, unchecked.
pub(crate) fn one_minus_h(rho: f64, z: f64) -> f64 {
    gm1_raw(rho, z) / pow2m1(rho)
}

/// Maximizer of `rho -> h_norm(rho, z)` over `(0, RHO_CAP]`.
///
/// The curve is scanned on a uniform grid and the best cell refined by
/// golden-section search on `1 - h_norm`, which is free of cancellation.
pub fn rho_max(z: f64) -> Result<f64> {
    if !(z > 0.0 && z < 1.0) {
        return Err(domain(format!("rho_max needs z in (0, 1), got {z}")));
    }
    let step = RHO_CAP / RHO_MAX_SCAN as f64;
    let objective = |rho: f64| -one_minus_h(rho, z);
    let (best, _) = (1..=RHO_MAX_SCAN)
        .map(|i| {
            let rho = step * i as f64;
            (i, objective(rho))
        })
        .fold((1, f64::NEG_INFINITY), |acc, (i, v)| if v > acc.1 { (i, v) } else { acc });
    let lo = step * (best as f64 - 1.0).max(1e-3);
    let hi = (step * (best as f64 + 1.0)).min(RHO_CAP);
    let (rho, _) = maximize_concave(objective, lo, hi, 1e-10)?;
    Ok(rho)
}

/// `f_{rho1,rho2}(t) = g(rho2, g^{-1}(rho1, t))`.
pub fn f(rho1: f64, rho2: f64, t: f64) -> Result<f64> {
    check_rho(rho2)?;
    let z = g_inv(rho1, t)?;
    Ok(g_raw(rho2, z))
}

/// `f~_{rho1,rho2}(t) = ∂g/∂rho (rho2, g^{-1}(rho1, t))`.
pub fn f_tilde(rho1: f64, rho2: f64, t: f64) -> Result<f64> {
    check_rho(rho2)?;
    let z = g_inv(rho1, t)?;
    Ok(g_drho_raw(rho2, z))
}

/// The substitution `k = (1 - z) / (1 + z)`.
pub fn k_of_z(z: f64) -> Result<f64> {
    check_z(z)?;
    Ok((1.0 - z) / (1.0 + z))
}

/// Sign function
/// `m(k, rho) = -1 + k - k^{1/(1+rho)} + k^{rho/(1+rho)} - (k^{rho/(1+rho)} + k^{1/(1+rho)}) ln k^{rho/(1+rho)}`.
///
/// Non-positive on `rho in (-1, rho_star(k)]`, non-negative beyond and for
/// `rho < -1`; zero at `rho = 0` and at `k = 1`.
pub fn m_fun(k: f64, rho: f64) -> Result<f64> {
    if !(k > 0.0 && k <= 1.0) {
        return Err(domain(format!("m(k, rho) needs k in (0, 1], got {k}")));
    }
    if rho == -1.0 || !rho.is_finite() {
        return Err(domain(format!("m(k, rho) undefined at rho = {rho}")));
    }
    let t = rho / (1.0 + rho);
    let lk = k.ln();
    // (k - k^{1-t}) + (k^t - 1) - (k^t + k^{1-t}) t ln k
    let k_minus_a = -k * (-t * lk).exp_m1();
    let b_minus_1 = (t * lk).exp_m1();
    let a = ((1.0 - t) * lk).exp();
    let b = (t * lk).exp();
    Ok(k_minus_a + b_minus_1 - (a + b) * t * lk)
}

/// The root `rho*(k) >= 3` of `rho -> m_fun(k, rho)`.
pub fn rho_star(k: f64) -> Result<f64> {
    if !(k > 0.0 && k < 1.0) {
        return Err(domain(format!("rho_star needs k in (0, 1), got {k}")));
    }
    let m = |rho: f64| m_fun(k, rho).unwrap_or(f64::NAN);
    let lo = 3.0 - 1e-3;
    match find_root(m, lo, RHO_CAP, 1e-12) {
        Err(Error::NoBracket { .. }) => find_root(m, lo, 10.0 * RHO_CAP, 1e-12),
        other => other,
    }
}

/// `gamma(k, rho) = (1 + k^{1/(1+rho)}) (k^{rho/(1+rho)} - 1)`.
pub fn gamma_fun(k: f64, rho: f64) -> f64 {
    let lk = k.ln();
    let a = lk / (1.0 + rho);
    (1.0 + a.exp()) * (rho / (1.0 + rho) * lk).exp_m1()
}

/// `F(k, rho) = rho/(1+rho) · (1+k)/k · 1/gamma(k, rho)`; negative and
/// decreasing in `rho` on `(0, 1]`.
#[allow(non_snake_case)]
pub fn F_fun(k: f64, rho: f64) -> Result<f64> {
    if !(k > 0.0 && k < 1.0) {
        return Err(domain(format!("F(k, rho) needs k in (0, 1), got {k}")));
    }
    if !(rho > 0.0 && rho.is_finite()) {
        return Err(domain(format!("F(k, rho) needs rho > 0, got {rho}")));
    }
    Ok(rho / (1.0 + rho) * (1.0 + k) / k / gamma_fun(k, rho))
}

/// `ell(rho, z) = ∂_z ln alpha + ∂_z ln |beta|` with
/// `alpha = (1 + k^{1/(1+rho)})^rho` and `beta = 1 - k^{-rho/(1+rho)}`.
pub fn ell(rho: f64, z: f64) -> Result<f64> {
    check_rho(rho)?;
    if rho == 0.0 {
        return Err(domain("ell is undefined at rho = 0 (beta vanishes)"));
    }
    if !(z > 0.0 && z < 1.0) {
        return Err(domain(format!("ell needs z in (0, 1), got {z}")));
    }
    let k = (1.0 - z) / (1.0 + z);
    let lk = k.ln();
    let a = 1.0 / (1.0 + rho);
    let t = rho * a;
    let ka = (a * lk).exp();
    let d_ln_alpha = rho * a * ka / (k * (1.0 + ka));
    let d_ln_beta = t / (k * (t * lk).exp_m1());
    let dk_dz = -2.0 / ((1.0 + z) * (1.0 + z));
    Ok(dk_dz * (d_ln_alpha + d_ln_beta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::central_diff;
    use approx::assert_abs_diff_eq;

    #[test]
    fn g_endpoints_and_closed_form() {
        for rho in [-0.9, -0.5, 0.0, 0.5, 1.0, 3.0, 10.0] {
            assert_eq!(g(rho, 0.0).unwrap(), 1.0);
            assert_abs_diff_eq!(g(rho, 1.0).unwrap(), 2f64.powf(-rho), epsilon = 1e-14);
        }
        // rho = 1: g = (1 + sqrt(1 - z^2)) / 2
        assert_abs_diff_eq!(g(1.0, 0.6).unwrap(), 0.9, epsilon = 1e-15);
        assert_abs_diff_eq!(g(1.0, 0.7796).unwrap(), 0.813139, epsilon = 1e-6);
        assert!(g(-1.0, 0.5).is_err());
        assert!(g(1.0, 1.5).is_err());
    }

    #[test]
    fn g_dz_examples() {
        for z in [0.0, 0.3, 0.9] {
            assert_eq!(g_dz(0.0, z).unwrap(), 0.0);
        }
        assert_abs_diff_eq!(g_dz(1.0, 0.6).unwrap(), -0.375, epsilon = 1e-14);
        assert!(g_dz(-0.5, 0.5).unwrap() >= 0.0);
        assert!(g_dz(1.0, 1.0).is_err());
        assert_abs_diff_eq!(g_dz(-0.5, 1.0).unwrap(), 0.5f64.powf(0.5), epsilon = 1e-15);
        for (rho, z) in [(2.0, 0.3), (-0.4, 0.7), (0.3, 0.95)] {
            let fd = central_diff(|zz| g_raw(rho, zz), z, 1e-6).unwrap();
            assert_abs_diff_eq!(g_dz(rho, z).unwrap(), fd, epsilon = 1e-8);
        }
    }

    #[test]
    fn g_drho_examples() {
        assert_eq!(g_drho(1.0, 0.0).unwrap(), 0.0);
        assert_abs_diff_eq!(g_drho(1.0, 1.0).unwrap(), -0.5 * LN_2, epsilon = 1e-15);
        let fd = central_diff(|r| g_raw(r, 0.6), 1.0, 1e-6).unwrap();
        assert_abs_diff_eq!(g_drho(1.0, 0.6).unwrap(), fd, epsilon = 1e-6);
    }

    #[test]
    fn g_inv_examples() {
        for rho in [0.5, 1.0, 4.0] {
            assert_eq!(g_inv(rho, 1.0).unwrap(), 0.0);
            assert_eq!(g_inv(rho, 2f64.powf(-rho)).unwrap(), 1.0);
        }
        assert_abs_diff_eq!(g_inv(1.0, 0.9).unwrap(), 0.6, epsilon = 1e-10);
        assert_abs_diff_eq!(g_inv(1.0, 0.75).unwrap(), 0.75f64.sqrt(), epsilon = 1e-12);
        assert!(matches!(g_inv(0.0, 1.0), Err(Error::NotInvertible { .. })));
        assert!(g_inv(1.0, 0.4).is_err());
        assert!(g_inv(-0.5, 0.9).is_err());
    }

    #[test]
    fn h_norm_examples() {
        for rho in [-0.5, 0.5, 1.0, 7.0] {
            assert_abs_diff_eq!(h_norm(rho, 1.0).unwrap(), 0.0, epsilon = 1e-14);
            assert_eq!(h_norm(rho, 0.0).unwrap(), 1.0);
        }
        // (0.813139 - 0.5) / 0.5
        assert_abs_diff_eq!(h_norm(1.0, 0.7796).unwrap(), 0.626278, epsilon = 1e-5);
        assert!(h_norm(0.0, 0.5).is_err());
    }

    #[test]
    fn rho_max_examples() {
        let r = rho_max(0.7796).unwrap();
        assert!(r >= 3.0);
        assert_abs_diff_eq!(h_norm(r, 0.7796).unwrap(), 0.6777, epsilon = 5e-4);
        for z in [0.1, 0.3, 0.5, 0.9] {
            assert!(rho_max(z).unwrap() >= 3.0 - 1e-6, "z = {z}");
        }
        assert_abs_diff_eq!(h_norm(40.0, 0.5).unwrap(), h_norm(1.0, 0.5).unwrap(), epsilon = 1e-2);
        assert!(rho_max(0.0).is_err());
        assert!(rho_max(1.0).is_err());
    }

    #[test]
    fn rho_max_is_a_maximum() {
        for z in [0.01, 0.2, 0.7796, 0.99] {
            let r = rho_max(z).unwrap();
            let hm = h_norm(r, z).unwrap();
            for probe in [0.5, 1.0, 2.0, r - 0.05, r + 0.05, 10.0, 50.0] {
                assert!(h_norm(probe, z).unwrap() <= hm + 1e-14, "z = {z}, probe = {probe}");
            }
        }
    }

    #[test]
    fn f_examples() {
        for t in [0.6, 0.8, 0.95] {
            assert_abs_diff_eq!(f(1.0, 1.0, t).unwrap(), t, epsilon = 1e-12);
        }
        assert_eq!(f(1.0, 2.0, 1.0).unwrap(), 1.0);
        // g(2, 0.6) = ((½)1.6^{1/3} + (½)0.4^{1/3})^3
        let expected = (0.5 * 1.6f64.cbrt() + 0.5 * 0.4f64.cbrt()).powi(3);
        assert_abs_diff_eq!(expected, 0.866086, epsilon = 1e-6);
        assert_abs_diff_eq!(f(1.0, 2.0, 0.9).unwrap(), expected, epsilon = 1e-10);
    }

    #[test]
    fn f_tilde_examples() {
        assert_eq!(f_tilde(1.0, 2.0, 1.0).unwrap(), 0.0);
        assert_abs_diff_eq!(f_tilde(1.0, 1.0, 0.5).unwrap(), -0.5 * LN_2, epsilon = 1e-12);
        let n = 40;
        let h = 0.5 / n as f64;
        for i in 1..n {
            let t = 0.5 + h * i as f64;
            let d2 = f_tilde(1.0, 1.0, t - h).unwrap() - 2.0 * f_tilde(1.0, 1.0, t).unwrap()
                + f_tilde(1.0, 1.0, t + h).unwrap();
            assert!(d2 <= 1e-9, "t = {t}: {d2}");
        }
    }

    #[test]
    fn k_of_z_examples() {
        assert_eq!(k_of_z(0.0).unwrap(), 1.0);
        assert_eq!(k_of_z(1.0).unwrap(), 0.0);
        assert_abs_diff_eq!(k_of_z(1.0 / 3.0).unwrap(), 0.5, epsilon = 1e-15);
    }

    #[test]
    fn m_fun_examples() {
        for k in [0.01, 0.25, 0.7, 1.0] {
            assert_eq!(m_fun(k, 0.0).unwrap(), 0.0);
        }
        for rho in [-0.5, 0.5, 3.0, 50.0, -3.0] {
            assert_eq!(m_fun(1.0, rho).unwrap(), 0.0);
        }
        // -0.75 - ln(0.5)
        assert_abs_diff_eq!(m_fun(0.25, 1.0).unwrap(), -0.75 - 0.5f64.ln(), epsilon = 1e-15);
        assert_abs_diff_eq!(m_fun(0.25, 1.0).unwrap(), -0.056853, epsilon = 1e-6);
        // independent high-precision evaluation: -7.62979e-4
        assert_abs_diff_eq!(m_fun(0.25, 3.0).unwrap(), -7.629792e-4, epsilon = 1e-9);
        assert!(m_fun(0.0, 1.0).is_err());
        assert!(m_fun(0.5, -1.0).is_err());
    }

    #[test]
    fn rho_star_examples() {
        let r = rho_star(0.25).unwrap();
        assert!(r > 3.0 && r < 3.2, "{r}");
        assert_abs_diff_eq!(r, 3.0240009, epsilon = 1e-6);
        assert_abs_diff_eq!(m_fun(0.5, rho_star(0.5).unwrap()).unwrap(), 0.0, epsilon = 1e-10);
        let k: f64 = 0.25;
        let limit = -2.0 + 2.0 * k - (k + 1.0) * k.ln();
        assert_abs_diff_eq!(limit, 0.23286795, epsilon = 1e-7);
        assert_abs_diff_eq!(m_fun(k, 500.0).unwrap(), limit, epsilon = 1e-2);
        assert!(rho_star(1.0).is_err());
    }

    #[test]
    #[allow(non_snake_case)]
    fn F_fun_examples() {
        assert_abs_diff_eq!(F_fun(0.25, 1.0).unwrap(), -10.0 / 3.0, epsilon = 1e-12);
        // rho -> 0+: gamma ~ (1+k) rho ln k, so F -> 1 / (k ln k)
        let k: f64 = 0.25;
        assert_abs_diff_eq!(F_fun(k, 1e-6).unwrap(), 1.0 / (k * k.ln()), epsilon = 1e-5);
        let (a, b, c) = (F_fun(k, 1.0).unwrap(), F_fun(k, 0.5).unwrap(), F_fun(k, 0.01).unwrap());
        assert!(a < b && b < c);
        assert!(F_fun(k, 0.0).is_err());
        assert!(F_fun(1.0, 0.5).is_err());
    }

    #[test]
    fn ell_examples() {
        assert_abs_diff_eq!(ell(1.0, 0.5).unwrap(), 1.0 / (0.5 - 0.125), epsilon = 1e-12);
        assert!(ell(2.0, 0.5).unwrap() >= ell(1.0, 0.5).unwrap());
        assert!(ell(-0.5, 0.5).unwrap() <= ell(1.0, 0.5).unwrap());
        for z in [0.1, 0.4, 0.9] {
            assert_abs_diff_eq!(ell(1.0, z).unwrap(), 1.0 / (z - z * z * z), epsilon = 1e-9);
            assert_abs_diff_eq!(ell(RHO_CAP, z).unwrap(), 1.0 / (z - z * z * z), epsilon = 2e-2 / (z - z * z * z));
        }
        assert!(ell(0.0, 0.5).is_err());
        assert!(ell(1.0, 0.0).is_err());
    }

    #[test]
    fn ell_matches_log_derivative_of_g_dz() {
        // ell = ∂_z ln |g_dz| since the (½)^{1+rho} prefactor is z-free
        for (rho, z) in [(0.5, 0.3), (2.0, 0.6), (-0.5, 0.4)] {
            let fd = central_diff(|zz| g_dz(rho, zz).unwrap().abs().ln(), z, 1e-6).unwrap();
            assert_abs_diff_eq!(ell(rho, z).unwrap(), fd, epsilon = 1e-6);
        }
    }

    #[test]
    fn near_the_rho_floor() {
        // high-precision reference values
        for (rho, z, gv, dv) in [
            (-0.999999, 0.5, 1.4999989602795896, -1.039720050160647),
            (-0.9999, 0.999, 1.998861444680623, -1.3855051747103528),
            (-0.99, 0.3, 1.2910202440681467, -0.8948670422216484),
        ] {
            assert_abs_diff_eq!(g(rho, z).unwrap(), gv, epsilon = 1e-12);
            assert_abs_diff_eq!(g_drho(rho, z).unwrap(), dv, epsilon = 1e-9);
        }
    }
}
