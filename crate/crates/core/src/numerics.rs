//! Scalar numerics shared by the rest of the crate: bracketed root
//! finding, one-dimensional concave maximization and central differences.
//!
//! Everything here is a pure function of its arguments.

use crate::error::{domain, Error, Result};

/// Tolerances used throughout the crate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ToleranceConfig {
    /// Absolute bracket width at which root finding stops.
    pub root_abs_tol: f64,
    /// Step used when validating analytic derivatives by central differences.
    pub deriv_step: f64,
    /// Minimum distance of any `rho` argument above -1.
    pub rho_floor_offset: f64,
    /// Violation tolerated by the inequality checks.
    pub ineq_slack: f64,
}

impl ToleranceConfig {
    pub const DEFAULT: ToleranceConfig =
        ToleranceConfig { root_abs_tol: 1e-12, deriv_step: 1e-6, rho_floor_offset: 1e-6, ineq_slack: 1e-9 };

    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("root_abs_tol", self.root_abs_tol),
            ("deriv_step", self.deriv_step),
            ("rho_floor_offset", self.rho_floor_offset),
            ("ineq_slack", self.ineq_slack),
        ];
        for (name, v) in fields {
            if !(v > 0.0 && v.is_finite()) {
                return Err(domain(format!("{name} must be strictly positive, got {v}")));
            }
        }
        if self.rho_floor_offset >= 1.0 {
            return Err(domain("rho_floor_offset must be < 1"));
        }
        Ok(())
    }

    /// Smallest admissible `rho`.
    pub fn rho_floor(&self) -> f64 {
        -1.0 + self.rho_floor_offset
    }
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        Self::DEFAULT
    }
}

/// Rejects `rho` below `-1 + rho_floor_offset` (and NaN).
pub fn check_rho(rho: f64) -> Result<()> {
    if rho.is_finite() && rho >= ToleranceConfig::DEFAULT.rho_floor() {
        Ok(())
    } else {
        Err(domain(format!("rho = {rho} must be finite and >= -1 + {}", ToleranceConfig::DEFAULT.rho_floor_offset)))
    }
}

fn check_interval(a: f64, b: f64) -> Result<()> {
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(Error::InvalidInterval { a, b });
    }
    Ok(())
}

/// Returns `Ok(Some(root))` when an endpoint is already a root, `Ok(None)`
/// when `[a, b]` brackets a sign change, and `NoBracket` otherwise.
fn bracket<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Result<(Option<f64>, f64, f64)> {
    check_interval(a, b)?;
    let fa = f(a);
    let fb = f(b);
    if fa.is_nan() || fb.is_nan() {
        return Err(domain(format!("function is NaN at an endpoint of [{a}, {b}]")));
    }
    if fa == 0.0 {
        return Ok((Some(a), fa, fb));
    }
    if fb == 0.0 {
        return Ok((Some(b), fa, fb));
    }
    if fa.signum() == fb.signum() {
        return Err(Error::NoBracket { a, b, fa, fb });
    }
    Ok((None, fa, fb))
}

/// Plain bisection. Stops when the bracket is narrower than `tol` or cannot
/// be split further in floating point.
pub fn bisect<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<f64> {
    let (hit, mut fa, _) = bracket(&f, a, b)?;
    if let Some(r) = hit {
        return Ok(r);
    }
    let (mut lo, mut hi) = (a, b);
    while hi - lo > tol {
        let mid = lo + 0.5 * (hi - lo);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == fa.signum() {
            lo = mid;
            fa = fm;
        } else {
            hi = mid;
        }
    }
    Ok(lo + 0.5 * (hi - lo))
}

/// Bracketed root finding: Brent's method (inverse quadratic / secant steps
/// with a bisection fallback). The iterate never leaves the current bracket.
///
/// Fails with [`Error::InvalidInterval`] when `a >= b` and with
/// [`Error::NoBracket`] when `f(a)` and `f(b)` share a sign.
pub fn find_root<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<f64> {
    let (hit, fa, fb) = bracket(&f, a, b)?;
    if let Some(r) = hit {
        return Ok(r);
    }
    let tol = tol.max(0.0);
    let (mut a, mut b, mut fa, mut fb) = (a, b, fa, fb);
    let (mut c, mut fc) = (a, fa);
    let mut d = b - a;
    let mut e = d;

    for _ in 0..500 {
        if fb.signum() == fc.signum() {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol1 = 2.0 * f64::EPSILON * b.abs() + 0.5 * tol;
        let xm = 0.5 * (c - b);
        if xm.abs() <= tol1 || fb == 0.0 {
            return Ok(b);
        }
        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                let qq = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            }
            p = p.abs();
            let min1 = 3.0 * xm * q - (tol1 * q).abs();
            let min2 = (e * q).abs();
            if 2.0 * p < min1.min(min2) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += if d.abs() > tol1 { d } else { tol1.copysign(xm) };
        fb = f(b);
    }
    Ok(b)
}

const INV_PHI: f64 = 0.618_033_988_749_894_8;

/// Maximizes a unimodal (concave) function on `[a, b]` by golden-section
/// search. The endpoints are compared against the interior optimum, so a
/// boundary maximum is returned exactly.
pub fn maximize_concave<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<(f64, f64)> {
    if !(a <= b) || !a.is_finite() || !b.is_finite() {
        return Err(Error::InvalidInterval { a, b });
    }
    if a == b {
        return Ok((a, f(a)));
    }
    let tol = tol.max(f64::EPSILON);
    let (mut lo, mut hi) = (a, b);
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while hi - lo > tol {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        }
        if x1 >= x2 {
            break;
        }
    }
    let mut best = if f1 >= f2 { (x1, f1) } else { (x2, f2) };
    for x in [a, b] {
        let fx = f(x);
        if fx >= best.1 {
            best = (x, fx);
        }
    }
    Ok(best)
}

/// Symmetric difference quotient `(f(x + h) - f(x - h)) / 2h`.
pub fn central_diff<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> Result<f64> {
    if !(h > 0.0) {
        return Err(domain(format!("step h = {h} must be positive")));
    }
    let hi = f(x + h);
    let lo = f(x - h);
    if !hi.is_finite() || !lo.is_finite() {
        return Err(domain(format!("function undefined at {x} +/- {h}")));
    }
    Ok((hi - lo) / (2.0 * h))
}

/// Natural-log binary entropy, `-p ln p - (1-p) ln(1-p)` with `0 ln 0 = 0`.
pub fn binary_entropy(p: f64) -> f64 {
    -xlnx(p) - xlnx(1.0 - p)
}

/// `x ln x` with the continuous extension `0 ln 0 = 0`.
pub fn xlnx(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        x * x.ln()
    }
}

/// Evenly spaced points covering `[lo, hi]` (both ends included).
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![lo],
        _ => (0..n).map(|i| if i == n - 1 { hi } else { lo + (hi - lo) * i as f64 / (n - 1) as f64 }).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn sqrt_two() {
        let r = find_root(|x| x * x - 2.0, 1.0, 2.0, 1e-12).unwrap();
        assert_abs_diff_eq!(r, std::f64::consts::SQRT_2, epsilon = 1e-12);
        let r = bisect(|x| x * x - 2.0, 1.0, 2.0, 1e-12).unwrap();
        assert_abs_diff_eq!(r, std::f64::consts::SQRT_2, epsilon = 1e-12);
    }

    #[test]
    fn odd_function_root_at_origin() {
        assert_abs_diff_eq!(find_root(|x| x, -1.0, 1.0, 1e-12).unwrap(), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn erasure_inversion() {
        // -ln((1 + eps) / 2) = 0.206853  =>  eps = 2 exp(-0.206853) - 1
        let f = |eps: f64| -((0.5f64) * (1.0 - eps) + eps).ln() - 0.206853;
        let r = find_root(f, 0.0, 1.0, 1e-12).unwrap();
        assert_abs_diff_eq!(r, 0.626278, epsilon = 1e-5);
        assert_abs_diff_eq!(r, 2.0 * (-0.206853f64).exp() - 1.0, epsilon = 1e-11);
    }

    #[test]
    fn root_errors() {
        assert!(matches!(find_root(|x| x * x + 1.0, -1.0, 1.0, 1e-12), Err(Error::NoBracket { .. })));
        assert!(matches!(find_root(|x| x, 1.0, 1.0, 1e-12), Err(Error::InvalidInterval { .. })));
        assert!(matches!(find_root(|x| x, 2.0, 1.0, 1e-12), Err(Error::InvalidInterval { .. })));
        assert!(matches!(bisect(|x| x, 2.0, 1.0, 1e-12), Err(Error::InvalidInterval { .. })));
    }

    #[test]
    fn maximize_examples() {
        let (x, v) = maximize_concave(|x| -(x - 0.3) * (x - 0.3), 0.0, 1.0, 1e-10).unwrap();
        assert_abs_diff_eq!(x, 0.3, epsilon = 1e-8);
        assert_abs_diff_eq!(v, 0.0, epsilon = 1e-15);
        let (x, v) = maximize_concave(|x| x, 0.0, 1.0, 1e-10).unwrap();
        assert_eq!((x, v), (1.0, 1.0));
        assert!(matches!(maximize_concave(|x| x, 1.0, 0.0, 1e-10), Err(Error::InvalidInterval { .. })));
    }

    #[test]
    fn central_diff_examples() {
        assert_abs_diff_eq!(central_diff(f64::sin, 0.0, 1e-6).unwrap(), 1.0, epsilon = 1e-10);
        assert_abs_diff_eq!(central_diff(|x| x * x, 3.0, 1e-4).unwrap(), 6.0, epsilon = 1e-8);
        assert!(central_diff(f64::ln, 0.0, 1e-6).is_err());
        assert!(central_diff(f64::sin, 0.0, 0.0).is_err());
    }

    #[test]
    fn tolerance_config() {
        ToleranceConfig::DEFAULT.validate().unwrap();
        let mut t = ToleranceConfig::DEFAULT;
        t.rho_floor_offset = 1.0;
        assert!(t.validate().is_err());
        t = ToleranceConfig::DEFAULT;
        t.ineq_slack = 0.0;
        assert!(t.validate().is_err());
        assert!(check_rho(-1.0).is_err());
        assert!(check_rho(f64::NAN).is_err());
        assert!(check_rho(-1.0 + 1e-6).is_ok());
    }

    #[test]
    fn entropy_helpers() {
        assert_eq!(binary_entropy(0.0), 0.0);
        assert_eq!(binary_entropy(1.0), 0.0);
        assert_abs_diff_eq!(binary_entropy(0.5), std::f64::consts::LN_2, epsilon = 1e-15);
        assert_eq!(linspace(0.0, 1.0, 3), vec![0.0, 0.5, 1.0]);
    }
}
