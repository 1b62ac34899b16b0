//! The erasure and symmetric families, matching a channel with one member of
//! each at a given `rho`, and the intersections of their `E0` curves.

use std::f64::consts::LN_2;
use std::fmt;

use serde::Serialize;

use crate::channel::{capacity, e0_z, z_representation, BinaryChannel};
use crate::error::{domain, Error, Result};
use crate::gfun::{g_inv, gm1_raw, h_norm, pow2m1, rho_max};
use crate::numerics::{binary_entropy, check_rho, find_root, linspace, ToleranceConfig};

/// A binary erasure channel.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BecParams {
    epsilon: f64,
}

impl BecParams {
    pub fn new(epsilon: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&epsilon) {
            return Err(domain(format!("erasure probability {epsilon} outside [0, 1]")));
        }
        Ok(Self { epsilon })
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }
}

/// A binary symmetric channel with crossover `x in [0, ½]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BscParams {
    x: f64,
}

impl BscParams {
    pub fn new(x: f64) -> Result<Self> {
        if !(0.0..=0.5).contains(&x) {
            return Err(domain(format!("crossover probability {x} outside [0, 0.5]")));
        }
        Ok(Self { x })
    }

    /// Tilt `1 - 2x` of the output.
    pub fn from_z(z: f64) -> Result<Self> {
        Self::new(0.5 * (1.0 - z))
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn z(&self) -> f64 {
        1.0 - 2.0 * self.x
    }
}

fn check_eps(eps: f64) -> Result<()> {
    BecParams::new(eps).map(|_| ())
}

fn check_x(x: f64) -> Result<()> {
    BscParams::new(x).map(|_| ())
}

/// `-ln(2^{-rho}(1 - eps) + eps)`.
pub fn e0_bec(rho: f64, eps: f64) -> Result<f64> {
    check_rho(rho)?;
    check_eps(eps)?;
    Ok(-((1.0 - eps) * pow2m1(rho)).ln_1p())
}

/// `2^{-rho}(1 - eps) ln 2 / (2^{-rho}(1 - eps) + eps)`.
pub fn r_bec(rho: f64, eps: f64) -> Result<f64> {
    check_rho(rho)?;
    check_eps(eps)?;
    let u = 2f64.powf(-rho) * (1.0 - eps);
    Ok(u * LN_2 / (u + eps))
}

/// `rho ln 2 - (1 + rho) ln(x^{1/(1+rho)} + (1-x)^{1/(1+rho)})`.
pub fn e0_bsc(rho: f64, x: f64) -> Result<f64> {
    check_rho(rho)?;
    check_x(x)?;
    if x == 0.0 {
        return Ok(rho * LN_2);
    }
    // ln(x^a + (1-x)^a) = a ln(1-x) + ln(1 + (x/(1-x))^a)
    let a = 1.0 / (1.0 + rho);
    let ratio = (a * (x / (1.0 - x)).ln()).exp();
    Ok(rho * LN_2 - (-x).ln_1p() - (1.0 + rho) * ratio.ln_1p())
}

/// `ln 2 - H(delta)` with `delta = x^a / (x^a + (1-x)^a)`, `a = 1/(1+rho)`.
pub fn r_bsc(rho: f64, x: f64) -> Result<f64> {
    check_rho(rho)?;
    check_x(x)?;
    if x == 0.0 {
        return Ok(LN_2);
    }
    let a = 1.0 / (1.0 + rho);
    let ratio = (a * (x / (1.0 - x)).ln()).exp();
    Ok(LN_2 - binary_entropy(ratio / (1.0 + ratio)))
}

/// `[[1-eps, eps, 0], [0, eps, 1-eps]]`.
pub fn bec_matrix(eps: f64) -> Result<BinaryChannel> {
    check_eps(eps)?;
    BinaryChannel::new(vec![1.0 - eps, eps, 0.0], vec![0.0, eps, 1.0 - eps])
}

/// `[[1-x, x], [x, 1-x]]`.
pub fn bsc_matrix(x: f64) -> Result<BinaryChannel> {
    check_x(x)?;
    BinaryChannel::new(vec![1.0 - x, x], vec![x, 1.0 - x])
}

/// The erasure and symmetric channels sharing `E0(rho0)` with a given channel
/// (or its capacity when `rho0 = 0`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MatchedPair {
    pub rho0: f64,
    pub bec: BecParams,
    pub bsc: BscParams,
}

/// Gap allowed between the matched `E0` values and the channel's.
pub const MATCH_CHECK_TOL: f64 = 1e-9;

/// Builds the BEC and BSC whose `E0` at `rho0` equals that of `ch`.
pub fn match_at_rho(ch: &BinaryChannel, rho0: f64) -> Result<MatchedPair> {
    check_rho(rho0)?;
    let zd = z_representation(ch);
    let (bec, bsc) = if rho0 == 0.0 {
        let c = capacity(ch);
        let eps = (1.0 - c / LN_2).clamp(0.0, 1.0);
        let x = find_root(|x| LN_2 - binary_entropy(x) - c, 0.0, 0.5, 1e-15)?;
        let bec = BecParams::new(eps)?;
        let bsc = BscParams::new(x)?;
        let gaps = [LN_2 * (1.0 - eps) - c, LN_2 - binary_entropy(x) - c];
        check_gaps(rho0, &gaps)?;
        (bec, bsc)
    } else {
        // E[g] - 1, kept separate from 1 for precision
        let tm1 = zd.expect(|z| gm1_raw(rho0, z));
        let t = 1.0 + tm1;
        let z_star = g_inv(rho0, t)?;
        let eps = (1.0 - tm1 / pow2m1(rho0)).clamp(0.0, 1.0);
        let bec = BecParams::new(eps)?;
        let bsc = BscParams::from_z(z_star)?;
        let e0 = e0_z(rho0, &zd)?;
        let gaps = [e0_bec(rho0, eps)? - e0, e0_bsc(rho0, bsc.x)? - e0];
        check_gaps(rho0, &gaps)?;
        (bec, bsc)
    };
    Ok(MatchedPair { rho0, bec, bsc })
}

fn check_gaps(rho0: f64, gaps: &[f64]) -> Result<()> {
    match gaps.iter().find(|g| !(g.abs() <= MATCH_CHECK_TOL)) {
        Some(g) => Err(domain(format!("matching at rho = {rho0} is off by {g}"))),
        None => Ok(()),
    }
}

/// Range of `E0(rho)` over either family.
fn e0_range(rho: f64) -> (f64, f64) {
    let top = rho * LN_2;
    if rho > 0.0 {
        (0.0, top)
    } else {
        (top, 0.0)
    }
}

fn check_e0_target(rho: f64, e0: f64) -> Result<()> {
    check_rho(rho)?;
    if rho == 0.0 {
        return Err(domain("E0 vanishes identically at rho = 0"));
    }
    let (lo, hi) = e0_range(rho);
    let slack = 1e-14 * (1.0 + rho.abs());
    if !(e0 >= lo - slack && e0 <= hi + slack) {
        return Err(Error::OutOfRange { value: e0, lo, hi });
    }
    Ok(())
}

/// The BEC with `E0(rho) = e0`, in closed form.
pub fn bec_from_e0(rho: f64, e0: f64) -> Result<BecParams> {
    check_e0_target(rho, e0)?;
    // eps = (e^{-e0} - 2^{-rho}) / (1 - 2^{-rho})
    let d = pow2m1(rho);
    let eps = ((-e0).exp_m1() - d) / -d;
    BecParams::new(eps.clamp(0.0, 1.0))
}

/// The BSC with `E0(rho) = e0`; `E0` is monotone in the crossover.
pub fn bsc_from_e0(rho: f64, e0: f64) -> Result<BscParams> {
    check_e0_target(rho, e0)?;
    let (lo, hi) = e0_range(rho);
    let e0 = e0.clamp(lo, hi);
    let x = find_root(|x| e0_bsc(rho, x).expect("x in [0, 0.5]") - e0, 0.0, 0.5, 1e-15)?;
    BscParams::new(x)
}

/// How a root of the `E0` difference was found.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RootKind {
    /// The curves cross.
    Transversal,
    /// The curves touch without crossing.
    Tangent,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Root {
    pub rho: f64,
    pub kind: RootKind,
}

/// Configuration of the nontrivial intersections of a BEC and a BSC `E0` curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Classification {
    /// The curves only meet at `rho = 0`.
    #[serde(rename = "only-zero")]
    OnlyZero,
    #[serde(rename = "second-in-(-1,0)")]
    SecondInNegative,
    #[serde(rename = "second-in-(0,1]")]
    SecondInUnit,
    /// A double root at the maximizer of `h_norm`.
    #[serde(rename = "tangent-at-rho>1")]
    TangentAboveOne,
    #[serde(rename = "two-in-(1,inf)")]
    TwoAboveOne,
    /// One crossing above 1 whose partner lies beyond the scanned range.
    #[serde(rename = "one-in-(1,rho_hi]")]
    OneAboveOne,
    /// Anything else; not expected for valid parameters.
    #[serde(rename = "irregular")]
    Irregular,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::OnlyZero => "only-zero",
            Self::SecondInNegative => "second-in-(-1,0)",
            Self::SecondInUnit => "second-in-(0,1]",
            Self::TangentAboveOne => "tangent-at-rho>1",
            Self::TwoAboveOne => "two-in-(1,∞)",
            Self::OneAboveOne => "one-in-(1,rho_hi]",
            Self::Irregular => "irregular",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IntersectionReport {
    pub bec: BecParams,
    pub bsc: BscParams,
    /// Roots of `E0(BSC) - E0(BEC)` other than `rho = 0`, ascending.
    pub roots: Vec<Root>,
    pub classification: Classification,
    /// Maximizer of `h_norm(., z)` and the erasure probability it gives.
    pub rho_max: Option<f64>,
    pub eps_max: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntersectionOptions {
    pub rho_hi: f64,
    pub grid: usize,
    /// Distance between the erasure probability and the largest one that
    /// still meets the BSC curve above `rho = 1`, below which the curves are
    /// reported as tangent.
    pub tangency_tol: f64,
}

impl Default for IntersectionOptions {
    fn default() -> Self {
        Self { rho_hi: 40.0, grid: 2048, tangency_tol: 5e-4 }
    }
}

/// Roots within this distance of `rho = 1` count as lying in `(0, 1]`.
const UNIT_EDGE_TOL: f64 = 1e-9;

/// Intersections of the two `E0` curves on `(-1, rho_hi]` with default options.
pub fn intersections(bec: BecParams, bsc: BscParams, rho_hi: f64) -> Result<IntersectionReport> {
    intersections_with(bec, bsc, &IntersectionOptions { rho_hi, ..Default::default() })
}

pub fn intersections_with(bec: BecParams, bsc: BscParams, opts: &IntersectionOptions) -> Result<IntersectionReport> {
    let (eps, x) = (bec.epsilon, bsc.x);
    if !(eps > 0.0 && eps < 1.0) || !(x > 0.0 && x < 0.5) {
        return Err(domain(format!("degenerate pair BEC({eps}), BSC({x})")));
    }
    if !(opts.rho_hi > 1.0 && opts.rho_hi.is_finite()) {
        return Err(domain(format!("rho_hi = {} must exceed 1", opts.rho_hi)));
    }
    if opts.grid < 8 {
        return Err(domain("intersection grid needs at least 8 points"));
    }
    if !(opts.tangency_tol >= 0.0) {
        return Err(domain("tangency tolerance must be >= 0"));
    }
    // The difference divided by rho removes the common zero at the origin.
    let cap_gap = (LN_2 - binary_entropy(x)) - LN_2 * (1.0 - eps);
    let q = |rho: f64| {
        if rho.abs() < 1e-9 {
            cap_gap
        } else {
            (e0_bsc(rho, x).expect("valid") - e0_bec(rho, eps).expect("valid")) / rho
        }
    };
    let floor = ToleranceConfig::DEFAULT.rho_floor();
    let grid = linspace(floor, opts.rho_hi, opts.grid);
    let values: Vec<f64> = grid.iter().map(|&r| q(r)).collect();
    let mut found: Vec<f64> = Vec::new();
    for i in 0..grid.len() {
        if values[i] == 0.0 {
            found.push(grid[i]);
            continue;
        }
        if i + 1 < grid.len() && values[i + 1] != 0.0 && values[i].signum() != values[i + 1].signum() {
            found.push(find_root(q, grid[i], grid[i + 1], 1e-13)?);
        }
    }

    let z = bsc.z();
    let peak = rho_max(z).ok().filter(|&r| r <= opts.rho_hi);
    let eps_max = match peak {
        Some(r) => Some(h_norm(r, z)?),
        None => None,
    };
    let mut roots: Vec<Root> = Vec::new();
    let tangent = matches!((peak, eps_max), (Some(_), Some(em)) if (eps - em).abs() <= opts.tangency_tol);
    if tangent {
        roots.extend(found.iter().filter(|&&r| r <= 1.0).map(|&rho| Root { rho, kind: RootKind::Transversal }));
        roots.push(Root { rho: peak.unwrap(), kind: RootKind::Tangent });
    } else {
        roots.extend(found.iter().map(|&rho| Root { rho, kind: RootKind::Transversal }));
    }
    roots.sort_by(|a, b| a.rho.total_cmp(&b.rho));
    let classification = classify(&roots);
    Ok(IntersectionReport { bec, bsc, roots, classification, rho_max: peak, eps_max })
}

fn classify(roots: &[Root]) -> Classification {
    let above = |r: &Root| r.rho > 1.0 + UNIT_EDGE_TOL;
    match roots {
        [] => Classification::OnlyZero,
        [r] if r.kind == RootKind::Tangent => Classification::TangentAboveOne,
        [r] if r.rho < 0.0 => Classification::SecondInNegative,
        [r] if !above(r) => Classification::SecondInUnit,
        [_] => Classification::OneAboveOne,
        [a, b] if a.kind == RootKind::Transversal && b.kind == RootKind::Transversal && above(a) && above(b) => {
            Classification::TwoAboveOne
        }
        _ => Classification::Irregular,
    }
}
