//! Randomized and grid-based checks of the extremality inequalities and of
//! the convexity and sign properties of the kernel functions.
//!
//! Every check records `lhs <= rhs` (or an equality) with a slack; anything
//! beyond the slack becomes a [`Failure`] carrying the inputs needed to
//! reproduce it. Reports depend only on their inputs and seed, whether or not
//! trials run in parallel.

use std::f64::consts::LN_2;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::channel::{capacity, channel_from_z, e0_z, er_at_rate, r_z, z_representation, BinaryChannel, ZDistribution};
use crate::error::{domain, Error, Result};
use crate::extremal::{bec_matrix, bsc_matrix, e0_bec, e0_bsc, match_at_rho, r_bec, r_bsc, MatchedPair};
use crate::gfun::{ell, f, f_tilde, g_dz, g_raw, m_fun, rho_star, t_range, F_fun};
use crate::numerics::{find_root, linspace, ToleranceConfig};
use crate::parallel::map_indexed;

/// What was being checked when a failure occurred.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct CheckInputs {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub channel: Option<BinaryChannel>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rho1: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rho2: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rate: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub z: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<f64>,
    /// Seed from which the trial's channel was drawn.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trial: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Failure {
    pub check: String,
    pub inputs: CheckInputs,
    pub lhs: f64,
    pub rhs: f64,
    /// How far the check missed; positive for every recorded failure.
    pub violation: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub trials: usize,
    pub checks: usize,
    pub failures: Vec<Failure>,
    pub max_violation: f64,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        Self { suite: suite.into(), trials: 0, checks: 0, failures: Vec::new(), max_violation: 0.0 }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn push(&mut self, check: &str, inputs: &CheckInputs, lhs: f64, rhs: f64, violation: f64) {
        self.max_violation = self.max_violation.max(violation);
        self.failures.push(Failure { check: check.to_string(), inputs: inputs.clone(), lhs, rhs, violation });
    }

    /// Records `lhs <= rhs + slack`.
    pub fn check_le(&mut self, check: &str, lhs: f64, rhs: f64, slack: f64, inputs: &CheckInputs) {
        self.checks += 1;
        let violation = lhs - rhs;
        if !(violation <= slack) {
            self.push(check, inputs, lhs, rhs, if violation.is_nan() { f64::INFINITY } else { violation });
        }
    }

    /// Records `|lhs - rhs| <= tol`.
    pub fn check_eq(&mut self, check: &str, lhs: f64, rhs: f64, tol: f64, inputs: &CheckInputs) {
        self.checks += 1;
        let gap = (lhs - rhs).abs();
        if !(gap <= tol) {
            self.push(check, inputs, lhs, rhs, if gap.is_nan() { f64::INFINITY } else { gap });
        }
    }

    /// Records `lhs < rhs`.
    pub fn check_lt(&mut self, check: &str, lhs: f64, rhs: f64, inputs: &CheckInputs) {
        self.checks += 1;
        if !(lhs < rhs) {
            let v = lhs - rhs;
            self.push(check, inputs, lhs, rhs, if v.is_nan() { f64::INFINITY } else { v.max(f64::MIN_POSITIVE) });
        }
    }

    /// Records an evaluation that should have succeeded but did not.
    pub fn record_error(&mut self, check: &str, err: &Error, inputs: &CheckInputs) {
        self.checks += 1;
        let label = format!("{check}: {err}");
        self.push(&label, inputs, f64::NAN, f64::NAN, f64::INFINITY);
    }

    /// Folds another report into this one.
    pub fn absorb(&mut self, other: VerificationReport) {
        self.trials += other.trials;
        self.checks += other.checks;
        self.max_violation = self.max_violation.max(other.max_violation);
        self.failures.extend(other.failures);
    }

    fn tag(mut self, seed: u64, trial: usize) -> Self {
        for fl in &mut self.failures {
            fl.inputs.seed = Some(seed);
            fl.inputs.trial = Some(trial);
        }
        self
    }
}

/// A channel with `n_outputs` outputs whose rows are normalized `exp(8 U)`
/// variates.
pub fn random_channel(seed: u64, n_outputs: usize) -> Result<BinaryChannel> {
    if n_outputs < 2 {
        return Err(domain(format!("random channels need at least 2 outputs, got {n_outputs}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut row = || {
        let v: Vec<f64> = (0..n_outputs).map(|_| (8.0 * rng.gen::<f64>()).exp()).collect();
        let s: f64 = v.iter().sum();
        v.into_iter().map(|p| p / s).collect::<Vec<_>>()
    };
    let w0 = row();
    let w1 = row();
    BinaryChannel::new(w0, w1)
}

/// A Z law with `n_atoms` uniform atoms and normalized uniform masses.
pub fn random_z_distribution(seed: u64, n_atoms: usize) -> Result<ZDistribution> {
    if n_atoms == 0 {
        return Err(domain("a Z law needs at least one atom"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let zs: Vec<f64> = (0..n_atoms).map(|_| rng.gen::<f64>()).collect();
    let ps: Vec<f64> = (0..n_atoms).map(|_| 1.0 - rng.gen::<f64>()).collect();
    let total: f64 = ps.iter().sum();
    ZDistribution::new(zs.into_iter().zip(ps.into_iter().map(|p| p / total)).collect())
}

/// The symmetric channel realizing [`random_z_distribution`].
pub fn random_symmetric_channel(seed: u64, n_atoms: usize) -> Result<BinaryChannel> {
    Ok(channel_from_z(&random_z_distribution(seed, n_atoms)?))
}

/// Seed of trial `index` in a run seeded by `seed`.
pub fn trial_seed(seed: u64, index: usize) -> u64 {
    // splitmix64 finalizer
    let mut x = seed ^ (index as u64).wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

/// Default `rho2` grid: 16 points on each of `(-0.99, 0]`, `[0, 1]`, `[1, 3]`
/// and `[3, 10]`, plus `rho1`.
pub fn default_rho2_grid(rho1: f64) -> Vec<f64> {
    let mut grid: Vec<f64> =
        [(-0.99, 0.0), (0.0, 1.0), (1.0, 3.0), (3.0, 10.0)].iter().flat_map(|&(lo, hi)| linspace(lo, hi, 16)).collect();
    grid.push(rho1);
    grid.sort_by(f64::total_cmp);
    grid.dedup();
    grid
}

/// `E0` and its slope for the channel and its matched pair at one `rho2`.
struct Triple {
    e0: [f64; 3],
    r: [f64; 3],
}

const W: usize = 0;
const BEC: usize = 1;
const BSC: usize = 2;

fn triple(rho: f64, zd: &ZDistribution, pair: &MatchedPair) -> Result<Triple> {
    let (eps, x) = (pair.bec.epsilon(), pair.bsc.x());
    Ok(Triple {
        e0: [e0_z(rho, zd)?, e0_bec(rho, eps)?, e0_bsc(rho, x)?],
        r: [r_z(rho, zd)?, r_bec(rho, eps)?, r_bsc(rho, x)?],
    })
}

/// Records `E0` or slope orderings `lo <= W <= hi` where `lo`/`hi` are BEC or BSC.
fn sandwich(
    rep: &mut VerificationReport,
    label: &str,
    v: &[f64; 3],
    lo: usize,
    hi: usize,
    slack: f64,
    inputs: &CheckInputs,
) {
    let name = |i| if i == BEC { "bec" } else { "bsc" };
    rep.check_le(&format!("{label}.{}<=w", name(lo)), v[lo], v[W], slack, inputs);
    rep.check_le(&format!("{label}.w<={}", name(hi)), v[W], v[hi], slack, inputs);
}

/// Checks every ordering of the extremality theorem that applies to
/// `(rho1, rho2)` for `rho2` in `grid`, against the pair matched to `ch` at
/// `rho1`.
pub fn check_theorem1(ch: &BinaryChannel, rho1: f64, grid: &[f64]) -> Result<VerificationReport> {
    check_theorem1_with(ch, rho1, grid, ToleranceConfig::DEFAULT.ineq_slack)
}

pub fn check_theorem1_with(ch: &BinaryChannel, rho1: f64, grid: &[f64], slack: f64) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new("theorem1");
    rep.trials = 1;
    let pair = match_at_rho(ch, rho1)?;
    let zd = z_representation(ch);
    let base = CheckInputs { channel: Some(ch.clone()), rho1: Some(rho1), ..Default::default() };

    if rho1 == 0.0 {
        let c = capacity(ch);
        rep.check_eq("match.capacity.bec", LN_2 * (1.0 - pair.bec.epsilon()), c, 1e-9, &base);
        rep.check_eq("match.capacity.bsc", r_bsc(0.0, pair.bsc.x())?, c, 1e-9, &base);
    } else {
        let t = triple(rho1, &zd, &pair)?;
        rep.check_eq("match.e0.bec", t.e0[BEC], t.e0[W], 1e-9, &base);
        rep.check_eq("match.e0.bsc", t.e0[BSC], t.e0[W], 1e-9, &base);
    }

    let floor = ToleranceConfig::DEFAULT.rho_floor();
    for &rho2 in grid.iter().filter(|&&r| r >= floor) {
        let inputs = CheckInputs { rho2: Some(rho2), ..base.clone() };
        let t = triple(rho2, &zd, &pair)?;
        if rho2 == 0.0 {
            for (i, name) in ["zero.e0.w", "zero.e0.bec", "zero.e0.bsc"].iter().enumerate() {
                rep.check_eq(name, t.e0[i], 0.0, 1e-12, &inputs);
            }
        }
        if (0.0..=3.0).contains(&rho1) && rho2 >= rho1 && rho2 <= 3.0 {
            sandwich(&mut rep, "part1.rate", &t.r, BSC, BEC, slack, &inputs);
            sandwich(&mut rep, "part1.e0", &t.e0, BSC, BEC, slack, &inputs);
        }
        if rho1 > -1.0 && rho1 <= 0.0 && rho2 <= rho1 {
            sandwich(&mut rep, "part2.rate", &t.r, BEC, BSC, slack, &inputs);
            sandwich(&mut rep, "part2.e0", &t.e0, BSC, BEC, slack, &inputs);
        }
        if rho1 > -1.0 && rho1 <= 0.0 && rho2 >= 0.0 {
            sandwich(&mut rep, "part3.nonpos-nonneg.e0", &t.e0, BSC, BEC, slack, &inputs);
        }
        if (0.0..=1.0).contains(&rho1) && rho2 >= rho1 {
            sandwich(&mut rep, "part3.unit-above.e0", &t.e0, BSC, BEC, slack, &inputs);
        }
        if rho1 > 1.0 && (0.0..=1.0).contains(&rho2) {
            sandwich(&mut rep, "part3.above-unit.e0", &t.e0, BEC, BSC, slack, &inputs);
        }
        if rho1 > 1.0 && rho2 <= 0.0 {
            sandwich(&mut rep, "part3.above-nonpos.e0", &t.e0, BSC, BEC, slack, &inputs);
        }
    }
    Ok(rep)
}

/// Capacity-matched orderings of `E0` over `rho_grid` and of the
/// random-coding exponent over `rate_grid`.
pub fn check_capacity_corollary(ch: &BinaryChannel, rho_grid: &[f64], rate_grid: &[f64]) -> Result<VerificationReport> {
    let slack = ToleranceConfig::DEFAULT.ineq_slack;
    let mut rep = VerificationReport::new("capacity");
    rep.trials = 1;
    let pair = match_at_rho(ch, 0.0)?;
    let zd = z_representation(ch);
    let base = CheckInputs { channel: Some(ch.clone()), rho1: Some(0.0), ..Default::default() };
    for &rho in rho_grid {
        let inputs = CheckInputs { rho2: Some(rho), ..base.clone() };
        let t = triple(rho, &zd, &pair)?;
        sandwich(&mut rep, "capacity.e0", &t.e0, BSC, BEC, slack, &inputs);
    }
    let bec = bec_matrix(pair.bec.epsilon())?;
    let bsc = bsc_matrix(pair.bsc.x())?;
    for &rate in rate_grid {
        let inputs = CheckInputs { rate: Some(rate), ..base.clone() };
        let v = [er_at_rate(rate, ch)?, er_at_rate(rate, &bec)?, er_at_rate(rate, &bsc)?];
        sandwich(&mut rep, "capacity.er", &v, BSC, BEC, slack, &inputs);
    }
    Ok(rep)
}

/// `rho` grid and rate grid used by [`capacity_fuzz`]: 20 points each.
pub fn capacity_grids(ch: &BinaryChannel) -> (Vec<f64>, Vec<f64>) {
    let rho: Vec<f64> = linspace(-0.99, 10.0, 20);
    let c = capacity(ch);
    let rates = (1..=20).map(|i| c * i as f64 / 21.0).collect();
    (rho, rates)
}

/// BEC and BSC with the same slope `R(rho)` as `ch`; `rho in (0, 1]`.
pub fn slope_matched_pair(ch: &BinaryChannel, rho: f64) -> Result<(f64, f64)> {
    if !(rho > 0.0 && rho <= 1.0) {
        return Err(domain(format!("slope matching needs rho in (0, 1], got {rho}")));
    }
    let r = r_z(rho, &z_representation(ch))?.clamp(0.0, LN_2);
    let u = 2f64.powf(-rho);
    // r_bec is a Möbius function of eps; solve it directly
    let eps = (u * (LN_2 - r) / (r * (1.0 - u) + u * LN_2)).clamp(0.0, 1.0);
    let x = find_root(|x| r_bsc(rho, x).expect("x in [0, 0.5]") - r, 0.0, 0.5, 1e-15)?;
    Ok((eps, x))
}

/// Slope-matched orderings `E0(BEC) <= E0(W) <= E0(BSC)` and the same for
/// `E0 - rho R`.
pub fn check_corollary1(ch: &BinaryChannel, rho: f64) -> Result<VerificationReport> {
    let slack = ToleranceConfig::DEFAULT.ineq_slack;
    let mut rep = VerificationReport::new("corollary1");
    rep.trials = 1;
    let (eps, x) = slope_matched_pair(ch, rho)?;
    let zd = z_representation(ch);
    let inputs = CheckInputs { channel: Some(ch.clone()), rho1: Some(rho), ..Default::default() };
    let r = [r_z(rho, &zd)?, r_bec(rho, eps)?, r_bsc(rho, x)?];
    rep.check_eq("match.rate.bec", r[BEC], r[W], 1e-9, &inputs);
    rep.check_eq("match.rate.bsc", r[BSC], r[W], 1e-9, &inputs);
    let e0 = [e0_z(rho, &zd)?, e0_bec(rho, eps)?, e0_bsc(rho, x)?];
    sandwich(&mut rep, "slope.e0", &e0, BEC, BSC, slack, &inputs);
    let er = [0, 1, 2].map(|i| e0[i] - rho * r[i]);
    sandwich(&mut rep, "slope.er", &er, BEC, BSC, slack, &inputs);
    Ok(rep)
}

/// Interior grid of `n` points on the `t`-range of `g(rho, .)`, with spacing
/// `h` so that every point keeps both neighbours inside the range.
fn t_grid(rho: f64, n: usize) -> (Vec<f64>, f64) {
    let (lo, hi) = t_range(rho);
    let h = (hi - lo) / (n + 1) as f64;
    ((1..=n).map(|i| lo + h * i as f64).collect(), h)
}

fn second_differences(
    rep: &mut VerificationReport,
    label: &str,
    rho1: f64,
    rho2: f64,
    concave: bool,
    fun: impl Fn(f64, f64, f64) -> Result<f64>,
) {
    let (ts, h) = t_grid(rho1, 64);
    for t in ts {
        let inputs = CheckInputs { rho1: Some(rho1), rho2: Some(rho2), t: Some(t), ..Default::default() };
        let d2 = (|| Ok::<f64, Error>(fun(rho1, rho2, t - h)? - 2.0 * fun(rho1, rho2, t)? + fun(rho1, rho2, t + h)?))();
        match d2 {
            Ok(d2) if concave => rep.check_le(label, d2, 0.0, 1e-9, &inputs),
            Ok(d2) => rep.check_le(label, -d2, 0.0, 1e-9, &inputs),
            Err(e) => rep.record_error(label, &e, &inputs),
        }
    }
}

/// Grid checks of the kernel's monotonicity and convexity, the sign of
/// `m(k, rho)`, `rho_star(k) >= 3`, monotonicity of `F`, and the convexity of
/// the composed maps `f` and `f~`. `seed` drives the random `(rho, z)` probes.
pub fn check_lemma_suite(seed: u64) -> VerificationReport {
    let mut rep = VerificationReport::new("lemmas");
    rep.trials = 1;
    let at_k_rho = |k: f64, rho: f64| CheckInputs { k: Some(k), rho1: Some(rho), ..Default::default() };

    // kernel: non-increasing and concave for rho >= 0, the reverse on (-1, 0)
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..200 {
        let rho = if i % 2 == 0 { 10.0 * rng.gen::<f64>() } else { -0.999 + 0.999 * rng.gen::<f64>() };
        let z = 0.001 + 0.998 * rng.gen::<f64>();
        let inputs = CheckInputs { rho1: Some(rho), z: Some(z), ..Default::default() };
        let dz = g_dz(rho, z).unwrap_or(f64::NAN);
        let hz = 1e-3f64.min(z).min(1.0 - z);
        let d2 = g_raw(rho, z - hz) - 2.0 * g_raw(rho, z) + g_raw(rho, z + hz);
        if rho >= 0.0 {
            rep.check_le("kernel.nonincreasing", dz, 0.0, 1e-12, &inputs);
            rep.check_le("kernel.concave", d2, 0.0, 1e-9, &inputs);
        } else {
            rep.check_le("kernel.nondecreasing", -dz, 0.0, 1e-12, &inputs);
            rep.check_le("kernel.convex", -d2, 0.0, 1e-9, &inputs);
        }
    }

    // sign function
    let ks: Vec<f64> = (0..32).map(|i| (i as f64 + 0.5) / 32.0).collect();
    let rhos: Vec<f64> = (1..=32).map(|j| -1.0 + 4.0 * j as f64 / 32.0).collect();
    for &k in &ks {
        rep.check_eq("m.zero-at-rho0", m_fun(k, 0.0).unwrap_or(f64::NAN), 0.0, 1e-12, &at_k_rho(k, 0.0));
        for &rho in &rhos {
            rep.check_le("m.nonpositive-below-3", m_fun(k, rho).unwrap_or(f64::NAN), 0.0, 1e-12, &at_k_rho(k, rho));
        }
        for rho in [-1.01, -1.5, -2.0, -5.0, -20.0] {
            rep.check_le(
                "m.nonnegative-below-minus1",
                -m_fun(k, rho).unwrap_or(f64::NAN),
                0.0,
                1e-12,
                &at_k_rho(k, rho),
            );
        }
        match rho_star(k) {
            Ok(rs) => {
                for rho in [rs + 0.01, rs + 1.0, 10.0, 50.0, 150.0].into_iter().filter(|&r| r > rs) {
                    rep.check_le(
                        "m.nonnegative-above-root",
                        -m_fun(k, rho).unwrap_or(f64::NAN),
                        0.0,
                        1e-12,
                        &at_k_rho(k, rho),
                    );
                }
            }
            Err(e) => rep.record_error("m.root", &e, &at_k_rho(k, f64::NAN)),
        }
    }
    for &rho in &rhos {
        rep.check_eq("m.zero-at-k1", m_fun(1.0, rho).unwrap_or(f64::NAN), 0.0, 1e-12, &at_k_rho(1.0, rho));
    }

    // rho_star >= 3 and F decreasing on (0, 1]
    let kgrid: Vec<f64> = (1..=19).map(|i| 0.05 * i as f64).collect();
    for &k in &kgrid {
        match rho_star(k) {
            Ok(rs) => rep.check_le("rho-star.at-least-3", 3.0 - 1e-6, rs, 0.0, &at_k_rho(k, rs)),
            Err(e) => rep.record_error("rho-star.at-least-3", &e, &at_k_rho(k, f64::NAN)),
        }
        let fs: Vec<f64> = (1..=32).map(|j| F_fun(k, j as f64 / 32.0).unwrap_or(f64::NAN)).collect();
        for (j, w) in fs.windows(2).enumerate() {
            rep.check_lt("F.decreasing", w[1], w[0], &at_k_rho(k, (j + 2) as f64 / 32.0));
        }
    }

    // f~ second differences
    for rho in [0.25, 0.5, 1.0, 2.0, 2.9, 3.0] {
        second_differences(&mut rep, "f-tilde.concave", rho, rho, true, f_tilde);
    }
    for rho in [-0.9, -0.5, -0.1] {
        second_differences(&mut rep, "f-tilde.convex", rho, rho, false, f_tilde);
    }
    for (r1, r2) in [(0.1, 0.9), (0.25, 0.75), (0.5, 1.0), (0.9, 1.0)] {
        second_differences(&mut rep, "f-tilde.concave-pair", r1, r2, true, f_tilde);
    }

    // f second differences
    for (r1, r2) in
        [(-0.5, 1.0), (-0.5, 0.0), (-0.9, 4.0), (0.5, 2.0), (0.25, 0.75), (1.0, 6.0), (2.0, -0.5), (5.0, -0.3)]
    {
        second_differences(&mut rep, "f.concave", r1, r2, true, f);
    }
    for (r1, r2) in [(2.0, 0.5), (1.5, 0.25), (4.0, 1.0)] {
        second_differences(&mut rep, "f.convex", r1, r2, false, f);
    }

    // log-derivative comparison against rho = 1
    for z in linspace(0.05, 0.95, 19) {
        let base = ell(1.0, z).unwrap_or(f64::NAN);
        for rho in [1.5, 2.0, 5.0, 20.0] {
            let inputs = CheckInputs { rho1: Some(rho), z: Some(z), ..Default::default() };
            rep.check_le("ell.above-unit", base, ell(rho, z).unwrap_or(f64::NAN), 1e-9, &inputs);
        }
        for rho in [-0.9, -0.5, 0.25, 0.9] {
            let inputs = CheckInputs { rho1: Some(rho), z: Some(z), ..Default::default() };
            rep.check_le("ell.below-unit", ell(rho, z).unwrap_or(f64::NAN), base, 1e-9, &inputs);
        }
    }
    rep
}

/// Settings shared by the fuzz drivers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FuzzConfig {
    pub seed: u64,
    pub trials: usize,
    pub parallel: bool,
    pub slack: f64,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        Self { seed: 1, trials: 200, parallel: true, slack: ToleranceConfig::DEFAULT.ineq_slack }
    }
}

/// Channel of trial `i`: even trials are symmetric with 1 to 8 atoms, odd
/// trials asymmetric with 2 to 16 outputs.
pub fn trial_channel(seed: u64, i: usize) -> BinaryChannel {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sub = rng.gen::<u64>();
    let built = if i.is_multiple_of(2) {
        random_symmetric_channel(sub, rng.gen_range(1..=8))
    } else {
        random_channel(sub, rng.gen_range(2..=16))
    };
    built.expect("generator sizes are valid")
}

fn run_trials(
    name: &str,
    cfg: &FuzzConfig,
    trial: impl Fn(u64, usize, &mut ChaCha8Rng) -> Result<VerificationReport> + Sync + Send,
) -> VerificationReport {
    let reports = map_indexed(cfg.trials, cfg.parallel, |i| {
        let seed = trial_seed(cfg.seed, i);
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(1));
        let rep = match trial(seed, i, &mut rng) {
            Ok(rep) => rep,
            Err(e) => {
                let mut rep = VerificationReport::new(name);
                let inputs = CheckInputs { channel: Some(trial_channel(seed, i)), ..Default::default() };
                rep.record_error("evaluation", &e, &inputs);
                rep
            }
        };
        rep.tag(seed, i)
    });
    let mut total = VerificationReport::new(name);
    for rep in reports {
        total.absorb(rep);
    }
    total.trials = cfg.trials;
    total
}

/// Random channels matched at one random `rho1` in each of `(-0.99, 0]`,
/// `[0, 1]`, `[0, 3]` and `(1, 8]`, checked on [`default_rho2_grid`].
pub fn theorem1_fuzz(cfg: &FuzzConfig) -> VerificationReport {
    let slack = cfg.slack;
    run_trials("theorem1", cfg, |seed, i, rng| {
        let ch = trial_channel(seed, i);
        let mut rep = VerificationReport::new("theorem1");
        let draws = [-0.99 * rng.gen::<f64>(), rng.gen::<f64>(), 3.0 * rng.gen::<f64>(), 8.0 - 7.0 * rng.gen::<f64>()];
        for rho1 in draws {
            rep.absorb(check_theorem1_with(&ch, rho1, &default_rho2_grid(rho1), slack)?);
        }
        Ok(rep)
    })
}

/// Random channels checked by [`check_capacity_corollary`] on
/// [`capacity_grids`].
pub fn capacity_fuzz(cfg: &FuzzConfig) -> VerificationReport {
    run_trials("capacity", cfg, |seed, i, _| {
        let ch = trial_channel(seed, i);
        let (rho, rates) = capacity_grids(&ch);
        check_capacity_corollary(&ch, &rho, &rates)
    })
}

/// Random channels checked by [`check_corollary1`] at a random `rho in (0, 1]`.
pub fn corollary1_fuzz(cfg: &FuzzConfig) -> VerificationReport {
    run_trials("corollary1", cfg, |seed, i, rng| {
        let ch = trial_channel(seed, i);
        check_corollary1(&ch, 1.0 - rng.gen::<f64>())
    })
}
