//! Binary-input channels, their Z-representation, and the generic
//! information quantities under the uniform input.

use std::f64::consts::LN_2;

use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::gfun::{g_drho_raw, gm1_raw};
use crate::numerics::{check_rho, maximize_concave, xlnx};

/// Tolerance on row sums accepted by [`BinaryChannel::new`].
pub const ROW_SUM_TOL: f64 = 1e-9;
/// Tolerance on the total mass of a [`ZDistribution`].
pub const MASS_TOL: f64 = 1e-12;
/// Atoms closer than this are merged.
pub const MERGE_TOL: f64 = 4.0 * f64::EPSILON;

/// A binary-input channel given by its two rows `W(.|0)` and `W(.|1)`.
///
/// Rows are checked to sum to one within [`ROW_SUM_TOL`] and then rescaled
/// to sum to one in floating point.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BinaryChannel {
    w0: Vec<f64>,
    w1: Vec<f64>,
}

fn check_row(row: &[f64], name: &str) -> Result<f64> {
    for (y, &p) in row.iter().enumerate() {
        if !(p >= 0.0 && p.is_finite()) {
            return Err(Error::InvalidChannel(format!("{name}[{y}] = {p} is not a probability")));
        }
    }
    let s: f64 = row.iter().sum();
    if (s - 1.0).abs() > ROW_SUM_TOL {
        return Err(Error::InvalidChannel(format!("{name} sums to {s}, not 1")));
    }
    Ok(s)
}

impl BinaryChannel {
    pub fn new(w0: Vec<f64>, w1: Vec<f64>) -> Result<Self> {
        if w0.is_empty() {
            return Err(Error::InvalidChannel("a channel needs at least one output".into()));
        }
        if w0.len() != w1.len() {
            return Err(Error::InvalidChannel(format!("rows have different lengths {} and {}", w0.len(), w1.len())));
        }
        let s0 = check_row(&w0, "row 0")?;
        let s1 = check_row(&w1, "row 1")?;
        let w0 = w0.into_iter().map(|p| p / s0).collect();
        let w1 = w1.into_iter().map(|p| p / s1).collect();
        Ok(Self { w0, w1 })
    }

    pub fn outputs(&self) -> usize {
        self.w0.len()
    }

    pub fn w0(&self) -> &[f64] {
        &self.w0
    }

    pub fn w1(&self) -> &[f64] {
        &self.w1
    }

    /// `(W(y|0), W(y|1))` for every output.
    pub fn pairs(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.w0.iter().copied().zip(self.w1.iter().copied())
    }

    /// The noiseless channel on two outputs.
    pub fn noiseless() -> Self {
        Self { w0: vec![1.0, 0.0], w1: vec![0.0, 1.0] }
    }

    /// A channel whose output does not depend on the input.
    pub fn useless(row: Vec<f64>) -> Result<Self> {
        Self::new(row.clone(), row)
    }
}

/// Discrete law of the tilt `Z`, as atoms `(z, p)` with strictly increasing
/// `z`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ZDistribution {
    atoms: Vec<(f64, f64)>,
}

impl ZDistribution {
    /// Sorts the atoms, merges those closer than [`MERGE_TOL`] and checks
    /// that the masses sum to one.
    pub fn new(mut atoms: Vec<(f64, f64)>) -> Result<Self> {
        for &(z, p) in &atoms {
            if !(0.0..=1.0).contains(&z) {
                return Err(Error::InvalidDistribution(format!("atom z = {z} outside [0, 1]")));
            }
            if !(p > 0.0 && p.is_finite()) {
                return Err(Error::InvalidDistribution(format!("atom mass {p} at z = {z} is not positive")));
            }
        }
        if atoms.is_empty() {
            return Err(Error::InvalidDistribution("no atoms".into()));
        }
        atoms.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut merged: Vec<(f64, f64)> = Vec::with_capacity(atoms.len());
        for (z, p) in atoms {
            match merged.last_mut() {
                Some(last) if z - last.0 <= MERGE_TOL => {
                    // keep the mass-weighted location
                    last.0 = (last.0 * last.1 + z * p) / (last.1 + p);
                    last.1 += p;
                }
                _ => merged.push((z, p)),
            }
        }
        let total: f64 = merged.iter().map(|a| a.1).sum();
        if (total - 1.0).abs() > MASS_TOL {
            return Err(Error::InvalidDistribution(format!("masses sum to {total}, not 1")));
        }
        Ok(Self { atoms: merged })
    }

    pub fn atoms(&self) -> &[(f64, f64)] {
        &self.atoms
    }

    /// `E[phi(Z)]`.
    pub fn expect(&self, phi: impl Fn(f64) -> f64) -> f64 {
        self.atoms.iter().map(|&(z, p)| p * phi(z)).sum()
    }

    fn mass_m1(&self) -> f64 {
        self.atoms.iter().map(|a| a.1).sum::<f64>() - 1.0
    }
}

/// The law of `Z = |W(Y|0) - W(Y|1)| / (W(Y|0) + W(Y|1))` with
/// `P(Y = y) = W(y) = (W(y|0) + W(y|1)) / 2`.
pub fn z_representation(ch: &BinaryChannel) -> ZDistribution {
    let atoms = ch
        .pairs()
        .filter(|&(a, b)| a + b > 0.0)
        .map(|(a, b)| (((a - b).abs() / (a + b)).min(1.0), 0.5 * (a + b)))
        .collect();
    ZDistribution::new(atoms).expect("a valid channel has a valid Z law")
}

/// A symmetric channel realizing `zd`: two mirrored outputs per atom.
pub fn channel_from_z(zd: &ZDistribution) -> BinaryChannel {
    let mut w0 = Vec::with_capacity(2 * zd.atoms.len());
    let mut w1 = Vec::with_capacity(2 * zd.atoms.len());
    for &(z, p) in &zd.atoms {
        let hi = 0.5 * p * (1.0 + z);
        let lo = 0.5 * p * (1.0 - z);
        w0.extend([hi, lo]);
        w1.extend([lo, hi]);
    }
    BinaryChannel::new(w0, w1).expect("a valid Z law gives a valid channel")
}

/// Gallager's `E0(rho)` under the uniform input, summed over outputs.
pub fn e0_raw(rho: f64, ch: &BinaryChannel) -> Result<f64> {
    e0_general(rho, 0.5, ch)
}

/// `E0(rho)` for the input law `(q, 1 - q)`.
pub fn e0_general(rho: f64, q: f64, ch: &BinaryChannel) -> Result<f64> {
    check_rho(rho)?;
    if !(0.0..=1.0).contains(&q) {
        return Err(domain(format!("input probability q = {q} outside [0, 1]")));
    }
    let a = 1.0 / (1.0 + rho);
    // (q w0^a + (1-q) w1^a)^{1+rho}, evaluated in log space because w^a
    // underflows when rho is close to -1
    let term = |w0: f64, w1: f64| {
        let l0 = q.ln() + a * w0.ln();
        let l1 = (1.0 - q).ln() + a * w1.ln();
        let (hi, lo) = if l0 >= l1 { (l0, l1) } else { (l1, l0) };
        if hi == f64::NEG_INFINITY {
            return 0.0;
        }
        ((1.0 + rho) * (hi + (lo - hi).exp().ln_1p())).exp()
    };
    let s: f64 = ch.pairs().map(|(w0, w1)| term(w0, w1)).sum();
    Ok(-s.ln())
}

/// `E0(rho) = -ln E[g(rho, Z)]`.
pub fn e0_z(rho: f64, zd: &ZDistribution) -> Result<f64> {
    check_rho(rho)?;
    let gm1 = zd.expect(|z| gm1_raw(rho, z));
    Ok(-(zd.mass_m1() + gm1).ln_1p())
}

/// `R(rho) = dE0/drho` from the Z law.
pub fn r_z(rho: f64, zd: &ZDistribution) -> Result<f64> {
    check_rho(rho)?;
    let num = zd.expect(|z| -g_drho_raw(rho, z));
    let den = 1.0 + zd.mass_m1() + zd.expect(|z| gm1_raw(rho, z));
    Ok(num / den)
}

/// `R(rho, W) = dE0/drho`.
pub fn r_slope(rho: f64, ch: &BinaryChannel) -> Result<f64> {
    r_z(rho, &z_representation(ch))
}

/// Symmetric capacity (mutual information under the uniform input).
pub fn capacity(ch: &BinaryChannel) -> f64 {
    let c: f64 = ch
        .pairs()
        .map(|(a, b)| {
            let avg = 0.5 * (a + b);
            if avg == 0.0 {
                return 0.0;
            }
            0.5 * (xlnx(a) + xlnx(b)) - avg * avg.ln()
        })
        .sum();
    c.clamp(0.0, LN_2)
}

/// Capacity from the Z law: `E[ln 2 - H((1 - Z)/2)]`.
pub fn capacity_z(zd: &ZDistribution) -> f64 {
    zd.expect(|z| LN_2 - crate::numerics::binary_entropy(0.5 * (1.0 - z))).clamp(0.0, LN_2)
}

/// Cut-off rate `E0(1)`.
pub fn cutoff_rate(ch: &BinaryChannel) -> f64 {
    e0_raw(1.0, ch).expect("rho = 1 is always admissible")
}

/// `E0(rho) / rho`, continued by the capacity at `rho = 0`.
pub fn e0_over_rho(rho: f64, ch: &BinaryChannel) -> Result<f64> {
    check_rho(rho)?;
    if rho == 0.0 {
        return Ok(capacity(ch));
    }
    Ok(e0_z(rho, &z_representation(ch))? / rho)
}

/// A point `(R, E0 - rho R)` of the random-coding exponent curve.
pub fn er_parametric(rho: f64, ch: &BinaryChannel) -> Result<(f64, f64)> {
    if !(0.0..=1.0).contains(&rho) {
        return Err(domain(format!("parametric rho = {rho} outside [0, 1]")));
    }
    let zd = z_representation(ch);
    let rate = r_z(rho, &zd)?;
    let exponent = e0_z(rho, &zd)? - rho * rate;
    Ok((rate, exponent.max(0.0)))
}

/// `max_{rho in [0, 1]} E0(rho) - rho R` under the uniform input.
pub fn er_at_rate(rate: f64, ch: &BinaryChannel) -> Result<f64> {
    if !(rate >= 0.0) {
        return Err(domain(format!("rate {rate} must be >= 0")));
    }
    if rate >= capacity(ch) {
        return Ok(0.0);
    }
    // E0 is concave on [0, 1], so the maximizer is rho = 1 once the slope
    // there still exceeds the rate.
    let zd = z_representation(ch);
    if rate <= r_z(1.0, &zd)? {
        return Ok(e0_raw(1.0, ch)? - rate);
    }
    let (_, best) = maximize_concave(|rho| e0_raw(rho, ch).expect("rho in [0, 1]") - rho * rate, 0.0, 1.0, 1e-12)?;
    Ok(best.max(0.0))
}
