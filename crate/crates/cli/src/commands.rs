//! Subcommand bodies. Each one only formats library results.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use e0_extremal::channel::{capacity, cutoff_rate, e0_over_rho, e0_raw, er_at_rate, r_slope};
use e0_extremal::extremal::{
    bec_matrix, bsc_matrix, e0_bec, e0_bsc, intersections_with, match_at_rho, r_bec, r_bsc, IntersectionOptions,
    IntersectionReport, RootKind,
};
use e0_extremal::numerics::linspace;
use e0_extremal::verify::{
    capacity_fuzz, check_lemma_suite, corollary1_fuzz, theorem1_fuzz, FuzzConfig, VerificationReport,
};
use e0_extremal::{BecParams, BinaryChannel, BscParams};
use serde_json::json;

use crate::channel_file::read_channel;
use crate::error::{CliError, CliResult};
use crate::format::sig;
use crate::{Quantity, ReportFormat, Suite, SummaryFormat};

fn write_err(e: std::io::Error) -> CliError {
    CliError::io("<output>", e)
}

pub fn load_source(channel: Option<&Path>, bec: Option<f64>, bsc: Option<f64>) -> CliResult<BinaryChannel> {
    match (channel, bec, bsc) {
        (Some(p), None, None) => read_channel(p),
        (None, Some(e), None) => Ok(bec_matrix(e)?),
        (None, None, Some(x)) => Ok(bsc_matrix(x)?),
        _ => Err(CliError::Usage("give exactly one of --channel, --bec, --bsc".into())),
    }
}

fn quantity_name(q: Quantity) -> &'static str {
    match q {
        Quantity::E0 => "e0",
        Quantity::Rate => "rate",
        Quantity::Capacity => "capacity",
        Quantity::Cutoff => "cutoff",
        Quantity::E0OverRho => "e0_over_rho",
        Quantity::Er => "er",
    }
}

/// Prints `name=value` lines; all values are in nats.
pub fn compute(
    out: &mut dyn Write,
    ch: &BinaryChannel,
    rho: Option<f64>,
    rate: Option<f64>,
    wanted: &[Quantity],
) -> CliResult<()> {
    let mut list = wanted.to_vec();
    if list.is_empty() {
        if rho.is_some() {
            list.extend([Quantity::E0, Quantity::Rate, Quantity::E0OverRho]);
        }
        list.extend([Quantity::Capacity, Quantity::Cutoff]);
        if rate.is_some() {
            list.push(Quantity::Er);
        }
    }
    let need_rho = || rho.ok_or_else(|| CliError::Usage("this quantity needs --rho".into()));
    for q in list {
        let v = match q {
            Quantity::E0 => e0_raw(need_rho()?, ch)?,
            Quantity::Rate => r_slope(need_rho()?, ch)?,
            Quantity::E0OverRho => e0_over_rho(need_rho()?, ch)?,
            Quantity::Capacity => capacity(ch),
            Quantity::Cutoff => cutoff_rate(ch),
            Quantity::Er => {
                let r = rate.ok_or_else(|| CliError::Usage("er needs --rate".into()))?;
                er_at_rate(r, ch)?
            }
        };
        writeln!(out, "{}={}", quantity_name(q), sig(v)).map_err(write_err)?;
    }
    Ok(())
}

pub fn match_pair(out: &mut dyn Write, ch: &BinaryChannel, rho0: f64) -> CliResult<()> {
    let pair = match_at_rho(ch, rho0)?;
    writeln!(out, "epsilon={:.6} x={:.6}", pair.bec.epsilon(), pair.bsc.x()).map_err(write_err)
}

/// Columns requested for `curves`.
pub struct CurveColumns {
    pub channel: Option<BinaryChannel>,
    pub bec: Option<f64>,
    pub bsc: Option<f64>,
    pub match_rho: Option<f64>,
}

/// `steps` uniform steps on `[rho_min, rho_max]`, with `rho = 0` inserted
/// when it falls strictly inside.
pub fn rho_grid(rho_min: f64, rho_max: f64, steps: usize) -> CliResult<Vec<f64>> {
    if !(rho_min > -1.0 && rho_min.is_finite()) {
        return Err(CliError::Usage(format!("--rho-min {rho_min} must be > -1")));
    }
    if !(rho_max > rho_min && rho_max.is_finite()) {
        return Err(CliError::Usage(format!("--rho-max {rho_max} must exceed --rho-min {rho_min}")));
    }
    if steps == 0 {
        return Err(CliError::Usage("--steps must be positive".into()));
    }
    let mut grid = linspace(rho_min, rho_max, steps + 1);
    if let Err(pos) = grid.binary_search_by(|r| r.total_cmp(&0.0)) {
        if pos > 0 && pos < grid.len() {
            grid.insert(pos, 0.0);
        }
    }
    Ok(grid)
}

pub const CSV_HEADER: [&str; 7] = ["rho", "e0_w", "r_w", "e0_bec", "r_bec", "e0_bsc", "r_bsc"];

pub fn curves(out: &mut dyn Write, columns: &CurveColumns, grid: &[f64]) -> CliResult<()> {
    let (mut bec, mut bsc) =
        (columns.bec.map(BecParams::new).transpose()?, columns.bsc.map(BscParams::new).transpose()?);
    if let Some(rho0) = columns.match_rho {
        let ch = columns.channel.as_ref().ok_or_else(|| CliError::Usage("--match-rho needs --channel".into()))?;
        let pair = match_at_rho(ch, rho0)?;
        bec = Some(pair.bec);
        bsc = Some(pair.bsc);
    }
    if columns.channel.is_none() && bec.is_none() && bsc.is_none() {
        return Err(CliError::Usage("give at least one of --channel, --bec, --bsc".into()));
    }

    let mut w = csv::Writer::from_writer(out);
    let csv_err = |e: csv::Error| CliError::io("<output>", e.into());
    w.write_record(CSV_HEADER).map_err(csv_err)?;
    for &rho in grid {
        let mut row = vec![sig(rho)];
        let mut push = |v: Option<f64>| row.push(v.map(sig).unwrap_or_default());
        match &columns.channel {
            Some(ch) => {
                push(Some(e0_raw(rho, ch)?));
                push(Some(r_slope(rho, ch)?));
            }
            None => {
                push(None);
                push(None);
            }
        }
        let eps = bec.map(|b| b.epsilon());
        push(eps.map(|e| e0_bec(rho, e)).transpose()?);
        push(eps.map(|e| r_bec(rho, e)).transpose()?);
        let x = bsc.map(|b| b.x());
        push(x.map(|x| e0_bsc(rho, x)).transpose()?);
        push(x.map(|x| r_bsc(rho, x)).transpose()?);
        w.write_record(&row).map_err(csv_err)?;
    }
    w.flush().map_err(write_err)
}

fn kind_name(kind: RootKind) -> &'static str {
    match kind {
        RootKind::Transversal => "transversal",
        RootKind::Tangent => "tangent",
    }
}

pub fn write_report_text(out: &mut dyn Write, rep: &IntersectionReport) -> std::io::Result<()> {
    writeln!(out, "bec_epsilon={}", sig(rep.bec.epsilon()))?;
    writeln!(out, "bsc_x={}", sig(rep.bsc.x()))?;
    writeln!(out, "classification={}", rep.classification)?;
    writeln!(out, "roots={}", rep.roots.len())?;
    for (i, r) in rep.roots.iter().enumerate() {
        writeln!(out, "root_{}={} kind={}", i + 1, sig(r.rho), kind_name(r.kind))?;
    }
    if let (Some(rm), Some(em)) = (rep.rho_max, rep.eps_max) {
        writeln!(out, "rho_max={}", sig(rm))?;
        writeln!(out, "eps_max={}", sig(em))?;
    }
    Ok(())
}

pub fn intersect(
    out: &mut dyn Write,
    eps: f64,
    x: f64,
    rho_hi: f64,
    tangency_tol: f64,
    format: ReportFormat,
) -> CliResult<()> {
    let opts = IntersectionOptions { rho_hi, tangency_tol, ..Default::default() };
    let rep = intersections_with(BecParams::new(eps)?, BscParams::new(x)?, &opts)?;
    match format {
        ReportFormat::Text => write_report_text(out, &rep).map_err(write_err),
        ReportFormat::Json => {
            let s = serde_json::to_string(&rep).expect("report serializes");
            writeln!(out, "{s}").map_err(write_err)
        }
    }
}

pub struct VerifyOptions {
    pub seed: u64,
    pub trials: usize,
    pub parallel: bool,
}

pub fn run_suites(suite: Suite, opts: &VerifyOptions) -> Vec<VerificationReport> {
    let cfg = FuzzConfig { seed: opts.seed, trials: opts.trials, parallel: opts.parallel, ..Default::default() };
    let all = [Suite::Theorem1, Suite::Capacity, Suite::Corollary1, Suite::Lemmas];
    let picked: &[Suite] = if suite == Suite::All { &all } else { std::slice::from_ref(&suite) };
    picked
        .iter()
        .map(|s| match s {
            Suite::Theorem1 => theorem1_fuzz(&cfg),
            Suite::Capacity => capacity_fuzz(&cfg),
            Suite::Corollary1 => corollary1_fuzz(&cfg),
            Suite::Lemmas => check_lemma_suite(opts.seed),
            Suite::All => unreachable!("expanded above"),
        })
        .collect()
}

/// Prints one summary record per suite and fails with exit code 2 if any
/// check failed. Failures go to `dump` as JSON lines.
pub fn verify(
    out: &mut dyn Write,
    suite: Suite,
    opts: &VerifyOptions,
    format: SummaryFormat,
    dump: Option<&Path>,
) -> CliResult<()> {
    let reports = run_suites(suite, opts);
    match format {
        SummaryFormat::Jsonl => {
            for r in &reports {
                let rec = json!({
                    "suite": r.suite,
                    "trials": r.trials,
                    "checks": r.checks,
                    "failures": r.failures.len(),
                    "max_violation": r.max_violation,
                    "passed": r.passed(),
                });
                writeln!(out, "{rec}").map_err(write_err)?;
            }
        }
        SummaryFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            let csv_err = |e: csv::Error| CliError::io("<output>", e.into());
            w.write_record(["suite", "trials", "checks", "failures", "max_violation", "passed"]).map_err(csv_err)?;
            for r in &reports {
                w.write_record([
                    r.suite.clone(),
                    r.trials.to_string(),
                    r.checks.to_string(),
                    r.failures.len().to_string(),
                    sig(r.max_violation),
                    r.passed().to_string(),
                ])
                .map_err(csv_err)?;
            }
            w.flush().map_err(write_err)?;
        }
    }
    if let Some(path) = dump {
        let ioe = |e| CliError::io(path.display().to_string(), e);
        let mut f = BufWriter::new(File::create(path).map_err(ioe)?);
        for fl in reports.iter().flat_map(|r| &r.failures) {
            let line = serde_json::to_string(fl).expect("failure serializes");
            writeln!(f, "{line}").map_err(ioe)?;
        }
        f.flush().map_err(ioe)?;
    }
    let failed: usize = reports.iter().map(|r| r.failures.len()).sum();
    if failed > 0 {
        return Err(CliError::ChecksFailed(failed));
    }
    Ok(())
}
