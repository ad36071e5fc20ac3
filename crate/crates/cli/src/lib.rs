//! The `colpart` command line: counting, verification against products,
//! sweeps over weight families, exponent fitting and dimensions.

pub mod args;
pub mod cache;
pub mod report;
pub mod sweep;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::{self, Write};
use std::time::Instant;

use colpart::counting::dimension;
use colpart::lattice::WeightForm;
use colpart::{
    even_product, fit_exponents, lepowsky_product, parse_residue_spec, PeriodicProduct, WeightVector,
};
use serde_json::json;

use args::{Cli, Command, CountArgs, DimArgs, FitArgs, Format, SweepArgs, VerifyArgs};
use cache::CountCache;
use report::{big, count_values, pairs, python_list, weight_label, Status, VerificationReport};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] colpart::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// Whether a command succeeded (exit 0) or found a failed check (exit 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    Failure,
}

impl Outcome {
    pub fn exit_code(self) -> u8 {
        match self {
            Outcome::Success => 0,
            Outcome::Failure => 1,
        }
    }
}

struct Context<'a> {
    format: Format,
    cache: Option<CountCache>,
    timings: bool,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<Outcome, CliError> {
    let mut ctx = Context {
        format: cli.format,
        cache: cli.cache_dir.clone().map(CountCache::new),
        timings: cli.timings,
        out,
        err,
    };
    match &cli.command {
        Command::Count(a) => cmd_count(&mut ctx, a),
        Command::Verify(a) => cmd_verify(&mut ctx, a),
        Command::Sweep(a) => cmd_sweep(&mut ctx, a),
        Command::Fit(a) => cmd_fit(&mut ctx, a),
        Command::Dim(a) => cmd_dim(&mut ctx, a),
    }
}

/// The conjectured product for a sugared weight.
pub fn auto_product(wv: &WeightVector) -> Result<PeriodicProduct, CliError> {
    match wv.form() {
        WeightForm::Odd(k) => Ok(lepowsky_product(k)?),
        WeightForm::Even(k) => Ok(even_product(k)?),
        WeightForm::Bracket => Err(CliError::Usage(
            "--auto needs --odd or --even; raw brackets have no conjectured product, pass --spec".into(),
        )),
    }
}

/// Counts `wv` to `n_max` and compares with `product`.
pub fn verify(
    cache: Option<&CountCache>,
    wv: &WeightVector,
    n_max: usize,
    product: PeriodicProduct,
) -> Result<VerificationReport, CliError> {
    let start = Instant::now();
    let counts = cache::counts(cache, wv, n_max)?;
    Ok(VerificationReport::new(wv.clone(), product, counts, start.elapsed()))
}

fn n_arg(n: u64) -> Result<usize, CliError> {
    usize::try_from(n).map_err(|_| CliError::Usage(format!("N = {n} is too large")))
}

fn cmd_count(ctx: &mut Context, a: &CountArgs) -> Result<Outcome, CliError> {
    let wv = a.weight.weight()?;
    let n_max = n_arg(a.n)?;
    let start = Instant::now();
    let counts = cache::counts(ctx.cache.as_ref(), &wv, n_max)?;
    if ctx.timings {
        writeln!(ctx.err, "count {wv}: {:.3?}", start.elapsed())?;
    }
    match ctx.format {
        Format::Text => {
            writeln!(ctx.out, "highest_weight = {}", python_list(wv.entries()))?;
            writeln!(ctx.out, "k = {}  w = {}", wv.level(), wv.width())?;
            writeln!(ctx.out, "{}", pairs(&counts))?;
        }
        Format::Json => {
            let v = json!({
                "weight": wv.to_string(),
                "bracket": wv.entries(),
                "k": wv.level(),
                "w": wv.width(),
                "N": n_max,
                "counts": count_values(&counts),
            });
            writeln!(ctx.out, "{}", serde_json::to_string_pretty(&v).expect("serializable"))?;
        }
        Format::Csv => {
            writeln!(ctx.out, "n,count")?;
            for (n, c) in counts.iter() {
                writeln!(ctx.out, "{n},{c}")?;
            }
        }
    }
    Ok(Outcome::Success)
}

fn cmd_verify(ctx: &mut Context, a: &VerifyArgs) -> Result<Outcome, CliError> {
    let wv = a.weight.weight()?;
    let product = match &a.spec {
        Some(text) => parse_residue_spec(text)?,
        None => auto_product(&wv)?,
    };
    let report = verify(ctx.cache.as_ref(), &wv, n_arg(a.n)?, product)?;
    if ctx.timings {
        writeln!(ctx.err, "verify {wv}: {:.3?}", report.runtime)?;
    }
    match ctx.format {
        Format::Text => write!(ctx.out, "{}", report.text())?,
        Format::Json => {
            writeln!(ctx.out, "{}", serde_json::to_string_pretty(&report.json()).expect("serializable"))?
        }
        Format::Csv => write!(ctx.out, "{}", report.csv())?,
    }
    Ok(outcome(report.status.is_verified()))
}

fn outcome(ok: bool) -> Outcome {
    if ok {
        Outcome::Success
    } else {
        Outcome::Failure
    }
}

/// Verifies every weight of the family against its conjectured product,
/// in the family's order.
pub fn run_sweep(
    cache: Option<&CountCache>,
    width: usize,
    level: u32,
    n_max: usize,
) -> Result<Vec<VerificationReport>, CliError> {
    let weights = sweep::family(width, level)?;
    let task = |wv: &WeightVector| verify(cache, wv, n_max, auto_product(wv)?);
    #[cfg(feature = "parallel")]
    let results: Vec<_> = {
        use rayon::prelude::*;
        weights.par_iter().map(task).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let results: Vec<_> = weights.iter().map(task).collect();
    results.into_iter().collect()
}

/// Groups of weights whose products have identical net exponents.
pub fn shared_products(reports: &[VerificationReport]) -> Vec<Vec<&WeightVector>> {
    let mut groups: BTreeMap<(u64, Vec<i64>), Vec<&WeightVector>> = BTreeMap::new();
    for r in reports {
        let key = (r.product.net_modulus(), r.product.net_exponents());
        groups.entry(key).or_default().push(&r.weight);
    }
    let mut shared: Vec<_> = groups.into_values().filter(|g| g.len() > 1).collect();
    let position = |wv: &WeightVector| reports.iter().position(|r| &r.weight == wv);
    shared.sort_by_key(|g| position(g[0]));
    shared
}

fn cmd_sweep(ctx: &mut Context, a: &SweepArgs) -> Result<Outcome, CliError> {
    let width = usize::try_from(a.width).map_err(|_| CliError::Usage("width too large".into()))?;
    let n_max = n_arg(a.n)?;
    let start = Instant::now();
    let reports = run_sweep(ctx.cache.as_ref(), width, a.level, n_max)?;
    if ctx.timings {
        for r in &reports {
            writeln!(ctx.err, "verify {}: {:.3?}", r.weight, r.runtime)?;
        }
        writeln!(ctx.err, "sweep: {:.3?}", start.elapsed())?;
    }
    let tally = |label: &str| reports.iter().filter(|r| r.status.label() == label).count();
    let (verified, mismatched, short) = (tally("verified"), tally("mismatch"), tally("insufficient-N"));
    match ctx.format {
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "sweep w = {width}  k = {}  N = {n_max}", a.level).unwrap();
            let name_width = reports.iter().map(|r| r.weight.to_string().len()).max().unwrap_or(0);
            let product_width = reports.iter().map(|r| r.product.to_string().len()).max().unwrap_or(0);
            for r in &reports {
                writeln!(
                    s,
                    "{:<name_width$}  {:<product_width$}  {}",
                    r.weight.to_string(),
                    r.product.to_string(),
                    r.status_detail()
                )
                .unwrap();
            }
            for group in shared_products(&reports) {
                let names: Vec<String> = group.iter().map(ToString::to_string).collect();
                writeln!(s, "same product: {}", names.join(" ")).unwrap();
            }
            writeln!(s, "{verified} verified, {mismatched} mismatch, {short} insufficient-N").unwrap();
            write!(ctx.out, "{s}")?;
        }
        Format::Json => {
            let shared: Vec<Vec<String>> = shared_products(&reports)
                .iter()
                .map(|g| g.iter().map(ToString::to_string).collect())
                .collect();
            let v = json!({
                "w": width,
                "k": a.level,
                "N": n_max,
                "reports": reports.iter().map(VerificationReport::json).collect::<Vec<_>>(),
                "shared_products": shared,
                "verified": verified,
                "mismatch": mismatched,
                "insufficient_N": short,
            });
            writeln!(ctx.out, "{}", serde_json::to_string_pretty(&v).expect("serializable"))?;
        }
        Format::Csv => {
            writeln!(ctx.out, "weight,product,modulus,status,first_mismatch")?;
            for r in &reports {
                let first = match &r.status {
                    Status::Mismatch { n, .. } => n.to_string(),
                    _ => String::new(),
                };
                writeln!(
                    ctx.out,
                    "\"{}\",\"{}\",{},{},{first}",
                    r.weight,
                    r.product,
                    r.product.net_modulus(),
                    r.status.label()
                )?;
            }
        }
    }
    Ok(outcome(verified == reports.len()))
}

fn cmd_fit(ctx: &mut Context, a: &FitArgs) -> Result<Outcome, CliError> {
    let wv = a.weight.weight()?;
    let n_max = n_arg(a.n)?;
    let max_modulus = match a.max_modulus {
        Some(m) => n_arg(m)?,
        None => n_max / 2,
    };
    let start = Instant::now();
    let counts = cache::counts(ctx.cache.as_ref(), &wv, n_max)?;
    let fit = fit_exponents(&counts.to_series(), max_modulus)?;
    if ctx.timings {
        writeln!(ctx.err, "fit {wv}: {:.3?}", start.elapsed())?;
    }
    let product = fit.to_product();
    match ctx.format {
        Format::Text => {
            writeln!(ctx.out, "highest_weight = {}", weight_label(&wv))?;
            writeln!(ctx.out, "k = {}  w = {}  N = {n_max}", wv.level(), wv.width())?;
            writeln!(ctx.out, "exponents = {}", python_list(fit.exponents()))?;
            match fit.detected_period() {
                Some(m) => {
                    writeln!(ctx.out, "period = {m}")?;
                    if let Some(classes) = fit.to_class_list() {
                        writeln!(ctx.out, "classes = {classes}")?;
                    }
                    if let Some(p) = &product {
                        writeln!(ctx.out, "product = {p}")?;
                    }
                }
                None => writeln!(ctx.out, "no period <= max_modulus ({max_modulus})")?,
            }
        }
        Format::Json => {
            let v = json!({
                "weight": wv.to_string(),
                "bracket": wv.entries(),
                "N": n_max,
                "max_modulus": max_modulus,
                "exponents": fit.exponents().iter().map(big).collect::<Vec<_>>(),
                "period": fit.detected_period(),
                "classes": fit.to_class_list(),
                "product": product.as_ref().map(ToString::to_string),
            });
            writeln!(ctx.out, "{}", serde_json::to_string_pretty(&v).expect("serializable"))?;
        }
        Format::Csv => {
            writeln!(ctx.out, "j,exponent")?;
            for (i, e) in fit.exponents().iter().enumerate() {
                writeln!(ctx.out, "{},{e}", i + 1)?;
            }
        }
    }
    Ok(Outcome::Success)
}

fn cmd_dim(ctx: &mut Context, a: &DimArgs) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let dim = dimension(&a.weight)?;
    if ctx.timings {
        writeln!(ctx.err, "dim {}: {:.3?}", python_list(&a.weight), start.elapsed())?;
    }
    match ctx.format {
        Format::Text => writeln!(ctx.out, "dim L {}  =  {dim}", python_list(&a.weight))?,
        Format::Json => {
            let v = json!({ "weight": a.weight, "dimension": big(&dim) });
            writeln!(ctx.out, "{}", serde_json::to_string_pretty(&v).expect("serializable"))?;
        }
        Format::Csv => writeln!(ctx.out, "weight,dimension\n\"{}\",{dim}", python_list(&a.weight))?,
    }
    Ok(Outcome::Success)
}
