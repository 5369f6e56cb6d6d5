//! Command implementations. Each returns the process exit code; the
//! report (or error object) has already been written when it returns.
//!
//! Exit codes: 0 = all checks passed; 2 = a hypothesis (or probe flag)
//! failed but the run itself was sound; 1 = evaluation error, or the
//! impossible "hypothesis held but conclusion did not"; 64 = unusable
//! flags or configuration.

use std::fs;
use std::path::{Path, PathBuf};

use gft::{
    alpha_mean, check_thm1, check_thm2, check_thm3, check_thm4, check_thm5, eval_expr,
    example_end_to_end, random_probe_suite, ray_distance, sup_on_circle, sup_on_disk, AlphaMode,
    ClassMember, Error, ExampleId, ExprKind, Reduce, Result, SamplingConfig, TheoremReport,
};

use crate::args::{
    ExampleArgs, FieldArgs, JackProbeArgs, OutputArgs, OutputFormat, SamplingArgs, SupArgs,
    VerifyArgs,
};
use crate::parse;

/// Write `text` to the chosen sink (file or stdout).
fn write_out(text: &str, output: Option<&Path>) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text)
            .map_err(|e| Error::Config(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn render_report(report: &TheoremReport, out: &OutputArgs) -> Result<()> {
    let text = match out.format {
        OutputFormat::Json => report.to_json_string(),
        OutputFormat::Csv => format!("{}\n{}\n", TheoremReport::csv_header(), report.to_csv_row()),
    };
    write_out(&text, out.output.as_deref())
}

/// 0 if both verdicts hold, 2 on hypothesis failure, 1 when the
/// hypothesis held but the concluded bound was still exceeded (that
/// combination contradicts the underlying inequality, so it is treated
/// as an error, not a verdict).
fn verdict_code(report: &TheoremReport) -> i32 {
    match (report.hypothesis_ok, report.conclusion_ok) {
        (true, true) => 0,
        (false, _) => 2,
        (true, false) => 1,
    }
}

fn build_member(coeffs: Option<&str>, coeff_file: Option<&PathBuf>) -> Result<ClassMember> {
    match (coeffs, coeff_file) {
        (Some(inline), None) => parse::parse_member(inline),
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
            ClassMember::new(gft::PowerPoly::from_coeff_lines(&text)?)
        }
        (None, None) => Err(Error::Config(
            "a function is required: pass --coeffs or --coeff-file".into(),
        )),
        (Some(_), Some(_)) => Err(Error::Config(
            "pass exactly one of --coeffs and --coeff-file".into(),
        )),
    }
}

fn build_config(sampling: &SamplingArgs) -> Result<SamplingConfig> {
    let mut cfg = SamplingConfig::for_epsilon(sampling.epsilon)?;
    cfg.angular_samples = sampling.angular_samples;
    cfg.refine_iters = sampling.refine_iters;
    cfg.inner_cutoff = sampling.inner_cutoff;
    cfg.validate()?;
    Ok(cfg)
}

pub fn cmd_verify(args: &VerifyArgs) -> Result<i32> {
    let f = build_member(
        args.source.coeffs.as_deref(),
        args.source.coeff_file.as_ref(),
    )?;
    let cfg = build_config(&args.sampling)?;
    let points = parse::parse_points(&args.points)?;
    let mode = if args.theorem == 5 {
        AlphaMode::FOverZMean
    } else {
        AlphaMode::DerivativeMean
    };
    let spec = alpha_mean(&f, &points, mode)?.with_rho(args.rho)?;
    let report = match args.theorem {
        1 => check_thm1(&f, &spec, &cfg)?,
        2 => check_thm2(&f, &spec, &cfg)?,
        3 => check_thm3(&f, &spec, &cfg)?,
        4 => check_thm4(&f, &spec, &cfg, args.ray_tol)?,
        5 => check_thm5(&f, &spec, &cfg)?,
        other => return Err(Error::Config(format!("no such theorem: {other}"))),
    };
    render_report(&report, &args.output)?;
    Ok(verdict_code(&report))
}

pub fn cmd_example(args: &ExampleArgs) -> Result<i32> {
    let id = match args.id {
        1 => ExampleId::Ex1,
        2 => ExampleId::Ex2,
        5 => ExampleId::Ex5,
        other => {
            return Err(Error::Config(format!(
                "no worked construction with id {other}; choose 1, 2 or 5"
            )))
        }
    };
    let cfg = build_config(&args.sampling)?;
    let a = parse::parse_complex(&args.a)?;
    let report = example_end_to_end(id, args.n, a, &cfg)?;
    render_report(&report, &args.output)?;
    Ok(verdict_code(&report))
}

pub fn cmd_jack_probe(args: &JackProbeArgs) -> Result<i32> {
    let cfg = build_config(&args.sampling)?;
    let radii = parse::parse_real_list(&args.r)?;
    let summary = random_probe_suite(
        args.seed,
        args.trials,
        args.n_min..=args.n_max,
        args.degree_min..=args.degree_max,
        &radii,
        args.tol,
        &cfg,
    )?;
    write_out(&summary.to_json_string(), args.output.output.as_deref())?;
    Ok(if summary.all_passed() { 0 } else { 2 })
}

/// Default scalar reduction for an expression: the third expression is
/// compared through its real part everywhere else in the tool, the rest
/// through the modulus.
fn default_reduce(kind: ExprKind) -> Reduce {
    if matches!(kind, ExprKind::T3) {
        Reduce::RealPart
    } else {
        Reduce::Modulus
    }
}

pub fn cmd_sup(args: &SupArgs) -> Result<i32> {
    let f = build_member(
        args.source.coeffs.as_deref(),
        args.source.coeff_file.as_ref(),
    )?;
    let cfg = build_config(&args.sampling)?;
    let kind = parse::parse_kind(&args.kind)?;
    let reduce = match args.reduce.as_deref() {
        None => default_reduce(kind),
        Some("modulus") => Reduce::Modulus,
        Some("real") => Reduce::RealPart,
        Some(other) => {
            return Err(Error::Config(format!(
                "unknown reduction {other:?}; expected modulus or real"
            )))
        }
    };
    let estimate = match (args.radius, args.disk) {
        (Some(r), false) => sup_on_circle(kind, &f, r, &cfg, reduce)?,
        (None, true) => sup_on_disk(kind, &f, &cfg, reduce)?,
        _ => {
            return Err(Error::Config(
                "pass exactly one of --radius R and --disk".into(),
            ))
        }
    };
    let mut text = serde_json::to_string_pretty(&estimate).expect("supremum estimate serializes");
    text.push('\n');
    write_out(&text, args.output.output.as_deref())?;
    Ok(0)
}

pub fn cmd_field(args: &FieldArgs) -> Result<i32> {
    if args.grid < 16 {
        return Err(Error::Config(format!(
            "grid resolution must be at least 16, got {}",
            args.grid
        )));
    }
    if !(args.epsilon > 0.0 && args.epsilon < 1.0) {
        return Err(Error::Config(format!(
            "epsilon must lie in (0, 1), got {}",
            args.epsilon
        )));
    }
    let f = build_member(
        args.source.coeffs.as_deref(),
        args.source.coeff_file.as_ref(),
    )?;
    let kind = parse::parse_kind(&args.kind)?;
    let n = f.n();
    let r_max_sq = (1.0 - args.epsilon) * (1.0 - args.epsilon);

    let grid = args.grid;
    let coord = |index: usize| -1.0 + 2.0 * index as f64 / (grid - 1) as f64;
    let mut text = String::from("x,y,value\n");
    for i in 0..grid {
        let y = coord(i);
        for j in 0..grid {
            let x = coord(j);
            let mut value = None;
            if x * x + y * y <= r_max_sq {
                if let Ok(v) = eval_expr(kind, &f, gft::Complex64::new(x, y)) {
                    value = Some(match kind {
                        ExprKind::T3 => v.re,
                        ExprKind::T4 => ray_distance(v, n),
                        _ => v.norm(),
                    });
                }
            }
            match value {
                Some(v) => text.push_str(&format!("{x},{y},{v}\n")),
                None => text.push_str(&format!("{x},{y},\n")),
            }
        }
    }
    write_out(&text, args.output.as_deref())?;
    Ok(0)
}
