//! Subcommand implementations. Every command renders to text, CSV or JSON
//! with 12-significant-digit floats and returns its exit code: 0 on
//! success, 1 when a verdict is violated or a table cell mismatches.

use std::path::{Path, PathBuf};

use serde_json::{json, Value};
use spectral_core::domain::{
    BoundaryKind2D, BoundaryPair, Descriptor1D, Potential1D,
};
use spectral_core::report::{InequalityReport, Verdict};
use spectral_core::step_analytic::{self, TableCell, TableSolver};
use spectral_core::{eig1d, fem2d, perturbation, verify1d};

use crate::config::{
    self, FlowConfig, QuotientConfig, Spectrum1dConfig, Spectrum2dConfig, Verify1dConfig,
    Verify2dConfig,
};
use crate::fmt::{fmt_f64, json_f64, json_f64_slice, render_table};
use crate::{CliError, Format, SolverChoice};

fn emit(text: String, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Config(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn solver_err(e: spectral_core::SpectralError) -> CliError {
    CliError::Solver(e)
}

// ----- table1 -----

fn table_rows_json(mu: &[TableCell], lambda: &[TableCell]) -> Value {
    let row = |cells: &[TableCell]| {
        Value::Array(
            cells
                .iter()
                .map(|c| {
                    json!({
                        "c": json_f64(c.c),
                        "computed_sqrt": json_f64(c.computed_sqrt),
                        "published_sqrt": json_f64(c.published_sqrt),
                        "decimals": c.decimals,
                        "matches_published": c.matches_published,
                    })
                })
                .collect(),
        )
    };
    json!({ "sqrt_mu2": row(mu), "sqrt_lambda1": row(lambda) })
}

pub fn cmd_table1(
    solver: SolverChoice,
    format: Format,
    out: Option<PathBuf>,
) -> Result<i32, CliError> {
    let (mu, lambda) = step_analytic::reference_table(match solver {
        SolverChoice::Analytic => TableSolver::Analytic,
        SolverChoice::Fd => TableSolver::FiniteDifference,
    })
    .map_err(solver_err)?;

    // analytic: exit 0 iff every cell matches the published digits;
    // fd: exit 0 iff the finite-difference row agrees with the analytic
    // solver within 1e-3 in the square roots
    let exit = match solver {
        SolverChoice::Analytic => {
            let all = mu.iter().chain(&lambda).all(|c| c.matches_published);
            i32::from(!all)
        }
        SolverChoice::Fd => {
            let (mu_an, lam_an) =
                step_analytic::reference_table(TableSolver::Analytic).map_err(solver_err)?;
            let agree = mu
                .iter()
                .chain(&lambda)
                .zip(mu_an.iter().chain(&lam_an))
                .all(|(f, a)| (f.computed_sqrt - a.computed_sqrt).abs() <= 1e-3);
            i32::from(!agree)
        }
    };

    let text = match format {
        Format::Json => {
            let v = json!({
                "solver": match solver { SolverChoice::Analytic => "analytic", SolverChoice::Fd => "fd" },
                "table": table_rows_json(&mu, &lambda),
                "all_match_published": mu.iter().chain(&lambda).all(|c| c.matches_published),
            });
            format!("{}\n", serde_json::to_string_pretty(&v).expect("serializable"))
        }
        Format::Csv => {
            let mut s = String::from("row,c,computed_sqrt,published_sqrt,decimals,matches\n");
            for (name, cells) in [("sqrt_mu2", &mu), ("sqrt_lambda1", &lambda)] {
                for c in cells.iter() {
                    s.push_str(&format!(
                        "{name},{},{},{},{},{}\n",
                        fmt_f64(c.c),
                        fmt_f64(c.computed_sqrt),
                        fmt_f64(c.published_sqrt),
                        c.decimals,
                        c.matches_published
                    ));
                }
            }
            s
        }
        Format::Text => {
            let mut rows = Vec::new();
            for (name, cells) in [("sqrt(mu_2)", &mu), ("sqrt(lambda_1)", &lambda)] {
                for c in cells.iter() {
                    rows.push(vec![
                        name.to_string(),
                        format!("{:.0e}", c.c),
                        format!("{:.6}", c.computed_sqrt),
                        format!("{}", c.published_sqrt),
                        if c.matches_published { "match" } else { "MISMATCH" }.to_string(),
                    ]);
                }
            }
            render_table(&["row", "c", "computed", "published", "status"], &rows)
        }
    };
    emit(text, out.as_deref())?;
    Ok(exit)
}

// ----- spectrum1d -----

fn parse_bc_pair(s: &str) -> Result<BoundaryPair, CliError> {
    BoundaryPair::parse(s)
        .ok_or_else(|| CliError::Config(format!("boundary condition `{s}` is not one of dd/nn/dn/nd")))
}

/// The analytic solver covers the canonical step geometry: (0, 2) with a
/// single jump at 1 down to 0.
fn step_height(v: &Potential1D) -> Option<f64> {
    let d = v.domain();
    if (d.a(), d.b()) != (0.0, 2.0) {
        return None;
    }
    match v.descriptor() {
        Descriptor1D::PiecewiseConstant {
            breakpoints,
            values,
        } if breakpoints == &[1.0] && values.len() == 2 && values[1] == 0.0 && values[0] > 0.0 => {
            Some(values[0])
        }
        _ => None,
    }
}

fn spectrum_json(spec: &spectral_core::domain::SpectrumResult, extra: Value) -> Value {
    let mut v = json!({
        "eigenvalues": json_f64_slice(&spec.eigenvalues),
        "error_estimate": json_f64_slice(&spec.error_estimate),
        "count_requested": spec.count_requested,
        "lowest_near_degenerate": spec.lowest_near_degenerate,
    });
    if let (Value::Object(map), Value::Object(extra)) = (&mut v, extra) {
        map.extend(extra);
    }
    v
}

fn render_spectrum(
    spec: &spectral_core::domain::SpectrumResult,
    label: &str,
    format: Format,
    extra: Value,
) -> String {
    match format {
        Format::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(&spectrum_json(spec, extra)).expect("serializable")
        ),
        Format::Csv => {
            let mut s = String::from("k,eigenvalue,error_estimate\n");
            for (i, (l, e)) in spec.eigenvalues.iter().zip(&spec.error_estimate).enumerate() {
                s.push_str(&format!("{},{},{}\n", i + 1, fmt_f64(*l), fmt_f64(*e)));
            }
            s
        }
        Format::Text => {
            let rows: Vec<Vec<String>> = spec
                .eigenvalues
                .iter()
                .zip(&spec.error_estimate)
                .enumerate()
                .map(|(i, (l, e))| {
                    vec![format!("{}", i + 1), fmt_f64(*l), format!("{e:.2e}")]
                })
                .collect();
            format!(
                "{label}\n{}",
                render_table(&["k", "eigenvalue", "error"], &rows)
            )
        }
    }
}

pub fn cmd_spectrum1d(
    cfg: Spectrum1dConfig,
    k_flag: Option<usize>,
    tol_flag: Option<f64>,
    solver: SolverChoice,
    format: Format,
    out: Option<PathBuf>,
) -> Result<i32, CliError> {
    let dom = cfg.domain.interval()?;
    let v = cfg.potential.build_1d(dom)?;
    let k = config::validate_k(k_flag.unwrap_or(cfg.k))?;
    let tol = config::validate_tol(tol_flag.unwrap_or(cfg.tol))?;
    let bc = parse_bc_pair(&cfg.bc)?;
    let spec = match solver {
        SolverChoice::Fd => eig1d::solve(&v, dom, bc, k, tol).map_err(solver_err)?,
        SolverChoice::Analytic => {
            let c = step_height(&v).ok_or_else(|| {
                CliError::Config(
                    "the analytic solver covers the step potential on (0, 2) with a \
                     single jump at 1; use --solver fd otherwise"
                        .into(),
                )
            })?;
            let bc_kind = match bc {
                BoundaryPair::DD => spectral_core::domain::BoundaryCondition::Dirichlet,
                BoundaryPair::NN => spectral_core::domain::BoundaryCondition::Neumann,
                other => {
                    return Err(CliError::Config(format!(
                        "analytic step spectra exist for dd/nn only, got {other}"
                    )))
                }
            };
            step_analytic::step_spectrum(c, bc_kind, k).map_err(solver_err)?
        }
    };
    let label = format!("spectrum1d bc={bc} k={k}");
    let extra = json!({ "bc": format!("{bc}"), "tol": json_f64(tol) });
    emit(render_spectrum(&spec, &label, format, extra), out.as_deref())?;
    Ok(0)
}

// ----- spectrum2d -----

fn parse_bc_2d(s: &str) -> Result<BoundaryKind2D, CliError> {
    match s.to_ascii_lowercase().as_str() {
        "dirichlet" | "d" => Ok(BoundaryKind2D::Dirichlet),
        "neumann" | "n" => Ok(BoundaryKind2D::Neumann),
        other => Err(CliError::Config(format!(
            "boundary condition `{other}` is not dirichlet/neumann"
        ))),
    }
}

pub fn cmd_spectrum2d(
    cfg: Spectrum2dConfig,
    k_flag: Option<usize>,
    level_flag: Option<u32>,
    export_mesh: Option<PathBuf>,
    format: Format,
    out: Option<PathBuf>,
) -> Result<i32, CliError> {
    let poly = cfg.domain.polygon()?;
    let v = cfg.potential.build_2d(&poly)?;
    let k = config::validate_k(k_flag.unwrap_or(cfg.k))?;
    let level = config::validate_level(level_flag.unwrap_or(cfg.mesh_level))?;
    let bc = parse_bc_2d(&cfg.bc)?;
    if let Some(path) = export_mesh {
        let mesh = fem2d::mesh_polygon(&poly, level).map_err(solver_err)?;
        std::fs::write(&path, mesh.to_off())
            .map_err(|e| CliError::Config(format!("cannot write {}: {e}", path.display())))?;
    }
    let spec = fem2d::solve_polygon(&v, &poly, bc, k, level).map_err(solver_err)?;
    let label = format!("spectrum2d bc={bc} k={k} level={level}");
    let extra = json!({ "bc": format!("{bc}"), "mesh_level": level });
    emit(render_spectrum(&spec, &label, format, extra), out.as_deref())?;
    Ok(0)
}

// ----- verify -----

fn report_json(r: &InequalityReport) -> Value {
    json!({
        "theorem": format!("{}", r.theorem),
        "label": r.label,
        "applicable": r.applicable,
        "reason": r.reason,
        "lhs": json_f64(r.lhs),
        "rhs": json_f64(r.rhs),
        "margin": json_f64(r.margin),
        "error_budget": json_f64(r.error_budget),
        "verdict": format!("{}", r.verdict),
    })
}

fn render_reports(reports: &[InequalityReport], format: Format) -> String {
    match format {
        Format::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(&Value::Array(
                reports.iter().map(report_json).collect()
            ))
            .expect("serializable")
        ),
        Format::Csv => {
            let mut s = String::from("theorem,label,verdict,lhs,rhs,margin,error_budget\n");
            for r in reports {
                s.push_str(&format!(
                    "{},{},{},{},{},{},{}\n",
                    r.theorem,
                    r.label.replace(',', ";"),
                    r.verdict,
                    fmt_f64(r.lhs),
                    fmt_f64(r.rhs),
                    fmt_f64(r.margin),
                    fmt_f64(r.error_budget)
                ));
            }
            s
        }
        Format::Text => {
            let rows: Vec<Vec<String>> = reports
                .iter()
                .map(|r| {
                    vec![
                        format!("{}", r.theorem),
                        r.label.clone(),
                        format!("{}", r.verdict),
                        if r.lhs.is_nan() { "-".into() } else { format!("{:.6}", r.lhs) },
                        if r.rhs.is_nan() { "-".into() } else { format!("{:.6}", r.rhs) },
                        if r.margin.is_nan() { "-".into() } else { format!("{:+.3e}", r.margin) },
                        r.reason.clone(),
                    ]
                })
                .collect();
            render_table(
                &["theorem", "case", "verdict", "lhs", "rhs", "margin", "detail"],
                &rows,
            )
        }
    }
}

fn verdict_exit(reports: &[InequalityReport]) -> i32 {
    i32::from(reports.iter().any(|r| r.verdict == Verdict::Violated))
}

pub fn cmd_verify1d(
    cfg: Verify1dConfig,
    format: Format,
    out: Option<PathBuf>,
) -> Result<i32, CliError> {
    let dom = cfg.domain.interval()?;
    let wanted = |tag: &str| {
        cfg.checks
            .as_ref()
            .map_or(true, |list| list.iter().any(|c| c == tag))
    };
    if let Some(list) = &cfg.checks {
        for c in list {
            if !["L3.2", "T3.3", "R3.5"].contains(&c.as_str()) {
                return Err(CliError::Config(format!(
                    "unknown check `{c}` (expected L3.2, T3.3 or R3.5)"
                )));
            }
        }
    }
    let mut reports = Vec::new();
    for (idx, pc) in cfg.potentials.iter().enumerate() {
        let v = pc.build_1d(dom)?;
        let tag = |r: InequalityReport| InequalityReport {
            label: format!("potential {idx}: {}", r.label),
            ..r
        };
        if wanted("L3.2") {
            reports.push(tag(verify1d::check_lemma32(&v, dom).map_err(solver_err)?));
        }
        if wanted("T3.3") {
            reports.push(tag(
                verify1d::check_thm33(&v, dom).map_err(solver_err)?.inequality
            ));
        }
        if wanted("R3.5") {
            reports.push(tag(
                verify1d::check_higher_remark(&v, dom)
                    .map_err(solver_err)?
                    .inequality,
            ));
        }
    }
    let exit = verdict_exit(&reports);
    emit(render_reports(&reports, format), out.as_deref())?;
    Ok(exit)
}

pub fn cmd_verify2d(
    cfg: Verify2dConfig,
    k_flag: Option<usize>,
    level_flag: Option<u32>,
    format: Format,
    out: Option<PathBuf>,
) -> Result<i32, CliError> {
    let poly = cfg.domain.polygon()?;
    let v = cfg.potential.build_2d(&poly)?;
    let k = config::validate_k(k_flag.unwrap_or(cfg.k))?;
    let level = config::validate_level(level_flag.unwrap_or(cfg.mesh_level))?;
    let symmetric = cfg.symmetric.unwrap_or(true);
    let mut reports = fem2d::check_thm42(&v, &poly, k, level).map_err(solver_err)?;
    reports.extend(fem2d::check_thm44_45(&v, &poly, symmetric, level).map_err(solver_err)?);
    let exit = verdict_exit(&reports);
    emit(render_reports(&reports, format), out.as_deref())?;
    Ok(exit)
}

// ----- flow -----

pub fn cmd_flow(cfg: FlowConfig, format: Format, out: Option<PathBuf>) -> Result<i32, CliError> {
    let dom = cfg.domain.interval()?;
    let v = cfg.potential.build_1d(dom)?;
    let k = config::validate_k(cfg.k)?;
    let flow = perturbation::trace_flow(&v, dom, k, cfg.tau_min, cfg.tau_max, cfg.steps)
        .map_err(solver_err)?;
    let text = match format {
        Format::Json => {
            let records: Vec<Value> = flow
                .records
                .iter()
                .map(|r| {
                    json!({
                        "tau": json_f64(r.tau),
                        "mu": json_f64_slice(&r.mu),
                        "lambda": json_f64_slice(&r.lambda),
                        "gap": json_f64_slice(&r.gap),
                    })
                })
                .collect();
            let crossings: Vec<Value> = flow
                .crossings
                .iter()
                .map(|c| {
                    json!({
                        "k": c.k,
                        "tau_star": json_f64(c.tau_star),
                        "bracket": [json_f64(c.bracket.0), json_f64(c.bracket.1)],
                    })
                })
                .collect();
            format!(
                "{}\n",
                serde_json::to_string_pretty(&json!({
                    "records": records,
                    "crossings": crossings,
                    "truncated": flow.truncated,
                }))
                .expect("serializable")
            )
        }
        // the flow is a curve; text output is the same CSV
        Format::Csv | Format::Text => {
            let mut s = String::from("tau");
            for j in 1..=k + 1 {
                s.push_str(&format!(",mu_{j}"));
            }
            for j in 1..=k {
                s.push_str(&format!(",lambda_{j}"));
            }
            for j in 1..=k {
                s.push_str(&format!(",g_{j}"));
            }
            s.push('\n');
            for r in &flow.records {
                s.push_str(&fmt_f64(r.tau));
                for x in r.mu.iter().chain(&r.lambda).chain(&r.gap) {
                    s.push(',');
                    s.push_str(&fmt_f64(*x));
                }
                s.push('\n');
            }
            for c in &flow.crossings {
                s.push_str(&format!(
                    "# crossing k={} tau={} bracket=[{},{}]\n",
                    c.k,
                    fmt_f64(c.tau_star),
                    fmt_f64(c.bracket.0),
                    fmt_f64(c.bracket.1)
                ));
            }
            if flow.truncated {
                s.push_str("# curve truncated by a solver failure\n");
            }
            s
        }
    };
    emit(text, out.as_deref())?;
    Ok(0)
}

// ----- quotient -----

pub fn cmd_quotient(
    cfg: QuotientConfig,
    seed: Option<u64>,
    format: Format,
    out: Option<PathBuf>,
) -> Result<i32, CliError> {
    let dom = cfg.domain.interval()?;
    let v = cfg.potential.build_1d(dom)?;
    let tau = cfg.tau.unwrap_or(1.0);
    let seed = seed.unwrap_or(eig1d::EIGENVECTOR_SEED);
    let r = verify1d::quotient_diagnostic_with_seed(&v, dom, tau, seed).map_err(solver_err)?;
    let text = match format {
        Format::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(&json!({
                "lambda_dn": json_f64(r.lambda_dn),
                "lambda_nd": json_f64(r.lambda_nd),
                "precondition_holds": r.precondition_holds,
                "monotone_decreasing": r.monotone_decreasing,
                "violations": r.violations,
                "crossing": r.crossing.map(json_f64).unwrap_or(Value::Null),
                "crossing_count": r.crossing_count,
                "nodes_used": r.nodes_used,
            }))
            .expect("serializable")
        ),
        Format::Csv | Format::Text => {
            let mut s = String::new();
            s.push_str(&format!("lambda_1^DN = {}\n", fmt_f64(r.lambda_dn)));
            s.push_str(&format!("lambda_1^ND = {}\n", fmt_f64(r.lambda_nd)));
            s.push_str(&format!("precondition (DN <= ND): {}\n", r.precondition_holds));
            match r.monotone_decreasing {
                Some(m) => {
                    s.push_str(&format!(
                        "quotient strictly decreasing: {m} ({} violations over {} nodes)\n",
                        r.violations, r.nodes_used
                    ));
                    match r.crossing {
                        Some(x) => s.push_str(&format!(
                            "unique squared-eigenfunction crossing at x = {}\n",
                            fmt_f64(x)
                        )),
                        None => s.push_str(&format!(
                            "crossing count: {} (expected exactly 1)\n",
                            r.crossing_count
                        )),
                    }
                }
                None => s.push_str("diagnostic skipped (precondition regime not met)\n"),
            }
            s
        }
    };
    emit(text, out.as_deref())?;
    Ok(0)
}
