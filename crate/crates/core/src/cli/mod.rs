//! Command-line front end: theory files in, exact `key = value` reports out.

mod report;
mod theory_file;

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::anomaly::{
    anomaly_polynomial, classify, classify_monomial, gauge_obstruction, solve_r,
    t_background_obstruction, table_rows, theory_report, AnomalyReport, MonomialClass,
    SolveOutcome, SolveTarget,
};
use crate::charclasses::pushforward_curve;
use crate::duality::{electric_template, match_anomalies, SqcdSpec};
use crate::error::{Error, Result};
use crate::exactring::{parse_rational, Rational};
use crate::theory::{twist_content, Theory};

pub use report::{ReportDocument, ReportValue};
pub use theory_file::{parse_theory_file, render_theory_file};

#[derive(Debug, Parser)]
#[command(name = "holanom", version, about = "Exact anomalies of holomorphically twisted theories")]
pub struct Cli {
    /// Emit a JSON object instead of `key = value` lines.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Classified anomaly of a theory file.
    Compute { file: PathBuf },
    /// Central charges of the basic multiplets.
    Table,
    /// Anomaly-free SQCD.
    Qcd {
        #[arg(long)]
        colors: u32,
        #[arg(long)]
        flavors: u32,
    },
    /// Anomaly matching between SQCD and its Seiberg dual.
    Seiberg {
        #[arg(long)]
        colors: u32,
        #[arg(long)]
        flavors: u32,
    },
    /// R-charges of the marked multiplets that cancel the targeted coefficients.
    SolveR {
        file: PathBuf,
        /// A monomial such as `g1*s2`, or `all-mixed`.
        #[arg(long, default_value = "all-mixed")]
        target: String,
    },
    /// Anomaly after compactifying a surface theory along a curve.
    Compactify {
        file: PathBuf,
        /// Holomorphic Euler characteristic of the curve.
        #[arg(long = "fiber-chi", allow_hyphen_values = true)]
        fiber_chi: String,
    },
}

/// Process-level result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn exit_code(error: &Error) -> i32 {
    match error {
        Error::Parse { .. } => 2,
        _ => 1,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = if e.use_stderr() { 2 } else { 0 };
            return if code == 0 {
                Outcome { stdout: text, stderr: String::new(), code }
            } else {
                Outcome { stdout: String::new(), stderr: text, code }
            };
        }
    };
    match execute(&cli.command) {
        Ok(doc) => Outcome {
            stdout: doc.render(cli.json),
            stderr: String::new(),
            code: 0,
        },
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: exit_code(&e),
        },
    }
}

pub fn execute(command: &Command) -> Result<ReportDocument> {
    match command {
        Command::Compute { file } => compute(&load(file)?),
        Command::Table => table(),
        Command::Qcd { colors, flavors } => qcd(&SqcdSpec::new(*colors, *flavors)?),
        Command::Seiberg { colors, flavors } => seiberg(&SqcdSpec::new(*colors, *flavors)?),
        Command::SolveR { file, target } => solve(&load(file)?, &target.parse()?),
        Command::Compactify { file, fiber_chi } => {
            let chi = parse_rational(fiber_chi).map_err(|e| Error::parse(0, e.to_string()))?;
            compactify(&load(file)?, &chi)
        }
    }
}

fn load(path: &Path) -> Result<Theory> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::config(format!("cannot read {}: {e}", path.display())))?;
    parse_theory_file(&text)
}

/// Coefficients of every degree-`(2n+2)` monomial, grouped and in a fixed
/// order, followed by the obstruction flags.
fn push_buckets(doc: &mut ReportDocument, report: &AnomalyReport) -> Result<()> {
    let ctx = report.full.context();
    let monomials = ctx.monomials_of_degree(2 * report.n + 2);
    let groups = [
        (MonomialClass::Gravitational, "grav"),
        (MonomialClass::PureGauge, "gauge"),
        (MonomialClass::Mixed, "mixed"),
    ];
    for (class, prefix) in groups {
        if class == MonomialClass::Gravitational && report.n <= 2 {
            continue;
        }
        for m in &monomials {
            if classify_monomial(ctx, m)? == class {
                doc.push(
                    format!("{prefix}.{}", ctx.format_monomial(m)),
                    report.full.coefficient(m)?,
                );
            }
        }
    }
    doc.push("gauge_free", gauge_obstruction(report).is_free);
    doc.push("t_free", t_background_obstruction(report).obstruction.is_free);
    Ok(())
}

/// The report of a classified anomaly.
pub fn report_document(report: &AnomalyReport) -> Result<ReportDocument> {
    let mut doc = ReportDocument::new();
    if let (Some(a_hol), Some(c_hol)) = (&report.a_hol, &report.c_hol) {
        let (a, c) = report.physical_ac().expect("both holomorphic values are present");
        doc.push("a_hol", a_hol);
        doc.push("c_hol", c_hol);
        doc.push("a", a);
        doc.push("c", c);
    }
    if let Some(vc) = &report.virasoro_c {
        doc.push("virasoro_c", vc);
    }
    push_buckets(&mut doc, report)?;
    doc.push("anomaly", report.full.to_string());
    Ok(doc)
}

pub fn compute(theory: &Theory) -> Result<ReportDocument> {
    report_document(&theory_report(theory)?)
}

pub fn table() -> Result<ReportDocument> {
    let mut doc = ReportDocument::new();
    for row in table_rows()? {
        doc.push(format!("{}.a", row.key), row.a);
        doc.push(format!("{}.c", row.key), row.c);
        doc.push(format!("{}.a_hol", row.key), row.a_hol);
        doc.push(format!("{}.c_hol", row.key), row.c_hol);
    }
    Ok(doc)
}

pub fn qcd(spec: &SqcdSpec) -> Result<ReportDocument> {
    let template = electric_template(spec)?;
    let r = match solve_r(&template, &SolveTarget::AllMixed)? {
        SolveOutcome::Roots { roots, .. } if roots.len() == 1 => roots[0].clone(),
        other => {
            return Err(Error::Consistency(format!(
                "expected a unique anomaly-free R-charge, found {:?}",
                other.roots()
            )))
        }
    };
    let report = theory_report(&template.with_unknown_r(&r)?)?;
    let (a, c) = report.physical_ac().expect("dimension 2");
    let mut doc = ReportDocument::new();
    doc.push("colors", spec.colors as i64);
    doc.push("flavors", spec.flavors as i64);
    doc.push("r", r);
    doc.push("a_hol", report.a_hol.clone().expect("dimension 2"));
    doc.push("c_hol", report.c_hol.clone().expect("dimension 2"));
    doc.push("a", a);
    doc.push("c", c);
    doc.push("gauge_free", gauge_obstruction(&report).is_free);
    doc.push("t_free", t_background_obstruction(&report).obstruction.is_free);
    Ok(doc)
}

pub fn seiberg(spec: &SqcdSpec) -> Result<ReportDocument> {
    let result = match_anomalies(spec)?;
    let mut doc = ReportDocument::new();
    doc.push("colors", spec.colors as i64);
    doc.push("flavors", spec.flavors as i64);
    doc.push("dual_colors", spec.dual_colors()? as i64);
    doc.push("r_quark", spec.quark_r());
    doc.push("r_dual_quark", spec.dual_quark_r()?);
    match &result.r_m {
        Some(r_m) => doc.push("r_M", r_m),
        None => doc.push("r_M", "none"),
    }
    let push_ac = |doc: &mut ReportDocument, side: &str, (a_hol, c_hol): &(Rational, Rational)| {
        let (a, c) = crate::anomaly::physical_ac(a_hol, c_hol);
        doc.push(format!("{side}.a_hol"), a_hol);
        doc.push(format!("{side}.c_hol"), c_hol);
        doc.push(format!("{side}.a"), a);
        doc.push(format!("{side}.c"), c);
    };
    push_ac(&mut doc, "electric", &result.electric);
    if let Some(magnetic) = &result.magnetic {
        push_ac(&mut doc, "magnetic", magnetic);
    }
    doc.push("a_residual", result.a_residual.to_string());
    doc.push("matched", result.matched);
    Ok(doc)
}

pub fn solve(template: &Theory, target: &SolveTarget) -> Result<ReportDocument> {
    let outcome = solve_r(template, target)?;
    let mut doc = ReportDocument::new();
    match target {
        SolveTarget::AllMixed => doc.push("target", "all-mixed"),
        SolveTarget::Monomial(m) => doc.push("target", m.as_str()),
    }
    for cp in outcome.polynomials() {
        doc.push(format!("poly.{}", cp.monomial), cp.poly.to_string());
    }
    match outcome.roots() {
        Some(roots) => {
            doc.push("status", if roots.is_empty() { "no-rational-root" } else { "solved" });
            doc.push("root_count", roots.len() as i64);
            for (i, r) in roots.iter().enumerate() {
                doc.push(format!("root.{}", i + 1), r);
            }
        }
        None => doc.push("status", "unconstrained"),
    }
    Ok(doc)
}

pub fn compactify(theory: &Theory, chi_hol: &Rational) -> Result<ReportDocument> {
    if theory.n != 2 {
        return Err(Error::config(format!(
            "compactify needs a dimension 2 theory, found dimension {}",
            theory.n
        )));
    }
    let content = twist_content(theory)?;
    let p = anomaly_polynomial(&content, &theory.context())?;
    let reduced = classify(&pushforward_curve(&p, 1, chi_hol)?, 1)?;
    let mut doc = ReportDocument::new();
    doc.push("fiber_chi", chi_hol);
    doc.extend(report_document(&reduced)?);
    Ok(doc)
}
