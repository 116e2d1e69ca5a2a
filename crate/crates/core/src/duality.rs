//! Electric and magnetic SQCD and Seiberg anomaly matching.

use crate::anomaly::{physical_ac, theory_report};
use crate::charclasses::{GaugeGroup, GaugeRep};
use crate::exactring::{format_rational, int, rat, Rational, UniPoly};
use crate::error::{Error, Result};
use crate::theory::{interpolate_in_r, Multiplet, Theory};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SqcdSpec {
    pub colors: u32,
    pub flavors: u32,
}

impl SqcdSpec {
    pub fn new(colors: u32, flavors: u32) -> Result<Self> {
        if colors < 2 {
            return Err(Error::config(format!("SQCD needs N_c >= 2, got {colors}")));
        }
        if flavors < 1 {
            return Err(Error::config("SQCD needs at least one flavor"));
        }
        Ok(SqcdSpec { colors, flavors })
    }

    /// `-N_c / N_f`, the R-charge cancelling the background anomaly.
    pub fn quark_r(&self) -> Rational {
        rat(-(self.colors as i64), self.flavors as i64)
    }

    pub fn dual_colors(&self) -> Result<u32> {
        match self.flavors.checked_sub(self.colors) {
            Some(d) if d >= 2 => Ok(d),
            _ => Err(Error::config(format!(
                "magnetic dual needs N_f - N_c >= 2 (N_c = {}, N_f = {})",
                self.colors, self.flavors
            ))),
        }
    }

    /// `-(N_f - N_c) / N_f`.
    pub fn dual_quark_r(&self) -> Result<Rational> {
        Ok(rat(-(self.dual_colors()? as i64), self.flavors as i64))
    }

    /// `1 - 2 N_c / N_f`.
    pub fn expected_meson_r(&self) -> Rational {
        int(1) - rat(2 * self.colors as i64, self.flavors as i64)
    }
}

fn sqcd(colors: u32, flavors: u32, r: Rational) -> Result<Theory> {
    Ok(Theory::new(2, GaugeGroup::su(colors)?)
        .with(Multiplet::VectorN1)
        .with(Multiplet::chiral(r.clone(), GaugeRep::fundamental(colors), flavors))
        .with(Multiplet::chiral(r, GaugeRep::antifundamental(colors), flavors)))
}

/// SU(N_c) with N_f quark and antiquark flavors at the anomaly-free R-charge.
pub fn electric_theory(spec: &SqcdSpec) -> Result<Theory> {
    sqcd(spec.colors, spec.flavors, spec.quark_r())
}

/// The electric theory with its quark R-charge left unknown.
pub fn electric_template(spec: &SqcdSpec) -> Result<Theory> {
    Ok(sqcd(spec.colors, spec.flavors, int(0))?.with_unknown(&[1, 2]))
}

/// `a_hol = -(N_c² + 1)/24`.
pub fn electric_a_hol_closed_form(spec: &SqcdSpec) -> Rational {
    let nc = spec.colors as i64;
    rat(-(nc * nc + 1), 24)
}

/// `c_hol = (2N_c⁴ - N_c²N_f² + N_f²) / (48 N_f²)`.
pub fn electric_c_hol_closed_form(spec: &SqcdSpec) -> Rational {
    let nc = int(spec.colors as i64);
    let nf = int(spec.flavors as i64);
    let nc2 = &nc * &nc;
    let nf2 = &nf * &nf;
    (int(2) * &nc2 * &nc2 - &nc2 * &nf2 + &nf2) / (int(48) * nf2)
}

/// `(a_hol, c_hol)` of the electric theory, cross-checked against the closed
/// forms.
pub fn electric_anomalies(spec: &SqcdSpec) -> Result<(Rational, Rational)> {
    let report = theory_report(&electric_theory(spec)?)?;
    let a_hol = report.a_hol.expect("dimension 2");
    let c_hol = report.c_hol.expect("dimension 2");
    let (a_ref, c_ref) = (electric_a_hol_closed_form(spec), electric_c_hol_closed_form(spec));
    if a_hol != a_ref || c_hol != c_ref {
        return Err(Error::Consistency(format!(
            "electric anomalies ({}, {}) differ from closed forms ({}, {})",
            format_rational(&a_hol),
            format_rational(&c_hol),
            format_rational(&a_ref),
            format_rational(&c_ref)
        )));
    }
    Ok((a_hol, c_hol))
}

const MESON_INDEX: usize = 3;

/// SU(N_f - N_c) with N_f dual quark flavors and N_f² gauge-singlet mesons
/// of R-charge `r_m`. The superpotential is recorded but never used.
pub fn magnetic_theory(spec: &SqcdSpec, r_m: &Rational) -> Result<Theory> {
    let dual = spec.dual_colors()?;
    let nf = spec.flavors;
    let mut theory = sqcd(dual, nf, spec.dual_quark_r()?)?.with(Multiplet::chiral(
        r_m.clone(),
        GaugeRep::trivial(nf as u64 * nf as u64),
        1,
    ));
    debug_assert!(matches!(theory.multiplets[MESON_INDEX], Multiplet::ChiralN1 { .. }));
    theory.superpotential_note = Some("W = M q q~".to_string());
    Ok(theory)
}

pub fn magnetic_anomalies(spec: &SqcdSpec, r_m: &Rational) -> Result<(Rational, Rational)> {
    let report = theory_report(&magnetic_theory(spec, r_m)?)?;
    Ok((report.a_hol.expect("dimension 2"), report.c_hol.expect("dimension 2")))
}

/// `ã_hol = (-1 + 2N_fN_c - N_c² + N_f²(r_M - 1)) / 24`.
pub fn magnetic_a_hol_closed_form(spec: &SqcdSpec, r_m: &Rational) -> Rational {
    let nc = int(spec.colors as i64);
    let nf = int(spec.flavors as i64);
    (int(-1) + int(2) * &nf * &nc - &nc * &nc + &nf * &nf * (r_m - int(1))) / int(24)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchResult {
    /// Meson R-charge solving the `a_hol` equation, if one exists.
    pub r_m: Option<Rational>,
    pub matched: bool,
    pub electric: (Rational, Rational),
    pub magnetic: Option<(Rational, Rational)>,
    /// `ã_hol(r_M) - a_hol` as a polynomial in `r_M`.
    pub a_residual: UniPoly,
}

/// Solves the (affine) `a_hol` matching condition for the meson R-charge and
/// checks `c_hol` at that value.
pub fn match_anomalies(spec: &SqcdSpec) -> Result<MatchResult> {
    spec.dual_colors()?;
    let electric = electric_anomalies(spec)?;
    let mut template = magnetic_theory(spec, &int(0))?;
    template.unknown_r = vec![MESON_INDEX];
    let a_residual = interpolate_in_r(&template, |t| {
        Ok(theory_report(t)?.a_hol.expect("dimension 2") - &electric.0)
    })?;
    if a_residual.is_zero() {
        return Err(Error::Consistency(
            "a_hol of the magnetic theory does not depend on the meson R-charge".into(),
        ));
    }
    let roots = a_residual.rational_roots()?;
    let r_m = match roots.as_slice() {
        [r] if a_residual.degree() == Some(1) => r.clone(),
        _ => {
            return Ok(MatchResult {
                r_m: None,
                matched: false,
                electric,
                magnetic: None,
                a_residual,
            })
        }
    };
    let magnetic = magnetic_anomalies(spec, &r_m)?;
    let matched = magnetic == electric && physical_ac(&magnetic.0, &magnetic.1) == physical_ac(&electric.0, &electric.1);
    Ok(MatchResult {
        r_m: Some(r_m),
        matched,
        electric,
        magnetic: Some(magnetic),
        a_residual,
    })
}
