//! The anomaly polynomial `[Td · ch(V)]_{2n+2}` and its classification.

mod central;
mod render;
mod solve;

use std::sync::Arc;

use crate::charclasses::{ch_content, todd, FieldContent};
use crate::exactring::{int, GeneratorKind, GeneratorSet, GradedPoly, Rational};
use crate::error::{Error, Result};
use crate::theory::{twist_content, Theory};

pub use central::{
    holomorphic_ac, physical_ac, r_symmetry_polynomial, table_rows, twist_substitute, TableRow,
};
pub use render::render_local_cocycle;
pub use solve::{solve_r, CoefficientPolynomial, SolveOutcome, SolveTarget};

/// `component(Td(n) · ch(content), 2n + 2)` in `ctx`.
pub fn anomaly_polynomial(content: &FieldContent, ctx: &Arc<GeneratorSet>) -> Result<GradedPoly> {
    let n = content.dimension();
    if ctx.cap() != 2 * n + 2 {
        return Err(Error::context(format!(
            "generator set cap {} does not match dimension {n}",
            ctx.cap()
        )));
    }
    let td = todd(n, ctx)?;
    let ch = ch_content(content, ctx)?;
    Ok(td.try_mul(&ch)?.component(2 * n + 2))
}

/// Which bucket a monomial of the anomaly polynomial belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialClass {
    PureGauge,
    Mixed,
    Gravitational,
}

pub fn classify_monomial(ctx: &GeneratorSet, monomial: &[u32]) -> Result<MonomialClass> {
    let mut grav = false;
    let mut gauge = false;
    for (e, g) in monomial.iter().zip(ctx.generators()) {
        if *e == 0 {
            continue;
        }
        match g.kind {
            GeneratorKind::Gravitational(_) => grav = true,
            GeneratorKind::Gauge => gauge = true,
            _ => {
                return Err(Error::domain(format!(
                    "generator `{}` has no place in an anomaly of a twisted theory",
                    g.name
                )))
            }
        }
    }
    match (grav, gauge) {
        (true, true) => Ok(MonomialClass::Mixed),
        (false, true) => Ok(MonomialClass::PureGauge),
        (true, false) => Ok(MonomialClass::Gravitational),
        (false, false) => Err(Error::domain("constant term in a positive-degree anomaly")),
    }
}

/// The classified degree-`(2n+2)` anomaly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnomalyReport {
    pub n: u32,
    pub full: GradedPoly,
    /// Monomials in the gauge classes only.
    pub pure_gauge: GradedPoly,
    /// Monomials containing both a gravitational and a gauge class.
    pub mixed: GradedPoly,
    /// Monomials in the gravitational classes only.
    pub gravitational: GradedPoly,
    /// Coefficient of `ch1 ch2` (`n = 2`).
    pub a_hol: Option<Rational>,
    /// Coefficient of `ch1³` (`n = 2`).
    pub c_hol: Option<Rational>,
    /// `24 ×` the coefficient of `ch1²` (`n = 1`).
    pub virasoro_c: Option<Rational>,
}

impl AnomalyReport {
    /// `(a, c)` of the untwisted theory, available for `n = 2`.
    pub fn physical_ac(&self) -> Option<(Rational, Rational)> {
        match (&self.a_hol, &self.c_hol) {
            (Some(a), Some(c)) => Some(physical_ac(a, c)),
            _ => None,
        }
    }

    /// Sum of the three buckets.
    pub fn reconstruct(&self) -> GradedPoly {
        &(&self.pure_gauge + &self.mixed) + &self.gravitational
    }
}

/// Splits a homogeneous degree-`(2n+2)` class into its buckets.
pub fn classify(p: &GradedPoly, n: u32) -> Result<AnomalyReport> {
    let degree = 2 * n + 2;
    if !p.is_homogeneous(degree) {
        return Err(Error::domain(format!(
            "anomaly must be homogeneous of degree {degree}: {p}"
        )));
    }
    let ctx = p.context();
    let mut pure_gauge = GradedPoly::zero(ctx);
    let mut mixed = GradedPoly::zero(ctx);
    let mut gravitational = GradedPoly::zero(ctx);
    for (m, c) in p.terms() {
        let t = GradedPoly::term(ctx, m.clone(), c.clone());
        let bucket = match classify_monomial(ctx, m)? {
            MonomialClass::PureGauge => &mut pure_gauge,
            MonomialClass::Mixed => &mut mixed,
            MonomialClass::Gravitational => &mut gravitational,
        };
        *bucket = &*bucket + &t;
    }
    let coeff = |name: &str| -> Result<Rational> {
        if ctx.parse_monomial(name).is_ok() {
            p.coefficient_of(name)
        } else {
            Ok(int(0))
        }
    };
    let (a_hol, c_hol, virasoro_c) = match n {
        2 => (Some(coeff("g1*g2")?), Some(coeff("g1^3")?), None),
        1 => (None, None, Some(coeff("g1^2")? * int(24))),
        _ => (None, None, None),
    };
    Ok(AnomalyReport {
        n,
        full: p.clone(),
        pure_gauge,
        mixed,
        gravitational,
        a_hol,
        c_hol,
        virasoro_c,
    })
}

/// Twist, anomaly polynomial and classification in one step, in the
/// theory's standard generator set.
pub fn theory_report(theory: &Theory) -> Result<AnomalyReport> {
    let content = twist_content(theory)?;
    let ctx = theory.context();
    classify(&anomaly_polynomial(&content, &ctx)?, theory.n)
}

/// Anomaly of bare field content in its default generator set.
pub fn content_report(content: &FieldContent) -> Result<AnomalyReport> {
    let ctx = content.default_context();
    classify(&anomaly_polynomial(content, &ctx)?, content.dimension())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Obstruction {
    pub coefficients: GradedPoly,
    pub is_free: bool,
}

/// The internal gauge anomaly: the pure-gauge bucket.
pub fn gauge_obstruction(report: &AnomalyReport) -> Obstruction {
    Obstruction {
        coefficients: report.pure_gauge.clone(),
        is_free: report.pure_gauge.is_zero(),
    }
}

/// Obstruction to a quantum background of holomorphic vector fields: the
/// mixed bucket. The pure-gravitational part is the central charge, not an
/// obstruction, and is left out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BackgroundObstruction {
    pub obstruction: Obstruction,
    /// False when the gauge anomaly is non-zero, in which case the result
    /// is not meaningful.
    pub gauge_free: bool,
}

pub fn t_background_obstruction(report: &AnomalyReport) -> BackgroundObstruction {
    BackgroundObstruction {
        obstruction: Obstruction {
            coefficients: report.mixed.clone(),
            is_free: report.mixed.is_zero(),
        },
        gauge_free: report.pure_gauge.is_zero(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charclasses::{Atom, GaugeRep, Geom, Parity};
    use crate::exactring::rat;

    fn line(n: u32, geom: Geom, parity: Parity) -> FieldContent {
        FieldContent::single(n, 1, Atom::new(geom, GaugeRep::trivial(1), parity))
    }

    #[test]
    fn trivial_line_on_surface() {
        let r = content_report(&line(2, Geom::Trivial, Parity::Even)).unwrap();
        assert_eq!(r.a_hol, Some(rat(-1, 24)));
        assert_eq!(r.c_hol, Some(rat(1, 48)));
        assert!(r.pure_gauge.is_zero() && r.mixed.is_zero());
    }

    #[test]
    fn bc_ghosts() {
        let content = line(1, Geom::Tangent, Parity::Odd);
        let ctx = GeneratorSet::gravitational(1);
        let p = anomaly_polynomial(&content, &ctx).unwrap();
        assert_eq!(p, GradedPoly::from_terms(&ctx, &[(rat(-13, 12), "g1^2")]).unwrap());
        assert_eq!(classify(&p, 1).unwrap().virasoro_c, Some(int(-26)));
    }

    #[test]
    fn free_boson_central_charge() {
        let ctx = GeneratorSet::gravitational(1);
        let p = GradedPoly::from_terms(&ctx, &[(rat(1, 12), "g1^2")]).unwrap();
        assert_eq!(classify(&p, 1).unwrap().virasoro_c, Some(int(2)));
    }

    #[test]
    fn content_and_its_shift_cancel() {
        let v = FieldContent::single(
            2,
            2,
            Atom::new(Geom::Kpow(rat(2, 7)), GaugeRep::fundamental(3), Parity::Even),
        );
        let both = v.merge(&v.parity_flipped()).unwrap();
        let ctx = GeneratorSet::standard(2, true, false);
        assert!(anomaly_polynomial(&both, &ctx).unwrap().is_zero());
    }

    #[test]
    fn classify_rejects_inhomogeneous() {
        let ctx = GeneratorSet::gravitational(2);
        let p = GradedPoly::from_terms(&ctx, &[(int(1), "g1"), (int(1), "g1^3")]).unwrap();
        assert!(matches!(classify(&p, 2), Err(Error::Domain(_))));
        let u = GeneratorSet::untwisted();
        let q = GradedPoly::from_terms(&u, &[(int(1), "tc1^3")]).unwrap();
        assert!(matches!(classify(&q, 2), Err(Error::Domain(_))));
    }

    #[test]
    fn single_fundamental_is_gauge_anomalous() {
        let content = FieldContent::single(
            2,
            1,
            Atom::new(Geom::kpow(rat(1, 3)), GaugeRep::fundamental(3), Parity::Even),
        );
        let ctx = GeneratorSet::standard(2, true, false);
        let r = classify(&anomaly_polynomial(&content, &ctx).unwrap(), 2).unwrap();
        let obs = gauge_obstruction(&r);
        assert!(!obs.is_free);
        assert_eq!(obs.coefficients.coefficient_of("s3").unwrap(), int(1));
        assert!(!t_background_obstruction(&r).gauge_free);
    }

    #[test]
    fn charged_line_on_curve() {
        let content = FieldContent::new(
            1,
            [
                (1, Atom::new(Geom::Trivial, GaugeRep::trivial(1), Parity::Even)),
                (
                    1,
                    Atom::new(Geom::Trivial, GaugeRep::trivial(1).with_charge(int(1)), Parity::Odd),
                ),
            ],
        );
        let r = content_report(&content).unwrap();
        assert_eq!(r.mixed.coefficient_of("g1*f1").unwrap(), rat(-1, 2));
        assert!(r.gravitational.is_zero());
        assert_eq!(r.virasoro_c, Some(int(0)));
        let t = t_background_obstruction(&r);
        assert!(!t.obstruction.is_free);
        assert_eq!(r.reconstruct(), r.full);
    }

    #[test]
    fn cap_must_match_dimension() {
        let ctx = GeneratorSet::gravitational(2);
        assert!(anomaly_polynomial(&line(1, Geom::Trivial, Parity::Even), &ctx).is_err());
    }
}
