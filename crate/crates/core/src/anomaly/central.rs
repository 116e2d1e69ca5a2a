//! Conversions between holomorphic and physical central charges, and the
//! R-symmetry anomaly of the untwisted theory.

use std::sync::Arc;

use super::theory_report;
use crate::charclasses::{GaugeGroup, GaugeRep};
use crate::exactring::generators::{PONTRYAGIN_P1, R_SYMMETRY_C1};
use crate::exactring::{int, rat, GeneratorKind, GeneratorSet, GradedPoly, Rational};
use crate::error::{Error, Result};
use crate::theory::{Multiplet, Theory};

/// `a = -9/4 (a_hol + 6 c_hol)`, `c = -3/4 (5 a_hol + 18 c_hol)`.
pub fn physical_ac(a_hol: &Rational, c_hol: &Rational) -> (Rational, Rational) {
    let a = rat(-9, 4) * (a_hol + c_hol * int(6));
    let c = rat(-3, 4) * (a_hol * int(5) + c_hol * int(18));
    (a, c)
}

/// `a_hol = 2/3 (a - c)`, `c_hol = 1/9 (c - 5/3 a)`.
pub fn holomorphic_ac(a: &Rational, c: &Rational) -> (Rational, Rational) {
    let a_hol = rat(2, 3) * (a - c);
    let c_hol = rat(1, 9) * (c - a * rat(5, 3));
    (a_hol, c_hol)
}

/// `1/3! ((Tr R³) tc1³ - 1/4 (Tr R) tc1 p1)` over the untwisted generators.
pub fn r_symmetry_polynomial(tr_r: &Rational, tr_r3: &Rational) -> GradedPoly {
    let ctx = GeneratorSet::untwisted();
    GradedPoly::from_terms(
        &ctx,
        &[
            (tr_r3 * rat(1, 6), "tc1^3"),
            (tr_r * rat(-1, 24), "tc1*p1"),
        ],
    )
    .expect("untwisted generators exist")
}

/// Breaks `SO(4)` to `U(2)` (`p1 ↦ 2 ch2`) and twists (`tc1 ↦ -ch1/2`).
pub fn twist_substitute(p: &GradedPoly) -> Result<GradedPoly> {
    let src = p.context();
    for i in p.support() {
        let g = &src.generators()[i];
        if g.kind != GeneratorKind::Untwisted {
            return Err(Error::context(format!(
                "`{}` is not an untwisted generator",
                g.name
            )));
        }
    }
    let target: Arc<GeneratorSet> = GeneratorSet::gravitational(2);
    let g1 = GradedPoly::generator(&target, "g1")?;
    let g2 = GradedPoly::generator(&target, "g2")?;
    let images: Vec<GradedPoly> = src
        .generators()
        .iter()
        .map(|g| match g.name.as_str() {
            R_SYMMETRY_C1 => g1.scale(&rat(-1, 2)),
            PONTRYAGIN_P1 => g2.scale(&int(2)),
            _ => GradedPoly::zero(&target),
        })
        .collect();
    p.substitute(&target, &images)
}

/// One row of the table of basic multiplets, per unit dimension of the gauge
/// group (vectors) or of the matter representation (chiral, hyper).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub key: &'static str,
    pub label: &'static str,
    pub a: Rational,
    pub c: Rational,
    pub a_hol: Rational,
    pub c_hol: Rational,
}

/// Computes every row from the twist of the corresponding multiplet.
pub fn table_rows() -> Result<Vec<TableRow>> {
    const PROBE_N: u32 = 2;
    let su = GaugeGroup::su(PROBE_N)?;
    let adj_dim = int(GaugeRep::adjoint(PROBE_N).dim as i64);
    let chiral = Multiplet::chiral(rat(-1, 3), GaugeRep::trivial(1), 1);
    let hyper = Multiplet::HyperN2 {
        rep: GaugeRep::trivial(1),
        copies: 1,
    };
    let rows: [(&'static str, &'static str, Theory, &Rational); 5] = [
        ("n1_vector", "N=1 vector", Theory::new(2, su).with(Multiplet::VectorN1), &adj_dim),
        ("n1_chiral", "N=1 chiral", Theory::new(2, GaugeGroup::none()).with(chiral), &int(1)),
        ("n2_vector", "N=2 vector", Theory::new(2, su).with(Multiplet::VectorN2), &adj_dim),
        ("n2_hyper", "N=2 hyper", Theory::new(2, GaugeGroup::none()).with(hyper), &int(1)),
        ("n4_vector", "N=4 vector", Theory::new(2, su).with(Multiplet::VectorN4), &adj_dim),
    ];
    rows.into_iter()
        .map(|(key, label, theory, dim)| {
            let report = theory_report(&theory)?;
            let a_hol = report.a_hol.expect("dimension 2") / dim;
            let c_hol = report.c_hol.expect("dimension 2") / dim;
            let (a, c) = physical_ac(&a_hol, &c_hol);
            Ok(TableRow {
                key,
                label,
                a,
                c,
                a_hol,
                c_hol,
            })
        })
        .collect()
}
