//! Declarative four-dimensional supersymmetric theories and the twist map
//! to holomorphic field content.

use std::sync::Arc;

use crate::charclasses::{Atom, FieldContent, GaugeGroup, GaugeRep, Geom, Parity};
use crate::exactring::{format_rational, int, rat, GeneratorSet, Rational, UniPoly};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Multiplet {
    /// N=1 chiral multiplet of R-charge `r`; its twist is `K^{(r+1)/2} ⊗ rep`.
    ChiralN1 { r: Rational, rep: GaugeRep, copies: u32 },
    VectorN1,
    HyperN2 { rep: GaugeRep, copies: u32 },
    VectorN2,
    VectorN4,
    /// Field content given directly.
    Raw { content: FieldContent },
}

impl Multiplet {
    pub fn chiral(r: Rational, rep: GaugeRep, copies: u32) -> Self {
        Multiplet::ChiralN1 { r, rep, copies }
    }

    fn is_vector(&self) -> bool {
        matches!(
            self,
            Multiplet::VectorN1 | Multiplet::VectorN2 | Multiplet::VectorN4
        )
    }
}

/// Weight of the canonical bundle twisting a chiral multiplet of R-charge `r`.
pub fn twist_weight(r: &Rational) -> Rational {
    (r + int(1)) / int(2)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theory {
    pub n: u32,
    pub gauge: GaugeGroup,
    pub multiplets: Vec<Multiplet>,
    /// Recorded only; never enters any computation.
    pub superpotential_note: Option<String>,
    /// Indices into `multiplets` of the chirals sharing the R-charge that is
    /// solved for; empty when nothing is unknown.
    pub unknown_r: Vec<usize>,
}

impl Theory {
    pub fn new(n: u32, gauge: GaugeGroup) -> Self {
        Theory {
            n,
            gauge,
            multiplets: Vec::new(),
            superpotential_note: None,
            unknown_r: Vec::new(),
        }
    }

    pub fn with(mut self, multiplet: Multiplet) -> Self {
        self.multiplets.push(multiplet);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::config("dimension must be positive"));
        }
        if let Some(n) = self.gauge.simple {
            GaugeGroup::su(n)?;
        }
        for (i, m) in self.multiplets.iter().enumerate() {
            let label = i + 1;
            if !matches!(m, Multiplet::Raw { .. }) && self.n != 2 {
                return Err(Error::config(format!(
                    "multiplet {label}: supersymmetric multiplets need dimension 2, got {}",
                    self.n
                )));
            }
            if m.is_vector() && self.gauge.simple.is_none() {
                return Err(Error::config(format!(
                    "multiplet {label}: a vector multiplet needs a simple gauge group"
                )));
            }
            match m {
                Multiplet::ChiralN1 { rep, copies, .. } | Multiplet::HyperN2 { rep, copies } => {
                    if *copies == 0 {
                        return Err(Error::config(format!("multiplet {label}: copies must be >= 1")));
                    }
                    rep.check_against(&self.gauge)
                        .map_err(|e| Error::config(format!("multiplet {label}: {e}")))?;
                }
                Multiplet::Raw { content } => {
                    if content.dimension() != self.n {
                        return Err(Error::config(format!(
                            "multiplet {label}: raw content has dimension {}, theory has {}",
                            content.dimension(),
                            self.n
                        )));
                    }
                    for (_, atom) in content.terms() {
                        atom.rep
                            .check_against(&self.gauge)
                            .map_err(|e| Error::config(format!("multiplet {label}: {e}")))?;
                    }
                }
                _ => {}
            }
        }
        for (k, &i) in self.unknown_r.iter().enumerate() {
            if self.unknown_r[..k].contains(&i) {
                return Err(Error::config(format!("multiplet {} marked unknown twice", i + 1)));
            }
            match self.multiplets.get(i) {
                Some(Multiplet::ChiralN1 { .. }) => {}
                _ => {
                    return Err(Error::config(format!(
                        "unknown R-charge must refer to a chiral multiplet (got index {})",
                        i + 1
                    )))
                }
            }
        }
        Ok(())
    }

    /// Generator set holding every class this theory can produce.
    pub fn context(&self) -> Arc<GeneratorSet> {
        GeneratorSet::standard(self.n, self.gauge.simple.is_some(), self.gauge.abelian)
    }

    fn adjoint(&self) -> Result<GaugeRep> {
        self.gauge
            .simple
            .map(GaugeRep::adjoint)
            .ok_or_else(|| Error::config("vector multiplet without a simple gauge group"))
    }

    /// Marks the chirals at `indices` as sharing the unknown R-charge.
    pub fn with_unknown(mut self, indices: &[usize]) -> Self {
        self.unknown_r = indices.to_vec();
        self
    }

    /// Copy of this theory with every unknown chiral's R-charge set to `r`.
    pub fn with_unknown_r(&self, r: &Rational) -> Result<Theory> {
        if self.unknown_r.is_empty() {
            return Err(Error::config("no multiplet is marked as the unknown R-charge"));
        }
        let mut out = self.clone();
        for &i in &self.unknown_r {
            match out.multiplets.get_mut(i) {
                Some(Multiplet::ChiralN1 { r: slot, .. }) => *slot = r.clone(),
                _ => return Err(Error::config("unknown R-charge must refer to a chiral multiplet")),
            }
        }
        Ok(out)
    }
}

/// γ-sector bundle of a single multiplet.
fn multiplet_content(theory: &Theory, m: &Multiplet) -> Result<FieldContent> {
    let n = theory.n;
    let even = |mult: i64, geom: Geom, rep: &GaugeRep| (mult, Atom::new(geom, rep.clone(), Parity::Even));
    let odd = |mult: i64, geom: Geom, rep: &GaugeRep| (mult, Atom::new(geom, rep.clone(), Parity::Odd));
    let content = match m {
        Multiplet::ChiralN1 { r, rep, copies } => FieldContent::new(
            n,
            [even(*copies as i64, Geom::kpow(twist_weight(r)), rep)],
        ),
        // holomorphic BF: the adjoint shifted by one, at λ = 0
        Multiplet::VectorN1 => FieldContent::new(n, [odd(1, Geom::Trivial, &theory.adjoint()?)]),
        // 𝔤[1] ⊗ ∧•K^{1/3}
        Multiplet::VectorN2 => {
            let adj = theory.adjoint()?;
            FieldContent::new(
                n,
                [odd(1, Geom::Trivial, &adj), even(1, Geom::kpow(rat(1, 3)), &adj)],
            )
        }
        // 𝔤[1] ⊕ 𝔤 ⊗ K^{1/3} ⊗ C³; the K^{2/3} and K pieces of the full
        // exterior algebra belong to the dual (β) sector.
        Multiplet::VectorN4 => {
            let adj = theory.adjoint()?;
            FieldContent::new(
                n,
                [odd(1, Geom::Trivial, &adj), even(3, Geom::kpow(rat(1, 3)), &adj)],
            )
        }
        Multiplet::HyperN2 { rep, copies } => FieldContent::new(
            n,
            [
                even(*copies as i64, Geom::kpow(rat(1, 3)), rep),
                odd(*copies as i64, Geom::kpow(rat(2, 3)), rep),
            ],
        ),
        Multiplet::Raw { content } => content.clone(),
    };
    Ok(content)
}

/// Compiles a theory to the holomorphic bundle of its twist.
pub fn twist_content(theory: &Theory) -> Result<FieldContent> {
    theory.validate()?;
    theory
        .multiplets
        .iter()
        .try_fold(FieldContent::empty(theory.n), |acc, m| {
            acc.merge(&multiplet_content(theory, m)?)
        })
}

/// Interpolation nodes for [`interpolate_in_r`] and the held-out check point.
pub const R_NODES: [i64; 4] = [0, 1, -1, 2];
pub const R_CHECK: i64 = 3;

/// Recovers `evaluator` as an exact cubic in the unknown R-charge.
///
/// Every anomaly coefficient is a polynomial of degree at most three in `r`,
/// since `r` only enters through `exp(-(r+1)/2 · g1)` truncated at degree 6;
/// four nodes determine it and a fifth point checks the claim.
pub fn interpolate_in_r<F>(template: &Theory, evaluator: F) -> Result<UniPoly>
where
    F: Fn(&Theory) -> Result<Rational>,
{
    if template.unknown_r.is_empty() {
        return Err(Error::config("no multiplet is marked as the unknown R-charge"));
    }
    let points = R_NODES
        .iter()
        .map(|&x| {
            let r = int(x);
            let value = evaluator(&template.with_unknown_r(&r)?)?;
            Ok((r, value))
        })
        .collect::<Result<Vec<_>>>()?;
    let poly = UniPoly::interpolate(&points)?;
    let check = int(R_CHECK);
    let expected = evaluator(&template.with_unknown_r(&check)?)?;
    let got = poly.eval(&check);
    if got != expected {
        return Err(Error::Consistency(format!(
            "interpolant {poly} gives {} at r = {R_CHECK}, evaluator gives {}",
            format_rational(&got),
            format_rational(&expected)
        )));
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn su(n: u32) -> GaugeGroup {
        GaugeGroup::su(n).unwrap()
    }

    #[test]
    fn n1_vector() {
        let t = Theory::new(2, su(3)).with(Multiplet::VectorN1);
        let c = twist_content(&t).unwrap();
        assert_eq!(
            c,
            FieldContent::single(2, 1, Atom::new(Geom::Trivial, GaugeRep::adjoint(3), Parity::Odd))
        );
    }

    #[test]
    fn superconformal_chiral() {
        let t = Theory::new(2, GaugeGroup::none())
            .with(Multiplet::chiral(rat(-1, 3), GaugeRep::trivial(1), 1));
        let c = twist_content(&t).unwrap();
        assert_eq!(
            c,
            FieldContent::single(
                2,
                1,
                Atom::new(Geom::Kpow(rat(1, 3)), GaugeRep::trivial(1), Parity::Even)
            )
        );
    }

    #[test]
    fn sqcd_content() {
        let (nc, nf) = (3, 5);
        let r = rat(-(nc as i64), nf as i64);
        let t = Theory::new(2, su(nc))
            .with(Multiplet::VectorN1)
            .with(Multiplet::chiral(r.clone(), GaugeRep::fundamental(nc), nf))
            .with(Multiplet::chiral(r.clone(), GaugeRep::antifundamental(nc), nf));
        let lambda = twist_weight(&r);
        assert_eq!(lambda, rat(1, 5));
        let expected = FieldContent::new(
            2,
            [
                (1, Atom::new(Geom::Trivial, GaugeRep::adjoint(nc), Parity::Odd)),
                (5, Atom::new(Geom::Kpow(lambda.clone()), GaugeRep::fundamental(nc), Parity::Even)),
                (5, Atom::new(Geom::Kpow(lambda), GaugeRep::antifundamental(nc), Parity::Even)),
            ],
        );
        assert_eq!(twist_content(&t).unwrap(), expected);
    }

    #[test]
    fn n2_vector_is_n1_vector_plus_adjoint_chiral() {
        let n2 = Theory::new(2, su(2)).with(Multiplet::VectorN2);
        let n1 = Theory::new(2, su(2))
            .with(Multiplet::VectorN1)
            .with(Multiplet::chiral(rat(-1, 3), GaugeRep::adjoint(2), 1));
        assert_eq!(twist_content(&n2).unwrap(), twist_content(&n1).unwrap());
    }

    #[test]
    fn n4_vector_is_n1_vector_plus_three_adjoint_chirals() {
        let n4 = Theory::new(2, su(2)).with(Multiplet::VectorN4);
        let n1 = Theory::new(2, su(2))
            .with(Multiplet::VectorN1)
            .with(Multiplet::chiral(rat(-1, 3), GaugeRep::adjoint(2), 3));
        assert_eq!(twist_content(&n4).unwrap(), twist_content(&n1).unwrap());
    }

    #[test]
    fn configuration_errors() {
        let t = Theory::new(2, GaugeGroup::none()).with(Multiplet::VectorN1);
        assert!(matches!(twist_content(&t), Err(Error::Configuration(_))));
        let t = Theory::new(3, su(2)).with(Multiplet::VectorN1);
        assert!(matches!(twist_content(&t), Err(Error::Configuration(_))));
        let t = Theory::new(2, su(2)).with(Multiplet::chiral(int(0), GaugeRep::trivial(1), 0));
        assert!(twist_content(&t).is_err());
        let t = Theory::new(2, GaugeGroup::none())
            .with(Multiplet::chiral(int(0), GaugeRep::fundamental(3), 1));
        assert!(twist_content(&t).is_err());
        let t = Theory::new(2, su(2)).with(Multiplet::VectorN1).with_unknown(&[0]);
        assert!(t.validate().is_err());
        let t = Theory::new(2, su(2))
            .with(Multiplet::chiral(int(0), GaugeRep::adjoint(2), 1))
            .with_unknown(&[0, 0]);
        assert!(t.validate().is_err());
    }

    #[test]
    fn dimension_two_with_nothing() {
        let t = Theory::new(2, GaugeGroup::none());
        assert!(twist_content(&t).unwrap().is_empty());
    }

    #[test]
    fn interpolation_of_constant() {
        let mut t = Theory::new(2, GaugeGroup::none())
            .with(Multiplet::chiral(int(0), GaugeRep::trivial(1), 1))
            .with_unknown(&[0]);
        let poly = interpolate_in_r(&t, |_| Ok(int(5))).unwrap();
        assert_eq!(poly, UniPoly::new(vec![int(5)]));
        // a quartic in r is caught by the held-out point
        let quartic = |th: &Theory| match &th.multiplets[0] {
            Multiplet::ChiralN1 { r, .. } => Ok(r * r * r * r),
            _ => unreachable!(),
        };
        assert!(matches!(interpolate_in_r(&t, quartic), Err(Error::Consistency(_))));
        t.unknown_r.clear();
        assert!(interpolate_in_r(&t, |_| Ok(int(1))).is_err());
    }
}
