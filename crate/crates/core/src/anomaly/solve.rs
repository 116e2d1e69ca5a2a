use super::{classify_monomial, theory_report, MonomialClass};
use crate::exactring::{Rational, UniPoly};
use crate::error::{Error, Result};
use crate::theory::{interpolate_in_r, Theory};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveTarget {
    /// A single monomial such as `"g1*s2"`.
    Monomial(String),
    /// Every mixed monomial at once.
    AllMixed,
}

impl std::str::FromStr for SolveTarget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "all-mixed" => Ok(SolveTarget::AllMixed),
            "" => Err(Error::domain("empty solve target")),
            m => Ok(SolveTarget::Monomial(m.to_string())),
        }
    }
}

/// A coefficient of the anomaly as an exact polynomial in the unknown `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientPolynomial {
    pub monomial: String,
    pub poly: UniPoly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    /// Rational values of `r` at which every targeted coefficient vanishes.
    /// Empty when the vanishing locus has no rational point.
    Roots {
        polynomials: Vec<CoefficientPolynomial>,
        roots: Vec<Rational>,
    },
    /// Every targeted coefficient vanishes identically in `r`.
    Unconstrained {
        polynomials: Vec<CoefficientPolynomial>,
    },
}

impl SolveOutcome {
    pub fn roots(&self) -> Option<&[Rational]> {
        match self {
            SolveOutcome::Roots { roots, .. } => Some(roots),
            SolveOutcome::Unconstrained { .. } => None,
        }
    }

    pub fn polynomials(&self) -> &[CoefficientPolynomial] {
        match self {
            SolveOutcome::Roots { polynomials, .. } | SolveOutcome::Unconstrained { polynomials } => {
                polynomials
            }
        }
    }
}

/// Values of the unknown R-charge of `template` that cancel the targeted
/// anomaly coefficients.
pub fn solve_r(template: &Theory, target: &SolveTarget) -> Result<SolveOutcome> {
    template.validate()?;
    if template.unknown_r.is_empty() {
        return Err(Error::config("no multiplet is marked as the unknown R-charge"));
    }
    let ctx = template.context();
    let degree = 2 * template.n + 2;
    let monomials = match target {
        SolveTarget::Monomial(m) => {
            let mono = ctx.parse_monomial(m)?;
            if ctx.degree_of(&mono) != degree {
                return Err(Error::domain(format!(
                    "target `{m}` does not have the anomaly degree {degree}"
                )));
            }
            vec![mono]
        }
        SolveTarget::AllMixed => ctx
            .monomials_of_degree(degree)
            .into_iter()
            .filter(|m| matches!(classify_monomial(&ctx, m), Ok(MonomialClass::Mixed)))
            .collect(),
    };

    let mut polynomials = Vec::with_capacity(monomials.len());
    for m in &monomials {
        let poly = interpolate_in_r(template, |t| theory_report(t)?.full.coefficient(m))?;
        polynomials.push(CoefficientPolynomial {
            monomial: ctx.format_monomial(m),
            poly,
        });
    }

    let mut roots: Option<Vec<Rational>> = None;
    for cp in polynomials.iter().filter(|cp| !cp.poly.is_zero()) {
        let here = cp.poly.rational_roots()?;
        roots = Some(match roots {
            None => here,
            Some(prev) => prev.into_iter().filter(|r| here.contains(r)).collect(),
        });
    }
    Ok(match roots {
        Some(roots) => SolveOutcome::Roots { polynomials, roots },
        None => SolveOutcome::Unconstrained { polynomials },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charclasses::{GaugeGroup, GaugeRep};
    use crate::exactring::{int, rat};
    use crate::theory::Multiplet;

    fn sqcd_template(nc: u32, nf: u32) -> Theory {
        Theory::new(2, GaugeGroup::su(nc).unwrap())
            .with(Multiplet::VectorN1)
            .with(Multiplet::chiral(int(0), GaugeRep::fundamental(nc), nf))
            .with(Multiplet::chiral(int(0), GaugeRep::antifundamental(nc), nf))
            .with_unknown(&[1, 2])
    }

    #[test]
    fn sqcd_roots() {
        for (nc, nf) in [(3u32, 5u32), (2, 3)] {
            let t = sqcd_template(nc, nf);
            let root = rat(-(nc as i64), nf as i64);
            let out = solve_r(&t, &SolveTarget::Monomial("g1*s2".into())).unwrap();
            assert_eq!(out.roots().unwrap(), std::slice::from_ref(&root));
            assert_eq!(out.polynomials()[0].poly.degree(), Some(1));
            let all = solve_r(&t, &SolveTarget::AllMixed).unwrap();
            assert_eq!(all.roots().unwrap(), &[root]);
        }
    }

    #[test]
    fn quarks_alone_shift_the_root() {
        // antiquarks pinned at r = 0: -F r/2 - F·0/2 - N = 0 gives r = -2N/F
        let t = sqcd_template(3, 5).with_unknown(&[1]);
        let out = solve_r(&t, &SolveTarget::Monomial("g1*s2".into())).unwrap();
        assert_eq!(out.roots().unwrap(), &[rat(-6, 5)]);
    }

    #[test]
    fn no_gauge_matter_is_unconstrained() {
        let t = Theory::new(2, GaugeGroup::none())
            .with(Multiplet::chiral(int(0), GaugeRep::trivial(1), 1))
            .with_unknown(&[0]);
        let out = solve_r(&t, &SolveTarget::AllMixed).unwrap();
        assert!(matches!(out, SolveOutcome::Unconstrained { .. }));
    }

    #[test]
    fn single_chiral_a_hol() {
        let t = Theory::new(2, GaugeGroup::none())
            .with(Multiplet::chiral(int(0), GaugeRep::trivial(1), 1))
            .with_unknown(&[0]);
        let poly = interpolate_in_r(&t, |th| Ok(theory_report(th)?.a_hol.unwrap())).unwrap();
        assert_eq!(poly, UniPoly::new(vec![int(0), rat(1, 24)]));
        let cpoly = interpolate_in_r(&t, |th| Ok(theory_report(th)?.c_hol.unwrap())).unwrap();
        assert_eq!(cpoly, UniPoly::new(vec![int(0), int(0), int(0), rat(-1, 48)]));
    }

    #[test]
    fn bad_targets() {
        let t = sqcd_template(3, 5);
        assert!(solve_r(&t, &SolveTarget::Monomial("g1".into())).is_err());
        assert!(solve_r(&t, &SolveTarget::Monomial("q7".into())).is_err());
        assert!("".parse::<SolveTarget>().is_err());
        assert_eq!("all-mixed".parse::<SolveTarget>().unwrap(), SolveTarget::AllMixed);
    }
}
