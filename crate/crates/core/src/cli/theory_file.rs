//! Line-oriented theory files.
//!
//! ```text
//! dimension <n>
//! gauge su <N> | gauge none
//! flavor-u1 on | off
//! multiplet chiral r <p/q> rep <rep> [charge <p/q>] [copies <k>]
//! multiplet vector | multiplet n2-vector | multiplet n4-vector
//! multiplet hyper rep <rep> [charge <p/q>] [copies <k>]
//! multiplet raw parity <even|odd> k <p/q> rep <rep> [charge <p/q>] [copies <k>]
//! unknown-r <index> [<index> ...]
//! superpotential <free text>
//! ```
//!
//! `<rep>` is `fundamental`, `antifundamental`, `adjoint` or `trivial <dim>`.
//! Multiplet indices count `multiplet` lines from 1. `#` starts a comment.

use num_traits::Zero;

use crate::charclasses::{Atom, FieldContent, GaugeGroup, GaugeRep, Geom, Parity};
use crate::exactring::{format_rational, parse_rational, Rational};
use crate::error::{Error, Result};
use crate::theory::{Multiplet, Theory};

#[derive(Debug, Clone, PartialEq, Eq)]
enum RepName {
    Fundamental,
    Antifundamental,
    Adjoint,
    Trivial(u64),
}

#[derive(Debug, Clone)]
struct RepSpec {
    name: RepName,
    charge: Rational,
}

#[derive(Debug, Clone)]
enum PendingMultiplet {
    Chiral { r: Rational, rep: RepSpec, copies: u32 },
    Vector,
    N2Vector,
    N4Vector,
    Hyper { rep: RepSpec, copies: u32 },
    Raw { parity: Parity, k: Rational, rep: RepSpec, copies: u32 },
}

struct Tokens<'a> {
    line: usize,
    items: std::iter::Peekable<std::str::SplitWhitespace<'a>>,
}

impl<'a> Tokens<'a> {
    fn next(&mut self, what: &str) -> Result<&'a str> {
        self.items
            .next()
            .ok_or_else(|| Error::parse(self.line, format!("expected {what}")))
    }

    fn expect(&mut self, keyword: &str) -> Result<()> {
        let tok = self.next(&format!("`{keyword}`"))?;
        if tok == keyword {
            Ok(())
        } else {
            Err(Error::parse(self.line, format!("expected `{keyword}`, found `{tok}`")))
        }
    }

    fn rational(&mut self, what: &str) -> Result<Rational> {
        let tok = self.next(what)?;
        parse_rational(tok).map_err(|e| Error::parse(self.line, e.to_string()))
    }

    fn positive<T: std::str::FromStr + PartialOrd + Default>(&mut self, what: &str) -> Result<T> {
        let tok = self.next(what)?;
        match tok.parse::<T>() {
            Ok(v) if v > T::default() => Ok(v),
            _ => Err(Error::parse(
                self.line,
                format!("expected a positive integer for {what}, found `{tok}`"),
            )),
        }
    }

    fn finish(&mut self) -> Result<()> {
        match self.items.next() {
            None => Ok(()),
            Some(tok) => Err(Error::parse(self.line, format!("unexpected token `{tok}`"))),
        }
    }

    fn rep(&mut self) -> Result<RepSpec> {
        self.expect("rep")?;
        let name = match self.next("a representation")? {
            "fundamental" => RepName::Fundamental,
            "antifundamental" => RepName::Antifundamental,
            "adjoint" => RepName::Adjoint,
            "trivial" => RepName::Trivial(self.positive("the trivial dimension")?),
            other => {
                return Err(Error::parse(self.line, format!("unknown representation `{other}`")))
            }
        };
        Ok(RepSpec {
            name,
            charge: Rational::zero(),
        })
    }

    /// Trailing `[charge <p/q>] [copies <k>]`.
    fn options(&mut self, rep: &mut RepSpec) -> Result<u32> {
        let mut copies = None;
        while let Some(tok) = self.items.next() {
            match tok {
                "charge" if rep.charge.is_zero() => rep.charge = self.rational("a charge")?,
                "copies" if copies.is_none() => copies = Some(self.positive("copies")?),
                _ => return Err(Error::parse(self.line, format!("unexpected token `{tok}`"))),
            }
        }
        Ok(copies.unwrap_or(1))
    }
}

fn resolve_rep(spec: &RepSpec, gauge: &GaugeGroup, line: usize) -> Result<GaugeRep> {
    let simple = |what: &str| {
        gauge.simple.ok_or_else(|| {
            Error::parse(line, format!("`{what}` representation requires `gauge su <N>`"))
        })
    };
    let rep = match spec.name {
        RepName::Fundamental => GaugeRep::fundamental(simple("fundamental")?),
        RepName::Antifundamental => GaugeRep::antifundamental(simple("antifundamental")?),
        RepName::Adjoint => GaugeRep::adjoint(simple("adjoint")?),
        RepName::Trivial(d) => GaugeRep::trivial(d),
    };
    if !spec.charge.is_zero() && !gauge.abelian {
        return Err(Error::parse(line, "a U(1) charge requires `flavor-u1 on`"));
    }
    Ok(rep.with_charge(spec.charge.clone()))
}

/// Parses and validates a theory file.
pub fn parse_theory_file(text: &str) -> Result<Theory> {
    let mut dimension: Option<u32> = None;
    let mut gauge: Option<GaugeGroup> = None;
    let mut abelian: Option<bool> = None;
    let mut pending: Vec<(usize, PendingMultiplet)> = Vec::new();
    let mut unknown: Option<(usize, Vec<usize>)> = None;
    let mut superpotential: Option<String> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("");
        let mut t = Tokens {
            line,
            items: body.split_whitespace().peekable(),
        };
        let Some(&keyword) = t.items.peek() else { continue };
        t.items.next();
        let dup = |what: &str| Error::parse(line, format!("duplicate `{what}` declaration"));
        match keyword {
            "dimension" => {
                if dimension.is_some() {
                    return Err(dup("dimension"));
                }
                dimension = Some(t.positive("the dimension")?);
                t.finish()?;
            }
            "gauge" => {
                if gauge.is_some() {
                    return Err(dup("gauge"));
                }
                gauge = Some(match t.next("`su` or `none`")? {
                    "none" => GaugeGroup::none(),
                    "su" => {
                        let n: u32 = t.positive("N")?;
                        GaugeGroup::su(n).map_err(|e| Error::parse(line, e.to_string()))?
                    }
                    other => return Err(Error::parse(line, format!("unknown gauge group `{other}`"))),
                });
                t.finish()?;
            }
            "flavor-u1" => {
                if abelian.is_some() {
                    return Err(dup("flavor-u1"));
                }
                abelian = Some(match t.next("`on` or `off`")? {
                    "on" => true,
                    "off" => false,
                    other => return Err(Error::parse(line, format!("expected on/off, found `{other}`"))),
                });
                t.finish()?;
            }
            "multiplet" => {
                let m = match t.next("a multiplet kind")? {
                    "chiral" => {
                        t.expect("r")?;
                        let r = t.rational("an R-charge")?;
                        let mut rep = t.rep()?;
                        let copies = t.options(&mut rep)?;
                        PendingMultiplet::Chiral { r, rep, copies }
                    }
                    "vector" => PendingMultiplet::Vector,
                    "n2-vector" => PendingMultiplet::N2Vector,
                    "n4-vector" => PendingMultiplet::N4Vector,
                    "hyper" => {
                        let mut rep = t.rep()?;
                        let copies = t.options(&mut rep)?;
                        PendingMultiplet::Hyper { rep, copies }
                    }
                    "raw" => {
                        t.expect("parity")?;
                        let parity = match t.next("`even` or `odd`")? {
                            "even" => Parity::Even,
                            "odd" => Parity::Odd,
                            other => {
                                return Err(Error::parse(line, format!("unknown parity `{other}`")))
                            }
                        };
                        t.expect("k")?;
                        let k = t.rational("a canonical-bundle power")?;
                        let mut rep = t.rep()?;
                        let copies = t.options(&mut rep)?;
                        PendingMultiplet::Raw { parity, k, rep, copies }
                    }
                    other => return Err(Error::parse(line, format!("unknown multiplet `{other}`"))),
                };
                t.finish()?;
                pending.push((line, m));
            }
            "unknown-r" => {
                if unknown.is_some() {
                    return Err(dup("unknown-r"));
                }
                let mut indices = vec![t.positive::<usize>("a multiplet index")?];
                while t.items.peek().is_some() {
                    indices.push(t.positive("a multiplet index")?);
                }
                unknown = Some((line, indices));
            }
            "superpotential" => {
                if superpotential.is_some() {
                    return Err(dup("superpotential"));
                }
                let rest: Vec<&str> = t.items.collect();
                superpotential = Some(rest.join(" "));
            }
            other => return Err(Error::parse(line, format!("unknown keyword `{other}`"))),
        }
    }

    let n = dimension.unwrap_or(2);
    let gauge = gauge.unwrap_or_default().with_abelian(abelian.unwrap_or(false));
    let mut theory = Theory::new(n, gauge);
    theory.superpotential_note = superpotential;
    for (line, m) in pending {
        let builtin_needs_surface = |what: &str| {
            if n != 2 {
                Err(Error::parse(line, format!("`{what}` multiplets need dimension 2")))
            } else {
                Ok(())
            }
        };
        let needs_simple = |what: &str| {
            if gauge.simple.is_none() {
                Err(Error::parse(line, format!("`{what}` requires `gauge su <N>`")))
            } else {
                Ok(())
            }
        };
        let multiplet = match m {
            PendingMultiplet::Chiral { r, rep, copies } => {
                builtin_needs_surface("chiral")?;
                Multiplet::ChiralN1 {
                    r,
                    rep: resolve_rep(&rep, &gauge, line)?,
                    copies,
                }
            }
            PendingMultiplet::Vector => {
                builtin_needs_surface("vector")?;
                needs_simple("vector")?;
                Multiplet::VectorN1
            }
            PendingMultiplet::N2Vector => {
                builtin_needs_surface("n2-vector")?;
                needs_simple("n2-vector")?;
                Multiplet::VectorN2
            }
            PendingMultiplet::N4Vector => {
                builtin_needs_surface("n4-vector")?;
                needs_simple("n4-vector")?;
                Multiplet::VectorN4
            }
            PendingMultiplet::Hyper { rep, copies } => {
                builtin_needs_surface("hyper")?;
                Multiplet::HyperN2 {
                    rep: resolve_rep(&rep, &gauge, line)?,
                    copies,
                }
            }
            PendingMultiplet::Raw { parity, k, rep, copies } => {
                let atom = Atom::new(Geom::kpow(k), resolve_rep(&rep, &gauge, line)?, parity);
                Multiplet::Raw {
                    content: FieldContent::single(n, copies as i64, atom),
                }
            }
        };
        theory.multiplets.push(multiplet);
    }
    if let Some((line, indices)) = unknown {
        for &i in &indices {
            match theory.multiplets.get(i - 1) {
                Some(Multiplet::ChiralN1 { .. }) => {}
                Some(_) => {
                    return Err(Error::parse(line, format!("multiplet {i} is not a chiral multiplet")))
                }
                None => return Err(Error::parse(line, format!("no multiplet with index {i}"))),
            }
        }
        theory.unknown_r = indices.iter().map(|i| i - 1).collect();
    }
    theory.validate()?;
    Ok(theory)
}

fn render_rep(rep: &GaugeRep, gauge: &GaugeGroup) -> Result<String> {
    let uncharged = rep.clone().with_charge(Rational::zero());
    let name = match gauge.simple {
        Some(n) if uncharged == GaugeRep::fundamental(n) => "fundamental".to_string(),
        Some(n) if uncharged == GaugeRep::antifundamental(n) => "antifundamental".to_string(),
        Some(n) if uncharged == GaugeRep::adjoint(n) => "adjoint".to_string(),
        _ if uncharged.is_simple_trivial() => format!("trivial {}", rep.dim),
        _ => {
            return Err(Error::config(format!(
                "representation {rep} has no name in the theory-file grammar"
            )))
        }
    };
    let mut out = format!("rep {name}");
    if !rep.q.is_zero() {
        out.push_str(&format!(" charge {}", format_rational(&rep.q)));
    }
    Ok(out)
}

fn copies_suffix(copies: i64) -> String {
    if copies == 1 {
        String::new()
    } else {
        format!(" copies {copies}")
    }
}

/// Canonical text form of a theory; parsing it back yields the same theory
/// for every theory produced by [`parse_theory_file`].
pub fn render_theory_file(theory: &Theory) -> Result<String> {
    let mut out = String::new();
    out.push_str(&format!("dimension {}\n", theory.n));
    match theory.gauge.simple {
        Some(n) => out.push_str(&format!("gauge su {n}\n")),
        None => out.push_str("gauge none\n"),
    }
    out.push_str(&format!(
        "flavor-u1 {}\n",
        if theory.gauge.abelian { "on" } else { "off" }
    ));
    for m in &theory.multiplets {
        match m {
            Multiplet::ChiralN1 { r, rep, copies } => out.push_str(&format!(
                "multiplet chiral r {} {}{}\n",
                format_rational(r),
                render_rep(rep, &theory.gauge)?,
                copies_suffix(*copies as i64)
            )),
            Multiplet::VectorN1 => out.push_str("multiplet vector\n"),
            Multiplet::VectorN2 => out.push_str("multiplet n2-vector\n"),
            Multiplet::VectorN4 => out.push_str("multiplet n4-vector\n"),
            Multiplet::HyperN2 { rep, copies } => out.push_str(&format!(
                "multiplet hyper {}{}\n",
                render_rep(rep, &theory.gauge)?,
                copies_suffix(*copies as i64)
            )),
            Multiplet::Raw { content } => {
                for (mult, atom) in content.terms() {
                    let k = match &atom.geom {
                        Geom::Trivial => Rational::zero(),
                        Geom::Kpow(l) => l.clone(),
                        g => {
                            return Err(Error::config(format!(
                                "geometric factor {g} has no form in the theory-file grammar"
                            )))
                        }
                    };
                    if *mult < 0 {
                        return Err(Error::config("negative multiplicities cannot be written"));
                    }
                    let parity = match atom.parity {
                        Parity::Even => "even",
                        Parity::Odd => "odd",
                    };
                    out.push_str(&format!(
                        "multiplet raw parity {parity} k {} {}{}\n",
                        format_rational(&k),
                        render_rep(&atom.rep, &theory.gauge)?,
                        copies_suffix(*mult)
                    ));
                }
            }
        }
    }
    if !theory.unknown_r.is_empty() {
        let idx: Vec<String> = theory.unknown_r.iter().map(|i| (i + 1).to_string()).collect();
        out.push_str(&format!("unknown-r {}\n", idx.join(" ")));
    }
    if let Some(w) = &theory.superpotential_note {
        out.push_str(&format!("superpotential {w}\n"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactring::{int, rat};

    const SQCD: &str = "\
# SU(3) with five flavors
dimension 2
gauge su 3
multiplet vector
multiplet chiral r -3/5 rep fundamental copies 5
multiplet chiral r -3/5 rep antifundamental copies 5
";

    #[test]
    fn sqcd_file() {
        let t = parse_theory_file(SQCD).unwrap();
        assert_eq!(t.gauge.simple, Some(3));
        assert_eq!(t.multiplets.len(), 3);
        assert_eq!(
            t.multiplets[1],
            Multiplet::chiral(rat(-3, 5), GaugeRep::fundamental(3), 5)
        );
        assert_eq!(
            t.multiplets[2],
            Multiplet::chiral(rat(-3, 5), GaugeRep::antifundamental(3), 5)
        );
    }

    #[test]
    fn minimal_file() {
        let t = parse_theory_file("dimension 2").unwrap();
        assert_eq!(t.n, 2);
        assert!(t.multiplets.is_empty());
        assert_eq!(t.gauge, GaugeGroup::none());
        assert_eq!(parse_theory_file("").unwrap().n, 2);
    }

    fn parse_error_line(text: &str) -> usize {
        match parse_theory_file(text) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(parse_error_line("gauge su 2\nmultiplet chiral r 1/0 rep adjoint"), 2);
        assert_eq!(parse_error_line("dimension 2\ndimension 2"), 2);
        assert_eq!(parse_error_line("gauge su 2\n\ngauge none"), 3);
        assert_eq!(parse_error_line("frobnicate"), 1);
        assert_eq!(parse_error_line("multiplet chiral r 0 rep fundamental"), 1);
        assert_eq!(parse_error_line("gauge none\nmultiplet vector"), 2);
        assert_eq!(parse_error_line("multiplet chiral r 0 rep trivial 1 charge 1"), 1);
        assert_eq!(parse_error_line("multiplet chiral r 0 rep trivial 0"), 1);
        assert_eq!(parse_error_line("gauge su 2\nmultiplet chiral r 0 rep adjoint copies 0"), 2);
        assert_eq!(parse_error_line("gauge su 1"), 1);
        assert_eq!(parse_error_line("gauge su 2\nmultiplet vector\nunknown-r 1"), 3);
        assert_eq!(parse_error_line("multiplet chiral r 0 rep trivial 1\nunknown-r 4"), 2);
        assert_eq!(parse_error_line("dimension 1\nmultiplet chiral r 0 rep trivial 1"), 2);
        assert_eq!(parse_error_line("dimension 2 3"), 1);
        assert_eq!(parse_error_line("multiplet raw parity up k 0 rep trivial 1"), 1);
    }

    #[test]
    fn raw_and_charges() {
        let text = "dimension 1\nflavor-u1 on\nmultiplet raw parity even k 0 rep trivial 1\n\
                    multiplet raw parity odd k 0 rep trivial 1 charge 1\n";
        let t = parse_theory_file(text).unwrap();
        assert_eq!(t.n, 1);
        assert!(t.gauge.abelian);
        match &t.multiplets[1] {
            Multiplet::Raw { content } => {
                let (m, atom) = &content.terms()[0];
                assert_eq!(*m, 1);
                assert_eq!(atom.rep.q, int(1));
                assert_eq!(atom.parity, Parity::Odd);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn round_trip() {
        let text = "gauge su 4\nflavor-u1 on\nmultiplet n4-vector\nmultiplet n2-vector\n\
                    multiplet hyper rep fundamental charge -1/2 copies 3\n\
                    multiplet chiral r 1/7 rep trivial 9\n\
                    multiplet raw parity odd k 2/3 rep adjoint copies 2\n\
                    unknown-r 4\nsuperpotential W = M q qt\n";
        let t = parse_theory_file(text).unwrap();
        let rendered = render_theory_file(&t).unwrap();
        let again = parse_theory_file(&rendered).unwrap();
        assert_eq!(again, t);
        assert_eq!(render_theory_file(&again).unwrap(), rendered);
    }
}
