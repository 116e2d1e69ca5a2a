//! Atoms (line/tangent factor ⊗ gauge representation, with parity) and
//! their Chern characters.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

use super::gauge::GaugeRep;
use super::newton::tangent_ch;
use crate::exactring::generators::{ABELIAN_CH1, SIMPLE_CH2, SIMPLE_CH3};
use crate::exactring::rational::binomial;
use crate::exactring::{format_rational, int, GeneratorSet, GradedPoly, Rational};
use crate::error::{Error, Result};

/// Geometric factor of an atom.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Geom {
    Trivial,
    /// `K^λ` for the canonical bundle `K`.
    Kpow(Rational),
    Tangent,
    Cotangent,
}

impl Geom {
    /// `K^λ`, with `K^0` normalized to [`Geom::Trivial`].
    pub fn kpow(lambda: Rational) -> Self {
        if lambda.is_zero() {
            Geom::Trivial
        } else {
            Geom::Kpow(lambda)
        }
    }
}

impl fmt::Display for Geom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Geom::Trivial => write!(f, "O"),
            Geom::Kpow(l) => write!(f, "K^({})", format_rational(l)),
            Geom::Tangent => write!(f, "T"),
            Geom::Cotangent => write!(f, "T*"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn flip(self) -> Self {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    pub fn sign(self) -> i64 {
        match self {
            Parity::Even => 1,
            Parity::Odd => -1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Atom {
    pub geom: Geom,
    pub rep: GaugeRep,
    pub parity: Parity,
}

impl Atom {
    pub fn new(geom: Geom, rep: GaugeRep, parity: Parity) -> Self {
        let geom = match geom {
            Geom::Kpow(l) => Geom::kpow(l),
            g => g,
        };
        Atom { geom, rep, parity }
    }

    pub fn flipped(&self) -> Self {
        Atom {
            parity: self.parity.flip(),
            ..self.clone()
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shift = if self.parity == Parity::Odd { "Π " } else { "" };
        write!(f, "{shift}{} ⊗ {}", self.geom, self.rep)
    }
}

/// Formal signed sum of atoms over a complex `n`-dimensional space.
///
/// Equal atoms are merged and zero multiplicities dropped, so two contents
/// compare equal exactly when their canonical forms agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldContent {
    n: u32,
    terms: Vec<(i64, Atom)>,
}

impl FieldContent {
    pub fn empty(n: u32) -> Self {
        FieldContent { n, terms: Vec::new() }
    }

    pub fn new(n: u32, terms: impl IntoIterator<Item = (i64, Atom)>) -> Self {
        let mut merged: BTreeMap<Atom, i64> = BTreeMap::new();
        for (m, atom) in terms {
            *merged.entry(atom).or_insert(0) += m;
        }
        FieldContent {
            n,
            terms: merged
                .into_iter()
                .filter(|(_, m)| *m != 0)
                .map(|(a, m)| (m, a))
                .collect(),
        }
    }

    pub fn single(n: u32, multiplicity: i64, atom: Atom) -> Self {
        Self::new(n, [(multiplicity, atom)])
    }

    pub fn dimension(&self) -> u32 {
        self.n
    }

    pub fn terms(&self) -> &[(i64, Atom)] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn merge(&self, other: &FieldContent) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::config(format!(
                "cannot merge contents of dimensions {} and {}",
                self.n, other.n
            )));
        }
        Ok(Self::new(
            self.n,
            self.terms.iter().chain(&other.terms).cloned(),
        ))
    }

    /// `ΠV`: every atom with its parity flipped.
    pub fn parity_flipped(&self) -> Self {
        Self::new(self.n, self.terms.iter().map(|(m, a)| (*m, a.flipped())))
    }

    pub fn scaled(&self, factor: i64) -> Self {
        Self::new(self.n, self.terms.iter().map(|(m, a)| (m * factor, a.clone())))
    }

    /// Whether any atom needs the simple-gauge or abelian classes.
    pub fn needs_gauge(&self) -> (bool, bool) {
        let simple = self.terms.iter().any(|(_, a)| !a.rep.is_simple_trivial());
        let abelian = self.terms.iter().any(|(_, a)| !a.rep.q.is_zero());
        (simple, abelian)
    }

    /// The standard generator set able to hold this content's classes.
    pub fn default_context(&self) -> Arc<GeneratorSet> {
        let (simple, abelian) = self.needs_gauge();
        GeneratorSet::standard(self.n, simple, abelian)
    }
}

impl fmt::Display for FieldContent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(m, a)| format!("{m}·[{a}]")).collect();
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

fn g1(ctx: &Arc<GeneratorSet>) -> Result<GradedPoly> {
    GradedPoly::generator(ctx, "g1")
        .map_err(|_| Error::context(format!("generator set {ctx} lacks g1")))
}

/// Chern character of the geometric factor on a complex `n`-fold.
pub fn ch_geom(geom: &Geom, n: u32, ctx: &Arc<GeneratorSet>) -> Result<GradedPoly> {
    match geom {
        Geom::Trivial => Ok(GradedPoly::one(ctx)),
        // ch_1(K^λ) = -λ ch_1
        Geom::Kpow(lambda) => g1(ctx)?.scale(&-lambda).exp(),
        Geom::Tangent | Geom::Cotangent => {
            let mut acc = GradedPoly::constant(ctx, int(n as i64));
            for (i, ch) in tangent_ch(n, ctx)?.iter().enumerate() {
                let k = i + 1;
                if *geom == Geom::Cotangent && k % 2 == 1 {
                    acc = &acc - ch;
                } else {
                    acc = &acc + ch;
                }
            }
            Ok(acc)
        }
    }
}

fn gauge_class(ctx: &Arc<GeneratorSet>, name: &str, degree: u32) -> Result<Option<GradedPoly>> {
    match GradedPoly::generator(ctx, name) {
        Ok(p) => Ok(Some(p)),
        // the class is truncated away in this degree range
        Err(_) if degree > ctx.cap() => Ok(None),
        Err(_) => Err(Error::context(format!("generator set {ctx} lacks `{name}`"))),
    }
}

/// `exp(q f1) · (dim + t2 s2 + t3 s3)`.
pub fn ch_rep(rep: &GaugeRep, ctx: &Arc<GeneratorSet>) -> Result<GradedPoly> {
    let mut base = GradedPoly::constant(ctx, int(rep.dim as i64));
    if !rep.t2.is_zero() {
        if let Some(s2) = gauge_class(ctx, SIMPLE_CH2, 4)? {
            base = &base + &s2.scale(&rep.t2);
        }
    }
    if !rep.t3.is_zero() {
        if let Some(s3) = gauge_class(ctx, SIMPLE_CH3, 6)? {
            base = &base + &s3.scale(&rep.t3);
        }
    }
    if rep.q.is_zero() {
        return Ok(base);
    }
    let f1 = gauge_class(ctx, ABELIAN_CH1, 2)?.expect("degree 2 is below every cap");
    Ok(&f1.scale(&rep.q).exp()? * &base)
}

pub fn ch_atom(atom: &Atom, n: u32, ctx: &Arc<GeneratorSet>) -> Result<GradedPoly> {
    let ch = &ch_geom(&atom.geom, n, ctx)? * &ch_rep(&atom.rep, ctx)?;
    Ok(ch.scale(&int(atom.parity.sign())))
}

/// `Σ multiplicity · ch(atom)`.
pub fn ch_content(content: &FieldContent, ctx: &Arc<GeneratorSet>) -> Result<GradedPoly> {
    let mut acc = GradedPoly::zero(ctx);
    for (m, atom) in content.terms() {
        acc = &acc + &ch_atom(atom, content.dimension(), ctx)?.scale(&int(*m));
    }
    Ok(acc)
}

/// `rep ⊗ ∧•(K^λ ⊗ C^m)` starting at `base` parity: the `j`-th exterior
/// power contributes `C(m, j)` copies of `K^{jλ} ⊗ rep` with parity flipped
/// `j` times.
pub fn wedge_total(
    n: u32,
    lambda: &Rational,
    m: u32,
    rep: &GaugeRep,
    base: Parity,
) -> Result<FieldContent> {
    if m == 0 {
        return Err(Error::domain("exterior algebra needs at least one copy"));
    }
    let mut terms = Vec::new();
    let mut parity = base;
    for j in 0..=m {
        let mult: i64 = binomial(m, j)
            .try_into()
            .map_err(|_| Error::domain("binomial coefficient overflows"))?;
        let geom = Geom::kpow(lambda * int(j as i64));
        terms.push((mult, Atom::new(geom, rep.clone(), parity)));
        parity = parity.flip();
    }
    Ok(FieldContent::new(n, terms))
}
