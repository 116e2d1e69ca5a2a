//! Truncated commutative polynomials in even-degree generators.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::generators::{GeneratorSet, Monomial};
use super::rational::{format_rational, int, Rational};
use crate::error::{Error, Result};

/// A polynomial over the rationals in the generators of a [`GeneratorSet`],
/// with every monomial above the set's degree cap discarded.
///
/// Since all generators have even degree the ring is commutative and no
/// Koszul signs arise.
#[derive(Debug, Clone)]
pub struct GradedPoly {
    ctx: Arc<GeneratorSet>,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for GradedPoly {
    fn eq(&self, other: &Self) -> bool {
        same_context(&self.ctx, &other.ctx) && self.terms == other.terms
    }
}

impl Eq for GradedPoly {}

fn same_context(a: &Arc<GeneratorSet>, b: &Arc<GeneratorSet>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl GradedPoly {
    pub fn zero(ctx: &Arc<GeneratorSet>) -> Self {
        GradedPoly {
            ctx: Arc::clone(ctx),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ctx: &Arc<GeneratorSet>) -> Self {
        Self::constant(ctx, Rational::one())
    }

    pub fn constant(ctx: &Arc<GeneratorSet>, value: Rational) -> Self {
        Self::term(ctx, vec![0; ctx.len()], value)
    }

    /// A single term; dropped if it is zero or above the cap.
    pub fn term(ctx: &Arc<GeneratorSet>, monomial: Monomial, coeff: Rational) -> Self {
        assert_eq!(monomial.len(), ctx.len(), "exponent vector length mismatch");
        let mut p = Self::zero(ctx);
        if !coeff.is_zero() && ctx.degree_of(&monomial) <= ctx.cap() {
            p.terms.insert(monomial, coeff);
        }
        p
    }

    /// The generator called `name`, with coefficient one.
    pub fn generator(ctx: &Arc<GeneratorSet>, name: &str) -> Result<Self> {
        let m = ctx.monomial(&[(name, 1)])?;
        Ok(Self::term(ctx, m, Rational::one()))
    }

    /// Builds a polynomial from `(coefficient, "g1*g2")` pairs.
    pub fn from_terms(ctx: &Arc<GeneratorSet>, terms: &[(Rational, &str)]) -> Result<Self> {
        let mut p = Self::zero(ctx);
        for (c, m) in terms {
            let m = ctx.parse_monomial(m)?;
            p.add_term(m, c.clone());
        }
        Ok(p)
    }

    pub fn context(&self) -> &Arc<GeneratorSet> {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    fn add_term(&mut self, monomial: Monomial, coeff: Rational) {
        if coeff.is_zero() || self.ctx.degree_of(&monomial) > self.ctx.cap() {
            return;
        }
        match self.terms.entry(monomial) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_context(&self, other: &Self) -> Result<()> {
        if same_context(&self.ctx, &other.ctx) {
            Ok(())
        } else {
            Err(Error::context(format!(
                "generator sets differ: {} vs {}",
                self.ctx, other.ctx
            )))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_context(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    /// Product with all monomials above the degree cap discarded.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_context(other)?;
        let cap = self.ctx.cap();
        let mut out = Self::zero(&self.ctx);
        for (ma, ca) in &self.terms {
            let da = self.ctx.degree_of(ma);
            for (mb, cb) in &other.terms {
                if da + self.ctx.degree_of(mb) > cap {
                    continue;
                }
                let m: Monomial = ma.iter().zip(mb).map(|(a, b)| a + b).collect();
                out.add_term(m, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero(&self.ctx);
        }
        GradedPoly {
            ctx: Arc::clone(&self.ctx),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * factor))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.ctx);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&vec![0; self.ctx.len()])
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Stored coefficient of `monomial`, or zero.
    pub fn coefficient(&self, monomial: &[u32]) -> Result<Rational> {
        if monomial.len() != self.ctx.len() {
            return Err(Error::context(format!(
                "exponent vector of length {} for {} generators",
                monomial.len(),
                self.ctx.len()
            )));
        }
        Ok(self.terms.get(monomial).cloned().unwrap_or_else(Rational::zero))
    }

    /// Coefficient of a monomial written as `"g1*g2"`.
    pub fn coefficient_of(&self, monomial: &str) -> Result<Rational> {
        let m = self.ctx.parse_monomial(monomial)?;
        self.coefficient(&m)
    }

    /// Homogeneous part of degree `degree`.
    pub fn component(&self, degree: u32) -> Self {
        GradedPoly {
            ctx: Arc::clone(&self.ctx),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| self.ctx.degree_of(m) == degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Degree of the highest non-zero term, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| self.ctx.degree_of(m)).max()
    }

    pub fn is_homogeneous(&self, degree: u32) -> bool {
        self.terms.keys().all(|m| self.ctx.degree_of(m) == degree)
    }

    /// Generators that occur with non-zero exponent somewhere.
    pub fn support(&self) -> Vec<usize> {
        (0..self.ctx.len())
            .filter(|&i| self.terms.keys().any(|m| m[i] > 0))
            .collect()
    }

    /// `Σ p^k / k!`; requires a vanishing constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.constant_term().is_zero() {
            return Err(Error::domain("exp of a polynomial with non-zero constant term"));
        }
        let mut sum = Self::one(&self.ctx);
        let mut power = Self::one(&self.ctx);
        let mut k = 1i64;
        loop {
            power = (&power * self).scale(&Rational::new(1.into(), k.into()));
            if power.is_zero() {
                break;
            }
            sum = &sum + &power;
            k += 1;
        }
        Ok(sum)
    }

    /// `Σ (-1)^(k-1) (p - 1)^k / k`; requires constant term one.
    pub fn log(&self) -> Result<Self> {
        if !self.constant_term().is_one() {
            return Err(Error::domain("log of a polynomial whose constant term is not 1"));
        }
        let x = self - &Self::one(&self.ctx);
        let mut sum = Self::zero(&self.ctx);
        let mut power = Self::one(&self.ctx);
        let mut k = 1i64;
        loop {
            power = &power * &x;
            if power.is_zero() {
                break;
            }
            let c = Rational::new(if k % 2 == 1 { 1 } else { -1 }.into(), k.into());
            sum = &sum + &power.scale(&c);
            k += 1;
        }
        Ok(sum)
    }

    /// Ring homomorphism sending generator `i` of this polynomial's set to
    /// `images[i]`, evaluated in the target set.
    pub fn substitute(&self, target: &Arc<GeneratorSet>, images: &[GradedPoly]) -> Result<Self> {
        if images.len() != self.ctx.len() {
            return Err(Error::context("one image per generator is required"));
        }
        for img in images {
            if !same_context(img.context(), target) {
                return Err(Error::context("substitution image lives in a foreign generator set"));
            }
        }
        let mut powers: Vec<Vec<GradedPoly>> = images.iter().map(|_| Vec::new()).collect();
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut acc = Self::constant(target, c.clone());
            for (i, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                if cache.is_empty() {
                    cache.push(Self::one(target));
                }
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap() * &images[i];
                    cache.push(next);
                }
                acc = &acc * &cache[e as usize];
            }
            out = &out + &acc;
        }
        Ok(out)
    }

    /// Re-expresses this polynomial in another generator set by matching
    /// generator names; terms above the target cap are dropped.
    pub fn embed(&self, target: &Arc<GeneratorSet>) -> Result<Self> {
        let map: Vec<usize> = self
            .ctx
            .generators()
            .iter()
            .map(|g| target.index_of(&g.name))
            .enumerate()
            .map(|(i, idx)| match idx {
                Some(j) => Ok(j),
                None if self.terms.keys().all(|m| m[i] == 0) => Ok(usize::MAX),
                None => Err(Error::context(format!(
                    "generator `{}` missing from target set",
                    self.ctx.generators()[i].name
                ))),
            })
            .collect::<Result<_>>()?;
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut t = vec![0; target.len()];
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    if target.generators()[map[i]].degree != self.ctx.generators()[i].degree {
                        return Err(Error::context("generator degree differs in target set"));
                    }
                    t[map[i]] = e;
                }
            }
            out.add_term(t, c.clone());
        }
        Ok(out)
    }
}

impl Add for &GradedPoly {
    type Output = GradedPoly;
    fn add(self, rhs: &GradedPoly) -> GradedPoly {
        self.try_add(rhs).expect("polynomials from different generator sets")
    }
}

impl Sub for &GradedPoly {
    type Output = GradedPoly;
    fn sub(self, rhs: &GradedPoly) -> GradedPoly {
        self.try_sub(rhs).expect("polynomials from different generator sets")
    }
}

impl Mul for &GradedPoly {
    type Output = GradedPoly;
    fn mul(self, rhs: &GradedPoly) -> GradedPoly {
        self.try_mul(rhs).expect("polynomials from different generator sets")
    }
}

impl Neg for &GradedPoly {
    type Output = GradedPoly;
    fn neg(self) -> GradedPoly {
        self.scale(&int(-1))
    }
}

impl fmt::Display for GradedPoly {
    /// Terms ordered by degree, then by exponent vector descending.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut terms: Vec<(&Monomial, &Rational)> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            self.ctx
                .degree_of(a)
                .cmp(&self.ctx.degree_of(b))
                .then_with(|| b.cmp(a))
        });
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mono = self.ctx.format_monomial(m);
            if mono == "1" {
                write!(f, "{}", format_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{}", format_rational(&abs), mono)?;
            }
        }
        Ok(())
    }
}
