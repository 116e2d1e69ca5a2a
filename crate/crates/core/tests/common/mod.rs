#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::Arc;

use holanom::charclasses::{Atom, FieldContent, GaugeRep, Geom, Parity};
use holanom::exactring::{int, rat, GeneratorSet, GradedPoly, Monomial, Rational};
use num_traits::Zero;
use proptest::prelude::*;

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=6).prop_map(|(p, q)| rat(p, q))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    small_rational().prop_filter("non-zero", |q| !q.is_zero())
}

/// Every monomial of the set up to its cap, constant first.
pub fn all_monomials(ctx: &GeneratorSet) -> Vec<Monomial> {
    (0..=ctx.cap())
        .step_by(2)
        .flat_map(|d| ctx.monomials_of_degree(d))
        .collect()
}

pub fn contexts() -> Vec<Arc<GeneratorSet>> {
    vec![
        GeneratorSet::gravitational(1),
        GeneratorSet::standard(1, false, true),
        GeneratorSet::standard(2, true, true),
        GeneratorSet::gravitational(3),
        GeneratorSet::standard(3, true, false),
    ]
}

pub fn poly_in(ctx: Arc<GeneratorSet>, max_terms: usize) -> impl Strategy<Value = GradedPoly> {
    let monomials = all_monomials(&ctx);
    prop::collection::vec((0..monomials.len(), small_rational()), 0..=max_terms).prop_map(
        move |terms| {
            terms.into_iter().fold(GradedPoly::zero(&ctx), |acc, (i, c)| {
                &acc + &GradedPoly::term(&ctx, monomials[i].clone(), c)
            })
        },
    )
}

/// Polynomials with zero constant term.
pub fn nilpotent_in(ctx: Arc<GeneratorSet>, max_terms: usize) -> impl Strategy<Value = GradedPoly> {
    poly_in(ctx, max_terms).prop_map(|p| {
        let c = p.constant_term();
        &p - &GradedPoly::constant(p.context(), c)
    })
}

/// A context index together with three polynomials in it.
pub fn poly_triple() -> impl Strategy<Value = (GradedPoly, GradedPoly, GradedPoly)> {
    (0..contexts().len()).prop_flat_map(|i| {
        let ctx = contexts()[i].clone();
        (poly_in(ctx.clone(), 6), poly_in(ctx.clone(), 6), poly_in(ctx, 6))
    })
}

pub fn surface_rep() -> impl Strategy<Value = GaugeRep> {
    (2u32..=5, 0usize..5, small_rational()).prop_map(|(n, which, q)| {
        let rep = match which {
            0 => GaugeRep::fundamental(n),
            1 => GaugeRep::antifundamental(n),
            2 => GaugeRep::adjoint(n),
            3 => GaugeRep::trivial(n as u64),
            _ => GaugeRep::trivial(1),
        };
        rep.with_charge(q)
    })
}

pub fn geom() -> impl Strategy<Value = Geom> {
    prop_oneof![
        Just(Geom::Trivial),
        Just(Geom::Tangent),
        Just(Geom::Cotangent),
        small_rational().prop_map(Geom::kpow),
    ]
}

pub fn parity() -> impl Strategy<Value = Parity> {
    prop_oneof![Just(Parity::Even), Just(Parity::Odd)]
}

pub fn atom() -> impl Strategy<Value = Atom> {
    (geom(), surface_rep(), parity()).prop_map(|(g, r, p)| Atom::new(g, r, p))
}

/// Field content on a complex `n`-fold.
pub fn content(n: u32) -> impl Strategy<Value = FieldContent> {
    prop::collection::vec((1i64..=4, atom()), 0..=4)
        .prop_map(move |terms| FieldContent::new(n, terms))
}

/// Truncated polynomials in Chern roots `x_1..x_r`, graded by total degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootPoly {
    pub vars: usize,
    pub max_degree: u32,
    pub terms: BTreeMap<Vec<u32>, Rational>,
}

impl RootPoly {
    pub fn zero(vars: usize, max_degree: u32) -> Self {
        RootPoly { vars, max_degree, terms: BTreeMap::new() }
    }

    pub fn constant(vars: usize, max_degree: u32, c: Rational) -> Self {
        let mut p = Self::zero(vars, max_degree);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars], c);
        }
        p
    }

    pub fn var(vars: usize, max_degree: u32, i: usize) -> Self {
        let mut e = vec![0; vars];
        e[i] = 1;
        let mut p = Self::zero(vars, max_degree);
        p.terms.insert(e, int(1));
        p
    }

    fn insert(&mut self, e: Vec<u32>, c: Rational) {
        if e.iter().sum::<u32>() > self.max_degree {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(Rational::zero);
        *slot += c;
        self.terms.retain(|_, v| !v.is_zero());
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.vars, self.max_degree);
        for (e, v) in &self.terms {
            out.insert(e.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.vars, self.max_degree);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.insert(e, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::constant(self.vars, self.max_degree, int(1)), |acc, _| acc.mul(self))
    }

    /// `Σ_j coeffs[j] · x^j` for a single-variable power series in `x`.
    pub fn series(x: &Self, coeffs: &[Rational]) -> Self {
        let mut out = Self::zero(x.vars, x.max_degree);
        let mut power = Self::constant(x.vars, x.max_degree, int(1));
        for c in coeffs {
            out = out.add(&power.scale(c));
            power = power.mul(x);
        }
        out
    }

    pub fn component(&self, degree: u32) -> Self {
        let mut out = Self::zero(self.vars, self.max_degree);
        for (e, c) in &self.terms {
            if e.iter().sum::<u32>() == degree {
                out.insert(e.clone(), c.clone());
            }
        }
        out
    }
}

pub fn exp_coefficients(len: usize) -> Vec<Rational> {
    let mut out = vec![int(1)];
    for j in 1..len {
        let prev = out[j - 1].clone();
        out.push(prev / int(j as i64));
    }
    out
}

/// `x / (1 - e^{-x})` through `x^8`.
pub fn todd_root_series() -> Vec<Rational> {
    vec![
        int(1),
        rat(1, 2),
        rat(1, 12),
        int(0),
        rat(-1, 720),
        int(0),
        rat(1, 30240),
        int(0),
        rat(-1, 1209600),
    ]
}

/// Images `g_k ↦ Σ_i x_i^k / k!` of the gravitational generators of `ctx`,
/// and `images[other]` for the remaining generators.
pub fn evaluate_at_roots(
    p: &GradedPoly,
    vars: usize,
    max_degree: u32,
    other: &BTreeMap<String, RootPoly>,
) -> RootPoly {
    let ctx = p.context();
    let images: Vec<RootPoly> = ctx
        .generators()
        .iter()
        .map(|g| {
            if let Some(img) = other.get(&g.name) {
                return img.clone();
            }
            let k = g.degree / 2;
            let mut s = RootPoly::zero(vars, max_degree);
            for i in 0..vars {
                s = s.add(&RootPoly::var(vars, max_degree, i).pow(k));
            }
            s.scale(&exp_coefficients(k as usize + 1)[k as usize])
        })
        .collect();
    let mut out = RootPoly::zero(vars, max_degree);
    for (m, c) in p.terms() {
        let mut t = RootPoly::constant(vars, max_degree, c.clone());
        for (e, img) in m.iter().zip(&images) {
            t = t.mul(&img.pow(*e));
        }
        out = out.add(&t);
    }
    out
}

pub fn sum_of_roots(vars: usize, max_degree: u32) -> RootPoly {
    (0..vars).fold(RootPoly::zero(vars, max_degree), |acc, i| {
        acc.add(&RootPoly::var(vars, max_degree, i))
    })
}

/// `Π_i x_i / (1 - e^{-x_i})`.
pub fn todd_at_roots(vars: usize, max_degree: u32) -> RootPoly {
    let series = todd_root_series();
    (0..vars).fold(RootPoly::constant(vars, max_degree, int(1)), |acc, i| {
        acc.mul(&RootPoly::series(&RootPoly::var(vars, max_degree, i), &series))
    })
}
