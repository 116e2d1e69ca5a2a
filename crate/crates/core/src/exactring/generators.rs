//! Named even-degree generators and the degree cap of a truncated ring.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Dense exponent vector, one entry per generator of the owning set.
pub type Monomial = Vec<u32>;

/// What a generator stands for; drives anomaly classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GeneratorKind {
    /// `ch_k` of the universal tangent bundle.
    Gravitational(u32),
    /// Characteristic classes of the gauge bundle (`s2`, `s3`, `f1`).
    Gauge,
    /// Classes of the untwisted theory (`tc1`, `p1`).
    Untwisted,
    Auxiliary,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
    pub kind: GeneratorKind,
}

/// Ordered list of generators together with the maximal retained degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorSet {
    gens: Vec<Generator>,
    cap: u32,
}

pub const SIMPLE_CH2: &str = "s2";
pub const SIMPLE_CH3: &str = "s3";
pub const ABELIAN_CH1: &str = "f1";
pub const R_SYMMETRY_C1: &str = "tc1";
pub const PONTRYAGIN_P1: &str = "p1";

pub fn gravitational_name(k: u32) -> String {
    format!("g{k}")
}

fn kind_for_name(name: &str) -> GeneratorKind {
    match name {
        SIMPLE_CH2 | SIMPLE_CH3 | ABELIAN_CH1 => GeneratorKind::Gauge,
        R_SYMMETRY_C1 | PONTRYAGIN_P1 => GeneratorKind::Untwisted,
        _ => match name.strip_prefix('g').and_then(|k| k.parse::<u32>().ok()) {
            Some(k) if k >= 1 => GeneratorKind::Gravitational(k),
            _ => GeneratorKind::Auxiliary,
        },
    }
}

impl GeneratorSet {
    /// Builds a generator set; the kind of each generator is inferred from
    /// the canonical names (`g<k>`, `s2`, `s3`, `f1`, `tc1`, `p1`).
    pub fn new<S: Into<String>>(
        gens: impl IntoIterator<Item = (S, u32)>,
        cap: u32,
    ) -> Result<Arc<Self>> {
        let gens: Vec<Generator> = gens
            .into_iter()
            .map(|(name, degree)| {
                let name = name.into();
                let kind = kind_for_name(&name);
                Generator { name, degree, kind }
            })
            .collect();
        let mut seen = HashSet::new();
        for g in &gens {
            if g.name.is_empty() || !g.name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(Error::context(format!("invalid generator name `{}`", g.name)));
            }
            if !seen.insert(g.name.as_str()) {
                return Err(Error::context(format!("duplicate generator `{}`", g.name)));
            }
            if g.degree < 2 || g.degree % 2 != 0 {
                return Err(Error::context(format!(
                    "generator `{}` has degree {}; degrees must be even and at least 2",
                    g.name, g.degree
                )));
            }
            if let GeneratorKind::Gravitational(k) = g.kind {
                if g.degree != 2 * k {
                    return Err(Error::context(format!(
                        "generator `{}` must have degree {}",
                        g.name,
                        2 * k
                    )));
                }
            }
        }
        if !cap.is_multiple_of(2) {
            return Err(Error::context(format!("degree cap {cap} is odd")));
        }
        if let Some(max) = gens.iter().map(|g| g.degree).max() {
            if cap < max {
                return Err(Error::context(format!(
                    "degree cap {cap} is below the maximal generator degree {max}"
                )));
            }
        }
        Ok(Arc::new(GeneratorSet { gens, cap }))
    }

    /// `g1..gn` with cap `2n + 2`.
    pub fn gravitational(n: u32) -> Arc<Self> {
        Self::standard(n, false, false)
    }

    /// `g1..gn`, optionally the simple-gauge classes `s2`, `s3` and the
    /// abelian class `f1`, with cap `2n + 2`. Gauge classes whose degree
    /// exceeds the cap are left out since they can never contribute.
    pub fn standard(n: u32, simple: bool, abelian: bool) -> Arc<Self> {
        assert!(n >= 1, "dimension must be positive");
        let cap = 2 * n + 2;
        let mut gens: Vec<(String, u32)> = (1..=n).map(|k| (gravitational_name(k), 2 * k)).collect();
        if simple {
            for (name, degree) in [(SIMPLE_CH2, 4), (SIMPLE_CH3, 6)] {
                if degree <= cap {
                    gens.push((name.to_string(), degree));
                }
            }
        }
        if abelian {
            gens.push((ABELIAN_CH1.to_string(), 2));
        }
        Self::new(gens, cap).expect("standard generator set is valid")
    }

    /// `tc1` (degree 2) and `p1` (degree 4) with cap 6.
    pub fn untwisted() -> Arc<Self> {
        Self::new([(R_SYMMETRY_C1, 2), (PONTRYAGIN_P1, 4)], 6).expect("valid")
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g.name == name)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index_of(name).is_some()
    }

    /// Highest `k` such that `g1..gk` are all present.
    pub fn gravitational_rank(&self) -> u32 {
        let mut k = 0;
        while self.contains(&gravitational_name(k + 1)) {
            k += 1;
        }
        k
    }

    pub fn degree_of(&self, monomial: &[u32]) -> u32 {
        monomial
            .iter()
            .zip(&self.gens)
            .map(|(e, g)| e * g.degree)
            .sum()
    }

    /// Exponent vector from `(name, exponent)` pairs.
    pub fn monomial(&self, factors: &[(&str, u32)]) -> Result<Monomial> {
        let mut exps = vec![0; self.gens.len()];
        for (name, e) in factors {
            let i = self
                .index_of(name)
                .ok_or_else(|| Error::context(format!("unknown generator `{name}`")))?;
            exps[i] += e;
        }
        Ok(exps)
    }

    /// Parses `"g1*s2"`, `"g1^3"` or `"1"` into an exponent vector.
    pub fn parse_monomial(&self, text: &str) -> Result<Monomial> {
        let text = text.trim();
        if text == "1" {
            return Ok(vec![0; self.gens.len()]);
        }
        let mut factors = Vec::new();
        for factor in text.split('*') {
            let factor = factor.trim();
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => (
                    n,
                    e.parse::<u32>()
                        .map_err(|_| Error::context(format!("bad exponent in `{factor}`")))?,
                ),
                None => (factor, 1),
            };
            factors.push((name, exp));
        }
        self.monomial(&factors)
    }

    /// Renders an exponent vector as `g1*s2`, `g1^3`, or `1`.
    pub fn format_monomial(&self, monomial: &[u32]) -> String {
        let parts: Vec<String> = monomial
            .iter()
            .zip(&self.gens)
            .filter(|(e, _)| **e > 0)
            .map(|(e, g)| {
                if *e == 1 {
                    g.name.clone()
                } else {
                    format!("{}^{}", g.name, e)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    /// All exponent vectors of total degree exactly `degree`, in
    /// lexicographic order of the exponent vectors (descending).
    pub fn monomials_of_degree(&self, degree: u32) -> Vec<Monomial> {
        fn go(gens: &[Generator], i: usize, left: u32, cur: &mut Monomial, out: &mut Vec<Monomial>) {
            if i == gens.len() {
                if left == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            let d = gens[i].degree;
            let mut e = left / d;
            loop {
                cur[i] = e;
                go(gens, i + 1, left - e * d, cur, out);
                if e == 0 {
                    break;
                }
                e -= 1;
            }
            cur[i] = 0;
        }
        let mut out = Vec::new();
        if degree.is_multiple_of(2) {
            let mut cur = vec![0; self.gens.len()];
            go(&self.gens, 0, degree, &mut cur, &mut out);
        }
        out
    }
}

impl fmt::Display for GeneratorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self
            .gens
            .iter()
            .map(|g| format!("{}:{}", g.name, g.degree))
            .collect();
        write!(f, "[{}] cap {}", names.join(", "), self.cap)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_sets() {
        assert!(GeneratorSet::new([("a", 2), ("a", 4)], 6).is_err());
        assert!(GeneratorSet::new([("a", 3)], 6).is_err());
        assert!(GeneratorSet::new([("a", 0)], 6).is_err());
        assert!(GeneratorSet::new([("a", 8)], 6).is_err());
        assert!(GeneratorSet::new([("g2", 2)], 6).is_err());
        assert!(GeneratorSet::new([("a", 2)], 5).is_err());
    }

    #[test]
    fn standard_sets() {
        let ctx = GeneratorSet::standard(2, true, true);
        assert_eq!(ctx.cap(), 6);
        assert_eq!(ctx.format_monomial(&ctx.parse_monomial("g1*s2").unwrap()), "g1*s2");
        assert_eq!(ctx.gravitational_rank(), 2);
        let small = GeneratorSet::standard(1, true, false);
        assert!(!small.contains("s3"));
        assert!(small.contains("s2"));
    }

    #[test]
    fn monomial_enumeration() {
        let ctx = GeneratorSet::gravitational(2);
        let names: Vec<String> = ctx
            .monomials_of_degree(6)
            .iter()
            .map(|m| ctx.format_monomial(m))
            .collect();
        assert_eq!(names, vec!["g1^3", "g1*g2"]);
        assert_eq!(ctx.monomials_of_degree(0).len(), 1);
        assert!(ctx.parse_monomial("g7").is_err());
        assert!(ctx.parse_monomial("g1^x").is_err());
    }
}
