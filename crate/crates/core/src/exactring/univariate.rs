//! Dense univariate polynomials and truncated power series over the rationals.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, Rational};
use crate::error::{Error, Result};

/// `Σ coeffs[i] · x^i`, with no trailing zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Exact Lagrange interpolation through `(x_i, y_i)`; the nodes must be
    /// distinct.
    pub fn interpolate(points: &[(Rational, Rational)]) -> Result<Self> {
        for (i, (xi, _)) in points.iter().enumerate() {
            if points[..i].iter().any(|(xj, _)| xj == xi) {
                return Err(Error::domain("interpolation nodes must be distinct"));
            }
        }
        let mut acc = vec![Rational::zero(); points.len()];
        for (i, (xi, yi)) in points.iter().enumerate() {
            // basis polynomial Π_{j≠i} (x - x_j) / (x_i - x_j)
            let mut basis = vec![Rational::one()];
            let mut denom = Rational::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                let mut next = vec![Rational::zero(); basis.len() + 1];
                for (k, b) in basis.iter().enumerate() {
                    next[k + 1] += b;
                    next[k] -= b * xj;
                }
                basis = next;
                denom *= xi - xj;
            }
            let scale = yi / denom;
            for (k, b) in basis.iter().enumerate() {
                acc[k] += b * &scale;
            }
        }
        Ok(UniPoly::new(acc))
    }

    /// Integer coefficients of a positive rational multiple of `self`.
    fn primitive_integer_coeffs(&self) -> Vec<BigInt> {
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if g.is_zero() {
            ints
        } else {
            ints.into_iter().map(|c| c / &g).collect()
        }
    }

    /// Distinct rational roots in increasing order, found with the rational
    /// root theorem. The zero polynomial has no finite root list and is
    /// rejected.
    pub fn rational_roots(&self) -> Result<Vec<Rational>> {
        if self.is_zero() {
            return Err(Error::domain("the zero polynomial vanishes identically"));
        }
        let mut ints = self.primitive_integer_coeffs();
        let mut roots = Vec::new();
        // factor out x^k
        let shift = ints.iter().take_while(|c| c.is_zero()).count();
        if shift > 0 {
            roots.push(Rational::zero());
            ints.drain(..shift);
        }
        if ints.len() > 1 {
            let lead = ints.last().unwrap().abs();
            let constant = ints[0].abs();
            let reduced = UniPoly::new(ints.iter().cloned().map(Rational::from_integer).collect());
            for p in divisors(&constant) {
                for q in divisors(&lead) {
                    if p.gcd(&q) != BigInt::one() {
                        continue;
                    }
                    for sign in [1, -1] {
                        let cand = Rational::new(&p * BigInt::from(sign), q.clone());
                        if reduced.eval(&cand).is_zero() && !roots.contains(&cand) {
                            roots.push(cand);
                        }
                    }
                }
            }
        }
        roots.sort();
        Ok(roots)
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            let other = n / &d;
            if other != d {
                large.push(other);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

impl fmt::Display for UniPoly {
    /// Renders in the variable `r`, highest power first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let var = match k {
                0 => String::new(),
                1 => "r".to_string(),
                _ => format!("r^{k}"),
            };
            if var.is_empty() {
                write!(f, "{}", format_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{var}")?;
            } else {
                write!(f, "{}*{}", format_rational(&abs), var)?;
            }
        }
        Ok(())
    }
}

/// Truncated product of two power series given by coefficient lists.
pub fn series_mul(a: &[Rational], b: &[Rational], len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// Multiplicative inverse of a power series with invertible constant term.
pub fn series_inverse(a: &[Rational], len: usize) -> Result<Vec<Rational>> {
    let a0 = a.first().filter(|c| !c.is_zero()).ok_or_else(|| {
        Error::domain("power series with zero constant term is not invertible")
    })?;
    let mut out = vec![Rational::zero(); len];
    if len == 0 {
        return Ok(out);
    }
    out[0] = a0.recip();
    for k in 1..len {
        let mut s = Rational::zero();
        for i in 1..=k.min(a.len() - 1) {
            s += &a[i] * &out[k - i];
        }
        out[k] = -s / a0;
    }
    Ok(out)
}

/// Logarithm of a power series with constant term one, via `log(a)' = a'/a`.
pub fn series_log(a: &[Rational], len: usize) -> Result<Vec<Rational>> {
    if a.first().map(|c| c.is_one()) != Some(true) {
        return Err(Error::domain("log of a power series needs constant term 1"));
    }
    let deriv: Vec<Rational> = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
        .collect();
    let quotient = series_mul(&deriv, &series_inverse(a, len)?, len);
    let mut out = vec![Rational::zero(); len];
    for k in 1..len {
        out[k] = &quotient[k - 1] / Rational::from_integer(BigInt::from(k));
    }
    Ok(out)
}
