use std::sync::Arc;

use super::newton::tangent_ch;
use crate::exactring::rational::factorial;
use crate::exactring::univariate::{series_inverse, series_log};
use crate::exactring::{int, GeneratorSet, GradedPoly, Rational};
use crate::error::Result;

/// Coefficients `a_0..a_{len-1}` of `log(x / (1 - e^{-x}))`.
pub fn todd_log_coefficients(len: usize) -> Vec<Rational> {
    // (1 - e^{-x}) / x = Σ_j (-1)^j x^j / (j+1)!
    let denom: Vec<Rational> = (0..len)
        .map(|j| {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            int(sign) / factorial(j as u32 + 1)
        })
        .collect();
    let series = series_inverse(&denom, len).expect("constant term is 1");
    series_log(&series, len).expect("constant term is 1")
}

/// Todd class of the rank-`n` universal tangent bundle, truncated at the
/// cap of `ctx`.
///
/// Summing the per-root series over the Chern roots turns
/// `Σ_k a_k x^k` into `Σ_k a_k p_k` with power sums `p_k = k! ch_k`, so the
/// Todd class is the exponential of that sum.
pub fn todd(n: u32, ctx: &Arc<GeneratorSet>) -> Result<GradedPoly> {
    let ch = tangent_ch(n, ctx)?;
    let a = todd_log_coefficients(ch.len() + 1);
    let mut exponent = GradedPoly::zero(ctx);
    for (i, chk) in ch.iter().enumerate() {
        let k = i + 1;
        exponent = &exponent + &chk.scale(&(&a[k] * factorial(k as u32)));
    }
    exponent.exp()
}
