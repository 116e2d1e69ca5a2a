//! Newton's identities between Chern classes and Chern-character components.
//!
//! With power sums `p_k = k! ch_k` and elementary symmetric functions `e_k`
//! (the Chern classes `c_k`) of a rank-`n` bundle:
//! `p_k = Σ_{i=1}^{k-1} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k`, `e_k = 0`
//! for `k > n`.

use std::sync::Arc;

use crate::exactring::generators::gravitational_name;
use crate::exactring::rational::factorial;
use crate::exactring::{int, rat, GeneratorSet, GradedPoly};
use crate::error::{Error, Result};

/// Power sums `p_1..p_count` from elementary symmetric functions `e_1..e_n`.
pub fn power_sums_from_elementary(
    ctx: &Arc<GeneratorSet>,
    elementary: &[GradedPoly],
    count: usize,
) -> Vec<GradedPoly> {
    let e = |i: usize| elementary.get(i - 1);
    let mut p: Vec<GradedPoly> = Vec::with_capacity(count);
    for k in 1..=count {
        let mut acc = GradedPoly::zero(ctx);
        for i in 1..k {
            if let Some(ei) = e(i) {
                let sign = if i % 2 == 1 { int(1) } else { int(-1) };
                acc = &acc + &(ei * &p[k - i - 1]).scale(&sign);
            }
        }
        if let Some(ek) = e(k) {
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc = &acc + &ek.scale(&int(sign * k as i64));
        }
        p.push(acc);
    }
    p
}

/// Elementary symmetric functions `e_1..e_rank` from power sums
/// `p_1..p_rank`: `k e_k = Σ_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i`.
pub fn elementary_from_power_sums(
    ctx: &Arc<GeneratorSet>,
    power_sums: &[GradedPoly],
    rank: usize,
) -> Vec<GradedPoly> {
    assert!(power_sums.len() >= rank, "need p_1..p_rank");
    let mut e: Vec<GradedPoly> = vec![GradedPoly::one(ctx)];
    for k in 1..=rank {
        let mut acc = GradedPoly::zero(ctx);
        for i in 1..=k {
            let term = &e[k - i] * &power_sums[i - 1];
            acc = if i % 2 == 1 { &acc + &term } else { &acc - &term };
        }
        e.push(acc.scale(&rat(1, k as i64)));
    }
    e.remove(0);
    e
}

fn gravitational_generators(n: u32, ctx: &Arc<GeneratorSet>) -> Result<Vec<GradedPoly>> {
    (1..=n)
        .map(|k| {
            GradedPoly::generator(ctx, &gravitational_name(k)).map_err(|_| {
                Error::context(format!("generator set {ctx} lacks g{k} for rank {n}"))
            })
        })
        .collect()
}

/// Chern classes `c_1..c_n` of the rank-`n` universal bundle in terms of
/// its Chern-character generators `g_k = ch_k`.
pub fn newton_c_from_ch(n: u32, ctx: &Arc<GeneratorSet>) -> Result<Vec<GradedPoly>> {
    let g = gravitational_generators(n, ctx)?;
    let p: Vec<GradedPoly> = g
        .iter()
        .enumerate()
        .map(|(i, gk)| gk.scale(&factorial(i as u32 + 1)))
        .collect();
    Ok(elementary_from_power_sums(ctx, &p, n as usize))
}

/// Chern-character components `ch_1..ch_{cap/2}` of a bundle whose Chern
/// classes are `chern` (its rank is `chern.len()`).
pub fn newton_ch_from_c(chern: &[GradedPoly], ctx: &Arc<GeneratorSet>) -> Vec<GradedPoly> {
    let count = (ctx.cap() / 2) as usize;
    power_sums_from_elementary(ctx, chern, count)
        .into_iter()
        .enumerate()
        .map(|(i, p)| p.scale(&factorial(i as u32 + 1).recip()))
        .collect()
}

/// `ch_1..ch_{cap/2}` of the rank-`n` universal tangent bundle: the
/// generators `g_k` for `k <= n`, Newton-extended above the rank.
pub fn tangent_ch(n: u32, ctx: &Arc<GeneratorSet>) -> Result<Vec<GradedPoly>> {
    let g = gravitational_generators(n, ctx)?;
    let chern = newton_c_from_ch(n, ctx)?;
    let extended = newton_ch_from_c(&chern, ctx);
    Ok(extended
        .into_iter()
        .enumerate()
        .map(|(i, ch)| if i < g.len() { g[i].clone() } else { ch })
        .collect())
}
