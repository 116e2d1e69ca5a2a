use super::newton::tangent_ch;
use crate::exactring::generators::gravitational_name;
use crate::exactring::{int, GeneratorKind, GeneratorSet, GradedPoly, Rational};
use crate::error::{Error, Result};

const FIBER: &str = "fiber_c1";

/// Integrates a class on `BU(n+1)` over a compact curve fiber.
///
/// The tangent bundle splits as `T_base ⊕ T_curve`; with `s = c_1(T_curve)`
/// and `s² = 0`, `ch_1 ↦ ĉh_1 + s` and `ch_k ↦ ch_k(T_base)` for `k >= 2`.
/// The `s`-linear part is integrated using `∫ s = 2 χ_hol`. Generators that
/// are not gravitational pass through unchanged.
pub fn pushforward_curve(p: &GradedPoly, n: u32, chi_hol: &Rational) -> Result<GradedPoly> {
    let src = p.context();
    for i in p.support() {
        if let GeneratorKind::Gravitational(k) = src.generators()[i].kind {
            if k > n + 1 {
                return Err(Error::context(format!(
                    "g{k} does not exist on BU({})",
                    n + 1
                )));
            }
        }
    }
    if src.cap() < 2 {
        return Err(Error::context("cap too small for a pushforward"));
    }
    let passthrough: Vec<(String, u32)> = src
        .generators()
        .iter()
        .filter(|g| !matches!(g.kind, GeneratorKind::Gravitational(_)))
        .map(|g| (g.name.clone(), g.degree))
        .collect();
    let base_gens = || {
        (1..=n)
            .map(|k| (gravitational_name(k), 2 * k))
            .chain(passthrough.iter().cloned())
    };
    // base classes plus the square-zero fiber symbol, at the source cap
    let work = GeneratorSet::new(base_gens().chain([(FIBER.to_string(), 2)]), src.cap())?;
    let mid = GeneratorSet::new(base_gens(), src.cap())?;
    let target_cap = src.cap() - 2;
    let target = GeneratorSet::new(
        base_gens().filter(|(_, d)| *d <= target_cap),
        target_cap,
    )?;

    let base_ch = tangent_ch(n, &work)?;
    let fiber = GradedPoly::generator(&work, FIBER)?;
    let images: Vec<GradedPoly> = src
        .generators()
        .iter()
        .map(|g| match g.kind {
            GeneratorKind::Gravitational(1) => Ok(&base_ch[0] + &fiber),
            GeneratorKind::Gravitational(k) => base_ch
                .get(k as usize - 1)
                .cloned()
                .ok_or_else(|| Error::context(format!("g{k} above the cap"))),
            _ => GradedPoly::generator(&work, &g.name),
        })
        .collect::<Result<_>>()?;
    let expanded = p.substitute(&work, &images)?;

    let fiber_idx = work.index_of(FIBER).expect("present");
    let mut linear = GradedPoly::zero(&mid);
    for (m, c) in expanded.terms() {
        if m[fiber_idx] != 1 {
            continue;
        }
        let mut reduced = m.clone();
        reduced.remove(fiber_idx);
        linear = &linear + &GradedPoly::term(&mid, reduced, c.clone());
    }
    Ok(linear.embed(&target)?.scale(&(chi_hol * int(2))))
}
