use num_traits::{Signed, Zero};

use crate::exactring::{format_rational, Rational};

const THETA_A: &str = "Θ_a = (1/12) ∫_{C²} tr(Jμ) tr(∂Jμ ∂Jμ)";
const THETA_C: &str = "Θ_c = (1/6) ∫_{C²} tr(Jμ) tr(∂Jμ) tr(∂Jμ)";

/// Display form of the local cocycle `-4π²Θ = a_hol Θ_a + c_hol Θ_c`.
pub fn render_local_cocycle(a_hol: &Rational, c_hol: &Rational) -> String {
    let mut rhs = String::new();
    for (coeff, symbol) in [(a_hol, "Θ_a"), (c_hol, "Θ_c")] {
        if coeff.is_zero() {
            continue;
        }
        let abs = format_rational(&coeff.abs());
        match (rhs.is_empty(), coeff.is_negative()) {
            (true, true) => rhs.push_str(&format!("-{abs}·{symbol}")),
            (true, false) => rhs.push_str(&format!("{abs}·{symbol}")),
            (false, true) => rhs.push_str(&format!(" - {abs}·{symbol}")),
            (false, false) => rhs.push_str(&format!(" + {abs}·{symbol}")),
        }
    }
    if rhs.is_empty() {
        return "-4π²Θ = 0 (the anomaly vanishes)\n".to_string();
    }
    format!("-4π²Θ = {rhs}\n  {THETA_A}\n  {THETA_C}\n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactring::{int, rat};

    #[test]
    fn trivial_line() {
        let text = render_local_cocycle(&rat(-1, 24), &rat(1, 48));
        assert!(text.starts_with("-4π²Θ = -1/24·Θ_a + 1/48·Θ_c"));
        assert!(text.contains("tr(Jμ) tr(∂Jμ ∂Jμ)"));
        assert!(text.contains("tr(Jμ) tr(∂Jμ) tr(∂Jμ)"));
    }

    #[test]
    fn flipped_signs() {
        let text = render_local_cocycle(&rat(1, 24), &rat(-1, 48));
        assert!(text.starts_with("-4π²Θ = 1/24·Θ_a - 1/48·Θ_c"));
    }

    #[test]
    fn vanishing() {
        assert!(render_local_cocycle(&int(0), &int(0)).contains("vanishes"));
        assert!(render_local_cocycle(&int(0), &rat(-1, 54)).starts_with("-4π²Θ = -1/54·Θ_c"));
    }
}
