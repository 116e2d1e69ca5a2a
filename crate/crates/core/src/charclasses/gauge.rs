use std::fmt;

use num_traits::Zero;

use crate::exactring::{format_rational, int, Rational};
use crate::error::{Error, Result};

/// At most one simple factor `SU(N)` and at most one background `U(1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct GaugeGroup {
    pub simple: Option<u32>,
    pub abelian: bool,
}

impl GaugeGroup {
    pub fn none() -> Self {
        GaugeGroup::default()
    }

    pub fn su(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::config(format!("SU({n}) requires N >= 2")));
        }
        Ok(GaugeGroup {
            simple: Some(n),
            abelian: false,
        })
    }

    pub fn with_abelian(mut self, abelian: bool) -> Self {
        self.abelian = abelian;
        self
    }
}

/// A representation summarized by its dimension, the coefficients of `s2`
/// and `s3` in its character (fundamental normalized to one), and its U(1)
/// charge.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaugeRep {
    pub dim: u64,
    pub t2: Rational,
    pub t3: Rational,
    pub q: Rational,
}

impl GaugeRep {
    pub fn new(dim: u64, t2: Rational, t3: Rational, q: Rational) -> Result<Self> {
        if dim == 0 {
            return Err(Error::config("representation dimension must be positive"));
        }
        Ok(GaugeRep { dim, t2, t3, q })
    }

    pub fn fundamental(n: u32) -> Self {
        GaugeRep {
            dim: n as u64,
            t2: int(1),
            t3: int(1),
            q: int(0),
        }
    }

    pub fn antifundamental(n: u32) -> Self {
        GaugeRep {
            dim: n as u64,
            t2: int(1),
            t3: int(-1),
            q: int(0),
        }
    }

    /// `Tr_adj X² = 2N Tr_fun X²` and `Tr_adj X³ = 0` on `sl(N)`.
    pub fn adjoint(n: u32) -> Self {
        let n64 = n as u64;
        GaugeRep {
            dim: n64 * n64 - 1,
            t2: int(2 * n as i64),
            t3: int(0),
            q: int(0),
        }
    }

    /// `m` copies of the trivial representation, uncharged.
    pub fn trivial(m: u64) -> Self {
        assert!(m >= 1, "trivial representation needs positive dimension");
        GaugeRep {
            dim: m,
            t2: int(0),
            t3: int(0),
            q: int(0),
        }
    }

    pub fn with_charge(mut self, q: Rational) -> Self {
        self.q = q;
        self
    }

    /// True when the character has no simple-gauge classes.
    pub fn is_simple_trivial(&self) -> bool {
        self.t2.is_zero() && self.t3.is_zero()
    }

    /// Checks the representation can be realized with `group`.
    pub fn check_against(&self, group: &GaugeGroup) -> Result<()> {
        if !self.is_simple_trivial() && group.simple.is_none() {
            return Err(Error::config(format!(
                "representation {self} needs a simple gauge group"
            )));
        }
        if !self.q.is_zero() && !group.abelian {
            return Err(Error::config(format!(
                "representation {self} carries a U(1) charge but the flavor U(1) is off"
            )));
        }
        Ok(())
    }
}

impl fmt::Display for GaugeRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(dim {}, t2 {}, t3 {}, q {})",
            self.dim,
            format_rational(&self.t2),
            format_rational(&self.t3),
            format_rational(&self.q)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins() {
        let adj = GaugeRep::adjoint(2);
        assert_eq!((adj.dim, adj.t2.clone(), adj.t3.clone()), (3, int(4), int(0)));
        assert_eq!(GaugeRep::adjoint(3).dim, 8);
        assert_eq!(GaugeRep::antifundamental(3).t3, int(-1));
        assert!(GaugeGroup::su(1).is_err());
        assert!(GaugeRep::new(0, int(0), int(0), int(0)).is_err());
    }

    #[test]
    fn group_compatibility() {
        let none = GaugeGroup::none();
        assert!(GaugeRep::fundamental(3).check_against(&none).is_err());
        assert!(GaugeRep::trivial(1).with_charge(int(1)).check_against(&none).is_err());
        assert!(GaugeRep::trivial(1)
            .with_charge(int(1))
            .check_against(&none.with_abelian(true))
            .is_ok());
    }
}
