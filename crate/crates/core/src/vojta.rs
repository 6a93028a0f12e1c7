//! Lower bound for `Λ_X = sup limsup K·Cₙ/(gₙ − 1)` on a surface of general
//! type, realised by pulling back general rational curves of degree `n` along a
//! general projection to the plane.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{domain, Error, Result};
use crate::exactmath::{int, Rational};

/// `(K·L, L², γ)` for a very ample `L`, with `2γ − 2 = L² + K·L`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolarizedSurface {
    kl: BigInt,
    l2: BigInt,
    gamma: BigInt,
}

impl PolarizedSurface {
    pub fn new(kl: impl Into<BigInt>, l2: impl Into<BigInt>, gamma: impl Into<BigInt>) -> Result<Self> {
        let (kl, l2, gamma) = (kl.into(), l2.into(), gamma.into());
        if !l2.is_positive() {
            return Err(domain(format!("L^2 = {l2} must be positive")));
        }
        if &gamma * 2 - 2 != &l2 + &kl {
            return Err(Error::InvalidClass(format!(
                "adjunction fails for |L|: 2*{gamma} - 2 != {l2} + {kl}"
            )));
        }
        Ok(PolarizedSurface { kl, l2, gamma })
    }

    /// The case `K = mL`: `K·L = mL²` and `γ = 1 + (1+m)L²/2`.
    pub fn pluricanonical(m: impl Into<BigInt>, l2: impl Into<BigInt>) -> Result<Self> {
        let (m, l2) = (m.into(), l2.into());
        let twice: BigInt = (&m + 1) * &l2;
        if twice.is_odd() {
            return Err(Error::InvalidClass(format!("(1 + {m}) * {l2} is odd")));
        }
        Self::new(&m * &l2, l2, twice / 2 + 1)
    }

    pub fn kl(&self) -> &BigInt {
        &self.kl
    }

    pub fn l2(&self) -> &BigInt {
        &self.l2
    }

    pub fn gamma(&self) -> &BigInt {
        &self.gamma
    }
}

/// `K·L / (L² + γ − 1)`, a lower bound for `Λ_X`.
pub fn lambda_lower(ps: &PolarizedSurface) -> Result<Rational> {
    if !ps.kl.is_positive() {
        return Err(Error::Precondition(format!("K.L = {} must be positive", ps.kl)));
    }
    Ok(Rational::new(ps.kl.clone(), &ps.l2 + &ps.gamma - 1))
}

/// Pullback `Cₙ ∈ |nL|` of a general rational plane curve of degree `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectionCurve {
    pub n: BigInt,
    /// `gₙ` from `2gₙ − 2 = n·K·L + (3n − 2)L²`.
    pub genus: BigInt,
    /// `K·Cₙ / (gₙ − 1)`.
    pub ratio: Rational,
}

/// `K·Cₙ/(gₙ − 1)`, computed from the genus formula and cross-checked against
/// the closed form `K·L / (L² + γ − 1 − L²/n)`.
pub fn projection_ratio(ps: &PolarizedSurface, n: impl Into<BigInt>) -> Result<ProjectionCurve> {
    let n = n.into();
    if !n.is_positive() {
        return Err(domain(format!("degree n = {n} must be positive")));
    }
    let twice_gm1: BigInt = &n * &ps.kl + (&n * 3 - 2) * &ps.l2;
    if !twice_gm1.is_positive() {
        return Err(domain(format!("2g_n - 2 = {twice_gm1} is not positive")));
    }
    debug_assert!(twice_gm1.is_even());
    let gm1 = twice_gm1 / 2;
    let genus = &gm1 + 1;
    let via_genus = Rational::new(&n * &ps.kl, gm1);

    let closed_denominator = int(&ps.l2 + &ps.gamma - 1) - Rational::new(ps.l2.clone(), n.clone());
    if closed_denominator.is_zero() {
        return Err(domain("closed form has a zero denominator"));
    }
    let closed = int(ps.kl.clone()) / closed_denominator;
    if closed != via_genus {
        return Err(Error::Inconsistent(format!(
            "genus route gives {via_genus}, closed form gives {closed}"
        )));
    }
    Ok(ProjectionCurve {
        n,
        genus,
        ratio: via_genus,
    })
}

/// `2m/(m+3)`, the bound when `K = mL`.
pub fn pluricanonical_lambda(m: impl Into<BigInt>) -> Result<Rational> {
    let m = m.into();
    if !m.is_positive() {
        return Err(domain(format!("m = {m} must be positive")));
    }
    Ok(Rational::new(&m * 2, m + 3))
}
