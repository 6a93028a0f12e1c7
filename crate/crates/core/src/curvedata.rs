//! Numerical invariants of surfaces and of curves on them.
//!
//! A curve is only ever seen through `(g, p_a, C², K·C)`; adjunction
//! `C² + K·C = 2p_a − 2` and `δ = p_a − g ≥ 0` are checked at construction.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{int, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kodaira {
    MinusInfinity,
    Zero,
    One,
    Two,
}

impl std::str::FromStr for Kodaira {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "-inf" | "-infinity" | "minus-infinity" => Ok(Kodaira::MinusInfinity),
            "0" => Ok(Kodaira::Zero),
            "1" => Ok(Kodaira::One),
            "2" => Ok(Kodaira::Two),
            _ => Err(Error::Parse(s.to_string(), "expected -inf, 0, 1 or 2".into())),
        }
    }
}

/// Chern numbers of a smooth projective surface together with its
/// (caller-asserted) Kodaira dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceInvariants {
    c2: BigInt,
    k2: BigInt,
    kodaira: Kodaira,
}

impl SurfaceInvariants {
    /// Rejects `a = 3c₂ − K² < 0` unless the Kodaira dimension is `−∞`.
    pub fn new(c2: impl Into<BigInt>, k2: impl Into<BigInt>, kodaira: Kodaira) -> Result<Self> {
        let s = SurfaceInvariants {
            c2: c2.into(),
            k2: k2.into(),
            kodaira,
        };
        if kodaira != Kodaira::MinusInfinity && s.a().is_negative() {
            return Err(Error::Inconsistent(format!(
                "a = 3c2 - K^2 = {} is negative on a surface with kodaira dimension >= 0",
                s.a()
            )));
        }
        Ok(s)
    }

    pub fn c2(&self) -> &BigInt {
        &self.c2
    }

    pub fn k2(&self) -> &BigInt {
        &self.k2
    }

    pub fn kodaira(&self) -> Kodaira {
        self.kodaira
    }

    pub fn a(&self) -> BigInt {
        a_invariant(&self.c2, &self.k2)
    }
}

/// `a = 3c₂ − K²`.
pub fn a_invariant(c2: &BigInt, k2: &BigInt) -> BigInt {
    c2 * 3 - k2
}

/// Arithmetic genus from adjunction, `(C² + K·C)/2 + 1`.
pub fn pa_from_adjunction(c2: &BigInt, kc: &BigInt) -> Result<BigInt> {
    let sum = c2 + kc;
    if sum.is_odd() {
        return Err(Error::InvalidClass(format!(
            "C^2 + K.C = {sum} is odd, so (C^2, K.C) = ({c2}, {kc}) cannot satisfy adjunction"
        )));
    }
    Ok(sum / 2 + 1)
}

/// Raw `(g, C², K·C)` without the adjunction or `δ ≥ 0` checks. The Miyaoka
/// expressions are polynomial in these three numbers and are evaluated on
/// arbitrary triples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveTriple {
    pub g: BigInt,
    pub c2: BigInt,
    pub kc: BigInt,
}

impl CurveTriple {
    pub fn new(g: impl Into<BigInt>, c2: impl Into<BigInt>, kc: impl Into<BigInt>) -> Self {
        CurveTriple {
            g: g.into(),
            c2: c2.into(),
            kc: kc.into(),
        }
    }
}

impl From<&CurveNumerics> for CurveTriple {
    fn from(c: &CurveNumerics) -> Self {
        CurveTriple {
            g: c.g.clone(),
            c2: c.c2.clone(),
            kc: c.kc.clone(),
        }
    }
}

impl From<&CurveTriple> for CurveTriple {
    fn from(c: &CurveTriple) -> Self {
        c.clone()
    }
}

/// Validated numerical invariants of a curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveNumerics {
    g: BigInt,
    pa: BigInt,
    c2: BigInt,
    kc: BigInt,
}

impl CurveNumerics {
    /// Builds from `(g, C², K·C)`, deriving `p_a` by adjunction.
    pub fn new(g: impl Into<BigInt>, c2: impl Into<BigInt>, kc: impl Into<BigInt>) -> Result<Self> {
        let (g, c2, kc) = (g.into(), c2.into(), kc.into());
        let pa = pa_from_adjunction(&c2, &kc)?;
        Self::checked(g, pa, c2, kc)
    }

    /// Builds from all four numbers and checks adjunction holds between them.
    pub fn with_arithmetic_genus(
        g: impl Into<BigInt>,
        pa: impl Into<BigInt>,
        c2: impl Into<BigInt>,
        kc: impl Into<BigInt>,
    ) -> Result<Self> {
        let (g, pa, c2, kc) = (g.into(), pa.into(), c2.into(), kc.into());
        let expected = pa_from_adjunction(&c2, &kc)?;
        if expected != pa {
            return Err(Error::InvalidClass(format!(
                "adjunction gives p_a = {expected}, not {pa}"
            )));
        }
        Self::checked(g, pa, c2, kc)
    }

    fn checked(g: BigInt, pa: BigInt, c2: BigInt, kc: BigInt) -> Result<Self> {
        if g.is_negative() {
            return Err(Error::InvalidClass(format!("geometric genus {g} is negative")));
        }
        if pa < g {
            return Err(Error::InvalidClass(format!(
                "delta = p_a - g = {} is negative",
                &pa - &g
            )));
        }
        Ok(CurveNumerics { g, pa, c2, kc })
    }

    pub fn g(&self) -> &BigInt {
        &self.g
    }

    pub fn pa(&self) -> &BigInt {
        &self.pa
    }

    pub fn c2(&self) -> &BigInt {
        &self.c2
    }

    pub fn kc(&self) -> &BigInt {
        &self.kc
    }

    pub fn delta(&self) -> BigInt {
        &self.pa - &self.g
    }

    pub fn triple(&self) -> CurveTriple {
        self.into()
    }

    /// `β = K·C / (g − 1)`.
    pub fn beta(&self) -> Result<Rational> {
        let gm1: BigInt = &self.g - 1;
        if gm1.is_zero() {
            return Err(Error::UndefinedBeta);
        }
        Ok(Rational::new(self.kc.clone(), gm1))
    }

    /// `ε = β − 3`; only meaningful for `g > 1`. May be `≤ 0`.
    pub fn epsilon_excess(&self) -> Result<Rational> {
        if self.g <= BigInt::one() {
            return Err(Error::UndefinedBeta);
        }
        Ok(self.beta()? - int(3))
    }

    /// `x = δ / C²`.
    pub fn x_ratio(&self) -> Result<Rational> {
        if self.c2.is_zero() {
            return Err(Error::UndefinedRatio);
        }
        Ok(Rational::new(self.delta(), self.c2.clone()))
    }
}
