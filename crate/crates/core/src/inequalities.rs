//! Miyaoka-type inequalities and the canonical-degree bounds derived from them.
//!
//! Negative curves: `k ≤ 3(g−1) + 3a/4 + √(9a² + 24a(g−1))/4`, the β bound and
//! the genus bound in terms of `ε = β − 3`, and an explicit `B(ε)`.
//! Positive curves: the genus and canonical-degree bounds in terms of a lower
//! bound `x₀` on `δ/C²`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::curvedata::{CurveNumerics, CurveTriple, SurfaceInvariants};
use crate::error::{domain, Error, Result};
use crate::exactmath::{int, ratio, QuadSurd, Rational};

/// Which closed-form bound a [`BoundReport`] carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FormulaId {
    /// `k ≤ 3(g−1) + 3a/4 + √(9a² + 24a(g−1))/4` for negative curves.
    Eq1,
    /// `β ≤ 3 + 3a/4 + √(9a² + 24a)/4`.
    Eq3,
    /// `g ≤ 1 + 3a(ε+1)/(2ε²)`.
    Eq4,
    /// Genus bound for positive curves.
    Pos1,
    /// Canonical-degree bound for positive curves, in its printed form.
    Pos2Printed,
    /// Canonical-degree bound implied by `Pos1` and `k = β(g−1)`.
    Pos2Derived,
    /// Offset in `k ≤ 2(g−1) + offset`.
    Pos3,
    /// The constant `B(ε)`.
    BEps,
}

impl FormulaId {
    pub fn as_str(self) -> &'static str {
        match self {
            FormulaId::Eq1 => "EQ1",
            FormulaId::Eq3 => "EQ3",
            FormulaId::Eq4 => "EQ4",
            FormulaId::Pos1 => "POS1",
            FormulaId::Pos2Printed => "POS2_PRINTED",
            FormulaId::Pos2Derived => "POS2_DERIVED",
            FormulaId::Pos3 => "POS3",
            FormulaId::BEps => "B_EPS",
        }
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Inputs echoed back alongside a bound.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BoundInputs {
    pub g: Option<BigInt>,
    pub a: BigInt,
    pub eps: Option<Rational>,
    pub beta: Option<Rational>,
    pub x0: Option<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub inputs: BoundInputs,
    pub bound: QuadSurd,
    pub bound_floor: BigInt,
    pub formula: FormulaId,
}

impl BoundReport {
    pub fn new(inputs: BoundInputs, bound: QuadSurd, formula: FormulaId) -> Self {
        let bound_floor = bound.floor();
        BoundReport {
            inputs,
            bound,
            bound_floor,
            formula,
        }
    }
}

fn check_alpha(alpha: &Rational) -> Result<()> {
    if alpha.is_negative() || *alpha > int(1) {
        return Err(domain(format!("alpha = {alpha} lies outside [0, 1]")));
    }
    Ok(())
}

fn check_a(a: &BigInt) -> Result<()> {
    if a.is_negative() {
        return Err(domain(format!("a = {a} must be non-negative")));
    }
    Ok(())
}

fn check_eps(eps: &Rational) -> Result<()> {
    if !eps.is_positive() {
        return Err(domain(format!("epsilon = {eps} must be positive")));
    }
    Ok(())
}

/// Coefficients of `α ↦ Aα² + Bα + C` in the first Miyaoka inequality:
/// `A = C² + 3k − 6g + 6`, `B = −4(k − 3g + 3)`, `C = 2a`.
fn m1_coefficients(c: &CurveTriple, a: &BigInt) -> (BigInt, BigInt, BigInt) {
    let lead = &c.c2 + &c.kc * 3 - &c.g * 6 + 6;
    let linear = (&c.kc - &c.g * 3 + 3) * -4;
    let constant = a * 2;
    (lead, linear, constant)
}

/// `α²(C² + 3k − 6g + 6) − 4α(k − 3g + 3) + 2a` for `α ∈ [0, 1]`.
pub fn m1_value(c: impl Into<CurveTriple>, a: impl Into<BigInt>, alpha: &Rational) -> Result<Rational> {
    check_alpha(alpha)?;
    let (lead, linear, constant) = m1_coefficients(&c.into(), &a.into());
    Ok(alpha * alpha * int(lead) + alpha * int(linear) + int(constant))
}

/// Minimum of the first Miyaoka quadratic over `[0, 1]`, as `(α, value)`.
///
/// The minimum is at an endpoint unless the parabola opens upward with its
/// vertex strictly inside `(0, 1)`.
pub fn m1_minimum(c: impl Into<CurveTriple>, a: impl Into<BigInt>) -> (Rational, Rational) {
    let (lead, linear, constant) = m1_coefficients(&c.into(), &a.into());
    let at = |alpha: &Rational| alpha * alpha * int(lead.clone()) + alpha * int(linear.clone()) + int(constant.clone());
    let zero = int(0);
    let one = int(1);
    let mut best = (zero.clone(), at(&zero));
    let v1 = at(&one);
    if v1 < best.1 {
        best = (one, v1);
    }
    if lead.is_positive() {
        let vertex = Rational::new(-linear.clone(), lead.clone() * 2);
        if vertex.is_positive() && vertex < int(1) {
            let v = at(&vertex);
            if v < best.1 {
                best = (vertex, v);
            }
        }
    }
    best
}

/// Whether the first Miyaoka inequality holds for every `α ∈ [0, 1]`.
pub fn m1_holds_for_all_alpha(c: impl Into<CurveTriple>, a: impl Into<BigInt>) -> bool {
    !m1_minimum(c, a).1.is_negative()
}

/// `2(k − 3g + 3)² − a(C² + 3k − 6g + 6)`; the inequality asserts this is `≤ 0`.
/// Requires `k > 3(g − 1)`.
pub fn m1bis_value(c: impl Into<CurveTriple>, a: impl Into<BigInt>) -> Result<BigInt> {
    let c = c.into();
    let a = a.into();
    let excess: BigInt = &c.kc - (&c.g - 1) * 3;
    if !excess.is_positive() {
        return Err(Error::Precondition(format!(
            "k = {} does not exceed 3(g-1) = {}",
            c.kc,
            (&c.g - 1) * 3
        )));
    }
    let lead = &c.c2 + &c.kc * 3 - &c.g * 6 + 6;
    Ok(&excess * &excess * 2 - a * lead)
}

/// Both sides of the third Miyaoka inequality after multiplying through by `K² > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct M2Report {
    /// `(c₂ − K²)k² + ((4(g−1)+a)k − 2(g−1)(3(g−1)+a))K²`
    pub left: Rational,
    /// `(c₂ − K²/3)(k² − C²K²)`
    pub middle: Rational,
    pub holds: bool,
}

pub fn m2_report(c: impl Into<CurveTriple>, s: &SurfaceInvariants) -> Result<M2Report> {
    let c = c.into();
    if !s.k2().is_positive() {
        return Err(Error::Precondition(format!("K^2 = {} is not positive", s.k2())));
    }
    let a = s.a();
    let (c2s, k2) = (int(s.c2().clone()), int(s.k2().clone()));
    let k = int(c.kc.clone());
    let gm1 = int(&c.g - 1);
    let av = int(a);
    let left = (&c2s - &k2) * &k * &k
        + ((int(4) * &gm1 + &av) * &k - int(2) * &gm1 * (int(3) * &gm1 + &av)) * &k2;
    let middle = (&c2s - &k2 / int(3)) * (&k * &k - int(c.c2.clone()) * &k2);
    let holds = left >= middle && !middle.is_negative();
    Ok(M2Report { left, middle, holds })
}

pub fn m2_holds(c: impl Into<CurveTriple>, s: &SurfaceInvariants) -> Result<bool> {
    Ok(m2_report(c, s)?.holds)
}

/// `P(k) = 2(k − 3𝔤)² − a(3k − 6𝔤)` with `𝔤 = g − 1`.
pub fn p_of_k(k: impl Into<BigInt>, g: impl Into<BigInt>, a: impl Into<BigInt>) -> BigInt {
    let (k, g, a) = (k.into(), g.into(), a.into());
    let gg = g - 1;
    let shifted: BigInt = &k - &gg * 3;
    shifted.pow(2) * 2 - a * (k * 3 - gg * 6)
}

/// `P` evaluated at a surd, used to confirm the closed-form root symbolically.
pub fn p_of_surd(k: &QuadSurd, g: impl Into<BigInt>, a: impl Into<BigInt>) -> Result<QuadSurd> {
    let gg = int(g.into() - 1);
    let a = int(a.into());
    let shifted = k.add_rational(&(-int(3) * &gg));
    let square = shifted.checked_mul(&shifted)?.mul_rational(&int(2));
    let linear = k.mul_rational(&int(3)).add_rational(&(-int(6) * &gg)).mul_rational(&a);
    square.checked_sub(&linear)
}

/// Largest root of `P`: `3(g−1) + 3a/4 + √(9a² + 24a(g−1))/4`, the upper bound on
/// the canonical degree of a negative curve not isomorphic to `P¹`.
pub fn max_k_negative(g: impl Into<BigInt>, a: impl Into<BigInt>) -> Result<QuadSurd> {
    let (g, a) = (g.into(), a.into());
    if g.is_negative() {
        return Err(domain(format!("genus {g} is negative")));
    }
    check_a(&a)?;
    if a.is_zero() && g.is_zero() {
        return Err(Error::Impossible(
            "a = 0 and g = 0: P(k) is positive, so no such negative curve exists".into(),
        ));
    }
    let gm1 = &g - 1;
    let disc: BigInt = &a * &a * 9 + &a * &gm1 * 24;
    if disc.is_negative() {
        return Err(Error::Impossible(format!(
            "discriminant {disc} is negative: P(k) > 0 for every k, so no such negative curve exists"
        )));
    }
    let rational = int(gm1 * 3) + ratio(a * 3, 4);
    QuadSurd::new(rational, ratio(1, 4), disc)
}

/// `(3 + 3a/4 + √(9a² + 24a)/4, 4 + 3a/2)`; the first never exceeds the second.
pub fn beta_bound(a: impl Into<BigInt>) -> Result<(QuadSurd, Rational)> {
    let a = a.into();
    check_a(&a)?;
    let disc = &a * &a * 9 + &a * 24;
    let exact = QuadSurd::new(int(3) + ratio(a.clone() * 3, 4), ratio(1, 4), disc)?;
    let linear = int(4) + ratio(a * 3, 2);
    Ok((exact, linear))
}

/// `1 + 3a(ε+1)/(2ε²)`.
pub fn genus_bound_from_epsilon(eps: &Rational, a: impl Into<BigInt>) -> Result<Rational> {
    let a = a.into();
    check_eps(eps)?;
    check_a(&a)?;
    Ok(int(1) + int(a * 3) * (eps + int(1)) / (int(2) * eps * eps))
}

/// An explicit `B(ε)` with `k ≤ (3+ε)(g−1) + B(ε)` for every negative curve
/// with `g ≥ 1`.
///
/// It is the maximum over `t = g − 1 ≥ 0` of `3a/4 + √(9a² + 24at)/4 − εt`:
/// `3a/4 + 3a(1+ε²)/(8ε)` for `ε ≤ 1` (interior maximum at
/// `t* = 3a(1−ε²)/(8ε²)`) and `3a/2` for `ε > 1` (maximum at `t = 0`).
pub fn b_epsilon(eps: &Rational, a: impl Into<BigInt>) -> Result<Rational> {
    let a = a.into();
    check_eps(eps)?;
    check_a(&a)?;
    let a = int(a);
    if *eps <= int(1) {
        Ok(ratio(3, 4) * &a + int(3) * &a * (int(1) + eps * eps) / (int(8) * eps))
    } else {
        Ok(ratio(3, 2) * a)
    }
}

/// Location of the interior maximum used by [`b_epsilon`] when `ε ≤ 1`.
pub fn b_epsilon_argmax(eps: &Rational, a: impl Into<BigInt>) -> Result<Rational> {
    let a = a.into();
    check_eps(eps)?;
    check_a(&a)?;
    if *eps >= int(1) {
        return Ok(int(0));
    }
    Ok(int(a * 3) * (int(1) - eps * eps) / (int(8) * eps * eps))
}

/// Minimizer `(β−3)(2δ−C²) / ((β−2)(3δ−C²))` of the positive-curve quadratic.
///
/// Needs `β ≥ 3`, `C² > 0` and `2δ − C² > 0`. The result lies in `(0, 1)` for
/// `β > 3` and is `0` at the boundary `β = 3`.
pub fn alpha0(beta: &Rational, delta: impl Into<BigInt>, c2: impl Into<BigInt>) -> Result<Rational> {
    let (delta, c2) = (delta.into(), c2.into());
    if *beta < int(3) {
        return Err(domain(format!("beta = {beta} must be at least 3")));
    }
    if !c2.is_positive() {
        return Err(domain(format!("C^2 = {c2} must be positive")));
    }
    let two_delta_minus: BigInt = &delta * 2 - &c2;
    if !two_delta_minus.is_positive() {
        return Err(domain(format!("2 delta - C^2 = {two_delta_minus} must be positive")));
    }
    let three_delta_minus = delta * 3 - c2;
    Ok((beta - int(3)) * int(two_delta_minus) / ((beta - int(2)) * int(three_delta_minus)))
}

/// The four positive-curve bounds for given `β > 3`, `x₀ > 1/2` and `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositiveCurveBounds {
    /// `(3x₀ − 1)/(2x₀ − 1)`
    pub ratio_factor: Rational,
    /// `a(β−2)/(β−3)²·R + 1`
    pub g_bound: Rational,
    /// `a(β−2)/(β(β−3)²)·R`, as printed.
    pub k_bound_printed: Rational,
    /// `β·(g_bound − 1)`, what the genus bound and `k = β(g−1)` give.
    pub k_bound_derived: Rational,
    /// `a(β−2)²/(β−3)²·R`, so that `k ≤ 2(g−1) + offset`.
    pub k_bound_pos3_offset: Rational,
}

pub fn thm41_bounds(beta: &Rational, x0: &Rational, a: impl Into<BigInt>) -> Result<PositiveCurveBounds> {
    let a = a.into();
    if *beta <= int(3) {
        return Err(domain(format!("beta = {beta} must exceed 3")));
    }
    if *x0 <= ratio(1, 2) {
        return Err(domain(format!("x0 = {x0} must exceed 1/2")));
    }
    check_a(&a)?;
    let a = int(a);
    let r = (int(3) * x0 - int(1)) / (int(2) * x0 - int(1));
    let b3 = beta - int(3);
    let b2 = beta - int(2);
    let core = &a * &b2 / (&b3 * &b3) * &r;
    let g_bound = &core + int(1);
    let k_bound_printed = &core / beta;
    let k_bound_derived = beta * &core;
    let k_bound_pos3_offset = &core * &b2;
    Ok(PositiveCurveBounds {
        ratio_factor: r,
        g_bound,
        k_bound_printed,
        k_bound_derived,
        k_bound_pos3_offset,
    })
}

/// `δ/C² − 1/2` for a positive curve with `g > 1`.
pub fn delta_ratio_gap(c: &CurveNumerics) -> Result<Rational> {
    if !c.c2().is_positive() {
        return Err(domain(format!("C^2 = {} must be positive", c.c2())));
    }
    if *c.g() <= BigInt::from(1) {
        return Err(domain(format!("g = {} must exceed 1", c.g())));
    }
    Ok(c.x_ratio()? - ratio(1, 2))
}

/// `(1+ε)(g−1)/(2C²)`, the same gap written through `ε = β − 3`.
pub fn delta_ratio_gap_from_epsilon(c: &CurveNumerics) -> Result<Rational> {
    if !c.c2().is_positive() {
        return Err(domain(format!("C^2 = {} must be positive", c.c2())));
    }
    let eps = c.epsilon_excess()?;
    Ok((int(1) + eps) * int(c.g() - 1) / (int(2) * int(c.c2().clone())))
}

/// Bound reports for a negative curve of genus `g` on a surface with invariant `a`.
pub fn negative_curve_reports(g: &BigInt, a: &BigInt, eps: Option<&Rational>) -> Result<Vec<BoundReport>> {
    let mut out = Vec::new();
    let base = BoundInputs {
        g: Some(g.clone()),
        a: a.clone(),
        eps: eps.cloned(),
        ..Default::default()
    };
    out.push(BoundReport::new(base.clone(), max_k_negative(g.clone(), a.clone())?, FormulaId::Eq1));
    let (exact, linear) = beta_bound(a.clone())?;
    out.push(BoundReport::new(base.clone(), exact, FormulaId::Eq3));
    out.push(BoundReport::new(base.clone(), linear.into(), FormulaId::Eq3));
    if let Some(eps) = eps {
        out.push(BoundReport::new(
            base.clone(),
            genus_bound_from_epsilon(eps, a.clone())?.into(),
            FormulaId::Eq4,
        ));
        out.push(BoundReport::new(base, b_epsilon(eps, a.clone())?.into(), FormulaId::BEps));
    }
    Ok(out)
}

/// Bound reports for positive curves.
pub fn positive_curve_reports(beta: &Rational, x0: &Rational, a: &BigInt) -> Result<Vec<BoundReport>> {
    let b = thm41_bounds(beta, x0, a.clone())?;
    let inputs = BoundInputs {
        a: a.clone(),
        beta: Some(beta.clone()),
        x0: Some(x0.clone()),
        ..Default::default()
    };
    Ok(vec![
        BoundReport::new(inputs.clone(), b.g_bound.into(), FormulaId::Pos1),
        BoundReport::new(inputs.clone(), b.k_bound_printed.into(), FormulaId::Pos2Printed),
        BoundReport::new(inputs.clone(), b.k_bound_derived.into(), FormulaId::Pos2Derived),
        BoundReport::new(inputs, b.k_bound_pos3_offset.into(), FormulaId::Pos3),
    ])
}

/// `k ≤ bound` for an integer canonical degree.
pub fn k_within(k: &BigInt, bound: &QuadSurd) -> Result<bool> {
    Ok(QuadSurd::from(k.clone()).cmp_exact(bound)? != Ordering::Greater)
}
