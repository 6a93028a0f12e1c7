//! Intersection theory on the blow-up `Yₙ` of the plane at `n` points.
//!
//! Classes are written `(d, m₁, …, mₙ)` for `dL − Σ mᵢEᵢ`, so the pairing is
//! `d₁d₂ − Σ m₁ᵢm₂ᵢ` and `−K = (3, 1ⁿ)`. This module also holds the region
//! predicates in the `(m, d)`-plane, Seshadri lower bounds, and the genus of a
//! pullback under a double cover branched along `B ≡ 2η`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::curvedata::pa_from_adjunction;
use crate::error::{domain, Error, Result};
use crate::exactmath::{int, ratio, QuadSurd, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DivisorClass {
    d: BigInt,
    m: Vec<BigInt>,
}

impl DivisorClass {
    pub fn new(d: impl Into<BigInt>, m: Vec<BigInt>) -> Self {
        DivisorClass { d: d.into(), m }
    }

    pub fn from_i64(d: i64, m: &[i64]) -> Self {
        DivisorClass {
            d: d.into(),
            m: m.iter().map(|&x| BigInt::from(x)).collect(),
        }
    }

    /// `(d, mⁿ)`.
    pub fn homogeneous(d: impl Into<BigInt>, m: impl Into<BigInt>, n: usize) -> Self {
        DivisorClass {
            d: d.into(),
            m: vec![m.into(); n],
        }
    }

    /// Pullback `L` of a line.
    pub fn line(n: usize) -> Self {
        Self::homogeneous(1, 0, n)
    }

    /// Exceptional curve `Eᵢ`, i.e. the class with `mᵢ = −1`.
    pub fn exceptional(i: usize, n: usize) -> Self {
        let mut c = Self::homogeneous(0, 0, n);
        c.m[i] = BigInt::from(-1);
        c
    }

    /// `−K = (3, 1ⁿ)`.
    pub fn anticanonical(n: usize) -> Self {
        Self::homogeneous(3, 1, n)
    }

    /// `η = 4L`, the twist used to apply the double-cover argument to `Yₙ`.
    pub fn eta_four_l(n: usize) -> Self {
        Self::homogeneous(4, 0, n)
    }

    pub fn n(&self) -> usize {
        self.m.len()
    }

    pub fn degree(&self) -> &BigInt {
        &self.d
    }

    pub fn multiplicities(&self) -> &[BigInt] {
        &self.m
    }

    /// `M = Σ mᵢ`.
    pub fn multiplicity_sum(&self) -> BigInt {
        self.m.iter().sum()
    }

    pub fn pair(&self, other: &DivisorClass) -> Result<BigInt> {
        if self.n() != other.n() {
            return Err(domain(format!(
                "classes live on different blow-ups (n = {} and n = {})",
                self.n(),
                other.n()
            )));
        }
        let dot: BigInt = self.m.iter().zip(&other.m).map(|(a, b)| a * b).sum();
        Ok(&self.d * &other.d - dot)
    }

    pub fn self_intersection(&self) -> BigInt {
        let sq: BigInt = self.m.iter().map(|x| x * x).sum();
        &self.d * &self.d - sq
    }

    /// `K·D = −3d + Σ mᵢ`.
    pub fn canonical_degree(&self) -> BigInt {
        self.multiplicity_sum() - &self.d * 3
    }

    /// `p_a = (D² + K·D)/2 + 1`; `D² + K·D = d(d−3) − Σ mᵢ(mᵢ−1)` is always even.
    pub fn arithmetic_genus(&self) -> BigInt {
        pa_from_adjunction(&self.self_intersection(), &self.canonical_degree())
            .expect("d(d-3) - sum m(m-1) is even")
    }
}

pub(crate) fn check_beta0(beta0: &Rational) -> Result<()> {
    if *beta0 <= int(3) {
        return Err(domain(format!("beta0 = {beta0} must exceed 3")));
    }
    Ok(())
}

fn check_positive_degree(d: &BigInt) -> Result<()> {
    if !d.is_positive() {
        return Err(domain(format!("degree d = {d} must be positive")));
    }
    Ok(())
}

/// `(2 − β₀)/β₀`, the common slope factor of both region inequalities.
fn region_factor(beta0: &Rational) -> Rational {
    (int(2) - beta0) / beta0
}

/// Both sides of `D²/d ≤ ((2−β₀)/β₀)(1 + M/d)`.
pub fn nagata_sides(class: &DivisorClass, beta0: &Rational) -> Result<(Rational, Rational)> {
    check_beta0(beta0)?;
    check_positive_degree(class.degree())?;
    let d = int(class.degree().clone());
    let lhs = int(class.self_intersection()) / &d;
    let rhs = region_factor(beta0) * (int(1) + int(class.multiplicity_sum()) / &d);
    Ok((lhs, rhs))
}

/// Whether a class lies in the region `D²/d ≤ ((2−β₀)/β₀)(1 + M/d)`, boundary included.
pub fn nagata_region_member(class: &DivisorClass, beta0: &Rational) -> Result<bool> {
    let (lhs, rhs) = nagata_sides(class, beta0)?;
    Ok(lhs <= rhs)
}

/// `β₀d² + d(β₀−2) − nβ₀m² + (β₀−2)nm`, the conic bounding the homogeneous region.
pub fn hyperbola_value(m: impl Into<BigInt>, d: impl Into<BigInt>, n: impl Into<BigInt>, beta0: &Rational) -> Rational {
    let (m, d, n) = (int(m.into()), int(d.into()), int(n.into()));
    let b2 = beta0 - int(2);
    beta0 * &d * &d + &d * &b2 - &n * beta0 * &m * &m + b2 * n * m
}

/// Sign of [`hyperbola_value`] computed in integers after clearing the
/// denominator of `β₀`.
pub fn hyperbola_sign(m: &BigInt, d: &BigInt, n: &BigInt, beta0: &Rational) -> Ordering {
    let p = beta0.numer();
    let q = beta0.denom();
    let pm2q = p - q * 2;
    let v: BigInt = p * d * d + &pm2q * d - n * p * m * m + pm2q * n * m;
    v.cmp(&BigInt::zero())
}

/// Largest real `d` on the conic for a fixed `m ≥ 1`:
/// `(−(β₀−2) + √((β₀−2)² + 4β₀(nβ₀m² − (β₀−2)nm))) / (2β₀)`.
pub fn hyperbola_d_of_m(m: impl Into<BigInt>, n: impl Into<BigInt>, beta0: &Rational) -> Result<QuadSurd> {
    let (m, n) = (m.into(), n.into());
    if m < BigInt::one() {
        return Err(domain(format!("m = {m} must be at least 1")));
    }
    if !beta0.is_positive() {
        return Err(domain(format!("beta0 = {beta0} must be positive")));
    }
    let (mq, nq) = (int(m), int(n));
    let b2 = beta0 - int(2);
    let disc = &b2 * &b2 + int(4) * beta0 * (&nq * beta0 * &mq * &mq - &b2 * &nq * &mq);
    if disc.is_negative() {
        return Err(domain(format!("negative discriminant {disc}")));
    }
    let denom = (int(2) * beta0).recip();
    Ok(QuadSurd::sqrt(&disc)?.add_rational(&-b2).mul_rational(&denom))
}

/// `d = √n·m`.
pub fn nagata_line(m: impl Into<BigInt>, n: impl Into<BigInt>) -> Result<QuadSurd> {
    let n = n.into();
    if n.is_negative() {
        return Err(domain(format!("n = {n} must be non-negative")));
    }
    QuadSurd::new(int(0), int(m.into()), n)
}

/// Offset `c = −(β₀−2)(1+√n)/(2β₀)` of the asymptote `d = √n·m + c` parallel
/// to the Nagata line.
pub fn asymptote_offset(n: impl Into<BigInt>, beta0: &Rational) -> Result<QuadSurd> {
    let n = n.into();
    if n < BigInt::one() {
        return Err(domain(format!("n = {n} must be at least 1")));
    }
    check_beta0(beta0)?;
    let c = -(beta0 - int(2)) / (int(2) * beta0);
    QuadSurd::new(c.clone(), c, n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeshadriSource {
    NagataConjectural,
    HarbourneRoe,
    PetraN10,
    User,
}

impl SeshadriSource {
    pub fn as_str(self) -> &'static str {
        match self {
            SeshadriSource::NagataConjectural => "NAGATA_CONJECTURAL",
            SeshadriSource::HarbourneRoe => "HARBOURNE_ROE",
            SeshadriSource::PetraN10 => "PETRA_N10",
            SeshadriSource::User => "USER",
        }
    }
}

/// A lower bound (or the conjectural value) for the Seshadri constant of `Yₙ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeshadriEstimate {
    pub n: u64,
    pub value: QuadSurd,
    pub source: SeshadriSource,
    pub conjectural: bool,
}

impl SeshadriEstimate {
    /// Checks `0 < value ≤ 1/√n`.
    pub fn new(n: u64, value: QuadSurd, source: SeshadriSource) -> Result<Self> {
        if n == 0 {
            return Err(domain("n must be at least 1"));
        }
        if value.signum() != Ordering::Greater {
            return Err(domain(format!("Seshadri estimate {value} must be positive")));
        }
        // value ≤ 1/√n  ⇔  n·value² ≤ 1 for positive values
        let sq = value.checked_mul(&value)?.mul_rational(&int(n));
        if sq.cmp_exact(&QuadSurd::from(1))? == Ordering::Greater {
            return Err(domain(format!("Seshadri estimate {value} exceeds 1/sqrt({n})")));
        }
        Ok(SeshadriEstimate {
            n,
            value,
            source,
            conjectural: source == SeshadriSource::NagataConjectural,
        })
    }
}

/// The best known value for ten points in the homogeneous case.
pub fn petra_e10() -> Rational {
    ratio(228, 721)
}

/// `1/√n`, the value predicted by Nagata's conjecture for `n ≥ 10`.
pub fn seshadri_conjectural(n: u64) -> Result<SeshadriEstimate> {
    if n == 0 {
        return Err(domain("n must be at least 1"));
    }
    let value = QuadSurd::sqrt(&ratio(1, n))?;
    SeshadriEstimate::new(n, value, SeshadriSource::NagataConjectural)
}

/// `eₙ = √((1 − 1/f(n))/n)` when `f(n)` is supplied; `228/721` for `n = 10`
/// otherwise; the conjectural `1/√n` in every other case.
pub fn seshadri_lower(n: u64, f_of_n: Option<&Rational>) -> Result<SeshadriEstimate> {
    if n == 0 {
        return Err(domain("n must be at least 1"));
    }
    match f_of_n {
        Some(f) => {
            if *f <= int(1) {
                return Err(domain(format!("f(n) = {f} must exceed 1")));
            }
            let radicand = (int(1) - f.recip()) / int(n);
            SeshadriEstimate::new(n, QuadSurd::sqrt(&radicand)?, SeshadriSource::HarbourneRoe)
        }
        None if n == 10 => SeshadriEstimate::new(n, petra_e10().into(), SeshadriSource::PetraN10),
        None => seshadri_conjectural(n),
    }
}

fn check_eps(eps_n: &QuadSurd) -> Result<()> {
    if eps_n.signum() != Ordering::Greater {
        return Err(domain(format!("eps_n = {eps_n} must be positive")));
    }
    Ok(())
}

/// `−1/(n·εₙ)`: no irreducible class has `D²/d` strictly below this.
pub fn roe_bound(n: u64, eps_n: &QuadSurd) -> Result<QuadSurd> {
    check_eps(eps_n)?;
    Ok(eps_n.mul_rational(&int(n)).recip()?.neg())
}

/// `((β₀−2)/β₀)(1 + 1/εₙ) − 1/(nεₙ)`: how much weaker the `εₙ`-form of the
/// region bound is than [`roe_bound`].
pub fn roe_gap(n: u64, beta0: &Rational, eps_n: &QuadSurd) -> Result<QuadSurd> {
    check_beta0(beta0)?;
    check_eps(eps_n)?;
    let inv = eps_n.recip()?;
    let factor = (beta0 - int(2)) / beta0;
    inv.add_rational(&int(1))
        .mul_rational(&factor)
        .checked_add(&roe_bound(n, eps_n)?)
}

/// Right-hand side `((2−β₀)/β₀)(1 + 1/εₙ)` of the Seshadri form of the region.
pub fn sesh_region_rhs(beta0: &Rational, eps_n: &QuadSurd) -> Result<QuadSurd> {
    check_beta0(beta0)?;
    check_eps(eps_n)?;
    Ok(eps_n.recip()?.add_rational(&int(1)).mul_rational(&region_factor(beta0)))
}

/// Whether `D²/d ≤ ((2−β₀)/β₀)(1 + 1/εₙ)`, boundary included.
pub fn sesh_region_member(class: &DivisorClass, beta0: &Rational, eps_n: &QuadSurd) -> Result<bool> {
    check_positive_degree(class.degree())?;
    let rhs = sesh_region_rhs(beta0, eps_n)?;
    let lhs = QuadSurd::from(int(class.self_intersection()) / int(class.degree().clone()));
    Ok(lhs.cmp_exact(&rhs)? != Ordering::Greater)
}

/// Whether `D²/d < −1/(nεₙ)`, i.e. the class is ruled out as an irreducible curve.
pub fn roe_excludes(class: &DivisorClass, eps_n: &QuadSurd) -> Result<bool> {
    check_positive_degree(class.degree())?;
    let bound = roe_bound(class.n() as u64, eps_n)?;
    let lhs = QuadSurd::from(int(class.self_intersection()) / int(class.degree().clone()));
    Ok(lhs.cmp_exact(&bound)? == Ordering::Less)
}

/// Genus of `C = f*(D)` under a double cover branched along `B ≡ 2η`:
/// `g(C) = 2g(D) − 1 + η·D`.
pub fn double_cover_genus(g_d: impl Into<BigInt>, eta_dot_d: impl Into<BigInt>) -> Result<BigInt> {
    let (g_d, eta_dot_d) = (g_d.into(), eta_dot_d.into());
    if g_d.is_negative() {
        return Err(Error::Inconsistent(format!("genus {g_d} is negative")));
    }
    let g: BigInt = &g_d * 2 - 1 + &eta_dot_d;
    if g.is_negative() {
        return Err(Error::Inconsistent(format!(
            "pullback genus 2*{g_d} - 1 + {eta_dot_d} = {g} is negative"
        )));
    }
    Ok(g)
}

/// Whether `k_D ≥ β₀(g−1) + ((β₀−2)/2)(D·η)`, equality included.
pub fn nongen_threshold_met(
    k_d: impl Into<BigInt>,
    g: impl Into<BigInt>,
    eta_dot_d: impl Into<BigInt>,
    beta0: &Rational,
) -> Result<bool> {
    check_beta0(beta0)?;
    let threshold = beta0 * int(g.into() - 1) + (beta0 - int(2)) / int(2) * int(eta_dot_d.into());
    Ok(int(k_d.into()) >= threshold)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn partial(d: i64, ones: usize, n: usize) -> DivisorClass {
        let mut m = vec![0i64; n];
        m[..ones].iter_mut().for_each(|x| *x = 1);
        DivisorClass::from_i64(d, &m)
    }

    #[test]
    fn pairing_examples() {
        let n = 10;
        let l = DivisorClass::line(n);
        assert_eq!(l.pair(&l).unwrap(), big(1));
        let c = partial(1, 2, n);
        assert_eq!(c.pair(&c).unwrap(), big(-1));
        let d = DivisorClass::from_i64(5, &[2, 1, 1, 0, 0, 3, 0, 0, 0, 1]);
        assert_eq!(DivisorClass::anticanonical(n).pair(&d).unwrap(), big(15) - d.multiplicity_sum());
        assert!(l.pair(&DivisorClass::line(3)).is_err());
    }

    #[test]
    fn basis_signature() {
        let n = 4;
        let l = DivisorClass::line(n);
        for i in 0..n {
            let e = DivisorClass::exceptional(i, n);
            assert_eq!(e.pair(&e).unwrap(), big(-1));
            assert_eq!(l.pair(&e).unwrap(), big(0));
            for j in 0..i {
                assert_eq!(e.pair(&DivisorClass::exceptional(j, n)).unwrap(), big(0));
            }
        }
    }

    #[test]
    fn canonical_degree_examples() {
        let c = partial(1, 2, 10);
        assert_eq!(c.canonical_degree(), big(-1));
        assert_eq!(c.arithmetic_genus(), big(0));
        assert_eq!(DivisorClass::homogeneous(3, 1, 10).canonical_degree(), big(1));
        assert_eq!(DivisorClass::homogeneous(0, 0, 7).canonical_degree(), big(0));
    }

    #[test]
    fn nagata_region_examples() {
        let four = int(4);
        let d = DivisorClass::homogeneous(2, 1, 10);
        let (lhs, rhs) = nagata_sides(&d, &four).unwrap();
        assert_eq!((lhs.clone(), rhs), (int(-3), int(-3)));
        assert!(nagata_region_member(&d, &four).unwrap());

        let d = DivisorClass::homogeneous(6, 2, 10);
        let (lhs, rhs) = nagata_sides(&d, &four).unwrap();
        assert_eq!((lhs, rhs), (ratio(-2, 3), ratio(-13, 6)));
        assert!(!nagata_region_member(&d, &four).unwrap());

        assert!(!nagata_region_member(&DivisorClass::line(10), &four).unwrap());
    }

    #[test]
    fn nagata_region_domain_errors() {
        let d = DivisorClass::homogeneous(0, 1, 10);
        assert!(matches!(nagata_region_member(&d, &int(4)), Err(Error::Domain(_))));
        let d = DivisorClass::homogeneous(2, 1, 10);
        assert!(matches!(nagata_region_member(&d, &int(3)), Err(Error::Domain(_))));
    }

    #[test]
    fn hyperbola_value_examples() {
        let four = int(4);
        assert_eq!(hyperbola_value(1, 2, 10, &four), int(0));
        assert_eq!(hyperbola_value(0, 0, 10, &four), int(0));
        assert_eq!(hyperbola_value(2, 5, 10, &four), int(-10));
        assert_eq!(hyperbola_value(2, 6, 10, &four), int(36));
        assert_eq!(hyperbola_sign(&big(2), &big(6), &big(10), &ratio(7, 2)), hyperbola_value(2, 6, 10, &ratio(7, 2)).cmp(&int(0)));
    }

    #[test]
    fn hyperbola_root_examples() {
        let four = int(4);
        assert_eq!(hyperbola_d_of_m(1, 10, &four).unwrap().to_rational(), Some(int(2)));
        let r = hyperbola_d_of_m(2, 10, &four).unwrap();
        assert_eq!(r, QuadSurd::new(ratio(-1, 4), ratio(1, 4), 481).unwrap());
        assert_eq!(r.floor(), big(5));
        assert_eq!(hyperbola_d_of_m(1, 1, &four).unwrap().to_rational(), Some(ratio(1, 2)));
        assert!(hyperbola_d_of_m(0, 10, &four).is_err());
    }

    #[test]
    fn nagata_line_examples() {
        assert_eq!(nagata_line(0, 10).unwrap(), QuadSurd::zero());
        assert_eq!(nagata_line(3, 9).unwrap().to_rational(), Some(int(9)));
        assert_eq!(nagata_line(1, 10).unwrap(), QuadSurd::new(int(0), int(1), 10).unwrap());
    }

    #[test]
    fn asymptote_offset_examples() {
        let c = asymptote_offset(10, &int(4)).unwrap();
        assert_eq!(c, QuadSurd::new(ratio(-1, 4), ratio(-1, 4), 10).unwrap());
        assert_eq!(asymptote_offset(1, &int(4)).unwrap().to_rational(), Some(ratio(-1, 2)));
        // beta0 -> infinity: -(1 + sqrt n)/2
        let c = asymptote_offset(10, &int(1_000_000)).unwrap();
        let limit = -(1.0 + 10f64.sqrt()) / 2.0;
        assert!((c.to_f64() - limit).abs() < 1e-5);
    }

    #[test]
    fn seshadri_examples() {
        let e = seshadri_lower(10, None).unwrap();
        assert_eq!(e.source, SeshadriSource::PetraN10);
        assert_eq!(e.value.to_rational(), Some(ratio(228, 721)));
        assert!(!e.conjectural);

        let c = seshadri_conjectural(10).unwrap();
        assert!(c.conjectural);
        assert_eq!(e.value.cmp_exact(&c.value).unwrap(), Ordering::Less);
        assert!(big(10) * big(228) * big(228) < big(721) * big(721));

        let e = seshadri_lower(4, Some(&int(1_000_000_000))).unwrap();
        assert_eq!(e.source, SeshadriSource::HarbourneRoe);
        assert!((e.value.to_f64() - 0.5).abs() < 1e-9);

        let e = seshadri_lower(10, Some(&int(100))).unwrap();
        assert_eq!(e.value, QuadSurd::sqrt(&ratio(99, 1000)).unwrap());

        assert_eq!(seshadri_lower(16, None).unwrap().value.to_rational(), Some(ratio(1, 4)));
        assert!(seshadri_lower(10, Some(&int(1))).is_err());
    }

    #[test]
    fn seshadri_estimate_rejects_values_above_conjecture() {
        assert!(SeshadriEstimate::new(10, ratio(1, 3).into(), SeshadriSource::User).is_err());
        assert!(SeshadriEstimate::new(10, QuadSurd::zero(), SeshadriSource::User).is_err());
        assert!(SeshadriEstimate::new(10, ratio(3, 10).into(), SeshadriSource::User).is_ok());
    }

    #[test]
    fn roe_bound_examples() {
        let b = roe_bound(10, &ratio(228, 721).into()).unwrap();
        assert_eq!(b.to_rational(), Some(ratio(-721, 2280)));
        let b = roe_bound(10, &ratio(3162, 10000).into()).unwrap();
        assert_eq!(b.to_rational(), Some(ratio(-10000, 31620)));
        assert!(roe_bound(10, &QuadSurd::zero()).is_err());
    }

    #[test]
    fn roe_gap_closed_form() {
        // gap = f + (f - 1/n)/eps with f = (beta0 - 2)/beta0
        let eps: QuadSurd = ratio(228, 721).into();
        let gap = roe_gap(10, &int(4), &eps).unwrap();
        let f = ratio(1, 2);
        let expected = &f + (&f - ratio(1, 10)) * ratio(721, 228);
        assert_eq!(gap.to_rational(), Some(expected));
    }

    #[test]
    fn sesh_region_examples() {
        let four = int(4);
        let d = DivisorClass::homogeneous(2, 1, 10);
        assert_eq!(sesh_region_rhs(&four, &ratio(1, 5).into()).unwrap().to_rational(), Some(int(-3)));
        assert!(sesh_region_member(&d, &four, &ratio(1, 5).into()).unwrap());
        assert!(!sesh_region_member(&DivisorClass::line(10), &four, &ratio(1, 5).into()).unwrap());
        let e10: QuadSurd = petra_e10().into();
        assert_eq!(sesh_region_rhs(&four, &e10).unwrap().to_rational(), Some(ratio(-949, 456)));
        assert!(!sesh_region_member(&DivisorClass::homogeneous(6, 2, 10), &four, &e10).unwrap());
    }

    #[test]
    fn roe_exclusion_is_strict() {
        // D^2/d = -1/(n eps) exactly: d = 1, D^2 = -1 with eps = 1/10 on n = 10
        let d = partial(1, 2, 10);
        assert!(!roe_excludes(&d, &ratio(1, 10).into()).unwrap());
        assert!(roe_excludes(&d, &ratio(1, 5).into()).unwrap());
    }

    #[test]
    fn double_cover_examples() {
        let eta = DivisorClass::eta_four_l(10);
        let line = DivisorClass::line(10);
        assert_eq!(double_cover_genus(0, eta.pair(&line).unwrap()).unwrap(), big(3));
        assert_eq!(double_cover_genus(1, 0).unwrap(), big(1));
        assert_eq!(double_cover_genus(2, 6).unwrap(), big(9));
        assert!(matches!(double_cover_genus(0, 0), Err(Error::Inconsistent(_))));
    }

    #[test]
    fn nongen_threshold_examples() {
        let four = int(4);
        assert!(nongen_threshold_met(8, 2, 4, &four).unwrap());
        assert!(nongen_threshold_met(10, 2, 4, &four).unwrap());
        assert!(!nongen_threshold_met(7, 2, 4, &four).unwrap());
        // boundary with rational beta0: 7/2 * 2 + 3/4 * 4 = 10
        assert!(nongen_threshold_met(10, 3, 4, &ratio(7, 2)).unwrap());
        assert!(nongen_threshold_met(10, 2, 4, &int(3)).is_err());
    }
}
