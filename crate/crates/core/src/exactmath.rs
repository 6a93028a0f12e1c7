//! Exact rationals and quadratic surds `r + s·√t`.
//!
//! Every inequality in this crate is decided here, by sign analysis and
//! squaring, with no floating point anywhere on the decision path. Floats only
//! appear in [`QuadSurd::to_f64`] and the decimal rendering used for display.

use std::cmp::Ordering;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// `n/d` as a [`Rational`]. Panics if `d` is zero.
pub fn ratio(n: impl Into<BigInt>, d: impl Into<BigInt>) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// Parses `"p/q"` or an integer literal. Decimal points and exponents are
/// rejected so that no input is ever silently rounded.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    let err = |why: &str| Error::Parse(text.to_string(), why.to_string());
    if s.contains(['.', 'e', 'E']) {
        return Err(err("decimal input is not accepted; write p/q"));
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err("bad numerator"))?;
    let den: BigInt = den.parse().map_err(|_| err("bad denominator"))?;
    if den.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

/// Integer square root, `floor(sqrt(n))`. `n` must be non-negative.
pub fn isqrt(n: &BigInt) -> BigInt {
    debug_assert!(!n.is_negative());
    n.sqrt()
}

pub fn perfect_square_root(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let root = n.sqrt();
    (&root * &root == *n).then_some(root)
}

fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        const LIMIT: usize = 1000;
        let mut sieve = vec![true; LIMIT + 1];
        let mut out = Vec::new();
        for p in 2..=LIMIT {
            if sieve[p] {
                out.push(p as u32);
                let mut q = p * p;
                while q <= LIMIT {
                    sieve[q] = false;
                    q += p;
                }
            }
        }
        out
    })
}

fn sign_of(q: &Rational) -> Ordering {
    if q.is_zero() {
        Ordering::Equal
    } else if q.is_positive() {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

/// `floor(a / b)` for `b > 0`.
fn floor_div(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_floor(b)
}

/// The real number `r + s·√t` with rational `r`, `s` and integer `t ≥ 0`.
///
/// Values are kept normalized: when `s = 0` or `t` is a perfect square the
/// value collapses to `(r, 0, 0)`, and square factors of `t` built from primes
/// below 1000 are pulled into `s`. `t` is otherwise not forced squarefree;
/// surds whose radicands differ by a square ratio are still comparable.
#[derive(Clone, Debug)]
pub struct QuadSurd {
    r: Rational,
    s: Rational,
    t: BigInt,
}

impl QuadSurd {
    pub fn new(r: Rational, s: Rational, t: impl Into<BigInt>) -> Result<Self> {
        let t = t.into();
        if t.is_negative() {
            return Err(Error::NegativeRadicand(t.to_string()));
        }
        Ok(Self::normalized(r, s, t))
    }

    fn normalized(r: Rational, mut s: Rational, mut t: BigInt) -> Self {
        if s.is_zero() || t.is_zero() {
            return Self::from_rational(r);
        }
        for &p in small_primes() {
            let p2 = BigInt::from(p * p);
            if p2 > t {
                break;
            }
            while (&t % &p2).is_zero() {
                t /= &p2;
                s *= int(p);
            }
        }
        if let Some(root) = perfect_square_root(&t) {
            return Self::from_rational(r + s * int(root));
        }
        QuadSurd { r, s, t }
    }

    pub fn from_rational(r: Rational) -> Self {
        QuadSurd {
            r,
            s: Rational::zero(),
            t: BigInt::zero(),
        }
    }

    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    /// `√q` for a non-negative rational, written as `√(p·d) / d`.
    pub fn sqrt(q: &Rational) -> Result<Self> {
        if q.is_negative() {
            return Err(Error::NegativeRadicand(q.to_string()));
        }
        let d = q.denom().clone();
        let t = q.numer() * &d;
        Ok(Self::normalized(Rational::zero(), Rational::new(BigInt::one(), d), t))
    }

    pub fn rational_part(&self) -> &Rational {
        &self.r
    }

    pub fn surd_coefficient(&self) -> &Rational {
        &self.s
    }

    pub fn radicand(&self) -> &BigInt {
        &self.t
    }

    pub fn is_rational(&self) -> bool {
        self.s.is_zero()
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.r.clone())
    }

    /// Sign of the value. Same signs decide directly; opposite signs are
    /// settled by comparing `r²` with `s²·t`.
    pub fn signum(&self) -> Ordering {
        let rs = sign_of(&self.r);
        let ss = sign_of(&self.s);
        if ss == Ordering::Equal {
            return rs;
        }
        if rs == Ordering::Equal || rs == ss {
            return ss;
        }
        let r2 = &self.r * &self.r;
        let s2t = &self.s * &self.s * int(self.t.clone());
        match r2.cmp(&s2t) {
            Ordering::Greater => rs,
            Ordering::Less => ss,
            Ordering::Equal => Ordering::Equal,
        }
    }

    /// Rewrites both operands over a common radicand, or fails when the
    /// radicands are unrelated (their product is not a perfect square).
    fn aligned(&self, other: &Self) -> Result<(Rational, Rational, Rational, Rational, BigInt)> {
        if other.s.is_zero() || self.t == other.t {
            return Ok((self.r.clone(), self.s.clone(), other.r.clone(), other.s.clone(), self.t.clone()));
        }
        if self.s.is_zero() {
            return Ok((self.r.clone(), Rational::zero(), other.r.clone(), other.s.clone(), other.t.clone()));
        }
        let product = &self.t * &other.t;
        match perfect_square_root(&product) {
            // √t₂ = (q / t₁)·√t₁ when t₁t₂ = q²
            Some(q) => {
                let s2 = &other.s * Rational::new(q, self.t.clone());
                Ok((self.r.clone(), self.s.clone(), other.r.clone(), s2, self.t.clone()))
            }
            None => Err(Error::UnsupportedComparison(self.t.clone(), other.t.clone())),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let (r1, s1, r2, s2, t) = self.aligned(other)?;
        Ok(Self::normalized(r1 + r2, s1 + s2, t))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let (r1, s1, r2, s2, t) = self.aligned(other)?;
        let tq = int(t.clone());
        let r = &r1 * &r2 + &s1 * &s2 * tq;
        let s = r1 * s2 + r2 * s1;
        Ok(Self::normalized(r, s, t))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.checked_mul(&other.recip()?)
    }

    pub fn add_rational(&self, q: &Rational) -> Self {
        QuadSurd {
            r: &self.r + q,
            s: self.s.clone(),
            t: self.t.clone(),
        }
    }

    pub fn mul_rational(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        QuadSurd {
            r: &self.r * q,
            s: &self.s * q,
            t: self.t.clone(),
        }
    }

    pub fn neg(&self) -> Self {
        QuadSurd {
            r: -&self.r,
            s: -&self.s,
            t: self.t.clone(),
        }
    }

    /// `1 / (r + s√t) = (r − s√t) / (r² − s²t)`.
    pub fn recip(&self) -> Result<Self> {
        if self.signum() == Ordering::Equal {
            return Err(Error::DivisionByZero);
        }
        if self.is_rational() {
            return Ok(Self::from_rational(self.r.recip()));
        }
        let norm = &self.r * &self.r - &self.s * &self.s * int(self.t.clone());
        Ok(Self::normalized(&self.r / &norm, -&self.s / &norm, self.t.clone()))
    }

    /// Exact ordering of two values. Fails only for two genuinely different
    /// irrational radicals, which no formula here produces.
    pub fn cmp_exact(&self, other: &Self) -> Result<Ordering> {
        Ok(self.checked_sub(other)?.signum())
    }

    /// Greatest integer `≤` the value, by integer square-root bracketing.
    pub fn floor(&self) -> BigInt {
        if self.is_rational() {
            return self.r.floor().to_integer();
        }
        // value = (A + B√t) / D with D > 0
        let den = self.r.denom().lcm(self.s.denom());
        let a = self.r.numer() * (&den / self.r.denom());
        let b = self.s.numer() * (&den / self.s.denom());
        let n = &b * &b * &self.t;
        let root = isqrt(&n);
        if &root * &root == n {
            let exact = if b.is_negative() { a - root } else { a + root };
            return floor_div(&exact, &den);
        }
        // √n lies strictly inside (root, root + 1); no multiple of D can sit
        // strictly between two consecutive integers.
        if b.is_negative() {
            floor_div(&(a - root - 1), &den)
        } else {
            floor_div(&(a + root), &den)
        }
    }

    /// `floor(value · 10^digits)`: a fixed-point evaluation exact to the last digit.
    pub fn scaled_floor(&self, digits: u32) -> BigInt {
        let scale = int(BigInt::from(10u32).pow(digits));
        self.mul_rational(&scale).floor()
    }

    pub fn to_f64(&self) -> f64 {
        let r = self.r.to_f64().unwrap_or(f64::NAN);
        if self.is_rational() {
            return r;
        }
        let s = self.s.to_f64().unwrap_or(f64::NAN);
        let t = self.t.to_f64().unwrap_or(f64::NAN);
        r + s * t.sqrt()
    }

    /// Round-half-up of `|value| · 10^k`.
    fn scaled_round_abs(&self, k: i64) -> BigInt {
        let abs = if self.signum() == Ordering::Less { self.neg() } else { self.clone() };
        let ten = int(10);
        let scale = if k >= 0 {
            Pow::pow(&ten, k as u64)
        } else {
            Pow::pow(&ten, (-k) as u64).recip()
        };
        abs.mul_rational(&scale).add_rational(&ratio(1, 2)).floor()
    }

    /// Decimal rendering with `sig` significant digits, computed exactly and
    /// rounded half-up. Uses scientific notation outside `1e-6 ..= 1e20`.
    pub fn approx(&self, sig: usize) -> String {
        assert!(sig >= 1);
        let sign = self.signum();
        if sign == Ordering::Equal {
            return "0".to_string();
        }
        let lo = BigInt::from(10u32).pow(sig as u32 - 1);
        let hi = &lo * 10u32;
        let estimate = self.to_f64().abs();
        let mut exp: i64 = if estimate.is_finite() && estimate > 0.0 {
            estimate.log10().floor() as i64
        } else {
            0
        };
        let mut digits;
        loop {
            digits = self.scaled_round_abs(sig as i64 - 1 - exp);
            if digits >= hi {
                exp += 1;
            } else if digits < lo {
                exp -= 1;
            } else {
                break;
            }
        }
        let text = digits.to_string();
        let mut out = String::new();
        if sign == Ordering::Less {
            out.push('-');
        }
        if (-6..=20).contains(&exp) {
            if exp >= sig as i64 - 1 {
                out.push_str(&text);
                out.extend(std::iter::repeat_n('0', (exp - (sig as i64 - 1)) as usize));
            } else if exp >= 0 {
                let split = exp as usize + 1;
                out.push_str(&text[..split]);
                out.push('.');
                out.push_str(&text[split..]);
            } else {
                out.push_str("0.");
                out.extend(std::iter::repeat_n('0', (-exp - 1) as usize));
                out.push_str(&text);
            }
        } else {
            out.push_str(&text[..1]);
            if sig > 1 {
                out.push('.');
                out.push_str(&text[1..]);
            }
            out.push_str(&format!("e{exp}"));
        }
        out
    }
}

impl From<Rational> for QuadSurd {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl From<i64> for QuadSurd {
    fn from(n: i64) -> Self {
        Self::from_rational(int(n))
    }
}

impl From<BigInt> for QuadSurd {
    fn from(n: BigInt) -> Self {
        Self::from_rational(int(n))
    }
}

impl PartialEq for QuadSurd {
    fn eq(&self, other: &Self) -> bool {
        // 1, √t₁ and √t₂ are linearly independent over Q when the radicands
        // are unrelated, so such values are never equal.
        matches!(self.cmp_exact(other), Ok(Ordering::Equal))
    }
}

impl Eq for QuadSurd {}

impl fmt::Display for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.r);
        }
        let radical = if self.s.abs().is_one() {
            format!("sqrt({})", self.t)
        } else {
            format!("{}*sqrt({})", self.s.abs(), self.t)
        };
        match (self.r.is_zero(), self.s.is_negative()) {
            (true, false) => write!(f, "{radical}"),
            (true, true) => write!(f, "-{radical}"),
            (false, false) => write!(f, "{} + {radical}", self.r),
            (false, true) => write!(f, "{} - {radical}", self.r),
        }
    }
}

impl Serialize for QuadSurd {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("QuadSurd", 4)?;
        st.serialize_field("r", &self.r.to_string())?;
        st.serialize_field("s", &self.s.to_string())?;
        match self.t.to_u64() {
            Some(t) => st.serialize_field("t", &t)?,
            None => st.serialize_field("t", &self.t.to_string())?,
        }
        st.serialize_field("approx", &self.approx(12))?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn surd(r: Rational, s: Rational, t: i64) -> QuadSurd {
        QuadSurd::new(r, s, t).unwrap()
    }

    #[test]
    fn cmp_identity() {
        let a = surd(int(3), int(0), 0);
        assert_eq!(a.cmp_exact(&QuadSurd::from(3)).unwrap(), Ordering::Equal);
    }

    #[test]
    fn cmp_root_ten_minus_one_against_two() {
        let x = surd(int(-1), int(1), 10);
        assert_eq!(x.cmp_exact(&QuadSurd::from(2)).unwrap(), Ordering::Greater);
    }

    #[test]
    fn cmp_nine_plus_four_root_three_against_sixteen() {
        let x = surd(int(9), int(4), 3);
        assert_eq!(x.cmp_exact(&QuadSurd::from(16)).unwrap(), Ordering::Less);
    }

    #[test]
    fn floor_examples() {
        assert_eq!(QuadSurd::from(ratio(7, 2)).floor(), BigInt::from(3));
        assert_eq!(surd(int(9), int(4), 3).floor(), BigInt::from(15));
        assert_eq!(surd(int(0), int(1), 10).floor(), BigInt::from(3));
        assert_eq!(surd(int(0), int(-1), 10).floor(), BigInt::from(-4));
        assert_eq!(QuadSurd::from(ratio(-7, 2)).floor(), BigInt::from(-4));
    }

    #[test]
    fn normalizes_perfect_squares_and_square_factors() {
        let x = surd(int(1), int(2), 49);
        assert!(x.is_rational());
        assert_eq!(x.to_rational().unwrap(), int(15));

        let y = surd(int(0), ratio(1, 4), 1924);
        assert_eq!(y.radicand(), &BigInt::from(481));
        assert_eq!(y.surd_coefficient(), &ratio(1, 2));

        let z = surd(int(5), int(0), 7);
        assert_eq!(z.radicand(), &BigInt::zero());
    }

    #[test]
    fn negative_radicand_rejected() {
        assert!(matches!(QuadSurd::new(int(0), int(1), -3), Err(Error::NegativeRadicand(_))));
        assert!(QuadSurd::sqrt(&ratio(-1, 2)).is_err());
    }

    #[test]
    fn mixed_radicals_are_an_error() {
        let a = surd(int(0), int(1), 2);
        let b = surd(int(0), int(1), 3);
        assert!(matches!(a.cmp_exact(&b), Err(Error::UnsupportedComparison(_, _))));
        assert_ne!(a, b);
    }

    #[test]
    fn related_radicands_align() {
        // 2√3 built from an unreduced radicand with a large prime square
        let big = BigInt::from(1_000_003i64) * BigInt::from(1_000_003i64) * 3;
        let a = QuadSurd::new(int(0), int(1), big).unwrap();
        let b = surd(int(0), int(1_000_003), 3);
        assert_eq!(a.cmp_exact(&b).unwrap(), Ordering::Equal);
    }

    #[test]
    fn sqrt_of_rational() {
        let x = QuadSurd::sqrt(&ratio(99, 1000)).unwrap();
        let sq = x.checked_mul(&x).unwrap();
        assert_eq!(sq.to_rational().unwrap(), ratio(99, 1000));
        assert_eq!(QuadSurd::sqrt(&ratio(1, 16)).unwrap().to_rational().unwrap(), ratio(1, 4));
    }

    #[test]
    fn recip_round_trips() {
        let x = surd(ratio(-1, 4), ratio(1, 4), 481);
        let one = x.checked_mul(&x.recip().unwrap()).unwrap();
        assert_eq!(one, QuadSurd::from(1));
        assert_eq!(QuadSurd::zero().recip(), Err(Error::DivisionByZero));
    }

    #[test]
    fn parse_accepts_fractions_and_integers_only() {
        assert_eq!(parse_rational("228/721").unwrap(), ratio(228, 721));
        assert_eq!(parse_rational("-4").unwrap(), int(-4));
        assert_eq!(parse_rational(" 6/4 ").unwrap(), ratio(3, 2));
        assert!(parse_rational("0.5").is_err());
        assert!(parse_rational("1e3").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }

    #[test]
    fn approx_renders_twelve_digits() {
        assert_eq!(QuadSurd::from(36).approx(12), "36.0000000000");
        assert_eq!(surd(int(0), int(1), 10).approx(12), "3.16227766017");
        assert_eq!(QuadSurd::from(ratio(-1, 3)).approx(12), "-0.333333333333");
        assert_eq!(QuadSurd::from(ratio(1, 10_000_000)).approx(3), "1.00e-7");
        assert_eq!(QuadSurd::from(999_999).approx(3), "1000000");
        assert_eq!(QuadSurd::from(ratio(9995, 1000)).approx(3), "10.0");
    }

    #[test]
    fn display_forms() {
        assert_eq!(surd(int(9), int(4), 3).to_string(), "9 + 4*sqrt(3)");
        assert_eq!(surd(int(0), int(-1), 10).to_string(), "-sqrt(10)");
        assert_eq!(surd(ratio(-1, 4), ratio(1, 4), 481).to_string(), "-1/4 + 1/4*sqrt(481)");
        assert_eq!(QuadSurd::from(ratio(9, 2)).to_string(), "9/2");
    }
}
