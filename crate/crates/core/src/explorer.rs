//! Brute-force enumeration of divisor classes on `Yₙ`.
//!
//! The scans evaluate the region inequalities point by point, with no use of
//! the closed-form conic roots, so they serve as an independent check of
//! [`crate::blowup::hyperbola_d_of_m`]. Work is split over disjoint index
//! ranges and merged back into canonical order, so output never depends on
//! the number of workers.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::blowup::{self, check_beta0, DivisorClass};
use crate::error::{domain, Error, Result};
use crate::exactmath::{int, QuadSurd, Rational};

/// Hard cap on the number of candidate classes a general scan may visit.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScanMode {
    Homogeneous,
    GeneralSorted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanConfig {
    pub n: u64,
    pub beta0: Rational,
    pub m_max: u64,
    pub d_max: u64,
    pub mode: ScanMode,
    pub eps_n: Option<Rational>,
    /// Worker threads; `None` uses the machine's parallelism.
    pub workers: Option<usize>,
    pub budget: u64,
}

impl ScanConfig {
    pub fn homogeneous(n: u64, beta0: Rational, m_max: u64, d_max: u64) -> Self {
        ScanConfig {
            n,
            beta0,
            m_max,
            d_max,
            mode: ScanMode::Homogeneous,
            eps_n: None,
            workers: None,
            budget: DEFAULT_BUDGET,
        }
    }

    pub fn general(n: u64, beta0: Rational, m_max: u64, d_max: u64) -> Self {
        ScanConfig {
            mode: ScanMode::GeneralSorted,
            ..Self::homogeneous(n, beta0, m_max, d_max)
        }
    }

    pub fn with_eps_n(mut self, eps_n: Rational) -> Self {
        self.eps_n = Some(eps_n);
        self
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = Some(workers);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.m_max < 1 || self.d_max < 1 {
            return Err(domain(format!(
                "m_max = {} and d_max = {} must both be at least 1",
                self.m_max, self.d_max
            )));
        }
        check_beta0(&self.beta0)?;
        if let Some(eps) = &self.eps_n {
            if !eps.is_positive() {
                return Err(domain(format!("eps_n = {eps} must be positive")));
            }
        }
        if self.workers == Some(0) {
            return Err(domain("worker count must be at least 1"));
        }
        Ok(())
    }

    fn expect_mode(&self, mode: ScanMode) -> Result<()> {
        if self.mode != mode {
            return Err(domain(format!("scan requires mode {mode:?}, config has {:?}", self.mode)));
        }
        Ok(())
    }

    fn run<T: Send>(&self, job: impl FnOnce() -> T + Send) -> Result<T> {
        match self.workers {
            None => Ok(job()),
            Some(w) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(w)
                    .build()
                    .map_err(|e| domain(format!("cannot start {w} workers: {e}")))?;
                Ok(pool.install(job))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LinePosition {
    Below,
    On,
    Above,
}

impl LinePosition {
    pub fn as_str(self) -> &'static str {
        match self {
            LinePosition::Below => "BELOW",
            LinePosition::On => "ON",
            LinePosition::Above => "ABOVE",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RoeStatus {
    Allowed,
    Excluded,
}

impl RoeStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            RoeStatus::Allowed => "ALLOWED",
            RoeStatus::Excluded => "EXCLUDED",
        }
    }
}

/// Classification of one class against the region, the Nagata line and,
/// when `εₙ` is known, the Roé bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionReport {
    pub class: DivisorClass,
    /// `Some(m)` when the class is `(d, mⁿ)`.
    pub homogeneous_m: Option<BigInt>,
    pub d2: BigInt,
    pub kd: BigInt,
    pub pa: BigInt,
    pub mult_sum: BigInt,
    /// `D²/d`
    pub lhs: Rational,
    /// `((2−β₀)/β₀)(1 + M/d)`
    pub nagata_rhs: Rational,
    pub in_nagata_region: bool,
    /// Position of `d` relative to `M/√n`, which is `√n·m` for homogeneous classes.
    pub vs_nagata_line: LinePosition,
    pub vs_roe: Option<RoeStatus>,
}

impl RegionReport {
    pub fn evaluate(
        class: DivisorClass,
        homogeneous_m: Option<BigInt>,
        beta0: &Rational,
        eps_n: Option<&Rational>,
    ) -> Result<Self> {
        let (lhs, nagata_rhs) = blowup::nagata_sides(&class, beta0)?;
        let in_nagata_region = lhs <= nagata_rhs;
        let n = class.n() as u64;
        let mult_sum = class.multiplicity_sum();
        let vs_nagata_line = line_position(class.degree(), &mult_sum, n)?;
        let vs_roe = match eps_n {
            Some(eps) => {
                let bound = blowup::roe_bound(n, &QuadSurd::from(eps.clone()))?;
                let below = QuadSurd::from(lhs.clone()).cmp_exact(&bound)? == Ordering::Less;
                Some(if below { RoeStatus::Excluded } else { RoeStatus::Allowed })
            }
            None => None,
        };
        Ok(RegionReport {
            d2: class.self_intersection(),
            kd: class.canonical_degree(),
            pa: class.arithmetic_genus(),
            mult_sum,
            lhs,
            nagata_rhs,
            in_nagata_region,
            vs_nagata_line,
            vs_roe,
            class,
            homogeneous_m,
        })
    }

    fn sort_key(&self) -> (&BigInt, &BigInt, &[BigInt]) {
        match &self.homogeneous_m {
            Some(m) => (m, self.class.degree(), &[]),
            None => (self.class.degree(), self.class.degree(), self.class.multiplicities()),
        }
    }
}

/// Where `d` sits relative to `M/√n`.
fn line_position(d: &BigInt, mult_sum: &BigInt, n: u64) -> Result<LinePosition> {
    if n == 0 || !mult_sum.is_positive() {
        return Ok(match d.sign() {
            num_bigint::Sign::Minus => LinePosition::Below,
            num_bigint::Sign::NoSign if mult_sum.is_zero() => LinePosition::On,
            _ => LinePosition::Above,
        });
    }
    let line = QuadSurd::new(int(0), Rational::new(mult_sum.clone(), BigInt::from(n)), n)?;
    Ok(match QuadSurd::from(d.clone()).cmp_exact(&line)? {
        Ordering::Less => LinePosition::Below,
        Ordering::Equal => LinePosition::On,
        Ordering::Greater => LinePosition::Above,
    })
}

/// Every `(m, d)` with `1 ≤ m ≤ m_max`, `1 ≤ d ≤ d_max`, ordered by `m` then `d`.
pub fn scan_homogeneous(cfg: &ScanConfig) -> Result<Vec<RegionReport>> {
    cfg.validate()?;
    cfg.expect_mode(ScanMode::Homogeneous)?;
    let n = cfg.n as usize;
    let rows: Vec<Result<Vec<RegionReport>>> = cfg.run(|| {
        (1..=cfg.m_max)
            .into_par_iter()
            .map(|m| {
                (1..=cfg.d_max)
                    .map(|d| {
                        let class = DivisorClass::homogeneous(d, m, n);
                        RegionReport::evaluate(class, Some(BigInt::from(m)), &cfg.beta0, cfg.eps_n.as_ref())
                    })
                    .collect()
            })
            .collect()
    })?;
    let mut out = Vec::with_capacity((cfg.m_max * cfg.d_max) as usize);
    for row in rows {
        out.extend(row?);
    }
    out.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    Ok(out)
}

/// `C(m_max + n, n)·d_max`: the number of candidates a general scan visits.
pub fn general_candidate_count(cfg: &ScanConfig) -> BigInt {
    // weakly decreasing vectors of length n with entries in [0, m_max]
    let mut binom = BigInt::one();
    for i in 1..=cfg.n {
        binom = binom * BigInt::from(cfg.m_max + i) / BigInt::from(i);
    }
    binom * BigInt::from(cfg.d_max)
}

/// Pushes every weakly decreasing tail of length `len` bounded by `cap`, in
/// ascending lexicographic order.
fn decreasing_tails(prefix: &mut Vec<u64>, len: usize, cap: u64, out: &mut dyn FnMut(&[u64])) {
    if len == 0 {
        out(prefix);
        return;
    }
    for v in 0..=cap {
        prefix.push(v);
        decreasing_tails(prefix, len - 1, v, out);
        prefix.pop();
    }
}

/// Classes `(d, m₁ ≥ … ≥ mₙ ≥ 0)` inside the region, in lexicographic order of
/// `(d, m₁, …, mₙ)`. Fails before doing any work when the candidate count
/// exceeds the budget.
pub fn scan_general(cfg: &ScanConfig) -> Result<Vec<RegionReport>> {
    cfg.validate()?;
    cfg.expect_mode(ScanMode::GeneralSorted)?;
    let candidates = general_candidate_count(cfg);
    if candidates > BigInt::from(cfg.budget) {
        return Err(Error::Budget {
            candidates,
            limit: cfg.budget,
        });
    }
    let n = cfg.n as usize;
    let p = cfg.beta0.numer().clone();
    let two_q_minus_p = cfg.beta0.denom() * 2 - &p;
    let tasks: Vec<(u64, u64)> = (1..=cfg.d_max)
        .flat_map(|d| (0..=cfg.m_max).map(move |lead| (d, lead)))
        .collect();

    let chunks: Vec<Result<Vec<RegionReport>>> = cfg.run(|| {
        tasks
            .par_iter()
            .map(|&(d, lead)| {
                let mut hits: Vec<Vec<u64>> = Vec::new();
                let d_big = BigInt::from(d);
                let mut visit = |m: &[u64]| {
                    // β₀·D² ≤ (2 − β₀)(d + M), cleared by the denominator of β₀
                    let sq: u128 = m.iter().map(|&x| (x as u128) * (x as u128)).sum();
                    let sum: u128 = m.iter().map(|&x| x as u128).sum();
                    let d2 = &d_big * &d_big - BigInt::from(sq);
                    if &p * d2 <= &two_q_minus_p * (&d_big + BigInt::from(sum)) {
                        hits.push(m.to_vec());
                    }
                };
                if n == 0 {
                    if lead == 0 {
                        visit(&[]);
                    }
                } else {
                    let mut prefix = vec![lead];
                    decreasing_tails(&mut prefix, n - 1, lead, &mut visit);
                }
                hits.into_iter()
                    .map(|m| {
                        let class = DivisorClass::new(d, m.into_iter().map(BigInt::from).collect());
                        RegionReport::evaluate(class, None, &cfg.beta0, cfg.eps_n.as_ref())
                    })
                    .collect()
            })
            .collect()
    })?;
    let mut out = Vec::new();
    for chunk in chunks {
        out.extend(chunk?);
    }
    out.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    Ok(out)
}

/// Outcome of comparing one scanned row against the closed-form root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowCheck {
    pub m: u64,
    /// Every `d ∈ [1, d_max]` with a non-positive conic value.
    pub scanned: Vec<u64>,
    /// `floor` of the largest real root in `d`.
    pub root_floor: BigInt,
    /// The root lies at or beyond `d_max`, so the scan cannot confirm it.
    pub truncated: bool,
    pub agrees: bool,
}

/// Scans `d = 1..=d_max` for a fixed `m` and checks that the hits are exactly
/// `{1, …, floor(root)}`.
pub fn oracle_check_row(m: u64, cfg: &ScanConfig) -> Result<RowCheck> {
    cfg.validate()?;
    cfg.expect_mode(ScanMode::Homogeneous)?;
    let (mb, nb) = (BigInt::from(m), BigInt::from(cfg.n));
    let scanned: Vec<u64> = (1..=cfg.d_max)
        .filter(|&d| blowup::hyperbola_sign(&mb, &BigInt::from(d), &nb, &cfg.beta0) != Ordering::Greater)
        .collect();
    let root_floor = blowup::hyperbola_d_of_m(m, cfg.n, &cfg.beta0)?.floor();
    let truncated = root_floor >= BigInt::from(cfg.d_max);
    let top = if root_floor.is_positive() {
        root_floor.clone().min(BigInt::from(cfg.d_max))
    } else {
        BigInt::zero()
    };
    let expected: Vec<u64> = (1..=cfg.d_max).take_while(|&d| BigInt::from(d) <= top).collect();
    let agrees = !truncated && scanned == expected;
    Ok(RowCheck {
        m,
        scanned,
        root_floor,
        truncated,
        agrees,
    })
}

/// [`oracle_check_row`] for every `m` in `1..=m_max`, in order.
pub fn oracle_check_rows(cfg: &ScanConfig) -> Result<Vec<RowCheck>> {
    cfg.validate()?;
    cfg.run(|| {
        (1..=cfg.m_max)
            .into_par_iter()
            .map(|m| oracle_check_row(m, cfg))
            .collect()
    })?
}
