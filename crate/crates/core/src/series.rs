//! Truncated power series in the variables `x_{i,j}` and a formal parameter `t`.
//!
//! A monomial has x-weight `Σ i·e` over its factors `x_{i,j}^e`; `t` carries no
//! weight. Every series keeps only monomials of x-weight at most its cap, and
//! products are truncated back to the cap. In each generating function below
//! the `t`-exponent is tied to the x-weight, so the cap also bounds the powers
//! of `t` that occur.
//!
//! The products `Π_{i ≤ N, j ≤ J}` are finite. No monomial of x-weight at most
//! `N` involves a variable `x_{i,j}` with `i > N`, and when `J` is at least the
//! degree `n` every monomial orbit of `M_τ` with `|τ| = n` has a representative
//! on the first `J` variables of each degree. Truncating to `i ≤ N`, `j ≤ J`
//! therefore loses nothing below the cap.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::{to_m, BasisTag, PolyElement};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::stack::StackPartition;

/// `Π x_{i,j}^e · t^k`, with factors sorted by `(i, j)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    x: Vec<((u32, u32), u32)>,
    t: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    /// Builds from arbitrary `((i, j), e)` factors; repeats are merged and
    /// zero exponents dropped.
    pub fn new(factors: impl IntoIterator<Item = ((u32, u32), u32)>, t: u32) -> Self {
        let mut merged: BTreeMap<(u32, u32), u32> = BTreeMap::new();
        for (v, e) in factors {
            if e > 0 {
                *merged.entry(v).or_insert(0) += e;
            }
        }
        Monomial {
            x: merged.into_iter().collect(),
            t,
        }
    }

    pub fn factors(&self) -> &[((u32, u32), u32)] {
        &self.x
    }

    pub fn t_exponent(&self) -> u32 {
        self.t
    }

    pub fn weight(&self) -> u32 {
        self.x.iter().map(|&((i, _), e)| i * e).sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut x = Vec::with_capacity(self.x.len() + other.x.len());
        let (mut a, mut b) = (self.x.iter().peekable(), other.x.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(va, ea)), Some(&&(vb, eb))) => {
                    if va == vb {
                        x.push((va, ea + eb));
                        a.next();
                        b.next();
                    } else if va < vb {
                        x.push((va, ea));
                        a.next();
                    } else {
                        x.push((vb, eb));
                        b.next();
                    }
                }
                (Some(&&f), None) => {
                    x.push(f);
                    a.next();
                }
                (None, Some(&&f)) => {
                    x.push(f);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Monomial {
            x,
            t: self.t + other.t,
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .x
            .iter()
            .map(|&((i, j), e)| {
                if e == 1 {
                    format!("x{i}_{j}")
                } else {
                    format!("x{i}_{j}^{e}")
                }
            })
            .collect();
        match self.t {
            0 => {}
            1 => parts.push("t".into()),
            k => parts.push(format!("t^{k}")),
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// A rational combination of monomials of x-weight at most `cap`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    cap: u32,
    terms: BTreeMap<Monomial, BigRational>,
}

impl TruncatedSeries {
    pub fn zero(cap: u32) -> Self {
        TruncatedSeries {
            cap,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(cap: u32) -> Self {
        Self::monomial(cap, Monomial::one(), BigRational::one())
    }

    pub fn monomial(cap: u32, mono: Monomial, c: BigRational) -> Self {
        let mut out = Self::zero(cap);
        out.add_term(mono, c);
        out
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn coeff(&self, mono: &Monomial) -> BigRational {
        self.terms
            .get(mono)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Adds `c · mono`, silently discarding it above the cap.
    pub fn add_term(&mut self, mono: Monomial, c: BigRational) {
        if c.is_zero() || mono.weight() > self.cap {
            return;
        }
        match self.terms.entry(mono) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn add_scaled(&mut self, other: &TruncatedSeries, c: &BigRational) {
        for (m, x) in &other.terms {
            self.add_term(m.clone(), x * c);
        }
    }

    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let mut out = self.clone();
        out.cap = self.cap.min(other.cap);
        out.terms.retain(|m, _| m.weight() <= out.cap);
        out.add_scaled(other, &BigRational::one());
        out
    }

    pub fn sub(&self, other: &TruncatedSeries) -> TruncatedSeries {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, c: &BigRational) -> TruncatedSeries {
        let mut out = Self::zero(self.cap);
        out.add_scaled(self, c);
        out
    }

    /// Product truncated to the smaller cap.
    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let cap = self.cap.min(other.cap);
        let buckets = by_weight(other, cap);
        let mut acc: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        for (a, x) in &self.terms {
            let wa = a.weight();
            if wa > cap {
                continue;
            }
            for bucket in &buckets[..=(cap - wa) as usize] {
                for &(b, y) in bucket {
                    *acc.entry(a.mul(b)).or_insert_with(BigRational::zero) += x * y;
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        TruncatedSeries { cap, terms: acc }
    }

    pub fn pow(&self, k: u32) -> TruncatedSeries {
        (0..k).fold(Self::one(self.cap), |acc, _| acc.mul(self))
    }

    /// Formal derivative in `t`.
    pub fn derivative_t(&self) -> TruncatedSeries {
        let mut out = Self::zero(self.cap);
        for (m, c) in &self.terms {
            if m.t > 0 {
                let lowered = Monomial {
                    x: m.x.clone(),
                    t: m.t - 1,
                };
                out.add_term(lowered, c * BigRational::from_integer(m.t.into()));
            }
        }
        out
    }

    /// The coefficient of `t^k`, as a series in the `x` variables alone.
    pub fn t_coefficient(&self, k: u32) -> TruncatedSeries {
        let mut out = Self::zero(self.cap);
        for (m, c) in &self.terms {
            if m.t == k {
                out.add_term(
                    Monomial {
                        x: m.x.clone(),
                        t: 0,
                    },
                    c.clone(),
                );
            }
        }
        out
    }

    pub fn max_t_exponent(&self) -> u32 {
        self.terms.keys().map(|m| m.t).max().unwrap_or(0)
    }

    fn split_constant(&self) -> Result<(BigRational, TruncatedSeries)> {
        let mut rest = self.clone();
        let c0 = rest
            .terms
            .remove(&Monomial::one())
            .unwrap_or_else(BigRational::zero);
        if let Some((m, _)) = rest.terms.iter().find(|(m, _)| m.weight() == 0) {
            return Err(Error::InvalidArgument(format!(
                "term {m} has x-weight zero, so its powers never truncate"
            )));
        }
        Ok((c0, rest))
    }

    /// `exp(F)` for `F` without constant term.
    pub fn exp(&self) -> Result<TruncatedSeries> {
        let (c0, f) = self.split_constant()?;
        if !c0.is_zero() {
            return Err(Error::InvalidArgument(
                "exp needs a series without constant term".into(),
            ));
        }
        let mut out = Self::one(self.cap);
        let mut power = Self::one(self.cap);
        for k in 1..=self.cap {
            power = power
                .mul(&f)
                .scale(&BigRational::new(BigInt::one(), k.into()));
            if power.is_zero() {
                break;
            }
            out.add_scaled(&power, &BigRational::one());
        }
        Ok(out)
    }

    /// `log(F)` for `F` with constant term 1.
    pub fn log(&self) -> Result<TruncatedSeries> {
        let (c0, g) = self.split_constant()?;
        if !c0.is_one() {
            return Err(Error::InvalidArgument("log needs constant term 1".into()));
        }
        let mut out = Self::zero(self.cap);
        let mut power = Self::one(self.cap);
        for k in 1..=self.cap {
            power = power.mul(&g);
            if power.is_zero() {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            out.add_scaled(&power, &BigRational::new(sign.into(), k.into()));
        }
        Ok(out)
    }

    /// Multiplicative inverse of a series with constant term 1.
    pub fn inverse(&self) -> Result<TruncatedSeries> {
        let (c0, g) = self.split_constant()?;
        if !c0.is_one() {
            return Err(Error::InvalidArgument(
                "inverse needs constant term 1".into(),
            ));
        }
        let neg = g.scale(&-BigRational::one());
        let mut out = Self::one(self.cap);
        let mut power = Self::one(self.cap);
        for _ in 1..=self.cap {
            power = power.mul(&neg);
            if power.is_zero() {
                break;
            }
            out.add_scaled(&power, &BigRational::one());
        }
        Ok(out)
    }
}

fn by_weight(s: &TruncatedSeries, cap: u32) -> Vec<Vec<(&Monomial, &BigRational)>> {
    let mut buckets = vec![Vec::new(); cap as usize + 1];
    for (m, c) in &s.terms {
        let w = m.weight();
        if w <= cap {
            buckets[w as usize].push((m, c));
        }
    }
    buckets
}

/// A realized element, with a flag for whether `J` was large enough for the
/// realization to determine the element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realization {
    pub series: TruncatedSeries,
    pub faithful: bool,
}

/// Evaluates `x` on the variables `x_{i,j}`, `j ≤ J`, dropping components of
/// weight above `cap`.
pub fn realize(x: &PolyElement, j_max: u32, cap: u32) -> Realization {
    let m = to_m(x);
    let mut series = TruncatedSeries::zero(cap);
    let mut faithful = true;
    for (tau, c) in m.terms() {
        if tau.weight() > cap {
            continue;
        }
        if tau.weight() > j_max {
            faithful = false;
        }
        for mono in monomial_orbit(tau, j_max) {
            series.add_term(mono, c.clone());
        }
    }
    Realization { series, faithful }
}

/// The distinct monomials of `M_τ` on `J` variables per degree.
fn monomial_orbit(tau: &StackPartition, j_max: u32) -> Vec<Monomial> {
    let mut out = vec![Vec::new()];
    for u in tau.degrees() {
        let lambda = tau.restrict(u);
        let rows = arrangements(&lambda, j_max);
        let mut next = Vec::with_capacity(out.len() * rows.len());
        for prefix in &out {
            for row in &rows {
                let mut f: Vec<((u32, u32), u32)> = prefix.clone();
                f.extend(
                    row.iter()
                        .enumerate()
                        .filter(|(_, &e)| e > 0)
                        .map(|(j, &e)| ((u, j as u32 + 1), e)),
                );
                next.push(f);
            }
        }
        out = next;
    }
    out.into_iter().map(|f| Monomial::new(f, 0)).collect()
}

/// Distinct rearrangements of `λ` padded with zeros to length `J`.
fn arrangements(lambda: &Partition, j_max: u32) -> Vec<Vec<u32>> {
    let width = j_max as usize;
    if lambda.len() > width {
        return Vec::new();
    }
    let mut counts: Vec<(u32, usize)> = lambda
        .multiplicities()
        .into_iter()
        .map(|(v, c)| (v, c as usize))
        .collect();
    counts.push((0, width - lambda.len()));
    let mut out = Vec::new();
    let mut row = Vec::with_capacity(width);
    fill_arrangements(&mut counts, width, &mut row, &mut out);
    out
}

fn fill_arrangements(
    counts: &mut [(u32, usize)],
    width: usize,
    row: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) {
    if row.len() == width {
        out.push(row.clone());
        return;
    }
    for i in 0..counts.len() {
        if counts[i].1 == 0 {
            continue;
        }
        counts[i].1 -= 1;
        row.push(counts[i].0);
        fill_arrangements(counts, width, row, out);
        row.pop();
        counts[i].1 += 1;
    }
}

/// Generating-function identities checked on truncated series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GfKind {
    /// `𝓗(t) 𝓔(t) = 1`.
    HeUnit,
    /// `𝓗⁺(t) 𝓔⁺(t) = 1`.
    HpepUnit,
    /// `m 𝓟(t) 𝓗(t) = 𝓗'(t)`.
    PEqDlogH,
    /// `m 𝓟(t) 𝓔(t) = −𝓔'(t)`.
    PEqNegDlogE,
    /// `𝓗_{(2m)}(t) 𝓔⁺(t) = 𝓗(t)`.
    H2EpEqH,
    /// `exp(Σ_k P_{k^m} t^{mk}/k) = 𝓗(t)`.
    ExpPEqH,
    /// `exp(Σ_k P_{k^m} t^{mk}/k) exp(−Σ_h P_{h^{2m}} t^{2mh}/h) = 𝓔⁺(t)`.
    EpEqExpDiff,
}

impl GfKind {
    pub const ALL: [GfKind; 7] = [
        GfKind::HeUnit,
        GfKind::HpepUnit,
        GfKind::PEqDlogH,
        GfKind::PEqNegDlogE,
        GfKind::H2EpEqH,
        GfKind::ExpPEqH,
        GfKind::EpEqExpDiff,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GfKind::HeUnit => "HE_UNIT",
            GfKind::HpepUnit => "HPEP_UNIT",
            GfKind::PEqDlogH => "P_EQ_DLOG_H",
            GfKind::PEqNegDlogE => "P_EQ_NEG_DLOG_E",
            GfKind::H2EpEqH => "H2_EP_EQ_H",
            GfKind::ExpPEqH => "EXP_P_EQ_H",
            GfKind::EpEqExpDiff => "EP_EQ_EXP_DIFF",
        }
    }
}

impl fmt::Display for GfKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for GfKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_uppercase().replace('-', "_");
        GfKind::ALL
            .into_iter()
            .find(|k| k.name() == key)
            .ok_or_else(|| {
                Error::InvalidArgument(format!("unknown generating-function check `{s}`"))
            })
    }
}

/// Which factor `(1 ± y)^{±1}` a product generating function multiplies.
#[derive(Clone, Copy)]
enum Factor {
    /// `(1 − y)^{-1}`.
    H,
    /// `1 − y`.
    E,
    /// `1 + y`.
    EPlus,
    /// `(1 + y)^{-1}`.
    HPlus,
}

/// `Π_{i ≤ cap, j ≤ J} factor(x_{i,j}^m t^{mi})`.
fn product_gf(factor: Factor, cap: u32, j_max: u32, m: u32) -> TruncatedSeries {
    let mut out = TruncatedSeries::one(cap);
    for i in 1..=cap {
        for j in 1..=j_max {
            let mut f = TruncatedSeries::one(cap);
            let mut k = 1;
            while i * m * k <= cap {
                let c: i64 = match factor {
                    Factor::H => 1,
                    Factor::HPlus => {
                        if k % 2 == 1 {
                            -1
                        } else {
                            1
                        }
                    }
                    Factor::E => -1,
                    Factor::EPlus => 1,
                };
                f.add_term(
                    Monomial::new([((i, j), m * k)], i * m * k),
                    BigRational::from_integer(c.into()),
                );
                if matches!(factor, Factor::E | Factor::EPlus) {
                    break;
                }
                k += 1;
            }
            out = out.mul(&f);
        }
    }
    out
}

/// `P_{d^m}` on `J` variables per degree, from its power-sum form.
fn power_sum(d: u32, m: u32, j_max: u32, cap: u32) -> TruncatedSeries {
    let mut out = TruncatedSeries::zero(cap);
    for k in crate::arith::divisors(d) {
        for j in 1..=j_max {
            out.add_term(
                Monomial::new([((k, j), m * d / k)], 0),
                BigRational::from_integer(k.into()),
            );
        }
    }
    out
}

fn with_t(s: &TruncatedSeries, t: u32) -> TruncatedSeries {
    let mut out = TruncatedSeries::zero(s.cap);
    for (mono, c) in s.terms() {
        out.add_term(
            Monomial {
                x: mono.x.clone(),
                t: mono.t + t,
            },
            c.clone(),
        );
    }
    out
}

/// `Σ_{d ≥ 1} w(d) P_{d^m} t^{md + shift}` with `shift ∈ {0, −1}` encoded as `lower`.
fn power_gf(
    m: u32,
    j_max: u32,
    cap: u32,
    lower: bool,
    weight: impl Fn(u32) -> BigRational,
) -> TruncatedSeries {
    let mut out = TruncatedSeries::zero(cap);
    let mut d = 1;
    while d * m <= cap {
        let t = if lower { d * m - 1 } else { d * m };
        out.add_scaled(&with_t(&power_sum(d, m, j_max, cap), t), &weight(d));
        d += 1;
    }
    out
}

/// Checks that the `t^{mk}` coefficient of `series` equals the realization of
/// the singleton `tag_{k^m}` for every `k` with `mk ≤ cap`.
fn coefficients_realize(
    series: &TruncatedSeries,
    tag: BasisTag,
    m: u32,
    j_max: u32,
    lower: bool,
) -> bool {
    let cap = series.cap();
    let mut k = 1;
    while k * m <= cap {
        let t = if lower { k * m - 1 } else { k * m };
        let element = PolyElement::singleton(tag, StackPartition::single(k, m).expect("positive"));
        if series.t_coefficient(t) != realize(&element, j_max, cap).series {
            return false;
        }
        k += 1;
    }
    true
}

/// Builds both sides of a generating-function identity on `x_{i,j}` with
/// `i ≤ cap`, `j ≤ J`, truncated at x-weight `cap`, and compares them. The
/// coefficients of the product generating functions are also compared with
/// realizations of the corresponding basis elements.
pub fn gf_product_check(kind: GfKind, cap: u32, j_max: u32, m: u32) -> Result<bool> {
    if m == 0 {
        return Err(Error::InvalidArgument(
            "multiplicity must be positive".into(),
        ));
    }
    if cap > 0 && j_max == 0 {
        return Err(Error::InvalidArgument(
            "need at least one variable per degree".into(),
        ));
    }
    let one = BigRational::one();
    let mm = BigRational::from_integer(m.into());
    let h = || product_gf(Factor::H, cap, j_max, m);
    let e = || product_gf(Factor::E, cap, j_max, m);
    let ep = || product_gf(Factor::EPlus, cap, j_max, m);
    let hp = || product_gf(Factor::HPlus, cap, j_max, m);
    let ok = match kind {
        GfKind::HeUnit => {
            let (h, e) = (h(), e());
            h.mul(&e) == TruncatedSeries::one(cap)
                && coefficients_realize(&h, BasisTag::H, m, j_max, false)
                && coefficients_realize(&e, BasisTag::E, m, j_max, false)
        }
        GfKind::HpepUnit => {
            let (hp, ep) = (hp(), ep());
            hp.mul(&ep) == TruncatedSeries::one(cap)
                && coefficients_realize(&hp, BasisTag::HPlus, m, j_max, false)
                && coefficients_realize(&ep, BasisTag::EPlus, m, j_max, false)
        }
        GfKind::PEqDlogH | GfKind::PEqNegDlogE => {
            let p = power_gf(m, j_max, cap, true, |_| one.clone());
            let f = if kind == GfKind::PEqDlogH { h() } else { e() };
            let lhs = p.mul(&f).scale(&mm);
            let rhs = if kind == GfKind::PEqDlogH {
                f.derivative_t()
            } else {
                f.derivative_t().scale(&-one.clone())
            };
            lhs == rhs && coefficients_realize(&p, BasisTag::P, m, j_max, true)
        }
        GfKind::H2EpEqH => {
            let h2 = product_gf(Factor::H, cap, j_max, 2 * m);
            let (h, ep) = (h(), ep());
            h2.mul(&ep) == h && coefficients_realize(&h2, BasisTag::H, 2 * m, j_max, false)
        }
        GfKind::ExpPEqH => {
            let p = power_gf(m, j_max, cap, false, |k| {
                BigRational::new(BigInt::one(), k.into())
            });
            let h = h();
            p.exp()? == h && h.log()? == p
        }
        GfKind::EpEqExpDiff => {
            let p = power_gf(m, j_max, cap, false, |k| {
                BigRational::new(BigInt::one(), k.into())
            });
            let p2 = power_gf(2 * m, j_max, cap, false, |k| {
                BigRational::new((-1).into(), k.into())
            });
            p.exp()?.mul(&p2.exp()?) == ep()
        }
    };
    Ok(ok)
}
