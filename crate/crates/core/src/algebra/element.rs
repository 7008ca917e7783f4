use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::BasisTag;
use crate::error::{Error, Result};
use crate::stack::StackPartition;

/// A finite linear combination of basis elements `B_τ` with rational
/// coefficients. Zero coefficients are never stored and terms iterate in the
/// global stack-partition order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyElement {
    basis: BasisTag,
    terms: BTreeMap<StackPartition, BigRational>,
}

impl PolyElement {
    pub fn zero(basis: BasisTag) -> Self {
        PolyElement {
            basis,
            terms: BTreeMap::new(),
        }
    }

    /// `B_∅ = 1`.
    pub fn one(basis: BasisTag) -> Self {
        Self::singleton(basis, StackPartition::empty())
    }

    pub fn singleton(basis: BasisTag, tau: StackPartition) -> Self {
        Self::monomial(basis, tau, BigRational::one())
    }

    pub fn monomial(basis: BasisTag, tau: StackPartition, coeff: BigRational) -> Self {
        let mut out = Self::zero(basis);
        out.add_term(tau, coeff);
        out
    }

    /// Sums repeated indices and drops zeros.
    pub fn from_terms<I>(basis: BasisTag, terms: I) -> Self
    where
        I: IntoIterator<Item = (StackPartition, BigRational)>,
    {
        let mut out = Self::zero(basis);
        for (tau, c) in terms {
            out.add_term(tau, c);
        }
        out
    }

    pub fn basis(&self) -> BasisTag {
        self.basis
    }

    pub fn terms(&self) -> impl Iterator<Item = (&StackPartition, &BigRational)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<StackPartition, BigRational> {
        self.terms
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

    pub fn coeff(&self, tau: &StackPartition) -> BigRational {
        self.terms
            .get(tau)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, tau: StackPartition, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(tau) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &PolyElement, c: &BigRational) -> Result<()> {
        other.expect_basis(self.basis)?;
        if c.is_zero() {
            return Ok(());
        }
        for (tau, x) in &other.terms {
            self.add_term(tau.clone(), x * c);
        }
        Ok(())
    }

    pub fn add(&self, other: &PolyElement) -> Result<PolyElement> {
        let mut out = self.clone();
        out.add_scaled(other, &BigRational::one())?;
        Ok(out)
    }

    pub fn sub(&self, other: &PolyElement) -> Result<PolyElement> {
        let mut out = self.clone();
        out.add_scaled(other, &-BigRational::one())?;
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> PolyElement {
        if c.is_zero() {
            return Self::zero(self.basis);
        }
        PolyElement {
            basis: self.basis,
            terms: self.terms.iter().map(|(t, x)| (t.clone(), x * c)).collect(),
        }
    }

    pub fn neg(&self) -> PolyElement {
        self.scale(&-BigRational::one())
    }

    /// The same coefficients read in another basis: `Σ c_τ A_τ ↦ Σ c_τ B_τ`.
    pub fn relabel(&self, basis: BasisTag) -> PolyElement {
        PolyElement {
            basis,
            terms: self.terms.clone(),
        }
    }

    pub(crate) fn map_coefficients<F>(&self, basis: BasisTag, mut f: F) -> PolyElement
    where
        F: FnMut(&StackPartition, &BigRational) -> BigRational,
    {
        PolyElement::from_terms(basis, self.terms.iter().map(|(t, c)| (t.clone(), f(t, c))))
    }

    /// Weights that carry a nonzero term.
    pub fn degrees(&self) -> BTreeSet<u32> {
        self.terms.keys().map(|t| t.weight()).collect()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degrees().len() <= 1
    }

    pub fn homogeneous_component(&self, n: u32) -> PolyElement {
        PolyElement {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .filter(|(t, _)| t.weight() == n)
                .map(|(t, c)| (t.clone(), c.clone()))
                .collect(),
        }
    }

    /// Fails unless `self` is written in `basis`.
    pub fn expect_basis(&self, basis: BasisTag) -> Result<()> {
        if self.basis == basis {
            Ok(())
        } else {
            Err(Error::BasisMismatch {
                expected: basis,
                found: self.basis,
            })
        }
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(ElementJson::from(self)).expect("element JSON is always representable")
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&ElementJson::from(self))
            .expect("element JSON is always representable")
    }

    pub fn from_json_str(text: &str) -> Result<PolyElement> {
        let raw: ElementJson = serde_json::from_str(text)?;
        raw.try_into()
    }
}

/// Renders as `c1*B[τ1] + c2*B[τ2] + …`, or `0` for the zero element.
impl fmt::Display for PolyElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (tau, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{}*{}[{}]", format_rational(c), self.basis, tau)?;
        }
        Ok(())
    }
}

/// `p` for integers, `p/q` otherwise.
pub fn format_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub fn parse_rational(text: &str) -> Result<BigRational> {
    let bad = || Error::Json(format!("invalid rational `{text}`"));
    let (numer, denom) = match text.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (text.trim(), "1"),
    };
    let p: BigInt = numer.parse().map_err(|_| bad())?;
    let q: BigInt = denom.parse().map_err(|_| bad())?;
    if q.is_zero() || q.is_negative() {
        return Err(bad());
    }
    Ok(BigRational::new(p, q))
}

#[derive(Serialize, Deserialize)]
struct ElementJson {
    basis: BasisTag,
    terms: Vec<(StackPartition, CoefficientJson)>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum CoefficientJson {
    Text(String),
    Integer(i64),
}

impl From<&PolyElement> for ElementJson {
    fn from(x: &PolyElement) -> Self {
        ElementJson {
            basis: x.basis,
            terms: x
                .terms
                .iter()
                .map(|(t, c)| (t.clone(), CoefficientJson::Text(format_rational(c))))
                .collect(),
        }
    }
}

impl TryFrom<ElementJson> for PolyElement {
    type Error = Error;

    fn try_from(raw: ElementJson) -> Result<Self> {
        let mut out = PolyElement::zero(raw.basis);
        for (tau, c) in raw.terms {
            let c = match c {
                CoefficientJson::Text(s) => parse_rational(&s)?,
                CoefficientJson::Integer(i) => BigRational::from_integer(i.into()),
            };
            out.add_term(tau, c);
        }
        Ok(out)
    }
}
