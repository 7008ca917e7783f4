//! M-expansions of every basis and products of elements.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{BasisTag, PolyElement};
use crate::arith::divisors;
use crate::coeff::{partition_sequences, structure_constants, SequenceFamily};
use crate::error::{Error, Result};
use crate::partition::enumerate_partitions;
use crate::stack::{stack_partitions, StackPartition};

type Memo<K> = OnceLock<RwLock<HashMap<K, Arc<PolyElement>>>>;

fn memoized<K, F>(memo: &'static Memo<K>, key: K, compute: F) -> Arc<PolyElement>
where
    K: std::hash::Hash + Eq + Clone,
    F: FnOnce() -> PolyElement,
{
    let table = memo.get_or_init(Default::default);
    if let Some(hit) = table.read().unwrap().get(&key) {
        return hit.clone();
    }
    let value = Arc::new(compute());
    table.write().unwrap().entry(key).or_insert(value).clone()
}

/// `Π M_{α_i} = Σ_τ 𝒮^τ_ᾱ M_τ`. The empty product is `M_∅ = 1`.
pub fn m_product(factors: &[StackPartition]) -> PolyElement {
    let mut key: Vec<StackPartition> = factors.iter().filter(|f| !f.is_empty()).cloned().collect();
    key.sort();
    (*m_product_sorted(key)).clone()
}

fn m_product_sorted(key: Vec<StackPartition>) -> Arc<PolyElement> {
    static MEMO: Memo<Vec<StackPartition>> = OnceLock::new();
    memoized(&MEMO, key.clone(), || {
        PolyElement::from_terms(
            BasisTag::M,
            structure_constants(&key)
                .into_iter()
                .map(|(tau, c)| (tau, BigRational::from_integer(c.into()))),
        )
    })
}

/// M-expansion of the single-stack generator `F_{d^m}`, straight from the
/// defining sums of `F_d` followed by the substitution `x ↦ x^m`.
pub fn expand_generator(tag: BasisTag, d: u32, m: u32) -> Result<PolyElement> {
    if d == 0 || m == 0 {
        return Err(Error::InvalidArgument(format!(
            "generator {tag}_{{{d}^{m}}} needs positive degree and multiplicity"
        )));
    }
    let one = || BigRational::one();
    let signed = |alpha: &StackPartition| BigRational::from_integer(alpha.sign().into());
    let terms: Vec<(StackPartition, BigRational)> = match tag {
        BasisTag::M => vec![(StackPartition::single(d, 1)?, one())],
        BasisTag::H => stack_partitions(d)
            .iter()
            .map(|a| (a.clone(), one()))
            .collect(),
        BasisTag::HPlus => stack_partitions(d)
            .iter()
            .map(|a| (a.clone(), signed(a)))
            .collect(),
        BasisTag::EPlus => enumerate_partitions(d)
            .iter()
            .map(|l| (StackPartition::from_partition(l), one()))
            .collect(),
        BasisTag::E => enumerate_partitions(d)
            .iter()
            .map(|l| {
                let a = StackPartition::from_partition(l);
                let s = signed(&a);
                (a, s)
            })
            .collect(),
        BasisTag::P => divisors(d)
            .into_iter()
            .map(|k| {
                let alpha = StackPartition::single(k, d / k).expect("positive");
                (alpha, BigRational::from_integer(k.into()))
            })
            .collect(),
    };
    Ok(PolyElement::from_terms(
        BasisTag::M,
        terms.into_iter().map(|(a, c)| (a.scaled(m), c)),
    ))
}

/// M-expansion of `F_τ` through the matrix-counting coefficients.
pub fn expand_type(tag: BasisTag, tau: &StackPartition) -> PolyElement {
    (*expand_type_shared(tag, tau)).clone()
}

pub(crate) fn expand_type_shared(tag: BasisTag, tau: &StackPartition) -> Arc<PolyElement> {
    static MEMO: Memo<(BasisTag, StackPartition)> = OnceLock::new();
    memoized(&MEMO, (tag, tau.clone()), || compute_expansion(tag, tau))
}

fn compute_expansion(tag: BasisTag, tau: &StackPartition) -> PolyElement {
    let mut out = PolyElement::zero(BasisTag::M);
    for (sources, weight) in expansion_sources(tag, tau) {
        let product = m_product_sorted(sources);
        out.add_scaled(&product, &BigRational::from_integer(weight))
            .expect("both sides in M");
    }
    out
}

/// The distinct source sequences, sorted, whose M-products sum to `F_τ`,
/// each with its accumulated integer weight: `Π k_i` for P, `sgn_τ(ν)` for E
/// and H⁺, and 1 for H and E⁺.
pub fn expansion_sources(
    tag: BasisTag,
    tau: &StackPartition,
) -> Vec<(Vec<StackPartition>, BigInt)> {
    let mut grouped: HashMap<Vec<StackPartition>, BigInt> = HashMap::new();
    let mut push = |mut sources: Vec<StackPartition>, w: BigInt| {
        sources.retain(|s| !s.is_empty());
        sources.sort();
        *grouped.entry(sources).or_insert_with(BigInt::zero) += w;
    };
    match tag {
        BasisTag::M => push(vec![tau.clone()], BigInt::one()),
        BasisTag::P => {
            for k in tau.stack_divisors() {
                push(k.apply(tau), BigInt::from(k.product()));
            }
        }
        _ => {
            let family = match tag {
                BasisTag::H | BasisTag::HPlus => SequenceFamily::Stack,
                _ => SequenceFamily::Ordinary,
            };
            let signed = matches!(tag, BasisTag::E | BasisTag::HPlus);
            for nu in partition_sequences(tau, family, None) {
                let w = if signed { nu.sign } else { 1 };
                push(nu.parts, BigInt::from(w));
            }
        }
    }
    let mut out: Vec<_> = grouped.into_iter().filter(|(_, w)| !w.is_zero()).collect();
    out.sort();
    out
}

/// Rewrites any element in the M basis.
pub fn to_m(x: &PolyElement) -> PolyElement {
    if x.basis() == BasisTag::M {
        return x.clone();
    }
    let mut out = PolyElement::zero(BasisTag::M);
    for (tau, c) in x.terms() {
        out.add_scaled(&expand_type_shared(x.basis(), tau), c)
            .expect("both sides in M");
    }
    out
}

/// Product of two elements. Within a multiplicative basis indices are joined;
/// otherwise both factors are expanded in M and the result is in M.
pub fn multiply(a: &PolyElement, b: &PolyElement) -> PolyElement {
    if a.basis() == b.basis() && a.basis().is_multiplicative() {
        let mut out = PolyElement::zero(a.basis());
        for (s, x) in a.terms() {
            for (t, y) in b.terms() {
                out.add_term(s.union(t), x * y);
            }
        }
        return out;
    }
    let a = to_m(a);
    let b = to_m(b);
    let mut out = PolyElement::zero(BasisTag::M);
    for (s, x) in a.terms() {
        for (t, y) in b.terms() {
            let product = m_product(&[s.clone(), t.clone()]);
            out.add_scaled(&product, &(x * y)).expect("both sides in M");
        }
    }
    out
}
