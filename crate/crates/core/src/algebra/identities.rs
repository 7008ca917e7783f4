//! Linear relations between the bases, each built from its own closed-form
//! sum and checked as an equality of M-expansions.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::{multiply, to_m, toeplitz_determinant, BasisTag, PolyElement};
use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};
use crate::stack::{multiplicity_pattern, MultiplicityPattern, StackPartition};

macro_rules! identity_ids {
    ($($variant:ident => $name:literal: $doc:literal,)*) => {
        /// Names of the checked identities.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum IdentityId {
            $(#[doc = $doc] $variant,)*
        }

        impl IdentityId {
            pub const ALL: &'static [IdentityId] = &[$(IdentityId::$variant,)*];

            pub fn name(self) -> &'static str {
                match self {
                    $(IdentityId::$variant => $name,)*
                }
            }

            pub fn description(self) -> &'static str {
                match self {
                    $(IdentityId::$variant => $doc,)*
                }
            }
        }
    };
}

identity_ids! {
    NewtonH => "NEWTON_H": "H_{d^m} = (1/d) Σ_{i=1}^{d} P_{i^m} H_{(d-i)^m}",
    NewtonE => "NEWTON_E": "E_{d^m} = -(1/d) Σ_{i=1}^{d} P_{i^m} E_{(d-i)^m}",
    ConvHeZero => "CONV_HE_ZERO": "Σ_{i=0}^{d} H_{i^m} E_{(d-i)^m} = 0",
    PFromEh => "P_FROM_EH": "P_{d^m} = Σ_{i=0}^{d-1} (d-i) E_{i^m} H_{(d-i)^m}",
    SplitH => "SPLIT_H": "H_{d^m} = Σ_k H_{k^{2m}} E+_{(d-2k)^m}",
    SplitHp => "SPLIT_HP": "H+_{d^m} = Σ_k H_{k^{2m}} E_{(d-2k)^m}",
    SplitE => "SPLIT_E": "E_{d^m} = Σ_k E_{k^{2m}} H+_{(d-2k)^m}",
    SplitEp => "SPLIT_EP": "E+_{d^m} = Σ_k E_{k^{2m}} H_{(d-2k)^m}",
    KappaEpInE => "KAPPA_EP_IN_E": "E+_{d^m} = Σ sgn(τ) κ_τ E_{mτ}, multiplicities in {1,2} with at most one 2",
    KappaHpInH => "KAPPA_HP_IN_H": "H+_{d^m} = Σ sgn(τ) κ_τ H_{mτ}, multiplicities in {1,2} with at most one 2",
    KappaEpInH => "KAPPA_EP_IN_H": "E+_{d^m} = Σ (-1)^{N_2(τ)} κ_τ H_{mτ}, multiplicities in {1,2} with at most one 1",
    KappaHpInE => "KAPPA_HP_IN_E": "H+_{d^m} = Σ (-1)^{N_2(τ)} κ_τ E_{mτ}, multiplicities in {1,2} with at most one 1",
    BinaryEInHp => "BINARY_E_IN_HP": "E_{d^m} = Σ H+_{mτ}, distinct power-of-2 multiplicities",
    BinaryHInEp => "BINARY_H_IN_EP": "H_{d^m} = Σ E+_{mτ}, distinct power-of-2 multiplicities",
    Pow2EInEp => "POW2_E_IN_EP": "E_{d^m} = Σ (-1)^{ℓ(τ)} κ_τ E+_{mτ}, power-of-2 multiplicities",
    Pow2HInHp => "POW2_H_IN_HP": "H_{d^m} = Σ (-1)^{ℓ(τ)} κ_τ H+_{mτ}, power-of-2 multiplicities",
    PInH => "P_IN_H": "P_{d^m} = Σ_λ (-1)^{ℓ(λ)-1} (d/ℓ(λ)) (ℓ(λ); m_1(λ), m_2(λ), …) H_{mλ}",
    PInE => "P_IN_E": "P_{d^m} = Σ_λ (-1)^{ℓ(λ)} (d/ℓ(λ)) (ℓ(λ); m_1(λ), m_2(λ), …) E_{mλ}",
    HInP => "H_IN_P": "H_{d^m} = Σ_λ z_λ^{-1} P_{mλ}",
    EInP => "E_IN_P": "E_{d^m} = Σ_λ (-1)^{ℓ(λ)} z_λ^{-1} P_{mλ}",
    EpInP => "EP_IN_P": "E+_{d^m} = Σ_{|λ|+2|μ|=d} z_λ^{-1} z_μ^{-1} (-1)^{ℓ(μ)} P_{mλ} P_{(2m)μ}",
    HpInP => "HP_IN_P": "H+_{d^m} = Σ_{|λ|+2|μ|=d} z_λ^{-1} z_μ^{-1} (-1)^{ℓ(λ)} P_{mλ} P_{(2m)μ}",
    PInEp => "P_IN_EP": "P_{d^m} = Σ_τ (-1)^{ℓ(τ)-1} (d/ℓ(τ)) (ℓ(τ); stack counts) E+_{mτ}, one common power-of-2 multiplicity",
    PInHp => "P_IN_HP": "P_{d^m} = Σ_τ (-1)^{ℓ(τ)} (d/ℓ(τ)) (ℓ(τ); stack counts) H+_{mτ}, one common power-of-2 multiplicity",
    DetEFromH => "DET_E_FROM_H": "E_{d^m} = (-1)^d det(H_{(1-i+j)^m})",
    DetHFromE => "DET_H_FROM_E": "H_{d^m} = (-1)^d det(E_{(1-i+j)^m})",
    DetEpFromHp => "DET_EP_FROM_HP": "E+_{d^m} = (-1)^d det(H+_{(1-i+j)^m})",
    DetHpFromEp => "DET_HP_FROM_EP": "H+_{d^m} = (-1)^d det(E+_{(1-i+j)^m})",
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_uppercase().replace('-', "_");
        IdentityId::ALL
            .iter()
            .copied()
            .find(|id| id.name() == key)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

/// Both sides of one instance, in the bases they are naturally written in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub id: IdentityId,
    pub d: u32,
    pub m: u32,
    pub lhs: PolyElement,
    pub rhs: PolyElement,
    pub equal: bool,
}

fn int(x: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(x.into())
}

fn sign(odd: bool) -> BigRational {
    if odd {
        -BigRational::one()
    } else {
        BigRational::one()
    }
}

/// `F_{k^m}` with `F_0 = 1`.
fn gen(tag: BasisTag, k: u32, m: u32) -> PolyElement {
    if k == 0 {
        PolyElement::one(tag)
    } else {
        PolyElement::singleton(tag, StackPartition::single(k, m).expect("positive"))
    }
}

fn sum_in(
    basis: BasisTag,
    parts: impl IntoIterator<Item = (PolyElement, BigRational)>,
) -> PolyElement {
    let mut out = PolyElement::zero(basis);
    for (x, c) in parts {
        let x = if x.basis() == basis { x } else { to_m(&x) };
        out.add_scaled(&x, &c).expect("summands share a basis");
    }
    out
}

fn ordinary(lambda: &Partition, m: u32) -> StackPartition {
    StackPartition::from_partition(lambda).scaled(m)
}

/// Sum over `τ` in a multiplicity pattern of `w(τ) F_{mτ}`.
fn pattern_sum<W>(
    d: u32,
    m: u32,
    pattern: MultiplicityPattern,
    tag: BasisTag,
    weight: W,
) -> PolyElement
where
    W: Fn(&StackPartition) -> BigRational,
{
    PolyElement::from_terms(
        tag,
        multiplicity_pattern(d, pattern).into_iter().map(|tau| {
            let w = weight(&tau);
            (tau.scaled(m), w)
        }),
    )
}

/// `(d/ℓ(λ)) · (ℓ(λ); multiplicities)`.
fn tabular_weight(d: u32, len: usize, arrangements: BigInt) -> BigRational {
    BigRational::new(BigInt::from(d) * arrangements, BigInt::from(len))
}

fn toeplitz_pair(
    lhs_tag: BasisTag,
    entry_tag: BasisTag,
    d: u32,
    m: u32,
) -> Result<(PolyElement, PolyElement)> {
    Ok((gen(lhs_tag, d, m), toeplitz_determinant(entry_tag, d, m)?))
}

fn split(
    lhs: BasisTag,
    doubled: BasisTag,
    rest: BasisTag,
    d: u32,
    m: u32,
) -> (PolyElement, PolyElement) {
    let rhs = sum_in(
        BasisTag::M,
        (0..=d / 2).map(|k| {
            (
                multiply(&gen(doubled, k, 2 * m), &gen(rest, d - 2 * k, m)),
                int(1),
            )
        }),
    );
    (gen(lhs, d, m), rhs)
}

fn power_pairs(d: u32, m: u32, sign_on_lambda: bool) -> PolyElement {
    let mut out = PolyElement::zero(BasisTag::P);
    for mu_weight in 0..=d / 2 {
        let lambda_weight = d - 2 * mu_weight;
        for lambda in enumerate_partitions(lambda_weight) {
            for mu in enumerate_partitions(mu_weight) {
                let odd = if sign_on_lambda {
                    lambda.len() % 2 == 1
                } else {
                    mu.len() % 2 == 1
                };
                let z = BigInt::from(lambda.z_value() * mu.z_value());
                let c = sign(odd) / BigRational::from_integer(z);
                out.add_term(ordinary(&lambda, m).union(&ordinary(&mu, 2 * m)), c);
            }
        }
    }
    out
}

/// Builds both sides of `id` at `(d, m)` and compares them in M.
pub fn evaluate_identity(id: IdentityId, d: u32, m: u32) -> Result<IdentityCheck> {
    use BasisTag::{EPlus, HPlus, E, H, M, P};
    use IdentityId::*;
    if d == 0 || m == 0 {
        return Err(Error::InvalidArgument(format!(
            "identity {id} needs d ≥ 1 and m ≥ 1, got d={d}, m={m}"
        )));
    }
    let inv_d = BigRational::new(BigInt::one(), BigInt::from(d));
    let (lhs, rhs) = match id {
        NewtonH | NewtonE => {
            let tag = if id == NewtonH { H } else { E };
            let scale = if id == NewtonH { inv_d } else { -inv_d };
            let rhs = sum_in(
                M,
                (1..=d).map(|i| (multiply(&gen(P, i, m), &gen(tag, d - i, m)), scale.clone())),
            );
            (gen(tag, d, m), rhs)
        }
        ConvHeZero => {
            let lhs = sum_in(
                M,
                (0..=d).map(|i| (multiply(&gen(H, i, m), &gen(E, d - i, m)), int(1))),
            );
            (lhs, PolyElement::zero(M))
        }
        PFromEh => {
            let rhs = sum_in(
                M,
                (0..d).map(|i| (multiply(&gen(E, i, m), &gen(H, d - i, m)), int(d - i))),
            );
            (gen(P, d, m), rhs)
        }
        SplitH => split(H, H, EPlus, d, m),
        SplitHp => split(HPlus, H, E, d, m),
        SplitE => split(E, E, HPlus, d, m),
        SplitEp => split(EPlus, E, H, d, m),
        KappaEpInE | KappaHpInH => {
            let (lhs, tag) = if id == KappaEpInE {
                (EPlus, E)
            } else {
                (HPlus, H)
            };
            let rhs = pattern_sum(d, m, MultiplicityPattern::AtMostOneMult2, tag, |tau| {
                int(tau.sign()) * int(tau.kappa())
            });
            (gen(lhs, d, m), rhs)
        }
        KappaEpInH | KappaHpInE => {
            let (lhs, tag) = if id == KappaEpInH {
                (EPlus, H)
            } else {
                (HPlus, E)
            };
            let rhs = pattern_sum(d, m, MultiplicityPattern::AtMostOneMult1Rest2, tag, |tau| {
                sign(tau.multiplicity_count(2) % 2 == 1) * int(tau.kappa())
            });
            (gen(lhs, d, m), rhs)
        }
        BinaryEInHp | BinaryHInEp => {
            let (lhs, tag) = if id == BinaryHInEp {
                (H, EPlus)
            } else {
                (E, HPlus)
            };
            let rhs = pattern_sum(d, m, MultiplicityPattern::DistinctPowersOf2, tag, |_| {
                int(1)
            });
            (gen(lhs, d, m), rhs)
        }
        Pow2EInEp | Pow2HInHp => {
            let (lhs, tag) = if id == Pow2EInEp {
                (E, EPlus)
            } else {
                (H, HPlus)
            };
            let rhs = pattern_sum(d, m, MultiplicityPattern::AllPowersOf2, tag, |tau| {
                sign(tau.len() % 2 == 1) * int(tau.kappa())
            });
            (gen(lhs, d, m), rhs)
        }
        PInH | PInE => {
            let tag = if id == PInH { H } else { E };
            let rhs = PolyElement::from_terms(
                tag,
                enumerate_partitions(d).into_iter().map(|lambda| {
                    let odd = (lambda.len() % 2 == 1) != (id == PInH);
                    let w = tabular_weight(d, lambda.len(), lambda.rearrangements().into());
                    (ordinary(&lambda, m), sign(odd) * w)
                }),
            );
            (gen(P, d, m), rhs)
        }
        HInP | EInP => {
            let tag = if id == HInP { H } else { E };
            let rhs = PolyElement::from_terms(
                P,
                enumerate_partitions(d).into_iter().map(|lambda| {
                    let odd = id == EInP && lambda.len() % 2 == 1;
                    let z = BigRational::from_integer(lambda.z_value().into());
                    (ordinary(&lambda, m), sign(odd) / z)
                }),
            );
            (gen(tag, d, m), rhs)
        }
        EpInP => (gen(EPlus, d, m), power_pairs(d, m, false)),
        HpInP => (gen(HPlus, d, m), power_pairs(d, m, true)),
        PInEp | PInHp => {
            let tag = if id == PInEp { EPlus } else { HPlus };
            let rhs = pattern_sum(d, m, MultiplicityPattern::UniformPowerOf2, tag, |tau| {
                let odd = (tau.len() % 2 == 1) != (id == PInEp);
                sign(odd) * tabular_weight(d, tau.len(), tau.rearrangements().into())
            });
            (gen(P, d, m), rhs)
        }
        DetEFromH => toeplitz_pair(E, H, d, m)?,
        DetHFromE => toeplitz_pair(H, E, d, m)?,
        DetEpFromHp => toeplitz_pair(EPlus, HPlus, d, m)?,
        DetHpFromEp => toeplitz_pair(HPlus, EPlus, d, m)?,
    };
    let equal = to_m(&lhs) == to_m(&rhs);
    Ok(IdentityCheck {
        id,
        d,
        m,
        lhs,
        rhs,
        equal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_parse() {
        assert_eq!(IdentityId::ALL.len(), 28);
        for &id in IdentityId::ALL {
            assert_eq!(id.name().parse::<IdentityId>().unwrap(), id);
        }
        assert!(matches!(
            "NOPE".parse::<IdentityId>(),
            Err(Error::UnknownIdentity(_))
        ));
    }

    #[test]
    fn power_two_in_unsigned_elementary() {
        let check = evaluate_identity(IdentityId::PInEp, 2, 1).unwrap();
        assert!(check.equal);
        assert_eq!(check.lhs.to_string(), "1*P[2]");
        assert_eq!(check.rhs.to_string(), "2*E+[2] + -1*E+[1 1] + 2*E+[1^2]");
    }

    #[test]
    fn unsigned_elementary_two_in_powers() {
        let check = evaluate_identity(IdentityId::EpInP, 2, 1).unwrap();
        assert!(check.equal);
        assert_eq!(check.rhs.to_string(), "1/2*P[2] + 1/2*P[1 1] + -1*P[1^2]");
    }

    #[test]
    fn newton_in_degree_one() {
        let check = evaluate_identity(IdentityId::NewtonH, 1, 1).unwrap();
        assert!(check.equal);
        assert_eq!(to_m(&check.rhs).to_string(), "1*M[1]");
    }

    #[test]
    fn all_identities_in_low_degree() {
        for &id in IdentityId::ALL {
            for d in 1..=4 {
                for m in 1..=2 {
                    assert!(
                        evaluate_identity(id, d, m).unwrap().equal,
                        "{id} d={d} m={m}"
                    );
                }
            }
        }
    }

    #[test]
    fn rejects_zero_degree() {
        assert!(evaluate_identity(IdentityId::SplitH, 0, 1).is_err());
    }
}
